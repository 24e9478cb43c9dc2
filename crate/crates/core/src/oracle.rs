//! Independent reference routes used to cross-check the main algorithms.
//! Nothing here calls into the code paths it is compared against.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::clifford::Blade;

/// `e_a e_b` by rewriting the generator word: swap out-of-order neighbours
/// (`e_j e_i = -e_i e_j`) and contract equal neighbours (`e_i e_i = -1`).
pub fn naive_blade_product(a: Blade, b: Blade) -> (i8, Blade) {
    let mut word: Vec<usize> = a.indices();
    word.extend(b.indices());
    let mut sign = 1i8;
    let mut i = 0;
    while i + 1 < word.len() {
        if word[i] > word[i + 1] {
            word.swap(i, i + 1);
            sign = -sign;
            i = i.saturating_sub(1);
        } else if word[i] == word[i + 1] {
            word.drain(i..i + 2);
            sign = -sign;
            i = i.saturating_sub(1);
        } else {
            i += 1;
        }
    }
    let bits = word.iter().fold(0u16, |acc, i| acc | 1 << (i - 1));
    (sign, Blade::from_bits(bits))
}

/// Coefficients (ascending powers) of the 1-D probabilists' Hermite
/// polynomial via `H_{k+1}(t) = t H_k(t) − k H_{k−1}(t)`.
pub fn hermite_1d(k: u32) -> Vec<BigInt> {
    let mut prev = vec![BigInt::from(1)];
    if k == 0 {
        return prev;
    }
    let mut cur = vec![BigInt::from(0), BigInt::from(1)];
    for j in 1..k {
        let mut next = vec![BigInt::from(0); cur.len() + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] += c;
        }
        for (i, c) in prev.iter().enumerate() {
            next[i] -= c * j;
        }
        prev = cur;
        cur = next;
    }
    cur
}

/// 1-D Gaussian moment by integration by parts:
/// `E t^k = (k − 1) v E t^{k−2}`.
pub fn moment_1d(k: u32, variance: &BigRational) -> BigRational {
    let mut acc = if k % 2 == 0 { BigRational::from_integer(1.into()) } else { return BigRational::from_integer(0.into()) };
    let mut j = k;
    while j >= 2 {
        acc *= BigRational::from_integer((j - 1).into()) * variance;
        j -= 2;
    }
    acc
}
