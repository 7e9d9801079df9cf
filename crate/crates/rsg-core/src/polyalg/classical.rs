//! Bernoulli and Hermite polynomials, Bernoulli numbers, and exact
//! factorial/binomial helpers.

use std::sync::Mutex;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::gauss::GaussRational;
use super::poly::UniPoly;

pub fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n as u64 {
        acc *= k;
    }
    acc
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k as u64 {
        acc = acc * (n as u64 - j) / (j + 1);
    }
    acc
}

static BERNOULLI: OnceLock<Mutex<Vec<BigRational>>> = OnceLock::new();

/// Bernoulli number `B_n` (B_1 = -1/2 convention), exact and cached.
pub fn bernoulli_number(n: u32) -> BigRational {
    let cache = BERNOULLI.get_or_init(|| Mutex::new(vec![BigRational::one()]));
    let mut cache = cache.lock().expect("bernoulli cache");
    while cache.len() <= n as usize {
        let m = cache.len() as u32;
        // sum_{j=0}^{m} C(m+1, j) B_j = 0
        let mut s = BigRational::zero();
        for (j, b) in cache.iter().enumerate() {
            s += BigRational::from_integer(binomial(m + 1, j as u32)) * b;
        }
        let next = -s / BigRational::from_integer(BigInt::from(m as i64 + 1));
        cache.push(next);
    }
    cache[n as usize].clone()
}

/// Bernoulli polynomial `B_n(x)` with exact rational coefficients,
/// from `B_n(x) = sum_k C(n,k) B_{n-k} x^k`.
pub fn bernoulli_poly(n: u32) -> UniPoly {
    let mut coeffs = Vec::with_capacity(n as usize + 1);
    for k in 0..=n {
        let c = BigRational::from_integer(binomial(n, k)) * bernoulli_number(n - k);
        coeffs.push(GaussRational::from_rational(c));
    }
    UniPoly::from_coeffs(coeffs)
}

/// Hermite polynomial `H_n(x)` (physicists' convention),
/// `H_n(x) = n! sum_j (-1)^j (2x)^{n-2j} / (j! (n-2j)!)`.
pub fn hermite_poly(n: u32) -> UniPoly {
    let nf = factorial(n);
    let mut coeffs = vec![GaussRational::zero(); n as usize + 1];
    for j in 0..=(n / 2) {
        let d = (n - 2 * j) as usize;
        let mut num = nf.clone() * BigInt::from(2).pow(d as u32);
        if j % 2 == 1 {
            num = -num;
        }
        let den = factorial(j) * factorial(n - 2 * j);
        coeffs[d] = GaussRational::from_rational(BigRational::new(num, den));
    }
    UniPoly::from_coeffs(coeffs)
}
