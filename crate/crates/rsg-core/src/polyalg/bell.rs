//! Partial ordinary Bell polynomials.
//!
//! `Bhat[i, j]` is the coefficient of `x^i` in `(p_1 x + p_2 x^2 + ...)^j`.
//! Values are computed by the convolution recurrence
//! `Bhat[i, j] = sum_m p_m Bhat[i-m, j-1]` and memoized per table. The same
//! code path serves scalar sequences (rationals) and polynomial sequences.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::Zero;

use super::gauss::GaussRational;
use super::poly::UniPoly;

/// Minimal ring interface needed by the Bell recurrence.
pub trait BellRing: Clone {
    fn ring_zero() -> Self;
    fn ring_one() -> Self;
    fn ring_add(&self, rhs: &Self) -> Self;
    fn ring_mul(&self, rhs: &Self) -> Self;
}

impl BellRing for BigRational {
    fn ring_zero() -> Self {
        BigRational::zero()
    }
    fn ring_one() -> Self {
        BigRational::from_integer(1.into())
    }
    fn ring_add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn ring_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

impl BellRing for GaussRational {
    fn ring_zero() -> Self {
        GaussRational::zero()
    }
    fn ring_one() -> Self {
        GaussRational::one()
    }
    fn ring_add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn ring_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

impl BellRing for UniPoly {
    fn ring_zero() -> Self {
        UniPoly::zero()
    }
    fn ring_one() -> Self {
        UniPoly::one()
    }
    fn ring_add(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn ring_mul(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
}

/// Memoized table of partial ordinary Bell values over one input sequence.
pub struct BellTable<T: BellRing> {
    seq: Box<dyn Fn(u32) -> T>,
    entries: Vec<T>, // entries[m-1] = p_m
    memo: HashMap<(u32, u32), T>,
}

impl<T: BellRing> BellTable<T> {
    /// `seq(m)` supplies `p_m` for `m >= 1`.
    pub fn new(seq: impl Fn(u32) -> T + 'static) -> Self {
        BellTable { seq: Box::new(seq), entries: Vec::new(), memo: HashMap::new() }
    }

    fn entry(&mut self, m: u32) -> T {
        while self.entries.len() < m as usize {
            let next = (self.seq)(self.entries.len() as u32 + 1);
            self.entries.push(next);
        }
        self.entries[m as usize - 1].clone()
    }

    /// `Bhat[i, j]`, memoized.
    pub fn value(&mut self, i: u32, j: u32) -> T {
        if let Some(v) = self.memo.get(&(i, j)) {
            return v.clone();
        }
        let v = if j == 0 {
            if i == 0 {
                T::ring_one()
            } else {
                T::ring_zero()
            }
        } else if i < j {
            T::ring_zero()
        } else {
            let mut acc = T::ring_zero();
            for m in 1..=(i - j + 1) {
                let p = self.entry(m);
                let b = self.value(i - m, j - 1);
                acc = acc.ring_add(&p.ring_mul(&b));
            }
            acc
        };
        self.memo.insert((i, j), v.clone());
        v
    }
}

/// One-shot `Bhat[i, j]` over an explicit finite sequence `p_1, ..., p_r`.
/// The sequence must supply at least `i - j + 1` entries when `j >= 1`;
/// missing entries are taken as zero (finite-series convention).
pub fn bell_partial_ordinary<T: BellRing + 'static>(i: u32, j: u32, p: &[T]) -> T {
    let owned: Vec<T> = p.to_vec();
    let mut table = BellTable::new(move |m| {
        owned.get(m as usize - 1).cloned().unwrap_or_else(T::ring_zero)
    });
    table.value(i, j)
}
