//! Truncated Taylor series over WideComplex, for symbolic differentiation of
//! closed forms built from exponentials of quadratics.

use crate::numkernel::{PrecisionConfig, WideComplex};

/// Coefficients about a fixed expansion point, ascending order, fixed length.
#[derive(Clone)]
pub struct Taylor {
    pub c: Vec<WideComplex>,
}

impl Taylor {
    pub fn zero(len: usize, cfg: &PrecisionConfig) -> Self {
        Taylor { c: vec![cfg.complex_i64(0, 0); len] }
    }

    pub fn len(&self) -> usize {
        self.c.len()
    }

    pub fn add(&self, rhs: &Taylor) -> Taylor {
        let mut out = self.clone();
        for (a, b) in out.c.iter_mut().zip(rhs.c.iter()) {
            *a = &*a + b;
        }
        out
    }

    pub fn scale(&self, s: &WideComplex) -> Taylor {
        Taylor { c: self.c.iter().map(|a| a * s).collect() }
    }

    /// Series of `exp(b v + a v^2)` to the length of the receiver template.
    /// Uses the recurrence f' = (b + 2 a v) f.
    pub fn exp_quadratic(b: &WideComplex, a: &WideComplex, len: usize, cfg: &PrecisionConfig) -> Taylor {
        let mut c = Vec::with_capacity(len);
        c.push(cfg.complex_i64(1, 0));
        for j in 1..len {
            // j f_j = b f_{j-1} + 2 a f_{j-2}
            let mut v = b * &c[j - 1];
            if j >= 2 {
                v = &v + &(a * &c[j - 2]).scale(&cfg.real_i64(2));
            }
            c.push(v.scale(&(cfg.real_i64(1) / cfg.real_i64(j as i64))));
        }
        Taylor { c }
    }

    /// Series division; the divisor's constant term must be well away from 0.
    pub fn div(&self, den: &Taylor, cfg: &PrecisionConfig) -> Taylor {
        let len = self.len().min(den.len());
        let d0 = den.c[0].clone();
        let mut q: Vec<WideComplex> = Vec::with_capacity(len);
        for j in 0..len {
            let mut acc = self.c[j].clone();
            for (i, qi) in q.iter().enumerate() {
                acc = &acc - &(qi * &den.c[j - i]);
            }
            q.push(&acc / &d0);
        }
        let _ = cfg;
        Taylor { c: q }
    }

    /// Drop the constant term and shift down one order (deflation at a
    /// common simple zero of numerator and denominator).
    pub fn deflate(&self) -> Taylor {
        Taylor { c: self.c[1..].to_vec() }
    }

    /// `k! c_k`, the k-th derivative at the expansion point.
    pub fn derivative(&self, k: usize, cfg: &PrecisionConfig) -> WideComplex {
        let f = crate::polyalg::factorial(k as u32);
        self.c[k].scale(&cfg.real_bigint(&f))
    }

    /// k-th derivative evaluated a small step `delta` away from the
    /// expansion point: `sum_{j>=k} c_j j!/(j-k)! delta^{j-k}`.
    pub fn derivative_at(&self, k: usize, delta: &WideComplex, cfg: &PrecisionConfig) -> WideComplex {
        let mut acc = cfg.complex_i64(0, 0);
        let mut pw = cfg.complex_i64(1, 0);
        for j in k..self.len() {
            let falling = crate::polyalg::factorial(j as u32)
                / crate::polyalg::factorial((j - k) as u32);
            acc = &acc + &(&self.c[j] * &pw).scale(&cfg.real_bigint(&falling));
            pw = &pw * delta;
        }
        acc
    }
}
