//! Exact univariate and sparse bivariate polynomials over Q(i).

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::gauss::GaussRational;
use crate::numkernel::{PrecisionConfig, WideComplex};

/// Dense univariate polynomial, coefficients ascending by degree.
/// The zero polynomial is the empty coefficient list.
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<GaussRational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: GaussRational) -> Self {
        let mut p = UniPoly { coeffs: vec![c] };
        p.normalize();
        p
    }

    pub fn one() -> Self {
        Self::constant(GaussRational::one())
    }

    /// Monomial `c x^d`.
    pub fn monomial(c: GaussRational, d: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![GaussRational::zero(); d + 1];
        coeffs[d] = c;
        UniPoly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<GaussRational>) -> Self {
        let mut p = UniPoly { coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, d: usize) -> GaussRational {
        self.coeffs.get(d).cloned().unwrap_or_else(GaussRational::zero)
    }

    pub fn coeffs(&self) -> &[GaussRational] {
        &self.coeffs
    }

    pub fn add(&self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(&self.coeff(k) + &rhs.coeff(k));
        }
        UniPoly::from_coeffs(out)
    }

    pub fn sub(&self, rhs: &UniPoly) -> UniPoly {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![GaussRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        UniPoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &GaussRational) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Substitute `x -> -x`.
    pub fn substitute_neg(&self) -> UniPoly {
        UniPoly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// Conjugate all coefficients.
    pub fn conj_coeffs(&self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| c.conj()).collect() }
    }

    /// Compose with the linear map `x -> c x + d`, exactly.
    pub fn compose_linear(&self, c: &GaussRational, d: &GaussRational) -> UniPoly {
        let lin = UniPoly::from_coeffs(vec![d.clone(), c.clone()]);
        let mut acc = UniPoly::zero();
        for a in self.coeffs.iter().rev() {
            acc = acc.mul(&lin);
            acc = acc.add(&UniPoly::constant(a.clone()));
        }
        acc
    }

    /// Exact evaluation at a rational point.
    pub fn eval_rational(&self, x: &BigRational) -> GaussRational {
        let mut acc = GaussRational::zero();
        let xg = GaussRational::from_rational(x.clone());
        for a in self.coeffs.iter().rev() {
            acc = &(&acc * &xg) + a;
        }
        acc
    }

    /// Exact evaluation at a Gaussian-rational point.
    pub fn eval_gauss(&self, x: &GaussRational) -> GaussRational {
        let mut acc = GaussRational::zero();
        for a in self.coeffs.iter().rev() {
            acc = &(&acc * x) + a;
        }
        acc
    }

    /// Numeric evaluation by Horner's rule.
    pub fn eval_complex(&self, x: &WideComplex, cfg: &PrecisionConfig) -> WideComplex {
        let mut acc = cfg.complex_i64(0, 0);
        for a in self.coeffs.iter().rev() {
            acc = &(&acc * x) + &a.to_complex(cfg);
        }
        acc
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("({:?})x^{}", c, k))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Sparse bivariate polynomial in `(x, sigma)` over Q(i).
/// No zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), GaussRational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly { terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &GaussRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, x_deg: u32, s_deg: u32) -> GaussRational {
        self.terms.get(&(x_deg, s_deg)).cloned().unwrap_or_else(GaussRational::zero)
    }

    pub fn add_term(&mut self, x_deg: u32, s_deg: u32, c: &GaussRational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((x_deg, s_deg)).or_insert_with(GaussRational::zero);
        *e = &*e + c;
        if e.is_zero() {
            self.terms.remove(&(x_deg, s_deg));
        }
    }

    pub fn add(&self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), c) in rhs.terms.iter() {
            out.add_term(i, j, c);
        }
        out
    }

    pub fn sub(&self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), c) in rhs.terms.iter() {
            out.add_term(i, j, &(-c));
        }
        out
    }

    pub fn scale(&self, c: &GaussRational) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero();
        }
        let mut out = BiPoly::zero();
        for (&(i, j), a) in self.terms.iter() {
            out.add_term(i, j, &(a * c));
        }
        out
    }

    /// Embed a polynomial in sigma alone (x-degree zero).
    pub fn from_sigma_poly(p: &UniPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (k, c) in p.coeffs().iter().enumerate() {
            out.add_term(0, k as u32, c);
        }
        out
    }

    /// Multiply by the monomial `c x^j`.
    pub fn mul_x_monomial(&self, c: &GaussRational, j: u32) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(a, b), v) in self.terms.iter() {
            out.add_term(a + j, b, &(v * c));
        }
        out
    }

    /// Maximum degree in x.
    pub fn x_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    /// The coefficient of `x^j` as a polynomial in sigma.
    pub fn sigma_slice(&self, j: u32) -> UniPoly {
        let max_s = self
            .terms
            .keys()
            .filter(|&&(i, _)| i == j)
            .map(|&(_, k)| k)
            .max();
        match max_s {
            None => UniPoly::zero(),
            Some(m) => {
                let mut coeffs = vec![GaussRational::zero(); m as usize + 1];
                for (&(i, k), c) in self.terms.iter() {
                    if i == j {
                        coeffs[k as usize] = c.clone();
                    }
                }
                UniPoly::from_coeffs(coeffs)
            }
        }
    }

    /// Apply `(x, sigma) -> (-x, 1 - sigma)` and conjugate the coefficients.
    /// This is the transformation of the functional-equation identity.
    pub fn fe_transform(&self) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i, j), c) in self.terms.iter() {
            // (-x)^i and (1 - sigma)^j expanded binomially
            let mut base = c.conj();
            if i % 2 == 1 {
                base = -&base;
            }
            let mut binom = BigInt::from(1);
            for k in 0..=j {
                // C(j, k) (-sigma)^k
                let mut coef = GaussRational::from_rational(BigRational::from_integer(binom.clone()));
                if k % 2 == 1 {
                    coef = -&coef;
                }
                out.add_term(i, k, &(&base * &coef));
                if k < j {
                    binom = binom * BigInt::from((j - k) as i64) / BigInt::from((k + 1) as i64);
                }
            }
        }
        out
    }

    /// Specialize sigma to an exact rational, leaving a polynomial in x.
    pub fn at_sigma(&self, sigma: &BigRational) -> UniPoly {
        let max_x = match self.x_degree() {
            None => return UniPoly::zero(),
            Some(m) => m,
        };
        let mut coeffs = vec![GaussRational::zero(); max_x as usize + 1];
        for (&(i, j), c) in self.terms.iter() {
            let mut sp = GaussRational::one();
            for _ in 0..j {
                sp = &sp * &GaussRational::from_rational(sigma.clone());
            }
            coeffs[i as usize] = &coeffs[i as usize] + &(c * &sp);
        }
        UniPoly::from_coeffs(coeffs)
    }

    /// Numeric evaluation at `(x, sigma)`.
    pub fn eval_complex(
        &self,
        x: &WideComplex,
        sigma: &WideComplex,
        cfg: &PrecisionConfig,
    ) -> WideComplex {
        // Horner in x over sigma-slices
        let max_x = match self.x_degree() {
            None => return cfg.complex_i64(0, 0),
            Some(m) => m,
        };
        let mut acc = cfg.complex_i64(0, 0);
        for j in (0..=max_x).rev() {
            acc = &acc * x;
            let slice = self.sigma_slice(j);
            if !slice.is_zero() {
                acc = &acc + &slice.eval_complex(sigma, cfg);
            }
        }
        acc
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .terms
            .iter()
            .map(|(&(i, j), c)| format!("({:?})x^{}s^{}", c, i, j))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Textual serialization shared by the CLI dump and the golden-file tests:
/// one monomial per entry, ascending `(x, sigma)` degrees, exact rationals.
pub fn serialize_bipoly(p: &BiPoly) -> String {
    if p.is_zero() {
        return "0/1+0/1i * x^0 * sigma^0".to_string();
    }
    p.terms()
        .map(|(&(i, j), c)| format!("{} * x^{} * sigma^{}", c, i, j))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Serialization of a polynomial in sigma alone.
pub fn serialize_sigma_poly(p: &UniPoly) -> String {
    serialize_bipoly(&BiPoly::from_sigma_poly(p))
}

/// Serialization of a polynomial in x alone.
pub fn serialize_x_poly(p: &UniPoly) -> String {
    let mut out = BiPoly::zero();
    for (k, c) in p.coeffs().iter().enumerate() {
        out.add_term(k as u32, 0, c);
    }
    serialize_bipoly(&out)
}
