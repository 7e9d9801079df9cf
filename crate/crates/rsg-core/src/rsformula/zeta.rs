//! Euler-Maclaurin reference evaluation of zeta, the independent oracle
//! behind the exact remainder.

use crate::error::{Error, Result};
use crate::numkernel::{PrecisionConfig, WideComplex, WideReal};
use crate::polyalg::bernoulli_number;

/// Compensated (Kahan) accumulation of complex terms in a fixed order.
pub(crate) struct CompensatedSum {
    s: WideComplex,
    c: WideComplex,
}

impl CompensatedSum {
    pub fn new(cfg: &PrecisionConfig) -> Self {
        CompensatedSum { s: cfg.complex_i64(0, 0), c: cfg.complex_i64(0, 0) }
    }

    pub fn add(&mut self, x: &WideComplex) {
        let y = x - &self.c;
        let t = &self.s + &y;
        self.c = &(&t - &self.s) - &y;
        self.s = t;
    }

    pub fn value(self) -> WideComplex {
        self.s
    }
}

/// `sum_{n <= limit} n^{-s}`; the empty sum is 0.
pub fn partial_sum(s: &WideComplex, limit: &WideReal, cfg: &PrecisionConfig) -> Result<WideComplex> {
    if limit.is_negative() {
        return Err(Error::InvalidArgument("partial_sum requires limit >= 0".into()));
    }
    let n_max = limit.floor_i64()?;
    let mut acc = CompensatedSum::new(cfg);
    for n in 1..=n_max {
        let ln_n = cfg.real_i64(n).ln();
        let term = (-(s * &WideComplex::from_real(ln_n))).exp();
        acc.add(&term);
    }
    Ok(acc.value())
}

fn zeta_positive_t(s: &WideComplex, cfg: &PrecisionConfig) -> Result<WideComplex> {
    let one = cfg.complex_i64(1, 0);
    let t_abs = s.im.abs().to_f64();
    let mut m = (t_abs / 2.0).ceil().max(10.0 * cfg.digits() as f64).max(50.0) as i64;
    let eps = cfg.pow10(-(cfg.digits() as i64 + 8));
    for _attempt in 0..4 {
        let m_c = cfg.complex_i64(m, 0);
        let ln_m = cfg.real_i64(m).ln();
        let mut acc = CompensatedSum::new(cfg);
        for n in 1..m {
            let ln_n = cfg.real_i64(n).ln();
            acc.add(&(-(s * &WideComplex::from_real(ln_n))).exp());
        }
        let mut tot = acc.value();
        // M^{1-s}/(s-1) + M^{-s}/2
        let m_pow = |w: &WideComplex| (w * &WideComplex::from_real(ln_m.clone())).exp();
        tot = &tot + &(&m_pow(&(&one - s)) / &(s - &one));
        let m_minus_s = m_pow(&(-s));
        tot = &tot + &m_minus_s.scale(&(cfg.real_i64(1) / cfg.real_i64(2)));
        // Bernoulli tail: sum_j B_{2j}/(2j)! s(s+1)...(s+2j-2) M^{1-s-2j}
        let m_inv2 = (&one / &m_c).powi(2);
        let mut m_factor = &m_minus_s * &(&m_c / &m_c.powi(2)); // M^{-s-1}
        let mut poch = s.clone(); // s ... (s + 2j - 2), starts at j=1 as just s
        let mut fact = cfg.real_i64(2); // (2j)! running
        let mut prev_mag: Option<WideReal> = None;
        let mut converged = false;
        let mut tail = CompensatedSum::new(cfg);
        for j in 1u32..=220 {
            let b = cfg.real_rational(&bernoulli_number(2 * j));
            let term = (&poch * &m_factor).scale(&(&b / &fact));
            let mag = term.abs();
            tail.add(&term);
            let scale = tot.abs() + cfg.real_i64(1);
            if mag < &eps * &scale {
                converged = true;
                break;
            }
            if let Some(p) = &prev_mag {
                if mag > p + p {
                    break; // diverging tail: M too small
                }
            }
            prev_mag = Some(mag);
            // advance to j+1
            poch = &poch * &(&(s + &cfg.complex_i64(2 * j as i64 - 1, 0))
                * &(s + &cfg.complex_i64(2 * j as i64, 0)));
            fact = &fact * &cfg.real_i64((2 * j as i64 + 1) * (2 * j as i64 + 2));
            m_factor = &m_factor * &m_inv2;
        }
        if converged {
            return Ok(&tot + &tail.value());
        }
        m *= 2;
    }
    Err(Error::Domain("Euler-Maclaurin tail failed to converge".into()))
}

/// Reference zeta by Euler-Maclaurin summation. Relative error at most
/// `10^{8-digits}` on `sigma in [-3, 3]`, `|t| <= 2000`.
pub fn zeta_reference(s: &WideComplex, cfg: &PrecisionConfig) -> Result<WideComplex> {
    if s.im.is_zero() && s.re == cfg.real_i64(1) {
        return Err(Error::Pole("zeta has its pole at s = 1".into()));
    }
    if s.im.is_negative() {
        return Ok(zeta_positive_t(&s.conj(), cfg)?.conj());
    }
    zeta_positive_t(s, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::chi;

    fn cfg() -> PrecisionConfig {
        PrecisionConfig::new(40).unwrap()
    }

    #[test]
    fn empty_and_small_partial_sums() {
        let cfg = cfg();
        let s = cfg.complex_i64(2, 0);
        let v = partial_sum(&s, &cfg.real_str("0.5").unwrap(), &cfg).unwrap();
        assert!(v.is_zero());
        let v = partial_sum(&s, &cfg.real_i64(3), &cfg).unwrap();
        let expect = cfg.real_str("49").unwrap() / cfg.real_str("36").unwrap();
        assert!((&v.re - &expect).abs() < cfg.pow10(-38));
        assert!(v.im.abs() < cfg.pow10(-45));
    }

    #[test]
    fn partial_sum_term_count() {
        // limit = 30/sqrt(pi) = 16.926... picks up exactly 16 terms
        let cfg = cfg();
        let s = cfg.complex(cfg.real_str("0.5").unwrap(), cfg.real_i64(600));
        let limit = cfg.real_i64(30) / cfg.pi().sqrt();
        let v = partial_sum(&s, &limit, &cfg).unwrap();
        let mut expect = cfg.complex_i64(0, 0);
        for n in 1..=16 {
            expect = &expect + &(-(&s * &WideComplex::from_real(cfg.real_i64(n).ln()))).exp();
        }
        assert!((&v - &expect).abs() < cfg.pow10(-40));
    }

    #[test]
    fn zeta_known_values() {
        let cfg = cfg();
        let v = zeta_reference(&cfg.complex_i64(2, 0), &cfg).unwrap();
        let expect = &(&cfg.pi() * &cfg.pi()) / &cfg.real_i64(6);
        assert!((&v.re - &expect).abs() < cfg.pow10(-35), "zeta(2) = {v}");
        let v = zeta_reference(&cfg.complex_i64(0, 0), &cfg).unwrap();
        let expect = cfg.real_str("-0.5").unwrap();
        assert!((&v.re - &expect).abs() < cfg.pow10(-35), "zeta(0) = {v}");
        assert!(matches!(
            zeta_reference(&cfg.complex_i64(1, 0), &cfg),
            Err(Error::Pole(_))
        ));
    }

    #[test]
    fn functional_equation_self_check() {
        let cfg = cfg();
        let s = cfg.complex(cfg.real_str("0.3").unwrap(), cfg.real_i64(100));
        let lhs = zeta_reference(&s, &cfg).unwrap();
        let rhs = &chi(&s, &cfg).unwrap()
            * &zeta_reference(&(&cfg.complex_i64(1, 0) - &s), &cfg).unwrap();
        let rel = (&lhs - &rhs).abs() / lhs.abs();
        assert!(rel < cfg.pow10(8 - cfg.digits() as i64), "rel = {rel}");
    }

    #[test]
    fn conjugate_symmetry() {
        let cfg = cfg();
        let s = cfg.complex(cfg.real_str("0.5").unwrap(), cfg.real_i64(-50));
        let a = zeta_reference(&s, &cfg).unwrap();
        let b = zeta_reference(&s.conj(), &cfg).unwrap().conj();
        assert!((&a - &b).abs() < cfg.pow10(-35));
    }
}
