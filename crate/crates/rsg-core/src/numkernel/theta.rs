//! The chi factor of the functional equation and the Riemann-Siegel theta
//! function, exact and asymptotic.

use crate::coeffs;
use crate::error::{Error, Result};
use crate::numkernel::gamma::log_gamma;
use crate::numkernel::wide::{PrecisionConfig, WideComplex, WideReal};
use crate::polyalg::bernoulli_poly;

fn on_excluded_rays(s: &WideComplex, cfg: &PrecisionConfig) -> bool {
    s.im.is_zero() && (!s.re.is_positive() || s.re >= cfg.real_i64(1))
}

/// `theta(s) = (i/2) log chi(s)` with the branch fixed by `theta(1/2) = 0`,
/// computed from `-2i theta(s) = (s - 1/2) log pi + log Gamma((1-s)/2) - log Gamma(s/2)`
/// so the branch is automatic by continuity of principal log-gamma.
pub fn theta_exact(s: &WideComplex, cfg: &PrecisionConfig) -> Result<WideComplex> {
    if on_excluded_rays(s, cfg) {
        return Err(Error::Domain(
            "theta is defined off the real intervals (-inf, 0] and [1, inf)".into(),
        ));
    }
    let half = cfg.complex(cfg.real_str("0.5").expect("const"), cfg.real_i64(0));
    let one = cfg.complex_i64(1, 0);
    let x = &(&(s - &half) * &WideComplex::from_real(cfg.pi().ln()))
        + &(&log_gamma(&(&(&one - s) * &half), cfg)? - &log_gamma(&(s * &half), cfg)?);
    // theta = x / (-2i) = (i/2) x
    Ok(x.mul_i().scale(&cfg.real_str("0.5").expect("const")))
}

/// `chi(s) = pi^{s-1/2} Gamma((1-s)/2) / Gamma(s/2) = exp(-2i theta(s))`.
/// On the real rays excluded from the log path, finite values are obtained
/// through the reflection formula; poles and exact zeros are reported as such.
pub fn chi(s: &WideComplex, cfg: &PrecisionConfig) -> Result<WideComplex> {
    if !on_excluded_rays(s, cfg) {
        let th = theta_exact(s, cfg)?;
        return Ok((-th.mul_i().scale(&cfg.real_i64(2))).exp());
    }
    let x = &s.re; // real s from here on
    let pi = cfg.pi();
    let half = cfg.real_str("0.5").expect("const");
    if *x >= cfg.real_i64(1) {
        // chi(s) = pi^{s+1/2} / (sin(pi(1-s)/2) Gamma((1+s)/2) Gamma(s/2))
        if x.floor() == *x && x.floor_i64()?.rem_euclid(2) == 1 {
            return Err(Error::Pole(format!("chi has a pole at s = {x}")));
        }
        let sinv = (&pi * &(&(cfg.real_i64(1) - x) / &cfg.real_i64(2))).sin();
        let lg1 = log_gamma(&WideComplex::from_real(&(cfg.real_i64(1) + x) / &cfg.real_i64(2)), cfg)?;
        let lg2 = log_gamma(&WideComplex::from_real(x / &cfg.real_i64(2)), cfg)?;
        let ln_pi = pi.ln();
        let v = (&WideComplex::from_real(&ln_pi * &(x + &half)) - &(&lg1 + &lg2)).exp();
        return Ok(WideComplex::new(&v.re / &sinv, &v.im / &sinv));
    }
    // s <= 0: chi(s) = pi^{s-3/2} Gamma((1-s)/2) sin(pi s/2) Gamma(1 - s/2)
    if x.floor() == *x && x.floor_i64()?.rem_euclid(2) == 0 {
        // trivial zero of 1/Gamma(s/2) at nonpositive even integers
        return Ok(cfg.complex_i64(0, 0));
    }
    let sinv = (&pi * &(x / &cfg.real_i64(2))).sin();
    let lg1 = log_gamma(&WideComplex::from_real(&(cfg.real_i64(1) - x) / &cfg.real_i64(2)), cfg)?;
    let lg2 = log_gamma(&WideComplex::from_real(cfg.real_i64(1) - &(x / &cfg.real_i64(2))), cfg)?;
    let ln_pi = pi.ln();
    let exp_part =
        (&WideComplex::from_real(&ln_pi * &(x - &(cfg.real_i64(3) * &half))) + &(&lg1 + &lg2)).exp();
    Ok(exp_part.scale(&sinv))
}

/// Truncated expansion of theta from the log-gamma strip asymptotics:
/// `i theta(s) ~ (s/2 - 1/4) log(|t|/2pi) - it/2 - sgn(t) i pi/8 - sum (2i/t)^n f_n(sigma)`.
pub fn theta_asymptotic(s: &WideComplex, n_order: u32, cfg: &PrecisionConfig) -> Result<WideComplex> {
    if s.im.is_zero() {
        return Err(Error::InvalidArgument("theta_asymptotic requires t != 0".into()));
    }
    let t = &s.im;
    let quarter = cfg.real_str("0.25").expect("const");
    let sgn = if t.is_negative() { cfg.real_i64(-1) } else { cfg.real_i64(1) };
    let log_term = (t.abs() / cfg.two_pi()).ln();
    let mut acc = (&s.scale(&cfg.real_str("0.5").expect("const"))
        - &cfg.complex(quarter.clone(), cfg.real_i64(0)))
    .scale(&log_term);
    acc = &acc - &cfg.complex(cfg.real_i64(0), t / &cfg.real_i64(2));
    acc = &acc - &cfg.complex(cfg.real_i64(0), &(&sgn * &cfg.pi()) / &cfg.real_i64(8));
    let sigma = WideComplex::from_real(s.re.clone());
    let two_i_over_t = cfg.complex(cfg.real_i64(0), cfg.real_i64(2) / t);
    let mut pw = two_i_over_t.clone();
    for n in 1..n_order {
        let f = coeffs::f_poly(n)?.eval_complex(&sigma, cfg);
        acc = &acc - &(&pw * &f);
        pw = &pw * &two_i_over_t;
    }
    // acc approximates i theta, so theta = -i acc
    Ok(-acc.mul_i())
}

/// Critical-line specialization: real-valued expansion of `theta(1/2 + it)`.
pub fn theta_critical_asymptotic(t: &WideReal, n_order: u32, cfg: &PrecisionConfig) -> Result<WideReal> {
    if t.is_zero() {
        return Err(Error::InvalidArgument("theta asymptotics require t != 0".into()));
    }
    let sgn = if t.is_negative() { cfg.real_i64(-1) } else { cfg.real_i64(1) };
    let mut acc = &(t / &cfg.real_i64(2)) * &(t.abs() / cfg.two_pi()).ln();
    acc = &acc - &(t / &cfg.real_i64(2));
    acc = &acc - &(&(&sgn * &cfg.pi()) / &cfg.real_i64(8));
    let quarter = num_rational::BigRational::new(1.into(), 4.into());
    for n in 1..n_order {
        // (-4)^{n-1} B_{2n}(1/4) / ((2n-1) n t^{2n-1})
        let b = bernoulli_poly(2 * n).eval_rational(&quarter);
        let mut num = cfg.real_rational(&b.re);
        if (n - 1) % 2 == 1 {
            num = -num;
        }
        let scale = cfg.real_i64(4).powi(n as i64 - 1);
        let den = &cfg.real_i64((2 * n as i64 - 1) * n as i64) * &t.powi(2 * n as i64 - 1);
        acc = &acc - &(&(&num * &scale) / &den);
    }
    Ok(acc)
}
