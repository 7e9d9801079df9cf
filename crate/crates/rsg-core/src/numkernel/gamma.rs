//! Principal-branch log-gamma and the vertical-strip asymptotic series for
//! log Gamma and Gamma.

use crate::coeffs;
use crate::error::{Error, Result};
use crate::numkernel::wide::{PrecisionConfig, WideComplex, WideReal};
use crate::polyalg::{bernoulli_number, bernoulli_poly};

/// Analytic `log Gamma(z)` on the plane cut along `(-inf, 0]`.
///
/// Argument-shift recursion moves `Re z` up to `20 + digits/2`, then
/// Stirling's series with a Bernoulli-number tail is applied; the logs of the
/// shift factors are accumulated, which keeps the imaginary part continuous
/// along vertical lines.
pub fn log_gamma(z: &WideComplex, cfg: &PrecisionConfig) -> Result<WideComplex> {
    if z.im.is_zero() && !z.re.is_positive() {
        let fl = z.re.floor();
        if fl == z.re {
            return Err(Error::Pole(format!("log_gamma pole at z = {}", z.re)));
        }
        return Err(Error::Domain("log_gamma on the cut (-inf, 0]".into()));
    }
    let target = cfg.real_i64(20 + cfg.digits() as i64 / 2);
    let mut w = z.clone();
    let mut shift_logs = cfg.complex_i64(0, 0);
    while w.re < target {
        shift_logs = &shift_logs + &w.ln();
        w = &w + &cfg.complex_i64(1, 0);
    }
    // Stirling: (w - 1/2) ln w - w + (1/2) ln 2pi + sum B_{2n}/(2n(2n-1) w^{2n-1})
    let half = cfg.real_str("0.5").expect("const");
    let ln_two_pi = cfg.two_pi().ln();
    let mut acc = &(&(&w - &cfg.complex(half.clone(), cfg.real_i64(0))) * &w.ln()) - &w;
    acc = &acc + &WideComplex::from_real(&half * &ln_two_pi);
    let w_inv = &cfg.complex_i64(1, 0) / &w;
    let w_inv2 = &w_inv * &w_inv;
    let mut pw = w_inv;
    let eps = cfg.pow10(-(cfg.digits() as i64 + 9));
    let mut prev_mag: Option<WideReal> = None;
    for n in 1u32..=300 {
        let b = cfg.real_rational(&bernoulli_number(2 * n));
        let den = cfg.real_i64(2 * n as i64 * (2 * n as i64 - 1));
        let term = pw.scale(&(&b / &den));
        let mag = term.abs();
        acc = &acc + &term;
        if mag < eps {
            break;
        }
        if let Some(p) = prev_mag {
            if mag > p {
                // divergent tail reached; cannot happen once Re w >= 20
                break;
            }
        }
        prev_mag = Some(mag);
        pw = &pw * &w_inv2;
    }
    Ok(&acc - &shift_logs)
}

/// Truncated Stirling expansion of `log Gamma(s)` in a vertical strip:
/// `(s - 1/2) log(it) - it + (1/2) log 2pi - sum_{k=1}^{N-1} (i/t)^k B_{k+1}(sigma)/(k(k+1))`.
pub fn log_gamma_asymptotic(s: &WideComplex, n_order: u32, cfg: &PrecisionConfig) -> Result<WideComplex> {
    if n_order < 1 {
        return Err(Error::InvalidArgument("order must be at least 1".into()));
    }
    if s.im.is_zero() {
        return Err(Error::InvalidArgument("log_gamma_asymptotic requires t != 0".into()));
    }
    let t = &s.im;
    let it = cfg.complex(cfg.real_i64(0), t.clone());
    let half = cfg.real_str("0.5").expect("const");
    let mut acc = &(&(s - &cfg.complex(half.clone(), cfg.real_i64(0))) * &it.ln()) - &it;
    acc = &acc + &WideComplex::from_real(&half * &cfg.two_pi().ln());
    let sigma = WideComplex::from_real(s.re.clone());
    let i_over_t = &cfg.i() / &WideComplex::from_real(t.clone());
    let mut pw = i_over_t.clone();
    for k in 1..n_order {
        let b = bernoulli_poly(k + 1).eval_complex(&sigma, cfg);
        let den = cfg.real_i64(k as i64 * (k as i64 + 1));
        acc = &acc - &(&pw * &b).scale(&(cfg.real_i64(1) / den));
        pw = &pw * &i_over_t;
    }
    Ok(acc)
}

/// Truncated vertical-strip expansion of `Gamma(s)` itself:
/// `sqrt(2pi) exp(pi i s/2 - i t - pi i/4) t^{s - 1/2} sum_{m<L} gamma_m(sigma)/t^m`.
pub fn gamma_asymptotic(s: &WideComplex, terms: u32, cfg: &PrecisionConfig) -> Result<WideComplex> {
    if terms < 1 {
        return Err(Error::InvalidArgument("order must be at least 1".into()));
    }
    let t = &s.im;
    if *t < cfg.real_i64(1) {
        return Err(Error::InvalidArgument("gamma_asymptotic requires t >= 1".into()));
    }
    let pi = cfg.pi();
    let half = cfg.real_str("0.5").expect("const");
    // exp(pi i s / 2 - i t - pi i / 4)
    let arg = &(&s.scale(&(&pi / &cfg.real_i64(2))).mul_i()
        - &cfg.complex(cfg.real_i64(0), t.clone()))
        - &cfg.complex(cfg.real_i64(0), &pi / &cfg.real_i64(4));
    let phase = arg.exp();
    // t^{s-1/2} = exp((s-1/2) ln t), real ln
    let tpow = (&(s - &cfg.complex(half, cfg.real_i64(0))) * &WideComplex::from_real(t.ln())).exp();
    let sigma = WideComplex::from_real(s.re.clone());
    let t_inv = WideComplex::from_real(cfg.real_i64(1) / t);
    let mut pw = cfg.complex_i64(1, 0);
    let mut series = cfg.complex_i64(0, 0);
    for m in 0..terms {
        let g = coeffs::gamma_m_poly(m).eval_complex(&sigma, cfg);
        series = &series + &(&g * &pw);
        pw = &pw * &t_inv;
    }
    Ok(&(&WideComplex::from_real(cfg.two_pi().sqrt()) * &phase) * &(&tpow * &series))
}

/// Finite expansion of `exp((s/2 - 1/4) log(t/2pi) - it/2 - i pi/8 - i theta(s))`
/// as `sum_{m<L} u_m(sigma)/(it)^m`.
pub fn exp_theta_prefactor_series(
    s: &WideComplex,
    terms: u32,
    cfg: &PrecisionConfig,
) -> Result<WideComplex> {
    let t = &s.im;
    if *t < cfg.two_pi() {
        return Err(Error::InvalidArgument(
            "exp_theta_prefactor_series requires t >= 2pi".into(),
        ));
    }
    let sigma = WideComplex::from_real(s.re.clone());
    let it_inv = &cfg.complex_i64(1, 0) / &cfg.complex(cfg.real_i64(0), t.clone());
    let mut pw = cfg.complex_i64(1, 0);
    let mut series = cfg.complex_i64(0, 0);
    for m in 0..terms {
        let u = coeffs::u_poly(m).eval_complex(&sigma, cfg);
        series = &series + &(&u * &pw);
        pw = &pw * &it_inv;
    }
    Ok(series)
}
