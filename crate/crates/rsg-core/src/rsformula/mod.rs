//! The headline evaluators: the exact remainder of the approximate
//! functional equation, the completed expansion, the intermediate expansion
//! and Hardy's Z function.

mod zeta;

pub use zeta::{partial_sum, zeta_reference};

use crate::coeffs;
use crate::error::{Error, Result};
use crate::mordell;
use crate::numkernel::{theta_exact, PrecisionConfig, WideComplex, WideReal};
use crate::polyalg::hermite_poly;

/// Evaluation point of the approximate functional equation, carrying
/// `s = sigma + it` and partial-sum lengths with `t = 2 pi alpha beta`.
#[derive(Clone, Debug)]
pub struct EvalPoint {
    pub s: WideComplex,
    pub alpha: WideReal,
    pub beta: WideReal,
}

impl EvalPoint {
    /// Build from all three quantities; the constraint `t = 2 pi alpha beta`
    /// is enforced to relative `10^{2-digits}`.
    pub fn from_s_alpha_beta(
        s: WideComplex,
        alpha: WideReal,
        beta: WideReal,
        cfg: &PrecisionConfig,
    ) -> Result<Self> {
        let t = &s.im;
        if *t < cfg.two_pi() {
            return Err(Error::Domain("evaluation requires t >= 2 pi".into()));
        }
        if alpha < cfg.real_i64(1) || beta < cfg.real_i64(1) {
            return Err(Error::Domain("alpha and beta must be at least 1".into()));
        }
        let prod = &(&cfg.two_pi() * &alpha) * &beta;
        if (&prod - t).abs() > &cfg.pow10(2 - cfg.digits() as i64) * t {
            return Err(Error::InvalidArgument(format!(
                "t = 2 pi alpha beta violated: t = {t}, 2 pi alpha beta = {prod}"
            )));
        }
        Ok(EvalPoint { s, alpha, beta })
    }

    /// Derive `beta = t/(2 pi alpha)`.
    pub fn from_s_alpha(s: WideComplex, alpha: WideReal, cfg: &PrecisionConfig) -> Result<Self> {
        let beta = &s.im / &(&cfg.two_pi() * &alpha);
        Self::from_s_alpha_beta(s, alpha, beta, cfg)
    }

    /// Derive `alpha = lambda sqrt(t/2 pi)`, `beta = alpha / lambda^2`.
    pub fn from_s_lambda(s: WideComplex, lambda: WideReal, cfg: &PrecisionConfig) -> Result<Self> {
        if !lambda.is_positive() {
            return Err(Error::InvalidArgument("lambda must be positive".into()));
        }
        let root = (&s.im / &cfg.two_pi()).sqrt();
        let alpha = &lambda * &root;
        let beta = &root / &lambda;
        Self::from_s_alpha_beta(s, alpha, beta, cfg)
    }

    pub fn t(&self) -> &WideReal {
        &self.s.im
    }

    pub fn sigma(&self) -> &WideReal {
        &self.s.re
    }
}

/// Fractional-part data `(a, b, lambda)` of an evaluation point.
#[derive(Clone, Debug)]
pub struct FracParts {
    pub a: WideReal,
    pub b: WideReal,
    pub lambda: WideReal,
    pub floor_alpha: i64,
    pub floor_beta: i64,
}

impl FracParts {
    pub fn from_point(pt: &EvalPoint, cfg: &PrecisionConfig) -> Result<Self> {
        let (floor_alpha, a) = split_guarded(&pt.alpha, cfg)?;
        let (floor_beta, b) = split_guarded(&pt.beta, cfg)?;
        let lambda = (&pt.alpha / &pt.beta).sqrt();
        Ok(FracParts { a, b, lambda, floor_alpha, floor_beta })
    }
}

/// Floor with a guard band: values within `10^{4-digits}` of an integer are
/// snapped to that integer, giving fractional part exactly 0.
fn split_guarded(x: &WideReal, cfg: &PrecisionConfig) -> Result<(i64, WideReal)> {
    let guard = cfg.pow10(4 - cfg.digits() as i64);
    let mut fl = x.floor_i64()?;
    let mut frac = x - &cfg.real_i64(fl);
    if frac.abs() < guard {
        frac = cfg.real_i64(0);
    } else if (&cfg.real_i64(1) - &frac).abs() < guard {
        fl += 1;
        frac = cfg.real_i64(0);
    }
    Ok((fl, frac))
}

/// `R(s; alpha, beta) = e^{i theta(s)}(zeta(s) - sum_{n<=alpha} n^{-s})
///                      - e^{i theta(1-s)} sum_{n<=beta} n^{-(1-s)}`,
/// with the zeta oracle supplying the exact value.
/// `theta(1-s) = -theta(s)` is used directly.
pub fn remainder_exact(pt: &EvalPoint, cfg: &PrecisionConfig) -> Result<WideComplex> {
    let th = theta_exact(&pt.s, cfg)?;
    let e_plus = th.mul_i().exp();
    let e_minus = (-th.mul_i()).exp();
    let z = zeta_reference(&pt.s, cfg)?;
    let s_alpha = partial_sum(&pt.s, &pt.alpha, cfg)?;
    let one_minus_s = &cfg.complex_i64(1, 0) - &pt.s;
    let s_beta = partial_sum(&one_minus_s, &pt.beta, cfg)?;
    Ok(&(&e_plus * &(&z - &s_alpha)) - &(&e_minus * &s_beta))
}

/// Result of the completed expansion: per-order bracketed sums, the shared
/// prefactor (sign, phase, `(2 pi/t)^{1/4}`, `lambda^{1/2-s}`) and the value
/// `prefactor * sum_n order_terms[n] / t^{n/2}`.
#[derive(Clone, Debug)]
pub struct ExpansionResult {
    pub order_terms: Vec<WideComplex>,
    pub prefactor: WideComplex,
    pub value: WideComplex,
    pub order: u32,
    /// Set when `lambda` or `1/lambda` reaches `t^{1/6}`, outside the
    /// regime in which the expansion produces asymptotics.
    pub regime_warning: bool,
}

/// The completed, symmetric expansion of the remainder to order `N`:
/// sign and phase prefactor times
/// `sum_{n<N} lambda^{1/2-s} t^{-n/2} [sum_{r=0}^{3n} G^{(r)}(a/lambda + b lambda; lambda^2)
///  (2 pi)^{-r/2} P_{n,3n-r}(sqrt(pi/2)(a/lambda - b lambda), sigma)]`.
pub fn rs_general(pt: &EvalPoint, order: u32, cfg: &PrecisionConfig) -> Result<ExpansionResult> {
    let fp = FracParts::from_point(pt, cfg)?;
    let t = pt.t();
    let lam = &fp.lambda;
    let lam_inv = cfg.real_i64(1) / lam;

    // regime check: lambda and 1/lambda below t^{1/6}
    let t_sixth = (t.ln() / cfg.real_i64(6)).exp();
    let regime_warning = *lam >= t_sixth || lam_inv >= t_sixth;

    let sign_negative = (fp.floor_alpha % 2 == 1) && (fp.floor_beta % 2 == 1);
    // exp(pi i (2 a beta - 2 b alpha + a^2/lambda^2 - b^2 lambda^2)/2)
    let phase_arg = &(&(&(&fp.a * &pt.beta) - &(&fp.b * &pt.alpha)).scale2()
        + &(&(&fp.a * &fp.a) * &(&lam_inv * &lam_inv)))
        - &(&(&fp.b * &fp.b) * &(lam * lam));
    let phase = cfg.exp_pi_i(&(&phase_arg / &cfg.real_i64(2)));
    let quarter_root = quarter_power(&(&cfg.two_pi() / t), cfg);
    let lam_pow = ((&cfg.complex(cfg.real_str("0.5").expect("const"), cfg.real_i64(0)) - &pt.s)
        * WideComplex::from_real(lam.ln()))
    .exp();
    let mut prefactor = phase.scale(&quarter_root) * &lam_pow;
    if sign_negative {
        // (-1)^{floor(alpha) floor(beta) + 1} = +1 in this branch
    } else {
        prefactor = -prefactor;
    }

    let u_star = &(&fp.a * &lam_inv) + &(&fp.b * lam);
    let x_star = &(&cfg.pi() / &cfg.real_i64(2)).sqrt() * &(&(&fp.a * &lam_inv) - &(&fp.b * lam));
    let sigma = WideComplex::from_real(pt.sigma().clone());
    let x_c = WideComplex::from_real(x_star);
    let tau = WideComplex::from_real(lam * lam);

    let mut order_terms = Vec::with_capacity(order as usize);
    if order > 0 {
        let r_max = 3 * (order - 1);
        let g = mordell::g_derivs(&WideComplex::from_real(u_star), &tau, r_max, cfg)?;
        let inv_sqrt_2pi = cfg.real_i64(1) / cfg.two_pi().sqrt();
        for n in 0..order {
            let mut acc = cfg.complex_i64(0, 0);
            for r in 0..=(3 * n) {
                let p = coeffs::p_poly(n, 3 * n - r)?;
                let pv = p.eval(&x_c, &sigma, cfg);
                if pv.is_zero() {
                    continue;
                }
                acc = &acc + &(&g[r as usize] * &pv).scale(&inv_sqrt_2pi.powi(r as i64));
            }
            order_terms.push(acc);
        }
    }
    let sqrt_t = t.sqrt();
    let mut value = cfg.complex_i64(0, 0);
    for (n, term) in order_terms.iter().enumerate() {
        value = &value + &term.scale(&sqrt_t.powi(-(n as i64)));
    }
    value = &prefactor * &value;
    Ok(ExpansionResult { order_terms, prefactor, value, order, regime_warning })
}

/// The intermediate expansion: the correction term of the unsymmetrized
/// formula, so that `zeta(s) ~ sum_{n<=alpha} n^{-s} + chi(s) sum_{n<=beta} n^{n-1}
/// + (returned value)`. Completing it to the remainder is multiplication by
/// `e^{i theta(s)}`.
pub fn rs_intermediate(pt: &EvalPoint, order: u32, cfg: &PrecisionConfig) -> Result<WideComplex> {
    let fp = FracParts::from_point(pt, cfg)?;
    let t = pt.t();
    let lam = &fp.lambda;
    let lam_inv = cfg.real_i64(1) / lam;
    let pi = cfg.pi();

    // (2 pi)^s e^{pi i s/2} / (Gamma(s)(e^{2 pi i s} - 1))
    let two_pi_pow = (&pt.s * &WideComplex::from_real(cfg.two_pi().ln())).exp();
    let e_half = (&pt.s.scale(&(&pi / &cfg.real_i64(2)))).mul_i().exp();
    let gamma_s = crate::numkernel::log_gamma(&pt.s, cfg)?.exp();
    let e_full = (&pt.s.scale(&cfg.two_pi())).mul_i().exp();
    let mut pref = &(&two_pi_pow * &e_half) / &(&gamma_s * &(&e_full - &cfg.complex_i64(1, 0)));
    if (fp.floor_alpha % 2 == 1) && (fp.floor_beta % 2 == 1) {
        pref = -pref;
    }
    // (2 pi/t)^{1/4} lambda^{1/2-s}
    let quarter_root = quarter_power(&(&cfg.two_pi() / t), cfg);
    let lam_pow = ((&cfg.complex(cfg.real_str("0.5").expect("const"), cfg.real_i64(0)) - &pt.s)
        * WideComplex::from_real(lam.ln()))
    .exp();
    pref = pref.scale(&quarter_root) * &lam_pow;
    // phase and the exp((s/2 - 1/4) log(t/2pi) - it/2 - i pi/8) factor
    let phase_arg = &(&(&(&fp.a * &pt.beta) - &(&fp.b * &pt.alpha)).scale2()
        + &(&(&fp.a * &fp.a) * &(&lam_inv * &lam_inv)))
        - &(&(&fp.b * &fp.b) * &(lam * lam));
    pref = &pref * &cfg.exp_pi_i(&(&phase_arg / &cfg.real_i64(2)));
    let log_factor = &(&pt.s.scale(&cfg.real_str("0.5").expect("const"))
        - &cfg.complex(cfg.real_str("0.25").expect("const"), cfg.real_i64(0)))
        * &WideComplex::from_real((t / &cfg.two_pi()).ln());
    let lin = cfg.complex(
        cfg.real_i64(0),
        -(&(t / &cfg.real_i64(2)) + &(&pi / &cfg.real_i64(8))),
    );
    pref = &pref * &(&log_factor + &lin).exp();

    // sum_{k<N} a_k(s) c_k(lambda)
    let u_star = WideComplex::from_real(&(&fp.a * &lam_inv) + &(&fp.b * lam));
    let tau = WideComplex::from_real(lam * lam);
    let mut total = cfg.complex_i64(0, 0);
    if order > 0 {
        let g = mordell::g_derivs(&u_star, &tau, order - 1, cfg)?;
        // omega_lambda = e^{-pi i/4} sqrt(pi/2) (a/lambda - b lambda)
        let omega = cfg
            .exp_pi_i(&(-cfg.real_str("0.25").expect("const")))
            .scale(&(&(&pi / &cfg.real_i64(2)).sqrt()))
            .scale(&(&(&fp.a * &lam_inv) - &(&fp.b * lam)));
        let inv_sqrt_2pi = cfg.real_i64(1) / cfg.two_pi().sqrt();
        for k in 0..order {
            let a_k = coeffs::a_k_eval(k, &pt.s, cfg)?;
            let mut c_k = cfg.complex_i64(0, 0);
            let mut binom = cfg.real_i64(1);
            for r in 0..=k {
                // e^{pi i (k - 3r)/4} / 2^{k-r}
                let root = cfg.exp_pi_i(
                    &(&cfg.real_i64(k as i64 - 3 * r as i64) / &cfg.real_i64(4)),
                );
                let h = hermite_poly(k - r).eval_complex(&omega, cfg);
                let two_pow = cfg.real_i64(2).powi(-((k - r) as i64));
                let term = (&(&g[r as usize] * &root) * &h)
                    .scale(&(&(&binom * &two_pow) * &inv_sqrt_2pi.powi(r as i64)));
                c_k = &c_k + &term;
                binom = &(&binom * &cfg.real_i64((k - r) as i64)) / &cfg.real_i64(r as i64 + 1);
            }
            total = &total + &(&a_k * &c_k);
        }
    }
    Ok(&pref * &total)
}

/// Hardy's Z by the completed critical-line expansion:
/// `Z(t) = 2 sum_{n<=alpha} cos(theta(1/2+it) - t log n)/sqrt(n)
///  + (-1)^{floor(alpha)+1} (2 pi/t)^{1/4} sum_{m<N} C_m(a) t^{-m/2}`.
pub fn hardy_z(t: &WideReal, order: u32, cfg: &PrecisionConfig) -> Result<WideReal> {
    if *t < cfg.two_pi() {
        return Err(Error::Domain("hardy_z requires t >= 2 pi".into()));
    }
    let alpha = (t / &cfg.two_pi()).sqrt();
    let (floor_alpha, a) = split_guarded(&alpha, cfg)?;
    let s = cfg.complex(cfg.real_str("0.5").expect("const"), t.clone());
    let th = theta_exact(&s, cfg)?.re;
    let mut main = cfg.real_i64(0);
    for n in 1..=floor_alpha {
        let c = (&th - &(t * &cfg.real_i64(n).ln())).cos();
        main = &main + &(&c / &cfg.real_i64(n).sqrt());
    }
    main = &main + &main;
    let mut corr = cfg.real_i64(0);
    if order > 0 {
        let sqrt_t = t.sqrt();
        let mut acc = cfg.real_i64(0);
        for m in 0..order {
            let c = coeffs::c_classical(m, &a, cfg)?;
            acc = &acc + &(&c.re * &sqrt_t.powi(-(m as i64)));
        }
        let quarter_root = quarter_power(&(&cfg.two_pi() / t), cfg);
        corr = &acc * &quarter_root;
        if floor_alpha % 2 == 0 {
            corr = -corr;
        }
    }
    Ok(&main + &corr)
}

/// Normalized residual of the symmetric approximate functional equation:
/// `|R| t^{1/4} / (lambda^{1/2-sigma}(lambda^{1/2}+lambda^{-1/2}))`.
pub fn hl_afe_residual(pt: &EvalPoint, cfg: &PrecisionConfig) -> Result<WideReal> {
    let fp = FracParts::from_point(pt, cfg)?;
    let r = remainder_exact(pt, cfg)?.abs();
    let t_quarter = (pt.t().ln() / cfg.real_i64(4)).exp();
    let half = cfg.real_str("0.5").expect("const");
    let lam_half = fp.lambda.pow(&half)?;
    let lam_pow = (&(&half - pt.sigma()) * &fp.lambda.ln()).exp();
    let denom = &lam_pow * &(&lam_half + &(cfg.real_i64(1) / &lam_half));
    Ok(&(&r * &t_quarter) / &denom)
}

/// Principal fourth root of a positive real.
fn quarter_power(x: &WideReal, cfg: &PrecisionConfig) -> WideReal {
    (x.ln() / cfg.real_i64(4)).exp()
}

trait Scale2 {
    fn scale2(&self) -> WideReal;
}

impl Scale2 for WideReal {
    fn scale2(&self) -> WideReal {
        self + self
    }
}
