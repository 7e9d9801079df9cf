//! The Mordell integral Upsilon(u; tau), the normalized G(u; tau) and their
//! u-derivatives: quadrature route, rational-tau closed forms, shift
//! reductions and the classical Psi kernel.

mod taylor;

use crate::error::{Error, Result};
use crate::numkernel::{integrate_real_line, PrecisionConfig, QuadratureSpec, WideComplex, WideReal};
use crate::polyalg::hermite_poly;
use taylor::Taylor;

/// A point of evaluation (u, tau) with a derivative order.
#[derive(Clone, Debug)]
pub struct MordellPoint {
    pub u: WideComplex,
    pub tau: WideComplex,
    pub k: u32,
}

impl MordellPoint {
    pub fn new(u: WideComplex, tau: WideComplex, k: u32) -> Result<Self> {
        if !tau.re.is_positive() {
            return Err(Error::Domain("Mordell integral requires Re(tau) > 0".into()));
        }
        Ok(MordellPoint { u, tau, k })
    }
}

/// The quadratic `theta_k(u) = u^2/2 - sqrt(k) u - k/2 - 1/8` of the
/// rational-tau closed forms.
pub fn theta_k(k: u32, u: &WideComplex, cfg: &PrecisionConfig) -> WideComplex {
    let sqrt_k = cfg.real_i64(k as i64).sqrt();
    let half = cfg.real_str("0.5").expect("const");
    let c = -(&(cfg.real_i64(k as i64) * &half) + &cfg.real_str("0.125").expect("const"));
    (u * u).scale(&half) - u.scale(&sqrt_k) + cfg.complex(c, cfg.real_i64(0))
}

fn epsilon(cfg: &PrecisionConfig) -> WideComplex {
    // e^{3 pi i/4} = (-1 + i)/sqrt 2
    let h = cfg.real_i64(1) / cfg.real_i64(2).sqrt();
    cfg.complex(-&h, h)
}

fn check_tau(tau: &WideComplex) -> Result<()> {
    if !tau.re.is_positive() {
        return Err(Error::Domain("Mordell integral requires Re(tau) > 0".into()));
    }
    Ok(())
}

/// Direct quadrature for `Upsilon^{(k)}(u; tau)` from the real-line form:
/// the integrand has Gaussian decay `exp(-pi Re(tau) t^2)` against a linear
/// exponential factor and the simple poles of `1/(e^{2 pi i eps t} + 1)` at
/// distance `1/(2 sqrt 2)` from the axis.
pub fn upsilon(u: &WideComplex, tau: &WideComplex, k: u32, cfg: &PrecisionConfig) -> Result<WideComplex> {
    check_tau(tau)?;
    let eps = epsilon(cfg);
    let pi = cfg.pi();
    let two = cfg.real_i64(2);
    let lin = &(&u.scale(&two) - tau) * &cfg.complex(cfg.real_i64(0), pi.clone()); // pi i (2u - tau)
    let lin_eps = &lin * &eps;
    let tau_pi = WideComplex::from_real(pi.clone()) * tau;

    // exponent budget in nats
    let budget = &(cfg.real_i64(cfg.digits() as i64 + 12)) * &cfg.real_i64(10).ln();
    let c_lin = lin.abs();
    let tr = &pi * &tau.re;
    // T from pi Re(tau) T^2 - c_lin T = budget (+ slack for the power factor)
    let mut t_cut = (&c_lin
        + &(&(&c_lin * &c_lin) + &(&(&cfg.real_i64(4) * &tr) * &budget)).sqrt())
        / &(&two * &tr);
    if k > 0 {
        let slack = cfg.real_i64(k as i64)
            * (&two + &(&two * &t_cut)).ln();
        t_cut = (&c_lin
            + &(&(&c_lin * &c_lin) + &(&(&cfg.real_i64(4) * &tr) * &(&budget + &slack))).sqrt())
            / &(&two * &tr);
    }
    // step from the geometric-convergence strip width d = 0.3
    let d = cfg.real_str("0.3").expect("const");
    let strip_cost = &(&(&pi * &tau.abs()) * &(&d * &d))
        + &(&c_lin * &d)
        + &(cfg.real_i64(k as i64) * (&two + &(&two * &t_cut)).ln());
    let h = (&cfg.two_pi() * &d) / &(&(&budget + &strip_cost) + &cfg.real_i64(5));

    let spec = QuadratureSpec::new(&h * &two, t_cut, 10, cfg.quad_target())?;
    let one = cfg.complex_i64(1, 0);
    let two_eps = eps.scale(&two);
    let integral = integrate_real_line(
        |t: &WideReal| {
            let tc = WideComplex::from_real(t.clone());
            let quad = -(&tau_pi * &(&tc * &tc));
            let expo = (&quad + &(&lin_eps * &tc)).exp();
            let den = &(&two_eps * &tc)
                .scale(&pi)
                .mul_i()
                .exp()
                + &one;
            let mut val = &expo / &den;
            if k > 0 {
                val = &val * &(&one + &(&two_eps * &tc)).powi(k as i64);
            }
            val
        },
        &spec,
        cfg,
    )?;
    // prefactor -eps (pi i)^k e^{pi i (u - tau/4)}
    let pi_i = cfg.complex(cfg.real_i64(0), pi.clone());
    let quarter = cfg.real_str("0.25").expect("const");
    let phase = (&(u - &tau.scale(&quarter)) * &pi_i).exp();
    Ok(-(&(&eps * &pi_i.powi(k as i64)) * &(&phase * &integral)))
}

/// All derivatives `Upsilon^{(j)}(u; tau)` for `j = 0..=k_max`, computed at a
/// shift-reduced base point and lifted back with the shift relations. Large
/// |u| never reaches the quadrature directly.
pub fn upsilon_derivs_reduced(
    u: &WideComplex,
    tau: &WideComplex,
    k_max: u32,
    cfg: &PrecisionConfig,
) -> Result<Vec<WideComplex>> {
    check_tau(tau)?;
    let (m, n) = reduction_shifts(u, tau, cfg);
    let u0 = &(u - &cfg.complex_i64(m, 0)) - &tau.scale(&cfg.real_i64(n));
    let mut base = Vec::with_capacity(k_max as usize + 1);
    for j in 0..=k_max {
        base.push(upsilon(&u0, tau, j, cfg)?);
    }
    Ok(lift_shifts(&base, &u0, tau, m, n, cfg))
}

/// `Upsilon^{(k)}(u; tau)` by reduction; identity when no shift is needed.
pub fn upsilon_reduced(u: &WideComplex, tau: &WideComplex, k: u32, cfg: &PrecisionConfig) -> Result<WideComplex> {
    Ok(upsilon_derivs_reduced(u, tau, k, cfg)?[k as usize].clone())
}

fn reduction_shifts(u: &WideComplex, tau: &WideComplex, cfg: &PrecisionConfig) -> (i64, i64) {
    // move Re(u) into [0, 1) using tau-steps first when tau is real
    let re_u = u.re.to_f64();
    if !re_u.is_finite() {
        return (0, 0);
    }
    let _ = cfg;
    if tau.im.is_zero() {
        let t = tau.re.to_f64();
        if t > 0.0 {
            let n = (re_u / t).floor();
            let rem = re_u - n * t;
            let m = rem.floor();
            return (m as i64, n as i64);
        }
    }
    (re_u.floor() as i64, 0)
}

/// Lift derivatives at the base point u0 to `u0 + m + n tau` with the two
/// shift relations, differentiated through Hermite polynomials.
fn lift_shifts(
    base: &[WideComplex],
    u0: &WideComplex,
    tau: &WideComplex,
    m: i64,
    n: i64,
    cfg: &PrecisionConfig,
) -> Vec<WideComplex> {
    let k_max = base.len() - 1;
    let pi = cfg.pi();
    let pi_i = cfg.complex(cfg.real_i64(0), pi.clone());
    let eps = epsilon(cfg);
    let tau_inv_sqrt = &cfg.complex_i64(1, 0) / &tau.sqrt();

    // integer-shift lift: w = u0 + m
    let mut lifted: Vec<WideComplex> = base.to_vec();
    if m != 0 {
        // c with c^2 = -pi i / tau
        let c = {
            let e = cfg.exp_pi_i(&(-cfg.real_str("0.25").expect("const")));
            &e * &(WideComplex::from_real(pi.clone()) / tau).sqrt()
        };
        let (range, sgn) = if m > 0 { (0..m, 1i64) } else { (m..0, -1i64) };
        for (j, item) in lifted.iter_mut().enumerate() {
            let mut extra = cfg.complex_i64(0, 0);
            for r in range.clone() {
                let ur = u0 + &cfg.complex_i64(r, 0);
                let h = hermite_poly(j as u32).eval_complex(&(&c * &ur), cfg);
                let gauss = (&(&ur * &ur) * &(&pi_i / tau)).exp();
                extra = &extra + &(&(-&c).powi(j as i64) * &(&h * &gauss));
            }
            let shift = &(&eps * &tau_inv_sqrt) * &extra;
            *item = if sgn > 0 { &*item + &shift } else { &*item - &shift };
        }
    }
    if n == 0 {
        return lifted;
    }
    // tau-shift lift from w = u0 + m
    let w = u0 + &cfg.complex_i64(m, 0);
    let n_r = cfg.real_i64(n);
    // e^{pi i n (n tau + 2w)}
    let phase = (&(&tau.scale(&n_r) + &w.scale(&cfg.real_i64(2))).scale(&n_r) * &pi_i).exp();
    let two_pi_i_n = cfg.complex(cfg.real_i64(0), &cfg.two_pi() * &n_r);
    let (range, sgn) = if n > 0 { (0..n, -1i64) } else { (n..0, 1i64) };
    let mut out = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        let mut acc = cfg.complex_i64(0, 0);
        let mut binom = cfg.real_i64(1);
        for j in 0..=k {
            let term = &(&phase * &two_pi_i_n.powi(j as i64)) * &lifted[k - j];
            acc = &acc + &term.scale(&binom);
            // next binomial C(k, j+1)
            binom = &(&binom * &cfg.real_i64((k - j) as i64)) / &cfg.real_i64(j as i64 + 1);
        }
        // Gaussian-sum correction: sum over r of (2 pi i (n-r))^k e^{pi i[(n^2-r^2) tau + 2w(n-r)]}
        let mut s = cfg.complex_i64(0, 0);
        for r in range.clone() {
            let dr = cfg.real_i64(n - r);
            let quad = &tau.scale(&cfg.real_i64(n * n - r * r)) + &w.scale(&(&cfg.real_i64(2) * &dr));
            let e = (&quad * &pi_i).exp();
            let fac = cfg.complex(cfg.real_i64(0), &cfg.two_pi() * &dr).powi(k as i64);
            s = &s + &(&fac * &e);
        }
        let s = if sgn > 0 { s } else { -s };
        out.push(&acc + &s);
    }
    out
}

/// `G^{(k)}(u; tau)` and all lower derivatives, through the Hermite expansion
/// of the normalizing Gaussian times reduced Upsilon derivatives.
pub fn g_derivs(u: &WideComplex, tau: &WideComplex, k_max: u32, cfg: &PrecisionConfig) -> Result<Vec<WideComplex>> {
    check_tau(tau)?;
    let sqrt_tau = tau.sqrt();
    let arg = &sqrt_tau * u;
    let ups = upsilon_derivs_reduced(&arg, tau, k_max, cfg)?;
    let pi = cfg.pi();
    let half = cfg.real_str("0.5").expect("const");
    // tau^{1/4} exp(-pi i u^2/2 + pi i/8)
    let pref = {
        let tau_quarter = tau.ln().scale(&cfg.real_str("0.25").expect("const")).exp();
        let phase = (&(-(u * u).scale(&(&pi * &half)))
            + &cfg.complex(&pi / &cfg.real_i64(8), cfg.real_i64(0)))
            .mul_i()
            .exp();
        &tau_quarter * &phase
    };
    // H_j(e^{pi i/4} sqrt(pi/2) u) and e^{5 pi i j/4} (pi/2)^{j/2}
    let root8 = cfg.exp_pi_i(&cfg.real_str("0.25").expect("const"));
    let h_arg = &WideComplex::from_real((&pi * &half).sqrt()) * &(&root8 * u);
    let five_eighths_phase = cfg.exp_pi_i(&(cfg.real_i64(5) / cfg.real_i64(4)));
    let sqrt_pi_half = (&pi * &half).sqrt();
    let sqrt_tau_c = sqrt_tau;
    let mut out = Vec::with_capacity(k_max as usize + 1);
    for k in 0..=k_max {
        let mut acc = cfg.complex_i64(0, 0);
        let mut binom = cfg.real_i64(1);
        for j in 0..=k {
            let h = hermite_poly(j).eval_complex(&h_arg, cfg);
            let coef = &five_eighths_phase.powi(j as i64)
                * &WideComplex::from_real(sqrt_pi_half.powi(j as i64));
            let tau_pow = sqrt_tau_c.powi((k - j) as i64);
            let term = &(&h * &coef) * &(&tau_pow * &ups[(k - j) as usize]);
            acc = &acc + &term.scale(&binom);
            binom = &(&binom * &cfg.real_i64((k - j) as i64)) / &cfg.real_i64(j as i64 + 1);
        }
        out.push(&pref * &acc);
    }
    Ok(out)
}

/// `G^{(k)}(u; tau)` by quadrature (with shift reduction for large |u|).
pub fn g_value(u: &WideComplex, tau: &WideComplex, k: u32, cfg: &PrecisionConfig) -> Result<WideComplex> {
    Ok(g_derivs(u, tau, k, cfg)?[k as usize].clone())
}

/// Closed-form `G^{(k)}(u; m/n)` for positive rational tau via Gauss sums;
/// derivatives by local Taylor expansion. Near the removable zeros of
/// `sin(pi(sqrt(mn) u + mn/2))` a `NearSingularity` error asks the caller to
/// fall back to quadrature.
pub fn g_rational(u: &WideComplex, m: u32, n: u32, k: u32, cfg: &PrecisionConfig) -> Result<WideComplex> {
    if m == 0 || n == 0 {
        return Err(Error::Domain("g_rational requires positive integers m, n".into()));
    }
    let len = k as usize + 1;
    let pi = cfg.pi();
    let mn = (m * n) as i64;
    let sqrt_mn = cfg.real_i64(mn).sqrt();
    // denominator zero check
    let sin_arg = (&u.scale(&sqrt_mn) + &cfg.complex(cfg.real_i64(mn) / cfg.real_i64(2), cfg.real_i64(0)))
        .scale(&pi);
    let sin_val = sin_arg.sin();
    if sin_val.abs() < cfg.real_str("0.001").expect("const") {
        return Err(Error::NearSingularity(format!("{}", sin_val.abs())));
    }

    let ratio = cfg.real_i64(m as i64) / cfg.real_i64(n as i64);
    let quarter_pow = ratio.ln().scale_quarter_exp(cfg);
    let theta0 = theta_k((m * n) as u32, u, cfg);
    // theta' (u) = u - sqrt(mn); theta'' = 1
    let theta1 = u - &WideComplex::from_real(sqrt_mn.clone());
    let pi_i = cfg.complex(cfg.real_i64(0), pi.clone());

    // numerator: two groups of quadratic exponentials
    let mut num = Taylor::zero(len, cfg);
    let sqrt_m_over_n = ratio.sqrt();
    let sqrt_n_over_m = cfg.real_i64(1) / &sqrt_m_over_n;
    for j in 0..n {
        // (m/n)^{1/4} e^{-pi i theta_mn(u+v)} e^{-pi i j [2(u+v) sqrt(m/n) + j m/n]}
        let jr = cfg.real_i64(j as i64);
        let lin_j = u.scale(&(&cfg.real_i64(2) * &(&jr * &sqrt_m_over_n)));
        let quad_j = &jr * &(&jr * &ratio);
        let c0 = (&(-(&theta0 + &(&lin_j + &WideComplex::from_real(quad_j)))) * &pi_i).exp();
        let b = &(-(&theta1 + &WideComplex::from_real(&cfg.real_i64(2) * &(&jr * &sqrt_m_over_n)))) * &pi_i;
        let a = -&pi_i.scale(&cfg.real_str("0.5").expect("const"));
        let series = Taylor::exp_quadratic(&b, &a, len, cfg).scale(&c0);
        num = num.add(&series.scale(&WideComplex::from_real(quarter_pow.clone())));
    }
    for j in 0..m {
        let jr = cfg.real_i64(j as i64);
        let lin_j = u.scale(&(&cfg.real_i64(2) * &(&jr * &sqrt_n_over_m)));
        let quad_j = &jr * &(&jr * &(cfg.real_i64(n as i64) / cfg.real_i64(m as i64)));
        let c0 = (&(&theta0 + &(&lin_j + &WideComplex::from_real(quad_j))) * &pi_i).exp();
        let b = &(&theta1 + &WideComplex::from_real(&cfg.real_i64(2) * &(&jr * &sqrt_n_over_m))) * &pi_i;
        let a = pi_i.scale(&cfg.real_str("0.5").expect("const"));
        let series = Taylor::exp_quadratic(&b, &a, len, cfg).scale(&c0);
        num = num.add(&series.scale(&WideComplex::from_real(cfg.real_i64(1) / &quarter_pow)).scale(&cfg.complex_i64(-1, 0)));
    }
    // denominator: 2 i sin(pi(sqrt(mn)(u+v) + mn/2)) = e^{i phi} e^{i pi sqrt(mn) v} - e^{-i phi} e^{-i pi sqrt(mn) v}
    let phi = sin_arg.clone();
    let e_plus = phi.mul_i().exp();
    let e_minus = (-phi.mul_i()).exp();
    let lin = &WideComplex::from_real(&pi * &sqrt_mn) * &cfg.i();
    let zero = cfg.complex_i64(0, 0);
    let den = Taylor::exp_quadratic(&lin, &zero, len, cfg)
        .scale(&e_plus)
        .add(&Taylor::exp_quadratic(&(-&lin), &zero, len, cfg).scale(&(-e_minus)));
    let g = num.div(&den, cfg);
    Ok(g.derivative(k as usize, cfg))
}

/// The classical entire kernel `Psi(u) = cos(pi(u^2/2 - u - 1/8))/cos(pi u)`
/// and its derivatives; near the removable singularities at half-integers the
/// value comes from a deflated local series.
pub fn psi_classical(u: &WideComplex, k: u32, cfg: &PrecisionConfig) -> Result<WideComplex> {
    let pi = cfg.pi();
    let den0 = (&WideComplex::from_real(pi.clone()) * u).cos();
    let threshold = cfg.real_str("0.001").expect("const");
    if den0.abs() >= threshold {
        let series = psi_series(u, k as usize + 1, cfg);
        return Ok(series.derivative(k as usize, cfg));
    }
    // expand about the nearest half-integer
    let two_u = &u.re + &u.re;
    let nearest = round_half_int(&two_u, cfg);
    let ustar = WideComplex::from_real(&nearest / &cfg.real_i64(2));
    let delta = u - &ustar;
    // extra orders so the delta-tail is below working precision
    let extra = extra_orders(&delta.abs(), cfg);
    let len = k as usize + extra + 2;
    let num = psi_num_series(&ustar, len, cfg);
    let den = psi_den_series(&ustar, len, cfg);
    // both have a simple zero at a half-integer; deflate once
    let series = num.deflate().div(&den.deflate(), cfg);
    Ok(series.derivative_at(k as usize, &delta, cfg))
}

fn extra_orders(delta: &WideReal, cfg: &PrecisionConfig) -> usize {
    let d = delta.to_f64().abs();
    if d <= 1e-30 {
        return 2;
    }
    let need = (cfg.digits() as f64 + 12.0) * std::f64::consts::LN_10 / (1.0 / d).ln();
    need.ceil().clamp(2.0, 200.0) as usize
}

fn round_half_int(two_u: &WideReal, cfg: &PrecisionConfig) -> WideReal {
    let half = cfg.real_str("0.5").expect("const");
    (two_u + &half).floor()
}

fn psi_num_series(u: &WideComplex, len: usize, cfg: &PrecisionConfig) -> Taylor {
    // cos(pi q(u+v)), q(u) = u^2/2 - u - 1/8; q' = u - 1; q'' = 1
    let pi_i = cfg.complex(cfg.real_i64(0), cfg.pi());
    let half = cfg.real_str("0.5").expect("const");
    let q0 = &(u * u).scale(&half) - &(u + &cfg.complex(cfg.real_str("0.125").expect("const"), cfg.real_i64(0)));
    let q1 = u - &cfg.complex_i64(1, 0);
    let plus = Taylor::exp_quadratic(&(&q1 * &pi_i), &pi_i.scale(&half), len, cfg)
        .scale(&(&q0 * &pi_i).exp());
    let minus = Taylor::exp_quadratic(&(-(&q1 * &pi_i)), &(-pi_i.scale(&half)), len, cfg)
        .scale(&(-(&q0 * &pi_i)).exp());
    plus.add(&minus).scale(&cfg.complex(half, cfg.real_i64(0)))
}

fn psi_den_series(u: &WideComplex, len: usize, cfg: &PrecisionConfig) -> Taylor {
    // cos(pi (u+v))
    let pi_i = cfg.complex(cfg.real_i64(0), cfg.pi());
    let half = cfg.real_str("0.5").expect("const");
    let zero = cfg.complex_i64(0, 0);
    let plus = Taylor::exp_quadratic(&pi_i, &zero, len, cfg).scale(&(u * &pi_i).exp());
    let minus = Taylor::exp_quadratic(&(-&pi_i), &zero, len, cfg).scale(&(-(u * &pi_i)).exp());
    plus.add(&minus).scale(&cfg.complex(half, cfg.real_i64(0)))
}

fn psi_series(u: &WideComplex, len: usize, cfg: &PrecisionConfig) -> Taylor {
    psi_num_series(u, len, cfg).div(&psi_den_series(u, len, cfg), cfg)
}

trait QuarterExp {
    fn scale_quarter_exp(&self, cfg: &PrecisionConfig) -> WideReal;
}

impl QuarterExp for WideReal {
    /// exp(self / 4) for the real log of a positive ratio: ratio^{1/4}.
    fn scale_quarter_exp(&self, cfg: &PrecisionConfig) -> WideReal {
        (self * &cfg.real_str("0.25").expect("const")).exp()
    }
}
