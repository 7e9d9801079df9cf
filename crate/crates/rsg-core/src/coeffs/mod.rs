//! Exact construction of every coefficient family of the expansion:
//! f_n, u_m, g_n, gamma_m, d_{m,r}, q_{n,l}, s_{n,m}, the bivariate
//! polynomials P_{n,k}(x, sigma), Siegel's a_k(s), and the classical C_n(a).
//!
//! Everything here is built over Q(i); numerics enter only at the final
//! substitution.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::mordell;
use crate::numkernel::{PrecisionConfig, WideComplex, WideReal};
use crate::polyalg::{
    bernoulli_poly, binomial, factorial, BellTable, BiPoly, GaussRational, UniPoly,
};

/// Polynomial in sigma alone (x-degree zero in the bivariate picture).
pub type SigmaPoly = UniPoly;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn g_from_rat(r: BigRational) -> GaussRational {
    GaussRational::from_rational(r)
}

macro_rules! cached {
    ($store:ident, $kt:ty, $vt:ty, $key:expr, $build:expr) => {{
        static $store: OnceLock<Mutex<HashMap<$kt, $vt>>> = OnceLock::new();
        let cache = $store.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = cache.lock().expect("coefficient cache");
        guard.entry($key).or_insert_with(|| $build).clone()
    }};
}

/// `f_n(sigma) = [B_{n+1}(sigma/2) + (-1)^{n+1} B_{n+1}((1-sigma)/2)] / (2n(n+1))`,
/// degree n+1.
pub fn f_poly(n: u32) -> Result<SigmaPoly> {
    if n == 0 {
        return Err(Error::Index("f_n requires n >= 1".into()));
    }
    Ok(cached!(F_CACHE, u32, UniPoly, n, {
        let b = bernoulli_poly(n + 1);
        let half = g_from_rat(rat(1, 2));
        // B_{n+1}(sigma/2)
        let t1 = b.compose_linear(&half, &GaussRational::zero());
        // B_{n+1}((1-sigma)/2)
        let t2 = b.compose_linear(&(-&half), &half);
        let signed = if n % 2 == 1 { t2 } else { t2.neg() };
        t1.add(&signed).scale(&g_from_rat(rat(1, 2 * n as i64 * (n as i64 + 1))))
    }))
}

/// `u_m(sigma) = (-2)^m sum_k Bhat[m,k](f_1, f_2, ...) / k!`, degree 2m.
pub fn u_poly(m: u32) -> SigmaPoly {
    cached!(U_CACHE, u32, UniPoly, m, {
        let mut table = BellTable::new(|j| f_poly(j).expect("j >= 1"));
        let mut acc = UniPoly::zero();
        for k in 0..=m {
            let inv_fact = g_from_rat(BigRational::new(BigInt::one(), factorial(k)));
            acc = acc.add(&table.value(m, k).scale(&inv_fact));
        }
        acc.scale(&g_from_rat(rat(-2, 1).pow(m as i32)))
    })
}

/// `g_n(sigma) = -B_{n+1}(sigma) / (n(n+1))`.
fn g_poly(n: u32) -> SigmaPoly {
    bernoulli_poly(n + 1).scale(&g_from_rat(rat(-1, n as i64 * (n as i64 + 1))))
}

/// `gamma_m(sigma) = i^m sum_k Bhat[m,k](g_1, g_2, ...) / k!`.
pub fn gamma_m_poly(m: u32) -> SigmaPoly {
    cached!(GM_CACHE, u32, UniPoly, m, {
        let mut table = BellTable::new(g_poly);
        let mut acc = UniPoly::zero();
        for k in 0..=m {
            let inv_fact = g_from_rat(BigRational::new(BigInt::one(), factorial(k)));
            acc = acc.add(&table.value(m, k).scale(&inv_fact));
        }
        acc.scale(&GaussRational::i_pow(m as i64))
    })
}

// The two fixed scalar sequences feeding d_{m,r}:
// 1/3, -1/4, 1/5, ...  and  1, -1/2, 1/3, ...
fn seq_cubic(m: u32) -> BigRational {
    let sign = if m % 2 == 1 { 1 } else { -1 };
    rat(sign, m as i64 + 2)
}

fn seq_log(m: u32) -> BigRational {
    let sign = if m % 2 == 1 { 1 } else { -1 };
    rat(sign, m as i64)
}

/// `d_{m,r}(sigma)`, degree m - r in sigma.
pub fn d_poly(m: u32, r: u32) -> Result<SigmaPoly> {
    if r > m {
        return Err(Error::Index(format!("d_{{m,r}} requires r <= m, got ({m}, {r})")));
    }
    Ok(cached!(D_CACHE, (u32, u32), UniPoly, (m, r), {
        let mut cubic = BellTable::new(seq_cubic);
        let mut logt = BellTable::new(seq_log);
        let mut acc = UniPoly::zero();
        for n in r..=m {
            let outer = cubic.value(n, r) / BigRational::from_integer(factorial(r));
            let mut inner = UniPoly::zero();
            for k in 0..=(m - n) {
                let c = logt.value(m - n, k) / BigRational::from_integer(factorial(k));
                // (sigma - 1)^k
                let sk = UniPoly::from_coeffs(vec![
                    GaussRational::from_i64(-1),
                    GaussRational::one(),
                ]);
                let mut pw = UniPoly::one();
                for _ in 0..k {
                    pw = pw.mul(&sk);
                }
                inner = inner.add(&pw.scale(&g_from_rat(c)));
            }
            acc = acc.add(&inner.scale(&g_from_rat(outer)));
        }
        acc
    }))
}

/// `q_{n,3n-2l}(sigma) = sum_m u_m(sigma) d_{n-2m, n-l+m}(sigma)`,
/// for `0 <= l <= floor(3n/2)`; degree at most n.
pub fn q_poly(n: u32, ell: u32) -> Result<SigmaPoly> {
    if ell > 3 * n / 2 {
        return Err(Error::Index(format!(
            "q_{{n,3n-2l}} requires 0 <= l <= floor(3n/2), got (n, l) = ({n}, {ell})"
        )));
    }
    Ok(cached!(Q_CACHE, (u32, u32), UniPoly, (n, ell), {
        let lo = ell.saturating_sub(n);
        let hi = ell / 3;
        let mut acc = UniPoly::zero();
        for m in lo..=hi {
            let r = (n as i64 - ell as i64 + m as i64) as u32;
            let d = d_poly(n - 2 * m, r).expect("index algebra keeps r <= m");
            acc = acc.add(&u_poly(m).mul(&d));
        }
        acc
    }))
}

/// `s_{n,m}(sigma) = sum_{l=0}^m 4^l (3n-2l)!/(m-l)! q_{n,3n-2l}(sigma)`,
/// for `0 <= m <= floor(3n/2)`.
pub fn s_poly(n: u32, m: u32) -> Result<SigmaPoly> {
    if m > 3 * n / 2 {
        return Err(Error::Index(format!(
            "s_{{n,m}} requires 0 <= m <= floor(3n/2), got (n, m) = ({n}, {m})"
        )));
    }
    Ok(cached!(S_CACHE, (u32, u32), UniPoly, (n, m), {
        let mut acc = UniPoly::zero();
        for l in 0..=m {
            let c = BigRational::new(
                BigInt::from(4).pow(l) * factorial(3 * n - 2 * l),
                factorial(m - l),
            );
            acc = acc.add(&q_poly(n, l).expect("l <= m <= 3n/2").scale(&g_from_rat(c)));
        }
        acc
    }))
}

/// The bivariate polynomial `P_{n,k}(x, sigma)` with its indices.
#[derive(Clone, Debug, PartialEq)]
pub struct PnkPoly {
    pub n: u32,
    pub k: u32,
    pub poly: BiPoly,
}

impl PnkPoly {
    pub fn eval(&self, x: &WideComplex, sigma: &WideComplex, cfg: &PrecisionConfig) -> WideComplex {
        self.poly.eval_complex(x, sigma, cfg)
    }

    /// Exact functional-equation check: `P(x, sigma) = conj(P(-x, 1-sigma))`.
    pub fn satisfies_functional_equation(&self) -> bool {
        self.poly == self.poly.fe_transform()
    }
}

fn check_k_range(n: u32, k: u32) -> Result<()> {
    if k > 3 * n {
        return Err(Error::Index(format!(
            "P_{{n,k}} requires 0 <= k <= 3n, got (n, k) = ({n}, {k})"
        )));
    }
    Ok(())
}

/// `P_{n,k}(x, sigma)` assembled from the Hermite form:
/// `e^{3 pi i k/4} sum_l C(3n-2l, 3n-k) (-1)^{n+l} 2^{2l-k} q_{n,3n-2l}(sigma) H_{k-2l}(e^{-pi i/4} x)`.
///
/// All eighth-root factors must combine into powers of i; the builder checks
/// this and reports an internal error otherwise.
pub fn p_poly(n: u32, k: u32) -> Result<PnkPoly> {
    check_k_range(n, k)?;
    let poly = cached!(P_CACHE, (u32, u32), BiPoly, (n, k), {
        build_p_hermite(n, k).expect("eighth-root cancellation")
    });
    Ok(PnkPoly { n, k, poly })
}

fn build_p_hermite(n: u32, k: u32) -> Result<BiPoly> {
    let mut out = BiPoly::zero();
    for l in 0..=(k / 2) {
        if 2 * l > 3 * n {
            break;
        }
        let cb = if 3 * n - 2 * l >= 3 * n - k { binomial(3 * n - 2 * l, 3 * n - k) } else { BigInt::zero() };
        if cb.is_zero() {
            continue;
        }
        let mut scale = BigRational::new(cb * BigInt::from(2).pow(2 * l), BigInt::from(2).pow(k));
        if (n + l) % 2 == 1 {
            scale = -scale;
        }
        let q = q_poly(n, l)?.scale(&g_from_rat(scale));
        let h = crate::polyalg::hermite_poly(k - 2 * l);
        for (d, hc) in h.coeffs().iter().enumerate() {
            if hc.is_zero() {
                continue;
            }
            // net power of e^{pi i/4}: 3k - d, which must be even
            let w = (3 * k as i64 - d as i64).rem_euclid(8);
            if w % 2 != 0 {
                return Err(Error::InvalidArgument(format!(
                    "eighth roots fail to cancel in P_{{{n},{k}}} at x-degree {d}"
                )));
            }
            let root = GaussRational::i_pow(w / 2);
            let coef = &root * hc;
            for (j, qc) in q.coeffs().iter().enumerate() {
                out.add_term(d as u32, j as u32, &(&coef * qc));
            }
        }
    }
    Ok(out)
}

/// Alternate assembly of `P_{n,k}` through `s_{n,m}`:
/// `P_{n,k}(x, sigma) = (-1)^n i^k/(3n-k)! sum_m s_{n,m}(sigma)/(4i)^m x^{k-2m}/(k-2m)!`.
/// Kept as an independent route; both must agree exactly.
pub fn p_poly_via_s(n: u32, k: u32) -> Result<PnkPoly> {
    check_k_range(n, k)?;
    let mut out = BiPoly::zero();
    for m in 0..=(k / 2).min(3 * n / 2) {
        let s = s_poly(n, m)?;
        // (-1)^n i^k (4i)^{-m} / ((3n-k)! (k-2m)!)
        let mut c = GaussRational::i_pow(k as i64 - m as i64);
        let mut den = factorial(3 * n - k) * factorial(k - 2 * m);
        den *= BigInt::from(4).pow(m);
        c = &c * &g_from_rat(BigRational::new(BigInt::one(), den));
        if n % 2 == 1 {
            c = -&c;
        }
        for (j, sc) in s.coeffs().iter().enumerate() {
            out.add_term(k - 2 * m, j as u32, &(&c * sc));
        }
    }
    Ok(PnkPoly { n, k, poly: out })
}

/// Exact scalar value of `q_{n,3n-2l}` at a rational sigma; used by the
/// sigma-specialized assembly that keeps large-n builds cheap.
fn q_value_at(n: u32, ell: u32, sigma: &BigRational) -> BigRational {
    let key = (n, ell, sigma.numer().clone(), sigma.denom().clone());
    cached!(QV_CACHE, (u32, u32, BigInt, BigInt), BigRational, key, {
        q_value_at_uncached(n, ell, sigma)
    })
}

fn q_value_at_uncached(n: u32, ell: u32, sigma: &BigRational) -> BigRational {
    let sigma_owned = sigma.clone();
    let mut fb = BellTable::new(move |j: u32| f_poly(j).expect("j >= 1").eval_rational(&sigma_owned).re);
    let u_at = |m: u32, fb: &mut BellTable<BigRational>| -> BigRational {
        let mut acc = BigRational::zero();
        for k in 0..=m {
            acc += fb.value(m, k) / BigRational::from_integer(factorial(k));
        }
        acc * rat(-2, 1).pow(m as i32)
    };
    let d_at = |m: u32, r: u32| -> BigRational {
        d_poly(m, r).expect("r <= m").eval_rational(sigma).re
    };
    let mut acc = BigRational::zero();
    for m in ell.saturating_sub(n)..=(ell / 3) {
        let r = (n as i64 - ell as i64 + m as i64) as u32;
        acc += u_at(m, &mut fb) * d_at(n - 2 * m, r);
    }
    acc
}

/// `P_{n,k}(x, sigma0)` for an exact rational `sigma0`, as a polynomial in x.
/// Goes through the `s_{n,m}` route with scalar Bell tables, which stays fast
/// for n up to several tens.
pub fn p_poly_at_sigma(n: u32, k: u32, sigma: &BigRational) -> Result<UniPoly> {
    check_k_range(n, k)?;
    let key = (n, k, sigma.numer().clone(), sigma.denom().clone());
    Ok(cached!(PS_CACHE, (u32, u32, BigInt, BigInt), UniPoly, key, {
        let mut coeffs = vec![GaussRational::zero(); k as usize + 1];
        for m in 0..=(k / 2).min(3 * n / 2) {
            // s_{n,m}(sigma0) from scalar q values
            let mut sv = BigRational::zero();
            for l in 0..=m {
                let c = BigRational::new(
                    BigInt::from(4).pow(l) * factorial(3 * n - 2 * l),
                    factorial(m - l),
                );
                sv += c * q_value_at(n, l, sigma);
            }
            let mut c = GaussRational::i_pow(k as i64 - m as i64);
            let mut den = factorial(3 * n - k) * factorial(k - 2 * m);
            den *= BigInt::from(4).pow(m);
            c = &c * &g_from_rat(BigRational::new(BigInt::one(), den) * sv);
            if n % 2 == 1 {
                c = -&c;
            }
            coeffs[(k - 2 * m) as usize] = &coeffs[(k - 2 * m) as usize] + &c;
        }
        UniPoly::from_coeffs(coeffs)
    }))
}

/// Siegel's `a_k(s)` in the explicit Bell form, as data:
/// `a_k(s) = sum_r i^r d_{k-2r,r}(sigma) t^{r-k/2}`.
#[derive(Clone, Debug)]
pub struct AkCoeff {
    pub k: u32,
    /// (r, d_{k-2r,r}) pairs; the t-exponent of a term is r - k/2.
    pub terms: Vec<(u32, SigmaPoly)>,
}

impl AkCoeff {
    pub fn build(k: u32) -> Self {
        let mut terms = Vec::new();
        for r in 0..=(k / 3) {
            terms.push((r, d_poly(k - 2 * r, r).expect("r <= k - 2r for r <= k/3")));
        }
        AkCoeff { k, terms }
    }

    /// Numeric evaluation at `s`; requires `t = Im s > 0`.
    pub fn eval(&self, s: &WideComplex, cfg: &PrecisionConfig) -> Result<WideComplex> {
        let t = &s.im;
        if !t.is_positive() {
            return Err(Error::InvalidArgument("a_k(s) requires t > 0".into()));
        }
        let sigma = WideComplex::from_real(s.re.clone());
        let sqrt_t = t.sqrt();
        let mut acc = cfg.complex_i64(0, 0);
        for (r, d) in &self.terms {
            // t^{r - k/2} = sqrt(t)^{2r - k}
            let pw = sqrt_t.powi(2 * *r as i64 - self.k as i64);
            let term = (&d.eval_complex(&sigma, cfg) * &GaussRational::i_pow(*r as i64).to_complex(cfg))
                .scale(&pw);
            acc = &acc + &term;
        }
        Ok(acc)
    }
}

/// `a_k(s)` evaluated numerically from the Bell form.
pub fn a_k_eval(k: u32, s: &WideComplex, cfg: &PrecisionConfig) -> Result<WideComplex> {
    AkCoeff::build(k).eval(s, cfg)
}

/// Symbolic `a_k` as a Laurent polynomial in `w = t^{1/2}` over Q(i)[sigma]:
/// map from the w-power to the sigma-polynomial coefficient.
pub type AkSymbolic = std::collections::BTreeMap<i32, SigmaPoly>;

fn ak_insert(m: &mut AkSymbolic, pw: i32, p: &SigmaPoly) {
    if p.is_zero() {
        return;
    }
    let entry = m.entry(pw).or_insert_with(UniPoly::zero);
    *entry = entry.add(p);
    if entry.is_zero() {
        m.remove(&pw);
    }
}

/// Bell route, Eq-level: `a_k = sum_r i^r d_{k-2r,r}(sigma) w^{2r-k}`.
pub fn a_k_symbolic_bell(k: u32) -> AkSymbolic {
    let mut out = AkSymbolic::new();
    for (r, d) in AkCoeff::build(k).terms {
        let p = d.scale(&GaussRational::i_pow(r as i64));
        ak_insert(&mut out, 2 * r as i32 - k as i32, &p);
    }
    out
}

/// Recursion route: `(k+1) w a_{k+1} = -(k+1-sigma) a_k + i a_{k-2}`,
/// `a_{-2} = a_{-1} = 0`, `a_0 = 1`.
pub fn a_k_symbolic_recursion(k: u32) -> AkSymbolic {
    let mut hist: Vec<AkSymbolic> = Vec::with_capacity(k as usize + 1);
    for j in 0..=k {
        if j == 0 {
            let mut a0 = AkSymbolic::new();
            ak_insert(&mut a0, 0, &UniPoly::one());
            hist.push(a0);
            continue;
        }
        // a_j = [ (sigma - j) a_{j-1} + i a_{j-3} ] w^{-1} / j
        let mut next = AkSymbolic::new();
        let lin = UniPoly::from_coeffs(vec![
            GaussRational::from_i64(-(j as i64)),
            GaussRational::one(),
        ]);
        for (pw, p) in &hist[j as usize - 1] {
            ak_insert(&mut next, pw - 1, &lin.mul(p));
        }
        if j >= 3 {
            for (pw, p) in &hist[j as usize - 3] {
                ak_insert(&mut next, pw - 1, &p.scale(&GaussRational::i()));
            }
        }
        let inv = g_from_rat(rat(1, j as i64));
        let scaled: AkSymbolic =
            next.into_iter().map(|(pw, p)| (pw, p.scale(&inv))).collect();
        hist.push(scaled);
    }
    hist.pop().expect("k + 1 entries")
}

/// Classical Riemann-Siegel coefficient through the general machinery:
/// `C_n(a) = sum_{r=0}^{3n} G^{(r)}(2a; 1)/(2pi)^{r/2} P_{n,3n-r}(0, 1/2)`.
/// The Mordell derivatives are taken by quadrature, which keeps this route
/// independent of the closed-form Psi differentiation.
pub fn c_classical(n: u32, a: &WideReal, cfg: &PrecisionConfig) -> Result<WideComplex> {
    if a.is_negative() || *a >= cfg.real_i64(1) {
        return Err(Error::Domain("C_n(a) requires 0 <= a < 1".into()));
    }
    let half = rat(1, 2);
    let two_a = WideComplex::from_real(a + a);
    let tau = cfg.complex_i64(1, 0);
    let derivs = mordell::g_derivs(&two_a, &tau, 3 * n, cfg)?;
    let sqrt_2pi = cfg.two_pi().sqrt();
    let mut acc = cfg.complex_i64(0, 0);
    for r in 0..=(3 * n) {
        let p0 = p_poly_at_sigma(n, 3 * n - r, &half)?.coeff(0);
        if p0.is_zero() {
            continue;
        }
        let term = (&derivs[r as usize] * &p0.to_complex(cfg))
            .scale(&sqrt_2pi.powi(-(r as i64)));
        acc = &acc + &term;
    }
    Ok(acc)
}
