//! Software wide-precision real and complex scalars.
//!
//! `WideReal` wraps an arbitrary-precision binary float. Every value carries
//! the working precision in bits; binary operations use the larger precision
//! of the two operands and round to nearest-even. For a fixed
//! [`PrecisionConfig`] the same sequence of operations on the same inputs
//! produces bit-identical results.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign};
use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};

const RM: RoundingMode = RoundingMode::ToEven;
const LOG2_10: f64 = 3.321928094887362;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constants cache"));
}

fn with_consts<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

/// Working precision for all numeric kernels.
///
/// `digits` is the number of significant decimal digits the caller wants to
/// trust in well-conditioned results. Internally ten guard digits are carried
/// on top of that. `fast_mode` switches to a 53-bit (binary64-equivalent)
/// mantissa with all tolerances relaxed accordingly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrecisionConfig {
    digits: u32,
    fast_mode: bool,
}

impl PrecisionConfig {
    /// At least 15 significant digits are required.
    pub fn new(digits: u32) -> Result<Self> {
        if digits < 15 {
            return Err(Error::InvalidArgument(format!(
                "precision must be at least 15 digits, got {digits}"
            )));
        }
        Ok(PrecisionConfig { digits, fast_mode: false })
    }

    /// Hardware-width (binary64 equivalent) mantissa, relaxed tolerances.
    pub fn fast() -> Self {
        PrecisionConfig { digits: 15, fast_mode: true }
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn fast_mode(&self) -> bool {
        self.fast_mode
    }

    /// Mantissa size in bits, including guard digits.
    pub fn bits(&self) -> usize {
        if self.fast_mode {
            53
        } else {
            ((self.digits as f64 + 10.0) * LOG2_10).ceil() as usize
        }
    }

    /// Default relative tolerance for quadrature-backed values:
    /// `10^-(digits-15)` capped below at `10^-10`.
    pub fn quad_target(&self) -> WideReal {
        let e = -(self.digits as i64 - 15).max(10);
        self.pow10(e)
    }

    /// `10^e` at working precision.
    pub fn pow10(&self, e: i64) -> WideReal {
        let ten = self.real_i64(10);
        ten.powi(e)
    }

    pub fn real_i64(&self, v: i64) -> WideReal {
        WideReal { x: BigFloat::from_i64(v, self.bits()), p: self.bits() }
    }

    pub fn real_f64(&self, v: f64) -> WideReal {
        WideReal { x: BigFloat::from_f64(v, self.bits()), p: self.bits() }
    }

    /// Parse a decimal literal at working precision.
    pub fn real_str(&self, s: &str) -> Result<WideReal> {
        let x = with_consts(|cc| BigFloat::parse(s, Radix::Dec, self.bits(), RM, cc));
        if x.is_nan() {
            return Err(Error::InvalidArgument(format!("cannot parse number: {s:?}")));
        }
        Ok(WideReal { x, p: self.bits() })
    }

    /// Exact conversion of a big integer, rounded to working precision.
    pub fn real_bigint(&self, v: &BigInt) -> WideReal {
        let (sign, digits) = v.to_u64_digits();
        if digits.is_empty() {
            return self.real_i64(0);
        }
        let s = if sign == num_bigint::Sign::Minus { Sign::Neg } else { Sign::Pos };
        let e = (digits.len() * 64) as i32;
        let mut x = BigFloat::from_words(&digits, s, e);
        // from_words keeps full input width; round to working precision
        if x.mantissa_max_bit_len().unwrap_or(0) > self.bits() {
            x.set_precision(self.bits(), RM).expect("set precision");
        }
        WideReal { x, p: self.bits() }
    }

    /// `num/den` evaluated at working precision.
    pub fn real_rational(&self, v: &BigRational) -> WideReal {
        let n = self.real_bigint(v.numer());
        let d = self.real_bigint(v.denom());
        &n / &d
    }

    pub fn pi(&self) -> WideReal {
        let x = with_consts(|cc| cc.pi(self.bits(), RM));
        WideReal { x, p: self.bits() }
    }

    pub fn two_pi(&self) -> WideReal {
        &self.pi() * &self.real_i64(2)
    }

    pub fn complex(&self, re: WideReal, im: WideReal) -> WideComplex {
        WideComplex { re, im }
    }

    pub fn complex_i64(&self, re: i64, im: i64) -> WideComplex {
        WideComplex { re: self.real_i64(re), im: self.real_i64(im) }
    }

    /// The imaginary unit.
    pub fn i(&self) -> WideComplex {
        self.complex_i64(0, 1)
    }

    /// `exp(i pi w)` for real `w`, the workhorse phase factor.
    pub fn exp_pi_i(&self, w: &WideReal) -> WideComplex {
        let arg = &self.pi() * w;
        WideComplex { re: arg.cos(), im: arg.sin() }
    }
}

/// Wide-precision real scalar.
#[derive(Clone)]
pub struct WideReal {
    x: BigFloat,
    p: usize,
}

impl WideReal {
    fn wrap(x: BigFloat, p: usize) -> Self {
        WideReal { x, p }
    }

    pub fn precision_bits(&self) -> usize {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero()
    }

    pub fn is_nan(&self) -> bool {
        self.x.is_nan()
    }

    pub fn is_negative(&self) -> bool {
        self.x.is_negative() && !self.x.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.x.is_positive() && !self.x.is_zero()
    }

    pub fn abs(&self) -> WideReal {
        let mut y = self.x.clone();
        y.set_sign(Sign::Pos);
        WideReal::wrap(y, self.p)
    }

    pub fn sqrt(&self) -> WideReal {
        WideReal::wrap(self.x.sqrt(self.p, RM), self.p)
    }

    pub fn exp(&self) -> WideReal {
        WideReal::wrap(with_consts(|cc| self.x.exp(self.p, RM, cc)), self.p)
    }

    pub fn ln(&self) -> WideReal {
        WideReal::wrap(with_consts(|cc| self.x.ln(self.p, RM, cc)), self.p)
    }

    pub fn sin(&self) -> WideReal {
        WideReal::wrap(with_consts(|cc| self.x.sin(self.p, RM, cc)), self.p)
    }

    pub fn cos(&self) -> WideReal {
        WideReal::wrap(with_consts(|cc| self.x.cos(self.p, RM, cc)), self.p)
    }

    pub fn atan(&self) -> WideReal {
        WideReal::wrap(with_consts(|cc| self.x.atan(self.p, RM, cc)), self.p)
    }

    /// Two-argument arctangent with the usual quadrant conventions.
    pub fn atan2(y: &WideReal, x: &WideReal) -> WideReal {
        let p = y.p.max(x.p);
        let pi = WideReal::wrap(with_consts(|cc| cc.pi(p, RM)), p);
        if x.is_zero() && y.is_zero() {
            return WideReal::wrap(BigFloat::from_i64(0, p), p);
        }
        if x.is_zero() {
            let mut h = &pi / &WideReal::wrap(BigFloat::from_i64(2, p), p);
            if y.is_negative() {
                h = -&h;
            }
            return h;
        }
        let base = (y / x).atan();
        if x.is_positive() {
            base
        } else if y.is_negative() {
            &base - &pi
        } else {
            &base + &pi
        }
    }

    /// Integer power by binary exponentiation (exact exponent, no logs).
    pub fn powi(&self, n: i64) -> WideReal {
        if n == 0 {
            return WideReal::wrap(BigFloat::from_i64(1, self.p), self.p);
        }
        let mut base = if n < 0 {
            WideReal::wrap(self.x.reciprocal(self.p, RM), self.p)
        } else {
            self.clone()
        };
        let mut e = n.unsigned_abs();
        let mut acc = WideReal::wrap(BigFloat::from_i64(1, self.p), self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// `self^y` for positive `self`, evaluated as `exp(y ln self)`.
    pub fn pow(&self, y: &WideReal) -> Result<WideReal> {
        if !self.is_positive() {
            return Err(Error::Domain("pow requires a positive base".into()));
        }
        Ok((y * &self.ln()).exp())
    }

    pub fn floor(&self) -> WideReal {
        WideReal::wrap(self.x.floor(), self.p)
    }

    /// Floor as an `i64`. Errors when the value does not fit.
    pub fn floor_i64(&self) -> Result<i64> {
        let f = self.x.floor();
        if f.is_zero() {
            return Ok(0);
        }
        let (words, _len, sign, e, _) = f
            .as_raw_parts()
            .ok_or_else(|| Error::Domain("floor of a non-finite value".into()))?;
        if e <= 0 {
            return Ok(0);
        }
        if e > 62 {
            return Err(Error::Domain(format!("floor does not fit in i64 (exponent {e})")));
        }
        let top = *words.last().expect("nonzero mantissa");
        let v = (top >> (64 - e as u32)) as i64;
        Ok(if sign == Sign::Neg { -v } else { v })
    }

    /// Nearest `f64`, for diagnostics and regression fits only.
    pub fn to_f64(&self) -> f64 {
        match self.x.as_raw_parts() {
            None => f64::NAN,
            Some((words, _len, sign, e, _)) => {
                if words.is_empty() || self.x.is_zero() {
                    return 0.0;
                }
                let top = *words.last().unwrap();
                let next = if words.len() > 1 { words[words.len() - 2] } else { 0 };
                let frac = (top as f64) / 2f64.powi(64) + (next as f64) / 2f64.powi(128);
                let v = frac * 2f64.powi(e);
                if sign == Sign::Neg {
                    -v
                } else {
                    v
                }
            }
        }
    }

    /// Decimal string at full stored precision.
    pub fn to_decimal_string(&self) -> String {
        with_consts(|cc| self.x.format(Radix::Dec, RM, cc)).unwrap_or_else(|_| "NaN".into())
    }
}

macro_rules! real_binop {
    ($trait:ident, $method:ident, $call:ident) => {
        impl $trait<&WideReal> for &WideReal {
            type Output = WideReal;
            fn $method(self, rhs: &WideReal) -> WideReal {
                let p = self.p.max(rhs.p);
                WideReal::wrap(self.x.$call(&rhs.x, p, RM), p)
            }
        }
        impl $trait<WideReal> for WideReal {
            type Output = WideReal;
            fn $method(self, rhs: WideReal) -> WideReal {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&WideReal> for WideReal {
            type Output = WideReal;
            fn $method(self, rhs: &WideReal) -> WideReal {
                (&self).$method(rhs)
            }
        }
        impl $trait<WideReal> for &WideReal {
            type Output = WideReal;
            fn $method(self, rhs: WideReal) -> WideReal {
                self.$method(&rhs)
            }
        }
    };
}

real_binop!(Add, add, add);
real_binop!(Sub, sub, sub);
real_binop!(Mul, mul, mul);
real_binop!(Div, div, div);

impl Neg for &WideReal {
    type Output = WideReal;
    fn neg(self) -> WideReal {
        WideReal::wrap(BigFloat::neg(&self.x), self.p)
    }
}

impl Neg for WideReal {
    type Output = WideReal;
    fn neg(self) -> WideReal {
        -&self
    }
}

impl PartialEq for WideReal {
    fn eq(&self, other: &Self) -> bool {
        matches!(self.x.cmp(&other.x), Some(0))
    }
}

impl PartialOrd for WideReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.x.cmp(&other.x).map(|c| c.cmp(&0))
    }
}

impl fmt::Debug for WideReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal_string())
    }
}

impl fmt::Display for WideReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal_string())
    }
}

/// Wide-precision complex scalar; both parts share one precision.
#[derive(Clone, PartialEq)]
pub struct WideComplex {
    pub re: WideReal,
    pub im: WideReal,
}

impl WideComplex {
    pub fn new(re: WideReal, im: WideReal) -> Self {
        WideComplex { re, im }
    }

    pub fn from_real(re: WideReal) -> Self {
        let p = re.p;
        WideComplex { im: WideReal::wrap(BigFloat::from_i64(0, p), p), re }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_nan(&self) -> bool {
        self.re.is_nan() || self.im.is_nan()
    }

    pub fn conj(&self) -> WideComplex {
        WideComplex { re: self.re.clone(), im: -&self.im }
    }

    /// Multiplication by the imaginary unit.
    pub fn mul_i(&self) -> WideComplex {
        WideComplex { re: -&self.im, im: self.re.clone() }
    }

    pub fn scale(&self, c: &WideReal) -> WideComplex {
        WideComplex { re: &self.re * c, im: &self.im * c }
    }

    pub fn abs(&self) -> WideReal {
        (&(&self.re * &self.re) + &(&self.im * &self.im)).sqrt()
    }

    /// Principal argument in (-pi, pi].
    pub fn arg(&self) -> WideReal {
        WideReal::atan2(&self.im, &self.re)
    }

    pub fn exp(&self) -> WideComplex {
        let m = self.re.exp();
        WideComplex { re: &m * &self.im.cos(), im: &m * &self.im.sin() }
    }

    /// Principal logarithm.
    pub fn ln(&self) -> WideComplex {
        WideComplex { re: self.abs().ln(), im: self.arg() }
    }

    /// Principal square root.
    pub fn sqrt(&self) -> WideComplex {
        if self.im.is_zero() && !self.re.is_negative() {
            return WideComplex::from_real(self.re.sqrt());
        }
        self.ln().scale_div2().exp()
    }

    fn scale_div2(&self) -> WideComplex {
        let p = self.re.p;
        let two = WideReal::wrap(BigFloat::from_i64(2, p), p);
        WideComplex { re: &self.re / &two, im: &self.im / &two }
    }

    /// `self^w` via the principal branch, `exp(w ln self)`.
    pub fn pow(&self, w: &WideComplex) -> WideComplex {
        (w * &self.ln()).exp()
    }

    /// Integer power by binary exponentiation.
    pub fn powi(&self, n: i64) -> WideComplex {
        let p = self.re.p;
        let one = WideComplex::from_real(WideReal::wrap(BigFloat::from_i64(1, p), p));
        if n == 0 {
            return one;
        }
        let mut base = if n < 0 { &one / self } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = one;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn cos(&self) -> WideComplex {
        // cos z = (e^{iz} + e^{-iz})/2
        let e1 = self.mul_i().exp();
        let e2 = (-&self.mul_i()).exp();
        (&e1 + &e2).scale_div2()
    }

    pub fn sin(&self) -> WideComplex {
        // sin z = (e^{iz} - e^{-iz})/(2i), and 1/i = -i
        let e1 = self.mul_i().exp();
        let e2 = (-&self.mul_i()).exp();
        -(&e1 - &e2).scale_div2().mul_i()
    }
}

impl Add<&WideComplex> for &WideComplex {
    type Output = WideComplex;
    fn add(self, rhs: &WideComplex) -> WideComplex {
        WideComplex { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Sub<&WideComplex> for &WideComplex {
    type Output = WideComplex;
    fn sub(self, rhs: &WideComplex) -> WideComplex {
        WideComplex { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Mul<&WideComplex> for &WideComplex {
    type Output = WideComplex;
    fn mul(self, rhs: &WideComplex) -> WideComplex {
        WideComplex {
            re: &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            im: &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        }
    }
}

impl Div<&WideComplex> for &WideComplex {
    type Output = WideComplex;
    fn div(self, rhs: &WideComplex) -> WideComplex {
        let d = &(&rhs.re * &rhs.re) + &(&rhs.im * &rhs.im);
        let num = self * &rhs.conj();
        WideComplex { re: &num.re / &d, im: &num.im / &d }
    }
}

impl Neg for &WideComplex {
    type Output = WideComplex;
    fn neg(self) -> WideComplex {
        WideComplex { re: -&self.re, im: -&self.im }
    }
}

macro_rules! complex_value_ops {
    ($trait:ident, $method:ident) => {
        impl $trait<WideComplex> for WideComplex {
            type Output = WideComplex;
            fn $method(self, rhs: WideComplex) -> WideComplex {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&WideComplex> for WideComplex {
            type Output = WideComplex;
            fn $method(self, rhs: &WideComplex) -> WideComplex {
                (&self).$method(rhs)
            }
        }
        impl $trait<WideComplex> for &WideComplex {
            type Output = WideComplex;
            fn $method(self, rhs: WideComplex) -> WideComplex {
                self.$method(&rhs)
            }
        }
    };
}

complex_value_ops!(Add, add);
complex_value_ops!(Sub, sub);
complex_value_ops!(Mul, mul);
complex_value_ops!(Div, div);

impl Neg for WideComplex {
    type Output = WideComplex;
    fn neg(self) -> WideComplex {
        -&self
    }
}

impl fmt::Debug for WideComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.re, self.im)
    }
}

impl fmt::Display for WideComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.re, self.im)
    }
}
