//! Precision contexts, the scalar abstraction shared by the exact and
//! floating backplanes, deterministic summation, and reference constants.

mod constants;
mod float;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use dashu::base::Abs;
use dashu::integer::{IBig, UBig};
use dashu::rational::RBig;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use constants::{
    bernoulli, const_catalan, const_gamma, const_ln2, const_pi, const_zeta, hurwitz_em,
    reference_literal, Constants, LITERALS,
};
pub use float::HighPrecFloat;

/// Guard bits carried on top of the requested decimal precision.
const GUARD_BITS: usize = 24;

/// Largest decimal precision a context accepts.
pub const MAX_DIGITS: u32 = 2000;

/// Numeric backplane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Mode {
    /// Native doubles with compensated summation.
    Fast,
    /// Software multiprecision at the requested digit count.
    High,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Fast => "FAST",
            Mode::High => "HIGH",
        })
    }
}

/// Working precision. Immutable once built.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrecisionContext {
    digits: u32,
    mode: Mode,
}

impl PrecisionContext {
    pub fn new(digits: u32, mode: Mode) -> Result<Self> {
        if digits < 15 {
            return Err(Error::Domain(format!("precision must be at least 15 digits, got {digits}")));
        }
        if digits > MAX_DIGITS {
            return Err(Error::Usage(format!(
                "precision {digits} exceeds the supported maximum of {MAX_DIGITS} digits"
            )));
        }
        Ok(PrecisionContext { digits, mode })
    }

    /// Double precision context.
    pub fn fast() -> Self {
        PrecisionContext { digits: 15, mode: Mode::Fast }
    }

    /// Multiprecision context at `digits` decimal digits.
    pub fn high(digits: u32) -> Result<Self> {
        Self::new(digits, Mode::High)
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// Decimal digits actually carried (fixed at double width in FAST mode).
    pub fn effective_digits(&self) -> u32 {
        match self.mode {
            Mode::Fast => 15,
            Mode::High => self.digits,
        }
    }

    /// Significand bits used for HIGH arithmetic.
    pub fn bits(&self) -> usize {
        match self.mode {
            Mode::Fast => 53,
            Mode::High => (self.digits as f64 * std::f64::consts::LOG2_10).ceil() as usize + GUARD_BITS,
        }
    }

    /// The same mode with extra decimal digits, for cancellation-prone stages.
    pub fn with_extra_digits(&self, extra: u32) -> Self {
        PrecisionContext { digits: self.digits.saturating_add(extra), mode: self.mode }
    }
}

/// Field operations shared by exact rationals and both floating backplanes.
pub trait Scalar:
    Clone
    + fmt::Debug
    + PartialEq
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn from_ibig(v: &IBig) -> Self;
    /// `q` rounded to the working precision of `ctx` (exact for rationals).
    fn from_rational(q: &RBig, ctx: &PrecisionContext) -> Self;
    fn is_zero(&self) -> bool;
    /// `exp(self)` when it is representable (for rationals only `exp(0) = 1`).
    fn try_exp(&self) -> Option<Self>;

    /// `sum += t`, carrying a compensation term on backplanes that round.
    fn add_compensated(sum: &mut Self, _comp: &mut Self, t: Self) {
        *sum = sum.clone() + t;
    }

    /// Integer power with a non-negative exponent.
    fn pow_u(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

impl Scalar for RBig {
    fn zero() -> Self {
        RBig::ZERO
    }
    fn one() -> Self {
        RBig::ONE
    }
    fn from_i64(v: i64) -> Self {
        RBig::from(v)
    }
    fn from_ibig(v: &IBig) -> Self {
        RBig::from(v.clone())
    }
    fn from_rational(q: &RBig, _ctx: &PrecisionContext) -> Self {
        q.clone()
    }
    fn is_zero(&self) -> bool {
        *self == RBig::ZERO
    }
    fn try_exp(&self) -> Option<Self> {
        self.is_zero().then_some(RBig::ONE)
    }
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_i64(v: i64) -> Self {
        v as f64
    }
    fn from_ibig(v: &IBig) -> Self {
        v.to_f64().value()
    }
    fn from_rational(q: &RBig, _ctx: &PrecisionContext) -> Self {
        q.to_f64().value()
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn try_exp(&self) -> Option<Self> {
        Some(f64::exp(*self))
    }
    fn add_compensated(sum: &mut Self, comp: &mut Self, t: Self) {
        let s = *sum + t;
        if sum.abs() >= t.abs() {
            *comp += (*sum - s) + t;
        } else {
            *comp += (t - s) + *sum;
        }
        *sum = s;
    }
}

impl Scalar for HighPrecFloat {
    fn zero() -> Self {
        HighPrecFloat::zero()
    }
    fn one() -> Self {
        HighPrecFloat::one()
    }
    fn from_i64(v: i64) -> Self {
        HighPrecFloat::exact_int(&IBig::from(v))
    }
    fn from_ibig(v: &IBig) -> Self {
        HighPrecFloat::exact_int(v)
    }
    fn from_rational(q: &RBig, ctx: &PrecisionContext) -> Self {
        HighPrecFloat::from_rational(q, ctx.bits())
    }
    fn is_zero(&self) -> bool {
        HighPrecFloat::is_zero(self)
    }
    fn try_exp(&self) -> Option<Self> {
        Some(if HighPrecFloat::is_zero(self) { HighPrecFloat::one() } else { HighPrecFloat::exp(self) })
    }
}

/// A floating backplane: f64 in FAST mode, `HighPrecFloat` in HIGH mode.
pub trait Real: Scalar + PartialOrd {
    /// An integer at working precision.
    fn int(v: i64, ctx: &PrecisionContext) -> Self;
    /// Re-round a multiprecision value into this backplane.
    fn from_high(v: &HighPrecFloat, ctx: &PrecisionContext) -> Self;
    fn to_f64(&self) -> f64;
    fn to_high(&self) -> HighPrecFloat;
    fn abs(&self) -> Self;
    fn ln(&self) -> Self;
    fn exp(&self) -> Self;
    fn sqrt(&self) -> Self;
    fn powi(&self, n: i64) -> Self;
    fn is_finite(&self) -> bool;
    /// Unit roundoff of the backplane.
    fn epsilon(ctx: &PrecisionContext) -> Self;

    fn ratio(p: i64, q: i64, ctx: &PrecisionContext) -> Self {
        Self::from_rational(&rat(p, q), ctx)
    }

    /// `self^e` for real `e` and positive `self`.
    fn powf(&self, e: &Self) -> Self {
        (e.clone() * self.ln()).exp()
    }
}

impl Real for f64 {
    fn int(v: i64, _ctx: &PrecisionContext) -> Self {
        v as f64
    }
    fn from_high(v: &HighPrecFloat, _ctx: &PrecisionContext) -> Self {
        v.to_f64()
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn to_high(&self) -> HighPrecFloat {
        HighPrecFloat::from_f64(*self)
    }
    fn abs(&self) -> Self {
        f64::abs(*self)
    }
    fn ln(&self) -> Self {
        f64::ln(*self)
    }
    fn exp(&self) -> Self {
        f64::exp(*self)
    }
    fn sqrt(&self) -> Self {
        f64::sqrt(*self)
    }
    fn powi(&self, n: i64) -> Self {
        match i32::try_from(n) {
            Ok(n) => f64::powi(*self, n),
            Err(_) => f64::powf(*self, n as f64),
        }
    }
    fn is_finite(&self) -> bool {
        f64::is_finite(*self)
    }
    fn epsilon(_ctx: &PrecisionContext) -> Self {
        f64::EPSILON / 2.0
    }
    fn powf(&self, e: &Self) -> Self {
        f64::powf(*self, *e)
    }
}

impl Real for HighPrecFloat {
    fn int(v: i64, ctx: &PrecisionContext) -> Self {
        HighPrecFloat::from_ibig(&IBig::from(v), ctx.bits())
    }
    fn from_high(v: &HighPrecFloat, ctx: &PrecisionContext) -> Self {
        v.with_bits(ctx.bits())
    }
    fn to_f64(&self) -> f64 {
        HighPrecFloat::to_f64(self)
    }
    fn to_high(&self) -> HighPrecFloat {
        self.clone()
    }
    fn abs(&self) -> Self {
        HighPrecFloat::abs(self)
    }
    fn ln(&self) -> Self {
        HighPrecFloat::ln(self)
    }
    fn exp(&self) -> Self {
        HighPrecFloat::exp(self)
    }
    fn sqrt(&self) -> Self {
        HighPrecFloat::sqrt(self)
    }
    fn powi(&self, n: i64) -> Self {
        HighPrecFloat::powi(self, n)
    }
    fn is_finite(&self) -> bool {
        true
    }
    fn epsilon(ctx: &PrecisionContext) -> Self {
        HighPrecFloat::from_ibig(&IBig::ONE, ctx.bits()) / HighPrecFloat::exact_int(&(IBig::ONE << ctx.bits()))
    }
}

/// Neumaier's compensated running sum.
#[derive(Debug, Clone)]
pub struct CompensatedSum<R: Real> {
    sum: R,
    comp: R,
}

impl<R: Real> Default for CompensatedSum<R> {
    fn default() -> Self {
        Self::new()
    }
}

impl<R: Real> CompensatedSum<R> {
    pub fn new() -> Self {
        CompensatedSum { sum: R::zero(), comp: R::zero() }
    }

    pub fn add(&mut self, t: R) {
        let s = self.sum.clone() + t.clone();
        if self.sum.abs() >= t.abs() {
            self.comp = self.comp.clone() + ((self.sum.clone() - s.clone()) + t);
        } else {
            self.comp = self.comp.clone() + ((t - s.clone()) + self.sum.clone());
        }
        self.sum = s;
    }

    pub fn value(&self) -> R {
        self.sum.clone() + self.comp.clone()
    }
}

fn checked_sum<R: Real>(terms: &[HighPrecFloat], ctx: &PrecisionContext) -> Result<R> {
    let mut acc = CompensatedSum::<R>::new();
    for (i, t) in terms.iter().enumerate() {
        let v = R::from_high(t, ctx);
        if !v.is_finite() {
            return Err(Error::Numeric(format!("term {i} is not finite in {} mode", ctx.mode())));
        }
        acc.add(v);
    }
    let total = acc.value();
    if !total.is_finite() {
        return Err(Error::Numeric("sum overflowed".into()));
    }
    Ok(total)
}

/// Compensated sum taken in the given order.
pub fn sum_deterministic(terms: &[HighPrecFloat], ctx: &PrecisionContext) -> Result<HighPrecFloat> {
    match ctx.mode() {
        Mode::Fast => checked_sum::<f64>(terms, ctx).map(|v| v.to_high()),
        Mode::High => checked_sum::<HighPrecFloat>(terms, ctx),
    }
}

/// Return contract of every series evaluator.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesResult {
    pub value: HighPrecFloat,
    pub terms_used: usize,
    pub tail_estimate: HighPrecFloat,
    pub mode: Mode,
}

/// `n!` exactly.
pub fn factorial(n: u64) -> UBig {
    (1..=n).fold(UBig::ONE, |acc, k| acc * UBig::from(k))
}

/// `C(n, k)` by the exact multiplicative formula.
pub fn binomial(n: u64, k: u64) -> UBig {
    if k > n {
        return UBig::ZERO;
    }
    let k = k.min(n - k);
    let mut acc = UBig::ONE;
    for i in 0..k {
        acc = acc * UBig::from(n - i) / UBig::from(i + 1);
    }
    acc
}

/// Row `C(n, 0..=n)`.
pub fn binomial_row(n: u64) -> Vec<UBig> {
    let mut row = Vec::with_capacity(n as usize + 1);
    let mut c = UBig::ONE;
    row.push(c.clone());
    for k in 0..n {
        c = c * UBig::from(n - k) / UBig::from(k + 1);
        row.push(c.clone());
    }
    row
}

/// Shorthand for the rational `p/q`.
pub fn rat(p: i64, q: i64) -> RBig {
    assert!(q != 0, "zero denominator");
    let r = RBig::from_parts(IBig::from(p), UBig::from(q.unsigned_abs()));
    if q < 0 {
        -r
    } else {
        r
    }
}

/// `|q|` for a rational.
pub fn rabs(q: &RBig) -> RBig {
    q.clone().abs()
}

/// Evaluate `f` on the backplane selected by `ctx` and return a multiprecision value.
#[macro_export]
#[doc(hidden)]
macro_rules! by_mode {
    ($ctx:expr, $f:ident ( $($arg:expr),* $(,)? )) => {
        match $ctx.mode() {
            $crate::numerics::Mode::Fast => $f::<f64>($($arg),*).map(|v| $crate::numerics::Real::to_high(&v)),
            $crate::numerics::Mode::High => $f::<$crate::numerics::HighPrecFloat>($($arg),*),
        }
    };
}
