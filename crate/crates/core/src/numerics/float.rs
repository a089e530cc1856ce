//! Multiprecision binary floating point value used by the HIGH backplane.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use dashu::base::{Abs, SquareRoot};
use dashu::float::round::mode::HalfEven;
use dashu::float::{Context, FBig};
use dashu::integer::IBig;
use dashu::rational::RBig;

type Fb = FBig<HalfEven, 2>;

/// Precision used when two exact (unlimited precision) operands are divided.
pub(crate) const FALLBACK_BITS: usize = 128;

/// A binary floating point number with an explicit significand precision.
///
/// Values built from small integers are exact and carry no precision of their
/// own; in mixed arithmetic they adopt the precision of the other operand.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct HighPrecFloat(Fb);

impl HighPrecFloat {
    pub fn zero() -> Self {
        HighPrecFloat(Fb::ZERO)
    }

    pub fn one() -> Self {
        HighPrecFloat(Fb::ONE)
    }

    /// Exact integer with unlimited precision.
    pub fn exact_int(v: &IBig) -> Self {
        HighPrecFloat(Fb::from(v.clone()).with_precision(0).value())
    }

    /// Exact integer rounded to `bits` of precision.
    pub fn from_ibig(v: &IBig, bits: usize) -> Self {
        HighPrecFloat(Fb::from(v.clone()).with_precision(bits).value())
    }

    /// The exact value of a finite double, carrying 53 bits of precision.
    pub fn from_f64(v: f64) -> Self {
        match Fb::try_from(v) {
            Ok(f) => HighPrecFloat(f),
            Err(_) => panic!("non-finite double {v} has no multiprecision counterpart"),
        }
    }

    /// `q` correctly rounded to `bits` of precision.
    pub fn from_rational(q: &RBig, bits: usize) -> Self {
        let ctx = Context::<HalfEven>::new(bits);
        let num = Fb::from(q.numerator().clone());
        let den = Fb::from(IBig::from(q.denominator().clone()));
        HighPrecFloat(ctx.div(num.repr(), den.repr()).value())
    }

    /// Parses a plain decimal literal such as `-0.125` or `42`, rounded to `bits`.
    pub fn parse_decimal(s: &str, bits: usize) -> Option<Self> {
        let s = s.trim();
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s.strip_prefix('+').unwrap_or(s)),
        };
        let (int, frac) = body.split_once('.').unwrap_or((body, ""));
        if int.is_empty() && frac.is_empty() {
            return None;
        }
        if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
            return None;
        }
        let digits = format!("{int}{frac}");
        let mut num: IBig = digits.trim_start_matches('0').parse().unwrap_or(IBig::ZERO);
        if neg {
            num = -num;
        }
        let den = dashu::integer::UBig::from(10u8).pow(frac.len());
        Some(Self::from_rational(&RBig::from_parts(num, den), bits))
    }

    /// Re-round to a new precision.
    pub fn with_bits(&self, bits: usize) -> Self {
        HighPrecFloat(self.0.clone().with_precision(bits).value())
    }

    /// Significand precision in bits; zero means exact.
    pub fn bits(&self) -> usize {
        self.0.precision()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().value()
    }

    pub fn is_zero(&self) -> bool {
        self.0 == Fb::ZERO
    }

    pub fn is_negative(&self) -> bool {
        self.0 < Fb::ZERO
    }

    pub fn abs(&self) -> Self {
        HighPrecFloat(self.0.clone().abs())
    }

    fn working(&self) -> Fb {
        if self.0.precision() == 0 {
            self.0.clone().with_precision(FALLBACK_BITS).value()
        } else {
            self.0.clone()
        }
    }

    pub fn ln(&self) -> Self {
        HighPrecFloat(self.working().ln())
    }

    pub fn exp(&self) -> Self {
        HighPrecFloat(self.working().exp())
    }

    pub fn sqrt(&self) -> Self {
        HighPrecFloat(self.working().sqrt())
    }

    pub fn powi(&self, n: i64) -> Self {
        if n >= 0 {
            HighPrecFloat(self.0.powi(IBig::from(n)))
        } else {
            HighPrecFloat(self.working().powi(IBig::from(-n))).recip()
        }
    }

    pub fn recip(&self) -> Self {
        HighPrecFloat::one() / self.clone()
    }

    /// Nearest integer.
    pub fn round_to_int(&self) -> IBig {
        self.0.round().to_int().value()
    }

    /// Fixed-point decimal rendering with exactly `decimals` digits after the point.
    ///
    /// The value must carry enough precision for the requested digits.
    pub fn to_fixed(&self, decimals: usize) -> String {
        let scale = HighPrecFloat::exact_int(&IBig::from(10u8).pow(decimals));
        let scaled = (self.clone() * scale).round_to_int();
        let negative = scaled < IBig::ZERO;
        let digits = if negative { (-scaled).to_string() } else { scaled.to_string() };
        let digits = format!("{digits:0>width$}", width = decimals + 1);
        let (int_part, frac_part) = digits.split_at(digits.len() - decimals);
        let sign = if negative { "-" } else { "" };
        if decimals == 0 {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{frac_part}")
        }
    }

    /// Scientific rendering `d.ddd…e±X` with `sig` significant digits.
    pub fn to_sci(&self, sig: usize) -> String {
        let sig = sig.max(1);
        if self.is_zero() {
            return "0".to_string();
        }
        let magnitude = self.abs();
        let estimate = magnitude.to_f64();
        let mut exp10: i64 = if estimate.is_finite() && estimate > 0.0 {
            estimate.log10().floor() as i64
        } else {
            0
        };
        let lower = IBig::from(10u8).pow(sig - 1);
        let upper = IBig::from(10u8).pow(sig);
        let mut mantissa = IBig::ZERO;
        for _ in 0..4 {
            let shift = sig as i64 - 1 - exp10;
            let scaled = if shift >= 0 {
                magnitude.clone() * HighPrecFloat::exact_int(&IBig::from(10u8).pow(shift as usize))
            } else {
                magnitude.clone() / HighPrecFloat::exact_int(&IBig::from(10u8).pow((-shift) as usize))
            };
            mantissa = scaled.round_to_int();
            if mantissa >= upper {
                exp10 += 1;
            } else if mantissa < lower {
                exp10 -= 1;
            } else {
                break;
            }
        }
        let digits = mantissa.to_string();
        let sign = if self.is_negative() { "-" } else { "" };
        let (lead, rest) = digits.split_at(1);
        if rest.is_empty() {
            format!("{sign}{lead}e{exp10}")
        } else {
            format!("{sign}{lead}.{rest}e{exp10}")
        }
    }
}

impl Default for HighPrecFloat {
    fn default() -> Self {
        HighPrecFloat::zero()
    }
}

impl fmt::Debug for HighPrecFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sig = if self.bits() == 0 { 40 } else { (self.bits() as f64 * std::f64::consts::LOG10_2) as usize };
        write!(f, "HighPrecFloat({}, {} bits)", self.to_sci(sig.max(1)), self.bits())
    }
}

impl fmt::Display for HighPrecFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sig = if self.bits() == 0 { 40 } else { (self.bits() as f64 * std::f64::consts::LOG10_2) as usize };
        f.write_str(&self.to_sci(sig.max(1)))
    }
}

impl PartialEq<f64> for HighPrecFloat {
    fn eq(&self, other: &f64) -> bool {
        other.is_finite() && *self == HighPrecFloat::from_f64(*other)
    }
}

impl PartialOrd<f64> for HighPrecFloat {
    fn partial_cmp(&self, other: &f64) -> Option<Ordering> {
        if other.is_nan() {
            None
        } else if other.is_infinite() {
            Some(if *other > 0.0 { Ordering::Less } else { Ordering::Greater })
        } else {
            self.partial_cmp(&HighPrecFloat::from_f64(*other))
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for HighPrecFloat {
            type Output = HighPrecFloat;
            fn $method(self, rhs: HighPrecFloat) -> HighPrecFloat {
                HighPrecFloat($trait::$method(self.0, rhs.0))
            }
        }
        impl<'a> $trait<&'a HighPrecFloat> for HighPrecFloat {
            type Output = HighPrecFloat;
            fn $method(self, rhs: &'a HighPrecFloat) -> HighPrecFloat {
                HighPrecFloat($trait::$method(self.0, &rhs.0))
            }
        }
        impl<'a, 'b> $trait<&'b HighPrecFloat> for &'a HighPrecFloat {
            type Output = HighPrecFloat;
            fn $method(self, rhs: &'b HighPrecFloat) -> HighPrecFloat {
                HighPrecFloat($trait::$method(&self.0, &rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div for HighPrecFloat {
    type Output = HighPrecFloat;
    fn div(self, rhs: HighPrecFloat) -> HighPrecFloat {
        if self.0.precision() == 0 && rhs.0.precision() == 0 {
            HighPrecFloat(self.working() / rhs.0)
        } else {
            HighPrecFloat(self.0 / rhs.0)
        }
    }
}

impl<'a> Div<&'a HighPrecFloat> for HighPrecFloat {
    type Output = HighPrecFloat;
    fn div(self, rhs: &'a HighPrecFloat) -> HighPrecFloat {
        self / rhs.clone()
    }
}

impl<'b> Div<&'b HighPrecFloat> for &HighPrecFloat {
    type Output = HighPrecFloat;
    fn div(self, rhs: &'b HighPrecFloat) -> HighPrecFloat {
        self.clone() / rhs.clone()
    }
}

impl Neg for HighPrecFloat {
    type Output = HighPrecFloat;
    fn neg(self) -> HighPrecFloat {
        HighPrecFloat(-self.0)
    }
}

impl Neg for &HighPrecFloat {
    type Output = HighPrecFloat;
    fn neg(self) -> HighPrecFloat {
        HighPrecFloat(-self.0.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_operands_adopt_working_precision() {
        let third = HighPrecFloat::from_rational(&RBig::from_parts(1.into(), 3u8.into()), 200);
        let two = HighPrecFloat::exact_int(&IBig::from(2));
        assert_eq!((two.clone() * third.clone()).bits(), 200);
        assert_eq!((two.clone() + two.clone()).bits(), 0);
        assert_eq!((two.clone() / HighPrecFloat::exact_int(&IBig::from(3))).bits(), FALLBACK_BITS);
    }

    #[test]
    fn fixed_rendering_rounds_last_digit() {
        let x = HighPrecFloat::from_rational(&RBig::from_parts(2.into(), 3u8.into()), 120);
        assert_eq!(x.to_fixed(5), "0.66667");
        assert_eq!((-x.clone()).to_fixed(3), "-0.667");
        assert_eq!(HighPrecFloat::exact_int(&IBig::from(42)).to_fixed(0), "42");
        let small = HighPrecFloat::from_rational(&RBig::from_parts(1.into(), 1000u16.into()), 120);
        assert_eq!(small.to_fixed(4), "0.0010");
    }

    #[test]
    fn decimal_parsing() {
        let v = HighPrecFloat::parse_decimal("-0.125", 64).unwrap();
        assert_eq!(v, HighPrecFloat::from_f64(-0.125));
        assert_eq!(HighPrecFloat::parse_decimal("000", 64).unwrap(), HighPrecFloat::zero());
        assert!(HighPrecFloat::parse_decimal("1e5", 64).is_none());
        assert!(HighPrecFloat::parse_decimal(".", 64).is_none());
    }

    #[test]
    fn scientific_rendering() {
        let x = HighPrecFloat::from_rational(&RBig::from_parts((-1234567).into(), 1000u16.into()), 120);
        assert_eq!(x.to_sci(4), "-1.235e3");
        assert_eq!(HighPrecFloat::from_f64(0.00025).to_sci(2), "2.5e-4");
        assert_eq!(HighPrecFloat::from_f64(9.9999).to_sci(2), "1.0e1");
        assert_eq!(HighPrecFloat::zero().to_sci(5), "0");
    }
}
