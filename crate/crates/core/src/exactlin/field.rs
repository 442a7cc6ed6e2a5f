use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{Num, One, ToPrimitive, Zero};

/// Scalar field used by every algebraic routine in the crate.
///
/// All elimination code decides "is this entry zero?" through
/// [`Field::is_negligible`]. For the rational backends that is an exact test;
/// the floating backends use a fixed absolute tolerance and are only
/// suitable for quick experiments, never for certificates.
pub trait Field:
    Clone + Debug + Display + PartialEq + Num + Neg<Output = Self> + Send + Sync + 'static
{
    /// Embeds an exact rational into the field.
    fn from_rational(q: &BigRational) -> Self;

    fn is_negligible(&self) -> bool {
        self.is_zero()
    }

    /// A size measure used only to pick small pivots.
    fn pivot_weight(&self) -> u64;

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(&BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    fn from_int(n: i64) -> Self {
        Self::from_ratio(n, 1)
    }
}

impl Field for BigRational {
    fn from_rational(q: &BigRational) -> Self {
        q.clone()
    }

    fn pivot_weight(&self) -> u64 {
        self.numer().bits() + self.denom().bits()
    }
}

impl Field for Rational64 {
    fn from_rational(q: &BigRational) -> Self {
        let n = q.numer().to_i64().expect("numerator exceeds i64");
        let d = q.denom().to_i64().expect("denominator exceeds i64");
        Rational64::new(n, d)
    }

    fn pivot_weight(&self) -> u64 {
        let bits = |x: i64| 64 - x.unsigned_abs().leading_zeros() as u64;
        bits(*self.numer()) + bits(*self.denom())
    }
}

const F64_TOL: f64 = 1e-9;
const F32_TOL: f32 = 1e-5;

impl Field for f64 {
    fn from_rational(q: &BigRational) -> Self {
        q.to_f64().unwrap_or(f64::NAN)
    }

    fn is_negligible(&self) -> bool {
        self.abs() < F64_TOL
    }

    // Larger magnitudes are preferred for floats, so invert the order.
    fn pivot_weight(&self) -> u64 {
        let a = self.abs();
        if a == 0.0 {
            u64::MAX
        } else {
            (1e12 / a).min(u64::MAX as f64) as u64
        }
    }
}

impl Field for f32 {
    fn from_rational(q: &BigRational) -> Self {
        q.to_f32().unwrap_or(f32::NAN)
    }

    fn is_negligible(&self) -> bool {
        self.abs() < F32_TOL
    }

    fn pivot_weight(&self) -> u64 {
        let a = self.abs() as f64;
        if a == 0.0 {
            u64::MAX
        } else {
            (1e12 / a).min(u64::MAX as f64) as u64
        }
    }
}

/// Parses `"p/q"`, `"p"` or `"-p/q"` into an exact rational.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str_radix(n.trim(), 10).ok()?;
            let d = BigInt::from_str_radix(d.trim(), 10).ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => BigInt::from_str_radix(s, 10).ok().map(BigRational::from_integer),
    }
}

/// Formats a rational as `"p/q"` with `q > 0`, always including the denominator.
pub fn format_rational(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Formats a rational compactly: `"3"`, `"-1/2"`.
pub fn format_rational_short(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_strings_round_trip() {
        let q = BigRational::new(BigInt::from(-6), BigInt::from(4));
        assert_eq!(format_rational(&q), "-3/2");
        assert_eq!(parse_rational("-3/2"), Some(q.clone()));
        assert_eq!(parse_rational(" 6/-4 "), Some(q));
        assert_eq!(parse_rational("7"), Some(BigRational::from_integer(7.into())));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }

    #[test]
    fn lowest_terms_positive_denominator() {
        let q = BigRational::new(BigInt::from(10), BigInt::from(-4));
        assert_eq!(q.numer(), &BigInt::from(-5));
        assert_eq!(q.denom(), &BigInt::from(2));
    }

    #[test]
    fn float_tolerance() {
        assert!(1e-12f64.is_negligible());
        assert!(!1e-3f64.is_negligible());
        assert_eq!(<f64 as Field>::from_ratio(1, 4), 0.25);
    }
}
