//! Scalar abstraction for objective values.
//!
//! Every oracle, algorithm and checker in this crate is generic over a
//! [`Scalar`]. Floating point types compare with an absolute tolerance;
//! rationals compare exactly.

use std::fmt::Debug;

use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, NumAssign, ToPrimitive};

/// Absolute tolerance used for all `f64` inequality checks.
pub const F64_TOLERANCE: f64 = 1e-9;

/// f32 cannot resolve 1e-9 around values of order one.
pub const F32_TOLERANCE: f32 = 1e-5;

/// A number type that objective values can be expressed in.
pub trait Scalar:
    Num + NumAssign + Clone + Debug + PartialOrd + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    /// Absolute slack granted to every `lhs >= rhs` check.
    fn tolerance() -> Self;

    /// Parses a decimal literal such as `"0.25"`. Exact types keep it exact.
    fn parse_decimal(text: &str) -> Option<Self>;

    fn from_cost(cost: u64) -> Self {
        Self::from_u64(cost).expect("cost representable in scalar type")
    }

    /// `self >= other - tolerance`.
    fn ge_tol(&self, other: &Self) -> bool {
        self.clone() + Self::tolerance() >= *other
    }

    fn max_of(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    fn min_of(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }

    fn as_f64(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    fn tolerance() -> Self {
        F64_TOLERANCE
    }

    fn parse_decimal(text: &str) -> Option<Self> {
        text.trim().parse::<f64>().ok().filter(|v| v.is_finite())
    }
}

impl Scalar for f32 {
    fn tolerance() -> Self {
        F32_TOLERANCE
    }

    fn parse_decimal(text: &str) -> Option<Self> {
        text.trim().parse::<f32>().ok().filter(|v| v.is_finite())
    }
}

impl Scalar for Ratio<i64> {
    fn tolerance() -> Self {
        Ratio::from_integer(0)
    }

    /// Accepts `"3"`, `"-1.25"` and `"3/4"`.
    fn parse_decimal(text: &str) -> Option<Self> {
        let text = text.trim();
        if let Some((num, den)) = text.split_once('/') {
            let num: i64 = num.trim().parse().ok()?;
            let den: i64 = den.trim().parse().ok()?;
            return (den != 0).then(|| Ratio::new(num, den));
        }
        let (negative, body) = match text.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, text.strip_prefix('+').unwrap_or(text)),
        };
        let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
        if whole.is_empty() && frac.is_empty() {
            return None;
        }
        if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
            return None;
        }
        let digits = format!("{whole}{frac}");
        let numer: i64 = digits.parse().ok()?;
        let denom = 10i64.checked_pow(u32::try_from(frac.len()).ok()?)?;
        let value = Ratio::new(numer, denom);
        Some(if negative { -value } else { value })
    }
}
