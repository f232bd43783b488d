//! Exact rational numbers used by every numeric weight space.
//!
//! Dominance tests must be exact, so weights never touch floating point.
//! Arithmetic is checked and panics on overflow instead of wrapping.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, Signed, Zero};

/// A rational number backed by `Ratio<i128>`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Q(Ratio<i128>);

impl Q {
    pub const ZERO: Q = Q(Ratio::new_raw(0, 1));
    pub const ONE: Q = Q(Ratio::new_raw(1, 1));

    pub fn new(numer: i128, denom: i128) -> Q {
        assert!(denom != 0, "rational with zero denominator");
        Q(Ratio::new(numer, denom))
    }

    pub fn int(v: i64) -> Q {
        Q(Ratio::from_integer(v as i128))
    }

    pub fn numer(&self) -> i128 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i128 {
        *self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn min(self, other: Q) -> Q {
        if other < self {
            other
        } else {
            self
        }
    }

    pub fn max(self, other: Q) -> Q {
        if other > self {
            other
        } else {
            self
        }
    }

    /// Approximate value, for display and timing reports only.
    pub fn to_f64(&self) -> f64 {
        self.numer() as f64 / self.denom() as f64
    }
}

impl From<i64> for Q {
    fn from(v: i64) -> Q {
        Q::int(v)
    }
}

impl Add for Q {
    type Output = Q;
    fn add(self, rhs: Q) -> Q {
        Q(self.0.checked_add(&rhs.0).expect("rational overflow in addition"))
    }
}

impl Sub for Q {
    type Output = Q;
    fn sub(self, rhs: Q) -> Q {
        Q(self.0.checked_sub(&rhs.0).expect("rational overflow in subtraction"))
    }
}

impl Mul for Q {
    type Output = Q;
    fn mul(self, rhs: Q) -> Q {
        Q(self.0.checked_mul(&rhs.0).expect("rational overflow in multiplication"))
    }
}

impl Div for Q {
    type Output = Q;
    fn div(self, rhs: Q) -> Q {
        assert!(!rhs.is_zero(), "rational division by zero");
        Q(self.0.checked_div(&rhs.0).expect("rational overflow in division"))
    }
}

impl Neg for Q {
    type Output = Q;
    fn neg(self) -> Q {
        Q(-self.0)
    }
}

impl Sum for Q {
    fn sum<I: Iterator<Item = Q>>(iter: I) -> Q {
        iter.fold(Q::ZERO, |a, b| a + b)
    }
}

impl fmt::Display for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse `{0}` as an exact rational")]
pub struct ParseRationalError(pub String);

impl FromStr for Q {
    type Err = ParseRationalError;

    /// Accepts integers, fractions `p/q`, and decimals with an optional
    /// exponent (`0.25`, `-1.5e-2`). Decimals are converted exactly.
    fn from_str(s: &str) -> Result<Q, ParseRationalError> {
        let err = || ParseRationalError(s.to_string());
        let t = s.trim();
        if let Some((n, d)) = t.split_once('/') {
            let n: i128 = n.trim().parse().map_err(|_| err())?;
            let d: i128 = d.trim().parse().map_err(|_| err())?;
            if d == 0 {
                return Err(err());
            }
            return Ok(Q::new(n, d));
        }
        let (mantissa, exp) = match t.find(['e', 'E']) {
            Some(i) => (&t[..i], t[i + 1..].parse::<i32>().map_err(|_| err())?),
            None => (t, 0),
        };
        let (neg, body) = match mantissa.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
        };
        let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(err());
        }
        if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
            return Err(err());
        }
        let digits = format!("{int_part}{frac_part}");
        let mut numer: i128 = digits.parse().map_err(|_| err())?;
        let scale = exp - frac_part.len() as i32;
        if scale.unsigned_abs() > 30 {
            return Err(err());
        }
        let pow = 10i128.pow(scale.unsigned_abs());
        if neg {
            numer = -numer;
        }
        if scale >= 0 {
            Ok(Q(Ratio::from_integer(numer.checked_mul(pow).ok_or_else(err)?)))
        } else {
            Ok(Q::new(numer, pow))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_exact_decimals_and_fractions() {
        assert_eq!("0.2".parse::<Q>().unwrap(), Q::new(1, 5));
        assert_eq!("-3/6".parse::<Q>().unwrap(), Q::new(-1, 2));
        assert_eq!("12".parse::<Q>().unwrap(), Q::int(12));
        assert_eq!("1.5e1".parse::<Q>().unwrap(), Q::int(15));
        assert_eq!("2.5e-1".parse::<Q>().unwrap(), Q::new(1, 4));
        assert_eq!(".5".parse::<Q>().unwrap(), Q::new(1, 2));
        assert!("abc".parse::<Q>().is_err());
        assert!("1/0".parse::<Q>().is_err());
        assert!("".parse::<Q>().is_err());
    }

    #[test]
    fn display_round_trips() {
        for q in [Q::new(7, 3), Q::int(-4), Q::ZERO, Q::new(-1, 10)] {
            assert_eq!(q.to_string().parse::<Q>().unwrap(), q);
        }
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn overflow_panics() {
        let big = Q::new(i128::MAX, 1);
        let _ = big + big;
    }
}
