//! Exact rationals and their fixed textual form `num/den`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

pub type Rational = BigRational;

/// `num / den` reduced. Panics on a zero denominator.
pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Rational {
    BigRational::new(num.into(), den.into())
}

/// `a * b * c / 6`, the shape every bound in this crate takes.
pub fn triple_over_six(a: usize, b: usize, c: usize) -> Rational {
    let prod = BigInt::from(a) * BigInt::from(b) * BigInt::from(c);
    ratio(prod, 6)
}

/// Always `num/den`, including integers (`16/1`).
pub fn to_fraction_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_fraction(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse::<BigInt>().ok()?, d.trim().parse::<BigInt>().ok()?),
        None => (s.parse::<BigInt>().ok()?, BigInt::from(1)),
    };
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}

/// Decimal approximation rounded half away from zero to `places` digits.
pub fn to_decimal_string(r: &Rational, places: usize) -> String {
    let scale = BigInt::from(10).pow(places as u32);
    let scaled: BigInt = r.numer() * &scale * 2 + r.denom() * r.numer().signum();
    let (q, _) = scaled.div_rem(&(r.denom() * 2));
    let neg = q.is_negative();
    let digits = q.abs().to_string();
    let padded = format!("{digits:0>width$}", width = places + 1);
    let (int, frac) = padded.split_at(padded.len() - places);
    let sign = if neg { "-" } else { "" };
    if places == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

pub(crate) mod serde_fraction {
    use super::*;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&to_fraction_string(r))
    }

    pub mod option {
        use super::*;

        pub fn serialize<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
            match r {
                Some(r) => s.serialize_some(&to_fraction_string(r)),
                None => s.serialize_none(),
            }
        }
    }
}
