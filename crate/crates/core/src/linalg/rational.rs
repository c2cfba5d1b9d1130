//! Exact rational scalars.
//!
//! `Rational` is an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator. The text form is `"p/q"`, or `"p"` when `q = 1`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::str::FromStr;

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

pub fn half() -> Rational {
    frac(1, 2)
}

/// Canonical text form: `"p/q"` or `"p"`.
pub fn to_text(r: &Rational) -> String {
    r.to_string()
}

/// Parses `"p"` or `"p/q"` (surrounding whitespace allowed). Zero
/// denominators are rejected instead of panicking.
pub fn parse(text: &str) -> Option<Rational> {
    let t = text.trim();
    match t.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).ok()?;
            let q = BigInt::from_str(q.trim()).ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rational::new(p, q))
            }
        }
        None => BigInt::from_str(t).ok().map(Rational::from_integer),
    }
}

/// Returns the value as an `i64` when it is an integer that fits.
pub fn as_i64(r: &Rational) -> Option<i64> {
    if r.is_integer() {
        r.to_integer().to_i64()
    } else {
        None
    }
}

pub fn abs(r: &Rational) -> Rational {
    r.abs()
}

/// `n!` as a rational.
pub fn factorial(n: u64) -> Rational {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    Rational::from_integer(acc)
}

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    Rational::from_integer(acc)
}

pub fn pow2(k: u32) -> Rational {
    Rational::from_integer(BigInt::one() << k)
}

/// Serde adapter storing a single rational as its text form.
pub mod serde_text {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        to_text(r).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse(&text).ok_or_else(|| serde::de::Error::custom(format!("invalid rational {text:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        assert_eq!(to_text(&frac(6, -4)), "-3/2");
        assert_eq!(to_text(&int(5)), "5");
        assert_eq!(parse(" -3/2 "), Some(frac(-3, 2)));
        assert_eq!(parse("4/2"), Some(int(2)));
        assert_eq!(parse("1/0"), None);
        assert_eq!(parse("x"), None);
    }

    #[test]
    fn combinatorics() {
        assert_eq!(factorial(5), int(120));
        assert_eq!(factorial(0), int(1));
        assert_eq!(binomial(6, 2), int(15));
        assert_eq!(binomial(2, 3), int(0));
        assert_eq!(pow2(4), int(16));
    }
}
