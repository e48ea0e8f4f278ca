//! Exact rationals: parsing, formatting and serde helpers.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn half() -> Rational {
    ratio(1, 2)
}

/// Parses `p/q`, an integer, or a decimal literal such as `.423` or `0.5`.
/// Negative values are rejected: every quantity in this crate is a probability.
pub fn parse(text: &str) -> std::result::Result<Rational, String> {
    let s = text.trim();
    if s.is_empty() {
        return Err("empty rational".into());
    }
    if let Some((p, q)) = s.split_once('/') {
        let p = parse_uint(p.trim())?;
        let q = parse_uint(q.trim())?;
        if q.is_zero() {
            return Err(format!("zero denominator in {s:?}"));
        }
        return Ok(Rational::new(BigInt::from(p), BigInt::from(q)));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if whole.is_empty() && frac.is_empty() {
            return Err(format!("not a number: {s:?}"));
        }
        let whole = if whole.is_empty() {
            BigUint::zero()
        } else {
            parse_uint(whole)?
        };
        let frac_val = if frac.is_empty() {
            BigUint::zero()
        } else {
            parse_uint(frac)?
        };
        let scale = BigUint::from(10u32).pow(frac.len() as u32);
        let numer = whole * &scale + frac_val;
        return Ok(Rational::new(BigInt::from(numer), BigInt::from(scale)));
    }
    Ok(Rational::from_integer(BigInt::from(parse_uint(s)?)))
}

fn parse_uint(s: &str) -> std::result::Result<BigUint, String> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("not a non-negative rational: {s:?}"));
    }
    s.parse::<BigUint>().map_err(|e| e.to_string())
}

/// `p/q` in lowest terms, or `p` when the denominator is 1.
pub fn format(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Decimal rendering rounded half-up to `places` digits. Formatting only.
pub fn to_decimal(r: &Rational, places: u32) -> String {
    let negative = r.is_negative();
    let a = r.abs();
    let scale = BigInt::from(10u32).pow(places);
    let scaled = a.numer() * &scale;
    let (q, rem) = scaled.div_rem(a.denom());
    let rounded = if rem * 2 >= *a.denom() { q + 1 } else { q };
    let digits = rounded.to_string();
    let places = places as usize;
    let body = if places == 0 {
        digits
    } else {
        let padded = format!("{digits:0>width$}", width = places + 1);
        let (w, f) = padded.split_at(padded.len() - places);
        format!("{w}.{f}")
    };
    if negative && body.bytes().any(|b| matches!(b, b'1'..=b'9')) {
        format!("-{body}")
    } else {
        body
    }
}

pub fn is_probability(r: &Rational) -> bool {
    !r.is_negative() && *r <= Rational::one()
}

/// Serde adapter that writes a rational as its `p/q` string.
pub mod as_string {
    use super::Rational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::format(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        super::parse(&text).map_err(serde::de::Error::custom)
    }
}

/// Same as [`as_string`] for optional values.
pub mod as_opt_string {
    use super::Rational;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match r {
            Some(r) => s.serialize_str(&super::format(r)),
            None => s.serialize_none(),
        }
    }
}
