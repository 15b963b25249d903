//! Exact rational scalars.
//!
//! `num_rational::BigRational` already keeps values in lowest terms with a
//! positive denominator; this module only adds the textual `num/den` form used
//! by every file format in the crate.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Always `num/den`, including integers (`3/1`), so files are trivially
/// machine-parsable.
pub fn to_fraction(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Short form: `3`, `-1/2`.
pub fn to_short(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        to_fraction(q)
    }
}

/// Parses `a`, `a/b`, and the sign shorthand `+`, `-`, `−`, `0`.
pub fn parse(token: &str) -> Result<Rational> {
    let t = token.trim();
    match t {
        "+" => return Ok(one()),
        "-" | "\u{2212}" => return Ok(-one()),
        _ => {}
    }
    let t = t.replace('\u{2212}', "-");
    let bad = || Error::Parse(format!("invalid rational `{token}`"));
    match t.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{token}`")));
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(t.parse().map_err(|_| bad())?)),
    }
}

pub fn abs(q: &Rational) -> Rational {
    q.abs()
}

/// Sign character as used in sign-vector notation.
pub fn sign_char(q: &Rational) -> char {
    if q.is_zero() {
        '0'
    } else if q.is_positive() {
        '+'
    } else {
        '-'
    }
}
