//! The ground field: arbitrary-precision rationals.
//!
//! Literals are written `p/q` or `p` with an optional leading minus and no
//! whitespace; values are always kept in lowest terms with a positive
//! denominator (which `num_rational::BigRational` guarantees).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Exact rational scalar.
pub type Scalar = BigRational;

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Integer-valued scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// `n/d` in lowest terms. Panics when `d == 0`; use [`parse_rational`] for
/// untrusted input.
pub fn ratio(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `'-'? INT ('/' POSINT)?`. Rejects whitespace, empty parts, an
/// explicit `+`, and zero or negative denominators.
pub fn parse_rational(s: &str) -> Result<Scalar, Error> {
    let bad = |msg: &str| Error::ParseRational {
        input: s.to_string(),
        reason: msg.to_string(),
    };
    let (numer_str, denom_str) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let numer = parse_int(numer_str, true).ok_or_else(|| bad("malformed numerator"))?;
    let denom = match denom_str {
        Some(d) => {
            let d = parse_int(d, false).ok_or_else(|| bad("malformed denominator"))?;
            if !d.is_positive() {
                return Err(bad("denominator must be positive"));
            }
            d
        }
        None => BigInt::one(),
    };
    Ok(Scalar::new(numer, denom))
}

fn parse_int(s: &str, allow_minus: bool) -> Option<BigInt> {
    let digits = match s.strip_prefix('-') {
        Some(rest) if allow_minus => rest,
        Some(_) => return None,
        None => s,
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Renders in the same grammar the parser accepts: lowest terms, `p/q` only
/// when the denominator is not 1.
pub fn format_rational(x: &Scalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn format_vector(v: &[Scalar]) -> String {
    let entries: Vec<String> = v.iter().map(format_rational).collect();
    format!("[{}]", entries.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_formats_in_lowest_terms() {
        let x = parse_rational("2/4").unwrap();
        assert_eq!(format_rational(&x), "1/2");
        assert_eq!(format_rational(&parse_rational("-6/3").unwrap()), "-2");
        assert_eq!(format_rational(&parse_rational("0").unwrap()), "0");
        assert_eq!(format_rational(&parse_rational("7").unwrap()), "7");
    }

    #[test]
    fn rejects_malformed_literals() {
        for bad in ["", "1/0", "1/-2", "+3", "1 / 2", "a", "3/", "/2", "- 1", "--1", "1//2"] {
            assert!(parse_rational(bad).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn round_trips_lowest_terms() {
        for s in ["0", "1", "-1", "5/3", "-22/7", "123456789123456789/2"] {
            let x = parse_rational(s).unwrap();
            assert_eq!(format_rational(&x), s);
            assert_eq!(parse_rational(&format_rational(&x)).unwrap(), x);
        }
    }
}
