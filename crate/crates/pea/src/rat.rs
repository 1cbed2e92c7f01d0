//! Exact rational scalars and their `"p/q"` wire format.
//!
//! All measure values in this crate are [`Rat`] (arbitrary-precision
//! rationals). They serialize as strings like `"-3/7"`, never as floats, so
//! values survive a round-trip bit-exactly.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

use crate::error::{Error, Result};

pub type Rat = num_rational::BigRational;

/// Shorthand for `n/d`, mostly used in tests and examples.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Canonical wire form: always `numerator/denominator`, reduced, denominator
/// positive. `1` renders as `"1/1"` so the format is unambiguous.
pub fn rat_string(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts `"p/q"` or a bare integer `"p"`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let mk_err = || Error::Parse(format!("invalid rational {s:?}"));
    match s.split_once('/') {
        Some((num, den)) => {
            let n = BigInt::from_str(num.trim()).map_err(|_| mk_err())?;
            let d = BigInt::from_str(den.trim()).map_err(|_| mk_err())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rat::new(n, d))
        }
        None => {
            let n = BigInt::from_str(s).map_err(|_| mk_err())?;
            Ok(Rat::from_integer(n))
        }
    }
}

/// Human-oriented display: integers render bare, other values as `p/q`.
pub fn rat_display(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn abs(r: &Rat) -> Rat {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_exact() {
        for (n, d) in [(1, 3), (-7, 2), (0, 1), (22, 7), (-1, 1000000007)] {
            let r = rat(n, d);
            assert_eq!(parse_rat(&rat_string(&r)).unwrap(), r);
        }
    }

    #[test]
    fn parse_accepts_integers_and_normalizes() {
        assert_eq!(parse_rat("4").unwrap(), rat_int(4));
        assert_eq!(parse_rat("4/6").unwrap(), rat(2, 3));
        assert_eq!(parse_rat("2/-4").unwrap(), rat(-1, 2));
        assert_eq!(rat_string(&parse_rat("2/-4").unwrap()), "-1/2");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_rat("").is_err());
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("a/b").is_err());
        assert!(parse_rat("1.5").is_err());
    }
}
