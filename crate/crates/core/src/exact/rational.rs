//! Exact rationals backed by `num`'s arbitrary precision fractions.

use num::{BigInt, BigRational, One, Zero};

use super::ExactError;

/// Arbitrary precision rational number, always stored in lowest terms.
pub type Rational = BigRational;

/// Builds the rational `n`.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Builds the rational `p / q`.
///
/// # Panics
///
/// Panics if `q` is zero.
pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Parses `"p/q"` or `"p"`, tolerating surrounding whitespace.
pub fn parse_rational(s: &str) -> Result<Rational, ExactError> {
    let t = s.trim();
    let bad = || ExactError::Parse(format!("not a rational: {s:?}"));
    let r = match t.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(ExactError::DivisionByZero);
            }
            Rational::new(p, q)
        }
        None => Rational::from_integer(t.parse().map_err(|_| bad())?),
    };
    Ok(r)
}

/// Formats as `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// True when `r` is an integer.
pub fn is_integral(r: &Rational) -> bool {
    r.is_integer()
}

/// Checked inverse.
pub fn inverse(r: &Rational) -> Result<Rational, ExactError> {
    if r.is_zero() {
        Err(ExactError::DivisionByZero)
    } else {
        Ok(r.recip())
    }
}

/// Parses a comma separated list of integers; the empty string is the empty list.
pub fn parse_int_list(s: &str) -> Result<Vec<i64>, ExactError> {
    let t = s.trim();
    if t.is_empty() {
        return Ok(Vec::new());
    }
    t.split(',')
        .map(|x| {
            x.trim()
                .parse::<i64>()
                .map_err(|_| ExactError::Parse(format!("not an integer list: {s:?}")))
        })
        .collect()
}

pub fn format_int_list(v: &[i64]) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("6/4").unwrap(), frac(3, 2));
        assert_eq!(parse_rational(" -3 ").unwrap(), int(-3));
        assert_eq!(format_rational(&frac(4, 2)), "2");
        assert_eq!(format_rational(&frac(-1, 3)), "-1/3");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn normalization() {
        let r = frac(2, -4);
        assert_eq!(r.numer(), &BigInt::from(-1));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert!(inverse(&zero()).is_err());
    }

    #[test]
    fn int_lists() {
        assert_eq!(parse_int_list("3, 1,0").unwrap(), vec![3, 1, 0]);
        assert_eq!(parse_int_list("").unwrap(), Vec::<i64>::new());
        assert_eq!(format_int_list(&[2, -1]), "2,-1");
    }

    proptest! {
        #[test]
        fn field_axioms(a in -50i64..50, b in 1i64..30, c in -50i64..50, d in 1i64..30) {
            let x = frac(a, b);
            let y = frac(c, d);
            prop_assert_eq!(&x + &y, &y + &x);
            prop_assert_eq!(&x * &(&y + &x), &x * &y + &x * &x);
            if !y.is_zero() {
                prop_assert_eq!(&(&x / &y) * &y, x.clone());
            }
            prop_assert!(y.denom() > &BigInt::zero());
        }

        #[test]
        fn format_roundtrip(a in -1000i64..1000, b in 1i64..1000) {
            let x = frac(a, b);
            prop_assert_eq!(parse_rational(&format_rational(&x)).unwrap(), x);
        }
    }
}
