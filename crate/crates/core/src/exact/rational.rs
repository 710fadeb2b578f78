use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision fraction, always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// `n / d` as a [`Rational`]. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"`. Decimal points and exponents are rejected so that
/// no inexact value can sneak in through input files.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let trimmed = text.trim();
    let bad = || Error::InvalidRational(text.to_string());
    let (num, den) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (trimmed, "1"),
    };
    let is_int = |s: &str| {
        let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !is_int(num) || !is_int(den) {
        return Err(bad());
    }
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(BigRational::new(num, den))
}

/// Compares `q` against `√s` without leaving the rationals.
///
/// For `q ≥ 0` this is the sign of `q² − s`, decided by cross-multiplying
/// numerators and denominators. A negative `q` is always below `√s`.
pub fn rat_cmp_sqrt(q: &Rational, s: &Rational) -> Result<Ordering> {
    if s.is_negative() {
        return Err(Error::NegativeRadicand);
    }
    if q.is_negative() {
        return Ok(Ordering::Less);
    }
    // q = a/b, s = c/d:  q² ? s  <=>  a²·d ? c·b²
    let lhs = q.numer() * q.numer() * s.denom();
    let rhs = s.numer() * q.denom() * q.denom();
    Ok(lhs.cmp(&rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn cmp_sqrt_examples() {
        assert_eq!(rat_cmp_sqrt(&rat(1, 10), &rat(4, 216)).unwrap(), Ordering::Less);
        assert_eq!(rat_cmp_sqrt(&rat(1, 2), &rat(1, 4)).unwrap(), Ordering::Equal);
        assert_eq!(rat_cmp_sqrt(&int(2), &int(9)).unwrap(), Ordering::Less);
        assert_eq!(rat_cmp_sqrt(&int(3), &int(4)).unwrap(), Ordering::Greater);
        assert_eq!(rat_cmp_sqrt(&int(0), &int(0)).unwrap(), Ordering::Equal);
        assert_eq!(rat_cmp_sqrt(&int(-1), &int(0)).unwrap(), Ordering::Less);
        assert_eq!(rat_cmp_sqrt(&int(1), &int(-1)), Err(Error::NegativeRadicand));
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_rational("3/6").unwrap(), rat(1, 2));
        assert_eq!(parse_rational(" -4 ").unwrap(), int(-4));
        assert_eq!(parse_rational("2/-4").unwrap(), rat(-1, 2));
        assert!(parse_rational("0.5").is_err());
        assert!(parse_rational("1e3").is_err());
        assert!(parse_rational("/2").is_err());
        assert_eq!(parse_rational("1/0"), Err(Error::DivisionByZero));
    }

    proptest! {
        #[test]
        fn canonical_form_is_scale_free(p in -1000i64..1000, q in 1i64..1000, k in 1i64..50, neg in any::<bool>()) {
            let k = if neg { -k } else { k };
            let a = rat(p, q);
            let b = rat(k * p, k * q);
            prop_assert_eq!(a.numer(), b.numer());
            prop_assert_eq!(a.denom(), b.denom());
            prop_assert!(b.denom().is_positive());
        }

        #[test]
        fn cmp_sqrt_matches_integer_comparison(
            a in 0i64..500, b in 1i64..500, c in 0i64..500, d in 1i64..500,
        ) {
            let q = rat(a, b);
            let s = rat(c, d);
            let q2 = &q * &q;
            // q² = num/den  vs  s = c'/d'  <=>  num·d' vs c'·den
            let expected = (q2.numer() * s.denom()).cmp(&(s.numer() * q2.denom()));
            prop_assert_eq!(rat_cmp_sqrt(&q, &s).unwrap(), expected);
        }
    }
}
