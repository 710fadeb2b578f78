//! Dense univariate polynomials over the rationals, coefficients stored from
//! the constant term upwards. Only what the cyclotomic arithmetic needs.

use num_traits::{One, Zero};

use super::rational::Rational;

pub(crate) type Poly = Vec<Rational>;

pub(crate) fn trim(p: &mut Poly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub(crate) fn mul(a: &[Rational], b: &[Rational]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn sub(a: &[Rational], b: &[Rational]) -> Poly {
    let n = a.len().max(b.len());
    let mut out: Poly = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
            match b.get(i) {
                Some(y) => x - y,
                None => x,
            }
        })
        .collect();
    trim(&mut out);
    out
}

/// Quotient and remainder of `a` by a nonzero `b`.
pub(crate) fn div_rem(a: &[Rational], b: &[Rational]) -> (Poly, Poly) {
    let mut rem: Poly = a.to_vec();
    trim(&mut rem);
    let mut b = b.to_vec();
    trim(&mut b);
    assert!(!b.is_empty(), "polynomial division by zero");
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let lead = b.last().unwrap().clone();
    let mut quot = vec![Rational::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = rem.last().unwrap() / &lead;
        for (j, y) in b.iter().enumerate() {
            rem[shift + j] -= &c * y;
        }
        quot[shift] = c;
        // leading term cancels exactly
        rem.pop();
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

/// The n-th cyclotomic polynomial, from xⁿ − 1 = ∏_{d | n} Φ_d(x).
pub(crate) fn cyclotomic(n: u32) -> Poly {
    let mut acc = vec![Rational::zero(); n as usize + 1];
    acc[0] = -Rational::one();
    acc[n as usize] = Rational::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            let (q, r) = div_rem(&acc, &cyclotomic(d));
            debug_assert!(r.is_empty());
            acc = q;
        }
    }
    acc
}

/// Inverse of `a` modulo the irreducible polynomial `m`, by the extended
/// Euclidean algorithm. Returns `None` when `a ≡ 0 (mod m)`.
pub(crate) fn inverse_mod(a: &[Rational], m: &[Rational]) -> Option<Poly> {
    let (_, a) = div_rem(a, m);
    if a.is_empty() {
        return None;
    }
    let (mut r0, mut r1) = (m.to_vec(), a);
    let (mut s0, mut s1): (Poly, Poly) = (Vec::new(), vec![Rational::one()]);
    while !r1.is_empty() {
        let (q, r) = div_rem(&r0, &r1);
        let s2 = sub(&s0, &mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    // r0 is a nonzero constant because m is irreducible
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].clone();
    let scaled: Poly = s0.iter().map(|x| x / &c).collect();
    Some(div_rem(&scaled, m).1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn ints(p: &[i64]) -> Poly {
        p.iter().map(|&c| int(c)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic(2), ints(&[1, 1]));
        assert_eq!(cyclotomic(3), ints(&[1, 1, 1]));
        assert_eq!(cyclotomic(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic(8), ints(&[1, 0, 0, 0, 1]));
        assert_eq!(cyclotomic(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn inverse_mod_x2_plus_1() {
        // (1 + x)^{-1} = (1 - x)/2 mod x² + 1
        let inv = inverse_mod(&ints(&[1, 1]), &cyclotomic(4)).unwrap();
        assert_eq!(inv, vec![crate::exact::rat(1, 2), crate::exact::rat(-1, 2)]);
        assert!(inverse_mod(&ints(&[1, 0, 1]), &cyclotomic(4)).is_none());
    }
}
