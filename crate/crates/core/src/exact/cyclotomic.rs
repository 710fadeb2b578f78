use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use super::poly::{self, Poly};
use super::rational::Rational;
use crate::error::{Error, Result};

/// The field ℚ(ζ_n), carried as its defining polynomial Φ_n.
///
/// Elements live in the power basis `1, ζ, …, ζ^{φ(n)−1}`. Orders 1 and 2
/// both give ℚ itself.
#[derive(Debug, PartialEq, Eq)]
pub struct CyclotomicField {
    order: u32,
    modulus: Poly,
}

impl CyclotomicField {
    pub fn new(order: u32) -> Result<Arc<Self>> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        Ok(Arc::new(Self {
            order,
            modulus: poly::cyclotomic(order),
        }))
    }

    /// The field of rationals, viewed as ℚ(ζ_1).
    pub fn rationals() -> Arc<Self> {
        Self::new(1).expect("order 1 is valid")
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// φ(n), the dimension over ℚ.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    /// Coefficients of Φ_n, constant term first.
    pub fn modulus(&self) -> &[Rational] {
        &self.modulus
    }

    pub fn zero(self: &Arc<Self>) -> CyclotomicNumber {
        CyclotomicNumber {
            coeffs: vec![Rational::zero(); self.degree()],
            field: Arc::clone(self),
        }
    }

    pub fn one(self: &Arc<Self>) -> CyclotomicNumber {
        self.from_rational(Rational::one())
    }

    pub fn from_rational(self: &Arc<Self>, q: Rational) -> CyclotomicNumber {
        let mut x = self.zero();
        x.coeffs[0] = q;
        x
    }

    pub fn from_int(self: &Arc<Self>, n: i64) -> CyclotomicNumber {
        self.from_rational(super::int(n))
    }

    /// ζ_n^k for any integer `k`.
    pub fn zeta_pow(self: &Arc<Self>, k: i64) -> CyclotomicNumber {
        let e = k.rem_euclid(self.order as i64) as usize;
        let mut p = vec![Rational::zero(); e + 1];
        p[e] = Rational::one();
        self.reduce(p)
    }

    pub fn zeta(self: &Arc<Self>) -> CyclotomicNumber {
        self.zeta_pow(1)
    }

    /// Builds an element from an arbitrary polynomial in ζ.
    pub fn from_poly(self: &Arc<Self>, coeffs: Vec<Rational>) -> CyclotomicNumber {
        self.reduce(coeffs)
    }

    fn reduce(self: &Arc<Self>, p: Poly) -> CyclotomicNumber {
        let (_, mut rem) = poly::div_rem(&p, &self.modulus);
        rem.resize(self.degree(), Rational::zero());
        CyclotomicNumber {
            field: Arc::clone(self),
            coeffs: rem,
        }
    }
}

/// An element of ℚ(ζ_n), fully reduced modulo Φ_n.
///
/// Equality is coefficient equality, which is sound because the power basis
/// is a ℚ-basis. The total order is an arbitrary but fixed one (order, then
/// coefficients lexicographically) used for deterministic sorting only.
#[derive(Clone)]
pub struct CyclotomicNumber {
    field: Arc<CyclotomicField>,
    coeffs: Vec<Rational>,
}

impl CyclotomicNumber {
    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn order(&self) -> u32 {
        self.field.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|q| q.is_one())
    }

    /// `Some(q)` when the element lies in ℚ.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| &self.coeffs[0])
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field.order != other.field.order {
            return Err(Error::OrderMismatch {
                left: self.field.order,
                right: other.field.order,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Self { field: Arc::clone(&self.field), coeffs })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(Self { field: Arc::clone(&self.field), coeffs })
    }

    /// Product in ℚ(ζ_n), reduced modulo Φ_n.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.field.reduce(poly::mul(&self.coeffs, &other.coeffs)))
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Self {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Multiplicative inverse, via the extended Euclidean algorithm against Φ_n.
    pub fn inverse(&self) -> Result<Self> {
        if let Some(q) = self.as_rational() {
            if q.is_zero() {
                return Err(Error::DivisionByZero);
            }
            return Ok(self.field.from_rational(q.recip()));
        }
        let inv = poly::inverse_mod(&self.coeffs, &self.field.modulus).ok_or(Error::DivisionByZero)?;
        Ok(self.field.reduce(inv))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        self.try_mul(&other.inverse()?)
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.coeffs == other.coeffs
    }
}

impl Eq for CyclotomicNumber {}

impl Hash for CyclotomicNumber {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.order.hash(state);
        self.coeffs.hash(state);
    }
}

impl PartialOrd for CyclotomicNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CyclotomicNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        self.field
            .order
            .cmp(&other.field.order)
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            terms.push(match i {
                0 => c.to_string(),
                1 if c.is_one() => format!("z{}", self.field.order),
                1 => format!("{c}*z{}", self.field.order),
                _ if c.is_one() => format!("z{}^{i}", self.field.order),
                _ => format!("{c}*z{}^{i}", self.field.order),
            });
        }
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

// Operator impls panic on mixed orders: combining elements of two different
// fields is a programming error. The `try_*` methods report it instead.
macro_rules! binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&CyclotomicNumber> for &CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $method(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
                self.$try(rhs).expect("cyclotomic order mismatch")
            }
        }
        impl $trait for CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $method(self, rhs: CyclotomicNumber) -> CyclotomicNumber {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        CyclotomicNumber {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use proptest::prelude::*;

    #[test]
    fn root_of_unity_identities() {
        let q8 = CyclotomicField::new(8).unwrap();
        let z = q8.zeta();
        assert_eq!(z.try_mul(&q8.zeta_pow(3)).unwrap(), q8.from_int(-1));
        assert!(z.pow(8).is_one());
        assert_eq!(q8.zeta_pow(-1), q8.zeta_pow(7));

        let q4 = CyclotomicField::new(4).unwrap();
        let i = q4.zeta();
        assert!((&i * &(-&i)).is_one());

        for n in 1..=12 {
            let k = CyclotomicField::new(n).unwrap();
            let z = k.zeta();
            assert!(z.pow(n).is_one(), "zeta_{n}^{n} != 1");
            // Φ_n(ζ) = 0
            let phi = k
                .modulus()
                .iter()
                .enumerate()
                .fold(k.zero(), |acc, (e, c)| &acc + &z.pow(e as u32).scale(c));
            assert!(phi.is_zero());
        }
    }

    #[test]
    fn identity_and_mismatch() {
        let q5 = CyclotomicField::new(5).unwrap();
        let x = q5.from_poly(vec![int(2), rat(-1, 3), int(0), int(7)]);
        assert_eq!(q5.one().try_mul(&x).unwrap(), x);
        let q3 = CyclotomicField::new(3).unwrap();
        assert_eq!(
            q3.one().try_mul(&q5.one()),
            Err(Error::OrderMismatch { left: 3, right: 5 })
        );
    }

    #[test]
    fn inverses() {
        let q8 = CyclotomicField::new(8).unwrap();
        assert!(q8.one().inverse().unwrap().is_one());
        assert_eq!(q8.zeta().inverse().unwrap(), q8.zeta_pow(7));
        assert_eq!(q8.from_int(2).inverse().unwrap(), q8.from_rational(rat(1, 2)));
        assert_eq!(q8.zero().inverse(), Err(Error::DivisionByZero));
    }

    fn element(n: u32) -> impl Strategy<Value = CyclotomicNumber> {
        let k = CyclotomicField::new(n).unwrap();
        let deg = k.degree();
        proptest::collection::vec((-9i64..10, 1i64..5), deg)
            .prop_map(move |cs| k.from_poly(cs.into_iter().map(|(p, q)| rat(p, q)).collect()))
    }

    fn field_order() -> impl Strategy<Value = u32> {
        prop_oneof![Just(3u32), Just(4), Just(5), Just(7), Just(8)]
    }

    proptest! {
        #[test]
        fn field_axioms(triple in field_order().prop_flat_map(|n| (element(n), element(n), element(n)))) {
            let (a, b, c) = triple;
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn inverse_roundtrip(a in field_order().prop_flat_map(element)) {
            prop_assume!(!a.is_zero());
            prop_assert!(a.try_mul(&a.inverse().unwrap()).unwrap().is_one());
        }
    }
}
