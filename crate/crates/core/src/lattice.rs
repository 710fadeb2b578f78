//! Numerical lattices of the surfaces we work on: the intersection pairing,
//! canonical class, Chern numbers, adjunction, and nef/ample tests where a
//! criterion is known.
//!
//! Three kinds are modeled:
//!
//! * ℙ², rank 1 with basis `H`, `H² = 1`, `K = −3H`;
//! * a ruled surface `X_e` over a curve of genus `g`, basis `(C₀, f)` with
//!   `C₀² = −e`, `C₀·f = 1`, `f² = 0`, `K = −2C₀ + (2g − 2 − e)f`;
//! * an abstract lattice: a symmetric pairing on a list of generators. The
//!   Gram matrix may be degenerate, since the generators need not be
//!   independent (the 48 lines of the Fermat quartic span a rank 20 lattice).
//!
//! For ruled surfaces the nef criterion `a ≥ 0, b ≥ ae` is only applied for
//! `e ≥ 0`. Every ruled example we ship is rational with `e ≥ 1`; the
//! criterion for `e ≥ 0` holds over any base genus, but nothing here relies
//! on the higher-genus case.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{int, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SurfaceKind {
    ProjectivePlane,
    RuledSurface { genus: u32, e: i64 },
    AbstractLattice,
}

impl fmt::Display for SurfaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceKind::ProjectivePlane => f.write_str("P2"),
            SurfaceKind::RuledSurface { genus, e } => write!(f, "ruled surface (g = {genus}, e = {e})"),
            SurfaceKind::AbstractLattice => f.write_str("abstract lattice"),
        }
    }
}

/// Input for [`SurfaceModel::abstract_lattice`].
#[derive(Debug, Clone, Default)]
pub struct LatticeData {
    pub labels: Vec<String>,
    pub gram: Vec<Vec<Rational>>,
    pub canonical_class: Option<Vec<Rational>>,
    pub chern_c2: Option<Rational>,
    pub canonical_square: Option<Rational>,
    /// Classes known to be ample by some external argument. Nonnegative
    /// multiples of these are the only classes an abstract lattice can
    /// certify as nef.
    pub ample_classes: Vec<Vec<Rational>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceModel {
    kind: SurfaceKind,
    gram: Vec<Vec<Rational>>,
    basis_labels: Vec<String>,
    canonical_class: Option<Vec<Rational>>,
    chern_c2: Option<Rational>,
    canonical_square: Option<Rational>,
    ample_classes: Vec<Vec<Rational>>,
}

impl SurfaceModel {
    pub fn projective_plane() -> Arc<Self> {
        Arc::new(Self {
            kind: SurfaceKind::ProjectivePlane,
            gram: vec![vec![int(1)]],
            basis_labels: vec!["H".into()],
            canonical_class: Some(vec![int(-3)]),
            chern_c2: Some(int(3)),
            canonical_square: Some(int(9)),
            ample_classes: vec![vec![int(1)]],
        })
    }

    /// The ruled surface with invariant `e` over a curve of genus `genus`.
    pub fn ruled(genus: u32, e: i64) -> Arc<Self> {
        let g = int(genus as i64);
        let one_minus_g = int(1) - &g;
        Arc::new(Self {
            kind: SurfaceKind::RuledSurface { genus, e },
            gram: vec![vec![int(-e), int(1)], vec![int(1), int(0)]],
            basis_labels: vec!["C0".into(), "f".into()],
            canonical_class: Some(vec![int(-2), int(2) * &g - int(2) - int(e)]),
            chern_c2: Some(int(4) * &one_minus_g),
            canonical_square: Some(int(8) * one_minus_g),
            ample_classes: Vec::new(),
        })
    }

    pub fn abstract_lattice(data: LatticeData) -> Result<Arc<Self>> {
        let rank = data.labels.len();
        if rank == 0 {
            return Err(Error::InvalidSurface("lattice rank must be positive".into()));
        }
        if data.gram.len() != rank || data.gram.iter().any(|row| row.len() != rank) {
            return Err(Error::InvalidSurface(format!("gram matrix must be {rank}x{rank}")));
        }
        for i in 0..rank {
            for j in 0..i {
                if data.gram[i][j] != data.gram[j][i] {
                    return Err(Error::InvalidSurface(format!(
                        "gram matrix is not symmetric at ({i}, {j})"
                    )));
                }
            }
        }
        let vectors = data.canonical_class.iter().chain(&data.ample_classes);
        if vectors.into_iter().any(|v| v.len() != rank) {
            return Err(Error::InvalidSurface("class vector length differs from rank".into()));
        }
        Ok(Arc::new(Self {
            kind: SurfaceKind::AbstractLattice,
            gram: data.gram,
            basis_labels: data.labels,
            canonical_class: data.canonical_class,
            chern_c2: data.chern_c2,
            canonical_square: data.canonical_square,
            ample_classes: data.ample_classes,
        }))
    }

    /// A K3 surface seen through the given generators: `K = 0`, `c₂ = 24`,
    /// `K² = 0`.
    pub fn k3(labels: Vec<String>, gram: Vec<Vec<Rational>>, ample_classes: Vec<Vec<Rational>>) -> Result<Arc<Self>> {
        let rank = labels.len();
        Self::abstract_lattice(LatticeData {
            labels,
            gram,
            canonical_class: Some(vec![Rational::zero(); rank]),
            chern_c2: Some(int(24)),
            canonical_square: Some(int(0)),
            ample_classes,
        })
    }

    pub fn kind(&self) -> &SurfaceKind {
        &self.kind
    }

    pub fn rank(&self) -> usize {
        self.basis_labels.len()
    }

    pub fn gram(&self) -> &[Vec<Rational>] {
        &self.gram
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis_labels
    }

    pub fn chern_c2(&self) -> Option<&Rational> {
        self.chern_c2.as_ref()
    }

    pub fn canonical_square(&self) -> Option<&Rational> {
        self.canonical_square.as_ref()
    }

    pub fn canonical_class_coeffs(&self) -> Option<&[Rational]> {
        self.canonical_class.as_deref()
    }

    pub fn ample_class_coeffs(&self) -> &[Vec<Rational>] {
        &self.ample_classes
    }

    pub fn is_projective_plane(&self) -> bool {
        self.kind == SurfaceKind::ProjectivePlane
    }
}

/// Builds classes on a shared surface.
pub trait SurfaceExt {
    fn class(&self, coeffs: Vec<Rational>) -> Result<DivisorClass>;
    fn class_i64(&self, coeffs: &[i64]) -> Result<DivisorClass> {
        self.class(coeffs.iter().map(|&c| int(c)).collect())
    }
    fn zero_class(&self) -> DivisorClass;
    fn canonical_class(&self) -> Option<DivisorClass>;
}

impl SurfaceExt for Arc<SurfaceModel> {
    fn class(&self, coeffs: Vec<Rational>) -> Result<DivisorClass> {
        if coeffs.len() != self.rank() {
            return Err(Error::SurfaceMismatch);
        }
        Ok(DivisorClass { surface: Arc::clone(self), coeffs })
    }

    fn zero_class(&self) -> DivisorClass {
        DivisorClass { surface: Arc::clone(self), coeffs: vec![Rational::zero(); self.rank()] }
    }

    fn canonical_class(&self) -> Option<DivisorClass> {
        self.canonical_class
            .clone()
            .map(|coeffs| DivisorClass { surface: Arc::clone(self), coeffs })
    }
}

/// A numerical divisor class with rational coefficients.
#[derive(Clone)]
pub struct DivisorClass {
    surface: Arc<SurfaceModel>,
    coeffs: Vec<Rational>,
}

impl DivisorClass {
    pub fn surface(&self) -> &Arc<SurfaceModel> {
        &self.surface
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn belongs_to(&self, surface: &Arc<SurfaceModel>) -> bool {
        Arc::ptr_eq(&self.surface, surface) || *self.surface == **surface
    }

    fn same_surface(&self, other: &DivisorClass) -> Result<()> {
        if other.belongs_to(&self.surface) {
            Ok(())
        } else {
            Err(Error::SurfaceMismatch)
        }
    }

    /// Intersection number `self · other`.
    pub fn dot(&self, other: &DivisorClass) -> Result<Rational> {
        self.same_surface(other)?;
        let gram = &self.surface.gram;
        let mut acc = Rational::zero();
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coeffs.iter().enumerate() {
                if y.is_zero() || gram[i][j].is_zero() {
                    continue;
                }
                acc += x * &gram[i][j] * y;
            }
        }
        Ok(acc)
    }

    pub fn square(&self) -> Rational {
        self.dot(self).expect("a class always shares its own surface")
    }

    pub fn scale(&self, q: &Rational) -> DivisorClass {
        DivisorClass {
            surface: Arc::clone(&self.surface),
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    pub fn try_add(&self, other: &DivisorClass) -> Result<DivisorClass> {
        self.same_surface(other)?;
        Ok(DivisorClass {
            surface: Arc::clone(&self.surface),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, other: &DivisorClass) -> Result<DivisorClass> {
        self.try_add(&-other)
    }

    /// `Some(λ)` with `self = λ·other`, when `other` is nonzero and the two
    /// are proportional as coefficient vectors.
    pub fn multiple_of(&self, other: &DivisorClass) -> Option<Rational> {
        let pivot = other.coeffs.iter().position(|c| !c.is_zero())?;
        let lambda = &self.coeffs[pivot] / &other.coeffs[pivot];
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .all(|(a, b)| *a == &lambda * b)
            .then_some(lambda)
    }

    /// `(a, b)` for a class `aC₀ + bf` on a ruled surface.
    pub fn ruled_coords(&self) -> Option<(&Rational, &Rational)> {
        match self.surface.kind {
            SurfaceKind::RuledSurface { .. } => Some((&self.coeffs[0], &self.coeffs[1])),
            _ => None,
        }
    }
}

impl PartialEq for DivisorClass {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && other.belongs_to(&self.surface)
    }
}

impl Eq for DivisorClass {}

impl fmt::Debug for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DivisorClass({self})")
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (c, label) in self.coeffs.iter().zip(&self.surface.basis_labels) {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            if !magnitude.is_one() {
                out.push_str(&magnitude.to_string());
                if !magnitude.is_integer() {
                    out.push('*');
                }
            }
            out.push_str(label);
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

impl Neg for &DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        self.scale(&-Rational::one())
    }
}

impl Add for &DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: &DivisorClass) -> DivisorClass {
        self.try_add(rhs).expect("classes on different surfaces")
    }
}

impl Sub for &DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: &DivisorClass) -> DivisorClass {
        self.try_sub(rhs).expect("classes on different surfaces")
    }
}

/// Intersection pairing `D1ᵀ · gram · D2` on `surface`.
pub fn pair(surface: &Arc<SurfaceModel>, d1: &DivisorClass, d2: &DivisorClass) -> Result<Rational> {
    if !d1.belongs_to(surface) {
        return Err(Error::SurfaceMismatch);
    }
    d1.dot(d2)
}

fn ample_multiple(surface: &Arc<SurfaceModel>, d: &DivisorClass) -> Option<Rational> {
    surface.ample_classes.iter().find_map(|a| {
        let a = DivisorClass { surface: Arc::clone(surface), coeffs: a.clone() };
        d.multiple_of(&a)
    })
}

fn unsupported(surface: &SurfaceModel) -> Error {
    Error::Unsupported(format!(
        "no nef/ample criterion on {}; external nefness evidence is required",
        surface.kind
    ))
}

/// Nefness by the known criterion of the surface.
///
/// On an abstract lattice the only classes decided are zero and nonnegative
/// multiples of a declared ample class; everything else is
/// [`Error::Unsupported`].
pub fn is_nef(surface: &Arc<SurfaceModel>, d: &DivisorClass) -> Result<bool> {
    if !d.belongs_to(surface) {
        return Err(Error::SurfaceMismatch);
    }
    match surface.kind {
        SurfaceKind::ProjectivePlane => Ok(!d.coeffs[0].is_negative()),
        SurfaceKind::RuledSurface { e, .. } if e >= 0 => {
            let (a, b) = (&d.coeffs[0], &d.coeffs[1]);
            Ok(!a.is_negative() && *b >= a * int(e))
        }
        _ => match ample_multiple(surface, d) {
            Some(lambda) if !lambda.is_negative() => Ok(true),
            _ if d.is_zero() => Ok(true),
            _ => Err(unsupported(surface)),
        },
    }
}

/// Ampleness by the known criterion of the surface. See [`is_nef`].
pub fn is_ample(surface: &Arc<SurfaceModel>, d: &DivisorClass) -> Result<bool> {
    if !d.belongs_to(surface) {
        return Err(Error::SurfaceMismatch);
    }
    match surface.kind {
        SurfaceKind::ProjectivePlane => Ok(d.coeffs[0].is_positive()),
        SurfaceKind::RuledSurface { e, .. } if e >= 0 => {
            let (a, b) = (&d.coeffs[0], &d.coeffs[1]);
            Ok(a.is_positive() && *b > a * int(e))
        }
        _ => match ample_multiple(surface, d) {
            Some(lambda) if lambda.is_positive() => Ok(true),
            _ if d.square() <= Rational::zero() => Ok(false),
            _ => Err(unsupported(surface)),
        },
    }
}

/// Result of the adjunction formula `2g − 2 = D² + K·D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Adjunction {
    pub genus: Rational,
    /// Set when `genus` is negative or not an integer, i.e. the class cannot
    /// be the class of a smooth irreducible curve.
    pub diagnostic: Option<String>,
}

pub fn adjunction_genus(surface: &Arc<SurfaceModel>, d: &DivisorClass) -> Result<Adjunction> {
    if !d.belongs_to(surface) {
        return Err(Error::SurfaceMismatch);
    }
    let k = surface.canonical_class().ok_or(Error::MissingCanonicalClass)?;
    let genus = (d.square() + k.dot(d)? + int(2)) / int(2);
    let diagnostic = if !genus.is_integer() {
        Some(format!("adjunction genus {genus} is not an integer"))
    } else if genus.is_negative() {
        Some(format!("adjunction genus {genus} is negative"))
    } else {
        None
    };
    Ok(Adjunction { genus, diagnostic })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use proptest::prelude::*;

    #[test]
    fn pairings() {
        let x2 = SurfaceModel::ruled(0, 2);
        let c0 = x2.class_i64(&[1, 0]).unwrap();
        assert_eq!(pair(&x2, &c0, &c0).unwrap(), int(-2));
        let l = x2.class_i64(&[1, 3]).unwrap();
        let c = x2.class_i64(&[1, 2]).unwrap();
        assert_eq!(pair(&x2, &l, &c).unwrap(), int(3));

        let p2 = SurfaceModel::projective_plane();
        let h = p2.class_i64(&[1]).unwrap();
        assert_eq!(pair(&p2, &h, &h).unwrap(), int(1));
        assert_eq!(pair(&p2, &h, &c0), Err(Error::SurfaceMismatch));

        for e in 1..10 {
            let xe = SurfaceModel::ruled(0, e);
            let l = xe.class_i64(&[1, e + 1]).unwrap();
            let c = xe.class_i64(&[1, e]).unwrap();
            assert_eq!(pair(&xe, &l, &c).unwrap(), int(e + 1));
        }
    }

    #[test]
    fn nef_and_ample_on_ruled() {
        let x2 = SurfaceModel::ruled(0, 2);
        assert!(!is_nef(&x2, &x2.class_i64(&[-1, 3]).unwrap()).unwrap());
        assert!(is_ample(&x2, &x2.class_i64(&[1, 3]).unwrap()).unwrap());
        let boundary = x2.class_i64(&[1, 2]).unwrap();
        assert!(is_nef(&x2, &boundary).unwrap());
        assert!(!is_ample(&x2, &boundary).unwrap());
        for e in 0..8 {
            let xe = SurfaceModel::ruled(0, e);
            assert!(is_nef(&xe, &xe.class_i64(&[0, 1]).unwrap()).unwrap());
            assert!(is_nef(&xe, &xe.class_i64(&[1, e]).unwrap()).unwrap());
            assert!(is_ample(&xe, &xe.class_i64(&[1, e + 1]).unwrap()).unwrap());
        }
        let neg = SurfaceModel::ruled(1, -1);
        assert!(matches!(is_nef(&neg, &neg.class_i64(&[1, 0]).unwrap()), Err(Error::Unsupported(_))));
    }

    #[test]
    fn abstract_lattice_needs_evidence() {
        let k3 = SurfaceModel::k3(vec!["L".into()], vec![vec![int(2)]], vec![vec![int(1)]]).unwrap();
        assert!(is_nef(&k3, &k3.class(vec![rat(1, 8)]).unwrap()).unwrap());
        assert!(is_ample(&k3, &k3.class_i64(&[3]).unwrap()).unwrap());
        assert!(matches!(is_nef(&k3, &k3.class_i64(&[-1]).unwrap()), Err(Error::Unsupported(_))));

        let bare = SurfaceModel::k3(vec!["L".into()], vec![vec![int(2)]], vec![]).unwrap();
        assert!(matches!(is_nef(&bare, &bare.class_i64(&[1]).unwrap()), Err(Error::Unsupported(_))));
        assert!(!is_ample(&bare, &bare.class_i64(&[0]).unwrap()).unwrap());
    }

    #[test]
    fn lattice_validation() {
        let asym = SurfaceModel::abstract_lattice(LatticeData {
            labels: vec!["a".into(), "b".into()],
            gram: vec![vec![int(0), int(1)], vec![int(2), int(0)]],
            ..Default::default()
        });
        assert!(matches!(asym, Err(Error::InvalidSurface(_))));
    }

    #[test]
    fn genera() {
        let p2 = SurfaceModel::projective_plane();
        assert_eq!(adjunction_genus(&p2, &p2.class_i64(&[1]).unwrap()).unwrap().genus, int(0));
        for d in 1..=10 {
            let g = adjunction_genus(&p2, &p2.class_i64(&[d]).unwrap()).unwrap();
            assert_eq!(g.genus, int((d - 1) * (d - 2) / 2));
            assert!(g.diagnostic.is_none());
        }
        let x2 = SurfaceModel::ruled(0, 2);
        let c = x2.class_i64(&[1, 2]).unwrap();
        assert_eq!(c.square(), int(2));
        assert_eq!(x2.canonical_class().unwrap().dot(&c).unwrap(), int(-4));
        assert_eq!(adjunction_genus(&x2, &c).unwrap().genus, int(0));

        let k3 = SurfaceModel::k3(vec!["l".into()], vec![vec![int(-2)]], vec![]).unwrap();
        assert_eq!(adjunction_genus(&k3, &k3.class_i64(&[1]).unwrap()).unwrap().genus, int(0));
        let half = SurfaceModel::k3(vec!["x".into()], vec![vec![int(1)]], vec![]).unwrap();
        assert!(adjunction_genus(&half, &half.class_i64(&[1]).unwrap()).unwrap().diagnostic.is_some());
        let bare = SurfaceModel::abstract_lattice(LatticeData {
            labels: vec!["x".into()],
            gram: vec![vec![int(1)]],
            ..Default::default()
        })
        .unwrap();
        assert_eq!(
            adjunction_genus(&bare, &bare.class_i64(&[1]).unwrap()),
            Err(Error::MissingCanonicalClass)
        );
    }

    #[test]
    fn display() {
        let x2 = SurfaceModel::ruled(0, 2);
        assert_eq!(x2.class(vec![rat(-1, 6), rat(1, 2)]).unwrap().to_string(), "-1/6*C0 + 1/2*f");
        assert_eq!(x2.class_i64(&[1, 3]).unwrap().to_string(), "C0 + 3f");
        assert_eq!(x2.class_i64(&[0, 0]).unwrap().to_string(), "0");
    }

    fn small_rat() -> impl Strategy<Value = Rational> {
        (-20i64..21, 1i64..6).prop_map(|(p, q)| rat(p, q))
    }

    proptest! {
        #[test]
        fn pairing_is_symmetric_bilinear(
            e in 0i64..8,
            v in proptest::collection::vec(small_rat(), 6),
            a in small_rat(), b in small_rat(),
        ) {
            let xe = SurfaceModel::ruled(0, e);
            let d1 = xe.class(v[0..2].to_vec()).unwrap();
            let d2 = xe.class(v[2..4].to_vec()).unwrap();
            let d3 = xe.class(v[4..6].to_vec()).unwrap();
            prop_assert_eq!(d1.dot(&d2).unwrap(), d2.dot(&d1).unwrap());
            let combo = &d1.scale(&a) + &d2.scale(&b);
            prop_assert_eq!(
                combo.dot(&d3).unwrap(),
                a * d1.dot(&d3).unwrap() + b * d2.dot(&d3).unwrap()
            );
        }

        #[test]
        fn ample_implies_nef_and_nef_meets_generators(e in 0i64..10, a in -20i64..21, b in -20i64..21) {
            let xe = SurfaceModel::ruled(0, e);
            let d = xe.class_i64(&[a, b]).unwrap();
            let nef = is_nef(&xe, &d).unwrap();
            if is_ample(&xe, &d).unwrap() {
                prop_assert!(nef);
            }
            if nef {
                let c0 = xe.class_i64(&[1, 0]).unwrap();
                let f = xe.class_i64(&[0, 1]).unwrap();
                prop_assert!(d.dot(&c0).unwrap() >= Rational::zero());
                prop_assert!(d.dot(&f).unwrap() >= Rational::zero());
            }
        }
    }
}
