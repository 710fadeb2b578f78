//! Transversal curve arrangements as incidence structures.
//!
//! An [`Arrangement`] stores its curves (optionally with a numerical class
//! and a genus) and its singular points, each point being just the set of
//! curves through it. Coordinates never appear here; the geometry builders
//! project them away.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{int, Rational};
use crate::lattice::{DivisorClass, SurfaceModel};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Curve {
    pub id: String,
    pub class: Option<DivisorClass>,
    pub genus: Option<Rational>,
}

impl Curve {
    pub fn new(id: impl Into<String>) -> Self {
        Self { id: id.into(), class: None, genus: None }
    }

    pub fn with_class(mut self, class: DivisorClass) -> Self {
        self.class = Some(class);
        self
    }

    pub fn with_genus(mut self, genus: Rational) -> Self {
        self.genus = Some(genus);
        self
    }
}

/// A singular point of the union, recorded by the curves through it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Point {
    pub id: String,
    /// Indices into [`Arrangement::curves`].
    pub incident: BTreeSet<usize>,
}

impl Point {
    /// The multiplicity `r_p`: how many curves pass through the point.
    pub fn multiplicity(&self) -> usize {
        self.incident.len()
    }
}

#[derive(Debug, Clone)]
pub struct Arrangement {
    surface: Arc<SurfaceModel>,
    curves: Vec<Curve>,
    points: Vec<Point>,
}

impl Arrangement {
    /// Builds an arrangement, resolving point incidences by curve id.
    ///
    /// Ids must be unique and resolve, and every class must live on
    /// `surface`. The remaining standing hypotheses (multiplicity at least
    /// two, connectedness, transversality) are checked by [`validate`].
    pub fn new<S: AsRef<str>>(
        surface: Arc<SurfaceModel>,
        curves: Vec<Curve>,
        points: Vec<(String, Vec<S>)>,
    ) -> Result<Self> {
        let index: HashMap<&str, usize> =
            curves.iter().enumerate().map(|(i, c)| (c.id.as_str(), i)).collect();
        if index.len() != curves.len() {
            return Err(Error::Structural("duplicate curve id".into()));
        }
        let mut resolved = Vec::with_capacity(points.len());
        for (id, ids) in points {
            let mut incident = Vec::with_capacity(ids.len());
            for cid in &ids {
                let cid = cid.as_ref();
                let &i = index
                    .get(cid)
                    .ok_or_else(|| Error::Structural(format!("point {id:?} references unknown curve {cid:?}")))?;
                incident.push(i);
            }
            resolved.push((id, incident));
        }
        Self::from_indices(surface, curves, resolved)
    }

    /// Like [`Arrangement::new`] with incidences given as curve indices.
    pub fn from_indices(
        surface: Arc<SurfaceModel>,
        curves: Vec<Curve>,
        points: Vec<(String, Vec<usize>)>,
    ) -> Result<Self> {
        let mut ids = BTreeSet::new();
        for c in &curves {
            if !ids.insert(c.id.as_str()) {
                return Err(Error::Structural(format!("duplicate curve id {:?}", c.id)));
            }
            if let Some(class) = &c.class {
                if !class.belongs_to(&surface) {
                    return Err(Error::Structural(format!("class of curve {:?} is on another surface", c.id)));
                }
            }
        }
        let mut point_ids = BTreeSet::new();
        let mut out = Vec::with_capacity(points.len());
        for (id, incident) in points {
            if !point_ids.insert(id.clone()) {
                return Err(Error::Structural(format!("duplicate point id {id:?}")));
            }
            let set: BTreeSet<usize> = incident.iter().copied().collect();
            if set.len() != incident.len() {
                return Err(Error::Structural(format!("point {id:?} lists a curve twice")));
            }
            if let Some(&bad) = set.iter().find(|&&i| i >= curves.len()) {
                return Err(Error::Structural(format!("point {id:?} references curve index {bad}")));
            }
            out.push(Point { id, incident: set });
        }
        Ok(Self { surface, curves, points: out })
    }

    pub fn surface(&self) -> &Arc<SurfaceModel> {
        &self.surface
    }

    pub fn curves(&self) -> &[Curve] {
        &self.curves
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    /// Number of curves `d`.
    pub fn len(&self) -> usize {
        self.curves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.curves.is_empty()
    }

    pub fn curve_index(&self, id: &str) -> Option<usize> {
        self.curves.iter().position(|c| c.id == id)
    }

    pub fn class(&self, i: usize) -> Result<&DivisorClass> {
        self.curves[i]
            .class
            .as_ref()
            .ok_or_else(|| Error::MissingClass(self.curves[i].id.clone()))
    }

    /// All classes, or the first missing one as an error.
    pub fn classes(&self) -> Result<Vec<&DivisorClass>> {
        (0..self.curves.len()).map(|i| self.class(i)).collect()
    }

    /// The common class when every curve carries the same class.
    pub fn common_class(&self) -> Result<Option<&DivisorClass>> {
        let classes = self.classes()?;
        let first = match classes.first() {
            Some(c) => *c,
            None => return Ok(None),
        };
        Ok(classes.iter().all(|c| *c == first).then_some(first))
    }

    /// Replaces every curve's genus.
    pub fn with_genera(mut self, genus: Rational) -> Self {
        for c in &mut self.curves {
            c.genus = Some(genus.clone());
        }
        self
    }

    /// `b_i`: the number of singular points on each curve, in curve order.
    pub fn points_per_curve(&self) -> Vec<usize> {
        let mut b = vec![0; self.curves.len()];
        for p in &self.points {
            for &i in &p.incident {
                b[i] += 1;
            }
        }
        b
    }

    /// `m[i][j]`: the number of points shared by curves `i` and `j`.
    pub fn shared_points(&self) -> Vec<Vec<usize>> {
        let d = self.curves.len();
        let mut m = vec![vec![0; d]; d];
        for p in &self.points {
            let inc: Vec<usize> = p.incident.iter().copied().collect();
            for (k, &i) in inc.iter().enumerate() {
                for &j in &inc[k + 1..] {
                    m[i][j] += 1;
                    m[j][i] += 1;
                }
            }
        }
        m
    }

    pub fn max_multiplicity(&self) -> usize {
        self.points.iter().map(Point::multiplicity).max().unwrap_or(0)
    }

    /// Whether the curves, joined whenever they share a point, form one
    /// connected graph.
    pub fn is_connected(&self) -> bool {
        let d = self.curves.len();
        if d == 0 {
            return false;
        }
        let mut parent: Vec<usize> = (0..d).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for p in &self.points {
            let mut it = p.incident.iter();
            if let Some(&first) = it.next() {
                for &other in it {
                    let (a, b) = (find(&mut parent, first), find(&mut parent, other));
                    parent[a] = b;
                }
            }
        }
        let root = find(&mut parent, 0);
        (1..d).all(|i| find(&mut parent, i) == root)
    }

    /// Whether a single point lies on all `d` curves.
    pub fn all_through_one_point(&self) -> bool {
        !self.curves.is_empty() && self.max_multiplicity() >= self.curves.len()
    }

    /// Whether some four curves have no point common to all four.
    pub fn has_four_without_common_point(&self) -> bool {
        let d = self.curves.len();
        if d < 4 {
            return false;
        }
        if self.max_multiplicity() < 4 {
            return true;
        }
        // four curves are "bad" only if they all lie in one point's incidence set
        let rich: Vec<&BTreeSet<usize>> = self.points.iter().map(|p| &p.incident).filter(|s| s.len() >= 4).collect();
        for a in 0..d {
            for b in a + 1..d {
                for c in b + 1..d {
                    for e in c + 1..d {
                        let quad = [a, b, c, e];
                        if !rich.iter().any(|s| quad.iter().all(|i| s.contains(i))) {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }
}

/// Combinatorial invariants of an arrangement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantSummary {
    /// Number of curves.
    pub d: usize,
    /// `t_k`: number of points of multiplicity exactly `k`. Only nonzero
    /// entries are stored.
    pub t: BTreeMap<usize, usize>,
    pub f0: usize,
    pub f1: usize,
    /// `(curve id, b_i)` in curve order.
    pub b: Vec<(String, usize)>,
    /// Base constant: `max b_i`.
    pub bs: usize,
}

impl InvariantSummary {
    pub fn t(&self, k: usize) -> usize {
        self.t.get(&k).copied().unwrap_or(0)
    }

    /// `f_i = Σ_k k^i t_k`.
    pub fn f(&self, i: u32) -> BigInt {
        self.t
            .iter()
            .map(|(&k, &t)| BigInt::from(k).pow(i) * BigInt::from(t))
            .sum()
    }
}

impl fmt::Display for InvariantSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t: Vec<String> = self.t.iter().map(|(k, n)| format!("t{k}={n}")).collect();
        write!(f, "d={} {} f0={} f1={} bs={}", self.d, t.join(" "), self.f0, self.f1, self.bs)
    }
}

pub fn invariants(arr: &Arrangement) -> Result<InvariantSummary> {
    if arr.is_empty() {
        return Err(Error::Structural("arrangement has no curves".into()));
    }
    let mut t = BTreeMap::new();
    for p in arr.points() {
        *t.entry(p.multiplicity()).or_insert(0) += 1;
    }
    let b_counts = arr.points_per_curve();
    let f1 = b_counts.iter().sum();
    let bs = b_counts.iter().copied().max().unwrap_or(0);
    Ok(InvariantSummary {
        d: arr.len(),
        f0: arr.points().len(),
        f1,
        b: arr.curves().iter().map(|c| c.id.clone()).zip(b_counts).collect(),
        bs,
        t,
    })
}

/// Both sides of `Σ_{i<j} C_i·C_j = Σ_k C(k,2)·t_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountIdentity {
    pub holds: bool,
    pub lhs: Rational,
    pub rhs: Rational,
}

pub fn verify_count_identity(arr: &Arrangement) -> Result<CountIdentity> {
    let classes = arr.classes()?;
    let mut lhs = Rational::zero();
    for (i, ci) in classes.iter().enumerate() {
        for cj in &classes[i + 1..] {
            lhs += ci.dot(cj)?;
        }
    }
    let rhs = arr
        .points()
        .iter()
        .map(|p| {
            let k = p.multiplicity() as i64;
            int(k * (k - 1) / 2)
        })
        .fold(Rational::zero(), |a, b| a + b);
    Ok(CountIdentity { holds: lhs == rhs, lhs, rhs })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValidationLevel {
    /// Incidence structure only.
    Combinatorial,
    /// Also compare shared points against intersection numbers.
    Lattice,
    /// As [`ValidationLevel::Lattice`], additionally claiming that all curves
    /// are linearly equivalent, which forces `C_i·C_j > 0`.
    LatticeEqualClasses,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagnosticKind {
    TooFewCurves,
    LowMultiplicity,
    NotConnected,
    MissingClass,
    TransversalityMismatch,
    NonPositivePairing,
    UnequalClasses,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub kind: DiagnosticKind,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

/// Checks the standing hypotheses and reports every violation found.
pub fn validate(arr: &Arrangement, level: ValidationLevel) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    let mut push = |kind, message: String| out.push(Diagnostic { kind, message });
    if arr.len() < 2 {
        push(DiagnosticKind::TooFewCurves, format!("need at least 2 curves, found {}", arr.len()));
    }
    for p in arr.points() {
        if p.multiplicity() < 2 {
            push(
                DiagnosticKind::LowMultiplicity,
                format!("point below multiplicity 2: {:?} lies on {} curve(s)", p.id, p.multiplicity()),
            );
        }
    }
    if !arr.is_empty() && !arr.is_connected() {
        push(DiagnosticKind::NotConnected, "not connected".into());
    }
    if level == ValidationLevel::Combinatorial {
        return out;
    }
    let classes: Vec<Option<&DivisorClass>> = arr.curves().iter().map(|c| c.class.as_ref()).collect();
    for (c, class) in arr.curves().iter().zip(&classes) {
        if class.is_none() {
            push(DiagnosticKind::MissingClass, format!("curve {:?} has no class", c.id));
        }
    }
    let shared = arr.shared_points();
    for i in 0..arr.len() {
        for j in i + 1..arr.len() {
            let (Some(ci), Some(cj)) = (classes[i], classes[j]) else { continue };
            let Ok(product) = ci.dot(cj) else { continue };
            if product != int(shared[i][j] as i64) {
                push(
                    DiagnosticKind::TransversalityMismatch,
                    format!(
                        "curves {:?} and {:?} share {} point(s) but intersect in {product}",
                        arr.curves()[i].id,
                        arr.curves()[j].id,
                        shared[i][j]
                    ),
                );
            }
            if level == ValidationLevel::LatticeEqualClasses && !product.is_positive() {
                push(
                    DiagnosticKind::NonPositivePairing,
                    format!("curves {:?} and {:?} have intersection {product} <= 0", arr.curves()[i].id, arr.curves()[j].id),
                );
            }
        }
    }
    if level == ValidationLevel::LatticeEqualClasses && classes.iter().all(Option::is_some) {
        if let Some(first) = classes.first().copied().flatten() {
            if classes.iter().any(|c| *c != Some(first)) {
                push(DiagnosticKind::UnequalClasses, "curve classes are not all equal".into());
            }
        }
    }
    out
}

/// A star configuration: every singular point is a double point.
pub fn is_star(arr: &Arrangement) -> bool {
    arr.points().iter().all(|p| p.multiplicity() == 2)
}

/// At least four curves, connected, all in one numerical class.
pub fn check_assumption_star1(arr: &Arrangement) -> Result<bool> {
    let common = arr.common_class()?;
    Ok(arr.len() >= 4 && arr.is_connected() && common.is_some())
}
