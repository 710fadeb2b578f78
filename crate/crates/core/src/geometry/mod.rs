//! Exact constructions of concrete arrangements.
//!
//! Line arrangements are built from coordinates over a cyclotomic field:
//! every pair of lines is intersected exactly and the resulting points are
//! clustered by equality of their normalized coordinates. The classical
//! Klein, Wiman and Hesse configurations are shipped as incidence-level
//! presets instead (see [`presets`]).

mod linalg;
pub mod plane;
pub mod presets;
pub mod space;

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::exact::CyclotomicNumber;

pub use plane::{build_fermat_plane, build_star_lines, line_meet_p2, PlaneArrangement, ProjLine2};
pub use presets::{preset, Preset};
pub use space::{
    build_fermat_quartic_lines, hyperplane_grouping_fermat_quartic, line_meet_p3, FermatQuartic, HyperplaneGroup, ProjLine3,
};

/// A point of ℙ² or ℙ³ with its first nonzero coordinate scaled to 1, so
/// that two representatives of the same point are equal as vectors.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint {
    coords: Vec<CyclotomicNumber>,
}

impl ProjPoint {
    pub fn new(coords: Vec<CyclotomicNumber>) -> Result<Self> {
        Ok(Self { coords: normalize(coords)? })
    }

    pub fn coords(&self) -> &[CyclotomicNumber] {
        &self.coords
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(" : "))
    }
}

/// Scales a nonzero vector so its first nonzero entry is 1.
pub(crate) fn normalize(mut v: Vec<CyclotomicNumber>) -> Result<Vec<CyclotomicNumber>> {
    let lead = v
        .iter()
        .find(|x| !x.is_zero())
        .ok_or_else(|| Error::Degenerate("all coordinates are zero".into()))?;
    if !lead.is_one() {
        let inv = lead.inverse()?;
        for x in v.iter_mut() {
            *x = x.try_mul(&inv)?;
        }
    }
    Ok(v)
}

/// Groups meet points by exact coordinates. Points keep the order in which
/// they were first seen.
#[derive(Default)]
pub(crate) struct Clusters {
    index: HashMap<ProjPoint, usize>,
    pub(crate) points: Vec<(ProjPoint, BTreeSet<usize>)>,
}

impl Clusters {
    pub(crate) fn add(&mut self, p: ProjPoint, i: usize, j: usize) {
        let k = *self.index.entry(p.clone()).or_insert_with(|| {
            self.points.push((p, BTreeSet::new()));
            self.points.len() - 1
        });
        self.points[k].1.insert(i);
        self.points[k].1.insert(j);
    }
}
