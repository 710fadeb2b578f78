//! Seshadri constants at the singular points of an arrangement.
//!
//! Nothing here searches over curves. A value is reported as
//! [`Outcome::Exact`] only when a theorem applies and every one of its
//! hypotheses has been checked mechanically; otherwise the ratio computed by
//! the arrangement's own curves is returned as a [`Outcome::Candidate`],
//! which makes no claim either way about the true constant.

mod certify;
mod lower;
mod pullback;

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::exact::{int, rat_cmp_sqrt, Rational};
use crate::lattice::DivisorClass;

pub use certify::{bounds_cor_main, certify_main_theorem, certify_star_corollary, nef_status, NefStatus};
pub use lower::{lower_bound_kodaira, lower_bound_ruled, verify_htin, verify_lp_inequality, InequalityReport};
pub use pullback::{double_cover_k3, pullback_to_ruled};

/// One machine-checked hypothesis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub hypothesis: String,
    pub passed: bool,
    /// What was observed: the evaluated quantity or the reason for failure.
    pub witness: String,
    /// The divisor whose nefness or ampleness was tested, if any.
    pub divisor: Option<DivisorClass>,
}

impl Check {
    pub(crate) fn new(hypothesis: impl Into<String>, passed: bool, witness: impl Into<String>) -> Self {
        Self { hypothesis: hypothesis.into(), passed, witness: witness.into(), divisor: None }
    }

    pub(crate) fn with_divisor(mut self, d: DivisorClass) -> Self {
        self.divisor = Some(d);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub theorem: String,
    pub checks: Vec<Check>,
}

impl Certificate {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn check(&self, hypothesis: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.hypothesis == hypothesis)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    /// Certified value of ε(X, L, Sing(C)).
    Exact(Rational),
    /// Certified `lower ≤ ε(X, L, Sing(C)) ≤ upper`.
    Bounds { lower: Rational, upper: Rational },
    /// Smallest ratio over the arrangement's curves; an upper bound, but not
    /// certified to be the constant.
    Candidate(Rational),
    /// Hypotheses failed and there is no value to offer.
    Inapplicable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeshadriResult {
    pub outcome: Outcome,
    pub certificate: Certificate,
}

impl SeshadriResult {
    /// Exact when every check passed, otherwise downgraded to a candidate.
    pub(crate) fn value(certificate: Certificate, value: Rational) -> Self {
        let outcome = if certificate.all_passed() { Outcome::Exact(value) } else { Outcome::Candidate(value) };
        Self { outcome, certificate }
    }

    pub(crate) fn bounds(certificate: Certificate, lower: Rational, upper: Rational) -> Self {
        let outcome = if certificate.all_passed() && lower <= upper {
            Outcome::Bounds { lower, upper }
        } else {
            Outcome::Inapplicable
        };
        Self { outcome, certificate }
    }

    pub fn exact(&self) -> Option<&Rational> {
        match &self.outcome {
            Outcome::Exact(v) => Some(v),
            _ => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.exact().is_some()
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Exact(v) => write!(f, "exact {v}"),
            Outcome::Bounds { lower, upper } => write!(f, "bounds [{lower}, {upper}]"),
            Outcome::Candidate(v) => write!(f, "candidate {v} (not certified)"),
            Outcome::Inapplicable => f.write_str("inapplicable"),
        }
    }
}

/// `Σ_i L·C_i / Σ_p r_p`.
pub fn configurational_epsilon(arr: &Arrangement, l: &DivisorClass) -> Result<Rational> {
    let f1: usize = arr.points().iter().map(|p| p.multiplicity()).sum();
    if f1 == 0 {
        return Err(Error::NoSingularPoints);
    }
    let total = degree_sum(arr, l)?;
    Ok(total / int(f1 as i64))
}

pub(crate) fn degree_sum(arr: &Arrangement, l: &DivisorClass) -> Result<Rational> {
    arr.classes()?
        .into_iter()
        .try_fold(Rational::zero(), |acc, c| Ok(acc + l.dot(c)?))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinRatio {
    pub value: Rational,
    pub argmin: String,
}

/// `min_i L·C_i / b_i` over curves with `b_i > 0`. Ties go to the smallest
/// curve id in string order.
pub fn min_curve_ratio(arr: &Arrangement, l: &DivisorClass) -> Result<MinRatio> {
    let b = arr.points_per_curve();
    let mut best: Option<(Rational, usize)> = None;
    for (i, &bi) in b.iter().enumerate() {
        if bi == 0 {
            continue;
        }
        let ratio = l.dot(arr.class(i)?)? / int(bi as i64);
        let better = best.as_ref().is_none_or(|(v, j)| {
            ratio < *v || (ratio == *v && arr.curves()[i].id < arr.curves()[*j].id)
        });
        if better {
            best = Some((ratio, i));
        }
    }
    let (value, i) = best.ok_or(Error::NoSingularPoints)?;
    Ok(MinRatio { value, argmin: arr.curves()[i].id.clone() })
}

/// The bound `ε(X, L, x₁…x_r) ≤ √(L²/r)`, kept as the pair `(L², r)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SqrtBound {
    pub l_squared: Rational,
    pub r: usize,
}

impl SqrtBound {
    /// `L²/r`, the square of the bound.
    pub fn radicand(&self) -> Rational {
        &self.l_squared / int(self.r as i64)
    }

    /// Orders `value` against `√(L²/r)`.
    pub fn compare(&self, value: &Rational) -> Result<Ordering> {
        rat_cmp_sqrt(value, &self.radicand())
    }

    /// Whether a claimed Seshadri constant respects the bound.
    pub fn admits(&self, value: &Rational) -> Result<bool> {
        Ok(self.compare(value)? != Ordering::Greater)
    }
}

pub fn sqrt_upper_bound(l: &DivisorClass, r: usize) -> Result<SqrtBound> {
    if r < 1 {
        return Err(Error::InvalidParameter("the number of points must be at least 1".into()));
    }
    let l_squared = l.square();
    if l_squared.is_negative() {
        return Err(Error::NegativeRadicand);
    }
    Ok(SqrtBound { l_squared, r })
}
