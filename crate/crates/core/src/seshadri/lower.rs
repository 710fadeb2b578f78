//! Lower bounds for the configurational Seshadri constant from
//! Hirzebruch-type inequalities.

use num_traits::{One, Signed, Zero};

use super::{degree_sum, Check};
use crate::arrangement::{check_assumption_star1, invariants, validate, Arrangement, InvariantSummary, ValidationLevel};
use crate::error::{Error, Result};
use crate::exact::{int, rat, Rational};
use crate::lattice::{is_ample, SurfaceExt, SurfaceKind};

/// Both sides of an inequality `lhs ≥ rhs` (or `lhs ≤ rhs`, see the
/// producing function).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InequalityReport {
    pub holds: bool,
    pub lhs: Rational,
    pub rhs: Rational,
}

fn violations(checks: &[Check]) -> Result<()> {
    let failed: Vec<String> = checks
        .iter()
        .filter(|c| !c.passed)
        .map(|c| format!("{}: {}", c.hypothesis, c.witness))
        .collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Error::HypothesesViolated(failed))
    }
}

fn usize_rat(n: usize) -> Rational {
    int(n as i64)
}

fn binom2(n: usize) -> Rational {
    usize_rat(n * n.saturating_sub(1) / 2)
}

/// Ruled-surface data `(g, e)` and the common class `(a, b)`, with the
/// hypotheses of the ruled Hirzebruch-type inequality checked.
struct RuledSetup {
    g: Rational,
    e: Rational,
    a: Rational,
    b: Rational,
    inv: InvariantSummary,
}

fn ruled_setup(arr: &Arrangement, expected: Option<(i64, i64)>) -> Result<(RuledSetup, Vec<Check>)> {
    let SurfaceKind::RuledSurface { genus, e } = *arr.surface().kind() else {
        return Err(Error::WrongSurface { expected: "ruled surface".into(), found: arr.surface().kind().to_string() });
    };
    let mut checks = vec![Check::new("e >= 4", e >= 4, format!("e = {e}"))];
    checks.push(Check::new(
        "equal classes, d >= 4, connected",
        check_assumption_star1(arr)?,
        format!("d = {}", arr.len()),
    ));
    let diags = validate(arr, ValidationLevel::LatticeEqualClasses);
    checks.push(Check::new(
        "transversal arrangement",
        diags.is_empty(),
        diags.first().map_or_else(|| "consistent".to_string(), |d| d.message.clone()),
    ));
    let class = arr.class(0)?;
    let (a, b) = class.ruled_coords().map(|(a, b)| (a.clone(), b.clone())).expect("ruled surface");
    if let Some((ea, eb)) = expected {
        let ok = a == int(ea) && b == int(eb);
        checks.push(Check::new("class is aC0 + bf", ok, format!("class {class}, expected a = {ea}, b = {eb}")));
    }
    let ae = &a * int(e);
    checks.push(Check::new("a > 0 and b >= ae", a.is_positive() && b >= ae, format!("a = {a}, b = {b}, ae = {ae}")));
    checks.push(Check::new(
        "not all curves through one point",
        !arr.all_through_one_point(),
        format!("max multiplicity {} vs d = {}", arr.max_multiplicity(), arr.len()),
    ));
    if a.is_one() {
        checks.push(Check::new(
            "some four curves without a common point",
            arr.has_four_without_common_point(),
            "needed when a = 1",
        ));
    }
    let inv = invariants(arr)?;
    Ok((RuledSetup { g: int(genus as i64), e: int(e), a, b, inv }, checks))
}

/// Hirzebruch-type inequality on a ruled surface with `e ≥ 4`:
///
/// `t₂ + ¾t₃ ≥ −16 + 16g + Σ_{k≥5}(2k−9)t_k + d(e(5a²−2a) − 10ab − 4ag + 4a + 4b)`.
///
/// `holds` reports `lhs ≥ rhs`. Hypothesis violations are errors.
pub fn verify_htin(arr: &Arrangement, a: i64, b: i64) -> Result<InequalityReport> {
    let (s, checks) = ruled_setup(arr, Some((a, b)))?;
    violations(&checks)?;
    let lhs = usize_rat(s.inv.t(2)) + rat(3, 4) * usize_rat(s.inv.t(3));
    let high: Rational = s
        .inv
        .t
        .iter()
        .filter(|(&k, _)| k >= 5)
        .map(|(&k, &t)| int(2 * k as i64 - 9) * usize_rat(t))
        .sum();
    let (g, e, a, b) = (&s.g, &s.e, &s.a, &s.b);
    let per_curve = e * (int(5) * a * a - int(2) * a) - int(10) * a * b - int(4) * a * g + int(4) * a + int(4) * b;
    let rhs = int(-16) + int(16) * g + high + usize_rat(s.inv.d) * per_curve;
    Ok(InequalityReport { holds: lhs >= rhs, lhs, rhs })
}

/// Lower bound for `ε_C(L)` on a ruled surface with `e ≥ 4`:
///
/// `d(L·C₁) / (8 − 8g + 9(2ab − a²e)d²/4 + d(2ae − a²e/2 + ab + 4ag − 4a − 4b)/2)`.
///
/// Also checks `L` ample and `d ≤ f₀ ≤ (2ab − a²e)·C(d,2)`.
pub fn lower_bound_ruled(arr: &Arrangement, l: &crate::lattice::DivisorClass) -> Result<Rational> {
    let (s, mut checks) = ruled_setup(arr, None)?;
    checks.push(Check::new("L ample", is_ample(arr.surface(), l)?, format!("L = {l}")));
    let (g, e, a, b) = (&s.g, &s.e, &s.a, &s.b);
    let c_sq = int(2) * a * b - a * a * e;
    let d = usize_rat(s.inv.d);
    let f0 = usize_rat(s.inv.f0);
    let cap = &c_sq * binom2(s.inv.d);
    checks.push(Check::new(
        "d <= f0 <= (2ab - a^2 e) C(d,2)",
        d <= f0 && f0 <= cap,
        format!("d = {d}, f0 = {f0}, cap = {cap}"),
    ));
    violations(&checks)?;
    let l_c1 = l.dot(arr.class(0)?)?;
    let den = int(8) - int(8) * g
        + int(9) * &c_sq * &d * &d / int(4)
        + &d * (int(2) * a * e - a * a * e / int(2) + a * b + int(4) * a * g - int(4) * a - int(4) * b) / int(2);
    if !den.is_positive() {
        return Err(Error::BoundVacuous(den.to_string()));
    }
    Ok(d * l_c1 / den)
}

struct KodairaData {
    c2: Rational,
    k_sq: Rational,
    k_dot_c: Rational,
    genus_term: Rational,
}

fn kodaira_data(arr: &Arrangement) -> Result<KodairaData> {
    let s = arr.surface();
    let c2 = s.chern_c2().cloned().ok_or(Error::MissingChernData("c2"))?;
    let k_sq = s.canonical_square().cloned().ok_or(Error::MissingChernData("K^2"))?;
    let k = s.canonical_class().ok_or(Error::MissingCanonicalClass)?;
    let k_dot_c = degree_sum(arr, &k)?;
    let mut genus_term = Rational::zero();
    for c in arr.curves() {
        let g = c.genus.as_ref().ok_or_else(|| Error::MissingGenus(c.id.clone()))?;
        genus_term += int(1) - g;
    }
    Ok(KodairaData { c2, k_sq, k_dot_c, genus_term: int(4) * genus_term })
}

fn require_kodaira_nonnegative(arr: &Arrangement) -> Result<()> {
    match arr.surface().kind() {
        SurfaceKind::AbstractLattice => Ok(()),
        other => Err(Error::HypothesesViolated(vec![format!("{other} has negative Kodaira dimension")])),
    }
}

/// Hirzebruch-type inequality on a surface of nonnegative Kodaira
/// dimension:
///
/// `K·C + 4Σ(1 − g(C_i)) − t₂ + Σ_{r≥3}(r − 4)t_r ≤ 3c₂ − K²`.
///
/// `holds` reports `lhs ≤ rhs`.
pub fn verify_lp_inequality(arr: &Arrangement) -> Result<InequalityReport> {
    require_kodaira_nonnegative(arr)?;
    let data = kodaira_data(arr)?;
    let inv = invariants(arr)?;
    let mut lhs = &data.k_dot_c + &data.genus_term - usize_rat(inv.t(2));
    for (&r, &t) in inv.t.range(3..) {
        lhs += int(r as i64 - 4) * usize_rat(t);
    }
    let rhs = int(3) * &data.c2 - &data.k_sq;
    Ok(InequalityReport { holds: lhs <= rhs, lhs, rhs })
}

/// Lower bound for `ε_C(L)` on a surface of nonnegative Kodaira dimension:
///
/// `d(L·C₁) / (3c₂ − K² + 4C₁²·C(d,2) − K·C − 4Σ(1 − g(C_i)))`.
pub fn lower_bound_kodaira(arr: &Arrangement, l: &crate::lattice::DivisorClass) -> Result<Rational> {
    require_kodaira_nonnegative(arr)?;
    let data = kodaira_data(arr)?;
    let inv = invariants(arr)?;
    let c1 = arr.class(0)?;
    let c1_sq = c1.square();
    let ample = match is_ample(arr.surface(), l) {
        Ok(v) => v,
        Err(Error::Unsupported(_)) => false,
        Err(e) => return Err(e),
    };
    let d = usize_rat(inv.d);
    let f0 = usize_rat(inv.f0);
    let cap = &c1_sq * binom2(inv.d);
    let checks = [
        Check::new("equal classes, d >= 4, connected", check_assumption_star1(arr)?, format!("d = {}", inv.d)),
        Check::new(
            "not all curves through one point",
            !arr.all_through_one_point(),
            format!("max multiplicity {}", arr.max_multiplicity()),
        ),
        Check::new("L ample", ample, format!("L = {l}")),
        Check::new("d <= f0 <= C1^2 C(d,2)", d <= f0 && f0 <= cap, format!("d = {d}, f0 = {f0}, cap = {cap}")),
    ];
    violations(&checks)?;
    let den = int(3) * &data.c2 - &data.k_sq + int(4) * c1_sq * binom2(inv.d) - &data.k_dot_c - &data.genus_term;
    if !den.is_positive() {
        return Err(Error::BoundVacuous(den.to_string()));
    }
    Ok(d * l.dot(c1)? / den)
}
