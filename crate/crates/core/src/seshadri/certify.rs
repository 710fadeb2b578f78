use num_traits::{Signed, Zero};

use super::{degree_sum, min_curve_ratio, Certificate, Check, SeshadriResult};
use crate::arrangement::{check_assumption_star1, is_star, validate, Arrangement, ValidationLevel};
use crate::error::{Error, Result};
use crate::exact::{int, Rational};
use crate::lattice::{is_ample, is_nef, DivisorClass, SurfaceExt, SurfaceKind};

pub const MAIN_THEOREM: &str = "main theorem (nef transversal arrangement)";
pub const STAR_COROLLARY: &str = "star corollary";
pub const BOUNDS_COROLLARY: &str = "two-sided bounds corollary";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NefStatus {
    Nef(String),
    NotNef(String),
    Undecided(String),
}

/// Decides nefness of `d`, falling back on the arrangement when the surface
/// has no criterion: the curves of an arrangement are irreducible, so a
/// negative intersection with one of them rules nefness out.
pub fn nef_status(arr: &Arrangement, d: &DivisorClass) -> Result<NefStatus> {
    let surface = arr.surface();
    match is_nef(surface, d) {
        Ok(true) => Ok(NefStatus::Nef("nef by the criterion of the surface".into())),
        Ok(false) => Ok(NefStatus::NotNef(not_nef_witness(d)?)),
        Err(Error::Unsupported(_)) => {
            for c in arr.curves() {
                let Some(class) = &c.class else { continue };
                let product = d.dot(class)?;
                if product.is_negative() {
                    return Ok(NefStatus::NotNef(format!("intersection with curve {} is {product} < 0", c.id)));
                }
            }
            Ok(NefStatus::Undecided("nefness undecidable on this surface".into()))
        }
        Err(e) => Err(e),
    }
}

fn not_nef_witness(d: &DivisorClass) -> Result<String> {
    let s = d.surface();
    let probe = |coeffs: &[i64], name: &str| -> Result<Option<String>> {
        let c = s.class_i64(coeffs)?;
        let v = d.dot(&c)?;
        Ok(v.is_negative().then(|| format!("({d})·{name} = {v} < 0")))
    };
    let found = match s.kind() {
        SurfaceKind::ProjectivePlane => probe(&[1], "H")?,
        SurfaceKind::RuledSurface { .. } => match probe(&[0, 1], "f")? {
            Some(w) => Some(w),
            None => probe(&[1, 0], "C0")?,
        },
        SurfaceKind::AbstractLattice => None,
    };
    Ok(found.unwrap_or_else(|| format!("{d} fails the nef criterion")))
}

fn nef_check(arr: &Arrangement, hypothesis: &str, d: DivisorClass) -> Result<Check> {
    let (passed, witness) = match nef_status(arr, &d)? {
        NefStatus::Nef(w) => (true, w),
        NefStatus::NotNef(w) => (false, w),
        NefStatus::Undecided(w) => (false, w),
    };
    Ok(Check::new(hypothesis, passed, format!("{d}: {witness}")).with_divisor(d))
}

fn ample_check(arr: &Arrangement, l: &DivisorClass) -> Result<Check> {
    let (passed, witness) = match is_ample(arr.surface(), l) {
        Ok(true) => (true, format!("{l} is ample")),
        Ok(false) => (false, format!("{l} is not ample")),
        Err(Error::Unsupported(_)) => (false, "ampleness undecidable on this surface".to_string()),
        Err(e) => return Err(e),
    };
    Ok(Check::new("L ample", passed, witness).with_divisor(l.clone()))
}

fn validation_check(arr: &Arrangement, level: ValidationLevel) -> Check {
    let diags = validate(arr, level);
    let witness = match diags.first() {
        None => "incidences agree with intersection numbers".to_string(),
        Some(d) if diags.len() == 1 => d.message.clone(),
        Some(d) => format!("{} (and {} more)", d.message, diags.len() - 1),
    };
    Check::new("transversal arrangement", diags.is_empty(), witness)
}

fn size_check(arr: &Arrangement) -> Check {
    Check::new("d >= 4", arr.len() >= 4, format!("d = {}", arr.len()))
}

fn connected_check(arr: &Arrangement) -> Check {
    let ok = arr.is_connected();
    Check::new("connected", ok, if ok { "connected" } else { "not connected" })
}

fn assumption_check(arr: &Arrangement) -> Result<Check> {
    let ok = check_assumption_star1(arr)?;
    let witness = match arr.common_class()? {
        Some(c) => format!("d = {}, every curve in class {c}", arr.len()),
        None => "curve classes differ".to_string(),
    };
    Ok(Check::new("equal classes, d >= 4, connected", ok, witness))
}

/// Main theorem: when `L` is ample and
/// `N_i = (d·Σb_i / ((d−1)²·Σ L·C_i))·L − C_i` is nef for every `i`, the
/// Seshadri constant at the singular points is `min_i L·C_i / b_i`.
pub fn certify_main_theorem(arr: &Arrangement, l: &DivisorClass) -> Result<SeshadriResult> {
    let ratio = min_curve_ratio(arr, l)?;
    let mut checks = vec![
        size_check(arr),
        validation_check(arr, ValidationLevel::Lattice),
        connected_check(arr),
        ample_check(arr, l)?,
    ];

    let d = arr.len() as i64;
    let b_sum: usize = arr.points_per_curve().iter().sum();
    let degree = degree_sum(arr, l)?;
    let hypothesis = "N_i = (d*sum(b)/((d-1)^2*sum(L.C)))L - C_i nef for all i";
    if degree.is_zero() || d < 2 {
        checks.push(Check::new(hypothesis, false, "sum of L.C_i is zero"));
    } else {
        let lambda = int(d * b_sum as i64) / (int((d - 1) * (d - 1)) * &degree);
        let scaled = l.scale(&lambda);
        let mut failing = None;
        let mut first = None;
        for (i, c) in arr.classes()?.into_iter().enumerate() {
            if i > 0 && arr.class(i - 1)? == c {
                continue;
            }
            let check = nef_check(arr, hypothesis, scaled.try_sub(c)?)?;
            let check = Check { witness: format!("curve {}: {}", arr.curves()[i].id, check.witness), ..check };
            if !check.passed {
                failing = Some(check);
                break;
            }
            first.get_or_insert(check);
        }
        checks.push(failing.or(first).expect("at least one curve"));
    }

    Ok(SeshadriResult::value(Certificate { theorem: MAIN_THEOREM.into(), checks }, ratio.value))
}

/// Star corollary: for a star configuration of `d ≥ 4` curves in one class
/// and ample `L` with `(d·C₁² / ((d−1)·L·C₁))·L − C₁` nef, the constant is
/// `L·C₁ / (C₁²(d−1))`.
pub fn certify_star_corollary(arr: &Arrangement, l: &DivisorClass) -> Result<SeshadriResult> {
    let star = is_star(arr);
    let mut checks = vec![
        Check::new(
            "star configuration",
            star,
            if star {
                "all singular points are double points".to_string()
            } else {
                format!("a point of multiplicity {} exists", arr.max_multiplicity())
            },
        ),
        assumption_check(arr)?,
        validation_check(arr, ValidationLevel::LatticeEqualClasses),
        ample_check(arr, l)?,
    ];
    let c1 = arr.class(0)?;
    let (value, nef) = cor_divisor(arr, l, c1)?;
    checks.push(nef);
    let certificate = Certificate { theorem: STAR_COROLLARY.into(), checks };
    // the closed form is only meaningful once the hypotheses hold
    let value = match value {
        Some(v) if certificate.all_passed() => v,
        _ => min_curve_ratio(arr, l)?.value,
    };
    Ok(SeshadriResult::value(certificate, value))
}

/// `L·C₁ / (C₁²(d−1))` and the nefness check of
/// `(d·C₁² / ((d−1)·L·C₁))·L − C₁`.
fn cor_divisor(arr: &Arrangement, l: &DivisorClass, c1: &DivisorClass) -> Result<(Option<Rational>, Check)> {
    let hypothesis = "(d*C1^2/((d-1)*L.C1))L - C1 nef";
    let d = arr.len() as i64;
    let c1_sq = c1.square();
    let l_c1 = l.dot(c1)?;
    if d < 2 || !c1_sq.is_positive() || !l_c1.is_positive() {
        let witness = format!("C1^2 = {c1_sq}, L.C1 = {l_c1}: need both positive");
        return Ok((None, Check::new(hypothesis, false, witness)));
    }
    let lambda = int(d) * &c1_sq / (int(d - 1) * &l_c1);
    let check = nef_check(arr, hypothesis, l.scale(&lambda).try_sub(c1)?)?;
    Ok((Some(l_c1 / (c1_sq * int(d - 1))), check))
}

/// Two-sided bounds for arrangements of `d ≥ 4` curves in one class:
/// `L·C₁/(C₁²(d−1)) ≤ ε ≤ L·C₁/bs(C)`, under the same nefness hypothesis
/// as the star corollary.
pub fn bounds_cor_main(arr: &Arrangement, l: &DivisorClass) -> Result<SeshadriResult> {
    let mut checks = vec![
        assumption_check(arr)?,
        validation_check(arr, ValidationLevel::LatticeEqualClasses),
        ample_check(arr, l)?,
    ];
    let c1 = arr.class(0)?;
    let (lower, nef) = cor_divisor(arr, l, c1)?;
    checks.push(nef);
    let bs = arr.points_per_curve().into_iter().max().unwrap_or(0);
    let certificate = Certificate { theorem: BOUNDS_COROLLARY.into(), checks };
    match (lower, bs) {
        (Some(lower), bs) if bs > 0 => {
            let upper = l.dot(c1)? / int(bs as i64);
            Ok(SeshadriResult::bounds(certificate, lower, upper))
        }
        _ => Ok(SeshadriResult { outcome: super::Outcome::Inapplicable, certificate }),
    }
}
