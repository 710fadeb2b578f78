use std::cmp::Ordering;

use serde_json::{json, Map, Value};
use seshadri::arrangement::{invariants, validate, verify_count_identity, Arrangement, ValidationLevel};
use seshadri::exact::{parse_rational, Rational};
use seshadri::geometry::{build_fermat_plane, build_fermat_quartic_lines, build_star_lines, preset, Preset};
use seshadri::lattice::{DivisorClass, SurfaceExt, SurfaceKind};
use seshadri::seshadri::{
    bounds_cor_main, certify_main_theorem, certify_star_corollary, configurational_epsilon, double_cover_k3,
    lower_bound_kodaira, lower_bound_ruled, min_curve_ratio, pullback_to_ruled, sqrt_upper_bound, verify_htin,
    verify_lp_inequality, Outcome, SeshadriResult,
};

use crate::document::ArrangementDocument;
use crate::error::CliError;
use crate::report::{digest, rational, render, Format};

/// What a command prints and how the process should exit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub body: String,
    /// `true` when some check failed (exit status 1).
    pub check_failed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BuildKind {
    FermatPlane(u32),
    FermatQuartic,
    Star { d: usize, seed: u64 },
    Preset(Preset),
    Pullback { source: ArrangementDocument, e: i64 },
    DoubleCover { source: ArrangementDocument },
}

fn plane_h(arr: &Arrangement) -> Result<DivisorClass, CliError> {
    Ok(arr.surface().class_i64(&[1])?)
}

/// Builds an arrangement together with its natural polarization.
pub fn build(kind: &BuildKind) -> Result<(Arrangement, DivisorClass), CliError> {
    let with_h = |arr: Arrangement| -> Result<_, CliError> {
        let h = plane_h(&arr)?;
        Ok((arr, h))
    };
    match kind {
        BuildKind::FermatPlane(n) => with_h(build_fermat_plane(*n)?.into_arrangement()),
        BuildKind::FermatQuartic => {
            let q = build_fermat_quartic_lines()?;
            let h = q.hyperplane_class();
            Ok((q.arrangement().clone(), h))
        }
        BuildKind::Star { d, seed } => with_h(build_star_lines(*d, *seed)?.into_arrangement()),
        BuildKind::Preset(p) => with_h(preset(*p)?),
        BuildKind::Pullback { source, e } => {
            let (plane, _) = source.to_arrangement()?;
            let arr = pullback_to_ruled(&plane, *e)?;
            let l = arr.surface().class_i64(&[1, e + 1])?;
            Ok((arr, l))
        }
        BuildKind::DoubleCover { source } => {
            let (plane, _) = source.to_arrangement()?;
            let arr = double_cover_k3(&plane)?;
            let l = arr.surface().class_i64(&[1])?;
            Ok((arr, l))
        }
    }
}

pub fn cmd_build(kind: &BuildKind) -> Result<CommandOutput, CliError> {
    let (arr, l) = build(kind)?;
    let body = ArrangementDocument::from_arrangement(&arr, Some(&l)).to_json();
    Ok(CommandOutput { body, check_failed: false })
}

/// Parses `"a/b,c/d,…"`.
pub fn parse_line_bundle(spec: &str) -> Result<Vec<Rational>, CliError> {
    spec.split(',')
        .enumerate()
        .map(|(i, part)| {
            parse_rational(part).map_err(|_| {
                CliError::Input(format!("--line-bundle entry {i}: expected a rational \"p/q\", found {part:?}"))
            })
        })
        .collect()
}

fn outcome_json(o: &Outcome) -> Value {
    match o {
        Outcome::Exact(v) => json!({ "kind": "exact", "value": rational(v) }),
        Outcome::Bounds { lower, upper } => {
            json!({ "kind": "bounds", "lower": rational(lower), "upper": rational(upper) })
        }
        Outcome::Candidate(v) => json!({ "kind": "candidate", "value": rational(v) }),
        Outcome::Inapplicable => json!({ "kind": "inapplicable" }),
    }
}

fn result_json(r: &SeshadriResult) -> Value {
    let checks: Vec<Value> = r
        .certificate
        .checks
        .iter()
        .map(|c| json!({ "hypothesis": c.hypothesis, "passed": c.passed, "witness": c.witness }))
        .collect();
    json!({ "theorem": r.certificate.theorem, "outcome": outcome_json(&r.outcome), "checks": checks })
}

fn not_applicable(reason: impl std::fmt::Display) -> Value {
    json!({ "status": "not applicable", "reason": reason.to_string() })
}

fn ordering_name(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "less",
        Ordering::Equal => "equal",
        Ordering::Greater => "greater",
    }
}

fn lower_bounds(arr: &Arrangement, l: &DivisorClass) -> Value {
    let mut out = Map::new();
    match arr.surface().kind() {
        SurfaceKind::RuledSurface { .. } => {
            let coords = arr
                .common_class()
                .ok()
                .flatten()
                .and_then(|c| c.ruled_coords().map(|(a, b)| (a.clone(), b.clone())));
            let htin = match coords {
                Some((a, b)) if a.is_integer() && b.is_integer() => {
                    let (a, b) = (a.to_integer().try_into().ok(), b.to_integer().try_into().ok());
                    match (a, b) {
                        (Some(a), Some(b)) => match verify_htin(arr, a, b) {
                            Ok(r) => json!({ "holds": r.holds, "lhs": rational(&r.lhs), "rhs": rational(&r.rhs) }),
                            Err(e) => not_applicable(e),
                        },
                        _ => not_applicable("class coefficients out of range"),
                    }
                }
                _ => not_applicable("curves are not all in one integral class"),
            };
            out.insert("ruled_inequality".into(), htin);
            let lb = match lower_bound_ruled(arr, l) {
                Ok(v) => json!({ "value": rational(&v) }),
                Err(e) => not_applicable(e),
            };
            out.insert("ruled_lower_bound".into(), lb);
        }
        SurfaceKind::AbstractLattice => {
            let lp = match verify_lp_inequality(arr) {
                Ok(r) => json!({ "holds": r.holds, "lhs": rational(&r.lhs), "rhs": rational(&r.rhs) }),
                Err(e) => not_applicable(e),
            };
            out.insert("kodaira_inequality".into(), lp);
            let lb = match lower_bound_kodaira(arr, l) {
                Ok(v) => json!({ "value": rational(&v) }),
                Err(e) => not_applicable(e),
            };
            out.insert("kodaira_lower_bound".into(), lb);
        }
        SurfaceKind::ProjectivePlane => {
            out.insert("status".into(), json!("no lower-bound theorem for this surface"));
        }
    }
    Value::Object(out)
}

/// Full analysis of a document under a line bundle.
pub fn cmd_analyze(input: &[u8], line_bundle: Option<&str>, format: Format) -> Result<CommandOutput, CliError> {
    let text = std::str::from_utf8(input).map_err(|e| CliError::Input(format!("input is not UTF-8: {e}")))?;
    let doc = ArrangementDocument::parse(text)?;
    let (arr, polarization) = doc.to_arrangement()?;
    let l = match (line_bundle, polarization) {
        (Some(spec), _) => arr.surface().class(parse_line_bundle(spec)?).map_err(|_| {
            CliError::Input(format!("--line-bundle needs {} entries for this surface", arr.surface().rank()))
        })?,
        (None, Some(p)) => p,
        (None, None) if arr.surface().rank() == 1 => arr.surface().class_i64(&[1])?,
        (None, None) => return Err(CliError::Input("no --line-bundle given and the document has no polarization".into())),
    };

    let mut warnings: Vec<String> = Vec::new();
    let mut failed = false;
    let mut report = Map::new();
    report.insert("command".into(), json!("analyze"));
    report.insert("decimals".into(), json!("advisory; exact fractions are authoritative"));
    report.insert(
        "input".into(),
        json!({
            "digest": digest(input),
            "surface": arr.surface().kind().to_string(),
            "curves": arr.len(),
            "points": arr.points().len(),
        }),
    );
    report.insert("line_bundle".into(), json!({ "class": l.to_string(), "self_intersection": rational(&l.square()) }));

    let inv = invariants(&arr)?;
    let t: Map<String, Value> = inv.t.iter().map(|(k, n)| (k.to_string(), json!(n))).collect();
    let b: Map<String, Value> = inv.b.iter().map(|(id, n)| (id.clone(), json!(n))).collect();
    report.insert(
        "invariants".into(),
        json!({ "d": inv.d, "t": t, "f0": inv.f0, "f1": inv.f1, "bs": inv.bs, "b": b }),
    );

    for d in validate(&arr, ValidationLevel::Lattice) {
        warnings.push(d.message);
    }

    match verify_count_identity(&arr) {
        Ok(id) => {
            failed |= !id.holds;
            report.insert(
                "count_identity".into(),
                json!({ "holds": id.holds, "lhs": rational(&id.lhs), "rhs": rational(&id.rhs) }),
            );
        }
        Err(e) => {
            report.insert("count_identity".into(), not_applicable(&e));
            warnings.push(e.to_string());
        }
    }

    match configurational_epsilon(&arr, &l) {
        Ok(v) => report.insert("configurational_epsilon".into(), rational(&v)),
        Err(e) => report.insert("configurational_epsilon".into(), not_applicable(e)),
    };
    let ratio = min_curve_ratio(&arr, &l);
    match &ratio {
        Ok(r) => report.insert("min_curve_ratio".into(), json!({ "value": rational(&r.value), "argmin": r.argmin })),
        Err(e) => report.insert("min_curve_ratio".into(), not_applicable(e)),
    };

    let mut certificates = Vec::new();
    let mut exact_values = Vec::new();
    for run in [certify_main_theorem, certify_star_corollary, bounds_cor_main] {
        match run(&arr, &l) {
            Ok(r) => {
                if let Some(v) = r.exact() {
                    exact_values.push(v.clone());
                }
                certificates.push(result_json(&r));
            }
            Err(e) => warnings.push(e.to_string()),
        }
    }
    report.insert("certificates".into(), Value::Array(certificates));

    let sqrt = match sqrt_upper_bound(&l, inv.f0.max(1)) {
        Ok(bound) => {
            let mut m = Map::new();
            m.insert("l_squared".into(), rational(&bound.l_squared));
            m.insert("points".into(), json!(bound.r));
            m.insert("radicand".into(), rational(&bound.radicand()));
            if let Ok(r) = &ratio {
                let cmp = bound.compare(&r.value)?;
                m.insert("min_ratio_vs_bound".into(), json!(ordering_name(cmp)));
            }
            let mut consistent = true;
            for v in &exact_values {
                consistent &= bound.admits(v)?;
            }
            failed |= !consistent;
            m.insert("certified_values_consistent".into(), json!(consistent));
            Value::Object(m)
        }
        Err(e) => not_applicable(e),
    };
    report.insert("sqrt_bound".into(), sqrt);
    report.insert("lower_bounds".into(), lower_bounds(&arr, &l));
    report.insert("warnings".into(), json!(warnings));
    Ok(CommandOutput { body: render(&report, format), check_failed: failed })
}

/// Re-emits a document in canonical form, or as a readable listing.
pub fn cmd_export(input: &[u8], format: Format) -> Result<CommandOutput, CliError> {
    let text = std::str::from_utf8(input).map_err(|e| CliError::Input(format!("input is not UTF-8: {e}")))?;
    let (arr, polarization) = ArrangementDocument::parse(text)?.to_arrangement()?;
    let body = match format {
        Format::MachineReadable => ArrangementDocument::from_arrangement(&arr, polarization.as_ref()).to_json(),
        Format::Text => {
            let mut report = Map::new();
            report.insert("surface".into(), json!(arr.surface().kind().to_string()));
            if let Some(p) = &polarization {
                report.insert("polarization".into(), json!(p.to_string()));
            }
            let curves: Map<String, Value> = arr
                .curves()
                .iter()
                .map(|c| {
                    let class = c.class.as_ref().map_or_else(|| "unknown".to_string(), ToString::to_string);
                    let genus = c.genus.as_ref().map_or_else(|| "unknown".to_string(), ToString::to_string);
                    (c.id.clone(), json!(format!("class {class}, genus {genus}")))
                })
                .collect();
            report.insert("curves".into(), Value::Object(curves));
            let points: Map<String, Value> = arr
                .points()
                .iter()
                .map(|p| {
                    let ids: Vec<&str> = p.incident.iter().map(|&i| arr.curves()[i].id.as_str()).collect();
                    (p.id.clone(), json!(ids))
                })
                .collect();
            report.insert("points".into(), Value::Object(points));
            render(&report, Format::Text)
        }
    };
    Ok(CommandOutput { body, check_failed: false })
}
