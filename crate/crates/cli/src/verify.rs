//! The reproduction suite behind `verify-paper`.
//!
//! Each criterion records named comparisons of expected against actual
//! values; all comparisons are exact.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt::Display;
use std::thread;

use serde_json::{json, Map, Value};
use seshadri::arrangement::{invariants, verify_count_identity, Arrangement};
use seshadri::exact::{int, rat, rat_cmp_sqrt, Rational};
use seshadri::geometry::{
    build_fermat_plane, build_fermat_quartic_lines, build_star_lines, hyperplane_grouping_fermat_quartic, preset,
    Preset,
};
use seshadri::lattice::{DivisorClass, SurfaceExt};
use seshadri::seshadri::{
    bounds_cor_main, certify_main_theorem, certify_star_corollary, configurational_epsilon, double_cover_k3,
    lower_bound_kodaira, lower_bound_ruled, min_curve_ratio, pullback_to_ruled, verify_htin, verify_lp_inequality,
    Outcome,
};

use crate::document::ArrangementDocument;
use crate::report::{render, Format};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionResult {
    pub id: u32,
    pub title: &'static str,
    pub checks: Vec<CheckResult>,
    /// Set when the criterion could not run to completion.
    pub error: Option<String>,
}

impl CriterionResult {
    pub fn passed(&self) -> bool {
        self.error.is_none() && !self.checks.is_empty() && self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Default)]
struct Recorder {
    checks: Vec<CheckResult>,
}

impl Recorder {
    fn eq<T: PartialEq + Display>(&mut self, name: impl Into<String>, expected: T, actual: T) {
        self.checks.push(CheckResult {
            name: name.into(),
            passed: expected == actual,
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
    }

    fn truth(&mut self, name: impl Into<String>, ok: bool, detail: impl Display) {
        self.checks.push(CheckResult {
            name: name.into(),
            passed: ok,
            expected: "true".into(),
            actual: if ok { "true".into() } else { format!("false ({detail})") },
        });
    }
}

type Suite = fn(&mut Recorder) -> seshadri::Result<()>;

const CRITERIA: [(u32, &str, Suite); 9] = [
    (1, "Fermat quartic lines", fermat_quartic),
    (2, "Fermat plane arrangements", fermat_planes),
    (3, "count identity on presets", preset_identities),
    (4, "pulled-back star on X_2", pulled_star),
    (5, "configurational constants of pullbacks", pullback_constants),
    (6, "Hesse arrangement of conics", hesse),
    (7, "star lines in the plane", plane_stars),
    (8, "double covers of Fermat arrangements", double_covers),
    (9, "property suites", properties),
];

pub fn criterion_titles() -> Vec<(u32, &'static str)> {
    CRITERIA.iter().map(|(id, title, _)| (*id, *title)).collect()
}

fn run_one(id: u32, title: &'static str, suite: Suite) -> CriterionResult {
    let mut rec = Recorder::default();
    let error = suite(&mut rec).err().map(|e| e.to_string());
    CriterionResult { id, title, checks: rec.checks, error }
}

/// Runs every criterion, concurrently, returning results in id order.
pub fn run_all() -> Vec<CriterionResult> {
    thread::scope(|s| {
        let handles: Vec<_> = CRITERIA
            .iter()
            .map(|&(id, title, suite)| s.spawn(move || run_one(id, title, suite)))
            .collect();
        handles.into_iter().map(|h| h.join().expect("criterion thread panicked")).collect()
    })
}

pub fn render_results(results: &[CriterionResult], format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = String::from("command: verify-paper\n");
            for r in results {
                let verdict = if r.passed() { "PASS" } else { "FAIL" };
                out.push_str(&format!("{verdict} {} {} ({} checks)\n", r.id, r.title, r.checks.len()));
                if let Some(e) = &r.error {
                    out.push_str(&format!("    error: {e}\n"));
                }
                for c in r.checks.iter().filter(|c| !c.passed) {
                    out.push_str(&format!("    {}: expected {}, actual {}\n", c.name, c.expected, c.actual));
                }
            }
            let passed = results.iter().filter(|r| r.passed()).count();
            out.push_str(&format!("{passed}/{} criteria passed\n", results.len()));
            out
        }
        Format::MachineReadable => {
            let mut report = Map::new();
            report.insert("command".into(), json!("verify-paper"));
            let items: Vec<Value> = results
                .iter()
                .map(|r| {
                    let checks: Vec<Value> = r
                        .checks
                        .iter()
                        .map(|c| json!({ "name": c.name, "passed": c.passed, "expected": c.expected, "actual": c.actual }))
                        .collect();
                    json!({ "id": r.id, "title": r.title, "passed": r.passed(), "error": r.error, "checks": checks })
                })
                .collect();
            report.insert("criteria".into(), Value::Array(items));
            report.insert("all_passed".into(), json!(results.iter().all(CriterionResult::passed)));
            render(&report, Format::MachineReadable)
        }
    }
}

fn h(arr: &Arrangement) -> seshadri::Result<DivisorClass> {
    arr.surface().class_i64(&[1])
}

fn fermat_quartic(r: &mut Recorder) -> seshadri::Result<()> {
    let q = build_fermat_quartic_lines()?;
    let arr = q.arrangement();
    let inv = invariants(arr)?;
    r.eq("lines", 48, arr.len());
    r.eq("singular points", 216, inv.f0);
    r.eq("t_2", 192, inv.t(2));
    r.eq("t_4", 24, inv.t(4));
    let profile_ok = (0..arr.len())
        .filter(|&i| {
            let on: Vec<_> = arr.points().iter().filter(|p| p.incident.contains(&i)).collect();
            let quadruple = on.iter().filter(|p| p.multiplicity() == 4).count();
            let double = on.iter().filter(|p| p.multiplicity() == 2).count();
            on.len() == 10 && quadruple == 2 && double == 8
        })
        .count();
    r.eq("lines with 2 quadruple + 8 double points", 48, profile_ok);
    let l = q.hyperplane_class();
    r.eq("O_X(1)^2", int(4), l.square());
    r.eq("min curve ratio", rat(1, 10), min_curve_ratio(arr, &l)?.value);
    let groups = hyperplane_grouping_fermat_quartic(&q)?;
    r.eq("hyperplane groups", 24, groups.len());
    r.eq("groups of 4 lines", 24, groups.iter().filter(|g| g.curves.len() == 4).count());
    let mut membership = vec![0usize; arr.len()];
    for g in &groups {
        for id in &g.curves {
            if let Some(i) = arr.curve_index(id) {
                membership[i] += 1;
            }
        }
    }
    r.eq("lines in exactly 2 groups", 48, membership.iter().filter(|&&m| m == 2).count());
    r.eq(
        "rat_cmp_sqrt(1/10, 4/216)",
        "less",
        match rat_cmp_sqrt(&rat(1, 10), &rat(4, 216))? {
            Ordering::Less => "less",
            Ordering::Equal => "equal",
            Ordering::Greater => "greater",
        },
    );
    Ok(())
}

fn fermat_planes(r: &mut Recorder) -> seshadri::Result<()> {
    for n in 3u32..=6 {
        let arr = build_fermat_plane(n)?.into_arrangement();
        let inv = invariants(&arr)?;
        let n_ = n as usize;
        if n == 3 {
            r.eq("n=3 triple points", 12, inv.t(3));
            r.eq("n=3 distinct multiplicities", 1, inv.t.len());
        } else {
            r.eq(format!("n={n} t_{n}"), 3, inv.t(n_));
            r.eq(format!("n={n} t_3"), n_ * n_, inv.t(3));
        }
        let per_line = inv.b.iter().filter(|(_, b)| *b == n_ + 1).count();
        r.eq(format!("n={n} lines with n+1 points"), 3 * n_, per_line);
        let id = verify_count_identity(&arr)?;
        r.eq(format!("n={n} count identity"), id.lhs, id.rhs);
    }
    Ok(())
}

fn preset_identities(r: &mut Recorder) -> seshadri::Result<()> {
    let klein = verify_count_identity(&preset(Preset::Klein)?)?;
    r.eq("Klein lhs", int(210), klein.lhs);
    r.eq("Klein rhs 6*21 + 3*28", int(6 * 21 + 3 * 28), klein.rhs);
    let wiman = verify_count_identity(&preset(Preset::Wiman)?)?;
    r.eq("Wiman lhs", int(990), wiman.lhs);
    r.eq("Wiman rhs 3*120 + 6*45 + 10*36", int(3 * 120 + 6 * 45 + 10 * 36), wiman.rhs);
    for k in 4..=8 {
        let id = verify_count_identity(&preset(Preset::QuasiPencil(k))?)?;
        r.eq(format!("quasi-pencil({k})"), id.lhs, id.rhs);
    }
    Ok(())
}

fn pulled_star(r: &mut Recorder) -> seshadri::Result<()> {
    let arr = pullback_to_ruled(&build_star_lines(5, 1)?.into_arrangement(), 2)?;
    let l = arr.surface().class_i64(&[1, 3])?;
    let cor = certify_star_corollary(&arr, &l)?;
    let failing: Vec<_> = cor.certificate.failures().collect();
    let nef_failed = failing.iter().any(|c| c.hypothesis.ends_with("nef"));
    r.truth("star corollary nefness check fails", nef_failed, format!("{} failures", failing.len()));
    let witness = failing.iter().find_map(|c| c.divisor.clone());
    let expected = arr.surface().class(vec![rat(-1, 6), rat(1, 2)])?;
    r.eq(
        "witness divisor",
        expected.to_string(),
        witness.map_or_else(|| "none".into(), |d| d.to_string()),
    );
    r.eq("min curve ratio", rat(3, 8), min_curve_ratio(&arr, &l)?.value);
    r.eq("configurational epsilon", rat(3, 8), configurational_epsilon(&arr, &l)?);
    Ok(())
}

fn pullback_constants(r: &mut Recorder) -> seshadri::Result<()> {
    let eps = |plane: &Arrangement, e: i64| -> seshadri::Result<(Arrangement, Rational)> {
        let arr = pullback_to_ruled(plane, e)?;
        let l = arr.surface().class_i64(&[1, e + 1])?;
        let v = configurational_epsilon(&arr, &l)?;
        Ok((arr, v))
    };
    for (n, e) in [(3u32, 4i64), (3, 5), (4, 5)] {
        let (_, v) = eps(&build_fermat_plane(n)?.into_arrangement(), e)?;
        r.eq(format!("Fermat n={n}, e={e}"), rat(e + 1, e * (n as i64 + 1)), v);
    }
    for e in [2i64, 3, 8] {
        let (_, v) = eps(&preset(Preset::Klein)?, e)?;
        r.eq(format!("Klein e={e}"), rat(e + 1, 8 * e), v);
        let (_, v) = eps(&preset(Preset::Wiman)?, e)?;
        r.eq(format!("Wiman e={e}"), rat(e + 1, 16 * e), v);
    }
    for k in [5i64, 6] {
        let e = k + 1;
        let (arr, v) = eps(&preset(Preset::QuasiPencil(k as usize))?, e)?;
        r.eq(format!("quasi-pencil({k}) configurational"), rat(k * (k + 2), 3 * (k * k - 1)), v);
        let l = arr.surface().class_i64(&[1, e + 1])?;
        r.eq(format!("quasi-pencil({k}) min ratio"), rat(k + 2, k * k - 1), min_curve_ratio(&arr, &l)?.value);
    }
    Ok(())
}

fn hesse(r: &mut Recorder) -> seshadri::Result<()> {
    let arr = preset(Preset::HesseConics)?;
    let l = h(&arr)?;
    let main = certify_main_theorem(&arr, &l)?;
    let nef_failed = main.certificate.failures().any(|c| c.hypothesis.contains("nef"));
    r.truth("main theorem nefness fails", nef_failed, main.outcome.to_string());
    r.truth("main theorem not certified", !main.is_exact(), main.outcome.to_string());
    let bounds = bounds_cor_main(&arr, &l)?;
    r.eq(
        "bounds",
        Outcome::Bounds { lower: rat(1, 22), upper: rat(1, 4) }.to_string(),
        bounds.outcome.to_string(),
    );
    r.eq("base constant", 8, invariants(&arr)?.bs);
    Ok(())
}

fn plane_stars(r: &mut Recorder) -> seshadri::Result<()> {
    for d in [5usize, 6, 10] {
        let arr = build_star_lines(d, d as u64)?.into_arrangement();
        let l = h(&arr)?;
        let res = certify_main_theorem(&arr, &l)?;
        r.eq(format!("d={d} main theorem"), Outcome::Exact(rat(1, d as i64 - 1)).to_string(), res.outcome.to_string());
        r.truth(
            format!("d={d} all hypotheses pass"),
            res.certificate.all_passed(),
            res.certificate.failures().map(|c| c.hypothesis.clone()).collect::<Vec<_>>().join("; "),
        );
        let cor = certify_star_corollary(&arr, &l)?;
        r.eq(format!("d={d} star corollary"), Outcome::Exact(rat(1, d as i64 - 1)).to_string(), cor.outcome.to_string());
    }
    Ok(())
}

fn double_covers(r: &mut Recorder) -> seshadri::Result<()> {
    for n in [3i64, 4] {
        let arr = double_cover_k3(&build_fermat_plane(n as u32)?.into_arrangement())?;
        let l = h(&arr)?;
        let b = bounds_cor_main(&arr, &l)?;
        r.eq(
            format!("n={n} bounds"),
            Outcome::Bounds { lower: rat(1, 3 * n - 1), upper: rat(1, n + 1) }.to_string(),
            b.outcome.to_string(),
        );
        if n == 3 {
            let k = lower_bound_kodaira(&arr, &l)?;
            r.eq("n=3 Kodaira lower bound", rat(18, 396), k.clone());
            let eps = configurational_epsilon(&arr, &l)?;
            r.truth("n=3 lower bound <= configurational epsilon", k <= eps, format!("{k} > {eps}"));
            let lp = verify_lp_inequality(&arr)?;
            r.truth("n=3 inequality for nonnegative Kodaira dimension", lp.holds, format!("{} > {}", lp.lhs, lp.rhs));
        }
    }
    Ok(())
}

fn arrangement_corpus() -> seshadri::Result<Vec<(String, Arrangement)>> {
    let mut plane = Vec::new();
    for n in 3..=6 {
        plane.push((format!("fermat-plane({n})"), build_fermat_plane(n)?.into_arrangement()));
    }
    for p in [Preset::Klein, Preset::Wiman].into_iter().chain((4..=8).map(Preset::QuasiPencil)) {
        plane.push((p.to_string(), preset(p)?));
    }
    for d in [4usize, 5, 6, 10] {
        plane.push((format!("star({d})"), build_star_lines(d, d as u64)?.into_arrangement()));
    }
    let mut all = plane.clone();
    all.push(("hesse_conics".into(), preset(Preset::HesseConics)?));
    all.push(("fermat-quartic".into(), build_fermat_quartic_lines()?.arrangement().clone()));
    for (name, arr) in &plane {
        for e in [2i64, 4, 5] {
            all.push((format!("{name} on X_{e}"), pullback_to_ruled(arr, e)?));
        }
        all.push((format!("{name} double cover"), double_cover_k3(arr)?));
    }
    Ok(all)
}

fn incidence_sets(arr: &Arrangement) -> BTreeSet<(String, Vec<String>)> {
    arr.points()
        .iter()
        .map(|p| (p.id.clone(), p.incident.iter().map(|&i| arr.curves()[i].id.clone()).collect()))
        .collect()
}

fn properties(r: &mut Recorder) -> seshadri::Result<()> {
    let mut star_ok = 0;
    for seed in 0..200u64 {
        let d = 4 + (seed % 9) as usize;
        let id = verify_count_identity(&build_star_lines(d, 1000 + seed)?.into_arrangement())?;
        star_ok += usize::from(id.holds);
    }
    r.eq("count identity on random stars", 200, star_ok);

    let corpus = arrangement_corpus()?;
    let f1_ok = corpus
        .iter()
        .filter(|(_, a)| invariants(a).map(|i| i.f1 == i.b.iter().map(|(_, b)| b).sum::<usize>()).unwrap_or(false))
        .count();
    r.eq("f1 equals sum of b_i", corpus.len(), f1_ok);

    let mut homogeneous = 0;
    let mut tested = 0;
    for (_, arr) in corpus.iter().filter(|(name, _)| name.ends_with("on X_2")) {
        let l = arr.surface().class_i64(&[1, 3])?;
        for m in [2i64, 3] {
            tested += 1;
            let ml = l.scale(&int(m));
            let (a, b) = (min_curve_ratio(arr, &l)?, min_curve_ratio(arr, &ml)?);
            let (ca, cb) = (certify_main_theorem(arr, &l)?, certify_main_theorem(arr, &ml)?);
            let status = |c: &seshadri::seshadri::SeshadriResult| {
                c.certificate.checks.iter().map(|k| k.passed).collect::<Vec<_>>()
            };
            let bounds_scale = match (bounds_cor_main(arr, &l)?.outcome, bounds_cor_main(arr, &ml)?.outcome) {
                (Outcome::Bounds { lower, upper }, Outcome::Bounds { lower: lm, upper: um }) => {
                    lm == &lower * int(m) && um == &upper * int(m)
                }
                (x, y) => x == y,
            };
            let ok = b.value == &a.value * int(m)
                && a.argmin == b.argmin
                && configurational_epsilon(arr, &ml)? == configurational_epsilon(arr, &l)? * int(m)
                && status(&ca) == status(&cb)
                && bounds_scale;
            homogeneous += usize::from(ok);
        }
    }
    r.eq("homogeneity under L -> mL", tested, homogeneous);

    let (mut ruled_tested, mut ruled_ok) = (0, 0);
    for (_, arr) in corpus.iter().filter(|(n, _)| n.ends_with("on X_4") || n.ends_with("on X_5")) {
        let e = arr.common_class()?.and_then(|c| c.ruled_coords().map(|(_, b)| b.clone())).unwrap_or_default();
        let e: i64 = e.to_integer().try_into().unwrap_or(0);
        let Ok(report) = verify_htin(arr, 1, e) else { continue };
        let l = arr.surface().class_i64(&[1, e + 1])?;
        ruled_tested += 1;
        let below = match lower_bound_ruled(arr, &l) {
            Ok(lb) => lb <= configurational_epsilon(arr, &l)?,
            Err(seshadri::Error::HypothesesViolated(_)) => true,
            Err(e) => return Err(e),
        };
        ruled_ok += usize::from(report.holds && below);
    }
    r.truth("pulled-back instances meeting the hypotheses", ruled_tested >= 10, format!("{ruled_tested} instances"));
    r.eq("ruled inequality and lower bound", ruled_tested, ruled_ok);

    let mut round_trip = 0;
    for (_, arr) in &corpus {
        let doc = ArrangementDocument::from_arrangement(arr, None);
        let same = ArrangementDocument::parse(&doc.to_json())
            .and_then(|d| d.to_arrangement())
            .map(|(back, _)| {
                invariants(&back).ok() == invariants(arr).ok() && incidence_sets(&back) == incidence_sets(arr)
            })
            .unwrap_or(false);
        round_trip += usize::from(same);
    }
    r.eq("round-trip serialization", corpus.len(), round_trip);
    Ok(())
}
