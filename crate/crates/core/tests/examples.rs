use std::cmp::Ordering;

use seshadri::arrangement::{
    check_assumption_star1, invariants, is_star, validate, verify_count_identity, Arrangement, Curve,
    DiagnosticKind, ValidationLevel,
};
use seshadri::exact::{int, rat, rat_cmp_sqrt, CyclotomicField};
use seshadri::geometry::{build_fermat_plane, build_star_lines, preset, Preset};
use seshadri::lattice::{adjunction_genus, is_ample, is_nef, pair, SurfaceExt, SurfaceModel};
use seshadri::seshadri::{
    bounds_cor_main, certify_main_theorem, certify_star_corollary, configurational_epsilon, min_curve_ratio,
    pullback_to_ruled, Outcome,
};
use seshadri::Error;

fn pulled_star(d: usize, e: i64) -> Arrangement {
    pullback_to_ruled(&build_star_lines(d, 11).unwrap().into_arrangement(), e).unwrap()
}

#[test]
fn cyclotomic_examples() {
    let q8 = CyclotomicField::new(8).unwrap();
    let z = q8.zeta();
    assert_eq!(&z * &z.pow(3), q8.from_int(-1));
    assert_eq!(z.inverse().unwrap(), q8.zeta_pow(7));
    assert_eq!(q8.from_int(2).inverse().unwrap(), q8.from_rational(rat(1, 2)));
    let q4 = CyclotomicField::new(4).unwrap();
    assert!((&q4.zeta() * &-q4.zeta()).is_one());
    let q3 = CyclotomicField::new(3).unwrap();
    assert!(z.try_add(&q3.zeta()).is_err());
}

#[test]
fn sqrt_comparisons() {
    assert_eq!(rat_cmp_sqrt(&rat(1, 10), &rat(4, 216)).unwrap(), Ordering::Less);
    assert_eq!(rat_cmp_sqrt(&rat(1, 2), &rat(1, 4)).unwrap(), Ordering::Equal);
    assert_eq!(rat_cmp_sqrt(&int(2), &int(9)).unwrap(), Ordering::Less);
    assert!(matches!(rat_cmp_sqrt(&int(1), &int(-1)), Err(Error::NegativeRadicand)));
}

#[test]
fn lattice_examples() {
    let x2 = SurfaceModel::ruled(0, 2);
    let c0 = x2.class_i64(&[1, 0]).unwrap();
    assert_eq!(pair(&x2, &c0, &c0).unwrap(), int(-2));
    let l = x2.class_i64(&[1, 3]).unwrap();
    let c = x2.class_i64(&[1, 2]).unwrap();
    assert_eq!(pair(&x2, &l, &c).unwrap(), int(3));
    assert!(!is_nef(&x2, &x2.class_i64(&[-1, 3]).unwrap()).unwrap());
    assert!(is_ample(&x2, &l).unwrap());
    assert!(!is_ample(&x2, &c).unwrap());
    assert!(is_nef(&x2, &c).unwrap());
    assert_eq!(adjunction_genus(&x2, &c).unwrap().genus, int(0));
    for e in 1..8 {
        let xe = SurfaceModel::ruled(0, e);
        let le = xe.class_i64(&[1, e + 1]).unwrap();
        let ce = xe.class_i64(&[1, e]).unwrap();
        assert_eq!(le.dot(&ce).unwrap(), int(e + 1));
        assert!(is_ample(&xe, &le).unwrap());
        assert!(is_nef(&xe, &ce).unwrap());
        assert!(is_nef(&xe, &xe.class_i64(&[0, 1]).unwrap()).unwrap());
    }
    let p2 = SurfaceModel::projective_plane();
    let h = p2.class_i64(&[1]).unwrap();
    assert_eq!(pair(&p2, &h, &h).unwrap(), int(1));
    assert_eq!(adjunction_genus(&p2, &h).unwrap().genus, int(0));
    let k3 = SurfaceModel::k3(vec!["E".into()], vec![vec![int(-2)]], vec![]).unwrap();
    assert_eq!(adjunction_genus(&k3, &k3.class_i64(&[1]).unwrap()).unwrap().genus, int(0));
}

#[test]
fn pulled_back_star_combinatorics() {
    let arr = pulled_star(5, 2);
    let inv = invariants(&arr).unwrap();
    assert_eq!(inv.t(2), 20);
    assert!(inv.b.iter().all(|(_, b)| *b == 8));
    let id = verify_count_identity(&arr).unwrap();
    assert!(id.holds);
    assert_eq!(id.lhs, int(20));
    assert!(validate(&arr, ValidationLevel::Lattice).is_empty());
    assert!(is_star(&arr));
    assert!(check_assumption_star1(&arr).unwrap());
}

#[test]
fn structural_diagnostics() {
    let p2 = SurfaceModel::projective_plane();
    let h = p2.class_i64(&[1]).unwrap();
    let lines = |n: usize| (1..=n).map(|i| Curve::new(format!("l{i}")).with_class(h.clone())).collect::<Vec<_>>();
    let lonely = Arrangement::new(p2.clone(), lines(3), vec![("p".into(), vec!["l1"])]).unwrap();
    let diags = validate(&lonely, ValidationLevel::Combinatorial);
    assert!(diags.iter().any(|d| d.kind == DiagnosticKind::LowMultiplicity
        && d.message.starts_with("point below multiplicity 2")));

    let pencils = Arrangement::new(
        p2.clone(),
        lines(4),
        vec![("p".into(), vec!["l1", "l2"]), ("q".into(), vec!["l3", "l4"])],
    )
    .unwrap();
    let diags = validate(&pencils, ValidationLevel::Combinatorial);
    assert!(diags.iter().any(|d| d.kind == DiagnosticKind::NotConnected && d.message.contains("not connected")));

    let triangle = build_star_lines(3, 1).unwrap().into_arrangement();
    assert!(!check_assumption_star1(&triangle).unwrap());
}

#[test]
fn preset_profiles() {
    let klein = preset(Preset::Klein).unwrap();
    let inv = invariants(&klein).unwrap();
    assert_eq!((inv.f0, inv.f1, inv.bs), (49, 168, 8));
    assert_eq!((inv.t(4), inv.t(3)), (21, 28));
    let id = verify_count_identity(&klein).unwrap();
    assert_eq!((id.lhs, id.rhs), (int(210), int(6 * 21 + 3 * 28)));

    let wiman = verify_count_identity(&preset(Preset::Wiman).unwrap()).unwrap();
    assert_eq!((wiman.lhs, wiman.rhs), (int(990), int(3 * 120 + 6 * 45 + 10 * 36)));

    let qp = invariants(&preset(Preset::QuasiPencil(5)).unwrap()).unwrap();
    assert_eq!((qp.t(4), qp.t(2)), (1, 4));

    let hesse = preset(Preset::HesseConics).unwrap();
    let inv = invariants(&hesse).unwrap();
    assert_eq!((inv.f0, inv.bs, inv.t(2), inv.t(8)), (21, 8, 12, 9));
    assert!(!is_star(&hesse));
    assert!(check_assumption_star1(&hesse).unwrap());
    assert!(!is_star(&build_fermat_plane(3).unwrap().into_arrangement()));
}

#[test]
fn configurational_examples() {
    for (n, e) in [(3u32, 4i64), (3, 5), (4, 5)] {
        let arr = pullback_to_ruled(&build_fermat_plane(n).unwrap().into_arrangement(), e).unwrap();
        let l = arr.surface().class_i64(&[1, e + 1]).unwrap();
        assert_eq!(configurational_epsilon(&arr, &l).unwrap(), rat(e + 1, e * (n as i64 + 1)));
    }
    for k in [5i64, 6] {
        let e = k + 1;
        let arr = pullback_to_ruled(&preset(Preset::QuasiPencil(k as usize)).unwrap(), e).unwrap();
        let l = arr.surface().class_i64(&[1, e + 1]).unwrap();
        assert_eq!(configurational_epsilon(&arr, &l).unwrap(), rat(k * (k + 2), 3 * (k * k - 1)));
        assert_eq!(min_curve_ratio(&arr, &l).unwrap().value, rat(k + 2, k * k - 1));
    }
    let arr = pulled_star(5, 2);
    let l = arr.surface().class_i64(&[1, 3]).unwrap();
    assert_eq!(configurational_epsilon(&arr, &l).unwrap(), rat(15, 40));
}

#[test]
fn certification_examples() {
    for d in [5usize, 6, 10] {
        let arr = build_star_lines(d, 3).unwrap().into_arrangement();
        let h = arr.surface().class_i64(&[1]).unwrap();
        let res = certify_main_theorem(&arr, &h).unwrap();
        assert!(res.certificate.all_passed());
        assert_eq!(res.outcome, Outcome::Exact(rat(1, d as i64 - 1)));
        let cor = certify_star_corollary(&arr, &h).unwrap();
        assert_eq!(cor.outcome, Outcome::Exact(rat(1, d as i64 - 1)));
        let b = bounds_cor_main(&arr, &h).unwrap();
        assert_eq!(b.outcome, Outcome::Bounds { lower: rat(1, d as i64 - 1), upper: rat(1, d as i64 - 1) });
    }
    let arr = pulled_star(5, 2);
    let l = arr.surface().class_i64(&[1, 3]).unwrap();
    let cor = certify_star_corollary(&arr, &l).unwrap();
    let failed = cor.certificate.failures().next().unwrap();
    assert_eq!(failed.divisor.as_ref().unwrap().coeffs(), &[rat(-1, 6), rat(1, 2)]);
    assert_eq!(failed.divisor.as_ref().unwrap().to_string(), "-1/6*C0 + 1/2*f");
}
