use std::collections::BTreeMap;

use seshadri::arrangement::{invariants, verify_count_identity};
use seshadri::exact::{int, rat};
use seshadri::geometry::{
    build_fermat_plane, build_fermat_quartic_lines, hyperplane_grouping_fermat_quartic, preset, Preset,
};
use seshadri::lattice::SurfaceExt;
use seshadri::seshadri::{certify_main_theorem, min_curve_ratio, sqrt_upper_bound, Outcome};

#[test]
fn fermat_planes() {
    for n in 3u32..=6 {
        let plane = build_fermat_plane(n).unwrap();
        let arr = plane.arrangement();
        let inv = invariants(arr).unwrap();
        let n_ = n as usize;
        assert_eq!(arr.len(), 3 * n_);
        if n == 3 {
            assert_eq!(inv.t(3), 12);
            assert_eq!(inv.t.len(), 1);
        } else {
            assert_eq!((inv.t(n_), inv.t(3)), (3, n_ * n_));
        }
        assert!(inv.b.iter().all(|(_, b)| *b == n_ + 1));
        assert!(verify_count_identity(arr).unwrap().holds);
        let comb = invariants(&preset(Preset::FermatPlaneCombinatorial(n)).unwrap()).unwrap();
        assert_eq!(comb.t, inv.t);
    }
}

#[test]
fn fermat_plane_pencil_centres() {
    let plane = build_fermat_plane(4).unwrap();
    let centres: Vec<_> = plane.points().iter().filter(|(_, inc)| inc.len() == 4).collect();
    assert_eq!(centres.len(), 3);
    for (p, _) in centres {
        let zeros = p.coords().iter().filter(|c| c.is_zero()).count();
        assert_eq!(zeros, 2, "pencil centre {p:?} is a coordinate point");
    }
}

#[test]
fn fermat_quartic_profile() {
    let q = build_fermat_quartic_lines().unwrap();
    let arr = q.arrangement();
    let inv = invariants(arr).unwrap();
    assert_eq!(arr.len(), 48);
    assert_eq!(inv.f0, 216);
    assert_eq!((inv.t(2), inv.t(4)), (192, 24));
    assert_eq!(inv.f1, 480);
    for i in 0..arr.len() {
        let mut by_mult = BTreeMap::new();
        for p in arr.points().iter().filter(|p| p.incident.contains(&i)) {
            *by_mult.entry(p.multiplicity()).or_insert(0) += 1;
        }
        assert_eq!(by_mult, BTreeMap::from([(2, 8), (4, 2)]));
    }
    // pairs of meeting lines, counted through the points
    let meeting: usize = arr.points().iter().map(|p| p.multiplicity() * (p.multiplicity() - 1) / 2).sum();
    assert_eq!(meeting, 192 + 6 * 24);
    assert!(verify_count_identity(arr).unwrap().holds);
    for (p, _) in q.points() {
        assert!(q.quartic_at(p).is_zero());
    }
}

#[test]
fn fermat_quartic_hyperplanes() {
    let q = build_fermat_quartic_lines().unwrap();
    let groups = hyperplane_grouping_fermat_quartic(&q).unwrap();
    assert_eq!(groups.len(), 24);
    let mut membership = [0; 48];
    for g in &groups {
        assert_eq!(g.curves.len(), 4);
        for id in &g.curves {
            membership[q.arrangement().curve_index(id).unwrap()] += 1;
        }
    }
    assert!(membership.iter().all(|&m| m == 2));
    assert_eq!(groups[0].curves, ["A(1,1)", "A(1,3)", "A(1,5)", "A(1,7)"]);
}

#[test]
fn fermat_quartic_seshadri() {
    let q = build_fermat_quartic_lines().unwrap();
    let arr = q.arrangement();
    let h = q.hyperplane_class();
    assert_eq!(h.square(), int(4));
    let ratio = min_curve_ratio(arr, &h).unwrap();
    assert_eq!(ratio.value, rat(1, 10));
    let res = certify_main_theorem(arr, &h).unwrap();
    assert_eq!(res.outcome, Outcome::Candidate(rat(1, 10)));
    assert!(res.certificate.failures().any(|c| c.hypothesis.starts_with("N_i")));
    let bound = sqrt_upper_bound(&h, 216).unwrap();
    assert!(bound.admits(&ratio.value).unwrap());
    assert_eq!(arr.surface().class_i64(&[0; 49]).unwrap().square(), int(0));
}
