use std::collections::BTreeSet;

use proptest::prelude::*;
use seshadri::arrangement::{invariants, Arrangement};
use seshadri::geometry::{build_star_lines, preset, Preset};
use seshadri::lattice::SurfaceExt;
use seshadri::seshadri::{double_cover_k3, pullback_to_ruled};
use seshadri_cli::commands::{build, BuildKind};
use seshadri_cli::document::ArrangementDocument;

fn incidences(arr: &Arrangement) -> BTreeSet<(String, BTreeSet<String>)> {
    arr.points()
        .iter()
        .map(|p| (p.id.clone(), p.incident.iter().map(|&i| arr.curves()[i].id.clone()).collect()))
        .collect()
}

fn assert_round_trip(arr: &Arrangement) {
    let text = ArrangementDocument::from_arrangement(arr, None).to_json();
    let (back, pol) = ArrangementDocument::parse(&text).unwrap().to_arrangement().unwrap();
    assert!(pol.is_none());
    assert_eq!(invariants(&back).unwrap(), invariants(arr).unwrap());
    assert_eq!(incidences(&back), incidences(arr));
    assert_eq!(back.surface().gram(), arr.surface().gram());
    for (a, b) in arr.curves().iter().zip(back.curves()) {
        assert_eq!(a.id, b.id);
        assert_eq!(a.genus, b.genus);
        assert_eq!(a.class.as_ref().map(|c| c.coeffs().to_vec()), b.class.as_ref().map(|c| c.coeffs().to_vec()));
    }
    assert_eq!(ArrangementDocument::from_arrangement(&back, None).to_json(), text);
}

#[test]
fn presets_and_geometry_round_trip() {
    let kinds = [
        BuildKind::FermatPlane(4),
        BuildKind::FermatQuartic,
        BuildKind::Preset(Preset::Klein),
        BuildKind::Preset(Preset::Wiman),
        BuildKind::Preset(Preset::HesseConics),
        BuildKind::Preset(Preset::QuasiPencil(6)),
        BuildKind::Preset(Preset::FermatPlaneCombinatorial(5)),
    ];
    for kind in &kinds {
        let (arr, l) = build(kind).unwrap();
        assert_round_trip(&arr);
        let text = ArrangementDocument::from_arrangement(&arr, Some(&l)).to_json();
        let (_, pol) = ArrangementDocument::parse(&text).unwrap().to_arrangement().unwrap();
        assert_eq!(pol.unwrap().coeffs(), l.coeffs());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn generated_round_trip(d in 4usize..9, seed in any::<u64>(), e in 1i64..6, which in 0usize..3) {
        let plane = build_star_lines(d, seed).unwrap().into_arrangement();
        let arr = match which {
            0 => plane,
            1 => pullback_to_ruled(&plane, e).unwrap(),
            _ => double_cover_k3(&plane).unwrap(),
        };
        assert_round_trip(&arr);
        prop_assert!(arr.surface().class_i64(&vec![0; arr.surface().rank()]).is_ok());
    }

    #[test]
    fn quasi_pencils_round_trip(k in 4usize..12, e in 1i64..5) {
        let arr = pullback_to_ruled(&preset(Preset::QuasiPencil(k)).unwrap(), e).unwrap();
        assert_round_trip(&arr);
    }
}
