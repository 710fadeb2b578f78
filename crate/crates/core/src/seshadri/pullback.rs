use crate::arrangement::{Arrangement, Curve};
use crate::error::{Error, Result};
use crate::exact::int;
use crate::lattice::{SurfaceExt, SurfaceModel};

fn require_plane_lines(arr: &Arrangement) -> Result<()> {
    if !arr.surface().is_projective_plane() {
        return Err(Error::WrongSurface { expected: "P2".into(), found: arr.surface().kind().to_string() });
    }
    let h = arr.surface().class_i64(&[1])?;
    for c in arr.curves() {
        if c.class.as_ref() != Some(&h) {
            return Err(Error::InvalidParameter(format!("curve {:?} is not a line", c.id)));
        }
    }
    Ok(())
}

/// Replicates every point `copies` times with the same incidences.
fn replicate(arr: &Arrangement, copies: usize) -> Vec<(String, Vec<usize>)> {
    arr.points()
        .iter()
        .flat_map(|p| {
            (1..=copies).map(move |k| (format!("{}.{k}", p.id), p.incident.iter().copied().collect()))
        })
        .collect()
}

/// Pulls a line arrangement of ℙ² back to the rational ruled surface `X_e`
/// through the degree `e` cover `X_e → X₁`.
///
/// Each line becomes a curve in `|C₀ + ef|` (self-intersection `e`, genus 0)
/// and each singular point of multiplicity `k` becomes `e` points of
/// multiplicity `k`; point `p` yields `p.1, …, p.e`.
pub fn pullback_to_ruled(plane: &Arrangement, e: i64) -> Result<Arrangement> {
    require_plane_lines(plane)?;
    if e < 1 {
        return Err(Error::InvalidParameter(format!("pullback needs e >= 1, got {e}")));
    }
    let xe = SurfaceModel::ruled(0, e);
    let class = xe.class_i64(&[1, e])?;
    let curves = plane
        .curves()
        .iter()
        .map(|c| Curve::new(c.id.clone()).with_class(class.clone()).with_genus(int(0)))
        .collect();
    Arrangement::from_indices(xe, curves, replicate(plane, e as usize))
}

/// Preimage of a line arrangement under a double cover `X → ℙ²` branched
/// along a sextic avoiding the singular points, `X` a K3 surface.
///
/// The lattice is the rank one span of `L = π*O(1)` with `L² = 2`, recorded
/// as ample. Each curve is in class `L` and has genus 2 (a double cover of
/// ℙ¹ branched at six points); every singular point splits in two.
pub fn double_cover_k3(plane: &Arrangement) -> Result<Arrangement> {
    require_plane_lines(plane)?;
    let k3 = SurfaceModel::k3(vec!["L".into()], vec![vec![int(2)]], vec![vec![int(1)]])?;
    let class = k3.class_i64(&[1])?;
    let curves = plane
        .curves()
        .iter()
        .map(|c| Curve::new(c.id.clone()).with_class(class.clone()).with_genus(int(2)))
        .collect();
    Arrangement::from_indices(k3, curves, replicate(plane, 2))
}
