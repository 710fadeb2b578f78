//! Incidence-level arrangements that are not built from coordinates.
//!
//! The Klein and Wiman arrangements are the mirror lines of the involutions
//! of PSL(2,7) ≅ GL(3,2) and of A₆ (the Valentiner group modulo scalars).
//! Their incidences are recovered from the groups alone: two involutions
//! `a, b` span a dihedral group; when `ab` has order 3 or 5 the lines meet in
//! the point fixed by `⟨a, b⟩`, whose mirrors are the involutions of that
//! group; when `ab` has order 2 or 4 the point is the isolated fixed point of
//! the central involution `z` (`ab` or `(ab)²`), and the mirrors through it
//! are the other involutions commuting with `z`.
//!
//! The Hesse arrangement of conics is realized on the affine plane AG(2,3)
//! (the nine flexes of a Hesse pencil). There is one conic per affine line
//! ℓ, passing through the six points off ℓ. Conics of intersecting lines
//! share four of the nine points; conics of parallel lines share three and
//! meet once more in a private double point. This gives `t₂ = 12`,
//! `t₈ = 9`, `b_i = 8`, and `C_i·C_j = 4` shared points for every pair.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::arrangement::{Arrangement, Curve};
use crate::error::{Error, Result};
use crate::exact::int;
use crate::lattice::{SurfaceExt, SurfaceModel};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    Klein,
    Wiman,
    HesseConics,
    /// `k` lines, `k − 1` of them through one point.
    QuasiPencil(usize),
    /// The Fermat arrangement from its incidences alone.
    FermatPlaneCombinatorial(u32),
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Preset::Klein => f.write_str("klein"),
            Preset::Wiman => f.write_str("wiman"),
            Preset::HesseConics => f.write_str("hesse_conics"),
            Preset::QuasiPencil(k) => write!(f, "quasi_pencil({k})"),
            Preset::FermatPlaneCombinatorial(n) => write!(f, "fermat_plane_combinatorial({n})"),
        }
    }
}

impl FromStr for Preset {
    type Err = Error;

    /// Accepts `klein`, `wiman`, `hesse_conics`, `quasi_pencil(k)` and
    /// `fermat_plane_combinatorial(n)`; dashes may replace underscores and
    /// `name:k` may replace `name(k)`.
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('-', "_");
        let (name, arg) = match norm.split_once(['(', ':']) {
            Some((n, rest)) => (n.trim().to_string(), Some(rest.trim_end_matches(')').trim().to_string())),
            None => (norm.clone(), None),
        };
        let unknown = || Error::UnknownPreset(s.to_string());
        let number = |arg: Option<String>| -> Result<u64> { arg.and_then(|a| a.parse().ok()).ok_or_else(unknown) };
        match name.as_str() {
            "klein" if arg.is_none() => Ok(Preset::Klein),
            "wiman" if arg.is_none() => Ok(Preset::Wiman),
            "hesse_conics" | "hesse" if arg.is_none() => Ok(Preset::HesseConics),
            "quasi_pencil" => Ok(Preset::QuasiPencil(number(arg)? as usize)),
            "fermat_plane_combinatorial" | "fermat_combinatorial" => {
                Ok(Preset::FermatPlaneCombinatorial(number(arg)? as u32))
            }
            _ => Err(unknown()),
        }
    }
}

/// Builds a preset arrangement on ℙ².
pub fn preset(name: Preset) -> Result<Arrangement> {
    match name {
        Preset::Klein => klein(),
        Preset::Wiman => wiman(),
        Preset::HesseConics => hesse_conics(),
        Preset::QuasiPencil(k) => quasi_pencil(k),
        Preset::FermatPlaneCombinatorial(n) => fermat_plane_combinatorial(n),
    }
}

fn plane_curves(ids: impl IntoIterator<Item = String>, degree: i64) -> Result<(std::sync::Arc<SurfaceModel>, Vec<Curve>)> {
    let p2 = SurfaceModel::projective_plane();
    let class = p2.class_i64(&[degree])?;
    let genus = int((degree - 1) * (degree - 2) / 2);
    let curves = ids
        .into_iter()
        .map(|id| Curve::new(id).with_class(class.clone()).with_genus(genus.clone()))
        .collect();
    Ok((p2, curves))
}

fn numbered(points: impl IntoIterator<Item = Vec<usize>>) -> Vec<(String, Vec<usize>)> {
    points.into_iter().enumerate().map(|(k, inc)| (format!("p{}", k + 1), inc)).collect()
}

type Perm = Vec<u8>;

fn compose(p: &Perm, q: &Perm) -> Perm {
    q.iter().map(|&i| p[i as usize]).collect()
}

fn is_identity(p: &Perm) -> bool {
    p.iter().enumerate().all(|(i, &x)| i == x as usize)
}

fn order(p: &Perm) -> usize {
    let mut x = p.clone();
    let mut k = 1;
    while !is_identity(&x) {
        x = compose(&x, p);
        k += 1;
    }
    k
}

fn generated(gens: &[&Perm]) -> BTreeSet<Perm> {
    let id: Perm = (0..gens[0].len() as u8).collect();
    let mut group = BTreeSet::from([id.clone()]);
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = compose(&x, g);
            if group.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    group
}

/// Lines = involutions; points as described in the module docs.
fn mirror_incidences(involutions: &[Perm]) -> Vec<Vec<usize>> {
    let index: BTreeMap<&Perm, usize> = involutions.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut points = BTreeSet::new();
    for (i, a) in involutions.iter().enumerate() {
        for b in &involutions[i + 1..] {
            let ab = compose(a, b);
            let through: BTreeSet<usize> = match order(&ab) {
                2 | 4 => {
                    let z = if order(&ab) == 2 { ab } else { compose(&ab, &ab) };
                    involutions
                        .iter()
                        .enumerate()
                        .filter(|(_, x)| **x != z && compose(x, &z) == compose(&z, x))
                        .map(|(k, _)| k)
                        .collect()
                }
                _ => generated(&[a, b]).iter().filter_map(|x| index.get(x).copied()).collect(),
            };
            points.insert(through);
        }
    }
    points.into_iter().map(|s| s.into_iter().collect()).collect()
}

fn involutions_of(group: impl IntoIterator<Item = Perm>) -> Vec<Perm> {
    let mut out: Vec<Perm> = group
        .into_iter()
        .filter(|p| !is_identity(p) && is_identity(&compose(p, p)))
        .collect();
    out.sort();
    out
}

/// GL(3,2) acting on the seven nonzero vectors of F₂³.
fn gl32() -> Vec<Perm> {
    let apply = |rows: [u8; 3], v: u8| -> u8 {
        (0..3).map(|i| (((rows[i] & v).count_ones() & 1) as u8) << i).sum()
    };
    let mut out = Vec::new();
    for r0 in 0..8u8 {
        for r1 in 0..8u8 {
            for r2 in 0..8u8 {
                let img: Vec<u8> = (1..8).map(|v| apply([r0, r1, r2], v)).collect();
                if img.contains(&0) {
                    continue;
                }
                out.push(img.into_iter().map(|w| w - 1).collect());
            }
        }
    }
    out
}

fn even_permutations(n: u8) -> Vec<Perm> {
    fn rec(prefix: &mut Perm, rest: &mut Vec<u8>, out: &mut Vec<Perm>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for k in 0..rest.len() {
            let x = rest.remove(k);
            prefix.push(x);
            rec(prefix, rest, out);
            prefix.pop();
            rest.insert(k, x);
        }
    }
    let mut all = Vec::new();
    rec(&mut Vec::new(), &mut (0..n).collect(), &mut all);
    all.into_iter()
        .filter(|p| {
            let inversions = (0..p.len()).flat_map(|i| (i + 1..p.len()).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            inversions % 2 == 0
        })
        .collect()
}

/// 21 lines, `t₄ = 21`, `t₃ = 28`.
fn klein() -> Result<Arrangement> {
    let inv = involutions_of(gl32());
    let (p2, curves) = plane_curves((1..=inv.len()).map(|i| format!("k{i}")), 1)?;
    Arrangement::from_indices(p2, curves, numbered(mirror_incidences(&inv)))
}

/// 45 lines, `t₃ = 120`, `t₄ = 45`, `t₅ = 36`.
fn wiman() -> Result<Arrangement> {
    let inv = involutions_of(even_permutations(6));
    let (p2, curves) = plane_curves((1..=inv.len()).map(|i| format!("w{i}")), 1)?;
    Arrangement::from_indices(p2, curves, numbered(mirror_incidences(&inv)))
}

fn hesse_conics() -> Result<Arrangement> {
    // affine lines of AG(2,3) as point sets, grouped by direction
    let pt = |x: usize, y: usize| 3 * x + y;
    let mut lines: Vec<(usize, BTreeSet<usize>)> = Vec::new();
    for (dir, (dx, dy)) in [(1, 0), (0, 1), (1, 1), (1, 2)].into_iter().enumerate() {
        let mut seen = BTreeSet::new();
        for x in 0..3 {
            for y in 0..3 {
                let set: BTreeSet<usize> = (0..3).map(|s| pt((x + s * dx) % 3, (y + s * dy) % 3)).collect();
                if seen.insert(set.clone()) {
                    lines.push((dir, set));
                }
            }
        }
    }
    let mut points: Vec<Vec<usize>> = (0..9)
        .map(|p| (0..lines.len()).filter(|&c| !lines[c].1.contains(&p)).collect())
        .collect();
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            if lines[i].0 == lines[j].0 {
                points.push(vec![i, j]);
            }
        }
    }
    let (p2, curves) = plane_curves((1..=lines.len()).map(|i| format!("c{i}")), 2)?;
    Arrangement::from_indices(p2, curves, numbered(points))
}

fn quasi_pencil(k: usize) -> Result<Arrangement> {
    if k < 4 {
        return Err(Error::InvalidParameter(format!("quasi-pencil needs k >= 4, got {k}")));
    }
    let (p2, curves) = plane_curves((1..=k).map(|i| format!("l{i}")), 1)?;
    let mut points = vec![(0..k - 1).collect::<Vec<_>>()];
    points.extend((0..k - 1).map(|i| vec![i, k - 1]));
    Arrangement::from_indices(p2, curves, numbered(points))
}

fn fermat_plane_combinatorial(n: u32) -> Result<Arrangement> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("Fermat arrangement needs n >= 3, got {n}")));
    }
    let n = n as usize;
    let ids = ["xy", "yz", "zx"].iter().flat_map(|f| (0..n).map(move |k| format!("{f}{k}")));
    let (p2, curves) = plane_curves(ids, 1)?;
    let mut points: Vec<Vec<usize>> = (0..3).map(|f| (f * n..(f + 1) * n).collect()).collect();
    for a in 0..n {
        for b in 0..n {
            let c = (2 * n - a - b) % n;
            points.push(vec![a, n + b, 2 * n + c]);
        }
    }
    Arrangement::from_indices(p2, curves, numbered(points))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{invariants, validate, ValidationLevel};

    #[test]
    fn parsing() {
        assert_eq!("klein".parse::<Preset>().unwrap(), Preset::Klein);
        assert_eq!("Hesse-Conics".parse::<Preset>().unwrap(), Preset::HesseConics);
        assert_eq!("quasi_pencil(5)".parse::<Preset>().unwrap(), Preset::QuasiPencil(5));
        assert_eq!("quasi-pencil:6".parse::<Preset>().unwrap(), Preset::QuasiPencil(6));
        assert_eq!(
            "fermat_plane_combinatorial(4)".parse::<Preset>().unwrap(),
            Preset::FermatPlaneCombinatorial(4)
        );
        assert!(matches!("nope".parse::<Preset>(), Err(Error::UnknownPreset(_))));
        assert!(matches!("klein(3)".parse::<Preset>(), Err(Error::UnknownPreset(_))));
        for p in [Preset::Klein, Preset::QuasiPencil(7), Preset::FermatPlaneCombinatorial(5)] {
            assert_eq!(p.to_string().parse::<Preset>().unwrap(), p);
        }
    }

    #[test]
    fn group_sizes() {
        assert_eq!(gl32().len(), 168);
        assert_eq!(involutions_of(gl32()).len(), 21);
        assert_eq!(even_permutations(6).len(), 360);
        assert_eq!(involutions_of(even_permutations(6)).len(), 45);
    }

    #[test]
    fn profiles() {
        let cases: [(Preset, &[(usize, usize)]); 5] = [
            (Preset::Klein, &[(3, 28), (4, 21)]),
            (Preset::Wiman, &[(3, 120), (4, 45), (5, 36)]),
            (Preset::HesseConics, &[(2, 12), (8, 9)]),
            (Preset::QuasiPencil(5), &[(2, 4), (4, 1)]),
            (Preset::FermatPlaneCombinatorial(4), &[(3, 16), (4, 3)]),
        ];
        for (p, profile) in cases {
            let arr = preset(p).unwrap();
            let inv = invariants(&arr).unwrap();
            assert_eq!(inv.t, profile.iter().copied().collect(), "{p}");
            assert!(validate(&arr, ValidationLevel::LatticeEqualClasses).is_empty(), "{p}");
        }
        assert!(matches!(preset(Preset::QuasiPencil(3)), Err(Error::InvalidParameter(_))));
    }
}
