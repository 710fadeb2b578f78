use std::collections::BTreeSet;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{normalize, Clusters, ProjPoint};
use crate::arrangement::{Arrangement, Curve};
use crate::error::{Error, Result};
use crate::exact::{int, CyclotomicField, CyclotomicNumber};
use crate::lattice::{SurfaceExt, SurfaceModel};

/// The line `a·x + b·y + c·z = 0`, normalized like a [`ProjPoint`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjLine2 {
    coeffs: [CyclotomicNumber; 3],
}

impl ProjLine2 {
    pub fn new(a: CyclotomicNumber, b: CyclotomicNumber, c: CyclotomicNumber) -> Result<Self> {
        let v = normalize(vec![a, b, c])?;
        let [a, b, c]: [CyclotomicNumber; 3] = v.try_into().expect("three coefficients");
        Ok(Self { coeffs: [a, b, c] })
    }

    pub fn coeffs(&self) -> &[CyclotomicNumber; 3] {
        &self.coeffs
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        let c = p.coords();
        c.len() == 3
            && self
                .coeffs
                .iter()
                .zip(c)
                .fold(c[0].field().zero(), |acc, (a, x)| &acc + &(a * x))
                .is_zero()
    }
}

/// Intersection of two distinct lines of ℙ²: the cross product of their
/// coefficient vectors.
pub fn line_meet_p2(l1: &ProjLine2, l2: &ProjLine2) -> Result<ProjPoint> {
    let [a1, b1, c1] = &l1.coeffs;
    let [a2, b2, c2] = &l2.coeffs;
    let x = b1.try_mul(c2)?.try_sub(&c1.try_mul(b2)?)?;
    let y = c1.try_mul(a2)?.try_sub(&a1.try_mul(c2)?)?;
    let z = a1.try_mul(b2)?.try_sub(&b1.try_mul(a2)?)?;
    if x.is_zero() && y.is_zero() && z.is_zero() {
        return Err(Error::IdenticalLines);
    }
    ProjPoint::new(vec![x, y, z])
}

/// Lines of ℙ² with every pairwise meet computed and clustered.
#[derive(Debug, Clone)]
pub struct PlaneArrangement {
    lines: Vec<(String, ProjLine2)>,
    points: Vec<(ProjPoint, BTreeSet<usize>)>,
    arrangement: Arrangement,
}

impl PlaneArrangement {
    /// Intersects all pairs of `lines` and emits the arrangement on ℙ² with
    /// every curve in the class of a line.
    pub fn from_lines(lines: Vec<(String, ProjLine2)>) -> Result<Self> {
        let mut clusters = Clusters::default();
        for i in 0..lines.len() {
            for j in i + 1..lines.len() {
                clusters.add(line_meet_p2(&lines[i].1, &lines[j].1)?, i, j);
            }
        }
        let p2 = SurfaceModel::projective_plane();
        let h = p2.class_i64(&[1])?;
        let curves = lines
            .iter()
            .map(|(id, _)| Curve::new(id.clone()).with_class(h.clone()).with_genus(int(0)))
            .collect();
        let points = clusters.points;
        let incidences = points
            .iter()
            .enumerate()
            .map(|(k, (_, inc))| (format!("p{}", k + 1), inc.iter().copied().collect()))
            .collect();
        let arrangement = Arrangement::from_indices(Arc::clone(&p2), curves, incidences)?;
        Ok(Self { lines, points, arrangement })
    }

    pub fn lines(&self) -> &[(String, ProjLine2)] {
        &self.lines
    }

    /// Singular points with the indices of the lines through them.
    pub fn points(&self) -> &[(ProjPoint, BTreeSet<usize>)] {
        &self.points
    }

    pub fn arrangement(&self) -> &Arrangement {
        &self.arrangement
    }

    pub fn into_arrangement(self) -> Arrangement {
        self.arrangement
    }
}

/// The Fermat arrangement: the 3n linear factors of
/// `(xⁿ − yⁿ)(yⁿ − zⁿ)(zⁿ − xⁿ)` over ℚ(ζ_n).
///
/// Lines are named `xy{k}` for `x = ζ^k y`, `yz{k}` for `y = ζ^k z` and
/// `zx{k}` for `z = ζ^k x`.
pub fn build_fermat_plane(n: u32) -> Result<PlaneArrangement> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("Fermat arrangement needs n >= 3, got {n}")));
    }
    let k = CyclotomicField::new(n)?;
    let (zero, one) = (k.zero(), k.one());
    let mut lines = Vec::with_capacity(3 * n as usize);
    for a in 0..n as i64 {
        let l = ProjLine2::new(one.clone(), -k.zeta_pow(a), zero.clone())?;
        lines.push((format!("xy{a}"), l));
    }
    for b in 0..n as i64 {
        let l = ProjLine2::new(zero.clone(), one.clone(), -k.zeta_pow(b))?;
        lines.push((format!("yz{b}"), l));
    }
    for c in 0..n as i64 {
        let l = ProjLine2::new(-k.zeta_pow(c), zero.clone(), one.clone())?;
        lines.push((format!("zx{c}"), l));
    }
    PlaneArrangement::from_lines(lines)
}

const STAR_ATTEMPTS: u32 = 32;

/// `d` lines in general position (only double points) with small integer
/// coefficients drawn from `seed`. Rejected draws are retried with a
/// perturbed seed.
pub fn build_star_lines(d: usize, seed: u64) -> Result<PlaneArrangement> {
    if d < 2 {
        return Err(Error::InvalidParameter(format!("star arrangement needs d >= 2, got {d}")));
    }
    let q = CyclotomicField::rationals();
    for attempt in 0..STAR_ATTEMPTS {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(u64::from(attempt).wrapping_mul(0x9e37_79b9)));
        let mut lines = Vec::with_capacity(d);
        let mut seen = BTreeSet::new();
        while lines.len() < d {
            let c: [i64; 3] = [rng.gen_range(-9..=9), rng.gen_range(-9..=9), rng.gen_range(-9..=9)];
            if c == [0, 0, 0] {
                continue;
            }
            let line = ProjLine2::new(q.from_int(c[0]), q.from_int(c[1]), q.from_int(c[2]))?;
            if seen.insert(line.coeffs.clone()) {
                lines.push((format!("l{}", lines.len() + 1), line));
            }
        }
        let built = PlaneArrangement::from_lines(lines)?;
        if built.points.len() == d * (d - 1) / 2 && built.points.iter().all(|(_, s)| s.len() == 2) {
            return Ok(built);
        }
    }
    Err(Error::GenericityNotAchieved { attempts: STAR_ATTEMPTS })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{invariants, is_star};

    fn q(n: u32) -> Arc<CyclotomicField> {
        CyclotomicField::new(n).unwrap()
    }

    #[test]
    fn meets() {
        let k = q(3);
        let (o, i) = (k.zero(), k.one());
        let x = ProjLine2::new(i.clone(), o.clone(), o.clone()).unwrap();
        let y = ProjLine2::new(o.clone(), i.clone(), o.clone()).unwrap();
        let origin = ProjPoint::new(vec![o.clone(), o.clone(), i.clone()]).unwrap();
        assert_eq!(line_meet_p2(&x, &y).unwrap(), origin);

        let l1 = ProjLine2::new(i.clone(), -&i, o.clone()).unwrap();
        let l2 = ProjLine2::new(i.clone(), -k.zeta(), o.clone()).unwrap();
        assert_eq!(line_meet_p2(&l1, &l2).unwrap(), origin);

        let a = ProjLine2::new(i.clone(), o.clone(), -&i).unwrap();
        let b = ProjLine2::new(o.clone(), i.clone(), -&i).unwrap();
        let ones = ProjPoint::new(vec![i.clone(), i.clone(), i.clone()]).unwrap();
        assert_eq!(line_meet_p2(&a, &b).unwrap(), ones);

        let twice = ProjLine2::new(k.from_int(2), o.clone(), k.from_int(-2)).unwrap();
        assert_eq!(line_meet_p2(&a, &twice), Err(Error::IdenticalLines));
    }

    #[test]
    fn fermat_profiles() {
        let three = build_fermat_plane(3).unwrap();
        let inv = invariants(three.arrangement()).unwrap();
        assert_eq!((inv.d, inv.f0, inv.t(3)), (9, 12, 12));
        for n in 4..=6u32 {
            let inv = invariants(build_fermat_plane(n).unwrap().arrangement()).unwrap();
            let n = n as usize;
            assert_eq!(inv.d, 3 * n);
            assert_eq!(inv.t(n), 3);
            assert_eq!(inv.t(3), n * n);
            assert!(inv.b.iter().all(|(_, b)| *b == n + 1));
        }
        assert!(matches!(build_fermat_plane(2), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn points_lie_on_their_lines() {
        let built = build_fermat_plane(5).unwrap();
        for (p, inc) in built.points() {
            for (i, (_, line)) in built.lines().iter().enumerate() {
                assert_eq!(line.contains(p), inc.contains(&i));
            }
        }
    }

    #[test]
    fn star_lines_are_generic() {
        for d in [2, 4, 5, 10] {
            let star = build_star_lines(d, 7).unwrap();
            let inv = invariants(star.arrangement()).unwrap();
            assert_eq!(inv.t(2), d * (d - 1) / 2);
            assert!(is_star(star.arrangement()));
        }
        assert!(build_star_lines(1, 0).is_err());
    }
}
