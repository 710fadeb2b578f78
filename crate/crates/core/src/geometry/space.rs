use std::collections::BTreeSet;
use std::sync::Arc;

use super::linalg::{kernel_vector, rref, Matrix};
use super::{Clusters, ProjPoint};
use crate::arrangement::{Arrangement, Curve};
use crate::error::{Error, Result};
use crate::exact::{int, CyclotomicField, CyclotomicNumber};
use crate::lattice::{SurfaceExt, SurfaceModel};

/// A line of ℙ³ cut out by two independent linear forms, stored as the
/// reduced row-echelon form of their 2×4 coefficient matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjLine3 {
    rows: [[CyclotomicNumber; 4]; 2],
}

impl ProjLine3 {
    pub fn new(f: [CyclotomicNumber; 4], g: [CyclotomicNumber; 4]) -> Result<Self> {
        let mut m: Matrix = vec![f.to_vec(), g.to_vec()];
        let pivots = rref(&mut m)?;
        if pivots.len() != 2 {
            return Err(Error::Degenerate("linear forms are dependent".into()));
        }
        let row = |r: &Vec<CyclotomicNumber>| -> [CyclotomicNumber; 4] { r.clone().try_into().expect("four columns") };
        Ok(Self { rows: [row(&m[0]), row(&m[1])] })
    }

    pub fn rows(&self) -> &[[CyclotomicNumber; 4]; 2] {
        &self.rows
    }

    /// Whether the line lies in the plane `h·x = 0`.
    pub fn lies_in(&self, hyperplane: &[CyclotomicNumber; 4]) -> Result<bool> {
        let mut m: Matrix = vec![self.rows[0].to_vec(), self.rows[1].to_vec(), hyperplane.to_vec()];
        Ok(rref(&mut m)?.len() == 2)
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        let c = p.coords();
        c.len() == 4
            && self.rows.iter().all(|row| {
                row.iter()
                    .zip(c)
                    .fold(c[0].field().zero(), |acc, (a, x)| &acc + &(a * x))
                    .is_zero()
            })
    }
}

/// Common point of two lines of ℙ³, or `None` when they are skew.
pub fn line_meet_p3(l1: &ProjLine3, l2: &ProjLine3) -> Result<Option<ProjPoint>> {
    let mut m: Matrix = l1.rows.iter().chain(&l2.rows).map(|r| r.to_vec()).collect();
    let pivots = rref(&mut m)?;
    match pivots.len() {
        4 => Ok(None),
        3 => ProjPoint::new(kernel_vector(&m, &pivots, 4)).map(Some),
        _ => Err(Error::IdenticalLines),
    }
}

/// The lines contained in one of the planes `x_i = α x_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperplaneGroup {
    /// e.g. `x0 = z8^3*x1`.
    pub label: String,
    pub hyperplane: [CyclotomicNumber; 4],
    pub curves: Vec<String>,
}

/// The 48 lines on the Fermat quartic `x₀⁴ + x₁⁴ + x₂⁴ + x₃⁴ = 0`.
#[derive(Debug, Clone)]
pub struct FermatQuartic {
    field: Arc<CyclotomicField>,
    lines: Vec<(String, ProjLine3)>,
    points: Vec<(ProjPoint, BTreeSet<usize>)>,
    arrangement: Arrangement,
}

/// Exponents k with ζ₈^k ∈ {ζ, −ζ, iζ, −iζ}: the primitive eighth roots.
const ROOTS: [i64; 4] = [1, 3, 5, 7];

/// Coordinate index pairs `(i, j, k, l)` for the three families:
/// `x_i = α x_j` and `x_k = β x_l`.
const FAMILIES: [(&str, [usize; 4]); 3] = [("A", [0, 1, 2, 3]), ("A'", [0, 2, 1, 3]), ("A''", [0, 3, 1, 2])];

fn form(field: &Arc<CyclotomicField>, i: usize, j: usize, alpha: &CyclotomicNumber) -> [CyclotomicNumber; 4] {
    let mut f: [CyclotomicNumber; 4] = std::array::from_fn(|_| field.zero());
    f[i] = field.one();
    f[j] = -alpha;
    f
}

/// Builds the 48 lines over ℚ(ζ₈), intersects all pairs, and emits the
/// arrangement on a K3 lattice.
///
/// Lines are named `A(a,b)`, `A'(a,b)`, `A''(a,b)` for α = ζ^a, β = ζ^b.
/// The lattice is generated by `H = O_X(1)` and the 48 lines, with
/// `H² = 4`, `H·l = 1`, `l² = −2`, and `l·l' = 1` exactly when the two
/// lines meet. `H` is recorded as ample.
pub fn build_fermat_quartic_lines() -> Result<FermatQuartic> {
    let field = CyclotomicField::new(8)?;
    let mut lines = Vec::with_capacity(48);
    for (name, [i, j, k, l]) in FAMILIES {
        for a in ROOTS {
            for b in ROOTS {
                let line = ProjLine3::new(form(&field, i, j, &field.zeta_pow(a)), form(&field, k, l, &field.zeta_pow(b)))?;
                lines.push((format!("{name}({a},{b})"), line));
            }
        }
    }

    let n = lines.len();
    let mut clusters = Clusters::default();
    let mut meets = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            if let Some(p) = line_meet_p3(&lines[i].1, &lines[j].1)? {
                clusters.add(p, i, j);
                meets[i][j] = true;
                meets[j][i] = true;
            }
        }
    }

    let mut labels = vec!["H".to_string()];
    labels.extend(lines.iter().map(|(id, _)| id.clone()));
    let mut gram = vec![vec![int(0); n + 1]; n + 1];
    gram[0][0] = int(4);
    for i in 0..n {
        gram[0][i + 1] = int(1);
        gram[i + 1][0] = int(1);
        for j in 0..n {
            gram[i + 1][j + 1] = if i == j { int(-2) } else { int(meets[i][j] as i64) };
        }
    }
    let mut h = vec![int(0); n + 1];
    h[0] = int(1);
    let surface = SurfaceModel::k3(labels, gram, vec![h])?;
    let curves = lines
        .iter()
        .enumerate()
        .map(|(i, (id, _))| {
            let mut v = vec![int(0); n + 1];
            v[i + 1] = int(1);
            Ok(Curve::new(id.clone()).with_class(surface.class(v)?).with_genus(int(0)))
        })
        .collect::<Result<Vec<_>>>()?;
    let points = clusters.points;
    let incidences = points
        .iter()
        .enumerate()
        .map(|(k, (_, inc))| (format!("p{}", k + 1), inc.iter().copied().collect()))
        .collect();
    let arrangement = Arrangement::from_indices(surface, curves, incidences)?;
    Ok(FermatQuartic { field, lines, points, arrangement })
}

impl FermatQuartic {
    pub fn lines(&self) -> &[(String, ProjLine3)] {
        &self.lines
    }

    pub fn points(&self) -> &[(ProjPoint, BTreeSet<usize>)] {
        &self.points
    }

    pub fn arrangement(&self) -> &Arrangement {
        &self.arrangement
    }

    /// The class `O_X(1)` on the emitted lattice.
    pub fn hyperplane_class(&self) -> crate::lattice::DivisorClass {
        let s = self.arrangement.surface();
        let mut v = vec![int(0); s.rank()];
        v[0] = int(1);
        s.class(v).expect("rank matches")
    }

    /// Value of `x₀⁴ + x₁⁴ + x₂⁴ + x₃⁴` at `p`.
    pub fn quartic_at(&self, p: &ProjPoint) -> CyclotomicNumber {
        p.coords().iter().fold(self.field.zero(), |acc, x| &acc + &x.pow(4))
    }

    /// For every plane `x_i = α x_j` and `x_k = β x_l` used to define the
    /// lines, the lines it contains, found by an exact containment test
    /// against all 48 lines. Each plane cuts the quartic in four lines.
    pub fn hyperplane_groups(&self) -> Result<Vec<HyperplaneGroup>> {
        let mut out = Vec::with_capacity(24);
        for (_, [i, j, k, l]) in FAMILIES {
            for (p, q) in [(i, j), (k, l)] {
                for a in ROOTS {
                    let hyperplane = form(&self.field, p, q, &self.field.zeta_pow(a));
                    let mut curves = Vec::new();
                    for (id, line) in &self.lines {
                        if line.lies_in(&hyperplane)? {
                            curves.push(id.clone());
                        }
                    }
                    let label = format!("x{p} = z8^{a}*x{q}");
                    if curves.len() != 4 {
                        return Err(Error::Containment(format!("plane {label} contains {} lines", curves.len())));
                    }
                    out.push(HyperplaneGroup { label, hyperplane, curves });
                }
            }
        }
        Ok(out)
    }
}

/// Free-function form of [`FermatQuartic::hyperplane_groups`].
pub fn hyperplane_grouping_fermat_quartic(quartic: &FermatQuartic) -> Result<Vec<HyperplaneGroup>> {
    quartic.hyperplane_groups()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(field: &Arc<CyclotomicField>, zero_a: usize, zero_b: usize) -> ProjLine3 {
        let mut f: [CyclotomicNumber; 4] = std::array::from_fn(|_| field.zero());
        let mut g = f.clone();
        f[zero_a] = field.one();
        g[zero_b] = field.one();
        ProjLine3::new(f, g).unwrap()
    }

    #[test]
    fn meets_in_space() {
        let q = CyclotomicField::rationals();
        assert_eq!(line_meet_p3(&line(&q, 0, 1), &line(&q, 2, 3)).unwrap(), None);
        let p = line_meet_p3(&line(&q, 0, 1), &line(&q, 0, 2)).unwrap().unwrap();
        assert_eq!(p, ProjPoint::new(vec![q.zero(), q.zero(), q.zero(), q.one()]).unwrap());
        assert_eq!(line_meet_p3(&line(&q, 0, 1), &line(&q, 1, 0)), Err(Error::IdenticalLines));

        let k = CyclotomicField::new(8).unwrap();
        let z = k.zeta();
        let l1 = ProjLine3::new(form(&k, 0, 1, &z), form(&k, 2, 3, &k.zeta_pow(3))).unwrap();
        let l2 = ProjLine3::new(form(&k, 0, 1, &z), form(&k, 2, 3, &k.zeta_pow(5))).unwrap();
        let expected = ProjPoint::new(vec![z.clone(), k.one(), k.zero(), k.zero()]).unwrap();
        assert_eq!(line_meet_p3(&l1, &l2).unwrap(), Some(expected));
    }

    #[test]
    fn dependent_forms_are_rejected() {
        let q = CyclotomicField::rationals();
        let f = form(&q, 0, 1, &q.one());
        assert!(matches!(ProjLine3::new(f.clone(), f), Err(Error::Degenerate(_))));
    }

    #[test]
    fn first_group_is_the_alpha_zeta_family() {
        let quartic = build_fermat_quartic_lines().unwrap();
        let groups = quartic.hyperplane_groups().unwrap();
        assert_eq!(groups[0].label, "x0 = z8^1*x1");
        assert_eq!(groups[0].curves, vec!["A(1,1)", "A(1,3)", "A(1,5)", "A(1,7)"]);
    }
}
