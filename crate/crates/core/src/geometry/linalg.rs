//! Row reduction over a cyclotomic field. Matrices here are at most 4×4.

use crate::error::Result;
use crate::exact::CyclotomicNumber;

pub(crate) type Matrix = Vec<Vec<CyclotomicNumber>>;

/// Reduces `m` in place to reduced row-echelon form and returns the pivot
/// columns. Zero rows end up at the bottom.
pub(crate) fn rref(m: &mut Matrix) -> Result<Vec<usize>> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].inverse()?;
        if !inv.is_one() {
            for x in m[r].iter_mut() {
                *x = x.try_mul(&inv)?;
            }
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (entry, p) in row.iter_mut().zip(&pivot_row) {
                if p.is_zero() {
                    continue;
                }
                *entry = entry.try_sub(&factor.try_mul(p)?)?;
            }
        }
        pivots.push(c);
        r += 1;
    }
    Ok(pivots)
}

/// A spanning vector of the kernel of a matrix already in RREF whose kernel
/// is one-dimensional.
pub(crate) fn kernel_vector(reduced: &Matrix, pivots: &[usize], cols: usize) -> Vec<CyclotomicNumber> {
    let field = reduced[0][0].field().clone();
    let free = (0..cols).find(|c| !pivots.contains(c)).expect("kernel is nontrivial");
    let mut v = vec![field.zero(); cols];
    v[free] = field.one();
    for (r, &pc) in pivots.iter().enumerate() {
        v[pc] = -&reduced[r][free];
    }
    v
}
