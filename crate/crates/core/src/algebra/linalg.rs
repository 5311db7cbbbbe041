//! Dense linear algebra over GF(q).

use super::field::{Field, Fq};

pub type FqMatrix = Vec<Vec<Fq>>;

/// Reduced row echelon form in place. Zero rows are removed; the returned
/// vector lists the pivot column of each remaining row.
pub fn rref(field: &Field, rows: &mut FqMatrix) -> Vec<usize> {
    rref_on(field, rows, usize::MAX)
}

/// Like [`rref`], but pivots are only sought in columns `< limit`. Rows with
/// no pivot there are kept after the pivot rows, unreduced among themselves.
pub fn rref_on(field: &Field, rows: &mut FqMatrix, limit: usize) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols.min(limit) {
        let Some(sel) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, sel);
        let inv = field.inv(rows[r][col]).unwrap();
        for x in rows[r].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let prow = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col];
            for (x, &pv) in row.iter_mut().zip(&prow) {
                *x = field.sub(*x, field.mul(f, pv));
            }
        }
        pivots.push(col);
        r += 1;
    }
    if limit == usize::MAX {
        rows.truncate(r);
    } else {
        rows.retain(|row| row.iter().any(|x| !x.is_zero()));
    }
    pivots
}

pub fn rank(field: &Field, rows: &FqMatrix) -> usize {
    let mut m = rows.clone();
    rref(field, &mut m).len()
}

/// A basis of { v : rows * v^T = 0 } for vectors of length `ncols`.
pub fn nullspace(field: &Field, rows: &FqMatrix, ncols: usize) -> FqMatrix {
    let mut m = rows.clone();
    let pivots = rref(field, &mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![field.zero(); ncols];
            v[f] = field.one();
            for (row, &pc) in m.iter().zip(&pivots) {
                v[pc] = field.neg(row[f]);
            }
            v
        })
        .collect()
}

pub fn mat_mul(field: &Field, a: &FqMatrix, b: &FqMatrix, inner: usize, ncols: usize) -> FqMatrix {
    a.iter()
        .map(|row| {
            (0..ncols)
                .map(|j| {
                    (0..inner).fold(field.zero(), |acc, t| {
                        field.add(acc, field.mul(row[t], b[t][j]))
                    })
                })
                .collect()
        })
        .collect()
}

pub fn transpose(a: &FqMatrix, ncols: usize) -> FqMatrix {
    (0..ncols)
        .map(|j| a.iter().map(|row| row[j]).collect())
        .collect()
}

pub fn identity(field: &Field, n: usize) -> FqMatrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { field.one() } else { field.zero() })
                .collect()
        })
        .collect()
}

pub fn is_zero(a: &FqMatrix) -> bool {
    a.iter().all(|r| r.iter().all(|x| x.is_zero()))
}

/// `u * M` for a row vector `u`.
pub fn vec_mat(field: &Field, u: &[Fq], m: &FqMatrix, ncols: usize) -> Vec<Fq> {
    let mut out = vec![field.zero(); ncols];
    for (ui, row) in u.iter().zip(m) {
        if ui.is_zero() {
            continue;
        }
        for (o, &x) in out.iter_mut().zip(row) {
            *o = field.add(*o, field.mul(*ui, x));
        }
    }
    out
}

/// Inverse of a square matrix, if it exists.
pub fn inverse(field: &Field, a: &FqMatrix) -> Option<FqMatrix> {
    let n = a.len();
    let mut aug: FqMatrix = a
        .iter()
        .zip(identity(field, n))
        .map(|(r, e)| r.iter().copied().chain(e).collect())
        .collect();
    let pivots = rref_on(field, &mut aug, n);
    if pivots.len() != n {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}
