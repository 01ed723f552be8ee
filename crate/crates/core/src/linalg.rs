//! Dense exact linear algebra: reduced row echelon form, kernels, solving,
//! and canonical subspaces.

use crate::scalar::{FieldSpec, Scalar};

pub type Vector = Vec<Scalar>;

pub fn zero_vector(field: FieldSpec, n: usize) -> Vector {
    vec![Scalar::zero(field); n]
}

pub fn unit_vector(field: FieldSpec, n: usize, i: usize) -> Vector {
    let mut v = zero_vector(field, n);
    v[i] = Scalar::one(field);
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `a + c * b`, in place.
pub fn axpy(a: &mut [Scalar], c: &Scalar, b: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (x, y) in a.iter_mut().zip(b) {
        if !y.is_zero() {
            *x = &*x + &(c * y);
        }
    }
}

pub fn scale(v: &[Scalar], c: &Scalar) -> Vector {
    v.iter().map(|x| x * c).collect()
}

/// Reduce `rows` to reduced row echelon form in place, dropping zero rows.
/// Returns the pivot column of each remaining row.
pub fn rref(rows: &mut Vec<Vector>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(sel) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, sel);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        let pivot_row: Vector = rows[r].iter().map(|x| x * &inv).collect();
        rows[r] = pivot_row;
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = -&rows[i][c];
                let (src, dst) = if i < r {
                    let (a, b) = rows.split_at_mut(r);
                    (&b[0], &mut a[i])
                } else {
                    let (a, b) = rows.split_at_mut(i);
                    (&a[r], &mut b[0])
                };
                axpy(dst, &f, src);
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank(rows: &[Vector], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, ncols).len()
}

/// Basis of `{x : M x = 0}` where `M` has the given rows, returned in
/// reduced row echelon form.
pub fn kernel(rows: &[Vector], ncols: usize, field: FieldSpec) -> Vec<Vector> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, ncols);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = zero_vector(field, ncols);
        v[free] = Scalar::one(field);
        for (row, &pc) in m.iter().zip(&pivots) {
            v[pc] = -&row[free];
        }
        basis.push(v);
    }
    rref(&mut basis, ncols);
    basis
}

/// Some `x` with `sum_i x_i * vectors[i] = target`, if one exists.
pub fn solve_combination(vectors: &[Vector], target: &[Scalar], field: FieldSpec) -> Option<Vector> {
    let k = vectors.len();
    let n = target.len();
    // augmented system: columns are the vectors, last column is the target
    let mut rows: Vec<Vector> = (0..n)
        .map(|i| {
            let mut r: Vector = vectors.iter().map(|v| v[i].clone()).collect();
            r.push(target[i].clone());
            r
        })
        .collect();
    let pivots = rref(&mut rows, k + 1);
    if pivots.contains(&k) {
        return None;
    }
    let mut x = zero_vector(field, k);
    for (row, &pc) in rows.iter().zip(&pivots) {
        x[pc] = row[k].clone();
    }
    Some(x)
}

/// Square matrix helpers on row-major `Vec<Vector>`.
pub fn identity(field: FieldSpec, n: usize) -> Vec<Vector> {
    (0..n).map(|i| unit_vector(field, n, i)).collect()
}

pub fn mat_mul(a: &[Vector], b: &[Vector], field: FieldSpec) -> Vec<Vector> {
    let m = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            let mut out = zero_vector(field, m);
            for (x, brow) in row.iter().zip(b) {
                axpy(&mut out, x, brow);
            }
            out
        })
        .collect()
}

pub fn transpose(a: &[Vector]) -> Vec<Vector> {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn mat_vec(a: &[Vector], v: &[Scalar], field: FieldSpec) -> Vector {
    a.iter().map(|row| row.iter().zip(v).fold(Scalar::zero(field), |acc, (x, y)| &acc + &(x * y))).collect()
}

pub fn invert(a: &[Vector], field: FieldSpec) -> Option<Vec<Vector>> {
    let n = a.len();
    let mut aug: Vec<Vector> = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend(unit_vector(field, n, i));
            row
        })
        .collect();
    let pivots = rref(&mut aug, 2 * n);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// A subspace of `field^ambient_dim`, stored as its unique reduced row
/// echelon basis. Two subspaces are equal iff their representations are.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: FieldSpec,
    ambient_dim: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(field: FieldSpec, ambient_dim: usize, vectors: impl IntoIterator<Item = Vector>) -> Self {
        let mut basis: Vec<Vector> = vectors.into_iter().collect();
        debug_assert!(basis.iter().all(|v| v.len() == ambient_dim));
        let pivots = rref(&mut basis, ambient_dim);
        Subspace { field, ambient_dim, basis, pivots }
    }

    pub fn zero(field: FieldSpec, ambient_dim: usize) -> Self {
        Self::span(field, ambient_dim, [])
    }

    pub fn full(field: FieldSpec, ambient_dim: usize) -> Self {
        Self::span(field, ambient_dim, identity(field, ambient_dim))
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates (in increasing order) that are not pivots.
    pub fn non_pivots(&self) -> Vec<usize> {
        (0..self.ambient_dim).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// Fully reduce `v` against the basis; the result vanishes at all pivots.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        let mut out = v.to_vec();
        for (row, &pc) in self.basis.iter().zip(&self.pivots) {
            if !out[pc].is_zero() {
                let c = -&out[pc];
                axpy(&mut out, &c, row);
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero_vector(&self.reduce(v))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::span(self.field, self.ambient_dim, self.basis.iter().chain(&other.basis).cloned())
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        // x = sum a_i u_i = sum b_j w_j  <=>  (a, b) in ker [U^T | -W^T]
        let (k, l) = (self.dim(), other.dim());
        if k == 0 || l == 0 {
            return Subspace::zero(self.field, self.ambient_dim);
        }
        let rows: Vec<Vector> = (0..self.ambient_dim)
            .map(|c| self.basis.iter().map(|u| u[c].clone()).chain(other.basis.iter().map(|w| -&w[c])).collect())
            .collect();
        let ker = kernel(&rows, k + l, self.field);
        let vecs = ker.into_iter().map(|coef| {
            let mut v = zero_vector(self.field, self.ambient_dim);
            for (a, u) in coef[..k].iter().zip(&self.basis) {
                axpy(&mut v, a, u);
            }
            v
        });
        Subspace::span(self.field, self.ambient_dim, vecs)
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&pc| v[pc].clone()).collect())
    }
}
