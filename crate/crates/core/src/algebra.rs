//! Structure-constant algebras and the predicates the extension method
//! relies on: bicommutativity, nilpotency, one-generation, annihilators.

use std::fmt;

use thiserror::Error;

use crate::linalg::{self, axpy, is_zero_vector, unit_vector, zero_vector, Subspace, Vector};
use crate::morphism::Morphism;
use crate::scalar::{FieldSpec, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("expected a vector of length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("field mismatch: expected {expected}, got {got}")]
    FieldMismatch { expected: FieldSpec, got: FieldSpec },
    #[error("algebra is not nilpotent")]
    NotNilpotent,
    #[error("algebra has dimension 0")]
    ZeroDimensional,
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("basis index {0} out of range")]
    IndexOutOfRange(usize),
}

/// A finite-dimensional algebra given by `e_i e_j = sum_k c[i][j][k] e_k`.
/// Indices are 0-based internally; the text formats use 1-based `e1..en`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Algebra {
    field: FieldSpec,
    dim: usize,
    sc: Vec<Scalar>,
}

/// Which defining identity failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Identity {
    /// `(xy)z = (xz)y`
    RightCommutative,
    /// `x(yz) = y(xz)`
    LeftCommutative,
}

/// A basis triple `(x, y, z) = (e_i, e_j, e_k)` on which an identity fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub identity: Identity,
    pub triple: (usize, usize, usize),
    pub lhs: Vector,
    pub rhs: Vector,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j, k) = (self.triple.0 + 1, self.triple.1 + 1, self.triple.2 + 1);
        let show = |v: &Vector| v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ");
        match self.identity {
            Identity::RightCommutative => write!(f, "(e{i} e{j}) e{k} != (e{i} e{k}) e{j}")?,
            Identity::LeftCommutative => write!(f, "e{i} (e{j} e{k}) != e{j} (e{i} e{k})")?,
        }
        write!(f, ": [{}] vs [{}]", show(&self.lhs), show(&self.rhs))
    }
}

impl Algebra {
    pub fn zero(field: FieldSpec, dim: usize) -> Self {
        Algebra { field, dim, sc: vec![Scalar::zero(field); dim * dim * dim] }
    }

    /// Build from `(i, j, coeff, k)` entries (0-based); repeated entries add.
    pub fn from_entries(
        field: FieldSpec,
        dim: usize,
        entries: impl IntoIterator<Item = (usize, usize, Scalar, usize)>,
    ) -> Result<Self, AlgebraError> {
        let mut a = Algebra::zero(field, dim);
        for (i, j, c, k) in entries {
            for idx in [i, j, k] {
                if idx >= dim {
                    return Err(AlgebraError::IndexOutOfRange(idx));
                }
            }
            if c.field() != field {
                return Err(AlgebraError::FieldMismatch { expected: field, got: c.field() });
            }
            let slot = a.index(i, j, k);
            a.sc[slot] = &a.sc[slot] + &c;
        }
        Ok(a)
    }

    /// Shorthand for integer tables: `(i, j, coeff, k)` with 1-based indices.
    pub fn from_int_table(field: FieldSpec, dim: usize, table: &[(usize, usize, i64, usize)]) -> Self {
        Self::from_entries(
            field,
            dim,
            table.iter().map(|&(i, j, c, k)| (i - 1, j - 1, Scalar::from_i64(field, c), k - 1)),
        )
        .expect("valid table")
    }

    fn index(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.sc[self.index(i, j, k)]
    }

    pub fn set_coeff(&mut self, i: usize, j: usize, k: usize, c: Scalar) {
        let idx = self.index(i, j, k);
        self.sc[idx] = c;
    }

    /// `e_i e_j` as a coordinate slice.
    pub fn product(&self, i: usize, j: usize) -> &[Scalar] {
        let start = self.index(i, j, 0);
        &self.sc[start..start + self.dim]
    }

    /// Nonzero products `(i, j, e_i e_j)` in row-major order.
    pub fn nonzero_products(&self) -> impl Iterator<Item = (usize, usize, &[Scalar])> + '_ {
        (0..self.dim)
            .flat_map(move |i| (0..self.dim).map(move |j| (i, j)))
            .map(move |(i, j)| (i, j, self.product(i, j)))
            .filter(|(_, _, p)| !is_zero_vector(p))
    }

    fn check_vector(&self, v: &[Scalar]) -> Result<(), AlgebraError> {
        if v.len() != self.dim {
            return Err(AlgebraError::DimensionMismatch { expected: self.dim, got: v.len() });
        }
        if let Some(bad) = v.iter().find(|x| x.field() != self.field) {
            return Err(AlgebraError::FieldMismatch { expected: self.field, got: bad.field() });
        }
        Ok(())
    }

    /// The bilinear product `x y`.
    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector, AlgebraError> {
        self.check_vector(x)?;
        self.check_vector(y)?;
        Ok(self.mul(x, y))
    }

    pub(crate) fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.field, self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                axpy(&mut out, &(xi * yj), self.product(i, j));
            }
        }
        out
    }

    /// `u e_k` for a vector `u`.
    fn mul_basis_right(&self, u: &[Scalar], k: usize) -> Vector {
        let mut out = zero_vector(self.field, self.dim);
        for (l, ul) in u.iter().enumerate() {
            axpy(&mut out, ul, self.product(l, k));
        }
        out
    }

    /// `e_k u` for a vector `u`.
    fn mul_basis_left(&self, k: usize, u: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.field, self.dim);
        for (l, ul) in u.iter().enumerate() {
            axpy(&mut out, ul, self.product(k, l));
        }
        out
    }

    /// All basis triples violating `(xy)z = (xz)y` or `x(yz) = y(xz)`.
    pub fn check_bicommutative(&self) -> Vec<Violation> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let lhs = self.mul_basis_right(self.product(i, j), k);
                    let rhs = self.mul_basis_right(self.product(i, k), j);
                    if lhs != rhs {
                        out.push(Violation { identity: Identity::RightCommutative, triple: (i, j, k), lhs, rhs });
                    }
                    let lhs = self.mul_basis_left(i, self.product(j, k));
                    let rhs = self.mul_basis_left(j, self.product(i, k));
                    if lhs != rhs {
                        out.push(Violation { identity: Identity::LeftCommutative, triple: (i, j, k), lhs, rhs });
                    }
                }
            }
        }
        out
    }

    pub fn is_bicommutative(&self) -> bool {
        self.check_bicommutative().is_empty()
    }

    /// Span of all products `u v` with `u` in `left` and `v` in `right`.
    pub fn product_space(&self, left: &Subspace, right: &Subspace) -> Subspace {
        let mut vecs = Vec::new();
        for u in left.basis() {
            for v in right.basis() {
                vecs.push(self.mul(u, v));
            }
        }
        Subspace::span(self.field, self.dim, vecs)
    }

    pub fn full_space(&self) -> Subspace {
        Subspace::full(self.field, self.dim)
    }

    /// `A^2 = A A`.
    pub fn square(&self) -> Subspace {
        let vecs =
            (0..self.dim).flat_map(|i| (0..self.dim).map(move |j| (i, j))).map(|(i, j)| self.product(i, j).to_vec());
        Subspace::span(self.field, self.dim, vecs)
    }

    /// `[A^1, A^2, ...]` with `A^k = sum_{i+j=k} A^i A^j`, continued until
    /// the terms stop changing (a trailing zero term for nilpotent algebras).
    pub fn power_filtration(&self) -> Vec<Subspace> {
        let mut powers = vec![self.full_space()];
        loop {
            let k = powers.len() + 1;
            let mut next = Subspace::zero(self.field, self.dim);
            for i in 1..k {
                let p = self.product_space(&powers[i - 1], &powers[k - i - 1]);
                next = next.sum(&p);
            }
            let last = powers.last().expect("nonempty");
            if &next == last {
                break;
            }
            let done = next.is_zero();
            powers.push(next);
            if done {
                break;
            }
        }
        powers
    }

    pub fn is_nilpotent(&self) -> bool {
        self.power_filtration().last().is_some_and(Subspace::is_zero)
    }

    /// `dim(A / A^2) == 1`; requires a nilpotent algebra of positive dimension.
    pub fn is_one_generated(&self) -> Result<bool, AlgebraError> {
        if self.dim == 0 {
            return Err(AlgebraError::ZeroDimensional);
        }
        if !self.is_nilpotent() {
            return Err(AlgebraError::NotNilpotent);
        }
        Ok(self.dim - self.square().dim() == 1)
    }

    /// Smallest subalgebra containing `v`.
    pub fn generated_subalgebra(&self, v: &[Scalar]) -> Subspace {
        let mut sub = Subspace::span(self.field, self.dim, [v.to_vec()]);
        loop {
            let prod = self.product_space(&sub, &sub);
            let next = sub.sum(&prod);
            if next == sub {
                return sub;
            }
            sub = next;
        }
    }

    pub fn generates(&self, v: &[Scalar]) -> bool {
        self.generated_subalgebra(v).dim() == self.dim
    }

    fn left_mult_rows(&self) -> Vec<Vector> {
        // rows r_{j,k}: x -> (x e_j)_k
        let n = self.dim;
        let mut rows = Vec::with_capacity(n * n);
        for j in 0..n {
            for k in 0..n {
                rows.push((0..n).map(|i| self.coeff(i, j, k).clone()).collect());
            }
        }
        rows
    }

    fn right_mult_rows(&self) -> Vec<Vector> {
        // rows: x -> (e_j x)_k
        let n = self.dim;
        let mut rows = Vec::with_capacity(n * n);
        for j in 0..n {
            for k in 0..n {
                rows.push((0..n).map(|i| self.coeff(j, i, k).clone()).collect());
            }
        }
        rows
    }

    /// `{x : xA = 0}`.
    pub fn left_annihilator(&self) -> Subspace {
        Subspace::span(self.field, self.dim, linalg::kernel(&self.left_mult_rows(), self.dim, self.field))
    }

    /// `{x : Ax = 0}`.
    pub fn right_annihilator(&self) -> Subspace {
        Subspace::span(self.field, self.dim, linalg::kernel(&self.right_mult_rows(), self.dim, self.field))
    }

    /// `Ann(A) = {x : xA + Ax = 0}`.
    pub fn annihilator(&self) -> Subspace {
        let mut rows = self.left_mult_rows();
        rows.extend(self.right_mult_rows());
        Subspace::span(self.field, self.dim, linalg::kernel(&rows, self.dim, self.field))
    }

    pub fn is_ideal(&self, ideal: &Subspace) -> bool {
        ideal.basis().iter().all(|u| {
            (0..self.dim)
                .all(|k| ideal.contains(&self.mul_basis_right(u, k)) && ideal.contains(&self.mul_basis_left(k, u)))
        })
    }

    /// `A / I` on the complement basis `{e_c : c not a pivot of I}`, with the
    /// canonical projection.
    pub fn quotient(&self, ideal: &Subspace) -> Result<(Algebra, Morphism), AlgebraError> {
        if ideal.ambient_dim() != self.dim {
            return Err(AlgebraError::DimensionMismatch { expected: self.dim, got: ideal.ambient_dim() });
        }
        if !self.is_ideal(ideal) {
            return Err(AlgebraError::NotAnIdeal);
        }
        let keep = ideal.non_pivots();
        let m = keep.len();
        let project = |v: &[Scalar]| -> Vector {
            let r = ideal.reduce(v);
            keep.iter().map(|&c| r[c].clone()).collect()
        };
        let mut q = Algebra::zero(self.field, m);
        for (a, &ca) in keep.iter().enumerate() {
            for (b, &cb) in keep.iter().enumerate() {
                for (k, val) in project(self.product(ca, cb)).into_iter().enumerate() {
                    q.set_coeff(a, b, k, val);
                }
            }
        }
        let columns: Vec<Vector> = (0..self.dim).map(|i| project(&unit_vector(self.field, self.dim, i))).collect();
        let matrix = linalg::transpose(&columns);
        let proj = Morphism::new(self.clone(), q.clone(), matrix).expect("consistent shapes");
        Ok((q, proj))
    }

    /// `A ⊕ B` with `A` on the first basis vectors.
    pub fn direct_sum(&self, other: &Algebra) -> Algebra {
        assert_eq!(self.field, other.field);
        let (n, m) = (self.dim, other.dim);
        let mut s = Algebra::zero(self.field, n + m);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    s.set_coeff(i, j, k, self.coeff(i, j, k).clone());
                }
            }
        }
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    s.set_coeff(n + i, n + j, n + k, other.coeff(i, j, k).clone());
                }
            }
        }
        s
    }

    /// The same structure constants read in another field (integers reduce).
    /// Only meaningful for tables with integer coefficients.
    pub fn map_field(&self, f: impl Fn(&Scalar) -> Scalar, field: FieldSpec) -> Algebra {
        Algebra { field, dim: self.dim, sc: self.sc.iter().map(f).collect() }
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, j, p) in self.nonzero_products() {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "e{}e{}=", i + 1, j + 1)?;
            let mut t = true;
            for (k, c) in p.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                if !t {
                    write!(f, "+")?;
                }
                t = false;
                if c.is_one() {
                    write!(f, "e{}", k + 1)?;
                } else {
                    write!(f, "({c})e{}", k + 1)?;
                }
            }
        }
        if first {
            write!(f, "(zero algebra of dim {})", self.dim)?;
        }
        Ok(())
    }
}
