//! Bilinear forms in the `D(i,j)` basis and the spaces Z², B², H² of an
//! algebra with trivial coefficients.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::algebra::Algebra;
use crate::expr::{Expr, ExprError};
use crate::linalg::{self, is_zero_vector, solve_combination, zero_vector, Subspace, Vector};
use crate::scalar::{FieldSpec, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomError {
    #[error("form is not a cocycle")]
    NotACocycle,
    #[error("form has dimension {got}, algebra has dimension {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("field mismatch: expected {expected}, got {got}")]
    FieldMismatch { expected: FieldSpec, got: FieldSpec },
    #[error("cohomology classes are linearly dependent")]
    DependentClasses,
    #[error("the given forms do not form a basis of H²")]
    NotABasis,
    #[error("D({0},{1}) is out of range")]
    IndexOutOfRange(usize, usize),
    #[error("form syntax: {0}")]
    Syntax(String),
    #[error(transparent)]
    Expr(#[from] ExprError),
}

/// A scalar bilinear form; `m[i][j]` is the coefficient of `D(i+1,j+1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BilinearForm {
    field: FieldSpec,
    dim: usize,
    m: Vec<Vector>,
}

impl BilinearForm {
    pub fn zero(field: FieldSpec, dim: usize) -> Self {
        BilinearForm { field, dim, m: vec![zero_vector(field, dim); dim] }
    }

    /// `D(i+1, j+1)` (0-based arguments).
    pub fn delta(field: FieldSpec, dim: usize, i: usize, j: usize) -> Self {
        let mut f = Self::zero(field, dim);
        f.m[i][j] = Scalar::one(field);
        f
    }

    pub fn from_matrix(field: FieldSpec, m: Vec<Vector>) -> Self {
        let dim = m.len();
        assert!(m.iter().all(|r| r.len() == dim), "square matrix expected");
        BilinearForm { field, dim, m }
    }

    /// From the row-major coordinate vector of length `dim^2`.
    pub fn from_vector(field: FieldSpec, dim: usize, v: &[Scalar]) -> Self {
        assert_eq!(v.len(), dim * dim);
        let m = v.chunks(dim.max(1)).take(dim).map(<[Scalar]>::to_vec).collect();
        BilinearForm { field, dim, m }
    }

    pub fn to_vector(&self) -> Vector {
        self.m.iter().flatten().cloned().collect()
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &[Vector] {
        &self.m
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        &self.m[i][j]
    }

    pub fn is_zero(&self) -> bool {
        self.m.iter().all(|r| is_zero_vector(r))
    }

    /// `θ(x, y)`.
    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero(self.field);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() && !self.m[i][j].is_zero() {
                    acc = &acc + &(&(xi * yj) * &self.m[i][j]);
                }
            }
        }
        acc
    }

    pub fn add(&self, other: &BilinearForm) -> BilinearForm {
        let m = self.m.iter().zip(&other.m).map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect()).collect();
        BilinearForm { field: self.field, dim: self.dim, m }
    }

    pub fn scale(&self, c: &Scalar) -> BilinearForm {
        let m = self.m.iter().map(|r| linalg::scale(r, c)).collect();
        BilinearForm { field: self.field, dim: self.dim, m }
    }

    /// Parse `D(1,4) + 2*D(2,2)`; `vars` binds any parameters used in
    /// coefficients.
    pub fn parse_with(
        text: &str,
        field: FieldSpec,
        dim: usize,
        vars: &HashMap<String, Scalar>,
    ) -> Result<Self, CohomError> {
        let expr = Expr::parse_with_symbols(text, &["D"])?;
        let lin = expr.eval_linear(field, vars)?;
        if !lin.constant.is_zero() {
            return Err(CohomError::Syntax("constant term in a form".into()));
        }
        let mut f = Self::zero(field, dim);
        for (sym, c) in lin.terms {
            let &[i, j] = sym.args.as_slice() else {
                return Err(CohomError::Syntax(format!("{sym} needs two indices")));
            };
            if i == 0 || j == 0 || i > dim || j > dim {
                return Err(CohomError::IndexOutOfRange(i, j));
            }
            f.m[i - 1][j - 1] = c;
        }
        Ok(f)
    }

    pub fn parse(text: &str, field: FieldSpec, dim: usize) -> Result<Self, CohomError> {
        Self::parse_with(text, field, dim, &HashMap::new())
    }
}

/// Writes `coeff*SYM` terms joined by ` + `/` - `, or `0`.
pub(crate) fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl IntoIterator<Item = (&'a Scalar, String)>,
) -> fmt::Result {
    let mut first = true;
    for (c, sym) in terms {
        if c.is_zero() {
            continue;
        }
        let negative = c.as_rational().is_some_and(|r| r < &num_rational::BigRational::from_integer(0.into()));
        let abs = if negative { -c } else { c.clone() };
        match (first, negative) {
            (true, true) => write!(f, "-")?,
            (true, false) => {}
            (false, true) => write!(f, " - ")?,
            (false, false) => write!(f, " + ")?,
        }
        if abs.is_one() {
            write!(f, "{sym}")?;
        } else {
            write!(f, "{abs}*{sym}")?;
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for BilinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .m
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, c)| (c, format!("D({},{})", i + 1, j + 1))));
        write_terms(f, terms)
    }
}

/// Linear conditions on the `dim^2` coordinates cutting out Z².
fn cocycle_equations(a: &Algebra) -> Vec<Vector> {
    let n = a.dim();
    let field = a.field();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                // θ(e_i e_j, e_k) - θ(e_i e_k, e_j)
                let mut r = zero_vector(field, n * n);
                for l in 0..n {
                    let c = a.coeff(i, j, l);
                    r[l * n + k] = &r[l * n + k] + c;
                    let c = a.coeff(i, k, l);
                    r[l * n + j] = &r[l * n + j] - c;
                }
                if !is_zero_vector(&r) {
                    rows.push(r);
                }
                // θ(e_i, e_j e_k) - θ(e_j, e_i e_k)
                let mut r = zero_vector(field, n * n);
                for l in 0..n {
                    let c = a.coeff(j, k, l);
                    r[i * n + l] = &r[i * n + l] + c;
                    let c = a.coeff(i, k, l);
                    r[j * n + l] = &r[j * n + l] - c;
                }
                if !is_zero_vector(&r) {
                    rows.push(r);
                }
            }
        }
    }
    rows
}

fn z2_subspace(a: &Algebra) -> Subspace {
    let n2 = a.dim() * a.dim();
    let ker = linalg::kernel(&cocycle_equations(a), n2, a.field());
    Subspace::span(a.field(), n2, ker)
}

fn b2_subspace(a: &Algebra) -> Subspace {
    let n = a.dim();
    let vecs = (0..n).map(|k| {
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| a.coeff(i, j, k).clone()).collect::<Vector>()
    });
    Subspace::span(a.field(), n * n, vecs)
}

fn forms(field: FieldSpec, dim: usize, s: &Subspace) -> Vec<BilinearForm> {
    s.basis().iter().map(|v| BilinearForm::from_vector(field, dim, v)).collect()
}

/// Echelon basis of Z²(A).
pub fn cocycle_space(a: &Algebra) -> Vec<BilinearForm> {
    forms(a.field(), a.dim(), &z2_subspace(a))
}

/// Echelon basis of B²(A) = {δf : f(xy)}.
pub fn coboundary_space(a: &Algebra) -> Vec<BilinearForm> {
    forms(a.field(), a.dim(), &b2_subspace(a))
}

pub fn is_cocycle(a: &Algebra, theta: &BilinearForm) -> bool {
    let v = theta.to_vector();
    cocycle_equations(a)
        .iter()
        .all(|row| row.iter().zip(&v).fold(Scalar::zero(a.field()), |acc, (x, y)| &acc + &(x * y)).is_zero())
}

/// The coboundary `δf` of a linear functional given by its values on the basis.
pub fn coboundary(a: &Algebra, f: &[Scalar]) -> BilinearForm {
    let n = a.dim();
    let m = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| a.product(i, j).iter().zip(f).fold(Scalar::zero(a.field()), |acc, (c, x)| &acc + &(c * x)))
                .collect()
        })
        .collect();
    BilinearForm::from_matrix(a.field(), m)
}

/// Coordinates of a cohomology class with respect to the space's H² basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CohomologyClass {
    pub coords: Vector,
}

impl CohomologyClass {
    pub fn new(coords: Vector) -> Self {
        CohomologyClass { coords }
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.coords)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologySpace {
    algebra: Algebra,
    z2: Subspace,
    b2: Subspace,
    h2_reps: Vec<BilinearForm>,
    // representatives reduced modulo B², used to read off coordinates
    reduced_reps: Vec<Vector>,
}

/// Z², B² and a set of H² representatives. The default representatives are
/// the echelon basis of the cocycles vanishing at the pivots of B².
pub fn cohomology(a: &Algebra) -> CohomologySpace {
    let z2 = z2_subspace(a);
    let b2 = b2_subspace(a);
    let reduced = z2.basis().iter().map(|v| b2.reduce(v));
    let complement = Subspace::span(a.field(), a.dim() * a.dim(), reduced);
    let reps = forms(a.field(), a.dim(), &complement);
    let reduced_reps = complement.basis().to_vec();
    CohomologySpace { algebra: a.clone(), z2, b2, h2_reps: reps, reduced_reps }
}

impl CohomologySpace {
    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn z2(&self) -> Vec<BilinearForm> {
        forms(self.algebra.field(), self.algebra.dim(), &self.z2)
    }

    pub fn b2(&self) -> Vec<BilinearForm> {
        forms(self.algebra.field(), self.algebra.dim(), &self.b2)
    }

    pub fn z2_subspace(&self) -> &Subspace {
        &self.z2
    }

    pub fn b2_subspace(&self) -> &Subspace {
        &self.b2
    }

    pub fn h2_reps(&self) -> &[BilinearForm] {
        &self.h2_reps
    }

    pub fn dim_z2(&self) -> usize {
        self.z2.dim()
    }

    pub fn dim_b2(&self) -> usize {
        self.b2.dim()
    }

    pub fn dim_h2(&self) -> usize {
        self.h2_reps.len()
    }

    pub fn contains_cocycle(&self, theta: &BilinearForm) -> bool {
        self.z2.contains(&theta.to_vector())
    }

    pub fn is_coboundary(&self, theta: &BilinearForm) -> bool {
        self.b2.contains(&theta.to_vector())
    }

    fn check_form(&self, theta: &BilinearForm) -> Result<(), CohomError> {
        if theta.dim() != self.algebra.dim() {
            return Err(CohomError::DimensionMismatch { expected: self.algebra.dim(), got: theta.dim() });
        }
        if theta.field() != self.algebra.field() {
            return Err(CohomError::FieldMismatch { expected: self.algebra.field(), got: theta.field() });
        }
        Ok(())
    }

    /// Replace the H² representatives by the given cocycles, which must
    /// project to a basis of H².
    pub fn with_basis(&self, reps: Vec<BilinearForm>) -> Result<CohomologySpace, CohomError> {
        let mut reduced = Vec::with_capacity(reps.len());
        for r in &reps {
            self.check_form(r)?;
            if !self.contains_cocycle(r) {
                return Err(CohomError::NotACocycle);
            }
            reduced.push(self.b2.reduce(&r.to_vector()));
        }
        let n2 = self.algebra.dim() * self.algebra.dim();
        if reps.len() != self.dim_h2() || linalg::rank(&reduced, n2) != reps.len() {
            return Err(CohomError::NotABasis);
        }
        Ok(CohomologySpace { h2_reps: reps, reduced_reps: reduced, ..self.clone() })
    }

    /// The class `[θ]` in coordinates over the H² representatives.
    pub fn class_of(&self, theta: &BilinearForm) -> Result<CohomologyClass, CohomError> {
        self.check_form(theta)?;
        if !self.contains_cocycle(theta) {
            return Err(CohomError::NotACocycle);
        }
        let r = self.b2.reduce(&theta.to_vector());
        let coords = solve_combination(&self.reduced_reps, &r, self.algebra.field())
            .expect("reduced cocycles lie in the span of the representatives");
        Ok(CohomologyClass { coords })
    }

    /// `sum coords_i * rep_i`.
    pub fn representative(&self, class: &CohomologyClass) -> BilinearForm {
        let field = self.algebra.field();
        let mut out = BilinearForm::zero(field, self.algebra.dim());
        for (c, rep) in class.coords.iter().zip(&self.h2_reps) {
            if !c.is_zero() {
                out = out.add(&rep.scale(c));
            }
        }
        out
    }

    /// Unit class `[rep_i]`.
    pub fn basis_class(&self, i: usize) -> CohomologyClass {
        CohomologyClass { coords: linalg::unit_vector(self.algebra.field(), self.dim_h2(), i) }
    }

    /// Whether the classes are linearly independent in H².
    pub fn independent(&self, classes: &[CohomologyClass]) -> bool {
        let rows: Vec<Vector> = classes.iter().map(|c| c.coords.clone()).collect();
        linalg::rank(&rows, self.dim_h2()) == classes.len()
    }
}

/// `Ann(θ_1) ∩ ... ∩ Ann(θ_s)` where `Ann(θ) = {x : θ(x, A) + θ(A, x) = 0}`.
pub fn cocycle_annihilator(thetas: &[BilinearForm], a: &Algebra) -> Subspace {
    let n = a.dim();
    let mut rows = Vec::new();
    for t in thetas {
        assert_eq!(t.dim(), n, "form dimension must match the algebra");
        for j in 0..n {
            // x -> θ(x, e_j) and x -> θ(e_j, x)
            rows.push((0..n).map(|i| t.entry(i, j).clone()).collect::<Vector>());
            rows.push(t.matrix()[j].clone());
        }
    }
    Subspace::span(a.field(), n, linalg::kernel(&rows, n, a.field()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::unit_vector;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn b4_03() -> Algebra {
        Algebra::from_int_table(Q, 4, &[(1, 1, 1, 2), (2, 1, 1, 3), (3, 1, 1, 4)])
    }

    fn b4_01() -> Algebra {
        Algebra::from_int_table(Q, 4, &[(1, 1, 1, 2), (1, 2, 1, 4), (2, 1, 1, 3)])
    }

    fn span_of(text: &[&str], n: usize) -> Subspace {
        Subspace::span(Q, n * n, text.iter().map(|t| BilinearForm::parse(t, Q, n).unwrap().to_vector()))
    }

    #[test]
    fn form_syntax() {
        let f = BilinearForm::parse("D(1,4) + 2*D(2,2)", Q, 4).unwrap();
        assert_eq!(f.entry(0, 3), &Scalar::one(Q));
        assert_eq!(f.entry(1, 1), &Scalar::from_i64(Q, 2));
        assert_eq!(f.to_string(), "D(1,4) + 2*D(2,2)");
        let g = BilinearForm::parse("-D(1,1) - 1/2*D(2,1)", Q, 2).unwrap();
        assert_eq!(g.to_string(), "-D(1,1) - 1/2*D(2,1)");
        assert_eq!(BilinearForm::parse(&g.to_string(), Q, 2).unwrap(), g);
        assert_eq!(BilinearForm::zero(Q, 3).to_string(), "0");
        assert!(matches!(BilinearForm::parse("D(1,5)", Q, 4), Err(CohomError::IndexOutOfRange(1, 5))));
        assert!(BilinearForm::parse("D(1)", Q, 4).is_err());
        assert!(BilinearForm::parse("1 + D(1,1)", Q, 4).is_err());
    }

    #[test]
    fn b4_03_spaces() {
        let a = b4_03();
        let h = cohomology(&a);
        assert_eq!(h.z2_subspace(), &span_of(&["D(1,1)", "D(1,2)", "D(2,1)", "D(3,1)", "D(4,1)"], 4));
        assert_eq!(h.b2_subspace(), &span_of(&["D(1,1)", "D(2,1)", "D(3,1)"], 4));
        let reps: Vec<String> = h.h2_reps().iter().map(ToString::to_string).collect();
        assert_eq!(reps, vec!["D(1,2)", "D(4,1)"]);
    }

    #[test]
    fn zero_algebra() {
        let h = cohomology(&Algebra::zero(Q, 3));
        assert_eq!((h.dim_z2(), h.dim_b2(), h.dim_h2()), (9, 0, 9));
    }

    #[test]
    fn classes_and_bases() {
        let a = b4_01();
        let h = cohomology(&a);
        assert_eq!((h.dim_z2(), h.dim_b2(), h.dim_h2()), (6, 3, 3));
        let nablas =
            ["D(1,4)", "D(3,1)", "D(1,3)+D(4,1)+D(2,2)"].map(|t| BilinearForm::parse(t, Q, 4).unwrap()).to_vec();
        let h = h.with_basis(nablas.clone()).unwrap();
        // D(1,3)+D(4,1)+D(2,2) plus the coboundary of e2* (= D(1,1))
        let theta = nablas[2].add(&coboundary(&a, &unit_vector(Q, 4, 1)));
        assert_eq!(h.class_of(&theta).unwrap(), h.basis_class(2));
        assert_eq!(h.class_of(&BilinearForm::delta(Q, 4, 1, 1)), Err(CohomError::NotACocycle));
        let dependent = vec![nablas[0].clone(), nablas[0].clone(), nablas[1].clone()];
        assert_eq!(h.with_basis(dependent), Err(CohomError::NotABasis));
    }

    #[test]
    fn annihilators_of_cocycles() {
        let a = b4_01();
        let d14 = BilinearForm::parse("D(1,4)", Q, 4).unwrap();
        let d31 = BilinearForm::parse("D(3,1)", Q, 4).unwrap();
        let e = |i: usize| unit_vector(Q, 4, i - 1);
        assert_eq!(cocycle_annihilator(std::slice::from_ref(&d14), &a), Subspace::span(Q, 4, [e(2), e(3)]));
        assert_eq!(cocycle_annihilator(&[d14, d31], &a), Subspace::span(Q, 4, [e(2)]));
        assert_eq!(cocycle_annihilator(&[BilinearForm::zero(Q, 4)], &a), Subspace::full(Q, 4));
    }
}
