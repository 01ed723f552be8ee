//! Linear maps between algebras, the generator-image construction of
//! homomorphisms out of one-generated algebras, automorphism enumeration
//! over prime fields, and the action of automorphisms on forms and classes.

use std::fmt;

use thiserror::Error;

use crate::algebra::Algebra;
use crate::cohom::{BilinearForm, CohomError, CohomologyClass, CohomologySpace};
use crate::fp;
use crate::linalg::{self, mat_mul, mat_vec, transpose, Vector};
use crate::scalar::{FieldSpec, Scalar};

/// Largest `p^n` searched exhaustively.
pub const SEARCH_BOUND: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphismError {
    #[error("matrix shape {rows}x{cols} does not fit {target_dim}x{source_dim}")]
    Shape { rows: usize, cols: usize, target_dim: usize, source_dim: usize },
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("algebra is not nilpotent and one-generated")]
    NotOneGenerated,
    #[error("search space of {candidates} candidates exceeds the bound {bound}")]
    SearchSpaceTooLarge { candidates: u64, bound: u64 },
    #[error("exhaustive search needs a prime field, got {0}")]
    NotPrimeField(FieldSpec),
    #[error("map is not an automorphism of the algebra")]
    NotAnAutomorphism,
    #[error("vector has length {got}, expected {expected}")]
    VectorLength { expected: usize, got: usize },
    #[error(transparent)]
    Cohom(#[from] CohomError),
}

/// A linear map; column `i` of `matrix` is the image of `e_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Morphism {
    source: Algebra,
    target: Algebra,
    matrix: Vec<Vector>,
}

impl Morphism {
    pub fn new(source: Algebra, target: Algebra, matrix: Vec<Vector>) -> Result<Self, MorphismError> {
        if source.field() != target.field() {
            return Err(MorphismError::FieldMismatch(source.field(), target.field()));
        }
        let rows = matrix.len();
        let cols = matrix.first().map_or(source.dim(), Vec::len);
        if rows != target.dim() || cols != source.dim() || matrix.iter().any(|r| r.len() != cols) {
            return Err(MorphismError::Shape { rows, cols, target_dim: target.dim(), source_dim: source.dim() });
        }
        Ok(Morphism { source, target, matrix })
    }

    pub fn identity(a: &Algebra) -> Self {
        Morphism { source: a.clone(), target: a.clone(), matrix: linalg::identity(a.field(), a.dim()) }
    }

    pub fn source(&self) -> &Algebra {
        &self.source
    }

    pub fn target(&self) -> &Algebra {
        &self.target
    }

    pub fn matrix(&self) -> &[Vector] {
        &self.matrix
    }

    pub fn entry(&self, row: usize, col: usize) -> &Scalar {
        &self.matrix[row][col]
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        mat_vec(&self.matrix, v, self.source.field())
    }

    /// Image of `e_i`.
    pub fn column(&self, i: usize) -> Vector {
        self.matrix.iter().map(|r| r[i].clone()).collect()
    }

    pub fn is_homomorphism(&self) -> bool {
        let n = self.source.dim();
        let cols: Vec<Vector> = (0..n).map(|i| self.column(i)).collect();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let lhs = self.apply(self.source.product(i, j));
                let rhs = self.target.mul(&cols[i], &cols[j]);
                lhs == rhs
            })
        })
    }

    pub fn is_invertible(&self) -> bool {
        self.source.dim() == self.target.dim() && linalg::invert(&self.matrix, self.source.field()).is_some()
    }

    pub fn is_automorphism(&self) -> bool {
        self.source == self.target && self.is_invertible() && self.is_homomorphism()
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Morphism) -> Result<Morphism, MorphismError> {
        if other.source.dim() != self.target.dim() {
            return Err(MorphismError::Shape {
                rows: other.matrix.len(),
                cols: other.source.dim(),
                target_dim: other.target.dim(),
                source_dim: self.target.dim(),
            });
        }
        let m = mat_mul(&other.matrix, &self.matrix, self.source.field());
        Morphism::new(self.source.clone(), other.target.clone(), m)
    }

    pub fn inverse(&self) -> Option<Morphism> {
        let inv = linalg::invert(&self.matrix, self.source.field())?;
        Some(Morphism { source: self.target.clone(), target: self.source.clone(), matrix: inv })
    }
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.matrix.iter().enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// How a word-basis element is formed: the generator, or the product of two
/// earlier elements (by position).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Word {
    Generator,
    Product(usize, usize),
}

/// A basis of a one-generated algebra made of products of one generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordBasis {
    pub generator: Vector,
    pub words: Vec<Word>,
    pub vectors: Vec<Vector>,
}

impl WordBasis {
    /// Breadth-first by degree, left degree ascending, factors in acceptance
    /// order; a product joins the basis when independent of the earlier ones.
    pub fn from_generator(a: &Algebra, v: &[Scalar]) -> Option<Self> {
        let n = a.dim();
        if n == 0 || linalg::is_zero_vector(v) {
            return None;
        }
        let mut words = vec![Word::Generator];
        let mut vectors = vec![v.to_vec()];
        let mut span = linalg::Subspace::span(a.field(), n, [v.to_vec()]);
        let mut degree = vec![1usize];
        let mut d = 2;
        while vectors.len() < n && d <= n {
            let count = vectors.len();
            'outer: for left in 1..d {
                for u in 0..count {
                    if degree[u] != left {
                        continue;
                    }
                    for w in 0..count {
                        if degree[w] != d - left {
                            continue;
                        }
                        let prod = a.mul(&vectors[u], &vectors[w]);
                        if !span.contains(&prod) {
                            span = span.sum(&linalg::Subspace::span(a.field(), n, [prod.clone()]));
                            words.push(Word::Product(u, w));
                            vectors.push(prod);
                            degree.push(d);
                            if vectors.len() == n {
                                break 'outer;
                            }
                        }
                    }
                }
            }
            d += 1;
        }
        (vectors.len() == n).then(|| WordBasis { generator: v.to_vec(), words, vectors })
    }

    /// Word basis on the first standard basis vector outside `A^2`.
    pub fn standard(a: &Algebra) -> Result<Self, MorphismError> {
        if a.is_one_generated() != Ok(true) {
            return Err(MorphismError::NotOneGenerated);
        }
        let square = a.square();
        let g = (0..a.dim())
            .map(|i| linalg::unit_vector(a.field(), a.dim(), i))
            .find(|e| !square.contains(e))
            .ok_or(MorphismError::NotOneGenerated)?;
        Self::from_generator(a, &g).ok_or(MorphismError::NotOneGenerated)
    }

    /// Evaluate every word in `b` with the generator replaced by `v`.
    pub fn images(&self, b: &Algebra, v: &[Scalar]) -> Vec<Vector> {
        let mut imgs: Vec<Vector> = Vec::with_capacity(self.words.len());
        for w in &self.words {
            let img = match *w {
                Word::Generator => v.to_vec(),
                Word::Product(l, r) => b.mul(&imgs[l], &imgs[r]),
            };
            imgs.push(img);
        }
        imgs
    }

    /// Columns of the basis as a square matrix.
    pub fn matrix(&self) -> Vec<Vector> {
        transpose(&self.vectors)
    }
}

/// The linear map `A -> B` sending the standard word basis of `A` to the same
/// words evaluated on `v`, if it is a homomorphism.
pub fn extend_generator_image(a: &Algebra, b: &Algebra, v: &[Scalar]) -> Result<Option<Morphism>, MorphismError> {
    let basis = WordBasis::standard(a)?;
    extend_with_basis(&basis, a, b, v)
}

pub(crate) fn extend_with_basis(
    basis: &WordBasis,
    a: &Algebra,
    b: &Algebra,
    v: &[Scalar],
) -> Result<Option<Morphism>, MorphismError> {
    if a.field() != b.field() {
        return Err(MorphismError::FieldMismatch(a.field(), b.field()));
    }
    if v.len() != b.dim() {
        return Err(MorphismError::VectorLength { expected: b.dim(), got: v.len() });
    }
    let field = a.field();
    let imgs = basis.images(b, v);
    let winv = linalg::invert(&basis.matrix(), field).expect("word basis is a basis");
    let phi = mat_mul(&transpose(&imgs), &winv, field);
    let m = Morphism::new(a.clone(), b.clone(), phi)?;
    Ok(m.is_homomorphism().then_some(m))
}

pub(crate) fn check_search_space(field: FieldSpec, n: usize) -> Result<u64, MorphismError> {
    let p = field.modulus().ok_or(MorphismError::NotPrimeField(field))?;
    let candidates = p.checked_pow(n as u32).unwrap_or(u64::MAX);
    if candidates > SEARCH_BOUND || p >= 1 << 31 {
        return Err(MorphismError::SearchSpaceTooLarge { candidates, bound: SEARCH_BOUND });
    }
    Ok(candidates)
}

/// Every automorphism of a one-generated nilpotent algebra over GF(p), in
/// lexicographic order of the image of the generator.
pub fn enumerate_automorphisms(a: &Algebra) -> Result<Vec<Morphism>, MorphismError> {
    check_search_space(a.field(), a.dim())?;
    if a.is_one_generated() != Ok(true) {
        return Err(MorphismError::NotOneGenerated);
    }
    let fa = fp::FpAlgebra::from_algebra(a).expect("prime field");
    let p = fa.p;
    let mats = fp::automorphisms(&fa).ok_or(MorphismError::NotOneGenerated)?;
    Ok(mats
        .into_iter()
        .map(|m| Morphism { source: a.clone(), target: a.clone(), matrix: fp::to_scalar_matrix(&m, p) })
        .collect())
}

/// `(φθ)(x, y) = θ(φx, φy)`, i.e. the matrix `φᵀ m φ`.
pub fn act_on_form(phi: &Morphism, theta: &BilinearForm) -> Result<BilinearForm, MorphismError> {
    if theta.dim() != phi.target.dim() {
        return Err(MorphismError::Shape {
            rows: theta.dim(),
            cols: theta.dim(),
            target_dim: phi.target.dim(),
            source_dim: phi.target.dim(),
        });
    }
    if theta.field() != phi.source.field() {
        return Err(MorphismError::FieldMismatch(theta.field(), phi.source.field()));
    }
    let field = theta.field();
    let m = mat_mul(&transpose(&phi.matrix), &mat_mul(theta.matrix(), &phi.matrix, field), field);
    Ok(BilinearForm::from_matrix(field, m))
}

/// The induced action on H² coordinates.
pub fn act_on_class(
    phi: &Morphism,
    space: &CohomologySpace,
    class: &CohomologyClass,
) -> Result<CohomologyClass, MorphismError> {
    if phi.source() != space.algebra() || !phi.is_automorphism() {
        return Err(MorphismError::NotAnAutomorphism);
    }
    let theta = space.representative(class);
    Ok(space.class_of(&act_on_form(phi, &theta)?)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohom::cohomology;
    use crate::linalg::unit_vector;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn chain(field: FieldSpec, n: usize) -> Algebra {
        let table: Vec<_> = (1..n).map(|k| (k, 1, 1, k + 1)).collect();
        Algebra::from_int_table(field, n, &table)
    }

    #[test]
    fn identity_and_swap() {
        let a = chain(Q, 5);
        assert!(Morphism::identity(&a).is_homomorphism());
        let b = Algebra::from_int_table(Q, 2, &[(1, 1, 1, 2)]);
        let swap = Morphism::new(
            b.clone(),
            b.clone(),
            vec![vec![Scalar::zero(Q), Scalar::one(Q)], vec![Scalar::one(Q), Scalar::zero(Q)]],
        )
        .unwrap();
        assert!(!swap.is_homomorphism());
    }

    #[test]
    fn generator_images_on_chain() {
        let f3 = FieldSpec::Prime(3);
        let a = chain(f3, 4);
        let two = Scalar::from_i64(f3, 2);
        let v: Vector = [2, 0, 0, 0].iter().map(|&x| Scalar::from_i64(f3, x)).collect();
        let phi = extend_generator_image(&a, &a, &v).unwrap().unwrap();
        // diag(x, x^2, x^3, x^4) at x = 2
        for i in 0..4 {
            assert_eq!(phi.entry(i, i), &two.pow(i as u64 + 1));
        }
        let id = extend_generator_image(&a, &a, &unit_vector(f3, 4, 0)).unwrap().unwrap();
        assert_eq!(id, Morphism::identity(&a));
    }

    #[test]
    fn automorphism_counts() {
        let f3 = FieldSpec::Prime(3);
        let auts = enumerate_automorphisms(&chain(f3, 4)).unwrap();
        assert_eq!(auts.len(), 54);
        assert_eq!(auts.iter().filter(|m| **m == Morphism::identity(m.source())).count(), 1);
        let zero = Algebra::zero(FieldSpec::Prime(5), 1);
        assert_eq!(enumerate_automorphisms(&zero).unwrap().len(), 4);
        let big = chain(FieldSpec::Prime(101), 4);
        assert!(matches!(enumerate_automorphisms(&big), Err(MorphismError::SearchSpaceTooLarge { .. })));
        assert!(matches!(enumerate_automorphisms(&chain(Q, 3)), Err(MorphismError::NotPrimeField(_))));
    }

    #[test]
    fn action_on_chain_classes() {
        let a = chain(Q, 4);
        let h = cohomology(&a);
        let v: Vector = [2, 0, 0, 0].iter().map(|&x| Scalar::from_i64(Q, x)).collect();
        let phi = extend_generator_image(&a, &a, &v).unwrap().unwrap();
        // representatives D(1,2), D(4,1): scale by x^3 and x^5
        let c = act_on_class(&phi, &h, &h.basis_class(0)).unwrap();
        assert_eq!(c.coords, vec![Scalar::from_i64(Q, 8), Scalar::zero(Q)]);
        let c = act_on_class(&phi, &h, &h.basis_class(1)).unwrap();
        assert_eq!(c.coords, vec![Scalar::zero(Q), Scalar::from_i64(Q, 32)]);
        let theta = h.h2_reps()[0].clone();
        assert_eq!(act_on_form(&Morphism::identity(&a), &theta).unwrap(), theta);
    }
}
