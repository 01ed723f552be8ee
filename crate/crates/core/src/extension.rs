//! Central extensions `A_θ = A ⊕ V`, the annihilator-component and `T_s`
//! tests, decomposition of an algebra over its annihilator, and orbit
//! enumeration of `Aut(A)` on `s`-dimensional subspaces of H² over GF(p).

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::algebra::{Algebra, AlgebraError};
use crate::cohom::{
    cocycle_annihilator, cohomology, is_cocycle, BilinearForm, CohomError, CohomologyClass, CohomologySpace,
};
use crate::fp::inv_mod;
use crate::linalg::Subspace;
use crate::morphism::{act_on_form, enumerate_automorphisms, Morphism, MorphismError};
use crate::scalar::{FieldSpec, Scalar};

/// Largest number of subspaces `enumerate_orbits` will list.
pub const SUBSPACE_BOUND: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtensionError {
    #[error("an extension needs at least one cocycle")]
    Empty,
    #[error("θ_{0} is not a cocycle")]
    NotACocycle(usize),
    #[error("form {index} has dimension {got}, parent has dimension {expected}")]
    DimensionMismatch { index: usize, expected: usize, got: usize },
    #[error("Ann(θ) ∩ Ann(A) is not zero")]
    AnnihilatorNotTrivial,
    #[error("the algebra has zero annihilator")]
    ZeroAnnihilator,
    #[error("extension dimension {s} exceeds dim H² = {h}")]
    TooLarge { s: usize, h: usize },
    #[error("{count} subspaces exceed the bound {bound}")]
    TooManySubspaces { count: u64, bound: u64 },
    #[error(transparent)]
    Cohom(#[from] CohomError),
    #[error(transparent)]
    Morphism(#[from] MorphismError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// The data `(A, θ_1, ..., θ_s)` of an `s`-dimensional central extension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionSpec {
    pub parent: Algebra,
    pub thetas: Vec<BilinearForm>,
}

impl ExtensionSpec {
    pub fn new(parent: Algebra, thetas: Vec<BilinearForm>) -> Result<Self, ExtensionError> {
        if thetas.is_empty() {
            return Err(ExtensionError::Empty);
        }
        for (index, t) in thetas.iter().enumerate() {
            if t.dim() != parent.dim() {
                return Err(ExtensionError::DimensionMismatch {
                    index: index + 1,
                    expected: parent.dim(),
                    got: t.dim(),
                });
            }
            if t.field() != parent.field() {
                return Err(CohomError::FieldMismatch { expected: parent.field(), got: t.field() }.into());
            }
        }
        Ok(ExtensionSpec { parent, thetas })
    }

    pub fn s(&self) -> usize {
        self.thetas.len()
    }

    /// `Ann(θ) = Ann(θ_1) ∩ ... ∩ Ann(θ_s)`.
    pub fn theta_annihilator(&self) -> Subspace {
        cocycle_annihilator(&self.thetas, &self.parent)
    }
}

/// Product table without checking the cocycle condition.
pub fn extend_unchecked(parent: &Algebra, thetas: &[BilinearForm]) -> Algebra {
    let n = parent.dim();
    let s = thetas.len();
    let mut out = Algebra::zero(parent.field(), n + s);
    for (i, j, prod) in parent.nonzero_products() {
        for (k, c) in prod.iter().enumerate() {
            if !c.is_zero() {
                out.set_coeff(i, j, k, c.clone());
            }
        }
    }
    for (r, t) in thetas.iter().enumerate() {
        for i in 0..n {
            for j in 0..n {
                let c = t.entry(i, j);
                if !c.is_zero() {
                    out.set_coeff(i, j, n + r, c.clone());
                }
            }
        }
    }
    out
}

/// `A_θ`: old products gain the components `θ_r(e_i, e_j) e_{n+r}`; the new
/// basis vectors multiply to zero.
pub fn central_extension(spec: &ExtensionSpec) -> Result<Algebra, ExtensionError> {
    for (i, t) in spec.thetas.iter().enumerate() {
        if !is_cocycle(&spec.parent, t) {
            return Err(ExtensionError::NotACocycle(i + 1));
        }
    }
    Ok(extend_unchecked(&spec.parent, &spec.thetas))
}

/// Whether `Ann(θ) ∩ Ann(A) = 0` for the subspace spanned by `classes`.
pub fn in_t_s(space: &CohomologySpace, classes: &[CohomologyClass]) -> Result<bool, ExtensionError> {
    if !space.independent(classes) {
        return Err(CohomError::DependentClasses.into());
    }
    let thetas: Vec<BilinearForm> = classes.iter().map(|c| space.representative(c)).collect();
    let a = space.algebra();
    Ok(cocycle_annihilator(&thetas, a).intersect(&a.annihilator()).is_zero())
}

/// True iff the classes `[θ_1], ..., [θ_s]` are dependent. Dependent classes
/// always split off an annihilator component; for independent classes the
/// answer `false` needs `Ann(θ) ∩ Ann(A) = 0`, and its failure is an error.
pub fn has_annihilator_component(spec: &ExtensionSpec) -> Result<bool, ExtensionError> {
    let space = cohomology(&spec.parent);
    let mut classes = Vec::with_capacity(spec.s());
    for (i, t) in spec.thetas.iter().enumerate() {
        classes.push(space.class_of(t).map_err(|e| match e {
            CohomError::NotACocycle => ExtensionError::NotACocycle(i + 1),
            other => other.into(),
        })?);
    }
    if !space.independent(&classes) {
        return Ok(true);
    }
    if !spec.theta_annihilator().intersect(&spec.parent.annihilator()).is_zero() {
        return Err(ExtensionError::AnnihilatorNotTrivial);
    }
    Ok(false)
}

/// `A` written as a central extension of `A / Ann(A)`.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub spec: ExtensionSpec,
    pub projection: Morphism,
    /// An isomorphism `central_extension(spec) -> A`.
    pub witness: Morphism,
}

/// Split `A` over its annihilator: the parent is `A / Ann(A)` on the
/// non-pivot standard basis vectors, and `θ_r` reads the coefficient of the
/// `r`-th echelon basis vector of `Ann(A)`.
pub fn decompose(a: &Algebra) -> Result<Decomposition, ExtensionError> {
    let ann = a.annihilator();
    if ann.is_zero() {
        return Err(ExtensionError::ZeroAnnihilator);
    }
    let (parent, projection) = a.quotient(&ann)?;
    let keep = ann.non_pivots();
    let field = a.field();
    let m = keep.len();
    let mut thetas: Vec<Vec<Vec<Scalar>>> = vec![vec![vec![Scalar::zero(field); m]; m]; ann.dim()];
    for (x, &cx) in keep.iter().enumerate() {
        for (y, &cy) in keep.iter().enumerate() {
            let prod = a.product(cx, cy);
            for (r, &pc) in ann.pivots().iter().enumerate() {
                thetas[r][x][y] = prod[pc].clone();
            }
        }
    }
    let thetas: Vec<BilinearForm> = thetas.into_iter().map(|m| BilinearForm::from_matrix(field, m)).collect();
    let spec = ExtensionSpec::new(parent, thetas)?;
    let ext = extend_unchecked(&spec.parent, &spec.thetas);
    // basis of A realizing the extension: the kept e_c, then the Ann basis
    let mut columns: Vec<Vec<Scalar>> = keep.iter().map(|&c| crate::linalg::unit_vector(field, a.dim(), c)).collect();
    columns.extend(ann.basis().iter().cloned());
    let witness = Morphism::new(ext, a.clone(), crate::linalg::transpose(&columns))?;
    debug_assert!(witness.is_homomorphism());
    Ok(Decomposition { spec, projection, witness })
}

/// One `Aut(A)`-orbit on `T_s(A)`.
#[derive(Debug, Clone)]
pub struct Orbit {
    /// Echelon basis of the least subspace in the orbit, in H² coordinates.
    pub representative: Vec<CohomologyClass>,
    pub forms: Vec<BilinearForm>,
    pub size: u64,
    pub extension: Algebra,
}

#[derive(Debug, Clone)]
pub struct OrbitReport {
    pub parent: Algebra,
    pub s: usize,
    pub dim_h2: usize,
    pub automorphisms: usize,
    pub subspaces: u64,
    pub in_t_s: u64,
    pub orbits: Vec<Orbit>,
}

/// Gaussian binomial `[h choose s]_p`, saturating.
pub fn gaussian_binomial(h: usize, s: usize, p: u64) -> u64 {
    if s > h {
        return 0;
    }
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..s {
        let a = (p as u128).checked_pow((h - i) as u32).unwrap_or(u128::MAX / 4);
        let b = (p as u128).checked_pow((i + 1) as u32).unwrap_or(u128::MAX / 4);
        num = num.saturating_mul(a.saturating_sub(1));
        den = den.saturating_mul(b - 1);
    }
    u64::try_from(num / den).unwrap_or(u64::MAX)
}

/// All `s`-dimensional subspaces of `GF(p)^h` as reduced echelon matrices,
/// flattened row-major, in increasing lexicographic order.
pub fn subspaces(h: usize, s: usize, p: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut pivots = Vec::with_capacity(s);
    pivot_sets(h, s, 0, &mut pivots, &mut |piv| {
        let mut free = Vec::new();
        for (r, &pc) in piv.iter().enumerate() {
            for c in pc + 1..h {
                if !piv.contains(&c) {
                    free.push(r * h + c);
                }
            }
        }
        let total = p.pow(free.len() as u32);
        for idx in 0..total {
            let mut m = vec![0u64; s * h];
            for (r, &pc) in piv.iter().enumerate() {
                m[r * h + pc] = 1;
            }
            let mut k = idx;
            for &pos in free.iter().rev() {
                m[pos] = k % p;
                k /= p;
            }
            out.push(m);
        }
    });
    out.sort();
    out
}

fn pivot_sets(h: usize, s: usize, start: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if cur.len() == s {
        f(cur);
        return;
    }
    for c in start..h {
        cur.push(c);
        pivot_sets(h, s, c + 1, cur, f);
        cur.pop();
    }
}

/// Reduced echelon form of `rows` (each of length `h`), flattened.
fn rref_flat(mut rows: Vec<Vec<u64>>, h: usize, p: u64) -> Vec<u64> {
    let mut r = 0;
    for c in 0..h {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, piv);
        let inv = inv_mod(rows[r][c], p);
        rows[r].iter_mut().for_each(|x| *x = *x * inv % p);
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = p - rows[i][c];
                let pivot_row = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                    *x = (*x + f * y) % p;
                }
            }
        }
        r += 1;
    }
    rows.truncate(r);
    rows.concat()
}

/// The matrix of `[θ] ↦ [φθ]` in the coordinates of `space`, column `i`
/// being the image of the `i`-th representative.
pub fn class_action_matrix(phi: &Morphism, space: &CohomologySpace) -> Result<Vec<Vec<Scalar>>, ExtensionError> {
    let h = space.dim_h2();
    let mut columns = Vec::with_capacity(h);
    for i in 0..h {
        let image = act_on_form(phi, &space.h2_reps()[i])?;
        columns.push(space.class_of(&image)?.coords);
    }
    Ok(crate::linalg::transpose(&columns))
}

/// Orbits of `Aut(A)` on `T_s(A)` over GF(p), each with its least
/// subspace as representative and the corresponding extension.
pub fn enumerate_orbits(a: &Algebra, s: usize) -> Result<OrbitReport, ExtensionError> {
    enumerate_orbits_in(&cohomology(a), s)
}

/// As `enumerate_orbits`, using the H² representatives of `space`.
pub fn enumerate_orbits_in(space: &CohomologySpace, s: usize) -> Result<OrbitReport, ExtensionError> {
    let a = space.algebra();
    let field = a.field();
    let p = field.modulus().ok_or(MorphismError::NotPrimeField(field))?;
    let h = space.dim_h2();
    if s == 0 {
        return Err(ExtensionError::Empty);
    }
    if s > h {
        return Err(ExtensionError::TooLarge { s, h });
    }
    let count = gaussian_binomial(h, s, p);
    if count > SUBSPACE_BOUND {
        return Err(ExtensionError::TooManySubspaces { count, bound: SUBSPACE_BOUND });
    }
    let auts = enumerate_automorphisms(a)?;
    let actions: Vec<Vec<Vec<u64>>> = auts
        .iter()
        .map(|phi| {
            class_action_matrix(phi, space)
                .map(|m| m.iter().map(|row| row.iter().map(|c| c.residue().expect("prime field")).collect()).collect())
        })
        .collect::<Result<_, _>>()?;
    let ann = a.annihilator();
    let to_classes = |flat: &[u64]| -> Vec<CohomologyClass> {
        flat.chunks(h)
            .map(|row| CohomologyClass::new(row.iter().map(|&x| Scalar::from_i64(field, x as i64)).collect()))
            .collect()
    };
    let all = subspaces(h, s, p);
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut orbits = Vec::new();
    let mut in_t = 0;
    for w in &all {
        if seen.contains(w) {
            continue;
        }
        let classes = to_classes(w);
        let thetas: Vec<BilinearForm> = classes.iter().map(|c| space.representative(c)).collect();
        let good = cocycle_annihilator(&thetas, a).intersect(&ann).is_zero();
        let mut members: HashSet<Vec<u64>> = HashSet::new();
        for m in &actions {
            let rows: Vec<Vec<u64>> = w
                .chunks(h)
                .map(|row| (0..h).map(|i| (0..h).fold(0, |acc, j| (acc + m[i][j] * row[j]) % p)).collect())
                .collect();
            members.insert(rref_flat(rows, h, p));
        }
        members.insert(w.clone());
        let size = members.len() as u64;
        seen.extend(members);
        if good {
            in_t += size;
            let extension = extend_unchecked(a, &thetas);
            orbits.push(Orbit { representative: classes, forms: thetas, size, extension });
        }
    }
    Ok(OrbitReport {
        parent: a.clone(),
        s,
        dim_h2: h,
        automorphisms: auts.len(),
        subspaces: all.len() as u64,
        in_t_s: in_t,
        orbits,
    })
}

fn write_table(f: &mut fmt::Formatter<'_>, a: &Algebra) -> fmt::Result {
    let file = crate::format::AlgebraFile::from_algebra("", a);
    let lines: Vec<String> = file.to_string().lines().filter(|l| l.contains(" = ")).map(str::to_string).collect();
    write!(f, "{}", lines.join("; "))
}

impl fmt::Display for OrbitReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "field {}, s = {}, dim H2 = {}", self.parent.field(), self.s, self.dim_h2)?;
        writeln!(f, "automorphisms: {}", self.automorphisms)?;
        writeln!(f, "subspaces: {}, in T_s: {}, orbits: {}", self.subspaces, self.in_t_s, self.orbits.len())?;
        for (i, o) in self.orbits.iter().enumerate() {
            let forms: Vec<String> = o.forms.iter().map(ToString::to_string).collect();
            let coords: Vec<String> = o
                .representative
                .iter()
                .map(|c| format!("({})", c.coords.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")))
                .collect();
            writeln!(
                f,
                "orbit {}: size {}, coords <{}>, forms <{}>",
                i + 1,
                o.size,
                coords.join(", "),
                forms.join(", ")
            )?;
            write!(f, "  extension: ")?;
            write_table(f, &o.extension)?;
            writeln!(f)?;
        }
        Ok(())
    }
}

/// The field of a report, for callers that only hold the report.
impl OrbitReport {
    pub fn field(&self) -> FieldSpec {
        self.parent.field()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn b4_03(field: FieldSpec) -> Algebra {
        Algebra::from_int_table(field, 4, &[(1, 1, 1, 2), (2, 1, 1, 3), (3, 1, 1, 4)])
    }

    fn form(text: &str, field: FieldSpec, n: usize) -> BilinearForm {
        BilinearForm::parse(text, field, n).unwrap()
    }

    #[test]
    fn builds_extensions() {
        let spec = ExtensionSpec::new(b4_03(Q), vec![form("D(1,2) + D(4,1)", Q, 4)]).unwrap();
        let b5_06 =
            Algebra::from_int_table(Q, 5, &[(1, 1, 1, 2), (1, 2, 1, 5), (2, 1, 1, 3), (3, 1, 1, 4), (4, 1, 1, 5)]);
        assert_eq!(central_extension(&spec).unwrap(), b5_06);
        assert!(!has_annihilator_component(&spec).unwrap());
        let bad = ExtensionSpec::new(b4_03(Q), vec![form("D(2,2)", Q, 4)]).unwrap();
        assert_eq!(central_extension(&bad), Err(ExtensionError::NotACocycle(1)));
        let b2 = Algebra::from_int_table(Q, 2, &[(1, 1, 1, 2)]);
        let zero = ExtensionSpec::new(b2.clone(), vec![BilinearForm::zero(Q, 2)]).unwrap();
        assert_eq!(has_annihilator_component(&zero), Ok(true));
        let degenerate = ExtensionSpec::new(b4_03(Q), vec![form("D(1,2)", Q, 4)]).unwrap();
        assert_eq!(has_annihilator_component(&degenerate), Err(ExtensionError::AnnihilatorNotTrivial));
        let b3 = ExtensionSpec::new(b2, vec![form("D(2,1)", Q, 2)]).unwrap();
        assert_eq!(central_extension(&b3).unwrap(), Algebra::from_int_table(Q, 3, &[(1, 1, 1, 2), (2, 1, 1, 3)]));
    }

    #[test]
    fn t_s_membership() {
        let space = cohomology(&b4_03(Q)).with_basis(vec![form("D(1,2)", Q, 4), form("D(4,1)", Q, 4)]).unwrap();
        let one = Scalar::one(Q);
        let zero = Scalar::zero(Q);
        let c = |v: Vec<Scalar>| CohomologyClass::new(v);
        assert!(!in_t_s(&space, &[c(vec![one.clone(), zero.clone()])]).unwrap());
        assert!(in_t_s(&space, &[c(vec![one.clone(), one.clone()])]).unwrap());
        assert!(in_t_s(&space, &[c(vec![one.clone(), zero.clone()]), c(vec![one.clone(), zero])]).is_err());
    }

    #[test]
    fn decomposes() {
        let b5_06 =
            Algebra::from_int_table(Q, 5, &[(1, 1, 1, 2), (1, 2, 1, 5), (2, 1, 1, 3), (3, 1, 1, 4), (4, 1, 1, 5)]);
        let d = decompose(&b5_06).unwrap();
        assert_eq!(d.spec.parent, b4_03(Q));
        assert_eq!(d.spec.thetas, vec![form("D(1,2) + D(4,1)", Q, 4)]);
        assert!(d.witness.is_homomorphism() && d.witness.is_invertible());
        assert_eq!(decompose(&Algebra::zero(Q, 0)).unwrap_err(), ExtensionError::ZeroAnnihilator);
    }

    #[test]
    fn counts_subspaces() {
        for (h, s, p) in [(3, 1, 2), (4, 2, 3), (3, 3, 5), (5, 2, 2)] {
            let subs = subspaces(h, s, p);
            assert_eq!(subs.len() as u64, gaussian_binomial(h, s, p));
            assert!(subs.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn orbits_of_b4_03_over_gf2() {
        let f = FieldSpec::prime(2).unwrap();
        let report = enumerate_orbits(&b4_03(f), 1).unwrap();
        assert_eq!(report.subspaces, 3);
        assert_eq!(report.orbits.len(), 2);
        assert_eq!(report.in_t_s, 2);
        let full = enumerate_orbits(&b4_03(f), 2).unwrap();
        assert_eq!(full.orbits.len(), 1);
    }
}
