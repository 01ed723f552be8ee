//! Isomorphism invariants, isomorphism testing and canonical forms.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::Algebra;
use crate::cohom::cohomology;
use crate::fp;
use crate::linalg::{self, Vector};
use crate::morphism::{check_search_space, extend_with_basis, Morphism, MorphismError, WordBasis};
use crate::scalar::{FieldSpec, Scalar};

/// Numerical invariants preserved by isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Invariants {
    pub dim: usize,
    /// `dim A^k` for `k = 1, 2, ...` down to the first zero.
    pub filtration: Vec<usize>,
    pub one_generated: bool,
    pub annihilator: usize,
    pub left_annihilator: usize,
    pub right_annihilator: usize,
    /// `dim A·A²` and `dim A²·A`.
    pub a_a2: usize,
    pub a2_a: usize,
    pub z2: usize,
    pub b2: usize,
    pub h2: usize,
}

pub fn invariants(a: &Algebra) -> Invariants {
    let full = a.full_space();
    let sq = a.square();
    let h = cohomology(a);
    Invariants {
        dim: a.dim(),
        filtration: a.power_filtration().iter().map(|s| s.dim()).collect(),
        one_generated: a.is_one_generated() == Ok(true),
        annihilator: a.annihilator().dim(),
        left_annihilator: a.left_annihilator().dim(),
        right_annihilator: a.right_annihilator().dim(),
        a_a2: a.product_space(&full, &sq).dim(),
        a2_a: a.product_space(&sq, &full).dim(),
        z2: h.dim_z2(),
        b2: h.dim_b2(),
        h2: h.dim_h2(),
    }
}

impl fmt::Display for Invariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let filt: Vec<String> = self.filtration.iter().map(ToString::to_string).collect();
        writeln!(f, "dim                {}", self.dim)?;
        writeln!(f, "power filtration   [{}]", filt.join(", "))?;
        writeln!(f, "one-generated      {}", self.one_generated)?;
        writeln!(f, "dim Ann            {}", self.annihilator)?;
        writeln!(f, "dim left Ann       {}", self.left_annihilator)?;
        writeln!(f, "dim right Ann      {}", self.right_annihilator)?;
        writeln!(f, "dim A(A^2)         {}", self.a_a2)?;
        writeln!(f, "dim (A^2)A         {}", self.a2_a)?;
        write!(f, "dim Z2, B2, H2     {}, {}, {}", self.z2, self.b2, self.h2)
    }
}

#[derive(Debug, Clone)]
pub enum IsoOutcome {
    /// An isomorphism from the first algebra to the second.
    Isomorphic(Morphism),
    NotIsomorphic(String),
    /// The bounded search over the rationals found nothing.
    Unknown(String),
}

/// Candidate generator-image coordinates for the bounded search over Q.
pub fn rational_search_values(n: usize) -> Vec<Scalar> {
    let q = FieldSpec::Rationals;
    let r = |a, b| Scalar::from_ratio(q, a, b).expect("nonzero denominator");
    if n <= 4 {
        vec![r(0, 1), r(1, 1), r(-1, 1), r(2, 1), r(-2, 1), r(1, 2), r(-1, 2)]
    } else {
        vec![r(0, 1), r(1, 1), r(-1, 1), r(2, 1)]
    }
}

/// Decide whether `a` and `b` are isomorphic. Over GF(p) one-generated
/// algebras are decided exactly by exhausting generator images; over Q a
/// bounded search is run and `Unknown` returned when it fails.
pub fn is_isomorphic(a: &Algebra, b: &Algebra) -> Result<IsoOutcome, MorphismError> {
    if a.field() != b.field() {
        return Err(MorphismError::FieldMismatch(a.field(), b.field()));
    }
    let (ia, ib) = (invariants(a), invariants(b));
    if ia != ib {
        return Ok(IsoOutcome::NotIsomorphic(differing_invariant(&ia, &ib)));
    }
    if a == b {
        return Ok(IsoOutcome::Isomorphic(Morphism::identity(a)));
    }
    if !ia.one_generated {
        return Ok(IsoOutcome::Unknown("invariants agree; the search needs one-generated algebras".into()));
    }
    match a.field() {
        FieldSpec::Prime(_) => {
            check_search_space(a.field(), a.dim())?;
            let fa = fp::FpAlgebra::from_algebra(a).expect("checked");
            let fb = fp::FpAlgebra::from_algebra(b).expect("checked");
            Ok(match fp::find_isomorphism(&fa, &fb) {
                Some(m) => {
                    let matrix = fp::to_scalar_matrix(&m, fa.p);
                    IsoOutcome::Isomorphic(Morphism::new(a.clone(), b.clone(), matrix)?)
                }
                None => IsoOutcome::NotIsomorphic("no generator image extends to an isomorphism".into()),
            })
        }
        FieldSpec::Rationals => Ok(rational_search(a, b)),
    }
}

fn rational_search(a: &Algebra, b: &Algebra) -> IsoOutcome {
    let n = a.dim();
    let values = rational_search_values(n);
    let basis = WordBasis::standard(a).expect("one-generated");
    let b_square = b.square();
    let k = values.len() as u64;
    let total = k.pow(n as u32);
    let found = (0..total).into_par_iter().find_map_first(|mut idx| {
        let mut v: Vector = vec![Scalar::zero(FieldSpec::Rationals); n];
        for slot in v.iter_mut().rev() {
            *slot = values[(idx % k) as usize].clone();
            idx /= k;
        }
        if b_square.contains(&v) {
            return None;
        }
        extend_with_basis(&basis, a, b, &v).ok().flatten().filter(Morphism::is_invertible)
    });
    match found {
        Some(m) => IsoOutcome::Isomorphic(m),
        None => IsoOutcome::Unknown(format!(
            "invariants agree and no isomorphism with generator image in {{{}}}^{n}",
            values.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
        )),
    }
}

fn differing_invariant(a: &Invariants, b: &Invariants) -> String {
    let pairs: [(&str, String, String); 11] = [
        ("dimension", a.dim.to_string(), b.dim.to_string()),
        ("power filtration", format!("{:?}", a.filtration), format!("{:?}", b.filtration)),
        ("one-generated", a.one_generated.to_string(), b.one_generated.to_string()),
        ("dim Ann", a.annihilator.to_string(), b.annihilator.to_string()),
        ("dim left Ann", a.left_annihilator.to_string(), b.left_annihilator.to_string()),
        ("dim right Ann", a.right_annihilator.to_string(), b.right_annihilator.to_string()),
        ("dim A(A^2)", a.a_a2.to_string(), b.a_a2.to_string()),
        ("dim (A^2)A", a.a2_a.to_string(), b.a2_a.to_string()),
        ("dim Z2", a.z2.to_string(), b.z2.to_string()),
        ("dim B2", a.b2.to_string(), b.b2.to_string()),
        ("dim H2", a.h2.to_string(), b.h2.to_string()),
    ];
    pairs
        .into_iter()
        .find(|(_, x, y)| x != y)
        .map(|(name, x, y)| format!("{name} differs: {x} vs {y}"))
        .unwrap_or_default()
}

/// The canonical representative of a one-generated algebra over GF(p)
/// together with an isomorphism from `a` onto it.
pub fn canonical_form(a: &Algebra) -> Result<(Algebra, Morphism), MorphismError> {
    check_search_space(a.field(), a.dim())?;
    let fa = fp::FpAlgebra::from_algebra(a).expect("checked");
    let cf = fp::canonical_form(&fa).ok_or(MorphismError::NotOneGenerated)?;
    let n = a.dim();
    let canon = fp::FpAlgebra { p: fa.p, n, sc: cf.table.clone() }.to_algebra();
    let basis = fp::to_scalar_matrix(&cf.basis, fa.p);
    let to_canon = linalg::invert(&basis, a.field()).expect("basis");
    Ok((canon.clone(), Morphism::new(a.clone(), canon, to_canon)?))
}
