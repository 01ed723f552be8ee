//! Randomized properties shared by the property suite and the acceptance run.
//!
//! Parents are catalog entries at random parameter values, written in a
//! random basis so that nothing depends on the catalog's normal form.

use std::collections::HashMap;

use nilext_core::catalog;
use nilext_core::cohom::{self, cocycle_annihilator, cohomology};
use nilext_core::extension::extend_unchecked;
use nilext_core::iso::{is_isomorphic, IsoOutcome};
use nilext_core::linalg::{self, Subspace};
use nilext_core::morphism::{act_on_form, enumerate_automorphisms};
use nilext_core::{Algebra, BilinearForm, CohomologyClass, FieldSpec, Morphism, Scalar};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub const CASES: u32 = 100;

pub const ALL_FIELDS: &[FieldSpec] =
    &[FieldSpec::Rationals, FieldSpec::Prime(2), FieldSpec::Prime(3), FieldSpec::Prime(5)];
pub const PRIME_FIELDS: &[FieldSpec] = &[FieldSpec::Prime(2), FieldSpec::Prime(3), FieldSpec::Prime(5)];

#[derive(Debug, Clone)]
pub struct Case {
    pub field: FieldSpec,
    pub entry: &'static str,
    pub seed: u64,
}

pub fn cases(fields: &'static [FieldSpec], max_dim: usize) -> impl Strategy<Value = Case> {
    let names: Vec<&'static str> =
        catalog::entries().iter().filter(|e| e.dim <= max_dim).map(|e| e.name.as_str()).collect();
    (prop::sample::select(fields), prop::sample::select(names), any::<u64>()).prop_map(|(field, entry, seed)| Case {
        field,
        entry,
        seed,
    })
}

fn random_matrix(field: FieldSpec, n: usize, rng: &mut StdRng) -> Vec<Vec<Scalar>> {
    (0..n).map(|_| (0..n).map(|_| Scalar::random(field, rng)).collect()).collect()
}

fn random_invertible(field: FieldSpec, n: usize, rng: &mut StdRng) -> (Vec<Vec<Scalar>>, Vec<Vec<Scalar>>) {
    loop {
        let g = random_matrix(field, n, rng);
        if let Some(ginv) = linalg::invert(&g, field) {
            return (g, ginv);
        }
    }
}

/// The algebra `a` in the basis given by the columns of `g`.
pub fn transport(a: &Algebra, g: &[Vec<Scalar>], ginv: &[Vec<Scalar>]) -> Algebra {
    let field = a.field();
    let n = a.dim();
    let cols: Vec<Vec<Scalar>> = linalg::transpose(g);
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let prod = a.multiply(&cols[i], &cols[j]).expect("dimensions match");
            for (k, c) in linalg::mat_vec(ginv, &prod, field).into_iter().enumerate() {
                entries.push((i, j, c, k));
            }
        }
    }
    Algebra::from_entries(field, n, entries).expect("indices in range")
}

pub fn parent(case: &Case, rng: &mut StdRng) -> Algebra {
    let entry = catalog::entry(case.entry).expect("catalog entry");
    let a = (0..100)
        .find_map(|_| {
            let bindings: HashMap<String, Scalar> =
                entry.params.iter().map(|p| (p.clone(), Scalar::random(case.field, rng))).collect();
            entry.instantiate(case.field, &bindings).ok()
        })
        .expect("constraint-valid parameters");
    let (g, ginv) = random_invertible(case.field, a.dim(), rng);
    transport(&a, &g, &ginv)
}

fn random_form(field: FieldSpec, n: usize, rng: &mut StdRng) -> BilinearForm {
    BilinearForm::from_matrix(field, random_matrix(field, n, rng))
}

fn random_combination(field: FieldSpec, basis: &[BilinearForm], n: usize, rng: &mut StdRng) -> BilinearForm {
    basis.iter().fold(BilinearForm::zero(field, n), |acc, b| acc.add(&b.scale(&Scalar::random(field, rng))))
}

fn random_cocycle(a: &Algebra, rng: &mut StdRng) -> BilinearForm {
    random_combination(a.field(), &cohom::cocycle_space(a), a.dim(), rng)
}

/// `s` cocycles whose classes are linearly independent in H².
fn independent_cocycles(a: &Algebra, s: usize, rng: &mut StdRng) -> Vec<BilinearForm> {
    let space = cohomology(a);
    let h = space.dim_h2();
    assert!(s <= h);
    let field = a.field();
    loop {
        let classes: Vec<CohomologyClass> =
            (0..s).map(|_| CohomologyClass::new((0..h).map(|_| Scalar::random(field, rng)).collect())).collect();
        if space.independent(&classes) {
            // shift by random coboundaries so representatives are not the stored ones
            return classes
                .iter()
                .map(|c| {
                    let f: Vec<Scalar> = (0..a.dim()).map(|_| Scalar::random(field, rng)).collect();
                    space.representative(c).add(&cohom::coboundary(a, &f))
                })
                .collect();
        }
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), TestCaseError> {
    if ok {
        Ok(())
    } else {
        Err(TestCaseError::fail(msg()))
    }
}

pub fn b2_in_z2(case: &Case) -> Result<(), TestCaseError> {
    let mut rng = StdRng::seed_from_u64(case.seed);
    let a = parent(case, &mut rng);
    let f: Vec<Scalar> = (0..a.dim()).map(|_| Scalar::random(a.field(), &mut rng)).collect();
    let delta = cohom::coboundary(&a, &f);
    ensure(cohom::is_cocycle(&a, &delta), || format!("coboundary {delta} is not a cocycle"))?;
    let space = cohomology(&a);
    ensure(space.b2_subspace().basis().iter().all(|b| space.z2_subspace().contains(b)), || "B2 basis outside Z2".into())
}

pub fn dim_b2_is_dim_square(case: &Case) -> Result<(), TestCaseError> {
    let mut rng = StdRng::seed_from_u64(case.seed);
    let a = parent(case, &mut rng);
    let space = cohomology(&a);
    ensure(space.dim_b2() == a.square().dim(), || format!("dim B2 {} vs dim A^2 {}", space.dim_b2(), a.square().dim()))
}

pub fn bicommutative_iff_cocycle(case: &Case) -> Result<(), TestCaseError> {
    let mut rng = StdRng::seed_from_u64(case.seed);
    let a = parent(case, &mut rng);
    let theta =
        if rng.gen_bool(0.5) { random_cocycle(&a, &mut rng) } else { random_form(a.field(), a.dim(), &mut rng) };
    let ext = extend_unchecked(&a, std::slice::from_ref(&theta));
    ensure(ext.is_bicommutative() == cohom::is_cocycle(&a, &theta), || format!("disagreement at {theta}"))
}

pub fn annihilator_formula(case: &Case) -> Result<(), TestCaseError> {
    let mut rng = StdRng::seed_from_u64(case.seed);
    let a = parent(case, &mut rng);
    let s = rng.gen_range(1..=2);
    let thetas: Vec<BilinearForm> = (0..s).map(|_| random_cocycle(&a, &mut rng)).collect();
    let ext = extend_unchecked(&a, &thetas);
    let n = a.dim();
    let field = a.field();
    let common = cocycle_annihilator(&thetas, &a).intersect(&a.annihilator());
    let mut vectors: Vec<Vec<Scalar>> = common
        .basis()
        .iter()
        .map(|v| v.iter().cloned().chain(std::iter::repeat_n(Scalar::zero(field), s)).collect())
        .collect();
    vectors.extend((n..n + s).map(|k| linalg::unit_vector(field, n + s, k)));
    let expected = Subspace::span(field, n + s, vectors);
    ensure(ext.annihilator() == expected, || {
        format!("Ann(A_theta) has dim {}, expected {}", ext.annihilator().dim(), expected.dim())
    })
}

fn assert_isomorphic(a: &Algebra, b: &Algebra) -> Result<(), TestCaseError> {
    match is_isomorphic(a, b) {
        Ok(IsoOutcome::Isomorphic(phi)) => {
            ensure(phi.is_homomorphism() && phi.is_invertible(), || "witness is not an isomorphism".into())
        }
        other => Err(TestCaseError::fail(format!("expected isomorphic, got {other:?}"))),
    }
}

pub fn automorphism_action_preserves_class(case: &Case) -> Result<(), TestCaseError> {
    let mut rng = StdRng::seed_from_u64(case.seed);
    let a = parent(case, &mut rng);
    let autos = enumerate_automorphisms(&a).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let phi: &Morphism = &autos[rng.gen_range(0..autos.len())];
    let theta = independent_cocycles(&a, 1, &mut rng).remove(0);
    let moved = act_on_form(phi, &theta).map_err(|e| TestCaseError::fail(e.to_string()))?;
    assert_isomorphic(&extend_unchecked(&a, &[theta]), &extend_unchecked(&a, &[moved]))
}

pub fn coboundary_shift_preserves_class(case: &Case) -> Result<(), TestCaseError> {
    let mut rng = StdRng::seed_from_u64(case.seed);
    let a = parent(case, &mut rng);
    let theta = independent_cocycles(&a, 1, &mut rng).remove(0);
    let f: Vec<Scalar> = (0..a.dim()).map(|_| Scalar::random(a.field(), &mut rng)).collect();
    let shifted = theta.add(&cohom::coboundary(&a, &f));
    assert_isomorphic(&extend_unchecked(&a, &[theta]), &extend_unchecked(&a, &[shifted]))
}

pub fn non_split_is_one_generated(case: &Case) -> Result<(), TestCaseError> {
    let mut rng = StdRng::seed_from_u64(case.seed);
    let a = parent(case, &mut rng);
    let h = cohomology(&a).dim_h2();
    let s = rng.gen_range(1..=h.min(2));
    let thetas = independent_cocycles(&a, s, &mut rng);
    let ext = extend_unchecked(&a, &thetas);
    ensure(ext.is_one_generated() == Ok(true), || format!("extension by {} classes is not one-generated", thetas.len()))
}

pub type Property = fn(&Case) -> Result<(), TestCaseError>;

/// `(name, fields, max parent dim, property)` for every suite.
pub const SUITES: &[(&str, &[FieldSpec], usize, Property)] = &[
    ("B2 in Z2", ALL_FIELDS, 5, b2_in_z2),
    ("dim B2 = dim A^2", ALL_FIELDS, 5, dim_b2_is_dim_square),
    ("A_theta bicommutative iff theta in Z2", ALL_FIELDS, 5, bicommutative_iff_cocycle),
    ("Ann(A_theta) formula", ALL_FIELDS, 5, annihilator_formula),
    ("A_theta ~ A_(phi theta) over GF(p)", PRIME_FIELDS, 4, automorphism_action_preserves_class),
    ("coboundary shift preserves class over GF(p)", PRIME_FIELDS, 4, coboundary_shift_preserves_class),
    ("non-split extensions are one-generated", ALL_FIELDS, 5, non_split_is_one_generated),
];

/// Run one suite with a fixed seed; returns the number of cases on success.
pub fn run_suite(fields: &'static [FieldSpec], max_dim: usize, property: Property) -> Result<u32, String> {
    let config = Config { cases: CASES, failure_persistence: None, ..Config::default() };
    let rng = proptest::test_runner::TestRng::deterministic_rng(config.rng_algorithm);
    let mut runner = TestRunner::new_with_rng(config, rng);
    runner.run(&cases(fields, max_dim), |case| property(&case)).map(|_| CASES).map_err(|e| e.to_string())
}
