//! Worked cases for every module. Values marked "brute force" are recomputed
//! here by exhaustive search over GF(p) without using the library's algorithms.

use std::collections::{BTreeSet, HashMap};

use nilext_core::catalog;
use nilext_core::cohom::{cocycle_annihilator, cohomology, is_cocycle, CohomologySpace};
use nilext_core::expr::bindings;
use nilext_core::extension::{
    central_extension, decompose, enumerate_orbits, has_annihilator_component, in_t_s, ExtensionSpec,
};
use nilext_core::format::parse_algebra;
use nilext_core::iso::{is_isomorphic, IsoOutcome};
use nilext_core::linalg::{unit_vector, Subspace};
use nilext_core::morphism::{act_on_class, enumerate_automorphisms, extend_generator_image};
use nilext_core::oracle::{cross_validate, enumerate_bruteforce, EnumerationTask, Predicates};
use nilext_core::{Algebra, BilinearForm, CohomologyClass, FieldSpec, Morphism, Scalar};

const Q: FieldSpec = FieldSpec::Rationals;

fn gf(p: u64) -> FieldSpec {
    FieldSpec::Prime(p)
}

fn entry(name: &str, field: FieldSpec) -> Algebra {
    catalog::instantiate(name, &HashMap::new(), field).unwrap()
}

fn entry_at(name: &str, field: FieldSpec, values: &[(&str, i64)]) -> Algebra {
    let b = bindings(values.iter().map(|&(k, v)| (k, Scalar::from_i64(field, v))));
    catalog::instantiate(name, &b, field).unwrap()
}

/// The entry with every parameter set to `v`.
fn entry_all(name: &str, field: FieldSpec, v: i64) -> Algebra {
    let e = catalog::entry(name).unwrap();
    let b = bindings(e.params.iter().map(|p| (p.as_str(), Scalar::from_i64(field, v))));
    catalog::instantiate(name, &b, field).unwrap()
}

fn s(field: FieldSpec, n: i64) -> Scalar {
    Scalar::from_i64(field, n)
}

fn form(text: &str, field: FieldSpec, dim: usize) -> BilinearForm {
    BilinearForm::parse(text, field, dim).unwrap()
}

fn span(field: FieldSpec, n: usize, units: &[usize]) -> Subspace {
    Subspace::span(field, n, units.iter().map(|&i| unit_vector(field, n, i - 1)))
}

// brute-force oracle over GF(p): algebras as raw residue tables

struct Raw {
    p: u64,
    n: usize,
    c: Vec<u64>,
}

impl Raw {
    fn of(a: &Algebra) -> Raw {
        let n = a.dim();
        let p = a.field().modulus().unwrap();
        let mut c = vec![0; n * n * n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    c[(i * n + j) * n + k] = a.coeff(i, j, k).residue().unwrap();
                }
            }
        }
        Raw { p, n, c }
    }

    fn mul(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        let mut out = vec![0; self.n];
        for i in 0..self.n {
            for j in 0..self.n {
                for (k, o) in out.iter_mut().enumerate() {
                    *o = (*o + x[i] * y[j] % self.p * self.c[(i * self.n + j) * self.n + k]) % self.p;
                }
            }
        }
        out
    }

    fn vectors(&self) -> Vec<Vec<u64>> {
        let total = self.p.pow(self.n as u32);
        (0..total)
            .map(|mut idx| {
                (0..self.n)
                    .map(|_| {
                        let d = idx % self.p;
                        idx /= self.p;
                        d
                    })
                    .collect()
            })
            .collect()
    }

    fn rank(&self, rows: &[Vec<u64>]) -> usize {
        let p = self.p;
        let mut m: Vec<Vec<u64>> = rows.to_vec();
        let mut rank = 0;
        for col in 0..self.n {
            let Some(piv) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
                continue;
            };
            m.swap(rank, piv);
            let inv = (1..p).find(|&v| v * m[rank][col] % p == 1).unwrap();
            let pivot_row: Vec<u64> = m[rank].iter().map(|x| x * inv % p).collect();
            for (r, row) in m.iter_mut().enumerate() {
                if r != rank && row[col] != 0 {
                    let f = row[col];
                    for (x, y) in row.iter_mut().zip(&pivot_row) {
                        *x = (*x + p * p - f * y % p) % p;
                    }
                }
            }
            m[rank] = pivot_row;
            rank += 1;
        }
        rank
    }

    /// Dimensions of `A^k`, spanned by all bracketed products of `k` basis vectors.
    fn filtration_dims(&self) -> Vec<usize> {
        let basis: Vec<Vec<u64>> = (0..self.n).map(|i| (0..self.n).map(|k| u64::from(i == k)).collect()).collect();
        let mut words: Vec<Vec<Vec<u64>>> = vec![basis];
        let mut dims = vec![self.n];
        while *dims.last().unwrap() > 0 {
            let k = words.len() + 1;
            let mut next = Vec::new();
            for i in 1..k {
                for x in &words[i - 1] {
                    for y in &words[k - i - 1] {
                        let v = self.mul(x, y);
                        if v.iter().any(|&d| d != 0) {
                            next.push(v);
                        }
                    }
                }
            }
            dims.push(self.rank(&next));
            words.push(next);
        }
        dims
    }

    fn annihilator_size(&self) -> usize {
        let all = self.vectors();
        let basis: Vec<Vec<u64>> = (0..self.n).map(|i| (0..self.n).map(|k| u64::from(i == k)).collect()).collect();
        all.iter()
            .filter(|x| {
                basis.iter().all(|e| self.mul(x, e).iter().all(|&d| d == 0) && self.mul(e, x).iter().all(|&d| d == 0))
            })
            .count()
    }

    /// Automorphisms by checking every matrix.
    fn automorphism_count(&self) -> usize {
        let cols = self.vectors();
        let n = self.n;
        let mut count = 0;
        let mut idx = vec![0usize; n];
        loop {
            let m: Vec<&Vec<u64>> = idx.iter().map(|&i| &cols[i]).collect();
            let rows: Vec<Vec<u64>> = m.iter().map(|c| c.to_vec()).collect();
            if self.rank(&rows) == n {
                let hom = (0..n).all(|i| {
                    (0..n).all(|j| {
                        let lhs = self.mul(m[i], m[j]);
                        let mut rhs = vec![0; n];
                        for k in 0..n {
                            let c = self.c[(i * n + j) * n + k];
                            for (r, v) in rhs.iter_mut().zip(m[k]) {
                                *r = (*r + c * v) % self.p;
                            }
                        }
                        lhs == rhs
                    })
                });
                count += usize::from(hom);
            }
            let mut pos = 0;
            loop {
                if pos == n {
                    return count;
                }
                idx[pos] += 1;
                if idx[pos] < cols.len() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
        }
    }
}

// scalars

#[test]
fn scalar_arithmetic() {
    let half = Scalar::parse(Q, "1/2").unwrap();
    let third = Scalar::parse(Q, "1/3").unwrap();
    assert_eq!((&half + &third).to_string(), "5/6");
    assert_eq!(s(gf(7), 2) * s(gf(7), 4), s(gf(7), 1));
    assert!(s(Q, 1).checked_div(&s(Q, 0)).unwrap_err().to_string().contains("division by zero"));
}

#[test]
fn scalar_roots() {
    assert_eq!(s(Q, 16).nth_root(4), Some(s(Q, 2)));
    assert_eq!(s(Q, 2).nth_root(2), None);
    // brute force: every r in GF(7) with r^2 = 2
    let roots: Vec<u64> = (0..7).filter(|r| r * r % 7 == 2).collect();
    assert_eq!(roots, vec![3, 4]);
    assert_eq!(s(gf(7), 2).nth_root(2), Some(s(gf(7), roots[0] as i64)));
}

// algebra

#[test]
fn products() {
    let b2 = entry("B2_01", Q);
    let e1 = unit_vector(Q, 2, 0);
    assert_eq!(b2.multiply(&e1, &e1).unwrap(), unit_vector(Q, 2, 1));
    let b5 = entry("B5_06", Q);
    assert_eq!(b5.multiply(&unit_vector(Q, 5, 3), &unit_vector(Q, 5, 0)).unwrap(), unit_vector(Q, 5, 4));
    let zero = vec![s(Q, 0); 5];
    assert_eq!(b5.multiply(&zero, &unit_vector(Q, 5, 2)).unwrap(), zero);
}

#[test]
fn bicommutative_checks() {
    assert!(entry_at("B3_02", Q, &[("lambda", 1)]).check_bicommutative().is_empty());
    assert!(Algebra::zero(Q, 4).check_bicommutative().is_empty());
    let a = Algebra::from_int_table(Q, 3, &[(1, 1, 1, 2), (2, 2, 1, 3)]);
    let v = a.check_bicommutative();
    assert!(v.iter().any(|v| v.triple == (1, 0, 0)), "{v:?}");
}

#[test]
fn filtrations_match_brute_force() {
    for name in ["B4_01", "B4_03", "B5_07", "B5_03", "B6_22"] {
        let a = entry_all(name, gf(5), 2);
        let dims: Vec<usize> = a.power_filtration().iter().map(Subspace::dim).collect();
        assert_eq!(dims, Raw::of(&a).filtration_dims(), "{name}");
    }
    let dims: Vec<usize> = entry("B5_07", Q).power_filtration().iter().map(Subspace::dim).collect();
    assert_eq!(dims, vec![5, 4, 3, 2, 1, 0]);
    let dims: Vec<usize> = Algebra::zero(Q, 3).power_filtration().iter().map(Subspace::dim).collect();
    assert_eq!(dims, vec![3, 0]);
}

#[test]
fn nilpotency_and_generation() {
    assert!(entry("B6_22", Q).is_nilpotent());
    assert!(!Algebra::from_int_table(Q, 1, &[(1, 1, 1, 1)]).is_nilpotent());
    assert!(Algebra::zero(Q, 3).is_nilpotent());
    assert_eq!(entry("B4_03", Q).is_one_generated(), Ok(true));
    let b2 = entry("B2_01", Q);
    assert_eq!(b2.direct_sum(&b2).is_one_generated(), Ok(false));
    assert_eq!(Algebra::zero(Q, 1).is_one_generated(), Ok(true));
}

#[test]
fn annihilators() {
    assert_eq!(entry("B2_01", Q).annihilator(), span(Q, 2, &[2]));
    assert_eq!(entry("B4_01", Q).annihilator(), span(Q, 4, &[3, 4]));
    assert_eq!(Algebra::zero(Q, 3).annihilator(), Subspace::full(Q, 3));
    for name in ["B4_01", "B4_02", "B5_02", "B5_10", "B5_03"] {
        let a = entry_all(name, gf(3), 1);
        let size = 3usize.pow(a.annihilator().dim() as u32);
        assert_eq!(size, Raw::of(&a).annihilator_size(), "{name}");
    }
}

#[test]
fn quotients() {
    let b5 = entry("B5_06", gf(5));
    let (q, _) = b5.quotient(&span(gf(5), 5, &[5])).unwrap();
    assert!(matches!(is_isomorphic(&q, &entry("B4_03", gf(5))).unwrap(), IsoOutcome::Isomorphic(_)));
    let a = entry("B4_01", Q);
    assert_eq!(a.quotient(&Subspace::zero(Q, 4)).unwrap().0, a);
    assert_eq!(a.quotient(&Subspace::full(Q, 4)).unwrap().0.dim(), 0);
}

// cohomology

fn forms(field: FieldSpec, dim: usize, list: &[&str]) -> Subspace {
    Subspace::span(field, dim * dim, list.iter().map(|t| form(t, field, dim).to_vector()))
}

#[test]
fn cocycles_and_coboundaries() {
    let a = entry("B4_03", Q);
    let space = cohomology(&a);
    assert_eq!(space.z2_subspace(), &forms(Q, 4, &["D(1,1)", "D(1,2)", "D(2,1)", "D(3,1)", "D(4,1)"]));
    assert_eq!(space.b2_subspace(), &forms(Q, 4, &["D(1,1)", "D(2,1)", "D(3,1)"]));
    let zero = cohomology(&Algebra::zero(Q, 3));
    assert_eq!((zero.dim_z2(), zero.dim_b2(), zero.dim_h2()), (9, 0, 9));
    assert_eq!(cohomology(&entry("B5_01", Q)).dim_z2(), 7);
    assert_eq!(cohomology(&entry("B5_05", Q)).dim_b2(), 4);
    assert_eq!(cohomology(&entry("B4_01", Q)).dim_h2(), 3);
    assert_eq!(cohomology(&entry("B5_07", Q)).dim_h2(), 2);
}

#[test]
fn cocycles_match_brute_force_over_gf2() {
    // every form over GF(2) in dim 3 tested directly against both identities
    for name in ["B3_01", "B3_02"] {
        let a = entry_all(name, gf(2), 1);
        let raw = Raw::of(&a);
        let mut count = 0;
        for bits in 0u32..512 {
            let t = |i: usize, j: usize| u64::from(bits >> (i * 3 + j) & 1);
            let theta = |x: &[u64], y: &[u64]| {
                let mut acc = 0;
                for i in 0..3 {
                    for j in 0..3 {
                        acc += x[i] * y[j] * t(i, j);
                    }
                }
                acc % 2
            };
            let e: Vec<Vec<u64>> = (0..3).map(|i| (0..3).map(|k| u64::from(i == k)).collect()).collect();
            let ok = e.iter().all(|x| {
                e.iter().all(|y| {
                    e.iter().all(|z| {
                        theta(&raw.mul(x, y), z) == theta(&raw.mul(x, z), y)
                            && theta(x, &raw.mul(y, z)) == theta(y, &raw.mul(x, z))
                    })
                })
            });
            count += usize::from(ok);
        }
        assert_eq!(count, 1 << cohomology(&a).dim_z2(), "{name}");
    }
}

#[test]
fn cocycle_annihilators() {
    let a = entry("B4_01", Q);
    assert_eq!(cocycle_annihilator(&[form("D(1,4)", Q, 4)], &a), span(Q, 4, &[2, 3]));
    assert_eq!(cocycle_annihilator(&[BilinearForm::zero(Q, 4)], &a), Subspace::full(Q, 4));
    assert_eq!(cocycle_annihilator(&[form("D(1,4)", Q, 4), form("D(3,1)", Q, 4)], &a), span(Q, 4, &[2]));
}

// morphisms

fn pattern_b4_03(field: FieldSpec, x: i64) -> Morphism {
    let fam = catalog::family("B4_03").unwrap();
    let vars = bindings(fam.vars.iter().map(|v| (v.as_str(), s(field, if v == "x" { x } else { 0 }))));
    fam.morphism_at(field, &HashMap::new(), &vars).unwrap()
}

#[test]
fn homomorphism_checks() {
    assert!(Morphism::identity(&entry("B5_07", Q)).is_homomorphism());
    assert!(pattern_b4_03(Q, 2).is_automorphism());
    let b2 = entry("B2_01", Q);
    let swap = vec![vec![s(Q, 0), s(Q, 1)], vec![s(Q, 1), s(Q, 0)]];
    assert!(!Morphism::new(b2.clone(), b2, swap).unwrap().is_homomorphism());
}

#[test]
fn generator_images() {
    let b3 = entry("B3_01", Q);
    let id = extend_generator_image(&b3, &b3, &unit_vector(Q, 3, 0)).unwrap().unwrap();
    assert_eq!(id, Morphism::identity(&b3));
    let b4 = entry("B4_03", gf(3));
    let v = vec![s(gf(3), 2), s(gf(3), 0), s(gf(3), 0), s(gf(3), 0)];
    assert_eq!(extend_generator_image(&b4, &b4, &v).unwrap().unwrap(), pattern_b4_03(gf(3), 2));
    let b30 = entry_at("B3_02", gf(3), &[("lambda", 0)]);
    let b31 = entry("B3_01", gf(3));
    for idx in 0..27u64 {
        let v: Vec<Scalar> = (0..3).map(|k| s(gf(3), (idx / 3u64.pow(k) % 3) as i64)).collect();
        if let Some(m) = extend_generator_image(&b31, &b30, &v).unwrap() {
            assert!(!m.is_invertible());
        }
    }
}

#[test]
fn automorphism_counts_match_brute_force() {
    assert_eq!(enumerate_automorphisms(&entry("B4_03", gf(3))).unwrap().len(), 2 * 27);
    for (a, p) in [
        (entry("B2_01", gf(2)), 2),
        (entry("B2_01", gf(3)), 3),
        (Algebra::zero(gf(5), 1), 5),
        (entry("B3_01", gf(2)), 2),
    ] {
        let expected = Raw::of(&a).automorphism_count();
        assert_eq!(enumerate_automorphisms(&a).unwrap().len(), expected, "GF({p})");
    }
    assert_eq!(enumerate_automorphisms(&Algebra::zero(gf(5), 1)).unwrap().len(), 4);
}

#[test]
fn action_on_classes() {
    let a = entry("B4_03", Q);
    let space: CohomologySpace = cohomology(&a).with_basis(vec![form("D(1,2)", Q, 4), form("D(4,1)", Q, 4)]).unwrap();
    let phi = pattern_b4_03(Q, 2);
    let c1 = act_on_class(&phi, &space, &space.basis_class(0)).unwrap();
    assert_eq!(c1, CohomologyClass::new(vec![s(Q, 8), s(Q, 0)]));
    let c2 = act_on_class(&phi, &space, &space.basis_class(1)).unwrap();
    assert_eq!(c2, CohomologyClass::new(vec![s(Q, 0), s(Q, 32)]));
    let c = CohomologyClass::new(vec![s(Q, 3), s(Q, -1)]);
    assert_eq!(act_on_class(&Morphism::identity(&a), &space, &c).unwrap(), c);
}

#[test]
fn isomorphism_decisions() {
    let out = is_isomorphic(&entry("B5_06", gf(5)), &entry("B5_07", gf(5))).unwrap();
    assert!(matches!(out, IsoOutcome::NotIsomorphic(_)));
    let b = entry_at("B4_06", Q, &[("lambda", 2)]);
    assert!(matches!(is_isomorphic(&b, &b).unwrap(), IsoOutcome::Isomorphic(_)));
    let x = entry_at("B3_02", gf(7), &[("lambda", 0)]);
    let y = entry_at("B3_02", gf(7), &[("lambda", 1)]);
    assert!(matches!(is_isomorphic(&x, &y).unwrap(), IsoOutcome::NotIsomorphic(_)));
}

// extension

#[test]
fn central_extensions() {
    let spec = ExtensionSpec::new(entry("B4_03", Q), vec![form("D(1,2) + D(4,1)", Q, 4)]).unwrap();
    assert_eq!(central_extension(&spec).unwrap(), entry("B5_06", Q));
    let spec = ExtensionSpec::new(entry("B2_01", Q), vec![form("D(2,1)", Q, 2)]).unwrap();
    assert_eq!(central_extension(&spec).unwrap(), entry("B3_01", Q));
    let split = ExtensionSpec::new(entry("B2_01", Q), vec![BilinearForm::zero(Q, 2)]).unwrap();
    assert_eq!(has_annihilator_component(&split), Ok(true));
}

#[test]
fn t_s_membership() {
    let a = entry("B4_03", Q);
    let space = cohomology(&a).with_basis(vec![form("D(1,2)", Q, 4), form("D(4,1)", Q, 4)]).unwrap();
    let class = |c: &[i64]| CohomologyClass::new(c.iter().map(|&v| s(Q, v)).collect());
    assert!(!in_t_s(&space, &[class(&[1, 0])]).unwrap());
    assert!(in_t_s(&space, &[class(&[1, 1])]).unwrap());
    let b = entry("B4_01", Q);
    let reps = vec![form("D(1,4)", Q, 4), form("D(3,1)", Q, 4), form("D(1,3) + D(2,2) + D(4,1)", Q, 4)];
    let space = cohomology(&b).with_basis(reps).unwrap();
    assert!(in_t_s(&space, &[space.basis_class(0), space.basis_class(1)]).unwrap());
}

#[test]
fn annihilator_components() {
    let a = entry("B4_03", Q);
    let theta = form("D(1,2) + D(4,1)", Q, 4);
    let spec = ExtensionSpec::new(a.clone(), vec![theta.clone()]).unwrap();
    assert_eq!(has_annihilator_component(&spec), Ok(false));
    let shifted = theta.add(&nilext_core::cohom::coboundary(&a, &[s(Q, 1), s(Q, 2), s(Q, 0), s(Q, -1)]));
    let spec = ExtensionSpec::new(a.clone(), vec![theta, shifted]).unwrap();
    assert_eq!(has_annihilator_component(&spec), Ok(true));
    let coboundary = ExtensionSpec::new(a.clone(), vec![form("D(2,1)", Q, 4)]).unwrap();
    assert!(is_cocycle(&a, &coboundary.thetas[0]));
    assert_eq!(has_annihilator_component(&coboundary), Ok(true));
    let degenerate = ExtensionSpec::new(a, vec![form("D(1,2)", Q, 4)]).unwrap();
    assert!(has_annihilator_component(&degenerate).is_err());
}

#[test]
fn decompositions() {
    let d = decompose(&entry("B5_06", Q)).unwrap();
    assert_eq!(d.spec.parent, entry("B4_03", Q));
    let space = cohomology(&d.spec.parent).with_basis(vec![form("D(1,2)", Q, 4), form("D(4,1)", Q, 4)]).unwrap();
    assert_eq!(space.class_of(&d.spec.thetas[0]).unwrap(), CohomologyClass::new(vec![s(Q, 1), s(Q, 1)]));
    assert!(d.witness.is_homomorphism() && d.witness.is_invertible());
    let d = decompose(&entry("B3_01", Q)).unwrap();
    assert_eq!(d.spec.parent, entry("B2_01", Q));
    assert!(cohomology(&d.spec.parent).is_coboundary(&d.spec.thetas[0].add(&form("D(2,1)", Q, 2).scale(&s(Q, -1)))));
    let split = entry("B2_01", Q).direct_sum(&Algebra::zero(Q, 1));
    let d = decompose(&split).unwrap();
    assert_eq!(has_annihilator_component(&d.spec), Ok(true));
}

#[test]
fn orbits_of_b2_01_over_gf3() {
    let report = enumerate_orbits(&entry("B2_01", gf(3)), 1).unwrap();
    let catalog3: Vec<Algebra> = std::iter::once(entry("B3_01", gf(3)))
        .chain((0..3).map(|l| entry_at("B3_02", gf(3), &[("lambda", l)])))
        .collect();
    for orbit in &report.orbits {
        let hits = catalog3
            .iter()
            .filter(|c| matches!(is_isomorphic(&orbit.extension, c).unwrap(), IsoOutcome::Isomorphic(_)))
            .count();
        assert_eq!(hits, 1, "{}", orbit.extension);
    }
    assert_eq!(report.orbits.iter().map(|o| o.size).sum::<u64>(), report.in_t_s);
    let full = enumerate_orbits(&entry("B4_03", gf(3)), 2).unwrap();
    assert!(full.orbits.len() <= 1);
}

// oracle

#[test]
fn brute_force_small_dims() {
    let dim2 = enumerate_bruteforce(&EnumerationTask::new(gf(2), 2, Predicates::ALL)).unwrap();
    assert_eq!(dim2.tables, 256);
    assert_eq!(dim2.classes.len(), 1);
    assert!(matches!(
        is_isomorphic(&dim2.classes[0].algebra, &entry("B2_01", gf(2))).unwrap(),
        IsoOutcome::Isomorphic(_)
    ));
    let nil = Predicates { bicommutative: false, nilpotent: true, one_generated: false };
    assert_eq!(enumerate_bruteforce(&EnumerationTask::new(gf(2), 1, nil)).unwrap().classes.len(), 1);
    for dim in 1..=2 {
        assert!(cross_validate(dim, gf(2)).unwrap().passed());
    }
}

// catalog

#[test]
fn catalog_lookups() {
    let a = entry_at("B3_02", Q, &[("lambda", 1)]);
    assert_eq!(a, Algebra::from_int_table(Q, 3, &[(1, 1, 1, 2), (1, 2, 1, 3), (2, 1, 1, 3)]));
    let chain = entry("B5_07", gf(5));
    assert_eq!(chain, Algebra::from_int_table(gf(5), 5, &[(1, 1, 1, 2), (2, 1, 1, 3), (3, 1, 1, 4), (4, 1, 1, 5)]));
    assert!(catalog::instantiate("B6_16", &bindings([("lambda", s(Q, 0))]), Q).is_err());
    assert_eq!(catalog::list_entries(Some(5)).len(), 12);
    assert_eq!(catalog::list_entries(Some(6)).len(), 29);
    assert_eq!(catalog::list_entries(Some(2)), vec!["B2_01"]);
    assert_eq!(catalog::list_entries(None).len(), 50);
}

#[test]
fn provenance_examples() {
    for name in ["B5_06", "B6_22", "B3_01"] {
        assert!(catalog::provenance_check(name, &HashMap::new(), Q).unwrap(), "{name}");
    }
}

#[test]
fn catalog_round_trip() {
    for e in catalog::entries() {
        let text = e.export(Q).to_string();
        let parsed = nilext_core::format::AlgebraFile::parse(&text).unwrap();
        assert_eq!(parsed.to_string(), text, "{}", e.name);
        for b in e.samples() {
            assert_eq!(parsed.instantiate(&b).unwrap(), e.instantiate(Q, &b).unwrap(), "{}", e.name);
        }
    }
}

// file format

#[test]
fn file_format_cases() {
    let text = "algebra B5_06\ndim 5\ntable\ne1 e1 = e2\ne1 e2 = e5\ne2 e1 = e3\ne3 e1 = e4\ne4 e1 = e5\nend\n";
    assert_eq!(parse_algebra(text).unwrap().1, entry("B5_06", Q));
    let bad = "algebra x\ndim 2\nfield GF(2)\ntable\ne1 e1 = 1/2 e2\nend\n";
    assert!(parse_algebra(bad).unwrap_err().to_string().contains("division by zero"));
    let fam = "algebra f\ndim 3\nparams lambda\ntable\ne1 e1 = e2\ne1 e2 = e3\ne2 e1 = lambda e3\nend\n";
    let file = nilext_core::format::AlgebraFile::parse(fam).unwrap();
    assert_eq!(file.instantiate(&bindings([("lambda", s(Q, 2))])).unwrap(), entry_at("B3_02", Q, &[("lambda", 2)]));
    let dup = "algebra d\ndim 2\ntable\ne1 e1 = e2\ne1 e1 = e2\nend\n";
    assert!(parse_algebra(dup).is_err());
    let names: BTreeSet<&str> = catalog::list_entries(None).into_iter().collect();
    assert!(names.contains("B6_29"));
}
