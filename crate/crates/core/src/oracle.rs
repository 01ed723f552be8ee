//! Brute-force enumeration of all multiplication tables of a tiny algebra
//! over GF(p), deduplicated up to change of basis, and comparison with the
//! classes produced by iterated central extensions.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::PathBuf;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::Algebra;
use crate::extension::{enumerate_orbits, ExtensionError};
use crate::scalar::{FieldSpec, Scalar};

/// Largest number of tables `enumerate_bruteforce` will visit.
pub const TABLE_BOUND: u64 = 1 << 30;
/// Tables per checkpoint.
pub const CHUNK: u64 = 1 << 20;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("oracle needs a prime field")]
    NotPrime,
    #[error("{p}^{exponent} tables exceed the bound 2^30")]
    TooManyTables { p: u64, exponent: usize },
    #[error("dimension {0} is outside 1..=3")]
    Dimension(usize),
    #[error("relabeling is not a permutation of 0..{0}")]
    BadPermutation(usize),
    #[error("checkpoint: {0}")]
    Checkpoint(String),
    #[error(transparent)]
    Extension(#[from] ExtensionError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Predicates {
    pub bicommutative: bool,
    pub nilpotent: bool,
    pub one_generated: bool,
}

impl Predicates {
    pub const ALL: Predicates = Predicates { bicommutative: true, nilpotent: true, one_generated: true };
}

#[derive(Debug, Clone)]
pub struct EnumerationTask {
    pub field: FieldSpec,
    pub dim: usize,
    pub predicates: Predicates,
    /// Read every table in the basis permuted by this map before filtering.
    pub relabel: Option<Vec<usize>>,
    /// Resume from and save progress to this file.
    pub checkpoint: Option<PathBuf>,
}

impl EnumerationTask {
    pub fn new(field: FieldSpec, dim: usize, predicates: Predicates) -> Self {
        EnumerationTask { field, dim, predicates, relabel: None, checkpoint: None }
    }

    fn prime(&self) -> Result<u64, OracleError> {
        self.field.modulus().ok_or(OracleError::NotPrime)
    }

    /// Number of tables, `p^(n^3)`.
    pub fn table_count(&self) -> Result<u64, OracleError> {
        let p = self.prime()?;
        if !(1..=3).contains(&self.dim) {
            return Err(OracleError::Dimension(self.dim));
        }
        let exponent = self.dim.pow(3);
        p.checked_pow(exponent as u32).filter(|&c| c <= TABLE_BOUND).ok_or(OracleError::TooManyTables { p, exponent })
    }
}

/// Structure constants as digits, `digits[(i*n + j)*n + k] = c_ij^k`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Table {
    pub p: u64,
    pub n: usize,
    pub digits: Vec<u8>,
}

impl Table {
    pub fn from_index(p: u64, n: usize, mut index: u64) -> Table {
        let mut digits = vec![0u8; n * n * n];
        for d in &mut digits {
            *d = (index % p) as u8;
            index /= p;
        }
        Table { p, n, digits }
    }

    pub fn index(&self) -> u64 {
        self.digits.iter().rev().fold(0, |acc, &d| acc * self.p + d as u64)
    }

    pub fn from_algebra(a: &Algebra) -> Option<Table> {
        let p = a.field().modulus()?;
        let n = a.dim();
        let mut digits = vec![0u8; n * n * n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    digits[(i * n + j) * n + k] = a.coeff(i, j, k).residue()? as u8;
                }
            }
        }
        Some(Table { p, n, digits })
    }

    pub fn to_algebra(&self) -> Algebra {
        let field = FieldSpec::Prime(self.p);
        let n = self.n;
        let mut entries = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let d = self.digits[(i * n + j) * n + k];
                    if d != 0 {
                        entries.push((i, j, Scalar::from_i64(field, d as i64), k));
                    }
                }
            }
        }
        Algebra::from_entries(field, n, entries).expect("indices in range")
    }

    fn product(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        let (n, p) = (self.n, self.p);
        let mut out = vec![0u64; n];
        for i in 0..n {
            if x[i] == 0 {
                continue;
            }
            for j in 0..n {
                let c = x[i] * y[j] % p;
                if c == 0 {
                    continue;
                }
                for (k, o) in out.iter_mut().enumerate() {
                    *o = (*o + c * self.digits[(i * n + j) * n + k] as u64) % p;
                }
            }
        }
        out
    }

    /// The table in the basis `g e_1, ..., g e_n` (columns of `g`), where
    /// `ginv` is the inverse of `g`.
    pub fn transform(&self, g: &[Vec<u64>], ginv: &[Vec<u64>]) -> Table {
        let (n, p) = (self.n, self.p);
        let col = |i: usize| -> Vec<u64> { (0..n).map(|r| g[r][i]).collect() };
        let mut digits = vec![0u8; n * n * n];
        for i in 0..n {
            for j in 0..n {
                let prod = self.product(&col(i), &col(j));
                for k in 0..n {
                    let v = (0..n).fold(0, |acc, r| (acc + ginv[k][r] * prod[r]) % p);
                    digits[(i * n + j) * n + k] = v as u8;
                }
            }
        }
        Table { p, n, digits }
    }

    pub fn relabel(&self, perm: &[usize]) -> Table {
        let n = self.n;
        let mut digits = vec![0u8; n * n * n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    digits[(perm[i] * n + perm[j]) * n + perm[k]] = self.digits[(i * n + j) * n + k];
                }
            }
        }
        Table { p: self.p, n, digits }
    }
}

/// A matrix over GF(p) paired with its inverse.
pub type MatrixPair = (Vec<Vec<u64>>, Vec<Vec<u64>>);

/// All invertible `n x n` matrices over GF(p), each with its inverse.
pub fn general_linear_group(p: u64, n: usize) -> Vec<MatrixPair> {
    let total = p.pow((n * n) as u32);
    (0..total)
        .filter_map(|mut idx| {
            let mut m = vec![vec![0u64; n]; n];
            for row in m.iter_mut() {
                for x in row.iter_mut() {
                    *x = idx % p;
                    idx /= p;
                }
            }
            crate::fp::invert(&m, p).map(|inv| (m, inv))
        })
        .collect()
}

/// The least table index over all changes of basis.
pub fn canonical_index(t: &Table, group: &[MatrixPair]) -> u64 {
    group.iter().map(|(g, ginv)| t.transform(g, ginv).index()).min().expect("group contains the identity")
}

/// Predicate check on GF(2) tables of dimension at most 3, with vectors and
/// subspaces as bit sets.
fn passes_gf2(t: u64, n: usize, pred: Predicates) -> bool {
    let mask = (1u64 << n) - 1;
    let c = |i: usize, j: usize| ((t >> ((i * n + j) * n)) & mask) as u8;
    let mul = |x: u8, y: u8| -> u8 {
        let mut r = 0;
        for i in 0..n {
            if x >> i & 1 == 1 {
                for j in 0..n {
                    if y >> j & 1 == 1 {
                        r ^= c(i, j);
                    }
                }
            }
        }
        r
    };
    // subspace of GF(2)^n as the set of its members, bit v for vector v
    let span = |vs: &mut dyn Iterator<Item = u8>| -> u8 {
        let mut set: u8 = 1;
        for v in vs {
            if set >> v & 1 == 0 {
                let mut shifted = 0u8;
                for s in 0..(1u8 << n) {
                    if set >> s & 1 == 1 {
                        shifted |= 1 << (s ^ v);
                    }
                }
                set |= shifted;
            }
        }
        set
    };
    let members = |set: u8| (0..(1u8 << n)).filter(move |v| set >> v & 1 == 1);
    let product = |s: u8, u: u8| span(&mut members(s).flat_map(|x| members(u).map(move |y| mul(x, y))));
    let full: u8 = if n == 3 { 0xff } else { ((1u16 << (1 << n)) - 1) as u8 };
    if pred.one_generated {
        let sq = span(&mut (0..n).flat_map(|i| (0..n).map(move |j| c(i, j))));
        if sq.count_ones() != 1 << (n - 1) {
            return false;
        }
    }
    if pred.bicommutative {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (ei, ej, ek) = (1u8 << i, 1u8 << j, 1u8 << k);
                    if mul(mul(ei, ej), ek) != mul(mul(ei, ek), ej) || mul(ei, mul(ej, ek)) != mul(ej, mul(ei, ek)) {
                        return false;
                    }
                }
            }
        }
    }
    if pred.nilpotent {
        let mut powers = vec![0u8, full];
        for k in 2..=n + 1 {
            let mut s = 1u8;
            for a in 1..k {
                let pr = product(powers[a], powers[k - a]);
                s = span(&mut members(s).chain(members(pr)));
            }
            powers.push(s);
        }
        if powers[n + 1] != 1 {
            return false;
        }
    }
    true
}

fn passes_generic(t: &Table, pred: Predicates) -> bool {
    let a = t.to_algebra();
    (!pred.one_generated || a.is_one_generated() == Ok(true))
        && (!pred.bicommutative || a.check_bicommutative().is_empty())
        && (!pred.nilpotent || a.is_nilpotent())
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct Checkpoint {
    p: u64,
    n: usize,
    predicates: Predicates,
    relabel: Option<Vec<usize>>,
    next: u64,
    survivors: Vec<u64>,
}

/// One isomorphism class found by brute force.
#[derive(Debug, Clone)]
pub struct OracleClass {
    /// The least table index in the class.
    pub canonical: u64,
    pub algebra: Algebra,
    /// Filtered tables in the class.
    pub tables: u64,
}

#[derive(Debug, Clone)]
pub struct EnumerationResult {
    pub tables: u64,
    pub survivors: u64,
    pub classes: Vec<OracleClass>,
}

/// Enumerate every table, keep those passing the predicates and return one
/// representative (the least table index) per isomorphism class.
pub fn enumerate_bruteforce(task: &EnumerationTask) -> Result<EnumerationResult, OracleError> {
    let total = task.table_count()?;
    let p = task.prime()?;
    let n = task.dim;
    if let Some(perm) = &task.relabel {
        let sorted: BTreeSet<usize> = perm.iter().copied().collect();
        if perm.len() != n || sorted != (0..n).collect() {
            return Err(OracleError::BadPermutation(n));
        }
    }
    let mut state =
        Checkpoint { p, n, predicates: task.predicates, relabel: task.relabel.clone(), next: 0, survivors: Vec::new() };
    if let Some(path) = &task.checkpoint {
        if path.exists() {
            let text = std::fs::read_to_string(path).map_err(|e| OracleError::Checkpoint(e.to_string()))?;
            let saved: Checkpoint = serde_json::from_str(&text).map_err(|e| OracleError::Checkpoint(e.to_string()))?;
            if saved.p != p || saved.n != n || saved.predicates != task.predicates || saved.relabel != task.relabel {
                return Err(OracleError::Checkpoint(format!("{} belongs to another task", path.display())));
            }
            state = saved;
        }
    }
    let check = |idx: u64| -> Option<u64> {
        let mut t = Table::from_index(p, n, idx);
        if let Some(perm) = &task.relabel {
            t = t.relabel(perm);
        }
        let ok = if p == 2 { passes_gf2(t.index(), n, task.predicates) } else { passes_generic(&t, task.predicates) };
        ok.then(|| t.index())
    };
    let batch = CHUNK * rayon::current_num_threads().max(1) as u64;
    while state.next < total {
        let end = (state.next + batch).min(total);
        let starts: Vec<u64> = (state.next..end).step_by(CHUNK as usize).collect();
        let found: Vec<Vec<u64>> =
            starts.into_par_iter().map(|start| (start..(start + CHUNK).min(end)).filter_map(check).collect()).collect();
        state.survivors.extend(found.into_iter().flatten());
        state.next = end;
        if let Some(path) = &task.checkpoint {
            let text = serde_json::to_string(&state).map_err(|e| OracleError::Checkpoint(e.to_string()))?;
            std::fs::write(path, text).map_err(|e| OracleError::Checkpoint(e.to_string()))?;
        }
    }
    let group = general_linear_group(p, n);
    let canon: Vec<u64> =
        state.survivors.par_iter().map(|&idx| canonical_index(&Table::from_index(p, n, idx), &group)).collect();
    let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
    for c in canon {
        *counts.entry(c).or_default() += 1;
    }
    let classes = counts
        .into_iter()
        .map(|(canonical, tables)| OracleClass {
            canonical,
            algebra: Table::from_index(p, n, canonical).to_algebra(),
            tables,
        })
        .collect();
    Ok(EnumerationResult { tables: total, survivors: state.survivors.len() as u64, classes })
}

/// A class produced by the extension pipeline.
#[derive(Debug, Clone)]
pub struct PipelineClass {
    pub canonical: u64,
    pub algebra: Algebra,
    /// How it was built, e.g. `dim 2 #1, s = 1, orbit 2`.
    pub origin: String,
}

/// One-generated nilpotent bicommutative algebras of dimension `1..=max_dim`
/// over `field`, built from the one-dimensional zero algebra by taking, for
/// every smaller class and every `s`, the orbit representatives of `T_s`.
pub fn pipeline_classes(field: FieldSpec, max_dim: usize) -> Result<BTreeMap<usize, Vec<PipelineClass>>, OracleError> {
    let p = field.modulus().ok_or(OracleError::NotPrime)?;
    let mut by_dim: BTreeMap<usize, Vec<PipelineClass>> = BTreeMap::new();
    let zero = Algebra::zero(field, 1);
    let group1 = general_linear_group(p, 1);
    by_dim.insert(
        1,
        vec![PipelineClass {
            canonical: canonical_index(&Table::from_algebra(&zero).expect("prime field"), &group1),
            algebra: zero,
            origin: "zero algebra".into(),
        }],
    );
    for d in 2..=max_dim {
        let group = general_linear_group(p, d);
        let mut found = Vec::new();
        for m in 1..d {
            let s = d - m;
            for (pi, parent) in by_dim[&m].iter().enumerate() {
                let h = crate::cohom::cohomology(&parent.algebra).dim_h2();
                if s > h {
                    continue;
                }
                let report = enumerate_orbits(&parent.algebra, s)?;
                for (oi, orbit) in report.orbits.iter().enumerate() {
                    let t = Table::from_algebra(&orbit.extension).expect("prime field");
                    found.push(PipelineClass {
                        canonical: canonical_index(&t, &group),
                        algebra: orbit.extension.clone(),
                        origin: format!("dim {m} #{}, s = {s}, orbit {}", pi + 1, oi + 1),
                    });
                }
            }
        }
        found.sort_by_key(|c| c.canonical);
        by_dim.insert(d, found);
    }
    Ok(by_dim)
}

#[derive(Debug, Clone)]
pub struct CrossValidation {
    pub field: FieldSpec,
    pub dim: usize,
    pub oracle: Vec<OracleClass>,
    pub pipeline: Vec<PipelineClass>,
    /// Canonical indices found on both sides.
    pub matched: Vec<u64>,
    pub oracle_only: Vec<u64>,
    pub pipeline_only: Vec<u64>,
    /// Canonical indices produced by more than one orbit.
    pub pipeline_duplicates: Vec<u64>,
}

impl CrossValidation {
    pub fn passed(&self) -> bool {
        self.oracle_only.is_empty() && self.pipeline_only.is_empty() && self.pipeline_duplicates.is_empty()
    }
}

/// Compare brute force with the extension pipeline in dimension `dim`.
pub fn cross_validate(dim: usize, field: FieldSpec) -> Result<CrossValidation, OracleError> {
    let task = EnumerationTask::new(field, dim, Predicates::ALL);
    let oracle = enumerate_bruteforce(&task)?.classes;
    let pipeline = pipeline_classes(field, dim)?.remove(&dim).unwrap_or_default();
    let o: BTreeSet<u64> = oracle.iter().map(|c| c.canonical).collect();
    let mut seen = BTreeSet::new();
    let mut duplicates = BTreeSet::new();
    for c in &pipeline {
        if !seen.insert(c.canonical) {
            duplicates.insert(c.canonical);
        }
    }
    Ok(CrossValidation {
        field,
        dim,
        matched: o.intersection(&seen).copied().collect(),
        oracle_only: o.difference(&seen).copied().collect(),
        pipeline_only: seen.difference(&o).copied().collect(),
        pipeline_duplicates: duplicates.into_iter().collect(),
        oracle,
        pipeline,
    })
}

fn table_text(a: &Algebra) -> String {
    let file = crate::format::AlgebraFile::from_algebra("", a);
    let lines: Vec<String> = file.to_string().lines().filter(|l| l.contains(" = ")).map(str::to_string).collect();
    if lines.is_empty() {
        "zero".into()
    } else {
        lines.join("; ")
    }
}

impl fmt::Display for CrossValidation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "dim {} over {}: oracle {} classes, pipeline {} classes, matched {}",
            self.dim,
            self.field,
            self.oracle.len(),
            self.pipeline.len(),
            self.matched.len()
        )?;
        for c in &self.oracle {
            let origin =
                self.pipeline.iter().find(|q| q.canonical == c.canonical).map_or("UNMATCHED", |q| q.origin.as_str());
            writeln!(f, "  [{}] {} tables: {}  <- {}", c.canonical, c.tables, table_text(&c.algebra), origin)?;
        }
        for q in self.pipeline.iter().filter(|q| self.pipeline_only.contains(&q.canonical)) {
            writeln!(f, "  pipeline only [{}]: {}  <- {}", q.canonical, table_text(&q.algebra), q.origin)?;
        }
        for d in &self.pipeline_duplicates {
            writeln!(f, "  pipeline duplicate [{d}]")?;
        }
        write!(f, "  {}", if self.passed() { "match" } else { "MISMATCH" })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    #[test]
    fn small_enumerations() {
        let nil = Predicates { bicommutative: false, nilpotent: true, one_generated: false };
        let r = enumerate_bruteforce(&EnumerationTask::new(gf(2), 1, nil)).unwrap();
        assert_eq!(r.classes.len(), 1);
        let r = enumerate_bruteforce(&EnumerationTask::new(gf(2), 2, Predicates::ALL)).unwrap();
        assert_eq!(r.tables, 256);
        assert_eq!(r.classes.len(), 1);
        assert_eq!(r.classes[0].algebra.dim(), 2);
        assert!(enumerate_bruteforce(&EnumerationTask::new(gf(3), 3, Predicates::ALL)).is_err());
    }

    #[test]
    fn gf2_fast_path_agrees_with_generic() {
        for n in 1..=2 {
            for idx in 0..2u64.pow((n * n * n) as u32) {
                for pred in [
                    Predicates::ALL,
                    Predicates { bicommutative: true, nilpotent: false, one_generated: false },
                    Predicates { bicommutative: false, nilpotent: true, one_generated: false },
                ] {
                    let t = Table::from_index(2, n, idx);
                    assert_eq!(passes_gf2(idx, n, pred), passes_generic(&t, pred), "n={n} idx={idx}");
                }
            }
        }
    }

    #[test]
    fn table_index_round_trips() {
        let t = Table::from_index(3, 2, 4321);
        assert_eq!(t.index(), 4321);
        assert_eq!(Table::from_algebra(&t.to_algebra()).unwrap(), t);
        assert_eq!(general_linear_group(2, 3).len(), 168);
        assert_eq!(general_linear_group(3, 2).len(), 48);
    }

    #[test]
    fn cross_validation_small() {
        for d in 1..=2 {
            let cv = cross_validate(d, gf(2)).unwrap();
            assert!(cv.passed(), "{cv}");
            assert_eq!(cv.matched.len(), 1);
        }
        let cv = cross_validate(2, gf(3)).unwrap();
        assert!(cv.passed(), "{cv}");
    }

    #[test]
    fn relabeling_preserves_classes() {
        let mut task = EnumerationTask::new(gf(3), 2, Predicates::ALL);
        let a: Vec<u64> = enumerate_bruteforce(&task).unwrap().classes.iter().map(|c| c.canonical).collect();
        task.relabel = Some(vec![1, 0]);
        let b: Vec<u64> = enumerate_bruteforce(&task).unwrap().classes.iter().map(|c| c.canonical).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn checkpoints_resume() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("ck.json");
        let mut task = EnumerationTask::new(gf(3), 2, Predicates::ALL);
        task.checkpoint = Some(path.clone());
        let first = enumerate_bruteforce(&task).unwrap();
        assert!(path.exists());
        let again = enumerate_bruteforce(&task).unwrap();
        assert_eq!(first.survivors, again.survivors);
        let mut other = task.clone();
        other.dim = 1;
        assert!(matches!(enumerate_bruteforce(&other), Err(OracleError::Checkpoint(_))));
    }
}
