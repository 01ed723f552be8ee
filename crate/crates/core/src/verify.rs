//! Reproducible checks of the catalog data: cohomology tables, well-formed
//! tables, extension provenance, automorphism families and their action,
//! distinctness over prime fields and the brute-force cross-validation.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use rand::rngs::StdRng;
use rand::SeedableRng;
use rayon::prelude::*;

use crate::algebra::Algebra;
use crate::autfamily::{verify_action, verify_aut_family};
use crate::catalog::{self, CatalogEntry};
use crate::format::AlgebraFile;
use crate::fp::{self, FpAlgebra};
use crate::morphism::Morphism;
use crate::oracle;
use crate::scalar::{FieldSpec, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
    /// A logged finding that does not affect the outcome.
    Note,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Inconclusive => "INCONCLUSIVE",
            Status::Note => "NOTE",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub status: Status,
    pub name: String,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    fn push(&mut self, status: Status, name: impl Into<String>, detail: impl Into<String>) {
        self.checks.push(Check { status, name: name.into(), detail: detail.into() });
    }

    fn check(&mut self, ok: bool, name: impl Into<String>, detail: impl Into<String>) {
        self.push(if ok { Status::Pass } else { Status::Fail }, name, detail);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn passed(&self) -> bool {
        self.count(Status::Fail) == 0 && self.count(Status::Inconclusive) == 0
    }

    /// 0 if everything passed, 1 on any failure, 3 if only inconclusive.
    pub fn exit_code(&self) -> i32 {
        if self.count(Status::Fail) > 0 {
            1
        } else if self.count(Status::Inconclusive) > 0 {
            3
        } else {
            0
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            if c.detail.is_empty() {
                writeln!(f, "{:<5} {}", c.status.to_string(), c.name)?;
            } else {
                writeln!(f, "{:<5} {}: {}", c.status.to_string(), c.name, c.detail)?;
            }
        }
        write!(
            f,
            "{} checks: {} passed, {} failed, {} inconclusive, {} notes",
            self.checks.len(),
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Inconclusive),
            self.count(Status::Note)
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Scope {
    Cohomology,
    Catalog,
    Provenance,
    AutFamilies,
    Distinctness,
    Oracle,
}

impl Scope {
    pub const ALL: [Scope; 6] =
        [Scope::Cohomology, Scope::Catalog, Scope::Provenance, Scope::AutFamilies, Scope::Distinctness, Scope::Oracle];

    pub fn name(self) -> &'static str {
        match self {
            Scope::Cohomology => "cohomology",
            Scope::Catalog => "catalog",
            Scope::Provenance => "provenance",
            Scope::AutFamilies => "autfamilies",
            Scope::Distinctness => "distinctness",
            Scope::Oracle => "oracle",
        }
    }
}

impl FromStr for Scope {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Scope::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| {
            let names: Vec<&str> = Scope::ALL.iter().map(|x| x.name()).collect();
            format!("unknown scope `{s}`, expected one of {}", names.join(", "))
        })
    }
}

/// Primes used by the distinctness scope when none are given.
pub const DEFAULT_PRIMES: [u64; 2] = [7, 11];

/// Run the given scopes; `primes` applies to the distinctness scope.
pub fn verify_paper(scopes: &[Scope], primes: &[u64]) -> Report {
    let mut report = Report::default();
    for scope in scopes {
        report.extend(match scope {
            Scope::Cohomology => check_cohomology(None),
            Scope::Catalog => check_catalog(),
            Scope::Provenance => check_provenance(),
            Scope::AutFamilies => {
                let mut r = check_aut_families();
                r.extend(check_actions());
                r
            }
            Scope::Distinctness => {
                let mut r = Report::default();
                for &p in primes {
                    r.extend(check_distinctness(p, 5));
                }
                r
            }
            Scope::Oracle => check_oracle(3),
        });
    }
    report
}

pub fn describe(bindings: &HashMap<String, Scalar>) -> String {
    let mut items: Vec<String> = bindings.iter().map(|(k, v)| format!("{k}={v}")).collect();
    items.sort();
    if items.is_empty() {
        String::new()
    } else {
        format!("[{}]", items.join(","))
    }
}

/// Dimensions and spans of Z², B², H² against the tables, over Q at every
/// sampled parameter point; `dim` restricts to algebras of that dimension.
pub fn check_cohomology(dim: Option<usize>) -> Report {
    let q = FieldSpec::Rationals;
    let mut report = Report::default();
    for table in catalog::cohomology_tables() {
        let entry = catalog::entry(&table.algebra).expect("table of a catalog entry");
        if dim.is_some_and(|d| d != entry.dim) {
            continue;
        }
        for b in table.samples() {
            let name = format!("cohomology {}{}", table.label(), describe(&b));
            match table.compare(q, &b) {
                Ok(c) => report.check(
                    c.passed(),
                    name,
                    format!(
                        "expected {:?}, computed {:?}, spans Z2 {} B2 {} H2 {}",
                        c.expected,
                        c.computed,
                        ok(c.z2_span),
                        ok(c.b2_span),
                        ok(c.h2_complement)
                    ),
                ),
                Err(e) => report.push(Status::Fail, name, e.to_string()),
            }
        }
    }
    report
}

fn ok(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "differ"
    }
}

fn predicate_failures(a: &Algebra) -> Vec<&'static str> {
    let mut out = Vec::new();
    if !a.check_bicommutative().is_empty() {
        out.push("not bicommutative");
    }
    if !a.is_nilpotent() {
        out.push("not nilpotent");
    }
    if a.is_one_generated() != Ok(true) {
        out.push("not one-generated");
    }
    out
}

fn entries_of(dims: Option<&[usize]>) -> impl Iterator<Item = &'static CatalogEntry> {
    let dims = dims.map(<[usize]>::to_vec);
    catalog::entries().iter().filter(move |e| dims.as_ref().is_none_or(|d| d.contains(&e.dim)))
}

/// Every entry at every sampled parameter point is bicommutative, nilpotent
/// and one-generated, and its file form round-trips.
pub fn check_catalog() -> Report {
    let q = FieldSpec::Rationals;
    let mut report = Report::default();
    for e in entries_of(None) {
        for b in e.samples() {
            let name = format!("catalog {}{}", e.name, describe(&b));
            match e.instantiate(q, &b) {
                Ok(a) => {
                    let fails = predicate_failures(&a);
                    let good = fails.is_empty() && a.dim() == e.dim;
                    report.check(good, name, if good { String::new() } else { fails.join(", ") });
                }
                Err(err) => report.push(Status::Fail, name, err.to_string()),
            }
        }
        let printed = e.export(q).to_string();
        let round = AlgebraFile::parse(&printed).map(|f| f == e.file).unwrap_or(false);
        report.check(round, format!("round trip {}", e.name), "");
    }
    report
}

/// Entries with provenance are reproduced exactly by their extension.
pub fn check_provenance() -> Report {
    check_provenance_of(None)
}

pub fn check_provenance_of(dims: Option<&[usize]>) -> Report {
    let q = FieldSpec::Rationals;
    let mut report = Report::default();
    for e in entries_of(dims) {
        let Some(prov) = &e.provenance else { continue };
        let cocycles: Vec<String> = prov.cocycles.iter().map(ToString::to_string).collect();
        for b in e.samples() {
            let name = format!("provenance {}{}", e.name, describe(&b));
            let detail = format!("{} with {}", prov.parent, cocycles.join(", "));
            match catalog::provenance_check(&e.name, &b, q) {
                Ok(good) => report.check(good, name, detail),
                Err(err) => report.push(Status::Fail, name, format!("{detail}: {err}")),
            }
        }
    }
    report
}

/// Random rational instances and GF(2), GF(3) set equality for every
/// automorphism family, plus a corrupted family as negative control.
pub fn check_aut_families() -> Report {
    let mut report = Report::default();
    let results: Vec<_> = catalog::families()
        .par_iter()
        .enumerate()
        .map(|(i, fam)| {
            let mut rng = StdRng::seed_from_u64(1000 + i as u64);
            (fam.label(), verify_aut_family(fam, 10, &mut rng))
        })
        .collect();
    for (label, res) in results {
        match res {
            Ok(r) => {
                let bad_q = r.rational_failures.len();
                report.check(
                    bad_q == 0,
                    format!("aut family {label} over Q"),
                    format!("{} samples, {} not automorphisms", r.rational_samples, bad_q),
                );
                for c in &r.finite {
                    report.check(
                        c.passed(),
                        format!("aut family {label} over {} [{}]", c.field, c.params),
                        format!(
                            "enumerated {}, pattern {}, missing {}, extra {}",
                            c.enumerated, c.pattern, c.missing, c.extra
                        ),
                    );
                }
            }
            Err(e) => report.push(Status::Fail, format!("aut family {label}"), e.to_string()),
        }
    }
    let fam = catalog::family("B4_03").expect("family");
    let mut rng = StdRng::seed_from_u64(7);
    let caught = verify_aut_family(&fam.corrupted(), 10, &mut rng).is_ok_and(|r| !r.passed());
    report.check(caught, "aut family negative control", "corrupted B4_03 pattern is rejected");
    report
}

/// Action of sampled family automorphisms on H² against the formulas.
pub fn check_actions() -> Report {
    let mut report = Report::default();
    let results: Vec<_> = catalog::families()
        .par_iter()
        .enumerate()
        .map(|(i, fam)| {
            let mut rng = StdRng::seed_from_u64(2000 + i as u64);
            (fam.label(), verify_action(fam, FieldSpec::Rationals, 10, &mut rng))
        })
        .collect();
    for (label, res) in results {
        match res {
            Ok(r) => {
                let detail = match r.failures.first() {
                    None => format!("{} samples agree", r.samples),
                    Some(first) => format!("{} of {} samples differ, e.g. {first}", r.failures.len(), r.samples),
                };
                report.check(r.passed() && r.samples >= 10, format!("action {label}"), detail);
            }
            Err(e) => report.push(Status::Fail, format!("action {label}"), e.to_string()),
        }
    }
    report
}

/// Every entry of dimension `dim` at every parameter value in GF(p).
pub fn prime_field_instances(p: u64, dim: usize) -> Vec<(String, Algebra)> {
    let field = FieldSpec::Prime(p);
    let elements = field.elements().expect("prime");
    let mut out = Vec::new();
    for e in entries_of(Some(&[dim])) {
        let mut points = vec![HashMap::new()];
        for param in &e.params {
            points = points
                .into_iter()
                .flat_map(|b: HashMap<String, Scalar>| {
                    elements.iter().map(move |v| {
                        let mut b = b.clone();
                        b.insert(param.clone(), v.clone());
                        b
                    })
                })
                .collect();
        }
        for b in points {
            if let Ok(a) = e.instantiate(field, &b) {
                out.push((format!("{}{}", e.name, describe(&b)), a));
            }
        }
    }
    out
}

/// Isomorphism classes among all instances of the entries of dimension
/// `dim` over GF(p). Every coincidence is logged with a verified witness.
pub fn check_distinctness(p: u64, dim: usize) -> Report {
    let mut report = Report::default();
    let field = FieldSpec::Prime(p);
    let instances = prime_field_instances(p, dim);
    let forms: Vec<Option<fp::CanonicalForm>> =
        instances.iter().map(|(_, a)| fp::canonical_form(&FpAlgebra::from_algebra(a).expect("prime field"))).collect();
    let mut classes: BTreeMap<Vec<u64>, Vec<usize>> = BTreeMap::new();
    for (i, f) in forms.iter().enumerate() {
        match f {
            Some(f) => classes.entry(f.table.clone()).or_default().push(i),
            None => report.push(Status::Fail, format!("distinctness {field} {}", instances[i].0), "not one-generated"),
        }
    }
    let mut same_entry = 0;
    let mut cross_entry = 0;
    for members in classes.values().filter(|m| m.len() > 1) {
        let first = members[0];
        let (name0, a0) = &instances[first];
        let b0 = forms[first].as_ref().expect("grouped").basis.clone();
        let b0inv = fp::invert(&b0, p).expect("basis");
        for &other in &members[1..] {
            let (name1, a1) = &instances[other];
            let b1 = &forms[other].as_ref().expect("grouped").basis;
            let m = fp::to_scalar_matrix(&fp::mat_mul(b1, &b0inv, p), p);
            let witness =
                Morphism::new(a0.clone(), a1.clone(), m).is_ok_and(|w| w.is_homomorphism() && w.is_invertible());
            let entry0 = name0.split('[').next().unwrap_or_default();
            let entry1 = name1.split('[').next().unwrap_or_default();
            let kind = if entry0 == entry1 {
                same_entry += 1;
                "parameter coincidence"
            } else {
                cross_entry += 1;
                "coincidence across entries"
            };
            if witness {
                report.push(Status::Note, format!("{kind} {field}"), format!("{name0} ~ {name1}"));
            } else {
                report.push(
                    Status::Fail,
                    format!("{kind} {field}"),
                    format!("{name0} ~ {name1}: witness does not verify"),
                );
            }
        }
    }
    report.check(
        true,
        format!("distinctness {field} dim {dim}"),
        format!(
            "{} instances, {} classes, {} parameter coincidences, {} across entries",
            instances.len(),
            classes.len(),
            same_entry,
            cross_entry
        ),
    );
    report
}

/// Brute force against the extension pipeline over GF(2), dims `1..=max_dim`.
pub fn check_oracle(max_dim: usize) -> Report {
    let mut report = Report::default();
    let f2 = FieldSpec::Prime(2);
    for d in 1..=max_dim {
        match oracle::cross_validate(d, f2) {
            Ok(cv) => report.check(
                cv.passed(),
                format!("oracle {f2} dim {d}"),
                format!(
                    "oracle {} classes, pipeline {} classes, matched {}, unmatched {}/{}",
                    cv.oracle.len(),
                    cv.pipeline.len(),
                    cv.matched.len(),
                    cv.oracle_only.len(),
                    cv.pipeline_only.len()
                ),
            ),
            Err(e) => report.push(Status::Fail, format!("oracle {f2} dim {d}"), e.to_string()),
        }
    }
    report
}
