//! The one-generated nilpotent bicommutative algebras of dimension 2 to 6,
//! with the cocycles that build each one from a smaller algebra, the second
//! cohomology of the parents and their automorphism families.

mod data;

use std::collections::HashMap;
use std::sync::OnceLock;

use thiserror::Error;

use crate::algebra::Algebra;
use crate::autfamily::AutFamily;
use crate::cohom::{cohomology, BilinearForm, CohomError};
use crate::expr::{Expr, ExprError};
use crate::extension::{central_extension, ExtensionError, ExtensionSpec};
use crate::format::{AlgebraFile, BindError, FormatError};
use crate::linalg::Subspace;
use crate::scalar::{FieldSpec, Scalar};

pub(crate) struct EntryData {
    name: &'static str,
    params: &'static [&'static str],
    nonzero: &'static [&'static str],
    table: &'static str,
    provenance: Option<ProvenanceData>,
}

pub(crate) struct ProvenanceData {
    parent: &'static str,
    parent_bindings: &'static [(&'static str, &'static str)],
    cocycles: &'static [&'static str],
}

pub(crate) struct CohomologyData {
    algebra: &'static str,
    params: &'static [&'static str],
    bindings: &'static [(&'static str, &'static str)],
    nonzero: &'static [&'static str],
    z2: &'static [&'static str],
    b2: &'static [&'static str],
    h2: &'static [&'static str],
}

pub(crate) struct FamilyData {
    pub(crate) algebra: &'static str,
    pub(crate) params: &'static [&'static str],
    pub(crate) bindings: &'static [(&'static str, &'static str)],
    pub(crate) nonzero: &'static [&'static str],
    pub(crate) nablas: &'static [&'static str],
    pub(crate) vars: &'static [&'static str],
    pub(crate) pattern: &'static str,
    pub(crate) alpha: &'static [&'static str],
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("no catalog entry `{0}`")]
    UnknownEntry(String),
    #[error("{name}: constraint {constraint} != 0 violated")]
    Constraint { name: String, constraint: String },
    #[error("{0} has no recorded provenance")]
    NoProvenance(String),
    #[error("{0} has no automorphism family")]
    NoFamily(String),
    #[error("{name}: parameter {param} should be {expected}, got {got}")]
    BindingMismatch { name: String, param: String, expected: String, got: String },
    #[error("{name}: {source}")]
    Bind { name: String, source: BindError },
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Cohom(#[from] CohomError),
    #[error(transparent)]
    Extension(#[from] ExtensionError),
}

/// How an entry arises: `cocycles` are forms on `parent` written in `D(i,j)`
/// and `N(k)`, the latter being the parent's family basis of H².
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub parent: String,
    /// Parent parameters as expressions in the entry's parameters.
    pub parent_bindings: Vec<(String, Expr)>,
    pub cocycles: Vec<Expr>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub dim: usize,
    pub params: Vec<String>,
    /// Expressions that must evaluate to a nonzero value.
    pub nonzero: Vec<Expr>,
    pub file: AlgebraFile,
    pub provenance: Option<Provenance>,
}

fn parse_bindings(pairs: &[(&str, &str)]) -> Vec<(String, Expr)> {
    pairs.iter().map(|(k, v)| (k.to_string(), Expr::parse(v).expect("catalog expression"))).collect()
}

fn parse_exprs(items: &[&str]) -> Vec<Expr> {
    items.iter().map(|e| Expr::parse(e).expect("catalog expression")).collect()
}

/// Check that every expression in `nonzero` evaluates to a nonzero scalar.
pub(crate) fn check_nonzero(
    name: &str,
    nonzero: &[Expr],
    field: FieldSpec,
    bindings: &HashMap<String, Scalar>,
) -> Result<(), CatalogError> {
    for c in nonzero {
        let violated = match c.eval(field, bindings) {
            Ok(v) => v.is_zero(),
            Err(ExprError::Scalar(_)) => true,
            Err(e) => return Err(e.into()),
        };
        if violated {
            return Err(CatalogError::Constraint { name: name.to_string(), constraint: c.to_string() });
        }
    }
    Ok(())
}

/// Evaluate `(param, expr)` pairs under `bindings`.
pub(crate) fn eval_bindings(
    name: &str,
    pairs: &[(String, Expr)],
    field: FieldSpec,
    bindings: &HashMap<String, Scalar>,
) -> Result<HashMap<String, Scalar>, CatalogError> {
    let mut out = HashMap::new();
    for (k, e) in pairs {
        let v = e.eval(field, bindings).map_err(|err| match err {
            ExprError::Scalar(_) => CatalogError::Constraint { name: name.to_string(), constraint: nonzero_hint(e) },
            other => other.into(),
        })?;
        out.insert(k.clone(), v);
    }
    Ok(out)
}

fn nonzero_hint(e: &Expr) -> String {
    format!("denominator of {e}")
}

impl CatalogEntry {
    fn from_data(d: &EntryData) -> CatalogEntry {
        let dim = d.name[1..2].parse().expect("catalog name");
        let mut text = format!("algebra {}\ndim {dim}\nfield Q\n", d.name);
        if !d.params.is_empty() {
            text.push_str(&format!("params {}\n", d.params.join(" ")));
        }
        text.push_str("table\n");
        for line in d.table.split(';') {
            text.push_str(line.trim());
            text.push('\n');
        }
        text.push_str("end\n");
        let file = AlgebraFile::parse(&text).expect("catalog table");
        CatalogEntry {
            name: d.name.to_string(),
            dim,
            params: d.params.iter().map(ToString::to_string).collect(),
            nonzero: parse_exprs(d.nonzero),
            file,
            provenance: d.provenance.as_ref().map(|p| Provenance {
                parent: p.parent.to_string(),
                parent_bindings: parse_bindings(p.parent_bindings),
                cocycles: p
                    .cocycles
                    .iter()
                    .map(|c| Expr::parse_with_symbols(c, &["D", "N"]).expect("catalog cocycle"))
                    .collect(),
            }),
        }
    }

    pub fn check_constraints(&self, field: FieldSpec, bindings: &HashMap<String, Scalar>) -> Result<(), CatalogError> {
        check_nonzero(&self.name, &self.nonzero, field, bindings)
    }

    pub fn instantiate(&self, field: FieldSpec, bindings: &HashMap<String, Scalar>) -> Result<Algebra, CatalogError> {
        if self.params.iter().all(|p| bindings.contains_key(p)) {
            self.check_constraints(field, bindings)?;
        }
        self.file
            .instantiate_in(field, bindings)
            .map_err(|source| CatalogError::Bind { name: self.name.clone(), source })
    }

    /// The entry as an algebra file over `field`.
    pub fn export(&self, field: FieldSpec) -> AlgebraFile {
        AlgebraFile { field, ..self.file.clone() }
    }

    /// `"e1 e1 = e2; ..."` with coefficients as written in the catalog.
    pub fn table_text(&self) -> String {
        let text = self.file.to_string();
        text.lines().skip_while(|l| *l != "table").skip(1).take_while(|l| *l != "end").collect::<Vec<_>>().join("; ")
    }

    /// Parameter points of `sample_bindings` that satisfy the constraints.
    pub fn samples(&self) -> Vec<HashMap<String, Scalar>> {
        sample_bindings(&self.params)
            .into_iter()
            .filter(|b| self.check_constraints(FieldSpec::Rationals, b).is_ok())
            .collect()
    }
}

/// The sample values `0, 1, -1, 2, 1/2` over Q.
pub fn sample_values() -> Vec<Scalar> {
    let q = FieldSpec::Rationals;
    [(0, 1), (1, 1), (-1, 1), (2, 1), (1, 2)]
        .iter()
        .map(|&(n, d)| Scalar::from_ratio(q, n, d).expect("nonzero"))
        .collect()
}

/// Every assignment of sample values to `params`.
pub fn sample_bindings(params: &[String]) -> Vec<HashMap<String, Scalar>> {
    let values = sample_values();
    let mut out = vec![HashMap::new()];
    for p in params {
        out = out
            .into_iter()
            .flat_map(|b| {
                values.iter().map(move |v| {
                    let mut b = b.clone();
                    b.insert(p.clone(), v.clone());
                    b
                })
            })
            .collect();
    }
    out
}

pub fn entries() -> &'static [CatalogEntry] {
    static ENTRIES: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    ENTRIES.get_or_init(|| data::ENTRIES.iter().map(CatalogEntry::from_data).collect())
}

pub fn entry(name: &str) -> Result<&'static CatalogEntry, CatalogError> {
    entries().iter().find(|e| e.name == name).ok_or_else(|| CatalogError::UnknownEntry(name.to_string()))
}

/// Sorted entry names, optionally of one dimension.
pub fn list_entries(dim: Option<usize>) -> Vec<&'static str> {
    let mut names: Vec<&str> =
        entries().iter().filter(|e| dim.is_none_or(|d| e.dim == d)).map(|e| e.name.as_str()).collect();
    names.sort_unstable();
    names
}

pub fn instantiate(name: &str, bindings: &HashMap<String, Scalar>, field: FieldSpec) -> Result<Algebra, CatalogError> {
    entry(name)?.instantiate(field, bindings)
}

pub fn families() -> &'static [AutFamily] {
    static FAMILIES: OnceLock<Vec<AutFamily>> = OnceLock::new();
    FAMILIES.get_or_init(|| data::FAMILIES.iter().map(AutFamily::from_data).collect())
}

/// The automorphism family of the algebra `name`.
pub fn family(name: &str) -> Result<&'static AutFamily, CatalogError> {
    families().iter().find(|f| f.algebra == name).ok_or_else(|| CatalogError::NoFamily(name.to_string()))
}

/// The parent and cocycles of `name` at the given parameters, over `field`.
pub fn provenance_spec(
    name: &str,
    bindings: &HashMap<String, Scalar>,
    field: FieldSpec,
) -> Result<ExtensionSpec, CatalogError> {
    let e = entry(name)?;
    e.check_constraints(field, bindings)?;
    let prov = e.provenance.as_ref().ok_or_else(|| CatalogError::NoProvenance(name.to_string()))?;
    let parent_entry = entry(&prov.parent)?;
    let parent_values = eval_bindings(name, &prov.parent_bindings, field, bindings)?;
    let parent = parent_entry.instantiate(field, &parent_values)?;
    let uses_nablas = prov.cocycles.iter().any(|c| c.symbols().iter().any(|s| s.name == "N"));
    let nablas =
        if uses_nablas { family(&prov.parent)?.nablas_for_algebra(field, &parent_values)? } else { Vec::new() };
    let n = parent.dim();
    let mut thetas = Vec::with_capacity(prov.cocycles.len());
    for c in &prov.cocycles {
        let lin = c.eval_linear(field, bindings)?;
        if !lin.constant.is_zero() {
            return Err(CohomError::Syntax(format!("constant term in {c}")).into());
        }
        let mut theta = BilinearForm::zero(field, n);
        for (sym, coeff) in &lin.terms {
            let term = match (sym.name.as_str(), sym.args.as_slice()) {
                ("D", &[i, j]) if (1..=n).contains(&i) && (1..=n).contains(&j) => {
                    BilinearForm::delta(field, n, i - 1, j - 1)
                }
                ("N", &[k]) if (1..=nablas.len()).contains(&k) => nablas[k - 1].clone(),
                _ => return Err(CohomError::Syntax(format!("bad symbol {sym} in {c}")).into()),
            };
            theta = theta.add(&term.scale(coeff));
        }
        thetas.push(theta);
    }
    Ok(ExtensionSpec::new(parent, thetas)?)
}

/// Whether the central extension recorded for `name` reproduces its table
/// exactly.
pub fn provenance_check(
    name: &str,
    bindings: &HashMap<String, Scalar>,
    field: FieldSpec,
) -> Result<bool, CatalogError> {
    let spec = provenance_spec(name, bindings, field)?;
    let built = central_extension(&spec)?;
    Ok(built == instantiate(name, bindings, field)?)
}

/// Generators of Z², B² and H² of an algebra as given by the tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyTable {
    pub algebra: String,
    pub params: Vec<String>,
    pub bindings: Vec<(String, Expr)>,
    pub nonzero: Vec<Expr>,
    pub z2: Vec<Expr>,
    pub b2: Vec<Expr>,
    pub h2: Vec<Expr>,
}

/// Table dimensions against computed ones, plus whether the spans agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyComparison {
    pub expected: (usize, usize, usize),
    pub computed: (usize, usize, usize),
    pub z2_span: bool,
    pub b2_span: bool,
    /// `Z² = B² + span(h2)` with the table's H² generators independent mod B².
    pub h2_complement: bool,
}

impl CohomologyComparison {
    pub fn passed(&self) -> bool {
        self.expected == self.computed && self.z2_span && self.b2_span && self.h2_complement
    }
}

fn span_of(forms: &[BilinearForm], field: FieldSpec, dim: usize) -> Subspace {
    Subspace::span(field, dim * dim, forms.iter().map(BilinearForm::to_vector))
}

impl CohomologyTable {
    fn from_data(d: &CohomologyData) -> CohomologyTable {
        let forms = |items: &[&str]| -> Vec<Expr> {
            items.iter().map(|e| Expr::parse_with_symbols(e, &["D"]).expect("catalog form")).collect()
        };
        CohomologyTable {
            algebra: d.algebra.to_string(),
            params: d.params.iter().map(ToString::to_string).collect(),
            bindings: parse_bindings(d.bindings),
            nonzero: parse_exprs(d.nonzero),
            z2: forms(d.z2),
            b2: forms(d.b2),
            h2: forms(d.h2),
        }
    }

    pub fn label(&self) -> String {
        if self.bindings.is_empty() {
            return self.algebra.clone();
        }
        let args: Vec<String> = self.bindings.iter().map(|(_, e)| e.to_string()).collect();
        format!("{}({})", self.algebra, args.join(", "))
    }

    pub fn samples(&self) -> Vec<HashMap<String, Scalar>> {
        sample_bindings(&self.params)
            .into_iter()
            .filter(|b| check_nonzero(&self.algebra, &self.nonzero, FieldSpec::Rationals, b).is_ok())
            .collect()
    }

    /// The algebra at table parameters `bindings`.
    pub fn algebra_at(&self, field: FieldSpec, bindings: &HashMap<String, Scalar>) -> Result<Algebra, CatalogError> {
        check_nonzero(&self.algebra, &self.nonzero, field, bindings)?;
        let values = eval_bindings(&self.algebra, &self.bindings, field, bindings)?;
        instantiate(&self.algebra, &values, field)
    }

    pub fn compare(
        &self,
        field: FieldSpec,
        bindings: &HashMap<String, Scalar>,
    ) -> Result<CohomologyComparison, CatalogError> {
        let a = self.algebra_at(field, bindings)?;
        let n = a.dim();
        let forms = |items: &[Expr]| -> Result<Vec<BilinearForm>, CatalogError> {
            items.iter().map(|e| Ok(BilinearForm::parse_with(&e.to_string(), field, n, bindings)?)).collect()
        };
        let (z, b, h) = (forms(&self.z2)?, forms(&self.b2)?, forms(&self.h2)?);
        let space = cohomology(&a);
        let z_span = span_of(&z, field, n);
        let b_span = span_of(&b, field, n);
        let mut bh = b.clone();
        bh.extend(h.iter().cloned());
        let bh_span = span_of(&bh, field, n);
        Ok(CohomologyComparison {
            expected: (z.len(), b.len(), h.len()),
            computed: (space.dim_z2(), space.dim_b2(), space.dim_h2()),
            z2_span: z_span == *space.z2_subspace(),
            b2_span: b_span == *space.b2_subspace(),
            h2_complement: bh_span == *space.z2_subspace() && bh_span.dim() == b_span.dim() + h.len(),
        })
    }
}

pub fn cohomology_tables() -> &'static [CohomologyTable] {
    static TABLES: OnceLock<Vec<CohomologyTable>> = OnceLock::new();
    TABLES.get_or_init(|| data::COHOMOLOGY.iter().map(CohomologyTable::from_data).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::bindings;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn counts() {
        let counts: Vec<usize> = (2..=6).map(|d| list_entries(Some(d)).len()).collect();
        assert_eq!(counts, vec![1, 2, 6, 12, 29]);
        assert_eq!(list_entries(Some(2)), vec!["B2_01"]);
        assert_eq!(list_entries(None).len(), 50);
    }

    #[test]
    fn instantiates() {
        let a = instantiate("B3_02", &bindings([("lambda", Scalar::one(Q))]), Q).unwrap();
        assert_eq!(a, Algebra::from_int_table(Q, 3, &[(1, 1, 1, 2), (1, 2, 1, 3), (2, 1, 1, 3)]));
        let gf5 = FieldSpec::prime(5).unwrap();
        let chain = instantiate("B5_07", &HashMap::new(), gf5).unwrap();
        assert_eq!(chain, Algebra::from_int_table(gf5, 5, &[(1, 1, 1, 2), (2, 1, 1, 3), (3, 1, 1, 4), (4, 1, 1, 5)]));
        let err = instantiate("B6_16", &bindings([("lambda", Scalar::zero(Q))]), Q).unwrap_err();
        assert!(matches!(err, CatalogError::Constraint { .. }));
        assert!(matches!(instantiate("B3_02", &HashMap::new(), Q), Err(CatalogError::Bind { .. })));
        assert!(matches!(instantiate("B9_01", &HashMap::new(), Q), Err(CatalogError::UnknownEntry(_))));
    }

    #[test]
    fn provenance_examples() {
        for name in ["B5_06", "B6_22", "B3_01"] {
            assert!(provenance_check(name, &HashMap::new(), Q).unwrap(), "{name}");
        }
        let spec = provenance_spec("B5_06", &HashMap::new(), Q).unwrap();
        assert_eq!(spec.thetas, vec![BilinearForm::parse("D(1,2) + D(4,1)", Q, 4).unwrap()]);
    }

    #[test]
    fn tables_print_and_parse() {
        let e = entry("B6_16").unwrap();
        assert!(e.table_text().contains("e3 e1 = (1/lambda) e5"));
        let again = AlgebraFile::parse(&e.export(Q).to_string()).unwrap();
        assert_eq!(again, e.file);
    }
}
