//! Parametrized automorphism groups: matrices whose entries are polynomials
//! in free variables, checked against enumerated automorphisms and against
//! the stated action on H².

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use rand::Rng;

use crate::algebra::Algebra;
use crate::catalog::{self, check_nonzero, eval_bindings, CatalogError, FamilyData};
use crate::cohom::{cohomology, BilinearForm, CohomologyClass};
use crate::expr::{Expr, ExprError};
use crate::morphism::{act_on_class, enumerate_automorphisms, Morphism, MorphismError};
use crate::scalar::{FieldSpec, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutFamily {
    pub algebra: String,
    /// Parameters of the family; `bindings` gives the algebra's parameters
    /// in terms of them.
    pub params: Vec<String>,
    pub bindings: Vec<(String, Expr)>,
    pub nonzero: Vec<Expr>,
    /// Basis of H² in which `alpha` is written.
    pub nablas: Vec<Expr>,
    pub vars: Vec<String>,
    /// `pattern[r][c]` is the coefficient of `e_{r+1}` in the image of `e_{c+1}`.
    pub pattern: Vec<Vec<Expr>>,
    /// New coordinates in terms of the old ones `a1, a2, ...`.
    pub alpha: Vec<Expr>,
}

impl AutFamily {
    pub(crate) fn from_data(d: &FamilyData) -> AutFamily {
        let parse = |s: &str| Expr::parse(s).expect("family expression");
        AutFamily {
            algebra: d.algebra.to_string(),
            params: d.params.iter().map(ToString::to_string).collect(),
            bindings: d.bindings.iter().map(|(k, v)| (k.to_string(), parse(v))).collect(),
            nonzero: d.nonzero.iter().map(|s| parse(s)).collect(),
            nablas: d.nablas.iter().map(|s| Expr::parse_with_symbols(s, &["D"]).expect("family form")).collect(),
            vars: d.vars.iter().map(ToString::to_string).collect(),
            pattern: d.pattern.split(';').map(|row| row.split(',').map(|e| parse(e.trim())).collect()).collect(),
            alpha: d.alpha.iter().map(|s| parse(s)).collect(),
        }
    }

    /// E.g. `B5_03(lambda, 1/lambda)`.
    pub fn label(&self) -> String {
        if self.bindings.is_empty() {
            return self.algebra.clone();
        }
        let args: Vec<String> = self.bindings.iter().map(|(_, e)| e.to_string()).collect();
        format!("{}({})", self.algebra, args.join(", "))
    }

    pub fn dim(&self) -> usize {
        self.pattern.len()
    }

    /// Variables that appear on the diagonal and hence must be nonzero.
    pub fn nonzero_vars(&self) -> Vec<String> {
        let mut out: Vec<String> = (0..self.dim()).flat_map(|i| self.pattern[i][i].variables()).collect();
        out.retain(|v| self.vars.contains(v));
        out.sort();
        out.dedup();
        out
    }

    fn algebra_values(
        &self,
        field: FieldSpec,
        params: &HashMap<String, Scalar>,
    ) -> Result<HashMap<String, Scalar>, CatalogError> {
        check_nonzero(&self.algebra, &self.nonzero, field, params)?;
        eval_bindings(&self.algebra, &self.bindings, field, params)
    }

    /// Parameter points of the catalog samples satisfying the constraints.
    pub fn samples(&self) -> Vec<HashMap<String, Scalar>> {
        catalog::sample_bindings(&self.params)
            .into_iter()
            .filter(|b| self.algebra_values(FieldSpec::Rationals, b).is_ok())
            .collect()
    }

    /// Every constraint-valid parameter point over a prime field.
    pub fn finite_samples(&self, field: FieldSpec) -> Vec<HashMap<String, Scalar>> {
        let elements = field.elements().expect("prime field");
        let mut out = vec![HashMap::new()];
        for p in &self.params {
            out = out
                .into_iter()
                .flat_map(|b: HashMap<String, Scalar>| {
                    elements.iter().map(move |v| {
                        let mut b = b.clone();
                        b.insert(p.clone(), v.clone());
                        b
                    })
                })
                .collect();
        }
        out.retain(|b| self.algebra_values(field, b).is_ok());
        out
    }

    pub fn algebra_at(&self, field: FieldSpec, params: &HashMap<String, Scalar>) -> Result<Algebra, CatalogError> {
        catalog::instantiate(&self.algebra, &self.algebra_values(field, params)?, field)
    }

    pub fn nablas_at(
        &self,
        field: FieldSpec,
        params: &HashMap<String, Scalar>,
    ) -> Result<Vec<BilinearForm>, CatalogError> {
        self.algebra_values(field, params)?;
        let n = self.dim();
        self.nablas.iter().map(|e| Ok(BilinearForm::parse_with(&e.to_string(), field, n, params)?)).collect()
    }

    /// The family basis of H² for the algebra at parameters `values`, which
    /// must lie on the family.
    pub fn nablas_for_algebra(
        &self,
        field: FieldSpec,
        values: &HashMap<String, Scalar>,
    ) -> Result<Vec<BilinearForm>, CatalogError> {
        let params: HashMap<String, Scalar> =
            self.params.iter().filter_map(|p| values.get(p).map(|v| (p.clone(), v.clone()))).collect();
        let implied = self.algebra_values(field, &params)?;
        for (k, v) in values {
            match implied.get(k) {
                Some(w) if w == v => {}
                other => {
                    return Err(CatalogError::BindingMismatch {
                        name: self.label(),
                        param: k.clone(),
                        expected: other.map_or_else(|| "unbound".to_string(), ToString::to_string),
                        got: v.to_string(),
                    })
                }
            }
        }
        self.nablas_at(field, &params)
    }

    /// The pattern matrix at parameters `params` and variable values `vars`.
    pub fn matrix_at(
        &self,
        field: FieldSpec,
        params: &HashMap<String, Scalar>,
        vars: &HashMap<String, Scalar>,
    ) -> Result<Vec<Vec<Scalar>>, ExprError> {
        let mut all = params.clone();
        all.extend(vars.iter().map(|(k, v)| (k.clone(), v.clone())));
        self.pattern.iter().map(|row| row.iter().map(|e| e.eval(field, &all)).collect()).collect()
    }

    /// The pattern matrix as a map of the algebra to itself.
    pub fn morphism_at(
        &self,
        field: FieldSpec,
        params: &HashMap<String, Scalar>,
        vars: &HashMap<String, Scalar>,
    ) -> Result<Morphism, CatalogError> {
        let a = self.algebra_at(field, params)?;
        let m = self.matrix_at(field, params, vars)?;
        Morphism::new(a.clone(), a, m).map_err(|e| CatalogError::Extension(e.into()))
    }

    /// Random values of the variables, nonzero where `nonzero_vars` requires.
    pub fn random_vars<R: Rng + ?Sized>(&self, field: FieldSpec, rng: &mut R) -> HashMap<String, Scalar> {
        let nz = self.nonzero_vars();
        self.vars
            .iter()
            .map(|v| {
                let s = if nz.contains(v) { Scalar::random_nonzero(field, rng) } else { Scalar::random(field, rng) };
                (v.clone(), s)
            })
            .collect()
    }

    /// Every assignment of the variables over a prime field.
    pub fn all_vars(&self, field: FieldSpec) -> Vec<HashMap<String, Scalar>> {
        let elements = field.elements().expect("prime field");
        let nz = self.nonzero_vars();
        let mut out = vec![HashMap::new()];
        for v in &self.vars {
            out = out
                .into_iter()
                .flat_map(|b: HashMap<String, Scalar>| {
                    let nonzero = nz.contains(v);
                    elements.iter().filter(move |s| !(nonzero && s.is_zero())).map(move |s| {
                        let mut b = b.clone();
                        b.insert(v.clone(), s.clone());
                        b
                    })
                })
                .collect();
        }
        out
    }

    /// The family with `1` added to its last diagonal entry.
    pub fn corrupted(&self) -> AutFamily {
        let mut out = self.clone();
        let n = self.dim();
        let e = out.pattern[n - 1][n - 1].clone();
        out.pattern[n - 1][n - 1] = Expr::Add(Box::new(e), Box::new(Expr::int(1)));
        out
    }
}

/// Comparison of enumerated automorphisms with pattern instantiations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteComparison {
    pub field: FieldSpec,
    pub params: String,
    pub enumerated: usize,
    /// Distinct invertible pattern matrices.
    pub pattern: usize,
    /// Automorphisms not of the pattern's form.
    pub missing: usize,
    /// Invertible pattern matrices that are not automorphisms.
    pub extra: usize,
}

impl FiniteComparison {
    pub fn passed(&self) -> bool {
        self.missing == 0 && self.extra == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutFamilyReport {
    pub label: String,
    pub rational_samples: usize,
    pub rational_failures: Vec<String>,
    pub finite: Vec<FiniteComparison>,
}

impl AutFamilyReport {
    pub fn passed(&self) -> bool {
        self.rational_failures.is_empty() && self.finite.iter().all(FiniteComparison::passed)
    }
}

fn describe(params: &HashMap<String, Scalar>) -> String {
    let mut items: Vec<String> = params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    items.sort();
    if items.is_empty() {
        "-".to_string()
    } else {
        items.join(",")
    }
}

fn residues(m: &[Vec<Scalar>]) -> Vec<Vec<u64>> {
    m.iter().map(|r| r.iter().map(|c| c.residue().expect("prime field")).collect()).collect()
}

/// Compare the automorphism group of the family's algebra over `field` with
/// the set of invertible pattern matrices, at every parameter point.
pub fn compare_finite(fam: &AutFamily, field: FieldSpec) -> Result<Vec<FiniteComparison>, CatalogError> {
    let mut out = Vec::new();
    for params in fam.finite_samples(field) {
        let a = fam.algebra_at(field, &params)?;
        let enumerated: BTreeSet<Vec<Vec<u64>>> = enumerate_automorphisms(&a)
            .map_err(|e| CatalogError::Extension(e.into()))?
            .iter()
            .map(|m| residues(m.matrix()))
            .collect();
        let mut pattern = BTreeSet::new();
        let mut extra = BTreeSet::new();
        for vars in fam.all_vars(field) {
            let Ok(m) = fam.matrix_at(field, &params, &vars) else { continue };
            let phi = Morphism::new(a.clone(), a.clone(), m).map_err(|e| CatalogError::Extension(e.into()))?;
            if !phi.is_invertible() {
                continue;
            }
            let key = residues(phi.matrix());
            if !phi.is_homomorphism() {
                extra.insert(key.clone());
            }
            pattern.insert(key);
        }
        out.push(FiniteComparison {
            field,
            params: describe(&params),
            enumerated: enumerated.len(),
            pattern: pattern.len(),
            missing: enumerated.difference(&pattern).count(),
            extra: extra.len(),
        });
    }
    Ok(out)
}

/// Check `samples` random rational instantiations at every sampled
/// parameter point, and set equality over GF(2) and GF(3).
pub fn verify_aut_family<R: Rng + ?Sized>(
    fam: &AutFamily,
    samples: usize,
    rng: &mut R,
) -> Result<AutFamilyReport, CatalogError> {
    let q = FieldSpec::Rationals;
    let mut failures = Vec::new();
    let mut count = 0;
    for params in fam.samples() {
        for _ in 0..samples {
            let vars = fam.random_vars(q, rng);
            let phi = fam.morphism_at(q, &params, &vars)?;
            count += 1;
            if !phi.is_invertible() || !phi.is_homomorphism() {
                failures.push(format!("{} at {}", describe(&params), describe(&vars)));
            }
        }
    }
    let mut finite = Vec::new();
    for p in [2, 3] {
        finite.extend(compare_finite(fam, FieldSpec::prime(p).expect("prime"))?);
    }
    Ok(AutFamilyReport { label: fam.label(), rational_samples: count, rational_failures: failures, finite })
}

/// Outcome of comparing the action on H² with the family's formulas.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionReport {
    pub label: String,
    pub samples: usize,
    pub failures: Vec<String>,
}

impl ActionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Apply random pattern automorphisms to random classes in the family's
/// H² basis and compare the new coordinates with `alpha`.
pub fn verify_action<R: Rng + ?Sized>(
    fam: &AutFamily,
    field: FieldSpec,
    samples: usize,
    rng: &mut R,
) -> Result<ActionReport, CatalogError> {
    let mut failures = Vec::new();
    let mut count = 0;
    let points = match field {
        FieldSpec::Rationals => fam.samples(),
        FieldSpec::Prime(_) => fam.finite_samples(field),
    };
    for params in points {
        let a = fam.algebra_at(field, &params)?;
        let space = cohomology(&a).with_basis(fam.nablas_at(field, &params)?)?;
        let mut done = 0;
        let mut attempts = 0;
        while done < samples && attempts < 20 * samples {
            attempts += 1;
            let vars = fam.random_vars(field, rng);
            let phi = fam.morphism_at(field, &params, &vars)?;
            if !phi.is_invertible() {
                continue;
            }
            done += 1;
            count += 1;
            let coords: Vec<Scalar> = (0..fam.nablas.len()).map(|_| Scalar::random(field, rng)).collect();
            let class = CohomologyClass::new(coords.clone());
            let image = match act_on_class(&phi, &space, &class) {
                Ok(c) => c,
                Err(MorphismError::NotAnAutomorphism) => {
                    failures.push(format!("{} at {}: not an automorphism", describe(&params), describe(&vars)));
                    continue;
                }
                Err(e) => return Err(CatalogError::Extension(e.into())),
            };
            let mut env = params.clone();
            env.extend(vars.iter().map(|(k, v)| (k.clone(), v.clone())));
            for (i, c) in coords.iter().enumerate() {
                env.insert(format!("a{}", i + 1), c.clone());
            }
            let expected: Vec<Scalar> = fam.alpha.iter().map(|e| e.eval(field, &env)).collect::<Result<_, _>>()?;
            if expected != image.coords {
                failures.push(format!(
                    "{} at {}, a = {}: expected {}, computed {}",
                    describe(&params),
                    describe(&vars),
                    show(&coords),
                    show(&expected),
                    show(&image.coords)
                ));
            }
        }
    }
    Ok(ActionReport { label: fam.label(), samples: count, failures })
}

fn show(v: &[Scalar]) -> String {
    format!("({})", v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))
}

impl fmt::Display for AutFamilyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: {} rational samples, {} failures",
            self.label,
            self.rational_samples,
            self.rational_failures.len()
        )?;
        for fail in &self.rational_failures {
            writeln!(f, "  not an automorphism: {fail}")?;
        }
        for c in &self.finite {
            writeln!(
                f,
                "  {} [{}]: enumerated {}, pattern {}, missing {}, extra {}",
                c.field, c.params, c.enumerated, c.pattern, c.missing, c.extra
            )?;
        }
        Ok(())
    }
}
