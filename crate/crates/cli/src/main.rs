use std::collections::HashMap;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use nilext_core::catalog::{self, CatalogError};
use nilext_core::cohom::{cohomology, CohomError};
use nilext_core::extension::{self, ExtensionError, ExtensionSpec};
use nilext_core::format::{AlgebraFile, BindError, FormatError};
use nilext_core::iso::{self, IsoOutcome};
use nilext_core::morphism::{enumerate_automorphisms, MorphismError};
use nilext_core::oracle::{self, EnumerationTask, OracleError, Predicates};
use nilext_core::verify::{self, Scope};
use nilext_core::{Algebra, BilinearForm, FieldSpec, Scalar};
use thiserror::Error;

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Format { path: String, source: FormatError },
    #[error("invalid --set `{0}`, expected name=value")]
    Set(String),
    #[error("--set {name}: {source}")]
    Value { name: String, source: nilext_core::scalar::ScalarError },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Bind(#[from] BindError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Cohom(#[from] CohomError),
    #[error(transparent)]
    Extension(#[from] ExtensionError),
    #[error(transparent)]
    Morphism(#[from] MorphismError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

#[derive(Parser)]
#[command(name = "nilext", version, about = "Nilpotent bicommutative algebras and their central extensions")]
struct Cli {
    /// Worker threads for enumeration (defaults to all cores).
    #[arg(long, global = true, env = "NILEXT_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

/// An algebra file path (`-` for stdin) or a catalog entry name.
#[derive(Args, Clone)]
struct Source {
    source: String,
    /// Read the table over this field: Q or GF(p).
    #[arg(long)]
    field: Option<FieldSpec>,
    /// Bind a parameter, e.g. --set lambda=2.
    #[arg(long = "set", value_name = "NAME=VALUE")]
    set: Vec<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Test the bicommutative, nilpotent and one-generated predicates.
    Check(Source),
    /// Print isomorphism invariants.
    Invariants(Source),
    /// Print bases of Z², B² and representatives of H².
    Cohomology(Source),
    /// Enumerate automorphisms over a prime field.
    Autos {
        #[command(flatten)]
        src: Source,
        /// Print every automorphism matrix.
        #[arg(long)]
        list: bool,
    },
    /// Build the central extension by the given cocycles.
    Extend {
        #[command(flatten)]
        src: Source,
        /// A cocycle such as `D(1,2) + D(4,1)`; repeat for s > 1.
        #[arg(long = "cocycle", required = true)]
        cocycles: Vec<String>,
        /// Name of the resulting algebra.
        #[arg(long, default_value = "extension")]
        name: String,
    },
    /// Aut-orbits on s-dimensional subspaces of H² with trivial common annihilator.
    Orbits {
        #[command(flatten)]
        src: Source,
        #[arg(long = "ext-dim", default_value_t = 1)]
        ext_dim: usize,
    },
    /// Decide isomorphism of two algebras.
    Iso {
        first: String,
        second: String,
        #[arg(long)]
        field: Option<FieldSpec>,
        /// Bindings for the first algebra.
        #[arg(long = "set", value_name = "NAME=VALUE")]
        set: Vec<String>,
        /// Bindings for the second algebra.
        #[arg(long = "set2", value_name = "NAME=VALUE")]
        set2: Vec<String>,
    },
    /// Write an algebra with nonzero annihilator as a central extension.
    Decompose(Source),
    /// Browse the built-in catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Brute-force enumeration of small algebras over GF(p).
    Oracle {
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value = "GF(2)")]
        field: FieldSpec,
        /// Resume from and save progress to this file.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Also compare against the central-extension pipeline.
        #[arg(long)]
        cross_validate: bool,
    },
    /// Run the reproducibility checks.
    VerifyPaper {
        /// Restrict to these scopes; repeat or separate with commas.
        #[arg(long, value_delimiter = ',')]
        scope: Vec<Scope>,
        /// Primes for the distinctness sweep.
        #[arg(long, value_delimiter = ',')]
        primes: Vec<u64>,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List {
        #[arg(long)]
        dim: Option<usize>,
    },
    Show {
        name: String,
    },
    Export {
        name: String,
        #[arg(long, default_value = "Q")]
        field: FieldSpec,
    },
}

fn parse_sets(sets: &[String], field: FieldSpec) -> Result<HashMap<String, Scalar>, CliError> {
    let mut out = HashMap::new();
    for s in sets {
        let (name, value) = s.split_once('=').ok_or_else(|| CliError::Set(s.clone()))?;
        let name = name.trim();
        let value =
            Scalar::parse(field, value.trim()).map_err(|source| CliError::Value { name: name.to_string(), source })?;
        out.insert(name.to_string(), value);
    }
    Ok(out)
}

fn read_source(path: &str) -> Result<String, CliError> {
    let io = |source| CliError::Io { path: path.to_string(), source };
    if path == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).map_err(io)?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

fn load(source: &str, field: Option<FieldSpec>, sets: &[String]) -> Result<(String, Algebra), CliError> {
    if let Ok(entry) = catalog::entry(source) {
        let field = field.unwrap_or(FieldSpec::Rationals);
        let bindings = parse_sets(sets, field)?;
        return Ok((entry.name.clone(), entry.instantiate(field, &bindings)?));
    }
    let text = read_source(source)?;
    let file = AlgebraFile::parse(&text)
        .map_err(|source_err| CliError::Format { path: source.to_string(), source: source_err })?;
    let field = field.unwrap_or(file.field);
    let bindings = parse_sets(sets, field)?;
    Ok((file.name.clone(), file.instantiate_in(field, &bindings)?))
}

fn load_source(src: &Source) -> Result<(String, Algebra), CliError> {
    load(&src.source, src.field, &src.set)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn run(command: Command) -> Result<u8, CliError> {
    match command {
        Command::Check(src) => {
            let (name, a) = load_source(&src)?;
            let violations = a.check_bicommutative();
            let nilpotent = a.is_nilpotent();
            let one_generated = nilpotent && a.is_one_generated().unwrap_or(false);
            println!("{name} over {}", a.field());
            println!("bicommutative  {}", yes_no(violations.is_empty()));
            for v in violations.iter().take(10) {
                println!("  {v}");
            }
            println!("nilpotent      {}", yes_no(nilpotent));
            println!("one-generated  {}", yes_no(one_generated));
            Ok(if violations.is_empty() && nilpotent && one_generated { 0 } else { 1 })
        }
        Command::Invariants(src) => {
            let (name, a) = load_source(&src)?;
            println!("{name} over {}", a.field());
            println!("{}", iso::invariants(&a));
            Ok(0)
        }
        Command::Cohomology(src) => {
            let (name, a) = load_source(&src)?;
            let space = cohomology(&a);
            println!("{name} over {}", a.field());
            println!("dim Z2 = {}, dim B2 = {}, dim H2 = {}", space.dim_z2(), space.dim_b2(), space.dim_h2());
            let print_all = |label: &str, forms: &[BilinearForm]| {
                println!("{label}:");
                for f in forms {
                    println!("  {f}");
                }
            };
            print_all("Z2", &space.z2());
            print_all("B2", &space.b2());
            print_all("H2", space.h2_reps());
            Ok(0)
        }
        Command::Autos { src, list } => {
            let (name, a) = load_source(&src)?;
            let autos = enumerate_automorphisms(&a)?;
            println!("{name} over {}: {} automorphisms", a.field(), autos.len());
            if list {
                for phi in &autos {
                    println!("{phi}");
                }
            }
            Ok(0)
        }
        Command::Extend { src, cocycles, name } => {
            let (_, a) = load_source(&src)?;
            let field = a.field();
            let bindings = parse_sets(&src.set, field)?;
            let thetas = cocycles
                .iter()
                .map(|c| BilinearForm::parse_with(c, field, a.dim(), &bindings))
                .collect::<Result<Vec<_>, _>>()?;
            let spec = ExtensionSpec::new(a, thetas)?;
            let ext = extension::central_extension(&spec)?;
            print!("{}", AlgebraFile::from_algebra(&name, &ext));
            Ok(0)
        }
        Command::Orbits { src, ext_dim } => {
            let (name, a) = load_source(&src)?;
            let report = extension::enumerate_orbits(&a, ext_dim)?;
            println!("{name}");
            println!("{report}");
            Ok(0)
        }
        Command::Iso { first, second, field, set, set2 } => {
            let (n1, a) = load(&first, field, &set)?;
            let (n2, b) = load(&second, field, &set2)?;
            match iso::is_isomorphic(&a, &b)? {
                IsoOutcome::Isomorphic(phi) => {
                    println!("yes: {n1} ~ {n2}");
                    println!("{phi}");
                    Ok(0)
                }
                IsoOutcome::NotIsomorphic(why) => {
                    println!("no: {why}");
                    Ok(1)
                }
                IsoOutcome::Unknown(why) => {
                    println!("unknown: {why}");
                    Ok(3)
                }
            }
        }
        Command::Decompose(src) => {
            let (name, a) = load_source(&src)?;
            let d = extension::decompose(&a)?;
            print!("{}", AlgebraFile::from_algebra(&format!("{name}_parent"), &d.spec.parent));
            for theta in &d.spec.thetas {
                println!("cocycle {theta}");
            }
            println!("witness");
            println!("{}", d.witness);
            Ok(0)
        }
        Command::Catalog { action } => match action {
            CatalogAction::List { dim } => {
                for name in catalog::list_entries(dim) {
                    let e = catalog::entry(name)?;
                    if e.params.is_empty() {
                        println!("{name}");
                    } else {
                        println!("{name}({})", e.params.join(", "));
                    }
                }
                Ok(0)
            }
            CatalogAction::Show { name } => {
                let e = catalog::entry(&name)?;
                print!("{}", e.export(FieldSpec::Rationals));
                if !e.nonzero.is_empty() {
                    let list: Vec<String> = e.nonzero.iter().map(|x| x.to_string()).collect();
                    println!("# nonzero: {}", list.join(", "));
                }
                if let Some(p) = &e.provenance {
                    let binds: Vec<String> = p.parent_bindings.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    let cocycles: Vec<String> = p.cocycles.iter().map(|c| c.to_string()).collect();
                    let parent =
                        if binds.is_empty() { p.parent.clone() } else { format!("{}[{}]", p.parent, binds.join(",")) };
                    println!("# parent: {parent} by {}", cocycles.join("; "));
                }
                Ok(0)
            }
            CatalogAction::Export { name, field } => {
                print!("{}", catalog::entry(&name)?.export(field));
                Ok(0)
            }
        },
        Command::Oracle { dim, field, checkpoint, cross_validate } => {
            if cross_validate {
                let cv = oracle::cross_validate(dim, field)?;
                println!("{cv}");
                return Ok(if cv.passed() { 0 } else { 1 });
            }
            let mut task = EnumerationTask::new(field, dim, Predicates::ALL);
            task.checkpoint = checkpoint;
            let result = oracle::enumerate_bruteforce(&task)?;
            println!(
                "dim {dim} over {field}: {} tables, {} pass, {} classes",
                result.tables,
                result.survivors,
                result.classes.len()
            );
            for (n, class) in result.classes.iter().enumerate() {
                println!("# class {} ({} tables)", n + 1, class.tables);
                print!("{}", AlgebraFile::from_algebra(&format!("C{dim}_{:02}", n + 1), &class.algebra));
            }
            Ok(0)
        }
        Command::VerifyPaper { scope, primes } => {
            let scopes = if scope.is_empty() { Scope::ALL.to_vec() } else { scope };
            let primes = if primes.is_empty() { verify::DEFAULT_PRIMES.to_vec() } else { primes };
            if let Some(&p) = primes.iter().find(|&&p| FieldSpec::prime(p).is_err()) {
                return Err(CliError::Usage(format!("{p} is not a prime")));
            }
            let report = verify::verify_paper(&scopes, &primes);
            println!("{report}");
            Ok(report.exit_code() as u8)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if n == 0 {
            eprintln!("error: --threads must be positive");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().expect("thread pool is built once");
    }
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
