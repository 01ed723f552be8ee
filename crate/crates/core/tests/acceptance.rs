//! One line per acceptance criterion. Known failures are pinned by check
//! name: the run fails if a pinned check starts passing or any other check
//! fails, so the printed FAIL lines are stable and nothing regresses silently.

mod props;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use nilext_core::verify::{self, Report, Status};

const COHOMOLOGY_5_KNOWN: &[&str] = &["cohomology B5_04(lambda)[lambda=0]"];

const AUT_FAMILIES_KNOWN: &[&str] = &[
    "aut family B4_06(lambda) over GF(2) [lambda=0]",
    "aut family B4_06(lambda) over GF(2) [lambda=1]",
    "aut family B4_06(lambda) over GF(3) [lambda=0]",
    "aut family B4_06(lambda) over GF(3) [lambda=1]",
    "aut family B5_06 over GF(3) [-]",
    "aut family B5_09 over GF(2) [-]",
    "aut family B5_10(lambda) over GF(2) [lambda=0]",
    "aut family B5_10(lambda) over GF(2) [lambda=1]",
    "aut family B5_10(lambda) over GF(3) [lambda=0]",
    "aut family B5_10(lambda) over GF(3) [lambda=1]",
    "aut family B5_11 over GF(3) [-]",
    "aut family B5_12 over GF(3) [-]",
];

struct Outcome {
    passed: bool,
    /// Whether the result matches the pinned expectation.
    expected: bool,
    detail: String,
}

fn from_report(report: &Report, known: &[&str]) -> Outcome {
    let failing: BTreeSet<&str> = report
        .checks
        .iter()
        .filter(|c| c.status != Status::Pass && c.status != Status::Note)
        .map(|c| c.name.as_str())
        .collect();
    let known: BTreeSet<&str> = known.iter().copied().collect();
    let notes = report.count(Status::Note);
    let mut detail = format!("{} checks, {} failed", report.checks.len(), failing.len());
    if notes > 0 {
        detail.push_str(&format!(", {notes} notes"));
    }
    let unexpected: Vec<&str> = failing.difference(&known).copied().collect();
    let fixed: Vec<&str> = known.difference(&failing).copied().collect();
    if !unexpected.is_empty() {
        detail.push_str(&format!("; unexpected: {}", unexpected.join(" | ")));
    }
    if !fixed.is_empty() {
        detail.push_str(&format!("; pinned failure now passes: {}", fixed.join(" | ")));
    }
    if !known.is_empty() && unexpected.is_empty() && fixed.is_empty() {
        detail.push_str("; all failures pinned");
    }
    Outcome { passed: failing.is_empty(), expected: unexpected.is_empty() && fixed.is_empty(), detail }
}

fn properties() -> Outcome {
    let mut failures = Vec::new();
    for (name, fields, max_dim, property) in props::SUITES {
        if let Err(e) = props::run_suite(fields, *max_dim, *property) {
            failures.push(format!("{name}: {e}"));
        }
    }
    let detail = format!("{} suites x {} cases, {} failed", props::SUITES.len(), props::CASES, failures.len());
    let detail = if failures.is_empty() { detail } else { format!("{detail}; {}", failures.join(" | ")) };
    Outcome { passed: failures.is_empty(), expected: failures.is_empty(), detail }
}

fn distinctness() -> Report {
    let mut report = verify::check_distinctness(7, 5);
    report.extend(verify::check_distinctness(11, 5));
    report
}

type Criterion = (&'static str, Duration, Box<dyn Fn() -> Outcome>);

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria: Vec<Criterion> = vec![
        ("cohomology tables, dim 4", secs(1), Box::new(|| from_report(&verify::check_cohomology(Some(4)), &[]))),
        (
            "cohomology tables, dim 5",
            secs(2),
            Box::new(|| from_report(&verify::check_cohomology(Some(5)), COHOMOLOGY_5_KNOWN)),
        ),
        ("catalog well-formedness", secs(2), Box::new(|| from_report(&verify::check_catalog(), &[]))),
        ("provenance reconstruction", secs(2), Box::new(|| from_report(&verify::check_provenance(), &[]))),
        (
            "automorphism families",
            secs(30),
            Box::new(|| from_report(&verify::check_aut_families(), AUT_FAMILIES_KNOWN)),
        ),
        ("action formulas", secs(5), Box::new(|| from_report(&verify::check_actions(), &[]))),
        ("distinctness over GF(7), GF(11)", secs(600), Box::new(|| from_report(&distinctness(), &[]))),
        ("oracle equivalence, GF(2) dims 1-3", secs(900), Box::new(|| from_report(&verify::check_oracle(3), &[]))),
        ("property suites", secs(120), Box::new(properties)),
    ];
    let mut all_expected = true;
    let mut passed = 0;
    for (n, (title, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= *budget;
        let ok = outcome.passed && in_time;
        passed += usize::from(ok);
        all_expected &= outcome.expected && in_time;
        println!(
            "criterion {}  {:<4}  {title}: {} ({:.2}s, budget {}s)",
            n + 1,
            if ok { "PASS" } else { "FAIL" },
            outcome.detail,
            elapsed.as_secs_f64(),
            budget.as_secs()
        );
    }
    println!("{passed}/{} criteria pass", criteria.len());
    if all_expected {
        ExitCode::SUCCESS
    } else {
        println!("acceptance results differ from the pinned expectations");
        ExitCode::FAILURE
    }
}
