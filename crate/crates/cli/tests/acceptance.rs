//! Acceptance run: one line per criterion, nonzero exit if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use supclose::verify::{check_cofinite_example, run_suite, run_zspec, SuiteOutcome};

const SEED: u64 = 7;

fn suite(name: &str, count: Option<usize>) -> Result<SuiteOutcome, String> {
    run_suite(name, count, SEED).map_err(|e| e.to_string())
}

fn summarize(outcomes: &[SuiteOutcome], min_cases: usize) -> Result<String, String> {
    let mut parts = Vec::new();
    for o in outcomes {
        if let Some(f) = o.failures.first() {
            return Err(format!("{} case {}: {}", o.name, f.case, f.detail));
        }
        if o.cases < min_cases {
            return Err(format!("{} ran only {} cases", o.name, o.cases));
        }
        parts.push(format!("{} {}", o.name, o.cases));
    }
    Ok(parts.join(", "))
}

fn cars() -> Result<String, String> {
    let start = Instant::now();
    let o = suite("cars", Some(200))?;
    let took = start.elapsed();
    let line = summarize(&[o], 200)?;
    if took > Duration::from_secs(60) {
        return Err(format!("took {took:?}"));
    }
    Ok(format!("{line} in {took:.2?}"))
}

fn module_identities() -> Result<String, String> {
    let outcomes =
        ["proco4", "pro", "con1", "idealization"].iter().map(|n| suite(n, Some(100))).collect::<Result<Vec<_>, _>>()?;
    summarize(&outcomes, 100)
}

fn semigroups() -> Result<String, String> {
    summarize(&[suite("sg", None)?, suite("con2", None)?], 1)
}

fn zloc() -> Result<String, String> {
    summarize(&[suite("zloc", None)?], 10_000)
}

fn cofinite() -> Result<String, String> {
    check_cofinite_example().map(|()| "support not closed, closure Spec(ℤ), O = 0".into())
}

fn nagata() -> Result<String, String> {
    let o = suite("nagata", Some(100))?;
    let notes = o.notes.join("; ");
    summarize(&[o], 100).map(|line| format!("{line}; {notes}"))
}

fn groebner_oracle() -> Result<String, String> {
    summarize(&[suite("groebner-oracle", Some(50))?], 50)
}

fn zspec() -> Result<String, String> {
    summarize(&[run_zspec(500, SEED)], 500)
}

type Criterion = fn() -> Result<String, String>;

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 8] = [
        ("cars over monomial cyclic sums", cars),
        ("proco4 / pro / con1 / idealization", module_identities),
        ("numerical semigroup pairs and towers", semigroups),
        ("Z[1/n] for n <= 10^4", zloc),
        ("cofinite non-closed support", cofinite),
        ("Nagata ring", nagata),
        ("Groebner kernel vs linear-algebra oracle", groebner_oracle),
        ("Spec(Z) on 500 modules", zspec),
    ];
    let mut ok = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {}. {name}: {detail}", i + 1),
            Err(detail) => {
                ok = false;
                println!("FAIL {}. {name}: {detail}", i + 1);
            }
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
