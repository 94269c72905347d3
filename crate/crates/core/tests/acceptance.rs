mod common;

use std::fs;
use std::process::ExitCode;

use tautring::catalog::{all_catalog_cases, column_count_dimension, trigonal_admissible, trigonal_dimension};
use tautring::json::to_canonical;
use tautring::model::ModelJson;
use tautring::verify::{verify, CheckResult, Scope};
use tautring::Model;

fn golden_g6() -> (bool, String) {
    let text = common::g6_golden_text();
    let golden = match fs::read_to_string(common::golden_path()) {
        Ok(t) => t,
        Err(e) => return (false, format!("golden file: {e}")),
    };
    let printed = common::g6_printed_mismatches();
    if golden != text {
        (false, "tables differ from the golden file".into())
    } else if !printed.is_empty() {
        (false, printed.join("; "))
    } else {
        (true, format!("cases c, d, e; {} bytes", text.len()))
    }
}

fn trigonal() -> (bool, String) {
    let mut bad = Vec::new();
    let mut n = 0;
    for g in 3..=15u32 {
        for k in 0..=g / 3 {
            n += 1;
            let d = trigonal_dimension(g, k);
            let cols = trigonal_admissible(g, k).and_then(|a| column_count_dimension(&a));
            let closed = (k + 1) * (2 * g + 2 - 3 * k);
            match (d, cols) {
                (Ok(d), Ok(c)) if d == c && 2 * d == closed as u64 => {}
                (d, c) => bad.push(format!("g={g} k={k}: {d:?} / {c:?} / {}", closed as f64 / 2.0)),
            }
        }
    }
    (bad.is_empty(), if bad.is_empty() { format!("{n} (g, k) pairs") } else { bad.join("; ") })
}

fn persistence() -> (bool, String) {
    let cases = match all_catalog_cases() {
        Ok(c) => c,
        Err(e) => return (false, e.to_string()),
    };
    let mut bad = Vec::new();
    for c in &cases {
        let round = || -> Result<bool, tautring::Error> {
            let first = to_canonical(&c.model().to_json())?;
            let back = Model::from_json(&serde_json::from_str::<ModelJson>(&first)?)?;
            Ok(to_canonical(&back.to_json())? == first)
        };
        if !matches!(round(), Ok(true)) {
            bad.push(format!("g={} ({})", c.descriptor.genus, c.descriptor.label));
        }
    }
    (bad.is_empty(), if bad.is_empty() { format!("{} models", cases.len()) } else { bad.join(", ") })
}

fn main() -> ExitCode {
    let mut results: Vec<CheckResult> = verify(Scope::All);
    for (name, (passed, detail)) in [("golden-g6", golden_g6()), ("trigonal", trigonal()), ("persistence", persistence())] {
        results.push(CheckResult { name: name.into(), passed, detail });
    }
    let mut failed = 0;
    for (n, r) in results.iter().enumerate() {
        println!("{} {:>2}. {}: {}", if r.passed { "PASS" } else { "FAIL" }, n + 1, r.name, r.detail);
        failed += usize::from(!r.passed);
    }
    if results.len() != 10 {
        println!("FAIL expected 10 criteria, ran {}", results.len());
        return ExitCode::FAILURE;
    }
    if failed > 0 {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
