mod common;

use std::fs;

use common::{g6_golden_text, g6_printed_mismatches, golden_path};

#[test]
fn g6_tables_match_golden_file() {
    let text = g6_golden_text();
    let path = golden_path();
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::write(&path, &text).unwrap();
    }
    let golden = fs::read_to_string(&path).expect("golden file; rerun with UPDATE_GOLDEN=1 to create it");
    assert!(golden == text, "g=6 product tables differ from {}", path.display());
}

#[test]
fn g6_printed_products() {
    let bad = g6_printed_mismatches();
    assert!(bad.is_empty(), "{bad:#?}");
}
