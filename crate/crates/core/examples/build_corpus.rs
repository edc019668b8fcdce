// Mine masked instances from two source trees and check that each one
// reassembles its function.
//
//     cargo run --example build_corpus

use std::path::Path;

use logbench::corpus::{extract_instances, read_corpus, split_by_length, write_corpus, ExtractConfig};
use logbench::model::{LogCallParser, WordPunct};

pub fn run_example() {
    let fixtures = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/corpus");
    let cfg = ExtractConfig::default();
    let mut all = Vec::new();
    for project in ["ordersvc", "streamkit"] {
        let (instances, report) = extract_instances(&fixtures.join(project), project, &cfg).unwrap();
        println!(
            "{project:<10} files={} units={} statements={} instances={} inline-skipped={} outside-function={}",
            report.files_scanned,
            report.units,
            report.statements,
            report.instances,
            report.skipped_inline,
            report.skipped_outside_unit
        );
        all.extend(instances);
    }

    let first = &all[0];
    println!("\n{} (insert before line {}):", first.id, first.log_pos);
    for (i, line) in first.code_without.lines.iter().enumerate().take(8) {
        println!("{:>3} | {line}", i + 1);
    }
    println!("oracle: {}", first.oracle_text.trim());

    // Records survive a JSONL round trip.
    let mut buf = Vec::new();
    write_corpus(&mut buf, &all).unwrap();
    let back = read_corpus(&buf[..], &LogCallParser::default(), &WordPunct::default()).unwrap();
    assert_eq!(back.len(), all.len());

    let (short, long) = split_by_length(back);
    println!("\n{} short and {} long (>512 tokens) instances", short.len(), long.len());
}

#[allow(dead_code)]
fn main() {
    run_example();
}
