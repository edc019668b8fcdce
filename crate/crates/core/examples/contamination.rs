// Share of test functions that repeat a 13-token run from training code.
//
//     cargo run --example contamination

use std::path::Path;

use logbench::corpus::{contamination_report, extract_instances, ExtractConfig};
use logbench::model::{SourceUnit, WordPunct};

fn units(dir: &Path, project: &str) -> Vec<SourceUnit> {
    let tok = WordPunct::default();
    extract_instances(dir, project, &ExtractConfig::default())
        .unwrap()
        .0
        .iter()
        .map(|i| SourceUnit::new(i.id.clone(), i.original_unit(), &tok))
        .collect()
}

pub fn run_example() {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/contamination");
    let test = units(&root.join("test"), "test");
    let train = units(&root.join("train"), "train");
    for n in [5, 13, 20] {
        let r = contamination_report(&test, &train, n, &WordPunct::default()).unwrap();
        println!("n={n:<3} rate={:.2} contaminated={:?}", r.rate, r.contaminated);
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
