// Build runtime instances for the inventory fixture, then score the oracle
// and a handful of deliberately broken predictions. Needs `make` and `g++`.
//
//     cargo run --example dynamic_eval

use std::path::Path;

use logbench::dynamic::{aggregate_dynamic, build_dynamic_instances, evaluate_dynamic, BuildAdapter};
use logbench::model::WordPunct;
use logbench::report::{emit_report, ingest_predictions, OutputFormat, Report};

pub fn run_example() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/dynamic/inventory");
    let adapter = BuildAdapter::load(&dir.join("adapter.toml")).unwrap();
    let (instances, build) = build_dynamic_instances(&adapter, 4).unwrap();
    println!(
        "{} statements, {} uncovered, {} instances over tests {:?}",
        build.statements, build.uncovered_statements, build.instances, build.tests
    );
    for inst in &instances {
        println!("  {:<45} expects_logs={}", inst.instance_id, inst.expects_logs);
    }

    let oracle: Vec<_> = instances.iter().map(|i| i.oracle_prediction("oracle")).collect();
    let results = evaluate_dynamic(&instances, &oracle, &adapter, 4, &WordPunct::default()).unwrap();
    let report = aggregate_dynamic(&results).unwrap();
    println!("\n{}", emit_report(&Report::DynamicReport(report), OutputFormat::Table));

    let broken = ingest_predictions(&dir.join("failure_modes.jsonl")).unwrap();
    let wanted: Vec<_> = instances
        .iter()
        .filter(|i| broken.iter().any(|p| p.instance_id == i.instance_id))
        .cloned()
        .collect();
    for r in evaluate_dynamic(&wanted, &broken, &adapter, 4, &WordPunct::default()).unwrap() {
        println!(
            "{:<45} compiled={} fp={} fn={} body={:?}",
            r.instance_id, r.compiled, r.fp, r.fn_, r.predicted_log_body
        );
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
