// Score a few hand-written predictions, then the oracle over a whole fixture.
//
//     cargo run --example static_eval

use std::path::Path;

use logbench::corpus::{extract_instances, ExtractConfig};
use logbench::report::{emit_report, OutputFormat, Report};
use logbench::static_eval::{evaluate_static, oracle_predictions, score_instance, PredictionRecord, StaticConfig};

pub fn run_example() {
    let tree = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/corpus/streamkit");
    let (instances, _) = extract_instances(&tree, "streamkit", &ExtractConfig::default()).unwrap();
    let config = StaticConfig::default();

    let inst = instances.iter().find(|i| !i.oracle_text.contains('\n')).unwrap();
    println!("oracle: {}", inst.oracle_text.trim());
    let attempts = [
        (inst.log_pos, inst.oracle_text.trim().to_string()),
        (inst.log_pos + 1, inst.oracle_text.trim().to_string()),
        (inst.log_pos, inst.oracle_text.trim().replacen(&format!(".{}(", inst.oracle.level), ".error(", 1)),
        (inst.log_pos, "System.out.println(\"hi\");".to_string()),
    ];
    for (pos, text) in attempts {
        let pred = PredictionRecord {
            instance_id: inst.id.clone(),
            insert_pos: pos,
            statements: vec![text.clone()],
            tool: "demo".into(),
        };
        let s = score_instance(&pred, inst, &config).unwrap();
        println!(
            "  pos={pos:<3} PA={} LA={} dist={} MA={} DEA={} BLEU-4={:.2} ROUGE-L={:.2} {:?}  {text}",
            s.position as u8, s.level as u8, s.level_distance, s.message as u8, s.dea as u8, s.bleu4, s.rouge_l, s.status
        );
    }

    let (_, report) = evaluate_static(&instances, &oracle_predictions(&instances, "oracle"), &config).unwrap();
    println!("\n{}", emit_report(&Report::StaticReport(report), OutputFormat::Table));
}

#[allow(dead_code)]
fn main() {
    run_example();
}
