// Flag the five bad logging patterns.
//
//     cargo run --example lint_bad_patterns

use logbench::corpus::{lint_bad_patterns, LintConfig};
use logbench::model::parse_log_statement;

pub fn run_example() {
    let cfg = LintConfig::default();
    let samples = [
        r#"logger.info("Removing node {} from cluster, node {}", nodeId, nodeId);"#,
        r#"LOG.warn("");"#,
        r#"log.debug("======== {} ========", stage);"#,
        r#"LOG.info("Failed to connect to server {}", host);"#,
        r#"log.info("Current progress is {}", (int) progress);"#,
        r#"log.info("Connected to {} in {} ms", host, elapsed);"#,
    ];
    for (i, text) in samples.iter().enumerate() {
        let stmt = parse_log_statement(text).unwrap();
        let findings = lint_bad_patterns(&format!("s{i}"), &stmt, &cfg);
        let labels: Vec<String> = findings
            .iter()
            .map(|f| format!("{} [{}]", f.pattern, f.evidence))
            .collect();
        println!("{text}\n    -> {}", if labels.is_empty() { "clean".into() } else { labels.join(", ") });
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
