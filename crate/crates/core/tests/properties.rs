use std::sync::Arc;

use logbench::corpus::{contamination_rate, insert_lines, CorpusInstance, CorpusRecord, LengthClass};
use logbench::dynamic::HeaderStripper;
use logbench::metrics::{bleu, rouge_l, rouge_n, tfidf_cosine};
use logbench::model::{level_distance, parse_log_statement, LogCallParser, LogLevel, SourceUnit, WordPunct};
use logbench::static_eval::{aggregate, evaluate_static, PredictionRecord, StaticConfig};
use proptest::prelude::*;

fn level() -> impl Strategy<Value = LogLevel> {
    prop::sample::select(LogLevel::ALL.to_vec())
}

fn tokens(max: usize) -> impl Strategy<Value = Vec<String>> {
    prop::collection::vec(prop::sample::select(vec!["a", "b", "c", "d", "e", "{}", ",", "x"]), 0..max)
        .prop_map(|v| v.into_iter().map(str::to_string).collect())
}

fn ident() -> impl Strategy<Value = String> {
    "[a-z][a-zA-Z0-9]{0,6}"
}

/// An expression that may contain commas, calls and operators.
fn expr() -> impl Strategy<Value = String> {
    prop_oneof![
        ident(),
        (ident(), ident()).prop_map(|(a, b)| format!("{a} + {b}")),
        (ident(), ident(), ident()).prop_map(|(a, b, c)| format!("{a} ? {b} : {c}")),
        (ident(), ident(), ident()).prop_map(|(f, a, b)| format!("{f}({a}, {b})")),
        (ident(), ident()).prop_map(|(a, b)| format!("{a}.get({b}).size()")),
        (ident(), 0u32..100).prop_map(|(a, n)| format!("{a}[{n}]")),
    ]
}

fn word() -> impl Strategy<Value = String> {
    "[A-Za-z]{1,8}"
}

prop_compose! {
    fn statement()(lvl in level(),
                   recv in prop::sample::select(vec!["log", "LOG", "logger"]),
                   words in prop::collection::vec(word(), 0..5),
                   exprs in prop::collection::vec(expr(), 0..4)) -> (LogLevel, String, Vec<String>, String) {
        let mut template = words.join(" ");
        for _ in &exprs {
            template.push_str(" {}");
        }
        let template = template.trim().to_string();
        let mut args = vec![format!("\"{template}\"")];
        args.extend(exprs.iter().cloned());
        let text = format!("{recv}.{}({});", lvl.name(), args.join(", "));
        (lvl, template, exprs, text)
    }
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn level_distance_is_a_metric(a in level(), b in level(), c in level()) {
        prop_assert_eq!(level_distance(a, b), level_distance(b, a));
        prop_assert!(level_distance(a, b) <= 5);
        prop_assert_eq!(level_distance(a, b) == 0, a == b);
        prop_assert!(level_distance(a, c) <= level_distance(a, b) + level_distance(b, c));
    }

    #[test]
    fn parse_recovers_level_template_and_exprs((lvl, template, exprs, text) in statement()) {
        let s = parse_log_statement(&text).unwrap();
        prop_assert_eq!(s.level, lvl);
        prop_assert_eq!(&s.static_text, &template);
        prop_assert_eq!(&s.dynamic_exprs, &exprs);
        for e in &s.dynamic_exprs {
            prop_assert!(!s.static_text.contains(e.as_str()) || template.contains(e.as_str()));
        }
    }

    #[test]
    fn render_round_trips((_, _, _, text) in statement()) {
        let s = parse_log_statement(&text).unwrap();
        let again = parse_log_statement(&s.render()).unwrap();
        prop_assert!(s.same_structure(&again));
        let norm = |t: &str| t.split_whitespace().collect::<String>();
        prop_assert_eq!(norm(&format!("{};", s.render())), norm(&text));
    }

    #[test]
    fn parser_never_panics(text in "\\PC{0,80}") {
        let _ = parse_log_statement(&text);
        let _ = parse_log_statement(&format!("log.info({text});"));
    }

    #[test]
    fn metric_bounds_and_symmetry(a in tokens(12), b in tokens(12)) {
        for n in 1..=4 {
            if let Ok(v) = bleu(&a, &b, n) {
                prop_assert!((0.0..=1.0).contains(&v));
            }
            if let Ok(v) = rouge_n(&a, &b, n) {
                prop_assert!((0.0..=1.0).contains(&v));
                prop_assert_eq!(v, rouge_n(&b, &a, n).unwrap());
            }
        }
        if let Ok(v) = rouge_l(&a, &b) {
            prop_assert!((0.0..=1.0).contains(&v));
            prop_assert_eq!(v, rouge_l(&b, &a).unwrap());
        }
        let c = tfidf_cosine(&a, &b);
        prop_assert!((0.0..=1.0).contains(&c));
        prop_assert!((c - tfidf_cosine(&b, &a)).abs() < 1e-12);
    }

    #[test]
    fn identical_inputs_score_one(a in tokens(12)) {
        prop_assume!(!a.is_empty());
        prop_assert!((tfidf_cosine(&a, &a) - 1.0).abs() < 1e-9);
        prop_assert_eq!(rouge_l(&a, &a).unwrap(), 1.0);
        prop_assert_eq!(bleu(&a, &a, 1).unwrap(), 1.0);
        if a.len() >= 4 {
            prop_assert!((bleu(&a, &a, 4).unwrap() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn short_candidates_have_zero_bleu4(a in tokens(3), b in tokens(12)) {
        prop_assume!(!a.is_empty() && !b.is_empty());
        prop_assert_eq!(bleu(&a, &b, 4).unwrap(), 0.0);
    }

    #[test]
    fn contamination_shrinks_as_n_grows(
        test in prop::collection::vec(tokens(30), 1..6),
        train in prop::collection::vec(tokens(30), 0..6),
    ) {
        let tok = WordPunct::default();
        let units = |v: &[Vec<String>]| -> Vec<SourceUnit> {
            v.iter().enumerate().map(|(i, t)| SourceUnit::new(i.to_string(), vec![t.join(" ")], &tok)).collect()
        };
        let (test, train) = (units(&test), units(&train));
        let mut last = 1.0;
        for n in 1..=20 {
            let r = contamination_rate(&test, &train, n).unwrap();
            prop_assert!(r <= last);
            last = r;
        }
    }

    #[test]
    fn header_stripping_is_idempotent(line in "\\PC{0,60}", stamp in "20[0-9]{2}-[01][0-9]-[0-3][0-9] [0-2][0-9]:[0-5][0-9]:[0-5][0-9]") {
        let s = HeaderStripper::default();
        for input in [line.clone(), format!("{stamp} INFO [main] a.B - {line}")] {
            let once = s.strip(&input).to_string();
            prop_assert_eq!(s.strip(&once), once.as_str());
        }
    }

    #[test]
    fn insert_then_remove_is_identity(lines in prop::collection::vec("[a-z ]{0,10}", 0..10), pos in 1usize..12, text in "[a-z]{1,5}") {
        let pos = pos.min(lines.len() + 1);
        let out = insert_lines(&lines, pos, &text);
        prop_assert_eq!(&out[pos - 1], &text);
        let mut back = out.clone();
        back.remove(pos - 1);
        prop_assert_eq!(back, lines);
    }

    #[test]
    fn static_aggregation_ignores_order(
        seeds in prop::collection::vec((level(), level(), 1usize..4, any::<bool>()), 1..12),
        rotate in 0usize..12,
    ) {
        let parser = LogCallParser::default();
        let tok = Arc::new(WordPunct::default());
        let mut instances = Vec::new();
        let mut preds = Vec::new();
        for (i, (oracle, predicted, pos, same_msg)) in seeds.iter().enumerate() {
            let rec = CorpusRecord {
                id: format!("i{i}"),
                project: if i % 2 == 0 { "p" } else { "q" }.into(),
                code_without: vec!["void f() {".into(), "  go();".into(), "}".into()],
                log_pos: 2,
                oracle_text: format!("  log.{}(\"value {{}} seen\", v{i});", oracle.name()),
                length_class: LengthClass::Short,
            };
            instances.push(CorpusInstance::from_record(rec, &parser, tok.as_ref()).unwrap());
            let msg = if *same_msg { "value {} seen" } else { "other {} thing" };
            preds.push(PredictionRecord {
                instance_id: format!("i{i}"),
                insert_pos: *pos,
                statements: vec![format!("log.{}(\"{msg}\", v{i});", predicted.name())],
                tool: "t".into(),
            });
        }
        let config = StaticConfig::default();
        let (records, report) = evaluate_static(&instances, &preds, &config).unwrap();

        let mut shuffled_records = records.clone();
        shuffled_records.rotate_left(rotate % records.len());
        shuffled_records.reverse();
        let mut from_records = aggregate(&shuffled_records, &instances).unwrap();
        from_records.tool = report.tool.clone();
        prop_assert_eq!(&from_records, &report);

        let mut shuffled = instances.clone();
        shuffled.rotate_left(rotate % instances.len());
        let (_, again) = evaluate_static(&shuffled, &preds, &config).unwrap();
        prop_assert_eq!(&again.overall, &report.overall);
        for (k, v) in &report.by_project {
            prop_assert_eq!(&again.by_project[k], v);
        }
        // Determinism.
        prop_assert_eq!(evaluate_static(&instances, &preds, &config).unwrap().1, report);
    }
}
