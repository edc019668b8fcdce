//! Acceptance suite. Runs without the libtest harness so every criterion
//! prints one `PASS`/`FAIL` line even when the run succeeds.

use std::collections::{BTreeMap, HashSet};
use std::fs;
use std::panic::{self, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use logbench::corpus::{
    contamination_rate, extract_instances, lint_bad_patterns, BadPattern, CorpusInstance, ExtractConfig, LintConfig,
};
use logbench::dynamic::{aggregate_dynamic, build_dynamic_instances, evaluate_dynamic, BuildAdapter, DynamicInstance};
use logbench::metrics::{bleu, rouge_l, tfidf_cosine};
use logbench::model::{level_distance, parse_log_statement, LogLevel, SourceUnit, Tokenizer, WordPunct};
use logbench::report::ingest_predictions;
use logbench::static_eval::{evaluate_static, oracle_predictions, score_position, StaticConfig};

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        #[allow(clippy::neg_cmp_op_on_partial_ord)]
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn fixture(rel: &str) -> PathBuf {
    root().join("fixtures").join(rel)
}

const CORPORA: [&str; 2] = ["ordersvc", "streamkit"];
const DYNAMIC: [&str; 2] = ["inventory", "billing"];

fn corpus() -> Vec<CorpusInstance> {
    CORPORA
        .iter()
        .flat_map(|p| extract_instances(&fixture(&format!("corpus/{p}")), p, &ExtractConfig::default()).unwrap().0)
        .collect()
}

fn adapter(project: &str) -> BuildAdapter {
    BuildAdapter::load(&fixture(&format!("dynamic/{project}/adapter.toml"))).unwrap()
}

fn toks(s: &str) -> Vec<String> {
    s.split_whitespace().map(str::to_string).collect()
}

fn identity_suite() -> Check {
    let started = Instant::now();
    let instances = corpus();
    let preds = oracle_predictions(&instances, "oracle");
    let (_, report) = evaluate_static(&instances, &preds, &StaticConfig::default()).map_err(|e| e.to_string())?;
    let s = &report.overall;
    ensure!(s.n == instances.len(), "static n {}", s.n);
    ensure!(
        s.pa == 100.0 && s.la == 100.0 && s.ma == 100.0 && s.dea == 100.0 && s.ald == 0.0,
        "static {s:?}"
    );
    ensure!(s.bleu4 == 1.0 && s.rouge_l == 1.0, "static text {s:?}");

    let mut dynamic_n = 0;
    for project in DYNAMIC {
        let a = adapter(project);
        let (insts, _) = build_dynamic_instances(&a, 4).map_err(|e| e.to_string())?;
        let preds: Vec<_> = insts.iter().map(|i| i.oracle_prediction("oracle")).collect();
        let results = evaluate_dynamic(&insts, &preds, &a, 4, &WordPunct::default()).map_err(|e| e.to_string())?;
        let d = aggregate_dynamic(&results).map_err(|e| e.to_string())?.overall;
        ensure!(d.csr == 100.0, "{project} csr {}", d.csr);
        ensure!(d.lfs.cos == 1.0 && d.lfs.bleu4 == 1.0 && d.lfs.rouge_l == 1.0, "{project} lfs {:?}", d.lfs);
        ensure!(d.fplr == 0.0 && d.fnlr == 0.0, "{project} fplr {} fnlr {}", d.fplr, d.fnlr);
        dynamic_n += d.n;
    }
    let elapsed = started.elapsed();
    ensure!(elapsed < Duration::from_secs(300), "took {elapsed:?}");
    Ok(format!(
        "{} static + {dynamic_n} dynamic oracle instances score perfectly in {:.1}s",
        instances.len(),
        elapsed.as_secs_f64()
    ))
}

fn metric_oracles() -> Check {
    let b1 = bleu(&toks("the server is down"), &toks("the server is running"), 1).map_err(|e| e.to_string())?;
    ensure!((b1 - 0.75).abs() < 1e-12, "BLEU-1 {b1}");

    // LCS("a c d", "a b c d") = 3; P = 3/3, R = 3/4, F = 2PR/(P+R) = 6/7.
    let rl = rouge_l(&toks("a c d"), &toks("a b c d")).map_err(|e| e.to_string())?;
    ensure!((rl - 6.0 / 7.0).abs() < 1e-9, "ROUGE-L {rl}");

    for cand in ["", "a", "a b", "a b c"] {
        let b4 = bleu(&toks(cand), &toks("a b c d e"), 4).unwrap_or(0.0);
        ensure!(b4 == 0.0, "BLEU-4 of {cand:?} = {b4}");
    }

    let doc = toks("connection refused retrying in 5 seconds");
    let same = tfidf_cosine(&doc, &doc);
    let disjoint = tfidf_cosine(&doc, &toks("cache warmed up"));
    ensure!((same - 1.0).abs() < 1e-12 && disjoint == 0.0, "cosine {same} / {disjoint}");
    Ok(format!("BLEU-1 {b1}, ROUGE-L {rl:.9}, short BLEU-4 0, cosine {same}/{disjoint}"))
}

fn level_table() -> Check {
    // Severity rank written out independently of the library.
    let rank = |l: LogLevel| match l.name() {
        "trace" => 0i32,
        "debug" => 1,
        "info" => 2,
        "warn" => 3,
        "error" => 4,
        "fatal" => 5,
        other => panic!("{other}"),
    };
    let mut pairs = 0;
    let mut max = 0;
    for a in LogLevel::ALL {
        for b in LogLevel::ALL {
            let d = level_distance(a, b);
            ensure!(i32::from(d) == (rank(a) - rank(b)).abs(), "{a}/{b} -> {d}");
            max = max.max(d);
            pairs += 1;
        }
    }
    ensure!(pairs == 36 && max == 5, "pairs {pairs} max {max}");
    Ok("36 ordered pairs match, maximum 5".into())
}

fn round_trip() -> Check {
    let instances = corpus();
    let projects: HashSet<&str> = instances.iter().map(|i| i.project.as_str()).collect();
    ensure!(instances.len() >= 200 && projects.len() >= 2, "{} instances", instances.len());

    let mut files: BTreeMap<PathBuf, Vec<String>> = BTreeMap::new();
    for inst in &instances {
        // id = project:rel/path:line of the statement
        let rest = inst.id.strip_prefix(&format!("{}:", inst.project)).unwrap();
        let (rel, line) = rest.rsplit_once(':').unwrap();
        let line: usize = line.parse().unwrap();
        let path = fixture(&format!("corpus/{}/{rel}", inst.project));
        let raw = files
            .entry(path.clone())
            .or_insert_with(|| fs::read_to_string(&path).unwrap().split('\n').map(str::to_string).collect());
        let start = line + 1 - inst.log_pos;
        let unit = inst.original_unit();
        let original = raw[start - 1..start - 1 + unit.len()].join("\n");
        ensure!(unit.join("\n") == original, "{} does not reconstruct", inst.id);
    }

    let mut flips = 0;
    for inst in &instances {
        let base = oracle_predictions(std::slice::from_ref(inst), "m").remove(0);
        for pos in [inst.log_pos.wrapping_sub(1), inst.log_pos + 1] {
            if pos == 0 || pos > inst.code_without.lines.len() + 1 {
                continue;
            }
            let mut p = base.clone();
            p.insert_pos = pos;
            ensure!(!score_position(&p, inst).unwrap(), "{} still matches at {pos}", inst.id);
            flips += 1;
        }
    }
    Ok(format!(
        "{} instances over {} projects rebuild byte-exact, {flips}/{flips} shifted positions rejected",
        instances.len(),
        projects.len()
    ))
}

fn lint_exemplars() -> Check {
    let cfg = LintConfig::default();
    let exemplars = [
        (r#"logger.info("Removing node {} from cluster, node {}", nodeId, nodeId);"#, BadPattern::DuplicatedVariable),
        (r#"LOG.warn("");"#, BadPattern::EmptyString),
        (r#"log.debug("======== {} ========", stage);"#, BadPattern::UnpredictableCharacter),
        (r#"LOG.info("Failed to connect to server {}", host);"#, BadPattern::WrongVerbosityLevel),
        (r#"log.info("Current progress is {}", (int) progress);"#, BadPattern::ExplicitCast),
    ];
    for (text, want) in exemplars {
        let stmt = parse_log_statement(text).map_err(|e| e.to_string())?;
        let got: Vec<BadPattern> = lint_bad_patterns("x", &stmt, &cfg).iter().map(|f| f.pattern).collect();
        ensure!(got == vec![want], "{text} -> {got:?}");
    }
    let clean = [
        r#"log.info("Connected to {} in {} ms", host, elapsed);"#,
        r#"LOG.debug("Cache hit for key {}", key);"#,
        r#"logger.warn("Queue depth {} above threshold {}", depth, limit);"#,
        r#"log.error("Could not open {}", path, e);"#,
        r#"LOG.info("Started worker {}", id);"#,
        r#"log.trace("Entering scan of {}", table);"#,
        r#"logger.info("Loaded {} rules", rules.size());"#,
        r#"LOG.warn("Lease for {} expires in {}s", owner, ttl);"#,
        r#"log.debug("Batch {} of {} committed", i, total);"#,
        r#"logger.error("Request {} rejected by {}", reqId, policy);"#,
        r#"LOG.info("Shutting down");"#,
        r#"log.info("User " + user + " logged in");"#,
        r#"logger.debug("Resolved {} to {}", name, addr);"#,
        r#"LOG.fatal("Disk {} is read-only", mount);"#,
        r#"log.warn("Retry budget exhausted for {}", job);"#,
        r#"logger->info("Charged {} cents to {}", cents, account);"#,
        r#"LOG.debug("Snapshot {} written", snapshotId);"#,
        r#"log.info("Configuration reloaded from {}", source);"#,
        r#"logger.trace("Heartbeat from {}", peer);"#,
        r#"LOG.error("Checksum mismatch on {}", block);"#,
    ];
    ensure!(clean.len() == 20, "clean set size");
    for text in clean {
        let stmt = parse_log_statement(text).map_err(|e| e.to_string())?;
        let got = lint_bad_patterns("x", &stmt, &cfg);
        ensure!(got.is_empty(), "{text} -> {got:?}");
    }
    Ok("5 exemplars flag exactly their pattern, 20 clean statements flag nothing".into())
}

fn units(dir: &Path, project: &str) -> Vec<SourceUnit> {
    let tok = WordPunct::default();
    extract_instances(dir, project, &ExtractConfig::default())
        .unwrap()
        .0
        .iter()
        .map(|i| SourceUnit::new(i.id.clone(), i.original_unit(), &tok))
        .collect()
}

/// Plain n-gram set intersection.
fn brute_force_rate(test: &[SourceUnit], train: &[SourceUnit], n: usize) -> f64 {
    let tok = WordPunct::default();
    let grams = |u: &SourceUnit| -> HashSet<Vec<String>> {
        let t = tok.tokenize(&u.text());
        t.windows(n).map(|w| w.to_vec()).collect()
    };
    let train: HashSet<Vec<String>> = train.iter().flat_map(grams).collect();
    let hit = test.iter().filter(|u| !grams(u).is_disjoint(&train)).count();
    hit as f64 / test.len() as f64
}

fn contamination() -> Check {
    let test = units(&fixture("contamination/test"), "test");
    let train = units(&fixture("contamination/train"), "train");
    ensure!(test.len() == 10, "{} test units", test.len());
    let mut rates = Vec::new();
    for n in [5, 13, 20] {
        let r = contamination_rate(&test, &train, n).map_err(|e| e.to_string())?;
        let oracle = brute_force_rate(&test, &train, n);
        ensure!(r == oracle, "n={n}: {r} vs oracle {oracle}");
        rates.push(r);
    }
    ensure!(rates[1] == 0.2, "13-gram rate {}", rates[1]);
    ensure!(rates[0] >= rates[1] && rates[1] >= rates[2], "not monotone: {rates:?}");
    Ok(format!("rates at n=5/13/20: {rates:?}"))
}

fn failure_modes() -> Check {
    // (instance, compiled, fp, fn)
    let expected: BTreeMap<&str, (bool, bool, bool)> = [
        ("inventory:src/inventory.cpp:9@restock", (false, false, true)),
        ("inventory:src/inventory.cpp:23@reserve_ok", (true, false, true)),
        ("billing:src/ledger.cpp:21@charge_ok", (true, false, true)),
        ("billing:src/ledger.cpp:28@refund_partial", (true, true, false)),
    ]
    .into_iter()
    .collect();
    let mut seen = 0;
    for project in DYNAMIC {
        let a = adapter(project);
        let preds = ingest_predictions(&fixture(&format!("dynamic/{project}/failure_modes.jsonl")))
            .map_err(|e| e.to_string())?;
        let (insts, _) = build_dynamic_instances(&a, 4).map_err(|e| e.to_string())?;
        let wanted: Vec<DynamicInstance> =
            insts.into_iter().filter(|i| preds.iter().any(|p| p.instance_id == i.instance_id)).collect();
        ensure!(wanted.len() == preds.len(), "{project}: missing instances");
        for r in evaluate_dynamic(&wanted, &preds, &a, 4, &WordPunct::default()).map_err(|e| e.to_string())? {
            let want = expected.get(r.instance_id.as_str()).ok_or(format!("unexpected {}", r.instance_id))?;
            ensure!(
                (r.compiled, r.fp, r.fn_) == *want,
                "{}: compiled={} fp={} fn={}",
                r.instance_id,
                r.compiled,
                r.fp,
                r.fn_
            );
            seen += 1;
        }
    }
    ensure!(seen == 4, "{seen} cases");
    Ok("compile failure, lower level FN, off-path FN and higher level FP all classified".into())
}

fn cli(args: &[&str]) -> Result<(), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_logbench"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    ensure!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    Ok(())
}

fn full_run(out: &Path) -> Result<BTreeMap<String, Vec<u8>>, String> {
    let s = |p: &Path| p.to_str().unwrap().to_string();
    let o = s(out);
    let mut build = vec!["corpus".to_string(), "build".into()];
    for p in CORPORA {
        build.extend(["--corpus".into(), s(&fixture(&format!("corpus/{p}")))]);
    }
    for p in DYNAMIC {
        build.extend(["--adapter".into(), s(&fixture(&format!("dynamic/{p}/adapter.toml")))]);
    }
    build.extend(["--out".into(), o.clone()]);
    cli(&build.iter().map(String::as_str).collect::<Vec<_>>())?;

    let corpus = s(&out.join("corpus.jsonl"));
    let dyn_corpus = s(&out.join("dynamic_instances.jsonl"));
    let adapters = DYNAMIC.map(|p| s(&fixture(&format!("dynamic/{p}/adapter.toml")))).join(",");
    let mut preds = String::new();
    for p in DYNAMIC {
        preds.push_str(&fs::read_to_string(fixture(&format!("dynamic/{p}/failure_modes.jsonl"))).unwrap());
    }
    let preds_path = out.join("failure_predictions.jsonl");
    fs::write(&preds_path, preds).unwrap();

    cli(&["eval", "static", "--corpus", &corpus, "--oracle", "--out", &o])?;
    cli(&["corpus", "lint", "--corpus", &corpus, "--out", &o])?;
    let test = s(&fixture("contamination/test"));
    let train = s(&fixture("contamination/train"));
    cli(&["corpus", "contamination", "--corpus", &test, "--train", &train, "--out", &o])?;
    let dyn_out = s(&out.join("failures"));
    cli(&["eval", "dynamic", "--adapter", &adapters, "--corpus", &dyn_corpus, "--predictions", &s(&preds_path), "--out", &dyn_out])?;
    cli(&["eval", "dynamic", "--adapter", &adapters, "--corpus", &dyn_corpus, "--oracle", "--out", &o])?;
    cli(&["report", &s(&out.join("static_report.json")), &s(&out.join("dynamic_report.json")), "--out", &o])?;

    let mut files = BTreeMap::new();
    for entry in walkdir(out) {
        let rel = entry.strip_prefix(out).unwrap().to_string_lossy().into_owned();
        files.insert(rel, fs::read(&entry).unwrap());
    }
    Ok(files)
}

fn walkdir(dir: &Path) -> Vec<PathBuf> {
    let mut out = Vec::new();
    for e in fs::read_dir(dir).unwrap() {
        let p = e.unwrap().path();
        if p.is_dir() {
            out.extend(walkdir(&p));
        } else {
            out.push(p);
        }
    }
    out
}

fn determinism() -> Check {
    let tmp = tempfile::tempdir().map_err(|e| e.to_string())?;
    let a = full_run(&tmp.path().join("a"))?;
    let b = full_run(&tmp.path().join("b"))?;
    ensure!(a.keys().eq(b.keys()), "file sets differ: {:?} vs {:?}", a.keys(), b.keys());
    for (name, bytes) in &a {
        ensure!(*bytes == b[name], "{name} differs between runs");
    }
    Ok(format!("{} output files byte-identical across two runs", a.len()))
}

type Criterion = (&'static str, fn() -> Check);

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("identity suite", identity_suite),
        ("metric oracles", metric_oracles),
        ("level-distance table", level_table),
        ("mask/insert round-trip", round_trip),
        ("bad-pattern lint", lint_exemplars),
        ("contamination", contamination),
        ("dynamic failure modes", failure_modes),
        ("determinism", determinism),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
