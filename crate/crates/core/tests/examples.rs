//! Every example must keep running.

macro_rules! example {
    ($name:ident) => {
        #[allow(dead_code)]
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", stringify!($name), ".rs"));
        }

        #[test]
        fn $name() {
            $name::run_example();
        }
    };
}

example!(parse_log_statement);
example!(build_corpus);
example!(lint_bad_patterns);
example!(contamination);
example!(text_metrics);
example!(static_eval);
example!(dynamic_eval);
example!(qualify_repo);
