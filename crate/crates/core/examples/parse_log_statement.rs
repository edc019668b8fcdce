// Split a logging call into level, template and runtime expressions.
//
//     cargo run --example parse_log_statement

use logbench::model::{parse_log_statement, LogLevel};

pub fn run_example() {
    let stmt = parse_log_statement(
        r#"log.info("The server run on the ports, {}", args.status ? localPort : remotePort);"#,
    )
    .expect("valid call");
    println!("level        {}", stmt.level);
    println!("template     {}", stmt.static_text);
    println!("expressions  {:?}", stmt.dynamic_exprs);
    assert_eq!(stmt.level, LogLevel::Info);
    assert_eq!(stmt.dynamic_exprs, vec!["args.status ? localPort : remotePort"]);

    // Concatenation is the older spelling of the same template.
    let concat = parse_log_statement(r#"LOG.warn("Took " + (end - start) + " ms for " + name);"#).unwrap();
    println!("concat       {:?} {:?}", concat.static_text, concat.dynamic_exprs);
    assert_eq!(concat.static_text, "Took {} ms for {}");

    // Multi-line calls and C++ accessors parse the same way.
    let cpp = parse_log_statement("logger->error(\"x {} y {}\",\n    a, b+c);").unwrap();
    println!("cpp          {} -> {:?} (lines {}..={})", cpp.render(), cpp.dynamic_exprs, cpp.span.start_line, cpp.span.end_line);
    assert_eq!(cpp.dynamic_exprs, vec!["a", "b+c"]);

    for bad in ["System.out.println(x);", "log.info(\"unterminated);"] {
        println!("rejected     {bad:<28} {}", parse_log_statement(bad).unwrap_err().code());
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
