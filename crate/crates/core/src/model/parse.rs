use std::sync::OnceLock;

use regex::Regex;

use super::lexer::{lex, Token, TokenKind};
use super::{LogLevel, LogStatement, MessagePart, Span};
use crate::error::{Error, Result};

const DEFAULT_RECEIVER: &str = "^(log|LOG|logger|Logger|LOGGER)$";
const ACCESSORS: [&str; 3] = [".", "->", "::"];

/// Which calls count as log statements: a receiver-name pattern plus a
/// method-name to level table.
#[derive(Debug, Clone)]
pub struct LoggerPatterns {
    receiver: Regex,
    methods: Vec<(String, LogLevel)>,
}

impl Default for LoggerPatterns {
    fn default() -> Self {
        LoggerPatterns {
            receiver: Regex::new(DEFAULT_RECEIVER).expect("default receiver pattern"),
            methods: LogLevel::ALL
                .iter()
                .map(|l| (l.name().to_string(), *l))
                .collect(),
        }
    }
}

impl LoggerPatterns {
    pub fn new(
        receiver_pattern: &str,
        methods: impl IntoIterator<Item = (String, LogLevel)>,
    ) -> Result<Self> {
        let receiver = Regex::new(receiver_pattern)
            .map_err(|e| Error::Config(format!("receiver pattern: {e}")))?;
        let methods: Vec<_> = methods.into_iter().collect();
        if methods.is_empty() {
            return Err(Error::Config("no logger methods configured".into()));
        }
        Ok(LoggerPatterns { receiver, methods })
    }

    pub fn matches_receiver(&self, name: &str) -> bool {
        self.receiver.is_match(name)
    }

    pub fn level_for_method(&self, method: &str) -> Option<LogLevel> {
        self.methods
            .iter()
            .find(|(m, _)| m == method)
            .map(|(_, l)| *l)
    }
}

/// A logger call located in a token stream. Indices point into that stream.
#[derive(Debug, Clone)]
pub(crate) struct CallSite {
    pub chain_start: usize,
    pub receiver: usize,
    pub method: usize,
    pub open_paren: usize,
    pub close_paren: usize,
    /// Last token of the statement: the `;` if present, else the `)`.
    pub last: usize,
    pub level: LogLevel,
}

impl CallSite {
    pub fn has_semicolon(&self) -> bool {
        self.last != self.close_paren
    }
}

#[derive(Debug, Clone, Default)]
pub struct LogCallParser {
    patterns: LoggerPatterns,
}

impl LogCallParser {
    pub fn new(patterns: LoggerPatterns) -> Self {
        LogCallParser { patterns }
    }

    pub fn patterns(&self) -> &LoggerPatterns {
        &self.patterns
    }

    /// Parses text holding exactly one logger call, optionally followed by
    /// `;` and surrounded by whitespace or comments.
    pub fn parse(&self, text: &str) -> Result<LogStatement> {
        let tokens = lex(text)?;
        let calls = self.find_calls(text, &tokens)?;
        let call = match calls.as_slice() {
            [only] if only.chain_start == 0 && only.last + 1 == tokens.len() => only,
            _ => {
                let preview: String = text.trim().chars().take(80).collect();
                return Err(Error::NotALogStatement(preview));
            }
        };
        let line_count = text.trim().lines().count().max(1);
        Ok(self.build(text, &tokens, call, Span::new(1, line_count)))
    }

    /// Locates every logger call in `tokens`. Calls nested inside another
    /// call's arguments are not reported separately.
    pub(crate) fn find_calls(&self, src: &str, tokens: &[Token]) -> Result<Vec<CallSite>> {
        let mut calls = Vec::new();
        let mut i = 0;
        while i + 3 < tokens.len() {
            let Some((method_level, open)) = self.call_head(src, tokens, i) else {
                i += 1;
                continue;
            };
            let close = matching_close(src, tokens, open).ok_or_else(|| {
                Error::Syntax(format!(
                    "unbalanced parentheses in logger call on line {}",
                    tokens[i].line
                ))
            })?;
            let mut chain_start = i;
            while chain_start >= 2
                && tokens[chain_start - 2].kind == TokenKind::Ident
                && ACCESSORS
                    .iter()
                    .any(|a| tokens[chain_start - 1].is_punct(src, a))
            {
                chain_start -= 2;
            }
            let last = match tokens.get(close + 1) {
                Some(t) if t.is_punct(src, ";") => close + 1,
                _ => close,
            };
            calls.push(CallSite {
                chain_start,
                receiver: i,
                method: i + 2,
                open_paren: open,
                close_paren: close,
                last,
                level: method_level,
            });
            i = last + 1;
        }
        Ok(calls)
    }

    fn call_head(&self, src: &str, tokens: &[Token], i: usize) -> Option<(LogLevel, usize)> {
        let recv = tokens[i];
        let acc = tokens[i + 1];
        let method = tokens[i + 2];
        let paren = tokens[i + 3];
        if recv.kind != TokenKind::Ident
            || method.kind != TokenKind::Ident
            || !paren.is_punct(src, "(")
            || !ACCESSORS.iter().any(|a| acc.is_punct(src, a))
            || !self.patterns.matches_receiver(recv.text(src))
        {
            return None;
        }
        let level = self.patterns.level_for_method(method.text(src))?;
        Some((level, i + 3))
    }

    pub(crate) fn build(
        &self,
        src: &str,
        tokens: &[Token],
        call: &CallSite,
        span: Span,
    ) -> LogStatement {
        let slice = |a: usize, b: usize| &src[tokens[a].start..tokens[b].end];
        let args = split_top_level(src, tokens, call.open_paren + 1, call.close_paren, ",");

        let mut message = Vec::new();
        let mut static_text = String::new();
        let mut dynamic_exprs = Vec::new();

        if let Some(&(a, b)) = args.first() {
            let parts = split_top_level(src, tokens, a, b, "+");
            let literal_of = |(pa, pb): (usize, usize)| -> Option<String> {
                (pa + 1 == pb && matches!(tokens[pa].kind, TokenKind::Str | TokenKind::Char))
                    .then(|| literal_content(tokens[pa].text(src)))
            };
            if parts.iter().any(|&p| literal_of(p).is_some()) {
                for &(pa, pb) in parts.iter().filter(|(pa, pb)| pa < pb) {
                    match literal_of((pa, pb)) {
                        Some(content) => {
                            static_text.push_str(&content);
                            message.push(MessagePart::Literal(content));
                        }
                        None => {
                            let expr = slice(pa, pb - 1).to_string();
                            static_text.push_str("{}");
                            dynamic_exprs.push(expr.clone());
                            message.push(MessagePart::Expr(expr));
                        }
                    }
                }
            } else if a < b {
                let expr = slice(a, b - 1).to_string();
                dynamic_exprs.push(expr.clone());
                message.push(MessagePart::Expr(expr));
            }
        }
        for &(a, b) in args.iter().skip(1) {
            if a < b {
                dynamic_exprs.push(slice(a, b - 1).to_string());
            }
        }

        LogStatement {
            raw_text: slice(call.chain_start, call.last).to_string(),
            receiver: slice(call.chain_start, call.receiver).to_string(),
            accessor: tokens[call.receiver + 1].text(src).to_string(),
            method: tokens[call.method].text(src).to_string(),
            level: call.level,
            message,
            static_text,
            dynamic_exprs,
            span,
        }
    }
}

fn default_parser() -> &'static LogCallParser {
    static PARSER: OnceLock<LogCallParser> = OnceLock::new();
    PARSER.get_or_init(LogCallParser::default)
}

/// Parses one logger call with the default receiver and method patterns.
pub fn parse_log_statement(text: &str) -> Result<LogStatement> {
    default_parser().parse(text)
}

fn is_open(src: &str, t: &Token) -> bool {
    t.kind == TokenKind::Punct && matches!(t.text(src), "(" | "[" | "{")
}

fn is_close(src: &str, t: &Token) -> bool {
    t.kind == TokenKind::Punct && matches!(t.text(src), ")" | "]" | "}")
}

fn matching_close(src: &str, tokens: &[Token], open: usize) -> Option<usize> {
    let mut depth = 0usize;
    for (idx, t) in tokens.iter().enumerate().skip(open) {
        if is_open(src, t) {
            depth += 1;
        } else if is_close(src, t) {
            depth = depth.checked_sub(1)?;
            if depth == 0 {
                return Some(idx);
            }
        }
    }
    None
}

/// Splits `tokens[from..to]` at depth-0 separators into half-open ranges.
/// A ternary `?:` and arithmetic stay inside a single range.
fn split_top_level(
    src: &str,
    tokens: &[Token],
    from: usize,
    to: usize,
    sep: &str,
) -> Vec<(usize, usize)> {
    if from >= to {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = from;
    for (idx, t) in tokens.iter().enumerate().take(to).skip(from) {
        if is_open(src, t) {
            depth += 1;
        } else if is_close(src, t) {
            depth -= 1;
        } else if depth == 0 && t.is_punct(src, sep) {
            out.push((start, idx));
            start = idx + 1;
        }
    }
    out.push((start, to));
    out
}

fn literal_content(lit: &str) -> String {
    if let Some(inner) = lit.strip_prefix("\"\"\"").and_then(|s| s.strip_suffix("\"\"\"")) {
        return inner.to_string();
    }
    if !lit.starts_with('"') {
        // C++ raw string: R"delim( ... )delim"
        if let (Some(q), Some(p)) = (lit.find('"'), lit.find('(')) {
            let delim = &lit[q + 1..p];
            let tail = format!("){delim}\"");
            if let Some(body) = lit[p + 1..].strip_suffix(tail.as_str()) {
                return body.to_string();
            }
        }
    }
    lit.get(1..lit.len().saturating_sub(1))
        .unwrap_or_default()
        .to_string()
}

/// Collapses whitespace runs to one space and trims.
pub fn normalize_ws(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}

/// Canonical spelling of an expression: its lexical tokens joined by single
/// spaces, so `b+c` and `b + c` compare equal.
pub fn normalize_expr(s: &str) -> String {
    match lex(s) {
        Ok(tokens) => tokens
            .iter()
            .map(|t| t.text(s))
            .collect::<Vec<_>>()
            .join(" "),
        Err(_) => normalize_ws(s),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ternary_is_one_dynamic_unit() {
        let s = parse_log_statement(
            r#"log.info("The server run on the ports, {}", args.status ? localPort : remotePort)"#,
        )
        .unwrap();
        assert_eq!(s.level, LogLevel::Info);
        assert_eq!(s.static_text, "The server run on the ports, {}");
        assert_eq!(s.dynamic_exprs, vec!["args.status ? localPort : remotePort"]);
    }

    #[test]
    fn no_arguments_beyond_message() {
        let s = parse_log_statement(r#"log.warn("startup")"#).unwrap();
        assert_eq!(s.level, LogLevel::Warn);
        assert_eq!(s.static_text, "startup");
        assert!(s.dynamic_exprs.is_empty());
    }

    #[test]
    fn composite_argument_stays_intact() {
        let s = parse_log_statement(r#"log.error("x {} y {}", a, b+c)"#).unwrap();
        assert_eq!(s.dynamic_exprs, vec!["a", "b+c"]);
    }

    #[test]
    fn concatenation_becomes_template() {
        let s = parse_log_statement(r#"LOG.debug("Loaded " + count + " rows from " + table);"#)
            .unwrap();
        assert_eq!(s.static_text, "Loaded {} rows from {}");
        assert_eq!(s.dynamic_exprs, vec!["count", "table"]);
        assert_eq!(s.raw_text, r#"LOG.debug("Loaded " + count + " rows from " + table);"#);
    }

    #[test]
    fn parenthesised_sum_in_concatenation_is_one_unit() {
        let s = parse_log_statement(r#"log.info("total " + (a + b), extra)"#).unwrap();
        assert_eq!(s.static_text, "total {}");
        assert_eq!(s.dynamic_exprs, vec!["(a + b)", "extra"]);
        assert_eq!(s.trailing_args(), ["extra".to_string()]);
    }

    #[test]
    fn arithmetic_message_without_literal_is_dynamic() {
        let s = parse_log_statement("logger.info(a + b)").unwrap();
        assert_eq!(s.static_text, "");
        assert_eq!(s.dynamic_exprs, vec!["a + b"]);
    }

    #[test]
    fn qualified_receivers_and_arrows() {
        let s = parse_log_statement(r#"this.logger.info("hi")"#).unwrap();
        assert_eq!(s.receiver, "this.logger");
        let s = parse_log_statement(r#"logger->error("bad {}", x);"#).unwrap();
        assert_eq!(s.accessor, "->");
        assert_eq!(s.level, LogLevel::Error);
    }

    #[test]
    fn multiline_statement_spans_all_lines() {
        let s = parse_log_statement("LOG.info(\"a {} {}\",\n    first,\n    second);").unwrap();
        assert_eq!(s.span, Span::new(1, 3));
        assert_eq!(s.dynamic_exprs, vec!["first", "second"]);
    }

    #[test]
    fn lambda_and_generic_call_arguments() {
        let s = parse_log_statement(
            r#"log.debug("keys {}", map.keySet().stream().map(k -> k.name()).collect(toList()))"#,
        )
        .unwrap();
        assert_eq!(s.dynamic_exprs.len(), 1);
    }

    #[test]
    fn rejects_other_calls() {
        assert!(matches!(
            parse_log_statement(r#"System.out.println("x")"#),
            Err(Error::NotALogStatement(_))
        ));
        assert!(matches!(
            parse_log_statement(r#"log.notice("x")"#),
            Err(Error::NotALogStatement(_))
        ));
        assert!(matches!(
            parse_log_statement(r#"metrics.info("x")"#),
            Err(Error::NotALogStatement(_))
        ));
        assert!(matches!(
            parse_log_statement(r#"log.info("x"); foo();"#),
            Err(Error::NotALogStatement(_))
        ));
    }

    #[test]
    fn unbalanced_delimiters_are_syntax_errors() {
        assert!(matches!(
            parse_log_statement(r#"log.info("x {}", f(a)"#),
            Err(Error::Syntax(_))
        ));
        assert!(matches!(
            parse_log_statement(r#"log.info("unterminated)"#),
            Err(Error::Syntax(_))
        ));
    }

    #[test]
    fn custom_patterns() {
        let patterns = LoggerPatterns::new(
            "^(audit)$",
            [("note".to_string(), LogLevel::Info)],
        )
        .unwrap();
        let parser = LogCallParser::new(patterns);
        let s = parser.parse(r#"audit.note("hello")"#).unwrap();
        assert_eq!(s.level, LogLevel::Info);
        assert!(parser.parse(r#"log.info("hello")"#).is_err());
    }

    #[test]
    fn render_reparses_to_same_structure() {
        for text in [
            r#"log.info("The server run on the ports, {}", args.status ? localPort : remotePort)"#,
            r#"LOG.debug("Loaded " + count + " rows")"#,
            r#"logger.info(msg)"#,
            r#"log.warn()"#,
        ] {
            let s = parse_log_statement(text).unwrap();
            let again = parse_log_statement(&s.render()).unwrap();
            assert!(s.same_structure(&again), "{text} -> {}", s.render());
            assert_eq!(normalize_ws(&s.render()), normalize_ws(text));
        }
    }

    #[test]
    fn expression_normalisation_ignores_operator_spacing() {
        assert_eq!(normalize_expr("b+c"), normalize_expr("b  +\n c"));
        assert_ne!(normalize_expr("a"), normalize_expr("b"));
    }
}
