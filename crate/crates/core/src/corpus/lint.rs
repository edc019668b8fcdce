//! Bad logging pattern detectors.

use std::collections::HashMap;
use std::fmt;

use regex::Regex;
use serde::{Deserialize, Serialize};

use crate::model::lexer::{lex, TokenKind};
use crate::model::{normalize_expr, LogLevel, LogStatement, MessagePart};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum BadPattern {
    DuplicatedVariable,
    EmptyString,
    UnpredictableCharacter,
    /// Advisory: keyword heuristic, not a proof of a wrong level.
    WrongVerbosityLevel,
    ExplicitCast,
}

impl BadPattern {
    pub const ALL: [BadPattern; 5] = [
        BadPattern::DuplicatedVariable,
        BadPattern::EmptyString,
        BadPattern::UnpredictableCharacter,
        BadPattern::WrongVerbosityLevel,
        BadPattern::ExplicitCast,
    ];
}

impl fmt::Display for BadPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BadPatternFinding {
    pub instance_id: String,
    pub pattern: BadPattern,
    /// Offending substring of the statement's raw text.
    pub evidence: String,
}

#[derive(Debug, Clone)]
pub struct LintConfig {
    pub error_keywords: Regex,
    /// Levels at or below this one are suspicious for error-keyword messages.
    pub keyword_level_ceiling: LogLevel,
    /// Minimum run of consecutive special characters that counts.
    pub special_run: usize,
}

impl Default for LintConfig {
    fn default() -> Self {
        LintConfig {
            error_keywords: Regex::new(r"(?i)\b(fail|error|exception|crash)").expect("keyword regex"),
            keyword_level_ceiling: LogLevel::Info,
            special_run: 3,
        }
    }
}

const CPP_CASTS: [&str; 4] = ["static_cast", "dynamic_cast", "reinterpret_cast", "const_cast"];

/// Runs every detector; reports at most one finding per pattern, in
/// declaration order of [`BadPattern`].
pub fn lint_bad_patterns(
    instance_id: &str,
    stmt: &LogStatement,
    config: &LintConfig,
) -> Vec<BadPatternFinding> {
    let mut found: Vec<(BadPattern, String)> = Vec::new();

    if let Some(dup) = duplicated_expr(stmt) {
        found.push((BadPattern::DuplicatedVariable, dup));
    }
    if stmt.static_text.trim().is_empty() && stmt.dynamic_exprs.is_empty() {
        let evidence = match stmt.message.first() {
            Some(MessagePart::Literal(s)) => format!("\"{s}\""),
            _ => "()".to_string(),
        };
        found.push((BadPattern::EmptyString, evidence));
    }
    if let Some(run) = literals(stmt).find_map(|lit| special_run(lit, config.special_run)) {
        found.push((BadPattern::UnpredictableCharacter, run));
    }
    if stmt.level <= config.keyword_level_ceiling {
        if let Some(m) = literals(stmt).find_map(|lit| config.error_keywords.find(lit)) {
            found.push((BadPattern::WrongVerbosityLevel, m.as_str().to_string()));
        }
    }
    if let Some(cast) = stmt.dynamic_exprs.iter().find_map(|e| find_cast(e)) {
        found.push((BadPattern::ExplicitCast, cast));
    }

    found
        .into_iter()
        .map(|(pattern, evidence)| BadPatternFinding {
            instance_id: instance_id.to_string(),
            pattern,
            evidence,
        })
        .collect()
}

fn literals(stmt: &LogStatement) -> impl Iterator<Item = &str> {
    stmt.message.iter().filter_map(|p| match p {
        MessagePart::Literal(s) => Some(s.as_str()),
        MessagePart::Expr(_) => None,
    })
}

fn duplicated_expr(stmt: &LogStatement) -> Option<String> {
    let mut seen: HashMap<String, usize> = HashMap::new();
    for (i, e) in stmt.dynamic_exprs.iter().enumerate() {
        let key = normalize_expr(e);
        if let Some(&first) = seen.get(&key) {
            return Some(stmt.dynamic_exprs[first].clone());
        }
        seen.insert(key, i);
    }
    None
}

/// First control character (raw or escaped) or run of `min_run` consecutive
/// non-alphanumeric, non-space characters. `{}` placeholders break runs.
fn special_run(lit: &str, min_run: usize) -> Option<String> {
    let chars: Vec<(usize, char)> = lit.char_indices().collect();
    let end_of = |k: usize| chars.get(k).map_or(lit.len(), |(b, _)| *b);
    let mut run_start: Option<usize> = None;
    let mut run_len = 0;
    let mut k = 0;
    while k < chars.len() {
        let (byte, c) = chars[k];
        let mut width = 1;
        let special = if c.is_control() {
            return Some(c.to_string());
        } else if c == '\\' && k + 1 < chars.len() {
            let next = chars[k + 1].1;
            if matches!(next, 'n' | 't' | 'r' | 'b' | 'f' | '0') {
                return Some(lit[byte..end_of(k + 2)].to_string());
            }
            if next == 'u' {
                let hex: String = chars.iter().skip(k + 2).take(4).map(|(_, c)| *c).collect();
                if u32::from_str_radix(&hex, 16).is_ok_and(|v| v < 0x20) {
                    return Some(lit[byte..end_of(k + 6)].to_string());
                }
            }
            width = 2;
            true
        } else if c == '{' && chars.get(k + 1).map(|(_, c)| *c) == Some('}') {
            width = 2;
            false
        } else {
            !c.is_alphanumeric() && !c.is_whitespace() && c != '_'
        };

        if special {
            run_start.get_or_insert(byte);
            run_len += 1;
            if run_len >= min_run {
                // extend to the end of the run for the evidence
                let mut j = k + width;
                while j < chars.len() {
                    let c = chars[j].1;
                    let brace_pair = c == '{' && chars.get(j + 1).map(|(_, c)| *c) == Some('}');
                    if c.is_alphanumeric() || c.is_whitespace() || c == '_' || brace_pair || c.is_control() {
                        break;
                    }
                    j += 1;
                }
                return Some(lit[run_start.unwrap()..end_of(j)].to_string());
            }
        } else {
            run_start = None;
            run_len = 0;
        }
        k += width;
    }
    None
}

/// A syntactic cast inside an expression: `(Type) operand` or a C++
/// `*_cast<Type>(operand)`. Returns the cast text.
fn find_cast(expr: &str) -> Option<String> {
    let tokens = lex(expr).ok()?;
    let text = |i: usize| tokens[i].text(expr);
    for i in 0..tokens.len() {
        let t = &tokens[i];
        if t.kind == TokenKind::Ident && CPP_CASTS.contains(&text(i)) {
            let mut depth = 0;
            for j in i + 1..tokens.len() {
                match text(j) {
                    "(" => depth += 1,
                    ")" => {
                        depth -= 1;
                        if depth == 0 {
                            return Some(expr[t.start..tokens[j].end].to_string());
                        }
                    }
                    _ => {}
                }
            }
            return Some(expr[t.start..].to_string());
        }
        if text(i) != "(" || t.kind != TokenKind::Punct {
            continue;
        }
        // a call's argument list, not a cast
        if i > 0 && (tokens[i - 1].kind == TokenKind::Ident || matches!(text(i - 1), ")" | "]" | ">")) {
            continue;
        }
        let mut j = i + 1;
        let mut saw_type = false;
        while j < tokens.len() {
            match (tokens[j].kind, text(j)) {
                (TokenKind::Ident, _) if !saw_type || matches!(text(j - 1), "." | "::") => {
                    saw_type = true
                }
                (TokenKind::Punct, "." | "::") if saw_type => {}
                (TokenKind::Punct, "[") if saw_type && tokens.get(j + 1).is_some_and(|n| n.text(expr) == "]") => {
                    j += 1
                }
                (TokenKind::Punct, "<" | ">" | "," | "?") if saw_type => {}
                (TokenKind::Ident, _) if saw_type && matches!(text(j - 1), "<" | ",") => {}
                _ => break,
            }
            j += 1;
        }
        if !saw_type || j >= tokens.len() || text(j) != ")" {
            continue;
        }
        let Some(operand) = tokens.get(j + 1) else { continue };
        let operand_ok = matches!(
            operand.kind,
            TokenKind::Ident | TokenKind::Number | TokenKind::Str | TokenKind::Char
        ) || operand.text(expr) == "(";
        if operand_ok {
            return Some(expr[t.start..operand.end].to_string());
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::parse_log_statement;

    fn patterns(text: &str) -> Vec<BadPattern> {
        let stmt = parse_log_statement(text).unwrap();
        let findings = lint_bad_patterns("t", &stmt, &LintConfig::default());
        for f in &findings {
            assert!(stmt.raw_text.contains(&f.evidence), "{} not in {}", f.evidence, stmt.raw_text);
        }
        findings.into_iter().map(|f| f.pattern).collect()
    }

    #[test]
    fn duplicated_variable() {
        assert_eq!(patterns(r#"log.info("x {} {}", a, a)"#), vec![BadPattern::DuplicatedVariable]);
        assert_eq!(patterns(r#"log.info("x {} {}", a.b(), a . b())"#), vec![BadPattern::DuplicatedVariable]);
    }

    #[test]
    fn empty_string() {
        assert_eq!(patterns(r#"log.warn("")"#), vec![BadPattern::EmptyString]);
        assert_eq!(patterns(r#"log.warn("   ")"#), vec![BadPattern::EmptyString]);
        assert_eq!(patterns("log.warn()"), vec![BadPattern::EmptyString]);
    }

    #[test]
    fn clean_statement() {
        assert!(patterns(r#"log.info("ok {}", count)"#).is_empty());
        assert!(patterns(r#"log.error("Failed to open {}", path)"#).is_empty());
        assert!(patterns(r#"log.info("Ratio a/b is {}", r)"#).is_empty());
    }

    #[test]
    fn unpredictable_characters() {
        assert_eq!(patterns(r#"log.debug("====== {} ======", s)"#), vec![BadPattern::UnpredictableCharacter]);
        assert_eq!(patterns(r#"log.debug("line\tvalue {}", s)"#), vec![BadPattern::UnpredictableCharacter]);
        // placeholders separate runs
        assert!(patterns(r#"log.debug("{}:{}", a, b)"#).is_empty());
    }

    #[test]
    fn wrong_verbosity_keyword() {
        assert_eq!(patterns(r#"log.info("Failed to connect {}", host)"#), vec![BadPattern::WrongVerbosityLevel]);
        assert_eq!(patterns(r#"log.debug("got exception")"#), vec![BadPattern::WrongVerbosityLevel]);
        assert!(patterns(r#"log.warn("Failed to connect {}", host)"#).is_empty());
        assert!(patterns(r#"log.info("Terror mode")"#).is_empty());
    }

    #[test]
    fn explicit_casts() {
        assert_eq!(patterns(r#"log.info("progress {}", (int) progress)"#), vec![BadPattern::ExplicitCast]);
        assert_eq!(patterns(r#"log.info("v {}", ((Node) obj).name())"#), vec![BadPattern::ExplicitCast]);
        assert_eq!(patterns(r#"log.info("v {}", static_cast<int>(x))"#), vec![BadPattern::ExplicitCast]);
        assert_eq!(patterns(r#"log.info("v {}", (java.util.List<String>) x)"#), vec![BadPattern::ExplicitCast]);
        assert!(patterns(r#"log.info("v {}", (a) + b)"#).is_empty());
        assert!(patterns(r#"log.info("v {}", f(a) * (b + c))"#).is_empty());
    }

    #[test]
    fn evidence_for_cast() {
        let stmt = parse_log_statement(r#"log.info("p {}", (int) progress)"#).unwrap();
        let f = lint_bad_patterns("i", &stmt, &LintConfig::default());
        assert_eq!(f[0].evidence, "(int) progress");
        assert_eq!(f[0].instance_id, "i");
    }
}
