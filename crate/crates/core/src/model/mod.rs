//! Log statements, verbosity levels and source units.

pub mod lexer;
mod parse;
mod tokenize;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

pub use parse::{normalize_expr, normalize_ws, parse_log_statement, LogCallParser, LoggerPatterns};
pub use tokenize::{TokenSeq, Tokenizer, WordPunct};

/// Verbosity level of a log statement, ordered by severity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LogLevel {
    Trace,
    Debug,
    Info,
    Warn,
    Error,
    Fatal,
}

impl LogLevel {
    pub const ALL: [LogLevel; 6] = [
        LogLevel::Trace,
        LogLevel::Debug,
        LogLevel::Info,
        LogLevel::Warn,
        LogLevel::Error,
        LogLevel::Fatal,
    ];

    /// Severity rank: trace 0 through fatal 5.
    pub fn ordinal(self) -> u8 {
        match self {
            LogLevel::Trace => 0,
            LogLevel::Debug => 1,
            LogLevel::Info => 2,
            LogLevel::Warn => 3,
            LogLevel::Error => 4,
            LogLevel::Fatal => 5,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            LogLevel::Trace => "trace",
            LogLevel::Debug => "debug",
            LogLevel::Info => "info",
            LogLevel::Warn => "warn",
            LogLevel::Error => "error",
            LogLevel::Fatal => "fatal",
        }
    }
}

impl fmt::Display for LogLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LogLevel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        LogLevel::ALL
            .into_iter()
            .find(|l| l.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownLevel(s.to_string()))
    }
}

/// Absolute severity difference between two levels, in `0..=5`.
pub fn level_distance(predicted: LogLevel, oracle: LogLevel) -> u8 {
    predicted.ordinal().abs_diff(oracle.ordinal())
}

/// Inclusive 1-based line range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Span {
    pub start_line: usize,
    pub end_line: usize,
}

impl Span {
    pub fn new(start_line: usize, end_line: usize) -> Self {
        debug_assert!(start_line >= 1 && end_line >= start_line);
        Span {
            start_line,
            end_line,
        }
    }

    pub fn line_count(&self) -> usize {
        self.end_line - self.start_line + 1
    }

    pub fn shifted(&self, offset: isize) -> Span {
        Span {
            start_line: (self.start_line as isize + offset) as usize,
            end_line: (self.end_line as isize + offset) as usize,
        }
    }
}

/// One piece of the message argument. A plain template is a single
/// literal; string concatenation yields alternating literals and expressions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "text", rename_all = "lowercase")]
pub enum MessagePart {
    /// Literal content without the surrounding quotes.
    Literal(String),
    Expr(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LogStatement {
    /// The call as written, from the receiver through the closing `)` or `;`.
    pub raw_text: String,
    /// Receiver chain, e.g. `LOG` or `this.logger`.
    pub receiver: String,
    /// Member access operator between receiver and method (`.`, `->`, `::`).
    pub accessor: String,
    pub method: String,
    pub level: LogLevel,
    /// Decomposition of the first argument. Empty for a call with no arguments.
    pub message: Vec<MessagePart>,
    /// Template text. Concatenated messages get a `{}` where each expression was.
    pub static_text: String,
    /// Runtime expressions in argument order, as written (trimmed).
    pub dynamic_exprs: Vec<String>,
    pub span: Span,
}

impl LogStatement {
    /// Renders the statement back to call syntax (no trailing `;`).
    pub fn render(&self) -> String {
        let mut args: Vec<String> = Vec::new();
        if !self.message.is_empty() {
            let msg = self
                .message
                .iter()
                .map(|p| match p {
                    MessagePart::Literal(s) => format!("\"{s}\""),
                    MessagePart::Expr(e) => e.clone(),
                })
                .collect::<Vec<_>>()
                .join(" + ");
            args.push(msg);
        }
        args.extend(self.trailing_args().iter().cloned());
        format!(
            "{}{}{}({})",
            self.receiver,
            self.accessor,
            self.method,
            args.join(", ")
        )
    }

    /// Arguments after the message argument.
    pub fn trailing_args(&self) -> &[String] {
        let in_message = self
            .message
            .iter()
            .filter(|p| matches!(p, MessagePart::Expr(_)))
            .count();
        &self.dynamic_exprs[in_message.min(self.dynamic_exprs.len())..]
    }

    /// Dynamic expressions with whitespace normalised at token boundaries.
    pub fn normalized_exprs(&self) -> Vec<String> {
        self.dynamic_exprs.iter().map(|e| normalize_expr(e)).collect()
    }

    /// Level, template and expressions agree after whitespace normalisation.
    /// Receiver naming and source position are ignored.
    pub fn same_structure(&self, other: &LogStatement) -> bool {
        self.level == other.level
            && normalize_ws(&self.static_text) == normalize_ws(&other.static_text)
            && self.normalized_exprs() == other.normalized_exprs()
    }
}

/// A contiguous block of source lines, typically one function.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SourceUnit {
    pub id: String,
    pub lines: Vec<String>,
    pub token_count: usize,
}

impl SourceUnit {
    pub fn new(id: impl Into<String>, lines: Vec<String>, tokenizer: &dyn Tokenizer) -> Self {
        let token_count = tokenizer.tokenize(&lines.join("\n")).len();
        SourceUnit {
            id: id.into(),
            lines,
            token_count,
        }
    }

    pub fn text(&self) -> String {
        self.lines.join("\n")
    }
}

/// Splits text into lines after normalising CRLF and lone CR to LF.
/// A trailing newline does not produce an empty final line.
pub fn split_lines(content: &str) -> Vec<String> {
    let normalized = content.replace("\r\n", "\n").replace('\r', "\n");
    if normalized.is_empty() {
        return Vec::new();
    }
    let mut lines: Vec<String> = normalized.split('\n').map(str::to_string).collect();
    if normalized.ends_with('\n') {
        lines.pop();
    }
    lines
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordinals_follow_severity() {
        let ords: Vec<u8> = LogLevel::ALL.iter().map(|l| l.ordinal()).collect();
        assert_eq!(ords, vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn level_names_parse_case_insensitively() {
        assert_eq!("WARN".parse::<LogLevel>().unwrap(), LogLevel::Warn);
        assert_eq!("Fatal".parse::<LogLevel>().unwrap(), LogLevel::Fatal);
        assert!(matches!(
            "warning".parse::<LogLevel>(),
            Err(Error::UnknownLevel(_))
        ));
        assert!("".parse::<LogLevel>().is_err());
    }

    #[test]
    fn distance_examples() {
        assert_eq!(level_distance(LogLevel::Warn, LogLevel::Warn), 0);
        assert_eq!(level_distance(LogLevel::Error, LogLevel::Warn), 1);
        assert_eq!(level_distance(LogLevel::Fatal, LogLevel::Trace), 5);
    }

    #[test]
    fn split_lines_normalizes_newlines() {
        assert_eq!(split_lines("a\r\nb\n"), vec!["a", "b"]);
        assert_eq!(split_lines("a\n\nb"), vec!["a", "", "b"]);
        assert_eq!(split_lines(""), Vec::<String>::new());
    }

    #[test]
    fn serde_uses_lowercase_level_names() {
        assert_eq!(serde_json::to_string(&LogLevel::Warn).unwrap(), "\"warn\"");
    }
}
