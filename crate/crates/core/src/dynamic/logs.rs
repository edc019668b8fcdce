//! Turning raw test output into comparable log bodies.

use regex::Regex;

use crate::error::{Error, Result};

/// Timestamp, optional thread, level tag, optional thread, optional
/// `logger.name -` prefix. Covers the usual log4j/logback/spdlog layouts.
pub const DEFAULT_HEADER_PATTERN: &str = concat!(
    r"^\s*",
    r"(?:\[?\d{4}-\d{2}-\d{2}[T ]\d{2}:\d{2}:\d{2}(?:[.,]\d+)?(?:Z|[+-]\d{2}:?\d{2})?\]?\s+)?",
    r"(?:\[[^\]]*\]\s+)?",
    r"(?:\[(?i:trace|debug|info|warn|warning|error|fatal)\]|(?:TRACE|DEBUG|INFO|WARN|WARNING|ERROR|FATAL):?)\s+",
    r"(?:\[[^\]]*\]\s+)?",
    r"(?:[\w.$:]+\s+-\s+)?",
);

/// Strips log headers and drops lines that are not log output.
#[derive(Debug, Clone)]
pub struct HeaderStripper {
    pattern: Regex,
    keep_unmatched: bool,
}

impl Default for HeaderStripper {
    fn default() -> Self {
        HeaderStripper::new(DEFAULT_HEADER_PATTERN, false).expect("default pattern compiles")
    }
}

impl HeaderStripper {
    /// `pattern` should be anchored at the start of the line. With
    /// `keep_unmatched` off, lines without a header are treated as test
    /// runner noise and dropped from the body.
    pub fn new(pattern: &str, keep_unmatched: bool) -> Result<Self> {
        let pattern = Regex::new(pattern)
            .map_err(|e| Error::Config(format!("header pattern: {e}")))?;
        Ok(HeaderStripper {
            pattern,
            keep_unmatched,
        })
    }

    fn header_len(&self, line: &str) -> usize {
        self.pattern
            .find(line)
            .filter(|m| m.start() == 0)
            .map_or(0, |m| m.end())
    }

    /// Removes header prefixes until none is left, so stripping is idempotent.
    pub fn strip<'a>(&self, mut line: &'a str) -> &'a str {
        loop {
            let n = self.header_len(line);
            if n == 0 {
                return line;
            }
            line = &line[n..];
        }
    }

    /// Header-stripped log lines of a captured output, in order.
    pub fn body(&self, output: &str) -> Vec<String> {
        output
            .lines()
            .filter_map(|line| {
                let line = line.trim_end_matches('\r');
                if self.header_len(line) > 0 {
                    Some(self.strip(line).trim_end().to_string())
                } else if self.keep_unmatched && !line.trim().is_empty() {
                    Some(line.trim_end().to_string())
                } else {
                    None
                }
            })
            .collect()
    }
}

/// Lines of `run` left after removing one occurrence per line of `baseline`.
pub fn excess_lines(run: &[String], baseline: &[String]) -> Vec<String> {
    let mut budget: std::collections::HashMap<&str, usize> = std::collections::HashMap::new();
    for l in baseline {
        *budget.entry(l).or_default() += 1;
    }
    run.iter()
        .filter(|l| match budget.get_mut(l.as_str()) {
            Some(n) if *n > 0 => {
                *n -= 1;
                false
            }
            _ => true,
        })
        .cloned()
        .collect()
}
