//! Build/test commands for one project, read from a TOML file.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Duration;

use serde::Deserialize;

use super::coverage::CoverageFormat;
use super::logs::{HeaderStripper, DEFAULT_HEADER_PATTERN};
use crate::error::{Error, Result};
use crate::model::{LogCallParser, LogLevel, LoggerPatterns};

fn default_timeout() -> u64 {
    300
}

fn default_header() -> String {
    DEFAULT_HEADER_PATTERN.to_string()
}

/// Every command runs through `sh -c` with the workspace root as working
/// directory. Nothing is inferred from the project layout.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BuildAdapter {
    pub project: String,
    /// Project root. Relative paths are resolved against the adapter file.
    #[serde(default)]
    pub root: PathBuf,
    /// Files or directories (relative to root) scanned for log statements.
    pub sources: Vec<String>,
    pub compile_cmd: String,
    /// Runs a single test; `{test}` is replaced by the test id.
    pub test_cmd: String,
    /// Prints one test id per line. Alternative to `tests`.
    #[serde(default)]
    pub list_tests_cmd: Option<String>,
    #[serde(default)]
    pub tests: Vec<String>,
    /// Clears accumulated coverage counters before each test.
    #[serde(default)]
    pub coverage_reset_cmd: Option<String>,
    /// Turns raw counters into the report, run after each test.
    #[serde(default)]
    pub coverage_cmd: Option<String>,
    pub coverage_report: String,
    #[serde(default)]
    pub coverage_format: CoverageFormat,
    /// File the logger writes to. When unset the test's stdout is used.
    #[serde(default)]
    pub test_log: Option<String>,
    #[serde(default = "default_timeout")]
    pub timeout_s: u64,
    #[serde(default = "default_header")]
    pub header_pattern: String,
    #[serde(default)]
    pub keep_unmatched_lines: bool,
    /// Regex for logger receiver names; the default covers `log`/`LOG`/`logger`.
    #[serde(default)]
    pub receiver_pattern: Option<String>,
    #[serde(default)]
    pub extensions: Option<Vec<String>>,
}

impl BuildAdapter {
    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let mut adapter: BuildAdapter =
            toml::from_str(&text).map_err(|e| Error::Config(format!("{}: {}", path.display(), e.message())))?;
        let base = path.parent().unwrap_or(Path::new("."));
        adapter.root = base.join(&adapter.root);
        adapter.validate()?;
        Ok(adapter)
    }

    pub fn validate(&self) -> Result<()> {
        if !self.test_cmd.contains("{test}") {
            return Err(Error::Config("test_cmd must contain `{test}`".into()));
        }
        if self.list_tests_cmd.is_none() && self.tests.is_empty() {
            return Err(Error::Config("either list_tests_cmd or tests is required".into()));
        }
        if self.sources.is_empty() {
            return Err(Error::Config("sources is empty".into()));
        }
        if self.timeout_s == 0 {
            return Err(Error::Config("timeout_s must be positive".into()));
        }
        self.header()?;
        self.parser()?;
        Ok(())
    }

    pub fn timeout(&self) -> Duration {
        Duration::from_secs(self.timeout_s)
    }

    pub fn test_command(&self, test: &str) -> String {
        self.test_cmd.replace("{test}", test)
    }

    pub fn header(&self) -> Result<HeaderStripper> {
        HeaderStripper::new(&self.header_pattern, self.keep_unmatched_lines)
    }

    pub fn parser(&self) -> Result<LogCallParser> {
        let Some(pattern) = &self.receiver_pattern else {
            return Ok(LogCallParser::default());
        };
        let methods = LogLevel::ALL.iter().map(|l| (l.name().to_string(), *l));
        Ok(LogCallParser::new(LoggerPatterns::new(pattern, methods)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = r#"
project = "demo"
sources = ["src"]
compile_cmd = "make"
test_cmd = "./runner {test}"
tests = ["a"]
coverage_report = "coverage"
"#;

    #[test]
    fn defaults_apply() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("adapter.toml");
        fs::write(&path, MINIMAL).unwrap();
        let a = BuildAdapter::load(&path).unwrap();
        assert_eq!(a.timeout_s, 300);
        assert_eq!(a.coverage_format, CoverageFormat::Gcov);
        assert_eq!(a.root, dir.path().join(""));
        assert_eq!(a.test_command("t1"), "./runner t1");
    }

    #[test]
    fn rejects_bad_config() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("adapter.toml");
        fs::write(&path, MINIMAL.replace("{test}", "")).unwrap();
        assert!(matches!(BuildAdapter::load(&path), Err(Error::Config(_))));
        fs::write(&path, format!("{MINIMAL}\nbogus = 1\n")).unwrap();
        assert!(matches!(BuildAdapter::load(&path), Err(Error::Config(_))));
    }
}
