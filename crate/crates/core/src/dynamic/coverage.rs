//! Line-coverage readers: gcov text output and JaCoCo XML.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::Path;

use quick_xml::events::Event;
use quick_xml::Reader;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CoverageFormat {
    /// `*.gcov` files; the report path may be a file or a directory of them.
    #[default]
    Gcov,
    /// A JaCoCo `report.xml`.
    Jacoco,
}

/// Covered lines per source file, as named by the report.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LineCoverage {
    pub files: BTreeMap<String, BTreeSet<usize>>,
}

/// `a` and `b` name the same file if one is a `/`-aligned suffix of the other.
fn same_file(a: &str, b: &str) -> bool {
    let a = a.trim_start_matches("./");
    let b = b.trim_start_matches("./");
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    long.ends_with(short) && (long.len() == short.len() || long.as_bytes()[long.len() - short.len() - 1] == b'/')
}

impl LineCoverage {
    fn lines_for<'a>(&'a self, rel_path: &'a str) -> impl Iterator<Item = &'a BTreeSet<usize>> + 'a {
        self.files
            .iter()
            .filter(move |(f, _)| same_file(f, rel_path))
            .map(|(_, l)| l)
    }

    pub fn is_covered(&self, rel_path: &str, line: usize) -> bool {
        self.lines_for(rel_path).any(|l| l.contains(&line))
    }

    /// Any line in the inclusive range executed.
    pub fn any_covered(&self, rel_path: &str, start: usize, end: usize) -> bool {
        self.lines_for(rel_path).any(|l| l.range(start..=end).next().is_some())
    }

    pub fn is_empty(&self) -> bool {
        self.files.values().all(BTreeSet::is_empty)
    }
}

pub fn read_coverage(path: &Path, format: CoverageFormat) -> Result<LineCoverage> {
    if !path.exists() {
        return Err(Error::NoCoverageReport(path.to_path_buf()));
    }
    match format {
        CoverageFormat::Gcov => {
            let mut cov = LineCoverage::default();
            let files = if path.is_dir() {
                let mut v: Vec<_> = fs::read_dir(path)
                    .map_err(|e| Error::io(path, e))?
                    .filter_map(|e| e.ok().map(|e| e.path()))
                    .filter(|p| p.extension().is_some_and(|x| x == "gcov"))
                    .collect();
                v.sort();
                v
            } else {
                vec![path.to_path_buf()]
            };
            if files.is_empty() {
                return Err(Error::NoCoverageReport(path.to_path_buf()));
            }
            for f in files {
                let text = fs::read_to_string(&f).map_err(|e| Error::io(&f, e))?;
                let (source, lines) = parse_gcov(&text).map_err(|message| Error::CoverageFormat {
                    path: f.clone(),
                    message,
                })?;
                cov.files.entry(source).or_default().extend(lines);
            }
            Ok(cov)
        }
        CoverageFormat::Jacoco => {
            let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
            parse_jacoco(&text).map_err(|message| Error::CoverageFormat {
                path: path.to_path_buf(),
                message,
            })
        }
    }
}

/// Parses one `.gcov` file into its source name and executed lines.
pub fn parse_gcov(text: &str) -> std::result::Result<(String, BTreeSet<usize>), String> {
    let mut source = None;
    let mut covered = BTreeSet::new();
    for (i, raw) in text.lines().enumerate() {
        let mut fields = raw.splitn(3, ':');
        let (Some(count), Some(line_no)) = (fields.next(), fields.next()) else {
            continue;
        };
        let rest = fields.next().unwrap_or("");
        let line_no: usize = match line_no.trim().parse() {
            Ok(n) => n,
            // function/branch summary lines have other shapes
            Err(_) => continue,
        };
        let count = count.trim();
        if line_no == 0 {
            if let Some(src) = rest.strip_prefix("Source:") {
                source = Some(src.trim().to_string());
            }
            continue;
        }
        match count {
            "-" | "#####" | "=====" => {}
            c => {
                let digits = c.trim_end_matches('*');
                let n: u64 = digits
                    .parse()
                    .map_err(|_| format!("line {}: bad execution count `{c}`", i + 1))?;
                if n > 0 {
                    covered.insert(line_no);
                }
            }
        }
    }
    let source = source.ok_or_else(|| "missing `Source:` header".to_string())?;
    Ok((source, covered))
}

/// Parses a JaCoCo XML report. A line is covered when `ci > 0`.
pub fn parse_jacoco(xml: &str) -> std::result::Result<LineCoverage, String> {
    let mut reader = Reader::from_str(xml);
    let mut cov = LineCoverage::default();
    let mut package = String::new();
    let mut sourcefile: Option<String> = None;
    loop {
        let event = reader
            .read_event()
            .map_err(|e| format!("at byte {}: {e}", reader.buffer_position()))?;
        match event {
            Event::Start(ref e) | Event::Empty(ref e) => {
                let attr = |key: &[u8]| -> std::result::Result<Option<String>, String> {
                    for a in e.attributes() {
                        let a = a.map_err(|e| e.to_string())?;
                        if a.key.as_ref() == key {
                            return a.unescape_value().map(|v| Some(v.into_owned())).map_err(|e| e.to_string());
                        }
                    }
                    Ok(None)
                };
                match e.name().as_ref() {
                    b"package" => package = attr(b"name")?.unwrap_or_default(),
                    b"sourcefile" => {
                        let name = attr(b"name")?.ok_or("sourcefile without name")?;
                        let full = if package.is_empty() { name } else { format!("{package}/{name}") };
                        cov.files.entry(full.clone()).or_default();
                        if matches!(event, Event::Start(_)) {
                            sourcefile = Some(full);
                        }
                    }
                    b"line" => {
                        let Some(file) = &sourcefile else { continue };
                        let nr: usize = attr(b"nr")?
                            .ok_or("line without nr")?
                            .parse()
                            .map_err(|e| format!("line nr: {e}"))?;
                        let ci: u64 = attr(b"ci")?
                            .unwrap_or_else(|| "0".into())
                            .parse()
                            .map_err(|e| format!("line ci: {e}"))?;
                        if ci > 0 {
                            cov.files.get_mut(file).expect("entry created").insert(nr);
                        }
                    }
                    _ => {}
                }
            }
            Event::End(ref e) => match e.name().as_ref() {
                b"sourcefile" => sourcefile = None,
                b"package" => package.clear(),
                _ => {}
            },
            Event::Eof => break,
            _ => {}
        }
    }
    Ok(cov)
}

#[cfg(test)]
mod tests {
    use super::*;

    const GCOV: &str = "        -:    0:Source:src/store.cpp
        -:    0:Graph:build/src/store.gcno
        -:    1:#include \"store.hpp\"
function _Z3fooi called 2 returned 100% blocks executed 80%
        2:    2:int foo(int x) {
        2:    3:    if (x < 0) {
    #####:    4:        LOG.warn(\"negative\");
        -:    5:    }
       1*:    6:    return x;
        -:    7:}
";

    #[test]
    fn gcov_counts() {
        let (src, lines) = parse_gcov(GCOV).unwrap();
        assert_eq!(src, "src/store.cpp");
        assert_eq!(lines.into_iter().collect::<Vec<_>>(), vec![2, 3, 6]);
    }

    #[test]
    fn gcov_without_source_is_rejected() {
        assert!(parse_gcov("        1:    1:x\n").is_err());
    }

    #[test]
    fn jacoco_lines() {
        let xml = r#"<?xml version="1.0"?><!DOCTYPE report PUBLIC "-//JACOCO//DTD Report 1.1//EN" "report.dtd">
<report name="x"><package name="org/demo"><class name="org/demo/Store"/>
<sourcefile name="Store.java"><line nr="10" mi="0" ci="3" mb="0" cb="0"/><line nr="11" mi="2" ci="0"/></sourcefile>
</package></report>"#;
        let cov = parse_jacoco(xml).unwrap();
        assert!(cov.is_covered("src/main/java/org/demo/Store.java", 10));
        assert!(!cov.is_covered("src/main/java/org/demo/Store.java", 11));
        assert!(!cov.is_covered("Other.java", 10));
        assert!(!cov.is_covered("xorg/demo/Store.java", 10));
    }

    #[test]
    fn missing_report() {
        let err = read_coverage(Path::new("/nonexistent/cov.xml"), CoverageFormat::Jacoco);
        assert!(matches!(err, Err(Error::NoCoverageReport(_))));
    }

    #[test]
    fn suffix_matching() {
        assert!(same_file("./src/a.cpp", "src/a.cpp"));
        assert!(same_file("/abs/proj/src/a.cpp", "src/a.cpp"));
        assert!(!same_file("src/ba.cpp", "a.cpp"));
    }
}
