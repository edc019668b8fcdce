use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{SourceUnit, Tokenizer, WordPunct};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ContaminationReport {
    pub n: usize,
    pub test_units: usize,
    pub train_units: usize,
    /// Ids of test units sharing at least one n-gram with training data.
    pub contaminated: Vec<String>,
    pub rate: f64,
}

/// Fraction of test units that share at least one token n-gram with any
/// training unit. Units shorter than `n` tokens cannot be contaminated.
pub fn contamination_rate(test_units: &[SourceUnit], train_units: &[SourceUnit], n: usize) -> Result<f64> {
    Ok(contamination_report(test_units, train_units, n, &WordPunct::default())?.rate)
}

pub fn contamination_report(
    test_units: &[SourceUnit],
    train_units: &[SourceUnit],
    n: usize,
    tokenizer: &dyn Tokenizer,
) -> Result<ContaminationReport> {
    if n == 0 {
        return Err(Error::InvalidArgument("n-gram size must be at least 1".into()));
    }
    let train_tokens: Vec<Vec<String>> = train_units
        .iter()
        .map(|u| tokenizer.tokenize(&u.text()))
        .collect();
    let train_grams: HashSet<&[String]> = train_tokens
        .iter()
        .flat_map(|t| t.windows(n))
        .collect();

    let contaminated: Vec<String> = test_units
        .iter()
        .filter(|u| {
            let tokens = tokenizer.tokenize(&u.text());
            tokens.windows(n).any(|g| train_grams.contains(g))
        })
        .map(|u| u.id.clone())
        .collect();

    let rate = if test_units.is_empty() {
        0.0
    } else {
        contaminated.len() as f64 / test_units.len() as f64
    };
    Ok(ContaminationReport {
        n,
        test_units: test_units.len(),
        train_units: train_units.len(),
        contaminated,
        rate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit(id: &str, text: &str) -> SourceUnit {
        SourceUnit::new(id, vec![text.to_string()], &WordPunct::default())
    }

    fn words(prefix: &str, count: usize) -> String {
        (0..count).map(|i| format!("{prefix}{i}")).collect::<Vec<_>>().join(" ")
    }

    #[test]
    fn disjoint_vocabularies() {
        let test = vec![unit("t", &words("a", 20))];
        let train = vec![unit("r", &words("b", 20))];
        assert_eq!(contamination_rate(&test, &train, 13).unwrap(), 0.0);
    }

    #[test]
    fn identical_sets() {
        let units = vec![unit("x", &words("a", 13)), unit("y", &words("b", 30))];
        assert_eq!(contamination_rate(&units, &units, 13).unwrap(), 1.0);
    }

    #[test]
    fn short_units_are_never_contaminated() {
        let units = vec![unit("x", &words("a", 12))];
        assert_eq!(contamination_rate(&units, &units, 13).unwrap(), 0.0);
    }

    #[test]
    fn zero_n_is_rejected() {
        assert!(contamination_rate(&[], &[], 0).is_err());
        assert_eq!(contamination_rate(&[], &[], 13).unwrap(), 0.0);
    }
}
