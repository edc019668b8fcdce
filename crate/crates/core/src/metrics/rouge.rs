use super::{clipped_overlap, f1, ngram_counts};
use crate::error::{Error, Result};

/// ROUGE-N F1 over clipped n-gram overlap. Zero when either side has fewer
/// than `n` tokens.
pub fn rouge_n(candidate: &[String], reference: &[String], n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    if candidate.is_empty() || reference.is_empty() {
        return Err(Error::EmptyInput);
    }
    let cand = ngram_counts(candidate, n);
    let refs = ngram_counts(reference, n);
    let cand_total: usize = cand.values().sum();
    let ref_total: usize = refs.values().sum();
    if cand_total == 0 || ref_total == 0 {
        return Ok(0.0);
    }
    let overlap = clipped_overlap(&cand, &refs) as f64;
    Ok(f1(overlap / cand_total as f64, overlap / ref_total as f64))
}

/// ROUGE-L F1 (beta = 1) from the longest common subsequence.
pub fn rouge_l(candidate: &[String], reference: &[String]) -> Result<f64> {
    if candidate.is_empty() || reference.is_empty() {
        return Err(Error::EmptyInput);
    }
    let lcs = lcs_len(candidate, reference) as f64;
    Ok(f1(lcs / candidate.len() as f64, lcs / reference.len() as f64))
}

/// Length of the longest common subsequence, O(|a|·|b|) time, O(|b|) space.
pub fn lcs_len<T: PartialEq>(a: &[T], b: &[T]) -> usize {
    let mut prev = vec![0usize; b.len() + 1];
    let mut row = vec![0usize; b.len() + 1];
    for x in a {
        for (j, y) in b.iter().enumerate() {
            row[j + 1] = if x == y {
                prev[j] + 1
            } else {
                row[j].max(prev[j + 1])
            };
        }
        std::mem::swap(&mut prev, &mut row);
    }
    prev[b.len()]
}
