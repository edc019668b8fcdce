use super::{clipped_overlap, ngram_counts};
use crate::error::{Error, Result};

/// Sentence-level BLEU with uniform weights over orders `1..=max_n` and no
/// smoothing. Any order with zero matched n-grams (including orders longer
/// than the candidate) makes the whole score zero.
pub fn bleu(candidate: &[String], reference: &[String], max_n: usize) -> Result<f64> {
    if max_n == 0 {
        return Err(Error::InvalidArgument("max_n must be at least 1".into()));
    }
    if candidate.is_empty() || reference.is_empty() {
        return Err(Error::EmptyInput);
    }

    let mut log_sum = 0.0;
    for n in 1..=max_n {
        let cand = ngram_counts(candidate, n);
        let total: usize = cand.values().sum();
        let matched = clipped_overlap(&cand, &ngram_counts(reference, n));
        if matched == 0 {
            return Ok(0.0);
        }
        log_sum += (matched as f64 / total as f64).ln();
    }

    let c = candidate.len() as f64;
    let r = reference.len() as f64;
    let brevity = if c > r { 1.0 } else { (1.0 - r / c).exp() };
    Ok((brevity * (log_sum / max_n as f64).exp()).clamp(0.0, 1.0))
}
