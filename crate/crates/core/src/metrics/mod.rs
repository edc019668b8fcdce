//! Sentence-level text similarity: BLEU-n without smoothing, ROUGE-N,
//! ROUGE-L and TF-IDF cosine. All scores lie in `[0, 1]`.

mod bleu;
mod rouge;
mod tfidf;

use std::collections::HashMap;

pub use bleu::bleu;
pub use rouge::{lcs_len, rouge_l, rouge_n};
pub use tfidf::tfidf_cosine;

pub(crate) fn ngram_counts(tokens: &[String], n: usize) -> HashMap<&[String], usize> {
    let mut counts = HashMap::new();
    if n == 0 || tokens.len() < n {
        return counts;
    }
    for gram in tokens.windows(n) {
        *counts.entry(gram).or_insert(0) += 1;
    }
    counts
}

/// Size of the multiset intersection of two n-gram count tables.
pub(crate) fn clipped_overlap(cand: &HashMap<&[String], usize>, reference: &HashMap<&[String], usize>) -> usize {
    cand.iter()
        .map(|(g, c)| (*c).min(reference.get(g).copied().unwrap_or(0)))
        .sum()
}

pub(crate) fn f1(precision: f64, recall: f64) -> f64 {
    if precision + recall == 0.0 {
        0.0
    } else {
        2.0 * precision * recall / (precision + recall)
    }
}
