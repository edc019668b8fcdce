use std::collections::BTreeMap;

/// Cosine similarity of TF-IDF vectors fitted on the two-document corpus
/// `{doc_a, doc_b}`.
///
/// Term frequency is the raw count; idf uses the smoothed form
/// `ln((1 + N) / (1 + df)) + 1` with `N = 2`, so a term shared by both
/// documents keeps weight 1 rather than vanishing. Returns 0 when either
/// document is empty.
pub fn tfidf_cosine(doc_a: &[String], doc_b: &[String]) -> f64 {
    if doc_a.is_empty() || doc_b.is_empty() {
        return 0.0;
    }
    let a = term_counts(doc_a);
    let b = term_counts(doc_b);
    const N: f64 = 2.0;
    let idf = |term: &str| {
        let df = a.contains_key(term) as u8 + b.contains_key(term) as u8;
        ((1.0 + N) / (1.0 + df as f64)).ln() + 1.0
    };

    let mut dot = 0.0;
    let mut norm_a = 0.0;
    let mut norm_b = 0.0;
    for (term, ca) in &a {
        let w = ca * idf(term);
        norm_a += w * w;
        if let Some(cb) = b.get(term) {
            dot += w * cb * idf(term);
        }
    }
    for (term, cb) in &b {
        let w = cb * idf(term);
        norm_b += w * w;
    }
    (dot / (norm_a.sqrt() * norm_b.sqrt())).clamp(0.0, 1.0)
}

fn term_counts(doc: &[String]) -> BTreeMap<&str, f64> {
    let mut m = BTreeMap::new();
    for t in doc {
        *m.entry(t.as_str()).or_insert(0.0) += 1.0;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::TokenSeq;

    fn t(s: &str) -> TokenSeq {
        TokenSeq::from_text(s)
    }

    #[test]
    fn identical_documents() {
        let d = t("connection refused by {} on port {}");
        assert!((tfidf_cosine(&d, &d) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn orthogonal_documents() {
        assert_eq!(tfidf_cosine(&t("alpha beta"), &t("gamma delta")), 0.0);
    }

    #[test]
    fn empty_documents_score_zero() {
        assert_eq!(tfidf_cosine(&t(""), &t("a")), 0.0);
        assert_eq!(tfidf_cosine(&t(""), &t("")), 0.0);
    }

    #[test]
    fn smoothed_idf_value() {
        // Frozen from scikit-learn TfidfVectorizer(smooth_idf=True, norm="l2")
        // fitted on the two token lists.
        let v = tfidf_cosine(&t("a a b"), &t("a c"));
        assert!((v - 0.4743307064971939).abs() < 1e-12, "{v}");
    }

    #[test]
    fn symmetric() {
        let a = t("x y z x");
        let b = t("x q");
        assert_eq!(tfidf_cosine(&a, &b), tfidf_cosine(&b, &a));
        assert!((tfidf_cosine(&a, &b) - 0.41120705506761857).abs() < 1e-12);
    }
}
