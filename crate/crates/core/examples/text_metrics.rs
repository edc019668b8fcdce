// The similarity kernels on small inputs.
//
//     cargo run --example text_metrics

use logbench::metrics::{bleu, rouge_l, rouge_n, tfidf_cosine};
use logbench::model::TokenSeq;

pub fn run_example() {
    let cand = TokenSeq::from_text("the server is down");
    let refr = TokenSeq::from_text("the server is running");
    println!("BLEU-1   {:.4}", bleu(&cand, &refr, 1).unwrap());
    println!("BLEU-4   {:.4}  (no smoothing: no 4-gram match scores 0)", bleu(&cand, &refr, 4).unwrap());
    println!("ROUGE-1  {:.4}", rouge_n(&cand, &refr, 1).unwrap());
    println!("ROUGE-L  {:.4}", rouge_l(&TokenSeq::from_text("a c d"), &TokenSeq::from_text("a b c d")).unwrap());
    println!("COS      {:.4}", tfidf_cosine(&cand, &refr));
    println!("COS self {:.4}", tfidf_cosine(&cand, &cand));
    println!("BLEU on empty input: {}", bleu(&[], &refr, 4).unwrap_err());
}

#[allow(dead_code)]
fn main() {
    run_example();
}
