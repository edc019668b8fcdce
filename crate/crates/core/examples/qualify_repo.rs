// Decide whether a repository is worth mining.
//
//     cargo run --example qualify_repo

use logbench::corpus::RepoQualification;

pub fn run_example() {
    let repos = [
        ("busy-and-popular", RepoQualification {
            stars: 24_000,
            log_related_issues: 1_200,
            commits_per_month: 140.0,
            issue_resolution_rate: 0.86,
            months_since_update: 0.5,
        }),
        ("stale-side-project", RepoQualification {
            stars: 900,
            log_related_issues: 12,
            commits_per_month: 3.0,
            issue_resolution_rate: 0.4,
            months_since_update: 30.0,
        }),
    ];
    for (name, q) in &repos {
        let failures = q.failures();
        if failures.is_empty() {
            println!("{name}: qualifies");
        } else {
            println!("{name}: rejected ({})", failures.join("; "));
        }
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
