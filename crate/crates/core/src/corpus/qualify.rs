use serde::{Deserialize, Serialize};

/// Repository metadata checked before mining a project.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RepoQualification {
    pub stars: u64,
    pub log_related_issues: u64,
    pub commits_per_month: f64,
    /// Resolved issues over all issues, in `[0, 1]`.
    pub issue_resolution_rate: f64,
    pub months_since_update: f64,
}

impl RepoQualification {
    pub const MIN_STARS: u64 = 10_000;
    pub const MIN_LOG_ISSUES: u64 = 500;
    pub const MIN_COMMITS_PER_MONTH: f64 = 50.0;
    pub const MIN_RESOLUTION_RATE: f64 = 0.70;
    pub const MAX_MONTHS_SINCE_UPDATE: f64 = 6.0;

    pub fn qualifies(&self) -> bool {
        self.failures().is_empty()
    }

    /// Human-readable list of unmet thresholds.
    // Negated comparisons so NaN metadata fails instead of passing.
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.stars < Self::MIN_STARS {
            out.push(format!("stars {} < {}", self.stars, Self::MIN_STARS));
        }
        if self.log_related_issues < Self::MIN_LOG_ISSUES {
            out.push(format!(
                "log-related issues {} < {}",
                self.log_related_issues,
                Self::MIN_LOG_ISSUES
            ));
        }
        if !(self.commits_per_month > Self::MIN_COMMITS_PER_MONTH) {
            out.push(format!(
                "commits/month {} <= {}",
                self.commits_per_month,
                Self::MIN_COMMITS_PER_MONTH
            ));
        }
        if !(self.issue_resolution_rate > Self::MIN_RESOLUTION_RATE) {
            out.push(format!(
                "issue resolution rate {} <= {}",
                self.issue_resolution_rate,
                Self::MIN_RESOLUTION_RATE
            ));
        }
        if !(self.months_since_update <= Self::MAX_MONTHS_SINCE_UPDATE) {
            out.push(format!(
                "months since update {} > {}",
                self.months_since_update,
                Self::MAX_MONTHS_SINCE_UPDATE
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base() -> RepoQualification {
        RepoQualification {
            stars: 10_000,
            log_related_issues: 500,
            commits_per_month: 50.5,
            issue_resolution_rate: 0.71,
            months_since_update: 6.0,
        }
    }

    #[test]
    fn thresholds_are_inclusive_where_stated() {
        assert!(base().qualifies());
    }

    #[test]
    fn each_threshold_can_fail() {
        type Mutation = Box<dyn Fn(&mut RepoQualification)>;
        let cases: Vec<Mutation> = vec![
            Box::new(|r| r.stars = 9_999),
            Box::new(|r| r.log_related_issues = 499),
            Box::new(|r| r.commits_per_month = 50.0),
            Box::new(|r| r.issue_resolution_rate = 0.70),
            Box::new(|r| r.months_since_update = 6.5),
        ];
        for mutate in cases {
            let mut r = base();
            mutate(&mut r);
            assert!(!r.qualifies());
            assert_eq!(r.failures().len(), 1);
        }
    }

    #[test]
    fn nan_never_qualifies() {
        let mut r = base();
        r.issue_resolution_rate = f64::NAN;
        assert!(!r.qualifies());
    }
}
