//! Statistical procedures used by the group comparisons and outlier tables.

mod anova;
mod fdr;
mod outliers;
mod rank;
mod special;
mod ttest;

pub use anova::{two_way_anova, AnovaRow, AnovaTable};
pub use fdr::{benjamini_hochberg, bonferroni, BhResult};
pub use outliers::{iqr_outliers, quantile_linear, OutlierReport, WHISKER};
pub use rank::{average_ranks, pearson, spearman};
pub use special::{f_dist_sf, student_t_sf};
pub use ttest::{pooled_t_test, welch_t_test, TestResult};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum StatsError {
    #[error("group {group}: {reason}")]
    DegenerateGroup { group: String, reason: String },
    #[error("correlation undefined: {0} series is constant")]
    UndefinedCorrelation(&'static str),
    #[error("series lengths differ ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("need at least {needed} values, got {got}")]
    TooFewValues { needed: usize, got: usize },
    #[error("cell ({a}, {b}) has no observations")]
    EmptyCell { a: String, b: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
