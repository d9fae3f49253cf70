use serde::{Deserialize, Serialize};

use super::StatsError;
use crate::scalar::Scalar;

/// Whisker length in IQR units.
pub const WHISKER: f64 = 1.5;

/// Quantile of sorted data by linear interpolation between order statistics
/// (position `(n - 1) * p`).
pub fn quantile_linear<T: Scalar>(sorted: &[T], p: f64) -> T {
    assert!(!sorted.is_empty(), "quantile of empty data");
    let h = (sorted.len() - 1) as f64 * p;
    let lo = h.floor() as usize;
    let hi = h.ceil() as usize;
    let frac = T::lit(h - lo as f64);
    sorted[lo] + (sorted[hi] - sorted[lo]) * frac
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutlierReport<T> {
    pub q1: T,
    pub q3: T,
    pub iqr: T,
    pub low_fence: T,
    pub high_fence: T,
    pub low_outliers: Vec<(String, T)>,
    pub high_outliers: Vec<(String, T)>,
}

/// Box-plot outliers: values strictly below `Q1 - 1.5 IQR` or strictly above
/// `Q3 + 1.5 IQR`. Outliers keep input order.
pub fn iqr_outliers<T: Scalar>(values: &[(String, T)]) -> Result<OutlierReport<T>, StatsError> {
    if values.len() < 4 {
        return Err(StatsError::TooFewValues { needed: 4, got: values.len() });
    }
    let mut sorted: Vec<T> = values.iter().map(|(_, v)| *v).collect();
    if sorted.iter().any(|v| v.is_nan()) {
        return Err(StatsError::InvalidArgument("NaN value".into()));
    }
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("NaN filtered above"));
    let q1 = quantile_linear(&sorted, 0.25);
    let q3 = quantile_linear(&sorted, 0.75);
    let iqr = q3 - q1;
    let whisker = T::lit(WHISKER) * iqr;
    let (low_fence, high_fence) = (q1 - whisker, q3 + whisker);
    let pick = |keep: &dyn Fn(T) -> bool| {
        values
            .iter()
            .filter(|(_, v)| keep(*v))
            .cloned()
            .collect::<Vec<_>>()
    };
    Ok(OutlierReport {
        q1,
        q3,
        iqr,
        low_fence,
        high_fence,
        low_outliers: pick(&|v| v < low_fence),
        high_outliers: pick(&|v| v > high_fence),
    })
}
