use serde::{Deserialize, Serialize};

use super::{student_t_sf, StatsError};
use crate::scalar::{mean, sample_std};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TestResult {
    pub statistic: f64,
    /// Two-sided.
    pub p_value: f64,
    pub dof: f64,
    pub group_sizes: (usize, usize),
}

fn group_moments(values: &[f64], name: &str) -> Result<(f64, f64), StatsError> {
    if values.len() < 2 {
        return Err(StatsError::DegenerateGroup {
            group: name.into(),
            reason: format!("{} value(s), need at least 2", values.len()),
        });
    }
    let m = mean(values).unwrap_or(f64::NAN);
    let sd = sample_std(values).unwrap_or(0.0);
    if sd == 0.0 || !sd.is_finite() {
        return Err(StatsError::DegenerateGroup {
            group: name.into(),
            reason: "zero variance".into(),
        });
    }
    Ok((m, sd * sd))
}

fn two_sided(t: f64, dof: f64) -> Result<f64, StatsError> {
    Ok((2.0 * student_t_sf(t.abs(), dof)?).clamp(0.0, 1.0))
}

/// Two-sample t-test without assuming equal variances, with
/// Welch-Satterthwaite degrees of freedom.
pub fn welch_t_test(a: &[f64], b: &[f64]) -> Result<TestResult, StatsError> {
    let (ma, va) = group_moments(a, "a")?;
    let (mb, vb) = group_moments(b, "b")?;
    let (na, nb) = (a.len() as f64, b.len() as f64);
    let (sa, sb) = (va / na, vb / nb);
    let statistic = (ma - mb) / (sa + sb).sqrt();
    let dof = (sa + sb).powi(2) / (sa * sa / (na - 1.0) + sb * sb / (nb - 1.0));
    Ok(TestResult {
        statistic,
        p_value: two_sided(statistic, dof)?,
        dof,
        group_sizes: (a.len(), b.len()),
    })
}

/// Student's two-sample t-test with pooled variance.
pub fn pooled_t_test(a: &[f64], b: &[f64]) -> Result<TestResult, StatsError> {
    let (ma, va) = group_moments(a, "a")?;
    let (mb, vb) = group_moments(b, "b")?;
    let (na, nb) = (a.len() as f64, b.len() as f64);
    let dof = na + nb - 2.0;
    let pooled = ((na - 1.0) * va + (nb - 1.0) * vb) / dof;
    let statistic = (ma - mb) / (pooled * (1.0 / na + 1.0 / nb)).sqrt();
    Ok(TestResult {
        statistic,
        p_value: two_sided(statistic, dof)?,
        dof,
        group_sizes: (a.len(), b.len()),
    })
}
