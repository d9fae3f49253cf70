use serde::{Deserialize, Serialize};

use super::StatsError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BhResult {
    pub adjusted: Vec<f64>,
    pub reject: Vec<bool>,
}

fn check(p_values: &[f64], alpha: f64) -> Result<(), StatsError> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(StatsError::InvalidArgument(format!("alpha {alpha} outside (0, 1)")));
    }
    if let Some(p) = p_values.iter().find(|p| !(0.0..=1.0).contains(*p)) {
        return Err(StatsError::InvalidArgument(format!("p-value {p} outside [0, 1]")));
    }
    Ok(())
}

/// Benjamini-Hochberg step-up procedure. The adjusted p-value of the
/// hypothesis ranked `k` is `min_{j >= k} m * p_(j) / j`, capped at 1.
/// Results are in input order.
pub fn benjamini_hochberg(p_values: &[f64], alpha: f64) -> Result<BhResult, StatsError> {
    check(p_values, alpha)?;
    let m = p_values.len();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&a, &b| p_values[a].total_cmp(&p_values[b]));
    let mut adjusted = vec![0.0; m];
    let mut running = 1.0_f64;
    for (k, &idx) in order.iter().enumerate().rev() {
        let candidate = p_values[idx] * m as f64 / (k + 1) as f64;
        running = running.min(candidate);
        adjusted[idx] = running;
    }
    let reject = adjusted.iter().map(|&p| p <= alpha).collect();
    Ok(BhResult { adjusted, reject })
}

/// Bonferroni correction, for comparison with Benjamini-Hochberg.
pub fn bonferroni(p_values: &[f64], alpha: f64) -> Result<BhResult, StatsError> {
    check(p_values, alpha)?;
    let m = p_values.len() as f64;
    let adjusted: Vec<f64> = p_values.iter().map(|p| (p * m).min(1.0)).collect();
    let reject = adjusted.iter().map(|&p| p <= alpha).collect();
    Ok(BhResult { adjusted, reject })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(benjamini_hochberg(&[0.01], 0.05).unwrap().reject, vec![true]);
        let r = benjamini_hochberg(&[0.01, 0.02, 0.03, 0.04], 0.05).unwrap();
        assert_eq!(r.reject, vec![true; 4]);
        let r = benjamini_hochberg(&[0.9, 0.95], 0.05).unwrap();
        assert_eq!(r.reject, vec![false; 2]);
    }

    #[test]
    fn empty_input() {
        let r = benjamini_hochberg(&[], 0.05).unwrap();
        assert!(r.adjusted.is_empty());
    }

    #[test]
    fn bad_arguments() {
        assert!(benjamini_hochberg(&[0.1], 0.0).is_err());
        assert!(benjamini_hochberg(&[1.1], 0.05).is_err());
    }
}
