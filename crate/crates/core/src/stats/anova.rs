use std::collections::BTreeMap;

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use super::{f_dist_sf, StatsError};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnovaRow {
    pub source: String,
    pub sum_of_squares: f64,
    pub dof: f64,
    /// Absent for the residual row.
    pub f: Option<f64>,
    pub p_value: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnovaTable {
    pub factor_a: AnovaRow,
    pub factor_b: AnovaRow,
    pub interaction: AnovaRow,
    pub residual: AnovaRow,
    /// Marginal mean of the response for each level of factor A, sorted by
    /// level label.
    pub level_means_a: Vec<(String, f64)>,
    pub level_means_b: Vec<(String, f64)>,
}

impl AnovaTable {
    pub fn rows(&self) -> [&AnovaRow; 4] {
        [&self.factor_a, &self.factor_b, &self.interaction, &self.residual]
    }
}

/// Effect (sum-to-zero) coding of a factor: `levels - 1` columns where the
/// last level is coded -1 everywhere.
fn effect_columns(codes: &[usize], levels: usize) -> Vec<Vec<f64>> {
    (0..levels - 1)
        .map(|j| {
            codes
                .iter()
                .map(|&c| {
                    if c == j {
                        1.0
                    } else if c == levels - 1 {
                        -1.0
                    } else {
                        0.0
                    }
                })
                .collect()
        })
        .collect()
}

/// Residual sum of squares of the least-squares fit of `y` on an intercept
/// plus `columns`.
fn rss(y: &[f64], columns: &[&Vec<f64>]) -> f64 {
    let n = y.len();
    let p = columns.len() + 1;
    let x = DMatrix::from_fn(n, p, |i, j| if j == 0 { 1.0 } else { columns[j - 1][i] });
    let yv = DVector::from_column_slice(y);
    let xtx = x.transpose() * &x;
    let xty = x.transpose() * &yv;
    let beta = match xtx.clone().cholesky() {
        Some(ch) => ch.solve(&xty),
        None => xtx
            .svd(true, true)
            .solve(&xty, 1e-12)
            .expect("SVD solve with both factors computed"),
    };
    let resid = yv - x * beta;
    resid.norm_squared()
}

fn levels(labels: &[impl AsRef<str>]) -> (Vec<String>, Vec<usize>) {
    let names: Vec<String> = labels
        .iter()
        .map(|l| l.as_ref().to_string())
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    let index: BTreeMap<&str, usize> = names.iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect();
    let codes = labels.iter().map(|l| index[l.as_ref()]).collect();
    (names, codes)
}

/// Two-way ANOVA with interaction, Type II sums of squares (valid for
/// unbalanced designs). Level order is the sorted label order.
pub fn two_way_anova<S: AsRef<str>>(
    values: &[f64],
    factor_a: &[S],
    factor_b: &[S],
) -> Result<AnovaTable, StatsError> {
    let n = values.len();
    if factor_a.len() != n || factor_b.len() != n {
        return Err(StatsError::LengthMismatch(n, factor_a.len().min(factor_b.len())));
    }
    let (names_a, codes_a) = levels(factor_a);
    let (names_b, codes_b) = levels(factor_b);
    let (la, lb) = (names_a.len(), names_b.len());
    if la < 2 || lb < 2 {
        return Err(StatsError::InvalidArgument(format!(
            "each factor needs at least 2 levels (got {la} and {lb})"
        )));
    }

    let mut cells: Vec<Vec<f64>> = vec![Vec::new(); la * lb];
    for ((&v, &a), &b) in values.iter().zip(&codes_a).zip(&codes_b) {
        cells[a * lb + b].push(v);
    }
    for (i, cell) in cells.iter().enumerate() {
        if cell.is_empty() {
            return Err(StatsError::EmptyCell {
                a: names_a[i / lb].clone(),
                b: names_b[i % lb].clone(),
            });
        }
    }
    let dof_res = n as f64 - (la * lb) as f64;
    if dof_res < 1.0 {
        return Err(StatsError::InvalidArgument("no residual degrees of freedom".into()));
    }

    // Full-model residual is the within-cell sum of squares.
    let ss_res: f64 = cells
        .iter()
        .map(|c| {
            let m = c.iter().sum::<f64>() / c.len() as f64;
            c.iter().map(|v| (v - m).powi(2)).sum::<f64>()
        })
        .sum();

    let cols_a = effect_columns(&codes_a, la);
    let cols_b = effect_columns(&codes_b, lb);
    let a_refs: Vec<&Vec<f64>> = cols_a.iter().collect();
    let b_refs: Vec<&Vec<f64>> = cols_b.iter().collect();
    let ab_refs: Vec<&Vec<f64>> = a_refs.iter().chain(&b_refs).copied().collect();

    let rss_a = rss(values, &a_refs);
    let rss_b = rss(values, &b_refs);
    let rss_ab = rss(values, &ab_refs);

    let ss_a = (rss_b - rss_ab).max(0.0);
    let ss_b = (rss_a - rss_ab).max(0.0);
    let ss_int = (rss_ab - ss_res).max(0.0);

    let ms_res = ss_res / dof_res;
    let effect = |source: &str, ss: f64, dof: f64| -> Result<AnovaRow, StatsError> {
        let f = if ms_res > 0.0 {
            (ss / dof) / ms_res
        } else if ss > 0.0 {
            f64::INFINITY
        } else {
            0.0
        };
        Ok(AnovaRow {
            source: source.into(),
            sum_of_squares: ss,
            dof,
            f: Some(f),
            p_value: Some(f_dist_sf(f, dof, dof_res)?),
        })
    };

    let level_means = |names: &[String], codes: &[usize]| {
        names
            .iter()
            .enumerate()
            .map(|(i, name)| {
                let vs: Vec<f64> = codes.iter().zip(values).filter(|(c, _)| **c == i).map(|(_, v)| *v).collect();
                (name.clone(), vs.iter().sum::<f64>() / vs.len() as f64)
            })
            .collect()
    };

    Ok(AnovaTable {
        factor_a: effect("A", ss_a, (la - 1) as f64)?,
        factor_b: effect("B", ss_b, (lb - 1) as f64)?,
        interaction: effect("A:B", ss_int, ((la - 1) * (lb - 1)) as f64)?,
        residual: AnovaRow {
            source: "Residual".into(),
            sum_of_squares: ss_res,
            dof: dof_res,
            f: None,
            p_value: None,
        },
        level_means_a: level_means(&names_a, &codes_a),
        level_means_b: level_means(&names_b, &codes_b),
    })
}
