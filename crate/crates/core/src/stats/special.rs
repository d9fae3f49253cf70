use statrs::function::beta::beta_reg;

use super::StatsError;

fn check_dof(name: &str, v: f64) -> Result<(), StatsError> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(StatsError::InvalidArgument(format!("{name} must be positive, got {v}")))
    }
}

/// Upper tail `P(T > t)` of Student's t with `dof` degrees of freedom.
pub fn student_t_sf(t: f64, dof: f64) -> Result<f64, StatsError> {
    check_dof("dof", dof)?;
    if t.is_nan() {
        return Ok(f64::NAN);
    }
    if t.is_infinite() {
        return Ok(if t > 0.0 { 0.0 } else { 1.0 });
    }
    let x = dof / (dof + t * t);
    let tail = 0.5 * beta_reg(dof / 2.0, 0.5, x);
    Ok(if t >= 0.0 { tail } else { 1.0 - tail })
}

/// Upper tail `P(F > f)` of the F distribution with `(d1, d2)` degrees of
/// freedom.
pub fn f_dist_sf(f: f64, d1: f64, d2: f64) -> Result<f64, StatsError> {
    check_dof("d1", d1)?;
    check_dof("d2", d2)?;
    if f.is_nan() {
        return Ok(f64::NAN);
    }
    if f <= 0.0 {
        return Ok(1.0);
    }
    if f.is_infinite() {
        return Ok(0.0);
    }
    let x = d2 / (d2 + d1 * f);
    Ok(beta_reg(d2 / 2.0, d1 / 2.0, x))
}
