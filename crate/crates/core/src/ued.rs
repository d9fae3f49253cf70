//! Utterance emotion dynamics of a single arc.
//!
//! The home base is `[mean - sd, mean + sd]` of the arc's states (population
//! SD). A displacement is a maximal run of consecutive states strictly outside
//! the home base on one side. Its peak distance is measured from the nearest
//! home-base boundary, not from the mean.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arc::EmotionArc;
use crate::scalar::{mean, population_std, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HomeBase<T> {
    pub mean: T,
    pub variability: T,
}

impl<T: Scalar> HomeBase<T> {
    /// Mean and population SD of `states`. Panics on an empty slice.
    pub fn of_states(states: &[T]) -> Self {
        HomeBase {
            mean: mean(states).expect("home base of an empty arc"),
            variability: population_std(states).expect("home base of an empty arc"),
        }
    }

    pub fn lower(&self) -> T {
        self.mean - self.variability
    }

    pub fn upper(&self) -> T {
        self.mean + self.variability
    }
}

pub fn home_base<T: Scalar>(arc: &EmotionArc<T>) -> HomeBase<T> {
    HomeBase::of_states(&arc.states)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Low,
    High,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Displacement<T> {
    pub direction: Direction,
    pub start_index: usize,
    pub peak_index: usize,
    pub end_index: usize,
    pub peak_distance: T,
    pub length: usize,
    pub rise_rate: T,
    pub recovery_rate: T,
}

/// Step counts used as the denominators of rise and recovery rates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RateConvention {
    /// `peak - start + 1` and `end - peak + 1`: both counts include the peak.
    #[default]
    Inclusive,
    /// `peak - start` and `end - peak`, floored at 1.
    Exclusive,
}

impl RateConvention {
    fn steps(self, from: usize, to: usize) -> usize {
        match self {
            RateConvention::Inclusive => to - from + 1,
            RateConvention::Exclusive => (to - from).max(1),
        }
    }
}

/// Displacements of `states` around `hb` with the default rate convention.
pub fn find_displacements<T: Scalar>(states: &[T], hb: &HomeBase<T>) -> Vec<Displacement<T>> {
    find_displacements_with(states, hb, RateConvention::Inclusive)
}

/// A run still outside the home base at the final state is dropped (it never
/// recovers); a run already outside at state 0 is kept.
pub fn find_displacements_with<T: Scalar>(
    states: &[T],
    hb: &HomeBase<T>,
    convention: RateConvention,
) -> Vec<Displacement<T>> {
    let (lower, upper) = (hb.lower(), hb.upper());
    let side = |s: T| {
        if s > upper {
            Some(Direction::High)
        } else if s < lower {
            Some(Direction::Low)
        } else {
            None
        }
    };

    let mut out = Vec::new();
    let mut i = 0;
    while i < states.len() {
        let Some(direction) = side(states[i]) else {
            i += 1;
            continue;
        };
        let start = i;
        let mut peak = i;
        while i + 1 < states.len() && side(states[i + 1]) == Some(direction) {
            i += 1;
            let better = match direction {
                Direction::High => states[i] > states[peak],
                Direction::Low => states[i] < states[peak],
            };
            if better {
                peak = i;
            }
        }
        let end = i;
        i += 1;
        if end + 1 == states.len() {
            break;
        }
        let boundary = match direction {
            Direction::High => upper,
            Direction::Low => lower,
        };
        let peak_distance = (states[peak] - boundary).abs();
        out.push(Displacement {
            direction,
            start_index: start,
            peak_index: peak,
            end_index: end,
            peak_distance,
            length: end - start + 1,
            rise_rate: peak_distance / T::from_count(convention.steps(start, peak)),
            recovery_rate: peak_distance / T::from_count(convention.steps(peak, end)),
        });
    }
    out
}

/// The fourteen aggregate metrics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Metric {
    Mean,
    Std,
    AvgPeakDist,
    AvgDispLength,
    RiseRate,
    RecoveryRate,
    LowPeakDist,
    LowDispLength,
    LowRiseRate,
    LowRecoveryRate,
    HighPeakDist,
    HighDispLength,
    HighRiseRate,
    HighRecoveryRate,
}

impl Metric {
    pub const ALL: [Metric; 14] = [
        Metric::Mean,
        Metric::Std,
        Metric::AvgPeakDist,
        Metric::AvgDispLength,
        Metric::RiseRate,
        Metric::RecoveryRate,
        Metric::LowPeakDist,
        Metric::LowDispLength,
        Metric::LowRiseRate,
        Metric::LowRecoveryRate,
        Metric::HighPeakDist,
        Metric::HighDispLength,
        Metric::HighRiseRate,
        Metric::HighRecoveryRate,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Metric::Mean => "emo_mean",
            Metric::Std => "emo_std",
            Metric::AvgPeakDist => "emo_avg_peak_dist",
            Metric::AvgDispLength => "emo_avg_disp_length",
            Metric::RiseRate => "emo_rise_rate",
            Metric::RecoveryRate => "emo_recovery_rate",
            Metric::LowPeakDist => "emo_low_peak_dist",
            Metric::LowDispLength => "emo_low_disp_length",
            Metric::LowRiseRate => "emo_low_rise_rate",
            Metric::LowRecoveryRate => "emo_low_recovery_rate",
            Metric::HighPeakDist => "emo_high_peak_dist",
            Metric::HighDispLength => "emo_high_disp_length",
            Metric::HighRiseRate => "emo_high_rise_rate",
            Metric::HighRecoveryRate => "emo_high_recovery_rate",
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Metric {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Metric::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown metric `{s}`"))
    }
}

/// Averages over one group of displacements; absent when the group is empty.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct DisplacementAverages<T> {
    pub peak_dist: Option<T>,
    pub disp_length: Option<T>,
    pub rise_rate: Option<T>,
    pub recovery_rate: Option<T>,
}

impl<T: Scalar> DisplacementAverages<T> {
    fn of<'a>(ds: impl Iterator<Item = &'a Displacement<T>> + Clone) -> Self
    where
        T: 'a,
    {
        let n = ds.clone().count();
        if n == 0 {
            return DisplacementAverages {
                peak_dist: None,
                disp_length: None,
                rise_rate: None,
                recovery_rate: None,
            };
        }
        let n_t = T::from_count(n);
        let avg = |f: &dyn Fn(&Displacement<T>) -> T| Some(ds.clone().map(f).sum::<T>() / n_t);
        DisplacementAverages {
            peak_dist: avg(&|d| d.peak_distance),
            disp_length: avg(&|d| T::from_count(d.length)),
            rise_rate: avg(&|d| d.rise_rate),
            recovery_rate: avg(&|d| d.recovery_rate),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UedSummary<T> {
    pub emo_mean: T,
    pub emo_std: T,
    /// Low and high displacements pooled.
    pub overall: DisplacementAverages<T>,
    pub low: DisplacementAverages<T>,
    pub high: DisplacementAverages<T>,
    pub low_count: usize,
    pub high_count: usize,
}

impl<T: Scalar> UedSummary<T> {
    pub fn get(&self, metric: Metric) -> Option<T> {
        match metric {
            Metric::Mean => Some(self.emo_mean),
            Metric::Std => Some(self.emo_std),
            Metric::AvgPeakDist => self.overall.peak_dist,
            Metric::AvgDispLength => self.overall.disp_length,
            Metric::RiseRate => self.overall.rise_rate,
            Metric::RecoveryRate => self.overall.recovery_rate,
            Metric::LowPeakDist => self.low.peak_dist,
            Metric::LowDispLength => self.low.disp_length,
            Metric::LowRiseRate => self.low.rise_rate,
            Metric::LowRecoveryRate => self.low.recovery_rate,
            Metric::HighPeakDist => self.high.peak_dist,
            Metric::HighDispLength => self.high.disp_length,
            Metric::HighRiseRate => self.high.rise_rate,
            Metric::HighRecoveryRate => self.high.recovery_rate,
        }
    }

    /// Number of displacements a metric averages over; 1 for mean and std.
    pub fn weight(&self, metric: Metric) -> usize {
        match metric {
            Metric::Mean | Metric::Std => 1,
            Metric::AvgPeakDist | Metric::AvgDispLength | Metric::RiseRate | Metric::RecoveryRate => {
                self.low_count + self.high_count
            }
            Metric::LowPeakDist | Metric::LowDispLength | Metric::LowRiseRate | Metric::LowRecoveryRate => {
                self.low_count
            }
            _ => self.high_count,
        }
    }
}

pub fn summarize<T: Scalar>(arc: &EmotionArc<T>) -> UedSummary<T> {
    summarize_states(&arc.states, RateConvention::Inclusive)
}

pub fn summarize_states<T: Scalar>(states: &[T], convention: RateConvention) -> UedSummary<T> {
    let hb = HomeBase::of_states(states);
    let ds = find_displacements_with(states, &hb, convention);
    let low = ds.iter().filter(|d| d.direction == Direction::Low);
    let high = ds.iter().filter(|d| d.direction == Direction::High);
    UedSummary {
        emo_mean: hb.mean,
        emo_std: hb.variability,
        overall: DisplacementAverages::of(ds.iter()),
        low: DisplacementAverages::of(low.clone()),
        high: DisplacementAverages::of(high.clone()),
        low_count: low.count(),
        high_count: high.count(),
    }
}
