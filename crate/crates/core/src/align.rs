//! Temporal alignment of arcs with different lengths, and arc-to-arc rank
//! correlation.
//!
//! Bin edges come from the arc with the fewest states: `0`, the initial bin
//! width `w`, then the normalized time of each of its states beyond `w`, then
//! `1`. Every arc is averaged within those bins, so all aligned series have
//! the same length whatever their original resolution.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arc::{ArcBank, EmotionArc};
use crate::corpus::{Category, Corpus, MetaSpeaker, Speaker};
use crate::lexicon::Dimension;
use crate::scalar::{mean, sample_std, Scalar};
use crate::stats::{spearman, StatsError};

pub const DEFAULT_BIN_WIDTH: f64 = 0.01;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AlignError {
    #[error("need at least 2 arcs to align, got {0}")]
    TooFewArcs(usize),
    #[error("initial bin width {0} outside (0, 1)")]
    BadWidth(f64),
    #[error("arc `{label}` has {len} state(s); alignment needs at least 2")]
    ShortArc { label: String, len: usize },
    #[error("arc `{0}` given twice")]
    DuplicateLabel(String),
    #[error("no aligned series `{0}`")]
    UnknownSeries(String),
    #[error(transparent)]
    Correlation(#[from] StatsError),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AlignedArcs<T> {
    /// `n + 1` edges for `n` bins. Bins are half-open except the last.
    pub bin_edges: Vec<T>,
    /// One series of `n` values per input arc, keyed by arc label, in input
    /// order.
    pub series: Vec<(String, Vec<T>)>,
    pub initial_bin_width: T,
}

impl<T: Scalar> AlignedArcs<T> {
    pub fn n_bins(&self) -> usize {
        self.bin_edges.len() - 1
    }

    pub fn get(&self, label: &str) -> Option<&[T]> {
        self.series
            .iter()
            .find(|(l, _)| l == label)
            .map(|(_, v)| v.as_slice())
    }
}

/// Bin edges derived from the normalized times of the shortest arc.
pub fn bin_edges<T: Scalar>(shortest_times: &[T], initial_bin_width: T) -> Vec<T> {
    let mut edges = vec![T::zero(), initial_bin_width];
    edges.extend(
        shortest_times
            .iter()
            .copied()
            .filter(|&t| t > initial_bin_width && t < T::one()),
    );
    edges.push(T::one());
    edges
}

/// Mean of the arc's states within each bin; an empty bin repeats the
/// previous bin's value.
pub fn bin_arc<T: Scalar>(arc: &EmotionArc<T>, edges: &[T]) -> Vec<T> {
    let n_bins = edges.len() - 1;
    let mut out = Vec::with_capacity(n_bins);
    let mut k = 0;
    for i in 0..n_bins {
        let last = i + 1 == n_bins;
        let start = k;
        while k < arc.times.len() && (last || arc.times[k] < edges[i + 1]) {
            k += 1;
        }
        let value = match mean(&arc.states[start..k]) {
            Some(m) => m,
            // The first bin always holds time 0, so a previous value exists.
            None => *out.last().unwrap_or(&arc.states[0]),
        };
        out.push(value);
    }
    out
}

/// Aligns arcs onto a common set of bins.
pub fn align_arcs<T: Scalar>(arcs: &[&EmotionArc<T>], initial_bin_width: f64) -> Result<AlignedArcs<T>, AlignError> {
    if arcs.len() < 2 {
        return Err(AlignError::TooFewArcs(arcs.len()));
    }
    if !(initial_bin_width > 0.0 && initial_bin_width < 1.0) {
        return Err(AlignError::BadWidth(initial_bin_width));
    }
    let mut labels = std::collections::HashSet::new();
    for a in arcs {
        if a.len() < 2 {
            return Err(AlignError::ShortArc {
                label: a.label(),
                len: a.len(),
            });
        }
        if !labels.insert(a.label()) {
            return Err(AlignError::DuplicateLabel(a.label()));
        }
    }
    let width = T::lit(initial_bin_width);
    let shortest = arcs
        .iter()
        .min_by_key(|a| a.len())
        .expect("at least two arcs");
    let edges = bin_edges(&shortest.times, width);
    let series = arcs.iter().map(|a| (a.label(), bin_arc(a, &edges))).collect();
    Ok(AlignedArcs {
        bin_edges: edges,
        series,
        initial_bin_width: width,
    })
}

/// Spearman correlation between two aligned series.
pub fn arc_correlation<T: Scalar>(aligned: &AlignedArcs<T>, a: &str, b: &str) -> Result<T, AlignError> {
    let sa = aligned.get(a).ok_or_else(|| AlignError::UnknownSeries(a.into()))?;
    let sb = aligned.get(b).ok_or_else(|| AlignError::UnknownSeries(b.into()))?;
    Ok(spearman(sa, sb)?)
}

/// Which pairs of arcs a correlation table covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Scope {
    /// Narration against all dialogue, per novel.
    NarrationDialogue,
    /// Narration against each major character, per novel.
    NarrationMajor,
    /// Pairs of major characters within a novel.
    MajorWithin,
    /// All pairs of major characters in the corpus.
    MajorAcross,
}

impl Scope {
    pub const ALL: [Scope; 4] = [
        Scope::NarrationDialogue,
        Scope::NarrationMajor,
        Scope::MajorWithin,
        Scope::MajorAcross,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Scope::NarrationDialogue => "narr-dial",
            Scope::NarrationMajor => "narr-major",
            Scope::MajorWithin => "major-within",
            Scope::MajorAcross => "major-across",
        }
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scope {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Scope::ALL
            .into_iter()
            .find(|sc| sc.name() == s)
            .ok_or_else(|| format!("unknown scope `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorrelationRow<T> {
    pub novel_a: String,
    pub speaker_a: Speaker,
    pub novel_b: String,
    pub speaker_b: Speaker,
    /// Absent when either binned series is constant.
    pub rho: Option<T>,
    pub n_bins: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorrelationTable<T> {
    pub scope: Scope,
    pub dimension: Dimension,
    pub rows: Vec<CorrelationRow<T>>,
}

/// Distribution of the defined correlations of one group of rows.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorrelationSummary<T> {
    /// Novel id, or `ALL` for the whole table.
    pub group: String,
    pub n_pairs: usize,
    pub n_undefined: usize,
    pub mean: Option<T>,
    pub sd: Option<T>,
    pub min: Option<T>,
    pub max: Option<T>,
    pub min_pair: Option<(String, String)>,
    pub max_pair: Option<(String, String)>,
}

fn summarize_rows<'a, T: Scalar>(group: String, rows: impl Iterator<Item = &'a CorrelationRow<T>>) -> CorrelationSummary<T> {
    let mut n_pairs = 0;
    let mut defined: Vec<(T, &CorrelationRow<T>)> = Vec::new();
    for r in rows {
        n_pairs += 1;
        if let Some(rho) = r.rho {
            defined.push((rho, r));
        }
    }
    let values: Vec<T> = defined.iter().map(|(v, _)| *v).collect();
    let pair = |r: &CorrelationRow<T>| {
        (
            format!("{}/{}", r.novel_a, r.speaker_a.key()),
            format!("{}/{}", r.novel_b, r.speaker_b.key()),
        )
    };
    // First occurrence wins on ties, keeping output stable.
    let min = defined.iter().fold(None::<&(T, &CorrelationRow<T>)>, |acc, x| match acc {
        Some(a) if a.0 <= x.0 => Some(a),
        _ => Some(x),
    });
    let max = defined.iter().fold(None::<&(T, &CorrelationRow<T>)>, |acc, x| match acc {
        Some(a) if a.0 >= x.0 => Some(a),
        _ => Some(x),
    });
    CorrelationSummary {
        group,
        n_pairs,
        n_undefined: n_pairs - values.len(),
        mean: mean(&values),
        sd: sample_std(&values),
        min: min.map(|x| x.0),
        max: max.map(|x| x.0),
        min_pair: min.map(|x| pair(x.1)),
        max_pair: max.map(|x| pair(x.1)),
    }
}

impl<T: Scalar> CorrelationTable<T> {
    /// Per-novel summaries (pairs within one novel) followed by the global
    /// summary under `ALL`.
    pub fn summaries(&self) -> Vec<CorrelationSummary<T>> {
        let mut by_novel: BTreeMap<&str, Vec<&CorrelationRow<T>>> = BTreeMap::new();
        if self.scope != Scope::MajorAcross {
            for r in &self.rows {
                if r.novel_a == r.novel_b {
                    by_novel.entry(&r.novel_a).or_default().push(r);
                }
            }
        }
        let mut out: Vec<_> = by_novel
            .into_iter()
            .map(|(novel, rows)| summarize_rows(novel.to_string(), rows.into_iter()))
            .collect();
        out.push(summarize_rows("ALL".into(), self.rows.iter()));
        out
    }

    pub fn defined_values(&self) -> Vec<T> {
        self.rows.iter().filter_map(|r| r.rho).collect()
    }
}

/// One histogram bin of correlation values.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HistogramBin {
    pub low: f64,
    pub high: f64,
    pub count: usize,
}

/// Counts of values in equal-width bins over [-1, 1]; the last bin is closed.
pub fn correlation_histogram<T: Scalar>(values: &[T], n_bins: usize) -> Vec<HistogramBin> {
    let width = 2.0 / n_bins as f64;
    let mut bins: Vec<HistogramBin> = (0..n_bins)
        .map(|i| HistogramBin {
            low: -1.0 + i as f64 * width,
            high: -1.0 + (i + 1) as f64 * width,
            count: 0,
        })
        .collect();
    for v in values {
        let v = v.to_f64_lossy();
        if v.is_nan() {
            continue;
        }
        let idx = (((v + 1.0) / width).floor() as isize).clamp(0, n_bins as isize - 1) as usize;
        bins[idx].count += 1;
    }
    bins
}

fn majors<'a, T: Scalar>(
    corpus: &'a Corpus,
    arcs: &'a ArcBank<T>,
    novel_id: &'a str,
    dim: Dimension,
) -> impl Iterator<Item = &'a EmotionArc<T>> + 'a {
    corpus
        .novel(novel_id)
        .into_iter()
        .flat_map(|n| n.characters.iter())
        .filter(|c| c.category == Some(Category::Major))
        .filter_map(move |c| arcs.get(novel_id, &Speaker::Character(c.id.clone()), dim))
}

/// The arc pairs a scope compares, in a deterministic order.
pub fn scope_pairs<'a, T: Scalar>(
    corpus: &'a Corpus,
    arcs: &'a ArcBank<T>,
    scope: Scope,
    dim: Dimension,
) -> Vec<(&'a EmotionArc<T>, &'a EmotionArc<T>)> {
    let narration = Speaker::Meta(MetaSpeaker::Narration);
    let dialogue = Speaker::Meta(MetaSpeaker::Dialogue);
    let mut pairs = Vec::new();
    match scope {
        Scope::NarrationDialogue => {
            for n in &corpus.novels {
                if let (Some(a), Some(b)) = (arcs.get(&n.id, &narration, dim), arcs.get(&n.id, &dialogue, dim)) {
                    pairs.push((a, b));
                }
            }
        }
        Scope::NarrationMajor => {
            for n in &corpus.novels {
                if let Some(a) = arcs.get(&n.id, &narration, dim) {
                    pairs.extend(majors(corpus, arcs, &n.id, dim).map(|b| (a, b)));
                }
            }
        }
        Scope::MajorWithin => {
            for n in &corpus.novels {
                let m: Vec<_> = majors(corpus, arcs, &n.id, dim).collect();
                for i in 0..m.len() {
                    for j in i + 1..m.len() {
                        pairs.push((m[i], m[j]));
                    }
                }
            }
        }
        Scope::MajorAcross => {
            let m: Vec<_> = corpus
                .novels
                .iter()
                .flat_map(|n| majors(corpus, arcs, &n.id, dim))
                .collect();
            for i in 0..m.len() {
                for j in i + 1..m.len() {
                    pairs.push((m[i], m[j]));
                }
            }
        }
    }
    pairs
}

/// Aligns each pair of a scope on its own and correlates it. `corpus` must
/// have categorized characters for the major-character scopes.
pub fn pairwise_correlations<T: Scalar>(
    corpus: &Corpus,
    arcs: &ArcBank<T>,
    scope: Scope,
    dim: Dimension,
    initial_bin_width: f64,
) -> Result<CorrelationTable<T>, AlignError> {
    if !(initial_bin_width > 0.0 && initial_bin_width < 1.0) {
        return Err(AlignError::BadWidth(initial_bin_width));
    }
    let mut pairs = scope_pairs(corpus, arcs, scope, dim);
    // Single-state arcs (from the single-window fallback) cannot be aligned.
    pairs.retain(|(a, b)| {
        let ok = a.len() >= 2 && b.len() >= 2;
        if !ok {
            log::warn!("{scope} {dim}: skipping pair {} / {}: single-state arc", a.label(), b.label());
        }
        ok
    });
    let rows = pairs
        .par_iter()
        .map(|(a, b)| correlate_pair(a, b, initial_bin_width))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CorrelationTable {
        scope,
        dimension: dim,
        rows,
    })
}

/// Aligns and correlates one pair. A constant binned series yields an
/// absent correlation rather than an error.
pub fn correlate_pair<T: Scalar>(
    a: &EmotionArc<T>,
    b: &EmotionArc<T>,
    initial_bin_width: f64,
) -> Result<CorrelationRow<T>, AlignError> {
    let aligned = align_arcs(&[a, b], initial_bin_width)?;
    let rho = match spearman(&aligned.series[0].1, &aligned.series[1].1) {
        Ok(r) => Some(r),
        Err(StatsError::UndefinedCorrelation(_)) => None,
        Err(e) => return Err(e.into()),
    };
    Ok(CorrelationRow {
        novel_a: a.novel_id.clone(),
        speaker_a: a.speaker.clone(),
        novel_b: b.novel_id.clone(),
        speaker_b: b.speaker.clone(),
        rho,
        n_bins: aligned.n_bins(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arc(id: &str, states: Vec<f64>) -> EmotionArc<f64> {
        EmotionArc::from_states("n", Speaker::Character(id.into()), Dimension::Valence, states)
    }

    #[test]
    fn edges_from_shortest() {
        // Shortest arc has 5 states at times 0, .25, .5, .75, 1.
        let short = arc("s", vec![0.1, 0.2, 0.3, 0.4, 0.5]);
        let long = arc("l", (0..9).map(|i| i as f64 / 10.0).collect());
        let al = align_arcs(&[&long, &short], 0.1).unwrap();
        assert_eq!(al.bin_edges, vec![0.0, 0.1, 0.25, 0.5, 0.75, 1.0]);
        assert_eq!(al.n_bins(), 5);
        // [0, .1) holds state 0, [.1, .25) is empty and carries it, the last
        // bin holds the final two states.
        let s = al.get("n/s").unwrap();
        let expected = [0.1, 0.1, 0.2, 0.3, 0.45];
        for (got, want) in s.iter().zip(expected) {
            assert!((got - want).abs() < 1e-15, "{s:?}");
        }
        assert_eq!(al.get("n/l").unwrap().len(), 5);
    }

    #[test]
    fn binning_means_and_closed_last_bin() {
        let a = arc("a", vec![1.0, 2.0, 3.0, 4.0, 5.0]);
        let edges = vec![0.0, 0.3, 0.6, 1.0];
        // Times 0, .25 | .5 | .75, 1.
        assert_eq!(bin_arc(&a, &edges), vec![1.5, 3.0, 4.5]);
    }

    #[test]
    fn identical_arcs_correlate_perfectly() {
        let a = arc("a", vec![0.5, 0.6, 0.4, 0.7, 0.65, 0.3]);
        let mut b = a.clone();
        b.speaker = Speaker::Character("b".into());
        let al = align_arcs(&[&a, &b], 0.01).unwrap();
        assert_eq!(al.series[0].1, al.series[1].1);
        assert!((arc_correlation(&al, "n/a", "n/b").unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn argument_errors() {
        let a = arc("a", vec![0.5, 0.6]);
        assert_eq!(align_arcs(&[&a], 0.01), Err(AlignError::TooFewArcs(1)));
        let b = arc("b", vec![0.5, 0.6]);
        assert_eq!(align_arcs(&[&a, &b], 0.0), Err(AlignError::BadWidth(0.0)));
        assert_eq!(align_arcs(&[&a, &b], 1.0), Err(AlignError::BadWidth(1.0)));
        let c = arc("c", vec![0.5]);
        assert!(matches!(align_arcs(&[&a, &c], 0.1), Err(AlignError::ShortArc { .. })));
        assert!(matches!(align_arcs(&[&a, &a], 0.1), Err(AlignError::DuplicateLabel(_))));
    }

    #[test]
    fn constant_series_gives_absent_rho() {
        let a = arc("a", vec![0.5; 10]);
        let b = arc("b", (0..10).map(|i| i as f64).collect());
        let row = correlate_pair(&a, &b, 0.05).unwrap();
        assert_eq!(row.rho, None);
    }

    #[test]
    fn histogram_counts() {
        let bins = correlation_histogram(&[-1.0, -0.95, 0.0, 0.05, 1.0], 20);
        assert_eq!(bins.len(), 20);
        assert_eq!(bins[0].count, 2);
        assert_eq!(bins[10].count, 2);
        assert_eq!(bins[19].count, 1);
    }

    #[test]
    fn scope_names() {
        for s in Scope::ALL {
            assert_eq!(s.name().parse::<Scope>().unwrap(), s);
        }
    }
}
