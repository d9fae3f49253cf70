//! End-to-end analysis over a loaded corpus: UED rows per speaker, the
//! per-speaker-type aggregates, gender group tests and outlier tables.
//!
//! Everything here is deterministic. Parallel stages collect in input order
//! and every table is sorted by stable keys before it is returned.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use log::warn;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::align::{pairwise_correlations, scope_pairs, AlignError, CorrelationTable, Scope, DEFAULT_BIN_WIDTH};
use crate::arc::{ArcBank, ArcOptions, EmotionArc, Fallback, DEFAULT_WINDOW};
use crate::corpus::{load_corpus, Category, CategoryRule, Corpus, CorpusError, Gender, MetaSpeaker, Novel, ShareBasis, Speaker};
use crate::lexicon::{Dimension, Lexicon, LexiconError, WordTokenizer};
use crate::scalar::mean;
use crate::stats::{benjamini_hochberg, pooled_t_test, two_way_anova, welch_t_test, AnovaTable, StatsError};
use crate::ued::{summarize_states, Metric, RateConvention, UedSummary};

pub const DEFAULT_ALPHA: f64 = 0.05;

/// Metrics the outlier tables cover.
pub const OUTLIER_METRICS: [Metric; 2] = [Metric::Mean, Metric::Std];

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error(transparent)]
    Lexicon(#[from] LexiconError),
    #[error(transparent)]
    Align(#[from] AlignError),
    #[error(transparent)]
    Stats(#[from] StatsError),
    #[error("scope {scope} ({dimension}): need at least 2 arcs, found {found}")]
    TooFewArcs {
        scope: Scope,
        dimension: Dimension,
        found: usize,
    },
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl PipelineError {
    /// True for failures to read or write files, as opposed to bad input
    /// data or arguments.
    pub fn is_io(&self) -> bool {
        match self {
            PipelineError::Io { .. } => true,
            PipelineError::Corpus(e) => e.is_io(),
            PipelineError::Lexicon(LexiconError::Io { .. }) => true,
            _ => false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TTestKind {
    #[default]
    Welch,
    Pooled,
}

/// Speaker types used for rows and aggregate columns. A character row
/// carries its category; `Character` is the union of the three.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpeakerType {
    Novel,
    Narration,
    Dialogue,
    Character,
    Major,
    Intermediate,
    Minor,
}

impl SpeakerType {
    /// Aggregate table columns, in display order.
    pub const TABLE_COLUMNS: [SpeakerType; 6] = [
        SpeakerType::Novel,
        SpeakerType::Narration,
        SpeakerType::Character,
        SpeakerType::Major,
        SpeakerType::Intermediate,
        SpeakerType::Minor,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SpeakerType::Novel => "novel",
            SpeakerType::Narration => "narration",
            SpeakerType::Dialogue => "dialogue",
            SpeakerType::Character => "character",
            SpeakerType::Major => "major",
            SpeakerType::Intermediate => "intermediate",
            SpeakerType::Minor => "minor",
        }
    }

    /// Whether a row of type `row` belongs to this group.
    pub fn contains(self, row: SpeakerType) -> bool {
        self == row
            || (self == SpeakerType::Character
                && matches!(row, SpeakerType::Major | SpeakerType::Intermediate | SpeakerType::Minor))
    }

    pub fn of(novel: &Novel, speaker: &Speaker) -> SpeakerType {
        match speaker {
            Speaker::Meta(MetaSpeaker::WholeNovel) => SpeakerType::Novel,
            Speaker::Meta(MetaSpeaker::Narration) => SpeakerType::Narration,
            Speaker::Meta(MetaSpeaker::Dialogue) => SpeakerType::Dialogue,
            Speaker::Character(id) => match novel.character(id).and_then(|c| c.category) {
                Some(Category::Major) => SpeakerType::Major,
                Some(Category::Intermediate) => SpeakerType::Intermediate,
                // Uncategorized only happens on a corpus that skipped
                // categorization; treat as the lowest tier.
                Some(Category::Minor) | None => SpeakerType::Minor,
            },
        }
    }
}

impl fmt::Display for SpeakerType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SpeakerType {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [
            SpeakerType::Novel,
            SpeakerType::Narration,
            SpeakerType::Dialogue,
            SpeakerType::Character,
            SpeakerType::Major,
            SpeakerType::Intermediate,
            SpeakerType::Minor,
        ]
        .into_iter()
        .find(|t| t.name() == s.to_ascii_lowercase())
        .ok_or_else(|| format!("unknown speaker type `{s}`"))
    }
}

/// Everything a run depends on. Serialized next to the outputs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub corpus_path: PathBuf,
    pub lexicon_path: PathBuf,
    pub dimensions: Vec<Dimension>,
    pub window_size: usize,
    pub min_tokens: usize,
    pub initial_bin_width: f64,
    pub alpha: f64,
    pub fallback: Fallback,
    pub rate_convention: RateConvention,
    pub share_basis: ShareBasis,
    pub t_test: TTestKind,
    /// Restricts UED rows to these speaker types; empty keeps all.
    pub speaker_filter: Vec<SpeakerType>,
    /// Not echoed: the echo lives inside this directory, and leaving it out
    /// keeps runs into different directories byte-identical.
    #[serde(skip)]
    pub output_dir: PathBuf,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            corpus_path: PathBuf::new(),
            lexicon_path: PathBuf::new(),
            dimensions: Dimension::ALL.to_vec(),
            window_size: DEFAULT_WINDOW,
            min_tokens: DEFAULT_WINDOW,
            initial_bin_width: DEFAULT_BIN_WIDTH,
            alpha: DEFAULT_ALPHA,
            fallback: Fallback::None,
            rate_convention: RateConvention::Inclusive,
            share_basis: ShareBasis::Tokens,
            t_test: TTestKind::Welch,
            speaker_filter: Vec::new(),
            output_dir: PathBuf::from("out"),
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), PipelineError> {
        let bad = |m: String| Err(PipelineError::Config(m));
        if self.window_size < 1 {
            return bad("window size must be at least 1".into());
        }
        if self.min_tokens < 1 {
            return bad("min tokens must be at least 1".into());
        }
        if !(self.initial_bin_width > 0.0 && self.initial_bin_width < 1.0) {
            return bad(format!("bin width {} outside (0, 1)", self.initial_bin_width));
        }
        if !(self.alpha > 0.0 && self.alpha < 1.0) {
            return bad(format!("alpha {} outside (0, 1)", self.alpha));
        }
        if self.dimensions.is_empty() {
            return bad("no dimensions selected".into());
        }
        let mut dims = self.dimensions.clone();
        dims.sort();
        dims.dedup();
        if dims.len() != self.dimensions.len() {
            return bad("dimension listed twice".into());
        }
        Ok(())
    }

    pub fn arc_options(&self) -> ArcOptions {
        ArcOptions {
            window_size: self.window_size,
            min_tokens: self.min_tokens,
            fallback: self.fallback,
        }
    }

    pub fn category_rule(&self) -> CategoryRule {
        CategoryRule {
            basis: self.share_basis,
            ..CategoryRule::default()
        }
    }
}

/// UED metrics of one speaker's arc along one dimension.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct UedRow {
    pub novel_id: String,
    pub speaker: Speaker,
    pub speaker_type: SpeakerType,
    /// Character name, or `narrator` / `novel` / `dialogue` for meta-speakers.
    pub name: String,
    pub gender: Option<Gender>,
    pub author_gender: Gender,
    pub dimension: Dimension,
    pub tokens: usize,
    pub states: usize,
    pub summary: UedSummary<f64>,
}

impl UedRow {
    /// `Name (NovelId)`, the label used in outlier tables.
    pub fn display_name(&self) -> String {
        format!("{} ({})", self.name, self.novel_id)
    }
}

/// Average of one metric over the speakers of one type.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AggregateCell {
    pub dimension: Dimension,
    pub metric: Metric,
    pub speaker_type: SpeakerType,
    /// Speakers for which the metric is defined.
    pub n_speakers: usize,
    /// Mean of the per-speaker values.
    pub speaker_average: Option<f64>,
    /// Per-speaker values weighted by how many displacements each averages
    /// over, i.e. the mean over all pooled displacements.
    pub pooled: Option<f64>,
}

/// Speaker counts and average stream length per type.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpeakerCount {
    pub speaker_type: SpeakerType,
    pub count: usize,
    pub mean_tokens: Option<f64>,
    /// Speakers with an arc along the first configured dimension.
    pub with_arcs: usize,
}

/// The two groupings compared by the gender tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupFactor {
    SpeakerGender,
    AuthorGender,
}

impl GroupFactor {
    pub const ALL: [GroupFactor; 2] = [GroupFactor::SpeakerGender, GroupFactor::AuthorGender];

    pub fn name(self) -> &'static str {
        match self {
            GroupFactor::SpeakerGender => "speaker_gender",
            GroupFactor::AuthorGender => "author_gender",
        }
    }

    fn level(self, row: &UedRow) -> Option<Gender> {
        match self {
            GroupFactor::SpeakerGender => row.gender,
            GroupFactor::AuthorGender => Some(row.author_gender),
        }
    }
}

/// Female versus male t-test on one metric.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GroupTestRow {
    pub factor: GroupFactor,
    pub metric: Metric,
    pub dimension: Dimension,
    pub n_a: usize,
    pub n_b: usize,
    pub mean_a: f64,
    pub mean_b: f64,
    pub statistic: f64,
    pub dof: f64,
    pub p_raw: f64,
    /// Benjamini-Hochberg over every test of the same factor.
    pub p_adjusted: f64,
    pub significant: bool,
}

impl GroupTestRow {
    pub fn group_a(&self) -> String {
        format!("{}=F", self.factor.name())
    }

    pub fn group_b(&self) -> String {
        format!("{}=M", self.factor.name())
    }
}

/// Speaker gender by author gender ANOVA on one metric.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnovaResult {
    pub metric: Metric,
    pub dimension: Dimension,
    pub n: usize,
    pub table: AnovaTable,
    /// Benjamini-Hochberg adjusted p-values for factor A, factor B and the
    /// interaction, each corrected within its own source across the battery.
    pub p_adjusted: [Option<f64>; 3],
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct GroupReport {
    pub tests: Vec<GroupTestRow>,
    pub anova: Vec<AnovaResult>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Extreme {
    Low,
    High,
}

impl Extreme {
    pub fn name(self) -> &'static str {
        match self {
            Extreme::Low => "low",
            Extreme::High => "high",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OutlierRow {
    pub dimension: Dimension,
    pub metric: Metric,
    pub speaker_type: SpeakerType,
    pub extreme: Extreme,
    pub name: String,
    pub value: f64,
}

/// A categorized corpus with every arc computed.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub config: RunConfig,
    pub corpus: Corpus,
    pub arcs: ArcBank<f64>,
}

impl Analysis {
    /// Loads the corpus and lexicon named in `config` and computes all arcs.
    pub fn load(config: RunConfig) -> Result<Self, PipelineError> {
        config.validate()?;
        let corpus = load_corpus(&config.corpus_path)?;
        let lexicon = Lexicon::<f64>::load(&config.lexicon_path)?;
        Self::new(config, corpus, &lexicon)
    }

    pub fn new(config: RunConfig, corpus: Corpus, lexicon: &Lexicon<f64>) -> Result<Self, PipelineError> {
        config.validate()?;
        let tokenizer = WordTokenizer;
        let corpus = corpus.categorized(&tokenizer, &config.category_rule());
        let arcs = ArcBank::build(&corpus, lexicon, &tokenizer, &config.dimensions, &config.arc_options());
        for (novel, speaker, dim, err) in &arcs.failures {
            warn!("{novel}/{} {dim}: no arc: {err}", speaker.key());
        }
        Ok(Analysis { config, corpus, arcs })
    }

    fn row_for(&self, arc: &EmotionArc<f64>) -> Option<UedRow> {
        let novel = self.corpus.novel(&arc.novel_id)?;
        let speaker_type = SpeakerType::of(novel, &arc.speaker);
        let (name, gender) = match &arc.speaker {
            Speaker::Meta(MetaSpeaker::WholeNovel) => ("novel".to_string(), None),
            Speaker::Meta(MetaSpeaker::Narration) => ("narrator".to_string(), None),
            Speaker::Meta(MetaSpeaker::Dialogue) => ("dialogue".to_string(), None),
            Speaker::Character(id) => {
                let c = novel.character(id)?;
                (c.name.clone(), Some(c.gender))
            }
        };
        Some(UedRow {
            novel_id: arc.novel_id.clone(),
            speaker: arc.speaker.clone(),
            speaker_type,
            name,
            gender,
            author_gender: novel.author_gender,
            dimension: arc.dimension,
            tokens: self.arcs.tokens(&arc.novel_id, &arc.speaker).unwrap_or(0),
            states: arc.len(),
            summary: summarize_states(&arc.states, self.config.rate_convention),
        })
    }

    /// One row per arc, in (novel, speaker, dimension) order, after the
    /// configured speaker-type filter.
    pub fn ued_rows(&self) -> Vec<UedRow> {
        let arcs: Vec<&EmotionArc<f64>> = self.arcs.iter().collect();
        let filter = &self.config.speaker_filter;
        arcs.par_iter()
            .filter_map(|a| self.row_for(a))
            .filter(|r| filter.is_empty() || filter.iter().any(|t| t.contains(r.speaker_type)))
            .collect()
    }

    /// Speaker counts and mean tokens per type. Characters count when they
    /// have at least one attributed quotation.
    pub fn speaker_counts(&self) -> Vec<SpeakerCount> {
        let first_dim = self.config.dimensions.first().copied();
        let mut groups: BTreeMap<SpeakerType, (Vec<f64>, usize)> = BTreeMap::new();
        for ((novel_id, speaker), &tokens) in &self.arcs.token_counts {
            let Some(novel) = self.corpus.novel(novel_id) else { continue };
            let t = SpeakerType::of(novel, speaker);
            let has_arc = first_dim.is_some_and(|d| self.arcs.get(novel_id, speaker, d).is_some());
            for column in [SpeakerType::Novel, SpeakerType::Narration, SpeakerType::Dialogue]
                .into_iter()
                .chain(SpeakerType::TABLE_COLUMNS.into_iter().skip(2))
            {
                if column.contains(t) {
                    let entry = groups.entry(column).or_default();
                    entry.0.push(tokens as f64);
                    entry.1 += has_arc as usize;
                }
            }
        }
        [
            SpeakerType::Novel,
            SpeakerType::Narration,
            SpeakerType::Dialogue,
            SpeakerType::Character,
            SpeakerType::Major,
            SpeakerType::Intermediate,
            SpeakerType::Minor,
        ]
        .into_iter()
        .map(|t| {
            let (tokens, with_arcs) = groups.remove(&t).unwrap_or_default();
            SpeakerCount {
                speaker_type: t,
                count: tokens.len(),
                mean_tokens: mean(&tokens),
                with_arcs,
            }
        })
        .collect()
    }

    /// Every metric averaged per speaker-type column, for each dimension.
    pub fn aggregate(&self, rows: &[UedRow]) -> Vec<AggregateCell> {
        aggregate(rows, &self.config.dimensions)
    }

    /// Correlations for one scope. With `strict`, a scope with fewer than two
    /// candidate arcs is an error instead of an empty table.
    pub fn correlate(&self, scope: Scope, dim: Dimension, strict: bool) -> Result<CorrelationTable<f64>, PipelineError> {
        let found = scope_arc_count(&self.corpus, &self.arcs, scope, dim);
        if strict && found < 2 {
            return Err(PipelineError::TooFewArcs {
                scope,
                dimension: dim,
                found,
            });
        }
        Ok(pairwise_correlations(
            &self.corpus,
            &self.arcs,
            scope,
            dim,
            self.config.initial_bin_width,
        )?)
    }

    pub fn group_tests(&self, rows: &[UedRow]) -> Result<GroupReport, PipelineError> {
        group_tests(rows, &self.config)
    }

    pub fn outliers(&self, rows: &[UedRow]) -> Vec<OutlierRow> {
        outliers(rows, &self.config.dimensions)
    }
}

/// Distinct arcs a scope draws its pairs from.
pub fn scope_arc_count(corpus: &Corpus, arcs: &ArcBank<f64>, scope: Scope, dim: Dimension) -> usize {
    let mut labels: Vec<String> = scope_pairs(corpus, arcs, scope, dim)
        .into_iter()
        .flat_map(|(a, b)| [a.label(), b.label()])
        .collect();
    labels.sort();
    labels.dedup();
    if !labels.is_empty() {
        return labels.len();
    }
    // No pairs: count what is there so the error can say so.
    let narration = Speaker::Meta(MetaSpeaker::Narration);
    let dialogue = Speaker::Meta(MetaSpeaker::Dialogue);
    let mut found = 0;
    for n in &corpus.novels {
        let majors = n
            .characters
            .iter()
            .filter(|c| c.category == Some(Category::Major))
            .filter(|c| arcs.get(&n.id, &Speaker::Character(c.id.clone()), dim).is_some())
            .count();
        let has = |s: &Speaker| arcs.get(&n.id, s, dim).is_some() as usize;
        found += match scope {
            Scope::NarrationDialogue => has(&narration) + has(&dialogue),
            Scope::NarrationMajor => has(&narration) + majors,
            Scope::MajorWithin | Scope::MajorAcross => majors,
        };
    }
    found
}

pub fn aggregate(rows: &[UedRow], dims: &[Dimension]) -> Vec<AggregateCell> {
    let mut out = Vec::new();
    for &dim in dims {
        for metric in Metric::ALL {
            for column in SpeakerType::TABLE_COLUMNS {
                let members = rows
                    .iter()
                    .filter(|r| r.dimension == dim && column.contains(r.speaker_type));
                let mut values = Vec::new();
                let (mut weighted, mut weights) = (0.0, 0usize);
                for r in members {
                    if let Some(v) = r.summary.get(metric) {
                        values.push(v);
                        let w = r.summary.weight(metric);
                        weighted += v * w as f64;
                        weights += w;
                    }
                }
                out.push(AggregateCell {
                    dimension: dim,
                    metric,
                    speaker_type: column,
                    n_speakers: values.len(),
                    speaker_average: mean(&values),
                    pooled: (weights > 0).then(|| weighted / weights as f64),
                });
            }
        }
    }
    out
}

fn is_character(row: &UedRow) -> bool {
    SpeakerType::Character.contains(row.speaker_type)
}

fn split_fm(rows: &[&UedRow], factor: GroupFactor, metric: Metric) -> (Vec<f64>, Vec<f64>) {
    let (mut f, mut m) = (Vec::new(), Vec::new());
    for r in rows {
        let Some(v) = r.summary.get(metric) else { continue };
        match factor.level(r) {
            Some(Gender::Female) => f.push(v),
            Some(Gender::Male) => m.push(v),
            _ => {}
        }
    }
    (f, m)
}

/// Female versus male t-tests for both factors over every metric and
/// dimension, followed by the speaker-gender by author-gender ANOVA. Only
/// character rows take part. Tests whose groups are degenerate are skipped
/// with a warning.
pub fn group_tests(rows: &[UedRow], config: &RunConfig) -> Result<GroupReport, PipelineError> {
    let characters: Vec<&UedRow> = rows.iter().filter(|r| is_character(r)).collect();
    let mut report = GroupReport::default();

    for factor in GroupFactor::ALL {
        let mut family = Vec::new();
        for &dim in &config.dimensions {
            let in_dim: Vec<&UedRow> = characters.iter().copied().filter(|r| r.dimension == dim).collect();
            for metric in Metric::ALL {
                let (f, m) = split_fm(&in_dim, factor, metric);
                let test = match config.t_test {
                    TTestKind::Welch => welch_t_test(&f, &m),
                    TTestKind::Pooled => pooled_t_test(&f, &m),
                };
                match test {
                    Ok(t) => family.push(GroupTestRow {
                        factor,
                        metric,
                        dimension: dim,
                        n_a: f.len(),
                        n_b: m.len(),
                        mean_a: mean(&f).unwrap_or(f64::NAN),
                        mean_b: mean(&m).unwrap_or(f64::NAN),
                        statistic: t.statistic,
                        dof: t.dof,
                        p_raw: t.p_value,
                        p_adjusted: f64::NAN,
                        significant: false,
                    }),
                    Err(e) => warn!("{} {dim} {metric}: t-test skipped: {e}", factor.name()),
                }
            }
        }
        let p: Vec<f64> = family.iter().map(|t| t.p_raw).collect();
        let bh = benjamini_hochberg(&p, config.alpha)?;
        for (row, (adj, rej)) in family.iter_mut().zip(bh.adjusted.into_iter().zip(bh.reject)) {
            row.p_adjusted = adj;
            row.significant = rej;
        }
        report.tests.extend(family);
    }

    for &dim in &config.dimensions {
        for metric in Metric::ALL {
            let mut values = Vec::new();
            let mut speaker = Vec::new();
            let mut author = Vec::new();
            for r in characters.iter().filter(|r| r.dimension == dim) {
                let (Some(v), Some(g)) = (r.summary.get(metric), r.gender) else { continue };
                let binary = |g: Gender| matches!(g, Gender::Female | Gender::Male);
                if binary(g) && binary(r.author_gender) {
                    values.push(v);
                    speaker.push(g.code());
                    author.push(r.author_gender.code());
                }
            }
            match two_way_anova(&values, &speaker, &author) {
                Ok(mut table) => report.anova.push(AnovaResult {
                    metric,
                    dimension: dim,
                    n: values.len(),
                    table: {
                        table.factor_a.source = GroupFactor::SpeakerGender.name().into();
                        table.factor_b.source = GroupFactor::AuthorGender.name().into();
                        table.interaction.source = "speaker_gender:author_gender".into();
                        table
                    },
                    p_adjusted: [None; 3],
                }),
                Err(e) => warn!("{dim} {metric}: ANOVA skipped: {e}"),
            }
        }
    }
    for source in 0..3 {
        let idx: Vec<(usize, f64)> = report
            .anova
            .iter()
            .enumerate()
            .filter_map(|(i, a)| a.table.rows()[source].p_value.map(|p| (i, p)))
            .collect();
        let p: Vec<f64> = idx.iter().map(|&(_, p)| p).collect();
        let bh = benjamini_hochberg(&p, config.alpha)?;
        for (&(i, _), adj) in idx.iter().zip(bh.adjusted) {
            report.anova[i].p_adjusted[source] = Some(adj);
        }
    }
    Ok(report)
}

/// Box-plot outliers of the mean and variability, separately for novels,
/// narration and characters. Strata with fewer than four speakers are
/// skipped with a warning.
pub fn outliers(rows: &[UedRow], dims: &[Dimension]) -> Vec<OutlierRow> {
    let mut out = Vec::new();
    for &dim in dims {
        for metric in OUTLIER_METRICS {
            for stratum in [SpeakerType::Novel, SpeakerType::Narration, SpeakerType::Character] {
                let values: Vec<(String, f64)> = rows
                    .iter()
                    .filter(|r| r.dimension == dim && stratum.contains(r.speaker_type))
                    .filter_map(|r| r.summary.get(metric).map(|v| (r.display_name(), v)))
                    .collect();
                let report = match crate::stats::iqr_outliers(&values) {
                    Ok(r) => r,
                    Err(e) => {
                        warn!("{dim} {metric} {stratum}: outliers skipped: {e}");
                        continue;
                    }
                };
                let rows = report
                    .low_outliers
                    .into_iter()
                    .map(|o| (Extreme::Low, o))
                    .chain(report.high_outliers.into_iter().map(|o| (Extreme::High, o)));
                for (extreme, (name, value)) in rows {
                    out.push(OutlierRow {
                        dimension: dim,
                        metric,
                        speaker_type: stratum,
                        extreme,
                        name,
                        value,
                    });
                }
            }
        }
    }
    out
}
