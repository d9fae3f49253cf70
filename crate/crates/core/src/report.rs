//! CSV and JSON output for every analysis table, plus the output-directory
//! layout the CLI writes.
//!
//! Numbers are written with Rust's shortest round-trip formatting and absent
//! values as empty fields, so two runs over the same inputs produce identical
//! bytes.

use std::fs;
use std::path::{Path, PathBuf};

use log::info;
use serde::Serialize;

use crate::align::{correlation_histogram, CorrelationTable, Scope};
use crate::arc::{ArcBank, EmotionArc};
use crate::lexicon::Dimension;
use crate::pipeline::{AggregateCell, Analysis, AnovaResult, GroupTestRow, OutlierRow, PipelineError, SpeakerCount, SpeakerType, UedRow};
use crate::svg::arc_chart;
use crate::ued::Metric;

/// Histogram bins over [-1, 1] for the correlation distributions.
pub const HISTOGRAM_BINS: usize = 20;

pub const CONFIG_FILE: &str = "config.json";
pub const MANIFEST_FILE: &str = "manifest.json";

fn num(x: f64) -> String {
    if x.is_nan() {
        String::new()
    } else {
        x.to_string()
    }
}

fn opt(x: Option<f64>) -> String {
    x.map(num).unwrap_or_default()
}

fn csv_bytes(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Vec<u8> {
    let mut w = csv::Writer::from_writer(Vec::new());
    // Writing into a Vec cannot fail.
    w.write_record(header).expect("in-memory csv write");
    for r in rows {
        w.write_record(&r).expect("in-memory csv write");
    }
    w.into_inner().expect("in-memory csv flush")
}

pub const ARC_HEADER: [&str; 7] = ["novel_id", "speaker", "dimension", "index", "time", "state", "coverage"];

pub fn arcs_csv<'a>(arcs: impl IntoIterator<Item = &'a EmotionArc<f64>>) -> Vec<u8> {
    let rows = arcs.into_iter().flat_map(|a| {
        (0..a.len()).map(move |i| {
            vec![
                a.novel_id.clone(),
                a.speaker.key().to_string(),
                a.dimension.name().to_string(),
                i.to_string(),
                num(a.times[i]),
                num(a.states[i]),
                num(a.coverage[i]),
            ]
        })
    });
    csv_bytes(&ARC_HEADER, rows)
}

pub fn failures_csv(bank: &ArcBank<f64>) -> Vec<u8> {
    let rows = bank.failures.iter().map(|(n, s, d, e)| {
        vec![n.clone(), s.key().to_string(), d.name().to_string(), e.to_string()]
    });
    csv_bytes(&["novel_id", "speaker", "dimension", "error"], rows)
}

pub fn ued_header() -> Vec<&'static str> {
    let mut h = vec![
        "novel_id",
        "speaker",
        "speaker_type",
        "name",
        "gender",
        "author_gender",
        "dimension",
        "tokens",
        "states",
    ];
    h.extend(Metric::ALL.iter().map(|m| m.name()));
    h.extend(["low_count", "high_count"]);
    h
}

pub fn ued_csv(rows: &[UedRow]) -> Vec<u8> {
    let records = rows.iter().map(|r| {
        let mut rec = vec![
            r.novel_id.clone(),
            r.speaker.key().to_string(),
            r.speaker_type.name().to_string(),
            r.name.clone(),
            r.gender.map(|g| g.code().to_string()).unwrap_or_default(),
            r.author_gender.code().to_string(),
            r.dimension.name().to_string(),
            r.tokens.to_string(),
            r.states.to_string(),
        ];
        rec.extend(Metric::ALL.iter().map(|&m| opt(r.summary.get(m))));
        rec.push(r.summary.low_count.to_string());
        rec.push(r.summary.high_count.to_string());
        rec
    });
    csv_bytes(&ued_header(), records)
}

pub fn speaker_counts_csv(counts: &[SpeakerCount]) -> Vec<u8> {
    let rows = counts.iter().map(|c| {
        vec![
            c.speaker_type.name().to_string(),
            c.count.to_string(),
            opt(c.mean_tokens),
            c.with_arcs.to_string(),
        ]
    });
    csv_bytes(&["speaker_type", "count", "mean_tokens", "with_arcs"], rows)
}

/// Wide table for one dimension: one row per metric, one column per speaker
/// type. `pooled` selects the displacement-weighted average.
pub fn aggregate_csv(cells: &[AggregateCell], dim: Dimension, pooled: bool) -> Vec<u8> {
    let mut header = vec!["metric"];
    header.extend(SpeakerType::TABLE_COLUMNS.iter().map(|t| t.name()));
    let rows = Metric::ALL.iter().map(|&m| {
        let mut rec = vec![m.name().to_string()];
        for t in SpeakerType::TABLE_COLUMNS {
            let cell = cells
                .iter()
                .find(|c| c.dimension == dim && c.metric == m && c.speaker_type == t);
            rec.push(opt(cell.and_then(|c| if pooled { c.pooled } else { c.speaker_average })));
        }
        rec
    });
    csv_bytes(&header, rows)
}

pub const CORRELATION_HEADER: [&str; 8] = [
    "scope",
    "dimension",
    "novel_a",
    "speaker_a",
    "novel_b",
    "speaker_b",
    "rho",
    "n_bins",
];

pub fn correlation_csv(table: &CorrelationTable<f64>) -> Vec<u8> {
    let rows = table.rows.iter().map(|r| {
        vec![
            table.scope.name().to_string(),
            table.dimension.name().to_string(),
            r.novel_a.clone(),
            r.speaker_a.key().to_string(),
            r.novel_b.clone(),
            r.speaker_b.key().to_string(),
            opt(r.rho),
            r.n_bins.to_string(),
        ]
    });
    csv_bytes(&CORRELATION_HEADER, rows)
}

pub fn correlation_summary_csv(table: &CorrelationTable<f64>) -> Vec<u8> {
    let rows = table.summaries().into_iter().map(|s| {
        let (min_a, min_b) = s.min_pair.unwrap_or_default();
        let (max_a, max_b) = s.max_pair.unwrap_or_default();
        vec![
            table.scope.name().to_string(),
            table.dimension.name().to_string(),
            s.group,
            s.n_pairs.to_string(),
            s.n_undefined.to_string(),
            opt(s.mean),
            opt(s.sd),
            opt(s.min),
            min_a,
            min_b,
            opt(s.max),
            max_a,
            max_b,
        ]
    });
    csv_bytes(
        &[
            "scope",
            "dimension",
            "group",
            "n_pairs",
            "n_undefined",
            "mean",
            "sd",
            "min",
            "min_a",
            "min_b",
            "max",
            "max_a",
            "max_b",
        ],
        rows,
    )
}

pub fn histogram_csv(table: &CorrelationTable<f64>) -> Vec<u8> {
    let bins = correlation_histogram(&table.defined_values(), HISTOGRAM_BINS);
    let rows = bins.iter().map(|b| {
        vec![
            table.scope.name().to_string(),
            table.dimension.name().to_string(),
            num(b.low),
            num(b.high),
            b.count.to_string(),
        ]
    });
    csv_bytes(&["scope", "dimension", "low", "high", "count"], rows)
}

pub const GROUP_HEADER: [&str; 12] = [
    "metric",
    "dimension",
    "group_a",
    "group_b",
    "n_a",
    "n_b",
    "mean_a",
    "mean_b",
    "statistic",
    "p_raw",
    "p_adjusted",
    "significant",
];

pub fn group_tests_csv(tests: &[GroupTestRow]) -> Vec<u8> {
    let rows = tests.iter().map(|t| {
        vec![
            t.metric.name().to_string(),
            t.dimension.name().to_string(),
            t.group_a(),
            t.group_b(),
            t.n_a.to_string(),
            t.n_b.to_string(),
            num(t.mean_a),
            num(t.mean_b),
            num(t.statistic),
            num(t.p_raw),
            num(t.p_adjusted),
            t.significant.to_string(),
        ]
    });
    csv_bytes(&GROUP_HEADER, rows)
}

pub fn anova_csv(results: &[AnovaResult], alpha: f64) -> Vec<u8> {
    let mut rows = Vec::new();
    for a in results {
        for (i, row) in a.table.rows().into_iter().enumerate() {
            let adjusted = a.p_adjusted.get(i).copied().flatten();
            rows.push(vec![
                a.metric.name().to_string(),
                a.dimension.name().to_string(),
                row.source.clone(),
                num(row.sum_of_squares),
                num(row.dof),
                opt(row.f),
                opt(row.p_value),
                opt(adjusted),
                adjusted.map(|p| (p <= alpha).to_string()).unwrap_or_default(),
            ]);
        }
    }
    csv_bytes(
        &[
            "metric",
            "dimension",
            "source",
            "sum_of_squares",
            "dof",
            "f",
            "p_raw",
            "p_adjusted",
            "significant",
        ],
        rows,
    )
}

/// Cell and marginal means behind each ANOVA, for reading effect direction.
pub fn anova_means_csv(results: &[AnovaResult]) -> Vec<u8> {
    let mut rows = Vec::new();
    for a in results {
        for (factor, means) in [("speaker_gender", &a.table.level_means_a), ("author_gender", &a.table.level_means_b)] {
            for (level, m) in means {
                rows.push(vec![
                    a.metric.name().to_string(),
                    a.dimension.name().to_string(),
                    factor.to_string(),
                    level.clone(),
                    num(*m),
                ]);
            }
        }
    }
    csv_bytes(&["metric", "dimension", "factor", "level", "mean"], rows)
}

pub const OUTLIER_HEADER: [&str; 6] = ["dim", "metric", "speaker_type", "extreme", "name", "value"];

pub fn outliers_csv(rows: &[OutlierRow]) -> Vec<u8> {
    let records = rows.iter().map(|o| {
        vec![
            o.dimension.name().to_string(),
            o.metric.name().to_string(),
            o.speaker_type.name().to_string(),
            o.extreme.name().to_string(),
            o.name.clone(),
            num(o.value),
        ]
    });
    csv_bytes(&OUTLIER_HEADER, records)
}

/// Makes an id safe to use as one path component.
pub fn file_stem(id: &str) -> String {
    let s: String = id
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() || matches!(c, '-' | '_' | '.') { c } else { '_' })
        .collect();
    if s.is_empty() || s.chars().all(|c| c == '.') {
        format!("_{s}")
    } else {
        s
    }
}

#[derive(Debug, Serialize)]
struct ManifestEntry {
    path: String,
    bytes: usize,
}

#[derive(Debug, Serialize)]
struct Manifest<'a> {
    tool: &'a str,
    version: &'a str,
    files: Vec<ManifestEntry>,
}

/// An output directory being filled by one run. Paths are recorded as they
/// are written; [`OutputTree::finish`] writes the config echo and manifest.
#[derive(Debug)]
pub struct OutputTree {
    root: PathBuf,
    written: Vec<(String, usize)>,
}

impl OutputTree {
    pub fn create(root: impl AsRef<Path>) -> Result<Self, PipelineError> {
        let root = root.as_ref().to_path_buf();
        fs::create_dir_all(&root).map_err(|source| PipelineError::Io {
            path: root.clone(),
            source,
        })?;
        Ok(OutputTree {
            root,
            written: Vec::new(),
        })
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    /// Writes `bytes` to `rel` (slash-separated) under the root.
    pub fn write(&mut self, rel: &str, bytes: &[u8]) -> Result<(), PipelineError> {
        let path = rel.split('/').fold(self.root.clone(), |p, c| p.join(c));
        if let Some(parent) = path.parent() {
            fs::create_dir_all(parent).map_err(|source| PipelineError::Io {
                path: parent.to_path_buf(),
                source,
            })?;
        }
        fs::write(&path, bytes).map_err(|source| PipelineError::Io { path, source })?;
        self.written.push((rel.to_string(), bytes.len()));
        Ok(())
    }

    /// Writes the config echo and a manifest of every file from this run.
    pub fn finish(mut self, analysis_config: &impl Serialize) -> Result<PathBuf, PipelineError> {
        let mut config = serde_json::to_vec_pretty(analysis_config).expect("config serializes");
        config.push(b'\n');
        self.write(CONFIG_FILE, &config)?;
        let mut files: Vec<ManifestEntry> = self
            .written
            .iter()
            .map(|(path, bytes)| ManifestEntry {
                path: path.clone(),
                bytes: *bytes,
            })
            .collect();
        files.sort_by(|a, b| a.path.cmp(&b.path));
        files.dedup_by(|a, b| a.path == b.path);
        let manifest = Manifest {
            tool: env!("CARGO_PKG_NAME"),
            version: env!("CARGO_PKG_VERSION"),
            files,
        };
        let mut bytes = serde_json::to_vec_pretty(&manifest).expect("manifest serializes");
        bytes.push(b'\n');
        let path = self.root.join(MANIFEST_FILE);
        fs::write(&path, bytes).map_err(|source| PipelineError::Io {
            path: path.clone(),
            source,
        })?;
        info!("wrote {} files under {}", self.written.len(), self.root.display());
        Ok(self.root)
    }
}

/// One arc CSV per novel, one SVG per arc, and the list of arcs that
/// could not be computed.
pub fn write_arcs(analysis: &Analysis, out: &mut OutputTree) -> Result<(), PipelineError> {
    for novel in &analysis.corpus.novels {
        let arcs: Vec<&EmotionArc<f64>> = analysis.arcs.iter().filter(|a| a.novel_id == novel.id).collect();
        let stem = file_stem(&novel.id);
        out.write(&format!("arcs/{stem}.csv"), &arcs_csv(arcs.iter().copied()))?;
        for a in arcs {
            let rel = format!(
                "arcs/svg/{stem}/{}_{}.svg",
                file_stem(a.speaker.key()),
                a.dimension.name()
            );
            out.write(&rel, arc_chart(a).as_bytes())?;
        }
    }
    out.write("arcs/failures.csv", &failures_csv(&analysis.arcs))
}

/// Per-speaker UED rows, speaker counts and both aggregate layouts.
pub fn write_ued(analysis: &Analysis, rows: &[UedRow], out: &mut OutputTree) -> Result<(), PipelineError> {
    out.write("ued/ued.csv", &ued_csv(rows))?;
    out.write("ued/speaker_counts.csv", &speaker_counts_csv(&analysis.speaker_counts()))?;
    let cells = analysis.aggregate(rows);
    for &dim in &analysis.config.dimensions {
        out.write(&format!("ued/aggregate_{}.csv", dim.name()), &aggregate_csv(&cells, dim, false))?;
        out.write(
            &format!("ued/aggregate_pooled_{}.csv", dim.name()),
            &aggregate_csv(&cells, dim, true),
        )?;
    }
    Ok(())
}

/// Correlation rows, summaries and histogram data for each scope and
/// dimension. With `strict`, a scope lacking two arcs fails the run.
pub fn write_correlations(
    analysis: &Analysis,
    scopes: &[Scope],
    strict: bool,
    out: &mut OutputTree,
) -> Result<(), PipelineError> {
    for &scope in scopes {
        for &dim in &analysis.config.dimensions {
            let table = analysis.correlate(scope, dim, strict)?;
            let base = format!("correlate/{}_{}", scope.name(), dim.name());
            out.write(&format!("{base}.csv"), &correlation_csv(&table))?;
            out.write(&format!("{base}_summary.csv"), &correlation_summary_csv(&table))?;
            out.write(&format!("{base}_histogram.csv"), &histogram_csv(&table))?;
        }
    }
    Ok(())
}

pub fn write_groups(analysis: &Analysis, rows: &[UedRow], out: &mut OutputTree) -> Result<(), PipelineError> {
    let report = analysis.group_tests(rows)?;
    out.write("groups/groups.csv", &group_tests_csv(&report.tests))?;
    out.write("groups/anova.csv", &anova_csv(&report.anova, analysis.config.alpha))?;
    out.write("groups/anova_means.csv", &anova_means_csv(&report.anova))
}

pub fn write_outliers(analysis: &Analysis, rows: &[UedRow], out: &mut OutputTree) -> Result<(), PipelineError> {
    out.write("outliers/outliers.csv", &outliers_csv(&analysis.outliers(rows)))
}

/// Every table and chart.
pub fn write_report(analysis: &Analysis, out: &mut OutputTree) -> Result<(), PipelineError> {
    let rows = analysis.ued_rows();
    write_arcs(analysis, out)?;
    write_ued(analysis, &rows, out)?;
    write_correlations(analysis, &Scope::ALL, false, out)?;
    write_groups(analysis, &rows, out)?;
    write_outliers(analysis, &rows, out)
}
