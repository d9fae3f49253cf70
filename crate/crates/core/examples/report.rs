//! Runs the full analysis: `report <corpus-dir> <lexicon> <out-dir>`.

use novel_ued::pipeline::{Analysis, PipelineError, RunConfig};
use novel_ued::report::{write_report, OutputTree};

fn main() -> Result<(), PipelineError> {
    let args: Vec<String> = std::env::args().collect();
    let arg = |i: usize, default: &str| args.get(i).cloned().unwrap_or_else(|| default.to_string());
    let config = RunConfig {
        corpus_path: arg(1, "corpus").into(),
        lexicon_path: arg(2, "NRC-VAD-Lexicon.txt").into(),
        ..RunConfig::default()
    };
    let analysis = Analysis::load(config)?;
    for row in analysis.ued_rows() {
        println!("{} {} {:.3}", row.display_name(), row.dimension, row.summary.emo_mean);
    }
    let mut out = OutputTree::create(arg(3, "out"))?;
    write_report(&analysis, &mut out)?;
    out.finish(&analysis.config)?;
    Ok(())
}
