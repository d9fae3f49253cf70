use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use novel_ued::align::Scope;
use novel_ued::arc::{Fallback, DEFAULT_WINDOW};
use novel_ued::corpus::ShareBasis;
use novel_ued::pipeline::{Analysis, PipelineError, RunConfig, SpeakerType, TTestKind, DEFAULT_ALPHA};
use novel_ued::report::{self, OutputTree};
use novel_ued::ued::RateConvention;
use novel_ued::Dimension;

const EXIT_VALIDATION: u8 = 1;
const EXIT_IO: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "novel-ued", version, about = "Speaker-level emotion arcs and dynamics for annotated novels")]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Opts {
    /// Corpus root: novel_meta.csv plus one directory per novel.
    #[arg(long, global = true)]
    corpus: Option<PathBuf>,
    /// Tab-separated word/valence/arousal/dominance lexicon.
    #[arg(long, global = true)]
    lexicon: Option<PathBuf>,
    /// Dimensions to analyse, comma separated (v,a,d or full names).
    #[arg(long, global = true, value_delimiter = ',', default_value = "v,a,d")]
    dims: Vec<Dimension>,
    /// Rolling window size in tokens.
    #[arg(long, global = true, default_value_t = DEFAULT_WINDOW)]
    window: usize,
    /// Speakers with fewer tokens get no arc. Defaults to the window size.
    #[arg(long, global = true)]
    min_tokens: Option<usize>,
    /// Width of the first alignment bin.
    #[arg(long, global = true, default_value_t = novel_ued::align::DEFAULT_BIN_WIDTH)]
    bin_width: f64,
    /// Significance level for the Benjamini-Hochberg correction.
    #[arg(long, global = true, default_value_t = DEFAULT_ALPHA)]
    alpha: f64,
    /// Handling of speakers above --min-tokens but below --window.
    #[arg(long, global = true, value_enum, default_value_t = FallbackArg::None)]
    fallback: FallbackArg,
    /// Step counting for rise and recovery rates.
    #[arg(long, global = true, value_enum, default_value_t = RatesArg::Inclusive)]
    rates: RatesArg,
    /// Measure of a character's dialogue share for the major threshold.
    #[arg(long, global = true, value_enum, default_value_t = ShareArg::Tokens)]
    share_basis: ShareArg,
    /// Two-sample t-test variant for the gender comparisons.
    #[arg(long, global = true, value_enum, default_value_t = TTestArg::Welch)]
    t_test: TTestArg,
    /// Keep only these speaker types in UED-based tables, comma separated.
    #[arg(long, global = true, value_delimiter = ',')]
    speaker_type: Vec<SpeakerType>,
    /// Output directory.
    #[arg(long, global = true, default_value = "out")]
    out: PathBuf,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Arc CSVs per novel and an SVG chart per arc.
    Arcs,
    /// UED metrics per speaker and aggregate tables per speaker type.
    Ued,
    /// Aligned arc correlations, summaries and histogram data.
    Correlate {
        /// Scopes to run; all of them when omitted.
        #[arg(long, value_delimiter = ',')]
        scope: Vec<Scope>,
    },
    /// Gender t-tests with Benjamini-Hochberg correction, and two-way ANOVA.
    Groups,
    /// Box-plot outliers of emotion mean and variability.
    Outliers,
    /// Everything above.
    Report,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FallbackArg {
    None,
    SingleWindow,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum RatesArg {
    Inclusive,
    Exclusive,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ShareArg {
    Tokens,
    Quotations,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TTestArg {
    Welch,
    Pooled,
}

impl Opts {
    fn config(&self) -> Result<RunConfig, PipelineError> {
        let missing = |flag: &str| PipelineError::Config(format!("--{flag} is required"));
        Ok(RunConfig {
            corpus_path: self.corpus.clone().ok_or_else(|| missing("corpus"))?,
            lexicon_path: self.lexicon.clone().ok_or_else(|| missing("lexicon"))?,
            dimensions: self.dims.clone(),
            window_size: self.window,
            min_tokens: self.min_tokens.unwrap_or(self.window),
            initial_bin_width: self.bin_width,
            alpha: self.alpha,
            fallback: match self.fallback {
                FallbackArg::None => Fallback::None,
                FallbackArg::SingleWindow => Fallback::SingleWindow,
            },
            rate_convention: match self.rates {
                RatesArg::Inclusive => RateConvention::Inclusive,
                RatesArg::Exclusive => RateConvention::Exclusive,
            },
            share_basis: match self.share_basis {
                ShareArg::Tokens => ShareBasis::Tokens,
                ShareArg::Quotations => ShareBasis::Quotations,
            },
            t_test: match self.t_test {
                TTestArg::Welch => TTestKind::Welch,
                TTestArg::Pooled => TTestKind::Pooled,
            },
            speaker_filter: self.speaker_type.clone(),
            output_dir: self.out.clone(),
        })
    }
}

fn run(cli: Cli) -> Result<PathBuf, PipelineError> {
    let config = cli.opts.config()?;
    config.validate()?;
    let analysis = Analysis::load(config)?;
    let mut out = OutputTree::create(&analysis.config.output_dir)?;
    match cli.command {
        Command::Arcs => report::write_arcs(&analysis, &mut out)?,
        Command::Ued => {
            let rows = analysis.ued_rows();
            report::write_ued(&analysis, &rows, &mut out)?;
        }
        Command::Correlate { scope } => {
            // Explicitly requested scopes must have something to compare.
            let strict = !scope.is_empty();
            let scopes = if strict { scope } else { Scope::ALL.to_vec() };
            report::write_correlations(&analysis, &scopes, strict, &mut out)?;
        }
        Command::Groups => {
            let rows = analysis.ued_rows();
            report::write_groups(&analysis, &rows, &mut out)?;
        }
        Command::Outliers => {
            let rows = analysis.ued_rows();
            report::write_outliers(&analysis, &rows, &mut out)?;
        }
        Command::Report => report::write_report(&analysis, &mut out)?,
    }
    out.finish(&analysis.config)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_VALIDATION)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(dir) => {
            println!("{}", dir.display());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_io() { EXIT_IO } else { EXIT_VALIDATION })
        }
    }
}
