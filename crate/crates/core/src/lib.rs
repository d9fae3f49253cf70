//! Speaker-level emotion arcs and utterance emotion dynamics (UED) for
//! speaker-attributed novels.
//!
//! The pipeline runs corpus → speaker streams → lexicon arcs → UED metrics,
//! with alignment and rank correlation between arcs, and the group tests and
//! outlier tables built on top. The numeric core is generic over [`Scalar`]
//! (`f32` or `f64`); the aliases below fix it to `f64`, which is what the
//! report layer uses.

pub mod align;
pub mod arc;
pub mod corpus;
pub mod lexicon;
pub mod pipeline;
pub mod report;
pub mod scalar;
pub mod stats;
pub mod svg;
pub mod ued;

pub use scalar::Scalar;

pub use corpus::{load_corpus, Category, Corpus, Gender, MetaSpeaker, Novel, Speaker, SpeakerStream};
pub use lexicon::{tokenize, Dimension, Tokenizer, WordTokenizer};

pub type Lexicon = lexicon::Lexicon<f64>;
pub type ScoreTriple = lexicon::ScoreTriple<f64>;
pub type EmotionArc = arc::EmotionArc<f64>;
pub type ArcBank = arc::ArcBank<f64>;
pub type HomeBase = ued::HomeBase<f64>;
pub type Displacement = ued::Displacement<f64>;
pub type UedSummary = ued::UedSummary<f64>;
pub type AlignedArcs = align::AlignedArcs<f64>;
pub type CorrelationTable = align::CorrelationTable<f64>;
pub type OutlierReport = stats::OutlierReport<f64>;

pub type Lexicon32 = lexicon::Lexicon<f32>;
pub type EmotionArc32 = arc::EmotionArc<f32>;
pub type UedSummary32 = ued::UedSummary<f32>;
pub type AlignedArcs32 = align::AlignedArcs<f32>;
