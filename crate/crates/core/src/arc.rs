//! Rolling-window emotion arcs.
//!
//! Each state is the mean lexicon score of the matched tokens in a window of
//! `window_size` consecutive tokens; the window advances one token per state.
//! Unmatched tokens still occupy window positions.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::corpus::{split_streams, Corpus, Speaker, SpeakerStream};
use crate::lexicon::{Dimension, Lexicon, Tokenizer};
use crate::scalar::{CompensatedSum, Scalar};

pub const DEFAULT_WINDOW: usize = 500;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ArcError {
    #[error("stream has {token_count} tokens, fewer than the window of {window_size}")]
    InsufficientTokens { token_count: usize, window_size: usize },
    #[error("first window has no lexicon matches")]
    NoCoverage,
    #[error("window size must be at least 1")]
    InvalidWindow,
    #[error("unknown novel `{0}`")]
    UnknownNovel(String),
    #[error("novel `{novel}` has no speaker `{speaker}`")]
    UnknownSpeaker { novel: String, speaker: String },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EmotionArc<T> {
    pub novel_id: String,
    pub speaker: Speaker,
    pub dimension: Dimension,
    pub window_size: usize,
    pub states: Vec<T>,
    /// Normalized narrative time of each state, 0 to 1.
    pub times: Vec<T>,
    /// Fraction of window tokens found in the lexicon, per state.
    pub coverage: Vec<T>,
}

impl<T: Scalar> EmotionArc<T> {
    /// Builds an arc from precomputed states with evenly spaced times.
    /// Mostly useful for synthetic arcs.
    pub fn from_states(novel_id: &str, speaker: Speaker, dimension: Dimension, states: Vec<T>) -> Self {
        let n = states.len();
        EmotionArc {
            novel_id: novel_id.to_string(),
            speaker,
            dimension,
            window_size: 1,
            times: normalized_times(n),
            coverage: vec![T::one(); n],
            states,
        }
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    /// `novel_id/speaker`, unique within a corpus.
    pub fn label(&self) -> String {
        format!("{}/{}", self.novel_id, self.speaker.key())
    }
}

/// `i / (n - 1)` for `n > 1`, `[0]` for a single state.
pub fn normalized_times<T: Scalar>(n: usize) -> Vec<T> {
    match n {
        0 => Vec::new(),
        1 => vec![T::zero()],
        _ => {
            let denom = T::from_count(n - 1);
            (0..n).map(|i| T::from_count(i) / denom).collect()
        }
    }
}

/// Computes the arc of one stream on one dimension.
///
/// A window with no matched tokens repeats the previous state (its coverage
/// is reported as 0); the first window must have at least one match.
pub fn compute_arc<T: Scalar>(
    stream: &SpeakerStream,
    lexicon: &Lexicon<T>,
    dim: Dimension,
    window_size: usize,
) -> Result<EmotionArc<T>, ArcError> {
    if window_size == 0 {
        return Err(ArcError::InvalidWindow);
    }
    let n_tokens = stream.tokens.len();
    if n_tokens < window_size || n_tokens == 0 {
        return Err(ArcError::InsufficientTokens {
            token_count: n_tokens,
            window_size,
        });
    }
    let scores: Vec<Option<T>> = stream.tokens.iter().map(|t| lexicon.lookup(t, dim)).collect();
    let n_states = n_tokens - window_size + 1;
    let width = T::from_count(window_size);

    let mut states = Vec::with_capacity(n_states);
    let mut coverage = Vec::with_capacity(n_states);
    let mut sum = CompensatedSum::new();
    let mut count = 0usize;
    for i in 0..n_states {
        if i % window_size == 0 {
            // Periodic recompute keeps long streams from accumulating drift.
            sum = CompensatedSum::new();
            count = 0;
            for s in scores[i..i + window_size].iter().flatten() {
                sum.add(*s);
                count += 1;
            }
        } else {
            if let Some(s) = scores[i - 1] {
                sum.add(-s);
                count -= 1;
            }
            if let Some(s) = scores[i + window_size - 1] {
                sum.add(s);
                count += 1;
            }
        }
        let state = if count > 0 {
            sum.value() / T::from_count(count)
        } else if let Some(&prev) = states.last() {
            prev
        } else {
            return Err(ArcError::NoCoverage);
        };
        states.push(state);
        coverage.push(T::from_count(count) / width);
    }

    Ok(EmotionArc {
        novel_id: stream.novel_id.clone(),
        speaker: stream.speaker.clone(),
        dimension: dim,
        window_size,
        times: normalized_times(n_states),
        states,
        coverage,
    })
}

/// What to do with a speaker that clears `min_tokens` but has fewer tokens
/// than the window.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Fallback {
    /// Report [`ArcError::InsufficientTokens`].
    #[default]
    None,
    /// Compute a single state over all of the speaker's tokens.
    SingleWindow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcOptions {
    pub window_size: usize,
    pub min_tokens: usize,
    pub fallback: Fallback,
}

impl Default for ArcOptions {
    fn default() -> Self {
        ArcOptions {
            window_size: DEFAULT_WINDOW,
            min_tokens: DEFAULT_WINDOW,
            fallback: Fallback::None,
        }
    }
}

/// Arc for a stream under the threshold policy: `Ok(None)` below
/// `min_tokens`.
pub fn arc_for_stream<T: Scalar>(
    stream: &SpeakerStream,
    lexicon: &Lexicon<T>,
    dim: Dimension,
    opts: &ArcOptions,
) -> Result<Option<EmotionArc<T>>, ArcError> {
    if stream.len() < opts.min_tokens.max(1) {
        return Ok(None);
    }
    match compute_arc(stream, lexicon, dim, opts.window_size) {
        Err(ArcError::InsufficientTokens { token_count, .. }) if opts.fallback == Fallback::SingleWindow => {
            compute_arc(stream, lexicon, dim, token_count).map(Some)
        }
        other => other.map(Some),
    }
}

/// Looks up one speaker of one novel and computes its arc.
pub fn arc_for_speaker<T: Scalar>(
    corpus: &Corpus,
    novel_id: &str,
    speaker: &Speaker,
    dim: Dimension,
    lexicon: &Lexicon<T>,
    tokenizer: &dyn Tokenizer,
    opts: &ArcOptions,
) -> Result<Option<EmotionArc<T>>, ArcError> {
    let novel = corpus
        .novel(novel_id)
        .ok_or_else(|| ArcError::UnknownNovel(novel_id.to_string()))?;
    if let Some(id) = speaker.character_id() {
        if novel.character(id).is_none() {
            return Err(ArcError::UnknownSpeaker {
                novel: novel_id.to_string(),
                speaker: id.to_string(),
            });
        }
    }
    let set = split_streams(novel, tokenizer);
    match set.get(speaker) {
        Some(stream) => arc_for_stream(stream, lexicon, dim, opts),
        // A listed character who never speaks has an empty stream.
        None => Ok(None),
    }
}

/// Every arc computed for a corpus, keyed by novel, speaker and dimension.
///
/// Speakers below the token threshold are absent; speakers whose arc could
/// not be computed are listed in `failures`.
#[derive(Debug, Clone)]
pub struct ArcBank<T> {
    arcs: BTreeMap<(String, Speaker, Dimension), EmotionArc<T>>,
    /// Token count of every stream, arc or not.
    pub token_counts: BTreeMap<(String, Speaker), usize>,
    pub failures: Vec<(String, Speaker, Dimension, ArcError)>,
    pub options: ArcOptions,
}

impl<T: Scalar> ArcBank<T> {
    /// Computes arcs for the whole-novel, narration and dialogue streams and
    /// every speaking character of every novel, in parallel across novels.
    pub fn build(
        corpus: &Corpus,
        lexicon: &Lexicon<T>,
        tokenizer: &dyn Tokenizer,
        dims: &[Dimension],
        opts: &ArcOptions,
    ) -> Self {
        type NovelOut<T> = (
            Vec<((String, Speaker, Dimension), EmotionArc<T>)>,
            Vec<((String, Speaker), usize)>,
            Vec<(String, Speaker, Dimension, ArcError)>,
        );
        let per_novel: Vec<NovelOut<T>> = corpus
            .novels
            .par_iter()
            .map(|novel| {
                let set = split_streams(novel, tokenizer);
                let streams = [&set.whole, &set.narration, &set.dialogue]
                    .into_iter()
                    .chain(set.characters.iter());
                let mut arcs = Vec::new();
                let mut counts = Vec::new();
                let mut failures = Vec::new();
                for stream in streams {
                    counts.push(((novel.id.clone(), stream.speaker.clone()), stream.len()));
                    for &dim in dims {
                        match arc_for_stream(stream, lexicon, dim, opts) {
                            Ok(Some(arc)) => {
                                arcs.push(((novel.id.clone(), stream.speaker.clone(), dim), arc))
                            }
                            Ok(None) => {}
                            Err(e) => failures.push((novel.id.clone(), stream.speaker.clone(), dim, e)),
                        }
                    }
                }
                (arcs, counts, failures)
            })
            .collect();

        let mut bank = ArcBank {
            arcs: BTreeMap::new(),
            token_counts: BTreeMap::new(),
            failures: Vec::new(),
            options: *opts,
        };
        for (arcs, counts, failures) in per_novel {
            bank.arcs.extend(arcs);
            bank.token_counts.extend(counts);
            bank.failures.extend(failures);
        }
        bank
    }

    pub fn get(&self, novel_id: &str, speaker: &Speaker, dim: Dimension) -> Option<&EmotionArc<T>> {
        self.arcs.get(&(novel_id.to_string(), speaker.clone(), dim))
    }

    /// All arcs in (novel, speaker, dimension) order.
    pub fn iter(&self) -> impl Iterator<Item = &EmotionArc<T>> {
        self.arcs.values()
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn tokens(&self, novel_id: &str, speaker: &Speaker) -> Option<usize> {
        self.token_counts.get(&(novel_id.to_string(), speaker.clone())).copied()
    }
}
