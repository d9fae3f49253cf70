//! Word-level valence/arousal/dominance lexicon and the tokenizer shared by
//! the corpus and arc code.
//!
//! Lexicon keys and corpus tokens must agree on normalization, so the same
//! [`Tokenizer`] is used to check lexicon keys at load time and to split novel
//! text into words.

use std::collections::HashMap;
use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufReader, Read};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalar::Scalar;

/// One of the three affect dimensions scored by the lexicon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Dimension {
    Valence,
    Arousal,
    Dominance,
}

impl Dimension {
    pub const ALL: [Dimension; 3] = [Dimension::Valence, Dimension::Arousal, Dimension::Dominance];

    pub fn name(self) -> &'static str {
        match self {
            Dimension::Valence => "valence",
            Dimension::Arousal => "arousal",
            Dimension::Dominance => "dominance",
        }
    }

    pub fn letter(self) -> char {
        match self {
            Dimension::Valence => 'V',
            Dimension::Arousal => 'A',
            Dimension::Dominance => 'D',
        }
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Dimension {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "v" | "valence" => Ok(Dimension::Valence),
            "a" | "arousal" => Ok(Dimension::Arousal),
            "d" | "dominance" => Ok(Dimension::Dominance),
            other => Err(format!("unknown dimension `{other}` (expected V, A or D)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScoreTriple<T> {
    pub valence: T,
    pub arousal: T,
    pub dominance: T,
}

impl<T: Scalar> ScoreTriple<T> {
    pub fn get(&self, dim: Dimension) -> T {
        match dim {
            Dimension::Valence => self.valence,
            Dimension::Arousal => self.arousal,
            Dimension::Dominance => self.dominance,
        }
    }
}

#[derive(Debug, Error)]
pub enum LexiconError {
    #[error("cannot read lexicon {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("lexicon line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("lexicon line {line}: {dimension} score {value} outside [0, 1]")]
    OutOfRange {
        line: usize,
        dimension: Dimension,
        value: f64,
    },
}

/// Counters describing what happened during a load.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LoadStats {
    pub rows: usize,
    /// Rows whose word had already been seen; the later row wins.
    pub duplicates: usize,
    /// Multi-word or hyphenated keys that can never match a single token.
    pub skipped_keys: usize,
    pub header: bool,
}

/// Mapping from normalized word to its three scores.
#[derive(Debug, Clone, Default)]
pub struct Lexicon<T> {
    entries: HashMap<String, ScoreTriple<T>>,
    stats: LoadStats,
}

impl<T: Scalar> Lexicon<T> {
    /// Builds a lexicon from in-memory entries, applying the same bounds and
    /// key checks as a file load.
    pub fn from_entries<I, S>(entries: I) -> Result<Self, LexiconError>
    where
        I: IntoIterator<Item = (S, [f64; 3])>,
        S: AsRef<str>,
    {
        let mut lex = Lexicon {
            entries: HashMap::new(),
            stats: LoadStats::default(),
        };
        for (i, (word, scores)) in entries.into_iter().enumerate() {
            lex.insert_row(i + 1, word.as_ref(), scores)?;
        }
        Ok(lex)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, LexiconError> {
        let path = path.as_ref();
        let file = File::open(path).map_err(|source| LexiconError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::from_reader(file).map_err(|e| match e {
            LexiconError::Io { source, .. } => LexiconError::Io {
                path: path.to_path_buf(),
                source,
            },
            other => other,
        })
    }

    /// Parses `word<TAB>valence<TAB>arousal<TAB>dominance` rows. A first row
    /// whose second field is not numeric is treated as a header.
    pub fn from_reader(reader: impl Read) -> Result<Self, LexiconError> {
        let mut lex = Lexicon {
            entries: HashMap::new(),
            stats: LoadStats::default(),
        };
        let mut seen_data = false;
        for (idx, line) in BufReader::new(reader).lines().enumerate() {
            let line_no = idx + 1;
            let line = line.map_err(|source| LexiconError::Io {
                path: PathBuf::new(),
                source,
            })?;
            let line = line.trim_end_matches(['\r', '\n']);
            if line.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            if !seen_data && fields.len() >= 2 && fields[1].trim().parse::<f64>().is_err() {
                lex.stats.header = true;
                seen_data = true;
                continue;
            }
            seen_data = true;
            if fields.len() != 4 {
                return Err(LexiconError::Malformed {
                    line: line_no,
                    message: format!("expected 4 tab-separated fields, found {}", fields.len()),
                });
            }
            let mut scores = [0.0; 3];
            for (slot, (field, dim)) in scores.iter_mut().zip(fields[1..].iter().zip(Dimension::ALL)) {
                *slot = field.trim().parse::<f64>().map_err(|_| LexiconError::Malformed {
                    line: line_no,
                    message: format!("non-numeric {dim} score `{}`", field.trim()),
                })?;
            }
            lex.insert_row(line_no, fields[0], scores)?;
        }
        if lex.stats.duplicates > 0 {
            log::warn!("lexicon: {} duplicate words resolved last-wins", lex.stats.duplicates);
        }
        Ok(lex)
    }

    fn insert_row(&mut self, line: usize, word: &str, scores: [f64; 3]) -> Result<(), LexiconError> {
        for (value, dimension) in scores.iter().zip(Dimension::ALL) {
            if !(0.0..=1.0).contains(value) {
                return Err(LexiconError::OutOfRange {
                    line,
                    dimension,
                    value: *value,
                });
            }
        }
        self.stats.rows += 1;
        let key = word.trim().to_lowercase();
        let tokens = WordTokenizer.tokenize(&key);
        if tokens.len() != 1 || tokens[0] != key {
            self.stats.skipped_keys += 1;
            return Ok(());
        }
        let triple = ScoreTriple {
            valence: T::lit(scores[0]),
            arousal: T::lit(scores[1]),
            dominance: T::lit(scores[2]),
        };
        if self.entries.insert(key, triple).is_some() {
            self.stats.duplicates += 1;
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn stats(&self) -> LoadStats {
        self.stats
    }

    pub fn get(&self, token: &str) -> Option<&ScoreTriple<T>> {
        self.entries.get(token)
    }

    /// Score of an already-normalized token on one dimension. No stemming.
    pub fn lookup(&self, token: &str, dim: Dimension) -> Option<T> {
        self.entries.get(token).map(|s| s.get(dim))
    }

    /// Returns a copy with every score passed through `f`. Used to build
    /// transformed lexicons in tests and sensitivity runs; the result is not
    /// re-validated against [0, 1].
    pub fn map_scores(&self, f: impl Fn(T) -> T) -> Self {
        let entries = self
            .entries
            .iter()
            .map(|(k, s)| {
                (
                    k.clone(),
                    ScoreTriple {
                        valence: f(s.valence),
                        arousal: f(s.arousal),
                        dominance: f(s.dominance),
                    },
                )
            })
            .collect();
        Lexicon {
            entries,
            stats: self.stats,
        }
    }
}

/// A word token with the code-point offset of its first character in the
/// source text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub text: String,
    pub offset: usize,
}

/// Splits text into normalized word tokens.
pub trait Tokenizer: Sync {
    /// `base` is added to every offset, so callers can tokenize a slice and
    /// keep offsets relative to the full document.
    fn tokens_with_offsets(&self, text: &str, base: usize) -> Vec<Token>;

    fn tokenize(&self, text: &str) -> Vec<String> {
        self.tokens_with_offsets(text, 0)
            .into_iter()
            .map(|t| t.text)
            .collect()
    }
}

/// Lowercased alphabetic words. Apostrophes between two letters stay inside
/// the word (`don't`); every other non-letter, including digits and hyphens,
/// separates words.
#[derive(Debug, Clone, Copy, Default)]
pub struct WordTokenizer;

fn is_apostrophe(c: char) -> bool {
    matches!(c, '\'' | '\u{2019}' | '\u{02BC}')
}

impl Tokenizer for WordTokenizer {
    fn tokens_with_offsets(&self, text: &str, base: usize) -> Vec<Token> {
        let chars: Vec<char> = text.chars().collect();
        let mut out = Vec::new();
        let mut current = String::new();
        let mut start = 0;
        for (i, &c) in chars.iter().enumerate() {
            if c.is_alphabetic() {
                if current.is_empty() {
                    start = i;
                }
                current.extend(c.to_lowercase().filter(|l| l.is_alphabetic()));
            } else if is_apostrophe(c)
                && !current.is_empty()
                && chars.get(i + 1).is_some_and(|n| n.is_alphabetic())
            {
                current.push('\'');
            } else if !current.is_empty() {
                out.push(Token {
                    text: std::mem::take(&mut current),
                    offset: base + start,
                });
            }
        }
        if !current.is_empty() {
            out.push(Token {
                text: current,
                offset: base + start,
            });
        }
        out
    }
}

/// Convenience wrapper around [`WordTokenizer`].
pub fn tokenize(text: &str) -> Vec<String> {
    WordTokenizer.tokenize(text)
}
