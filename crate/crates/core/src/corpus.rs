//! Speaker-attributed novel corpora.
//!
//! A corpus root holds `novel_meta.csv` plus one directory per novel:
//!
//! ```text
//! root/
//!   novel_meta.csv            novel_id,title,author,author_gender,narration_person
//!   <novel_id>/novel_text.txt
//!   <novel_id>/quotation_info.csv   ordinal,character_id,span_start,span_end,quote_text
//!   <novel_id>/character_info.csv   character_id,main_name,aliases,gender
//! ```
//!
//! Spans are code-point offsets into the decoded novel text, end exclusive.
//! A quotation whose `character_id` is empty or starts with `_` is dialogue
//! by a group or an unidentified speaker: it is removed from the narration
//! but does not produce a character stream.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lexicon::Tokenizer;

pub const NOVEL_META_FILE: &str = "novel_meta.csv";
pub const NOVEL_TEXT_FILE: &str = "novel_text.txt";
pub const QUOTATION_FILE: &str = "quotation_info.csv";
pub const CHARACTER_FILE: &str = "character_info.csv";

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("novel `{novel}`: missing {path}")]
    MissingFile { novel: String, path: PathBuf },
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },
    #[error("novel `{novel}`{}: {message}", .ordinal.map(|o| format!(", quotation {o}")).unwrap_or_default())]
    Validation {
        novel: String,
        ordinal: Option<u64>,
        message: String,
    },
}

impl CorpusError {
    pub fn is_io(&self) -> bool {
        matches!(self, CorpusError::Io { .. } | CorpusError::MissingFile { .. })
    }
}

fn invalid(novel: &str, ordinal: Option<u64>, message: impl Into<String>) -> CorpusError {
    CorpusError::Validation {
        novel: novel.to_string(),
        ordinal,
        message: message.into(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Gender {
    #[serde(rename = "F")]
    Female,
    #[serde(rename = "M")]
    Male,
    #[serde(rename = "O")]
    Other,
    #[serde(rename = "U")]
    Unknown,
}

impl Gender {
    pub fn code(self) -> &'static str {
        match self {
            Gender::Female => "F",
            Gender::Male => "M",
            Gender::Other => "O",
            Gender::Unknown => "U",
        }
    }
}

impl FromStr for Gender {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "f" | "female" => Ok(Gender::Female),
            "m" | "male" => Ok(Gender::Male),
            "o" | "other" | "x" => Ok(Gender::Other),
            "u" | "unknown" | "" => Ok(Gender::Unknown),
            other => Err(format!("unknown gender `{other}`")),
        }
    }
}

impl fmt::Display for Gender {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NarrationPerson {
    First,
    Third,
    Unknown,
}

impl FromStr for NarrationPerson {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "first" | "1" | "1st" => Ok(NarrationPerson::First),
            "third" | "3" | "3rd" => Ok(NarrationPerson::Third),
            "unknown" | "u" | "" => Ok(NarrationPerson::Unknown),
            other => Err(format!("unknown narration person `{other}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Category {
    Major,
    Intermediate,
    Minor,
}

impl Category {
    pub const ALL: [Category; 3] = [Category::Major, Category::Intermediate, Category::Minor];

    pub fn name(self) -> &'static str {
        match self {
            Category::Major => "major",
            Category::Intermediate => "intermediate",
            Category::Minor => "minor",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Character {
    pub id: String,
    pub name: String,
    pub aliases: Vec<String>,
    pub gender: Gender,
    /// Set by [`categorize_characters`].
    pub category: Option<Category>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Quotation {
    pub novel_id: String,
    /// `None` for group or unidentified speakers.
    pub character_id: Option<String>,
    pub span_start: usize,
    pub span_end: usize,
    pub text: String,
    pub ordinal: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Novel {
    pub id: String,
    pub title: String,
    pub author: String,
    pub author_gender: Gender,
    pub narration_person: NarrationPerson,
    pub full_text: String,
    pub characters: Vec<Character>,
    pub quotations: Vec<Quotation>,
}

fn normalize_ws(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}

/// Byte offset of every code point, plus the total length at the end.
fn char_boundaries(text: &str) -> Vec<usize> {
    let mut b: Vec<usize> = text.char_indices().map(|(i, _)| i).collect();
    b.push(text.len());
    b
}

impl Novel {
    pub fn character(&self, id: &str) -> Option<&Character> {
        self.characters.iter().find(|c| c.id == id)
    }

    /// Length of the text in code points.
    pub fn char_len(&self) -> usize {
        self.full_text.chars().count()
    }

    /// Checks every structural invariant of the novel and its quotations.
    pub fn validate(&self) -> Result<(), CorpusError> {
        let mut ids = HashSet::new();
        for c in &self.characters {
            if c.id.trim().is_empty() {
                return Err(invalid(&self.id, None, "character with empty id"));
            }
            if c.name.trim().is_empty() {
                return Err(invalid(&self.id, None, format!("character `{}` has empty name", c.id)));
            }
            if !ids.insert(c.id.as_str()) {
                return Err(invalid(&self.id, None, format!("duplicate character id `{}`", c.id)));
            }
        }
        let bounds = char_boundaries(&self.full_text);
        let len = bounds.len() - 1;
        let mut prev: Option<&Quotation> = None;
        for q in &self.quotations {
            let ord = Some(q.ordinal);
            if q.span_start >= q.span_end || q.span_end > len {
                return Err(invalid(
                    &self.id,
                    ord,
                    format!("span [{}, {}) outside text of length {len}", q.span_start, q.span_end),
                ));
            }
            if let Some(id) = &q.character_id {
                if !ids.contains(id.as_str()) {
                    return Err(invalid(&self.id, ord, format!("unknown character id `{id}`")));
                }
            }
            let span = &self.full_text[bounds[q.span_start]..bounds[q.span_end]];
            if normalize_ws(span) != normalize_ws(&q.text) {
                return Err(invalid(&self.id, ord, "quote text does not match the text at its span"));
            }
            if let Some(p) = prev {
                if q.ordinal <= p.ordinal || q.span_start <= p.span_start {
                    return Err(invalid(&self.id, ord, "ordinals must increase with span start"));
                }
                if q.span_start < p.span_end {
                    return Err(invalid(&self.id, ord, format!("overlaps quotation {}", p.ordinal)));
                }
            }
            prev = Some(q);
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Corpus {
    pub novels: Vec<Novel>,
}

impl Corpus {
    pub fn novel(&self, id: &str) -> Option<&Novel> {
        self.novels.iter().find(|n| n.id == id)
    }

    /// Returns a copy with every novel's characters categorized.
    pub fn categorized(&self, tokenizer: &dyn Tokenizer, rule: &CategoryRule) -> Corpus {
        Corpus {
            novels: self
                .novels
                .par_iter()
                .map(|n| categorize_characters(n.clone(), tokenizer, rule))
                .collect(),
        }
    }
}

#[derive(Debug, Deserialize)]
struct MetaRow {
    novel_id: String,
    title: String,
    author: String,
    author_gender: String,
    narration_person: String,
}

#[derive(Debug, Deserialize)]
struct QuotationRow {
    ordinal: u64,
    character_id: String,
    span_start: usize,
    span_end: usize,
    quote_text: String,
}

#[derive(Debug, Deserialize)]
struct CharacterRow {
    character_id: String,
    main_name: String,
    #[serde(default)]
    aliases: String,
    #[serde(default)]
    gender: String,
}

fn read_rows<R: for<'de> Deserialize<'de>>(path: &Path, novel: &str) -> Result<Vec<R>, CorpusError> {
    if !path.is_file() {
        return Err(CorpusError::MissingFile {
            novel: novel.to_string(),
            path: path.to_path_buf(),
        });
    }
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::Headers)
        .from_path(path)
        .map_err(|source| CorpusError::Csv {
            path: path.to_path_buf(),
            source,
        })?;
    reader
        .deserialize()
        .collect::<Result<Vec<R>, _>>()
        .map_err(|source| CorpusError::Csv {
            path: path.to_path_buf(),
            source,
        })
}

fn is_unattributed(id: &str) -> bool {
    let id = id.trim();
    id.is_empty() || id.starts_with('_')
}

/// Loads and validates one novel directory.
pub fn load_novel(
    dir: &Path,
    id: &str,
    title: &str,
    author: &str,
    author_gender: Gender,
    narration_person: NarrationPerson,
) -> Result<Novel, CorpusError> {
    let text_path = dir.join(NOVEL_TEXT_FILE);
    if !text_path.is_file() {
        return Err(CorpusError::MissingFile {
            novel: id.to_string(),
            path: text_path,
        });
    }
    let full_text = fs::read_to_string(&text_path).map_err(|source| CorpusError::Io {
        path: text_path.clone(),
        source,
    })?;

    let characters = read_rows::<CharacterRow>(&dir.join(CHARACTER_FILE), id)?
        .into_iter()
        .map(|r| {
            let gender = r.gender.parse::<Gender>().map_err(|m| invalid(id, None, m))?;
            Ok(Character {
                id: r.character_id.trim().to_string(),
                name: r.main_name.trim().to_string(),
                aliases: r
                    .aliases
                    .split(';')
                    .map(str::trim)
                    .filter(|a| !a.is_empty())
                    .map(String::from)
                    .collect(),
                gender,
                category: None,
            })
        })
        .collect::<Result<Vec<_>, CorpusError>>()?;

    let mut quotations: Vec<Quotation> = read_rows::<QuotationRow>(&dir.join(QUOTATION_FILE), id)?
        .into_iter()
        .map(|r| Quotation {
            novel_id: id.to_string(),
            character_id: (!is_unattributed(&r.character_id)).then(|| r.character_id.trim().to_string()),
            span_start: r.span_start,
            span_end: r.span_end,
            text: r.quote_text,
            ordinal: r.ordinal,
        })
        .collect();
    quotations.sort_by_key(|q| q.ordinal);

    let novel = Novel {
        id: id.to_string(),
        title: title.to_string(),
        author: author.to_string(),
        author_gender,
        narration_person,
        full_text,
        characters,
        quotations,
    };
    novel.validate()?;
    Ok(novel)
}

/// Loads every novel listed in `root/novel_meta.csv`, in file order.
pub fn load_corpus(root: impl AsRef<Path>) -> Result<Corpus, CorpusError> {
    let root = root.as_ref();
    let meta_path = root.join(NOVEL_META_FILE);
    let rows = read_rows::<MetaRow>(&meta_path, "<corpus>")?;
    let mut seen = HashSet::new();
    for r in &rows {
        if !seen.insert(r.novel_id.trim()) {
            return Err(invalid(r.novel_id.trim(), None, "listed twice in novel_meta.csv"));
        }
    }
    let novels = rows
        .par_iter()
        .map(|r| {
            let id = r.novel_id.trim();
            let author_gender = r.author_gender.parse::<Gender>().map_err(|m| invalid(id, None, m))?;
            let person = r
                .narration_person
                .parse::<NarrationPerson>()
                .map_err(|m| invalid(id, None, m))?;
            load_novel(&root.join(id), id, r.title.trim(), r.author.trim(), author_gender, person)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Corpus { novels })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MetaSpeaker {
    /// The entire novel text.
    WholeNovel,
    /// Novel text minus every quotation span.
    Narration,
    /// All quotation text regardless of speaker.
    Dialogue,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Speaker {
    Meta(MetaSpeaker),
    Character(String),
}

impl Speaker {
    /// Stable key used in file names and CSV columns. Meta-speakers use a
    /// leading underscore, which no character id can carry.
    pub fn key(&self) -> &str {
        match self {
            Speaker::Meta(MetaSpeaker::WholeNovel) => "_novel",
            Speaker::Meta(MetaSpeaker::Narration) => "_narration",
            Speaker::Meta(MetaSpeaker::Dialogue) => "_dialogue",
            Speaker::Character(id) => id,
        }
    }

    pub fn from_key(key: &str) -> Speaker {
        match key {
            "_novel" => Speaker::Meta(MetaSpeaker::WholeNovel),
            "_narration" => Speaker::Meta(MetaSpeaker::Narration),
            "_dialogue" => Speaker::Meta(MetaSpeaker::Dialogue),
            id => Speaker::Character(id.to_string()),
        }
    }

    pub fn character_id(&self) -> Option<&str> {
        match self {
            Speaker::Character(id) => Some(id),
            Speaker::Meta(_) => None,
        }
    }
}

impl fmt::Display for Speaker {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl Serialize for Speaker {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.key())
    }
}

impl<'de> Deserialize<'de> for Speaker {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let key = String::deserialize(d)?;
        Ok(Speaker::from_key(&key))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpeakerStream {
    pub novel_id: String,
    pub speaker: Speaker,
    pub tokens: Vec<String>,
    /// Code-point offset of each token in the novel text.
    pub source_offsets: Vec<usize>,
}

impl SpeakerStream {
    fn new(novel_id: &str, speaker: Speaker) -> Self {
        SpeakerStream {
            novel_id: novel_id.to_string(),
            speaker,
            tokens: Vec::new(),
            source_offsets: Vec::new(),
        }
    }

    fn push_all(&mut self, tokens: &[crate::lexicon::Token]) {
        for t in tokens {
            self.tokens.push(t.text.clone());
            self.source_offsets.push(t.offset);
        }
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }
}

/// Every stream derivable from one novel.
#[derive(Debug, Clone)]
pub struct StreamSet {
    pub whole: SpeakerStream,
    pub narration: SpeakerStream,
    pub dialogue: SpeakerStream,
    /// One stream per character with at least one quotation, in character
    /// table order.
    pub characters: Vec<SpeakerStream>,
    /// Quotation count per character id (zero-quotation characters absent).
    pub quotation_counts: HashMap<String, usize>,
    /// Tokens in quotations that belong to no character.
    pub unattributed_tokens: usize,
}

impl StreamSet {
    pub fn get(&self, speaker: &Speaker) -> Option<&SpeakerStream> {
        match speaker {
            Speaker::Meta(MetaSpeaker::WholeNovel) => Some(&self.whole),
            Speaker::Meta(MetaSpeaker::Narration) => Some(&self.narration),
            Speaker::Meta(MetaSpeaker::Dialogue) => Some(&self.dialogue),
            Speaker::Character(id) => self.characters.iter().find(|s| s.speaker.key() == id),
        }
    }
}

/// Tokenizes a novel segment by segment (narration gaps and quotation spans
/// separately), so no token straddles a quotation boundary and the stream
/// token counts add up exactly.
pub fn split_streams(novel: &Novel, tokenizer: &dyn Tokenizer) -> StreamSet {
    let bounds = char_boundaries(&novel.full_text);
    let len = bounds.len() - 1;
    let slice = |a: usize, b: usize| &novel.full_text[bounds[a]..bounds[b]];

    let mut whole = SpeakerStream::new(&novel.id, Speaker::Meta(MetaSpeaker::WholeNovel));
    let mut narration = SpeakerStream::new(&novel.id, Speaker::Meta(MetaSpeaker::Narration));
    let mut dialogue = SpeakerStream::new(&novel.id, Speaker::Meta(MetaSpeaker::Dialogue));
    let mut per_char: HashMap<&str, SpeakerStream> = HashMap::new();
    let mut quotation_counts: HashMap<String, usize> = HashMap::new();
    let mut unattributed_tokens = 0;

    let mut cursor = 0;
    for q in &novel.quotations {
        let gap = tokenizer.tokens_with_offsets(slice(cursor, q.span_start), cursor);
        whole.push_all(&gap);
        narration.push_all(&gap);

        let toks = tokenizer.tokens_with_offsets(slice(q.span_start, q.span_end), q.span_start);
        whole.push_all(&toks);
        dialogue.push_all(&toks);
        match &q.character_id {
            Some(id) => {
                per_char
                    .entry(id.as_str())
                    .or_insert_with(|| SpeakerStream::new(&novel.id, Speaker::Character(id.clone())))
                    .push_all(&toks);
                *quotation_counts.entry(id.clone()).or_default() += 1;
            }
            None => unattributed_tokens += toks.len(),
        }
        cursor = q.span_end;
    }
    let tail = tokenizer.tokens_with_offsets(slice(cursor, len), cursor);
    whole.push_all(&tail);
    narration.push_all(&tail);

    let characters = novel
        .characters
        .iter()
        .filter_map(|c| per_char.remove(c.id.as_str()))
        .collect();

    StreamSet {
        whole,
        narration,
        dialogue,
        characters,
        quotation_counts,
        unattributed_tokens,
    }
}

/// Whole-novel stream, narration stream, then one stream per speaking
/// character in character-table order.
pub fn build_speaker_streams(novel: &Novel, tokenizer: &dyn Tokenizer) -> Vec<SpeakerStream> {
    let set = split_streams(novel, tokenizer);
    let mut out = Vec::with_capacity(2 + set.characters.len());
    out.push(set.whole);
    out.push(set.narration);
    out.extend(set.characters);
    out
}

/// All quotation text of a novel in narrative order, regardless of speaker.
pub fn dialogue_stream(novel: &Novel, tokenizer: &dyn Tokenizer) -> SpeakerStream {
    split_streams(novel, tokenizer).dialogue
}

/// How a character's share of the novel's dialogue is measured for the
/// major-character threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ShareBasis {
    /// Tokens of dialogue.
    #[default]
    Tokens,
    /// Quotation rows.
    Quotations,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CategoryRule {
    /// Minimum share of the novel's dialogue for a major character.
    pub major_share: f64,
    /// Quotation count that makes a character major regardless of share.
    pub major_quotations: usize,
    /// Characters with fewer quotations than this (and not major) are minor.
    pub minor_below: usize,
    pub basis: ShareBasis,
}

impl Default for CategoryRule {
    fn default() -> Self {
        CategoryRule {
            major_share: 0.10,
            major_quotations: 100,
            minor_below: 35,
            basis: ShareBasis::Tokens,
        }
    }
}

impl CategoryRule {
    /// `share` is the character's fraction of all dialogue in the novel.
    pub fn classify(&self, quotations: usize, share: f64) -> Category {
        if share >= self.major_share || quotations >= self.major_quotations {
            Category::Major
        } else if quotations < self.minor_below {
            Category::Minor
        } else {
            Category::Intermediate
        }
    }
}

/// Assigns a category to every character. The share denominator is all
/// dialogue in the novel, attributed to a character or not.
pub fn categorize_characters(mut novel: Novel, tokenizer: &dyn Tokenizer, rule: &CategoryRule) -> Novel {
    let set = split_streams(&novel, tokenizer);
    let token_counts: HashMap<&str, usize> = set
        .characters
        .iter()
        .map(|s| (s.speaker.key(), s.len()))
        .collect();
    let total_tokens = set.dialogue.len();
    let total_quotes = novel.quotations.len();
    let categories: Vec<Category> = novel
        .characters
        .iter()
        .map(|c| {
            let quotes = set.quotation_counts.get(&c.id).copied().unwrap_or(0);
            let share = match rule.basis {
                ShareBasis::Tokens if total_tokens > 0 => {
                    token_counts.get(c.id.as_str()).copied().unwrap_or(0) as f64 / total_tokens as f64
                }
                ShareBasis::Quotations if total_quotes > 0 => quotes as f64 / total_quotes as f64,
                _ => 0.0,
            };
            rule.classify(quotes, share)
        })
        .collect();
    for (c, cat) in novel.characters.iter_mut().zip(categories) {
        c.category = Some(cat);
    }
    novel
}
