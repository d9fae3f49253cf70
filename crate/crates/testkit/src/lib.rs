//! Deterministic synthetic corpora in the on-disk corpus layout, with a
//! matching lexicon, for tests that need real files.
//!
//! Each novel has narration with a slowly drifting emotional tone, and a
//! fixed cast: two characters with many quotations, two with a moderate
//! number of short quotations, four who barely speak, and some quotations
//! attributed to no one. Word choice is biased per speaker, so arcs differ
//! between speakers and between genders.

use std::fs;
use std::io;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SYLLABLES: [&str; 10] = ["ba", "de", "ki", "lo", "mu", "ne", "pi", "ro", "su", "ta"];

/// Words that tokenize but are not in the lexicon.
pub const FILLER: [&str; 6] = ["the", "and", "of", "naïve", "don't", "was"];

/// Number of lexicon words.
pub const VOCAB: usize = 60;

/// Lexicon word `k`: two syllables plus a suffix, all lowercase letters.
pub fn word(k: usize) -> String {
    format!("{}{}{}", SYLLABLES[k / 10 % 10], SYLLABLES[k % 10], ["r", "n", "l"][k / 100 % 3])
}

/// Lexicon rows `(word, [valence, arousal, dominance])`. Valence rises
/// with the word index; arousal and dominance use fixed permutations.
pub fn lexicon_rows() -> Vec<(String, [f64; 3])> {
    let scale = |i: usize| 0.05 + 0.9 * i as f64 / (VOCAB - 1) as f64;
    (0..VOCAB)
        .map(|k| (word(k), [scale(k), scale(k * 7 % VOCAB), scale(k * 13 % VOCAB)]))
        .collect()
}

/// Lexicon file text, with a header row.
pub fn lexicon_tsv() -> String {
    let mut s = String::from("word\tvalence\tarousal\tdominance\n");
    for (w, [v, a, d]) in lexicon_rows() {
        s.push_str(&format!("{w}\t{v:.4}\t{a:.4}\t{d:.4}\n"));
    }
    s
}

pub fn write_lexicon(path: &Path) -> io::Result<()> {
    fs::write(path, lexicon_tsv())
}

/// One quotation row as written to the quotation table.
#[derive(Debug, Clone, PartialEq)]
pub struct QuoteRow {
    pub ordinal: u64,
    pub character_id: String,
    pub span_start: usize,
    pub span_end: usize,
    pub text: String,
}

/// One character row: id, main name, aliases, gender code.
#[derive(Debug, Clone, PartialEq)]
pub struct CharacterRow {
    pub id: String,
    pub name: String,
    pub aliases: Vec<String>,
    pub gender: String,
}

/// One novel directory's contents.
#[derive(Debug, Clone, PartialEq)]
pub struct NovelFiles {
    pub id: String,
    pub title: String,
    pub author: String,
    pub author_gender: String,
    pub narration_person: String,
    pub text: String,
    pub characters: Vec<CharacterRow>,
    pub quotes: Vec<QuoteRow>,
}

fn csv_err(e: csv::Error) -> io::Error {
    io::Error::other(e)
}

/// Writes `novel_meta.csv` and one directory per novel under `root`.
pub fn write_novels(root: &Path, novels: &[NovelFiles]) -> io::Result<()> {
    fs::create_dir_all(root)?;
    let mut meta = csv::Writer::from_path(root.join("novel_meta.csv")).map_err(csv_err)?;
    meta.write_record(["novel_id", "title", "author", "author_gender", "narration_person"])
        .map_err(csv_err)?;
    for n in novels {
        meta.write_record([&n.id, &n.title, &n.author, &n.author_gender, &n.narration_person])
            .map_err(csv_err)?;
        write_novel_dir(&root.join(&n.id), n)?;
    }
    meta.flush()
}

pub fn write_novel_dir(dir: &Path, n: &NovelFiles) -> io::Result<()> {
    fs::create_dir_all(dir)?;
    fs::write(dir.join("novel_text.txt"), &n.text)?;
    let mut q = csv::Writer::from_path(dir.join("quotation_info.csv")).map_err(csv_err)?;
    q.write_record(["ordinal", "character_id", "span_start", "span_end", "quote_text"])
        .map_err(csv_err)?;
    for r in &n.quotes {
        q.write_record([
            r.ordinal.to_string(),
            r.character_id.clone(),
            r.span_start.to_string(),
            r.span_end.to_string(),
            r.text.clone(),
        ])
        .map_err(csv_err)?;
    }
    q.flush()?;
    let mut c = csv::Writer::from_path(dir.join("character_info.csv")).map_err(csv_err)?;
    c.write_record(["character_id", "main_name", "aliases", "gender"])
        .map_err(csv_err)?;
    for r in &n.characters {
        c.write_record([r.id.clone(), r.name.clone(), r.aliases.join(";"), r.gender.clone()])
            .map_err(csv_err)?;
    }
    c.flush()
}

/// Shape of a generated corpus.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Synth {
    pub novels: usize,
    pub seed: u64,
    /// Multiplies every quotation count and narration length.
    pub scale: f64,
}

impl Default for Synth {
    fn default() -> Self {
        Synth {
            novels: 2,
            seed: 7,
            scale: 1.0,
        }
    }
}

struct CastMember {
    quotes: usize,
    words: (usize, usize),
    gender: &'static str,
}

const CAST: [CastMember; 8] = [
    CastMember { quotes: 150, words: (6, 14), gender: "F" },
    CastMember { quotes: 120, words: (6, 12), gender: "M" },
    CastMember { quotes: 40, words: (3, 6), gender: "F" },
    CastMember { quotes: 40, words: (3, 6), gender: "M" },
    CastMember { quotes: 6, words: (3, 8), gender: "F" },
    CastMember { quotes: 6, words: (3, 8), gender: "M" },
    CastMember { quotes: 4, words: (3, 8), gender: "F" },
    CastMember { quotes: 3, words: (3, 8), gender: "U" },
];

/// Picks a token whose valence sits near `center`, or a filler word.
fn pick(rng: &mut ChaCha8Rng, center: f64) -> String {
    if rng.gen_bool(0.25) {
        return FILLER[rng.gen_range(0..FILLER.len())].to_string();
    }
    let target = center.clamp(0.0, 1.0) * (VOCAB - 1) as f64 + rng.gen_range(-8.0..8.0);
    word(target.round().clamp(0.0, (VOCAB - 1) as f64) as usize)
}

fn words(rng: &mut ChaCha8Rng, n: usize, center: f64) -> String {
    (0..n).map(|_| pick(rng, center)).collect::<Vec<_>>().join(" ")
}

/// One generated novel.
pub fn novel(index: usize, shape: &Synth) -> NovelFiles {
    let mut rng = ChaCha8Rng::seed_from_u64(shape.seed.wrapping_mul(1_000_003).wrapping_add(index as u64));
    let id = format!("Synth{index:02}");
    let author_gender = if index.is_multiple_of(2) { "F" } else { "M" };

    let characters: Vec<CharacterRow> = CAST
        .iter()
        .enumerate()
        .map(|(i, c)| CharacterRow {
            id: format!("c{i}"),
            name: format!("Person {i} of {id}"),
            aliases: if i == 0 { vec![format!("P{i}"), "The First".into()] } else { vec![] },
            gender: c.gender.to_string(),
        })
        .collect();
    // Speaker base tones; women and female authors lean positive.
    let bases: Vec<f64> = CAST
        .iter()
        .map(|c| {
            let g = if c.gender == "F" { 0.06 } else { 0.0 };
            let a = if author_gender == "F" { 0.04 } else { 0.0 };
            0.35 + rng.gen_range(0.0..0.2) + g + a
        })
        .collect();

    // Quotation slots in narrative order: each cast member's quotes spread
    // over the novel, plus a few unattributed ones.
    let mut slots: Vec<(f64, Option<usize>)> = Vec::new();
    for (i, c) in CAST.iter().enumerate() {
        let n = ((c.quotes as f64 * shape.scale).round() as usize).max(1);
        for _ in 0..n {
            slots.push((rng.gen_range(0.0..1.0), Some(i)));
        }
    }
    for _ in 0..((10.0 * shape.scale).round() as usize).max(1) {
        slots.push((rng.gen_range(0.0..1.0), None));
    }
    slots.sort_by(|a, b| a.0.total_cmp(&b.0));

    let freq = 1.0 + index as f64 % 3.0;
    let tone = |t: f64| 0.5 + 0.15 * (std::f64::consts::TAU * freq * t).sin();
    let mut text = String::new();
    let mut len = 0usize;
    let mut push = |text: &mut String, s: &str| {
        text.push_str(s);
        len += s.chars().count();
        len
    };
    push(&mut text, &format!("Chapter one. {}.", words(&mut rng, 30, tone(0.0))));
    let mut quotes = Vec::new();
    for (k, &(t, who)) in slots.iter().enumerate() {
        let gap = ((rng.gen_range(15..60) as f64) * shape.scale.max(0.2)).round() as usize;
        push(&mut text, &format!(" {}. ", words(&mut rng, gap.max(1), tone(t))));
        let (lo, hi) = who.map(|i| CAST[i].words).unwrap_or((2, 5));
        let n = rng.gen_range(lo..=hi);
        let center = who.map(|i| bases[i] + 0.2 * (std::f64::consts::TAU * t + i as f64).sin()).unwrap_or(0.5);
        let body = words(&mut rng, n, center);
        let start = push(&mut text, "\"");
        let end = push(&mut text, &body);
        push(&mut text, "\"");
        quotes.push(QuoteRow {
            ordinal: k as u64 + 1,
            character_id: who.map(|i| format!("c{i}")).unwrap_or_else(|| "_group".into()),
            span_start: start,
            span_end: end,
            text: body,
        });
    }
    push(&mut text, &format!(" {}. The end.\n", words(&mut rng, 40, tone(1.0))));

    NovelFiles {
        title: format!("Synthetic Novel {index}"),
        author: format!("Author {index}"),
        author_gender: author_gender.into(),
        narration_person: if index % 3 == 1 { "first" } else { "third" }.into(),
        id,
        text,
        characters,
        quotes,
    }
}

pub fn corpus(shape: &Synth) -> Vec<NovelFiles> {
    (0..shape.novels).map(|i| novel(i, shape)).collect()
}

/// Writes a corpus under `root` and the lexicon to `lexicon_path`.
pub fn write_corpus(root: &Path, lexicon_path: &Path, shape: &Synth) -> io::Result<()> {
    write_novels(root, &corpus(shape))?;
    write_lexicon(lexicon_path)
}
