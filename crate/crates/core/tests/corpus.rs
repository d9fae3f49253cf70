//! Loading corpora from disk, stream splitting and categorization.

use std::fs;
use std::path::Path;

use novel_ued::corpus::{split_streams, CategoryRule, CorpusError, ShareBasis};
use novel_ued::{load_corpus, Category, Gender, Speaker, WordTokenizer};
use novel_ued_testkit::{write_novels, CharacterRow, NovelFiles, QuoteRow, Synth};
use tempfile::TempDir;

fn synth_dir(shape: &Synth) -> TempDir {
    let dir = TempDir::new().unwrap();
    write_novels(dir.path(), &novel_ued_testkit::corpus(shape)).unwrap();
    dir
}

fn tiny(text: &str, quotes: &[(&str, usize, usize)]) -> NovelFiles {
    let chars: Vec<char> = text.chars().collect();
    NovelFiles {
        id: "Tiny".into(),
        title: "Tiny".into(),
        author: "Someone".into(),
        author_gender: "F".into(),
        narration_person: "third".into(),
        text: text.into(),
        characters: vec![CharacterRow {
            id: "c1".into(),
            name: "Ann".into(),
            aliases: vec![],
            gender: "F".into(),
        }],
        quotes: quotes
            .iter()
            .enumerate()
            .map(|(i, &(who, a, b))| QuoteRow {
                ordinal: i as u64 + 1,
                character_id: who.into(),
                span_start: a,
                span_end: b,
                text: chars[a..b].iter().collect(),
            })
            .collect(),
    }
}

fn write_tiny(root: &Path, n: &NovelFiles) {
    write_novels(root, std::slice::from_ref(n)).unwrap();
}

#[test]
fn loads_generated_corpus() {
    let dir = synth_dir(&Synth { novels: 3, ..Synth::default() });
    let corpus = load_corpus(dir.path()).unwrap();
    let ids: Vec<&str> = corpus.novels.iter().map(|n| n.id.as_str()).collect();
    assert_eq!(ids, ["Synth00", "Synth01", "Synth02"]);
    let n = &corpus.novels[0];
    assert_eq!(n.author_gender, Gender::Female);
    assert_eq!(corpus.novels[1].author_gender, Gender::Male);
    assert_eq!(n.characters.len(), 8);
    assert_eq!(n.characters[0].aliases, ["P0", "The First"]);
    assert_eq!(n.characters[7].gender, Gender::Unknown);
    // Group quotations load without a character.
    assert!(n.quotations.iter().any(|q| q.character_id.is_none()));
}

#[test]
fn streams_conserve_tokens() {
    let dir = synth_dir(&Synth::default());
    let corpus = load_corpus(dir.path()).unwrap();
    for n in &corpus.novels {
        let set = split_streams(n, &WordTokenizer);
        let chars: usize = set.characters.iter().map(|s| s.len()).sum();
        assert_eq!(set.whole.len(), set.narration.len() + set.dialogue.len());
        assert_eq!(set.dialogue.len(), chars + set.unattributed_tokens);
        assert!(set.whole.source_offsets.windows(2).all(|w| w[0] < w[1]));
        for s in &set.characters {
            assert!(!s.is_empty());
            assert_eq!(s.tokens.len(), s.source_offsets.len());
        }
        let quoted: usize = set.quotation_counts.values().sum();
        let attributed = n.quotations.iter().filter(|q| q.character_id.is_some()).count();
        assert_eq!(quoted, attributed);
    }
}

#[test]
fn categories_partition_the_cast() {
    let dir = synth_dir(&Synth::default());
    let corpus = load_corpus(dir.path()).unwrap();
    let cats = |basis| {
        let rule = CategoryRule { basis, ..CategoryRule::default() };
        let c = corpus.categorized(&WordTokenizer, &rule);
        c.novels
            .iter()
            .map(|n| n.characters.iter().map(|c| c.category.unwrap()).collect::<Vec<_>>())
            .collect::<Vec<_>>()
    };
    use Category::*;
    for by_tokens in cats(ShareBasis::Tokens) {
        assert_eq!(by_tokens, [Major, Major, Intermediate, Intermediate, Minor, Minor, Minor, Minor]);
    }
    // 40 of 369 quotations is above the share threshold, while their short
    // quotations keep the token share below it.
    for by_quotes in cats(ShareBasis::Quotations) {
        assert_eq!(by_quotes, [Major, Major, Major, Major, Minor, Minor, Minor, Minor]);
    }
}

#[test]
fn zero_quotations_gives_no_major() {
    let dir = TempDir::new().unwrap();
    write_tiny(dir.path(), &tiny("Once upon a time, there was a cat.", &[]));
    let corpus = load_corpus(dir.path()).unwrap();
    let c = corpus.categorized(&WordTokenizer, &CategoryRule::default());
    assert_eq!(c.novels[0].characters[0].category, Some(Category::Minor));
    let set = split_streams(&c.novels[0], &WordTokenizer);
    assert_eq!(set.whole.tokens, set.narration.tokens);
    assert_eq!(set.whole.source_offsets, set.narration.source_offsets);
    assert!(set.characters.is_empty() && set.dialogue.is_empty());
}

#[test]
fn one_quotation_example() {
    let dir = TempDir::new().unwrap();
    write_tiny(dir.path(), &tiny("A said \"hi\" B", &[("c1", 8, 10)]));
    let corpus = load_corpus(dir.path()).unwrap();
    let set = split_streams(&corpus.novels[0], &WordTokenizer);
    assert_eq!(set.whole.tokens, ["a", "said", "hi", "b"]);
    assert_eq!(set.narration.tokens, ["a", "said", "b"]);
    let c1 = set.get(&Speaker::Character("c1".into())).unwrap();
    assert_eq!(c1.tokens, ["hi"]);
    assert_eq!(c1.source_offsets, [8]);
}

#[test]
fn missing_file_is_io_error() {
    let dir = TempDir::new().unwrap();
    write_tiny(dir.path(), &tiny("A said \"hi\" B", &[("c1", 8, 10)]));
    fs::remove_file(dir.path().join("Tiny/novel_text.txt")).unwrap();
    let err = load_corpus(dir.path()).unwrap_err();
    assert!(matches!(err, CorpusError::MissingFile { .. }), "{err}");
    assert!(err.is_io());

    let err = load_corpus(dir.path().join("nowhere")).unwrap_err();
    assert!(err.is_io(), "{err}");
}

#[test]
fn span_out_of_bounds_names_the_quotation() {
    let dir = TempDir::new().unwrap();
    let mut n = tiny("A said \"hi\" B and \"bye\"", &[("c1", 8, 10), ("c1", 19, 22)]);
    n.quotes[1].span_end = 400;
    write_tiny(dir.path(), &n);
    let err = load_corpus(dir.path()).unwrap_err();
    assert!(matches!(err, CorpusError::Validation { ordinal: Some(2), .. }), "{err}");
    assert!(!err.is_io());
    assert!(err.to_string().contains("quotation 2"), "{err}");
}

#[test]
fn unknown_character_is_rejected() {
    let dir = TempDir::new().unwrap();
    write_tiny(dir.path(), &tiny("A said \"hi\" B", &[("c9", 8, 10)]));
    let err = load_corpus(dir.path()).unwrap_err();
    assert!(err.to_string().contains("unknown character id `c9`"), "{err}");
}

#[test]
fn serialization_is_deterministic() {
    let a = synth_dir(&Synth::default());
    let b = synth_dir(&Synth::default());
    let rule = CategoryRule::default();
    let ca = load_corpus(a.path()).unwrap().categorized(&WordTokenizer, &rule);
    let cb = load_corpus(b.path()).unwrap().categorized(&WordTokenizer, &rule);
    let ja = serde_json::to_string(&ca).unwrap();
    assert_eq!(ja, serde_json::to_string(&cb).unwrap());
    assert_eq!(serde_json::from_str::<novel_ued::Corpus>(&ja).unwrap(), ca);
}
