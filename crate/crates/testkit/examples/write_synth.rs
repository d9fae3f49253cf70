//! Writes a synthetic corpus and lexicon: `write_synth <corpus-dir> <lexicon-path> [novels]`.
use std::path::PathBuf;

fn main() -> std::io::Result<()> {
    let args: Vec<String> = std::env::args().collect();
    let root = PathBuf::from(args.get(1).map(String::as_str).unwrap_or("synth"));
    let lex = PathBuf::from(args.get(2).map(String::as_str).unwrap_or("synth_lexicon.tsv"));
    let novels = args.get(3).and_then(|n| n.parse().ok()).unwrap_or(2);
    let shape = novel_ued_testkit::Synth { novels, ..Default::default() };
    novel_ued_testkit::write_corpus(&root, &lex, &shape)
}
