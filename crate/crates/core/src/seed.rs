//! Bundled desk-scale data: a seed lexicon and a three-message corpus.

/// Seed lexicon in the lexicon CSV format.
pub const SEED_LEXICON: &str = include_str!("../data/seed_lexicon.csv");

/// Three messages built from terms quoted in the dialect literature.
pub const DESK_CORPUS: &str = include_str!("../data/desk_corpus.txt");
