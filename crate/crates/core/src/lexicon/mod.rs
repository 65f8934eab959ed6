//! Stem lexicon: loading, phonological variant expansion and variant lookup.
//!
//! A lexicon is a CSV file with the header
//! `stem,pos,gloss_fr,polarity,irregular`. Every stem is expanded into the
//! spellings social-media writers actually use (`q`/`k`/`9`, `h`/`7`,
//! `ch`/`sh`, ...) and those spellings are indexed back to their entry.

mod index;
mod rules;

pub use index::{build_variant_index, write_expanded_lexicon, EntryId, IndexStats, VariantIndex};
pub use rules::{
    expand_entry_variants, parse_rules, Expansion, PhonoRule, RuleError, RuleSet,
    DEFAULT_VARIANT_CAP, SHORT_STEM_LEN,
};

use std::fmt;
use std::fs::File;
use std::io::Read;
use std::path::Path;
use std::str::FromStr;

use thiserror::Error;

/// Expected header of a lexicon file.
pub const LEXICON_HEADER: [&str; 5] = ["stem", "pos", "gloss_fr", "polarity", "irregular"];

/// Part of speech of a lexicon entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Pos {
    Verb,
    Noun,
    Adjective,
    Particle,
}

impl Pos {
    pub const ALL: [Pos; 4] = [Pos::Verb, Pos::Noun, Pos::Adjective, Pos::Particle];

    pub fn as_str(self) -> &'static str {
        match self {
            Pos::Verb => "verb",
            Pos::Noun => "noun",
            Pos::Adjective => "adjective",
            Pos::Particle => "particle",
        }
    }
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Pos {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "verb" => Ok(Pos::Verb),
            "noun" => Ok(Pos::Noun),
            "adjective" => Ok(Pos::Adjective),
            "particle" => Ok(Pos::Particle),
            other => Err(other.to_string()),
        }
    }
}

/// Sentiment polarity attached to an entry. Empty column means `Unspecified`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Polarity {
    Positive,
    Negative,
    Neutral,
    #[default]
    Unspecified,
}

impl Polarity {
    /// Column value; `Unspecified` is written as the empty string.
    pub fn as_str(self) -> &'static str {
        match self {
            Polarity::Positive => "positive",
            Polarity::Negative => "negative",
            Polarity::Neutral => "neutral",
            Polarity::Unspecified => "",
        }
    }
}

impl FromStr for Polarity {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "positive" => Ok(Polarity::Positive),
            "negative" => Ok(Polarity::Negative),
            "neutral" => Ok(Polarity::Neutral),
            "" => Ok(Polarity::Unspecified),
            other => Err(other.to_string()),
        }
    }
}

/// One dialect stem with its French gloss.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LexiconEntry {
    pub stem: String,
    pub pos: Pos,
    pub gloss_fr: String,
    pub polarity: Polarity,
    /// Lexicalized full form (auxiliaries); matched whole-token only.
    pub irregular: bool,
}

impl LexiconEntry {
    pub fn new(stem: &str, pos: Pos, gloss_fr: &str) -> Self {
        LexiconEntry {
            stem: stem.to_string(),
            pos,
            gloss_fr: gloss_fr.to_string(),
            polarity: Polarity::Unspecified,
            irregular: false,
        }
    }
}

/// True when `stem` is non-empty and made only of `[a-z0-9']`.
pub fn is_valid_stem(stem: &str) -> bool {
    !stem.is_empty()
        && stem
            .bytes()
            .all(|b| b.is_ascii_lowercase() || b.is_ascii_digit() || b == b'\'')
}

/// A problem with a single lexicon row.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RowError {
    #[error("line {line}: expected 5 columns, found {found}")]
    ColumnCount { line: u64, found: usize },
    #[error("line {line}: unknown pos value {value:?}")]
    UnknownPos { line: u64, value: String },
    #[error("line {line}: unknown polarity value {value:?}")]
    UnknownPolarity { line: u64, value: String },
    #[error("line {line}: unknown irregular value {value:?}")]
    UnknownIrregular { line: u64, value: String },
    #[error("line {line}: invalid stem {value:?} (allowed characters: a-z 0-9 ')")]
    InvalidStem { line: u64, value: String },
    #[error("line {line}: duplicate entry ({stem}, {pos}), first defined on line {first_line}")]
    Duplicate {
        line: u64,
        first_line: u64,
        stem: String,
        pos: Pos,
    },
}

#[derive(Debug, Error)]
pub enum LexiconError {
    #[error("cannot read lexicon: {0}")]
    Io(#[from] std::io::Error),
    #[error("lexicon is not valid CSV: {0}")]
    Csv(#[from] csv::Error),
    #[error("lexicon header must be `{}`, found `{found}`", LEXICON_HEADER.join(","))]
    Header { found: String },
    #[error("{}", errors.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n"))]
    Rows { errors: Vec<RowError> },
}

/// Reads a lexicon file. See [`parse_lexicon`].
pub fn parse_lexicon_file(path: impl AsRef<Path>) -> Result<Vec<LexiconEntry>, LexiconError> {
    let mut text = String::new();
    File::open(path)?.read_to_string(&mut text)?;
    parse_lexicon(&text)
}

/// Parses lexicon CSV text.
///
/// Entries come back in file order with stems lowercased and all fields
/// trimmed. Every bad row is reported, not just the first one.
pub fn parse_lexicon(text: &str) -> Result<Vec<LexiconEntry>, LexiconError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(text.as_bytes());
    let mut records = reader.records();

    let header = match records.next() {
        Some(rec) => rec?,
        None => {
            return Err(LexiconError::Header {
                found: String::new(),
            })
        }
    };
    if header.len() != LEXICON_HEADER.len()
        || header.iter().zip(LEXICON_HEADER).any(|(a, b)| a.trim() != b)
    {
        return Err(LexiconError::Header {
            found: header.iter().collect::<Vec<_>>().join(","),
        });
    }

    let mut entries = Vec::new();
    let mut errors = Vec::new();
    let mut seen: std::collections::HashMap<(String, Pos), u64> = Default::default();

    for rec in records {
        let rec = rec?;
        let line = rec.position().map_or(0, |p| p.line());
        match parse_row(&rec, line) {
            Ok(entry) => match seen.get(&(entry.stem.clone(), entry.pos)) {
                Some(&first_line) => errors.push(RowError::Duplicate {
                    line,
                    first_line,
                    stem: entry.stem,
                    pos: entry.pos,
                }),
                None => {
                    seen.insert((entry.stem.clone(), entry.pos), line);
                    entries.push(entry);
                }
            },
            Err(e) => errors.push(e),
        }
    }

    if errors.is_empty() {
        Ok(entries)
    } else {
        Err(LexiconError::Rows { errors })
    }
}

fn parse_row(rec: &csv::StringRecord, line: u64) -> Result<LexiconEntry, RowError> {
    if rec.len() != LEXICON_HEADER.len() {
        return Err(RowError::ColumnCount {
            line,
            found: rec.len(),
        });
    }
    let field = |i: usize| rec.get(i).unwrap_or("").trim();

    let stem = field(0).to_lowercase();
    if !is_valid_stem(&stem) {
        return Err(RowError::InvalidStem { line, value: stem });
    }
    let pos = field(1)
        .parse::<Pos>()
        .map_err(|value| RowError::UnknownPos { line, value })?;
    let polarity = field(3)
        .parse::<Polarity>()
        .map_err(|value| RowError::UnknownPolarity { line, value })?;
    let irregular = match field(4) {
        "true" => true,
        "false" | "" => false,
        other => {
            return Err(RowError::UnknownIrregular {
                line,
                value: other.to_string(),
            })
        }
    };

    Ok(LexiconEntry {
        stem,
        pos,
        gloss_fr: field(2).to_string(),
        polarity,
        irregular,
    })
}
