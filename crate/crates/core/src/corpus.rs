//! Corpus ingestion, term frequencies and POS-grouped label tables.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use thiserror::Error;

use crate::lexicon::{Pos, VariantIndex};
use crate::morphology::{analyze_token, Analysis, MorphAutomaton};
use crate::normalizer::{normalize_message, RawMessage, Token};

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{}: invalid UTF-8 at byte offset {offset}", path.display())]
    Utf8 { path: PathBuf, offset: usize },
    #[error("{}: {source}", path.display())]
    Csv { path: PathBuf, source: csv::Error },
}

/// Reads a corpus file: one message per line, blank lines included.
pub fn ingest_corpus(path: impl AsRef<Path>) -> Result<Vec<RawMessage>, CorpusError> {
    let path = path.as_ref();
    let bytes = fs::read(path).map_err(|source| CorpusError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let text = std::str::from_utf8(&bytes).map_err(|e| CorpusError::Utf8 {
        path: path.to_path_buf(),
        offset: e.valid_up_to(),
    })?;
    Ok(parse_corpus(text))
}

/// Splits corpus text into messages; the zero-based line number is the id.
pub fn parse_corpus(text: &str) -> Vec<RawMessage> {
    text.lines()
        .enumerate()
        .map(|(id, line)| RawMessage::new(id, line))
        .collect()
}

/// Occurrence counts of normalized terms (first candidate of each token).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TermFrequencyModel {
    pub counts: BTreeMap<String, usize>,
    pub total_tokens: usize,
}

impl TermFrequencyModel {
    /// Terms by descending count, ties broken alphabetically.
    pub fn sorted(&self) -> Vec<(&str, usize)> {
        let mut terms: Vec<_> = self.counts.iter().map(|(t, &c)| (t.as_str(), c)).collect();
        terms.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(b.0)));
        terms
    }

    /// `term,count` CSV in [`sorted`](Self::sorted) order.
    pub fn write_csv<W: Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["term", "count"])?;
        for (term, count) in self.sorted() {
            w.write_record([term, &count.to_string()])?;
        }
        w.flush()?;
        Ok(())
    }
}

pub fn build_term_frequency_model(messages: &[RawMessage]) -> TermFrequencyModel {
    let mut model = TermFrequencyModel::default();
    for msg in messages {
        for token in normalize_message(msg) {
            *model.counts.entry(token.candidates[0].clone()).or_default() += 1;
            model.total_tokens += 1;
        }
    }
    model
}

/// Output group of a token; one CSV file each.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Group {
    Verbs,
    Nouns,
    Adjectives,
    Particles,
    Unrecognized,
}

impl Group {
    pub const ALL: [Group; 5] = [
        Group::Verbs,
        Group::Nouns,
        Group::Adjectives,
        Group::Particles,
        Group::Unrecognized,
    ];

    pub fn file_name(self) -> &'static str {
        match self {
            Group::Verbs => "verbs.csv",
            Group::Nouns => "nouns.csv",
            Group::Adjectives => "adjectives.csv",
            Group::Particles => "particles.csv",
            Group::Unrecognized => "unrecognized.csv",
        }
    }

    fn of(pos: Pos) -> Self {
        match pos {
            Pos::Verb => Group::Verbs,
            Pos::Noun => Group::Nouns,
            Pos::Adjective => Group::Adjectives,
            Pos::Particle => Group::Particles,
        }
    }
}

/// A corpus token with its ranked analyses (empty when unrecognized).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelRow {
    pub token: Token,
    pub analyses: Vec<Analysis>,
}

impl LabelRow {
    pub fn top(&self) -> Option<&Analysis> {
        self.analyses.first()
    }

    pub fn candidate_count(&self) -> usize {
        self.analyses.len()
    }

    pub fn group(&self) -> Group {
        self.top().map_or(Group::Unrecognized, |a| Group::of(a.pos))
    }
}

/// Labeled corpus tokens in (message_id, token_index) order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LabelTable {
    pub rows: Vec<LabelRow>,
}

impl LabelTable {
    pub fn group(&self, group: Group) -> impl Iterator<Item = &LabelRow> {
        self.rows.iter().filter(move |r| r.group() == group)
    }

    pub fn group_counts(&self) -> BTreeMap<Group, usize> {
        let mut counts: BTreeMap<Group, usize> = Group::ALL.iter().map(|&g| (g, 0)).collect();
        for row in &self.rows {
            *counts.get_mut(&row.group()).unwrap() += 1;
        }
        counts
    }
}

/// Normalizes and analyzes every token. Messages are processed in parallel;
/// row order does not depend on scheduling.
pub fn analyze_corpus(
    messages: &[RawMessage],
    index: &VariantIndex,
    automaton: &MorphAutomaton,
) -> LabelTable {
    let rows = messages
        .par_iter()
        .flat_map_iter(|msg| {
            normalize_message(msg).into_iter().map(|token| {
                let analyses = analyze_token(&token, index, automaton);
                LabelRow { token, analyses }
            })
        })
        .collect();
    LabelTable { rows }
}

pub const LABEL_HEADER: [&str; 18] = [
    "message_id",
    "token_index",
    "surface",
    "normalized",
    "exaggerated",
    "pos",
    "stem",
    "canonical_stem",
    "gloss_fr",
    "subject_prefix",
    "plural_suffix",
    "cod",
    "coi",
    "possessive",
    "feminine",
    "negation",
    "mood",
    "candidate_count",
];

fn flag(b: bool) -> String {
    if b { "true" } else { "false" }.to_string()
}

fn label_record(token: &Token, analysis: Option<&Analysis>, count: usize) -> Vec<String> {
    let opt = |s: &Option<String>| s.clone().unwrap_or_default();
    let mut rec = vec![
        token.message_id.to_string(),
        token.token_index.to_string(),
        token.surface.clone(),
    ];
    match analysis {
        Some(a) => rec.extend([
            a.normalized.clone(),
            flag(token.exaggerated),
            a.pos.to_string(),
            a.stem.clone(),
            a.canonical_stem.clone(),
            a.gloss_fr.clone(),
            opt(&a.subject_prefix),
            opt(&a.plural_suffix),
            opt(&a.cod),
            opt(&a.coi),
            opt(&a.possessive),
            flag(a.is_feminine()),
            flag(a.negation()),
            a.mood.to_string(),
        ]),
        None => {
            rec.extend([token.first_candidate().to_string(), flag(token.exaggerated)]);
            rec.extend(std::iter::repeat_n(String::new(), 9));
            rec.extend([flag(false), flag(false), String::new()]);
        }
    }
    rec.push(count.to_string());
    rec
}

fn csv_err(path: &Path) -> impl FnOnce(csv::Error) -> CorpusError + '_ {
    move |source| CorpusError::Csv {
        path: path.to_path_buf(),
        source,
    }
}

fn create_writer(path: &Path) -> Result<csv::Writer<fs::File>, CorpusError> {
    let file = fs::File::create(path).map_err(|source| CorpusError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(csv::Writer::from_writer(file))
}

/// Writes `verbs.csv`, `nouns.csv`, `adjectives.csv`, `particles.csv` and
/// `unrecognized.csv` into `out_dir`, each with the top analysis per token.
pub fn emit_label_tables(table: &LabelTable, out_dir: impl AsRef<Path>) -> Result<Vec<PathBuf>, CorpusError> {
    let out_dir = out_dir.as_ref();
    let mut written = Vec::new();
    for group in Group::ALL {
        let path = out_dir.join(group.file_name());
        let mut w = create_writer(&path)?;
        w.write_record(LABEL_HEADER).map_err(csv_err(&path))?;
        for row in table.group(group) {
            w.write_record(label_record(&row.token, row.top(), row.candidate_count()))
                .map_err(csv_err(&path))?;
        }
        w.flush().map_err(|source| CorpusError::Io {
            path: path.clone(),
            source,
        })?;
        written.push(path);
    }
    Ok(written)
}

/// Writes every ranked analysis of every token, one row each, with a
/// trailing `rank` column (1 = top). Unrecognized tokens get one row with
/// rank 0.
pub fn write_all_analyses(table: &LabelTable, path: impl AsRef<Path>) -> Result<(), CorpusError> {
    let path = path.as_ref();
    let mut w = create_writer(path)?;
    let mut header = LABEL_HEADER.to_vec();
    header.push("rank");
    w.write_record(header).map_err(csv_err(path))?;
    for row in &table.rows {
        if row.analyses.is_empty() {
            let mut rec = label_record(&row.token, None, 0);
            rec.push("0".into());
            w.write_record(rec).map_err(csv_err(path))?;
        }
        for (rank, a) in row.analyses.iter().enumerate() {
            let mut rec = label_record(&row.token, Some(a), row.candidate_count());
            rec.push((rank + 1).to_string());
            w.write_record(rec).map_err(csv_err(path))?;
        }
    }
    w.flush().map_err(|source| CorpusError::Io {
        path: path.to_path_buf(),
        source,
    })
}
