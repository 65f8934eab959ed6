//! Finite-state morphotactics for dialect verbs, nouns and adjectives.
//!
//! A token is read left to right through a slot automaton:
//!
//! ```text
//! verb       (ma)? (prefix)? STEM (suffix)? (cod | coi)? (ch)?
//! noun       STEM (plural)? (possessive)?
//! adjective  STEM (a)?
//! particle   STEM
//! ```
//!
//! The negation circumfix `ma…ch` only closes when it was opened, and it
//! requires a subject prefix. A verb without a subject prefix is read as an
//! imperative. Stems are found through the [`VariantIndex`](crate::lexicon::VariantIndex),
//! so spelling variation lives in the lexicon and the affix sets stay literal.

mod analyzer;
mod automaton;
mod generate;
mod inventory;
mod oracle;

pub use analyzer::{analyze_candidate, analyze_token, rank_analyses};
pub use automaton::{build_automaton, Label, MorphAutomaton, StateId};
pub use generate::{generate_form, paradigm, FormSlots, GenerateError, Object};
pub use inventory::{AffixInventory, InventoryError};
pub use oracle::brute_force_segment;

use std::fmt;

use crate::lexicon::Pos;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mood {
    IndicativePresent,
    Imperative,
    NotApplicable,
}

impl Mood {
    pub fn as_str(self) -> &'static str {
        match self {
            Mood::IndicativePresent => "indicative_present",
            Mood::Imperative => "imperative",
            Mood::NotApplicable => "n/a",
        }
    }
}

impl fmt::Display for Mood {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The vowel a verb stem may lose in front of a vowel-initial number suffix
/// (`ebki` + `ou` → `nebkou`).
pub const ELIDABLE_VOWEL: char = 'i';

/// Whether a stem ending in [`ELIDABLE_VOWEL`] drops it before `suffix`.
///
/// `i`-initial suffixes always absorb it (`ebkiw`, `nebkiw`); `o`-initial
/// ones only in the present (`nebkou` but imperative `ebkiou`).
pub fn elides(suffix: &str, mood: Mood) -> bool {
    match suffix.chars().next() {
        Some('i') => true,
        Some('o') => mood == Mood::IndicativePresent,
        _ => false,
    }
}

/// One segmentation of a token into labeled morphemes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Analysis {
    pub surface: String,
    pub normalized: String,
    pub exaggerated: bool,
    pub pos: Pos,
    /// The stem as it appears in the token.
    pub stem: String,
    /// The lexicon spelling of the stem.
    pub canonical_stem: String,
    pub gloss_fr: String,
    pub subject_prefix: Option<String>,
    /// Verb number suffix, or the noun plural on nouns.
    pub plural_suffix: Option<String>,
    pub cod: Option<String>,
    pub coi: Option<String>,
    pub possessive: Option<String>,
    pub feminine: Option<String>,
    pub neg_open: Option<String>,
    pub neg_close: Option<String>,
    pub mood: Mood,
    /// The stem lost its final vowel before the number suffix.
    pub elided: bool,
    pub irregular: bool,
}

impl Analysis {
    pub(crate) fn bare(candidate: &str, pos: Pos, stem: &str, canonical: &str, gloss: &str) -> Self {
        Analysis {
            surface: candidate.to_string(),
            normalized: candidate.to_string(),
            exaggerated: false,
            pos,
            stem: stem.to_string(),
            canonical_stem: canonical.to_string(),
            gloss_fr: gloss.to_string(),
            subject_prefix: None,
            plural_suffix: None,
            cod: None,
            coi: None,
            possessive: None,
            feminine: None,
            neg_open: None,
            neg_close: None,
            mood: Mood::NotApplicable,
            elided: false,
            irregular: false,
        }
    }

    pub fn negation(&self) -> bool {
        self.neg_open.is_some() && self.neg_close.is_some()
    }

    pub fn is_feminine(&self) -> bool {
        self.feminine.is_some()
    }

    /// Concatenates the morphemes in slot order.
    pub fn reconstruct(&self) -> String {
        let parts: [Option<&str>; 9] = [
            self.neg_open.as_deref(),
            self.subject_prefix.as_deref(),
            Some(self.stem.as_str()),
            self.plural_suffix.as_deref(),
            self.cod.as_deref(),
            self.coi.as_deref(),
            self.possessive.as_deref(),
            self.feminine.as_deref(),
            self.neg_close.as_deref(),
        ];
        parts.iter().flatten().copied().collect()
    }

    /// Number of affix slots filled; the negation circumfix counts once.
    pub fn affix_count(&self) -> usize {
        [
            self.subject_prefix.is_some(),
            self.plural_suffix.is_some(),
            self.cod.is_some(),
            self.coi.is_some(),
            self.possessive.is_some(),
            self.feminine.is_some(),
            self.negation(),
        ]
        .iter()
        .filter(|&&b| b)
        .count()
    }

    /// Particle, irregular form, or bare stem spanning the whole token.
    pub fn is_whole_token(&self) -> bool {
        self.affix_count() == 0 && self.stem == self.normalized
    }

    /// The token spells the stem exactly as the lexicon does.
    pub fn is_canonical_spelling(&self) -> bool {
        if self.elided {
            self.canonical_stem.strip_suffix(ELIDABLE_VOWEL) == Some(self.stem.as_str())
        } else {
            self.stem == self.canonical_stem
        }
    }

    /// The grammatical slots of this analysis, comparable with the input of
    /// [`generate_form`].
    pub fn slots(&self) -> FormSlots {
        FormSlots {
            mood: self.mood,
            subject_prefix: self.subject_prefix.clone(),
            plural_suffix: self.plural_suffix.clone(),
            object: match (&self.cod, &self.coi) {
                (Some(p), _) => Some(Object::Cod(p.clone())),
                (None, Some(p)) => Some(Object::Coi(p.clone())),
                (None, None) => None,
            },
            negation: self.negation(),
            possessive: self.possessive.clone(),
            feminine: self.is_feminine(),
        }
    }
}
