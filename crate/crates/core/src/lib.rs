//! Rule-based morphological analysis for Algerian Arabic written in Latin
//! script (Arabizi).
//!
//! The pipeline has four stages:
//!
//! 1. [`lexicon`]: load stems and expand them into spelling variants
//!    (`q`/`k`/`9`, `h`/`7`, `ch`/`sh`, `o`/`ou`, ...).
//! 2. [`normalizer`]: tokenize messages and collapse exaggerated letters.
//! 3. [`morphology`]: segment tokens with a slot automaton
//!    (`ma|n|dir|ha|ch`).
//! 4. [`corpus`]: term frequencies and POS-grouped label tables.
//!
//! ```
//! use darja_core::prelude::*;
//!
//! let entries = parse_lexicon(darja_core::seed::SEED_LEXICON).unwrap();
//! let index = build_variant_index(entries, &RuleSet::default(), DEFAULT_VARIANT_CAP);
//! let automaton = build_automaton(AffixInventory::algerian(false)).unwrap();
//!
//! let token = &normalize_message(&RawMessage::new(0, "mandirhach"))[0];
//! let best = &analyze_token(token, &index, &automaton)[0];
//! assert_eq!(best.stem, "dir");
//! assert_eq!(best.cod.as_deref(), Some("ha"));
//! assert!(best.negation());
//! ```

pub mod corpus;
pub mod lexicon;
pub mod morphology;
pub mod normalizer;
pub mod seed;

pub mod prelude {
    pub use crate::corpus::{
        analyze_corpus, build_term_frequency_model, emit_label_tables, ingest_corpus, Group,
        LabelTable, TermFrequencyModel,
    };
    pub use crate::lexicon::{
        build_variant_index, expand_entry_variants, parse_lexicon, parse_lexicon_file,
        LexiconEntry, PhonoRule, Pos, RuleSet, VariantIndex, DEFAULT_VARIANT_CAP,
    };
    pub use crate::morphology::{
        analyze_token, build_automaton, generate_form, AffixInventory, Analysis, FormSlots,
        MorphAutomaton, Mood,
    };
    pub use crate::normalizer::{normalize_message, RawMessage, Token};
}
