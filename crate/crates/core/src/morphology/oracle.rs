//! Exhaustive segmentation, used to cross-check the automaton.
//!
//! Nothing here touches the transition table: every slot sequence of every
//! part of speech is spelled out as nested loops over the affix sets.

use std::collections::BTreeSet;

use super::{elides, AffixInventory, Analysis, Mood, ELIDABLE_VOWEL};
use crate::lexicon::{LexiconEntry, Pos, VariantIndex};

fn with_empty(set: &BTreeSet<String>) -> Vec<Option<&str>> {
    std::iter::once(None)
        .chain(set.iter().map(|s| Some(s.as_str())))
        .collect()
}

fn strip<'a>(s: &'a str, affix: Option<&str>) -> Option<&'a str> {
    match affix {
        Some(a) => s.strip_prefix(a),
        None => Some(s),
    }
}

/// Every non-empty prefix of `s` with the matching remainder.
fn splits(s: &str) -> impl Iterator<Item = (&str, &str)> {
    s.char_indices()
        .map(|(i, _)| i)
        .skip(1)
        .chain(std::iter::once(s.len()))
        .filter(|&i| i > 0)
        .map(move |i| s.split_at(i))
}

fn regular<'a>(index: &'a VariantIndex, spelling: &str, pos: Pos) -> impl Iterator<Item = &'a LexiconEntry> {
    index
        .lookup_stem(spelling)
        .into_iter()
        .filter(move |e| e.pos == pos && !e.irregular)
}

fn base(candidate: &str, stem: &str, e: &LexiconEntry) -> Analysis {
    Analysis::bare(candidate, e.pos, stem, &e.stem, &e.gloss_fr)
}

#[derive(Clone, Copy)]
enum ObjectSlot<'a> {
    Cod(&'a str),
    Coi(&'a str),
}

/// All legal segmentations of `candidate`, unranked.
pub fn brute_force_segment(
    candidate: &str,
    index: &VariantIndex,
    inventory: &AffixInventory,
) -> BTreeSet<Analysis> {
    let mut found = BTreeSet::new();
    if candidate.is_empty() {
        return found;
    }
    let own = |s: Option<&str>| s.map(str::to_string);

    // irregular full forms and particles: whole token
    for e in index.lookup_stem(candidate) {
        if e.irregular {
            let mut a = base(candidate, candidate, e);
            a.irregular = true;
            found.insert(a);
        } else if e.pos == Pos::Particle {
            found.insert(base(candidate, candidate, e));
        }
    }

    // verbs
    let objects: Vec<Option<ObjectSlot>> = std::iter::once(None)
        .chain(inventory.cod_pronouns.iter().map(|p| Some(ObjectSlot::Cod(p))))
        .chain(inventory.coi_pronouns.iter().map(|p| Some(ObjectSlot::Coi(p))))
        .collect();
    for neg in with_empty(&inventory.neg_open) {
        let Some(after_neg) = strip(candidate, neg) else { continue };
        for subject in with_empty(&inventory.subject_prefixes) {
            if neg.is_some() && subject.is_none() {
                continue;
            }
            let Some(after_subject) = strip(after_neg, subject) else { continue };
            let mood = if subject.is_some() {
                Mood::IndicativePresent
            } else {
                Mood::Imperative
            };
            let suffixes = match mood {
                Mood::Imperative => &inventory.imperative_suffixes,
                _ => &inventory.plural_suffixes,
            };
            let closers: Vec<Option<&str>> = if neg.is_some() {
                inventory.neg_close.iter().map(|c| Some(c.as_str())).collect()
            } else {
                vec![None]
            };

            for (stem, after_stem) in splits(after_subject) {
                for suffix in with_empty(suffixes) {
                    let Some(after_suffix) = strip(after_stem, suffix) else { continue };
                    for object in &objects {
                        let object_text = object.map(|o| match o {
                            ObjectSlot::Cod(p) | ObjectSlot::Coi(p) => p,
                        });
                        let Some(after_object) = strip(after_suffix, object_text) else { continue };
                        for close in &closers {
                            if after_object != close.unwrap_or("") {
                                continue;
                            }
                            let fill = |mut a: Analysis| {
                                a.mood = mood;
                                a.neg_open = own(neg);
                                a.subject_prefix = own(subject);
                                a.plural_suffix = own(suffix);
                                match object {
                                    Some(ObjectSlot::Cod(p)) => a.cod = Some(p.to_string()),
                                    Some(ObjectSlot::Coi(p)) => a.coi = Some(p.to_string()),
                                    None => {}
                                }
                                a.neg_close = own(*close);
                                a
                            };
                            for e in regular(index, stem, Pos::Verb) {
                                found.insert(fill(base(candidate, stem, e)));
                            }
                            if let Some(s) = suffix {
                                if elides(s, mood) {
                                    let restored = format!("{stem}{ELIDABLE_VOWEL}");
                                    for e in regular(index, &restored, Pos::Verb) {
                                        let mut a = fill(base(candidate, stem, e));
                                        a.elided = true;
                                        found.insert(a);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    // nouns and adjectives
    for (stem, rest) in splits(candidate) {
        for plural in with_empty(&inventory.noun_plural_suffixes) {
            let Some(after_plural) = strip(rest, plural) else { continue };
            for possessive in with_empty(&inventory.possessive_suffixes) {
                if after_plural != possessive.unwrap_or("") {
                    continue;
                }
                for e in regular(index, stem, Pos::Noun) {
                    let mut a = base(candidate, stem, e);
                    a.plural_suffix = own(plural);
                    a.possessive = own(possessive);
                    found.insert(a);
                }
            }
        }
        for feminine in with_empty(&inventory.feminine_suffix) {
            if rest != feminine.unwrap_or("") {
                continue;
            }
            for e in regular(index, stem, Pos::Adjective) {
                let mut a = base(candidate, stem, e);
                a.feminine = own(feminine);
                found.insert(a);
            }
        }
    }

    found
}
