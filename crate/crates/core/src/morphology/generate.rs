use std::collections::BTreeSet;

use thiserror::Error;

use super::{elides, AffixInventory, Mood, ELIDABLE_VOWEL};
use crate::lexicon::{LexiconEntry, Pos};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Object {
    Cod(String),
    Coi(String),
}

/// Inflection request for [`generate_form`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FormSlots {
    pub mood: Mood,
    pub subject_prefix: Option<String>,
    /// Verb number suffix, or noun plural on nouns.
    pub plural_suffix: Option<String>,
    pub object: Option<Object>,
    pub negation: bool,
    pub possessive: Option<String>,
    pub feminine: bool,
}

impl FormSlots {
    /// No affixes at all, mood n/a.
    pub fn bare() -> Self {
        FormSlots {
            mood: Mood::NotApplicable,
            subject_prefix: None,
            plural_suffix: None,
            object: None,
            negation: false,
            possessive: None,
            feminine: false,
        }
    }

    pub fn present(subject_prefix: &str) -> Self {
        FormSlots {
            mood: Mood::IndicativePresent,
            subject_prefix: Some(subject_prefix.into()),
            ..FormSlots::bare()
        }
    }

    pub fn imperative() -> Self {
        FormSlots {
            mood: Mood::Imperative,
            ..FormSlots::bare()
        }
    }

    pub fn plural(mut self, suffix: &str) -> Self {
        self.plural_suffix = Some(suffix.into());
        self
    }

    pub fn cod(mut self, pronoun: &str) -> Self {
        self.object = Some(Object::Cod(pronoun.into()));
        self
    }

    pub fn coi(mut self, pronoun: &str) -> Self {
        self.object = Some(Object::Coi(pronoun.into()));
        self
    }

    pub fn negated(mut self) -> Self {
        self.negation = true;
        self
    }

    pub fn possessive(mut self, suffix: &str) -> Self {
        self.possessive = Some(suffix.into());
        self
    }

    pub fn feminine(mut self) -> Self {
        self.feminine = true;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("illegal slots for {pos} {stem:?}: {constraint}")]
    Illegal {
        stem: String,
        pos: Pos,
        constraint: &'static str,
    },
    #[error("{affix:?} is not a {slot}")]
    UnknownAffix { slot: &'static str, affix: String },
    #[error("the inventory has no {0} affix")]
    MissingAffix(&'static str),
}

fn member<'a>(
    set: &BTreeSet<String>,
    slot: &'static str,
    affix: &'a Option<String>,
) -> Result<Option<&'a str>, GenerateError> {
    match affix {
        Some(a) if set.contains(a) => Ok(Some(a)),
        Some(a) => Err(GenerateError::UnknownAffix {
            slot,
            affix: a.clone(),
        }),
        None => Ok(None),
    }
}

/// Preferred spelling of a set: `preferred` if present, else the first member.
fn pick<'a>(set: &'a BTreeSet<String>, preferred: &str, slot: &'static str) -> Result<&'a str, GenerateError> {
    set.get(preferred)
        .or_else(|| set.iter().next())
        .map(String::as_str)
        .ok_or(GenerateError::MissingAffix(slot))
}

/// Spells out an inflected form by concatenating slots in order. Negation
/// wraps the verb in `ma`…`ch`.
pub fn generate_form(
    entry: &LexiconEntry,
    slots: &FormSlots,
    inventory: &AffixInventory,
) -> Result<String, GenerateError> {
    let illegal = |constraint| GenerateError::Illegal {
        stem: entry.stem.clone(),
        pos: entry.pos,
        constraint,
    };
    let verb_slots = slots.subject_prefix.is_some() || slots.object.is_some() || slots.negation;

    if entry.irregular {
        if *slots != FormSlots::bare() {
            return Err(illegal("irregular forms take no affixes"));
        }
        return Ok(entry.stem.clone());
    }

    match entry.pos {
        Pos::Verb => {
            if slots.possessive.is_some() || slots.feminine {
                return Err(illegal("verbs take no possessive or feminine suffix"));
            }
            let suffixes = match slots.mood {
                Mood::Imperative => {
                    if slots.subject_prefix.is_some() {
                        return Err(illegal("imperative takes no subject prefix"));
                    }
                    if slots.negation {
                        return Err(illegal("negation needs a subject prefix"));
                    }
                    &inventory.imperative_suffixes
                }
                Mood::IndicativePresent => {
                    if slots.subject_prefix.is_none() {
                        return Err(illegal("present needs a subject prefix"));
                    }
                    &inventory.plural_suffixes
                }
                Mood::NotApplicable => return Err(illegal("verbs need a mood")),
            };
            let slot_name = if slots.mood == Mood::Imperative {
                "imperative suffix"
            } else {
                "plural suffix"
            };
            let prefix = member(&inventory.subject_prefixes, "subject prefix", &slots.subject_prefix)?;
            let suffix = member(suffixes, slot_name, &slots.plural_suffix)?;
            let object = match &slots.object {
                Some(Object::Cod(p)) => member(&inventory.cod_pronouns, "direct object pronoun", &Some(p.clone()))?
                    .map(str::to_string),
                Some(Object::Coi(p)) => member(&inventory.coi_pronouns, "indirect object pronoun", &Some(p.clone()))?
                    .map(str::to_string),
                None => None,
            };

            let mut stem = entry.stem.as_str();
            if let Some(s) = suffix {
                if elides(s, slots.mood) {
                    stem = stem.strip_suffix(ELIDABLE_VOWEL).unwrap_or(stem);
                }
            }

            let mut form = String::new();
            if slots.negation {
                form.push_str(pick(&inventory.neg_open, "ma", "negation opener")?);
            }
            form.extend(prefix);
            form.push_str(stem);
            form.extend(suffix);
            form.extend(object.as_deref());
            if slots.negation {
                form.push_str(pick(&inventory.neg_close, "ch", "negation closer")?);
            }
            Ok(form)
        }
        Pos::Noun => {
            if verb_slots || slots.feminine || slots.mood != Mood::NotApplicable {
                return Err(illegal("nouns take only plural and possessive suffixes"));
            }
            let plural = member(&inventory.noun_plural_suffixes, "noun plural suffix", &slots.plural_suffix)?;
            let possessive = member(&inventory.possessive_suffixes, "possessive suffix", &slots.possessive)?;
            Ok([Some(entry.stem.as_str()), plural, possessive].into_iter().flatten().collect())
        }
        Pos::Adjective => {
            if verb_slots
                || slots.plural_suffix.is_some()
                || slots.possessive.is_some()
                || slots.mood != Mood::NotApplicable
            {
                return Err(illegal("adjectives take only the feminine suffix"));
            }
            let mut form = entry.stem.clone();
            if slots.feminine {
                form.push_str(pick(&inventory.feminine_suffix, "a", "feminine")?);
            }
            Ok(form)
        }
        Pos::Particle => {
            if *slots != FormSlots::bare() {
                return Err(illegal("particles take no affixes"));
            }
            Ok(entry.stem.clone())
        }
    }
}

/// Every slot combination `entry` accepts under `inventory`, in a fixed
/// order. Negated forms use the default circumfix only.
pub fn paradigm(entry: &LexiconEntry, inventory: &AffixInventory) -> Vec<FormSlots> {
    let opt = |set: &BTreeSet<String>| -> Vec<Option<String>> {
        std::iter::once(None).chain(set.iter().cloned().map(Some)).collect()
    };
    if entry.irregular || entry.pos == Pos::Particle {
        return vec![FormSlots::bare()];
    }
    let mut out = Vec::new();
    match entry.pos {
        Pos::Verb => {
            let objects: Vec<Option<Object>> = std::iter::once(None)
                .chain(inventory.cod_pronouns.iter().cloned().map(|p| Some(Object::Cod(p))))
                .chain(inventory.coi_pronouns.iter().cloned().map(|p| Some(Object::Coi(p))))
                .collect();
            for suffix in opt(&inventory.imperative_suffixes) {
                for object in &objects {
                    out.push(FormSlots {
                        plural_suffix: suffix.clone(),
                        object: object.clone(),
                        ..FormSlots::imperative()
                    });
                }
            }
            for prefix in &inventory.subject_prefixes {
                for suffix in opt(&inventory.plural_suffixes) {
                    for object in &objects {
                        for negation in [false, true] {
                            out.push(FormSlots {
                                plural_suffix: suffix.clone(),
                                object: object.clone(),
                                negation,
                                ..FormSlots::present(prefix)
                            });
                        }
                    }
                }
            }
        }
        Pos::Noun => {
            for plural in opt(&inventory.noun_plural_suffixes) {
                for possessive in opt(&inventory.possessive_suffixes) {
                    out.push(FormSlots {
                        plural_suffix: plural.clone(),
                        possessive,
                        ..FormSlots::bare()
                    });
                }
            }
        }
        Pos::Adjective => {
            out.push(FormSlots::bare());
            if !inventory.feminine_suffix.is_empty() {
                out.push(FormSlots::bare().feminine());
            }
        }
        Pos::Particle => unreachable!(),
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen(stem: &str, pos: Pos, slots: FormSlots) -> Result<String, GenerateError> {
        generate_form(
            &LexiconEntry::new(stem, pos, ""),
            &slots,
            &AffixInventory::algerian(false),
        )
    }

    #[test]
    fn present_with_subject() {
        assert_eq!(gen("hab", Pos::Verb, FormSlots::present("n")).unwrap(), "nhab");
    }

    #[test]
    fn negated_plural_with_elision() {
        let slots = FormSlots::present("n").plural("ou").negated();
        assert_eq!(gen("ebki", Pos::Verb, slots).unwrap(), "manebkouch");
    }

    #[test]
    fn indirect_object() {
        let slots = FormSlots::present("y").coi("lek");
        assert_eq!(gen("hab", Pos::Verb, slots).unwrap(), "yhablek");
    }

    #[test]
    fn imperative_keeps_vowel_before_ou() {
        assert_eq!(gen("ebki", Pos::Verb, FormSlots::imperative().plural("ou")).unwrap(), "ebkiou");
        assert_eq!(gen("ebki", Pos::Verb, FormSlots::imperative().plural("iw")).unwrap(), "ebkiw");
        assert_eq!(gen("hab", Pos::Verb, FormSlots::imperative().plural("i")).unwrap(), "habi");
    }

    #[test]
    fn noun_possessive() {
        assert_eq!(gen("ktab", Pos::Noun, FormSlots::bare().possessive("i")).unwrap(), "ktabi");
    }

    #[test]
    fn adjective_feminine() {
        assert_eq!(gen("sghir", Pos::Adjective, FormSlots::bare().feminine()).unwrap(), "sghira");
    }

    #[test]
    fn illegal_combinations() {
        let err = gen("hab", Pos::Verb, FormSlots::imperative().negated()).unwrap_err();
        assert!(err.to_string().contains("negation needs a subject prefix"), "{err}");

        let mut slots = FormSlots::imperative();
        slots.subject_prefix = Some("n".into());
        assert!(gen("hab", Pos::Verb, slots).is_err());

        assert!(gen("ktab", Pos::Noun, FormSlots::bare().negated()).is_err());
        assert!(gen("sghir", Pos::Adjective, FormSlots::bare().possessive("i")).is_err());
        assert!(gen("fi", Pos::Particle, FormSlots::bare().feminine()).is_err());
        assert!(gen("hab", Pos::Verb, FormSlots::bare()).is_err());
    }

    #[test]
    fn unknown_affixes() {
        let err = gen("hab", Pos::Verb, FormSlots::present("x")).unwrap_err();
        assert_eq!(
            err,
            GenerateError::UnknownAffix {
                slot: "subject prefix",
                affix: "x".into()
            }
        );
        // "i" is an imperative suffix but not a present plural
        assert!(gen("hab", Pos::Verb, FormSlots::present("n").plural("i")).is_err());
        // "li" is indirect, not direct
        assert!(gen("hab", Pos::Verb, FormSlots::present("y").cod("li")).is_err());
    }

    #[test]
    fn paradigm_sizes() {
        let inv = AffixInventory::algerian(false);
        let verb = paradigm(&LexiconEntry::new("hab", Pos::Verb, ""), &inv);
        // imperative 4 x 21 objects, present 10 x 3 x 21 x 2
        assert_eq!(verb.len(), 4 * 21 + 10 * 3 * 21 * 2);
        let e = LexiconEntry::new("hab", Pos::Verb, "");
        assert!(verb.iter().all(|s| generate_form(&e, s, &inv).is_ok()));
        assert_eq!(paradigm(&LexiconEntry::new("ktab", Pos::Noun, ""), &inv).len(), 10);
        assert_eq!(paradigm(&LexiconEntry::new("ktab", Pos::Noun, ""), &AffixInventory::algerian(true)).len(), 30);
        assert_eq!(paradigm(&LexiconEntry::new("zin", Pos::Adjective, ""), &inv).len(), 2);
        assert_eq!(paradigm(&LexiconEntry::new("fi", Pos::Particle, ""), &inv), [FormSlots::bare()]);
    }

    #[test]
    fn irregular_is_fixed() {
        let mut e = LexiconEntry::new("rani", Pos::Verb, "je suis");
        e.irregular = true;
        let inv = AffixInventory::algerian(false);
        assert_eq!(generate_form(&e, &FormSlots::bare(), &inv).unwrap(), "rani");
        assert!(generate_form(&e, &FormSlots::present("n"), &inv).is_err());
    }
}
