use std::collections::BTreeSet;

use thiserror::Error;

/// Closed affix sets, one per morphotactic slot.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AffixInventory {
    pub subject_prefixes: BTreeSet<String>,
    pub plural_suffixes: BTreeSet<String>,
    pub imperative_suffixes: BTreeSet<String>,
    pub neg_open: BTreeSet<String>,
    pub neg_close: BTreeSet<String>,
    pub cod_pronouns: BTreeSet<String>,
    pub coi_pronouns: BTreeSet<String>,
    pub possessive_suffixes: BTreeSet<String>,
    pub feminine_suffix: BTreeSet<String>,
    /// Empty unless noun plurals are switched on.
    pub noun_plural_suffixes: BTreeSet<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InventoryError {
    #[error("{slot}: affix {affix:?} must be non-empty lowercase")]
    BadAffix { slot: &'static str, affix: String },
    #[error("pronoun {0:?} is both a direct and an indirect object")]
    ObjectOverlap(String),
}

fn set(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}

impl AffixInventory {
    /// The affixes of Algerian verb, noun and adjective inflection.
    pub fn algerian(noun_plural: bool) -> Self {
        AffixInventory {
            subject_prefixes: set(&["n", "t", "y", "i", "ne", "te", "ye", "na", "ta", "ya"]),
            plural_suffixes: set(&["ou", "iw"]),
            imperative_suffixes: set(&["i", "ou", "iw"]),
            neg_open: set(&["ma"]),
            neg_close: set(&["ch", "che", "sh"]),
            cod_pronouns: set(&["ni", "ek", "k", "ou", "h", "ha", "na", "kom", "hom"]),
            coi_pronouns: set(&[
                "li", "lek", "lou", "lha", "ena", "elna", "lna", "elkom", "lkom", "elhom", "lhom",
            ]),
            possessive_suffixes: set(&["i", "ek", "k", "ou", "h", "ha", "na", "kom", "hom"]),
            feminine_suffix: set(&["a"]),
            noun_plural_suffixes: if noun_plural {
                set(&["in", "yn"])
            } else {
                BTreeSet::new()
            },
        }
    }

    pub(crate) fn slots(&self) -> [(&'static str, &BTreeSet<String>); 10] {
        [
            ("subject_prefixes", &self.subject_prefixes),
            ("plural_suffixes", &self.plural_suffixes),
            ("imperative_suffixes", &self.imperative_suffixes),
            ("neg_open", &self.neg_open),
            ("neg_close", &self.neg_close),
            ("cod_pronouns", &self.cod_pronouns),
            ("coi_pronouns", &self.coi_pronouns),
            ("possessive_suffixes", &self.possessive_suffixes),
            ("feminine_suffix", &self.feminine_suffix),
            ("noun_plural_suffixes", &self.noun_plural_suffixes),
        ]
    }

    pub fn validate(&self) -> Result<(), InventoryError> {
        for (slot, affixes) in self.slots() {
            if let Some(bad) = affixes
                .iter()
                .find(|a| a.is_empty() || a.chars().any(|c| c.is_uppercase()))
            {
                return Err(InventoryError::BadAffix {
                    slot,
                    affix: bad.clone(),
                });
            }
        }
        if let Some(p) = self.cod_pronouns.intersection(&self.coi_pronouns).next() {
            return Err(InventoryError::ObjectOverlap(p.clone()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_inventory_is_valid() {
        let inv = AffixInventory::algerian(false);
        inv.validate().unwrap();
        assert!(inv.cod_pronouns.is_disjoint(&inv.coi_pronouns));
        assert!(inv.noun_plural_suffixes.is_empty());
        assert_eq!(AffixInventory::algerian(true).noun_plural_suffixes.len(), 2);
    }

    #[test]
    fn rejects_overlapping_objects() {
        let mut inv = AffixInventory::algerian(false);
        inv.coi_pronouns.insert("ha".into());
        assert_eq!(inv.validate(), Err(InventoryError::ObjectOverlap("ha".into())));
    }

    #[test]
    fn rejects_empty_or_uppercase_affix() {
        let mut inv = AffixInventory::algerian(false);
        inv.neg_close.insert(String::new());
        assert!(matches!(inv.validate(), Err(InventoryError::BadAffix { slot: "neg_close", .. })));

        let mut inv = AffixInventory::algerian(false);
        inv.subject_prefixes.insert("N".into());
        assert!(inv.validate().is_err());
    }
}
