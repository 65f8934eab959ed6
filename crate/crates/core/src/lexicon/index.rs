use std::collections::HashMap;
use std::io::Write;

use super::{expand_entry_variants, LexiconEntry, RuleSet};

/// Position of an entry in [`VariantIndex::entries`].
pub type EntryId = usize;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IndexStats {
    /// Number of variants generated for each entry, by entry id.
    pub variant_counts: Vec<usize>,
    /// Entries whose expansion hit the cap.
    pub truncated_entries: usize,
}

impl IndexStats {
    pub fn total_variants(&self) -> usize {
        self.variant_counts.iter().sum()
    }
}

/// Exact-match map from every spelling variant to the entries it spells.
///
/// Immutable once built; share it by reference across threads.
#[derive(Debug, Clone, Default)]
pub struct VariantIndex {
    entries: Vec<LexiconEntry>,
    map: HashMap<String, Vec<EntryId>>,
    stats: IndexStats,
}

/// Expands every entry and indexes each variant back to its entry.
/// Homographs accumulate; nothing is dropped.
pub fn build_variant_index(entries: Vec<LexiconEntry>, rules: &RuleSet, cap: usize) -> VariantIndex {
    let mut map: HashMap<String, Vec<EntryId>> = HashMap::new();
    let mut stats = IndexStats::default();

    for (id, entry) in entries.iter().enumerate() {
        let expansion = expand_entry_variants(entry, rules, cap);
        stats.variant_counts.push(expansion.variants.len());
        if expansion.truncated {
            stats.truncated_entries += 1;
        }
        for variant in expansion.variants {
            map.entry(variant).or_default().push(id);
        }
    }

    VariantIndex {
        entries,
        map,
        stats,
    }
}

impl VariantIndex {
    pub fn entries(&self) -> &[LexiconEntry] {
        &self.entries
    }

    pub fn entry(&self, id: EntryId) -> &LexiconEntry {
        &self.entries[id]
    }

    pub fn stats(&self) -> &IndexStats {
        &self.stats
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Number of distinct variant strings.
    pub fn len(&self) -> usize {
        self.map.len()
    }

    /// Ids of the entries spelled by `candidate`, in lexicon order.
    pub fn lookup_ids(&self, candidate: &str) -> &[EntryId] {
        self.map.get(candidate).map_or(&[], Vec::as_slice)
    }

    /// Entries spelled by `candidate`; empty on a miss.
    pub fn lookup_stem(&self, candidate: &str) -> Vec<&LexiconEntry> {
        self.lookup_ids(candidate)
            .iter()
            .map(|&id| &self.entries[id])
            .collect()
    }

    /// All `(variant, entry)` pairs sorted by variant, then stem, then pos.
    pub fn pairs(&self) -> Vec<(&str, &LexiconEntry)> {
        let mut pairs: Vec<_> = self
            .map
            .iter()
            .flat_map(|(v, ids)| ids.iter().map(move |&id| (v.as_str(), &self.entries[id])))
            .collect();
        pairs.sort_by(|a, b| {
            (a.0, &a.1.stem, a.1.pos).cmp(&(b.0, &b.1.stem, b.1.pos))
        });
        pairs
    }
}

/// Writes the expanded lexicon: header `variant,stem,pos,gloss_fr,polarity`,
/// one row per (variant, entry) pair.
pub fn write_expanded_lexicon<W: Write>(index: &VariantIndex, out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["variant", "stem", "pos", "gloss_fr", "polarity"])?;
    for (variant, e) in index.pairs() {
        w.write_record([variant, &e.stem, e.pos.as_str(), &e.gloss_fr, e.polarity.as_str()])?;
    }
    w.flush()?;
    Ok(())
}
