use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};

use super::{AffixInventory, InventoryError};
use crate::lexicon::Pos;

pub type StateId = usize;

/// Transition labels: one per morphotactic slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    NegOpen,
    SubjectPrefix,
    Stem(Pos),
    /// Lexicalized full form, whole token only.
    Irregular,
    ImperativeSuffix,
    PluralSuffix,
    Cod,
    Coi,
    NegClose,
    NounPlural,
    Possessive,
    Feminine,
}

impl Label {
    pub fn as_str(self) -> &'static str {
        match self {
            Label::NegOpen => "neg_open",
            Label::SubjectPrefix => "subject_prefix",
            Label::Stem(Pos::Verb) => "stem:verb",
            Label::Stem(Pos::Noun) => "stem:noun",
            Label::Stem(Pos::Adjective) => "stem:adjective",
            Label::Stem(Pos::Particle) => "stem:particle",
            Label::Irregular => "irregular",
            Label::ImperativeSuffix => "imperative_suffix",
            Label::PluralSuffix => "plural_suffix",
            Label::Cod => "cod",
            Label::Coi => "coi",
            Label::NegClose => "neg_close",
            Label::NounPlural => "noun_plural",
            Label::Possessive => "possessive",
            Label::Feminine => "feminine",
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Slot-level deterministic automaton: each `(state, label)` pair has at most
/// one successor. Affix labels read a member of the matching inventory set;
/// stem labels read a lexicon stem of that part of speech.
#[derive(Debug, Clone)]
pub struct MorphAutomaton {
    inventory: AffixInventory,
    state_names: Vec<&'static str>,
    table: BTreeMap<(StateId, Label), StateId>,
    finals: BTreeSet<StateId>,
}

pub const START: StateId = 0;

struct Builder {
    names: Vec<&'static str>,
    finals: BTreeSet<StateId>,
    table: BTreeMap<(StateId, Label), StateId>,
}

impl Builder {
    fn state(&mut self, name: &'static str, accepting: bool) -> StateId {
        let id = self.names.len();
        self.names.push(name);
        if accepting {
            self.finals.insert(id);
        }
        id
    }

    fn edge(&mut self, from: StateId, label: Label, to: StateId, live: bool) {
        if live {
            self.table.insert((from, label), to);
        }
    }
}

/// Builds the transition table for `inventory`. Slots whose affix set is
/// empty get no transitions.
pub fn build_automaton(inventory: AffixInventory) -> Result<MorphAutomaton, InventoryError> {
    inventory.validate()?;
    let inv = &inventory;
    let mut b = Builder {
        names: Vec::new(),
        finals: BTreeSet::new(),
        table: BTreeMap::new(),
    };

    let start = b.state("start", false);
    debug_assert_eq!(start, START);

    // verbs
    let neg = b.state("neg_open", false);
    let subj = b.state("subject", false);
    let neg_subj = b.state("neg_subject", false);
    let imp_stem = b.state("imperative_stem", true);
    let stem = b.state("verb_stem", true);
    let neg_stem = b.state("neg_verb_stem", false);
    let imp_suffix = b.state("imperative_suffix", true);
    let plural = b.state("plural", true);
    let neg_plural = b.state("neg_plural", false);
    let imp_object = b.state("imperative_object", true);
    let object = b.state("object", true);
    let neg_object = b.state("neg_object", false);
    let closed = b.state("neg_closed", true);
    // nouns, adjectives, particles, irregular forms
    let noun = b.state("noun_stem", true);
    let noun_plural = b.state("noun_plural", true);
    let possessive = b.state("possessive", true);
    let adj = b.state("adjective_stem", true);
    let feminine = b.state("feminine", true);
    let particle = b.state("particle", true);
    let irregular = b.state("irregular", true);

    let has = |s: &BTreeSet<String>| !s.is_empty();
    let objects = [
        (Label::Cod, has(&inv.cod_pronouns)),
        (Label::Coi, has(&inv.coi_pronouns)),
    ];

    b.edge(start, Label::NegOpen, neg, has(&inv.neg_open));
    b.edge(start, Label::SubjectPrefix, subj, has(&inv.subject_prefixes));
    b.edge(neg, Label::SubjectPrefix, neg_subj, has(&inv.subject_prefixes));

    b.edge(start, Label::Stem(Pos::Verb), imp_stem, true);
    b.edge(subj, Label::Stem(Pos::Verb), stem, true);
    b.edge(neg_subj, Label::Stem(Pos::Verb), neg_stem, true);

    b.edge(imp_stem, Label::ImperativeSuffix, imp_suffix, has(&inv.imperative_suffixes));
    b.edge(stem, Label::PluralSuffix, plural, has(&inv.plural_suffixes));
    b.edge(neg_stem, Label::PluralSuffix, neg_plural, has(&inv.plural_suffixes));

    for (label, live) in objects {
        for from in [imp_stem, imp_suffix] {
            b.edge(from, label, imp_object, live);
        }
        for from in [stem, plural] {
            b.edge(from, label, object, live);
        }
        for from in [neg_stem, neg_plural] {
            b.edge(from, label, neg_object, live);
        }
    }
    for from in [neg_stem, neg_plural, neg_object] {
        b.edge(from, Label::NegClose, closed, has(&inv.neg_close));
    }

    b.edge(start, Label::Stem(Pos::Noun), noun, true);
    b.edge(noun, Label::NounPlural, noun_plural, has(&inv.noun_plural_suffixes));
    for from in [noun, noun_plural] {
        b.edge(from, Label::Possessive, possessive, has(&inv.possessive_suffixes));
    }

    b.edge(start, Label::Stem(Pos::Adjective), adj, true);
    b.edge(adj, Label::Feminine, feminine, has(&inv.feminine_suffix));

    b.edge(start, Label::Stem(Pos::Particle), particle, true);
    b.edge(start, Label::Irregular, irregular, true);

    Ok(MorphAutomaton {
        inventory,
        state_names: b.names,
        table: b.table,
        finals: b.finals,
    })
}

impl MorphAutomaton {
    pub fn inventory(&self) -> &AffixInventory {
        &self.inventory
    }

    pub fn start(&self) -> StateId {
        START
    }

    pub fn state_count(&self) -> usize {
        self.state_names.len()
    }

    pub fn state_name(&self, state: StateId) -> &'static str {
        self.state_names[state]
    }

    pub fn is_final(&self, state: StateId) -> bool {
        self.finals.contains(&state)
    }

    pub fn finals(&self) -> impl Iterator<Item = StateId> + '_ {
        self.finals.iter().copied()
    }

    pub fn next(&self, state: StateId, label: Label) -> Option<StateId> {
        self.table.get(&(state, label)).copied()
    }

    /// Outgoing transitions of `state`, ordered by label.
    pub fn transitions(&self, state: StateId) -> impl Iterator<Item = (Label, StateId)> + '_ {
        self.table
            .range((state, Label::NegOpen)..)
            .take_while(move |((s, _), _)| *s == state)
            .map(|(&(_, label), &to)| (label, to))
    }

    /// Affixes a label may read; `None` for stem labels.
    pub fn affixes(&self, label: Label) -> Option<&BTreeSet<String>> {
        let inv = &self.inventory;
        Some(match label {
            Label::NegOpen => &inv.neg_open,
            Label::SubjectPrefix => &inv.subject_prefixes,
            Label::ImperativeSuffix => &inv.imperative_suffixes,
            Label::PluralSuffix => &inv.plural_suffixes,
            Label::Cod => &inv.cod_pronouns,
            Label::Coi => &inv.coi_pronouns,
            Label::NegClose => &inv.neg_close,
            Label::NounPlural => &inv.noun_plural_suffixes,
            Label::Possessive => &inv.possessive_suffixes,
            Label::Feminine => &inv.feminine_suffix,
            Label::Stem(_) | Label::Irregular => return None,
        })
    }

    /// Runs a label sequence from the start state.
    pub fn run(&self, labels: &[Label]) -> Option<StateId> {
        labels
            .iter()
            .try_fold(self.start(), |state, &label| self.next(state, label))
    }

    pub fn accepts(&self, labels: &[Label]) -> bool {
        self.run(labels).is_some_and(|s| self.is_final(s))
    }

    /// Text dump: one `state,label,next_state` line per transition, then
    /// `final:` with the accepting states.
    pub fn dump_table(&self) -> String {
        let mut out = String::new();
        for (&(from, label), &to) in &self.table {
            let _ = writeln!(out, "{from},{label},{to}");
        }
        let finals: Vec<String> = self.finals.iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "final:{}", finals.join(","));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Label::*;

    fn automaton() -> MorphAutomaton {
        build_automaton(AffixInventory::algerian(false)).unwrap()
    }

    #[test]
    fn accepts_negated_verb_with_object() {
        // ma | n | dir | ha | ch
        let a = automaton();
        assert!(a.accepts(&[NegOpen, SubjectPrefix, Stem(Pos::Verb), Cod, NegClose]));
    }

    #[test]
    fn circumfix_must_pair() {
        let a = automaton();
        // opened but not closed
        assert!(!a.accepts(&[NegOpen, SubjectPrefix, Stem(Pos::Verb), Cod]));
        // closed without opening
        assert!(!a.accepts(&[SubjectPrefix, Stem(Pos::Verb), NegClose]));
        assert!(!a.accepts(&[Stem(Pos::Verb), NegClose]));
        // negation needs a subject prefix
        assert!(!a.accepts(&[NegOpen, Stem(Pos::Verb), NegClose]));
    }

    #[test]
    fn one_object_at_most() {
        let a = automaton();
        assert!(a.accepts(&[SubjectPrefix, Stem(Pos::Verb), PluralSuffix, Coi]));
        assert!(!a.accepts(&[SubjectPrefix, Stem(Pos::Verb), Cod, Coi]));
        assert!(!a.accepts(&[SubjectPrefix, Stem(Pos::Verb), Cod, Cod]));
    }

    #[test]
    fn imperative_path_uses_imperative_suffixes() {
        let a = automaton();
        assert!(a.accepts(&[Stem(Pos::Verb), ImperativeSuffix]));
        assert!(!a.accepts(&[Stem(Pos::Verb), PluralSuffix]));
        assert!(!a.accepts(&[SubjectPrefix, Stem(Pos::Verb), ImperativeSuffix]));
    }

    #[test]
    fn nominal_paths() {
        let a = automaton();
        assert!(a.accepts(&[Stem(Pos::Noun), Possessive]));
        assert!(a.accepts(&[Stem(Pos::Adjective), Feminine]));
        assert!(!a.accepts(&[Stem(Pos::Adjective), Possessive]));
        assert!(a.accepts(&[Stem(Pos::Particle)]));
        assert!(!a.accepts(&[Stem(Pos::Particle), Possessive]));
        // noun plurals are off by default
        assert!(!a.accepts(&[Stem(Pos::Noun), NounPlural]));
        let with_plural = build_automaton(AffixInventory::algerian(true)).unwrap();
        assert!(with_plural.accepts(&[Stem(Pos::Noun), NounPlural, Possessive]));
    }

    #[test]
    fn empty_inventory_accepts_bare_stems_only() {
        let a = build_automaton(AffixInventory::default()).unwrap();
        for pos in Pos::ALL {
            assert!(a.accepts(&[Stem(pos)]));
        }
        assert!(!a.accepts(&[SubjectPrefix, Stem(Pos::Verb)]));
        assert!(!a.accepts(&[Stem(Pos::Noun), Possessive]));
    }

    #[test]
    fn invalid_inventory_is_rejected() {
        let mut inv = AffixInventory::algerian(false);
        inv.coi_pronouns.insert("ni".into());
        assert!(build_automaton(inv).is_err());
    }

    #[test]
    fn table_dump_format() {
        let dump = automaton().dump_table();
        assert!(dump.starts_with("0,neg_open,1\n0,subject_prefix,2\n"), "{dump}");
        let last = dump.lines().last().unwrap();
        assert!(last.starts_with("final:"));
        for line in dump.lines().filter(|l| !l.starts_with("final:")) {
            let cols: Vec<_> = line.split(',').collect();
            assert_eq!(cols.len(), 3, "{line}");
        }
    }

    #[test]
    fn transitions_are_grouped_by_state() {
        let a = automaton();
        let from_start: Vec<_> = a.transitions(START).map(|(l, _)| l).collect();
        assert!(from_start.contains(&NegOpen));
        assert!(from_start.contains(&Irregular));
        assert!(a.transitions(a.state_count() - 1).next().is_none());
    }
}
