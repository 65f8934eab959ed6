use std::cmp::Ordering;

use super::automaton::{Label, MorphAutomaton, StateId};
use super::{elides, Analysis, Mood, ELIDABLE_VOWEL};
use crate::lexicon::{EntryId, Pos, VariantIndex};
use crate::normalizer::Token;

#[derive(Debug, Clone, Copy)]
struct Morph<'a> {
    label: Label,
    text: &'a str,
    entry: Option<EntryId>,
    elided: bool,
}

struct Walker<'a> {
    candidate: &'a str,
    boundaries: Vec<usize>,
    index: &'a VariantIndex,
    automaton: &'a MorphAutomaton,
    out: Vec<Analysis>,
}

fn mood_of(path: &[Morph<'_>]) -> Mood {
    let verb = path
        .iter()
        .any(|m| matches!(m.label, Label::Stem(Pos::Verb)));
    if !verb {
        Mood::NotApplicable
    } else if path.iter().any(|m| m.label == Label::SubjectPrefix) {
        Mood::IndicativePresent
    } else {
        Mood::Imperative
    }
}

impl<'a> Walker<'a> {
    fn walk(&mut self, state: StateId, pos: usize, path: &mut Vec<Morph<'a>>) {
        let elision_pending = path.last().is_some_and(|m| m.elided);
        let rest = &self.candidate[pos..];

        if rest.is_empty() && self.automaton.is_final(state) && !elision_pending {
            self.out.push(self.build(path));
        }

        for (label, next) in self.automaton.transitions(state).collect::<Vec<_>>() {
            if elision_pending
                && !matches!(label, Label::PluralSuffix | Label::ImperativeSuffix)
            {
                continue;
            }
            match label {
                Label::Stem(want) => self.stems(want, next, pos, path),
                Label::Irregular => {
                    if pos != 0 {
                        continue;
                    }
                    for &id in self.index.lookup_ids(rest) {
                        if self.index.entry(id).irregular {
                            path.push(Morph { label, text: rest, entry: Some(id), elided: false });
                            self.walk(next, self.candidate.len(), path);
                            path.pop();
                        }
                    }
                }
                _ => {
                    let affixes = self.automaton.affixes(label).expect("affix label");
                    let mood = mood_of(path);
                    for affix in affixes {
                        if !rest.starts_with(affix.as_str()) {
                            continue;
                        }
                        if elision_pending && !elides(affix, mood) {
                            continue;
                        }
                        let text = &self.candidate[pos..pos + affix.len()];
                        path.push(Morph { label, text, entry: None, elided: false });
                        self.walk(next, pos + affix.len(), path);
                        path.pop();
                    }
                }
            }
        }
    }

    fn stems(&mut self, want: Pos, next: StateId, pos: usize, path: &mut Vec<Morph<'a>>) {
        let label = Label::Stem(want);
        let ends: Vec<usize> = self.boundaries.iter().copied().filter(|&e| e > pos).collect();
        for end in ends {
            let text = &self.candidate[pos..end];
            for &id in self.index.lookup_ids(text) {
                let e = self.index.entry(id);
                if e.pos == want && !e.irregular {
                    path.push(Morph { label, text, entry: Some(id), elided: false });
                    self.walk(next, end, path);
                    path.pop();
                }
            }
            if want == Pos::Verb && end < self.candidate.len() {
                let restored = format!("{text}{ELIDABLE_VOWEL}");
                for &id in self.index.lookup_ids(&restored) {
                    let e = self.index.entry(id);
                    if e.pos == want && !e.irregular {
                        path.push(Morph { label, text, entry: Some(id), elided: true });
                        self.walk(next, end, path);
                        path.pop();
                    }
                }
            }
        }
    }

    fn build(&self, path: &[Morph<'_>]) -> Analysis {
        let stem = path
            .iter()
            .find(|m| m.entry.is_some())
            .expect("accepted path has a stem");
        let entry = self.index.entry(stem.entry.unwrap());
        let mut a = Analysis::bare(
            self.candidate,
            entry.pos,
            stem.text,
            &entry.stem,
            &entry.gloss_fr,
        );
        a.elided = stem.elided;
        a.irregular = entry.irregular;
        a.mood = if entry.irregular {
            Mood::NotApplicable
        } else {
            mood_of(path)
        };
        for m in path {
            let text = Some(m.text.to_string());
            match m.label {
                Label::NegOpen => a.neg_open = text,
                Label::SubjectPrefix => a.subject_prefix = text,
                Label::ImperativeSuffix | Label::PluralSuffix | Label::NounPlural => {
                    a.plural_suffix = text
                }
                Label::Cod => a.cod = text,
                Label::Coi => a.coi = text,
                Label::NegClose => a.neg_close = text,
                Label::Possessive => a.possessive = text,
                Label::Feminine => a.feminine = text,
                Label::Stem(_) | Label::Irregular => {}
            }
        }
        a
    }
}

/// Every accepted segmentation of one normalized candidate, unranked.
/// `surface` and `normalized` are both set to the candidate.
pub fn analyze_candidate(
    candidate: &str,
    index: &VariantIndex,
    automaton: &MorphAutomaton,
) -> Vec<Analysis> {
    let mut walker = Walker {
        candidate,
        boundaries: candidate
            .char_indices()
            .map(|(i, _)| i)
            .skip(1)
            .chain(std::iter::once(candidate.len()))
            .collect(),
        index,
        automaton,
        out: Vec::new(),
    };
    if !candidate.is_empty() {
        walker.walk(automaton.start(), 0, &mut Vec::new());
    }
    let mut out = walker.out;
    out.sort();
    out.dedup();
    out
}

/// Analyzes a normalized token: candidates are tried in order and the first
/// one with any analysis wins. An empty result means the token is unknown.
pub fn analyze_token(token: &Token, index: &VariantIndex, automaton: &MorphAutomaton) -> Vec<Analysis> {
    for candidate in &token.candidates {
        let mut found = analyze_candidate(candidate, index, automaton);
        if found.is_empty() {
            continue;
        }
        for a in &mut found {
            a.surface = token.surface.clone();
            a.exaggerated = token.exaggerated;
        }
        return rank_analyses(found);
    }
    Vec::new()
}

fn pos_priority(pos: Pos) -> u8 {
    match pos {
        Pos::Verb => 0,
        Pos::Noun => 1,
        Pos::Adjective => 2,
        Pos::Particle => 3,
    }
}

fn rank_cmp(a: &Analysis, b: &Analysis) -> Ordering {
    b.is_whole_token()
        .cmp(&a.is_whole_token())
        .then_with(|| b.stem.chars().count().cmp(&a.stem.chars().count()))
        .then_with(|| a.affix_count().cmp(&b.affix_count()))
        .then_with(|| b.is_canonical_spelling().cmp(&a.is_canonical_spelling()))
        .then_with(|| pos_priority(a.pos).cmp(&pos_priority(b.pos)))
        .then_with(|| a.canonical_stem.cmp(&b.canonical_stem))
        .then_with(|| a.cmp(b))
}

/// Orders analyses best first: whole-token matches, then longer stems, then
/// fewer affixes, then exact lexicon spellings over variants, then verb >
/// noun > adjective > particle, then canonical stem. Remaining ties fall
/// back to field order, so the result is a total order.
pub fn rank_analyses(mut analyses: Vec<Analysis>) -> Vec<Analysis> {
    analyses.sort_by(rank_cmp);
    analyses
}
