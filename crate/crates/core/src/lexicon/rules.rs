use std::collections::HashSet;

use thiserror::Error;

use super::{is_valid_stem, LexiconEntry};

/// Default maximum number of spellings generated per entry.
pub const DEFAULT_VARIANT_CAP: usize = 64;

/// Stems of at most this many characters skip vowel classes unless
/// [`RuleSet::short_stem_vowel_expansion`] is set.
pub const SHORT_STEM_LEN: usize = 3;

/// A class of mutually substitutable graphemes, e.g. `{q, k, 9}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhonoRule {
    pub class_id: String,
    pub variants: Vec<String>,
    pub enabled: bool,
}

impl PhonoRule {
    /// Builds an enabled rule. Panics if the variant list is invalid; use
    /// [`parse_rules`] for untrusted input.
    pub fn new(class_id: &str, variants: &[&str]) -> Self {
        let rule = PhonoRule {
            class_id: class_id.to_string(),
            variants: variants.iter().map(|v| v.to_string()).collect(),
            enabled: true,
        };
        if let Err(msg) = rule.check() {
            panic!("invalid rule {class_id}: {msg}");
        }
        rule
    }

    /// Vowel classes (`{a,e}`, `{o,ou}`) are gated on stem length.
    pub fn is_vowel_class(&self) -> bool {
        self.variants
            .iter()
            .all(|v| v.chars().all(|c| matches!(c, 'a' | 'e' | 'i' | 'o' | 'u')))
    }

    fn check(&self) -> Result<(), String> {
        if self.variants.len() < 2 {
            return Err("a class needs at least two variants".into());
        }
        let mut seen = HashSet::new();
        for v in &self.variants {
            if !is_valid_stem(v) {
                return Err(format!("invalid grapheme {v:?}"));
            }
            if !seen.insert(v) {
                return Err(format!("grapheme {v:?} listed twice"));
            }
        }
        Ok(())
    }
}

/// Phonological rule classes plus the options that control expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleSet {
    pub rules: Vec<PhonoRule>,
    /// Multigraphs that never vary but still segment as one unit (`kh`, `gh`),
    /// so their letters are not rewritten on their own.
    pub stable_units: Vec<String>,
    pub short_stem_vowel_expansion: bool,
}

impl Default for RuleSet {
    fn default() -> Self {
        RuleSet {
            rules: vec![
                PhonoRule::new("q", &["q", "k", "9"]),
                PhonoRule::new("h", &["h", "7"]),
                PhonoRule::new("ch", &["ch", "sh"]),
                PhonoRule::new("o", &["o", "ou"]),
                PhonoRule::new("a", &["a", "e"]),
                PhonoRule::new("ain", &["3", "aa"]),
                PhonoRule::new("j", &["j", "dj"]),
                PhonoRule::new("w", &["w", "oua"]),
            ],
            stable_units: vec!["gh".into(), "kh".into(), "y".into()],
            short_stem_vowel_expansion: false,
        }
    }
}

impl RuleSet {
    pub fn new(rules: Vec<PhonoRule>) -> Self {
        RuleSet {
            rules,
            stable_units: Vec::new(),
            short_stem_vowel_expansion: false,
        }
    }

    pub fn with_short_stem_vowel_expansion(mut self, on: bool) -> Self {
        self.short_stem_vowel_expansion = on;
        self
    }

    /// Splits `stem` into grapheme units by greedy longest match over every
    /// rule variant and stable unit; anything else is a single character.
    /// Each unit carries the index of the rule it belongs to, if any.
    pub fn segment<'s>(&self, stem: &'s str) -> Vec<(&'s str, Option<usize>)> {
        let mut units = Vec::new();
        let mut rest = stem;
        while let Some(first) = rest.chars().next() {
            let mut best: Option<(usize, Option<usize>)> = None;
            for (i, rule) in self.rules.iter().enumerate() {
                for v in &rule.variants {
                    if rest.starts_with(v.as_str()) && best.is_none_or(|(len, _)| v.len() > len) {
                        best = Some((v.len(), Some(i)));
                    }
                }
            }
            for u in &self.stable_units {
                if rest.starts_with(u.as_str()) && best.is_none_or(|(len, _)| u.len() > len) {
                    best = Some((u.len(), None));
                }
            }
            let (len, class) = best.unwrap_or((first.len_utf8(), None));
            units.push((&rest[..len], class));
            rest = &rest[len..];
        }
        units
    }

    fn rule_applies(&self, rule: &PhonoRule, stem: &str) -> bool {
        rule.enabled
            && (self.short_stem_vowel_expansion
                || !rule.is_vowel_class()
                || stem.chars().count() > SHORT_STEM_LEN)
    }
}

/// Variant spellings of one entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansion {
    pub variants: Vec<String>,
    /// Set when the cap cut the variant list short.
    pub truncated: bool,
}

/// Expands an entry into its phonological spelling variants.
///
/// Each unit of the segmented stem that belongs to an applicable rule offers
/// that rule's whole variant set; the result is the deduplicated cross
/// product, enumerated in lexicographic order of choice vectors (rule order
/// within a class, last unit varying fastest). Spellings that would segment
/// differently (`s7i7` → `shih`, `sma3` → `smaaa`) are left out. When more
/// than `cap` distinct spellings exist the list is truncated, but the
/// original stem is always kept.
pub fn expand_entry_variants(entry: &LexiconEntry, rules: &RuleSet, cap: usize) -> Expansion {
    assert!(cap >= 1, "variant cap must be at least 1");
    let stem = entry.stem.as_str();

    let choices: Vec<Vec<&str>> = rules
        .segment(stem)
        .into_iter()
        .map(|(unit, class)| match class {
            Some(i) if rules.rule_applies(&rules.rules[i], stem) => {
                rules.rules[i].variants.iter().map(String::as_str).collect()
            }
            _ => vec![unit],
        })
        .collect();

    let mut odometer = vec![0usize; choices.len()];
    let mut seen = HashSet::new();
    let mut variants = Vec::new();
    let mut budget = cap - 1; // one slot is reserved for the original stem
    let mut has_original = false;
    let mut truncated = false;

    loop {
        let units: Vec<&str> = odometer
            .iter()
            .zip(&choices)
            .map(|(&i, options)| options[i])
            .collect();
        let spelled = units.concat();
        if seen.insert(spelled.clone()) && reads_back(rules, &spelled, &units) {
            if spelled == stem {
                has_original = true;
                variants.push(spelled);
            } else if budget > 0 {
                budget -= 1;
                variants.push(spelled);
            } else {
                truncated = true;
            }
        }
        if truncated && has_original {
            break;
        }
        if !advance(&mut odometer, &choices) {
            break;
        }
    }

    Expansion {
        variants,
        truncated,
    }
}

/// A spelling only counts if segmenting it again yields the units that built
/// it; `s`+`h` would otherwise read as the digraph `sh`.
fn reads_back(rules: &RuleSet, spelled: &str, units: &[&str]) -> bool {
    let again = rules.segment(spelled);
    again.len() == units.len() && again.iter().zip(units).all(|((u, _), v)| u == v)
}

fn advance(odometer: &mut [usize], choices: &[Vec<&str>]) -> bool {
    for pos in (0..odometer.len()).rev() {
        odometer[pos] += 1;
        if odometer[pos] < choices[pos].len() {
            return true;
        }
        odometer[pos] = 0;
    }
    false
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RuleError {
    #[error("rules line {line}: expected `class_id: v1|v2|...`")]
    Syntax { line: usize },
    #[error("rules line {line}: {message}")]
    Invalid { line: usize, message: String },
    #[error("rules line {line}: grapheme {grapheme:?} already belongs to class {class_id}")]
    Overlap {
        line: usize,
        grapheme: String,
        class_id: String,
    },
}

/// Parses a rule file: one `class_id: v1|v2|v3` per line, `#` starts a
/// comment. A leading `!` declares the class disabled. A single-member line
/// declares a stable unit.
pub fn parse_rules(text: &str) -> Result<RuleSet, RuleError> {
    let mut set = RuleSet::new(Vec::new());
    let mut owner: std::collections::HashMap<String, String> = Default::default();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (enabled, content) = match content.strip_prefix('!') {
            Some(rest) => (false, rest.trim_start()),
            None => (true, content),
        };
        let (class_id, members) = content.split_once(':').ok_or(RuleError::Syntax { line })?;
        let class_id = class_id.trim();
        if class_id.is_empty() {
            return Err(RuleError::Syntax { line });
        }
        let variants: Vec<String> = members.split('|').map(|m| m.trim().to_lowercase()).collect();

        let rule = PhonoRule {
            class_id: class_id.to_string(),
            variants,
            enabled,
        };
        if rule.variants.len() == 1 {
            if !is_valid_stem(&rule.variants[0]) {
                return Err(RuleError::Invalid {
                    line,
                    message: format!("invalid grapheme {:?}", rule.variants[0]),
                });
            }
        } else {
            rule.check()
                .map_err(|message| RuleError::Invalid { line, message })?;
        }

        for v in &rule.variants {
            if let Some(other) = owner.insert(v.clone(), class_id.to_string()) {
                return Err(RuleError::Overlap {
                    line,
                    grapheme: v.clone(),
                    class_id: other,
                });
            }
        }

        if rule.variants.len() == 1 {
            set.stable_units.extend(rule.variants);
        } else {
            set.rules.push(rule);
        }
    }
    Ok(set)
}
