//! Acceptance gate. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.
//!
//! cargo test -p darja-cli --test acceptance

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::Path;
use std::process::{Command, ExitCode};

use darja_core::corpus::parse_corpus;
use darja_core::lexicon::{
    build_variant_index, expand_entry_variants, parse_lexicon, LexiconEntry, PhonoRule, Pos, RuleSet, VariantIndex,
    DEFAULT_VARIANT_CAP,
};
use darja_core::morphology::{
    analyze_token, brute_force_segment, build_automaton, generate_form, paradigm, AffixInventory, Analysis,
    FormSlots, MorphAutomaton,
};
use darja_core::normalizer::{normalize_message, RawMessage, Token};
use darja_core::seed::{DESK_CORPUS, SEED_LEXICON};
use sha2::{Digest, Sha256};

type Check = Result<String, String>;

struct Env {
    index: VariantIndex,
    automaton: MorphAutomaton,
    inventory: AffixInventory,
}

impl Env {
    fn new() -> Self {
        let inventory = AffixInventory::algerian(false);
        Env {
            index: build_variant_index(parse_lexicon(SEED_LEXICON).unwrap(), &RuleSet::default(), DEFAULT_VARIANT_CAP),
            automaton: build_automaton(inventory.clone()).unwrap(),
            inventory,
        }
    }

    fn analyze(&self, word: &str) -> Vec<Analysis> {
        let tokens = normalize_message(&RawMessage::new(0, word));
        match tokens.as_slice() {
            [t] => analyze_token(t, &self.index, &self.automaton),
            _ => Vec::new(),
        }
    }

    fn entry(&self, stem: &str, pos: Pos) -> &LexiconEntry {
        self.index
            .entries()
            .iter()
            .find(|e| e.stem == stem && e.pos == pos)
            .unwrap()
    }

    fn forms(&self) -> Vec<(&LexiconEntry, FormSlots, String)> {
        let mut out = Vec::new();
        for e in self.index.entries() {
            for slots in paradigm(e, &self.inventory) {
                let form = generate_form(e, &slots, &self.inventory).unwrap();
                out.push((e, slots, form));
            }
        }
        out
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn worked_examples(env: &Env) -> Check {
    let a = env.analyze("mandirhach");
    let top = a.first().ok_or("mandirhach: no analysis")?;
    ensure(
        top.pos == Pos::Verb
            && top.stem == "dir"
            && top.subject_prefix.as_deref() == Some("n")
            && top.cod.as_deref() == Some("ha")
            && top.coi.is_none()
            && top.negation(),
        || format!("mandirhach top analysis {top:?}"),
    )?;
    let a = env.analyze("tro7");
    let top = a.first().ok_or("tro7: no analysis")?;
    ensure(
        top.canonical_stem == "roh" && top.subject_prefix.as_deref() == Some("t"),
        || format!("tro7 top analysis {top:?}"),
    )?;
    Ok("mandirhach = ma|n|dir|ha|ch, tro7 = t|ro7 (roh)".into())
}

fn table_forms(env: &Env) -> Check {
    let cases: [(&str, &str, FormSlots); 12] = [
        ("nhab", "hab", FormSlots::present("n")),
        ("yhab", "hab", FormSlots::present("y")),
        ("nhabou", "hab", FormSlots::present("n").plural("ou")),
        ("manhabch", "hab", FormSlots::present("n").negated()),
        ("manebkich", "ebki", FormSlots::present("n").negated()),
        ("yhabni", "hab", FormSlots::present("y").cod("ni")),
        ("yhabli", "hab", FormSlots::present("y").coi("li")),
        ("yhablek", "hab", FormSlots::present("y").coi("lek")),
        ("nebki", "ebki", FormSlots::present("n")),
        ("nebkou", "ebki", FormSlots::present("n").plural("ou")),
        ("nebkiw", "ebki", FormSlots::present("n").plural("iw")),
        ("manebkouch", "ebki", FormSlots::present("n").plural("ou").negated()),
    ];
    for (want, stem, slots) in &cases {
        let e = env.entry(stem, Pos::Verb);
        let got = generate_form(e, slots, &env.inventory).map_err(|err| format!("{want}: {err}"))?;
        ensure(got == *want, || format!("generated {got}, expected {want}"))?;
        let found = env
            .analyze(want)
            .iter()
            .any(|a| a.canonical_stem == *stem && a.slots() == *slots);
        ensure(found, || format!("{want}: generating slots not recovered"))?;
    }
    Ok(format!("{} forms generated and recovered", cases.len()))
}

fn roundtrip(env: &Env) -> Check {
    let mut sizes: BTreeMap<Pos, usize> = BTreeMap::new();
    for e in env.index.entries() {
        *sizes.entry(e.pos).or_default() += 1;
    }
    let minimum = [(Pos::Verb, 30), (Pos::Noun, 10), (Pos::Adjective, 10), (Pos::Particle, 10)];
    for (pos, min) in minimum {
        let n = sizes.get(&pos).copied().unwrap_or(0);
        ensure(n >= min, || format!("seed has {n} {pos} entries, need {min}"))?;
    }
    let forms = env.forms();
    ensure(forms.len() >= 1000, || format!("only {} forms", forms.len()))?;
    let mut misses = Vec::new();
    for (e, slots, form) in &forms {
        let ok = env
            .analyze(form)
            .iter()
            .any(|a| a.canonical_stem == e.stem && a.pos == e.pos && a.slots() == *slots);
        if !ok {
            misses.push(form.clone());
        }
    }
    ensure(misses.is_empty(), || {
        format!("{}/{} forms missed, e.g. {:?}", misses.len(), forms.len(), &misses[..misses.len().min(5)])
    })?;
    Ok(format!("{}/{} forms", forms.len(), forms.len()))
}

/// The unranked set from `analyze_token` must equal the brute-force set for
/// the candidate it settled on, and no earlier candidate may have any
/// brute-force reading.
fn agree(env: &Env, token: &Token) -> Result<(), String> {
    let fast: BTreeSet<Analysis> = analyze_token(token, &env.index, &env.automaton).into_iter().collect();
    for candidate in &token.candidates {
        let slow: BTreeSet<Analysis> = brute_force_segment(candidate, &env.index, &env.inventory)
            .into_iter()
            .map(|mut a| {
                a.surface = token.surface.clone();
                a.exaggerated = token.exaggerated;
                a
            })
            .collect();
        if !slow.is_empty() || fast.iter().any(|a| &a.normalized == candidate) {
            return ensure(fast == slow, || format!("{}: {} vs {} analyses", candidate, fast.len(), slow.len()));
        }
    }
    ensure(fast.is_empty(), || format!("{}: oracle found nothing", token.surface))
}

fn oracle_equivalence(env: &Env) -> Check {
    let mut tokens: Vec<Token> = parse_corpus(DESK_CORPUS).iter().flat_map(normalize_message).collect();
    let desk = tokens.len();
    tokens.extend(
        env.forms()
            .into_iter()
            .flat_map(|(_, _, form)| normalize_message(&RawMessage::new(0, form))),
    );
    for t in &tokens {
        agree(env, t)?;
    }
    Ok(format!("{} tokens ({desk} desk + {} generated)", tokens.len(), tokens.len() - desk))
}

fn variant_expansion() -> Check {
    let rules = RuleSet::new(vec![PhonoRule::new("o", &["o", "ou"]), PhonoRule::new("q", &["q", "k", "9"])]);
    let got: BTreeSet<String> = expand_entry_variants(&LexiconEntry::new("oq3od", Pos::Verb, ""), &rules, DEFAULT_VARIANT_CAP)
        .variants
        .into_iter()
        .collect();
    let mut product = BTreeSet::new();
    for a in ["o", "ou"] {
        for b in ["q", "k", "9"] {
            for c in ["o", "ou"] {
                product.insert(format!("{a}{b}3{c}d"));
            }
        }
    }
    ensure(got == product, || format!("got {got:?}"))?;
    let listed = [
        "oq3oud", "ok3od", "ok3oud", "ouq3od", "ouq3oud", "ouk3od", "ouk3oud", "o93od", "o93oud",
    ];
    for f in listed {
        ensure(got.contains(f), || format!("missing listed form {f}"))?;
    }
    Ok(format!("{} forms, all {} listed forms present", got.len(), listed.len()))
}

fn exaggeration() -> Check {
    let tokens = normalize_message(&RawMessage::new(0, "bezzzzzaf sahbiii khoya"));
    let got: Vec<(Vec<&str>, bool)> = tokens
        .iter()
        .map(|t| (t.candidates.iter().map(String::as_str).collect(), t.exaggerated))
        .collect();
    let want = vec![
        (vec!["bezzaf", "bezaf"], true),
        (vec!["sahbii", "sahbi"], true),
        (vec!["khoya"], false),
    ];
    ensure(got == want, || format!("got {got:?}"))?;
    Ok("bezzzzzaf, sahbiii collapsed; khoya untouched".into())
}

fn darja(args: &[&str]) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_darja"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || String::from_utf8_lossy(&out.stderr).into_owned())?;
    Ok(String::from_utf8_lossy(&out.stdout).into_owned())
}

fn digest_dir(dir: &Path) -> Result<BTreeMap<String, String>, String> {
    let mut out = BTreeMap::new();
    for entry in fs::read_dir(dir).map_err(|e| e.to_string())? {
        let path = entry.map_err(|e| e.to_string())?.path();
        let bytes = fs::read(&path).map_err(|e| e.to_string())?;
        let name = path.file_name().unwrap().to_string_lossy().into_owned();
        let hex: String = Sha256::digest(&bytes).iter().map(|b| format!("{b:02x}")).collect();
        out.insert(name, hex);
    }
    Ok(out)
}

fn determinism(tmp: &Path) -> Check {
    let corpus = tmp.join("desk.txt");
    fs::write(&corpus, DESK_CORPUS).map_err(|e| e.to_string())?;
    let mut runs = Vec::new();
    for run in ["run1", "run2"] {
        let out = tmp.join(run);
        darja(&["analyze", "-v", "--corpus", corpus.to_str().unwrap(), "--out", out.to_str().unwrap()])?;
        runs.push(digest_dir(&out)?);
    }
    ensure(runs[0].len() >= 5, || format!("only {} output files", runs[0].len()))?;
    ensure(runs[0] == runs[1], || format!("{:?} vs {:?}", runs[0], runs[1]))?;
    Ok(format!("{} files, identical SHA-256", runs[0].len()))
}

fn frequency(tmp: &Path) -> Check {
    let corpus = tmp.join("five.txt");
    let messages = [
        "Sahit khoya, sahit!",
        "ana rani hna",
        "bezzzzaf bezzaf",
        "wach rak? rak mli7",
        "ana 123 ana",
    ];
    fs::write(&corpus, messages.join("\n")).map_err(|e| e.to_string())?;
    let out = tmp.join("freq");
    let stdout = darja(&["freq", "--corpus", corpus.to_str().unwrap(), "--out", out.to_str().unwrap()])?;
    // counted by hand from the five messages above
    let tally = "term,count\n\
                 ana,3\n\
                 bezzaf,2\n\
                 rak,2\n\
                 sahit,2\n\
                 hna,1\n\
                 khoya,1\n\
                 mli7,1\n\
                 rani,1\n\
                 wach,1\n";
    let got = fs::read_to_string(out.join("frequencies.csv")).map_err(|e| e.to_string())?;
    ensure(got == tally, || format!("got {got:?}"))?;
    ensure(stdout.contains("tokens: 14"), || format!("summary {stdout:?}"))?;
    Ok("9 terms, 14 tokens".into())
}

fn main() -> ExitCode {
    let env = Env::new();
    let tmp = tempfile::tempdir().expect("temp dir");
    let results: [(&str, Check); 8] = [
        ("worked example", worked_examples(&env)),
        ("verb paradigm table", table_forms(&env)),
        ("roundtrip", roundtrip(&env)),
        ("oracle equivalence", oracle_equivalence(&env)),
        ("variant expansion", variant_expansion()),
        ("exaggeration", exaggeration()),
        ("determinism", determinism(tmp.path())),
        ("frequency model", frequency(tmp.path())),
    ];
    let mut failed = 0;
    for (i, (name, result)) in results.iter().enumerate() {
        match result {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("{}/{} criteria passed", results.len() - failed, results.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
