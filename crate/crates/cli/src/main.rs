use std::fs;
use std::io::BufWriter;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use darja_core::corpus::{
    analyze_corpus, build_term_frequency_model, emit_label_tables, ingest_corpus, write_all_analyses,
};
use darja_core::lexicon::{
    build_variant_index, parse_lexicon, parse_lexicon_file, parse_rules, write_expanded_lexicon, LexiconError,
    RuleSet, VariantIndex, DEFAULT_VARIANT_CAP,
};
use darja_core::morphology::{build_automaton, AffixInventory};
use darja_core::seed::SEED_LEXICON;

/// Morphological analysis of Algerian Arabizi text.
#[derive(Parser)]
#[command(name = "darja", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand the lexicon into spelling variants.
    Expand {
        #[command(flatten)]
        lex: LexiconArgs,
        /// Output directory; receives expanded_lexicon.csv.
        #[arg(long)]
        out: PathBuf,
    },
    /// Count normalized terms in a corpus.
    Freq {
        #[arg(long)]
        corpus: PathBuf,
        /// Output directory; receives frequencies.csv.
        #[arg(long)]
        out: PathBuf,
    },
    /// Analyze a corpus and write label tables grouped by part of speech.
    Analyze {
        #[command(flatten)]
        lex: LexiconArgs,
        #[arg(long)]
        corpus: PathBuf,
        /// Output directory for the label tables.
        #[arg(long)]
        out: PathBuf,
        /// Accept the noun plural suffixes -in/-yn.
        #[arg(long)]
        noun_plural: bool,
        /// -v also writes every ranked analysis and the transition table.
        #[arg(short, long, action = clap::ArgAction::Count)]
        verbose: u8,
    },
}

#[derive(Args)]
struct LexiconArgs {
    /// Lexicon CSV (stem,pos,gloss_fr,polarity,irregular). Defaults to the bundled seed.
    #[arg(long)]
    lexicon: Option<PathBuf>,
    /// Phonological rule file, one `class: v1|v2` per line.
    #[arg(long)]
    rules: Option<PathBuf>,
    /// Maximum spellings per entry.
    #[arg(long, default_value_t = DEFAULT_VARIANT_CAP, value_parser = clap::value_parser!(usize))]
    cap: usize,
    /// Let vowel classes expand stems of three characters or fewer.
    #[arg(long)]
    short_stem_vowels: bool,
}

enum Failure {
    Lexicon(LexiconError),
    Other(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Other(e)
    }
}

fn require_file(path: &Path, what: &str) -> Result<()> {
    if !path.is_file() {
        bail!("{what} {} does not exist or is not a file", path.display());
    }
    Ok(())
}

fn prepare_out(dir: &Path) -> Result<()> {
    if dir.exists() && !dir.is_dir() {
        bail!("output path {} is not a directory", dir.display());
    }
    fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))
}

fn load_index(args: &LexiconArgs) -> Result<VariantIndex, Failure> {
    if args.cap == 0 {
        return Err(anyhow::anyhow!("--cap must be at least 1").into());
    }
    let rules = match &args.rules {
        Some(path) => {
            let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
            parse_rules(&text).with_context(|| path.display().to_string())?
        }
        None => RuleSet::default(),
    }
    .with_short_stem_vowel_expansion(args.short_stem_vowels);
    let entries = match &args.lexicon {
        Some(path) => parse_lexicon_file(path),
        None => parse_lexicon(SEED_LEXICON),
    }
    .map_err(Failure::Lexicon)?;
    Ok(build_variant_index(entries, &rules, args.cap))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Expand { lex, out } => {
            check_lexicon_paths(&lex)?;
            prepare_out(&out)?;
            let index = load_index(&lex)?;
            let path = out.join("expanded_lexicon.csv");
            let file = fs::File::create(&path).with_context(|| format!("cannot create {}", path.display()))?;
            write_expanded_lexicon(&index, BufWriter::new(file)).with_context(|| path.display().to_string())?;
            let stats = index.stats();
            println!("entries: {}", index.entries().len());
            println!("variants: {}", stats.total_variants());
            println!("distinct spellings: {}", index.len());
            println!("truncated: {}", stats.truncated_entries);
        }
        Command::Freq { corpus, out } => {
            require_file(&corpus, "corpus")?;
            prepare_out(&out)?;
            let messages = ingest_corpus(&corpus).map_err(anyhow::Error::from)?;
            let model = build_term_frequency_model(&messages);
            let path = out.join("frequencies.csv");
            let file = fs::File::create(&path).with_context(|| format!("cannot create {}", path.display()))?;
            model
                .write_csv(BufWriter::new(file))
                .with_context(|| path.display().to_string())?;
            println!("messages: {}", messages.len());
            println!("tokens: {}", model.total_tokens);
            println!("terms: {}", model.counts.len());
        }
        Command::Analyze {
            lex,
            corpus,
            out,
            noun_plural,
            verbose,
        } => {
            check_lexicon_paths(&lex)?;
            require_file(&corpus, "corpus")?;
            prepare_out(&out)?;
            let index = load_index(&lex)?;
            let automaton = build_automaton(AffixInventory::algerian(noun_plural)).map_err(anyhow::Error::from)?;
            let messages = ingest_corpus(&corpus).map_err(anyhow::Error::from)?;
            let table = analyze_corpus(&messages, &index, &automaton);
            emit_label_tables(&table, &out).map_err(anyhow::Error::from)?;
            if verbose > 0 {
                write_all_analyses(&table, out.join("all_analyses.csv")).map_err(anyhow::Error::from)?;
                let path = out.join("transition_table.txt");
                fs::write(&path, automaton.dump_table()).with_context(|| format!("cannot write {}", path.display()))?;
            }
            println!("messages: {}", messages.len());
            println!("tokens: {}", table.rows.len());
            for (group, count) in table.group_counts() {
                println!("{}: {count}", group.file_name().trim_end_matches(".csv"));
            }
        }
    }
    Ok(())
}

fn check_lexicon_paths(lex: &LexiconArgs) -> Result<()> {
    if let Some(p) = &lex.lexicon {
        require_file(p, "lexicon")?;
    }
    if let Some(p) = &lex.rules {
        require_file(p, "rules file")?;
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Lexicon(LexiconError::Rows { errors })) => {
            for e in &errors {
                eprintln!("error: {e}");
            }
            eprintln!("{} invalid lexicon rows", errors.len());
            ExitCode::FAILURE
        }
        Err(Failure::Lexicon(e)) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
        Err(Failure::Other(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
