//! Batch command-line surface over the analyzer toolkit.
//!
//! Exit codes: 0 on success, 1 on input errors (usage, missing files,
//! version mismatches, malformed data), 2 on internal invariant failures.

use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use soranimorph::analyzer::{Analysis, AnalyzerHandle};
use soranimorph::eval;
use soranimorph::grammar::{build_grammar_sources, compile_sources, GrammarManifest};
use soranimorph::ingest::{parse_stem_lexicon, parse_verb_db};
use soranimorph::script;
use soranimorph::tags;

#[derive(Parser)]
#[command(name = "soranimorph", version, about = "Central Kurdish morphological analyzer")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compile grammar sources named by a manifest into a binary grammar.
    Compile(CompileArgs),
    /// Analyze words (one token per line) into analysis lines.
    Analyze(AnalyzeArgs),
    /// Generate surface forms from analysis lines (lemma TAB pos TAB
    /// feat;feat TAB std|nonstd).
    Generate(GenerateArgs),
    /// Score a gold standard file against the analyzer.
    EvalAccuracy(EvalAccuracyArgs),
    /// Run the coverage cascade over a frequency list.
    EvalCoverage(EvalCoverageArgs),
    /// Convert between the Arabic script and the Latin notation.
    Romanize(RomanizeArgs),
    /// Print grammar statistics.
    Inspect(InspectArgs),
}

#[derive(Args)]
struct CompileArgs {
    /// Manifest file listing the stem and verb sources.
    #[arg(long)]
    manifest: PathBuf,
    /// Output path for the binary grammar.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Compiled grammar file.
    #[arg(long)]
    grammar: PathBuf,
    /// Word list path, `-` for standard input.
    #[arg(long)]
    words: String,
    /// Include non-standard analyses.
    #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
    include_nonstandard: bool,
    /// Output format.
    #[arg(long, default_value = "tsv", value_parser = ["tsv", "jsonl"])]
    format: String,
    /// Maximum analyses per token (0 = unlimited).
    #[arg(long, default_value_t = 0)]
    limit: usize,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long)]
    grammar: PathBuf,
    /// Analysis lines path, `-` for standard input.
    #[arg(long)]
    words: String,
}

#[derive(Args)]
struct EvalAccuracyArgs {
    #[arg(long)]
    grammar: PathBuf,
    /// Gold file: token, left, right, lemma, pos, features, std|nonstd.
    #[arg(long)]
    gold: PathBuf,
}

#[derive(Args)]
struct EvalCoverageArgs {
    #[arg(long)]
    grammar: PathBuf,
    /// Frequency list: token TAB count.
    #[arg(long)]
    freq: PathBuf,
}

#[derive(Args)]
struct RomanizeArgs {
    /// Word list path, `-` for standard input.
    #[arg(long)]
    words: String,
    /// Convert Latin notation to script instead.
    #[arg(long, default_value_t = false)]
    to_script: bool,
    /// Maximum candidates printed per word (0 = unlimited).
    #[arg(long, default_value_t = 0)]
    limit: usize,
}

#[derive(Args)]
struct InspectArgs {
    #[arg(long)]
    grammar: PathBuf,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                eprint!("usage error: {e}");
                return ExitCode::from(1);
            }
            // --help / --version
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    match std::panic::catch_unwind(|| run(cli)) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(code)) => ExitCode::from(code),
        Err(_) => {
            eprintln!("internal error: invariant failure");
            ExitCode::from(2)
        }
    }
}

fn fail(prefix: &str, msg: impl std::fmt::Display) -> u8 {
    eprintln!("{prefix}: {msg}");
    1
}

fn read_file(path: &Path) -> Result<String, u8> {
    std::fs::read_to_string(path)
        .map_err(|e| fail("file error", format!("{}: {e}", path.display())))
}

fn read_words(source: &str) -> Result<Vec<String>, u8> {
    let text = if source == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| fail("file error", format!("standard input: {e}")))?;
        buf
    } else {
        read_file(Path::new(source))?
    };
    Ok(text.lines().map(|l| l.trim().to_string()).filter(|l| !l.is_empty()).collect())
}

fn load_handle(path: &Path) -> Result<AnalyzerHandle, u8> {
    AnalyzerHandle::load(path).map_err(|e| match e {
        soranimorph::analyzer::AnalyzerError::Io(io) => fail("grammar error", io),
        other => fail("file error", other),
    })
}

fn run(cli: Cli) -> Result<(), u8> {
    match cli.command {
        Command::Compile(args) => compile(args),
        Command::Analyze(args) => analyze(args),
        Command::Generate(args) => generate(args),
        Command::EvalAccuracy(args) => eval_accuracy(args),
        Command::EvalCoverage(args) => eval_coverage(args),
        Command::Romanize(args) => romanize(args),
        Command::Inspect(args) => inspect(args),
    }
}

fn compile(args: CompileArgs) -> Result<(), u8> {
    let manifest_text = read_file(&args.manifest)?;
    let manifest =
        GrammarManifest::parse(&manifest_text).map_err(|e| fail("input error", e))?;
    let base = args.manifest.parent().unwrap_or(Path::new("."));
    let stems = match &manifest.stems {
        Some(rel) => {
            let text = read_file(&base.join(rel))?;
            parse_stem_lexicon(&text).map_err(|e| fail("input error", e))?
        }
        None => Vec::new(),
    };
    let verbs = match &manifest.verbs {
        Some(rel) => {
            let text = read_file(&base.join(rel))?;
            let parsed = parse_verb_db(&text).map_err(|e| fail("input error", e))?;
            for d in &parsed.errors {
                eprintln!("input error: verbs line {}: {}", d.line, d.message);
            }
            if !parsed.errors.is_empty() {
                return Err(1);
            }
            parsed.entries
        }
        None => Vec::new(),
    };
    let sources = build_grammar_sources(&stems, &verbs);
    let fst = compile_sources(&sources).map_err(|e| fail("input error", e))?;
    let handle = AnalyzerHandle::new(fst);
    handle.save(&args.out).map_err(|e| fail("file error", e))?;
    eprintln!(
        "compiled grammar: {} states, {} arcs, schema {}",
        handle.fst().num_states(),
        handle.fst().num_arcs(),
        tags::SCHEMA_VERSION
    );
    Ok(())
}

fn analyze(args: AnalyzeArgs) -> Result<(), u8> {
    let handle = load_handle(&args.grammar)?;
    let words = read_words(&args.words)?;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    for word in &words {
        let mut analyses = handle.analyze(word);
        if !args.include_nonstandard {
            analyses.retain(|a| a.standard);
        }
        if args.limit > 0 {
            analyses.truncate(args.limit);
        }
        if analyses.is_empty() {
            let line = match args.format.as_str() {
                "jsonl" => format!("{{\"surface\":{},\"analyses\":[]}}", json_escape(word)),
                _ => format!("{word}\t-\t-\t-\t-"),
            };
            writeln!(out, "{line}").map_err(|e| fail("file error", e))?;
            continue;
        }
        for a in &analyses {
            let line = match args.format.as_str() {
                "jsonl" => a.to_json(word),
                _ => a.to_line(word),
            };
            writeln!(out, "{line}").map_err(|e| fail("file error", e))?;
        }
    }
    Ok(())
}

fn json_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn generate(args: GenerateArgs) -> Result<(), u8> {
    let handle = load_handle(&args.grammar)?;
    let lines = read_words(&args.words)?;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    for line in &lines {
        let cols: Vec<&str> = line.split('\t').collect();
        if cols.len() != 4 {
            return Err(fail(
                "input error",
                format!("expected lemma TAB pos TAB features TAB std|nonstd, found {line:?}"),
            ));
        }
        let analysis = Analysis::from_columns(cols[0], cols[1], cols[2], cols[3]);
        let surfaces = handle.generate(&analysis).map_err(|e| fail("input error", e))?;
        writeln!(out, "{line}\t{}", surfaces.join(" ")).map_err(|e| fail("file error", e))?;
    }
    Ok(())
}

fn eval_accuracy(args: EvalAccuracyArgs) -> Result<(), u8> {
    let handle = load_handle(&args.grammar)?;
    let text = read_file(&args.gold)?;
    let (gold, malformed) = eval::parse_gold(&text);
    for (line, reason) in &malformed {
        eprintln!("input error: gold line {line}: {reason}");
    }
    let report = eval::eval_accuracy_with(&gold, malformed.len(), |token| handle.analyze(token))
        .map_err(|e| fail("input error", e))?;
    print!("{}", report.render());
    Ok(())
}

fn eval_coverage(args: EvalCoverageArgs) -> Result<(), u8> {
    let handle = load_handle(&args.grammar)?;
    let text = read_file(&args.freq)?;
    let freq = eval::parse_freq(&text).map_err(|e| fail("input error", e))?;
    let report = eval::eval_coverage(&freq, &handle);
    print!("{}", report.render());
    Ok(())
}

fn romanize(args: RomanizeArgs) -> Result<(), u8> {
    let words = read_words(&args.words)?;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    for word in &words {
        if args.to_script {
            match script::deromanize(word) {
                Ok(s) => writeln!(out, "{word}\t{s}").map_err(|e| fail("file error", e))?,
                Err(e) => return Err(fail("input error", format!("{word}: {e}"))),
            }
        } else {
            match script::romanize(word) {
                Ok(mut r) => {
                    if args.limit > 0 {
                        r.candidates.truncate(args.limit);
                    }
                    let mark = if r.ambiguous { "ambiguous" } else { "unique" };
                    writeln!(out, "{word}\t{mark}\t{}", r.candidates.join(" "))
                        .map_err(|e| fail("file error", e))?;
                }
                Err(e) => return Err(fail("input error", format!("{word}: {e}"))),
            }
        }
    }
    Ok(())
}

fn inspect(args: InspectArgs) -> Result<(), u8> {
    let handle = load_handle(&args.grammar)?;
    println!("schema_version\t{}", handle.schema_version());
    println!("states\t{}", handle.fst().num_states());
    println!("arcs\t{}", handle.fst().num_arcs());
    println!("alphabet\t{}", handle.fst().alphabet().len());
    Ok(())
}
