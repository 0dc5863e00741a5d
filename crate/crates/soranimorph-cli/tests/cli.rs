//! End-to-end command-line checks: the compile/analyze pipeline, byte
//! determinism, library parity and the error exit codes.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::sync::OnceLock;

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_soranimorph")
}

fn data(file: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../soranimorph/data").join(file)
}

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    use std::io::Write;
    use std::process::Stdio;
    let mut cmd = Command::new(bin());
    cmd.args(args).stdout(Stdio::piped()).stderr(Stdio::piped());
    if stdin.is_some() {
        cmd.stdin(Stdio::piped());
    }
    let mut child = cmd.spawn().expect("spawn");
    if let Some(input) = stdin {
        child.stdin.as_mut().unwrap().write_all(input.as_bytes()).unwrap();
    }
    child.wait_with_output().expect("wait")
}

/// Compile once per test binary; the grammar build takes a few seconds.
fn grammar_path() -> &'static Path {
    static PATH: OnceLock<PathBuf> = OnceLock::new();
    PATH.get_or_init(|| {
        let dir = std::env::temp_dir().join(format!("soranimorph-cli-test-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let out = dir.join("ck.bin");
        let manifest = data("ck.manifest");
        let output = run(
            &[
                "compile",
                "--manifest",
                manifest.to_str().unwrap(),
                "--out",
                out.to_str().unwrap(),
            ],
            None,
        );
        assert!(
            output.status.success(),
            "compile failed: {}",
            String::from_utf8_lossy(&output.stderr)
        );
        out
    })
}

#[test]
fn pipeline_compile_then_analyze_from_stdin() {
    let grammar = grammar_path();
    let out = run(
        &["analyze", "--grammar", grammar.to_str().unwrap(), "--words", "-"],
        Some("گولەکان\nقذظذ\n"),
    );
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("گولەکان\tگول\t[NOUN]\t{Def};{Plur}\tstd"), "{text}");
    assert!(text.contains("قذظذ\t-\t-\t-\t-"), "{text}");
}

#[test]
fn analyze_golden_words_is_byte_deterministic_and_matches_the_library() {
    let grammar = grammar_path();
    // Words: every golden surface, resolved the same way the library tests
    // resolve them.
    let golden = std::fs::read_to_string(data("golden.tsv")).unwrap();
    let mut words = String::new();
    for line in golden.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty()) {
        let surface = line.split('\t').next().unwrap();
        let script = soranimorph::script::deromanize(surface)
            .unwrap_or_else(|_| surface.to_string());
        words.push_str(&script);
        words.push('\n');
    }
    let run1 = run(
        &["analyze", "--grammar", grammar.to_str().unwrap(), "--words", "-"],
        Some(&words),
    );
    let run2 = run(
        &["analyze", "--grammar", grammar.to_str().unwrap(), "--words", "-"],
        Some(&words),
    );
    assert!(run1.status.success());
    assert_eq!(run1.stdout, run2.stdout, "analyze output differs between runs");

    // Library parity: the CLI is a thin serialization of library calls.
    let handle = soranimorph::analyzer::AnalyzerHandle::load(grammar).unwrap();
    let mut expected = String::new();
    for word in words.lines() {
        let analyses = handle.analyze(word);
        if analyses.is_empty() {
            expected.push_str(&format!("{word}\t-\t-\t-\t-\n"));
        }
        for a in analyses {
            expected.push_str(&a.to_line(word));
            expected.push('\n');
        }
    }
    assert_eq!(String::from_utf8(run1.stdout).unwrap(), expected);
}

#[test]
fn jsonl_format_and_nonstandard_filter() {
    let grammar = grammar_path();
    let out = run(
        &[
            "analyze",
            "--grammar",
            grammar.to_str().unwrap(),
            "--words",
            "-",
            "--format",
            "jsonl",
        ],
        Some("دێنم\n"),
    );
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\"standard\":false"), "{text}");
    let out = run(
        &[
            "analyze",
            "--grammar",
            grammar.to_str().unwrap(),
            "--words",
            "-",
            "--include-nonstandard",
            "false",
        ],
        Some("دێنم\n"),
    );
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("دێنم\t-\t-\t-\t-"), "{text}");
}

#[test]
fn generate_round_trips_an_analysis_line() {
    let grammar = grammar_path();
    let out = run(
        &["generate", "--grammar", grammar.to_str().unwrap(), "--words", "-"],
        Some("گول\t[NOUN]\t{Def};{Plur}\tstd\n"),
    );
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.trim().ends_with("گولەکان"), "{text}");
}

#[test]
fn eval_commands_emit_reports() {
    let grammar = grammar_path();
    let out = run(
        &[
            "eval-accuracy",
            "--grammar",
            grammar.to_str().unwrap(),
            "--gold",
            data("gold_sample.tsv").to_str().unwrap(),
        ],
        None,
    );
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("Correct analysis"), "{text}");

    let out = run(
        &[
            "eval-coverage",
            "--grammar",
            grammar.to_str().unwrap(),
            "--freq",
            data("freq_sample.tsv").to_str().unwrap(),
        ],
        None,
    );
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("Detected without corrections"), "{text}");
    assert!(text.contains("Detected after one split"), "{text}");
}

#[test]
fn romanize_both_directions() {
    let out = run(&["romanize", "--words", "-", "--to-script"], Some("genim\n"));
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().contains("گەنم"));
    let out = run(&["romanize", "--words", "-"], Some("گول\n"));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("ambiguous"), "{text}");
    assert!(text.contains("gul"), "{text}");
}

#[test]
fn inspect_prints_stats() {
    let grammar = grammar_path();
    let out = run(&["inspect", "--grammar", grammar.to_str().unwrap()], None);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("schema_version\t1"), "{text}");
    assert!(text.contains("states\t"), "{text}");
}

#[test]
fn error_exit_codes_and_prefixes() {
    // unknown flag -> usage error, exit 1
    let out = run(&["analyze", "--bogus"], None);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("usage error:"));

    // missing file -> file error, exit 1
    let out = run(&["inspect", "--grammar", "/nonexistent/g.bin"], None);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("file error:"));

    // corrupt grammar -> grammar error, exit 1
    let dir = std::env::temp_dir().join(format!("soranimorph-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.bin");
    std::fs::write(&bad, b"CKM1garbage").unwrap();
    let out = run(&["inspect", "--grammar", bad.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("grammar error:"));
}
