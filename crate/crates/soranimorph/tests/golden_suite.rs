//! Golden paradigm suite: every bundled example form must be analyzed with
//! its intended tags and regenerated from those tags, exact string match.

mod common;

use soranimorph::analyzer::Analysis;

struct GoldenRow {
    line: usize,
    surface: String,
    analysis: Analysis,
}

fn rows() -> Vec<GoldenRow> {
    let mut out = Vec::new();
    for (i, line) in common::GOLDEN_TSV.lines().enumerate() {
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let cols: Vec<&str> = line.split('\t').collect();
        assert_eq!(cols.len(), 5, "golden row {} malformed: {line:?}", i + 1);
        let surface = common::to_script(cols[0]);
        let lemma = common::to_script(cols[1]);
        let features: Vec<&str> = cols[3].split(';').filter(|f| !f.is_empty()).collect();
        let mut analysis = Analysis::new(&lemma, cols[2], &features);
        analysis.standard = cols[4] != "nonstd";
        out.push(GoldenRow { line: i + 1, surface, analysis });
    }
    out
}

#[test]
fn every_golden_form_is_analyzed_with_the_intended_tags() {
    let h = common::handle();
    let mut failures = Vec::new();
    for row in rows() {
        let analyses = h.analyze(&row.surface);
        if !analyses.iter().any(|a| a.matches(&row.analysis)) {
            failures.push(format!(
                "line {}: {} expected {} — got {:?}",
                row.line,
                row.surface,
                row.analysis.to_line(&row.surface),
                analyses.iter().map(|a| a.to_line(&row.surface)).collect::<Vec<_>>()
            ));
        }
    }
    assert!(
        failures.is_empty(),
        "{} golden analysis failures:\n{}",
        failures.len(),
        failures.join("\n")
    );
}

#[test]
fn every_golden_form_is_regenerated_from_its_tags() {
    let h = common::handle();
    let mut failures = Vec::new();
    for row in rows() {
        match h.generate(&row.analysis) {
            Ok(surfaces) => {
                if !surfaces.contains(&row.surface) {
                    failures.push(format!(
                        "line {}: {} not among generated {:?} for {}",
                        row.line,
                        row.surface,
                        surfaces,
                        row.analysis.to_line("-")
                    ));
                }
            }
            Err(e) => failures.push(format!("line {}: generate error {e}", row.line)),
        }
    }
    assert!(
        failures.is_empty(),
        "{} golden generation failures:\n{}",
        failures.len(),
        failures.join("\n")
    );
}
