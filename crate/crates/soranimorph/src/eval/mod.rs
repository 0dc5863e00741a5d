//! Evaluation harness: accuracy against a context-disambiguated gold set
//! and coverage with the correction cascade.

use thiserror::Error;

use crate::analyzer::{Analysis, AnalyzerHandle};

#[derive(Debug, Error)]
pub enum EvalError {
    #[error("empty gold set")]
    EmptyGoldSet,
    #[error("line {line}: malformed record: {reason}")]
    MalformedRecord { line: usize, reason: String },
}

/// One gold row: the context columns are curation aids, matching ignores
/// them.
#[derive(Debug, Clone)]
pub struct GoldRecord {
    pub token: String,
    pub left_context: String,
    pub right_context: String,
    pub gold: Analysis,
}

/// Parses `gold.tsv`: token, left, right, lemma, pos, features, std.
/// Malformed rows are reported and excluded.
pub fn parse_gold(text: &str) -> (Vec<GoldRecord>, Vec<(usize, String)>) {
    let mut records = Vec::new();
    let mut malformed = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let cols: Vec<&str> = line.split('\t').collect();
        if cols.len() != 7 {
            malformed.push((line_no, format!("expected 7 columns, found {}", cols.len())));
            continue;
        }
        if cols[0].trim().is_empty() {
            malformed.push((line_no, "empty token".to_string()));
            continue;
        }
        records.push(GoldRecord {
            token: cols[0].to_string(),
            left_context: cols[1].to_string(),
            right_context: cols[2].to_string(),
            gold: Analysis::from_columns(cols[3], cols[4], cols[5], cols[6]),
        });
    }
    (records, malformed)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AccuracyCategory {
    /// The gold analysis is among the analyzer's outputs.
    Correct,
    /// The analyzer produced analyses, none matching the gold one.
    Irrelevant,
    /// The analyzer produced nothing.
    NoAnalysis,
}

#[derive(Debug)]
pub struct AccuracyReport {
    pub correct: usize,
    pub irrelevant: usize,
    pub no_analysis: usize,
    pub malformed: usize,
    pub total: usize,
    /// Total number of analyses over the gold tokens (ambiguity account).
    pub analyses_emitted: usize,
    /// Per-token log: (token, category, number of analyses).
    pub log: Vec<(String, AccuracyCategory, usize)>,
}

impl AccuracyReport {
    pub fn correct_ratio(&self) -> f64 {
        self.correct as f64 / self.total as f64
    }
    pub fn irrelevant_ratio(&self) -> f64 {
        self.irrelevant as f64 / self.total as f64
    }
    pub fn no_analysis_ratio(&self) -> f64 {
        self.no_analysis as f64 / self.total as f64
    }
    pub fn mean_analyses_per_token(&self) -> f64 {
        self.analyses_emitted as f64 / self.total as f64
    }

    /// Aligned text table mirroring the accuracy-evaluation layout.
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str("Detection Category\tTokens\tRatio\n");
        out.push_str(&format!(
            "Correct analysis\t{}\t{:.1}%\n",
            self.correct,
            100.0 * self.correct_ratio()
        ));
        out.push_str(&format!(
            "Irrelevant analysis\t{}\t{:.1}%\n",
            self.irrelevant,
            100.0 * self.irrelevant_ratio()
        ));
        out.push_str(&format!(
            "No analysis\t{}\t{:.1}%\n",
            self.no_analysis,
            100.0 * self.no_analysis_ratio()
        ));
        out.push_str(&format!("Total\t{}\t\n", self.total));
        if self.malformed > 0 {
            out.push_str(&format!("Malformed rows excluded\t{}\t\n", self.malformed));
        }
        out.push_str(&format!(
            "Mean analyses per token\t{:.1}\t\n",
            self.mean_analyses_per_token()
        ));
        out
    }
}

/// Scores every gold record against the analyzer.
pub fn eval_accuracy(
    gold: &[GoldRecord],
    handle: &AnalyzerHandle,
) -> Result<AccuracyReport, EvalError> {
    eval_accuracy_with(gold, 0, |token| handle.analyze(token))
}

/// Accuracy over a recorded analysis function (used both by the live
/// analyzer path and by fixtures with recorded outputs).
pub fn eval_accuracy_with<F>(
    gold: &[GoldRecord],
    malformed: usize,
    analyze: F,
) -> Result<AccuracyReport, EvalError>
where
    F: Fn(&str) -> Vec<Analysis>,
{
    if gold.is_empty() {
        return Err(EvalError::EmptyGoldSet);
    }
    let mut report = AccuracyReport {
        correct: 0,
        irrelevant: 0,
        no_analysis: 0,
        malformed,
        total: gold.len(),
        analyses_emitted: 0,
        log: Vec::new(),
    };
    for rec in gold {
        let analyses = analyze(&rec.token);
        report.analyses_emitted += analyses.len();
        let category = if analyses.is_empty() {
            report.no_analysis += 1;
            AccuracyCategory::NoAnalysis
        } else if analyses.iter().any(|a| a.matches(&rec.gold)) {
            report.correct += 1;
            AccuracyCategory::Correct
        } else {
            report.irrelevant += 1;
            AccuracyCategory::Irrelevant
        };
        report.log.push((rec.token.clone(), category, analyses.len()));
    }
    Ok(report)
}

// ---------------------------------------------------------------------------
// Correction cascade
// ---------------------------------------------------------------------------

/// Candidate corrections one edit away from the token: insertion of و or ی
/// adjacent to an existing identical letter, and ز/ژ replacement at a
/// single position. Deduplicated, deterministic order. The rule list is
/// deliberately small and pluggable; these are the two named common
/// mistakes.
pub fn char_correction_candidates(token: &str) -> Vec<String> {
    let chars: Vec<char> = token.chars().collect();
    let mut out: Vec<String> = Vec::new();
    for (i, &c) in chars.iter().enumerate() {
        if c == 'و' || c == 'ی' {
            let mut v = chars.clone();
            v.insert(i, c);
            out.push(v.into_iter().collect());
        }
        if c == 'ز' || c == 'ژ' {
            let mut v = chars.clone();
            v[i] = if c == 'ز' { 'ژ' } else { 'ز' };
            out.push(v.into_iter().collect());
        }
    }
    out.sort();
    out.dedup();
    out
}

/// All ways to cut the token into `parts` nonempty segments.
pub fn split_candidates(token: &str, parts: usize) -> Vec<Vec<String>> {
    let chars: Vec<char> = token.chars().collect();
    let n = chars.len();
    let mut out = Vec::new();
    if parts == 2 {
        for i in 1..n {
            out.push(vec![
                chars[..i].iter().collect::<String>(),
                chars[i..].iter().collect::<String>(),
            ]);
        }
    } else if parts == 3 {
        for i in 1..n {
            for j in (i + 1)..n {
                out.push(vec![
                    chars[..i].iter().collect::<String>(),
                    chars[i..j].iter().collect::<String>(),
                    chars[j..].iter().collect::<String>(),
                ]);
            }
        }
    }
    out
}

/// Cascade category of one token type.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverageCategory {
    Direct,
    CharCorrected,
    OneSplit,
    TwoSplit,
    Undetected,
}

#[derive(Debug, Default)]
pub struct CoverageReport {
    /// Token-weighted counts per category, in cascade order.
    pub direct: u64,
    pub char_corrected: u64,
    pub one_split: u64,
    pub two_split: u64,
    pub undetected: u64,
    pub total: u64,
    /// Type-weighted counts (each token type once).
    pub type_direct: u64,
    pub type_char_corrected: u64,
    pub type_one_split: u64,
    pub type_two_split: u64,
    pub type_undetected: u64,
    pub type_total: u64,
}

impl CoverageReport {
    pub fn detected(&self) -> u64 {
        self.direct + self.char_corrected + self.one_split + self.two_split
    }

    pub fn ratios(&self) -> [f64; 6] {
        let t = self.total as f64;
        [
            self.direct as f64 / t,
            self.char_corrected as f64 / t,
            self.one_split as f64 / t,
            self.two_split as f64 / t,
            self.undetected as f64 / t,
            self.detected() as f64 / t,
        ]
    }

    /// Aligned text table mirroring the coverage-evaluation layout.
    pub fn render(&self) -> String {
        let r = self.ratios();
        let mut out = String::new();
        out.push_str("Detection\tAnalyzed Tokens\tCoverage\n");
        out.push_str(&format!(
            "Detected without corrections\t{}\t{:.1}%\n",
            self.direct,
            100.0 * r[0]
        ));
        out.push_str(&format!(
            "Detected after common character corrections\t{}\t{:.1}%\n",
            self.char_corrected,
            100.0 * r[1]
        ));
        out.push_str(&format!(
            "Detected after one split\t{}\t{:.1}%\n",
            self.one_split,
            100.0 * r[2]
        ));
        out.push_str(&format!(
            "Detected after two splits\t{}\t{:.1}%\n",
            self.two_split,
            100.0 * r[3]
        ));
        out.push_str(&format!("Not detected\t{}\t{:.1}%\n", self.undetected, 100.0 * r[4]));
        out.push_str(&format!("Total detected\t{}\t{:.1}%\n", self.detected(), 100.0 * r[5]));
        out.push_str(&format!("Total\t{}\t\n", self.total));
        let tt = self.type_total as f64;
        if self.type_total > 0 {
            out.push_str(&format!(
                "Type-weighted detected\t{}\t{:.1}%\n",
                self.type_total - self.type_undetected,
                100.0 * (self.type_total - self.type_undetected) as f64 / tt
            ));
        }
        out
    }
}

/// Parses `freq.tsv`: token, count.
pub fn parse_freq(text: &str) -> Result<Vec<(String, u64)>, EvalError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let mut cols = line.split('\t');
        let token = cols.next().unwrap_or("").to_string();
        let count: u64 = cols
            .next()
            .unwrap_or("")
            .trim()
            .parse()
            .map_err(|_| EvalError::MalformedRecord {
                line: i + 1,
                reason: "bad count".to_string(),
            })?;
        out.push((token, count));
    }
    Ok(out)
}

/// Runs the cascade per token type, weighting categories by count:
/// direct analysis, then character corrections, then two-part and
/// three-part splits where every segment must analyze.
pub fn eval_coverage(
    freq: &[(String, u64)],
    handle: &AnalyzerHandle,
) -> CoverageReport {
    let analyzable = |token: &str| -> bool { !handle.analyze(token).is_empty() };
    eval_coverage_with(freq, analyzable)
}

pub fn eval_coverage_with<F>(freq: &[(String, u64)], analyzable: F) -> CoverageReport
where
    F: Fn(&str) -> bool,
{
    let mut report = CoverageReport::default();
    for (token, count) in freq {
        let category = categorize(token, &analyzable);
        report.total += count;
        report.type_total += 1;
        match category {
            CoverageCategory::Direct => {
                report.direct += count;
                report.type_direct += 1;
            }
            CoverageCategory::CharCorrected => {
                report.char_corrected += count;
                report.type_char_corrected += 1;
            }
            CoverageCategory::OneSplit => {
                report.one_split += count;
                report.type_one_split += 1;
            }
            CoverageCategory::TwoSplit => {
                report.two_split += count;
                report.type_two_split += 1;
            }
            CoverageCategory::Undetected => {
                report.undetected += count;
                report.type_undetected += 1;
            }
        }
    }
    report
}

fn categorize<F>(token: &str, analyzable: &F) -> CoverageCategory
where
    F: Fn(&str) -> bool,
{
    if analyzable(token) {
        return CoverageCategory::Direct;
    }
    if char_correction_candidates(token).iter().any(|c| analyzable(c)) {
        return CoverageCategory::CharCorrected;
    }
    if split_candidates(token, 2)
        .iter()
        .any(|segs| segs.iter().all(|s| analyzable(s)))
    {
        return CoverageCategory::OneSplit;
    }
    if split_candidates(token, 3)
        .iter()
        .any(|segs| segs.iter().all(|s| analyzable(s)))
    {
        return CoverageCategory::TwoSplit;
    }
    CoverageCategory::Undetected
}
