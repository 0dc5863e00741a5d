// Regenerates the checked-in 200-token coverage sample so each cascade
// category is populated, verifying categories with the live analyzer.
use soranimorph::analyzer::AnalyzerHandle;
use soranimorph::eval::{char_correction_candidates, split_candidates};
use soranimorph::fst::enumerate_paths;
use soranimorph::grammar::{build_grammar_sources, compile_sources};
use soranimorph::ingest::{parse_stem_lexicon, parse_verb_db};

fn main() {
    let stems = parse_stem_lexicon(include_str!("../data/stems.tsv")).unwrap();
    let verbs = parse_verb_db(include_str!("../data/verbs.tsv")).unwrap();
    let sources = build_grammar_sources(&stems, &verbs.entries);
    let h = AnalyzerHandle::new(compile_sources(&sources).unwrap());
    let ok = |t: &str| !h.analyze(t).is_empty();

    let e = enumerate_paths(h.fst(), 40_000);
    let mut surfaces: Vec<String> = e
        .pairs
        .iter()
        .filter(|(lex, _)| {
            !lex.iter().any(|s| {
                let t = s.display_text();
                t == "{NonStd}" || t == "{JoinedW}" || t == "{JoinedPrep}"
            })
        })
        .map(|(_, s)| s.iter().map(|x| x.display_text()).collect::<String>())
        .filter(|s| s.chars().count() >= 3)
        .collect();
    surfaces.sort();
    surfaces.dedup();

    let mut out: Vec<(String, u64)> = Vec::new();
    let stride = surfaces.len() / 166;
    for (i, s) in surfaces.iter().step_by(stride.max(1)).take(166).enumerate() {
        out.push((s.clone(), 1 + (i as u64 * 7) % 40));
    }
    // Character-correctable: drop a waw from a double waw.
    let mut n = 0;
    for s in surfaces.iter().filter(|s| s.contains("وو")) {
        let broken = s.replacen("وو", "و", 1);
        if !ok(&broken) && char_correction_candidates(&broken).iter().any(|c| ok(c)) {
            out.push((broken, 2 + n));
            n += 1;
            if n == 10 {
                break;
            }
        }
    }
    // One-split: two words joined, not analyzable as one.
    let mut n = 0;
    for i in 0..400 {
        let a = &surfaces[(i * 37) % surfaces.len()];
        let b = &surfaces[(i * 53 + 11) % surfaces.len()];
        let joined = format!("{a}{b}");
        if !ok(&joined)
            && char_correction_candidates(&joined).iter().all(|c| !ok(c))
            && split_candidates(&joined, 2).iter().any(|segs| segs.iter().all(|s| ok(s)))
        {
            out.push((joined, 3 + n));
            n += 1;
            if n == 10 {
                break;
            }
        }
    }
    // Two-split: three words joined, with no two-part segmentation.
    let mut n = 0;
    'outer: for i in 0..4000 {
        let a = &surfaces[(i * 101 + 3) % surfaces.len()];
        let b = &surfaces[(i * 257 + 29) % surfaces.len()];
        let c = &surfaces[(i * 331 + 57) % surfaces.len()];
        let joined = format!("{a}{b}{c}");
        if ok(&joined) || char_correction_candidates(&joined).iter().any(|x| ok(x)) {
            continue;
        }
        if split_candidates(&joined, 2).iter().any(|segs| segs.iter().all(|s| ok(s))) {
            continue;
        }
        if split_candidates(&joined, 3).iter().any(|segs| segs.iter().all(|s| ok(s))) {
            out.push((joined, 4 + n));
            n += 1;
            if n == 6 {
                break 'outer;
            }
        }
    }
    for (i, junk) in ["قذظذ", "ظظظ", "ضضضض", "ثثث", "ذذذذذ", "ظذضث", "ضثظ", "ذضذض"]
        .iter()
        .enumerate()
    {
        out.push((junk.to_string(), 1 + i as u64));
    }
    out.truncate(200);
    while out.len() < 200 {
        let s = &surfaces[(out.len() * 97) % surfaces.len()];
        out.push((s.clone(), 1));
    }
    for (token, count) in &out {
        println!("{token}\t{count}");
    }
    eprintln!("total {}", out.len());
}
