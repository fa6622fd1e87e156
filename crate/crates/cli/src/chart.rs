use ginkit::{CIParams, CaseTag, InvariantSequence, PhaseTag};

use crate::record::phase_runs;

pub fn glyph(gap: i64) -> char {
    match gap {
        1 => '·',
        2 => ':',
        _ => '#',
    }
}

fn label(tag: &PhaseTag) -> String {
    match tag {
        PhaseTag::PatternBlock(i) => format!("PatternBlock {i}"),
        PhaseTag::PartialPatternBlock => "PartialBlock".into(),
        other => other.to_string(),
    }
}

/// Labeled chart rows; consecutive identical Pattern Blocks share a row.
pub fn chart_rows(seq: &InvariantSequence) -> Vec<(String, String)> {
    let gaps = seq.gaps();
    let runs = phase_runs(&gaps, &seq.phases);
    let mut rows: Vec<(String, String)> = Vec::new();
    let mut i = 0;
    while i < runs.len() {
        let (tag, run) = &runs[i];
        let mut j = i + 1;
        if matches!(tag, PhaseTag::PatternBlock(_)) {
            while j < runs.len()
                && matches!(runs[j].0, PhaseTag::PatternBlock(_))
                && runs[j].1 == *run
            {
                j += 1;
            }
        }
        let glyphs: String = run.iter().map(|g| glyph(*g)).collect();
        let name = if j - i > 1 {
            let PhaseTag::PatternBlock(last) = runs[j - 1].0 else {
                unreachable!()
            };
            format!("{}..{last} x{}", label(tag), j - i)
        } else {
            label(tag)
        };
        rows.push((name, glyphs));
        i = j;
    }
    rows
}

pub fn render(params: &CIParams, case: CaseTag, seq: &InvariantSequence) -> String {
    let mut out = format!("{params}  {case}\n");
    let w = params.wide_gap();
    if w != 1 && w != 2 && seq.gaps().contains(&w) {
        out += &format!("· = 1   : = 2   # = {w}\n");
    } else {
        out += "· = 1   : = 2\n";
    }
    let rows = chart_rows(seq);
    if rows.is_empty() {
        out += "(no gaps)\n";
        return out;
    }
    let width = rows
        .iter()
        .map(|(l, _)| l.chars().count())
        .max()
        .unwrap_or(0);
    for (l, g) in rows {
        out += &format!("{l:<width$} | {g}\n");
    }
    out
}
