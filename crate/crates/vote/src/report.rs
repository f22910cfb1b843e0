//! Result writers.
//!
//! The text table rounds values to two decimals and marks optimal entries
//! with `*`. CSV and JSON carry full precision (shortest round-trip decimal),
//! every tied winner and every warning.

use std::fmt::Write as _;

use pnorm_committee::{
    BallotProfile, Committee, DistanceHistogram, ElectionResult, Mode, ReportMode, ScoredCommittee,
    SweepMatrix, Warning,
};
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Table,
    Csv,
    Json,
}

fn committee_label(profile: &BallotProfile, c: &Committee) -> String {
    format!("{{{}}}", profile.roster().committee_names(c).join(", "))
}

fn committee_json(profile: &BallotProfile, c: &Committee) -> Value {
    json!(profile.roster().committee_names(c))
}

fn histogram_text(h: &DistanceHistogram) -> String {
    h.iter()
        .map(|(d, c)| format!("{d}:{c}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn histogram_json(h: &DistanceHistogram) -> Value {
    Value::Object(
        h.iter()
            .map(|(d, c)| (d.to_string(), json!(c)))
            .collect::<Map<_, _>>(),
    )
}

/// Two-decimal rendering that falls back to scientific notation, computed
/// from the logarithm, when the value overflowed.
pub fn format_rounded(value: f64, log_value: f64) -> String {
    if value.is_finite() {
        format!("{value:.2}")
    } else {
        scientific(log_value, 2)
    }
}

/// Shortest round-trip decimal, or a 17-digit scientific rendering from the
/// logarithm when the value overflowed.
pub fn format_full(value: f64, log_value: f64) -> String {
    if value.is_finite() {
        format!("{value}")
    } else {
        scientific(log_value, 16)
    }
}

fn scientific(log_value: f64, digits: usize) -> String {
    let log10 = log_value / std::f64::consts::LN_10;
    let mut exponent = log10.floor();
    let mut mantissa = 10f64.powf(log10 - exponent);
    // Rounding the mantissa can carry into the next power of ten.
    if format!("{mantissa:.digits$}").starts_with("10") {
        mantissa /= 10.0;
        exponent += 1.0;
    }
    format!("{mantissa:.digits$}e{exponent}")
}

fn warning_json(profile: &BallotProfile, w: &Warning) -> Value {
    match w {
        Warning::NearTie { first, second } => json!({
            "kind": "near_tie",
            "committees": [committee_json(profile, first), committee_json(profile, second)],
            "message": warning_text(profile, w),
        }),
    }
}

/// A warning with committees spelled by candidate name.
pub fn warning_text(profile: &BallotProfile, w: &Warning) -> String {
    match w {
        Warning::NearTie { first, second } => format!(
            "committees {} and {} have different distance histograms but scores within tolerance",
            committee_label(profile, first),
            committee_label(profile, second)
        ),
    }
}

fn mode_name(mode: Mode) -> &'static str {
    match mode {
        Mode::Binary => "binary",
        Mode::Ternary => "ternary",
    }
}

fn scored_json(profile: &BallotProfile, s: &ScoredCommittee) -> Value {
    json!({
        "committee": committee_json(profile, &s.committee),
        "value": s.value,
        "coverage": s.coverage,
        "histogram": histogram_json(&s.histogram),
    })
}

fn result_json(result: &ElectionResult, profile: &BallotProfile) -> Value {
    let mut out = json!({
        "method": result.method.name(),
        "p": result.method.p(),
        "k": result.k,
        "mode": mode_name(profile.mode()),
        "voters": profile.voters(),
        "value_label": result.method.value_label(),
        "tie": result.tie(),
        "winners": result.winners.iter().map(|w| scored_json(profile, w)).collect::<Vec<_>>(),
        "warnings": result.warnings.iter().map(|w| warning_json(profile, w)).collect::<Vec<_>>(),
    });
    if let Some(rows) = &result.scores {
        out["scores"] = rows.iter().map(|r| scored_json(profile, r)).collect();
    }
    out
}

fn csv_string(rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut writer = csv::WriterBuilder::new()
        .flexible(true)
        .from_writer(Vec::new());
    for row in rows {
        writer.write_record(&row).expect("writing to memory");
    }
    String::from_utf8(writer.into_inner().expect("writing to memory")).expect("utf-8 input")
}

fn committee_csv(profile: &BallotProfile, c: &Committee) -> String {
    profile.roster().committee_names(c).join(" ")
}

fn p_text(p: Option<f64>) -> String {
    p.map(|p| p.to_string()).unwrap_or_default()
}

fn result_csv_rows(result: &ElectionResult, profile: &BallotProfile) -> Vec<Vec<String>> {
    let row = |kind: &str, s: &ScoredCommittee| {
        vec![
            kind.to_string(),
            result.method.name().to_string(),
            p_text(result.method.p()),
            result.k.to_string(),
            committee_csv(profile, &s.committee),
            s.value.to_string(),
            s.coverage.to_string(),
            histogram_text(&s.histogram),
            String::new(),
        ]
    };
    let mut rows: Vec<Vec<String>> = result.winners.iter().map(|w| row("winner", w)).collect();
    if let Some(scores) = &result.scores {
        rows.extend(scores.iter().map(|s| row("score", s)));
    }
    for w in &result.warnings {
        rows.push(vec![
            "warning".into(),
            result.method.name().into(),
            p_text(result.method.p()),
            result.k.to_string(),
            String::new(),
            String::new(),
            String::new(),
            String::new(),
            warning_text(profile, w),
        ]);
    }
    rows
}

const RESULT_CSV_HEADER: [&str; 9] = [
    "kind",
    "method",
    "p",
    "k",
    "committee",
    "value",
    "coverage",
    "histogram",
    "note",
];

fn method_title(result: &ElectionResult) -> String {
    match result.method.p() {
        Some(p) if result.method.name() == "pnorm" => format!("pnorm (p = {p})"),
        _ => result.method.name().to_string(),
    }
}

/// Renders one election outcome.
pub fn write_result(
    result: &ElectionResult,
    profile: &BallotProfile,
    format: OutputFormat,
) -> String {
    match format {
        OutputFormat::Json => format!("{:#}\n", result_json(result, profile)),
        OutputFormat::Csv => {
            let header = RESULT_CSV_HEADER.iter().map(|s| s.to_string()).collect();
            csv_string(std::iter::once(header).chain(result_csv_rows(result, profile)))
        }
        OutputFormat::Table => {
            let mut out = String::new();
            let m = profile.voters();
            writeln!(
                out,
                "method: {}  k = {}  voters = {}  mode = {}",
                method_title(result),
                result.k,
                m,
                mode_name(profile.mode())
            )
            .unwrap();
            let label = result.method.value_label();
            for w in &result.winners {
                writeln!(
                    out,
                    "winner: {}  {label} = {:.2}  coverage = {}/{m}  histogram = {}",
                    committee_label(profile, &w.committee),
                    w.value,
                    w.coverage,
                    histogram_text(&w.histogram)
                )
                .unwrap();
            }
            if result.tie() {
                writeln!(
                    out,
                    "tie: {} committees share the optimum",
                    result.winners.len()
                )
                .unwrap();
            }
            if let Some(scores) = &result.scores {
                let rows: Vec<Vec<String>> = scores
                    .iter()
                    .map(|s| {
                        let star = if result.winner_committees().any(|c| *c == s.committee) {
                            "*"
                        } else {
                            ""
                        };
                        vec![
                            committee_label(profile, &s.committee),
                            format!("{:.2}{star}", s.value),
                            s.coverage.to_string(),
                            histogram_text(&s.histogram),
                        ]
                    })
                    .collect();
                out.push('\n');
                out.push_str(&aligned(
                    &["Committee", label, "coverage", "histogram"],
                    &rows,
                    1,
                ));
            }
            out
        }
    }
}

/// Pads cells into columns; columns from `first_numeric` on are right-aligned.
fn aligned(header: &[&str], rows: &[Vec<String>], first_numeric: usize) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<String>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .enumerate()
            .map(|(i, (c, &w))| {
                if i < first_numeric {
                    format!("{c:<w$}")
                } else {
                    format!("{c:>w$}")
                }
            })
            .collect();
        format!("{}\n", padded.join(" | ").trim_end())
    };
    let mut out = line(header.iter().map(|s| s.to_string()).collect());
    let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
    out.push_str(&format!("{}\n", rule.join("-+-")));
    for row in rows {
        out.push_str(&line(row.clone()));
    }
    out
}

/// Renders a sweep matrix: committees as rows, one column per `p`.
pub fn write_sweep(matrix: &SweepMatrix, profile: &BallotProfile, format: OutputFormat) -> String {
    let report = match matrix.report {
        ReportMode::Norm => "norm",
        ReportMode::PowerSum => "power_sum",
    };
    match format {
        OutputFormat::Json => {
            let rows: Vec<Value> = matrix
                .rows
                .iter()
                .enumerate()
                .map(|(i, r)| {
                    json!({
                        "committee": committee_json(profile, &r.committee),
                        "histogram": histogram_json(&r.histogram),
                        "cells": r.cells.iter().map(|&c| if c.is_finite() { json!(c) } else { Value::Null }).collect::<Vec<_>>(),
                        "log_cells": r.log_cells,
                        "minimizer_of": (0..matrix.ps.len()).filter(|&j| matrix.is_minimizer(i, j)).map(|j| matrix.ps[j]).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let minimizers: Vec<Value> = matrix
                .minimizers
                .iter()
                .map(|col| {
                    col.iter()
                        .map(|&i| committee_json(profile, &matrix.rows[i].committee))
                        .collect()
                })
                .collect();
            let out = json!({
                "k": matrix.k,
                "mode": mode_name(profile.mode()),
                "voters": profile.voters(),
                "report": report,
                "ps": matrix.ps,
                "rows": rows,
                "minimizers": minimizers,
                "warnings": matrix.warnings.iter().map(|w| warning_json(profile, w)).collect::<Vec<_>>(),
            });
            format!("{out:#}\n")
        }
        OutputFormat::Csv => {
            let mut header = vec!["kind".to_string(), "committee".into(), "histogram".into()];
            header.extend(matrix.ps.iter().map(|p| format!("p={p}")));
            header.push("minimizer_of".into());
            let mut rows = vec![header];
            for (i, r) in matrix.rows.iter().enumerate() {
                let mut row = vec![
                    "row".to_string(),
                    committee_csv(profile, &r.committee),
                    histogram_text(&r.histogram),
                ];
                row.extend(
                    r.cells
                        .iter()
                        .zip(&r.log_cells)
                        .map(|(&c, &l)| format_full(c, l)),
                );
                let columns: Vec<String> = (0..matrix.ps.len())
                    .filter(|&j| matrix.is_minimizer(i, j))
                    .map(|j| matrix.ps[j].to_string())
                    .collect();
                row.push(columns.join(" "));
                rows.push(row);
            }
            for w in &matrix.warnings {
                rows.push(vec!["warning".into(), warning_text(profile, w)]);
            }
            csv_string(rows)
        }
        OutputFormat::Table => {
            let mut header = vec!["Committee".to_string()];
            header.extend(matrix.ps.iter().map(|p| p.to_string()));
            let rows: Vec<Vec<String>> = matrix
                .rows
                .iter()
                .enumerate()
                .map(|(i, r)| {
                    let mut row = vec![committee_label(profile, &r.committee)];
                    for (j, (&c, &l)) in r.cells.iter().zip(&r.log_cells).enumerate() {
                        let star = if matrix.is_minimizer(i, j) { "*" } else { "" };
                        row.push(format!("{}{star}", format_rounded(c, l)));
                    }
                    row
                })
                .collect();
            let header: Vec<&str> = header.iter().map(String::as_str).collect();
            let mut out = format!(
                "{} of the distance vector, k = {}, voters = {}; * marks the minimizer of each column\n",
                if report == "norm" { "p-norm" } else { "p-norm raised to the power p" },
                matrix.k,
                profile.voters()
            );
            out.push_str(&aligned(&header, &rows, 1));
            out
        }
    }
}

fn winner_set(result: &ElectionResult) -> Vec<&Committee> {
    result.winner_committees().collect()
}

/// Number of distinct winner sets among `results`.
pub fn distinct_outcomes(results: &[ElectionResult]) -> usize {
    let mut seen: Vec<Vec<&Committee>> = Vec::new();
    for r in results {
        let set = winner_set(r);
        if !seen.contains(&set) {
            seen.push(set);
        }
    }
    seen.len()
}

fn method_label(result: &ElectionResult) -> String {
    result.method.to_string()
}

/// Renders several methods side by side on the same profile.
pub fn write_comparison(
    results: &[ElectionResult],
    profile: &BallotProfile,
    format: OutputFormat,
) -> String {
    let distinct = distinct_outcomes(results);
    let baseline = results.first().map(winner_set);
    let disagrees = |r: &ElectionResult| baseline.as_ref().is_some_and(|b| *b != winner_set(r));
    match format {
        OutputFormat::Json => {
            let methods: Vec<Value> = results
                .iter()
                .map(|r| {
                    let mut v = result_json(r, profile);
                    v["label"] = json!(method_label(r));
                    v["differs_from_first"] = json!(disagrees(r));
                    v
                })
                .collect();
            let out = json!({
                "methods": methods,
                "distinct_outcomes": distinct,
                "agree": distinct <= 1,
            });
            format!("{out:#}\n")
        }
        OutputFormat::Csv => {
            let mut header: Vec<String> = RESULT_CSV_HEADER.iter().map(|s| s.to_string()).collect();
            header.insert(0, "label".into());
            header.push("differs_from_first".into());
            let mut rows = vec![header];
            for r in results {
                for mut row in result_csv_rows(r, profile) {
                    row.insert(0, method_label(r));
                    row.push(disagrees(r).to_string());
                    rows.push(row);
                }
            }
            csv_string(rows)
        }
        OutputFormat::Table => {
            let m = profile.voters();
            let rows: Vec<Vec<String>> = results
                .iter()
                .map(|r| {
                    let mark = if disagrees(r) { "!" } else { "" };
                    vec![
                        format!("{}{mark}", method_label(r)),
                        r.winners
                            .iter()
                            .map(|w| committee_label(profile, &w.committee))
                            .collect::<Vec<_>>()
                            .join(" "),
                        r.winners
                            .iter()
                            .map(|w| format!("{}/{m}", w.coverage))
                            .collect::<Vec<_>>()
                            .join(" "),
                        r.winners
                            .iter()
                            .map(|w| histogram_text(&w.histogram))
                            .collect::<Vec<_>>()
                            .join(" | "),
                    ]
                })
                .collect();
            let mut out = aligned(
                &["Method", "Winners", "Coverage", "Histogram"],
                &rows,
                usize::MAX,
            );
            if distinct <= 1 {
                out.push_str("all methods agree\n");
            } else {
                writeln!(
                    out,
                    "methods disagree: {distinct} distinct outcomes (! marks a differing method)"
                )
                .unwrap();
            }
            out
        }
    }
}
