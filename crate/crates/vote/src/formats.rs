//! Ballot file formats.
//!
//! **Compact text** (`.txt`, the default). UTF-8, one record per line:
//!
//! ```text
//! # comment
//! candidates: A1 A2 B1 B2
//! 500: A1 A2
//! 100: +A1 -B1
//! ```
//!
//! Blank lines and lines starting with `#` are ignored. The optional
//! `candidates:` line fixes the roster and must come before any ballot; tokens
//! naming other candidates are then an error. Without it the roster is every
//! name mentioned, sorted by code point. A ballot line is a positive decimal
//! weight, `:`, then whitespace-separated tokens: `Name` or `+Name` approves,
//! `-Name` rejects. A candidate may appear once per line.
//!
//! **Matrix CSV** (`.csv`). The header lists candidate names, optionally
//! preceded by a `weight` column. Each row holds one entry in {-1, 0, 1} per
//! candidate; without a weight column every row has weight 1.
//!
//! **JSON lines** (`.jsonl`, `.ndjson`). An optional first line
//! `{"candidates": [...]}` fixes the roster. Every other non-blank line is
//! `{"weight": w, "opinions": {"Name": v, ...}}` with `v` in {-1, 0, 1};
//! omitted candidates are neutral and an omitted weight means 1. Without the
//! header the roster is every name mentioned, sorted by code point.
//!
//! In all formats the mode is ternary if any entry is -1, unless a mode is
//! forced; forcing binary on a file with rejections is an error.

use std::fmt::Write as _;
use std::path::Path;

use pnorm_committee::{BallotProfile, CandidateRoster, Mode};
use serde_json::{json, Map, Value};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BallotFormat {
    MatrixCsv,
    CompactText,
    JsonLines,
}

impl BallotFormat {
    /// Guesses the format from a file extension; compact text otherwise.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("csv") => BallotFormat::MatrixCsv,
            Some(e) if e.eq_ignore_ascii_case("jsonl") || e.eq_ignore_ascii_case("ndjson") => {
                BallotFormat::JsonLines
            }
            _ => BallotFormat::CompactText,
        }
    }
}

#[derive(Debug, Error)]
pub enum IoError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: unknown candidate {name:?}")]
    UnknownCandidate { line: usize, name: String },
    #[error("candidate {0:?} appears twice in the header")]
    DuplicateCandidateHeader(String),
    #[error("the ballot file contains no ballots")]
    Empty,
    #[error(transparent)]
    Profile(#[from] pnorm_committee::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn parse_error(line: usize, message: impl Into<String>) -> IoError {
    IoError::Parse {
        line,
        message: message.into(),
    }
}

/// Roster plus `(entries, weight)` rows, before validation.
struct RawBallots {
    names: Vec<String>,
    rows: Vec<(Vec<i8>, u64)>,
}

impl RawBallots {
    /// Reorders an inferred roster by name, permuting every row to match.
    fn sort_roster(&mut self) {
        let mut order: Vec<usize> = (0..self.names.len()).collect();
        order.sort_by(|&a, &b| self.names[a].cmp(&self.names[b]));
        self.names = order.iter().map(|&i| self.names[i].clone()).collect();
        for (row, _) in &mut self.rows {
            *row = order.iter().map(|&i| row[i]).collect();
        }
    }
}

impl RawBallots {
    /// Index of `name`, registering it when the roster is still open.
    fn candidate(&mut self, name: &str, open: bool, line: usize) -> Result<usize, IoError> {
        if let Some(i) = self.names.iter().position(|n| n == name) {
            return Ok(i);
        }
        if !open {
            return Err(IoError::UnknownCandidate {
                line,
                name: name.to_string(),
            });
        }
        if !pnorm_committee::roster::is_valid_name(name) {
            return Err(parse_error(
                line,
                format!("invalid candidate name {name:?}"),
            ));
        }
        self.names.push(name.to_string());
        for (row, _) in &mut self.rows {
            row.push(0);
        }
        Ok(self.names.len() - 1)
    }

    fn into_profile(
        self,
        mode: Option<Mode>,
        opinion_budget: Option<usize>,
    ) -> Result<BallotProfile, IoError> {
        if self.rows.is_empty() {
            return Err(IoError::Empty);
        }
        let roster = CandidateRoster::new(self.names)?;
        let inferred = if self.rows.iter().any(|(v, _)| v.contains(&-1)) {
            Mode::Ternary
        } else {
            Mode::Binary
        };
        let mode = mode.unwrap_or(inferred);
        Ok(BallotProfile::from_raw(
            roster,
            self.rows,
            mode,
            opinion_budget,
        )?)
    }
}

fn check_header(names: &[String]) -> Result<(), IoError> {
    for (i, name) in names.iter().enumerate() {
        if names[..i].contains(name) {
            return Err(IoError::DuplicateCandidateHeader(name.clone()));
        }
    }
    Ok(())
}

/// Parses a ballot file into a validated profile.
///
/// `mode` of `None` infers the mode from the contents.
pub fn parse_ballots(
    source: &str,
    format: BallotFormat,
    mode: Option<Mode>,
    opinion_budget: Option<usize>,
) -> Result<BallotProfile, IoError> {
    let raw = match format {
        BallotFormat::CompactText => parse_compact(source)?,
        BallotFormat::MatrixCsv => parse_csv(source)?,
        BallotFormat::JsonLines => parse_json_lines(source)?,
    };
    raw.into_profile(mode, opinion_budget)
}

fn parse_weight(text: &str, line: usize) -> Result<u64, IoError> {
    let weight: u64 = text
        .trim()
        .parse()
        .map_err(|_| parse_error(line, format!("invalid weight {:?}", text.trim())))?;
    if weight == 0 {
        return Err(parse_error(line, "weight must be at least 1"));
    }
    Ok(weight)
}

fn parse_compact(source: &str) -> Result<RawBallots, IoError> {
    let mut raw = RawBallots {
        names: Vec::new(),
        rows: Vec::new(),
    };
    let mut open = true;
    for (i, text) in source.lines().enumerate() {
        let line = i + 1;
        let text = text.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let (head, body) = text
            .split_once(':')
            .ok_or_else(|| parse_error(line, "expected `<weight>: <candidates>`"))?;
        if head.trim() == "candidates" {
            if !raw.names.is_empty() || !raw.rows.is_empty() {
                return Err(parse_error(line, "the candidates line must come first"));
            }
            let names: Vec<String> = body.split_whitespace().map(String::from).collect();
            check_header(&names)?;
            for name in &names {
                raw.candidate(name, true, line)?;
            }
            open = false;
            continue;
        }
        let weight = parse_weight(head, line)?;
        let mut entries: Vec<(usize, i8)> = Vec::new();
        for token in body.split_whitespace() {
            let (value, name) = match token.as_bytes()[0] {
                b'+' => (1, &token[1..]),
                b'-' => (-1, &token[1..]),
                _ => (1, token),
            };
            if name.is_empty() {
                return Err(parse_error(line, format!("dangling sign in {token:?}")));
            }
            let index = raw.candidate(name, open, line)?;
            if entries.iter().any(|&(j, _)| j == index) {
                return Err(parse_error(line, format!("{name:?} appears twice")));
            }
            entries.push((index, value));
        }
        let mut row = vec![0i8; raw.names.len()];
        entries.into_iter().for_each(|(j, v)| row[j] = v);
        raw.rows.push((row, weight));
    }
    if open {
        raw.sort_roster();
    }
    Ok(raw)
}

fn parse_entry(cell: &str, line: usize) -> Result<i8, IoError> {
    match cell.trim() {
        "1" | "+1" => Ok(1),
        "0" => Ok(0),
        "-1" => Ok(-1),
        other => Err(parse_error(
            line,
            format!("entry {other:?} is not one of -1, 0, 1"),
        )),
    }
}

fn parse_csv(source: &str) -> Result<RawBallots, IoError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(source.as_bytes());
    let csv_error = |e: csv::Error| {
        let line = e.position().map_or(0, |p| p.line() as usize);
        parse_error(line, e.to_string())
    };
    let header = reader.headers().map_err(csv_error)?.clone();
    let has_weight = header
        .get(0)
        .is_some_and(|h| h.eq_ignore_ascii_case("weight"));
    let names: Vec<String> = header
        .iter()
        .skip(usize::from(has_weight))
        .map(String::from)
        .collect();
    if names.is_empty() {
        return Err(parse_error(1, "the header names no candidates"));
    }
    check_header(&names)?;
    for name in &names {
        if !pnorm_committee::roster::is_valid_name(name) {
            return Err(parse_error(1, format!("invalid candidate name {name:?}")));
        }
    }
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(csv_error)?;
        let line = record.position().map_or(0, |p| p.line() as usize);
        let mut cells = record.iter();
        let weight = if has_weight {
            parse_weight(cells.next().unwrap_or(""), line)?
        } else {
            1
        };
        let row = cells
            .map(|c| parse_entry(c, line))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push((row, weight));
    }
    Ok(RawBallots { names, rows })
}

fn parse_json_lines(source: &str) -> Result<RawBallots, IoError> {
    let mut raw = RawBallots {
        names: Vec::new(),
        rows: Vec::new(),
    };
    let mut open = true;
    for (i, text) in source.lines().enumerate() {
        let line = i + 1;
        if text.trim().is_empty() {
            continue;
        }
        let value: Value =
            serde_json::from_str(text).map_err(|e| parse_error(line, e.to_string()))?;
        let object = value
            .as_object()
            .ok_or_else(|| parse_error(line, "expected a JSON object"))?;
        if let Some(candidates) = object.get("candidates") {
            if !raw.names.is_empty() || !raw.rows.is_empty() {
                return Err(parse_error(line, "the candidates line must come first"));
            }
            let names: Vec<String> = candidates
                .as_array()
                .and_then(|a| a.iter().map(|v| v.as_str().map(String::from)).collect())
                .ok_or_else(|| parse_error(line, "candidates must be a list of strings"))?;
            check_header(&names)?;
            for name in &names {
                raw.candidate(name, true, line)?;
            }
            open = false;
            continue;
        }
        let weight = match object.get("weight") {
            None => 1,
            Some(w) => match w.as_u64() {
                Some(w) if w >= 1 => w,
                _ => return Err(parse_error(line, "weight must be a positive integer")),
            },
        };
        let opinions = match object.get("opinions") {
            None => Map::new(),
            Some(Value::Object(map)) => map.clone(),
            Some(_) => return Err(parse_error(line, "opinions must be an object")),
        };
        let mut entries = Vec::new();
        for (name, v) in &opinions {
            let v = match v.as_i64() {
                Some(v @ -1..=1) => v as i8,
                _ => {
                    return Err(parse_error(
                        line,
                        format!("opinion for {name:?} is not one of -1, 0, 1"),
                    ))
                }
            };
            entries.push((raw.candidate(name, open, line)?, v));
        }
        let mut row = vec![0i8; raw.names.len()];
        entries.into_iter().for_each(|(j, v)| row[j] = v);
        raw.rows.push((row, weight));
    }
    if open {
        raw.sort_roster();
    }
    Ok(raw)
}

/// Serializes a profile so that [`parse_ballots`] reads it back unchanged.
pub fn write_profile(profile: &BallotProfile, format: BallotFormat) -> String {
    let names = profile.roster().names();
    let mut out = String::new();
    match format {
        BallotFormat::CompactText => {
            writeln!(out, "candidates: {}", names.join(" ")).unwrap();
            for ballot in profile.ballots() {
                write!(out, "{}:", ballot.weight()).unwrap();
                for (name, v) in names.iter().zip(ballot.values()) {
                    match v {
                        1 => write!(out, " {name}").unwrap(),
                        -1 => write!(out, " -{name}").unwrap(),
                        _ => {}
                    }
                }
                out.push('\n');
            }
        }
        BallotFormat::MatrixCsv => {
            let mut writer = csv::Writer::from_writer(Vec::new());
            let header = std::iter::once("weight").chain(names.iter().map(String::as_str));
            writer.write_record(header).unwrap();
            for ballot in profile.ballots() {
                let row = std::iter::once(ballot.weight().to_string())
                    .chain(ballot.values().into_iter().map(|v| v.to_string()));
                writer.write_record(row).unwrap();
            }
            out = String::from_utf8(writer.into_inner().unwrap()).unwrap();
        }
        BallotFormat::JsonLines => {
            writeln!(out, "{}", json!({ "candidates": names })).unwrap();
            for ballot in profile.ballots() {
                let opinions: Map<String, Value> = names
                    .iter()
                    .zip(ballot.values())
                    .filter(|&(_, v)| v != 0)
                    .map(|(n, v)| (n.clone(), json!(v)))
                    .collect();
                let record = json!({ "weight": ballot.weight(), "opinions": opinions });
                writeln!(out, "{record}").unwrap();
            }
        }
    }
    out
}

/// Reads and parses a ballot file, choosing the format from the extension
/// unless one is given.
pub fn read_ballots(
    path: &Path,
    format: Option<BallotFormat>,
    mode: Option<Mode>,
    opinion_budget: Option<usize>,
) -> Result<BallotProfile, IoError> {
    let source = std::fs::read_to_string(path)?;
    let format = format.unwrap_or_else(|| BallotFormat::from_path(path));
    parse_ballots(&source, format, mode, opinion_budget)
}
