//! Text formats for profiles, SWF tables and witnesses.
//!
//! Profiles:
//!
//! ```text
//! profile A=3 N=3
//! # row j compares a_j with its cyclic successor
//! 0 1 0
//! 0 0 1
//! 1 0 0
//! ```
//!
//! SWFs are either `swf N=<n>` followed by `builtin <name>`, or three
//! `component <j>` blocks listing every input tuple with its output
//! (`0e 1`). Witness files are a profile followed by `aggregate: <t>` and
//! `provenance: <name>` lines.

use std::collections::BTreeMap;

use crate::error::{Error, ParseError, Result};
use crate::pairs::PairwisePreferences;
use crate::profile::Profile;
use crate::relation::{parse_symbols, PreferenceRelation};
use crate::swf::{BuiltinSwf, IiaSwf, PairwiseComparisonFunction, MAX_TABLE_INDIVIDUALS};
use crate::ternary::{pow3, TernaryValue};
use crate::witness::{ContradictoryPair, CycleWitness, Provenance};

/// Non-blank lines with comments stripped: `(line number, column offset,
/// text)`.
fn content_lines(text: &str) -> Vec<(usize, usize, &str)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, line)| {
            let line = line.split('#').next().unwrap_or("");
            let trimmed = line.trim_start();
            let offset = line.len() - trimmed.len();
            let trimmed = trimmed.trim_end();
            (!trimmed.is_empty()).then_some((i + 1, offset, trimmed))
        })
        .collect()
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse(ParseError::new(line, column, message))
}

/// Parses `key=<usize>` at 1-based `column`.
fn parse_assignment(token: &str, key: &str, line: usize, column: usize) -> Result<usize> {
    token
        .strip_prefix(key)
        .and_then(|rest| rest.strip_prefix('='))
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| err(line, column, format!("expected {key}=<count>, found {token:?}")))
}

/// Splits on whitespace, keeping each token's 1-based column.
fn tokens(text: &str, offset: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in text.char_indices().chain(std::iter::once((text.len(), ' '))) {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((offset + s + 1, &text[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    out
}

fn parse_profile_lines(lines: &[(usize, usize, &str)]) -> Result<(Profile, usize)> {
    let Some(&(hl, ho, header)) = lines.first() else {
        return Err(err(1, 1, "empty input, expected `profile A=3 N=<n>`"));
    };
    let toks = tokens(header, ho);
    if toks.len() != 3 || toks[0].1 != "profile" {
        return Err(err(hl, ho + 1, "expected header `profile A=<a> N=<n>`"));
    }
    let a = parse_assignment(toks[1].1, "A", hl, toks[1].0)?;
    let n = parse_assignment(toks[2].1, "N", hl, toks[2].0)?;
    if a != 3 {
        return Err(Error::UnsupportedAlternativeCount(a));
    }
    let mut rows = Vec::with_capacity(3);
    for j in 0..3 {
        let Some(&(line, offset, text)) = lines.get(1 + j) else {
            return Err(err(
                lines.last().map_or(hl, |l| l.0) + 1,
                1,
                format!("missing row {}", j + 1),
            ));
        };
        let toks = tokens(text, offset);
        if toks.len() != n {
            return Err(err(
                line,
                offset + 1,
                format!("row {} has {} entries, expected {n}", j + 1, toks.len()),
            ));
        }
        let mut values = Vec::with_capacity(n);
        for (column, tok) in toks {
            let mut chars = tok.chars();
            match (chars.next().and_then(TernaryValue::from_symbol), chars.next()) {
                (Some(v), None) => values.push(v),
                _ => return Err(err(line, column, format!("expected one of 0, e, 1, found {tok:?}"))),
            }
        }
        rows.push(PairwisePreferences::new(&values)?);
    }
    let profile = Profile::from_rows(&rows).map_err(|e| match e {
        Error::CycleColumn(i) => err(
            lines[1].0,
            1,
            format!("column {i} is a preference cycle, not a weak order"),
        ),
        other => other,
    })?;
    Ok((profile, 4))
}

pub fn parse_profile(text: &str) -> Result<Profile> {
    let lines = content_lines(text);
    let (profile, used) = parse_profile_lines(&lines)?;
    if let Some(&(line, offset, _)) = lines.get(used) {
        return Err(err(line, offset + 1, "unexpected content after the profile"));
    }
    Ok(profile)
}

pub fn write_profile(m: &Profile) -> String {
    let mut out = format!("profile A=3 N={}\n", m.n());
    for row in m.rows() {
        let symbols: Vec<String> = row.entries().map(|v| v.to_string()).collect();
        out.push_str(&symbols.join(" "));
        out.push('\n');
    }
    out
}

/// A witness file's contents, before any SWF re-evaluates it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessRecord {
    pub profile: Profile,
    pub aggregate: PreferenceRelation,
    pub provenance: Provenance,
}

impl From<&CycleWitness> for WitnessRecord {
    fn from(w: &CycleWitness) -> Self {
        WitnessRecord {
            profile: *w.profile(),
            aggregate: w.aggregate(),
            provenance: w.provenance(),
        }
    }
}

pub fn write_witness(record: &WitnessRecord) -> String {
    format!(
        "{}aggregate: {}\nprovenance: {}\n",
        write_profile(&record.profile),
        record.aggregate,
        record.provenance
    )
}

/// The two witness records of a contradictory pair: `m` with its case, and
/// `m'` as the contradictory partner.
pub fn pair_records(pair: &ContradictoryPair) -> (WitnessRecord, WitnessRecord) {
    let (up, down) = pair.aggregates();
    (
        WitnessRecord {
            profile: *pair.m(),
            aggregate: up,
            provenance: pair.case(),
        },
        WitnessRecord {
            profile: *pair.m_prime(),
            aggregate: down,
            provenance: Provenance::ContradictoryPartner,
        },
    )
}

pub fn parse_witness(text: &str) -> Result<WitnessRecord> {
    let lines = content_lines(text);
    let (profile, used) = parse_profile_lines(&lines)?;
    let mut fields = BTreeMap::new();
    for &(line, offset, body) in &lines[used..] {
        let Some((key, value)) = body.split_once(':') else {
            return Err(err(line, offset + 1, "expected `key: value`"));
        };
        let column = offset + key.len() + 2 + (value.len() - value.trim_start().len());
        if fields.insert(key.trim(), (line, column, value.trim())).is_some() {
            return Err(err(line, offset + 1, format!("duplicate field {:?}", key.trim())));
        }
    }
    let last = lines.last().map_or(1, |l| l.0);
    let field = |name: &str| {
        fields
            .get(name)
            .copied()
            .ok_or_else(|| err(last + 1, 1, format!("missing `{name}:` line")))
    };
    let (line, column, value) = field("aggregate")?;
    let aggregate = parse_symbols(value)
        .map_err(|e| Error::Parse(e.relocate(line, column - 1)))
        .and_then(|v| PreferenceRelation::new(&v))?;
    let (line, column, value) = field("provenance")?;
    let provenance = value
        .parse()
        .map_err(|_| err(line, column, format!("unknown provenance {value:?}")))?;
    if let Some(key) = fields.keys().find(|k| !["aggregate", "provenance"].contains(k)) {
        let (line, _, _) = fields[key];
        return Err(err(line, 1, format!("unknown field {key:?}")));
    }
    Ok(WitnessRecord {
        profile,
        aggregate,
        provenance,
    })
}

/// `builtin:<name>[:<args>]:<n>`, e.g. `builtin:majority:3`,
/// `builtin:dictator:1:2`, `builtin:hierarchical:2,1:2`.
pub fn parse_builtin_spec(spec: &str) -> Result<IiaSwf> {
    let invalid = |message: String| Error::Invalid {
        what: "builtin SWF",
        message,
    };
    let rest = spec
        .strip_prefix("builtin:")
        .ok_or_else(|| invalid(format!("{spec:?} does not start with `builtin:`")))?;
    let (name, n) = rest.rsplit_once(':').ok_or_else(|| {
        invalid(format!(
            "{spec:?} is missing the individual count, e.g. builtin:majority:3"
        ))
    })?;
    let n: usize = n
        .parse()
        .map_err(|_| invalid(format!("bad individual count {n:?} in {spec:?}")))?;
    name.parse::<BuiltinSwf>()?.build(n)
}

pub fn parse_swf(text: &str) -> Result<IiaSwf> {
    let lines = content_lines(text);
    let Some(&(hl, ho, header)) = lines.first() else {
        return Err(err(1, 1, "empty input, expected `swf N=<n>`"));
    };
    let toks = tokens(header, ho);
    if toks.len() != 2 || toks[0].1 != "swf" {
        return Err(err(hl, ho + 1, "expected header `swf N=<n>`"));
    }
    let n = parse_assignment(toks[1].1, "N", hl, toks[1].0)?;
    if !(2..=MAX_TABLE_INDIVIDUALS).contains(&n) {
        return Err(err(hl, toks[1].0, format!("N={n} outside 2..={MAX_TABLE_INDIVIDUALS}")));
    }
    let body = &lines[1..];
    let Some(&(line, offset, first)) = body.first() else {
        return Err(err(hl + 1, 1, "expected `builtin <name>` or `component 1`"));
    };
    let first_toks = tokens(first, offset);
    if first_toks[0].1 == "builtin" {
        if body.len() > 1 {
            return Err(err(body[1].0, body[1].1 + 1, "unexpected content after builtin"));
        }
        let name = first_toks[1..].iter().map(|t| t.1).collect::<Vec<_>>().join(":");
        if name.is_empty() {
            return Err(err(line, offset + 1, "missing builtin name"));
        }
        let builtin: BuiltinSwf = name
            .parse()
            .map_err(|e: Error| err(line, first_toks[1].0, e.to_string()))?;
        return builtin.build(n);
    }
    let size = pow3(n) as usize;
    let mut tables: [Option<Vec<Option<TernaryValue>>>; 3] = [None, None, None];
    let mut current: Option<(usize, usize)> = None;
    for &(line, offset, text) in body {
        let toks = tokens(text, offset);
        if toks[0].1 == "component" {
            let j = match toks.get(1).map(|t| t.1.parse::<usize>()) {
                Some(Ok(j)) if (1..=3).contains(&j) && toks.len() == 2 => j,
                _ => return Err(err(line, offset + 1, "expected `component <1|2|3>`")),
            };
            if tables[j - 1].is_some() {
                return Err(err(line, offset + 1, format!("component {j} defined twice")));
            }
            tables[j - 1] = Some(vec![None; size]);
            current = Some((j, line));
            continue;
        }
        let Some((j, _)) = current else {
            return Err(err(line, offset + 1, "table entry before any `component` line"));
        };
        if toks.len() != 2 {
            return Err(err(line, offset + 1, "expected `<input tuple> <output>`"));
        }
        let (input_col, input) = toks[0];
        let (output_col, output) = toks[1];
        let values = parse_symbols(input).map_err(|e| Error::Parse(e.relocate(line, input_col - 1)))?;
        if values.len() != n {
            return Err(err(
                line,
                input_col,
                format!("input tuple {input} has {} entries, expected {n}", values.len()),
            ));
        }
        let input = PairwisePreferences::new(&values)?;
        let mut out = output.chars();
        let value = match (out.next().and_then(TernaryValue::from_symbol), out.next()) {
            (Some(v), None) => v,
            _ => {
                return Err(err(
                    line,
                    output_col,
                    format!("expected output 0, e or 1, found {output:?}"),
                ))
            }
        };
        let slot = &mut tables[j - 1].as_mut().expect("current component")[input.rank() as usize];
        if slot.replace(value).is_some() {
            return Err(err(
                line,
                input_col,
                format!("component {j}: duplicate input tuple {input}"),
            ));
        }
    }
    let mut components = Vec::with_capacity(3);
    for (j, table) in tables.into_iter().enumerate() {
        let Some(table) = table else {
            return Err(err(
                lines.last().map_or(1, |l| l.0) + 1,
                1,
                format!("missing component {}", j + 1),
            ));
        };
        if let Some(rank) = table.iter().position(Option::is_none) {
            let missing = PairwisePreferences::from_rank(n, rank as u64)?;
            return Err(Error::Invalid {
                what: "SWF table",
                message: format!("component {}: missing input tuple {missing}", j + 1),
            });
        }
        components.push(PairwiseComparisonFunction::new(
            n,
            table.into_iter().map(Option::unwrap).collect(),
        )?);
    }
    let [a, b, c]: [PairwiseComparisonFunction; 3] = components.try_into().expect("three components");
    IiaSwf::new(a, b, c)
}

pub fn write_swf(swf: &IiaSwf) -> String {
    let mut out = format!("swf N={}\n", swf.n());
    for (j, s) in swf.components().iter().enumerate() {
        out.push_str(&format!("component {}\n", j + 1));
        for (input, output) in s.iter() {
            out.push_str(&format!("{input} {output}\n"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::swf::*;

    const TABLE2: &str = "profile A=3 N=3\n# Condorcet\n0 1 0\n0 0 1\n1 0 0\n";

    #[test]
    fn profile_round_trip() {
        let m = parse_profile(TABLE2).unwrap();
        assert_eq!(m.to_string(), "r1=010 r2=001 r3=100");
        assert_eq!(parse_profile(&write_profile(&m)).unwrap(), m);
    }

    #[test]
    fn profile_errors_have_positions() {
        let e = parse_profile("profile A=3 N=2\n0 1\n0 x\n1 0\n").unwrap_err();
        assert_eq!(
            e,
            Error::Parse(ParseError::new(3, 3, "expected one of 0, e, 1, found \"x\""))
        );
        let e = parse_profile("profile A=3 N=2\n0 0\n0 0\n0 0\n").unwrap_err();
        assert!(e.to_string().contains("column 1 is a preference cycle"));
        assert!(matches!(parse_profile("profile A=3 N=3\n0 1\n"), Err(Error::Parse(p)) if p.line == 2));
        assert!(matches!(parse_profile("prof A=3 N=3"), Err(Error::Parse(p)) if p.line == 1));
        assert_eq!(
            parse_profile("profile A=4 N=2\n").unwrap_err(),
            Error::UnsupportedAlternativeCount(4)
        );
    }

    #[test]
    fn witness_round_trip() {
        let record = WitnessRecord {
            profile: parse_profile(TABLE2).unwrap(),
            aggregate: "000".parse().unwrap(),
            provenance: Provenance::ArrowCase2,
        };
        let text = write_witness(&record);
        assert!(text.ends_with("aggregate: 000\nprovenance: arrow-case-2\n"));
        assert_eq!(parse_witness(&text).unwrap(), record);
        assert!(parse_witness(TABLE2).is_err());
    }

    #[test]
    fn swf_round_trip() {
        for swf in [
            pairwise_majority(2).unwrap(),
            hierarchical_dictator(&[2, 1], 3).unwrap(),
        ] {
            assert_eq!(parse_swf(&write_swf(&swf)).unwrap(), swf);
        }
        assert_eq!(
            parse_swf("swf N=3\nbuiltin majority\n").unwrap(),
            pairwise_majority(3).unwrap()
        );
        assert_eq!(
            parse_swf("swf N=2\nbuiltin dictator:2\n").unwrap(),
            dictator(2, 2).unwrap()
        );
    }

    #[test]
    fn swf_missing_and_duplicate_rows() {
        let full = write_swf(&pairwise_majority(2).unwrap());
        let missing = full.replacen("0e 0\n", "", 1);
        let e = parse_swf(&missing).unwrap_err();
        assert!(e.to_string().contains("component 1: missing input tuple 0e"), "{e}");
        let duplicate = full.replacen("0e 0\n", "0e 0\n0e 1\n", 1);
        let e = parse_swf(&duplicate).unwrap_err();
        assert!(e.to_string().contains("duplicate input tuple 0e"), "{e}");
    }

    #[test]
    fn builtin_specs() {
        assert_eq!(
            parse_builtin_spec("builtin:majority:3").unwrap(),
            pairwise_majority(3).unwrap()
        );
        assert_eq!(
            parse_builtin_spec("builtin:dictator:1:2").unwrap(),
            dictator(1, 2).unwrap()
        );
        assert_eq!(
            parse_builtin_spec("builtin:hierarchical:2,1:2").unwrap(),
            hierarchical_dictator(&[2, 1], 2).unwrap()
        );
        assert!(parse_builtin_spec("builtin:majority").is_err());
        assert!(parse_builtin_spec("majority:3").is_err());
    }
}
