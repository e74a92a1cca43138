//! Chain notation for preference relations.
//!
//! Weak orders on three alternatives render as a chain from most to least
//! preferred, `a1 ~ a2 < a3`. Everything else renders in cyclic form, every
//! adjacent pair spelled out and the first alternative repeated at the end:
//! `a1 < a2 < a3 ~ a1`. Cycles that only use `1` and `e` are walked in the
//! reverse direction so that they read with `<` and `~` alone.

use crate::error::ParseError;
use crate::relation::PreferenceRelation;
use crate::ternary::{Packed, TernaryValue};

fn link_symbol(v: TernaryValue) -> &'static str {
    match v {
        TernaryValue::Zero => "<",
        TernaryValue::E => "~",
        TernaryValue::One => ">",
    }
}

/// Renders `t` in chain notation.
pub fn render_chain(t: &PreferenceRelation) -> String {
    let a = t.len();
    if a == 3 && t.is_weak_order() {
        return render_weak_order3(t);
    }
    let vals = t.vals();
    let mut out = String::from("a1");
    if t.is_cycle() && !vals.contains(TernaryValue::Zero) {
        // walk a1 -> aA -> ... -> a2 -> a1
        let mut k = 0usize;
        for _ in 0..a {
            let prev = (k + a - 1) % a;
            out.push(' ');
            out.push_str(link_symbol(t.get(prev).negate()));
            out.push_str(&format!(" a{}", prev + 1));
            k = prev;
        }
    } else {
        for i in 0..a {
            out.push(' ');
            out.push_str(link_symbol(t.get(i)));
            out.push_str(&format!(" a{}", (i + 1) % a + 1));
        }
    }
    out
}

fn render_weak_order3(t: &PreferenceRelation) -> String {
    // score = number of alternatives strictly worse
    let mut score = [0u8; 3];
    for i in 0..3 {
        match t.get(i) {
            TernaryValue::Zero => score[i] += 1,
            TernaryValue::One => score[(i + 1) % 3] += 1,
            TernaryValue::E => {}
        }
    }
    let mut order = [0usize, 1, 2];
    order.sort_by(|&x, &y| score[y].cmp(&score[x]).then(x.cmp(&y)));
    let mut out = format!("a{}", order[0] + 1);
    for w in order.windows(2) {
        out.push_str(if score[w[0]] == score[w[1]] { " ~ " } else { " < " });
        out.push_str(&format!("a{}", w[1] + 1));
    }
    out
}

#[derive(Clone, Copy)]
struct Token {
    column: usize,
    kind: TokenKind,
}

#[derive(Clone, Copy, PartialEq)]
enum TokenKind {
    Alt(usize),
    Rel(TernaryValue),
}

fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        match c {
            c if c.is_whitespace() => i += 1,
            '<' | '≺' => {
                tokens.push(Token {
                    column,
                    kind: TokenKind::Rel(TernaryValue::Zero),
                });
                i += 1;
            }
            '~' | '∼' => {
                tokens.push(Token {
                    column,
                    kind: TokenKind::Rel(TernaryValue::E),
                });
                i += 1;
            }
            '>' | '≻' => {
                tokens.push(Token {
                    column,
                    kind: TokenKind::Rel(TernaryValue::One),
                });
                i += 1;
            }
            'a' => {
                let start = i + 1;
                let mut end = start;
                while end < chars.len() && chars[end].is_ascii_digit() {
                    end += 1;
                }
                if end == start {
                    return Err(ParseError::at_column(column, "expected an alternative index after 'a'"));
                }
                let digits: String = chars[start..end].iter().collect();
                let index: usize = digits
                    .parse()
                    .map_err(|_| ParseError::at_column(column, "alternative index too large"))?;
                if index == 0 {
                    return Err(ParseError::at_column(column, "alternatives are numbered from a1"));
                }
                tokens.push(Token {
                    column,
                    kind: TokenKind::Alt(index),
                });
                i = end;
            }
            other => return Err(ParseError::at_column(column, format!("unexpected character {other:?}"))),
        }
    }
    Ok(tokens)
}

/// Parses chain notation back into a relation; inverse of [`render_chain`].
pub fn parse_chain(text: &str) -> Result<PreferenceRelation, ParseError> {
    let tokens = tokenize(text)?;
    let end_column = text.chars().count() + 1;
    let mut alts: Vec<(usize, usize)> = Vec::new();
    let mut rels: Vec<TernaryValue> = Vec::new();
    for (k, tok) in tokens.iter().enumerate() {
        match (k % 2, tok.kind) {
            (0, TokenKind::Alt(a)) => alts.push((a - 1, tok.column)),
            (1, TokenKind::Rel(r)) => rels.push(r),
            (0, _) => return Err(ParseError::at_column(tok.column, "expected an alternative")),
            _ => return Err(ParseError::at_column(tok.column, "expected a relation symbol")),
        }
    }
    if alts.len() != rels.len() + 1 || rels.is_empty() {
        return Err(ParseError::at_column(end_column, "incomplete chain"));
    }
    if alts.first().map(|a| a.0) == alts.last().map(|a| a.0) {
        parse_cyclic(&alts, &rels)
    } else {
        parse_linear(&alts, &rels)
    }
}

fn parse_cyclic(alts: &[(usize, usize)], rels: &[TernaryValue]) -> Result<PreferenceRelation, ParseError> {
    let a = rels.len();
    if !(PreferenceRelation::MIN_ALTERNATIVES..=PreferenceRelation::MAX_ALTERNATIVES).contains(&a) {
        return Err(ParseError::at_column(
            alts[0].1,
            format!("cyclic chain over {a} alternatives"),
        ));
    }
    let mut seen = vec![false; a];
    for &(alt, column) in &alts[..a] {
        if alt >= a {
            return Err(ParseError::at_column(
                column,
                format!("a{} out of range for {a} alternatives", alt + 1),
            ));
        }
        if seen[alt] {
            return Err(ParseError::at_column(column, format!("a{} repeated", alt + 1)));
        }
        seen[alt] = true;
    }
    let mut entries: Vec<Option<TernaryValue>> = vec![None; a];
    for k in 0..a {
        let (x, column) = alts[k];
        let y = alts[k + 1].0;
        let (slot, value) = if y == (x + 1) % a {
            (x, rels[k])
        } else if x == (y + 1) % a {
            (y, rels[k].negate())
        } else {
            return Err(ParseError::at_column(
                column,
                format!("a{} and a{} are not cyclically adjacent", x + 1, y + 1),
            ));
        };
        if entries[slot].replace(value).is_some() {
            return Err(ParseError::at_column(column, "pair compared twice"));
        }
    }
    let values: Vec<TernaryValue> = entries.into_iter().map(|v| v.expect("all pairs covered")).collect();
    Ok(PreferenceRelation::from_packed(Packed::from_slice(&values)))
}

fn parse_linear(alts: &[(usize, usize)], rels: &[TernaryValue]) -> Result<PreferenceRelation, ParseError> {
    if alts.len() != 3 {
        return Err(ParseError::at_column(
            alts[0].1,
            "linear chains are only supported over three alternatives",
        ));
    }
    let mut level = [usize::MAX; 3];
    let mut current = 0usize;
    for (k, &(alt, column)) in alts.iter().enumerate() {
        if alt >= 3 {
            return Err(ParseError::at_column(
                column,
                format!("a{} out of range for 3 alternatives", alt + 1),
            ));
        }
        if level[alt] != usize::MAX {
            return Err(ParseError::at_column(column, format!("a{} repeated", alt + 1)));
        }
        if k > 0 {
            match rels[k - 1] {
                TernaryValue::Zero => current += 1,
                TernaryValue::E => {}
                TernaryValue::One => return Err(ParseError::at_column(column, "'>' is only allowed in cyclic chains")),
            }
        }
        level[alt] = current;
    }
    let values: Vec<TernaryValue> = (0..3)
        .map(|i| {
            let (x, y) = (level[i], level[(i + 1) % 3]);
            match x.cmp(&y) {
                std::cmp::Ordering::Less => TernaryValue::Zero,
                std::cmp::Ordering::Equal => TernaryValue::E,
                std::cmp::Ordering::Greater => TernaryValue::One,
            }
        })
        .collect();
    Ok(PreferenceRelation::from_packed(Packed::from_slice(&values)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(s: &str) -> PreferenceRelation {
        s.parse().unwrap()
    }

    #[test]
    fn renders_weak_orders_as_chains() {
        assert_eq!(render_chain(&rel("e01")), "a1 ~ a2 < a3");
        assert_eq!(render_chain(&rel("10e")), "a2 < a1 ~ a3");
        assert_eq!(render_chain(&rel("0e1")), "a1 < a2 ~ a3");
        assert_eq!(render_chain(&rel("eee")), "a1 ~ a2 ~ a3");
        assert_eq!(render_chain(&rel("010")), "a3 < a1 < a2");
        assert_eq!(render_chain(&rel("110")), "a3 < a2 < a1");
    }

    #[test]
    fn renders_cycles_in_cyclic_form() {
        assert_eq!(render_chain(&rel("00e")), "a1 < a2 < a3 ~ a1");
        assert_eq!(render_chain(&rel("000")), "a1 < a2 < a3 < a1");
        assert_eq!(render_chain(&rel("111")), "a1 < a3 < a2 < a1");
        assert_eq!(render_chain(&rel("11e")), "a1 ~ a3 < a2 < a1");
    }

    #[test]
    fn round_trips_every_three_alternative_relation() {
        for rank in 0..27 {
            let t = PreferenceRelation::from_rank(3, rank).unwrap();
            assert_eq!(parse_chain(&render_chain(&t)).unwrap(), t, "{t}");
        }
    }

    #[test]
    fn round_trips_larger_relations() {
        for s in ["0e1e", "000e1", "1111", "eeee"] {
            let t = rel(s);
            assert_eq!(parse_chain(&render_chain(&t)).unwrap(), t, "{s}");
        }
    }

    #[test]
    fn accepts_unicode_symbols() {
        assert_eq!(parse_chain("a1 ∼ a2 ≺ a3").unwrap(), rel("e01"));
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse_chain("a1 < b2").unwrap_err();
        assert_eq!(err.column, 6);
        let err = parse_chain("a1 < a1 < a2").unwrap_err();
        assert_eq!(err.column, 6);
        let err = parse_chain("a1 <").unwrap_err();
        assert_eq!(err.column, 5);
        assert!(parse_chain("a1 < a3 < a2 < a4").is_err());
    }
}
