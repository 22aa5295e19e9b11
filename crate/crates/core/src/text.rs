//! Textual encodings.
//!
//! * Cycle notation: `(8 3 4 5)(9)(11 1 10)`. Letters may be separated by
//!   spaces or commas; letters that do not appear are fixed points. The
//!   empty permutation prints as `()`.
//! * One-line notation: `2,3,5,1,4`.
//! * Word: the hat word, also comma-separated.
//! * Group elements: `x=(0,1,0,2,1); tau=(2)(3)(5 1 4)`.
//!
//! All parse errors carry the 1-based column (or line) and the offending
//! token.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::gsg::GsgElement;
use crate::perm::{stanley_hat, stanley_unhat, Permutation, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} at {location}: `{token}`")]
pub struct ParseError {
    pub location: Location,
    pub token: String,
    pub message: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    Column(usize),
    Line(usize),
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Column(c) => write!(f, "column {c}"),
            Location::Line(l) => write!(f, "line {l}"),
        }
    }
}

fn err(column: usize, token: impl Into<String>, message: impl Into<String>) -> ParseError {
    ParseError {
        location: Location::Column(column),
        token: token.into(),
        message: message.into(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Style {
    Cycles,
    OneLine,
    Word,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Open,
    Close,
    Number(usize),
}

/// Splits into parentheses and numbers with their 1-based columns. Spaces
/// and commas separate; anything else is an error.
fn tokenize(text: &str) -> Result<Vec<(usize, Token, String)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some((idx, c)) = chars.next() {
        let col = text[..idx].chars().count() + 1;
        match c {
            '(' => out.push((col, Token::Open, "(".into())),
            ')' => out.push((col, Token::Close, ")".into())),
            c if c.is_whitespace() || c == ',' => {}
            c if c.is_ascii_digit() => {
                let mut digits = c.to_string();
                while let Some(&(_, d)) = chars.peek() {
                    if !d.is_ascii_alphanumeric() {
                        break;
                    }
                    digits.push(d);
                    chars.next();
                }
                let value = digits
                    .parse::<usize>()
                    .map_err(|_| err(col, digits.clone(), "not a decimal integer"))?;
                out.push((col, Token::Number(value), digits));
            }
            other => {
                let mut token = other.to_string();
                while let Some(&(_, d)) = chars.peek() {
                    if d.is_whitespace() || "(),".contains(d) {
                        break;
                    }
                    token.push(d);
                    chars.next();
                }
                return Err(err(col, token, "unexpected token"));
            }
        }
    }
    Ok(out)
}

fn check_letter(col: usize, token: &str, value: usize, m: usize, seen: &mut [bool]) -> Result<(), ParseError> {
    if value == 0 || value > m {
        return Err(err(col, token, format!("letter out of range 1..={m}")));
    }
    if std::mem::replace(&mut seen[value - 1], true) {
        return Err(err(col, token, "duplicate letter"));
    }
    Ok(())
}

fn is_cycle_form(text: &str) -> bool {
    text.trim_start().starts_with('(')
}

/// Parses cycle or one-line notation into a permutation on `{1..m}`.
pub fn parse_permutation(text: &str, m: usize) -> Result<Permutation, ParseError> {
    if is_cycle_form(text) {
        parse_cycles(text, m)
    } else {
        parse_one_line(text, m)
    }
}

fn parse_cycles(text: &str, m: usize) -> Result<Permutation, ParseError> {
    let tokens = tokenize(text)?;
    let mut seen = vec![false; m];
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut current: Option<Vec<usize>> = None;
    let mut open_col = 0;
    for (col, tok, raw) in tokens {
        match (tok, current.as_mut()) {
            (Token::Open, None) => {
                current = Some(Vec::new());
                open_col = col;
            }
            (Token::Open, Some(_)) => return Err(err(col, raw, "nested parenthesis")),
            (Token::Close, Some(_)) => cycles.push(current.take().expect("inside a cycle")),
            (Token::Close, None) => return Err(err(col, raw, "unmatched closing parenthesis")),
            (Token::Number(v), Some(c)) => {
                check_letter(col, &raw, v, m, &mut seen)?;
                c.push(v);
            }
            (Token::Number(_), None) => {
                return Err(err(col, raw, "letter outside parentheses"))
            }
        }
    }
    if current.is_some() {
        return Err(err(open_col, "(", "unclosed parenthesis"));
    }
    Ok(Permutation::from_cycles(&cycles, m).expect("letters validated"))
}

fn parse_list(text: &str) -> Result<Vec<(usize, usize, String)>, ParseError> {
    let mut out = Vec::new();
    for (col, tok, raw) in tokenize(text)? {
        match tok {
            Token::Number(v) => out.push((col, v, raw)),
            _ => return Err(err(col, raw, "parenthesis in one-line notation")),
        }
    }
    Ok(out)
}

fn parse_one_line(text: &str, m: usize) -> Result<Permutation, ParseError> {
    let values = parse_list(text)?;
    let mut seen = vec![false; m];
    for (col, v, raw) in &values {
        check_letter(*col, raw, *v, m, &mut seen)?;
    }
    if values.len() != m {
        let col = text.chars().count() + 1;
        return Err(err(
            col,
            text.trim(),
            format!("expected {m} entries, found {}", values.len()),
        ));
    }
    Ok(Permutation::new(values.into_iter().map(|(_, v, _)| v).collect()).expect("validated"))
}

/// Parses a comma-separated hat word.
pub fn parse_word(text: &str) -> Result<Word, ParseError> {
    let values = parse_list(text)?;
    let m = values.len();
    let mut seen = vec![false; m];
    for (col, v, raw) in &values {
        check_letter(*col, raw, *v, m, &mut seen)?;
    }
    Ok(Word::new(values.into_iter().map(|(_, v, _)| v).collect()).expect("validated"))
}

/// Parses `text` as written by [`format_permutation`] with `style`.
pub fn parse_permutation_as(text: &str, m: usize, style: Style) -> Result<Permutation, ParseError> {
    match style {
        Style::Cycles => parse_cycles(text, m),
        Style::OneLine => parse_one_line(text, m),
        Style::Word => {
            let w = parse_word(text)?;
            if w.len() != m {
                return Err(err(1, text.trim(), format!("expected {m} letters, found {}", w.len())));
            }
            Ok(stanley_unhat(&w))
        }
    }
}

/// Domain size implied by the text: the entry count for one-line notation,
/// the largest letter for cycle notation.
pub fn infer_size(text: &str) -> Result<usize, ParseError> {
    if is_cycle_form(text) {
        Ok(tokenize(text)?
            .into_iter()
            .filter_map(|(_, t, _)| match t {
                Token::Number(v) => Some(v),
                _ => None,
            })
            .max()
            .unwrap_or(0))
    } else {
        Ok(parse_list(text)?.len())
    }
}

fn join(values: &[usize]) -> String {
    values
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

pub fn format_permutation(p: &Permutation, style: Style) -> String {
    match style {
        Style::Cycles => p.canonical_cycles().to_string(),
        Style::OneLine => join(p.images()),
        Style::Word => join(stanley_hat(p).letters()),
    }
}

/// `(a1,...,an)` or `a1,...,an`.
pub fn parse_residues(text: &str) -> Result<Vec<usize>, ParseError> {
    let trimmed = text.trim();
    let inner = match trimmed.strip_prefix('(') {
        Some(rest) => rest
            .strip_suffix(')')
            .ok_or_else(|| err(1, trimmed, "unclosed parenthesis"))?,
        None => trimmed,
    };
    Ok(parse_list(inner)?.into_iter().map(|(_, v, _)| v).collect())
}

pub fn format_residues(x: &[usize]) -> String {
    format!("({})", join(x))
}

/// Parses `x=(...); tau=(...)`. `τ` acts on as many letters as `x` has.
pub fn parse_gsg(text: &str, k: usize) -> Result<GsgElement, ParseError> {
    let mut x = None;
    let mut tau = None;
    let mut offset = 0;
    for part in text.split(';') {
        let col = offset + 1;
        offset += part.chars().count() + 1;
        if part.trim().is_empty() {
            continue;
        }
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| err(col, part.trim(), "expected key=value"))?;
        match key.trim() {
            "x" => x = Some(parse_residues(value)?),
            "tau" => tau = Some(value.to_string()),
            other => return Err(err(col, other, "unknown key")),
        }
    }
    let x = x.ok_or_else(|| err(1, text.trim(), "missing x"))?;
    let tau = parse_permutation(tau.as_deref().ok_or_else(|| err(1, text.trim(), "missing tau"))?, x.len())?;
    GsgElement::new(k, x, tau).map_err(|e| err(1, text.trim(), e.to_string()))
}

pub const DOCUMENT_KEYS: [&str; 6] = ["k", "n", "pi", "delta", "x", "tau"];

/// Reads `key = value` (or `key: value`) lines. Blank lines and lines
/// starting with `#` are skipped.
pub fn parse_document(text: &str) -> Result<BTreeMap<String, String>, ParseError> {
    let mut out = BTreeMap::new();
    for (idx, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let line_err = |token: &str, message: &str| ParseError {
            location: Location::Line(idx + 1),
            token: token.to_string(),
            message: message.to_string(),
        };
        let split = match (trimmed.find('='), trimmed.find(':')) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        let at = split.ok_or_else(|| line_err(trimmed, "expected key = value"))?;
        let key = trimmed[..at].trim();
        let value = trimmed[at + 1..].trim();
        if !DOCUMENT_KEYS.contains(&key) {
            return Err(line_err(key, "unknown key"));
        }
        if out.insert(key.to_string(), value.to_string()).is_some() {
            return Err(line_err(key, "duplicate key"));
        }
    }
    Ok(out)
}
