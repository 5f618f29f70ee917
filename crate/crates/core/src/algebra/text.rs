//! Text form of multivectors.
//!
//! Grammar: `term (("+" | "-") term)*` with `term = [number ["*"]] [blade]`,
//! `blade = "e" digit{1,6}`. Digits are distinct generator indices in any
//! order; a non-ascending label such as `e31` carries the sign of the
//! permutation that sorts it (`e31 = -e13`). Whitespace is ignored.

use std::collections::HashSet;

use super::blade::BasisBlade;
use super::multivector::Multivector;
use super::signature::Signature;
use crate::error::{Error, Result};

/// Output style for [`format_mv`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TextStyle {
    /// Ascending generator digits (`e13`).
    #[default]
    Canonical,
    /// Cyclic bivector labels for the first three generators (`e31`, and `e314` in n >= 4).
    Cyclic,
}

struct Lexer<'a> {
    chars: Vec<(usize, char)>,
    idx: usize,
    src: &'a str,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Self {
            chars: src.char_indices().filter(|(_, c)| !c.is_whitespace()).collect(),
            idx: 0,
            src,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.idx).map(|&(_, c)| c)
    }

    fn pos(&self) -> usize {
        self.chars.get(self.idx).map_or(self.src.len(), |&(p, _)| p)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.idx += 1;
        c
    }

    fn syntax(&self, msg: impl Into<String>) -> Error {
        Error::Syntax {
            pos: self.pos(),
            msg: msg.into(),
        }
    }

    fn number(&mut self) -> Result<Option<f64>> {
        let start = self.pos();
        let mut text = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_digit() || c == '.' {
                text.push(c);
                self.bump();
            } else {
                break;
            }
        }
        if text.is_empty() {
            return Ok(None);
        }
        text.parse::<f64>().map(Some).map_err(|_| Error::Syntax {
            pos: start,
            msg: format!("malformed number '{text}'"),
        })
    }

    fn blade(&mut self, sig: Signature) -> Result<Option<(BasisBlade, f64, String, usize)>> {
        if self.peek() != Some('e') {
            return Ok(None);
        }
        let start = self.pos();
        self.bump();
        let mut digits = Vec::new();
        while let Some(c) = self.peek() {
            match c.to_digit(10) {
                Some(d) => {
                    digits.push(d as usize);
                    self.bump();
                }
                None => break,
            }
        }
        let label = format!("e{}", digits.iter().map(|d| d.to_string()).collect::<String>());
        if digits.is_empty() {
            return Err(Error::Syntax {
                pos: start,
                msg: "blade 'e' needs generator digits".into(),
            });
        }
        let unknown = || Error::UnknownBlade {
            label: label.clone(),
            pos: start,
        };
        if digits.len() > 6 || digits.iter().any(|&d| d == 0 || d > sig.n()) {
            return Err(unknown());
        }
        let mut seen = 0usize;
        for &d in &digits {
            if seen >> (d - 1) & 1 == 1 {
                return Err(unknown());
            }
            seen |= 1 << (d - 1);
        }
        // parity of the sorting permutation
        let inversions = (0..digits.len())
            .flat_map(|i| (i + 1..digits.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| digits[i] > digits[j])
            .count();
        let sign = if inversions % 2 == 0 { 1.0 } else { -1.0 };
        Ok(Some((BasisBlade(seen), sign, label, start)))
    }
}

/// Parse the text form of a multivector of signature `sig`.
pub fn parse_mv(sig: Signature, text: &str) -> Result<Multivector> {
    let mut lx = Lexer::new(text);
    let mut mv = Multivector::zero(sig);
    let mut seen = HashSet::new();
    if lx.peek().is_none() {
        return Err(lx.syntax("empty multivector"));
    }
    let mut sign = 1.0;
    if let Some(c @ ('+' | '-')) = lx.peek() {
        lx.bump();
        sign = if c == '-' { -1.0 } else { 1.0 };
    }
    loop {
        let term_pos = lx.pos();
        let number = lx.number()?;
        let mut star = false;
        if number.is_some() && lx.peek() == Some('*') {
            lx.bump();
            star = true;
        }
        let blade = lx.blade(sig)?;
        if star && blade.is_none() {
            return Err(lx.syntax("expected blade after '*'"));
        }
        let (mask, blade_sign, label, pos) = match (number, blade) {
            (None, None) => return Err(lx.syntax("expected number or blade")),
            (_, Some(b)) => b,
            (Some(_), None) => (BasisBlade::SCALAR, 1.0, "1".to_string(), term_pos),
        };
        if !seen.insert(mask) {
            return Err(Error::DuplicateBlade { label, pos });
        }
        mv.set(mask, sign * blade_sign * number.unwrap_or(1.0));
        match lx.bump() {
            None => break,
            Some('+') => sign = 1.0,
            Some('-') => sign = -1.0,
            Some(c) => {
                lx.idx -= 1;
                return Err(lx.syntax(format!("unexpected '{c}'")));
            }
        }
        if lx.peek().is_none() {
            return Err(lx.syntax("dangling operator"));
        }
    }
    Ok(mv)
}

/// Label and coefficient sign used for `blade` under `style`.
pub fn styled_label(sig: Signature, blade: BasisBlade, style: TextStyle) -> (String, f64) {
    if style == TextStyle::Cyclic && sig.n() >= 3 && blade.0 & 0b111 == 0b101 {
        let mut label = String::from("e31");
        for k in blade.generators().filter(|&k| k > 3) {
            label.push(char::from_digit(k as u32, 10).unwrap());
        }
        return (label, -1.0);
    }
    (blade.label(), 1.0)
}

/// Deterministic text form: terms by grade, then mask; zero terms omitted.
pub fn format_mv(mv: &Multivector, style: TextStyle) -> String {
    let sig = mv.signature();
    let mut masks: Vec<usize> = (0..sig.dim()).filter(|&m| mv.coeffs()[m] != 0.0).collect();
    masks.sort_by_key(|&m| (m.count_ones(), m));
    if masks.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, m) in masks.into_iter().enumerate() {
        let blade = BasisBlade(m);
        let (label, flip) = styled_label(sig, blade, style);
        let c = flip * mv.coeffs()[m];
        let mag = c.abs();
        if idx == 0 {
            if c < 0.0 {
                out.push('-');
            }
        } else {
            out.push_str(if c < 0.0 { " - " } else { " + " });
        }
        if m == 0 {
            out.push_str(&mag.to_string());
        } else if mag == 1.0 {
            out.push_str(&label);
        } else {
            out.push_str(&format!("{mag}*{label}"));
        }
    }
    out
}
