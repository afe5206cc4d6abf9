//! Text and JSON formats shared by every module.
//!
//! Letters: `y<k>`, `[x1 x2]` (commutative monomial, auto-sorted), `(x1 x2)`
//! (word letter), bare `x<i>` for the degree-one letter of generator `i`,
//! and `a`..`z` / `g<i>` for atoms of the zero algebra.
//! Words join letters with `.`; `1` is the empty word.
//! Elements are sums like `2*y1.y1 - 3/2*y2 + 1`.
//! Free terms: `(t < u)`, `(t > u)`, `(t . u)` over generators `a`..`z`, `g<i>`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::coeff::{atom_name, AlgebraKind, CoeffAlgebra, Letter};
use crate::error::{Error, Result};
use crate::freectd::{FreeTerm, OUPartition, Op};
use crate::lincomb::LinComb;
use crate::scalar::Scalar;
use crate::tensorq::{Tensor, TensorPower, TensorSquare, Word};
use crate::Q;

fn parse_err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse { pos, msg: msg.into() }
}

fn parse_index(s: &str, pos: usize) -> Result<u32> {
    match s.parse::<u32>() {
        Ok(n) if n >= 1 => Ok(n),
        _ => Err(parse_err(pos, format!("expected a positive index, found `{s}`"))),
    }
}

/// Parses `x<i>` inside brackets.
fn parse_generator_token(tok: &str, pos: usize) -> Result<u32> {
    match tok.strip_prefix('x') {
        Some(rest) => parse_index(rest, pos + 1),
        None => Err(parse_err(pos, format!("expected `x<i>`, found `{tok}`"))),
    }
}

fn bracket_contents(body: &str, offset: usize) -> Result<Vec<u32>> {
    let mut out = Vec::new();
    let mut cursor = 0;
    for tok in body.split_whitespace() {
        let at = body[cursor..].find(tok).map(|i| i + cursor).unwrap_or(cursor);
        cursor = at + tok.len();
        out.push(parse_generator_token(tok, offset + at)?);
    }
    if out.is_empty() {
        return Err(parse_err(offset, "empty bracket letter"));
    }
    Ok(out)
}

fn parse_letter_at(alg: &CoeffAlgebra, raw: &str, offset: usize) -> Result<Letter> {
    let lead = raw.len() - raw.trim_start().len();
    let s = raw.trim();
    let offset = offset + lead;
    if s.is_empty() {
        return Err(parse_err(offset, "expected a letter"));
    }
    let letter = if let Some(body) = s.strip_prefix('[') {
        let body = body.strip_suffix(']').ok_or_else(|| parse_err(offset + s.len(), "missing `]`"))?;
        Letter::monomial(bracket_contents(body, offset + 1)?)?
    } else if let Some(body) = s.strip_prefix('(') {
        let body = body.strip_suffix(')').ok_or_else(|| parse_err(offset + s.len(), "missing `)`"))?;
        Letter::word(bracket_contents(body, offset + 1)?)?
    } else if let Some(rest) = s.strip_prefix('y').filter(|r| !r.is_empty()) {
        Letter::y(parse_index(rest, offset + 1)?)?
    } else if let Some(rest) = s.strip_prefix('x').filter(|r| !r.is_empty()) {
        let i = parse_index(rest, offset + 1)?;
        if alg.kind() == AlgebraKind::StuffleY {
            return Err(parse_err(offset, "stuffle-y letters are written `y<k>`"));
        }
        alg.generator(i)?
    } else if let Some(rest) = s.strip_prefix('g').filter(|r| !r.is_empty()) {
        Letter::atom(parse_index(rest, offset + 1)?)?
    } else if s.len() == 1 && s.as_bytes()[0].is_ascii_lowercase() {
        Letter::atom(u32::from(s.as_bytes()[0] - b'a') + 1)?
    } else {
        return Err(parse_err(offset, format!("unrecognised letter `{s}`")));
    };
    alg.validate(&letter)?;
    Ok(letter)
}

pub fn parse_letter(alg: &CoeffAlgebra, s: &str) -> Result<Letter> {
    parse_letter_at(alg, s, 0)
}

fn parse_word_at(alg: &CoeffAlgebra, raw: &str, offset: usize) -> Result<Word> {
    let s = raw.trim();
    if s == "1" {
        return Ok(Word::empty());
    }
    let mut letters = Vec::new();
    let mut start = 0;
    let mut depth = 0i32;
    for (i, ch) in raw.char_indices() {
        match ch {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            '.' if depth == 0 => {
                letters.push(parse_letter_at(alg, &raw[start..i], offset + start)?);
                start = i + 1;
            }
            _ => {}
        }
    }
    letters.push(parse_letter_at(alg, &raw[start..], offset + start)?);
    Ok(Word::new(letters))
}

pub fn parse_word(alg: &CoeffAlgebra, s: &str) -> Result<Word> {
    parse_word_at(alg, s, 0)
}

pub fn parse_rational(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Q::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Q::from_integer),
    }
}

/// Parses a rational linear combination of words.
pub fn parse_element(alg: &CoeffAlgebra, s: &str) -> Result<Tensor<Q>> {
    if !s.is_ascii() {
        let pos = s.char_indices().find(|(_, c)| !c.is_ascii()).map(|(i, _)| i).unwrap_or(0);
        return Err(parse_err(pos, "non-ASCII character"));
    }
    // split into signed summands at bracket depth 0
    let mut pieces: Vec<(bool, usize, &str)> = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut negative = false;
    for (i, ch) in s.char_indices() {
        match ch {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            '+' | '-' if depth == 0 => {
                let before = &s[start..i];
                if !before.trim().is_empty() {
                    pieces.push((negative, start, before));
                } else if !(pieces.is_empty() && start == 0) {
                    // only a leading sign may have nothing in front of it
                    return Err(parse_err(i, "missing term before sign"));
                }
                negative = ch == '-';
                start = i + 1;
            }
            _ => {}
        }
        if depth < 0 {
            return Err(parse_err(i, "unbalanced bracket"));
        }
    }
    if depth != 0 {
        return Err(parse_err(s.len(), "unbalanced bracket"));
    }
    let tail = &s[start..];
    if tail.trim().is_empty() {
        return Err(parse_err(s.len(), "expected a term"));
    }
    pieces.push((negative, start, tail));

    let mut out = Tensor::zero();
    for (negative, at, piece) in pieces {
        let (coeff, word) = match piece.split_once('*') {
            Some((c, w)) => {
                let c = parse_rational(c).ok_or_else(|| parse_err(at, format!("bad coefficient `{}`", c.trim())))?;
                (c, parse_word_at(alg, w, at + piece.find('*').unwrap() + 1)?)
            }
            None => match parse_rational(piece) {
                Some(c) => (c, Word::empty()),
                None => (Q::one(), parse_word_at(alg, piece, at)?),
            },
        };
        out.add_term(word, if negative { -coeff } else { coeff });
    }
    Ok(out)
}

fn render_combination<K, S, F>(x: &LinComb<K, S>, mut key: F) -> String
where
    K: Ord + Clone,
    S: Scalar,
    F: FnMut(&K) -> Option<String>,
{
    if x.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (k, c)) in x.iter().enumerate() {
        let body = key(k);
        let magnitude = c.abs();
        if i == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        match body {
            None => out.push_str(&magnitude.to_string()),
            Some(b) if magnitude.is_one() => out.push_str(&b),
            Some(b) => {
                out.push_str(&magnitude.to_string());
                out.push('*');
                out.push_str(&b);
            }
        }
    }
    out
}

/// Renders an element in the input grammar.
pub fn render_element<S: Scalar>(x: &Tensor<S>) -> String {
    render_combination(x, |w| if w.is_empty() { None } else { Some(w.to_string()) })
}

/// Renders a tensor square as `u (x) v` pairs.
pub fn render_square<S: Scalar>(x: &TensorSquare<S>) -> String {
    render_combination(x, |(u, v)| Some(format!("{u} (x) {v}")))
}

pub fn render_power<S: Scalar>(x: &TensorPower<S>) -> String {
    render_combination(x, |ws| Some(ws.iter().map(Word::to_string).collect::<Vec<_>>().join(" (x) ")))
}

pub fn render_partition(p: &OUPartition) -> String {
    p.blocks()
        .iter()
        .map(|b| format!("({})", b.iter().map(|i| format!("v{i}")).collect::<Vec<_>>().join(" ")))
        .collect()
}

pub fn render_normal_form<S: Scalar>(x: &LinComb<OUPartition, S>) -> String {
    render_combination(x, |p| Some(render_partition(p)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub word: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub terms: Vec<TermJson>,
}

/// Coefficients always carry an explicit denominator, e.g. `"2/1"`.
pub fn rational_json(c: &Q) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

pub fn element_to_json(x: &Tensor<Q>) -> ElementJson {
    ElementJson {
        terms: x
            .iter()
            .map(|(w, c)| TermJson { coeff: rational_json(c), word: w.letters().iter().map(|l| l.to_string()).collect() })
            .collect(),
    }
}

pub fn element_from_json(alg: &CoeffAlgebra, json: &ElementJson) -> Result<Tensor<Q>> {
    let mut out = Tensor::zero();
    for (i, t) in json.terms.iter().enumerate() {
        let c = parse_rational(&t.coeff).ok_or_else(|| parse_err(i, format!("bad coefficient `{}`", t.coeff)))?;
        let letters = t.word.iter().map(|l| parse_letter(alg, l)).collect::<Result<Vec<_>>>()?;
        out.add_term(Word::new(letters), c);
    }
    Ok(out)
}

struct TermParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl TermParser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<FreeTerm> {
        self.skip_ws();
        match self.src.get(self.pos) {
            Some(b'(') => {
                self.pos += 1;
                let left = self.term()?;
                self.skip_ws();
                let op = match self.src.get(self.pos) {
                    Some(b'<') => Op::Prec,
                    Some(b'>') => Op::Succ,
                    Some(b'.') => Op::Dot,
                    _ => return Err(parse_err(self.pos, "expected `<`, `>` or `.`")),
                };
                self.pos += 1;
                let right = self.term()?;
                self.skip_ws();
                if self.src.get(self.pos) != Some(&b')') {
                    return Err(parse_err(self.pos, "expected `)`"));
                }
                self.pos += 1;
                Ok(FreeTerm::bin(op, left, right))
            }
            Some(b'g') if self.src.get(self.pos + 1).is_some_and(u8::is_ascii_digit) => {
                let start = self.pos + 1;
                let mut end = start;
                while end < self.src.len() && self.src[end].is_ascii_digit() {
                    end += 1;
                }
                let digits = std::str::from_utf8(&self.src[start..end]).expect("ascii digits");
                let i = parse_index(digits, start)?;
                self.pos = end;
                Ok(FreeTerm::Gen(i))
            }
            Some(c) if c.is_ascii_lowercase() => {
                let i = u32::from(c - b'a') + 1;
                self.pos += 1;
                if self.src.get(self.pos).is_some_and(u8::is_ascii_alphanumeric) {
                    return Err(parse_err(self.pos - 1, "generators are single letters `a`..`z` or `g<i>`"));
                }
                Ok(FreeTerm::Gen(i))
            }
            Some(_) => Err(parse_err(self.pos, "expected a generator or `(`")),
            None => Err(parse_err(self.pos, "unexpected end of input")),
        }
    }
}

/// Parses the free-term grammar.
pub fn parse_term(s: &str) -> Result<FreeTerm> {
    let mut p = TermParser { src: s.as_bytes(), pos: 0 };
    let t = p.term()?;
    p.skip_ws();
    if p.pos != s.len() {
        return Err(parse_err(p.pos, "trailing input"));
    }
    Ok(t)
}

pub fn render_term(t: &FreeTerm) -> String {
    match t {
        FreeTerm::Gen(i) => atom_name(*i),
        FreeTerm::Bin(op, l, r) => format!("({} {} {})", render_term(l), op.symbol(), render_term(r)),
    }
}
