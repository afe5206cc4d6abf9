//! The quasi-shuffle algebra `T^q(R)`.
//!
//! Elements are finite combinations of [`Word`]s over the letters of a
//! [`CoeffAlgebra`]. The product is defined by the recursion
//! `ax * by = (a·b)(x * y) + a(x * by) + b(ax * y)` with the empty word as
//! unit, and splits as `x * y = x ≺ y + x ≻ y + x · y`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::coeff::{CoeffAlgebra, CoeffCombination, Letter};
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::scalar::Scalar;

/// A tensor `a_1 ⊗ ⋯ ⊗ a_n` of letters; the empty word is the unit `1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn single(letter: Letter) -> Self {
        Word(vec![letter])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the letter degrees.
    pub fn degree(&self) -> u32 {
        self.0.iter().map(Letter::degree).sum()
    }

    pub fn prepend(&self, letter: &Letter) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(letter.clone());
        v.extend_from_slice(&self.0);
        Word(v)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `(prefix, suffix)` for the split after `i` letters.
    pub fn split_at(&self, i: usize) -> (Word, Word) {
        (Word(self.0[..i].to_vec()), Word(self.0[i..].to_vec()))
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

pub type Tensor<S> = LinComb<Word, S>;
pub type TensorSquare<S> = LinComb<(Word, Word), S>;
pub type TensorPower<S> = LinComb<Vec<Word>, S>;

impl<S: Scalar> LinComb<Word, S> {
    pub fn unit() -> Self {
        Self::basis(Word::empty())
    }

    pub fn letter(letter: Letter) -> Self {
        Self::basis(Word::single(letter))
    }

    /// Coefficient of the empty word.
    pub fn constant_term(&self) -> S {
        self.coeff(&Word::empty())
    }

    /// The element with its constant term removed.
    pub fn augmentation_part(&self) -> Self {
        self.retain_keys(|w| !w.is_empty())
    }

    /// Largest word length with a nonzero coefficient (0 for the zero element).
    pub fn max_length(&self) -> usize {
        self.keys().map(Word::len).max().unwrap_or(0)
    }

    /// Component in `R`: the length-one part read as a combination of letters.
    pub fn project_to_letters(&self) -> CoeffCombination<S> {
        self.iter()
            .filter(|(w, _)| w.len() == 1)
            .map(|(w, c)| (w.letters()[0].clone(), c.clone()))
            .collect()
    }
}

/// Kind of a tridendriform operation, used in error messages and reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Operation {
    Left,
    Right,
    Dot,
    Star,
}

impl Operation {
    pub fn symbol(self) -> &'static str {
        match self {
            Operation::Left => "≺",
            Operation::Right => "≻",
            Operation::Dot => "·",
            Operation::Star => "*",
        }
    }

    pub fn parse(name: &str) -> Option<Operation> {
        match name {
            "left" | "prec" | "<" => Some(Operation::Left),
            "right" | "succ" | ">" => Some(Operation::Right),
            "dot" | "." => Some(Operation::Dot),
            "star" | "*" => Some(Operation::Star),
            _ => None,
        }
    }
}

/// Word-level quasi-shuffle engine with a per-instance memo table.
///
/// Each public element-level function creates a fresh engine, so calls are
/// referentially transparent and can run concurrently.
pub struct QuasiShuffle<'a, S> {
    alg: &'a CoeffAlgebra,
    memo: HashMap<(Vec<Letter>, Vec<Letter>), Tensor<S>>,
}

impl<'a, S: Scalar> QuasiShuffle<'a, S> {
    pub fn new(alg: &'a CoeffAlgebra) -> Self {
        Self { alg, memo: HashMap::new() }
    }

    pub fn algebra(&self) -> &'a CoeffAlgebra {
        self.alg
    }

    fn check_word(&self, w: &[Letter]) -> Result<()> {
        w.iter().try_for_each(|l| self.alg.validate(l))
    }

    /// `x * y` on words.
    pub fn star_words(&mut self, x: &[Letter], y: &[Letter]) -> Result<Tensor<S>> {
        if x.is_empty() {
            self.check_word(y)?;
            return Ok(Tensor::basis(Word(y.to_vec())));
        }
        if y.is_empty() {
            self.check_word(x)?;
            return Ok(Tensor::basis(Word(x.to_vec())));
        }
        let key = (x.to_vec(), y.to_vec());
        if let Some(hit) = self.memo.get(&key) {
            return Ok(hit.clone());
        }
        let mut out = self.left_words(x, y)?;
        out += &self.right_words(x, y)?;
        out += &self.dot_words(x, y)?;
        self.memo.insert(key, out.clone());
        Ok(out)
    }

    /// `ax ≺ by = a(x * by)` for nonempty words.
    pub fn left_words(&mut self, x: &[Letter], y: &[Letter]) -> Result<Tensor<S>> {
        debug_assert!(!x.is_empty() && !y.is_empty());
        self.alg.validate(&x[0])?;
        let tail = self.star_words(&x[1..], y)?;
        Ok(prepend_letter(&x[0], &tail))
    }

    /// `ax ≻ by = b(ax * y)` for nonempty words.
    pub fn right_words(&mut self, x: &[Letter], y: &[Letter]) -> Result<Tensor<S>> {
        debug_assert!(!x.is_empty() && !y.is_empty());
        self.alg.validate(&y[0])?;
        let tail = self.star_words(x, &y[1..])?;
        Ok(prepend_letter(&y[0], &tail))
    }

    /// `ax · by = (a·b)(x * y)` for nonempty words.
    pub fn dot_words(&mut self, x: &[Letter], y: &[Letter]) -> Result<Tensor<S>> {
        debug_assert!(!x.is_empty() && !y.is_empty());
        let head: CoeffCombination<S> = self.alg.multiply(&x[0], &y[0])?;
        if head.is_zero() {
            return Ok(Tensor::zero());
        }
        let tail = self.star_words(&x[1..], &y[1..])?;
        Ok(prepend_combination(&head, &tail))
    }

    /// One of the four operations on basis words, with the unit conventions
    /// `1≺x = 0, x≺1 = x, 1≻x = x, x≻1 = 0, 1·x = 0 = x·1`.
    pub fn op_words(&mut self, op: Operation, x: &Word, y: &Word) -> Result<Tensor<S>> {
        let (xe, ye) = (x.is_empty(), y.is_empty());
        if xe && ye && op != Operation::Star {
            return Err(Error::UnitPairing { op: op.symbol() });
        }
        match op {
            Operation::Star => self.star_words(x.letters(), y.letters()),
            Operation::Left if xe => Ok(Tensor::zero()),
            Operation::Left if ye => self.star_words(x.letters(), &[]),
            Operation::Left => self.left_words(x.letters(), y.letters()),
            Operation::Right if xe => self.star_words(&[], y.letters()),
            Operation::Right if ye => Ok(Tensor::zero()),
            Operation::Right => self.right_words(x.letters(), y.letters()),
            Operation::Dot if xe || ye => Ok(Tensor::zero()),
            Operation::Dot => self.dot_words(x.letters(), y.letters()),
        }
    }

    /// Bilinear extension of [`QuasiShuffle::op_words`].
    pub fn op(&mut self, op: Operation, x: &Tensor<S>, y: &Tensor<S>) -> Result<Tensor<S>> {
        if op != Operation::Star && !x.constant_term().is_zero() && !y.constant_term().is_zero() {
            return Err(Error::UnitPairing { op: op.symbol() });
        }
        let mut out = Tensor::zero();
        for (u, cu) in x.iter() {
            for (v, cv) in y.iter() {
                let p = self.op_words(op, u, v)?;
                out.add_scaled(&p, &(cu.clone() * cv.clone()));
            }
        }
        Ok(out)
    }
}

fn prepend_letter<S: Scalar>(letter: &Letter, t: &Tensor<S>) -> Tensor<S> {
    t.iter().map(|(w, c)| (w.prepend(letter), c.clone())).collect()
}

fn prepend_combination<S: Scalar>(head: &CoeffCombination<S>, t: &Tensor<S>) -> Tensor<S> {
    let mut out = Tensor::zero();
    for (l, cl) in head.iter() {
        for (w, c) in t.iter() {
            out.add_term(w.prepend(l), cl.clone() * c.clone());
        }
    }
    out
}

/// The quasi-shuffle product `x * y`.
pub fn quasi_shuffle<S: Scalar>(alg: &CoeffAlgebra, x: &Tensor<S>, y: &Tensor<S>) -> Result<Tensor<S>> {
    QuasiShuffle::new(alg).op(Operation::Star, x, y)
}

/// `x ≺ y`.
pub fn op_left<S: Scalar>(alg: &CoeffAlgebra, x: &Tensor<S>, y: &Tensor<S>) -> Result<Tensor<S>> {
    QuasiShuffle::new(alg).op(Operation::Left, x, y)
}

/// `x ≻ y`.
pub fn op_right<S: Scalar>(alg: &CoeffAlgebra, x: &Tensor<S>, y: &Tensor<S>) -> Result<Tensor<S>> {
    QuasiShuffle::new(alg).op(Operation::Right, x, y)
}

/// `x · y`.
pub fn op_dot<S: Scalar>(alg: &CoeffAlgebra, x: &Tensor<S>, y: &Tensor<S>) -> Result<Tensor<S>> {
    QuasiShuffle::new(alg).op(Operation::Dot, x, y)
}

pub fn apply_op<S: Scalar>(alg: &CoeffAlgebra, op: Operation, x: &Tensor<S>, y: &Tensor<S>) -> Result<Tensor<S>> {
    QuasiShuffle::new(alg).op(op, x, y)
}

/// One step of a lattice path from `(0,0)` to `(p,q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    /// `(1,0)`: emit the next letter of the first word.
    First,
    /// `(0,1)`: emit the next letter of the second word.
    Second,
    /// `(1,1)`: emit the product of both next letters.
    Both,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePath {
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// The endpoint `(p, q)`.
    pub fn endpoint(&self) -> (usize, usize) {
        self.steps.iter().fold((0, 0), |(p, q), s| match s {
            Step::First => (p + 1, q),
            Step::Second => (p, q + 1),
            Step::Both => (p + 1, q + 1),
        })
    }

    pub fn has_diagonal(&self) -> bool {
        self.steps.contains(&Step::Both)
    }

    /// All paths from `(0,0)` to `(p,q)`; there are Delannoy-many.
    pub fn enumerate(p: usize, q: usize) -> Vec<LatticePath> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(p + q);
        enumerate_paths(p, q, &mut cur, &mut out);
        out
    }
}

fn enumerate_paths(p: usize, q: usize, cur: &mut Vec<Step>, out: &mut Vec<LatticePath>) {
    if p == 0 && q == 0 {
        out.push(LatticePath { steps: cur.clone() });
        return;
    }
    if p > 0 {
        cur.push(Step::First);
        enumerate_paths(p - 1, q, cur, out);
        cur.pop();
    }
    if q > 0 {
        cur.push(Step::Second);
        enumerate_paths(p, q - 1, cur, out);
        cur.pop();
    }
    if p > 0 && q > 0 {
        cur.push(Step::Both);
        enumerate_paths(p - 1, q - 1, cur, out);
        cur.pop();
    }
}

/// The mixable shuffle `γ(u, v)` attached to one lattice path.
pub fn path_term<S: Scalar>(alg: &CoeffAlgebra, path: &LatticePath, u: &Word, v: &Word) -> Result<Tensor<S>> {
    if path.endpoint() != (u.len(), v.len()) {
        return Err(Error::InvalidArgument("path endpoint does not match word lengths".into()));
    }
    let (mut i, mut j) = (0, 0);
    let mut acc: Vec<CoeffCombination<S>> = Vec::with_capacity(path.steps.len());
    for step in &path.steps {
        let factor = match step {
            Step::First => {
                i += 1;
                alg.validate(&u.letters()[i - 1])?;
                LinComb::basis(u.letters()[i - 1].clone())
            }
            Step::Second => {
                j += 1;
                alg.validate(&v.letters()[j - 1])?;
                LinComb::basis(v.letters()[j - 1].clone())
            }
            Step::Both => {
                i += 1;
                j += 1;
                alg.multiply(&u.letters()[i - 1], &v.letters()[j - 1])?
            }
        };
        acc.push(factor);
    }
    // expand the tensor product of the letter combinations
    let mut out: Tensor<S> = Tensor::unit();
    for factor in &acc {
        let mut next = Tensor::zero();
        for (w, cw) in out.iter() {
            for (l, cl) in factor.iter() {
                let mut letters = w.letters().to_vec();
                letters.push(l.clone());
                next.add_term(Word(letters), cw.clone() * cl.clone());
            }
        }
        out = next;
    }
    Ok(out)
}

/// `u * v` as the sum of mixable shuffles over all lattice paths. Independent
/// of the recursive implementation and used as its oracle.
pub fn quasi_shuffle_paths<S: Scalar>(alg: &CoeffAlgebra, u: &Word, v: &Word) -> Result<Tensor<S>> {
    let mut out = Tensor::zero();
    for path in LatticePath::enumerate(u.len(), v.len()) {
        out += &path_term(alg, &path, u, v)?;
    }
    Ok(out)
}

/// Deconcatenation `Δ(v_1…v_n) = Σ_i v_1…v_i ⊗ v_{i+1}…v_n`.
pub fn deconcatenate<S: Scalar>(x: &Tensor<S>) -> TensorSquare<S> {
    let mut out = TensorSquare::zero();
    for (w, c) in x.iter() {
        for i in 0..=w.len() {
            out.add_term(w.split_at(i), c.clone());
        }
    }
    out
}

fn reduced_splits<S: Scalar>(w: &Word, c: &S, out: &mut TensorSquare<S>) {
    for i in 1..w.len() {
        out.add_term(w.split_at(i), c.clone());
    }
}

/// `Δ(x) − x⊗1 − 1⊗x` for `x` without constant term.
pub fn reduced_coproduct<S: Scalar>(x: &Tensor<S>) -> Result<TensorSquare<S>> {
    if !x.constant_term().is_zero() {
        return Err(Error::InvalidArgument("reduced coproduct needs a zero constant term".into()));
    }
    let mut out = TensorSquare::zero();
    for (w, c) in x.iter() {
        reduced_splits(w, c, &mut out);
    }
    Ok(out)
}

pub fn is_primitive<S: Scalar>(x: &Tensor<S>) -> Result<bool> {
    Ok(reduced_coproduct(x)?.is_zero())
}

/// Applies the reduced coproduct to the last tensor factor.
fn reduced_on_last<S: Scalar>(x: &TensorPower<S>) -> TensorPower<S> {
    let mut out = TensorPower::zero();
    for (ws, c) in x.iter() {
        let (last, init) = ws.split_last().expect("tensor powers have at least one factor");
        for i in 1..last.len() {
            let (a, b) = last.split_at(i);
            let mut key = init.to_vec();
            key.push(a);
            key.push(b);
            out.add_term(key, c.clone());
        }
    }
    out
}

/// Least `r` with `x ∈ F_r` in the coradical filtration of deconcatenation.
///
/// The constant term lies in `F_0`; the rest is measured by iterating the
/// reduced coproduct until it vanishes, since `F_r ∩ ker ε` is the kernel of
/// the `r`-fold reduced coproduct.
pub fn coradical_degree<S: Scalar>(x: &Tensor<S>) -> usize {
    let mut current: TensorPower<S> =
        x.augmentation_part().iter().map(|(w, c)| (vec![w.clone()], c.clone())).collect();
    let mut r = 0;
    while !current.is_zero() {
        current = reduced_on_last(&current);
        r += 1;
    }
    r
}

/// Componentwise product `(x₁⊗x₂) * (y₁⊗y₂) = (x₁*y₁) ⊗ (x₂*y₂)` on `T⊗T`.
pub fn square_star<S: Scalar>(alg: &CoeffAlgebra, x: &TensorSquare<S>, y: &TensorSquare<S>) -> Result<TensorSquare<S>> {
    let mut engine = QuasiShuffle::new(alg);
    let mut out = TensorSquare::zero();
    for ((u1, u2), cu) in x.iter() {
        for ((v1, v2), cv) in y.iter() {
            let left = engine.star_words(u1.letters(), v1.letters())?;
            let right = engine.star_words(u2.letters(), v2.letters())?;
            let c = cu.clone() * cv.clone();
            out.add_scaled(&tensor_product(&left, &right), &c);
        }
    }
    Ok(out)
}

pub fn tensor_product<S: Scalar>(a: &Tensor<S>, b: &Tensor<S>) -> TensorSquare<S> {
    let mut out = TensorSquare::zero();
    for (u, cu) in a.iter() {
        for (v, cv) in b.iter() {
            out.add_term((u.clone(), v.clone()), cu.clone() * cv.clone());
        }
    }
    out
}

/// `(Δ⊗id)` applied to a tensor square.
pub fn delta_left<S: Scalar>(x: &TensorSquare<S>) -> TensorPower<S> {
    let mut out = TensorPower::zero();
    for ((u, v), c) in x.iter() {
        for i in 0..=u.len() {
            let (a, b) = u.split_at(i);
            out.add_term(vec![a, b, v.clone()], c.clone());
        }
    }
    out
}

/// `(id⊗Δ)` applied to a tensor square.
pub fn delta_right<S: Scalar>(x: &TensorSquare<S>) -> TensorPower<S> {
    let mut out = TensorPower::zero();
    for ((u, v), c) in x.iter() {
        for i in 0..=v.len() {
            let (a, b) = v.split_at(i);
            out.add_term(vec![u.clone(), a, b], c.clone());
        }
    }
    out
}

/// Extends the letter involution of `R` to `T(R)` letterwise, keeping the
/// order of the tensor factors.
pub fn involute<S: Scalar>(alg: &CoeffAlgebra, x: &Tensor<S>) -> Result<Tensor<S>> {
    let mut out = Tensor::zero();
    for (w, c) in x.iter() {
        let letters = w.letters().iter().map(|l| alg.involute(l)).collect::<Result<Vec<_>>>()?;
        out.add_term(Word(letters), c.clone());
    }
    Ok(out)
}

/// All words of total degree `d`, in word order.
pub fn words_of_degree(alg: &CoeffAlgebra, d: u32) -> Vec<Word> {
    let mut out = Vec::new();
    if d == 0 {
        out.push(Word::empty());
        return out;
    }
    for first in 1..=d {
        for letter in alg.letters_of_degree(first) {
            for rest in words_of_degree(alg, d - first) {
                out.push(rest.prepend(&letter));
            }
        }
    }
    out.sort();
    out
}

/// All words of length `1..=max_len` whose letters have degree `<= max_letter_degree`.
pub fn words_up_to(alg: &CoeffAlgebra, max_len: usize, max_letter_degree: u32) -> Vec<Word> {
    let letters = alg.letters_up_to(max_letter_degree);
    let mut out = Vec::new();
    let mut layer = vec![Word::empty()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| letters.iter().map(move |l| w.concat(&Word::single(l.clone()))))
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}
