//! CTD-bialgebra structure on `T^q(R)` and on the free CTD-algebra.
//!
//! Tensor powers of a CTD-algebra carry the componentwise structure
//! `(a⊗b) ≺ (a'⊗b') = (a≺a') ⊗ (b*b')`, with the Ronco convention
//! `(1⊗b) ≺ (1⊗b') = 1⊗(b≺b')` (likewise for `≻` and `·`). Elements of
//! `T^{⊗k}` are stored as combinations of word tuples.

use std::fmt;

use crate::coeff::{CoeffAlgebra, Letter};
use crate::error::{Error, Result};
use crate::freectd::{eval_phi, FreeTerm, Signature};
use crate::lincomb::LinComb;
use crate::linalg;
use crate::scalar::Scalar;
use crate::tensorq::{
    deconcatenate, delta_left, delta_right, words_of_degree, QuasiShuffle, Operation, Tensor, TensorPower,
    TensorSquare, Word,
};

/// How the structure on `A₁⊗⋯⊗A_k` is built from binary tensor products.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bracketing {
    /// `A₁⊗(A₂⊗(⋯⊗A_k))`
    Right,
    /// `((A₁⊗A₂)⊗⋯)⊗A_k`
    Left,
}

fn require_commutative(alg: &CoeffAlgebra, what: &str) -> Result<()> {
    if alg.is_commutative() {
        Ok(())
    } else {
        Err(Error::Unsupported { algebra: alg.name().to_string(), operation: what.to_string() })
    }
}

/// Operations on tensor powers of `T^q(R)`, sharing one memo table.
pub struct TensorCtd<'a, S> {
    engine: QuasiShuffle<'a, S>,
}

impl<'a, S: Scalar> TensorCtd<'a, S> {
    pub fn new(alg: &'a CoeffAlgebra) -> Result<Self> {
        require_commutative(alg, "the tensor-product CTD structure")?;
        Ok(Self { engine: QuasiShuffle::new(alg) })
    }

    pub fn algebra(&self) -> &'a CoeffAlgebra {
        self.engine.algebra()
    }

    fn star_factors(&mut self, u: &[Word], v: &[Word]) -> Result<TensorPower<S>> {
        let mut out = TensorPower::basis(Vec::new());
        for (a, b) in u.iter().zip(v) {
            let s = self.engine.star_words(a.letters(), b.letters())?;
            out = append_factor(&out, &s);
        }
        Ok(out)
    }

    /// One operation on basis tuples of equal length.
    pub fn op_factors(&mut self, op: Operation, u: &[Word], v: &[Word], br: Bracketing) -> Result<TensorPower<S>> {
        assert_eq!(u.len(), v.len(), "tensor factors must match");
        assert!(!u.is_empty());
        if op == Operation::Star {
            return self.star_factors(u, v);
        }
        if u.len() == 1 {
            let r = self.engine.op_words(op, &u[0], &v[0])?;
            return Ok(r.map_linear(|w| TensorPower::basis(vec![w.clone()])));
        }
        match br {
            Bracketing::Right => {
                let (a, rest_u) = (&u[0], &u[1..]);
                let (b, rest_v) = (&v[0], &v[1..]);
                if a.is_empty() && b.is_empty() {
                    let rest = self.op_factors(op, rest_u, rest_v, br)?;
                    Ok(prepend_factor(&Tensor::unit(), &rest))
                } else {
                    let head = self.engine.op_words(op, a, b)?;
                    let rest = self.star_factors(rest_u, rest_v)?;
                    Ok(prepend_factor(&head, &rest))
                }
            }
            Bracketing::Left => {
                let k = u.len() - 1;
                let (init_u, c) = (&u[..k], &u[k]);
                let (init_v, d) = (&v[..k], &v[k]);
                if init_u.iter().chain(init_v).all(Word::is_empty) {
                    let last = self.engine.op_words(op, c, d)?;
                    let units = TensorPower::basis(vec![Word::empty(); k]);
                    Ok(append_factor(&units, &last))
                } else {
                    let init = self.op_factors(op, init_u, init_v, br)?;
                    let last = self.engine.star_words(c.letters(), d.letters())?;
                    Ok(append_factor(&init, &last))
                }
            }
        }
    }

    /// Bilinear extension of [`TensorCtd::op_factors`].
    pub fn op_power(&mut self, op: Operation, x: &TensorPower<S>, y: &TensorPower<S>, br: Bracketing) -> Result<TensorPower<S>> {
        let mut out = TensorPower::zero();
        for (u, cu) in x.iter() {
            for (v, cv) in y.iter() {
                let r = self.op_factors(op, u, v, br)?;
                out.add_scaled(&r, &(cu.clone() * cv.clone()));
            }
        }
        Ok(out)
    }

    pub fn op_square(&mut self, op: Operation, x: &TensorSquare<S>, y: &TensorSquare<S>) -> Result<TensorSquare<S>> {
        let r = self.op_power(op, &square_to_power(x), &square_to_power(y), Bracketing::Right)?;
        Ok(power_to_square(&r))
    }
}

fn prepend_factor<S: Scalar>(head: &Tensor<S>, rest: &TensorPower<S>) -> TensorPower<S> {
    let mut out = TensorPower::zero();
    for (h, ch) in head.iter() {
        for (ws, c) in rest.iter() {
            let mut key = Vec::with_capacity(ws.len() + 1);
            key.push(h.clone());
            key.extend_from_slice(ws);
            out.add_term(key, ch.clone() * c.clone());
        }
    }
    out
}

fn append_factor<S: Scalar>(init: &TensorPower<S>, last: &Tensor<S>) -> TensorPower<S> {
    let mut out = TensorPower::zero();
    for (ws, c) in init.iter() {
        for (l, cl) in last.iter() {
            let mut key = ws.clone();
            key.push(l.clone());
            out.add_term(key, c.clone() * cl.clone());
        }
    }
    out
}

pub fn square_to_power<S: Scalar>(x: &TensorSquare<S>) -> TensorPower<S> {
    x.iter().map(|((u, v), c)| (vec![u.clone(), v.clone()], c.clone())).collect()
}

pub fn power_to_square<S: Scalar>(x: &TensorPower<S>) -> TensorSquare<S> {
    x.iter()
        .map(|(ws, c)| {
            assert_eq!(ws.len(), 2, "not a tensor square");
            ((ws[0].clone(), ws[1].clone()), c.clone())
        })
        .collect()
}

/// `e1 ≺ e2` in `T⊗T` with the Ronco convention.
pub fn square_left<S: Scalar>(alg: &CoeffAlgebra, e1: &TensorSquare<S>, e2: &TensorSquare<S>) -> Result<TensorSquare<S>> {
    TensorCtd::new(alg)?.op_square(Operation::Left, e1, e2)
}

/// `e1 · e2` in `T⊗T` with the Ronco convention.
pub fn square_dot<S: Scalar>(alg: &CoeffAlgebra, e1: &TensorSquare<S>, e2: &TensorSquare<S>) -> Result<TensorSquare<S>> {
    TensorCtd::new(alg)?.op_square(Operation::Dot, e1, e2)
}

/// Whether both bracketings of the structure on `T^{⊗3}` agree on `x op y`
/// for `op ∈ {≺, ·, *}`.
pub fn three_factor_consistent<S: Scalar>(alg: &CoeffAlgebra, x: &TensorPower<S>, y: &TensorPower<S>) -> Result<bool> {
    let mut t = TensorCtd::new(alg)?;
    for op in [Operation::Left, Operation::Right, Operation::Dot, Operation::Star] {
        if t.op_power(op, x, y, Bracketing::Right)? != t.op_power(op, x, y, Bracketing::Left)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The coproduct of the free CTD-algebra on `n_generators` generators,
/// valued in `T^q(S̄(V)) ⊗ T^q(S̄(V))`.
pub fn delta_free_ctd<S: Scalar>(term: &FreeTerm, n_generators: u32) -> Result<TensorSquare<S>> {
    term.check_signature(Signature::Ctd)?;
    let alg = CoeffAlgebra::sym(n_generators);
    let mut t = TensorCtd::new(&alg)?;
    delta_rec(&mut t, term)
}

fn delta_rec<S: Scalar>(t: &mut TensorCtd<'_, S>, term: &FreeTerm) -> Result<TensorSquare<S>> {
    match term {
        FreeTerm::Gen(i) => {
            let g = Word::single(t.algebra().generator(*i)?);
            Ok([((g.clone(), Word::empty()), S::one()), ((Word::empty(), g), S::one())].into_iter().collect())
        }
        FreeTerm::Bin(op, l, r) => {
            let dl = delta_rec(t, l)?;
            let dr = delta_rec(t, r)?;
            t.op_square(op.operation(), &dl, &dr)
        }
    }
}

/// The free CTD term whose `Φ`-image is the word `w`: a right comb of
/// dot-monomials, one per letter.
pub fn lift_word(w: &Word) -> Result<FreeTerm> {
    let monomial = |l: &Letter| -> Result<FreeTerm> {
        let Letter::Monomial(ix) = l else {
            return Err(Error::InvalidArgument(format!("letter {l} is not a monomial")));
        };
        let mut it = ix.iter().rev();
        let last = FreeTerm::Gen(*it.next().expect("monomials are nonempty"));
        Ok(it.fold(last, |acc, &g| FreeTerm::dot(FreeTerm::Gen(g), acc)))
    };
    let mut it = w.letters().iter().rev();
    let Some(last) = it.next() else {
        return Err(Error::InvalidArgument("the empty word is not a free term".into()));
    };
    let mut acc = monomial(last)?;
    for l in it {
        acc = FreeTerm::prec(monomial(l)?, acc);
    }
    Ok(acc)
}

/// `Δ` of the free CTD-algebra applied to a word (with `Δ(1) = 1⊗1`).
fn delta_word<S: Scalar>(w: &Word, n: u32) -> Result<TensorSquare<S>> {
    if w.is_empty() {
        return Ok(TensorSquare::basis((Word::empty(), Word::empty())));
    }
    delta_free_ctd(&lift_word(w)?, n)
}

/// Outcome of the coalgebra checks on one free term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraCheck {
    pub coassociative: bool,
    pub counital: bool,
    /// `Δ(t)` equals the deconcatenation of `Φ(t)`.
    pub agrees_with_deconcatenation: bool,
}

impl CoalgebraCheck {
    pub fn holds(&self) -> bool {
        self.coassociative && self.counital && self.agrees_with_deconcatenation
    }
}

/// Coassociativity and counit laws for `delta_free_ctd`, computing the
/// second coproduct with `delta_free_ctd` itself, plus agreement with
/// deconcatenation under `Φ`.
pub fn check_free_coalgebra<S: Scalar>(term: &FreeTerm, n_generators: u32) -> Result<CoalgebraCheck> {
    let d = delta_free_ctd::<S>(term, n_generators)?;
    let mut lhs = TensorPower::zero();
    let mut rhs = TensorPower::zero();
    for ((u, v), c) in d.iter() {
        for ((a, b), c2) in delta_word::<S>(u, n_generators)?.iter() {
            lhs.add_term(vec![a.clone(), b.clone(), v.clone()], c.clone() * c2.clone());
        }
        for ((a, b), c2) in delta_word::<S>(v, n_generators)?.iter() {
            rhs.add_term(vec![u.clone(), a.clone(), b.clone()], c.clone() * c2.clone());
        }
    }
    let phi = eval_phi::<S>(term, n_generators)?;
    let left_counit: Tensor<S> = d.iter().filter(|((u, _), _)| u.is_empty()).map(|((_, v), c)| (v.clone(), c.clone())).collect();
    let right_counit: Tensor<S> = d.iter().filter(|((_, v), _)| v.is_empty()).map(|((u, _), c)| (u.clone(), c.clone())).collect();
    Ok(CoalgebraCheck {
        coassociative: lhs == rhs,
        counital: left_counit == phi && right_counit == phi,
        agrees_with_deconcatenation: d == deconcatenate(&phi),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompatRelation {
    /// `Δ(x≺y) = x₍₁₎≺y₍₁₎ ⊗ x₍₂₎*y₍₂₎`
    Left,
    /// `Δ(x·y) = x₍₁₎·y₍₁₎ ⊗ x₍₂₎*y₍₂₎`
    Dot,
    /// `(Δ⊗id)Δ = (id⊗Δ)Δ` on `x*y`
    Coassociativity,
}

impl CompatRelation {
    pub fn id(self) -> &'static str {
        match self {
            CompatRelation::Left => "compat-left",
            CompatRelation::Dot => "compat-dot",
            CompatRelation::Coassociativity => "coassociativity",
        }
    }
}

impl fmt::Display for CompatRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CompatViolation<S: Scalar> {
    pub x: Tensor<S>,
    pub y: Tensor<S>,
    pub relation: CompatRelation,
    pub lhs: TensorPower<S>,
    pub rhs: TensorPower<S>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CompatReport<S: Scalar> {
    pub checked_pairs: usize,
    pub violations: Vec<CompatViolation<S>>,
}

impl<S: Scalar> Default for CompatReport<S> {
    fn default() -> Self {
        Self { checked_pairs: 0, violations: Vec::new() }
    }
}

impl<S: Scalar> CompatReport<S> {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn merge(&mut self, other: CompatReport<S>) {
        self.checked_pairs += other.checked_pairs;
        self.violations.extend(other.violations);
    }
}

/// Checks both compatibility relations, with deconcatenation as `Δ`, and
/// coassociativity of `Δ` on `x*y`.
pub fn check_compat<S: Scalar>(alg: &CoeffAlgebra, x: &Tensor<S>, y: &Tensor<S>) -> Result<CompatReport<S>> {
    let mut t = TensorCtd::new(alg)?;
    let (dx, dy) = (deconcatenate(x), deconcatenate(y));
    let mut report = CompatReport { checked_pairs: 1, violations: Vec::new() };
    for (relation, op) in [(CompatRelation::Left, Operation::Left), (CompatRelation::Dot, Operation::Dot)] {
        let product = QuasiShuffle::new(alg).op(op, x, y)?;
        let lhs = deconcatenate(&product);
        let rhs = t.op_square(op, &dx, &dy)?;
        if lhs != rhs {
            report.violations.push(CompatViolation {
                x: x.clone(),
                y: y.clone(),
                relation,
                lhs: square_to_power(&lhs),
                rhs: square_to_power(&rhs),
            });
        }
    }
    let star = QuasiShuffle::new(alg).op(Operation::Star, x, y)?;
    let d = deconcatenate(&star);
    let (lhs, rhs) = (delta_left(&d), delta_right(&d));
    if lhs != rhs {
        report.violations.push(CompatViolation {
            x: x.clone(),
            y: y.clone(),
            relation: CompatRelation::Coassociativity,
            lhs,
            rhs,
        });
    }
    Ok(report)
}

/// Whether `x·y` is primitive for every pair of the sample. Every sampled
/// element must itself be primitive.
pub fn primitives_closed_under_dot<S: Scalar>(alg: &CoeffAlgebra, sample: &[(Tensor<S>, Tensor<S>)]) -> Result<bool> {
    require_commutative(alg, "the primitive-part algebra")?;
    let primitive = |x: &Tensor<S>| x.constant_term().is_zero() && x.keys().all(|w| w.len() == 1);
    let mut engine = QuasiShuffle::new(alg);
    for (x, y) in sample {
        if !primitive(x) || !primitive(y) {
            return Err(Error::InvalidArgument("sample elements must be primitive".into()));
        }
        let d = engine.op(Operation::Dot, x, y)?;
        if !crate::tensorq::is_primitive(&d)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All pairs of length-one words whose letters have degree `<= max_letter_degree`.
pub fn letter_pairs<S: Scalar>(alg: &CoeffAlgebra, max_letter_degree: u32) -> Vec<(Tensor<S>, Tensor<S>)> {
    let letters = alg.letters_up_to(max_letter_degree);
    let mut out = Vec::with_capacity(letters.len() * letters.len());
    for a in &letters {
        for b in &letters {
            out.push((Tensor::letter(a.clone()), Tensor::letter(b.clone())));
        }
    }
    out
}

/// Basis of the kernel of the reduced coproduct on the words of total
/// degree `d`, by exact elimination.
pub fn primitive_kernel<S: Scalar>(alg: &CoeffAlgebra, d: u32) -> Vec<Tensor<S>> {
    let words = words_of_degree(alg, d);
    let mut images: Vec<TensorSquare<S>> = Vec::with_capacity(words.len());
    let mut rows_index: LinComb<(Word, Word), S> = LinComb::zero();
    for w in &words {
        let img = crate::tensorq::reduced_coproduct(&Tensor::<S>::basis(w.clone())).expect("words of positive degree");
        for (k, _) in img.iter() {
            rows_index.add_term(k.clone(), S::one());
        }
        images.push(img);
    }
    // matrix rows are coordinates of `T⊗T`, columns are the words
    let keys: Vec<&(Word, Word)> = rows_index.keys().collect();
    let rows: Vec<Vec<S>> = keys.iter().map(|k| images.iter().map(|img| img.coeff(k)).collect()).collect();
    linalg::kernel(&rows, words.len())
        .into_iter()
        .map(|v| words.iter().cloned().zip(v).filter(|(_, c)| !c.is_zero()).collect())
        .collect()
}

/// The primitive kernel in degree `d` equals the span of length-one words:
/// same dimension, and every kernel vector lives on length-one words.
pub fn primitive_kernel_is_letter_span<S: Scalar>(alg: &CoeffAlgebra, d: u32) -> bool {
    let kernel = primitive_kernel::<S>(alg, d);
    kernel.len() == alg.letters_of_degree(d).len() && kernel.iter().all(|v| v.keys().all(|w| w.len() == 1))
}

/// Words over the generators of `V`, i.e. basis elements of `T^c(V)`.
pub type GeneratorWord = Vec<u32>;
pub type CofreeElement<S> = LinComb<GeneratorWord, S>;

/// The coalgebra map `T^q(S̄(V)) → T^c(V)` cogenerated by the projection
/// `S̄(V) → V`: words containing a letter of degree `>= 2` are killed.
pub fn phi_coalgebra<S: Scalar>(x: &Tensor<S>) -> Result<CofreeElement<S>> {
    let mut out = CofreeElement::zero();
    for (w, c) in x.iter() {
        let mut gens = Vec::with_capacity(w.len());
        for l in w.letters() {
            match l {
                Letter::Monomial(ix) if ix.len() == 1 => gens.push(ix[0]),
                Letter::Monomial(_) => break,
                other => return Err(Error::InvalidArgument(format!("letter {other} is not a monomial"))),
            }
        }
        if gens.len() == w.len() {
            out.add_term(gens, c.clone());
        }
    }
    Ok(out)
}

/// The splitting `T^c(V) → T^q(S̄(V))` induced by `V ⊂ S̄(V)`.
pub fn splitting<S: Scalar>(x: &CofreeElement<S>) -> Result<Tensor<S>> {
    x.try_map_linear(|gens| {
        let letters = gens.iter().map(|&g| Letter::monomial(vec![g])).collect::<Result<Vec<_>>>()?;
        Ok(Tensor::basis(Word::new(letters)))
    })
}

pub fn deconcatenate_cofree<S: Scalar>(x: &CofreeElement<S>) -> LinComb<(GeneratorWord, GeneratorWord), S> {
    let mut out = LinComb::zero();
    for (w, c) in x.iter() {
        for i in 0..=w.len() {
            out.add_term((w[..i].to_vec(), w[i..].to_vec()), c.clone());
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplittingReport {
    pub generators: u32,
    pub max_length: usize,
    pub generator_words: usize,
    pub phi_words: usize,
    pub phi_after_s_is_identity: bool,
    pub s_is_coalgebra_map: bool,
    pub phi_is_coalgebra_map: bool,
    /// Words of `T^q(S̄(V))` whose coradical degree equals their length.
    pub connected: bool,
}

impl SplittingReport {
    pub fn holds(&self) -> bool {
        self.phi_after_s_is_identity && self.s_is_coalgebra_map && self.phi_is_coalgebra_map && self.connected
    }
}

fn generator_words(n: u32, max_len: usize) -> Vec<GeneratorWord> {
    let mut out = vec![Vec::new()];
    let mut layer: Vec<GeneratorWord> = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                (1..=n).map(move |g| {
                    let mut w2 = w.clone();
                    w2.push(g);
                    w2
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Witnesses of the structure theorem on `T^q(S̄(V))`, `dim V = n`:
/// `φ∘s = id` and `s` is a coalgebra map on generator words of length
/// `<= max_len`; `φ` is a coalgebra map and coradical degree equals length
/// on every word of length `<= max_len` with letters of degree `<= 2`.
pub fn splitting_report<S: Scalar>(n: u32, max_len: usize) -> Result<SplittingReport> {
    let alg = CoeffAlgebra::sym(n);
    let gws = generator_words(n, max_len);
    let mut phi_after_s = true;
    let mut s_morphism = true;
    for g in &gws {
        let x = CofreeElement::<S>::basis(g.clone());
        let sx = splitting(&x)?;
        phi_after_s &= phi_coalgebra(&sx)? == x;
        let lhs: TensorSquare<S> = deconcatenate_cofree(&x).try_map_linear(|(a, b)| {
            let sa = splitting(&CofreeElement::<S>::basis(a.clone()))?;
            let sb = splitting(&CofreeElement::<S>::basis(b.clone()))?;
            Ok::<_, Error>(crate::tensorq::tensor_product(&sa, &sb))
        })?;
        s_morphism &= lhs == deconcatenate(&sx);
    }
    let mut words = vec![Word::empty()];
    words.extend(crate::tensorq::words_up_to(&alg, max_len, 2));
    let mut phi_morphism = true;
    let mut connected = true;
    for w in &words {
        let x = Tensor::<S>::basis(w.clone());
        let lhs: LinComb<(GeneratorWord, GeneratorWord), S> = deconcatenate(&x).try_map_linear(|(a, b)| {
            let pa = phi_coalgebra(&Tensor::<S>::basis(a.clone()))?;
            let pb = phi_coalgebra(&Tensor::<S>::basis(b.clone()))?;
            let mut out = LinComb::zero();
            for (u, cu) in pa.iter() {
                for (v, cv) in pb.iter() {
                    out.add_term((u.clone(), v.clone()), cu.clone() * cv.clone());
                }
            }
            Ok::<_, Error>(out)
        })?;
        phi_morphism &= lhs == deconcatenate_cofree(&phi_coalgebra(&x)?);
        connected &= crate::tensorq::coradical_degree(&x) == w.len();
    }
    Ok(SplittingReport {
        generators: n,
        max_length: max_len,
        generator_words: gws.len(),
        phi_words: words.len(),
        phi_after_s_is_identity: phi_after_s,
        s_is_coalgebra_map: s_morphism,
        phi_is_coalgebra_map: phi_morphism,
        connected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freectd::multilinear_terms;
    use crate::syntax::parse_term;
    use crate::Q;

    fn mono(v: &[u32]) -> Letter {
        Letter::monomial(v.to_vec()).unwrap()
    }

    fn w(ls: &[Letter]) -> Word {
        Word::new(ls.to_vec())
    }

    fn sq(pairs: &[(Word, Word)]) -> TensorSquare<Q> {
        pairs.iter().map(|p| (p.clone(), Q::from_int(1))).collect()
    }

    #[test]
    fn ronco_convention_examples() {
        let alg = CoeffAlgebra::sym(2);
        let (a, b) = (w(&[mono(&[1])]), w(&[mono(&[2])]));
        let one = Word::empty();
        // (a⊗1) ≺ (b⊗1) = (a≺b)⊗1
        let r = square_left(&alg, &sq(&[(a.clone(), one.clone())]), &sq(&[(b.clone(), one.clone())])).unwrap();
        assert_eq!(r, sq(&[(w(&[mono(&[1]), mono(&[2])]), one.clone())]));
        // (1⊗a) ≺ (1⊗b) = 1⊗(a≺b)
        let r = square_left(&alg, &sq(&[(one.clone(), a.clone())]), &sq(&[(one.clone(), b.clone())])).unwrap();
        assert_eq!(r, sq(&[(one.clone(), w(&[mono(&[1]), mono(&[2])]))]));
        // (1⊗a) · (1⊗b) = 1⊗(a·b)
        let r = square_dot(&alg, &sq(&[(one.clone(), a.clone())]), &sq(&[(one.clone(), b.clone())])).unwrap();
        assert_eq!(r, sq(&[(one.clone(), w(&[mono(&[1, 2])]))]));
        // all four units: undefined
        let u = sq(&[(one.clone(), one.clone())]);
        assert!(matches!(square_left(&alg, &u, &u), Err(Error::UnitPairing { .. })));
        assert!(square_left(&CoeffAlgebra::word(2), &u, &u).is_err());
    }

    #[test]
    fn delta_examples() {
        let (a, b) = (w(&[mono(&[1])]), w(&[mono(&[2])]));
        let one = Word::empty();
        let d = delta_free_ctd::<Q>(&FreeTerm::Gen(1), 2).unwrap();
        assert_eq!(d, sq(&[(a.clone(), one.clone()), (one.clone(), a.clone())]));
        let ab = w(&[mono(&[1]), mono(&[2])]);
        let d = delta_free_ctd::<Q>(&parse_term("(a < b)").unwrap(), 2).unwrap();
        assert_eq!(d, sq(&[(ab.clone(), one.clone()), (a.clone(), b.clone()), (one.clone(), ab)]));
        let dot = w(&[mono(&[1, 2])]);
        let d = delta_free_ctd::<Q>(&parse_term("(a . b)").unwrap(), 2).unwrap();
        assert_eq!(d, sq(&[(dot.clone(), one.clone()), (one.clone(), dot)]));
        assert_eq!(delta_free_ctd::<Q>(&parse_term("(a > b)").unwrap(), 2), Err(Error::Signature));
    }

    #[test]
    fn free_coalgebra_laws_on_multilinear_terms() {
        for n in 1..=3 {
            for t in multilinear_terms(n, Signature::Ctd) {
                let c = check_free_coalgebra::<Q>(&t, n).unwrap();
                assert!(c.holds(), "{t}: {c:?}");
            }
        }
    }

    #[test]
    fn compat_examples() {
        let alg = CoeffAlgebra::sym(2);
        let a = Tensor::<Q>::letter(mono(&[1]));
        let b = Tensor::<Q>::letter(mono(&[2]));
        let r = check_compat(&alg, &a, &b).unwrap();
        assert!(r.holds() && r.checked_pairs == 1);
        let r = check_compat(&alg, &Tensor::unit(), &b).unwrap();
        assert!(r.holds());
        assert!(check_compat(&CoeffAlgebra::word(2), &a, &b).is_err());
    }

    #[test]
    fn three_factor_bracketings_agree_on_basis_tuples() {
        let alg = CoeffAlgebra::stuffle_y();
        let words: Vec<Word> = std::iter::once(Word::empty()).chain(crate::tensorq::words_up_to(&alg, 1, 2)).collect();
        let mut tuples = Vec::new();
        for a in &words {
            for b in &words {
                for c in &words {
                    tuples.push(vec![a.clone(), b.clone(), c.clone()]);
                }
            }
        }
        let all_units = vec![Word::empty(); 3];
        for u in &tuples {
            for v in &tuples {
                if *u == all_units && *v == all_units {
                    continue;
                }
                let x = TensorPower::<Q>::basis(u.clone());
                let y = TensorPower::<Q>::basis(v.clone());
                assert!(three_factor_consistent(&alg, &x, &y).unwrap(), "{u:?} {v:?}");
            }
        }
    }

    #[test]
    fn primitive_closure_examples() {
        let sym = CoeffAlgebra::sym(2);
        assert!(primitives_closed_under_dot::<Q>(&sym, &letter_pairs(&sym, 3)).unwrap());
        let y = CoeffAlgebra::stuffle_y();
        let y1 = Tensor::<Q>::letter(Letter::Y(1));
        assert!(primitives_closed_under_dot(&y, &[(y1.clone(), y1.clone())]).unwrap());
        let not_prim = Tensor::<Q>::basis(Word::new(vec![Letter::Y(1), Letter::Y(1)]));
        assert!(primitives_closed_under_dot(&y, &[(y1, not_prim)]).is_err());
    }

    #[test]
    fn primitive_kernel_matches_letters() {
        let sym = CoeffAlgebra::sym(2);
        for d in 1..=3 {
            assert!(primitive_kernel_is_letter_span::<Q>(&sym, d), "degree {d}");
        }
        assert_eq!(primitive_kernel::<Q>(&sym, 2).len(), 3);
    }

    #[test]
    fn phi_and_splitting() {
        let x12 = Tensor::<Q>::basis(w(&[mono(&[1]), mono(&[2])]));
        assert_eq!(phi_coalgebra(&x12).unwrap(), CofreeElement::basis(vec![1, 2]));
        assert!(phi_coalgebra(&Tensor::<Q>::basis(w(&[mono(&[1, 2])]))).unwrap().is_zero());
        let g = CofreeElement::<Q>::basis(vec![1, 2, 1]);
        assert_eq!(phi_coalgebra(&splitting(&g).unwrap()).unwrap(), g);
        let r = splitting_report::<Q>(2, 3).unwrap();
        assert!(r.holds(), "{r:?}");
        assert_eq!(r.generator_words, 1 + 2 + 4 + 8);
    }
}
