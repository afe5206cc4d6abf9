//! Free CTD-algebras and free involutive tridendriform algebras.
//!
//! Terms are binary trees over generators. CTD terms use only `≺` and `·`;
//! tridendriform (TD) terms may also use `≻`. Elements of the free algebra
//! are compared through their image under the evaluation map `Φ` into
//! `T^q(S̄(V))`, which is injective. The rewriting engine is a second,
//! independent route to the same answer.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::coeff::{CoeffAlgebra, Letter};
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::scalar::Scalar;
use crate::syntax::{render_partition, render_term};
use crate::tensorq::{Operation, QuasiShuffle, Tensor, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Op {
    Prec,
    Succ,
    Dot,
}

impl Op {
    pub fn symbol(self) -> &'static str {
        match self {
            Op::Prec => "<",
            Op::Succ => ">",
            Op::Dot => ".",
        }
    }

    pub fn operation(self) -> Operation {
        match self {
            Op::Prec => Operation::Left,
            Op::Succ => Operation::Right,
            Op::Dot => Operation::Dot,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Signature {
    /// `≺` and `·` only.
    Ctd,
    /// `≺`, `≻` and `·`.
    Td,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FreeTerm {
    Gen(u32),
    Bin(Op, Box<FreeTerm>, Box<FreeTerm>),
}

impl FreeTerm {
    pub fn bin(op: Op, left: FreeTerm, right: FreeTerm) -> Self {
        FreeTerm::Bin(op, Box::new(left), Box::new(right))
    }

    pub fn prec(left: FreeTerm, right: FreeTerm) -> Self {
        Self::bin(Op::Prec, left, right)
    }

    pub fn succ(left: FreeTerm, right: FreeTerm) -> Self {
        Self::bin(Op::Succ, left, right)
    }

    pub fn dot(left: FreeTerm, right: FreeTerm) -> Self {
        Self::bin(Op::Dot, left, right)
    }

    /// Number of generator leaves.
    pub fn degree(&self) -> u32 {
        match self {
            FreeTerm::Gen(_) => 1,
            FreeTerm::Bin(_, l, r) => l.degree() + r.degree(),
        }
    }

    pub fn has_succ(&self) -> bool {
        match self {
            FreeTerm::Gen(_) => false,
            FreeTerm::Bin(op, l, r) => *op == Op::Succ || l.has_succ() || r.has_succ(),
        }
    }

    pub fn leaves(&self) -> Vec<u32> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<u32>) {
        match self {
            FreeTerm::Gen(i) => out.push(*i),
            FreeTerm::Bin(_, l, r) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
        }
    }

    pub fn max_generator(&self) -> u32 {
        self.leaves().into_iter().max().unwrap_or(0)
    }

    /// Each generator `1..=n` occurs exactly once.
    pub fn is_multilinear(&self, n: u32) -> bool {
        let mut leaves = self.leaves();
        leaves.sort_unstable();
        leaves == (1..=n).collect::<Vec<_>>()
    }

    pub fn check_signature(&self, sig: Signature) -> Result<()> {
        if sig == Signature::Ctd && self.has_succ() {
            Err(Error::Signature)
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for FreeTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_term(self))
    }
}

fn check_generators(term: &FreeTerm, n: u32) -> Result<()> {
    match term.leaves().into_iter().find(|&g| g == 0 || g > n) {
        Some(g) => Err(Error::InvalidArgument(format!("generator {g} outside 1..={n}"))),
        None => Ok(()),
    }
}

fn evaluate<S: Scalar>(engine: &mut QuasiShuffle<'_, S>, term: &FreeTerm) -> Result<Tensor<S>> {
    match term {
        FreeTerm::Gen(i) => Ok(Tensor::letter(engine.algebra().generator(*i)?)),
        FreeTerm::Bin(op, l, r) => {
            let l = evaluate(engine, l)?;
            let r = evaluate(engine, r)?;
            engine.op(op.operation(), &l, &r)
        }
    }
}

/// `Φ`: evaluates a CTD term in `T^q(S̄(V))` with `V` spanned by
/// `n_generators` generators.
pub fn eval_phi<S: Scalar>(term: &FreeTerm, n_generators: u32) -> Result<Tensor<S>> {
    term.check_signature(Signature::Ctd)?;
    check_generators(term, n_generators)?;
    let alg = CoeffAlgebra::sym(n_generators);
    evaluate(&mut QuasiShuffle::new(&alg), term)
}

/// Evaluates a TD term in `T^q(T̄(V))`.
pub fn eval_itd<S: Scalar>(term: &FreeTerm, n_generators: u32) -> Result<Tensor<S>> {
    check_generators(term, n_generators)?;
    let alg = CoeffAlgebra::word(n_generators);
    evaluate(&mut QuasiShuffle::new(&alg), term)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    /// Blocks are unordered (stored ascending).
    Ctd,
    /// Blocks are ordered.
    Itd,
}

/// A sequence of nonempty blocks of generator indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OUPartition {
    blocks: Vec<Vec<u32>>,
}

impl OUPartition {
    /// Ordered-ordered partition: blocks kept as given.
    pub fn ordered(blocks: Vec<Vec<u32>>) -> Result<Self> {
        if blocks.is_empty() || blocks.iter().any(Vec::is_empty) {
            return Err(Error::InvalidArgument("partitions need nonempty blocks".into()));
        }
        Ok(Self { blocks })
    }

    /// Ordered-unordered partition: each block sorted ascending.
    pub fn unordered(mut blocks: Vec<Vec<u32>>) -> Result<Self> {
        for b in &mut blocks {
            b.sort_unstable();
        }
        Self::ordered(blocks)
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn degree(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn is_multilinear(&self, n: u32) -> bool {
        let mut all: Vec<u32> = self.blocks.iter().flatten().copied().collect();
        all.sort_unstable();
        all == (1..=n).collect::<Vec<_>>()
    }

    /// The word of monomial letters `(block_1)(block_2)…` in `T^q(S̄(V))`.
    pub fn image_ctd(&self) -> Word {
        Word::new(self.blocks.iter().map(|b| Letter::Monomial(sorted(b))).collect())
    }

    /// The word of word-letters in `T^q(T̄(V))`.
    pub fn image_itd(&self) -> Word {
        Word::new(self.blocks.iter().map(|b| Letter::Word(b.clone())).collect())
    }

    /// The right comb `x_1 ≺ (x_2 ≺ (⋯ ≺ x_k))` whose `x_j` is the
    /// right-nested dot-monomial of block `j`.
    pub fn to_comb_term(&self) -> FreeTerm {
        let monomial = |b: &[u32]| {
            let mut it = b.iter().rev();
            let last = FreeTerm::Gen(*it.next().expect("nonempty block"));
            it.fold(last, |acc, &g| FreeTerm::dot(FreeTerm::Gen(g), acc))
        };
        let mut it = self.blocks.iter().rev();
        let last = monomial(it.next().expect("nonempty partition"));
        it.fold(last, |acc, b| FreeTerm::prec(monomial(b), acc))
    }
}

impl fmt::Display for OUPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_partition(self))
    }
}

fn sorted(b: &[u32]) -> Vec<u32> {
    let mut v = b.to_vec();
    v.sort_unstable();
    v
}

fn merge(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut v = Vec::with_capacity(a.len() + b.len());
    v.extend_from_slice(a);
    v.extend_from_slice(b);
    v.sort_unstable();
    v
}

/// Combination of normal combs, each stored as its block sequence.
pub type NormalForm<S> = LinComb<OUPartition, S>;

type Blocks = Vec<Vec<u32>>;

/// Rewrites CTD terms into right combs of ascending dot-monomials.
///
/// Subterms are normalized first (innermost), then combined with the case
/// analysis:
/// * `X ≺ Q` with `X` a dot-monomial is already normal;
/// * `(X ≺ P) ≺ Q = X ≺ (P≺Q + Q≺P + P·Q)`;
/// * `(X ≺ P)·(Y ≺ Q) = (X·Y) ≺ (P≺Q + Q≺P + P·Q)`, from commutativity of
///   `·`, `(x·y)≺z = x·(y≺z)` used twice, and the previous rule;
/// * `X·(Y ≺ Q) = (X·Y) ≺ Q`, and `X·Y` merges monomials using
///   associativity and commutativity of `·`.
pub struct Rewriter<S> {
    star_memo: HashMap<(Blocks, Blocks), NormalForm<S>>,
}

impl<S: Scalar> Default for Rewriter<S> {
    fn default() -> Self {
        Self { star_memo: HashMap::new() }
    }
}

impl<S: Scalar> Rewriter<S> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn normalize(&mut self, term: &FreeTerm) -> Result<NormalForm<S>> {
        term.check_signature(Signature::Ctd)?;
        Ok(self.normalize_checked(term))
    }

    fn normalize_checked(&mut self, term: &FreeTerm) -> NormalForm<S> {
        match term {
            FreeTerm::Gen(i) => LinComb::basis(OUPartition { blocks: vec![vec![*i]] }),
            FreeTerm::Bin(op, l, r) => {
                let l = self.normalize_checked(l);
                let r = self.normalize_checked(r);
                let mut out = NormalForm::zero();
                for (p, cp) in l.iter() {
                    for (q, cq) in r.iter() {
                        let combined = match op {
                            Op::Prec => self.left(&p.blocks, &q.blocks),
                            Op::Dot => self.dot(&p.blocks, &q.blocks),
                            Op::Succ => unreachable!("signature checked"),
                        };
                        out.add_scaled(&combined, &(cp.clone() * cq.clone()));
                    }
                }
                out
            }
        }
    }

    fn left(&mut self, p: &[Vec<u32>], q: &[Vec<u32>]) -> NormalForm<S> {
        if p.len() == 1 {
            let mut blocks = Vec::with_capacity(1 + q.len());
            blocks.push(p[0].clone());
            blocks.extend_from_slice(q);
            return LinComb::basis(OUPartition { blocks });
        }
        let tail = self.star(&p[1..], q);
        prepend_block(&p[0], &tail)
    }

    fn dot(&mut self, p: &[Vec<u32>], q: &[Vec<u32>]) -> NormalForm<S> {
        let head = merge(&p[0], &q[0]);
        let (pt, qt) = (&p[1..], &q[1..]);
        match (pt.is_empty(), qt.is_empty()) {
            (true, true) => LinComb::basis(OUPartition { blocks: vec![head] }),
            (true, false) | (false, true) => {
                let rest = if pt.is_empty() { qt } else { pt };
                let mut blocks = vec![head];
                blocks.extend_from_slice(rest);
                LinComb::basis(OUPartition { blocks })
            }
            (false, false) => {
                let tail = self.star(pt, qt);
                prepend_block(&head, &tail)
            }
        }
    }

    fn star(&mut self, p: &[Vec<u32>], q: &[Vec<u32>]) -> NormalForm<S> {
        let key = (p.to_vec(), q.to_vec());
        if let Some(hit) = self.star_memo.get(&key) {
            return hit.clone();
        }
        let mut out = self.left(p, q);
        out += &self.left(q, p);
        out += &self.dot(p, q);
        self.star_memo.insert(key, out.clone());
        out
    }
}

fn prepend_block<S: Scalar>(block: &[u32], tail: &NormalForm<S>) -> NormalForm<S> {
    tail.iter()
        .map(|(p, c)| {
            let mut blocks = Vec::with_capacity(p.blocks.len() + 1);
            blocks.push(block.to_vec());
            blocks.extend_from_slice(&p.blocks);
            (OUPartition { blocks }, c.clone())
        })
        .collect()
}

pub fn rewrite_to_normal_form<S: Scalar>(term: &FreeTerm) -> Result<NormalForm<S>> {
    Rewriter::new().normalize(term)
}

/// Re-normalizes every comb of `nf` (read back as a term).
pub fn renormalize<S: Scalar>(nf: &NormalForm<S>) -> Result<NormalForm<S>> {
    let mut rw = Rewriter::new();
    nf.try_map_linear(|p| rw.normalize(&p.to_comb_term()))
}

/// `Φ` applied to a normal form, through the comb terms.
pub fn eval_normal_form<S: Scalar>(nf: &NormalForm<S>, n_generators: u32) -> Result<Tensor<S>> {
    nf.try_map_linear(|p| eval_phi(&p.to_comb_term(), n_generators))
}

pub const MAX_CTD_ENUMERATION: usize = 8;
pub const MAX_ITD_ENUMERATION: usize = 6;

fn check_enumeration_size(n: usize, flavor: Flavor) -> Result<()> {
    let max = match flavor {
        Flavor::Ctd => MAX_CTD_ENUMERATION,
        Flavor::Itd => MAX_ITD_ENUMERATION,
    };
    if (1..=max).contains(&n) {
        Ok(())
    } else {
        Err(Error::Size { n, min: 1, max })
    }
}

/// Visits every multilinear partition of `{1..n}` of the given flavor.
pub fn for_each_ou_partition<F: FnMut(&OUPartition)>(n: usize, flavor: Flavor, mut f: F) -> Result<()> {
    check_enumeration_size(n, flavor)?;
    let full: u32 = (1u32 << n) - 1;
    let mut blocks = Vec::new();
    visit_set_compositions(full, &mut blocks, &mut |blocks: &[Vec<u32>]| match flavor {
        Flavor::Ctd => f(&OUPartition { blocks: blocks.to_vec() }),
        Flavor::Itd => {
            let mut ordered = blocks.to_vec();
            visit_block_orders(&mut ordered, 0, &mut f);
        }
    });
    Ok(())
}

fn visit_set_compositions(remaining: u32, blocks: &mut Vec<Vec<u32>>, f: &mut dyn FnMut(&[Vec<u32>])) {
    if remaining == 0 {
        f(blocks);
        return;
    }
    // nonempty submasks of `remaining`, each used as the next block
    let mut sub = remaining;
    while sub != 0 {
        let block: Vec<u32> = (0..32).filter(|b| sub & (1 << b) != 0).map(|b| b + 1).collect();
        blocks.push(block);
        visit_set_compositions(remaining & !sub, blocks, f);
        blocks.pop();
        sub = (sub - 1) & remaining;
    }
}

fn visit_block_orders<F: FnMut(&OUPartition)>(blocks: &mut Vec<Vec<u32>>, i: usize, f: &mut F) {
    if i == blocks.len() {
        f(&OUPartition { blocks: blocks.clone() });
        return;
    }
    let base = blocks[i].clone();
    for perm in permutations(&base) {
        blocks[i] = perm;
        visit_block_orders(blocks, i + 1, f);
    }
    blocks[i] = base;
}

/// All orderings of `items`.
pub fn permutations(items: &[u32]) -> Vec<Vec<u32>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

pub fn enumerate_ou_partitions(n: usize, flavor: Flavor) -> Result<Vec<OUPartition>> {
    let mut out = Vec::new();
    for_each_ou_partition(n, flavor, |p| out.push(p.clone()))?;
    Ok(out)
}

pub fn count_ou_partitions(n: usize, flavor: Flavor) -> Result<u64> {
    let mut count = 0u64;
    for_each_ou_partition(n, flavor, |_| count += 1)?;
    Ok(count)
}

fn binomial(n: usize, k: usize) -> BigUint {
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Ordered set partitions of `{1..n}`: `d_0 = 1`, `d_n = Σ_k C(n,k) d_{n−k}`
/// (choose the first block).
pub fn fubini(n: usize) -> BigUint {
    let mut d: Vec<BigUint> = vec![BigUint::one()];
    for m in 1..=n {
        let v = (1..=m).map(|k| binomial(m, k) * &d[m - k]).sum();
        d.push(v);
    }
    d.swap_remove(n)
}

/// `2^{n−1} · n!`, the number of ordered-ordered partitions of `{1..n}`.
pub fn ordered_ordered_count(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    let factorial: BigUint = (1..=n).map(BigUint::from).product();
    factorial << (n - 1)
}

/// Every binary tree over the given leaf sequence, with every internal node
/// labelled by one of `ops`.
pub fn trees_over(leaves: &[u32], ops: &[Op]) -> Vec<FreeTerm> {
    if leaves.len() == 1 {
        return vec![FreeTerm::Gen(leaves[0])];
    }
    let mut out = Vec::new();
    for k in 1..leaves.len() {
        let lefts = trees_over(&leaves[..k], ops);
        let rights = trees_over(&leaves[k..], ops);
        for l in &lefts {
            for r in &rights {
                for &op in ops {
                    out.push(FreeTerm::bin(op, l.clone(), r.clone()));
                }
            }
        }
    }
    out
}

/// All multilinear terms of degree `n` in the given signature.
pub fn multilinear_terms(n: u32, sig: Signature) -> Vec<FreeTerm> {
    let ops: &[Op] = match sig {
        Signature::Ctd => &[Op::Prec, Op::Dot],
        Signature::Td => &[Op::Prec, Op::Succ, Op::Dot],
    };
    let base: Vec<u32> = (1..=n).collect();
    permutations(&base).iter().flat_map(|leaves| trees_over(leaves, ops)).collect()
}

/// The CTD structure of `U_CTD(R) = T^q(R)` for a commutative algebra `R`.
pub struct Uctd<'a> {
    alg: &'a CoeffAlgebra,
}

impl<'a> Uctd<'a> {
    pub fn new(alg: &'a CoeffAlgebra) -> Result<Self> {
        if !alg.is_commutative() {
            return Err(Error::Unsupported {
                algebra: alg.name().to_string(),
                operation: "a CTD structure (it is not commutative)".into(),
            });
        }
        Ok(Self { alg })
    }

    pub fn left<S: Scalar>(&self, x: &Tensor<S>, y: &Tensor<S>) -> Result<Tensor<S>> {
        crate::tensorq::op_left(self.alg, x, y)
    }

    pub fn dot<S: Scalar>(&self, x: &Tensor<S>, y: &Tensor<S>) -> Result<Tensor<S>> {
        crate::tensorq::op_dot(self.alg, x, y)
    }

    pub fn star<S: Scalar>(&self, x: &Tensor<S>, y: &Tensor<S>) -> Result<Tensor<S>> {
        crate::tensorq::quasi_shuffle(self.alg, x, y)
    }

    /// The dot product of two letters equals their product in `R`, read as a
    /// combination of length-one words.
    pub fn identification_holds<S: Scalar>(&self, a: &Letter, b: &Letter) -> Result<bool> {
        let lhs: Tensor<S> = self.dot(&Tensor::letter(a.clone()), &Tensor::letter(b.clone()))?;
        let rhs: Tensor<S> = self.alg.multiply::<S>(a, b)?.map_linear(|l| Tensor::letter(l.clone()));
        Ok(lhs == rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_term;
    use crate::Q;

    fn g(i: u32) -> FreeTerm {
        FreeTerm::Gen(i)
    }

    fn mono(v: &[u32]) -> Letter {
        Letter::monomial(v.to_vec()).unwrap()
    }

    fn part(blocks: &[&[u32]]) -> OUPartition {
        OUPartition::unordered(blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    #[test]
    fn phi_on_small_terms() {
        let w = |ls: &[Letter]| Tensor::<Q>::basis(Word::new(ls.to_vec()));
        assert_eq!(eval_phi::<Q>(&FreeTerm::prec(g(1), g(2)), 2).unwrap(), w(&[mono(&[1]), mono(&[2])]));
        assert_eq!(eval_phi::<Q>(&FreeTerm::dot(g(1), g(2)), 2).unwrap(), w(&[mono(&[1, 2])]));
        assert_eq!(eval_phi::<Q>(&g(2), 2).unwrap(), w(&[mono(&[2])]));
        assert_eq!(eval_phi::<Q>(&FreeTerm::succ(g(1), g(2)), 2), Err(Error::Signature));
        assert!(eval_phi::<Q>(&g(3), 2).is_err());
    }

    #[test]
    fn itd_on_small_terms() {
        let w = |ls: &[Letter]| Tensor::<Q>::basis(Word::new(ls.to_vec()));
        let x = |i| Letter::Word(vec![i]);
        assert_eq!(eval_itd::<Q>(&FreeTerm::succ(g(1), g(2)), 2).unwrap(), w(&[x(2), x(1)]));
        assert_eq!(eval_itd::<Q>(&FreeTerm::dot(g(1), g(2)), 2).unwrap(), w(&[Letter::Word(vec![1, 2])]));
        assert_eq!(eval_itd::<Q>(&FreeTerm::prec(g(1), g(1)), 2).unwrap(), w(&[x(1), x(1)]));
    }

    #[test]
    fn relation_eight_normal_form() {
        let nf = rewrite_to_normal_form::<Q>(&parse_term("((a < b) < c)").unwrap()).unwrap();
        let expected: NormalForm<Q> = [
            (part(&[&[1], &[2], &[3]]), Q::one()),
            (part(&[&[1], &[3], &[2]]), Q::one()),
            (part(&[&[1], &[2, 3]]), Q::one()),
        ]
        .into_iter()
        .collect();
        assert_eq!(nf, expected);
    }

    #[test]
    fn already_normal_and_dot_ordering() {
        let nf = rewrite_to_normal_form::<Q>(&parse_term("((a . b) < c)").unwrap()).unwrap();
        assert_eq!(nf, NormalForm::basis(part(&[&[1, 2], &[3]])));
        let nf = rewrite_to_normal_form::<Q>(&parse_term("(b . a)").unwrap()).unwrap();
        assert_eq!(nf, NormalForm::basis(part(&[&[1, 2]])));
        assert_eq!(rewrite_to_normal_form::<Q>(&parse_term("(a > b)").unwrap()), Err(Error::Signature));
    }

    #[test]
    fn normal_forms_are_sound_and_idempotent_exhaustively() {
        for n in 1..=4 {
            for t in multilinear_terms(n, Signature::Ctd) {
                let nf = rewrite_to_normal_form::<Q>(&t).unwrap();
                assert_eq!(eval_normal_form(&nf, n).unwrap(), eval_phi::<Q>(&t, n).unwrap(), "{t}");
                assert_eq!(renormalize(&nf).unwrap(), nf);
            }
        }
    }

    #[test]
    fn comb_terms_evaluate_to_partition_images() {
        for p in enumerate_ou_partitions(4, Flavor::Ctd).unwrap() {
            assert_eq!(eval_phi::<Q>(&p.to_comb_term(), 4).unwrap(), Tensor::basis(p.image_ctd()));
        }
        for p in enumerate_ou_partitions(3, Flavor::Itd).unwrap() {
            assert_eq!(eval_itd::<Q>(&p.to_comb_term(), 3).unwrap(), Tensor::basis(p.image_itd()));
        }
    }

    #[test]
    fn small_enumerations() {
        let ctd2 = enumerate_ou_partitions(2, Flavor::Ctd).unwrap();
        let mut got: Vec<String> = ctd2.iter().map(ToString::to_string).collect();
        got.sort();
        assert_eq!(got, vec!["(v1 v2)", "(v1)(v2)", "(v2)(v1)"]);
        assert_eq!(count_ou_partitions(3, Flavor::Ctd).unwrap(), 13);
        let itd2 = enumerate_ou_partitions(2, Flavor::Itd).unwrap();
        let mut got: Vec<String> = itd2.iter().map(ToString::to_string).collect();
        got.sort();
        assert_eq!(got, vec!["(v1 v2)", "(v1)(v2)", "(v2 v1)", "(v2)(v1)"]);
        assert!(matches!(count_ou_partitions(9, Flavor::Ctd), Err(Error::Size { .. })));
        assert!(matches!(count_ou_partitions(7, Flavor::Itd), Err(Error::Size { .. })));
        assert!(matches!(count_ou_partitions(0, Flavor::Ctd), Err(Error::Size { .. })));
    }

    #[test]
    fn enumerations_are_duplicate_free_and_multilinear() {
        for n in 1..=5 {
            let all = enumerate_ou_partitions(n, Flavor::Ctd).unwrap();
            let set: std::collections::HashSet<_> = all.iter().cloned().collect();
            assert_eq!(set.len(), all.len());
            assert!(all.iter().all(|p| p.is_multilinear(n as u32)));
            assert!(all.iter().all(|p| p.blocks().iter().all(|b| b.windows(2).all(|w| w[0] < w[1]))));
        }
    }

    #[test]
    fn fubini_values() {
        let expect = [1u32, 1, 3, 13, 75, 541, 4683, 47293];
        for (n, &e) in expect.iter().enumerate() {
            assert_eq!(fubini(n), BigUint::from(e));
        }
        for n in 1..=7 {
            assert_eq!(BigUint::from(count_ou_partitions(n, Flavor::Ctd).unwrap()), fubini(n));
        }
    }

    #[test]
    fn ordered_ordered_values() {
        for (n, e) in [(1usize, 1u32), (2, 4), (3, 24), (4, 192), (5, 1920)] {
            assert_eq!(ordered_ordered_count(n), BigUint::from(e));
            assert_eq!(count_ou_partitions(n, Flavor::Itd).unwrap(), u64::from(e));
        }
    }

    #[test]
    fn multilinear_term_counts() {
        // Catalan(n-1) shapes × 2^{n-1} labellings × n! leaf orders
        assert_eq!(multilinear_terms(3, Signature::Ctd).len(), 2 * 4 * 6);
        assert_eq!(multilinear_terms(3, Signature::Td).len(), 2 * 9 * 6);
        assert!(multilinear_terms(4, Signature::Ctd).iter().all(|t| t.is_multilinear(4)));
    }

    #[test]
    fn uctd_identification() {
        let sym = CoeffAlgebra::sym(2);
        let u = Uctd::new(&sym).unwrap();
        assert!(u.identification_holds::<Q>(&mono(&[1]), &mono(&[2])).unwrap());
        let y = CoeffAlgebra::stuffle_y();
        let u = Uctd::new(&y).unwrap();
        let d: Tensor<Q> = u.dot(&Tensor::letter(Letter::Y(1)), &Tensor::letter(Letter::Y(2))).unwrap();
        assert_eq!(d, Tensor::letter(Letter::Y(3)));
        let zero = CoeffAlgebra::zero(4);
        let u = Uctd::new(&zero).unwrap();
        let d: Tensor<Q> = u.dot(&Tensor::letter(Letter::Atom(1)), &Tensor::letter(Letter::Atom(2))).unwrap();
        assert!(d.is_zero());
        assert!(u.identification_holds::<Q>(&Letter::Atom(1), &Letter::Atom(2)).unwrap());
        assert!(Uctd::new(&CoeffAlgebra::word(2)).is_err());
    }
}
