//! Seeded random sampling of letters, words, elements and free terms.
//!
//! Letters have degree at most 2, words have length 1..=3 and coefficients
//! are nonzero integers in `[-3, 3]`. Elements never contain the empty word.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coeff::{CoeffAlgebra, Letter};
use crate::freectd::{FreeTerm, Op};
use crate::scalar::Scalar;
use crate::tensorq::{Tensor, Word};

pub const MAX_LETTER_DEGREE: u32 = 2;
pub const MAX_WORD_LENGTH: usize = 3;
pub const MAX_TERMS: usize = 3;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn coefficient<S: Scalar>(&mut self) -> S {
        let mut c = 0;
        while c == 0 {
            c = self.rng.gen_range(-3..=3);
        }
        S::from_int(c)
    }

    pub fn letter(&mut self, alg: &CoeffAlgebra, max_degree: u32) -> Letter {
        let letters = alg.letters_up_to(max_degree.clamp(1, MAX_LETTER_DEGREE));
        letters.choose(&mut self.rng).expect("every algebra has degree-one letters").clone()
    }

    /// A nonempty word of total degree at most `max_degree` (at least 1).
    pub fn word(&mut self, alg: &CoeffAlgebra, max_degree: u32) -> Word {
        let max_degree = max_degree.max(1);
        let len = self.rng.gen_range(1..=MAX_WORD_LENGTH.min(max_degree as usize));
        let mut budget = max_degree;
        let mut letters = Vec::with_capacity(len);
        for remaining in (0..len).rev() {
            // keep at least one degree unit for each letter still to come
            let cap = budget - remaining as u32;
            let l = self.letter(alg, cap);
            budget -= l.degree();
            letters.push(l);
        }
        Word::new(letters)
    }

    /// A nonzero element without constant term whose words have degree at
    /// most `max_degree`.
    pub fn element<S: Scalar>(&mut self, alg: &CoeffAlgebra, max_degree: u32) -> Tensor<S> {
        loop {
            let terms = self.rng.gen_range(1..=MAX_TERMS);
            let mut x = Tensor::zero();
            for _ in 0..terms {
                let w = self.word(alg, max_degree);
                let c = self.coefficient();
                if !x.contains(&w) {
                    x.add_term(w, c);
                }
            }
            if !x.is_zero() {
                return x;
            }
        }
    }

    /// Degree budgets for `k` arguments, each at least 1, summing to at most `total`.
    pub fn budgets(&mut self, k: usize, total: u32) -> Vec<u32> {
        assert!(total as usize >= k, "degree bound too small for {k} arguments");
        loop {
            let b: Vec<u32> = (0..k).map(|_| self.rng.gen_range(1..=total)).collect();
            if b.iter().sum::<u32>() <= total {
                return b;
            }
        }
    }

    /// `k` elements whose combined degree is at most `total`.
    pub fn elements<S: Scalar>(&mut self, alg: &CoeffAlgebra, k: usize, total: u32) -> Vec<Tensor<S>> {
        let budgets = self.budgets(k, total);
        budgets.into_iter().map(|d| self.element(alg, d)).collect()
    }

    /// A random term of exactly `degree` leaves over generators `1..=generators`,
    /// using the operations in `ops`.
    pub fn term(&mut self, degree: u32, generators: u32, ops: &[Op]) -> FreeTerm {
        assert!(degree >= 1);
        if degree == 1 {
            return FreeTerm::Gen(self.rng.gen_range(1..=generators));
        }
        let split = self.rng.gen_range(1..degree);
        let op = *ops.choose(&mut self.rng).expect("at least one operation");
        let left = self.term(split, generators, ops);
        let right = self.term(degree - split, generators, ops);
        FreeTerm::bin(op, left, right)
    }

    /// A CTD-signature term of degree `1..=max_degree`.
    pub fn ctd_term(&mut self, max_degree: u32, generators: u32) -> FreeTerm {
        let d = self.rng.gen_range(1..=max_degree);
        self.term(d, generators, &[Op::Prec, Op::Dot])
    }
}
