//! Cross-checks against values computed here by independent means.

use num_bigint::BigUint;
use num_traits::Zero;

use quasishuffle::freectd::{
    count_ou_partitions, enumerate_ou_partitions, fubini, multilinear_terms, Flavor, Rewriter, Signature,
};
use quasishuffle::linalg::SpanBuilder;
use quasishuffle::series::egf_report;
use quasishuffle::tensorq::{quasi_shuffle, Tensor, Word};
use quasishuffle::{CoeffAlgebra, Letter, Q};

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Delannoy numbers: lattice paths with unit east, north and diagonal steps.
fn delannoy(p: usize, q: usize) -> u64 {
    let mut d = vec![vec![1u64; q + 1]; p + 1];
    for i in 1..=p {
        for j in 1..=q {
            d[i][j] = d[i - 1][j] + d[i][j - 1] + d[i - 1][j - 1];
        }
    }
    d[p][q]
}

fn coefficient_sum(x: &Tensor<Q>) -> Q {
    x.iter().map(|(_, c)| c.clone()).sum()
}

#[test]
fn stuffle_coefficient_sums_are_delannoy_numbers() {
    // every γ-path contributes exactly one word with coefficient 1
    let alg = CoeffAlgebra::stuffle_y();
    for p in 0..=4 {
        for q in 0..=4 {
            let u = Tensor::basis(Word::new((1..=p as u32).map(Letter::Y).collect()));
            let v = Tensor::basis(Word::new((1..=q as u32).map(|k| Letter::Y(k + 10)).collect()));
            let s = coefficient_sum(&quasi_shuffle::<Q>(&alg, &u, &v).unwrap());
            assert_eq!(s, Q::from_integer(delannoy(p, q).into()), "p={p} q={q}");
        }
    }
}

#[test]
fn shuffles_of_distinct_letters_are_binomial() {
    let alg = CoeffAlgebra::zero(8);
    for p in 0..=4u32 {
        for q in 0..=4u32 {
            let u = Tensor::basis(Word::new((1..=p).map(Letter::Atom).collect()));
            let v = Tensor::basis(Word::new((5..5 + q).map(Letter::Atom).collect()));
            let x = quasi_shuffle::<Q>(&alg, &u, &v).unwrap();
            assert_eq!(x.len() as u64, binomial(u64::from(p + q), u64::from(p)));
            assert!(x.iter().all(|(_, c)| *c == Q::from_integer(1.into())));
        }
    }
}

/// `d_n = Σ_k k!·S(n, k)` with Stirling numbers of the second kind.
fn fubini_by_stirling(n: usize) -> BigUint {
    let mut s = vec![vec![BigUint::zero(); n + 1]; n + 1];
    s[0][0] = BigUint::from(1u32);
    for i in 1..=n {
        for k in 1..=i {
            s[i][k] = BigUint::from(k) * &s[i - 1][k] + &s[i - 1][k - 1];
        }
    }
    (0..=n).map(|k| (1..=k).map(BigUint::from).product::<BigUint>() * &s[n][k]).sum()
}

#[test]
fn fubini_agrees_with_stirling_formula() {
    for n in 0..=12 {
        assert_eq!(fubini(n), fubini_by_stirling(n), "n={n}");
    }
    for n in 1..=8 {
        assert_eq!(BigUint::from(count_ou_partitions(n, Flavor::Ctd).unwrap()), fubini_by_stirling(n));
    }
}

#[test]
fn egf_through_order_twelve() {
    assert!(egf_report(12).unwrap().holds());
    assert!(egf_report(13).is_err());
    assert!(egf_report(0).is_err());
}

#[test]
fn multilinear_normal_forms_span_fubini_many_dimensions() {
    // rank of the normal forms of all multilinear CTD terms is dim CTD(n)
    for n in 1..=4u32 {
        let basis = enumerate_ou_partitions(n as usize, Flavor::Ctd).unwrap();
        let index = |p| basis.iter().position(|b| *b == p).expect("multilinear normal form");
        let mut span = SpanBuilder::<Q>::new(basis.len());
        let mut rw = Rewriter::<Q>::new();
        for t in multilinear_terms(n, Signature::Ctd) {
            let nf = rw.normalize(&t).unwrap();
            let mut v = vec![Q::zero(); basis.len()];
            for (p, c) in nf.iter() {
                v[index(p.clone())] = c.clone();
            }
            span.insert(v);
        }
        assert_eq!(BigUint::from(span.rank()), fubini(n as usize), "n={n}");
    }
}
