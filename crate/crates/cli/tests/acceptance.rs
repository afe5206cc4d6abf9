//! Acceptance gate: runs every criterion at its stated size and time limit,
//! printing one PASS/FAIL line per criterion. Exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rayon::prelude::*;
use quasishuffle::bialg::{
    letter_pairs, primitive_kernel_is_letter_span, primitives_closed_under_dot, splitting_report,
};
use quasishuffle::coeff::builtin_algebras;
use quasishuffle::freectd::{
    count_ou_partitions, eval_phi, fubini, ordered_ordered_count, Flavor, Rewriter,
};
use quasishuffle::laws::{run_suite, Suite, SuiteConfig};
use quasishuffle::rota::{check_star_morphism, derived_structure, verify_rota_baxter};
use quasishuffle::sample::Sampler;
use quasishuffle::series::egf_report;
use quasishuffle::tensorq::{
    op_dot, op_left, op_right, quasi_shuffle, quasi_shuffle_paths, words_of_degree, Tensor,
};
use quasishuffle::{CoeffAlgebra, FiniteAlgebra, LinearOperator, Q};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn suite(suite: Suite, alg: CoeffAlgebra, cases: usize, seed: u64) -> Result<usize, String> {
    let name = alg.name().to_string();
    let config = SuiteConfig { suite, algebra: alg, cases, seed, degree: 6, parallel: true };
    let r = run_suite::<Q>(&config).map_err(|e| e.to_string())?;
    match r.violations.first() {
        None => Ok(r.checks),
        Some(v) => Err(format!("{} on {name}: {} violations, first:\n{v}", suite, r.violations.len())),
    }
}

fn fubini_table() -> Check {
    let printed = [1u32, 3, 13, 75, 541, 4683];
    for (i, &d) in printed.iter().enumerate() {
        let n = i + 1;
        let counted = count_ou_partitions(n, Flavor::Ctd).map_err(|e| e.to_string())?;
        ensure(BigUint::from(counted) == BigUint::from(d), format!("n={n}: enumerated {counted}, table {d}"))?;
        ensure(fubini(n) == BigUint::from(d), format!("n={n}: recurrence {}, table {d}", fubini(n)))?;
    }
    Ok("d_1..d_6 = 1 3 13 75 541 4683 by enumeration and recurrence".into())
}

fn itd_dims() -> Check {
    let printed = [1u32, 4, 24, 192, 1920];
    for (i, &d) in printed.iter().enumerate() {
        let n = i + 1;
        let counted = count_ou_partitions(n, Flavor::Itd).map_err(|e| e.to_string())?;
        ensure(counted == u64::from(d), format!("n={n}: enumerated {counted}, expected {d}"))?;
        ensure(ordered_ordered_count(n) == BigUint::from(d), format!("n={n}: 2^(n-1) n! mismatch"))?;
    }
    Ok("1 4 24 192 1920 = 2^(n-1) n!".into())
}

fn egf() -> Check {
    let r = egf_report(10).map_err(|e| e.to_string())?;
    ensure(r.quotient_matches(), "quotient series differs from d_n/n!")?;
    ensure(r.composition_matches(), "composition differs from quotient")?;
    Ok("orders 1..=10 agree".into())
}

fn oracle_equivalence() -> Check {
    let mut pairs = 0usize;
    for alg in [CoeffAlgebra::sym(2), CoeffAlgebra::stuffle_y(), CoeffAlgebra::word(2), CoeffAlgebra::zero(4)] {
        let by_degree: Vec<_> = (0..=6).map(|d| words_of_degree(&alg, d)).collect();
        let mut work = Vec::new();
        for p in 0..=6 {
            for q in 0..=(6 - p) {
                for u in &by_degree[p] {
                    work.push((u, q));
                }
            }
        }
        let counts: Vec<usize> = work
            .par_iter()
            .map(|&(u, q)| {
                for v in &by_degree[q] {
                    let rec = quasi_shuffle::<Q>(&alg, &Tensor::basis(u.clone()), &Tensor::basis(v.clone()))
                        .map_err(|e| e.to_string())?;
                    let paths = quasi_shuffle_paths::<Q>(&alg, u, v).map_err(|e| e.to_string())?;
                    ensure(rec == paths, format!("{}: {u} * {v} differs", alg.name()))?;
                }
                Ok(by_degree[q].len())
            })
            .collect::<Result<_, String>>()?;
        pairs += counts.iter().sum::<usize>();
    }
    Ok(format!("{pairs} word pairs with deg u + deg v <= 6 over sym2, stuffle-y, word2, zero"))
}

fn law_suites() -> Check {
    let mut checks = suite(Suite::Seven, CoeffAlgebra::word(2), 200, 1)?;
    for alg in [CoeffAlgebra::sym(2), CoeffAlgebra::stuffle_y(), CoeffAlgebra::zero(4)] {
        checks += suite(Suite::CtdThree, alg, 200, 1)?;
    }
    Ok(format!("{checks} relation instances, 0 violations"))
}

fn splitting_law() -> Check {
    let mut pairs = 0;
    for alg in builtin_algebras() {
        let mut s = Sampler::new(2);
        for _ in 0..200 {
            let [x, y]: [Tensor<Q>; 2] = s.elements(&alg, 2, 6).try_into().expect("two elements");
            let err = |e: quasishuffle::Error| e.to_string();
            let mut sum = op_left(&alg, &x, &y).map_err(err)?;
            sum += &op_right(&alg, &x, &y).map_err(err)?;
            sum += &op_dot(&alg, &x, &y).map_err(err)?;
            ensure(sum == quasi_shuffle(&alg, &x, &y).map_err(err)?, format!("{}: split fails", alg.name()))?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} pairs over {} algebras", builtin_algebras().len()))
}

fn rewriting() -> Check {
    let mut s = Sampler::new(3);
    let mut rw = Rewriter::<Q>::new();
    for _ in 0..500 {
        let t = s.ctd_term(6, 3);
        let n = t.max_generator();
        let nf = rw.normalize(&t).map_err(|e| e.to_string())?;
        let back = nf
            .try_map_linear(|p| eval_phi::<Q>(&p.to_comb_term(), n))
            .map_err(|e| e.to_string())?;
        ensure(back == eval_phi::<Q>(&t, n).map_err(|e| e.to_string())?, format!("unsound on {t}"))?;
        let again = nf.try_map_linear(|p| rw.normalize(&p.to_comb_term())).map_err(|e| e.to_string())?;
        ensure(again == nf, format!("not idempotent on {t}"))?;
    }
    Ok("500 terms: sound and idempotent".into())
}

fn compat() -> Check {
    let mut checks = 0;
    for alg in [CoeffAlgebra::sym(2), CoeffAlgebra::stuffle_y()] {
        checks += suite(Suite::BialgebraCompat, alg, 200, 1)?;
    }
    Ok(format!("{checks} checks (≺, ·, coassociativity) over sym2 and stuffle-y"))
}

fn primitives() -> Check {
    let mut pairs = 0;
    for alg in [CoeffAlgebra::sym(2), CoeffAlgebra::stuffle_y(), CoeffAlgebra::zero(4)] {
        let sample = letter_pairs::<Q>(&alg, 3);
        pairs += sample.len();
        let closed = primitives_closed_under_dot(&alg, &sample).map_err(|e| e.to_string())?;
        ensure(closed, format!("{}: a product of primitives is not primitive", alg.name()))?;
    }
    let sym2 = CoeffAlgebra::sym(2);
    for d in 1..=3 {
        ensure(primitive_kernel_is_letter_span::<Q>(&sym2, d), format!("kernel differs in degree {d}"))?;
    }
    Ok(format!("{pairs} letter pairs closed; kernel = letter span in degrees 1..=3"))
}

fn structure_theorem() -> Check {
    let r = splitting_report::<Q>(2, 4).map_err(|e| e.to_string())?;
    ensure(r.holds(), format!("{r:?}"))?;
    Ok(format!("{} generator words, {} words of T^q(sym2)", r.generator_words, r.phi_words))
}

fn rota_baxter() -> Check {
    let r = FiniteAlgebra::functions(3);
    let p = LinearOperator::summation(3);
    ensure(verify_rota_baxter(&r, &p), "summation operator fails the identity")?;
    let d = derived_structure(&r, &p).map_err(|e| e.to_string())?;
    ensure(d.triples == 27 && d.seven_violations.is_empty(), "seven relations fail")?;
    ensure(check_star_morphism(&r, &p).map_err(|e| e.to_string())?.holds, "P is not a morphism")?;
    Ok("27 triples, P(a*b) = P(a)P(b)".into())
}

fn involution() -> Check {
    let checks = suite(Suite::Involution, CoeffAlgebra::word(2), 200, 1)?;
    Ok(format!("{checks} relation instances over word2"))
}

fn main() -> ExitCode {
    let criteria: [(&str, Duration, fn() -> Check); 12] = [
        ("Fubini dimension table", Duration::from_secs(10), fubini_table),
        ("ITD dimensions", Duration::from_secs(10), itd_dims),
        ("EGF identity", Duration::from_secs(1), egf),
        ("oracle equivalence", Duration::from_secs(60), oracle_equivalence),
        ("law suites", Duration::from_secs(60), law_suites),
        ("splitting law", Duration::from_secs(10), splitting_law),
        ("rewriting soundness", Duration::from_secs(60), rewriting),
        ("bialgebra compatibility", Duration::from_secs(60), compat),
        ("primitive closure", Duration::from_secs(60), primitives),
        ("structure-theorem witnesses", Duration::from_secs(60), structure_theorem),
        ("Rota-Baxter", Duration::from_secs(1), rota_baxter),
        ("involution", Duration::from_secs(30), involution),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let (verdict, detail) = match outcome {
            Ok(_) if took > *limit => ("FAIL", format!("took {:.2} s, limit {} s", took.as_secs_f64(), limit.as_secs())),
            Ok(d) => ("PASS", d),
            Err(e) => ("FAIL", e),
        };
        if verdict == "FAIL" {
            failed += 1;
        }
        println!(
            "[{verdict}] {:>2}. {name} ({:.2} s / {} s): {detail}",
            i + 1,
            took.as_secs_f64(),
            limit.as_secs()
        );
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
