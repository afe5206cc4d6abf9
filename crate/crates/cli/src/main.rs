//! `quasishuffle`: command-line front-end to the quasi-shuffle kernel.
//!
//! Exit codes: 0 when every check passes, 1 on a law violation or count
//! mismatch, 2 on usage, parse or domain errors.

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use quasishuffle::bialg::{delta_free_ctd, splitting_report};
use quasishuffle::freectd::{count_ou_partitions, fubini, ordered_ordered_count, Flavor, Rewriter};
use quasishuffle::laws::{run_suite, Suite, SuiteConfig, SuiteReport};
use quasishuffle::rota::{check_star_morphism, derived_structure, example, rota_baxter_witness, structure_json};
use quasishuffle::series::egf_report;
use quasishuffle::syntax::{
    element_to_json, parse_element, parse_term, rational_json, render_element, render_normal_form, render_square,
};
use quasishuffle::tensorq::{apply_op, Operation};
use quasishuffle::{CoeffAlgebra, Error, Q};

#[derive(Parser)]
#[command(name = "quasishuffle", version, about = "Exact quasi-shuffle and tridendriform algebra")]
struct Cli {
    /// Print `{"command", "seed", "result"}` JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Multiply two elements of T^q(R).
    Product {
        #[arg(long)]
        alg: String,
        #[arg(long, value_enum, default_value_t = OpArg::Star)]
        op: OpArg,
        lhs: String,
        rhs: String,
    },
    /// Run a seeded law suite.
    Axioms {
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        #[command(flatten)]
        sample: SampleArgs,
    },
    /// Dimensions of the multilinear parts of free algebras, by enumeration
    /// and by formula.
    Dims {
        #[arg(long, value_enum)]
        flavor: FlavorArg,
        #[arg(long)]
        n: usize,
    },
    /// Check the exponential generating series of the Fubini numbers.
    Egf {
        #[arg(long, default_value_t = 10)]
        order: usize,
    },
    /// Normal form of a free CTD term, e.g. "((a<b)<c)".
    Normalize { term: String },
    /// Coproduct of a free CTD term.
    Coproduct { term: String },
    /// Bialgebra compatibility on seeded pairs.
    Compat {
        #[command(flatten)]
        sample: SampleArgs,
    },
    /// Witnesses of the structure theorem on words of bounded length.
    Splitting {
        /// Maximal word length.
        #[arg(long, default_value_t = 4)]
        degree: usize,
        #[arg(long, default_value_t = 2)]
        generators: u32,
    },
    /// Rota-Baxter operators on finite algebras.
    Rota {
        #[arg(value_enum)]
        action: RotaAction,
        #[arg(long, default_value = "summation3")]
        example: String,
    },
}

#[derive(Args)]
struct SampleArgs {
    #[arg(long, default_value = "sym2")]
    alg: String,
    #[arg(long, default_value_t = 200)]
    cases: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Bound on the summed degrees of the arguments of one case.
    #[arg(long, default_value_t = 6)]
    degree: u32,
    /// Check cases on all cores; the report is identical.
    #[arg(long)]
    parallel: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum OpArg {
    Left,
    Right,
    Dot,
    Star,
}

#[derive(Clone, Copy, ValueEnum)]
enum FlavorArg {
    Ctd,
    Itd,
}

#[derive(Clone, Copy, ValueEnum)]
enum RotaAction {
    Verify,
    Table,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    Suite::parse(s).ok_or_else(|| format!("unknown suite `{s}` (seven, ctd-three, bialgebra-compat, involution)"))
}

/// What a command produced.
struct Outcome {
    command: &'static str,
    seed: Option<u64>,
    text: String,
    result: Value,
    passed: bool,
}

impl Outcome {
    fn new(command: &'static str, text: String, result: Value, passed: bool) -> Self {
        Self { command, seed: None, text, result, passed }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            let text = if cli.json {
                let doc = json!({ "command": out.command, "seed": out.seed, "result": out.result });
                serde_json::to_string_pretty(&doc).expect("JSON values serialize") + "\n"
            } else {
                out.text
            };
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            // a failed Rota-Baxter identity is a law violation, not a usage error
            if matches!(e, Error::NotRotaBaxter(_)) {
                ExitCode::from(1)
            } else {
                ExitCode::from(2)
            }
        }
    }
}

fn run(command: Command) -> Result<Outcome, Error> {
    match command {
        Command::Product { alg, op, lhs, rhs } => product(&alg, op, &lhs, &rhs),
        Command::Axioms { suite, sample } => axioms("axioms", suite, &sample),
        Command::Dims { flavor, n } => dims(flavor, n),
        Command::Egf { order } => egf(order),
        Command::Normalize { term } => normalize(&term),
        Command::Coproduct { term } => coproduct(&term),
        Command::Compat { sample } => axioms("compat", Suite::BialgebraCompat, &sample),
        Command::Splitting { degree, generators } => splitting(degree, generators),
        Command::Rota { action, example } => rota(action, &example),
    }
}

fn product(alg: &str, op: OpArg, lhs: &str, rhs: &str) -> Result<Outcome, Error> {
    let alg = CoeffAlgebra::by_name(alg)?;
    let x = parse_element(&alg, lhs)?;
    let y = parse_element(&alg, rhs)?;
    let op = match op {
        OpArg::Left => Operation::Left,
        OpArg::Right => Operation::Right,
        OpArg::Dot => Operation::Dot,
        OpArg::Star => Operation::Star,
    };
    let z = apply_op(&alg, op, &x, &y)?;
    let result = json!({ "algebra": alg.name(), "element": element_to_json(&z) });
    Ok(Outcome::new("product", format!("{}\n", render_element(&z)), result, true))
}

fn axioms(command: &'static str, suite: Suite, args: &SampleArgs) -> Result<Outcome, Error> {
    let config = SuiteConfig {
        suite,
        algebra: CoeffAlgebra::by_name(&args.alg)?,
        cases: args.cases,
        seed: args.seed,
        degree: args.degree,
        parallel: args.parallel,
    };
    if config.cases == 0 {
        eprintln!("warning: --cases 0 checks nothing; the suite passes vacuously");
    }
    let report = run_suite::<Q>(&config)?;
    let mut out = Outcome::new(command, suite_text(&report, config.degree), suite_json(&report, config.degree), report.holds());
    out.seed = Some(config.seed);
    Ok(out)
}

fn suite_text(r: &SuiteReport, degree: u32) -> String {
    let mut s = format!(
        "suite {} on {}: seed {}, {} cases, degree <= {}\n",
        r.suite, r.algebra, r.seed, r.cases, degree
    );
    for v in &r.violations {
        s.push_str(&format!("{v}\n"));
    }
    let verdict = if r.holds() { "PASS" } else { "FAIL" };
    s.push_str(&format!("{verdict}: {} relation checks, {} violations\n", r.checks, r.violations.len()));
    s
}

fn suite_json(r: &SuiteReport, degree: u32) -> Value {
    let violations: Vec<Value> = r
        .violations
        .iter()
        .map(|v| json!({ "case": v.case, "relation": v.relation, "inputs": v.inputs, "lhs": v.lhs, "rhs": v.rhs }))
        .collect();
    json!({
        "suite": r.suite.name(),
        "algebra": r.algebra,
        "cases": r.cases,
        "degree": degree,
        "checks": r.checks,
        "passed": r.holds(),
        "violations": violations,
    })
}

fn dims(flavor: FlavorArg, n_max: usize) -> Result<Outcome, Error> {
    let (flavor, name, formula) = match flavor {
        FlavorArg::Ctd => (Flavor::Ctd, "ctd", "Fubini recurrence"),
        FlavorArg::Itd => (Flavor::Itd, "itd", "2^(n-1) n!"),
    };
    // validate the bound before any enumeration
    count_ou_partitions(n_max, flavor)?;
    let mut text = format!("n: enumerated {formula}\n");
    let mut rows = Vec::new();
    let mut passed = true;
    for n in 1..=n_max {
        let counted = count_ou_partitions(n, flavor)?;
        let expected = match flavor {
            Flavor::Ctd => fubini(n),
            Flavor::Itd => ordered_ordered_count(n),
        };
        let ok = expected == counted.into();
        passed &= ok;
        text.push_str(&format!("{n}: {counted} {expected} {}\n", if ok { "OK" } else { "MISMATCH" }));
        rows.push(json!({ "n": n, "enumerated": counted, "formula": expected.to_string(), "ok": ok }));
    }
    Ok(Outcome::new("dims", text, json!({ "flavor": name, "rows": rows }), passed))
}

fn egf(order: usize) -> Result<Outcome, Error> {
    let r = egf_report(order)?;
    let mut text = String::from("n: d_n/n! quotient composition\n");
    let mut rows = Vec::new();
    for i in 0..order {
        let ok = r.quotient[i] == r.expected[i] && r.composition[i] == r.quotient[i];
        text.push_str(&format!(
            "{}: {} {} {} {}\n",
            i + 1,
            r.expected[i],
            r.quotient[i],
            r.composition[i],
            if ok { "OK" } else { "MISMATCH" }
        ));
        rows.push(json!({
            "n": i + 1,
            "expected": rational_json(&r.expected[i]),
            "quotient": rational_json(&r.quotient[i]),
            "composition": rational_json(&r.composition[i]),
        }));
    }
    let result = json!({ "order": order, "holds": r.holds(), "rows": rows });
    Ok(Outcome::new("egf", text, result, r.holds()))
}

fn normalize(term: &str) -> Result<Outcome, Error> {
    let t = parse_term(term)?;
    let nf = Rewriter::<Q>::new().normalize(&t)?;
    let combs: Vec<Value> = nf
        .iter()
        .map(|(p, c)| json!({ "coeff": rational_json(c), "blocks": p.blocks() }))
        .collect();
    let result = json!({ "term": t.to_string(), "normal_form": combs });
    Ok(Outcome::new("normalize", format!("{}\n", render_normal_form(&nf)), result, true))
}

fn coproduct(term: &str) -> Result<Outcome, Error> {
    let t = parse_term(term)?;
    let d = delta_free_ctd::<Q>(&t, t.max_generator())?;
    let pairs: Vec<Value> = d
        .iter()
        .map(|((u, v), c)| json!({ "coeff": rational_json(c), "left": u.to_string(), "right": v.to_string() }))
        .collect();
    let result = json!({ "term": t.to_string(), "coproduct": pairs });
    Ok(Outcome::new("coproduct", format!("{}\n", render_square(&d)), result, true))
}

const MAX_SPLITTING_DEGREE: usize = 6;

fn splitting(degree: usize, generators: u32) -> Result<Outcome, Error> {
    if !(1..=MAX_SPLITTING_DEGREE).contains(&degree) {
        return Err(Error::Size { n: degree, min: 1, max: MAX_SPLITTING_DEGREE });
    }
    if !(1..=3).contains(&generators) {
        return Err(Error::Size { n: generators as usize, min: 1, max: 3 });
    }
    let r = splitting_report::<Q>(generators, degree)?;
    let yes = |b: bool| if b { "yes" } else { "NO" };
    let text = format!(
        "generators {}, words of length <= {}\n\
         phi(s(w)) = w on {} generator words: {}\n\
         s is a coalgebra map: {}\n\
         phi is a coalgebra map on {} words: {}\n\
         coradical degree = length: {}\n\
         {}\n",
        r.generators,
        r.max_length,
        r.generator_words,
        yes(r.phi_after_s_is_identity),
        yes(r.s_is_coalgebra_map),
        r.phi_words,
        yes(r.phi_is_coalgebra_map),
        yes(r.connected),
        if r.holds() { "PASS" } else { "FAIL" }
    );
    let result = json!({
        "generators": r.generators,
        "max_length": r.max_length,
        "generator_words": r.generator_words,
        "phi_words": r.phi_words,
        "phi_after_s_is_identity": r.phi_after_s_is_identity,
        "s_is_coalgebra_map": r.s_is_coalgebra_map,
        "phi_is_coalgebra_map": r.phi_is_coalgebra_map,
        "connected": r.connected,
        "holds": r.holds(),
    });
    Ok(Outcome::new("splitting", text, result, r.holds()))
}

fn rota(action: RotaAction, name: &str) -> Result<Outcome, Error> {
    let e = example::<Q>(name)?;
    let labels = e.algebra.labels();
    match action {
        RotaAction::Verify => {
            let start = Instant::now();
            let witness = rota_baxter_witness(&e.algebra, &e.operator);
            let mut text = format!("{}: {}\n", e.name, e.description);
            let mut result = json!({ "example": e.name, "rota_baxter": witness.is_none() });
            if let Some((i, j)) = witness {
                text.push_str(&format!("Rota-Baxter identity: FAILS at ({}, {})\nFAIL\n", labels[i], labels[j]));
                result["witness"] = json!([labels[i], labels[j]]);
                return Ok(Outcome::new("rota", text, result, false));
            }
            let d = derived_structure(&e.algebra, &e.operator)?;
            let star = check_star_morphism(&e.algebra, &e.operator)?;
            text.push_str("Rota-Baxter identity: holds on all basis pairs\n");
            text.push_str(&format!(
                "seven relations: {} basis triples, {} violations\n",
                d.triples,
                d.seven_violations.len()
            ));
            match &d.ctd_violations {
                Some(v) => text.push_str(&format!("CTD relations: {} basis triples, {} violations\n", d.triples, v.len())),
                None => text.push_str("CTD relations: skipped (algebra is not commutative)\n"),
            }
            for v in d.seven_violations.iter().chain(d.ctd_violations.iter().flatten()) {
                text.push_str(&format!("{v}\n"));
            }
            text.push_str(&format!("P is a (*, .)-morphism: {}\n", if star.holds { "yes" } else { "NO" }));
            let passed = d.holds() && star.holds;
            text.push_str(if passed { "PASS\n" } else { "FAIL\n" });
            result["triples"] = json!(d.triples);
            result["seven_violations"] = json!(d.seven_violations.len());
            result["ctd_violations"] = json!(d.ctd_violations.as_ref().map(Vec::len));
            result["star_morphism"] = json!(star.holds);
            result["passed"] = json!(passed);
            // timing goes to stderr so stdout stays deterministic
            eprintln!("checked in {:.1} ms", start.elapsed().as_secs_f64() * 1e3);
            Ok(Outcome::new("rota", text, result, passed))
        }
        RotaAction::Table => {
            let d = derived_structure(&e.algebra, &e.operator)?;
            let mut text = format!("{}: {}\n", e.name, e.description);
            for (sym, t) in [("<", &d.prec), (">", &d.succ), (".", &d.dot)] {
                text.push_str(&format!("\n{sym}\n"));
                for (i, row) in t.iter().enumerate() {
                    for (j, v) in row.iter().enumerate() {
                        text.push_str(&format!("{} {sym} {} = {}\n", labels[i], labels[j], e.algebra.render(v)));
                    }
                }
            }
            let mut result = structure_json(&d, &e.operator);
            result["example"] = json!(e.name);
            Ok(Outcome::new("rota", text, result, true))
        }
    }
}
