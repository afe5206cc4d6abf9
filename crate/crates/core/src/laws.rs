//! Relation checkers for tridendriform, CTD and involutive structures, and
//! the seeded law suites behind `axioms`.

use std::fmt;

use rayon::prelude::*;

use crate::bialg::check_compat;
use crate::coeff::CoeffAlgebra;
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::sample::Sampler;
use crate::scalar::Scalar;
use crate::syntax::{render_element, render_power};
use crate::tensorq::{involute, Operation, QuasiShuffle, Tensor};

/// An algebra with operations `≺`, `≻`, `·` on linear combinations.
pub trait TriOps {
    type Key: Ord + Clone;
    type Scalar: Scalar;

    fn left(&mut self, x: &Elem<Self>, y: &Elem<Self>) -> Result<Elem<Self>>;
    fn right(&mut self, x: &Elem<Self>, y: &Elem<Self>) -> Result<Elem<Self>>;
    fn dot(&mut self, x: &Elem<Self>, y: &Elem<Self>) -> Result<Elem<Self>>;

    fn star(&mut self, x: &Elem<Self>, y: &Elem<Self>) -> Result<Elem<Self>> {
        let mut out = self.left(x, y)?;
        out += &self.right(x, y)?;
        out += &self.dot(x, y)?;
        Ok(out)
    }

    fn involute(&mut self, _x: &Elem<Self>) -> Result<Elem<Self>> {
        Err(Error::Unsupported { algebra: self.name(), operation: "an involution".into() })
    }

    fn name(&self) -> String;

    fn render(&self, x: &Elem<Self>) -> String;
}

pub type Elem<T> = LinComb<<T as TriOps>::Key, <T as TriOps>::Scalar>;

/// The tridendriform structure of `T^q(R)`.
pub struct TensorOps<'a, S> {
    engine: QuasiShuffle<'a, S>,
}

impl<'a, S: Scalar> TensorOps<'a, S> {
    pub fn new(alg: &'a CoeffAlgebra) -> Self {
        Self { engine: QuasiShuffle::new(alg) }
    }
}

impl<S: Scalar> TriOps for TensorOps<'_, S> {
    type Key = crate::tensorq::Word;
    type Scalar = S;

    fn left(&mut self, x: &Tensor<S>, y: &Tensor<S>) -> Result<Tensor<S>> {
        self.engine.op(Operation::Left, x, y)
    }

    fn right(&mut self, x: &Tensor<S>, y: &Tensor<S>) -> Result<Tensor<S>> {
        self.engine.op(Operation::Right, x, y)
    }

    fn dot(&mut self, x: &Tensor<S>, y: &Tensor<S>) -> Result<Tensor<S>> {
        self.engine.op(Operation::Dot, x, y)
    }

    fn star(&mut self, x: &Tensor<S>, y: &Tensor<S>) -> Result<Tensor<S>> {
        self.engine.op(Operation::Star, x, y)
    }

    fn involute(&mut self, x: &Tensor<S>) -> Result<Tensor<S>> {
        involute(self.engine.algebra(), x)
    }

    fn name(&self) -> String {
        self.engine.algebra().name().to_string()
    }

    fn render(&self, x: &Tensor<S>) -> String {
        render_element(x)
    }
}

/// A relation between two trilinear (or bilinear) expressions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Relation {
    pub id: &'static str,
    pub text: &'static str,
    pub arity: usize,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) {}", self.id, self.text)
    }
}

pub const SEVEN_RELATIONS: [Relation; 7] = [
    Relation { id: "td1", text: "(x≺y)≺z = x≺(y*z)", arity: 3 },
    Relation { id: "td2", text: "(x≻y)≺z = x≻(y≺z)", arity: 3 },
    Relation { id: "td3", text: "(x*y)≻z = x≻(y≻z)", arity: 3 },
    Relation { id: "td4", text: "(x·y)≺z = x·(y≺z)", arity: 3 },
    Relation { id: "td5", text: "(x≺y)·z = x·(y≻z)", arity: 3 },
    Relation { id: "td6", text: "(x≻y)·z = x≻(y·z)", arity: 3 },
    Relation { id: "td7", text: "(x·y)·z = x·(y·z)", arity: 3 },
];

pub const CTD_RELATIONS: [Relation; 3] = [
    Relation { id: "ctd1", text: "(x≺y)≺z = x≺(y≺z + z≺y + y·z)", arity: 3 },
    Relation { id: "ctd2", text: "(x·y)≺z = x·(y≺z)", arity: 3 },
    Relation { id: "ctd3", text: "(x·y)·z = x·(y·z)", arity: 3 },
];

pub const INVOLUTION_RELATIONS: [Relation; 3] = [
    Relation { id: "i≺", text: "ι(x≺y) = ι(y)≻ι(x)", arity: 2 },
    Relation { id: "i≻", text: "ι(x≻y) = ι(y)≺ι(x)", arity: 2 },
    Relation { id: "i·", text: "ι(x·y) = ι(y)·ι(x)", arity: 2 },
];

/// Both sides of `rel` on the given arguments.
pub fn sides<T: TriOps>(ops: &mut T, rel: &Relation, args: &[Elem<T>]) -> Result<(Elem<T>, Elem<T>)> {
    if args.len() != rel.arity {
        return Err(Error::InvalidArgument(format!("relation ({}) takes {} arguments", rel.id, rel.arity)));
    }
    let x = &args[0];
    let y = &args[1];
    if rel.arity == 2 {
        let (ix, iy) = (ops.involute(x)?, ops.involute(y)?);
        let (inner, rhs) = match rel.id {
            "i≺" => (ops.left(x, y)?, ops.right(&iy, &ix)?),
            "i≻" => (ops.right(x, y)?, ops.left(&iy, &ix)?),
            "i·" => (ops.dot(x, y)?, ops.dot(&iy, &ix)?),
            other => unreachable!("unknown relation {other}"),
        };
        return Ok((ops.involute(&inner)?, rhs));
    }
    let z = &args[2];
    Ok(match rel.id {
        "td1" => {
            let (xy, yz) = (ops.left(x, y)?, ops.star(y, z)?);
            (ops.left(&xy, z)?, ops.left(x, &yz)?)
        }
        "td2" => {
            let (xy, yz) = (ops.right(x, y)?, ops.left(y, z)?);
            (ops.left(&xy, z)?, ops.right(x, &yz)?)
        }
        "td3" => {
            let (xy, yz) = (ops.star(x, y)?, ops.right(y, z)?);
            (ops.right(&xy, z)?, ops.right(x, &yz)?)
        }
        "td4" | "ctd2" => {
            let (xy, yz) = (ops.dot(x, y)?, ops.left(y, z)?);
            (ops.left(&xy, z)?, ops.dot(x, &yz)?)
        }
        "td5" => {
            let (xy, yz) = (ops.left(x, y)?, ops.right(y, z)?);
            (ops.dot(&xy, z)?, ops.dot(x, &yz)?)
        }
        "td6" => {
            let (xy, yz) = (ops.right(x, y)?, ops.dot(y, z)?);
            (ops.dot(&xy, z)?, ops.right(x, &yz)?)
        }
        "td7" | "ctd3" => {
            let (xy, yz) = (ops.dot(x, y)?, ops.dot(y, z)?);
            (ops.dot(&xy, z)?, ops.dot(x, &yz)?)
        }
        "ctd1" => {
            let mut yz = ops.left(y, z)?;
            yz += &ops.left(z, y)?;
            yz += &ops.dot(y, z)?;
            let xy = ops.left(x, y)?;
            (ops.left(&xy, z)?, ops.left(x, &yz)?)
        }
        other => unreachable!("unknown relation {other}"),
    })
}

/// One failed instance of a relation, rendered for reporting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub case: usize,
    pub relation: String,
    pub inputs: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "case {}: relation {} fails", self.case, self.relation)?;
        for (name, v) in ["x", "y", "z"].iter().zip(&self.inputs) {
            writeln!(f, "  {name} = {v}")?;
        }
        writeln!(f, "  lhs = {}", self.lhs)?;
        write!(f, "  rhs = {}", self.rhs)
    }
}

/// Checks every relation on one argument tuple.
pub fn check_relations<T: TriOps>(ops: &mut T, rels: &[Relation], args: &[Elem<T>], case: usize) -> Result<Vec<Violation>> {
    let mut out = Vec::new();
    for rel in rels {
        let (lhs, rhs) = sides(ops, rel, args)?;
        if lhs != rhs {
            out.push(Violation {
                case,
                relation: rel.to_string(),
                inputs: args.iter().map(|a| ops.render(a)).collect(),
                lhs: ops.render(&lhs),
                rhs: ops.render(&rhs),
            });
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Seven,
    CtdThree,
    BialgebraCompat,
    Involution,
}

impl Suite {
    pub fn parse(s: &str) -> Option<Suite> {
        match s {
            "seven" | "seven-relations" => Some(Suite::Seven),
            "ctd-three" | "ctd" => Some(Suite::CtdThree),
            "bialgebra-compat" | "compat" => Some(Suite::BialgebraCompat),
            "involution" => Some(Suite::Involution),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Seven => "seven",
            Suite::CtdThree => "ctd-three",
            Suite::BialgebraCompat => "bialgebra-compat",
            Suite::Involution => "involution",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Suite::Seven | Suite::CtdThree => 3,
            Suite::BialgebraCompat | Suite::Involution => 2,
        }
    }

    pub fn relation_ids(self) -> Vec<String> {
        match self {
            Suite::Seven => SEVEN_RELATIONS.iter().map(|r| r.id.to_string()).collect(),
            Suite::CtdThree => CTD_RELATIONS.iter().map(|r| r.id.to_string()).collect(),
            Suite::Involution => INVOLUTION_RELATIONS.iter().map(|r| r.id.to_string()).collect(),
            Suite::BialgebraCompat => {
                use crate::bialg::CompatRelation::*;
                [Left, Dot, Coassociativity].iter().map(|r| r.id().to_string()).collect()
            }
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub algebra: CoeffAlgebra,
    pub cases: usize,
    pub seed: u64,
    /// Bound on the summed degrees of the arguments of one case.
    pub degree: u32,
    pub parallel: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub algebra: String,
    pub seed: u64,
    pub cases: usize,
    /// Relation instances evaluated.
    pub checks: usize,
    pub violations: Vec<Violation>,
}

impl SuiteReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

fn check_preconditions(config: &SuiteConfig) -> Result<()> {
    let alg = &config.algebra;
    let needs_commutative = matches!(config.suite, Suite::CtdThree | Suite::BialgebraCompat);
    if needs_commutative && !alg.is_commutative() {
        return Err(Error::Unsupported {
            algebra: alg.name().to_string(),
            operation: format!("the {} suite (it is not commutative)", config.suite),
        });
    }
    if config.suite == Suite::Involution && alg.involution().is_none() {
        return Err(Error::Unsupported { algebra: alg.name().to_string(), operation: "an involution".into() });
    }
    if (config.degree as usize) < config.suite.arity() {
        return Err(Error::InvalidArgument(format!(
            "degree bound {} is below the {} arguments of a case",
            config.degree,
            config.suite.arity()
        )));
    }
    Ok(())
}

fn run_case<S: Scalar>(config: &SuiteConfig, case: usize, args: &[Tensor<S>]) -> Result<Vec<Violation>> {
    let alg = &config.algebra;
    match config.suite {
        Suite::Seven => check_relations(&mut TensorOps::new(alg), &SEVEN_RELATIONS, args, case),
        Suite::CtdThree => check_relations(&mut TensorOps::new(alg), &CTD_RELATIONS, args, case),
        Suite::Involution => check_relations(&mut TensorOps::new(alg), &INVOLUTION_RELATIONS, args, case),
        Suite::BialgebraCompat => {
            let report = check_compat(alg, &args[0], &args[1])?;
            Ok(report
                .violations
                .into_iter()
                .map(|v| Violation {
                    case,
                    relation: v.relation.to_string(),
                    inputs: vec![render_element(&v.x), render_element(&v.y)],
                    lhs: render_power(&v.lhs),
                    rhs: render_power(&v.rhs),
                })
                .collect())
        }
    }
}

/// Samples `config.cases` argument tuples from the seed, then checks them.
/// Cases are sampled sequentially, so the report does not depend on
/// `config.parallel`.
pub fn run_suite<S: Scalar>(config: &SuiteConfig) -> Result<SuiteReport> {
    check_preconditions(config)?;
    let mut sampler = Sampler::new(config.seed);
    let inputs: Vec<Vec<Tensor<S>>> = (0..config.cases)
        .map(|_| sampler.elements(&config.algebra, config.suite.arity(), config.degree))
        .collect();
    let results: Vec<Result<Vec<Violation>>> = if config.parallel {
        inputs.par_iter().enumerate().map(|(i, args)| run_case(config, i, args)).collect()
    } else {
        inputs.iter().enumerate().map(|(i, args)| run_case(config, i, args)).collect()
    };
    let mut violations = Vec::new();
    for r in results {
        violations.extend(r?);
    }
    Ok(SuiteReport {
        suite: config.suite,
        algebra: config.algebra.name().to_string(),
        seed: config.seed,
        cases: config.cases,
        checks: config.cases * config.suite.relation_ids().len(),
        violations,
    })
}
