//! Weight-one Rota-Baxter operators on finite-dimensional algebras and the
//! tridendriform structure they induce: `a≺b = a·P(b)`, `a≻b = P(a)·b`.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::laws::{check_relations, TriOps, Violation, CTD_RELATIONS, SEVEN_RELATIONS};
use crate::lincomb::LinComb;
use crate::scalar::Scalar;

/// Vector in a finite algebra, indexed by basis position.
pub type Vector<S> = LinComb<usize, S>;

/// An associative algebra given by structure constants on a basis.
#[derive(Clone, Debug, PartialEq)]
pub struct FiniteAlgebra<S: Scalar> {
    labels: Vec<String>,
    table: Vec<Vec<Vector<S>>>,
    commutative: bool,
}

impl<S: Scalar> FiniteAlgebra<S> {
    /// `table[i][j]` is `e_i · e_j`. Associativity is checked on all basis
    /// triples.
    pub fn new(labels: Vec<String>, table: Vec<Vec<Vector<S>>>) -> Result<Self> {
        let m = labels.len();
        if m == 0 || table.len() != m || table.iter().any(|row| row.len() != m) {
            return Err(Error::InvalidArgument("structure constants must form an m×m table".into()));
        }
        if table.iter().flatten().any(|v| v.keys().any(|&k| k >= m)) {
            return Err(Error::InvalidArgument("structure constants refer to a missing basis vector".into()));
        }
        let commutative = (0..m).all(|i| (0..m).all(|j| table[i][j] == table[j][i]));
        let alg = Self { labels, table, commutative };
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    let (a, b, c) = (alg.basis(i), alg.basis(j), alg.basis(k));
                    if alg.mul(&alg.mul(&a, &b), &c) != alg.mul(&a, &alg.mul(&b, &c)) {
                        return Err(Error::InvalidArgument(format!(
                            "product is not associative on ({}, {}, {})",
                            alg.labels[i], alg.labels[j], alg.labels[k]
                        )));
                    }
                }
            }
        }
        Ok(alg)
    }

    /// Functions on `m` points with pointwise product: `e_i e_j = δ_ij e_i`.
    pub fn functions(m: usize) -> Self {
        let labels = (1..=m).map(|i| format!("e{i}")).collect();
        let table = (0..m)
            .map(|i| (0..m).map(|j| if i == j { Vector::basis(i) } else { Vector::zero() }).collect())
            .collect();
        Self::new(labels, table).expect("pointwise product is associative")
    }

    /// Upper triangular 2×2 matrices on the basis `E11, E12, E22`.
    pub fn upper_triangular() -> Self {
        let labels = ["E11", "E12", "E22"].map(String::from).to_vec();
        let (e11, e12, e22) = (0, 1, 2);
        let mut table = vec![vec![Vector::zero(); 3]; 3];
        table[e11][e11] = Vector::basis(e11);
        table[e11][e12] = Vector::basis(e12);
        table[e12][e22] = Vector::basis(e12);
        table[e22][e22] = Vector::basis(e22);
        Self::new(labels, table).expect("matrix product is associative")
    }

    pub fn dimension(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    pub fn basis(&self, i: usize) -> Vector<S> {
        Vector::basis(i)
    }

    pub fn mul(&self, a: &Vector<S>, b: &Vector<S>) -> Vector<S> {
        let mut out = Vector::zero();
        for (&i, ca) in a.iter() {
            for (&j, cb) in b.iter() {
                out.add_scaled(&self.table[i][j], &(ca.clone() * cb.clone()));
            }
        }
        out
    }

    pub fn render(&self, v: &Vector<S>) -> String {
        if v.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (&i, c)) in v.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                out.push_str(if neg { "-" } else { "" });
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if !abs.is_one() {
                out.push_str(&format!("{abs}*"));
            }
            out.push_str(&self.labels[i]);
        }
        out
    }
}

/// Linear map given by its matrix: `P(e_j) = Σ_i matrix[i][j] e_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearOperator<S: Scalar> {
    matrix: Vec<Vec<S>>,
}

impl<S: Scalar> LinearOperator<S> {
    pub fn from_matrix(matrix: Vec<Vec<S>>) -> Result<Self> {
        let m = matrix.len();
        if m == 0 || matrix.iter().any(|r| r.len() != m) {
            return Err(Error::InvalidArgument("operator matrix must be square".into()));
        }
        Ok(Self { matrix })
    }

    pub fn from_images(images: &[Vector<S>]) -> Result<Self> {
        let m = images.len();
        let matrix = (0..m).map(|i| (0..m).map(|j| images[j].coeff(&i)).collect()).collect();
        Self::from_matrix(matrix)
    }

    /// `P(f)(n) = Σ_{i<n} f(i)` on functions on `m` points, i.e.
    /// `P(e_i) = Σ_{n>i} e_n`.
    pub fn summation(m: usize) -> Self {
        let images: Vec<Vector<S>> = (0..m).map(|i| ((i + 1)..m).map(|n| (n, S::one())).collect()).collect();
        Self::from_images(&images).expect("nonempty")
    }

    pub fn scalar(m: usize, c: S) -> Self {
        let matrix = (0..m).map(|i| (0..m).map(|j| if i == j { c.clone() } else { S::zero() }).collect()).collect();
        Self { matrix }
    }

    pub fn zero(m: usize) -> Self {
        Self::scalar(m, S::zero())
    }

    pub fn identity(m: usize) -> Self {
        Self::scalar(m, S::one())
    }

    pub fn dimension(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<S>] {
        &self.matrix
    }

    pub fn apply(&self, v: &Vector<S>) -> Vector<S> {
        let mut out = Vector::zero();
        for (&j, c) in v.iter() {
            for (i, row) in self.matrix.iter().enumerate() {
                out.add_term(i, row[j].clone() * c.clone());
            }
        }
        out
    }
}

fn check_dimensions<S: Scalar>(r: &FiniteAlgebra<S>, p: &LinearOperator<S>) -> Result<()> {
    if r.dimension() == p.dimension() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "operator of size {} on an algebra of dimension {}",
            p.dimension(),
            r.dimension()
        )))
    }
}

/// First basis pair violating `P(a)P(b) = P(aP(b) + P(a)b + ab)`.
pub fn rota_baxter_witness<S: Scalar>(r: &FiniteAlgebra<S>, p: &LinearOperator<S>) -> Option<(usize, usize)> {
    let m = r.dimension();
    for i in 0..m {
        for j in 0..m {
            let (a, b) = (r.basis(i), r.basis(j));
            let (pa, pb) = (p.apply(&a), p.apply(&b));
            let lhs = r.mul(&pa, &pb);
            let mut inner = r.mul(&a, &pb);
            inner += &r.mul(&pa, &b);
            inner += &r.mul(&a, &b);
            if lhs != p.apply(&inner) {
                return Some((i, j));
            }
        }
    }
    None
}

pub fn verify_rota_baxter<S: Scalar>(r: &FiniteAlgebra<S>, p: &LinearOperator<S>) -> bool {
    r.dimension() == p.dimension() && rota_baxter_witness(r, p).is_none()
}

/// The operations induced on `R` by `P`.
pub struct Derived<'a, S: Scalar> {
    pub algebra: &'a FiniteAlgebra<S>,
    pub operator: &'a LinearOperator<S>,
}

impl<S: Scalar> TriOps for Derived<'_, S> {
    type Key = usize;
    type Scalar = S;

    fn left(&mut self, x: &Vector<S>, y: &Vector<S>) -> Result<Vector<S>> {
        Ok(self.algebra.mul(x, &self.operator.apply(y)))
    }

    fn right(&mut self, x: &Vector<S>, y: &Vector<S>) -> Result<Vector<S>> {
        Ok(self.algebra.mul(&self.operator.apply(x), y))
    }

    fn dot(&mut self, x: &Vector<S>, y: &Vector<S>) -> Result<Vector<S>> {
        Ok(self.algebra.mul(x, y))
    }

    fn name(&self) -> String {
        "derived".into()
    }

    fn render(&self, x: &Vector<S>) -> String {
        self.algebra.render(x)
    }
}

/// Operation tables of the derived structure with the relation checks.
#[derive(Clone, Debug, PartialEq)]
pub struct DerivedStructure<S: Scalar> {
    pub labels: Vec<String>,
    pub prec: Vec<Vec<Vector<S>>>,
    pub succ: Vec<Vec<Vector<S>>>,
    pub dot: Vec<Vec<Vector<S>>>,
    /// Basis triples checked.
    pub triples: usize,
    pub seven_violations: Vec<Violation>,
    /// `None` when `R` is not commutative.
    pub ctd_violations: Option<Vec<Violation>>,
}

impl<S: Scalar> DerivedStructure<S> {
    pub fn holds(&self) -> bool {
        self.seven_violations.is_empty() && self.ctd_violations.as_ref().is_none_or(Vec::is_empty)
    }
}

fn table<S: Scalar>(m: usize, mut f: impl FnMut(usize, usize) -> Result<Vector<S>>) -> Result<Vec<Vec<Vector<S>>>> {
    (0..m).map(|i| (0..m).map(|j| f(i, j)).collect()).collect()
}

/// Builds the tables and checks the seven relations (and the three CTD
/// relations when `R` is commutative) on all basis triples.
pub fn derived_structure<S: Scalar>(r: &FiniteAlgebra<S>, p: &LinearOperator<S>) -> Result<DerivedStructure<S>> {
    check_dimensions(r, p)?;
    if let Some((i, j)) = rota_baxter_witness(r, p) {
        return Err(Error::NotRotaBaxter(format!(
            "P(a)P(b) = P(aP(b) + P(a)b + ab) fails for a = {}, b = {}",
            r.labels[i], r.labels[j]
        )));
    }
    let m = r.dimension();
    let mut ops = Derived { algebra: r, operator: p };
    let prec = table(m, |i, j| ops.left(&r.basis(i), &r.basis(j)))?;
    let succ = table(m, |i, j| ops.right(&r.basis(i), &r.basis(j)))?;
    let dot = table(m, |i, j| ops.dot(&r.basis(i), &r.basis(j)))?;
    let mut seven = Vec::new();
    let mut ctd = r.is_commutative().then(Vec::new);
    let mut case = 0;
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                let args = [r.basis(i), r.basis(j), r.basis(k)];
                seven.extend(check_relations(&mut ops, &SEVEN_RELATIONS, &args, case)?);
                if let Some(c) = ctd.as_mut() {
                    c.extend(check_relations(&mut ops, &CTD_RELATIONS, &args, case)?);
                }
                case += 1;
            }
        }
    }
    Ok(DerivedStructure {
        labels: r.labels.clone(),
        prec,
        succ,
        dot,
        triples: case,
        seven_violations: seven,
        ctd_violations: ctd,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarMorphism {
    pub holds: bool,
    /// First basis pair with `P(a*b) ≠ P(a)·P(b)`.
    pub witness: Option<(usize, usize)>,
}

/// Whether `P(a*b) = P(a)·P(b)` on all basis pairs, with
/// `a*b = a≺b + a≻b + a·b` built from the derived operations.
pub fn check_star_morphism<S: Scalar>(r: &FiniteAlgebra<S>, p: &LinearOperator<S>) -> Result<StarMorphism> {
    check_dimensions(r, p)?;
    let mut ops = Derived { algebra: r, operator: p };
    let m = r.dimension();
    for i in 0..m {
        for j in 0..m {
            let (a, b) = (r.basis(i), r.basis(j));
            let star = ops.star(&a, &b)?;
            if p.apply(&star) != r.mul(&p.apply(&a), &p.apply(&b)) {
                return Ok(StarMorphism { holds: false, witness: Some((i, j)) });
            }
        }
    }
    Ok(StarMorphism { holds: true, witness: None })
}

/// A named algebra-operator pair.
pub struct Example<S: Scalar> {
    pub name: &'static str,
    pub description: &'static str,
    pub algebra: FiniteAlgebra<S>,
    pub operator: LinearOperator<S>,
}

pub const EXAMPLE_NAMES: [&str; 6] = ["summation3", "summation4", "zero3", "identity3", "negid3", "negid-upper"];

pub fn example<S: Scalar>(name: &str) -> Result<Example<S>> {
    let (description, algebra, operator) = match name {
        "summation3" => ("summation operator on functions on 3 points", FiniteAlgebra::functions(3), LinearOperator::summation(3)),
        "summation4" => ("summation operator on functions on 4 points", FiniteAlgebra::functions(4), LinearOperator::summation(4)),
        "zero3" => ("zero operator on functions on 3 points", FiniteAlgebra::functions(3), LinearOperator::zero(3)),
        "identity3" => ("identity on functions on 3 points", FiniteAlgebra::functions(3), LinearOperator::identity(3)),
        "negid3" => ("minus the identity on functions on 3 points", FiniteAlgebra::functions(3), LinearOperator::scalar(3, -S::one())),
        "negid-upper" => (
            "minus the identity on upper triangular 2×2 matrices",
            FiniteAlgebra::upper_triangular(),
            LinearOperator::scalar(3, -S::one()),
        ),
        other => {
            return Err(Error::InvalidArgument(format!(
                "unknown example `{other}` (expected one of {})",
                EXAMPLE_NAMES.join(", ")
            )))
        }
    };
    let name = EXAMPLE_NAMES.iter().find(|n| **n == name).expect("matched above");
    Ok(Example { name, description, algebra, operator })
}

fn vector_json<S: Scalar>(labels: &[String], v: &Vector<S>) -> Value {
    Value::Object(v.iter().map(|(&i, c)| (labels[i].clone(), Value::String(c.to_string()))).collect())
}

fn table_json<S: Scalar>(labels: &[String], t: &[Vec<Vector<S>>]) -> Value {
    Value::Array(t.iter().map(|row| Value::Array(row.iter().map(|v| vector_json(labels, v)).collect())).collect())
}

/// Structure constants as JSON: `prec[i][j]` maps basis labels to the
/// coefficients of `e_i ≺ e_j`.
pub fn structure_json<S: Scalar>(d: &DerivedStructure<S>, p: &LinearOperator<S>) -> Value {
    let operator: Vec<Vec<String>> = p.matrix().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
    json!({
        "basis": d.labels,
        "operator": operator,
        "prec": table_json(&d.labels, &d.prec),
        "succ": table_json(&d.labels, &d.succ),
        "dot": table_json(&d.labels, &d.dot),
    })
}
