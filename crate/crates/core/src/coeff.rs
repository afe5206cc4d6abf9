//! Coefficient algebras `(R, ·)`.
//!
//! Only the builtin families are supported. Each family has a countable
//! basis of [`Letter`]s and a product rule on letters; the product is
//! extended bilinearly wherever letters are combined. The algebras are
//! nonunital: no family has a unit letter.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::scalar::Scalar;

/// Basis element of a coefficient algebra.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Letter {
    /// Atomic generator of the zero-product algebra.
    Atom(u32),
    /// Commutative monomial: a nonempty multiset of generator indices, sorted.
    Monomial(Vec<u32>),
    /// Noncommutative monomial: a nonempty sequence of generator indices.
    Word(Vec<u32>),
    /// The variable `y_k` of the stuffle algebra, of degree `k`.
    Y(u32),
}

impl Letter {
    /// Builds a monomial letter; the indices are sorted into canonical order.
    pub fn monomial(indices: impl Into<Vec<u32>>) -> Result<Letter> {
        let mut v: Vec<u32> = indices.into();
        if v.is_empty() {
            return Err(Error::InvalidArgument("monomial letter must be nonempty".into()));
        }
        if v.contains(&0) {
            return Err(Error::InvalidArgument("generator indices start at 1".into()));
        }
        v.sort_unstable();
        Ok(Letter::Monomial(v))
    }

    pub fn word(indices: impl Into<Vec<u32>>) -> Result<Letter> {
        let v: Vec<u32> = indices.into();
        if v.is_empty() {
            return Err(Error::InvalidArgument("word letter must be nonempty".into()));
        }
        if v.contains(&0) {
            return Err(Error::InvalidArgument("generator indices start at 1".into()));
        }
        Ok(Letter::Word(v))
    }

    pub fn y(k: u32) -> Result<Letter> {
        if k == 0 {
            return Err(Error::InvalidArgument("y_k needs k >= 1".into()));
        }
        Ok(Letter::Y(k))
    }

    pub fn atom(i: u32) -> Result<Letter> {
        if i == 0 {
            return Err(Error::InvalidArgument("atom indices start at 1".into()));
        }
        Ok(Letter::Atom(i))
    }

    pub fn degree(&self) -> u32 {
        match self {
            Letter::Atom(_) => 1,
            Letter::Monomial(v) | Letter::Word(v) => v.len() as u32,
            Letter::Y(k) => *k,
        }
    }

    fn family_rank(&self) -> u8 {
        match self {
            Letter::Atom(_) => 0,
            Letter::Monomial(_) => 1,
            Letter::Word(_) => 2,
            Letter::Y(_) => 3,
        }
    }
}

impl Ord for Letter {
    // degree first, then the payload lexicographically
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.family_rank().cmp(&other.family_rank()))
            .then_with(|| match (self, other) {
                (Letter::Atom(a), Letter::Atom(b)) | (Letter::Y(a), Letter::Y(b)) => a.cmp(b),
                (Letter::Monomial(a), Letter::Monomial(b)) | (Letter::Word(a), Letter::Word(b)) => {
                    a.cmp(b)
                }
                _ => Ordering::Equal,
            })
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn write_generators(f: &mut fmt::Formatter<'_>, v: &[u32]) -> fmt::Result {
    for (i, g) in v.iter().enumerate() {
        if i > 0 {
            f.write_str(" ")?;
        }
        write!(f, "x{g}")?;
    }
    Ok(())
}

/// Renders atoms `1..=26` as `a..z` and larger ones as `g<i>`.
pub(crate) fn atom_name(i: u32) -> String {
    if (1..=26).contains(&i) {
        char::from(b'a' + (i - 1) as u8).to_string()
    } else {
        format!("g{i}")
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Atom(i) => f.write_str(&atom_name(*i)),
            Letter::Y(k) => write!(f, "y{k}"),
            Letter::Monomial(v) | Letter::Word(v) if v.len() == 1 => write!(f, "x{}", v[0]),
            Letter::Monomial(v) => {
                f.write_str("[")?;
                write_generators(f, v)?;
                f.write_str("]")
            }
            Letter::Word(v) => {
                f.write_str("(")?;
                write_generators(f, v)?;
                f.write_str(")")
            }
        }
    }
}

/// Linear combination of letters; the value of a product `a·b` in `R`.
pub type CoeffCombination<S> = LinComb<Letter, S>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraKind {
    /// `R` with the zero product, spanned by `atoms` generators.
    Zero { atoms: u32 },
    /// Non-constant polynomials in one variable; `y_k` stands for `t^k`.
    StuffleY,
    /// Non-constant commutative polynomials in `generators` variables.
    Sym { generators: u32 },
    /// Non-constant noncommutative polynomials in `generators` variables.
    Word { generators: u32 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Involution {
    Identity,
    Reversal,
}

/// A pluggable coefficient algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffAlgebra {
    name: String,
    kind: AlgebraKind,
    involution: Option<Involution>,
}

impl CoeffAlgebra {
    pub fn zero(atoms: u32) -> Self {
        let name = if atoms == 4 { "zero".to_string() } else { format!("zero{atoms}") };
        Self { name, kind: AlgebraKind::Zero { atoms }, involution: Some(Involution::Identity) }
    }

    pub fn stuffle_y() -> Self {
        Self { name: "stuffle-y".into(), kind: AlgebraKind::StuffleY, involution: Some(Involution::Identity) }
    }

    pub fn sym(generators: u32) -> Self {
        Self {
            name: format!("sym{generators}"),
            kind: AlgebraKind::Sym { generators },
            involution: Some(Involution::Identity),
        }
    }

    pub fn word(generators: u32) -> Self {
        Self {
            name: format!("word{generators}"),
            kind: AlgebraKind::Word { generators },
            involution: Some(Involution::Reversal),
        }
    }

    /// The same algebra with its involution forgotten.
    pub fn without_involution(mut self) -> Self {
        self.involution = None;
        self
    }

    /// Looks up a builtin by name: `zero`, `zero<n>`, `stuffle-y`, `sym<n>`,
    /// `sym(<n>)`, `word<n>` or `word(<n>)`.
    pub fn by_name(name: &str) -> Result<Self> {
        let parse_param = |rest: &str| -> Option<u32> {
            let rest = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(rest);
            rest.parse::<u32>().ok().filter(|n| (1..=26).contains(n))
        };
        let unknown = || Error::InvalidArgument(format!("unknown algebra `{name}`"));
        match name {
            "zero" => Ok(Self::zero(4)),
            "stuffle-y" | "stuffle" | "y" => Ok(Self::stuffle_y()),
            _ => {
                if let Some(rest) = name.strip_prefix("sym") {
                    parse_param(rest).map(Self::sym).ok_or_else(unknown)
                } else if let Some(rest) = name.strip_prefix("word") {
                    parse_param(rest).map(Self::word).ok_or_else(unknown)
                } else if let Some(rest) = name.strip_prefix("zero") {
                    parse_param(rest).map(Self::zero).ok_or_else(unknown)
                } else {
                    Err(unknown())
                }
            }
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn is_commutative(&self) -> bool {
        !matches!(self.kind, AlgebraKind::Word { generators } if generators > 1)
    }

    pub fn involution(&self) -> Option<Involution> {
        self.involution
    }

    fn domain_error(&self, a: &Letter) -> Error {
        Error::Domain { algebra: self.name.clone(), letter: format!("{a:?}") }
    }

    /// Checks that `a` is a basis letter of this algebra.
    pub fn validate(&self, a: &Letter) -> Result<()> {
        let ok = match (self.kind, a) {
            (AlgebraKind::Zero { atoms }, Letter::Atom(i)) => (1..=atoms).contains(i),
            (AlgebraKind::StuffleY, Letter::Y(k)) => *k >= 1,
            (AlgebraKind::Sym { generators }, Letter::Monomial(v)) => {
                !v.is_empty() && v.windows(2).all(|w| w[0] <= w[1]) && v.iter().all(|g| (1..=generators).contains(g))
            }
            (AlgebraKind::Word { generators }, Letter::Word(v)) => {
                !v.is_empty() && v.iter().all(|g| (1..=generators).contains(g))
            }
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(self.domain_error(a))
        }
    }

    /// The product `a·b` in `R`. An empty combination is zero.
    pub fn multiply<S: Scalar>(&self, a: &Letter, b: &Letter) -> Result<CoeffCombination<S>> {
        self.validate(a)?;
        self.validate(b)?;
        Ok(match (a, b) {
            (Letter::Atom(_), Letter::Atom(_)) => LinComb::zero(),
            (Letter::Y(k), Letter::Y(l)) => LinComb::basis(Letter::Y(k + l)),
            (Letter::Monomial(u), Letter::Monomial(v)) => {
                let mut m = Vec::with_capacity(u.len() + v.len());
                m.extend_from_slice(u);
                m.extend_from_slice(v);
                m.sort_unstable();
                LinComb::basis(Letter::Monomial(m))
            }
            (Letter::Word(u), Letter::Word(v)) => {
                let mut w = u.clone();
                w.extend_from_slice(v);
                LinComb::basis(Letter::Word(w))
            }
            _ => unreachable!("validated letters share a family"),
        })
    }

    /// Applies the algebra's involution, an anti-automorphism of `(R, ·)`.
    pub fn involute(&self, a: &Letter) -> Result<Letter> {
        self.validate(a)?;
        match self.involution {
            None => Err(Error::Unsupported { algebra: self.name.clone(), operation: "an involution".into() }),
            Some(Involution::Identity) => Ok(a.clone()),
            Some(Involution::Reversal) => match a {
                Letter::Word(v) => Ok(Letter::Word(v.iter().rev().copied().collect())),
                other => Ok(other.clone()),
            },
        }
    }

    /// The degree-one letter attached to generator `i`.
    pub fn generator(&self, i: u32) -> Result<Letter> {
        let letter = match self.kind {
            AlgebraKind::Zero { .. } => Letter::Atom(i),
            AlgebraKind::StuffleY => Letter::Y(i),
            AlgebraKind::Sym { .. } => Letter::Monomial(vec![i]),
            AlgebraKind::Word { .. } => Letter::Word(vec![i]),
        };
        self.validate(&letter)?;
        Ok(letter)
    }

    /// All basis letters of degree exactly `d`, in letter order.
    pub fn letters_of_degree(&self, d: u32) -> Vec<Letter> {
        if d == 0 {
            return Vec::new();
        }
        match self.kind {
            AlgebraKind::Zero { atoms } => {
                if d == 1 {
                    (1..=atoms).map(Letter::Atom).collect()
                } else {
                    Vec::new()
                }
            }
            AlgebraKind::StuffleY => vec![Letter::Y(d)],
            AlgebraKind::Sym { generators } => {
                let mut out = Vec::new();
                let mut cur = Vec::with_capacity(d as usize);
                multisets(1, generators, d as usize, &mut cur, &mut out);
                out.into_iter().map(Letter::Monomial).collect()
            }
            AlgebraKind::Word { generators } => {
                let mut out: Vec<Vec<u32>> = vec![Vec::new()];
                for _ in 0..d {
                    out = out
                        .into_iter()
                        .flat_map(|w| {
                            (1..=generators).map(move |g| {
                                let mut w = w.clone();
                                w.push(g);
                                w
                            })
                        })
                        .collect();
                }
                out.into_iter().map(Letter::Word).collect()
            }
        }
    }

    /// All basis letters of degree `1..=max_degree`.
    pub fn letters_up_to(&self, max_degree: u32) -> Vec<Letter> {
        (1..=max_degree).flat_map(|d| self.letters_of_degree(d)).collect()
    }
}

fn multisets(min: u32, max: u32, len: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if cur.len() == len {
        out.push(cur.clone());
        return;
    }
    for g in min..=max {
        cur.push(g);
        multisets(g, max, len, cur, out);
        cur.pop();
    }
}

/// The shipped algebras: `zero`, `stuffle-y`, `sym2`, `sym3` and `word2`.
pub fn builtin_algebras() -> Vec<CoeffAlgebra> {
    vec![
        CoeffAlgebra::zero(4),
        CoeffAlgebra::stuffle_y(),
        CoeffAlgebra::sym(2),
        CoeffAlgebra::sym(3),
        CoeffAlgebra::word(2),
    ]
}
