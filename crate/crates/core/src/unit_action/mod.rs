//! Unit actions `(α, β)` and the coherence equations.
//!
//! For a relation `(L, R)` with `a = α`, `b = β` as coordinate vectors:
//!
//! | tag | equation                |
//! |-----|-------------------------|
//! | C1  | `b·L = b·R`             |
//! | C2  | `Lᵀ·a = R·b`            |
//! | C3  | `L·a = R·a`             |
//! | C4  | `L·b = (bᵀ·R·b)·★`      |
//! | C5  | `(aᵀ·L·a)·★ = Rᵀ·a`     |
//!
//! An action is compatible when C1–C3 hold on every relation and coherent
//! when all five do. All of them are linear in the relation, so a basis of
//! the relation space suffices.

mod classify;
mod solve;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::exactlin::{Matrix, Vector};
use crate::operad::{OperadPresentation, Presentation, RelPair};

pub use classify::{adapted_basis, classify, ActionClass, BasisCase, ClassReport};
pub use solve::{solve, solve_diagonal, ActionSolutionSet};

/// Two functionals on `G`, stored as their values on the generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UnitAction {
    pub alpha: Vector,
    pub beta: Vector,
}

impl UnitAction {
    pub fn new(alpha: Vector, beta: Vector) -> Result<Self, Error> {
        if alpha.dim() != beta.dim() {
            return Err(Error::DimensionMismatch { expected: alpha.dim(), found: beta.dim() });
        }
        Ok(UnitAction { alpha, beta })
    }

    pub fn from_ints(alpha: &[i64], beta: &[i64]) -> Self {
        UnitAction { alpha: Vector::from_ints(alpha), beta: Vector::from_ints(beta) }
    }

    pub fn arity(&self) -> usize {
        self.alpha.dim()
    }

    pub fn is_split(&self) -> bool {
        self.alpha != self.beta
    }

    /// `(α, β)` as one vector of length `2n`.
    pub fn to_pair_vector(&self) -> Vector {
        self.alpha.concat(&self.beta)
    }

    pub fn from_pair_vector(v: &Vector) -> Result<Self, Error> {
        if !v.dim().is_multiple_of(2) {
            return Err(Error::DimensionMismatch { expected: v.dim() + 1, found: v.dim() });
        }
        let n = v.dim() / 2;
        let e = v.entries();
        Ok(UnitAction { alpha: e[..n].iter().cloned().collect(), beta: e[n..].iter().cloned().collect() })
    }

    pub fn is_normalized(&self, star: &Vector) -> Result<bool, Error> {
        Ok(self.alpha.dot(star)?.is_one() && self.beta.dot(star)?.is_one())
    }

    pub fn ensure_normalized(&self, star: &Vector) -> Result<(), Error> {
        if self.is_normalized(star)? {
            Ok(())
        } else {
            Err(Error::NotNormalized { alpha: Box::new(self.alpha.dot(star)?), beta: Box::new(self.beta.dot(star)?) })
        }
    }

    /// The same functionals read in the basis given by the columns of `t`
    /// (see [`OperadPresentation::change_basis`]): `(tᵀα, tᵀβ)`.
    pub fn transport(&self, t: &Matrix) -> Result<Self, Error> {
        Ok(UnitAction { alpha: t.vec_mul(&self.alpha)?, beta: t.vec_mul(&self.beta)? })
    }
}

impl fmt::Display for UnitAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "alpha={} beta={}", self.alpha, self.beta)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Coherent,
    Compatible,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Coherent => "coherent",
            Mode::Compatible => "compatible",
        }
    }

    /// Equations imposed in this mode.
    pub fn equations(self) -> &'static [Equation] {
        match self {
            Mode::Coherent => &Equation::ALL,
            Mode::Compatible => &Equation::ALL[..3],
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "coherent" => Ok(Mode::Coherent),
            "compatible" => Ok(Mode::Compatible),
            _ => Err(Error::Parse(format!("unknown mode {s:?}, expected coherent or compatible"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Equation {
    C1,
    C2,
    C3,
    C4,
    C5,
}

impl Equation {
    pub const ALL: [Equation; 5] = [Equation::C1, Equation::C2, Equation::C3, Equation::C4, Equation::C5];

    /// `LHS − RHS` on one relation.
    pub fn residual(self, rel: &RelPair, u: &UnitAction, star: &Vector) -> Result<Vector, Error> {
        let (l, r) = (&rel.left, &rel.right);
        let (a, b) = (&u.alpha, &u.beta);
        match self {
            Equation::C1 => l.vec_mul(b)?.sub(&r.vec_mul(b)?),
            Equation::C2 => l.vec_mul(a)?.sub(&r.mul_vec(b)?),
            Equation::C3 => l.mul_vec(a)?.sub(&r.mul_vec(a)?),
            Equation::C4 => l.mul_vec(b)?.sub(&star.scale(&r.bilinear(b, b)?)),
            Equation::C5 => star.scale(&l.bilinear(a, a)?).sub(&r.vec_mul(a)?),
        }
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A nonzero residual of one equation on one basis relation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub relation: usize,
    pub equation: Equation,
    pub residual: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub mode: Mode,
    pub coherent: bool,
    pub compatible: bool,
    /// Failures of the equations imposed by `mode`, by relation then tag.
    pub failures: Vec<Failure>,
}

impl Verdict {
    /// Whether the action has the property asked for.
    pub fn holds(&self) -> bool {
        match self.mode {
            Mode::Coherent => self.coherent,
            Mode::Compatible => self.compatible,
        }
    }
}

/// Evaluates C1–C5 on every basis relation of `p`.
pub fn check(p: &OperadPresentation, u: &UnitAction, mode: Mode) -> Result<Verdict, Error> {
    check_relations(p.relations(), p.star(), u, mode)
}

/// As [`check`] for an explicit relation list and star.
pub fn check_relations(relations: &[RelPair], star: &Vector, u: &UnitAction, mode: Mode) -> Result<Verdict, Error> {
    let n = star.dim();
    if u.arity() != n || u.beta.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: u.arity() });
    }
    u.ensure_normalized(star)?;
    let mut all = Vec::new();
    for (i, rel) in relations.iter().enumerate() {
        for eq in Equation::ALL {
            let residual = eq.residual(rel, u, star)?;
            if !residual.is_zero() {
                all.push(Failure { relation: i, equation: eq, residual });
            }
        }
    }
    let coherent = all.is_empty();
    let compatible = all.iter().all(|f| f.equation > Equation::C3);
    let failures = all.into_iter().filter(|f| mode.equations().contains(&f.equation)).collect();
    Ok(Verdict { mode, coherent, compatible, failures })
}
