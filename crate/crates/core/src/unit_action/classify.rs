//! Adapted bases and classification against the canonical relation spaces.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::solve::{solve, solve_diagonal, ActionSolutionSet};
use super::{check, Mode, UnitAction};
use crate::error::Error;
use crate::exactlin::{solve_affine, AffineSolution, Matrix, Subspace, Vector};
use crate::operad::{canonical_space, CanonicalKind, OperadPresentation, Presentation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisCase {
    Neq,
    Eq,
}

/// Some `x` with `α·x = a` and `β·x = b`.
fn preimage(alpha: &Vector, beta: &Vector, a: i64, b: i64) -> Result<Vector, Error> {
    let n = alpha.dim();
    let m = Matrix::from_rows(n, vec![alpha.clone(), beta.clone()])?;
    match solve_affine(&m, &Vector::from_ints(&[a, b]))? {
        AffineSolution::Solutions { particular, .. } => Ok(particular),
        AffineSolution::Infeasible => Err(Error::Internal("alpha and beta are dependent".into())),
    }
}

/// A basis `op₁..opₙ` (the columns of the returned matrix) with
/// `★ = Σ opᵢ`, `α(opᵢ) = δ₁ᵢ`, and `β(opᵢ) = δ₂ᵢ` when `α ≠ β` or
/// `β(opᵢ) = δ₁ᵢ` when `α = β`. For `n = 1` the basis is `★` itself.
pub fn adapted_basis(p: &OperadPresentation, u: &UnitAction) -> Result<(Matrix, BasisCase), Error> {
    let n = p.arity();
    if !check(p, u, Mode::Compatible)?.holds() {
        return Err(Error::IncompatibleAction);
    }
    let star = p.star();
    let (alpha, beta) = (&u.alpha, &u.beta);
    if n == 1 {
        return Ok((Matrix::from_columns(1, vec![star.clone()])?, BasisCase::Eq));
    }
    if !u.is_split() {
        let kernel = Subspace::kernel(&Matrix::from_rows(n, vec![alpha.clone()])?).basis_vectors();
        let mut op1 = star.clone();
        for k in &kernel {
            op1 = op1.sub(k)?;
        }
        let mut cols = vec![op1];
        cols.extend(kernel);
        return Ok((Matrix::from_columns(n, cols)?, BasisCase::Eq));
    }
    let mut op1 = preimage(beta, alpha, 0, 1)?;
    let op2 = preimage(alpha, beta, 0, 1)?;
    let kernel = Subspace::kernel(&Matrix::from_rows(n, vec![alpha.clone(), beta.clone()])?).basis_vectors();
    let mut v = star.sub(&op1)?.sub(&op2)?;
    if n > 2 && v.is_zero() {
        op1 = op1.add(&kernel[0])?;
        v = star.sub(&op1)?.sub(&op2)?;
    }
    let mut cols = vec![op1, op2];
    if n > 2 {
        let mut span = Subspace::span(n, [&v])?;
        let mut ws = Vec::new();
        for k in &kernel {
            if !span.member(k)? {
                span = span.sum(&Subspace::span(n, [k])?)?;
                ws.push(k.clone());
            }
        }
        let mut op3 = v;
        for w in &ws {
            op3 = op3.sub(w)?;
        }
        cols.push(op3);
        cols.extend(ws);
    }
    Ok((Matrix::from_columns(n, cols)?, BasisCase::Neq))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ActionClass {
    CoherentNeq,
    CoherentEq,
    CompatibleNeqOnly,
    CompatibleEqOnly,
    None,
}

impl ActionClass {
    fn kind(self) -> Option<CanonicalKind> {
        match self {
            ActionClass::CoherentNeq => Some(CanonicalKind::CohNeq),
            ActionClass::CoherentEq => Some(CanonicalKind::CohEq),
            ActionClass::CompatibleNeqOnly => Some(CanonicalKind::CompNeq),
            ActionClass::CompatibleEqOnly => Some(CanonicalKind::CompEq),
            ActionClass::None => None,
        }
    }
}

impl fmt::Display for ActionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub class: ActionClass,
    pub witness: Option<UnitAction>,
    /// Adapted basis as columns in the original coordinates.
    pub basis: Option<Matrix>,
    /// Whether the relations, rewritten in `basis`, lie in the canonical
    /// space of `class`.
    pub containment: bool,
}

/// A point of `set` with `α ≠ β`, if there is one.
fn split_point(set: &ActionSolutionSet) -> Option<UnitAction> {
    set.spanning_points().into_iter().find(UnitAction::is_split)
}

fn diagonal_point(set: &ActionSolutionSet) -> Option<UnitAction> {
    set.spanning_points().into_iter().next()
}

/// The strongest class of unit action that `p` admits for its own `★`,
/// with a witness and a containment certificate.
pub fn classify(p: &OperadPresentation) -> Result<ClassReport, Error> {
    let n = p.arity();
    let mut first_failure = None;
    for class in [
        ActionClass::CoherentNeq,
        ActionClass::CoherentEq,
        ActionClass::CompatibleNeqOnly,
        ActionClass::CompatibleEqOnly,
    ] {
        let kind = class.kind().expect("listed classes have spaces");
        let mode = if matches!(class, ActionClass::CoherentNeq | ActionClass::CoherentEq) {
            Mode::Coherent
        } else {
            Mode::Compatible
        };
        let split = matches!(class, ActionClass::CoherentNeq | ActionClass::CompatibleNeqOnly);
        if split && n < 2 {
            continue;
        }
        let witness = if split { split_point(&solve(p, mode)?) } else { diagonal_point(&solve_diagonal(p, mode)?) };
        let Some(witness) = witness else { continue };
        let (t, _) = adapted_basis(p, &witness)?;
        let adapted = p.change_basis(&t)?;
        let containment = canonical_space(kind, n)?.contains(&adapted.relation_subspace())?;
        let report = ClassReport { class, witness: Some(witness), basis: Some(t), containment };
        if containment {
            return Ok(report);
        }
        log::warn!("{}: {class} witness found but relations are not in {kind}", p.name());
        first_failure.get_or_insert(report);
    }
    Ok(first_failure.unwrap_or(ClassReport {
        class: ActionClass::None,
        witness: None,
        basis: None,
        containment: false,
    }))
}
