//! The four model relation spaces in a basis `op₁..opₙ` with `★ = Σ opᵢ`.
//! An operad admits a coherent (resp. compatible) unit action with `α ≠ β`
//! or `α = β` exactly when some such basis puts its relations inside the
//! corresponding space.

use std::fmt;
use std::str::FromStr;

use super::RelPair;
use crate::error::Error;
use crate::exactlin::{Matrix, Scalar, Subspace, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CanonicalKind {
    CohNeq,
    CohEq,
    CompNeq,
    CompEq,
}

impl CanonicalKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CanonicalKind::CohNeq => "coh_neq",
            CanonicalKind::CohEq => "coh_eq",
            CanonicalKind::CompNeq => "comp_neq",
            CanonicalKind::CompEq => "comp_eq",
        }
    }

    fn min_arity(self) -> usize {
        match self {
            CanonicalKind::CohNeq | CanonicalKind::CompNeq => 2,
            CanonicalKind::CohEq | CanonicalKind::CompEq => 1,
        }
    }
}

impl fmt::Display for CanonicalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CanonicalKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Ok(match s {
            "coh_neq" => CanonicalKind::CohNeq,
            "coh_eq" => CanonicalKind::CohEq,
            "comp_neq" => CanonicalKind::CompNeq,
            "comp_eq" => CanonicalKind::CompEq,
            _ => return Err(Error::Parse(format!("unknown canonical space {s:?}"))),
        })
    }
}

/// Builds `(Σ left, Σ right)` from tensors of basis vectors; `None` stands
/// for `★`.
struct Builder {
    n: usize,
}

impl Builder {
    fn op(&self, i: Option<usize>) -> Vector {
        match i {
            Some(i) => Vector::unit(self.n, i),
            None => Vector::new(vec![Scalar::one(); self.n]),
        }
    }

    fn t(&self, a: Option<usize>, b: Option<usize>) -> Matrix {
        Matrix::outer(&self.op(a), &self.op(b))
    }

    fn zero(&self) -> Matrix {
        Matrix::zeros(self.n, self.n)
    }

    fn pair(&self, left: Matrix, right: Matrix) -> RelPair {
        RelPair { left, right }
    }

    /// `(opᵢ⊗opⱼ, 0)` and `(0, opᵢ⊗opⱼ)` for `i, j ≥ from` (0-based).
    fn free_block(&self, from: usize, out: &mut Vec<RelPair>) {
        for i in from..self.n {
            for j in from..self.n {
                out.push(self.pair(self.t(Some(i), Some(j)), self.zero()));
                out.push(self.pair(self.zero(), self.t(Some(i), Some(j))));
            }
        }
    }
}

/// The listed basis of a canonical space, in the standard basis of `k^n`
/// (0-based: `op₁` is index 0).
pub fn canonical_relations(kind: CanonicalKind, n: usize) -> Result<Vec<RelPair>, Error> {
    if n < kind.min_arity() {
        return Err(Error::TooFewGenerators { kind: kind.as_str(), min: kind.min_arity(), n });
    }
    let b = Builder { n };
    let (o1, o2) = (Some(0), Some(1));
    let star = None;
    let mut out = Vec::new();
    match kind {
        CanonicalKind::CohNeq | CanonicalKind::CompNeq => {
            if kind == CanonicalKind::CohNeq {
                out.push(b.pair(b.t(star, o2), b.t(o2, o2)));
                out.push(b.pair(b.t(o1, o1), b.t(o1, star)));
            } else {
                let sum12 = b.t(o1, o2).add(&b.t(o2, o2)).unwrap();
                out.push(b.pair(sum12, b.t(o2, o2)));
                let right = b.t(o1, o1).add(&b.t(o1, o2)).unwrap();
                out.push(b.pair(b.t(o1, o1), right));
            }
            for i in 1..n {
                out.push(b.pair(b.t(Some(i), o1), b.t(Some(i), o1)));
            }
            for j in 2..n {
                out.push(b.pair(b.t(o2, Some(j)), b.t(o2, Some(j))));
            }
            for i in 2..n {
                out.push(b.pair(b.t(o1, Some(i)), b.t(Some(i), o2)));
            }
            if kind == CanonicalKind::CompNeq {
                for i in 2..n {
                    out.push(b.pair(b.t(Some(i), o2), b.zero()));
                    out.push(b.pair(b.zero(), b.t(o1, Some(i))));
                }
            }
            b.free_block(2, &mut out);
        }
        CanonicalKind::CohEq => {
            let m = b.t(o1, star).add(&b.t(star, o1)).and_then(|m| m.sub(&b.t(o1, o1))).unwrap();
            out.push(b.pair(m.clone(), m));
            b.free_block(1, &mut out);
        }
        CanonicalKind::CompEq => {
            out.push(b.pair(b.t(o1, o1), b.t(o1, o1)));
            for i in 1..n {
                let m = b.t(o1, Some(i)).add(&b.t(Some(i), o1)).unwrap();
                out.push(b.pair(m.clone(), m));
            }
            b.free_block(1, &mut out);
        }
    }
    Ok(out)
}

/// Span of [`canonical_relations`].
pub fn canonical_space(kind: CanonicalKind, n: usize) -> Result<Subspace, Error> {
    let flat: Vec<Vector> = canonical_relations(kind, n)?.iter().map(RelPair::flatten).collect();
    Subspace::span(2 * n * n, &flat)
}
