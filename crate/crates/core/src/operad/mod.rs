//! Presentations `(G, R, ★)` of binary quadratic regular operads with a
//! distinguished associative operation.
//!
//! An element of `G⊗² ⊕ G⊗²` is a [`RelPair`] of two `n×n` coefficient
//! matrices. Entry `(s, t)` of the left matrix is the coefficient of
//! `(x e_s y) e_t z`, entry `(s, t)` of the right matrix the coefficient of
//! `x e_s (y e_t z)`. Every module flattens a pair the same way: coordinate
//! `slot·n² + s·n + t`, with slot 0 for the left matrix.

mod canonical;
mod catalog;
pub mod json;

use std::collections::HashSet;
use std::fmt;

use crate::error::Error;
use crate::exactlin::{independent_subset, Matrix, Scalar, Subspace, Vector};

pub use canonical::{canonical_relations, canonical_space, CanonicalKind};
pub use catalog::{catalog, catalog_names, catalog_with_star};

/// One element `(L, R)` of `G⊗² ⊕ G⊗²`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RelPair {
    pub left: Matrix,
    pub right: Matrix,
}

impl RelPair {
    pub fn new(left: Matrix, right: Matrix) -> Result<Self, Error> {
        let n = left.rows();
        for m in [&left, &right] {
            if m.rows() != n || m.cols() != n {
                return Err(Error::DimensionMismatch { expected: n, found: m.cols().max(m.rows()) });
            }
        }
        Ok(RelPair { left, right })
    }

    pub fn zero(n: usize) -> Self {
        RelPair { left: Matrix::zeros(n, n), right: Matrix::zeros(n, n) }
    }

    /// `(x⊗x, x⊗x)`: the associator of the operation `x`.
    pub fn associator(x: &Vector) -> Self {
        let m = Matrix::outer(x, x);
        RelPair { left: m.clone(), right: m }
    }

    pub fn arity(&self) -> usize {
        self.left.rows()
    }

    pub fn flatten(&self) -> Vector {
        self.left.flatten().concat(&self.right.flatten())
    }

    pub fn from_flat(n: usize, v: &Vector) -> Result<Self, Error> {
        if v.dim() != 2 * n * n {
            return Err(Error::DimensionMismatch { expected: 2 * n * n, found: v.dim() });
        }
        let e = v.entries();
        Ok(RelPair { left: Matrix::from_flat(n, n, &e[..n * n])?, right: Matrix::from_flat(n, n, &e[n * n..])? })
    }

    pub fn add(&self, other: &RelPair) -> Result<RelPair, Error> {
        Ok(RelPair { left: self.left.add(&other.left)?, right: self.right.add(&other.right)? })
    }

    pub fn scale(&self, c: &Scalar) -> RelPair {
        RelPair { left: self.left.scale(c), right: self.right.scale(c) }
    }

    /// Image under the linear map `m : G → G'` applied to both tensor
    /// factors: `(m·L·mᵀ, m·R·mᵀ)`.
    pub fn push_forward(&self, m: &Matrix) -> Result<RelPair, Error> {
        let mt = m.transpose();
        Ok(RelPair { left: m.mul(&self.left)?.mul(&mt)?, right: m.mul(&self.right)?.mul(&mt)? })
    }

    /// Slot-wise Kronecker product `(L₁⊗L₂, R₁⊗R₂)`.
    pub fn kron(&self, other: &RelPair) -> RelPair {
        RelPair { left: self.left.kron(&other.left), right: self.right.kron(&other.right) }
    }
}

impl fmt::Debug for RelPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.left, self.right)
    }
}

/// A problem found by [`OperadPresentation::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NoGenerators,
    DuplicateLabel(String),
    DependentRelations { count: usize, rank: usize },
    ZeroStar,
    StarNotAssociative,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NoGenerators => write!(f, "no generators"),
            Violation::DuplicateLabel(l) => write!(f, "duplicate generator label {l:?}"),
            Violation::DependentRelations { count, rank } => {
                write!(f, "{count} relations span only a {rank}-dimensional space")
            }
            Violation::ZeroStar => write!(f, "distinguished operation is zero"),
            Violation::StarNotAssociative => {
                write!(f, "(star⊗star, star⊗star) is not in the relation space")
            }
        }
    }
}

/// Anything with labelled generators and a relation basis. Implemented by
/// full presentations and by star-less duals.
pub trait Presentation {
    fn name(&self) -> &str;
    fn generators(&self) -> &[String];
    fn relations(&self) -> &[RelPair];

    fn arity(&self) -> usize {
        self.generators().len()
    }

    /// Span of the flattened relations, ambient dimension `2n²`.
    fn relation_subspace(&self) -> Subspace {
        let n = self.arity();
        let flat: Vec<Vector> = self.relations().iter().map(RelPair::flatten).collect();
        Subspace::span(2 * n * n, &flat).expect("relations have arity n")
    }
}

/// `(G, R, ★)`: generators, a basis of the relation space, and the
/// coordinates of the distinguished associative operation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperadPresentation {
    name: String,
    gens: Vec<String>,
    relations: Vec<RelPair>,
    star: Vector,
}

impl Presentation for OperadPresentation {
    fn name(&self) -> &str {
        &self.name
    }

    fn generators(&self) -> &[String] {
        &self.gens
    }

    fn relations(&self) -> &[RelPair] {
        &self.relations
    }
}

impl OperadPresentation {
    /// Checks shapes only; see [`validate`](Self::validate) for the
    /// semantic invariants.
    pub fn new(
        name: impl Into<String>,
        gens: Vec<String>,
        relations: Vec<RelPair>,
        star: Vector,
    ) -> Result<Self, Error> {
        let n = gens.len();
        if n == 0 {
            return Err(Error::InvalidPresentation(vec![Violation::NoGenerators]));
        }
        if star.dim() != n {
            return Err(Error::DimensionMismatch { expected: n, found: star.dim() });
        }
        if let Some(r) = relations.iter().find(|r| r.arity() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: r.arity() });
        }
        Ok(OperadPresentation { name: name.into(), gens, relations, star })
    }

    /// Like [`new`](Self::new) but also rejects presentations that fail
    /// [`validate`](Self::validate).
    pub fn checked(
        name: impl Into<String>,
        gens: Vec<String>,
        relations: Vec<RelPair>,
        star: Vector,
    ) -> Result<Self, Error> {
        let p = Self::new(name, gens, relations, star)?;
        p.ensure_valid()?;
        Ok(p)
    }

    /// Keeps a maximal independent subset of `relations` (in order) instead
    /// of rejecting a dependent list. Returns how many were dropped.
    pub fn with_reduced_relations(
        name: impl Into<String>,
        gens: Vec<String>,
        relations: Vec<RelPair>,
        star: Vector,
    ) -> Result<(Self, usize), Error> {
        let n = gens.len();
        let flat: Vec<Vector> = relations.iter().map(RelPair::flatten).collect();
        let keep = independent_subset(2 * n * n, &flat)?;
        let dropped = relations.len() - keep.len();
        let kept = keep.into_iter().map(|i| relations[i].clone()).collect();
        Ok((Self::new(name, gens, kept, star)?, dropped))
    }

    pub fn star(&self) -> &Vector {
        &self.star
    }

    pub fn label(&self, i: usize) -> &str {
        &self.gens[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.gens.iter().position(|g| g == label)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Same generators and relations with another distinguished operation.
    /// The result is not validated.
    pub fn with_star(&self, star: Vector) -> Result<Self, Error> {
        Self::new(self.name.clone(), self.gens.clone(), self.relations.clone(), star)
    }

    /// All violated invariants; empty when the presentation is valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut seen = HashSet::new();
        for g in &self.gens {
            if !seen.insert(g) {
                out.push(Violation::DuplicateLabel(g.clone()));
            }
        }
        let n = self.arity();
        let flat: Vec<Vector> = self.relations.iter().map(RelPair::flatten).collect();
        let space = Subspace::span(2 * n * n, &flat).expect("shapes checked in new");
        if space.dim() < flat.len() {
            out.push(Violation::DependentRelations { count: flat.len(), rank: space.dim() });
        }
        if self.star.is_zero() {
            out.push(Violation::ZeroStar);
        } else if !space.member(&RelPair::associator(&self.star).flatten()).expect("ambient 2n²") {
            out.push(Violation::StarNotAssociative);
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    pub fn ensure_valid(&self) -> Result<(), Error> {
        let v = self.validate();
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidPresentation(v))
        }
    }

    /// Re-expresses the presentation in the basis whose `i`-th element has
    /// old coordinates `t[·, i]` (the columns of `t`). Labels are kept.
    pub fn change_basis(&self, t: &Matrix) -> Result<Self, Error> {
        if !t.is_square() || t.rows() != self.arity() {
            return Err(Error::DimensionMismatch { expected: self.arity(), found: t.rows() });
        }
        let inv = t.inverse()?;
        let relations = self.relations.iter().map(|r| r.push_forward(&inv)).collect::<Result<Vec<_>, _>>()?;
        let star = inv.mul_vec(&self.star)?;
        Self::new(self.name.clone(), self.gens.clone(), relations, star)
    }

    /// Whether `x` (coordinates in `G`) is an associative operation.
    pub fn is_associative(&self, x: &Vector) -> Result<bool, Error> {
        is_associative(self, x)
    }
}

/// Whether `(x⊗x, x⊗x)` lies in the relation space of `p`.
pub fn is_associative<P: Presentation + ?Sized>(p: &P, x: &Vector) -> Result<bool, Error> {
    if x.dim() != p.arity() {
        return Err(Error::DimensionMismatch { expected: p.arity(), found: x.dim() });
    }
    p.relation_subspace().member(&RelPair::associator(x).flatten())
}

/// A linear map `G → G'`, given by its matrix on coordinates (`n'×n`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperadMorphism {
    pub matrix: Matrix,
}

impl OperadMorphism {
    pub fn new(matrix: Matrix) -> Self {
        OperadMorphism { matrix }
    }

    pub fn induced(&self, rel: &RelPair) -> Result<RelPair, Error> {
        rel.push_forward(&self.matrix)
    }

    /// Sends `★` to `★'` and the relation space of `source` into that of
    /// `target`.
    pub fn is_morphism(&self, source: &OperadPresentation, target: &OperadPresentation) -> Result<bool, Error> {
        if self.matrix.cols() != source.arity() || self.matrix.rows() != target.arity() {
            return Err(Error::DimensionMismatch { expected: source.arity(), found: self.matrix.cols() });
        }
        if &self.matrix.mul_vec(source.star())? != target.star() {
            return Ok(false);
        }
        let space = target.relation_subspace();
        for r in source.relations() {
            if !space.member(&self.induced(r)?.flatten())? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Invertible morphisms are isomorphisms.
    pub fn is_isomorphism(&self, source: &OperadPresentation, target: &OperadPresentation) -> Result<bool, Error> {
        Ok(self.matrix.is_square() && self.matrix.inverse().is_ok() && self.is_morphism(source, target)?)
    }
}
