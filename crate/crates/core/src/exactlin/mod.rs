//! Exact rational linear algebra: scalars, dense vectors and matrices,
//! row reduction, and canonical subspaces.

mod matrix;
mod poly;
mod scalar;
mod subspace;

pub use matrix::{Matrix, Vector};
pub use poly::{Quadratic, QuadraticRoots};
pub use scalar::Scalar;
pub use subspace::{independent_subset, rank_of, signed_pairing, solve_affine, AffineSolution, Subspace};

/// Reduced row-echelon form with pivot columns.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    m.rref()
}

/// Whether `v` lies in `s`.
pub fn member(s: &Subspace, v: &Vector) -> Result<bool, crate::Error> {
    s.member(v)
}

/// `{w : v·pairing·w = 0 for all v in s}`.
pub fn annihilator(s: &Subspace, pairing: &Matrix) -> Result<Subspace, crate::Error> {
    s.annihilator(pairing)
}
