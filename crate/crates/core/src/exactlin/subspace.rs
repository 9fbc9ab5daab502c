use std::fmt;

use super::matrix::{Matrix, Vector};
use super::scalar::Scalar;
use crate::error::Error;

/// A subspace of `k^ambient`, stored canonically as the reduced row-echelon
/// basis with zero rows dropped. Two subspaces are equal iff their bases are
/// identical.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zeros(0, ambient), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(ambient), pivots: (0..ambient).collect() }
    }

    /// Row space of `m`.
    pub fn row_space(m: &Matrix) -> Self {
        let (r, pivots) = m.rref();
        let basis = Matrix::from_rows(m.cols(), r.row_vectors().into_iter().take(pivots.len()).collect())
            .expect("rows of rref");
        Subspace { ambient: m.cols(), basis, pivots }
    }

    pub fn span<'a, I>(ambient: usize, vectors: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = &'a Vector>,
    {
        let rows: Vec<Vector> = vectors.into_iter().cloned().collect();
        Ok(Self::row_space(&Matrix::from_rows(ambient, rows)?))
    }

    /// `{x : m·x = 0}`.
    pub fn kernel(m: &Matrix) -> Self {
        let (r, pivots) = m.rref();
        let n = m.cols();
        let mut is_pivot = vec![false; n];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let vectors: Vec<Vector> = (0..n)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = Vector::unit(n, f);
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r[(i, f)].clone();
                }
                v
            })
            .collect();
        Self::span(n, &vectors).expect("kernel vectors have ambient length")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns without a pivot; their coordinates parametrize the quotient
    /// `k^ambient / self`.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    fn check_vec(&self, v: &Vector) -> Result<(), Error> {
        if v.dim() == self.ambient {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.ambient, found: v.dim() })
        }
    }

    fn check_space(&self, other: &Subspace) -> Result<(), Error> {
        if other.ambient == self.ambient {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.ambient, found: other.ambient })
        }
    }

    /// Normal form of `v` modulo this subspace: the pivot coordinates of
    /// the result are zero.
    pub fn reduce(&self, v: &Vector) -> Result<Vector, Error> {
        self.check_vec(v)?;
        let mut out = v.clone();
        for (i, &p) in self.pivots.iter().enumerate() {
            if !out[p].is_zero() {
                let c = -out[p].clone();
                out.axpy(&c, &self.basis.row(i));
            }
        }
        Ok(out)
    }

    pub fn member(&self, v: &Vector) -> Result<bool, Error> {
        Ok(self.reduce(v)?.is_zero())
    }

    /// Coordinates of a member `v` in the stored basis, `None` when `v` is
    /// not a member.
    pub fn coordinates(&self, v: &Vector) -> Result<Option<Vector>, Error> {
        if !self.member(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool, Error> {
        self.check_space(other)?;
        for v in other.basis_vectors() {
            if !self.member(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, Error> {
        self.check_space(other)?;
        let vectors: Vec<Vector> = self.basis_vectors().into_iter().chain(other.basis_vectors()).collect();
        Subspace::span(self.ambient, &vectors)
    }

    /// Orthogonal complement under the standard dot product.
    pub fn orthogonal_complement(&self) -> Subspace {
        if self.dim() == 0 {
            return Subspace::full(self.ambient);
        }
        Subspace::kernel(&self.basis)
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace, Error> {
        self.check_space(other)?;
        Ok(self.orthogonal_complement().sum(&other.orthogonal_complement())?.orthogonal_complement())
    }

    /// `{w : v·pairing·w = 0 for every v in self}`.
    pub fn annihilator(&self, pairing: &Matrix) -> Result<Subspace, Error> {
        if !pairing.is_square() || pairing.rows() != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: pairing.rows() });
        }
        if self.dim() == 0 {
            return Ok(Subspace::full(self.ambient));
        }
        Ok(Subspace::kernel(&self.basis.mul(pairing)?))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}; {:?})", self.dim(), self.ambient, self.basis)
    }
}

/// Solution set of an inhomogeneous linear system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AffineSolution {
    Infeasible,
    Solutions { particular: Vector, homogeneous: Subspace },
}

impl AffineSolution {
    pub fn is_infeasible(&self) -> bool {
        matches!(self, AffineSolution::Infeasible)
    }
}

/// All `x` with `a·x = b`. The particular solution sets every free
/// variable to zero.
pub fn solve_affine(a: &Matrix, b: &Vector) -> Result<AffineSolution, Error> {
    if a.rows() != b.dim() {
        return Err(Error::DimensionMismatch { expected: a.rows(), found: b.dim() });
    }
    let n = a.cols();
    let augmented: Vec<Vector> = (0..a.rows()).map(|i| a.row(i).concat(&Vector::new(vec![b[i].clone()]))).collect();
    let (r, pivots) = Matrix::from_rows(n + 1, augmented)?.rref();
    if pivots.last() == Some(&n) {
        return Ok(AffineSolution::Infeasible);
    }
    let mut particular = Vector::zeros(n);
    for (i, &p) in pivots.iter().enumerate() {
        particular[p] = r[(i, n)].clone();
    }
    Ok(AffineSolution::Solutions { particular, homogeneous: Subspace::kernel(a) })
}

/// Rank of the rows of `vectors` without materialising a subspace.
pub fn rank_of(ambient: usize, vectors: &[Vector]) -> Result<usize, Error> {
    Ok(Matrix::from_rows(ambient, vectors.to_vec())?.rank())
}

/// Indices of a maximal independent subset, chosen greedily in order.
pub fn independent_subset(ambient: usize, vectors: &[Vector]) -> Result<Vec<usize>, Error> {
    let mut acc = Subspace::zero(ambient);
    let mut keep = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        if !acc.member(v)? {
            acc = acc.sum(&Subspace::span(ambient, [v])?)?;
            keep.push(i);
        }
    }
    Ok(keep)
}

/// A nondegenerate diagonal pairing with `plus` entries `+1` followed by
/// `minus` entries `-1`.
pub fn signed_pairing(plus: usize, minus: usize) -> Matrix {
    let mut m = Matrix::identity(plus + minus);
    for i in plus..plus + minus {
        m[(i, i)] = -Scalar::one();
    }
    m
}
