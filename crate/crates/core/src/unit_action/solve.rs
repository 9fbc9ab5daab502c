//! Exact solution sets of the coherence equations.
//!
//! C1–C3 and the normalization are linear in `(a, b)`. Given those, C4
//! says `L·b ∈ span(★)`: if `L·b = μ★` then `μ = bᵀ·L·b = bᵀ·R·b` by C1
//! and `b·★ = 1`. Likewise C5 says `Rᵀ·a ∈ span(★)` by C3. Both are linear,
//! so every solution set is an affine subspace of `k²ⁿ`.

use serde::{Serialize, Serializer};

use super::{check, Mode, UnitAction};
use crate::error::Error;
use crate::exactlin::{solve_affine, AffineSolution, Matrix, Scalar, Subspace, Vector};
use crate::operad::{OperadPresentation, Presentation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ActionSolutionSet {
    Empty,
    Points(Vec<UnitAction>),
    /// `particular + directions`, with directions given as pair vectors
    /// `(α, β)` of length `2n`.
    Family {
        particular: UnitAction,
        directions: Subspace,
    },
}

impl ActionSolutionSet {
    pub fn is_empty(&self) -> bool {
        matches!(self, ActionSolutionSet::Empty)
    }

    /// Dimension of the solution set; `None` when empty.
    pub fn dim(&self) -> Option<usize> {
        match self {
            ActionSolutionSet::Empty => None,
            ActionSolutionSet::Points(_) => Some(0),
            ActionSolutionSet::Family { directions, .. } => Some(directions.dim()),
        }
    }

    /// The particular point followed by `particular + d` for each basis
    /// direction `d`. Together these affinely span the set.
    pub fn spanning_points(&self) -> Vec<UnitAction> {
        match self {
            ActionSolutionSet::Empty => Vec::new(),
            ActionSolutionSet::Points(ps) => ps.clone(),
            ActionSolutionSet::Family { particular, directions } => {
                let x0 = particular.to_pair_vector();
                let mut out = vec![particular.clone()];
                for d in directions.basis_vectors() {
                    out.push(UnitAction::from_pair_vector(&x0.add(&d).expect("same length")).expect("even length"));
                }
                out
            }
        }
    }

    pub fn contains(&self, u: &UnitAction) -> Result<bool, Error> {
        match self {
            ActionSolutionSet::Empty => Ok(false),
            ActionSolutionSet::Points(ps) => Ok(ps.contains(u)),
            ActionSolutionSet::Family { particular, directions } => {
                directions.member(&u.to_pair_vector().sub(&particular.to_pair_vector())?)
            }
        }
    }
}

#[derive(Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
enum Repr<'a> {
    Empty,
    Points { points: &'a [UnitAction] },
    Family { particular: &'a UnitAction, dimension: usize, directions: Vec<UnitAction> },
}

impl Serialize for ActionSolutionSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ActionSolutionSet::Empty => Repr::Empty,
            ActionSolutionSet::Points(points) => Repr::Points { points },
            ActionSolutionSet::Family { particular, directions } => Repr::Family {
                particular,
                dimension: directions.dim(),
                directions: directions
                    .basis_vectors()
                    .iter()
                    .map(|d| UnitAction::from_pair_vector(d).expect("even length"))
                    .collect(),
            },
        }
        .serialize(s)
    }
}

/// Rows `[a-part | b-part]` and right-hand sides of a linear system in
/// `(a, b)`.
struct System {
    n: usize,
    rows: Vec<Vector>,
    rhs: Vec<Scalar>,
}

impl System {
    fn new(n: usize) -> Self {
        System { n, rows: Vec::new(), rhs: Vec::new() }
    }

    fn push(&mut self, a: Vector, b: Vector, c: Scalar) {
        if a.is_zero() && b.is_zero() && c.is_zero() {
            return;
        }
        self.rows.push(a.concat(&b));
        self.rhs.push(c);
    }

    fn zero(&self) -> Vector {
        Vector::zeros(self.n)
    }

    fn solve(self) -> Result<AffineSolution, Error> {
        let a = Matrix::from_rows(2 * self.n, self.rows)?;
        solve_affine(&a, &Vector::new(self.rhs))
    }
}

fn build(p: &OperadPresentation, mode: Mode, diagonal: bool) -> Result<System, Error> {
    let n = p.arity();
    let star = p.star();
    let mut sys = System::new(n);
    sys.push(star.clone(), sys.zero(), Scalar::one());
    sys.push(sys.zero(), star.clone(), Scalar::one());
    if diagonal {
        for i in 0..n {
            let e = Vector::unit(n, i);
            sys.push(e.clone(), e.scale(&-Scalar::one()), Scalar::zero());
        }
    }
    // functionals vanishing on ★
    let w = Subspace::kernel(&Matrix::from_rows(n, vec![star.clone()])?).basis_vectors();
    for rel in p.relations() {
        let (l, r) = (&rel.left, &rel.right);
        let d = l.sub(r)?;
        for t in 0..n {
            // C1, coordinate t: Σ_s b_s (L − R)_st
            sys.push(sys.zero(), d.column(t), Scalar::zero());
            // C2, coordinate t: Σ_s L_st a_s − Σ_s R_ts b_s
            sys.push(l.column(t), r.row(t).scale(&-Scalar::one()), Scalar::zero());
            // C3, coordinate t: Σ_s (L − R)_ts a_s
            sys.push(d.row(t), sys.zero(), Scalar::zero());
        }
        if mode == Mode::Coherent {
            for wk in &w {
                // C4: w·L·b = 0 and C5: w·Rᵀ·a = 0
                sys.push(sys.zero(), l.vec_mul(wk)?, Scalar::zero());
                sys.push(r.mul_vec(wk)?, sys.zero(), Scalar::zero());
            }
        }
    }
    Ok(sys)
}

fn solve_inner(p: &OperadPresentation, mode: Mode, diagonal: bool) -> Result<ActionSolutionSet, Error> {
    let set = match build(p, mode, diagonal)?.solve()? {
        AffineSolution::Infeasible => ActionSolutionSet::Empty,
        AffineSolution::Solutions { particular, homogeneous } => {
            let particular = UnitAction::from_pair_vector(&particular)?;
            if homogeneous.dim() == 0 {
                ActionSolutionSet::Points(vec![particular])
            } else {
                ActionSolutionSet::Family { particular, directions: homogeneous }
            }
        }
    };
    for u in set.spanning_points() {
        if !check(p, &u, mode)?.holds() {
            return Err(Error::Internal(format!("solver returned {u}, which fails the {mode} check")));
        }
    }
    Ok(set)
}

/// Every normalized action on `p` satisfying the equations of `mode`.
pub fn solve(p: &OperadPresentation, mode: Mode) -> Result<ActionSolutionSet, Error> {
    solve_inner(p, mode, false)
}

/// As [`solve`], restricted to actions with `α = β`.
pub fn solve_diagonal(p: &OperadPresentation, mode: Mode) -> Result<ActionSolutionSet, Error> {
    solve_inner(p, mode, true)
}
