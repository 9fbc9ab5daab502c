//! The free algebra on one generator `x`, truncated after degree 3, its
//! unitization, the box product `A⊠B ⊂ A₊⊗B₊`, and a brute-force oracle
//! for coherence and compatibility of unit actions.
//!
//! Degree 3 is `(G⊗² ⊕ G⊗²)` modulo the relations. A left product
//! `(x e_s x) e_t x` sits at coordinate `(0, s, t)` and a right product
//! `x e_s (x e_t x)` at `(1, s, t)`, so a relation `(L, R)` says the vector
//! `(L, −R)` is zero. Its classes are represented on the non-pivot
//! coordinates of the row-reduced relations.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use indexmap::IndexMap;
use serde::Serialize;

use crate::error::Error;
use crate::exactlin::{Scalar, Subspace, Vector};
use crate::operad::{OperadPresentation, Presentation, RelPair};
use crate::unit_action::{Mode, UnitAction};

/// An operation of `G`: a generator or the distinguished `★`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Op {
    Generator(usize),
    Star,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MulError {
    /// `1 ∘ 1` with `∘ ≠ ★`.
    Undefined,
    /// The product leaves degrees `≤ 3`.
    TruncationExceeded,
}

impl fmt::Display for MulError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MulError::Undefined => f.write_str("product with two units is undefined"),
            MulError::TruncationExceeded => f.write_str("product exceeds degree 3"),
        }
    }
}

/// `k1 ⊕ kx ⊕ G ⊕ (G⊗² ⊕ G⊗²)/R` with a fixed basis: index 0 is the unit,
/// 1 is `x`, `2 + s` is `e_s = x e_s x`, and `2 + n + j` is the `j`-th
/// degree-3 coordinate.
#[derive(Clone, Debug)]
pub struct TruncatedFree {
    n: usize,
    gens: Vec<String>,
    star: Vector,
    /// Span of `(L, −R)` over the relations.
    quotient: Subspace,
    free: Vec<usize>,
    /// Degree-3 class of each ambient basis monomial.
    classes: Vec<Vector>,
}

impl TruncatedFree {
    pub fn new(p: &OperadPresentation) -> Self {
        let n = p.arity();
        let twisted: Vec<Vector> = p
            .relations()
            .iter()
            .map(|r| RelPair { left: r.left.clone(), right: r.right.scale(&-Scalar::one()) }.flatten())
            .collect();
        let quotient = Subspace::span(2 * n * n, &twisted).expect("relations have arity n");
        let free = quotient.free_columns();
        let mut f =
            TruncatedFree { n, gens: p.generators().to_vec(), star: p.star().clone(), quotient, free, classes: vec![] };
        f.classes = (0..2 * n * n).map(|k| f.project(&Vector::unit(2 * n * n, k)).expect("ambient 2n²")).collect();
        f
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn dim_deg3(&self) -> usize {
        self.free.len()
    }

    /// Dimension of `k1 ⊕ F`.
    pub fn dim(&self) -> usize {
        2 + self.n + self.dim_deg3()
    }

    pub fn unit(&self) -> UnitizedElement {
        self.basis(0)
    }

    pub fn x(&self) -> UnitizedElement {
        self.basis(1)
    }

    pub fn basis(&self, i: usize) -> UnitizedElement {
        UnitizedElement { coords: Vector::unit(self.dim(), i) }
    }

    pub fn zero(&self) -> UnitizedElement {
        UnitizedElement { coords: Vector::zeros(self.dim()) }
    }

    fn op_vector(&self, op: Op) -> Vector {
        match op {
            Op::Generator(i) => Vector::unit(self.n, i),
            Op::Star => self.star.clone(),
        }
    }

    /// Class of a vector of `G⊗² ⊕ G⊗²`, as degree-3 coordinates.
    pub fn project(&self, v: &Vector) -> Result<Vector, Error> {
        let r = self.quotient.reduce(v)?;
        Ok(self.free.iter().map(|&c| r[c].clone()).collect())
    }

    fn embed_deg3(&self, class: &Vector) -> Vector {
        let mut out = Vector::zeros(self.dim());
        for (j, c) in class.iter().enumerate() {
            out[2 + self.n + j] = c.clone();
        }
        out
    }

    /// Embedded class of `Σ_t w_t m(t)` for ambient monomial indices `m(t)`.
    fn deg3(&self, w: &Vector, index: impl Fn(usize) -> usize) -> Vector {
        let mut class = Vector::zeros(self.dim_deg3());
        for (t, c) in w.iter().enumerate() {
            if !c.is_zero() {
                class.axpy(c, &self.classes[index(t)]);
            }
        }
        self.embed_deg3(&class)
    }

    /// `e_i ∘ e_j` on basis elements.
    fn basis_product(&self, i: usize, op: Op, j: usize, u: &UnitAction) -> Result<Vector, MulError> {
        let n = self.n;
        let w = self.op_vector(op);
        let dim = self.dim();
        match (i, j) {
            (0, 0) if w == self.star => Ok(Vector::unit(dim, 0)),
            (0, 0) => Err(MulError::Undefined),
            (_, 0) => Ok(Vector::unit(dim, i).scale(&u.alpha.dot(&w).expect("arity n"))),
            (0, _) => Ok(Vector::unit(dim, j).scale(&u.beta.dot(&w).expect("arity n"))),
            (1, 1) => {
                let mut out = Vector::zeros(dim);
                for (s, c) in w.iter().enumerate() {
                    out[2 + s] = c.clone();
                }
                Ok(out)
            }
            (i, 1) if (2..2 + n).contains(&i) => {
                // (x e_s x) ∘ x
                let s = i - 2;
                Ok(self.deg3(&w, |t| s * n + t))
            }
            (1, j) if (2..2 + n).contains(&j) => {
                // x ∘ (x e_s x)
                let s = j - 2;
                Ok(self.deg3(&w, |t| n * n + t * n + s))
            }
            _ => Err(MulError::TruncationExceeded),
        }
    }

    /// Label of basis element `i`: `1`, `x`, a generator, or a bracketed
    /// degree-3 monomial.
    pub fn label(&self, i: usize) -> String {
        let n = self.n;
        match i {
            0 => "1".into(),
            1 => "x".into(),
            i if i < 2 + n => self.gens[i - 2].clone(),
            i => {
                let c = self.free[i - 2 - n];
                let (slot, s, t) = (c / (n * n), (c / n) % n, c % n);
                let (a, b) = (&self.gens[s], &self.gens[t]);
                if slot == 0 {
                    format!("(x{a}x){b}x")
                } else {
                    format!("x{a}(x{b}x)")
                }
            }
        }
    }
}

/// An element of `A₊ = k1 ⊕ A` in the basis of its [`TruncatedFree`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitizedElement {
    coords: Vector,
}

impl UnitizedElement {
    pub fn coords(&self) -> &Vector {
        &self.coords
    }

    pub fn unit_coeff(&self) -> &Scalar {
        &self.coords[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_zero()
    }

    pub fn add(&self, other: &UnitizedElement) -> UnitizedElement {
        UnitizedElement { coords: self.coords.add(&other.coords).expect("same algebra") }
    }

    pub fn scale(&self, c: &Scalar) -> UnitizedElement {
        UnitizedElement { coords: self.coords.scale(c) }
    }

    fn support(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.coords.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn render(&self, f: &TruncatedFree) -> IndexMap<String, Scalar> {
        self.support().map(|(i, c)| (f.label(i), c.clone())).collect()
    }
}

type ProductCache = HashMap<(usize, Op, usize), Result<Vector, MulError>>;

/// Basis products for one action, computed on first use.
struct Table<'a> {
    f: &'a TruncatedFree,
    action: &'a UnitAction,
    cache: RefCell<ProductCache>,
}

impl<'a> Table<'a> {
    fn new(f: &'a TruncatedFree, action: &'a UnitAction) -> Self {
        Table { f, action, cache: RefCell::new(HashMap::new()) }
    }

    fn product(&self, i: usize, op: Op, j: usize) -> Result<Vector, MulError> {
        self.cache.borrow_mut().entry((i, op, j)).or_insert_with(|| self.f.basis_product(i, op, j, self.action)).clone()
    }

    fn mul(&self, u: &UnitizedElement, op: Op, v: &UnitizedElement) -> Result<UnitizedElement, MulError> {
        let mut out = self.f.zero();
        for (i, a) in u.support() {
            for (j, b) in v.support() {
                out.coords.axpy(&(a * b), &self.product(i, op, j)?);
            }
        }
        Ok(out)
    }

    fn mul_basis(&self, i: usize, op: Op, j: usize) -> Result<UnitizedElement, MulError> {
        Ok(UnitizedElement { coords: self.product(i, op, j)? })
    }

    fn mul_box(&self, e1: &BoxElement, op: Op, e2: &BoxElement) -> Result<BoxElement, MulError> {
        let mut out = BoxElement::zero();
        for (&(a, b), c1) in &e1.coords {
            for (&(a2, b2), c2) in &e2.coords {
                let (left, right) = if (b, b2) == (0, 0) {
                    (self.mul_basis(a, op, a2)?, self.f.unit())
                } else {
                    (self.mul_basis(a, Op::Star, a2)?, self.mul_basis(b, op, b2)?)
                };
                let c = c1 * c2;
                for (i, x) in left.support() {
                    for (j, y) in right.support() {
                        if (i, j) == (0, 0) {
                            // not reachable from the product rules
                            return Err(MulError::Undefined);
                        }
                        out.add_term((i, j), &c * x * y);
                    }
                }
            }
        }
        Ok(out)
    }
}

/// `u ∘ v` in `A₊`, with units acting through `action`: `a ∘ 1 = α(∘)a`,
/// `1 ∘ a = β(∘)a`, and `1 ★ 1 = 1`.
pub fn mul_free(
    f: &TruncatedFree,
    u: &UnitizedElement,
    op: Op,
    v: &UnitizedElement,
    action: &UnitAction,
) -> Result<UnitizedElement, MulError> {
    Table::new(f, action).mul(u, op, v)
}

/// An element of `A⊠B = A⊗1 ⊕ 1⊗B ⊕ A⊗B` with `A = B`, keyed by pairs of
/// basis indices of `k1 ⊕ F`. The key `(0, 0)` never occurs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BoxElement {
    coords: BTreeMap<(usize, usize), Scalar>,
}

impl BoxElement {
    pub fn zero() -> Self {
        BoxElement::default()
    }

    /// `e_i ⊗ e_j`; `None` for `1 ⊗ 1`.
    pub fn basis(i: usize, j: usize) -> Option<Self> {
        if (i, j) == (0, 0) {
            return None;
        }
        let mut coords = BTreeMap::new();
        coords.insert((i, j), Scalar::one());
        Some(BoxElement { coords })
    }

    pub fn coords(&self) -> &BTreeMap<(usize, usize), Scalar> {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    fn add_term(&mut self, key: (usize, usize), c: Scalar) {
        let e = self.coords.entry(key).or_insert_with(Scalar::zero);
        *e += c;
        if e.is_zero() {
            self.coords.remove(&key);
        }
    }

    pub fn add(&self, other: &BoxElement) -> BoxElement {
        let mut out = self.clone();
        for (k, c) in &other.coords {
            out.add_term(*k, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> BoxElement {
        let mut out = BoxElement::zero();
        for (k, v) in &self.coords {
            out.add_term(*k, v * c);
        }
        out
    }

    pub fn render(&self, f: &TruncatedFree) -> IndexMap<String, Scalar> {
        self.coords.iter().map(|(&(i, j), c)| (format!("{}⊗{}", f.label(i), f.label(j)), c.clone())).collect()
    }
}

/// `e1 ⊡_∘ e2`: on simple tensors `(a⊗b) ⊡ (a'⊗b')` is
/// `(a ★ a') ⊗ (b ∘ b')` unless `b⊗b' = 1⊗1`, where it is `(a ∘ a') ⊗ 1`.
pub fn mul_box(
    f: &TruncatedFree,
    e1: &BoxElement,
    op: Op,
    e2: &BoxElement,
    action: &UnitAction,
) -> Result<BoxElement, MulError> {
    Table::new(f, action).mul_box(e1, op, e2)
}

/// One side of an instance, rendered with labels.
pub type Rendered = IndexMap<String, Scalar>;

/// The first failing instance in enumeration order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub relation_index: usize,
    /// Substitutions from `{1, x}` in `A`; empty in compatible mode.
    pub a_triple: Vec<String>,
    pub b_triple: Vec<String>,
    pub lhs: Rendered,
    pub rhs: Rendered,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub mode: Mode,
    pub holds: bool,
    pub evaluated: usize,
    pub skipped: usize,
    pub counterexample: Option<Counterexample>,
}

const SUBST: [usize; 2] = [0, 1];

fn triples() -> impl Iterator<Item = [usize; 3]> {
    SUBST.into_iter().flat_map(|i| SUBST.into_iter().flat_map(move |j| SUBST.into_iter().map(move |k| [i, j, k])))
}

fn names(t: [usize; 3]) -> Vec<String> {
    t.iter().map(|&i| if i == 0 { "1".to_string() } else { "x".to_string() }).collect()
}

/// Sums and scalar multiples, shared by `A₊` and `A⊠B`.
trait Element: Sized + PartialEq {
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, c: &Scalar) -> Self;
}

impl Element for UnitizedElement {
    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn times(&self, c: &Scalar) -> Self {
        self.scale(c)
    }
}

impl Element for BoxElement {
    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn times(&self, c: &Scalar) -> Self {
        self.scale(c)
    }
}

/// Both sides `Σ L_st (X e_s Y) e_t Z` and `Σ R_st X e_s (Y e_t Z)` of a
/// relation; `None` when some term is undefined.
fn evaluate<T, M>(rel: &RelPair, [x, y, z]: [&T; 3], zero: T, mul: M) -> Result<Option<(T, T)>, Error>
where
    T: Element + Clone,
    M: Fn(&T, Op, &T) -> Result<T, MulError>,
{
    let n = rel.arity();
    let mut sides = [zero.clone(), zero];
    for (k, coeffs) in [&rel.left, &rel.right].into_iter().enumerate() {
        for s in 0..n {
            for t in 0..n {
                let c = &coeffs[(s, t)];
                if c.is_zero() {
                    continue;
                }
                let term = if k == 0 {
                    mul(x, Op::Generator(s), y).and_then(|xy| mul(&xy, Op::Generator(t), z))
                } else {
                    mul(y, Op::Generator(t), z).and_then(|yz| mul(x, Op::Generator(s), &yz))
                };
                match term {
                    Ok(v) => sides[k] = sides[k].plus(&v.times(c)),
                    Err(MulError::Undefined) => return Ok(None),
                    Err(e @ MulError::TruncationExceeded) => {
                        return Err(Error::Internal(format!("oracle evaluation failed: {e}")))
                    }
                }
            }
        }
    }
    let [l, r] = sides;
    Ok(Some((l, r)))
}

impl OracleReport {
    fn record(&mut self, outcome: Option<bool>, counterexample: impl FnOnce() -> Counterexample) {
        match outcome {
            None => self.skipped += 1,
            Some(equal) => {
                self.evaluated += 1;
                if !equal && self.holds {
                    self.holds = false;
                    self.counterexample = Some(counterexample());
                }
            }
        }
    }
}

/// Evaluates the defining condition of `mode` on the free algebra on one
/// generator. Coherent: every relation holds in `A⊠B` on all
/// substitutions `a⊗b` with `a, b ∈ {1, x}`, `a⊗b ≠ 1⊗1`. Compatible:
/// every relation holds in `A₊` on the substitutions with exactly one
/// unit. Instances with an undefined term are skipped.
pub fn oracle(p: &OperadPresentation, u: &UnitAction, mode: Mode) -> Result<OracleReport, Error> {
    p.ensure_valid()?;
    u.ensure_normalized(p.star())?;
    let f = TruncatedFree::new(p);
    let mut report = OracleReport { mode, holds: true, evaluated: 0, skipped: 0, counterexample: None };
    let table = Table::new(&f, u);
    let free_mul = |l: &UnitizedElement, op: Op, r: &UnitizedElement| table.mul(l, op, r);
    let box_mul = |l: &BoxElement, op: Op, r: &BoxElement| table.mul_box(l, op, r);
    for (ri, rel) in p.relations().iter().enumerate() {
        match mode {
            Mode::Compatible => {
                for b in [[0, 1, 1], [1, 0, 1], [1, 1, 0]] {
                    let [x, y, z] = b.map(|i| f.basis(i));
                    let sides = evaluate(rel, [&x, &y, &z], f.zero(), free_mul)?;
                    report.record(sides.as_ref().map(|(l, r)| l == r), || {
                        let (l, r) = sides.as_ref().expect("evaluated");
                        Counterexample {
                            relation_index: ri,
                            a_triple: Vec::new(),
                            b_triple: names(b),
                            lhs: l.render(&f),
                            rhs: r.render(&f),
                        }
                    });
                }
            }
            Mode::Coherent => {
                for a in triples() {
                    for b in triples() {
                        if b == [0, 0, 0] || (0..3).any(|k| a[k] == 0 && b[k] == 0) {
                            continue;
                        }
                        let [x, y, z] = [0, 1, 2].map(|k| BoxElement::basis(a[k], b[k]).expect("not 1⊗1"));
                        let sides = evaluate(rel, [&x, &y, &z], BoxElement::zero(), box_mul)?;
                        report.record(sides.as_ref().map(|(l, r)| l == r), || {
                            let (l, r) = sides.as_ref().expect("evaluated");
                            Counterexample {
                                relation_index: ri,
                                a_triple: names(a),
                                b_triple: names(b),
                                lhs: l.render(&f),
                                rhs: r.render(&f),
                            }
                        });
                    }
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operad::{catalog, catalog_names, catalog_with_star};
    use crate::unit_action::check;

    fn dend() -> (OperadPresentation, TruncatedFree, UnitAction) {
        let p = catalog("dend").unwrap();
        let f = TruncatedFree::new(&p);
        (p, f, UnitAction::from_ints(&[1, 0], &[0, 1]))
    }

    const PREC: Op = Op::Generator(0);
    const SUCC: Op = Op::Generator(1);

    #[test]
    fn degree_three_dimensions() {
        for (name, d) in [("dend", 5), ("tri", 11), ("assoc", 1), ("ns", 14), ("twoassoc", 6), ("assocdialg", 3)] {
            let p = catalog(name).unwrap();
            assert_eq!(TruncatedFree::new(&p).dim_deg3(), d, "{name}");
            let n = p.arity();
            assert_eq!(d, 2 * n * n - p.relation_subspace().dim());
        }
    }

    #[test]
    fn generator_products() {
        let (_, f, u) = dend();
        let xx = mul_free(&f, &f.x(), PREC, &f.x(), &u).unwrap();
        assert_eq!(xx, f.basis(2));
        assert_eq!(f.label(2), "≺");
        assert_eq!(mul_free(&f, &f.unit(), PREC, &f.unit(), &u), Err(MulError::Undefined));
        assert_eq!(mul_free(&f, &f.unit(), Op::Star, &f.unit(), &u).unwrap(), f.unit());
        assert_eq!(mul_free(&f, &xx, PREC, &xx, &u), Err(MulError::TruncationExceeded));
    }

    #[test]
    fn first_dendriform_relation_in_degree_three() {
        let (_, f, u) = dend();
        let m = |a: &UnitizedElement, op, b: &UnitizedElement| mul_free(&f, a, op, b, &u).unwrap();
        let x = f.x();
        let lhs = m(&m(&x, PREC, &x), PREC, &x);
        let rhs = m(&x, PREC, &m(&x, PREC, &x)).add(&m(&x, PREC, &m(&x, SUCC, &x)));
        assert_eq!(lhs, rhs);
        assert!(!lhs.is_zero());
    }

    #[test]
    fn units_scale_by_the_action() {
        let (_, f, u) = dend();
        let x = f.x();
        // x ≺ 1 = α(≺)x = x, 1 ≺ x = β(≺)x = 0
        assert_eq!(mul_free(&f, &x, PREC, &f.unit(), &u).unwrap(), x);
        assert!(mul_free(&f, &f.unit(), PREC, &x, &u).unwrap().is_zero());
        assert_eq!(mul_free(&f, &f.unit(), SUCC, &x, &u).unwrap(), x);
    }

    #[test]
    fn relations_vanish_in_degree_three() {
        for name in catalog_names() {
            let p = catalog(name).unwrap();
            let f = TruncatedFree::new(&p);
            let u = UnitAction::new(Vector::zeros(p.arity()), Vector::zeros(p.arity())).unwrap();
            let x = f.x();
            for rel in p.relations() {
                let sides = evaluate(rel, [&x, &x, &x], f.zero(), |a, op, b| mul_free(&f, a, op, b, &u)).unwrap();
                let (l, r) = sides.unwrap();
                assert_eq!(l, r, "{name}");
            }
        }
    }

    #[test]
    fn box_products() {
        let (_, f, u) = dend();
        let x1 = BoxElement::basis(1, 0).unwrap();
        let r = mul_box(&f, &x1, PREC, &x1, &u).unwrap();
        assert_eq!(r, BoxElement::basis(2, 0).unwrap());
        let one_x = BoxElement::basis(0, 1).unwrap();
        let r = mul_box(&f, &one_x, PREC, &one_x, &u).unwrap();
        assert_eq!(r, BoxElement::basis(0, 2).unwrap());
        assert_eq!(r.render(&f).keys().collect::<Vec<_>>(), ["1⊗≺"]);
        // (x⊗x) ⊡≻ (x⊗1): (x ★ x) ⊗ (x ≻ 1) with x ≻ 1 = α(≻)x = 0
        let xx = BoxElement::basis(1, 1).unwrap();
        assert!(mul_box(&f, &xx, SUCC, &x1, &u).unwrap().is_zero());
        let r = mul_box(&f, &xx, PREC, &x1, &u).unwrap();
        // ★ = ≺ + ≻
        assert_eq!(r, BoxElement::basis(2, 1).unwrap().add(&BoxElement::basis(3, 1).unwrap()));
    }

    #[test]
    fn oracle_on_known_actions() {
        let (p, _, u) = dend();
        let r = oracle(&p, &u, Mode::Coherent).unwrap();
        assert!(r.holds && r.counterexample.is_none() && r.evaluated > 0);

        let wrong = UnitAction::from_ints(&[1, 0], &[1, 0]);
        let r = oracle(&p, &wrong, Mode::Coherent).unwrap();
        assert!(!r.holds);
        assert_eq!(r.counterexample.unwrap().relation_index, 0);

        let p = catalog_with_star("twoassoc", Some("∗")).unwrap();
        let ones = UnitAction::from_ints(&[1, 1], &[1, 1]);
        assert!(oracle(&p, &ones, Mode::Compatible).unwrap().holds);
        let r = oracle(&p, &ones, Mode::Coherent).unwrap();
        assert!(!r.holds);
        let c = r.counterexample.unwrap();
        assert_eq!(c.b_triple.iter().filter(|b| *b == "1").count(), 2, "{c:?}");
    }

    #[test]
    fn oracle_matches_criterion_on_small_grid() {
        let vals = [Scalar::zero(), Scalar::one(), -Scalar::one(), Scalar::new(1, 2)];
        for name in ["dend", "twoassoc", "assocdialg"] {
            let p = catalog(name).unwrap();
            let star = p.star();
            for i in 0..16 {
                for j in 0..16 {
                    let a = Vector::new(vec![vals[i / 4].clone(), vals[i % 4].clone()]);
                    let b = Vector::new(vec![vals[j / 4].clone(), vals[j % 4].clone()]);
                    let u = UnitAction::new(a, b).unwrap();
                    if !u.is_normalized(star).unwrap() {
                        continue;
                    }
                    for mode in [Mode::Coherent, Mode::Compatible] {
                        let o = oracle(&p, &u, mode).unwrap().holds;
                        let c = check(&p, &u, mode).unwrap().holds();
                        assert_eq!(o, c, "{name} {u} {mode}");
                    }
                }
            }
        }
    }

    #[test]
    fn counterexample_json() {
        let (p, _, _) = dend();
        let r = oracle(&p, &UnitAction::from_ints(&[1, 0], &[1, 0]), Mode::Compatible).unwrap();
        let j = serde_json::to_value(&r).unwrap();
        assert_eq!(j["holds"], false);
        assert_eq!(j["counterexample"]["b_triple"], serde_json::json!(["1", "x", "x"]));
        assert!(j["counterexample"]["lhs"].is_object());
    }
}
