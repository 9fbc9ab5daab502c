//! Black-square products, Koszul duals, and detection of associative
//! operations.

use serde::Serialize;

use crate::error::Error;
use crate::exactlin::{signed_pairing, Matrix, Quadratic, QuadraticRoots, Scalar, Vector};
use crate::operad::{is_associative, OperadPresentation, Presentation, RelPair};
use crate::unit_action::UnitAction;

/// `p1 ⊠ p2`. Generator `(i₁, i₂)` has index `i₁·n₂ + i₂` and label
/// `"l|r"`; the relations are the slot-wise Kronecker products of the two
/// relation bases and `★ = ★₁⊗★₂`.
pub fn black_square(p1: &OperadPresentation, p2: &OperadPresentation) -> Result<OperadPresentation, Error> {
    p1.ensure_valid()?;
    p2.ensure_valid()?;
    let gens = p1.generators().iter().flat_map(|l| p2.generators().iter().map(move |r| format!("{l}|{r}"))).collect();
    let relations = p1.relations().iter().flat_map(|r1| p2.relations().iter().map(move |r2| r1.kron(r2))).collect();
    let name = format!("{}⊠{}", p1.name(), p2.name());
    let star = p1.star().kron(p2.star());
    let (p, dropped) = OperadPresentation::with_reduced_relations(name, gens, relations, star)?;
    if dropped > 0 {
        log::debug!("{}: {dropped} product relations were dependent", p.name());
    }
    p.ensure_valid()?;
    Ok(p)
}

/// `(α₁⊗α₂, β₁⊗β₂)` in the generator order of [`black_square`].
pub fn product_action(u1: &UnitAction, u2: &UnitAction) -> UnitAction {
    UnitAction { alpha: u1.alpha.kron(&u2.alpha), beta: u1.beta.kron(&u2.beta) }
}

/// A presentation without a distinguished operation, as produced by
/// [`dual`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualPresentation {
    name: String,
    gens: Vec<String>,
    relations: Vec<RelPair>,
    /// Dual basis vectors `ěᵢ` whose associator lies in the relations.
    pub associative_candidates: Vec<Vector>,
}

impl Presentation for DualPresentation {
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

impl DualPresentation {
    /// A full presentation with `star` as the distinguished operation;
    /// fails if `star` is not associative.
    pub fn with_star(&self, star: Vector) -> Result<OperadPresentation, Error> {
        OperadPresentation::checked(self.name.clone(), self.gens.clone(), self.relations.clone(), star)
    }
}

/// The annihilator of the relations under
/// `⟨(L,R),(Γ,Δ)⟩ = Σ L_st Γ_st − Σ R_st Δ_st`, on generators labelled
/// `!g`.
pub fn dual<P: Presentation + ?Sized>(p: &P) -> Result<DualPresentation, Error> {
    let n = p.arity();
    let nn = n * n;
    let perp = p.relation_subspace().annihilator(&signed_pairing(nn, nn))?;
    let relations = perp.basis_vectors().iter().map(|v| RelPair::from_flat(n, v)).collect::<Result<Vec<_>, _>>()?;
    let mut out = DualPresentation {
        name: format!("{}!", p.name()),
        gens: p.generators().iter().map(|g| format!("!{g}")).collect(),
        relations,
        associative_candidates: Vec::new(),
    };
    for i in 0..n {
        let e = Vector::unit(n, i);
        if perp.member(&RelPair::associator(&e).flatten())? {
            out.associative_candidates.push(e);
        }
    }
    Ok(out)
}

/// Whether `(x⊗x, x⊗x)` is a relation.
pub fn check_associative<P: Presentation + ?Sized>(p: &P, x: &Vector) -> Result<bool, Error> {
    is_associative(p, x)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum LineRoots {
    /// Every point of the line is associative.
    All,
    Roots {
        roots: Vec<Scalar>,
    },
    /// Exactly the two conjugate roots of `c2·t² + c1·t + c0`, which are
    /// irrational.
    Irrational {
        polynomial: Box<[Scalar; 3]>,
        discriminant: Scalar,
    },
}

/// The `t` for which `x0 + t·d` is associative. Membership is tested by
/// pairing with a complement of the relation space, which gives one
/// polynomial of degree at most 2 in `t` per complement vector.
pub fn find_associative_on_line<P: Presentation + ?Sized>(p: &P, x0: &Vector, d: &Vector) -> Result<LineRoots, Error> {
    let n = p.arity();
    for v in [x0, d] {
        if v.dim() != n {
            return Err(Error::DimensionMismatch { expected: n, found: v.dim() });
        }
    }
    if d.is_zero() {
        return Err(Error::Parse("direction must be nonzero".into()));
    }
    let flat = |m: Matrix| RelPair { left: m.clone(), right: m }.flatten();
    let a0 = flat(Matrix::outer(x0, x0));
    let a1 = flat(Matrix::outer(x0, d).add(&Matrix::outer(d, x0))?);
    let a2 = flat(Matrix::outer(d, d));
    let mut quads = Vec::new();
    for k in p.relation_subspace().orthogonal_complement().basis_vectors() {
        let q = Quadratic::new(k.dot(&a0)?, k.dot(&a1)?, k.dot(&a2)?);
        if !q.is_zero() {
            quads.push(q);
        }
    }
    let Some(first) = quads.first() else {
        return Ok(LineRoots::All);
    };
    let mut roots = match first.roots() {
        QuadraticRoots::All => unreachable!("nonzero polynomial"),
        QuadraticRoots::Rational(rs) => rs,
        QuadraticRoots::Irrational { discriminant } => {
            if quads.iter().all(|q| q.proportional(first)) {
                return Ok(LineRoots::Irrational {
                    polynomial: Box::new([first.c0.clone(), first.c1.clone(), first.c2.clone()]),
                    discriminant,
                });
            }
            Vec::new()
        }
    };
    roots.retain(|t| quads.iter().all(|q| q.eval(t).is_zero()));
    Ok(LineRoots::Roots { roots })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Subspace;
    use crate::operad::{catalog, catalog_names, catalog_with_star};
    use crate::unit_action::{check, solve, Mode};

    fn span(n: usize, rels: &[RelPair]) -> Subspace {
        Subspace::span(2 * n * n, &rels.iter().map(RelPair::flatten).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn dendriform_square() {
        let d = catalog("dend").unwrap();
        let q = black_square(&d, &d).unwrap();
        assert_eq!(q.generators(), ["≺|≺", "≺|≻", "≻|≺", "≻|≻"]);
        assert_eq!(q.relation_subspace().dim(), 9);
        assert_eq!(q.star(), &Vector::from_ints(&[1, 1, 1, 1]));
        let u = UnitAction::from_ints(&[1, 0], &[0, 1]);
        let w = product_action(&u, &u);
        assert_eq!(w, UnitAction::from_ints(&[1, 0, 0, 0], &[0, 0, 0, 1]));
        assert!(check(&q, &w, Mode::Coherent).unwrap().holds());
    }

    #[test]
    fn assoc_is_a_unit_for_the_product() {
        let a = catalog("assoc").unwrap();
        let t = catalog("tri").unwrap();
        let q = black_square(&t, &a).unwrap();
        assert_eq!(q.relation_subspace(), t.relation_subspace());
        let u = UnitAction::from_ints(&[1, 0, 0], &[0, 1, 0]);
        assert_eq!(product_action(&u, &UnitAction::from_ints(&[1], &[1])), u);
    }

    #[test]
    fn dendriform_dual_is_the_associative_dialgebra() {
        let d = dual(&catalog("dend").unwrap()).unwrap();
        let ad = catalog("assocdialg").unwrap();
        assert_eq!(d.relation_subspace(), ad.relation_subspace());
        assert_eq!(d.generators(), ["!≺", "!≻"]);
        assert_eq!(d.associative_candidates, vec![Vector::unit(2, 0), Vector::unit(2, 1)]);
        for c in &d.associative_candidates {
            let p = d.with_star(c.clone()).unwrap();
            assert!(solve(&p, Mode::Compatible).unwrap().is_empty());
        }
    }

    #[test]
    fn assoc_is_self_dual() {
        let a = catalog("assoc").unwrap();
        let d = dual(&a).unwrap();
        assert_eq!(d.relation_subspace(), a.relation_subspace());
        assert_eq!(d.associative_candidates, vec![Vector::unit(1, 0)]);
    }

    #[test]
    fn double_dual_on_catalog() {
        for name in catalog_names() {
            let p = catalog(name).unwrap();
            let d = dual(&p).unwrap();
            let n = p.arity();
            assert_eq!(d.relation_subspace().dim(), 2 * n * n - p.relation_subspace().dim());
            assert_eq!(dual(&d).unwrap().relation_subspace(), p.relation_subspace(), "{name}");
        }
    }

    #[test]
    fn associativity_checks() {
        let d = catalog("dend").unwrap();
        assert!(check_associative(&d, &Vector::from_ints(&[1, 1])).unwrap());
        assert!(!check_associative(&d, &Vector::from_ints(&[1, 0])).unwrap());
        let ad = catalog_with_star("assocdialg", None).unwrap();
        assert!(check_associative(&ad, &Vector::from_ints(&[1, 0])).unwrap());
        assert!(check_associative(&ad, &Vector::from_ints(&[0, 1])).unwrap());
    }

    #[test]
    fn lines() {
        let d = catalog("dend").unwrap();
        let r = find_associative_on_line(&d, &Vector::from_ints(&[0, 0]), &Vector::from_ints(&[1, 1])).unwrap();
        assert_eq!(r, LineRoots::All);
        let ad = catalog("assocdialg").unwrap();
        let r = find_associative_on_line(&ad, &Vector::from_ints(&[1, 0]), &Vector::from_ints(&[-1, 1])).unwrap();
        let LineRoots::Roots { roots } = r else { panic!("{r:?}") };
        assert!(roots.contains(&Scalar::zero()) && roots.contains(&Scalar::one()));
        // brute force over a small grid of t agrees
        for num in -8..=8 {
            let t = Scalar::new(num, 4);
            let x = Vector::from_ints(&[1, 0]).add(&Vector::from_ints(&[-1, 1]).scale(&t)).unwrap();
            assert_eq!(check_associative(&ad, &x).unwrap(), roots.contains(&t), "t={t}");
        }
        assert!(find_associative_on_line(&d, &Vector::from_ints(&[1, 0]), &Vector::from_ints(&[0, 0])).is_err());
    }

    #[test]
    fn irrational_line() {
        // every coordinate except the left aa and bb entries, plus 2·aa + bb
        // on the left; an associator (x,y) is then a relation iff x² = 2y²
        let gens = vec!["a".to_string(), "b".to_string()];
        let mut rels = Vec::new();
        for v in Subspace::full(8).basis_vectors() {
            let idx = v.iter().position(|c| !c.is_zero()).unwrap();
            if idx != 0 && idx != 3 {
                rels.push(RelPair::from_flat(2, &v).unwrap());
            }
        }
        let mut last = RelPair::zero(2);
        last.left[(0, 0)] = Scalar::from(2);
        last.left[(1, 1)] = Scalar::one();
        rels.push(last);
        let p = OperadPresentation::new("irr", gens, rels, Vector::from_ints(&[1, 0])).unwrap();
        assert_eq!(span(2, p.relations()).dim(), 7);
        let r = find_associative_on_line(&p, &Vector::from_ints(&[0, 1]), &Vector::from_ints(&[1, 0])).unwrap();
        let LineRoots::Irrational { discriminant, .. } = r else { panic!("{r:?}") };
        assert_eq!(discriminant, Scalar::from(8));
    }
}
