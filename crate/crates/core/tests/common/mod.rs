#![allow(dead_code)]

use operadic::{canonical_space, CanonicalKind, OperadPresentation, RelPair, Scalar, Subspace, Vector};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("g{i}")).collect()
}

pub fn random_vector<R: Rng>(rng: &mut R, dim: usize, range: i64) -> Vector {
    (0..dim).map(|_| Scalar::from(rng.gen_range(-range..=range))).collect()
}

pub fn from_subspace(name: &str, n: usize, space: &Subspace, star: Vector) -> OperadPresentation {
    let rels = space.basis_vectors().iter().map(|v| RelPair::from_flat(n, v).unwrap()).collect();
    OperadPresentation::checked(name, labels(n), rels, star).unwrap()
}

/// A valid presentation on `n` generators: a random nonzero star, its
/// associator, and up to `extra` random sparse relations.
pub fn random_presentation<R: Rng>(rng: &mut R, n: usize, extra: usize) -> OperadPresentation {
    let mut star = random_vector(rng, n, 1);
    if star.is_zero() {
        star[rng.gen_range(0..n)] = Scalar::one();
    }
    let ambient = 2 * n * n;
    let mut vs = vec![RelPair::associator(&star).flatten()];
    for _ in 0..rng.gen_range(0..=extra) {
        let mut v = Vector::zeros(ambient);
        for _ in 0..rng.gen_range(1..=3) {
            v[rng.gen_range(0..ambient)] = Scalar::from(rng.gen_range(-2..=2));
        }
        vs.push(v);
    }
    from_subspace("random", n, &Subspace::span(ambient, &vs).unwrap(), star)
}

/// A random subspace of a canonical space containing the associator of
/// `★ = Σ opᵢ`, of dimension at least `min_dim`.
pub fn random_canonical_subspace<R: Rng>(
    rng: &mut R,
    kind: CanonicalKind,
    n: usize,
    min_dim: usize,
) -> OperadPresentation {
    let space = canonical_space(kind, n).unwrap();
    let basis = space.basis_vectors();
    let star = Vector::from_ints(&vec![1; n]);
    let assoc = RelPair::associator(&star).flatten();
    loop {
        let k = rng.gen_range(0..basis.len());
        let mut vs = vec![assoc.clone()];
        for _ in 0..k {
            let mut v = Vector::zeros(2 * n * n);
            for b in &basis {
                v = v.add(&b.scale(&Scalar::from(rng.gen_range(-3..=3)))).unwrap();
            }
            vs.push(v);
        }
        let sub = Subspace::span(2 * n * n, &vs).unwrap();
        if sub.dim() >= min_dim {
            return from_subspace(kind.as_str(), n, &sub, star);
        }
    }
}

/// An invertible `n×n` integer matrix: a random permutation of a random
/// unit upper-triangular matrix.
pub fn random_invertible<R: Rng>(rng: &mut R, n: usize) -> operadic::Matrix {
    let mut rows: Vec<Vector> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match j.cmp(&i) {
                    std::cmp::Ordering::Less => Scalar::zero(),
                    std::cmp::Ordering::Equal => Scalar::one(),
                    std::cmp::Ordering::Greater => Scalar::from(rng.gen_range(-2..=2)),
                })
                .collect()
        })
        .collect();
    rows.shuffle(rng);
    operadic::Matrix::from_rows(n, rows).unwrap()
}
