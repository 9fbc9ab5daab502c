use super::{OperadPresentation, RelPair};
use crate::error::Error;
use crate::exactlin::{Matrix, Scalar, Vector};

const NAMES: [&str; 6] = ["assoc", "dend", "tri", "ns", "twoassoc", "assocdialg"];

pub fn catalog_names() -> &'static [&'static str] {
    &NAMES
}

/// Coefficient matrix from `(s, t, c)` triples.
fn tensor(n: usize, terms: &[(usize, usize, i64)]) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    for &(s, t, c) in terms {
        m[(s, t)] += Scalar::from(c);
    }
    m
}

fn rel(n: usize, left: &[(usize, usize, i64)], right: &[(usize, usize, i64)]) -> RelPair {
    RelPair { left: tensor(n, left), right: tensor(n, right) }
}

/// `★ ⊗ e_t` with `★` the sum of all generators.
fn star_left(n: usize, t: usize) -> Vec<(usize, usize, i64)> {
    (0..n).map(|s| (s, t, 1)).collect()
}

fn star_right(n: usize, s: usize) -> Vec<(usize, usize, i64)> {
    (0..n).map(|t| (s, t, 1)).collect()
}

fn labels(ls: &[&str]) -> Vec<String> {
    ls.iter().map(|s| s.to_string()).collect()
}

fn build(name: &str, gens: &[&str], relations: Vec<RelPair>, star: &[i64]) -> OperadPresentation {
    OperadPresentation::checked(name, labels(gens), relations, Vector::from_ints(star))
        .expect("catalog entries are valid")
}

fn assoc() -> OperadPresentation {
    build("assoc", &["·"], vec![rel(1, &[(0, 0, 1)], &[(0, 0, 1)])], &[1])
}

const PREC: usize = 0;
const SUCC: usize = 1;
const MID: usize = 2;

fn dend() -> OperadPresentation {
    let n = 2;
    let relations = vec![
        // (≺⊗≺, ≺⊗(≺+≻))
        rel(n, &[(PREC, PREC, 1)], &star_right(n, PREC)),
        // (≻⊗≺, ≻⊗≺)
        rel(n, &[(SUCC, PREC, 1)], &[(SUCC, PREC, 1)]),
        // ((≺+≻)⊗≻, ≻⊗≻)
        rel(n, &star_left(n, SUCC), &[(SUCC, SUCC, 1)]),
    ];
    build("dend", &["≺", "≻"], relations, &[1, 1])
}

/// The three relations shared by the trialgebra and the NS-algebra.
fn dendriform_core(n: usize) -> Vec<RelPair> {
    vec![
        rel(n, &[(PREC, PREC, 1)], &star_right(n, PREC)),
        rel(n, &[(SUCC, PREC, 1)], &[(SUCC, PREC, 1)]),
        rel(n, &star_left(n, SUCC), &[(SUCC, SUCC, 1)]),
    ]
}

fn tri() -> OperadPresentation {
    let n = 3;
    let mut relations = dendriform_core(n);
    relations.extend([
        rel(n, &[(SUCC, MID, 1)], &[(SUCC, MID, 1)]),
        rel(n, &[(PREC, MID, 1)], &[(MID, SUCC, 1)]),
        rel(n, &[(MID, PREC, 1)], &[(MID, PREC, 1)]),
        rel(n, &[(MID, MID, 1)], &[(MID, MID, 1)]),
    ]);
    build("tri", &["≺", "≻", "∘"], relations, &[1, 1, 1])
}

fn ns() -> OperadPresentation {
    let n = 3;
    let mut relations = dendriform_core(n);
    // (★⊗• + •⊗≺, ≻⊗• + •⊗★)
    let mut left = star_left(n, MID);
    left.push((MID, PREC, 1));
    let mut right = star_right(n, MID);
    right.push((SUCC, MID, 1));
    relations.push(rel(n, &left, &right));
    build("ns", &["≺", "≻", "•"], relations, &[1, 1, 1])
}

fn twoassoc(star: usize) -> OperadPresentation {
    let relations = vec![rel(2, &[(0, 0, 1)], &[(0, 0, 1)]), rel(2, &[(1, 1, 1)], &[(1, 1, 1)])];
    let s = if star == 0 { [1, 0] } else { [0, 1] };
    build("twoassoc", &["∗", "·"], relations, &s)
}

fn assocdialg(star: usize) -> OperadPresentation {
    const L: usize = 0; // ⊣
    const R: usize = 1; // ⊢
    let n = 2;
    let relations = vec![
        rel(n, &[(L, L, 1)], &[(L, L, 1)]),
        rel(n, &[(R, R, 1)], &[(R, R, 1)]),
        rel(n, &[(L, L, 1)], &[(L, R, 1)]),
        rel(n, &[(R, L, 1)], &[(R, L, 1)]),
        rel(n, &[(L, R, 1)], &[(R, R, 1)]),
    ];
    let s = if star == 0 { [1, 0] } else { [0, 1] };
    build("assocdialg", &["⊣", "⊢"], relations, &s)
}

/// A built-in presentation: `assoc`, `dend`, `tri`, `ns`, `twoassoc`
/// (star `∗`) or `assocdialg` (star `⊣`).
pub fn catalog(name: &str) -> Result<OperadPresentation, Error> {
    catalog_with_star(name, None)
}

/// As [`catalog`], selecting the distinguished operation by label for the
/// entries that have several (`twoassoc`: `∗`/`·`, `assocdialg`: `⊣`/`⊢`).
pub fn catalog_with_star(name: &str, star: Option<&str>) -> Result<OperadPresentation, Error> {
    let choose = |labels: [&str; 2]| -> Result<usize, Error> {
        match star {
            None => Ok(0),
            Some(s) => labels.iter().position(|l| *l == s).ok_or_else(|| Error::UnknownLabel(s.to_string())),
        }
    };
    let p = match name {
        "assoc" => assoc(),
        "dend" => dend(),
        "tri" => tri(),
        "ns" => ns(),
        "twoassoc" => twoassoc(choose(["∗", "·"])?),
        "assocdialg" => assocdialg(choose(["⊣", "⊢"])?),
        other => return Err(Error::UnknownOperad(other.to_string())),
    };
    if star.is_some() && !matches!(name, "twoassoc" | "assocdialg") {
        return Err(Error::UnknownLabel(star.unwrap_or_default().to_string()));
    }
    Ok(p)
}
