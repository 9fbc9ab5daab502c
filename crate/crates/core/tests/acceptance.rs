//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Criteria listed in `KNOWN_FAILING` cannot hold as stated; they are run
//! in full and reported, but do not fail the process.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use operadic::exactlin::{Scalar, Subspace, Vector};
use operadic::transform::{black_square, check_associative, dual, product_action};
use operadic::unit_action::{check, classify, solve, ActionClass, ActionSolutionSet, Equation, Mode, UnitAction};
use operadic::{
    canonical_space, catalog, catalog_names, catalog_with_star, oracle, CanonicalKind, Error, OperadPresentation,
    Presentation, RelPair, TruncatedFree,
};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x5eed_0001;
const KNOWN_FAILING: [usize; 1] = [3];

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Outcome { pass, detail: detail.into() }
    }
}

type Check = Result<Outcome, Error>;
type Criterion = fn() -> Check;

fn dend_action() -> UnitAction {
    UnitAction::from_ints(&[1, 0], &[0, 1])
}

fn tri_action() -> UnitAction {
    UnitAction::from_ints(&[1, 0, 0], &[0, 1, 0])
}

fn c1_dendriform_uniqueness() -> Check {
    let p = catalog("dend")?;
    let only = ActionSolutionSet::Points(vec![dend_action()]);
    let comp = solve(&p, Mode::Compatible)?;
    let coh = solve(&p, Mode::Coherent)?;
    Ok(Outcome::new(comp == only && coh == only, format!("compatible {comp:?}, coherent {coh:?}")))
}

fn c2_trialgebra_and_ns() -> Check {
    let mut ok = true;
    let mut detail = Vec::new();
    for name in ["tri", "ns"] {
        let p = catalog(name)?;
        let verdict = check(&p, &tri_action(), Mode::Coherent)?;
        let report = classify(&p)?;
        let adapted = p.change_basis(report.basis.as_ref().expect("witness found"))?;
        let inside = canonical_space(CanonicalKind::CohNeq, 3)?.contains(&adapted.relation_subspace())?;
        let good = verdict.holds() && report.class == ActionClass::CoherentNeq && report.containment && inside;
        ok &= good;
        detail.push(format!("{name}: check {} class {} containment {}", verdict.holds(), report.class, inside));
    }
    Ok(Outcome::new(ok, detail.join("; ")))
}

fn c3_two_associative() -> Check {
    let ones = UnitAction::from_ints(&[1, 1], &[1, 1]);
    let p = catalog_with_star("twoassoc", Some("∗"))?;
    let v = check(&p, &ones, Mode::Coherent)?;
    let part_a = v.compatible && !v.coherent;

    // C4 residuals: with ★ = ∗ only (··,··) fails; across both choices of
    // ★ every relation carries one
    let mut c4 = Vec::new();
    for s in ["∗", "·"] {
        let q = catalog_with_star("twoassoc", Some(s))?;
        let w = check(&q, &ones, Mode::Coherent)?;
        c4.extend(w.failures.iter().filter(|f| f.equation == Equation::C4).map(|f| f.relation));
    }
    c4.sort_unstable();
    c4.dedup();
    let part_b = c4 == [0, 1];

    let mut empties = Vec::new();
    let mut witnesses = Vec::new();
    for (s, e) in [("∗", 0), ("·", 1)] {
        let q = catalog_with_star("twoassoc", Some(s))?;
        let set = solve(&q, Mode::Coherent)?;
        empties.push(set.is_empty());
        // independent confirmation by the defining condition
        let u = UnitAction::new(Vector::unit(2, e), Vector::unit(2, e))?;
        witnesses.push(format!("★={s}: {u} coherent by oracle {}", oracle(&q, &u, Mode::Coherent)?.holds));
    }
    let part_c = empties.iter().all(|&e| e);
    Ok(Outcome::new(
        part_a && part_b && part_c,
        format!(
            "compatible-not-coherent {part_a}; C4 relations {c4:?}; solve(coherent) empty {empties:?} [{}]",
            witnesses.join(", ")
        ),
    ))
}

fn c4_duality() -> Check {
    let d = dual(&catalog("dend")?)?;
    let ad = catalog("assocdialg")?;
    let same = d.relation_subspace() == ad.relation_subspace();
    let left = Vector::from_ints(&[1, 0]);
    let right = Vector::from_ints(&[0, 1]);
    let assoc = check_associative(&d, &left)? && check_associative(&d, &right)?;
    let mut empty = true;
    for star in [left, right] {
        empty &= solve(&d.with_star(star)?, Mode::Compatible)?.is_empty();
    }
    Ok(Outcome::new(
        same && assoc && empty,
        format!("relations equal {same}; ⊣ and ⊢ associative {assoc}; no compatible action {empty}"),
    ))
}

fn c5_double_dual() -> Check {
    let mut ok = 0;
    let mut total = 0;
    let mut presentations: Vec<OperadPresentation> =
        catalog_names().iter().map(|n| catalog(n)).collect::<Result<_, _>>()?;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 5);
    for i in 0..20 {
        presentations.push(common::random_presentation(&mut rng, 2 + i % 3, 10));
    }
    for p in &presentations {
        total += 1;
        if dual(&dual(p)?)?.relation_subspace() == p.relation_subspace() {
            ok += 1;
        }
    }
    Ok(Outcome::new(ok == total, format!("{ok}/{total} presentations")))
}

/// Name, presentation, product action, generator count, relation dimension.
type Product = (&'static str, OperadPresentation, UnitAction, usize, usize);

fn products() -> Result<Vec<Product>, Error> {
    let (d, t, ns) = (catalog("dend")?, catalog("tri")?, catalog("ns")?);
    let (du, tu) = (dend_action(), tri_action());
    let dd = black_square(&d, &d)?;
    let ddu = product_action(&du, &du);
    Ok(vec![
        ("dend⊠dend", dd.clone(), ddu.clone(), 4, 9),
        ("tri⊠tri", black_square(&t, &t)?, product_action(&tu, &tu), 9, 49),
        ("tri⊠ns", black_square(&t, &ns)?, product_action(&tu, &tu), 9, 28),
        ("dend⊠dend⊠dend", black_square(&dd, &d)?, product_action(&ddu, &du), 8, 27),
    ])
}

fn c6_product_dimensions() -> Check {
    let mut ok = true;
    let mut detail = Vec::new();
    for (name, p, _, gens, dim) in products()? {
        let got = (p.arity(), p.relation_subspace().dim());
        ok &= got == (gens, dim);
        detail.push(format!("{name}: {} generators, dim {}", got.0, got.1));
    }
    Ok(Outcome::new(ok, detail.join("; ")))
}

fn c7_coherence_preservation() -> Check {
    let mut ok = true;
    let mut detail = Vec::new();
    for (name, p, u, _, _) in products()? {
        let holds = check(&p, &u, Mode::Coherent)?.holds();
        ok &= holds;
        detail.push(format!("{name}: {holds}"));
    }
    Ok(Outcome::new(ok, detail.join("; ")))
}

fn first(items: &[String]) -> String {
    items.first().map(|s| format!(", first: {s}")).unwrap_or_default()
}

/// Normalized vectors with coordinates in {0, 1, −1, 1/2}.
fn grid(star: &Vector) -> Vec<Vector> {
    let vals = [Scalar::zero(), Scalar::one(), -Scalar::one(), Scalar::new(1, 2)];
    let n = star.dim();
    let mut out = Vec::new();
    for code in 0..4usize.pow(n as u32) {
        let v: Vector = (0..n).map(|i| vals[(code / 4usize.pow(i as u32)) % 4].clone()).collect();
        if v.dot(star).map(|s| s.is_one()).unwrap_or(false) {
            out.push(v);
        }
    }
    out
}

fn c8_oracle_matches_criterion() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 8);
    let mut disagreements = Vec::new();
    let mut compared = 0;
    let mut presentations = Vec::new();
    for name in catalog_names() {
        presentations.push(catalog(name)?);
    }
    presentations.push(catalog_with_star("twoassoc", Some("·"))?);
    presentations.push(catalog_with_star("assocdialg", Some("⊢"))?);
    for p in &presentations {
        let g = grid(p.star());
        let mut actions: Vec<UnitAction> =
            g.iter().flat_map(|a| g.iter().map(move |b| UnitAction { alpha: a.clone(), beta: b.clone() })).collect();
        if p.arity() >= 3 && actions.len() > 500 {
            actions = actions.choose_multiple(&mut rng, 500).cloned().collect();
        }
        for u in &actions {
            for mode in [Mode::Coherent, Mode::Compatible] {
                compared += 1;
                if oracle(p, u, mode)?.holds != check(p, u, mode)?.holds() {
                    disagreements.push(format!("{} {u} {mode}", p.name()));
                }
            }
        }
    }
    Ok(Outcome::new(
        disagreements.is_empty(),
        format!("{compared} comparisons, {} disagreements{}", disagreements.len(), first(&disagreements)),
    ))
}

fn c9_classification_round_trip() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 9);
    let mut failures = Vec::new();
    let mut total = 0;
    for n in 2..=4 {
        // the span of the star associator alone also admits α ≠ β, so
        // equal-case samples have at least one more relation
        for (kind, class, min_dim) in
            [(CanonicalKind::CohNeq, ActionClass::CoherentNeq, 1), (CanonicalKind::CohEq, ActionClass::CoherentEq, 2)]
        {
            for _ in 0..25 {
                total += 1;
                let p = common::random_canonical_subspace(&mut rng, kind, n, min_dim);
                let report = classify(&p)?;
                if report.class != class || !report.containment {
                    failures.push(format!("{kind} n={n} dim={}: {}", p.relations().len(), report.class));
                }
            }
        }
    }
    Ok(Outcome::new(
        failures.is_empty(),
        format!("{}/{total} classified as built{}", total - failures.len(), first(&failures)),
    ))
}

/// Bracketings of `leaves` leaves.
fn planar_binary_trees(leaves: usize) -> Vec<String> {
    if leaves == 1 {
        return vec!["|".into()];
    }
    let mut out = Vec::new();
    for k in 1..leaves {
        for l in planar_binary_trees(k) {
            for r in planar_binary_trees(leaves - k) {
                out.push(format!("({l}{r})"));
            }
        }
    }
    out
}

fn c10_dimension_identity() -> Check {
    let mut ok = true;
    let mut detail = Vec::new();
    for name in catalog_names() {
        let p = catalog(name)?;
        let n = p.arity();
        let ambient = 2 * n * n;
        let dim_r = Subspace::span(ambient, &p.relations().iter().map(RelPair::flatten).collect::<Vec<_>>())?.dim();
        let d = TruncatedFree::new(&p).dim_deg3();
        ok &= d == ambient - dim_r;
        detail.push(format!("{name} {d}"));
    }
    let trees = planar_binary_trees(4).len();
    let dend = TruncatedFree::new(&catalog("dend")?).dim_deg3();
    ok &= dend == 5 && trees == 5;
    Ok(Outcome::new(ok, format!("{}; trees with 4 leaves {trees}", detail.join(", "))))
}

fn main() -> ExitCode {
    let criteria: [(usize, &str, Criterion); 10] = [
        (1, "dendriform uniqueness", c1_dendriform_uniqueness),
        (2, "trialgebra and NS coherence", c2_trialgebra_and_ns),
        (3, "2-associative", c3_two_associative),
        (4, "duality", c4_duality),
        (5, "double dual", c5_double_dual),
        (6, "product dimensions", c6_product_dimensions),
        (7, "coherence preservation", c7_coherence_preservation),
        (8, "oracle matches criterion", c8_oracle_matches_criterion),
        (9, "classification round trip", c9_classification_round_trip),
        (10, "dimension identity", c10_dimension_identity),
    ];
    let mut unexpected = 0;
    for (i, name, run) in criteria {
        let start = Instant::now();
        let outcome = run().unwrap_or_else(|e| Outcome::new(false, format!("error: {e}")));
        let secs = start.elapsed().as_secs_f64();
        let status = if outcome.pass { "PASS" } else { "FAIL" };
        let known = !outcome.pass && KNOWN_FAILING.contains(&i);
        if !outcome.pass && !known {
            unexpected += 1;
        }
        let note = if known { " (known, see notes)" } else { "" };
        println!("criterion {i:>2} {status}{note} {name} [{secs:.2}s]: {}", outcome.detail);
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
