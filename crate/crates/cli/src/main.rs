//! `operadic`: batch verification, solving, classification, products, duals
//! and oracle runs for binary quadratic regular operads.

mod input;

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Args, Parser, Subcommand};
use operadic::operad::json::{to_document, to_dual_document};
use operadic::transform::{check_associative, find_associative_on_line, LineRoots};
use operadic::{
    black_square, catalog, catalog_names, check, classify, dual, oracle, solve, ActionSolutionSet, Mode,
    OperadPresentation, Presentation, UnitAction, Vector,
};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "operadic", version, about = "Exact computations with binary quadratic regular operads")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args)]
struct Source {
    /// Catalog name, path to a JSON presentation, or `-` for stdin
    #[arg(long, value_name = "name|path|-")]
    operad: Option<String>,
    /// Same as --operad
    #[arg(value_name = "SOURCE", conflicts_with = "operad")]
    source: Option<String>,
    /// Replace the distinguished operation (comma-separated coordinates)
    #[arg(long, value_name = "csv", allow_hyphen_values = true)]
    star: Option<String>,
}

impl Source {
    fn load(&self) -> Result<OperadPresentation> {
        let Some(spec) = self.operad.as_deref().or(self.source.as_deref()) else {
            bail!("no operad given; use --operad <name|path|-> or a positional source");
        };
        input::presentation(spec, self.star.as_deref())
    }
}

#[derive(Args)]
struct Action {
    /// Values of alpha on the generators, as csv or a JSON file
    #[arg(long, value_name = "csv|path", allow_hyphen_values = true)]
    alpha: String,
    /// Values of beta on the generators, as csv or a JSON file
    #[arg(long, value_name = "csv|path", allow_hyphen_values = true)]
    beta: String,
}

impl Action {
    fn load(&self, p: &OperadPresentation) -> Result<UnitAction> {
        let u = UnitAction::new(input::vector(&self.alpha, "alpha", p)?, input::vector(&self.beta, "beta", p)?)?;
        u.ensure_normalized(p.star())?;
        Ok(u)
    }
}

#[derive(Args)]
struct Output {
    /// Print machine-readable JSON instead of text
    #[arg(long)]
    json: bool,
    /// Write the JSON result to a file
    #[arg(short = 'o', value_name = "path")]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Verb {
    /// List the built-in operads
    Catalog {
        #[command(flatten)]
        out: Output,
    },
    /// Print a presentation as JSON
    Show {
        #[command(flatten)]
        src: Source,
        #[command(flatten)]
        out: Output,
    },
    /// Test a unit action against the coherence equations
    Check {
        #[command(flatten)]
        src: Source,
        #[command(flatten)]
        action: Action,
        #[arg(long, default_value = "coherent")]
        mode: Mode,
        #[command(flatten)]
        out: Output,
    },
    /// Find all unit actions of the given mode
    Solve {
        #[command(flatten)]
        src: Source,
        #[arg(long, default_value = "coherent")]
        mode: Mode,
        #[command(flatten)]
        out: Output,
    },
    /// Classify against the canonical relation spaces
    Classify {
        #[command(flatten)]
        src: Source,
        #[command(flatten)]
        out: Output,
    },
    /// Black-square product of two or more presentations
    Product {
        /// Catalog names, JSON paths, or `-`
        #[arg(required = true, num_args = 2.., value_name = "SOURCE")]
        sources: Vec<String>,
        /// Replace the distinguished operation of the product
        #[arg(long, value_name = "csv", allow_hyphen_values = true)]
        star: Option<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Koszul dual
    Dual {
        #[command(flatten)]
        src: Source,
        #[command(flatten)]
        out: Output,
    },
    /// Test operations for associativity
    Associative {
        #[command(flatten)]
        src: Source,
        /// Operation to test (csv); defaults to the generators and the star
        #[arg(long, value_name = "csv", allow_hyphen_values = true)]
        element: Vec<String>,
        /// Find the associative points x0 + t·d of a line through x0
        #[arg(long, value_name = "csv", allow_hyphen_values = true, requires = "direction")]
        line: Option<String>,
        /// Direction d of the line
        #[arg(long, value_name = "csv", allow_hyphen_values = true, requires = "line")]
        direction: Option<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Evaluate the defining condition on the free algebra on one generator
    Oracle {
        #[command(flatten)]
        src: Source,
        #[command(flatten)]
        action: Action,
        #[arg(long, default_value = "coherent")]
        mode: Mode,
        #[command(flatten)]
        out: Output,
    },
}

/// What a verb produced. A `document` is a presentation meant for piping:
/// it goes to `-o` if given and to stdout otherwise, with the text summary
/// moved to stderr.
struct Outcome {
    text: String,
    json: Value,
    document: Option<Value>,
    status: u8,
}

impl Outcome {
    fn report(text: String, json: Value, ok: bool) -> Self {
        Outcome { text, json, document: None, status: if ok { 0 } else { 1 } }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialize")
}

fn write_file(path: &PathBuf, v: &Value) -> Result<()> {
    fs::write(path, pretty(v) + "\n").map_err(|e| anyhow::anyhow!("writing {}: {e}", path.display()))
}

fn emit(o: &Outcome, out: &Output) -> Result<()> {
    match (&o.document, &out.output) {
        (Some(doc), Some(path)) => {
            write_file(path, doc)?;
            print!("{}", if out.json { pretty(&o.json) + "\n" } else { o.text.clone() });
        }
        (Some(doc), None) => {
            println!("{}", pretty(doc));
            eprint!("{}", o.text);
        }
        (None, path) => {
            if let Some(path) = path {
                write_file(path, &o.json)?;
            }
            print!("{}", if out.json { pretty(&o.json) + "\n" } else { o.text.clone() });
        }
    }
    Ok(())
}

fn labelled(p: &impl Presentation, v: &Vector) -> String {
    let terms: Vec<String> = p
        .generators()
        .iter()
        .zip(v.iter())
        .filter(|(_, c)| !c.is_zero())
        .map(|(g, c)| if c.is_one() { g.clone() } else { format!("{c}·{g}") })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn run_catalog() -> Result<Outcome> {
    let mut text = String::new();
    let mut rows = Vec::new();
    for name in catalog_names() {
        let p = catalog(name)?;
        let dim = p.relation_subspace().dim();
        writeln!(text, "{name:<11} n={} dim R={dim:<3} star={}", p.arity(), labelled(&p, p.star()))?;
        rows.push(json!({ "name": name, "generators": p.generators(), "relations": dim, "star": p.star() }));
    }
    Ok(Outcome::report(text, Value::Array(rows), true))
}

fn run_show(p: &OperadPresentation) -> Result<Outcome> {
    let doc = serde_json::to_value(to_document(p))?;
    let text = format!("{}: {} generators, {} relations\n", p.name(), p.arity(), p.relations().len());
    Ok(Outcome { text, json: doc.clone(), document: Some(doc), status: 0 })
}

fn run_check(p: &OperadPresentation, u: &UnitAction, mode: Mode) -> Result<Outcome> {
    let v = check(p, u, mode)?;
    let mut text = format!("{mode}: {}\n", v.holds());
    if mode == Mode::Coherent {
        writeln!(text, "compatible: {}", v.compatible)?;
    }
    for f in &v.failures {
        writeln!(text, "  relation {} {}: residual {}", f.relation, f.equation, f.residual)?;
    }
    Ok(Outcome::report(text, serde_json::to_value(&v)?, v.holds()))
}

fn run_solve(p: &OperadPresentation, mode: Mode) -> Result<Outcome> {
    let set = solve(p, mode)?;
    let mut text = String::new();
    match &set {
        ActionSolutionSet::Empty => writeln!(text, "no {mode} unit action on {}", p.name())?,
        ActionSolutionSet::Points(ps) => {
            writeln!(text, "{} {mode} unit action(s) on {}:", ps.len(), p.name())?;
            for u in ps {
                writeln!(text, "  {u}")?;
            }
        }
        ActionSolutionSet::Family { particular, .. } => {
            let d = set.dim().unwrap_or(0);
            writeln!(text, "{d}-dimensional family of {mode} unit actions on {}:", p.name())?;
            writeln!(text, "  through {particular}")?;
            for u in set.spanning_points().iter().skip(1) {
                writeln!(text, "  and {u}")?;
            }
        }
    }
    let json = json!({ "operad": p.name(), "mode": mode, "solutions": set });
    Ok(Outcome::report(text, json, !set.is_empty()))
}

fn run_classify(p: &OperadPresentation) -> Result<Outcome> {
    let r = classify(p)?;
    let mut text = format!("class: {}\n", r.class);
    if let Some(w) = &r.witness {
        writeln!(text, "witness: {w}")?;
    }
    if let Some(t) = &r.basis {
        for j in 0..t.cols() {
            writeln!(text, "  op{} = {}", j + 1, labelled(p, &t.column(j)))?;
        }
    }
    writeln!(text, "containment: {}", r.containment)?;
    Ok(Outcome::report(text, serde_json::to_value(&r)?, true))
}

fn run_product(sources: &[String], star: Option<&str>) -> Result<Outcome> {
    if sources.iter().filter(|s| *s == "-").count() > 1 {
        bail!("stdin can be used for at most one source");
    }
    let mut acc = input::presentation(&sources[0], None)?;
    for s in &sources[1..] {
        acc = black_square(&acc, &input::presentation(s, None)?)?;
    }
    if let Some(s) = star {
        acc = acc.with_star(Vector::parse_csv(s)?)?;
        acc.ensure_valid()?;
    }
    run_show(&acc)
}

fn run_dual(p: &OperadPresentation) -> Result<Outcome> {
    let d = dual(p)?;
    let names: Vec<String> = d.associative_candidates.iter().map(|c| labelled(&d, c)).collect();
    let mut text =
        format!("{}: {} relations\nassociative candidates: [{}]\n", d.name(), d.relations().len(), names.join(", "));
    let mut matches = Vec::new();
    for name in catalog_names() {
        let q = catalog(name)?;
        if q.arity() == d.arity() && q.relation_subspace() == d.relation_subspace() {
            let as_q: Vec<String> = d.associative_candidates.iter().map(|c| labelled(&q, c)).collect();
            writeln!(text, "same relations as {name}; candidates there: [{}]", as_q.join(", "))?;
            matches.push(*name);
        }
    }
    let doc = serde_json::to_value(to_dual_document(&d, &d.associative_candidates))?;
    let json = json!({ "dual": doc, "associative_candidates": names, "catalog_matches": matches });
    Ok(Outcome { text, json, document: Some(doc), status: 0 })
}

fn run_associative(p: &OperadPresentation, elements: &[String], line: Option<(&str, &str)>) -> Result<Outcome> {
    let mut text = String::new();
    let mut json = serde_json::Map::new();
    if let Some((x0, d)) = line {
        let (x0, d) = (Vector::parse_csv(x0)?, Vector::parse_csv(d)?);
        let roots = find_associative_on_line(p, &x0, &d)?;
        match &roots {
            LineRoots::All => writeln!(text, "every point of {x0} + t·{d} is associative")?,
            LineRoots::Roots { roots } => {
                let ts: Vec<String> = roots.iter().map(ToString::to_string).collect();
                writeln!(text, "associative for t in {{{}}}", ts.join(", "))?
            }
            LineRoots::Irrational { polynomial, discriminant } => {
                let [c0, c1, c2] = &**polynomial;
                writeln!(
                    text,
                    "associative at the irrational roots of {c2}·t² + {c1}·t + {c0} (discriminant {discriminant})"
                )?
            }
        }
        json.insert("line".into(), serde_json::to_value(&roots)?);
    }
    let mut candidates: Vec<Vector> = elements.iter().map(|e| Vector::parse_csv(e)).collect::<Result<_, _>>()?;
    if candidates.is_empty() && line.is_none() {
        candidates = (0..p.arity()).map(|i| Vector::unit(p.arity(), i)).collect();
        if !candidates.contains(p.star()) {
            candidates.push(p.star().clone());
        }
    }
    let mut results = Vec::new();
    for x in &candidates {
        let ok = check_associative(p, x)?;
        writeln!(text, "{}: {ok}", labelled(p, x))?;
        results.push(json!({ "element": x, "associative": ok }));
    }
    if !results.is_empty() {
        json.insert("elements".into(), Value::Array(results));
    }
    Ok(Outcome::report(text, Value::Object(json), true))
}

fn run_oracle(p: &OperadPresentation, u: &UnitAction, mode: Mode) -> Result<Outcome> {
    let r = oracle(p, u, mode)?;
    let mut text = format!("{mode}: {} ({} instances evaluated, {} undefined)\n", r.holds, r.evaluated, r.skipped);
    if let Some(c) = &r.counterexample {
        let side = |m: &operadic::freealg::Rendered| {
            if m.is_empty() {
                "0".to_string()
            } else {
                m.iter()
                    .map(|(k, v)| match v.to_string().as_str() {
                        "1" => k.clone(),
                        "-1" => format!("-{k}"),
                        c => format!("{c} {k}"),
                    })
                    .collect::<Vec<_>>()
                    .join(" + ")
            }
        };
        writeln!(text, "  relation {} fails", c.relation_index)?;
        if !c.a_triple.is_empty() {
            writeln!(text, "  on A: ({})", c.a_triple.join(", "))?;
        }
        writeln!(text, "  on B: ({})", c.b_triple.join(", "))?;
        writeln!(text, "  lhs = {}\n  rhs = {}", side(&c.lhs), side(&c.rhs))?;
    }
    Ok(Outcome::report(text, serde_json::to_value(&r)?, r.holds))
}

fn run(cli: Cli) -> Result<u8> {
    let (outcome, out) = match &cli.verb {
        Verb::Catalog { out } => (run_catalog()?, out),
        Verb::Show { src, out } => (run_show(&src.load()?)?, out),
        Verb::Check { src, action, mode, out } => {
            let p = src.load()?;
            (run_check(&p, &action.load(&p)?, *mode)?, out)
        }
        Verb::Solve { src, mode, out } => (run_solve(&src.load()?, *mode)?, out),
        Verb::Classify { src, out } => (run_classify(&src.load()?)?, out),
        Verb::Product { sources, star, out } => (run_product(sources, star.as_deref())?, out),
        Verb::Dual { src, out } => (run_dual(&src.load()?)?, out),
        Verb::Associative { src, element, line, direction, out } => {
            let line = line.as_deref().zip(direction.as_deref());
            (run_associative(&src.load()?, element, line)?, out)
        }
        Verb::Oracle { src, action, mode, out } => {
            let p = src.load()?;
            (run_oracle(&p, &action.load(&p)?, *mode)?, out)
        }
    };
    emit(&outcome, out)?;
    Ok(outcome.status)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn"))
        .format_timestamp(None)
        .format_target(false)
        .init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
