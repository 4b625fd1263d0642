use std::fmt::{self, Write as _};
use std::fs;
use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;

use necklace_core::forms::{self, Bounds};
use necklace_core::moment::{self, MomentSolveResult, SolveOptions};
use necklace_core::necklace::{display_necklaces, NecklaceWord};
use necklace_core::quiver::examples;
use necklace_core::roots::{enumerate_positive_roots, BoxCaps, RootClassification};
use necklace_core::strata::{self, ClassifyReport, MinimalityVerdict, SigmaTable, SigmaVerdict, SCHEMA};
use necklace_core::{kontsevich_bracket, DimVector, Error, IntegerMatrix, Quiver, Weight};

use crate::args::{BoundArgs, Builtin, CapArgs, Cli, Command, QuiverSource, Target};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            Self::Usage(_) => 2,
            Self::Domain(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Usage(m) | Self::Domain(m) => f.write_str(m),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        Self::Domain(e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

/// Reads and parses a quiver description file.
pub fn parse_quiver_file(path: &Path) -> CliResult<Quiver> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Domain(format!("{}: {e}", path.display())))?;
    text.parse::<Quiver>().map_err(|e| CliError::Domain(format!("{}: {e}", path.display())))
}

fn load(source: &QuiverSource) -> CliResult<Quiver> {
    match (&source.quiver, source.example) {
        (Some(path), _) => parse_quiver_file(path),
        (None, Some(Builtin::Calogero)) => Ok(examples::calogero()),
        (None, Some(Builtin::A1Tilde)) => Ok(examples::a1_tilde()),
        (None, Some(Builtin::OneLoop)) => Ok(examples::one_loop()),
        (None, None) => Err(CliError::Usage("one of --quiver or --example is required".into())),
    }
}

fn caps(c: &CapArgs) -> BoxCaps {
    BoxCaps { max_entry: c.max_entry, max_candidates: c.max_candidates }
}

fn parse_dim(q: &Quiver, text: &str, what: &str) -> CliResult<DimVector> {
    let v: DimVector = text.parse().map_err(|e: Error| CliError::Usage(format!("--{what}: {e}")))?;
    q.check_dim(v.as_slice()).map_err(|e| CliError::Usage(format!("--{what}: {e}")))?;
    Ok(v)
}

fn parse_target(q: &Quiver, t: &Target) -> CliResult<(DimVector, Weight)> {
    let alpha = parse_dim(q, &t.alpha, "alpha")?;
    let lambda: Weight = t.lambda.parse().map_err(|e: Error| CliError::Usage(format!("--lambda: {e}")))?;
    if lambda.len() != q.vertex_count() {
        return Err(CliError::Usage(format!(
            "--lambda: expected {} entries, got {}",
            q.vertex_count(),
            lambda.len()
        )));
    }
    Ok((alpha, lambda))
}

/// A finished command: the text to print and the JSON document.
struct Output {
    text: String,
    json: serde_json::Value,
}

fn output<T: Serialize>(text: String, report: &T) -> CliResult<Output> {
    let json = serde_json::to_value(report).map_err(|e| CliError::Domain(format!("serializing report: {e}")))?;
    Ok(Output { text, json })
}

pub fn run(cli: &Cli) -> CliResult<String> {
    let out = match &cli.command {
        Command::Info { source } => info(&load(source)?)?,
        Command::Roots { source, bound, caps: c } => roots(&load(source)?, bound, caps(c))?,
        Command::Sigma { source, target, caps: c } => sigma(&load(source)?, target, caps(c))?,
        Command::Classify { source, target, caps: c } => classify(&load(source)?, target, caps(c))?,
        Command::Bracket { source, w1, w2 } => bracket(&load(source)?, w1, w2)?,
        Command::Derham { source, degrees, lengths, bounds } => derham(&load(source)?, *degrees, *lengths, bounds)?,
        Command::Karoubi { source, degrees, lengths, bounds } => karoubi(&load(source)?, *degrees, *lengths, bounds)?,
        Command::Moment { source, target, seeds, seed, tol, max_iter, svd_tol } => {
            let opts = SolveOptions { tol: *tol, max_iter: *max_iter, svd_tol: *svd_tol };
            moment(&load(source)?, target, *seed, *seeds, opts)?
        }
    };
    if let Some(path) = &cli.json {
        let mut body = serde_json::to_string_pretty(&out.json).expect("JSON values serialize");
        body.push('\n');
        fs::write(path, body).map_err(|e| CliError::Domain(format!("{}: {e}", path.display())))?;
    }
    Ok(out.text)
}

#[derive(Serialize)]
struct ArrowEntry {
    label: String,
    source: usize,
    target: usize,
}

#[derive(Serialize)]
struct InfoReport {
    schema: &'static str,
    command: &'static str,
    vertices: usize,
    arrows: Vec<ArrowEntry>,
    euler_form: IntegerMatrix,
    tits_form: IntegerMatrix,
    double_arrows: Vec<ArrowEntry>,
}

fn arrow_entries(q: &Quiver) -> Vec<ArrowEntry> {
    q.arrows()
        .iter()
        .map(|a| ArrowEntry { label: a.label.clone(), source: a.source + 1, target: a.target + 1 })
        .collect()
}

fn arrow_list(arrows: &[ArrowEntry]) -> String {
    if arrows.is_empty() {
        return "(none)".into();
    }
    arrows.iter().map(|a| format!("{}: {} -> {}", a.label, a.source, a.target)).collect::<Vec<_>>().join(", ")
}

fn info(q: &Quiver) -> CliResult<Output> {
    let report = InfoReport {
        schema: SCHEMA,
        command: "info",
        vertices: q.vertex_count(),
        arrows: arrow_entries(q),
        euler_form: q.euler_form(),
        tits_form: q.tits_form(),
        double_arrows: arrow_entries(q.double().quiver()),
    };
    let mut text = String::new();
    writeln!(text, "vertices: {}", report.vertices).unwrap();
    writeln!(text, "arrows: {}", arrow_list(&report.arrows)).unwrap();
    write!(text, "euler form:\n{}", report.euler_form).unwrap();
    write!(text, "tits form:\n{}", report.tits_form).unwrap();
    writeln!(text, "double arrows: {}", arrow_list(&report.double_arrows)).unwrap();
    output(text, &report)
}

#[derive(Serialize)]
struct RootEntry {
    alpha: DimVector,
    chi: i64,
    p: i64,
    #[serde(flatten)]
    classification: RootClassification,
}

#[derive(Serialize)]
struct RootsReport {
    schema: &'static str,
    command: &'static str,
    #[serde(rename = "box")]
    bound: DimVector,
    roots: Vec<RootEntry>,
}

fn roots(q: &Quiver, bound: &str, caps: BoxCaps) -> CliResult<Output> {
    let bound = parse_dim(q, bound, "box")?;
    let chi = q.euler_form();
    let roots = enumerate_positive_roots(q, &bound, caps)?
        .into_iter()
        .map(|(alpha, classification)| {
            let c = chi.bilinear(alpha.as_slice(), alpha.as_slice())?;
            Ok(RootEntry { alpha, chi: c, p: 1 - c, classification })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let mut text = String::new();
    writeln!(text, "positive roots in the box {bound}: {}", roots.len()).unwrap();
    writeln!(text, "{:<14} {:<15} {:>5} {:>4}  reflections", "alpha", "class", "chi", "p").unwrap();
    for r in &roots {
        let refl: Vec<String> = r.classification.reflections.iter().map(|i| format!("r{i}")).collect();
        writeln!(
            text,
            "{:<14} {:<15} {:>5} {:>4}  {}",
            r.alpha.to_string(),
            r.classification.class.as_str(),
            r.chi,
            r.p,
            if refl.is_empty() { "-".to_string() } else { refl.join(" ") }
        )
        .unwrap();
    }
    let list = |class| {
        let v: Vec<String> =
            roots.iter().filter(|r| r.classification.class == class).map(|r| r.alpha.to_string()).collect();
        if v.is_empty() { "(none)".to_string() } else { v.join(" ") }
    };
    writeln!(text, "real: {}", list(necklace_core::RootClass::RealRoot)).unwrap();
    writeln!(text, "imaginary: {}", list(necklace_core::RootClass::ImaginaryRoot)).unwrap();
    let report = RootsReport { schema: SCHEMA, command: "roots", bound, roots };
    output(text, &report)
}

#[derive(Serialize)]
struct SigmaReport {
    schema: &'static str,
    command: &'static str,
    alpha: DimVector,
    lambda: Weight,
    verdict: SigmaVerdict,
    minimality: Option<MinimalityVerdict>,
}

fn verdict_text(v: &SigmaVerdict) -> String {
    let mut text = String::new();
    writeln!(text, "alpha: {}", v.alpha).unwrap();
    writeln!(text, "root: {}", v.root_class.as_str()).unwrap();
    writeln!(text, "p(alpha): {}", v.p_alpha).unwrap();
    writeln!(text, "in S_lambda: {}", v.in_s).unwrap();
    writeln!(text, "in Sigma_lambda: {}", v.in_sigma).unwrap();
    match (&v.best_decomposition, v.best_sum) {
        (Some(d), Some(s)) => writeln!(text, "witness: {d} with sum of p = {s}").unwrap(),
        _ => writeln!(text, "witness: none").unwrap(),
    }
    writeln!(text, "reason: {}", v.reason).unwrap();
    text
}

fn sigma(q: &Quiver, target: &Target, caps: BoxCaps) -> CliResult<Output> {
    let (alpha, lambda) = parse_target(q, target)?;
    let table = SigmaTable::new(q, &lambda, &alpha, caps)?;
    let verdict = table.membership(&alpha)?;
    let minimality = if verdict.in_sigma { Some(table.minimality(&alpha)?) } else { None };
    let mut text = format!("lambda: {lambda}\n");
    text.push_str(&verdict_text(&verdict));
    if let Some(m) = &minimality {
        match &m.smaller {
            None => writeln!(text, "minimal: true").unwrap(),
            Some(b) => writeln!(text, "minimal: false (witness {b})").unwrap(),
        }
    }
    let report = SigmaReport { schema: SCHEMA, command: "sigma", alpha, lambda, verdict, minimality };
    output(text, &report)
}

fn opt<T: fmt::Display>(x: &Option<T>) -> String {
    x.as_ref().map_or_else(|| "n/a".to_string(), T::to_string)
}

fn classify(q: &Quiver, target: &Target, caps: BoxCaps) -> CliResult<Output> {
    let (alpha, lambda) = parse_target(q, target)?;
    let report: ClassifyReport = strata::classify(q, &alpha, &lambda, caps)?;
    let mut text = format!("lambda: {lambda}\n");
    text.push_str(&verdict_text(&report.sigma));
    let dl: Vec<String> = report.delta_lambda.iter().map(DimVector::to_string).collect();
    writeln!(text, "delta_lambda below alpha: {}", if dl.is_empty() { "(none)".into() } else { dl.join(" ") }).unwrap();
    let c = &report.coadjoint;
    writeln!(text, "coadjoint: {}", c.coadjoint).unwrap();
    writeln!(text, "coadjoint reason: {}", c.reason).unwrap();
    writeln!(text, "dim_fiber: {}", opt(&c.dim_fiber)).unwrap();
    writeln!(text, "dim_quotient: {}", opt(&c.dim_quotient)).unwrap();
    writeln!(text, "representation types: {}", report.rep_types.len()).unwrap();
    for t in &report.rep_types {
        let counts: Vec<String> = t.local_quiver.arrow_counts.iter().map(|r| format!("{r:?}")).collect();
        write!(text, "  {} local arrows {}", t.rep_type, counts.join(" ")).unwrap();
        if let Some(s) = &t.slice {
            write!(text, " slice {} vs {} -> {}", s.lhs, s.rhs, if s.smooth { "smooth" } else { "singular" }).unwrap();
        }
        text.push('\n');
    }
    if let Some(t) = &report.two_alpha {
        writeln!(
            text,
            "2alpha check: applies {} lhs {} rhs {} -> {}",
            t.applies,
            t.lhs,
            t.rhs,
            if t.smooth { "smooth" } else { "not smooth" }
        )
        .unwrap();
    }
    output(text, &report)
}

#[derive(Serialize)]
struct Term {
    necklace: String,
    coefficient: String,
}

#[derive(Serialize)]
struct BracketReport {
    schema: &'static str,
    command: &'static str,
    w1: String,
    w2: String,
    result: String,
    terms: Vec<Term>,
}

fn parse_necklace(q: &Quiver, text: &str, flag: &str) -> CliResult<NecklaceWord> {
    NecklaceWord::parse(q, text).map_err(|e| CliError::Usage(format!("--{flag} `{text}`: {e}")))
}

fn bracket(base: &Quiver, w1: &str, w2: &str) -> CliResult<Output> {
    let d = base.double();
    let q = d.quiver();
    let (n1, n2) = (parse_necklace(q, w1, "w1")?, parse_necklace(q, w2, "w2")?);
    let b = kontsevich_bracket(&d, &n1.to_sum(), &n2.to_sum());
    let result = display_necklaces(&b, q).to_string();
    let terms = b
        .iter()
        .map(|(w, c)| Term { necklace: w.display(q), coefficient: necklace_core::scalar::format_rational(c) })
        .collect();
    let report = BracketReport {
        schema: SCHEMA,
        command: "bracket",
        w1: n1.display(q),
        w2: n2.display(q),
        result: result.clone(),
        terms,
    };
    output(format!("{result}\n"), &report)
}

#[derive(Serialize)]
struct Piece {
    degree: usize,
    length: usize,
    dim: usize,
    homology: usize,
}

#[derive(Serialize)]
struct TableReport {
    schema: &'static str,
    command: &'static str,
    pieces: Vec<Piece>,
}

fn bounds(b: &BoundArgs, degrees: usize, lengths: usize) -> CliResult<Bounds> {
    let bounds = Bounds { max_degree: b.max_degree, max_length: b.max_length };
    if degrees > bounds.max_degree || lengths > bounds.max_length {
        return Err(CliError::Domain(format!(
            "bound exceeded: table up to degree {degrees}, length {lengths} but bounds are degree <= {}, length <= {}",
            bounds.max_degree, bounds.max_length
        )));
    }
    Ok(bounds)
}

fn grid(degrees: usize, lengths: usize) -> Vec<(usize, usize)> {
    (0..=degrees).flat_map(|n| (0..=lengths).map(move |l| (n, l))).collect()
}

fn table_text(title: &str, pieces: &[Piece], degrees: usize, lengths: usize) -> String {
    let mut text = String::new();
    for (label, pick) in [("dimension", 0), ("homology", 1)] {
        writeln!(text, "{title} {label} (rows: degree, columns: length 0..={lengths})").unwrap();
        for n in 0..=degrees {
            let cells: Vec<String> = pieces
                .iter()
                .filter(|p| p.degree == n)
                .map(|p| format!("{:>6}", if pick == 0 { p.dim } else { p.homology }))
                .collect();
            writeln!(text, "n={n} {}", cells.join("")).unwrap();
        }
    }
    text
}

fn derham(base: &Quiver, degrees: usize, lengths: usize, b: &BoundArgs) -> CliResult<Output> {
    let bounds = bounds(b, degrees, lengths)?;
    let q = base.double().quiver().clone();
    let pieces = grid(degrees, lengths)
        .into_par_iter()
        .map(|(n, l)| {
            Ok(Piece {
                degree: n,
                length: l,
                dim: forms::basis(&q, n, l).len(),
                homology: forms::graded_homology_dim(&q, n, l, bounds)?,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let text = table_text("Omega", &pieces, degrees, lengths);
    output(text, &TableReport { schema: SCHEMA, command: "derham", pieces })
}

fn karoubi(base: &Quiver, degrees: usize, lengths: usize, b: &BoundArgs) -> CliResult<Output> {
    let bounds = bounds(b, degrees, lengths)?;
    let q = base.double().quiver().clone();
    let pieces = grid(degrees, lengths)
        .into_par_iter()
        .map(|(n, l)| {
            Ok(Piece {
                degree: n,
                length: l,
                dim: forms::karoubi_dim(&q, n, l, bounds)?.dim,
                homology: forms::karoubi_homology_dim(&q, n, l, bounds)?,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let text = table_text("dR", &pieces, degrees, lengths);
    output(text, &TableReport { schema: SCHEMA, command: "karoubi", pieces })
}

#[derive(Serialize)]
struct MomentReport {
    schema: &'static str,
    command: &'static str,
    alpha: DimVector,
    lambda: Weight,
    expected_fiber_dim: i64,
    converged: usize,
    runs: Vec<MomentSolveResult>,
}

fn moment(base: &Quiver, target: &Target, first: u64, count: u64, opts: SolveOptions) -> CliResult<Output> {
    let (alpha, lambda) = parse_target(base, target)?;
    let d = base.double();
    let runs = (first..first + count)
        .into_par_iter()
        .map(|seed| moment::solve(&d, &alpha, &lambda, seed, opts))
        .collect::<Result<Vec<_>, Error>>()?;
    let chi = base.euler_form().bilinear(alpha.as_slice(), alpha.as_slice())?;
    let expected_fiber_dim = 1 + alpha.dot_self() - 2 * chi;
    let converged = runs.iter().filter(|r| r.converged).count();
    let mut text = String::new();
    writeln!(text, "alpha {alpha}, lambda {lambda}: {converged} of {} seeds converged", runs.len()).unwrap();
    writeln!(text, "expected fiber dimension 1 + a.a - 2 chi(a,a) = {expected_fiber_dim}").unwrap();
    writeln!(text, "{:>6} {:>10} {:>6} {:>14} {:>5} {:>6}", "seed", "converged", "iters", "residual", "rank", "fiber").unwrap();
    for r in &runs {
        writeln!(
            text,
            "{:>6} {:>10} {:>6} {:>14.3e} {:>5} {:>6}",
            r.seed,
            r.converged,
            r.iterations,
            r.residual_norm,
            opt(&r.jacobian_rank),
            opt(&r.fiber_dim_estimate)
        )
        .unwrap();
    }
    let report = MomentReport { schema: SCHEMA, command: "moment", alpha, lambda, expected_fiber_dim, converged, runs };
    output(text, &report)
}
