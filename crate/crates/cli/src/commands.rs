//! Argument handling and dispatch.

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use apolarity::graded::default_tmax;
use apolarity::{
    annihilator_piece, apply_op, catalecticant, decompose_check, dehomogenize, diff_space,
    empty_projective, gamma_scheme, generic_rank, hilbert_function, monomial_basis, nd_bound,
    random_form, rank_report, remark2_check, secant_dimension, Decomposition, Emptiness, Field,
    GradedPiece, Poly, PolyRing, RankOptions, Side,
};
use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};

use crate::parse::{parse_file, parse_list, parse_poly, ParseError, PolyText};
use crate::verify;

#[derive(Parser, Debug)]
#[command(
    name = "apolarity",
    version,
    about = "Exact apolarity computations on forms"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// `q` for the rationals or `p:<prime>`.
    #[arg(long, global = true, default_value = "q", value_parser = parse_field)]
    field: Field,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// JSON output (the default).
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,
    /// Human-readable output.
    #[arg(long, global = true)]
    text: bool,
    /// Input polynomial.
    #[arg(long, global = true, conflicts_with = "file")]
    poly: Option<String>,
    /// File with one polynomial per line; `#` starts a comment.
    #[arg(long, global = true)]
    file: Option<PathBuf>,
    /// Work in at least this many variables.
    #[arg(long, global = true)]
    nvars: Option<usize>,
    /// Add wall-clock time to the report.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Hilbert function of T/F^perp.
    Hilbert,
    /// Degree-k piece of F^perp.
    Annih {
        #[arg(long)]
        k: usize,
    },
    /// Catalecticant matrix T_k -> S_(d-k).
    Catalecticant {
        #[arg(long)]
        k: usize,
    },
    /// Span of all partials of F_l.
    Diff {
        #[arg(long)]
        l: String,
    },
    /// The apolar scheme Gamma(F_l).
    Gamma {
        #[arg(long)]
        l: String,
    },
    /// Upper bound min dim Diff(F_l) over candidate forms, with the full bracket.
    CactusBound {
        #[arg(long, default_value_t = 8)]
        extra_candidates: usize,
        /// Comma-separated linear forms replacing the default candidates.
        #[arg(long)]
        candidates: Option<String>,
    },
    /// Differential length, the largest catalecticant rank.
    Ldiff,
    /// The closed-form bound N_d.
    NdBound {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
    /// Rank of a general form.
    GenericRank {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
    /// Dimension of the r-th secant variety of the Veronese.
    SecantDim {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        r: usize,
    },
    /// Check F against a sum of powers of the given linear forms.
    Decompose {
        #[arg(long)]
        points: String,
    },
    /// Whether every listed operator annihilates F.
    CheckApolar {
        #[arg(long)]
        ideal: String,
    },
    /// Look for a degree where the generated ideal fills everything.
    Empty {
        #[arg(long)]
        gens: String,
        #[arg(long)]
        tmax: Option<usize>,
    },
    /// Compare (l^(d-e) F')^perp with the homogenized annihilator of F_l.
    Remark2 {
        #[arg(long)]
        l: String,
        #[arg(long)]
        e: usize,
        #[arg(long)]
        tmax: Option<usize>,
    },
    /// Seeded random form of degree d in x0..xn.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
    /// Recompute the published numbers.
    VerifyPaper {
        #[arg(long, default_value_t = 4)]
        n_max: usize,
    },
}

fn parse_field(s: &str) -> Result<Field, String> {
    if s == "q" || s == "Q" {
        return Ok(Field::Rational);
    }
    let p = s
        .strip_prefix("p:")
        .ok_or_else(|| format!("expected `q` or `p:<prime>`, got `{s}`"))?;
    let p: u64 = p.parse().map_err(|_| format!("`{p}` is not an integer"))?;
    Field::prime(p).map_err(|e| e.to_string())
}

fn field_label(field: Field) -> String {
    match field {
        Field::Rational => "q".into(),
        Field::Prime(p) => format!("p:{p}"),
    }
}

/// Result of running the tool: what to print and how to exit.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<apolarity::Error> for Failure {
    fn from(e: apolarity::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

fn syntax(what: &str, e: ParseError) -> Failure {
    Failure::Usage(format!("{what}: {e}"))
}

struct Inputs {
    polys: Vec<PolyText>,
}

impl Cli {
    fn inputs(&self) -> Result<Inputs, Failure> {
        if let Some(text) = &self.poly {
            return Ok(Inputs {
                polys: vec![parse_poly(text).map_err(|e| syntax("--poly", e))?],
            });
        }
        if let Some(path) = &self.file {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
            let polys = parse_file(&text).map_err(|e| syntax(&path.display().to_string(), e))?;
            if polys.is_empty() {
                return Err(Failure::Usage(format!(
                    "{} contains no polynomial",
                    path.display()
                )));
            }
            return Ok(Inputs { polys });
        }
        Err(Failure::Usage("this command needs --poly or --file".into()))
    }

    fn nvars(&self, texts: &[&PolyText]) -> usize {
        texts
            .iter()
            .map(|t| t.min_nvars())
            .chain(self.nvars)
            .max()
            .unwrap_or(0)
            .max(1)
    }
}

/// Forms for `F` and auxiliary forms placed in a common ring.
fn forms(cli: &Cli, f: &PolyText, extra: &[PolyText]) -> Result<(Poly, Vec<Poly>), Failure> {
    let mut all: Vec<&PolyText> = vec![f];
    all.extend(extra);
    let n = cli.nvars(&all);
    let f = f.to_poly(cli.field, n, Side::Form)?;
    let extra = extra
        .iter()
        .map(|t| t.to_poly(cli.field, n, Side::Form))
        .collect::<apolarity::Result<Vec<_>>>()?;
    Ok((f, extra))
}

/// Operators, accepting either variable letter.
fn operators(cli: &Cli, texts: &[PolyText], n: usize) -> Result<Vec<Poly>, Failure> {
    texts
        .iter()
        .map(|t| {
            let side = t.side.unwrap_or(Side::Operator);
            Ok(t.to_poly(cli.field, n, side)?.to_side(Side::Operator))
        })
        .collect()
}

fn strings<'a, I: IntoIterator<Item = &'a Poly>>(polys: I) -> Vec<String> {
    polys.into_iter().map(Poly::to_string).collect()
}

fn monomial_strings(ring: PolyRing, k: usize) -> Vec<String> {
    monomial_basis(ring.nvars, k)
        .into_iter()
        .map(|m| ring.term(ring.field.one(), m).to_string())
        .collect()
}

fn single(name: &str, text: &str) -> Result<PolyText, Failure> {
    parse_poly(text).map_err(|e| syntax(name, e))
}

fn list(name: &str, text: &str) -> Result<Vec<PolyText>, Failure> {
    parse_list(text).map_err(|e| syntax(name, e))
}

fn per_poly<F>(cli: &Cli, mut body: F) -> Result<Vec<Value>, Failure>
where
    F: FnMut(&PolyText) -> Result<Value, Failure>,
{
    cli.inputs()?.polys.iter().map(&mut body).collect()
}

fn execute(cli: &Cli, inputs: &mut Map<String, Value>) -> Result<(Vec<Value>, bool), Failure> {
    let field = cli.field;
    let results = match &cli.command {
        Command::Hilbert => per_poly(cli, |t| {
            let (f, _) = forms(cli, t, &[])?;
            let h = hilbert_function(&f)?;
            Ok(json!({
                "poly": f.to_string(),
                "hilbert": h.values(),
                "symmetric": h.is_symmetric(),
                "length": h.length(),
            }))
        })?,
        Command::Annih { k } => {
            inputs.insert("k".into(), json!(k));
            per_poly(cli, |t| {
                let (f, _) = forms(cli, t, &[])?;
                let p = annihilator_piece(&f, *k)?;
                Ok(json!({
                    "poly": f.to_string(),
                    "k": k,
                    "dim": p.dim(),
                    "codim": p.codim(),
                    "basis": strings(&p.basis()),
                }))
            })?
        }
        Command::Catalecticant { k } => {
            inputs.insert("k".into(), json!(k));
            per_poly(cli, |t| {
                let (f, _) = forms(cli, t, &[])?;
                let m = catalecticant(&f, *k)?;
                let d = f.degree().unwrap_or(0);
                let matrix: Vec<Vec<String>> = m
                    .to_rows()
                    .iter()
                    .map(|r| r.iter().map(ToString::to_string).collect())
                    .collect();
                Ok(json!({
                    "poly": f.to_string(),
                    "k": k,
                    "rows": m.rows(),
                    "cols": m.cols(),
                    "rank": m.rank(),
                    "row_monomials": monomial_strings(f.ring(), d - k),
                    "column_monomials": monomial_strings(f.ring().dual(), *k),
                    "matrix": matrix,
                }))
            })?
        }
        Command::Diff { l } => {
            inputs.insert("l".into(), json!(l));
            let lt = single("--l", l)?;
            per_poly(cli, |t| {
                let (f, extra) = forms(cli, t, std::slice::from_ref(&lt))?;
                let (affine, _) = dehomogenize(&f, &extra[0])?;
                let diff = diff_space(&affine)?;
                Ok(json!({
                    "poly": f.to_string(),
                    "l": extra[0].to_string(),
                    "affine": affine.to_string(),
                    "dim": diff.dim(),
                    "basis": strings(&diff.basis()),
                }))
            })?
        }
        Command::Gamma { l } => {
            inputs.insert("l".into(), json!(l));
            let lt = single("--l", l)?;
            per_poly(cli, |t| {
                let (f, extra) = forms(cli, t, std::slice::from_ref(&lt))?;
                let g = gamma_scheme(&f, &extra[0])?;
                Ok(json!({
                    "poly": f.to_string(),
                    "l": extra[0].to_string(),
                    "affine": g.affine.to_string(),
                    "length": g.length,
                    "affine_annihilator": strings(&g.affine_annihilator),
                    "homogenized": strings(&g.homogenized),
                    "verified": g.verified,
                }))
            })?
        }
        Command::CactusBound {
            extra_candidates,
            candidates,
        } => {
            inputs.insert("extra_candidates".into(), json!(extra_candidates));
            let given = match candidates {
                Some(c) => {
                    inputs.insert("candidates".into(), json!(c));
                    Some(list("--candidates", c)?)
                }
                None => None,
            };
            per_poly(cli, |t| {
                let (f, extra) = forms(cli, t, given.as_deref().unwrap_or(&[]))?;
                let options = RankOptions {
                    extra_candidates: *extra_candidates,
                    seed: cli.seed,
                    candidates: given.as_ref().map(|_| extra),
                };
                let r = rank_report(&f, &options)?;
                let lengths: Vec<Value> = r
                    .candidate_lengths
                    .iter()
                    .map(|(l, n)| json!({"form": l.to_string(), "length": n}))
                    .collect();
                Ok(json!({
                    "poly": f.to_string(),
                    "n": r.n,
                    "d": r.d,
                    "hilbert": r.hilbert.values(),
                    "ldiff": r.ldiff,
                    "upper_bound": r.upper_bound,
                    "witness": r.witness.to_string(),
                    "candidates": r.candidates,
                    "candidate_lengths": lengths,
                    "nd_bound": r.nd_bound,
                    "generic_rank": r.generic_rank.map(|g| json!({
                        "value": g.value,
                        "exceptional": g.exceptional,
                        "quadric": g.quadric,
                    })),
                    "bracket": format!("{} <= cr <= {} <= {}", r.ldiff, r.upper_bound, r.nd_bound),
                }))
            })?
        }
        Command::Ldiff => per_poly(cli, |t| {
            let (f, _) = forms(cli, t, &[])?;
            let h = hilbert_function(&f)?;
            Ok(json!({"poly": f.to_string(), "ldiff": h.max(), "hilbert": h.values()}))
        })?,
        Command::NdBound { n, d } => {
            inputs.insert("n".into(), json!(n));
            inputs.insert("d".into(), json!(d));
            if *d == 0 {
                return Err(Failure::Domain("degree must be positive".into()));
            }
            vec![json!({"n": n, "d": d, "nd_bound": nd_bound(*n, *d)})]
        }
        Command::GenericRank { n, d } => {
            inputs.insert("n".into(), json!(n));
            inputs.insert("d".into(), json!(d));
            let g = generic_rank(*n, *d)?;
            vec![json!({
                "n": n,
                "d": d,
                "generic_rank": g.value,
                "exceptional": g.exceptional,
                "quadric": g.quadric,
                "nd_bound": nd_bound(*n, *d),
            })]
        }
        Command::SecantDim { n, d, r } => {
            inputs.insert("n".into(), json!(n));
            inputs.insert("d".into(), json!(d));
            inputs.insert("r".into(), json!(r));
            let dim = secant_dimension(*n, *d, *r, cli.seed)?;
            let expected = apolarity::rank::expected_secant_dimension(*n, *d, *r);
            vec![json!({
                "n": n,
                "d": d,
                "r": r,
                "dimension": dim,
                "expected": expected,
                "defect": expected as i64 - dim as i64,
            })]
        }
        Command::Decompose { points } => {
            inputs.insert("points".into(), json!(points));
            let pts = list("--points", points)?;
            per_poly(cli, |t| {
                let (f, ls) = forms(cli, t, &pts)?;
                let mut out = json!({"poly": f.to_string(), "points": strings(&ls)});
                match decompose_check(&f, &ls)? {
                    Decomposition::Sum { coefficients } => {
                        out["result"] = json!("sum");
                        out["coefficients"] = json!(coefficients
                            .iter()
                            .map(ToString::to_string)
                            .collect::<Vec<_>>());
                    }
                    Decomposition::NotInSpan { failing_degrees } => {
                        out["result"] = json!("not_in_span");
                        out["failing_degrees"] = json!(failing_degrees);
                    }
                }
                Ok(out)
            })?
        }
        Command::CheckApolar { ideal } => {
            inputs.insert("ideal".into(), json!(ideal));
            let gens = list("--ideal", ideal)?;
            per_poly(cli, |t| {
                let mut all: Vec<&PolyText> = vec![t];
                all.extend(&gens);
                let n = cli.nvars(&all);
                let f = t.to_poly(field, n, Side::Form)?;
                let ops = operators(cli, &gens, n)?;
                let mut apolar = true;
                let mut rows = Vec::new();
                for g in &ops {
                    let image = apply_op(g, &f)?;
                    apolar &= image.is_zero();
                    rows.push(json!({
                        "generator": g.to_string(),
                        "image": image.to_string(),
                        "annihilates": image.is_zero(),
                    }));
                }
                Ok(json!({"poly": f.to_string(), "generators": rows, "apolar": apolar}))
            })?
        }
        Command::Empty { gens, tmax } => {
            inputs.insert("gens".into(), json!(gens));
            let texts = list("--gens", gens)?;
            let n = cli.nvars(&texts.iter().collect::<Vec<_>>());
            let ops = operators(cli, &texts, n)?;
            let ring = PolyRing::operators(field, n);
            let pieces = ops
                .iter()
                .filter(|g| !g.is_zero())
                .map(|g| GradedPiece::new(ring, g.degree().unwrap_or(0), [g.clone()]))
                .collect::<apolarity::Result<Vec<_>>>()?;
            let t_max = tmax.unwrap_or_else(|| default_tmax(&pieces));
            inputs.insert("tmax".into(), json!(t_max));
            let mut out = json!({"gens": strings(&ops), "tmax": t_max});
            match empty_projective(ring, &pieces, t_max)? {
                Emptiness::CertifiedEmpty { degree } => {
                    out["certified"] = json!(true);
                    out["degree"] = json!(degree);
                }
                Emptiness::Undetermined { quotient_dims } => {
                    out["certified"] = json!(false);
                    out["quotient_dims"] = json!(quotient_dims);
                }
            }
            vec![out]
        }
        Command::Remark2 { l, e, tmax } => {
            inputs.insert("l".into(), json!(l));
            inputs.insert("e".into(), json!(e));
            let lt = single("--l", l)?;
            per_poly(cli, |t| {
                let (f, extra) = forms(cli, t, std::slice::from_ref(&lt))?;
                let top = tmax.unwrap_or(f.degree().unwrap_or(0) + 3);
                let r = remark2_check(&f, &extra[0], *e, 1..=top)?;
                let degrees: Vec<Value> = r
                    .degrees
                    .iter()
                    .map(|&(t, i, h, c)| json!({"t": t, "dim_i": i, "dim_h": h, "contained": c}))
                    .collect();
                Ok(json!({
                    "poly": f.to_string(),
                    "l": extra[0].to_string(),
                    "e": e,
                    "reduced_degree": r.reduced_degree,
                    "doubled_form": r.doubled_form.to_string(),
                    "annihilator_dim": r.annihilator_dim,
                    "kills_power_of_l": r.kills_power_of_l,
                    "degrees": degrees,
                    "contained_throughout": r.contained_throughout(),
                    "agreement_degree": r.agreement_degree,
                }))
            })?
        }
        Command::Random { n, d } => {
            inputs.insert("n".into(), json!(n));
            inputs.insert("d".into(), json!(d));
            let f = random_form(*n, *d, cli.seed, field);
            vec![json!({"n": n, "d": d, "poly": f.to_string()})]
        }
        Command::VerifyPaper { n_max } => {
            inputs.insert("n_max".into(), json!(n_max));
            let checks = verify::run(verify::Options {
                seed: cli.seed,
                n_max: *n_max,
            });
            let failed = checks
                .iter()
                .filter(|c| c.status == verify::Status::Fail)
                .count();
            let mut out: Vec<Value> = checks.iter().map(verify::Check::to_json).collect();
            out.push(json!({
                "summary": {
                    "passed": checks.iter().filter(|c| c.status == verify::Status::Pass).count(),
                    "failed": failed,
                    "not_reproduced": checks.iter().filter(|c| c.status == verify::Status::NotReproduced).count(),
                }
            }));
            return Ok((out, failed == 0));
        }
    };
    Ok((results, true))
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Hilbert => "hilbert",
        Command::Annih { .. } => "annih",
        Command::Catalecticant { .. } => "catalecticant",
        Command::Diff { .. } => "diff",
        Command::Gamma { .. } => "gamma",
        Command::CactusBound { .. } => "cactus-bound",
        Command::Ldiff => "ldiff",
        Command::NdBound { .. } => "nd-bound",
        Command::GenericRank { .. } => "generic-rank",
        Command::SecantDim { .. } => "secant-dim",
        Command::Decompose { .. } => "decompose",
        Command::CheckApolar { .. } => "check-apolar",
        Command::Empty { .. } => "empty",
        Command::Remark2 { .. } => "remark2",
        Command::Random { .. } => "random",
        Command::VerifyPaper { .. } => "verify-paper",
    }
}

fn render_text(doc: &Value) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{} (field {}, seed {})\n",
        doc["command"].as_str().unwrap_or(""),
        doc["field"].as_str().unwrap_or(""),
        doc["seed"]
    ));
    let results = doc["results"].as_array().cloned().unwrap_or_default();
    if doc["command"] == "verify-paper" {
        for r in &results {
            if let Some(s) = r.get("summary") {
                out.push_str(&format!(
                    "{} passed, {} failed, {} not reproduced\n",
                    s["passed"], s["failed"], s["not_reproduced"]
                ));
                continue;
            }
            out.push_str(&format!(
                "{:<14} [{}] {}: expected {}, computed {}\n",
                r["status"].as_str().unwrap_or(""),
                r["group"],
                r["check"].as_str().unwrap_or(""),
                r["expected"].as_str().unwrap_or(""),
                r["computed"].as_str().unwrap_or("")
            ));
        }
    } else {
        for (i, r) in results.iter().enumerate() {
            if results.len() > 1 {
                out.push_str(&format!("[{}]\n", i + 1));
            }
            render_value(&mut out, r, 1);
        }
    }
    if let Some(ms) = doc.get("timing_ms") {
        out.push_str(&format!("time: {ms} ms\n"));
    }
    out
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn render_value(out: &mut String, v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    let Value::Object(map) = v else {
        out.push_str(&format!("{pad}{}\n", scalar_text(v)));
        return;
    };
    for (key, value) in map {
        match value {
            Value::Array(items)
                if items
                    .iter()
                    .all(|x| !x.is_object() && !x.is_array() && !x.is_string()) =>
            {
                let parts: Vec<String> = items.iter().map(scalar_text).collect();
                out.push_str(&format!("{pad}{key}: [{}]\n", parts.join(", ")));
            }
            Value::Array(items) => {
                out.push_str(&format!("{pad}{key}:\n"));
                for item in items {
                    match item {
                        Value::Object(_) => {
                            let mut inner = String::new();
                            render_value(&mut inner, item, 0);
                            let line = inner.lines().collect::<Vec<_>>().join(", ");
                            out.push_str(&format!("{pad}  {line}\n"));
                        }
                        Value::Array(row) => {
                            let parts: Vec<String> = row.iter().map(scalar_text).collect();
                            out.push_str(&format!("{pad}  [{}]\n", parts.join(", ")));
                        }
                        other => out.push_str(&format!("{pad}  {}\n", scalar_text(other))),
                    }
                }
            }
            Value::Object(_) => {
                out.push_str(&format!("{pad}{key}:\n"));
                render_value(out, value, indent + 1);
            }
            other => out.push_str(&format!("{pad}{key}: {}\n", scalar_text(other))),
        }
    }
}

/// Parse `args` (program name first), run the command and format the output.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    code,
                }
            } else {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            };
        }
    };
    let start = Instant::now();
    let mut inputs = Map::new();
    if let Some(p) = &cli.poly {
        inputs.insert("poly".into(), json!(p));
    }
    if let Some(f) = &cli.file {
        inputs.insert("file".into(), json!(f.display().to_string()));
    }
    if let Some(n) = cli.nvars {
        inputs.insert("nvars".into(), json!(n));
    }
    let (results, ok) = match execute(&cli, &mut inputs) {
        Ok(r) => r,
        Err(Failure::Usage(m)) => {
            return Outcome {
                stdout: String::new(),
                stderr: format!("usage error: {m}\n"),
                code: 2,
            }
        }
        Err(Failure::Domain(m)) => {
            return Outcome {
                stdout: String::new(),
                stderr: format!("error: {m}\n"),
                code: 1,
            }
        }
    };
    let mut doc = json!({
        "command": command_name(&cli.command),
        "inputs": inputs,
        "field": field_label(cli.field),
        "seed": cli.seed,
        "results": results,
    });
    if cli.timing {
        doc["timing_ms"] = json!(start.elapsed().as_millis() as u64);
    }
    let stdout = if cli.text {
        render_text(&doc)
    } else {
        let mut s = serde_json::to_string_pretty(&doc).expect("json values serialize");
        s.push('\n');
        s
    };
    Outcome {
        stdout,
        stderr: if ok {
            String::new()
        } else {
            "error: some checks failed\n".into()
        },
        code: if ok { 0 } else { 1 },
    }
}
