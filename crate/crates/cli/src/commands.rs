use clap::Args;
use hoggatt::detkit::{verify_identity, Grid, IdentityId, IdentityReport, Params, SweepSummary};
use hoggatt::exactring::SparsePoly;
use hoggatt::genfunc::{
    column_gf, conjecture_probe, default_order, kernel, narayana_extract, reciprocal_check, Conjecture, ProbeRecord,
};
use hoggatt::hoggatt::{
    hoggatt_coeff, hoggatt_coeff_binomials, hoggatt_coeff_brackets, hoggatt_coeff_top, poly_to_json, triangle, Family,
    FamilyKind, Triangle, TriangleQuery,
};
use hoggatt::par::{map_ordered, Execution};
use hoggatt::ssytoracle::{count_ssyt, hook_content_count, EnumerationBudget, TableauSpec};
use hoggatt::Error;
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::options::{BindingArgs, Format, Span};

/// Why a command did not produce a clean run.
#[derive(Debug)]
pub enum Failure {
    /// Bad flags or parameters; exit 2.
    Config(String),
    /// A computation failed outright; exit 1.
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownIdentity(_)
            | Error::InvalidParameter(_)
            | Error::OrderTooSmall { .. }
            | Error::EnumerationBudgetExceeded(_)
            | Error::Parse(_)
            | Error::DimensionTooLarge { .. } => Failure::Config(e.to_string()),
            _ => Failure::Compute(e.to_string()),
        }
    }
}

/// Text for standard output, and whether every checked identity held.
pub struct Outcome {
    pub text: String,
    pub ok: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, ok: true }
    }
}

pub type CmdResult = Result<Outcome, Failure>;

fn int_json(c: &BigInt) -> Value {
    Value::Number(c.to_string().parse().expect("decimal integer is a JSON number"))
}

fn envelope(config: Value, records: Vec<Value>, summary: Value) -> String {
    let v = json!({
        "tool_version": env!("CARGO_PKG_VERSION"),
        "config": config,
        "records": records,
        "summary": summary,
    });
    serde_json::to_string_pretty(&v).expect("serializable") + "\n"
}

fn json_lines(records: &[Value], summary: Value) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&r.to_string());
        out.push('\n');
    }
    out.push_str(&json!({ "summary": summary }).to_string());
    out.push('\n');
    out
}

fn emit_json(format: Format, config: Value, records: Vec<Value>, summary: Value) -> Option<String> {
    match format {
        Format::Json => Some(envelope(config, records, summary)),
        Format::Jsonl => Some(json_lines(&records, summary)),
        _ => None,
    }
}

fn unsupported(command: &str, format: Format, allowed: &[Format]) -> Failure {
    let names: Vec<&str> = allowed.iter().map(|f| f.name()).collect();
    Failure::Config(format!("{command} does not support --format {}; use one of {}", format.name(), names.join(", ")))
}

fn check_format(command: &str, format: Format, allowed: &[Format]) -> Result<(), Failure> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(unsupported(command, format, allowed))
    }
}

#[derive(Args, Clone, Debug)]
pub struct FamilyArgs {
    /// classic, q, fib or general
    #[arg(long, default_value = "classic")]
    pub family: FamilyKind,
    /// Order d >= 1
    #[arg(long, default_value_t = 1)]
    pub d: u32,
    #[command(flatten)]
    pub bindings: BindingArgs,
}

impl FamilyArgs {
    fn build(&self) -> Result<Family, Failure> {
        let bindings = self.bindings.resolve().map_err(Failure::Config)?;
        Ok(Family::new(self.family, self.d, bindings)?)
    }

    fn to_json(&self) -> Value {
        json!({ "family": self.family.tag(), "d": self.d, "bindings": self.bindings.to_json() })
    }
}

#[derive(Args, Clone, Debug)]
pub struct TriangleArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Row range, inclusive
    #[arg(long, default_value = "0..5")]
    pub rows: Span,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

fn triangle_config(command: &str, a: &TriangleArgs, format: Format) -> Value {
    let mut config = json!({ "command": command });
    config.as_object_mut().expect("object").extend(a.family.to_json().as_object().expect("object").clone());
    config["rows"] = json!(a.rows.to_string());
    config["format"] = json!(format.name());
    config
}

fn compute_triangle(a: &TriangleArgs, exec: Execution) -> Result<Triangle, Failure> {
    let query = TriangleQuery::new(a.family.build()?, a.rows.lo, a.rows.hi)?;
    Ok(triangle(&query, exec)?)
}

fn render_triangle(command: &str, a: &TriangleArgs, format: Format, tri: &Triangle) -> CmdResult {
    let text = match format {
        Format::Csv => tri.to_csv(),
        Format::Bfile => tri.to_bfile()?,
        Format::Pretty => tri.to_pretty(),
        Format::Json | Format::Jsonl => {
            let records: Vec<Value> = tri
                .rows_in_order()
                .map(|(n, row)| json!({ "n": n, "row": row.iter().map(poly_to_json).collect::<Vec<_>>() }))
                .collect();
            let entries: usize = tri.rows.iter().map(Vec::len).sum();
            let summary = json!({ "rows": tri.rows.len(), "entries": entries });
            emit_json(format, triangle_config(command, a, format), records, summary).expect("json format")
        }
    };
    Ok(Outcome::ok(text))
}

pub fn cmd_triangle(a: &TriangleArgs, exec: Execution) -> CmdResult {
    let format = a.format.unwrap_or(Format::Pretty);
    let tri = compute_triangle(a, exec)?;
    render_triangle("triangle", a, format, &tri)
}

pub fn cmd_export(a: &TriangleArgs, exec: Execution) -> CmdResult {
    let format = a.format.unwrap_or(Format::Bfile);
    check_format("export", format, &[Format::Bfile, Format::Csv])?;
    let tri = compute_triangle(a, exec)?;
    render_triangle("export", a, format, &tri)
}

#[derive(Args, Clone, Debug)]
pub struct CoeffArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub n: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub k: i64,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

/// The entry of the chosen family. For the classic family every
/// independent route is evaluated and compared.
pub fn cmd_coeff(a: &CoeffArgs) -> CmdResult {
    let format = a.format.unwrap_or(Format::Pretty);
    check_format("coeff", format, &[Format::Pretty, Format::Json, Format::Jsonl, Format::Csv])?;
    let family = a.family.build()?;
    let value = family.entry(a.n, a.k)?;
    let mut routes = vec![value.clone()];
    if family.kind() == FamilyKind::Classic && family.bindings().is_empty() {
        let d = family.d();
        for route in [hoggatt_coeff, hoggatt_coeff_brackets, hoggatt_coeff_binomials, hoggatt_coeff_top] {
            routes.push(SparsePoly::from(route(a.n, a.k, d)?));
        }
    }
    let agree = routes.iter().all(|r| *r == value);
    let text = match format {
        Format::Pretty => format!("{value}\n"),
        Format::Csv => format!("n,k,value\n{},{},\"{value}\"\n", a.n, a.k),
        _ => {
            let mut config = json!({ "command": "coeff" });
            config.as_object_mut().expect("object").extend(a.family.to_json().as_object().expect("object").clone());
            config["n"] = json!(a.n);
            config["k"] = json!(a.k);
            config["format"] = json!(format.name());
            let record = json!({ "n": a.n, "k": a.k, "value": poly_to_json(&value) });
            let summary = json!({ "routes": routes.len(), "agree": agree });
            emit_json(format, config, vec![record], summary).expect("json format")
        }
    };
    Ok(Outcome { text, ok: agree })
}

#[derive(Args, Clone, Debug)]
#[group(id = "targets", required = true, multiple = false, args = ["all", "id"])]
pub struct VerifyArgs {
    /// Every identity
    #[arg(long)]
    pub all: bool,
    /// Identity tag, repeatable (e.g. binomial-hankel-unit or eq9)
    #[arg(long)]
    pub id: Vec<String>,
    /// Single cell: row index
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["d_max", "n_max"])]
    pub n: Option<i64>,
    /// Single cell: column index (default 0)
    #[arg(long, requires = "n", allow_hyphen_values = true)]
    pub k: Option<i64>,
    /// Single cell: order (default 2)
    #[arg(long, requires = "n")]
    pub d: Option<u32>,
    /// Sweep: largest order
    #[arg(long)]
    pub d_max: Option<u32>,
    /// Sweep: largest row
    #[arg(long)]
    pub n_max: Option<i64>,
    #[command(flatten)]
    pub bindings: BindingArgs,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

fn verify_cells(a: &VerifyArgs, ids: &[IdentityId]) -> Vec<(IdentityId, Params)> {
    match a.n {
        Some(n) => ids.iter().map(|&id| (id, Params::new(n, a.k.unwrap_or(0), a.d.unwrap_or(2)))).collect(),
        None => {
            let mut grid = Grid::default();
            if let Some(d) = a.d_max {
                grid.int_d_max = d;
                grid.poly_d_max = d;
            }
            if let Some(n) = a.n_max {
                grid.int_n_max = n;
                grid.poly_n_max = n;
            }
            ids.iter().flat_map(|&id| grid.cells(id).into_iter().map(move |p| (id, p))).collect()
        }
    }
}

fn report_line(r: &IdentityReport) -> String {
    let verdict = if r.pass { "PASS" } else { "FAIL" };
    let p = &r.params;
    format!("{verdict} {} d={} n={} k={}: {} = {}\n", r.id, p.d, p.n, p.k, r.left, r.right)
}

pub fn cmd_verify(a: &VerifyArgs, exec: Execution) -> CmdResult {
    let format = a.format.unwrap_or(Format::Jsonl);
    check_format("verify", format, &[Format::Jsonl, Format::Json, Format::Pretty])?;
    let ids: Vec<IdentityId> = if a.all {
        IdentityId::ALL.to_vec()
    } else {
        a.id.iter().map(|s| s.parse()).collect::<Result<_, Error>>()?
    };
    let bindings = a.bindings.resolve().map_err(Failure::Config)?;
    let cells: Vec<(IdentityId, Params)> = verify_cells(a, &ids)
        .into_iter()
        .map(|(id, p)| (id, p.with_bindings(bindings.clone())))
        .collect();
    let reports = map_ordered(exec, &cells, |(id, p)| verify_identity(*id, p))
        .into_iter()
        .collect::<Result<Vec<_>, Error>>()?;
    let summary = SweepSummary::from_reports(&reports);
    let ok = summary.failed() == 0;
    let text = match format {
        Format::Pretty => {
            let mut out: String = reports.iter().map(report_line).collect();
            out.push_str(&format!("{} passed, {} failed\n", summary.passed(), summary.failed()));
            out
        }
        _ => {
            let config = json!({
                "command": "verify",
                "ids": ids.iter().map(|id| id.tag()).collect::<Vec<_>>(),
                "n": a.n,
                "k": a.n.map(|_| a.k.unwrap_or(0)),
                "d": a.n.map(|_| a.d.unwrap_or(2)),
                "d_max": a.d_max,
                "n_max": a.n_max,
                "bindings": a.bindings.to_json(),
                "format": format.name(),
            });
            let records = reports.iter().map(IdentityReport::to_json).collect();
            emit_json(format, config, records, summary.to_json()).expect("json format")
        }
    };
    Ok(Outcome { text, ok })
}

#[derive(Args, Clone, Debug)]
pub struct ConjectureArgs {
    /// c10 (q), c14 (Fibonacci) or c18 (s,t)
    #[arg(long)]
    pub which: Conjecture,
    /// Single order
    #[arg(long, conflicts_with_all = ["d_max", "grid"])]
    pub d: Option<u32>,
    /// Single column
    #[arg(long, conflicts_with_all = ["k_max", "grid"])]
    pub k: Option<u32>,
    /// Orders 2..=d_max (default 3)
    #[arg(long, conflicts_with = "grid")]
    pub d_max: Option<u32>,
    /// Columns 1..=k_max (default 4)
    #[arg(long, conflicts_with = "grid")]
    pub k_max: Option<u32>,
    /// Shorthand for --d-max D --k-max K
    #[arg(long, num_args = 2, value_names = ["D_MAX", "K_MAX"])]
    pub grid: Option<Vec<u32>>,
    #[command(flatten)]
    pub bindings: BindingArgs,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

fn probe_line(r: &ProbeRecord) -> String {
    let flag = if r.consistent { "consistent" } else { "COUNTEREXAMPLE CANDIDATE" };
    let rep = &r.report;
    format!("{} d={} k={} order={} {flag}: N(x) = {}\n", r.conjecture, rep.d, rep.k, rep.order, rep.numerator)
}

/// Evidence only: the exit status is 0 whatever the probes find, and
/// inconsistent cells are listed in the summary.
pub fn cmd_conjecture(a: &ConjectureArgs, exec: Execution) -> CmdResult {
    let format = a.format.unwrap_or(Format::Jsonl);
    check_format("conjecture", format, &[Format::Jsonl, Format::Json, Format::Pretty])?;
    let bindings = a.bindings.resolve().map_err(Failure::Config)?;
    if a.which != Conjecture::StNarayana && !bindings.is_empty() {
        return Err(Failure::Config(format!("{} takes no variable bindings", a.which)));
    }
    let (d_max, k_max) = match &a.grid {
        Some(g) => (Some(g[0]), Some(g[1])),
        None => (a.d_max, a.k_max),
    };
    let ds: Vec<u32> = a.d.map_or_else(|| (2..=d_max.unwrap_or(3)).collect(), |d| vec![d]);
    let ks: Vec<u32> = a.k.map_or_else(|| (1..=k_max.unwrap_or(4)).collect(), |k| vec![k]);
    let cells: Vec<(u32, u32)> = ds.iter().flat_map(|&d| ks.iter().map(move |&k| (d, k))).collect();
    if cells.is_empty() {
        return Err(Failure::Config("empty probe grid".into()));
    }
    let records = conjecture_probe(a.which, &cells, &bindings, exec)?;
    let candidates: Vec<Value> = records
        .iter()
        .filter(|r| !r.consistent)
        .map(|r| json!({ "d": r.report.d, "k": r.report.k }))
        .collect();
    let consistent = records.len() - candidates.len();
    let text = match format {
        Format::Pretty => {
            let mut out: String = records.iter().map(probe_line).collect();
            out.push_str(&format!(
                "{}: {consistent} of {} cells consistent, {} counterexample candidates\n",
                a.which,
                records.len(),
                candidates.len()
            ));
            out
        }
        _ => {
            let config = json!({
                "command": "conjecture",
                "which": a.which.tag(),
                "cells": cells.iter().map(|&(d, k)| json!([d, k])).collect::<Vec<_>>(),
                "bindings": a.bindings.to_json(),
                "format": format.name(),
            });
            let summary = json!({
                "conjecture": a.which.tag(),
                "cells": records.len(),
                "consistent": consistent,
                "counterexample_candidates": candidates,
            });
            emit_json(format, config, records.iter().map(ProbeRecord::to_json).collect(), summary)
                .expect("json format")
        }
    };
    Ok(Outcome::ok(text))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum SeriesMode {
    /// Coefficients of sum_n <n+k, k> x^n
    Gf,
    /// kernel(k+1) times the column series equals 1 (d = 1)
    Reciprocal,
    /// Numerator kernel(dk+1) times the column series
    Numerator,
}

#[derive(Args, Clone, Debug)]
pub struct SeriesArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Column index
    #[arg(long)]
    pub k: u32,
    /// Truncation order (number of coefficients)
    #[arg(long)]
    pub order: Option<usize>,
    #[arg(long, value_enum, default_value = "gf")]
    pub mode: SeriesMode,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

pub fn cmd_series(a: &SeriesArgs) -> CmdResult {
    let format = a.format.unwrap_or(Format::Pretty);
    check_format("series", format, &[Format::Pretty, Format::Json, Format::Jsonl])?;
    let family = a.family.build()?;
    let d = family.d();
    let order = match (a.order, a.mode) {
        (Some(0), _) => return Err(Failure::Config("order must be at least 1".into())),
        (Some(o), _) => o,
        (None, SeriesMode::Numerator) => default_order(d, a.k),
        (None, _) => 12,
    };
    let mut config = json!({ "command": "series" });
    config.as_object_mut().expect("object").extend(a.family.to_json().as_object().expect("object").clone());
    config["k"] = json!(a.k);
    config["order"] = json!(order);
    config["mode"] = json!(format!("{:?}", a.mode).to_ascii_lowercase());
    config["format"] = json!(format.name());

    let (records, summary, pretty, ok) = match a.mode {
        SeriesMode::Gf => {
            let series = column_gf(&family, a.k, order)?;
            let records: Vec<Value> = series
                .coeffs()
                .iter()
                .enumerate()
                .map(|(n, c)| json!({ "n": n, "coeff": poly_to_json(c) }))
                .collect();
            let pretty = format!("{} + O(x^{order})\n", series.to_poly_in_x());
            (records, json!({ "order": order }), pretty, true)
        }
        SeriesMode::Reciprocal => {
            let holds = reciprocal_check(&family, a.k, order)?;
            let h = kernel(&family, a.k + 1);
            let record = json!({ "k": a.k, "order": order, "kernel": h.to_string(), "holds": holds });
            let verdict = if holds { "holds" } else { "FAILS" };
            let pretty = format!("({h}) * sum_n <n+{k},{k}> x^n = 1 + O(x^{order}): {verdict}\n", k = a.k);
            (vec![record], json!({ "holds": holds }), pretty, holds)
        }
        SeriesMode::Numerator => {
            let report = narayana_extract(&family, a.k, order)?;
            let summary = json!({ "tail_zero": report.tail_zero, "degree_ok": report.degree_ok });
            let pretty = format!(
                "N(x) = {}\ndegree {} (expected {}), zero tail: {}, palindromic: {}, nonnegative: {}\n",
                report.numerator,
                report.degree.map_or("-".to_string(), |e| e.to_string()),
                report.expected_degree,
                report.tail_zero,
                report.palindromic,
                report.nonnegative
            );
            (vec![report.to_json()], summary, pretty, true)
        }
    };
    let text = match format {
        Format::Pretty => pretty,
        _ => emit_json(format, config, records, summary).expect("json format"),
    };
    Ok(Outcome { text, ok })
}

#[derive(Args, Clone, Debug)]
pub struct SsytArgs {
    /// Number of rows k, or a range
    #[arg(long)]
    pub k: Span,
    /// Row length d, or a range
    #[arg(long)]
    pub d: Span,
    /// Largest entry n, or a range
    #[arg(long)]
    pub n: Span,
    /// Enumeration limit on k*d
    #[arg(long)]
    pub max_cells: Option<u32>,
    /// Enumeration limit on n
    #[arg(long)]
    pub max_entry: Option<u32>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

/// Brute-force count, hook-content product and Hoggatt coefficient for each
/// `(n, d, k)`; exit 1 if any disagree.
pub fn cmd_ssyt(a: &SsytArgs, exec: Execution) -> CmdResult {
    let format = a.format.unwrap_or(Format::Jsonl);
    check_format("ssyt", format, &[Format::Jsonl, Format::Json, Format::Pretty])?;
    let defaults = EnumerationBudget::default();
    let budget = EnumerationBudget {
        max_cells: a.max_cells.unwrap_or(defaults.max_cells),
        max_entry: a.max_entry.unwrap_or(defaults.max_entry),
    };
    let mut records = Vec::new();
    let mut pretty = String::new();
    let mut disagree = 0usize;
    for n in a.n.iter() {
        for d in a.d.iter() {
            for k in a.k.iter() {
                let spec = TableauSpec::new(k, d, n)?;
                let count = count_ssyt(&spec, &budget, exec)?;
                let hook = hook_content_count(&spec)?;
                let coeff = hoggatt_coeff(n as i64, k as i64, d)?;
                let agree = count == hook && hook == coeff;
                disagree += usize::from(!agree);
                records.push(json!({
                    "n": n,
                    "d": d,
                    "k": k,
                    "count": int_json(&count),
                    "hook_content": int_json(&hook),
                    "hoggatt": int_json(&coeff),
                    "agree": agree,
                }));
                let rel = if agree { "=" } else { "!=" };
                pretty.push_str(&format!("n={n} d={d} k={k}: {count} {rel} {hook} {rel} {coeff}\n"));
            }
        }
    }
    let cells = records.len();
    let text = match format {
        Format::Pretty => pretty + &format!("{} of {cells} cells agree\n", cells - disagree),
        _ => {
            let config = json!({
                "command": "ssyt",
                "n": a.n.to_string(),
                "d": a.d.to_string(),
                "k": a.k.to_string(),
                "max_cells": budget.max_cells,
                "max_entry": budget.max_entry,
                "format": format.name(),
            });
            let summary = json!({ "cells": cells, "agree": cells - disagree, "disagree": disagree });
            emit_json(format, config, records, summary).expect("json format")
        }
    };
    Ok(Outcome { text, ok: disagree == 0 })
}
