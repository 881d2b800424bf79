//! The `pats` command line: argument grammar, dispatch and the individual
//! subcommands. Every command builds a [`Report`]; the format flag picks the
//! rendering.

pub mod artifacts;
pub mod report;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use pats_core::exactla::{Field, Modulus, DEFAULT_PRIME};
use pats_core::identities::{
    build_expansion_matrix, builtin_identity, expand_pats, identities_from_matrix, is_identity, nonlinear_identity,
    parse_vars, IdentityRecord, TernaryPolynomial,
};
use pats_core::repanalysis::{build_x_lambda, rank_row, rank_table, RankRow, RankTable};
use pats_core::symgroup::{clifton_raw, partitions_of, rep_matrix, standard_tableaux, Partition, Permutation};
use pats_core::ternary::{countsymmetry, enumerate_monomials, generate_types, straighten_at, Level, Monomial};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

pub use report::{Format, Report, RunManifest, Table};

/// Exit status: usage errors are 1, failed verifications are 2.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Mismatch(String),
}

impl From<pats_core::Error> for Failure {
    fn from(e: pats_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl Failure {
    pub fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Mismatch(_) => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "pats", version, about = "Polynomial identities of the partially alternating ternary sum")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Prime modulus for rank computations, or `Q` for exact rationals where
    /// supported. Defaults to 101.
    #[arg(long, global = true)]
    pub modulus: Option<String>,
    /// Worker threads.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Write a run manifest (parameters, timing, digest) to this file.
    #[arg(long, global = true)]
    pub manifest: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LevelArg {
    Free,
    P,
    Pq,
}

impl From<LevelArg> for Level {
    fn from(l: LevelArg) -> Level {
        match l {
            LevelArg::Free => Level::Free,
            LevelArg::P => Level::P,
            LevelArg::Pq => Level::PQ,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
pub enum Artifact {
    #[value(name = "table1")]
    #[serde(rename = "table1")]
    Table1,
    #[value(name = "table2")]
    #[serde(rename = "table2")]
    Table2,
    #[value(name = "table4")]
    #[serde(rename = "table4")]
    Table4,
    #[value(name = "thm6.4")]
    #[serde(rename = "thm6.4")]
    Thm64,
    #[value(name = "thm7.6")]
    #[serde(rename = "thm7.6")]
    Thm76,
    #[value(name = "thm7.7")]
    #[serde(rename = "thm7.7")]
    Thm77,
    #[value(name = "thm7.8")]
    #[serde(rename = "thm7.8")]
    Thm78,
    #[value(name = "degree9")]
    #[serde(rename = "degree9")]
    Degree9,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    /// Completely and partially alternating association types.
    Types {
        #[arg(long)]
        degree: usize,
    },
    /// Normal-form monomials in the order used for expansion matrix columns.
    Monomials {
        #[arg(long)]
        degree: Option<usize>,
        /// Variable multiset such as `aaabcde`; defaults to distinct letters.
        #[arg(long)]
        vars: Option<String>,
        /// Straightening level; defaults to the identities known below the degree.
        #[arg(long, value_enum)]
        level: Option<LevelArg>,
    },
    /// Normal form of a ternary monomial, e.g. `(a,c,b)`.
    Straighten {
        monomial: String,
        #[arg(long, value_enum, default_value_t = LevelArg::Pq)]
        level: LevelArg,
    },
    /// Dialgebra expansion of a ternary monomial.
    Expand { monomial: String },
    /// Canonical basis of the identities in one degree, or a named identity.
    Identities {
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long)]
        vars: Option<String>,
        /// P, Q, R, S, or one of the printed nonlinear identities
        /// (31111, 22111-1, 22111-2, 211111-1 .. 211111-5).
        #[arg(long, conflicts_with_all = ["degree", "vars"])]
        named: Option<String>,
    },
    /// Per-partition rank table.
    Ranks {
        #[arg(long)]
        degree: usize,
        /// Restrict to these partitions (repeatable).
        #[arg(long)]
        partition: Vec<String>,
        /// Also dump X_λ for every selected partition.
        #[arg(long)]
        emit_matrix: bool,
    },
    /// Degree 9 ranks including lifted consequences, one job per partition.
    Degree9 {
        #[arg(long)]
        partition: Vec<String>,
        /// Directory of per-partition result files; existing files are reused.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Clifton matrix or representation matrix of a permutation.
    Clifton {
        #[arg(long)]
        partition: String,
        /// One-based images, e.g. `213`.
        #[arg(long)]
        perm: String,
        /// Print R_π instead of ρ(π) = R_id⁻¹ R_π.
        #[arg(long)]
        raw: bool,
    },
    /// Standard tableaux of a partition in the fixed order.
    Tableaux {
        #[arg(long)]
        partition: String,
    },
    /// Recompute a published artifact and compare with the bundled golden file.
    Reproduce {
        #[arg(value_enum)]
        artifact: Artifact,
        /// For degree9: compare only these partitions.
        #[arg(long)]
        partition: Vec<String>,
        /// Write the computed artifact as a golden file instead of comparing.
        #[arg(long, hide = true)]
        bless: Option<PathBuf>,
    },
}

impl Command {
    fn name(&self) -> String {
        match serde_json::to_value(self).expect("json") {
            Value::Object(m) => m.keys().next().cloned().unwrap_or_default(),
            Value::String(s) => s,
            _ => String::new(),
        }
    }
}

/// Parse `argv` (including the program name), run, and write the output.
/// Returns the process exit code.
pub fn dispatch<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            let _ = write!(out, "{}", e.render());
            return 0;
        }
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return 1;
        }
    };
    let start = Instant::now();
    let result = match cli.jobs {
        Some(k) => match rayon::ThreadPoolBuilder::new().num_threads(k.max(1)).build() {
            Ok(pool) => pool.install(|| run(&cli)),
            Err(e) => Err(Failure::Usage(e.to_string()).into()),
        },
        None => run(&cli),
    };
    let (report, failure) = match result {
        Ok(r) => (Some(r), None),
        Err(Outcome::Failed(f)) => (None, Some(f)),
        Err(Outcome::Reported(r, f)) => (Some(r), Some(f)),
    };
    if let Some(report) = &report {
        match report.render(cli.format) {
            Ok(s) => {
                let _ = out.write_all(s.as_bytes());
            }
            Err(f) => return finish(f, err),
        }
        if let Some(path) = &cli.manifest {
            let manifest = manifest_for(&cli, report, start.elapsed().as_secs_f64());
            let text = serde_json::to_string_pretty(&manifest).expect("json") + "\n";
            if let Err(e) = std::fs::write(path, text) {
                return finish(Failure::Usage(format!("writing {}: {e}", path.display())), err);
            }
        }
    }
    match failure {
        Some(f) => finish(f, err),
        None => 0,
    }
}

fn finish(f: Failure, err: &mut dyn Write) -> i32 {
    let (label, msg) = match &f {
        Failure::Usage(m) => ("error", m),
        Failure::Mismatch(m) => ("mismatch", m),
    };
    let _ = writeln!(err, "{label}: {msg}");
    f.code()
}

pub fn manifest_for(cli: &Cli, report: &Report, secs: f64) -> RunManifest {
    let mut parameters = BTreeMap::new();
    if let Value::Object(m) = serde_json::to_value(&cli.command).expect("json") {
        if let Some(Value::Object(inner)) = m.into_values().next() {
            parameters.extend(inner);
        }
    }
    parameters.insert("modulus".into(), json!(cli.modulus.clone().unwrap_or_else(|| DEFAULT_PRIME.to_string())));
    RunManifest {
        command: cli.command.name(),
        parameters,
        wall_time_secs: secs,
        digest: report.digest(),
        version: env!("CARGO_PKG_VERSION").to_string(),
    }
}

/// A failure that still has output to show (verification mismatches).
pub enum Outcome {
    Failed(Failure),
    Reported(Report, Failure),
}

impl<E: Into<Failure>> From<E> for Outcome {
    fn from(e: E) -> Self {
        Outcome::Failed(e.into())
    }
}

type Run = std::result::Result<Report, Outcome>;

pub fn run(cli: &Cli) -> Run {
    match &cli.command {
        Command::Types { degree } => Ok(types(*degree)?),
        Command::Monomials { degree, vars, level } => Ok(monomials(*degree, vars.as_deref(), *level)?),
        Command::Straighten { monomial, level } => Ok(straighten(monomial, *level)?),
        Command::Expand { monomial } => Ok(expand(monomial)?),
        Command::Identities { named: Some(name), .. } => named_identity(name),
        Command::Identities { degree, vars, .. } => {
            Ok(identities(*degree, vars.as_deref(), field(cli.modulus.as_deref())?)?)
        }
        Command::Ranks {
            degree,
            partition,
            emit_matrix,
        } => Ok(ranks(*degree, &partitions(partition)?, prime(cli.modulus.as_deref())?, *emit_matrix)?),
        Command::Degree9 { partition, out_dir } => {
            degree9(&partitions(partition)?, prime(cli.modulus.as_deref())?, out_dir.as_deref())
        }
        Command::Clifton { partition, perm, raw } => Ok(clifton(partition, perm, *raw)?),
        Command::Tableaux { partition } => Ok(tableaux(partition)?),
        Command::Reproduce {
            artifact,
            partition,
            bless,
        } => artifacts::reproduce(*artifact, &partitions(partition)?, bless.as_deref()),
    }
}

pub fn field(s: Option<&str>) -> Result<Field, Failure> {
    match s {
        None => Ok(Field::Prime(DEFAULT_PRIME)),
        Some(s) => Ok(s.parse::<Field>()?),
    }
}

fn field_name(f: Field) -> String {
    match f {
        Field::Rational => "Q".into(),
        Field::Prime(p) => format!("F_{p}"),
    }
}

pub fn prime(s: Option<&str>) -> Result<Modulus, Failure> {
    match field(s)? {
        Field::Prime(p) => Ok(Modulus::new(p)?),
        Field::Rational => Err(Failure::Usage("rank tables are computed modulo a prime".into())),
    }
}

fn partitions(v: &[String]) -> Result<Vec<Partition>, Failure> {
    v.iter().map(|s| Ok(s.parse::<Partition>()?)).collect()
}

fn monomial(s: &str) -> Result<Monomial, Failure> {
    s.parse::<Monomial>()
        .map_err(|e| Failure::Usage(format!("malformed monomial {s:?}: {e}")))
}

fn level_name(l: Level) -> &'static str {
    match l {
        Level::Free => "free",
        Level::P => "P",
        Level::PQ => "PQ",
    }
}

pub fn types(n: usize) -> Result<Report, Failure> {
    let lists = generate_types(n)?;
    let nfact: u64 = (1..=n as u64).product();
    let mut t = Table::new(&["kind", "index", "type", "symmetry", "monomials"]);
    for (kind, list) in [("CA", &lists.ca), ("PA", &lists.pa)] {
        for (k, ty) in list.iter().enumerate() {
            let d = countsymmetry(ty);
            t.push(vec![json!(kind), json!(k + 1), json!(ty.to_string()), json!(d), json!(nfact / d)]);
        }
    }
    let meta = json!({"command": "types", "degree": n, "ca": lists.ca.len(), "pa": lists.pa.len()});
    Report::tabular(meta, &t, None)
}

pub fn monomials(degree: Option<usize>, vars: Option<&str>, level: Option<LevelArg>) -> Result<Report, Failure> {
    let vars = resolve_vars(degree, vars)?;
    let n = vars.len();
    let level = level.map(Level::from).unwrap_or(Level::for_discovery(n));
    let list = enumerate_monomials(n, &vars, level)?;
    let mut t = Table::new(&["index", "type", "monomial"]);
    for (k, (ty, m)) in list.iter().enumerate() {
        t.push(vec![json!(k + 1), json!(ty + 1), json!(m.to_string())]);
    }
    let meta = json!({"command": "monomials", "degree": n, "vars": letters(&vars), "level": level_name(level), "count": list.len()});
    Report::tabular(meta, &t, None)
}

fn resolve_vars(degree: Option<usize>, vars: Option<&str>) -> Result<Vec<u8>, Failure> {
    match (degree, vars) {
        (_, Some(v)) => {
            let vars = parse_vars(v)?;
            if let Some(n) = degree {
                if n != vars.len() {
                    return Err(Failure::Usage(format!("--vars {v} has {} letters, not {n}", vars.len())));
                }
            }
            Ok(vars)
        }
        (Some(n), None) => Ok((0..n as u8).collect()),
        (None, None) => Err(Failure::Usage("give --degree or --vars".into())),
    }
}

fn letters(v: &[u8]) -> String {
    v.iter().map(|&l| pats_core::dialgebra::letter_char(l)).collect()
}

pub fn straighten(s: &str, level: LevelArg) -> Result<Report, Failure> {
    let m = monomial(s)?;
    let r = straighten_at(level.into(), &m);
    let (sign, normal) = match &r {
        pats_core::ternary::SignedMonomial::Zero => (0, Value::Null),
        pats_core::ternary::SignedMonomial::Term(s, x) => (*s, json!(x.to_string())),
    };
    let json = json!({
        "command": "straighten",
        "input": m.to_string(),
        "level": level_name(level.into()),
        "sign": sign,
        "normal_form": normal,
        "result": r.to_string(),
    });
    Ok(Report::plain(json, r.to_string()))
}

pub fn expand(s: &str) -> Result<Report, Failure> {
    let m = monomial(s)?;
    let p = expand_pats(&m);
    let mut t = Table::new(&["word", "coefficient"]);
    for (w, c) in p.terms() {
        t.push(vec![json!(w.to_string()), json!(c.to_string().parse::<i64>().unwrap_or(0))]);
    }
    let meta = json!({"command": "expand", "monomial": m.to_string(), "terms": p.len(), "expansion": p.to_string()});
    let mut r = Report::tabular(meta, &t, None)?;
    r.text = p.to_string();
    Ok(r)
}

/// One JSON record per identity; `polynomial` parses back with serde.
pub fn identity_rows(records: &[IdentityRecord]) -> Table {
    let mut t = Table::new(&["index", "terms", "types", "coefficients", "identity"]);
    for (k, r) in records.iter().enumerate() {
        let types: Vec<String> = r.types.iter().map(|x| x.to_string()).collect();
        t.push(vec![
            json!(k + 1),
            json!(r.term_count),
            json!(types.join(" ")),
            json!(r.coefficients.join(" ")),
            json!(r.polynomial.to_string()),
        ]);
    }
    t
}

fn attach_polynomials(report: &mut Report, polys: &[&TernaryPolynomial]) {
    if let Value::Array(rows) = &mut report.json["rows"] {
        for (row, p) in rows.iter_mut().zip(polys) {
            row["polynomial"] = serde_json::to_value(p).expect("json");
        }
    }
}

pub fn identities(degree: Option<usize>, vars: Option<&str>, f: Field) -> Result<Report, Failure> {
    let vars = resolve_vars(degree, vars)?;
    let e = build_expansion_matrix(&vars)?;
    let records = identities_from_matrix(&e, f)?;
    let t = identity_rows(&records);
    let meta = json!({
        "command": "identities",
        "degree": vars.len(),
        "vars": letters(&vars),
        "field": field_name(f),
        "rows_of_matrix": e.nrows(),
        "monomials": e.ncols(),
        "rank": e.ncols() - records.len(),
        "nullity": records.len(),
    });
    let heading = format!(
        "degree {} vars {}: {}x{} expansion matrix over {}, rank {}, nullity {}",
        vars.len(),
        letters(&vars),
        e.nrows(),
        e.ncols(),
        field_name(f),
        e.ncols() - records.len(),
        records.len()
    );
    let mut r = Report::tabular(meta, &t, Some(heading))?;
    attach_polynomials(&mut r, &records.iter().map(|x| &x.polynomial).collect::<Vec<_>>());
    Ok(r)
}

fn named_identity(name: &str) -> Run {
    let p = match builtin_identity(name) {
        Ok(p) => p,
        Err(_) => nonlinear_identity(name)?,
    };
    let record = IdentityRecord::new(p.clone());
    let ok = is_identity(&p);
    let t = identity_rows(std::slice::from_ref(&record));
    let meta = json!({"command": "identities", "named": name, "is_identity": ok, "degree": p.degree()});
    let heading = format!("{name}: {} terms, identity: {}", record.term_count, if ok { "yes" } else { "no" });
    let mut r = Report::tabular(meta, &t, Some(heading))?;
    attach_polynomials(&mut r, &[&p]);
    if ok {
        Ok(r)
    } else {
        Err(Outcome::Reported(r, Failure::Mismatch(format!("{name} does not vanish"))))
    }
}

pub fn rank_rows(table: &RankTable) -> Table {
    let lifted = table.rows.iter().any(|r| r.symlifrank.is_some());
    let mut cols = vec!["partition", "dimension", "symrank"];
    if lifted {
        cols.push("symlifrank");
    }
    cols.extend(["exprank", "newrank"]);
    let mut t = Table::new(&cols);
    for r in &table.rows {
        let mut row = vec![json!(r.partition.to_string()), json!(r.dimension), json!(r.symrank)];
        if lifted {
            row.push(json!(r.symlifrank));
        }
        row.extend([json!(r.exprank), json!(r.newrank)]);
        t.push(row);
    }
    t
}

fn rank_meta(table: &RankTable) -> Value {
    json!({
        "degree": table.degree,
        "modulus": table.modulus,
        "checksum": table.checksum(),
    })
}

pub fn ranks(n: usize, only: &[Partition], m: Modulus, emit: bool) -> Result<Report, Failure> {
    let sel = (!only.is_empty()).then_some(only);
    let table = rank_table(n, m, sel)?;
    let mut meta = rank_meta(&table);
    meta["command"] = json!("ranks");
    let heading = format!("degree {n} mod {}: checksum {}", table.modulus, table.checksum());
    let mut r = Report::tabular(meta, &rank_rows(&table), Some(heading))?;
    if emit {
        let mut mats = Vec::new();
        for row in &table.rows {
            let x = build_x_lambda(&row.partition, Modulus::for_degree(m.value(), n)?)?;
            let rows = x.lifted_rows();
            r.text += &format!("\nX[{}] {}x{}\n", row.partition, x.nrows(), x.ncols());
            for line in &rows {
                let s: Vec<String> = line.iter().map(|v| if *v == 0 { ".".into() } else { v.to_string() }).collect();
                r.text += &s.join(" ");
                r.text.push('\n');
            }
            mats.push(json!({"partition": row.partition.to_string(), "rows": x.nrows(), "cols": x.ncols(), "entries": rows}));
        }
        r.json["matrices"] = Value::Array(mats);
        r.csv = None;
    }
    Ok(r)
}

#[derive(Debug, Serialize, serde::Deserialize)]
struct PartitionFile {
    version: u32,
    modulus: u32,
    row: RankRow,
}

fn load_row(path: &Path, m: Modulus, lambda: &Partition) -> Option<RankRow> {
    let text = std::fs::read_to_string(path).ok()?;
    let f: PartitionFile = serde_json::from_str(&text).ok()?;
    (f.version == 1 && f.modulus == m.value() && &f.row.partition == lambda && f.row.symlifrank.is_some())
        .then_some(f.row)
}

/// Degree 9 rows, reusing and writing per-partition files under `dir`.
pub fn degree9_rows(only: &[Partition], m: Modulus, dir: Option<&Path>) -> Result<RankTable, Failure> {
    let all = partitions_of(9);
    if let Some(bad) = only.iter().find(|p| p.n() != 9) {
        return Err(Failure::Usage(format!("{bad} is not a partition of 9")));
    }
    let chosen: Vec<Partition> = all.into_iter().filter(|p| only.is_empty() || only.contains(p)).collect();
    if let Some(d) = dir {
        std::fs::create_dir_all(d)?;
    }
    let file = |p: &Partition| dir.map(|d| d.join(format!("partition-{p}.json")));
    let rows = chosen
        .par_iter()
        .map(|p| -> Result<RankRow, Failure> {
            if let Some(path) = file(p) {
                if let Some(row) = load_row(&path, m, p) {
                    return Ok(row);
                }
            }
            let row = rank_row(p, m, true)?;
            if let Some(path) = file(p) {
                let body = PartitionFile {
                    version: 1,
                    modulus: m.value(),
                    row: row.clone(),
                };
                std::fs::write(path, serde_json::to_string_pretty(&body).expect("json") + "\n")?;
            }
            Ok(row)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RankTable {
        degree: 9,
        modulus: m.value(),
        rows,
    })
}

/// Partitions where the lifted consequences do not account for every
/// identity, or where the rank sandwich fails.
pub fn degree9_failures(t: &RankTable) -> Vec<String> {
    t.rows
        .iter()
        .filter_map(|r| {
            let lif = r.symlifrank?;
            let ok = r.symrank <= lif && lif == r.exprank;
            (!ok).then(|| format!("{}: symrank {} symlifrank {lif} exprank {}", r.partition, r.symrank, r.exprank))
        })
        .collect()
}

pub fn degree9_report(t: &RankTable, command: &str) -> Result<Report, Failure> {
    let failures = degree9_failures(t);
    let mut meta = rank_meta(t);
    meta["command"] = json!(command);
    meta["no_new_identities"] = json!(failures.is_empty());
    meta["note"] = json!("per-partition values are computed here and were not published before");
    let heading = format!(
        "degree 9 mod {}: {} partitions, symlifrank = exprank in {} (computed values)",
        t.modulus,
        t.rows.len(),
        t.rows.len() - failures.len()
    );
    Report::tabular(meta, &rank_rows(t), Some(heading))
}

fn degree9(only: &[Partition], m: Modulus, dir: Option<&Path>) -> Run {
    let t = degree9_rows(only, m, dir)?;
    let r = degree9_report(&t, "degree9")?;
    let failures = degree9_failures(&t);
    if failures.is_empty() {
        Ok(r)
    } else {
        Err(Outcome::Reported(r, Failure::Mismatch(failures.join("; "))))
    }
}

pub fn clifton(partition: &str, perm: &str, raw: bool) -> Result<Report, Failure> {
    let lambda: Partition = partition.parse()?;
    let pi: Permutation = perm.parse()?;
    let mat = if raw { clifton_raw(&lambda, &pi)? } else { rep_matrix(&lambda, &pi)? };
    let rows: Vec<Vec<String>> = (0..mat.nrows())
        .map(|i| mat.row(i).iter().map(|x| x.to_string()).collect())
        .collect();
    let width = rows.iter().flatten().map(|s| s.len()).max().unwrap_or(1);
    let text: String = rows
        .iter()
        .map(|r| r.iter().map(|s| format!("{s:>width$}")).collect::<Vec<_>>().join(" ") + "\n")
        .collect();
    let t = Table {
        columns: (1..=mat.ncols()).map(|j| format!("c{j}")).collect(),
        rows: rows.iter().map(|r| r.iter().map(|s| json!(s)).collect()).collect(),
    };
    let json = json!({
        "command": "clifton",
        "partition": lambda.to_string(),
        "permutation": pi.to_string(),
        "matrix": if raw { "clifton" } else { "representation" },
        "dimension": mat.nrows(),
        "is_zero": mat.is_zero(),
        "entries": rows,
    });
    Ok(Report {
        json,
        text,
        csv: Some(t.to_csv()?),
    })
}

pub fn tableaux(partition: &str) -> Result<Report, Failure> {
    let lambda: Partition = partition.parse()?;
    let ts = standard_tableaux(&lambda);
    let mut t = Table::new(&["index", "tableau"]);
    for (k, x) in ts.iter().enumerate() {
        t.push(vec![json!(k + 1), json!(x.to_string())]);
    }
    let meta = json!({"command": "tableaux", "partition": lambda.to_string(), "dimension": lambda.dimension()});
    let mut r = Report::tabular(meta, &t, None)?;
    if let Value::Array(rows) = &mut r.json["rows"] {
        for (row, x) in rows.iter_mut().zip(&ts) {
            row["rows"] = json!(x.one_based_rows());
        }
    }
    Ok(r)
}
