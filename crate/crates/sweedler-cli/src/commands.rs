//! Argument types, command implementations, and text/JSON rendering.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use sweedler::builtin::{builtin, builtin_names, AlgebraPackage};
use sweedler::invariants::{
    default_bound, indicator_report, twisted_exponent, twisted_exponent_via_q, ExponentResult,
    IndicatorMethod, InvariantError,
};
use sweedler::io::{export_algebra, import_algebra, import_representation, IoError};
use sweedler::reps::{character, regular_representation, verify_representation, Representation};
use sweedler::structures::{
    format_elem, verify_automorphism, Elem, HopfAlgebra, HopfAutomorphism, StructureError,
    VerificationReport,
};
use sweedler::Matrix;

/// Exact invariants of finite-dimensional Hopf algebras: axiom verification,
/// twisted exponents, and twisted indicator tables.
#[derive(Parser)]
#[command(name = "sweedler", version)]
pub struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Search bound for exponent and order computations (default 2*r*dim^3)
    #[arg(long, global = true, value_name = "N")]
    pub bound: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

/// Output format for command results.
#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
pub enum Command {
    /// Check the Hopf-algebra axioms and automorphism properties
    Verify(VerifyArgs),
    /// Compute the twisted exponent of a module or of the whole algebra
    Exponent(ExponentArgs),
    /// Tabulate twisted indicator values with periodicity and ring footer
    Indicators(IndicatorsArgs),
    /// Render the bundled character, automorphism, and exponent tables
    Tables(TablesArgs),
    /// Write a bundled algebra to standard output in the file format
    Export(ExportArgs),
}

#[derive(Args)]
pub struct SourceArgs {
    /// Algebra file to load
    #[arg(value_name = "FILE")]
    pub file: Option<PathBuf>,
    /// Bundled algebra (h8, c2, c3, c4, c6, s3) instead of a file
    #[arg(long, value_name = "NAME", conflicts_with = "file")]
    pub builtin: Option<String>,
}

#[derive(Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub source: SourceArgs,
}

#[derive(Args)]
pub struct ExponentArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    /// Automorphism name
    #[arg(long, value_name = "NAME")]
    pub aut: String,
    /// Module: a bundled name, `trivial`, `regular`, or a representation file
    #[arg(long, value_name = "M")]
    pub module: Option<String>,
    /// def (power state machine), q (q-element order), or both (compared)
    #[arg(long, value_enum, default_value_t = ExponentMethodArg::Def)]
    pub method: ExponentMethodArg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExponentMethodArg {
    Def,
    Q,
    Both,
}

#[derive(Args)]
pub struct IndicatorsArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    /// Automorphism name
    #[arg(long, value_name = "NAME")]
    pub aut: String,
    /// Module: a bundled name, `trivial`, `regular`, or a representation file
    #[arg(long, value_name = "M")]
    pub module: String,
    /// Largest power to tabulate (default 4*d_tau, or 32 if unavailable)
    #[arg(long, value_name = "N")]
    pub m_max: Option<u64>,
    /// charsum, trace, or both (compared entry by entry)
    #[arg(long, value_enum, default_value_t = IndicatorMethodArg::Both)]
    pub method: IndicatorMethodArg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IndicatorMethodArg {
    Charsum,
    Trace,
    Both,
}

#[derive(Args)]
pub struct TablesArgs {
    /// Bundled algebra with printable tables (currently only h8)
    #[arg(long, value_name = "NAME")]
    pub builtin: String,
}

#[derive(Args)]
pub struct ExportArgs {
    /// Bundled algebra to emit (h8, c2, c3, c4, c6, s3)
    #[arg(long, value_name = "NAME")]
    pub builtin: String,
}

/// A command failure carrying its exit code: 1 check/agreement, 2 parse,
/// 3 bound exceeded, 4 usage.
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn check(message: impl Into<String>) -> Self {
        Failure { code: 1, message: message.into() }
    }

    fn parse(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }

    fn bound() -> Self {
        Failure { code: 3, message: "bound exceeded; exponent may be infinite".to_string() }
    }

    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 4, message: message.into() }
    }
}

fn invariant_failure(e: InvariantError) -> Failure {
    match e {
        InvariantError::ExponentBoundExceeded { .. } => Failure::bound(),
        InvariantError::Structure(StructureError::OrderBoundExceeded { .. }) => Failure::bound(),
        InvariantError::MethodDisagreement { m } => {
            Failure::check(format!("indicator formulas disagree at m = {m}"))
        }
        other => Failure::check(other.to_string()),
    }
}

fn structure_failure(e: StructureError) -> Failure {
    match e {
        StructureError::OrderBoundExceeded { .. } => Failure::bound(),
        other => Failure::check(other.to_string()),
    }
}

fn io_failure(e: IoError) -> Failure {
    Failure::parse(e.to_string())
}

// --- input resolution -----------------------------------------------------

enum Source {
    Builtin(Box<AlgebraPackage>),
    File { algebra: HopfAlgebra, autos: Vec<(String, Matrix)> },
}

impl Source {
    fn algebra(&self) -> &HopfAlgebra {
        match self {
            Source::Builtin(p) => &p.algebra,
            Source::File { algebra, .. } => algebra,
        }
    }

    fn automorphism_matrices(&self) -> Vec<(String, Matrix)> {
        match self {
            Source::Builtin(p) => p
                .automorphisms
                .iter()
                .map(|t| (t.name().to_string(), t.matrix().clone()))
                .collect(),
            Source::File { autos, .. } => autos.clone(),
        }
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::parse(format!("cannot read {}: {e}", path.display())))
}

fn load_source(args: &SourceArgs) -> Result<Source, Failure> {
    match (&args.file, &args.builtin) {
        (None, Some(name)) => builtin(name).map(|p| Source::Builtin(Box::new(p))).ok_or_else(|| {
            Failure::usage(format!(
                "unknown builtin '{name}' (available: {})",
                builtin_names().join(", ")
            ))
        }),
        (Some(path), None) => {
            let text = read_file(path)?;
            let imported = import_algebra(&text).map_err(io_failure)?;
            Ok(Source::File {
                algebra: imported.algebra,
                autos: imported.automorphism_matrices,
            })
        }
        (None, None) => Err(Failure::usage("provide an algebra file or --builtin NAME")),
        (Some(_), Some(_)) => unreachable!("clap rejects file together with --builtin"),
    }
}

/// Compute commands refuse a file whose axioms fail; `verify` reports details.
fn require_valid(source: &Source) -> Result<(), Failure> {
    if let Source::File { algebra, .. } = source {
        if let Some(check) = algebra.verify_axioms().first_failure() {
            return Err(Failure::check(format!(
                "algebra '{}' fails the {} check; run `verify` for details",
                algebra.name(),
                check.name
            )));
        }
    }
    Ok(())
}

fn resolve_automorphism(
    source: &Source,
    name: &str,
    order_bound: u64,
) -> Result<HopfAutomorphism, Failure> {
    match source {
        Source::Builtin(p) => p.automorphism(name).cloned().ok_or_else(|| {
            let names: Vec<&str> = p.automorphisms.iter().map(|t| t.name()).collect();
            Failure::usage(format!(
                "unknown automorphism '{name}' (available: {})",
                names.join(", ")
            ))
        }),
        Source::File { algebra, autos } => {
            let matrix = autos
                .iter()
                .find(|(n, _)| n == name)
                .map(|(_, m)| m.clone())
                .ok_or_else(|| {
                    let names: Vec<String> = autos.iter().map(|(n, _)| n.clone()).collect();
                    Failure::usage(format!(
                        "unknown automorphism '{name}' (available: {})",
                        if names.is_empty() { "none".to_string() } else { names.join(", ") }
                    ))
                })?;
            HopfAutomorphism::new(algebra, name.to_string(), matrix, order_bound)
                .map_err(structure_failure)
        }
    }
}

fn resolve_module(source: &Source, spec: &str) -> Result<Representation, Failure> {
    let h = source.algebra();
    if let Source::Builtin(p) = source {
        if let Some(rho) = p.module(spec) {
            return Ok(rho.clone());
        }
    }
    match spec {
        "regular" => Ok(regular_representation(h)),
        "trivial" => Ok(Representation::trivial(h)),
        _ => {
            let path = Path::new(spec);
            if path.is_file() {
                let text = read_file(path)?;
                let name = path
                    .file_stem()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_else(|| spec.to_string());
                let rho = import_representation(&text, h, &name).map_err(io_failure)?;
                if let Some(check) = verify_representation(h, &rho).first_failure() {
                    return Err(Failure::check(format!(
                        "module file '{spec}' fails the {} check",
                        check.name
                    )));
                }
                Ok(rho)
            } else {
                Err(Failure::usage(format!(
                    "unknown module '{spec}': not a bundled module, not trivial/regular, and not a file"
                )))
            }
        }
    }
}

// --- rendering helpers ----------------------------------------------------

/// Writes to stdout, exiting quietly if the reader has gone away (e.g. a
/// closed pipe); a panic would bury real output in a backtrace.
fn write_stdout(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if out.write_all(text.as_bytes()).is_err() || out.flush().is_err() {
        std::process::exit(0);
    }
}

fn emit(format: Format, text: String, json: Value) {
    match format {
        Format::Text => write_stdout(&format!("{text}\n")),
        Format::Json => write_stdout(&format!(
            "{}\n",
            serde_json::to_string_pretty(&json).expect("JSON values serialize")
        )),
    }
}

fn check_lines(report: &VerificationReport, h: &HopfAlgebra) -> Vec<String> {
    report
        .checks()
        .iter()
        .map(|c| {
            if c.passed {
                format!("PASS {}", c.name)
            } else {
                match &c.witness {
                    Some(w) if !w.is_empty() => {
                        let labels: Vec<&str> =
                            w.iter().map(|&i| h.basis_labels()[i].as_str()).collect();
                        format!("FAIL {} (witness: {})", c.name, labels.join(", "))
                    }
                    _ => format!("FAIL {}", c.name),
                }
            }
        })
        .collect()
}

fn checks_json(report: &VerificationReport) -> Vec<Value> {
    report
        .checks()
        .iter()
        .map(|c| json!({ "name": c.name, "passed": c.passed, "witness": c.witness }))
        .collect()
}

/// Aligned table: a corner label, column headers, labeled rows. Cells are
/// right-aligned when `numeric`, left-aligned otherwise.
fn table_lines(corner: &str, columns: &[String], rows: &[(String, Vec<String>)], numeric: bool) -> Vec<String> {
    let label_width = rows
        .iter()
        .map(|(l, _)| l.len())
        .chain(std::iter::once(corner.len()))
        .max()
        .unwrap_or(0);
    let widths: Vec<usize> = columns
        .iter()
        .enumerate()
        .map(|(j, c)| {
            rows.iter()
                .map(|(_, cells)| cells[j].len())
                .chain(std::iter::once(c.len()))
                .max()
                .unwrap_or(0)
        })
        .collect();
    let render = |label: &str, cells: &[String]| {
        let mut line = format!("{label:<label_width$}");
        for (cell, width) in cells.iter().zip(&widths) {
            line.push_str("  ");
            if numeric {
                line.push_str(&format!("{cell:>width$}"));
            } else {
                line.push_str(&format!("{cell:<width$}"));
            }
        }
        line.trim_end().to_string()
    };
    let mut lines = vec![render(corner, columns)];
    for (label, cells) in rows {
        lines.push(render(label, cells));
    }
    lines
}

fn ring_name(conductor: u64) -> String {
    if conductor == 1 {
        "Z".to_string()
    } else {
        format!("Z[zeta_{conductor}]")
    }
}

// --- commands -------------------------------------------------------------

fn cmd_verify(source: &Source, format: Format) -> Result<(), Failure> {
    let h = source.algebra();
    let axioms = h.verify_axioms();
    let auto_reports: Vec<(String, VerificationReport)> = source
        .automorphism_matrices()
        .iter()
        .map(|(name, m)| (name.clone(), verify_automorphism(h, m)))
        .collect();
    let all = axioms.all_passed() && auto_reports.iter().all(|(_, r)| r.all_passed());

    let mut lines = vec![format!("algebra {} (dim {})", h.name(), h.dim())];
    lines.extend(check_lines(&axioms, h));
    for (name, report) in &auto_reports {
        lines.push(format!("automorphism {name}"));
        lines.extend(check_lines(report, h));
    }
    lines.push(if all { "all checks passed".to_string() } else { "checks FAILED".to_string() });

    let json = json!({
        "algebra": h.name(),
        "dim": h.dim(),
        "axioms": checks_json(&axioms),
        "automorphisms": auto_reports
            .iter()
            .map(|(name, r)| json!({ "name": name, "checks": checks_json(r) }))
            .collect::<Vec<_>>(),
        "all_passed": all,
    });
    emit(format, lines.join("\n"), json);

    if all {
        Ok(())
    } else {
        let first = axioms
            .first_failure()
            .or_else(|| auto_reports.iter().find_map(|(_, r)| r.first_failure()))
            .expect("a failing check exists");
        Err(Failure::check(format!("check failed: {}", first.name)))
    }
}

fn cmd_exponent(args: &ExponentArgs, format: Format, global_bound: Option<u64>) -> Result<(), Failure> {
    let source = load_source(&args.source)?;
    require_valid(&source)?;
    let h = source.algebra();
    let order_bound = global_bound.unwrap_or_else(|| 2 * (h.dim() as u64).pow(3));
    let tau = resolve_automorphism(&source, &args.aut, order_bound)?;
    let bound = global_bound.unwrap_or_else(|| default_bound(h, &tau));
    let rho = match &args.module {
        Some(spec) => Some(resolve_module(&source, spec)?),
        None => None,
    };

    let mut results: Vec<(&str, ExponentResult)> = Vec::new();
    if matches!(args.method, ExponentMethodArg::Def | ExponentMethodArg::Both) {
        let r = twisted_exponent(h, &tau, rho.as_ref(), bound).map_err(invariant_failure)?;
        results.push(("definition", r));
    }
    if matches!(args.method, ExponentMethodArg::Q | ExponentMethodArg::Both) {
        let regular;
        let rho_q = match &rho {
            Some(r) => r,
            None => {
                regular = regular_representation(h);
                &regular
            }
        };
        let r = twisted_exponent_via_q(h, &tau, rho_q, bound).map_err(invariant_failure)?;
        results.push(("q-element", r));
    }
    let agree = results.windows(2).all(|w| w[0].1.value == w[1].1.value);

    let module_label = rho.as_ref().map(|r| r.name().to_string());
    let mut lines = vec![
        format!("algebra: {}", h.name()),
        format!("automorphism: {} (order {})", tau.name(), tau.order()),
        format!("module: {}", module_label.as_deref().unwrap_or("(whole algebra)")),
        format!("bound: {bound}"),
    ];
    match results.as_slice() {
        [(_, single)] => {
            lines.push(format!(
                "method: {}",
                if args.method == ExponentMethodArg::Q { "q-element" } else { "definition" }
            ));
            lines.push(format!("exponent: {}", single.value));
            lines.push(format!("d_tau: {}", single.d_tau));
        }
        pair => {
            for (label, r) in pair {
                lines.push(format!("exponent ({label}): {}", r.value));
            }
            lines.push(if agree { "methods agree".to_string() } else { "methods DISAGREE".to_string() });
            lines.push(format!("d_tau: {}", pair[0].1.d_tau));
        }
    }

    let json = json!({
        "algebra": h.name(),
        "automorphism": tau.name(),
        "order": tau.order(),
        "module": module_label,
        "bound": bound,
        "results": results
            .iter()
            .map(|(label, r)| json!({ "method": label, "exponent": r.value, "d_tau": r.d_tau }))
            .collect::<Vec<_>>(),
        "agree": agree,
    });
    emit(format, lines.join("\n"), json);

    if agree {
        Ok(())
    } else {
        Err(Failure::check(format!(
            "exponent methods disagree: definition gives {}, q-element gives {}",
            results[0].1.value, results[1].1.value
        )))
    }
}

fn cmd_indicators(
    args: &IndicatorsArgs,
    format: Format,
    global_bound: Option<u64>,
) -> Result<(), Failure> {
    let source = load_source(&args.source)?;
    require_valid(&source)?;
    let h = source.algebra();
    let order_bound = global_bound.unwrap_or_else(|| 2 * (h.dim() as u64).pow(3));
    let tau = resolve_automorphism(&source, &args.aut, order_bound)?;
    let bound = global_bound.unwrap_or_else(|| default_bound(h, &tau));
    let rho = resolve_module(&source, &args.module)?;
    let m_max = args.m_max.unwrap_or_else(|| {
        twisted_exponent(h, &tau, Some(&rho), bound).map(|r| 4 * r.d_tau).unwrap_or(32)
    });
    let method = match args.method {
        IndicatorMethodArg::Charsum => IndicatorMethod::CharSum,
        IndicatorMethodArg::Trace => IndicatorMethod::Trace,
        IndicatorMethodArg::Both => IndicatorMethod::Both,
    };
    let report =
        indicator_report(h, &tau, &rho, m_max, method, bound).map_err(invariant_failure)?;

    let method_label = match args.method {
        IndicatorMethodArg::Charsum => "charsum",
        IndicatorMethodArg::Trace => "trace",
        IndicatorMethodArg::Both => "both",
    };
    let mut lines = vec![
        format!("algebra: {}", h.name()),
        format!("automorphism: {} (order {})", report.automorphism, report.r),
        format!("module: {}", report.module),
        format!("method: {method_label}"),
        format!("m_max: {m_max}"),
        String::new(),
    ];
    let m_width = report
        .entries
        .iter()
        .map(|e| e.m.to_string().len())
        .max()
        .unwrap_or(1)
        .max(1);
    lines.push(format!("{:>m_width$}  value", "m"));
    for entry in &report.entries {
        lines.push(format!("{:>m_width$}  {}", entry.m, entry.value.format()));
    }
    lines.push(String::new());
    lines.push(format!("period: {}", report.period));
    lines.push(format!("ring: {}", ring_name(report.ring_conductor)));
    lines.push(format!(
        "rational integers only: {}",
        if report.all_rational_integers { "yes" } else { "no" }
    ));

    let json = json!({
        "algebra": h.name(),
        "automorphism": report.automorphism,
        "order": report.r,
        "module": report.module,
        "method": method_label,
        "m_max": m_max,
        "bound": bound,
        "entries": report
            .entries
            .iter()
            .map(|e| json!({ "m": e.m, "value": e.value.format() }))
            .collect::<Vec<_>>(),
        "period": report.period,
        "ring_conductor": report.ring_conductor,
        "all_rational_integers": report.all_rational_integers,
    });
    emit(format, lines.join("\n"), json);
    Ok(())
}

fn cmd_tables(args: &TablesArgs, format: Format, global_bound: Option<u64>) -> Result<(), Failure> {
    let package = builtin(&args.builtin).ok_or_else(|| {
        Failure::usage(format!(
            "unknown builtin '{}' (available: {})",
            args.builtin,
            builtin_names().join(", ")
        ))
    })?;
    if args.builtin != "h8" {
        return Err(Failure::usage("tables are bundled only for the 'h8' builtin"));
    }
    let h = &package.algebra;
    let labels = h.basis_labels();

    // Characters of the bundled modules, one row per module.
    let char_rows: Vec<(String, Vec<String>)> = package
        .modules
        .iter()
        .enumerate()
        .map(|(i, rho)| {
            let chi = character(h, rho);
            (format!("chi_{}", i + 1), chi.values().iter().map(|v| v.format()).collect())
        })
        .collect();

    // Automorphism images of the generators.
    let generators: Vec<usize> = ["x", "y", "z"]
        .iter()
        .map(|g| labels.iter().position(|l| l == g).expect("generator label present"))
        .collect();
    let auto_rows: Vec<(String, Vec<String>)> = package
        .automorphisms
        .iter()
        .map(|tau| {
            let images = generators
                .iter()
                .map(|&g| format_elem(&Elem::from_coords(tau.matrix().column(g)), labels))
                .collect();
            (tau.name().to_string(), images)
        })
        .collect();

    // Twisted exponents: modules columns, then the whole algebra.
    let mut exp_columns: Vec<String> = package.modules.iter().map(|m| m.name().to_string()).collect();
    exp_columns.push(h.name().to_string());
    let mut exp_rows: Vec<(String, Vec<u64>)> = Vec::new();
    for tau in &package.automorphisms {
        let bound = global_bound.unwrap_or_else(|| default_bound(h, tau));
        let mut row = Vec::new();
        for rho in &package.modules {
            let r = twisted_exponent(h, tau, Some(rho), bound).map_err(invariant_failure)?;
            row.push(r.value);
        }
        let r = twisted_exponent(h, tau, None, bound).map_err(invariant_failure)?;
        row.push(r.value);
        exp_rows.push((tau.name().to_string(), row));
    }

    let mut lines = vec!["character table".to_string()];
    lines.extend(table_lines("", &labels.to_vec(), &char_rows, true));
    lines.push(String::new());
    lines.push("automorphism table".to_string());
    let gen_headers: Vec<String> = generators.iter().map(|&g| labels[g].clone()).collect();
    lines.extend(table_lines("", &gen_headers, &auto_rows, false));
    lines.push(String::new());
    lines.push("twisted exponent table".to_string());
    let exp_rows_text: Vec<(String, Vec<String>)> = exp_rows
        .iter()
        .map(|(name, row)| (name.clone(), row.iter().map(u64::to_string).collect()))
        .collect();
    lines.extend(table_lines("", &exp_columns, &exp_rows_text, true));

    let json = json!({
        "algebra": h.name(),
        "characters": {
            "basis": labels,
            "rows": char_rows
                .iter()
                .map(|(name, cells)| json!({ "name": name, "values": cells }))
                .collect::<Vec<_>>(),
        },
        "automorphisms": {
            "generators": gen_headers,
            "rows": auto_rows
                .iter()
                .map(|(name, cells)| json!({ "name": name, "images": cells }))
                .collect::<Vec<_>>(),
        },
        "exponents": {
            "columns": exp_columns,
            "rows": exp_rows
                .iter()
                .map(|(name, row)| json!({ "name": name, "values": row }))
                .collect::<Vec<_>>(),
        },
    });
    emit(format, lines.join("\n"), json);
    Ok(())
}

fn cmd_export(args: &ExportArgs) -> Result<(), Failure> {
    let package = builtin(&args.builtin).ok_or_else(|| {
        Failure::usage(format!(
            "unknown builtin '{}' (available: {})",
            args.builtin,
            builtin_names().join(", ")
        ))
    })?;
    let autos: Vec<(String, Matrix)> = package
        .automorphisms
        .iter()
        .map(|t| (t.name().to_string(), t.matrix().clone()))
        .collect();
    write_stdout(&export_algebra(&package.algebra, &autos));
    Ok(())
}

/// Dispatches a parsed command line.
pub fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Verify(args) => {
            let source = load_source(&args.source)?;
            cmd_verify(&source, cli.format)
        }
        Command::Exponent(args) => cmd_exponent(args, cli.format, cli.bound),
        Command::Indicators(args) => cmd_indicators(args, cli.format, cli.bound),
        Command::Tables(args) => cmd_tables(args, cli.format, cli.bound),
        Command::Export(args) => cmd_export(args),
    }
}
