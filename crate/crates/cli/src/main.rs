//! `pezzo` command-line front end.

mod render;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use pezzo::anticanon::{builtin_tables, dual_graph, enumerate_anticanonical, special_configs, table_rows, Stratum};
use pezzo::lct::{config_lct, format_ratio, surface_lct, Mode};
use pezzo::surface::{validate_model, Catalog, CatalogEntry, SurfaceError, SurfaceModel};
use pezzo::verify::{table, verify_all};
use serde_json::{json, Value};

use render::{csv_document, text_table};

#[derive(Parser)]
#[command(name = "pezzo", version, about = "Anticanonical divisors and first log canonical thresholds of del Pezzo surfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write output to a file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Csv,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// List catalog entries.
    Catalog {
        #[arg(long)]
        degree: Option<u32>,
    },
    /// Curves, classes and validation of one surface.
    Show {
        #[arg(long)]
        surface: String,
    },
    /// Anticanonical configurations of one surface with their thresholds.
    Enumerate {
        #[arg(long)]
        surface: String,
        #[arg(long, default_value = "default-snc")]
        mode: String,
    },
    /// First log canonical threshold of one surface.
    Lct {
        #[arg(long)]
        surface: String,
        #[arg(long, default_value = "default-snc")]
        mode: String,
    },
    /// Expected against computed thresholds for every catalog entry of a degree.
    Table {
        #[arg(long)]
        degree: u32,
    },
    /// Dual graphs generated from the degree-one seeds of a stratum.
    Propagate {
        #[arg(long)]
        stratum: String,
        #[arg(long)]
        degree: Option<u32>,
    },
    /// Export enumerated configurations (CSV rows, JSON or DOT graphs).
    Export {
        #[arg(long)]
        surface: Option<String>,
        #[arg(long)]
        degree: Option<u32>,
    },
    /// Run every acceptance check; exits 1 on any mismatch.
    Verify,
}

enum Failure {
    UnknownId(String),
    Invalid(String),
    Usage(String),
    Io(io::Error),
    Mismatch(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Mismatch(_) => 1,
            Failure::UnknownId(_) | Failure::Usage(_) => 2,
            Failure::Invalid(_) => 3,
            Failure::Io(_) => 4,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::UnknownId(id) => format!("unknown surface id: {id}"),
            Failure::Invalid(m) => format!("validation failed: {m}"),
            Failure::Usage(m) => m.clone(),
            Failure::Io(e) => format!("i/o error: {e}"),
            Failure::Mismatch(m) => m.clone(),
        }
    }
}

impl From<SurfaceError> for Failure {
    fn from(e: SurfaceError) -> Self {
        match e {
            SurfaceError::UnknownId(id) => Failure::UnknownId(id),
            other => Failure::Invalid(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Command output plus an optional failure raised after the output is written.
struct Output {
    text: String,
    failure: Option<Failure>,
}

impl From<String> for Output {
    fn from(text: String) -> Self {
        Output { text, failure: None }
    }
}

fn load_catalog() -> Result<Catalog, Failure> {
    match std::env::var_os("PEZZO_CATALOG") {
        Some(path) => {
            let text = fs::read_to_string(&path)?;
            Catalog::from_json(&text).map_err(Failure::from)
        }
        None => Ok(Catalog::builtin().clone()),
    }
}

fn parse_mode(s: &str) -> Result<Mode, Failure> {
    s.parse().map_err(|e: pezzo::lct::LctError| Failure::Usage(e.to_string()))
}

fn no_dot(format: Format) -> Result<(), Failure> {
    if format == Format::Dot {
        return Err(Failure::Usage("--format dot is only available for export".into()));
    }
    Ok(())
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn source(e: &CatalogEntry) -> &'static str {
    if e.plane_spec().is_some() {
        "plane"
    } else {
        "lattice"
    }
}

fn cmd_catalog(cat: &Catalog, degree: Option<u32>, format: Format) -> Result<Output, Failure> {
    no_dot(format)?;
    let entries: Vec<&CatalogEntry> = cat.entries.iter().filter(|e| degree.is_none_or(|d| e.degree == d)).collect();
    let rows: Vec<Vec<String>> = entries
        .iter()
        .map(|e| vec![e.id.clone(), e.degree.to_string(), e.singularity.to_string(), source(e).into()])
        .collect();
    let header = ["id", "degree", "sigma", "source"];
    Ok(match format {
        Format::Json => pretty(&json!(entries
            .iter()
            .map(|e| json!({"id": e.id, "degree": e.degree, "sigma": e.singularity.to_string(), "source": source(e), "notes": e.notes}))
            .collect::<Vec<_>>())),
        Format::Csv => csv_document(&header, &rows)?,
        _ => text_table(&header, &rows),
    }
    .into())
}

fn build<'a>(cat: &'a Catalog, id: &str) -> Result<(&'a CatalogEntry, SurfaceModel), Failure> {
    let entry = cat.entry(id)?;
    Ok((entry, entry.build()?))
}

fn cmd_show(cat: &Catalog, id: &str, format: Format) -> Result<Output, Failure> {
    no_dot(format)?;
    let (entry, model) = build(cat, id)?;
    let report = validate_model(&model);
    let issues: Vec<String> = report.issues.iter().map(|i| i.to_string()).collect();
    let rows: Vec<Vec<String>> = model
        .curves
        .iter()
        .map(|c| vec![c.name.clone(), c.class.to_string(), c.self_int.to_string()])
        .collect();
    let header = ["curve", "class", "self-intersection"];
    Ok(match format {
        Format::Json => pretty(&json!({
            "id": entry.id,
            "degree": model.degree,
            "sigma": model.singularity.to_string(),
            "source": source(entry),
            "curves": model.curves.iter().map(|c| json!({"name": c.name, "class": c.class.to_string(), "self_int": c.self_int})).collect::<Vec<_>>(),
            "plane": entry.plane_spec(),
            "valid": report.is_valid(),
            "issues": issues,
        })),
        Format::Csv => csv_document(&header, &rows)?,
        _ => {
            let mut s = format!(
                "{}: degree {}, singularity {}, {} data\n",
                entry.id,
                model.degree,
                model.singularity,
                source(entry)
            );
            if !entry.notes.is_empty() {
                s += &format!("{}\n", entry.notes);
            }
            s += "\n";
            s += &text_table(&header, &rows);
            s += &if issues.is_empty() { "\nvalid\n".to_string() } else { format!("\nissues:\n  {}\n", issues.join("\n  ")) };
            s
        }
    }
    .into())
}

fn cmd_enumerate(cat: &Catalog, id: &str, mode: Mode, format: Format) -> Result<Output, Failure> {
    no_dot(format)?;
    let (_, model) = build(cat, id)?;
    let enumerated = enumerate_anticanonical(&model);
    let special = special_configs(&model);
    let mut rows = Vec::new();
    let mut docs = Vec::new();
    for (i, (kind, cfg)) in
        enumerated.iter().map(|c| ("enumerated", c)).chain(special.iter().map(|c| ("triple point", c))).enumerate()
    {
        let lct = config_lct(cfg, mode).map(|r| format_ratio(&r.value)).unwrap_or_else(|e| e.to_string());
        let stratum = Stratum::from_weight(cfg.max_coefficient()).map(|s| s.to_string()).unwrap_or_else(|_| "-".into());
        rows.push(vec![i.to_string(), kind.into(), cfg.max_coefficient().to_string(), stratum.clone(), lct.clone(), cfg.to_string()]);
        docs.push(json!({"index": i, "kind": kind, "max_weight": cfg.max_coefficient(), "stratum": stratum, "lct": lct, "divisor": cfg.to_string(), "graph": dual_graph(cfg)}));
    }
    let header = ["index", "kind", "max_weight", "stratum", "lct", "divisor"];
    Ok(match format {
        Format::Json => pretty(&json!({"surface": id, "mode": mode.to_string(), "configs": docs})),
        Format::Csv => csv_document(&header, &rows)?,
        _ => text_table(&header, &rows),
    }
    .into())
}

fn cmd_lct(cat: &Catalog, id: &str, mode: Mode, format: Format) -> Result<Output, Failure> {
    no_dot(format)?;
    let (_, model) = build(cat, id)?;
    let report = surface_lct(&model, mode).map_err(|e| Failure::Invalid(e.to_string()))?;
    let divisor = report.config.clone().unwrap_or_default();
    Ok(match format {
        Format::Json => {
            let mut v = serde_json::to_value(&report).expect("reports serialize");
            v["surface"] = json!(id);
            v["mode"] = json!(mode.to_string());
            pretty(&v)
        }
        Format::Csv => csv_document(
            &["surface", "mode", "value", "witness", "divisor"],
            &[vec![id.into(), mode.to_string(), format_ratio(&report.value), report.witness.to_string(), divisor]],
        )?,
        _ => format!("{}\nwitness: {}\ndivisor: {}\n", format_ratio(&report.value), report.witness, divisor),
    }
    .into())
}

fn cmd_table(cat: &Catalog, degree: u32, format: Format) -> Result<Output, Failure> {
    no_dot(format)?;
    let checks = table(cat, degree);
    let show = |r: &Option<pezzo::Rational>| r.map(|v| format_ratio(&v)).unwrap_or_else(|| "-".into());
    let rows: Vec<Vec<String>> = checks
        .iter()
        .map(|r| {
            vec![r.degree.to_string(), r.sigma.clone(), show(&r.expected), show(&r.computed), r.witness.clone(), r.matched.to_string()]
        })
        .collect();
    Ok(match format {
        Format::Json => pretty(&serde_json::to_value(&checks).expect("rows serialize")),
        Format::Csv => csv_document(&["degree", "sigma", "expected", "computed", "witness", "match"], &rows)?,
        _ => {
            let short: Vec<Vec<String>> = checks
                .iter()
                .zip(&rows)
                .map(|(c, r)| vec![c.id.clone(), r[1].clone(), r[2].clone(), r[3].clone(), r[5].clone()])
                .collect();
            text_table(&["id", "sigma", "expected", "computed", "match"], &short)
        }
    }
    .into())
}

fn cmd_propagate(stratum: &str, degree: Option<u32>, format: Format) -> Result<Output, Failure> {
    no_dot(format)?;
    let s: Stratum = stratum.parse().map_err(|e: pezzo::anticanon::PropagationError| Failure::Usage(e.to_string()))?;
    let tables = builtin_tables(s);
    let marked = table_rows(s);
    let degrees: Vec<u32> = tables.degrees().filter(|d| degree.is_none_or(|x| x == *d)).collect();
    let describe = |g: &pezzo::anticanon::DualGraph| {
        let vs: Vec<String> = g.vertices.iter().map(|v| format!("{}:{}", v.weight, v.self_int)).collect();
        let es: Vec<String> = g.edges.iter().map(|e| format!("{}-{}", e.u, e.v)).collect();
        (vs.join(" "), es.join(" "))
    };
    let mut rows = Vec::new();
    let mut docs = Vec::new();
    for &d in &degrees {
        let graphs = tables.graphs(d);
        for (i, g) in graphs.iter().enumerate() {
            let labels: Vec<&str> = marked.iter().filter(|r| r.degree == d && pezzo::anticanon::graph_iso(&r.graph, g)).map(|r| r.label).collect();
            let (vs, es) = describe(g);
            rows.push(vec![s.to_string(), d.to_string(), i.to_string(), labels.join(" "), vs, es]);
        }
        docs.push(json!({"degree": d, "graphs": graphs}));
    }
    let header = ["stratum", "degree", "index", "rows", "vertices", "edges"];
    Ok(match format {
        Format::Json => pretty(&json!({"stratum": s.weight(), "degrees": docs})),
        Format::Csv => csv_document(&header, &rows)?,
        _ => {
            let mut out = String::new();
            for &d in &degrees {
                out += &format!("degree {d}: {} graphs\n", tables.graphs(d).len());
            }
            out += "\n";
            out += &text_table(&header, &rows);
            out
        }
    }
    .into())
}

fn cmd_export(cat: &Catalog, surface: Option<&str>, degree: Option<u32>, format: Format) -> Result<Output, Failure> {
    let entries: Vec<&CatalogEntry> = match surface {
        Some(id) => vec![cat.entry(id)?],
        None => cat.entries.iter().collect(),
    };
    let mut rows = Vec::new();
    let mut docs = Vec::new();
    let mut dot = String::new();
    for e in entries.into_iter().filter(|e| degree.is_none_or(|d| e.degree == d)) {
        let model = e.build()?;
        for (i, cfg) in enumerate_anticanonical(&model).iter().enumerate() {
            for (name, class, coefficient) in cfg.export_rows() {
                rows.push(vec![e.id.clone(), i.to_string(), name, class.to_string(), coefficient.to_string()]);
            }
            let g = dual_graph(cfg);
            dot += &g.to_dot().replacen("graph G", &format!("graph \"{} #{i}\"", e.id), 1);
            docs.push(json!({"surface": e.id, "index": i, "divisor": cfg.to_string(), "graph": g}));
        }
    }
    let header = ["surface", "config", "component", "class", "coefficient"];
    Ok(match format {
        Format::Json => pretty(&json!(docs)),
        Format::Dot => dot,
        Format::Csv => csv_document(&header, &rows)?,
        Format::Table => text_table(&header, &rows),
    }
    .into())
}

fn cmd_verify(cat: &Catalog, format: Format) -> Result<Output, Failure> {
    no_dot(format)?;
    let report = verify_all(cat);
    let show = |r: &Option<pezzo::Rational>| r.map(|v| format_ratio(&v)).unwrap_or_else(|| "-".into());
    let text = match format {
        Format::Json => {
            let mut v = serde_json::to_value(&report).expect("reports serialize");
            v["passed"] = json!(report.passed());
            pretty(&v)
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = report
                .rows
                .iter()
                .map(|r| {
                    vec![r.degree.to_string(), r.sigma.clone(), show(&r.expected), show(&r.computed), r.witness.clone(), r.matched.to_string()]
                })
                .collect();
            csv_document(&["degree", "sigma", "expected", "computed", "witness", "match"], &rows)?
        }
        _ => {
            let rows: Vec<Vec<String>> = report
                .rows
                .iter()
                .map(|r| vec![r.id.clone(), r.sigma.clone(), show(&r.expected), show(&r.computed), r.matched.to_string()])
                .collect();
            let mut s = text_table(&["id", "sigma", "expected", "computed", "match"], &rows);
            let contained = report.propagation.iter().filter(|p| p.contained).count();
            s += &format!("\npropagation: {contained}/{} marked rows contained\n\n", report.propagation.len());
            for c in &report.criteria {
                s += &format!("{c}\n");
                for f in &c.failures {
                    s += &format!("    {f}\n");
                }
            }
            s
        }
    };
    let failure = (!report.passed()).then(|| Failure::Mismatch("verification failed".into()));
    Ok(Output { text, failure })
}

fn run(cli: Cli) -> Result<Output, Failure> {
    let cat = load_catalog()?;
    let f = cli.format;
    match &cli.command {
        Command::Catalog { degree } => cmd_catalog(&cat, *degree, f),
        Command::Show { surface } => cmd_show(&cat, surface, f),
        Command::Enumerate { surface, mode } => cmd_enumerate(&cat, surface, parse_mode(mode)?, f),
        Command::Lct { surface, mode } => cmd_lct(&cat, surface, parse_mode(mode)?, f),
        Command::Table { degree } => cmd_table(&cat, *degree, f),
        Command::Propagate { stratum, degree } => cmd_propagate(stratum, *degree, f),
        Command::Export { surface, degree } => cmd_export(&cat, surface.as_deref(), *degree, f),
        Command::Verify => cmd_verify(&cat, f),
    }
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = cli.out.clone();
    let result = run(cli).and_then(|o| {
        emit(out.as_ref(), &o.text)?;
        o.failure.map_or(Ok(()), Err)
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("pezzo: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
