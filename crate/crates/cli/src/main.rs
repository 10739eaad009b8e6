use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qmq_core::builtin::{available_names, builtin_link, census};
use qmq_core::coloring::enumerate_colorings_with;
use qmq_core::diagram::{parse_pd, validate_diagram, LinkDiagram};
use qmq_core::module::{module_polynomial_with, search_modules, validate_module, QuandleModule};
use qmq_core::quandle::{
    alexander_quandle, conjugation_quandle, core_quandle, enumerate_endomorphisms, parse_table,
    validate_quandle, Endomorphism, GroupTable, Quandle, DEFAULT_ENDOMORPHISM_BOUND,
};
use qmq_core::quiver::{
    coloring_quiver_with, dot_export, module_quiver_with, quiver_polynomial, DotLabels, PushPolicy,
    WeightedQuiver,
};
use qmq_core::table::{batch_table, orientation_variants, render_table, TableConfig, TableRow};
use qmq_core::{Error, Execution};

/// Quandle colorings, module polynomials and quiver polynomials of links.
#[derive(Debug, Parser)]
#[command(name = "qmq", version)]
struct Cli {
    /// Worker threads.
    #[arg(long, short, env = "QMQ_JOBS", global = true)]
    jobs: Option<usize>,

    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the quandle axioms of a table file.
    ValidateQuandle { file: PathBuf },
    /// Check the module axioms of a module file against a quandle.
    ValidateModule {
        #[arg(long)]
        quandle: String,
        file: PathBuf,
    },
    /// Built-in link diagrams.
    #[command(subcommand)]
    Links(LinksCommand),
    /// List every coloring, one per line.
    Colorings {
        #[command(flatten)]
        link: LinkArgs,
        #[arg(long)]
        quandle: String,
    },
    /// Number of colorings.
    Count {
        #[command(flatten)]
        link: LinkArgs,
        #[arg(long)]
        quandle: String,
    },
    /// List the endomorphisms of a quandle.
    Endos {
        #[arg(long)]
        quandle: String,
        /// Largest quandle order to enumerate.
        #[arg(long, default_value_t = DEFAULT_ENDOMORPHISM_BOUND)]
        max_order: usize,
    },
    #[command(subcommand)]
    Modules(ModulesCommand),
    #[command(subcommand)]
    Poly(PolyCommand),
    /// Coloring quiver as a graph.
    Quiver {
        #[command(flatten)]
        link: LinkArgs,
        #[arg(long)]
        quandle: String,
        /// Weight vertices by this module.
        #[arg(long)]
        module: Option<PathBuf>,
        #[command(flatten)]
        endos: EndoArgs,
        #[arg(long, value_enum, default_value_t = Labels::Weight)]
        labels: Labels,
    },
    /// Quiver polynomials of several links, one row per link.
    Table {
        /// Link names or native files, in output order.
        links: Vec<String>,
        #[arg(long)]
        quandle: String,
        #[arg(long)]
        module: PathBuf,
        #[command(flatten)]
        endos: EndoArgs,
        /// Emit every orientation and mirror variant of each link.
        #[arg(long)]
        variants: bool,
        /// Tab-separated rows: link, mask, mirror, polynomial.
        #[arg(long)]
        tsv: bool,
    },
}

#[derive(Debug, Subcommand)]
enum LinksCommand {
    /// Built-in names with crossing and component counts.
    List,
    /// Print a diagram in the native format.
    Show {
        name: Option<String>,
        /// Convert a PD code file instead.
        #[arg(long, conflicts_with = "name")]
        pd: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
enum ModulesCommand {
    /// Enumerate quandle modules over Z/nZ.
    Search {
        #[arg(long)]
        quandle: String,
        #[arg(long)]
        modulus: u64,
        #[arg(long, default_value_t = 20)]
        max: usize,
    },
}

#[derive(Debug, Subcommand)]
enum PolyCommand {
    /// One-variable module polynomial.
    Module {
        #[command(flatten)]
        link: LinkArgs,
        #[arg(long)]
        quandle: String,
        #[arg(long)]
        module: PathBuf,
    },
    /// Two-variable module quiver polynomial.
    Quiver {
        #[command(flatten)]
        link: LinkArgs,
        #[arg(long)]
        quandle: String,
        #[arg(long)]
        module: PathBuf,
        #[command(flatten)]
        endos: EndoArgs,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false, id = "link_source")]
struct LinkSource {
    /// Built-in name or native diagram file.
    #[arg(long)]
    link: Option<String>,
    /// PD code file.
    #[arg(long)]
    pd: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct LinkArgs {
    #[command(flatten)]
    source: LinkSource,
    /// Reverse the components whose bits are set.
    #[arg(long, default_value_t = 0)]
    reverse_components: u64,
    #[arg(long)]
    mirror: bool,
}

#[derive(Debug, Args)]
struct EndoArgs {
    /// 1-based map, e.g. 2,4,3,1. Repeatable.
    #[arg(long = "endo")]
    maps: Vec<String>,
    /// File with one 1-based map per line.
    #[arg(long)]
    endo_file: Vec<PathBuf>,
    /// Use every endomorphism of the quandle.
    #[arg(long, conflicts_with_all = ["maps", "endo_file"])]
    all_endos: bool,
    /// Accept maps that are not endomorphisms.
    #[arg(long)]
    allow_non_endomorphism: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Labels {
    Weight,
    Coloring,
    Both,
}

/// Bad input rather than a failed computation.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    anyhow::Error::new(Usage(msg.into()))
}

enum Outcome {
    Ok(String),
    /// Validation failed; the report is still printed.
    Rejected(String),
}

fn is_usage_error(e: &Error) -> bool {
    match e {
        Error::Syntax { .. }
        | Error::MalformedTable(_)
        | Error::MalformedMap(_)
        | Error::InvalidPd(_)
        | Error::UnknownLink { .. }
        | Error::BadModulus(_)
        | Error::InvalidGroup(_)
        | Error::NotAUnit { .. } => true,
        Error::InLink { source, .. } => is_usage_error(source),
        _ => false,
    }
}

fn exit_code(e: &anyhow::Error) -> u8 {
    for cause in e.chain() {
        if cause.is::<Usage>() || cause.is::<std::io::Error>() {
            return 2;
        }
        if let Some(core) = cause.downcast_ref::<Error>() {
            return if is_usage_error(core) { 2 } else { 1 };
        }
    }
    1
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

/// File path, or one of `trivial:N`, `alexander:N:T`, `dihedral:N`,
/// `conj-sym:K`.
fn load_quandle(spec: &str) -> anyhow::Result<Quandle> {
    let path = Path::new(spec);
    if path.exists() {
        let text = read(path)?;
        return Quandle::parse(&text).with_context(|| format!("in {spec}"));
    }
    let parts: Vec<&str> = spec.split(':').collect();
    let num = |s: &str| -> anyhow::Result<u64> {
        s.parse()
            .map_err(|_| usage(format!("bad number {s:?} in quandle {spec:?}")))
    };
    let q = match parts[..] {
        ["trivial", n] => Quandle::trivial(num(n)? as usize)?,
        ["alexander", n, t] => alexander_quandle(num(n)?, num(t)?)?,
        ["dihedral", n] => core_quandle(&GroupTable::cyclic(num(n)? as usize)?)?,
        ["conj-sym", k] => conjugation_quandle(&GroupTable::symmetric(num(k)? as usize)?)?,
        _ => {
            return Err(usage(format!(
                "{spec:?} is neither a file nor trivial:N, alexander:N:T, dihedral:N, conj-sym:K"
            )))
        }
    };
    Ok(q)
}

fn load_module(path: &Path) -> anyhow::Result<QuandleModule> {
    QuandleModule::parse(&read(path)?).with_context(|| format!("in {}", path.display()))
}

fn load_link(args: &LinkArgs) -> anyhow::Result<LinkDiagram> {
    let d = match (&args.source.link, &args.source.pd) {
        (Some(name), None) => {
            let path = Path::new(name);
            if path.exists() {
                LinkDiagram::parse(&read(path)?).with_context(|| format!("in {name}"))?
            } else {
                builtin_link(name)?
            }
        }
        (None, Some(path)) => {
            parse_pd(&read(path)?).with_context(|| format!("in {}", path.display()))?
        }
        _ => return Err(usage("give exactly one of --link and --pd")),
    };
    let components = d.component_count();
    if components < 64 && args.reverse_components >> components != 0 {
        return Err(usage(format!(
            "--reverse-components {} names components beyond the {components} of {}",
            args.reverse_components, d.name
        )));
    }
    Ok(d.variant(args.reverse_components, args.mirror))
}

fn load_endos(args: &EndoArgs, q: &Quandle) -> anyhow::Result<(Vec<Endomorphism>, PushPolicy)> {
    let policy = if args.allow_non_endomorphism {
        PushPolicy::AnyMap
    } else {
        PushPolicy::RequireEndomorphism
    };
    if args.all_endos {
        return Ok((
            enumerate_endomorphisms(q, DEFAULT_ENDOMORPHISM_BOUND)?,
            policy,
        ));
    }
    let mut texts: Vec<String> = args.maps.clone();
    for path in &args.endo_file {
        let text = read(path)?;
        texts.extend(
            text.lines()
                .map(|l| l.split('#').next().unwrap_or("").trim())
                .filter(|l| !l.is_empty())
                .map(str::to_string),
        );
    }
    if texts.is_empty() {
        return Err(usage("give --endo, --endo-file or --all-endos"));
    }
    let maps = texts
        .iter()
        .map(|t| {
            let map = Endomorphism::parse_one_based(t)?;
            match policy {
                PushPolicy::RequireEndomorphism => Endomorphism::new(q, map),
                PushPolicy::AnyMap => Endomorphism::unchecked(q, map),
            }
        })
        .collect::<qmq_core::Result<Vec<_>>>()?;
    Ok((maps, policy))
}

fn one_based(colors: &[usize]) -> Vec<usize> {
    colors.iter().map(|c| c + 1).collect()
}

fn to_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value");
    s.push('\n');
    s
}

fn no_dot(format: Format) -> anyhow::Result<()> {
    if format == Format::Dot {
        return Err(usage("--format dot applies only to `quiver`"));
    }
    Ok(())
}

fn quiver_json(wq: &WeightedQuiver) -> Value {
    json!({
        "endomorphisms": wq.endomorphisms.iter().map(|f| one_based(f.as_slice())).collect::<Vec<_>>(),
        "vertices": wq.vertices.iter().map(|v| json!({
            "colors": one_based(&v.colors),
            "is_coloring": v.is_coloring,
            "weight": v.weight.map(|w| w.value()),
        })).collect::<Vec<_>>(),
        "edges": wq.edges.iter().map(|e| json!({
            "source": e.source,
            "target": e.target,
            "label": e.label + 1,
        })).collect::<Vec<_>>(),
    })
}

fn rows_output(rows: &[TableRow], format: Format, tsv: bool) -> String {
    match format {
        Format::Json => to_json(&serde_json::to_value(rows).expect("rows serialize")),
        _ if tsv => rows.iter().map(|r| r.to_tsv() + "\n").collect(),
        _ => render_table(rows),
    }
}

fn run(cli: &Cli, exec: Execution) -> anyhow::Result<Outcome> {
    let format = cli.format;
    if !matches!(cli.command, Command::Quiver { .. }) {
        no_dot(format)?;
    }
    let out = match &cli.command {
        Command::ValidateQuandle { file } => {
            let table = parse_table(&read(file)?)?;
            let report = validate_quandle(&table)?;
            let text = match format {
                Format::Json => to_json(&serde_json::to_value(&report)?),
                _ => {
                    let mut s = format!(
                        "quandle: {}\nkei: {}\n",
                        if report.is_quandle { "yes" } else { "no" },
                        if report.is_kei { "yes" } else { "no" }
                    );
                    for v in &report.violations {
                        let w: Vec<String> = v
                            .witness
                            .iter()
                            .flatten()
                            .map(|x| (x + 1).to_string())
                            .collect();
                        let _ = writeln!(s, "violation: {:?} at ({})", v.axiom, w.join(", "));
                    }
                    s
                }
            };
            return Ok(if report.is_quandle {
                Outcome::Ok(text)
            } else {
                Outcome::Rejected(text)
            });
        }
        Command::ValidateModule { quandle, file } => {
            let q = load_quandle(quandle)?;
            let m = load_module(file)?;
            let report = validate_module(&q, &m)?;
            let text = match format {
                Format::Json => to_json(&serde_json::to_value(&report)?),
                _ => {
                    let mut s = format!(
                        "module: {}\n",
                        if report.valid { "valid" } else { "invalid" }
                    );
                    for v in &report.violations {
                        let w: Vec<String> = v
                            .witness
                            .iter()
                            .flatten()
                            .map(|x| (x + 1).to_string())
                            .collect();
                        let _ = writeln!(
                            s,
                            "violation: {} ({} failing instances, first at ({}))",
                            v.axiom,
                            v.failures,
                            w.join(", ")
                        );
                    }
                    s
                }
            };
            return Ok(if report.valid {
                Outcome::Ok(text)
            } else {
                Outcome::Rejected(text)
            });
        }
        Command::Links(LinksCommand::List) => {
            let names = available_names();
            match format {
                Format::Json => to_json(&Value::Array(
                    names
                        .iter()
                        .map(|n| {
                            let (c, k) = census(n).unwrap_or((0, 0));
                            json!({"name": n, "crossings": c, "components": k})
                        })
                        .collect(),
                )),
                _ => names
                    .iter()
                    .map(|n| {
                        let (c, k) = census(n).unwrap_or((0, 0));
                        format!("{n}\t{c}\t{k}\n")
                    })
                    .collect(),
            }
        }
        Command::Links(LinksCommand::Show { name, pd }) => {
            let d = match (name, pd) {
                (Some(n), None) => builtin_link(n)?,
                (None, Some(p)) => parse_pd(&read(p)?)?,
                _ => return Err(usage("give a link name or --pd")),
            };
            let report = validate_diagram(&d);
            if !report.valid {
                bail!("diagram is invalid: {:?}", report.violations);
            }
            match format {
                Format::Json => to_json(&json!({
                    "name": d.name,
                    "arcs": d.arc_count,
                    "components": d.component_count(),
                    "crossings": d.crossings.iter().map(|c| json!({
                        "sign": c.sign.as_i8(),
                        "under_in": c.under_in,
                        "over": c.over,
                        "under_out": c.under_out,
                    })).collect::<Vec<_>>(),
                    "loops": d.loops,
                })),
                _ => d.to_text(),
            }
        }
        Command::Colorings { link, quandle } => {
            let d = load_link(link)?;
            let q = load_quandle(quandle)?;
            let cs = enumerate_colorings_with(&d, &q, exec);
            match format {
                Format::Json => to_json(&Value::Array(
                    cs.iter().map(|c| json!(one_based(c.colors()))).collect(),
                )),
                _ => cs.iter().map(|c| c.to_one_based() + "\n").collect(),
            }
        }
        Command::Count { link, quandle } => {
            let d = load_link(link)?;
            let q = load_quandle(quandle)?;
            let n = enumerate_colorings_with(&d, &q, exec).len();
            match format {
                Format::Json => to_json(&json!({"link": d.name, "count": n})),
                _ => format!("{n}\n"),
            }
        }
        Command::Endos { quandle, max_order } => {
            let q = load_quandle(quandle)?;
            let ends = enumerate_endomorphisms(&q, *max_order)?;
            match format {
                Format::Json => to_json(&Value::Array(
                    ends.iter()
                        .map(|f| json!(one_based(f.as_slice())))
                        .collect(),
                )),
                _ => ends.iter().map(|f| format!("{f}\n")).collect(),
            }
        }
        Command::Modules(ModulesCommand::Search {
            quandle,
            modulus,
            max,
        }) => {
            let q = load_quandle(quandle)?;
            let found = search_modules(&q, *modulus, *max)?;
            match format {
                Format::Json => to_json(&Value::Array(
                    found
                        .iter()
                        .map(|m| json!({"ring": m.ring().to_string(), "t": m.t_table(), "s": m.s_table()}))
                        .collect(),
                )),
                _ => found.iter().map(|m| m.to_text()).collect::<Vec<_>>().join("\n"),
            }
        }
        Command::Poly(PolyCommand::Module {
            link,
            quandle,
            module,
        }) => {
            let d = load_link(link)?;
            let q = load_quandle(quandle)?;
            let m = load_module(module)?;
            let p = module_polynomial_with(&d, &q, &m, exec)?;
            match format {
                Format::Json => to_json(&serde_json::to_value(&p)?),
                _ => format!("{p}\n"),
            }
        }
        Command::Poly(PolyCommand::Quiver {
            link,
            quandle,
            module,
            endos,
        }) => {
            let d = load_link(link)?;
            let q = load_quandle(quandle)?;
            let m = load_module(module)?;
            let (maps, policy) = load_endos(endos, &q)?;
            let p = quiver_polynomial(&module_quiver_with(&d, &q, &maps, &m, policy, exec)?)?;
            match format {
                Format::Json => to_json(&serde_json::to_value(&p)?),
                _ => format!("{p}\n"),
            }
        }
        Command::Quiver {
            link,
            quandle,
            module,
            endos,
            labels,
        } => {
            let d = load_link(link)?;
            let q = load_quandle(quandle)?;
            let (maps, policy) = load_endos(endos, &q)?;
            let wq = match module {
                Some(path) => module_quiver_with(&d, &q, &maps, &load_module(path)?, policy, exec)?,
                None => coloring_quiver_with(&d, &q, &maps, policy, exec)?,
            };
            let labels = match labels {
                Labels::Weight => DotLabels::Weight,
                Labels::Coloring => DotLabels::Coloring,
                Labels::Both => DotLabels::Both,
            };
            match format {
                Format::Json => to_json(&quiver_json(&wq)),
                _ => dot_export(&wq, labels),
            }
        }
        Command::Table {
            links,
            quandle,
            module,
            endos,
            variants,
            tsv,
        } => {
            let q = load_quandle(quandle)?;
            let m = load_module(module)?;
            let (maps, policy) = load_endos(endos, &q)?;
            let cfg = TableConfig {
                quandle: &q,
                module: &m,
                endomorphisms: &maps,
                policy,
                exec,
            };
            let diagrams = links
                .iter()
                .map(|name| {
                    let args = LinkArgs {
                        source: LinkSource {
                            link: Some(name.clone()),
                            pd: None,
                        },
                        reverse_components: 0,
                        mirror: false,
                    };
                    load_link(&args)
                })
                .collect::<anyhow::Result<Vec<_>>>()?;
            let rows = if *variants {
                let mut rows = Vec::new();
                for d in &diagrams {
                    rows.extend(orientation_variants(&cfg, d)?);
                }
                rows
            } else {
                batch_table(&cfg, &diagrams)?
            };
            rows_output(&rows, format, *tsv)
        }
    };
    Ok(Outcome::Ok(out))
}

fn execute(cli: &Cli) -> anyhow::Result<Outcome> {
    let jobs = cli.jobs;
    if jobs == Some(0) {
        return Err(usage("--jobs must be at least 1"));
    }
    let exec = if jobs == Some(1) {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    #[cfg(feature = "parallel")]
    if let Some(n) = jobs {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| anyhow::anyhow!("building the worker pool: {e}"))?;
        return pool.install(|| run(cli, exec));
    }
    run(cli, exec)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(Outcome::Ok(text)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Ok(Outcome::Rejected(text)) => {
            print!("{text}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
