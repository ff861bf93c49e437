//! `powerlabel`: fit, label, sweep, generate, verify, embed and report.
//!
//! Exit codes: 0 success; 1 runtime error (unreadable input, I/O); 2 usage
//! error, or `verify` found the graph outside the family; 3 `embed` is
//! infeasible for the requested `n`.

mod report;

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use powerlabel::generators::{embed_lower_bound, generate_ba, generate_powerlaw_graph};
use powerlabel::io::{load_edge_list_file, write_edge_list, LoadedGraph};
use powerlabel::labeling::{
    powerlaw_threshold, predicted_threshold, sparse_threshold, sweep_thresholds, write_label_dump,
    write_sweep_csv,
};
use powerlabel::powerlaw::{verify_palpha, verify_proper, MembershipReport};
use powerlabel::{constants, encode, fit_alpha_mle, is_induced_subgraph, Error, Graph, Mode};

use report::ExperimentReport;

#[derive(Parser)]
#[command(
    name = "powerlabel",
    version,
    about = "Adjacency labeling for power-law graphs"
)]
struct Cli {
    /// Directory for outputs whose path is not given explicitly.
    #[arg(long, global = true, env = "POWERLABEL_OUT_DIR", default_value = ".")]
    out_dir: PathBuf,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Fit the power-law exponent of a graph's degree distribution.
    Fit {
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        xmin: usize,
    },
    /// Encode every vertex and write a label dump.
    Label {
        input: PathBuf,
        #[command(flatten)]
        alpha: AlphaArgs,
        /// `predicted`, `sparse`, `powerlaw`, or a positive integer.
        #[arg(long, default_value = "predicted")]
        threshold: ThresholdChoice,
        #[arg(long, default_value = "concat")]
        mode: Mode,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Maximum thin and fat label sizes for every threshold, as CSV.
    Sweep {
        input: PathBuf,
        #[command(flatten)]
        alpha: AlphaArgs,
        #[arg(long, default_value = "concat")]
        mode: Mode,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a synthetic graph as an edge list.
    Generate {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        n: usize,
        /// Exponent, for `powerlaw`.
        #[arg(long)]
        alpha: Option<f64>,
        /// Attachments per vertex, for `ba`.
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the attachment log (`ba` only).
        #[arg(long)]
        log: Option<PathBuf>,
    },
    /// Check membership in a power-law family.
    Verify {
        input: PathBuf,
        #[command(flatten)]
        alpha: AlphaArgs,
        #[arg(long, value_enum, default_value = "palpha")]
        family: Family,
    },
    /// Build a proper power-law graph containing H as an induced subgraph.
    Embed {
        /// Edge list of H. Vertices missing from the file (H may have
        /// isolated vertices) are added with ids after the largest one.
        #[arg(long)]
        h_input: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        alpha: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out_graph: Option<PathBuf>,
        #[arg(long)]
        out_mapping: Option<PathBuf>,
    },
    /// One CSV row per dataset with predicted, empirical and bound columns.
    Report {
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        /// Exponent for a dataset, as `name=value` (name is the file stem).
        /// Datasets without one are fitted.
        #[arg(long = "alpha", value_parser = parse_override)]
        alphas: Vec<(String, f64)>,
        #[arg(long, default_value_t = 1)]
        xmin: usize,
        #[arg(long, default_value = "concat")]
        mode: Mode,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct AlphaArgs {
    /// Power-law exponent; fitted from the degrees when absent.
    #[arg(long)]
    alpha: Option<f64>,
    /// Smallest degree used when fitting.
    #[arg(long, default_value_t = 1)]
    xmin: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Powerlaw,
    Ba,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Palpha,
    Proper,
}

#[derive(Clone, Copy, Debug)]
enum ThresholdChoice {
    Predicted,
    Sparse,
    Powerlaw,
    Fixed(usize),
}

impl std::str::FromStr for ThresholdChoice {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "predicted" => Ok(Self::Predicted),
            "sparse" => Ok(Self::Sparse),
            "powerlaw" => Ok(Self::Powerlaw),
            _ => match s.parse::<usize>() {
                Ok(t) if t > 0 => Ok(Self::Fixed(t)),
                _ => Err(format!(
                    "expected predicted, sparse, powerlaw or a positive integer, got {s:?}"
                )),
            },
        }
    }
}

fn parse_override(s: &str) -> std::result::Result<(String, f64), String> {
    let (name, value) = s
        .split_once('=')
        .ok_or_else(|| format!("expected name=value, got {s:?}"))?;
    let alpha = value
        .parse::<f64>()
        .map_err(|e| format!("bad exponent {value:?}: {e}"))?;
    Ok((name.to_string(), alpha))
}

/// Errors that map to a specific exit code.
#[derive(Debug)]
enum Exit {
    Usage(String),
    NotMember,
    Infeasible(String),
}

impl std::fmt::Display for Exit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Exit::Usage(m) => write!(f, "usage: {m}"),
            Exit::NotMember => write!(f, "graph is not a member of the family"),
            Exit::Infeasible(m) => write!(f, "infeasible: {m}"),
        }
    }
}

impl std::error::Error for Exit {}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let code = match e.downcast_ref::<Exit>() {
                Some(Exit::NotMember) => return ExitCode::from(2),
                Some(Exit::Usage(_)) => 2,
                Some(Exit::Infeasible(_)) => 3,
                None => 1,
            };
            eprintln!("error: {e:#}");
            ExitCode::from(code)
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    let out_dir = cli.out_dir;
    match cli.command {
        Command::Fit { input, xmin } => cmd_fit(&input, xmin),
        Command::Label {
            input,
            alpha,
            threshold,
            mode,
            out,
        } => {
            let out = out.unwrap_or_else(|| out_dir.join(format!("{}.labels", stem(&input))));
            cmd_label(&input, &alpha, threshold, mode, &out)
        }
        Command::Sweep {
            input,
            alpha,
            mode,
            out,
        } => {
            let out = out.unwrap_or_else(|| out_dir.join(format!("{}.sweep.csv", stem(&input))));
            cmd_sweep(&input, &alpha, mode, &out)
        }
        Command::Generate {
            kind,
            n,
            alpha,
            m,
            seed,
            out,
            log,
        } => {
            let default_name = match kind {
                Kind::Powerlaw => format!("powerlaw-n{n}-seed{seed}.txt"),
                Kind::Ba => format!("ba-n{n}-seed{seed}.txt"),
            };
            let out = out.unwrap_or_else(|| out_dir.join(default_name));
            cmd_generate(kind, n, alpha, m, seed, &out, log.as_deref())
        }
        Command::Verify {
            input,
            alpha,
            family,
        } => cmd_verify(&input, &alpha, family),
        Command::Embed {
            h_input,
            n,
            alpha,
            seed,
            out_graph,
            out_mapping,
        } => {
            let g = out_graph.unwrap_or_else(|| out_dir.join("embed.txt"));
            let map = out_mapping.unwrap_or_else(|| out_dir.join("embed.mapping"));
            cmd_embed(&h_input, n, alpha, seed, &g, &map)
        }
        Command::Report {
            inputs,
            alphas,
            xmin,
            mode,
            out,
        } => {
            let out = out.unwrap_or_else(|| out_dir.join("report.csv"));
            cmd_report(&inputs, &alphas, xmin, mode, &out)
        }
    }
}

fn stem(p: &Path) -> String {
    p.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "graph".into())
}

fn load(path: &Path) -> Result<LoadedGraph> {
    load_edge_list_file(path).with_context(|| format!("reading {}", path.display()))
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    }
    let f = File::create(path).with_context(|| format!("creating {}", path.display()))?;
    Ok(BufWriter::new(f))
}

/// The exponent to use: the flag if given (the fit is echoed alongside), the
/// fit otherwise.
fn resolve_alpha(g: &Graph, args: &AlphaArgs) -> Result<f64> {
    let fitted = fit_alpha_mle(&g.degree_histogram(), args.xmin);
    match (args.alpha, fitted) {
        (Some(a), fit) => {
            if let Ok(f) = fit {
                println!("alpha: {a} (fitted {f:.4} at xmin={})", args.xmin);
            } else {
                println!("alpha: {a}");
            }
            Ok(a)
        }
        (None, Ok(f)) => {
            println!("alpha: {f:.4} (fitted at xmin={})", args.xmin);
            Ok(f)
        }
        (None, Err(e)) => bail!("cannot fit alpha: {e}"),
    }
}

fn print_shape(g: &Graph) {
    println!("n: {}", g.vertex_count());
    println!("m: {}", g.edge_count());
    println!("max_degree: {}", g.max_degree());
}

fn cmd_fit(input: &Path, xmin: usize) -> Result<()> {
    let g = load(input)?.graph;
    if g.vertex_count() == 0 {
        bail!(
            "{}: graph has n=0 vertices, nothing to fit",
            input.display()
        );
    }
    print_shape(&g);
    let alpha = fit_alpha_mle(&g.degree_histogram(), xmin)?;
    println!("alpha: {alpha:.4}");
    println!("xmin: {xmin}");
    Ok(())
}

fn choose_threshold(g: &Graph, choice: ThresholdChoice, alpha: &AlphaArgs) -> Result<usize> {
    let n = g.vertex_count();
    Ok(match choice {
        ThresholdChoice::Fixed(t) => t,
        ThresholdChoice::Sparse => {
            let c = g.edge_count() as f64 / n.max(1) as f64;
            sparse_threshold(n, c)?
        }
        ThresholdChoice::Predicted => predicted_threshold(n, resolve_alpha(g, alpha)?)?,
        ThresholdChoice::Powerlaw => {
            let a = resolve_alpha(g, alpha)?;
            powerlaw_threshold(n, a, constants(n, a)?.c_prime)?
        }
    })
}

fn cmd_label(
    input: &Path,
    alpha: &AlphaArgs,
    threshold: ThresholdChoice,
    mode: Mode,
    out: &Path,
) -> Result<()> {
    let loaded = load(input)?;
    let g = &loaded.graph;
    let t = choose_threshold(g, threshold, alpha)?;
    let labels = encode(g, t, mode);
    write_label_dump(&labels, Some(&loaded.external_ids), create(out)?)?;
    print_shape(g);
    println!("mode: {mode}");
    println!("threshold: {t}");
    println!("fat: {}", labels.fat_count);
    println!("idbits: {}", labels.params.idbits);
    println!("max_label_bits: {}", labels.max_label_bits());
    println!("labels: {}", out.display());
    Ok(())
}

fn cmd_sweep(input: &Path, alpha: &AlphaArgs, mode: Mode, out: &Path) -> Result<()> {
    let g = load(input)?.graph;
    let sweep = sweep_thresholds(&g, mode);
    let predicted = if alpha.alpha.is_some() || g.edge_count() > 0 {
        let a = resolve_alpha(&g, alpha)?;
        Some(predicted_threshold(g.vertex_count(), a)?)
    } else {
        None
    };
    let mut w = create(out)?;
    write_sweep_csv(&sweep, &mut w)?;
    let mut trailer = format!(
        "# empirical_threshold={} empirical_max_label={}",
        sweep.empirical_threshold, sweep.empirical_max_label
    );
    if let Some(t) = predicted {
        trailer += &format!(
            " predicted_threshold={t} predicted_max_label={}",
            sweep.max_label_at(t)
        );
    }
    writeln!(w, "{trailer}")?;
    w.flush()?;
    print_shape(&g);
    println!("{}", &trailer[2..]);
    println!("sweep: {}", out.display());
    Ok(())
}

fn cmd_generate(
    kind: Kind,
    n: usize,
    alpha: Option<f64>,
    m: Option<usize>,
    seed: u64,
    out: &Path,
    log_path: Option<&Path>,
) -> Result<()> {
    let (g, provenance, log) = match (kind, alpha, m) {
        (Kind::Powerlaw, Some(a), None) => {
            if n < 2 {
                return Err(Exit::Usage("powerlaw needs --n of at least 2".into()).into());
            }
            if log_path.is_some() {
                return Err(Exit::Usage("--log applies to --kind ba only".into()).into());
            }
            let pg = generate_powerlaw_graph(n, a, seed).map_err(usage_on_domain)?;
            (
                pg.graph,
                format!("kind=powerlaw n={n} alpha={a} seed={seed}"),
                None,
            )
        }
        (Kind::Ba, None, Some(m)) => {
            let (g, log) = generate_ba(n, m, seed, None).map_err(usage_on_domain)?;
            (g, format!("kind=ba n={n} m={m} seed={seed}"), Some(log))
        }
        (Kind::Powerlaw, _, _) => {
            return Err(Exit::Usage("--kind powerlaw takes --alpha and not --m".into()).into())
        }
        (Kind::Ba, _, _) => {
            return Err(Exit::Usage("--kind ba takes --m and not --alpha".into()).into())
        }
    };
    let mut w = create(out)?;
    writeln!(w, "# powerlabel generate {provenance}")?;
    write_edge_list(&g, &mut w)?;
    if let (Some(log), Some(path)) = (&log, log_path) {
        log.write(create(path)?)?;
    }
    print_shape(&g);
    match fit_alpha_mle(&g.degree_histogram(), 1) {
        Ok(a) => println!("alpha_fit: {a:.4}"),
        Err(e) => println!("alpha_fit: n/a ({e})"),
    }
    println!("graph: {}", out.display());
    Ok(())
}

fn usage_on_domain(e: Error) -> anyhow::Error {
    match e {
        Error::Domain(m) | Error::InvalidSeedGraph(m) => Exit::Usage(m).into(),
        other => other.into(),
    }
}

fn print_report(family: &str, r: &MembershipReport) {
    println!("family: {family}");
    println!("member: {}", r.member);
    for v in &r.violations {
        println!(
            "violation: {} at {}: observed {} allowed [{}, {}]",
            v.condition, v.index, v.observed, v.allowed.0, v.allowed.1
        );
    }
}

fn cmd_verify(input: &Path, alpha: &AlphaArgs, family: Family) -> Result<()> {
    let g = load(input)?.graph;
    let name = match family {
        Family::Palpha => "palpha",
        Family::Proper => "proper",
    };
    print_shape(&g);
    if g.vertex_count() == 0 {
        print_report(
            name,
            &MembershipReport {
                member: true,
                violations: Vec::new(),
            },
        );
        return Ok(());
    }
    let a = resolve_alpha(&g, alpha)?;
    let k = constants(g.vertex_count(), a)?;
    let h = g.degree_histogram();
    let r = match family {
        Family::Palpha => verify_palpha(&h, &k)?,
        Family::Proper => verify_proper(&h, &k)?,
    };
    print_report(name, &r);
    if r.member {
        Ok(())
    } else {
        Err(Exit::NotMember.into())
    }
}

fn cmd_embed(
    h_input: &Path,
    n: usize,
    alpha: f64,
    seed: u64,
    out_graph: &Path,
    out_mapping: &Path,
) -> Result<()> {
    let loaded = load(h_input)?;
    let k = constants(n, alpha).map_err(usage_on_domain)?;
    let present = loaded.graph.vertex_count();
    if present > k.i1 {
        return Err(Exit::Usage(format!(
            "H has {present} vertices but i1(n={n}, alpha={alpha}) = {}",
            k.i1
        ))
        .into());
    }
    // Pad with isolated vertices, which an edge list cannot name.
    let next = loaded.external_ids.iter().max().map_or(0, |&x| x + 1);
    let mut ids = loaded.external_ids.clone();
    ids.extend((0..(k.i1 - present) as u64).map(|j| next + j));
    let h = Graph::from_edges(k.i1, loaded.graph.edges());

    let e = match embed_lower_bound(&h, n, alpha, seed) {
        Ok(e) => e,
        Err(Error::Infeasible(m)) => return Err(Exit::Infeasible(m).into()),
        Err(other) => return Err(usage_on_domain(other)),
    };
    // Re-check before anything is written.
    if !is_induced_subgraph(&e.graph, &h, &e.mapping)? {
        bail!("internal error: H is not induced in the constructed graph");
    }
    let proper = verify_proper(&e.graph.degree_histogram(), &k)?;
    if !proper.member {
        bail!("internal error: constructed graph fails the proper check");
    }
    let palpha = verify_palpha(&e.graph.degree_histogram(), &k)?;

    let mut w = create(out_graph)?;
    writeln!(
        w,
        "# powerlabel embed n={n} alpha={alpha} seed={seed} i1={}",
        k.i1
    )?;
    write_edge_list(&e.graph, &mut w)?;
    let mut w = create(out_mapping)?;
    for (x, &v) in e.mapping.iter().enumerate() {
        writeln!(w, "{} {v}", ids[x])?;
    }
    w.flush()?;
    print_shape(&e.graph);
    println!("i1: {}", k.i1);
    println!("induced: true");
    println!("proper: {}", proper.member);
    println!("palpha: {}", palpha.member);
    println!("graph: {}", out_graph.display());
    println!("mapping: {}", out_mapping.display());
    Ok(())
}

/// Seed recorded by `generate` in the first line of the file, if any.
fn provenance_seed(path: &Path) -> Option<u64> {
    let mut first = String::new();
    BufReader::new(File::open(path).ok()?)
        .read_line(&mut first)
        .ok()?;
    if !first.starts_with("# powerlabel generate") {
        return None;
    }
    first
        .split_whitespace()
        .find_map(|tok| tok.strip_prefix("seed=")?.parse().ok())
}

fn cmd_report(
    inputs: &[PathBuf],
    alphas: &[(String, f64)],
    xmin: usize,
    mode: Mode,
    out: &Path,
) -> Result<()> {
    let mut w = create(out)?;
    writeln!(w, "{}", report::HEADER)?;
    let mut failures = 0;
    for input in inputs {
        let name = stem(input);
        let g = match load(input) {
            Ok(l) => l.graph,
            Err(e) => {
                eprintln!("{name}: {e:#}");
                failures += 1;
                continue;
            }
        };
        let alpha = alphas
            .iter()
            .rev()
            .find(|(n, _)| *n == name)
            .map(|&(_, a)| a)
            .or_else(|| fit_alpha_mle(&g.degree_histogram(), xmin).ok());
        let row = ExperimentReport::compute(&name, &g, alpha, mode, provenance_seed(input));
        writeln!(w, "{}", row.csv_row())?;
        println!("{}", row.csv_row());
    }
    w.flush()?;
    println!("report: {}", out.display());
    if failures > 0 {
        bail!("{failures} dataset(s) failed");
    }
    Ok(())
}
