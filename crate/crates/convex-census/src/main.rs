//! Command-line surface over the library: exact counting, enumeration,
//! sequence tables, extremal constructions, exhaustive search, and
//! certified inequality verdicts, with deterministic JSON/NDJSON output.
//!
//! Results go to standard output (or `--output`); diagnostics go to
//! standard error. Exit code 0 means success (validation findings are
//! data, not failures), 1 a domain error (unreadable or invalid input,
//! out-of-range parameters), and 2 a usage error.

use std::io::{BufWriter, Read, Write};
use std::ops::ControlFlow;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::One;

use convex_census::certify::{
    verify_fact_capped, verify_lambda_bound, verify_theorem2_capped, CertifiedVerdict,
    DEFAULT_PRECISION_BITS, MAX_LAMBDA_BOUND_K,
};
use convex_census::constructions::{balanced_triangulation, concat_construction, convexify};
use convex_census::counting::{
    count_convex_paths, count_convex_polygons, enumerate_convex_polygons,
};
use convex_census::maxsearch::maxsearch;
use convex_census::oracle::{brute_count, brute_count_convex_chains};
use convex_census::pslg::{validate, Pslg, Triangulation};
use convex_census::recurrences::{
    argmax_split, ccx_table, lambda_seq, p_table, SequenceTable,
};
use convex_census::Rat;

/// Environment variable overriding the certification precision cap (bits).
const PRECISION_ENV: &str = "CONVEX_CENSUS_PRECISION_BITS";

#[derive(Parser)]
#[command(
    name = "convex-census",
    version,
    about = "Exact counting and certification of convex polygons in planar straight-line graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Input graph as JSON (`{"vertices": [[x, y], ...], "edges": [[u, v], ...]}`);
    /// defaults to standard input.
    #[arg(long, global = true, value_name = "PATH")]
    input: Option<PathBuf>,
    /// Output destination; defaults to standard output.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Count the convex polygons of the input graph: `{"count": "..."}`.
    Count,
    /// Count closed-convex chains between two vertices: `{"count": "..."}`.
    Paths {
        /// Start vertex index.
        #[arg(long, value_name = "A")]
        from: u32,
        /// End vertex index.
        #[arg(long, value_name = "B")]
        to: u32,
    },
    /// List every convex polygon as NDJSON `{"cycle": [...]}` lines, each
    /// cycle starting at its least vertex and running counterclockwise.
    Enumerate,
    /// Count by brute-force enumeration (small graphs only): the polygon
    /// count, or the closed-convex chain count with `--from`/`--to`.
    Oracle {
        /// Start vertex index (needs --to).
        #[arg(long, value_name = "A", requires = "to")]
        from: Option<u32>,
        /// End vertex index (needs --from).
        #[arg(long, value_name = "B", requires = "from")]
        to: Option<u32>,
    },
    /// Print a sequence table: `{"name": ..., "start": ..., "values": [...]}`.
    Tables {
        /// Which sequence to print.
        #[arg(long, value_enum)]
        name: TableName,
        /// Largest index to compute (sequences start at n = 2).
        #[arg(long, value_name = "N")]
        max: u32,
    },
    /// Print the squaring-recurrence table lambda_0..lambda_K.
    Lambda {
        /// Largest index to compute.
        #[arg(long, value_name = "K")]
        max: u32,
    },
    /// List the splits attaining the product recurrence's maximum at n.
    ArgmaxSplit {
        /// The index to split.
        #[arg(long)]
        n: u32,
    },
    /// Certify numeric inequalities; one NDJSON verdict object per claim.
    Certify(CertifyTarget),
    /// Generate the balanced binary triangulation on 2^k + 1 arc points.
    GenTk {
        /// Depth of the balanced construction.
        #[arg(long)]
        k: u32,
    },
    /// Generate the chained lower-bound construction: m copies of the
    /// depth-k balanced block sharing consecutive endpoints.
    GenConcat {
        /// Depth of each balanced block.
        #[arg(long)]
        k: u32,
        /// Number of chained blocks.
        #[arg(long)]
        m: u32,
    },
    /// Map a triangulation to convex position around one bounded face:
    /// first the convex-position graph, then the edge-image table.
    Convexify {
        /// Index of the bounded face to preserve.
        #[arg(long, value_name = "I")]
        face: usize,
    },
    /// Exhaustively maximize the polygon count over all triangulations of
    /// the convex n-gon: a summary line, then the maximizing graph.
    Maxsearch {
        /// Number of polygon vertices (3..=12).
        #[arg(long)]
        n: u32,
    },
    /// Check the input graph for geometric violations; findings are data
    /// (`{"valid": ..., "violations": [...]}`), not errors.
    Validate,
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "verbatim")]
enum TableName {
    /// Maximum convex-path counts between adjacent vertices.
    P,
    /// Product-recurrence bound on convex-polygon counts in convex position.
    Cx,
}

/// Exactly one certification target must be selected.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct CertifyTarget {
    /// Verify all six numeric facts.
    #[arg(long)]
    all: bool,
    /// Verify a single numeric fact by id (1..=6).
    #[arg(long, value_name = "I")]
    fact: Option<u32>,
    /// Verify the exponential growth bound for all n up to N.
    #[arg(long, value_name = "N")]
    theorem2: Option<u32>,
    /// Verify the decimal bounds on lambda_k for all k up to K.
    #[arg(long, value_name = "K")]
    lambda_bound: Option<u32>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<()> {
    let mut out = open_output(cli.output.as_deref())?;
    let input = cli.input.as_deref();
    match cli.command {
        Command::Count => {
            let g = read_graph(input)?;
            let count = count_convex_polygons(&g)?;
            writeln!(out, "{}", count_json(&count.to_string()))?;
        }
        Command::Paths { from, to } => {
            let g = read_graph(input)?;
            let count = count_convex_paths(&g, from, to)?;
            writeln!(out, "{}", count_json(&count.to_string()))?;
        }
        Command::Enumerate => {
            let g = read_graph(input)?;
            let mut io_err = None;
            enumerate_convex_polygons(&g, |polygon| {
                let line = serde_json::json!({ "cycle": polygon.cycle() });
                match writeln!(out, "{line}") {
                    Ok(()) => ControlFlow::Continue(()),
                    Err(e) => {
                        io_err = Some(e);
                        ControlFlow::Break(())
                    }
                }
            })?;
            if let Some(e) = io_err {
                return Err(e).context("writing the enumeration");
            }
        }
        Command::Oracle { from, to } => {
            let g = read_graph(input)?;
            let count = match (from, to) {
                (Some(a), Some(b)) => brute_count_convex_chains(&g, a, b)?,
                (None, None) => brute_count(&g)?,
                _ => unreachable!("clap enforces that --from and --to come together"),
            };
            writeln!(out, "{}", count_json(&count.to_string()))?;
        }
        Command::Tables { name, max } => {
            if max < 2 {
                bail!("--max must be at least 2: the sequences start at n = 2");
            }
            let table = match name {
                TableName::P => p_table(max),
                TableName::Cx => ccx_table(max),
            };
            writeln!(out, "{}", table_json(&table))?;
        }
        Command::Lambda { max } => {
            let table = lambda_seq(max)?;
            writeln!(out, "{}", table_json(&table))?;
        }
        Command::ArgmaxSplit { n } => {
            if n < 3 {
                bail!("--n must be at least 3: no split exists below n = 3");
            }
            let splits: Vec<[u32; 2]> =
                argmax_split(n).into_iter().map(|(a, b)| [a, b]).collect();
            writeln!(out, "{}", serde_json::json!({ "n": n, "splits": splits }))?;
        }
        Command::Certify(target) => {
            let cap = precision_cap()?;
            for verdict in certification_verdicts(&target, cap)? {
                writeln!(out, "{}", verdict_json(&verdict))?;
            }
        }
        Command::GenTk { k } => {
            let t = balanced_triangulation(k)?;
            writeln!(out, "{}", t.pslg().to_json_string())?;
        }
        Command::GenConcat { k, m } => {
            let t = concat_construction(k, m)?;
            writeln!(out, "{}", t.pslg().to_json_string())?;
        }
        Command::Convexify { face } => {
            let g = read_graph(input)?;
            let t = Triangulation::new(g).context("the input graph is not a triangulation")?;
            let (mapped, map) = convexify(&t, face)?;
            writeln!(out, "{}", mapped.to_json_string())?;
            let anchor = map.anchor();
            let edge_images: Vec<serde_json::Value> = map
                .edge_images()
                .iter()
                .map(|((p, q), path)| serde_json::json!({ "edge": [p, q], "path": path }))
                .collect();
            let table = serde_json::json!({
                "anchor": [rational_string(&anchor.x), rational_string(&anchor.y)],
                "placement": map.placement(),
                "edge_images": edge_images,
            });
            writeln!(out, "{table}")?;
        }
        Command::Maxsearch { n } => {
            let (max, best) = maxsearch(n)?;
            writeln!(
                out,
                "{}",
                serde_json::json!({ "n": n, "max": max.to_string() })
            )?;
            writeln!(out, "{}", best.pslg().to_json_string())?;
        }
        Command::Validate => {
            let g = read_graph(input)?;
            let report = validate(&g);
            let violations: Vec<String> =
                report.violations.iter().map(|v| v.to_string()).collect();
            writeln!(
                out,
                "{}",
                serde_json::json!({ "valid": report.is_valid(), "violations": violations })
            )?;
        }
    }
    out.flush().context("flushing the output")?;
    Ok(())
}

/// Resolves the certification targets into verdicts, in a fixed order.
fn certification_verdicts(
    target: &CertifyTarget,
    cap: u32,
) -> anyhow::Result<Vec<CertifiedVerdict>> {
    if target.all {
        return (1..=6)
            .map(|id| verify_fact_capped(id, cap).map_err(Into::into))
            .collect();
    }
    if let Some(id) = target.fact {
        return Ok(vec![verify_fact_capped(id, cap)?]);
    }
    if let Some(n) = target.theorem2 {
        if n < 2 {
            bail!("--theorem2 needs N >= 2: the growth bound starts at n = 2");
        }
        return Ok(vec![verify_theorem2_capped(n, cap)]);
    }
    if let Some(k) = target.lambda_bound {
        if k > MAX_LAMBDA_BOUND_K {
            bail!("--lambda-bound is capped at K = {MAX_LAMBDA_BOUND_K}, got {k}");
        }
        return Ok(vec![verify_lambda_bound(k)]);
    }
    unreachable!("clap requires exactly one certification target")
}

/// The certification precision cap: the override from the environment, or
/// the library default.
fn precision_cap() -> anyhow::Result<u32> {
    match std::env::var(PRECISION_ENV) {
        Ok(raw) => {
            let bits: u32 = raw.trim().parse().map_err(|_| {
                anyhow::anyhow!("{PRECISION_ENV} must be a positive integer, got {raw:?}")
            })?;
            if bits == 0 {
                bail!("{PRECISION_ENV} must be positive");
            }
            Ok(bits)
        }
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_PRECISION_BITS),
        Err(e) => Err(e).context(format!("reading {PRECISION_ENV}")),
    }
}

fn count_json(decimal: &str) -> String {
    serde_json::json!({ "count": decimal }).to_string()
}

fn table_json(table: &SequenceTable) -> String {
    let values: Vec<String> = table.values.iter().map(|v| v.to_string()).collect();
    serde_json::json!({
        "name": table.name.to_string(),
        "start": table.start,
        "values": values,
    })
    .to_string()
}

fn verdict_json(verdict: &CertifiedVerdict) -> String {
    serde_json::json!({
        "claim": verdict.claim,
        "status": verdict.status.to_string(),
        "precision_bits": verdict.precision_bits,
    })
    .to_string()
}

/// Formats a rational as `"p/q"`, or a plain integer when whole.
fn rational_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn read_graph(input: Option<&Path>) -> anyhow::Result<Pslg> {
    let text = match input {
        Some(path) => std::fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))?,
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .context("reading standard input")?;
            buf
        }
    };
    Pslg::from_json_str(&text).context("parsing the input graph").map_err(Into::into)
}

fn open_output(output: Option<&Path>) -> anyhow::Result<Box<dyn Write>> {
    Ok(match output {
        Some(path) => {
            let file = std::fs::File::create(path)
                .with_context(|| format!("creating {}", path.display()))?;
            Box::new(BufWriter::new(file))
        }
        None => Box::new(BufWriter::new(std::io::stdout())),
    })
}
