use std::fs::File;
use std::io::{BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use hmotif::census::census;
use hmotif::entropy::entropy_report;
use hmotif::exhaustive::basic_search;
use hmotif::merge::{build_merge_graph, component_records, components, export_dot};
use hmotif::report::{render_entropy_tsv, render_triplets, OutFormat};
use hmotif::synth::{degree_sequence, gen_chung_lu, gen_er, zipf_sequences, Generated};
use hmotif::{
    canonicalize, max_search, CanonicalHypergraph, Hypergraph, Mode, SearchConfig, TripletResult,
    Variant, Weight,
};

#[derive(Parser)]
#[command(name = "hmotif", version, about = "Size-aware hypergraph motif mining")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    Hyperlist,
    Bipartite,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Independent,
    Disjoint,
    Common,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Independent => Variant::Independent,
            VariantArg::Disjoint => Variant::Disjoint,
            VariantArg::Common => Variant::Common,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum EntropyVariant {
    Independent,
    Disjoint,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algo {
    Basic,
    Max,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormatArg {
    Json,
    Tsv,
}

impl From<OutFormatArg> for OutFormat {
    fn from(f: OutFormatArg) -> Self {
        match f {
            OutFormatArg::Json => OutFormat::Json,
            OutFormatArg::Tsv => OutFormat::Tsv,
        }
    }
}

#[derive(Args)]
struct InputArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "hyperlist")]
    format: InputFormat,
}

#[derive(Args)]
struct SearchArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum)]
    variant: VariantArg,
    #[arg(long, value_enum, default_value = "max")]
    algo: Algo,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    #[arg(long = "degree-floor", default_value_t = 0)]
    degree_floor: usize,
    #[arg(long = "out-format", value_enum, default_value = "json")]
    out_format: OutFormatArg,
    /// Output file; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Maximum-weight triplet.
    Max(SearchArgs),
    /// The k highest-weight triplets.
    Topk {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// All triplets with weight at least TAU.
    Threshold {
        #[arg(long)]
        tau: Weight,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// The k best triplets containing a query hyperedge.
    Local {
        #[arg(long)]
        query: String,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Merge triplets with weight at least TAU into connected groups.
    Merge {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        tau: Weight,
        #[arg(long, value_enum)]
        variant: VariantArg,
        #[arg(long)]
        dot: PathBuf,
        #[arg(long)]
        components: PathBuf,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// h-motif class counts of connected triplets.
    Census {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long = "max-edge-size")]
        max_edge_size: Option<usize>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long = "out-format", value_enum, default_value = "tsv")]
        out_format: OutFormatArg,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Generate a random hypergraph in hyperlist format.
    Gen {
        #[command(subcommand)]
        model: GenModel,
    },
    /// Entropy of the top-k triplets' regions.
    Entropy {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum)]
        variant: EntropyVariant,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Node, hyperedge and size statistics.
    Stats {
        #[command(flatten)]
        input: InputArgs,
    },
}

#[derive(Subcommand)]
enum GenModel {
    /// Independent memberships with probability P.
    Er {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        nodes: usize,
        #[arg(long)]
        edges: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Chung–Lu memberships matching degree and size sequences.
    ChungLu {
        #[arg(long)]
        seed: u64,
        /// Take both sequences from an existing hypergraph.
        #[arg(long, conflicts_with_all = ["nodes", "edges"])]
        like: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "hyperlist")]
        like_format: InputFormat,
        #[arg(long, required_unless_present = "like")]
        nodes: Option<usize>,
        #[arg(long, required_unless_present = "like")]
        edges: Option<usize>,
        #[arg(long = "max-size", default_value_t = 25)]
        max_size: usize,
        #[arg(long, default_value_t = 1.5)]
        exponent: f64,
        #[arg(long)]
        out: PathBuf,
    },
}

fn load(path: &Path, format: InputFormat) -> Result<Hypergraph> {
    let file = File::open(path).with_context(|| format!("opening {}", path.display()))?;
    let reader = BufReader::new(file);
    let (h, _) = match format {
        InputFormat::Hyperlist => Hypergraph::load_hyperlist(reader),
        InputFormat::Bipartite => Hypergraph::load_bipartite(reader),
    }
    .with_context(|| format!("loading {}", path.display()))?;
    Ok(h)
}

fn load_canonical(input: &InputArgs) -> Result<CanonicalHypergraph> {
    Ok(canonicalize(load(&input.input, input.format)?))
}

fn write_to(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

fn outcome(found: bool) -> ExitCode {
    if found {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    }
}

fn with_threads<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()?;
    Ok(pool.install(f))
}

fn search(args: &SearchArgs, mode: Mode) -> Result<ExitCode> {
    let h = load_canonical(&args.input)?;
    let variant = Variant::from(args.variant);
    let results: Vec<TripletResult> = match (args.algo, &mode) {
        (Algo::Basic, Mode::Max) => basic_search(&h, variant)?.into_iter().collect(),
        (Algo::Basic, _) => bail!("--algo basic supports only the `max` command"),
        (Algo::Max, _) => {
            let cfg = SearchConfig::new(variant, mode)
                .threads(args.threads)
                .degree_floor(args.degree_floor);
            max_search(&h, &cfg)?
        }
    };
    write_to(
        args.out.as_deref(),
        &render_triplets(&results, &h, args.out_format.into()),
    )?;
    Ok(outcome(!results.is_empty()))
}

fn generated(g: Generated, out: &Path) -> Result<ExitCode> {
    if g.dropped_edges > 0 {
        log::warn!("dropped {} empty generated hyperedge(s)", g.dropped_edges);
    }
    let mut text = Vec::new();
    g.hypergraph.write_hyperlist(&mut text)?;
    std::fs::write(out, text).with_context(|| format!("writing {}", out.display()))?;
    Ok(outcome(g.hypergraph.edge_count() > 0))
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Max(args) => search(&args, Mode::Max),
        Command::Topk { k, search: args } => search(&args, Mode::TopK(k)),
        Command::Threshold { tau, search: args } => search(&args, Mode::Threshold(tau)),
        Command::Local {
            query,
            k,
            search: args,
        } => search(&args, Mode::Local { query, k }),
        Command::Merge {
            input,
            tau,
            variant,
            dot,
            components: comp_path,
            threads,
        } => {
            let h = load_canonical(&input)?;
            let cfg = SearchConfig::new(variant.into(), Mode::Threshold(tau)).threads(threads);
            let triplets = max_search(&h, &cfg)?;
            if triplets.is_empty() {
                write_to(Some(&dot), "graph merge {\n}\n")?;
                write_to(Some(&comp_path), "[]\n")?;
                return Ok(outcome(false));
            }
            let g = build_merge_graph(&triplets)?;
            write_to(Some(&dot), &export_dot(&g, &h))?;
            let records = component_records(&components(&g), &h);
            write_to(
                Some(&comp_path),
                &(serde_json::to_string_pretty(&records)? + "\n"),
            )?;
            Ok(outcome(true))
        }
        Command::Census {
            input,
            max_edge_size,
            out,
            out_format,
            threads,
        } => {
            let h = load(&input.input, input.format)?;
            let report = with_threads(threads, || census(&h, max_edge_size))?;
            let text = match OutFormat::from(out_format) {
                OutFormat::Tsv => report.to_tsv(),
                OutFormat::Json => serde_json::to_string_pretty(&report.to_json())? + "\n",
            };
            write_to(Some(&out), &text)?;
            Ok(outcome(report.connected_triplets > 0))
        }
        Command::Gen { model } => match model {
            GenModel::Er {
                seed,
                nodes,
                edges,
                p,
                out,
            } => generated(gen_er(nodes, edges, p, seed)?, &out),
            GenModel::ChungLu {
                seed,
                like,
                like_format,
                nodes,
                edges,
                max_size,
                exponent,
                out,
            } => {
                let (degrees, sizes) = match like {
                    Some(path) => degree_sequence(&load(&path, like_format)?),
                    None => zipf_sequences(
                        nodes.expect("required by clap"),
                        edges.expect("required by clap"),
                        max_size,
                        exponent,
                        seed,
                    )?,
                };
                generated(gen_chung_lu(&degrees, &sizes, seed)?, &out)
            }
        },
        Command::Entropy {
            input,
            k,
            variant,
            out,
            threads,
        } => {
            let h = load_canonical(&input)?;
            let variant = match variant {
                EntropyVariant::Independent => Variant::Independent,
                EntropyVariant::Disjoint => Variant::Disjoint,
            };
            let results = max_search(
                &h,
                &SearchConfig::new(variant, Mode::TopK(k)).threads(threads),
            )?;
            let rows = entropy_report(&results, variant)?;
            write_to(Some(&out), &render_entropy_tsv(&rows, &h))?;
            Ok(outcome(!rows.is_empty()))
        }
        Command::Stats { input } => {
            let h = load(&input.input, input.format)?;
            write_to(None, &(serde_json::to_string(&h.stats())? + "\n"))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
