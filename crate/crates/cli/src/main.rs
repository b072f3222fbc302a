mod gadget;
mod record;

use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use trilist_core::graph::load_edgelist;
use trilist_core::io::{read_ordering, write_ordering, write_triangles};
use trilist_core::listing::{list_view_parallel, CollectSink, CountSink, ListingStats};
use trilist_core::ordering::{
    compute_order, core_decomposition, cost_report, MethodParams, NeighConfig,
};
use trilist_core::{Algorithm, Graph, Method, Ordering, OrientedView};

use record::{ms, BenchRecord, CostRow};

#[derive(Parser)]
#[command(name = "trilist", version, about = "Order-oriented triangle listing")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    /// Count triangles; list_ms covers the listing call only.
    Mere,
    /// Materialise every triangle; all three phases are timed.
    Full,
}

impl Mode {
    fn name(self) -> &'static str {
        match self {
            Mode::Mere => "mere",
            Mode::Full => "full",
        }
    }
}

#[derive(clap::Args, Clone, Copy)]
struct OrderArgs {
    /// Neigh stops once a sweep gains less than this fraction of C+-.
    #[arg(long, default_value_t = 0.01)]
    eps: f64,
    #[arg(long, default_value_t = 50)]
    max_sweeps: usize,
    /// Seed for the random ordering.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl OrderArgs {
    fn params(self) -> MethodParams {
        MethodParams {
            seed: self.seed,
            neigh: NeighConfig {
                epsilon: self.eps,
                max_sweeps: self.max_sweeps,
            },
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute an ordering, write it as `label rank` lines and print its costs.
    Order {
        graph: PathBuf,
        method: Method,
        #[command(flatten)]
        args: OrderArgs,
        /// Ordering file; defaults to `<graph>.<method>.order`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List triangles under one ordering and print a benchmark record.
    List {
        graph: PathBuf,
        /// Ordering method to compute.
        #[arg(long, conflicts_with = "order_file")]
        order: Option<Method>,
        /// Precomputed ordering file.
        #[arg(long)]
        order_file: Option<PathBuf>,
        #[arg(long, default_value = "apm")]
        algo: Algorithm,
        #[arg(long, value_enum, default_value_t = Mode::Mere)]
        mode: Mode,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Write `u v w` triangle lines here (implies materialising them).
        #[arg(long)]
        triangles: Option<PathBuf>,
        #[command(flatten)]
        args: OrderArgs,
    },
    /// Every ordering × algorithm × repeat, one CSV row each.
    Bench {
        graph: PathBuf,
        /// Comma-separated methods; all by default.
        #[arg(long, value_delimiter = ',')]
        orderings: Option<Vec<Method>>,
        /// Comma-separated algorithms; both by default.
        #[arg(long, value_delimiter = ',')]
        algos: Option<Vec<Algorithm>>,
        #[arg(long, default_value_t = 3)]
        repeats: usize,
        #[arg(long, value_enum, default_value_t = Mode::Mere)]
        mode: Mode,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[command(flatten)]
        args: OrderArgs,
    },
    /// Build a reduction gadget and optionally verify it exhaustively.
    Gadget {
        kind: gadget::Kind,
        /// Instance file, or `d` for `ld`, or an edge list for `weight2plain`.
        instance: String,
        #[arg(long)]
        verify: bool,
        /// Vertex weights for `weight2plain`: `label weight` per line.
        #[arg(long)]
        weights: Option<PathBuf>,
        /// Output prefix; writes `<prefix>.edges` and `<prefix>.sidecar`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the costs of an existing ordering file.
    Cost { graph: PathBuf, ordering: PathBuf },
}

fn open(path: &Path) -> Result<BufReader<File>> {
    let f = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
    Ok(BufReader::new(f))
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    let f = File::create(path).with_context(|| format!("cannot create {}", path.display()))?;
    Ok(BufWriter::new(f))
}

fn load(path: &Path) -> Result<Graph> {
    let (g, _) =
        load_edgelist(open(path)?).with_context(|| format!("reading {}", path.display()))?;
    Ok(g)
}

fn dataset_name(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

struct Listed {
    stats: ListingStats,
    triangles: Option<Vec<[u32; 3]>>,
}

fn run_listing(
    g: &Graph,
    order: &Ordering,
    algo: Algorithm,
    threads: usize,
    collect: bool,
) -> Result<Listed> {
    let view = OrientedView::new(g, order)?;
    if collect {
        let mut sink = CollectSink::default();
        let stats = list_view_parallel(&view, order, algo, threads, &mut sink);
        Ok(Listed {
            stats,
            triangles: Some(sink.triangles),
        })
    } else {
        let mut sink = CountSink::default();
        let stats = list_view_parallel(&view, order, algo, threads, &mut sink);
        Ok(Listed {
            stats,
            triangles: None,
        })
    }
}

fn cmd_order(graph: &Path, method: Method, args: OrderArgs, out: Option<PathBuf>) -> Result<()> {
    let g = load(graph)?;
    let order = compute_order(&g, method, &args.params());
    let out = out.unwrap_or_else(|| {
        let mut p = graph.as_os_str().to_owned();
        p.push(format!(".{method}.order"));
        PathBuf::from(p)
    });
    let mut w = create(&out)?;
    write_ordering(&g, &order, &mut w)?;
    w.flush()?;
    if method == Method::Core {
        let core = core_decomposition(&g);
        let peel = core.peel_degree.iter().copied().max().unwrap_or(0);
        eprintln!("degeneracy {} (max peel degree {peel})", core.degeneracy);
    }
    let report = cost_report(&g, &order)?;
    CostRow::new(&dataset_name(graph), method.name(), &g, &report).print()?;
    Ok(())
}

fn cmd_cost(graph: &Path, ordering: &Path) -> Result<()> {
    let g = load(graph)?;
    let order = read_ordering(&g, open(ordering)?)
        .with_context(|| format!("reading {}", ordering.display()))?;
    let report = cost_report(&g, &order)?;
    CostRow::new(&dataset_name(graph), &dataset_name(ordering), &g, &report).print()?;
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_list(
    graph: &Path,
    order: Option<Method>,
    order_file: Option<PathBuf>,
    algo: Algorithm,
    mode: Mode,
    threads: usize,
    triangles: Option<PathBuf>,
    args: OrderArgs,
) -> Result<()> {
    if threads == 0 {
        bail!("--threads must be at least 1");
    }
    let t = Instant::now();
    let g = load(graph)?;
    let load_time = t.elapsed();

    let t = Instant::now();
    let (ordering, label) = match (&order_file, order) {
        (Some(path), _) => {
            let o = read_ordering(&g, open(path)?)
                .with_context(|| format!("reading {}", path.display()))?;
            (o, dataset_name(path))
        }
        (None, m) => {
            let m = m.unwrap_or(Method::Core);
            (compute_order(&g, m, &args.params()), m.name().to_string())
        }
    };
    let order_time = t.elapsed();

    let collect = mode == Mode::Full || triangles.is_some();
    let listed = run_listing(&g, &ordering, algo, threads, collect)?;
    let report = cost_report(&g, &ordering)?;
    if let (Some(path), Some(tris)) = (&triangles, &listed.triangles) {
        let mut w = create(path)?;
        write_triangles(&g, tris, &mut w)?;
        w.flush()?;
    }
    let rec = BenchRecord {
        dataset: dataset_name(graph),
        algo: algo.name().into(),
        ordering: label,
        mode: mode.name().into(),
        threads,
        n: g.n(),
        m: g.m(),
        c_pp: report.c_pp,
        c_pm: report.c_pm,
        inner_ops: listed.stats.inner_ops,
        triangles: listed.stats.triangle_count,
        load_ms: ms(load_time),
        order_ms: ms(order_time),
        list_ms: ms(listed.stats.wall_time),
    };
    record::write_records(io::stdout().lock(), &[rec])?;
    Ok(())
}

fn cmd_bench(
    graph: &Path,
    orderings: Option<Vec<Method>>,
    algos: Option<Vec<Algorithm>>,
    repeats: usize,
    mode: Mode,
    threads: usize,
    args: OrderArgs,
) -> Result<()> {
    if threads == 0 {
        bail!("--threads must be at least 1");
    }
    let t = Instant::now();
    let g = load(graph)?;
    let load_time = t.elapsed();
    let dataset = dataset_name(graph);
    let orderings = orderings.unwrap_or_else(|| Method::ALL.to_vec());
    let algos = algos.unwrap_or_else(|| Algorithm::ALL.to_vec());
    let mut out = record::writer(io::stdout().lock());
    for &method in &orderings {
        for &algo in &algos {
            for _ in 0..repeats {
                let t = Instant::now();
                let order = compute_order(&g, method, &args.params());
                let order_time = t.elapsed();
                let listed = run_listing(&g, &order, algo, threads, mode == Mode::Full)?;
                let report = cost_report(&g, &order)?;
                out.serialize(BenchRecord {
                    dataset: dataset.clone(),
                    algo: algo.name().into(),
                    ordering: method.name().into(),
                    mode: mode.name().into(),
                    threads,
                    n: g.n(),
                    m: g.m(),
                    c_pp: report.c_pp,
                    c_pm: report.c_pm,
                    inner_ops: listed.stats.inner_ops,
                    triangles: listed.stats.triangle_count,
                    load_ms: ms(load_time),
                    order_ms: ms(order_time),
                    list_ms: ms(listed.stats.wall_time),
                })?;
            }
            out.flush()?;
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Order {
            graph,
            method,
            args,
            out,
        } => cmd_order(&graph, method, args, out).map(|_| true),
        Command::Cost { graph, ordering } => cmd_cost(&graph, &ordering).map(|_| true),
        Command::List {
            graph,
            order,
            order_file,
            algo,
            mode,
            threads,
            triangles,
            args,
        } => cmd_list(
            &graph, order, order_file, algo, mode, threads, triangles, args,
        )
        .map(|_| true),
        Command::Bench {
            graph,
            orderings,
            algos,
            repeats,
            mode,
            threads,
            args,
        } => cmd_bench(&graph, orderings, algos, repeats, mode, threads, args).map(|_| true),
        Command::Gadget {
            kind,
            instance,
            verify,
            weights,
            out,
        } => gadget::run(kind, &instance, verify, weights.as_deref(), out.as_deref()),
    }
}

/// Output piped into `head` and closed early.
fn broken_pipe(e: &anyhow::Error) -> bool {
    e.chain().any(|c| {
        let io_err = c.downcast_ref::<io::Error>().or_else(|| {
            match c.downcast_ref::<csv::Error>().map(csv::Error::kind) {
                Some(csv::ErrorKind::Io(e)) => Some(e),
                _ => None,
            }
        });
        io_err.is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe)
    })
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) if broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
