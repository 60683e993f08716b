//! `snarklab`: build, measure, verify and convert cubic graphs and
//! semi-graphs.
//!
//! Exit codes: 0 success / all claims pass, 1 a verification claim failed,
//! 2 usage or IO error, 3 budget exhausted under `--require-exact`.

mod report;

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use snarklab_core::colouring::{self, ColouringSearch};
use snarklab_core::factors;
use snarklab_core::gadgets::{self, CompositionPlan, Gadget, ZContract};
use snarklab_core::invariants;
use snarklab_core::verify::{self, ClaimReport, ClaimStatus};
use snarklab_core::{graph6, sgf, Budget, SemiGraph};

use report::{ColourabilityBlock, InvariantBlock, MeasureBlock, Report};

#[derive(Parser)]
#[command(name = "snarklab", version, about = "exact computations on cubic semi-graphs")]
struct Cli {
    /// Worker threads for independent verification claims.
    #[arg(long, global = true, env = "SNARKLAB_JOBS", default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct BudgetArgs {
    /// Deterministic node budget for exact searches.
    #[arg(long)]
    budget_nodes: Option<u64>,
    /// Wall-clock budget in seconds for exact searches.
    #[arg(long)]
    budget_secs: Option<f64>,
}

impl BudgetArgs {
    fn budget(&self) -> Budget {
        Budget {
            max_nodes: self.budget_nodes,
            max_time: self.budget_secs.map(std::time::Duration::from_secs_f64),
        }
    }
}

#[derive(Args, Clone)]
struct InputArgs {
    /// Read a semi-graph in sgf format (`-` for stdin).
    #[arg(long, value_name = "FILE")]
    sgf: Option<String>,
    /// Read a graph in graph6 format (`-` for stdin).
    #[arg(long, value_name = "FILE")]
    graph6: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Construct gadgets, catalog graphs and compositions.
    Build {
        #[command(subcommand)]
        what: BuildWhat,
    },
    /// Compute invariants and the uncolourability measures of one graph.
    Measure {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Write the JSON report here (`-` for stdout, the default).
        #[arg(long, value_name = "FILE")]
        json: Option<String>,
        /// Also write a flat CSV row.
        #[arg(long, value_name = "FILE")]
        csv: Option<PathBuf>,
        /// Exit with status 3 if any requested measure came back as an
        /// interval instead of an exact value.
        #[arg(long)]
        require_exact: bool,
        /// Include wall-clock timing in the report (breaks byte-for-byte
        /// reproducibility).
        #[arg(long)]
        timings: bool,
    },
    /// Run the verification suites.
    Verify {
        #[command(subcommand)]
        suite: VerifyWhat,
    },
    /// Convert between sgf and graph6.
    Convert {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum)]
        to: Format,
        /// Output file (`-` for stdout, the default).
        #[arg(long, value_name = "FILE")]
        out: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Sgf,
    Graph6,
}

#[derive(Subcommand)]
enum BuildWhat {
    /// The Petersen graph.
    Petersen {
        #[command(flatten)]
        out: BuildOut,
    },
    /// The gadget X (Petersen minus two adjacent vertices).
    X {
        #[command(flatten)]
        out: BuildOut,
    },
    /// The gadget Y (two copies of X glued through a junction vertex).
    Y {
        #[command(flatten)]
        out: BuildOut,
    },
    /// A connected bipartite cubic graph of the given girth (4, 6 or 8).
    Catalog {
        #[arg(long)]
        girth: usize,
        #[command(flatten)]
        out: BuildOut,
    },
    /// Remove a 2-path from a cubic graph, leaving five semi-edges.
    MGadget {
        #[command(flatten)]
        input: InputArgs,
        /// The catalog girth to use when no input graph is given.
        #[arg(long, conflicts_with_all = ["sgf", "graph6"])]
        girth: Option<usize>,
        /// The path to remove, as three vertices u,v,w.
        #[arg(long, value_delimiter = ',', num_args = 3)]
        path: Vec<usize>,
        #[command(flatten)]
        out: BuildOut,
    },
    /// Compose two Z gadgets with X chains and Y junctions.
    Compose {
        /// Number of Y junction gadgets on the middle strand.
        #[arg(long, default_value_t = 0)]
        a: usize,
        /// Number of X gadgets on the top chain.
        #[arg(long, default_value_t = 0)]
        b: usize,
        /// Bottom chain lengths (a+1 comma-separated counts).
        #[arg(long, value_delimiter = ',', default_value = "0")]
        bottoms: Vec<usize>,
        /// A Z gadget in sgf format with ports top1,top2,mid,bot1,bot2
        /// (defaults to the built-in girth-5 gadget).
        #[arg(long, value_name = "FILE")]
        z: Option<PathBuf>,
        /// Girth parameter the Z gadget is validated against.
        #[arg(long, default_value_t = 5)]
        z_girth: usize,
        #[command(flatten)]
        out: BuildOut,
    },
    /// Compose the graph for targets r, omega and girth parameter g.
    Theorem {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        omega: usize,
        #[arg(long, default_value_t = 5)]
        g: usize,
        #[command(flatten)]
        out: BuildOut,
    },
}

#[derive(Args)]
struct BuildOut {
    /// Output file (`-` for stdout, the default).
    #[arg(long, value_name = "FILE")]
    out: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Sgf)]
    format: Format,
}

#[derive(Subcommand)]
enum VerifyWhat {
    /// The four clauses about the gadget X, with negative controls.
    LemmaX,
    /// The odd-component traversal property on the shipped host closures.
    RemarkX,
    /// The claims about the gadget Y.
    RemarkY,
    /// Cores: Petersen triples, proper cores, random-triple trichotomy.
    Cores,
    /// The inequality battery over the standard exactly-measured pool.
    Bounds,
    /// The composed-graph claim chain for given targets.
    Theorem {
        #[arg(long, default_value_t = 3)]
        r: usize,
        #[arg(long, default_value_t = 4)]
        omega: usize,
        #[arg(long, default_value_t = 5)]
        g: usize,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Every suite above (theorem at r=3, omega=4 and r=4, omega=4).
    All {
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Build { what } => build(what),
        Command::Measure { input, budget, json, csv, require_exact, timings } => {
            measure(input, budget, json, csv, require_exact, timings)
        }
        Command::Verify { suite } => verify_cmd(suite, cli.jobs),
        Command::Convert { input, to, out } => {
            let g = load_input(&input)?;
            write_graph(&g, to, out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn read_source(path: &str) -> anyhow::Result<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        Ok(std::fs::read_to_string(path)?)
    }
}

fn load_input(input: &InputArgs) -> anyhow::Result<SemiGraph> {
    match (&input.sgf, &input.graph6) {
        (Some(path), None) => Ok(sgf::parse(&read_source(path)?)?),
        (None, Some(path)) => {
            let text = read_source(path)?;
            let line = text.lines().next().unwrap_or_default();
            Ok(graph6::parse(line)?)
        }
        (None, None) => anyhow::bail!("provide an input with --sgf or --graph6"),
        (Some(_), Some(_)) => anyhow::bail!("--sgf and --graph6 are mutually exclusive"),
    }
}

fn write_out(text: &str, out: Option<&str>) -> anyhow::Result<()> {
    match out {
        None | Some("-") => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
        Some(path) => {
            std::fs::write(path, text)?;
            Ok(())
        }
    }
}

fn write_graph(g: &SemiGraph, format: Format, out: Option<&str>) -> anyhow::Result<()> {
    let text = match format {
        Format::Sgf => sgf::emit(g),
        Format::Graph6 => format!("{}\n", graph6::emit(g)?),
    };
    write_out(&text, out)
}

fn load_z(path: Option<&PathBuf>, girth_param: usize) -> anyhow::Result<ZContract> {
    match path {
        None => Ok(gadgets::z_default()),
        Some(p) => {
            let g = sgf::parse(&std::fs::read_to_string(p)?)?;
            Ok(ZContract::new(Gadget::new(g)?, girth_param)?)
        }
    }
}

fn build(what: BuildWhat) -> anyhow::Result<ExitCode> {
    let (graph, out) = match what {
        BuildWhat::Petersen { out } => (gadgets::petersen(), out),
        BuildWhat::X { out } => (gadgets::gadget_x().graph, out),
        BuildWhat::Y { out } => (gadgets::gadget_y().graph, out),
        BuildWhat::Catalog { girth, out } => (gadgets::catalog_bipartite_cubic(girth)?, out),
        BuildWhat::MGadget { input, girth, path, out } => {
            let base = match girth {
                Some(g) => gadgets::catalog_bipartite_cubic(g)?,
                None => load_input(&input)?,
            };
            anyhow::ensure!(path.len() == 3, "--path needs exactly three vertices");
            (gadgets::m_gadget(&base, (path[0], path[1], path[2]))?.graph, out)
        }
        BuildWhat::Compose { a, b, bottoms, z, z_girth, out } => {
            let plan = CompositionPlan::new(a, b, bottoms, load_z(z.as_ref(), z_girth)?)?;
            let comp = gadgets::compose(&plan)?;
            eprintln!(
                "composed graph: {} vertices, {} edges, girth {}",
                comp.graph.n(),
                comp.graph.edge_count(),
                invariants::girth(&comp.graph)
            );
            (comp.graph, out)
        }
        BuildWhat::Theorem { r, omega, g, out } => {
            let plan = gadgets::theorem_plan(r, omega, g)?;
            let comp = gadgets::compose(&plan)?;
            eprintln!(
                "composed graph for r={r}, omega={omega}, g={g}: {} vertices ({} junctions, top chain {}, bottom chains {:?})",
                comp.graph.n(),
                plan.y_count,
                plan.top_count,
                plan.bottom_counts,
            );
            (comp.graph, out)
        }
    };
    write_graph(&graph, out.format, out.out.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

fn measure(
    input: InputArgs,
    budget_args: BudgetArgs,
    json: Option<String>,
    csv: Option<PathBuf>,
    require_exact: bool,
    timings: bool,
) -> anyhow::Result<ExitCode> {
    let started = Instant::now();
    let g = load_input(&input)?;
    let budget = budget_args.budget();
    let descriptor = input
        .sgf
        .or(input.graph6)
        .unwrap_or_else(|| "stdin".to_string());

    let connected = invariants::is_connected(&g);
    let invariant_block = InvariantBlock {
        n: g.n(),
        edges: g.edge_count(),
        semi_edges: g.semi_count(),
        girth: invariants::girth(&g),
        semi_girth: invariants::semi_girth(&g),
        connected,
        bridgeless: invariants::is_bridgeless(&g),
        cubic: g.is_cubic(),
        cyclic_connectivity_at_least_4: connected
            .then(|| invariants::has_cyclic_cut_below(&g, 4).is_none()),
    };

    let mut meter = budget.meter();
    let colourable = match colouring::find_proper_colouring_budgeted(&g, &mut meter) {
        ColouringSearch::Found(_) => ColourabilityBlock { status: "exact", value: Some(true) },
        ColouringSearch::ProvedNone => ColourabilityBlock { status: "exact", value: Some(false) },
        ColouringSearch::Truncated => ColourabilityBlock { status: "bounded", value: None },
    };
    let edge_resistance = Some(colouring::edge_resistance(&g, &budget));
    let vertex_resistance = Some(colouring::vertex_resistance(&g, &budget));
    let oddness = (g.is_graph() && g.is_cubic())
        .then(|| factors::oddness(&g, &budget))
        .transpose()?;
    let defect = g.is_cubic().then(|| snarklab_core::defect::mu3(&g, &budget)).transpose()?;

    let measures = MeasureBlock {
        colourable,
        edge_resistance,
        vertex_resistance,
        oddness,
        defect,
    };
    let set = verify::MeasureSet {
        colourable: measures.colourable.value,
        edge_resistance: measures.edge_resistance.clone(),
        vertex_resistance: measures.vertex_resistance.clone(),
        oddness: measures.oddness.clone(),
        defect: measures.defect.clone(),
    };
    let claims = vec![verify::check_certificates(&g, &set)];
    let all_claims_pass = claims.iter().all(|c| c.passed());

    let any_bounded = measures.colourable.value.is_none()
        || [&measures.edge_resistance, &measures.vertex_resistance]
            .iter()
            .any(|m| m.as_ref().is_some_and(|r| !r.is_exact()))
        || measures.oddness.as_ref().is_some_and(|r| !r.is_exact())
        || measures.defect.as_ref().is_some_and(|r| !r.is_exact());

    let report = Report {
        input: descriptor,
        invariants: invariant_block,
        measures,
        claims,
        timing_ms: timings.then(|| started.elapsed().as_millis()),
    };
    let mut text = serde_json::to_string_pretty(&report)?;
    text.push('\n');
    write_out(&text, json.as_deref())?;
    if let Some(path) = csv {
        std::fs::write(path, report.csv())?;
    }
    if !all_claims_pass {
        return Ok(ExitCode::from(1));
    }
    if require_exact && any_bounded {
        return Ok(ExitCode::from(3));
    }
    Ok(ExitCode::SUCCESS)
}

fn verify_cmd(suite: VerifyWhat, jobs: usize) -> anyhow::Result<ExitCode> {
    let reports = match suite {
        VerifyWhat::LemmaX => vec![verify::verify_lemma_x()],
        VerifyWhat::RemarkX => vec![verify::verify_remark_x(&verify::remark_x_hosts())?],
        VerifyWhat::RemarkY => vec![verify::verify_remark_y()],
        VerifyWhat::Cores => vec![verify::verify_core_suite(1000)],
        VerifyWhat::Bounds => vec![verify::verify_bounds()],
        VerifyWhat::Theorem { r, omega, g, budget } => {
            vec![verify::theorem_report(r, omega, g, &budget.budget())?]
        }
        VerifyWhat::All { budget } => run_all(jobs, &budget.budget())?,
    };
    let mut failed = false;
    for r in &reports {
        print_claim(r);
        failed |= !r.passed();
    }
    Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

/// All suites, fanned out over `jobs` worker threads (claims are
/// independent; output order is fixed regardless of scheduling).
fn run_all(jobs: usize, budget: &Budget) -> anyhow::Result<Vec<ClaimReport>> {
    type Job = Box<dyn FnOnce() -> snarklab_core::Result<ClaimReport> + Send>;
    let b1 = *budget;
    let b2 = *budget;
    let tasks: Vec<Job> = vec![
        Box::new(|| Ok(verify::verify_lemma_x())),
        Box::new(|| verify::verify_remark_x(&verify::remark_x_hosts())),
        Box::new(|| Ok(verify::verify_remark_y())),
        Box::new(|| Ok(verify::verify_core_suite(1000))),
        Box::new(|| Ok(verify::verify_bounds())),
        Box::new(move || verify::theorem_report(3, 4, 5, &b1)),
        Box::new(move || verify::theorem_report(4, 4, 5, &b2)),
    ];
    let total = tasks.len();
    let queue = std::sync::Mutex::new(tasks.into_iter().enumerate().collect::<Vec<_>>());
    let results = std::sync::Mutex::new(Vec::with_capacity(total));
    std::thread::scope(|scope| {
        for _ in 0..jobs.max(1).min(total) {
            scope.spawn(|| loop {
                let job = queue.lock().unwrap().pop();
                match job {
                    Some((idx, task)) => {
                        let outcome = task();
                        results.lock().unwrap().push((idx, outcome));
                    }
                    None => break,
                }
            });
        }
    });
    let mut collected = results.into_inner().unwrap();
    collected.sort_by_key(|(idx, _)| *idx);
    collected
        .into_iter()
        .map(|(_, r)| r.map_err(anyhow::Error::from))
        .collect()
}

fn print_claim(r: &ClaimReport) {
    let tag = match r.status {
        ClaimStatus::Pass => "PASS",
        ClaimStatus::Fail => "FAIL",
        ClaimStatus::Bounded => "BOUNDED",
    };
    println!("{tag} {}", r.claim);
    for c in &r.clauses {
        let tag = match c.status {
            ClaimStatus::Pass => "pass",
            ClaimStatus::Fail => "FAIL",
            ClaimStatus::Bounded => "bounded",
        };
        if c.detail.is_empty() {
            println!("  [{tag}] {}", c.clause);
        } else {
            println!("  [{tag}] {}: {}", c.clause, c.detail);
        }
    }
}
