mod reproduce;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crcodes::constructions::{RulePartition, DEFAULT_SAMPLES};
use crcodes::cr::{is_independent, verify_cr, CodeFile};
use crcodes::enumerate::{enumerate_graphs, graph_of, ProjectivePointSet};
use crcodes::feasibility::{enumerate_putative, FeasibilityOptions};
use crcodes::graph::verify_covering;
use crcodes::search::{
    search_exact, search_heuristic, HeuristicOptions, SearchOutcome, SearchStatus, SearchTarget, Strategy,
    DEFAULT_MOVE_BUDGET, DEFAULT_NODE_BUDGET,
};
use crcodes::{CheckMatrix, Error, FieldOrder, Graph, IntersectionArray, Spectrum, DEFAULT_BUDGET};

/// Completely regular codes in Cayley graphs over GF(2) and GF(3).
#[derive(Parser, Debug)]
#[command(name = "crcodes", version)]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = "CRCODES_THREADS")]
    threads: Option<usize>,

    /// Field order for input files without a `# q=` header.
    #[arg(long, global = true, default_value_t = 3)]
    q: u32,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Order, degree, connectivity and diameter of G(H).
    Build(MatrixArg),
    /// Eigenvalues of G(H) with multiplicities.
    Spectrum(MatrixArg),
    /// Strongly regular parameters of G(H), if any.
    Srg {
        #[command(flatten)]
        m: MatrixArg,
        /// Use the complement graph.
        #[arg(long)]
        complement: bool,
    },
    /// Check that the syndrome map H(n,q) → G(H) is a covering.
    Covering {
        #[command(flatten)]
        m: MatrixArg,
        /// Check every vertex of H(n,q) regardless of size.
        #[arg(long)]
        exhaustive: bool,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Intersection array and quotient matrix of a code.
    Verify {
        #[command(flatten)]
        m: MatrixArg,
        #[arg(long)]
        code: PathBuf,
    },
    /// Search G(H) for a code with a given intersection array.
    Search(SearchArgs),
    /// Putative intersection arrays for G(H) or for given graph data.
    Feasible(FeasibleArgs),
    /// Extension, inflation, splitting and covering lifts.
    Construct(ConstructArgs),
    /// Point sets of PG(k−1,q) up to linear equivalence.
    Classify(ClassifyArgs),
    /// Re-derive the bundled results and print the summary table.
    Reproduce {
        #[command(flatten)]
        sampling: Sampling,
        /// Search budget per table row (heuristic moves).
        #[arg(long, env = "CRCODES_BUDGET", default_value_t = DEFAULT_MOVE_BUDGET)]
        budget: u64,
    },
}

#[derive(Args, Debug)]
struct MatrixArg {
    /// Check matrix file (rows of digits; optional `# q=` header).
    #[arg(long)]
    matrix: PathBuf,
}

#[derive(Args, Debug)]
struct Sampling {
    /// Random vertices checked when exhaustive checking is too large.
    #[arg(long, default_value_t = DEFAULT_SAMPLES)]
    samples: u64,
    #[arg(long, env = "CRCODES_SEED", default_value_t = 1)]
    seed: u64,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StrategyArg {
    Tabu,
    Annealing,
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[command(flatten)]
    m: MatrixArg,
    /// Target intersection array, e.g. "{21,4;2,21}".
    #[arg(long)]
    array: IntersectionArray,
    /// Complete backtracking search (default).
    #[arg(long, conflicts_with = "heuristic")]
    exact: bool,
    /// Seeded local search.
    #[arg(long)]
    heuristic: bool,
    #[arg(long, value_enum, default_value = "tabu")]
    strategy: StrategyArg,
    #[arg(long, env = "CRCODES_SEED", default_value_t = 1)]
    seed: u64,
    /// Search nodes (exact) or moves (heuristic).
    #[arg(long, env = "CRCODES_BUDGET")]
    budget: Option<u64>,
    /// Require the code to be an independent set.
    #[arg(long)]
    independent: bool,
}

#[derive(Args, Debug)]
struct FeasibleArgs {
    #[arg(long, required_unless_present_all = ["degree", "order", "eigenvalues"])]
    matrix: Option<PathBuf>,
    /// Graph degree (instead of --matrix).
    #[arg(long, requires_all = ["order", "eigenvalues"])]
    degree: Option<u32>,
    /// Number of vertices (instead of --matrix).
    #[arg(long)]
    order: Option<u64>,
    /// Distinct eigenvalues, comma separated (instead of --matrix).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    eigenvalues: Option<Vec<i64>>,
    #[arg(long)]
    rho_max: usize,
    /// Require b non-increasing and c non-decreasing (the default).
    #[arg(long, conflicts_with = "no_monotone")]
    strict_monotone: bool,
    #[arg(long)]
    no_monotone: bool,
    /// Covering radius one: keep arrays whose second eigenvalue is this.
    #[arg(long, allow_hyphen_values = true)]
    eigenvalue: Option<i64>,
    /// Covering radius one: list both {b;c} and its complement {c;b}.
    #[arg(long)]
    both_orders: bool,
    /// Intersection array of the graph, for distance-quotient integrality.
    #[arg(long)]
    drg: Option<IntersectionArray>,
    /// Hamming length for the τ column (default: columns of --matrix).
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Op {
    Extend,
    Inflate,
    Split,
    Lift,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    op: Op,
    /// Input rule file (as written by this command).
    #[arg(long, conflicts_with_all = ["matrix", "hamming"])]
    rule: Option<PathBuf>,
    /// Check matrix: the code lives in G(H) and is lifted to H(n,q) first.
    #[arg(long)]
    matrix: Option<PathBuf>,
    /// The code lives in H(n,q), words of length n.
    #[arg(long)]
    hamming: bool,
    #[arg(long)]
    code: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    t: usize,
    #[arg(long, default_value_t = 2)]
    s: usize,
    #[arg(long, default_value_t = 1)]
    i: usize,
    /// Write cell 0 as a code file instead of the rule.
    #[arg(long)]
    explicit: bool,
    /// Re-check the predicted quotient matrix on H(n,q).
    #[arg(long)]
    verify: bool,
    #[command(flatten)]
    sampling: Sampling,
}

#[derive(Args, Debug)]
struct ClassifyArgs {
    #[arg(long)]
    k: usize,
    /// Number of points (columns).
    #[arg(long)]
    n: usize,
    /// Only sets spanning GF(q)^k.
    #[arg(long)]
    connected: bool,
    /// Only strongly regular graphs.
    #[arg(long)]
    srg: bool,
    /// Only graphs containing a code with this array (exact search).
    #[arg(long)]
    contains: Option<IntersectionArray>,
    #[arg(long, env = "CRCODES_BUDGET", default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
    /// Accepted for compatibility; enumeration is never gated.
    #[arg(long, hide = true)]
    heavy: bool,
}

/// Failures mapped to exit codes.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Verification(String),
    Budget(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Verification(_) => 2,
            Failure::Budget(_) => 3,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } | Error::NotExplicit => Failure::Budget(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = std::result::Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let (Failure::Usage(m) | Failure::Verification(m) | Failure::Budget(m)) = &f;
            eprintln!("error: {m}");
            ExitCode::from(f.code())
        }
    }
}

/// Reads a file, falling back to a bundled fixture of that name.
fn read(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).or_else(|e| {
        path.to_str()
            .and_then(|name| crcodes::fixtures::text(name).ok())
            .map(str::to_string)
            .ok_or_else(|| Failure::Usage(format!("{}: {e}", path.display())))
    })
}

fn field(q: u32) -> std::result::Result<FieldOrder, Failure> {
    Ok(FieldOrder::new(q)?)
}

fn matrix(path: &Path, q: u32) -> std::result::Result<CheckMatrix, Failure> {
    Ok(CheckMatrix::parse(&read(path)?, field(q)?)?)
}

fn graph(path: &Path, q: u32) -> std::result::Result<Graph, Failure> {
    Ok(Graph::syndrome(&matrix(path, q)?))
}

fn run(cli: Cli) -> Outcome {
    let q = cli.q;
    match cli.command {
        Command::Build(m) => {
            let g = graph(&m.matrix, q)?;
            println!("vertices: {}", g.order());
            println!("degree: {}", g.degree());
            println!("connected: {}", if g.is_connected() { "yes" } else { "no" });
            match g.diameter() {
                Some(d) => println!("diameter: {d}"),
                None => println!("diameter: infinite"),
            }
            Ok(())
        }
        Command::Spectrum(m) => {
            println!("{}", graph(&m.matrix, q)?.spectrum());
            Ok(())
        }
        Command::Srg { m, complement } => {
            let mut g = graph(&m.matrix, q)?;
            if complement {
                g = g.complement();
            }
            match g.srg_parameters() {
                Some(p) => {
                    println!("{p}");
                    Ok(())
                }
                None => Err(Failure::Verification("graph is not strongly regular".into())),
            }
        }
        Command::Covering { m, exhaustive, sampling } => {
            let h = matrix(&m.matrix, q)?;
            let budget = if exhaustive { u64::MAX } else { DEFAULT_BUDGET };
            let check = verify_covering(&h, budget, sampling.samples, sampling.seed);
            let how = if check.exhaustive { "exhaustive" } else { "sampled" };
            match check.violation {
                None => {
                    println!(
                        "covering: yes ({how}, {} vertices of H({},{}))",
                        check.vertices_checked,
                        h.n(),
                        h.field().get()
                    );
                    Ok(())
                }
                Some(w) => Err(Failure::Verification(format!("not a covering at {w}"))),
            }
        }
        Command::Verify { m, code } => {
            let h = matrix(&m.matrix, q)?;
            let file = CodeFile::parse(&read(&code)?, h.field())?;
            if file.k != h.k() {
                return Err(Failure::Usage(format!("code words have length {}, matrix has {} rows", file.k, h.k())));
            }
            let g = Graph::syndrome(&h);
            match verify_cr(&g, &file.code)? {
                Some(r) => {
                    println!("{}", r.array);
                    println!("quotient: {}", r.quotient);
                    let sizes: Vec<String> = r.cell_sizes.iter().map(u64::to_string).collect();
                    println!("cells: ({})", sizes.join(","));
                    println!("independent: {}", if is_independent(&g, &file.code)? { "yes" } else { "no" });
                    Ok(())
                }
                None => Err(Failure::Verification("code is not completely regular".into())),
            }
        }
        Command::Search(a) => search(a, q),
        Command::Feasible(a) => feasible(a, q),
        Command::Construct(a) => construct(a, q),
        Command::Classify(a) => classify(a, q),
        Command::Reproduce { sampling, budget } => reproduce::run(sampling.samples, sampling.seed, budget),
    }
}

fn search(a: SearchArgs, q: u32) -> Outcome {
    let h = matrix(&a.m.matrix, q)?;
    let g = Graph::syndrome(&h);
    let mut target = SearchTarget::from_array(&a.array, &g)?;
    if a.independent {
        target = target.independent();
    }
    let out: SearchOutcome = if a.heuristic {
        let opts = HeuristicOptions {
            budget: a.budget.unwrap_or(DEFAULT_MOVE_BUDGET),
            strategy: match a.strategy {
                StrategyArg::Tabu => Strategy::Tabu,
                StrategyArg::Annealing => Strategy::Annealing,
            },
            ..HeuristicOptions::default()
        };
        search_heuristic(&g, &target, a.seed, &opts)?
    } else {
        search_exact(&g, &target, a.budget.unwrap_or(DEFAULT_NODE_BUDGET))?
    };
    eprintln!("nodes: {}  restarts: {}", out.stats.nodes, out.stats.restarts);
    match out.status {
        SearchStatus::Found(f) => {
            let file = CodeFile { q: h.field(), k: h.k(), code: f.code };
            print!("{}", file.to_text());
            Ok(())
        }
        SearchStatus::ExhaustedNoSolution => Err(Failure::Verification(format!("no {} code exists", a.array))),
        SearchStatus::BudgetExceeded => Err(Failure::Budget(format!("no {} code found within the budget", a.array))),
    }
}

fn feasible(a: FeasibleArgs, q: u32) -> Outcome {
    let (spectrum, degree, order, n, fq) = match (&a.matrix, a.degree, a.order, &a.eigenvalues) {
        (Some(path), _, _, _) => {
            let h = matrix(path, q)?;
            let g = Graph::syndrome(&h);
            (g.spectrum(), g.degree() as u32, g.order() as u64, Some(h.n()), h.field())
        }
        (None, Some(d), Some(v), Some(ev)) => (Spectrum::from_pairs(ev.iter().map(|&e| (e, 1))), d, v, None, field(q)?),
        _ => return Err(Failure::Usage("give --matrix or --degree, --order and --eigenvalues".into())),
    };
    let opts = FeasibilityOptions {
        monotone: !a.no_monotone,
        eigenvalue: a.eigenvalue,
        complement_pairs: !a.both_orders,
        distance_integrality: a.drg,
        hamming_length: a.n.or(n).map(|n| (fq.get(), n)),
    };
    let list = enumerate_putative(&spectrum, degree, order, a.rho_max, &opts);
    for p in &list {
        let mut flags = Vec::new();
        if p.monotone {
            flags.push("monotone");
        }
        if p.eigenvalues_contained {
            flags.push("eigenvalues-in-spectrum");
        }
        if p.integral_cells {
            flags.push("integral-cells");
        }
        println!("{p}  [{}]", flags.join(" "));
    }
    eprintln!("{} arrays", list.len());
    Ok(())
}

fn construct(a: ConstructArgs, q: u32) -> Outcome {
    let base = || -> std::result::Result<RulePartition, Failure> {
        if let Some(path) = &a.rule {
            return Ok(RulePartition::parse(&read(path)?)?);
        }
        let code_path = a.code.as_ref().ok_or_else(|| Failure::Usage("--code is required without --rule".into()))?;
        if let Some(mpath) = &a.matrix {
            let h = matrix(mpath, q)?;
            let file = CodeFile::parse(&read(code_path)?, h.field())?;
            return Ok(RulePartition::lift(&h, &file.code)?);
        }
        if a.hamming {
            let file = CodeFile::parse(&read(code_path)?, field(q)?)?;
            return Ok(RulePartition::from_hamming_code(file.q, file.k, &file.code)?);
        }
        Err(Failure::Usage("give --rule, --matrix with --code, or --hamming with --code".into()))
    };
    if a.op == Op::Lift && a.matrix.is_none() {
        return Err(Failure::Usage("--op lift needs --matrix and --code".into()));
    }
    let p = base()?;
    let p = match a.op {
        Op::Lift => p,
        Op::Extend => p.extend(a.t),
        Op::Inflate => p.inflate(a.s)?,
        Op::Split => p.split(a.i)?,
    };
    let array = p.array().map_or_else(|| "not tridiagonal".to_string(), |x| x.to_string());
    eprintln!("H({},{}): quotient {}  array {array}", p.n(), p.field().get(), p.quotient());
    if a.verify {
        let check = p.verify(DEFAULT_BUDGET, a.sampling.samples, a.sampling.seed)?;
        let how = if check.exhaustive { "exhaustive" } else { "sampled" };
        match check.failure {
            None => eprintln!("verified ({how}, {} vertices)", check.vertices_checked),
            Some(f) => return Err(Failure::Verification(format!("construction check failed ({how}): {f}"))),
        }
    }
    if a.explicit {
        let code = p.materialize_cell(0, DEFAULT_BUDGET)?;
        print!("{}", CodeFile { q: p.field(), k: p.n(), code }.to_text());
    } else {
        print!("{}", p.to_text());
    }
    Ok(())
}

fn classify(a: ClassifyArgs, q: u32) -> Outcome {
    let fq = field(q)?;
    let sets = enumerate_graphs(fq, a.k, a.n, a.connected)?;
    let mut kept = 0usize;
    for s in &sets {
        let g = graph_of(s)?;
        let mut notes = Vec::new();
        if a.srg {
            match g.srg_parameters() {
                Some(p) => notes.push(p.to_string()),
                None => continue,
            }
        }
        if let Some(array) = &a.contains {
            let t = SearchTarget::from_array(array, &g)?;
            match search_exact(&g, &t, a.budget)?.status {
                SearchStatus::Found(_) => notes.push(format!("contains {array}")),
                SearchStatus::ExhaustedNoSolution => continue,
                SearchStatus::BudgetExceeded => notes.push(format!("{array}: budget exceeded")),
            }
        }
        kept += 1;
        print_class(kept, s, &g, &notes)?;
    }
    eprintln!("{} classes enumerated, {kept} printed", sets.len());
    Ok(())
}

fn print_class(i: usize, s: &ProjectivePointSet, g: &Graph, notes: &[String]) -> Outcome {
    let h = s.check_matrix()?;
    let mut header = format!("# class {i}: spectrum {}", g.spectrum());
    for n in notes {
        header.push_str("; ");
        header.push_str(n);
    }
    println!("{header}");
    print!("{}", h.to_text());
    println!();
    Ok(())
}
