//! Command-line front end. Every subcommand prints either a human-readable
//! summary or a versioned JSON report; `explore` streams one JSON object
//! per graph.
//!
//! Exit codes: 0 completed, 1 property violated, 2 usage or input error,
//! 3 budget exceeded.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::budget::Budget;
use crate::cutlattice::{self, CutBasis, CutError, FacetSystem, HomPoint};
use crate::graph::{CliqueSumSpec, Graph, GraphError, VertexSet};
use crate::lifting::{self, DeletionLift, LiftError};
use crate::minors;
use crate::named::{self, Named};
use crate::normality::{
    self, HilbertVerdict, NormalityError, NormalityVerdict, Status, VerifyMode,
};

pub const SCHEMA: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Oracle {
    Lattice,
    Cone,
    Semigroup,
}

#[derive(Debug, Parser)]
#[command(
    name = "cutnorm",
    version,
    about = "Cut lattices, cut cones and normality of cut polytopes"
)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Node budget for exhaustive searches.
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Seed for randomized helpers (`gen random`).
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a catalog graph (`K5`, `W7`, `grid 3 4`, `random 6 50`, ...).
    Gen {
        name: String,
        params: Vec<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// List the cut generators.
    Cuts { file: PathBuf },
    /// List the box and odd-set cycle inequalities.
    Facets { file: PathBuf },
    /// Test a homogenised point `x_1 ... x_m ; alpha`.
    Member {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long, value_enum, default_value = "semigroup")]
        oracle: Oracle,
    },
    /// Search for holes degree by degree.
    Normality {
        file: PathBuf,
        #[arg(long, required_unless_present = "full")]
        max_degree: Option<i64>,
        /// Scan through degree |E| - 1.
        #[arg(long)]
        full: bool,
    },
    /// Apply the structural normality rules.
    Classify { file: PathBuf },
    /// Search for non-homogeneous Hilbert-basis violations.
    Hilbert {
        file: PathBuf,
        #[arg(long)]
        max_degree: i64,
    },
    /// Lift a point of G \ e to G.
    LiftDelete {
        file: PathBuf,
        /// Edge as `u,v`.
        #[arg(long)]
        edge: String,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Merge decompositions across a clique sum.
    Merge {
        file1: PathBuf,
        file2: PathBuf,
        /// Shared vertices as `v:w,...` (or `v,...` for equal labels).
        #[arg(long)]
        shared: String,
        #[arg(long)]
        dec1: PathBuf,
        #[arg(long)]
        dec2: PathBuf,
    },
    /// Search for a minor.
    Minor {
        file: PathBuf,
        #[arg(long)]
        pattern: String,
    },
    /// Classify and bounded-search every graph matching a glob.
    Explore {
        pattern: String,
        #[arg(long)]
        max_degree: i64,
    },
}

/// `n`, `m` and a SHA-256 of the canonical text form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDigest {
    pub n: usize,
    pub m: usize,
    pub sha256: String,
}

impl GraphDigest {
    pub fn of(g: &Graph) -> Self {
        let hash = Sha256::digest(g.to_text().as_bytes());
        let mut hex = String::with_capacity(64);
        for b in hash {
            let _ = write!(hex, "{b:02x}");
        }
        GraphDigest {
            n: g.n(),
            m: g.m(),
            sha256: hex,
        }
    }
}

/// Run statistics that may vary between identical invocations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub elapsed_ms: u64,
    pub budget_used: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub command: Vec<String>,
    pub graph: Option<GraphDigest>,
    pub exit_code: i32,
    pub result: Value,
    pub timing: Timing,
}

struct Outcome {
    graph: Option<Graph>,
    result: Value,
    text: String,
    code: i32,
}

#[derive(Debug)]
struct Failure {
    code: i32,
    msg: String,
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            msg: msg.into(),
        }
    }
}

type Res<T> = std::result::Result<T, Failure>;

impl From<CutError> for Failure {
    fn from(e: CutError) -> Self {
        let code = match e {
            CutError::Budget(_) => EXIT_BUDGET,
            CutError::HasK5Minor(_) => EXIT_VIOLATION,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            msg: e.to_string(),
        }
    }
}

impl From<NormalityError> for Failure {
    fn from(e: NormalityError) -> Self {
        match e {
            NormalityError::Cut(c) => c.into(),
            NormalityError::Budget(_) => Failure {
                code: EXIT_BUDGET,
                msg: e.to_string(),
            },
            _ => Failure::usage(e.to_string()),
        }
    }
}

impl From<LiftError> for Failure {
    fn from(e: LiftError) -> Self {
        let code = match e {
            LiftError::Budget(_) | LiftError::Cut(CutError::Budget(_)) => EXIT_BUDGET,
            LiftError::EmptyGammaRange { .. } | LiftError::CountMismatch(..) => EXIT_VIOLATION,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            msg: e.to_string(),
        }
    }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        Failure::usage(e.to_string())
    }
}

/// Runs the CLI on `args` (including the program name), writing to the
/// process's stdout and stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = if code == EXIT_OK {
                write!(out, "{}", e.render())
            } else {
                write!(err, "{}", e.render())
            };
            return code;
        }
    };
    let echo: Vec<String> = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    let pool = match cli.threads {
        Some(0) => {
            let _ = writeln!(err, "error: --threads must be positive");
            return EXIT_USAGE;
        }
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(p) => Some(p),
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                return EXIT_USAGE;
            }
        },
        None => None,
    };
    if let Command::Explore {
        pattern,
        max_degree,
    } = &cli.command
    {
        explore(&cli, pool.as_ref(), pattern, *max_degree, out, err)
    } else {
        single(&cli, pool.as_ref(), echo, out, err)
    }
}

fn in_pool<R: Send>(pool: Option<&rayon::ThreadPool>, f: impl FnOnce() -> R + Send) -> R {
    match pool {
        Some(p) => p.install(f),
        None => f(),
    }
}

fn single(
    cli: &Cli,
    pool: Option<&rayon::ThreadPool>,
    echo: Vec<String>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let budget = Budget::from_option(cli.budget);
    let start = Instant::now();
    let outcome = in_pool(pool, || dispatch(cli, &budget));
    let timing = Timing {
        elapsed_ms: start.elapsed().as_millis() as u64,
        budget_used: budget.used(),
    };
    match outcome {
        Ok(o) => {
            match cli.format {
                Format::Text => {
                    let _ = out.write_all(o.text.as_bytes());
                }
                Format::Json => {
                    let report = Report {
                        schema: SCHEMA,
                        command: echo,
                        graph: o.graph.as_ref().map(GraphDigest::of),
                        exit_code: o.code,
                        result: o.result,
                        timing,
                    };
                    let _ = writeln!(
                        out,
                        "{}",
                        serde_json::to_string_pretty(&report).expect("serialisable")
                    );
                }
            }
            o.code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.msg);
            f.code
        }
    }
}

fn read_graph(path: &Path) -> Res<Graph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    text.parse::<Graph>()
        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn read_text(path: &Path) -> Res<String> {
    std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn parse_point(text: &str) -> Res<HomPoint> {
    text.parse::<HomPoint>()
        .map_err(|e| Failure::usage(format!("--point: {e}")))
}

fn graph_json(g: &Graph) -> Value {
    json!({ "n": g.n(), "m": g.m(), "edges": g.edges() })
}

fn shores_json(shores: &[VertexSet]) -> Value {
    Value::Array(shores.iter().map(|s| json!(s.to_vec())).collect())
}

fn shore_text(s: VertexSet) -> String {
    let labels: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", labels.join(" "))
}

fn ints(xs: &[i64]) -> String {
    xs.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn dispatch(cli: &Cli, budget: &Budget) -> Res<Outcome> {
    match &cli.command {
        Command::Gen {
            name,
            params,
            output,
        } => gen(name, params, output.as_deref(), cli.seed),
        Command::Cuts { file } => cuts(&read_graph(file)?),
        Command::Facets { file } => facets(&read_graph(file)?, budget),
        Command::Member {
            file,
            point,
            oracle,
        } => member(&read_graph(file)?, &parse_point(point)?, *oracle, budget),
        Command::Normality {
            file,
            max_degree,
            full,
        } => {
            let mode = if *full {
                VerifyMode::Full
            } else {
                VerifyMode::Bounded(max_degree.expect("required unless --full"))
            };
            normality_cmd(read_graph(file)?, mode, budget)
        }
        Command::Classify { file } => classify(read_graph(file)?, budget),
        Command::Hilbert { file, max_degree } => hilbert(read_graph(file)?, *max_degree, budget),
        Command::LiftDelete { file, edge, point } => {
            lift_delete(read_graph(file)?, edge, &parse_point(point)?, budget)
        }
        Command::Merge {
            file1,
            file2,
            shared,
            dec1,
            dec2,
        } => merge(
            read_graph(file1)?,
            read_graph(file2)?,
            shared,
            &read_text(dec1)?,
            &read_text(dec2)?,
        ),
        Command::Minor { file, pattern } => minor(read_graph(file)?, pattern, budget),
        Command::Explore { .. } => unreachable!("handled by explore"),
    }
}

fn gen(name: &str, params: &[usize], output: Option<&Path>, seed: Option<u64>) -> Res<Outcome> {
    let g = if name.eq_ignore_ascii_case("random") {
        let [n, percent] = params else {
            return Err(Failure::usage("random expects `N PERCENT`"));
        };
        if *percent > 100 {
            return Err(Failure::usage("edge percentage must be at most 100"));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed.unwrap_or(0));
        named::random_graph(*n, *percent as u32, &mut rng)?
    } else if params.is_empty() {
        Named::parse_short(name)
            .or_else(|_| Named::from_parts(name, params))?
            .build()?
    } else {
        named::make_named(name, params)?
    };
    let text = g.to_text();
    let shown = match output {
        Some(path) => {
            std::fs::write(path, &text)
                .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
            format!("wrote {} (n = {}, m = {})\n", path.display(), g.n(), g.m())
        }
        None => text,
    };
    Ok(Outcome {
        result: json!({
            "name": name,
            "params": params,
            "output": output.map(|p| p.display().to_string()),
            "graph": graph_json(&g),
        }),
        graph: Some(g),
        text: shown,
        code: EXIT_OK,
    })
}

fn cuts(g: &Graph) -> Res<Outcome> {
    let basis = CutBasis::new(g)?;
    let mut text = format!(
        "{} cut generators ({} distinct)\n",
        basis.len(),
        basis.distinct().len()
    );
    let mut list = Vec::new();
    for c in &basis.generators {
        let _ = writeln!(text, "{:<24} {}", shore_text(c.shore), ints(&c.coords));
        list.push(json!({ "shore": c.shore.to_vec(), "coords": c.coords }));
    }
    Ok(Outcome {
        graph: Some(g.clone()),
        result: json!({ "generators": list, "distinct": basis.distinct().len() }),
        text,
        code: EXIT_OK,
    })
}

fn facets(g: &Graph, budget: &Budget) -> Res<Outcome> {
    let sys: FacetSystem = cutlattice::facet_inequalities_with_budget(g, budget)?;
    let mut text = format!(
        "{} inequalities: {} box, {} cycle\n",
        sys.len(),
        sys.box_count(),
        sys.inequalities.len()
    );
    let _ = writeln!(text, "0 <= x_e <= alpha for each of {} edges", g.m());
    let mut list = Vec::new();
    for q in &sys.inequalities {
        let terms: Vec<String> = q
            .cycle
            .edges
            .iter()
            .map(|e| {
                format!(
                    "{}x{}",
                    if q.odd_set.contains(e) { "+" } else { "-" },
                    e + 1
                )
            })
            .collect();
        let _ = writeln!(text, "{} <= {} alpha", terms.join(" "), q.odd_set.len() - 1);
        list.push(json!({ "cycle": q.cycle.edges, "odd_set": q.odd_set, "rhs_multiplier": q.odd_set.len() - 1 }));
    }
    Ok(Outcome {
        graph: Some(g.clone()),
        result: json!({
            "box": sys.box_count(),
            "cycle": sys.inequalities.len(),
            "total": sys.len(),
            "inequalities": list,
        }),
        text,
        code: EXIT_OK,
    })
}

fn member(g: &Graph, p: &HomPoint, oracle: Oracle, budget: &Budget) -> Res<Outcome> {
    if p.x.len() != g.m() {
        return Err(CutError::Dimension {
            expected: g.m(),
            got: p.x.len(),
        }
        .into());
    }
    let (name, ok, extra) = match oracle {
        Oracle::Lattice => ("lattice", cutlattice::in_lattice(g, p)?, Value::Null),
        Oracle::Cone => {
            let cone = cutlattice::ConeOracle::with_budget(g, budget)?;
            let backend = if cone.uses_facets() {
                "facets"
            } else {
                "generators"
            };
            (
                "cone",
                p.alpha >= 0 && cone.contains(p),
                json!({ "backend": backend }),
            )
        }
        Oracle::Semigroup => {
            if p.alpha < 0 {
                return Err(CutError::NegativeDegree(p.alpha).into());
            }
            let basis = CutBasis::new(g)?;
            let d = normality::decompose_in(&basis, p, budget)?;
            let shores = d
                .as_ref()
                .map(|d| shores_json(&d.shores(&basis)))
                .unwrap_or(Value::Null);
            ("semigroup", d.is_some(), json!({ "decomposition": shores }))
        }
    };
    let mut text = format!("{name}: {}\n", if ok { "member" } else { "not a member" });
    if let Some(Value::Array(parts)) = extra.get("decomposition") {
        for s in parts {
            let _ = writeln!(text, "  shore {s}");
        }
    }
    Ok(Outcome {
        graph: Some(g.clone()),
        result: json!({ "oracle": name, "point": p, "member": ok, "details": extra }),
        text,
        code: EXIT_OK,
    })
}

fn verdict_text(v: &NormalityVerdict) -> String {
    let mut text = format!("status: {}\n", v.status.as_str());
    if !v.rules.is_empty() {
        let _ = writeln!(text, "rules: {}", v.rules.join(", "));
    }
    if v.search_degree > 0 {
        let _ = writeln!(text, "search degree: {}", v.search_degree);
    }
    if let Some(h) = &v.hole {
        let _ = writeln!(text, "hole: {h}");
    }
    if let Some(w) = &v.minor_witness {
        let _ = writeln!(text, "K5 minor branch sets: {:?}", w.branch_sets);
    }
    text
}

fn verdict_code(v: &NormalityVerdict, budget: &Budget) -> i32 {
    match v.status {
        Status::NotNormal => EXIT_VIOLATION,
        Status::Unknown if budget.exhausted() => EXIT_BUDGET,
        _ => EXIT_OK,
    }
}

fn normality_cmd(g: Graph, mode: VerifyMode, budget: &Budget) -> Res<Outcome> {
    let v = normality::verify_normality(&g, mode, budget)?;
    Ok(Outcome {
        text: verdict_text(&v),
        code: verdict_code(&v, budget),
        result: serde_json::to_value(&v).expect("serialisable"),
        graph: Some(g),
    })
}

fn classify(g: Graph, budget: &Budget) -> Res<Outcome> {
    let v = normality::classify_normality(&g, budget);
    Ok(Outcome {
        text: verdict_text(&v),
        code: verdict_code(&v, budget),
        result: serde_json::to_value(&v).expect("serialisable"),
        graph: Some(g),
    })
}

fn hilbert(g: Graph, max_degree: i64, budget: &Budget) -> Res<Outcome> {
    let v = normality::hilbert_check(&g, max_degree, budget)?;
    let (text, code) = match &v {
        HilbertVerdict::NoViolationUpTo { bound } => (
            format!("no violation with coordinates up to {bound}\n"),
            EXIT_OK,
        ),
        HilbertVerdict::Violation { x } => (format!("violation: {}\n", ints(x)), EXIT_VIOLATION),
    };
    Ok(Outcome {
        text,
        code,
        result: serde_json::to_value(&v).expect("serialisable"),
        graph: Some(g),
    })
}

fn parse_edge(g: &Graph, text: &str) -> Res<(usize, usize, usize)> {
    let (u, v) = text
        .split_once(',')
        .ok_or_else(|| Failure::usage(format!("--edge expects `u,v`, got `{text}`")))?;
    let parse = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|_| Failure::usage(format!("--edge: not a vertex label: `{s}`")))
    };
    let (u, v) = (parse(u)?, parse(v)?);
    let i = g.edge_index(u, v).ok_or(GraphError::NoSuchEdge(u, v))?;
    Ok((u.min(v), u.max(v), i))
}

fn lift_delete(g: Graph, edge: &str, p: &HomPoint, budget: &Budget) -> Res<Outcome> {
    let (u, v, e0) = parse_edge(&g, edge)?;
    let lift = DeletionLift::with_budget(&g, e0, budget)?;
    let bounds = lift.bounds(&p.x, p.alpha)?;
    let lifted = lift.lift(&p.x, p.alpha)?;
    let gamma = lifted.x[e0];
    let text =
        format!(
        "edge {{{u},{v}}} (index {e0}): gamma in [{}, {}]{}\ngamma = {gamma}\nlifted: {lifted}\n",
        bounds.lower,
        bounds.upper,
        bounds.parity.map_or(String::new(), |p| format!(", parity {p}")),
    );
    Ok(Outcome {
        result: json!({
            "edge": [u, v],
            "edge_index": e0,
            "bounds": bounds,
            "gamma": gamma,
            "lifted": lifted,
        }),
        graph: Some(g),
        text,
        code: EXIT_OK,
    })
}

fn parse_shared(text: &str) -> Res<Vec<(usize, usize)>> {
    let label = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|_| Failure::usage(format!("--shared: not a vertex label: `{s}`")))
    };
    text.split(',')
        .map(|item| match item.split_once(':') {
            Some((a, b)) => Ok((label(a)?, label(b)?)),
            None => label(item).map(|v| (v, v)),
        })
        .collect()
}

fn merge(g1: Graph, g2: Graph, shared: &str, dec1: &str, dec2: &str) -> Res<Outcome> {
    let spec = CliqueSumSpec::new(g1, g2, parse_shared(shared)?)?;
    let d1 = lifting::parse_shore_list(dec1).map_err(|e| Failure::usage(format!("--dec1: {e}")))?;
    let d2 = lifting::parse_shore_list(dec2).map_err(|e| Failure::usage(format!("--dec2: {e}")))?;
    let merged = lifting::merge_clique_sum(&spec, &d1, &d2)?;
    let glued = spec.glue()?.graph;
    let mut x = vec![0i64; glued.m()];
    for &s in &merged {
        for (a, b) in x.iter_mut().zip(cutlattice::cut_coords(&glued, s)) {
            *a += b;
        }
    }
    let target = HomPoint::new(x, merged.len() as i64);
    let text = format!(
        "glued graph: n = {}, m = {}\ntarget: {target}\nmerged shores:\n{}",
        glued.n(),
        glued.m(),
        lifting::format_shore_list(&merged)
    );
    Ok(Outcome {
        result: json!({
            "glued": graph_json(&glued),
            "merged": shores_json(&merged),
            "target": target,
        }),
        graph: Some(glued),
        text,
        code: EXIT_OK,
    })
}

fn minor(g: Graph, pattern: &str, budget: &Budget) -> Res<Outcome> {
    let h = named::parse_named(pattern)?;
    let w = minors::find_minor(&g, &h, budget).map_err(|e| Failure {
        code: EXIT_BUDGET,
        msg: e.to_string(),
    })?;
    let text = match &w {
        Some(w) => format!("minor found; branch sets {:?}\n", w.branch_sets),
        None => "no minor\n".to_string(),
    };
    Ok(Outcome {
        result: json!({
            "pattern": pattern,
            "result": if w.is_some() { "minor" } else { "no minor" },
            "witness": w,
        }),
        graph: Some(g),
        text,
        code: EXIT_OK,
    })
}

fn explore(
    cli: &Cli,
    pool: Option<&rayon::ThreadPool>,
    pattern: &str,
    max_degree: i64,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    if max_degree < 2 {
        let _ = writeln!(err, "error: --max-degree must be at least 2");
        return EXIT_USAGE;
    }
    let paths = match glob::glob(pattern) {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: bad glob `{pattern}`: {e}");
            return EXIT_USAGE;
        }
    };
    let mut files: Vec<PathBuf> = paths
        .filter_map(|p| p.ok())
        .filter(|p| p.is_file())
        .collect();
    files.sort();
    if files.is_empty() {
        let _ = writeln!(err, "error: no files match `{pattern}`");
        return EXIT_USAGE;
    }
    let (mut bad_input, mut out_of_budget, mut violated) = (false, false, false);
    for path in files {
        let file = path.display().to_string();
        let g = match read_graph(&path) {
            Ok(g) => g,
            Err(f) => {
                bad_input = true;
                let _ = writeln!(err, "error: {}", f.msg);
                if cli.format == Format::Json {
                    let _ = writeln!(
                        out,
                        "{}",
                        json!({ "schema": SCHEMA, "file": file, "error": f.msg })
                    );
                }
                continue;
            }
        };
        let budget = Budget::from_option(cli.budget);
        let start = Instant::now();
        let (class, search) = in_pool(pool, || {
            (
                normality::classify_normality(&g, &budget),
                normality::verify_normality(&g, VerifyMode::Bounded(max_degree), &budget),
            )
        });
        let search = match search {
            Ok(v) => v,
            Err(e) => {
                let f: Failure = e.into();
                bad_input |= f.code == EXIT_USAGE;
                out_of_budget |= f.code == EXIT_BUDGET;
                let _ = writeln!(err, "error: {file}: {}", f.msg);
                continue;
            }
        };
        out_of_budget |= budget.exhausted();
        violated |= search.status == Status::NotNormal;
        match cli.format {
            Format::Json => {
                let line = json!({
                    "schema": SCHEMA,
                    "file": file,
                    "graph": GraphDigest::of(&g),
                    "classify": class,
                    "search": search,
                    "timing": Timing {
                        elapsed_ms: start.elapsed().as_millis() as u64,
                        budget_used: budget.used(),
                    },
                });
                let _ = writeln!(out, "{line}");
            }
            Format::Text => {
                let _ = writeln!(
                    out,
                    "{file}: n={} m={} classify={} [{}] search={} (degree {}){}",
                    g.n(),
                    g.m(),
                    class.status.as_str(),
                    class.rules.join(", "),
                    search.status.as_str(),
                    search.search_degree,
                    search
                        .hole
                        .as_ref()
                        .map_or(String::new(), |h| format!(" hole {h}")),
                );
            }
        }
    }
    if bad_input {
        EXIT_USAGE
    } else if out_of_budget {
        EXIT_BUDGET
    } else if violated {
        EXIT_VIOLATION
    } else {
        EXIT_OK
    }
}
