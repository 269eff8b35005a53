//! Command-line front end: argument parsing, rendering and exit codes.
//!
//! [`run`] does all the work and returns the captured streams, so the binary
//! and the tests share one code path.

use std::fmt::Write as _;
use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fakeplanes::adjacency::{self, NodeFilter};
use fakeplanes::fwpp::{self, ClassifiedPlane, DegreeMatrix};
use fakeplanes::{markov, BigInt};
use num_traits::Zero;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Dot,
    Md,
    Tsv,
}

#[derive(Debug, Parser)]
#[command(name = "fakeplanes", version, about = "Squared Markov triples and fake weighted projective planes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct Common {
    /// Output format.
    #[arg(long, global = true, value_enum)]
    format: Option<OutputFormat>,
    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for enumeration.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Abort when a mutation tree would exceed this many nodes.
    #[arg(long, global = true)]
    max_nodes: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List solutions of the squared Markov equation with parameter `a`.
    Solve {
        #[arg(long)]
        a: u64,
        /// Bound on the entry sum.
        #[arg(long, default_value = "1000000", value_parser = parse_big)]
        bound: BigInt,
        /// Expand this many mutation steps instead of using `--bound`.
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Classify fake weighted projective planes of integral degree `a`.
    Classify {
        #[arg(long)]
        a: u64,
        /// Restrict to one torsion order.
        #[arg(long)]
        mu: Option<u64>,
        /// Bound on the sum of the fake weights.
        #[arg(long, default_value = "1000000", value_parser = parse_big)]
        bound: BigInt,
    },
    /// Local singularity data of a degree matrix given as JSON.
    Sing {
        /// File, inline JSON, or `-` for stdin.
        input: Option<String>,
    },
    /// Adjacency graph of the family `(a, mu)`.
    Graph {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        mu: u64,
        #[arg(long, default_value = "1000000", value_parser = parse_big)]
        bound: BigInt,
        /// Use the classes of these series instead of the at most
        /// T-singular ones, e.g. `--series 2,3`.
        #[arg(long, value_delimiter = ',')]
        series: Option<Vec<u64>>,
    },
    /// Decide whether two degree matrices define isomorphic planes.
    Iso {
        /// Files, inline JSON, or `-` for stdin; one input may hold a pair.
        inputs: Vec<String>,
    },
}

fn parse_big(s: &str) -> Result<BigInt, String> {
    let v: BigInt = s.trim().parse().map_err(|_| format!("not an integer: {}", s))?;
    if v < BigInt::zero() {
        return Err("bound must be non-negative".into());
    }
    Ok(v)
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { code: 0, stdout, stderr: String::new() }
    }

    fn usage(msg: impl std::fmt::Display) -> Self {
        Self { code: 2, stdout: String::new(), stderr: format!("error: {}\n", msg) }
    }
}

struct Failure(String);

impl From<fakeplanes::Error> for Failure {
    fn from(e: fakeplanes::Error) -> Self {
        Failure(e.to_string())
    }
}

type Res<T> = Result<T, Failure>;

fn fail<T>(msg: impl Into<String>) -> Res<T> {
    Err(Failure(msg.into()))
}

/// Runs the command line `args` (including the program name).
pub fn run<I, S>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome::ok(text),
                _ => Outcome { code: 2, stdout: String::new(), stderr: text },
            };
        }
    };
    // stdin is read up front so the work closure can move into a thread pool
    let mut buffered: Vec<u8> = Vec::new();
    if reads_stdin(&cli.command) {
        if let Err(e) = stdin.read_to_end(&mut buffered) {
            return Outcome::usage(format!("reading stdin: {}", e));
        }
    }
    let mut input: &[u8] = &buffered;
    let mut work = || dispatch(&cli, &mut input);
    let result = match cli.common.jobs {
        Some(0) => return Outcome::usage("--jobs must be positive"),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(work),
            Err(e) => return Outcome::usage(e),
        },
        None => work(),
    };
    match result {
        Ok(o) => o,
        Err(Failure(msg)) => Outcome::usage(msg),
    }
}

fn reads_stdin(cmd: &Command) -> bool {
    match cmd {
        Command::Sing { input } => input.as_deref().is_none_or(|s| s == "-"),
        Command::Iso { inputs } => inputs.is_empty() || inputs.iter().any(|s| s == "-"),
        _ => false,
    }
}

fn format_of(common: &Common, default: OutputFormat, allowed: &[OutputFormat]) -> Res<OutputFormat> {
    let f = if common.json { OutputFormat::Json } else { common.format.unwrap_or(default) };
    if !allowed.contains(&f) {
        return fail(format!("format {:?} is not available for this command", f).to_lowercase());
    }
    Ok(f)
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn dispatch(cli: &Cli, stdin: &mut &[u8]) -> Res<Outcome> {
    use OutputFormat::*;
    let c = &cli.common;
    match &cli.command {
        Command::Solve { a, bound, depth } => {
            let f = format_of(c, Tsv, &[Json, Dot, Md, Tsv])?;
            cmd_solve(*a, bound, *depth, c.max_nodes, f).map(Outcome::ok)
        }
        Command::Classify { a, mu, bound } => {
            let f = format_of(c, Md, &[Json, Md, Tsv])?;
            cmd_classify(*a, *mu, bound, c.max_nodes, f).map(Outcome::ok)
        }
        Command::Sing { input } => {
            let f = format_of(c, Json, &[Json, Md, Tsv])?;
            let v = read_json(input.as_deref().unwrap_or("-"), stdin)?;
            cmd_sing(&v, f).map(Outcome::ok)
        }
        Command::Graph { a, mu, bound, series } => {
            let f = format_of(c, Dot, &[Json, Dot, Tsv])?;
            cmd_graph(*a, *mu, bound, series.as_deref(), c.max_nodes, f).map(Outcome::ok)
        }
        Command::Iso { inputs } => {
            let f = format_of(c, Json, &[Json, Tsv])?;
            let (q1, q2) = iso_inputs(inputs, stdin)?;
            Ok(cmd_iso(&q1, &q2, f))
        }
    }
}

fn read_json(src: &str, stdin: &mut &[u8]) -> Res<Value> {
    let text = if src == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s).map_err(|e| Failure(format!("reading stdin: {}", e)))?;
        s
    } else if src.trim_start().starts_with(['{', '[']) {
        src.to_string()
    } else {
        std::fs::read_to_string(src).map_err(|e| Failure(format!("reading {}: {}", src, e)))?
    };
    serde_json::from_str(&text).map_err(|e| Failure(format!("malformed JSON: {}", e)))
}

/// A degree matrix object, or a bare weight triple meaning `mu = 1`.
fn degree_matrix(v: &Value) -> Res<DegreeMatrix> {
    if let Some(arr) = v.as_array() {
        if arr.len() == 3 && arr.iter().all(|x| !x.is_array() && !x.is_object()) {
            return Ok(DegreeMatrix::from_json(&json!({"mu": 1, "u": arr}))?);
        }
    }
    Ok(DegreeMatrix::from_json(v)?)
}

fn iso_inputs(inputs: &[String], stdin: &mut &[u8]) -> Res<(DegreeMatrix, DegreeMatrix)> {
    let values: Vec<Value> = match inputs {
        [] => vec![read_json("-", stdin)?],
        [one] => vec![read_json(one, stdin)?],
        [x, y] => vec![read_json(x, stdin)?, read_json(y, stdin)?],
        _ => return fail("iso takes at most two inputs"),
    };
    match &values[..] {
        [pair] => match pair.as_array().map(Vec::as_slice) {
            Some([x, y]) if x.is_object() || x.is_array() => Ok((degree_matrix(x)?, degree_matrix(y)?)),
            _ => fail("expected a JSON array holding two degree matrices"),
        },
        [x, y] => Ok((degree_matrix(x)?, degree_matrix(y)?)),
        _ => unreachable!(),
    }
}

fn triple(u: &[BigInt; 3]) -> String {
    format!("({},{},{})", u[0], u[1], u[2])
}

fn cmd_solve(a: u64, bound: &BigInt, depth: Option<usize>, cap: Option<usize>, f: OutputFormat) -> Res<String> {
    if a == 0 {
        return fail("a must be a positive integer");
    }
    let tree = match (depth, cap) {
        (Some(d), _) => markov::enumerate_tree_depth::<BigInt>(a, d)?,
        (None, Some(n)) => markov::enumerate_tree_capped(a, bound, n)?,
        (None, None) => markov::enumerate_tree(a, bound)?,
    };
    if let (Some(n), Some(_)) = (cap, depth) {
        if tree.nodes.len() > n {
            return Err(fakeplanes::Error::NodeLimit(n).into());
        }
    }
    Ok(match f {
        OutputFormat::Json => pretty(&tree.to_json()),
        OutputFormat::Dot => tree.to_dot(),
        OutputFormat::Md => {
            let mut s = String::from("| u | norm | initial |\n|---|---|---|\n");
            for (i, u) in tree.nodes.iter().enumerate() {
                let sum: BigInt = u.iter().sum();
                let _ = writeln!(s, "| {} | {} | {} |", triple(u), sum, tree.roots.contains(&i));
            }
            s
        }
        OutputFormat::Tsv => tree.nodes.iter().map(|u| format!("{}\t{}\t{}\n", u[0], u[1], u[2])).collect(),
    })
}

fn check_family(a: u64, mu: u64) -> Res<()> {
    if fwpp::families(a).any(|(m, _)| m == mu) {
        Ok(())
    } else {
        fail(format!("no family with a = {} and mu = {}", a, mu))
    }
}

fn cmd_classify(a: u64, mu: Option<u64>, bound: &BigInt, cap: Option<usize>, f: OutputFormat) -> Res<String> {
    if a == 0 {
        return fail("a must be a positive integer");
    }
    let planes: Vec<ClassifiedPlane> = match mu {
        Some(m) => {
            check_family(a, m)?;
            fwpp::classify_family(a, m, bound, cap)?
        }
        None => fwpp::classify_capped(a, bound, cap)?,
    };
    Ok(match f {
        OutputFormat::Json => {
            let rows: Vec<Value> = planes.iter().map(fwpp::plane_json).collect::<Result<_, _>>()?;
            pretty(&Value::Array(rows))
        }
        OutputFormat::Md => {
            if planes.is_empty() {
                String::new()
            } else {
                fwpp::markdown_table(&planes)?
            }
        }
        _ => {
            let mut s = String::new();
            for p in &planes {
                let ids: Vec<String> = p.series_set().iter().map(ToString::to_string).collect();
                let _ = writeln!(
                    s,
                    "{}\t{}\t{}\t{}\t{}",
                    ids.join(","),
                    triple(&p.q.u),
                    p.q.eta[2],
                    triple(&p.weights()),
                    p.series.a
                );
            }
            s
        }
    })
}

fn cmd_sing(v: &Value, f: OutputFormat) -> Res<String> {
    let q = degree_matrix(v)?;
    let r = fwpp::singularity_report(&q)?;
    Ok(match f {
        OutputFormat::Json => pretty(&json!({
            "matrix": q.to_json(),
            "weights": markov::triple_json(&fwpp::fake_weights_of_degree_matrix(&q)),
            "anticanonical": fwpp::anticanonical_class(&q).to_string(),
            "iota": markov::triple_json(&r.iotas()),
            "T": r.t_signs(),
            "points": r.to_json(),
        })),
        OutputFormat::Md => {
            let mut s = String::from("| k | cl | iota | T | d | curves |\n|---|---|---|---|---|---|\n");
            for (k, p) in r.points.iter().enumerate() {
                let d = p.d.as_ref().map_or("-".to_string(), ToString::to_string);
                let t = if p.is_t { "+" } else { "-" };
                let _ = writeln!(s, "| {} | {} | {} | {} | {} | {} |", k, p.cl, p.iota, t, d, p.res_curves);
            }
            s
        }
        _ => {
            let mut s = String::from("k\tcl\tiota\tT\td\tcurves\n");
            for (k, p) in r.points.iter().enumerate() {
                let d = p.d.as_ref().map_or("-".to_string(), ToString::to_string);
                let t = if p.is_t { "+" } else { "-" };
                let _ = writeln!(s, "{}\t{}\t{}\t{}\t{}\t{}", k, p.cl, p.iota, t, d, p.res_curves);
            }
            s
        }
    })
}

fn cmd_graph(a: u64, mu: u64, bound: &BigInt, series: Option<&[u64]>, cap: Option<usize>, f: OutputFormat) -> Res<String> {
    check_family(a, mu)?;
    let filter = match series {
        Some(etas) => {
            let known = fwpp::families(a).find(|&(m, _)| m == mu).map(|(_, e)| e).unwrap_or(&[]);
            if let Some(bad) = etas.iter().find(|e| !known.contains(e)) {
                return fail(format!("no series {}-{}-{}", a, mu, bad));
            }
            NodeFilter::Series(etas.to_vec())
        }
        None => NodeFilter::AtMostT,
    };
    let g = adjacency::build_graph(a, mu, bound, &filter, cap)?;
    Ok(match f {
        OutputFormat::Json => pretty(&g.to_json()),
        OutputFormat::Tsv => g.to_tsv(),
        _ => g.to_dot(),
    })
}

fn cmd_iso(q1: &DegreeMatrix, q2: &DegreeMatrix, f: OutputFormat) -> Outcome {
    let witness = fwpp::isomorphism_witness(q1, q2);
    let code = if witness.is_some() { 0 } else { 1 };
    let stdout = match f {
        OutputFormat::Json => pretty(&json!({
            "isomorphic": witness.is_some(),
            "witness": witness.map(|(phi, perm)| json!({
                "eps": phi.eps,
                "a": phi.a,
                "c": phi.c,
                "perm": perm,
            })),
        })),
        _ => match witness {
            Some((phi, perm)) => {
                format!("true\teps={} a={} c={} perm={},{},{}\n", phi.eps, phi.a, phi.c, perm[0], perm[1], perm[2])
            }
            None => "false\n".to_string(),
        },
    };
    Outcome { code, stdout, stderr: String::new() }
}
