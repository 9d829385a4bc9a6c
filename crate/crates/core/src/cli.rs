//! The `halinkit` command line.
//!
//! Every command prints one JSON report on stdout:
//! `{"command", "input_digest", "result", "version", "wall_time_ms"}`.
//! `--pretty` renders the result as text tables instead. Exit codes: 0 ok,
//! 2 bad input or usage, 3 failed precondition, 4 budget or truncation
//! exhausted.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::ffi::OsString;
use std::io::Read;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::aut::automorphism_group;
use crate::error::{Error, ParseError};
use crate::graph::{
    encode_graph6, generate, parse_edge_list_json, parse_graph6, Family, FamilyKind, Graph, TruncatedFamily,
};
use crate::invariants::{self, Budget};
use crate::limit::{depth_budget, run_construction, EpsilonWord};
use crate::perm::{PermGroup, Permutation};
use crate::topology::{Dyadic, Exhaustion};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_EXHAUSTED: i32 = 4;

/// Word counts above this skip the pairwise distinctness check.
const MAX_VERIFIED_ROUNDS: usize = 12;

#[derive(Debug, Parser)]
#[command(name = "halinkit", version, about = "Graph symmetry toolkit")]
pub struct Cli {
    /// Render tables instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Automorphism group: order, generators, base and orbits.
    Aut(GraphArgs),
    /// Determining number with a least witness; `--check` tests a given set.
    Base {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_parser = parse_set)]
        check: Option<BTreeSet<usize>>,
    },
    /// Distinguishing cost with a least witness.
    Cost {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_parser = parse_set)]
        check: Option<BTreeSet<usize>>,
    },
    /// Minimum motion of a nontrivial automorphism.
    Motion(GraphArgs),
    /// Greedy stabilizer chain from a base to a distinguishing set.
    Greedy {
        #[command(flatten)]
        graph: GraphArgs,
        /// Starting base; defaults to the least minimum base.
        #[arg(long, value_parser = parse_set)]
        base: Option<BTreeSet<usize>>,
    },
    /// Largest orbit of each vertex stabilizer.
    Subdegrees(GraphArgs),
    /// Size bounds for a base of size `n`, optionally with the longest
    /// subgroup chain of Sym(n).
    Bounds {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lattice: bool,
    },
    /// Run the nested-set construction on a truncated infinite graph.
    LimitSim {
        #[arg(long, value_enum)]
        family: LimitFamily,
        /// Truncation depth; defaults to the depth budget for `k`.
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=64))]
        k: u64,
        /// Include the full permutation of every round.
        #[arg(long)]
        tables: bool,
        /// Include the witness of every word pair.
        #[arg(long)]
        witnesses: bool,
    },
    /// Distances in the permutation ultrametric.
    Topology {
        #[command(flatten)]
        graph: GraphArgs,
        /// Nested sets, e.g. `0|0,1|0,1,2`; defaults to initial segments.
        #[arg(long)]
        exhaustion: Option<String>,
        /// Two permutations as image arrays, e.g. `1,0,2;0,1,2`.
        #[arg(long)]
        pair: Option<String>,
        /// Number of random triples from the automorphism group to test.
        #[arg(long)]
        sweep: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Petersen,
    BinaryTree,
    Comb,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LimitFamily {
    BinaryTree,
    Comb,
}

#[derive(Debug, Clone, Args)]
pub struct GraphArgs {
    #[arg(long, value_enum, conflicts_with_all = ["graph6", "input"])]
    pub family: Option<FamilyName>,
    /// Vertex count, or the first part of a complete bipartite graph.
    #[arg(long)]
    pub n: Option<usize>,
    /// Second part of a complete bipartite graph.
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub depth: Option<usize>,
    #[arg(long, conflicts_with = "input")]
    pub graph6: Option<String>,
    /// File with graph6 or a JSON edge list; `-` reads stdin.
    #[arg(long)]
    pub input: Option<String>,
}

fn parse_set(s: &str) -> Result<BTreeSet<usize>, String> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|_| format!("{t:?} is not a vertex index")))
        .collect()
}

/// Error raised by a command, with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
    /// Partial result to report despite the failure.
    pub partial: Option<Box<Value>>,
    pub digest: Option<String>,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_)
            | Error::DegreeMismatch { .. }
            | Error::PointOutOfRange { .. }
            | Error::NotAPermutation(_) => EXIT_INPUT,
            Error::Precondition(_) | Error::MotionUndefined | Error::TooLarge { .. } => EXIT_PRECONDITION,
            Error::BudgetExhausted { .. } | Error::Exhausted { .. } => EXIT_EXHAUSTED,
        };
        Failure { code, message: e.to_string(), partial: None, digest: None }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Error::from(e).into()
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_INPUT, message: message.into(), partial: None, digest: None }
}

type CmdResult = Result<(Option<String>, Value), Failure>;

/// What a process run produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let echo: Vec<String> = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let start = Instant::now();
    let result = execute(&cli.command);
    let wall_time_ms = start.elapsed().as_millis() as u64;
    let (code, digest, payload, stderr) = match result {
        Ok((digest, payload)) => (EXIT_OK, digest, Some(payload), String::new()),
        Err(f) => (f.code, f.digest, f.partial.map(|p| *p), format!("error: {}\n", f.message)),
    };
    let stdout = match payload {
        None => String::new(),
        Some(result) if cli.pretty => render_pretty(&result),
        Some(result) => {
            let report = json!({
                "command": echo.join(" "),
                "input_digest": digest,
                "result": result,
                "version": env!("CARGO_PKG_VERSION"),
                "wall_time_ms": wall_time_ms,
            });
            serde_json::to_string(&report).expect("reports serialize") + "\n"
        }
    };
    Outcome { code, stdout, stderr }
}

fn digest(g: &Graph) -> String {
    let hash = Sha256::digest(encode_graph6(g).as_bytes());
    format!("sha256:{}", hash.iter().map(|b| format!("{b:02x}")).collect::<String>())
}

fn order_json(order: &BigUint) -> Value {
    match order.to_u64() {
        Some(o) => json!(o),
        None => json!(order.to_string()),
    }
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("plain data serializes")
}

impl GraphArgs {
    fn is_given(&self) -> bool {
        self.family.is_some() || self.graph6.is_some() || self.input.is_some()
    }

    fn load(&self) -> Result<Graph, Failure> {
        if let Some(family) = self.family {
            let need = |x: Option<usize>, flag: &str| x.ok_or_else(|| usage(format!("--family needs --{flag}")));
            let f = match family {
                FamilyName::Path => Family::Path(need(self.n, "n")?),
                FamilyName::Cycle => Family::Cycle(need(self.n, "n")?),
                FamilyName::Complete => Family::Complete(need(self.n, "n")?),
                FamilyName::CompleteBipartite => Family::CompleteBipartite(need(self.n, "n")?, need(self.m, "m")?),
                FamilyName::Petersen => Family::Petersen,
                FamilyName::BinaryTree => Family::BinaryTree(need(self.depth, "depth")?),
                FamilyName::Comb => Family::Comb(need(self.depth, "depth")?),
            };
            return Ok(generate(f)?);
        }
        if let Some(text) = &self.graph6 {
            return Ok(parse_graph6(text)?);
        }
        if let Some(path) = &self.input {
            let mut text = String::new();
            if path == "-" {
                std::io::stdin().read_to_string(&mut text).map_err(|e| usage(format!("reading stdin: {e}")))?;
            } else {
                text = std::fs::read_to_string(path).map_err(|e| usage(format!("reading {path}: {e}")))?;
            }
            return Ok(if text.trim_start().starts_with('{') {
                parse_edge_list_json(&text)?
            } else {
                parse_graph6(&text)?
            });
        }
        Err(usage("give one of --family, --graph6 or --input"))
    }
}

fn execute(command: &Command) -> CmdResult {
    match command {
        Command::Aut(args) => {
            let g = args.load()?;
            let a = automorphism_group(&g);
            let orbits: Vec<Vec<usize>> = a.orbits().into_iter().map(|o| o.into_iter().collect()).collect();
            Ok((
                Some(digest(&g)),
                json!({
                    "n": g.n(),
                    "edges": g.edge_count(),
                    "order": order_json(&a.order()),
                    "generators": to_value(&a.generators()),
                    "base": a.base(),
                    "orbits": orbits,
                }),
            ))
        }
        Command::Base { graph, check } => {
            let g = graph.load()?;
            let a = automorphism_group(&g);
            let found = invariants::determining_number(&a, Budget::from_env())?;
            let mut out = json!({"determining_number": found.size, "witness": found.witness});
            if let Some(s) = check {
                out["check"] = json!({"set": s, "is_base": invariants::is_base(&a, s)?});
            }
            Ok((Some(digest(&g)), out))
        }
        Command::Cost { graph, check } => {
            let g = graph.load()?;
            let a = automorphism_group(&g);
            let found = invariants::distinguishing_cost(&a, Budget::from_env())?;
            let mut out = match found {
                Some(w) => json!({"exists": true, "rho": w.size, "witness": w.witness}),
                None => json!({"exists": false, "rho": null, "witness": null}),
            };
            if let Some(s) = check {
                out["check"] = json!({"set": s, "is_distinguishing": invariants::is_distinguishing(&a, s)?});
            }
            Ok((Some(digest(&g)), out))
        }
        Command::Motion(args) => {
            let g = args.load()?;
            let m = invariants::motion(&automorphism_group(&g))?;
            Ok((Some(digest(&g)), to_value(&m)))
        }
        Command::Greedy { graph, base } => {
            let g = graph.load()?;
            let a = automorphism_group(&g);
            let b = match base {
                Some(b) => b.clone(),
                None => invariants::determining_number(&a, Budget::from_env())?.witness,
            };
            let chain = invariants::greedy_distinguishing_chain(&a, &b)?;
            let mut out = to_value(&chain);
            out["completed"] = json!(chain.completed());
            out["final_set"] = json!(chain.final_set());
            out["final_size"] = json!(chain.final_set().len());
            out["chain_length"] = json!(chain.length());
            out["cost_bound"] = json!(chain.bounds.map(|b| b.cost_bound));
            out["chain_bound"] = json!(chain.bounds.map(|b| b.chain_bound));
            out["within_bound"] = json!(chain.completed().then(|| chain.within_bound()));
            Ok((Some(digest(&g)), out))
        }
        Command::Subdegrees(args) => {
            let g = args.load()?;
            Ok((Some(digest(&g)), to_value(&invariants::subdegree_report(&automorphism_group(&g)))))
        }
        Command::Bounds { n, lattice } => {
            let mut out = to_value(&invariants::bounds(*n)?);
            if *lattice {
                out["longest_subgroup_chain"] = json!(invariants::longest_subgroup_chain(*n)?);
            }
            Ok((None, out))
        }
        Command::LimitSim { family, depth, k, tables, witnesses } => {
            limit_sim(*family, *depth, *k as usize, *tables, *witnesses)
        }
        Command::Topology { graph, exhaustion, pair, sweep, seed } => {
            topology(graph, exhaustion.as_deref(), pair.as_deref(), *sweep, *seed)
        }
    }
}

fn limit_sim(family: LimitFamily, depth: Option<usize>, k: usize, tables: bool, witnesses: bool) -> CmdResult {
    let kind = match family {
        LimitFamily::BinaryTree => FamilyKind::BinaryTree,
        LimitFamily::Comb => FamilyKind::Comb,
    };
    let budget = depth_budget(kind, k)?;
    let depth = depth.unwrap_or(budget);
    let t = match kind {
        FamilyKind::BinaryTree => TruncatedFamily::binary_tree(depth)?,
        _ => TruncatedFamily::comb(depth)?,
    };
    let state = run_construction(&t, k)?;
    let rounds: Vec<Value> = state
        .rounds
        .iter()
        .map(|r| {
            let mut v = json!({"f": r.f, "x": r.x, "phi_x": r.phi.apply(r.x), "phi_motion": r.phi.motion()});
            if tables {
                v["phi"] = to_value(&r.phi);
            }
            v
        })
        .collect();
    let mut out = json!({
        "family": to_value(&kind),
        "depth": depth,
        "depth_budget": budget,
        "k": k,
        "rounds_completed": state.rounds.len(),
        "completed": state.completed(),
        "exhausted": state.exhausted,
        "exhausted_prefix": state.exhausted_prefix,
        "closing_size": state.closing.as_ref().map(BTreeSet::len),
        "invariants_ok": state.check_invariants().is_ok(),
        "rounds": rounds,
    });
    if !state.completed() {
        let reason = state.exhausted.clone().unwrap_or_default();
        let err = Error::Exhausted { achieved: state.rounds.len(), reason };
        return Err(Failure { partial: Some(Box::new(out)), digest: Some(digest(&t.graph)), ..err.into() });
    }
    out["inverse_consistent"] = json!(state.inverse_consistent()?);
    if k <= MAX_VERIFIED_ROUNDS {
        let report = state.verify_distinctness(k)?;
        let words = EpsilonWord::all(k)?;
        let distinct: HashSet<[u8; 32]> = words
            .iter()
            .map(|w| {
                let table = state.image_table(w)?;
                let bytes: Vec<u8> = table.iter().flat_map(|v| (*v as u64).to_le_bytes()).collect();
                Ok(Sha256::digest(&bytes).into())
            })
            .collect::<Result<_, Error>>()?;
        let mut d = json!({
            "words": report.words,
            "pairs": report.pairs,
            "witnessed": report.witnessed,
            "all_witnessed": report.all_witnessed(),
            "distinct_tables": distinct.len(),
        });
        if witnesses {
            d["witnesses"] = to_value(&report.witnesses);
        }
        out["distinctness"] = d;

        let e = Exhaustion::new(state.degree, state.sets())?;
        let mut worst: Vec<Dyadic> = Vec::new();
        for w in &words {
            let seq: Vec<Permutation> = (0..k).map(|i| state.alpha_k(w, i)).collect::<Result<_, Error>>()?;
            for (i, d) in e.check_cauchy(&seq)?.into_iter().enumerate() {
                match worst.get_mut(i) {
                    Some(x) if d > *x => *x = d,
                    Some(_) => {}
                    None => worst.push(d),
                }
            }
        }
        let within = worst.iter().enumerate().all(|(i, d)| *d <= Dyadic::pow2_neg(i as u32 + 1));
        out["cauchy"] = json!({"table": to_value(&worst), "within_bound": within});
    } else {
        out["distinctness"] = json!({"skipped": format!("pairwise check runs for k <= {MAX_VERIFIED_ROUNDS}")});
    }
    Ok((Some(digest(&t.graph)), out))
}

fn parse_perm(s: &str) -> Result<Permutation, Failure> {
    let images: Vec<usize> = s
        .split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| usage(format!("{t:?} is not an image"))))
        .collect::<Result<_, _>>()?;
    Ok(Permutation::from_images(images)?)
}

fn topology(graph: &GraphArgs, layout: Option<&str>, pair: Option<&str>, sweep: Option<usize>, seed: u64) -> CmdResult {
    let g = if graph.is_given() { Some(graph.load()?) } else { None };
    let pair = pair
        .map(|p| {
            let (a, b) = p.split_once(';').ok_or_else(|| usage("--pair takes two image arrays separated by ';'"))?;
            Ok::<_, Failure>((parse_perm(a)?, parse_perm(b)?))
        })
        .transpose()?;
    let degree = match (&g, &pair) {
        (Some(g), _) => g.n(),
        (None, Some((a, _))) => a.degree(),
        (None, None) => return Err(usage("topology needs a graph or --pair")),
    };
    let e = match layout {
        Some(s) => Exhaustion::parse(degree, s)?,
        None => Exhaustion::initial_segments(degree)?,
    };
    let mut out = Map::new();
    out.insert("exhaustion".into(), to_value(&e));
    if let Some((a, b)) = &pair {
        out.insert(
            "pair".into(),
            json!({
                "confluent": to_value(&e.confluent(a, b)?),
                "d": to_value(&e.dist(a, b)?),
                "d_inverse": to_value(&e.dist(&a.inverse(), &b.inverse())?),
                "d_star": to_value(&e.dist_star(a, b)?),
            }),
        );
    }
    if let Some(count) = sweep {
        let g = g.as_ref().ok_or_else(|| usage("--sweep samples the automorphism group of a graph"))?;
        let a: PermGroup = automorphism_group(g);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let triples: Vec<[Permutation; 3]> = (0..count)
            .map(|_| [a.random_element(&mut rng), a.random_element(&mut rng), a.random_element(&mut rng)])
            .collect();
        let violations = e.check_ultrametric(&triples)?;
        let mut histogram: BTreeMap<String, usize> = BTreeMap::new();
        for [x, y, _] in &triples {
            *histogram.entry(e.dist(x, y)?.to_string()).or_default() += 1;
        }
        out.insert(
            "sweep".into(),
            json!({
                "seed": seed,
                "triples": count,
                "violation_count": violations.len(),
                "violations": to_value(&violations),
                "distance_histogram": histogram,
            }),
        );
    }
    Ok((g.as_ref().map(digest), Value::Object(out)))
}

/// Text rendering: scalars as `key: value`, arrays of objects as aligned
/// tables, nested objects indented.
pub fn render_pretty(v: &Value) -> String {
    let mut out = String::new();
    render_into(&mut out, v, 0);
    out
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn render_into(out: &mut String, v: &Value, indent: usize) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match x {
                    Value::Object(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_into(out, x, indent + 2);
                    }
                    Value::Array(items) if items.first().is_some_and(Value::is_object) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_table(out, items, indent + 2);
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", scalar(x))),
                }
            }
        }
        Value::Array(items) if items.first().is_some_and(Value::is_object) => render_table(out, items, indent),
        other => out.push_str(&format!("{pad}{}\n", scalar(other))),
    }
}

fn render_table(out: &mut String, rows: &[Value], indent: usize) {
    let pad = " ".repeat(indent);
    let mut columns: Vec<String> = Vec::new();
    for row in rows {
        for k in row.as_object().into_iter().flat_map(|m| m.keys()) {
            if !columns.contains(k) {
                columns.push(k.clone());
            }
        }
    }
    let cells: Vec<Vec<String>> =
        rows.iter().map(|r| columns.iter().map(|c| r.get(c).map_or_else(String::new, scalar)).collect()).collect();
    let widths: Vec<usize> = columns
        .iter()
        .enumerate()
        .map(|(i, c)| cells.iter().map(|r| r[i].len()).chain([c.len()]).max().unwrap_or(0))
        .collect();
    let line = |items: Vec<&str>| -> String {
        let joined: Vec<String> = items.iter().zip(&widths).map(|(s, w)| format!("{s:<w$}")).collect();
        format!("{pad}{}\n", joined.join("  ").trim_end())
    };
    out.push_str(&line(columns.iter().map(String::as_str).collect()));
    for r in &cells {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("halinkit").chain(args.iter().copied()))
    }

    fn result(args: &[&str]) -> Value {
        let out = run_args(args);
        assert_eq!(out.code, 0, "{}", out.stderr);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        v["result"].clone()
    }

    #[test]
    fn aut_orders() {
        assert_eq!(result(&["aut", "--family", "petersen"])["order"], 120);
        assert_eq!(result(&["aut", "--family", "path", "--n", "3"])["order"], 2);
    }

    #[test]
    fn malformed_graph6_is_an_input_error() {
        let out = run_args(&["aut", "--graph6", "D?"]);
        assert_eq!(out.code, EXIT_INPUT);
        assert!(out.stderr.contains("byte 2"), "{}", out.stderr);
    }

    #[test]
    fn invariant_commands() {
        let cost = result(&["cost", "--family", "cycle", "--n", "6"]);
        assert_eq!(cost["rho"], 3);
        assert_eq!(cost["witness"], json!([0, 1, 3]));
        let greedy = result(&["greedy", "--family", "cycle", "--n", "8", "--base", "0,1"]);
        assert_eq!(greedy["final_size"], 3);
        assert_eq!(greedy["cost_bound"], 3);
        assert_eq!(greedy["within_bound"], true);
        assert_eq!(result(&["motion", "--family", "complete", "--n", "5"])["motion"], 2);
    }

    #[test]
    fn precondition_exit_code() {
        assert_eq!(run_args(&["motion", "--graph6", "@"]).code, EXIT_PRECONDITION);
        assert_eq!(run_args(&["greedy", "--family", "cycle", "--n", "8", "--base", "0"]).code, EXIT_PRECONDITION);
    }

    #[test]
    fn limit_sim_reports() {
        let r = result(&["limit-sim", "--family", "binary-tree", "--depth", "12", "--k", "3"]);
        assert_eq!(r["distinctness"]["pairs"], 28);
        assert_eq!(r["distinctness"]["witnessed"], 28);
        assert_eq!(r["cauchy"]["within_bound"], true);
        assert_eq!(run_args(&["limit-sim", "--family", "binary-tree", "--k", "0"]).code, EXIT_INPUT);
        let short = run_args(&["limit-sim", "--family", "binary-tree", "--depth", "2", "--k", "5"]);
        assert_eq!(short.code, EXIT_EXHAUSTED);
        let partial: Value = serde_json::from_str(&short.stdout).unwrap();
        assert_eq!(partial["result"]["rounds_completed"], 1);
    }

    #[test]
    fn topology_queries() {
        let r = result(&["topology", "--pair", "0,1,2;0,1,2"]);
        assert_eq!(r["pair"]["d"], "0");
        let s = result(&["topology", "--family", "cycle", "--n", "8", "--sweep", "200", "--seed", "1"]);
        assert_eq!(s["sweep"]["violation_count"], 0);
        assert_eq!(run_args(&["topology", "--pair", "0,1;1,0", "--exhaustion", "0,1|0"]).code, EXIT_INPUT);
    }

    #[test]
    fn pretty_tables() {
        let out = run_args(&["--pretty", "subdegrees", "--family", "cycle", "--n", "4"]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.starts_with("vertex  max_orbit\n"), "{}", out.stdout);
    }
}
