//! Command-line driver.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::family::{parse_family, parse_graph_arg};
use crate::graph::Graph;
use crate::graph6::encode_graph6;
use crate::harness::{
    check_pair, enumerate_connected_graphs, remark_search, sweep, HarnessConfig, PairReport,
    SweepMode, SweepSummary, CSV_HEADER,
};
use crate::product::{cartesian_product_with_limit, DEFAULT_MAX_VERTICES};
use crate::solver::{
    gamma_bb, gamma_oracle_with_guard, SolverLimits, DEFAULT_NODE_BUDGET, DEFAULT_ORACLE_GUARD,
};
use crate::trace::{build_trace, remark_trace, verify_trace, TraceHints, TraceReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

const GRAPH_HELP: &str = "\
Graph arguments:
  graph6 string        e.g. Ch
  @FILE                graph6 lines or an `n m` edge list
  path:N cycle:N complete:N star:N empty:N grid:MxN gnp:N:P[:SEED]

Families (sweep --family):
  paths:A..B cycles:A..B completes:A..B stars:A..B empties:A..B
  connected:A..B       all connected graphs on A..B vertices (B <= 6)
  any single graph argument

Exit status: 0 ok, 1 bound or trace violation, 2 usage error, 3 budget or size limit.";

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Jsonl,
    Human,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Graph6,
    Edgelist,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum PairsArg {
    All,
    Zip,
    Cross,
}

#[derive(Debug, Parser)]
#[command(
    name = "vizbound",
    version,
    about = "Exact domination numbers and product domination bound checks",
    after_help = GRAPH_HELP
)]
pub struct Cli {
    /// Search-tree node budget per solve.
    #[arg(long, global = true, default_value_t = DEFAULT_NODE_BUDGET)]
    pub node_budget: u64,
    /// Largest graph accepted by the exhaustive oracle.
    #[arg(long, global = true, default_value_t = DEFAULT_ORACLE_GUARD)]
    pub oracle_guard: usize,
    /// Largest product graph built.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_VERTICES)]
    pub max_vertices: usize,
    /// Output format (each subcommand has its own default).
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Seed for `gnp:N:P` specs that omit one.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Test hook: corrupt the first report so the violation path runs.
    #[arg(long, global = true, hide = true)]
    pub inject_fault: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the domination number and a witness.
    Gamma {
        graph: String,
        /// Use the exhaustive oracle instead of branch and bound.
        #[arg(long)]
        oracle: bool,
    },
    /// Emit the Cartesian product.
    Product {
        g: String,
        h: String,
        #[arg(long = "as", value_enum, default_value_t = GraphFormat::Graph6)]
        output: GraphFormat,
    },
    /// Check the bounds for one pair.
    Check {
        g: String,
        h: String,
        /// Include the full trace in JSON output.
        #[arg(long)]
        trace: bool,
    },
    /// Build and verify the counting trace for one dominating set.
    Trace {
        g: String,
        h: String,
        /// File of product vertices: ids or `u,v` pairs, whitespace separated.
        #[arg(long)]
        dom_set: Option<PathBuf>,
    },
    /// Search for a minimum dominating set with a minimal projection.
    Remark {
        g: String,
        h: String,
        #[arg(long, default_value_t = 1_000_000)]
        cap: usize,
    },
    /// Check many pairs.
    Sweep {
        #[arg(long, conflicts_with = "family", required_unless_present = "family")]
        graph6: Option<PathBuf>,
        #[arg(long)]
        family: Option<String>,
        #[arg(long, value_enum, default_value_t = PairsArg::All)]
        pairs: PairsArg,
        /// Worker threads (output order does not depend on this).
        #[arg(long)]
        jobs: Option<usize>,
        /// Include full traces in JSON output.
        #[arg(long)]
        trace: bool,
    },
    /// Emit graph6 lines for all connected graphs on N vertices.
    Enumerate { n: usize },
}

struct Outcome {
    text: String,
    status: i32,
    diagnostics: String,
}

impl Outcome {
    fn ok(text: String) -> Outcome {
        Outcome {
            text,
            status: EXIT_OK,
            diagnostics: String::new(),
        }
    }
}

fn exit_for(e: &Error) -> i32 {
    if e.is_limit() {
        EXIT_LIMIT
    } else {
        EXIT_USAGE
    }
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("reports serialize");
    s.push('\n');
    s
}

impl Cli {
    fn limits(&self) -> SolverLimits {
        SolverLimits {
            node_budget: self.node_budget,
            oracle_guard: self.oracle_guard,
            ..Default::default()
        }
    }

    fn harness(&self, include_trace: bool) -> HarnessConfig {
        HarnessConfig {
            limits: self.limits(),
            max_product_vertices: self.max_vertices,
            include_trace,
        }
    }

    fn graph(&self, spec: &str) -> Result<Graph> {
        if let Some(rest) = spec.strip_prefix("gnp:") {
            if rest.split(':').count() == 2 {
                return parse_graph_arg(&format!("{spec}:{}", self.seed));
            }
        }
        parse_graph_arg(spec)
    }

    fn execute(&self) -> Result<Outcome> {
        if self.node_budget == 0 {
            return Err(Error::BadParameter("--node-budget must be positive".into()));
        }
        match &self.command {
            Command::Gamma { graph, oracle } => self.gamma(graph, *oracle),
            Command::Product { g, h, output } => {
                let pg = cartesian_product_with_limit(
                    &self.graph(g)?,
                    &self.graph(h)?,
                    self.max_vertices,
                )?;
                let text = match output {
                    GraphFormat::Graph6 => format!("{}\n", encode_graph6(pg.graph())?),
                    GraphFormat::Edgelist => pg.graph().to_edge_list(),
                };
                Ok(Outcome::ok(text))
            }
            Command::Check { g, h, trace } => {
                let mut r = check_pair(&self.graph(g)?, &self.graph(h)?, &self.harness(*trace))?;
                if self.inject_fault {
                    r.trace_ok = false;
                }
                let status = if r.is_violation() {
                    EXIT_VIOLATION
                } else {
                    EXIT_OK
                };
                Ok(Outcome {
                    text: self.render_reports(std::slice::from_ref(&r)),
                    status,
                    diagnostics: r.violations().join("\n"),
                })
            }
            Command::Trace { g, h, dom_set } => self.trace(g, h, dom_set.as_ref()),
            Command::Remark { g, h, cap } => self.remark(g, h, *cap),
            Command::Sweep {
                graph6,
                family,
                pairs,
                jobs,
                trace,
            } => {
                let graphs = match (graph6, family) {
                    (Some(path), _) => parse_family(&format!("@{}", path.display()))?,
                    (None, Some(f)) => parse_family(f)?,
                    (None, None) => unreachable!("clap requires one source"),
                };
                let mode = match pairs {
                    PairsArg::All => SweepMode::AllPairs,
                    PairsArg::Zip => SweepMode::Zip,
                    PairsArg::Cross => SweepMode::Cross,
                };
                let config = self.harness(*trace);
                let mut summary = match jobs {
                    Some(j) => rayon::ThreadPoolBuilder::new()
                        .num_threads(*j)
                        .build()
                        .map_err(|e| Error::BadParameter(e.to_string()))?
                        .install(|| sweep(&graphs, &graphs, mode, &config)),
                    None => sweep(&graphs, &graphs, mode, &config),
                };
                if self.inject_fault {
                    if let Some(Ok(r)) = summary.entries.first_mut().map(|e| &mut e.result) {
                        r.trace_ok = false;
                        summary.violations += 1;
                    }
                }
                Ok(self.render_sweep(&summary))
            }
            Command::Enumerate { n } => {
                let mut text = String::new();
                for g in enumerate_connected_graphs(*n)? {
                    writeln!(text, "{}", encode_graph6(&g)?).unwrap();
                }
                Ok(Outcome::ok(text))
            }
        }
    }

    fn gamma(&self, spec: &str, oracle: bool) -> Result<Outcome> {
        let g = self.graph(spec)?;
        let r = if oracle {
            gamma_oracle_with_guard(&g, self.oracle_guard)?
        } else {
            gamma_bb(&g, &self.limits())?
        };
        let g6 = encode_graph6(&g)?;
        let text = match self.format.unwrap_or(Format::Human) {
            Format::Human => format!("gamma {}\nwitness {}\n", r.gamma, r.witness),
            Format::Csv => format!(
                "graph,gamma,witness\n{g6},{},{}\n",
                r.gamma,
                r.witness
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            ),
            Format::Jsonl => json_line(&serde_json::json!({
                "graph": g6,
                "gamma": r.gamma,
                "witness": r.witness,
            })),
        };
        Ok(Outcome::ok(text))
    }

    fn trace(&self, g: &str, h: &str, dom_set: Option<&PathBuf>) -> Result<Outcome> {
        let (g, h) = (self.graph(g)?, self.graph(h)?);
        let pg = cartesian_product_with_limit(&g, &h, self.max_vertices)?;
        let limits = self.limits();
        let d = match dom_set {
            Some(path) => read_dom_set(path, pg.n_g(), pg.n_h())?,
            None => gamma_bb(pg.graph(), &limits)?.witness,
        };
        let t = build_trace(&g, &h, &d, TraceHints::default(), &limits)?;
        let mut verdict = verify_trace(&t);
        if self.inject_fault {
            if let Some(c) = verdict.checks.first_mut() {
                c.passed = false;
            }
        }
        let report = TraceReport::new(&t, &verdict);
        let status = if report.passed {
            EXIT_OK
        } else {
            EXIT_VIOLATION
        };
        let text = match self.format.unwrap_or(Format::Human) {
            Format::Jsonl => json_line(&report),
            Format::Csv => {
                let mut s = String::from("check,lhs,relation,rhs,passed\n");
                for c in &verdict.checks {
                    let rel = serde_json::to_value(c.relation).unwrap();
                    writeln!(
                        s,
                        "{},{},{},{},{}",
                        c.id.key(),
                        c.lhs,
                        rel.as_str().unwrap(),
                        c.rhs,
                        c.passed
                    )
                    .unwrap();
                }
                s
            }
            Format::Human => {
                let v = &verdict.values;
                let mut s = String::new();
                writeln!(s, "D = {} (|D| = {})", pairs_text(&pg.pairs(&t.d)), v.d).unwrap();
                writeln!(s, "Q = {}, U = {:?}, k = {}", t.q, t.u, t.k).unwrap();
                writeln!(s, "gamma(G) = {}, gamma(H) = {}", t.gamma_g, t.gamma_h).unwrap();
                writeln!(
                    s,
                    "|C| = {}, sum |L_i| = {}, sum |R_v| = {}, sum |Q_v| = {}",
                    v.c, v.sum_l, v.sum_r, v.sum_q
                )
                .unwrap();
                for c in &verdict.checks {
                    writeln!(s, "{c}").unwrap();
                }
                for w in &report.contradictions {
                    writeln!(s, "contradiction at layer {}: U' = {}", w.layer, w.set).unwrap();
                }
                writeln!(s, "trace {}", if report.passed { "OK" } else { "FAILED" }).unwrap();
                s
            }
        };
        Ok(Outcome {
            text,
            status,
            diagnostics: String::new(),
        })
    }

    fn remark(&self, g: &str, h: &str, cap: usize) -> Result<Outcome> {
        let (g, h) = (self.graph(g)?, self.graph(h)?);
        let config = self.harness(false);
        let r = remark_search(&g, &h, cap, &config)?;
        let verdict = match &r.found_set {
            Some(d) => Some(remark_trace(&g, &h, d, TraceHints::default(), &config.limits)?.1),
            None => None,
        };
        let status = match &verdict {
            Some(v) if !v.passed() => EXIT_VIOLATION,
            _ => EXIT_OK,
        };
        let text = match self.format.unwrap_or(Format::Human) {
            Format::Jsonl => json_line(&serde_json::json!({
                "gamma_product": r.gamma_product,
                "count_min_sets": r.count_min_sets,
                "found": r.found,
                "truncated": r.truncated,
                "remark_checks": verdict.as_ref().map(|v| &v.checks),
            })),
            Format::Csv => format!(
                "gammaProd,count_min_sets,found,truncated\n{},{},{},{}\n",
                r.gamma_product,
                r.count_min_sets,
                r.found.as_ref().map(|p| pairs_text(p)).unwrap_or_default(),
                r.truncated
            ),
            Format::Human => {
                let mut s = String::new();
                match (&r.found, &verdict) {
                    (Some(pairs), Some(v)) => {
                        writeln!(
                            s,
                            "found minimum dominating set {} with minimal projection",
                            pairs_text(pairs)
                        )
                        .unwrap();
                        for c in &v.checks {
                            writeln!(s, "{c}").unwrap();
                        }
                    }
                    _ if r.truncated => {
                        writeln!(
                            s,
                            "no qualifying set among the first {} examined (truncated)",
                            r.count_min_sets
                        )
                        .unwrap();
                    }
                    _ => {
                        writeln!(s, "no minimum dominating set has a minimal projection").unwrap();
                    }
                }
                writeln!(
                    s,
                    "gamma(product) = {}, examined {}",
                    r.gamma_product, r.count_min_sets
                )
                .unwrap();
                s
            }
        };
        Ok(Outcome {
            text,
            status,
            diagnostics: String::new(),
        })
    }

    fn render_reports(&self, reports: &[PairReport]) -> String {
        let mut s = String::new();
        match self.format.unwrap_or(Format::Csv) {
            Format::Csv => {
                s.push_str(CSV_HEADER);
                s.push('\n');
                for r in reports {
                    s.push_str(&r.csv_row());
                    s.push('\n');
                }
            }
            Format::Jsonl => {
                for r in reports {
                    s.push_str(&json_line(r));
                }
            }
            Format::Human => {
                for r in reports {
                    writeln!(s, "G = {}  H = {}", r.g6_g, r.g6_h).unwrap();
                    writeln!(
                        s,
                        "  gamma(G) = {}, gamma(H) = {}, gamma(GxH) = {}",
                        r.gamma_g, r.gamma_h, r.gamma_product
                    )
                    .unwrap();
                    writeln!(
                        s,
                        "  bounds: CS {} (raw {}), ST/2 {} (raw {}), ST {} (raw {}), new {} (raw {}), conjecture {}",
                        r.bound_cs,
                        r.raw_cs,
                        r.bound_st_half,
                        r.raw_st_half,
                        r.bound_st_body,
                        r.raw_st_body,
                        r.bound_new,
                        r.raw_new,
                        r.bound_conjecture
                    )
                    .unwrap();
                    writeln!(
                        s,
                        "  slack {}, trace {}",
                        r.slack_new,
                        if r.trace_ok { "OK" } else { "FAILED" }
                    )
                    .unwrap();
                }
            }
        }
        s
    }

    fn render_sweep(&self, summary: &SweepSummary) -> Outcome {
        let format = self.format.unwrap_or(Format::Csv);
        let mut text = String::new();
        let mut diagnostics = String::new();
        if format == Format::Csv {
            text.push_str(CSV_HEADER);
            text.push('\n');
        }
        for e in &summary.entries {
            match &e.result {
                Ok(r) => match format {
                    Format::Csv => {
                        text.push_str(&r.csv_row());
                        text.push('\n');
                    }
                    Format::Jsonl => text.push_str(&json_line(r)),
                    Format::Human => text.push_str(&self.render_reports(std::slice::from_ref(r))),
                },
                Err(err) => {
                    writeln!(diagnostics, "pair ({}, {}): {err}", e.index_g, e.index_h).unwrap();
                    if format == Format::Jsonl {
                        text.push_str(&json_line(&serde_json::json!({
                            "index_g": e.index_g,
                            "index_h": e.index_h,
                            "error": err.to_string(),
                        })));
                    }
                }
            }
        }
        let counts: Vec<String> = summary
            .slack_counts
            .iter()
            .map(|(s, c)| format!("{s}:{c}"))
            .collect();
        let line = format!(
            "pairs {} violations {} errors {} min_slack {} slack_counts {}",
            summary.entries.len(),
            summary.violations,
            summary.errors,
            summary.min_slack.map_or("-".to_string(), |m| m.to_string()),
            counts.join(",")
        );
        if format == Format::Human {
            text.push_str(&line);
            text.push('\n');
        } else {
            diagnostics.push_str(&line);
        }
        let status = if !summary.is_success() {
            EXIT_VIOLATION
        } else if summary.errors > 0 {
            let limit = summary
                .entries
                .iter()
                .any(|e| matches!(&e.result, Err(err) if err.is_limit()));
            if limit {
                EXIT_LIMIT
            } else {
                EXIT_USAGE
            }
        } else {
            EXIT_OK
        };
        Outcome {
            text,
            status,
            diagnostics,
        }
    }
}

fn pairs_text(pairs: &[(usize, usize)]) -> String {
    let inner: Vec<String> = pairs.iter().map(|(u, v)| format!("({u},{v})")).collect();
    format!("{{{}}}", inner.join(","))
}

/// Reads a product vertex set: tokens are product ids or `u,v` pairs.
fn read_dom_set(path: &PathBuf, n_g: usize, n_h: usize) -> Result<VertexSet> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let n = n_g * n_h;
    let bad = |tok: &str| Error::BadParameter(format!("bad dominating-set entry `{tok}`"));
    let mut ids = Vec::new();
    for tok in text.split_whitespace() {
        let id = match tok.split_once(',') {
            Some((u, v)) => {
                let u: usize = u.parse().map_err(|_| bad(tok))?;
                let v: usize = v.parse().map_err(|_| bad(tok))?;
                if u >= n_g || v >= n_h {
                    return Err(bad(tok));
                }
                u * n_h + v
            }
            None => tok.parse().map_err(|_| bad(tok))?,
        };
        ids.push(id);
    }
    VertexSet::from_vertices(n, ids)
}

/// Runs the CLI on `argv` (including the program name), writing to the
/// given streams. Returns the process exit status.
pub fn run_with<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(rendered.as_bytes())
            } else {
                stdout.write_all(rendered.as_bytes())
            };
            return status;
        }
    };
    let outcome = match cli.execute() {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return exit_for(&e);
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, outcome.text.as_bytes()),
        None => stdout.write_all(outcome.text.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: {e}");
        return EXIT_USAGE;
    }
    if !outcome.diagnostics.is_empty() {
        let _ = writeln!(stderr, "{}", outcome.diagnostics);
    }
    outcome.status
}

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with(
        argv,
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    )
}
