//! Pair checks, sweeps, small-graph enumeration and the minimal-projection
//! search.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::encode_graph6;
use crate::product::{cartesian_product_with_limit, DEFAULT_MAX_VERTICES};
use crate::solver::{
    enumerate_minimum_dominating_sets_with, gamma_bb, is_minimal_dominating, SolverLimits,
};
use crate::trace::{build_trace, contradiction_witnesses, verify_trace, TraceHints, TraceReport};

/// Lower bounds on `γ(G □ H)` derived from `a = γ(G)`, `b = γ(H)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Bounds {
    /// `ab`
    pub conjecture: u64,
    /// `⌈(ab + max(a,b)) / 2⌉`
    pub new: u64,
    /// `⌈(ab + min(a,b)) / 2⌉`
    pub st_half: u64,
    /// `⌈ab / 2⌉ + min(a,b)`
    pub st_body: u64,
    /// `⌈ab / 2⌉`
    pub cs: u64,
    pub raw_new: f64,
    pub raw_st_half: f64,
    pub raw_st_body: f64,
    pub raw_cs: f64,
}

impl Bounds {
    pub fn from_gammas(a: usize, b: usize) -> Bounds {
        let (a, b) = (a as u64, b as u64);
        let ab = a * b;
        let (lo, hi) = (a.min(b), a.max(b));
        Bounds {
            conjecture: ab,
            new: (ab + hi).div_ceil(2),
            st_half: (ab + lo).div_ceil(2),
            st_body: ab.div_ceil(2) + lo,
            cs: ab.div_ceil(2),
            raw_new: (ab + hi) as f64 / 2.0,
            raw_st_half: (ab + lo) as f64 / 2.0,
            raw_st_body: ab as f64 / 2.0 + lo as f64,
            raw_cs: ab as f64 / 2.0,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PairReport {
    pub g6_g: String,
    pub g6_h: String,
    pub gamma_g: usize,
    pub gamma_h: usize,
    pub gamma_product: usize,
    pub bound_conjecture: u64,
    pub bound_new: u64,
    pub bound_st_half: u64,
    pub bound_st_body: u64,
    pub bound_cs: u64,
    pub raw_new: f64,
    pub raw_st_half: f64,
    pub raw_st_body: f64,
    pub raw_cs: f64,
    pub slack_new: i64,
    pub trace_ok: bool,
    /// Whether the trace was built with the factors swapped so that
    /// `γ(first) ≥ γ(second)`.
    pub swapped: bool,
    /// Minimum dominating set of the oriented product used as `D`.
    pub product_witness: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<TraceReport>,
}

pub const CSV_HEADER: &str =
    "g6_G,g6_H,gammaG,gammaH,gammaProd,bound_CS,bound_ST_half,bound_ST_body,bound_new,slack_new,trace_ok";

impl PairReport {
    /// Violated bounds, each a short description. `bound_st_body` is
    /// informational and never counted.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let gp = self.gamma_product as u64;
        for (name, b) in [
            ("bound_new", self.bound_new),
            ("bound_ST_half", self.bound_st_half),
            ("bound_CS", self.bound_cs),
        ] {
            if gp < b {
                out.push(format!("gammaProd {gp} < {name} {b}"));
            }
        }
        if !self.trace_ok {
            out.push("trace check failed".into());
        }
        out
    }

    pub fn is_violation(&self) -> bool {
        !self.violations().is_empty()
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{}",
            self.g6_g,
            self.g6_h,
            self.gamma_g,
            self.gamma_h,
            self.gamma_product,
            self.bound_cs,
            self.bound_st_half,
            self.bound_st_body,
            self.bound_new,
            self.slack_new,
            self.trace_ok
        )
    }
}

#[derive(Clone, Debug)]
pub struct HarnessConfig {
    pub limits: SolverLimits,
    pub max_product_vertices: usize,
    /// Attach the full trace report to each pair report.
    pub include_trace: bool,
}

impl Default for HarnessConfig {
    fn default() -> Self {
        HarnessConfig {
            limits: SolverLimits::default(),
            max_product_vertices: DEFAULT_MAX_VERTICES,
            include_trace: false,
        }
    }
}

/// Computes all domination numbers and bounds for `(g, h)` and verifies a
/// trace built from the solver's minimum dominating set of the product.
pub fn check_pair(g: &Graph, h: &Graph, config: &HarnessConfig) -> Result<PairReport> {
    let limits = config.limits.unrestricted();
    let rg = gamma_bb(g, &limits)?;
    let rh = gamma_bb(h, &limits)?;
    let swapped = rg.gamma < rh.gamma;
    let (first, second, r1, r2) = if swapped {
        (h, g, &rh, &rg)
    } else {
        (g, h, &rg, &rh)
    };
    let pg = cartesian_product_with_limit(first, second, config.max_product_vertices)?;
    let rp = gamma_bb(pg.graph(), &limits)?;
    let trace = build_trace(
        first,
        second,
        &rp.witness,
        TraceHints {
            gamma_g: Some(r1),
            gamma_h: Some(r2),
        },
        &limits,
    )?;
    let verdict = verify_trace(&trace);
    let trace_ok = verdict.passed() && contradiction_witnesses(&trace).is_empty();
    let b = Bounds::from_gammas(rg.gamma, rh.gamma);
    Ok(PairReport {
        g6_g: encode_graph6(g)?,
        g6_h: encode_graph6(h)?,
        gamma_g: rg.gamma,
        gamma_h: rh.gamma,
        gamma_product: rp.gamma,
        bound_conjecture: b.conjecture,
        bound_new: b.new,
        bound_st_half: b.st_half,
        bound_st_body: b.st_body,
        bound_cs: b.cs,
        raw_new: b.raw_new,
        raw_st_half: b.raw_st_half,
        raw_st_body: b.raw_st_body,
        raw_cs: b.raw_cs,
        slack_new: rp.gamma as i64 - b.new as i64,
        trace_ok,
        swapped,
        product_witness: pg.pairs(&rp.witness),
        trace: config
            .include_trace
            .then(|| TraceReport::new(&trace, &verdict)),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepMode {
    /// Unordered pairs `(i, j)` with `i <= j`.
    AllPairs,
    /// `(0, 0), (1, 1), ...` over two equally long lists.
    Zip,
    /// Every ordered pair.
    Cross,
}

impl std::str::FromStr for SweepMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(SweepMode::AllPairs),
            "zip" => Ok(SweepMode::Zip),
            "cross" => Ok(SweepMode::Cross),
            other => Err(Error::BadParameter(format!("unknown pair mode `{other}`"))),
        }
    }
}

/// Index pairs in emission order.
pub fn pair_indices(len_a: usize, len_b: usize, mode: SweepMode) -> Vec<(usize, usize)> {
    match mode {
        SweepMode::AllPairs => (0..len_a)
            .flat_map(|i| (i..len_a).map(move |j| (i, j)))
            .collect(),
        SweepMode::Zip => (0..len_a.min(len_b)).map(|i| (i, i)).collect(),
        SweepMode::Cross => (0..len_a)
            .flat_map(|i| (0..len_b).map(move |j| (i, j)))
            .collect(),
    }
}

#[derive(Clone, Debug)]
pub struct SweepEntry {
    pub index_g: usize,
    pub index_h: usize,
    pub result: std::result::Result<PairReport, Error>,
}

#[derive(Clone, Debug, Default)]
pub struct SweepSummary {
    pub entries: Vec<SweepEntry>,
    pub min_slack: Option<i64>,
    pub slack_counts: BTreeMap<i64, usize>,
    pub violations: usize,
    pub errors: usize,
}

impl SweepSummary {
    fn from_entries(entries: Vec<SweepEntry>) -> SweepSummary {
        let mut s = SweepSummary::default();
        for e in &entries {
            match &e.result {
                Ok(r) => {
                    *s.slack_counts.entry(r.slack_new).or_default() += 1;
                    s.min_slack = Some(s.min_slack.map_or(r.slack_new, |m| m.min(r.slack_new)));
                    if r.is_violation() {
                        s.violations += 1;
                    }
                }
                Err(_) => s.errors += 1,
            }
        }
        s.entries = entries;
        s
    }

    pub fn reports(&self) -> impl Iterator<Item = &PairReport> {
        self.entries.iter().filter_map(|e| e.result.as_ref().ok())
    }

    pub fn is_success(&self) -> bool {
        self.violations == 0
    }
}

/// Checks every pair `(first[i], second[j])` selected by `mode`. Pairs run
/// in parallel on the current rayon pool; entries keep emission order.
/// Per-pair failures are recorded, not propagated.
pub fn sweep(
    first: &[Graph],
    second: &[Graph],
    mode: SweepMode,
    config: &HarnessConfig,
) -> SweepSummary {
    let pairs = pair_indices(first.len(), second.len(), mode);
    let entries = pairs
        .into_par_iter()
        .map(|(i, j)| SweepEntry {
            index_g: i,
            index_h: j,
            result: check_pair(&first[i], &second[j], config),
        })
        .collect();
    SweepSummary::from_entries(entries)
}

/// [`sweep`] with pairs drawn from a single list.
pub fn sweep_one(graphs: &[Graph], mode: SweepMode, config: &HarnessConfig) -> SweepSummary {
    sweep(graphs, graphs, mode, config)
}

pub const MAX_ENUMERATION_ORDER: usize = 6;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// One representative of every isomorphism class of connected graphs on
/// `n <= 6` vertices.
///
/// Edge subsets are encoded as masks over the pairs `(i, j)`, `i < j`. Masks
/// are scanned in increasing order; the first unseen mask of an orbit is its
/// minimum under all `n!` relabellings, so it is taken as the canonical
/// form and its whole orbit is marked seen. Output is ordered by canonical
/// mask.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::TooLarge {
            what: "enumeration order",
            size: n as u128,
            limit: MAX_ENUMERATION_ORDER as u128,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let mut pair_index = vec![vec![0usize; n]; n];
    for (e, &(i, j)) in pairs.iter().enumerate() {
        pair_index[i][j] = e;
        pair_index[j][i] = e;
    }
    let edge_maps: Vec<Vec<usize>> = permutations(n)
        .iter()
        .map(|p| pairs.iter().map(|&(i, j)| pair_index[p[i]][p[j]]).collect())
        .collect();

    let total = 1usize << pairs.len();
    let mut seen = vec![false; total];
    let mut out = Vec::new();
    for mask in 0..total {
        if seen[mask] {
            continue;
        }
        for map in &edge_maps {
            let mut image = 0usize;
            for (e, &target) in map.iter().enumerate() {
                if mask >> e & 1 == 1 {
                    image |= 1 << target;
                }
            }
            seen[image] = true;
        }
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(e, _)| mask >> e & 1 == 1)
            .map(|(_, &p)| p);
        let g = Graph::from_edges(n, edges)?;
        if g.is_connected() {
            out.push(g);
        }
    }
    Ok(out)
}

/// Connected graphs on `1..=max_n` vertices, smallest order first.
pub fn connected_graphs_up_to(max_n: usize) -> Result<Vec<Graph>> {
    let mut all = Vec::new();
    for n in 1..=max_n {
        all.extend(enumerate_connected_graphs(n)?);
    }
    Ok(all)
}

#[derive(Clone, Debug, Serialize)]
pub struct RemarkReport {
    pub gamma_product: usize,
    /// Minimum dominating sets of the product examined.
    pub count_min_sets: usize,
    /// First minimum dominating set whose projection onto `G` is a minimal
    /// dominating set of `G`, as `(u, v)` pairs.
    pub found: Option<Vec<(usize, usize)>>,
    #[serde(skip)]
    pub found_set: Option<VertexSet>,
    pub truncated: bool,
}

/// Scans minimum dominating sets of `g □ h` in lexicographic order for one
/// whose projection onto `g` is a minimal dominating set. At most `cap`
/// sets are examined.
pub fn remark_search(
    g: &Graph,
    h: &Graph,
    cap: usize,
    config: &HarnessConfig,
) -> Result<RemarkReport> {
    let pg = cartesian_product_with_limit(g, h, config.max_product_vertices)?;
    let all = enumerate_minimum_dominating_sets_with(pg.graph(), cap, &config.limits)?;
    let mut count = 0;
    for d in &all.sets {
        count += 1;
        if is_minimal_dominating(g, &pg.project_onto_g(d)) {
            return Ok(RemarkReport {
                gamma_product: all.gamma,
                count_min_sets: count,
                found: Some(pg.pairs(d)),
                found_set: Some(d.clone()),
                truncated: false,
            });
        }
    }
    Ok(RemarkReport {
        gamma_product: all.gamma,
        count_min_sets: count,
        found: None,
        found_set: None,
        truncated: all.truncated,
    })
}
