//! Instance-level checking of the product domination counting argument.
//!
//! For graphs `G`, `H` and a dominating set `D` of `G □ H`, [`build_trace`]
//! materialises every set the argument uses:
//!
//! * `Q`, the projection of `D` onto `G`, and `U = {u_1..u_k}`, a minimum
//!   subset of `Q` dominating `G`;
//! * a partition `π_1..π_k` of `V(G)` with `u_i ∈ π_i ⊆ N[u_i]`;
//! * `S_i = D ∩ ({u_i} × V(H))` with projection `T_i`, and
//!   `D_i = D ∩ (π_i × V(H))` with projection `P_i`;
//! * the layers `Q_v = D ∩ (V(G) × {v})`;
//! * `C = {(i, v) : π_i × {v} ⊆ N[Q_v]}` and its row/column counts
//!   `|L_i|`, `|R_v|`.
//!
//! [`verify_trace`] then evaluates each inequality of the argument on those
//! concrete sets. Block indices are 0-based throughout.

use std::fmt;

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::product::{cartesian_product_with_limit, ProductGraph};
use crate::solver::{
    gamma_bb, gamma_restricted, is_minimal_dominating, DominationResult, SolverLimits,
};

/// Precomputed domination results for the factors. Each hint is checked
/// (its witness must dominate and match the claimed size) before use.
#[derive(Clone, Copy, Debug, Default)]
pub struct TraceHints<'a> {
    pub gamma_g: Option<&'a DominationResult>,
    pub gamma_h: Option<&'a DominationResult>,
}

#[derive(Clone, Debug)]
pub struct ProofTrace {
    g: Graph,
    h: Graph,
    product: ProductGraph,
    pub d: VertexSet,
    pub q: VertexSet,
    pub u: Vec<usize>,
    pub k: usize,
    /// Block index of every vertex of `G`.
    pub pi: Vec<usize>,
    pub blocks: Vec<VertexSet>,
    pub s: Vec<VertexSet>,
    pub t: Vec<VertexSet>,
    pub d_parts: Vec<VertexSet>,
    pub p: Vec<VertexSet>,
    pub q_layers: Vec<VertexSet>,
    /// Members `(i, v)` of `C`, sorted.
    pub c: Vec<(usize, usize)>,
    pub l_sizes: Vec<usize>,
    pub r_sizes: Vec<usize>,
    pub gamma_g: usize,
    pub gamma_h: usize,
}

/// Assigns every vertex of `g` to a block: each `u_j` to its own block `j`,
/// every other vertex to the smallest `i` with `w ∈ N[u_i]`.
pub fn build_partition(g: &Graph, u: &[usize]) -> Result<Vec<usize>> {
    let n = g.vertex_count();
    let mut owner = vec![usize::MAX; n];
    for (j, &uj) in u.iter().enumerate() {
        if uj >= n {
            return Err(Error::BadVertex { v: uj, n });
        }
        if owner[uj] != usize::MAX {
            return Err(Error::BadParameter(format!("vertex {uj} repeated in U")));
        }
        owner[uj] = j;
    }
    for (w, slot) in owner.iter_mut().enumerate() {
        if *slot == usize::MAX {
            *slot = u
                .iter()
                .position(|&ui| g.closed_row(ui).contains(w))
                .ok_or(Error::NotDominating)?;
        }
    }
    Ok(owner)
}

fn resolve_gamma(
    g: &Graph,
    hint: Option<&DominationResult>,
    limits: &SolverLimits,
) -> Result<usize> {
    match hint {
        None => Ok(gamma_bb(g, &limits.unrestricted())?.gamma),
        Some(r) => {
            if r.witness.universe() != g.vertex_count() || !g.is_dominating(&r.witness) {
                return Err(Error::BadHint("witness does not dominate".into()));
            }
            if r.witness.len() != r.gamma {
                return Err(Error::BadHint(format!(
                    "witness has {} vertices, claimed {}",
                    r.witness.len(),
                    r.gamma
                )));
            }
            Ok(r.gamma)
        }
    }
}

fn product_for(g: &Graph, h: &Graph, d: &VertexSet) -> Result<ProductGraph> {
    let pg = cartesian_product_with_limit(g, h, usize::MAX)?;
    if d.universe() != pg.vertex_count() {
        return Err(Error::UniverseMismatch {
            expected: pg.vertex_count(),
            found: d.universe(),
        });
    }
    if !pg.graph().is_dominating(d) {
        return Err(Error::NotDominating);
    }
    Ok(pg)
}

/// Builds the trace for a dominating set `d` of `g □ h`. `U` is the
/// lexicographically first minimum subset of the projection that dominates
/// `g`. The factors are used as given; callers wanting `γ(G) ≥ γ(H)` orient
/// them first.
pub fn build_trace(
    g: &Graph,
    h: &Graph,
    d: &VertexSet,
    hints: TraceHints<'_>,
    limits: &SolverLimits,
) -> Result<ProofTrace> {
    let pg = product_for(g, h, d)?;
    let q = pg.project_onto_g(d);
    let u = gamma_restricted(g, &q, limits)?.witness.to_vec();
    let gamma_g = resolve_gamma(g, hints.gamma_g, limits)?;
    let gamma_h = resolve_gamma(h, hints.gamma_h, limits)?;
    assemble(g, h, pg, d, u, gamma_g, gamma_h)
}

/// Builds the trace with an explicit ordered `U ⊆ Q` that dominates `g`.
pub fn build_trace_with_u(
    g: &Graph,
    h: &Graph,
    d: &VertexSet,
    u: &[usize],
    hints: TraceHints<'_>,
    limits: &SolverLimits,
) -> Result<ProofTrace> {
    let pg = product_for(g, h, d)?;
    let q = pg.project_onto_g(d);
    let uset = VertexSet::from_vertices(g.vertex_count(), u.iter().copied())?;
    if !uset.is_subset(&q) {
        return Err(Error::BadParameter(
            "U must be a subset of the projection".into(),
        ));
    }
    if !g.is_dominating(&uset) {
        return Err(Error::NotDominating);
    }
    let gamma_g = resolve_gamma(g, hints.gamma_g, limits)?;
    let gamma_h = resolve_gamma(h, hints.gamma_h, limits)?;
    assemble(g, h, pg, d, u.to_vec(), gamma_g, gamma_h)
}

fn assemble(
    g: &Graph,
    h: &Graph,
    pg: ProductGraph,
    d: &VertexSet,
    u: Vec<usize>,
    gamma_g: usize,
    gamma_h: usize,
) -> Result<ProofTrace> {
    let (n_g, n_h) = (g.vertex_count(), h.vertex_count());
    let k = u.len();
    let pi = build_partition(g, &u)?;
    let mut blocks = vec![VertexSet::empty(n_g); k];
    for (w, &i) in pi.iter().enumerate() {
        blocks[i].insert(w);
    }
    let all_h = VertexSet::full(n_h);

    let s: Vec<VertexSet> = u
        .iter()
        .map(|&ui| pg.h_column(ui).intersection(d))
        .collect();
    let t: Vec<VertexSet> = s.iter().map(|si| pg.project_onto_h(si)).collect();
    let d_parts: Vec<VertexSet> = blocks
        .iter()
        .map(|b| pg.rectangle(b, &all_h).intersection(d))
        .collect();
    let p: Vec<VertexSet> = d_parts.iter().map(|di| pg.project_onto_h(di)).collect();
    let q_layers: Vec<VertexSet> = (0..n_h).map(|v| pg.g_layer(v).intersection(d)).collect();

    // literal membership test against N[Q_v] in the product graph
    let layer_cover: Vec<VertexSet> = q_layers
        .iter()
        .map(|qv| pg.graph().closed_neighborhood_set(qv))
        .collect::<Result<_>>()?;
    let mut c = Vec::new();
    for (i, block) in blocks.iter().enumerate() {
        for (v, cover) in layer_cover.iter().enumerate() {
            let target = pg.rectangle(block, &VertexSet::singleton(n_h, v));
            if target.is_subset(cover) {
                c.push((i, v));
            }
        }
    }
    let mut l_sizes = vec![0; k];
    let mut r_sizes = vec![0; n_h];
    for &(i, v) in &c {
        l_sizes[i] += 1;
        r_sizes[v] += 1;
    }

    Ok(ProofTrace {
        g: g.clone(),
        h: h.clone(),
        q: pg.project_onto_g(d),
        product: pg,
        d: d.clone(),
        u,
        k,
        pi,
        blocks,
        s,
        t,
        d_parts,
        p,
        q_layers,
        c,
        l_sizes,
        r_sizes,
        gamma_g,
        gamma_h,
    })
}

impl ProofTrace {
    pub fn g(&self) -> &Graph {
        &self.g
    }

    pub fn h(&self) -> &Graph {
        &self.h
    }

    pub fn product(&self) -> &ProductGraph {
        &self.product
    }

    pub fn in_c(&self, i: usize, v: usize) -> bool {
        self.c.binary_search(&(i, v)).is_ok()
    }

    /// `V(H) − N_H[P_i]`.
    pub fn undominated_by_p(&self, i: usize) -> VertexSet {
        self.h.cover(&self.p[i]).complement()
    }

    /// Partition and counting identities the construction must satisfy.
    /// Empty on a well-formed trace.
    pub fn structural_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let n_g = self.g.vertex_count();
        if self.blocks.iter().map(VertexSet::len).sum::<usize>() != n_g {
            out.push("blocks do not cover V(G) exactly once".into());
        }
        for (i, b) in self.blocks.iter().enumerate() {
            if !b.contains(self.u[i]) {
                out.push(format!("u_{i} not in its block"));
            }
            if !b.is_subset(self.g.closed_row(self.u[i])) {
                out.push(format!("block {i} not inside N[u_{i}]"));
            }
            for b2 in &self.blocks[i + 1..] {
                if !b.is_disjoint(b2) {
                    out.push(format!("block {i} overlaps a later block"));
                }
            }
            if !self.s[i].is_subset(&self.d_parts[i]) {
                out.push(format!("S_{i} not inside D_{i}"));
            }
            if self.t[i].len() != self.s[i].len() {
                out.push(format!("|T_{i}| != |S_{i}|"));
            }
        }
        let mut union = VertexSet::empty(self.d.universe());
        for di in &self.d_parts {
            if !union.is_disjoint(di) {
                out.push("D parts overlap".into());
            }
            union.union_with(di);
        }
        if union != self.d {
            out.push("D parts do not cover D".into());
        }
        let sum_l: usize = self.l_sizes.iter().sum();
        let sum_r: usize = self.r_sizes.iter().sum();
        if sum_l != self.c.len() || sum_r != self.c.len() {
            out.push(format!(
                "|C| = {}, sum |L_i| = {sum_l}, sum |R_v| = {sum_r}",
                self.c.len()
            ));
        }
        if self.q_layers.iter().map(VertexSet::len).sum::<usize>() != self.d.len() {
            out.push("layers Q_v do not partition D".into());
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckId {
    T,
    PDom,
    PIneq,
    Disjoint,
    Membership,
    L,
    Eq1,
    R,
    Eq2,
    Final,
    RemarkSplit,
    RemarkCount,
    RemarkProduct,
    RemarkConjecture,
}

impl CheckId {
    pub const CORE: [CheckId; 10] = [
        CheckId::T,
        CheckId::PDom,
        CheckId::PIneq,
        CheckId::Disjoint,
        CheckId::Membership,
        CheckId::L,
        CheckId::Eq1,
        CheckId::R,
        CheckId::Eq2,
        CheckId::Final,
    ];

    pub fn key(self) -> &'static str {
        match self {
            CheckId::T => "check_T",
            CheckId::PDom => "check_Pdom",
            CheckId::PIneq => "check_Pineq",
            CheckId::Disjoint => "check_disjoint",
            CheckId::Membership => "check_membership",
            CheckId::L => "check_L",
            CheckId::Eq1 => "check_eq1",
            CheckId::R => "check_R",
            CheckId::Eq2 => "check_eq2",
            CheckId::Final => "check_final",
            CheckId::RemarkSplit => "remark_split",
            CheckId::RemarkCount => "remark_count",
            CheckId::RemarkProduct => "remark_product",
            CheckId::RemarkConjecture => "remark_conjecture",
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            CheckId::T => "for all i: |T_i| = |S_i| ≥ 1",
            CheckId::PDom => "for all i: P_i ∪ (V(H) − N_H[P_i]) dominates H",
            CheckId::PIneq => "for all i: |V(H) − N_H[P_i]| ≥ γ(H) − |P_i|",
            CheckId::Disjoint => "for all i: (V(H) − N_H[P_i]) ∩ T_i = ∅",
            CheckId::Membership => "v ∈ (V(H) − N_H[P_i]) ∪ T_i ⇒ (i,v) ∈ C",
            CheckId::L => "for all i: |L_i| ≥ |V(H) − N_H[P_i]| + |T_i|",
            CheckId::Eq1 => "lower count: |C| ≥ kγ(H) − |D| + k",
            CheckId::R => "for all v: |R_v| ≤ |Q_v|",
            CheckId::Eq2 => "upper count: |C| ≤ Σ|R_v| ≤ Σ|Q_v| = |D|",
            CheckId::Final => "2|D| ≥ kγ(H) + k and 2|D| ≥ γ(G)γ(H) + max(γ(G),γ(H))",
            CheckId::RemarkSplit => "|C| ≥ Σ(|V(H) − N_H[P_i]| + |T_i|)",
            CheckId::RemarkCount => "Σ(|V(H) − N_H[P_i]| + |T_i|) ≥ Σ(γ(H) − |P_i| + |D_i|)",
            CheckId::RemarkProduct => "Σ(γ(H) − |P_i| + |D_i|) ≥ γ(G)γ(H)",
            CheckId::RemarkConjecture => "2|D| ≥ 2γ(G)γ(H)",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "=")]
    Eq,
}

impl Relation {
    fn holds(self, lhs: i64, rhs: i64) -> bool {
        match self {
            Relation::Ge => lhs >= rhs,
            Relation::Le => lhs <= rhs,
            Relation::Eq => lhs == rhs,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Relation::Ge => "≥",
            Relation::Le => "≤",
            Relation::Eq => "=",
        }
    }
}

/// One evaluated inequality. For checks quantified over blocks or layers,
/// `lhs`/`rhs` are taken from the tightest instance and `failing` lists the
/// indices where it fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: CheckId,
    pub passed: bool,
    pub lhs: i64,
    pub relation: Relation,
    pub rhs: i64,
    pub failing: Vec<usize>,
}

impl Check {
    fn single(id: CheckId, lhs: i64, relation: Relation, rhs: i64) -> Check {
        Check {
            id,
            passed: relation.holds(lhs, rhs),
            lhs,
            relation,
            rhs,
            failing: Vec::new(),
        }
    }

    /// Folds a family of instances `(lhs, rhs)` of one inequality.
    fn forall<I>(id: CheckId, relation: Relation, instances: I) -> Check
    where
        I: IntoIterator<Item = (i64, i64)>,
    {
        let slack = |l: i64, r: i64| match relation {
            Relation::Ge => l - r,
            Relation::Le => r - l,
            Relation::Eq => -(l - r).abs(),
        };
        let mut failing = Vec::new();
        let mut tightest: Option<(i64, i64)> = None;
        for (idx, (l, r)) in instances.into_iter().enumerate() {
            if !relation.holds(l, r) {
                failing.push(idx);
            }
            if tightest.is_none_or(|(tl, tr)| slack(l, r) < slack(tl, tr)) {
                tightest = Some((l, r));
            }
        }
        let (lhs, rhs) = tightest.unwrap_or((0, 0));
        Check {
            id,
            passed: failing.is_empty(),
            lhs,
            relation,
            rhs,
            failing,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} → {} {} {} {}",
            self.id.key(),
            self.id.label(),
            self.lhs,
            self.relation.symbol(),
            self.rhs,
            if self.passed { "PASS" } else { "FAIL" }
        )
    }
}

/// Aggregate quantities of the counting argument.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainValues {
    pub d: i64,
    pub k: i64,
    pub gamma_g: i64,
    pub gamma_h: i64,
    pub c: i64,
    pub sum_l: i64,
    pub sum_r: i64,
    pub sum_q: i64,
    /// `kγ(H) − |D| + k`
    pub lower_count: i64,
    /// `2|D|`
    pub twice_d: i64,
    /// `kγ(H) + k`
    pub final_k: i64,
    /// `γ(G)γ(H) + max(γ(G), γ(H))`
    pub final_gamma: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceVerdict {
    pub checks: Vec<Check>,
    pub values: ChainValues,
}

impl TraceVerdict {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, id: CheckId) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Evaluates the ten inequalities on the trace's sets. No domination
/// numbers are recomputed.
pub fn verify_trace(t: &ProofTrace) -> TraceVerdict {
    let k = t.k;
    let n_h = t.h.vertex_count();
    let gh = t.gamma_h as i64;
    let gg = t.gamma_g as i64;
    let d = t.d.len() as i64;
    let missed: Vec<VertexSet> = (0..k).map(|i| t.undominated_by_p(i)).collect();
    let z = |x: usize| x as i64;

    let mut checks = Vec::with_capacity(10);
    checks.push(Check::forall(
        CheckId::T,
        Relation::Ge,
        t.t.iter().map(|ti| (z(ti.len()), 1)),
    ));
    checks.push(Check::forall(
        CheckId::PDom,
        Relation::Eq,
        (0..k).map(|i| (t.h.is_dominating(&t.p[i].union(&missed[i])) as i64, 1)),
    ));
    checks.push(Check::forall(
        CheckId::PIneq,
        Relation::Ge,
        (0..k).map(|i| (z(missed[i].len()), gh - z(t.p[i].len()))),
    ));
    checks.push(Check::forall(
        CheckId::Disjoint,
        Relation::Eq,
        (0..k).map(|i| (z(missed[i].intersection_len(&t.t[i])), 0)),
    ));
    checks.push(Check::forall(
        CheckId::Membership,
        Relation::Eq,
        (0..k).map(|i| {
            let required = missed[i].union(&t.t[i]);
            let present = required.iter().filter(|&v| t.in_c(i, v)).count();
            (z(present), z(required.len()))
        }),
    ));
    checks.push(Check::forall(
        CheckId::L,
        Relation::Ge,
        (0..k).map(|i| (z(t.l_sizes[i]), z(missed[i].len() + t.t[i].len()))),
    ));

    let c = z(t.c.len());
    let kk = z(k);
    let lower_count = kk * gh - d + kk;
    checks.push(Check::single(CheckId::Eq1, c, Relation::Ge, lower_count));
    checks.push(Check::forall(
        CheckId::R,
        Relation::Le,
        (0..n_h).map(|v| (z(t.r_sizes[v]), z(t.q_layers[v].len()))),
    ));
    let sum_l = z(t.l_sizes.iter().sum());
    let sum_r = z(t.r_sizes.iter().sum());
    let sum_q = z(t.q_layers.iter().map(VertexSet::len).sum());
    let mut eq2 = Check::single(CheckId::Eq2, c, Relation::Le, d);
    eq2.passed = c <= sum_r && sum_r <= sum_q && sum_q == d;
    checks.push(eq2);

    let twice_d = 2 * d;
    let final_k = kk * gh + kk;
    let final_gamma = gg * gh + gg.max(gh);
    checks.push(Check::single(
        CheckId::Final,
        twice_d,
        Relation::Ge,
        final_k.max(final_gamma),
    ));

    TraceVerdict {
        checks,
        values: ChainValues {
            d,
            k: kk,
            gamma_g: gg,
            gamma_h: gh,
            c,
            sum_l,
            sum_r,
            sum_q,
            lower_count,
            twice_d,
            final_k,
            final_gamma,
        },
    }
}

/// The smaller dominating subset of `Q` that would exist if `|R_v| > |Q_v|`
/// for the layer `v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContradictionWitness {
    pub layer: usize,
    pub set: VertexSet,
    pub dominates: bool,
    pub within_q: bool,
    pub smaller_than_u: bool,
}

/// Builds `U' = π_G(Q_v) ∪ {u_j : (j, v) ∉ C}` for layer `v`, but only when
/// `|R_v| > |Q_v|`; otherwise `None`. On a valid trace this is always `None`.
pub fn contradiction_witness(t: &ProofTrace, v: usize) -> Option<ContradictionWitness> {
    if v >= t.r_sizes.len() || t.r_sizes[v] <= t.q_layers[v].len() {
        return None;
    }
    let mut set = t.product.project_onto_g(&t.q_layers[v]);
    for (j, &uj) in t.u.iter().enumerate() {
        if !t.in_c(j, v) {
            set.insert(uj);
        }
    }
    Some(ContradictionWitness {
        layer: v,
        dominates: t.g.is_dominating(&set),
        within_q: set.is_subset(&t.q),
        smaller_than_u: set.len() < t.k,
        set,
    })
}

pub fn contradiction_witnesses(t: &ProofTrace) -> Vec<ContradictionWitness> {
    (0..t.h.vertex_count())
        .filter_map(|v| contradiction_witness(t, v))
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct RemarkVerdict {
    pub base: TraceVerdict,
    pub checks: Vec<Check>,
    /// `Σ(|V(H) − N_H[P_i]| + |T_i|)`
    pub split_sum: i64,
    /// `Σ(γ(H) − |P_i| + |D_i|)`
    pub remark_sum: i64,
    /// `γ(G)γ(H)`
    pub product_bound: i64,
}

impl RemarkVerdict {
    pub fn passed(&self) -> bool {
        self.base.passed() && self.checks.iter().all(|c| c.passed)
    }
}

/// Rebuilds the trace with `U = Q` for a dominating set whose projection
/// onto `g` is a minimal dominating set, and checks the strengthened count
/// `|C| ≥ Σ(γ(H) − |P_i| + |D_i|) ≥ γ(G)γ(H)`.
pub fn remark_trace(
    g: &Graph,
    h: &Graph,
    d: &VertexSet,
    hints: TraceHints<'_>,
    limits: &SolverLimits,
) -> Result<(ProofTrace, RemarkVerdict)> {
    let pg = product_for(g, h, d)?;
    let q = pg.project_onto_g(d);
    if !is_minimal_dominating(g, &q) {
        return Err(Error::ProjectionNotMinimal);
    }
    let trace = build_trace_with_u(g, h, d, &q.to_vec(), hints, limits)?;
    let base = verify_trace(&trace);

    let gh = trace.gamma_h as i64;
    let split_sum: i64 = (0..trace.k)
        .map(|i| (trace.undominated_by_p(i).len() + trace.t[i].len()) as i64)
        .sum();
    let remark_sum: i64 = (0..trace.k)
        .map(|i| gh - trace.p[i].len() as i64 + trace.d_parts[i].len() as i64)
        .sum();
    let product_bound = trace.gamma_g as i64 * gh;
    let c = trace.c.len() as i64;
    let d_len = trace.d.len() as i64;
    let checks = vec![
        Check::single(CheckId::RemarkSplit, c, Relation::Ge, split_sum),
        Check::single(CheckId::RemarkCount, split_sum, Relation::Ge, remark_sum),
        Check::single(
            CheckId::RemarkProduct,
            remark_sum,
            Relation::Ge,
            product_bound,
        ),
        Check::single(
            CheckId::RemarkConjecture,
            2 * d_len,
            Relation::Ge,
            2 * product_bound,
        ),
    ];
    let verdict = RemarkVerdict {
        base,
        checks,
        split_sum,
        remark_sum,
        product_bound,
    };
    Ok((trace, verdict))
}

#[derive(Clone, Debug, Serialize)]
pub struct TraceSizes {
    pub d: usize,
    pub q: usize,
    pub k: usize,
    pub u: Vec<usize>,
    pub c: usize,
    pub gamma_g: usize,
    pub gamma_h: usize,
    pub pi: Vec<usize>,
    pub s: Vec<usize>,
    pub t: Vec<usize>,
    pub d_parts: Vec<usize>,
    pub p: Vec<usize>,
    pub q_layers: Vec<usize>,
    pub l: Vec<usize>,
    pub r: Vec<usize>,
}

/// Structured export of a trace and its verdict.
#[derive(Clone, Debug, Serialize)]
pub struct TraceReport {
    pub sizes: TraceSizes,
    pub passed: bool,
    pub checks: Vec<Check>,
    pub values: ChainValues,
    pub contradictions: Vec<ContradictionWitness>,
}

impl TraceReport {
    pub fn new(t: &ProofTrace, verdict: &TraceVerdict) -> TraceReport {
        let lens = |v: &[VertexSet]| v.iter().map(VertexSet::len).collect::<Vec<_>>();
        let contradictions = contradiction_witnesses(t);
        TraceReport {
            sizes: TraceSizes {
                d: t.d.len(),
                q: t.q.len(),
                k: t.k,
                u: t.u.clone(),
                c: t.c.len(),
                gamma_g: t.gamma_g,
                gamma_h: t.gamma_h,
                pi: lens(&t.blocks),
                s: lens(&t.s),
                t: lens(&t.t),
                d_parts: lens(&t.d_parts),
                p: lens(&t.p),
                q_layers: lens(&t.q_layers),
                l: t.l_sizes.clone(),
                r: t.r_sizes.clone(),
            },
            passed: verdict.passed() && contradictions.is_empty(),
            checks: verdict.checks.clone(),
            values: verdict.values.clone(),
            contradictions,
        }
    }
}
