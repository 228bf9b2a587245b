//! Exact domination numbers.
//!
//! [`gamma_oracle`] is a plain exhaustive search used as a reference.
//! [`gamma_bb`] is the production solver: a branch and bound over bit rows
//! that finds the optimum size, followed by a lexicographic search that
//! recovers the lexicographically first minimum set, so both solvers report
//! the same witness.

use itertools::Itertools;
use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_NODE_BUDGET: u64 = 200_000_000;
pub const DEFAULT_ORACLE_GUARD: usize = 16;
pub const DEFAULT_COMBINATION_BUDGET: u128 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DominationResult {
    pub gamma: usize,
    pub witness: VertexSet,
}

#[derive(Clone, Debug)]
pub struct SolverLimits {
    /// Maximum number of search-tree nodes per solve. Must be positive.
    pub node_budget: u64,
    /// When set, only these vertices may be chosen.
    pub candidate_mask: Option<VertexSet>,
    /// Largest graph the exhaustive oracle accepts.
    pub oracle_guard: usize,
    /// Largest `C(n, gamma)` enumeration space accepted.
    pub combination_budget: u128,
}

impl Default for SolverLimits {
    fn default() -> Self {
        SolverLimits {
            node_budget: DEFAULT_NODE_BUDGET,
            candidate_mask: None,
            oracle_guard: DEFAULT_ORACLE_GUARD,
            combination_budget: DEFAULT_COMBINATION_BUDGET,
        }
    }
}

impl SolverLimits {
    pub fn with_node_budget(node_budget: u64) -> Result<Self> {
        if node_budget == 0 {
            return Err(Error::BadParameter("node budget must be positive".into()));
        }
        Ok(SolverLimits {
            node_budget,
            ..Default::default()
        })
    }

    pub fn with_candidates(&self, candidates: VertexSet) -> Self {
        SolverLimits {
            candidate_mask: Some(candidates),
            ..self.clone()
        }
    }

    pub fn unrestricted(&self) -> Self {
        SolverLimits {
            candidate_mask: None,
            ..self.clone()
        }
    }
}

/// Exhaustive search over all `k`-subsets for `k = 1, 2, ...`. The witness
/// is the lexicographically first minimum dominating set.
pub fn gamma_oracle(g: &Graph) -> Result<DominationResult> {
    gamma_oracle_with_guard(g, DEFAULT_ORACLE_GUARD)
}

pub fn gamma_oracle_with_guard(g: &Graph, guard: usize) -> Result<DominationResult> {
    let n = g.vertex_count();
    if n > guard {
        return Err(Error::TooLarge {
            what: "oracle input",
            size: n as u128,
            limit: guard as u128,
        });
    }
    for k in 1..=n {
        for combo in (0..n).combinations(k) {
            let s = VertexSet::from_vertices(n, combo)?;
            if g.is_dominating(&s) {
                return Ok(DominationResult {
                    gamma: k,
                    witness: s,
                });
            }
        }
    }
    unreachable!("the full vertex set always dominates")
}

struct Exhausted;

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    candidates: VertexSet,
    budget: u64,
    nodes: u64,
    best: usize,
    chosen: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, candidates: VertexSet, budget: u64) -> Self {
        Search {
            g,
            n: g.vertex_count(),
            candidates,
            budget,
            nodes: 0,
            best: usize::MAX,
            chosen: Vec::new(),
        }
    }

    #[inline]
    fn tick(&mut self) -> std::result::Result<(), Exhausted> {
        self.nodes += 1;
        if self.nodes > self.budget {
            Err(Exhausted)
        } else {
            Ok(())
        }
    }

    /// Greedy max-coverage dominating set drawn from the candidates.
    fn greedy(&self) -> usize {
        let mut covered = VertexSet::empty(self.n);
        let mut size = 0;
        while !covered.is_full() {
            let uncovered = covered.complement();
            let pick = self
                .candidates
                .iter()
                .map(|c| (self.g.closed_row(c).intersection_len(&uncovered), c))
                .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
                .expect("candidates dominate the graph");
            covered.union_with(self.g.closed_row(pick.1));
            size += 1;
        }
        size
    }

    /// Lower bound on the number of further picks needed to cover
    /// `uncovered` from `allowed`, or `None` when some vertex cannot be
    /// covered at all.
    ///
    /// Uncovered vertices whose allowed dominator sets are pairwise disjoint
    /// each need their own pick; independently, no pick covers more than the
    /// best single coverage.
    fn lower_bound(&self, uncovered: &VertexSet, allowed: &VertexSet) -> Option<usize> {
        let mut used = VertexSet::empty(self.n);
        let mut packing = 0;
        for u in uncovered {
            let dom = self.g.closed_row(u).intersection(allowed);
            if dom.is_empty() {
                return None;
            }
            if dom.is_disjoint(&used) {
                used.union_with(&dom);
                packing += 1;
            }
        }
        let best_cover = allowed
            .iter()
            .map(|c| self.g.closed_row(c).intersection_len(uncovered))
            .max()
            .unwrap_or(0);
        if best_cover == 0 {
            return Some(packing);
        }
        Some(packing.max(uncovered.len().div_ceil(best_cover)))
    }

    fn branch_and_bound(
        &mut self,
        covered: &VertexSet,
        allowed: &VertexSet,
    ) -> std::result::Result<(), Exhausted> {
        self.tick()?;
        let depth = self.chosen.len();
        let uncovered = covered.complement();
        if uncovered.is_empty() {
            if depth < self.best {
                self.best = depth;
            }
            return Ok(());
        }
        match self.lower_bound(&uncovered, allowed) {
            Some(lb) if depth + lb < self.best => {}
            _ => return Ok(()),
        }
        // uncovered vertex with the fewest remaining dominators
        let pivot = uncovered
            .iter()
            .min_by_key(|&u| (self.g.closed_row(u).intersection_len(allowed), u))
            .expect("nonempty");
        let mut children: Vec<(usize, usize)> = self
            .g
            .closed_row(pivot)
            .intersection(allowed)
            .iter()
            .map(|c| (self.g.closed_row(c).intersection_len(&uncovered), c))
            .collect();
        children.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));

        let mut allowed = allowed.clone();
        for (_, c) in children {
            if depth + 1 >= self.best {
                break;
            }
            self.chosen.push(c);
            let next = covered.union(self.g.closed_row(c));
            let r = self.branch_and_bound(&next, &allowed);
            self.chosen.pop();
            r?;
            // later siblings never use c again
            allowed.remove(c);
        }
        Ok(())
    }

    /// Visits, in lexicographic order, every `remaining`-element extension
    /// of `self.chosen` using candidates `>= start` that dominates the graph.
    /// Returns `Ok(true)` as soon as `visit` asks to stop.
    fn lex<F>(
        &mut self,
        start: usize,
        remaining: usize,
        covered: &VertexSet,
        visit: &mut F,
    ) -> std::result::Result<bool, Exhausted>
    where
        F: FnMut(&[usize]) -> bool,
    {
        self.tick()?;
        let uncovered = covered.complement();
        if remaining == 0 {
            return Ok(uncovered.is_empty() && visit(&self.chosen));
        }
        let mut allowed = self.candidates.clone();
        allowed.difference_with(&VertexSet::prefix(self.n, start));
        if allowed.len() < remaining {
            return Ok(false);
        }
        let mut last = usize::MAX;
        if let Some(first) = uncovered.first() {
            match self.lower_bound(&uncovered, &allowed) {
                Some(lb) if lb <= remaining => {}
                _ => return Ok(false),
            }
            // the first uncovered vertex needs a dominator among the picks
            last = self
                .g
                .closed_row(first)
                .intersection(&allowed)
                .last()
                .expect("lower bound checked coverage");
        }
        for c in allowed.iter() {
            if c > last {
                break;
            }
            self.chosen.push(c);
            let next = covered.union(self.g.closed_row(c));
            let r = self.lex(c + 1, remaining - 1, &next, visit);
            self.chosen.pop();
            if r? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

fn candidates_for(g: &Graph, limits: &SolverLimits) -> Result<VertexSet> {
    if limits.node_budget == 0 {
        return Err(Error::BadParameter("node budget must be positive".into()));
    }
    let n = g.vertex_count();
    let candidates = match &limits.candidate_mask {
        Some(mask) if mask.universe() != n => {
            return Err(Error::UniverseMismatch {
                expected: n,
                found: mask.universe(),
            })
        }
        Some(mask) => mask.clone(),
        None => VertexSet::full(n),
    };
    if !g.is_dominating(&candidates) {
        return Err(Error::NotDominating);
    }
    Ok(candidates)
}

fn minimum_size(search: &mut Search<'_>) -> Result<usize> {
    let upper = search.greedy();
    search.best = upper;
    let empty = VertexSet::empty(search.n);
    let candidates = search.candidates.clone();
    search
        .branch_and_bound(&empty, &candidates)
        .map_err(|_| Error::BudgetExhausted {
            budget: search.budget,
            best_upper: search.best,
        })?;
    Ok(search.best)
}

/// Exact domination number by branch and bound, honoring
/// `limits.candidate_mask` when set. The witness is the lexicographically
/// first minimum set.
pub fn gamma_bb(g: &Graph, limits: &SolverLimits) -> Result<DominationResult> {
    let candidates = candidates_for(g, limits)?;
    let mut search = Search::new(g, candidates, limits.node_budget);
    let gamma = minimum_size(&mut search)?;

    let mut witness = None;
    let empty = VertexSet::empty(search.n);
    search
        .lex(0, gamma, &empty, &mut |picked| {
            witness = Some(picked.to_vec());
            true
        })
        .map_err(|_| Error::BudgetExhausted {
            budget: limits.node_budget,
            best_upper: gamma,
        })?;
    let witness = witness.expect("a set of the optimum size exists");
    Ok(DominationResult {
        gamma,
        witness: VertexSet::from_vertices(search.n, witness)?,
    })
}

/// Minimum dominating set drawn only from `candidates`.
pub fn gamma_restricted(
    g: &Graph,
    candidates: &VertexSet,
    limits: &SolverLimits,
) -> Result<DominationResult> {
    gamma_bb(g, &limits.with_candidates(candidates.clone()))
}

pub fn is_minimal_dominating(g: &Graph, s: &VertexSet) -> bool {
    if !g.is_dominating(s) {
        return false;
    }
    let mut t = s.clone();
    for v in s {
        t.remove(v);
        if g.is_dominating(&t) {
            return false;
        }
        t.insert(v);
    }
    true
}

/// Drops redundant members of a dominating set, trying the highest vertex
/// first, until the set is minimal. A single pass suffices since removing
/// members only makes the survivors more necessary.
pub fn shrink_to_minimal(g: &Graph, s: &VertexSet) -> Result<VertexSet> {
    if !g.is_dominating(s) {
        return Err(Error::NotDominating);
    }
    let mut t = s.clone();
    for v in s.to_vec().into_iter().rev() {
        t.remove(v);
        if !g.is_dominating(&t) {
            t.insert(v);
        }
    }
    Ok(t)
}

#[derive(Clone, Debug, Serialize)]
pub struct MinimumSets {
    pub gamma: usize,
    pub sets: Vec<VertexSet>,
    /// More minimum sets exist beyond `sets`.
    pub truncated: bool,
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}

pub fn enumerate_minimum_dominating_sets(g: &Graph, cap: usize) -> Result<MinimumSets> {
    enumerate_minimum_dominating_sets_with(g, cap, &SolverLimits::default())
}

/// All dominating sets of size exactly `gamma(g)` in lexicographic order,
/// at most `cap` of them.
pub fn enumerate_minimum_dominating_sets_with(
    g: &Graph,
    cap: usize,
    limits: &SolverLimits,
) -> Result<MinimumSets> {
    if cap == 0 {
        return Err(Error::BadParameter("cap must be positive".into()));
    }
    let limits = limits.unrestricted();
    let n = g.vertex_count();
    let candidates = candidates_for(g, &limits)?;
    let mut search = Search::new(g, candidates, limits.node_budget);
    let gamma = minimum_size(&mut search)?;
    let space = binomial(n, gamma);
    if space > limits.combination_budget {
        return Err(Error::TooLarge {
            what: "minimum dominating set enumeration",
            size: space,
            limit: limits.combination_budget,
        });
    }

    let mut sets = Vec::new();
    let mut truncated = false;
    // enumeration is bounded by the combination budget, not the node budget
    search.budget = u64::MAX;
    let empty = VertexSet::empty(n);
    let _ = search.lex(0, gamma, &empty, &mut |picked| {
        if sets.len() == cap {
            truncated = true;
            return true;
        }
        sets.push(VertexSet::from_vertices(n, picked.iter().copied()).expect("in range"));
        false
    });
    Ok(MinimumSets {
        gamma,
        sets,
        truncated,
    })
}
