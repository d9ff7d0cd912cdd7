//! Exact values of the total domination game.
//!
//! A [`Solver`] is bound to one graph and memoizes the number of remaining
//! moves for every `(dominated set, mover)` pair it has seen. The table is
//! shared by all starting sets, so sweeping many partially dominated states of
//! the same graph costs little more than solving the empty one.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{legal_moves_mask, DominationState, Graph, Vertex, VertexSet};

/// Player to move.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mover {
    Dominator,
    Staller,
}

impl Mover {
    pub fn other(self) -> Mover {
        match self {
            Mover::Dominator => Mover::Staller,
            Mover::Staller => Mover::Dominator,
        }
    }

    fn index(self) -> usize {
        match self {
            Mover::Dominator => 0,
            Mover::Staller => 1,
        }
    }
}

impl std::str::FromStr for Mover {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mover> {
        match s.to_ascii_lowercase().as_str() {
            "dominator" | "d" => Ok(Mover::Dominator),
            "staller" | "s" => Ok(Mover::Staller),
            other => Err(Error::OutOfBounds(format!("unknown player `{other}`"))),
        }
    }
}

impl std::fmt::Display for Mover {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Mover::Dominator => "dominator",
            Mover::Staller => "staller",
        })
    }
}

/// Graphs up to this order get a flat table indexed by mask.
const DENSE_LIMIT: usize = 20;
const UNKNOWN: u8 = u8::MAX;

/// Exact minimax values keyed by `(dominated mask, mover)`.
#[derive(Clone, Debug)]
pub enum MemoTable {
    Dense(Vec<u8>),
    Sparse(HashMap<(u64, Mover), u8>),
}

impl MemoTable {
    fn for_order(n: usize) -> MemoTable {
        if n <= DENSE_LIMIT {
            MemoTable::Dense(vec![UNKNOWN; 2usize << n])
        } else {
            MemoTable::Sparse(HashMap::new())
        }
    }

    #[inline]
    fn get(&self, mask: u64, mover: Mover) -> Option<u8> {
        match self {
            MemoTable::Dense(t) => {
                let v = t[(mask as usize) << 1 | mover.index()];
                (v != UNKNOWN).then_some(v)
            }
            MemoTable::Sparse(m) => m.get(&(mask, mover)).copied(),
        }
    }

    #[inline]
    fn put(&mut self, mask: u64, mover: Mover, value: u8) {
        match self {
            MemoTable::Dense(t) => t[(mask as usize) << 1 | mover.index()] = value,
            MemoTable::Sparse(m) => {
                m.insert((mask, mover), value);
            }
        }
    }

    /// Number of stored entries.
    pub fn len(&self) -> usize {
        match self {
            MemoTable::Dense(t) => t.iter().filter(|&&v| v != UNKNOWN).count(),
            MemoTable::Sparse(m) => m.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Memoized minimax solver for one graph.
#[derive(Clone, Debug)]
pub struct Solver<'g> {
    graph: &'g Graph,
    full: u64,
    memo: MemoTable,
    ordered: bool,
    states_visited: u64,
}

impl<'g> Solver<'g> {
    /// Solver with move ordering and bound cutoffs enabled.
    pub fn new(graph: &'g Graph) -> Result<Solver<'g>> {
        Self::with_ordering(graph, true)
    }

    /// `ordered = false` gives the plain memoized minimax that examines every
    /// child of every state. Both settings return identical values.
    pub fn with_ordering(graph: &'g Graph, ordered: bool) -> Result<Solver<'g>> {
        graph.require_no_isolated()?;
        Ok(Solver {
            graph,
            full: graph.vertices().0,
            memo: MemoTable::for_order(graph.order()),
            ordered,
            states_visited: 0,
        })
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    /// Distinct non-terminal states expanded so far.
    pub fn states_visited(&self) -> u64 {
        self.states_visited
    }

    pub fn memo(&self) -> &MemoTable {
        &self.memo
    }

    /// Remaining moves under optimal play from `dominated` with `mover` to play.
    pub fn value(&mut self, dominated: VertexSet, mover: Mover) -> usize {
        debug_assert!(dominated.is_subset(self.graph.vertices()));
        self.search(dominated.0, mover) as usize
    }

    pub fn dtg(&mut self, dominated: VertexSet) -> usize {
        self.value(dominated, Mover::Dominator)
    }

    pub fn stg(&mut self, dominated: VertexSet) -> usize {
        self.value(dominated, Mover::Staller)
    }

    /// Every legal move that attains the optimum for `mover`, in increasing
    /// vertex order.
    pub fn optimal_moves(&mut self, dominated: VertexSet, mover: Mover) -> Result<VertexSet> {
        if dominated.0 == self.full {
            return Err(Error::TerminalState);
        }
        let target = self.value(dominated, mover) - 1;
        let mut out = VertexSet::EMPTY;
        for v in legal_moves_mask(self.graph, dominated) {
            let child = dominated.union(self.graph.neighbors(v));
            if self.value(child, mover.other()) == target {
                out.insert(v);
            }
        }
        debug_assert!(!out.is_empty());
        Ok(out)
    }

    fn search(&mut self, dominated: u64, mover: Mover) -> u8 {
        if dominated == self.full {
            return 0;
        }
        if let Some(v) = self.memo.get(dominated, mover) {
            return v;
        }
        self.states_visited += 1;

        // Moves with equal new neighborhoods lead to the same state.
        let mut children: Vec<(u32, u64)> = Vec::with_capacity(self.graph.order());
        for v in 0..self.graph.order() {
            let nbrs = self.graph.neighbors(v).0;
            let gain = nbrs & !dominated;
            if gain != 0 {
                children.push((gain.count_ones(), dominated | nbrs));
            }
        }
        children.sort_unstable_by_key(|&(_, m)| m);
        children.dedup_by_key(|&mut (_, m)| m);

        let undominated = (self.full & !dominated).count_ones();
        let (lower, upper) = if self.ordered {
            let max_gain = children.iter().map(|&(g, _)| g).max().unwrap_or(1);
            match mover {
                Mover::Dominator => children.sort_by_key(|&(g, m)| (std::cmp::Reverse(g), m)),
                Mover::Staller => children.sort_by_key(|&(g, m)| (g, m)),
            }
            (undominated.div_ceil(max_gain) as u8, undominated as u8)
        } else {
            (0, u8::MAX)
        };

        let mut best = match mover {
            Mover::Dominator => u8::MAX,
            Mover::Staller => 0,
        };
        for &(_, child) in &children {
            let v = 1 + self.search(child, mover.other());
            match mover {
                Mover::Dominator => {
                    best = best.min(v);
                    if best <= lower {
                        break;
                    }
                }
                Mover::Staller => {
                    best = best.max(v);
                    if best >= upper {
                        break;
                    }
                }
            }
        }
        self.memo.put(dominated, mover, best);
        best
    }
}

/// Game length on `state` with Dominator to move.
pub fn dtg(state: &DominationState<'_>) -> Result<usize> {
    Ok(Solver::new(state.graph())?.dtg(state.dominated()))
}

/// Game length on `state` with Staller to move.
pub fn stg(state: &DominationState<'_>) -> Result<usize> {
    Ok(Solver::new(state.graph())?.stg(state.dominated()))
}

pub fn optimal_moves(state: &DominationState<'_>, mover: Mover) -> Result<VertexSet> {
    Solver::new(state.graph())?.optimal_moves(state.dominated(), mover)
}

/// Everything known about the empty-start game on one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResult {
    pub gamma_t: usize,
    pub dtg: usize,
    pub stg: usize,
    pub optimal_first_moves_dominator: VertexSet,
    pub optimal_first_moves_staller: VertexSet,
    pub states_visited: u64,
}

pub fn solve(graph: &Graph) -> Result<SolveResult> {
    let mut solver = Solver::new(graph)?;
    let empty = VertexSet::EMPTY;
    Ok(SolveResult {
        gamma_t: gamma_t(graph)?,
        dtg: solver.dtg(empty),
        stg: solver.stg(empty),
        optimal_first_moves_dominator: solver.optimal_moves(empty, Mover::Dominator)?,
        optimal_first_moves_staller: solver.optimal_moves(empty, Mover::Staller)?,
        states_visited: solver.states_visited(),
    })
}

/// Total domination number.
pub fn gamma_t(graph: &Graph) -> Result<usize> {
    Ok(min_td_set(graph)?.len())
}

/// A minimum total dominating set, found by branch and bound.
///
/// Each node picks the undominated vertex with the fewest admissible
/// neighbors and branches on which of them joins the set; earlier siblings
/// are forbidden in later branches so no set is visited twice.
pub fn min_td_set(graph: &Graph) -> Result<VertexSet> {
    graph.require_no_isolated()?;
    let mut bb = TdBranchAndBound {
        graph,
        full: graph.vertices().0,
        best: graph.vertices(),
    };
    bb.branch(VertexSet::EMPTY, 0, 0);
    Ok(bb.best)
}

struct TdBranchAndBound<'g> {
    graph: &'g Graph,
    full: u64,
    best: VertexSet,
}

impl TdBranchAndBound<'_> {
    fn branch(&mut self, chosen: VertexSet, dominated: u64, forbidden: u64) {
        if dominated == self.full {
            if chosen.len() < self.best.len() {
                self.best = chosen;
            }
            return;
        }
        let undominated = self.full & !dominated;
        let allowed = self.full & !forbidden & !chosen.0;
        let max_gain = VertexSet(allowed)
            .iter()
            .map(|v| (self.graph.neighbors(v).0 & undominated).count_ones())
            .max()
            .unwrap_or(0);
        if max_gain == 0 {
            return;
        }
        let lower = chosen.len() + undominated.count_ones().div_ceil(max_gain) as usize;
        if lower >= self.best.len() {
            return;
        }

        let mut pick = None;
        let mut fewest = u32::MAX;
        for u in VertexSet(undominated) {
            let options = (self.graph.neighbors(u).0 & allowed).count_ones();
            if options < fewest {
                fewest = options;
                pick = Some(u);
            }
        }
        let u = pick.expect("an undominated vertex exists");
        if fewest == 0 {
            return;
        }
        let mut options: Vec<Vertex> = VertexSet(self.graph.neighbors(u).0 & allowed).to_vec();
        options.sort_by_key(|&w| std::cmp::Reverse((self.graph.neighbors(w).0 & undominated).count_ones()));
        let mut forbidden = forbidden;
        for w in options {
            self.branch(chosen.with(w), dominated | self.graph.neighbors(w).0, forbidden);
            forbidden |= 1u64 << w;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn set(v: &[Vertex]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn cycle_eight_breaks_the_forest_inequality() {
        let c8 = cycle(8);
        let mut s = Solver::new(&c8).unwrap();
        assert_eq!(s.dtg(VertexSet::EMPTY), 5);
        assert_eq!(s.stg(VertexSet::EMPTY), 4);
    }

    #[test]
    fn small_trees() {
        let r = solve(&complete(2)).unwrap();
        assert_eq!((r.gamma_t, r.dtg, r.stg), (2, 2, 2));
        let r = solve(&path(4)).unwrap();
        assert_eq!((r.gamma_t, r.dtg, r.stg), (2, 3, 3));
        let r = solve(&path(5)).unwrap();
        assert_eq!((r.gamma_t, r.dtg), (3, 3));
        let r = solve(&f10()).unwrap();
        assert_eq!((r.gamma_t, r.dtg), (6, 6));
        assert_eq!(r.optimal_first_moves_dominator, set(&[1, 7]));
    }

    #[test]
    fn terminal_states() {
        let p4 = path(4);
        let mut s = Solver::new(&p4).unwrap();
        assert_eq!(s.dtg(p4.vertices()), 0);
        assert_eq!(s.stg(p4.vertices()), 0);
        assert_eq!(s.optimal_moves(p4.vertices(), Mover::Dominator), Err(Error::TerminalState));
    }

    #[test]
    fn p3_center_is_optimal() {
        let p3 = path(3);
        let moves = optimal_moves(&DominationState::new(&p3), Mover::Dominator).unwrap();
        assert!(moves.contains(1));
        assert_eq!(dtg(&DominationState::new(&p3)).unwrap(), 2);
    }

    #[test]
    fn rejects_isolated_vertices() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(Solver::new(&g).unwrap_err(), Error::IsolatedVertex(2));
        assert_eq!(gamma_t(&g), Err(Error::IsolatedVertex(2)));
    }

    #[test]
    fn sparse_table_matches_dense() {
        let g = f10();
        let mut dense = Solver::new(&g).unwrap();
        let mut sparse = Solver::new(&g).unwrap();
        sparse.memo = MemoTable::Sparse(HashMap::new());
        for mask in 0..1u64 << g.order() {
            let s = VertexSet(mask);
            assert_eq!(dense.dtg(s), sparse.dtg(s));
            assert_eq!(dense.stg(s), sparse.stg(s));
        }
        assert!(matches!(Solver::new(&path(21)).unwrap().memo(), MemoTable::Sparse(_)));
    }

    #[test]
    fn min_td_set_is_td_set() {
        let g = f10();
        let s = min_td_set(&g).unwrap();
        assert_eq!(s.len(), 6);
        assert!(crate::graph::is_td_set(&g, s));
        assert_eq!(gamma_t(&cycle(8)).unwrap(), 4);
        assert_eq!(gamma_t(&star(5)).unwrap(), 2);
    }
}
