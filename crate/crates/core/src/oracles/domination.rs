//! Minimum dominating, independent dominating and edge dominating sets.
//!
//! Domination is closed-neighbourhood: a vertex dominates itself and its
//! neighbours. All three solvers recurse on the set of dominated (or, for
//! edges, covered) vertices, which fully determines the rest of the
//! problem, and memoise the optimum per state.

use alloc::vec::Vec;

use hashbrown::HashMap;

use super::{Certificate, NodeCounter, OptResult, OracleBudget};
use crate::bitset::{adjacency_sets, VertexSet};
use crate::error::Result;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DominationVariant {
    Plain,
    Independent,
    Edge,
}

struct VertexDomination {
    closed: Vec<VertexSet>,
    all: VertexSet,
    independent: bool,
    memo: HashMap<VertexSet, (u32, u32)>,
    counter: NodeCounter,
}

impl VertexDomination {
    fn candidates(&self, dominated: VertexSet, u: usize) -> VertexSet {
        if self.independent {
            // The new vertex must not be adjacent to (or in) the set so far,
            // i.e. it must itself be undominated.
            self.closed[u] - dominated
        } else {
            self.closed[u]
        }
    }

    fn solve(&mut self, dominated: VertexSet) -> Result<u32> {
        if dominated == self.all {
            return Ok(0);
        }
        if let Some(&(v, _)) = self.memo.get(&dominated) {
            return Ok(v);
        }
        self.counter.tick()?;
        let u = (self.all - dominated)
            .iter()
            .min_by_key(|&u| self.candidates(dominated, u).len())
            .unwrap();
        let mut best = (u32::MAX, u32::MAX);
        for w in self.candidates(dominated, u).iter() {
            let sub = self.solve(dominated | self.closed[w])?;
            if sub.saturating_add(1) < best.0 {
                best = (sub + 1, w as u32);
            }
        }
        self.memo.insert(dominated, best);
        Ok(best.0)
    }
}

struct EdgeDomination {
    edges: Vec<(usize, usize)>,
    incident: Vec<Vec<usize>>,
    memo: HashMap<VertexSet, (u32, u32)>,
    counter: NodeCounter,
}

impl EdgeDomination {
    // Edges that could dominate the undominated edge with the fewest such
    // edges; an edge is dominated once an endpoint is covered.
    fn branching_edges(&self, covered: VertexSet) -> Option<Vec<usize>> {
        self.edges
            .iter()
            .filter(|&&(u, v)| !covered.contains(u) && !covered.contains(v))
            .map(|&(u, v)| {
                let mut c: Vec<usize> = self.incident[u].iter().chain(&self.incident[v]).copied().collect();
                c.sort_unstable();
                c.dedup();
                c
            })
            .min_by_key(Vec::len)
    }

    fn solve(&mut self, covered: VertexSet) -> Result<u32> {
        if let Some(&(v, _)) = self.memo.get(&covered) {
            return Ok(v);
        }
        self.counter.tick()?;
        let Some(cands) = self.branching_edges(covered) else {
            self.memo.insert(covered, (0, u32::MAX));
            return Ok(0);
        };
        let mut best = (u32::MAX, u32::MAX);
        for i in cands {
            let (a, b) = self.edges[i];
            let sub = self.solve(covered.with(a).with(b))?;
            if sub.saturating_add(1) < best.0 {
                best = (sub + 1, i as u32);
            }
        }
        self.memo.insert(covered, best);
        Ok(best.0)
    }
}

/// Exact minimum (independent / edge) dominating set.
pub fn min_dominating_set(g: &Graph, variant: DominationVariant, budget: &OracleBudget) -> Result<OptResult> {
    budget.check_n(g.n())?;
    let adj = adjacency_sets(g)?;
    match variant {
        DominationVariant::Plain | DominationVariant::Independent => {
            let mut s = VertexDomination {
                closed: (0..g.n()).map(|v| adj[v].with(v)).collect(),
                all: VertexSet::full(g.n()),
                independent: variant == DominationVariant::Independent,
                memo: HashMap::new(),
                counter: NodeCounter::new(budget, "dominating set"),
            };
            let value = s.solve(VertexSet::EMPTY)?;
            let mut chosen = Vec::new();
            let mut dom = VertexSet::EMPTY;
            while dom != s.all {
                let w = s.memo[&dom].1 as usize;
                chosen.push(w);
                dom |= s.closed[w];
            }
            chosen.sort_unstable();
            Ok(OptResult {
                value: value as usize,
                certificate: Certificate::Vertices(chosen),
            })
        }
        DominationVariant::Edge => {
            let mut incident = alloc::vec![Vec::new(); g.n()];
            for (i, &(u, v)) in g.edges().iter().enumerate() {
                incident[u].push(i);
                incident[v].push(i);
            }
            let mut s = EdgeDomination {
                edges: g.edges().to_vec(),
                incident,
                memo: HashMap::new(),
                counter: NodeCounter::new(budget, "edge dominating set"),
            };
            let value = s.solve(VertexSet::EMPTY)?;
            let mut chosen = Vec::new();
            let mut cov = VertexSet::EMPTY;
            loop {
                let i = s.memo[&cov].1;
                if i == u32::MAX {
                    break;
                }
                let e = s.edges[i as usize];
                chosen.push(e);
                cov = cov.with(e.0).with(e.1);
            }
            chosen.sort_unstable();
            Ok(OptResult {
                value: value as usize,
                certificate: Certificate::Edges(chosen),
            })
        }
    }
}
