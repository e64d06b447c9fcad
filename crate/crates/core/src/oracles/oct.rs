//! Odd cycle transversal by a bounded search tree: every transversal must
//! hit each odd cycle, so branch over the vertices of a shortest one.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use super::{Certificate, NodeCounter, OptResult, OracleBudget};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A shortest odd cycle of the subgraph with live vertices `alive_v` and
/// live edges `alive_e`, as (vertices, edge indices).
pub(crate) fn shortest_odd_cycle(g: &Graph, alive_v: &[bool], alive_e: &[bool]) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = g.n();
    let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![(usize::MAX, usize::MAX); n];
    for root in (0..n).filter(|&v| alive_v[v]) {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        let mut found = None;
        'bfs: while let Some(u) = queue.pop_front() {
            if let Some((c, _)) = &best {
                if 2 * dist[u] + 1 >= c.len() {
                    break;
                }
            }
            for &w in g.neighbors(u) {
                let e = g.edge_index(u, w).unwrap();
                if !alive_v[w] || !alive_e[e] {
                    continue;
                }
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = (u, e);
                    queue.push_back(w);
                } else if dist[w] == dist[u] {
                    found = Some((u, w, e));
                    break 'bfs;
                }
            }
        }
        let Some((x, y, e)) = found else { continue };
        // Walk both ends up to their lowest common ancestor.
        let (mut a, mut b) = (x, y);
        let (mut left, mut right) = (vec![x], vec![y]);
        let (mut left_e, mut right_e) = (Vec::new(), Vec::new());
        while a != b {
            let (pa, ea) = parent[a];
            let (pb, eb) = parent[b];
            left_e.push(ea);
            right_e.push(eb);
            a = pa;
            b = pb;
            left.push(a);
            right.push(b);
        }
        right.pop();
        right.reverse();
        left.extend(right);
        right_e.reverse();
        left_e.extend(right_e);
        left_e.push(e);
        if best.as_ref().is_none_or(|(c, _)| left.len() < c.len()) {
            best = Some((left, left_e));
        }
    }
    best
}

struct Search<'a> {
    g: &'a Graph,
    independent: bool,
    alive: Vec<bool>,
    chosen: Vec<usize>,
    all_edges: Vec<bool>,
    counter: NodeCounter,
}

impl Search<'_> {
    fn run(&mut self, budget: usize) -> Result<bool> {
        self.counter.tick()?;
        let Some((cycle, _)) = shortest_odd_cycle(self.g, &self.alive, &self.all_edges) else {
            return Ok(true);
        };
        if budget == 0 {
            return Ok(false);
        }
        for v in cycle {
            if self.independent && self.g.neighbors(v).iter().any(|&w| !self.alive[w]) {
                continue;
            }
            self.alive[v] = false;
            self.chosen.push(v);
            if self.run(budget - 1)? {
                return Ok(true);
            }
            self.chosen.pop();
            self.alive[v] = true;
        }
        Ok(false)
    }
}

/// An (independent) odd cycle transversal with at most `k` vertices, if any.
pub fn odd_cycle_transversal_at_most(
    g: &Graph,
    k: usize,
    independent: bool,
    budget: &OracleBudget,
) -> Result<Option<Vec<usize>>> {
    let mut s = Search {
        g,
        independent,
        alive: vec![true; g.n()],
        chosen: Vec::new(),
        all_edges: vec![true; g.m()],
        counter: NodeCounter::new(budget, "odd cycle transversal"),
    };
    if s.run(k)? {
        let mut c = s.chosen;
        c.sort_unstable();
        Ok(Some(c))
    } else {
        Ok(None)
    }
}

/// Minimum (independent) odd cycle transversal, by increasing size.
///
/// Graphs without an independent odd cycle transversal (e.g. `K4`) give
/// [`Error::Infeasible`].
pub fn min_odd_cycle_transversal(g: &Graph, independent: bool, budget: &OracleBudget) -> Result<OptResult> {
    for k in 0..=g.n() {
        if let Some(s) = odd_cycle_transversal_at_most(g, k, independent, budget)? {
            return Ok(OptResult {
                value: s.len(),
                certificate: Certificate::Vertices(s),
            });
        }
    }
    Err(Error::Infeasible("no independent odd cycle transversal".into()))
}
