//! (Induced) disjoint paths by backtracking over simple paths.
//!
//! Only chordless paths are tried: any solution path can be shortcut to a
//! chordless one on a subset of its vertices, which keeps it disjoint from
//! (and, in the induced case, non-adjacent to) the other paths.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use super::{NodeCounter, OracleBudget, TerminalSpec};
use crate::error::Result;
use crate::graph::Graph;

const FREE: usize = usize::MAX;

struct Search<'a> {
    g: &'a Graph,
    pairs: &'a [(usize, usize)],
    induced: bool,
    owner: Vec<usize>,
    paths: Vec<Vec<usize>>,
    counter: NodeCounter,
}

impl Search<'_> {
    fn usable(&self, w: usize, i: usize) -> bool {
        self.owner[w] == FREE
            && (!self.induced
                || self
                    .g
                    .neighbors(w)
                    .iter()
                    .all(|&x| self.owner[x] == FREE || self.owner[x] == i))
    }

    /// `from` can still reach the target of pair `i` through usable vertices.
    fn reachable(&self, i: usize, from: usize) -> bool {
        let t = self.pairs[i].1;
        let mut seen = vec![false; self.g.n()];
        seen[from] = true;
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            for &w in self.g.neighbors(u) {
                if w == t {
                    return true;
                }
                if !seen[w] && self.usable(w, i) {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        false
    }

    fn route(&mut self, i: usize) -> Result<bool> {
        if i == self.pairs.len() {
            return Ok(true);
        }
        if (i..self.pairs.len()).any(|j| !self.reachable(j, self.pairs[j].0)) {
            return Ok(false);
        }
        let s = self.pairs[i].0;
        self.paths.push(vec![s]);
        if self.extend(i, s)? {
            return Ok(true);
        }
        self.paths.pop();
        Ok(false)
    }

    fn extend(&mut self, i: usize, u: usize) -> Result<bool> {
        self.counter.tick()?;
        let t = self.pairs[i].1;
        if self.g.has_edge(u, t) {
            self.paths[i].push(t);
            if self.route(i + 1)? {
                return Ok(true);
            }
            self.paths[i].pop();
            return Ok(false);
        }
        for k in 0..self.g.neighbors(u).len() {
            let w = self.g.neighbors(u)[k];
            if !self.usable(w, i) {
                continue;
            }
            let path = &self.paths[i];
            if path[..path.len() - 1].iter().any(|&x| self.g.has_edge(x, w)) {
                continue;
            }
            self.owner[w] = i;
            self.paths[i].push(w);
            if self.reachable(i, w) && self.extend(i, w)? {
                return Ok(true);
            }
            self.paths[i].pop();
            self.owner[w] = FREE;
        }
        Ok(false)
    }
}

/// Paths joining each pair, pairwise vertex-disjoint and, when `induced`,
/// with no edge between two different paths. `None` if there are none.
pub fn disjoint_paths(
    g: &Graph,
    pairs: &[(usize, usize)],
    induced: bool,
    budget: &OracleBudget,
) -> Result<Option<Vec<Vec<usize>>>> {
    TerminalSpec::Pairs(pairs.to_vec()).validate(g)?;
    let mut owner = vec![FREE; g.n()];
    for (i, &(s, t)) in pairs.iter().enumerate() {
        owner[s] = i;
        owner[t] = i;
    }
    if induced
        && g.edges()
            .iter()
            .any(|&(u, v)| owner[u] != FREE && owner[v] != FREE && owner[u] != owner[v])
    {
        return Ok(None);
    }
    let mut s = Search {
        g,
        pairs,
        induced,
        owner,
        paths: Vec::new(),
        counter: NodeCounter::new(budget, "disjoint paths"),
    };
    Ok(s.route(0)?.then_some(s.paths))
}
