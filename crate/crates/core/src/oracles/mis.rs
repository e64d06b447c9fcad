//! Maximum independent set and minimum vertex cover.

use alloc::vec::Vec;

use super::{Certificate, NodeCounter, OptResult, OracleBudget};
use crate::bitset::{adjacency_sets, VertexSet};
use crate::error::Result;
use crate::graph::Graph;

struct Search {
    adj: Vec<VertexSet>,
    best: VertexSet,
    counter: NodeCounter,
}

impl Search {
    // Some vertex of N[v] lies in a maximum independent set of the
    // remaining graph, for any v; branch on the one with smallest degree.
    fn run(&mut self, cand: VertexSet, chosen: VertexSet) -> Result<()> {
        self.counter.tick()?;
        if chosen.len() + cand.len() <= self.best.len() {
            return Ok(());
        }
        let Some(v) = cand.iter().min_by_key(|&v| (self.adj[v] & cand).len()) else {
            self.best = chosen;
            return Ok(());
        };
        let closed = (self.adj[v] & cand).with(v);
        if closed.len() <= 2 {
            // Degree at most 1: taking v is never worse.
            return self.run(cand - closed, chosen.with(v));
        }
        for u in closed.iter() {
            self.run(cand - self.adj[u].with(u), chosen.with(u))?;
        }
        Ok(())
    }
}

pub fn max_independent_set(g: &Graph, budget: &OracleBudget) -> Result<OptResult> {
    budget.check_n(g.n())?;
    let mut s = Search {
        adj: adjacency_sets(g)?,
        best: VertexSet::EMPTY,
        counter: NodeCounter::new(budget, "independent set"),
    };
    s.run(VertexSet::full(g.n()), VertexSet::EMPTY)?;
    Ok(OptResult {
        value: s.best.len(),
        certificate: Certificate::Vertices(s.best.iter().collect()),
    })
}

/// Complement of a maximum independent set.
pub fn min_vertex_cover(g: &Graph, budget: &OracleBudget) -> Result<OptResult> {
    let mis = max_independent_set(g, budget)?;
    let Certificate::Vertices(ind) = mis.certificate else {
        unreachable!()
    };
    let ind = VertexSet::from_iter(ind);
    let cover: Vec<usize> = (0..g.n()).filter(|&v| !ind.contains(v)).collect();
    Ok(OptResult {
        value: cover.len(),
        certificate: Certificate::Vertices(cover),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::oracles::check;

    #[test]
    fn examples() {
        let b = OracleBudget::default();
        assert_eq!(max_independent_set(&complete(3), &b).unwrap().value, 1);
        assert_eq!(max_independent_set(&cycle(9), &b).unwrap().value, 4);
        assert_eq!(max_independent_set(&path(7), &b).unwrap().value, 4);
        assert_eq!(max_independent_set(&Graph::empty(0), &b).unwrap().value, 0);
        let vc = min_vertex_cover(&cycle(9), &b).unwrap();
        assert_eq!(vc.value, 5);
        let Certificate::Vertices(c) = &vc.certificate else {
            panic!()
        };
        assert!(check::is_vertex_cover(&cycle(9), c));
    }
}
