//! Max-Cut and edge / node multiway cut.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use super::oct::shortest_odd_cycle;
use super::{Certificate, Mode, NodeCounter, OptResult, OracleBudget};
use crate::error::{Error, Result};
use crate::graph::Graph;

struct EdgeBipartization<'a> {
    g: &'a Graph,
    alive_v: Vec<bool>,
    alive_e: Vec<bool>,
    counter: NodeCounter,
}

impl EdgeBipartization<'_> {
    fn run(&mut self, budget: usize) -> Result<bool> {
        self.counter.tick()?;
        let Some((_, cycle_edges)) = shortest_odd_cycle(self.g, &self.alive_v, &self.alive_e) else {
            return Ok(true);
        };
        if budget == 0 {
            return Ok(false);
        }
        for e in cycle_edges {
            self.alive_e[e] = false;
            if self.run(budget - 1)? {
                return Ok(true);
            }
            self.alive_e[e] = true;
        }
        Ok(false)
    }
}

/// Maximum cut: `m` minus the fewest edges whose removal leaves a bipartite
/// graph; the certificate is one colour class of that bipartite graph.
pub fn max_cut(g: &Graph, budget: &OracleBudget) -> Result<OptResult> {
    let mut s = EdgeBipartization {
        g,
        alive_v: vec![true; g.n()],
        alive_e: vec![true; g.m()],
        counter: NodeCounter::new(budget, "max cut"),
    };
    for k in 0..=g.m() {
        if s.run(k)? {
            break;
        }
    }
    let colour = two_colouring_edges(g, &s.alive_e);
    let side: Vec<usize> = (0..g.n()).filter(|&v| colour[v] == 0).collect();
    let value = g.edges().iter().filter(|&&(u, v)| colour[u] != colour[v]).count();
    Ok(OptResult {
        value,
        certificate: Certificate::Side(side),
    })
}

fn two_colouring_edges(g: &Graph, alive_e: &[bool]) -> Vec<u8> {
    let mut colour = vec![u8::MAX; g.n()];
    for s in 0..g.n() {
        if colour[s] != u8::MAX {
            continue;
        }
        colour[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if alive_e[g.edge_index(u, w).unwrap()] && colour[w] == u8::MAX {
                    colour[w] = 1 - colour[u];
                    queue.push_back(w);
                }
            }
        }
    }
    colour
}

/// Which elements are still present while searching for a multiway cut.
struct CutSearch<'a> {
    g: &'a Graph,
    mode: Mode,
    is_terminal: Vec<bool>,
    alive_v: Vec<bool>,
    alive_e: Vec<bool>,
    chosen_v: Vec<usize>,
    chosen_e: Vec<usize>,
    counter: NodeCounter,
}

impl CutSearch<'_> {
    /// Shortest path between two distinct terminals whose interior avoids
    /// terminals, as (vertices, edge indices).
    fn terminal_path(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let n = self.g.n();
        let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
        for t in (0..n).filter(|&v| self.is_terminal[v]) {
            let mut parent = vec![(usize::MAX, usize::MAX); n];
            let mut seen = vec![false; n];
            seen[t] = true;
            let mut queue = VecDeque::from([t]);
            let mut hit = None;
            'bfs: while let Some(u) = queue.pop_front() {
                for &w in self.g.neighbors(u) {
                    let e = self.g.edge_index(u, w).unwrap();
                    if seen[w] || !self.alive_v[w] || !self.alive_e[e] {
                        continue;
                    }
                    seen[w] = true;
                    parent[w] = (u, e);
                    if self.is_terminal[w] {
                        hit = Some(w);
                        break 'bfs;
                    }
                    queue.push_back(w);
                }
            }
            if let Some(end) = hit {
                let (mut vs, mut es) = (vec![end], Vec::new());
                let mut x = end;
                while x != t {
                    let (p, e) = parent[x];
                    es.push(e);
                    vs.push(p);
                    x = p;
                }
                if best.as_ref().is_none_or(|(b, _)| vs.len() < b.len()) {
                    best = Some((vs, es));
                }
            }
        }
        best
    }

    fn run(&mut self, budget: usize) -> Result<bool> {
        self.counter.tick()?;
        let Some((verts, edges)) = self.terminal_path() else {
            return Ok(true);
        };
        if budget == 0 {
            return Ok(false);
        }
        match self.mode {
            Mode::Edge => {
                for e in edges {
                    self.alive_e[e] = false;
                    self.chosen_e.push(e);
                    if self.run(budget - 1)? {
                        return Ok(true);
                    }
                    self.chosen_e.pop();
                    self.alive_e[e] = true;
                }
            }
            Mode::Node => {
                for &v in &verts[1..verts.len() - 1] {
                    self.alive_v[v] = false;
                    self.chosen_v.push(v);
                    if self.run(budget - 1)? {
                        return Ok(true);
                    }
                    self.chosen_v.pop();
                    self.alive_v[v] = true;
                }
            }
        }
        Ok(false)
    }
}

/// Minimum edge (or non-terminal vertex) set separating every terminal pair.
pub fn multiway_cut(g: &Graph, terminals: &[usize], mode: Mode, budget: &OracleBudget) -> Result<OptResult> {
    super::TerminalSpec::Set(terminals.to_vec()).validate(g)?;
    if terminals.len() < 2 {
        return Err(Error::Precondition("multiway cut needs at least two terminals".into()));
    }
    let mut is_terminal = vec![false; g.n()];
    for &t in terminals {
        is_terminal[t] = true;
    }
    if mode == Mode::Node && g.edges().iter().any(|&(u, v)| is_terminal[u] && is_terminal[v]) {
        return Err(Error::Infeasible("two terminals are adjacent".into()));
    }
    let mut s = CutSearch {
        g,
        mode,
        is_terminal,
        alive_v: vec![true; g.n()],
        alive_e: vec![true; g.m()],
        chosen_v: Vec::new(),
        chosen_e: Vec::new(),
        counter: NodeCounter::new(budget, "multiway cut"),
    };
    let limit = match mode {
        Mode::Edge => g.m(),
        Mode::Node => g.n() - terminals.len(),
    };
    for k in 0..=limit {
        if s.run(k)? {
            return Ok(match mode {
                Mode::Edge => {
                    let mut e: Vec<(usize, usize)> = s.chosen_e.iter().map(|&i| g.edges()[i]).collect();
                    e.sort_unstable();
                    OptResult {
                        value: e.len(),
                        certificate: Certificate::Edges(e),
                    }
                }
                Mode::Node => {
                    let mut v = s.chosen_v;
                    v.sort_unstable();
                    OptResult {
                        value: v.len(),
                        certificate: Certificate::Vertices(v),
                    }
                }
            });
        }
    }
    unreachable!("deleting every edge or non-terminal separates the terminals")
}
