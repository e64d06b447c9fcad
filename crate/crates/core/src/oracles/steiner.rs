//! Steiner tree by the Dreyfus–Wagner dynamic program over terminal subsets.

use alloc::collections::{BinaryHeap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

use super::{Certificate, Mode, NodeCounter, OptResult, OracleBudget, TerminalSpec};
use crate::error::{Error, Result};
use crate::graph::Graph;

const INF: u32 = u32::MAX;

#[derive(Clone, Copy)]
enum Back {
    None,
    /// `dp[mask][v]` joins the trees of `sub` and `mask - sub` at `v`.
    Split(u32),
    /// `dp[mask][v]` extends the tree at the neighbour `u` by edge `uv`.
    Step(u32),
}

struct Table {
    n: usize,
    cost: Vec<u32>,
    back: Vec<Back>,
}

impl Table {
    fn at(&self, mask: usize, v: usize) -> usize {
        mask * self.n + v
    }

    fn collect(&self, mask: usize, v: usize, out: &mut Vec<(usize, usize)>) {
        match self.back[self.at(mask, v)] {
            Back::None => {}
            Back::Split(sub) => {
                self.collect(sub as usize, v, out);
                self.collect(mask & !(sub as usize), v, out);
            }
            Back::Step(u) => {
                let u = u as usize;
                out.push((u.min(v), u.max(v)));
                self.collect(mask, u, out);
            }
        }
    }
}

/// Minimum Steiner tree. Edge mode counts edges, node mode counts vertices.
pub fn steiner_tree(g: &Graph, terminals: &[usize], mode: Mode, budget: &OracleBudget) -> Result<OptResult> {
    TerminalSpec::Set(terminals.to_vec()).validate(g)?;
    if terminals.is_empty() {
        return Err(Error::Precondition("Steiner tree needs a terminal".into()));
    }
    if terminals.len() > budget.max_terminals {
        return Err(Error::TooLarge {
            n: terminals.len(),
            cap: budget.max_terminals,
        });
    }
    let reach = g.bfs_distances(terminals[0]);
    if terminals.iter().any(|&t| reach[t].is_none()) {
        return Err(Error::Infeasible("terminals lie in different components".into()));
    }
    let edges = if terminals.len() == 1 {
        Vec::new()
    } else {
        dreyfus_wagner(g, terminals, budget)?
    };
    Ok(match mode {
        Mode::Edge => OptResult {
            value: edges.len(),
            certificate: Certificate::Edges(edges),
        },
        Mode::Node => {
            let mut vs: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
            vs.push(terminals[0]);
            vs.sort_unstable();
            vs.dedup();
            OptResult {
                value: vs.len(),
                certificate: Certificate::Vertices(vs),
            }
        }
    })
}

fn dreyfus_wagner(g: &Graph, terminals: &[usize], budget: &OracleBudget) -> Result<Vec<(usize, usize)>> {
    let n = g.n();
    let t = terminals.len();
    let full = (1usize << t) - 1;
    let mut table = Table {
        n,
        cost: vec![INF; (full + 1) * n],
        back: vec![Back::None; (full + 1) * n],
    };
    let mut counter = NodeCounter::new(budget, "Steiner tree");
    for (i, &s) in terminals.iter().enumerate() {
        let mask = 1 << i;
        let at = table.at(mask, s);
        table.cost[at] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let cu = table.cost[table.at(mask, u)];
            for &w in g.neighbors(u) {
                let iw = table.at(mask, w);
                if table.cost[iw] == INF {
                    table.cost[iw] = cu + 1;
                    table.back[iw] = Back::Step(u as u32);
                    queue.push_back(w);
                }
            }
        }
    }
    for mask in 1..=full {
        if mask.count_ones() < 2 {
            continue;
        }
        // Merge two subtrees at a common vertex; the lowest set bit stays
        // in `sub` so each split is tried once.
        let low = mask & mask.wrapping_neg();
        for v in 0..n {
            counter.tick()?;
            let mut best = (INF, Back::None);
            let rest = mask & !low;
            let mut s = rest;
            loop {
                let sub = s | low;
                if sub != mask {
                    let a = table.cost[table.at(sub, v)];
                    let b = table.cost[table.at(mask & !sub, v)];
                    if a != INF && b != INF && a + b < best.0 {
                        best = (a + b, Back::Split(sub as u32));
                    }
                }
                if s == 0 {
                    break;
                }
                s = (s - 1) & rest;
            }
            let at = table.at(mask, v);
            table.cost[at] = best.0;
            table.back[at] = best.1;
        }
        // Then grow every tree along shortest paths.
        let mut heap: BinaryHeap<Reverse<(u32, usize)>> = (0..n)
            .filter(|&v| table.cost[table.at(mask, v)] != INF)
            .map(|v| Reverse((table.cost[table.at(mask, v)], v)))
            .collect();
        while let Some(Reverse((c, u))) = heap.pop() {
            if c != table.cost[table.at(mask, u)] {
                continue;
            }
            counter.tick()?;
            for &w in g.neighbors(u) {
                let iw = table.at(mask, w);
                if c + 1 < table.cost[iw] {
                    table.cost[iw] = c + 1;
                    table.back[iw] = Back::Step(u as u32);
                    heap.push(Reverse((c + 1, w)));
                }
            }
        }
    }
    let root = terminals[0];
    let value = table.cost[table.at(full, root)];
    let mut edges = Vec::new();
    table.collect(full, root, &mut edges);
    edges.sort_unstable();
    edges.dedup();
    // An optimum cannot reuse an edge or close a cycle, or a cheaper tree
    // would exist.
    debug_assert_eq!(edges.len(), value as usize);
    Ok(edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::oracles::check::validate_steiner;

    fn st(g: &Graph, t: &[usize], mode: Mode) -> usize {
        let r = steiner_tree(g, t, mode, &OracleBudget::default()).unwrap();
        assert!(validate_steiner(g, t, &r, mode));
        r.value
    }

    #[test]
    fn examples() {
        assert_eq!(st(&path(3), &[0, 2], Mode::Edge), 2);
        assert_eq!(st(&complete(4), &[0, 1, 2, 3], Mode::Edge), 3);
        assert_eq!(st(&star(3), &[1, 2, 3], Mode::Node), 4);
        assert_eq!(st(&cycle(6), &[0], Mode::Node), 1);
        assert_eq!(st(&cycle(6), &[0], Mode::Edge), 0);
    }

    #[test]
    fn steiner_point_in_grid() {
        // 3x3 grid: corners 0, 2, 6 are joined along two sides.
        let mut e = Vec::new();
        for r in 0..3 {
            for c in 0..3 {
                let v = 3 * r + c;
                if c < 2 {
                    e.push((v, v + 1));
                }
                if r < 2 {
                    e.push((v, v + 3));
                }
            }
        }
        let g = Graph::new(9, e).unwrap();
        assert_eq!(st(&g, &[0, 2, 6], Mode::Edge), 4);
        assert_eq!(st(&g, &[0, 2, 6, 8], Mode::Edge), 6);
        assert_eq!(st(&g, &[0, 2, 6, 8], Mode::Node), 7);
    }

    #[test]
    fn disconnected_terminals() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            steiner_tree(&g, &[0, 3], Mode::Edge, &OracleBudget::default()),
            Err(Error::Infeasible(_))
        ));
    }
}
