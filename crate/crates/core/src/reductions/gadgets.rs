//! Hardness gadgets: NAE-3SAT to odd cycle transversal, and the subcubic
//! expansion for Steiner tree.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracles::CnfFormula;

/// Vertex of literal `x_i` (`negated = false`) or its negation.
pub fn literal_vertex(var: usize, negated: bool) -> usize {
    2 * var + negated as usize
}

/// Vertex `p` (0, 1 or 2) of the triangle of clause `j`.
pub fn clause_vertex(n_vars: usize, j: usize, p: usize) -> usize {
    2 * n_vars + 3 * j + p
}

/// The odd cycle transversal gadget of a formula together with its target
/// value, the number of clauses.
///
/// Each variable contributes an edge between its two literal vertices,
/// each clause a triangle, and position `p` of a clause joins the literal
/// to triangle vertex `p`. Fails if a literal occurs more than twice, since
/// the result would not be subcubic.
pub fn nae_to_oct_gadget(phi: &CnfFormula) -> Result<(Graph, usize)> {
    let n = phi.n_vars();
    let m = phi.clauses().len();
    for (i, &count) in phi.occurrences().iter().enumerate() {
        if count > 2 {
            let var = (i / 2 + 1) as i64;
            return Err(Error::OccurrenceBound {
                literal: if i % 2 == 1 { -var } else { var },
                count,
            });
        }
    }
    let mut edges = Vec::with_capacity(n + 6 * m);
    for v in 0..n {
        edges.push((literal_vertex(v, false), literal_vertex(v, true)));
    }
    for (j, clause) in phi.clauses().iter().enumerate() {
        let c = |p| clause_vertex(n, j, p);
        edges.extend([(c(0), c(1)), (c(1), c(2)), (c(0), c(2))]);
        for (p, l) in clause.iter().enumerate() {
            edges.push((literal_vertex(l.var(), l.is_negated()), c(p)));
        }
    }
    let mut labels: Vec<String> = Vec::with_capacity(2 * n + 3 * m);
    for v in 1..=n {
        labels.push(format!("x{v}"));
        labels.push(format!("~x{v}"));
    }
    for j in 1..=m {
        for p in 1..=3 {
            labels.push(format!("c{j}_{p}"));
        }
    }
    let g = Graph::new(2 * n + 3 * m, edges)?.with_labels(labels)?;
    Ok((g, m))
}

/// Result of [`steiner_subcubic_expand`].
#[derive(Clone, Debug)]
pub struct SteinerExpansion {
    pub graph: Graph,
    pub terminals: Vec<usize>,
    pub k: i64,
    /// Length of every path replacing an edge, `4n^2`.
    pub path_len: usize,
    /// Nodes per vertex tree, `2n - 1`.
    pub tree_size: usize,
}

impl SteinerExpansion {
    /// Root of the tree that replaces vertex `v`.
    pub fn root(&self, v: usize) -> usize {
        v * self.tree_size
    }
}

/// Replaces each vertex by a binary tree with `n` leaves and each edge by a
/// path of length `4n^2` between leaves of the two trees; terminals move to
/// the roots and the budget becomes `4n^2 k + 2n^2`.
///
/// The tree of vertex `v` is a heap-ordered full binary tree on ids
/// `v(2n-1) ..`, so it has minimum depth and its last level is filled
/// from the left. The `i`-th edge at `v` (in neighbour order) starts at the
/// `i`-th leaf.
pub fn steiner_subcubic_expand(g: &Graph, terminals: &[usize], k: i64) -> Result<SteinerExpansion> {
    let n = g.n();
    if n < 2 {
        return Err(Error::Precondition("expansion needs at least two vertices".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    crate::oracles::TerminalSpec::Set(terminals.to_vec()).validate(g)?;
    let tree_size = 2 * n - 1;
    let path_len = 4 * n * n;
    let mut edges = Vec::new();
    for v in 0..n {
        let base = v * tree_size;
        for i in 1..tree_size {
            edges.push((base + (i - 1) / 2, base + i));
        }
    }
    let leaf = |v: usize, u: usize| {
        let i = g.neighbors(v).binary_search(&u).unwrap();
        v * tree_size + (n - 1) + i
    };
    let mut next = n * tree_size;
    for &(u, v) in g.edges() {
        let mut prev = leaf(u, v);
        for _ in 1..path_len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, leaf(v, u)));
    }
    let graph = Graph::new(next, edges)?;
    let nn = (n * n) as i64;
    Ok(SteinerExpansion {
        graph,
        terminals: terminals.iter().map(|&t| t * tree_size).collect(),
        k: 4 * nn * k + 2 * nn,
        path_len,
        tree_size,
    })
}
