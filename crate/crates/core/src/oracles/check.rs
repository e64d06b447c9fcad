//! Certificate validators, written straight from the problem definitions.

use alloc::vec;
use alloc::vec::Vec;

use super::{Certificate, DominationVariant, Mode, OptResult};
use crate::graph::Graph;

fn mask(n: usize, vs: &[usize]) -> Option<Vec<bool>> {
    let mut m = vec![false; n];
    for &v in vs {
        if v >= n || core::mem::replace(&mut m[v], true) {
            return None;
        }
    }
    Some(m)
}

pub fn is_independent_set(g: &Graph, s: &[usize]) -> bool {
    let Some(m) = mask(g.n(), s) else { return false };
    g.edges().iter().all(|&(u, v)| !(m[u] && m[v]))
}

pub fn is_vertex_cover(g: &Graph, s: &[usize]) -> bool {
    let Some(m) = mask(g.n(), s) else { return false };
    g.edges().iter().all(|&(u, v)| m[u] || m[v])
}

pub fn is_dominating_set(g: &Graph, s: &[usize]) -> bool {
    let Some(m) = mask(g.n(), s) else { return false };
    (0..g.n()).all(|v| m[v] || g.neighbors(v).iter().any(|&w| m[w]))
}

pub fn is_edge_dominating_set(g: &Graph, f: &[(usize, usize)]) -> bool {
    if f.iter().any(|&(u, v)| !g.has_edge(u, v)) {
        return false;
    }
    let mut covered = vec![false; g.n()];
    for &(u, v) in f {
        covered[u] = true;
        covered[v] = true;
    }
    g.edges().iter().all(|&(u, v)| covered[u] || covered[v])
}

pub fn is_odd_cycle_transversal(g: &Graph, s: &[usize]) -> bool {
    let Some(m) = mask(g.n(), s) else { return false };
    let alive: Vec<bool> = m.iter().map(|x| !x).collect();
    g.two_colouring(&alive).is_some()
}

/// Number of edges with exactly one end in `side`.
pub fn cut_size(g: &Graph, side: &[usize]) -> Option<usize> {
    let m = mask(g.n(), side)?;
    Some(g.edges().iter().filter(|&&(u, v)| m[u] != m[v]).count())
}

fn connected_subgraph_vertices(g: &Graph, edges: &[(usize, usize)]) -> Option<Vec<usize>> {
    if edges.iter().any(|&(u, v)| !g.has_edge(u, v)) {
        return None;
    }
    let mut adj = vec![Vec::new(); g.n()];
    let mut verts = Vec::new();
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
        verts.push(u);
        verts.push(v);
    }
    verts.sort_unstable();
    verts.dedup();
    let start = *verts.first()?;
    let mut seen = vec![false; g.n()];
    seen[start] = true;
    let mut stack = vec![start];
    let mut count = 1;
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                count += 1;
                stack.push(y);
            }
        }
    }
    (count == verts.len()).then_some(verts)
}

/// `edges` form a tree of `g` containing every terminal.
pub fn is_steiner_tree(g: &Graph, terminals: &[usize], edges: &[(usize, usize)]) -> bool {
    let mut sorted = edges.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != edges.len() {
        return false;
    }
    if edges.is_empty() {
        return terminals.len() <= 1 && terminals.iter().all(|&t| t < g.n());
    }
    let Some(verts) = connected_subgraph_vertices(g, edges) else {
        return false;
    };
    verts.len() == edges.len() + 1 && terminals.iter().all(|t| verts.binary_search(t).is_ok())
}

/// Node variant: `vertices` induce a connected subgraph containing all
/// terminals.
pub fn is_node_steiner_tree(g: &Graph, terminals: &[usize], vertices: &[usize]) -> bool {
    let Some(m) = mask(g.n(), vertices) else { return false };
    if terminals.iter().any(|&t| t >= g.n() || !m[t]) {
        return false;
    }
    if vertices.is_empty() {
        return terminals.is_empty();
    }
    let sub = g.induced_subgraph(vertices);
    sub.is_connected()
}

fn terminals_separated(g: &Graph, alive_v: &[bool], alive_e: &[bool], terminals: &[usize]) -> bool {
    let mut comp = vec![usize::MAX; g.n()];
    for (c, &t) in terminals.iter().enumerate() {
        if comp[t] != usize::MAX {
            return false;
        }
        comp[t] = c;
        let mut stack = vec![t];
        while let Some(x) = stack.pop() {
            for &y in g.neighbors(x) {
                let e = g.edge_index(x, y).unwrap();
                if !alive_v[y] || !alive_e[e] || comp[y] == c {
                    continue;
                }
                if comp[y] != usize::MAX {
                    return false;
                }
                comp[y] = c;
                stack.push(y);
            }
        }
    }
    true
}

pub fn is_edge_multiway_cut(g: &Graph, terminals: &[usize], cut: &[(usize, usize)]) -> bool {
    let mut alive_e = vec![true; g.m()];
    for &(u, v) in cut {
        match g.edge_index(u, v) {
            Some(i) => alive_e[i] = false,
            None => return false,
        }
    }
    terminals_separated(g, &vec![true; g.n()], &alive_e, terminals)
}

pub fn is_node_multiway_cut(g: &Graph, terminals: &[usize], cut: &[usize]) -> bool {
    let Some(m) = mask(g.n(), cut) else { return false };
    if terminals.iter().any(|&t| t >= g.n() || m[t]) {
        return false;
    }
    let alive: Vec<bool> = m.iter().map(|x| !x).collect();
    terminals_separated(g, &alive, &vec![true; g.m()], terminals)
}

/// The paths join their pairs, are pairwise vertex-disjoint and, when
/// `induced`, have no edges between different paths.
pub fn are_disjoint_paths(g: &Graph, pairs: &[(usize, usize)], paths: &[Vec<usize>], induced: bool) -> bool {
    if pairs.len() != paths.len() {
        return false;
    }
    let mut owner = vec![usize::MAX; g.n()];
    for (i, (p, &(s, t))) in paths.iter().zip(pairs).enumerate() {
        if p.first() != Some(&s) || p.last() != Some(&t) {
            return false;
        }
        if p.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
            return false;
        }
        for &v in p {
            if v >= g.n() || owner[v] != usize::MAX {
                return false;
            }
            owner[v] = i;
        }
    }
    !induced
        || g.edges()
            .iter()
            .all(|&(u, v)| owner[u] == usize::MAX || owner[v] == usize::MAX || owner[u] == owner[v])
}

pub fn respects_lists(g: &Graph, lists: &[Vec<u32>], colouring: &[u32]) -> bool {
    colouring.len() == g.n()
        && lists.len() == g.n()
        && (0..g.n()).all(|v| lists[v].contains(&colouring[v]))
        && g.edges().iter().all(|&(u, v)| colouring[u] != colouring[v])
}

/// Validates a domination result for the given variant, including its value.
pub fn validate(g: &Graph, r: &OptResult, variant: DominationVariant) -> bool {
    match (&r.certificate, variant) {
        (Certificate::Vertices(s), DominationVariant::Plain) => s.len() == r.value && is_dominating_set(g, s),
        (Certificate::Vertices(s), DominationVariant::Independent) => {
            s.len() == r.value && is_dominating_set(g, s) && is_independent_set(g, s)
        }
        (Certificate::Edges(f), DominationVariant::Edge) => f.len() == r.value && is_edge_dominating_set(g, f),
        _ => false,
    }
}

/// Validates a Steiner result in the given mode, including its value.
pub fn validate_steiner(g: &Graph, terminals: &[usize], r: &OptResult, mode: Mode) -> bool {
    match (&r.certificate, mode) {
        (Certificate::Edges(e), Mode::Edge) => e.len() == r.value && is_steiner_tree(g, terminals, e),
        (Certificate::Vertices(v), Mode::Node) => v.len() == r.value && is_node_steiner_tree(g, terminals, v),
        _ => false,
    }
}
