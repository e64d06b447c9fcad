//! Simple undirected graphs and the structural operators used throughout:
//! k-subdivision, disjoint union and the statistics that feed the dichotomy.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Exhaustive longest-cycle search refuses cyclic graphs above this size.
pub const DEFAULT_CYCLE_SEARCH_CAP: usize = 12;

/// A simple undirected graph on the vertices `0..n`.
///
/// Edges are stored once, smaller endpoint first, sorted lexicographically.
/// Graphs are immutable once built.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph, rejecting loops, parallel edges and out-of-range ends.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut canon = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            canon.push(if u < v { (u, v) } else { (v, u) });
        }
        canon.sort_unstable();
        if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &canon {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: canon,
            adj,
            labels: None,
        })
    }

    /// Graph on `n` vertices without edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
            labels: None,
        }
    }

    /// Attaches one text label per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::Invalid(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Index of the edge `uv` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).ok()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Every vertex has degree at most 3.
    pub fn is_subcubic(&self) -> bool {
        self.max_degree() <= 3
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// True for graphs with at most one component (including the empty graph).
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]));
        let mut g = Graph::new(vertices.len(), edges).expect("induced subgraph of a simple graph");
        if let Some(labels) = &self.labels {
            g.labels = Some(vertices.iter().map(|&v| labels[v].clone()).collect());
        }
        g
    }

    /// Breadth-first distances from `src`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// A proper 2-colouring of the subgraph induced by the vertices with
    /// `alive[v]`, or `None` if that subgraph has an odd cycle.
    pub fn two_colouring(&self, alive: &[bool]) -> Option<Vec<u8>> {
        let mut colour = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if !alive[s] || colour[s] != u8::MAX {
                continue;
            }
            colour[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !alive[w] {
                        continue;
                    }
                    if colour[w] == u8::MAX {
                        colour[w] = 1 - colour[u];
                        queue.push_back(w);
                    } else if colour[w] == colour[u] {
                        return None;
                    }
                }
            }
        }
        Some(colour)
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_colouring(&vec![true; self.n]).is_some()
    }

    fn vertex_name(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }
}

/// Statistics used by the dichotomy and the subcubic tests.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructStats {
    pub max_degree: usize,
    /// Length of a longest cycle, 0 for forests.
    pub longest_cycle: usize,
    pub component_count: usize,
    pub degrees: Vec<usize>,
}

/// Replaces every edge `uv` by a path `u, w1, .., wk, v` of fresh vertices.
///
/// The `j`-th internal vertex of the `i`-th edge (in canonical edge order)
/// gets id `n + i*k + (j-1)`. Labelled inputs yield labelled outputs with
/// new vertices named `sub(u,v,j)`.
pub fn k_subdivide(g: &Graph, k: usize) -> Graph {
    if k == 0 {
        return g.clone();
    }
    let n = g.n() + k * g.m();
    let mut edges = Vec::with_capacity((k + 1) * g.m());
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        let base = g.n() + i * k;
        edges.push((u, base));
        for j in 1..k {
            edges.push((base + j - 1, base + j));
        }
        edges.push((base + k - 1, v));
    }
    let mut out = Graph::new(n, edges).expect("subdivision of a simple graph is simple");
    if g.labels.is_some() {
        let mut labels: Vec<String> = (0..g.n()).map(|v| g.vertex_name(v)).collect();
        for &(u, v) in g.edges() {
            for j in 1..=k {
                labels.push(format!("sub({},{},{})", g.vertex_name(u), g.vertex_name(v), j));
            }
        }
        out.labels = Some(labels);
    }
    out
}

/// Disjoint union; vertices of later graphs are shifted past earlier ones.
///
/// Labels survive only if every part is labelled.
pub fn disjoint_union(gs: &[Graph]) -> Result<Graph> {
    if gs.is_empty() {
        return Err(Error::Invalid("disjoint union of an empty list".into()));
    }
    let mut offset = 0;
    let mut edges = Vec::new();
    for g in gs {
        edges.extend(g.edges().iter().map(|&(u, v)| (u + offset, v + offset)));
        offset += g.n();
    }
    let mut out = Graph::new(offset, edges)?;
    if gs.iter().all(|g| g.labels.is_some()) {
        out.labels = Some(gs.iter().flat_map(|g| g.labels.clone().unwrap()).collect());
    }
    Ok(out)
}

/// Degree statistics plus the longest cycle, with the default search cap.
pub fn struct_stats(g: &Graph) -> Result<StructStats> {
    struct_stats_capped(g, DEFAULT_CYCLE_SEARCH_CAP)
}

pub fn struct_stats_capped(g: &Graph, cap: usize) -> Result<StructStats> {
    Ok(StructStats {
        max_degree: g.max_degree(),
        longest_cycle: longest_cycle(g, cap)?,
        component_count: g.components().len(),
        degrees: g.degrees(),
    })
}

/// Length of a longest cycle (0 for forests) by exhaustive path search.
///
/// Forests are answered immediately at any size; a cyclic component with
/// more than `cap` vertices is rejected.
pub fn longest_cycle(g: &Graph, cap: usize) -> Result<usize> {
    let mut best = 0;
    for comp in g.components() {
        let sub = g.induced_subgraph(&comp);
        if sub.m() < sub.n() {
            continue;
        }
        if sub.n() > cap {
            return Err(Error::TooLarge { n: sub.n(), cap });
        }
        best = best.max(longest_cycle_connected(&sub));
    }
    Ok(best)
}

fn longest_cycle_connected(g: &Graph) -> usize {
    struct Search<'a> {
        g: &'a Graph,
        start: usize,
        on_path: Vec<bool>,
        best: usize,
    }
    impl Search<'_> {
        // Vertices >= start not yet on the path that are reachable from `u`
        // without touching the path: an upper bound on the extension.
        fn reachable(&self, u: usize) -> usize {
            let mut seen = self.on_path.clone();
            let mut stack = vec![u];
            let mut count = 0;
            while let Some(x) = stack.pop() {
                for &w in self.g.neighbors(x) {
                    if w > self.start && !seen[w] {
                        seen[w] = true;
                        count += 1;
                        stack.push(w);
                    }
                }
            }
            count
        }

        fn extend(&mut self, u: usize, len: usize) {
            if self.best == self.g.n() - self.start {
                return;
            }
            for &w in self.g.neighbors(u) {
                if w == self.start && len >= 3 {
                    self.best = self.best.max(len);
                }
            }
            if len + self.reachable(u) <= self.best {
                return;
            }
            for i in 0..self.g.degree(u) {
                let w = self.g.neighbors(u)[i];
                if w > self.start && !self.on_path[w] {
                    self.on_path[w] = true;
                    self.extend(w, len + 1);
                    self.on_path[w] = false;
                }
            }
        }
    }

    let mut best = 0;
    for start in 0..g.n() {
        // Cycles whose smallest vertex is `start`.
        if g.n() - start <= best {
            break;
        }
        let mut s = Search {
            g,
            start,
            on_path: vec![false; g.n()],
            best,
        };
        s.on_path[start] = true;
        s.extend(start, 1);
        best = s.best;
    }
    best
}

/// Small named graphs.
pub mod named {
    use super::*;

    /// Path on `r` vertices (`r - 1` edges).
    pub fn path(r: usize) -> Graph {
        Graph::new(r, (1..r).map(|i| (i - 1, i))).unwrap()
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least 3 vertices");
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::new(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))).unwrap()
    }

    /// The star `K_{1,k}` with centre 0.
    pub fn star(k: usize) -> Graph {
        Graph::new(k + 1, (1..=k).map(|i| (0, i))).unwrap()
    }

    /// Subdivided claw with legs of `a`, `b` and `c` edges; centre 0.
    pub fn subdivided_claw(a: usize, b: usize, c: usize) -> Graph {
        let mut edges = Vec::new();
        let mut next = 1;
        for leg in [a, b, c] {
            let mut prev = 0;
            for _ in 0..leg {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        Graph::new(next, edges).unwrap()
    }
}
