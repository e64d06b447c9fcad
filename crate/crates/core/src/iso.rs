//! Subgraph containment (not necessarily induced) by backtracking.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

/// Injective map from pattern vertices to host vertices preserving edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding(pub Vec<usize>);

impl Embedding {
    pub fn image(&self, v: usize) -> usize {
        self.0[v]
    }

    /// Injectivity and edge preservation.
    pub fn is_valid(&self, h: &Graph, g: &Graph) -> bool {
        if self.0.len() != h.n() || self.0.iter().any(|&x| x >= g.n()) {
            return false;
        }
        let mut used = vec![false; g.n()];
        for &x in &self.0 {
            if core::mem::replace(&mut used[x], true) {
                return false;
            }
        }
        h.edges().iter().all(|&(u, v)| g.has_edge(self.0[u], self.0[v]))
    }
}

/// Matching order: components by decreasing size, each grown from its
/// highest-degree vertex by repeatedly taking the vertex with the most
/// already-ordered neighbours (then higher degree, then lower id).
fn matching_order(h: &Graph) -> Vec<usize> {
    let mut comps = h.components();
    comps.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
    let mut order = Vec::with_capacity(h.n());
    let mut placed = vec![false; h.n()];
    let mut links = vec![0usize; h.n()];
    for comp in comps {
        let start = *comp
            .iter()
            .max_by(|&&a, &&b| h.degree(a).cmp(&h.degree(b)).then(b.cmp(&a)))
            .unwrap();
        let mut next = Some(start);
        while let Some(v) = next {
            placed[v] = true;
            order.push(v);
            for &w in h.neighbors(v) {
                links[w] += 1;
            }
            next = comp
                .iter()
                .copied()
                .filter(|&u| !placed[u] && links[u] > 0)
                .max_by(|&a, &b| {
                    links[a]
                        .cmp(&links[b])
                        .then(h.degree(a).cmp(&h.degree(b)))
                        .then(b.cmp(&a))
                });
        }
    }
    order
}

fn neighbour_degree_profile(g: &Graph, v: usize) -> Vec<usize> {
    let mut d: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
    d.sort_unstable_by(|a, b| b.cmp(a));
    d
}

struct Matcher<'a> {
    h: &'a Graph,
    g: &'a Graph,
    order: Vec<usize>,
    parent: Vec<Option<usize>>,
    h_profile: Vec<Vec<usize>>,
    g_profile: Vec<Vec<usize>>,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Matcher<'_> {
    fn compatible(&self, u: usize, c: usize) -> bool {
        if self.used[c] || self.g.degree(c) < self.h.degree(u) {
            return false;
        }
        let (hp, gp) = (&self.h_profile[u], &self.g_profile[c]);
        if hp.iter().zip(gp).any(|(a, b)| a > b) {
            return false;
        }
        self.h.neighbors(u).iter().all(|&w| {
            let img = self.map[w];
            img == usize::MAX || self.g.has_edge(c, img)
        })
    }

    fn search(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let u = self.order[depth];
        let candidates: Vec<usize> = match self.parent[depth] {
            Some(p) => self.g.neighbors(self.map[p]).to_vec(),
            None => (0..self.g.n()).collect(),
        };
        for c in candidates {
            if !self.compatible(u, c) {
                continue;
            }
            self.map[u] = c;
            self.used[c] = true;
            if self.search(depth + 1) {
                return true;
            }
            self.used[c] = false;
            self.map[u] = usize::MAX;
        }
        false
    }
}

/// Finds an embedding of `h` into `g` if `h` is a subgraph of `g`.
///
/// The search is deterministic: the same inputs give the same embedding.
pub fn contains_subgraph(h: &Graph, g: &Graph) -> Option<Embedding> {
    if h.n() > g.n() || h.m() > g.m() || h.max_degree() > g.max_degree() {
        return None;
    }
    let order = matching_order(h);
    let mut position = vec![0; h.n()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let parent = order
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            h.neighbors(v)
                .iter()
                .copied()
                .filter(|&w| position[w] < i)
                .min_by_key(|&w| position[w])
        })
        .collect();
    let mut m = Matcher {
        h,
        g,
        order,
        parent,
        h_profile: (0..h.n()).map(|v| neighbour_degree_profile(h, v)).collect(),
        g_profile: (0..g.n()).map(|v| neighbour_degree_profile(g, v)).collect(),
        map: vec![usize::MAX; h.n()],
        used: vec![false; g.n()],
    };
    if m.search(0) {
        let emb = Embedding(m.map);
        debug_assert!(emb.is_valid(h, g));
        Some(emb)
    } else {
        None
    }
}

/// Index and embedding of the first pattern of `family` contained in `g`.
pub fn first_contained_pattern(g: &Graph, family: &[Graph]) -> Option<(usize, Embedding)> {
    family
        .iter()
        .enumerate()
        .find_map(|(i, h)| contains_subgraph(h, g).map(|e| (i, e)))
}

/// `g` contains none of the patterns in `family` as a subgraph.
pub fn is_family_subgraph_free(g: &Graph, family: &[Graph]) -> bool {
    first_contained_pattern(g, family).is_none()
}
