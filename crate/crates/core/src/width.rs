//! Exact pathwidth (as vertex separation number) and treewidth.
//!
//! Both solvers search over vertex subsets with iterative deepening on the
//! width bound `k`, memoising subsets from which no completion of width at
//! most `k` exists. Each search applies a safe greedy rule before branching:
//!
//! * pathwidth: a vertex whose addition does not grow the boundary is added
//!   immediately (the boundary size is submodular, so this never hurts);
//! * treewidth: an almost simplicial vertex of degree at most `k` in the
//!   current elimination graph is eliminated immediately.
//!
//! The empty graph has width −1 by the bag-size convention. Disconnected
//! graphs are solved per component.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use hashbrown::HashSet;

use crate::bitset::{self, VertexSet};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Vertex order; `order()[i]` sits at position `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layout {
    order: Vec<usize>,
    position: Vec<usize>,
}

impl Layout {
    pub fn from_order(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let mut position = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n {
                return Err(Error::InvalidLayout(format!("vertex {v} out of range")));
            }
            if position[v] != usize::MAX {
                return Err(Error::InvalidLayout(format!("vertex {v} placed twice")));
            }
            position[v] = i + 1;
        }
        Ok(Layout { order, position })
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// 1-based position of `v`.
    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

/// Max over prefixes of the number of prefix vertices with a neighbour
/// after the prefix.
pub fn vertex_separation_of_layout(g: &Graph, layout: &Layout) -> Result<i32> {
    if layout.len() != g.n() {
        return Err(Error::InvalidLayout(format!(
            "layout has {} vertices, graph has {}",
            layout.len(),
            g.n()
        )));
    }
    if g.n() == 0 {
        return Ok(-1);
    }
    // A vertex is on the boundary from its own position up to its last
    // neighbour's position (exclusive).
    let mut delta = vec![0i32; g.n() + 2];
    for v in 0..g.n() {
        let p = layout.position(v);
        let last = g.neighbors(v).iter().map(|&w| layout.position(w)).max();
        if let Some(q) = last.filter(|&q| q > p) {
            delta[p] += 1;
            delta[q] -= 1;
        }
    }
    let mut cur = 0;
    let mut best = 0;
    for d in &delta[1..=g.n()] {
        cur += d;
        best = best.max(cur);
    }
    Ok(best)
}

/// Tree decomposition: bags on the nodes of a tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub bags: Vec<Vec<usize>>,
    pub tree_edges: Vec<(usize, usize)>,
    pub width: i32,
}

impl TreeDecomposition {
    pub fn max_bag_width(&self) -> i32 {
        self.bags.iter().map(|b| b.len() as i32).max().unwrap_or(0) - 1
    }
}

/// First violated condition of a tree decomposition. Vertex ids in the
/// messages are 1-based, matching the file formats.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TdViolation {
    NotATree(String),
    BagVertexOutOfRange { node: usize, vertex: usize },
    VertexInNoBag(usize),
    EdgeInNoBag(usize, usize),
    DisconnectedOccurrences(usize),
    WidthMismatch { stated: i32, actual: i32 },
}

impl fmt::Display for TdViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TdViolation::NotATree(why) => write!(f, "decomposition is not a tree: {why}"),
            TdViolation::BagVertexOutOfRange { node, vertex } => {
                write!(f, "bag {} holds unknown vertex {}", node + 1, vertex + 1)
            }
            TdViolation::VertexInNoBag(v) => write!(f, "vertex {} in no bag", v + 1),
            TdViolation::EdgeInNoBag(u, v) => write!(f, "edge {}-{} in no bag", u + 1, v + 1),
            TdViolation::DisconnectedOccurrences(v) => {
                write!(f, "bags containing vertex {} are not connected", v + 1)
            }
            TdViolation::WidthMismatch { stated, actual } => {
                write!(f, "stated width {stated} but largest bag gives {actual}")
            }
        }
    }
}

fn connected_on(nodes: &[usize], adj: &[Vec<usize>], allowed: &[bool]) -> bool {
    let Some(&start) = nodes.first() else {
        return true;
    };
    let mut seen = vec![false; adj.len()];
    seen[start] = true;
    let mut stack = vec![start];
    let mut count = 1;
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if allowed[y] && !seen[y] {
                seen[y] = true;
                count += 1;
                stack.push(y);
            }
        }
    }
    count == nodes.len()
}

/// Checks the tree shape, vertex and edge coverage, connectivity of each
/// vertex's occurrences and the stated width.
pub fn validate_tree_decomposition(g: &Graph, td: &TreeDecomposition) -> Result<(), TdViolation> {
    let t = td.bags.len();
    let mut adj = vec![Vec::new(); t];
    for &(a, b) in &td.tree_edges {
        if a >= t || b >= t || a == b {
            return Err(TdViolation::NotATree(format!("bad tree edge {}-{}", a + 1, b + 1)));
        }
        adj[a].push(b);
        adj[b].push(a);
    }
    if t > 0 && td.tree_edges.len() != t - 1 {
        return Err(TdViolation::NotATree(format!(
            "{} nodes but {} edges",
            t,
            td.tree_edges.len()
        )));
    }
    let all: Vec<usize> = (0..t).collect();
    if !connected_on(&all, &adj, &vec![true; t]) {
        return Err(TdViolation::NotATree("tree is disconnected".into()));
    }
    let mut holders = vec![Vec::new(); g.n()];
    for (node, bag) in td.bags.iter().enumerate() {
        for &v in bag {
            if v >= g.n() {
                return Err(TdViolation::BagVertexOutOfRange { node, vertex: v });
            }
            holders[v].push(node);
        }
    }
    if let Some(v) = (0..g.n()).find(|&v| holders[v].is_empty()) {
        return Err(TdViolation::VertexInNoBag(v));
    }
    for &(u, v) in g.edges() {
        if !holders[u].iter().any(|node| td.bags[*node].contains(&v)) {
            return Err(TdViolation::EdgeInNoBag(u, v));
        }
    }
    for (v, hs) in holders.iter().enumerate() {
        let mut allowed = vec![false; t];
        for &node in hs {
            allowed[node] = true;
        }
        if !connected_on(hs, &adj, &allowed) {
            return Err(TdViolation::DisconnectedOccurrences(v));
        }
    }
    let actual = td.max_bag_width();
    if td.width != actual {
        return Err(TdViolation::WidthMismatch {
            stated: td.width,
            actual,
        });
    }
    Ok(())
}

/// Size limits for the width solvers.
#[derive(Clone, Copy, Debug)]
pub struct WidthBudget {
    /// Largest graph accepted at all.
    pub max_n: usize,
    /// Graphs above `unbounded_n` vertices may only be searched up to this width.
    pub max_width: i32,
    /// Graphs up to this size are searched without a width cap.
    pub unbounded_n: usize,
    /// Cap on memoised search states per width level.
    pub max_states: usize,
}

impl Default for WidthBudget {
    fn default() -> Self {
        WidthBudget {
            max_n: 40,
            max_width: 6,
            unbounded_n: 20,
            max_states: 20_000_000,
        }
    }
}

impl WidthBudget {
    fn check_size(&self, n: usize) -> Result<()> {
        if n > self.max_n {
            return Err(Error::TooLarge { n, cap: self.max_n });
        }
        Ok(())
    }

    fn width_cap(&self, graph_n: usize, comp_n: usize) -> i32 {
        if graph_n <= self.unbounded_n {
            comp_n as i32 - 1
        } else {
            self.max_width.min(comp_n as i32 - 1)
        }
    }
}

struct PathSearch {
    n: usize,
    adj: Vec<VertexSet>,
    all: VertexSet,
    k: usize,
    failed: HashSet<VertexSet>,
    max_states: usize,
    order: Vec<usize>,
}

impl PathSearch {
    fn boundary(&self, s: VertexSet) -> usize {
        s.iter().filter(|&u| !self.adj[u].is_subset(s)).count()
    }

    // Boundary change when `v` joins `s`.
    fn added_cost(&self, s: VertexSet, v: usize) -> isize {
        let t = s.with(v);
        let mut d = if self.adj[v].is_subset(t) { 0 } else { 1 };
        for u in (self.adj[v] & s).iter() {
            if (self.adj[u] - s) == VertexSet::singleton(v) {
                d -= 1;
            }
        }
        d
    }

    fn search(&mut self, mut s: VertexSet, mut cost: usize) -> Result<bool> {
        let mark = self.order.len();
        loop {
            let free = (self.all - s).iter().find(|&v| self.added_cost(s, v) <= 0);
            let Some(v) = free else { break };
            cost = (cost as isize + self.added_cost(s, v)) as usize;
            s.insert(v);
            self.order.push(v);
        }
        if s == self.all {
            return Ok(true);
        }
        if !self.failed.contains(&s) {
            for v in (self.all - s).iter() {
                let c = cost as isize + self.added_cost(s, v);
                if c as usize > self.k {
                    continue;
                }
                self.order.push(v);
                if self.search(s.with(v), c as usize)? {
                    return Ok(true);
                }
                self.order.pop();
            }
            if self.failed.len() >= self.max_states {
                return Err(Error::BudgetExceeded(format!(
                    "pathwidth search exceeded {} states",
                    self.max_states
                )));
            }
            self.failed.insert(s);
        }
        self.order.truncate(mark);
        Ok(false)
    }
}

fn pathwidth_connected(g: &Graph, cap: i32, budget: &WidthBudget) -> Result<(i32, Vec<usize>)> {
    let n = g.n();
    if n == 1 {
        return Ok((0, vec![0]));
    }
    let adj = bitset::adjacency_sets(g)?;
    let lower = if g.m() + 1 == n { 1 } else { 2 };
    for k in lower..=cap.max(lower) {
        if k > cap {
            break;
        }
        let mut s = PathSearch {
            n,
            adj: adj.clone(),
            all: VertexSet::full(n),
            k: k as usize,
            failed: HashSet::new(),
            max_states: budget.max_states,
            order: Vec::with_capacity(n),
        };
        debug_assert_eq!(s.boundary(VertexSet::EMPTY), 0);
        if s.search(VertexSet::EMPTY, 0)? {
            debug_assert_eq!(s.order.len(), s.n);
            return Ok((k, s.order));
        }
    }
    Err(Error::BudgetExceeded(format!("pathwidth exceeds the width cap {cap}")))
}

/// Exact pathwidth with an optimal layout.
pub fn pathwidth(g: &Graph, budget: &WidthBudget) -> Result<(i32, Layout)> {
    budget.check_size(g.n())?;
    if g.n() == 0 {
        return Ok((-1, Layout::from_order(Vec::new())?));
    }
    let mut width = 0;
    let mut order = Vec::with_capacity(g.n());
    for comp in g.components() {
        let sub = g.induced_subgraph(&comp);
        let (w, local) = pathwidth_connected(&sub, budget.width_cap(g.n(), comp.len()), budget)?;
        width = width.max(w);
        order.extend(local.into_iter().map(|v| comp[v]));
    }
    Ok((width, Layout::from_order(order)?))
}

struct TreeSearch {
    n: usize,
    adj: Vec<VertexSet>,
    all: VertexSet,
    k: usize,
    failed: HashSet<VertexSet>,
    max_states: usize,
    order: Vec<usize>,
}

impl TreeSearch {
    /// Neighbourhoods in the elimination graph after eliminating `s`.
    fn elimination_graph(&self, s: VertexSet) -> Vec<VertexSet> {
        let mut nb = vec![VertexSet::EMPTY; self.n];
        for v in (self.all - s).iter() {
            nb[v] = self.adj[v] - s;
        }
        // Each component of the eliminated part turns its outside
        // neighbourhood into a clique.
        let mut rest = s;
        while let Some(start) = rest.first() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for x in frontier.iter() {
                    next |= self.adj[x];
                }
                frontier = next & s & !comp;
                comp |= frontier;
            }
            rest = rest - comp;
            let mut reach = VertexSet::EMPTY;
            for x in comp.iter() {
                reach |= self.adj[x];
            }
            reach = reach - s;
            for v in reach.iter() {
                nb[v] |= reach.without(v);
            }
        }
        nb
    }

    fn is_clique(nb: &[VertexSet], set: VertexSet) -> bool {
        set.iter().all(|x| set.without(x).is_subset(nb[x]))
    }

    fn almost_simplicial(nb: &[VertexSet], v: usize) -> bool {
        let n = nb[v];
        Self::is_clique(nb, n) || n.iter().any(|u| Self::is_clique(nb, n.without(u)))
    }

    fn search(&mut self, mut s: VertexSet) -> Result<bool> {
        let mark = self.order.len();
        loop {
            if (self.all - s).len() <= self.k + 1 {
                self.order.extend((self.all - s).iter());
                return Ok(true);
            }
            let nb = self.elimination_graph(s);
            let reducible = (self.all - s)
                .iter()
                .find(|&v| nb[v].len() <= self.k && Self::almost_simplicial(&nb, v));
            match reducible {
                Some(v) => {
                    s.insert(v);
                    self.order.push(v);
                }
                None => break,
            }
        }
        if !self.failed.contains(&s) {
            let nb = self.elimination_graph(s);
            for v in (self.all - s).iter() {
                if nb[v].len() > self.k {
                    continue;
                }
                self.order.push(v);
                if self.search(s.with(v))? {
                    return Ok(true);
                }
                self.order.pop();
            }
            if self.failed.len() >= self.max_states {
                return Err(Error::BudgetExceeded(format!(
                    "treewidth search exceeded {} states",
                    self.max_states
                )));
            }
            self.failed.insert(s);
        }
        self.order.truncate(mark);
        Ok(false)
    }
}

fn treewidth_connected(g: &Graph, cap: i32, budget: &WidthBudget) -> Result<(i32, Vec<usize>)> {
    let n = g.n();
    if n == 1 {
        return Ok((0, vec![0]));
    }
    let adj = bitset::adjacency_sets(g)?;
    let lower = if g.m() + 1 == n { 1 } else { 2 };
    for k in lower..=cap.max(lower) {
        if k > cap {
            break;
        }
        let mut s = TreeSearch {
            n,
            adj: adj.clone(),
            all: VertexSet::full(n),
            k: k as usize,
            failed: HashSet::new(),
            max_states: budget.max_states,
            order: Vec::with_capacity(n),
        };
        if s.search(VertexSet::EMPTY)? {
            return Ok((k, s.order));
        }
    }
    Err(Error::BudgetExceeded(format!("treewidth exceeds the width cap {cap}")))
}

/// Builds a tree decomposition from an elimination ordering: the bag of `v`
/// is `v` plus its later neighbours in the elimination graph, attached to
/// the bag of the earliest of those neighbours.
pub fn decomposition_from_elimination(g: &Graph, order: &[usize]) -> TreeDecomposition {
    let n = g.n();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut nb: Vec<BTreeSet<usize>> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut bags = Vec::with_capacity(n);
    let mut parent = vec![None; n];
    for &v in order {
        let later: Vec<usize> = nb[v].iter().copied().filter(|&w| pos[w] > pos[v]).collect();
        for (i, &a) in later.iter().enumerate() {
            for &b in &later[i + 1..] {
                nb[a].insert(b);
                nb[b].insert(a);
            }
        }
        parent[pos[v]] = later.iter().copied().min_by_key(|&w| pos[w]).map(|w| pos[w]);
        let mut bag = later;
        bag.push(v);
        bag.sort_unstable();
        bags.push(bag);
    }
    let mut tree_edges: Vec<(usize, usize)> = parent
        .iter()
        .enumerate()
        .filter_map(|(i, p)| p.map(|p| (i, p)))
        .collect();
    // Join the trees of different components into one.
    let roots: Vec<usize> = (0..n).filter(|&i| parent[i].is_none()).collect();
    for w in roots.windows(2) {
        tree_edges.push((w[0], w[1]));
    }
    let mut td = TreeDecomposition {
        bags,
        tree_edges,
        width: 0,
    };
    td.width = td.max_bag_width();
    td
}

/// Exact treewidth with a validating tree decomposition.
pub fn treewidth(g: &Graph, budget: &WidthBudget) -> Result<(i32, TreeDecomposition)> {
    budget.check_size(g.n())?;
    if g.n() == 0 {
        return Ok((
            -1,
            TreeDecomposition {
                bags: Vec::new(),
                tree_edges: Vec::new(),
                width: -1,
            },
        ));
    }
    let mut width = 0;
    let mut order = Vec::with_capacity(g.n());
    for comp in g.components() {
        let sub = g.induced_subgraph(&comp);
        let (w, local) = treewidth_connected(&sub, budget.width_cap(g.n(), comp.len()), budget)?;
        width = width.max(w);
        order.extend(local.into_iter().map(|v| comp[v]));
    }
    let td = decomposition_from_elimination(g, &order);
    debug_assert_eq!(td.width, width);
    debug_assert_eq!(validate_tree_decomposition(g, &td), Ok(()));
    Ok((width, td))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::graph::{disjoint_union, k_subdivide};
    use alloc::string::ToString;

    fn b() -> WidthBudget {
        WidthBudget::default()
    }

    #[test]
    fn layout_separation() {
        let l = Layout::from_order(vec![0, 1, 2, 3]).unwrap();
        assert_eq!(vertex_separation_of_layout(&path(4), &l).unwrap(), 1);
        assert_eq!(vertex_separation_of_layout(&cycle(4), &l).unwrap(), 2);
        assert_eq!(vertex_separation_of_layout(&complete(4), &l).unwrap(), 3);
        assert!(Layout::from_order(vec![0, 0, 1]).is_err());
        assert!(vertex_separation_of_layout(&path(3), &l).is_err());
    }

    #[test]
    fn pathwidth_examples() {
        for n in 2..8 {
            assert_eq!(pathwidth(&path(n), &b()).unwrap().0, 1);
        }
        assert_eq!(pathwidth(&cycle(9), &b()).unwrap().0, 2);
        assert_eq!(pathwidth(&complete(4), &b()).unwrap().0, 3);
        assert_eq!(pathwidth(&Graph::empty(0), &b()).unwrap().0, -1);
        assert_eq!(pathwidth(&Graph::empty(3), &b()).unwrap().0, 0);
        // Spider with legs of two edges: the smallest tree of pathwidth 2.
        assert_eq!(pathwidth(&subdivided_claw(2, 2, 2), &b()).unwrap().0, 2);
        assert_eq!(pathwidth(&star(3), &b()).unwrap().0, 1);
    }

    #[test]
    fn pathwidth_layout_certifies_value() {
        let g = disjoint_union(&[cycle(5), complete(4), path(3)]).unwrap();
        let (w, layout) = pathwidth(&g, &b()).unwrap();
        assert_eq!(w, 3);
        assert_eq!(vertex_separation_of_layout(&g, &layout).unwrap(), w);
    }

    #[test]
    fn treewidth_examples() {
        assert_eq!(treewidth(&star(4), &b()).unwrap().0, 1);
        assert_eq!(treewidth(&path(2), &b()).unwrap().0, 1);
        for n in 3..10 {
            assert_eq!(treewidth(&cycle(n), &b()).unwrap().0, 2);
        }
        assert_eq!(treewidth(&complete(4), &b()).unwrap().0, 3);
        assert_eq!(treewidth(&complete(6), &b()).unwrap().0, 5);
        assert_eq!(treewidth(&Graph::empty(0), &b()).unwrap().0, -1);
    }

    #[test]
    fn treewidth_certificate_validates() {
        let g = disjoint_union(&[k_subdivide(&complete(5), 1), cycle(4), Graph::empty(1)]).unwrap();
        let (w, td) = treewidth(&g, &b()).unwrap();
        assert_eq!(w, 4);
        assert_eq!(validate_tree_decomposition(&g, &td), Ok(()));
    }

    #[test]
    fn decomposition_validation() {
        let td = TreeDecomposition {
            bags: vec![vec![0, 1, 2]],
            tree_edges: vec![],
            width: 2,
        };
        assert_eq!(validate_tree_decomposition(&complete(3), &td), Ok(()));
        let td = TreeDecomposition {
            bags: vec![vec![0, 1], vec![1, 2]],
            tree_edges: vec![(0, 1)],
            width: 1,
        };
        assert_eq!(validate_tree_decomposition(&path(3), &td), Ok(()));
        let td = TreeDecomposition {
            bags: vec![vec![0], vec![2]],
            tree_edges: vec![(0, 1)],
            width: 0,
        };
        let err = validate_tree_decomposition(&path(3), &td).unwrap_err();
        assert_eq!(err.to_string(), "vertex 2 in no bag");
        let td = TreeDecomposition {
            bags: vec![vec![0], vec![1], vec![2]],
            tree_edges: vec![(0, 1), (1, 2)],
            width: 0,
        };
        let err = validate_tree_decomposition(&path(3), &td).unwrap_err();
        assert_eq!(err.to_string(), "edge 1-2 in no bag");
        let td = TreeDecomposition {
            bags: vec![vec![0, 1], vec![1, 2], vec![0]],
            tree_edges: vec![(0, 1), (1, 2)],
            width: 1,
        };
        assert_eq!(
            validate_tree_decomposition(&path(3), &td),
            Err(TdViolation::DisconnectedOccurrences(0))
        );
    }

    #[test]
    fn budget_caps() {
        assert!(matches!(
            pathwidth(&path(41), &b()),
            Err(Error::TooLarge { n: 41, cap: 40 })
        ));
        let tight = WidthBudget { max_width: 2, ..b() };
        // 25 vertices is above the unbounded size, so the width cap applies.
        let g = disjoint_union(&[complete(4), path(21)]).unwrap();
        assert!(matches!(pathwidth(&g, &tight), Err(Error::BudgetExceeded(_))));
        assert!(matches!(treewidth(&g, &tight), Err(Error::BudgetExceeded(_))));
    }
}
