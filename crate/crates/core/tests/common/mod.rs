//! Brute-force reference implementations, written from the definitions
//! and sharing no code with the library solvers.

#![allow(dead_code)]

use hsfree_core::Graph;

pub fn adj_matrix(g: &Graph) -> Vec<Vec<bool>> {
    let mut a = vec![vec![false; g.n()]; g.n()];
    for &(u, v) in g.edges() {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

fn members(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Connectivity of the subgraph induced by `vs` (empty counts as connected).
pub fn induced_connected(a: &[Vec<bool>], vs: &[usize]) -> bool {
    if vs.is_empty() {
        return true;
    }
    let mut seen = vec![vs[0]];
    let mut i = 0;
    while i < seen.len() {
        let x = seen[i];
        for &y in vs {
            if a[x][y] && !seen.contains(&y) {
                seen.push(y);
            }
        }
        i += 1;
    }
    seen.len() == vs.len()
}

/// Bipartiteness of the graph with vertex set `alive` and edges of `a`.
pub fn bipartite(a: &[Vec<bool>], alive: &[bool]) -> bool {
    let n = a.len();
    let mut col = vec![-1i8; n];
    for s in 0..n {
        if !alive[s] || col[s] >= 0 {
            continue;
        }
        col[s] = 0;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for y in 0..n {
                if a[x][y] && alive[y] {
                    if col[y] < 0 {
                        col[y] = 1 - col[x];
                        stack.push(y);
                    } else if col[y] == col[x] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

pub fn mis(g: &Graph) -> usize {
    let a = adj_matrix(g);
    (0u64..1 << g.n())
        .filter(|&s| {
            let vs = members(s, g.n());
            vs.iter().all(|&x| vs.iter().all(|&y| !a[x][y]))
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap()
}

pub fn dominating(g: &Graph, independent: bool) -> usize {
    let a = adj_matrix(g);
    let n = g.n();
    (0u64..1 << n)
        .filter(|&s| {
            let vs = members(s, n);
            (!independent || vs.iter().all(|&x| vs.iter().all(|&y| !a[x][y])))
                && (0..n).all(|v| s >> v & 1 == 1 || vs.iter().any(|&x| a[x][v]))
        })
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap()
}

pub fn edge_dominating(g: &Graph) -> usize {
    let e = g.edges();
    (0u64..1 << e.len())
        .filter(|&s| {
            let f: Vec<_> = members(s, e.len()).into_iter().map(|i| e[i]).collect();
            e.iter()
                .all(|&(u, v)| f.iter().any(|&(x, y)| x == u || x == v || y == u || y == v))
        })
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap()
}

pub fn oct(g: &Graph, independent: bool) -> Option<usize> {
    let a = adj_matrix(g);
    let n = g.n();
    (0u64..1 << n)
        .filter(|&s| {
            let vs = members(s, n);
            if independent && vs.iter().any(|&x| vs.iter().any(|&y| a[x][y])) {
                return false;
            }
            let alive: Vec<bool> = (0..n).map(|v| s >> v & 1 == 0).collect();
            bipartite(&a, &alive)
        })
        .map(|s| s.count_ones() as usize)
        .min()
}

pub fn max_cut(g: &Graph) -> usize {
    (0u64..1 << g.n())
        .map(|s| g.edges().iter().filter(|&&(u, v)| (s >> u & 1) != (s >> v & 1)).count())
        .max()
        .unwrap()
}

/// Edge Steiner optimum: smallest connected vertex set containing `t`,
/// minus one. `None` when no such set exists.
pub fn steiner(g: &Graph, t: &[usize]) -> Option<usize> {
    let a = adj_matrix(g);
    let tmask: u64 = t.iter().map(|&v| 1u64 << v).sum();
    (0u64..1 << g.n())
        .filter(|&s| s & tmask == tmask && s != 0)
        .filter(|&s| induced_connected(&a, &members(s, g.n())))
        .map(|s| s.count_ones() as usize - 1)
        .min()
}

fn separated(g: &Graph, alive_v: &[bool], alive_e: &[bool], t: &[usize]) -> bool {
    let n = g.n();
    for (i, &s) in t.iter().enumerate() {
        let mut seen = vec![false; n];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for (j, &(u, v)) in g.edges().iter().enumerate() {
                if !alive_e[j] {
                    continue;
                }
                let y = if u == x {
                    v
                } else if v == x {
                    u
                } else {
                    continue;
                };
                if alive_v[y] && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        if t[i + 1..].iter().any(|&o| seen[o]) {
            return false;
        }
    }
    true
}

pub fn edge_multiway_cut(g: &Graph, t: &[usize]) -> usize {
    let m = g.m();
    (0u64..1 << m)
        .filter(|&s| {
            let alive_e: Vec<bool> = (0..m).map(|i| s >> i & 1 == 0).collect();
            separated(g, &vec![true; g.n()], &alive_e, t)
        })
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap()
}

pub fn node_multiway_cut(g: &Graph, t: &[usize]) -> Option<usize> {
    let n = g.n();
    let tmask: u64 = t.iter().map(|&v| 1u64 << v).sum();
    (0u64..1 << n)
        .filter(|&s| s & tmask == 0)
        .filter(|&s| {
            let alive_v: Vec<bool> = (0..n).map(|v| s >> v & 1 == 0).collect();
            separated(g, &alive_v, &vec![true; g.m()], t)
        })
        .map(|s| s.count_ones() as usize)
        .min()
}

/// All simple paths from `s` to `t`.
pub fn simple_paths(a: &[Vec<bool>], s: usize, t: usize) -> Vec<Vec<usize>> {
    fn go(a: &[Vec<bool>], t: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let x = *path.last().unwrap();
        if x == t {
            out.push(path.clone());
            return;
        }
        for y in 0..a.len() {
            if a[x][y] && !path.contains(&y) {
                path.push(y);
                go(a, t, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(a, t, &mut vec![s], &mut out);
    out
}

pub fn disjoint_paths(g: &Graph, pairs: &[(usize, usize)], induced: bool) -> bool {
    let a = adj_matrix(g);
    let options: Vec<Vec<Vec<usize>>> = pairs.iter().map(|&(s, t)| simple_paths(&a, s, t)).collect();
    fn pick(a: &[Vec<bool>], options: &[Vec<Vec<usize>>], chosen: &mut Vec<Vec<usize>>, induced: bool) -> bool {
        let i = chosen.len();
        if i == options.len() {
            return true;
        }
        for p in &options[i] {
            let clash = chosen
                .iter()
                .any(|q| p.iter().any(|x| q.contains(x)) || (induced && p.iter().any(|&x| q.iter().any(|&y| a[x][y]))));
            if !clash {
                chosen.push(p.clone());
                if pick(a, options, chosen, induced) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    pick(&a, &options, &mut Vec::new(), induced)
}

pub fn list_colourable(g: &Graph, lists: &[Vec<u32>]) -> bool {
    let n = g.n();
    let mut idx = vec![0usize; n];
    if lists.iter().any(|l| l.is_empty()) {
        return false;
    }
    loop {
        if g.edges().iter().all(|&(u, v)| lists[u][idx[u]] != lists[v][idx[v]]) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            idx[i] += 1;
            if idx[i] < lists[i].len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

/// Vertex separation number minimised over all orderings.
pub fn pathwidth(g: &Graph) -> i32 {
    let n = g.n();
    if n == 0 {
        return -1;
    }
    let a = adj_matrix(g);
    let mut best = i32::MAX;
    permutations(n, &mut |order| {
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let width = (0..n)
            .map(|i| {
                (0..n)
                    .filter(|&v| pos[v] <= i && (0..n).any(|w| a[v][w] && pos[w] > i))
                    .count() as i32
            })
            .max()
            .unwrap();
        best = best.min(width);
    });
    best
}

/// Treewidth as the minimum over elimination orderings of the largest
/// neighbourhood at elimination time.
pub fn treewidth(g: &Graph) -> i32 {
    let n = g.n();
    if n == 0 {
        return -1;
    }
    let a0 = adj_matrix(g);
    let mut best = i32::MAX;
    permutations(n, &mut |order| {
        let mut a = a0.clone();
        let mut gone = vec![false; n];
        let mut width = 0;
        for &v in order {
            let nb: Vec<usize> = (0..n).filter(|&w| !gone[w] && a[v][w]).collect();
            width = width.max(nb.len() as i32);
            for &x in &nb {
                for &y in &nb {
                    if x != y {
                        a[x][y] = true;
                    }
                }
            }
            gone[v] = true;
        }
        best = best.min(width);
    });
    best
}

pub fn permutations(n: usize, f: &mut dyn FnMut(&[usize])) {
    fn go(p: &mut Vec<usize>, used: &mut Vec<bool>, f: &mut dyn FnMut(&[usize])) {
        if p.len() == used.len() {
            f(p);
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                p.push(v);
                go(p, used, f);
                p.pop();
                used[v] = false;
            }
        }
    }
    go(&mut Vec::new(), &mut vec![false; n], f);
}

/// `h` is a (not necessarily induced) subgraph of `g`: some injection maps
/// every edge of `h` onto an edge of `g`.
pub fn contains(h: &Graph, g: &Graph) -> bool {
    if h.n() > g.n() {
        return false;
    }
    let a = adj_matrix(g);
    fn go(h: &Graph, a: &[Vec<bool>], map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let i = map.len();
        if i == h.n() {
            return true;
        }
        for x in 0..a.len() {
            if used[x] {
                continue;
            }
            if h.neighbors(i).iter().filter(|&&j| j < i).all(|&j| a[map[j]][x]) {
                used[x] = true;
                map.push(x);
                if go(h, a, map, used) {
                    return true;
                }
                map.pop();
                used[x] = false;
            }
        }
        false
    }
    go(h, &a, &mut Vec::new(), &mut vec![false; g.n()])
}

pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.m() == b.m() && contains(a, b)
}

pub fn sorted_degrees(g: &Graph) -> Vec<usize> {
    let mut d = g.degrees();
    d.sort_unstable();
    d
}

/// Path on `r` vertices starting at `offset`.
fn path_edges(r: usize, offset: usize) -> Vec<(usize, usize)> {
    (1..r).map(|i| (offset + i - 1, offset + i)).collect()
}

/// Subdivided claw with legs `a, b, c` on vertices `offset ..`.
fn claw_edges(legs: [usize; 3], offset: usize) -> Vec<(usize, usize)> {
    let mut e = Vec::new();
    let mut next = offset + 1;
    for leg in legs {
        let mut prev = offset;
        for _ in 0..leg {
            e.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    e
}

#[derive(Clone, Copy, Debug)]
enum Shape {
    Path(usize),
    Claw([usize; 3]),
}

impl Shape {
    fn size(self) -> usize {
        match self {
            Shape::Path(r) => r,
            Shape::Claw([a, b, c]) => 1 + a + b + c,
        }
    }
}

/// Every member of the class S (non-empty disjoint unions of paths and
/// subdivided claws) on exactly `n` vertices, up to isomorphism of parts.
pub fn s_graphs(n: usize) -> Vec<Graph> {
    let mut shapes = Vec::new();
    for r in 1..=n {
        shapes.push(Shape::Path(r));
    }
    for a in 1..=n {
        for b in a..=n {
            for c in b..=n {
                if 1 + a + b + c <= n {
                    shapes.push(Shape::Claw([a, b, c]));
                }
            }
        }
    }
    let mut out = Vec::new();
    fn go(shapes: &[Shape], from: usize, left: usize, parts: &mut Vec<Shape>, out: &mut Vec<Graph>) {
        if left == 0 {
            let mut e = Vec::new();
            let mut off = 0;
            for &p in parts.iter() {
                e.extend(match p {
                    Shape::Path(r) => path_edges(r, off),
                    Shape::Claw(l) => claw_edges(l, off),
                });
                off += p.size();
            }
            out.push(Graph::new(off, e).unwrap());
            return;
        }
        for i in from..shapes.len() {
            if shapes[i].size() <= left {
                parts.push(shapes[i]);
                go(shapes, i, left - shapes[i].size(), parts, out);
                parts.pop();
            }
        }
    }
    if n > 0 {
        go(&shapes, 0, n, &mut Vec::new(), &mut out);
    }
    out
}

/// Canonical form by minimising the sorted edge list over all relabellings.
pub fn canonical(g: &Graph) -> Vec<(usize, usize)> {
    let mut best: Option<Vec<(usize, usize)>> = None;
    permutations(g.n(), &mut |p| {
        let mut e: Vec<_> = g
            .edges()
            .iter()
            .map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v])))
            .collect();
        e.sort_unstable();
        if best.as_ref().is_none_or(|b| e < *b) {
            best = Some(e);
        }
    });
    best.unwrap_or_default()
}

/// All graphs on `n` vertices up to isomorphism satisfying `keep`.
pub fn graphs_up_to_iso(n: usize, keep: impl Fn(&Graph) -> bool) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let e = members(mask, pairs.len()).into_iter().map(|i| pairs[i]);
        let g = Graph::new(n, e).unwrap();
        if keep(&g) && seen.insert(canonical(&g)) {
            out.push(g);
        }
    }
    out
}

pub fn nae_satisfiable(n_vars: usize, clauses: &[[i32; 3]]) -> bool {
    (0u32..1 << n_vars).any(|bits| {
        clauses.iter().all(|c| {
            let vals: Vec<bool> = c
                .iter()
                .map(|&l| (bits >> (l.unsigned_abs() - 1) & 1 == 1) == (l > 0))
                .collect();
            vals.contains(&true) && vals.contains(&false)
        })
    })
}

/// Cycle plus one pendant vertex, checked from the definition: removing
/// the unique degree-1 vertex leaves a connected 2-regular graph.
pub fn is_cycle_plus_pendant(g: &Graph) -> bool {
    let leaves: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) == 1).collect();
    if leaves.len() != 1 || g.n() < 4 {
        return false;
    }
    let rest: Vec<usize> = (0..g.n()).filter(|&v| v != leaves[0]).collect();
    let h = g.induced_subgraph(&rest);
    h.is_connected() && (0..h.n()).all(|v| h.degree(v) == 2)
}

/// Each edge replaced by a path with `k` new internal vertices.
pub fn subdivide(g: &Graph, k: usize) -> Graph {
    let mut next = g.n();
    let mut e = Vec::new();
    for &(u, v) in g.edges() {
        let mut prev = u;
        for _ in 0..k {
            e.push((prev, next));
            prev = next;
            next += 1;
        }
        e.push((prev, v));
    }
    Graph::new(next, e).unwrap()
}

/// Diameter by Floyd-Warshall; `None` if disconnected.
pub fn diameter(g: &Graph) -> Option<usize> {
    let n = g.n();
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for &(u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    let worst = d.iter().flatten().copied().max().unwrap_or(0);
    (worst < inf).then_some(worst)
}

pub fn components(g: &Graph) -> Vec<Vec<usize>> {
    let a = adj_matrix(g);
    let mut comp = vec![usize::MAX; g.n()];
    let mut out = Vec::new();
    for s in 0..g.n() {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = out.len();
        let mut c = vec![s];
        let mut i = 0;
        while i < c.len() {
            for y in 0..g.n() {
                if a[c[i]][y] && comp[y] == usize::MAX {
                    comp[y] = out.len();
                    c.push(y);
                }
            }
            i += 1;
        }
        c.sort_unstable();
        out.push(c);
    }
    out
}
