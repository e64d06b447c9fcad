//! The class 𝒮 of disjoint unions of paths and subdivided claws, the
//! dichotomy for finite forbidden families, and the witness generators.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::graph::{self, k_subdivide, named, Graph, DEFAULT_CYCLE_SEARCH_CAP};
use crate::iso;

/// Why a connected graph is neither a path nor a subdivided claw.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Obstruction {
    Cycle,
    HighDegree,
    TwoBranchVertices,
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Obstruction::Cycle => "has a cycle",
            Obstruction::HighDegree => "degree ≥ 4 vertex",
            Obstruction::TwoBranchVertices => "two degree-3 vertices",
        })
    }
}

/// Shape of one connected component.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SComponentKind {
    /// Path on `r >= 1` vertices.
    Path(usize),
    /// Claw with legs of `a <= b <= c` edges.
    SubdividedClaw(usize, usize, usize),
    Other(Obstruction),
}

impl SComponentKind {
    pub fn is_s(&self) -> bool {
        !matches!(self, SComponentKind::Other(_))
    }
}

impl fmt::Display for SComponentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SComponentKind::Path(r) => write!(f, "P{r}"),
            SComponentKind::SubdividedClaw(a, b, c) => write!(f, "S{a},{b},{c}"),
            SComponentKind::Other(o) => write!(f, "other ({o})"),
        }
    }
}

/// Dichotomy verdict for a finite family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// `family[witness_index]` lies in 𝒮; ℋ-subgraph-free graphs then have
    /// pathwidth at most `pw_bound = |V(witness)| - 2`.
    Tractable { witness_index: usize, pw_bound: i64 },
    /// No member lies in 𝒮; `ell = max(ell1, ell2)` is the subdivision factor.
    Hard { ell1: usize, ell2: usize, ell: usize },
}

impl Verdict {
    pub fn is_hard(&self) -> bool {
        matches!(self, Verdict::Hard { .. })
    }

    pub fn ell(&self) -> Option<usize> {
        match *self {
            Verdict::Hard { ell, .. } => Some(ell),
            Verdict::Tractable { .. } => None,
        }
    }
}

/// Limits on the pattern graphs.
#[derive(Clone, Copy, Debug)]
pub struct PatternConfig {
    /// Largest cyclic component the exhaustive cycle search accepts.
    pub size_cap: usize,
}

impl Default for PatternConfig {
    fn default() -> Self {
        PatternConfig {
            size_cap: DEFAULT_CYCLE_SEARCH_CAP,
        }
    }
}

/// Classifies a connected graph.
pub fn classify_component(c: &Graph) -> Result<SComponentKind> {
    if c.n() == 0 || !c.is_connected() {
        return Err(Error::Disconnected);
    }
    if c.m() != c.n() - 1 {
        return Ok(SComponentKind::Other(Obstruction::Cycle));
    }
    if c.max_degree() >= 4 {
        return Ok(SComponentKind::Other(Obstruction::HighDegree));
    }
    let branch: Vec<usize> = (0..c.n()).filter(|&v| c.degree(v) == 3).collect();
    match branch.as_slice() {
        [] => Ok(SComponentKind::Path(c.n())),
        [centre] => {
            let mut legs: Vec<usize> = c
                .neighbors(*centre)
                .iter()
                .map(|&first| {
                    let (mut prev, mut cur, mut len) = (*centre, first, 1);
                    while c.degree(cur) == 2 {
                        let next = c.neighbors(cur).iter().copied().find(|&w| w != prev).unwrap();
                        prev = cur;
                        cur = next;
                        len += 1;
                    }
                    len
                })
                .collect();
            legs.sort_unstable();
            Ok(SComponentKind::SubdividedClaw(legs[0], legs[1], legs[2]))
        }
        _ => Ok(SComponentKind::Other(Obstruction::TwoBranchVertices)),
    }
}

/// Component kinds of `g`, in component order.
pub fn component_kinds(g: &Graph) -> Vec<SComponentKind> {
    g.components()
        .iter()
        .map(|comp| classify_component(&g.induced_subgraph(comp)).expect("component is connected"))
        .collect()
}

/// Membership in 𝒮: non-empty, and every component a path or subdivided claw.
pub fn is_in_s(g: &Graph) -> bool {
    g.n() > 0 && component_kinds(g).iter().all(SComponentKind::is_s)
}

/// Longest distance between two distinct vertices of degree at least 3 in
/// the same component; `None` if no such pair exists.
pub fn branch_vertex_distance(g: &Graph) -> Option<usize> {
    let branch: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) >= 3).collect();
    let mut best = None;
    for (i, &x) in branch.iter().enumerate() {
        let dist = g.bfs_distances(x);
        for &y in &branch[i + 1..] {
            if let Some(d) = dist[y] {
                best = Some(best.map_or(d, |b: usize| b.max(d)));
            }
        }
    }
    best
}

/// Decides the dichotomy for a finite non-empty family.
pub fn classify_family(family: &[Graph], config: &PatternConfig) -> Result<Verdict> {
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    if let Some(i) = family.iter().position(is_in_s) {
        return Ok(Verdict::Tractable {
            witness_index: i,
            pw_bound: family[i].n() as i64 - 2,
        });
    }
    let mut ell1 = 1;
    let mut ell2 = 1;
    for h in family {
        ell1 = ell1.max(graph::longest_cycle(h, config.size_cap)?);
        if let Some(d) = branch_vertex_distance(h) {
            ell2 = ell2.max(d);
        }
    }
    Ok(Verdict::Hard {
        ell1,
        ell2,
        ell: ell1.max(ell2),
    })
}

/// The `k·ℓ`-subdivision of a subcubic `base`, checked ℋ-subgraph-free.
pub fn hardness_witness(family: &[Graph], k: usize, base: &Graph, config: &PatternConfig) -> Result<Graph> {
    let ell = classify_family(family, config)?.ell().ok_or(Error::NotHard)?;
    if !base.is_subcubic() {
        return Err(Error::NotSubcubic);
    }
    if k == 0 {
        return Err(Error::Invalid("subdivision unit must be at least 1".into()));
    }
    let witness = k_subdivide(base, k * ell);
    if let Some((i, _)) = iso::first_contained_pattern(&witness, family) {
        return Err(Error::FrameworkViolation(alloc::format!(
            "{}-subdivision contains family member {i}",
            k * ell
        )));
    }
    Ok(witness)
}

/// `H_ℓ`: two 3-vertex paths whose middle vertices are joined by a path of
/// `ℓ` edges. `H_1` is the "H"-graph.
pub fn gen_h_ell(ell: usize) -> Graph {
    assert!(ell >= 1, "H_ell needs ell >= 1");
    // 0-1-2 and 3-4-5 are the two paths; 1 and 4 are joined.
    let mut edges = vec![(0, 1), (1, 2), (3, 4), (4, 5)];
    let mut prev = 1;
    for i in 0..ell - 1 {
        edges.push((prev, 6 + i));
        prev = 6 + i;
    }
    edges.push((prev, 4));
    Graph::new(5 + ell, edges).unwrap()
}

/// Membership in ℬ: a cycle plus one pendant vertex attached to it.
pub fn b_member(g: &Graph) -> bool {
    if g.n() < 4 || g.m() != g.n() || !g.is_connected() {
        return false;
    }
    let deg = g.degrees();
    let ones: Vec<usize> = (0..g.n()).filter(|&v| deg[v] == 1).collect();
    let threes = deg.iter().filter(|&&d| d == 3).count();
    let twos = deg.iter().filter(|&&d| d == 2).count();
    if ones.len() != 1 || threes != 1 || twos != g.n() - 2 {
        return false;
    }
    deg[g.neighbors(ones[0])[0]] == 3
}

/// Cycle `C_len` with a pendant vertex attached to vertex 0.
pub fn b_graph(cycle_len: usize) -> Graph {
    let c = named::cycle(cycle_len);
    let edges = c.edges().iter().copied().chain([(0, cycle_len)]);
    Graph::new(cycle_len + 1, edges).unwrap()
}

/// An ℋ-subgraph-free member of ℬ for a hard family: a cycle longer than
/// every cycle in ℋ, plus a pendant vertex. Forest members of ℋ cannot
/// embed since ℬ-graphs have one degree-3 vertex and maximum degree 3.
pub fn b_witness(family: &[Graph], config: &PatternConfig) -> Result<Graph> {
    let Verdict::Hard { ell1, .. } = classify_family(family, config)? else {
        return Err(Error::NotHard);
    };
    let b = b_graph((ell1 + 1).max(3));
    if let Some((i, _)) = iso::first_contained_pattern(&b, family) {
        return Err(Error::FrameworkViolation(alloc::format!(
            "B-witness contains family member {i}"
        )));
    }
    Ok(b)
}

/// Canonical textual name of a component kind list, e.g. `S2,3,4+P2`.
pub fn describe(kinds: &[SComponentKind]) -> String {
    use core::fmt::Write;
    let mut s = String::new();
    for (i, k) in kinds.iter().enumerate() {
        if i > 0 {
            s.push('+');
        }
        let _ = write!(s, "{k}");
    }
    s
}
