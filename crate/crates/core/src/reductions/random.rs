//! Seeded random instances and claim suites.
//!
//! Trial `i` of a suite with seed `s` draws from its own ChaCha8 stream, so
//! a trial can be reproduced alone and suites can run in any order.

use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::claims::{verify_claim, ClaimBudget, ClaimId, ClaimReport};
use crate::error::Result;
use crate::graph::Graph;
use crate::oracles::{CnfFormula, Literal, ProblemInstance};

/// Size caps for random base instances. For the formula claims `max_n`
/// bounds the variables and `max_m` the clauses.
#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub min_n: usize,
    pub max_n: usize,
    pub max_m: usize,
}

impl SuiteConfig {
    pub fn new(max_n: usize, max_m: usize) -> Self {
        SuiteConfig { min_n: 1, max_n, max_m }
    }
}

pub fn trial_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// `G(n, p)`.
pub fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let edges: Vec<_> = all_pairs(n).into_iter().filter(|_| rng.gen_bool(p)).collect();
    Graph::new(n, edges).unwrap()
}

/// `G(n, p)` with random edges dropped until at most `max_m` remain.
pub fn gnp_capped<R: Rng>(n: usize, p: f64, max_m: usize, rng: &mut R) -> Graph {
    let mut edges: Vec<_> = all_pairs(n).into_iter().filter(|_| rng.gen_bool(p)).collect();
    if edges.len() > max_m {
        edges.shuffle(rng);
        edges.truncate(max_m);
    }
    Graph::new(n, edges).unwrap()
}

/// A random spanning tree plus each further pair with probability `p`,
/// keeping at most `max(max_m, n - 1)` edges.
pub fn random_connected<R: Rng>(n: usize, p: f64, max_m: usize, rng: &mut R) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges: Vec<(usize, usize)> = (1..n)
        .map(|i| {
            let j = rng.gen_range(0..i);
            let (a, b) = (order[i], order[j]);
            (a.min(b), a.max(b))
        })
        .collect();
    let mut extra: Vec<_> = all_pairs(n)
        .into_iter()
        .filter(|e| !edges.contains(e))
        .filter(|_| rng.gen_bool(p))
        .collect();
    extra.shuffle(rng);
    extra.truncate(max_m.saturating_sub(edges.len()));
    edges.extend(extra);
    Graph::new(n, edges).unwrap()
}

/// Subcubic graph by degree-constrained insertion of shuffled pairs, up to
/// a random edge target of at most `max_m`.
pub fn random_subcubic<R: Rng>(n: usize, max_m: usize, rng: &mut R) -> Graph {
    let target = rng.gen_range(0..=max_m.min(3 * n / 2));
    let mut deg = alloc::vec![0usize; n];
    let mut pairs = all_pairs(n);
    pairs.shuffle(rng);
    let mut edges = Vec::new();
    for (u, v) in pairs {
        if edges.len() >= target {
            break;
        }
        if deg[u] < 3 && deg[v] < 3 {
            deg[u] += 1;
            deg[v] += 1;
            edges.push((u, v));
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Connected subcubic graph: a random tree of maximum degree 3, then
/// degree-constrained insertion with probability `p` per pair.
pub fn random_subcubic_connected<R: Rng>(n: usize, p: f64, max_m: usize, rng: &mut R) -> Graph {
    let mut deg = alloc::vec![0usize; n];
    let mut edges = Vec::new();
    for i in 1..n {
        let open: Vec<usize> = (0..i).filter(|&j| deg[j] < 3).collect();
        let j = *open.choose(rng).unwrap();
        deg[i] += 1;
        deg[j] += 1;
        edges.push((j, i));
    }
    let mut pairs = all_pairs(n);
    pairs.shuffle(rng);
    for (u, v) in pairs {
        if edges.len() >= max_m.max(n.saturating_sub(1)) {
            break;
        }
        if deg[u] < 3 && deg[v] < 3 && !edges.contains(&(u, v)) && rng.gen_bool(p) {
            deg[u] += 1;
            deg[v] += 1;
            edges.push((u, v));
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Up to `m` clauses over `n_vars` variables, each literal used at most
/// twice; stops early once fewer than three literal slots remain.
pub fn random_cnf<R: Rng>(n_vars: usize, m: usize, rng: &mut R) -> CnfFormula {
    let mut left = alloc::vec![2usize; 2 * n_vars];
    let mut clauses = Vec::new();
    while clauses.len() < m && left.iter().sum::<usize>() >= 3 {
        let mut clause = [Literal::new(0, false); 3];
        for slot in &mut clause {
            let open: Vec<usize> = (0..2 * n_vars).filter(|&i| left[i] > 0).collect();
            let i = *open.choose(rng).unwrap();
            left[i] -= 1;
            *slot = Literal::new(i / 2, i % 2 == 1);
        }
        clauses.push(clause);
    }
    CnfFormula::new(n_vars, clauses).unwrap()
}

/// `count` distinct random vertices.
pub fn random_vertices<R: Rng>(n: usize, count: usize, rng: &mut R) -> Vec<usize> {
    let mut vs: Vec<usize> = (0..n).collect();
    vs.shuffle(rng);
    vs.truncate(count);
    vs.sort_unstable();
    vs
}

/// Up to `count` pairwise non-adjacent random vertices.
pub fn random_independent_vertices<R: Rng>(g: &Graph, count: usize, rng: &mut R) -> Vec<usize> {
    let mut vs: Vec<usize> = (0..g.n()).collect();
    vs.shuffle(rng);
    let mut chosen: Vec<usize> = Vec::new();
    for v in vs {
        if chosen.len() == count {
            break;
        }
        if chosen.iter().all(|&u| !g.has_edge(u, v)) {
            chosen.push(v);
        }
    }
    chosen.sort_unstable();
    chosen
}

/// A random base instance meeting the preconditions of `claim`.
pub fn random_base<R: Rng>(claim: ClaimId, config: &SuiteConfig, rng: &mut R) -> ProblemInstance {
    use ClaimId::*;
    let lo = match claim {
        Est1Sub | Emwc1Sub | Nmwc1Sub | Dp1Sub | Idp1Sub | SteinerSubcubic => 2,
        NaeOctGadget | Ioct2SubGadget => 1,
        _ => 1,
    };
    let lo = lo.max(config.min_n).min(config.max_n);
    let n = rng.gen_range(lo..=config.max_n);
    let p = rng.gen_range(0.15..0.75);
    let max_m = config.max_m;
    match claim {
        PwSubdiv => ProblemInstance::Graph(random_subcubic(n, max_m, rng)),
        TwSubdiv | Is2Sub | Vc2Sub | Ds3Sub | Ids3Sub | Eds3Sub | Oct2Sub | Maxcut2Sub => {
            ProblemInstance::Graph(gnp_capped(n, p, max_m, rng))
        }
        Diam2Sub => ProblemInstance::Graph(random_connected(n, p, max_m, rng)),
        Est1Sub | Emwc1Sub | SteinerSubcubic => {
            let g = random_connected(n, p, max_m, rng);
            let min_t = if claim == Emwc1Sub { 2 } else { 1 };
            let cap = if claim == SteinerSubcubic { 3 } else { 4 };
            let t = rng.gen_range(min_t..=cap.min(n).max(min_t));
            let t = random_vertices(n, t, rng);
            ProblemInstance::Terminals(g, t)
        }
        Nmwc1Sub => loop {
            // Complete-ish draws may have no two non-adjacent vertices.
            let g = random_connected(n.max(3), p, max_m, rng);
            let want = rng.gen_range(2..=4usize.min(g.n()));
            let t = random_independent_vertices(&g, want, rng);
            if t.len() >= 2 {
                break ProblemInstance::Terminals(g, t);
            }
        },
        Dp1Sub | Idp1Sub => {
            let g = random_subcubic_connected(n, p, max_m, rng);
            let k = rng.gen_range(1..=(n / 2).clamp(1, 3));
            let vs = random_vertices(n, 2 * k, rng);
            let mut vs2 = vs.clone();
            vs2.shuffle(rng);
            let pairs = vs2.chunks(2).map(|c| (c[0], c[1])).collect();
            ProblemInstance::Pairs(g, pairs)
        }
        NaeOctGadget | Ioct2SubGadget => {
            let m = rng.gen_range(1..=max_m.max(1));
            ProblemInstance::Formula(random_cnf(n, m, rng))
        }
    }
}

/// Runs `claim` on `trials` random bases, trial `i` drawn from
/// [`trial_rng`]`(seed, i)`.
pub fn random_suite(
    claim: ClaimId,
    trials: usize,
    config: &SuiteConfig,
    seed: u64,
    budget: &ClaimBudget,
) -> Result<Vec<ClaimReport>> {
    (0..trials)
        .map(|i| {
            let base = random_base(claim, config, &mut trial_rng(seed, i));
            verify_claim(claim, &base, budget)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_respect_constraints() {
        let mut rng = trial_rng(3, 0);
        for n in 1..12 {
            let g = random_subcubic(n, 100, &mut rng);
            assert!(g.is_subcubic());
            let g = random_subcubic_connected(n, 0.5, 100, &mut rng);
            assert!(g.is_subcubic() && g.is_connected());
            let g = random_connected(n, 0.3, 4, &mut rng);
            assert!(g.is_connected());
            assert!(g.m() <= 4.max(n - 1));
            assert!(gnp_capped(n, 0.9, 5, &mut rng).m() <= 5);
            let f = random_cnf(n, 10, &mut rng);
            assert!(f.occurrences().iter().all(|&c| c <= 2));
        }
    }

    #[test]
    fn bases_are_reproducible() {
        let c = SuiteConfig::new(7, 10);
        for claim in ClaimId::ALL {
            let a = random_base(claim, &c, &mut trial_rng(9, 4));
            let b = random_base(claim, &c, &mut trial_rng(9, 4));
            assert_eq!(a, b);
        }
    }

    #[test]
    fn small_suite_passes() {
        let reports = random_suite(
            ClaimId::Is2Sub,
            10,
            &SuiteConfig::new(6, 8),
            42,
            &ClaimBudget::default(),
        )
        .unwrap();
        assert!(reports.iter().all(|r| r.pass));
    }
}
