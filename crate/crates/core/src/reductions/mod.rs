//! Hardness gadgets, the subdivision claims, and seeded random suites that
//! check the claims against the exact oracles.

pub mod claims;
pub mod gadgets;
pub mod random;

pub use claims::{
    build_claim_instance, verify_claim, ClaimBudget, ClaimId, ClaimInstance, ClaimReport, ClaimValue, Relation,
};
pub use gadgets::{nae_to_oct_gadget, steiner_subcubic_expand, SteinerExpansion};
pub use random::{random_base, random_suite, trial_rng, SuiteConfig};

use crate::graph::Graph;
use crate::oracles::ProblemInstance;

struct Fnv(u64);

impl Fnv {
    fn word(&mut self, x: u64) {
        for b in x.to_le_bytes() {
            self.0 ^= b as u64;
            self.0 = self.0.wrapping_mul(0x100_0000_01b3);
        }
    }

    fn graph(&mut self, g: &Graph) {
        self.word(g.n() as u64);
        self.word(g.m() as u64);
        for &(u, v) in g.edges() {
            self.word(u as u64);
            self.word(v as u64);
        }
    }
}

/// FNV-1a hash of a canonical encoding of the instance, stable across
/// platforms and releases. Labels are ignored.
pub fn digest(inst: &ProblemInstance) -> u64 {
    let mut h = Fnv(0xcbf2_9ce4_8422_2325);
    match inst {
        ProblemInstance::Graph(g) => {
            h.word(1);
            h.graph(g);
        }
        ProblemInstance::Terminals(g, t) => {
            h.word(2);
            h.graph(g);
            h.word(t.len() as u64);
            t.iter().for_each(|&v| h.word(v as u64));
        }
        ProblemInstance::Pairs(g, p) => {
            h.word(3);
            h.graph(g);
            h.word(p.len() as u64);
            for &(s, t) in p {
                h.word(s as u64);
                h.word(t as u64);
            }
        }
        ProblemInstance::Lists(g, l) => {
            h.word(4);
            h.graph(g);
            for list in l.lists() {
                h.word(list.len() as u64);
                list.iter().for_each(|&c| h.word(c as u64));
            }
        }
        ProblemInstance::Formula(f) => {
            h.word(5);
            h.word(f.n_vars() as u64);
            h.word(f.clauses().len() as u64);
            for l in f.clauses().iter().flatten() {
                h.word(l.dimacs() as i64 as u64);
            }
        }
        ProblemInstance::SteinerBudget { graph, terminals, k } => {
            h.word(6);
            h.graph(graph);
            h.word(terminals.len() as u64);
            terminals.iter().for_each(|&v| h.word(v as u64));
            h.word(*k as u64);
        }
    }
    h.0
}
