//! Exact solvers for small instances of the framework problems.
//!
//! They serve as ground truth when checking the subdivision claims, so
//! every solver returns a certificate and [`check`] re-validates it against
//! the problem definition.

use alloc::vec::Vec;

use crate::bitset::MAX_BITSET_VERTICES;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub mod check;
pub mod colouring;
pub mod cut;
pub mod distance;
pub mod domination;
pub mod mis;
pub mod oct;
pub mod paths;
pub mod problem;
pub mod sat;
pub mod steiner;

pub use colouring::{b_modified_list_colouring, list_colouring, ListAssignment};
pub use cut::{max_cut, multiway_cut};
pub use distance::diameter_radius;
pub use domination::{min_dominating_set, DominationVariant};
pub use mis::{max_independent_set, min_vertex_cover};
pub use oct::{min_odd_cycle_transversal, odd_cycle_transversal_at_most};
pub use paths::disjoint_paths;
pub use problem::{check_solution, solve, InstanceKind, Problem, ProblemInstance, Solution};
pub use sat::{nae_3sat, CnfFormula, Literal};
pub use steiner::steiner_tree;

/// Edge or vertex flavour of Steiner tree and multiway cut.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Edge,
    Node,
}

/// Terminals for Steiner tree / multiway cut, or pairs for disjoint paths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TerminalSpec {
    Set(Vec<usize>),
    Pairs(Vec<(usize, usize)>),
}

impl TerminalSpec {
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let mut seen = alloc::vec![false; g.n()];
        let ids: Vec<usize> = match self {
            TerminalSpec::Set(t) => t.clone(),
            TerminalSpec::Pairs(p) => p.iter().flat_map(|&(s, t)| [s, t]).collect(),
        };
        for v in ids {
            if v >= g.n() {
                return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
            }
            if core::mem::replace(&mut seen[v], true) {
                return Err(Error::Invalid(alloc::format!("terminal {} repeated", v + 1)));
            }
        }
        Ok(())
    }
}

/// Witness attached to an optimum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Vertices(Vec<usize>),
    Edges(Vec<(usize, usize)>),
    /// One side of a cut.
    Side(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OptResult {
    pub value: usize,
    pub certificate: Certificate,
}

/// Limits shared by the exponential solvers.
#[derive(Clone, Copy, Debug)]
pub struct OracleBudget {
    /// Vertices accepted by the bitset solvers.
    pub max_n: usize,
    /// Search nodes before giving up.
    pub max_nodes: u64,
    /// Terminals accepted by the Steiner dynamic program.
    pub max_terminals: usize,
    /// Variables accepted by the brute-force satisfiability search.
    pub max_variables: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_n: MAX_BITSET_VERTICES,
            max_nodes: 200_000_000,
            max_terminals: 12,
            max_variables: 24,
        }
    }
}

impl OracleBudget {
    pub(crate) fn check_n(&self, n: usize) -> Result<()> {
        let cap = self.max_n.min(MAX_BITSET_VERTICES);
        if n > cap {
            return Err(Error::TooLarge { n, cap });
        }
        Ok(())
    }
}

/// Counts search nodes against [`OracleBudget::max_nodes`].
pub(crate) struct NodeCounter {
    used: u64,
    max: u64,
    what: &'static str,
}

impl NodeCounter {
    pub(crate) fn new(budget: &OracleBudget, what: &'static str) -> Self {
        NodeCounter {
            used: 0,
            max: budget.max_nodes,
            what,
        }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.max {
            return Err(Error::BudgetExceeded(alloc::format!(
                "{} search exceeded {} nodes",
                self.what,
                self.max
            )));
        }
        Ok(())
    }
}
