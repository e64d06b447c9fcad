//! Uniform entry point over all oracles: a problem name, an instance, and a
//! solution that can be re-checked against the instance.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::check;
use super::*;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Problem {
    IndependentSet,
    VertexCover,
    DominatingSet,
    IndependentDominatingSet,
    EdgeDominatingSet,
    OddCycleTransversal,
    IndependentOddCycleTransversal,
    MaxCut,
    ListColouring,
    BModifiedListColouring,
    EdgeSteinerTree,
    NodeSteinerTree,
    EdgeMultiwayCut,
    NodeMultiwayCut,
    DisjointPaths,
    InducedDisjointPaths,
    DiameterRadius,
    NaeSat,
}

/// The kind of auxiliary input a problem needs next to its graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InstanceKind {
    Graph,
    Terminals,
    Pairs,
    Lists,
    Formula,
}

const TABLE: [(Problem, &str, InstanceKind); 18] = {
    use InstanceKind as K;
    use Problem::*;
    [
        (IndependentSet, "mis", K::Graph),
        (VertexCover, "vc", K::Graph),
        (DominatingSet, "ds", K::Graph),
        (IndependentDominatingSet, "ids", K::Graph),
        (EdgeDominatingSet, "eds", K::Graph),
        (OddCycleTransversal, "oct", K::Graph),
        (IndependentOddCycleTransversal, "ioct", K::Graph),
        (MaxCut, "maxcut", K::Graph),
        (ListColouring, "list-colouring", K::Lists),
        (BModifiedListColouring, "b-list-colouring", K::Lists),
        (EdgeSteinerTree, "edge-steiner", K::Terminals),
        (NodeSteinerTree, "node-steiner", K::Terminals),
        (EdgeMultiwayCut, "edge-multiway-cut", K::Terminals),
        (NodeMultiwayCut, "node-multiway-cut", K::Terminals),
        (DisjointPaths, "disjoint-paths", K::Pairs),
        (InducedDisjointPaths, "induced-disjoint-paths", K::Pairs),
        (DiameterRadius, "diameter", K::Graph),
        (NaeSat, "nae-3sat", K::Formula),
    ]
};

impl Problem {
    pub const ALL: [Problem; 18] = {
        let mut all = [Problem::IndependentSet; 18];
        let mut i = 0;
        while i < 18 {
            all[i] = TABLE[i].0;
            i += 1;
        }
        all
    };

    pub fn name(self) -> &'static str {
        TABLE.iter().find(|e| e.0 == self).unwrap().1
    }

    pub fn instance_kind(self) -> InstanceKind {
        TABLE.iter().find(|e| e.0 == self).unwrap().2
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Problem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TABLE
            .iter()
            .find(|e| e.1 == s)
            .map(|e| e.0)
            .ok_or_else(|| Error::Invalid(alloc::format!("unknown problem `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProblemInstance {
    Graph(Graph),
    Terminals(Graph, Vec<usize>),
    Pairs(Graph, Vec<(usize, usize)>),
    Lists(Graph, ListAssignment),
    Formula(CnfFormula),
    /// Steiner tree decision instance `(G, T, k)`.
    SteinerBudget {
        graph: Graph,
        terminals: Vec<usize>,
        k: i64,
    },
}

impl ProblemInstance {
    pub fn graph(&self) -> Option<&Graph> {
        match self {
            ProblemInstance::Graph(g)
            | ProblemInstance::Terminals(g, _)
            | ProblemInstance::Pairs(g, _)
            | ProblemInstance::Lists(g, _)
            | ProblemInstance::SteinerBudget { graph: g, .. } => Some(g),
            ProblemInstance::Formula(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Optimum(OptResult),
    Colouring(Option<Vec<u32>>),
    Paths(Option<Vec<Vec<usize>>>),
    Assignment(Option<Vec<bool>>),
    DiameterRadius(usize, usize),
    Decision(bool),
}

fn mismatch(p: Problem) -> Error {
    Error::Invalid(alloc::format!("problem {p} needs a {:?} instance", p.instance_kind()))
}

pub fn solve(p: Problem, inst: &ProblemInstance, budget: &OracleBudget) -> Result<Solution> {
    use Problem::*;
    use ProblemInstance as I;
    Ok(match (p, inst) {
        (IndependentSet, I::Graph(g)) => Solution::Optimum(max_independent_set(g, budget)?),
        (VertexCover, I::Graph(g)) => Solution::Optimum(min_vertex_cover(g, budget)?),
        (DominatingSet, I::Graph(g)) => Solution::Optimum(min_dominating_set(g, DominationVariant::Plain, budget)?),
        (IndependentDominatingSet, I::Graph(g)) => {
            Solution::Optimum(min_dominating_set(g, DominationVariant::Independent, budget)?)
        }
        (EdgeDominatingSet, I::Graph(g)) => Solution::Optimum(min_dominating_set(g, DominationVariant::Edge, budget)?),
        (OddCycleTransversal, I::Graph(g)) => Solution::Optimum(min_odd_cycle_transversal(g, false, budget)?),
        (IndependentOddCycleTransversal, I::Graph(g)) => Solution::Optimum(min_odd_cycle_transversal(g, true, budget)?),
        (MaxCut, I::Graph(g)) => Solution::Optimum(max_cut(g, budget)?),
        (ListColouring, I::Lists(g, l)) => Solution::Colouring(list_colouring(g, l)?),
        (BModifiedListColouring, I::Lists(g, l)) => Solution::Decision(b_modified_list_colouring(g, l)?),
        (EdgeSteinerTree, I::Terminals(g, t)) => Solution::Optimum(steiner_tree(g, t, Mode::Edge, budget)?),
        (NodeSteinerTree, I::Terminals(g, t)) => Solution::Optimum(steiner_tree(g, t, Mode::Node, budget)?),
        (EdgeMultiwayCut, I::Terminals(g, t)) => Solution::Optimum(multiway_cut(g, t, Mode::Edge, budget)?),
        (NodeMultiwayCut, I::Terminals(g, t)) => Solution::Optimum(multiway_cut(g, t, Mode::Node, budget)?),
        (DisjointPaths, I::Pairs(g, pairs)) => Solution::Paths(disjoint_paths(g, pairs, false, budget)?),
        (InducedDisjointPaths, I::Pairs(g, pairs)) => Solution::Paths(disjoint_paths(g, pairs, true, budget)?),
        (DiameterRadius, I::Graph(g)) => {
            let (d, r) = diameter_radius(g)?;
            Solution::DiameterRadius(d, r)
        }
        (NaeSat, I::Formula(f)) => Solution::Assignment(nae_3sat(f, budget)?),
        _ => return Err(mismatch(p)),
    })
}

/// Re-validates `sol` against the problem definition. Certificates are
/// checked directly; answers without a certificate ("no colouring",
/// diameter values, decisions) are compared with a fresh solve.
pub fn check_solution(p: Problem, inst: &ProblemInstance, sol: &Solution, budget: &OracleBudget) -> Result<bool> {
    use Certificate as C;
    use Problem::*;
    use ProblemInstance as I;
    let ok = match (p, inst, sol) {
        (IndependentSet, I::Graph(g), Solution::Optimum(r)) => {
            matches!(&r.certificate, C::Vertices(s) if s.len() == r.value && check::is_independent_set(g, s))
        }
        (VertexCover, I::Graph(g), Solution::Optimum(r)) => {
            matches!(&r.certificate, C::Vertices(s) if s.len() == r.value && check::is_vertex_cover(g, s))
        }
        (DominatingSet, I::Graph(g), Solution::Optimum(r)) => check::validate(g, r, DominationVariant::Plain),
        (IndependentDominatingSet, I::Graph(g), Solution::Optimum(r)) => {
            check::validate(g, r, DominationVariant::Independent)
        }
        (EdgeDominatingSet, I::Graph(g), Solution::Optimum(r)) => check::validate(g, r, DominationVariant::Edge),
        (OddCycleTransversal | IndependentOddCycleTransversal, I::Graph(g), Solution::Optimum(r)) => {
            matches!(&r.certificate, C::Vertices(s) if s.len() == r.value
                && check::is_odd_cycle_transversal(g, s)
                && (p == OddCycleTransversal || check::is_independent_set(g, s)))
        }
        (MaxCut, I::Graph(g), Solution::Optimum(r)) => {
            matches!(&r.certificate, C::Side(s) if check::cut_size(g, s) == Some(r.value))
        }
        (EdgeSteinerTree, I::Terminals(g, t), Solution::Optimum(r)) => check::validate_steiner(g, t, r, Mode::Edge),
        (NodeSteinerTree, I::Terminals(g, t), Solution::Optimum(r)) => check::validate_steiner(g, t, r, Mode::Node),
        (EdgeMultiwayCut, I::Terminals(g, t), Solution::Optimum(r)) => {
            matches!(&r.certificate, C::Edges(e) if e.len() == r.value && check::is_edge_multiway_cut(g, t, e))
        }
        (NodeMultiwayCut, I::Terminals(g, t), Solution::Optimum(r)) => {
            matches!(&r.certificate, C::Vertices(s) if s.len() == r.value && check::is_node_multiway_cut(g, t, s))
        }
        (ListColouring, I::Lists(g, l), Solution::Colouring(Some(c))) => check::respects_lists(g, l.lists(), c),
        (DisjointPaths | InducedDisjointPaths, I::Pairs(g, pairs), Solution::Paths(Some(paths))) => {
            check::are_disjoint_paths(g, pairs, paths, p == InducedDisjointPaths)
        }
        (NaeSat, I::Formula(f), Solution::Assignment(Some(a))) => f.nae_satisfied_by(a),
        (
            ListColouring | DisjointPaths | InducedDisjointPaths | NaeSat | BModifiedListColouring | DiameterRadius,
            _,
            Solution::Colouring(None)
            | Solution::Paths(None)
            | Solution::Assignment(None)
            | Solution::Decision(_)
            | Solution::DiameterRadius(..),
        ) => solve(p, inst, budget)? == *sol,
        _ => return Err(mismatch(p)),
    };
    Ok(ok)
}

/// One-line description of a problem, for help text.
pub fn describe(p: Problem) -> String {
    use Problem::*;
    let s = match p {
        IndependentSet => "maximum independent set",
        VertexCover => "minimum vertex cover",
        DominatingSet => "minimum dominating set",
        IndependentDominatingSet => "minimum independent dominating set",
        EdgeDominatingSet => "minimum edge dominating set",
        OddCycleTransversal => "minimum odd cycle transversal",
        IndependentOddCycleTransversal => "minimum independent odd cycle transversal",
        MaxCut => "maximum cut",
        ListColouring => "list colouring",
        BModifiedListColouring => "list colouring with a component from the cycle-plus-pendant class",
        EdgeSteinerTree => "Steiner tree, counting edges",
        NodeSteinerTree => "Steiner tree, counting vertices",
        EdgeMultiwayCut => "edge multiway cut",
        NodeMultiwayCut => "node multiway cut",
        DisjointPaths => "vertex-disjoint paths",
        InducedDisjointPaths => "induced disjoint paths",
        DiameterRadius => "diameter and radius",
        NaeSat => "not-all-equal 3-SAT",
    };
    s.into()
}
