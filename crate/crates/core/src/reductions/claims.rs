//! The subdivision and gadget claims, each checked by running exact oracles
//! on both sides of the transformation.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;
use core::time::Duration;

use super::digest;
use super::gadgets::{nae_to_oct_gadget, steiner_subcubic_expand};
use crate::error::{Error, Result};
use crate::graph::{k_subdivide, Graph};
use crate::oracles::{self, DominationVariant, Mode, OracleBudget, ProblemInstance};
use crate::width::{pathwidth, treewidth, WidthBudget};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClaimId {
    PwSubdiv,
    TwSubdiv,
    Is2Sub,
    Vc2Sub,
    Ds3Sub,
    Ids3Sub,
    Eds3Sub,
    Oct2Sub,
    Ioct2SubGadget,
    Maxcut2Sub,
    Est1Sub,
    Emwc1Sub,
    Nmwc1Sub,
    Dp1Sub,
    Idp1Sub,
    Diam2Sub,
    NaeOctGadget,
    SteinerSubcubic,
}

const CLAIMS: [(ClaimId, &str, &str); 18] = {
    use ClaimId::*;
    [
        (PwSubdiv, "PW_SUBDIV", "for subcubic B, pw(B^2) = pw(B^5)"),
        (TwSubdiv, "TW_SUBDIV", "tw(G) = tw(G^1)"),
        (Is2Sub, "IS_2SUB", "alpha(G^2) = alpha(G) + |E|"),
        (Vc2Sub, "VC_2SUB", "vc(G^2) = vc(G) + |E|"),
        (Ds3Sub, "DS_3SUB", "gamma(G^3) = gamma(G) + |E|"),
        (Ids3Sub, "IDS_3SUB", "i(G^3) = i(G) + |E|"),
        (Eds3Sub, "EDS_3SUB", "eds(G^3) = eds(G) + |E|"),
        (Oct2Sub, "OCT_2SUB", "oct(G^2) = oct(G)"),
        (
            Ioct2SubGadget,
            "IOCT_2SUB_GADGET",
            "ioct(G^2) = ioct(G) for NAE-3SAT gadgets G",
        ),
        (Maxcut2Sub, "MAXCUT_2SUB", "mc(G^2) = mc(G) + 2|E|"),
        (Est1Sub, "EST_1SUB", "st(G^1, T) = 2 st(G, T)"),
        (Emwc1Sub, "EMWC_1SUB", "edge multiway cut of (G^1, T) = that of (G, T)"),
        (
            Nmwc1Sub,
            "NMWC_1SUB",
            "node multiway cut of (G^1, T) = that of (G, T), T independent",
        ),
        (
            Dp1Sub,
            "DP_1SUB",
            "for subcubic G, disjoint paths in G iff disjoint paths in G^1",
        ),
        (
            Idp1Sub,
            "IDP_1SUB",
            "for subcubic G, disjoint paths in G iff induced disjoint paths in G^1",
        ),
        (Diam2Sub, "DIAM_2SUB", "3 diam(G) <= diam(G^2) <= 3 diam(G) + 2"),
        (
            NaeOctGadget,
            "NAE_OCT_GADGET",
            "NAE-satisfiable iff the gadget has an (independent) OCT of size m",
        ),
        (
            SteinerSubcubic,
            "STEINER_SUBCUBIC",
            "st(G, T) <= k iff st(G', T') <= 4n^2 k + 2n^2",
        ),
    ]
};

impl ClaimId {
    pub const ALL: [ClaimId; 18] = {
        let mut all = [ClaimId::PwSubdiv; 18];
        let mut i = 0;
        while i < 18 {
            all[i] = CLAIMS[i].0;
            i += 1;
        }
        all
    };

    fn entry(self) -> &'static (ClaimId, &'static str, &'static str) {
        CLAIMS.iter().find(|e| e.0 == self).unwrap()
    }

    pub fn name(self) -> &'static str {
        self.entry().1
    }

    /// The statement being checked.
    pub fn statement(self) -> &'static str {
        self.entry().2
    }

    /// How many times each edge is subdivided, for the subdivision claims.
    pub fn subdivisions(self) -> Option<usize> {
        use ClaimId::*;
        match self {
            TwSubdiv | Est1Sub | Emwc1Sub | Nmwc1Sub | Dp1Sub | Idp1Sub => Some(1),
            Is2Sub | Vc2Sub | Oct2Sub | Ioct2SubGadget | Maxcut2Sub | Diam2Sub => Some(2),
            Ds3Sub | Ids3Sub | Eds3Sub => Some(3),
            // B^2 against (B^2)^1.
            PwSubdiv => Some(1),
            NaeOctGadget | SteinerSubcubic => None,
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClaimId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CLAIMS
            .iter()
            .find(|e| e.1.eq_ignore_ascii_case(s))
            .map(|e| e.0)
            .ok_or_else(|| Error::Invalid(format!("unknown claim `{s}`")))
    }
}

/// One side of a claim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClaimValue {
    Int(i64),
    Bool(bool),
    Bools(Vec<bool>),
    /// The optimum does not exist, e.g. no independent odd cycle transversal.
    Infeasible,
}

impl ClaimValue {
    pub fn as_int(&self) -> Option<i64> {
        match self {
            ClaimValue::Int(x) => Some(*x),
            _ => None,
        }
    }

    fn bools(&self) -> Option<Vec<bool>> {
        match self {
            ClaimValue::Bool(b) => Some(vec![*b]),
            ClaimValue::Bools(b) => Some(b.clone()),
            _ => None,
        }
    }
}

impl fmt::Display for ClaimValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yn = |b: bool| if b { "yes" } else { "no" };
        match self {
            ClaimValue::Int(x) => write!(f, "{x}"),
            ClaimValue::Bool(b) => f.write_str(yn(*b)),
            ClaimValue::Bools(bs) => {
                for (i, &b) in bs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    f.write_str(yn(b))?;
                }
                Ok(())
            }
            ClaimValue::Infeasible => f.write_str("infeasible"),
        }
    }
}

/// Predicted relation between the two sides.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Equal,
    Plus(i64),
    Times(i64),
    /// `factor * lhs <= rhs <= factor * lhs + slack`.
    Window {
        factor: i64,
        slack: i64,
    },
    /// Every boolean on either side is the same.
    Equivalent,
}

impl Relation {
    pub fn holds(&self, lhs: &ClaimValue, rhs: &ClaimValue) -> bool {
        use ClaimValue::*;
        match (*self, lhs, rhs) {
            (Relation::Equal, l, r) => l == r,
            (_, Infeasible, Infeasible) => !matches!(self, Relation::Equivalent),
            (Relation::Plus(c), Int(l), Int(r)) => *r == l + c,
            (Relation::Times(c), Int(l), Int(r)) => *r == c * l,
            (Relation::Window { factor, slack }, Int(l), Int(r)) => factor * l <= *r && *r <= factor * l + slack,
            (Relation::Equivalent, l, r) => match (l.bools(), r.bools()) {
                (Some(a), Some(b)) => {
                    let first = a.first().or(b.first()).copied();
                    a.iter().chain(&b).all(|&x| Some(x) == first)
                }
                _ => false,
            },
            _ => false,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Relation::Equal => f.write_str("rhs = lhs"),
            Relation::Plus(c) => write!(f, "rhs = lhs + {c}"),
            Relation::Times(c) => write!(f, "rhs = {c} * lhs"),
            Relation::Window { factor, slack } => {
                write!(f, "{factor} * lhs <= rhs <= {factor} * lhs + {slack}")
            }
            Relation::Equivalent => f.write_str("rhs <=> lhs"),
        }
    }
}

/// The two instances a claim compares.
#[derive(Clone, Debug)]
pub struct ClaimInstance {
    pub left: ProblemInstance,
    pub right: ProblemInstance,
    pub relation: Relation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimReport {
    pub claim: ClaimId,
    /// Digest of the base instance, see [`digest`].
    pub digest: u64,
    pub lhs: ClaimValue,
    pub rhs: ClaimValue,
    pub relation: Relation,
    pub pass: bool,
    /// Wall-clock time, filled in by callers that can measure it.
    pub runtime: Option<Duration>,
    pub note: Option<String>,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ClaimBudget {
    pub oracle: OracleBudget,
    pub width: WidthBudget,
}

fn expect_graph(claim: ClaimId, base: &ProblemInstance) -> Result<&Graph> {
    match base {
        ProblemInstance::Graph(g) => Ok(g),
        _ => Err(Error::Precondition(format!("{claim} takes a graph"))),
    }
}

fn expect_terminals(claim: ClaimId, base: &ProblemInstance) -> Result<(&Graph, &[usize])> {
    match base {
        ProblemInstance::Terminals(g, t) => Ok((g, t)),
        _ => Err(Error::Precondition(format!("{claim} takes a graph with terminals"))),
    }
}

fn expect_pairs(claim: ClaimId, base: &ProblemInstance) -> Result<(&Graph, &[(usize, usize)])> {
    match base {
        ProblemInstance::Pairs(g, p) => Ok((g, p)),
        _ => Err(Error::Precondition(format!(
            "{claim} takes a graph with terminal pairs"
        ))),
    }
}

fn expect_formula(claim: ClaimId, base: &ProblemInstance) -> Result<&oracles::CnfFormula> {
    match base {
        ProblemInstance::Formula(f) => Ok(f),
        _ => Err(Error::Precondition(format!("{claim} takes a formula"))),
    }
}

/// Builds both sides of `claim` from `base`, checking its preconditions.
pub fn build_claim_instance(claim: ClaimId, base: &ProblemInstance) -> Result<ClaimInstance> {
    use ClaimId::*;
    use ProblemInstance as I;
    let graph_pair = |left: Graph, k: usize, relation| {
        let right = k_subdivide(&left, k);
        ClaimInstance {
            left: I::Graph(left),
            right: I::Graph(right),
            relation,
        }
    };
    Ok(match claim {
        PwSubdiv => {
            let b = expect_graph(claim, base)?;
            if !b.is_subcubic() {
                return Err(Error::NotSubcubic);
            }
            graph_pair(k_subdivide(b, 2), 1, Relation::Equal)
        }
        TwSubdiv => graph_pair(expect_graph(claim, base)?.clone(), 1, Relation::Equal),
        Is2Sub | Vc2Sub => {
            let g = expect_graph(claim, base)?;
            graph_pair(g.clone(), 2, Relation::Plus(g.m() as i64))
        }
        Ds3Sub | Ids3Sub | Eds3Sub => {
            let g = expect_graph(claim, base)?;
            graph_pair(g.clone(), 3, Relation::Plus(g.m() as i64))
        }
        Oct2Sub => graph_pair(expect_graph(claim, base)?.clone(), 2, Relation::Equal),
        Maxcut2Sub => {
            let g = expect_graph(claim, base)?;
            graph_pair(g.clone(), 2, Relation::Plus(2 * g.m() as i64))
        }
        Diam2Sub => {
            let g = expect_graph(claim, base)?;
            if g.n() == 0 || !g.is_connected() {
                return Err(Error::Disconnected);
            }
            graph_pair(g.clone(), 2, Relation::Window { factor: 3, slack: 2 })
        }
        Ioct2SubGadget => {
            let (g, _) = nae_to_oct_gadget(expect_formula(claim, base)?)?;
            graph_pair(g, 2, Relation::Equal)
        }
        NaeOctGadget => {
            let phi = expect_formula(claim, base)?;
            let (g, _) = nae_to_oct_gadget(phi)?;
            ClaimInstance {
                left: base.clone(),
                right: I::Graph(g),
                relation: Relation::Equivalent,
            }
        }
        Est1Sub | Emwc1Sub | Nmwc1Sub => {
            let (g, t) = expect_terminals(claim, base)?;
            oracles::TerminalSpec::Set(t.to_vec()).validate(g)?;
            if claim != Est1Sub && t.len() < 2 {
                return Err(Error::Precondition("multiway cut needs two terminals".into()));
            }
            if claim == Nmwc1Sub && !oracles::check::is_independent_set(g, t) {
                return Err(Error::Precondition(
                    "node multiway cut terminals must be pairwise non-adjacent".into(),
                ));
            }
            ClaimInstance {
                left: base.clone(),
                right: I::Terminals(k_subdivide(g, 1), t.to_vec()),
                relation: if claim == Est1Sub {
                    Relation::Times(2)
                } else {
                    Relation::Equal
                },
            }
        }
        Dp1Sub | Idp1Sub => {
            let (g, p) = expect_pairs(claim, base)?;
            if !g.is_subcubic() {
                return Err(Error::NotSubcubic);
            }
            oracles::TerminalSpec::Pairs(p.to_vec()).validate(g)?;
            ClaimInstance {
                left: base.clone(),
                right: I::Pairs(k_subdivide(g, 1), p.to_vec()),
                relation: Relation::Equivalent,
            }
        }
        SteinerSubcubic => {
            let ProblemInstance::SteinerBudget { graph, terminals, k } = base else {
                return Err(Error::Precondition(format!(
                    "{claim} takes a Steiner instance with a budget"
                )));
            };
            let e = steiner_subcubic_expand(graph, terminals, *k)?;
            ClaimInstance {
                left: base.clone(),
                right: I::SteinerBudget {
                    graph: e.graph,
                    terminals: e.terminals,
                    k: e.k,
                },
                relation: Relation::Equivalent,
            }
        }
    })
}

fn int(x: usize) -> ClaimValue {
    ClaimValue::Int(x as i64)
}

fn optional(r: Result<oracles::OptResult>) -> Result<ClaimValue> {
    match r {
        Ok(r) => Ok(int(r.value)),
        Err(Error::Infeasible(_)) => Ok(ClaimValue::Infeasible),
        Err(e) => Err(e),
    }
}

fn steiner_within(g: &Graph, t: &[usize], k: i64, b: &OracleBudget) -> Result<bool> {
    match oracles::steiner_tree(g, t, Mode::Edge, b) {
        Ok(r) => Ok(r.value as i64 <= k),
        Err(Error::Infeasible(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

/// The quantity `claim` looks at on one side; `right` selects the
/// transformed instance where the two sides use different problems.
fn evaluate(claim: ClaimId, inst: &ProblemInstance, right: bool, b: &ClaimBudget) -> Result<ClaimValue> {
    use ClaimId::*;
    use ProblemInstance as I;
    let ob = &b.oracle;
    Ok(match (claim, inst) {
        (PwSubdiv, I::Graph(g)) => ClaimValue::Int(pathwidth(g, &b.width)?.0 as i64),
        (TwSubdiv, I::Graph(g)) => ClaimValue::Int(treewidth(g, &b.width)?.0 as i64),
        (Is2Sub, I::Graph(g)) => int(oracles::max_independent_set(g, ob)?.value),
        (Vc2Sub, I::Graph(g)) => int(oracles::min_vertex_cover(g, ob)?.value),
        (Ds3Sub, I::Graph(g)) => int(oracles::min_dominating_set(g, DominationVariant::Plain, ob)?.value),
        (Ids3Sub, I::Graph(g)) => int(oracles::min_dominating_set(g, DominationVariant::Independent, ob)?.value),
        (Eds3Sub, I::Graph(g)) => int(oracles::min_dominating_set(g, DominationVariant::Edge, ob)?.value),
        (Oct2Sub, I::Graph(g)) => int(oracles::min_odd_cycle_transversal(g, false, ob)?.value),
        (Ioct2SubGadget, I::Graph(g)) => optional(oracles::min_odd_cycle_transversal(g, true, ob))?,
        (Maxcut2Sub, I::Graph(g)) => int(oracles::max_cut(g, ob)?.value),
        (Diam2Sub, I::Graph(g)) => int(oracles::diameter_radius(g)?.0),
        (Est1Sub, I::Terminals(g, t)) => optional(oracles::steiner_tree(g, t, Mode::Edge, ob))?,
        (Emwc1Sub, I::Terminals(g, t)) => optional(oracles::multiway_cut(g, t, Mode::Edge, ob))?,
        (Nmwc1Sub, I::Terminals(g, t)) => optional(oracles::multiway_cut(g, t, Mode::Node, ob))?,
        (Dp1Sub, I::Pairs(g, p)) => ClaimValue::Bool(oracles::disjoint_paths(g, p, false, ob)?.is_some()),
        (Idp1Sub, I::Pairs(g, p)) => ClaimValue::Bool(oracles::disjoint_paths(g, p, right, ob)?.is_some()),
        (NaeOctGadget, I::Formula(phi)) => ClaimValue::Bool(oracles::nae_3sat(phi, ob)?.is_some()),
        (SteinerSubcubic, I::SteinerBudget { graph, terminals, k }) => {
            ClaimValue::Bool(steiner_within(graph, terminals, *k, ob)?)
        }
        _ => unreachable!("claim instance built by build_claim_instance"),
    })
}

/// Runs the oracles on both sides of `claim` for `base` and compares.
///
/// `STEINER_SUBCUBIC` also accepts a plain terminal instance, in which case
/// it is checked at the budgets `opt - 1`, `opt` and `opt + 1`.
pub fn verify_claim(claim: ClaimId, base: &ProblemInstance, budget: &ClaimBudget) -> Result<ClaimReport> {
    let report = |lhs, rhs, relation: Relation, note| {
        let pass = relation.holds(&lhs, &rhs);
        ClaimReport {
            claim,
            digest: digest(base),
            lhs,
            rhs,
            relation,
            pass,
            runtime: None,
            note,
        }
    };
    match (claim, base) {
        (ClaimId::SteinerSubcubic, ProblemInstance::Terminals(g, t)) => {
            let opt = oracles::steiner_tree(g, t, Mode::Edge, &budget.oracle)?.value as i64;
            let (mut lhs, mut rhs) = (Vec::new(), Vec::new());
            for k in [opt - 1, opt, opt + 1] {
                let e = steiner_subcubic_expand(g, t, k)?;
                lhs.push(steiner_within(g, t, k, &budget.oracle)?);
                rhs.push(steiner_within(&e.graph, &e.terminals, e.k, &budget.oracle)?);
            }
            // Compared budget by budget: the three answers differ.
            Ok(report(
                ClaimValue::Bools(lhs),
                ClaimValue::Bools(rhs),
                Relation::Equal,
                Some(format!("k in {{{}, {}, {}}}", opt - 1, opt, opt + 1)),
            ))
        }
        (ClaimId::NaeOctGadget, _) => {
            let phi = expect_formula(claim, base)?;
            let (g, m) = nae_to_oct_gadget(phi)?;
            let nae = oracles::nae_3sat(phi, &budget.oracle)?.is_some();
            let oct = oracles::min_odd_cycle_transversal(&g, false, &budget.oracle)?.value;
            let ioct = optional(oracles::min_odd_cycle_transversal(&g, true, &budget.oracle))?;
            let rhs = vec![oct == m, ioct == int(m)];
            Ok(report(
                ClaimValue::Bool(nae),
                ClaimValue::Bools(rhs),
                Relation::Equivalent,
                Some(format!("m = {m}, oct = {oct}, ioct = {ioct}")),
            ))
        }
        _ => {
            let inst = build_claim_instance(claim, base)?;
            let lhs = evaluate(claim, &inst.left, false, budget)?;
            let rhs = evaluate(claim, &inst.right, true, budget)?;
            let note = match (claim, &lhs, &rhs) {
                (ClaimId::Diam2Sub, ClaimValue::Int(d), ClaimValue::Int(d2)) => Some(format!("offset {}", d2 - 3 * d)),
                _ => None,
            };
            Ok(report(lhs, rhs, inst.relation, note))
        }
    }
}
