//! Three-literal CNF formulas and not-all-equal satisfiability.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::OracleBudget;
use crate::error::{Error, Result};

/// DIMACS-style literal: `+i` is variable `i` (1-based), `-i` its negation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal(i32);

impl Literal {
    pub fn from_dimacs(x: i32) -> Result<Self> {
        if x == 0 {
            return Err(Error::Invalid("literal 0".into()));
        }
        Ok(Literal(x))
    }

    /// Literal of the 0-based variable `var`.
    pub fn new(var: usize, negated: bool) -> Self {
        let x = var as i32 + 1;
        Literal(if negated { -x } else { x })
    }

    pub fn dimacs(self) -> i32 {
        self.0
    }

    /// 0-based variable index.
    pub fn var(self) -> usize {
        self.0.unsigned_abs() as usize - 1
    }

    pub fn is_negated(self) -> bool {
        self.0 < 0
    }

    pub fn eval(self, assignment: &[bool]) -> bool {
        assignment[self.var()] != self.is_negated()
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CnfFormula {
    n_vars: usize,
    clauses: Vec<[Literal; 3]>,
}

impl CnfFormula {
    pub fn new(n_vars: usize, clauses: Vec<[Literal; 3]>) -> Result<Self> {
        for c in &clauses {
            for l in c {
                if l.var() >= n_vars {
                    return Err(Error::Invalid(alloc::format!(
                        "literal {l} refers past {n_vars} variables"
                    )));
                }
            }
        }
        Ok(CnfFormula { n_vars, clauses })
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn clauses(&self) -> &[[Literal; 3]] {
        &self.clauses
    }

    /// Occurrences of each literal, indexed `2 * var + negated`.
    pub fn occurrences(&self) -> Vec<usize> {
        let mut occ = vec![0; 2 * self.n_vars];
        for l in self.clauses.iter().flatten() {
            occ[2 * l.var() + l.is_negated() as usize] += 1;
        }
        occ
    }

    /// Every clause has a true and a false literal under `assignment`.
    pub fn nae_satisfied_by(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.n_vars
            && self.clauses.iter().all(|c| {
                let t = c.iter().filter(|l| l.eval(assignment)).count();
                t == 1 || t == 2
            })
    }
}

/// A not-all-equal satisfying assignment, found by trying all `2^n` in
/// binary order with variable 1 as the lowest bit.
pub fn nae_3sat(phi: &CnfFormula, budget: &OracleBudget) -> Result<Option<Vec<bool>>> {
    let n = phi.n_vars();
    if n > budget.max_variables {
        return Err(Error::TooLarge {
            n,
            cap: budget.max_variables,
        });
    }
    let mut a = vec![false; n];
    for bits in 0u64..1 << n {
        for (i, x) in a.iter_mut().enumerate() {
            *x = bits >> i & 1 == 1;
        }
        if phi.nae_satisfied_by(&a) {
            return Ok(Some(a));
        }
    }
    Ok(None)
}
