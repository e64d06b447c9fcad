//! List colouring, and the ℬ-modified variant built on top of it.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pattern::b_member;

/// Admissible colours per vertex. Colours are positive integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ListAssignment {
    lists: Vec<Vec<u32>>,
}

impl ListAssignment {
    pub fn new(mut lists: Vec<Vec<u32>>) -> Result<Self> {
        for l in &mut lists {
            if l.contains(&0) {
                return Err(Error::Invalid("colours must be positive".into()));
            }
            l.sort_unstable();
            l.dedup();
        }
        Ok(ListAssignment { lists })
    }

    /// Every vertex gets `1..=k`.
    pub fn uniform(n: usize, k: u32) -> Self {
        ListAssignment {
            lists: vec![(1..=k).collect(); n],
        }
    }

    pub fn lists(&self) -> &[Vec<u32>] {
        &self.lists
    }

    pub fn get(&self, v: usize) -> &[u32] {
        &self.lists[v]
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }
}

struct Search<'a> {
    g: &'a Graph,
    domain: Vec<Vec<u32>>,
    colour: Vec<u32>,
    // (vertex, colour) pairs removed by forward checking, for undo.
    trail: Vec<(usize, u32)>,
}

impl Search<'_> {
    fn run(&mut self, left: usize) -> bool {
        if left == 0 {
            return true;
        }
        let v = (0..self.g.n())
            .filter(|&v| self.colour[v] == 0)
            .min_by_key(|&v| self.domain[v].len())
            .unwrap();
        for k in 0..self.domain[v].len() {
            let c = self.domain[v][k];
            let mark = self.trail.len();
            let mut wiped = false;
            for &w in self.g.neighbors(v) {
                if self.colour[w] != 0 {
                    continue;
                }
                if let Some(p) = self.domain[w].iter().position(|&x| x == c) {
                    self.domain[w].remove(p);
                    self.trail.push((w, c));
                    if self.domain[w].is_empty() {
                        wiped = true;
                        break;
                    }
                }
            }
            if !wiped {
                self.colour[v] = c;
                if self.run(left - 1) {
                    return true;
                }
                self.colour[v] = 0;
            }
            while self.trail.len() > mark {
                let (w, c) = self.trail.pop().unwrap();
                let p = self.domain[w].partition_point(|&x| x < c);
                self.domain[w].insert(p, c);
            }
        }
        false
    }
}

/// A colouring respecting `lists`, found by backtracking with forward
/// checking, or `None`.
pub fn list_colouring(g: &Graph, lists: &ListAssignment) -> Result<Option<Vec<u32>>> {
    if lists.len() != g.n() {
        return Err(Error::Invalid(alloc::format!(
            "{} lists for {} vertices",
            lists.len(),
            g.n()
        )));
    }
    if lists.lists.iter().any(Vec::is_empty) {
        return Ok(None);
    }
    let mut s = Search {
        g,
        domain: lists.lists.clone(),
        colour: vec![0; g.n()],
        trail: Vec::new(),
    };
    Ok(s.run(g.n()).then_some(s.colour))
}

/// Some component lies in ℬ and the whole graph has a colouring respecting
/// `lists`.
pub fn b_modified_list_colouring(g: &Graph, lists: &ListAssignment) -> Result<bool> {
    let has_b = g.components().iter().any(|c| b_member(&g.induced_subgraph(c)));
    Ok(has_b && list_colouring(g, lists)?.is_some())
}
