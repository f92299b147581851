//! Minor containment for small patterns.
//!
//! The search assigns host vertices, one at a time, either to the branch
//! set of a pattern vertex or to the deleted pile. Partial assignments are
//! pruned when a branch set can no longer become connected through
//! unprocessed vertices, when a required pattern edge can no longer be
//! realised, or when too few vertices remain to fill the empty sets.
//! Pattern vertices with identical neighbourhoods are interchangeable, so
//! their branch sets are opened in index order only.

use serde::{Deserialize, Serialize};

use crate::budget::{Budget, BudgetExceeded};
use crate::graph::{Graph, VertexSet};
use crate::named::Named;

/// Branch sets of a minor model: `branch_sets[a]` realises pattern vertex
/// `a + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorWitness {
    pub branch_sets: Vec<Vec<usize>>,
}

impl MinorWitness {
    fn from_sets(sets: &[VertexSet]) -> Self {
        MinorWitness {
            branch_sets: sets.iter().map(|s| s.to_vec()).collect(),
        }
    }

    /// Checks the witness against `host` and `pattern`; returns a reason on
    /// failure.
    pub fn validate(&self, host: &Graph, pattern: &Graph) -> Result<(), String> {
        if self.branch_sets.len() != pattern.n() {
            return Err(format!(
                "{} branch sets for a pattern on {} vertices",
                self.branch_sets.len(),
                pattern.n()
            ));
        }
        let mut used = VertexSet::EMPTY;
        let mut sets = Vec::new();
        for (a, list) in self.branch_sets.iter().enumerate() {
            if list.is_empty() {
                return Err(format!("branch set {} is empty", a + 1));
            }
            if let Some(&v) = list.iter().find(|&&v| v == 0 || v > host.n()) {
                return Err(format!("vertex {v} not in host"));
            }
            let set: VertexSet = list.iter().copied().collect();
            if set.len() != list.len() || !set.intersection(used).is_empty() {
                return Err(format!("branch set {} overlaps or repeats", a + 1));
            }
            if host.reach(set.first().unwrap(), set) != set {
                return Err(format!("branch set {} is not connected", a + 1));
            }
            used = used.union(set);
            sets.push(set);
        }
        for &(a, b) in pattern.edges() {
            if !touches(host, sets[a - 1], sets[b - 1]) {
                return Err(format!("no host edge realises pattern edge {a}-{b}"));
            }
        }
        Ok(())
    }
}

fn touches(host: &Graph, x: VertexSet, y: VertexSet) -> bool {
    x.iter()
        .any(|v| !host.neighbors(v).intersection(y).is_empty())
}

struct Search<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    order: Vec<usize>,
    /// For each pattern vertex, twins with smaller index.
    earlier_twins: Vec<Vec<usize>>,
    pattern_edges: Vec<(usize, usize)>,
    budget: &'a Budget,
}

impl<'a> Search<'a> {
    fn new(host: &'a Graph, pattern: &'a Graph, budget: &'a Budget) -> Self {
        let mut order: Vec<usize> = (1..=host.n()).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(host.degree(v)), v));
        let p = pattern.n();
        let earlier_twins = (1..=p)
            .map(|b| {
                (1..b)
                    .filter(|&a| {
                        let na = pattern.neighbors(a).difference(VertexSet::singleton(b));
                        let nb = pattern.neighbors(b).difference(VertexSet::singleton(a));
                        na == nb
                    })
                    .map(|a| a - 1)
                    .collect()
            })
            .collect();
        let pattern_edges = pattern
            .edges()
            .iter()
            .map(|&(a, b)| (a - 1, b - 1))
            .collect();
        Search {
            host,
            pattern,
            order,
            earlier_twins,
            pattern_edges,
            budget,
        }
    }

    fn run(&self) -> Result<Option<MinorWitness>, BudgetExceeded> {
        if self.pattern.n() > self.host.n() || self.pattern.m() > self.host.m() {
            return Ok(None);
        }
        let mut sets = vec![VertexSet::EMPTY; self.pattern.n()];
        let found = self.step(0, &mut sets, self.host.vertices())?;
        Ok(found.map(|sets| MinorWitness::from_sets(&sets)))
    }

    fn complete(&self, sets: &[VertexSet]) -> bool {
        sets.iter()
            .all(|s| !s.is_empty() && self.host.reach(s.first().unwrap(), *s) == *s)
            && self
                .pattern_edges
                .iter()
                .all(|&(a, b)| touches(self.host, sets[a], sets[b]))
    }

    fn viable(&self, sets: &[VertexSet], open: VertexSet) -> bool {
        let empty = sets.iter().filter(|s| s.is_empty()).count();
        if empty > open.len() {
            return false;
        }
        for s in sets.iter().filter(|s| !s.is_empty()) {
            let within = s.union(open);
            if !s
                .difference(self.host.reach(s.first().unwrap(), within))
                .is_empty()
            {
                return false;
            }
        }
        self.pattern_edges
            .iter()
            .all(|&(a, b)| touches(self.host, sets[a].union(open), sets[b].union(open)))
    }

    fn step(
        &self,
        depth: usize,
        sets: &mut Vec<VertexSet>,
        open: VertexSet,
    ) -> Result<Option<Vec<VertexSet>>, BudgetExceeded> {
        self.budget.tick()?;
        if self.complete(sets) {
            return Ok(Some(sets.clone()));
        }
        if depth == self.order.len() {
            return Ok(None);
        }
        let v = self.order[depth];
        let mut rest = open;
        rest.remove(v);
        for a in 0..sets.len() {
            if sets[a].is_empty() && self.earlier_twins[a].iter().any(|&t| sets[t].is_empty()) {
                continue;
            }
            sets[a].insert(v);
            if self.viable(sets, rest) {
                if let Some(found) = self.step(depth + 1, sets, rest)? {
                    return Ok(Some(found));
                }
            }
            sets[a].remove(v);
        }
        if self.viable(sets, rest) {
            return self.step(depth + 1, sets, rest);
        }
        Ok(None)
    }
}

/// Exhaustive minor test under a node budget. `Ok(None)` means the pattern
/// is not a minor; an exhausted budget is reported as an error, never as
/// `None`.
pub fn find_minor(
    host: &Graph,
    pattern: &Graph,
    budget: &Budget,
) -> Result<Option<MinorWitness>, BudgetExceeded> {
    Search::new(host, pattern, budget).run()
}

/// Exhaustive minor test without a budget.
pub fn has_minor(host: &Graph, pattern: &Graph) -> Option<MinorWitness> {
    find_minor(host, pattern, &Budget::unlimited()).expect("unlimited budget")
}

/// Which of `K4`, `K5 - e`, `K5` are excluded as minors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorProfile {
    pub k4_free: bool,
    pub k5e_free: bool,
    pub k5_free: bool,
}

pub fn k4() -> Graph {
    Named::Complete(4).build().unwrap()
}

pub fn k5() -> Graph {
    Named::Complete(5).build().unwrap()
}

pub fn k5_minus_edge() -> Graph {
    Named::CompleteMinusEdge(5).build().unwrap()
}

/// Computes the profile, skipping searches implied by earlier answers.
pub fn minor_profile_with_budget(
    g: &Graph,
    budget: &Budget,
) -> Result<MinorProfile, BudgetExceeded> {
    if find_minor(g, &k4(), budget)?.is_none() {
        return Ok(MinorProfile {
            k4_free: true,
            k5e_free: true,
            k5_free: true,
        });
    }
    if find_minor(g, &k5_minus_edge(), budget)?.is_none() {
        return Ok(MinorProfile {
            k4_free: false,
            k5e_free: true,
            k5_free: true,
        });
    }
    Ok(MinorProfile {
        k4_free: false,
        k5e_free: false,
        k5_free: find_minor(g, &k5(), budget)?.is_none(),
    })
}

pub fn minor_profile(g: &Graph) -> MinorProfile {
    minor_profile_with_budget(g, &Budget::unlimited()).expect("unlimited budget")
}

/// A `K5` minor witness, if any.
pub fn k5_minor(g: &Graph, budget: &Budget) -> Result<Option<MinorWitness>, BudgetExceeded> {
    find_minor(g, &k5(), budget)
}
