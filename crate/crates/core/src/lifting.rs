//! Constructive lifts behind the closure properties of normality.
//!
//! * Edge deletion: a point `(x, α)` of the lattice and cone of `G \ e0`
//!   extends to `(γ, x, α)` in the lattice and cone of `G`, where `γ` is
//!   squeezed between bounds read off the odd-set inequalities of the
//!   induced cycles through `e0` and fixed in parity by any cycle through
//!   `e0`.
//! * Clique sums along at most three vertices: decompositions of the two
//!   restrictions are classified by how each shore meets the shared clique,
//!   the class counts agree, and shores are paired class by class.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::budget::{Budget, BudgetExceeded};
use crate::cutlattice::{ConeOracle, CutError, FacetSystem, HomPoint, LatticeOracle};
use crate::graph::{CliqueSumSpec, Cycle, Graph, GraphError, VertexSet};
use crate::minors::{self, MinorWitness};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LiftError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Cut(#[from] CutError),
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
    #[error("graph has a K5 minor (branch sets {:?})", .0.branch_sets)]
    HasK5Minor(MinorWitness),
    #[error("point is not in the lattice of the edge-deleted graph")]
    NotInLattice,
    #[error("point is not in the cone of the edge-deleted graph")]
    NotInCone,
    #[error(
        "internal contradiction: no admissible value in [{lower}, {upper}] with parity {parity:?}"
    )]
    EmptyGammaRange {
        lower: i64,
        upper: i64,
        parity: Option<u8>,
    },
    #[error("decompositions have different lengths ({0} and {1})")]
    LengthMismatch(usize, usize),
    #[error("shared-edge aggregates differ: {0:?} vs {1:?}")]
    SharedAggregateMismatch(Vec<i64>, Vec<i64>),
    #[error("pattern counts differ: {0:?} vs {1:?}")]
    CountMismatch(Vec<usize>, Vec<usize>),
    #[error("shore vertex {vertex} outside 1..={n}")]
    ShoreVertex { vertex: usize, n: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, LiftError>;

/// Admissible range and parity for the coordinate restored at `e0`.
/// `None` bounds mean no induced cycle contributes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaBounds {
    pub x_max: Option<i64>,
    pub x_min: Option<i64>,
    pub lower: i64,
    pub upper: i64,
    pub parity: Option<u8>,
}

impl GammaBounds {
    /// Smallest admissible value.
    pub fn choose(&self) -> Option<i64> {
        let mut g = self.lower;
        if let Some(p) = self.parity {
            if g.rem_euclid(2) as u8 != p {
                g += 1;
            }
        }
        (g <= self.upper).then_some(g)
    }

    pub fn admissible(&self) -> Vec<i64> {
        (self.lower..=self.upper)
            .filter(|g| self.parity.map_or(true, |p| g.rem_euclid(2) as u8 == p))
            .collect()
    }
}

/// Precomputed data for lifting across the deletion of one edge.
pub struct DeletionLift {
    graph: Graph,
    e0: usize,
    /// `map[i]` is the index in `G \ e0` of edge `i` of `G`.
    map: Vec<Option<usize>>,
    through: Vec<Cycle>,
    lattice: LatticeOracle,
    cone: ConeOracle,
}

impl DeletionLift {
    pub fn new(g: &Graph, e0: usize) -> Result<Self> {
        Self::with_budget(g, e0, &Budget::unlimited())
    }

    pub fn with_budget(g: &Graph, e0: usize, budget: &Budget) -> Result<Self> {
        let (deleted, map) = g.delete_edge(e0)?;
        if let Some(w) = minors::k5_minor(g, budget)? {
            return Err(LiftError::HasK5Minor(w));
        }
        Ok(DeletionLift {
            graph: g.clone(),
            e0,
            map,
            through: g.cycles_through_edge(e0)?,
            lattice: LatticeOracle::new(&deleted),
            cone: ConeOracle::Facets(FacetSystem::from_graph_unchecked(&deleted)),
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Embeds `x` (on `G \ e0`) into `G` with `gamma` at `e0`.
    pub fn extend(&self, x: &[i64], gamma: i64) -> Vec<i64> {
        self.map.iter().map(|m| m.map_or(gamma, |j| x[j])).collect()
    }

    pub fn bounds(&self, x: &[i64], alpha: i64) -> Result<GammaBounds> {
        let m = self.graph.m() - 1;
        if x.len() != m {
            return Err(CutError::Dimension {
                expected: m,
                got: x.len(),
            }
            .into());
        }
        if alpha < 0 {
            return Err(CutError::NegativeDegree(alpha).into());
        }
        if !self.lattice.contains(x) {
            return Err(LiftError::NotInLattice);
        }
        if !self.cone.contains(&HomPoint::new(x.to_vec(), alpha)) {
            return Err(LiftError::NotInCone);
        }
        let full = self.extend(x, 0);
        let mut x_max: Option<i64> = None;
        let mut x_min: Option<i64> = None;
        for c in &self.through {
            let k = c.len();
            for mask in 1u64..(1 << k) {
                if mask.count_ones() % 2 == 0 {
                    continue;
                }
                let in_f = |i: usize| mask >> i & 1 == 1;
                let pos = c.edges.iter().position(|&e| e == self.e0).unwrap();
                let rhs = alpha * (mask.count_ones() as i64 - 1);
                // x(F) - x(C \ F) with the e0 term left out
                let rest: i64 = c
                    .edges
                    .iter()
                    .enumerate()
                    .filter(|&(_, &e)| e != self.e0)
                    .map(|(i, &e)| if in_f(i) { full[e] } else { -full[e] })
                    .sum();
                if in_f(pos) {
                    let v = rhs - rest;
                    x_min = Some(x_min.map_or(v, |m| m.min(v)));
                } else {
                    let v = rest - rhs;
                    x_max = Some(x_max.map_or(v, |m| m.max(v)));
                }
            }
        }
        let parity = self.through.first().map(|c| self.parity_on(c, &full));
        debug_assert!(
            self.through
                .iter()
                .all(|c| Some(self.parity_on(c, &full)) == parity),
            "parity must agree on every cycle through e0"
        );
        Ok(GammaBounds {
            x_max,
            x_min,
            lower: x_max.map_or(0, |v| v.max(0)),
            upper: x_min.map_or(alpha, |v| v.min(alpha)),
            parity,
        })
    }

    fn parity_on(&self, c: &Cycle, full: &[i64]) -> u8 {
        c.edges
            .iter()
            .filter(|&&e| e != self.e0)
            .map(|&e| full[e])
            .sum::<i64>()
            .rem_euclid(2) as u8
    }

    /// The lifted point with the smallest admissible `γ`.
    pub fn lift(&self, x: &[i64], alpha: i64) -> Result<HomPoint> {
        let b = self.bounds(x, alpha)?;
        let gamma = b.choose().ok_or(LiftError::EmptyGammaRange {
            lower: b.lower,
            upper: b.upper,
            parity: b.parity,
        })?;
        Ok(HomPoint::new(self.extend(x, gamma), alpha))
    }
}

/// Bounds for `γ` at edge `e0` of `g`, given `(x, alpha)` on `g \ e0`.
pub fn gamma_bounds(g: &Graph, e0: usize, x: &[i64], alpha: i64) -> Result<GammaBounds> {
    DeletionLift::new(g, e0)?.bounds(x, alpha)
}

/// Lifts `(x, alpha)` from `g \ e0` to `g`.
pub fn lift_deletion(g: &Graph, e0: usize, x: &[i64], alpha: i64) -> Result<HomPoint> {
    DeletionLift::new(g, e0)?.lift(x, alpha)
}

/// How a shore (containing the first shared vertex) meets the other
/// shared vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SharedPattern {
    /// One shared vertex: a single class.
    All,
    /// Two shared vertices, second inside the shore.
    Plus,
    /// Two shared vertices, second outside.
    Minus,
    /// Shared edges read `(0, 0, 0)`: second and third inside.
    Z0,
    /// `(0, 1, 1)`: second inside, third outside.
    Z1,
    /// `(1, 0, 1)`: third inside, second outside.
    Z2,
    /// `(1, 1, 0)`: both outside.
    Z3,
}

impl SharedPattern {
    /// Classes for `s` shared vertices, in canonical order.
    pub fn classes(s: usize) -> &'static [SharedPattern] {
        match s {
            1 => &[SharedPattern::All],
            2 => &[SharedPattern::Plus, SharedPattern::Minus],
            _ => &[
                SharedPattern::Z0,
                SharedPattern::Z1,
                SharedPattern::Z2,
                SharedPattern::Z3,
            ],
        }
    }

    /// Pattern of `shore` relative to `shared` (labels in the shore's own
    /// graph; `shared[0]` must lie in the shore).
    pub fn of(shore: VertexSet, shared: &[usize]) -> SharedPattern {
        debug_assert!(shore.contains(shared[0]));
        match shared.len() {
            1 => SharedPattern::All,
            2 => {
                if shore.contains(shared[1]) {
                    SharedPattern::Plus
                } else {
                    SharedPattern::Minus
                }
            }
            _ => match (shore.contains(shared[1]), shore.contains(shared[2])) {
                (true, true) => SharedPattern::Z0,
                (true, false) => SharedPattern::Z1,
                (false, true) => SharedPattern::Z2,
                (false, false) => SharedPattern::Z3,
            },
        }
    }
}

fn canonicalize(n: usize, shared0: usize, shores: &[VertexSet]) -> Result<Vec<VertexSet>> {
    shores
        .iter()
        .map(|&s| {
            if let Some(v) = s.difference(VertexSet::full(n)).first() {
                return Err(LiftError::ShoreVertex { vertex: v, n });
            }
            Ok(if s.contains(shared0) {
                s
            } else {
                s.complement(n)
            })
        })
        .collect()
}

fn shared_aggregate(shores: &[VertexSet], shared: &[usize]) -> Vec<i64> {
    let mut out = Vec::new();
    for a in 0..shared.len() {
        for b in a + 1..shared.len() {
            out.push(
                shores
                    .iter()
                    .filter(|s| s.contains(shared[a]) != s.contains(shared[b]))
                    .count() as i64,
            );
        }
    }
    out
}

/// Class counts `ξ` of a decomposition, in [`SharedPattern::classes`]
/// order. Shores are normalised to contain `shared[0]` first.
pub fn pattern_counts(n: usize, shared: &[usize], shores: &[VertexSet]) -> Result<Vec<usize>> {
    let shores = canonicalize(n, shared[0], shores)?;
    Ok(SharedPattern::classes(shared.len())
        .iter()
        .map(|&c| {
            shores
                .iter()
                .filter(|&&s| SharedPattern::of(s, shared) == c)
                .count()
        })
        .collect())
}

/// Merges decompositions on the two parts of a clique sum into one on the
/// glued graph. Each input is a list of shores whose cut vectors (plus the
/// degree coordinate) sum to the restriction of a common target.
pub fn merge_clique_sum(
    spec: &CliqueSumSpec,
    dec1: &[VertexSet],
    dec2: &[VertexSet],
) -> Result<Vec<VertexSet>> {
    let glued = spec.glue()?;
    if dec1.len() != dec2.len() {
        return Err(LiftError::LengthMismatch(dec1.len(), dec2.len()));
    }
    let left_shared: Vec<usize> = spec.shared.iter().map(|&(v, _)| v).collect();
    let right_shared: Vec<usize> = spec.shared.iter().map(|&(_, w)| w).collect();
    let d1 = canonicalize(spec.g1.n(), left_shared[0], dec1)?;
    let d2 = canonicalize(spec.g2.n(), right_shared[0], dec2)?;
    let (a1, a2) = (
        shared_aggregate(&d1, &left_shared),
        shared_aggregate(&d2, &right_shared),
    );
    if a1 != a2 {
        return Err(LiftError::SharedAggregateMismatch(a1, a2));
    }
    let (c1, c2) = (
        pattern_counts(spec.g1.n(), &left_shared, &d1)?,
        pattern_counts(spec.g2.n(), &right_shared, &d2)?,
    );
    if c1 != c2 {
        return Err(LiftError::CountMismatch(c1, c2));
    }
    let mut merged = Vec::with_capacity(d1.len());
    for &class in SharedPattern::classes(spec.s()) {
        let mut left: Vec<VertexSet> = d1
            .iter()
            .copied()
            .filter(|&s| SharedPattern::of(s, &left_shared) == class)
            .collect();
        let mut right: Vec<VertexSet> = d2
            .iter()
            .copied()
            .filter(|&t| SharedPattern::of(t, &right_shared) == class)
            .collect();
        left.sort_unstable();
        right.sort_unstable();
        for (s, t) in left.into_iter().zip(right) {
            let mut shore: VertexSet = s.iter().map(|v| glued.left[v]).collect();
            shore = shore.union(t.iter().map(|w| glued.right[w]).collect());
            merged.push(shore);
        }
    }
    Ok(merged)
}

/// Parses one shore per line (space-separated vertex labels). Blank lines
/// and `#` comments are skipped; `-` denotes the empty shore.
pub fn parse_shore_list(text: &str) -> Result<Vec<VertexSet>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if line == "-" {
            out.push(VertexSet::EMPTY);
            continue;
        }
        let mut s = VertexSet::EMPTY;
        for tok in line.split_whitespace() {
            let v: usize = tok.parse().map_err(|_| LiftError::Parse {
                line: i + 1,
                msg: format!("not a vertex label: `{tok}`"),
            })?;
            if v == 0 || v > 64 {
                return Err(LiftError::Parse {
                    line: i + 1,
                    msg: format!("vertex {v} out of range"),
                });
            }
            s.insert(v);
        }
        out.push(s);
    }
    Ok(out)
}

pub fn format_shore_list(shores: &[VertexSet]) -> String {
    let mut out = String::new();
    for s in shores {
        if s.is_empty() {
            out.push('-');
        } else {
            let labels: Vec<String> = s.iter().map(|v| v.to_string()).collect();
            out.push_str(&labels.join(" "));
        }
        out.push('\n');
    }
    out
}
