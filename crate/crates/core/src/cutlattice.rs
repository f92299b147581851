//! Cut semimetrics and the membership oracles for the lattice and cone they
//! generate, in homogenised form `(x, α)` and in plain form `x`.

use std::fmt;
use std::str::FromStr;

use num::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::budget::{Budget, BudgetExceeded};
use crate::graph::{Cycle, Graph, GraphError, VertexSet};
use crate::lp::{self, Rational};
use crate::minors::{self, MinorWitness};

/// Default ceiling on `n` for anything that lists all `2^(n-1)` cuts.
pub const DEFAULT_MAX_CUT_VERTICES: usize = 16;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CutError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("point has {got} coordinates, graph has {expected} edges")]
    Dimension { expected: usize, got: usize },
    #[error("{n} vertices exceed the generator limit of {limit}")]
    TooManyVertices { n: usize, limit: usize },
    #[error("degree must be nonnegative, got {0}")]
    NegativeDegree(i64),
    #[error("graph has a K5 minor (branch sets {:?}); the cycle inequalities do not describe its cut polytope", .0.branch_sets)]
    HasK5Minor(MinorWitness),
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
    #[error("malformed point: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, CutError>;

/// The cut semimetric of one shore. The stored shore always contains
/// vertex 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CutVector {
    pub coords: Vec<i64>,
    pub shore: VertexSet,
}

/// Normalises a shore to the side containing vertex 1.
pub fn canonical_shore(n: usize, s: VertexSet) -> VertexSet {
    if s.contains(1) {
        s
    } else {
        s.complement(n)
    }
}

fn check_vertices(g: &Graph, s: VertexSet) -> Result<()> {
    match s.difference(g.vertices()).first() {
        Some(v) => Err(GraphError::VertexOutOfRange {
            vertex: v,
            n: g.n(),
        }
        .into()),
        None => Ok(()),
    }
}

/// `coords[e] = 1` iff edge `e` has exactly one endpoint in `s`.
pub fn cut_coords(g: &Graph, s: VertexSet) -> Vec<i64> {
    g.edges()
        .iter()
        .map(|&(u, v)| (s.contains(u) != s.contains(v)) as i64)
        .collect()
}

pub fn cut_vector(g: &Graph, s: VertexSet) -> Result<CutVector> {
    check_vertices(g, s)?;
    Ok(CutVector {
        coords: cut_coords(g, s),
        shore: canonical_shore(g.n(), s),
    })
}

/// All `2^(n-1)` cut vectors. Generator `k` has shore `V \ T_k` where
/// vertex `v >= 2` lies in `T_k` iff bit `v - 2` of `k` is set, so the zero
/// cut comes first. Vectors repeat exactly when the graph is disconnected.
#[derive(Debug, Clone)]
pub struct CutBasis {
    pub graph: Graph,
    pub generators: Vec<CutVector>,
}

impl CutBasis {
    pub fn new(g: &Graph) -> Result<Self> {
        Self::with_limit(g, DEFAULT_MAX_CUT_VERTICES)
    }

    pub fn with_limit(g: &Graph, limit: usize) -> Result<Self> {
        let n = g.n();
        if n > limit || n > 31 {
            return Err(CutError::TooManyVertices {
                n,
                limit: limit.min(31),
            });
        }
        let full = g.vertices();
        let generators = (0u64..1 << (n - 1))
            .map(|k| {
                let shore = full.difference(VertexSet(k << 1));
                CutVector {
                    coords: cut_coords(g, shore),
                    shore,
                }
            })
            .collect();
        Ok(CutBasis {
            graph: g.clone(),
            generators,
        })
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Indices of the first occurrence of each distinct vector.
    pub fn distinct(&self) -> Vec<usize> {
        let mut seen = std::collections::HashSet::new();
        (0..self.len())
            .filter(|&i| seen.insert(self.generators[i].coords.clone()))
            .collect()
    }
}

pub fn cut_generators(g: &Graph) -> Result<CutBasis> {
    CutBasis::new(g)
}

/// A candidate point `(x, α)` of the homogenised cut cone.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HomPoint {
    pub x: Vec<i64>,
    pub alpha: i64,
}

impl HomPoint {
    pub fn new(x: Vec<i64>, alpha: i64) -> Self {
        HomPoint { x, alpha }
    }

    fn check(&self, g: &Graph) -> Result<()> {
        check_dim(g, self.x.len())?;
        if self.alpha < 0 {
            return Err(CutError::NegativeDegree(self.alpha));
        }
        Ok(())
    }
}

impl fmt::Display for HomPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.x.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, " ; {}", self.alpha)
    }
}

impl FromStr for HomPoint {
    type Err = CutError;

    /// Accepts `x_1 ... x_m ; alpha` or the JSON form `{"x": [...], "alpha": k}`.
    fn from_str(text: &str) -> Result<Self> {
        let t = text.trim();
        if t.starts_with('{') {
            return serde_json::from_str(t).map_err(|e| CutError::Parse(e.to_string()));
        }
        let (xs, alpha) = t
            .split_once(';')
            .ok_or_else(|| CutError::Parse("expected `x_1 ... x_m ; alpha`".into()))?;
        let x = xs
            .split_whitespace()
            .map(|s| {
                s.parse::<i64>()
                    .map_err(|_| CutError::Parse(format!("not an integer: `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        let alpha = alpha
            .trim()
            .parse::<i64>()
            .map_err(|_| CutError::Parse(format!("bad degree `{}`", alpha.trim())))?;
        Ok(HomPoint { x, alpha })
    }
}

/// Parses a whitespace-separated rational vector (`p` or `p/q` entries).
pub fn parse_rational_vector(text: &str) -> Result<Vec<Rational>> {
    text.split_whitespace()
        .map(|s| {
            lp::parse_rational(s).ok_or_else(|| CutError::Parse(format!("not a rational: `{s}`")))
        })
        .collect()
}

fn check_dim(g: &Graph, got: usize) -> Result<()> {
    if got != g.m() {
        return Err(CutError::Dimension {
            expected: g.m(),
            got,
        });
    }
    Ok(())
}

/// Parity test against a fundamental cycle basis.
#[derive(Debug, Clone)]
pub struct LatticeOracle {
    m: usize,
    cycles: Vec<Vec<usize>>,
}

impl LatticeOracle {
    pub fn new(g: &Graph) -> Self {
        LatticeOracle {
            m: g.m(),
            cycles: g.cycle_basis().into_iter().map(|c| c.edges).collect(),
        }
    }

    /// Edge sets of the basis cycles.
    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        debug_assert_eq!(x.len(), self.m);
        self.cycles
            .iter()
            .all(|c| c.iter().map(|&e| x[e]).sum::<i64>().rem_euclid(2) == 0)
    }
}

/// `(x, α)` lies in the lattice generated by the homogenised cuts. The
/// degree is unconstrained because `(0, 1)` is itself a generator.
pub fn in_lattice(g: &Graph, p: &HomPoint) -> Result<bool> {
    check_dim(g, p.x.len())?;
    Ok(LatticeOracle::new(g).contains(&p.x))
}

pub fn in_lattice_nonhomogeneous(g: &Graph, x: &[i64]) -> Result<bool> {
    check_dim(g, x.len())?;
    Ok(LatticeOracle::new(g).contains(x))
}

/// `x(F) - x(C \ F) <= α (|F| - 1)` for an induced cycle `C` and an odd
/// subset `F` of its edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleInequality {
    pub cycle: Cycle,
    pub odd_set: Vec<usize>,
}

impl CycleInequality {
    /// Left-hand side `x(F) - x(C \ F)`.
    pub fn lhs(&self, x: &[i64]) -> i64 {
        self.cycle
            .edges
            .iter()
            .map(|&e| {
                if self.odd_set.contains(&e) {
                    x[e]
                } else {
                    -x[e]
                }
            })
            .sum()
    }

    pub fn rhs(&self, alpha: i64) -> i64 {
        alpha * (self.odd_set.len() as i64 - 1)
    }

    pub fn holds(&self, x: &[i64], alpha: i64) -> bool {
        self.lhs(x) <= self.rhs(alpha)
    }

    fn holds_rational(&self, x: &[Rational], alpha: &Rational) -> bool {
        let mut lhs = Rational::zero();
        for &e in &self.cycle.edges {
            if self.odd_set.contains(&e) {
                lhs += &x[e];
            } else {
                lhs -= &x[e];
            }
        }
        lhs <= alpha * Rational::from_integer((self.odd_set.len() as i64 - 1).into())
    }
}

/// Every odd subset of every cycle in `cycles`, cycles in the given order
/// and subsets by increasing bitmask over cycle positions.
pub fn odd_set_inequalities(cycles: &[Cycle]) -> Vec<CycleInequality> {
    let mut out = Vec::new();
    for c in cycles {
        let k = c.len();
        for mask in 1u64..(1 << k) {
            if mask.count_ones() % 2 == 1 {
                let odd_set = (0..k)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| c.edges[i])
                    .collect();
                out.push(CycleInequality {
                    cycle: c.clone(),
                    odd_set,
                });
            }
        }
    }
    out
}

/// The inequality description of the cut polytope of a `K5`-minor-free
/// graph: the box `0 <= x_e <= α` (two bounds per edge) and all odd-set
/// inequalities of induced cycles.
#[derive(Debug, Clone)]
pub struct FacetSystem {
    pub edges: usize,
    pub inequalities: Vec<CycleInequality>,
}

impl FacetSystem {
    /// Assumes the caller has already established `K5`-minor-freeness.
    pub fn from_graph_unchecked(g: &Graph) -> Self {
        FacetSystem {
            edges: g.m(),
            inequalities: odd_set_inequalities(&g.induced_cycles()),
        }
    }

    pub fn box_count(&self) -> usize {
        2 * self.edges
    }

    /// Total number of inequalities, box bounds included.
    pub fn len(&self) -> usize {
        self.box_count() + self.inequalities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, p: &HomPoint) -> bool {
        p.x.iter().all(|&v| 0 <= v && v <= p.alpha)
            && self.inequalities.iter().all(|q| q.holds(&p.x, p.alpha))
    }

    pub fn contains_rational(&self, x: &[Rational], alpha: &Rational) -> bool {
        x.iter().all(|v| !v.is_negative() && v <= alpha)
            && self.inequalities.iter().all(|q| q.holds_rational(x, alpha))
    }
}

pub fn facet_inequalities(g: &Graph) -> Result<FacetSystem> {
    facet_inequalities_with_budget(g, &Budget::unlimited())
}

pub fn facet_inequalities_with_budget(g: &Graph, budget: &Budget) -> Result<FacetSystem> {
    if let Some(w) = minors::k5_minor(g, budget)? {
        return Err(CutError::HasK5Minor(w));
    }
    Ok(FacetSystem::from_graph_unchecked(g))
}

/// Exact feasibility of `Σ λ_i (a_i, 1) = (x, α)` with `λ >= 0` over the
/// distinct cut vectors.
#[derive(Debug, Clone)]
pub struct GeneratorCone {
    columns: Vec<Vec<i64>>,
    m: usize,
}

impl GeneratorCone {
    pub fn new(basis: &CutBasis) -> Self {
        let columns = basis
            .distinct()
            .into_iter()
            .map(|i| {
                let mut c = basis.generators[i].coords.clone();
                c.push(1);
                c
            })
            .collect();
        GeneratorCone {
            columns,
            m: basis.graph.m(),
        }
    }

    pub fn contains(&self, p: &HomPoint) -> bool {
        let rhs: Vec<Rational> =
            p.x.iter()
                .chain([&p.alpha])
                .map(|&v| lp::rational(v))
                .collect();
        self.contains_rational(&rhs[..self.m], &rhs[self.m])
    }

    pub fn contains_rational(&self, x: &[Rational], alpha: &Rational) -> bool {
        let mut rhs = x.to_vec();
        rhs.push(alpha.clone());
        lp::nonnegative_combination(&self.columns, &rhs).is_some()
    }

    /// The multipliers `λ`, one per distinct generator, when feasible.
    pub fn certificate(&self, p: &HomPoint) -> Option<Vec<Rational>> {
        let rhs: Vec<Rational> =
            p.x.iter()
                .chain([&p.alpha])
                .map(|&v| lp::rational(v))
                .collect();
        lp::nonnegative_combination(&self.columns, &rhs)
    }
}

/// Cone membership for one graph: the inequality description when the
/// graph has no `K5` minor, the generator feasibility test otherwise.
#[derive(Debug, Clone)]
pub enum ConeOracle {
    Facets(FacetSystem),
    Generators(GeneratorCone),
}

impl ConeOracle {
    pub fn new(g: &Graph) -> Result<Self> {
        Self::with_budget(g, &Budget::unlimited())
    }

    pub fn with_budget(g: &Graph, budget: &Budget) -> Result<Self> {
        match facet_inequalities_with_budget(g, budget) {
            Ok(f) => Ok(ConeOracle::Facets(f)),
            Err(CutError::HasK5Minor(_)) => Ok(ConeOracle::Generators(GeneratorCone::new(
                &CutBasis::new(g)?,
            ))),
            Err(e) => Err(e),
        }
    }

    /// Generator backend regardless of minors.
    pub fn generators(g: &Graph) -> Result<Self> {
        Ok(ConeOracle::Generators(GeneratorCone::new(&CutBasis::new(
            g,
        )?)))
    }

    pub fn uses_facets(&self) -> bool {
        matches!(self, ConeOracle::Facets(_))
    }

    pub fn contains(&self, p: &HomPoint) -> bool {
        match self {
            ConeOracle::Facets(f) => f.contains(p),
            ConeOracle::Generators(c) => {
                if p.x.iter().any(|&v| v < 0 || v > p.alpha) {
                    return false;
                }
                c.contains(p)
            }
        }
    }

    pub fn contains_rational(&self, x: &[Rational], alpha: &Rational) -> bool {
        match self {
            ConeOracle::Facets(f) => f.contains_rational(x, alpha),
            ConeOracle::Generators(c) => c.contains_rational(x, alpha),
        }
    }
}

pub fn in_cone(g: &Graph, p: &HomPoint) -> Result<bool> {
    p.check(g)?;
    Ok(ConeOracle::new(g)?.contains(p))
}

/// Nonnegative rational combinations of the cut vectors, no degree.
#[derive(Debug, Clone)]
pub struct CutCone {
    columns: Vec<Vec<i64>>,
}

impl CutCone {
    pub fn new(basis: &CutBasis) -> Self {
        let columns = basis
            .distinct()
            .into_iter()
            .map(|i| basis.generators[i].coords.clone())
            .filter(|c| c.iter().any(|&v| v != 0))
            .collect();
        CutCone { columns }
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        if x.iter().any(|v| v.is_negative()) {
            return false;
        }
        lp::nonnegative_combination(&self.columns, x).is_some()
    }

    pub fn contains_integer(&self, x: &[i64]) -> bool {
        let x: Vec<Rational> = x.iter().map(|&v| lp::rational(v)).collect();
        self.contains(&x)
    }
}

pub fn in_cone_nonhomogeneous(g: &Graph, x: &[Rational]) -> Result<bool> {
    check_dim(g, x.len())?;
    Ok(CutCone::new(&CutBasis::new(g)?).contains(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::parse_named;

    fn k3() -> Graph {
        parse_named("K3").unwrap()
    }

    #[test]
    fn cut_vectors_of_triangle() {
        let g = k3();
        assert_eq!(
            cut_vector(&g, VertexSet::singleton(1)).unwrap().coords,
            vec![1, 1, 0]
        );
        let c3 = cut_vector(&g, VertexSet::singleton(3)).unwrap();
        assert_eq!(c3.coords, vec![0, 1, 1]);
        assert_eq!(c3, cut_vector(&g, [1, 2].into_iter().collect()).unwrap());
        assert_eq!(
            cut_vector(&g, VertexSet::EMPTY).unwrap().coords,
            vec![0, 0, 0]
        );
        assert!(cut_vector(&g, VertexSet::singleton(4)).is_err());
    }

    #[test]
    fn generator_lists() {
        let b = cut_generators(&k3()).unwrap();
        let got: Vec<_> = b.generators.iter().map(|c| c.coords.clone()).collect();
        assert_eq!(got[0], vec![0, 0, 0]);
        let mut sorted = got.clone();
        sorted.sort();
        assert_eq!(
            sorted,
            vec![vec![0, 0, 0], vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]
        );
        let k2 = parse_named("K2").unwrap();
        let b = cut_generators(&k2).unwrap();
        assert_eq!(
            b.generators
                .iter()
                .map(|c| c.coords.clone())
                .collect::<Vec<_>>(),
            vec![vec![0], vec![1]]
        );
        assert!(b.generators.iter().all(|c| c.shore.contains(1)));
        let big = parse_named("K17").unwrap();
        assert!(matches!(
            cut_generators(&big),
            Err(CutError::TooManyVertices { .. })
        ));
    }

    #[test]
    fn lattice_examples() {
        let g = k3();
        assert!(!in_lattice(&g, &HomPoint::new(vec![1, 1, 1], 7)).unwrap());
        assert!(in_lattice(&g, &HomPoint::new(vec![2, 1, 1], 5)).unwrap());
        let tree = parse_named("P5").unwrap();
        assert!(in_lattice(&tree, &HomPoint::new(vec![3, -1, 5, 2], 0)).unwrap());
        assert!(matches!(
            in_lattice(&g, &HomPoint::new(vec![1], 1)),
            Err(CutError::Dimension {
                expected: 3,
                got: 1
            })
        ));
        assert!(in_lattice_nonhomogeneous(&g, &[1, 1, 0]).unwrap());
        assert!(!in_lattice_nonhomogeneous(&g, &[1, 1, 1]).unwrap());
    }

    #[test]
    fn facet_counts() {
        assert_eq!(facet_inequalities(&k3()).unwrap().inequalities.len(), 4);
        assert_eq!(facet_inequalities(&k3()).unwrap().box_count(), 6);
        let c5 = facet_inequalities(&parse_named("C5").unwrap()).unwrap();
        assert_eq!((c5.inequalities.len(), c5.box_count()), (16, 10));
        let tree = facet_inequalities(&parse_named("P4").unwrap()).unwrap();
        assert!(tree.inequalities.is_empty());
        assert!(matches!(
            facet_inequalities(&parse_named("K5").unwrap()),
            Err(CutError::HasK5Minor(_))
        ));
    }

    #[test]
    fn cone_examples() {
        let g = k3();
        assert!(in_cone(&g, &HomPoint::new(vec![1, 1, 1], 2)).unwrap());
        assert!(!in_cone(&g, &HomPoint::new(vec![2, 0, 0], 1)).unwrap());
        assert!(in_cone(&g, &HomPoint::new(vec![0, 0, 0], 0)).unwrap());
        let gen = ConeOracle::generators(&g).unwrap();
        assert!(gen.contains(&HomPoint::new(vec![1, 1, 1], 2)));
        assert!(!gen.contains(&HomPoint::new(vec![1, 1, 1], 1)));
        assert!(matches!(
            in_cone(&g, &HomPoint::new(vec![0, 0, 0], -1)),
            Err(CutError::NegativeDegree(-1))
        ));
    }

    #[test]
    fn plain_cone_examples() {
        let g = k3();
        let v = |xs: &[i64]| xs.iter().map(|&x| lp::rational(x)).collect::<Vec<_>>();
        assert!(in_cone_nonhomogeneous(&g, &v(&[3, 3, 0])).unwrap());
        assert!(!in_cone_nonhomogeneous(&g, &v(&[-1, 0, 0])).unwrap());
        assert!(in_cone_nonhomogeneous(&g, &v(&[1, 1, 1])).unwrap());
        assert!(!in_cone_nonhomogeneous(&g, &v(&[2, 0, 0])).unwrap());
    }

    #[test]
    fn point_text_forms() {
        let p: HomPoint = "1 0 2 ; 3".parse().unwrap();
        assert_eq!(p, HomPoint::new(vec![1, 0, 2], 3));
        assert_eq!(p.to_string().parse::<HomPoint>().unwrap(), p);
        let j: HomPoint = r#"{"x": [1, 0, 2], "alpha": 3}"#.parse().unwrap();
        assert_eq!(j, p);
        assert!("1 2 3".parse::<HomPoint>().is_err());
    }
}
