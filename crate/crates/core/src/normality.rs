//! The semigroup side: decompositions into degree-one cut generators, hole
//! search over dilations, normality verdicts, the rule-based classifier and
//! the plain (ungraded) Hilbert-basis check.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::budget::{Budget, BudgetExceeded};
use crate::cutlattice::{
    odd_set_inequalities, ConeOracle, CutBasis, CutCone, CutError, HomPoint, LatticeOracle,
};
use crate::graph::{Graph, VertexSet};
use crate::minors::{self, MinorWitness};
use crate::scan::{BoxScan, Constraint};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NormalityError {
    #[error(transparent)]
    Cut(#[from] CutError),
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
    #[error("maximum degree must be between 2 and 255, got {0}")]
    BadDegree(i64),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, NormalityError>;

/// A multiset of generators summing to a target point. `parts` holds
/// indices into [`CutBasis::generators`], sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub parts: Vec<usize>,
    pub degree: i64,
}

impl Decomposition {
    /// Sum of the homogenised generators.
    pub fn sum(&self, basis: &CutBasis) -> HomPoint {
        let mut x = vec![0i64; basis.graph.m()];
        for &i in &self.parts {
            for (a, b) in x.iter_mut().zip(&basis.generators[i].coords) {
                *a += b;
            }
        }
        HomPoint::new(x, self.parts.len() as i64)
    }

    /// Shores of the parts, each containing vertex 1.
    pub fn shores(&self, basis: &CutBasis) -> Vec<VertexSet> {
        self.parts
            .iter()
            .map(|&i| basis.generators[i].shore)
            .collect()
    }
}

struct Decomposer<'a> {
    gens: Vec<(usize, &'a [i64])>,
    zero: usize,
    failed: HashSet<(Vec<i64>, i64)>,
    budget: &'a Budget,
}

impl Decomposer<'_> {
    // Any decomposition of a remainder whose first positive coordinate is
    // `e` uses a generator with a 1 at `e`, so only those are branched on.
    fn search(
        &mut self,
        rem: &mut Vec<i64>,
        deg: i64,
        chosen: &mut Vec<usize>,
    ) -> std::result::Result<bool, BudgetExceeded> {
        let Some(first) = rem.iter().position(|&v| v > 0) else {
            chosen.extend(std::iter::repeat(self.zero).take(deg as usize));
            return Ok(true);
        };
        if deg == 0 || self.failed.contains(&(rem.clone(), deg)) {
            return Ok(false);
        }
        self.budget.tick()?;
        for k in 0..self.gens.len() {
            let (idx, g) = self.gens[k];
            if g[first] == 0 {
                continue;
            }
            let fits = rem
                .iter()
                .zip(g)
                .all(|(&r, &c)| r - c >= 0 && r - c <= deg - 1);
            if !fits {
                continue;
            }
            for (r, c) in rem.iter_mut().zip(g) {
                *r -= c;
            }
            chosen.push(idx);
            let ok = self.search(rem, deg - 1, chosen)?;
            for (r, c) in rem.iter_mut().zip(g) {
                *r += c;
            }
            if ok {
                return Ok(true);
            }
            chosen.pop();
        }
        self.failed.insert((rem.clone(), deg));
        Ok(false)
    }
}

/// Searches for a decomposition of `p` into `p.alpha` generators, trying
/// generators in the given order (indices into `basis.generators`).
pub fn decompose_with_order(
    basis: &CutBasis,
    p: &HomPoint,
    order: &[usize],
    budget: &Budget,
) -> Result<Option<Decomposition>> {
    let m = basis.graph.m();
    if p.x.len() != m {
        return Err(CutError::Dimension {
            expected: m,
            got: p.x.len(),
        }
        .into());
    }
    if p.alpha < 0 {
        return Err(CutError::NegativeDegree(p.alpha).into());
    }
    if p.x.iter().any(|&v| v < 0 || v > p.alpha) {
        return Ok(None);
    }
    let mut seen = HashSet::new();
    let gens = order
        .iter()
        .filter(|&&i| seen.insert(basis.generators[i].coords.clone()))
        .map(|&i| (i, basis.generators[i].coords.as_slice()))
        .collect();
    let mut d = Decomposer {
        gens,
        zero: 0,
        failed: HashSet::new(),
        budget,
    };
    let mut rem = p.x.clone();
    let mut chosen = Vec::new();
    if d.search(&mut rem, p.alpha, &mut chosen)? {
        chosen.sort_unstable();
        Ok(Some(Decomposition {
            parts: chosen,
            degree: p.alpha,
        }))
    } else {
        Ok(None)
    }
}

/// Depth-first decomposition search in canonical generator order.
pub fn decompose_in(
    basis: &CutBasis,
    p: &HomPoint,
    budget: &Budget,
) -> Result<Option<Decomposition>> {
    let order: Vec<usize> = (0..basis.len()).collect();
    decompose_with_order(basis, p, &order, budget)
}

pub fn decompose(g: &Graph, p: &HomPoint) -> Result<Option<Decomposition>> {
    decompose_in(&CutBasis::new(g)?, p, &Budget::unlimited())
}

/// A point of the lattice and the cone that is not a sum of generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hole {
    pub point: HomPoint,
    pub lattice_ok: bool,
    pub cone_ok: bool,
    pub decomposable: bool,
}

/// Outcome of a degree-by-degree hole scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScanOutcome {
    /// No hole in degrees `2..=degree`.
    Clean {
        degree: i64,
    },
    Hole(Hole),
    /// Degrees up to `completed` were exhausted before the budget ran out.
    OutOfBudget {
        completed: i64,
    },
}

/// Precomputed data for scanning one graph.
pub struct HoleSearch {
    graph: Graph,
    basis: CutBasis,
    lattice: LatticeOracle,
    cone: ConeOracle,
    /// Distinct generators packed one byte per coordinate, when `m <= 16`.
    packed: Option<Vec<u128>>,
    inequalities: Vec<(Vec<(usize, i64)>, i64)>,
}

impl HoleSearch {
    pub fn new(g: &Graph, budget: &Budget) -> Result<Self> {
        let basis = CutBasis::new(g)?;
        let cone = ConeOracle::with_budget(g, budget)?;
        let packed = (g.m() <= 16).then(|| {
            let mut p: Vec<u128> = basis
                .distinct()
                .into_iter()
                .map(|i| pack(basis.generators[i].coords.iter().map(|&v| v as u8)))
                .collect();
            p.sort_unstable();
            p
        });
        // odd-set inequalities hold for every graph; with no K5 minor they
        // describe the cone exactly
        let inequalities = odd_set_inequalities(&g.induced_cycles())
            .into_iter()
            .map(|q| {
                let terms = q
                    .cycle
                    .edges
                    .iter()
                    .map(|&e| (e, if q.odd_set.contains(&e) { 1 } else { -1 }))
                    .collect();
                (terms, q.odd_set.len() as i64 - 1)
            })
            .collect();
        Ok(HoleSearch {
            graph: g.clone(),
            lattice: LatticeOracle::new(g),
            basis,
            cone,
            packed,
            inequalities,
        })
    }

    /// Drops the precomputed semigroup slice so that every lattice and
    /// cone candidate is decomposed directly.
    pub fn without_slice(mut self) -> Self {
        self.packed = None;
        self
    }

    pub fn basis(&self) -> &CutBasis {
        &self.basis
    }

    pub fn cone(&self) -> &ConeOracle {
        &self.cone
    }

    fn constraints(&self, alpha: i64) -> Vec<Constraint> {
        let mut out: Vec<Constraint> = self
            .lattice
            .cycles()
            .iter()
            .cloned()
            .map(Constraint::Even)
            .collect();
        out.extend(
            self.inequalities
                .iter()
                .map(|(terms, k)| Constraint::AtMost {
                    terms: terms.clone(),
                    rhs: alpha * k,
                }),
        );
        out
    }

    /// Sorted list of all sums of `alpha` generators, from the list for
    /// `alpha - 1`; `None` once it would outgrow [`SLICE_LIMIT`].
    fn next_slice(&self, prev: &[u128], gens: &[u128], budget: &Budget) -> Result<Option<Vec<u128>>> {
        budget.spend((prev.len() * gens.len()) as u64)?;
        // bytes never carry: each coordinate stays at most the degree
        let next = prev
            .par_chunks(1 << 12)
            .map(|chunk| {
                let mut v: Vec<u128> = chunk.iter().flat_map(|&s| gens.iter().map(move |&g| s + g)).collect();
                v.sort_unstable();
                v.dedup();
                Some(v)
            })
            .reduce(
                || Some(Vec::new()),
                |a, b| {
                    let (a, b) = (a?, b?);
                    (a.len() + b.len() <= SLICE_LIMIT).then(|| merge_dedup(&a, &b))
                },
            );
        Ok(next)
    }

    /// First hole of degree exactly `alpha` in lexicographic order. With a
    /// sorted slice of degree-`alpha` sums, candidates outside it are holes;
    /// without one each candidate is decomposed directly.
    fn scan_degree(&self, alpha: i64, slice: Option<&[u128]>, budget: &Budget) -> Result<Option<Hole>> {
        let scan = BoxScan::new(self.graph.m(), alpha as u8, self.constraints(alpha));
        let found = scan.find_first(
            budget,
            || (),
            |_, x| {
                if let Some(slice) = slice {
                    if slice.binary_search(&pack(x.iter().copied())).is_ok() {
                        return None;
                    }
                }
                let point = HomPoint::new(x.iter().map(|&v| v as i64).collect(), alpha);
                if !self.lattice.contains(&point.x) || !self.cone.contains(&point) {
                    return None;
                }
                if slice.is_none() {
                    match decompose_in(&self.basis, &point, budget) {
                        Ok(Some(_)) => return None,
                        Ok(None) => {}
                        Err(e) => return Some(Err(e)),
                    }
                }
                Some(Ok(point))
            },
        )?;
        let point = match found {
            None => return Ok(None),
            Some(Err(e)) => return Err(e.into()),
            Some(Ok(p)) => p,
        };
        if let Some(d) = decompose_in(&self.basis, &point, budget)? {
            return Err(NormalityError::Inconsistent(format!(
                "scan flagged {point} but it decomposes as {:?}",
                d.parts
            )));
        }
        Ok(Some(Hole {
            point,
            lattice_ok: true,
            cone_ok: true,
            decomposable: false,
        }))
    }

    /// Scans degrees `2..=max_degree` in order.
    pub fn scan(&self, max_degree: i64, budget: &Budget) -> Result<ScanOutcome> {
        if !(1..=255).contains(&max_degree) {
            return Err(NormalityError::BadDegree(max_degree));
        }
        let mut slice = self.packed.clone();
        let mut completed = 1;
        for alpha in 2..=max_degree {
            let step = match (&slice, &self.packed) {
                (Some(prev), Some(gens)) => self.next_slice(prev, gens, budget),
                _ => Ok(None),
            };
            let step = step.and_then(|next| {
                slice = next;
                self.scan_degree(alpha, slice.as_deref(), budget)
            });
            match step {
                Ok(Some(hole)) => return Ok(ScanOutcome::Hole(hole)),
                Ok(None) => completed = alpha,
                Err(NormalityError::Budget(_)) => return Ok(ScanOutcome::OutOfBudget { completed }),
                Err(e) => return Err(e),
            }
        }
        Ok(ScanOutcome::Clean { degree: completed })
    }
}

/// Largest semigroup slice kept in memory (16 bytes per entry).
pub const SLICE_LIMIT: usize = 1 << 25;

fn pack(x: impl Iterator<Item = u8>) -> u128 {
    x.fold(0u128, |acc, v| acc << 8 | v as u128)
}

fn merge_dedup(a: &[u128], b: &[u128]) -> Vec<u128> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let v = match (a.get(i), b.get(j)) {
            (Some(&x), Some(&y)) if x <= y => {
                i += 1;
                j += (x == y) as usize;
                x
            }
            (_, Some(&y)) => {
                j += 1;
                y
            }
            (Some(&x), None) => {
                i += 1;
                x
            }
            (None, None) => unreachable!(),
        };
        out.push(v);
    }
    out
}

/// First hole in scan order (degrees ascending, points lexicographic) with
/// degree at most `max_degree`.
pub fn find_hole(g: &Graph, max_degree: i64) -> Result<Option<Hole>> {
    find_hole_with_budget(g, max_degree, &Budget::unlimited())
}

pub fn find_hole_with_budget(g: &Graph, max_degree: i64, budget: &Budget) -> Result<Option<Hole>> {
    if max_degree < 2 {
        return Err(NormalityError::BadDegree(max_degree));
    }
    match HoleSearch::new(g, budget)?.scan(max_degree, budget)? {
        ScanOutcome::Hole(h) => Ok(Some(h)),
        ScanOutcome::Clean { .. } => Ok(None),
        ScanOutcome::OutOfBudget { .. } => Err(NormalityError::Budget(BudgetExceeded {
            limit: budget.limit().unwrap_or(0),
        })),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    NormalCertified,
    NormalUpToDegree,
    NotNormal,
    Unknown,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::NormalCertified => "normal_certified",
            Status::NormalUpToDegree => "normal_up_to_degree",
            Status::NotNormal => "not_normal",
            Status::Unknown => "unknown",
        }
    }
}

/// Outcome of certification. A `NotNormal` verdict carries either a point
/// hole or, from the classifier, a `K5` minor witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalityVerdict {
    pub status: Status,
    pub rules: Vec<String>,
    pub search_degree: i64,
    pub hole: Option<HomPoint>,
    pub minor_witness: Option<MinorWitness>,
}

impl NormalityVerdict {
    fn new(status: Status) -> Self {
        NormalityVerdict {
            status,
            rules: Vec::new(),
            search_degree: 0,
            hole: None,
            minor_witness: None,
        }
    }

    pub fn is_normal(&self) -> bool {
        matches!(
            self.status,
            Status::NormalCertified | Status::NormalUpToDegree
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyMode {
    Bounded(i64),
    /// Scan through degree `|E| - 1`.
    Full,
}

/// Degree through which a clean scan certifies normality.
pub fn full_certification_degree(g: &Graph) -> i64 {
    g.m() as i64 - 1
}

pub fn verify_normality(g: &Graph, mode: VerifyMode, budget: &Budget) -> Result<NormalityVerdict> {
    let (target, full) = match mode {
        VerifyMode::Bounded(d) => {
            if d < 2 {
                return Err(NormalityError::BadDegree(d));
            }
            (d, false)
        }
        VerifyMode::Full => (full_certification_degree(g), true),
    };
    if full && target < 2 {
        let mut v = NormalityVerdict::new(Status::NormalCertified);
        v.search_degree = target.max(1);
        v.rules.push("full-search".into());
        return Ok(v);
    }
    let search = match HoleSearch::new(g, budget) {
        Ok(s) => s,
        Err(NormalityError::Cut(CutError::Budget(_))) | Err(NormalityError::Budget(_)) => {
            return Ok(NormalityVerdict::new(Status::Unknown));
        }
        Err(e) => return Err(e),
    };
    Ok(match search.scan(target, budget)? {
        ScanOutcome::Hole(h) => {
            let mut v = NormalityVerdict::new(Status::NotNormal);
            v.search_degree = h.point.alpha;
            v.hole = Some(h.point);
            v.rules.push("hole-search".into());
            v
        }
        ScanOutcome::Clean { degree } => {
            let mut v = NormalityVerdict::new(if full {
                Status::NormalCertified
            } else {
                Status::NormalUpToDegree
            });
            v.search_degree = degree;
            v.rules.push(
                if full {
                    "full-search"
                } else {
                    "bounded-search"
                }
                .into(),
            );
            v
        }
        ScanOutcome::OutOfBudget { completed } => {
            let mut v = NormalityVerdict::new(Status::Unknown);
            v.search_degree = completed;
            v
        }
    })
}

pub const RULE_K5_MINOR: &str = "K5-minor";
pub const RULE_NO_K5E_MINOR: &str = "no-K5-e-minor";
pub const RULE_APEX: &str = "apex-K4-minor-free";
pub const RULE_SUSPENSION: &str = "suspension-of-K4-minor-free";
pub const RULE_CLIQUE_SUM: &str = "clique-sum";

fn k4_free(g: &Graph, budget: &Budget) -> std::result::Result<bool, BudgetExceeded> {
    Ok(minors::find_minor(g, &minors::k4(), budget)?.is_none())
}

/// Splits `g` along a clique separator of at most three vertices (or along
/// its components when disconnected). Returns the two sides, each
/// containing the separator.
pub fn clique_separation(g: &Graph) -> Option<(VertexSet, VertexSet, VertexSet)> {
    let all = g.vertices();
    let comps = g.components();
    if comps.len() > 1 {
        return Some((comps[0], all.difference(comps[0]), VertexSet::EMPTY));
    }
    let n = g.n();
    let mut seps: Vec<VertexSet> = Vec::new();
    for a in 1..=n {
        seps.push(VertexSet::singleton(a));
        for b in a + 1..=n {
            seps.push(VertexSet::singleton(a).with(b));
            for c in b + 1..=n {
                seps.push(VertexSet::singleton(a).with(b).with(c));
            }
        }
    }
    seps.sort_by_key(|s| (s.len(), *s));
    for sep in seps {
        if !g.is_clique(sep) {
            continue;
        }
        let rest = all.difference(sep);
        let parts = g.components_within(rest);
        if parts.len() > 1 {
            let first = parts[0].union(sep);
            let second = all.difference(parts[0]);
            return Some((first, second, sep));
        }
    }
    None
}

/// Applies the structural rules in order. A `K5` minor decides non-normality
/// at once; otherwise every sufficient condition among the next three is
/// evaluated and recorded, and clique-sum splitting is tried only when none
/// applies.
pub fn classify_normality(g: &Graph, budget: &Budget) -> NormalityVerdict {
    match classify_inner(g, budget) {
        Ok(v) => v,
        Err(_) => NormalityVerdict::new(Status::Unknown),
    }
}

fn classify_inner(
    g: &Graph,
    budget: &Budget,
) -> std::result::Result<NormalityVerdict, BudgetExceeded> {
    if let Some(w) = minors::k5_minor(g, budget)? {
        let mut v = NormalityVerdict::new(Status::NotNormal);
        v.rules.push(RULE_K5_MINOR.into());
        v.minor_witness = Some(w);
        return Ok(v);
    }
    let mut rules = Vec::new();
    if minors::find_minor(g, &minors::k5_minus_edge(), budget)?.is_none() {
        rules.push(RULE_NO_K5E_MINOR.to_string());
    }
    let mut apex_free = Vec::new();
    for v in 1..=g.n() {
        let rest = if g.n() > 1 {
            Some(g.remove_vertex(v).expect("vertex in range"))
        } else {
            None
        };
        let free = match &rest {
            Some(h) => k4_free(h, budget)?,
            None => true,
        };
        apex_free.push(free);
    }
    if apex_free.iter().any(|&f| f) {
        rules.push(RULE_APEX.to_string());
    }
    let suspension = (1..=g.n()).any(|v| g.degree(v) + 1 == g.n() && apex_free[v - 1]);
    if suspension {
        rules.push(RULE_SUSPENSION.to_string());
    }
    if !rules.is_empty() {
        let mut v = NormalityVerdict::new(Status::NormalCertified);
        v.rules = rules;
        return Ok(v);
    }
    if let Some((left, right, _)) = clique_separation(g) {
        let (g1, _) = g.induced_subgraph(left).expect("nonempty side");
        let (g2, _) = g.induced_subgraph(right).expect("nonempty side");
        let v1 = classify_inner(&g1, budget)?;
        let v2 = classify_inner(&g2, budget)?;
        let status = match (v1.status, v2.status) {
            (Status::NormalCertified, Status::NormalCertified) => Status::NormalCertified,
            (Status::NotNormal, _) | (_, Status::NotNormal) => Status::NotNormal,
            _ => Status::Unknown,
        };
        let mut v = NormalityVerdict::new(status);
        v.rules.push(RULE_CLIQUE_SUM.into());
        for r in v1.rules.into_iter().chain(v2.rules) {
            if !v.rules.contains(&r) {
                v.rules.push(r);
            }
        }
        return Ok(v);
    }
    Ok(NormalityVerdict::new(Status::Unknown))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "verdict")]
pub enum HilbertVerdict {
    NoViolationUpTo { bound: i64 },
    Violation { x: Vec<i64> },
}

struct PlainDecomposer<'a> {
    gens: &'a [Vec<u8>],
    memo: HashMap<Vec<u8>, bool>,
}

impl PlainDecomposer<'_> {
    fn decomposable(&mut self, rem: &mut Vec<u8>) -> bool {
        let Some(first) = rem.iter().position(|&v| v > 0) else {
            return true;
        };
        if let Some(&known) = self.memo.get(rem.as_slice()) {
            return known;
        }
        let mut ok = false;
        for g in self.gens {
            if g[first] == 0 || rem.iter().zip(g).any(|(&r, &c)| r < c) {
                continue;
            }
            for (r, c) in rem.iter_mut().zip(g) {
                *r -= c;
            }
            ok = self.decomposable(rem);
            for (r, c) in rem.iter_mut().zip(g) {
                *r += c;
            }
            if ok {
                break;
            }
        }
        self.memo.insert(rem.clone(), ok);
        ok
    }
}

/// Nonnegative integer combination of nonzero cut vectors summing to `x`,
/// with unbounded multiplicities. Returns shores of the parts.
pub fn decompose_plain(basis: &CutBasis, x: &[i64]) -> Option<Vec<usize>> {
    if x.iter().any(|&v| v < 0) {
        return None;
    }
    let gens: Vec<(usize, &[i64])> = basis
        .distinct()
        .into_iter()
        .map(|i| (i, basis.generators[i].coords.as_slice()))
        .filter(|(_, c)| c.iter().any(|&v| v != 0))
        .collect();
    let mut rem = x.to_vec();
    let mut parts = Vec::new();
    fn go(
        gens: &[(usize, &[i64])],
        rem: &mut Vec<i64>,
        parts: &mut Vec<usize>,
        failed: &mut HashSet<Vec<i64>>,
    ) -> bool {
        let Some(first) = rem.iter().position(|&v| v > 0) else {
            return true;
        };
        if failed.contains(rem) {
            return false;
        }
        for &(i, g) in gens {
            if g[first] == 0 || rem.iter().zip(g).any(|(&r, &c)| r < c) {
                continue;
            }
            rem.iter_mut().zip(g).for_each(|(r, c)| *r -= c);
            parts.push(i);
            if go(gens, rem, parts, failed) {
                return true;
            }
            parts.pop();
            rem.iter_mut().zip(g).for_each(|(r, c)| *r += c);
        }
        failed.insert(rem.clone());
        false
    }
    go(&gens, &mut rem, &mut parts, &mut HashSet::new()).then(|| {
        parts.sort_unstable();
        parts
    })
}

/// Looks for `x` with coordinates at most `max_degree` that lies in the
/// lattice and the cut cone but is not a nonnegative integer combination of
/// cut vectors.
pub fn hilbert_check(g: &Graph, max_degree: i64, budget: &Budget) -> Result<HilbertVerdict> {
    if !(2..=255).contains(&max_degree) {
        return Err(NormalityError::BadDegree(max_degree));
    }
    let basis = CutBasis::new(g)?;
    let cone = CutCone::new(&basis);
    let lattice = LatticeOracle::new(g);
    let gens: Vec<Vec<u8>> = basis
        .distinct()
        .into_iter()
        .map(|i| {
            basis.generators[i]
                .coords
                .iter()
                .map(|&v| v as u8)
                .collect::<Vec<u8>>()
        })
        .filter(|c| c.iter().any(|&v| v != 0))
        .collect();
    // x_e <= x(C \ e) holds on the cut cone of every graph
    let mut constraints: Vec<Constraint> = lattice
        .cycles()
        .iter()
        .cloned()
        .map(Constraint::Even)
        .collect();
    for c in g.induced_cycles() {
        for &e in &c.edges {
            let terms = c
                .edges
                .iter()
                .map(|&f| (f, if f == e { 1 } else { -1 }))
                .collect();
            constraints.push(Constraint::AtMost { terms, rhs: 0 });
        }
    }
    let scan = BoxScan::new(g.m(), max_degree as u8, constraints);
    let found = scan.find_first(
        budget,
        || PlainDecomposer {
            gens: &gens,
            memo: HashMap::new(),
        },
        |dec, x| {
            let mut rem = x.to_vec();
            if dec.decomposable(&mut rem) {
                return None;
            }
            let xi: Vec<i64> = x.iter().map(|&v| v as i64).collect();
            (lattice.contains(&xi) && cone.contains_integer(&xi)).then_some(xi)
        },
    )?;
    Ok(match found {
        Some(x) => HilbertVerdict::Violation { x },
        None => HilbertVerdict::NoViolationUpTo { bound: max_degree },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::parse_named;

    #[test]
    fn triangle_decompositions() {
        let g = parse_named("K3").unwrap();
        let basis = CutBasis::new(&g).unwrap();
        let d = decompose(&g, &HomPoint::new(vec![1, 1, 0], 1))
            .unwrap()
            .unwrap();
        assert_eq!(d.shores(&basis), vec![VertexSet::singleton(1)]);
        let p = HomPoint::new(vec![2, 2, 2], 3);
        let d = decompose(&g, &p).unwrap().unwrap();
        assert_eq!(d.sum(&basis), p);
        assert!(d
            .parts
            .iter()
            .all(|&i| basis.generators[i].coords.iter().sum::<i64>() == 2));
        assert!(decompose(&g, &HomPoint::new(vec![1, 1, 1], 2))
            .unwrap()
            .is_none());
        let padded = decompose(&g, &HomPoint::new(vec![1, 0, 1], 3))
            .unwrap()
            .unwrap();
        assert_eq!(padded.parts.iter().filter(|&&i| i == 0).count(), 2);
    }

    #[test]
    fn small_graphs_have_no_low_holes() {
        for name in ["K3", "K4", "C5", "P4"] {
            let g = parse_named(name).unwrap();
            assert_eq!(find_hole(&g, 3).unwrap(), None, "{name}");
        }
        assert!(find_hole(&parse_named("K3").unwrap(), 1).is_err());
    }

    #[test]
    fn slice_free_scan_agrees() {
        let k5 = parse_named("K5").unwrap();
        let b = Budget::unlimited();
        let fast = HoleSearch::new(&k5, &b).unwrap().scan(4, &b).unwrap();
        let slow = HoleSearch::new(&k5, &b).unwrap().without_slice().scan(4, &b).unwrap();
        assert_eq!(fast, slow);
        assert!(matches!(fast, ScanOutcome::Hole(ref h) if h.point == HomPoint::new(vec![2; 10], 4)));
        assert_eq!(merge_dedup(&[1, 3, 5], &[2, 3, 6]), vec![1, 2, 3, 5, 6]);
    }

    #[test]
    fn full_mode_on_triangle() {
        let v = verify_normality(
            &parse_named("K3").unwrap(),
            VerifyMode::Full,
            &Budget::unlimited(),
        )
        .unwrap();
        assert_eq!(v.status, Status::NormalCertified);
        assert_eq!(v.search_degree, 2);
    }

    #[test]
    fn budget_turns_into_unknown() {
        let v = verify_normality(
            &parse_named("V8").unwrap(),
            VerifyMode::Bounded(3),
            &Budget::new(50),
        )
        .unwrap();
        assert_eq!(v.status, Status::Unknown);
    }

    #[test]
    fn classifier_examples() {
        let b = Budget::unlimited();
        let k5 = classify_normality(&parse_named("K5").unwrap(), &b);
        assert_eq!(k5.status, Status::NotNormal);
        assert!(k5.minor_witness.is_some() && k5.hole.is_none());
        let w7 = classify_normality(&parse_named("W7").unwrap(), &b);
        assert_eq!(w7.status, Status::NormalCertified);
        assert!(w7.rules.iter().any(|r| r == RULE_SUSPENSION));
        let k33 = classify_normality(&parse_named("K3,3").unwrap(), &b);
        assert!(k33.rules.iter().any(|r| r == RULE_NO_K5E_MINOR));
    }

    #[test]
    fn separators() {
        let bowtie = parse_named("K3").unwrap();
        assert!(clique_separation(&bowtie).is_none());
        let two = Graph::new(4, [(1, 2), (3, 4)]).unwrap();
        let (a, b, s) = clique_separation(&two).unwrap();
        assert_eq!(
            (a.to_vec(), b.to_vec(), s.len()),
            (vec![1, 2], vec![3, 4], 0)
        );
    }

    #[test]
    fn plain_decomposition_of_triangle() {
        let g = parse_named("K3").unwrap();
        let basis = CutBasis::new(&g).unwrap();
        assert!(decompose_plain(&basis, &[2, 2, 2]).is_some());
        assert!(decompose_plain(&basis, &[1, 1, 1]).is_none());
        assert_eq!(
            hilbert_check(&g, 3, &Budget::unlimited()).unwrap(),
            HilbertVerdict::NoViolationUpTo { bound: 3 }
        );
    }
}
