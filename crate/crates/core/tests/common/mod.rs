//! Independent brute-force oracles shared by the integration tests. None of
//! these call into the search code they are used to check.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use cutnorm::{minor_profile, CliqueSumSpec, Graph, VertexSet};
use proptest::prelude::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Pairs of `1..=n` in the order used by edge masks.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            out.push((u, v));
        }
    }
    out
}

pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let edges: Vec<_> = pairs(n)
        .into_iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, e)| e)
        .collect();
    Graph::new(n, edges).unwrap()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n);
            out.push(q);
        }
    }
    out
}

/// One representative per isomorphism class of graphs on exactly `n`
/// vertices, by minimising the edge mask over all relabelings.
pub fn graphs_up_to_iso(n: usize) -> Vec<Graph> {
    let ps = pairs(n);
    let index = |u: usize, v: usize| ps.iter().position(|&e| e == (u.min(v), u.max(v))).unwrap();
    let perms = permutations(n);
    let mut seen = BTreeSet::new();
    for mask in 0u64..1 << ps.len() {
        let canon = perms
            .iter()
            .map(|p| {
                ps.iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &(u, v))| 1u64 << index(p[u - 1], p[v - 1]))
                    .sum::<u64>()
            })
            .min()
            .unwrap();
        seen.insert(canon);
    }
    seen.into_iter().map(|m| graph_from_mask(n, m)).collect()
}

/// All graphs on `1..=max_n` vertices up to isomorphism.
pub fn all_small_graphs(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(graphs_up_to_iso).collect()
}

fn connected_within(g: &Graph, set: VertexSet) -> bool {
    let Some(start) = set.first() else {
        return false;
    };
    let mut seen = VertexSet::singleton(start);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for w in set.iter() {
            if !seen.contains(w) && g.adjacent(v, w) {
                seen.insert(w);
                stack.push(w);
            }
        }
    }
    seen == set
}

/// Edge sets of induced cycles: vertex subsets whose induced subgraph is
/// connected and 2-regular.
pub fn brute_induced_cycles(g: &Graph) -> BTreeSet<BTreeSet<usize>> {
    let n = g.n();
    let mut out = BTreeSet::new();
    for bits in 0u64..1 << n {
        let set = VertexSet(bits);
        if set.len() < 3 {
            continue;
        }
        let regular = set.iter().all(|v| g.neighbors(v).intersection(set).len() == 2);
        if regular && connected_within(g, set) {
            let edges = g
                .edges()
                .iter()
                .enumerate()
                .filter(|(_, &(u, v))| set.contains(u) && set.contains(v))
                .map(|(i, _)| i)
                .collect();
            out.insert(edges);
        }
    }
    out
}

/// Edge sets of all cycles: edge subsets that are connected and 2-regular.
pub fn brute_all_cycles(g: &Graph) -> Vec<Vec<usize>> {
    let m = g.m();
    assert!(m <= 20, "too many edges for subset enumeration");
    let mut out = Vec::new();
    for mask in 1u64..1 << m {
        if mask.count_ones() < 3 {
            continue;
        }
        let chosen: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).collect();
        let mut deg = vec![0; g.n() + 1];
        let mut verts = VertexSet::EMPTY;
        for &i in &chosen {
            let (u, v) = g.edges()[i];
            deg[u] += 1;
            deg[v] += 1;
            verts.insert(u);
            verts.insert(v);
        }
        if verts.iter().any(|v| deg[v] != 2) {
            continue;
        }
        // connectivity through the chosen edges
        let mut seen = VertexSet::singleton(verts.first().unwrap());
        loop {
            let before = seen;
            for &i in &chosen {
                let (u, v) = g.edges()[i];
                if seen.contains(u) || seen.contains(v) {
                    seen.insert(u);
                    seen.insert(v);
                }
            }
            if seen == before {
                break;
            }
        }
        if seen == verts {
            out.push(chosen);
        }
    }
    out
}

/// Lattice membership from the definition of cut vectors: every cycle has
/// even total weight.
pub fn brute_cycle_parity(g: &Graph, x: &[i64]) -> bool {
    brute_all_cycles(g)
        .iter()
        .all(|c| c.iter().map(|&e| x[e]).sum::<i64>().rem_euclid(2) == 0)
}

/// Minor test by trying every map from host vertices to pattern vertices
/// or deletion.
pub fn brute_has_minor(host: &Graph, pattern: &Graph) -> bool {
    let (n, p) = (host.n(), pattern.n());
    if p > n {
        return false;
    }
    let mut assign = vec![0usize; n];
    loop {
        let mut sets = vec![VertexSet::EMPTY; p + 1];
        for (v, &a) in assign.iter().enumerate() {
            sets[a].insert(v + 1);
        }
        let ok = sets[1..].iter().all(|&s| connected_within(host, s))
            && pattern.edges().iter().all(|&(a, b)| {
                sets[a]
                    .iter()
                    .any(|u| !host.neighbors(u).intersection(sets[b]).is_empty())
            });
        if ok {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            assign[i] += 1;
            if assign[i] <= p {
                break;
            }
            assign[i] = 0;
            i += 1;
        }
    }
}

/// Cut vector of a shore straight from the definition.
pub fn brute_cut(g: &Graph, shore: VertexSet) -> Vec<i64> {
    g.edges()
        .iter()
        .map(|&(u, v)| (shore.contains(u) != shore.contains(v)) as i64)
        .collect()
}

/// Distinct homogenised cut vectors `(δ(S), 1)`.
pub fn brute_generators(g: &Graph) -> Vec<Vec<i64>> {
    let mut set = BTreeSet::new();
    for bits in 0u64..1 << g.n() {
        let mut v = brute_cut(g, VertexSet(bits));
        v.push(1);
        set.insert(v);
    }
    set.into_iter().collect()
}

/// Integer lattice membership via row echelon form over the integers.
pub fn hnf_contains(rows: &[Vec<i64>], target: &[i64]) -> bool {
    let width = target.len();
    let mut basis: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();
    let mut echelon: Vec<Vec<i128>> = Vec::new();
    for col in 0..width {
        // gcd-combine all remaining rows with a nonzero entry in `col`
        let mut pivot: Option<Vec<i128>> = None;
        let mut rest = Vec::new();
        for row in basis.drain(..) {
            if row[col] == 0 {
                rest.push(row);
                continue;
            }
            pivot = Some(match pivot {
                None => row,
                Some(mut p) => {
                    let mut r = row;
                    while r[col] != 0 {
                        let q = p[col].div_euclid(r[col]);
                        for k in 0..width {
                            p[k] -= q * r[k];
                        }
                        std::mem::swap(&mut p, &mut r);
                    }
                    rest.push(r);
                    p
                }
            });
        }
        basis = rest;
        if let Some(p) = pivot {
            echelon.push(p);
        }
    }
    let mut t: Vec<i128> = target.iter().map(|&v| v as i128).collect();
    for row in &echelon {
        let col = row.iter().position(|&v| v != 0).unwrap();
        if t[..col].iter().any(|&v| v != 0) {
            return false;
        }
        if t[col] % row[col] != 0 {
            return false;
        }
        let q = t[col] / row[col];
        for k in 0..width {
            t[k] -= q * row[k];
        }
    }
    t.iter().all(|&v| v == 0)
}

/// All sums of exactly `alpha` homogenised cut vectors.
pub fn brute_semigroup_slice(g: &Graph, alpha: i64) -> HashSet<Vec<i64>> {
    let gens = brute_generators(g);
    let mut level: HashSet<Vec<i64>> = HashSet::from([vec![0; g.m() + 1]]);
    for _ in 0..alpha {
        let mut next = HashSet::new();
        for s in &level {
            for gen in &gens {
                next.insert(s.iter().zip(gen).map(|(a, b)| a + b).collect());
            }
        }
        level = next;
    }
    level
}

/// Strategy for labelled graphs on `1..=max_n` vertices.
pub fn arb_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        let m = n * (n - 1) / 2;
        let top = if m == 0 { 1u64 } else { 1u64 << m };
        (Just(n), 0..top).prop_map(|(n, mask)| graph_from_mask(n, mask))
    })
}

pub fn random_k5_free(rng: &mut ChaCha8Rng, min_n: usize, max_n: usize) -> Graph {
    loop {
        let n = rng.gen_range(min_n..=max_n);
        let m = n * (n - 1) / 2;
        let g = graph_from_mask(n, rng.gen_range(0..1u64 << m));
        if g.m() > 0 && minor_profile(&g).k5_free {
            return g;
        }
    }
}

pub fn random_sum(g: &Graph, alpha: i64, rng: &mut ChaCha8Rng) -> Vec<i64> {
    let mut x = vec![0; g.m()];
    for _ in 0..alpha {
        let s = VertexSet(rng.gen::<u64>() & VertexSet::full(g.n()).0);
        for (a, b) in x.iter_mut().zip(brute_cut(g, s)) {
            *a += b;
        }
    }
    x
}

pub struct RandomSum {
    pub spec: CliqueSumSpec,
    pub dec1: Vec<VertexSet>,
    pub dec2: Vec<VertexSet>,
}

pub fn force_clique(g: &Graph, s: usize) -> Graph {
    let mut edges = g.edges().to_vec();
    for u in 1..=s {
        for v in u + 1..=s {
            edges.push((u, v));
        }
    }
    Graph::new(g.n(), edges).unwrap()
}

pub fn random_clique_sum(rng: &mut ChaCha8Rng) -> RandomSum {
    let s = rng.gen_range(1..=3);
    let part = |rng: &mut ChaCha8Rng| {
        let n = rng.gen_range(s.max(2)..=5);
        let m = n * (n - 1) / 2;
        force_clique(&graph_from_mask(n, rng.gen_range(0..1u64 << m)), s)
    };
    let (g1, g2) = (part(rng), part(rng));
    // pair the clique 1..=s of g1 with a shuffled copy in g2
    let mut right: Vec<usize> = (1..=s).collect();
    for i in (1..right.len()).rev() {
        right.swap(i, rng.gen_range(0..=i));
    }
    let shared: Vec<(usize, usize)> = (1..=s).zip(right).collect();
    let spec = CliqueSumSpec::new(g1, g2, shared).unwrap();
    let glued = spec.glue().unwrap();
    let alpha = rng.gen_range(1..=4);
    let mut dec1 = Vec::new();
    let mut dec2 = Vec::new();
    for _ in 0..alpha {
        let t = VertexSet(rng.gen::<u64>() & VertexSet::full(glued.graph.n()).0);
        dec1.push((1..=spec.g1.n()).filter(|&v| t.contains(glued.left[v])).collect());
        dec2.push((1..=spec.g2.n()).filter(|&w| t.contains(glued.right[w])).collect());
    }
    RandomSum { spec, dec1, dec2 }
}

pub fn sum_cuts(g: &Graph, shores: &[VertexSet]) -> Vec<i64> {
    let mut x = vec![0; g.m()];
    for &s in shores {
        for (a, b) in x.iter_mut().zip(brute_cut(g, s)) {
            *a += b;
        }
    }
    x
}

/// The glued target: each edge of the glued graph takes its coordinate
/// from whichever part contains it.
pub fn glued_target(spec: &CliqueSumSpec, x1: &[i64], x2: &[i64]) -> Vec<i64> {
    let glued = spec.glue().unwrap();
    let g = &glued.graph;
    let inv = |map: &[usize], v: usize| map.iter().position(|&w| w == v).filter(|&i| i > 0);
    g.edges()
        .iter()
        .map(|&(u, v)| match (inv(&glued.left, u), inv(&glued.left, v)) {
            (Some(a), Some(b)) => x1[spec.g1.edge_index(a, b).unwrap()],
            _ => {
                let (a, b) = (inv(&glued.right, u).unwrap(), inv(&glued.right, v).unwrap());
                x2[spec.g2.edge_index(a, b).unwrap()]
            }
        })
        .collect()
}
