//! Catalog of named graphs.

use crate::graph::{Graph, GraphError, Result};

/// Edge list of the Wagner graph, vertices `1..=8`.
pub const V8_EDGES: [(usize, usize); 12] = [
    (1, 2),
    (2, 3),
    (3, 4),
    (4, 5),
    (5, 6),
    (6, 7),
    (7, 8),
    (1, 8),
    (1, 5),
    (2, 6),
    (3, 7),
    (4, 8),
];

/// A catalog entry with its size parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Named {
    Complete(usize),
    /// `K_n` minus the edge `{n-1, n}`.
    CompleteMinusEdge(usize),
    Cycle(usize),
    /// Suspension of `C_n`: `n` rim vertices, hub `n + 1`.
    Wheel(usize),
    CompleteBipartite(usize, usize),
    /// `C_3 x K_2`.
    Prism,
    V8,
    Grid(usize, usize),
    Path(usize),
    Empty(usize),
    Octahedron,
    Icosahedron,
}

fn bad(name: &str, msg: impl Into<String>) -> GraphError {
    GraphError::BadParams {
        name: name.to_string(),
        msg: msg.into(),
    }
}

impl Named {
    /// Resolves a catalog identifier plus size parameters.
    pub fn from_parts(name: &str, params: &[usize]) -> Result<Named> {
        let key = name.to_ascii_lowercase();
        let want = |k: usize| -> Result<()> {
            if params.len() == k {
                Ok(())
            } else {
                Err(bad(
                    name,
                    format!("expected {k} parameter(s), got {}", params.len()),
                ))
            }
        };
        let named = match key.as_str() {
            "complete" | "k" => {
                want(1)?;
                Named::Complete(params[0])
            }
            "complete-minus-edge" | "k-e" => {
                want(1)?;
                Named::CompleteMinusEdge(params[0])
            }
            "cycle" | "c" => {
                want(1)?;
                Named::Cycle(params[0])
            }
            "wheel" | "w" => {
                want(1)?;
                Named::Wheel(params[0])
            }
            "bipartite" | "complete-bipartite" | "kab" => {
                want(2)?;
                Named::CompleteBipartite(params[0], params[1])
            }
            "prism" => {
                want(0)?;
                Named::Prism
            }
            "v8" | "wagner" => {
                want(0)?;
                Named::V8
            }
            "grid" => {
                want(2)?;
                Named::Grid(params[0], params[1])
            }
            "path" | "p" => {
                want(1)?;
                Named::Path(params[0])
            }
            "empty" => {
                want(1)?;
                Named::Empty(params[0])
            }
            "octahedron" => {
                want(0)?;
                Named::Octahedron
            }
            "icosahedron" => {
                want(0)?;
                Named::Icosahedron
            }
            _ => return Err(GraphError::UnknownName(name.to_string())),
        };
        named.check()?;
        Ok(named)
    }

    /// Parses compact names such as `K5`, `K5-e`, `C7`, `W7`, `P4`, `K3,3`,
    /// `grid3x4`, `V8` or `prism`.
    pub fn parse_short(text: &str) -> Result<Named> {
        let t = text.trim();
        let lower = t.to_ascii_lowercase();
        let num = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| GraphError::UnknownName(text.to_string()))
        };
        if let Some(rest) = lower.strip_prefix("grid") {
            let (r, c) = rest
                .split_once('x')
                .ok_or_else(|| GraphError::UnknownName(text.to_string()))?;
            return Named::from_parts("grid", &[num(r)?, num(c)?]);
        }
        if let Ok(named) = Named::from_parts(&lower, &[]) {
            return Ok(named);
        }
        if let Some(rest) = lower.strip_prefix('k') {
            if let Some((a, b)) = rest.split_once(',') {
                return Named::from_parts("bipartite", &[num(a)?, num(b)?]);
            }
            if let Some(n) = rest.strip_suffix("-e").or_else(|| rest.strip_suffix("\\e")) {
                return Named::from_parts("complete-minus-edge", &[num(n)?]);
            }
            return Named::from_parts("complete", &[num(rest)?]);
        }
        for (prefix, key) in [
            ("c", "cycle"),
            ("w", "wheel"),
            ("p", "path"),
            ("e", "empty"),
        ] {
            if let Some(rest) = lower.strip_prefix(prefix) {
                if let Ok(n) = rest.parse::<usize>() {
                    return Named::from_parts(key, &[n]);
                }
            }
        }
        Err(GraphError::UnknownName(text.to_string()))
    }

    fn check(self) -> Result<()> {
        let (name, ok, msg) = match self {
            Named::Complete(n) => ("complete", (1..=64).contains(&n), "need 1 <= n <= 64"),
            Named::CompleteMinusEdge(n) => (
                "complete-minus-edge",
                (2..=64).contains(&n),
                "need 2 <= n <= 64",
            ),
            Named::Cycle(n) => ("cycle", (3..=64).contains(&n), "need 3 <= n <= 64"),
            Named::Wheel(n) => ("wheel", (3..=63).contains(&n), "need 3 <= n <= 63"),
            Named::CompleteBipartite(a, b) => (
                "bipartite",
                a >= 1 && b >= 1 && a + b <= 64,
                "need a, b >= 1 and a + b <= 64",
            ),
            Named::Grid(r, c) => (
                "grid",
                r >= 1 && c >= 1 && r * c <= 64,
                "need r, c >= 1 and r * c <= 64",
            ),
            Named::Path(n) => ("path", (1..=64).contains(&n), "need 1 <= n <= 64"),
            Named::Empty(n) => ("empty", (1..=64).contains(&n), "need 1 <= n <= 64"),
            Named::Prism | Named::V8 | Named::Octahedron | Named::Icosahedron => ("", true, ""),
        };
        if ok {
            Ok(())
        } else {
            Err(bad(name, msg))
        }
    }

    pub fn build(self) -> Result<Graph> {
        self.check()?;
        match self {
            Named::Complete(n) => Graph::new(n, all_pairs(1..=n)),
            Named::CompleteMinusEdge(n) => {
                Graph::new(n, all_pairs(1..=n).filter(|&e| e != (n - 1, n)))
            }
            Named::Cycle(n) => Graph::new(n, (1..=n).map(|i| (i, i % n + 1))),
            Named::Wheel(n) => Ok(Named::Cycle(n).build()?.suspension()),
            Named::CompleteBipartite(a, b) => Graph::new(
                a + b,
                (1..=a).flat_map(|u| (a + 1..=a + b).map(move |v| (u, v))),
            ),
            Named::Prism => Graph::new(
                6,
                [
                    (1, 2),
                    (2, 3),
                    (1, 3),
                    (4, 5),
                    (5, 6),
                    (4, 6),
                    (1, 4),
                    (2, 5),
                    (3, 6),
                ],
            ),
            Named::V8 => Graph::new(8, V8_EDGES),
            Named::Grid(r, c) => {
                let id = |i: usize, j: usize| i * c + j + 1;
                let mut edges = Vec::new();
                for i in 0..r {
                    for j in 0..c {
                        if j + 1 < c {
                            edges.push((id(i, j), id(i, j + 1)));
                        }
                        if i + 1 < r {
                            edges.push((id(i, j), id(i + 1, j)));
                        }
                    }
                }
                Graph::new(r * c, edges)
            }
            Named::Path(n) => Graph::new(n, (1..n).map(|i| (i, i + 1))),
            Named::Empty(n) => Graph::empty(n),
            // K_{2,2,2}: antipodal pairs {1,2}, {3,4}, {5,6}
            Named::Octahedron => Graph::new(
                6,
                all_pairs(1..=6).filter(|&(u, v)| !(u % 2 == 1 && v == u + 1)),
            ),
            Named::Icosahedron => {
                let mut edges = Vec::new();
                for k in 0..5 {
                    let upper = 2 + k;
                    let upper_next = 2 + (k + 1) % 5;
                    let lower = 7 + k;
                    let lower_next = 7 + (k + 1) % 5;
                    edges.extend([
                        (1, upper),
                        (upper, upper_next),
                        (upper, lower),
                        (upper, lower_next),
                        (lower, lower_next),
                        (lower, 12),
                    ]);
                }
                Graph::new(12, edges)
            }
        }
    }
}

fn all_pairs(range: std::ops::RangeInclusive<usize>) -> impl Iterator<Item = (usize, usize)> {
    let (lo, hi) = (*range.start(), *range.end());
    (lo..=hi).flat_map(move |u| (u + 1..=hi).map(move |v| (u, v)))
}

/// Builds a catalog graph from an identifier and size parameters.
pub fn make_named(name: &str, params: &[usize]) -> Result<Graph> {
    Named::from_parts(name, params)?.build()
}

/// An Erdős–Rényi graph on `n` vertices keeping each pair with probability
/// `percent / 100`.
pub fn random_graph<R: rand::Rng + ?Sized>(n: usize, percent: u32, rng: &mut R) -> Result<Graph> {
    let edges: Vec<(usize, usize)> = all_pairs(1..=n)
        .filter(|_| rng.gen_range(0..100) < percent)
        .collect();
    Graph::new(n, edges)
}

/// Builds a catalog graph from a compact name like `K5` or `grid3x3`.
pub fn parse_named(text: &str) -> Result<Graph> {
    Named::parse_short(text)?.build()
}
