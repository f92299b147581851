//! Glues two K4s along a triangle and merges one decomposition from each
//! side into a decomposition on the glued graph.

use cutnorm::lifting::{merge_clique_sum, pattern_counts};
use cutnorm::{cut_vector, CliqueSumSpec, Graph, VertexSet};

fn shores(list: &[&[usize]]) -> Vec<VertexSet> {
    list.iter().map(|s| s.iter().copied().collect()).collect()
}

fn sum(g: &Graph, shores: &[VertexSet]) -> Vec<i64> {
    let mut x = vec![0; g.m()];
    for &s in shores {
        for (a, b) in x.iter_mut().zip(cut_vector(g, s).unwrap().coords) {
            *a += b;
        }
    }
    x
}

fn main() {
    let k4 = cutnorm::parse_named("K4").unwrap();
    let spec = CliqueSumSpec::new(k4.clone(), k4, vec![(1, 1), (2, 2), (3, 3)]).unwrap();
    let glued = spec.glue().unwrap().graph;
    println!("glued graph: n={} m={} edges {:?}", glued.n(), glued.m(), glued.edges());

    let dec1 = shores(&[&[1, 2], &[1, 4], &[2, 3, 4]]);
    let dec2 = shores(&[&[1, 2, 4], &[1, 4], &[2, 3]]);
    println!("pattern counts left  {:?}", pattern_counts(4, &[1, 2, 3], &dec1).unwrap());
    println!("pattern counts right {:?}", pattern_counts(4, &[1, 2, 3], &dec2).unwrap());

    let merged = merge_clique_sum(&spec, &dec1, &dec2).unwrap();
    let labels: Vec<Vec<usize>> = merged.iter().map(|s| s.to_vec()).collect();
    println!("merged shores {labels:?}");
    println!("sum on glued graph {:?}", sum(&glued, &merged));
    println!("left target        {:?}", sum(&spec.g1, &dec1));
    println!("right target       {:?}", sum(&spec.g2, &dec2));
}
