//! Finds the smallest-degree hole of the cut polytope of K5 and re-checks
//! it with the membership oracles.

use std::time::Instant;

use cutnorm::cutlattice::{in_cone, in_lattice};
use cutnorm::normality::find_hole;
use cutnorm::{decompose, parse_named};

fn main() {
    let k5 = parse_named("K5").unwrap();
    let start = Instant::now();
    let hole = find_hole(&k5, 9).unwrap().expect("K5 has a hole");
    println!("first hole at degree {}: {}", hole.point.alpha, hole.point);
    println!("found in {:.2?}", start.elapsed());
    println!("in lattice: {}", in_lattice(&k5, &hole.point).unwrap());
    println!("in cone:    {}", in_cone(&k5, &hole.point).unwrap());
    println!("decomposes: {}", decompose(&k5, &hole.point).unwrap().is_some());
}
