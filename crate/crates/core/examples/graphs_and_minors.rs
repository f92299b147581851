//! Builds catalog graphs, lists their chordless cycles and asks which of
//! K4, K5 - e and K5 they contain as minors.

use cutnorm::{minor_profile, minors, parse_named, Budget};

fn main() {
    for name in ["K4", "W5", "K3,3", "prism", "octahedron", "V8", "K5", "icosahedron"] {
        let g = parse_named(name).unwrap();
        let p = minor_profile(&g);
        println!(
            "{name:<12} n={:<2} m={:<2} chordless cycles={:<4} K4-free={} K5-e-free={} K5-free={}",
            g.n(),
            g.m(),
            g.induced_cycles().len(),
            p.k4_free,
            p.k5e_free,
            p.k5_free
        );
    }

    // branch sets are returned and can be checked independently
    let v8 = parse_named("V8").unwrap();
    let pattern = minors::k5_minus_edge();
    let w = minors::find_minor(&v8, &pattern, &Budget::unlimited()).unwrap().unwrap();
    w.validate(&v8, &pattern).unwrap();
    println!("K5 - e in V8 via branch sets {:?}", w.branch_sets);

    let g = parse_named("W5").unwrap();
    let (d, _) = g.delete_edge(0).unwrap();
    println!("W5 minus {:?}: m={}, contracted: n={}", g.edges()[0], d.m(), g.contract_edge(0).unwrap().n());
}
