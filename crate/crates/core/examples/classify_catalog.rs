//! Runs the structural classifier over the catalog, then the bounded hole
//! search on whatever it leaves open.

use cutnorm::{classify_normality, parse_named, verify_normality, Budget, Status, VerifyMode};

fn main() {
    for name in ["K4", "K5", "K5-e", "W7", "K3,3", "C7", "prism", "octahedron", "V8"] {
        let g = parse_named(name).unwrap();
        let v = classify_normality(&g, &Budget::unlimited());
        print!("{name:<11} {:<17} [{}]", v.status.as_str(), v.rules.join(", "));
        if v.status == Status::Unknown {
            let s = verify_normality(&g, VerifyMode::Bounded(3), &Budget::unlimited()).unwrap();
            print!(" -> search: {} to degree {}", s.status.as_str(), s.search_degree);
        }
        println!();
    }
}
