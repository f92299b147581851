//! The non-homogeneous Hilbert-basis property holds for K5 at low degree
//! even though the homogenised semigroup already has a hole.

use cutnorm::{find_hole, hilbert_check, parse_named, Budget};

fn main() {
    let k5 = parse_named("K5").unwrap();
    for bound in 2..=4 {
        let v = hilbert_check(&k5, bound, &Budget::unlimited()).unwrap();
        println!("hilbert_check(K5, {bound}) = {v:?}");
    }
    let hole = find_hole(&k5, 9).unwrap().unwrap();
    println!("homogeneous hole: {}", hole.point);
}
