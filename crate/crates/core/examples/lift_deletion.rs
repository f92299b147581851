//! Restores a deleted edge: a decomposable point of C5 is lifted to the
//! 5-wheel, whose rim is that cycle.

use cutnorm::lifting::DeletionLift;
use cutnorm::{decompose, parse_named, CutBasis, HomPoint};

fn main() {
    let w5 = parse_named("W5").unwrap();
    let e0 = w5.edge_index(1, 2).unwrap();
    let lift = DeletionLift::new(&w5, e0).unwrap();
    let (smaller, _) = w5.delete_edge(e0).unwrap();
    println!("W5 minus edge {:?}: {} edges", w5.edges()[e0], smaller.m());

    // two cuts of W5 \ e, added up
    let basis = CutBasis::new(&smaller).unwrap();
    let (a, b) = (&basis.generators[3].coords, &basis.generators[6].coords);
    let x: Vec<i64> = a.iter().zip(b).map(|(u, v)| u + v).collect();
    let bounds = lift.bounds(&x, 2).unwrap();
    println!(
        "gamma in [{}, {}] with parity {:?}; admissible {:?}",
        bounds.lower,
        bounds.upper,
        bounds.parity,
        bounds.admissible()
    );
    let p: HomPoint = lift.lift(&x, 2).unwrap();
    println!("lifted point {p}");
    let d = decompose(&w5, &p).unwrap().expect("W5 is normal");
    let shores: Vec<Vec<usize>> = d.shores(&CutBasis::new(&w5).unwrap()).iter().map(|s| s.to_vec()).collect();
    println!("decomposes on W5 as {shores:?}");
}
