//! Cut vectors of a triangle and the three membership oracles: lattice,
//! cone and semigroup.

use cutnorm::{cut_generators, decompose, in_cone, in_lattice, parse_named, CutBasis, HomPoint};

fn main() {
    let k3 = parse_named("K3").unwrap();
    for c in cut_generators(&k3).unwrap().generators {
        println!("shore {:?} -> {:?}", c.shore.to_vec(), c.coords);
    }

    let basis = CutBasis::new(&k3).unwrap();
    for text in ["1 1 0 ; 1", "1 1 1 ; 2", "2 2 2 ; 3", "1 2 1 ; 2", "3 1 0 ; 2"] {
        let p: HomPoint = text.parse().unwrap();
        let lattice = in_lattice(&k3, &p).unwrap();
        let cone = in_cone(&k3, &p).unwrap();
        let shores = decompose(&k3, &p).unwrap().map(|d| d.shores(&basis).iter().map(|s| s.to_vec()).collect::<Vec<_>>());
        println!("{text:<12} lattice={lattice:<5} cone={cone:<5} semigroup={shores:?}");
    }
}
