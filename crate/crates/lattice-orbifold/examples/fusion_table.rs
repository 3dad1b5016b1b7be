//! Prints the fusion table of the thirty rank-2 modules and checks the ring axioms.

use lattice_orbifold::fusion::{check_ring, Ring};

fn main() {
    let ring = Ring::Rank2;
    let labels = ring.labels().expect("labels");
    for (i, a) in labels.iter().enumerate() {
        for b in &labels[i..] {
            println!("{a} × {b} = {}", ring.fuse(a, b).expect("product"));
        }
    }
    let report = check_ring(&ring).expect("ring");
    println!(
        "commutative on {} pairs, associative on {} triples: {}",
        report.pairs_checked,
        report.triples_checked,
        report.passed()
    );
}
