//! Checks the action of the weight-1 and weight-2 generators on the lowest
//! twisted states, for every residue and both twists.

use lattice_orbifold::codes::Z3Word;
use lattice_orbifold::fock::tables::check_tables;
use lattice_orbifold::fock::TwistedEngine;
use lattice_orbifold::groups::ExtensionKind;
use lattice_orbifold::lattice::GluedLattice;

fn main() {
    for kind in [ExtensionKind::Twisted, ExtensionKind::TwistedSquare] {
        for eta in 0..3 {
            let engine = TwistedEngine::new(kind, GluedLattice::root_sum(1), Z3Word(vec![eta])).expect("engine");
            let rows = check_tables(&engine).expect("within weight bound");
            for r in &rows {
                println!(
                    "{kind:?} residue {} {:>3} probe {}: {}",
                    r.residue,
                    r.generator.name(),
                    r.probe,
                    if r.ok { "ok" } else { "FAIL" }
                );
            }
        }
    }
}
