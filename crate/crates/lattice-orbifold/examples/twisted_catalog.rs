//! Lists the inequivalent twisted modules for a few ternary codes.

use lattice_orbifold::codes::{tetracode, Code, CodeKind, Z3Word};
use lattice_orbifold::groups::ExtensionKind;
use lattice_orbifold::twisted_rep::catalog;

fn main() {
    let codes = [
        ("zero code, length 1", Code::zero(CodeKind::Z3, 1)),
        ("<111>", Code::z3_code(3, &[Z3Word::from_ints(&[1, 1, 1])]).expect("code")),
        ("tetracode", tetracode()),
    ];
    for (name, d) in codes {
        for kind in [ExtensionKind::Twisted, ExtensionKind::TwistedSquare] {
            let entries = catalog(kind, &d).expect("self-orthogonal code");
            println!("{name}, {kind:?}: {} classes (dual quotient {})", entries.len(), d.z3_dual_quotient().len());
            for e in entries {
                println!("  {e}");
            }
        }
    }
}
