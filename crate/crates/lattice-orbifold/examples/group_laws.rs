//! Multiplies elements of the three central extensions of a small lattice
//! and shows the commutators and the lifted isometry.

use lattice_orbifold::codes::{Code, CodeKind, Z3Word};
use lattice_orbifold::groups::{commutator, mult, tau_lift, ExtensionKind, GroupElement};
use lattice_orbifold::lattice::{GluedLattice, LatticeVector};

fn main() {
    let d = Code::z3_code(3, &[Z3Word::from_ints(&[1, 1, 1])]).expect("code");
    let lat = GluedLattice::new(Code::zero(CodeKind::K, 3), d).expect("lattice");
    let a = GroupElement::lift(LatticeVector::root_at(3, 0, 1));
    let b = GroupElement::lift(LatticeVector::root_at(3, 0, 2).add(&LatticeVector::root_at(3, 1, 1)));
    println!("lattice of rank {}, even {}", lat.rank(), lat.is_even());
    for kind in [ExtensionKind::Untwisted, ExtensionKind::Twisted, ExtensionKind::TwistedSquare] {
        let ab = mult(kind, &a, &b).expect("integral pair");
        let comm = commutator(kind, &a, &b).expect("integral pair");
        let t = tau_lift(kind, &a);
        println!("{kind:?}");
        println!("  a·b       = {ab:?}");
        println!("  [a, b]    = {comm:?}");
        println!("  τ(a)      = {t:?}");
        println!("  τ³(a) = a : {}", tau_lift(kind, &tau_lift(kind, &t)) == a);
    }
}
