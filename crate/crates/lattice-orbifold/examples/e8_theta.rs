//! Builds E8 and its √2-scaled sublattice from codes and prints their theta series.

use lattice_orbifold::codes::{e8_codes, Code, CodeKind};
use lattice_orbifold::lattice::GluedLattice;

fn main() {
    let (c, d) = e8_codes();
    let e8 = GluedLattice::new(c, d.clone()).expect("E8 codes");
    println!("E8: rank {}, det {}, even {}", e8.rank(), e8.determinant(), e8.is_even());
    println!("  theta = {}", e8.theta_series(18 * 4));

    let scaled = GluedLattice::new(Code::zero(CodeKind::K, 4), d).expect("tetracode");
    println!("sqrt2 E8: det {}, even {}", scaled.determinant(), scaled.is_even());
    println!("  theta = {}", scaled.theta_series(18 * 4));
}
