//! The Leech lattice from two copies of the hexacode and the ternary Golay
//! code (both read from `data/`).

use lattice_orbifold::codes::Code;
use lattice_orbifold::lattice::GluedLattice;

fn read(name: &str) -> Code {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name);
    Code::parse(&std::fs::read_to_string(&path).expect("data file")).expect("code file")
}

fn main() {
    let lat = GluedLattice::new(read("double_hexacode.code"), read("golay.code")).expect("length 12");
    println!("rank {}, det {}, even {}", lat.rank(), lat.determinant(), lat.is_even());
    println!("theta = {}", lat.theta_series(18 * 3));
}
