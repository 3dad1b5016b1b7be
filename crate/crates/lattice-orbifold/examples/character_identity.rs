//! Prints characters of a few rank-2 modules and checks the tensor
//! decomposition of a twisted module over the lattice glued by `<111>`.

use lattice_orbifold::characters::{char_report, verify_decomposition, Ambient, ModuleLabel};
use lattice_orbifold::codes::{Code, Z3Word};

fn main() {
    for text in ["V(0,0)[0]", "V(c,0)", "V(0,1)[0]", "T(0,1)[0]", "T(1,2)[2]"] {
        let label = ModuleLabel::parse(text, Ambient::Free(1)).expect("label");
        let r = char_report(&label, 18 * 2).expect("character");
        println!("{label}: {}", r.series);
    }
    let d = Code::z3_code(3, &[Z3Word::from_ints(&[1, 1, 1])]).expect("code");
    for eta in d.dual().z3_words() {
        for power in 1..=2 {
            let r = verify_decomposition(&d, &eta, power, 6 + 72).expect("decomposition");
            println!("η = {eta}, τ^{power}: {}", if r.passed() { "equal" } else { "DIFFERENT" });
        }
    }
}
