//! Runs the combinatorial check suite. Pass `6` to include length 6.

use lattice_orbifold::verify::run_all;

fn main() {
    let extra = std::env::args().nth(1).map(|s| s.parse().expect("length"));
    let reports = run_all(extra).expect("valid length");
    for r in &reports {
        println!("{r}");
    }
    if reports.iter().any(|r| !r.passed()) {
        std::process::exit(1);
    }
}
