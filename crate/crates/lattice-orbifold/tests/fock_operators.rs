mod common;

use common::{rng, zw};
use lattice_orbifold::codes::{Code, CodeKind, Z3Word};
use lattice_orbifold::fock::tables::{check_tables, h_vectors, omega};
use lattice_orbifold::fock::untwisted::UntwistedSector;
use lattice_orbifold::fock::{twisted_coeff, zero_mode, zhu_star, TwistedEngine, TwistedState, UntwistedState};
use lattice_orbifold::groups::ExtensionKind;
use lattice_orbifold::lattice::{GluedLattice, LatticeVector};
use lattice_orbifold::scalars::{int, rat, Cyclotomic};
use rand::Rng;

fn three_site() -> GluedLattice {
    GluedLattice::new(Code::zero(CodeKind::K, 3), Code::z3_code(3, &[zw(&[1, 1, 1])]).unwrap()).unwrap()
}

#[test]
fn tables_hold_on_three_sites() {
    for kind in [ExtensionKind::Twisted, ExtensionKind::TwistedSquare] {
        for eta in [zw(&[0, 0, 0]), zw(&[1, 2, 0])] {
            let e = TwistedEngine::new(kind, three_site(), eta.clone()).unwrap();
            let rows = check_tables(&e).unwrap();
            // 3 basis vectors, 3 sites, 12 identities
            assert_eq!(rows.len(), 3 * 3 * 12);
            assert!(rows.iter().all(|r| r.ok), "{kind:?} {eta}");
        }
    }
}

#[test]
fn residue_is_eta_minus_gamma_for_tau_and_eta_plus_gamma_for_square() {
    for (kind, sign) in [(ExtensionKind::Twisted, -1), (ExtensionKind::TwistedSquare, 1)] {
        let eta = zw(&[2, 1, 0]);
        let e = TwistedEngine::new(kind, three_site(), eta.clone()).unwrap();
        for gamma in e.module.basis().to_vec() {
            for s in 0..3 {
                let want = (eta.0[s] as i64 + sign * gamma.0[s] as i64).rem_euclid(3);
                assert_eq!(e.residue(s, &gamma).unwrap(), want);
            }
        }
    }
}

/// All monomials at site `s` of weight at most `max3/3` (variable modes in thirds).
fn monomials(max3: i64) -> Vec<Vec<i64>> {
    fn rec(rem: i64, smallest: i64, acc: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        out.push(acc.clone());
        let mut m = smallest;
        while -m <= rem {
            if m % 3 != 0 {
                acc.push(m);
                rec(rem + m, m, acc, out);
                acc.pop();
            }
            m -= 1;
        }
    }
    let mut out = Vec::new();
    rec(max3, -1, &mut Vec::new(), &mut out);
    out
}

#[test]
fn omega_spectrum_is_one_ninth_plus_thirds() {
    for kind in [ExtensionKind::Twisted, ExtensionKind::TwistedSquare] {
        let e = TwistedEngine::new(kind, GluedLattice::root_sum(2), Z3Word::zero(2)).unwrap();
        let w = omega(e.untwisted(), 0);
        let g = Z3Word::zero(2);
        for mono in monomials(5) {
            let mut st = e.top(&g);
            for m in &mono {
                st = e.raise(0, *m, &st).unwrap();
            }
            // a spectator variable on the other site is untouched
            st = e.raise(1, -1, &st).unwrap();
            let got = twisted_coeff(&e, &w, &int(1), &st).unwrap();
            let level: i64 = mono.iter().map(|m| -m).sum();
            let eig = rat(1, 9) + rat(level, 3);
            assert_eq!(got, st.scale(&Cyclotomic::from_rational(eig)), "{kind:?} {mono:?}");
        }
    }
}

#[test]
fn sigma_is_scalar_on_h_vectors() {
    let lat = three_site();
    for eta in lat.d.dual().z3_words() {
        let e = TwistedEngine::new(ExtensionKind::Twisted, lat.clone(), eta.clone()).unwrap();
        for gamma in e.module.basis().to_vec() {
            for code in 0..27 {
                let eps = [code % 3, (code / 3) % 3, code / 9];
                let want = Cyclotomic::zeta3(eps.iter().sum());
                for v in h_vectors(&e, &gamma, &eps).unwrap() {
                    assert_eq!(e.apply_sigma(&v), v.scale(&want), "{eta} {gamma} {eps:?}");
                }
            }
        }
    }
}

#[test]
fn h_vector_weights_match_epsilon() {
    let lat = three_site();
    let eta = zw(&[1, 0, 2]);
    let e = TwistedEngine::new(ExtensionKind::Twisted, lat, eta.clone()).unwrap();
    for gamma in e.module.basis().to_vec() {
        let eps = [1, 2, 0];
        for v in h_vectors(&e, &gamma, &eps).unwrap() {
            for ((m, _), _) in v.terms() {
                // weight ≡ ℓ/9 + (2/3)Σε + (2/3)wt(η) mod 1, in units of 1/18
                let w18 = e.weight18(m);
                let want = 2 * 3 + 12 * eps.iter().sum::<i64>() + 12 * eta.weight() as i64;
                assert_eq!((w18 - want).rem_euclid(18), 0);
            }
        }
    }
}

fn random_state(r: &mut impl Rng, sec: &UntwistedSector, weight: i64) -> UntwistedState {
    let len = sec.len;
    let roots: Vec<LatticeVector> = (0..len)
        .flat_map(|s| (0..3).map(move |i| LatticeVector::root_at(len, s, i)))
        .collect();
    let pick = |r: &mut dyn rand::RngCore| roots[r.gen_range(0..roots.len())].clone();
    let c = |r: &mut dyn rand::RngCore| Cyclotomic::from_int(r.gen_range(-2..=2));
    let mut out = UntwistedState::zero();
    match weight {
        1 => {
            out.add_assign(&sec.raise(&pick(r), 1, &sec.vacuum()).scale(&c(r)));
        }
        _ => {
            out.add_assign(&sec.raise(&pick(r), 2, &sec.vacuum()).scale(&c(r)));
            let a = pick(r);
            out.add_assign(&sec.raise(&a, 1, &sec.raise(&pick(r), 1, &sec.vacuum())).scale(&c(r)));
            out.add_assign(&sec.exp(&pick(r)).scale(&c(r)));
        }
    }
    out
}

#[test]
fn zero_modes_multiply_on_top_levels() {
    let sec = UntwistedSector::with_max_weight(1, 5);
    let probes: Vec<UntwistedState> = vec![
        sec.vacuum(),
        sec.exp(&LatticeVector::new(vec![[1, 0]])),
        sec.exp(&LatticeVector::new(vec![[-1, 0]])),
    ];
    let mut r = rng(11);
    for _ in 0..6 {
        let wu = r.gen_range(1..=2);
        let wv = r.gen_range(1..=2);
        let u = random_state(&mut r, &sec, wu);
        let v = random_state(&mut r, &sec, wv);
        let uv = zhu_star(&sec, &u, &v).unwrap();
        for p in &probes {
            let lhs = zero_mode(&sec, &uv, p).unwrap();
            let rhs = zero_mode(&sec, &u, &zero_mode(&sec, &v, p).unwrap()).unwrap();
            assert_eq!(lhs, rhs, "u = {u:?}, v = {v:?}, probe {p:?}");
        }
    }
}

#[test]
fn truncation_is_reported() {
    let e = TwistedEngine::new(ExtensionKind::Twisted, GluedLattice::root_sum(1), Z3Word::zero(1))
        .unwrap()
        .with_max_weight(1);
    let mut st: TwistedState = e.top(&Z3Word::zero(1));
    for _ in 0..4 {
        st = e.raise(0, -1, &st).unwrap();
    }
    let v = omega(e.untwisted(), 0);
    assert!(matches!(
        twisted_coeff(&e, &v, &int(1), &st),
        Err(lattice_orbifold::Error::Truncation(_))
    ));
}
