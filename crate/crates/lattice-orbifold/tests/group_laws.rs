mod common;

use common::*;
use lattice_orbifold::codes::{Code, CodeKind};
use lattice_orbifold::groups::*;
use lattice_orbifold::lattice::{root, GluedLattice, LatticeVector};
use rand::Rng;

const KINDS: [ExtensionKind; 3] = [ExtensionKind::Untwisted, ExtensionKind::Twisted, ExtensionKind::TwistedSquare];

fn random_element(r: &mut impl Rng, lat: &GluedLattice) -> GroupElement {
    GroupElement::new(r.gen_range(0..24), random_vector(r, lat))
}

fn integral() -> Vec<GluedLattice> {
    sample_lattices().into_iter().filter(|l| l.is_integral()).collect()
}

#[test]
fn associativity() {
    let mut r = rng(1);
    for lat in sample_lattices() {
        let kinds: &[ExtensionKind] = if lat.is_integral() { &KINDS } else { &KINDS[..1] };
        for &kind in kinds {
            for _ in 0..300 {
                let (a, b, c) = (random_element(&mut r, &lat), random_element(&mut r, &lat), random_element(&mut r, &lat));
                let left = mult(kind, &mult(kind, &a, &b).unwrap(), &c).unwrap();
                let right = mult(kind, &a, &mult(kind, &b, &c).unwrap()).unwrap();
                assert_eq!(left, right, "{kind:?}");
            }
        }
    }
}

#[test]
fn inverses() {
    let mut r = rng(2);
    for lat in integral() {
        for kind in KINDS {
            for _ in 0..200 {
                let a = random_element(&mut r, &lat);
                let id = GroupElement::identity(lat.len());
                assert_eq!(mult(kind, &a, &inverse(kind, &a).unwrap()).unwrap(), id);
                assert_eq!(mult(kind, &inverse(kind, &a).unwrap(), &a).unwrap(), id);
            }
        }
    }
}

#[test]
fn tau_lift_is_order_three_automorphism() {
    let mut r = rng(3);
    for lat in integral().into_iter().filter(|l| l.is_tau_invariant()) {
        for kind in KINDS {
            for _ in 0..200 {
                let a = random_element(&mut r, &lat);
                let b = random_element(&mut r, &lat);
                let t3 = tau_lift(kind, &tau_lift(kind, &tau_lift(kind, &a)));
                assert_eq!(t3, a);
                let lhs = tau_lift(kind, &mult(kind, &a, &b).unwrap());
                let rhs = mult(kind, &tau_lift(kind, &a), &tau_lift(kind, &b)).unwrap();
                assert_eq!(lhs, rhs, "{kind:?}");
                assert_eq!(tau_lift(kind, &a).bar, a.bar.tau());
            }
        }
    }
}

#[test]
fn theta_lift_laws_on_even_lattices() {
    let mut r = rng(4);
    for lat in sample_lattices().into_iter().filter(|l| l.is_even() && l.is_tau_invariant()) {
        for _ in 0..300 {
            let a = random_element(&mut r, &lat);
            let b = random_element(&mut r, &lat);
            let ta = theta_lift(&a).unwrap();
            assert_eq!(theta_lift(&ta).unwrap(), a);
            assert_eq!(ta.bar, a.bar.neg());
            let u = ExtensionKind::Untwisted;
            assert_eq!(theta_lift(&tau_lift(u, &a)).unwrap(), tau_lift(u, &ta));
            let ab = mult(u, &a, &b).unwrap();
            assert_eq!(theta_lift(&ab).unwrap(), mult(u, &ta, &theta_lift(&b).unwrap()).unwrap());
        }
    }
}

#[test]
fn theta_on_the_ternary_part_negates() {
    let d = tetracode();
    let lat = GluedLattice::new(Code::zero(CodeKind::K, 4), d).unwrap();
    let mut r = rng(5);
    for _ in 0..200 {
        let v = random_vector(&mut r, &lat);
        assert_eq!(theta_lift(&GroupElement::lift(v.clone())).unwrap(), GroupElement::lift(v.neg()));
    }
}

#[test]
fn commutators() {
    let mut r = rng(6);
    for lat in sample_lattices() {
        for _ in 0..300 {
            let a = random_element(&mut r, &lat);
            let b = random_element(&mut r, &lat);
            let id = GroupElement::identity(lat.len());
            let cu = commutator(ExtensionKind::Untwisted, &a, &b).unwrap();
            assert_eq!(cu, id.times_kappa(c0(&a.bar, &b.bar)));
            if lat.is_even() {
                let pairing = a.bar.pair6(&b.bar) / 6;
                assert_eq!(cu, id.times_kappa(12 * pairing));
            }
            if lat.is_integral() {
                let ct = commutator(ExtensionKind::Twisted, &a, &b).unwrap();
                assert_eq!(ct, id.times_kappa(c0_tau(&a.bar, &b.bar).unwrap()));
                let ct2 = commutator(ExtensionKind::TwistedSquare, &a, &b).unwrap();
                assert_eq!(ct2, id.times_kappa(c0_twisted(2, &a.bar, &b.bar).unwrap()));
            }
        }
    }
}

#[test]
fn cocycle_identities() {
    let mut r = rng(7);
    for lat in sample_lattices() {
        for _ in 0..300 {
            let a = random_vector(&mut r, &lat);
            let b = random_vector(&mut r, &lat);
            let sixfold: i64 = a
                .coords
                .iter()
                .zip(&b.coords)
                .map(|(m, n)| 6 * (m[0] * n[1] - m[1] * n[0]))
                .sum();
            assert_eq!(c0(&a, &b), sixfold.rem_euclid(24));
            if a.pair6(&b) % 6 == 0 && a.pair6(&b.tau()) % 6 == 0 {
                let expect = 12 * a.pair6(&b) / 6 + 24 * a.pair6(&b.tau()) / 6;
                assert_eq!(c0(&a, &b), expect.rem_euclid(24));
            }
            if lat.is_integral() {
                let lhs = eps0(&a, &b).unwrap() - eps0(&b, &a).unwrap();
                let rhs = c0(&a, &b) - c0_tau(&a, &b).unwrap();
                assert_eq!(lhs.rem_euclid(24), rhs.rem_euclid(24));
                assert_eq!(c0_tau(&a, &b).unwrap(), c0_tau_explicit(&a, &b), "{a} {b}");
            }
        }
    }
}

#[test]
fn twisted_rejects_nonintegral_pairs() {
    let a = GroupElement::lift(LatticeVector::new(vec![[1, 0]]));
    // ⟨τ²β̃₁, β̃₁⟩ = −1/2
    assert!(mult(ExtensionKind::Twisted, &a, &a).is_err());
    assert!(mult(ExtensionKind::Untwisted, &a, &a).is_ok());
}

#[test]
fn documented_examples() {
    let b1 = LatticeVector::new(vec![root(1)]);
    let b2 = LatticeVector::new(vec![root(2)]);
    let u = ExtensionKind::Untwisted;
    let (x, y) = (GroupElement::lift(b1.clone()), GroupElement::lift(b2.clone()));
    assert_eq!(mult(u, &x, &y).unwrap(), mult(u, &y, &x).unwrap());
    let general = (0..3).map(|s| LatticeVector::root_at(3, s, 1));
    // (κ₃e^{β^{(1)}})^{m₁}(κ₃e^{β^{(2)}})^{m₂}(κ₃e^{β^{(3)}})^{m₃} = κ₃^{m·m} e^{Σ m_s β^{(s)}}
    let t = ExtensionKind::Twisted;
    let m = [2i64, -1, 1];
    let mut acc = GroupElement::identity(3);
    let mut bar = LatticeVector::zero(3);
    for (s, v) in general.enumerate() {
        let g = GroupElement::lift(v.clone()).times_kappa(8);
        acc = mult(t, &acc, &power(t, &g, m[s]).unwrap()).unwrap();
        bar = bar.add(&v.scale(m[s]));
    }
    let mm: i64 = m.iter().map(|x| x * x).sum();
    assert_eq!(acc, GroupElement::lift(bar).times_kappa(8 * mm));
}
