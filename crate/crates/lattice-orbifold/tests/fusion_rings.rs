mod common;

use std::time::Instant;

use common::{tetracode, zw};
use lattice_orbifold::characters::{Ambient, LabelKind, ModuleLabel};
use lattice_orbifold::codes::{Code, CodeKind};
use lattice_orbifold::fusion::{check_ring, fuse_d, fuse_labels, fuse_ll, fuse_vl, FusionLabel, FusionVector, Product, Ring};

fn label(s: &str, amb: &Ambient) -> LabelKind {
    ModuleLabel::parse(s, amb.clone()).unwrap().kind
}

fn module(s: &str, amb: &Ambient) -> FusionLabel {
    FusionLabel::Module(label(s, amb))
}

fn repetition() -> Code {
    Code::z3_code(3, &[zw(&[1, 1, 1])]).unwrap()
}

#[test]
fn rank_two_ring_is_commutative_and_associative() {
    let r = check_ring(&Ring::Rank2).unwrap();
    assert!(r.passed(), "{:?}", &r.violations[..r.violations.len().min(5)]);
    // untwisted × untwisted is always defined
    assert!(r.pairs_checked >= 15 * 15);
    assert!(r.triples_checked > 15 * 15 * 15);
}

#[test]
fn tensor_power_rule_agrees_with_rank_two_table() {
    let labels = Ring::Rank2.labels().unwrap();
    for a in &labels {
        for b in &labels {
            let (FusionLabel::Module(x), FusionLabel::Module(y)) = (a, b) else { unreachable!() };
            assert_eq!(fuse_ll(1, x, y).unwrap(), fuse_vl(a, b), "{a} × {b}");
        }
    }
}

#[test]
fn rank_four_ring_is_consistent() {
    let t = Instant::now();
    let r = check_ring(&Ring::Free(2)).unwrap();
    assert!(r.passed(), "{:?}", &r.violations[..r.violations.len().min(5)]);
    assert_eq!(Ring::Free(2).labels().unwrap().len(), 27 + 45 + 54);
    eprintln!("ℓ = 2 ring: {} triples in {:?}", r.triples_checked, t.elapsed());
}

#[test]
fn tensor_power_examples() {
    let amb = Ambient::Free(2);
    let got = fuse_ll(2, &label("V(c0,00)", &amb), &label("V(0c,00)", &amb)).unwrap();
    // (c,0) + τ^j(0,c) for j = 0, 1, 2
    let mut want = FusionVector::default();
    for l in ["V(cc,00)", "V(ca,00)", "V(cb,00)"] {
        want.add(module(l, &amb), 1);
    }
    assert_eq!(got, Product::Defined(want));
    let got = fuse_ll(2, &label("V(c0,10)", &amb), &label("V(c0,02)", &amb)).unwrap();
    assert_eq!(got.to_string(), "V(00,12)[0] + V(00,12)[1] + V(00,12)[2] + 2 V(c0,12)");
    let got = fuse_ll(2, &label("V(00,10)[1]", &amb), &label("T(21,1)[1]", &amb)).unwrap();
    assert_eq!(got, Product::Defined(FusionVector::single(module("T(11,1)[2]", &amb))));
}

#[test]
fn coset_ring_over_repetition_code() {
    let d = repetition();
    let amb = Ambient::glued(Code::zero(CodeKind::K, 3), d.clone()).unwrap();
    let r = check_ring(&Ring::Coset(d.clone())).unwrap();
    assert!(r.passed(), "{:?}", &r.violations[..r.violations.len().min(5)]);
    let vacuum = label("V(000,000)[0]", &amb);
    for l in Ring::Coset(d.clone()).labels().unwrap() {
        let FusionLabel::Module(k) = &l else { unreachable!() };
        assert_eq!(fuse_d(&d, &vacuum, k).unwrap(), Product::Defined(FusionVector::single(l.clone())));
    }
    // γ not reduced modulo D is normalized: 111 ∈ D
    let got = fuse_d(&d, &label("V(000,111)[1]", &amb), &label("V(000,120)[1]", &amb)).unwrap();
    assert_eq!(got, Product::Defined(FusionVector::single(module("V(000,120)[2]", &amb))));
    let got = fuse_d(&d, &label("V(000,120)[1]", &amb), &label("T(000,1)[0]", &amb)).unwrap();
    assert_eq!(got, Product::Defined(FusionVector::single(module("T(210,1)[1]", &amb))));
    let got = fuse_d(&d, &label("V(c00,000)", &amb), &label("V(0c0,000)", &amb)).unwrap();
    assert_eq!(got.defined().unwrap().total(), 3);
}

#[test]
fn labels_over_different_lattices_do_not_multiply() {
    let a = ModuleLabel::parse("V(0,0)[0]", Ambient::Free(1)).unwrap();
    let amb = Ambient::glued(Code::zero(CodeKind::K, 4), tetracode()).unwrap();
    let b = ModuleLabel::parse("V(0000,0000)[0]", amb).unwrap();
    assert!(fuse_labels(&a, &b).is_err());
    assert!(fuse_labels(&a, &a).is_ok());
}
