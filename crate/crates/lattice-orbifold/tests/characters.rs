mod common;

use std::collections::BTreeMap;

use common::{tetracode, zw};
use lattice_orbifold::characters::{
    char_report, character, labels, module_trace, verify_decomposition, Ambient, LabelKind, ModuleLabel,
};
use lattice_orbifold::codes::{all_k_words, all_z3_words, e8_codes, Code, CodeKind, KSym, KWord, Z3Word};
use lattice_orbifold::lattice::{site_coset, site_pair6, site_tau};
use lattice_orbifold::scalars::{rat, Cyclotomic, QSeries};

/// `τ` on the coordinate basis of one site: column `k` is the image of basis vector `k`.
const TAU: [[i64; 2]; 2] = [[1, 1], [-3, -2]];

fn tau_power(t: usize) -> [[i64; 2]; 2] {
    let mut m = [[1, 0], [0, 1]];
    for _ in 0..t {
        let mut n = [[0; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                n[i][j] = (0..2).map(|k| TAU[i][k] * m[k][j]).sum();
            }
        }
        m = n;
    }
    m
}

type Mono = Vec<(i64, usize)>;

/// Multisets of Heisenberg variables `b_k(−n)` of total level `w`.
fn monomials(w: i64) -> Vec<Mono> {
    fn rec(rem: i64, min: (i64, usize), acc: &mut Mono, out: &mut Vec<Mono>) {
        if rem == 0 {
            out.push(acc.clone());
            return;
        }
        for n in min.0..=rem {
            for k in 0..2 {
                if (n, k) < min {
                    continue;
                }
                acc.push((n, k));
                rec(rem - n, (n, k), acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(w, (1, 0), &mut Vec::new(), &mut out);
    out
}

/// Trace of `τ^t` on the level-`w` part of the rank-2 Heisenberg Fock space,
/// by expanding the image of every monomial.
fn heisenberg_trace(t: usize, w: i64) -> i64 {
    let m = tau_power(t);
    let mut total = 0;
    for mono in monomials(w) {
        let mut poly: BTreeMap<Mono, i64> = BTreeMap::from([(Vec::new(), 1)]);
        for &(n, k) in &mono {
            let mut next = BTreeMap::new();
            for (p, c) in &poly {
                for j in 0..2 {
                    let a = m[j][k];
                    if a == 0 {
                        continue;
                    }
                    let mut q = p.clone();
                    q.push((n, j));
                    q.sort();
                    *next.entry(q).or_insert(0) += c * a;
                }
            }
            poly = next;
        }
        total += poly.get(&mono).copied().unwrap_or(0);
    }
    total
}

/// Graded trace of `τ^t` on `V_{L_{(x,j)}}` up to weight 3, on the 1/18 grid.
fn brute_trace(x: KSym, j: u8, t: usize) -> BTreeMap<i64, i64> {
    let mut out = BTreeMap::new();
    for n1 in -8i64..=8 {
        for n2 in -12i64..=12 {
            let v = [n1, n2];
            let (cx, ci, _) = site_coset(v);
            if cx != x || ci != j {
                continue;
            }
            let e = 3 * site_pair6(v, v) / 2;
            if e > 54 {
                continue;
            }
            let mut image = v;
            for _ in 0..t {
                image = site_tau(image);
            }
            if image != v {
                continue;
            }
            // e^0 is the only fixed vector and the lift fixes it
            if t > 0 {
                assert_eq!(v, [0, 0]);
            }
            let mut level = 0;
            while e + 18 * level <= 54 {
                *out.entry(e + 18 * level).or_insert(0) += heisenberg_trace(t, level);
                level += 1;
            }
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

#[test]
fn untwisted_traces_match_state_enumeration() {
    for lambda in all_k_words(1) {
        for j in 0..3u8 {
            let eps = lambda.is_zero().then_some(0);
            let label = ModuleLabel::untwisted(Ambient::Free(1), lambda.clone(), Z3Word(vec![j]), eps).unwrap();
            // the label normalizes λ within its orbit; all orbit members have the same trace
            let sym = match &label.kind {
                LabelKind::Untwisted { lambda, .. } => lambda.0[0],
                _ => unreachable!(),
            };
            for t in 0..3 {
                let got = module_trace(&label, t as i64, 54).unwrap();
                let want = brute_trace(sym, j, t);
                let mut expect = QSeries::zero(54);
                for (e, c) in want {
                    expect.add_term(e, Cyclotomic::from_int(c));
                }
                assert_eq!(got, expect, "{label} t={t}");
            }
        }
    }
}

#[test]
fn lowest_weights_of_all_thirty_modules() {
    // lowest weight on the 1/18 grid
    let want = |k: &LabelKind| -> i64 {
        match k {
            LabelKind::Untwisted { lambda, gamma, eps } => match (lambda.is_zero(), gamma.0[0], eps) {
                (true, 0, Some(0)) => 0,
                (true, 0, _) => 18,
                (true, _, _) => 12,
                (false, 0, _) => 9,
                (false, _, _) => 3,
            },
            LabelKind::Twisted { eta, eps, .. } => match (eta.0[0] == 0, eps) {
                (true, 0) | (false, 2) => 2,
                (true, 2) | (false, 1) => 8,
                _ => 14,
            },
        }
    };
    let all = labels(&Ambient::Free(1)).unwrap();
    assert_eq!(all.len(), 30);
    for l in &all {
        let r = char_report(l, 40).unwrap();
        assert_eq!(r.lowest_exponent(), Some(want(&l.kind)), "{l}");
    }
    let vacuum = ModuleLabel::parse("V(0,0)[0]", Ambient::Free(1)).unwrap();
    assert_eq!(character(&vacuum, 10).unwrap().coeff(0), Cyclotomic::one());
}

#[test]
fn decomposition_over_the_repetition_code() {
    let d = Code::z3_code(3, &[zw(&[1, 1, 1])]).unwrap();
    let order = 2 * 3 + 72;
    for power in 1..=2 {
        for eta in d.dual().z3_words() {
            let r = verify_decomposition(&d, &eta, power, order).unwrap();
            assert!(r.passed(), "{eta} {power}: {r:?}");
        }
    }
}

#[test]
fn twisted_constant_term_is_size_of_code() {
    let d = Code::z3_code(3, &[zw(&[1, 1, 1])]).unwrap();
    let amb = Ambient::glued(Code::zero(CodeKind::K, 3), d).unwrap();
    let l = ModuleLabel::twisted(amb, Z3Word::zero(3), 1, 0).unwrap();
    let whole = module_trace(&l, 0, 30).unwrap();
    assert_eq!(whole.valuation(), Some(6));
    assert_eq!(whole.coeff(6), Cyclotomic::from_int(3));
}

/// Two copies of a hexacode: τ-invariant, self-dual, minimum weight 4.
fn double_hexacode() -> Code {
    let rows = ["a00aaa", "0a0abc", "00aacb"];
    let mut gens = Vec::new();
    for shift in [0, 6] {
        for r in rows {
            let mut w = KWord::zero(12);
            for (i, ch) in r.chars().enumerate() {
                w.0[shift + i] = KSym::parse(ch).unwrap();
            }
            gens.push(w.tau());
            gens.push(w);
        }
    }
    Code::k_code(12, &gens).unwrap()
}

fn triple_tetracode() -> Code {
    let mut gens = Vec::new();
    for shift in [0, 4, 8] {
        for g in tetracode().z3_generators() {
            let mut w = Z3Word::zero(12);
            w.0[shift..shift + 4].copy_from_slice(&g.0);
            gens.push(w);
        }
    }
    Code::z3_code(12, &gens).unwrap()
}

#[test]
fn nine_modules_for_self_dual_codes() {
    let c = double_hexacode();
    assert!(c.is_tau_invariant() && c.is_self_dual() && c.min_weight() == Some(4));
    let d = triple_tetracode();
    assert!(d.is_self_dual());
    let all = labels(&Ambient::glued(c, d).unwrap()).unwrap();
    assert_eq!(all.len(), 9);
}

#[test]
fn fixed_points_of_e8() {
    let (c, d) = e8_codes();
    let amb = Ambient::glued(c, d).unwrap();
    // minimum weight 2, outside the nine-module case
    assert!(labels(&amb).is_err());
    let vacuum = ModuleLabel::untwisted(amb.clone(), KWord::zero(4), Z3Word::zero(4), Some(0)).unwrap();
    // dim V_{E8}^τ at weight 1: (248 − 4 − 4)/3
    let fixed = character(&vacuum, 18).unwrap();
    assert_eq!(fixed.coeff(0), Cyclotomic::one());
    assert_eq!(fixed.coeff(18), Cyclotomic::from_int(80));
    let mut sum = QSeries::zero(36);
    for e in 0..3 {
        let l = ModuleLabel::untwisted(amb.clone(), KWord::zero(4), Z3Word::zero(4), Some(e)).unwrap();
        sum = sum.add(&character(&l, 36).unwrap());
    }
    assert_eq!(sum.coeff(18), Cyclotomic::from_int(248));
    assert_eq!(amb.lattice().theta_series(36).coeff(18), Cyclotomic::from_int(240));
}

#[test]
fn coset_classification_with_tetracode() {
    let amb = Ambient::glued(Code::zero(CodeKind::K, 4), tetracode()).unwrap();
    let all = labels(&amb).unwrap();
    // D is self-dual: one coset, so 3 + 85 + 6
    assert_eq!(all.len(), 3 + (256 - 1) / 3 + 6);
    assert!(labels(&Ambient::glued(Code::k_code(1, &[KWord::parse("a").unwrap()]).unwrap(), Code::zero(CodeKind::Z3, 1)).unwrap()).is_err());
}

#[test]
fn eigenspace_characters_have_integer_coefficients() {
    for l in labels(&Ambient::Free(2)).unwrap() {
        let s = character(&l, 40).unwrap();
        for (e, c) in s.terms() {
            let r = c.as_rational().unwrap_or_else(|| panic!("{l} at {e}: {c:?}"));
            assert!(r.is_integer() && r >= rat(0, 1), "{l} at {e}: {r}");
        }
    }
    assert_eq!(all_z3_words(2).len(), 9);
}
