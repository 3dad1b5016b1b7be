mod common;

use common::kw;
use lattice_orbifold::codes::{all_k_words, e8_codes, Code, CodeKind, KSym, KWord};
use lattice_orbifold::verify::*;
use num_rational::Ratio;
use num_traits::Zero;

type Q = Ratio<i64>;

/// `⟨β(x), β(y)⟩` from the table of glue vectors written as half-roots.
fn glue_pairing(x: KSym, y: KSym) -> Q {
    match (x.is_zero() || y.is_zero(), x == y) {
        (true, _) => Q::from_integer(0),
        (false, true) => Q::from_integer(1),
        (false, false) => Q::new(-1, 2),
    }
}

fn choose(x: Q, k: i64) -> Q {
    (0..k).fold(Q::from_integer(1), |acc, i| acc * (x - Q::from_integer(i)) / Q::from_integer(i + 1))
}

fn pairing(j: KSym, l: &KWord, eps: &[i64], sites: &[usize]) -> Q {
    sites.iter().map(|&s| glue_pairing(j, l.0[s]) * Q::from_integer(eps[s])).sum()
}

/// Independent survivor test with machine rationals and explicit subsets.
fn survives(l: &KWord) -> bool {
    let n = l.len();
    let half = Q::new(n as i64, 2);
    let off_c = !l.same_orbit(&KWord::constant(KSym::C, n));
    let all: Vec<usize> = (0..n).collect();
    for code in 0..1 << n {
        let eps: Vec<i64> = (0..n).map(|s| if code >> s & 1 == 1 { -1 } else { 1 }).collect();
        if off_c || n >= 4 {
            let sum: Q = [KSym::A, KSym::B, KSym::C]
                .iter()
                .map(|j| choose(pairing(*j, l, &eps, &all) + half, n as i64 + 1))
                .sum();
            if sum != Q::from_integer(0) {
                return false;
            }
        }
        if off_c {
            for mask in 1..1u32 << n {
                let s: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
                if 2 * s.len() > n {
                    continue;
                }
                for j in [KSym::A, KSym::B, KSym::C] {
                    if pairing(j, l, &eps, &s) == Q::from_integer(-(s.len() as i64))
                        && choose(pairing(j, l, &eps, &all) + half, n as i64 - 2 * s.len() as i64 + 1) != Q::from_integer(0)
                    {
                        return false;
                    }
                }
            }
        }
    }
    true
}

#[test]
fn survivors_match_independent_enumeration() {
    for n in [2, 4] {
        let want: Vec<KWord> = all_k_words(n).into_iter().filter(|l| !l.is_zero() && survives(l)).collect();
        assert_eq!(survivors(n).unwrap(), want, "length {n}");
    }
    assert_eq!(survivors(2).unwrap(), vec![kw("aa"), kw("bb"), kw("cc")]);
    assert_eq!(survivors(4).unwrap().len(), 42);
}

#[test]
fn survivors_avoid_odd_pairing_with_constant_c() {
    let c2 = KWord::constant(KSym::C, 2);
    for l in survivors(2).unwrap() {
        assert_eq!(l.pairing(&c2), 0);
    }
    for l in survivors(4).unwrap() {
        assert!(l.weight() < 4, "{l}");
    }
}

#[test]
fn binomial_values_agree_with_the_oracle() {
    for l in all_k_words(4).into_iter().filter(|l| !l.is_zero()).step_by(7) {
        for code in 0..16u32 {
            let eps: Vec<i64> = (0..4).map(|s| if code >> s & 1 == 1 { -1 } else { 1 }).collect();
            let all = [0, 1, 2, 3];
            let want: Q = [KSym::A, KSym::B, KSym::C]
                .iter()
                .map(|j| choose(pairing(*j, &l, &eps, &all) + Q::from_integer(2), 5))
                .sum();
            let got = binom_two(&l, code);
            assert_eq!(got.numer().to_string(), want.numer().to_string());
            assert_eq!(got.denom().to_string(), want.denom().to_string());
            for mask in [0b0001u32, 0b0110, 0b1001] {
                let s: Vec<usize> = (0..4).filter(|i| mask >> i & 1 == 1).collect();
                for j in [KSym::A, KSym::B, KSym::C] {
                    let hit = pairing(j, &l, &eps, &s) == Q::from_integer(-(s.len() as i64));
                    let want = if hit { choose(pairing(j, &l, &eps, &all) + Q::from_integer(2), 5 - 2 * s.len() as i64) } else { Q::from_integer(0) };
                    let got = binom_one(&l, code, mask, j);
                    assert_eq!(got.numer().to_string(), want.numer().to_string(), "{l} {code} {mask} {}", j.symbol());
                }
            }
        }
    }
}

#[test]
fn reference_instances() {
    assert!(binom_two(&kw("aa00"), 0).is_zero());
    assert_eq!(binom_two(&kw("cc"), 0).to_string(), "1");
    let r = check_binomial_identities(2).unwrap();
    assert!(r.passed());
    assert!(r.notes.iter().any(|n| n.contains("= 1")));
}

#[test]
fn top_realisable_words_pair_to_zero_with_the_constants() {
    for l in all_k_words(4).into_iter().filter(is_top_realisable) {
        for j in [KSym::A, KSym::B, KSym::C] {
            assert_eq!(l.pairing(&KWord::constant(j, 4)), 0);
        }
    }
}

#[test]
fn code_parity_checks() {
    let sample = default_code_sample();
    assert!(check_even_codes(&sample).passed());
    let (c, d) = e8_codes();
    assert!(c.is_even() && c.is_self_orthogonal() && c.is_tau_invariant());
    assert!(check_q_parity(&c).passed());
    assert_eq!(check_q_parity(&c).instances_checked, 16 * 16 + 1);
    assert!(check_q_parity(&Code::zero(CodeKind::K, 2)).passed());
    assert!(check_ternary_weight_shift(&d).passed());
    assert!(check_dual_sizes(&sample).passed());
    let zero = Code::zero(CodeKind::K, 3);
    assert!(check_even_codes(&[zero]).passed());
}

#[test]
fn witnesses_are_the_first_failures() {
    // a non-τ-invariant code fails its precondition with one witness
    let r = check_q_parity(&odd_q_code());
    assert!(!r.passed());
    assert_eq!(r.failures.len(), 1);
    let text = r.to_string();
    assert!(text.starts_with("[FAIL]"));
}
