#![allow(dead_code)]

use lattice_orbifold::codes::{Code, KWord, Z3Word};
use lattice_orbifold::lattice::{coset_vector, CosetLabel, GluedLattice, LatticeVector};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn kw(s: &str) -> KWord {
    KWord::parse(s).unwrap()
}

pub fn zw(v: &[i64]) -> Z3Word {
    Z3Word::from_ints(v)
}

pub fn tetracode() -> Code {
    Code::z3_code(4, &[zw(&[1, 1, 1, 0]), zw(&[1, -1, 0, 1])]).unwrap()
}

/// A random vector of `lat` with small offsets.
pub fn random_vector(r: &mut impl Rng, lat: &GluedLattice) -> LatticeVector {
    let cw = lat.c.k_words();
    let dw = lat.d.z3_words();
    let label = CosetLabel::new(cw.choose(r).unwrap().clone(), dw.choose(r).unwrap().clone());
    let offs: Vec<[i64; 2]> = (0..lat.len()).map(|_| [r.gen_range(-3..=3), r.gen_range(-3..=3)]).collect();
    coset_vector(&label, &offs).unwrap()
}

/// Lattices used by the randomized suites: a few even and non-even codes at ℓ ≤ 3.
pub fn sample_lattices() -> Vec<GluedLattice> {
    use lattice_orbifold::codes::CodeKind;
    vec![
        GluedLattice::new(Code::zero(CodeKind::K, 1), Code::zero(CodeKind::Z3, 1)).unwrap(),
        GluedLattice::new(Code::k_code(2, &[kw("aa"), kw("bb")]).unwrap(), Code::zero(CodeKind::Z3, 2)).unwrap(),
        GluedLattice::new(Code::zero(CodeKind::K, 3), Code::z3_code(3, &[zw(&[1, 1, 1])]).unwrap()).unwrap(),
        GluedLattice::new(
            Code::k_code(3, &[kw("aa0"), kw("0bb")]).unwrap(),
            Code::z3_code(3, &[zw(&[1, 1, 1])]).unwrap(),
        )
        .unwrap(),
    ]
}

/// Counts lattice vectors by `⟨v,v⟩/2` up to `max_half_norm`, via
/// Fincke-Pohst over an exact Gram matrix given in sixths.
pub fn short_vector_counts(gram6: &[Vec<i64>], max_half_norm: i64) -> Vec<u64> {
    let n = gram6.len();
    let g: Vec<Vec<f64>> = gram6.iter().map(|r| r.iter().map(|x| *x as f64 / 6.0).collect()).collect();
    // Cholesky-style quadratic form q_ii, q_ij.
    let mut q = g.clone();
    for i in 0..n {
        for j in i + 1..n {
            q[j][i] = q[i][j];
            q[i][j] /= q[i][i];
        }
        for k in i + 1..n {
            for l in k..n {
                q[k][l] -= q[k][i] * q[i][l];
            }
        }
    }
    let bound = 2.0 * max_half_norm as f64 + 1e-6;
    let mut counts = vec![0u64; max_half_norm as usize + 1];
    let mut x = vec![0i64; n];
    fn recurse(
        i: isize,
        q: &[Vec<f64>],
        gram6: &[Vec<i64>],
        x: &mut Vec<i64>,
        remaining: f64,
        counts: &mut [u64],
    ) {
        let n = q.len();
        if i < 0 {
            let mut s = 0i64;
            for a in 0..n {
                for b in 0..n {
                    s += x[a] * gram6[a][b] * x[b];
                }
            }
            assert_eq!(s % 12, 0, "odd vector in an even lattice");
            let h = (s / 12) as usize;
            if h < counts.len() {
                counts[h] += 1;
            }
            return;
        }
        let i = i as usize;
        let centre: f64 = -(i + 1..n).map(|j| q[i][j] * x[j] as f64).sum::<f64>();
        let radius = (remaining / q[i][i]).max(0.0).sqrt();
        let lo = (centre - radius).ceil() as i64;
        let hi = (centre + radius).floor() as i64;
        for v in lo..=hi {
            x[i] = v;
            let d = v as f64 - centre;
            recurse(i as isize - 1, q, gram6, x, remaining - q[i][i] * d * d, counts);
        }
        x[i] = 0;
    }
    recurse(n as isize - 1, &q, gram6, &mut x, bound, &mut counts);
    counts
}

pub fn gram6(lat: &GluedLattice) -> Vec<Vec<i64>> {
    let b = lat.basis();
    b.iter().map(|u| b.iter().map(|v| u.pair6(v)).collect()).collect()
}
