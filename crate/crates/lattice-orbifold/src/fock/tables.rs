//! The weight-2 and weight-3 generators `ω^{(s)}`, `P^{(s)}`, `J^{(s)}` and
//! their action on the low-weight part of a twisted module.

use super::twisted::{twisted_coeff, TwistedEngine, TwistedState};
use super::untwisted::{UntwistedSector, UntwistedState};
use crate::codes::Z3Word;
use crate::lattice::LatticeVector;
use crate::scalars::{int, rat, Cyclotomic};
use crate::Result;

fn beta(len: usize, s: usize, i: i64) -> LatticeVector {
    LatticeVector::root_at(len, s, i)
}

/// `ω^{(s)} = (1/12) Σ_i β_i^{(s)}(−1)² 1`.
pub fn omega(sector: &UntwistedSector, s: usize) -> UntwistedState {
    let mut out = UntwistedState::zero();
    for i in 0..3 {
        let b = beta(sector.len, s, i);
        out.add_assign(&sector.raise(&b, 1, &sector.raise(&b, 1, &sector.vacuum())));
    }
    out.scale(&Cyclotomic::from_rational(rat(1, 12)))
}

/// `e^{β} − e^{−β}`.
fn odd_exp(sector: &UntwistedSector, b: &LatticeVector) -> UntwistedState {
    sector.exp(b).sub(&sector.exp(&b.neg()))
}

/// `P^{(s)} = Σ_i (e^{β_i} − e^{−β_i})`.
pub fn p_element(sector: &UntwistedSector, s: usize) -> UntwistedState {
    let mut out = UntwistedState::zero();
    for i in 0..3 {
        out.add_assign(&odd_exp(sector, &beta(sector.len, s, i)));
    }
    out
}

/// `J^{(s)} = −(1/6) Σ_i β_i(−2)(β_{i+1} − β_{i+2})(−1) 1
///           − Σ_i (β_{i+1} − β_{i+2})(−1)(e^{β_i} − e^{−β_i})`.
pub fn j_element(sector: &UntwistedSector, s: usize) -> UntwistedState {
    let len = sector.len;
    let mut first = UntwistedState::zero();
    let mut second = UntwistedState::zero();
    for i in 0..3 {
        let diff = beta(len, s, i + 1).sub(&beta(len, s, i + 2));
        let bi = beta(len, s, i);
        first.add_assign(&sector.raise(&bi, 2, &sector.raise(&diff, 1, &sector.vacuum())));
        second.add_assign(&sector.raise(&diff, 1, &odd_exp(sector, &bi)));
    }
    first
        .scale(&Cyclotomic::from_rational(rat(-1, 6)))
        .sub(&second)
}

/// Which generator acts, and through which mode.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    /// `ω^{(s)}_1`
    Omega,
    /// `P^{(s)}_1`
    P,
    /// `J^{(s)}_2`
    J,
}

impl Generator {
    pub const ALL: [Generator; 3] = [Generator::Omega, Generator::P, Generator::J];

    pub fn name(self) -> &'static str {
        match self {
            Generator::Omega => "omega_1",
            Generator::P => "P_1",
            Generator::J => "J_2",
        }
    }

    fn mode(self) -> i64 {
        match self {
            Generator::J => 2,
            _ => 1,
        }
    }

    pub fn element(self, sector: &UntwistedSector, s: usize) -> UntwistedState {
        match self {
            Generator::Omega => omega(sector, s),
            Generator::P => p_element(sector, s),
            Generator::J => j_element(sector, s),
        }
    }
}

/// The four probe states at site `s`: `1`, `b₂(−1/3)`, `b₁(−2/3)`, `b₂(−1/3)²`,
/// each tensored with `v_γ`.
pub fn probes(engine: &TwistedEngine, s: usize, gamma: &Z3Word) -> Result<[TwistedState; 4]> {
    let top = engine.top(gamma);
    let h2 = engine.raise(s, -1, &top)?;
    let h1 = engine.raise(s, -2, &top)?;
    let h22 = engine.raise(s, -1, &h2)?;
    Ok([top, h2, h1, h22])
}

pub const PROBE_NAMES: [&str; 4] = ["1", "h2(-1/3)", "h1(-2/3)", "h2(-1/3)^2"];

/// `g · probe`, as the coefficients on the probe basis together with any
/// part of the result that falls outside it.
pub fn act(engine: &TwistedEngine, g: Generator, s: usize, gamma: &Z3Word) -> Result<Vec<(TwistedState, TwistedState)>> {
    let v = g.element(engine.untwisted(), s);
    let ps = probes(engine, s, gamma)?;
    ps.iter()
        .map(|p| Ok((p.clone(), twisted_coeff(engine, &v, &int(g.mode()), p)?)))
        .collect()
}

/// Expected action for residue `j`: row `k` lists the coefficients of the
/// image of probe `k` on the four probes.  `sign` is `1` for `τ` and `−1`
/// for `τ²`, where only `J` changes sign.
pub fn expected(g: Generator, j: i64, sign: i64) -> [[Cyclotomic; 4]; 4] {
    let z = Cyclotomic::zeta3(j);
    let zb = Cyclotomic::zeta3(-j);
    let diff = &z - &zb;
    let sum = &z + &zb;
    let r = Cyclotomic::sqrt_minus_3();
    let q = |n: i64, d: i64| Cyclotomic::from_rational(rat(n, d));
    let c = |a: i64, b: i64| q(a, 1) + sum.scale(&int(b));
    let zero = Cyclotomic::zero;
    match g {
        Generator::Omega => [
            [q(1, 9), zero(), zero(), zero()],
            [zero(), q(4, 9), zero(), zero()],
            [zero(), zero(), q(7, 9), zero()],
            [zero(), zero(), zero(), q(7, 9)],
        ],
        Generator::P => [
            [&diff * &q(-1, 9), zero(), zero(), zero()],
            [zero(), &diff * &q(5, 9), zero(), zero()],
            [zero(), zero(), &diff * &q(2, 9), sum.clone()],
            [zero(), zero(), &sum * &q(-2, 3), &diff * &q(-7, 9)],
        ],
        Generator::J => {
            let k = &r * &q(2 * sign, 81);
            let rs = &r * &q(sign, 1);
            [
                [&k * &c(1, 3), zero(), zero(), zero()],
                [zero(), &k * &c(-8, 3), zero(), zero()],
                [zero(), zero(), &k * &c(37, -24), &(&rs * &diff) * &q(-2, 3)],
                [zero(), zero(), &(&rs * &diff) * &q(4, 9), &k * &c(-17, -51)],
            ]
        }
    }
}

/// Coefficients of `st` on the four probes, and whether nothing else remains.
pub fn on_probes(probes: &[TwistedState; 4], st: &TwistedState) -> ([Cyclotomic; 4], bool) {
    let mut rest = st.clone();
    let coeffs: [Cyclotomic; 4] = std::array::from_fn(|k| {
        let (key, _) = probes[k].terms().next().expect("probe is a single term");
        let c = st.coeff(key);
        rest = rest.sub(&probes[k].scale(&c));
        c
    });
    (coeffs, rest.is_zero())
}

/// One row of the table check.
#[derive(Clone, Debug)]
pub struct TableRow {
    pub generator: Generator,
    pub probe: usize,
    pub site: usize,
    pub gamma: Z3Word,
    pub residue: i64,
    pub ok: bool,
}

/// Checks all twelve identities at every site and every basis vector of the module.
pub fn check_tables(engine: &TwistedEngine) -> Result<Vec<TableRow>> {
    let sign = if engine.power == 1 { 1 } else { -1 };
    let mut rows = Vec::new();
    let basis: Vec<Z3Word> = engine.module.basis().to_vec();
    for gamma in &basis {
        for s in 0..engine.len() {
            let j = engine.residue(s, gamma)?;
            let ps = probes(engine, s, gamma)?;
            for g in Generator::ALL {
                let want = expected(g, j, sign);
                for (k, (_, img)) in act(engine, g, s, gamma)?.into_iter().enumerate() {
                    let (got, clean) = on_probes(&ps, &img);
                    rows.push(TableRow {
                        generator: g,
                        probe: k,
                        site: s,
                        gamma: gamma.clone(),
                        residue: j,
                        ok: clean && got == want[k],
                    });
                }
            }
        }
    }
    Ok(rows)
}

/// Local spaces at one site: `C` for `(0,0), (1,2), (2,2)`; `b₂(−1/3)` for
/// `(0,2), (1,1), (2,1)`; `b₁(−2/3), b₂(−1/3)²` for `(0,1), (1,0), (2,0)`.
pub fn local_space(j: i64, k: i64) -> Vec<Vec<i64>> {
    let (j, k) = (j.rem_euclid(3), k.rem_euclid(3));
    match (j, k) {
        (0, 0) | (1, 2) | (2, 2) => vec![vec![]],
        (0, 2) | (1, 1) | (2, 1) => vec![vec![-1]],
        _ => vec![vec![-2], vec![-1, -1]],
    }
}

/// Spanning vectors of `H_{(η,γ,ε)} = ⊗_s H^{j_s, ε_s} ⊗ v_γ`, where `j_s`
/// is the residue of the module at site `s`.
pub fn h_vectors(engine: &TwistedEngine, gamma: &Z3Word, eps: &[i64]) -> Result<Vec<TwistedState>> {
    let mut states = vec![engine.top(gamma)];
    for (s, e) in eps.iter().enumerate() {
        let j = engine.residue(s, gamma)?;
        let mut next = Vec::new();
        for st in &states {
            for modes in local_space(j, *e) {
                let mut t = st.clone();
                for m in modes {
                    t = engine.raise(s, m, &t)?;
                }
                next.push(t);
            }
        }
        states = next;
    }
    Ok(states)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::ExtensionKind;
    use crate::lattice::GluedLattice;

    #[test]
    fn twelve_identities_on_one_site() {
        for kind in [ExtensionKind::Twisted, ExtensionKind::TwistedSquare] {
            for eta in 0..3 {
                let e = TwistedEngine::new(kind, GluedLattice::root_sum(1), Z3Word::from_ints(&[eta])).unwrap();
                let rows = check_tables(&e).unwrap();
                assert_eq!(rows.len(), 12);
                for r in rows {
                    assert!(r.ok, "{kind:?} eta={eta} {:?} probe {}", r.generator, r.probe);
                }
            }
        }
    }
}
