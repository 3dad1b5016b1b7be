//! `S[σ] ⊗ T` for `σ = τ` or `τ²`: twisted vertex operators `W(e^{Δ_x} v, x)`.
//!
//! A creation variable is stored by its mode `k/3` (`k < 0`); it stands for
//! `b_r(k/3)` with `r = k mod 3`, where `b_r` spans the `ζ₃^r`-eigenspace of
//! `σ` at its site.  For `σ = τ` that is `h_r`; for `σ = τ²` it is `h_{3−r}`.

use std::collections::BTreeMap;

use super::delta::{apply_exp_delta, delta_constants, DeltaConstants};
use super::untwisted::{UVar, UntwistedSector, UntwistedState};
use super::{apply_vertex, differentiate, poly_times_state, Poly, Sector, State, X_DEN};
use crate::codes::Z3Word;
use crate::groups::{ExtensionKind, GroupElement};
use crate::lattice::{GluedLattice, LatticeVector, Site};
use crate::scalars::{int, rat, Cyclotomic, Rational};
use crate::twisted_rep::{t_action, TModule};
use crate::{Error, Result};

/// Creation variable at `site` with mode `mode3/3`, `mode3 < 0`, `3 ∤ mode3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TVar {
    pub site: usize,
    pub mode3: i64,
}

impl TVar {
    /// Eigenvalue class: `σ` acts on the variable by `ζ₃^class`.
    pub fn class(&self) -> i64 {
        self.mode3.rem_euclid(3)
    }
}

pub type TwistedState = State<TVar, Z3Word>;

/// `⟨v, h_j⟩` for a site vector in coordinates `β₁/2, (β₁ − β₂)/6`.
fn pair_h(v: Site, j: i64) -> Cyclotomic {
    let a = rat(v[0], 2) + rat(v[1], 6);
    let b = rat(v[1], 6);
    let z = Cyclotomic::zeta3(if j == 2 { 1 } else { 2 });
    (Cyclotomic::from_rational(a) - z.scale(&b)).scale(&int(2))
}

/// Fock space engine for one twisted module.
#[derive(Clone, Debug)]
pub struct TwistedEngine {
    pub module: TModule,
    pub power: i64,
    pub max_weight6: i64,
    untwisted: UntwistedSector,
}

impl TwistedEngine {
    pub fn new(kind: ExtensionKind, lattice: GluedLattice, eta: Z3Word) -> Result<Self> {
        let power = kind
            .twist_power()
            .ok_or_else(|| Error::InvalidArgument("twisted engine needs a twisted kind".into()))?;
        let len = lattice.len();
        let module = TModule::new(kind, lattice, eta)?;
        Ok(Self {
            module,
            power,
            max_weight6: super::DEFAULT_MAX_WEIGHT6,
            untwisted: UntwistedSector::new(len),
        })
    }

    pub fn with_max_weight(mut self, max_weight: i64) -> Self {
        self.max_weight6 = X_DEN * max_weight;
        self.untwisted.max_weight6 = X_DEN * max_weight;
        self
    }

    pub fn len(&self) -> usize {
        self.module.lattice.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn untwisted(&self) -> &UntwistedSector {
        &self.untwisted
    }

    /// `1 ⊗ v_γ`.
    pub fn top(&self, gamma: &Z3Word) -> TwistedState {
        TwistedState::single((Vec::new(), gamma.clone()), Cyclotomic::one())
    }

    /// Multiplies by the creation variable `b_r^{(s)}(mode3/3)`.
    pub fn raise(&self, site: usize, mode3: i64, st: &TwistedState) -> Result<TwistedState> {
        if mode3 >= 0 || mode3 % 3 == 0 || site >= self.len() {
            return Err(Error::InvalidArgument(format!("no creation variable at site {site}, mode {mode3}/3")));
        }
        let p = Poly::single(vec![TVar { site, mode3 }], Cyclotomic::one());
        Ok(poly_times_state(&p, st))
    }

    /// `⟨v, b_j⟩`.
    fn pair_b(&self, v: Site, j: i64) -> Cyclotomic {
        let h = if self.power == 1 { j } else { 3 - j };
        pair_h(v, h)
    }

    /// Coefficient of `b_r` in the class-`r` component of a site vector.
    fn component(&self, v: Site, r: i64) -> Cyclotomic {
        self.pair_b(v, 3 - r).scale(&rat(1, 2))
    }

    /// Weight of a state term, `ℓ/9` included, in units of 1/18.
    pub fn weight18(&self, m: &[TVar]) -> i64 {
        3 * self.mono_weight6(m) + 2 * self.len() as i64
    }

    /// `σ` on a state: `ζ₃^{class}` per variable and `ζ₃^{2 wt(η)}` on `T`.
    pub fn apply_sigma(&self, st: &TwistedState) -> TwistedState {
        let t = 2 * self.module.eta.weight() as i64;
        st.map_keys(|(m, g)| {
            let e: i64 = m.iter().map(|v| v.class()).sum::<i64>() + t;
            Some(((m.clone(), g.clone()), Cyclotomic::zeta3(e)))
        })
    }

    /// The residue `j` with `e^{β₁^{(s)}} (1 ⊗ v_γ) = ζ₃^{j−1} (1 ⊗ v_γ)`.
    pub fn residue(&self, site: usize, gamma: &Z3Word) -> Result<i64> {
        let x = GroupElement::lift(LatticeVector::root_at(self.len(), site, 1));
        let (t, s) = t_action(&self.module, &x, gamma)?;
        if t != *gamma {
            return Err(Error::Domain("root does not fix the basis vector".into()));
        }
        (0..3)
            .find(|j| s == Cyclotomic::zeta3(j - 1))
            .ok_or_else(|| Error::Domain(format!("scalar {s} is not a cube root of unity")))
    }

    fn check(&self, st: &TwistedState) -> Result<()> {
        for ((m, _), _) in st.terms() {
            if self.mono_weight6(m) > self.max_weight6 {
                return Err(Error::Truncation(format!(
                    "weight {} exceeds the bound {}",
                    rat(self.mono_weight6(m), X_DEN),
                    rat(self.max_weight6, X_DEN)
                )));
            }
        }
        Ok(())
    }

    /// `3^{−⟨α,α⟩/2} (1 − ζ₃²)^{⟨σα,α⟩}`.
    fn prefactor(&self, alpha: &LatticeVector) -> Result<Cyclotomic> {
        let n6 = alpha.norm6();
        if n6 % 12 != 0 {
            return Err(Error::Domain(format!("⟨{alpha}, {alpha}⟩ is not even")));
        }
        let t6 = alpha.tau_pow(self.power).pair6(alpha);
        if t6 % 6 != 0 {
            return Err(Error::Domain(format!("⟨σ{alpha}, {alpha}⟩ is not an integer")));
        }
        let three = Cyclotomic::from_rational(rat(1, 3)).pow(n6 / 12);
        let phi = (Cyclotomic::one() - Cyclotomic::zeta3(2)).pow(t6 / 6);
        Ok(three * phi)
    }
}

impl Sector for TwistedEngine {
    type Var = TVar;
    type Label = Z3Word;

    fn mode_step(&self) -> i64 {
        2
    }

    fn creation(&self, alpha: &LatticeVector, mode6: i64) -> Poly<TVar> {
        let mut p = Poly::zero();
        if mode6 >= 0 || mode6 % 2 != 0 {
            return p;
        }
        let mode3 = mode6 / 2;
        let r = mode3.rem_euclid(3);
        if r == 0 {
            return p;
        }
        for (s, v) in alpha.coords.iter().enumerate() {
            p.add_term(vec![TVar { site: s, mode3 }], self.component(*v, r));
        }
        p
    }

    fn annihilate(&self, alpha: &LatticeVector, mode6: i64, st: &TwistedState) -> TwistedState {
        let mut out = TwistedState::zero();
        if mode6 <= 0 || mode6 % 2 != 0 {
            return out;
        }
        let mode3 = mode6 / 2;
        let r = mode3.rem_euclid(3);
        if r == 0 {
            return out;
        }
        // b_r(p) pairs with b_{3−r}(−p): [b_r(p), b_{3−r}(−p)] = 2p
        let factor = rat(2 * mode3, 3);
        for ((m, g), c) in st.terms() {
            let mut seen: Vec<TVar> = m.iter().filter(|v| v.mode3 == -mode3).copied().collect();
            seen.dedup();
            for var in seen {
                let comp = self.component(alpha.coords[var.site], r);
                if comp.is_zero() {
                    continue;
                }
                let (rest, mult) = differentiate(m, &var).expect("present");
                let k = comp.scale(&(&factor * int(mult)));
                out.add_term((rest, g.clone()), c * &k);
            }
        }
        out
    }

    fn mono_weight6(&self, m: &[TVar]) -> i64 {
        m.iter().map(|v| -2 * v.mode3).sum()
    }

    fn max_weight6(&self) -> i64 {
        self.max_weight6
    }
}

fn factors(len: usize, m: &[UVar]) -> Vec<(LatticeVector, i64)> {
    m.iter()
        .map(|v| {
            let site = if v.basis == 0 { [1, 0] } else { [0, 1] };
            (LatticeVector::at_site(len, v.site, site), v.n)
        })
        .collect()
}

/// Coefficient of `x^{target6/6}` in `W(u, x) w`.
fn w_coefficient(engine: &TwistedEngine, u: &UntwistedState, target6: i64, w: &TwistedState) -> Result<TwistedState> {
    let mut out = TwistedState::zero();
    for ((m, alpha), c) in u.terms() {
        let f = factors(engine.len(), m);
        let pre = engine.prefactor(alpha)?;
        let shift = -alpha.norm6() / 2;
        let x = GroupElement::lift(alpha.clone());
        let img = apply_vertex(engine, &f, alpha, w, target6, false, |gamma| {
            let (t, s) = t_action(&engine.module, &x, gamma)?;
            Ok((t, &s * &pre, shift))
        })?;
        out.add_assign(&img.scale(c));
    }
    Ok(out)
}

fn constants_for(engine: &TwistedEngine, v: &UntwistedState) -> DeltaConstants {
    let top = v
        .terms()
        .map(|((m, a), _)| m.iter().map(|x| x.n).sum::<i64>() + (a.norm6() + 11) / 12)
        .max()
        .unwrap_or(0);
    let _ = engine;
    delta_constants(top.max(0) as usize)
}

/// `v_n w`: the coefficient of `x^{−n−1}` in `Y^σ(v, x) w = W(e^{Δ_x} v, x) w`.
pub fn twisted_coeff(engine: &TwistedEngine, v: &UntwistedState, n: &Rational, w: &TwistedState) -> Result<TwistedState> {
    engine.untwisted.check(v)?;
    engine.check(w)?;
    let t = -(n + int(1)) * int(X_DEN);
    if !t.is_integer() {
        return Err(Error::InvalidArgument(format!("exponent {n} is not in (1/6)Z")));
    }
    let target6: i64 = t
        .to_integer()
        .try_into()
        .map_err(|_| Error::InvalidArgument("exponent too large".into()))?;
    let consts = constants_for(engine, v);
    let graded: BTreeMap<i64, UntwistedState> = apply_exp_delta(&consts, engine.power, &engine.untwisted, v);
    let mut out = TwistedState::zero();
    for (k, u) in &graded {
        out.add_assign(&w_coefficient(engine, u, target6 + X_DEN * k, w)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn engine(kind: ExtensionKind) -> TwistedEngine {
        TwistedEngine::new(kind, GluedLattice::root_sum(1), Z3Word::zero(1)).unwrap()
    }

    #[test]
    fn root_pairings_with_eigenvectors() {
        // ⟨β_i, h_1⟩ = 2ζ₃^{2(i−1)}, ⟨β_i, h_2⟩ = 2ζ₃^{i−1}
        for i in 0..3 {
            let r = crate::lattice::root(i);
            assert_eq!(pair_h(r, 2), Cyclotomic::zeta3(i - 1).scale(&int(2)));
            assert_eq!(pair_h(r, 1), Cyclotomic::zeta3(2 * (i - 1)).scale(&int(2)));
        }
    }

    #[test]
    fn vacuum_is_identity() {
        for kind in [ExtensionKind::Twisted, ExtensionKind::TwistedSquare] {
            let e = engine(kind);
            let w = e.raise(0, -1, &e.top(&Z3Word::zero(1))).unwrap();
            let got = twisted_coeff(&e, &e.untwisted().vacuum(), &int(-1), &w).unwrap();
            assert_eq!(got, w);
        }
    }

    #[test]
    fn rejects_odd_norm() {
        let e = engine(ExtensionKind::Twisted);
        let v = e.untwisted().exp(&LatticeVector::new(vec![[1, 0]]));
        assert!(twisted_coeff(&e, &v, &int(0), &e.top(&Z3Word::zero(1))).is_err());
    }
}
