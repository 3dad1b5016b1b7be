//! `M(1) ⊗ C{coset}`: untwisted lattice vertex operators and Zhu products.

use super::{apply_vertex, differentiate, Combination, Poly, Sector, State, X_DEN};
use crate::groups::eps1;
use crate::lattice::{site_pair6, LatticeVector};
use num_traits::Zero;

use crate::scalars::{binomial, int, rat, Cyclotomic, Rational};
use crate::{Error, Result};

/// Creation variable `b_k^{(s)}(−n)` where `b₀ = β₁/2`, `b₁ = (β₁ − β₂)/6`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UVar {
    pub site: usize,
    pub basis: u8,
    pub n: i64,
}

pub type UntwistedState = State<UVar, LatticeVector>;

fn basis_site(k: u8) -> [i64; 2] {
    if k == 0 {
        [1, 0]
    } else {
        [0, 1]
    }
}

/// Heisenberg modes of `h = C ⊗ L^{⊕ℓ}` acting on `M(1) ⊗ C{coset}`.
#[derive(Clone, Debug)]
pub struct UntwistedSector {
    pub len: usize,
    pub max_weight6: i64,
}

impl UntwistedSector {
    pub fn new(len: usize) -> Self {
        Self {
            len,
            max_weight6: super::DEFAULT_MAX_WEIGHT6,
        }
    }

    pub fn with_max_weight(len: usize, max_weight: i64) -> Self {
        Self {
            len,
            max_weight6: X_DEN * max_weight,
        }
    }

    pub fn vacuum(&self) -> UntwistedState {
        self.exp(&LatticeVector::zero(self.len))
    }

    /// `e^β`.
    pub fn exp(&self, beta: &LatticeVector) -> UntwistedState {
        UntwistedState::single((Vec::new(), beta.clone()), Cyclotomic::one())
    }

    /// `α(n)` for any integer `n`.
    pub fn mode(&self, alpha: &LatticeVector, n: i64, st: &UntwistedState) -> UntwistedState {
        if n < 0 {
            super::poly_times_state(&self.creation(alpha, X_DEN * n), st)
        } else {
            self.annihilate(alpha, X_DEN * n, st)
        }
    }

    /// `α(−n) st`, for building states.
    pub fn raise(&self, alpha: &LatticeVector, n: i64, st: &UntwistedState) -> UntwistedState {
        self.mode(alpha, -n, st)
    }

    /// Weight `Σ n_j + ⟨β, β⟩/2` when `st` is homogeneous.
    pub fn weight(&self, st: &UntwistedState) -> Option<Rational> {
        let mut w: Option<i64> = None;
        for ((m, beta), _) in st.terms() {
            let t = self.mono_weight6(m) + beta.norm6() / 2;
            if w.is_some_and(|x| x != t) {
                return None;
            }
            w = Some(t);
        }
        w.map(|t| rat(t, X_DEN))
    }

    fn max_term_weight6(&self, st: &UntwistedState) -> i64 {
        st.terms()
            .map(|((m, beta), _)| self.mono_weight6(m) + beta.norm6() / 2)
            .max()
            .unwrap_or(0)
    }

    pub fn check(&self, st: &UntwistedState) -> Result<()> {
        let w = self.max_term_weight6(st);
        if w > self.max_weight6 {
            return Err(Error::Truncation(format!(
                "weight {} exceeds the bound {}",
                rat(w, X_DEN),
                rat(self.max_weight6, X_DEN)
            )));
        }
        Ok(())
    }
}

impl Sector for UntwistedSector {
    type Var = UVar;
    type Label = LatticeVector;

    fn mode_step(&self) -> i64 {
        X_DEN
    }

    fn creation(&self, alpha: &LatticeVector, mode6: i64) -> Poly<UVar> {
        let mut p = Poly::zero();
        if mode6 >= 0 || mode6 % X_DEN != 0 {
            return p;
        }
        let n = -mode6 / X_DEN;
        for (s, c) in alpha.coords.iter().enumerate() {
            for k in 0..2u8 {
                p.add_term(vec![UVar { site: s, basis: k, n }], Cyclotomic::from_int(c[k as usize]));
            }
        }
        p
    }

    fn annihilate(&self, alpha: &LatticeVector, mode6: i64, st: &UntwistedState) -> UntwistedState {
        let mut out = UntwistedState::zero();
        if mode6 < 0 || mode6 % X_DEN != 0 {
            return out;
        }
        let p = mode6 / X_DEN;
        if p == 0 {
            for ((m, beta), c) in st.terms() {
                let r = rat(alpha.pair6(beta), X_DEN);
                out.add_term((m.clone(), beta.clone()), c.scale(&r));
            }
            return out;
        }
        for ((m, beta), c) in st.terms() {
            let mut seen: Vec<UVar> = m.iter().filter(|v| v.n == p).copied().collect();
            seen.dedup();
            for var in seen {
                let pair = site_pair6(alpha.coords[var.site], basis_site(var.basis));
                if pair == 0 {
                    continue;
                }
                let (rest, mult) = differentiate(m, &var).expect("present");
                let r = rat(p * pair * mult, X_DEN);
                out.add_term((rest, beta.clone()), c.scale(&r));
            }
        }
        out
    }

    fn mono_weight6(&self, m: &[UVar]) -> i64 {
        m.iter().map(|v| X_DEN * v.n).sum()
    }

    fn max_weight6(&self) -> i64 {
        self.max_weight6
    }
}

fn factors(len: usize, m: &[UVar]) -> Vec<(LatticeVector, i64)> {
    m.iter()
        .map(|v| (LatticeVector::at_site(len, v.site, basis_site(v.basis)), v.n))
        .collect()
}

/// Coefficient of `x^{target6/6}` in `Y(v, x) w`.
pub(crate) fn coefficient6(sector: &UntwistedSector, v: &UntwistedState, target6: i64, w: &UntwistedState) -> Result<UntwistedState> {
    let mut out = UntwistedState::zero();
    for ((m, beta), c) in v.terms() {
        let f = factors(sector.len, m);
        let img = apply_vertex(sector, &f, beta, w, target6, true, |gamma| {
            let k = eps1(beta, gamma);
            Ok((beta.add(gamma), Cyclotomic::zeta24(k), beta.pair6(gamma)))
        })?;
        out.add_assign(&img.scale(c));
    }
    Ok(out)
}

/// `v_n w`, the coefficient of `x^{−n−1}` in `Y(v, x) w`.
pub fn untwisted_coeff(sector: &UntwistedSector, v: &UntwistedState, n: &Rational, w: &UntwistedState) -> Result<UntwistedState> {
    sector.check(v)?;
    sector.check(w)?;
    let t = -(n + int(1)) * int(X_DEN);
    if !t.is_integer() {
        return Err(Error::InvalidArgument(format!("exponent {n} is not in (1/6)Z")));
    }
    let t: i64 = t.to_integer().try_into().map_err(|_| Error::InvalidArgument("exponent too large".into()))?;
    coefficient6(sector, v, t, w)
}

fn homogeneous_weight(sector: &UntwistedSector, u: &UntwistedState) -> Result<Rational> {
    sector
        .weight(u)
        .ok_or_else(|| Error::InvalidArgument("state is not homogeneous".into()))
}

/// `Σ_i binom(wt u, i) u_{i+shift} v`.
fn zhu_sum(sector: &UntwistedSector, u: &UntwistedState, v: &UntwistedState, shift: i64) -> Result<UntwistedState> {
    if u.is_zero() || v.is_zero() {
        return Ok(UntwistedState::zero());
    }
    let wu = homogeneous_weight(sector, u)?;
    let top = sector.max_term_weight6(v);
    let mut out = UntwistedState::zero();
    // u_m v vanishes once wt u + wt v − m − 1 < 0
    let wu6: i64 = (&wu * int(X_DEN)).ceil().to_integer().try_into().unwrap_or(i64::MAX / 2);
    let mut i = 0i64;
    loop {
        let m = i + shift;
        if X_DEN * m > wu6 + top {
            break;
        }
        let b = binomial(&wu, i);
        if !b.is_zero() {
            let term = coefficient6(sector, u, -X_DEN * (m + 1), v)?;
            out.add_assign(&term.scale(&Cyclotomic::from_rational(b)));
        }
        i += 1;
    }
    Ok(out)
}

/// `u ∘ v = Σ_i binom(wt u, i) u_{i−2} v`.
pub fn zhu_circ(sector: &UntwistedSector, u: &UntwistedState, v: &UntwistedState) -> Result<UntwistedState> {
    zhu_sum(sector, u, v, -2)
}

/// `u * v = Σ_i binom(wt u, i) u_{i−1} v`.
pub fn zhu_star(sector: &UntwistedSector, u: &UntwistedState, v: &UntwistedState) -> Result<UntwistedState> {
    zhu_sum(sector, u, v, -1)
}

/// `o(u) w = u_{wt u − 1} w`, extended linearly over the homogeneous parts of `u`.
pub fn zero_mode(sector: &UntwistedSector, u: &UntwistedState, w: &UntwistedState) -> Result<UntwistedState> {
    let mut out = UntwistedState::zero();
    for (wu, part) in homogeneous_parts(sector, u) {
        if !wu.is_integer() {
            return Err(Error::Domain(format!("weight {wu} is not integral")));
        }
        out.add_assign(&untwisted_coeff(sector, &part, &(wu - int(1)), w)?);
    }
    Ok(out)
}

/// Sum of homogeneous pieces of a state, keyed by weight.
pub fn homogeneous_parts(sector: &UntwistedSector, st: &UntwistedState) -> Vec<(Rational, UntwistedState)> {
    let mut parts: std::collections::BTreeMap<i64, UntwistedState> = Default::default();
    for ((m, beta), c) in st.terms() {
        let w = sector.mono_weight6(m) + beta.norm6() / 2;
        parts
            .entry(w)
            .or_insert_with(Combination::zero)
            .add_term((m.clone(), beta.clone()), c.clone());
    }
    parts.into_iter().map(|(w, s)| (rat(w, X_DEN), s)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b1(len: usize, s: usize) -> LatticeVector {
        LatticeVector::at_site(len, s, [2, 0])
    }

    #[test]
    fn vacuum_acts_as_identity() {
        let sec = UntwistedSector::new(1);
        let w = sec.raise(&b1(1, 0), 1, &sec.exp(&LatticeVector::new(vec![[1, 0]])));
        let got = untwisted_coeff(&sec, &sec.vacuum(), &int(-1), &w).unwrap();
        assert_eq!(got, w);
    }

    #[test]
    fn creation_at_zero() {
        // Y(v, x)1 at x^0 is v
        let sec = UntwistedSector::new(1);
        let v = sec.raise(&b1(1, 0), 2, &sec.exp(&LatticeVector::new(vec![[1, 0]])));
        let got = untwisted_coeff(&sec, &v, &int(-1), &sec.vacuum()).unwrap();
        assert_eq!(got, v);
    }

    #[test]
    fn heisenberg_commutator() {
        let sec = UntwistedSector::new(1);
        let a = b1(1, 0);
        let v = sec.raise(&a, 1, &sec.vacuum());
        let w = sec.raise(&a, 1, &sec.vacuum());
        // a(1) a(−1) 1 = ⟨a, a⟩ 1 = 4
        let got = untwisted_coeff(&sec, &v, &int(1), &w).unwrap();
        assert_eq!(got, sec.vacuum().scale(&Cyclotomic::from_int(4)));
    }

    #[test]
    fn conformal_weight_of_half_root() {
        let sec = UntwistedSector::new(1);
        let mut omega = UntwistedState::zero();
        for i in 0..3 {
            let r = LatticeVector::root_at(1, 0, i);
            omega.add_assign(&sec.raise(&r, 1, &sec.raise(&r, 1, &sec.vacuum())));
        }
        let omega = omega.scale(&Cyclotomic::from_rational(rat(1, 12)));
        let probe = sec.exp(&LatticeVector::new(vec![[1, 0]]));
        let got = zero_mode(&sec, &omega, &probe).unwrap();
        assert_eq!(got, probe.scale(&Cyclotomic::from_rational(rat(1, 2))));
    }
}
