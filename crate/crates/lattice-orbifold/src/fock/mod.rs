//! Bounded-weight Fock spaces and vertex-operator coefficient extraction.
//!
//! Powers of the formal variable are tracked as integers in units of 1/6,
//! which covers integral modes, the third-integral twisted modes and the
//! pairings `⟨γ, β⟩ ∈ (1/6)Z` that appear on module cosets.
//!
//! Both sectors share one normal-ordering routine: for a state
//! `α¹(−n₁)···α^k(−n_k) e^γ` the operator is
//! `Σ_S Π_{j∉S} ∂α^j₋(x) · E⁻(−γ, x) · e^γ · x^{…} · Π_{j∈S} ∂α^j₊(x) · E⁺(−γ, x)`,
//! i.e. creation parts on the left and annihilation parts on the right.

use std::collections::BTreeMap;
use std::fmt;

use crate::lattice::LatticeVector;
use num_traits::Zero;

use crate::scalars::{binomial, rat, Cyclotomic, Rational};
use crate::{Error, Result};

pub mod delta;
pub mod tables;
pub mod twisted;
pub mod untwisted;

pub use delta::{delta_constants, DeltaConstants};
pub use twisted::{twisted_coeff, TVar, TwistedEngine, TwistedState};
pub use untwisted::{untwisted_coeff, zero_mode, zhu_circ, zhu_star, UVar, UntwistedState};

/// Denominator of every exponent of `x` handled here.
pub const X_DEN: i64 = 6;

/// Default truncation: largest weight (in units of 1/6) a computed state may reach.
pub const DEFAULT_MAX_WEIGHT6: i64 = 6 * 3;

/// Finite linear combination over `Q(ζ₂₄)`.
#[derive(Clone, PartialEq, Eq)]
pub struct Combination<K: Ord> {
    terms: BTreeMap<K, Cyclotomic>,
}

impl<K: Ord> Default for Combination<K> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Combination<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(key: K, c: Cyclotomic) -> Self {
        let mut s = Self::zero();
        s.add_term(key, c);
        s
    }

    pub fn add_term(&mut self, key: K, c: Cyclotomic) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&K, &Cyclotomic)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &K) -> Cyclotomic {
        self.terms.get(key).cloned().unwrap_or_else(Cyclotomic::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v * c);
        }
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v.clone());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&Cyclotomic::from_int(-1)))
    }

    pub fn map_keys(&self, mut f: impl FnMut(&K) -> Option<(K, Cyclotomic)>) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            if let Some((nk, c)) = f(k) {
                out.add_term(nk, v * &c);
            }
        }
        out
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for Combination<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, v)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({v}) {k:?}")?;
        }
        Ok(())
    }
}

/// A monomial in commuting creation variables, kept sorted.
pub type Monomial<V> = Vec<V>;

/// Polynomial in creation variables.
pub type Poly<V> = Combination<Monomial<V>>;

pub fn mono_mul<V: Ord + Clone>(a: &[V], b: &[V]) -> Vec<V> {
    let mut out: Vec<V> = a.iter().chain(b).cloned().collect();
    out.sort();
    out
}

pub fn poly_mul<V: Ord + Clone>(a: &Poly<V>, b: &Poly<V>) -> Poly<V> {
    let mut out = Poly::zero();
    for (ma, ca) in a.terms() {
        for (mb, cb) in b.terms() {
            out.add_term(mono_mul(ma, mb), ca * cb);
        }
    }
    out
}

pub fn poly_one<V: Ord + Clone>() -> Poly<V> {
    Poly::single(Vec::new(), Cyclotomic::one())
}

/// States are polynomials tensored with a label (a momentum or a module basis vector).
pub type State<V, L> = Combination<(Monomial<V>, L)>;

/// Multiplies the polynomial part of every term by `p`.
pub fn poly_times_state<V: Ord + Clone, L: Ord + Clone>(p: &Poly<V>, st: &State<V, L>) -> State<V, L> {
    let mut out = State::zero();
    for ((m, l), c) in st.terms() {
        for (pm, pc) in p.terms() {
            out.add_term((mono_mul(m, pm), l.clone()), c * pc);
        }
    }
    out
}

/// Removes one copy of `var` from the monomial, returning its multiplicity.
pub fn differentiate<V: Ord + Clone>(m: &[V], var: &V) -> Option<(Vec<V>, i64)> {
    let count = m.iter().filter(|v| *v == var).count() as i64;
    if count == 0 {
        return None;
    }
    let pos = m.iter().position(|v| v == var).expect("present");
    let mut out = m.to_vec();
    out.remove(pos);
    Some((out, count))
}

/// Series in `x` (exponents in units of 1/6) with state coefficients.
pub type Graded<V, L> = BTreeMap<i64, State<V, L>>;

pub fn graded_add<V: Ord + Clone, L: Ord + Clone>(g: &mut Graded<V, L>, e: i64, st: State<V, L>) {
    if st.is_zero() {
        return;
    }
    let entry = g.entry(e).or_default();
    entry.add_assign(&st);
    if entry.is_zero() {
        g.remove(&e);
    }
}

/// One Heisenberg sector: which modes exist and how they act.
pub trait Sector {
    type Var: Ord + Clone + fmt::Debug;
    type Label: Ord + Clone + fmt::Debug;

    /// Spacing of allowed nonzero modes, in units of 1/6.
    fn mode_step(&self) -> i64;

    /// `α(mode)` for `mode < 0`, as a linear polynomial.
    fn creation(&self, alpha: &LatticeVector, mode6: i64) -> Poly<Self::Var>;

    /// `α(mode)` for `mode ≥ 0` applied to a state.
    fn annihilate(&self, alpha: &LatticeVector, mode6: i64, st: &State<Self::Var, Self::Label>) -> State<Self::Var, Self::Label>;

    /// Weight of a monomial, in units of 1/6, counting only creation variables.
    fn mono_weight6(&self, m: &[Self::Var]) -> i64;

    fn max_weight6(&self) -> i64;
}

fn state_weight6<S: Sector>(sector: &S, st: &State<S::Var, S::Label>) -> i64 {
    st.terms().map(|((m, _), _)| sector.mono_weight6(m)).max().unwrap_or(0)
}

/// `Σ_{p>0} coefficient(p) α(p) x^{−p + shift}` applied to a graded state.
fn apply_lowering<S: Sector>(
    sector: &S,
    alpha: &LatticeVector,
    g: &Graded<S::Var, S::Label>,
    shift6: i64,
    include_zero: bool,
    coefficient: impl Fn(i64) -> Rational,
) -> Graded<S::Var, S::Label> {
    let step = sector.mode_step();
    let mut out = Graded::new();
    for (e, st) in g {
        let top = state_weight6(sector, st);
        let start = if include_zero { 0 } else { step };
        let mut p = start;
        while p <= top {
            let c = coefficient(p);
            if !c.is_zero() {
                let img = sector.annihilate(alpha, p, st);
                if !img.is_zero() {
                    graded_add(&mut out, e - p + shift6, img.scale(&Cyclotomic::from_rational(c)));
                }
            }
            p += step;
        }
    }
    out
}

/// `E⁺(−α, x) = exp(Σ_{p>0} −α(p)/p x^{−p})` applied to a graded state.
pub fn apply_e_plus<S: Sector>(sector: &S, alpha: &LatticeVector, g: &Graded<S::Var, S::Label>) -> Graded<S::Var, S::Label> {
    let mut total = g.clone();
    let mut cur = g.clone();
    let mut k = 1i64;
    loop {
        let next = apply_lowering(sector, alpha, &cur, 0, false, |p| -rat(X_DEN, p));
        if next.is_empty() {
            break;
        }
        cur = next
            .into_iter()
            .map(|(e, st)| (e, st.scale(&Cyclotomic::from_rational(rat(1, k)))))
            .collect();
        for (e, st) in &cur {
            graded_add(&mut total, *e, st.clone());
        }
        k += 1;
    }
    total
}

/// Annihilation part (modes `≥ 0` if `include_zero`, else `> 0`) of
/// `(1/(n−1)!) (d/dx)^{n−1} α(x) = Σ_p binom(−p−1, n−1) α(p) x^{−p−n}`.
pub fn apply_derivative_lowering<S: Sector>(
    sector: &S,
    alpha: &LatticeVector,
    n: i64,
    g: &Graded<S::Var, S::Label>,
    include_zero: bool,
) -> Graded<S::Var, S::Label> {
    apply_lowering(sector, alpha, g, -X_DEN * n, include_zero, |p6| {
        binomial(&(-rat(p6, X_DEN) - Rational::from_integer(1.into())), n - 1)
    })
}

/// Coefficients of `E⁻(−α, x) = exp(Σ_{q>0} α(−q)/q x^q)` up to `budget6`,
/// indexed by exponent / step.
pub fn e_minus_series<S: Sector>(sector: &S, alpha: &LatticeVector, budget6: i64) -> Vec<Poly<S::Var>> {
    let step = sector.mode_step();
    let kmax = (budget6.max(0) / step) as usize;
    // s_q = α(−q)/q for q = k·step
    let s: Vec<Poly<S::Var>> = (0..=kmax)
        .map(|k| {
            if k == 0 {
                return Poly::zero();
            }
            let q6 = k as i64 * step;
            sector.creation(alpha, -q6).scale(&Cyclotomic::from_rational(rat(X_DEN, q6)))
        })
        .collect();
    let mut e: Vec<Poly<S::Var>> = vec![poly_one()];
    for k in 1..=kmax {
        let mut acc = Poly::zero();
        for q in 1..=k {
            if s[q].is_zero() {
                continue;
            }
            let term = poly_mul(&s[q], &e[k - q]).scale(&Cyclotomic::from_int(q as i64));
            acc.add_assign(&term);
        }
        e.push(acc.scale(&Cyclotomic::from_rational(rat(1, k as i64))));
    }
    e
}

/// Creation part of the derivative field: terms `binom(−p−1, n−1) α(p) x^{−p−n}`
/// for `p < 0`, as `(exponent6, polynomial)` pairs with exponent at most `budget6`.
pub fn derivative_raising<S: Sector>(sector: &S, alpha: &LatticeVector, n: i64, budget6: i64) -> Vec<(i64, Poly<S::Var>)> {
    let step = sector.mode_step();
    let mut out = Vec::new();
    let mut p = -step;
    loop {
        let e = -p - X_DEN * n;
        if e > budget6 {
            break;
        }
        let c = binomial(&(-rat(p, X_DEN) - Rational::from_integer(1.into())), n - 1);
        let poly = sector.creation(alpha, p);
        if !c.is_zero() && !poly.is_zero() {
            out.push((e, poly.scale(&Cyclotomic::from_rational(c))));
        }
        p -= step;
    }
    out
}

/// Coefficient at `x^{target6}` of the full creation product
/// `Π_j ∂α^j₋(x) · E⁻(−γ, x)`, as a polynomial.
pub fn creation_coefficient<S: Sector>(
    sector: &S,
    factors: &[(LatticeVector, i64)],
    gamma: &LatticeVector,
    target6: i64,
) -> Poly<S::Var> {
    // lowest exponent each factor can contribute
    let step = sector.mode_step();
    let mins: Vec<i64> = factors.iter().map(|(_, n)| step - X_DEN * n).collect();
    let total_min: i64 = mins.iter().sum();
    if target6 < total_min {
        return Poly::zero();
    }
    let slack = target6 - total_min;
    let parts: Vec<Vec<(i64, Poly<S::Var>)>> = factors
        .iter()
        .zip(&mins)
        .map(|((a, n), m)| derivative_raising(sector, a, *n, m + slack))
        .collect();
    let e_minus = e_minus_series(sector, gamma, slack.max(0));
    let mut out = Poly::zero();
    fn walk<V: Ord + Clone>(
        parts: &[Vec<(i64, Poly<V>)>],
        idx: usize,
        acc_e: i64,
        acc: Poly<V>,
        target6: i64,
        step: i64,
        e_minus: &[Poly<V>],
        out: &mut Poly<V>,
    ) {
        if idx == parts.len() {
            let rest = target6 - acc_e;
            if rest >= 0 && rest % step == 0 {
                let k = (rest / step) as usize;
                if k < e_minus.len() {
                    out.add_assign(&poly_mul(&acc, &e_minus[k]));
                }
            }
            return;
        }
        for (e, p) in &parts[idx] {
            if acc_e + e > target6 {
                continue;
            }
            walk(parts, idx + 1, acc_e + e, poly_mul(&acc, p), target6, step, e_minus, out);
        }
    }
    walk(&parts, 0, 0, poly_one(), target6, step, &e_minus, &mut out);
    out
}

/// Subsets of `0..k` as bitmasks.
pub fn subsets(k: usize) -> impl Iterator<Item = u32> {
    0..(1u32 << k)
}

pub fn check_weight<S: Sector>(sector: &S, st: &State<S::Var, S::Label>) -> Result<()> {
    let w = state_weight6(sector, st);
    if w > sector.max_weight6() {
        return Err(Error::Truncation(format!(
            "weight {}/6 exceeds the bound {}/6",
            w,
            sector.max_weight6()
        )));
    }
    Ok(())
}

/// Label update performed by `e^α` together with any power of `x` it
/// contributes: `(new label, scalar, exponent shift in sixths)`.
pub type LabelStep<L> = (L, Cyclotomic, i64);

/// Coefficient at `x^{target6}` of
/// `∘ Π_j ∂^{n_j−1}α^j(x)/(n_j−1)! · E⁻(−α) E⁺(−α) e^α ∘` applied to `w`.
/// `include_zero` decides whether zero modes occur (untwisted sector only);
/// they act on the input, to the right of `e^α`.
pub fn apply_vertex<S: Sector>(
    sector: &S,
    factors: &[(LatticeVector, i64)],
    alpha: &LatticeVector,
    w: &State<S::Var, S::Label>,
    target6: i64,
    include_zero: bool,
    mut step_label: impl FnMut(&S::Label) -> Result<LabelStep<S::Label>>,
) -> Result<State<S::Var, S::Label>> {
    let mut out = State::zero();
    let mut start = Graded::new();
    graded_add(&mut start, 0, w.clone());
    let after_e_plus = apply_e_plus(sector, alpha, &start);
    for mask in subsets(factors.len()) {
        let mut g = after_e_plus.clone();
        let mut rest = Vec::new();
        for (j, (a, n)) in factors.iter().enumerate() {
            if mask & (1 << j) != 0 {
                g = apply_derivative_lowering(sector, a, *n, &g, include_zero);
            } else {
                rest.push((a.clone(), *n));
            }
        }
        let mut cache: BTreeMap<i64, Poly<S::Var>> = BTreeMap::new();
        for (e, st) in &g {
            for ((m, l), c) in st.terms() {
                let (nl, scalar, shift) = step_label(l)?;
                let need = target6 - e - shift;
                let poly = cache
                    .entry(need)
                    .or_insert_with(|| creation_coefficient(sector, &rest, alpha, need));
                if poly.is_zero() {
                    continue;
                }
                let coeff = c * &scalar;
                for (pm, pc) in poly.terms() {
                    out.add_term((mono_mul(m, pm), nl.clone()), &coeff * pc);
                }
            }
        }
    }
    Ok(out)
}
