//! The glued lattice inside `ℓ` copies of the dual of `√2·A₂`.
//!
//! Vectors are stored as integer pairs `(m₁, m₂)` per site in the basis
//! `b₁ = β₁/2`, `b₂ = (β₁ − β₂)/6` of the dual lattice, whose Gram matrix is
//! `[[1, 1/2], [1/2, 1/3]]`.  The root lattice itself is `{(2p, 6q)}`.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::codes::{Code, CodeKind, KSym, KWord, Z3Word};
use crate::scalars::{rat, Cyclotomic, QSeries, Rational};
use crate::{Error, Result};

pub type Site = [i64; 2];

/// `β₀, β₁, β₂` in site coordinates, indexed by `i mod 3`.
pub const ROOTS: [Site; 3] = [[-4, 6], [2, 0], [2, -6]];

pub fn root(i: i64) -> Site {
    ROOTS[i.rem_euclid(3) as usize]
}

/// The glue vector `β(x)`: `0`, `β₂/2`, `β₀/2`, `β₁/2` for `x = 0, a, b, c`.
pub fn glue(x: KSym) -> Site {
    match x {
        KSym::A => [1, -3],
        KSym::B => [-2, 3],
        KSym::C => [1, 0],
        _ => [0, 0],
    }
}

/// `6⟨u, v⟩` on one site.
pub fn site_pair6(u: Site, v: Site) -> i64 {
    6 * u[0] * v[0] + 3 * (u[0] * v[1] + u[1] * v[0]) + 2 * u[1] * v[1]
}

/// `(m₁, m₂) ↦ (m₁ + m₂, −3m₁ − 2m₂)`.
pub fn site_tau(v: Site) -> Site {
    [v[0] + v[1], -3 * v[0] - 2 * v[1]]
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector {
    pub coords: Vec<Site>,
}

impl LatticeVector {
    pub fn zero(len: usize) -> Self {
        Self {
            coords: vec![[0, 0]; len],
        }
    }

    pub fn new(coords: Vec<Site>) -> Self {
        Self { coords }
    }

    /// `v` placed at site `s`, zero elsewhere.
    pub fn at_site(len: usize, s: usize, v: Site) -> Self {
        let mut out = Self::zero(len);
        out.coords[s] = v;
        out
    }

    /// `β_i` at site `s`.
    pub fn root_at(len: usize, s: usize, i: i64) -> Self {
        Self::at_site(len, s, root(i))
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c[0] == 0 && c[1] == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len(), "length mismatch");
        Self::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| [a[0] + b[0], a[1] + b[1]])
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::new(self.coords.iter().map(|c| [k * c[0], k * c[1]]).collect())
    }

    /// `6⟨u, v⟩`, an integer for all vectors of the dual lattice.
    pub fn pair6(&self, other: &Self) -> i64 {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| site_pair6(*a, *b))
            .sum()
    }

    pub fn norm6(&self) -> i64 {
        self.pair6(self)
    }

    pub fn tau(&self) -> Self {
        tau_vec(self)
    }

    pub fn tau_pow(&self, k: i64) -> Self {
        (0..k.rem_euclid(3)).fold(self.clone(), |v, _| v.tau())
    }

    /// `(1 − τ)v`.
    pub fn one_minus_tau(&self) -> Self {
        self.sub(&self.tau())
    }

    /// The unique `u` with `(1 − τ)u = v`, if it is integral.
    pub fn one_minus_tau_preimage(&self) -> Option<Self> {
        // (1 − τ)^-1 (n₁, n₂) = ((3n₁ + n₂)/3, −n₁)
        self.coords
            .iter()
            .map(|c| (c[1] % 3 == 0).then(|| [c[0] + c[1] / 3, -c[0]]))
            .collect::<Option<Vec<_>>>()
            .map(Self::new)
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{},{}", c[0], c[1])?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub fn inner_product(u: &LatticeVector, v: &LatticeVector) -> Result<Rational> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch(u.len(), v.len()));
    }
    Ok(rat(u.pair6(v), 6))
}

pub fn tau_vec(v: &LatticeVector) -> LatticeVector {
    LatticeVector::new(v.coords.iter().map(|c| site_tau(*c)).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CosetLabel {
    pub lambda: KWord,
    pub gamma: Z3Word,
}

impl CosetLabel {
    pub fn new(lambda: KWord, gamma: Z3Word) -> Self {
        assert_eq!(lambda.len(), gamma.len(), "label length mismatch");
        Self { lambda, gamma }
    }

    pub fn len(&self) -> usize {
        self.lambda.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lambda.is_empty()
    }
}

/// Site vector `β(x) + (−i/3 + m₁)β₁ + (i/3 + m₂)β₂`.
pub fn coset_site(x: KSym, i: u8, offsets: Site) -> Site {
    let g = glue(x);
    let [m1, m2] = offsets;
    [g[0] + 2 * (m1 + m2), g[1] - 2 * i as i64 - 6 * m2]
}

pub fn coset_vector(label: &CosetLabel, offsets: &[Site]) -> Result<LatticeVector> {
    if offsets.len() != label.len() {
        return Err(Error::LengthMismatch(label.len(), offsets.len()));
    }
    Ok(LatticeVector::new(
        (0..label.len())
            .map(|s| coset_site(label.lambda.0[s], label.gamma.0[s], offsets[s]))
            .collect(),
    ))
}

/// Inverse of [`coset_site`]: every site vector of the dual lattice lies in
/// exactly one of the twelve cosets of the root lattice.
pub fn site_coset(v: Site) -> (KSym, u8, Site) {
    let odd1 = v[0].rem_euclid(2) == 1;
    let odd2 = v[1].rem_euclid(2) == 1;
    let x = match (odd1, odd2) {
        (false, false) => KSym::ZERO,
        (true, true) => KSym::A,
        (false, true) => KSym::B,
        (true, false) => KSym::C,
    };
    let i = v[1].rem_euclid(3) as u8;
    let g = glue(x);
    let r = [v[0] - g[0], v[1] - g[1] + 2 * i as i64];
    debug_assert!(r[0] % 2 == 0 && r[1] % 6 == 0);
    let m2 = -r[1] / 6;
    let m1 = r[0] / 2 - m2;
    (x, i, [m1, m2])
}

pub fn coset_of(v: &LatticeVector) -> (CosetLabel, Vec<Site>) {
    let parts: Vec<_> = v.coords.iter().map(|c| site_coset(*c)).collect();
    (
        CosetLabel::new(
            KWord(parts.iter().map(|p| p.0).collect()),
            Z3Word(parts.iter().map(|p| p.1).collect()),
        ),
        parts.iter().map(|p| p.2).collect(),
    )
}

/// `P(x) = 1` for `x ≠ 0`, and `Q(x, y) = 1` iff `y = x ≠ 0` or `y = τ²(x) ≠ 0`.
pub fn pq_values(x: KSym, y: KSym) -> (u8, u8) {
    let p = u8::from(!x.is_zero());
    let q = u8::from(!y.is_zero() && (x == y || x.tau().tau() == y));
    (p, q)
}

/// Sitewise `−P(x) + m₁ + m₂ mod 3` for `v = β(x) + (−i/3 + m₁)β₁ + (i/3 + m₂)β₂`.
pub fn varphi(v: &LatticeVector) -> Z3Word {
    Z3Word(
        v.coords
            .iter()
            .map(|c| {
                let (x, _, [m1, m2]) = site_coset(*c);
                (m1 + m2 - pq_values(x, x).0 as i64).rem_euclid(3) as u8
            })
            .collect(),
    )
}

/// `L_{C×D}` for a K-code `C` and a ternary code `D` of the same length.
#[derive(Clone, Debug)]
pub struct GluedLattice {
    pub c: Code,
    pub d: Code,
}

impl GluedLattice {
    pub fn new(c: Code, d: Code) -> Result<Self> {
        if c.kind() != CodeKind::K || d.kind() != CodeKind::Z3 {
            return Err(Error::InvalidArgument(
                "expected a K-code and a ternary code".into(),
            ));
        }
        if c.length() != d.length() {
            return Err(Error::LengthMismatch(c.length(), d.length()));
        }
        Ok(Self { c, d })
    }

    /// `L^{⊕ℓ}` itself.
    pub fn root_sum(len: usize) -> Self {
        Self::new(Code::zero(CodeKind::K, len), Code::zero(CodeKind::Z3, len)).expect("valid")
    }

    pub fn len(&self) -> usize {
        self.c.length()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn rank(&self) -> usize {
        2 * self.len()
    }

    /// `L_{C×0}`.
    pub fn c_part(&self) -> Self {
        Self::new(self.c.clone(), Code::zero(CodeKind::Z3, self.len())).expect("valid")
    }

    /// `L_{0×D}`.
    pub fn d_part(&self) -> Self {
        Self::new(Code::zero(CodeKind::K, self.len()), self.d.clone()).expect("valid")
    }

    /// `L_{C^⊥ × D^⊥}`.
    pub fn dual_lattice(&self) -> Self {
        Self::new(self.c.dual(), self.d.dual()).expect("valid")
    }

    pub fn contains(&self, v: &LatticeVector) -> bool {
        if v.len() != self.len() {
            return false;
        }
        let (label, _) = coset_of(v);
        self.c.contains_k(&label.lambda) && self.d.contains_z3(&label.gamma)
    }

    /// A generating set: glue vectors of the code bases plus the roots.
    pub fn generators(&self) -> Vec<LatticeVector> {
        let len = self.len();
        let zero_offsets = vec![[0, 0]; len];
        let mut gens = Vec::new();
        for w in self.c.k_basis() {
            let label = CosetLabel::new(w, Z3Word::zero(len));
            gens.push(coset_vector(&label, &zero_offsets).expect("lengths agree"));
        }
        for w in self.d.z3_basis() {
            let label = CosetLabel::new(KWord::zero(len), w);
            gens.push(coset_vector(&label, &zero_offsets).expect("lengths agree"));
        }
        for s in 0..len {
            gens.push(LatticeVector::root_at(len, s, 1));
            gens.push(LatticeVector::root_at(len, s, 2));
        }
        gens
    }

    /// A Z-basis, as rows of the Hermite normal form of the generators.
    pub fn basis(&self) -> Vec<LatticeVector> {
        let rows: Vec<Vec<i64>> = self
            .generators()
            .iter()
            .map(|v| v.coords.iter().flat_map(|c| [c[0], c[1]]).collect())
            .collect();
        hermite_rows(rows, self.rank())
            .into_iter()
            .map(|r| LatticeVector::new(r.chunks(2).map(|p| [p[0], p[1]]).collect()))
            .collect()
    }

    pub fn gram(&self) -> Vec<Vec<Rational>> {
        let b = self.basis();
        b.iter()
            .map(|u| b.iter().map(|v| rat(u.pair6(v), 6)).collect())
            .collect()
    }

    pub fn determinant(&self) -> Rational {
        determinant(self.gram())
    }

    pub fn is_integral(&self) -> bool {
        let b = self.basis();
        b.iter().all(|u| b.iter().all(|v| u.pair6(v) % 6 == 0))
    }

    pub fn is_even(&self) -> bool {
        self.is_integral() && self.basis().iter().all(|u| u.norm6() % 12 == 0)
    }

    pub fn is_unimodular(&self) -> bool {
        self.is_integral() && self.determinant().abs().is_one()
    }

    pub fn is_tau_invariant(&self) -> bool {
        self.basis().iter().all(|v| self.contains(&v.tau()))
    }

    /// Membership in the radical of the twisted commutator form on this
    /// lattice: `v ∈ L_{C×0}` and `Σ_s δ_s(P(λ_s) − m₁ − m₂) ≡ 0` for all `δ ∈ D`.
    pub fn radical_member(&self, v: &LatticeVector) -> Result<bool> {
        if !self.contains(v) {
            return Err(Error::Domain(format!("{v} is not in the lattice")));
        }
        let (label, _) = coset_of(v);
        if !label.gamma.is_zero() {
            return Ok(false);
        }
        let phi = varphi(v);
        Ok(self.d.z3_basis().iter().all(|delta| delta.dot(&phi) == 0))
    }

    /// Theta series `Σ q^{⟨v,v⟩/2}` up to exponent `order/18`.
    pub fn theta_series(&self, order: i64) -> QSeries {
        let counts = theta_counts(self, order);
        let mut out = QSeries::zero(order);
        for (e, c) in counts.iter().enumerate() {
            if !c.is_zero() {
                out.add_term(e as i64, Cyclotomic::from_rational(Rational::from_integer(c.clone())));
            }
        }
        out
    }
}

/// Per-coset theta counts of the rank-2 cosets, indexed by the exponent on
/// the 1/18 grid, cached per label up to the largest order requested.
fn site_theta(x: KSym, i: u8, order: i64) -> Vec<u64> {
    static CACHE: OnceLock<std::sync::Mutex<HashMap<(u8, u8), (i64, Vec<u64>)>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some((o, v)) = cache.lock().expect("cache").get(&(x.bits(), i)) {
        if *o >= order {
            return v[..=order as usize].to_vec();
        }
    }
    let v = enumerate_site_theta(x, i, order);
    cache
        .lock()
        .expect("cache")
        .insert((x.bits(), i), (order, v.clone()));
    v
}

/// Exponent of `q^{⟨v,v⟩/2}` on the 1/18 grid is `9⟨v,v⟩ = 3·norm6/2`.
fn enumerate_site_theta(x: KSym, i: u8, order: i64) -> Vec<u64> {
    let mut out = vec![0u64; order as usize + 1];
    // ⟨v,v⟩ = (n₁ + n₂/2)² + n₂²/12 ≤ order/9
    let max_norm = order as f64 / 9.0;
    let n2_max = (12.0 * max_norm).sqrt().ceil() as i64 + 1;
    for n2 in -n2_max..=n2_max {
        let half = (max_norm).sqrt().ceil() as i64 + 1;
        let centre = -n2 / 2;
        for n1 in centre - half - 1..=centre + half + 1 {
            let (cx, ci, _) = site_coset([n1, n2]);
            if cx != x || ci != i {
                continue;
            }
            let e = 3 * site_pair6([n1, n2], [n1, n2]) / 2;
            if e <= order {
                out[e as usize] += 1;
            }
        }
    }
    out
}

/// Theta series of one coset `L_{(λ,γ)}`: the product of its rank-2 site series.
pub fn coset_theta(label: &CosetLabel, order: i64) -> QSeries {
    let mut acc = vec![BigInt::zero(); order.max(0) as usize + 1];
    acc[0] = BigInt::one();
    for s in 0..label.len() {
        let site: Vec<BigInt> = site_theta(label.lambda.0[s], label.gamma.0[s], order)
            .into_iter()
            .map(BigInt::from)
            .collect();
        acc = truncated_product(&acc, &site);
    }
    let mut out = QSeries::zero(order);
    for (e, c) in acc.into_iter().enumerate() {
        if !c.is_zero() {
            out.add_term(e as i64, Cyclotomic::from_rational(Rational::from_integer(c)));
        }
    }
    out
}

/// Theta coefficients as exact integers: a sum over codeword pairs of
/// products of cached rank-2 coset series, grouped by label multiset.
pub fn theta_counts(lat: &GluedLattice, order: i64) -> Vec<BigInt> {
    assert!(order >= 0, "order must be nonnegative");
    let len = lat.len();
    let site_series: Vec<Vec<BigInt>> = (0..12)
        .map(|idx| {
            let x = KSym::ALL[idx / 3];
            site_theta(x, (idx % 3) as u8, order)
                .into_iter()
                .map(BigInt::from)
                .collect()
        })
        .collect();
    let label_index = |x: KSym, i: u8| KSym::ALL.iter().position(|y| *y == x).expect("symbol") * 3 + i as usize;
    let mut multisets: HashMap<[u8; 12], u64> = HashMap::new();
    let cw = lat.c.k_words();
    let dw = lat.d.z3_words();
    for lam in &cw {
        for gam in &dw {
            let mut key = [0u8; 12];
            for s in 0..len {
                key[label_index(lam.0[s], gam.0[s])] += 1;
            }
            *multisets.entry(key).or_default() += 1;
        }
    }
    let mut keys: Vec<_> = multisets.into_iter().collect();
    keys.sort();
    use rayon::prelude::*;
    let partials: Vec<Vec<BigInt>> = keys
        .par_iter()
        .map(|(key, mult)| {
            let mut acc = vec![BigInt::zero(); order as usize + 1];
            acc[0] = BigInt::one();
            for (idx, &k) in key.iter().enumerate() {
                for _ in 0..k {
                    acc = truncated_product(&acc, &site_series[idx]);
                }
            }
            acc.into_iter().map(|c| c * BigInt::from(*mult)).collect()
        })
        .collect();
    let mut total = vec![BigInt::zero(); order as usize + 1];
    for p in partials {
        for (t, c) in total.iter_mut().zip(p) {
            *t += c;
        }
    }
    total
}

fn truncated_product(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len();
    let mut out = vec![BigInt::zero(); n];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n - i) {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// Row-style Hermite normal form over the integers; returns the nonzero rows.
pub fn hermite_rows(mut rows: Vec<Vec<i64>>, ncols: usize) -> Vec<Vec<i64>> {
    let mut r = 0;
    for col in 0..ncols {
        loop {
            let nonzero: Vec<usize> = (r..rows.len()).filter(|&i| rows[i][col] != 0).collect();
            if nonzero.is_empty() {
                break;
            }
            let piv = *nonzero
                .iter()
                .min_by_key(|&&i| rows[i][col].abs())
                .expect("nonempty");
            rows.swap(r, piv);
            let mut done = true;
            for i in r + 1..rows.len() {
                let q = rows[i][col].div_euclid(rows[r][col]);
                if q != 0 {
                    let pr = rows[r].clone();
                    for (x, p) in rows[i].iter_mut().zip(&pr) {
                        *x -= q * p;
                    }
                }
                if rows[i][col] != 0 {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if r < rows.len() && rows[r][col] != 0 {
            if rows[r][col] < 0 {
                for x in rows[r].iter_mut() {
                    *x = -*x;
                }
            }
            for i in 0..r {
                let q = rows[i][col].div_euclid(rows[r][col]);
                if q != 0 {
                    let pr = rows[r].clone();
                    for (x, p) in rows[i].iter_mut().zip(&pr) {
                        *x -= q * p;
                    }
                }
            }
            r += 1;
        }
    }
    rows.truncate(r);
    rows
}

/// Determinant by fraction-exact Gaussian elimination.
pub fn determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&i| !m[i][col].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det *= &pivot;
        for i in col + 1..n {
            if m[i][col].is_zero() {
                continue;
            }
            let f = &m[i][col] / &pivot;
            for j in col..n {
                let sub = &f * &m[col][j];
                m[i][j] -= sub;
            }
        }
    }
    det
}

/// Checks at one site, over a norm-bounded box, that `(1 − τ)L^⊥` is the
/// disjoint union of the four cosets `L^{(x,0)}`.
pub fn check_one_minus_tau_decomposition(norm_bound6: i64) -> bool {
    let box_ = (norm_bound6 as f64).sqrt().ceil() as i64 + 2;
    for n1 in -box_..=box_ {
        for n2 in -3 * box_..=3 * box_ {
            let v = LatticeVector::new(vec![[n1, n2]]);
            if v.norm6() > norm_bound6 {
                continue;
            }
            let in_image = v.one_minus_tau_preimage().is_some();
            let (_, i, _) = site_coset([n1, n2]);
            if in_image != (i == 0) {
                return false;
            }
        }
    }
    true
}

/// Exact integer as `i64`, for small reports.
pub fn small(r: &BigInt) -> Option<i64> {
    r.to_i64()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::int;

    fn v1(c: Site) -> LatticeVector {
        LatticeVector::new(vec![c])
    }

    #[test]
    fn gram_data() {
        let b1 = v1(root(1));
        let b2 = v1(root(2));
        assert_eq!(inner_product(&b1, &b1).unwrap(), int(4));
        assert_eq!(inner_product(&b2, &b2).unwrap(), int(4));
        assert_eq!(inner_product(&b1, &b2).unwrap(), int(-2));
        assert_eq!(
            inner_product(&v1(glue(KSym::A)), &v1(glue(KSym::B))).unwrap(),
            rat(-1, 2)
        );
        assert!(inner_product(&b1, &LatticeVector::zero(2)).is_err());
    }

    #[test]
    fn tau_permutes_roots() {
        assert_eq!(site_tau(root(1)), root(2));
        assert_eq!(site_tau(root(2)), root(0));
        assert_eq!(site_tau(root(0)), root(1));
        let v = v1([3, -7]);
        assert_eq!(v.tau().tau().tau(), v);
        assert!(v.add(&v.tau()).add(&v.tau().tau()).is_zero());
    }

    #[test]
    fn coset_round_trip() {
        for x in KSym::ALL {
            for i in 0..3u8 {
                for m1 in -2..=2 {
                    for m2 in -2..=2 {
                        let s = coset_site(x, i, [m1, m2]);
                        assert_eq!(site_coset(s), (x, i, [m1, m2]));
                    }
                }
            }
        }
        assert_eq!(coset_site(KSym::ZERO, 1, [0, 0]), [0, -2]);
        assert_eq!(coset_site(KSym::C, 0, [0, 0]), [1, 0]);
    }

    #[test]
    fn varphi_values() {
        assert_eq!(varphi(&v1(root(1))), Z3Word(vec![1]));
        assert_eq!(varphi(&v1(glue(KSym::C))), Z3Word(vec![2]));
        assert_eq!(varphi(&LatticeVector::zero(1)), Z3Word(vec![0]));
    }

    #[test]
    fn pq_table() {
        assert_eq!(pq_values(KSym::A, KSym::A).1, 1);
        assert_eq!(pq_values(KSym::A, KSym::B).1, 0);
        assert_eq!(pq_values(KSym::A, KSym::C).1, 1);
        assert_eq!(pq_values(KSym::ZERO, KSym::C), (0, 0));
    }

    #[test]
    fn hermite_of_roots() {
        let lat = GluedLattice::root_sum(1);
        let b = lat.basis();
        assert_eq!(b.len(), 2);
        // det Gram of √2 A₂ is 12
        assert_eq!(lat.determinant(), int(12));
    }

    #[test]
    fn decomposition_of_image() {
        assert!(check_one_minus_tau_decomposition(24 * 6));
    }
}
