//! Central extensions of the glued lattice by `⟨κ₂₄⟩`.
//!
//! An element is `κ₂₄^p e^α`.  The untwisted product uses the bilinear
//! cocycle `ε₁`; the twisted products shift it by `ε₀`, which changes the
//! commutator map to the form built from the order-3 isometry.

use std::fmt;

use crate::codes::Z3Word;
use crate::lattice::{coset_of, pq_values, LatticeVector};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExtensionKind {
    Untwisted,
    /// Commutator map built from `τ`.
    Twisted,
    /// The same construction with `τ` replaced by `τ²`.
    TwistedSquare,
}

impl ExtensionKind {
    /// Power of `τ` the twisted construction uses; `None` for untwisted.
    pub fn twist_power(self) -> Option<i64> {
        match self {
            ExtensionKind::Untwisted => None,
            ExtensionKind::Twisted => Some(1),
            ExtensionKind::TwistedSquare => Some(2),
        }
    }

    pub fn twisted(power: i64) -> Self {
        match power.rem_euclid(3) {
            1 => ExtensionKind::Twisted,
            2 => ExtensionKind::TwistedSquare,
            _ => ExtensionKind::Untwisted,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    /// Exponent of `κ₂₄`, reduced mod 24.
    pub kappa: i64,
    pub bar: LatticeVector,
}

impl GroupElement {
    pub fn new(kappa: i64, bar: LatticeVector) -> Self {
        Self {
            kappa: kappa.rem_euclid(24),
            bar,
        }
    }

    /// `e^α`.
    pub fn lift(bar: LatticeVector) -> Self {
        Self::new(0, bar)
    }

    pub fn identity(len: usize) -> Self {
        Self::lift(LatticeVector::zero(len))
    }

    /// `κ_n = κ₂₄^(24/n)` as an element.
    pub fn kappa_n(len: usize, n: i64) -> Self {
        assert!(n > 0 && 24 % n == 0, "{n} must divide 24");
        Self::new(24 / n, LatticeVector::zero(len))
    }

    pub fn times_kappa(&self, k: i64) -> Self {
        Self::new(self.kappa + k, self.bar.clone())
    }

    pub fn len(&self) -> usize {
        self.bar.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bar.is_empty()
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k^{} * e({})", self.kappa, self.bar)
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `ε₁(α, β) = Σ_s −6 m₂ n₁ mod 24`.
pub fn eps1(a: &LatticeVector, b: &LatticeVector) -> i64 {
    a.coords
        .iter()
        .zip(&b.coords)
        .map(|(m, n)| -6 * m[1] * n[0])
        .sum::<i64>()
        .rem_euclid(24)
}

/// `c₀(α, β) = ε₁(α, β) − ε₁(β, α) mod 24`.
pub fn c0(a: &LatticeVector, b: &LatticeVector) -> i64 {
    (eps1(a, b) - eps1(b, a)).rem_euclid(24)
}

/// `k · ⟨u, v⟩ mod 24`, failing unless `⟨u, v⟩` is an integer.
fn scaled_pairing(k: i64, u: &LatticeVector, v: &LatticeVector) -> Result<i64> {
    let p6 = u.pair6(v);
    if p6 % 6 != 0 {
        return Err(Error::Domain(format!("⟨{u}, {v}⟩ is not an integer")));
    }
    Ok((k * p6 / 6).rem_euclid(24))
}

/// Twisted commutator form `8⟨σα + 2σ²α, β⟩ mod 24` for `σ = τ^power`.
pub fn c0_twisted(power: i64, a: &LatticeVector, b: &LatticeVector) -> Result<i64> {
    let s1 = a.tau_pow(power);
    let s2 = a.tau_pow(2 * power);
    scaled_pairing(8, &s1.add(&s2.scale(2)), b)
}

/// `c₀^τ(α, β) = 8⟨τα + 2τ²α, β⟩ mod 24`.
pub fn c0_tau(a: &LatticeVector, b: &LatticeVector) -> Result<i64> {
    c0_twisted(1, a, b)
}

/// The same form through coset data: `8(γ·φ(β) − δ·φ(α))` where
/// `α ∈ L_{(λ,γ)}` and `β ∈ L_{(μ,δ)}`.
pub fn c0_tau_explicit(a: &LatticeVector, b: &LatticeVector) -> i64 {
    let (la, oa) = coset_of(a);
    let (lb, ob) = coset_of(b);
    let phi = |x: &crate::codes::KWord, offs: &[[i64; 2]]| {
        Z3Word(
            x.0.iter()
                .zip(offs)
                .map(|(s, m)| (m[0] + m[1] - pq_values(*s, *s).0 as i64).rem_euclid(3) as u8)
                .collect(),
        )
    };
    let pa = phi(&la.lambda, &oa);
    let pb = phi(&lb.lambda, &ob);
    (8 * (la.gamma.dot(&pb) as i64 - lb.gamma.dot(&pa) as i64)).rem_euclid(24)
}

/// `ε₀(α, β) = 20⟨σ²α, β⟩ mod 24` for `σ = τ^power`.
pub fn eps0_twisted(power: i64, a: &LatticeVector, b: &LatticeVector) -> Result<i64> {
    scaled_pairing(20, &a.tau_pow(2 * power), b)
}

pub fn eps0(a: &LatticeVector, b: &LatticeVector) -> Result<i64> {
    eps0_twisted(1, a, b)
}

/// Cocycle of the product of the given kind.
pub fn cocycle(kind: ExtensionKind, a: &LatticeVector, b: &LatticeVector) -> Result<i64> {
    let base = eps1(a, b);
    match kind.twist_power() {
        None => Ok(base),
        Some(p) => Ok((base - eps0_twisted(p, a, b)?).rem_euclid(24)),
    }
}

pub fn mult(kind: ExtensionKind, x: &GroupElement, y: &GroupElement) -> Result<GroupElement> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch(x.len(), y.len()));
    }
    let c = cocycle(kind, &x.bar, &y.bar)?;
    Ok(GroupElement::new(x.kappa + y.kappa + c, x.bar.add(&y.bar)))
}

pub fn inverse(kind: ExtensionKind, x: &GroupElement) -> Result<GroupElement> {
    let nb = x.bar.neg();
    let c = cocycle(kind, &x.bar, &nb)?;
    Ok(GroupElement::new(-x.kappa - c, nb))
}

pub fn power(kind: ExtensionKind, x: &GroupElement, n: i64) -> Result<GroupElement> {
    let base = if n < 0 { inverse(kind, x)? } else { x.clone() };
    let mut acc = GroupElement::identity(x.len());
    for _ in 0..n.abs() {
        acc = mult(kind, &acc, &base)?;
    }
    Ok(acc)
}

/// `x y x⁻¹ y⁻¹`.
pub fn commutator(kind: ExtensionKind, x: &GroupElement, y: &GroupElement) -> Result<GroupElement> {
    let xy = mult(kind, x, y)?;
    let xyx = mult(kind, &xy, &inverse(kind, x)?)?;
    mult(kind, &xyx, &inverse(kind, y)?)
}

/// Lift of the isometry: `e^{m₁b₁+m₂b₂} ↦ κ₈^{3m₁²+2m₂²+6m₁m₂−2m₁} e^{τ(·)}`
/// sitewise.  The twisted extensions share the underlying set, so the same
/// map serves for every kind.
pub fn tau_lift(_kind: ExtensionKind, x: &GroupElement) -> GroupElement {
    let k8: i64 = x
        .bar
        .coords
        .iter()
        .map(|m| 3 * m[0] * m[0] + 2 * m[1] * m[1] + 6 * m[0] * m[1] - 2 * m[0])
        .sum();
    GroupElement::new(x.kappa + 3 * k8, x.bar.tau())
}

/// `a ↦ a⁻¹ κ₂^{⟨ā,ā⟩/2}` in the untwisted extension.
pub fn theta_lift(x: &GroupElement) -> Result<GroupElement> {
    let n6 = x.bar.norm6();
    if n6 % 12 != 0 {
        return Err(Error::Domain(format!("{} has odd or fractional norm", x.bar)));
    }
    let inv = inverse(ExtensionKind::Untwisted, x)?;
    Ok(inv.times_kappa(12 * (n6 / 12)))
}
