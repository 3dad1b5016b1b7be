//! The twisted-sector subgroup ladder, the characters `ψ_η` and the
//! irreducible modules `T_{ψη}` with basis indexed by the ternary code.
//!
//! Every element `x` of the twisted extension over `L_{C×0}` has a normal
//! form `κ₂₄^p · g(γ) · k` where `γ = φ(x̄)`,
//! `g(γ) = Π_s (κ₃ e^{β₁^{(s)}})^{γ_s}` and `k = a σ(a)⁻¹` lies in `K₀`.
//! Here `σ` is `τ` or `τ²` depending on the extension kind.

use std::collections::BTreeMap;
use std::fmt;

use crate::codes::{Code, Z3Word};
use crate::groups::{c0_twisted, inverse, mult, power, tau_lift, ExtensionKind, GroupElement};
use crate::lattice::{coset_of, varphi, GluedLattice, LatticeVector};
use crate::scalars::Cyclotomic;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SubgroupLabel {
    /// `(1−τ)L_{C×0}`, bar level.
    M0,
    /// `(1−τ)L_{C×D}`, bar level.
    M,
    /// Radical of the twisted commutator form, bar level.
    R,
    /// `L_{C×0}`, bar level.
    LC0,
    K0,
    K,
    K1,
    K2,
}

impl SubgroupLabel {
    pub const ALL: [SubgroupLabel; 8] = [
        SubgroupLabel::M0,
        SubgroupLabel::M,
        SubgroupLabel::R,
        SubgroupLabel::LC0,
        SubgroupLabel::K0,
        SubgroupLabel::K,
        SubgroupLabel::K1,
        SubgroupLabel::K2,
    ];
}

fn sigma_power(kind: ExtensionKind) -> Result<i64> {
    kind.twist_power()
        .ok_or_else(|| Error::InvalidArgument("the untwisted extension has no twisted sector".into()))
}

/// `σ(x)` for the lifted automorphism `σ = τ^power`.
fn sigma_lift(kind: ExtensionKind, x: &GroupElement) -> Result<GroupElement> {
    let p = sigma_power(kind)?;
    Ok((0..p).fold(x.clone(), |acc, _| tau_lift(kind, &acc)))
}

/// The unique `u` with `(1 − σ)u = v`, if integral.  Since
/// `1 − τ² = (1 − τ)(1 + τ)` and `(1 + τ)⁻¹ = −τ`, the second case reduces
/// to the first.
pub fn one_minus_sigma_preimage(power: i64, v: &LatticeVector) -> Option<LatticeVector> {
    let u = v.one_minus_tau_preimage()?;
    Some(if power.rem_euclid(3) == 2 { u.tau().neg() } else { u })
}

/// `a σ(a)⁻¹` for `a = e^α`.
pub fn sigma_commutator(kind: ExtensionKind, alpha: &LatticeVector) -> Result<GroupElement> {
    let a = GroupElement::lift(alpha.clone());
    mult(kind, &a, &inverse(kind, &sigma_lift(kind, &a)?)?)
}

/// `κ₃ e^{β₁^{(s)}}`.
pub fn kappa3_root(len: usize, s: usize) -> GroupElement {
    GroupElement::lift(LatticeVector::root_at(len, s, 1)).times_kappa(8)
}

/// `g(γ) = Π_s (κ₃ e^{β₁^{(s)}})^{γ_s}`.
pub fn ladder_element(kind: ExtensionKind, gamma: &Z3Word) -> Result<GroupElement> {
    let len = gamma.len();
    let mut acc = GroupElement::identity(len);
    for (s, g) in gamma.0.iter().enumerate() {
        acc = mult(kind, &acc, &power(kind, &kappa3_root(len, s), *g as i64)?)?;
    }
    Ok(acc)
}

/// `x = κ₂₄^p · g(γ) · k` with `k ∈ K₀`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    pub kappa: i64,
    pub gamma: Z3Word,
    /// `ā` with `k = e^ā σ(e^ā)⁻¹`.
    pub k_source: LatticeVector,
}

/// Normal form of an element whose bar lies in `L_{K^ℓ×0}`.
pub fn normal_form(kind: ExtensionKind, x: &GroupElement) -> Result<NormalForm> {
    let p = sigma_power(kind)?;
    let (label, _) = coset_of(&x.bar);
    if !label.gamma.is_zero() {
        return Err(Error::Domain(format!("{} is not in L_(C×0)", x.bar)));
    }
    let gamma = varphi(&x.bar);
    let y = mult(kind, &inverse(kind, &ladder_element(kind, &gamma)?)?, x)?;
    let source = one_minus_sigma_preimage(p, &y.bar)
        .ok_or_else(|| Error::Domain(format!("(1−σ)⁻¹({}) is not integral", y.bar)))?;
    let k = sigma_commutator(kind, &source)?;
    if k.bar != y.bar {
        return Err(Error::Domain("normal form mismatch".into()));
    }
    Ok(NormalForm {
        kappa: (y.kappa - k.kappa).rem_euclid(24),
        gamma,
        k_source: source,
    })
}

/// Membership of `x` (an element of the twisted extension over `lat`) in
/// the given subgroup.  Bar-level labels test `x̄` only.
pub fn subgroup_member(kind: ExtensionKind, label: SubgroupLabel, x: &GroupElement, lat: &GluedLattice) -> Result<bool> {
    let p = sigma_power(kind)?;
    if !lat.contains(&x.bar) {
        return Ok(false);
    }
    let in_c0 = coset_of(&x.bar).0.gamma.is_zero();
    let phi = varphi(&x.bar);
    let d = &lat.d;
    Ok(match label {
        SubgroupLabel::LC0 => in_c0,
        SubgroupLabel::M0 => in_c0 && phi.is_zero(),
        SubgroupLabel::M => in_c0 && d.contains_z3(&phi),
        SubgroupLabel::R => in_c0 && d.dual().contains_z3(&phi),
        SubgroupLabel::K0 | SubgroupLabel::K => {
            let Some(src) = one_minus_sigma_preimage(p, &x.bar) else {
                return Ok(false);
            };
            let allowed = if label == SubgroupLabel::K0 {
                coset_of(&src).0.gamma.is_zero() && lat.contains(&src)
            } else {
                lat.contains(&src)
            };
            allowed && sigma_commutator(kind, &src)? == *x
        }
        SubgroupLabel::K1 | SubgroupLabel::K2 => {
            if !in_c0 {
                return Ok(false);
            }
            let nf = normal_form(kind, x)?;
            nf.kappa == 0 && (label == SubgroupLabel::K2 || d.dual().contains_z3(&nf.gamma))
        }
    })
}

/// The character `ψ_η` of the twisted extension over `L_{C×0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Psi {
    pub kind: ExtensionKind,
    pub eta: Z3Word,
}

impl Psi {
    pub fn new(kind: ExtensionKind, eta: Z3Word) -> Self {
        Self { kind, eta }
    }
}

/// `ψ_η(x) = ζ₂₄^p ζ₃^{γ·η}` for `x = κ₂₄^p g(γ) k`.
pub fn psi_eval(psi: &Psi, x: &GroupElement) -> Result<Cyclotomic> {
    let nf = normal_form(psi.kind, x)?;
    Ok(Cyclotomic::zeta24(nf.kappa) * Cyclotomic::zeta3(nf.gamma.dot(&psi.eta) as i64))
}

/// `a(γ) = Σ_s γ_s(−β₁^{(s)} + β₂^{(s)})/3`, with `γ_s ∈ {0,1,2}`.
pub fn a_gamma(gamma: &Z3Word) -> LatticeVector {
    LatticeVector::new(gamma.0.iter().map(|g| [0, -2 * *g as i64]).collect())
}

/// `T_{ψη}` over the twisted extension of `L_{C×D}`.
#[derive(Clone, Debug)]
pub struct TModule {
    pub kind: ExtensionKind,
    pub lattice: GluedLattice,
    pub eta: Z3Word,
    basis: Vec<Z3Word>,
}

impl TModule {
    pub fn new(kind: ExtensionKind, lattice: GluedLattice, eta: Z3Word) -> Result<Self> {
        sigma_power(kind)?;
        if eta.len() != lattice.len() {
            return Err(Error::LengthMismatch(lattice.len(), eta.len()));
        }
        if !lattice.is_integral() {
            return Err(Error::Domain("the twisted extension needs an integral lattice".into()));
        }
        let basis = lattice.d.z3_words();
        Ok(Self { kind, lattice, eta, basis })
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Basis labels `γ ∈ D`.
    pub fn basis(&self) -> &[Z3Word] {
        &self.basis
    }

    pub fn psi(&self) -> Psi {
        Psi::new(self.kind, self.eta.clone())
    }
}

/// Action of `x` on the basis vector `e^{a(γ)} ⊗ 1`: returns the target
/// label `γ + δ` and the scalar, where `x ∈ e^{a(δ)} L̂_{C×0}`.
pub fn t_action(module: &TModule, x: &GroupElement, gamma: &Z3Word) -> Result<(Z3Word, Cyclotomic)> {
    let kind = module.kind;
    let power = sigma_power(kind)?;
    if !module.lattice.contains(&x.bar) {
        return Err(Error::Domain(format!("{} is not in the lattice", x.bar)));
    }
    if !module.lattice.d.contains_z3(gamma) {
        return Err(Error::Domain(format!("{gamma} is not a codeword")));
    }
    let delta = coset_of(&x.bar).0.gamma;
    let shift = GroupElement::lift(a_gamma(&delta));
    // x = e^{a(δ)} b
    let b = mult(kind, &inverse(kind, &shift)?, x)?;
    let target = delta.add(gamma);
    // e^{a(δ)} e^{a(γ)} = e^{a(δ+γ)} c
    let prod = mult(kind, &shift, &GroupElement::lift(a_gamma(gamma)))?;
    let c = mult(kind, &inverse(kind, &GroupElement::lift(a_gamma(&target)))?, &prod)?;
    let psi = module.psi();
    let comm = c0_twisted(power, &b.bar, &a_gamma(gamma))?;
    let scalar = Cyclotomic::zeta24(comm) * psi_eval(&psi, &b)? * psi_eval(&psi, &c)?;
    Ok((target, scalar))
}

/// Scalar by which a central element acts on every basis vector, if it does.
pub fn central_scalar(module: &TModule, x: &GroupElement) -> Result<Option<Cyclotomic>> {
    let mut seen: Option<Cyclotomic> = None;
    for g in module.basis() {
        let (t, s) = t_action(module, x, g)?;
        if t != *g || seen.as_ref().is_some_and(|v| *v != s) {
            return Ok(None);
        }
        seen = Some(s);
    }
    Ok(seen)
}

/// Partition of `candidates ⊂ D^⊥` into equivalence classes of `T_{ψη}`.
/// Two candidates are equivalent when the multisets
/// `{ψ_{η−γ}|_{K₁} : γ ∈ D}` agree, evaluated on ladder generators of `K₁`.
pub fn equivalence_classes(kind: ExtensionKind, d: &Code, candidates: &[Z3Word]) -> Result<Vec<Vec<Z3Word>>> {
    let dual = d.dual();
    let gens: Vec<GroupElement> = dual
        .z3_basis()
        .iter()
        .map(|g| ladder_element(kind, g))
        .collect::<Result<_>>()?;
    let mut classes: BTreeMap<Vec<Vec<u8>>, Vec<Z3Word>> = BTreeMap::new();
    for eta in candidates {
        if !dual.contains_z3(eta) {
            return Err(Error::Domain(format!("{eta} is not in the dual code")));
        }
        let mut key = Vec::new();
        for gamma in d.z3_words() {
            let psi = Psi::new(kind, eta.sub(&gamma));
            let values = gens
                .iter()
                .map(|g| psi_eval(&psi, g).map(|v| zeta3_exponent(&v)))
                .collect::<Result<Vec<_>>>()?;
            key.push(values);
        }
        key.sort();
        classes.entry(key).or_default().push(eta.clone());
    }
    Ok(classes.into_values().collect())
}

/// Exponent `k` with `v = ζ₃^k`.
fn zeta3_exponent(v: &Cyclotomic) -> u8 {
    (0..3u8)
        .find(|k| Cyclotomic::zeta3(*k as i64) == *v)
        .expect("value is a cube root of unity")
}

/// One line per class of `D^⊥/D`: a representative and the module dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub representative: Z3Word,
    pub class_size: usize,
    pub dimension: usize,
}

impl fmt::Display for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "eta = {}  (class of {})  dim T = {}",
            self.representative, self.class_size, self.dimension
        )
    }
}

pub fn catalog(kind: ExtensionKind, d: &Code) -> Result<Vec<CatalogEntry>> {
    let classes = equivalence_classes(kind, d, &d.dual().z3_words())?;
    let dim = d.size() as usize;
    Ok(classes
        .into_iter()
        .map(|c| CatalogEntry {
            representative: c.iter().min().cloned().expect("nonempty class"),
            class_size: c.len(),
            dimension: dim,
        })
        .collect())
}
