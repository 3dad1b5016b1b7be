//! Fusion products of irreducible modules, as tables: the rank-2 fixed-point
//! algebra, its tensor powers and code extensions, and the two coset
//! subalgebras the rank-2 case is built from.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;

use crate::characters::{labels, Ambient, LabelKind, ModuleLabel};
use crate::codes::{Code, CodeKind, KSym, KWord, Z3Word};
use crate::{Error, Result};

/// Modules of the kernel subalgebra: `M_k^0(ε)`, `W_k^0(ε)`, `M_k^c`,
/// `W_k^c`, `M_T(τ^i)(ε)` and `W_T(τ^i)(ε)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum KernelLabel {
    M0(u8),
    W0(u8),
    Mc,
    Wc,
    MT { power: u8, eps: u8 },
    WT { power: u8, eps: u8 },
}

/// Modules `M^j` and `W^j` of the three-state Potts algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PottsLabel {
    pub w: bool,
    pub charge: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FusionLabel {
    Module(LabelKind),
    Kernel(KernelLabel),
    Potts(PottsLabel),
}

impl fmt::Display for KernelLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KernelLabel::M0(e) => write!(f, "Mk0({e})"),
            KernelLabel::W0(e) => write!(f, "Wk0({e})"),
            KernelLabel::Mc => write!(f, "Mkc"),
            KernelLabel::Wc => write!(f, "Wkc"),
            KernelLabel::MT { power, eps } => write!(f, "MT({power})({eps})"),
            KernelLabel::WT { power, eps } => write!(f, "WT({power})({eps})"),
        }
    }
}

impl fmt::Display for PottsLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}t{}", if self.w { 'W' } else { 'M' }, self.charge)
    }
}

impl fmt::Display for FusionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FusionLabel::Module(k) => k.fmt(f),
            FusionLabel::Kernel(k) => k.fmt(f),
            FusionLabel::Potts(p) => p.fmt(f),
        }
    }
}

/// Formal nonnegative combination of labels.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FusionVector(pub BTreeMap<FusionLabel, u64>);

impl FusionVector {
    pub fn single(l: FusionLabel) -> Self {
        let mut v = Self::default();
        v.add(l, 1);
        v
    }

    pub fn add(&mut self, l: FusionLabel, n: u64) {
        if n > 0 {
            *self.0.entry(l).or_default() += n;
        }
    }

    pub fn add_all(&mut self, other: &FusionVector, times: u64) {
        for (l, n) in &other.0 {
            self.add(l.clone(), n * times);
        }
    }

    pub fn total(&self) -> u64 {
        self.0.values().sum()
    }
}

impl fmt::Display for FusionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (i, (l, n)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *n > 1 {
                write!(f, "{n} ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// A product is either a known combination or not determined by the tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Product {
    Defined(FusionVector),
    Undefined,
}

impl Product {
    pub fn defined(&self) -> Option<&FusionVector> {
        match self {
            Product::Defined(v) => Some(v),
            Product::Undefined => None,
        }
    }
}

impl fmt::Display for Product {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Product::Defined(v) => v.fmt(f),
            Product::Undefined => write!(f, "undefined"),
        }
    }
}

fn z3(x: i64) -> u8 {
    x.rem_euclid(3) as u8
}

fn untwisted0(gamma: Z3Word, eps: u8) -> FusionLabel {
    FusionLabel::Module(LabelKind::Untwisted {
        lambda: KWord::zero(gamma.len()),
        gamma,
        eps: Some(eps),
    })
}

/// Products of the thirty modules of the rank-2 algebra.
pub fn fuse_vl(a: &FusionLabel, b: &FusionLabel) -> Product {
    use LabelKind::*;
    let (FusionLabel::Module(x), FusionLabel::Module(y)) = (a, b) else {
        return Product::Undefined;
    };
    if matches!(x, Twisted { .. }) && matches!(y, Untwisted { .. }) {
        return fuse_vl(b, a);
    }
    let one = |w: &Z3Word| w.0.first().copied().unwrap_or(0) as i64;
    let plain = |j: i64| FusionLabel::Module(Untwisted {
        lambda: KWord(vec![KSym::C]),
        gamma: Z3Word(vec![z3(j)]),
        eps: None,
    });
    let twisted = |k: i64, power: u8, eps: i64| FusionLabel::Module(Twisted {
        eta: Z3Word(vec![z3(k)]),
        power,
        eps: z3(eps),
    });
    let mut out = FusionVector::default();
    match (x, y) {
        (Untwisted { lambda: l1, gamma: g1, eps: e1 }, Untwisted { lambda: l2, gamma: g2, eps: e2 }) => {
            let j = one(g1) + one(g2);
            match (l1.is_zero(), l2.is_zero()) {
                (true, true) => out.add(
                    untwisted0(Z3Word(vec![z3(j)]), z3(e1.unwrap_or(0) as i64 + e2.unwrap_or(0) as i64)),
                    1,
                ),
                (true, false) | (false, true) => out.add(plain(j), 1),
                (false, false) => {
                    for e in 0..3 {
                        out.add(untwisted0(Z3Word(vec![z3(j)]), e), 1);
                    }
                    out.add(plain(j), 2);
                }
            }
        }
        (Untwisted { lambda, gamma, eps: e1 }, Twisted { eta, power, eps: e2 }) => {
            let i = *power as i64;
            let k = one(eta) - i * one(gamma);
            if lambda.is_zero() {
                out.add(twisted(k, *power, i * e1.unwrap_or(0) as i64 + *e2 as i64), 1);
            } else {
                for e in 0..3 {
                    out.add(twisted(k, *power, e), 1);
                }
            }
        }
        _ => return Product::Undefined,
    }
    Product::Defined(out)
}

/// Products over `L^{⊕ℓ}` (`D = 0`) or `L_{0×D}`, with labels normalized.
fn fuse_coset(ambient: &Ambient, a: &LabelKind, b: &LabelKind) -> Result<Product> {
    use LabelKind::*;
    if matches!(a, Twisted { .. }) && matches!(b, Untwisted { .. }) {
        return fuse_coset(ambient, b, a);
    }
    let norm = |k: LabelKind| -> Result<FusionLabel> { Ok(FusionLabel::Module(ModuleLabel::new(k, ambient.clone())?.kind)) };
    let a = ModuleLabel::new(a.clone(), ambient.clone())?.kind;
    let b = ModuleLabel::new(b.clone(), ambient.clone())?.kind;
    let len = ambient.len();
    let mut out = FusionVector::default();
    match (&a, &b) {
        (Untwisted { lambda: l1, gamma: g1, eps: e1 }, Untwisted { lambda: l2, gamma: g2, eps: e2 }) => {
            let g = g1.add(g2);
            match (l1.is_zero(), l2.is_zero()) {
                (true, true) => out.add(
                    norm(Untwisted {
                        lambda: KWord::zero(len),
                        gamma: g,
                        eps: Some(z3(e1.unwrap_or(0) as i64 + e2.unwrap_or(0) as i64)),
                    })?,
                    1,
                ),
                (true, false) | (false, true) => {
                    let l = if l1.is_zero() { l2 } else { l1 };
                    out.add(norm(Untwisted { lambda: l.clone(), gamma: g, eps: None })?, 1);
                }
                (false, false) if l1.same_orbit(l2) => {
                    for e in 0..3 {
                        out.add(
                            norm(Untwisted {
                                lambda: KWord::zero(len),
                                gamma: g.clone(),
                                eps: Some(e),
                            })?,
                            1,
                        );
                    }
                    out.add(norm(Untwisted { lambda: l1.clone(), gamma: g, eps: None })?, 2);
                }
                (false, false) => {
                    for j in 0..3 {
                        out.add(
                            norm(Untwisted {
                                lambda: l1.add(&l2.tau_pow(j)),
                                gamma: g.clone(),
                                eps: None,
                            })?,
                            1,
                        );
                    }
                }
            }
        }
        (Untwisted { lambda, gamma, eps: e1 }, Twisted { eta, power, eps: e2 }) => {
            let i = *power as i64;
            let eta = eta.sub(&gamma.scale(i));
            if lambda.is_zero() {
                let eps = z3(i * e1.unwrap_or(0) as i64 + *e2 as i64);
                out.add(norm(Twisted { eta, power: *power, eps })?, 1);
            } else {
                for e in 0..3 {
                    out.add(norm(Twisted { eta: eta.clone(), power: *power, eps: e })?, 1);
                }
            }
        }
        _ => return Ok(Product::Undefined),
    }
    Ok(Product::Defined(out))
}

/// Products over `L^{⊕ℓ}`.  Labels that are not normalized are normalized.
pub fn fuse_ll(len: usize, a: &LabelKind, b: &LabelKind) -> Result<Product> {
    fuse_coset(&Ambient::Free(len), a, b)
}

/// Products over `L_{0×D}` for a self-orthogonal `D`.
pub fn fuse_d(d: &Code, a: &LabelKind, b: &LabelKind) -> Result<Product> {
    let ambient = Ambient::glued(Code::zero(CodeKind::K, d.length()), d.clone())?;
    fuse_coset(&ambient, a, b)
}

/// Product of two labels over the same ambient.
pub fn fuse_labels(a: &ModuleLabel, b: &ModuleLabel) -> Result<Product> {
    if !a.ambient.same_as(&b.ambient) {
        return Err(Error::InvalidArgument(format!("{a} and {b} live over different lattices")));
    }
    match &a.ambient {
        Ambient::Free(1) => Ok(fuse_vl(&FusionLabel::Module(a.kind.clone()), &FusionLabel::Module(b.kind.clone()))),
        Ambient::Free(_) => fuse_coset(&a.ambient, &a.kind, &b.kind),
        Ambient::Glued { c, .. } if c.size() == 1 => fuse_coset(&a.ambient, &a.kind, &b.kind),
        Ambient::Glued { .. } => Ok(Product::Undefined),
    }
}

/// The partial table for the kernel subalgebra: products among `M_k^0(ε)`,
/// `M_k^c` and with `M_T(τ^i)(ε)`.
pub fn fuse_kernel(a: &FusionLabel, b: &FusionLabel) -> Product {
    use KernelLabel::*;
    let (FusionLabel::Kernel(x), FusionLabel::Kernel(y)) = (a, b) else {
        return Product::Undefined;
    };
    let rank = |l: &KernelLabel| match l {
        M0(_) => 0,
        Mc => 1,
        MT { .. } => 2,
        _ => 3,
    };
    if rank(x) > rank(y) {
        return fuse_kernel(b, a);
    }
    let k = |l: KernelLabel| FusionLabel::Kernel(l);
    let mut out = FusionVector::default();
    match (x, y) {
        (M0(e1), M0(e2)) => out.add(k(M0(z3(*e1 as i64 + *e2 as i64))), 1),
        (M0(_), Mc) => out.add(k(Mc), 1),
        (Mc, Mc) => {
            for e in 0..3 {
                out.add(k(M0(e)), 1);
            }
            out.add(k(Mc), 2);
        }
        (M0(e1), MT { power, eps }) => out.add(
            k(MT {
                power: *power,
                eps: z3(*power as i64 * *e1 as i64 + *eps as i64),
            }),
            1,
        ),
        (Mc, MT { power, .. }) => {
            for e in 0..3 {
                out.add(k(MT { power: *power, eps: e }), 1);
            }
        }
        _ => return Product::Undefined,
    }
    Product::Defined(out)
}

/// `M^i × M^j = M^{i+j}`, `M^i × W^j = W^{i+j}`, `W^i × W^j = M^{i+j} + W^{i+j}`.
pub fn fuse_potts(a: &FusionLabel, b: &FusionLabel) -> Product {
    let (FusionLabel::Potts(x), FusionLabel::Potts(y)) = (a, b) else {
        return Product::Undefined;
    };
    let charge = z3(x.charge as i64 + y.charge as i64);
    let p = |w| FusionLabel::Potts(PottsLabel { w, charge });
    let mut out = FusionVector::default();
    if x.w && y.w {
        out.add(p(false), 1);
        out.add(p(true), 1);
    } else {
        out.add(p(x.w || y.w), 1);
    }
    Product::Defined(out)
}

/// A finite label set with a (partial) product.
pub enum Ring {
    /// The thirty modules of the rank-2 algebra.
    Rank2,
    Free(usize),
    Coset(Code),
    Kernel,
    Potts,
}

impl Ring {
    pub fn labels(&self) -> Result<Vec<FusionLabel>> {
        let modules = |amb: Ambient| -> Result<Vec<FusionLabel>> {
            Ok(labels(&amb)?.into_iter().map(|l| FusionLabel::Module(l.kind)).collect())
        };
        match self {
            Ring::Rank2 => modules(Ambient::Free(1)),
            Ring::Free(len) => modules(Ambient::Free(*len)),
            Ring::Coset(d) => modules(Ambient::glued(Code::zero(CodeKind::K, d.length()), d.clone())?),
            Ring::Kernel => {
                let mut out = Vec::new();
                for e in 0..3 {
                    out.push(KernelLabel::M0(e));
                    out.push(KernelLabel::W0(e));
                }
                out.push(KernelLabel::Mc);
                out.push(KernelLabel::Wc);
                for power in 1..=2 {
                    for eps in 0..3 {
                        out.push(KernelLabel::MT { power, eps });
                        out.push(KernelLabel::WT { power, eps });
                    }
                }
                Ok(out.into_iter().map(FusionLabel::Kernel).collect())
            }
            Ring::Potts => Ok([false, true]
                .into_iter()
                .flat_map(|w| (0..3).map(move |charge| FusionLabel::Potts(PottsLabel { w, charge })))
                .collect()),
        }
    }

    pub fn fuse(&self, a: &FusionLabel, b: &FusionLabel) -> Result<Product> {
        let modules = |f: &dyn Fn(&LabelKind, &LabelKind) -> Result<Product>| match (a, b) {
            (FusionLabel::Module(x), FusionLabel::Module(y)) => f(x, y),
            _ => Ok(Product::Undefined),
        };
        match self {
            Ring::Rank2 => Ok(fuse_vl(a, b)),
            Ring::Free(len) => modules(&|x, y| fuse_ll(*len, x, y)),
            Ring::Coset(d) => modules(&|x, y| fuse_d(d, x, y)),
            Ring::Kernel => Ok(fuse_kernel(a, b)),
            Ring::Potts => Ok(fuse_potts(a, b)),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct RingReport {
    pub pairs_checked: u64,
    pub triples_checked: u64,
    /// Lexicographically first violations, as text.
    pub violations: Vec<String>,
}

impl RingReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// The full product table of a ring, indexed by label position.
struct Table {
    index: HashMap<FusionLabel, usize>,
    products: Vec<Vec<Product>>,
}

impl Table {
    fn new(ring: &Ring, all: &[FusionLabel]) -> Result<Self> {
        let index = all.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        let products = all
            .par_iter()
            .map(|a| all.iter().map(|b| ring.fuse(a, b)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { index, products })
    }

    fn get(&self, a: &FusionLabel, b: &FusionLabel) -> Result<&Product> {
        let pos = |l: &FusionLabel| {
            self.index
                .get(l)
                .copied()
                .ok_or_else(|| Error::Domain(format!("product term {l} is not a label of the ring")))
        };
        Ok(&self.products[pos(a)?][pos(b)?])
    }

    /// `Σ n_l (l × c)` or `Σ n_l (c × l)`; `None` if any term is undefined.
    fn extend(&self, v: &FusionVector, c: &FusionLabel, on_left: bool) -> Result<Option<FusionVector>> {
        let mut out = FusionVector::default();
        for (l, n) in &v.0 {
            let p = if on_left { self.get(l, c)? } else { self.get(c, l)? };
            match p {
                Product::Defined(w) => out.add_all(w, *n),
                Product::Undefined => return Ok(None),
            }
        }
        Ok(Some(out))
    }
}

/// Commutativity on every defined pair and associativity on every triple
/// whose two bracketings are both fully defined.
pub fn check_ring(ring: &Ring) -> Result<RingReport> {
    let all = ring.labels()?;
    let table = Table::new(ring, &all)?;
    let per_a: Vec<Result<RingReport>> = (0..all.len())
        .into_par_iter()
        .map(|i| {
            let a = &all[i];
            let mut rep = RingReport::default();
            for (j, b) in all.iter().enumerate() {
                let ab = &table.products[i][j];
                let ba = &table.products[j][i];
                if ab != ba {
                    rep.violations.push(format!("{a} × {b} = {ab} but {b} × {a} = {ba}"));
                }
                let Product::Defined(ab) = ab else { continue };
                rep.pairs_checked += 1;
                for (k, c) in all.iter().enumerate() {
                    let Product::Defined(bc) = &table.products[j][k] else { continue };
                    let (Some(left), Some(right)) = (table.extend(ab, c, true)?, table.extend(bc, a, false)?) else {
                        continue;
                    };
                    rep.triples_checked += 1;
                    if left != right {
                        rep.violations.push(format!("({a} × {b}) × {c} = {left} but {a} × ({b} × {c}) = {right}"));
                    }
                }
            }
            Ok(rep)
        })
        .collect();
    let mut total = RingReport::default();
    for r in per_a {
        let r = r?;
        total.pairs_checked += r.pairs_checked;
        total.triples_checked += r.triples_checked;
        total.violations.extend(r.violations);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> FusionLabel {
        FusionLabel::Module(ModuleLabel::parse(s, Ambient::Free(1)).unwrap().kind)
    }

    #[test]
    fn rank_two_examples() {
        assert_eq!(fuse_vl(&m("V(0,1)[1]"), &m("V(0,2)[2]")), Product::Defined(FusionVector::single(m("V(0,0)[0]"))));
        let got = fuse_vl(&m("V(c,0)"), &m("V(c,0)")).to_string();
        assert_eq!(got, "V(0,0)[0] + V(0,0)[1] + V(0,0)[2] + 2 V(c,0)");
        assert_eq!(
            fuse_vl(&m("V(0,1)[2]"), &m("T(0,1)[1]")),
            Product::Defined(FusionVector::single(m("T(2,1)[0]")))
        );
        // i = 2: k + j₁ and 2ε₁ + ε₂
        assert_eq!(
            fuse_vl(&m("V(0,1)[1]"), &m("T(0,2)[0]")),
            Product::Defined(FusionVector::single(m("T(1,2)[2]")))
        );
        assert_eq!(fuse_vl(&m("T(0,1)[0]"), &m("T(0,2)[0]")), Product::Undefined);
    }

    #[test]
    fn potts_ring() {
        let r = check_ring(&Ring::Potts).unwrap();
        assert!(r.passed());
        assert_eq!(r.pairs_checked, 36);
        assert_eq!(r.triples_checked, 216);
    }

    #[test]
    fn kernel_ring_is_consistent() {
        let r = check_ring(&Ring::Kernel).unwrap();
        assert!(r.passed(), "{:?}", r.violations);
        assert_eq!(Ring::Kernel.labels().unwrap().len(), 20);
    }
}
