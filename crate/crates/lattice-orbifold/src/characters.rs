//! Graded dimensions and τ-traces of the irreducible modules of the
//! τ-fixed subalgebras, and the check that twisted modules split into
//! tensor products of rank-2 pieces.

use std::fmt;

use rayon::prelude::*;

use crate::codes::{all_z3_words, orbit_representatives, Code, CodeKind, KSym, KWord, Z3Word};
use crate::lattice::{coset_theta, CosetLabel, GluedLattice};
use crate::scalars::{rat, Cyclotomic, QSeries, EXP_DEN};
use crate::{Error, Result};

/// Lattice a label lives over: `L^{⊕ℓ}` or `L_{C×D}`.
#[derive(Clone, Debug)]
pub enum Ambient {
    Free(usize),
    Glued { c: Code, d: Code },
}

impl Ambient {
    pub fn len(&self) -> usize {
        match self {
            Ambient::Free(l) => *l,
            Ambient::Glued { c, .. } => c.length(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn glued(c: Code, d: Code) -> Result<Self> {
        if c.kind() != CodeKind::K || d.kind() != CodeKind::Z3 {
            return Err(Error::InvalidArgument("expected a K-code and a ternary code".into()));
        }
        if c.length() != d.length() {
            return Err(Error::LengthMismatch(c.length(), d.length()));
        }
        if !d.is_self_orthogonal() {
            return Err(Error::Domain("the ternary code must be self-orthogonal".into()));
        }
        Ok(Ambient::Glued { c, d })
    }

    pub fn lattice(&self) -> GluedLattice {
        match self {
            Ambient::Free(l) => GluedLattice::root_sum(*l),
            Ambient::Glued { c, d } => GluedLattice::new(c.clone(), d.clone()).expect("validated codes"),
        }
    }

    fn d_code(&self) -> Code {
        match self {
            Ambient::Free(l) => Code::zero(CodeKind::Z3, *l),
            Ambient::Glued { d, .. } => d.clone(),
        }
    }

    /// True when `C` is the zero code, so the classification by cosets applies.
    fn c_is_zero(&self) -> bool {
        match self {
            Ambient::Free(_) => true,
            Ambient::Glued { c, .. } => c.size() == 1,
        }
    }

    /// Same length and the same codes.
    pub fn same_as(&self, other: &Ambient) -> bool {
        match (self, other) {
            (Ambient::Free(a), Ambient::Free(b)) => a == b,
            (Ambient::Glued { c: c1, d: d1 }, Ambient::Glued { c: c2, d: d2 }) => {
                c1.same_code(c2) && d1.same_code(d2)
            }
            _ => false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LabelKind {
    /// `V_{L_{(λ,γ)}}`, split by the `τ`-eigenvalue `ζ₃^ε` when `λ = 0`.
    Untwisted {
        lambda: KWord,
        gamma: Z3Word,
        eps: Option<u8>,
    },
    /// `V^{T,η}(τ^power)[ε]`, with `ε` the eigenvalue exponent of `τ^power`.
    Twisted { eta: Z3Word, power: u8, eps: u8 },
}

#[derive(Clone, Debug)]
pub struct ModuleLabel {
    pub kind: LabelKind,
    pub ambient: Ambient,
}

impl PartialEq for ModuleLabel {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.ambient.same_as(&other.ambient)
    }
}

/// The orbit member whose first nonzero symbol is `c`.
pub fn orbit_label(lambda: &KWord) -> KWord {
    (0..3)
        .map(|k| lambda.tau_pow(k))
        .find(|w| w.0.iter().find(|x| !x.is_zero()).is_none_or(|x| *x == KSym::C))
        .expect("τ permutes a, b, c transitively")
}

impl ModuleLabel {
    /// Validates and normalizes: `λ` to its orbit label, `γ` and `η` modulo `D`.
    pub fn new(kind: LabelKind, ambient: Ambient) -> Result<Self> {
        let len = ambient.len();
        let d = ambient.d_code();
        let kind = match kind {
            LabelKind::Untwisted { lambda, gamma, eps } => {
                check_len(len, lambda.len())?;
                check_len(len, gamma.len())?;
                if lambda.is_zero() != eps.is_some() {
                    return Err(Error::InvalidArgument(
                        "an eigenvalue label is required exactly when λ = 0".into(),
                    ));
                }
                check_eps(eps.unwrap_or(0))?;
                if !in_dual(&d, &gamma) {
                    return Err(Error::Domain(format!("γ = {gamma} is not in the dual of D")));
                }
                let gamma = d.reduce_z3(&gamma);
                if !ambient.c_is_zero() && (!lambda.is_zero() || !gamma.is_zero()) {
                    return Err(Error::Domain(
                        "over a nonzero K-code only the module V_{L_{C×D}} itself is supported".into(),
                    ));
                }
                LabelKind::Untwisted {
                    lambda: orbit_label(&lambda),
                    gamma,
                    eps,
                }
            }
            LabelKind::Twisted { eta, power, eps } => {
                check_len(len, eta.len())?;
                check_eps(eps)?;
                if power != 1 && power != 2 {
                    return Err(Error::InvalidArgument(format!("twist power {power} is not 1 or 2")));
                }
                if !in_dual(&d, &eta) {
                    return Err(Error::Domain(format!("η = {eta} is not in the dual of D")));
                }
                LabelKind::Twisted {
                    eta: d.reduce_z3(&eta),
                    power,
                    eps,
                }
            }
        };
        Ok(Self { kind, ambient })
    }

    pub fn untwisted(ambient: Ambient, lambda: KWord, gamma: Z3Word, eps: Option<u8>) -> Result<Self> {
        Self::new(LabelKind::Untwisted { lambda, gamma, eps }, ambient)
    }

    pub fn twisted(ambient: Ambient, eta: Z3Word, power: u8, eps: u8) -> Result<Self> {
        Self::new(LabelKind::Twisted { eta, power, eps }, ambient)
    }

    /// Parses `V(λ,γ)`, `V(λ,γ)[ε]` or `T(η,i)[ε]`.
    pub fn parse(text: &str, ambient: Ambient) -> Result<Self> {
        let bad = |m: &str| Error::Parse {
            line: 1,
            column: 1,
            message: format!("{m} in label '{text}'"),
        };
        let t = text.trim();
        let (head, eps) = match t.find('[') {
            Some(p) => {
                let inner = t[p..]
                    .strip_prefix('[')
                    .and_then(|r| r.strip_suffix(']'))
                    .ok_or_else(|| bad("unbalanced brackets"))?;
                let e: u8 = inner.trim().parse().map_err(|_| bad("bad eigenvalue"))?;
                (&t[..p], Some(e))
            }
            None => (t, None),
        };
        let (tag, args) = head
            .split_once('(')
            .and_then(|(tag, rest)| rest.strip_suffix(')').map(|a| (tag.trim(), a)))
            .ok_or_else(|| bad("expected NAME(args)"))?;
        let (x, y) = args.split_once(',').ok_or_else(|| bad("expected two arguments"))?;
        match tag {
            "V" => Self::untwisted(ambient, KWord::parse(x.trim())?, Z3Word::parse(y.trim())?, eps),
            "T" => {
                let power: u8 = y.trim().parse().map_err(|_| bad("bad twist power"))?;
                let eps = eps.ok_or_else(|| bad("twisted labels need [ε]"))?;
                Self::twisted(ambient, Z3Word::parse(x.trim())?, power, eps)
            }
            _ => Err(bad("unknown module name")),
        }
    }
}

impl fmt::Display for LabelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LabelKind::Untwisted { lambda, gamma, eps } => {
                write!(f, "V({lambda},{gamma})")?;
                if let Some(e) = eps {
                    write!(f, "[{e}]")?;
                }
                Ok(())
            }
            LabelKind::Twisted { eta, power, eps } => write!(f, "T({eta},{power})[{eps}]"),
        }
    }
}

impl fmt::Display for ModuleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.kind.fmt(f)
    }
}

fn in_dual(d: &Code, w: &Z3Word) -> bool {
    d.z3_basis().iter().all(|g| g.dot(w) == 0)
}

fn check_len(want: usize, got: usize) -> Result<()> {
    if want != got {
        return Err(Error::LengthMismatch(want, got));
    }
    Ok(())
}

fn check_eps(e: u8) -> Result<()> {
    if e > 2 {
        return Err(Error::InvalidArgument(format!("eigenvalue label {e} is not in Z₃")));
    }
    Ok(())
}

fn check_power(power: u8) -> Result<()> {
    if power == 1 || power == 2 {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("twist power {power} is not 1 or 2")))
    }
}

/// `Π_{n≥0} [(1 − ζ₃^{2t} q^{n+1/3})(1 − ζ₃^t q^{n+2/3})]^{−ℓ}` up to `order/18`.
fn twisted_heisenberg(len: usize, t: i64, order: i64) -> QSeries {
    let mut one = QSeries::one(order);
    let third = EXP_DEN / 3;
    let mut n = 0;
    while EXP_DEN * n + third <= order {
        one = one.mul(&QSeries::geometric(&Cyclotomic::zeta3(2 * t), EXP_DEN * n + third, order));
        one = one.mul(&QSeries::geometric(&Cyclotomic::zeta3(t), EXP_DEN * n + 2 * third, order));
        n += 1;
    }
    one.pow(len as u32)
}

/// `Π_{n≥1} [(1 − ζ₃^t q^n)(1 − ζ₃^{2t} q^n)]^{−ℓ}`: the trace of `τ^t` on `M(1)`.
fn heisenberg_trace(len: usize, t: i64, order: i64) -> QSeries {
    let mut one = QSeries::one(order);
    let mut n = 1;
    while EXP_DEN * n <= order {
        one = one.mul(&QSeries::geometric(&Cyclotomic::zeta3(t), EXP_DEN * n, order));
        one = one.mul(&QSeries::geometric(&Cyclotomic::zeta3(2 * t), EXP_DEN * n, order));
        n += 1;
    }
    one.pow(len as u32)
}

/// Graded dimension of `S[τ^i]`, lowest weight `ℓ/9`.
pub fn char_s_tau(len: usize, power: u8, order: i64) -> Result<QSeries> {
    trace_tau_s(len, power, 0, order)
}

/// Graded trace of `σ^t` on `S[σ]` for `σ = τ^power`.  A variable of mode
/// `−n − 1/3` carries `ζ₃^2`, one of mode `−n − 2/3` carries `ζ₃`.
pub fn trace_tau_s(len: usize, power: u8, t: i64, order: i64) -> Result<QSeries> {
    check_power(power)?;
    let shift = 2 * len as i64;
    if order < shift {
        return Ok(QSeries::zero(order));
    }
    Ok(twisted_heisenberg(len, t, order - shift).shift(shift))
}

/// `(1/3) Σ_t ζ₃^{−εt} trace(t)`.
fn eigen_split(eps: u8, trace: impl Fn(i64) -> Result<QSeries>) -> Result<QSeries> {
    let mut out: Option<QSeries> = None;
    for t in 0..3 {
        let term = trace(t)?.scale(&Cyclotomic::zeta3(-(eps as i64) * t).scale(&rat(1, 3)));
        out = Some(match out {
            None => term,
            Some(acc) => acc.add(&term),
        });
    }
    Ok(out.expect("three terms"))
}

/// Theta series of the lattice part of an untwisted module.
fn lattice_theta(ambient: &Ambient, lambda: &KWord, gamma: &Z3Word, order: i64) -> QSeries {
    match ambient {
        Ambient::Free(_) => coset_theta(&CosetLabel::new(lambda.clone(), gamma.clone()), order),
        Ambient::Glued { c, d } if c.size() == 1 => {
            let mut out = QSeries::zero(order);
            for delta in d.z3_words() {
                out = out.add(&coset_theta(&CosetLabel::new(lambda.clone(), gamma.add(&delta)), order));
            }
            out
        }
        Ambient::Glued { .. } => ambient.lattice().theta_series(order),
    }
}

/// Whether the lattice part contains `0`, the only `τ`-fixed vector.
fn contains_fixed_vector(ambient: &Ambient, lambda: &KWord, gamma: &Z3Word) -> bool {
    lambda.is_zero() && ambient.d_code().contains_z3(gamma)
}

/// Graded trace of `σ^t` on the whole (unsplit) module, where `σ = τ` on
/// untwisted modules and `σ = τ^power` on twisted ones.
pub fn module_trace(label: &ModuleLabel, t: i64, order: i64) -> Result<QSeries> {
    let len = label.ambient.len();
    match &label.kind {
        LabelKind::Untwisted { lambda, gamma, .. } => {
            if t.rem_euclid(3) == 0 {
                let theta = lattice_theta(&label.ambient, lambda, gamma, order);
                Ok(theta.mul(&heisenberg_trace(len, 0, order)))
            } else if contains_fixed_vector(&label.ambient, lambda, gamma) {
                Ok(heisenberg_trace(len, t, order))
            } else {
                Ok(QSeries::zero(order))
            }
        }
        LabelKind::Twisted { eta, power, .. } => {
            let dim = label.ambient.d_code().size() as i64;
            let on_t = Cyclotomic::zeta3(2 * t * eta.weight() as i64).scale(&rat(dim, 1));
            Ok(trace_tau_s(len, *power, t, order)?.scale(&on_t))
        }
    }
}

/// Graded dimension of the module named by `label`.
pub fn character(label: &ModuleLabel, order: i64) -> Result<QSeries> {
    let eps = match &label.kind {
        LabelKind::Untwisted { eps, .. } => *eps,
        LabelKind::Twisted { eps, .. } => Some(*eps),
    };
    match eps {
        Some(e) => eigen_split(e, |t| module_trace(label, t, order)),
        None => module_trace(label, 0, order),
    }
}

/// Character of an untwisted module: theta series times `η(q)`-type factor,
/// split by the `τ`-eigenvalue when `λ = 0`.
pub fn char_untwisted(label: &ModuleLabel, order: i64) -> Result<QSeries> {
    if !matches!(label.kind, LabelKind::Untwisted { .. }) {
        return Err(Error::InvalidArgument(format!("{label} is a twisted label")));
    }
    character(label, order)
}

#[derive(Clone, Debug)]
pub struct CharReport {
    pub label: ModuleLabel,
    pub series: QSeries,
    /// Trace of `τ` (of `τ^i` on twisted modules) on the unsplit module.
    pub trace_tau: Option<QSeries>,
}

impl CharReport {
    /// Lowest exponent, on the 1/18 grid.
    pub fn lowest_exponent(&self) -> Option<i64> {
        self.series.valuation()
    }
}

pub fn char_report(label: &ModuleLabel, order: i64) -> Result<CharReport> {
    let series = character(label, order)?;
    let stable = match &label.kind {
        LabelKind::Untwisted { lambda, .. } => lambda.is_zero(),
        LabelKind::Twisted { .. } => true,
    };
    let trace_tau = if stable { Some(module_trace(label, 1, order)?) } else { None };
    Ok(CharReport {
        label: label.clone(),
        series,
        trace_tau,
    })
}

/// All irreducible modules over `ambient`: the coset classification when
/// `C = 0`, and the nine modules when `C` is `τ`-invariant, self-dual, of
/// minimum weight at least 4, and `D` is self-dual.
pub fn labels(ambient: &Ambient) -> Result<Vec<ModuleLabel>> {
    let len = ambient.len();
    let mut out = Vec::new();
    let mk = |k: LabelKind| ModuleLabel::new(k, ambient.clone());
    if ambient.c_is_zero() {
        let reps = match ambient {
            Ambient::Free(_) => all_z3_words(len),
            Ambient::Glued { d, .. } => d.z3_dual_quotient(),
        };
        for rho in &reps {
            for e in 0..3 {
                out.push(mk(LabelKind::Untwisted {
                    lambda: KWord::zero(len),
                    gamma: rho.clone(),
                    eps: Some(e),
                })?);
            }
        }
        for lambda in orbit_representatives(len).into_iter().filter(|w| !w.is_zero()) {
            for rho in &reps {
                out.push(mk(LabelKind::Untwisted {
                    lambda: lambda.clone(),
                    gamma: rho.clone(),
                    eps: None,
                })?);
            }
        }
        for power in 1..=2 {
            for rho in &reps {
                for e in 0..3 {
                    out.push(mk(LabelKind::Twisted {
                        eta: rho.clone(),
                        power,
                        eps: e,
                    })?);
                }
            }
        }
        return Ok(out);
    }
    let Ambient::Glued { c, d } = ambient else {
        unreachable!("free ambients have C = 0")
    };
    let ok = c.is_tau_invariant() && c.is_self_dual() && c.min_weight().is_some_and(|w| w >= 4) && d.is_self_dual();
    if !ok {
        return Err(Error::Domain(
            "classification needs C = 0, or C τ-invariant self-dual of minimum weight ≥ 4 with D self-dual".into(),
        ));
    }
    for e in 0..3 {
        out.push(mk(LabelKind::Untwisted {
            lambda: KWord::zero(len),
            gamma: Z3Word::zero(len),
            eps: Some(e),
        })?);
    }
    for power in 1..=2 {
        for e in 0..3 {
            out.push(mk(LabelKind::Twisted {
                eta: Z3Word::zero(len),
                power,
                eps: e,
            })?);
        }
    }
    Ok(out)
}

/// `3·3^ℓ + ((4^ℓ − 1)/3)·3^ℓ + 6·3^ℓ`.
pub fn free_label_count(len: usize) -> u64 {
    let three = 3u64.pow(len as u32);
    let four = 4u64.pow(len as u32);
    3 * three + (four - 1) / 3 * three + 6 * three
}

/// One side-by-side disagreement between two series.
#[derive(Clone, Debug, PartialEq)]
pub struct Mismatch {
    pub exponent: i64,
    pub lhs: Cyclotomic,
    pub rhs: Cyclotomic,
}

#[derive(Clone, Debug)]
pub struct DecompositionReport {
    pub order: i64,
    /// Full module against the sum over `γ ∈ D` and all `ε`.
    pub total: Option<Mismatch>,
    /// `σ`-eigenspace `r` against the sum restricted to `Σ ε_s ≡ r`.
    pub refined: [Option<Mismatch>; 3],
}

impl DecompositionReport {
    pub fn passed(&self) -> bool {
        self.total.is_none() && self.refined.iter().all(Option::is_none)
    }
}

fn compare(lhs: &QSeries, rhs: &QSeries) -> Option<Mismatch> {
    lhs.first_difference(rhs).map(|(exponent, lhs, rhs)| Mismatch { exponent, lhs, rhs })
}

/// Checks that the twisted module `V^{T,η}(τ^power)` over `L_{0×D}` is the
/// sum over `γ ∈ D` and `ε ∈ Z₃^ℓ` of tensor products of the rank-2 modules
/// `V_L^{T,η_s−γ_s}(τ₁^power)[ε_s]`, as graded spaces and per eigenspace.
pub fn verify_decomposition(d: &Code, eta: &Z3Word, power: u8, order: i64) -> Result<DecompositionReport> {
    check_power(power)?;
    let len = d.length();
    let ambient = Ambient::glued(Code::zero(CodeKind::K, len), d.clone())?;
    let whole = ModuleLabel::twisted(ambient.clone(), eta.clone(), power, 0)?;
    let lhs_total = module_trace(&whole, 0, order)?;
    let lhs_split: Vec<QSeries> = (0..3)
        .map(|r| character(&ModuleLabel::twisted(ambient.clone(), eta.clone(), power, r)?, order))
        .collect::<Result<_>>()?;

    // rank-2 characters indexed by residue and eigenvalue
    let mut site = vec![vec![QSeries::zero(order); 3]; 3];
    for (j, row) in site.iter_mut().enumerate() {
        for (e, slot) in row.iter_mut().enumerate() {
            let l = ModuleLabel::twisted(Ambient::Free(1), Z3Word(vec![j as u8]), power, e as u8)?;
            *slot = character(&l, order)?;
        }
    }
    let words = d.z3_words();
    let eps_all = all_z3_words(len);
    let partial: Vec<[QSeries; 3]> = words
        .par_iter()
        .map(|gamma| {
            let mut acc = [QSeries::zero(order), QSeries::zero(order), QSeries::zero(order)];
            for eps in &eps_all {
                let mut prod = QSeries::one(order);
                for s in 0..len {
                    let j = (eta.0[s] as i64 - gamma.0[s] as i64).rem_euclid(3) as usize;
                    prod = prod.mul(&site[j][eps.0[s] as usize]);
                }
                let r = eps.0.iter().map(|x| *x as usize).sum::<usize>() % 3;
                acc[r] = acc[r].add(&prod);
            }
            acc
        })
        .collect();
    let mut rhs = [QSeries::zero(order), QSeries::zero(order), QSeries::zero(order)];
    for p in partial {
        for r in 0..3 {
            rhs[r] = rhs[r].add(&p[r]);
        }
    }
    let rhs_total = rhs[0].add(&rhs[1]).add(&rhs[2]);
    Ok(DecompositionReport {
        order,
        total: compare(&lhs_total, &rhs_total),
        refined: [
            compare(&lhs_split[0], &rhs[0]),
            compare(&lhs_split[1], &rhs[1]),
            compare(&lhs_split[2], &rhs[2]),
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Rational;

    fn coeffs(s: &QSeries) -> Vec<(i64, Rational)> {
        s.terms().map(|(e, c)| (e, c.as_rational().expect("rational"))).collect()
    }

    #[test]
    fn rank_two_twisted_graded_dimension() {
        let s = char_s_tau(1, 1, 14).unwrap();
        let c = coeffs(&s);
        // q^{1/9}(1 + q^{1/3} + 2q^{2/3})
        assert_eq!(c[..3], [(2, rat(1, 1)), (8, rat(1, 1)), (14, rat(2, 1))]);
        assert_eq!(char_s_tau(0, 1, 20).unwrap(), QSeries::one(20));
    }

    #[test]
    fn eigenspaces_of_rank_two_twisted_module() {
        for power in 1..=2 {
            let lowest: Vec<i64> = (0..3)
                .map(|e| {
                    let l = ModuleLabel::twisted(Ambient::Free(1), Z3Word(vec![0]), power, e).unwrap();
                    character(&l, 40).unwrap().valuation().unwrap()
                })
                .collect();
            assert_eq!(lowest, vec![2, 14, 8]);
        }
    }

    #[test]
    fn eigenspaces_sum_to_whole() {
        let whole = char_s_tau(2, 1, 50).unwrap();
        let mut sum = QSeries::zero(50);
        for e in 0..3 {
            let l = ModuleLabel::twisted(Ambient::Free(2), Z3Word(vec![0, 0]), 1, e).unwrap();
            sum = sum.add(&character(&l, 50).unwrap());
        }
        assert_eq!(sum, whole);
    }

    #[test]
    fn thirty_labels_in_rank_two() {
        let all = labels(&Ambient::Free(1)).unwrap();
        assert_eq!(all.len(), 30);
        assert_eq!(free_label_count(1), 30);
        assert_eq!(labels(&Ambient::Free(2)).unwrap().len() as u64, free_label_count(2));
    }

    #[test]
    fn orbit_labels_start_with_c() {
        for w in ["a", "b", "c"] {
            assert_eq!(orbit_label(&KWord::parse(w).unwrap()).to_string(), "c");
        }
        assert_eq!(orbit_label(&KWord::parse("0ab").unwrap()).to_string(), "0ca");
    }

    #[test]
    fn label_round_trip() {
        for text in ["V(c,1)", "V(0,2)[1]", "T(1,2)[0]"] {
            let l = ModuleLabel::parse(text, Ambient::Free(1)).unwrap();
            assert_eq!(l.to_string(), text);
        }
        assert_eq!(ModuleLabel::parse("V(a,1)", Ambient::Free(1)).unwrap().to_string(), "V(c,1)");
        assert!(ModuleLabel::parse("V(0,1)", Ambient::Free(1)).is_err());
        assert!(ModuleLabel::parse("T(1,3)[0]", Ambient::Free(1)).is_err());
    }

    #[test]
    fn trivial_decomposition_in_rank_two() {
        let d = Code::zero(CodeKind::Z3, 1);
        for power in 1..=2 {
            for j in 0..3 {
                let r = verify_decomposition(&d, &Z3Word(vec![j]), power, 2 + 72).unwrap();
                assert!(r.passed(), "{r:?}");
            }
        }
    }
}
