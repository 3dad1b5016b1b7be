//! Brute-force checks of the combinatorial statements behind the
//! classification: parity facts about K-codes, the binomial identities on
//! top levels of lattice modules, and the support constraints they imply.
//!
//! Every check returns a [`CheckReport`]. Enumeration is parallel but the
//! reported witnesses are always the first failures in enumeration order.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use num_traits::Zero;
use rayon::prelude::*;

use crate::codes::{all_k_words, e8_codes, hexacode, tetracode, Code, CodeKind, KSym, KWord};
use crate::lattice::{glue, pq_values, site_pair6};
use crate::scalars::{binomial, rat, Rational};
use crate::{Error, Result};

const MAX_WITNESSES: usize = 8;

#[derive(Clone, Debug, Default)]
pub struct CheckReport {
    pub name: String,
    pub instances_checked: u64,
    /// The first failures in enumeration order, at most eight.
    pub failures: Vec<String>,
    pub failure_count: u64,
    pub notes: Vec<String>,
}

impl CheckReport {
    fn new(name: impl Into<String>) -> Self {
        CheckReport { name: name.into(), ..Default::default() }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.instances_checked += 1;
        if !ok {
            self.fail(witness());
        }
    }

    fn fail(&mut self, witness: String) {
        self.failure_count += 1;
        if self.failures.len() < MAX_WITNESSES {
            self.failures.push(witness);
        }
    }

    fn absorb(&mut self, part: Partial) {
        self.instances_checked += part.checked;
        for w in part.failures {
            self.fail(w);
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "pass" } else { "FAIL" };
        write!(f, "[{status}] {}: {} instances", self.name, self.instances_checked)?;
        if !self.passed() {
            write!(f, ", {} failures", self.failure_count)?;
        }
        for n in &self.notes {
            write!(f, "\n    note: {n}")?;
        }
        for w in &self.failures {
            write!(f, "\n    witness: {w}")?;
        }
        Ok(())
    }
}

/// Results of one parallel work item, merged in order.
#[derive(Default)]
struct Partial {
    checked: u64,
    failures: Vec<String>,
}

impl Partial {
    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failures.len() < MAX_WITNESSES {
            self.failures.push(witness());
        }
    }
}

fn code_name(c: &Code) -> String {
    let gens: Vec<String> = match c.kind() {
        CodeKind::K => c.k_basis().iter().map(|w| w.to_string()).collect(),
        CodeKind::Z3 => c.z3_basis().iter().map(|w| w.to_string()).collect(),
    };
    format!("<{}> (length {})", gens.join(","), c.length())
}

/// A deterministic sample of K-codes: every code spanned by at most two
/// words of length 3, their τ-closures, and a few named codes.
pub fn default_code_sample() -> Vec<Code> {
    let words = all_k_words(3);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut push = |c: Code, out: &mut Vec<Code>| {
        let mut key = c.k_words();
        key.sort();
        if seen.insert((c.length(), key)) {
            out.push(c);
        }
    };
    for (i, u) in words.iter().enumerate() {
        for v in &words[i..] {
            let c = Code::k_code(3, &[u.clone(), v.clone()]).expect("length 3");
            let closed = Code::k_code(3, &[u.clone(), v.clone(), u.tau(), v.tau()]).expect("length 3");
            push(c, &mut out);
            push(closed, &mut out);
        }
    }
    push(e8_codes().0, &mut out);
    push(hexacode(), &mut out);
    out
}

/// The code `{0, (a,0,...,0)}`: self-orthogonal but neither even nor τ-invariant.
pub fn odd_self_orthogonal_code(len: usize) -> Code {
    let mut w = KWord::zero(len);
    w.0[0] = KSym::A;
    Code::k_code(len, &[w]).expect("nonzero length")
}

/// Even K-codes are self-orthogonal, and for τ-invariant codes the converse holds.
pub fn check_even_codes(sample: &[Code]) -> CheckReport {
    let mut r = CheckReport::new("even codes are self-orthogonal");
    for c in sample {
        if c.kind() != CodeKind::K {
            continue;
        }
        let even = c.is_even();
        let so = c.is_self_orthogonal();
        r.record(!even || so, || format!("{} is even but not self-orthogonal", code_name(c)));
        if c.is_tau_invariant() {
            r.record(even == so, || format!("{} is τ-invariant, even={even}, self-orthogonal={so}", code_name(c)));
        }
    }
    for len in 1..=3 {
        let c = odd_self_orthogonal_code(len);
        let ok = c.is_self_orthogonal() && !c.is_even() && !c.is_tau_invariant();
        r.record(ok, || format!("{} should be self-orthogonal, odd and not τ-invariant", code_name(&c)));
    }
    r.notes.push(format!("{} codes sampled", sample.len()));
    r
}

/// `Σ_s Q(λ_s, μ_s)`.
pub fn q_sum(lambda: &KWord, mu: &KWord) -> u32 {
    lambda.0.iter().zip(&mu.0).map(|(x, y)| pq_values(*x, *y).1 as u32).sum()
}

/// The non-τ-invariant code `{00, ab, ba, cc}`.
pub fn odd_q_code() -> Code {
    Code::k_code(2, &[KWord::parse("ab").expect("literal"), KWord::parse("ba").expect("literal")]).expect("literal")
}

/// For a τ-invariant even K-code, `Σ_s Q(λ_s, μ_s)` is even on every pair
/// of codewords. The reference code `{00, ab, ba, cc}` must give 1 on
/// `(ab, ba)`.
pub fn check_q_parity(c: &Code) -> CheckReport {
    let mut r = CheckReport::new(format!("Q-parity on {}", code_name(c)));
    if c.kind() != CodeKind::K || !c.is_tau_invariant() || !c.is_even() {
        r.fail(format!("{} is not a τ-invariant even K-code", code_name(c)));
        return r;
    }
    let words = c.k_words();
    for x in &words {
        for y in &words {
            let s = q_sum(x, y);
            r.record(s % 2 == 0, || format!("λ={x}, μ={y}: ΣQ = {s}"));
        }
    }
    let ab = KWord::parse("ab").expect("literal");
    let ba = KWord::parse("ba").expect("literal");
    let odd = odd_q_code();
    let s = q_sum(&ab, &ba);
    r.record(s == 1 && !odd.is_tau_invariant() && odd.is_even(), || {
        format!("reference pair (ab, ba) in {{00,ab,ba,cc}} gives ΣQ = {s}, expected 1")
    });
    r
}

/// For self-orthogonal `D`, `wt(δ − γ) ≡ wt(δ) mod 3` for `γ ∈ D`, `δ ∈ D^⊥`.
pub fn check_ternary_weight_shift(d: &Code) -> CheckReport {
    let mut r = CheckReport::new(format!("ternary weights mod 3 on {}", code_name(d)));
    if d.kind() != CodeKind::Z3 || !d.is_self_orthogonal() {
        r.fail(format!("{} is not a self-orthogonal ternary code", code_name(d)));
        return r;
    }
    let words = d.z3_words();
    for delta in d.dual().z3_words() {
        for gamma in &words {
            let lhs = delta.sub(gamma).weight() % 3;
            let rhs = delta.weight() % 3;
            r.record(lhs == rhs, || format!("δ={delta}, γ={gamma}"));
        }
    }
    r
}

/// `|C|·|C^⊥| = 4^ℓ` for K-codes and `3^ℓ` for ternary codes.
pub fn check_dual_sizes(codes: &[Code]) -> CheckReport {
    let mut r = CheckReport::new("size of a code times size of its dual");
    for c in codes {
        let base: u128 = match c.kind() {
            CodeKind::K => 4,
            CodeKind::Z3 => 3,
        };
        let want = base.pow(c.length() as u32);
        let got = c.size() as u128 * c.dual().size() as u128;
        r.record(got == want, || format!("{}: {got} != {want}", code_name(c)));
    }
    r
}

/// `2⟨β(x), β(y)⟩` for glue vectors `x, y ∈ K`.
pub fn twice_glue_pairing(x: KSym, y: KSym) -> i64 {
    site_pair6(glue(x), glue(y)) / 3
}

fn signed_twice_pairing(j: KSym, lambda: &KWord, signs: u32, sites: u32) -> i64 {
    lambda
        .0
        .iter()
        .enumerate()
        .filter(|(s, _)| sites >> s & 1 == 1)
        .map(|(s, x)| {
            let p = twice_glue_pairing(j, *x);
            if signs >> s & 1 == 1 {
                -p
            } else {
                p
            }
        })
        .sum()
}

/// Sign vectors `ε ∈ {1,−1}^ℓ` are bitmasks with bit `s` set where `ε_s = −1`.
fn sign_string(len: usize, signs: u32) -> String {
    let v: Vec<&str> = (0..len).map(|s| if signs >> s & 1 == 1 { "-" } else { "+" }).collect();
    v.concat()
}

fn subset_string(len: usize, sites: u32) -> String {
    let v: Vec<String> = (0..len).filter(|s| sites >> s & 1 == 1).map(|s| (s + 1).to_string()).collect();
    format!("{{{}}}", v.join(","))
}

fn full(len: usize) -> u32 {
    (1u32 << len) - 1
}

/// `δ_{⟨β((0)_S̄ (j)_S; ε), β(λ)⟩, −|S|} · binom(⟨β((j)_ℓ; ε), β(λ)⟩ + ℓ/2, ℓ − 2|S| + 1)`,
/// with `S` and `ε` given as bitmasks.
pub fn binom_one(lambda: &KWord, signs: u32, subset: u32, j: KSym) -> Rational {
    let len = lambda.len();
    let size = subset.count_ones() as i64;
    if signed_twice_pairing(j, lambda, signs, subset) != -2 * size {
        return Rational::zero();
    }
    let p = signed_twice_pairing(j, lambda, signs, full(len));
    binomial(&rat(p + len as i64, 2), len as i64 - 2 * size + 1)
}

/// `Σ_{j=a,b,c} binom(⟨β((j)_ℓ; ε), β(λ)⟩ + ℓ/2, ℓ + 1)`.
pub fn binom_two(lambda: &KWord, signs: u32) -> Rational {
    let len = lambda.len();
    [KSym::A, KSym::B, KSym::C]
        .iter()
        .map(|j| binomial(&rat(signed_twice_pairing(*j, lambda, signs, full(len)) + len as i64, 2), len as i64 + 1))
        .fold(Rational::zero(), |a, b| a + b)
}

/// Binomials `binom((h + ℓ)/2, k)` indexed by the doubled pairing `h`.
struct BinomTable {
    len: i64,
    rows: Vec<Vec<Rational>>,
}

impl BinomTable {
    fn new(len: usize) -> Self {
        let len = len as i64;
        let rows = (-2 * len..=2 * len)
            .map(|h| (0..=len + 1).map(|k| binomial(&rat(h + len, 2), k)).collect())
            .collect();
        BinomTable { len, rows }
    }

    fn get(&self, h: i64, k: i64) -> &Rational {
        &self.rows[(h + 2 * self.len) as usize][k as usize]
    }
}

/// Which parts of the identities apply to `λ` by their own code conditions.
fn stated_hypotheses(lambda: &KWord) -> (bool, bool) {
    let len = lambda.len();
    let off_c = !lambda.same_orbit(&KWord::constant(KSym::C, len));
    (off_c, off_c || len >= 4)
}

/// Evaluates every instance of both identities on `λ` that its stated
/// hypotheses cover; returns the failing instances.
fn binomial_failures(lambda: &KWord, table: &BinomTable, part: &mut Partial) {
    let len = lambda.len();
    let (first, second) = stated_hypotheses(lambda);
    let js = [KSym::A, KSym::B, KSym::C];
    for signs in 0..1u32 << len {
        let totals: Vec<i64> = js.iter().map(|j| signed_twice_pairing(*j, lambda, signs, full(len))).collect();
        if first {
            for subset in 1..1u32 << len {
                let size = subset.count_ones() as i64;
                if 2 * size > len as i64 {
                    continue;
                }
                for (ji, j) in js.iter().enumerate() {
                    let hit = signed_twice_pairing(*j, lambda, signs, subset) == -2 * size;
                    let ok = !hit || table.get(totals[ji], len as i64 - 2 * size + 1).is_zero();
                    part.record(ok, || {
                        format!(
                            "first identity: λ={lambda}, ε={}, S={}, j={}",
                            sign_string(len, signs),
                            subset_string(len, subset),
                            j.symbol()
                        )
                    });
                }
            }
        }
        if second {
            let sum = totals
                .iter()
                .map(|h| table.get(*h, len as i64 + 1).clone())
                .fold(Rational::zero(), |a, b| a + b);
            part.record(sum.is_zero(), || {
                format!("second identity: λ={lambda}, ε={}, sum = {sum}", sign_string(len, signs))
            });
        }
    }
}

/// `λ ≠ 0` is the top level of a module of the lattice algebra glued by
/// `{0, (a)_ℓ, (b)_ℓ, (c)_ℓ}`: it pairs to zero with the code and has the
/// smallest weight in its coset.
pub fn is_top_realisable(lambda: &KWord) -> bool {
    if lambda.is_zero() {
        return false;
    }
    let len = lambda.len();
    let consts: Vec<KWord> = [KSym::A, KSym::B, KSym::C].iter().map(|j| KWord::constant(*j, len)).collect();
    consts.iter().all(|m| lambda.pairing(m) == 0)
        && consts.iter().all(|m| lambda.weight() <= lambda.add(m).weight())
}

fn check_len(len: usize) -> Result<()> {
    if len == 0 || len % 2 == 1 || len > 6 {
        return Err(Error::InvalidArgument(format!("length must be 2, 4 or 6, got {len}")));
    }
    Ok(())
}

/// Nonzero `λ` for which both identities hold on every `(ε, S)` their
/// stated hypotheses cover.
pub fn survivors(len: usize) -> Result<Vec<KWord>> {
    check_len(len)?;
    let table = BinomTable::new(len);
    Ok(all_k_words(len)
        .into_par_iter()
        .filter(|l| !l.is_zero())
        .filter(|l| {
            let mut p = Partial::default();
            binomial_failures(l, &table, &mut p);
            p.failures.is_empty()
        })
        .collect())
}

/// The binomial identities on every top-realisable `λ` at length `len`,
/// each identity under its own code condition. At length 2 the reference
/// instance `λ = (c,c)`, `ε = (1,1)` of the second identity must equal 1.
pub fn check_binomial_identities(len: usize) -> Result<CheckReport> {
    check_len(len)?;
    let mut r = CheckReport::new(format!("binomial identities on top levels, length {len}"));
    let table = BinomTable::new(len);
    let words: Vec<KWord> = all_k_words(len).into_iter().filter(|l| !l.is_zero()).collect();
    let parts: Vec<(bool, Partial)> = words
        .par_iter()
        .map(|l| {
            let mut p = Partial::default();
            let real = is_top_realisable(l);
            binomial_failures(l, &table, &mut p);
            (real, p)
        })
        .collect();
    let mut realised = 0;
    let mut unrealised_failing = 0;
    for (real, p) in parts {
        if real {
            realised += 1;
            r.absorb(p);
        } else if !p.failures.is_empty() {
            unrealised_failing += 1;
        }
    }
    r.notes.push(format!("{realised} of {} nonzero λ are top-realisable", words.len()));
    r.notes.push(format!(
        "{unrealised_failing} λ outside that set violate an identity under the code conditions alone"
    ));
    if len == 2 {
        let cc = KWord::constant(KSym::C, 2);
        let v = binom_two(&cc, 0);
        r.record(v == rat(1, 1), || format!("λ=cc, ε=++: second identity gives {v}, expected 1"));
        r.notes.push(format!("λ=cc, ε=++ (excluded case): second identity = {v}"));
    }
    Ok(r)
}

/// Applies an element of the group generated by sitewise τ and coordinate
/// permutations that moves `μ` to `(c)_r (0)_{ℓ−r}`, and the same element to `λ`.
pub fn reduce_pair(mu: &KWord, lambda: &KWord) -> (KWord, KWord) {
    let len = mu.len();
    let mut order: Vec<usize> = (0..len).filter(|s| !mu.0[*s].is_zero()).collect();
    order.extend((0..len).filter(|s| mu.0[*s].is_zero()));
    let turn = |x: KSym, m: KSym| -> KSym {
        let t = (0..3).find(|t| m.tau_pow(*t) == KSym::C).unwrap_or(0);
        x.tau_pow(t)
    };
    let gm = KWord(order.iter().map(|s| turn(mu.0[*s], mu.0[*s])).collect());
    let gl = KWord(order.iter().map(|s| turn(lambda.0[*s], mu.0[*s])).collect());
    (gm, gl)
}

fn support_overlap(a: &KWord, b: &KWord) -> usize {
    a.0.iter().zip(&b.0).filter(|(x, y)| !x.is_zero() && !y.is_zero()).count()
}

/// Survivors of the identities obey the support constraints:
/// * a symbol filling at least half the sites fills exactly half, alone, and
///   half the length is even; a symbol on fewer sites leaves an even number
///   of sites to the other two;
/// * `⟨(c)_ℓ, λ⟩_K = 0` and `wt_K(λ) < ℓ`;
/// * after reducing `μ` to `(c)_r (0)_{ℓ−r}` with `r ≥ 4`, a surviving
///   restriction of `λ` forces `⟨μ, λ⟩_K = 0` and an overlap below `r`.
///
/// The survivor set must agree with the top-realisable set for `ℓ ≥ 4`.
pub fn check_support_constraints(len: usize) -> Result<CheckReport> {
    check_len(len)?;
    let mut r = CheckReport::new(format!("support constraints on survivors, length {len}"));
    let surv = survivors(len)?;
    let c_word = KWord::constant(KSym::C, len);
    let js = [KSym::A, KSym::B, KSym::C];
    for l in &surv {
        let counts: Vec<usize> = js.iter().map(|j| l.0.iter().filter(|x| *x == j).count()).collect();
        let excluded = l.same_orbit(&c_word);
        if !excluded {
            for (ji, &n) in counts.iter().enumerate() {
                let rest: usize = counts.iter().sum::<usize>() - n;
                if 2 * n >= len {
                    let ok = 2 * n == len && rest == 0 && n % 2 == 0;
                    r.record(ok, || format!("λ={l}: symbol {} on {n} sites", js[ji].symbol()));
                }
                if n >= 1 && 2 * n <= len {
                    r.record(rest % 2 == 0, || format!("λ={l}: {rest} sites carry other symbols"));
                }
            }
        }
        r.record(l.pairing(&c_word) == 0, || format!("λ={l}: ⟨(c)_ℓ, λ⟩ = 1"));
        if excluded && len == 2 {
            continue;
        }
        r.record(l.weight() < len, || format!("λ={l}: weight {} is not below {len}", l.weight()));
    }
    if len == 2 {
        r.notes.push("the τ-orbit of cc survives vacuously and is exempt from the weight bound".into());
    }
    if len >= 4 {
        let realisable: BTreeSet<KWord> =
            all_k_words(len).into_iter().filter(is_top_realisable).collect();
        let found: BTreeSet<KWord> = surv.iter().cloned().collect();
        r.record(realisable == found, || {
            let diff: Vec<String> = realisable.symmetric_difference(&found).take(4).map(|w| w.to_string()).collect();
            format!("survivors differ from top-realisable λ at {}", diff.join(", "))
        });
    }
    r.notes.push(format!("{} survivors", surv.len()));

    let mut by_len: Vec<HashSet<KWord>> = vec![HashSet::new(); len + 1];
    for sub in (4..=len).step_by(2) {
        by_len[sub] = survivors(sub)?.into_iter().collect();
    }
    let words = all_k_words(len);
    let mus: Vec<&KWord> = words.iter().filter(|m| m.weight() >= 4 && m.weight() % 2 == 0).collect();
    let parts: Vec<Partial> = mus
        .par_iter()
        .map(|mu| {
            let mut p = Partial::default();
            let rw = mu.weight();
            for l in words.iter().filter(|l| !l.is_zero()) {
                let (gm, gl) = reduce_pair(mu, l);
                let target = KWord((0..len).map(|s| if s < rw { KSym::C } else { KSym::ZERO }).collect());
                let invariant = gm == target
                    && gm.pairing(&gl) == mu.pairing(l)
                    && support_overlap(&gm, &gl) == support_overlap(mu, l);
                p.record(invariant, || format!("reduction of μ={mu}, λ={l} does not preserve the pairing data"));
                let head = KWord(gl.0[..rw].to_vec());
                if head.is_zero() || by_len[rw].contains(&head) {
                    let ok = mu.pairing(l) == 0 && support_overlap(mu, l) < rw;
                    p.record(ok, || format!("μ={mu}, λ={l}: restriction {head} survives but constraint fails"));
                }
            }
            p
        })
        .collect();
    for p in parts {
        r.absorb(p);
    }
    Ok(r)
}

/// The default suite at lengths 2 and 4, plus `extra_len` when it is larger.
pub fn run_all(extra_len: Option<usize>) -> Result<Vec<CheckReport>> {
    let (e8_c, e8_d) = e8_codes();
    let mut out = vec![
        check_even_codes(&default_code_sample()),
        check_q_parity(&e8_c),
        check_q_parity(&hexacode()),
        check_ternary_weight_shift(&e8_d),
        check_ternary_weight_shift(&Code::z3_code(3, &[crate::codes::Z3Word::from_ints(&[1, 1, 1])])?),
        check_dual_sizes(&[e8_c, e8_d, hexacode(), tetracode(), odd_q_code(), Code::zero(CodeKind::K, 3)]),
    ];
    let mut lens = vec![2, 4];
    if let Some(n) = extra_len {
        check_len(n)?;
        if !lens.contains(&n) {
            lens.push(n);
        }
    }
    for n in lens {
        out.push(check_binomial_identities(n)?);
        out.push(check_support_constraints(n)?);
    }
    Ok(out)
}
