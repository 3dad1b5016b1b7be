//! Additive codes over Klein's four-group `K = {0, a, b, c}` and linear
//! ternary codes: membership, duals, weights and the order-3 relabelling
//! `a → b → c → a`.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::Zero;

use crate::scalars::{int, rat, Rational};
use crate::{Error, Result};

/// Element of `K`, stored as the bit pair `0=(0,0), a=(0,1), b=(1,1), c=(1,0)`
/// packed as `2*hi + lo`, so group addition is XOR.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KSym(u8);

impl KSym {
    pub const ZERO: KSym = KSym(0);
    pub const A: KSym = KSym(1);
    pub const B: KSym = KSym(3);
    pub const C: KSym = KSym(2);
    pub const ALL: [KSym; 4] = [KSym::ZERO, KSym::A, KSym::B, KSym::C];
    pub const NONZERO: [KSym; 3] = [KSym::A, KSym::B, KSym::C];

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn from_bits(bits: u8) -> KSym {
        KSym(bits & 3)
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn add(self, other: KSym) -> KSym {
        KSym(self.0 ^ other.0)
    }

    /// `a ↦ b ↦ c ↦ a`, `0 ↦ 0`.
    pub fn tau(self) -> KSym {
        match self {
            KSym::A => KSym::B,
            KSym::B => KSym::C,
            KSym::C => KSym::A,
            _ => KSym::ZERO,
        }
    }

    pub fn tau_pow(self, k: u32) -> KSym {
        (0..k % 3).fold(self, |x, _| x.tau())
    }

    pub fn parse(ch: char) -> Option<KSym> {
        match ch {
            '0' => Some(KSym::ZERO),
            'a' => Some(KSym::A),
            'b' => Some(KSym::B),
            'c' => Some(KSym::C),
            _ => None,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            KSym::A => 'a',
            KSym::B => 'b',
            KSym::C => 'c',
            _ => '0',
        }
    }
}

/// The two pairings on `K`: `x∘y ∈ {0, 1, -1/2}` and `x·y ∈ Z₂`.
pub fn k_pair(x: KSym, y: KSym) -> (Rational, u8) {
    if x.is_zero() || y.is_zero() {
        (Rational::zero(), 0)
    } else if x == y {
        (int(1), 0)
    } else {
        (rat(-1, 2), 1)
    }
}

pub fn k_dot(x: KSym, y: KSym) -> u8 {
    k_pair(x, y).1
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KWord(pub Vec<KSym>);

impl KWord {
    pub fn zero(len: usize) -> Self {
        KWord(vec![KSym::ZERO; len])
    }

    pub fn constant(sym: KSym, len: usize) -> Self {
        KWord(vec![sym; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }

    pub fn weight(&self) -> usize {
        self.0.iter().filter(|x| !x.is_zero()).count()
    }

    pub fn add(&self, other: &KWord) -> KWord {
        KWord(self.0.iter().zip(&other.0).map(|(x, y)| x.add(*y)).collect())
    }

    pub fn tau(&self) -> KWord {
        tau_word(self)
    }

    pub fn tau_pow(&self, k: u32) -> KWord {
        KWord(self.0.iter().map(|x| x.tau_pow(k)).collect())
    }

    /// `⟨λ, μ⟩_K = Σ λ_s·μ_s mod 2`.
    pub fn pairing(&self, other: &KWord) -> u8 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(x, y)| k_dot(*x, *y))
            .sum::<u8>()
            % 2
    }

    /// The smallest word of the orbit `{λ, τλ, τ²λ}`.
    pub fn orbit_rep(&self) -> KWord {
        (0..3).map(|k| self.tau_pow(k)).min().expect("three images")
    }

    pub fn same_orbit(&self, other: &KWord) -> bool {
        self.orbit_rep() == other.orbit_rep()
    }

    pub fn parse(s: &str) -> Result<KWord> {
        s.chars()
            .enumerate()
            .map(|(i, ch)| {
                KSym::parse(ch).ok_or(Error::Parse {
                    line: 1,
                    column: i + 1,
                    message: format!("'{ch}' is not one of 0,a,b,c"),
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(KWord)
    }
}

impl fmt::Display for KWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in &self.0 {
            write!(f, "{}", x.symbol())?;
        }
        Ok(())
    }
}

/// Componentwise `a ↦ b ↦ c ↦ a`.
pub fn tau_word(w: &KWord) -> KWord {
    KWord(w.0.iter().map(|x| x.tau()).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Z3Word(pub Vec<u8>);

impl Z3Word {
    pub fn zero(len: usize) -> Self {
        Z3Word(vec![0; len])
    }

    pub fn unit(len: usize, s: usize) -> Self {
        let mut w = Self::zero(len);
        w.0[s] = 1;
        w
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Z3Word(v.iter().map(|x| x.rem_euclid(3) as u8).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| *x == 0)
    }

    pub fn weight(&self) -> usize {
        self.0.iter().filter(|x| **x != 0).count()
    }

    pub fn add(&self, other: &Z3Word) -> Z3Word {
        Z3Word(self.0.iter().zip(&other.0).map(|(x, y)| (x + y) % 3).collect())
    }

    pub fn neg(&self) -> Z3Word {
        Z3Word(self.0.iter().map(|x| (3 - x) % 3).collect())
    }

    pub fn sub(&self, other: &Z3Word) -> Z3Word {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: i64) -> Z3Word {
        let k = k.rem_euclid(3) as u8;
        Z3Word(self.0.iter().map(|x| (x * k) % 3).collect())
    }

    pub fn dot(&self, other: &Z3Word) -> u8 {
        (self.0.iter().zip(&other.0).map(|(x, y)| (*x as u32) * (*y as u32)).sum::<u32>() % 3) as u8
    }

    pub fn parse(s: &str) -> Result<Z3Word> {
        s.chars()
            .enumerate()
            .map(|(i, ch)| {
                ch.to_digit(10)
                    .filter(|d| *d < 3)
                    .map(|d| d as u8)
                    .ok_or(Error::Parse {
                        line: 1,
                        column: i + 1,
                        message: format!("'{ch}' is not one of 0,1,2"),
                    })
            })
            .collect::<Result<Vec<_>>>()
            .map(Z3Word)
    }
}

impl fmt::Display for Z3Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in &self.0 {
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CodeKind {
    K,
    Z3,
}

impl CodeKind {
    fn modulus(self) -> u8 {
        match self {
            CodeKind::K => 2,
            CodeKind::Z3 => 3,
        }
    }
}

/// Coordinates of a word in the prime field: two bits per site for `K`,
/// one trit per site for `Z₃`.
type Vector = Vec<u8>;

/// Largest code whose words are listed eagerly.
const CACHE_LIMIT: u64 = 1 << 20;

/// Largest code that may be enumerated at all.
pub const ENUMERATION_LIMIT: u64 = 1 << 28;

#[derive(Clone, Debug)]
pub struct Code {
    kind: CodeKind,
    length: usize,
    generators: Vec<Vector>,
    /// Row-reduced basis with its pivot columns.
    basis: Vec<Vector>,
    pivots: Vec<usize>,
    words: Option<Vec<Vector>>,
}

fn k_to_vector(w: &KWord) -> Vector {
    w.0.iter().flat_map(|x| [x.bits() >> 1, x.bits() & 1]).collect()
}

fn vector_to_k(v: &[u8]) -> KWord {
    KWord(v.chunks(2).map(|p| KSym::from_bits((p[0] << 1) | p[1])).collect())
}

fn inv_mod(x: u8, p: u8) -> u8 {
    (1..p).find(|y| (x as u32 * *y as u32) % p as u32 == 1).expect("unit")
}

/// Row-reduces `rows` mod `p`, returning the nonzero rows and pivot columns.
fn row_reduce(rows: &[Vector], p: u8) -> (Vec<Vector>, Vec<usize>) {
    let mut m: Vec<Vector> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(pr) = (r..m.len()).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(r, pr);
        let inv = inv_mod(m[r][col], p);
        for x in m[r].iter_mut() {
            *x = ((*x as u32 * inv as u32) % p as u32) as u8;
        }
        for i in 0..m.len() {
            if i != r && m[i][col] != 0 {
                let f = m[i][col] as u32;
                for j in 0..ncols {
                    let sub = (f * m[r][j] as u32) % p as u32;
                    m[i][j] = ((m[i][j] as u32 + p as u32 - sub) % p as u32) as u8;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

/// Basis of `{x : A x = 0}` mod `p`.
fn kernel(rows: &[Vector], ncols: usize, p: u8) -> Vec<Vector> {
    let (red, pivots) = row_reduce(rows, p);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u8; ncols];
            v[f] = 1;
            for (row, &pc) in red.iter().zip(&pivots) {
                v[pc] = (p - row[f] % p) % p;
            }
            v
        })
        .collect()
}

impl Code {
    fn from_vectors(kind: CodeKind, length: usize, generators: Vec<Vector>) -> Code {
        let (basis, pivots) = row_reduce(&generators, kind.modulus());
        let mut code = Code {
            kind,
            length,
            generators,
            basis,
            pivots,
            words: None,
        };
        if code.size_u64().is_some_and(|n| n <= CACHE_LIMIT) {
            code.words = Some(code.enumerate_vectors());
        }
        code
    }

    pub fn k_code(length: usize, generators: &[KWord]) -> Result<Code> {
        for g in generators {
            if g.len() != length {
                return Err(Error::LengthMismatch(length, g.len()));
            }
        }
        Ok(Self::from_vectors(
            CodeKind::K,
            length,
            generators.iter().map(k_to_vector).collect(),
        ))
    }

    pub fn z3_code(length: usize, generators: &[Z3Word]) -> Result<Code> {
        for g in generators {
            if g.len() != length {
                return Err(Error::LengthMismatch(length, g.len()));
            }
        }
        Ok(Self::from_vectors(
            CodeKind::Z3,
            length,
            generators.iter().map(|g| g.0.clone()).collect(),
        ))
    }

    pub fn zero(kind: CodeKind, length: usize) -> Code {
        Self::from_vectors(kind, length, Vec::new())
    }

    /// The code generated by `μ` and `τ(μ)`.
    pub fn k_orbit_code(mu: &KWord) -> Code {
        Self::k_code(mu.len(), &[mu.clone(), mu.tau()]).expect("equal lengths")
    }

    pub fn kind(&self) -> CodeKind {
        self.kind
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Number of words, if it fits in a `u64`.
    pub fn size_u64(&self) -> Option<u64> {
        (self.kind.modulus() as u64).checked_pow(self.rank() as u32)
    }

    pub fn size(&self) -> u64 {
        self.size_u64().expect("code size fits in u64")
    }

    fn ambient_dim(&self) -> usize {
        match self.kind {
            CodeKind::K => 2 * self.length,
            CodeKind::Z3 => self.length,
        }
    }

    fn enumerate_vectors(&self) -> Vec<Vector> {
        let p = self.kind.modulus() as u32;
        let n = self.size();
        let dim = self.ambient_dim();
        let mut out = Vec::with_capacity(n as usize);
        for idx in 0..n {
            let mut v = vec![0u32; dim];
            let mut rest = idx;
            for row in &self.basis {
                let c = (rest % p as u64) as u32;
                rest /= p as u64;
                if c != 0 {
                    for (x, r) in v.iter_mut().zip(row) {
                        *x += c * *r as u32;
                    }
                }
            }
            out.push(v.into_iter().map(|x| (x % p) as u8).collect());
        }
        out.sort();
        out
    }

    fn vectors(&self) -> std::borrow::Cow<'_, [Vector]> {
        match &self.words {
            Some(w) => std::borrow::Cow::Borrowed(w),
            None => {
                assert!(
                    self.size() <= ENUMERATION_LIMIT,
                    "code of size {} is too large to enumerate",
                    self.size()
                );
                std::borrow::Cow::Owned(self.enumerate_vectors())
            }
        }
    }

    fn contains_vector(&self, v: &[u8]) -> bool {
        let p = self.kind.modulus() as u32;
        let mut r: Vec<u32> = v.iter().map(|x| *x as u32).collect();
        for (row, &pc) in self.basis.iter().zip(&self.pivots) {
            let c = r[pc] % p;
            if c != 0 {
                for (x, b) in r.iter_mut().zip(row) {
                    *x = (*x + p * p - c * *b as u32) % p;
                }
            }
        }
        r.iter().all(|x| x % p == 0)
    }

    fn check_kind(&self, kind: CodeKind) {
        assert_eq!(self.kind, kind, "code kind mismatch");
    }

    pub fn k_words(&self) -> Vec<KWord> {
        self.check_kind(CodeKind::K);
        self.vectors().iter().map(|v| vector_to_k(v)).collect()
    }

    pub fn z3_words(&self) -> Vec<Z3Word> {
        self.check_kind(CodeKind::Z3);
        self.vectors().iter().map(|v| Z3Word(v.clone())).collect()
    }

    pub fn k_generators(&self) -> Vec<KWord> {
        self.check_kind(CodeKind::K);
        self.generators.iter().map(|v| vector_to_k(v)).collect()
    }

    pub fn z3_generators(&self) -> Vec<Z3Word> {
        self.check_kind(CodeKind::Z3);
        self.generators.iter().map(|v| Z3Word(v.clone())).collect()
    }

    /// Row-reduced basis, as words.
    pub fn k_basis(&self) -> Vec<KWord> {
        self.check_kind(CodeKind::K);
        self.basis.iter().map(|v| vector_to_k(v)).collect()
    }

    pub fn z3_basis(&self) -> Vec<Z3Word> {
        self.check_kind(CodeKind::Z3);
        self.basis.iter().map(|v| Z3Word(v.clone())).collect()
    }

    pub fn contains_k(&self, w: &KWord) -> bool {
        self.check_kind(CodeKind::K);
        w.len() == self.length && self.contains_vector(&k_to_vector(w))
    }

    pub fn contains_z3(&self, w: &Z3Word) -> bool {
        self.check_kind(CodeKind::Z3);
        w.len() == self.length && self.contains_vector(&w.0)
    }

    /// Pairing of two coordinate vectors, evaluated through the symbol
    /// tables rather than the bit encoding.
    fn pair_vectors(&self, u: &[u8], v: &[u8]) -> u8 {
        match self.kind {
            CodeKind::K => vector_to_k(u).pairing(&vector_to_k(v)),
            CodeKind::Z3 => Z3Word(u.to_vec()).dot(&Z3Word(v.to_vec())),
        }
    }

    /// The dual code, computed as the kernel of the pairing against a basis.
    pub fn dual(&self) -> Code {
        let dim = self.ambient_dim();
        let units: Vec<Vector> = (0..dim)
            .map(|i| {
                let mut e = vec![0u8; dim];
                e[i] = 1;
                e
            })
            .collect();
        let rows: Vec<Vector> = self
            .basis
            .iter()
            .map(|b| units.iter().map(|e| self.pair_vectors(b, e)).collect())
            .collect();
        let ker = if rows.is_empty() {
            units
        } else {
            kernel(&rows, dim, self.kind.modulus())
        };
        Self::from_vectors(self.kind, self.length, ker)
    }

    pub fn is_subcode_of(&self, other: &Code) -> bool {
        self.kind == other.kind
            && self.length == other.length
            && self.basis.iter().all(|b| other.contains_vector(b))
    }

    pub fn same_code(&self, other: &Code) -> bool {
        self.is_subcode_of(other) && other.is_subcode_of(self)
    }

    pub fn is_self_orthogonal(&self) -> bool {
        self.is_subcode_of(&self.dual())
    }

    pub fn is_self_dual(&self) -> bool {
        self.same_code(&self.dual())
    }

    /// Every word has even weight (K-codes).
    pub fn is_even(&self) -> bool {
        self.check_kind(CodeKind::K);
        self.k_words().iter().all(|w| w.weight() % 2 == 0)
    }

    pub fn is_tau_invariant(&self) -> bool {
        self.check_kind(CodeKind::K);
        self.k_basis().iter().all(|w| self.contains_k(&w.tau()))
    }

    /// Minimum nonzero weight; `None` stands for `+∞` (the zero code).
    pub fn min_weight(&self) -> Option<usize> {
        let dim_w = |v: &Vector| match self.kind {
            CodeKind::K => vector_to_k(v).weight(),
            CodeKind::Z3 => Z3Word(v.clone()).weight(),
        };
        self.vectors()
            .iter()
            .map(dim_w)
            .filter(|w| *w > 0)
            .min()
    }

    /// Coset representative of `w` modulo the code: the reduction against
    /// the row-reduced basis.
    pub fn reduce_z3(&self, w: &Z3Word) -> Z3Word {
        self.check_kind(CodeKind::Z3);
        let mut r = w.clone();
        for (row, &pc) in self.basis.iter().zip(&self.pivots) {
            let c = r.0[pc];
            if c != 0 {
                r = r.sub(&Z3Word(row.clone()).scale(c as i64));
            }
        }
        r
    }

    pub fn reduce_k(&self, w: &KWord) -> KWord {
        self.check_kind(CodeKind::K);
        let mut v = k_to_vector(w);
        for (row, &pc) in self.basis.iter().zip(&self.pivots) {
            if v[pc] != 0 {
                for (x, b) in v.iter_mut().zip(row) {
                    *x ^= b;
                }
            }
        }
        vector_to_k(&v)
    }

    /// Representatives of `self^⊥ / self` for a self-orthogonal ternary code.
    pub fn z3_dual_quotient(&self) -> Vec<Z3Word> {
        let reps: BTreeSet<Z3Word> = self
            .dual()
            .z3_words()
            .iter()
            .map(|w| self.reduce_z3(w))
            .collect();
        reps.into_iter().collect()
    }

    /// Parses the text format
    ///
    /// ```text
    /// kind: K
    /// length: 4
    /// generators:
    /// a a 0 0
    /// ```
    pub fn parse(text: &str) -> Result<Code> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim_end()))
            .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
        let header = |lines: &mut dyn Iterator<Item = (usize, &str)>, key: &str| {
            let (n, l) = lines.next().ok_or(Error::Parse {
                line: 0,
                column: 0,
                message: format!("missing '{key}' line"),
            })?;
            let rest = l.trim().strip_prefix(key).ok_or(Error::Parse {
                line: n,
                column: 1,
                message: format!("expected '{key}'"),
            })?;
            Ok::<_, Error>((n, rest.trim().to_string()))
        };
        let (kline, kind) = header(&mut lines, "kind:")?;
        let kind = match kind.as_str() {
            "K" => CodeKind::K,
            "Z3" => CodeKind::Z3,
            other => {
                return Err(Error::Parse {
                    line: kline,
                    column: 7,
                    message: format!("unknown kind '{other}', expected K or Z3"),
                })
            }
        };
        let (lline, len) = header(&mut lines, "length:")?;
        let length: usize = len.parse().map_err(|_| Error::Parse {
            line: lline,
            column: 9,
            message: format!("'{len}' is not a length"),
        })?;
        let (gline, rest) = header(&mut lines, "generators:")?;
        if !rest.is_empty() {
            return Err(Error::Parse {
                line: gline,
                column: 12,
                message: "unexpected text after 'generators:'".into(),
            });
        }
        let mut gens = Vec::new();
        for (n, l) in lines {
            let mut v = Vec::new();
            let mut count = 0;
            for (col, tok) in tokens_with_columns(l) {
                count += 1;
                let bad = |expected: &str| Error::Parse {
                    line: n,
                    column: col,
                    message: format!("symbol '{tok}' is not one of {expected}"),
                };
                match kind {
                    CodeKind::K => {
                        let mut chars = tok.chars();
                        let sym = match (chars.next(), chars.next()) {
                            (Some(ch), None) => KSym::parse(ch),
                            _ => None,
                        }
                        .ok_or_else(|| bad("0,a,b,c"))?;
                        v.push(sym.bits() >> 1);
                        v.push(sym.bits() & 1);
                    }
                    CodeKind::Z3 => {
                        let x: i64 = match tok {
                            "0" => 0,
                            "1" => 1,
                            "2" | "-1" => 2,
                            _ => return Err(bad("0,1,2")),
                        };
                        v.push(x as u8);
                    }
                }
            }
            if count != length {
                return Err(Error::Parse {
                    line: n,
                    column: 1,
                    message: format!("generator has {count} symbols, expected {length}"),
                });
            }
            gens.push(v);
        }
        Ok(Self::from_vectors(kind, length, gens))
    }

    pub fn to_text(&self) -> String {
        let mut s = format!(
            "kind: {}\nlength: {}\ngenerators:\n",
            match self.kind {
                CodeKind::K => "K",
                CodeKind::Z3 => "Z3",
            },
            self.length
        );
        for g in &self.generators {
            let syms: Vec<String> = match self.kind {
                CodeKind::K => vector_to_k(g).0.iter().map(|x| x.symbol().to_string()).collect(),
                CodeKind::Z3 => g.iter().map(|x| x.to_string()).collect(),
            };
            s.push_str(&syms.join(" "));
            s.push('\n');
        }
        s
    }
}

fn tokens_with_columns(line: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out.into_iter()
}

/// One representative (the lexicographically smallest) of every τ-orbit on
/// `K^ℓ`.
pub fn orbit_representatives(len: usize) -> Vec<KWord> {
    let mut reps = Vec::new();
    for idx in 0..4u64.pow(len as u32) {
        let w = KWord(
            (0..len)
                .map(|s| KSym::ALL[((idx >> (2 * s)) & 3) as usize])
                .collect(),
        );
        if w.orbit_rep() == w {
            reps.push(w);
        }
    }
    reps.sort();
    reps
}

/// All words of `Z₃^ℓ` in lexicographic order.
pub fn all_z3_words(len: usize) -> Vec<Z3Word> {
    (0..3u64.pow(len as u32))
        .map(|mut idx| {
            let mut v = vec![0u8; len];
            for x in v.iter_mut().rev() {
                *x = (idx % 3) as u8;
                idx /= 3;
            }
            Z3Word(v)
        })
        .collect()
}

/// All words of `K^ℓ` in lexicographic order of symbols `0 < a < b < c`.
pub fn all_k_words(len: usize) -> Vec<KWord> {
    let order = [KSym::ZERO, KSym::A, KSym::B, KSym::C];
    (0..4u64.pow(len as u32))
        .map(|mut idx| {
            let mut v = vec![KSym::ZERO; len];
            for x in v.iter_mut().rev() {
                *x = order[(idx % 4) as usize];
                idx /= 4;
            }
            KWord(v)
        })
        .collect()
}

/// The two codes of length 4 whose glued lattice is E8: a τ-invariant
/// self-dual K-code and the ternary tetracode.
pub fn e8_codes() -> (Code, Code) {
    let k = |s: &str| KWord::parse(s).expect("literal");
    let c = Code::k_code(4, &[k("aa00"), k("bb00"), k("00aa"), k("00bb")]).expect("literal");
    let d = Code::z3_code(4, &[Z3Word::from_ints(&[1, 1, 1, 0]), Z3Word::from_ints(&[1, -1, 0, 1])])
        .expect("literal");
    (c, d)
}

/// The ternary tetracode of length 4, generated by `1110` and `1201`.
pub fn tetracode() -> Code {
    Code::z3_code(4, &[Z3Word::from_ints(&[1, 1, 1, 0]), Z3Word::from_ints(&[1, -1, 0, 1])]).expect("literal")
}

/// A τ-invariant self-dual K-code of length 6 with minimum weight 4.
pub fn hexacode() -> Code {
    let mut gens = Vec::new();
    for row in ["a00aaa", "0a0abc", "00aacb"] {
        let w = KWord::parse(row).expect("literal");
        gens.push(w.tau());
        gens.push(w);
    }
    Code::k_code(6, &gens).expect("literal")
}

/// Block-diagonal sum of `copies` copies of `code`.
pub fn repeat_code(code: &Code, copies: usize) -> Code {
    let n = code.length();
    match code.kind() {
        CodeKind::K => {
            let mut gens = Vec::new();
            for k in 0..copies {
                for g in code.k_generators() {
                    let mut w = KWord::zero(n * copies);
                    w.0[k * n..(k + 1) * n].copy_from_slice(&g.0);
                    gens.push(w);
                }
            }
            Code::k_code(n * copies, &gens).expect("block sum")
        }
        CodeKind::Z3 => {
            let mut gens = Vec::new();
            for k in 0..copies {
                for g in code.z3_generators() {
                    let mut w = Z3Word::zero(n * copies);
                    w.0[k * n..(k + 1) * n].copy_from_slice(&g.0);
                    gens.push(w);
                }
            }
            Code::z3_code(n * copies, &gens).expect("block sum")
        }
    }
}
