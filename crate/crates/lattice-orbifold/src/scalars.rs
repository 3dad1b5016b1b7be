//! Exact scalars: big rationals, the field of 24th roots of unity and
//! truncated power series in `q^(1/18)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::Error;

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Generalized binomial coefficient `x (x-1) ... (x-k+1) / k!`, zero for negative `k`.
pub fn binomial(x: &Rational, k: i64) -> Rational {
    if k < 0 {
        return Rational::zero();
    }
    let mut acc = Rational::one();
    for i in 0..k {
        acc = acc * (x - int(i)) / int(i + 1);
    }
    acc
}

const DEGREE: usize = 8;

/// Element of Q(ζ₂₄) in the power basis `1, ζ, ..., ζ^7`, reduced modulo
/// `x^8 - x^4 + 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    coeffs: [Rational; DEGREE],
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Self {
            coeffs: std::array::from_fn(|_| Rational::zero()),
        }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        let mut c = Self::zero();
        c.coeffs[0] = r;
        c
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(int(n))
    }

    /// `ζ₂₄^k` for any integer `k`.
    pub fn zeta24(k: i64) -> Self {
        let k = k.rem_euclid(24) as usize;
        let mut raw = vec![Rational::zero(); 24];
        raw[k] = Rational::one();
        Self::reduce(raw)
    }

    /// `ζ₃^k = ζ₂₄^(8k)`.
    pub fn zeta3(k: i64) -> Self {
        Self::zeta24(8 * k)
    }

    /// `√−3 = ζ₃ − ζ₃²`.
    pub fn sqrt_minus_3() -> Self {
        Self::zeta3(1) - Self::zeta3(2)
    }

    pub fn coeffs(&self) -> &[Rational; DEGREE] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in Q.
    pub fn as_rational(&self) -> Option<Rational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| self.coeffs[0].clone())
    }

    fn reduce(mut raw: Vec<Rational>) -> Self {
        // x^k = x^(k-4) - x^(k-8) for k >= 8
        for k in (DEGREE..raw.len()).rev() {
            let c = std::mem::take(&mut raw[k]);
            if c.is_zero() {
                continue;
            }
            raw[k - 4] += &c;
            raw[k - 8] -= &c;
        }
        let mut out = Self::zero();
        for (slot, c) in out.coeffs.iter_mut().zip(raw) {
            *slot = c;
        }
        out
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] * r),
        }
    }

    /// Image under the automorphism `ζ₂₄ ↦ ζ₂₄^k` (`k` coprime to 24).
    pub fn galois(&self, k: i64) -> Self {
        let mut acc = Self::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc += &Self::zeta24(k * i as i64).scale(c);
            }
        }
        acc
    }

    /// Complex conjugate, `ζ ↦ ζ^-1`.
    pub fn conj(&self) -> Self {
        self.galois(23)
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let mut others = Self::one();
        for k in [5, 7, 11, 13, 17, 19, 23] {
            others = &others * &self.galois(k);
        }
        let norm = (&others * self)
            .as_rational()
            .expect("field norm is rational");
        Some(others.scale(&norm.recip()))
    }

    pub fn pow(&self, e: i64) -> Self {
        if e < 0 {
            return self
                .inverse()
                .expect("negative power of zero")
                .pow(-e);
        }
        let mut base = self.clone();
        let mut acc = Self::one();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

/// Primitive `n`-th root of unity `ζ₂₄^(24/n)`.
pub fn cyc_root(n: i64) -> Result<Cyclotomic, Error> {
    if n <= 0 || 24 % n != 0 {
        return Err(Error::InvalidArgument(format!(
            "{n} does not divide 24"
        )));
    }
    Ok(Cyclotomic::zeta24(24 / n))
}

impl Default for Cyclotomic {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<Rational> for Cyclotomic {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        Cyclotomic {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] + &rhs.coeffs[i]),
        }
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        Cyclotomic {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] - &rhs.coeffs[i]),
        }
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        let mut raw = vec![Rational::zero(); 2 * DEGREE - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] += a * b;
                }
            }
        }
        Cyclotomic::reduce(raw)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: &Cyclotomic) -> Cyclotomic {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            *a += b;
        }
    }
}

impl SubAssign<&Cyclotomic> for Cyclotomic {
    fn sub_assign(&mut self, rhs: &Cyclotomic) {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            *a -= b;
        }
    }
}

impl MulAssign<&Cyclotomic> for Cyclotomic {
    fn mul_assign(&mut self, rhs: &Cyclotomic) {
        *self = &*self * rhs;
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            coeffs: self.coeffs.map(|c| -c),
        }
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -self.clone()
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ if mag.is_one() => write!(f, "z24^{k}")?,
                _ => write!(f, "{mag}*z24^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic({self})")
    }
}

/// Denominator of every exponent stored in a [`QSeries`].
pub const EXP_DEN: i64 = 18;

/// Power series in `q^(1/18)` with all terms of exponent above `order`
/// (numerator over [`EXP_DEN`]) discarded.
#[derive(Clone, PartialEq, Eq)]
pub struct QSeries {
    order: i64,
    terms: BTreeMap<i64, Cyclotomic>,
}

impl QSeries {
    pub fn zero(order: i64) -> Self {
        Self {
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(order: i64) -> Self {
        Self::monomial(0, Cyclotomic::one(), order)
    }

    /// `c * q^(exp/18)`, dropped if above `order`.
    pub fn monomial(exp: i64, c: Cyclotomic, order: i64) -> Self {
        let mut s = Self::zero(order);
        s.add_term(exp, c);
        s
    }

    /// Converts a rational exponent into the `1/18` grid.
    pub fn exponent_of(r: &Rational) -> Result<i64, Error> {
        let scaled = r * int(EXP_DEN);
        if !scaled.is_integer() {
            return Err(Error::InvalidArgument(format!(
                "exponent {r} is not a multiple of 1/{EXP_DEN}"
            )));
        }
        scaled
            .to_integer()
            .try_into()
            .map_err(|_| Error::InvalidArgument(format!("exponent {r} out of range")))
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Cyclotomic)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i64) -> Cyclotomic {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exp: i64, c: Cyclotomic) {
        if exp > self.order || c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn truncate(&self, order: i64) -> Self {
        Self {
            order: order.min(self.order),
            terms: self
                .terms
                .range(..=order)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        let mut out = Self::zero(self.order);
        for (e, x) in &self.terms {
            out.add_term(*e, x * c);
        }
        out
    }

    /// Multiplies by `q^(shift/18)`; the order moves with it.
    pub fn shift(&self, shift: i64) -> Self {
        Self {
            order: self.order + shift,
            terms: self.terms.iter().map(|(e, c)| (e + shift, c.clone())).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.truncate(self.order.min(other.order));
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&Cyclotomic::from_int(-1)))
    }

    /// Cauchy product truncated to the smaller order.  Exponents must be
    /// nonnegative on at least one side for the truncation to be exact; the
    /// series used here all are.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let mut out = Self::zero(order);
        for (ea, a) in &self.terms {
            for (eb, b) in &other.terms {
                if ea + eb > order {
                    break;
                }
                out.add_term(ea + eb, a * b);
            }
        }
        out
    }

    /// `(1 - c q^(step/18))^-1 = Σ_k c^k q^(k step/18)` for `step > 0`.
    pub fn geometric(c: &Cyclotomic, step: i64, order: i64) -> Self {
        assert!(step > 0, "geometric series needs a positive step");
        let mut out = Self::zero(order);
        let mut e = 0;
        let mut power = Cyclotomic::one();
        while e <= order {
            out.add_term(e, power.clone());
            power = &power * c;
            e += step;
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.order);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// All coefficients rational, returned in exponent order.
    pub fn rational_terms(&self) -> Option<Vec<(Rational, Rational)>> {
        self.terms
            .iter()
            .map(|(e, c)| c.as_rational().map(|r| (rat(*e, EXP_DEN), r)))
            .collect()
    }

    /// First exponent where the two series differ, within the common order.
    pub fn first_difference(&self, other: &Self) -> Option<(i64, Cyclotomic, Cyclotomic)> {
        let order = self.order.min(other.order);
        let exps: std::collections::BTreeSet<i64> = self
            .terms
            .keys()
            .chain(other.terms.keys())
            .copied()
            .filter(|e| *e <= order)
            .collect();
        exps.into_iter().find_map(|e| {
            let (a, b) = (self.coeff(e), other.coeff(e));
            (a != b).then_some((e, a, b))
        })
    }
}

/// `n/18` rendered in lowest terms.
pub fn exponent_string(exp: i64) -> String {
    let g = exp.gcd(&EXP_DEN);
    let (n, d) = (exp / g, EXP_DEN / g);
    if d == 1 {
        format!("{n}")
    } else {
        format!("{n}/{d}")
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            write!(f, "0")?;
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match c.as_rational() {
                Some(r) => write!(f, "{r} q^{}", exponent_string(*e))?,
                None => write!(f, "({c}) q^{}", exponent_string(*e))?,
            }
        }
        write!(f, " + O(q^{})", exponent_string(self.order + 1))
    }
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QSeries[{self}]")
    }
}
