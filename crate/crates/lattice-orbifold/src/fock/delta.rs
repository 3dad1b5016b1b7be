//! The constants `c^i_{mn}` and the operator `exp(Δ_x)` that turns the
//! normal-ordered field `W` into the twisted vertex operator.

use std::collections::BTreeMap;

use super::untwisted::{UntwistedSector, UntwistedState};
use super::Combination;
use crate::lattice::LatticeVector;
use crate::scalars::{binomial, rat, Cyclotomic};

type Bivariate = Vec<Vec<Cyclotomic>>;

fn bi_zero(order: usize) -> Bivariate {
    vec![vec![Cyclotomic::zero(); order + 1]; order + 1]
}

fn bi_mul(a: &Bivariate, b: &Bivariate, order: usize) -> Bivariate {
    let mut out = bi_zero(order);
    for i in 0..=order {
        for j in 0..=order {
            if a[i][j].is_zero() {
                continue;
            }
            for k in 0..=order - i {
                for l in 0..=order - j {
                    if !b[k][l].is_zero() {
                        out[i + k][j + l] += &(&a[i][j] * &b[k][l]);
                    }
                }
            }
        }
    }
    out
}

/// `log(((1+x)^{1/3} − w (1+y)^{1/3}) / (1 − w))` truncated in both variables.
fn log_ratio(w: &Cyclotomic, order: usize) -> Bivariate {
    let inv = (Cyclotomic::one() - w).inverse().expect("w ≠ 1");
    // t = (a(x) − w a(y)) / (1 − w) with a(z) = (1+z)^{1/3} − 1
    let mut t = bi_zero(order);
    for k in 1..=order {
        let c = Cyclotomic::from_rational(binomial(&rat(1, 3), k as i64));
        t[k][0] = &c * &inv;
        t[0][k] = -(&(&c * w) * &inv);
    }
    let mut out = bi_zero(order);
    let mut power = t.clone();
    for k in 1..=2 * order {
        let sign = if k % 2 == 1 { 1 } else { -1 };
        let c = Cyclotomic::from_rational(rat(sign, k as i64));
        for i in 0..=order {
            for j in 0..=order {
                if !power[i][j].is_zero() {
                    out[i][j] += &(&power[i][j] * &c);
                }
            }
        }
        power = bi_mul(&power, &t, order);
    }
    out
}

/// `c^i_{mn}` for `0 ≤ m, n ≤ order`.
#[derive(Clone, Debug)]
pub struct DeltaConstants {
    pub order: usize,
    table: [Bivariate; 3],
}

impl DeltaConstants {
    pub fn get(&self, i: usize, m: usize, n: usize) -> Cyclotomic {
        if m > self.order || n > self.order {
            return Cyclotomic::zero();
        }
        self.table[i % 3][m][n].clone()
    }
}

pub fn delta_constants(order: usize) -> DeltaConstants {
    let half = Cyclotomic::from_rational(rat(1, 2));
    let c1: Bivariate = log_ratio(&Cyclotomic::zeta3(-1), order);
    let c2: Bivariate = log_ratio(&Cyclotomic::zeta3(-2), order);
    let mut t = [bi_zero(order), bi_zero(order), bi_zero(order)];
    for m in 0..=order {
        for n in 0..=order {
            t[1][m][n] = &c1[m][n] * &half;
            t[2][m][n] = &c2[m][n] * &half;
            t[0][m][n] = -(&t[1][m][n] + &t[2][m][n]);
        }
    }
    DeltaConstants { order, table: t }
}

/// Inverse Gram matrix of the coordinate basis `β₁/2, (β₁ − β₂)/6` of one site.
const INVERSE_GRAM: [[i64; 2]; 2] = [[4, -6], [-6, 12]];

/// `exp(Δ_x) v` as a list of `(k, u_k)` with `exp(Δ_x) v = Σ_k u_k x^{−k}`.
/// `power` selects `σ = τ^power` in `(σ^{−i} e_a)(m) e_b(n)`.
pub fn apply_exp_delta(
    consts: &DeltaConstants,
    power: i64,
    sector: &UntwistedSector,
    v: &UntwistedState,
) -> BTreeMap<i64, UntwistedState> {
    let len = sector.len;
    // operator terms: (coefficient, left vector, m, right vector, n)
    let mut ops: Vec<(Cyclotomic, LatticeVector, i64, LatticeVector, i64)> = Vec::new();
    for s in 0..len {
        for (a, row) in INVERSE_GRAM.iter().enumerate() {
            for (b, g) in row.iter().enumerate() {
                let ea = LatticeVector::at_site(len, s, unit(a));
                let eb = LatticeVector::at_site(len, s, unit(b));
                for i in 0..3 {
                    let left = ea.tau_pow(-power * i as i64);
                    for m in 0..=consts.order {
                        for n in 0..=consts.order {
                            let c = consts.get(i, m, n);
                            if c.is_zero() {
                                continue;
                            }
                            ops.push((
                                c.scale(&rat(*g, 1)),
                                left.clone(),
                                m as i64,
                                eb.clone(),
                                n as i64,
                            ));
                        }
                    }
                }
            }
        }
    }
    let apply = |st: &UntwistedState| -> BTreeMap<i64, UntwistedState> {
        let mut out: BTreeMap<i64, UntwistedState> = BTreeMap::new();
        for (c, left, m, right, n) in &ops {
            let r = sector.mode(right, *n, st);
            if r.is_zero() {
                continue;
            }
            let l = sector.mode(left, *m, &r);
            if l.is_zero() {
                continue;
            }
            out.entry(m + n).or_default().add_assign(&l.scale(c));
        }
        out.retain(|_, s| !s.is_zero());
        out
    };
    let mut total: BTreeMap<i64, UntwistedState> = BTreeMap::new();
    total.insert(0, v.clone());
    let mut cur = total.clone();
    let mut k = 1i64;
    while !cur.is_empty() {
        let mut next: BTreeMap<i64, UntwistedState> = BTreeMap::new();
        for (e, st) in &cur {
            for (de, img) in apply(st) {
                next.entry(e + de).or_default().add_assign(&img);
            }
        }
        let inv_k = Cyclotomic::from_rational(rat(1, k));
        next = next
            .into_iter()
            .filter(|(_, s)| !s.is_zero())
            .map(|(e, s)| (e, s.scale(&inv_k)))
            .collect();
        for (e, st) in &next {
            total.entry(*e).or_insert_with(Combination::zero).add_assign(st);
        }
        cur = next;
        k += 1;
    }
    total.retain(|_, s| !s.is_zero());
    total
}

fn unit(a: usize) -> [i64; 2] {
    if a == 0 {
        [1, 0]
    } else {
        [0, 1]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_term_vanishes() {
        let d = delta_constants(3);
        for i in 0..3 {
            assert!(d.get(i, 0, 0).is_zero());
        }
    }

    #[test]
    fn zeroth_constants_sum_to_zero() {
        let d = delta_constants(2);
        for m in 0..=2 {
            for n in 0..=2 {
                let s = d.get(0, m, n) + d.get(1, m, n) + d.get(2, m, n);
                assert!(s.is_zero());
            }
        }
    }

    #[test]
    fn first_order_coefficients() {
        // ∂/∂x at 0 of ½ log(...) is (1/6)/(1 − w)
        let d = delta_constants(1);
        for i in 1..3 {
            let w = Cyclotomic::zeta3(-(i as i64));
            let expect = (Cyclotomic::one() - &w).inverse().unwrap().scale(&rat(1, 6));
            assert_eq!(d.get(i, 1, 0), expect);
        }
    }
}
