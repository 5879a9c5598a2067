//! Exact rank of sparse integer matrices over Q or GF(p).

use super::Field;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, Signed};

/// A sparse row: `(column, value)` pairs sorted by column, no zero values.
pub type SparseRow = Vec<(usize, i64)>;

pub fn rank(rows: &[SparseRow], field: Field) -> usize {
    match field {
        Field::Prime(p) => rank_mod_p(rows, p),
        Field::Rationals => rank_fraction_free::<i64>(rows)
            .unwrap_or_else(|| rank_fraction_free::<BigInt>(rows).expect("BigInt cannot overflow")),
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // p is prime: a^(p-2)
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn rank_mod_p(rows: &[SparseRow], p: u64) -> usize {
    let mut pivots: std::collections::HashMap<usize, Vec<(usize, u64)>> = Default::default();
    for row in rows {
        let mut r: Vec<(usize, u64)> = row
            .iter()
            .map(|&(c, v)| (c, v.rem_euclid(p as i64) as u64))
            .filter(|&(_, v)| v != 0)
            .collect();
        while let Some(&(lead, lv)) = r.first() {
            match pivots.get(&lead) {
                None => {
                    // normalise so the pivot entry is 1
                    let inv = inv_mod(lv, p);
                    for e in r.iter_mut() {
                        e.1 = e.1 * inv % p;
                    }
                    pivots.insert(lead, r);
                    break;
                }
                Some(piv) => {
                    // r -= lv * piv
                    let mut out = Vec::with_capacity(r.len() + piv.len());
                    let (mut a, mut b) = (0, 0);
                    while a < r.len() || b < piv.len() {
                        let ca = r.get(a).map_or(usize::MAX, |e| e.0);
                        let cb = piv.get(b).map_or(usize::MAX, |e| e.0);
                        let (c, v) = if ca == cb {
                            let v = (r[a].1 + p - lv * piv[b].1 % p) % p;
                            a += 1;
                            b += 1;
                            (ca, v)
                        } else if ca < cb {
                            a += 1;
                            (ca, r[a - 1].1)
                        } else {
                            b += 1;
                            (cb, (p - lv * piv[b - 1].1 % p) % p)
                        };
                        if v != 0 {
                            out.push((c, v));
                        }
                    }
                    r = out;
                }
            }
        }
    }
    pivots.len()
}

/// Fraction-free elimination; `None` if `T` overflows.
fn rank_fraction_free<T>(rows: &[SparseRow]) -> Option<usize>
where
    T: Integer + Signed + Clone + CheckedMul + CheckedSub + From<i64>,
{
    let mut pivots: std::collections::HashMap<usize, Vec<(usize, T)>> = Default::default();
    for row in rows {
        let mut r: Vec<(usize, T)> = row
            .iter()
            .filter(|e| e.1 != 0)
            .map(|&(c, v)| (c, T::from(v)))
            .collect();
        while let Some((lead, _)) = r.first() {
            let lead = *lead;
            let Some(piv) = pivots.get(&lead) else {
                pivots.insert(lead, r);
                break;
            };
            // r <- piv[lead] * r - r[lead] * piv, then divide out the content
            let pl = piv[0].1.clone();
            let rl = r[0].1.clone();
            let mut out: Vec<(usize, T)> = Vec::with_capacity(r.len() + piv.len());
            let (mut a, mut b) = (0, 0);
            while a < r.len() || b < piv.len() {
                let ca = r.get(a).map_or(usize::MAX, |e| e.0);
                let cb = piv.get(b).map_or(usize::MAX, |e| e.0);
                let (c, v) = if ca == cb {
                    let x = pl.checked_mul(&r[a].1)?;
                    let y = rl.checked_mul(&piv[b].1)?;
                    a += 1;
                    b += 1;
                    (ca, x.checked_sub(&y)?)
                } else if ca < cb {
                    a += 1;
                    (ca, pl.checked_mul(&r[a - 1].1)?)
                } else {
                    b += 1;
                    (cb, T::zero().checked_sub(&rl.checked_mul(&piv[b - 1].1)?)?)
                };
                if !v.is_zero() {
                    out.push((c, v));
                }
            }
            let content = out.iter().fold(T::zero(), |g, e| g.gcd(&e.1));
            if !content.is_zero() && content != T::from(1) {
                for e in out.iter_mut() {
                    e.1 = e.1.div_floor(&content);
                }
            }
            r = out;
        }
    }
    Some(pivots.len())
}
