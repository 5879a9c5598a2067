//! Betti numbers as Tor computed from the Taylor resolution.
//!
//! Kept independent of the lattice engine: it shares only the rank routine.
//! In multidegree `m`, `Tor_i(I, k)_m` is the homology of the strand spanned
//! by subsets `σ` of the generators with `lcm(σ) = m` and `|σ| = i + 1`; a
//! boundary term survives tensoring with `k` exactly when removing the
//! generator leaves the lcm unchanged.

use super::betti::{BettiTable, Caps};
use super::linalg::{rank, SparseRow};
use super::Field;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use std::collections::{BTreeMap, HashMap};

pub fn taylor_betti_oracle(ideal: &MonomialIdeal, field: Field, caps: &Caps) -> Result<BettiTable> {
    ideal.require_proper()?;
    let gens = ideal.generators();
    if gens.len() > caps.taylor_generators || gens.len() >= 32 {
        return Err(Error::GeneratorCap {
            count: gens.len(),
            cap: caps.taylor_generators.min(31),
        });
    }
    let g = gens.len();
    let mut lcm_of = vec![Monomial::one(ideal.nvars()); 1 << g];
    for s in 1usize..1 << g {
        let low = s.trailing_zeros() as usize;
        lcm_of[s] = lcm_of[s & (s - 1)].lcm(&gens[low]);
    }
    // faces grouped by multidegree, then by size
    let mut strands: HashMap<&Monomial, BTreeMap<u32, Vec<usize>>> = HashMap::new();
    for s in 1usize..1 << g {
        strands
            .entry(&lcm_of[s])
            .or_default()
            .entry(s.count_ones())
            .or_default()
            .push(s);
    }
    let mut multi = BTreeMap::new();
    for (m, by_size) in strands {
        let index: HashMap<usize, usize> = by_size
            .values()
            .flat_map(|faces| faces.iter().enumerate().map(|(k, &s)| (s, k)))
            .collect();
        // rank of the differential out of faces of each size
        let diff_rank = |size: u32| -> usize {
            let Some(faces) = by_size.get(&size) else { return 0 };
            if size < 2 {
                return 0;
            }
            let rows: Vec<SparseRow> = faces
                .iter()
                .map(|&s| {
                    let mut row: SparseRow = Vec::new();
                    for (pos, bit) in (0..g).filter(|b| s >> b & 1 == 1).enumerate() {
                        let t = s & !(1 << bit);
                        if lcm_of[t] == *m {
                            row.push((index[&t], if pos % 2 == 0 { 1 } else { -1 }));
                        }
                    }
                    row.sort_unstable();
                    row
                })
                .collect();
            rank(&rows, field)
        };
        for (&size, faces) in &by_size {
            let beta = faces.len() - diff_rank(size) - diff_rank(size + 1);
            if beta > 0 {
                multi.insert(((size - 1) as usize, m.clone()), beta as u64);
            }
        }
    }
    Ok(BettiTable::from_multigraded(field, multi))
}
