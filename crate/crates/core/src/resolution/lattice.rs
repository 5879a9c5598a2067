//! The lcm lattice of a monomial ideal.

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use std::collections::HashSet;

/// Distinct lcms of nonempty subsets of the minimal generators, plus a formal
/// bottom element that is not stored. Elements are kept in graded order, so
/// every element appears after all of its proper divisors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LcmLattice {
    nvars: usize,
    atoms: usize,
    elements: Vec<Monomial>,
}

impl LcmLattice {
    pub fn new(ideal: &MonomialIdeal, cap: usize) -> Result<Self> {
        ideal.require_proper()?;
        let gens = ideal.generators();
        if gens.len() + 1 > cap {
            return Err(Error::LatticeCap(cap));
        }
        let mut seen: HashSet<Monomial> = gens.iter().cloned().collect();
        let mut frontier: Vec<Monomial> = gens.to_vec();
        // closing under lcm with single generators reaches every subset lcm
        while let Some(m) = frontier.pop() {
            for g in gens {
                if g.divides(&m) {
                    continue;
                }
                let l = m.lcm(g);
                if !seen.contains(&l) {
                    if seen.len() + 2 > cap {
                        return Err(Error::LatticeCap(cap));
                    }
                    seen.insert(l.clone());
                    frontier.push(l);
                }
            }
        }
        let mut elements: Vec<Monomial> = seen.into_iter().collect();
        elements.sort();
        Ok(LcmLattice {
            nvars: ideal.nvars(),
            atoms: gens.len(),
            elements,
        })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn atom_count(&self) -> usize {
        self.atoms
    }

    /// Elements above the bottom, in graded order.
    pub fn elements(&self) -> &[Monomial] {
        &self.elements
    }

    /// Number of elements including the bottom.
    pub fn size(&self) -> usize {
        self.elements.len() + 1
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.elements.binary_search(m).is_ok()
    }

    /// Elements of the open interval `(bottom, m)`: proper divisors of `m`.
    pub fn open_interval_below(&self, m: &Monomial) -> Vec<&Monomial> {
        self.elements
            .iter()
            .take_while(|e| e.degree() < m.degree())
            .filter(|e| e.divides(m))
            .collect()
    }
}
