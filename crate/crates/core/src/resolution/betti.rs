//! Graded and multigraded Betti numbers of monomial ideals.
//!
//! Nonzero multigraded Betti numbers of `I` sit on elements `m` of its lcm
//! lattice, with `β_{i,m}(I) = dim H̃_{i-1}(Δ_m)`. Two complexes with the
//! same reduced homology are supported for `Δ_m`: the order complex of the
//! open lattice interval `(bottom, m)`, and the upper Koszul complex
//! `{F ⊆ supp(m) : m / x^F ∈ I}`. The second has at most `2^n` faces and is
//! the default; the first can grow past any practical face cap on powers
//! of dense edge ideals.

use super::complex::SimplicialComplex;
use super::lattice::LcmLattice;
use super::Field;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Resource limits. Every engine entry point takes them explicitly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Caps {
    /// Maximum lcm-lattice size, bottom included.
    pub lattice_size: usize,
    /// Maximum number of faces in one materialized order complex.
    pub face_count: usize,
    /// Maximum generator count for the Taylor-complex oracle.
    pub taylor_generators: usize,
    /// Maximum generator count for the linear-quotients search.
    pub quotient_generators: usize,
    /// Wall-clock budget for the linear-quotients search.
    pub time_budget_ms: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            lattice_size: 1 << 20,
            face_count: 1 << 22,
            taylor_generators: 16,
            quotient_generators: 24,
            time_budget_ms: 10_000,
        }
    }
}

/// Which complex computes the homology at a lattice element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HomologyRoute {
    #[default]
    UpperKoszul,
    OrderComplex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct EngineConfig {
    pub caps: Caps,
    pub route: HomologyRoute,
}

/// Betti numbers `β_{i,j}` with an optional multigraded refinement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    field: Field,
    entries: BTreeMap<(usize, u32), u64>,
    multi: Option<BTreeMap<(usize, Monomial), u64>>,
}

impl BettiTable {
    /// Builds the table from multigraded entries, dropping zeros.
    pub fn from_multigraded(field: Field, multi: BTreeMap<(usize, Monomial), u64>) -> Self {
        let multi: BTreeMap<_, _> = multi.into_iter().filter(|e| e.1 > 0).collect();
        let mut entries = BTreeMap::new();
        for ((i, m), b) in &multi {
            *entries.entry((*i, m.degree())).or_insert(0) += b;
        }
        BettiTable {
            field,
            entries,
            multi: Some(multi),
        }
    }

    pub fn from_graded(field: Field, entries: BTreeMap<(usize, u32), u64>) -> Self {
        BettiTable {
            field,
            entries: entries.into_iter().filter(|e| e.1 > 0).collect(),
            multi: None,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero `((i, j), β)` entries in `(i, j)` order.
    pub fn entries(&self) -> &BTreeMap<(usize, u32), u64> {
        &self.entries
    }

    pub fn multigraded(&self) -> Option<&BTreeMap<(usize, Monomial), u64>> {
        self.multi.as_ref()
    }

    pub fn get_multigraded(&self, i: usize, m: &Monomial) -> Option<u64> {
        self.multi
            .as_ref()
            .map(|t| t.get(&(i, m.clone())).copied().unwrap_or(0))
    }

    pub fn without_multigraded(mut self) -> Self {
        self.multi = None;
        self
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `max { j - i : β_{i,j} ≠ 0 }`.
    pub fn regularity(&self) -> Result<i64> {
        self.entries
            .keys()
            .map(|&(i, j)| j as i64 - i as i64)
            .max()
            .ok_or(Error::ZeroIdeal)
    }

    /// `max { i : β_{i,j} ≠ 0 }`.
    pub fn projective_dimension(&self) -> Result<usize> {
        self.entries.keys().map(|&(i, _)| i).max().ok_or(Error::ZeroIdeal)
    }

    /// Every nonzero entry lies on `j = i + d`.
    pub fn is_linear(&self, d: u32) -> bool {
        self.entries.keys().all(|&(i, j)| j as i64 == i as i64 + d as i64)
    }

    pub fn to_json(&self) -> BettiTableJson {
        BettiTableJson {
            field: self.field,
            entries: self
                .entries
                .iter()
                .map(|(&(i, j), &beta)| GradedEntry { i, j, beta })
                .collect(),
            reg: self.regularity().ok(),
            pd: self.projective_dimension().ok(),
            multi: self.multi.as_ref().map(|t| {
                t.iter()
                    .map(|((i, m), &beta)| MultiEntry {
                        i: *i,
                        multidegree: m.exponents().to_vec(),
                        beta,
                    })
                    .collect()
            }),
        }
    }
}

/// Wire form: `{"field":"Q","entries":[{"i":1,"j":4,"beta":1}],"reg":3,"pd":1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTableJson {
    pub field: Field,
    pub entries: Vec<GradedEntry>,
    pub reg: Option<i64>,
    pub pd: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multi: Option<Vec<MultiEntry>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedEntry {
    pub i: usize,
    pub j: u32,
    pub beta: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiEntry {
    pub i: usize,
    pub multidegree: Vec<u32>,
    pub beta: u64,
}

impl From<BettiTableJson> for BettiTable {
    fn from(j: BettiTableJson) -> Self {
        match j.multi {
            Some(multi) => BettiTable::from_multigraded(
                j.field,
                multi
                    .into_iter()
                    .map(|e| ((e.i, Monomial::from_exponents(e.multidegree)), e.beta))
                    .collect(),
            ),
            None => BettiTable::from_graded(
                j.field,
                j.entries.into_iter().map(|e| ((e.i, e.j), e.beta)).collect(),
            ),
        }
    }
}

impl Serialize for BettiTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for BettiTable {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        BettiTableJson::deserialize(d).map(Into::into)
    }
}

/// Upper Koszul complex `{F ⊆ supp(m) : m / x^F ∈ I}` on the variables of `m`.
pub fn upper_koszul_complex(ideal: &MonomialIdeal, m: &Monomial) -> SimplicialComplex {
    let support = m.support();
    let dividing: Vec<&Monomial> = ideal
        .generators()
        .iter()
        .filter(|g| g.divides(m))
        .collect();
    let k = support.len();
    let mut faces = Vec::new();
    let mut exps = m.exponents().to_vec();
    for subset in 0u64..1 << k {
        for (b, &v) in support.iter().enumerate() {
            exps[v] = m.exponent(v) - (subset >> b & 1) as u32;
        }
        let inside = dividing
            .iter()
            .any(|g| g.exponents().iter().zip(&exps).all(|(a, b)| a <= b));
        if inside {
            faces.push(
                (0..k)
                    .filter(|b| subset >> b & 1 == 1)
                    .map(|b| support[b] as u32)
                    .collect(),
            );
        }
    }
    SimplicialComplex::from_closed_faces(m.nvars(), faces)
}

/// Order complex of the open interval `(bottom, m)` of the lcm lattice.
pub fn order_complex(lattice: &LcmLattice, m: &Monomial, cap: usize) -> Result<SimplicialComplex> {
    let below = lattice.open_interval_below(m);
    // strict order among the interval elements
    let up: Vec<Vec<u32>> = (0..below.len())
        .map(|a| {
            (a + 1..below.len())
                .filter(|&b| below[a].divides(below[b]))
                .map(|b| b as u32)
                .collect()
        })
        .collect();
    let mut faces: Vec<Vec<u32>> = vec![Vec::new()];
    let mut stack: Vec<Vec<u32>> = (0..below.len() as u32).map(|a| vec![a]).collect();
    while let Some(chain) = stack.pop() {
        let last = *chain.last().expect("nonempty chain") as usize;
        for &b in &up[last] {
            let mut next = chain.clone();
            next.push(b);
            stack.push(next);
        }
        faces.push(chain);
        if faces.len() > cap {
            return Err(Error::FaceCap(cap));
        }
    }
    Ok(SimplicialComplex::from_closed_faces(below.len(), faces))
}

fn homology_at(
    ideal: &MonomialIdeal,
    lattice: &LcmLattice,
    m: &Monomial,
    field: Field,
    config: &EngineConfig,
) -> Result<Vec<((usize, Monomial), u64)>> {
    let complex = match config.route {
        HomologyRoute::UpperKoszul => upper_koszul_complex(ideal, m),
        HomologyRoute::OrderComplex => order_complex(lattice, m, config.caps.face_count)?,
    };
    Ok(complex
        .reduced_homology(field)
        .into_iter()
        .map(|(d, h)| (((d + 1) as usize, m.clone()), h))
        .collect())
}

pub fn betti_table(ideal: &MonomialIdeal, field: Field) -> Result<BettiTable> {
    betti_table_with(ideal, field, &EngineConfig::default())
}

/// Multigraded Betti table of `ideal`, one lattice element at a time.
pub fn betti_table_with(
    ideal: &MonomialIdeal,
    field: Field,
    config: &EngineConfig,
) -> Result<BettiTable> {
    let lattice = LcmLattice::new(ideal, config.caps.lattice_size)?;
    let parts = lattice
        .elements()
        .par_iter()
        .map(|m| homology_at(ideal, &lattice, m, field, config))
        .collect::<Result<Vec<_>>>()?;
    Ok(BettiTable::from_multigraded(
        field,
        parts.into_iter().flatten().collect(),
    ))
}

pub fn regularity(ideal: &MonomialIdeal, field: Field) -> Result<i64> {
    betti_table(ideal, field)?.regularity()
}

pub fn projective_dimension(ideal: &MonomialIdeal, field: Field) -> Result<usize> {
    betti_table(ideal, field)?.projective_dimension()
}

/// Linear resolution for an ideal generated in one degree.
pub fn has_linear_resolution(ideal: &MonomialIdeal, field: Field) -> Result<bool> {
    has_linear_resolution_with(ideal, field, &EngineConfig::default())
}

pub fn has_linear_resolution_with(
    ideal: &MonomialIdeal,
    field: Field,
    config: &EngineConfig,
) -> Result<bool> {
    ideal.require_proper()?;
    let d = ideal
        .generated_in_single_degree()?
        .ok_or(Error::MixedDegrees)?;
    Ok(betti_table_with(ideal, field, config)?.is_linear(d))
}
