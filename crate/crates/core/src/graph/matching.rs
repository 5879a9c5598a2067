//! Matching and induced matching numbers by branch and bound.

use super::{bits, Graph};
use crate::error::{Error, Result};

/// A set of pairwise-disjoint edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    /// Accepts `edges` only if they are edges of `g` and pairwise disjoint.
    pub fn new(g: &Graph, edges: Vec<(usize, usize)>) -> Option<Self> {
        let mut used = 0u64;
        for &(u, v) in &edges {
            if !g.has_edge(u, v) || used >> u & 1 == 1 || used >> v & 1 == 1 {
                return None;
            }
            used |= 1 << u | 1 << v;
        }
        Some(Matching { edges })
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// No edge of `g` meets two distinct members.
    pub fn is_induced(&self, g: &Graph) -> bool {
        let closed: Vec<u64> = self
            .edges
            .iter()
            .map(|&(u, v)| 1u64 << u | 1 << v)
            .collect();
        g.edges().iter().all(|&(u, v)| {
            let e = 1u64 << u | 1 << v;
            closed.iter().filter(|&&m| m & e != 0).count() <= 1
        })
    }
}

/// Maximum number of pairwise-disjoint edges.
pub fn matching_number(g: &Graph) -> usize {
    let mut best = 0;
    matching_search(g, g.all_mask(), 0, &mut best);
    best
}

fn matching_search(g: &Graph, alive: u64, size: usize, best: &mut usize) {
    // drop vertices with no live neighbour
    let live = bits(alive)
        .filter(|&v| g.adjacency_mask(v) & alive != 0)
        .fold(0u64, |m, v| m | 1 << v);
    *best = (*best).max(size);
    if size + live.count_ones() as usize / 2 <= *best {
        return;
    }
    let v = live.trailing_zeros() as usize;
    for u in bits(g.adjacency_mask(v) & live) {
        matching_search(g, live & !(1u64 << v | 1 << u), size + 1, best);
    }
    matching_search(g, live & !(1u64 << v), size, best);
}

/// Maximum size of an induced matching. Undefined for edgeless graphs.
pub fn induced_matching_number(g: &Graph) -> Result<usize> {
    if g.edge_count() == 0 {
        return Err(Error::EdgelessGraph);
    }
    let mut best = 0;
    induced_search(g, g.all_mask(), 0, &mut best);
    Ok(best)
}

fn induced_search(g: &Graph, alive: u64, size: usize, best: &mut usize) {
    let live = bits(alive)
        .filter(|&v| g.adjacency_mask(v) & alive != 0)
        .fold(0u64, |m, v| m | 1 << v);
    *best = (*best).max(size);
    // an induced matching is a matching of the live subgraph
    if size + live.count_ones() as usize / 2 <= *best {
        return;
    }
    let v = live.trailing_zeros() as usize;
    // v is either an endpoint of a chosen edge vu, or not covered at all
    for u in bits(g.adjacency_mask(v) & live) {
        let blocked = 1u64 << v | 1 << u | g.adjacency_mask(v) | g.adjacency_mask(u);
        induced_search(g, live & !blocked, size + 1, best);
    }
    induced_search(g, live & !(1u64 << v), size, best);
}

/// `im(g) = 1`. Undefined for edgeless graphs.
pub fn is_gap_free(g: &Graph) -> Result<bool> {
    Ok(induced_matching_number(g)? == 1)
}
