//! Finite simple graphs on dense vertex labels `0..n`.
//!
//! Adjacency is stored as one `u64` bitmask per vertex, so graphs are
//! limited to [`MAX_VERTICES`] vertices. Every operation is a pure function
//! of its inputs.

mod canon;
mod chordal;
pub mod graph6;
mod matching;
mod pattern;

pub use canon::{canonical_form, canonical_graph6, enumerate_graphs, is_isomorphic};
pub use chordal::{is_chordal, is_perfect_elimination_ordering, maximum_cardinality_search};
pub use matching::{induced_matching_number, is_gap_free, matching_number, Matching};
pub use pattern::{
    claw, cricket, find_induced_anticycle, has_induced_claw, has_induced_cricket,
    has_induced_subgraph,
};

use crate::error::{Error, Result};
use std::fmt;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

/// A finite simple graph. Vertices are `0..vertex_count()`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

/// Bitmask of a vertex subset.
pub(crate) fn mask_of(vertices: &[usize]) -> u64 {
    vertices.iter().fold(0u64, |m, &v| m | (1u64 << v))
}

pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Loop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.adj[u] >> (u + 1)) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    pub(crate) fn adjacency_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub(crate) fn all_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex: v,
                vertex_count: self.n,
            })
        }
    }

    fn check_subset(&self, vertices: &[usize]) -> Result<u64> {
        for &v in vertices {
            self.check_vertex(v)?;
        }
        Ok(mask_of(vertices))
    }

    pub fn neighborhood(&self, v: usize) -> Result<Vec<usize>> {
        self.check_vertex(v)?;
        Ok(bits(self.adj[v]).collect())
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].count_ones() as usize)
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|a| a.count_ones() as usize).collect()
    }

    /// Vertices not covered by any edge. Edge ideals ignore them.
    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.adj[v] == 0).collect()
    }

    pub fn complement(&self) -> Graph {
        let all = self.all_mask();
        let adj = (0..self.n)
            .map(|v| !self.adj[v] & all & !(1u64 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Subgraph induced on `w`, re-indexed to `0..w.len()` in the order given.
    pub fn induced_subgraph(&self, w: &[usize]) -> Result<Graph> {
        self.check_subset(w)?;
        let mut sub = Graph::empty(w.len())?;
        for (a, &u) in w.iter().enumerate() {
            for (b, &v) in w.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    sub.add_edge(a, b)?;
                }
            }
        }
        Ok(sub)
    }

    pub(crate) fn induced_by_mask(&self, mask: u64) -> Graph {
        let w: Vec<usize> = bits(mask).collect();
        self.induced_subgraph(&w).expect("mask within range")
    }

    /// Graph with vertex `v` of `self` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let mut seen = 0u64;
        for &p in perm {
            self.check_vertex(p)?;
            seen |= 1 << p;
        }
        if perm.len() != self.n || seen != self.all_mask() {
            return Err(Error::Graph6("relabeling is not a permutation".into()));
        }
        let mut adj = vec![0u64; self.n];
        for (u, &pu) in perm.iter().enumerate() {
            adj[pu] = bits(self.adj[u]).fold(0, |m, v| m | 1 << perm[v]);
        }
        Ok(Graph { n: self.n, adj })
    }

    pub fn is_independent_set(&self, s: &[usize]) -> Result<bool> {
        let mask = self.check_subset(s)?;
        Ok(bits(mask).all(|v| self.adj[v] & mask == 0))
    }

    pub fn is_vertex_cover(&self, u: &[usize]) -> Result<bool> {
        let mask = self.check_subset(u)?;
        let rest = self.all_mask() & !mask;
        Ok(bits(rest).all(|v| self.adj[v] & rest == 0))
    }

    /// All independent sets, as sorted vertex lists, in increasing mask order.
    pub fn independent_sets(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        self.grow_independent(0, 0, &mut out);
        out.sort_by_key(|s| mask_of(s));
        out
    }

    fn grow_independent(&self, start: usize, mask: u64, out: &mut Vec<Vec<usize>>) {
        out.push(bits(mask).collect());
        for v in start..self.n {
            if self.adj[v] & mask == 0 {
                self.grow_independent(v + 1, mask | 1 << v, out);
            }
        }
    }

    /// Inclusion-minimal vertex covers.
    pub fn minimal_vertex_covers(&self) -> Vec<Vec<usize>> {
        // complements of maximal independent sets
        let sets = self.independent_sets();
        let masks: Vec<u64> = sets.iter().map(|s| mask_of(s)).collect();
        let all = self.all_mask();
        masks
            .iter()
            .filter(|&&m| !masks.iter().any(|&o| o != m && o & m == m))
            .map(|&m| bits(all & !m).collect())
            .collect()
    }

    /// Adds a new vertex `z = n` adjacent to every vertex outside `s`.
    pub fn s_suspension(&self, s: &[usize]) -> Result<Graph> {
        if !self.is_independent_set(s)? {
            return Err(Error::NotIndependent(s.to_vec()));
        }
        let mask = mask_of(s);
        let neighbors = self.all_mask() & !mask;
        if neighbors == 0 {
            return Err(Error::IsolatedSuspension);
        }
        self.extend_with(neighbors)
    }

    /// One-vertex extension whose new vertex `n` has neighbourhood `neighbors`.
    pub fn extend_with(&self, neighbors: u64) -> Result<Graph> {
        if self.n >= MAX_VERTICES {
            return Err(Error::TooManyVertices(self.n + 1));
        }
        if neighbors & !self.all_mask() != 0 {
            return Err(Error::InvalidVertex {
                vertex: 63 - neighbors.leading_zeros() as usize,
                vertex_count: self.n,
            });
        }
        let z = self.n;
        let mut adj = self.adj.clone();
        for v in bits(neighbors) {
            adj[v] |= 1 << z;
        }
        adj.push(neighbors);
        Ok(Graph { n: z + 1, adj })
    }

    /// Every graph on one extra vertex that restricts to `self` and whose new
    /// vertex has a nonempty neighbourhood; `2^n - 1` graphs, ordered by the
    /// neighbourhood bitmask.
    pub fn one_vertex_extensions(&self) -> Result<Vec<Graph>> {
        if self.n >= MAX_VERTICES {
            return Err(Error::TooManyVertices(self.n + 1));
        }
        (1..=self.all_mask()).map(|m| self.extend_with(m)).collect()
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::BuilderTooSmall {
                builder: "cycle",
                n,
                min: 3,
            });
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn anticycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::BuilderTooSmall {
                builder: "anticycle",
                n,
                min: 3,
            });
        }
        Ok(Graph::cycle(n)?.complement())
    }

    /// Path on `n` vertices (`n - 1` edges).
    pub fn path(n: usize) -> Result<Graph> {
        if n < 1 {
            return Err(Error::BuilderTooSmall {
                builder: "path",
                n,
                min: 1,
            });
        }
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn complete(n: usize) -> Result<Graph> {
        Ok(Graph::empty(n)?.complement())
    }

    /// Parses `cycle:n`, `anticycle:n`, `path:n` or `complete:n`.
    pub fn from_builder_spec(spec: &str) -> Result<Graph> {
        let (name, arg) = spec
            .split_once(':')
            .ok_or_else(|| Error::BuilderParse(spec.to_string()))?;
        let n: usize = arg
            .trim()
            .parse()
            .map_err(|_| Error::BuilderParse(spec.to_string()))?;
        match name.trim() {
            "cycle" => Graph::cycle(n),
            "anticycle" => Graph::anticycle(n),
            "path" => Graph::path(n),
            "complete" => Graph::complete(n),
            _ => Err(Error::BuilderParse(spec.to_string())),
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&graph6::encode(self))
    }
}
