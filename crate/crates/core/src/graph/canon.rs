//! Canonical labelling by refinement plus exhaustive search within cells,
//! and isomorphism-class enumeration by one-vertex augmentation.

use super::{bits, graph6, Graph};
use std::collections::HashSet;

/// Iso-invariant ordered partition of the vertices: colours start at the
/// degree and are refined by the multiset of neighbour colours until stable.
fn refined_colours(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut colour: Vec<usize> = g.degrees();
    let mut classes = 0;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = bits(g.adjacency_mask(v)).map(|u| colour[u]).collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| distinct.binary_search(s).expect("present"))
            .collect();
        if distinct.len() == classes {
            return next;
        }
        classes = distinct.len();
        colour = next;
    }
}

struct Search<'a> {
    g: &'a Graph,
    /// colour required at each position
    slots: Vec<usize>,
    colour: Vec<usize>,
    order: Vec<usize>,
    columns: Vec<u64>,
    best: Option<(Vec<u64>, Vec<usize>)>,
}

impl Search<'_> {
    fn column(&self, v: usize) -> u64 {
        let j = self.order.len();
        self.order
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, &u)| acc | (self.g.has_edge(u, v) as u64) << (j - 1 - i))
    }

    fn run(&mut self, used: u64) {
        let j = self.order.len();
        if let Some((best, _)) = &self.best {
            if self.columns[..] < best[..j] {
                return;
            }
        }
        if j == self.slots.len() {
            let better = match &self.best {
                None => true,
                Some((best, _)) => self.columns > *best,
            };
            if better {
                self.best = Some((self.columns.clone(), self.order.clone()));
            }
            return;
        }
        let want = self.slots[j];
        for v in 0..self.g.vertex_count() {
            if used >> v & 1 == 1 || self.colour[v] != want {
                continue;
            }
            let col = self.column(v);
            self.order.push(v);
            self.columns.push(col);
            self.run(used | 1 << v);
            self.columns.pop();
            self.order.pop();
        }
    }
}

/// Canonical relabelling: isomorphic graphs map to identical graphs.
pub fn canonical_form(g: &Graph) -> Graph {
    let colour = refined_colours(g);
    let mut slots = colour.clone();
    slots.sort_unstable();
    let mut search = Search {
        g,
        slots,
        colour,
        order: Vec::new(),
        columns: Vec::new(),
        best: None,
    };
    search.run(0);
    let (_, order) = search.best.expect("at least one labelling");
    // order[pos] = old vertex; relabel maps old -> pos
    let mut perm = vec![0; order.len()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    g.relabel(&perm).expect("order is a permutation")
}

pub fn canonical_graph6(g: &Graph) -> String {
    graph6::encode(&canonical_form(g))
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.vertex_count() == b.vertex_count()
        && a.edge_count() == b.edge_count()
        && canonical_form(a) == canonical_form(b)
}

/// One representative (in canonical form) of every isomorphism class of
/// graphs on `n` vertices, sorted by graph6 string.
pub fn enumerate_graphs(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(0).expect("empty graph")];
    for _ in 0..n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for nbrs in 0..=g.all_mask() {
                let h = canonical_form(&g.extend_with(nbrs).expect("within vertex limit"));
                if seen.insert(graph6::encode(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    level.sort_by_cached_key(graph6::encode);
    level
}
