//! Induced-pattern searches: claw, cricket and anticycles.

use super::{bits, Graph};

/// The claw: centre 0 with leaves 1, 2, 3.
pub fn claw() -> Graph {
    Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).expect("valid claw")
}

/// The cricket: centre 0 adjacent to 1..=4, plus the edge {3, 4}.
pub fn cricket() -> Graph {
    Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (3, 4)]).expect("valid cricket")
}

fn subsets_of_size(n: usize, k: usize, mut f: impl FnMut(u64) -> bool) -> bool {
    fn rec(start: usize, n: usize, left: usize, mask: u64, f: &mut dyn FnMut(u64) -> bool) -> bool {
        if left == 0 {
            return f(mask);
        }
        for v in start..=n - left {
            if rec(v + 1, n, left - 1, mask | 1 << v, f) {
                return true;
            }
        }
        false
    }
    k <= n && rec(0, n, k, 0, &mut f)
}

/// Exhaustive isomorphism test between equal-order graphs, pruned by degrees.
fn isomorphic_small(a: &Graph, b: &Graph) -> bool {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let (da, db) = (a.degrees(), b.degrees());
    let mut sa = da.clone();
    let mut sb = db.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return false;
    }
    let mut image = vec![usize::MAX; n];
    fn extend(a: &Graph, b: &Graph, da: &[usize], db: &[usize], v: usize, used: u64, image: &mut [usize]) -> bool {
        if v == a.vertex_count() {
            return true;
        }
        for w in 0..b.vertex_count() {
            if used >> w & 1 == 1 || da[v] != db[w] {
                continue;
            }
            if (0..v).all(|u| a.has_edge(u, v) == b.has_edge(image[u], w)) {
                image[v] = w;
                if extend(a, b, da, db, v + 1, used | 1 << w, image) {
                    return true;
                }
            }
        }
        false
    }
    extend(a, b, &da, &db, 0, 0, &mut image)
}

/// Whether some vertex subset of `g` induces a copy of `pattern`.
pub fn has_induced_subgraph(g: &Graph, pattern: &Graph) -> bool {
    let k = pattern.vertex_count();
    subsets_of_size(g.vertex_count(), k, |mask| {
        isomorphic_small(&g.induced_by_mask(mask), pattern)
    })
}

pub fn has_induced_claw(g: &Graph) -> bool {
    has_induced_subgraph(g, &claw())
}

pub fn has_induced_cricket(g: &Graph) -> bool {
    has_induced_subgraph(g, &cricket())
}

/// Connected and 2-regular on at least three vertices.
fn is_cycle_graph(g: &Graph) -> bool {
    if g.vertex_count() < 3 || g.degrees().iter().any(|&d| d != 2) {
        return false;
    }
    let mut seen = 1u64;
    let mut frontier = 1u64;
    while frontier != 0 {
        let next = bits(frontier).fold(0, |m, v| m | g.adjacency_mask(v));
        frontier = next & !seen;
        seen |= next;
    }
    seen == g.all_mask()
}

/// Smallest `l >= 5` such that some `l` vertices induce an anticycle of
/// length `l`, together with one such vertex set.
pub fn find_induced_anticycle(g: &Graph) -> Option<(usize, Vec<usize>)> {
    let n = g.vertex_count();
    for l in 5..=n {
        let mut found = None;
        subsets_of_size(n, l, |mask| {
            if is_cycle_graph(&g.induced_by_mask(mask).complement()) {
                found = Some(mask);
                true
            } else {
                false
            }
        });
        if let Some(mask) = found {
            return Some((l, bits(mask).collect()));
        }
    }
    None
}
