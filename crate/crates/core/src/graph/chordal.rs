use super::{bits, Graph};

/// Maximum-cardinality search. Returns an elimination ordering: the reverse
/// of the visiting order, which is a perfect elimination ordering exactly
/// when the graph is chordal.
pub fn maximum_cardinality_search(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut visited = 0u64;
    let mut weight = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        // ties broken by the smallest index
        let v = (0..n)
            .filter(|&v| visited >> v & 1 == 0)
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("an unvisited vertex remains");
        visited |= 1 << v;
        order.push(v);
        for u in bits(g.adjacency_mask(v) & !visited) {
            weight[u] += 1;
        }
    }
    order.reverse();
    order
}

/// Whether the neighbours of each vertex that come later in `order` form a clique.
pub fn is_perfect_elimination_ordering(g: &Graph, order: &[usize]) -> bool {
    let n = g.vertex_count();
    if order.len() != n {
        return false;
    }
    let mut later = g.all_mask();
    for &v in order {
        if v >= n || later >> v & 1 == 0 {
            return false;
        }
        later &= !(1u64 << v);
        let nbrs = g.adjacency_mask(v) & later;
        if bits(nbrs).any(|w| nbrs & !(1u64 << w) & !g.adjacency_mask(w) != 0) {
            return false;
        }
    }
    true
}

/// True iff `g` has no induced cycle of length at least four.
pub fn is_chordal(g: &Graph) -> bool {
    if g.vertex_count() <= 3 {
        return true;
    }
    is_perfect_elimination_ordering(g, &maximum_cardinality_search(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::enumerate_graphs;

    /// Brute force: some vertex subset of size >= 4 induces a connected 2-regular graph.
    fn has_long_induced_cycle(g: &Graph) -> bool {
        let n = g.vertex_count();
        (0u64..1 << n).filter(|m| m.count_ones() >= 4).any(|m| {
            let sub = g.induced_by_mask(m);
            sub.degrees().iter().all(|&d| d == 2) && sub.edges().len() == sub.vertex_count() && {
                // connected
                let mut seen = 1u64;
                let mut frontier = 1u64;
                while frontier != 0 {
                    let mut next = 0;
                    for v in bits(frontier) {
                        next |= sub.adjacency_mask(v);
                    }
                    frontier = next & !seen;
                    seen |= next;
                }
                seen == sub.all_mask()
            }
        })
    }

    #[test]
    fn examples() {
        assert!(is_chordal(&Graph::cycle(3).unwrap()));
        assert!(!is_chordal(&Graph::cycle(4).unwrap()));
        assert!(!is_chordal(&Graph::cycle(5).unwrap().complement()));
        assert!(is_chordal(&Graph::complete(6).unwrap()));
        assert!(is_chordal(&Graph::path(6).unwrap()));
    }

    #[test]
    fn agrees_with_induced_cycle_search_up_to_seven_vertices() {
        for n in 0..=7 {
            for g in enumerate_graphs(n) {
                assert_eq!(is_chordal(&g), !has_long_induced_cycle(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn peo_rejects_bad_orders() {
        let p3 = Graph::path(3).unwrap();
        assert!(is_perfect_elimination_ordering(&p3, &[0, 2, 1]));
        assert!(!is_perfect_elimination_ordering(&p3, &[1, 0, 2]));
        assert!(!is_perfect_elimination_ordering(&p3, &[0, 1]));
        assert!(!is_perfect_elimination_ordering(&p3, &[0, 0, 1]));
    }
}
