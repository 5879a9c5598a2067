use edgereg::graph::{canonical_form, induced_matching_number, is_isomorphic, matching_number};
use edgereg::resolution::{
    betti_table, betti_table_with, taylor_betti_oracle, EngineConfig, HomologyRoute,
};
use edgereg::{Caps, Field, Graph, Monomial, MonomialIdeal};
use proptest::prelude::*;
use std::collections::BTreeMap;

const NVARS: usize = 4;

fn ideal_strategy() -> impl Strategy<Value = MonomialIdeal> {
    let nonunit =
        prop::collection::vec(0u32..3, NVARS).prop_filter("nonunit", |e| e.iter().any(|&x| x > 0));
    prop::collection::vec(nonunit, 1..6).prop_map(|gens| {
        MonomialIdeal::minimalize(NVARS, gens.into_iter().map(Monomial::from_exponents))
    })
}

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        prop::collection::vec(any::<bool>(), pairs.len()).prop_map(move |keep| {
            let edges: Vec<_> = pairs
                .iter()
                .zip(keep)
                .filter(|(_, k)| *k)
                .map(|(e, _)| *e)
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

/// Signed multidegree sum from the Taylor complex: `sum over nonempty subsets
/// of (-1)^(|s|-1) lcm(s)`, computed without any homology.
fn taylor_k_polynomial(ideal: &MonomialIdeal) -> BTreeMap<Monomial, i64> {
    let gens = ideal.generators();
    let mut out = BTreeMap::new();
    for mask in 1u32..(1 << gens.len()) {
        let mut lcm = Monomial::one(ideal.nvars());
        for (i, g) in gens.iter().enumerate() {
            if mask >> i & 1 == 1 {
                lcm = lcm.lcm(g);
            }
        }
        let sign = if mask.count_ones() % 2 == 1 { 1 } else { -1 };
        *out.entry(lcm).or_insert(0) += sign;
    }
    out.retain(|_, v| *v != 0);
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lattice_engine_matches_taylor_oracle(ideal in ideal_strategy(), p in prop::sample::select(vec![0u64, 2, 3])) {
        let field = if p == 0 { Field::Rationals } else { Field::Prime(p) };
        let engine = betti_table(&ideal, field).unwrap();
        let oracle = taylor_betti_oracle(&ideal, field, &Caps::default()).unwrap();
        prop_assert_eq!(engine.entries(), oracle.entries());
    }

    #[test]
    fn homology_routes_agree(ideal in ideal_strategy()) {
        let ko = betti_table(&ideal, Field::Rationals).unwrap();
        let cfg = EngineConfig { route: HomologyRoute::OrderComplex, ..EngineConfig::default() };
        let oc = betti_table_with(&ideal, Field::Rationals, &cfg).unwrap();
        prop_assert_eq!(ko.multigraded(), oc.multigraded());
    }

    #[test]
    fn euler_characteristic_matches_taylor_sum(ideal in ideal_strategy()) {
        let table = betti_table(&ideal, Field::Rationals).unwrap();
        let mut k = BTreeMap::new();
        for ((i, m), b) in table.multigraded().unwrap() {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            *k.entry(m.clone()).or_insert(0i64) += sign * *b as i64;
        }
        k.retain(|_, v| *v != 0);
        prop_assert_eq!(k, taylor_k_polynomial(&ideal));
    }

    #[test]
    fn first_betti_numbers_count_generators(ideal in ideal_strategy()) {
        let table = betti_table(&ideal, Field::Rationals).unwrap();
        let mut by_degree = BTreeMap::new();
        for g in ideal.generators() {
            *by_degree.entry(g.degree()).or_insert(0u64) += 1;
        }
        for (d, c) in by_degree {
            prop_assert_eq!(table.get(0, d), c);
        }
    }

    #[test]
    fn edge_ideal_regularity_bounds(g in graph_strategy(7)) {
        prop_assume!(g.edge_count() > 0);
        let im = induced_matching_number(&g).unwrap() as i64;
        let m = matching_number(&g) as i64;
        prop_assert!(im <= m);
        let reg = betti_table(&MonomialIdeal::edge_ideal(&g).unwrap(), Field::Rationals)
            .unwrap()
            .regularity()
            .unwrap();
        prop_assert!(im + 1 <= reg && reg <= m + 1, "im {im}, m {m}, reg {reg}");
    }

    #[test]
    fn canonical_form_ignores_labels((g, perm) in graph_strategy(7).prop_flat_map(|g| {
        let n = g.vertex_count();
        (Just(g), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
    })) {
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert!(is_isomorphic(&g, &h));
    }

    #[test]
    fn suspension_keeps_regularity(g in graph_strategy(5), pick in any::<u64>()) {
        prop_assume!(g.edge_count() > 0);
        let sets: Vec<_> = g.independent_sets().into_iter().filter(|s| s.len() < g.vertex_count()).collect();
        let s = &sets[pick as usize % sets.len()];
        let reg = |h: &Graph| betti_table(&MonomialIdeal::edge_ideal(h).unwrap(), Field::Rationals)
            .unwrap()
            .regularity()
            .unwrap();
        prop_assert_eq!(reg(&g), reg(&g.s_suspension(s).unwrap()));
    }
}
