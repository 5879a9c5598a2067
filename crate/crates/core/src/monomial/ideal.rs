use super::Monomial;
use crate::error::{Error, Result};
use crate::graph::Graph;
use std::collections::HashSet;
use std::fmt;

/// A monomial ideal, stored as its minimal generating set in graded order.
///
/// The zero ideal has no generators; the unit ideal is generated by `1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

fn minimalize_in_place(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Vec<Monomial> {
    let mut all: Vec<Monomial> = gens
        .into_iter()
        .collect::<HashSet<_>>()
        .into_iter()
        .collect();
    all.sort();
    let mut kept: Vec<Monomial> = Vec::with_capacity(all.len());
    for m in all {
        debug_assert_eq!(m.nvars(), nvars);
        let d = m.degree();
        // equal-degree divisors are equal and already deduplicated
        if !kept.iter().take_while(|k| k.degree() < d).any(|k| k.divides(&m)) {
            kept.push(m);
        }
    }
    kept
}

impl MonomialIdeal {
    /// Ideal generated by `gens`; non-minimal generators are dropped.
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let gens: Vec<Monomial> = gens.into_iter().collect();
        if let Some(g) = gens.iter().find(|g| g.nvars() != nvars) {
            return Err(Error::AmbientMismatch(nvars, g.nvars()));
        }
        Ok(Self::minimalize(nvars, gens))
    }

    /// Removes every monomial divisible by another one in the set.
    pub fn minimalize(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Self {
        MonomialIdeal {
            nvars,
            gens: minimalize_in_place(nvars, gens),
        }
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: Vec::new(),
        }
    }

    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: vec![Monomial::one(nvars)],
        }
    }

    pub fn principal(m: Monomial) -> Self {
        MonomialIdeal {
            nvars: m.nvars(),
            gens: vec![m],
        }
    }

    /// `I(G) = (x_i x_j : {i, j} in E(G))` in `|V(G)|` variables.
    pub fn edge_ideal(g: &Graph) -> Result<Self> {
        if g.edge_count() == 0 {
            return Err(Error::EdgelessGraph);
        }
        let n = g.vertex_count();
        let mut gens: Vec<Monomial> = g
            .edges()
            .iter()
            .map(|&(u, v)| Monomial::squarefree(n, &[u, v]))
            .collect();
        gens.sort();
        Ok(MonomialIdeal { nvars: n, gens })
    }

    /// `(x_i : i in vars)`.
    pub fn variable_ideal(nvars: usize, vars: &[usize]) -> Result<Self> {
        if let Some(&v) = vars.iter().find(|&&v| v >= nvars) {
            return Err(Error::InvalidVertex {
                vertex: v,
                vertex_count: nvars,
            });
        }
        Ok(Self::minimalize(
            nvars,
            vars.iter().map(|&v| Monomial::variable(nvars, v)),
        ))
    }

    /// Parses a comma-separated generator list such as `x0*x1, x1^2`.
    pub fn parse(text: &str, nvars: usize) -> Result<Self> {
        let gens = text
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| Monomial::parse(s, nvars))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::minimalize(nvars, gens))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Minimal generators in graded order.
    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    /// Errors for the zero and unit ideals.
    pub fn require_proper(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::ZeroIdeal)
        } else if self.is_unit() {
            Err(Error::UnitIdeal)
        } else {
            Ok(())
        }
    }

    fn check_ambient(&self, other: &MonomialIdeal) -> Result<()> {
        if self.nvars == other.nvars {
            Ok(())
        } else {
            Err(Error::AmbientMismatch(self.nvars, other.nvars))
        }
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<Self> {
        self.check_ambient(other)?;
        Ok(Self::minimalize(
            self.nvars,
            self.gens.iter().chain(&other.gens).cloned(),
        ))
    }

    /// `(I, m)`.
    pub fn add_generator(&self, m: &Monomial) -> Result<Self> {
        self.sum(&MonomialIdeal::principal(m.clone()))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<Self> {
        self.check_ambient(other)?;
        let mut prods = HashSet::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                prods.insert(a.mul(b)?);
            }
        }
        Ok(Self::minimalize(self.nvars, prods))
    }

    pub fn power(&self, k: u32) -> Result<Self> {
        let mut acc = MonomialIdeal::unit(self.nvars);
        for _ in 0..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `m · I`.
    pub fn multiply_by(&self, m: &Monomial) -> Result<Self> {
        self.product(&MonomialIdeal::principal(m.clone()))
    }

    /// `(I : m)`; the unit ideal exactly when `m ∈ I`.
    pub fn colon_by_monomial(&self, m: &Monomial) -> Result<Self> {
        if m.nvars() != self.nvars {
            return Err(Error::AmbientMismatch(self.nvars, m.nvars()));
        }
        Ok(Self::minimalize(
            self.nvars,
            self.gens.iter().map(|g| g.colon(m)),
        ))
    }

    pub fn intersection(&self, other: &MonomialIdeal) -> Result<Self> {
        self.check_ambient(other)?;
        let mut lcms = HashSet::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                lcms.insert(a.lcm(b));
            }
        }
        Ok(Self::minimalize(self.nvars, lcms))
    }

    /// Every minimal generator has degree one. False for the zero and unit ideals.
    pub fn is_generated_by_variables(&self) -> bool {
        !self.gens.is_empty() && self.gens.iter().all(|g| g.degree() == 1)
    }

    /// `Some(d)` if every minimal generator has degree `d`.
    pub fn generated_in_single_degree(&self) -> Result<Option<u32>> {
        let first = self.gens.first().ok_or(Error::ZeroIdeal)?.degree();
        Ok(self
            .gens
            .iter()
            .all(|g| g.degree() == first)
            .then_some(first))
    }

    /// The same ideal in a ring with more variables (zero exponents appended).
    pub fn embed(&self, nvars: usize) -> Result<Self> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.embed(nvars))
            .collect::<Result<Vec<_>>>()?;
        Ok(MonomialIdeal { nvars, gens })
    }

    /// lcm of all minimal generators.
    pub fn lcm_of_generators(&self) -> Monomial {
        self.gens
            .iter()
            .fold(Monomial::one(self.nvars), |acc, g| acc.lcm(g))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ideal(s: &str, n: usize) -> MonomialIdeal {
        MonomialIdeal::parse(s, n).unwrap()
    }

    #[test]
    fn edge_ideal_examples() {
        let k2 = MonomialIdeal::edge_ideal(&Graph::complete(2).unwrap()).unwrap();
        assert_eq!(k2, ideal("x0*x1", 2));
        let c4 = MonomialIdeal::edge_ideal(&Graph::cycle(4).unwrap()).unwrap();
        assert_eq!(c4, ideal("x0*x1, x1*x2, x2*x3, x0*x3", 4));
        assert_eq!(c4.len(), 4);
        let p3 = MonomialIdeal::edge_ideal(&Graph::path(3).unwrap()).unwrap();
        assert_eq!(p3.to_string(), "(x0*x1, x1*x2)");
        assert_eq!(
            MonomialIdeal::edge_ideal(&Graph::empty(3).unwrap()),
            Err(Error::EdgelessGraph)
        );
    }

    #[test]
    fn minimalize_examples() {
        assert_eq!(ideal("x0, x0*x1", 2), ideal("x0", 2));
        assert_eq!(ideal("x0^2, x0*x1, x0^2*x1", 2).len(), 2);
        assert!(MonomialIdeal::minimalize(2, []).is_zero());
        assert!(ideal("1, x0", 2).is_unit());
    }

    #[test]
    fn powers() {
        let k2 = ideal("x0*x1", 2);
        assert_eq!(k2.power(2).unwrap(), ideal("x0^2*x1^2", 2));
        assert_eq!(ideal("x0, x1", 2).power(2).unwrap(), ideal("x0^2, x0*x1, x1^2", 2));
        let p3 = ideal("x0*x1, x1*x2", 3);
        assert_eq!(
            p3.power(2).unwrap(),
            ideal("x0^2*x1^2, x0*x1^2*x2, x1^2*x2^2", 3)
        );
        assert!(p3.power(0).unwrap().is_unit());
        assert!(p3.sum(&ideal("x0", 2)).is_err());
    }

    #[test]
    fn colons() {
        let p3 = ideal("x0*x1, x1*x2", 3);
        assert_eq!(p3.colon_by_monomial(&Monomial::parse("x1", 3).unwrap()).unwrap(), ideal("x0, x2", 3));
        let k2 = ideal("x0*x1", 3);
        assert!(k2.colon_by_monomial(&Monomial::parse("x0*x1", 3).unwrap()).unwrap().is_unit());
        assert_eq!(
            k2.colon_by_monomial(&Monomial::parse("x1*x2", 3).unwrap()).unwrap(),
            ideal("x0", 3)
        );
    }

    #[test]
    fn intersections() {
        assert_eq!(ideal("x0", 2).intersection(&ideal("x1", 2)).unwrap(), ideal("x0*x1", 2));
        assert_eq!(
            ideal("x0^2", 2).intersection(&ideal("x0*x1, x1^2", 2)).unwrap(),
            ideal("x0^2*x1", 2)
        );
        let i = ideal("x0*x1, x1^3", 2);
        assert_eq!(i.intersection(&MonomialIdeal::unit(2)).unwrap(), i);
    }

    #[test]
    fn variable_predicates() {
        assert!(ideal("x0, x2", 3).is_generated_by_variables());
        assert!(!ideal("x0*x1", 3).is_generated_by_variables());
        assert!(!MonomialIdeal::unit(3).is_generated_by_variables());
        assert!(!MonomialIdeal::zero(3).is_generated_by_variables());
        assert_eq!(MonomialIdeal::variable_ideal(3, &[0, 2]).unwrap(), ideal("x0, x2", 3));
        assert!(MonomialIdeal::variable_ideal(3, &[3]).is_err());
    }

    #[test]
    fn single_degree() {
        let c4 = MonomialIdeal::edge_ideal(&Graph::cycle(4).unwrap()).unwrap();
        assert_eq!(c4.generated_in_single_degree().unwrap(), Some(2));
        assert_eq!(c4.power(3).unwrap().generated_in_single_degree().unwrap(), Some(6));
        assert_eq!(ideal("x0, x1^2", 2).generated_in_single_degree().unwrap(), None);
        assert_eq!(MonomialIdeal::zero(2).generated_in_single_degree(), Err(Error::ZeroIdeal));
    }

    fn arb_ideal(nvars: usize) -> impl Strategy<Value = MonomialIdeal> {
        proptest::collection::vec(proptest::collection::vec(0u32..=2, nvars), 1..5).prop_map(
            move |gens| {
                MonomialIdeal::minimalize(nvars, gens.into_iter().map(Monomial::from_exponents))
            },
        )
    }

    fn arb_edge_ideal() -> impl Strategy<Value = MonomialIdeal> {
        (3usize..=5).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_filter_map(
                "edgeless",
                move |bits| {
                    let mut g = Graph::empty(n).unwrap();
                    let mut k = 0;
                    for j in 1..n {
                        for i in 0..j {
                            if bits[k] {
                                g.add_edge(i, j).unwrap();
                            }
                            k += 1;
                        }
                    }
                    MonomialIdeal::edge_ideal(&g).ok()
                },
            )
        })
    }

    /// All monomials in `nvars` variables of total degree at most `max_deg`.
    fn monomials_up_to(nvars: usize, max_deg: u32) -> Vec<Monomial> {
        let mut out = vec![Monomial::one(nvars)];
        for i in 0..nvars {
            let mut next = Vec::new();
            for m in &out {
                for e in 0..=max_deg - m.degree() {
                    let mut x = m.exponents().to_vec();
                    x[i] = e;
                    next.push(Monomial::from_exponents(x));
                }
            }
            out = next;
        }
        out
    }

    proptest! {
        #[test]
        fn power_is_additive(i in arb_edge_ideal(), a in 0u32..=2, b in 0u32..=2) {
            let lhs = i.power(a + b).unwrap();
            let rhs = i.power(a).unwrap().product(&i.power(b).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn colon_times_monomial_lies_in_ideal(i in arb_ideal(4), e in proptest::collection::vec(0u32..=2, 4)) {
            let m = Monomial::from_exponents(e);
            let colon = i.colon_by_monomial(&m).unwrap();
            for g in colon.generators() {
                prop_assert!(i.contains(&g.mul(&m).unwrap()));
            }
        }

        #[test]
        fn intersection_matches_membership(i in arb_ideal(4), j in arb_ideal(4)) {
            let both = i.intersection(&j).unwrap();
            for m in monomials_up_to(4, 8) {
                prop_assert_eq!(both.contains(&m), i.contains(&m) && j.contains(&m), "{}", m);
            }
        }

        #[test]
        fn power_colon_generators_recheck(i in arb_edge_ideal(), k in 1u32..=2) {
            let p = i.power(k).unwrap();
            for l in p.generators() {
                let c = p.colon_by_monomial(l).unwrap();
                for g in c.generators() {
                    prop_assert!(p.contains(&g.mul(l).unwrap()));
                }
            }
        }
    }
}
