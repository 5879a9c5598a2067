//! Search for a linear-quotient order of the minimal generators.

use super::betti::Caps;
use crate::error::Result;
use crate::monomial::{Monomial, MonomialIdeal};
use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use std::time::{Duration, Instant};

/// Outcome of the linear-quotients search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum LinearQuotients {
    /// An order `m_1, ..., m_k` with every `(m_1..m_l) : m_{l+1}` generated by variables.
    Order { order: Vec<Monomial> },
    /// The search was exhaustive and found no order.
    NoOrder,
    /// A cap or the time budget stopped the search.
    Unknown { reason: String },
}

impl LinearQuotients {
    pub fn order(&self) -> Option<&[Monomial]> {
        match self {
            LinearQuotients::Order { order } => Some(order),
            _ => None,
        }
    }
}

/// Whether `(earlier) : m` is generated by variables, for nonempty `earlier`.
pub fn colon_is_variable_generated<'a>(earlier: impl IntoIterator<Item = &'a Monomial>, m: &Monomial) -> bool {
    let quotients: Vec<Monomial> = earlier.into_iter().map(|c| c.colon(m)).collect();
    let vars: Vec<usize> = quotients.iter().filter_map(Monomial::as_variable).collect();
    !quotients.is_empty()
        && quotients
            .iter()
            .all(|q| vars.iter().any(|&v| q.exponent(v) > 0))
}

/// Checks a proposed order directly.
pub fn is_linear_quotient_order(order: &[Monomial]) -> bool {
    (1..order.len()).all(|l| colon_is_variable_generated(&order[..l], &order[l]))
}

struct Search<'a> {
    gens: &'a [Monomial],
    failed: HashSet<u64>,
    deadline: Instant,
    timed_out: bool,
}

impl Search<'_> {
    fn extend(&mut self, order: &mut Vec<usize>, mask: u64) -> bool {
        if order.len() == self.gens.len() {
            return true;
        }
        if self.failed.contains(&mask) {
            return false;
        }
        if Instant::now() > self.deadline {
            self.timed_out = true;
            return false;
        }
        let candidates: Vec<usize> = (0..self.gens.len())
            .filter(|&k| mask >> k & 1 == 0)
            .filter(|&k| {
                order.is_empty()
                    || colon_is_variable_generated(order.iter().map(|&c| &self.gens[c]), &self.gens[k])
            })
            .collect();
        for k in candidates {
            order.push(k);
            if self.extend(order, mask | 1 << k) {
                return true;
            }
            order.pop();
            if self.timed_out {
                return false;
            }
        }
        self.failed.insert(mask);
        false
    }
}

/// Depth-first search over generator orders, trying candidates in graded
/// order and memoising chosen sets that cannot be completed.
pub fn has_linear_quotients(ideal: &MonomialIdeal, caps: &Caps) -> Result<LinearQuotients> {
    ideal.require_proper()?;
    let gens = ideal.generators();
    if gens.len() > caps.quotient_generators.min(64) {
        return Ok(LinearQuotients::Unknown {
            reason: format!(
                "{} generators exceed the cap of {}",
                gens.len(),
                caps.quotient_generators.min(64)
            ),
        });
    }
    let mut search = Search {
        gens,
        failed: HashSet::new(),
        deadline: Instant::now() + Duration::from_millis(caps.time_budget_ms),
        timed_out: false,
    };
    let mut order = Vec::new();
    if search.extend(&mut order, 0) {
        Ok(LinearQuotients::Order {
            order: order.into_iter().map(|k| gens[k].clone()).collect(),
        })
    } else if search.timed_out {
        Ok(LinearQuotients::Unknown {
            reason: format!("time budget of {} ms exhausted", caps.time_budget_ms),
        })
    } else {
        Ok(LinearQuotients::NoOrder)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn edge(g: Graph) -> MonomialIdeal {
        MonomialIdeal::edge_ideal(&g).unwrap()
    }

    #[test]
    fn examples() {
        let caps = Caps::default();
        let p3 = edge(Graph::path(3).unwrap());
        let r = has_linear_quotients(&p3, &caps).unwrap();
        assert_eq!(r.order().unwrap().len(), 2);
        assert!(is_linear_quotient_order(r.order().unwrap()));
        assert_eq!(has_linear_quotients(&edge(Graph::anticycle(4).unwrap()), &caps).unwrap(), LinearQuotients::NoOrder);
        let principal = MonomialIdeal::parse("x0*x1^2", 2).unwrap();
        assert_eq!(has_linear_quotients(&principal, &caps).unwrap().order().unwrap().len(), 1);
        assert!(has_linear_quotients(&MonomialIdeal::unit(2), &caps).is_err());
    }

    #[test]
    fn direct_colon_checks() {
        let p3 = edge(Graph::path(3).unwrap());
        let g = p3.generators();
        // (x0x1) : x1x2 = (x0)
        assert!(colon_is_variable_generated(&g[..1], &g[1]));
        let two = edge(Graph::anticycle(4).unwrap());
        let g = two.generators();
        assert!(!colon_is_variable_generated(&g[..1], &g[1]));
        assert!(!colon_is_variable_generated(&g[1..], &g[0]));
    }

    #[test]
    fn agrees_with_ideal_colons() {
        let c4 = edge(Graph::cycle(4).unwrap()).power(2).unwrap();
        let g = c4.generators();
        for l in 1..g.len() {
            let direct = MonomialIdeal::minimalize(4, g[..l].iter().cloned())
                .colon_by_monomial(&g[l])
                .unwrap()
                .is_generated_by_variables();
            assert_eq!(colon_is_variable_generated(&g[..l], &g[l]), direct);
        }
    }

    #[test]
    fn generator_cap_reports_unknown() {
        let caps = Caps {
            quotient_generators: 3,
            ..Default::default()
        };
        let c5 = edge(Graph::cycle(5).unwrap());
        assert!(matches!(
            has_linear_quotients(&c5, &caps).unwrap(),
            LinearQuotients::Unknown { .. }
        ));
    }
}
