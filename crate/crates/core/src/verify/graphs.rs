//! Verifiers for statements about edge ideals of graphs.

use super::report::{ideal_str, Statement, VerificationReport, Verifier, Witness};
use crate::error::{Error, Result};
use crate::graph::{
    canonical_graph6, has_induced_cricket, induced_matching_number, is_chordal, is_gap_free,
    matching_number, Graph,
};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::resolution::{has_linear_quotients, is_linear_quotient_order, LinearQuotients};
use serde_json::{json, Value};

pub(crate) fn graph_instance(g: &Graph) -> Value {
    json!({"graph6": g.to_string(), "n": g.vertex_count()})
}

fn with(mut v: Value, key: &str, x: Value) -> Value {
    if let Value::Object(m) = &mut v {
        m.insert(key.to_string(), x);
    }
    v
}

fn ineq(relation: &str, values: &[(&str, i64)]) -> Witness {
    Witness::Inequality {
        relation: relation.to_string(),
        values: values.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
    }
}

/// `J = (z x_i : i ∉ S)` in `n + 1` variables with `z = x_n`.
pub fn suspension_connector(g: &Graph, s: &[usize]) -> Result<MonomialIdeal> {
    let n = g.vertex_count();
    let gens = (0..n)
        .filter(|v| !s.contains(v))
        .map(|v| Monomial::squarefree(n + 1, &[v, n]));
    let j = MonomialIdeal::minimalize(n + 1, gens);
    j.require_proper()?;
    Ok(j)
}

impl Verifier {
    pub(crate) fn graph_table_witness(&self, g: &Graph, k: u32) -> Result<Witness> {
        let t = self.table(&MonomialIdeal::edge_ideal(g)?.power(k)?)?;
        Ok(Witness::Graph {
            graph6: g.to_string(),
            k: Some(k),
            table: Some(t.without_multigraded().to_json()),
        })
    }

    /// `reg I(G)^k` for `k >= 1`.
    pub fn edge_reg(&self, g: &Graph, k: u32) -> Result<i64> {
        self.reg(&MonomialIdeal::edge_ideal(g)?.power(k)?)
    }

    /// `reg I(G) = 2` exactly when the complement of `G` is chordal.
    pub fn check_froberg(&self, g: &Graph) -> Result<VerificationReport> {
        let st = Statement::Froberg;
        let instance = graph_instance(g);
        if g.edge_count() == 0 {
            return Ok(self.skipped(st, instance, "graph has no edges"));
        }
        self.guarded(st, instance, |inst| {
            let reg = self.edge_reg(g, 1)?;
            let co_chordal = is_chordal(&g.complement());
            let details = json!({"reg": reg, "co_chordal": co_chordal});
            if (reg == 2) != co_chordal {
                let w = ineq(
                    "reg I(G) = 2 iff complement chordal",
                    &[("reg", reg), ("co_chordal", co_chordal as i64)],
                );
                return Ok(self.fail(st, inst.clone(), w, details));
            }
            Ok(self.pass(st, inst.clone(), details))
        })
    }

    /// `im(G) + 1 <= reg I(G) <= m(G) + 1`.
    pub fn check_im_bounds(&self, g: &Graph) -> Result<VerificationReport> {
        let st = Statement::ImBounds;
        let instance = graph_instance(g);
        if g.edge_count() == 0 {
            return Ok(self.skipped(st, instance, "graph has no edges"));
        }
        self.guarded(st, instance, |inst| {
            let reg = self.edge_reg(g, 1)?;
            let im = induced_matching_number(g)? as i64;
            let m = matching_number(g) as i64;
            let details = json!({"reg": reg, "im": im, "m": m});
            if !(im + 1 <= reg && reg <= m + 1) {
                let w = ineq("im + 1 <= reg <= m + 1", &[("im", im), ("reg", reg), ("m", m)]);
                return Ok(self.fail(st, inst.clone(), w, details));
            }
            Ok(self.pass(st, inst.clone(), details))
        })
    }

    /// `reg I(G)^k >= 2k + im(G) - 1` for `1 <= k <= k_max`.
    pub fn check_bht(&self, g: &Graph, k_max: u32) -> Result<VerificationReport> {
        let st = Statement::Bht;
        let instance = with(graph_instance(g), "k_max", json!(k_max));
        if g.edge_count() == 0 {
            return Ok(self.skipped(st, instance, "graph has no edges"));
        }
        self.guarded(st, instance, |inst| {
            let im = induced_matching_number(g)? as i64;
            let mut regs = Vec::new();
            for k in 1..=k_max {
                let reg = self.edge_reg(g, k)?;
                regs.push(reg);
                let bound = 2 * k as i64 + im - 1;
                if reg < bound {
                    let w = ineq(
                        "reg I(G)^k >= 2k + im(G) - 1",
                        &[("k", k as i64), ("reg", reg), ("im", im), ("bound", bound)],
                    );
                    return Ok(self.fail(st, inst.clone(), w, json!({"im": im, "regs": regs})));
                }
            }
            Ok(self.pass(st, inst.clone(), json!({"im": im, "regs": regs})))
        })
    }

    /// Co-chordal iff `I(G)` linear iff every power linear iff linear
    /// quotients. Co-chordal graphs must give `reg I^k = 2k` for every
    /// `k <= k_max` and a valid linear-quotient order. Other graphs must
    /// give `reg I > 2` and no order. An inconclusive search is skipped.
    pub fn check_hhz(&self, g: &Graph, k_max: u32) -> Result<VerificationReport> {
        let st = Statement::Hhz;
        let instance = with(graph_instance(g), "k_max", json!(k_max));
        if g.edge_count() == 0 {
            return Ok(self.skipped(st, instance, "graph has no edges"));
        }
        self.guarded(st, instance, |inst| {
            let ideal = MonomialIdeal::edge_ideal(g)?;
            let co_chordal = is_chordal(&g.complement());
            let quotients = has_linear_quotients(&ideal, self.caps())?;
            if let LinearQuotients::Unknown { reason } = &quotients {
                return Ok(self.skipped(st, inst.clone(), format!("linear quotients: {reason}")));
            }
            let mut regs = Vec::new();
            let upto = if co_chordal { k_max } else { 1 };
            for k in 1..=upto.max(1) {
                regs.push(self.edge_reg(g, k)?);
            }
            let details = json!({
                "co_chordal": co_chordal,
                "regs": regs,
                "linear_quotients": quotients,
            });
            if let Some(order) = quotients.order() {
                if !is_linear_quotient_order(order) {
                    let w = ineq("returned order has linear quotients", &[]);
                    return Ok(self.fail(st, inst.clone(), w, details));
                }
            }
            if co_chordal {
                for (idx, &reg) in regs.iter().enumerate() {
                    let k = idx as u32 + 1;
                    if reg != 2 * k as i64 {
                        let w = self.graph_table_witness(g, k)?;
                        return Ok(self.fail(st, inst.clone(), w, details));
                    }
                }
                if quotients.order().is_none() {
                    let w = ineq("co-chordal graph has linear quotients", &[]);
                    return Ok(self.fail(st, inst.clone(), w, details));
                }
            } else {
                if regs[0] == 2 {
                    let w = self.graph_table_witness(g, 1)?;
                    return Ok(self.fail(st, inst.clone(), w, details));
                }
                if quotients.order().is_some() {
                    let w = ineq("non-co-chordal graph has no linear quotients", &[]);
                    return Ok(self.fail(st, inst.clone(), w, details));
                }
            }
            Ok(self.pass(st, inst.clone(), details))
        })
    }

    /// Gap-free and cricket-free: `reg I(G) <= 3` and `reg I(G)^k = 2k`
    /// for `2 <= k <= k_max`.
    pub fn check_banerjee(&self, g: &Graph, k_max: u32) -> Result<VerificationReport> {
        let st = Statement::Banerjee;
        let instance = with(graph_instance(g), "k_max", json!(k_max));
        if g.edge_count() == 0 {
            return Ok(self.skipped(st, instance, "graph has no edges"));
        }
        if !is_gap_free(g)? {
            return Ok(self.skipped(st, instance, "graph has a gap"));
        }
        if has_induced_cricket(g) {
            return Ok(self.skipped(st, instance, "graph has an induced cricket"));
        }
        self.guarded(st, instance, |inst| {
            let reg1 = self.edge_reg(g, 1)?;
            let mut regs = vec![reg1];
            if reg1 > 3 {
                let w = self.graph_table_witness(g, 1)?;
                return Ok(self.fail(st, inst.clone(), w, json!({"regs": regs})));
            }
            for k in 2..=k_max {
                let reg = self.edge_reg(g, k)?;
                regs.push(reg);
                if reg != 2 * k as i64 {
                    let w = self.graph_table_witness(g, k)?;
                    return Ok(self.fail(st, inst.clone(), w, json!({"regs": regs})));
                }
            }
            Ok(self.pass(st, inst.clone(), json!({"regs": regs})))
        })
    }

    /// `im(G^S) = im(G)` and `reg I(G^S) = reg I(G)`.
    pub fn check_s_suspension_invariance(&self, g: &Graph, s: &[usize]) -> Result<VerificationReport> {
        let st = Statement::SSuspension;
        let instance = with(graph_instance(g), "s", json!(s));
        if g.edge_count() == 0 {
            return Ok(self.skipped(st, instance, "graph has no edges"));
        }
        let gs = match g.s_suspension(s) {
            Ok(gs) => gs,
            Err(e @ (Error::NotIndependent(_) | Error::IsolatedSuspension)) => {
                return Ok(self.skipped(st, instance, e.to_string()))
            }
            Err(e) => return Err(e),
        };
        self.guarded(st, instance, |inst| {
            let (im, im_s) = (induced_matching_number(g)? as i64, induced_matching_number(&gs)? as i64);
            let (reg, reg_s) = (self.edge_reg(g, 1)?, self.edge_reg(&gs, 1)?);
            let details = json!({
                "suspension": gs.to_string(),
                "im": im, "im_s": im_s, "reg": reg, "reg_s": reg_s,
            });
            if im != im_s || reg != reg_s {
                let w = ineq(
                    "im(G^S) = im(G) and reg(G^S) = reg(G)",
                    &[("im", im), ("im_s", im_s), ("reg", reg), ("reg_s", reg_s)],
                );
                return Ok(self.fail(st, inst.clone(), w, details));
            }
            Ok(self.pass(st, inst.clone(), details))
        })
    }

    /// Gap-free `g`, independent `s ≠ V(g)`, and `I(G)^j` linear for
    /// `2 <= j <= k`. Returns the suspension, or the skipped report.
    fn suspension_hypotheses(
        &self,
        st: Statement,
        g: &Graph,
        s: &[usize],
        k: u32,
        instance: &Value,
    ) -> Result<std::result::Result<Graph, VerificationReport>> {
        let skip = |reason: String| Ok(Err(self.skipped(st, instance.clone(), reason)));
        if g.edge_count() == 0 {
            return skip("graph has no edges".into());
        }
        if !is_gap_free(g)? {
            return skip("graph has a gap".into());
        }
        let gs = match g.s_suspension(s) {
            Ok(gs) => gs,
            Err(e @ (Error::NotIndependent(_) | Error::IsolatedSuspension)) => return skip(e.to_string()),
            Err(e) => return Err(e),
        };
        let base = MonomialIdeal::edge_ideal(g)?;
        for j in 2..=k {
            match self.table(&base.power(j)?) {
                Ok(t) if t.is_linear(2 * j) => {}
                Ok(_) => return skip(format!("I(G)^{j} has no linear resolution")),
                Err(e) if e.is_cap_overrun() => return skip(format!("cap overrun: {e}")),
                Err(e) => return Err(e),
            }
        }
        Ok(Ok(gs))
    }

    /// `I(G^S)^k = I(G)^k + J I(G^S)^{k-1}` is a Betti splitting, where
    /// `J = (z x_i : i ∉ S)` and `z` is the suspension vertex. Needs `G`
    /// gap-free and `I(G)^j` linear for `2 <= j <= k`; skipped otherwise.
    pub fn check_main1(&self, g: &Graph, s: &[usize], k: u32) -> Result<VerificationReport> {
        let st = Statement::Main1;
        let instance = with(with(graph_instance(g), "s", json!(s)), "k", json!(k));
        let gs = match self.suspension_hypotheses(st, g, s, k, &instance)? {
            Ok(gs) => gs,
            Err(r) => return Ok(r),
        };
        if k == 0 {
            return Ok(self.skipped(st, instance, "k must be positive"));
        }
        let n1 = g.vertex_count() + 1;
        let big = MonomialIdeal::edge_ideal(&gs)?;
        let i = big.power(k)?;
        let left = MonomialIdeal::edge_ideal(g)?.embed(n1)?.power(k)?;
        let right = suspension_connector(g, s)?.product(&big.power(k - 1)?)?;
        let mut r = self.splitting_report(st, instance, &i, &left, &right)?;
        if let Value::Object(m) = &mut r.details {
            m.insert("suspension".into(), json!(gs.to_string()));
        }
        Ok(r)
    }

    /// `I(G^S)^k` has a linear resolution for `2 <= k <= k_max`, and
    /// `I(G)^k ∩ J I(G^S)^{k-1} = z I(G)^k`.
    pub fn check_main2(&self, g: &Graph, s: &[usize], k_max: u32) -> Result<VerificationReport> {
        let st = Statement::Main2;
        let instance = with(with(graph_instance(g), "s", json!(s)), "k_max", json!(k_max));
        let gs = match self.suspension_hypotheses(st, g, s, k_max, &instance)? {
            Ok(gs) => gs,
            Err(r) => return Ok(r),
        };
        if k_max < 2 {
            return Ok(self.skipped(st, instance, "k_max must be at least 2"));
        }
        self.guarded(st, instance, |inst| {
            let n = g.vertex_count();
            let big = MonomialIdeal::edge_ideal(&gs)?;
            let base = MonomialIdeal::edge_ideal(g)?.embed(n + 1)?;
            let j = suspension_connector(g, s)?;
            let z = Monomial::variable(n + 1, n);
            let mut regs = Vec::new();
            for k in 2..=k_max {
                let pk = big.power(k)?;
                let t = self.table(&pk)?;
                regs.push(t.regularity()?);
                let details = json!({"suspension": gs.to_string(), "regs": regs});
                if !t.is_linear(2 * k) {
                    let w = Witness::Graph {
                        graph6: gs.to_string(),
                        k: Some(k),
                        table: Some(t.without_multigraded().to_json()),
                    };
                    return Ok(self.fail(st, inst.clone(), w, details));
                }
                let lhs = base.power(k)?.intersection(&j.product(&big.power(k - 1)?)?)?;
                let rhs = base.power(k)?.multiply_by(&z)?;
                if lhs != rhs {
                    let w = Witness::GeneratorSets {
                        left: ideal_str(&lhs),
                        right: ideal_str(&rhs),
                    };
                    return Ok(self.fail(st, inst.clone(), w, details));
                }
            }
            Ok(self.pass(st, inst.clone(), json!({"suspension": gs.to_string(), "regs": regs})))
        })
    }

    /// Whether `ext` restricts to `g` on `0..n` and has the same `im` and `reg`.
    pub fn is_im_reg_invariant_extension(&self, g: &Graph, ext: &Graph) -> Result<bool> {
        let n = g.vertex_count();
        let not_ext = || Error::NotExtension {
            base: n,
            extended: ext.vertex_count(),
        };
        if ext.vertex_count() != n + 1 {
            return Err(not_ext());
        }
        let base: Vec<usize> = (0..n).collect();
        if ext.induced_subgraph(&base)? != *g {
            return Err(not_ext());
        }
        Ok(induced_matching_number(ext)? == induced_matching_number(g)?
            && self.edge_reg(ext, 1)? == self.edge_reg(g, 1)?)
    }

    /// All one-vertex extensions (new vertex not isolated) preserving `im`
    /// and `reg`, in neighbourhood-bitmask order.
    pub fn enumerate_im_reg_extensions(&self, g: &Graph) -> Result<Vec<Graph>> {
        let im = induced_matching_number(g)?;
        let reg = self.edge_reg(g, 1)?;
        let mut out = Vec::new();
        for ext in g.one_vertex_extensions()? {
            if induced_matching_number(&ext)? == im && self.edge_reg(&ext, 1)? == reg {
                out.push(ext);
            }
        }
        Ok(out)
    }

    /// Report form of [`Verifier::is_im_reg_invariant_extension`]: passes
    /// when the extension preserves both invariants and is skipped otherwise.
    pub fn check_im_reg_extension(&self, g: &Graph, ext: &Graph) -> Result<VerificationReport> {
        let st = Statement::ImRegExtension;
        let instance = with(graph_instance(g), "extension", json!(ext.to_string()));
        if g.edge_count() == 0 {
            return Ok(self.skipped(st, instance, "graph has no edges"));
        }
        self.guarded(st, instance, |inst| {
            let ok = self.is_im_reg_invariant_extension(g, ext)?;
            let (im, im_e) = (induced_matching_number(g)? as i64, induced_matching_number(ext)? as i64);
            let (reg, reg_e) = (self.edge_reg(g, 1)?, self.edge_reg(ext, 1)?);
            let details = json!({
                "im": im, "im_ext": im_e, "reg": reg, "reg_ext": reg_e,
                "canonical": canonical_graph6(ext),
            });
            if ok {
                Ok(self.pass(st, inst.clone(), details))
            } else {
                let mut r = self.skipped(st, inst.clone(), "extension changes im or reg");
                r.details = details;
                Ok(r)
            }
        })
    }
}
