//! Conjecture scans over graph families.

use super::graphs::graph_instance;
use super::report::{Statement, VerificationReport, Verifier, Witness};
use crate::error::Result;
use crate::graph::{canonical_graph6, is_gap_free, Graph};
use crate::monomial::MonomialIdeal;
use crate::resolution::Field;
use rayon::prelude::*;
use serde_json::{json, Value};
use std::collections::BTreeSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Conjecture {
    /// Gap-free with `reg I = 3`: `reg I^k = 2k` for `2 <= k <= k_max`.
    Np,
    /// Gap-free with `reg I = r`: `reg I^k = 2k` for `max(r - 1, 1) <= k <= k_max`.
    GeneralNp,
    /// Invariant extensions of a gap-free graph keep `reg I^k = 2k` for
    /// `c_G <= k <= k_max`.
    Newconj2,
    /// Records the regularities of one-vertex deletions; never asserts.
    DeletionProbe,
}

impl Conjecture {
    pub fn statement(&self) -> Statement {
        match self {
            Conjecture::Np => Statement::Np,
            Conjecture::GeneralNp => Statement::GeneralNp,
            Conjecture::Newconj2 => Statement::Newconj2,
            Conjecture::DeletionProbe => Statement::DeletionProbe,
        }
    }

    pub fn from_statement(st: Statement) -> Option<Conjecture> {
        match st {
            Statement::Np => Some(Conjecture::Np),
            Statement::GeneralNp => Some(Conjecture::GeneralNp),
            Statement::Newconj2 => Some(Conjecture::Newconj2),
            Statement::DeletionProbe => Some(Conjecture::DeletionProbe),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanConfig {
    pub conjecture: Conjecture,
    pub k_max: u32,
    /// Only graphs with this `reg I(G)`; `Np` and the probe force 3.
    pub reg: Option<i64>,
    /// Starting power for `Newconj2`.
    pub c_g: u32,
    /// Recompute the checked powers over GF(2) and flag differences.
    pub cross_field: bool,
}

impl ScanConfig {
    pub fn new(conjecture: Conjecture) -> Self {
        ScanConfig {
            conjecture,
            k_max: 3,
            reg: None,
            c_g: 2,
            cross_field: false,
        }
    }

    fn reg_filter(&self) -> Option<i64> {
        match self.conjecture {
            Conjecture::Np | Conjecture::DeletionProbe => Some(3),
            _ => self.reg,
        }
    }
}

impl Verifier {
    /// Runs a conjecture over every gap-free graph with edges in `family`
    /// whose regularity matches the filter. Reports are sorted by graph6.
    pub fn scan_conjecture(&self, family: &[Graph], config: &ScanConfig) -> Result<Vec<VerificationReport>> {
        let parts = family
            .par_iter()
            .map(|g| self.scan_one(g, config))
            .collect::<Result<Vec<_>>>()?;
        let mut out: Vec<VerificationReport> = parts.into_iter().flatten().collect();
        out.sort_by(|a, b| a.instance_graph6().cmp(&b.instance_graph6()));
        Ok(out)
    }

    fn scan_one(&self, g: &Graph, config: &ScanConfig) -> Result<Option<VerificationReport>> {
        if g.edge_count() == 0 || !is_gap_free(g)? {
            return Ok(None);
        }
        let st = config.conjecture.statement();
        let instance = graph_instance(g);
        let reg1 = match self.edge_reg(g, 1) {
            Ok(r) => r,
            Err(e) if e.is_cap_overrun() => {
                return Ok(Some(self.skipped(st, instance, format!("cap overrun: {e}"))))
            }
            Err(e) => return Err(e),
        };
        if config.reg_filter().is_some_and(|r| r != reg1) {
            return Ok(None);
        }
        self.guarded(st, instance, |inst| {
            let mut r = match config.conjecture {
                Conjecture::Np => self.powers_report(st, inst, g, 2, config.k_max, reg1)?,
                Conjecture::GeneralNp => {
                    self.powers_report(st, inst, g, (reg1 - 1).max(1) as u32, config.k_max, reg1)?
                }
                Conjecture::Newconj2 => self.newconj2_report(inst, g, config, reg1)?,
                Conjecture::DeletionProbe => self.deletion_probe(inst, g)?,
            };
            if config.cross_field && self.field != Field::Prime(2) && !r.is_skipped() {
                let lo = match config.conjecture {
                    Conjecture::Newconj2 => config.c_g.max(1),
                    Conjecture::GeneralNp => (reg1 - 1).max(1) as u32,
                    _ => 1,
                };
                let mut differs = Vec::new();
                for k in lo..=config.k_max.max(lo) {
                    let ideal = MonomialIdeal::edge_ideal(g)?.power(k)?;
                    if !self.field_discrepancies(&ideal, Field::Prime(2))?.is_empty() {
                        differs.push(k);
                    }
                }
                if let Value::Object(m) = &mut r.details {
                    m.insert("gf2_discrepancy_powers".into(), json!(differs));
                }
            }
            Ok(r)
        })
        .map(Some)
    }

    fn powers_report(
        &self,
        st: Statement,
        inst: &Value,
        g: &Graph,
        lo: u32,
        hi: u32,
        reg1: i64,
    ) -> Result<VerificationReport> {
        if lo > hi {
            return Ok(self.skipped(st, inst.clone(), format!("empty power range {lo}..={hi}")));
        }
        let mut regs = Vec::new();
        for k in lo..=hi {
            let reg = if k == 1 { reg1 } else { self.edge_reg(g, k)? };
            regs.push(json!({"k": k, "reg": reg}));
            if reg != 2 * k as i64 {
                let w = self.graph_table_witness(g, k)?;
                return Ok(self.fail(st, inst.clone(), w, json!({"reg": reg1, "powers": regs})));
            }
        }
        Ok(self.pass(st, inst.clone(), json!({"reg": reg1, "powers": regs})))
    }

    fn newconj2_report(&self, inst: &Value, g: &Graph, config: &ScanConfig, reg1: i64) -> Result<VerificationReport> {
        let st = Statement::Newconj2;
        let lo = config.c_g.max(1);
        if lo > config.k_max {
            return Ok(self.skipped(st, inst.clone(), format!("empty power range {lo}..={}", config.k_max)));
        }
        for k in lo..=config.k_max {
            let reg = if k == 1 { reg1 } else { self.edge_reg(g, k)? };
            if reg != 2 * k as i64 {
                return Ok(self.skipped(
                    st,
                    inst.clone(),
                    format!("premise unmet: reg I(G)^{k} = {reg}"),
                ));
            }
        }
        let mut seen = BTreeSet::new();
        let mut classes = Vec::new();
        for ext in self.enumerate_im_reg_extensions(g)? {
            if seen.insert(canonical_graph6(&ext)) {
                classes.push(ext);
            }
        }
        for ext in &classes {
            for k in lo..=config.k_max {
                if self.edge_reg(ext, k)? != 2 * k as i64 {
                    let w = self.graph_table_witness(ext, k)?;
                    let details = json!({"reg": reg1, "extension_classes": classes.len()});
                    return Ok(self.fail(st, inst.clone(), w, details));
                }
            }
        }
        Ok(self.pass(
            st,
            inst.clone(),
            json!({
                "reg": reg1,
                "c_g": lo,
                "extension_classes": classes.len(),
                "extensions": seen.into_iter().collect::<Vec<_>>(),
            }),
        ))
    }

    fn deletion_probe(&self, inst: &Value, g: &Graph) -> Result<VerificationReport> {
        let n = g.vertex_count();
        let mut regs = Vec::new();
        let mut keeps = Vec::new();
        for v in 0..n {
            let rest: Vec<usize> = (0..n).filter(|&u| u != v).collect();
            let h = g.induced_subgraph(&rest)?;
            let reg = if h.edge_count() == 0 { None } else { Some(self.edge_reg(&h, 1)?) };
            if reg == Some(3) {
                keeps.push(v);
            }
            regs.push(json!({"vertex": v, "graph6": h.to_string(), "reg": reg}));
        }
        let anticycle = crate::graph::find_induced_anticycle(g).map(|(len, vs)| json!({"length": len, "vertices": vs}));
        let mut r = self.skipped(Statement::DeletionProbe, inst.clone(), "probe; recorded, not asserted");
        r.details = json!({
            "deletions": regs,
            "vertices_keeping_reg_3": keeps,
            "some_deletion_keeps_reg_3": !keeps.is_empty(),
            "induced_anticycle": anticycle,
        });
        if keeps.is_empty() {
            r.witness = Some(Witness::Graph {
                graph6: g.to_string(),
                k: Some(1),
                table: None,
            });
        }
        Ok(r)
    }
}
