//! Verifiers that turn statements into pass / fail / skipped reports.

mod algebra;
mod graphs;
mod report;
mod scan;

pub use algebra::is_generator_partition;
pub use graphs::suspension_connector;
pub use report::{Statement, UnknownStatement, Verdict, VerificationReport, Verifier, Witness};
pub use scan::{Conjecture, ScanConfig};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::monomial::{Monomial, MonomialIdeal};
use serde::Serialize;
use std::collections::BTreeMap;

/// Per-graph parameters for [`Verifier::run_graph_statement`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphParams {
    /// Independent set for suspension statements; all of them when absent.
    pub set: Option<Vec<usize>>,
    /// Vertex cover for the key lemma; all minimal covers when absent.
    pub cover: Option<Vec<usize>>,
    /// Power for single-power statements.
    pub k: u32,
    /// Largest power for statements over a range of powers.
    pub k_max: u32,
    /// Starting power for `newconj2`.
    pub c_g: u32,
}

impl Default for GraphParams {
    fn default() -> Self {
        GraphParams {
            set: None,
            cover: None,
            k: 2,
            k_max: 3,
            c_g: 2,
        }
    }
}

impl Verifier {
    /// Every report `statement` produces on `g` under `params`.
    ///
    /// Statements about ideals are instantiated from the edge ideal: the
    /// splitting statements use the partition of generators by divisibility
    /// by the first non-isolated vertex, the colon bound uses each vertex
    /// variable, and the abc bound uses `J = I(G)^k`.
    pub fn run_graph_statement(
        &self,
        statement: Statement,
        g: &Graph,
        params: &GraphParams,
    ) -> Result<Vec<VerificationReport>> {
        let sets = || -> Vec<Vec<usize>> {
            match &params.set {
                Some(s) => vec![s.clone()],
                None => g
                    .independent_sets()
                    .into_iter()
                    .filter(|s| s.len() < g.vertex_count())
                    .collect(),
            }
        };
        let one = |r: Result<VerificationReport>| r.map(|r| vec![r]);
        let ideal_statement = matches!(
            statement,
            Statement::ColonRegBound | Statement::AbcBound | Statement::BettiSplitting | Statement::Doublelinear
        );
        if ideal_statement && g.edge_count() == 0 {
            let instance = serde_json::json!({"graph6": g.to_string(), "n": g.vertex_count()});
            return Ok(vec![self.skipped(statement, instance, "graph has no edges")]);
        }
        match statement {
            Statement::Froberg => one(self.check_froberg(g)),
            Statement::ImBounds => one(self.check_im_bounds(g)),
            Statement::Bht => one(self.check_bht(g, params.k_max)),
            Statement::Hhz => one(self.check_hhz(g, params.k_max)),
            Statement::Banerjee => one(self.check_banerjee(g, params.k_max)),
            Statement::SSuspension => sets()
                .iter()
                .map(|s| self.check_s_suspension_invariance(g, s))
                .collect(),
            Statement::Main1 => sets().iter().map(|s| self.check_main1(g, s, params.k)).collect(),
            Statement::Main2 => sets()
                .iter()
                .map(|s| self.check_main2(g, s, params.k_max))
                .collect(),
            Statement::Keylemma => {
                let covers = match &params.cover {
                    Some(c) => vec![c.clone()],
                    None => g.minimal_vertex_covers(),
                };
                let mut out = Vec::new();
                for u in &covers {
                    for k in 0..=params.k {
                        out.push(self.check_keylemma(g, u, k)?);
                    }
                }
                Ok(out)
            }
            Statement::Blemma => one(self.check_blemma_colon_structure(g, params.k.max(1), None)),
            Statement::ColonRegBound => {
                let i = MonomialIdeal::edge_ideal(g)?;
                let n = g.vertex_count();
                (0..n)
                    .map(|v| self.check_colon_reg_bound(&i, &Monomial::variable(n, v)))
                    .collect()
            }
            Statement::AbcBound => {
                let i = MonomialIdeal::edge_ideal(g)?;
                one(self.check_abc_bound(&i.power(params.k.max(2))?, &i, None))
            }
            Statement::BettiSplitting | Statement::Doublelinear => {
                let (i, j, k) = vertex_partition(g)?;
                match (statement, j, k) {
                    (_, _, None) => Ok(Vec::new()),
                    (Statement::BettiSplitting, j, Some(k)) => one(self.check_betti_splitting(&i, &j, &k)),
                    (_, j, Some(k)) => one(self.check_doublelinear(&i, &j, &k)),
                }
            }
            Statement::ImRegExtension => g
                .one_vertex_extensions()?
                .iter()
                .map(|e| self.check_im_reg_extension(g, e))
                .collect(),
            Statement::Np | Statement::GeneralNp | Statement::Newconj2 | Statement::DeletionProbe => {
                let conjecture = Conjecture::from_statement(statement).expect("conjecture statement");
                let cfg = ScanConfig {
                    k_max: params.k_max,
                    c_g: params.c_g,
                    ..ScanConfig::new(conjecture)
                };
                self.scan_conjecture(std::slice::from_ref(g), &cfg)
            }
        }
    }
}

/// `I(G) = J + K` with `J` the generators divisible by the first
/// non-isolated vertex. `K` is `None` when every edge meets that vertex.
fn vertex_partition(g: &Graph) -> Result<(MonomialIdeal, MonomialIdeal, Option<MonomialIdeal>)> {
    let i = MonomialIdeal::edge_ideal(g)?;
    let v = (0..g.vertex_count())
        .find(|&v| g.degree(v).unwrap_or(0) > 0)
        .ok_or(Error::EdgelessGraph)?;
    let (with_v, rest): (Vec<Monomial>, Vec<Monomial>) =
        i.generators().iter().cloned().partition(|m| m.exponent(v) > 0);
    let j = MonomialIdeal::new(i.nvars(), with_v)?;
    let k = (!rest.is_empty())
        .then(|| MonomialIdeal::new(i.nvars(), rest))
        .transpose()?;
    Ok((i, j, k))
}

/// Verdict counts for one statement.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SummaryRow {
    pub instances: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

pub fn summarize<'a>(reports: impl IntoIterator<Item = &'a VerificationReport>) -> BTreeMap<Statement, SummaryRow> {
    let mut out: BTreeMap<Statement, SummaryRow> = BTreeMap::new();
    for r in reports {
        let row = out.entry(r.statement).or_default();
        row.instances += 1;
        match r.verdict {
            Verdict::Pass => row.pass += 1,
            Verdict::Fail => row.fail += 1,
            Verdict::Skipped => row.skipped += 1,
        }
    }
    out
}
