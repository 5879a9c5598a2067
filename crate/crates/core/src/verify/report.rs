use crate::error::Result;
use crate::monomial::MonomialIdeal;
use crate::resolution::{betti_table_with, BettiTable, BettiTableJson, Caps, EngineConfig, Field};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::fmt;
use std::str::FromStr;

/// The checked statements. String ids are the CLI `--statement` values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Statement {
    /// `reg I(G) = 2` iff the complement of `G` is chordal.
    Froberg,
    /// `im(G) + 1 <= reg I(G) <= m(G) + 1`.
    ImBounds,
    /// `reg I(G)^k >= 2k + im(G) - 1`.
    Bht,
    /// Co-chordal iff linear powers iff linear quotients.
    Hhz,
    /// Gap-free and cricket-free gives `reg I <= 3` and `reg I^k = 2k`.
    Banerjee,
    /// S-suspension preserves `im` and `reg`.
    SSuspension,
    BettiSplitting,
    /// Two linear parts always split.
    Doublelinear,
    /// `reg I <= max{reg(I : m) + deg m, reg(I, m)}`.
    ColonRegBound,
    /// `reg J <= max{A, B, C}` for `J ⊆ I` generated in higher degree.
    AbcBound,
    /// Variable-colon structure of ordered generators of `I(G)^n`.
    Blemma,
    /// `(U I(G)^k : L)` is generated by variables for a vertex cover `U`.
    Keylemma,
    /// `I(G^S)^k = I(G)^k + J I(G^S)^{k-1}` is a Betti splitting.
    Main1,
    /// `I(G^S)^k` has a linear resolution for `k >= 2`.
    Main2,
    ImRegExtension,
    /// Gap-free with `reg I = 3` gives `reg I^k = 2k` for `k >= 2`.
    Np,
    /// Gap-free with `reg I = r` gives `reg I^k = 2k` for `k >= r - 1`.
    GeneralNp,
    /// Invariant extensions inherit `reg I^k = 2k` for `k >= c_G`.
    Newconj2,
    /// Regularities of one-vertex deletions of gap-free graphs with `reg I = 3`.
    DeletionProbe,
}

impl Statement {
    pub const ALL: [Statement; 19] = [
        Statement::Froberg,
        Statement::ImBounds,
        Statement::Bht,
        Statement::Hhz,
        Statement::Banerjee,
        Statement::SSuspension,
        Statement::BettiSplitting,
        Statement::Doublelinear,
        Statement::ColonRegBound,
        Statement::AbcBound,
        Statement::Blemma,
        Statement::Keylemma,
        Statement::Main1,
        Statement::Main2,
        Statement::ImRegExtension,
        Statement::Np,
        Statement::GeneralNp,
        Statement::Newconj2,
        Statement::DeletionProbe,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            Statement::Froberg => "froberg",
            Statement::ImBounds => "im-bounds",
            Statement::Bht => "bht",
            Statement::Hhz => "hhz",
            Statement::Banerjee => "banerjee",
            Statement::SSuspension => "s-suspension",
            Statement::BettiSplitting => "betti-splitting",
            Statement::Doublelinear => "doublelinear",
            Statement::ColonRegBound => "colon-reg-bound",
            Statement::AbcBound => "abc-bound",
            Statement::Blemma => "blemma",
            Statement::Keylemma => "keylemma",
            Statement::Main1 => "main1",
            Statement::Main2 => "main2",
            Statement::ImRegExtension => "im-reg-extension",
            Statement::Np => "np",
            Statement::GeneralNp => "general-np",
            Statement::Newconj2 => "newconj2",
            Statement::DeletionProbe => "deletion-probe",
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown statement id `{0}`")]
pub struct UnknownStatement(pub String);

impl FromStr for Statement {
    type Err = UnknownStatement;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let s = s.trim();
        Statement::ALL
            .into_iter()
            .find(|st| st.id() == s)
            .or(match s {
                "exact" => Some(Statement::ColonRegBound),
                "abc" => Some(Statement::AbcBound),
                "s-cc" | "suspension" => Some(Statement::SSuspension),
                _ => None,
            })
            .ok_or_else(|| UnknownStatement(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

/// Evidence attached to a failing (or recorded) outcome.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// A Betti number identity failing at `(i, j)`, or at a multidegree.
    BettiEntry {
        i: usize,
        j: u32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        multidegree: Option<Vec<u32>>,
        left: u64,
        right: u64,
    },
    /// A violated numeric relation with the quantities it involves.
    Inequality {
        relation: String,
        values: Vec<(String, i64)>,
    },
    /// A colon ideal `(dividend : divisor)` with the offending shape.
    ColonIdeal {
        dividend: String,
        divisor: String,
        colon: String,
    },
    /// A graph on which the statement fails, with its Betti table.
    Graph {
        graph6: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        k: Option<u32>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        table: Option<BettiTableJson>,
    },
    /// Two generator sets that were expected to coincide.
    GeneratorSets { left: String, right: String },
}

/// One checked statement on one instance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub statement: Statement,
    pub instance: Value,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "Value::is_null")]
    pub details: Value,
    pub field: Field,
    pub caps: Caps,
}

impl VerificationReport {
    pub fn is_pass(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn is_fail(&self) -> bool {
        self.verdict == Verdict::Fail
    }

    pub fn is_skipped(&self) -> bool {
        self.verdict == Verdict::Skipped
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }

    /// Graph6 string of the instance, when it has one.
    pub fn instance_graph6(&self) -> Option<&str> {
        self.instance.get("graph6").and_then(Value::as_str)
    }
}

/// Shared settings for every verifier: field, engine caps and route, and
/// whether Betti splittings are also checked multidegree by multidegree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Verifier {
    pub field: Field,
    pub engine: EngineConfig,
    pub multigraded: bool,
}

impl Verifier {
    pub fn new(field: Field) -> Self {
        Verifier {
            field,
            ..Default::default()
        }
    }

    pub fn with_engine(mut self, engine: EngineConfig) -> Self {
        self.engine = engine;
        self
    }

    pub fn with_multigraded(mut self, on: bool) -> Self {
        self.multigraded = on;
        self
    }

    pub fn caps(&self) -> &Caps {
        &self.engine.caps
    }

    pub(crate) fn table(&self, ideal: &MonomialIdeal) -> Result<BettiTable> {
        betti_table_with(ideal, self.field, &self.engine)
    }

    pub(crate) fn reg(&self, ideal: &MonomialIdeal) -> Result<i64> {
        self.table(ideal)?.regularity()
    }

    pub(crate) fn base(&self, statement: Statement, instance: Value) -> VerificationReport {
        VerificationReport {
            statement,
            instance,
            verdict: Verdict::Pass,
            reason: None,
            witness: None,
            details: Value::Null,
            field: self.field,
            caps: self.engine.caps,
        }
    }

    pub(crate) fn pass(&self, statement: Statement, instance: Value, details: Value) -> VerificationReport {
        VerificationReport {
            details,
            ..self.base(statement, instance)
        }
    }

    pub(crate) fn fail(
        &self,
        statement: Statement,
        instance: Value,
        witness: Witness,
        details: Value,
    ) -> VerificationReport {
        VerificationReport {
            verdict: Verdict::Fail,
            witness: Some(witness),
            details,
            ..self.base(statement, instance)
        }
    }

    pub(crate) fn skipped(
        &self,
        statement: Statement,
        instance: Value,
        reason: impl Into<String>,
    ) -> VerificationReport {
        VerificationReport {
            verdict: Verdict::Skipped,
            reason: Some(reason.into()),
            ..self.base(statement, instance)
        }
    }

    /// Runs `check`, turning cap overruns into skipped reports.
    pub(crate) fn guarded(
        &self,
        statement: Statement,
        instance: Value,
        check: impl FnOnce(&Value) -> Result<VerificationReport>,
    ) -> Result<VerificationReport> {
        match check(&instance) {
            Err(e) if e.is_cap_overrun() => {
                Ok(self.skipped(statement, instance, format!("cap overrun: {e}")))
            }
            other => other,
        }
    }
}

pub(crate) fn ideal_str(i: &MonomialIdeal) -> String {
    i.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn statement_ids_roundtrip() {
        for st in Statement::ALL {
            assert_eq!(st.id().parse::<Statement>().unwrap(), st);
            assert_eq!(serde_json::to_string(&st).unwrap(), format!("\"{}\"", st.id()));
        }
        assert_eq!("exact".parse::<Statement>().unwrap(), Statement::ColonRegBound);
        assert!("nope".parse::<Statement>().is_err());
    }

    #[test]
    fn fail_reports_carry_witnesses() {
        let v = Verifier::new(Field::Rationals);
        let r = v.fail(
            Statement::Froberg,
            serde_json::json!({"graph6": "A_"}),
            Witness::Inequality {
                relation: "x".into(),
                values: vec![],
            },
            Value::Null,
        );
        assert!(r.is_fail() && r.witness.is_some());
        let line = r.to_json_line();
        let back: VerificationReport = serde_json::from_str(&line).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.instance_graph6(), Some("A_"));
    }
}
