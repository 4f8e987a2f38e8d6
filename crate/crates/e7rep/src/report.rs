//! Machine-readable verification reports and the log of readings applied
//! when the bundled reference data was prepared.

use serde::{Deserialize, Serialize};

use crate::rep::CheckReport;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Failure {
    pub check: String,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Reading {
    pub id: String,
    pub detail: String,
}

/// Report record emitted by the CLI; failures empty iff the run succeeded.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub checks_run: u64,
    pub failures: Vec<Failure>,
    pub wall_time_secs: f64,
    pub erratum_log: Vec<Reading>,
}

impl VerificationReport {
    pub fn new(suite: &str) -> Self {
        VerificationReport {
            suite: suite.to_string(),
            checks_run: 0,
            failures: Vec::new(),
            wall_time_secs: 0.0,
            erratum_log: erratum_log(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn absorb(&mut self, check_id: &str, sub: CheckReport) {
        self.checks_run += sub.checks_run;
        for detail in sub.failures {
            self.failures.push(Failure {
                check: check_id.to_string(),
                detail,
            });
        }
    }

    pub fn record(&mut self, check_id: &str, ok: bool, detail: impl FnOnce() -> String) {
        self.checks_run += 1;
        if !ok {
            self.failures.push(Failure {
                check: check_id.to_string(),
                detail: detail(),
            });
        }
    }
}

/// Normalizations applied to the bundled reference data, each forced by an
/// internal consistency rule of the construction; consumers of golden
/// comparisons should consult this list.
pub fn erratum_log() -> Vec<Reading> {
    let entries: [(&str, &str); 7] = [
        (
            "raising-op-partner-indices",
            "five raising-operator terms are fixed by weight bookkeeping: root 0001110 pairs x18 with d27 (not d28); root 0101110 x18 with d29 (not d30); root 0011110 x16 with d27 (not d28); root 1011110 x12 with d27 (not d28); root 0111110 x16 with d29 (not d30)",
        ),
        (
            "zeta-chain-steps",
            "the chain step producing zeta_4 lowers zeta_3 (a variant reading lowering zeta_2 gives 0); the step producing zeta_41 uses node 3 (node 1 gives a different vector); the step at position 23 carries a duplicated label 38 in the source tables and is indexed 23",
        ),
        (
            "w-action-node-6",
            "in the lowering-action table for node 6 the image zeta_16 arises from source zeta_12, not zeta_14; forced by weights and verified by exact decomposition",
        ),
        (
            "cubic-singular-composition",
            "the bundled 18-term composition of the cubic singular vector is the exact decomposition of the unique nullspace solution at degree 3, weight lambda_7; a widely quoted 28-term variant fails annihilation at node 6 and is not used",
        ),
        (
            "invariant-pair-signs",
            "the pair zeta_4 * zeta_130 enters the quartic invariant with a negative sign (the bundled sign vector is the unique one, up to global scale, annihilated by all 14 simple raising and lowering operators)",
        ),
        (
            "invariant-specialization",
            "at x3..x54 = 0 the quartic invariant equals 3(x1x56 - x2x55)^2; a quoted variant with coefficient -5 on x2^2 x55^2 is inconsistent with invariance and is checked only as a deliberately failing acceptance line",
        ),
        (
            "dimension-formula-factor",
            "the closed-form dimension product carries the factor (n1+4)/4 relative to a commonly quoted variant; validated against the Weyl dimension formula on the full 4x4x4 grid",
        ),
    ];
    entries
        .iter()
        .map(|(id, detail)| Reading {
            id: id.to_string(),
            detail: detail.to_string(),
        })
        .collect()
}
