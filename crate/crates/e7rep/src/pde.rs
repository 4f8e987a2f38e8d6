//! The invariant constant-coefficient operator dual to the quartic
//! invariant and the annihilation theorem at desk scale: the operator kills
//! every product z1^{m1} s^{m2} x1^{m3} t^{eps} of the other generators.

use thiserror::Error;

use crate::poly::{ConstDiffOp, Polynomial};
use crate::rep::ZetaBasis;
use crate::singular::{golden_eta, golden_sigma, golden_theta, golden_zeta1};

/// Hard cap on the degree of the polynomial the operator is applied to.
pub const DEFAULT_DEGREE_BUDGET: u32 = 10;

#[derive(Debug, Error)]
pub enum PdeError {
    #[error("input degree {degree} exceeds the compute budget {budget}")]
    BudgetExceeded { degree: u32, budget: u32 },
}

/// Monomial-wise substitution x_i^e -> d_i^e, coefficients preserved.
pub fn dual_operator(f: &Polynomial) -> ConstDiffOp {
    ConstDiffOp::from_polynomial(f)
}

/// The dual operator together with the generator polynomials it is tested
/// against; built once from the quadratic basis.
pub struct PdeContext {
    pub operator: ConstDiffOp,
    pub eta: Polynomial,
    pub zeta1: Polynomial,
    pub sigma: Polynomial,
    pub theta: Polynomial,
    pub budget: u32,
}

impl PdeContext {
    pub fn new(basis: &ZetaBasis) -> Self {
        let eta = golden_eta(basis);
        PdeContext {
            operator: dual_operator(&eta),
            eta,
            zeta1: golden_zeta1(basis),
            sigma: golden_sigma(basis),
            theta: golden_theta(basis),
            budget: DEFAULT_DEGREE_BUDGET,
        }
    }

    pub fn with_budget(mut self, budget: u32) -> Self {
        self.budget = budget;
        self
    }
}

/// Outcome of one annihilation check.
#[derive(Debug, Clone)]
pub struct AnnihilationCheck {
    pub exponents: (u32, u32, u32, u32),
    pub input_degree: u32,
    pub image: Polynomial,
}

impl AnnihilationCheck {
    pub fn passed(&self) -> bool {
        self.image.is_zero()
    }
}

/// Apply the dual operator to z1^{m1} s^{m2} x1^{m3} t^{eps}, exactly.
/// Refuses inputs whose degree exceeds the configured budget.
pub fn check_annihilation(
    ctx: &PdeContext,
    m1: u32,
    m2: u32,
    m3: u32,
    eps: u32,
) -> Result<AnnihilationCheck, PdeError> {
    assert!(eps <= 1, "eps is a 0/1 flag");
    let degree = 2 * m1 + 4 * m2 + m3 + 3 * eps;
    if degree > ctx.budget {
        return Err(PdeError::BudgetExceeded {
            degree,
            budget: ctx.budget,
        });
    }
    let mut f = ctx.zeta1.pow(m1).mul(&ctx.sigma.pow(m2));
    f = f.mul(&Polynomial::var(1).pow(m3));
    if eps == 1 {
        f = f.mul(&ctx.theta);
    }
    Ok(AnnihilationCheck {
        exponents: (m1, m2, m3, eps),
        input_degree: degree,
        image: ctx.operator.apply(&f),
    })
}

/// All exponent tuples with 2 m1 + 4 m2 + m3 + 3 eps <= bound.
pub fn annihilation_sweep_tuples(bound: u32) -> Vec<(u32, u32, u32, u32)> {
    let mut out = Vec::new();
    for m1 in 0..=bound / 2 {
        for m2 in 0..=(bound - 2 * m1) / 4 {
            for m3 in 0..=(bound - 2 * m1 - 4 * m2) {
                for eps in 0..=1u32 {
                    if 2 * m1 + 4 * m2 + m3 + 3 * eps <= bound {
                        out.push((m1, m2, m3, eps));
                    }
                }
            }
        }
    }
    out
}

/// One line of the exponent-bookkeeping audit: for the image of
/// z1^{m1} s^{m2} x1^{m3} t^{m4} under the dual operator, the candidate
/// target monomials must satisfy n3 + n4 = m3 + m4 and
/// n3 + 3 n4 + 4 n5 = m3 + 3 m4 - 4.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditLine {
    pub m3: u32,
    pub m4: u32,
    pub solutions: Vec<(u32, u32, u32)>,
}

/// Enumerate the candidate exponents for each (m3, m4) in the given ranges.
/// The image must vanish whenever there are no solutions; in particular
/// m4 <= 1 always gives none (the reduction forces m4 = 2 + n4 + 2 n5).
pub fn weight_shift_audit(max_m3: u32, max_m4: u32) -> Vec<AuditLine> {
    let mut out = Vec::new();
    for m3 in 0..=max_m3 {
        for m4 in 0..=max_m4 {
            let mut solutions = Vec::new();
            let target = m3 as i64 + 3 * m4 as i64 - 4;
            for n4 in 0..=(m3 + m4) {
                let n3 = m3 + m4 - n4;
                let rest = target - n3 as i64 - 3 * n4 as i64;
                if rest >= 0 && rest % 4 == 0 {
                    solutions.push((n3, n4, (rest / 4) as u32));
                }
            }
            out.push(AuditLine { m3, m4, solutions });
        }
    }
    out
}
