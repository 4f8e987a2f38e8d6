//! Dimension arithmetic: the Weyl dimension formula over the E7 positive
//! roots, the closed-form product formula for dim V(n1 l1 + n2 l6 + n3 l7),
//! and the generating-function / decomposition identities.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::rootsys::{positive_roots, RootSystem, WeightVec};

#[derive(Debug, Error)]
pub enum DimError {
    #[error("weight {0:?} is not dominant")]
    NotDominant([i64; 7]),
}

/// dim V(w) by the Weyl dimension formula: the product over positive roots
/// of (w + rho, a) / (rho, a). Since (lambda_i, alpha_j) = delta_ij both
/// pairings reduce to integer sums over the root coefficients.
pub fn weyl_dim(w: &WeightVec) -> Result<BigInt, DimError> {
    if !w.is_dominant() {
        return Err(DimError::NotDominant(w.fund));
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for root in positive_roots(RootSystem::E7) {
        let height: i64 = root.iter().map(|&k| k as i64).sum();
        let shifted: i64 = (0..7).map(|j| root[j] as i64 * (w.fund[j] + 1)).sum();
        num *= BigInt::from(shifted);
        den *= BigInt::from(height);
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    Ok(q)
}

/// Closed-form product formula for dim V(n1 l1 + n2 l6 + n3 l7), exact.
/// Numerator leads with (n1+4)(n2+4); denominator is the fixed constant
/// 2^3 3^3 4^5 5^5 6^5 7^5 8^4 9^4 10^3 11^3 12^2 13^2 14*15*16*17.
pub fn dim_formula_117(n1: u64, n2: u64, n3: u64) -> BigInt {
    let (n1, n2, n3) = (n1 as i64, n2 as i64, n3 as i64);
    let mut num = BigInt::one();
    let mut push = |v: i64| num *= BigInt::from(v);
    push(n1 + 4);
    push(n2 + 4);
    push(n2 + n3 + 5);
    for i in 1..=7 {
        push(n1 + i);
        push(n2 + i);
    }
    for r in 2..=8 {
        push(n2 + n3 + r);
    }
    for s in 5..=11 {
        push(n1 + n2 + s);
    }
    for p in 6..=12 {
        push(n1 + n2 + n3 + p);
    }
    for t in 10..=16 {
        push(n1 + 2 * n2 + n3 + t);
    }
    push(2 * n2 + n3 + 9);
    push(n1 + n2 + 8);
    push(n1 + n2 + n3 + 9);
    push(n1 + 2 * n2 + n3 + 13);
    push(2 * n1 + 2 * n2 + n3 + 17);
    push(n3 + 1);

    let mut den = BigInt::one();
    for (base, exp) in [
        (2u64, 3u32),
        (3, 3),
        (4, 5),
        (5, 5),
        (6, 5),
        (7, 5),
        (8, 4),
        (9, 4),
        (10, 3),
        (11, 3),
        (12, 2),
        (13, 2),
        (14, 1),
        (15, 1),
        (16, 1),
        (17, 1),
    ] {
        den *= BigInt::from(base).pow(exp);
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero(), "product formula must divide exactly");
    q
}

/// Weight n1 l1 + n2 l6 + n3 l7.
pub fn module_weight(n1: u64, n2: u64, n3: u64) -> WeightVec {
    WeightVec::from_fund([n1 as i64, 0, 0, 0, 0, n2 as i64, n3 as i64])
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut out = BigInt::one();
    for i in 0..k.min(n - k) {
        out = out * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    out
}

/// Exact integer coefficient list, index = power of q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesCoeffs(pub Vec<BigInt>);

impl SeriesCoeffs {
    /// The expected shape: 1 + q + q^2 + q^3 and nothing else.
    pub fn is_unit_quartet(&self) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(k, c)| if k <= 3 { c.is_one() } else { c.is_zero() })
    }
}

/// Coefficients of (1-q)^55 * sum over n1,n2,n3,n4 of
/// dim V(n1 l1 + n2 l6 + (n3+n4) l7) q^(2n1+4n2+n3+3n4), truncated at q^N.
pub fn identity_42_check(max_degree: usize) -> SeriesCoeffs {
    let n = max_degree;
    let mut series = vec![BigInt::zero(); n + 1];
    for n1 in 0..=(n / 2) as u64 {
        for n2 in 0..=((n - 2 * n1 as usize) / 4) as u64 {
            let base = 2 * n1 as usize + 4 * n2 as usize;
            for n3 in 0..=(n - base) as u64 {
                for n4 in 0..=((n - base - n3 as usize) / 3) as u64 {
                    let d = base + n3 as usize + 3 * n4 as usize;
                    series[d] += weyl_dim(&module_weight(n1, n2, n3 + n4))
                        .expect("module weights are dominant");
                }
            }
        }
    }
    let mut out = vec![BigInt::zero(); n + 1];
    for (k, coeff) in out.iter_mut().enumerate() {
        for j in 0..=k.min(55) {
            let b = binomial(55, j as u64);
            let term = &b * &series[k - j];
            if j % 2 == 0 {
                *coeff += term;
            } else {
                *coeff -= term;
            }
        }
    }
    SeriesCoeffs(out)
}

/// Outcome of the degree-d decomposition count.
#[derive(Debug, Clone)]
pub struct DecompositionCheck {
    pub degree: u32,
    pub summed: BigInt,
    pub expected: BigInt,
}

impl DecompositionCheck {
    pub fn passed(&self) -> bool {
        self.summed == self.expected
    }
}

/// Sum of dim V(n1 l1 + n2 l6 + (n3+n4) l7) over all generator exponents
/// with 2n1 + 4n2 + n3 + 3n4 + 4n5 = d, compared with the dimension
/// C(d+55, 55) of the degree-d homogeneous polynomials in 56 variables.
pub fn decomposition_check(degree: u32) -> DecompositionCheck {
    let d = degree as u64;
    let mut summed = BigInt::zero();
    for n1 in 0..=d / 2 {
        for n2 in 0..=(d - 2 * n1) / 4 {
            for n3 in 0..=(d - 2 * n1 - 4 * n2) {
                for n4 in 0..=(d - 2 * n1 - 4 * n2 - n3) / 3 {
                    let rest = d - 2 * n1 - 4 * n2 - n3 - 3 * n4;
                    if !rest.is_multiple_of(4) {
                        continue;
                    }
                    summed += weyl_dim(&module_weight(n1, n2, n3 + n4)).expect("dominant");
                }
            }
        }
    }
    DecompositionCheck {
        degree,
        summed,
        expected: binomial(d + 55, 55),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::fundamental_weight;

    #[test]
    fn weyl_dim_small_weights() {
        assert_eq!(weyl_dim(&WeightVec::zero()).unwrap(), BigInt::from(1));
        assert_eq!(weyl_dim(&fundamental_weight(7)).unwrap(), BigInt::from(56));
        assert_eq!(weyl_dim(&fundamental_weight(1)).unwrap(), BigInt::from(133));
        assert_eq!(
            weyl_dim(&fundamental_weight(6)).unwrap(),
            BigInt::from(1539)
        );
        assert_eq!(
            weyl_dim(&module_weight(0, 0, 2)).unwrap(),
            BigInt::from(1463)
        );
    }

    #[test]
    fn weyl_dim_rejects_non_dominant() {
        let w = WeightVec::from_fund([-1, 0, 0, 0, 0, 0, 0]);
        assert!(weyl_dim(&w).is_err());
    }

    #[test]
    fn formula_basics() {
        assert_eq!(dim_formula_117(0, 0, 0), BigInt::from(1));
        assert_eq!(dim_formula_117(0, 0, 1), BigInt::from(56));
        assert_eq!(dim_formula_117(1, 0, 0), BigInt::from(133));
        assert_eq!(dim_formula_117(0, 1, 0), BigInt::from(1539));
    }

    #[test]
    fn formula_agrees_with_weyl_on_grid() {
        for n1 in 0..4 {
            for n2 in 0..4 {
                for n3 in 0..4 {
                    assert_eq!(
                        dim_formula_117(n1, n2, n3),
                        weyl_dim(&module_weight(n1, n2, n3)).unwrap(),
                        "grid point ({n1}, {n2}, {n3})"
                    );
                }
            }
        }
    }

    #[test]
    fn identity_coefficients() {
        assert_eq!(identity_42_check(0).0, vec![BigInt::from(1)]);
        let c3 = identity_42_check(3);
        assert_eq!(c3.0, [1, 1, 1, 1].map(BigInt::from).to_vec());
        assert!(c3.is_unit_quartet());
        assert!(identity_42_check(10).is_unit_quartet());
        assert!(identity_42_check(12).is_unit_quartet());
    }

    #[test]
    fn decomposition_small_degrees() {
        for d in 0..=4 {
            let check = decomposition_check(d);
            assert!(check.passed(), "degree {d}: {check:?}");
        }
        assert_eq!(decomposition_check(2).expected, BigInt::from(1596));
        assert_eq!(decomposition_check(3).expected, BigInt::from(30856));
    }

    #[test]
    fn weyl_dim_is_positive_on_random_dominant_weights() {
        use num_traits::Signed;
        for seed in 0..20u64 {
            let fund: [i64; 7] = std::array::from_fn(|i| ((seed * 7 + i as u64 * 3) % 4) as i64);
            let d = weyl_dim(&WeightVec::from_fund(fund)).unwrap();
            assert!(d.is_positive());
        }
    }
}
