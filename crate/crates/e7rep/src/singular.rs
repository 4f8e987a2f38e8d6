//! Singular-vector computation: weight-graded monomial bases, exact
//! nullspace solving against the seven simple raising operators, and the
//! golden constructions of the four generators (the quadratic zeta_1, the
//! cubic of weight lambda_7, the quartic of weight lambda_6, and the
//! quartic invariant of weight 0).

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::exactalg::{exact_nullspace, int, rat, Rational, SparseMatrix};
use crate::poly::{Monomial, Polynomial, NVARS};
use crate::rep::{simple_raising, weight_of_monomial, RepTable, ZetaBasis};
use crate::rootsys::WeightVec;

/// Composition of the cubic singular vector over x * zeta products:
/// (numerator, denominator, variable index, zeta index).
pub(crate) const THETA_COMPOSITION: [(i16, i16, u16, u16); 18] = [
    (1, 2, 1, 64),
    (-1, 1, 2, 59),
    (1, 2, 3, 53),
    (-1, 2, 4, 48),
    (1, 2, 5, 44),
    (-1, 2, 6, 40),
    (-1, 2, 7, 37),
    (1, 2, 8, 33),
    (1, 2, 9, 30),
    (1, 2, 10, 28),
    (-1, 2, 11, 25),
    (1, 2, 12, 23),
    (-1, 2, 13, 21),
    (1, 2, 15, 17),
    (-1, 2, 16, 16),
    (1, 2, 18, 14),
    (1, 2, 20, 11),
    (1, 2, 23, 8),
];

/// Composition of the quartic of weight lambda_6 over zeta * zeta products.
pub(crate) const SIGMA_COMPOSITION: [(i8, u16, u16); 5] =
    [(1, 1, 19), (-1, 2, 12), (1, 3, 10), (-1, 4, 7), (1, 5, 6)];

/// Signs of the pair products zeta_i * zeta_{134-i} (i = 1..63) in the
/// quartic invariant; each pair enters with coefficient 4 * sign.
pub(crate) const ETA_PAIR_SIGNS: [i8; 63] = [
    1, 1, 1, -1, 1, 1, -1, -1, 1, 1, 1, 1, -1, -1, 1, -1, 1, 1, 1, -1, 1, 1, -1, -1, -1, 1, 1, 1,
    1, -1, -1, -1, 1, 1, 1, 1, -1, -1, -1, 1, 1, 1, 1, 1, -1, -1, -1, -1, -1, 1, 1, 1, 1, 1, 1, -1,
    -1, 1, -1, -1, -1, -1, 1,
];

/// Zero-weight band of the quartic invariant: coefficient on zeta_a * zeta_b.
pub(crate) const ETA_BAND_TERMS: [(i64, u16, u16); 28] = [
    (4, 70, 70),
    (-8, 68, 70),
    (-12, 69, 70),
    (16, 67, 70),
    (-12, 66, 70),
    (8, 65, 70),
    (-4, 64, 70),
    (7, 68, 68),
    (16, 68, 69),
    (-24, 67, 68),
    (18, 66, 68),
    (-12, 65, 68),
    (6, 64, 68),
    (12, 69, 69),
    (-32, 67, 69),
    (24, 66, 69),
    (-16, 65, 69),
    (8, 64, 69),
    (24, 67, 67),
    (-36, 66, 67),
    (24, 65, 67),
    (-12, 64, 67),
    (15, 66, 66),
    (-20, 65, 66),
    (10, 64, 66),
    (8, 65, 65),
    (-8, 64, 65),
    (3, 64, 64),
];

/// All degree-d monomials of the given weight, in canonical column order
/// (descending graded-lex). Exhaustive and ordered; empty when none exist.
#[derive(Debug, Clone)]
pub struct WeightSpaceBasis {
    pub degree: u32,
    pub weight: WeightVec,
    pub monomials: Vec<Monomial>,
}

fn enumerate_monomials(degree: u32, mut visit: impl FnMut(&[(u16, u32)])) {
    fn rec(
        var: u16,
        remaining: u32,
        stack: &mut Vec<(u16, u32)>,
        visit: &mut impl FnMut(&[(u16, u32)]),
    ) {
        if remaining == 0 {
            visit(stack);
            return;
        }
        if var > NVARS {
            return;
        }
        if var == NVARS {
            stack.push((var, remaining));
            visit(stack);
            stack.pop();
            return;
        }
        rec(var + 1, remaining, stack, visit);
        for e in 1..=remaining {
            stack.push((var, e));
            rec(var + 1, remaining - e, stack, visit);
            stack.pop();
        }
    }
    let mut stack = Vec::new();
    rec(1, degree, &mut stack, &mut visit);
}

pub fn weight_space_basis(degree: u32, weight: &WeightVec) -> WeightSpaceBasis {
    let mut monomials = Vec::new();
    enumerate_monomials(degree, |pairs| {
        let m = Monomial::from_pairs(pairs);
        if weight_of_monomial(&m) == *weight {
            monomials.push(m);
        }
    });
    monomials.sort();
    monomials.reverse();
    WeightSpaceBasis {
        degree,
        weight: weight.clone(),
        monomials,
    }
}

/// Degree-d monomials grouped by dominant weight.
pub fn dominant_blocks(degree: u32) -> BTreeMap<[i64; 7], Vec<Monomial>> {
    let mut blocks: BTreeMap<[i64; 7], Vec<Monomial>> = BTreeMap::new();
    enumerate_monomials(degree, |pairs| {
        let m = Monomial::from_pairs(pairs);
        let w = weight_of_monomial(&m);
        if w.is_dominant() {
            blocks.entry(w.fund).or_default().push(m);
        }
    });
    for monos in blocks.values_mut() {
        monos.sort();
        monos.reverse();
    }
    blocks
}

/// Basis of the space of singular vectors at the given degree and weight
/// (annihilated by all seven simple raising operators), each normalized so
/// its leading coefficient is 1.
#[derive(Debug, Clone)]
pub struct SingularSpace {
    pub basis: Vec<Polynomial>,
}

pub fn singular_space(degree: u32, weight: &WeightVec) -> SingularSpace {
    let cols = weight_space_basis(degree, weight);
    SingularSpace {
        basis: solve_block(&cols.monomials),
    }
}

/// Nullspace of the stacked simple-raising restrictions on one weight block.
pub fn solve_block(monomials: &[Monomial]) -> Vec<Polynomial> {
    if monomials.is_empty() {
        return Vec::new();
    }
    let ops: Vec<_> = (1..=7).map(simple_raising).collect();
    let mut rows: BTreeMap<(usize, Monomial), Vec<(usize, Rational)>> = BTreeMap::new();
    for (ci, m) in monomials.iter().enumerate() {
        for (r, op) in ops.iter().enumerate() {
            for (coeff, img) in op.apply_monomial(m) {
                rows.entry((r, img)).or_default().push((ci, coeff));
            }
        }
    }
    let mut matrix = SparseMatrix::new(rows.len(), monomials.len());
    for (ri, entries) in rows.into_values().enumerate() {
        for (ci, coeff) in entries {
            matrix.add_to(ri, ci, coeff);
        }
    }
    exact_nullspace(&matrix)
        .into_iter()
        .map(|v| {
            Polynomial::from_terms(
                v.into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(ci, c)| (monomials[ci].clone(), c)),
            )
        })
        .collect()
}

/// Number of generator monomials z1^{n1} s^{n2} x1^{n3} t^{n4} e^{n5}
/// (degrees 2, 4, 1, 3, 4; weights l1, l6, l7, l7, 0) with total degree
/// `degree` and total weight `weight` — the expected singular multiplicity.
pub fn expected_singular_count(degree: u32, weight: &WeightVec) -> u64 {
    let f = &weight.fund;
    if f.iter().any(|&n| n < 0) || f[1] != 0 || f[2] != 0 || f[3] != 0 || f[4] != 0 {
        return 0;
    }
    let (n1, n2, n34) = (f[0] as u32, f[5] as u32, f[6] as u32);
    let used = 2 * n1 + 4 * n2 + n34;
    if used > degree {
        return 0;
    }
    // remaining degree 2*n4 + 4*n5 with n4 <= n3 + n4 = n34
    let rest = degree - used;
    if !rest.is_multiple_of(2) {
        return 0;
    }
    (0..=n34)
        .filter(|n4| {
            let two_n4 = 2 * n4;
            two_n4 <= rest && (rest - two_n4).is_multiple_of(4)
        })
        .count() as u64
}

/// The quadratic singular vector of weight lambda_1 (six terms).
pub fn golden_zeta1(basis: &ZetaBasis) -> Polynomial {
    basis.zeta(1).clone()
}

/// The cubic singular vector of weight lambda_7, expanded in the x
/// variables; scaled so the coefficient of x1^2 x56 is 1/2.
pub fn golden_theta(basis: &ZetaBasis) -> Polynomial {
    let mut out = Polynomial::zero();
    for &(num, den, xi, zi) in &THETA_COMPOSITION {
        let prod = Polynomial::var(xi).mul(basis.zeta(zi as usize));
        out.add_scaled(&prod, &rat(num as i64, den as i64));
    }
    out
}

/// The quartic singular vector of weight lambda_6.
pub fn golden_sigma(basis: &ZetaBasis) -> Polynomial {
    let mut out = Polynomial::zero();
    for &(sign, a, b) in &SIGMA_COMPOSITION {
        let prod = basis.zeta(a as usize).mul(basis.zeta(b as usize));
        out.add_scaled(&prod, &int(sign as i64));
    }
    out
}

/// The quartic invariant of weight 0, integer-coefficient construction
/// scale (pair coefficients are +-4).
pub fn golden_eta(basis: &ZetaBasis) -> Polynomial {
    let mut out = Polynomial::zero();
    for (i, &sign) in ETA_PAIR_SIGNS.iter().enumerate() {
        let prod = basis.zeta(i + 1).mul(basis.zeta(133 - i));
        out.add_scaled(&prod, &int(4 * sign as i64));
    }
    for &(c, a, b) in &ETA_BAND_TERMS {
        let prod = basis.zeta(a as usize).mul(basis.zeta(b as usize));
        out.add_scaled(&prod, &int(c));
    }
    out
}

/// True when every raising operator of the table annihilates f.
pub fn annihilated_by_all_raisings(table: &RepTable, f: &Polynomial) -> bool {
    table
        .positive()
        .iter()
        .all(|root| table.raising(root).apply(f).is_zero())
}

/// True when every lowering operator of the table annihilates f.
pub fn annihilated_by_all_lowerings(table: &RepTable, f: &Polynomial) -> bool {
    table
        .positive()
        .iter()
        .all(|root| table.lowering(root).apply(f).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::{build_zeta_basis, generate_full_rep};
    use crate::rootsys::{fundamental_weight, WeightVec};

    fn l(i: usize) -> WeightVec {
        fundamental_weight(i)
    }

    #[test]
    fn weight_space_examples() {
        let ws = weight_space_basis(1, &l(7));
        assert_eq!(ws.monomials, vec![Monomial::var(1)]);

        let ws = weight_space_basis(2, &l(1));
        let want: Vec<Monomial> = [(1, 17), (2, 14), (3, 12), (4, 10), (5, 9), (6, 7)]
            .iter()
            .map(|&(a, b)| Monomial::from_pairs(&[(a, 1), (b, 1)]))
            .collect();
        assert_eq!(ws.monomials, want);

        let ws = weight_space_basis(0, &WeightVec::zero());
        assert_eq!(ws.monomials, vec![Monomial::one()]);
    }

    #[test]
    fn degenerate_queries_are_empty_not_errors() {
        assert!(weight_space_basis(1, &l(1)).monomials.is_empty());
        assert!(singular_space(1, &l(1)).basis.is_empty());
        // nonempty weight space with trivial kernel
        assert_eq!(
            weight_space_basis(2, &WeightVec::zero()).monomials.len(),
            28
        );
        assert!(singular_space(2, &WeightVec::zero()).basis.is_empty());
    }

    #[test]
    fn quadratic_singular_vector_is_recovered() {
        let basis = build_zeta_basis().unwrap();
        let space = singular_space(2, &l(1));
        assert_eq!(space.basis.len(), 1);
        assert_eq!(space.basis[0], golden_zeta1(&basis).normalize_leading());
    }

    #[test]
    fn square_of_highest_weight_vector() {
        let w = WeightVec::from_fund([0, 0, 0, 0, 0, 0, 2]);
        let space = singular_space(2, &w);
        assert_eq!(space.basis.len(), 1);
        assert_eq!(space.basis[0], Polynomial::var(1).mul(&Polynomial::var(1)));
    }

    #[test]
    fn golden_constructions_are_singular() {
        let basis = build_zeta_basis().unwrap();
        let theta = golden_theta(&basis);
        let sigma = golden_sigma(&basis);
        let eta = golden_eta(&basis);
        for r in 1..=7 {
            let op = simple_raising(r);
            assert!(op.apply(&theta).is_zero(), "theta, node {r}");
            assert!(op.apply(&sigma).is_zero(), "sigma, node {r}");
            assert!(op.apply(&eta).is_zero(), "eta raising, node {r}");
            assert!(
                op.involute().apply(&eta).is_zero(),
                "eta lowering, node {r}"
            );
        }
        // weights: every monomial of sigma has weight lambda_6, theta lambda_7
        for (m, _) in sigma.iter() {
            assert_eq!(weight_of_monomial(m), l(6));
        }
        for (m, _) in theta.iter() {
            assert_eq!(weight_of_monomial(m), l(7));
        }
        for (m, _) in eta.iter() {
            assert!(weight_of_monomial(m).is_zero());
        }
    }

    #[test]
    fn theta_specialization() {
        let basis = build_zeta_basis().unwrap();
        let theta = golden_theta(&basis);
        let spec = theta.specialize_zero(3, 54);
        let want = Polynomial::parse_text("+(1/2)*x1^2*x56 -(1/2)*x1*x2*x55").unwrap();
        assert_eq!(spec, want);
    }

    #[test]
    fn eta_specialization_is_a_perfect_square_multiple() {
        let basis = build_zeta_basis().unwrap();
        let eta = golden_eta(&basis);
        let spec = eta.specialize_zero(3, 54);
        let want =
            Polynomial::parse_text("+(3)*x1^2*x56^2 -(6)*x1*x2*x55*x56 +(3)*x2^2*x55^2").unwrap();
        assert_eq!(spec, want);
    }

    #[test]
    fn cubic_singular_space_matches_golden_theta() {
        let basis = build_zeta_basis().unwrap();
        let space = singular_space(3, &l(7));
        assert_eq!(space.basis.len(), 1);
        assert_eq!(space.basis[0], golden_theta(&basis).normalize_leading());
    }

    #[test]
    fn full_annihilation_of_the_generators() {
        let table = generate_full_rep().unwrap();
        let basis = build_zeta_basis().unwrap();
        for f in [
            golden_zeta1(&basis),
            golden_theta(&basis),
            golden_sigma(&basis),
            golden_eta(&basis),
        ] {
            assert!(annihilated_by_all_raisings(&table, &f));
        }
        assert!(annihilated_by_all_lowerings(&table, &golden_eta(&basis)));
    }

    #[test]
    fn products_of_singular_vectors_are_singular() {
        let basis = build_zeta_basis().unwrap();
        let prod = golden_zeta1(&basis)
            .mul(&Polynomial::var(1))
            .mul(&golden_theta(&basis));
        for r in 1..=7 {
            assert!(simple_raising(r).apply(&prod).is_zero(), "node {r}");
        }
    }

    #[test]
    fn expected_counts_from_generator_monomials() {
        assert_eq!(expected_singular_count(2, &l(1)), 1);
        assert_eq!(expected_singular_count(3, &l(7)), 1);
        assert_eq!(expected_singular_count(4, &l(6)), 1);
        assert_eq!(expected_singular_count(4, &WeightVec::zero()), 1);
        assert_eq!(expected_singular_count(3, &l(2)), 0);
        // degree 4, weight 2*lambda_7: only x1 * theta
        assert_eq!(
            expected_singular_count(4, &WeightVec::from_fund([0, 0, 0, 0, 0, 0, 2])),
            1
        );
        // degree 7, weight 3*lambda_7: x1^3|x1*theta-type count: n34=3,
        // rest 4: (n4,n5) in {(0,1),(2,0)} -> 2
        assert_eq!(
            expected_singular_count(7, &WeightVec::from_fund([0, 0, 0, 0, 0, 0, 3])),
            2
        );
    }
}
