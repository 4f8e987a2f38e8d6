//! E8/E7 root lattices: the symmetric bilinear form, root enumeration, the
//! sign cocycle fixing the Lie bracket, and the E7 fundamental weights.
//!
//! Simple roots are numbered 1..8 with diagram edges 1-3, 3-4, 2-4, 4-5,
//! 5-6, 6-7, 7-8; node 2 is the branch. E7 is the slice with k8 = 0.

use num_traits::Zero;

use crate::exactalg::{int, rat, Rational};

/// Coefficient vector over the simple roots alpha_1..alpha_8.
pub type RootVec = [i32; 8];

/// Gram matrix of the simple roots, (alpha_i, alpha_j).
pub const GRAM: [[i32; 8]; 8] = [
    [2, 0, -1, 0, 0, 0, 0, 0],
    [0, 2, 0, -1, 0, 0, 0, 0],
    [-1, 0, 2, -1, 0, 0, 0, 0],
    [0, -1, -1, 2, -1, 0, 0, 0],
    [0, 0, 0, -1, 2, -1, 0, 0],
    [0, 0, 0, 0, -1, 2, -1, 0],
    [0, 0, 0, 0, 0, -1, 2, -1],
    [0, 0, 0, 0, 0, 0, -1, 2],
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootSystem {
    E7,
    E8,
}

impl RootSystem {
    fn rank(self) -> usize {
        match self {
            RootSystem::E7 => 7,
            RootSystem::E8 => 8,
        }
    }
}

pub fn simple_root(i: usize) -> RootVec {
    assert!((1..=8).contains(&i));
    let mut v = [0; 8];
    v[i - 1] = 1;
    v
}

/// Bilinear form a^T G b.
pub fn inner(a: &RootVec, b: &RootVec) -> i32 {
    let mut s = 0;
    for i in 0..8 {
        if a[i] == 0 {
            continue;
        }
        for j in 0..8 {
            s += a[i] * GRAM[i][j] * b[j];
        }
    }
    s
}

pub fn norm(a: &RootVec) -> i32 {
    inner(a, a)
}

pub fn add(a: &RootVec, b: &RootVec) -> RootVec {
    std::array::from_fn(|i| a[i] + b[i])
}

pub fn neg(a: &RootVec) -> RootVec {
    std::array::from_fn(|i| -a[i])
}

pub fn is_zero(a: &RootVec) -> bool {
    a.iter().all(|&k| k == 0)
}

/// Positivity convention: last nonzero coefficient positive.
pub fn is_positive(a: &RootVec) -> bool {
    match a.iter().rev().find(|&&k| k != 0) {
        Some(&k) => k > 0,
        None => false,
    }
}

/// Sign cocycle on the root lattice:
/// (-1)^(sum_i k_i l_i + sum_{i>j} k_i l_j (alpha_i, alpha_j)).
pub fn cocycle_f(a: &RootVec, b: &RootVec) -> i32 {
    let mut s = 0;
    for i in 0..8 {
        s += a[i] * b[i];
        for j in 0..i {
            s += a[i] * b[j] * GRAM[i][j];
        }
    }
    if s.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn invert_rational(m: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    let n = m.len();
    let mut a = m;
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { int(1) } else { int(0) })
                .collect()
        })
        .collect();
    for col in 0..n {
        let p = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("gram blocks are invertible");
        a.swap(col, p);
        inv.swap(col, p);
        let d = a[col][col].clone();
        for c in 0..n {
            a[col][c] = &a[col][c] / &d;
            inv[col][c] = &inv[col][c] / &d;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..n {
                    let (d1, d2) = (&f * &a[col][c], &f * &inv[col][c]);
                    a[r][c] -= d1;
                    inv[r][c] -= d2;
                }
            }
        }
    }
    inv
}

/// All lattice vectors of norm 2, in lexicographic order on coordinates;
/// for E7 only vectors with k8 = 0 are produced.
///
/// Exhaustive search over the coefficient box [-6, 6]^rank, pruned by the
/// exact convex lower bound of the form over the still-free coordinates.
pub fn enumerate_roots(system: RootSystem) -> Vec<RootVec> {
    let rank = system.rank();
    // trailing-block inverses of the gram matrix, one per search level
    let tail_inv: Vec<Vec<Vec<Rational>>> = (1..rank)
        .map(|lvl| {
            let block: Vec<Vec<Rational>> = (lvl..rank)
                .map(|r| (lvl..rank).map(|c| int(GRAM[r][c] as i64)).collect())
                .collect();
            invert_rational(block)
        })
        .collect();

    let mut out = Vec::new();
    let mut coords = [0i32; 8];
    fn dfs(
        lvl: usize,
        rank: usize,
        coords: &mut RootVec,
        tail_inv: &[Vec<Vec<Rational>>],
        out: &mut Vec<RootVec>,
    ) {
        if lvl == rank {
            if norm(coords) == 2 {
                out.push(*coords);
            }
            return;
        }
        for k in -6..=6 {
            coords[lvl] = k;
            // partial value with free coordinates at zero
            let mut q = 0i64;
            for i in 0..=lvl {
                for j in 0..=lvl {
                    q += (coords[i] * GRAM[i][j] * coords[j]) as i64;
                }
            }
            let feasible = if lvl + 1 == rank {
                q <= 2
            } else {
                // min over real completions: q - b^T (tail gram)^-1 b
                let m = &tail_inv[lvl];
                let free = rank - lvl - 1;
                let b: Vec<i64> = (0..free)
                    .map(|j| {
                        (0..=lvl)
                            .map(|k| (coords[k] * GRAM[k][lvl + 1 + j]) as i64)
                            .sum()
                    })
                    .collect();
                let mut corr = Rational::zero();
                for r in 0..free {
                    if b[r] == 0 {
                        continue;
                    }
                    for c in 0..free {
                        corr += &m[r][c] * int(b[r]) * int(b[c]);
                    }
                }
                int(q) - corr <= int(2)
            };
            if feasible {
                dfs(lvl + 1, rank, coords, tail_inv, out);
            }
            coords[lvl] = 0;
        }
    }
    dfs(0, rank, &mut coords, &tail_inv, &mut out);
    out
}

pub fn positive_roots(system: RootSystem) -> Vec<RootVec> {
    enumerate_roots(system)
        .into_iter()
        .filter(is_positive)
        .collect()
}

/// E7 weight in both coordinate systems: integer coefficients over the
/// fundamental weights and rational coefficients over alpha_1..alpha_7.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightVec {
    pub fund: [i64; 7],
    pub root: [Rational; 7],
}

/// 2 * (expansion of lambda_i over alpha_1..alpha_7), row i-1.
const FUND_ROOTCOORDS_X2: [[i64; 7]; 7] = [
    [4, 4, 6, 8, 6, 4, 2],
    [4, 7, 8, 12, 9, 6, 3],
    [6, 8, 12, 16, 12, 8, 4],
    [8, 12, 16, 24, 18, 12, 6],
    [6, 9, 12, 18, 15, 10, 5],
    [4, 6, 8, 12, 10, 8, 4],
    [2, 3, 4, 6, 5, 4, 3],
];

impl WeightVec {
    pub fn from_fund(fund: [i64; 7]) -> Self {
        let root = std::array::from_fn(|j| {
            let mut num = 0i64;
            for (i, &n) in fund.iter().enumerate() {
                num += n * FUND_ROOTCOORDS_X2[i][j];
            }
            rat(num, 2)
        });
        WeightVec { fund, root }
    }

    pub fn zero() -> Self {
        Self::from_fund([0; 7])
    }

    pub fn is_zero(&self) -> bool {
        self.fund.iter().all(|&n| n == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.fund.iter().all(|&n| n >= 0)
    }

    pub fn add(&self, other: &WeightVec) -> WeightVec {
        Self::from_fund(std::array::from_fn(|i| self.fund[i] + other.fund[i]))
    }

    /// Pairing with a root given over alpha_1..alpha_7: since
    /// (lambda_i, alpha_j) = delta_ij this is sum_j k_j * fund_j.
    pub fn pair_root(&self, root: &RootVec) -> i64 {
        (0..7).map(|j| root[j] as i64 * self.fund[j]).sum()
    }

    /// Bilinear-form value (w, alpha_j) computed from the root coordinates.
    pub fn inner_simple(&self, j: usize) -> Rational {
        let mut s = Rational::zero();
        for (k, coord) in self.root.iter().enumerate() {
            if !coord.is_zero() {
                s += coord * int(GRAM[k][j - 1] as i64);
            }
        }
        s
    }
}

pub fn fundamental_weight(i: usize) -> WeightVec {
    assert!((1..=7).contains(&i));
    let mut fund = [0i64; 7];
    fund[i - 1] = 1;
    WeightVec::from_fund(fund)
}

pub fn fundamental_weights_e7() -> Vec<WeightVec> {
    (1..=7).map(fundamental_weight).collect()
}

/// rho = sum of the fundamental weights.
pub fn rho() -> WeightVec {
    WeightVec::from_fund([1; 7])
}
