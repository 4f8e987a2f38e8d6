//! Exact rational arithmetic and exact sparse linear algebra over Q.
//!
//! Elimination is fraction-free on integer-cleared rows (cross-multiplied row
//! combinations with per-row gcd stripping); back-substitution for nullspace
//! vectors is done in rationals at the end. No rounding anywhere.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

/// Arbitrary-precision exact fraction, always in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for a rational from machine integers.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for an integer rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Sparse matrix over Q. Absent entries are zero; stored entries are nonzero.
#[derive(Clone, Debug, Default)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Rational>,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    /// Add `v` to the entry at (r, c), dropping it if the sum is zero.
    pub fn add_to(&mut self, r: usize, c: usize, v: Rational) {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        if v.is_zero() {
            return;
        }
        match self.entries.entry((r, c)) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(v);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += v;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        if v.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), v);
        }
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.entries
            .get(&(r, c))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    /// Matrix-vector product, exact.
    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![Rational::zero(); self.rows];
        for (&(r, c), a) in &self.entries {
            out[r] += a * &v[c];
        }
        out
    }
}

/// One integer row, sorted by column index, no zero entries.
type IntRow = Vec<(usize, BigInt)>;

fn strip_gcd(row: &mut IntRow) {
    let mut g = BigInt::zero();
    for (_, v) in row.iter() {
        g = g.gcd(v);
        if g.is_one() {
            return;
        }
    }
    if !g.is_zero() && !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v = &*v / &g;
        }
    }
}

use num_traits::One;

/// r := pv * r - rv * p, merged by column, gcd-stripped.
fn row_combine(r: &IntRow, rv: &BigInt, p: &IntRow, pv: &BigInt) -> IntRow {
    let mut out: IntRow = Vec::with_capacity(r.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < r.len() || j < p.len() {
        let v = if j >= p.len() || (i < r.len() && r[i].0 < p[j].0) {
            let e = (r[i].0, pv * &r[i].1);
            i += 1;
            e
        } else if i >= r.len() || p[j].0 < r[i].0 {
            let e = (p[j].0, -(rv * &p[j].1));
            j += 1;
            e
        } else {
            let e = (r[i].0, pv * &r[i].1 - rv * &p[j].1);
            i += 1;
            j += 1;
            e
        };
        if !v.1.is_zero() {
            out.push(v);
        }
    }
    strip_gcd(&mut out);
    out
}

struct Echelon {
    /// Frozen pivot rows; `pivots[k]` is (pivot column, index into `rows`).
    rows: Vec<IntRow>,
    pivots: Vec<(usize, usize)>,
    cols: usize,
}

/// Forward elimination. Pivot choice within the current column: smallest
/// bit-length nonzero entry, tie-break by lowest row index; deterministic.
fn eliminate(m: &SparseMatrix) -> Echelon {
    // clear denominators per row
    let mut grouped: BTreeMap<usize, IntRow> = BTreeMap::new();
    {
        let mut lcms: BTreeMap<usize, BigInt> = BTreeMap::new();
        for (&(r, _), v) in &m.entries {
            let e = lcms.entry(r).or_insert_with(BigInt::one);
            *e = e.lcm(v.denom());
        }
        for (&(r, c), v) in &m.entries {
            let scale = &lcms[&r] / v.denom();
            grouped.entry(r).or_default().push((c, v.numer() * scale));
        }
    }
    // keep the original row index for the pivot tie-break
    let mut active: Vec<(usize, IntRow)> = grouped.into_iter().collect();
    for (_, row) in &mut active {
        strip_gcd(row);
    }

    let mut frozen: Vec<IntRow> = Vec::new();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    for col in 0..m.cols {
        let mut best: Option<(u64, usize, usize)> = None;
        for (k, (orig, row)) in active.iter().enumerate() {
            if let Ok(pos) = row.binary_search_by_key(&col, |t| t.0) {
                let key = (row[pos].1.bits(), *orig);
                if best.is_none_or(|(b, o, _)| (key.0, key.1) < (b, o)) {
                    best = Some((key.0, key.1, k));
                }
            }
        }
        let Some((_, _, k)) = best else { continue };
        let (_, pivot_row) = active.remove(k);
        let pos = pivot_row.binary_search_by_key(&col, |t| t.0).unwrap();
        let pv = pivot_row[pos].1.clone();
        for (_, row) in &mut active {
            if let Ok(rpos) = row.binary_search_by_key(&col, |t| t.0) {
                let rv = row[rpos].1.clone();
                *row = row_combine(row, &rv, &pivot_row, &pv);
            }
        }
        active.retain(|(_, r)| !r.is_empty());
        pivots.push((col, frozen.len()));
        frozen.push(pivot_row);
    }
    Echelon {
        rows: frozen,
        pivots,
        cols: m.cols,
    }
}

/// Rank over the rationals, exactly.
pub fn exact_rank(m: &SparseMatrix) -> usize {
    eliminate(m).pivots.len()
}

/// Basis of the right nullspace. Each vector is normalized so its first
/// nonzero coordinate (in column order) is 1; vectors come out in order of
/// their pivot-free column index.
pub fn exact_nullspace(m: &SparseMatrix) -> Vec<Vec<Rational>> {
    let ech = eliminate(m);
    let mut is_pivot = vec![false; ech.cols];
    for &(c, _) in &ech.pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for free in (0..ech.cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Rational::zero(); ech.cols];
        v[free] = Rational::one();
        for &(pc, ri) in ech.pivots.iter().rev() {
            let row = &ech.rows[ri];
            let mut sum = Rational::zero();
            let mut diag = BigInt::zero();
            for (c, a) in row {
                if *c == pc {
                    diag = a.clone();
                } else if !v[*c].is_zero() {
                    sum += Rational::from_integer(a.clone()) * &v[*c];
                }
            }
            if !sum.is_zero() {
                v[pc] = -sum / Rational::from_integer(diag);
            }
        }
        let lead = v
            .iter()
            .find(|x| !x.is_zero())
            .expect("nullspace vector cannot be zero")
            .clone();
        for x in &mut v {
            if !x.is_zero() {
                *x = &*x / &lead;
            }
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Independent oracle: dense Gaussian elimination over Q.
    fn dense_rank(rows: usize, cols: usize, m: &SparseMatrix) -> usize {
        let mut a = vec![vec![Rational::zero(); cols]; rows];
        for (r, c, v) in m.iter() {
            a[r][c] = v.clone();
        }
        let mut rank = 0;
        for col in 0..cols {
            let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            for r in 0..rows {
                if r != rank && !a[r][col].is_zero() {
                    let f = &a[r][col] / &a[rank][col];
                    let pivot_row = a[rank][col..cols].to_vec();
                    for (c, pv) in a[r][col..cols].iter_mut().zip(&pivot_row) {
                        let d = &f * pv;
                        *c -= d;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    fn seeded_matrix(rows: usize, cols: usize, seed: u64, density_pct: u64) -> SparseMatrix {
        // tiny deterministic LCG so the oracle comparison is reproducible
        let mut state = seed.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(1);
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let mut m = SparseMatrix::new(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                if next() % 100 < density_pct {
                    let v = (next() % 19) as i64 - 9;
                    m.add_to(r, c, int(v));
                }
            }
        }
        m
    }

    #[test]
    fn identity_has_full_rank_and_trivial_kernel() {
        let mut m = SparseMatrix::new(3, 3);
        for i in 0..3 {
            m.set(i, i, int(1));
        }
        assert_eq!(exact_rank(&m), 3);
        assert!(exact_nullspace(&m).is_empty());
    }

    #[test]
    fn all_ones_has_rank_one() {
        let mut m = SparseMatrix::new(2, 2);
        for r in 0..2 {
            for c in 0..2 {
                m.set(r, c, int(1));
            }
        }
        assert_eq!(exact_rank(&m), 1);
    }

    #[test]
    fn single_equation_kernel() {
        let mut m = SparseMatrix::new(1, 2);
        m.set(0, 0, int(1));
        m.set(0, 1, int(1));
        let ns = exact_nullspace(&m);
        assert_eq!(ns, vec![vec![int(1), int(-1)]]);
    }

    #[test]
    fn rank_matches_dense_oracle_on_random_20x30() {
        for seed in 0..8u64 {
            let m = seeded_matrix(20, 30, seed, 35);
            assert_eq!(exact_rank(&m), dense_rank(20, 30, &m), "seed {seed}");
        }
    }

    #[test]
    fn nullspace_vectors_annihilate_and_rank_nullity_holds_15x25() {
        for seed in 0..6u64 {
            let m = seeded_matrix(15, 25, seed, 30);
            let ns = exact_nullspace(&m);
            assert_eq!(ns.len() + exact_rank(&m), 25, "seed {seed}");
            for v in &ns {
                assert!(m.mul_vec(v).iter().all(|x| x.is_zero()), "seed {seed}");
            }
        }
    }

    #[test]
    fn rational_entries_are_handled_exactly() {
        let mut m = SparseMatrix::new(2, 3);
        m.set(0, 0, rat(1, 2));
        m.set(0, 1, rat(1, 3));
        m.set(1, 1, rat(2, 3));
        m.set(1, 2, rat(-5, 7));
        let ns = exact_nullspace(&m);
        assert_eq!(ns.len(), 1);
        assert!(m.mul_vec(&ns[0]).iter().all(|x| x.is_zero()));
        assert_eq!(ns[0][0], int(1));
    }

    proptest! {
        #[test]
        fn prop_rank_nullity_and_exact_kernel(
            rows in 1usize..10,
            cols in 1usize..12,
            seed in any::<u64>(),
        ) {
            let m = seeded_matrix(rows, cols, seed, 40);
            let ns = exact_nullspace(&m);
            prop_assert_eq!(ns.len() + exact_rank(&m), cols);
            for v in &ns {
                prop_assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
            }
        }

        #[test]
        fn prop_insertion_order_is_irrelevant(seed in any::<u64>()) {
            let m = seeded_matrix(8, 10, seed, 50);
            let mut rev = SparseMatrix::new(8, 10);
            let mut entries: Vec<_> =
                m.iter().map(|(r, c, v)| (r, c, v.clone())).collect();
            entries.reverse();
            for (r, c, v) in entries {
                rev.add_to(r, c, v);
            }
            prop_assert_eq!(exact_nullspace(&m), exact_nullspace(&rev));
        }
    }
}
