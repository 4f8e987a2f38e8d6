//! Sparse exact polynomial algebra in the 56 variables x_1..x_56 and the two
//! operator calculi acting on it: degree-preserving first-order operators
//! (sums of c * x_i d_j) and constant-coefficient higher-order operators.
//!
//! Canonical term order is graded lexicographic with x_1 > x_2 > ... > x_56,
//! listed leading term first, which is the order the reference displays use.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exactalg::Rational;

pub const NVARS: u16 = 56;

/// Index of the variable paired with `r` under the involution r -> 57 - r.
pub fn conjugate_var(r: u16) -> u16 {
    debug_assert!((1..=NVARS).contains(&r));
    57 - r
}

/// Sparse exponent vector. No zero exponents stored; total degree cached.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<(u16, u32)>,
    degree: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial {
            exps: Vec::new(),
            degree: 0,
        }
    }

    pub fn var(i: u16) -> Self {
        assert!((1..=NVARS).contains(&i));
        Monomial {
            exps: vec![(i, 1)],
            degree: 1,
        }
    }

    pub fn from_pairs(pairs: &[(u16, u32)]) -> Self {
        let mut map: BTreeMap<u16, u32> = BTreeMap::new();
        for &(v, e) in pairs {
            assert!((1..=NVARS).contains(&v));
            *map.entry(v).or_insert(0) += e;
        }
        map.retain(|_, e| *e > 0);
        let exps: Vec<_> = map.into_iter().collect();
        let degree = exps.iter().map(|&(_, e)| e).sum();
        Monomial { exps, degree }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exps(&self) -> &[(u16, u32)] {
        &self.exps
    }

    pub fn exp_of(&self, v: u16) -> u32 {
        self.exps
            .binary_search_by_key(&v, |t| t.0)
            .map(|p| self.exps[p].1)
            .unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() || j < other.exps.len() {
            if j >= other.exps.len() || (i < self.exps.len() && self.exps[i].0 < other.exps[j].0) {
                exps.push(self.exps[i]);
                i += 1;
            } else if i >= self.exps.len() || other.exps[j].0 < self.exps[i].0 {
                exps.push(other.exps[j]);
                j += 1;
            } else {
                exps.push((self.exps[i].0, self.exps[i].1 + other.exps[j].1));
                i += 1;
                j += 1;
            }
        }
        Monomial {
            exps,
            degree: self.degree + other.degree,
        }
    }

    /// x_inc * d(self)/d(x_dec) up to the numeric factor: requires a positive
    /// exponent at `dec`; returns the shifted monomial and that exponent.
    pub fn shift(&self, inc: u16, dec: u16) -> Option<(Monomial, u32)> {
        let pos = self.exps.binary_search_by_key(&dec, |t| t.0).ok()?;
        let e = self.exps[pos].1;
        let mut exps = self.exps.clone();
        if e == 1 {
            exps.remove(pos);
        } else {
            exps[pos].1 = e - 1;
        }
        match exps.binary_search_by_key(&inc, |t| t.0) {
            Ok(p) => exps[p].1 += 1,
            Err(p) => exps.insert(p, (inc, 1)),
        }
        Some((
            Monomial {
                exps,
                degree: self.degree,
            },
            e,
        ))
    }

    /// Divide by `d` and return the falling-factorial factor of the iterated
    /// partial derivative, or None if some exponent of `d` exceeds ours.
    pub fn derive_by(&self, d: &Monomial) -> Option<(Monomial, BigInt)> {
        let mut factor = BigInt::one();
        let mut exps = self.exps.clone();
        for &(v, e) in &d.exps {
            let pos = exps.binary_search_by_key(&v, |t| t.0).ok()?;
            let have = exps[pos].1;
            if have < e {
                return None;
            }
            for k in 0..e {
                factor *= BigInt::from(have - k);
            }
            exps[pos].1 = have - e;
        }
        exps.retain(|&(_, e)| e > 0);
        let degree = self.degree - d.degree;
        Some((Monomial { exps, degree }, factor))
    }

    /// Variable involution r -> 57 - r.
    pub fn involute(&self) -> Monomial {
        let mut exps: Vec<(u16, u32)> = self
            .exps
            .iter()
            .map(|&(v, e)| (conjugate_var(v), e))
            .collect();
        exps.sort_unstable_by_key(|t| t.0);
        Monomial {
            exps,
            degree: self.degree,
        }
    }

    pub fn contains_var_in(&self, lo: u16, hi: u16) -> bool {
        self.exps.iter().any(|&(v, _)| lo <= v && v <= hi)
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: degree first, then x_1 > x_2 > ... > x_56.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            let (mut i, mut j) = (0, 0);
            loop {
                match (self.exps.get(i), other.exps.get(j)) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (Some(&(v1, e1)), Some(&(v2, e2))) => match v1.cmp(&v2) {
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Equal => {
                            if e1 != e2 {
                                return e1.cmp(&e2);
                            }
                            i += 1;
                            j += 1;
                        }
                    },
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial with exact rational coefficients; no zero coefficients
/// stored. Iteration and display run in canonical order (leading term first).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::from_term(Monomial::one(), Rational::one())
    }

    pub fn var(i: u16) -> Self {
        Polynomial::from_term(Monomial::var(i), Rational::one())
    }

    pub fn from_term(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; zero polynomial reports 0.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(Monomial::degree);
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// Terms in canonical order, leading (graded-lex largest) first.
    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Polynomial, scale: &Rational) {
        if scale.is_zero() {
            return;
        }
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c * scale);
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one());
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        out
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&-Rational::one())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.mul(m2);
                let c = c1 * c2;
                match acc.entry(m) {
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        *e.get_mut() += c;
                        if e.get().is_zero() {
                            e.remove();
                        }
                    }
                }
            }
        }
        Polynomial {
            terms: acc.into_iter().collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut out = Polynomial::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Divide by the leading coefficient so it becomes 1.
    pub fn normalize_leading(&self) -> Polynomial {
        match self.leading() {
            None => Polynomial::zero(),
            Some((_, c)) => {
                let inv = Rational::one() / c.clone();
                self.scale(&inv)
            }
        }
    }

    /// Set every variable in [lo, hi] to zero.
    pub fn specialize_zero(&self, lo: u16, hi: u16) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| !m.contains_var_in(lo, hi))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Variable involution r -> 57 - r applied to every term.
    pub fn involute(&self) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.involute(), c.clone()))
                .collect(),
        }
    }

    /// Canonical text form; `parse_text` reads it back bit-exactly.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::with_capacity(self.terms.len());
        for (m, c) in self.iter() {
            let sign = if c.is_negative() { '-' } else { '+' };
            let a = c.abs();
            let coeff = if a.denom().is_one() {
                format!("({})", a.numer())
            } else {
                format!("({}/{})", a.numer(), a.denom())
            };
            let mut s = format!("{sign}{coeff}");
            for &(v, e) in m.exps() {
                if e == 1 {
                    s.push_str(&format!("*x{v}"));
                } else {
                    s.push_str(&format!("*x{v}^{e}"));
                }
            }
            parts.push(s);
        }
        parts.join(" ")
    }

    pub fn parse_text(s: &str) -> Result<Polynomial, String> {
        let s = s.trim();
        if s == "0" {
            return Ok(Polynomial::zero());
        }
        let mut p = Polynomial::zero();
        for tok in s.split_whitespace() {
            let (sign, rest) = match tok.strip_prefix('+') {
                Some(r) => (1i64, r),
                None => match tok.strip_prefix('-') {
                    Some(r) => (-1i64, r),
                    None => return Err(format!("term must start with a sign: {tok}")),
                },
            };
            let rest = rest
                .strip_prefix('(')
                .ok_or_else(|| format!("missing coefficient in {tok}"))?;
            let close = rest
                .find(')')
                .ok_or_else(|| format!("unclosed coefficient in {tok}"))?;
            let (coeff_str, vars_str) = rest.split_at(close);
            let vars_str = &vars_str[1..];
            let coeff = match coeff_str.split_once('/') {
                None => {
                    let n: BigInt = coeff_str.parse().map_err(|e| format!("{e}: {tok}"))?;
                    Rational::from_integer(n)
                }
                Some((n, d)) => {
                    let n: BigInt = n.parse().map_err(|e| format!("{e}: {tok}"))?;
                    let d: BigInt = d.parse().map_err(|e| format!("{e}: {tok}"))?;
                    Rational::new(n, d)
                }
            };
            let mut pairs = Vec::new();
            for piece in vars_str.split('*') {
                if piece.is_empty() {
                    continue;
                }
                let body = piece
                    .strip_prefix('x')
                    .ok_or_else(|| format!("expected x<i> in {tok}"))?;
                let (v, e) = match body.split_once('^') {
                    None => (body.parse::<u16>().map_err(|e| format!("{e}: {tok}"))?, 1),
                    Some((v, e)) => (
                        v.parse::<u16>().map_err(|er| format!("{er}: {tok}"))?,
                        e.parse::<u32>().map_err(|er| format!("{er}: {tok}"))?,
                    ),
                };
                pairs.push((v, e));
            }
            p.add_term(
                Monomial::from_pairs(&pairs),
                coeff * Rational::from_integer(sign.into()),
            );
        }
        Ok(p)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Degree-preserving first-order operator: a sum of terms c * x_i d_j,
/// at most one stored term per (i, j), sorted by (i, j).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LinDiffOp {
    terms: Vec<(Rational, u16, u16)>,
}

impl LinDiffOp {
    pub fn zero() -> Self {
        LinDiffOp::default()
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Rational, u16, u16)>) -> Self {
        let mut map: BTreeMap<(u16, u16), Rational> = BTreeMap::new();
        for (c, i, j) in it {
            assert!((1..=NVARS).contains(&i) && (1..=NVARS).contains(&j));
            match map.entry((i, j)) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    if !c.is_zero() {
                        e.insert(c);
                    }
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    *e.get_mut() += c;
                    if e.get().is_zero() {
                        e.remove();
                    }
                }
            }
        }
        LinDiffOp {
            terms: map.into_iter().map(|((i, j), c)| (c, i, j)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> &[(Rational, u16, u16)] {
        &self.terms
    }

    pub fn coeff(&self, i: u16, j: u16) -> Rational {
        self.terms
            .binary_search_by_key(&(i, j), |t| (t.1, t.2))
            .map(|p| self.terms[p].0.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    pub fn scale(&self, c: &Rational) -> LinDiffOp {
        if c.is_zero() {
            return LinDiffOp::zero();
        }
        LinDiffOp {
            terms: self.terms.iter().map(|(v, i, j)| (v * c, *i, *j)).collect(),
        }
    }

    pub fn neg(&self) -> LinDiffOp {
        self.scale(&-Rational::one())
    }

    pub fn add(&self, other: &LinDiffOp) -> LinDiffOp {
        LinDiffOp::from_terms(
            self.terms
                .iter()
                .chain(other.terms.iter())
                .map(|(c, i, j)| (c.clone(), *i, *j)),
        )
    }

    pub fn sub(&self, other: &LinDiffOp) -> LinDiffOp {
        self.add(&other.neg())
    }

    /// Transpose: every c * x_i d_j becomes c * x_j d_i.
    pub fn transpose(&self) -> LinDiffOp {
        LinDiffOp::from_terms(self.terms.iter().map(|(c, i, j)| (c.clone(), *j, *i)))
    }

    /// Conjugation by the variable involution r -> 57 - r.
    pub fn involute(&self) -> LinDiffOp {
        LinDiffOp::from_terms(
            self.terms
                .iter()
                .map(|(c, i, j)| (c.clone(), conjugate_var(*i), conjugate_var(*j))),
        )
    }

    /// Image of a single monomial: list of (coefficient, monomial).
    pub fn apply_monomial(&self, m: &Monomial) -> Vec<(Rational, Monomial)> {
        let mut out = Vec::new();
        for (c, i, j) in &self.terms {
            if let Some((shifted, e)) = m.shift(*i, *j) {
                out.push((c * Rational::from_integer(e.into()), shifted));
            }
        }
        out
    }

    pub fn apply(&self, f: &Polynomial) -> Polynomial {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, fc) in f.iter() {
            for (c, i, j) in &self.terms {
                if let Some((shifted, e)) = m.shift(*i, *j) {
                    let v = fc * c * Rational::from_integer(e.into());
                    match acc.entry(shifted) {
                        std::collections::hash_map::Entry::Vacant(en) => {
                            en.insert(v);
                        }
                        std::collections::hash_map::Entry::Occupied(mut en) => {
                            *en.get_mut() += v;
                            if en.get().is_zero() {
                                en.remove();
                            }
                        }
                    }
                }
            }
        }
        Polynomial::from_terms(acc)
    }

    /// Commutator ab - ba in canonical first-order form; the second-order
    /// parts of the compositions cancel.
    pub fn commutator(&self, other: &LinDiffOp) -> LinDiffOp {
        let mut acc: BTreeMap<(u16, u16), Rational> = BTreeMap::new();
        let mut push = |i: u16, j: u16, v: Rational| {
            if v.is_zero() {
                return;
            }
            match acc.entry((i, j)) {
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
        };
        for (c1, i, j) in &self.terms {
            for (c2, k, l) in &other.terms {
                if j == k {
                    push(*i, *l, c1 * c2);
                }
                if l == i {
                    push(*k, *j, -(c1 * c2));
                }
            }
        }
        LinDiffOp {
            terms: acc.into_iter().map(|((i, j), c)| (c, i, j)).collect(),
        }
    }
}

/// Constant-coefficient differential operator: a polynomial in d_1..d_56,
/// stored as exponent vectors over the derivative symbols.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ConstDiffOp {
    terms: BTreeMap<Monomial, Rational>,
}

impl ConstDiffOp {
    pub fn zero() -> Self {
        ConstDiffOp::default()
    }

    /// Monomial-wise substitution x_i^e -> d_i^e, coefficients preserved.
    pub fn from_polynomial(f: &Polynomial) -> Self {
        ConstDiffOp {
            terms: f.iter().map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Operator order (highest total derivative degree).
    pub fn order(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn apply(&self, f: &Polynomial) -> Polynomial {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, fc) in f.iter() {
            for (d, dc) in &self.terms {
                if let Some((rest, factor)) = m.derive_by(d) {
                    let v = fc * dc * Rational::from_integer(factor);
                    match acc.entry(rest) {
                        std::collections::hash_map::Entry::Vacant(en) => {
                            en.insert(v);
                        }
                        std::collections::hash_map::Entry::Occupied(mut en) => {
                            *en.get_mut() += v;
                            if en.get().is_zero() {
                                en.remove();
                            }
                        }
                    }
                }
            }
        }
        Polynomial::from_terms(acc)
    }
}

/// Operator-level involution of a polynomial (module-level names mirroring
/// the operation table).
pub fn involution_nu(f: &Polynomial) -> Polynomial {
    f.involute()
}

pub fn transpose_tau(op: &LinDiffOp) -> LinDiffOp {
    op.transpose()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::int;
    use proptest::prelude::*;

    fn p(s: &str) -> Polynomial {
        Polynomial::parse_text(s).unwrap()
    }

    #[test]
    fn ring_identities() {
        let a = p("+(1)*x1 +(1)*x2");
        let b = p("+(1)*x1 -(1)*x2");
        assert_eq!(a.mul(&b), p("+(1)*x1^2 -(1)*x2^2"));
        assert!(a.add(&a.neg()).is_zero());
    }

    #[test]
    fn canonical_order_is_leading_first() {
        let f = p("+(1)*x6*x7 +(1)*x1*x17 +(2)*x3*x12");
        assert_eq!(f.to_text(), "+(1)*x1*x17 +(2)*x3*x12 +(1)*x6*x7");
        let lead = f.leading().unwrap().0.clone();
        assert_eq!(lead, Monomial::from_pairs(&[(1, 1), (17, 1)]));
    }

    #[test]
    fn degree_dominates_order() {
        let f = p("+(1)*x56^3 +(1)*x1");
        assert_eq!(f.to_text(), "+(1)*x56^3 +(1)*x1");
    }

    #[test]
    fn apply_linop_basics() {
        let op = LinDiffOp::from_terms([(int(1), 1, 2)]);
        assert_eq!(op.apply(&Polynomial::var(2)), Polynomial::var(1));
        assert!(op.apply(&Polynomial::var(3)).is_zero());
        assert_eq!(op.apply(&p("+(1)*x2^2")), p("+(2)*x1*x2"),);
    }

    #[test]
    fn commutator_basics() {
        let a = LinDiffOp::from_terms([(int(1), 1, 2)]);
        let b = LinDiffOp::from_terms([(int(1), 2, 3)]);
        assert_eq!(a.commutator(&b), LinDiffOp::from_terms([(int(1), 1, 3)]));
        assert!(a.commutator(&a).is_zero());
    }

    #[test]
    fn constop_basics() {
        let d1 = ConstDiffOp::from_polynomial(&Polynomial::var(1));
        assert_eq!(d1.apply(&p("+(1)*x1^2")), p("+(2)*x1"));
        let d12 = ConstDiffOp::from_polynomial(&p("+(1)*x1*x2"));
        assert_eq!(d12.apply(&p("+(1)*x1*x2")), Polynomial::one());
        // order 4 on degree 3 vanishes
        let d4 = ConstDiffOp::from_polynomial(&p("+(1)*x1*x2*x3*x4"));
        assert!(d4.apply(&p("+(5)*x1*x2*x3")).is_zero());
        assert_eq!(d4.order(), 4);
        // an order-k operator lowers degree by exactly k when it survives
        let f = p("+(1)*x1^2*x2*x3*x4^2 +(7)*x1*x2*x3*x4*x5*x6");
        let img = d4.apply(&f);
        assert!(!img.is_zero() && img.is_homogeneous());
        assert_eq!(img.degree(), f.degree() - 4);
    }

    #[test]
    fn involution_and_transpose_are_involutive() {
        let f = p("+(1)*x1*x17 -(3/2)*x6*x7");
        assert_eq!(involution_nu(&f), p("+(1)*x40*x56 -(3/2)*x50*x51"));
        assert_eq!(involution_nu(&involution_nu(&f)), f);
        let op = LinDiffOp::from_terms([(int(1), 1, 2), (int(-2), 5, 9)]);
        assert_eq!(transpose_tau(&transpose_tau(&op)), op);
        assert_eq!(
            transpose_tau(&LinDiffOp::from_terms([(int(1), 1, 2)])),
            LinDiffOp::from_terms([(int(1), 2, 1)])
        );
    }

    fn arb_monomial() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec((1u16..=NVARS, 1u32..3), 0..4)
            .prop_map(|pairs| Monomial::from_pairs(&pairs))
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec((arb_monomial(), -6i64..7), 0..6)
            .prop_map(|ts| Polynomial::from_terms(ts.into_iter().map(|(m, c)| (m, int(c)))))
    }

    fn arb_linop() -> impl Strategy<Value = LinDiffOp> {
        proptest::collection::vec((-4i64..5, 1u16..=NVARS, 1u16..=NVARS), 1..5)
            .prop_map(|ts| LinDiffOp::from_terms(ts.into_iter().map(|(c, i, j)| (int(c), i, j))))
    }

    proptest! {
        #[test]
        fn prop_linop_is_a_derivation(op in arb_linop(), f in arb_poly(), g in arb_poly()) {
            let lhs = op.apply(&f.mul(&g));
            let rhs = op.apply(&f).mul(&g).add(&f.mul(&op.apply(&g)));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn prop_commutator_leibniz(a in arb_linop(), b in arb_linop(), f in arb_poly()) {
            let lhs = a.commutator(&b).apply(&f);
            let rhs = a.apply(&b.apply(&f)).sub(&b.apply(&a.apply(&f)));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn prop_text_round_trip(f in arb_poly()) {
            prop_assert_eq!(Polynomial::parse_text(&f.to_text()).unwrap(), f);
        }

        #[test]
        fn prop_linop_preserves_degree_on_homogeneous(op in arb_linop(), m in arb_monomial()) {
            let f = Polynomial::from_term(m.clone(), int(1));
            let img = op.apply(&f);
            if !img.is_zero() {
                prop_assert!(img.is_homogeneous());
                prop_assert_eq!(img.degree(), m.degree());
            }
        }
    }
}
