//! Symmetric simply-laced Cartan matrices.
//!
//! Besides validation this module owns the integer arithmetic that the rest
//! of the crate leans on: positive roots (for the PBW dimension count), the
//! Smith normal form, and the cokernel order of C acting on (Z/nZ)^t.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::cyclotomic::nilpotency_order;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CartanMatrix {
    t: usize,
    entries: Vec<i64>,
}

/// Outcome of [`CartanMatrix::validate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidityReport {
    pub symmetric: bool,
    pub diagonal_two: bool,
    pub off_diagonal_ok: bool,
    pub positive_definite: bool,
    pub leading_minors: Vec<i128>,
}

impl ValidityReport {
    /// Symmetric Cartan matrix in the generalized sense (no definiteness).
    pub fn is_cartan(&self) -> bool {
        self.symmetric && self.diagonal_two && self.off_diagonal_ok
    }

    /// Cartan matrix of ADE type.
    pub fn is_ade(&self) -> bool {
        self.is_cartan() && self.positive_definite
    }

    pub fn problems(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.symmetric {
            out.push("not symmetric");
        }
        if !self.diagonal_two {
            out.push("diagonal entries must be 2");
        }
        if !self.off_diagonal_ok {
            out.push("off-diagonal entries must be 0 or -1");
        }
        if !self.positive_definite {
            out.push("not positive definite");
        }
        out
    }
}

impl CartanMatrix {
    /// Any square integer matrix; validity is checked separately.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let t = rows.len();
        if t == 0 {
            return Err(Error::EmptyMatrix);
        }
        let mut entries = Vec::with_capacity(t * t);
        for (row, r) in rows.into_iter().enumerate() {
            if r.len() != t {
                return Err(Error::NotSquare { row, len: r.len(), expected: t });
            }
            entries.extend(r);
        }
        Ok(Self { t, entries })
    }

    /// Like [`from_rows`](Self::from_rows) but rejects anything that is not of ADE type.
    pub fn from_rows_validated(rows: Vec<Vec<i64>>) -> Result<Self> {
        let c = Self::from_rows(rows)?;
        c.require_ade()?;
        Ok(c)
    }

    /// Catalogue lookup: `A<t>`, `D<t>` (t ≥ 4), `E6`, `E7`, `E8`, and products
    /// joined by `x` such as `A1xA1` or `A2xA1`.
    pub fn named(name: &str) -> Result<Self> {
        let unknown = || Error::UnknownType(name.to_string());
        let mut blocks = Vec::new();
        for part in name.split(['x', 'X', '×']) {
            let part = part.trim();
            let mut chars = part.chars();
            let family = chars.next().ok_or_else(unknown)?.to_ascii_uppercase();
            let rank: usize = chars.as_str().parse().map_err(|_| unknown())?;
            let block = match (family, rank) {
                ('A', t) if t >= 1 => type_a(t),
                ('D', t) if t >= 4 => type_d(t),
                ('E', t) if (6..=8).contains(&t) => type_e(t),
                _ => return Err(unknown()),
            };
            blocks.push(block);
        }
        if blocks.is_empty() {
            return Err(unknown());
        }
        let t: usize = blocks.iter().map(|b| b.len()).sum();
        let mut rows = vec![vec![0i64; t]; t];
        let mut offset = 0;
        for b in blocks {
            for (i, r) in b.iter().enumerate() {
                for (j, &v) in r.iter().enumerate() {
                    rows[offset + i][offset + j] = v;
                }
            }
            offset += b.len();
        }
        Self::from_rows(rows)
    }

    pub fn size(&self) -> usize {
        self.t
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.t + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.t).map(|r| r.to_vec()).collect()
    }

    /// Column j, i.e. the vector a_{·,j}.
    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.t).map(|i| self.entry(i, j)).collect()
    }

    pub fn validate(&self) -> ValidityReport {
        let t = self.t;
        let mut symmetric = true;
        let mut diagonal_two = true;
        let mut off_diagonal_ok = true;
        for i in 0..t {
            if self.entry(i, i) != 2 {
                diagonal_two = false;
            }
            for j in 0..t {
                if i != j {
                    if self.entry(i, j) != self.entry(j, i) {
                        symmetric = false;
                    }
                    if !matches!(self.entry(i, j), 0 | -1) {
                        off_diagonal_ok = false;
                    }
                }
            }
        }
        let leading_minors: Vec<i128> = (1..=t).map(|k| self.leading_minor(k)).collect();
        let positive_definite = symmetric && leading_minors.iter().all(|&m| m > 0);
        ValidityReport { symmetric, diagonal_two, off_diagonal_ok, positive_definite, leading_minors }
    }

    pub fn require_cartan(&self) -> Result<()> {
        let v = self.validate();
        if v.is_cartan() {
            Ok(())
        } else {
            Err(Error::InvalidCartan(v.problems().join(", ")))
        }
    }

    pub fn require_ade(&self) -> Result<()> {
        let v = self.validate();
        if !v.is_cartan() {
            return Err(Error::InvalidCartan(v.problems().join(", ")));
        }
        if !v.positive_definite {
            return Err(Error::NotPositiveDefinite);
        }
        Ok(())
    }

    fn leading_minor(&self, k: usize) -> i128 {
        let m: Vec<Vec<i128>> = (0..k).map(|i| (0..k).map(|j| self.entry(i, j) as i128).collect()).collect();
        bareiss_determinant(m)
    }

    pub fn determinant(&self) -> i128 {
        self.leading_minor(self.t)
    }

    /// Quadratic form βᵀCβ.
    pub fn norm(&self, beta: &[i64]) -> i64 {
        let mut s = 0;
        for i in 0..self.t {
            for j in 0..self.t {
                s += beta[i] * self.entry(i, j) * beta[j];
            }
        }
        s
    }

    /// Closure from the simple roots: β + e_i is adjoined whenever it has norm 2.
    pub fn positive_roots(&self) -> Result<RootSystemData> {
        self.require_ade()?;
        let t = self.t;
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue = VecDeque::new();
        for i in 0..t {
            let mut e = vec![0i64; t];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(beta) = queue.pop_front() {
            for i in 0..t {
                let mut next = beta.clone();
                next[i] += 1;
                if self.norm(&next) == 2 && seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        let mut roots: Vec<Vec<u32>> = seen.into_iter().map(|r| r.into_iter().map(|c| c as u32).collect()).collect();
        roots.sort_by_key(|r| (r.iter().sum::<u32>(), r.clone()));
        Ok(RootSystemData { count: roots.len(), positive_roots: roots, snf_diagonal: self.smith_normal_form() })
    }

    /// Invariant factors d_1 | d_2 | … | d_t over the integers.
    pub fn smith_normal_form(&self) -> Vec<i64> {
        let rows: Vec<Vec<i64>> = self.rows();
        smith_diagonal(rows)
    }

    /// |coker C| for C acting on (Z/nZ)^t: ∏ gcd(d_i, n).
    pub fn coker_cardinality(&self, n: u32) -> u64 {
        self.smith_normal_form().iter().map(|&d| (d.unsigned_abs()).gcd(&(n as u64))).product()
    }

    /// Coefficients of n^t · ∏_{β>0} (1 + x^{ht β} + … + x^{(e-1)·ht β}).
    pub fn pbw_series(&self, n: u32) -> Result<Vec<BigUint>> {
        let roots = self.positive_roots()?;
        let e = nilpotency_order(n) as usize;
        let mut series = vec![BigUint::from(n).pow(self.t as u32)];
        for beta in &roots.positive_roots {
            let h: usize = beta.iter().map(|&c| c as usize).sum();
            let mut next = vec![BigUint::zero(); series.len() + (e - 1) * h];
            for (d, c) in series.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for k in 0..e {
                    next[d + k * h] += c;
                }
            }
            series = next;
        }
        Ok(series)
    }

    /// n^t · e^N.
    pub fn pbw_dimension(&self, n: u32) -> Result<BigUint> {
        let roots = self.positive_roots()?;
        let e = BigUint::from(nilpotency_order(n));
        let mut dim = BigUint::from(n).pow(self.t as u32);
        for _ in 0..roots.count {
            dim *= &e;
        }
        Ok(dim)
    }

    /// Top degree of the PBW series, (e-1)·Σ_β ht β.
    pub fn pbw_top_degree(&self, n: u32) -> Result<usize> {
        let roots = self.positive_roots()?;
        let e = nilpotency_order(n) as usize;
        Ok(roots.positive_roots.iter().map(|b| (e - 1) * b.iter().map(|&c| c as usize).sum::<usize>()).sum())
    }
}

impl fmt::Display for CartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows().iter().map(|r| format!("[{}]", r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))).collect();
        write!(f, "[{}]", rows.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootSystemData {
    pub positive_roots: Vec<Vec<u32>>,
    pub count: usize,
    pub snf_diagonal: Vec<i64>,
}

impl RootSystemData {
    pub fn heights(&self) -> Vec<u32> {
        self.positive_roots.iter().map(|r| r.iter().sum()).collect()
    }

    pub fn snf_product(&self) -> i128 {
        self.snf_diagonal.iter().map(|&d| d as i128).product()
    }
}

fn type_a(t: usize) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0; t]; t];
    for i in 0..t {
        m[i][i] = 2;
        if i + 1 < t {
            m[i][i + 1] = -1;
            m[i + 1][i] = -1;
        }
    }
    m
}

fn type_d(t: usize) -> Vec<Vec<i64>> {
    // chain 1 - … - (t-2), with t-1 and t both attached to t-2
    let mut m = type_a(t - 1);
    for r in m.iter_mut() {
        r.push(0);
    }
    m.push(vec![0; t]);
    m[t - 1][t - 1] = 2;
    m[t - 1][t - 3] = -1;
    m[t - 3][t - 1] = -1;
    m
}

fn type_e(t: usize) -> Vec<Vec<i64>> {
    // Bourbaki labels: 1-3-4-5-6-7-8 with 2 attached to 4
    let mut edges = vec![(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)];
    if t >= 7 {
        edges.push((6, 7));
    }
    if t >= 8 {
        edges.push((7, 8));
    }
    let mut m = vec![vec![0; t]; t];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (a, b) in edges {
        m[a - 1][b - 1] = -1;
        m[b - 1][a - 1] = -1;
    }
    m
}

fn bareiss_determinant(mut m: Vec<Vec<i128>>) -> i128 {
    let k = m.len();
    if k == 0 {
        return 1;
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for p in 0..k {
        if m[p][p] == 0 {
            match (p + 1..k).find(|&r| m[r][p] != 0) {
                Some(r) => {
                    m.swap(p, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in p + 1..k {
            for j in p + 1..k {
                m[i][j] = (m[i][j] * m[p][p] - m[i][p] * m[p][j]) / prev;
            }
        }
        prev = m[p][p];
    }
    sign * m[k - 1][k - 1]
}

/// Diagonal of the Smith normal form via elementary row/column operations.
pub fn smith_diagonal(mut a: Vec<Vec<i64>>) -> Vec<i64> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let size = rows.min(cols);
    for k in 0..size {
        loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let mut best: Option<(usize, usize)> = None;
            for i in k..rows {
                for j in k..cols {
                    if a[i][j] != 0 && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish_diagonal(&a, size);
            };
            a.swap(k, pi);
            for r in a.iter_mut() {
                r.swap(k, pj);
            }
            let p = a[k][k];
            let mut clean = true;
            for i in k + 1..rows {
                let f = a[i][k] / p;
                if f != 0 {
                    for j in k..cols {
                        a[i][j] -= f * a[k][j];
                    }
                }
                if a[i][k] != 0 {
                    clean = false;
                }
            }
            for j in k + 1..cols {
                let f = a[k][j] / p;
                if f != 0 {
                    for row in a.iter_mut().skip(k) {
                        row[j] -= f * row[k];
                    }
                }
                if a[k][j] != 0 {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // pivot must divide the rest of the block; otherwise fold a row in
            let offender = (k + 1..rows).find(|&i| (k + 1..cols).any(|j| a[i][j] % p != 0));
            match offender {
                Some(i) => {
                    for j in k..cols {
                        a[k][j] += a[i][j];
                    }
                }
                None => break,
            }
        }
    }
    finish_diagonal(&a, size)
}

fn finish_diagonal(a: &[Vec<i64>], size: usize) -> Vec<i64> {
    let mut d: Vec<i64> = (0..size).map(|i| a[i][i].abs()).collect();
    // zeros to the end, keep divisibility chain
    d.sort_by_key(|&x| if x == 0 { i64::MAX } else { x });
    d
}

/// Brute-force positive-root oracle: all v ≥ 0 with entries ≤ `bound` and vᵀCv = 2.
pub fn enumerate_roots_bruteforce(c: &CartanMatrix, bound: i64) -> BTreeSet<Vec<i64>> {
    let t = c.size();
    let mut out = BTreeSet::new();
    let mut v = vec![0i64; t];
    loop {
        if v.iter().any(|&x| x != 0) && c.norm(&v) == 2 {
            out.insert(v.clone());
        }
        let mut i = 0;
        while i < t {
            v[i] += 1;
            if v[i] <= bound {
                break;
            }
            v[i] = 0;
            i += 1;
        }
        if i == t {
            break;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_small_cases() {
        let a1 = CartanMatrix::from_rows(vec![vec![2]]).unwrap();
        assert!(a1.validate().is_ade());
        let a2 = CartanMatrix::from_rows(vec![vec![2, -1], vec![-1, 2]]).unwrap();
        assert!(a2.validate().is_ade());
        let bad = CartanMatrix::from_rows(vec![vec![2, -1], vec![-1, 1]]).unwrap();
        let v = bad.validate();
        assert!(!v.diagonal_two);
        assert!(!v.is_cartan());
        assert!(matches!(CartanMatrix::from_rows(vec![vec![2, -1], vec![-1]]), Err(Error::NotSquare { .. })));
        let affine = CartanMatrix::from_rows(vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]).unwrap();
        let v = affine.validate();
        assert!(v.is_cartan() && !v.positive_definite);
        assert!(matches!(affine.positive_roots(), Err(Error::NotPositiveDefinite)));
    }

    #[test]
    fn catalogue_types_are_ade() {
        for name in ["A1", "A2", "A3", "A4", "A8", "D4", "D5", "D8", "E6", "E7", "E8", "A1xA1", "A2xA1"] {
            let c = CartanMatrix::named(name).unwrap();
            assert!(c.validate().is_ade(), "{name}");
        }
        assert!(CartanMatrix::named("D3").is_err());
        assert!(CartanMatrix::named("E9").is_err());
        assert!(CartanMatrix::named("B2").is_err());
    }

    #[test]
    fn root_counts_match_bruteforce() {
        for (name, n) in [("A1", 1), ("A2", 3), ("A1xA1", 2), ("A3", 6), ("A4", 10), ("D4", 12)] {
            let c = CartanMatrix::named(name).unwrap();
            let roots = c.positive_roots().unwrap();
            let brute = enumerate_roots_bruteforce(&c, 3);
            assert_eq!(roots.count, n, "{name}");
            assert_eq!(brute.len(), n, "{name}");
            let closure: BTreeSet<Vec<i64>> = roots.positive_roots.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect();
            assert_eq!(closure, brute, "{name}");
        }
    }

    #[test]
    fn type_a_has_triangular_root_count() {
        for t in 1..=4 {
            let c = CartanMatrix::named(&format!("A{t}")).unwrap();
            assert_eq!(c.positive_roots().unwrap().count, t * (t + 1) / 2);
        }
        assert_eq!(CartanMatrix::named("E6").unwrap().positive_roots().unwrap().count, 36);
        assert_eq!(CartanMatrix::named("E7").unwrap().positive_roots().unwrap().count, 63);
        assert_eq!(CartanMatrix::named("E8").unwrap().positive_roots().unwrap().count, 120);
    }

    #[test]
    fn snf_product_is_determinant() {
        for name in ["A1", "A2", "A3", "A4", "D4", "D5", "E6", "E7", "E8", "A1xA1", "A2xA1"] {
            let c = CartanMatrix::named(name).unwrap();
            let d = c.smith_normal_form();
            let prod: i128 = d.iter().map(|&x| x as i128).product();
            assert_eq!(prod, c.determinant(), "{name}");
            for w in d.windows(2) {
                assert_eq!(w[1] % w[0], 0, "{name}: {d:?}");
            }
        }
        assert_eq!(CartanMatrix::named("D4").unwrap().smith_normal_form(), vec![1, 1, 2, 2]);
        assert_eq!(CartanMatrix::named("A1xA1").unwrap().smith_normal_form(), vec![2, 2]);
    }

    #[test]
    fn coker_examples() {
        let a1 = CartanMatrix::named("A1").unwrap();
        assert_eq!(a1.coker_cardinality(5), 1);
        assert_eq!(a1.coker_cardinality(6), 2);
        let a2 = CartanMatrix::named("A2").unwrap();
        assert_eq!(a2.coker_cardinality(6), 3);
        assert_eq!(a2.coker_cardinality(5), 1);
        assert_eq!(CartanMatrix::named("A1xA1").unwrap().coker_cardinality(6), 4);
    }

    #[test]
    fn coker_trivial_iff_det_invertible() {
        for name in ["A1", "A2", "A3", "A1xA1", "D4", "E6"] {
            let c = CartanMatrix::named(name).unwrap();
            let det = c.determinant();
            for n in 2..=12u32 {
                let invertible = (det.unsigned_abs() as u64).gcd(&(n as u64)) == 1;
                assert_eq!(c.coker_cardinality(n) == 1, invertible, "{name} n={n}");
            }
        }
    }

    #[test]
    fn pbw_numbers() {
        let a2 = CartanMatrix::named("A2").unwrap();
        assert_eq!(a2.pbw_dimension(5).unwrap(), BigUint::from(3125u32));
        let s = a2.pbw_series(5).unwrap();
        assert_eq!(s[2], BigUint::from(100u32));
        assert_eq!(s.len() - 1, a2.pbw_top_degree(5).unwrap());
        let sum: BigUint = s.iter().sum();
        assert_eq!(sum, BigUint::from(3125u32));
        let a1 = CartanMatrix::named("A1").unwrap();
        let s = a1.pbw_series(6).unwrap();
        assert_eq!(s, vec![BigUint::from(6u32); 3]);
    }
}
