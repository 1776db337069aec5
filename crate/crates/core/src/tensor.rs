//! Exact matrix realization `D: A(S_n) → End((C^N)^{⊗n})`.
//!
//! Slot convention: `D(σ)` moves the vector in slot `k` to slot `σ(k)`, so
//! `D(σ) D(π) = D(σ ∘ π)`. Basis vectors are multi-indices with slot 1 as
//! the most significant digit.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::algebra::{AlgebraElement, PolyAlgebraElement, Rational};
use crate::config::Limits;
use crate::{Error, Result};

/// Radix-`N` multi-index `(a_1, …, a_n)`, `a_i ∈ 0..N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MultiIndex {
    pub n: usize,
    pub dim: usize,
}

impl MultiIndex {
    pub fn new(n: usize, dim: usize) -> Self {
        MultiIndex { n, dim }
    }

    pub fn size(&self) -> usize {
        self.dim.pow(self.n as u32)
    }

    pub fn encode(&self, digits: &[usize]) -> usize {
        debug_assert_eq!(digits.len(), self.n);
        digits.iter().fold(0, |acc, &d| acc * self.dim + d)
    }

    pub fn decode(&self, mut index: usize) -> Vec<usize> {
        let mut digits = vec![0; self.n];
        for slot in (0..self.n).rev() {
            digits[slot] = index % self.dim;
            index /= self.dim;
        }
        digits
    }
}

/// Sparse exact rational `N^n × N^n` matrix, stored as integer numerators
/// over one common positive denominator. Always normalized (numerators and
/// denominator coprime, zero entries dropped, rows sorted by column), so
/// derived equality is matrix equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorOperator {
    n: usize,
    dim: usize,
    denom: BigInt,
    rows: Vec<Vec<(usize, BigInt)>>,
}

/// First entry at which two operators differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryWitness {
    pub row: usize,
    pub col: usize,
    pub expected: String,
    pub actual: String,
}

impl TensorOperator {
    fn sized(n: usize, dim: usize, limits: &Limits) -> Result<usize> {
        if dim == 0 {
            return Err(Error::SizeCap { dim, n, cap: limits.tensor_cap });
        }
        match dim.checked_pow(n as u32) {
            Some(size) if size <= limits.tensor_cap => Ok(size),
            _ => Err(Error::SizeCap { dim, n, cap: limits.tensor_cap }),
        }
    }

    fn from_parts(n: usize, dim: usize, denom: BigInt, rows: Vec<Vec<(usize, BigInt)>>) -> Self {
        let mut op = TensorOperator { n, dim, denom, rows };
        op.normalize();
        op
    }

    fn normalize(&mut self) {
        for row in &mut self.rows {
            row.retain(|(_, v)| !v.is_zero());
        }
        if self.nnz() == 0 {
            self.denom = BigInt::one();
            return;
        }
        if self.denom.is_negative() {
            self.denom = -&self.denom;
            for (_, v) in self.rows.iter_mut().flatten() {
                *v = -&*v;
            }
        }
        let g = self
            .rows
            .iter()
            .flatten()
            .fold(self.denom.clone(), |g, (_, v)| g.gcd(v));
        if !g.is_one() {
            self.denom /= &g;
            for (_, v) in self.rows.iter_mut().flatten() {
                *v /= &g;
            }
        }
    }

    pub fn zero(n: usize, dim: usize) -> Self {
        let size = dim.pow(n as u32);
        TensorOperator {
            n,
            dim,
            denom: BigInt::one(),
            rows: vec![Vec::new(); size],
        }
    }

    pub fn identity(n: usize, dim: usize) -> Self {
        let size = dim.pow(n as u32);
        TensorOperator {
            n,
            dim,
            denom: BigInt::one(),
            rows: (0..size).map(|i| vec![(i, BigInt::one())]).collect(),
        }
    }

    /// `Σ c_σ D(σ)` with the default size cap.
    pub fn realize(a: &AlgebraElement, dim: usize) -> Result<Self> {
        Self::realize_with(a, dim, &Limits::default())
    }

    pub fn realize_with(a: &AlgebraElement, dim: usize, limits: &Limits) -> Result<Self> {
        let n = a.degree();
        let size = Self::sized(n, dim, limits)?;
        let index = MultiIndex::new(n, dim);
        let denom = a
            .terms()
            .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let mut rows: Vec<BTreeMap<usize, BigInt>> = vec![BTreeMap::new(); size];
        let digits: Vec<Vec<usize>> = (0..size).map(|i| index.decode(i)).collect();
        let mut out = vec![0; n];
        for (sigma, c) in a.terms() {
            let weight = c.numer() * (&denom / c.denom());
            let images = sigma.raw();
            for (col, input) in digits.iter().enumerate() {
                for (slot, &d) in input.iter().enumerate() {
                    out[images[slot] as usize] = d;
                }
                *rows[index.encode(&out)].entry(col).or_insert_with(BigInt::zero) += &weight;
            }
        }
        Ok(Self::from_parts(
            n,
            dim,
            denom,
            rows.into_iter().map(|r| r.into_iter().collect()).collect(),
        ))
    }

    /// Realization of a polynomial-coefficient element at the given `N`.
    pub fn realize_poly(a: &PolyAlgebraElement, dim: usize) -> Result<Self> {
        Self::realize(&a.evaluate(&Rational::from_integer(BigInt::from(dim))), dim)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn density(&self) -> f64 {
        self.nnz() as f64 / (self.size() as f64).powi(2)
    }

    pub fn is_zero(&self) -> bool {
        self.nnz() == 0
    }

    pub fn entry(&self, row: usize, col: usize) -> Rational {
        self.rows[row]
            .binary_search_by_key(&col, |(c, _)| *c)
            .map(|i| Rational::new(self.rows[row][i].1.clone(), self.denom.clone()))
            .unwrap_or_else(|_| Rational::zero())
    }

    /// Nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, Rational)> + '_ {
        self.rows.iter().enumerate().flat_map(move |(r, row)| {
            row.iter()
                .map(move |(c, v)| (r, *c, Rational::new(v.clone(), self.denom.clone())))
        })
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if (self.n, self.dim) != (other.n, other.dim) {
            return Err(Error::ShapeMismatch(self.n, self.dim, other.n, other.dim));
        }
        Ok(())
    }

    pub fn transpose(&self) -> Self {
        let mut rows = vec![Vec::new(); self.size()];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, v) in row {
                rows[*c].push((r, v.clone()));
            }
        }
        TensorOperator {
            n: self.n,
            dim: self.dim,
            denom: self.denom.clone(),
            rows,
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.transpose() == *self
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_parts(
            self.n,
            self.dim,
            &self.denom * c.denom(),
            self.rows
                .iter()
                .map(|row| row.iter().map(|(col, v)| (*col, v * c.numer())).collect())
                .collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let denom = self.denom.lcm(&other.denom);
        let (fa, fb) = (&denom / &self.denom, &denom / &other.denom);
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(ra, rb)| {
                let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
                for (c, v) in ra {
                    *acc.entry(*c).or_insert_with(BigInt::zero) += v * &fa;
                }
                for (c, v) in rb {
                    *acc.entry(*c).or_insert_with(BigInt::zero) += v * &fb;
                }
                acc.into_iter().collect()
            })
            .collect();
        Ok(Self::from_parts(self.n, self.dim, denom, rows))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let denom = &self.denom * &other.denom;
        let rows = multiply_rows_i128(&self.rows, &other.rows)
            .unwrap_or_else(|| multiply_rows_big(&self.rows, &other.rows));
        Ok(Self::from_parts(self.n, self.dim, denom, rows))
    }

    pub fn is_idempotent(&self) -> bool {
        self.multiply(self).is_ok_and(|sq| sq == *self)
    }

    pub fn trace(&self) -> Rational {
        let sum: BigInt = self
            .rows
            .iter()
            .enumerate()
            .filter_map(|(r, row)| {
                row.binary_search_by_key(&r, |(c, _)| *c)
                    .ok()
                    .map(|i| row[i].1.clone())
            })
            .sum();
        Rational::new(sum, self.denom.clone())
    }

    /// Contraction of the last slot:
    /// `out[(a_1..a_{n−1}), (b_1..b_{n−1})] = Σ_c M[(a c), (b c)]`.
    pub fn partial_trace(&self) -> Result<Self> {
        if self.n < 2 {
            return Err(Error::DegreeTooSmall { n: self.n, min: 2 });
        }
        let dim = self.dim;
        let size = self.size() / dim;
        let mut rows: Vec<BTreeMap<usize, BigInt>> = vec![BTreeMap::new(); size];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, v) in row {
                if r % dim == c % dim {
                    *rows[r / dim].entry(c / dim).or_insert_with(BigInt::zero) += v;
                }
            }
        }
        Ok(Self::from_parts(
            self.n - 1,
            dim,
            self.denom.clone(),
            rows.into_iter().map(|r| r.into_iter().collect()).collect(),
        ))
    }

    /// Exact rank by fraction-free elimination on each connected block of
    /// the sparsity pattern.
    pub fn rank(&self) -> usize {
        let size = self.size();
        let mut uf = UnionFind::new(2 * size);
        for (r, row) in self.rows.iter().enumerate() {
            for (c, _) in row {
                uf.union(r, size + c);
            }
        }
        let mut blocks: BTreeMap<usize, (Vec<usize>, Vec<usize>)> = BTreeMap::new();
        for r in 0..size {
            if !self.rows[r].is_empty() {
                blocks.entry(uf.find(r)).or_default().0.push(r);
            }
        }
        for (r, row) in self.rows.iter().enumerate() {
            let _ = r;
            for (c, _) in row {
                let root = uf.find(size + c);
                let cols = &mut blocks.get_mut(&root).expect("column joined to a row").1;
                if !cols.contains(c) {
                    cols.push(*c);
                }
            }
        }
        blocks
            .values()
            .map(|(rows, cols)| {
                let mut cols = cols.clone();
                cols.sort_unstable();
                let dense: Vec<Vec<BigInt>> = rows
                    .iter()
                    .map(|&r| {
                        let mut line = vec![BigInt::zero(); cols.len()];
                        for (c, v) in &self.rows[r] {
                            line[cols.binary_search(c).unwrap()] = v.clone();
                        }
                        line
                    })
                    .collect();
                bareiss_rank(dense)
            })
            .sum()
    }

    /// First entry (row-major) where `self` differs from `expected`.
    pub fn first_difference(&self, expected: &Self) -> Option<EntryWitness> {
        if (self.n, self.dim) != (expected.n, expected.dim) {
            return Some(EntryWitness {
                row: 0,
                col: 0,
                expected: format!("shape (n={}, N={})", expected.n, expected.dim),
                actual: format!("shape (n={}, N={})", self.n, self.dim),
            });
        }
        for r in 0..self.size() {
            let (a, b) = (&self.rows[r], &expected.rows[r]);
            let mut cols: Vec<usize> = a.iter().chain(b).map(|(c, _)| *c).collect();
            cols.sort_unstable();
            cols.dedup();
            for c in cols {
                let (x, y) = (self.entry(r, c), expected.entry(r, c));
                if x != y {
                    return Some(EntryWitness {
                        row: r,
                        col: c,
                        expected: y.to_string(),
                        actual: x.to_string(),
                    });
                }
            }
        }
        None
    }
}

fn multiply_rows_i128(
    a: &[Vec<(usize, BigInt)>],
    b: &[Vec<(usize, BigInt)>],
) -> Option<Vec<Vec<(usize, BigInt)>>> {
    let to_small = |rows: &[Vec<(usize, BigInt)>]| -> Option<Vec<Vec<(usize, i128)>>> {
        rows.iter()
            .map(|row| row.iter().map(|(c, v)| v.to_i128().map(|x| (*c, x))).collect())
            .collect()
    };
    let (a, b) = (to_small(a)?, to_small(b)?);
    let size = b.len();
    let mut acc = vec![0i128; size];
    let mut touched: Vec<usize> = Vec::new();
    let mut out = Vec::with_capacity(a.len());
    for row in &a {
        for &(k, x) in row {
            for &(c, y) in &b[k] {
                if acc[c] == 0 {
                    touched.push(c);
                }
                acc[c] = acc[c].checked_add(x.checked_mul(y)?)?;
            }
        }
        touched.sort_unstable();
        touched.dedup();
        let mut line = Vec::with_capacity(touched.len());
        for &c in &touched {
            if acc[c] != 0 {
                line.push((c, BigInt::from(acc[c])));
            }
            acc[c] = 0;
        }
        touched.clear();
        out.push(line);
    }
    Some(out)
}

fn multiply_rows_big(a: &[Vec<(usize, BigInt)>], b: &[Vec<(usize, BigInt)>]) -> Vec<Vec<(usize, BigInt)>> {
    a.iter()
        .map(|row| {
            let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
            for (k, x) in row {
                for (c, y) in &b[*k] {
                    *acc.entry(*c).or_insert_with(BigInt::zero) += x * y;
                }
            }
            acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
        })
        .collect()
}

/// Rank of an integer matrix by Bareiss fraction-free Gaussian elimination.
fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let v = (&m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c]) / &prev;
                m[r][c] = v;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// `{"n":…,"N":…,"entries":[[row,col,"p/q"],…]}`, row-major, zeros omitted.
impl Serialize for TensorOperator {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Entries<'a>(&'a TensorOperator);
        impl Serialize for Entries<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut seq = s.serialize_seq(Some(self.0.nnz()))?;
                for (r, c, v) in self.0.entries() {
                    seq.serialize_element(&(r, c, v.to_string()))?;
                }
                seq.end()
            }
        }
        let mut st = s.serialize_struct("TensorOperator", 3)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("N", &self.dim)?;
        st.serialize_field("entries", &Entries(self))?;
        st.end()
    }
}

/// One exact matrix check inside an [`OrthogonalityReport`].
#[derive(Clone, Debug, Serialize)]
pub struct MatrixCheck {
    pub id: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<EntryWitness>,
}

#[derive(Clone, Debug, Serialize)]
pub struct OrthogonalityReport {
    pub checks: Vec<MatrixCheck>,
    /// Trace of each operator, in input order.
    pub traces: Vec<String>,
}

impl OrthogonalityReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &MatrixCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Pairwise `M_i M_j = δ_ij M_i`, symmetry `M = Mᵀ` of each operator, and
/// `Σ M_i = 1`.
pub fn orthogonality_report(ops: &[TensorOperator]) -> Result<OrthogonalityReport> {
    use rayon::prelude::*;

    let Some(first) = ops.first() else {
        return Ok(OrthogonalityReport {
            checks: Vec::new(),
            traces: Vec::new(),
        });
    };
    for op in ops {
        first.check_shape(op)?;
    }
    let (n, dim) = (first.n, first.dim);
    let zero = TensorOperator::zero(n, dim);

    let pairs: Vec<(usize, usize)> = (0..ops.len())
        .flat_map(|i| (0..ops.len()).map(move |j| (i, j)))
        .collect();
    let mut checks: Vec<MatrixCheck> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let product = ops[i].multiply(&ops[j]).expect("shapes checked");
            let expected = if i == j { &ops[i] } else { &zero };
            let witness = product.first_difference(expected);
            MatrixCheck {
                id: format!("product[{i},{j}]"),
                passed: witness.is_none(),
                witness,
            }
        })
        .collect();
    for (i, op) in ops.iter().enumerate() {
        let witness = op.transpose().first_difference(op);
        checks.push(MatrixCheck {
            id: format!("symmetric[{i}]"),
            passed: witness.is_none(),
            witness,
        });
    }
    let mut sum = zero.clone();
    for op in ops {
        sum = sum.add(op)?;
    }
    let witness = sum.first_difference(&TensorOperator::identity(n, dim));
    checks.push(MatrixCheck {
        id: "completeness".into(),
        passed: witness.is_none(),
        witness,
    });
    Ok(OrthogonalityReport {
        checks,
        traces: ops.iter().map(|m| m.trace().to_string()).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{symmetrizer, young_operator};
    use crate::hermitian::hermitian_young;
    use crate::perm::Permutation;
    use crate::tableaux::enumerate_syt;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn multi_index_round_trip() {
        let idx = MultiIndex::new(4, 3);
        for i in 0..idx.size() {
            assert_eq!(idx.encode(&idx.decode(i)), i);
        }
        assert_eq!(idx.decode(1), vec![0, 0, 0, 1]);
        assert_eq!(idx.decode(27), vec![1, 0, 0, 0]);
    }

    #[test]
    fn swap_fixture() {
        // n = 2, N = 2, σ = (12): e_a ⊗ e_b ↦ e_b ⊗ e_a
        let swap = AlgebraElement::from_permutation(Permutation::transposition(2, 1, 2).unwrap());
        let m = TensorOperator::realize(&swap, 2).unwrap();
        let ones: Vec<(usize, usize)> = m.entries().map(|(r, c, _)| (r, c)).collect();
        assert_eq!(ones, vec![(0, 0), (1, 2), (2, 1), (3, 3)]);
    }

    #[test]
    fn slot_action_moves_slot_k_to_sigma_k() {
        // σ = (123): slot 1 → 2, 2 → 3, 3 → 1.  Input e_0⊗e_1⊗e_2 (index 5)
        // becomes e_2⊗e_0⊗e_1 (index 2·9 + 0·3 + 1 = 19).
        let sigma = Permutation::from_cycles(3, &[&[1, 2, 3]]).unwrap();
        let m = TensorOperator::realize(&AlgebraElement::from_permutation(sigma), 3).unwrap();
        assert_eq!(m.entry(19, 5), q(1, 1));
        assert_eq!(m.nnz(), 27);
    }

    #[test]
    fn basic_realizations() {
        let id = TensorOperator::realize(&AlgebraElement::identity(3), 2).unwrap();
        assert_eq!(id, TensorOperator::identity(3, 2));
        let col = young_operator(&"1/2".parse().unwrap()).unwrap();
        assert!(TensorOperator::realize(&col, 1).unwrap().is_zero());
        let big = AlgebraElement::identity(8);
        assert!(matches!(
            TensorOperator::realize(&big, 3),
            Err(Error::SizeCap { .. })
        ));
        assert!(TensorOperator::realize(&AlgebraElement::identity(2), 0).is_err());
    }

    #[test]
    fn hermitian_three_box_projector() {
        let p = hermitian_young(&"12/3".parse().unwrap()).unwrap();
        let m = TensorOperator::realize(&p, 3).unwrap();
        assert!(m.is_symmetric());
        assert!(m.is_idempotent());
        assert_eq!(m.rank(), 8);
        assert_eq!(m.trace(), q(8, 1));
    }

    #[test]
    fn rank_of_known_matrices() {
        assert_eq!(TensorOperator::identity(2, 3).rank(), 9);
        assert_eq!(TensorOperator::zero(2, 3).rank(), 0);
        let s = TensorOperator::realize(&symmetrizer(2, &[1, 2]).unwrap(), 3).unwrap();
        assert_eq!(s.rank(), 6);
        assert_eq!(bareiss_rank(vec![
            vec![1.into(), 2.into(), 3.into()],
            vec![2.into(), 4.into(), 6.into()],
            vec![1.into(), 0.into(), 1.into()],
        ]), 2);
    }

    #[test]
    fn matrix_partial_traces() {
        let id = TensorOperator::identity(3, 2).partial_trace().unwrap();
        assert_eq!(id, TensorOperator::identity(2, 2).scale(&q(2, 1)));
        // (2 + p − q)|T'|/|T| = (2 + 1 − 2)(2/3) for T = 12/3
        let p = TensorOperator::realize(&hermitian_young(&"12/3".parse().unwrap()).unwrap(), 2).unwrap();
        let parent = TensorOperator::realize(&young_operator(&"12".parse().unwrap()).unwrap(), 2).unwrap();
        assert_eq!(p.partial_trace().unwrap(), parent.scale(&q(2, 3)));
        assert!(TensorOperator::identity(1, 2).partial_trace().is_err());
    }

    #[test]
    fn report_on_three_boxes() {
        let ops: Vec<_> = enumerate_syt(3)
            .unwrap()
            .iter()
            .map(|t| TensorOperator::realize(&hermitian_young(t).unwrap(), 3).unwrap())
            .collect();
        let report = orthogonality_report(&ops).unwrap();
        assert!(report.all_passed());
        // canonical order: 123, 12/3, 1/2/3, 13/2
        assert_eq!(report.traces, vec!["10", "8", "1", "8"]);

        let conv: Vec<_> = ["12/3", "13/2"]
            .iter()
            .map(|s| TensorOperator::realize(&young_operator(&s.parse().unwrap()).unwrap(), 3).unwrap())
            .collect();
        let report = orthogonality_report(&conv).unwrap();
        let failed: Vec<&str> = report.failures().map(|c| c.id.as_str()).collect();
        assert!(failed.contains(&"symmetric[0]") && failed.contains(&"symmetric[1]"));

        let single = orthogonality_report(&[TensorOperator::identity(2, 2)]).unwrap();
        assert!(single.all_passed());

        let mixed = [TensorOperator::identity(2, 2), TensorOperator::identity(2, 3)];
        assert!(matches!(orthogonality_report(&mixed), Err(Error::ShapeMismatch(..))));
    }

    #[test]
    fn json_dump() {
        let swap = AlgebraElement::from_permutation(Permutation::transposition(2, 1, 2).unwrap());
        let m = TensorOperator::realize(&swap.scale(&q(1, 2)), 2).unwrap();
        assert_eq!(
            serde_json::to_string(&m).unwrap(),
            r#"{"n":2,"N":2,"entries":[[0,0,"1/2"],[1,2,"1/2"],[2,1,"1/2"],[3,3,"1/2"]]}"#
        );
    }
}
