//! Young diagrams, standard Young tableaux, hook lengths and the `SU(N)`
//! dimension polynomial.
//!
//! Cell coordinates are 1-based `(row j, column k)`. Diagrams store only
//! their row lengths; column lengths are derived on demand.

use std::cmp::{Ordering, Reverse};
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::config::Limits;
use crate::polynomial::{Polynomial, TracePolynomial};
use crate::{Error, Result};

/// A partition `λ_1 ≥ … ≥ λ_r ≥ 1` of `n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct YoungDiagram {
    rows: Vec<usize>,
}

impl YoungDiagram {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.is_empty() || rows.contains(&0) || rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidDiagram(rows));
        }
        Ok(YoungDiagram { rows })
    }

    /// All partitions of `n`, largest first row first: `(n), (n-1,1), …, (1^n)`.
    pub fn partitions(n: usize) -> Vec<YoungDiagram> {
        fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<YoungDiagram>) {
            if rest == 0 {
                out.push(YoungDiagram { rows: prefix.clone() });
                return;
            }
            for part in (1..=rest.min(max)).rev() {
                prefix.push(part);
                go(rest - part, part, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            go(n, n, &mut Vec::new(), &mut out);
        }
        out
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn column_count(&self) -> usize {
        self.rows[0]
    }

    /// Column lengths `μ_k = #{j : λ_j ≥ k}`.
    pub fn columns(&self) -> Vec<usize> {
        (1..=self.column_count())
            .map(|k| self.rows.iter().take_while(|&&l| l >= k).count())
            .collect()
    }

    pub fn conjugate(&self) -> YoungDiagram {
        YoungDiagram { rows: self.columns() }
    }

    pub fn contains_cell(&self, j: usize, k: usize) -> bool {
        j >= 1 && k >= 1 && j <= self.rows.len() && k <= self.rows[j - 1]
    }

    /// Hook length `λ_j − k + μ_k − j + 1` of cell `(j, k)`.
    pub fn hook_length(&self, j: usize, k: usize) -> usize {
        assert!(self.contains_cell(j, k), "cell ({j},{k}) outside {self}");
        let mu_k = self.rows.iter().take_while(|&&l| l >= k).count();
        self.rows[j - 1] - k + mu_k - j + 1
    }

    /// Product of all hook lengths, the normalization `|T|` of every tableau
    /// of this shape.
    pub fn hook_product(&self) -> BigUint {
        let columns = self.columns();
        let mut product = BigUint::one();
        for (j, &len) in self.rows.iter().enumerate() {
            for k in 0..len {
                product *= BigUint::from(len - (k + 1) + columns[k] - (j + 1) + 1);
            }
        }
        product
    }

    /// Number of standard tableaux of this shape, `n! / |λ|`.
    pub fn syt_count(&self) -> BigUint {
        let factorial: BigUint = (1..=self.n()).map(BigUint::from).product();
        factorial / self.hook_product()
    }

    /// `f(N) = ∏_{cells (j,k)} (N + k − j)` in expanded form.
    pub fn dimension_polynomial(&self) -> Polynomial<BigInt> {
        let mut f = Polynomial::constant(BigInt::one());
        for (j, &len) in self.rows.iter().enumerate() {
            for k in 0..len {
                let content = BigInt::from(k as i64) - BigInt::from(j as i64);
                f = &f * &Polynomial::linear(content);
            }
        }
        f
    }

    /// `f(N) / |λ|` as a rational polynomial.
    pub fn dimension_ratio(&self) -> TracePolynomial {
        let hook = BigRational::from_integer(BigInt::from(self.hook_product()));
        self.dimension_polynomial()
            .to_rational()
            .scale(&hook.recip())
    }

    /// Dimension `f(N) / |λ|` of the corresponding irreducible subspace of
    /// `(C^N)^{⊗n}`.
    pub fn dimension(&self, dim: u64) -> BigUint {
        let f = self.dimension_polynomial().eval(&BigInt::from(dim));
        let hook = BigInt::from(self.hook_product());
        debug_assert!((&f % &hook).is_zero());
        (f / hook).to_biguint().expect("f(N) is nonnegative for N >= 1")
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.rows.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Serialize, Deserialize)]
struct DiagramJson {
    shape: Vec<usize>,
}

impl Serialize for YoungDiagram {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DiagramJson { shape: self.rows.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for YoungDiagram {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = DiagramJson::deserialize(d)?;
        YoungDiagram::new(raw.shape).map_err(serde::de::Error::custom)
    }
}

/// A Young diagram filled bijectively with `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct YoungTableau {
    shape: YoungDiagram,
    rows: Vec<Vec<usize>>,
}

/// Result of removing the box holding `n` from a standard tableau.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Parent {
    pub tableau: YoungTableau,
    /// Length of the removed box's row in the original tableau.
    pub p: usize,
    /// Length of the removed box's column in the original tableau.
    pub q: usize,
}

impl YoungTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = YoungDiagram::new(rows.iter().map(Vec::len).collect())
            .map_err(|e| Error::InvalidTableau(e.to_string()))?;
        let n = shape.n();
        let entries: BTreeSet<usize> = rows.iter().flatten().copied().collect();
        if entries.len() != n || entries.first() != Some(&1) || entries.last() != Some(&n) {
            return Err(Error::InvalidTableau(format!(
                "entries {rows:?} are not a bijection onto 1..={n}"
            )));
        }
        Ok(YoungTableau { shape, rows })
    }

    /// Like [`YoungTableau::new`] but additionally rejects non-standard fillings.
    pub fn standard(rows: Vec<Vec<usize>>) -> Result<Self> {
        let t = Self::new(rows)?;
        if !t.is_standard() {
            return Err(Error::NonStandard(t.to_string()));
        }
        Ok(t)
    }

    pub fn shape(&self) -> &YoungDiagram {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    /// Entries of each column, top to bottom.
    pub fn columns(&self) -> Vec<Vec<usize>> {
        (0..self.shape.column_count())
            .map(|k| {
                self.rows
                    .iter()
                    .take_while(|r| r.len() > k)
                    .map(|r| r[k])
                    .collect()
            })
            .collect()
    }

    /// Entry at 1-based cell `(j, k)`.
    pub fn entry(&self, j: usize, k: usize) -> Option<usize> {
        self.rows.get(j.checked_sub(1)?)?.get(k.checked_sub(1)?).copied()
    }

    /// 1-based cell `(j, k)` holding `value`.
    pub fn position(&self, value: usize) -> Option<(usize, usize)> {
        self.rows.iter().enumerate().find_map(|(j, row)| {
            row.iter().position(|&v| v == value).map(|k| (j + 1, k + 1))
        })
    }

    pub fn is_standard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = self
            .rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(below, above)| above < below));
        rows_ok && cols_ok
    }

    /// Rows concatenated top to bottom.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// Drops the box holding `n`, reporting the row length `p` and column
    /// length `q` through that box.
    pub fn parent(&self) -> Result<Parent> {
        if !self.is_standard() {
            return Err(Error::NonStandard(self.to_string()));
        }
        let n = self.n();
        if n < 2 {
            return Err(Error::DegreeTooSmall { n, min: 2 });
        }
        // n sits in an outer corner of a standard tableau
        let (j, k) = self.position(n).expect("bijective filling");
        let mut rows = self.rows.clone();
        rows[j - 1].pop();
        if rows[j - 1].is_empty() {
            rows.pop();
        }
        let tableau = YoungTableau::new(rows).expect("removing a corner keeps a valid tableau");
        Ok(Parent { tableau, p: k, q: j })
    }

    /// Construction history `T_1, T_2, …, T` obtained by repeatedly
    /// removing the highest box, smallest first.
    pub fn history(&self) -> Result<Vec<YoungTableau>> {
        let mut chain = vec![self.clone()];
        while chain.last().unwrap().n() > 1 {
            let parent = chain.last().unwrap().parent()?.tableau;
            chain.push(parent);
        }
        chain.reverse();
        Ok(chain)
    }
}

impl Ord for YoungTableau {
    /// Lexicographic on the reading word; ties (same word, different shape)
    /// put the shape with the longer leading rows first.
    fn cmp(&self, other: &Self) -> Ordering {
        (self.reading_word(), Reverse(&self.shape))
            .cmp(&(other.reading_word(), Reverse(&other.shape)))
    }
}

impl PartialOrd for YoungTableau {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Compact `row/row/…` form; entries are run together when `n ≤ 9` and
/// comma-separated otherwise.
impl fmt::Display for YoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n() <= 9 { "" } else { "," };
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep))
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

impl FromStr for YoungTableau {
    type Err = Error;

    /// Accepts the compact form `"123/45"`, a comma-separated form
    /// `"1,2,3/4,5"`, or the JSON object encoding.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('{') {
            return serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()));
        }
        let rows = s
            .split('/')
            .map(|row| {
                let row = row.trim();
                if row.is_empty() {
                    return Err(Error::Parse(format!("empty row in {s:?}")));
                }
                if row.contains(',') {
                    row.split(',')
                        .map(|v| v.trim().parse().map_err(|_| Error::Parse(format!("bad entry {v:?}"))))
                        .collect()
                } else {
                    row.chars()
                        .map(|c| {
                            c.to_digit(10)
                                .filter(|&d| d > 0)
                                .map(|d| d as usize)
                                .ok_or_else(|| Error::Parse(format!("bad entry {c:?} in {s:?}")))
                        })
                        .collect()
                }
            })
            .collect::<Result<Vec<Vec<usize>>>>()?;
        YoungTableau::new(rows)
    }
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    shape: Vec<usize>,
    rows: Vec<Vec<usize>>,
}

impl Serialize for YoungTableau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TableauJson {
            shape: self.shape.rows.clone(),
            rows: self.rows.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for YoungTableau {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = TableauJson::deserialize(d)?;
        let t = YoungTableau::new(raw.rows).map_err(serde::de::Error::custom)?;
        if t.shape.rows != raw.shape {
            return Err(serde::de::Error::custom(format!(
                "shape {:?} does not match rows of {t}",
                raw.shape
            )));
        }
        Ok(t)
    }
}

/// All standard Young tableaux with `n` boxes in canonical order, with the
/// default size limit.
pub fn enumerate_syt(n: usize) -> Result<Vec<YoungTableau>> {
    enumerate_syt_with(n, &Limits::default())
}

pub fn enumerate_syt_with(n: usize, limits: &Limits) -> Result<Vec<YoungTableau>> {
    limits.check_n(n)?;
    let mut level = vec![YoungTableau::new(vec![vec![1]]).unwrap()];
    for m in 2..=n {
        let mut next = Vec::new();
        for t in &level {
            // append m to every row end that keeps the shape a partition,
            // plus a new bottom row
            for j in 0..=t.rows.len() {
                let fits = match j {
                    0 => true,
                    _ if j == t.rows.len() => true,
                    _ => t.rows[j].len() < t.rows[j - 1].len(),
                };
                if !fits {
                    continue;
                }
                let mut rows = t.rows.clone();
                if j == rows.len() {
                    rows.push(vec![m]);
                } else {
                    rows[j].push(m);
                }
                next.push(YoungTableau::new(rows).unwrap());
            }
        }
        level = next;
    }
    level.sort();
    Ok(level)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> YoungTableau {
        s.parse().unwrap()
    }

    fn d(rows: &[usize]) -> YoungDiagram {
        YoungDiagram::new(rows.to_vec()).unwrap()
    }

    #[test]
    fn hook_products() {
        assert_eq!(d(&[3, 2]).hook_product(), BigUint::from(24u32));
        assert_eq!(d(&[1]).hook_product(), BigUint::from(1u32));
        assert_eq!(d(&[2, 1]).hook_product(), BigUint::from(3u32));
        let hooks: Vec<usize> = [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2)]
            .iter()
            .map(|&(j, k)| d(&[3, 2]).hook_length(j, k))
            .collect();
        assert_eq!(hooks, vec![4, 3, 1, 2, 1]);
    }

    #[test]
    fn rejects_bad_diagrams() {
        assert!(YoungDiagram::new(vec![]).is_err());
        assert!(YoungDiagram::new(vec![1, 2]).is_err());
        assert!(YoungDiagram::new(vec![2, 0]).is_err());
    }

    #[test]
    fn conjugation() {
        let lambda = d(&[4, 2, 1]);
        assert_eq!(lambda.columns(), vec![3, 2, 1, 1]);
        assert_eq!(lambda.conjugate().conjugate(), lambda);
    }

    #[test]
    fn small_syt_sets() {
        let two: Vec<String> = enumerate_syt(2).unwrap().iter().map(ToString::to_string).collect();
        assert_eq!(two, vec!["12", "1/2"]);
        let three: Vec<String> = enumerate_syt(3).unwrap().iter().map(ToString::to_string).collect();
        assert_eq!(three, vec!["123", "12/3", "1/2/3", "13/2"]);
        assert_eq!(enumerate_syt(5).unwrap().len(), 26);
        assert_eq!(enumerate_syt(0), Err(Error::OutOfRange { n: 0, max: 7 }));
        assert!(enumerate_syt(8).is_err());
    }

    #[test]
    fn parents() {
        let p = t("123/45").parent().unwrap();
        assert_eq!((p.tableau.to_string(), p.p, p.q), ("123/4".into(), 2, 2));
        let p = t("1/2").parent().unwrap();
        assert_eq!((p.tableau.to_string(), p.p, p.q), ("1".into(), 1, 2));
        let p = t("135/24").parent().unwrap();
        assert_eq!((p.tableau.to_string(), p.p, p.q), ("13/24".into(), 3, 1));
        assert!(matches!(t("21").parent(), Err(Error::NonStandard(_))));
        assert!(t("1").parent().is_err());
    }

    #[test]
    fn content_factor_of_removed_box() {
        // (N + p − q) must be the factor the removed box contributes to f(N)
        for tab in enumerate_syt(5).unwrap() {
            let par = tab.parent().unwrap();
            let ratio = tab.shape().dimension_polynomial();
            let expected = &par.tableau.shape().dimension_polynomial()
                * &Polynomial::linear(BigInt::from(par.p as i64 - par.q as i64));
            assert_eq!(ratio, expected, "{tab}");
        }
    }

    #[test]
    fn dimension_polynomials() {
        assert_eq!(d(&[1]).dimension_polynomial().coeffs(), &[0.into(), BigInt::from(1)]);
        let col = d(&[1, 1, 1, 1]);
        assert!(col.dimension_polynomial().eval(&BigInt::from(3)).is_zero());
        assert_eq!(d(&[2, 1]).dimension_polynomial().eval(&BigInt::from(3)), BigInt::from(24));
        assert_eq!(d(&[2, 1]).dimension(3), BigUint::from(8u32));
    }

    #[test]
    fn parsing() {
        assert_eq!(t("1,2,3/4,5"), t("123/45"));
        let json = r#"{"shape":[3,2],"rows":[[1,2,3],[4,5]]}"#;
        assert_eq!(t(json), t("123/45"));
        assert_eq!(serde_json::to_string(&t("123/45")).unwrap(), json);
        assert!("12/".parse::<YoungTableau>().is_err());
        assert!("12/4".parse::<YoungTableau>().is_err());
        assert!("1/23".parse::<YoungTableau>().is_err());
        assert!(r#"{"shape":[2,2],"rows":[[1,2,3],[4,5]]}"#.parse::<YoungTableau>().is_err());
        assert_eq!(serde_json::to_string(&d(&[3, 2])).unwrap(), r#"{"shape":[3,2]}"#);
    }

    #[test]
    fn history_of_littlewood_tableau() {
        let h: Vec<String> = t("135/24").history().unwrap().iter().map(ToString::to_string).collect();
        assert_eq!(h, vec!["1", "1/2", "13/2", "13/24", "135/24"]);
    }
}
