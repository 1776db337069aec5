//! The group algebra `A(S_n)` over the rationals: sparse formal sums
//! `Σ c_σ σ` with exact coefficients.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::config::Limits;
use crate::perm::Permutation;
use crate::polynomial::{Polynomial, TracePolynomial};
use crate::tableaux::YoungTableau;
use crate::{Error, Result};

pub type Rational = BigRational;

/// Element of `A(S_n)`. Zero coefficients are never stored, so structural
/// equality is algebra equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    degree: usize,
    terms: BTreeMap<Permutation, Rational>,
}

impl AlgebraElement {
    pub fn zero(degree: usize) -> Self {
        AlgebraElement {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// The unit `e` of `A(S_n)`.
    pub fn identity(degree: usize) -> Self {
        Self::from_permutation(Permutation::identity(degree))
    }

    pub fn from_permutation(p: Permutation) -> Self {
        let degree = p.degree();
        AlgebraElement {
            degree,
            terms: BTreeMap::from([(p, Rational::one())]),
        }
    }

    /// Sums repeated permutations and drops zero coefficients.
    pub fn from_terms(
        degree: usize,
        terms: impl IntoIterator<Item = (Permutation, Rational)>,
    ) -> Result<Self> {
        let mut out = Self::zero(degree);
        for (p, c) in terms {
            if p.degree() != degree {
                return Err(Error::DegreeMismatch(degree, p.degree()));
            }
            out.add_term(p, c);
        }
        Ok(out)
    }

    fn add_term(&mut self, p: Permutation, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(p) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Terms in canonical (lexicographic one-line) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, p: &Permutation) -> Rational {
        self.terms.get(p).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.degree);
        }
        AlgebraElement {
            degree: self.degree,
            terms: self.terms.iter().map(|(p, a)| (p.clone(), a * c)).collect(),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        Ok(out)
    }

    fn check_degree(&self, other: &Self) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        Ok(())
    }

    /// Bilinear extension of permutation composition.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.degree));
        }
        Ok(multiply_scaled(self, other).unwrap_or_else(|| multiply_rational(self, other)))
    }

    /// `Σ c_σ σ ↦ Σ c̄_σ σ⁻¹`; conjugation is trivial on rationals.
    pub fn involution(&self) -> Self {
        AlgebraElement {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(p, c)| (p.inverse(), c.clone()))
                .collect(),
        }
    }

    /// Image in `A(S_m)`, `m ≥ n`, acting trivially on slots `n+1..=m`.
    pub fn embed(&self, m: usize) -> Self {
        assert!(m >= self.degree);
        AlgebraElement {
            degree: m,
            terms: self.terms.iter().map(|(p, c)| (p.embed(m), c.clone())).collect(),
        }
    }

    pub fn is_idempotent(&self) -> bool {
        &(self * self) == self
    }

    /// `Σ_σ c_σ · N^{cycles(σ)}`, the trace on `(C^N)^{⊗n}` as a polynomial.
    pub fn trace_polynomial(&self) -> TracePolynomial {
        let mut coeffs = vec![Rational::zero(); self.degree + 1];
        for (p, c) in &self.terms {
            coeffs[p.cycle_count()] += c;
        }
        Polynomial::new(coeffs)
    }

    /// Contraction of the last tensor slot, with coefficients polynomial in
    /// `N`: fixed points of slot `n` contribute a loop factor `N`, other
    /// permutations have `n` spliced out of their cycle.
    pub fn partial_trace(&self) -> Result<PolyAlgebraElement> {
        if self.degree < 2 {
            return Err(Error::DegreeTooSmall {
                n: self.degree,
                min: 2,
            });
        }
        let mut out = PolyAlgebraElement::zero(self.degree - 1);
        let loop_factor = Polynomial::monomial(Rational::one(), 1);
        for (p, c) in &self.terms {
            let (q, fixed) = p.contract_last();
            let coeff = if fixed {
                loop_factor.scale(c)
            } else {
                Polynomial::constant(c.clone())
            };
            out.add_term(q, coeff);
        }
        Ok(out)
    }
}

/// Multiplication with all coefficients brought over common denominators
/// and accumulated in `i128`; `None` on overflow.
fn multiply_scaled(a: &AlgebraElement, b: &AlgebraElement) -> Option<AlgebraElement> {
    fn integerize(x: &AlgebraElement) -> Option<(BigInt, Vec<(&Permutation, i128)>)> {
        let denom = x
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let numerators = x
            .terms
            .iter()
            .map(|(p, c)| (c.numer() * (&denom / c.denom())).to_i128().map(|v| (p, v)))
            .collect::<Option<Vec<_>>>()?;
        Some((denom, numerators))
    }

    let (da, na) = integerize(a)?;
    let (db, nb) = integerize(b)?;
    let mut acc: HashMap<Permutation, i128> = HashMap::with_capacity(na.len() * nb.len());
    for &(p, x) in &na {
        for &(q, y) in &nb {
            let v = acc.entry(p.compose_unchecked(q)).or_insert(0);
            *v = v.checked_add(x.checked_mul(y)?)?;
        }
    }
    let denom = da * db;
    let terms = acc
        .into_iter()
        .filter(|(_, v)| *v != 0)
        .map(|(p, v)| (p, Rational::new(BigInt::from(v), denom.clone())))
        .collect();
    Some(AlgebraElement {
        degree: a.degree,
        terms,
    })
}

fn multiply_rational(a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
    let mut acc: HashMap<Permutation, Rational> = HashMap::new();
    for (p, x) in &a.terms {
        for (q, y) in &b.terms {
            *acc.entry(p.compose_unchecked(q)).or_insert_with(Rational::zero) += x * y;
        }
    }
    AlgebraElement {
        degree: a.degree,
        terms: acc.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;

    /// Panics on degree mismatch; [`AlgebraElement::multiply`] is the checked
    /// form.
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.multiply(rhs).expect("degree mismatch")
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;

    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.try_add(rhs).expect("degree mismatch")
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;

    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.try_add(&-rhs).expect("degree mismatch")
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;

    fn neg(self) -> AlgebraElement {
        self.scale(&-Rational::one())
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.terms.iter().enumerate() {
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            match (i, sign) {
                (0, "+") => {}
                (0, _) => write!(f, "-")?,
                _ => write!(f, " {sign} ")?,
            }
            if mag.is_one() {
                write!(f, "{p}")?;
            } else {
                write!(f, "{mag}·{p}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A(S_{})[{self}]", self.degree)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    perm: Vec<usize>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct ElementJson {
    n: usize,
    terms: Vec<TermJson>,
}

/// `{"n":3,"terms":[{"perm":[2,1,3],"coeff":"1/3"},…]}`, sorted by one-line form.
impl Serialize for AlgebraElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ElementJson {
            n: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(p, c)| TermJson {
                    perm: p.one_line(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for AlgebraElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = ElementJson::deserialize(d)?;
        let terms = raw
            .terms
            .into_iter()
            .map(|t| {
                let p = Permutation::from_one_line(&t.perm).map_err(D::Error::custom)?;
                let c: Rational = t.coeff.parse().map_err(D::Error::custom)?;
                Ok((p, c))
            })
            .collect::<std::result::Result<Vec<_>, D::Error>>()?;
        AlgebraElement::from_terms(raw.n, terms).map_err(D::Error::custom)
    }
}

/// Element of `A(S_n)` whose coefficients are polynomials in `N`, the
/// codomain of the algebraic partial trace.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyAlgebraElement {
    degree: usize,
    terms: BTreeMap<Permutation, TracePolynomial>,
}

impl PolyAlgebraElement {
    pub fn zero(degree: usize) -> Self {
        PolyAlgebraElement {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// `f(N) · A`.
    pub fn scaled(factor: &TracePolynomial, a: &AlgebraElement) -> Self {
        let mut out = Self::zero(a.degree);
        for (p, c) in a.terms() {
            out.add_term(p.clone(), factor.scale(c));
        }
        out
    }

    fn add_term(&mut self, p: Permutation, c: TracePolynomial) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(p.clone()).or_insert_with(Polynomial::zero);
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.terms.remove(&p);
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &TracePolynomial)> {
        self.terms.iter()
    }

    /// Specializes `N` to a concrete value.
    pub fn evaluate(&self, dim: &Rational) -> AlgebraElement {
        let mut out = AlgebraElement::zero(self.degree);
        for (p, c) in &self.terms {
            out.add_term(p.clone(), c.eval(dim));
        }
        out
    }
}

fn check_slots(n: usize, slots: &[usize]) -> Result<Vec<usize>> {
    let mut sorted = slots.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.is_empty() || sorted.len() != slots.len() || sorted[0] == 0 || *sorted.last().unwrap() > n
    {
        return Err(Error::InvalidSlots {
            slots: slots.to_vec(),
            n,
        });
    }
    Ok(sorted)
}

fn factorial(k: usize) -> BigInt {
    (1..=k).map(BigInt::from).product()
}

fn group_sum(n: usize, slots: &[usize], signed: bool) -> AlgebraElement {
    let mut out = AlgebraElement::zero(n);
    for p in Permutation::all_on(n, slots) {
        let c = if signed && p.sign() < 0 { -Rational::one() } else { Rational::one() };
        out.add_term(p, c);
    }
    out
}

/// `(1/k!) Σ σ` over permutations of the given slots, inside `A(S_n)`.
pub fn symmetrizer(n: usize, slots: &[usize]) -> Result<AlgebraElement> {
    let slots = check_slots(n, slots)?;
    let norm = Rational::new(BigInt::one(), factorial(slots.len()));
    Ok(group_sum(n, &slots, false).scale(&norm))
}

/// `(1/k!) Σ sign(σ) σ` over permutations of the given slots.
pub fn antisymmetrizer(n: usize, slots: &[usize]) -> Result<AlgebraElement> {
    let slots = check_slots(n, slots)?;
    let norm = Rational::new(BigInt::one(), factorial(slots.len()));
    Ok(group_sum(n, &slots, true).scale(&norm))
}

/// Checks, inside `A(S_n)`, the exact identities
///
/// `S_{1..k} = (1/k) S_{2..k} + ((k−1)/k) S_{2..k} (12) S_{2..k}` and
/// `A_{1..k} = (1/k) A_{2..k} − ((k−1)/k) A_{2..k} (12) A_{2..k}`.
pub fn symmetrizer_recursion_check(n: usize, k: usize) -> Result<bool> {
    if k < 2 {
        return Err(Error::DegreeTooSmall { n: k, min: 2 });
    }
    if k > n {
        return Err(Error::InvalidSlots {
            slots: (1..=k).collect(),
            n,
        });
    }
    let all: Vec<usize> = (1..=k).collect();
    let tail: Vec<usize> = (2..=k).collect();
    let swap = AlgebraElement::from_permutation(Permutation::transposition(n, 1, 2)?);
    let first = Rational::new(BigInt::one(), BigInt::from(k));
    let rest = Rational::new(BigInt::from(k - 1), BigInt::from(k));

    let s_tail = symmetrizer(n, &tail)?;
    let s_rhs = &s_tail.scale(&first) + &(&(&s_tail * &swap) * &s_tail).scale(&rest);
    let a_tail = antisymmetrizer(n, &tail)?;
    let a_rhs = &a_tail.scale(&first) - &(&(&a_tail * &swap) * &a_tail).scale(&rest);

    Ok(symmetrizer(n, &all)? == s_rhs && antisymmetrizer(n, &all)? == a_rhs)
}

/// Unnormalized row symmetrizer `s_T = Σ h` over row-preserving permutations.
pub fn row_symmetrizer(t: &YoungTableau) -> AlgebraElement {
    let n = t.n();
    t.rows()
        .iter()
        .filter(|r| r.len() > 1)
        .fold(AlgebraElement::identity(n), |acc, row| &acc * &group_sum(n, row, false))
}

/// Unnormalized column antisymmetrizer `a_T = Σ sign(v) v` over
/// column-preserving permutations.
pub fn column_antisymmetrizer(t: &YoungTableau) -> AlgebraElement {
    let n = t.n();
    t.columns()
        .iter()
        .filter(|c| c.len() > 1)
        .fold(AlgebraElement::identity(n), |acc, col| &acc * &group_sum(n, col, true))
}

/// Conventional Young operator `Y_T = (1/|T|) s_T a_T` of a standard tableau.
pub fn young_operator(t: &YoungTableau) -> Result<AlgebraElement> {
    young_operator_with(t, false)
}

/// [`young_operator`], optionally accepting non-standard fillings (which
/// use the same normalization `|T|`).
pub fn young_operator_with(t: &YoungTableau, allow_nonstandard: bool) -> Result<AlgebraElement> {
    if !allow_nonstandard && !t.is_standard() {
        return Err(Error::NonStandard(t.to_string()));
    }
    let norm = Rational::new(BigInt::one(), BigInt::from(t.shape().hook_product()));
    Ok((&row_symmetrizer(t) * &column_antisymmetrizer(t)).scale(&norm))
}

/// Greatest degree allowed for the exhaustive σ loops.
fn check_loop_cap(n: usize, limits: &Limits) -> Result<()> {
    if n > limits.check_max_n {
        return Err(Error::OutOfRange {
            n,
            max: limits.check_max_n,
        });
    }
    Ok(())
}

/// True iff `e σ e` is a scalar multiple of `e` for every `σ ∈ S_n`.
pub fn primitivity_check(e: &AlgebraElement) -> Result<bool> {
    primitivity_check_with(e, &Limits::default())
}

pub fn primitivity_check_with(e: &AlgebraElement, limits: &Limits) -> Result<bool> {
    check_loop_cap(e.degree, limits)?;
    if !e.is_idempotent() {
        return Err(Error::NotIdempotent);
    }
    let Some((anchor, anchor_coeff)) = e.terms().next() else {
        // the zero idempotent is not primitive
        return Ok(false);
    };
    for sigma in Permutation::all(e.degree) {
        let ese = &(e * &AlgebraElement::from_permutation(sigma)) * e;
        let lambda = ese.coefficient(anchor) / anchor_coeff;
        if ese != e.scale(&lambda) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True ("inequivalent") iff `e1 σ e2 = 0` for every `σ ∈ S_n`.
pub fn inequivalence_check(e1: &AlgebraElement, e2: &AlgebraElement) -> Result<bool> {
    inequivalence_check_with(e1, e2, &Limits::default())
}

pub fn inequivalence_check_with(
    e1: &AlgebraElement,
    e2: &AlgebraElement,
    limits: &Limits,
) -> Result<bool> {
    e1.check_degree(e2)?;
    check_loop_cap(e1.degree, limits)?;
    if !e1.is_idempotent() || !e2.is_idempotent() {
        return Err(Error::NotIdempotent);
    }
    Ok(Permutation::all(e1.degree).into_iter().all(|sigma| {
        (&(e1 * &AlgebraElement::from_permutation(sigma)) * e2).is_zero()
    }))
}
