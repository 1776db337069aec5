//! Dense univariate polynomials in the formal variable `N`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, Zero};
use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::ser::{SerializeMap, SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

/// Polynomial with coefficients stored from the constant term upwards.
///
/// Trailing zero coefficients are never stored, so the zero polynomial has
/// no coefficients and structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

/// Polynomial with exact rational coefficients, used for traces.
pub type TracePolynomial = Polynomial<BigRational>;

impl<T: Clone + Num> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c · N^k`
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// `N + c`
    pub fn linear(c: T) -> Self {
        Self::new(vec![c, T::one()])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn map<U: Clone + Num>(&self, f: impl Fn(&T) -> U) -> Polynomial<U> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }
}

impl Polynomial<BigInt> {
    pub fn to_rational(&self) -> TracePolynomial {
        self.map(|c| BigRational::from_integer(c.clone()))
    }
}

impl<T: Clone + Num> Zero for Polynomial<T> {
    fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Clone + Num> One for Polynomial<T> {
    fn one() -> Self {
        Self::constant(T::one())
    }
}

impl<T: Clone + Num> Add<&Polynomial<T>> for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn add(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<T: Clone + Num> Add for Polynomial<T> {
    type Output = Polynomial<T>;

    fn add(self, rhs: Polynomial<T>) -> Polynomial<T> {
        &self + &rhs
    }
}

impl<T: Clone + Num> Sub<&Polynomial<T>> for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn sub(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<T: Clone + Num> Sub for Polynomial<T> {
    type Output = Polynomial<T>;

    fn sub(self, rhs: Polynomial<T>) -> Polynomial<T> {
        &self - &rhs
    }
}

impl<T: Clone + Num> Neg for Polynomial<T> {
    type Output = Polynomial<T>;

    fn neg(self) -> Polynomial<T> {
        Polynomial::zero() - self
    }
}

impl<T: Clone + Num> Mul<&Polynomial<T>> for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn mul(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

impl<T: Clone + Num> Mul for Polynomial<T> {
    type Output = Polynomial<T>;

    fn mul(self, rhs: Polynomial<T>) -> Polynomial<T> {
        &self * &rhs
    }
}

impl<T: Clone + Num + fmt::Display> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => write!(f, "N")?,
                1 => write!(f, "({c})·N")?,
                _ if c.is_one() => write!(f, "N^{k}")?,
                _ => write!(f, "({c})·N^{k}")?,
            }
        }
        Ok(())
    }
}

/// `{"coeffs":{"0":"0","1":"-1/3","3":"1/3"}}`: exponent keys in ascending
/// numeric order, the constant term always present, other zeros omitted.
impl<T: Clone + Num + fmt::Display> Serialize for Polynomial<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        struct Coeffs<'a, T>(&'a Polynomial<T>);

        impl<T: Clone + Num + fmt::Display> Serialize for Coeffs<'_, T> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let mut map = serializer.serialize_map(None)?;
                map.serialize_entry("0", &self.0.coeff(0).to_string())?;
                for (k, c) in self.0.coeffs.iter().enumerate().skip(1) {
                    if !c.is_zero() {
                        map.serialize_entry(&k.to_string(), &c.to_string())?;
                    }
                }
                map.end()
            }
        }

        let mut s = serializer.serialize_struct("Polynomial", 1)?;
        s.serialize_field("coeffs", &Coeffs(self))?;
        s.end()
    }
}

impl<'de, T> Deserialize<'de> for Polynomial<T>
where
    T: Clone + Num + FromStr,
    <T as FromStr>::Err: fmt::Display,
{
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            coeffs: CoeffMap,
        }

        struct CoeffMap(Vec<(usize, String)>);

        impl<'de> Deserialize<'de> for CoeffMap {
            fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
                struct V;
                impl<'de> Visitor<'de> for V {
                    type Value = CoeffMap;
                    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                        f.write_str("a map from exponent to coefficient string")
                    }
                    fn visit_map<A: MapAccess<'de>>(self, mut m: A) -> Result<CoeffMap, A::Error> {
                        let mut out = Vec::new();
                        while let Some((k, v)) = m.next_entry::<String, String>()? {
                            let k = k.parse().map_err(de::Error::custom)?;
                            out.push((k, v));
                        }
                        Ok(CoeffMap(out))
                    }
                }
                d.deserialize_map(V)
            }
        }

        let raw = Raw::deserialize(deserializer)?;
        let len = raw.coeffs.0.iter().map(|(k, _)| k + 1).max().unwrap_or(0);
        let mut coeffs = vec![T::zero(); len];
        for (k, v) in raw.coeffs.0 {
            coeffs[k] = v.parse().map_err(de::Error::custom)?;
        }
        Ok(Polynomial::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn trims_and_degrees() {
        let p = Polynomial::new(vec![q(1, 1), q(0, 1), q(0, 1)]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!(TracePolynomial::zero().degree(), None);
    }

    #[test]
    fn product_of_linear_factors() {
        // N (N + 1) (N - 1) = N^3 - N
        let p = Polynomial::linear(BigInt::from(0))
            * Polynomial::linear(BigInt::from(1))
            * Polynomial::linear(BigInt::from(-1));
        assert_eq!(p.coeffs(), &[0.into(), BigInt::from(-1), 0.into(), 1.into()]);
        assert_eq!(p.eval(&BigInt::from(3)), BigInt::from(24));
    }

    #[test]
    fn json_layout() {
        let p = Polynomial::new(vec![q(0, 1), q(-1, 3), q(0, 1), q(1, 3)]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"coeffs":{"0":"0","1":"-1/3","3":"1/3"}}"#);
        let back: TracePolynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn display() {
        let p = Polynomial::new(vec![q(0, 1), q(-1, 3), q(0, 1), q(1, 3)]);
        assert_eq!(p.to_string(), "(1/3)·N^3 + (-1/3)·N");
    }
}
