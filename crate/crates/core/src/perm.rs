//! Permutations of `{1..n}` in one-line form.
//!
//! Composition `a ∘ b` applies `b` first, so that the tensor realization is
//! a homomorphism: `D(a ∘ b) = D(a) D(b)`.

use std::fmt;
use std::ops::Mul;

use crate::{Error, Result};

/// Bijection of `{1..n}`. Stored 0-based; every public index is 1-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u8]>,
}

impl Permutation {
    pub const MAX_DEGREE: usize = u8::MAX as usize;

    pub fn identity(n: usize) -> Self {
        assert!(n <= Self::MAX_DEGREE);
        Permutation {
            images: (0..n as u8).collect(),
        }
    }

    /// From the 1-based one-line form `[σ(1), …, σ(n)]`.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in images {
            if i == 0 || i > n || n > Self::MAX_DEGREE || std::mem::replace(&mut seen[i - 1], true) {
                return Err(Error::InvalidPermutation(images.to_vec()));
            }
        }
        Ok(Permutation {
            images: images.iter().map(|&i| (i - 1) as u8).collect(),
        })
    }

    /// From disjoint cycles with 1-based entries, e.g. `&[&[1, 3, 2]]`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (idx, &a) in cycle.iter().enumerate() {
                let b = cycle[(idx + 1) % cycle.len()];
                if a == 0 || a > n || b == 0 || b > n || std::mem::replace(&mut touched[a - 1], true) {
                    return Err(Error::InvalidPermutation(cycle.to_vec()));
                }
                images[a - 1] = b;
            }
        }
        Self::from_one_line(&images)
    }

    /// Transposition of slots `i` and `j`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        if i == j {
            return Err(Error::InvalidPermutation(vec![i, j]));
        }
        Self::from_cycles(n, &[&[i, j]])
    }

    pub(crate) fn from_raw(images: Box<[u8]>) -> Self {
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `σ(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.images
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    /// `a ∘ b`: apply `b`, then `a`.
    pub fn compose(a: &Permutation, b: &Permutation) -> Result<Permutation> {
        if a.degree() != b.degree() {
            return Err(Error::DegreeMismatch(a.degree(), b.degree()));
        }
        Ok(a.compose_unchecked(b))
    }

    pub(crate) fn compose_unchecked(&self, b: &Permutation) -> Permutation {
        Permutation {
            images: b.images.iter().map(|&i| self.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u8; self.degree()].into_boxed_slice();
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize] = i as u8;
        }
        Permutation { images }
    }

    /// Disjoint cycles including fixed points, each starting at its smallest
    /// element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.images[i] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Number of cycles, counting fixed points.
    pub fn cycle_count(&self) -> usize {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut count = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i] as usize;
            }
        }
        count
    }

    /// `+1` for even, `-1` for odd permutations.
    pub fn sign(&self) -> i32 {
        if (self.degree() - self.cycle_count()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Extension to degree `m ≥ n` fixing slots `n+1..=m`.
    pub fn embed(&self, m: usize) -> Permutation {
        assert!(m >= self.degree() && m <= Self::MAX_DEGREE);
        Permutation {
            images: self
                .images
                .iter()
                .copied()
                .chain(self.degree() as u8..m as u8)
                .collect(),
        }
    }

    /// Contracts the last slot: returns the permutation of `{1..n-1}` and
    /// whether the last slot was a fixed point. A non-fixed last slot is
    /// spliced out of its cycle, `σ'(σ⁻¹(n)) = σ(n)`.
    pub fn contract_last(&self) -> (Permutation, bool) {
        let n = self.degree();
        assert!(n >= 1);
        let last = (n - 1) as u8;
        let image_of_last = self.images[n - 1];
        let mut images: Vec<u8> = self.images[..n - 1].to_vec();
        if image_of_last == last {
            return (Permutation::from_raw(images.into()), true);
        }
        let pre = images.iter().position(|&v| v == last).expect("bijection");
        images[pre] = image_of_last;
        (Permutation::from_raw(images.into()), false)
    }

    /// All permutations of degree `n` in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let slots: Vec<usize> = (1..=n).collect();
        Self::all_on(n, &slots)
    }

    /// All permutations of degree `n` that move only the given 1-based
    /// slots, in lexicographic one-line order.
    pub fn all_on(n: usize, slots: &[usize]) -> Vec<Permutation> {
        fn go(
            base: &mut Vec<u8>,
            slots: &[usize],
            pos: usize,
            used: &mut Vec<bool>,
            out: &mut Vec<Permutation>,
        ) {
            if pos == slots.len() {
                out.push(Permutation::from_raw(base.clone().into_boxed_slice()));
                return;
            }
            for (idx, &target) in slots.iter().enumerate() {
                if used[idx] {
                    continue;
                }
                used[idx] = true;
                base[slots[pos] - 1] = (target - 1) as u8;
                go(base, slots, pos + 1, used, out);
                used[idx] = false;
            }
        }
        let mut sorted = slots.to_vec();
        sorted.sort_unstable();
        let mut base: Vec<u8> = (0..n as u8).collect();
        let mut out = Vec::new();
        go(&mut base, &sorted, 0, &mut vec![false; sorted.len()], &mut out);
        out
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// Panics on degree mismatch; use [`Permutation::compose`] for a checked
    /// version.
    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch");
        self.compose_unchecked(rhs)
    }
}

/// Cycle notation without fixed points, `e` for the identity.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.degree() <= 9 { "" } else { "," };
        let mut wrote = false;
        for cycle in self.cycles().into_iter().filter(|c| c.len() > 1) {
            let parts: Vec<String> = cycle.iter().map(ToString::to_string).collect();
            write!(f, "({})", parts.join(sep))?;
            wrote = true;
        }
        if !wrote {
            write!(f, "e")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.one_line())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn composition_applies_right_factor_first() {
        let p = &cyc(3, &[&[1, 2]]) * &cyc(3, &[&[1, 3]]);
        assert_eq!(p.one_line(), vec![3, 1, 2]);
        assert_eq!(p, cyc(3, &[&[1, 3, 2]]));
        assert_eq!(p.to_string(), "(132)");
    }

    #[test]
    fn composition_matches_permutation_matrices() {
        // M(σ) e_i = e_{σ(i)}; M(a) M(b) must equal M(a ∘ b)
        let matrix = |p: &Permutation| {
            let n = p.degree();
            let mut m = vec![vec![0i32; n]; n];
            for i in 1..=n {
                m[p.apply(i) - 1][i - 1] = 1;
            }
            m
        };
        let (a, b) = (cyc(3, &[&[1, 2]]), cyc(3, &[&[1, 3]]));
        let (ma, mb) = (matrix(&a), matrix(&b));
        let mut prod = vec![vec![0i32; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                prod[i][j] = (0..3).map(|k| ma[i][k] * mb[k][j]).sum();
            }
        }
        assert_eq!(prod, matrix(&(&a * &b)));
    }

    #[test]
    fn degree_mismatch() {
        let err = Permutation::compose(&Permutation::identity(2), &Permutation::identity(3));
        assert_eq!(err, Err(Error::DegreeMismatch(2, 3)));
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_one_line(&[1, 1]).is_err());
        assert!(Permutation::from_one_line(&[0, 1]).is_err());
        assert!(Permutation::from_one_line(&[3, 1]).is_err());
    }

    #[test]
    fn enumeration() {
        assert_eq!(Permutation::all(4).len(), 24);
        let sub = Permutation::all_on(5, &[2, 4]);
        assert_eq!(sub.len(), 2);
        assert_eq!(sub[1], cyc(5, &[&[2, 4]]));
        assert_eq!(Permutation::identity(4).cycle_count(), 4);
    }

    #[test]
    fn splicing() {
        let (p, fixed) = cyc(3, &[&[1, 2]]).contract_last();
        assert!(fixed);
        assert_eq!(p, cyc(2, &[&[1, 2]]));
        let (p, fixed) = cyc(3, &[&[1, 3, 2]]).contract_last();
        assert!(!fixed);
        assert_eq!(p, cyc(2, &[&[1, 2]]));
        let (p, _) = cyc(3, &[&[1, 3]]).contract_last();
        assert!(p.is_identity());
    }

    fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
        Just((1..=n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_one_line(&v).unwrap())
    }

    proptest! {
        #[test]
        fn group_laws(a in arb_perm(6), b in arb_perm(6), c in arb_perm(6)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert!((&a * &a.inverse()).is_identity());
            prop_assert_eq!((&a * &b).sign(), a.sign() * b.sign());
            prop_assert_eq!(&a * &Permutation::identity(6), a.clone());
        }

        #[test]
        fn cycle_round_trip(a in arb_perm(7)) {
            let cycles = a.cycles();
            let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
            prop_assert_eq!(Permutation::from_cycles(7, &refs).unwrap(), a.clone());
            prop_assert_eq!(cycles.len(), a.cycle_count());
        }
    }
}
