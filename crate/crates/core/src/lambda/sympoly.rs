use std::collections::BTreeMap;

use crate::combinatorics::{compositions, Partition};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A symmetric polynomial in `x_1..x_N`, stored as exponent vector ↦ coefficient.
#[derive(Clone, PartialEq, Debug)]
pub struct SymPolyN<T> {
    n_vars: usize,
    terms: BTreeMap<Vec<usize>, T>,
}

impl<T: Scalar> SymPolyN<T> {
    /// Checks that every exponent vector has length `n_vars` and that the
    /// polynomial is invariant under permuting the variables.
    pub fn new(n_vars: usize, terms: BTreeMap<Vec<usize>, T>) -> Result<Self> {
        if let Some(bad) = terms.keys().find(|e| e.len() != n_vars) {
            return Err(Error::Domain(format!(
                "exponent vector {bad:?} does not have {n_vars} entries"
            )));
        }
        let mut out = SymPolyN { n_vars, terms };
        out.terms.retain(|_, c| !c.is_zero());
        // Adjacent transpositions generate S_N.
        for (e, c) in &out.terms {
            for i in 1..n_vars {
                let mut swapped = e.clone();
                swapped.swap(i - 1, i);
                if out.terms.get(&swapped) != Some(c) {
                    return Err(Error::Domain(format!(
                        "polynomial is not symmetric: {e:?} and {swapped:?} differ"
                    )));
                }
            }
        }
        Ok(out)
    }

    pub fn zero(n_vars: usize) -> Self {
        SymPolyN {
            n_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n_vars: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![0; n_vars], T::one());
        SymPolyN { n_vars, terms }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &T)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exponents: &[usize]) -> T {
        self.terms.get(exponents).cloned().unwrap_or_else(T::zero)
    }

    /// `x_1^k + … + x_N^k`; `k = 0` gives the constant `N`.
    pub fn power_sum(k: usize, n_vars: usize) -> Self {
        let mut terms = BTreeMap::new();
        for i in 0..n_vars {
            let mut e = vec![0; n_vars];
            e[i] = k;
            let slot = terms.entry(e).or_insert_with(T::zero);
            *slot = slot.clone() + T::one();
        }
        SymPolyN { n_vars, terms }
    }

    /// `∏ p_k` over the parts of `monomial`.
    pub fn power_sum_product(monomial: &Partition, n_vars: usize) -> Self {
        monomial
            .parts()
            .iter()
            .fold(Self::one(n_vars), |acc, &k| acc.mul(&Self::power_sum(k, n_vars)))
    }

    /// Complete homogeneous `h_k`: every monomial of degree `k` with coefficient 1.
    pub fn complete_homogeneous(k: usize, n_vars: usize) -> Self {
        let mut terms = BTreeMap::new();
        for e in compositions(k, n_vars) {
            terms.insert(e, T::one());
        }
        SymPolyN { n_vars, terms }
    }

    /// Elementary `e_k`: squarefree monomials of degree `k`.
    pub fn elementary(k: usize, n_vars: usize) -> Self {
        let mut terms = BTreeMap::new();
        for e in compositions(k, n_vars) {
            if e.iter().all(|&x| x <= 1) {
                terms.insert(e, T::one());
            }
        }
        SymPolyN { n_vars, terms }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n_vars, other.n_vars, "variable counts differ");
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let slot = terms.entry(e.clone()).or_insert_with(T::zero);
            *slot = slot.clone() + c.clone();
        }
        terms.retain(|_, c| !c.is_zero());
        SymPolyN {
            n_vars: self.n_vars,
            terms,
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-T::one())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero(self.n_vars);
        }
        SymPolyN {
            n_vars: self.n_vars,
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (e.clone(), x.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n_vars, other.n_vars, "variable counts differ");
        let mut terms: BTreeMap<Vec<usize>, T> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<usize> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                let slot = terms.entry(e).or_insert_with(T::zero);
                *slot = slot.clone() + ca.clone() * cb.clone();
            }
        }
        terms.retain(|_, c| !c.is_zero());
        SymPolyN {
            n_vars: self.n_vars,
            terms,
        }
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(self.n_vars), |acc, _| acc.mul(self))
    }

    /// Value at `x_1 = … = x_N = 1`.
    pub fn eval_at_ones(&self) -> T {
        self.terms.values().fold(T::zero(), |acc, c| acc + c.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type P = SymPolyN<BigRational>;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn symmetry_checked_on_construction() {
        let mut terms = BTreeMap::new();
        terms.insert(vec![1, 0], r(1));
        assert!(P::new(2, terms.clone()).is_err());
        terms.insert(vec![0, 1], r(1));
        assert_eq!(P::new(2, terms).unwrap(), P::power_sum(1, 2));
        let mut wrong_len = BTreeMap::new();
        wrong_len.insert(vec![1], r(1));
        assert!(P::new(2, wrong_len).is_err());
    }

    #[test]
    fn newton_identity_two_variables() {
        // p_1^2 = p_2 + 2 e_2
        let lhs = P::power_sum(1, 2).pow(2);
        let rhs = P::power_sum(2, 2).add(&P::elementary(2, 2).scale(&r(2)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn complete_homogeneous_counts() {
        // h_k(1,...,1) = C(N+k-1, k)
        assert_eq!(P::complete_homogeneous(3, 3).eval_at_ones(), r(10));
        assert_eq!(P::elementary(2, 4).eval_at_ones(), r(6));
        assert_eq!(P::elementary(3, 2), P::zero(2));
    }

}
