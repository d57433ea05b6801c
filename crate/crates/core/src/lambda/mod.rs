//! The ring of symmetric functions in power-sum generators, with Adams operations.
//!
//! Elements are weight-truncated: `N_k` has weight `k`, and a [`LambdaElement`]
//! with weight cap `W` is known modulo monomials of weight above `W`.
//! Coefficients are q-series, so one type covers `Λ ⊗ Q[[q]]`.
//!
//! Two λ-algebras are provided as marker types:
//! - [`PowerSums`]: free on `N_1, N_2, …` with `Ψ^r(N_m) = N_{rm}`;
//! - [`Rank1`]: `Q[x]` with `Ψ^r(x) = x^r`, the one-variable specialization
//!   where every `N_k` becomes `x^k`.

mod schur;
mod sympoly;

pub use schur::{schur, schur_dual, schur_weyl_lhs, schur_weyl_rhs};
pub use sympoly::SymPolyN;

use std::collections::BTreeMap;
use std::fmt::{self, Debug};
use std::marker::PhantomData;

use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::series::TruncSeries;

/// A λ-algebra presented as a quotient of the power-sum ring.
pub trait LambdaAlgebra:
    Copy + Clone + Debug + Default + PartialEq + Eq + Send + Sync + 'static
{
    const NAME: &'static str;

    /// Largest number of variables the algebra can be specialized to.
    const MAX_VARIABLES: Option<usize>;

    /// Canonical representative of the power-sum monomial `∏ N_k`, one `k` per part.
    fn normalize(monomial: Partition) -> Partition;
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PowerSums;

impl LambdaAlgebra for PowerSums {
    const NAME: &'static str = "powersums";
    const MAX_VARIABLES: Option<usize> = None;

    fn normalize(monomial: Partition) -> Partition {
        monomial
    }
}

/// `Q[x]`; `x^e` is stored as the monomial `N_1^e`.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rank1;

impl LambdaAlgebra for Rank1 {
    const NAME: &'static str = "rank1";
    const MAX_VARIABLES: Option<usize> = Some(1);

    fn normalize(monomial: Partition) -> Partition {
        Partition::ones(monomial.n())
    }
}

#[derive(Clone, PartialEq)]
pub struct LambdaElement<T, A> {
    weight_cap: usize,
    q_order: usize,
    terms: BTreeMap<Partition, TruncSeries<T>>,
    algebra: PhantomData<A>,
}

impl<T: Scalar, A: LambdaAlgebra> LambdaElement<T, A> {
    pub fn zero(weight_cap: usize, q_order: usize) -> Self {
        LambdaElement {
            weight_cap,
            q_order,
            terms: BTreeMap::new(),
            algebra: PhantomData,
        }
    }

    pub fn one(weight_cap: usize, q_order: usize) -> Self {
        Self::from_series(TruncSeries::one(q_order), weight_cap)
    }

    /// The weight-0 element with the given q-series coefficient.
    pub fn from_series(c: TruncSeries<T>, weight_cap: usize) -> Self {
        let mut out = Self::zero(weight_cap, c.order());
        out.insert(Partition::empty(), c);
        out
    }

    /// `c · ∏ N_k` over the parts of `monomial`; dropped if its weight exceeds the cap.
    pub fn monomial(monomial: Partition, c: TruncSeries<T>, weight_cap: usize) -> Self {
        let mut out = Self::zero(weight_cap, c.order());
        out.insert(A::normalize(monomial), c);
        out
    }

    /// The power sum `N_k` (which is `x^k` in [`Rank1`]).
    pub fn power_sum(k: usize, weight_cap: usize, q_order: usize) -> Self {
        assert!(k >= 1, "power sums start at N_1");
        Self::monomial(
            Partition::from_sorted_unchecked(vec![k]),
            TruncSeries::one(q_order),
            weight_cap,
        )
    }

    /// Builds an element from arbitrary terms, normalizing and combining them.
    pub fn from_terms<I>(terms: I, weight_cap: usize, q_order: usize) -> Self
    where
        I: IntoIterator<Item = (Partition, TruncSeries<T>)>,
    {
        let mut out = Self::zero(weight_cap, q_order);
        for (m, c) in terms {
            out.accumulate(A::normalize(m), &c);
        }
        out.prune();
        out
    }

    fn insert(&mut self, monomial: Partition, c: TruncSeries<T>) {
        let c = c.truncate(self.q_order);
        if monomial.n() <= self.weight_cap && !c.is_zero() {
            self.terms.insert(monomial, c);
        }
    }

    fn accumulate(&mut self, monomial: Partition, c: &TruncSeries<T>) {
        if monomial.n() > self.weight_cap {
            return;
        }
        let order = self.q_order;
        let slot = self
            .terms
            .entry(monomial)
            .or_insert_with(|| TruncSeries::zero(order));
        *slot = slot.add(c);
    }

    fn prune(&mut self) {
        self.terms.retain(|_, c| !c.is_zero());
    }

    pub fn weight_cap(&self) -> usize {
        self.weight_cap
    }

    pub fn q_order(&self) -> usize {
        self.q_order
    }

    /// Non-zero terms in canonical monomial order (by weight, then reverse-lex).
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &TruncSeries<T>)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the given monomial (zero if absent).
    pub fn coefficient(&self, monomial: &Partition) -> TruncSeries<T> {
        let key = A::normalize(monomial.clone());
        self.terms
            .get(&key)
            .cloned()
            .unwrap_or_else(|| TruncSeries::zero(self.q_order))
    }

    pub fn max_weight(&self) -> Option<usize> {
        self.terms.keys().map(Partition::n).max()
    }

    pub fn min_weight(&self) -> Option<usize> {
        self.terms.keys().map(Partition::n).min()
    }

    /// Homogeneous component of weight `w`.
    pub fn weight_part(&self, w: usize) -> Self {
        let mut out = Self::zero(self.weight_cap, self.q_order);
        for (m, c) in &self.terms {
            if m.n() == w {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        out
    }

    /// Lowers the caps; raising them is not possible since the dropped terms are unknown.
    pub fn truncate(&self, weight_cap: usize, q_order: usize) -> Self {
        let weight_cap = weight_cap.min(self.weight_cap);
        let q_order = q_order.min(self.q_order);
        let mut out = Self::zero(weight_cap, q_order);
        for (m, c) in &self.terms {
            out.insert(m.clone(), c.clone());
        }
        out
    }

    /// Re-labels the caps without dropping anything; only valid for elements
    /// whose terms are all exactly known, such as parsed polynomials.
    pub fn with_caps(&self, weight_cap: usize, q_order: usize) -> Self {
        let mut out = Self::zero(weight_cap, q_order);
        for (m, c) in &self.terms {
            let c = TruncSeries::from_coeffs(c.coeffs().to_vec(), q_order);
            out.insert(m.clone(), c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = Self::zero(
            self.weight_cap.min(other.weight_cap),
            self.q_order.min(other.q_order),
        );
        for (m, c) in self.terms.iter().chain(other.terms.iter()) {
            out.accumulate(m.clone(), c);
        }
        out.prune();
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = c.neg();
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &T) -> Self {
        self.scale_series(&TruncSeries::constant(c.clone(), self.q_order))
    }

    /// Multiplies every coefficient by the q-series `c`.
    pub fn scale_series(&self, c: &TruncSeries<T>) -> Self {
        let mut out = Self::zero(self.weight_cap, self.q_order.min(c.order()));
        for (m, x) in &self.terms {
            out.insert(m.clone(), x.mul(c));
        }
        out
    }

    /// Product modulo weight above `min(Wa, Wb)`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(
            self.weight_cap.min(other.weight_cap),
            self.q_order.min(other.q_order),
        );
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if ma.n() + mb.n() > out.weight_cap {
                    continue;
                }
                out.accumulate(A::normalize(ma.union(mb)), &ca.mul(cb));
            }
        }
        out.prune();
        out
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut result = Self::one(self.weight_cap, self.q_order);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Adams operation `Ψ^r`, keeping the weight cap. Fails if any term would
    /// land above the cap.
    pub fn adams(&self, r: usize) -> Result<Self> {
        self.adams_with_cap(r, self.weight_cap)
    }

    /// `Ψ^r` into an element with weight cap `cap`.
    pub fn adams_with_cap(&self, r: usize, cap: usize) -> Result<Self> {
        assert!(r >= 1, "Adams operations are indexed from 1");
        if let Some(w) = self.max_weight() {
            if w * r > cap {
                return Err(Error::TruncationOverflow { weight: w * r, cap });
            }
        }
        Ok(self.adams_unchecked(r, cap))
    }

    /// `Ψ^r` that discards terms landing above the weight cap.
    ///
    /// `Ψ^r` multiplies every weight by `r`, so this is exactly `Ψ^r` in the
    /// quotient by weight `> W`.
    pub fn adams_truncating(&self, r: usize) -> Self {
        assert!(r >= 1, "Adams operations are indexed from 1");
        self.adams_unchecked(r, self.weight_cap)
    }

    fn adams_unchecked(&self, r: usize, cap: usize) -> Self {
        let mut out = Self::zero(cap, self.q_order);
        for (m, c) in &self.terms {
            if m.n() * r <= cap {
                out.accumulate(A::normalize(m.scaled(r)), c);
            }
        }
        out.prune();
        out
    }

    /// Truncated exponential `Σ_j a^j / j!`; requires a zero weight-0 part.
    pub fn exp(&self) -> Result<Self> {
        if self.terms.contains_key(&Partition::empty()) {
            return Err(Error::Domain(
                "exp needs an element without weight-0 part".into(),
            ));
        }
        let mut result = Self::one(self.weight_cap, self.q_order);
        let Some(min_w) = self.min_weight() else {
            return Ok(result);
        };
        let mut power = Self::one(self.weight_cap, self.q_order);
        for j in 1..=self.weight_cap / min_w {
            power = power.mul(self).scale(&(T::one() / T::from_i64(j as i64)));
            result = result.add(&power);
        }
        Ok(result)
    }

    fn check_variables(n_vars: usize) -> Result<()> {
        match A::MAX_VARIABLES {
            Some(max) if n_vars > max => Err(Error::Domain(format!(
                "the {} algebra specializes to at most {max} variable(s), asked for {n_vars}",
                A::NAME
            ))),
            _ => Ok(()),
        }
    }

    /// Substitutes `N_k ↦ x_1^k + … + x_N^k`; coefficients must be q-free.
    pub fn specialize(&self, n_vars: usize) -> Result<SymPolyN<T>> {
        if let Some((m, _)) = self.terms.iter().find(|(_, c)| !c.is_constant()) {
            return Err(Error::Domain(format!(
                "coefficient of monomial {m} depends on q; specialize a q-slice instead"
            )));
        }
        self.specialize_slice(0, n_vars)
    }

    /// Specializes the coefficient of `q^m`.
    pub fn specialize_slice(&self, m: usize, n_vars: usize) -> Result<SymPolyN<T>> {
        Self::check_variables(n_vars)?;
        if m > self.q_order {
            return Err(Error::Domain(format!(
                "q-slice {m} is beyond the truncation order {}",
                self.q_order
            )));
        }
        let mut out = SymPolyN::zero(n_vars);
        for (mono, c) in &self.terms {
            let coeff = c.coeff(m);
            if coeff.is_zero() {
                continue;
            }
            out = out.add(&SymPolyN::power_sum_product(mono, n_vars).scale(coeff));
        }
        Ok(out)
    }

    /// All q-slices `0..=M` of the specialization.
    pub fn specialize_graded(&self, n_vars: usize) -> Result<Vec<SymPolyN<T>>> {
        Self::check_variables(n_vars)?;
        let mut slices = vec![SymPolyN::zero(n_vars); self.q_order + 1];
        for (mono, c) in &self.terms {
            let expanded = SymPolyN::power_sum_product(mono, n_vars);
            for (m, slice) in slices.iter_mut().enumerate() {
                if !c.coeff(m).is_zero() {
                    *slice = slice.add(&expanded.scale(c.coeff(m)));
                }
            }
        }
        Ok(slices)
    }

    /// First monomial (in canonical order) at which `self` and `other` differ
    /// among monomials of weight at most `max_weight`, compared to the common
    /// q-order.
    pub fn first_difference(
        &self,
        other: &Self,
        max_weight: usize,
    ) -> Option<(Partition, TruncSeries<T>, TruncSeries<T>)> {
        let order = self.q_order.min(other.q_order);
        let keys: std::collections::BTreeSet<&Partition> = self
            .terms
            .keys()
            .chain(other.terms.keys())
            .filter(|m| m.n() <= max_weight)
            .collect();
        for m in keys {
            let a = self.coefficient(m).truncate(order);
            let b = other.coefficient(m).truncate(order);
            if a != b {
                return Some((m.clone(), a, b));
            }
        }
        None
    }
}

impl<T: Scalar + fmt::Display, A: LambdaAlgebra> LambdaElement<T, A> {
    /// JSON list of `{"powersum_exponents": {k: e_k}, "coefficient": ["p/q", …]}`.
    pub fn to_json(&self) -> serde_json::Value {
        self.to_json_with_key("coefficient")
    }

    pub(crate) fn to_json_with_key(&self, coeff_key: &str) -> serde_json::Value {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = serde_json::Map::new();
                for (k, e) in m.cycle_type().iter() {
                    exps.insert(k.to_string(), e.into());
                }
                let coeffs: Vec<serde_json::Value> =
                    c.coeffs().iter().map(|x| x.to_string().into()).collect();
                let mut obj = serde_json::Map::new();
                obj.insert("powersum_exponents".into(), exps.into());
                obj.insert(coeff_key.into(), coeffs.into());
                serde_json::Value::Object(obj)
            })
            .collect();
        serde_json::Value::Array(terms)
    }
}

/// Writes a readable expression like `(1 + O(q^3))*N1^2 + …`.
impl<T: Scalar + fmt::Display, A: LambdaAlgebra> fmt::Display for LambdaElement<T, A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            write!(f, "{}", monomial_name::<A>(m))?;
        }
        Ok(())
    }
}

fn monomial_name<A: LambdaAlgebra>(m: &Partition) -> String {
    let mut s = String::new();
    if A::MAX_VARIABLES == Some(1) {
        match m.n() {
            0 => {}
            1 => s.push_str("*x"),
            e => s.push_str(&format!("*x^{e}")),
        }
        return s;
    }
    for (k, e) in m.cycle_type().iter() {
        if e == 1 {
            s.push_str(&format!("*N{k}"));
        } else {
            s.push_str(&format!("*N{k}^{e}"));
        }
    }
    s
}

impl<T: Debug, A> Debug for LambdaElement<T, A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let algebra = std::any::type_name::<A>().rsplit("::").next().unwrap_or("");
        f.debug_struct("LambdaElement")
            .field("algebra", &algebra)
            .field("weight_cap", &self.weight_cap)
            .field("q_order", &self.q_order)
            .field("terms", &self.terms)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type L = LambdaElement<BigRational, PowerSums>;
    type X = LambdaElement<BigRational, Rank1>;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn n(k: usize, w: usize) -> L {
        L::power_sum(k, w, 0)
    }

    fn mono(parts: &[usize], w: usize) -> L {
        L::monomial(p(parts), TruncSeries::one(0), w)
    }

    #[test]
    fn products_respect_weight_cap() {
        assert_eq!(n(1, 4).mul(&n(1, 4)), mono(&[1, 1], 4));
        let sum = n(1, 2).add(&n(2, 2));
        assert_eq!(sum.mul(&n(1, 2)), mono(&[1, 1], 2));
        assert!(n(3, 2).is_zero());
    }

    #[test]
    fn adams_on_generators() {
        let a = n(1, 6).add(&mono(&[2, 1], 6));
        assert_eq!(a.adams(1).unwrap(), a);
        assert_eq!(n(3, 6).adams(2).unwrap(), n(6, 6));
        assert_eq!(mono(&[1, 1], 6).adams(2).unwrap(), mono(&[2, 2], 6));
        assert_eq!(
            n(1, 6).adams(3).unwrap().adams(2).unwrap(),
            n(1, 6).adams(6).unwrap()
        );
    }

    #[test]
    fn adams_overflow_is_an_error() {
        assert_eq!(
            n(3, 5).adams(2),
            Err(Error::TruncationOverflow { weight: 6, cap: 5 })
        );
        assert!(n(3, 5).adams_truncating(2).is_zero());
        assert_eq!(n(3, 5).adams_with_cap(2, 6).unwrap(), n(6, 6));
    }

    #[test]
    fn rank_one_adams_is_power() {
        let x = X::power_sum(1, 8, 0);
        assert_eq!(x.adams(3).unwrap(), x.pow(3));
        // N_2 in the rank-one algebra is x^2
        assert_eq!(X::power_sum(2, 8, 0), x.pow(2));
        assert_eq!(x.pow(2).adams(2).unwrap(), x.pow(4));
    }

    #[test]
    fn specialize_examples() {
        let one = r(1);
        let two = r(2);
        let s = n(1, 4).specialize(2).unwrap();
        assert_eq!(s.coefficient(&[1, 0]), one);
        assert_eq!(s.len(), 2);
        let s = mono(&[1, 1], 4).specialize(2).unwrap();
        assert_eq!(s.coefficient(&[2, 0]), one);
        assert_eq!(s.coefficient(&[1, 1]), two);
        assert_eq!(s.coefficient(&[0, 2]), one);
        let s = n(2, 4).specialize(3).unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!(s.coefficient(&[0, 2, 0]), one);
    }

    #[test]
    fn specialize_rejects_q_dependence_and_rank_one_overreach() {
        let a = L::monomial(p(&[1]), crate::series::geometric(1, 3), 2);
        assert!(a.specialize(2).is_err());
        assert_eq!(a.specialize_slice(3, 1).unwrap().coefficient(&[1]), r(1));
        assert!(X::power_sum(1, 2, 0).specialize(2).is_err());
    }

    #[test]
    fn exp_of_zero_and_weight_zero_rejection() {
        assert_eq!(L::zero(5, 3).exp().unwrap(), L::one(5, 3));
        assert!(L::one(5, 3).exp().is_err());
        // exp(N_1) modulo weight 3 = 1 + N_1 + N_1^2/2 + N_1^3/6
        let e = n(1, 3).exp().unwrap();
        assert_eq!(
            e.coefficient(&p(&[1, 1, 1])),
            TruncSeries::constant(BigRational::new(1.into(), 6.into()), 0)
        );
    }

    #[test]
    fn json_shape() {
        let a = mono(&[2, 1, 1], 4).scale(&BigRational::new(1.into(), 2.into()));
        let v = a.to_json();
        assert_eq!(
            v,
            serde_json::json!([{"powersum_exponents": {"1": 2, "2": 1}, "coefficient": ["1/2"]}])
        );
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        const W: usize = 6;

        fn element() -> impl Strategy<Value = L> {
            let term = (
                proptest::collection::vec(1usize..=3, 0..=3),
                -3i64..=3,
                -2i64..=2,
            );
            proptest::collection::vec(term, 0..=4).prop_map(|terms| {
                L::from_terms(
                    terms.into_iter().map(|(parts, c0, c1)| {
                        (
                            Partition::from_unsorted(parts).unwrap(),
                            TruncSeries::from_coeffs(vec![r(c0), r(c1)], 2),
                        )
                    }),
                    W,
                    2,
                )
            })
        }

        proptest! {
            #[test]
            fn adams_is_a_ring_homomorphism(a in element(), b in element(), rr in 1usize..=3) {
                let cap = 2 * W * rr;
                let lift = |x: &L| x.with_caps(cap, 2);
                let (a, b) = (lift(&a), lift(&b));
                let ab = a.mul(&b);
                prop_assert_eq!(
                    ab.adams(rr).unwrap(),
                    a.adams(rr).unwrap().mul(&b.adams(rr).unwrap())
                );
                prop_assert_eq!(
                    a.add(&b).adams(rr).unwrap(),
                    a.adams(rr).unwrap().add(&b.adams(rr).unwrap())
                );
            }

            #[test]
            fn adams_composes(a in element(), r1 in 1usize..=3, r2 in 1usize..=3) {
                let a = a.with_caps(W * 9, 2);
                prop_assert_eq!(
                    a.adams(r2).unwrap().adams(r1).unwrap(),
                    a.adams(r1 * r2).unwrap()
                );
            }

            #[test]
            fn specialization_is_multiplicative(a in element(), b in element()) {
                let a = a.with_caps(W * 2, 0);
                let b = b.with_caps(W * 2, 0);
                let lhs = a.mul(&b).specialize(2).unwrap();
                let rhs = a.specialize(2).unwrap().mul(&b.specialize(2).unwrap());
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}
