//! Genus-0 correlators of the point target.
//!
//! The `S_n`-module attached to `⟨1, …, 1, L^m⟩_{0,n+1}` is the space of degree-`m`
//! polynomials on the `(n-1)`-dimensional Coxeter representation of `S_n`, so
//! a correlator is a class sum of graded traces weighted by products of
//! Adams operations applied to the input.
//!
//! All class sums run over partitions with class-size weights. Terms may be
//! evaluated in parallel; they are always summed in canonical order.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::characters::{ClassFunction, CharacterTable, decompose};
use crate::combinatorics::{class_size, factorial, partitions, CycleType, Partition};
use crate::error::{Error, Result};
use crate::lambda::{LambdaAlgebra, LambdaElement};
use crate::scalar::Scalar;
use crate::series::{geometric, one_minus_q_pow, TruncSeries};

/// Largest `n` accepted by [`brute_force_trace`].
pub const BRUTE_FORCE_MAX_N: usize = 5;
/// Largest q-order accepted by [`brute_force_trace`].
pub const BRUTE_FORCE_MAX_ORDER: usize = 10;
/// Largest `n` accepted by [`binomial_check`].
pub const BINOMIAL_MAX_N: usize = 7;

/// Which polynomial algebra a permutation acts on.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Space {
    /// Polynomials on `C^n`.
    Full,
    /// Polynomials on the sum-zero hyperplane `C^{n-1}`.
    Coxeter,
}

/// `tr_h S*_q` for `h` of cycle type `μ`: `∏_k (1-q^k)^{-l_k}`, times `(1-q)` on the Coxeter space.
pub fn graded_trace<T: Scalar>(mu: &CycleType, space: Space, order: usize) -> TruncSeries<T> {
    let full = mu.iter().fold(TruncSeries::one(order), |acc, (k, l)| {
        acc.mul(&geometric::<T>(k, order).pow(l))
    });
    match space {
        Space::Full => full,
        Space::Coxeter => full.mul(&one_minus_q_pow(1, order)),
    }
}

/// The graded trace as a class function on `S_n`.
pub fn graded_trace_character<T: Scalar>(
    n: usize,
    space: Space,
    order: usize,
) -> Result<ClassFunction<T>> {
    ClassFunction::from_fn(n, |mu| graded_trace(mu, space, order))
}

/// Graded trace obtained by counting monomials fixed by `perm` (a map on `0..n`).
pub fn brute_force_trace<T: Scalar>(
    perm: &[usize],
    space: Space,
    order: usize,
) -> Result<TruncSeries<T>> {
    let n = perm.len();
    if n > BRUTE_FORCE_MAX_N {
        return Err(Error::SizeLimit {
            what: "brute-force trace (variables)",
            requested: n,
            cap: BRUTE_FORCE_MAX_N,
        });
    }
    if order > BRUTE_FORCE_MAX_ORDER {
        return Err(Error::SizeLimit {
            what: "brute-force trace (q-order)",
            requested: order,
            cap: BRUTE_FORCE_MAX_ORDER,
        });
    }
    let mut counts = vec![0i64; order + 1];
    let mut exps = vec![0usize; n];
    count_fixed(perm, &mut exps, 0, 0, order, &mut counts);
    let full = TruncSeries::from_coeffs(counts.into_iter().map(T::from_i64).collect(), order);
    Ok(match space {
        Space::Full => full,
        Space::Coxeter => full.mul(&one_minus_q_pow(1, order)),
    })
}

/// Enumerates exponent vectors of total degree ≤ `order`; a monomial
/// `∏ x_i^{e_i}` is fixed by `x_i ↦ x_{h(i)}` iff `e_{h(i)} = e_i` for all `i`.
fn count_fixed(
    perm: &[usize],
    exps: &mut Vec<usize>,
    var: usize,
    degree: usize,
    order: usize,
    counts: &mut [i64],
) {
    if var == exps.len() {
        if (0..exps.len()).all(|i| exps[perm[i]] == exps[i]) {
            counts[degree] += 1;
        }
        return;
    }
    for e in 0..=(order - degree) {
        exps[var] = e;
        count_fixed(perm, exps, var + 1, degree + e, order, counts);
    }
    exps[var] = 0;
}

/// Integer-valued class function `μ ↦ [q^m] tr_μ S*_q(C^{n-1})`: the
/// character of degree-`m` polynomials on the Coxeter representation.
pub fn module_character<T: Scalar>(n: usize, degree: usize) -> Result<ClassFunction<T>> {
    if n < 1 {
        return Err(Error::Domain("module_character needs n >= 1".into()));
    }
    ClassFunction::from_fn(n, |mu| {
        let tr = graded_trace::<T>(mu, Space::Coxeter, degree);
        TruncSeries::constant(tr.coeff(degree).clone(), 0)
    })
}

/// Irreducible decomposition of the graded Coxeter module `S*_q(C^{n-1})`,
/// one multiplicity series per diagram.
pub fn module_decomposition<T: Scalar>(
    n: usize,
    order: usize,
    table: &CharacterTable,
) -> Result<Vec<(Partition, TruncSeries<T>)>> {
    decompose(&graded_trace_character(n, Space::Coxeter, order)?, table)
}

/// `Ψ^r(ν)^e` for all `r, e` a class sum can ask for, cached.
struct AdamsPowers<T, A> {
    powers: BTreeMap<(usize, usize), LambdaElement<T, A>>,
}

impl<T: Scalar, A: LambdaAlgebra> AdamsPowers<T, A> {
    /// Pre-computes `Ψ^r(ν)^e` for `r·e ≤ n`.
    fn new(nu: &LambdaElement<T, A>, n: usize) -> Result<Self> {
        let mut powers = BTreeMap::new();
        for r in 1..=n {
            let psi = nu.adams(r)?;
            let mut acc = LambdaElement::one(nu.weight_cap(), nu.q_order());
            powers.insert((r, 0), acc.clone());
            for e in 1..=n / r {
                acc = acc.mul(&psi);
                powers.insert((r, e), acc.clone());
            }
        }
        Ok(AdamsPowers { powers })
    }

    /// `∏_r Ψ^r(ν)^{l_r}`.
    fn product(&self, mu: &CycleType, weight_cap: usize, q_order: usize) -> LambdaElement<T, A> {
        mu.iter().fold(LambdaElement::one(weight_cap, q_order), |acc, (r, l)| {
            acc.mul(&self.powers[&(r, l)])
        })
    }
}

fn class_weight<T: Scalar>(mu: &CycleType) -> T {
    T::from_ratio(
        &BigInt::from(class_size(mu)),
        &BigInt::from(factorial(mu.n())),
    )
}

/// Sums the terms in the given order after evaluating them (possibly in parallel).
fn ordered_sum<T: Scalar, A: LambdaAlgebra>(
    terms: Vec<LambdaElement<T, A>>,
    weight_cap: usize,
    q_order: usize,
) -> LambdaElement<T, A> {
    terms
        .iter()
        .fold(LambdaElement::zero(weight_cap, q_order), |acc, t| acc.add(t))
}

/// `⟨ν, …, ν, 1/(1-qL)⟩^{S_n}_{0,n+1}` modulo weight above `W` and `q^{M+1}`:
///
/// `(1/n!) Σ_{μ ⊢ n} |C_μ| · tr_μ S*_q(C^{n-1}) · ∏_r Ψ^r(ν)^{l_r(μ)}`.
pub fn correlator<T: Scalar, A: LambdaAlgebra>(
    nu: &LambdaElement<T, A>,
    n: usize,
    q_order: usize,
    weight_cap: usize,
) -> Result<LambdaElement<T, A>> {
    if n < 2 {
        return Err(Error::Domain(format!(
            "correlator needs n >= 2 (got {n}); the n = 0, 1 terms belong to the J-function"
        )));
    }
    correlator_mixed(&[(nu.clone(), n)], q_order, weight_cap)
}

/// Correlator over the Young subgroup `S_{k_1} × … × S_{k_s}` with input `ν_a`
/// in the `a`-th group of seats.
///
/// Sums over tuples of cycle types `(α_1, …, α_s)`, `α_a ⊢ k_a`, with weight
/// `∏_a |C_{α_a}|/k_a!`; the tuple acts on `C^n` with cycle type `⋃ α_a`.
pub fn correlator_mixed<T: Scalar, A: LambdaAlgebra>(
    inputs: &[(LambdaElement<T, A>, usize)],
    q_order: usize,
    weight_cap: usize,
) -> Result<LambdaElement<T, A>> {
    let n: usize = inputs.iter().map(|(_, k)| k).sum();
    if n < 2 {
        return Err(Error::Domain(format!(
            "correlator needs n >= 2 seats (got {n})"
        )));
    }
    let weight_cap = inputs
        .iter()
        .map(|(nu, _)| nu.weight_cap())
        .fold(weight_cap, usize::min);
    let q_order = inputs
        .iter()
        .map(|(nu, _)| nu.q_order())
        .fold(q_order, usize::min);

    let mut caches = Vec::with_capacity(inputs.len());
    let mut class_lists = Vec::with_capacity(inputs.len());
    for (nu, k) in inputs {
        let nu = nu.truncate(weight_cap, q_order);
        caches.push(AdamsPowers::new(&nu, *k)?);
        class_lists.push(partitions(*k)?);
    }

    // Every tuple of classes, in lexicographic order of canonical indices.
    let mut tuples: Vec<Vec<usize>> = vec![Vec::new()];
    for list in &class_lists {
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                (0..list.len()).map(move |i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }

    let terms: Vec<LambdaElement<T, A>> = tuples
        .par_iter()
        .map(|tuple| {
            let mut combined = Partition::empty();
            let mut weight = T::one();
            let mut product = LambdaElement::one(weight_cap, q_order);
            for (a, &idx) in tuple.iter().enumerate() {
                let alpha = &class_lists[a][idx];
                let ct = alpha.cycle_type();
                combined = combined.union(alpha);
                weight = weight * class_weight::<T>(&ct);
                product = product.mul(&caches[a].product(&ct, weight_cap, q_order));
            }
            let trace = graded_trace::<T>(&combined.cycle_type(), Space::Coxeter, q_order);
            product.scale_series(&trace.scale(&weight))
        })
        .collect();
    Ok(ordered_sum(terms, weight_cap, q_order))
}

/// A coefficient at which two sides of an identity disagree.
#[derive(Clone, Debug, PartialEq)]
pub struct Discrepancy<T> {
    pub monomial: Partition,
    pub q_power: usize,
    pub lhs: T,
    pub rhs: T,
}

impl<T: Scalar> Discrepancy<T> {
    pub(crate) fn between<A: LambdaAlgebra>(
        lhs: &LambdaElement<T, A>,
        rhs: &LambdaElement<T, A>,
        max_weight: usize,
    ) -> Option<Self> {
        let (monomial, a, b) = lhs.first_difference(rhs, max_weight)?;
        let q_power = (0..=a.order()).find(|&k| a.coeff(k) != b.coeff(k))?;
        Some(Discrepancy {
            monomial,
            q_power,
            lhs: a.coeff(q_power).clone(),
            rhs: b.coeff(q_power).clone(),
        })
    }
}

#[derive(Clone, Debug)]
pub struct BinomialReport<T, A> {
    pub n: usize,
    pub lhs: LambdaElement<T, A>,
    pub rhs: LambdaElement<T, A>,
    pub discrepancy: Option<Discrepancy<T>>,
}

impl<T, A> BinomialReport<T, A> {
    pub fn passed(&self) -> bool {
        self.discrepancy.is_none()
    }
}

/// Checks `⟨ν'+ν'', …⟩^{S_n} = Σ_{k+l=n} ⟨ν', …, ν'; ν'', …, ν''⟩^{S_k × S_l}`.
pub fn binomial_check<T: Scalar, A: LambdaAlgebra>(
    nu1: &LambdaElement<T, A>,
    nu2: &LambdaElement<T, A>,
    n: usize,
    q_order: usize,
    weight_cap: usize,
) -> Result<BinomialReport<T, A>> {
    if n > BINOMIAL_MAX_N {
        return Err(Error::SizeLimit {
            what: "binomial check",
            requested: n,
            cap: BINOMIAL_MAX_N,
        });
    }
    let lhs = correlator(&nu1.add(nu2), n, q_order, weight_cap)?;
    let mut rhs = LambdaElement::zero(lhs.weight_cap(), lhs.q_order());
    for k in 0..=n {
        let term = correlator_mixed(
            &[(nu1.clone(), k), (nu2.clone(), n - k)],
            q_order,
            weight_cap,
        )?;
        rhs = rhs.add(&term);
    }
    let discrepancy = Discrepancy::between(&lhs, &rhs, lhs.weight_cap().min(rhs.weight_cap()));
    Ok(BinomialReport {
        n,
        lhs,
        rhs,
        discrepancy,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::multiplicity;
    use crate::combinatorics::{cycle_type_of, permutations_of_type, Permutations};
    use crate::lambda::{PowerSums, Rank1};
    use crate::series::inverse_q_pochhammer;
    use num_rational::BigRational;

    type S = TruncSeries<BigRational>;
    type L = LambdaElement<BigRational, PowerSums>;
    type X = LambdaElement<BigRational, Rank1>;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn s(c: &[i64], m: usize) -> S {
        S::from_coeffs(c.iter().map(|&x| r(x)).collect(), m)
    }

    #[test]
    fn graded_trace_examples() {
        let m = 6;
        assert_eq!(graded_trace::<BigRational>(&p(&[1]).cycle_type(), Space::Full, m), geometric(1, m));
        assert_eq!(graded_trace::<BigRational>(&p(&[4]).cycle_type(), Space::Full, m), geometric(4, m));
        assert_eq!(
            graded_trace::<BigRational>(&p(&[2, 1]).cycle_type(), Space::Full, 2),
            s(&[1, 1, 2], 2)
        );
        assert_eq!(graded_trace::<BigRational>(&p(&[1]).cycle_type(), Space::Coxeter, m), S::one(m));
    }

    #[test]
    fn graded_trace_is_multiplicative() {
        for (a, b) in [(p(&[2, 1]), p(&[3])), (p(&[1, 1]), p(&[2, 2, 1]))] {
            let joint = graded_trace::<BigRational>(&a.union(&b).cycle_type(), Space::Full, 10);
            let split = graded_trace::<BigRational>(&a.cycle_type(), Space::Full, 10)
                .mul(&graded_trace(&b.cycle_type(), Space::Full, 10));
            assert_eq!(joint, split);
        }
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(brute_force_trace::<BigRational>(&[0, 1], Space::Full, 2).unwrap(), s(&[1, 2, 3], 2));
        assert_eq!(
            brute_force_trace::<BigRational>(&[1, 0], Space::Full, 4).unwrap(),
            s(&[1, 0, 1, 0, 1], 4)
        );
        assert!(brute_force_trace::<BigRational>(&[0; 6], Space::Full, 2).is_err());
        assert!(brute_force_trace::<BigRational>(&[0], Space::Full, 11).is_err());
    }

    #[test]
    fn brute_force_matches_product_formula() {
        for n in 1..=4 {
            for h in Permutations::new(n) {
                let mu = cycle_type_of(&h);
                for space in [Space::Full, Space::Coxeter] {
                    assert_eq!(
                        brute_force_trace::<BigRational>(&h, space, 6).unwrap(),
                        graded_trace(&mu, space, 6)
                    );
                }
            }
        }
    }

    #[test]
    fn module_characters() {
        let triv = module_character::<BigRational>(4, 0).unwrap();
        assert!(triv.values().iter().all(|v| *v == S::one(0)));
        let sign = module_character::<BigRational>(2, 1).unwrap();
        // classes (2), (1,1)
        assert_eq!(sign.values(), &[s(&[-1], 0), s(&[1], 0)]);
        let t3 = CharacterTable::new(3).unwrap();
        let deg2 = module_character::<BigRational>(3, 2).unwrap();
        assert_eq!(multiplicity(&deg2, &p(&[3]), &t3).unwrap(), S::one(0));
    }

    #[test]
    fn coxeter_module_decomposition() {
        let m = 12;
        let t3 = CharacterTable::new(3).unwrap();
        let dec = module_decomposition::<BigRational>(3, m, &t3).unwrap();
        assert_eq!(dec[0].0, p(&[3]));
        assert_eq!(dec[0].1, inverse_q_pochhammer(2, 3, m));
        // S_2 on C^1 by sign: the sign-isotypic part is spanned by odd powers
        let t2 = CharacterTable::new(2).unwrap();
        let dec2 = module_decomposition::<BigRational>(2, 8, &t2).unwrap();
        assert_eq!(dec2[1].0, p(&[1, 1]));
        assert_eq!(dec2[1].1, geometric::<BigRational>(2, 8).shift(1));
    }

    #[test]
    fn correlator_edge_cases() {
        let zero = L::zero(6, 5);
        assert!(correlator(&zero, 3, 5, 6).unwrap().is_zero());
        assert!(correlator(&L::power_sum(1, 6, 5), 1, 5, 6).is_err());
        // W = 2 is too small for Ψ^3(N_1)
        assert!(matches!(
            correlator(&L::power_sum(1, 2, 5), 3, 5, 2),
            Err(Error::TruncationOverflow { .. })
        ));
    }

    #[test]
    fn symmetrized_correlators() {
        let m = 10;
        let x = X::power_sum(1, 8, m);
        for n in 2..=4 {
            let c = correlator(&x, n, m, 8).unwrap();
            assert_eq!(c.len(), 1);
            assert_eq!(c.coefficient(&Partition::ones(n)), inverse_q_pochhammer(2, n, m));
        }
    }

    /// Invariants of S_n on polynomials in n variables are counted by monomial
    /// orbits, i.e. sorted exponent vectors; the Coxeter space drops a factor 1/(1-q).
    #[test]
    fn symmetrized_matches_orbit_count() {
        let m = 8;
        for n in 2..=5 {
            let mut counts = vec![0i64; m + 1];
            for d in 0..=m {
                counts[d] = crate::combinatorics::partitions(d)
                    .unwrap()
                    .iter()
                    .filter(|q| q.len() <= n)
                    .count() as i64;
            }
            let expected = s(&counts, m).mul(&one_minus_q_pow(1, m));
            let x = X::power_sum(1, n, m);
            let c = correlator(&x, n, m, n).unwrap();
            assert_eq!(c.coefficient(&Partition::ones(n)), expected, "n = {n}");
        }
    }

    #[test]
    fn mixed_reduces_to_plain() {
        let nu = L::power_sum(1, 8, 6).add(&L::power_sum(2, 8, 6));
        assert_eq!(
            correlator_mixed(&[(nu.clone(), 3)], 6, 8).unwrap(),
            correlator(&nu, 3, 6, 8).unwrap()
        );
        let zero = L::zero(8, 6);
        assert!(correlator_mixed(&[(nu.clone(), 2), (zero, 1)], 6, 8)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn binomial_identity_small() {
        let n1 = L::power_sum(1, 8, 6);
        let n2 = L::power_sum(2, 8, 6);
        assert!(binomial_check(&n1, &L::zero(8, 6), 3, 6, 8).unwrap().passed());
        assert!(binomial_check(&n1, &n2, 3, 6, 8).unwrap().passed());
        let rep = binomial_check(&n1, &n1, 4, 6, 8).unwrap();
        assert!(rep.passed());
        let doubled = n1.scale(&r(2));
        assert_eq!(rep.lhs, correlator(&doubled, 4, 6, 8).unwrap());
        assert!(binomial_check(&n1, &n2, 8, 6, 16).is_err());
    }

    #[test]
    fn explicit_permutation_sum_matches_class_sum() {
        // (1/n!) Σ_h tr_h ∏ Ψ^r(ν)^{l_r(h)} summed over all n! permutations.
        let m = 5;
        let nu = L::power_sum(1, 6, m).add(&L::power_sum(2, 6, m).scale(&r(3)));
        for n in 2..=3 {
            let mut acc = L::zero(6, m);
            for q in partitions(n).unwrap() {
                for h in permutations_of_type(&q.cycle_type()).unwrap() {
                    let mu = cycle_type_of(&h);
                    let trace = brute_force_trace::<BigRational>(&h, Space::Coxeter, m).unwrap();
                    let mut prod = L::one(6, m);
                    for (rr, l) in mu.iter() {
                        prod = prod.mul(&nu.adams(rr).unwrap().pow(l));
                    }
                    acc = acc.add(&prod.scale_series(&trace));
                }
            }
            let nf = r(crate::combinatorics::factorial(n).try_into().unwrap());
            let expected = acc.scale(&(r(1) / nf));
            assert_eq!(correlator(&nu, n, m, 6).unwrap(), expected);
        }
    }
}
