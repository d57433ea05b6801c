//! The small J-function of the point, assembled from correlators and in closed form.
//!
//! `J(ν) = 1 - q + ν + Σ_{n≥2} ⟨ν, …, ν, 1/(1-qL)⟩^{S_n}_{0,n+1}`, and the closed
//! form `(1-q) · exp(Σ_{k≥1} Ψ^k(ν) / (k(1-q^k)))`. In the rank-one algebra
//! the J-function becomes `(1-q) e_q(x/(1-q))`, handled with [`XSeries`].

use std::fmt;

use crate::combinatorics::{compositions, Partition};
use crate::error::{Error, Result};
use crate::lambda::{LambdaAlgebra, LambdaElement, PowerSums, Rank1};
use crate::point::{correlator, Discrepancy};
use crate::scalar::Scalar;
use crate::series::{geometric, one_minus_q_pow, q_factorial, TruncSeries};

/// How a [`JSeries`] was produced.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    ByCorrelators,
    ClosedForm,
    Symmetrized,
    GlSpecialization,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::ByCorrelators => "by_correlators",
            Provenance::ClosedForm => "closed_form",
            Provenance::Symmetrized => "symmetrized",
            Provenance::GlSpecialization => "gl_specialization",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A truncated J-function value together with the weight up to which it is complete.
#[derive(Clone, Debug, PartialEq)]
pub struct JSeries<T, A> {
    pub value: LambdaElement<T, A>,
    /// Every monomial of weight `≤ complete_weight` has its exact coefficient.
    pub complete_weight: usize,
    pub provenance: Provenance,
}

impl<T: Scalar, A: LambdaAlgebra> JSeries<T, A> {
    pub fn q_order(&self) -> usize {
        self.value.q_order()
    }

    pub fn weight_cap(&self) -> usize {
        self.value.weight_cap()
    }

    /// First disagreement on monomials of weight ≤ `max_weight`, also bounded
    /// by both sides' completeness.
    pub fn compare(&self, other: &Self, max_weight: usize) -> Option<Discrepancy<T>> {
        let w = max_weight
            .min(self.complete_weight)
            .min(other.complete_weight);
        Discrepancy::between(&self.value, &other.value, w)
    }
}

impl<T: Scalar + fmt::Display, A: LambdaAlgebra> JSeries<T, A> {
    /// `{"mode", "q_order", "weight_cap", "terms": [{"powersum_exponents", "q_coefficients"}]}`
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "mode": self.provenance.as_str(),
            "q_order": self.q_order(),
            "weight_cap": self.weight_cap(),
            "terms": self.value.to_json_with_key("q_coefficients"),
        })
    }
}

/// `1 - q + ν + Σ_{n=2..n_max} ⟨ν, …, ν, 1/(1-qL)⟩^{S_n}`.
pub fn j_by_correlators<T: Scalar, A: LambdaAlgebra>(
    nu: &LambdaElement<T, A>,
    n_max: usize,
    q_order: usize,
    weight_cap: usize,
) -> Result<JSeries<T, A>> {
    if n_max < 2 {
        return Err(Error::Domain(format!("n_max must be at least 2, got {n_max}")));
    }
    let nu = nu.truncate(weight_cap, q_order);
    let (w, m) = (nu.weight_cap(), nu.q_order());
    let mut value = LambdaElement::from_series(one_minus_q_pow(1, m), w).add(&nu);
    for n in 2..=n_max {
        value = value.add(&correlator(&nu, n, m, w)?);
    }
    let complete_weight = match nu.min_weight() {
        // A weight-0 part of ν feeds every n, so nothing beyond the constant is complete.
        Some(0) => 0,
        Some(min_w) => (n_max * min_w).min(w),
        None => w,
    };
    Ok(JSeries {
        value,
        complete_weight,
        provenance: Provenance::ByCorrelators,
    })
}

/// `(1-q) · exp(Σ_{k=1..W} Ψ^k(ν) / (k(1-q^k)))` modulo weight above `W`.
pub fn j_closed<T: Scalar, A: LambdaAlgebra>(
    nu: &LambdaElement<T, A>,
    q_order: usize,
    weight_cap: usize,
) -> Result<JSeries<T, A>> {
    let nu = nu.truncate(weight_cap, q_order);
    if nu.min_weight() == Some(0) {
        return Err(Error::Domain(
            "closed form needs ν without weight-0 part".into(),
        ));
    }
    let (w, m) = (nu.weight_cap(), nu.q_order());
    let mut exponent = LambdaElement::zero(w, m);
    for k in 1..=w {
        // Terms of Ψ^k(ν) above weight W cannot reach weight ≤ W in the exponential.
        let psi = nu.adams_truncating(k);
        let factor = geometric::<T>(k, m).scale(&(T::one() / T::from_i64(k as i64)));
        exponent = exponent.add(&psi.scale_series(&factor));
    }
    let value = exponent.exp()?.scale_series(&one_minus_q_pow(1, m));
    Ok(JSeries {
        value,
        complete_weight: w,
        provenance: Provenance::ClosedForm,
    })
}

/// A power series in `x` whose coefficients are q-series, truncated at `x^D` and `q^M`.
#[derive(Clone, Debug, PartialEq)]
pub struct XSeries<T> {
    q_order: usize,
    coeffs: Vec<TruncSeries<T>>,
}

impl<T: Scalar> XSeries<T> {
    pub fn from_coeffs(mut coeffs: Vec<TruncSeries<T>>, deg_cap: usize, q_order: usize) -> Self {
        coeffs.resize(deg_cap + 1, TruncSeries::zero(q_order));
        let coeffs = coeffs.into_iter().map(|c| c.truncate(q_order)).collect();
        XSeries { q_order, coeffs }
    }

    pub fn zero(deg_cap: usize, q_order: usize) -> Self {
        Self::from_coeffs(Vec::new(), deg_cap, q_order)
    }

    pub fn one(deg_cap: usize, q_order: usize) -> Self {
        Self::from_coeffs(vec![TruncSeries::one(q_order)], deg_cap, q_order)
    }

    pub fn deg_cap(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn q_order(&self) -> usize {
        self.q_order
    }

    /// Coefficient of `x^n`.
    pub fn coeff(&self, n: usize) -> &TruncSeries<T> {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[TruncSeries<T>] {
        &self.coeffs
    }

    pub fn scale_series(&self, c: &TruncSeries<T>) -> Self {
        let q_order = self.q_order.min(c.order());
        XSeries {
            q_order,
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let d = self.deg_cap().min(other.deg_cap());
        let m = self.q_order.min(other.q_order);
        XSeries {
            q_order: m,
            coeffs: (0..=d).map(|n| self.coeffs[n].sub(&other.coeffs[n])).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let d = self.deg_cap().min(other.deg_cap());
        let m = self.q_order.min(other.q_order);
        let mut out = vec![TruncSeries::zero(m); d + 1];
        for i in 0..=d {
            for j in 0..=d - i {
                out[i + j] = out[i + j].add(&self.coeffs[i].mul(&other.coeffs[j]));
            }
        }
        XSeries { q_order: m, coeffs: out }
    }

    /// Substitutes `x ↦ c·x`, multiplying the `x^n` coefficient by `c^n`.
    pub fn substitute_scaled(&self, c: &TruncSeries<T>) -> Self {
        let m = self.q_order.min(c.order());
        let mut factor = TruncSeries::one(m);
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a.mul(&factor));
            factor = factor.mul(c);
        }
        XSeries { q_order: m, coeffs }
    }

    /// `f(qx)`.
    pub fn q_dilate(&self) -> Self {
        XSeries {
            q_order: self.q_order,
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, a)| a.shift(n))
                .collect(),
        }
    }

    /// `x · f(x)`, dropping the term above the degree cap.
    pub fn times_x(&self) -> Self {
        let mut coeffs = vec![TruncSeries::zero(self.q_order)];
        coeffs.extend(self.coeffs[..self.deg_cap()].iter().cloned());
        XSeries {
            q_order: self.q_order,
            coeffs,
        }
    }

    /// Exponential in `x`; needs a zero `x^0` coefficient.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Domain("exp needs a zero constant term in x".into()));
        }
        let d = self.deg_cap();
        let mut f = vec![TruncSeries::one(self.q_order)];
        for n in 1..=d {
            let mut acc = TruncSeries::zero(self.q_order);
            for j in 1..=n {
                acc = acc.add(&self.coeffs[j].mul(&f[n - j]).scale(&T::from_i64(j as i64)));
            }
            f.push(acc.scale(&(T::one() / T::from_i64(n as i64))));
        }
        Ok(XSeries {
            q_order: self.q_order,
            coeffs: f,
        })
    }

    /// Logarithm in `x`; needs the `x^0` coefficient to be exactly 1.
    pub fn log(&self) -> Result<Self> {
        if self.coeffs[0] != TruncSeries::one(self.q_order) {
            return Err(Error::Domain("log needs constant term 1 in x".into()));
        }
        let d = self.deg_cap();
        let mut g = vec![TruncSeries::zero(self.q_order); d + 1];
        for n in 1..=d {
            let nn = T::from_i64(n as i64);
            let mut acc = self.coeffs[n].scale(&nn);
            for j in 1..n {
                acc = acc.sub(&g[j].mul(&self.coeffs[n - j]).scale(&T::from_i64(j as i64)));
            }
            g[n] = acc.scale(&(T::one() / nn));
        }
        Ok(XSeries {
            q_order: self.q_order,
            coeffs: g,
        })
    }

    /// Formal power `exp(t · log f)`; needs constant term 1.
    pub fn pow_scalar(&self, t: &T) -> Result<Self> {
        let lg = self.log()?;
        XSeries {
            q_order: lg.q_order,
            coeffs: lg.coeffs.iter().map(|c| c.scale(t)).collect(),
        }
        .exp()
    }
}

/// Reads off a rank-one element as a series in `x`.
impl<T: Scalar> From<&LambdaElement<T, Rank1>> for XSeries<T> {
    fn from(a: &LambdaElement<T, Rank1>) -> Self {
        let d = a.weight_cap();
        let coeffs = (0..=d)
            .map(|n| a.coefficient(&Partition::ones(n)))
            .collect();
        XSeries::from_coeffs(coeffs, d, a.q_order())
    }
}

/// `e_q(y) = Σ_{n ≤ D} y^n / [n]_q!`.
pub fn q_exponential<T: Scalar>(q_order: usize, deg_cap: usize) -> Result<XSeries<T>> {
    let coeffs = (0..=deg_cap)
        .map(|n| q_factorial::<T>(n, q_order).invert())
        .collect::<Result<Vec<_>>>()?;
    Ok(XSeries::from_coeffs(coeffs, deg_cap, q_order))
}

/// `(1-q) · e_q(x/(1-q))`.
pub fn q_exponential_form<T: Scalar>(q_order: usize, deg_cap: usize) -> Result<XSeries<T>> {
    Ok(q_exponential(q_order, deg_cap)?
        .substitute_scaled(&geometric(1, q_order))
        .scale_series(&one_minus_q_pow(1, q_order)))
}

/// The symmetrized J-function `J(x)` in the rank-one algebra, computed from correlators.
pub fn j_symmetrized<T: Scalar>(n_max: usize, q_order: usize) -> Result<XSeries<T>> {
    let x = LambdaElement::<T, Rank1>::power_sum(1, n_max, q_order);
    let j = j_by_correlators(&x, n_max, q_order, n_max)?;
    Ok(XSeries::from(&j.value))
}

#[derive(Clone, Debug, PartialEq)]
pub struct FiniteDifferenceReport<T> {
    /// `(x-power, q-power, residual)` of the first non-zero residual coefficient.
    pub first_failure: Option<(usize, usize, T)>,
}

impl<T> FiniteDifferenceReport<T> {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Checks `f(x) - f(qx) - x f(x) = 0` up to `x^{deg_cap}` and `q^{q_order}`.
pub fn finite_difference_check<T: Scalar>(
    f: &XSeries<T>,
    deg_cap: usize,
    q_order: usize,
) -> FiniteDifferenceReport<T> {
    let residual = f.sub(&f.q_dilate()).sub(&f.times_x());
    for n in 0..=deg_cap.min(residual.deg_cap()) {
        let c = residual.coeff(n);
        for k in 0..=q_order.min(c.order()) {
            if !c.coeff(k).is_zero() {
                return FiniteDifferenceReport {
                    first_failure: Some((n, k, c.coeff(k).clone())),
                };
            }
        }
    }
    FiniteDifferenceReport {
        first_failure: None,
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Corollary1Report<T> {
    pub checked: Vec<usize>,
    /// `(n, q-power, correlator side, product side)` of the first mismatch.
    pub first_failure: Option<(usize, usize, T, T)>,
}

impl<T> Corollary1Report<T> {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Compares the `x^n` coefficients of the symmetrized J-function, computed
/// through correlators, with `1/((1-q^2)…(1-q^n))` for `2 ≤ n ≤ n_max`.
pub fn corollary1_check<T: Scalar>(n_max: usize, q_order: usize) -> Result<Corollary1Report<T>> {
    let j = j_symmetrized::<T>(n_max, q_order)?;
    let mut checked = Vec::new();
    for n in 2..=n_max {
        let expected = (2..=n).fold(TruncSeries::one(q_order), |acc, k| {
            acc.mul(&one_minus_q_pow(k, q_order))
        });
        let expected = expected.invert()?;
        let got = j.coeff(n);
        checked.push(n);
        if let Some(k) = (0..=q_order).find(|&k| got.coeff(k) != expected.coeff(k)) {
            return Ok(Corollary1Report {
                checked,
                first_failure: Some((n, k, got.coeff(k).clone(), expected.coeff(k).clone())),
            });
        }
    }
    Ok(Corollary1Report {
        checked,
        first_failure: None,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct GlSpecializationReport<T> {
    pub monomials_checked: usize,
    /// `(exponents, q-power, closed-form side, q-exponential side)`.
    pub first_failure: Option<(Vec<usize>, usize, T, T)>,
}

impl<T> GlSpecializationReport<T> {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Compares `J(t·N_1)` specialized to `x_1..x_N` with `(1-q) ∏_i e_q(x_i/(1-q))^t`
/// on every monomial of degree ≤ `deg_cap`, to `q^{q_order}`.
pub fn j_gl_specialization<T: Scalar>(
    t: &T,
    n_vars: usize,
    q_order: usize,
    deg_cap: usize,
) -> Result<GlSpecializationReport<T>> {
    if n_vars == 0 {
        return Err(Error::Domain("need at least one variable".into()));
    }
    let nu = LambdaElement::<T, PowerSums>::power_sum(1, deg_cap, q_order).scale(t);
    let closed = j_closed(&nu, q_order, deg_cap)?;
    let slices = closed.value.specialize_graded(n_vars)?;

    let factor = q_exponential::<T>(q_order, deg_cap)?
        .substitute_scaled(&geometric(1, q_order))
        .pow_scalar(t)?;
    let prefactor = one_minus_q_pow::<T>(1, q_order);

    let mut checked = 0;
    for d in 0..=deg_cap {
        for exps in compositions(d, n_vars) {
            let rhs = exps
                .iter()
                .fold(prefactor.clone(), |acc, &e| acc.mul(factor.coeff(e)));
            checked += 1;
            for (k, slice) in slices.iter().enumerate() {
                let lhs = slice.coefficient(&exps);
                if lhs != *rhs.coeff(k) {
                    return Ok(GlSpecializationReport {
                        monomials_checked: checked,
                        first_failure: Some((exps, k, lhs, rhs.coeff(k).clone())),
                    });
                }
            }
        }
    }
    Ok(GlSpecializationReport {
        monomials_checked: checked,
        first_failure: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::inverse_q_pochhammer;
    use num_rational::BigRational;

    type S = TruncSeries<BigRational>;
    type L = LambdaElement<BigRational, PowerSums>;
    type X = LambdaElement<BigRational, Rank1>;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn rq(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn j_at_zero() {
        let zero = L::zero(6, 8);
        let by_corr = j_by_correlators(&zero, 4, 8, 6).unwrap();
        let closed = j_closed(&zero, 8, 6).unwrap();
        let expected = L::from_series(one_minus_q_pow(1, 8), 6);
        assert_eq!(by_corr.value, expected);
        assert_eq!(closed.value, expected);
        for m in [0, 1, 5, 20] {
            assert_eq!(
                j_closed(&L::zero(3, m), m, 3).unwrap().value,
                L::from_series(one_minus_q_pow(1, m), 3)
            );
        }
    }

    #[test]
    fn weight_two_part_for_n1() {
        let m = 8;
        let n1 = L::power_sum(1, 4, m);
        let j = j_by_correlators(&n1, 4, m, 4).unwrap();
        let g1 = geometric::<BigRational>(1, m);
        let g2 = geometric::<BigRational>(2, m);
        let om = one_minus_q_pow::<BigRational>(1, m);
        let half = rq(1, 2);
        assert_eq!(
            j.value.coefficient(&p(&[1, 1])),
            g1.mul(&g1).mul(&om).scale(&half)
        );
        assert_eq!(j.value.coefficient(&p(&[2])), g2.mul(&om).scale(&half));
        assert_eq!(j.value.coefficient(&p(&[1])), S::one(m));
        // closed form weight-1 part is also N_1
        let c = j_closed(&n1, m, 4).unwrap();
        assert_eq!(c.value.weight_part(1), n1.truncate(4, m));
    }

    #[test]
    fn closed_form_linear_terms() {
        // single-part monomials only come from the exponent's linear terms:
        // [N_j] = (1-q) Σ_{k | j} c_{j/k} / (k (1-q^k))
        let m = 9;
        let c = [r(1), rq(3, 2), r(-2)];
        let nu = (1..=3).fold(L::zero(3, m), |acc, k| {
            acc.add(&L::power_sum(k, 3, m).scale(&c[k - 1]))
        });
        let j = j_closed(&nu, m, 3).unwrap();
        let om = one_minus_q_pow::<BigRational>(1, m);
        for jj in 1..=3usize {
            let mut expected = S::zero(m);
            for k in (1..=jj).filter(|k| jj % k == 0) {
                let term = geometric::<BigRational>(k, m)
                    .scale(&(c[jj / k - 1].clone() / r(k as i64)));
                expected = expected.add(&term);
            }
            assert_eq!(j.value.coefficient(&p(&[jj])), expected.mul(&om), "N_{jj}");
        }
    }

    #[test]
    fn closed_form_rejects_weight_zero() {
        let nu = L::one(3, 2);
        assert!(j_closed(&nu, 2, 3).is_err());
    }

    #[test]
    fn theorem_small() {
        let m = 8;
        for nu in [
            L::power_sum(1, 4, m),
            L::power_sum(2, 8, m),
            L::power_sum(1, 8, m).add(&L::power_sum(2, 8, m)),
        ] {
            let w = 4 * nu.max_weight().unwrap();
            let a = j_by_correlators(&nu, 4, m, w).unwrap();
            let b = j_closed(&nu, m, 4).unwrap();
            assert_eq!(a.compare(&b, 4), None);
        }
    }

    #[test]
    fn completeness_bookkeeping() {
        let nu = L::power_sum(2, 10, 3);
        let j = j_by_correlators(&nu, 3, 3, 10).unwrap();
        assert_eq!(j.complete_weight, 6);
        assert!(j_by_correlators(&nu, 1, 3, 10).is_err());
    }

    #[test]
    fn symmetrized_via_correlators() {
        let m = 10;
        let x = X::power_sum(1, 3, m);
        let j = j_by_correlators(&x, 3, m, 3).unwrap();
        let xs = XSeries::from(&j.value);
        assert_eq!(xs.coeff(0), &one_minus_q_pow(1, m));
        assert_eq!(xs.coeff(1), &S::one(m));
        assert_eq!(xs.coeff(2), &inverse_q_pochhammer(2, 2, m));
        assert_eq!(xs.coeff(3), &inverse_q_pochhammer(2, 3, m));
    }

    #[test]
    fn q_exponential_coefficients() {
        let m = 12;
        let e = q_exponential::<BigRational>(m, 6).unwrap();
        assert_eq!(e.coeff(0), &S::one(m));
        let sub = e.substitute_scaled(&geometric(1, m));
        // 1/((1-q)^2 (1+q)) times 1/(1-q)... i.e. 1/([2]_q! (1-q)^2)
        let one_plus_q = S::from_coeffs(vec![r(1), r(1)], m);
        let expected = one_plus_q
            .mul(&one_minus_q_pow(1, m).pow(2))
            .invert()
            .unwrap();
        assert_eq!(sub.coeff(2), &expected);
        let form = q_exponential_form::<BigRational>(m, 6).unwrap();
        for n in 1..=6 {
            assert_eq!(form.coeff(n), &inverse_q_pochhammer(2, n, m), "n = {n}");
        }
    }

    #[test]
    fn finite_difference_controls() {
        let zero = XSeries::<BigRational>::zero(4, 4);
        assert!(finite_difference_check(&zero, 4, 4).passed());
        let one = XSeries::<BigRational>::one(4, 4);
        let rep = finite_difference_check(&one, 4, 4);
        assert_eq!(rep.first_failure, Some((1, 0, r(-1))));
        let f = j_symmetrized::<BigRational>(6, 8)
            .unwrap()
            .scale_series(&geometric(1, 8));
        assert!(finite_difference_check(&f, 6, 8).passed());
        // the q-exponential side satisfies the same equation
        let e = q_exponential::<BigRational>(8, 6)
            .unwrap()
            .substitute_scaled(&geometric(1, 8));
        assert!(finite_difference_check(&e, 6, 8).passed());
    }

    #[test]
    fn x_series_log_exp() {
        let e = q_exponential::<BigRational>(5, 5).unwrap();
        assert_eq!(e.log().unwrap().exp().unwrap(), e);
        assert_eq!(e.pow_scalar(&r(2)).unwrap(), e.mul(&e));
        let half = e.pow_scalar(&rq(1, 2)).unwrap();
        assert_eq!(half.mul(&half), e);
        assert!(XSeries::<BigRational>::zero(3, 3).log().is_err());
        assert!(e.exp().is_err());
    }

    #[test]
    fn corollary_one_small() {
        let rep = corollary1_check::<BigRational>(5, 10).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.checked, vec![2, 3, 4, 5]);
    }

    #[test]
    fn gl_specialization_small() {
        assert!(j_gl_specialization(&r(1), 1, 6, 4).unwrap().passed());
        assert!(j_gl_specialization(&r(2), 1, 6, 4).unwrap().passed());
        let rep = j_gl_specialization(&rq(1, 2), 2, 6, 3).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.monomials_checked, 10);
    }

    #[test]
    fn json_schema() {
        let j = j_closed(&L::power_sum(1, 1, 1), 1, 1).unwrap();
        assert_eq!(
            j.to_json(),
            serde_json::json!({
                "mode": "closed_form",
                "q_order": 1,
                "weight_cap": 1,
                "terms": [
                    {"powersum_exponents": {}, "q_coefficients": ["1", "-1"]},
                    {"powersum_exponents": {"1": 1}, "q_coefficients": ["1", "0"]},
                ],
            })
        );
    }
}
