//! Truncated power series in `q`.
//!
//! A [`TruncSeries`] of order `M` stores the coefficients `c_0..=c_M` and is
//! known only modulo `q^{M+1}`. Binary operations on series of different
//! orders truncate to the smaller order.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Debug)]
pub struct TruncSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> TruncSeries<T> {
    /// Builds a series from its leading coefficients; missing ones are zero,
    /// extra ones beyond `order` are dropped.
    pub fn from_coeffs(mut coeffs: Vec<T>, order: usize) -> Self {
        coeffs.resize(order + 1, T::zero());
        TruncSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_coeffs(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(T::one(), order)
    }

    pub fn constant(c: T, order: usize) -> Self {
        Self::from_coeffs(vec![c], order)
    }

    /// `c · q^k`
    pub fn monomial(c: T, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Truncation order `M`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `q^k`; zero for `k > M` is not meaningful, so it panics.
    pub fn coeff(&self, k: usize) -> &T {
        &self.coeffs[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// `true` when only the constant term may be non-zero.
    pub fn is_constant(&self) -> bool {
        self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        TruncSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &T) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        let m = self.order();
        let mut coeffs = vec![T::zero(); m + 1];
        for i in 0..=m.saturating_sub(k) {
            if i + k <= m {
                coeffs[i + k] = self.coeffs[i].clone();
            }
        }
        TruncSeries { coeffs }
    }

    /// Substitutes `q ↦ c·q`, i.e. scales `c_k` by `c^k`.
    pub fn rescale_variable(&self, c: &T) -> Self {
        let mut factor = T::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for x in &self.coeffs {
            coeffs.push(x.clone() * factor.clone());
            factor = factor * c.clone();
        }
        TruncSeries { coeffs }
    }

    pub fn add(&self, other: &Self) -> Self {
        let m = self.order().min(other.order());
        TruncSeries {
            coeffs: (0..=m)
                .map(|i| self.coeffs[i].clone() + other.coeffs[i].clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let m = self.order().min(other.order());
        TruncSeries {
            coeffs: (0..=m)
                .map(|i| self.coeffs[i].clone() - other.coeffs[i].clone())
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    /// Cauchy product modulo `q^{min(Ma,Mb)+1}`.
    pub fn mul(&self, other: &Self) -> Self {
        let m = self.order().min(other.order());
        let mut coeffs = vec![T::zero(); m + 1];
        for (i, a) in self.coeffs[..=m].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=m - i].iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
                }
            }
        }
        TruncSeries { coeffs }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut result = Self::one(self.order());
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

    /// Multiplicative inverse; requires a non-zero constant term.
    pub fn invert(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let m = self.order();
        let inv0 = T::one() / c0.clone();
        let mut out = Vec::with_capacity(m + 1);
        out.push(inv0.clone());
        for k in 1..=m {
            let mut acc = T::zero();
            for j in 1..=k {
                acc = acc + self.coeffs[j].clone() * out[k - j].clone();
            }
            out.push(-(acc * inv0.clone()));
        }
        Ok(TruncSeries { coeffs: out })
    }

    /// `self / other`.
    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.invert()?))
    }

    /// Formal derivative `d/dq`; the result has order `M - 1` (order 0 stays 0).
    pub fn derivative(&self) -> Self {
        let m = self.order();
        if m == 0 {
            return Self::zero(0);
        }
        TruncSeries {
            coeffs: (1..=m)
                .map(|k| self.coeffs[k].clone() * T::from_i64(k as i64))
                .collect(),
        }
    }

    /// Truncated exponential; requires `c_0 = 0`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Domain(
                "exp of a q-series needs a zero constant term".into(),
            ));
        }
        // k f_k = Σ_{j=1..k} j a_j f_{k-j}
        let m = self.order();
        let mut f = Vec::with_capacity(m + 1);
        f.push(T::one());
        for k in 1..=m {
            let mut acc = T::zero();
            for j in 1..=k {
                acc = acc
                    + T::from_i64(j as i64) * self.coeffs[j].clone() * f[k - j].clone();
            }
            f.push(acc / T::from_i64(k as i64));
        }
        Ok(TruncSeries { coeffs: f })
    }

    /// Truncated logarithm; requires `c_0 = 1`.
    pub fn log(&self) -> Result<Self> {
        if self.coeffs[0] != T::one() {
            return Err(Error::Domain(
                "log of a q-series needs constant term 1".into(),
            ));
        }
        // k g_k = k a_k - Σ_{j=1..k-1} j g_j a_{k-j}
        let m = self.order();
        let mut g = vec![T::zero(); m + 1];
        for k in 1..=m {
            let kk = T::from_i64(k as i64);
            let mut acc = kk.clone() * self.coeffs[k].clone();
            for j in 1..k {
                acc = acc - T::from_i64(j as i64) * g[j].clone() * self.coeffs[k - j].clone();
            }
            g[k] = acc / kk;
        }
        Ok(TruncSeries { coeffs: g })
    }
}

/// `1/(1-q^k)` truncated at `order`.
pub fn geometric<T: Scalar>(k: usize, order: usize) -> TruncSeries<T> {
    assert!(k >= 1, "geometric series needs k >= 1");
    let mut s = TruncSeries::zero(order);
    for i in (0..=order).step_by(k) {
        s.coeffs[i] = T::one();
    }
    s
}

/// `1 - q^k` truncated at `order`.
pub fn one_minus_q_pow<T: Scalar>(k: usize, order: usize) -> TruncSeries<T> {
    TruncSeries::one(order).sub(&TruncSeries::monomial(T::one(), k, order))
}

/// `[n]_q = 1 + q + … + q^{n-1}`; `[0]_q = 0`.
pub fn q_integer<T: Scalar>(n: usize, order: usize) -> TruncSeries<T> {
    let mut s = TruncSeries::zero(order);
    for i in 0..n.min(order + 1) {
        s.coeffs[i] = T::one();
    }
    s
}

/// `[n]_q! = ∏_{j=1..n} [j]_q`, with `[0]_q! = 1`.
pub fn q_factorial<T: Scalar>(n: usize, order: usize) -> TruncSeries<T> {
    (1..=n).fold(TruncSeries::one(order), |acc, j| acc.mul(&q_integer(j, order)))
}

/// `∏_{j=from..=to} 1/(1 - q^j)`; empty product is 1.
pub fn inverse_q_pochhammer<T: Scalar>(from: usize, to: usize, order: usize) -> TruncSeries<T> {
    (from..=to).fold(TruncSeries::one(order), |acc, j| acc.mul(&geometric(j, order)))
}

impl<T: Scalar> Add for &TruncSeries<T> {
    type Output = TruncSeries<T>;
    fn add(self, rhs: Self) -> TruncSeries<T> {
        TruncSeries::add(self, rhs)
    }
}

impl<T: Scalar> Sub for &TruncSeries<T> {
    type Output = TruncSeries<T>;
    fn sub(self, rhs: Self) -> TruncSeries<T> {
        TruncSeries::sub(self, rhs)
    }
}

impl<T: Scalar> Mul for &TruncSeries<T> {
    type Output = TruncSeries<T>;
    fn mul(self, rhs: Self) -> TruncSeries<T> {
        TruncSeries::mul(self, rhs)
    }
}

impl<T: Scalar> Neg for &TruncSeries<T> {
    type Output = TruncSeries<T>;
    fn neg(self) -> TruncSeries<T> {
        TruncSeries::neg(self)
    }
}

/// Human-readable form, e.g. `1 - q^2 + O(q^3)`.
impl<T: Scalar + fmt::Display> fmt::Display for TruncSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let (neg, body) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let unit = body == "1";
            match k {
                0 => write!(f, "{body}")?,
                1 if unit => write!(f, "q")?,
                1 => write!(f, "{body}*q")?,
                _ if unit => write!(f, "q^{k}")?,
                _ => write!(f, "{body}*q^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type S = TruncSeries<BigRational>;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn rq(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn s(c: &[i64], m: usize) -> S {
        S::from_coeffs(c.iter().map(|&x| r(x)).collect(), m)
    }

    #[test]
    fn products() {
        assert_eq!(s(&[1, 1], 2).mul(&s(&[1, -1], 2)), s(&[1, 0, -1], 2));
        assert_eq!(s(&[1, 1, 1], 2).mul(&s(&[1, -1], 2)), S::one(2));
    }

    #[test]
    fn mixed_orders_truncate_down() {
        let a = s(&[1, 2, 3, 4], 3);
        let b = s(&[1, 1], 1);
        assert_eq!((&a + &b).order(), 1);
        assert_eq!((&a * &b), s(&[1, 3], 1));
        assert_eq!((&b - &a).order(), 1);
    }

    #[test]
    fn inversion() {
        assert_eq!(s(&[1, -1], 5).invert().unwrap(), s(&[1, 1, 1, 1, 1, 1], 5));
        // 1 - q^3 inverts to the geometric series in q^3
        assert_eq!(
            one_minus_q_pow::<BigRational>(3, 7).invert().unwrap(),
            s(&[1, 0, 0, 1, 0, 0, 1, 0], 7)
        );
        let a = S::from_coeffs(vec![rq(2, 3), r(5), rq(-1, 7), r(0), r(11)], 4);
        assert_eq!(a.invert().unwrap().invert().unwrap(), a);
        assert_eq!(s(&[0, 1], 3).invert(), Err(Error::NotInvertible));
    }

    #[test]
    fn geometric_series() {
        assert_eq!(geometric::<BigRational>(1, 3), s(&[1, 1, 1, 1], 3));
        assert_eq!(geometric::<BigRational>(2, 5), s(&[1, 0, 1, 0, 1, 0], 5));
        assert_eq!(geometric::<BigRational>(3, 2), S::one(2));
    }

    #[test]
    fn q_integers_and_factorials() {
        assert_eq!(q_integer::<BigRational>(1, 4), S::one(4));
        assert_eq!(q_integer::<BigRational>(0, 4), S::zero(4));
        assert_eq!(q_factorial::<BigRational>(0, 4), S::one(4));
        // [3]_q! = (1+q)(1+q+q^2) = 1 + 2q + 2q^2 + q^3
        assert_eq!(q_factorial::<BigRational>(3, 5), s(&[1, 2, 2, 1], 5));
    }

    #[test]
    fn q_factorial_against_pochhammer() {
        let m = 30;
        for n in 0..=8 {
            let lhs = one_minus_q_pow::<BigRational>(1, m)
                .pow(n)
                .mul(&q_factorial(n, m));
            let rhs = (1..=n).fold(S::one(m), |acc, j| acc.mul(&one_minus_q_pow(j, m)));
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }

    #[test]
    fn exp_and_log() {
        assert_eq!(S::zero(6).exp().unwrap(), S::one(6));
        let m = 20;
        // -log(1-q) = Σ q^k/k
        let neg_log = S::from_coeffs(
            std::iter::once(r(0))
                .chain((1..=m as i64).map(|k| rq(1, k)))
                .collect(),
            m,
        );
        assert_eq!(neg_log.exp().unwrap(), geometric(1, m));
        assert_eq!(one_minus_q_pow::<BigRational>(1, m).log().unwrap(), neg_log.neg());
        assert!(S::one(3).exp().is_err());
        assert!(s(&[2, 1], 3).log().is_err());
    }

    #[test]
    fn shift_and_rescale() {
        assert_eq!(s(&[1, 2, 3], 3).shift(2), s(&[0, 0, 1, 2], 3));
        assert_eq!(s(&[1, 2, 3], 2).shift(5), S::zero(2));
        assert_eq!(s(&[1, 1, 1], 2).rescale_variable(&r(2)), s(&[1, 2, 4], 2));
    }

    #[test]
    fn display() {
        assert_eq!(s(&[1, 0, -1], 2).to_string(), "1 - q^2 + O(q^3)");
        let a = S::from_coeffs(vec![r(0), rq(-1, 2), r(3)], 2);
        assert_eq!(a.to_string(), "-1/2*q + 3*q^2 + O(q^3)");
        assert_eq!(S::zero(1).to_string(), "0 + O(q^2)");
    }

    #[test]
    fn floating_point_instance() {
        let g: TruncSeries<f64> = geometric(1, 4);
        let inv = g.invert().unwrap();
        assert_eq!(inv.coeffs(), &[1.0, -1.0, 0.0, 0.0, 0.0]);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn series(order: usize) -> impl Strategy<Value = S> {
            proptest::collection::vec((-6i64..=6, 1i64..=4), order + 1).prop_map(move |v| {
                S::from_coeffs(v.into_iter().map(|(n, d)| rq(n, d)).collect(), order)
            })
        }

        /// Independent schoolbook convolution over the full product, truncated afterwards.
        fn naive_mul(a: &S, b: &S) -> S {
            let m = a.order().min(b.order());
            let mut full = vec![r(0); a.coeffs().len() + b.coeffs().len()];
            for (i, x) in a.coeffs().iter().enumerate() {
                for (j, y) in b.coeffs().iter().enumerate() {
                    full[i + j] += x * y;
                }
            }
            S::from_coeffs(full, m)
        }

        proptest! {
            #[test]
            fn mul_matches_naive(a in series(6), b in series(6)) {
                prop_assert_eq!(a.mul(&b), naive_mul(&a, &b));
            }

            #[test]
            fn ring_axioms(a in series(5), b in series(5), c in series(5)) {
                prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
                prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
                prop_assert_eq!(a.mul(&b), b.mul(&a));
                prop_assert_eq!(a.add(&b).sub(&b), a);
            }

            #[test]
            fn invert_is_inverse(a in series(6)) {
                prop_assume!(!num_traits::Zero::is_zero(a.coeff(0)));
                let inv = a.invert().unwrap();
                prop_assert_eq!(a.mul(&inv), S::one(6));
            }

            #[test]
            fn log_exp_roundtrip(a in series(6)) {
                let mut c = a.coeffs().to_vec();
                c[0] = r(0);
                let a = S::from_coeffs(c, 6);
                let e = a.exp().unwrap();
                prop_assert_eq!(e.log().unwrap(), a.clone());
                // exp(a)' = a' exp(a)
                prop_assert_eq!(e.derivative(), a.derivative().mul(&e.truncate(5)));
            }
        }
    }
}
