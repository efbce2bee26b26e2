//! Truncated formal power series.
//!
//! A [`Series`] holds the coefficients of t^0 .. t^N for a fixed truncation
//! order N. Every operation returns coefficients 0..N that are exactly the
//! coefficients of the corresponding operation on the infinite series;
//! nothing past the order is ever consulted or produced.
//!
//! Invariants:
//! - `coeffs.len() == order + 1`, always at least one coefficient.
//! - Binary operations require equal orders and fail otherwise; there is no
//!   silent re-truncation.
//! - Values are immutable after construction; all operations are pure.

use std::fmt;

use num_traits::{One, Zero};

use crate::coeff::{from_int, Coeff};
use crate::error::{Error, Result};

/// A formal power series truncated at a fixed order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series<T> {
    coeffs: Vec<T>,
}

impl<T: Coeff> Series<T> {
    /// Builds a series from coefficients of t^0, t^1, ...; the truncation
    /// order is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the t^0 coefficient");
        Series { coeffs }
    }

    /// The zero series at the given order.
    pub fn zero_series(order: usize) -> Self {
        Series { coeffs: vec![T::zero(); order + 1] }
    }

    /// The constant series 1.
    pub fn one_series(order: usize) -> Self {
        Self::constant(T::one(), order)
    }

    /// A constant series.
    pub fn constant(c: T, order: usize) -> Self {
        let mut coeffs = vec![T::zero(); order + 1];
        coeffs[0] = c;
        Series { coeffs }
    }

    /// The identity series t.
    pub fn identity(order: usize) -> Self {
        Self::monomial(T::one(), 1, order)
    }

    /// c * t^k, truncated (zero if k exceeds the order).
    pub fn monomial(c: T, k: usize, order: usize) -> Self {
        let mut coeffs = vec![T::zero(); order + 1];
        if k <= order {
            coeffs[k] = c;
        }
        Series { coeffs }
    }

    /// Builds coefficient i from `f(i)` for i = 0..=order.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> T) -> Self {
        Series { coeffs: (0..=order).map(f).collect() }
    }

    /// Embeds machine integers as the leading coefficients.
    pub fn from_integers(ints: &[i64]) -> Self {
        Series::new(ints.iter().map(|&n| from_int(n)).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of t^i; panics when i exceeds the order.
    pub fn coeff(&self, i: usize) -> &T {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn constant_term(&self) -> &T {
        &self.coeffs[0]
    }

    pub fn is_zero_series(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn check_same_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch { left: self.order(), right: other.order() });
        }
        Ok(())
    }

    /// Drops coefficients past `order` (which must not exceed the current one).
    pub fn truncated(&self, order: usize) -> Self {
        assert!(order <= self.order(), "truncated() cannot extend a series");
        Series { coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_order(other)?;
        Ok(Series::from_fn(self.order(), |i| {
            self.coeffs[i].clone() + other.coeffs[i].clone()
        }))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_order(other)?;
        Ok(Series::from_fn(self.order(), |i| {
            self.coeffs[i].clone() - other.coeffs[i].clone()
        }))
    }

    pub fn neg(&self) -> Self {
        Series::from_fn(self.order(), |i| -self.coeffs[i].clone())
    }

    /// Multiplies every coefficient by a scalar.
    pub fn scale(&self, c: &T) -> Self {
        Series::from_fn(self.order(), |i| self.coeffs[i].clone() * c.clone())
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same_order(other)?;
        let n = self.order();
        let mut coeffs = vec![T::zero(); n + 1];
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(n - i) {
                coeffs[i + j] =
                    coeffs[i + j].clone() + self.coeffs[i].clone() * other.coeffs[j].clone();
            }
        }
        Ok(Series { coeffs })
    }

    /// Multiplicative inverse: the unique r with self * r = 1 + O(t^{N+1}).
    pub fn recip(&self) -> Result<Self> {
        if self.coeffs[0].is_zero() {
            return Err(Error::NotInvertible);
        }
        let n = self.order();
        let c0 = self.coeffs[0].clone();
        let mut inv = vec![T::zero(); n + 1];
        inv[0] = T::one() / c0.clone();
        for k in 1..=n {
            let mut acc = T::zero();
            for i in 1..=k {
                acc = acc + self.coeffs[i].clone() * inv[k - i].clone();
            }
            inv[k] = -acc / c0.clone();
        }
        Ok(Series { coeffs: inv })
    }

    /// Division self / other, requiring other(0) != 0.
    pub fn div(&self, other: &Self) -> Result<Self> {
        self.mul(&other.recip()?)
    }

    /// Composition self(inner), requiring inner(0) = 0. Horner evaluation
    /// over the series ring.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        self.check_same_order(inner)?;
        if !inner.coeffs[0].is_zero() {
            return Err(Error::CompositionDomain);
        }
        let n = self.order();
        let mut acc = Series::constant(self.coeffs[n].clone(), n);
        for i in (0..n).rev() {
            acc = acc.mul(inner)?;
            acc.coeffs[0] = acc.coeffs[0].clone() + self.coeffs[i].clone();
        }
        Ok(acc)
    }

    /// Termwise derivative; the result lives at order N-1.
    pub fn derivative(&self) -> Self {
        assert!(self.order() >= 1, "derivative needs order >= 1");
        Series::from_fn(self.order() - 1, |i| {
            self.coeffs[i + 1].clone() * from_int::<T>((i + 1) as i64)
        })
    }

    /// Termwise antiderivative with zero constant term; order grows to N+1.
    pub(crate) fn integrate(&self) -> Self {
        let mut coeffs = vec![T::zero(); self.order() + 2];
        for i in 0..=self.order() {
            coeffs[i + 1] = self.coeffs[i].clone() / from_int::<T>((i + 1) as i64);
        }
        Series { coeffs }
    }

    /// n-th derivative evaluated at t = 0, i.e. n! times the n-th coefficient.
    pub fn nth_deriv_at_zero(&self, n: usize) -> Result<T> {
        if n > self.order() {
            return Err(Error::TruncationExceeded { index: n, order: self.order() });
        }
        Ok(crate::coeff::factorial_in::<T>(n) * self.coeffs[n].clone())
    }

    /// Multiplication by t (shift up, dropping the top coefficient).
    pub(crate) fn shift_up(&self) -> Self {
        let mut coeffs = vec![T::zero(); self.order() + 1];
        for i in 1..=self.order() {
            coeffs[i] = self.coeffs[i - 1].clone();
        }
        Series { coeffs }
    }

    /// Division by t of a series vanishing at 0; the result lives at order N-1.
    pub(crate) fn shift_down(&self) -> Self {
        assert!(self.coeffs[0].is_zero(), "shift_down needs a zero constant term");
        assert!(self.order() >= 1);
        Series { coeffs: self.coeffs[1..].to_vec() }
    }

    /// Compositional inverse: the unique psi with self(psi(t)) = t.
    ///
    /// Coefficients come from the Lagrange inversion formula
    /// n * [t^n] psi = [t^{n-1}] (t/self)^n.
    pub fn comp_inverse(&self) -> Result<Self> {
        let n = self.order();
        let linear_ok = n >= 1 && !self.coeffs[1].is_zero();
        if !self.coeffs[0].is_zero() || !linear_ok {
            return Err(Error::NotCompInvertible);
        }
        // t/self at order N-1: invert the shifted-down series.
        let u = self.shift_down().recip()?;
        let mut psi = vec![T::zero(); n + 1];
        let mut u_pow = Series::one_series(n - 1);
        for m in 1..=n {
            u_pow = u_pow.mul(&u)?;
            psi[m] = u_pow.coeffs[m - 1].clone() / from_int::<T>(m as i64);
        }
        Ok(Series { coeffs: psi })
    }

    /// s-fold functional iterate; s = 0 gives the identity series t and
    /// negative s iterates the compositional inverse.
    pub fn iterate(&self, s: i64) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::CompositionDomain);
        }
        if s == 0 {
            return Ok(Series::identity(self.order()));
        }
        let base = if s > 0 { self.clone() } else { self.comp_inverse()? };
        let mut acc = base.clone();
        for _ in 1..s.unsigned_abs() {
            acc = acc.compose(&base)?;
        }
        Ok(acc)
    }

    /// Integer power; negative exponents require a nonzero constant term.
    pub fn powi(&self, exp: i64) -> Result<Self> {
        let base = if exp >= 0 { self.clone() } else { self.recip()? };
        let mut acc = Series::one_series(self.order());
        for _ in 0..exp.unsigned_abs() {
            acc = acc.mul(&base)?;
        }
        Ok(acc)
    }

    /// Scalar-exponent power exp(r * log(self)), requiring constant term
    /// exactly 1. Agrees with `powi` whenever r is an integer.
    pub fn pow_rat(&self, r: &T) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::NonUnitBase);
        }
        self.log_unit()?.scale(r).exp_zero_const()
    }

    /// log of a series with constant term 1, via integrating f'/f.
    fn log_unit(&self) -> Result<Self> {
        debug_assert!(self.coeffs[0].is_one());
        if self.order() == 0 {
            return Ok(Series::zero_series(0));
        }
        let df = self.derivative();
        let f_low = self.truncated(self.order() - 1);
        Ok(df.mul(&f_low.recip()?)?.integrate())
    }

    /// exp of a series with zero constant term, via the recurrence
    /// n e_n = sum_{j=1..n} j g_j e_{n-j}.
    fn exp_zero_const(&self) -> Result<Self> {
        debug_assert!(self.coeffs[0].is_zero());
        let n = self.order();
        let mut e = vec![T::zero(); n + 1];
        e[0] = T::one();
        for m in 1..=n {
            let mut acc = T::zero();
            for j in 1..=m {
                acc = acc + from_int::<T>(j as i64) * self.coeffs[j].clone() * e[m - j].clone();
            }
            e[m] = acc / from_int::<T>(m as i64);
        }
        Ok(Series { coeffs: e })
    }
}

/// Solves w(t) = t * h(w(t)) for the unique series w with w(0) = 0, by
/// fixed-point iteration from w = 0 (each step pins at least one further
/// coefficient, so N+1 steps are exact at order N).
pub fn solve_omega<T: Coeff>(h: &Series<T>) -> Result<Series<T>> {
    if h.constant_term().is_zero() {
        return Err(Error::DegenerateH);
    }
    let n = h.order();
    let mut omega = Series::zero_series(n);
    for _ in 0..=n {
        omega = h.compose(&omega)?.shift_up();
    }
    Ok(omega)
}

impl<T: Coeff> fmt::Display for Series<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let rendered = c.to_string();
            let (sign, magnitude) = match rendered.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", rendered),
            };
            if wrote {
                write!(f, " {} ", sign)?;
            } else if sign == "-" {
                write!(f, "-")?;
            }
            match (i, magnitude.as_str()) {
                (0, m) => write!(f, "{m}")?,
                (1, "1") => write!(f, "t")?,
                (1, m) => write!(f, "{m}*t")?,
                (_, "1") => write!(f, "t^{i}")?,
                (_, m) => write!(f, "{m}*t^{i}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rat;
    use crate::{Rat, RatSeries};

    fn s(ints: &[i64]) -> RatSeries {
        Series::from_integers(ints)
    }

    /// t/(1-t) = t + t^2 + ... at the given order.
    fn geom(order: usize) -> RatSeries {
        Series::from_fn(order, |i| if i >= 1 { Rat::one() } else { Rat::zero() })
    }

    #[test]
    fn mul_basics() {
        // (1+t)(1-t) = 1 - t^2
        assert_eq!(s(&[1, 1, 0]).mul(&s(&[1, -1, 0])).unwrap(), s(&[1, 0, -1]));
        // t * t = t^2
        assert_eq!(s(&[0, 1, 0]).mul(&s(&[0, 1, 0])).unwrap(), s(&[0, 0, 1]));
        // (1+2t+3t^2)(1-t) = 1 + t + t^2 (truncated)
        assert_eq!(s(&[1, 2, 3]).mul(&s(&[1, -1, 0])).unwrap(), s(&[1, 1, 1]));
    }

    #[test]
    fn mul_order_mismatch() {
        let err = s(&[1, 1]).mul(&s(&[1, 1, 1])).unwrap_err();
        assert_eq!(err, Error::OrderMismatch { left: 1, right: 2 });
    }

    #[test]
    fn recip_basics() {
        assert_eq!(s(&[1, -1, 0, 0]).recip().unwrap(), s(&[1, 1, 1, 1]));
        assert_eq!(s(&[1, 0, 0, 0]).recip().unwrap(), s(&[1, 0, 0, 0]));
        assert_eq!(s(&[1, 1, 0, 0]).recip().unwrap(), s(&[1, -1, 1, -1]));
        assert_eq!(s(&[0, 1]).recip().unwrap_err(), Error::NotInvertible);
    }

    #[test]
    fn compose_moebius_doubles_slope() {
        // (t/(1-t)) composed with itself is t/(1-2t).
        let g = geom(3);
        assert_eq!(g.compose(&g).unwrap(), s(&[0, 1, 2, 4]));
    }

    #[test]
    fn compose_identity_and_square() {
        let g = s(&[2, -1, 3, 5]);
        assert_eq!(g.compose(&Series::identity(3)).unwrap(), g);
        // t^2 composed with t + t^2 expands to t^2 + 2t^3 + t^4.
        let sq = Series::monomial(Rat::one(), 2, 4);
        assert_eq!(sq.compose(&s(&[0, 1, 1, 0, 0])).unwrap(), s(&[0, 0, 1, 2, 1]));
    }

    #[test]
    fn compose_rejects_nonzero_inner_constant() {
        let err = s(&[1, 1]).compose(&s(&[1, 1])).unwrap_err();
        assert_eq!(err, Error::CompositionDomain);
    }

    #[test]
    fn derivative_basics() {
        assert_eq!(Series::<Rat>::monomial(Rat::one(), 2, 2).derivative(), s(&[0, 2]));
        assert_eq!(s(&[1, 0]).derivative(), s(&[0]));
        assert_eq!(geom(3).derivative(), s(&[1, 2, 3]));
    }

    #[test]
    fn nth_deriv_at_zero_basics() {
        let f = Series::<Rat>::monomial(Rat::one(), 3, 4);
        assert_eq!(f.nth_deriv_at_zero(3).unwrap(), rat(6, 1));
        assert_eq!(geom(3).nth_deriv_at_zero(3).unwrap(), rat(6, 1));
        assert_eq!(s(&[7, 1]).nth_deriv_at_zero(0).unwrap(), rat(7, 1));
        assert_eq!(
            s(&[1, 1]).nth_deriv_at_zero(2).unwrap_err(),
            Error::TruncationExceeded { index: 2, order: 1 }
        );
    }

    #[test]
    fn comp_inverse_moebius() {
        // inverse of t/(1-t) is t/(1+t) = t - t^2 + t^3
        let psi = geom(3).comp_inverse().unwrap();
        assert_eq!(psi, s(&[0, 1, -1, 1]));
        // contract: both compositions give t
        assert_eq!(geom(3).compose(&psi).unwrap(), Series::identity(3));
        assert_eq!(psi.compose(&geom(3)).unwrap(), Series::identity(3));
    }

    #[test]
    fn comp_inverse_linear_cases() {
        assert_eq!(Series::<Rat>::identity(4).comp_inverse().unwrap(), Series::identity(4));
        let halved = s(&[0, 2]).comp_inverse().unwrap();
        assert_eq!(halved, Series::new(vec![Rat::zero(), rat(1, 2)]));
    }

    #[test]
    fn comp_inverse_rejects_bad_domains() {
        assert_eq!(s(&[1, 1]).comp_inverse().unwrap_err(), Error::NotCompInvertible);
        assert_eq!(s(&[0, 0, 1]).comp_inverse().unwrap_err(), Error::NotCompInvertible);
    }

    #[test]
    fn iterate_basics() {
        let phi = s(&[0, 2, 1, 0, 0]);
        assert_eq!(phi.iterate(0).unwrap(), Series::identity(4));
        // (1+t)^2 - 1 iterated twice is (1+t)^4 - 1.
        assert_eq!(phi.iterate(2).unwrap(), s(&[0, 4, 6, 4, 1]));
        assert_eq!(geom(3).iterate(-1).unwrap(), s(&[0, 1, -1, 1]));
        assert_eq!(s(&[0, 0, 1]).iterate(-1).unwrap_err(), Error::NotCompInvertible);
    }

    #[test]
    fn solve_omega_fixed_points() {
        // h = 1 forces w = t.
        assert_eq!(solve_omega(&s(&[1, 0, 0])).unwrap(), Series::identity(2));
        // h = 1 + t gives w = t/(1-t).
        assert_eq!(solve_omega(&s(&[1, 1, 0, 0, 0, 0])).unwrap(), geom(5));
        // h = e^t gives the tree function t + t^2 + 3/2 t^3.
        let h = Series::from_fn(3, |i| Rat::one() / crate::coeff::factorial_in::<Rat>(i));
        let w = solve_omega(&h).unwrap();
        assert_eq!(w, Series::new(vec![Rat::zero(), Rat::one(), Rat::one(), rat(3, 2)]));
        assert_eq!(solve_omega(&s(&[0, 1])).unwrap_err(), Error::DegenerateH);
    }

    #[test]
    fn omega_satisfies_equation() {
        let h = s(&[2, -1, 3, 1, -2, 1]);
        let w = solve_omega(&h).unwrap();
        assert_eq!(w, h.compose(&w).unwrap().shift_up());
        assert!(w.constant_term().is_zero());
        assert_eq!(w.coeff(1), h.constant_term());
    }

    #[test]
    fn pow_rat_basics() {
        let base = s(&[1, 1, 0]);
        // (1+t)^(1/2) = 1 + t/2 - t^2/8
        assert_eq!(
            base.pow_rat(&rat(1, 2)).unwrap(),
            Series::new(vec![Rat::one(), rat(1, 2), rat(-1, 8)])
        );
        assert_eq!(base.pow_rat(&Rat::zero()).unwrap(), s(&[1, 0, 0]));
        assert_eq!(base.pow_rat(&rat(2, 1)).unwrap(), s(&[1, 2, 1]));
        assert_eq!(s(&[2, 1]).pow_rat(&rat(1, 2)).unwrap_err(), Error::NonUnitBase);
    }

    #[test]
    fn pow_rat_matches_integer_powers() {
        let f = Series::new(vec![Rat::one(), rat(2, 3), rat(-1, 2), rat(5, 1), rat(-3, 4)]);
        for p in 0..=5 {
            assert_eq!(f.pow_rat(&rat(p, 1)).unwrap(), f.powi(p).unwrap());
        }
        assert_eq!(f.pow_rat(&rat(-2, 1)).unwrap(), f.powi(-2).unwrap());
    }

    #[test]
    fn display_formats() {
        assert_eq!(s(&[0, 1, 2]).to_string(), "t + 2*t^2");
        assert_eq!(s(&[1, -1]).to_string(), "1 - t");
        assert_eq!(s(&[0, 0]).to_string(), "0");
        assert_eq!(
            Series::new(vec![rat(-1, 2), Rat::zero(), Rat::one()]).to_string(),
            "-1/2 + t^2"
        );
    }

    #[test]
    fn float_scalars_also_work() {
        let f: Series<f64> = Series::new(vec![1.0, 1.0, 0.0]);
        let sq = f.mul(&f).unwrap();
        assert_eq!(sq, Series::new(vec![1.0, 2.0, 1.0]));
        let r = f.recip().unwrap();
        assert!((r.coeff(2) - 1.0).abs() < 1e-12);
    }
}
