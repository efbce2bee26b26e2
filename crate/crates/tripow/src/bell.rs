//! Partial Bell polynomials and the combinatorial numbers built on them.
//!
//! `bell_partial` extracts B_{n,k}(phi) from the generating function
//! sum_n B_{n,k}(phi) t^n/n! = phi(t)^k / k!, i.e. by powering the series
//! rather than summing over set partitions. Stirling numbers of the second
//! kind, Touchard polynomials B_n(z) and Fubini polynomials F_n(z) are the
//! classical specializations used elsewhere in the crate.

use std::sync::OnceLock;

use num_traits::{One, Zero};

use crate::coeff::{factorial_in, from_int, Coeff};
use crate::error::{Error, Result};
use crate::series::Series;
use crate::{Int, Rat};

/// Rows 0..=n_max of the Stirling-2 triangle, S(n,j) = j S(n-1,j) + S(n-1,j-1).
pub struct StirlingTable {
    rows: Vec<Vec<Int>>,
}

impl StirlingTable {
    pub fn new(n_max: usize) -> Self {
        let mut rows: Vec<Vec<Int>> = Vec::with_capacity(n_max + 1);
        rows.push(vec![Int::one()]);
        for n in 1..=n_max {
            let prev = &rows[n - 1];
            let mut row = vec![Int::zero(); n + 1];
            for j in 1..=n {
                let above = if j < prev.len() { prev[j].clone() } else { Int::zero() };
                row[j] = Int::from(j) * above + &prev[j - 1];
            }
            rows.push(row);
        }
        StirlingTable { rows }
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn get(&self, n: usize, j: usize) -> Result<Int> {
        if j > n {
            return Err(Error::IndexError(format!("S({n},{j}) needs j <= n")));
        }
        Ok(self.rows[n][j].clone())
    }
}

/// Size of the shared table behind [`stirling2`]; larger inputs are computed
/// on the fly.
pub const DEFAULT_TABLE_SIZE: usize = 32;

fn shared_table() -> &'static StirlingTable {
    static TABLE: OnceLock<StirlingTable> = OnceLock::new();
    TABLE.get_or_init(|| StirlingTable::new(DEFAULT_TABLE_SIZE))
}

/// Stirling number of the second kind S(n,j).
pub fn stirling2(n: usize, j: usize) -> Result<Int> {
    if j > n {
        return Err(Error::IndexError(format!("S({n},{j}) needs j <= n")));
    }
    if n <= DEFAULT_TABLE_SIZE {
        shared_table().get(n, j)
    } else {
        StirlingTable::new(n).get(n, j)
    }
}

/// n! as a big integer.
pub fn factorial(n: usize) -> Int {
    (1..=n).fold(Int::one(), |acc, i| acc * Int::from(i))
}

/// Binomial coefficient C(n,k) as a big integer (zero when k > n).
pub fn binomial(n: usize, k: usize) -> Int {
    if k > n {
        return Int::zero();
    }
    let k = k.min(n - k);
    let mut acc = Int::one();
    for i in 0..k {
        acc = acc * Int::from(n - i) / Int::from(i + 1);
    }
    acc
}

/// C(n,k) embedded in the coefficient field.
pub fn binomial_in<T: Coeff>(n: usize, k: usize) -> T {
    if k > n {
        return T::zero();
    }
    let mut acc = T::one();
    for i in 0..k.min(n - k) {
        acc = acc * from_int::<T>((n - i) as i64) / from_int::<T>((i + 1) as i64);
    }
    acc
}

/// Partial Bell polynomial B_{n,k}(phi) = n! [t^n] phi^k / k!.
pub fn bell_partial<T: Coeff>(phi: &Series<T>, n: usize, k: usize) -> Result<T> {
    if !phi.constant_term().is_zero() {
        return Err(Error::Hypothesis("bell_partial needs phi(0) = 0".into()));
    }
    if n > phi.order() {
        return Err(Error::TruncationExceeded { index: n, order: phi.order() });
    }
    if k > n {
        return Err(Error::IndexError(format!("B_{{{n},{k}}} needs k <= n")));
    }
    let pow = phi.truncated(n).powi(k as i64)?;
    Ok(factorial_in::<T>(n) * pow.coeff(n).clone() / factorial_in::<T>(k))
}

/// A dense polynomial in one variable, trimmed to canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Coeff> Poly<T> {
    /// Trims trailing zeros; the zero polynomial keeps a single coefficient.
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.len() > 1 && coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(T::zero());
        }
        Poly { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of z^j (zero past the degree).
    pub fn coeff(&self, j: usize) -> T {
        self.coeffs.get(j).cloned().unwrap_or_else(T::zero)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Substitutes a series for the variable (Horner).
    pub fn eval_series(&self, x: &Series<T>) -> Result<Series<T>> {
        let mut acc = Series::constant(self.coeffs.last().unwrap().clone(), x.order());
        for c in self.coeffs.iter().rev().skip(1) {
            acc = acc.mul(x)?;
            acc = acc.add(&Series::constant(c.clone(), x.order()))?;
        }
        Ok(acc)
    }

    /// Evaluates at a scalar point.
    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }
}

/// Touchard (Bell) polynomial B_n(z) = sum_j S(n,j) z^j.
pub fn touchard_poly(n: usize) -> Poly<Rat> {
    Poly::new((0..=n).map(|j| Rat::from(stirling2(n, j).unwrap())).collect())
}

/// Fubini polynomial F_n(z) = sum_j j! S(n,j) z^j.
pub fn fubini_poly(n: usize) -> Poly<Rat> {
    Poly::new(
        (0..=n)
            .map(|j| Rat::from(factorial(j) * stirling2(n, j).unwrap()))
            .collect(),
    )
}

/// Falling factorial (alpha)_m = alpha (alpha - 1) ... (alpha - m + 1),
/// with the empty product equal to 1.
pub fn falling<T: Coeff>(alpha: &T, m: usize) -> T {
    (0..m).fold(T::one(), |acc, i| acc * (alpha.clone() - from_int::<T>(i as i64)))
}
