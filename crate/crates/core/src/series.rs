//! Dense truncated multivariate power series with exact integer coefficients.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Coefficients of `x_1^{e_1} ... x_k^{e_k}` for `e_v <= orders[v]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    orders: Vec<usize>,
    coeffs: Vec<BigInt>,
}

impl Series {
    pub fn zero(orders: &[usize]) -> Self {
        let len = orders.iter().map(|o| o + 1).product();
        Series {
            orders: orders.to_vec(),
            coeffs: vec![BigInt::zero(); len],
        }
    }

    /// A polynomial given as `(coefficient, exponents)` terms; terms beyond
    /// the truncation are dropped.
    pub fn from_terms(orders: &[usize], terms: &[(i64, &[usize])]) -> Self {
        let mut s = Series::zero(orders);
        for &(c, exps) in terms {
            assert_eq!(exps.len(), orders.len(), "term arity");
            if exps.iter().zip(orders).all(|(e, o)| e <= o) {
                let k = s.flat(exps);
                s.coeffs[k] += c;
            }
        }
        s
    }

    pub fn orders(&self) -> &[usize] {
        &self.orders
    }

    fn flat(&self, exps: &[usize]) -> usize {
        exps.iter()
            .zip(&self.orders)
            .fold(0, |acc, (e, o)| acc * (o + 1) + e)
    }

    fn unflat(&self, mut k: usize) -> Vec<usize> {
        let mut exps = vec![0; self.orders.len()];
        for v in (0..self.orders.len()).rev() {
            exps[v] = k % (self.orders[v] + 1);
            k /= self.orders[v] + 1;
        }
        exps
    }

    /// Coefficient of the given monomial; zero beyond the truncation.
    pub fn coeff(&self, exps: &[usize]) -> BigInt {
        if exps.len() != self.orders.len() || exps.iter().zip(&self.orders).any(|(e, o)| e > o) {
            return BigInt::zero();
        }
        self.coeffs[self.flat(exps)].clone()
    }

    /// Nonzero coefficients in lexicographic order of exponents.
    pub fn nonzero_terms(&self) -> impl Iterator<Item = (Vec<usize>, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (self.unflat(k), c))
    }

    /// `self / denom`, solved coefficient by coefficient in lexicographic
    /// order of exponents: `q_m = n_m - Σ_{0 < d <= m} denom_d q_{m-d}`.
    pub fn divide(&self, denom: &Series) -> Result<Series> {
        if denom.orders != self.orders {
            return Err(Error::domain("series truncation orders differ"));
        }
        let zero_exps = vec![0; self.orders.len()];
        if !denom.coeff(&zero_exps).is_one() {
            return Err(Error::domain("denominator constant term must be 1"));
        }
        let denom_terms: Vec<(Vec<usize>, BigInt)> = denom
            .nonzero_terms()
            .filter(|(e, _)| e.iter().any(|&x| x > 0))
            .map(|(e, c)| (e, c.clone()))
            .collect();
        let mut q = Series::zero(&self.orders);
        for k in 0..self.coeffs.len() {
            let m = self.unflat(k);
            let mut acc = self.coeffs[k].clone();
            for (d, c) in &denom_terms {
                if d.iter().zip(&m).all(|(a, b)| a <= b) {
                    let rest: Vec<usize> = m.iter().zip(d).map(|(a, b)| a - b).collect();
                    acc -= c * &q.coeffs[q.flat(&rest)];
                }
            }
            q.coeffs[k] = acc;
        }
        Ok(q)
    }
}
