use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A Laurent polynomial in `q` stored densely: `coeffs[i]` is the
/// coefficient of `q^(low + i)`.
///
/// Normal form: no leading or trailing zero coefficients; the zero
/// polynomial has no coefficients and `low == 0`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly::default()
    }

    pub fn one() -> Self {
        QPoly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        QPoly::from_coeffs(0, vec![c.into()])
    }

    /// `c * q^k`.
    pub fn monomial(c: impl Into<BigInt>, k: i64) -> Self {
        QPoly::from_coeffs(k, vec![c.into()])
    }

    /// `1 - q^e`; zero when `e == 0`.
    pub fn one_minus_q_pow(e: i64) -> Self {
        &QPoly::one() - &QPoly::monomial(1, e)
    }

    pub fn from_coeffs(low: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = QPoly { low, coeffs };
        p.normalize();
        p
    }

    /// From `(power, coefficient)` pairs; repeated powers are summed.
    pub fn from_sparse(terms: impl IntoIterator<Item = (i64, BigInt)>) -> Self {
        let terms: Vec<(i64, BigInt)> = terms.into_iter().collect();
        let Some(low) = terms.iter().map(|(k, _)| *k).min() else {
            return QPoly::zero();
        };
        let high = terms.iter().map(|(k, _)| *k).max().unwrap();
        let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
        for (k, c) in terms {
            coeffs[(k - low) as usize] += c;
        }
        QPoly::from_coeffs(low, coeffs)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.low += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest power present (0 for the zero polynomial).
    pub fn low(&self) -> i64 {
        self.low
    }

    /// Highest power present, `None` for zero.
    pub fn high(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.low + self.coeffs.len() as i64 - 1)
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^k`.
    pub fn coeff(&self, k: i64) -> BigInt {
        let i = k - self.low;
        if i < 0 || i >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// Nonzero terms as `(power, coefficient)` in ascending order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        let low = self.low;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (low + i as i64, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// True when there are no negative powers of `q`.
    pub fn is_polynomial(&self) -> bool {
        self.low >= 0
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        QPoly { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &BigInt) -> QPoly {
        QPoly::from_coeffs(self.low, self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, k: u32) -> QPoly {
        (0..k).fold(QPoly::one(), |acc, _| &acc * self)
    }

    /// Value at `q = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Splits off the power of `q`: returns `(k, p)` with `self = q^k * p`
    /// and `p` having a nonzero constant term.
    pub(crate) fn split_q_power(&self) -> (i64, QPoly) {
        (self.low, QPoly { low: 0, coeffs: self.coeffs.clone() })
    }

    fn primitive(&self) -> QPoly {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        QPoly { low: self.low, coeffs: self.coeffs.iter().map(|x| x / &c).collect() }
    }

    /// Pseudo-remainder of `self` by `div`, made primitive. Both operands
    /// must be ordinary polynomials.
    fn prem_primitive(&self, div: &QPoly) -> QPoly {
        let dlen = div.coeffs.len();
        let lc_d = div.coeffs[dlen - 1].clone();
        let mut r = self.coeffs.clone();
        while r.len() >= dlen {
            let lc_r = r[r.len() - 1].clone();
            let off = r.len() - dlen;
            for c in r.iter_mut() {
                *c *= &lc_d;
            }
            for (i, dc) in div.coeffs.iter().enumerate() {
                r[off + i] -= &lc_r * dc;
            }
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
            let g = r.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
            if !g.is_zero() && !g.is_one() {
                for c in r.iter_mut() {
                    *c = &*c / &g;
                }
            }
        }
        QPoly::from_coeffs(0, r)
    }

    /// Primitive gcd of two ordinary polynomials with nonzero constant terms,
    /// normalized to a positive leading coefficient.
    pub(crate) fn gcd_primitive(a: &QPoly, b: &QPoly) -> QPoly {
        let (mut a, mut b) = (a.primitive(), b.primitive());
        if a.coeffs.len() < b.coeffs.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.prem_primitive(&b);
            a = b;
            b = r;
        }
        if a.leading_coeff().is_some_and(Signed::is_negative) {
            a = -&a;
        }
        a
    }

    /// Exact quotient `self / div` over the integers; fails when the
    /// division leaves a remainder or a non-integer coefficient.
    pub fn div_exact(&self, div: &QPoly) -> Result<QPoly> {
        if div.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(QPoly::zero());
        }
        let dlen = div.coeffs.len();
        if self.coeffs.len() < dlen {
            return Err(Error::invariant(format!("{div} does not divide {self}")));
        }
        let lc_d = &div.coeffs[dlen - 1];
        let mut r = self.coeffs.clone();
        let qlen = r.len() - dlen + 1;
        let mut quot = vec![BigInt::zero(); qlen];
        for i in (0..qlen).rev() {
            let top = &r[i + dlen - 1];
            if top.is_zero() {
                continue;
            }
            let (qc, rem) = top.div_rem(lc_d);
            if !rem.is_zero() {
                return Err(Error::invariant(format!("{div} does not divide {self}")));
            }
            for (j, dc) in div.coeffs.iter().enumerate() {
                r[i + j] -= &qc * dc;
            }
            quot[i] = qc;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return Err(Error::invariant(format!("{div} does not divide {self}")));
        }
        Ok(QPoly::from_coeffs(self.low - div.low, quot))
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

/// Ascending powers, e.g. `1 + 2*q - q^3`.
impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms().enumerate() {
            let abs = c.abs();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let var = match k {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{k}"),
            };
            if var.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{var}")?;
            } else {
                write!(f, "{abs}*{var}")?;
            }
        }
        Ok(())
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.high().unwrap().max(rhs.high().unwrap());
        let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
        for p in [self, rhs] {
            for (i, c) in p.coeffs.iter().enumerate() {
                coeffs[(p.low - low) as usize + i] += c;
            }
        }
        QPoly::from_coeffs(low, coeffs)
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &(-rhs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(self.low + rhs.low, coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(low: i64, cs: &[i64]) -> QPoly {
        QPoly::from_coeffs(low, cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn normal_form_trims_zeros() {
        let a = p(-2, &[0, 0, 1, 2, 0]);
        assert_eq!(a.low(), 0);
        assert_eq!(a.coeffs().len(), 2);
        assert!(p(3, &[0, 0]).is_zero());
        assert_eq!(p(3, &[0]).low(), 0);
    }

    #[test]
    fn rendering() {
        assert_eq!(p(0, &[1, 2, 0, 1]).to_string(), "1 + 2*q + q^3");
        assert_eq!(p(0, &[-1]).to_string(), "-1");
        assert_eq!(p(-1, &[-1, 0, 3]).to_string(), "-q^-1 + 3*q");
        assert_eq!(QPoly::zero().to_string(), "0");
        assert_eq!(QPoly::one_minus_q_pow(2).to_string(), "1 - q^2");
    }

    #[test]
    fn gcd_and_exact_division() {
        // (1 - q^2) and (1 - q) share 1 - q
        let a = QPoly::one_minus_q_pow(2);
        let b = QPoly::one_minus_q_pow(1);
        let g = QPoly::gcd_primitive(&a, &b);
        assert_eq!(g, p(0, &[-1, 1]));
        assert_eq!(a.div_exact(&b).unwrap(), p(0, &[1, 1]));
        assert!(b.div_exact(&a).is_err());
        assert!(p(0, &[1, 0, 1]).div_exact(&p(0, &[1, 1])).is_err());
    }

    #[test]
    fn shifted_arithmetic() {
        let a = p(-1, &[1, 1]);
        let b = p(2, &[1]);
        assert_eq!(&a * &b, p(1, &[1, 1]));
        assert_eq!(&a + &b, p(-1, &[1, 1, 0, 1]));
        assert!((&a - &a).is_zero());
        assert_eq!(p(0, &[1, 2, 3]).eval_at_one(), BigInt::from(6));
    }
}
