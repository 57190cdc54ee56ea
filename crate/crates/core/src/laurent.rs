//! Sparse multivariate Laurent polynomials in `q, x_0, ..., x_n` with
//! arbitrary-precision integer coefficients.
//!
//! Terms are kept in a `BTreeMap` keyed by exponent vector so iteration
//! (and therefore rendering and any downstream summation) is deterministic.
//! The arity `n + 1` is fixed per polynomial; mixing arities is an error.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::qseries::QPoly;

/// Exponents of one term: the power of `q` and the powers of `x_0..x_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExpVec {
    pub q: i64,
    pub x: Vec<i32>,
}

impl ExpVec {
    pub fn zero(arity: usize) -> Self {
        ExpVec { q: 0, x: vec![0; arity] }
    }

    pub fn new(q: i64, x: Vec<i32>) -> Self {
        ExpVec { q, x }
    }

    pub fn arity(&self) -> usize {
        self.x.len()
    }

    fn add(&self, other: &ExpVec) -> ExpVec {
        ExpVec {
            q: self.q + other.q,
            x: self.x.iter().zip(&other.x).map(|(a, b)| a + b).collect(),
        }
    }

    /// True when no `x` variable appears.
    pub fn is_x_free(&self) -> bool {
        self.x.iter().all(|&e| e == 0)
    }
}

/// A single term `coeff * q^e * x^b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub coeff: BigInt,
    pub exp: ExpVec,
}

impl Monomial {
    pub fn new(coeff: impl Into<BigInt>, exp: ExpVec) -> Self {
        Monomial { coeff: coeff.into(), exp }
    }

    /// `q^qpow * x_0^b_0 * ... * x_n^b_n` with unit coefficient.
    pub fn unit(qpow: i64, x: Vec<i32>) -> Self {
        Monomial::new(1, ExpVec::new(qpow, x))
    }

    /// `q^qpow * x_top / x_bot`.
    pub fn ratio(arity: usize, top: usize, bot: usize, qpow: i64) -> Self {
        let mut x = vec![0; arity];
        x[top] += 1;
        x[bot] -= 1;
        Monomial::unit(qpow, x)
    }

    /// `q^qpow * x_var`.
    pub fn var(arity: usize, var: usize, qpow: i64) -> Self {
        let mut x = vec![0; arity];
        x[var] = 1;
        Monomial::unit(qpow, x)
    }

    pub fn arity(&self) -> usize {
        self.exp.arity()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let x = self.exp.x.iter().zip(&other.exp.x).map(|(a, b)| a + b).collect();
        Monomial::new(&self.coeff * &other.coeff, ExpVec::new(self.exp.q + other.exp.q, x))
    }

    /// Power of this monomial; only unit coefficients (up to sign) may take
    /// negative powers.
    fn pow(&self, k: i32) -> Result<(BigInt, ExpVec)> {
        let exp = ExpVec {
            q: self.exp.q * k as i64,
            x: self.exp.x.iter().map(|e| e * k).collect(),
        };
        let coeff = if k >= 0 {
            num_traits::pow(self.coeff.clone(), k as usize)
        } else if self.coeff.abs().is_one() {
            num_traits::pow(self.coeff.clone(), (-k) as usize)
        } else {
            return Err(Error::usage(
                "negative power of a substituted variable needs a unit coefficient",
            ));
        };
        Ok((coeff, exp))
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    arity: usize,
    terms: BTreeMap<ExpVec, BigInt>,
}

impl LaurentPoly {
    pub fn zero(arity: usize) -> Self {
        LaurentPoly { arity, terms: BTreeMap::new() }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, 1)
    }

    pub fn constant(arity: usize, c: impl Into<BigInt>) -> Self {
        Self::from_monomial(Monomial::new(c, ExpVec::zero(arity)))
    }

    pub fn from_monomial(m: Monomial) -> Self {
        let mut p = LaurentPoly::zero(m.arity());
        if !m.coeff.is_zero() {
            p.terms.insert(m.exp, m.coeff);
        }
        p
    }

    /// Builds a polynomial from `(coeff, exponents)` pairs, merging duplicates.
    pub fn from_terms<I>(arity: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (BigInt, ExpVec)>,
    {
        let mut p = LaurentPoly::zero(arity);
        for (c, e) in terms {
            if e.arity() != arity {
                return Err(Error::ArityMismatch { left: arity, right: e.arity() });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// `1 - m`.
    pub fn one_minus(m: &Monomial) -> Self {
        let mut p = LaurentPoly::one(m.arity());
        p.add_term(m.exp.clone(), -m.coeff.clone());
        p
    }

    /// `q^k` as a polynomial of the given arity.
    pub fn q_power(arity: usize, k: i64) -> Self {
        Self::from_monomial(Monomial::new(1, ExpVec::new(k, vec![0; arity])))
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExpVec, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &ExpVec) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, exp: ExpVec, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_arity(&self, other: &LaurentPoly) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch { left: self.arity, right: other.arity });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_arity(other)?;
        let (mut big, small) = if self.len() >= other.len() {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        for (e, c) in &small.terms {
            big.add_term(e.clone(), c.clone());
        }
        Ok(big)
    }

    pub fn checked_sub(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_arity(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(LaurentPoly::zero(self.arity));
        }
        let mut acc: HashMap<ExpVec, BigInt> =
            HashMap::with_capacity(self.len().saturating_mul(other.len()).min(1 << 20));
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                *acc.entry(ea.add(eb)).or_default() += ca * cb;
            }
        }
        Ok(LaurentPoly {
            arity: self.arity,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    /// Multiplies by a single term.
    pub fn mul_monomial(&self, m: &Monomial) -> LaurentPoly {
        assert_eq!(self.arity, m.arity(), "arity mismatch in mul_monomial");
        if m.coeff.is_zero() {
            return LaurentPoly::zero(self.arity);
        }
        LaurentPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, c)| (e.add(&m.exp), c * &m.coeff)).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero(self.arity);
        }
        LaurentPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    /// Replaces every occurrence of `x_var` by the monomial `m`.
    pub fn subst_monomial(&self, var: usize, m: &Monomial) -> Result<LaurentPoly> {
        self.subst_monomials(&[(var, m.clone())])
    }

    /// Simultaneous substitution `x_v -> m_v` for each listed pair. Variables
    /// appearing in the images are not substituted again.
    pub fn subst_monomials(&self, subs: &[(usize, Monomial)]) -> Result<LaurentPoly> {
        for (v, m) in subs {
            if *v >= self.arity {
                return Err(Error::usage(format!("variable x_{v} out of range")));
            }
            if m.arity() != self.arity {
                return Err(Error::ArityMismatch { left: self.arity, right: m.arity() });
            }
        }
        let mut out = LaurentPoly::zero(self.arity);
        for (e, c) in &self.terms {
            let mut exp = e.clone();
            let mut coeff = c.clone();
            for (v, _) in subs {
                exp.x[*v] = 0;
            }
            for (v, m) in subs {
                let k = e.x[*v];
                if k == 0 {
                    continue;
                }
                let (mc, me) = m.pow(k)?;
                exp = exp.add(&me);
                coeff *= mc;
            }
            out.add_term(exp, coeff);
        }
        Ok(out)
    }

    /// Applies a map on exponent vectors term by term.
    pub fn map_exponents(&self, f: impl Fn(&ExpVec) -> ExpVec) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.arity);
        for (e, c) in &self.terms {
            out.add_term(f(e), c.clone());
        }
        out
    }

    /// Sum of the terms whose exponent vanishes in every listed variable.
    pub fn ct_in_vars(&self, vars: &[usize]) -> LaurentPoly {
        LaurentPoly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| vars.iter().all(|&v| e.x[v] == 0))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Constant term in every `x` variable.
    pub fn ct_all(&self) -> LaurentPoly {
        let vars: Vec<usize> = (0..self.arity).collect();
        self.ct_in_vars(&vars)
    }

    /// The terms with exponent `k` in `x_var`, with that exponent reset to 0.
    pub fn coefficient_in(&self, var: usize, k: i32) -> LaurentPoly {
        LaurentPoly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.x[var] == k)
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.x[var] = 0;
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// Highest power of `x_var`, or `None` for the zero polynomial.
    pub fn max_degree_in(&self, var: usize) -> Option<i32> {
        self.terms.keys().map(|e| e.x[var]).max()
    }

    pub fn min_degree_in(&self, var: usize) -> Option<i32> {
        self.terms.keys().map(|e| e.x[var]).min()
    }

    pub fn contains_var(&self, var: usize) -> bool {
        self.terms.keys().any(|e| e.x[var] != 0)
    }

    pub fn is_x_free(&self) -> bool {
        self.terms.keys().all(ExpVec::is_x_free)
    }

    /// Converts an `x`-free polynomial to a univariate one in `q`.
    pub fn to_qpoly(&self) -> Result<QPoly> {
        if !self.is_x_free() {
            return Err(Error::usage("polynomial still depends on x variables"));
        }
        Ok(QPoly::from_sparse(self.terms.iter().map(|(e, c)| (e.q, c.clone()))))
    }

    /// Embeds a univariate polynomial in `q`.
    pub fn from_qpoly(arity: usize, p: &QPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero(arity);
        for (k, c) in p.terms() {
            out.add_term(ExpVec::new(k, vec![0; arity]), c.clone());
        }
        out
    }

    /// `(z)_k = (1 - z)(1 - z q) ... (1 - z q^{k-1})`.
    pub fn pochhammer_monomial(z: &Monomial, k: i64) -> Result<LaurentPoly> {
        if k < 0 {
            return Err(Error::usage(format!("negative Pochhammer length {k}")));
        }
        let mut out = LaurentPoly::one(z.arity());
        let mut zi = z.clone();
        for _ in 0..k {
            out = &out * &LaurentPoly::one_minus(&zi);
            zi.exp.q += 1;
        }
        Ok(out)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly[{}]({})", self.arity, self)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors = Vec::new();
            if e.q != 0 {
                factors.push(if e.q == 1 { "q".to_string() } else { format!("q^{}", e.q) });
            }
            for (v, &k) in e.x.iter().enumerate() {
                match k {
                    0 => {}
                    1 => factors.push(format!("x{v}")),
                    _ => factors.push(format!("x{v}^{k}")),
                }
            }
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_add(rhs).expect("arity mismatch in LaurentPoly addition")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_sub(rhs).expect("arity mismatch in LaurentPoly subtraction")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_mul(rhs).expect("arity mismatch in LaurentPoly multiplication")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(c: i64, q: i64, x: &[i32]) -> LaurentPoly {
        LaurentPoly::from_monomial(Monomial::new(c, ExpVec::new(q, x.to_vec())))
    }

    fn sum(ps: &[LaurentPoly]) -> LaurentPoly {
        ps.iter().fold(LaurentPoly::zero(ps[0].arity()), |acc, p| &acc + p)
    }

    #[test]
    fn additive_inverse_and_merge() {
        let x0 = mono(1, 0, &[1, 0]);
        assert!((&x0 + &mono(-1, 0, &[1, 0])).is_zero());

        let p = &LaurentPoly::one(2) + &mono(1, 1, &[0, 1]);
        let r = &p + &mono(1, 1, &[0, 1]);
        assert_eq!(r, sum(&[LaurentPoly::one(2), mono(2, 1, &[0, 1])]));
    }

    #[test]
    fn four_term_product() {
        // (1 - x0/x1)(1 - q x1/x0)
        let a = LaurentPoly::one_minus(&Monomial::ratio(2, 0, 1, 0));
        let b = LaurentPoly::one_minus(&Monomial::ratio(2, 1, 0, 1));
        let expected = sum(&[
            LaurentPoly::one(2),
            mono(1, 1, &[0, 0]),
            mono(-1, 1, &[-1, 1]),
            mono(-1, 0, &[1, -1]),
        ]);
        assert_eq!(&a * &b, expected);
        assert_eq!((&a * &b).ct_in_vars(&[0, 1]), sum(&[LaurentPoly::one(2), mono(1, 1, &[0, 0])]));
        assert_eq!(&mono(1, 0, &[1, -1]) * &mono(1, 0, &[-1, 1]), LaurentPoly::one(2));
        assert_eq!(&a * &LaurentPoly::one(2), a);
    }

    #[test]
    fn arity_mismatch_is_an_error() {
        let a = LaurentPoly::one(2);
        let b = LaurentPoly::one(3);
        assert_eq!(a.checked_add(&b), Err(Error::ArityMismatch { left: 2, right: 3 }));
        assert!(a.checked_mul(&b).is_err());
    }

    #[test]
    fn substitution_examples() {
        // x0/x1 with x0 -> x1 q^2 gives q^2
        let p = mono(1, 0, &[1, -1, 0]);
        let r = p.subst_monomial(0, &Monomial::var(3, 1, 2)).unwrap();
        assert_eq!(r, mono(1, 2, &[0, 0, 0]));

        // x0^2 with x0 -> x0/q gives x0^2 q^-2
        let p = mono(1, 0, &[2, 0, 0]);
        let r = p.subst_monomial(0, &Monomial::var(3, 0, -1)).unwrap();
        assert_eq!(r, mono(1, -2, &[2, 0, 0]));

        // 1 - x1/x2 with x1 -> x2 q gives 1 - q
        let p = LaurentPoly::one_minus(&Monomial::ratio(3, 1, 2, 0));
        let r = p.subst_monomial(1, &Monomial::var(3, 2, 1)).unwrap();
        assert_eq!(r, sum(&[LaurentPoly::one(3), mono(-1, 1, &[0, 0, 0])]));
    }

    #[test]
    fn constant_term_of_free_monomial_is_itself() {
        let p = mono(3, 2, &[0, 0, 1]);
        assert_eq!(p.ct_in_vars(&[0, 1]), p);
        assert!(p.ct_in_vars(&[2]).is_zero());
    }

    #[test]
    fn pochhammer_examples() {
        let z = Monomial::ratio(2, 0, 1, 0);
        assert_eq!(LaurentPoly::pochhammer_monomial(&z, 0).unwrap(), LaurentPoly::one(2));
        assert_eq!(LaurentPoly::pochhammer_monomial(&z, 1).unwrap(), LaurentPoly::one_minus(&z));
        let w = Monomial::ratio(2, 1, 0, 1);
        let expected = &LaurentPoly::one_minus(&w) * &LaurentPoly::one_minus(&Monomial::ratio(2, 1, 0, 2));
        assert_eq!(LaurentPoly::pochhammer_monomial(&w, 2).unwrap(), expected);
        assert!(LaurentPoly::pochhammer_monomial(&w, -1).is_err());
    }

    #[test]
    fn display_is_readable() {
        let p = sum(&[LaurentPoly::one(2), mono(-2, 1, &[1, -1])]);
        assert_eq!(p.to_string(), "1 - 2*q*x0*x1^-1");
    }
}
