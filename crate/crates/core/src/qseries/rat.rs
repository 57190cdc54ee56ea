use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::QPoly;
use crate::error::{Error, Result};

/// A reduced rational function of `q` with integer coefficients.
///
/// Canonical form: `den` is an ordinary polynomial with nonzero constant
/// term and positive leading coefficient; all powers of `q` live in `num`;
/// `gcd(num, den) = 1` and the coefficients of `num` and `den` together
/// have no common integer factor. Equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QRat {
    num: QPoly,
    den: QPoly,
}

impl QRat {
    pub fn new(num: QPoly, den: QPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(QRat::zero());
        }
        let (sn, n) = num.split_q_power();
        let (sd, d) = den.split_q_power();
        let g = QPoly::gcd_primitive(&n, &d);
        let (mut n, mut d) = if g.high() == Some(0) {
            (n, d)
        } else {
            (n.div_exact(&g)?, d.div_exact(&g)?)
        };
        let c = n.content().gcd(&d.content());
        if !c.is_one() {
            n = QPoly::from_coeffs(0, n.coeffs().iter().map(|x| x / &c).collect());
            d = QPoly::from_coeffs(0, d.coeffs().iter().map(|x| x / &c).collect());
        }
        if d.leading_coeff().is_some_and(Signed::is_negative) {
            n = -&n;
            d = -&d;
        }
        Ok(QRat { num: n.shift(sn - sd), den: d })
    }

    pub fn zero() -> Self {
        QRat { num: QPoly::zero(), den: QPoly::one() }
    }

    pub fn one() -> Self {
        QRat::from_poly(QPoly::one())
    }

    pub fn from_poly(p: QPoly) -> Self {
        // a Laurent polynomial over 1 is already canonical
        QRat { num: p, den: QPoly::one() }
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the reduced denominator is 1 (a Laurent polynomial in `q`).
    pub fn is_laurent_poly(&self) -> bool {
        self.den.is_one()
    }

    /// True when the value is an ordinary polynomial in `q`.
    pub fn is_polynomial(&self) -> bool {
        self.is_laurent_poly() && self.num.is_polynomial()
    }

    pub fn as_poly(&self) -> Option<&QPoly> {
        self.is_laurent_poly().then_some(&self.num)
    }

    pub fn recip(&self) -> Result<QRat> {
        QRat::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &QRat) -> Result<QRat> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        QRat::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    /// Exact value at `q = 1`; the fraction is already reduced, so a zero
    /// denominator there is a genuine pole.
    pub fn eval_at_one(&self) -> Result<BigRational> {
        let d = self.den.eval_at_one();
        if d.is_zero() {
            return Err(Error::PoleAtOne(format!(
                "{self} has a pole at q = 1; reduce first or use the q = 1 limit formulas"
            )));
        }
        Ok(BigRational::new(self.num.eval_at_one(), d))
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> QRat {
        QRat { num: self.num.shift(k), den: self.den.clone() }
    }

    pub fn scale(&self, c: &BigInt) -> QRat {
        QRat::new(self.num.scale(c), self.den.clone()).expect("nonzero denominator")
    }
}

impl fmt::Debug for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QRat({self})")
    }
}

/// `num` alone when the denominator is 1, otherwise `num/den` with
/// multi-term parts parenthesized.
impl fmt::Display for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &QPoly| {
            if p.num_terms() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl From<QPoly> for QRat {
    fn from(p: QPoly) -> Self {
        QRat::from_poly(p)
    }
}

impl Add for &QRat {
    type Output = QRat;
    fn add(self, rhs: &QRat) -> QRat {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return QRat::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero denominator");
        }
        QRat::new(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
            .expect("nonzero denominator")
    }
}

impl Sub for &QRat {
    type Output = QRat;
    fn sub(self, rhs: &QRat) -> QRat {
        self + &(-rhs)
    }
}

impl Neg for &QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        QRat { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &QRat {
    type Output = QRat;
    fn mul(self, rhs: &QRat) -> QRat {
        QRat::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

impl std::iter::Sum for QRat {
    fn sum<I: Iterator<Item = QRat>>(iter: I) -> QRat {
        iter.fold(QRat::zero(), |acc, x| &acc + &x)
    }
}

impl std::iter::Product for QRat {
    fn product<I: Iterator<Item = QRat>>(iter: I) -> QRat {
        iter.fold(QRat::one(), |acc, x| &acc * &x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(low: i64, cs: &[i64]) -> QPoly {
        QPoly::from_coeffs(low, cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn common_factor_cancels() {
        let r = QRat::new(QPoly::one_minus_q_pow(2), QPoly::one_minus_q_pow(1)).unwrap();
        assert_eq!(r, QRat::from_poly(p(0, &[1, 1])));
        assert!(r.is_polynomial());
    }

    #[test]
    fn inverse_sums_to_zero() {
        let r = QRat::new(p(0, &[1, 2]), p(0, &[3, 0, 1])).unwrap();
        assert!((&r + &(-&r)).is_zero());
    }

    #[test]
    fn cyclotomic_product_is_one() {
        let a = QRat::new(QPoly::one_minus_q_pow(1), QPoly::one_minus_q_pow(3)).unwrap();
        let b = QRat::from_poly(p(0, &[1, 1, 1]));
        assert_eq!(&a * &b, QRat::one());
    }

    #[test]
    fn normalization_sign_content_and_shift() {
        // (2q^3 - 2q^4) / (-4q + 4q^2) = -q^2 / 2
        let r = QRat::new(p(3, &[2, -2]), p(1, &[-4, 4])).unwrap();
        assert_eq!(r.num(), &p(2, &[-1]));
        assert_eq!(r.den(), &p(0, &[2]));
        assert!(r.den().leading_coeff().unwrap().is_positive());
        let again = QRat::new(r.num().clone(), r.den().clone()).unwrap();
        assert_eq!(again, r);
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(QRat::new(QPoly::one(), QPoly::zero()), Err(Error::DivisionByZero));
        assert!(QRat::one().checked_div(&QRat::zero()).is_err());
    }

    #[test]
    fn evaluation_at_one() {
        let two = BigRational::from_integer(BigInt::from(2));
        assert_eq!(QRat::from_poly(p(0, &[1, 1])).eval_at_one().unwrap(), two);
        let r = QRat::new(QPoly::one_minus_q_pow(2), QPoly::one_minus_q_pow(1)).unwrap();
        assert_eq!(r.eval_at_one().unwrap(), two);
        let pole = QRat::new(QPoly::one(), QPoly::one_minus_q_pow(1)).unwrap();
        assert!(matches!(pole.eval_at_one(), Err(Error::PoleAtOne(_))));
    }

    #[test]
    fn rendering() {
        let r = QRat::new(QPoly::one(), QPoly::one_minus_q_pow(1)).unwrap();
        assert_eq!(r.to_string(), "-1/(-1 + q)");
    }
}
