//! Rational functions whose denominators are products of binomials
//! `1 - q^e x_top/x_bot` and pure `q` factors, read in the iterated Laurent
//! field where `x_0` is innermost.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::laurent::{ExpVec, LaurentPoly, Monomial};
use crate::qseries::{QPoly, QRat};

/// `1 - q^e x_top / x_bot`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinomFactor {
    pub top: usize,
    pub bot: usize,
    pub e: i64,
}

/// Position of a variable inside a binomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Smallness {
    Small,
    Large,
    Free,
}

impl BinomFactor {
    pub fn new(top: usize, bot: usize, e: i64) -> Result<Self> {
        if top == bot {
            return Err(Error::usage(format!("binomial with x_{top} on both sides")));
        }
        Ok(BinomFactor { top, bot, e })
    }

    pub fn contains(&self, var: usize) -> bool {
        self.top == var || self.bot == var
    }

    /// The other variable of the factor, if `var` occurs in it.
    pub fn partner(&self, var: usize) -> Option<usize> {
        if self.top == var {
            Some(self.bot)
        } else if self.bot == var {
            Some(self.top)
        } else {
            None
        }
    }

    /// Orients the ratio so that `var` is on top; the result is small when
    /// `var` has the lower index.
    pub fn classify(&self, var: usize) -> Smallness {
        match self.partner(var) {
            None => Smallness::Free,
            Some(other) if var < other => Smallness::Small,
            Some(_) => Smallness::Large,
        }
    }

    /// The zero `x_var = q^c x_t` of the factor in `var`, as `(t, c)`.
    pub fn pole(&self, var: usize) -> Option<(usize, i64)> {
        if self.top == var {
            Some((self.bot, -self.e))
        } else if self.bot == var {
            Some((self.top, self.e))
        } else {
            None
        }
    }

    pub fn to_poly(&self, arity: usize) -> LaurentPoly {
        LaurentPoly::one_minus(&Monomial::ratio(arity, self.top, self.bot, self.e))
    }

    /// Image under `x_var -> q^c x_t`: either a binomial or the exponent of a
    /// pure factor `1 - q^k`.
    fn subst(&self, var: usize, t: usize, c: i64) -> Substituted {
        let (top, bot, e) = if self.top == var {
            (t, self.bot, self.e + c)
        } else if self.bot == var {
            (self.top, t, self.e - c)
        } else {
            return Substituted::Binom(*self);
        };
        if top == bot {
            Substituted::Pure(e)
        } else {
            Substituted::Binom(BinomFactor { top, bot, e })
        }
    }
}

enum Substituted {
    Binom(BinomFactor),
    Pure(i64),
}

impl fmt::Display for BinomFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = match self.e {
            0 => String::new(),
            1 => "q*".to_string(),
            e => format!("q^{e}*"),
        };
        write!(f, "(1 - {q}x{}/x{})", self.top, self.bot)
    }
}

/// `rest * prod(num) * num_q / (prod(den) * den_q)`.
///
/// The numerator is kept partly factored so that substitutions act on each
/// binomial separately; [`RatLaurent::numerator`] expands it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatLaurent {
    arity: usize,
    rest: LaurentPoly,
    num: Vec<BinomFactor>,
    den: Vec<BinomFactor>,
    num_q: QPoly,
    den_q: QPoly,
}

impl RatLaurent {
    pub fn from_poly(p: LaurentPoly) -> Self {
        RatLaurent { arity: p.arity(), rest: p, num: Vec::new(), den: Vec::new(), num_q: QPoly::one(), den_q: QPoly::one() }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn rest(&self) -> &LaurentPoly {
        &self.rest
    }

    pub fn num_factors(&self) -> &[BinomFactor] {
        &self.num
    }

    pub fn den_factors(&self) -> &[BinomFactor] {
        &self.den
    }

    pub fn num_q(&self) -> &QPoly {
        &self.num_q
    }

    pub fn den_q(&self) -> &QPoly {
        &self.den_q
    }

    fn check_factor(&self, f: &BinomFactor) -> Result<()> {
        if f.top >= self.arity || f.bot >= self.arity {
            return Err(Error::ArityMismatch { left: self.arity, right: f.top.max(f.bot) + 1 });
        }
        Ok(())
    }

    pub fn mul_factor(mut self, f: BinomFactor) -> Result<Self> {
        self.check_factor(&f)?;
        self.num.push(f);
        Ok(self)
    }

    pub fn div_factor(mut self, f: BinomFactor) -> Result<Self> {
        self.check_factor(&f)?;
        self.den.push(f);
        Ok(self)
    }

    /// Multiplies by `1 - q^e`.
    pub fn mul_pure(mut self, e: i64) -> Self {
        self.num_q = &self.num_q * &QPoly::one_minus_q_pow(e);
        self
    }

    /// Divides by `1 - q^e`, `e != 0`.
    pub fn div_pure(mut self, e: i64) -> Result<Self> {
        if e == 0 {
            return Err(Error::DivisionByZero);
        }
        self.den_q = &self.den_q * &QPoly::one_minus_q_pow(e);
        Ok(self)
    }

    /// Removes one copy of `f` from the denominator.
    pub fn cancel_den(mut self, f: &BinomFactor) -> Result<Self> {
        let pos = self
            .den
            .iter()
            .position(|g| g == f)
            .ok_or_else(|| Error::invariant(format!("denominator has no factor {f}")))?;
        self.den.remove(pos);
        Ok(self)
    }

    pub fn is_zero(&self) -> bool {
        self.rest.is_zero() || self.num_q.is_zero()
    }

    /// Degree in `var` (numerator degree minus denominator degree), `None`
    /// for the zero function.
    pub fn degree_in(&self, var: usize) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        let tops = |fs: &[BinomFactor]| fs.iter().filter(|f| f.top == var).count() as i64;
        Some(self.rest.max_degree_in(var)? as i64 + tops(&self.num) - tops(&self.den))
    }

    /// Variables occurring in some binomial of the denominator.
    pub fn den_vars(&self) -> Vec<usize> {
        let mut vs: Vec<usize> = self.den.iter().flat_map(|f| [f.top, f.bot]).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    pub fn numerator(&self) -> LaurentPoly {
        let mut out = self.numerator_without_q();
        out = &out * &LaurentPoly::from_qpoly(self.arity, &self.num_q);
        out
    }

    fn numerator_without_q(&self) -> LaurentPoly {
        self.num.iter().fold(self.rest.clone(), |acc, f| &acc * &f.to_poly(self.arity))
    }

    pub fn denominator(&self) -> LaurentPoly {
        self.den
            .iter()
            .fold(LaurentPoly::from_qpoly(self.arity, &self.den_q), |acc, f| &acc * &f.to_poly(self.arity))
    }

    /// Exact comparison by cross-multiplication.
    pub fn same_value(&self, other: &RatLaurent) -> bool {
        self.arity == other.arity && &self.numerator() * &other.denominator() == &other.numerator() * &self.denominator()
    }

    /// `x_var -> q^c x_t` everywhere. A denominator factor sent to `1 - q^0`
    /// is an invariant breach.
    pub fn subst(&self, var: usize, t: usize, c: i64) -> Result<RatLaurent> {
        if var == t {
            return Err(Error::usage("substitution of a variable by itself"));
        }
        let image = Monomial::var(self.arity, t, c);
        let mut out = RatLaurent {
            arity: self.arity,
            rest: self.rest.subst_monomial(var, &image)?,
            num: Vec::with_capacity(self.num.len()),
            den: Vec::with_capacity(self.den.len()),
            num_q: self.num_q.clone(),
            den_q: self.den_q.clone(),
        };
        for f in &self.num {
            match f.subst(var, t, c) {
                Substituted::Binom(g) => out.num.push(g),
                Substituted::Pure(e) => out.num_q = &out.num_q * &QPoly::one_minus_q_pow(e),
            }
        }
        for f in &self.den {
            match f.subst(var, t, c) {
                Substituted::Binom(g) => out.den.push(g),
                Substituted::Pure(0) => {
                    return Err(Error::invariant(format!("x{var} -> q^{c} x{t} sends {f} to zero")));
                }
                Substituted::Pure(e) => out.den_q = &out.den_q * &QPoly::one_minus_q_pow(e),
            }
        }
        Ok(out)
    }

    /// The value when no variable is left.
    pub fn to_qrat(&self) -> Result<QRat> {
        let num = self.numerator();
        if !num.is_x_free() || !self.den.is_empty() {
            return Err(Error::invariant("value still depends on x"));
        }
        QRat::new(num.to_qpoly()?, self.den_q.clone())
    }
}

impl fmt::Display for RatLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.rest)?;
        for g in &self.num {
            write!(f, "{g}")?;
        }
        if !self.num_q.is_one() {
            write!(f, "({})", self.num_q)?;
        }
        if !self.den.is_empty() || !self.den_q.is_one() {
            write!(f, " / ")?;
            for g in &self.den {
                write!(f, "{g}")?;
            }
            if !self.den_q.is_one() {
                write!(f, "({})", self.den_q)?;
            }
        }
        Ok(())
    }
}

/// Where a summand of a constant-term extraction comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PieceKind {
    /// Residue at the small pole `x_var = q^c x_t`.
    Residue { t: usize, c: i64 },
    /// The polynomial part evaluated at 0.
    Polynomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub kind: PieceKind,
    pub value: RatLaurent,
}

/// Complete homogeneous symmetric polynomials `h_0..=h_deg` of monomials.
fn complete_homogeneous(alphas: &[Monomial], arity: usize, deg: usize) -> Vec<LaurentPoly> {
    let mut h = vec![LaurentPoly::zero(arity); deg + 1];
    h[0] = LaurentPoly::one(arity);
    for alpha in alphas {
        for l in 1..=deg {
            let step = h[l - 1].mul_monomial(alpha);
            h[l] = &h[l] + &step;
        }
    }
    h
}

/// `CT_var F` as a list of summands: one residue per small pole and, when
/// `F` is not proper in `var`, the polynomial part at 0.
///
/// Each factor in `var` is written `c * (1 - x_var/alpha)`. The polynomial
/// part at 0 is the `x_var^0` coefficient of the expansion at infinity,
/// `(-1)^m prod(alpha) sum_L N_{m+L} h_L(alpha)`.
pub fn ct_extract(f: &RatLaurent, var: usize) -> Result<Vec<Piece>> {
    if var >= f.arity {
        return Err(Error::usage(format!("no variable x{var}")));
    }
    if f.is_zero() {
        return Ok(Vec::new());
    }
    let arity = f.arity;
    let (inner, outer): (Vec<BinomFactor>, Vec<BinomFactor>) = f.den.iter().partition(|g| g.contains(var));

    let poles: Vec<(usize, i64)> = inner.iter().map(|g| g.pole(var).expect("factor contains var")).collect();
    for (i, p) in poles.iter().enumerate() {
        if poles[..i].contains(p) {
            return Err(Error::CoincidentPoles { var, detail: format!("x{var} = q^{} x{} twice", p.1, p.0) });
        }
    }

    // x_var^{-1} (1 - q^e x_t/x_var) = -q^e x_t x_var^{-1} (1 - x_var/alpha)
    let normalizer = |g: &BinomFactor| -> Monomial {
        let mut x = vec![0; arity];
        x[g.top] = -1;
        x[var] = 1;
        Monomial::new(-1, ExpVec::new(-g.e, x))
    };

    let mut pieces = Vec::new();
    for (g, &(t, c)) in inner.iter().zip(&poles) {
        if g.classify(var) != Smallness::Small {
            continue;
        }
        let mut value = f.clone().cancel_den(g)?;
        if g.bot == var {
            value.rest = value.rest.mul_monomial(&normalizer(g));
        }
        pieces.push(Piece { kind: PieceKind::Residue { t, c }, value: value.subst(var, t, c)? });
    }

    let degree = f.degree_in(var).expect("nonzero");
    if degree >= 0 {
        let m = inner.len();
        let mut numer = f.numerator_without_q();
        for g in inner.iter().filter(|g| g.bot == var) {
            numer = numer.mul_monomial(&normalizer(g));
        }
        let top = numer.max_degree_in(var).map(|d| d as i64);
        if top != Some(degree + m as i64) {
            return Err(Error::invariant(format!("degree bookkeeping in x{var}: {top:?} vs {}", degree + m as i64)));
        }
        let alphas: Vec<Monomial> = poles.iter().map(|&(t, c)| Monomial::var(arity, t, c)).collect();
        let h = complete_homogeneous(&alphas, arity, degree as usize);
        let mut sum = LaurentPoly::zero(arity);
        for (l, hl) in h.iter().enumerate() {
            let coeff = numer.coefficient_in(var, (m + l) as i32);
            sum = &sum + &(&coeff * hl);
        }
        let sign = if m % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        let prod = alphas.iter().fold(Monomial::new(sign, ExpVec::zero(arity)), |acc, a| acc.mul(a));
        let p0 = sum.mul_monomial(&prod);
        if !p0.is_zero() {
            let value = RatLaurent { arity, rest: p0, num: Vec::new(), den: outer, num_q: f.num_q.clone(), den_q: f.den_q.clone() };
            pieces.push(Piece { kind: PieceKind::Polynomial, value });
        }
    }
    Ok(pieces)
}

/// Constant term in every variable, eliminating at each step the lowest
/// variable that still occurs in a denominator binomial.
pub fn ct_full(f: &RatLaurent) -> Result<QRat> {
    if f.is_zero() {
        return Ok(QRat::zero());
    }
    match f.den_vars().first() {
        None => QRat::new(f.numerator().ct_all().to_qpoly()?, f.den_q.clone()),
        Some(&var) => {
            let mut total = QRat::zero();
            for piece in ct_extract(f, var)? {
                total = &total + &ct_full(&piece.value)?;
            }
            Ok(total)
        }
    }
}

/// Constant term in every variable, eliminating them in the given order,
/// which must list each variable once.
pub fn ct_in_order(f: &RatLaurent, order: &[usize]) -> Result<QRat> {
    let mut seen = order.to_vec();
    seen.sort_unstable();
    if seen != (0..f.arity).collect::<Vec<_>>() {
        return Err(Error::usage("order must be a permutation of the variables"));
    }
    ct_in_order_rec(f, order)
}

fn ct_in_order_rec(f: &RatLaurent, order: &[usize]) -> Result<QRat> {
    match order.split_first() {
        None => f.to_qrat(),
        Some((&var, rest)) => {
            let mut total = QRat::zero();
            for piece in ct_extract(f, var)? {
                total = &total + &ct_in_order_rec(&piece.value, rest)?;
            }
            Ok(total)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bf(top: usize, bot: usize, e: i64) -> BinomFactor {
        BinomFactor::new(top, bot, e).unwrap()
    }

    fn one(arity: usize) -> RatLaurent {
        RatLaurent::from_poly(LaurentPoly::one(arity))
    }

    #[test]
    fn classification() {
        assert_eq!(bf(0, 1, 1).classify(0), Smallness::Small);
        assert_eq!(bf(2, 1, -2).classify(2), Smallness::Large);
        assert_eq!(bf(1, 2, 1).classify(0), Smallness::Free);
        assert_eq!(bf(0, 1, 1).classify(1), Smallness::Large);
        assert!(BinomFactor::new(1, 1, 0).is_err());
    }

    #[test]
    fn degrees() {
        let f = one(2).mul_factor(bf(1, 0, 0)).unwrap();
        assert_eq!(f.degree_in(0), Some(0));
        assert_eq!(f.degree_in(1), Some(1));
        let g = one(2).div_factor(bf(0, 1, 0)).unwrap();
        assert_eq!(g.degree_in(0), Some(-1));
        assert_eq!(g.degree_in(1), Some(0));
    }

    #[test]
    fn single_geometric_series() {
        for (i, j) in [(0, 1), (1, 0)] {
            let f = one(2).div_factor(bf(i, j, 3)).unwrap();
            let pieces = ct_extract(&f, i).unwrap();
            let value: QRat = pieces.iter().map(|p| ct_full(&p.value).unwrap()).sum();
            let expected = if i < j { QRat::one() } else { QRat::zero() };
            assert_eq!(value, expected, "i = {i}, j = {j}");
        }
    }

    #[test]
    fn residue_with_polynomial_part() {
        // (1 - x0/x1)/(1 - x0/(x1 q)) in x0: residue at x1 q is 1 - q, and the
        // polynomial part at infinity is (-1)(q x1)(-1/x1) = q.
        let f = one(2).mul_factor(bf(0, 1, 0)).unwrap().div_factor(bf(0, 1, -1)).unwrap();
        let pieces = ct_extract(&f, 0).unwrap();
        assert_eq!(pieces.len(), 2);
        assert_eq!(pieces[0].kind, PieceKind::Residue { t: 1, c: 1 });
        assert_eq!(pieces[0].value.to_qrat().unwrap(), QRat::from_poly(QPoly::one_minus_q_pow(1)));
        assert_eq!(pieces[1].value.to_qrat().unwrap(), QRat::from_poly(QPoly::monomial(1, 1)));
        assert_eq!(ct_full(&f).unwrap(), QRat::one());
    }

    #[test]
    fn only_large_poles_give_zero() {
        let f = one(3).div_factor(bf(2, 0, 1)).unwrap().div_factor(bf(2, 1, -1)).unwrap();
        assert!(ct_extract(&f, 2).unwrap().is_empty());
    }

    #[test]
    fn coincident_poles_are_rejected() {
        let f = one(2).div_factor(bf(0, 1, 1)).unwrap().div_factor(bf(1, 0, -1)).unwrap();
        assert!(matches!(ct_extract(&f, 0), Err(Error::CoincidentPoles { .. })));
    }

    #[test]
    fn substitution_to_pure_factors() {
        let f = one(3).mul_factor(bf(0, 2, 2)).unwrap().div_factor(bf(1, 0, 0)).unwrap();
        let g = f.subst(0, 2, -2).unwrap();
        assert!(g.is_zero());
        assert!(f.subst(0, 1, 0).is_err());
        let h = f.subst(0, 1, 1).unwrap();
        assert_eq!(h.den_q(), &QPoly::one_minus_q_pow(-1));
        assert!(h.den_factors().is_empty());
    }
}
