//! Closed-form right-hand sides: the q-Dyson product formula, the first-layer
//! formula and its three specializations, the special-point formula, the
//! q = 1 limits, and the product identity used in the special-point
//! evaluation.
//!
//! Everything that involves a possibly negative `a_0` is written with the
//! product `(1 - q^{a_0+1}) ... (1 - q^{a_0+a})` in place of
//! `(q)_{a+a_0} / (q)_{a_0}`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::dyson::{DysonParams, MonomialSpec};
use crate::error::{Error, Result};
use crate::qseries::{qpoch, qpoch_shifted, QPoly, QRat};

/// A subset `T` of `I_0` together with its derived quantities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetContext {
    t: Vec<usize>,
    sigma: i64,
    /// `w_0..w_n`; `w_i = 0` for `i` in `T`, else `a_i` (including `i = 0`).
    w_vec: Vec<i64>,
    w: i64,
}

impl SubsetContext {
    pub fn new(t: &[usize], params: &DysonParams) -> Result<Self> {
        let mut t = t.to_vec();
        t.sort_unstable();
        t.dedup();
        if t.last().is_some_and(|&i| i > params.n()) {
            return Err(Error::usage("subset index out of range"));
        }
        let w_vec: Vec<i64> =
            (0..params.arity()).map(|i| if t.contains(&i) { 0 } else { params.a(i) }).collect();
        Ok(SubsetContext {
            sigma: t.iter().map(|&i| params.a(i)).sum(),
            w: w_vec[1..].iter().sum(),
            t,
            w_vec,
        })
    }

    pub fn t(&self) -> &[usize] {
        &self.t
    }

    pub fn d(&self) -> usize {
        self.t.len()
    }

    pub fn sigma(&self) -> i64 {
        self.sigma
    }

    pub fn w_vec(&self) -> &[i64] {
        &self.w_vec
    }

    /// `w = w_1 + ... + w_n`.
    pub fn w(&self) -> i64 {
        self.w
    }

    /// `w_l + w_{l+1} + ... + w_n`.
    pub fn tail(&self, l: usize) -> i64 {
        self.w_vec[l..].iter().sum()
    }

    fn numerator_tails(&self, spec: &MonomialSpec) -> i64 {
        spec.j_list().iter().zip(spec.p()).map(|(&j, &p)| p as i64 * self.tail(j)).sum()
    }
}

/// All subsets of `items` in bitmask order (the empty set first).
pub fn subsets(items: &[usize]) -> Vec<Vec<usize>> {
    (0u32..1 << items.len())
        .map(|mask| items.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &i)| i).collect())
        .collect()
}

fn sign(k: i64) -> BigInt {
    if k.rem_euclid(2) == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn binom2(k: i64) -> i64 {
    k * (k - 1) / 2
}

fn is_subset(t: &[usize], of: &[usize]) -> bool {
    t.iter().all(|i| of.contains(i))
}

/// The exponent `L(T)` for nonempty `T` contained in `I_0`.
///
/// Tail sums starting at 0 include `w_0`, which is `a_0` when `0` is not in
/// `T`; with this reading `L(T) = L(T + {0}) + a_0`.
pub fn l_of_t(spec: &MonomialSpec, _params: &DysonParams, ctx: &SubsetContext) -> Result<i64> {
    if ctx.t().is_empty() || !is_subset(ctx.t(), spec.i_set()) {
        return Err(Error::usage("L(T) needs a nonempty T inside I_0"));
    }
    let first: i64 = spec.i_set().iter().map(|&l| ctx.tail(l)).sum();
    Ok(first - ctx.numerator_tails(spec))
}

/// The exponent `L*(T)` for `T` contained in `I`.
pub fn lstar_of_t(spec: &MonomialSpec, _params: &DysonParams, ctx: &SubsetContext) -> Result<i64> {
    if !is_subset(ctx.t(), spec.i_rest()) {
        return Err(Error::usage("L*(T) needs T inside I"));
    }
    let first: i64 = spec.i_rest().iter().map(|&l| ctx.tail(l)).sum();
    Ok(first - ctx.numerator_tails(spec) - binom2(ctx.w() + 1) - 1)
}

fn qpoch_product(ks: impl IntoIterator<Item = i64>) -> Result<QPoly> {
    ks.into_iter().try_fold(QPoly::one(), |acc, k| Ok(&acc * &qpoch(k)?))
}

/// `(q)_{a_1} ... (q)_{a_n}`.
fn qpoch_tail(params: &DysonParams) -> Result<QPoly> {
    qpoch_product(params.all()[1..].iter().copied())
}

/// `(1 - q^{a_0+1}) ... (1 - q^{a_0+a}) / ((q)_{a_1} ... (q)_{a_n})`, equal to
/// `(q)_{a+a_0} / ((q)_{a_0} (q)_{a_1} ... (q)_{a_n})` when `a_0 >= 0`.
pub fn prefactor(params: &DysonParams) -> Result<QRat> {
    QRat::new(qpoch_shifted(params.a0() + 1, params.a_sum())?, qpoch_tail(params)?)
}

/// Right-hand side of the q-Dyson product formula.
pub fn zb_rhs(params: &DysonParams) -> Result<QRat> {
    if params.a0() < 0 {
        return Err(Error::usage("zb_rhs needs a_0 >= 0"));
    }
    let num = qpoch(params.a0() + params.a_sum())?;
    let den = &qpoch(params.a0())? * &qpoch_tail(params)?;
    let r = QRat::from_poly(num.div_exact(&den)?);
    Ok(r)
}

/// One summand `(-1)^d q^{L(T)} (1 - q^{sigma}) / (1 - q^{1+a_0+a-sigma})`
/// without the prefactor.
pub fn main_summand(params: &DysonParams, spec: &MonomialSpec, t: &[usize]) -> Result<QRat> {
    let ctx = SubsetContext::new(t, params)?;
    let l = l_of_t(spec, params, &ctx)?;
    let den_exp = 1 + params.a0() + params.a_sum() - ctx.sigma();
    let num = QPoly::one_minus_q_pow(ctx.sigma()).shift(l).scale(&sign(ctx.d() as i64));
    QRat::new(num, QPoly::one_minus_q_pow(den_exp))
        .map_err(|_| Error::Pole(format!("1 - q^{den_exp} vanishes for T = {t:?}")))
}

/// Right-hand side of the first-layer formula for any integer `a_0`.
///
/// For `T` inside `I` the denominator `1 - q^{a_0} q^{1+a-sigma(T)}` is one of
/// the factors `1 - q^{a_0} q^k`, `1 <= k <= a`, of the prefactor whenever
/// `sigma(T) >= 1`; it is cancelled there as a polynomial in `q^{a_0}`, so the
/// result is the polynomial extension through the special points.
pub fn main_rhs(params: &DysonParams, spec: &MonomialSpec) -> Result<QRat> {
    if spec.m() == 0 {
        return prefactor(params);
    }
    let a = params.a_sum();
    let a0 = params.a0();
    let tail = qpoch_tail(params)?;
    let mut total = QRat::zero();
    for t in subsets(spec.i_set()).into_iter().filter(|t| !t.is_empty()) {
        let ctx = SubsetContext::new(&t, params)?;
        let l = l_of_t(spec, params, &ctx)?;
        let sgn = sign(ctx.d() as i64);
        let sigma = ctx.sigma();
        let term = if !t.contains(&0) {
            if sigma == 0 {
                continue;
            }
            let cancelled = 1 + a - sigma;
            let mut num = QPoly::one_minus_q_pow(sigma);
            for k in (1..=a).filter(|&k| k != cancelled) {
                num = &num * &QPoly::one_minus_q_pow(a0 + k);
            }
            QRat::new(num.shift(l).scale(&sgn), tail.clone())?
        } else {
            let den_exp = 1 + a0 + a - sigma;
            if den_exp == 0 {
                return Err(Error::Pole(format!(
                    "1 - q^0 in the summand for T = {t:?}; evaluate with mainlemma2_rhs"
                )));
            }
            let num = &QPoly::one_minus_q_pow(sigma) * &qpoch_shifted(a0 + 1, a)?;
            QRat::new(num.shift(l).scale(&sgn), &QPoly::one_minus_q_pow(den_exp) * &tail)?
        };
        total = &total + &term;
    }
    Ok(total)
}

fn check_index(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::usage(format!("index constraint violated: {what}")))
    }
}

fn range_sum(params: &DysonParams, from: usize, to: usize) -> i64 {
    (from..=to).filter(|&k| k >= 1 && k <= params.n()).map(|k| params.a(k)).sum()
}

fn rat(num: QPoly, den: QPoly) -> Result<QRat> {
    QRat::new(num, den).map_err(|_| Error::Pole("corollary denominator vanishes".into()))
}

/// `CT x_r/x_0 D_n` in closed form.
pub fn cor14_rhs(params: &DysonParams, r: usize) -> Result<QRat> {
    let n = params.n();
    check_index(0 < r && r <= n, "0 < r <= n")?;
    let a = params.a_sum();
    let lead = range_sum(params, 1, r - 1);
    let frac = rat(QPoly::one_minus_q_pow(params.a0()).shift(lead).scale(&-BigInt::one()), QPoly::one_minus_q_pow(a + 1))?;
    Ok(&frac * &prefactor(params)?)
}

fn two_index_fraction(params: &DysonParams, t: usize, extra_exp: i64) -> Result<QRat> {
    let (a0, a, at) = (params.a0(), params.a_sum(), params.a(t));
    let inner = &QPoly::one_minus_q_pow(a0 + a + 1) + &QPoly::one_minus_q_pow(a + 1 - at).shift(extra_exp);
    let num = &(&QPoly::one_minus_q_pow(a0) * &QPoly::one_minus_q_pow(at)) * &inner;
    let den = &(&QPoly::one_minus_q_pow(a + 1 - at) * &QPoly::one_minus_q_pow(a + 1))
        * &QPoly::one_minus_q_pow(a0 + a + 1 - at);
    rat(num, den)
}

/// `CT x_r^2/(x_0 x_t) D_n` in closed form, `1 <= t < r <= n`.
pub fn cor15_rhs(params: &DysonParams, r: usize, t: usize) -> Result<QRat> {
    let n = params.n();
    check_index(n >= 2 && 1 <= t && t < r && r <= n, "1 <= t < r <= n, n >= 2")?;
    let lead = 2 * range_sum(params, t + 1, r - 1) + range_sum(params, 1, t - 1);
    let frac = two_index_fraction(params, t, params.a(t))?;
    Ok(&frac.shift(lead) * &prefactor(params)?)
}

/// `CT x_r x_s/(x_0 x_t) D_n` in closed form, `1 <= r < s <= n`, `1 <= t < s`,
/// `t != r`.
pub fn cor16_rhs(params: &DysonParams, r: usize, s: usize, t: usize) -> Result<QRat> {
    let n = params.n();
    check_index(n >= 3 && 1 <= r && r < s && s <= n && 1 <= t && t < s && t != r, "1 <= r < s <= n, 1 <= t < s, t != r, n >= 3")?;
    let (lead, m_exp) = if r < t {
        (range_sum(params, 1, r - 1) + range_sum(params, t + 1, s - 1), 1 + params.a_sum() + params.a0())
    } else {
        (
            range_sum(params, r, s - 1) + range_sum(params, 1, t - 1) + 2 * range_sum(params, t + 1, r - 1),
            params.a(t),
        )
    };
    let frac = two_index_fraction(params, t, m_exp)?;
    Ok(&frac.shift(lead) * &prefactor(params)?)
}

/// The special values `-(a - sigma(T) + 1)` of `a_0`, for `T` inside `I`,
/// each with the subsets that produce it.
pub fn special_points(params: &DysonParams, spec: &MonomialSpec) -> Vec<(i64, Vec<Vec<usize>>)> {
    let mut out: Vec<(i64, Vec<Vec<usize>>)> = Vec::new();
    for t in subsets(spec.i_rest()) {
        let sigma: i64 = t.iter().map(|&i| params.a(i)).sum();
        let a0 = -(params.a_sum() - sigma + 1);
        match out.iter_mut().find(|(v, _)| *v == a0) {
            Some((_, ts)) => ts.push(t),
            None => out.push((a0, vec![t])),
        }
    }
    out.sort_by_key(|(v, _)| *v);
    out
}

/// `(-1)^{w+d} q^{L*(T)} (q)_w (q)_{a-w} / ((q)_{a_1} ... (q)_{a_n})` for one
/// subset `T` inside `I`.
pub fn special_point_term(params: &DysonParams, spec: &MonomialSpec, t: &[usize]) -> Result<QRat> {
    let ctx = SubsetContext::new(t, params)?;
    let lstar = lstar_of_t(spec, params, &ctx)?;
    let w = ctx.w();
    let num = (&qpoch(w)? * &qpoch(params.a_sum() - w)?).shift(lstar).scale(&sign(w + ctx.d() as i64));
    QRat::new(num, qpoch_tail(params)?)
}

/// Sum of [`special_point_term`] over the subsets `T` inside `I` with
/// `-(a - sigma(T) + 1) = a_0`.
pub fn mainlemma2_rhs(params: &DysonParams, spec: &MonomialSpec) -> Result<QRat> {
    if spec.m() == 0 {
        return Err(Error::usage("the special-point formula needs x_0 in the denominator"));
    }
    let Some((_, ts)) = special_points(params, spec).into_iter().find(|(v, _)| *v == params.a0()) else {
        return Err(Error::usage(format!(
            "a_0 = {} is not a special point; the constant term vanishes there",
            params.a0()
        )));
    };
    ts.iter().try_fold(QRat::zero(), |acc, t| Ok(&acc + &special_point_term(params, spec, t)?))
}

/// Checks the agreement of the first-layer formula with the special-point
/// formula at `a_0` (or its vanishing when `a_0` is not special).
pub fn check_lemma26(params: &DysonParams, spec: &MonomialSpec, a0: i64) -> Result<bool> {
    let a = params.a_sum();
    if spec.m() == 0 {
        return Err(Error::usage("the identity needs x_0 in the denominator"));
    }
    if a0 > 0 || a0 < -(a + 1) {
        return Err(Error::usage(format!("a_0 = {a0} outside 0..=-(a+1)")));
    }
    let p = params.with_a0(a0);
    let lhs = main_rhs(&p, spec)?;
    if special_points(&p, spec).iter().any(|(v, _)| *v == a0) {
        Ok(lhs == mainlemma2_rhs(&p, spec)?)
    } else {
        Ok(lhs.is_zero())
    }
}

fn factorial(k: i64) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * i)
}

/// The multinomial `(a_0 + ... + a_n)! / (a_0! ... a_n!)`.
pub fn dyson_rhs_q1(params: &DysonParams) -> Result<BigRational> {
    if params.all().iter().any(|&v| v < 0) {
        return Err(Error::usage("dyson_rhs_q1 needs nonnegative parameters"));
    }
    let total: i64 = params.all().iter().sum();
    let den = params.all().iter().fold(BigInt::one(), |acc, &v| acc * factorial(v));
    Ok(BigRational::new(factorial(total), den))
}

/// The `q -> 1` limit of the first-layer formula.
pub fn main_rhs_q1(params: &DysonParams, spec: &MonomialSpec) -> Result<BigRational> {
    let multinomial = dyson_rhs_q1(params)?;
    if spec.m() == 0 {
        return Ok(multinomial);
    }
    let mut sum = BigRational::zero();
    for t in subsets(spec.i_set()).into_iter().filter(|t| !t.is_empty()) {
        let ctx = SubsetContext::new(&t, params)?;
        let den = 1 + params.a_sum() + params.a0() - ctx.sigma();
        if den == 0 {
            return Err(Error::invariant("zero denominator in the q = 1 sum"));
        }
        sum += BigRational::new(sign(ctx.d() as i64) * ctx.sigma(), BigInt::from(den));
    }
    Ok(multinomial * sum)
}

/// Left side of the special-point product identity in the parameters `w_1..w_n`.
pub fn lemma51_lhs(w: &[i64]) -> Result<QRat> {
    if w.iter().any(|&v| v < 0) {
        return Err(Error::usage("entries must be nonnegative"));
    }
    let n = w.len();
    let tail = |l: usize| -> i64 { w[l..].iter().sum() };
    let head = |l: usize| -> i64 { w[..l].iter().sum() };
    let seg = |i: usize, j: usize| -> i64 { w[i..j].iter().sum() };
    let mut num = QPoly::one();
    let mut den = QPoly::one();
    #[allow(clippy::needless_range_loop)]
    for l in 0..n {
        num = &num * &qpoch_shifted(-tail(l), w[l])?;
        den = &den * &(&qpoch(tail(l))? * &qpoch_shifted(-head(l), head(l))?);
    }
    for i in 0..n {
        for j in i + 1..n {
            num = &num * &(&qpoch_shifted(-seg(i, j), w[i])? * &qpoch_shifted(seg(i, j) + 1, w[j])?);
        }
    }
    QRat::new(num, den)
}

/// Right side: `(-1)^w q^{-binom(w+1, 2)} (q)_w / ((q)_{w_1} ... (q)_{w_n})`.
pub fn lemma51_rhs(w: &[i64]) -> Result<QRat> {
    let total: i64 = w.iter().sum();
    let num = qpoch(total)?.shift(-binom2(total + 1)).scale(&sign(total));
    QRat::new(num, qpoch_product(w.iter().copied())?)
}

pub fn lemma51_check(w: &[i64]) -> Result<bool> {
    Ok(lemma51_lhs(w)? == lemma51_rhs(w)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(a: &[i64]) -> DysonParams {
        DysonParams::new(a.to_vec()).unwrap()
    }

    fn qp(cs: &[i64]) -> QRat {
        QRat::from_poly(QPoly::from_coeffs(0, cs.iter().map(|&c| BigInt::from(c)).collect()))
    }

    #[test]
    fn subset_context_invariants() {
        let p = params(&[2, 1, 2, 1]);
        let ctx = SubsetContext::new(&[2], &p).unwrap();
        assert_eq!(ctx.w_vec(), &[2, 1, 0, 1]);
        assert_eq!(ctx.w(), p.a_sum() - ctx.sigma());
        assert_eq!(ctx.sigma(), 2);
    }

    #[test]
    fn l_of_t_single_denominator() {
        // I_0 = {0}, J = {r}: L({0}) = a_1 + ... + a_{r-1}
        let p = params(&[3, 1, 2, 4]);
        for r in 1..=3 {
            let spec = MonomialSpec::single(r, 3).unwrap();
            let ctx = SubsetContext::new(&[0], &p).unwrap();
            let expected: i64 = (1..r).map(|k| p.a(k)).sum();
            assert_eq!(l_of_t(&spec, &p, &ctx).unwrap(), expected);
        }
    }

    #[test]
    fn l_of_t_two_denominators() {
        let p = params(&[3, 1, 2, 4]);
        let (t, r) = (1, 3);
        let spec = MonomialSpec::new(vec![0, t], vec![r], vec![2], 3).unwrap();
        let ctx = SubsetContext::new(&[t], &p).unwrap();
        let all: i64 = p.all().iter().sum();
        let from = |l: usize| -> i64 { (l..=3).map(|k| p.a(k)).sum() };
        let expected = all + from(t) - 2 * from(r) - 2 * p.a(t);
        assert_eq!(l_of_t(&spec, &p, &ctx).unwrap(), expected);
    }

    #[test]
    fn l_of_t_adding_zero_drops_a0() {
        let p = params(&[5, 1, 2, 1]);
        let spec = MonomialSpec::new(vec![0, 1], vec![2, 3], vec![1, 1], 3).unwrap();
        let l_t = l_of_t(&spec, &p, &SubsetContext::new(&[1], &p).unwrap()).unwrap();
        let l_t0 = l_of_t(&spec, &p, &SubsetContext::new(&[0, 1], &p).unwrap()).unwrap();
        assert_eq!(l_t, l_t0 + p.a0());
        assert!(l_of_t(&spec, &p, &SubsetContext::new(&[], &p).unwrap()).is_err());
        assert!(l_of_t(&spec, &p, &SubsetContext::new(&[2], &p).unwrap()).is_err());
    }

    #[test]
    fn lstar_relation_and_empty_case() {
        let base = params(&[0, 2, 1, 1]);
        let spec = MonomialSpec::new(vec![0, 1, 2], vec![3], vec![3], 3).unwrap();
        for t in subsets(spec.i_rest()).into_iter().filter(|t| !t.is_empty()) {
            let ctx0 = SubsetContext::new(&t, &base).unwrap();
            let p = base.with_a0(-ctx0.w() - 1);
            let ctx = SubsetContext::new(&t, &p).unwrap();
            let l = l_of_t(&spec, &p, &ctx).unwrap();
            let ls = lstar_of_t(&spec, &p, &ctx).unwrap();
            assert_eq!(l, ls + binom2(ctx.w() + 1));
        }
        // m = 1: L*(empty) = -sum p_l tail(j_l) - binom(a+1, 2) - 1
        let p = params(&[0, 2, 1]);
        let spec = MonomialSpec::single(2, 2).unwrap();
        let ctx = SubsetContext::new(&[], &p).unwrap();
        assert_eq!(lstar_of_t(&spec, &p, &ctx).unwrap(), -1 - 6 - 1);
    }

    #[test]
    fn zb_small() {
        assert_eq!(zb_rhs(&params(&[1, 1])).unwrap(), qp(&[1, 1]));
        assert_eq!(zb_rhs(&params(&[0, 0])).unwrap(), QRat::one());
        assert!(zb_rhs(&params(&[-1, 1])).is_err());
    }

    #[test]
    fn main_rhs_small() {
        let p = params(&[1, 1]);
        let spec = MonomialSpec::single(1, 1).unwrap();
        assert_eq!(main_rhs(&p, &spec).unwrap(), qp(&[-1]));
        let p = params(&[1, 1, 1]);
        assert_eq!(main_rhs(&p, &MonomialSpec::single(1, 2).unwrap()).unwrap(), qp(&[-1, -1]));
        assert_eq!(main_rhs(&p, &MonomialSpec::empty()).unwrap(), zb_rhs(&p).unwrap());
        for spec in MonomialSpec::enumerate(3, 2).into_iter().skip(1) {
            assert!(main_rhs(&params(&[0, 2, 1, 1]), &spec).unwrap().is_zero());
        }
    }

    #[test]
    fn pairing_cancels_at_zero() {
        let p = params(&[0, 2, 1, 2]);
        let spec = MonomialSpec::new(vec![0, 1], vec![3], vec![2], 3).unwrap();
        for t in subsets(spec.i_rest()).into_iter().filter(|t| !t.is_empty()) {
            let mut t0 = t.clone();
            t0.insert(0, 0);
            let s = &main_summand(&p, &spec, &t).unwrap() + &main_summand(&p, &spec, &t0).unwrap();
            assert!(s.is_zero(), "T = {t:?}");
        }
    }

    #[test]
    fn corollary_small_cases() {
        assert_eq!(cor14_rhs(&params(&[1, 1]), 1).unwrap(), qp(&[-1]));
        assert!(cor14_rhs(&params(&[1, 1]), 0).is_err());
        assert!(cor15_rhs(&params(&[1, 1, 1]), 1, 1).is_err());
        assert!(cor16_rhs(&params(&[1, 1, 1, 1]), 1, 3, 1).is_err());
    }

    #[test]
    fn special_point_single_term() {
        // m = 1: only T = empty, at a_0 = -a - 1
        let p = params(&[-4, 2, 1]);
        let spec = MonomialSpec::single(1, 2).unwrap();
        assert_eq!(special_points(&p, &spec), vec![(-4, vec![vec![]])]);
        let direct = special_point_term(&p, &spec, &[]).unwrap();
        assert_eq!(mainlemma2_rhs(&p, &spec).unwrap(), direct);
        assert_eq!(main_rhs(&p, &spec).unwrap(), direct);
        assert!(mainlemma2_rhs(&p.with_a0(-2), &spec).is_err());
    }

    #[test]
    fn special_point_endpoints() {
        let p = params(&[0, 1, 2, 1]);
        let spec = MonomialSpec::new(vec![0, 2], vec![1, 3], vec![1, 1], 3).unwrap();
        assert!(check_lemma26(&p, &spec, 0).unwrap());
        assert!(check_lemma26(&p, &spec, -5).unwrap());
        assert!(check_lemma26(&p, &spec, 1).is_err());
    }

    #[test]
    fn q1_values() {
        assert_eq!(dyson_rhs_q1(&params(&[1, 1, 1])).unwrap(), BigRational::from_integer(6.into()));
        assert_eq!(dyson_rhs_q1(&params(&[0, 0, 0])).unwrap(), BigRational::one());
        let v = main_rhs_q1(&params(&[1, 1]), &MonomialSpec::single(1, 1).unwrap()).unwrap();
        assert_eq!(v, -BigRational::one());
    }

    #[test]
    fn product_identity_small() {
        let minus_inv_q = QRat::from_poly(QPoly::monomial(-1, -1));
        assert_eq!(lemma51_lhs(&[1]).unwrap(), minus_inv_q);
        assert_eq!(lemma51_rhs(&[1]).unwrap(), minus_inv_q);
        assert_eq!(lemma51_lhs(&[0, 0, 0]).unwrap(), QRat::one());
        assert!(lemma51_check(&[0, 0, 0]).unwrap());
        assert!(lemma51_check(&[2, 1, 2]).unwrap());
    }
}
