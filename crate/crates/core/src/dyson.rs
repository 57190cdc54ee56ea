//! Problem instances: the q-Dyson product, first-layer monomials, brute-force
//! constant terms, and the cyclic action that moves monomials into canonical
//! position.

use std::fmt;

use crate::error::{Error, Result};
use crate::laurent::{ExpVec, LaurentPoly, Monomial};
use crate::qseries::QPoly;

/// The parameters `n` and `a_0, ..., a_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DysonParams {
    a: Vec<i64>,
}

impl DysonParams {
    /// `a` holds `a_0, a_1, ..., a_n`. `a_0` may be any integer; the rest
    /// must be nonnegative.
    pub fn new(a: Vec<i64>) -> Result<Self> {
        if a.len() < 2 {
            return Err(Error::usage("need n >= 1, i.e. at least two parameters a_0, a_1"));
        }
        if let Some((i, v)) = a.iter().enumerate().skip(1).find(|(_, v)| **v < 0) {
            return Err(Error::usage(format!("a_{i} = {v} must be nonnegative")));
        }
        Ok(DysonParams { a })
    }

    pub fn n(&self) -> usize {
        self.a.len() - 1
    }

    pub fn arity(&self) -> usize {
        self.a.len()
    }

    pub fn a0(&self) -> i64 {
        self.a[0]
    }

    /// `a_i` for `0 <= i <= n`.
    pub fn a(&self, i: usize) -> i64 {
        self.a[i]
    }

    pub fn all(&self) -> &[i64] {
        &self.a
    }

    /// `a = a_1 + ... + a_n`.
    pub fn a_sum(&self) -> i64 {
        self.a[1..].iter().sum()
    }

    /// Same `a_1..a_n` with a different `a_0`.
    pub fn with_a0(&self, a0: i64) -> DysonParams {
        let mut a = self.a.clone();
        a[0] = a0;
        DysonParams { a }
    }

    /// `(a_n, a_0, ..., a_{n-1})`, the parameters after one application of
    /// the cyclic action.
    pub fn rotated(&self) -> DysonParams {
        let mut a = self.a.clone();
        a.rotate_right(1);
        DysonParams { a }
    }
}

impl fmt::Display for DysonParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.a.iter().map(i64::to_string).collect();
        write!(f, "n={} a=({})", self.n(), parts.join(","))
    }
}

/// A first-layer monomial `x_{j_1}^{p_1} ... x_{j_nu}^{p_nu} / (x_{i_1} ... x_{i_m})`
/// in canonical position: `i_1 = 0` and `i_m < n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct MonomialSpec {
    i_set: Vec<usize>,
    j_list: Vec<usize>,
    p: Vec<u32>,
}

impl MonomialSpec {
    /// The empty monomial (`m = 0`).
    pub fn empty() -> Self {
        MonomialSpec::default()
    }

    pub fn new(i_set: Vec<usize>, j_list: Vec<usize>, p: Vec<u32>, n: usize) -> Result<Self> {
        let spec = MonomialSpec { i_set, j_list, p };
        spec.validate(n)?;
        Ok(spec)
    }

    /// Convenience: `x_r / x_0`.
    pub fn single(r: usize, n: usize) -> Result<Self> {
        MonomialSpec::new(vec![0], vec![r], vec![1], n)
    }

    fn validate(&self, n: usize) -> Result<()> {
        let strictly_increasing = |v: &[usize]| v.windows(2).all(|w| w[0] < w[1]);
        if self.j_list.len() != self.p.len() {
            return Err(Error::usage("j list and p list lengths differ"));
        }
        if !strictly_increasing(&self.i_set) || !strictly_increasing(&self.j_list) {
            return Err(Error::usage("indices must be strictly increasing"));
        }
        if self.i_set.is_empty() {
            if !self.j_list.is_empty() {
                return Err(Error::usage("numerator without denominator is not degree 0"));
            }
            return Ok(());
        }
        if self.i_set[0] != 0 {
            return Err(Error::usage("canonical form needs i_1 = 0"));
        }
        if *self.i_set.last().unwrap() >= n {
            return Err(Error::usage(format!("canonical form needs i_m < n = {n}")));
        }
        if self.j_list.first().is_some_and(|&j| j == 0) || self.j_list.last().is_some_and(|&j| j > n) {
            return Err(Error::usage(format!("j indices must lie in 1..={n}")));
        }
        if self.j_list.iter().any(|j| self.i_set.contains(j)) {
            return Err(Error::usage("j indices must be disjoint from i indices"));
        }
        if self.p.contains(&0) {
            return Err(Error::usage("exponents p must be positive"));
        }
        let total: u32 = self.p.iter().sum();
        if total as usize != self.i_set.len() {
            return Err(Error::usage(format!(
                "sum of p ({total}) must equal m = {}",
                self.i_set.len()
            )));
        }
        Ok(())
    }

    /// `I_0 = {i_1, ..., i_m}`.
    pub fn i_set(&self) -> &[usize] {
        &self.i_set
    }

    /// `I = I_0 \ {0}`.
    pub fn i_rest(&self) -> &[usize] {
        if self.i_set.is_empty() {
            &[]
        } else {
            &self.i_set[1..]
        }
    }

    pub fn j_list(&self) -> &[usize] {
        &self.j_list
    }

    pub fn p(&self) -> &[u32] {
        &self.p
    }

    pub fn m(&self) -> usize {
        self.i_set.len()
    }

    /// Exponent vector `b_0..b_n` of the monomial.
    pub fn exponents(&self, n: usize) -> Vec<i32> {
        let mut b = vec![0; n + 1];
        for &i in &self.i_set {
            b[i] -= 1;
        }
        for (&j, &p) in self.j_list.iter().zip(&self.p) {
            b[j] += p as i32;
        }
        b
    }

    pub fn monomial(&self, n: usize) -> Monomial {
        Monomial::unit(0, self.exponents(n))
    }

    /// Every canonical spec with `1 <= m <= max_m` for the given `n`
    /// (plus the empty spec), in a fixed order.
    pub fn enumerate(n: usize, max_m: usize) -> Vec<MonomialSpec> {
        let mut out = vec![MonomialSpec::empty()];
        for m in 1..=max_m {
            // I_0 = {0} plus m-1 indices from 1..n-1
            for rest in subsets_of_size(&(1..n).collect::<Vec<_>>(), m - 1) {
                let mut i_set = vec![0];
                i_set.extend(rest);
                let free: Vec<usize> = (1..=n).filter(|j| !i_set.contains(j)).collect();
                for (j_list, p) in compositions_over(&free, m) {
                    out.push(MonomialSpec { i_set: i_set.clone(), j_list, p });
                }
            }
        }
        out
    }
}

impl fmt::Display for MonomialSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.i_set.is_empty() {
            return write!(f, "1");
        }
        let num: Vec<String> = self
            .j_list
            .iter()
            .zip(&self.p)
            .map(|(j, p)| if *p == 1 { format!("x{j}") } else { format!("x{j}^{p}") })
            .collect();
        let den: Vec<String> = self.i_set.iter().map(|i| format!("x{i}")).collect();
        write!(f, "{}/({})", num.join("*"), den.join("*"))
    }
}

fn subsets_of_size(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if items.len() < k {
        return vec![];
    }
    let mut out = Vec::new();
    for (idx, &first) in items.iter().enumerate() {
        for mut tail in subsets_of_size(&items[idx + 1..], k - 1) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

/// All ways to place positive exponents summing to `total` on an increasing
/// selection of `slots`.
fn compositions_over(slots: &[usize], total: usize) -> Vec<(Vec<usize>, Vec<u32>)> {
    fn go(slots: &[usize], left: usize, acc: &mut (Vec<usize>, Vec<u32>), out: &mut Vec<(Vec<usize>, Vec<u32>)>) {
        if left == 0 {
            out.push(acc.clone());
            return;
        }
        for (idx, &s) in slots.iter().enumerate() {
            for p in 1..=left {
                acc.0.push(s);
                acc.1.push(p as u32);
                go(&slots[idx + 1..], left - p, acc, out);
                acc.0.pop();
                acc.1.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(slots, total, &mut (Vec::new(), Vec::new()), &mut out);
    out
}

/// A degree-0 monomial `prod x_i^{b_i}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneralMonomial {
    b: Vec<i32>,
}

impl GeneralMonomial {
    pub fn new(b: Vec<i32>) -> Result<Self> {
        if b.iter().sum::<i32>() != 0 {
            return Err(Error::usage("monomial must be homogeneous of degree 0"));
        }
        Ok(GeneralMonomial { b })
    }

    pub fn exponents(&self) -> &[i32] {
        &self.b
    }

    pub fn monomial(&self) -> Monomial {
        Monomial::unit(0, self.b.clone())
    }
}

/// `D_n(x, a, q) = prod_{0 <= i < j <= n} (x_i/x_j)_{a_i} (q x_j/x_i)_{a_j}`,
/// fully expanded. Factors are multiplied in lexicographic `(i, j)` order.
pub fn build_dyson(params: &DysonParams) -> Result<LaurentPoly> {
    if params.a0() < 0 {
        return Err(Error::usage("build_dyson needs a_0 >= 0; use the gx engine for negative a_0"));
    }
    let arity = params.arity();
    let mut out = LaurentPoly::one(arity);
    for i in 0..arity {
        for j in i + 1..arity {
            for l in 0..params.a(i) {
                out = &out * &LaurentPoly::one_minus(&Monomial::ratio(arity, i, j, l));
            }
            for l in 0..params.a(j) {
                out = &out * &LaurentPoly::one_minus(&Monomial::ratio(arity, j, i, l + 1));
            }
        }
    }
    Ok(out)
}

/// Constant term in all `x` of `m * poly`.
pub fn ct_times_monomial(poly: &LaurentPoly, m: &Monomial) -> Result<QPoly> {
    poly.mul_monomial(m).ct_all().to_qpoly()
}

/// `CT_x x^b poly`, read off as the coefficient of `x^{-b}`.
pub fn ct_with_exponents(poly: &LaurentPoly, b: &[i32]) -> Result<QPoly> {
    if b.len() != poly.arity() {
        return Err(Error::ArityMismatch { left: poly.arity(), right: b.len() });
    }
    let terms = poly
        .terms()
        .filter(|(e, _)| e.x.iter().zip(b).all(|(x, y)| x + y == 0))
        .map(|(e, c)| (e.q, c.clone()));
    Ok(QPoly::from_sparse(terms))
}

/// `CT_x M(x) D_n(x, a, q)` by expanding the product.
pub fn brute_ct(params: &DysonParams, spec: &MonomialSpec) -> Result<QPoly> {
    let d = build_dyson(params)?;
    ct_times_monomial(&d, &spec.monomial(params.n()))
}

/// `F(x_0, ..., x_n) -> F(x_1, ..., x_n, x_0/q)`.
pub fn pi_action(p: &LaurentPoly) -> LaurentPoly {
    let n = p.arity() - 1;
    p.map_exponents(|e| {
        let mut x = e.x.clone();
        x.rotate_right(1);
        ExpVec::new(e.q - e.x[n] as i64, x)
    })
}

/// Result of moving a first-layer monomial into canonical position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rotation {
    /// Number of applications of the cyclic action.
    pub steps: usize,
    /// `CT(M D_n(a)) = q^{q_shift} CT(M' D_n(a'))`.
    pub q_shift: i64,
    pub spec: MonomialSpec,
    pub params: DysonParams,
}

/// Finds the smallest number of rotations bringing `b` to canonical position
/// (`b_0 = -1` and `b_n != -1`) and records the accumulated power of `q`.
pub fn rotate_reduce(b: &GeneralMonomial, params: &DysonParams) -> Result<Rotation> {
    let exps = b.exponents();
    let size = params.arity();
    if exps.len() != size {
        return Err(Error::ArityMismatch { left: size, right: exps.len() });
    }
    if let Some(bad) = exps.iter().find(|&&e| e < -1) {
        return Err(Error::NotFirstLayer(format!("exponent {bad} below -1")));
    }
    if exps.iter().all(|&e| e == 0) {
        return Ok(Rotation { steps: 0, q_shift: 0, spec: MonomialSpec::empty(), params: params.clone() });
    }
    let at = |i: isize| exps[i.rem_euclid(size as isize) as usize];
    let steps = (0..size)
        .find(|&k| at(-(k as isize)) == -1 && at(-(k as isize) - 1) != -1)
        .ok_or_else(|| Error::NotFirstLayer("no rotation puts x_0 in the denominator and x_n outside it".into()))?;

    let mut cur = exps.to_vec();
    let mut cur_params = params.clone();
    let mut q_shift = 0i64;
    for _ in 0..steps {
        q_shift -= cur[size - 1] as i64;
        cur.rotate_right(1);
        cur_params = cur_params.rotated();
    }
    let i_set: Vec<usize> = (0..size).filter(|&i| cur[i] == -1).collect();
    let (j_list, p): (Vec<usize>, Vec<u32>) =
        (0..size).filter(|&i| cur[i] > 0).map(|i| (i, cur[i] as u32)).unzip();
    let spec = MonomialSpec::new(i_set, j_list, p, params.n())?;
    Ok(Rotation { steps, q_shift, spec, params: cur_params })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn qp(cs: &[i64]) -> QPoly {
        QPoly::from_coeffs(0, cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn params(a: &[i64]) -> DysonParams {
        DysonParams::new(a.to_vec()).unwrap()
    }

    #[test]
    fn small_products() {
        assert_eq!(build_dyson(&params(&[0, 0])).unwrap(), LaurentPoly::one(2));
        let d = build_dyson(&params(&[1, 1])).unwrap();
        // 1 + q - q x1/x0 - x0/x1
        assert_eq!(d.len(), 4);
        assert_eq!(d.ct_all().to_qpoly().unwrap(), qp(&[1, 1]));
        assert!(build_dyson(&params(&[-1, 1])).is_err());
    }

    #[test]
    fn brute_force_values() {
        let p = params(&[1, 1]);
        assert_eq!(brute_ct(&p, &MonomialSpec::empty()).unwrap(), qp(&[1, 1]));
        assert_eq!(brute_ct(&p, &MonomialSpec::single(1, 1).unwrap()).unwrap(), qp(&[-1]));
        let p = params(&[1, 1, 1]);
        assert_eq!(brute_ct(&p, &MonomialSpec::single(1, 2).unwrap()).unwrap(), qp(&[-1, -1]));
    }

    #[test]
    fn spec_validation() {
        assert!(MonomialSpec::new(vec![1], vec![2], vec![1], 2).is_err());
        assert!(MonomialSpec::new(vec![0, 2], vec![1], vec![2], 2).is_err());
        assert!(MonomialSpec::new(vec![0], vec![1], vec![2], 2).is_err());
        assert!(MonomialSpec::new(vec![0, 1], vec![1], vec![2], 3).is_err());
        assert!(MonomialSpec::new(vec![0, 1], vec![3], vec![2], 3).is_ok());
    }

    #[test]
    fn spec_enumeration_counts() {
        // n = 3, m <= 2: 1 empty + 3 (m = 1) + 2 * 3 (m = 2)
        assert_eq!(MonomialSpec::enumerate(3, 2).len(), 10);
        assert_eq!(MonomialSpec::enumerate(1, 2).len(), 2);
        for s in MonomialSpec::enumerate(3, 2) {
            assert!(s.validate(3).is_ok());
        }
    }

    #[test]
    fn pi_shifts_indices() {
        let p = LaurentPoly::from_monomial(Monomial::ratio(3, 0, 1, 0));
        assert_eq!(pi_action(&p), LaurentPoly::from_monomial(Monomial::ratio(3, 1, 2, 0)));
        let p = LaurentPoly::from_monomial(Monomial::var(3, 2, 0));
        assert_eq!(pi_action(&p), LaurentPoly::from_monomial(Monomial::var(3, 0, -1)));
    }

    #[test]
    fn rotation_of_canonical_is_identity() {
        let p = params(&[1, 2, 0]);
        let b = GeneralMonomial::new(vec![-1, 1, 0]).unwrap();
        let r = rotate_reduce(&b, &p).unwrap();
        assert_eq!(r.steps, 0);
        assert_eq!(r.q_shift, 0);
        assert_eq!(r.params, p);
        assert_eq!(r.spec, MonomialSpec::single(1, 2).unwrap());
    }

    #[test]
    fn rotation_rejects_non_first_layer() {
        let p = params(&[1, 1, 1]);
        assert!(matches!(
            rotate_reduce(&GeneralMonomial::new(vec![2, 0, -2]).unwrap(), &p),
            Err(Error::NotFirstLayer(_))
        ));
        assert!(GeneralMonomial::new(vec![1, 0, 0]).is_err());
    }
}
