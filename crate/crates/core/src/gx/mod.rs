//! Constant terms of `Q(h)`, the q-Dyson product with `a_0 = -h`, by
//! iterated partial fractions.
//!
//! `Q(h)` carries the denominator `prod_j (1 - x_0/(x_j q)) ... (1 - x_0/(x_j q^h))`.
//! Extracting the constant term in `x_0` and then in the variable that received
//! the last substitution produces a tree of branches `Q(h | r; k)`, labelled by
//! `0 < r_1 < ... < r_s <= n` and `1 <= k_i <= h`, where every `x_{r_i}` has been
//! replaced by `x_{r_s} q^{k_s - k_i}` (with `r_0 = k_0 = 0`).

mod rational;
mod special;

use std::fmt;

use rayon::prelude::*;

pub use rational::{ct_extract, ct_full, ct_in_order, BinomFactor, Piece, PieceKind, RatLaurent, Smallness};
pub use special::{k_star, l2_closed, l2_direct, lemma34_case, lemma34_check, Lemma34Case};

use crate::dyson::{DysonParams, MonomialSpec};
use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Monomial};
use crate::qseries::QRat;

/// `Q(h)` for the monomial `x^b` and the parameters `a_1..a_n` (`a_0` is
/// ignored).
pub fn build_q(b: &[i32], params: &DysonParams, h: i64) -> Result<RatLaurent> {
    let arity = params.arity();
    if b.len() != arity {
        return Err(Error::ArityMismatch { left: arity, right: b.len() });
    }
    if h < 0 {
        return Err(Error::usage(format!("h = {h} must be nonnegative")));
    }
    let mut f = RatLaurent::from_poly(LaurentPoly::from_monomial(Monomial::unit(0, b.to_vec())));
    for j in 1..arity {
        for l in 0..params.a(j) {
            f = f.mul_factor(BinomFactor::new(j, 0, l + 1)?)?;
        }
    }
    for i in 1..arity {
        for j in i + 1..arity {
            for l in 0..params.a(i) {
                f = f.mul_factor(BinomFactor::new(i, j, l)?)?;
            }
            for l in 0..params.a(j) {
                f = f.mul_factor(BinomFactor::new(j, i, l + 1)?)?;
            }
        }
    }
    for j in 1..arity {
        for i in 1..=h {
            f = f.div_factor(BinomFactor::new(0, j, -i)?)?;
        }
    }
    Ok(f)
}

fn check_labels(r: &[usize], k: &[i64], arity: usize) -> Result<()> {
    if r.len() != k.len() {
        return Err(Error::usage("r and k differ in length"));
    }
    if r.first() == Some(&0) || r.windows(2).any(|w| w[0] >= w[1]) || r.last().is_some_and(|&t| t >= arity) {
        return Err(Error::usage(format!("r = {r:?} must increase within 1..=n")));
    }
    Ok(())
}

/// Replaces `x_{r_i}` by `x_{r_s} q^{k_s - k_i}` for `i = 0..s-1`, with
/// `r_0 = k_0 = 0`.
pub fn e_subst(f: &RatLaurent, r: &[usize], k: &[i64]) -> Result<RatLaurent> {
    check_labels(r, k, f.arity())?;
    let Some((&rs, &ks)) = r.last().zip(k.last()) else {
        return Ok(f.clone());
    };
    let mut out = f.clone();
    for (&ri, &ki) in std::iter::once((&0, &0)).chain(r.iter().zip(k)).take(r.len()) {
        out = out.subst(ri, rs, ks - ki)?;
    }
    Ok(out)
}

/// `Q(h | r; k)` built directly: cancel `1 - x_0/(x_{r_i} q^{k_i})`, then
/// substitute.
pub fn branch_state(b: &[i32], params: &DysonParams, h: i64, r: &[usize], k: &[i64]) -> Result<RatLaurent> {
    check_labels(r, k, params.arity())?;
    if k.iter().any(|&ki| ki < 1 || ki > h) {
        return Err(Error::usage(format!("k = {k:?} must lie in 1..={h}")));
    }
    let mut f = build_q(b, params, h)?;
    for (&ri, &ki) in r.iter().zip(k) {
        f = f.cancel_den(&BinomFactor::new(0, ri, -ki)?)?;
    }
    e_subst(&f, r, k)
}

/// The degree of `Q(h | r; k)` in `x_{r_s}` predicted from the labels.
pub fn predicted_degree(b: &[i32], params: &DysonParams, h: i64, r: &[usize]) -> i64 {
    let n = params.n() as i64;
    let s = r.len() as i64;
    let a_r: i64 = r.iter().map(|&i| params.a(i)).sum();
    let b_r: i64 = b[0] as i64 + r.iter().map(|&i| b[i] as i64).sum::<i64>();
    (n - s) * (a_r - h) + b_r
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BranchStatus {
    Vanished,
    Recursed,
    AlmostProperTerminal,
}

impl fmt::Display for BranchStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BranchStatus::Vanished => "vanished",
            BranchStatus::Recursed => "recursed",
            BranchStatus::AlmostProperTerminal => "almost-proper-terminal",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchRecord {
    pub r: Vec<usize>,
    pub k: Vec<i64>,
    pub status: BranchStatus,
    /// Degree in the current variable; `None` when the branch vanished.
    pub degree: Option<i64>,
    /// Constant term of the polynomial part, for terminal branches.
    pub contribution: Option<QRat>,
    pub state: Option<RatLaurent>,
}

impl BranchRecord {
    /// A terminal branch whose polynomial part has a nonzero constant term.
    pub fn survives(&self) -> bool {
        self.contribution.as_ref().is_some_and(|c| !c.is_zero())
    }
}

impl fmt::Display for BranchRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r={:?} k={:?} status={}", self.r, self.k, self.status)?;
        if let Some(d) = self.degree {
            write!(f, " degree={d}")?;
        }
        if let Some(c) = &self.contribution {
            write!(f, " ct={c}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GxOptions {
    /// Keep every branch value in the trace.
    pub keep_states: bool,
    /// Evaluate the first-level branches on the rayon pool.
    pub parallel: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GxRun {
    pub value: QRat,
    /// All visited branches, sorted by `(r, k)`.
    pub branches: Vec<BranchRecord>,
}

impl GxRun {
    pub fn surviving(&self) -> impl Iterator<Item = &BranchRecord> {
        self.branches.iter().filter(|b| b.survives())
    }
}

struct Explorer<'a> {
    b: &'a [i32],
    params: &'a DysonParams,
    h: i64,
    opts: GxOptions,
}

impl Explorer<'_> {
    fn explore(&self, f: RatLaurent, r: Vec<usize>, k: Vec<i64>, out: &mut Vec<BranchRecord>) -> Result<()> {
        let var = r.last().copied().unwrap_or(0);
        let state = self.opts.keep_states.then(|| f.clone());
        let Some(degree) = f.degree_in(var) else {
            out.push(BranchRecord { r, k, status: BranchStatus::Vanished, degree: None, contribution: None, state });
            return Ok(());
        };
        let expected = predicted_degree(self.b, self.params, self.h, &r);
        if degree != expected {
            return Err(Error::invariant(format!("branch r={r:?} k={k:?}: degree {degree} in x{var}, predicted {expected}")));
        }
        let pieces = ct_extract(&f, var)?;
        let ks = k.last().copied().unwrap_or(0);
        let mut contribution = None;
        let mut children = Vec::new();
        for piece in pieces {
            match piece.kind {
                PieceKind::Polynomial => contribution = Some(ct_full(&piece.value)?),
                PieceKind::Residue { t, c } => {
                    let mut r2 = r.clone();
                    r2.push(t);
                    let mut k2 = k.clone();
                    k2.push(ks + c);
                    children.push((piece.value, r2, k2));
                }
            }
        }
        let status = if degree >= 0 { BranchStatus::AlmostProperTerminal } else { BranchStatus::Recursed };
        if degree >= 0 && contribution.is_none() {
            contribution = Some(QRat::zero());
        }
        out.push(BranchRecord { r, k, status, degree: Some(degree), contribution, state });

        if self.opts.parallel && out.len() == 1 {
            let results: Vec<Result<Vec<BranchRecord>>> = children
                .into_par_iter()
                .map(|(g, r2, k2)| {
                    let mut sub = Vec::new();
                    self.explore(g, r2, k2, &mut sub).map(|_| sub)
                })
                .collect();
            for res in results {
                out.extend(res?);
            }
        } else {
            for (g, r2, k2) in children {
                self.explore(g, r2, k2, out)?;
            }
        }
        Ok(())
    }
}

/// `CT_x Q(h)` for an arbitrary monomial `x^b` with exponent sum 0.
pub fn gx_ct_monomial(b: &[i32], params: &DysonParams, h: i64, opts: GxOptions) -> Result<GxRun> {
    if b.iter().map(|&e| e as i64).sum::<i64>() != 0 {
        return Err(Error::usage("monomial exponents must sum to 0"));
    }
    let a = params.a_sum();
    if h < 0 || h > a + 1 {
        return Err(Error::usage(format!("h = {h} outside 0..={}", a + 1)));
    }
    let explorer = Explorer { b, params, h, opts };
    let mut branches = Vec::new();
    explorer.explore(build_q(b, params, h)?, Vec::new(), Vec::new(), &mut branches)?;
    branches.sort_by(|x, y| (&x.r, &x.k).cmp(&(&y.r, &y.k)));
    let value = branches.iter().filter_map(|br| br.contribution.as_ref()).fold(QRat::zero(), |acc, c| &acc + c);
    Ok(GxRun { value, branches })
}

/// `CT_x M(x) Q(h)` for a canonical first-layer monomial.
pub fn gx_ct(spec: &MonomialSpec, params: &DysonParams, h: i64) -> Result<QRat> {
    Ok(gx_ct_monomial(&spec.exponents(params.n()), params, h, GxOptions::default())?.value)
}

/// Constant term of the single branch `Q(h* | r*; k*)` attached to `T`,
/// with `h* = a - sigma(T) + 1`.
pub fn special_branch_ct(spec: &MonomialSpec, params: &DysonParams, t: &[usize]) -> Result<QRat> {
    let (h, r, k) = k_star(t, params)?;
    if t.iter().any(|i| !spec.i_rest().contains(i)) {
        return Err(Error::usage(format!("T = {t:?} must lie inside I")));
    }
    ct_full(&branch_state(&spec.exponents(params.n()), params, h, &r, &k)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_forms::{main_rhs, special_point_term};
    use crate::dyson::brute_ct;

    fn params(a: &[i64]) -> DysonParams {
        DysonParams::new(a.to_vec()).unwrap()
    }

    #[test]
    fn degree_of_q_in_x0() {
        let p = params(&[0, 1, 2]);
        let spec = MonomialSpec::single(2, 2).unwrap();
        let b = spec.exponents(2);
        for h in 0..4 {
            let q = build_q(&b, &p, h).unwrap();
            assert_eq!(q.degree_in(0), Some(b[0] as i64 - 2 * h));
        }
    }

    #[test]
    fn h_zero_is_brute_force_at_a0_zero() {
        let p = params(&[0, 1, 2]);
        for spec in MonomialSpec::enumerate(2, 2) {
            let brute = QRat::from_poly(brute_ct(&p, &spec).unwrap());
            assert_eq!(gx_ct(&spec, &p, 0).unwrap(), brute, "{spec}");
        }
    }

    #[test]
    fn h_one_single_variable() {
        let p = params(&[-1, 1]);
        let spec = MonomialSpec::empty();
        assert_eq!(gx_ct(&spec, &p, 1).unwrap(), main_rhs(&p, &spec).unwrap());
    }

    #[test]
    fn recursion_matches_closed_form() {
        let base = params(&[0, 1, 2]);
        for spec in MonomialSpec::enumerate(2, 2) {
            for h in 1..=base.a_sum() + 1 {
                let p = base.with_a0(-h);
                assert_eq!(gx_ct(&spec, &p, h).unwrap(), main_rhs(&p, &spec).unwrap(), "{spec} h={h}");
            }
        }
    }

    #[test]
    fn branch_states_match_direct_construction() {
        let p = params(&[0, 1, 1, 1]);
        let spec = MonomialSpec::single(2, 3).unwrap();
        let b = spec.exponents(3);
        let run = gx_ct_monomial(&b, &p, 3, GxOptions { keep_states: true, parallel: false }).unwrap();
        assert!(run.branches.len() > 5);
        for br in run.branches.iter().filter(|br| !br.r.is_empty()) {
            let direct = branch_state(&b, &p, 3, &br.r, &br.k).unwrap();
            assert!(direct.same_value(br.state.as_ref().unwrap()), "{br}");
        }
    }

    #[test]
    fn parallel_run_is_identical() {
        let p = params(&[0, 2, 1, 1]);
        let spec = MonomialSpec::new(vec![0, 1], vec![3], vec![2], 3).unwrap();
        let b = spec.exponents(3);
        let seq = gx_ct_monomial(&b, &p, 3, GxOptions::default()).unwrap();
        let par = gx_ct_monomial(&b, &p, 3, GxOptions { parallel: true, ..Default::default() }).unwrap();
        assert_eq!(seq, par);
    }

    #[test]
    fn e_subst_composition() {
        let arity = 4;
        let poly = LaurentPoly::from_monomial(Monomial::unit(0, vec![1, -2, 3, -2]));
        let f = RatLaurent::from_poly(&poly + &LaurentPoly::from_monomial(Monomial::unit(2, vec![0, 1, 0, -1])))
            .mul_factor(BinomFactor::new(0, 3, 1).unwrap())
            .unwrap()
            .div_factor(BinomFactor::new(2, 3, 5).unwrap())
            .unwrap();
        let (r, k) = (vec![1, 2], vec![3, 1]);
        let (t, kt) = (3, 2);
        let lhs = e_subst(&f, &r, &k).unwrap().subst(2, t, kt - 1).unwrap();
        let rhs = e_subst(&f, &[1, 2, 3], &[3, 1, 2]).unwrap();
        assert!(lhs.same_value(&rhs));
        assert_eq!(lhs.arity(), arity);
        // variables outside r_0..r_s are untouched
        assert_eq!(e_subst(&f, &[1], &[2]).unwrap().rest().max_degree_in(2), Some(3));
    }

    #[test]
    fn special_branch_value() {
        let base = params(&[0, 1, 2, 1]);
        let spec = MonomialSpec::new(vec![0, 1, 2], vec![3], vec![3], 3).unwrap();
        for t in crate::closed_forms::subsets(spec.i_rest()) {
            let got = special_branch_ct(&spec, &base, &t).unwrap();
            assert_eq!(got, special_point_term(&base, &spec, &t).unwrap(), "T = {t:?}");
        }
    }
}
