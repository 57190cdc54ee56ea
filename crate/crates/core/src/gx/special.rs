//! Bookkeeping for the special points: the surviving branch labels, the
//! trichotomy on branch labels, and the exponent `L_2`.

use crate::closed_forms::SubsetContext;
use crate::dyson::DysonParams;
use crate::error::{Error, Result};

/// `(h*, r*, k*)` for `T`: `h* = a - sigma(T) + 1 = w + 1`, `r*` lists
/// `1..=n` without `T`, and `k_l = w_{r_l} + ... + w_n + 1`.
pub fn k_star(t: &[usize], params: &DysonParams) -> Result<(i64, Vec<usize>, Vec<i64>)> {
    if t.iter().any(|&i| i == 0 || i > params.n()) {
        return Err(Error::usage(format!("T = {t:?} must lie inside 1..=n")));
    }
    let ctx = SubsetContext::new(t, params)?;
    let r: Vec<usize> = (1..=params.n()).filter(|i| !ctx.t().contains(i)).collect();
    let k = r.iter().map(|&l| ctx.tail(l) + 1).collect();
    Ok((ctx.w() + 1, r, k))
}

/// Which alternative of the trichotomy a label vector falls into.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lemma34Case {
    /// `1 <= k_i <= a_i`.
    Small(usize),
    /// `-a_j <= k_i - k_j <= a_i - 1` with `i < j`.
    Pair(usize, usize),
    /// `k_i = a_i + ... + a_s + 1` for all `i`.
    Exceptional,
    None,
}

pub fn lemma34_case(k: &[i64], a: &[i64]) -> Lemma34Case {
    if let Some(i) = (0..k.len()).find(|&i| 1 <= k[i] && k[i] <= a[i]) {
        return Lemma34Case::Small(i);
    }
    for i in 0..k.len() {
        for j in i + 1..k.len() {
            let d = k[i] - k[j];
            if -a[j] <= d && d < a[i] {
                return Lemma34Case::Pair(i, j);
            }
        }
    }
    let exceptional = (0..k.len()).all(|i| k[i] == a[i..].iter().sum::<i64>() + 1);
    if exceptional {
        Lemma34Case::Exceptional
    } else {
        Lemma34Case::None
    }
}

/// Checks the trichotomy for every `k` in `[1, a_1 + ... + a_s + 1]^s`, and
/// that the exceptional vector escapes the first two alternatives.
pub fn lemma34_check(a: &[i64]) -> Result<bool> {
    if a.iter().any(|&v| v < 0) {
        return Err(Error::usage("entries must be nonnegative"));
    }
    let s = a.len();
    let top = a.iter().sum::<i64>() + 1;
    let mut k = vec![1i64; s];
    loop {
        if lemma34_case(&k, a) == Lemma34Case::None {
            return Ok(false);
        }
        let Some(pos) = (0..s).rev().find(|&i| k[i] < top) else { break };
        k[pos] += 1;
        k[pos + 1..].fill(1);
    }
    let exceptional: Vec<i64> = (0..s).map(|i| a[i..].iter().sum::<i64>() + 1).collect();
    Ok(lemma34_case(&exceptional, a) == Lemma34Case::Exceptional)
}

fn binom2(k: i64) -> i64 {
    k * (k - 1) / 2
}

/// `L_2` as the triple sum over `l` in `T` and over pairs split by `T`.
pub fn l2_direct(t: &[usize], params: &DysonParams) -> Result<i64> {
    let ctx = SubsetContext::new(t, params)?;
    let n = params.n();
    let w = ctx.w();
    let wv = ctx.w_vec();
    let wn = wv[n];
    let in_r = |i: usize| !ctx.t().contains(&i);
    let mut total = 0;
    for _ in ctx.t() {
        total += binom2(w + 1) - (w + 1) * wn;
    }
    for i in 1..=n {
        for j in i + 1..=n {
            if !in_r(i) && in_r(j) {
                total += binom2(wv[j] + 1) + (wn - ctx.tail(j)) * wv[j];
            }
            if in_r(i) && !in_r(j) {
                total += binom2(wv[i] + 1) + (wn - ctx.tail(i)) * wv[i] - wv[i];
            }
        }
    }
    Ok(total)
}

/// `-d w_n + d w - sum_{l in T} (w_1 + ... + w_{l-1})`.
pub fn l2_closed(t: &[usize], params: &DysonParams) -> Result<i64> {
    let ctx = SubsetContext::new(t, params)?;
    let d = ctx.d() as i64;
    let wv = ctx.w_vec();
    let heads: i64 = ctx.t().iter().map(|&l| wv[1..l].iter().sum::<i64>()).sum();
    Ok(-d * wv[params.n()] + d * ctx.w() - heads)
}
