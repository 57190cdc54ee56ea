//! Exhaustive and randomized verification sweeps.
//!
//! Every suite walks a grid of small instances, evaluates both sides exactly
//! and reports the number of checks and the first mismatch. Instances run on
//! the ambient rayon pool; results are gathered in grid order, so reports do
//! not depend on scheduling.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::closed_forms::{
    check_lemma26, cor14_rhs, cor15_rhs, cor16_rhs, dyson_rhs_q1, lemma51_check, main_rhs, main_rhs_q1,
    mainlemma2_rhs, special_point_term, special_points, zb_rhs,
};
use crate::dyson::{
    build_dyson, ct_with_exponents, pi_action, rotate_reduce, DysonParams, GeneralMonomial, MonomialSpec,
};
use crate::error::{Error, Result};
use crate::gx::{
    ct_full, ct_in_order, gx_ct_monomial, k_star, l2_closed, l2_direct, lemma34_check, BinomFactor, BranchStatus,
    GxOptions, RatLaurent,
};
use crate::laurent::{ExpVec, LaurentPoly, Monomial};
use crate::qseries::QRat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Zb,
    Main,
    Corollaries,
    Lemma26,
    Lemma34,
    Lemma51,
    Gx,
    Pi,
    Q1,
    Engine,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Zb,
        Suite::Main,
        Suite::Corollaries,
        Suite::Lemma26,
        Suite::Gx,
        Suite::Lemma51,
        Suite::Lemma34,
        Suite::Pi,
        Suite::Q1,
        Suite::Engine,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Zb => "zb",
            Suite::Main => "main",
            Suite::Corollaries => "corollaries",
            Suite::Lemma26 => "lemma26",
            Suite::Lemma34 => "lemma34",
            Suite::Lemma51 => "lemma51",
            Suite::Gx => "gx",
            Suite::Pi => "pi",
            Suite::Q1 => "q1",
            Suite::Engine => "engine",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::usage(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub max_n: usize,
    /// Bound on every `a_i` (and on `w_i`, or on the entries for the
    /// trichotomy suite).
    pub max_a: i64,
    /// Largest number of denominator variables in first-layer monomials.
    pub max_m: usize,
    /// Random monomials or instances per grid point.
    pub samples: usize,
    pub seed: u64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig { max_n: 3, max_a: 2, max_m: 2, samples: 50, seed: 0x5eed }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checked: usize,
    pub failed: usize,
    pub first_failure: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {}: {} checks, {} failed", self.suite, self.checked, self.failed)?;
        if let Some(first) = &self.first_failure {
            write!(f, "; first: {first}")?;
        }
        Ok(())
    }
}

/// Outcome of one grid point: number of checks and the failures found.
#[derive(Default)]
struct Tally {
    checked: usize,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

fn collect(suite: Suite, tallies: Vec<Result<Tally>>) -> Result<SuiteReport> {
    let mut report = SuiteReport { suite, checked: 0, failed: 0, first_failure: None };
    for t in tallies {
        let t = t?;
        report.checked += t.checked;
        report.failed += t.failures.len();
        if report.first_failure.is_none() {
            report.first_failure = t.failures.into_iter().next();
        }
    }
    Ok(report)
}

fn run_grid<T: Sync>(suite: Suite, grid: &[T], f: impl Fn(&T) -> Result<Tally> + Sync + Send) -> Result<SuiteReport> {
    collect(suite, grid.par_iter().map(f).collect())
}

/// All vectors in `[0, max]^len`, in lexicographic order.
pub fn vectors(len: usize, max: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=max).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// Parameters with `1 <= n <= max_n` and `0 <= a_i <= max_a`; `a_0` ranges
/// over `0..=max_a` when `with_a0`, and is 0 otherwise.
pub fn param_grid(max_n: usize, max_a: i64, with_a0: bool) -> Vec<DysonParams> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for a in vectors(n + 1, max_a) {
            if !with_a0 && a[0] != 0 {
                continue;
            }
            out.push(DysonParams::new(a).expect("nonnegative"));
        }
    }
    out
}

pub fn run_suite(suite: Suite, cfg: &SweepConfig) -> Result<SuiteReport> {
    match suite {
        Suite::Zb => zb_suite(cfg),
        Suite::Main => main_suite(cfg),
        Suite::Corollaries => corollary_suite(cfg),
        Suite::Lemma26 => lemma26_suite(cfg),
        Suite::Lemma34 => lemma34_suite(cfg),
        Suite::Lemma51 => lemma51_suite(cfg),
        Suite::Gx => gx_suite(cfg),
        Suite::Pi => pi_suite(cfg),
        Suite::Q1 => q1_suite(cfg),
        Suite::Engine => engine_suite(cfg),
    }
}

fn zb_suite(cfg: &SweepConfig) -> Result<SuiteReport> {
    run_grid(Suite::Zb, &param_grid(cfg.max_n, cfg.max_a, true), |p| {
        let mut t = Tally::default();
        let d = build_dyson(p)?;
        let brute = QRat::from_poly(ct_with_exponents(&d, &vec![0; p.arity()])?);
        let rhs = zb_rhs(p)?;
        t.check(brute == rhs, || format!("a = {p}: brute {brute} vs {rhs}"));
        Ok(t)
    })
}

fn main_suite(cfg: &SweepConfig) -> Result<SuiteReport> {
    run_grid(Suite::Main, &param_grid(cfg.max_n, cfg.max_a, true), |p| {
        let mut t = Tally::default();
        let d = build_dyson(p)?;
        for spec in MonomialSpec::enumerate(p.n(), cfg.max_m) {
            let brute = QRat::from_poly(ct_with_exponents(&d, &spec.exponents(p.n()))?);
            let rhs = main_rhs(p, &spec)?;
            t.check(brute == rhs, || format!("a = {p}, M = {spec}: brute {brute} vs {rhs}"));
        }
        Ok(t)
    })
}

/// The index patterns of the three specializations: `(r)`, `(r, t)` and
/// `(r, s, t)`.
fn corollary_patterns(n: usize) -> Vec<(Vec<usize>, MonomialSpec)> {
    let mut out = Vec::new();
    for r in 1..=n {
        out.push((vec![r], MonomialSpec::single(r, n).expect("valid")));
    }
    for r in 1..=n {
        for t in 1..r {
            out.push((vec![r, t], MonomialSpec::new(vec![0, t], vec![r], vec![2], n).expect("valid")));
        }
    }
    if n >= 3 {
        for s in 1..=n {
            for r in 1..s {
                for t in (1..s).filter(|&t| t != r) {
                    let mut j = vec![r, s];
                    j.sort_unstable();
                    out.push((vec![r, s, t], MonomialSpec::new(vec![0, t], j, vec![1, 1], n).expect("valid")));
                }
            }
        }
    }
    out
}

fn corollary_suite(cfg: &SweepConfig) -> Result<SuiteReport> {
    run_grid(Suite::Corollaries, &param_grid(cfg.max_n, cfg.max_a, true), |p| {
        let mut t = Tally::default();
        let d = build_dyson(p)?;
        for (idx, spec) in corollary_patterns(p.n()) {
            let closed = match idx[..] {
                [r] => cor14_rhs(p, r)?,
                [r, tt] => cor15_rhs(p, r, tt)?,
                [r, s, tt] => cor16_rhs(p, r, s, tt)?,
                _ => unreachable!(),
            };
            let general = main_rhs(p, &spec)?;
            let brute = QRat::from_poly(ct_with_exponents(&d, &spec.exponents(p.n()))?);
            t.check(closed == general && closed == brute, || {
                format!("a = {p}, indices {idx:?}: corollary {closed}, general {general}, brute {brute}")
            });
        }
        Ok(t)
    })
}

fn lemma26_suite(cfg: &SweepConfig) -> Result<SuiteReport> {
    run_grid(Suite::Lemma26, &param_grid(cfg.max_n, cfg.max_a, false), |p| {
        let mut t = Tally::default();
        for spec in MonomialSpec::enumerate(p.n(), cfg.max_m).into_iter().filter(|s| s.m() > 0) {
            for a0 in -(p.a_sum() + 1)..=0 {
                let ok = check_lemma26(p, &spec, a0)?;
                t.check(ok, || format!("a = {}, M = {spec}", p.with_a0(a0)));
            }
        }
        Ok(t)
    })
}

fn lemma34_suite(cfg: &SweepConfig) -> Result<SuiteReport> {
    let grid: Vec<Vec<i64>> = (1..=cfg.max_n).flat_map(|s| vectors(s, cfg.max_a)).collect();
    run_grid(Suite::Lemma34, &grid, |a| {
        let mut t = Tally::default();
        let ok = lemma34_check(a)?;
        t.check(ok, || format!("a = {a:?}"));
        Ok(t)
    })
}

fn lemma51_suite(cfg: &SweepConfig) -> Result<SuiteReport> {
    let grid: Vec<Vec<i64>> = (1..=cfg.max_n).flat_map(|n| vectors(n, cfg.max_a)).collect();
    run_grid(Suite::Lemma51, &grid, |w| {
        let mut t = Tally::default();
        let ok = lemma51_check(w)?;
        t.check(ok, || format!("w = {w:?}"));
        Ok(t)
    })
}

/// One Q(h) run: value against the closed form, and the surviving branches
/// against the predicted labels and values.
fn gx_instance(p: &DysonParams, spec: &MonomialSpec, h: i64, t: &mut Tally) -> Result<()> {
    let at = p.with_a0(-h);
    let b = spec.exponents(p.n());
    let run = gx_ct_monomial(&b, &at, h, GxOptions::default())?;
    let label = || format!("a = {at}, M = {spec}, h = {h}");
    // every visited branch had its degree checked inside the recursion
    t.checked += run.branches.len();

    let closed = main_rhs(&at, spec)?;
    t.check(run.value == closed, || format!("{}: engine {} vs closed {closed}", label(), run.value));

    let specials = special_points(&at, spec);
    let qualifying = specials.iter().find(|(v, _)| *v == -h).map(|(_, ts)| ts.clone()).unwrap_or_default();
    if qualifying.is_empty() {
        t.check(run.value.is_zero(), || format!("{}: nonzero at a non-special point", label()));
    } else if spec.m() > 0 {
        let lemma2 = mainlemma2_rhs(&at, spec)?;
        t.check(run.value == lemma2, || format!("{}: engine {} vs special-point formula {lemma2}", label(), run.value));
    }

    let mut expected = BTreeSet::new();
    for tt in &qualifying {
        let (hs, r, k) = k_star(tt, p)?;
        if hs != h {
            return Err(Error::invariant(format!("k_star gives h = {hs} for T = {tt:?}, expected {h}")));
        }
        expected.insert((r.clone(), k.clone()));
        if spec.m() == 0 {
            continue;
        }
        let value = run.surviving().find(|br| br.r == r && br.k == k).and_then(|br| br.contribution.clone());
        let predicted = special_point_term(&at, spec, tt)?;
        t.check(value.as_ref() == Some(&predicted), || {
            format!("{}: branch for T = {tt:?} gives {value:?}, predicted {predicted}", label())
        });
    }
    let seen: BTreeSet<(Vec<usize>, Vec<i64>)> = run.surviving().map(|br| (br.r.clone(), br.k.clone())).collect();
    t.check(seen == expected, || format!("{}: surviving branches {seen:?}, predicted {expected:?}", label()));

    // terminal branches have degree 0, end at x_n and leave out exactly a
    // subset T of I with h = a - sigma(T) + 1
    for br in run.branches.iter().filter(|br| br.status == BranchStatus::AlmostProperTerminal) {
        let tt: Vec<usize> = (1..=p.n()).filter(|i| !br.r.contains(i)).collect();
        let sigma: i64 = tt.iter().map(|&i| p.a(i)).sum();
        let ok = br.degree == Some(0)
            && br.r.last() == Some(&p.n())
            && tt.iter().all(|i| spec.i_rest().contains(i))
            && h == p.a_sum() - sigma + 1;
        t.check(ok, || format!("{}: terminal branch {br} outside the predicted shape", label()));
    }
    Ok(())
}

fn gx_suite(cfg: &SweepConfig) -> Result<SuiteReport> {
    let mut grid = Vec::new();
    for p in param_grid(cfg.max_n, cfg.max_a, false) {
        for spec in MonomialSpec::enumerate(p.n(), cfg.max_m) {
            for h in 1..=p.a_sum() + 1 {
                grid.push((p.clone(), spec.clone(), h));
            }
        }
    }
    run_grid(Suite::Gx, &grid, |(p, spec, h)| {
        let mut t = Tally::default();
        gx_instance(p, spec, *h, &mut t)?;
        for tt in crate::closed_forms::subsets(spec.i_rest()) {
            let (direct, closed) = (l2_direct(&tt, p)?, l2_closed(&tt, p)?);
            t.check(direct == closed, || format!("a = {p}, T = {tt:?}: L2 {direct} vs {closed}"));
        }
        Ok(t)
    })
}

/// A random degree-0 monomial with exponents in `-2..=2`.
fn random_balanced(rng: &mut ChaCha8Rng, arity: usize) -> Vec<i32> {
    let mut b: Vec<i32> = (0..arity).map(|_| rng.gen_range(-2..=2)).collect();
    let excess: i32 = b.iter().sum();
    let i = rng.gen_range(0..arity);
    b[i] -= excess;
    b
}

/// A random first-layer monomial (exponents `>= -1`, sum 0), not
/// necessarily canonical.
fn random_first_layer(rng: &mut ChaCha8Rng, arity: usize) -> Option<Vec<i32>> {
    let mut idx: Vec<usize> = (0..arity).collect();
    idx.shuffle(rng);
    let m = rng.gen_range(1..arity);
    let (den, rest) = idx.split_at(m);
    let mut b = vec![0; arity];
    for &i in den {
        b[i] = -1;
    }
    for _ in 0..m {
        b[*rest.choose(rng)?] += 1;
    }
    Some(b)
}

fn pi_suite(cfg: &SweepConfig) -> Result<SuiteReport> {
    let grid = param_grid(cfg.max_n, cfg.max_a, true);
    let seeds: Vec<(usize, DysonParams)> = grid.into_iter().enumerate().collect();
    run_grid(Suite::Pi, &seeds, |(idx, p)| {
        let mut t = Tally::default();
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ *idx as u64);
        let d = build_dyson(p)?;
        let mut rotations = vec![(p.clone(), d.clone())];
        for _ in 0..p.n() {
            let next = rotations.last().expect("nonempty").0.rotated();
            let d_next = build_dyson(&next)?;
            rotations.push((next, d_next));
        }
        let d_rot = &rotations[1].1;
        t.check(&pi_action(&d) == d_rot, || format!("a = {p}: pi(D) differs from D(rot a)"));
        for _ in 0..cfg.samples {
            let b = random_balanced(&mut rng, p.arity());
            let m = Monomial::unit(0, b.clone());
            let f = d.mul_monomial(&m);
            let ct = f.ct_all();
            t.check(pi_action(&f).ct_all() == ct, || format!("a = {p}, b = {b:?}: CT not invariant"));
            let pi_m = pi_action(&LaurentPoly::from_monomial(m));
            let (pe, pc) = pi_m.terms().next().expect("one term");
            let moved = d_rot.mul_monomial(&Monomial::new(pc.clone(), pe.clone()));
            t.check(moved.ct_all() == ct, || format!("a = {p}, b = {b:?}: CT(pi(M) D(rot a)) differs"));
        }
        for _ in 0..cfg.samples / 5 {
            let Some(b) = random_first_layer(&mut rng, p.arity()) else { continue };
            let rotation = rotate_reduce(&GeneralMonomial::new(b.clone())?, p)?;
            let direct = ct_with_exponents(&d, &b)?;
            let d_canon = &rotations[rotation.steps].1;
            if rotations[rotation.steps].0 != rotation.params {
                return Err(Error::invariant(format!("rotation of {p} by {} steps", rotation.steps)));
            }
            let canon = ct_with_exponents(d_canon, &rotation.spec.exponents(p.n()))?;
            t.check(direct == canon.shift(rotation.q_shift), || {
                format!("a = {p}, b = {b:?}: rotation by {} steps, shift {}", rotation.steps, rotation.q_shift)
            });
        }
        Ok(t)
    })
}

fn q1_suite(cfg: &SweepConfig) -> Result<SuiteReport> {
    run_grid(Suite::Q1, &param_grid(cfg.max_n, cfg.max_a, true), |p| {
        let mut t = Tally::default();
        let d = build_dyson(p)?;
        for spec in MonomialSpec::enumerate(p.n(), cfg.max_m) {
            let brute = QRat::from_poly(ct_with_exponents(&d, &spec.exponents(p.n()))?).eval_at_one()?;
            let rhs = if spec.m() == 0 { dyson_rhs_q1(p)? } else { main_rhs_q1(p, &spec)? };
            t.check(brute == rhs, || format!("a = {p}, M = {spec}: {brute} vs {rhs}"));
        }
        Ok(t)
    })
}

/// `CT_x` of `f` computed by expanding every denominator binomial as a
/// geometric series in its small direction, truncated after `order` terms.
pub fn series_ct(f: &RatLaurent, order: usize) -> Result<QRat> {
    let arity = f.arity();
    let mut acc = f.numerator();
    for g in f.den_factors() {
        let (m, lead) = if g.top < g.bot {
            (Monomial::ratio(arity, g.top, g.bot, g.e), Monomial::new(1, ExpVec::zero(arity)))
        } else {
            // 1/(1 - M) = -M^{-1} / (1 - M^{-1})
            let inv = Monomial::ratio(arity, g.bot, g.top, -g.e);
            (inv.clone(), Monomial::new(-1, inv.exp.clone()))
        };
        let mut series = LaurentPoly::zero(arity);
        let mut term = lead;
        for _ in 0..order {
            series = &series + &LaurentPoly::from_monomial(term.clone());
            term = term.mul(&m);
        }
        acc = &acc * &series;
    }
    QRat::new(acc.ct_all().to_qpoly()?, f.den_q().clone())
}

/// A random rational function in at most three variables whose
/// denominator has distinct poles in every variable and which is proper in
/// each variable occurring there.
pub fn random_proper_instance(rng: &mut ChaCha8Rng) -> RatLaurent {
    loop {
        let arity = rng.gen_range(2..=3);
        let mut num = LaurentPoly::zero(arity);
        for _ in 0..rng.gen_range(1..=3) {
            let x: Vec<i32> = (0..arity).map(|_| rng.gen_range(-2..=1)).collect();
            let c: i64 = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
            num = &num + &LaurentPoly::from_monomial(Monomial::new(c, ExpVec::new(rng.gen_range(-2..=2), x)));
        }
        let mut f = RatLaurent::from_poly(num);
        for _ in 0..rng.gen_range(1..=3) {
            let top = rng.gen_range(0..arity);
            let bot = (top + rng.gen_range(1..arity)) % arity;
            f = f.div_factor(BinomFactor::new(top, bot, rng.gen_range(-3..=3)).expect("distinct")).expect("in range");
        }
        if f.is_zero() {
            continue;
        }
        let proper = f.den_vars().iter().all(|&v| f.degree_in(v).is_some_and(|d| d < 0));
        let distinct = f.den_vars().iter().all(|&v| {
            let mut poles: Vec<(usize, i64)> = f.den_factors().iter().filter_map(|g| g.pole(v)).collect();
            let len = poles.len();
            poles.sort_unstable();
            poles.dedup();
            poles.len() == len
        });
        if proper && distinct {
            return f;
        }
    }
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Random instances against the truncated-series oracle (stable across two
/// truncation orders) in every elimination order, plus the degree check on
/// every branch of the gx sweep at `n <= 2`.
fn engine_suite(cfg: &SweepConfig) -> Result<SuiteReport> {
    let seeds: Vec<u64> = (0..cfg.samples as u64 * 2).collect();
    let random = seeds.par_iter().map(|&i| {
        let mut t = Tally::default();
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(i));
        let f = random_proper_instance(&mut rng);
        let (low, high) = (series_ct(&f, 12)?, series_ct(&f, 16)?);
        t.check(low == high, || format!("instance {i}: series not stable ({low} vs {high})"));
        let engine = ct_full(&f)?;
        t.check(engine == high, || format!("instance {i} {f}: engine {engine} vs series {high}"));
        for order in permutations(&(0..f.arity()).collect::<Vec<_>>()) {
            let v = ct_in_order(&f, &order)?;
            t.check(v == engine, || format!("instance {i}: order {order:?} gives {v}, default {engine}"));
        }
        Ok(t)
    });
    let mut tallies: Vec<Result<Tally>> = random.collect();

    let mut grid = Vec::new();
    for p in param_grid(cfg.max_n.min(2), cfg.max_a, false) {
        for spec in MonomialSpec::enumerate(p.n(), cfg.max_m) {
            for h in 0..=p.a_sum() + 1 {
                grid.push((p.clone(), spec.clone(), h));
            }
        }
    }
    tallies.extend(grid.par_iter().map(|(p, spec, h)| {
        let mut t = Tally::default();
        // a degree mismatch surfaces as an invariant error from the recursion
        let run = gx_ct_monomial(&spec.exponents(p.n()), p, *h, GxOptions { keep_states: true, parallel: false })?;
        t.checked += run.branches.len();
        for br in run.branches.iter().filter(|br| br.status == BranchStatus::AlmostProperTerminal) {
            let state = br.state.as_ref().expect("kept");
            let (engine, series) = (ct_full(state)?, series_ct(state, 3 * p.a_sum() as usize + 6)?);
            t.check(engine == series, || format!("a = {p}, M = {spec}, h = {h}, {br}: engine {engine} vs series {series}"));
        }
        Ok(t)
    }).collect::<Vec<_>>());
    collect(Suite::Engine, tallies)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny() -> SweepConfig {
        SweepConfig { max_n: 2, max_a: 1, max_m: 2, samples: 5, seed: 7 }
    }

    #[test]
    fn grids_have_expected_sizes() {
        assert_eq!(vectors(3, 2).len(), 27);
        assert_eq!(param_grid(2, 1, true).len(), 4 + 8);
        assert_eq!(param_grid(2, 1, false).len(), 2 + 4);
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn tiny_sweeps_pass() {
        for s in Suite::ALL {
            let report = run_suite(s, &tiny()).unwrap();
            assert!(report.passed(), "{report}");
            assert!(report.checked > 0, "{report}");
        }
    }

    #[test]
    fn corollary_patterns_are_canonical() {
        assert_eq!(corollary_patterns(1).len(), 1);
        assert_eq!(corollary_patterns(2).len(), 3);
        // n = 3: 3 + 3 + (s=2: r=1, t none) + (s=3: r in {1,2}, t in {1,2}\{r})
        assert_eq!(corollary_patterns(3).len(), 8);
    }
}
