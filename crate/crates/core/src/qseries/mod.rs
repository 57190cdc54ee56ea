//! Univariate exact arithmetic in `q`: Laurent polynomials, reduced rational
//! functions, and the q-Pochhammer / q-binomial builders used by the closed
//! forms.

mod poly;
mod rat;

pub use poly::QPoly;
pub use rat::QRat;

use crate::error::{Error, Result};

/// `(q^e)_k = (1 - q^e)(1 - q^{e+1}) ... (1 - q^{e+k-1})` for `k >= 0`.
pub fn qpoch_shifted(e: i64, k: i64) -> Result<QPoly> {
    if k < 0 {
        return Err(Error::usage(format!("negative Pochhammer length {k}")));
    }
    Ok((0..k).fold(QPoly::one(), |acc, i| &acc * &QPoly::one_minus_q_pow(e + i)))
}

/// `(q)_k` for `k >= 0`.
///
/// Negative `k` is rejected: in the usual convention `(q)_{-k}` carries the
/// factor `1 - q^0`. Ratios of such symbols go through [`qpoch_ratio`].
pub fn qpoch(k: i64) -> Result<QPoly> {
    if k < 0 {
        return Err(Error::usage(format!(
            "(q)_{k} is undefined on its own; use qpoch_ratio for negative indices"
        )));
    }
    qpoch_shifted(1, k)
}

/// `(q)_j / (q)_k` via the telescoped product, valid for any integers as
/// long as no `1 - q^0` lands in the denominator.
///
/// For `j >= k` this is `prod_{i=k+1}^{j} (1 - q^i)`; for `j < k` it is the
/// reciprocal of `prod_{i=j+1}^{k} (1 - q^i)`.
pub fn qpoch_ratio(j: i64, k: i64) -> Result<QRat> {
    if j >= k {
        return Ok(QRat::from_poly(qpoch_shifted(k + 1, j - k)?));
    }
    if j < 0 && k >= 0 {
        return Err(Error::Pole(format!("(q)_{j}/(q)_{k} has the factor 1 - q^0 below")));
    }
    QRat::new(QPoly::one(), qpoch_shifted(j + 1, k - j)?)
}

/// Gaussian binomial `[m choose k]_q`; zero outside `0 <= k <= m`.
pub fn qbinom(m: i64, k: i64) -> Result<QPoly> {
    if m < 0 {
        return Err(Error::usage(format!("qbinom needs m >= 0, got {m}")));
    }
    if k < 0 || k > m {
        return Ok(QPoly::zero());
    }
    let den = &qpoch(k)? * &qpoch(m - k)?;
    qpoch(m)?.div_exact(&den)
}
