//! Closed-form distance bounds.
//!
//! [`stated_upper_bound`] is kept as a formula under test, not a trusted
//! invariant: for `q = 3` it is violated by explicit LCD codes (see the
//! verification report). [`plotkin_average_bound`] and [`singleton_bound`]
//! hold for every linear code and are used as sanity ceilings.

use crate::error::{Error, Result};

/// `q^(k-1)` and `q^k - 1` as exact integers.
fn powers(k: u32, q: u32) -> Result<(u128, u128)> {
    if k == 0 {
        return Err(Error::InvalidParameters("bounds need k >= 1".into()));
    }
    if q < 2 {
        return Err(Error::InvalidParameters(format!(
            "field size must be >= 2, got {q}"
        )));
    }
    let q = q as u128;
    let top = q
        .checked_pow(k)
        .filter(|t| t.checked_mul(u64::MAX as u128).is_some())
        .ok_or_else(|| Error::InvalidParameters(format!("q^k overflows for q = {q}, k = {k}")))?;
    Ok((top / q, top - 1))
}

/// `floor(n q^(k-1) / (q^k - 1))`.
pub fn stated_upper_bound(n: u64, k: u32, q: u32) -> Result<u64> {
    let (lower, denom) = powers(k, q)?;
    Ok((n as u128 * lower / denom) as u64)
}

/// `floor(n q^(k-1) (q - 1) / (q^k - 1))`: the average weight of a nonzero
/// codeword when no coordinate is identically zero, hence a ceiling on `d`.
pub fn plotkin_average_bound(n: u64, k: u32, q: u32) -> Result<u64> {
    let (lower, denom) = powers(k, q)?;
    Ok((n as u128 * lower * (q as u128 - 1) / denom) as u64)
}

/// `n - k + 1`.
pub fn singleton_bound(n: u64, k: u64) -> Result<u64> {
    if k == 0 || k > n {
        return Err(Error::InvalidParameters(format!(
            "singleton bound needs 1 <= k <= n, got n = {n}, k = {k}"
        )));
    }
    Ok(n - k + 1)
}
