//! Closed forms for one-row, hook and one-column cases.

use super::KostkaError;
use crate::partition::Partition;
use crate::poly::{t_binomial, t_factorial, t_integer, TPoly};

/// `K_{(n),μ} = t^{n(μ)}`.
pub fn kostka_one_row(content: &Partition) -> TPoly {
    TPoly::monomial(content.n_stat(), 1)
}

/// `K_{(n-k,1^k),μ} = t^{n(μ) - kl + k(k+1)/2} [l-1 choose k]` with `l = l(μ)`.
///
/// Requires `|μ| = n`, `k < n` and `μ ≤ (n-k, 1^k)`.
pub fn kostka_hook(n: u32, k: u32, content: &Partition) -> Result<TPoly, KostkaError> {
    if k >= n {
        return Err(KostkaError::PreconditionViolated(format!(
            "hook (n-k, 1^k) needs k < n, got n={n} k={k}"
        )));
    }
    if content.weight() != n {
        return Err(KostkaError::PreconditionViolated(format!(
            "content {content} has weight {}, expected {n}",
            content.weight()
        )));
    }
    let hook = Partition::hook(n, k);
    if !hook.dominates(content) {
        return Err(KostkaError::PreconditionViolated(format!(
            "{hook} does not dominate {content}"
        )));
    }
    let l = content.length() as i64;
    let (k, nmu) = (i64::from(k), i64::from(content.n_stat()));
    let exponent = nmu - k * l + k * (k + 1) / 2;
    let exponent = u32::try_from(exponent).expect("hook exponent is nonnegative under dominance");
    Ok(t_binomial(l as u32 - 1, k as u32).shift(exponent))
}

/// `K_{λ,(1^n)} = t^{n(λ')} [n]! / Π_{x∈λ} [h(x)]`.
pub fn kostka_column(shape: &Partition) -> TPoly {
    let denom = shape
        .hook_lengths()
        .into_iter()
        .fold(TPoly::one(), |acc, h| &acc * &t_integer(h));
    t_factorial(shape.weight())
        .exact_divide(&denom)
        .expect("[n]! is divisible by the hook product")
        .shift(shape.conjugate().n_stat())
}
