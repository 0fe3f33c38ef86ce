//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (default) the helpers fan out over rayon's
//! global pool unless the process-wide policy has been switched to
//! [`Policy::Sequential`]. Without the feature every helper runs in order on
//! the calling thread. Results are always returned in input order, so the
//! policy never changes an answer.

use std::sync::atomic::{AtomicU8, Ordering};

use num_bigint::BigUint;
use num_traits::Zero;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Policy {
    Sequential,
    Parallel,
}

static POLICY: AtomicU8 = AtomicU8::new(1);

pub fn set_policy(policy: Policy) {
    POLICY.store(matches!(policy, Policy::Parallel) as u8, Ordering::Relaxed);
}

pub fn policy() -> Policy {
    if cfg!(feature = "parallel") && POLICY.load(Ordering::Relaxed) == 1 {
        Policy::Parallel
    } else {
        Policy::Sequential
    }
}

/// Ordered map over `items`.
pub fn map<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if policy() == Policy::Parallel && items.len() > 1 {
        use rayon::prelude::*;
        return items.into_par_iter().map(f).collect();
    }
    items.into_iter().map(f).collect()
}

/// Ordered fallible map; the first error in input order wins.
pub fn try_map<T, R, E, F>(items: Vec<T>, f: F) -> Result<Vec<R>, E>
where
    T: Send,
    R: Send,
    E: Send,
    F: Fn(T) -> Result<R, E> + Sync + Send,
{
    map(items, f).into_iter().collect()
}

/// Exact sum of per-item counts.
pub fn try_sum<T, E, F>(items: Vec<T>, f: F) -> Result<BigUint, E>
where
    T: Send,
    E: Send,
    F: Fn(T) -> Result<BigUint, E> + Sync + Send,
{
    let mut total = BigUint::zero();
    for part in map(items, f) {
        total += part?;
    }
    Ok(total)
}
