//! Worst-case oracle evaluation counts.
//!
//! The knapsack greedy evaluates
//!
//! ```text
//! Phase 1:  n·k               singletons
//!         + C(n,2)·k²         pairs
//! Phase 2:  C(n,3)·k³ seeds × (1 + k·(n-3)(n-2)/2)
//! ```
//!
//! where each seed costs one evaluation of `f(seed)` and then `k` per
//! remaining candidate item per step, the candidate set shrinking from
//! `n-3` to 1. Infeasible sets are skipped, so real runs can only be lower.
//!
//! Every term is at most a fraction of `n⁵k⁴` (1, 1/2, 1/6 and 1/12
//! respectively), so `count_bound(n, k) <= 2·n⁵k⁴` for all `n, k >= 1`.

/// `C` in `count_bound(n, k) <= C·n⁵k⁴`.
pub const COUNT_BOUND_CONSTANT: u64 = 2;

fn choose(n: u64, r: u64) -> u64 {
    if r > n {
        return 0;
    }
    (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Worst-case evaluations of the knapsack greedy on `n` items and `k` dimensions.
pub fn count_bound(n: usize, k: usize) -> u64 {
    let (n, k) = (n as u64, k as u64);
    let phase1 = n * k + choose(n, 2) * k * k;
    let per_seed = if n >= 3 { 1 + k * (n - 3) * (n - 2) / 2 } else { 0 };
    phase1 + choose(n, 3) * k.pow(3) * per_seed
}

/// Evaluations of the unconstrained greedy: exactly `n·k`.
pub fn unconstrained_count_bound(n: usize, k: usize) -> u64 {
    (n * k) as u64
}
