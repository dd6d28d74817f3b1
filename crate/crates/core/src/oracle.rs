//! Exponential reference deciders used as ground truth on small inputs.

use thiserror::Error;

use crate::instance::Instance;

pub const DEFAULT_PERMUTATION_CAP: usize = 10;
pub const DEFAULT_BACKTRACK_CAP: usize = 14;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum OracleError {
    #[error("instance has {n} components, oracle cap is {cap}")]
    CapExceeded { n: usize, cap: usize },
}

fn check_cap(u: &Instance, cap: usize) -> Result<(), OracleError> {
    if u.len() > cap {
        Err(OracleError::CapExceeded { n: u.len(), cap })
    } else {
        Ok(())
    }
}

fn chains_in_order(u: &Instance, order: &[usize]) -> bool {
    order.windows(2).all(|w| u.chains(w[0], w[1]))
}

/// Rearranges `p` into the next permutation in lexicographic order; returns
/// `false` (leaving `p` sorted ascending) after the last one.
fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = p.windows(2).rposition(|w| w[0] < w[1]) else {
        p.reverse();
        return false;
    };
    let j = p.iter().rposition(|&x| x > p[i]).expect("p[i + 1] > p[i]");
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

/// Scans every permutation of the components in lexicographic order.
pub fn oracle_permutations(u: &Instance) -> Result<bool, OracleError> {
    oracle_permutations_capped(u, DEFAULT_PERMUTATION_CAP)
}

pub fn oracle_permutations_capped(u: &Instance, cap: usize) -> Result<bool, OracleError> {
    check_cap(u, cap)?;
    let mut order: Vec<usize> = (0..u.len()).collect();
    loop {
        if chains_in_order(u, &order) {
            return Ok(true);
        }
        if !next_permutation(&mut order) {
            return Ok(false);
        }
    }
}

/// Recursive extension search: every component seeds a partial ordering,
/// which is extended only by remaining components that overlap its last
/// element, succeeding once all `n` are placed.
pub fn oracle_backtrack(u: &Instance) -> Result<bool, OracleError> {
    oracle_backtrack_observed(u, DEFAULT_BACKTRACK_CAP, |_| {})
}

pub fn oracle_backtrack_capped(u: &Instance, cap: usize) -> Result<bool, OracleError> {
    oracle_backtrack_observed(u, cap, |_| {})
}

/// As [`oracle_backtrack_capped`], calling `observe` with every partial
/// ordering (0-based indices) the search expands.
pub fn oracle_backtrack_observed<F>(
    u: &Instance,
    cap: usize,
    mut observe: F,
) -> Result<bool, OracleError>
where
    F: FnMut(&[usize]),
{
    check_cap(u, cap)?;
    let mut placed = Vec::with_capacity(u.len());
    let mut remaining: Vec<usize> = (0..u.len()).collect();
    for i in 0..remaining.len() {
        let seed = remaining.remove(i);
        placed.push(seed);
        let found = extend(u, &mut placed, &mut remaining, &mut observe);
        placed.pop();
        remaining.insert(i, seed);
        if found {
            return Ok(true);
        }
    }
    Ok(false)
}

fn extend<F: FnMut(&[usize])>(
    u: &Instance,
    placed: &mut Vec<usize>,
    remaining: &mut Vec<usize>,
    observe: &mut F,
) -> bool {
    observe(placed);
    let last = *placed.last().expect("seeded before extending");
    for i in 0..remaining.len() {
        let next = remaining[i];
        if !u.chains(last, next) {
            continue;
        }
        if remaining.len() == 1 {
            return true;
        }
        remaining.remove(i);
        placed.push(next);
        let found = extend(u, placed, remaining, observe);
        placed.pop();
        remaining.insert(i, next);
        if found {
            return true;
        }
    }
    false
}
