//! Weight multiplicities of `S^k(A)` as counts of nonnegative integer solutions.
//!
//! `c(n, d, k, mu)` is the number of exponent vectors `alpha` over `I(n, d)`
//! with `|alpha| = k` whose monomial has weight `mu`. The weight equations are
//! solved for the moments `omega_s(alpha) = sum_i i_s alpha_i`, giving integer
//! targets `T_s`, and the solutions are counted by an unbounded-knapsack DP.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{check_limit, Error, Limits, Result};
use crate::form::{check_form, enumerate_indices};
use crate::weight::Weight;

/// Arbitrary-precision nonnegative count.
pub type Count = BigUint;

/// Required values of `omega_1(alpha), ..., omega_{n-1}(alpha)` at degree `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OmegaTargets {
    pub degree: u32,
    pub targets: Vec<u64>,
}

/// Solves the weight equations for the moment targets.
///
/// `T_s = (k d - sum_r r mu_r) / n + (mu_{s+1} + ... + mu_{n-1})`. Returns
/// `None` when the division is inexact or some `T_s` is negative.
pub fn omega_targets(n: usize, d: u32, k: u32, mu: &Weight) -> Result<Option<OmegaTargets>> {
    check_form(n, d)?;
    if mu.rank() != n {
        return Err(Error::invalid(format!(
            "weight {mu} has rank {} but n = {n}",
            mu.rank()
        )));
    }
    let m = mu.components();
    let kd = k as i128 * d as i128;
    let moment: i128 = m
        .iter()
        .enumerate()
        .map(|(r, &x)| (r as i128 + 1) * x as i128)
        .sum();
    let numerator = kd - moment;
    if numerator.rem_euclid(n as i128) != 0 {
        return Ok(None);
    }
    let base = numerator / n as i128;
    let mut targets = vec![0u64; n - 1];
    let mut tail: i128 = 0;
    for s in (0..n - 1).rev() {
        let t = base + tail;
        if t < 0 {
            return Ok(None);
        }
        targets[s] = t as u64;
        tail += m[s] as i128;
    }
    Ok(Some(OmegaTargets { degree: k, targets }))
}

trait Cell: Clone {
    fn empty() -> Self;
    fn unit() -> Self;
    fn is_empty(&self) -> bool;
    /// `self += other`; returns false on overflow.
    fn add_from(&mut self, other: &Self) -> bool;
    fn into_count(self) -> Count;
}

impl Cell for u128 {
    fn empty() -> Self {
        0
    }
    fn unit() -> Self {
        1
    }
    fn is_empty(&self) -> bool {
        *self == 0
    }
    fn add_from(&mut self, other: &Self) -> bool {
        match self.checked_add(*other) {
            Some(v) => {
                *self = v;
                true
            }
            None => false,
        }
    }
    fn into_count(self) -> Count {
        Count::from(self)
    }
}

impl Cell for BigUint {
    fn empty() -> Self {
        Zero::zero()
    }
    fn unit() -> Self {
        BigUint::from(1u8)
    }
    fn is_empty(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_from(&mut self, other: &Self) -> bool {
        *self += other;
        true
    }
    fn into_count(self) -> Count {
        self
    }
}

/// Dense DP layout: coordinate 0 is the degree, coordinates 1.. the moments.
struct Grid {
    dims: Vec<usize>,
    strides: Vec<usize>,
    len: usize,
}

impl Grid {
    fn new(dims: Vec<usize>) -> Self {
        let mut strides = vec![1; dims.len()];
        for j in (0..dims.len() - 1).rev() {
            strides[j] = strides[j + 1] * dims[j + 1];
        }
        let len = strides[0] * dims[0];
        Grid { dims, strides, len }
    }
}

/// Exact number of `alpha` with `|alpha| = k` and `omega_s(alpha) = T_s`.
pub fn count_solutions(n: usize, d: u32, targets: &OmegaTargets, limits: &Limits) -> Result<Count> {
    check_form(n, d)?;
    if targets.targets.len() != n - 1 {
        return Err(Error::invalid(format!(
            "expected {} targets, got {}",
            n - 1,
            targets.targets.len()
        )));
    }
    let k = targets.degree;
    let t = &targets.targets;
    let kd = k as u128 * d as u128;
    // every factor contributes at most d to the moment sum
    if t.iter().map(|&x| x as u128).sum::<u128>() > kd {
        return Ok(Count::zero());
    }

    let mut states: u128 = k as u128 + 1;
    for &x in t {
        states = states.saturating_mul(x as u128 + 1);
    }
    check_limit("solution-count DP states", states, limits.max_states)?;

    // items that overshoot a target can never appear
    let items: Vec<Vec<usize>> = enumerate_indices(n, d, limits)?
        .into_iter()
        .filter(|i| i.exponents().iter().zip(t).all(|(&e, &x)| e as u64 <= x))
        .map(|i| {
            let mut v = Vec::with_capacity(n);
            v.push(1);
            v.extend(i.exponents().iter().map(|&e| e as usize));
            v
        })
        .collect();

    let mut dims = Vec::with_capacity(n);
    dims.push(k as usize + 1);
    dims.extend(t.iter().map(|&x| x as usize + 1));
    let grid = Grid::new(dims);

    match knapsack::<u128>(&grid, &items) {
        Some(c) => Ok(c),
        None => Ok(knapsack::<BigUint>(&grid, &items).expect("big integers do not overflow")),
    }
}

fn knapsack<C: Cell>(grid: &Grid, items: &[Vec<usize>]) -> Option<Count> {
    let mut table = vec![C::empty(); grid.len];
    table[0] = C::unit();
    let rank = grid.dims.len();
    let mut coord = vec![0usize; rank];
    for item in items {
        let offset: usize = item.iter().zip(&grid.strides).map(|(a, s)| a * s).sum();
        // the largest coordinate that can still absorb the item, per axis
        let caps: Vec<usize> = grid
            .dims
            .iter()
            .zip(item)
            .map(|(&dim, &a)| dim.saturating_sub(a))
            .collect();
        coord.iter_mut().for_each(|c| *c = 0);
        // ascending order makes each item reusable (geometric series)
        for idx in 0..grid.len {
            if coord.iter().zip(&caps).all(|(c, cap)| c < cap) && !table[idx].is_empty() {
                let (lo, hi) = table.split_at_mut(idx + 1);
                if !hi[offset - 1].add_from(&lo[idx]) {
                    return None;
                }
            }
            for j in (0..rank).rev() {
                coord[j] += 1;
                if coord[j] < grid.dims[j] {
                    break;
                }
                coord[j] = 0;
            }
        }
    }
    Some(table[grid.len - 1].clone().into_count())
}

/// `c(n, d, k, mu)`: multiplicity of the weight `mu` in `S^k(A)`.
pub fn c(n: usize, d: u32, k: u32, mu: &Weight, limits: &Limits) -> Result<Count> {
    match omega_targets(n, d, k, mu)? {
        Some(t) => count_solutions(n, d, &t, limits),
        None => Ok(Count::zero()),
    }
}
