//! Coefficient indices of an n-ary form of degree d and their weights.
//!
//! The form is `sum_i a_i x_1^{d-|i|} x_2^{i_1} ... x_n^{i_{n-1}}` over
//! multi-indices `i` with `|i| <= d`. The multinomial normalization of the
//! coefficients does not affect weights and is not modeled.

use std::collections::BTreeMap;

use crate::error::{check_limit, Error, Limits, Result};
use crate::weight::Weight;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex {
    d: u32,
    exponents: Vec<u32>,
}

impl MultiIndex {
    pub fn new(d: u32, exponents: Vec<u32>) -> Result<Self> {
        if exponents.is_empty() {
            return Err(Error::invalid("a multi-index needs n - 1 >= 1 entries"));
        }
        let total: u64 = exponents.iter().map(|&x| x as u64).sum();
        if total > d as u64 {
            return Err(Error::invalid(format!(
                "multi-index {exponents:?} has |i| = {total} > d = {d}"
            )));
        }
        Ok(MultiIndex { d, exponents })
    }

    pub fn rank(&self) -> usize {
        self.exponents.len() + 1
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// `|i| = i_1 + ... + i_{n-1}`.
    pub fn total(&self) -> u32 {
        self.exponents.iter().sum()
    }
}

/// `binomial(n - 1 + d, n - 1)`, saturating at `u128::MAX`.
pub fn index_count(n: usize, d: u32) -> u128 {
    binomial_u128((n - 1) as u128 + d as u128, (n - 1) as u128)
}

pub(crate) fn binomial_u128(top: u128, bottom: u128) -> u128 {
    let bottom = bottom.min(top.saturating_sub(bottom));
    let mut acc: u128 = 1;
    for j in 0..bottom {
        // acc * (top - j) / (j + 1) stays integral at every step
        acc = match acc.checked_mul(top - j) {
            Some(v) => v / (j + 1),
            None => return u128::MAX,
        };
    }
    acc
}

pub(crate) fn check_form(n: usize, d: u32) -> Result<()> {
    if n < 2 {
        return Err(Error::invalid(format!("n must be at least 2, got {n}")));
    }
    if d < 1 {
        return Err(Error::invalid("d must be at least 1"));
    }
    Ok(())
}

/// All multi-indices with `|i| <= d`, in lexicographic order.
pub fn enumerate_indices(n: usize, d: u32, limits: &Limits) -> Result<Vec<MultiIndex>> {
    check_form(n, d)?;
    check_limit(
        "coefficient index set",
        index_count(n, d),
        limits.max_indices,
    )?;
    let mut out = Vec::new();
    let mut current = vec![0u32; n - 1];
    fill(&mut current, 0, d, &mut out, d);
    Ok(out)
}

fn fill(current: &mut Vec<u32>, pos: usize, remaining: u32, out: &mut Vec<MultiIndex>, d: u32) {
    if pos == current.len() {
        out.push(MultiIndex {
            d,
            exponents: current.clone(),
        });
        return;
    }
    for x in 0..=remaining {
        current[pos] = x;
        fill(current, pos + 1, remaining - x, out, d);
    }
    current[pos] = 0;
}

/// Weight of the coefficient `a_i`:
/// `(d - (2 i_1 + i_2 + ... + i_{n-1}), i_1 - i_2, ..., i_{n-2} - i_{n-1})`.
pub fn epsilon_weight(i: &MultiIndex) -> Weight {
    weight_from_omega(i.d as i64, i.exponents.iter().map(|&x| x as i64))
}

fn weight_from_omega(kd: i64, omega: impl Iterator<Item = i64>) -> Weight {
    let omega: Vec<i64> = omega.collect();
    let mut comps = Vec::with_capacity(omega.len());
    comps.push(kd - omega[0] - omega.iter().sum::<i64>());
    comps.extend(omega.windows(2).map(|p| p[0] - p[1]));
    Weight::new(comps)
}

/// Exponent vector `alpha` of a monomial `prod a_i^{alpha_i}`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Exponent {
    alpha: BTreeMap<MultiIndex, u32>,
}

impl Exponent {
    pub fn new() -> Self {
        Self::default()
    }

    /// Multiplies the monomial by `a_i^times`.
    pub fn push(&mut self, i: MultiIndex, times: u32) {
        if times > 0 {
            *self.alpha.entry(i).or_default() += times;
        }
    }

    pub fn degree(&self) -> u32 {
        self.alpha.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&MultiIndex, u32)> {
        self.alpha.iter().map(|(i, &m)| (i, m))
    }

    /// `omega_s(alpha) = sum_i i_s alpha_i` for `s = 1..n-1`.
    pub fn omega(&self, n: usize) -> Vec<u64> {
        let mut out = vec![0u64; n - 1];
        for (i, m) in self.iter() {
            for (o, &e) in out.iter_mut().zip(i.exponents()) {
                *o += e as u64 * m as u64;
            }
        }
        out
    }

    pub fn combined(&self, other: &Exponent) -> Exponent {
        let mut out = self.clone();
        for (i, m) in other.iter() {
            out.push(i.clone(), m);
        }
        out
    }
}

/// Weight of a monomial in the coefficients:
/// `(k d - (2 w_1 + w_2 + ... + w_{n-1}), w_1 - w_2, ..., w_{n-2} - w_{n-1})`
/// with `w_s = omega_s(alpha)` and `k = |alpha|`.
///
/// The empty monomial has no form parameters attached, so `n` and `d` are
/// passed explicitly.
pub fn monomial_weight(n: usize, d: u32, alpha: &Exponent) -> Result<Weight> {
    check_form(n, d)?;
    for (i, _) in alpha.iter() {
        if i.rank() != n || i.degree() != d {
            return Err(Error::invalid(format!(
                "index {:?} does not belong to I(n={n}, d={d})",
                i.exponents()
            )));
        }
    }
    let kd = alpha.degree() as i64 * d as i64;
    Ok(weight_from_omega(
        kd,
        alpha.omega(n).into_iter().map(|x| x as i64),
    ))
}
