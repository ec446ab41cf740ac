//! Weights of `sl_n` in eigenvalue coordinates, their permutation model, and
//! the signed Weyl-orbit terms that drive the alternating-sum formulas.
//!
//! A weight of rank `n` is stored as `n - 1` integers `w_1, ..., w_{n-1}`: the
//! eigenvalues of the Cartan elements `H_s = E_{s+1,s+1} - E_{s,s}`. The
//! companion [`CVector`] holds `n` integers `c_1, ..., c_n`, defined up to a
//! common shift, with
//!
//! ```text
//! w_s = c_{s+1} - c_s
//! ```
//!
//! Under this convention a weight is dominant (all `w_s >= 0`) exactly when its
//! c-vector is sorted ascending, and the Weyl group `S_n` acts by permuting the
//! c-entries. The highest weight `(d, 0, ..., 0)` of the coefficient space maps
//! to `(0, d, ..., d)`, the negated exponent vector of `x_1^d`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{check_limit, Error, Limits, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight {
    components: Vec<i64>,
}

impl Weight {
    /// Builds a weight from its `n - 1` components.
    ///
    /// Panics if `components` is empty (rank would be below 2).
    pub fn new(components: Vec<i64>) -> Self {
        assert!(!components.is_empty(), "a weight needs rank n >= 2");
        Weight { components }
    }

    pub fn zero(n: usize) -> Self {
        assert!(n >= 2, "rank must be at least 2");
        Weight {
            components: vec![0; n - 1],
        }
    }

    /// The rank parameter `n` (one more than the number of components).
    pub fn rank(&self) -> usize {
        self.components.len() + 1
    }

    pub fn components(&self) -> &[i64] {
        &self.components
    }

    pub fn is_dominant(&self) -> bool {
        self.components.iter().all(|&x| x >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|&x| x == 0)
    }

    pub fn to_c(&self) -> CVector {
        to_c(self)
    }

    pub fn dominant(&self) -> Weight {
        dominant_representative(self)
    }

    fn check_rank(&self, other: &Weight) {
        assert_eq!(
            self.rank(),
            other.rank(),
            "weights of different rank cannot be combined"
        );
    }
}

impl Add for &Weight {
    type Output = Weight;

    fn add(self, rhs: &Weight) -> Weight {
        self.check_rank(rhs);
        Weight::new(
            self.components
                .iter()
                .zip(&rhs.components)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Sub for &Weight {
    type Output = Weight;

    fn sub(self, rhs: &Weight) -> Weight {
        self.check_rank(rhs);
        Weight::new(
            self.components
                .iter()
                .zip(&rhs.components)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// Permutation coordinates of a weight, normalized so the minimum entry is 0.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CVector {
    entries: Vec<i64>,
}

impl CVector {
    /// Normalizes `entries` by subtracting their minimum.
    pub fn new(mut entries: Vec<i64>) -> Self {
        assert!(entries.len() >= 2, "a c-vector needs at least two entries");
        let min = *entries.iter().min().expect("non-empty");
        entries.iter_mut().for_each(|e| *e -= min);
        CVector { entries }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn to_weight(&self) -> Weight {
        from_c(self)
    }

    /// Applies a permutation: entry `j` of the result is entry `perm[j]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> CVector {
        assert_eq!(perm.len(), self.entries.len());
        CVector::new(perm.iter().map(|&p| self.entries[p]).collect())
    }

    pub fn sorted(&self) -> CVector {
        let mut entries = self.entries.clone();
        entries.sort_unstable();
        CVector { entries }
    }
}

pub fn to_c(w: &Weight) -> CVector {
    let mut entries = Vec::with_capacity(w.rank());
    let mut acc = 0i64;
    entries.push(acc);
    for &x in w.components() {
        acc += x;
        entries.push(acc);
    }
    CVector::new(entries)
}

pub fn from_c(c: &CVector) -> Weight {
    Weight::new(c.entries.windows(2).map(|p| p[1] - p[0]).collect())
}

/// The unique dominant weight `w*` on the Weyl orbit of `w`.
pub fn dominant_representative(w: &Weight) -> Weight {
    if w.is_dominant() {
        return w.clone();
    }
    from_c(&to_c(w).sorted())
}

/// Half the sum of positive roots, `(1, ..., 1)`.
pub fn rho(n: usize) -> Weight {
    assert!(n >= 2, "rank must be at least 2");
    Weight::new(vec![1; n - 1])
}

/// A linear functional that strictly increases when a positive root is added.
///
/// Equals `n` times the sum of the simple-root coordinates of `w`, which keeps
/// it integral. Sorting by it descending processes higher weights first.
pub fn height(w: &Weight) -> i64 {
    let n = w.rank() as i64;
    let c = to_c(w);
    // exponent-style coordinates e = -c, so dominant means descending e
    let e: Vec<i64> = c.entries().iter().map(|x| -x).collect();
    let total: i64 = e.iter().sum();
    let mut partial = 0;
    let mut h = 0;
    for (j, x) in e.iter().take(e.len() - 1).enumerate() {
        partial += x;
        h += n * partial - (j as i64 + 1) * total;
    }
    h
}

/// A dominant weight with the signed count of Weyl elements mapping to it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignedOrbitTerm {
    pub dominant: Weight,
    pub coefficient: i64,
}

impl fmt::Display for SignedOrbitTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {:+}", self.dominant, self.coefficient)
    }
}

/// Iterates all permutations of `0..n` in lexicographic order together with
/// their sign (`+1` even, `-1` odd).
pub fn signed_permutations(n: usize) -> SignedPermutations {
    SignedPermutations {
        current: Some((0..n).collect()),
    }
}

pub struct SignedPermutations {
    current: Option<Vec<usize>>,
}

impl Iterator for SignedPermutations {
    type Item = (Vec<usize>, i64);

    fn next(&mut self) -> Option<Self::Item> {
        let perm = self.current.take()?;
        let sign = permutation_sign(&perm);
        let mut next = perm.clone();
        if next_permutation(&mut next) {
            self.current = Some(next);
        }
        Some((perm, sign))
    }
}

fn permutation_sign(perm: &[usize]) -> i64 {
    let mut inversions = 0usize;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// The unaggregated terms `(shift + rho - s(rho), sign(s))` for every `s` in `S_n`.
pub fn orbit_shifts(n: usize, shift: &Weight, limits: &Limits) -> Result<Vec<(Weight, i64)>> {
    if n < 2 {
        return Err(Error::invalid(format!(
            "rank n must be at least 2, got {n}"
        )));
    }
    if shift.rank() != n {
        return Err(Error::invalid(format!(
            "shift {shift} has rank {} but n = {n}",
            shift.rank()
        )));
    }
    check_limit("Weyl group rank", n as u128, limits.max_rank as u128)?;

    let rho_c = to_c(&rho(n));
    let shift_c = to_c(shift);
    Ok(signed_permutations(n)
        .map(|(perm, sign)| {
            let moved = rho_c.permuted(&perm);
            let entries = (0..n)
                .map(|j| shift_c.entries()[j] + rho_c.entries()[j] - moved.entries()[j])
                .collect();
            (from_c(&CVector::new(entries)), sign)
        })
        .collect())
}

/// Aggregated `(shift + rho - s(rho))*` terms with nonzero signed multiplicity.
///
/// Terms are ordered by largest component, then lexicographically.
pub fn signed_orbit_terms(
    n: usize,
    shift: &Weight,
    limits: &Limits,
) -> Result<Vec<SignedOrbitTerm>> {
    let mut merged: BTreeMap<Weight, i64> = BTreeMap::new();
    for (w, sign) in orbit_shifts(n, shift, limits)? {
        *merged.entry(dominant_representative(&w)).or_default() += sign;
    }
    let mut terms: Vec<SignedOrbitTerm> = merged
        .into_iter()
        .filter(|(_, c)| *c != 0)
        .map(|(dominant, coefficient)| SignedOrbitTerm {
            dominant,
            coefficient,
        })
        .collect();
    terms.sort_by(|a, b| {
        let ma = a.dominant.components().iter().max();
        let mb = b.dominant.components().iter().max();
        ma.cmp(&mb).then_with(|| a.dominant.cmp(&b.dominant))
    });
    Ok(terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(v: &[i64]) -> Weight {
        Weight::new(v.to_vec())
    }

    fn terms_map(terms: &[SignedOrbitTerm]) -> BTreeMap<Weight, i64> {
        terms
            .iter()
            .map(|t| (t.dominant.clone(), t.coefficient))
            .collect()
    }

    #[test]
    fn c_coordinates() {
        assert_eq!(to_c(&w(&[1, 1])).entries(), &[0, 1, 2]);
        assert_eq!(to_c(&w(&[0, 0])).entries(), &[0, 0, 0]);
        assert_eq!(to_c(&w(&[2])).entries(), &[0, 2]);
        // highest weight of the coefficient space of a ternary cubic
        assert_eq!(to_c(&w(&[3, 0])).entries(), &[0, 3, 3]);
    }

    #[test]
    fn dominant_examples() {
        assert_eq!(dominant_representative(&w(&[2, -1])), w(&[1, 1]));
        assert_eq!(dominant_representative(&w(&[-1, 2])), w(&[1, 1]));
        assert_eq!(dominant_representative(&w(&[0, 0])), w(&[0, 0]));
        assert_eq!(dominant_representative(&w(&[-1, -1])), w(&[1, 1]));
        assert_eq!(dominant_representative(&w(&[1, -2])), w(&[1, 1]));
        assert_eq!(dominant_representative(&w(&[-2])), w(&[2]));
    }

    #[test]
    fn rho_values() {
        assert_eq!(rho(3), w(&[1, 1]));
        assert_eq!(rho(2), w(&[1]));
        assert_eq!(rho(5), w(&[1, 1, 1, 1]));
    }

    #[test]
    fn ternary_orbit_is_the_five_term_identity() {
        let terms = signed_orbit_terms(3, &Weight::zero(3), &Limits::default()).unwrap();
        let expected: BTreeMap<Weight, i64> = [
            (w(&[0, 0]), 1),
            (w(&[1, 1]), -2),
            (w(&[2, 2]), -1),
            (w(&[0, 3]), 1),
            (w(&[3, 0]), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(terms_map(&terms), expected);
        let order: Vec<_> = terms.iter().map(|t| t.dominant.clone()).collect();
        assert_eq!(
            order,
            vec![w(&[0, 0]), w(&[1, 1]), w(&[2, 2]), w(&[0, 3]), w(&[3, 0])]
        );
    }

    #[test]
    fn ternary_orbit_of_rho_matches_reflection_table() {
        // rho - s(rho) before taking dominant representatives
        let raw: BTreeMap<Weight, i64> = orbit_shifts(3, &Weight::zero(3), &Limits::default())
            .unwrap()
            .into_iter()
            .collect();
        let expected: BTreeMap<Weight, i64> = [
            (w(&[0, 0]), 1),
            (w(&[2, -1]), -1),
            (w(&[-1, 2]), -1),
            (w(&[2, 2]), -1),
            (w(&[0, 3]), 1),
            (w(&[3, 0]), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(raw, expected);
    }

    #[test]
    fn binary_orbit() {
        let l = Limits::default();
        let terms = signed_orbit_terms(2, &Weight::zero(2), &l).unwrap();
        assert_eq!(
            terms_map(&terms),
            [(w(&[0]), 1), (w(&[2]), -1)].into_iter().collect()
        );
        for d in 0..6 {
            let terms = signed_orbit_terms(2, &w(&[d]), &l).unwrap();
            assert_eq!(
                terms_map(&terms),
                [(w(&[d]), 1), (w(&[d + 2]), -1)].into_iter().collect()
            );
        }
    }

    #[test]
    fn rank_limit_is_enforced() {
        let l = Limits::default();
        let err = signed_orbit_terms(9, &Weight::zero(9), &l).unwrap_err();
        assert!(err.is_resource_limit());
        let err = signed_orbit_terms(3, &Weight::zero(4), &l).unwrap_err();
        assert!(matches!(err, Error::InvalidInput(_)));
    }

    #[test]
    fn raw_signs_cancel() {
        for n in 2..=6 {
            let total: i64 = signed_permutations(n).map(|(_, s)| s).sum();
            assert_eq!(total, 0, "n = {n}");
            assert_eq!(signed_permutations(n).count(), (1..=n).product::<usize>());
        }
    }

    #[test]
    fn identity_is_only_zero_term() {
        let l = Limits::default();
        for n in 2..=6 {
            let terms = signed_orbit_terms(n, &Weight::zero(n), &l).unwrap();
            let zero = terms.iter().find(|t| t.dominant.is_zero()).unwrap();
            assert_eq!(zero.coefficient, 1);
            let mass: i64 = terms.iter().map(|t| t.coefficient.abs()).sum();
            assert!(mass <= (1..=n as i64).product());
        }
    }

    #[test]
    fn height_increases_along_positive_roots() {
        // simple roots of sl_3 in these coordinates
        let a1 = w(&[2, -1]);
        let a2 = w(&[-1, 2]);
        let mu = w(&[1, 0]);
        assert!(height(&(&mu + &a1)) > height(&mu));
        assert!(height(&(&mu + &a2)) > height(&mu));
        assert_eq!(height(&Weight::zero(4)), 0);
    }

    fn weight_strategy() -> impl Strategy<Value = Weight> {
        (2usize..=6)
            .prop_flat_map(|n| proptest::collection::vec(-20i64..=20, n - 1).prop_map(Weight::new))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn c_round_trip(wt in weight_strategy()) {
            prop_assert_eq!(from_c(&to_c(&wt)), wt);
        }

        #[test]
        fn dominant_is_idempotent_and_w_invariant(wt in weight_strategy(), seed in any::<u64>()) {
            let dom = dominant_representative(&wt);
            prop_assert!(dom.is_dominant());
            prop_assert_eq!(dominant_representative(&dom), dom.clone());
            let n = wt.rank();
            let perms: Vec<_> = signed_permutations(n).collect();
            let (perm, _) = &perms[(seed % perms.len() as u64) as usize];
            let moved = from_c(&to_c(&wt).permuted(perm));
            prop_assert_eq!(dominant_representative(&moved), dom);
        }
    }
}
