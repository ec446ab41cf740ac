use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::counting::Count;
use crate::error::{check_limit, Limits, Result};
use crate::form::{binomial_u128, check_form, enumerate_indices, epsilon_weight, index_count};
use crate::oracles::freudenthal::IrreducibleModule;
use crate::weight::{height, Weight};

/// Weight multiplicities of `S^k(A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub n: usize,
    pub d: u32,
    pub k: u32,
    pub multiplicities: BTreeMap<Weight, Count>,
}

impl CharacterTable {
    pub fn multiplicity(&self, mu: &Weight) -> Count {
        self.multiplicities.get(mu).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> Count {
        self.multiplicities.values().sum()
    }

    /// Whether every weight has the multiplicity of its dominant representative.
    pub fn is_w_symmetric(&self) -> bool {
        self.multiplicities
            .iter()
            .all(|(w, m)| self.multiplicity(&w.dominant()) == *m)
    }
}

/// Tallies the weight of every degree-`k` monomial in the coefficients.
pub fn brute_character(n: usize, d: u32, k: u32, limits: &Limits) -> Result<CharacterTable> {
    check_form(n, d)?;
    let size = index_count(n, d);
    let monomials = if k == 0 {
        1
    } else {
        binomial_u128(size.saturating_add(k as u128 - 1), k as u128)
    };
    check_limit("monomials to enumerate", monomials, limits.max_enumeration)?;

    let eps: Vec<Vec<i64>> = enumerate_indices(n, d, limits)?
        .iter()
        .map(|i| epsilon_weight(i).components().to_vec())
        .collect();
    let mut tally: HashMap<Vec<i64>, u64> = HashMap::new();
    let mut acc = vec![0i64; n - 1];
    visit(&eps, 0, k, &mut acc, &mut tally);

    Ok(CharacterTable {
        n,
        d,
        k,
        multiplicities: tally
            .into_iter()
            .map(|(w, m)| (Weight::new(w), Count::from(m)))
            .collect(),
    })
}

// multisets as non-decreasing index sequences
fn visit(
    eps: &[Vec<i64>],
    start: usize,
    left: u32,
    acc: &mut [i64],
    tally: &mut HashMap<Vec<i64>, u64>,
) {
    if left == 0 {
        *tally.entry(acc.to_vec()).or_default() += 1;
        return;
    }
    for p in start..eps.len() {
        acc.iter_mut().zip(&eps[p]).for_each(|(a, e)| *a += e);
        visit(eps, p, left - 1, acc, tally);
        acc.iter_mut().zip(&eps[p]).for_each(|(a, e)| *a -= e);
    }
}

/// Decomposes a character into irreducibles by repeatedly removing the
/// character of the highest remaining dominant weight.
///
/// Panics if a multiplicity would go negative or something is left over,
/// which means the table is not a character.
pub fn strip_decompose(table: &CharacterTable) -> BTreeMap<Weight, Count> {
    let mut remaining: BTreeMap<Weight, BigInt> = table
        .multiplicities
        .iter()
        .map(|(w, m)| (w.clone(), BigInt::from(m.clone())))
        .collect();
    let mut dominant: Vec<Weight> = remaining
        .keys()
        .filter(|w| w.is_dominant())
        .cloned()
        .collect();
    dominant.sort_by_cached_key(|w| (std::cmp::Reverse(height(w)), w.clone()));

    let mut out = BTreeMap::new();
    for lambda in dominant {
        let g = remaining[&lambda].clone();
        assert!(!g.is_negative(), "negative multiplicity left at {lambda}");
        if g.is_zero() {
            continue;
        }
        let module = IrreducibleModule::new(lambda.clone()).expect("dominant");
        let weights = module.weights();
        for (mu, left) in remaining.iter_mut() {
            let m = weights.multiplicity(mu);
            if !m.is_zero() {
                *left -= &g * BigInt::from(m);
                assert!(
                    !left.is_negative(),
                    "stripping {lambda} drove {mu} negative"
                );
            }
        }
        let support: Count = weights.dimension();
        let covered: Count = remaining.keys().map(|mu| weights.multiplicity(mu)).sum();
        assert_eq!(
            support, covered,
            "module {lambda} has weights outside the table"
        );
        out.insert(lambda, g.magnitude().clone());
    }
    assert!(
        remaining.values().all(Zero::is_zero),
        "character not exhausted by stripping"
    );
    out
}
