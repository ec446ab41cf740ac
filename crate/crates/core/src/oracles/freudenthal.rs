//! Weight multiplicities of irreducible `sl_n` modules by Freudenthal's
//! recursion.
//!
//! Weights are handled as exponent-style vectors `e` with `w_s = e_s - e_{s+1}`,
//! so dominant means non-increasing and the positive roots are
//! `eps_a - eps_b` for `a < b`. Every weight of `Gamma_lambda` has a
//! representative with the same coordinate sum as `lambda`; on those the
//! mean-centered trace form differs from the plain dot product by a constant
//! factor, which cancels out of the recursion.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::counting::Count;
use crate::error::{Error, Limits, Result};
use crate::weight::{height, signed_orbit_terms, Weight};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibleModule {
    highest: Weight,
}

impl IrreducibleModule {
    pub fn new(highest: Weight) -> Result<Self> {
        if !highest.is_dominant() {
            return Err(Error::invalid(format!(
                "highest weight {highest} is not dominant"
            )));
        }
        Ok(IrreducibleModule { highest })
    }

    pub fn highest(&self) -> &Weight {
        &self.highest
    }

    pub fn rank(&self) -> usize {
        self.highest.rank()
    }

    /// Runs the recursion over every dominant weight of the module.
    pub fn weights(&self) -> ModuleWeights {
        ModuleWeights::compute(self)
    }
}

/// Exponent-style coordinates with last entry 0.
fn e_vector(w: &Weight) -> Vec<i64> {
    let comps = w.components();
    let mut e = vec![0i64; comps.len() + 1];
    for s in (0..comps.len()).rev() {
        e[s] = e[s + 1] + comps[s];
    }
    e
}

fn weight_of(e: &[i64]) -> Weight {
    Weight::new(e.windows(2).map(|p| p[0] - p[1]).collect())
}

/// Dominant weights of `Gamma_lambda`: non-increasing vectors with the same
/// sum as `top` whose partial sums never exceed those of `top`.
fn dominant_below(top: &[i64]) -> Vec<Vec<i64>> {
    fn go(
        top: &[i64],
        prefix: &mut Vec<i64>,
        partial: i64,
        remaining: i64,
        out: &mut Vec<Vec<i64>>,
    ) {
        let j = prefix.len();
        let n = top.len();
        if j == n {
            if remaining == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        let top_partial: i64 = top[..=j].iter().sum();
        let cap = prefix.last().copied().unwrap_or(top[0]);
        let slots = (n - j) as i64;
        for x in (0..=cap.min(top_partial - partial)).rev() {
            // the rest are at most x each
            if x * slots < remaining {
                break;
            }
            if x > remaining {
                continue;
            }
            prefix.push(x);
            go(top, prefix, partial + x, remaining - x, out);
            prefix.pop();
        }
    }
    let total: i64 = top.iter().sum();
    let mut out = Vec::new();
    go(top, &mut Vec::with_capacity(top.len()), 0, total, &mut out);
    out
}

/// Multiplicities of all dominant weights of one irreducible module.
#[derive(Clone, Debug)]
pub struct ModuleWeights {
    n: usize,
    sum: i64,
    mults: HashMap<Vec<i64>, Count>,
}

impl ModuleWeights {
    fn compute(module: &IrreducibleModule) -> Self {
        let n = module.rank();
        let top = e_vector(module.highest());
        let sum: i64 = top.iter().sum();
        let rho: Vec<i64> = (0..n as i64).rev().collect();
        let norm_shifted =
            |v: &[i64]| -> i64 { v.iter().zip(&rho).map(|(a, r)| (a + r) * (a + r)).sum() };

        let mut order = dominant_below(&top);
        let members: HashSet<Vec<i64>> = order.iter().cloned().collect();
        order.sort_by_cached_key(|e| (std::cmp::Reverse(height(&weight_of(e))), e.clone()));

        let top_norm = norm_shifted(&top);
        let mut mults: HashMap<Vec<i64>, Count> = HashMap::with_capacity(order.len());
        for mu in order {
            if mu == top {
                mults.insert(mu, Count::one());
                continue;
            }
            let mut rhs = BigInt::zero();
            for a in 0..n {
                for b in a + 1..n {
                    let mut shifted = mu.clone();
                    for j in 1i64.. {
                        shifted[a] += 1;
                        shifted[b] -= 1;
                        let mut key = shifted.clone();
                        key.sort_unstable_by(|x, y| y.cmp(x));
                        if !members.contains(&key) {
                            break;
                        }
                        let m = mults.get(&key).expect("higher weights are processed first");
                        rhs += BigInt::from(mu[a] - mu[b] + 2 * j) * BigInt::from(m.clone());
                    }
                }
            }
            let lhs = BigInt::from(top_norm - norm_shifted(&mu));
            assert!(lhs.is_positive(), "non-positive Freudenthal denominator");
            let value: BigInt = 2 * rhs;
            assert!(
                (&value % &lhs).is_zero(),
                "Freudenthal recursion is not integral"
            );
            let value = value / lhs;
            assert!(!value.is_negative());
            mults.insert(mu, value.magnitude().clone());
        }
        ModuleWeights { n, sum, mults }
    }

    /// Multiplicity of an arbitrary weight (zero if it does not occur).
    pub fn multiplicity(&self, mu: &Weight) -> Count {
        if mu.rank() != self.n {
            return Count::zero();
        }
        let mut e = e_vector(mu);
        e.sort_unstable_by(|x, y| y.cmp(x));
        let diff = self.sum - e.iter().sum::<i64>();
        if diff.rem_euclid(self.n as i64) != 0 {
            return Count::zero();
        }
        let shift = diff / self.n as i64;
        e.iter_mut().for_each(|x| *x += shift);
        self.mults.get(&e).cloned().unwrap_or_default()
    }

    /// Dominant weights with their multiplicities.
    pub fn dominant(&self) -> BTreeMap<Weight, Count> {
        self.mults
            .iter()
            .map(|(e, m)| (weight_of(e), m.clone()))
            .collect()
    }

    /// Total dimension, summing each dominant multiplicity over its orbit.
    pub fn dimension(&self) -> Count {
        self.mults.iter().map(|(e, m)| orbit_size(e) * m).sum()
    }
}

fn orbit_size(e: &[i64]) -> BigUint {
    let mut size: BigUint = (1..=e.len() as u64).product();
    let mut run = 1u64;
    for j in 1..=e.len() {
        if j < e.len() && e[j] == e[j - 1] {
            run += 1;
        } else {
            let fact: BigUint = (1..=run).product();
            size /= fact;
            run = 1;
        }
    }
    size
}

/// `n_lambda(mu)`.
pub fn freudenthal_multiplicity(module: &IrreducibleModule, mu: &Weight) -> Count {
    module.weights().multiplicity(mu)
}

/// Dimension of `Gamma_lambda` from the Weyl product formula.
pub fn weyl_dimension(module: &IrreducibleModule) -> Count {
    let n = module.rank();
    let e = e_vector(module.highest());
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for a in 0..n {
        for b in a + 1..n {
            let shifted = (e[a] - e[b]) as u64 + (b - a) as u64;
            num *= shifted;
            den *= (b - a) as u64;
        }
    }
    num / den
}

/// `E_lambda = sum_s sign(s) n_lambda((rho - s(rho))*)`.
pub fn e_lambda(module: &IrreducibleModule, limits: &Limits) -> Result<BigInt> {
    let n = module.rank();
    let weights = module.weights();
    let mut total = BigInt::zero();
    for term in signed_orbit_terms(n, &Weight::zero(n), limits)? {
        total +=
            BigInt::from(term.coefficient) * BigInt::from(weights.multiplicity(&term.dominant));
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn module(v: &[i64]) -> IrreducibleModule {
        IrreducibleModule::new(Weight::new(v.to_vec())).unwrap()
    }

    fn w(v: &[i64]) -> Weight {
        Weight::new(v.to_vec())
    }

    #[test]
    fn multiplicity_examples() {
        for hw in [&[0i64, 0][..], &[1, 1], &[3, 0], &[2, 5]] {
            let m = module(hw);
            assert_eq!(freudenthal_multiplicity(&m, &w(hw)), Count::one());
        }
        assert_eq!(
            freudenthal_multiplicity(&module(&[1, 1]), &w(&[0, 0])),
            Count::from(2u8)
        );
        assert_eq!(
            freudenthal_multiplicity(&module(&[2]), &w(&[0])),
            Count::one()
        );
        assert_eq!(
            freudenthal_multiplicity(&module(&[2]), &w(&[-2])),
            Count::one()
        );
        assert_eq!(
            freudenthal_multiplicity(&module(&[2]), &w(&[1])),
            Count::zero()
        );
        assert_eq!(
            freudenthal_multiplicity(&module(&[2]), &w(&[4])),
            Count::zero()
        );
        // non-dominant weights of the adjoint module: the roots
        assert_eq!(
            freudenthal_multiplicity(&module(&[1, 1]), &w(&[2, -1])),
            Count::one()
        );
        assert_eq!(
            freudenthal_multiplicity(&module(&[1, 1]), &w(&[-1, -1])),
            Count::one()
        );
        // sl_3 module (2,2): zero weight has multiplicity 3
        assert_eq!(
            freudenthal_multiplicity(&module(&[2, 2]), &w(&[0, 0])),
            Count::from(3u8)
        );
        // sl_4 adjoint: zero weight has multiplicity 3
        assert_eq!(
            freudenthal_multiplicity(&module(&[1, 0, 1]), &w(&[0, 0, 0])),
            Count::from(3u8)
        );
    }

    #[test]
    fn rejects_non_dominant() {
        assert!(IrreducibleModule::new(w(&[1, -1])).is_err());
    }

    #[test]
    fn weyl_dimension_examples() {
        assert_eq!(weyl_dimension(&module(&[0, 0])), Count::one());
        assert_eq!(weyl_dimension(&module(&[1, 1])), Count::from(8u8));
        for d in 0..10 {
            assert_eq!(weyl_dimension(&module(&[d])), Count::from(d as u64 + 1));
        }
        // symmetric powers of the standard module: binomial(n - 1 + d, d)
        assert_eq!(weyl_dimension(&module(&[3, 0])), Count::from(10u8));
        assert_eq!(weyl_dimension(&module(&[2, 0, 0])), Count::from(10u8));
        assert_eq!(weyl_dimension(&module(&[1, 0, 1])), Count::from(15u8));
    }

    #[test]
    fn multiplicities_sum_to_dimension() {
        for n in 2..=4usize {
            let bound = if n == 4 { 3 } else { 5 };
            let mut hw = vec![0i64; n - 1];
            loop {
                let m = module(&hw);
                assert_eq!(
                    m.weights().dimension(),
                    weyl_dimension(&m),
                    "lambda = {hw:?}"
                );
                let mut j = 0;
                while j < hw.len() && hw[j] == bound {
                    hw[j] = 0;
                    j += 1;
                }
                if j == hw.len() {
                    break;
                }
                hw[j] += 1;
            }
        }
    }

    #[test]
    fn e_lambda_examples() {
        let l = Limits::default();
        assert_eq!(e_lambda(&module(&[0, 0]), &l).unwrap(), BigInt::one());
        assert_eq!(e_lambda(&module(&[1, 1]), &l).unwrap(), BigInt::zero());
        assert_eq!(e_lambda(&module(&[4]), &l).unwrap(), BigInt::zero());
        assert_eq!(e_lambda(&module(&[0]), &l).unwrap(), BigInt::one());
    }

    #[test]
    fn orbit_sizes() {
        assert_eq!(orbit_size(&[2, 1, 0]), BigUint::from(6u8));
        assert_eq!(orbit_size(&[1, 1, 0]), BigUint::from(3u8));
        assert_eq!(orbit_size(&[0, 0, 0]), BigUint::one());
        assert_eq!(orbit_size(&[2, 2, 1, 1]), BigUint::from(6u8));
    }
}
