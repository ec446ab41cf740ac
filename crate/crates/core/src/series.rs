//! Truncated expansion of the generating function
//! `R = prod_{i in I(n,d)} 1 / (1 - t q^i)`, whose coefficient at `t^k q^T`
//! counts the degree-`k` monomials with moments `T`.
//!
//! Exponents are stored in integer moment space. The rational shift attached
//! to a weight is kept as a numerator over `n` and checked for integrality at
//! extraction time.

use std::collections::{BTreeMap, HashMap};
use std::io::{self, Write};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::counting::{Count, OmegaTargets};
use crate::error::{check_limit, Error, Limits, Result};
use crate::form::{check_form, enumerate_indices};
use crate::weight::{signed_orbit_terms, Weight};

#[derive(Clone, Debug)]
pub struct TruncatedSeries {
    n: usize,
    d: u32,
    degree_bound: u32,
    /// `layers[k]` maps a moment vector to the coefficient of `t^k q^moment`.
    layers: Vec<HashMap<Vec<u32>, Count>>,
}

impl TruncatedSeries {
    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn form_degree(&self) -> u32 {
        self.d
    }

    pub fn degree_bound(&self) -> u32 {
        self.degree_bound
    }

    pub fn len(&self) -> usize {
        self.layers.iter().map(HashMap::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Nonzero coefficients in `(t-degree, moments)` order.
    pub fn terms(&self) -> Vec<(u32, Vec<u32>, Count)> {
        let mut out = Vec::with_capacity(self.len());
        for (deg, layer) in self.layers.iter().enumerate() {
            let sorted: BTreeMap<_, _> = layer.iter().collect();
            out.extend(
                sorted
                    .into_iter()
                    .map(|(m, c)| (deg as u32, m.clone(), c.clone())),
            );
        }
        out
    }

    /// Coefficient of `t^k q^targets`.
    pub fn coefficient(&self, k: u32, targets: &OmegaTargets) -> Result<Count> {
        if k > self.degree_bound {
            return Err(Error::OutOfTruncation {
                k,
                bound: self.degree_bound,
            });
        }
        if targets.targets.len() != self.n - 1 {
            return Err(Error::invalid(format!(
                "expected {} targets, got {}",
                self.n - 1,
                targets.targets.len()
            )));
        }
        let key: Option<Vec<u32>> = targets
            .targets
            .iter()
            .map(|&x| u32::try_from(x).ok())
            .collect();
        Ok(key
            .and_then(|key| self.layers[k as usize].get(&key).cloned())
            .unwrap_or_default())
    }

    /// Writes one JSON object per nonzero coefficient.
    pub fn write_jsonl<W: Write>(&self, mut out: W) -> io::Result<()> {
        #[derive(Serialize)]
        struct Record<'a> {
            t: u32,
            omega: &'a [u32],
            coefficient: String,
        }
        for (t, omega, c) in self.terms() {
            let rec = Record {
                t,
                omega: &omega,
                coefficient: c.to_string(),
            };
            serde_json::to_writer(&mut out, &rec)?;
            out.write_all(b"\n")?;
        }
        Ok(())
    }
}

/// Expands `R` up to and including `t^degree_bound`.
pub fn expand_r(n: usize, d: u32, degree_bound: u32, limits: &Limits) -> Result<TruncatedSeries> {
    check_form(n, d)?;
    let indices = enumerate_indices(n, d, limits)?;
    let mut layers: Vec<HashMap<Vec<u32>, Count>> =
        (0..=degree_bound).map(|_| HashMap::new()).collect();
    layers[0].insert(vec![0; n - 1], Count::from(1u8));
    let mut stored: u128 = 1;

    for index in &indices {
        let step = index.exponents();
        // multiply by 1/(1 - t q^i): each layer absorbs the already-updated one below
        for deg in 0..degree_bound as usize {
            let (lower, upper) = layers.split_at_mut(deg + 1);
            let target = &mut upper[0];
            for (moments, coef) in lower[deg].iter() {
                let shifted: Vec<u32> = moments.iter().zip(step).map(|(a, b)| a + b).collect();
                match target.get_mut(&shifted) {
                    Some(existing) => *existing += coef,
                    None => {
                        stored += 1;
                        check_limit("series coefficients", stored, limits.max_series_terms)?;
                        target.insert(shifted, coef.clone());
                    }
                }
            }
        }
    }

    Ok(TruncatedSeries {
        n,
        d,
        degree_bound,
        layers,
    })
}

/// The shift vector attached to a weight, stored as `n` times its value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuOmega {
    n: usize,
    scaled: Vec<i64>,
}

impl MuOmega {
    pub fn denominator(&self) -> usize {
        self.n
    }

    /// `n * mu_omega`, always integral.
    pub fn scaled(&self) -> &[i64] {
        &self.scaled
    }

    /// Moment targets `k d / n - mu_omega`, or `None` when they are fractional
    /// or negative.
    pub fn targets(&self, d: u32, k: u32) -> Option<OmegaTargets> {
        let n = self.n as i64;
        let kd = k as i64 * d as i64;
        let mut targets = Vec::with_capacity(self.scaled.len());
        for &s in &self.scaled {
            let num = kd - s;
            if num.rem_euclid(n) != 0 || num < 0 {
                return None;
            }
            targets.push((num / n) as u64);
        }
        Some(OmegaTargets { degree: k, targets })
    }
}

/// Entry `s` is `(1/n) sum_r r mu_r - sum_{r > s} mu_r`.
pub fn mu_omega(n: usize, mu: &Weight) -> Result<MuOmega> {
    if mu.rank() != n {
        return Err(Error::invalid(format!(
            "weight {mu} has rank {} but n = {n}",
            mu.rank()
        )));
    }
    let m = mu.components();
    let moment: i64 = m.iter().enumerate().map(|(r, &x)| (r as i64 + 1) * x).sum();
    let scaled = (0..n - 1)
        .map(|s| moment - n as i64 * m[s + 1..].iter().sum::<i64>())
        .collect();
    Ok(MuOmega { n, scaled })
}

/// Alternating orbit sum evaluated on an already expanded series.
pub fn nu_from_series(series: &TruncatedSeries, k: u32, limits: &Limits) -> Result<Count> {
    let n = series.rank();
    let mut total = BigInt::zero();
    for term in signed_orbit_terms(n, &Weight::zero(n), limits)? {
        let shift = mu_omega(n, &term.dominant)?;
        if let Some(targets) = shift.targets(series.form_degree(), k) {
            let coef = series.coefficient(k, &targets)?;
            total += BigInt::from(term.coefficient) * BigInt::from(coef);
        }
    }
    assert!(
        !total.is_negative(),
        "alternating sum went negative: {total} for n={n} d={} k={k}",
        series.form_degree()
    );
    Ok(total.magnitude().clone())
}

/// The number of degree-`k` invariants, computed through the generating function.
pub fn nu_via_series(n: usize, d: u32, k: u32, limits: &Limits) -> Result<Count> {
    let series = expand_r(n, d, k, limits)?;
    nu_from_series(&series, k, limits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::count_solutions;

    fn key(t: u32, m: &[u32], c: u32) -> (u32, Vec<u32>, Count) {
        (t, m.to_vec(), Count::from(c))
    }

    #[test]
    fn first_order_binary_linear() {
        let s = expand_r(2, 1, 1, &Limits::default()).unwrap();
        assert_eq!(
            s.terms(),
            vec![key(0, &[0], 1), key(1, &[0], 1), key(1, &[1], 1)]
        );
    }

    #[test]
    fn zero_truncation() {
        for n in 2..=4 {
            for d in 1..=3 {
                let s = expand_r(n, d, 0, &Limits::default()).unwrap();
                assert_eq!(s.terms(), vec![key(0, &vec![0; n - 1], 1)]);
            }
        }
    }

    #[test]
    fn coefficient_examples() {
        let s = expand_r(2, 2, 2, &Limits::default()).unwrap();
        let t = |k, x: &[u64]| OmegaTargets {
            degree: k,
            targets: x.to_vec(),
        };
        assert_eq!(s.coefficient(2, &t(2, &[2])).unwrap(), Count::from(2u8));
        assert_eq!(s.coefficient(0, &t(0, &[0])).unwrap(), Count::from(1u8));
        assert_eq!(s.coefficient(2, &t(2, &[5])).unwrap(), Count::zero());
        assert!(matches!(
            s.coefficient(3, &t(3, &[3])),
            Err(Error::OutOfTruncation { k: 3, bound: 2 })
        ));
    }

    #[test]
    fn series_invariants() {
        let l = Limits::default();
        let s = expand_r(3, 2, 4, &l).unwrap();
        for (t, m, _) in s.terms() {
            assert!(t <= 4);
            assert!(m.iter().all(|&x| x <= 2 * 4));
        }
        // a larger truncation leaves stored coefficients untouched
        let bigger = expand_r(3, 2, 6, &l).unwrap();
        for (t, m, c) in s.terms() {
            let targets = OmegaTargets {
                degree: t,
                targets: m.iter().map(|&x| x as u64).collect(),
            };
            assert_eq!(bigger.coefficient(t, &targets).unwrap(), c);
        }
    }

    #[test]
    fn coefficients_match_dp() {
        let l = Limits::default();
        for n in 2..=3 {
            for d in 1..=3 {
                let s = expand_r(n, d, 5, &l).unwrap();
                for (t, m, c) in s.terms() {
                    let targets = OmegaTargets {
                        degree: t,
                        targets: m.iter().map(|&x| x as u64).collect(),
                    };
                    assert_eq!(count_solutions(n, d, &targets, &l).unwrap(), c);
                }
            }
        }
    }

    #[test]
    fn mu_omega_examples() {
        let m = mu_omega(3, &Weight::zero(3)).unwrap();
        assert_eq!(m.scaled(), &[0, 0]);
        // (0, 1) scaled by 3
        let m = mu_omega(3, &Weight::new(vec![1, 1])).unwrap();
        assert_eq!(m.scaled(), &[0, 3]);
        let m = mu_omega(2, &Weight::new(vec![2])).unwrap();
        assert_eq!(m.scaled(), &[2]);
        assert_eq!(m.denominator(), 2);
    }

    #[test]
    fn mu_omega_agrees_with_omega_targets() {
        use crate::counting::omega_targets;
        for n in 2..=4 {
            for d in 1..=3 {
                for k in 0..=4 {
                    for a in -3..=3i64 {
                        let mut comps = vec![0; n - 1];
                        comps[0] = a;
                        comps[n - 2] += 1 - a;
                        let mu = Weight::new(comps);
                        assert_eq!(
                            mu_omega(n, &mu).unwrap().targets(d, k),
                            omega_targets(n, d, k, &mu).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn nu_examples() {
        let l = Limits::default();
        assert_eq!(nu_via_series(2, 2, 2, &l).unwrap(), Count::from(1u8));
        for n in 2..=4 {
            assert_eq!(nu_via_series(n, 2, 0, &l).unwrap(), Count::from(1u8));
        }
        assert_eq!(nu_via_series(3, 3, 1, &l).unwrap(), Count::zero());
        assert_eq!(nu_via_series(3, 3, 4, &l).unwrap(), Count::from(1u8));
    }

    #[test]
    fn dump_format() {
        let s = expand_r(2, 1, 1, &Limits::default()).unwrap();
        let mut buf = Vec::new();
        s.write_jsonl(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text,
            "{\"t\":0,\"omega\":[0],\"coefficient\":\"1\"}\n\
             {\"t\":1,\"omega\":[0],\"coefficient\":\"1\"}\n\
             {\"t\":1,\"omega\":[1],\"coefficient\":\"1\"}\n"
        );
    }

    #[test]
    fn term_limit() {
        let l = Limits {
            max_series_terms: 5,
            ..Limits::default()
        };
        assert!(expand_r(3, 3, 4, &l).unwrap_err().is_resource_limit());
    }
}
