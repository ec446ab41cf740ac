//! Dimensions of invariant and semi-invariant spaces as alternating sums of
//! weight multiplicities over the Weyl group.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::cache::CountCache;
use crate::counting::{self, Count};
use crate::error::{Error, Limits, Result};
use crate::form::check_form;
use crate::weight::{signed_orbit_terms, SignedOrbitTerm, Weight};

/// Evaluates the counting formulas under a fixed set of limits, optionally
/// memoizing multiplicities on disk.
#[derive(Debug, Default)]
pub struct Engine {
    limits: Limits,
    cache: Option<CountCache>,
}

impl Engine {
    pub fn new(limits: Limits) -> Self {
        Engine {
            limits,
            cache: None,
        }
    }

    pub fn with_cache(mut self, cache: CountCache) -> Self {
        self.cache = Some(cache);
        self
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn cache(&self) -> Option<&CountCache> {
        self.cache.as_ref()
    }

    /// Multiplicity of `mu` in `S^k(A)`.
    pub fn c(&self, n: usize, d: u32, k: u32, mu: &Weight) -> Result<Count> {
        if let Some(hit) = self.cache.as_ref().and_then(|c| c.get(n, d, k, mu)) {
            return Ok(hit);
        }
        let count = counting::c(n, d, k, mu, &self.limits)?;
        if let Some(cache) = &self.cache {
            cache.insert(n, d, k, mu, &count)?;
        }
        Ok(count)
    }

    fn alternating_sum(
        &self,
        n: usize,
        d: u32,
        k: u32,
        terms: &[SignedOrbitTerm],
    ) -> Result<Count> {
        let mut total = BigInt::zero();
        for term in terms {
            let count = self.c(n, d, k, &term.dominant)?;
            total += BigInt::from(term.coefficient) * BigInt::from(count);
        }
        // a negative dimension means the weight conventions are inconsistent
        assert!(
            !total.is_negative(),
            "alternating sum went negative: {total} for n={n} d={d} k={k}"
        );
        Ok(total.magnitude().clone())
    }

    /// Number of linearly independent invariants of degree `k`.
    pub fn nu(&self, n: usize, d: u32, k: u32) -> Result<Count> {
        check_form(n, d)?;
        let terms = signed_orbit_terms(n, &Weight::zero(n), &self.limits)?;
        self.alternating_sum(n, d, k, &terms)
    }

    /// Multiplicity of the irreducible module with highest weight `lambda` in
    /// `S^k(A)`, i.e. the number of independent semi-invariants of that weight.
    pub fn gamma(&self, n: usize, d: u32, k: u32, lambda: &Weight) -> Result<Count> {
        check_form(n, d)?;
        if lambda.rank() != n {
            return Err(Error::invalid(format!(
                "lambda {lambda} has rank {} but n = {n}",
                lambda.rank()
            )));
        }
        if !lambda.is_dominant() {
            return Err(Error::invalid(format!("lambda {lambda} is not dominant")));
        }
        let terms = signed_orbit_terms(n, lambda, &self.limits)?;
        self.alternating_sum(n, d, k, &terms)
    }

    /// The ternary five-term formula, written out explicitly.
    pub fn nu_ternary(&self, d: u32, k: u32) -> Result<Count> {
        check_form(3, d)?;
        let c = |a: i64, b: i64| -> Result<BigInt> {
            Ok(BigInt::from(self.c(3, d, k, &Weight::new(vec![a, b]))?))
        };
        let total: BigInt = c(0, 0)? - 2 * c(1, 1)? - c(2, 2)? + c(0, 3)? + c(3, 0)?;
        assert!(
            !total.is_negative(),
            "ternary sum went negative for d={d} k={k}"
        );
        Ok(total.magnitude().clone())
    }

    /// `[nu(n,d,0), ..., nu(n,d,k_max)]`.
    pub fn hilbert_prefix(&self, n: usize, d: u32, k_max: u32) -> Result<Vec<Count>> {
        check_form(n, d)?;
        let terms = signed_orbit_terms(n, &Weight::zero(n), &self.limits)?;
        (0..=k_max)
            .map(|k| self.alternating_sum(n, d, k, &terms))
            .collect()
    }
}

pub fn nu(n: usize, d: u32, k: u32) -> Result<Count> {
    Engine::default().nu(n, d, k)
}

pub fn gamma(n: usize, d: u32, k: u32, lambda: &Weight) -> Result<Count> {
    Engine::default().gamma(n, d, k, lambda)
}

pub fn nu_ternary(d: u32, k: u32) -> Result<Count> {
    Engine::default().nu_ternary(d, k)
}

pub fn hilbert_prefix(n: usize, d: u32, k_max: u32) -> Result<Vec<Count>> {
    Engine::default().hilbert_prefix(n, d, k_max)
}
