//! Exact counts of invariants and semi-invariants of n-ary forms.
//!
//! The number of degree-`k` invariants of an n-ary form of degree `d` is the
//! alternating sum over the Weyl group `S_n`
//!
//! ```text
//! nu(n, d, k) = sum_s sign(s) c(n, d, k, (rho - s(rho))*)
//! ```
//!
//! where `c(n, d, k, mu)` is the multiplicity of the weight `mu` in the
//! `k`-th symmetric power of the coefficient space. Replacing `rho - s(rho)`
//! by `lambda + rho - s(rho)` gives the multiplicity `gamma` of the
//! irreducible module with highest weight `lambda`.
//!
//! ```
//! use nary_core::{nu, Count};
//!
//! // the ternary cubic has a single invariant in degree 4
//! assert_eq!(nu(3, 3, 4).unwrap(), Count::from(1u8));
//! ```

pub mod cache;
pub mod counting;
pub mod dimension;
pub mod error;
pub mod form;
pub mod oracles;
pub mod series;
pub mod weight;

pub use cache::CountCache;
pub use counting::{c, count_solutions, omega_targets, Count, OmegaTargets};
pub use dimension::{gamma, hilbert_prefix, nu, nu_ternary, Engine};
pub use error::{Error, Limits, Result};
pub use form::{enumerate_indices, epsilon_weight, monomial_weight, Exponent, MultiIndex};
pub use series::{expand_r, mu_omega, nu_from_series, nu_via_series, MuOmega, TruncatedSeries};
pub use weight::{
    dominant_representative, from_c, rho, signed_orbit_terms, to_c, CVector, SignedOrbitTerm,
    Weight,
};
