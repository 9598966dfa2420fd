//! Exact local-operator expansion of the stabilizers of complete
//! **k**-uniform hypergraph states.
//!
//! A hypergraph state `|H> = prod_e CZ_e |+>^n` is stabilized by the nonlocal
//! operators `g_l = X_l prod_{e' in N(l)} CZ_{e'}`. For complete **k**-uniform
//! hypergraphs each `g_l` can be rewritten as `X_l` times a linear
//! combination of Z strings whose coefficients `C_m` depend only on the
//! string length. This crate computes those coefficients exactly as dyadic
//! rationals and checks them against a dense sign-vector simulator.
//!
//! - [`combinatorics`]: big-integer binomials and binomial parity.
//! - [`dyadic`]: the exact `a / 2^b` number type.
//! - [`hypergraph`]: vertex sets, complete **k**-uniform hypergraphs, neighborhoods.
//! - [`statevector`]: the dense simulator used as an oracle.
//! - [`expansion`]: the coefficient engine, expanded stabilizers, and scans.
//! - [`bell`]: the sum-of-stabilizers Bell functional and its bounds.
//! - [`verify`]: all cross-checks for one `(n, k)` pair.
//!
//! ```
//! use hyperstab::{coefficients, DyadicRational, UniformityProfile};
//!
//! let k3 = UniformityProfile::single(3).unwrap();
//! let c = coefficients(4, &k3).unwrap();
//! let rendered: Vec<String> = c.coeffs().iter().map(DyadicRational::to_string).collect();
//! assert_eq!(rendered, ["0", "1/2^1", "0", "-1/2^1"]);
//! ```

pub mod bell;
pub mod combinatorics;
pub mod dyadic;
pub mod error;
pub mod expansion;
pub mod hypergraph;
pub mod statevector;
pub mod verify;

pub use bell::{classical_bound, classical_bound_exhaustive, quantum_value, BellFunctional, DeterministicStrategy};
pub use combinatorics::{alt_binom_identity, binom, binom_parity};
pub use dyadic::DyadicRational;
pub use error::{Error, Result};
pub use expansion::{
    apply_zx_polynomial, c0_zero_predicate, coefficients, cz_expand, expanded_stabilizer, f_k, CzExpansion,
    LocalExpansion, ZXPolynomial,
};
pub use hypergraph::{support, Hypergraph, UniformityProfile, VertexSet};
pub use statevector::{build_state, probe_expectation_direct, ProbeState, SignState};
