//! Cycle statistics of iterated finite mappings with restricted preimage sizes.
//!
//! A mapping `f: [n] -> [n]` iterated from any starting point is eventually
//! periodic; the eventual period equals the order `T` of the permutation that
//! `f` induces on its cyclic nodes (the lcm of its cycle lengths), and the
//! product `B` of the cycle lengths is a natural upper proxy for `T`. This
//! crate works with the class of `{0,k}`-mappings - mappings where every point
//! has exactly `0` or `k` preimages - which model polynomials `x^d + a` over
//! `F_p`, and with unrestricted uniform mappings as the baseline.
//!
//! What is here:
//!
//! * [`fungraph`]: mapping tables, indegree profiles, cycle structure, and the
//!   factored representation of `T` and `B`.
//! * [`sampler`]: uniform random `{0,k}`-mappings (two-permutation
//!   construction), uniform unrestricted mappings, and exhaustive enumeration
//!   of small `{0,k}`-mapping spaces.
//! * [`cyclestats`]: the exact and asymptotic distribution of the cyclic node
//!   count `Z`, exact expectations of `T` and `B` at small sizes, and the
//!   asymptotic predictors for `log E[T]` and `log E[B]` together with the
//!   lognormal centering constants.
//! * [`ffpoly`]: functional graphs of `x^d + a` over `F_p` and the exact
//!   indegree law of those polynomials.
//! * [`experiments`]: reproducible Monte Carlo harnesses - ratio tables over
//!   classes of functions, lognormality checks, concentration sampling, and
//!   first-hit estimation.
//! * [`cli`]: the subcommand dispatcher behind the `cyclemetrics` binary.
//!
//! All randomized operations are driven by ChaCha8 streams keyed by
//! `(seed, stream_index)`, so every result is reproducible bit-for-bit across
//! runs, platforms, and thread counts.

pub mod cli;
pub mod cyclestats;
mod error;
pub mod experiments;
pub mod ffpoly;
pub mod fungraph;
pub mod primes;
pub mod sampler;
pub mod special;

pub use error::{Error, Result};
