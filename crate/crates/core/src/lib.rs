//! Bijective machinery relating k-cycles of permutations in `S_kn` to fixed
//! points of elements of the generalized symmetric group `S(k,n) = Z_k^n ⋊ S_n`.
//!
//! The crate provides:
//!
//! * [`perm`]: permutations, canonical cycle notation and the fundamental
//!   (hat) bijection between permutations and words.
//! * [`gsg`]: elements `(x, τ)` of `S(k,n)` and their fixed points.
//! * [`forward`]: the statistic-preserving bijection `S_kn → D_{k,n} × S(k,n)`.
//! * [`inverse`]: its inverse, via block rotations recovered from `x`.
//! * [`involution`]: the induced involution on `S(k,n) × S_kn` that swaps
//!   fixed-point count and k-cycle count.
//! * [`harness`]: exhaustive and sampled verification of the distribution
//!   identity and of the maps themselves.
//! * [`text`]: textual encodings used by the command-line tool.
//!
//! All interfaces are 1-based: a permutation on `{1..m}` stores `π(i)` at
//! slot `i - 1`, and positions within words are reported from 1.

pub mod error;
pub mod forward;
pub mod gsg;
pub mod harness;
pub mod inverse;
pub mod involution;
pub mod perm;
pub mod text;

pub use error::{Error, Result};
pub use forward::{factor, FactoredPair, KCycleFactorization};
pub use gsg::GsgElement;
pub use inverse::{unfactor, ShiftVector};
pub use involution::{swap_statistics, InvolutionPair};
pub use perm::{stanley_hat, stanley_unhat, CycleForm, Permutation, Word};
