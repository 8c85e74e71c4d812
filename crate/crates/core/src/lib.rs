//! Exact combinatorics of canonical bases for tensor powers of the minuscule
//! representations of the infinite-rank symplectic and special linear algebras.
//!
//! Everything is computed over the ring of Laurent polynomials in `q` with
//! exact integer coefficients; no floating point appears anywhere.  The crate
//! is organised along the objects it manipulates:
//!
//! - [`laurent`]: sparse Laurent polynomials, the bar involution, and the
//!   coefficient classes used by the straightening algorithm;
//! - [`orders`]: index tuples, weights, N-statistics, the two Bruhat orders
//!   and their inverse-dominance characterisations, the prime map, and the
//!   membership predicates for the truncation/block index sets;
//! - [`tensor`]: formal linear combinations of tensor monomials, local
//!   i-signatures, the classical and quantum Chevalley actions, and the
//!   truncation projections;
//! - [`canonical`]: the memoized canonical-basis engine (rough bar-invariant
//!   vectors, straightening, certificates, cross-checks, negativity scans);
//! - [`crystal`]: Kashiwara operators, signature reduction, connectivity of
//!   the antidominant component, and bounded component exploration;
//! - [`blocks`]: weight diagrams on the positive number line, block
//!   statistics, and arc-diagram rendering.
//!
//! Core containers are generic over the coefficient scalar via the [`Scalar`]
//! trait so that small experiments can run on fixed-width integers; the
//! default scalar is [`Int`] (arbitrary precision), which the CLI and the
//! acceptance suite use throughout.

pub mod blocks;
pub mod canonical;
pub mod crystal;
pub mod laurent;
pub mod orders;
pub mod selftest;
pub mod tensor;

mod error;

pub use error::{Error, Result};

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_traits::{NumAssign, Signed};

/// Default exact coefficient scalar: arbitrary-precision integers.
pub type Int = num_bigint::BigInt;

/// Laurent polynomial over the default exact scalar.
pub type LaurentPoly = laurent::LaurentPoly<Int>;

/// Laurent polynomial over fixed-width integers, for small computations.
pub type LaurentPoly64 = laurent::LaurentPoly<i64>;

/// Tensor-monomial linear combination over the default exact scalar.
pub type TensorVec = tensor::TensorVec<Int>;

/// Canonical-basis engine over the default exact scalar.
pub type Engine = canonical::Engine<Int>;

/// Coefficient scalar for the Laurent ring: a signed integer-like ring with
/// exact equality.  Implemented by `BigInt`, `i64`, `i128`, ...
pub trait Scalar:
    Signed + NumAssign + Clone + Eq + Ord + Hash + Debug + Display + From<i32> + Send + Sync + 'static
{
}

impl<T> Scalar for T where
    T: Signed
        + NumAssign
        + Clone
        + Eq
        + Ord
        + Hash
        + Debug
        + Display
        + From<i32>
        + Send
        + Sync
        + 'static
{
}

/// Resource limits for the canonical-basis engine.
///
/// `support_guard` bounds the number of tensor monomials any intermediate
/// vector may carry; `depth_guard` bounds the number of straightening
/// subtractions (and elimination steps) per vector.  Exceeding either aborts
/// the computation with [`Error::SupportGuard`] / [`Error::DepthGuard`].
#[derive(Clone, Debug)]
pub struct Config {
    pub support_guard: usize,
    pub depth_guard: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            support_guard: 1_000_000,
            depth_guard: 10_000,
        }
    }
}
