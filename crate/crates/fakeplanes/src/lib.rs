//! Exact enumeration of squared Markov-type triples, fake weighted projective
//! planes of integral degree, their singularities, and adjacency graphs of
//! toric degenerations.
//!
//! The lattice and tree code is generic over an integer type implementing
//! [`Int`]; the geometric layers work with [`BigInt`] so that no value can
//! overflow. The aliases below fix the default scalar.

pub mod abelian;
pub mod adjacency;
pub mod error;
pub mod fwpp;
pub mod markov;

use std::fmt::{Debug, Display};
use std::hash::Hash;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Exact integer scalar.
///
/// Tree arithmetic goes through the checked operations, so fixed-width
/// implementations report [`Error::Overflow`] instead of wrapping.
pub trait Int:
    num_integer::Integer
    + num_integer::Roots
    + num_traits::Signed
    + num_traits::FromPrimitive
    + num_traits::ToPrimitive
    + num_traits::CheckedAdd
    + num_traits::CheckedSub
    + num_traits::CheckedMul
    + Clone
    + Ord
    + Hash
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    fn from_u64(v: u64) -> Self {
        <Self as num_traits::FromPrimitive>::from_u64(v).expect("value out of range")
    }
}

macro_rules! impl_int {
    ($($t:ty),*) => {
        $(impl Int for $t {})*
    };
}

impl_int!(i64, i128, BigInt);

/// Solution triple over arbitrary-precision integers.
pub type Triple = markov::SolutionTriple<BigInt>;
/// Mutation tree over arbitrary-precision integers.
pub type Tree = markov::MutationTree<BigInt>;
/// Integer matrix over arbitrary-precision integers.
pub type IntMatrix = abelian::Matrix<BigInt>;

pub use abelian::{KAutomorphism, KContext, KElement};
pub use adjacency::{AdjacencyGraph, AdjacentPair, KStarData};
pub use fwpp::{DegreeMatrix, GeneratorMatrix, SeriesId, SingularityReport};
