//! Binary cyclic codes and their automorphism groups.
//!
//! The crate covers the whole pipeline from GF(2) polynomial arithmetic to verified group
//! orders: [`gf2poly`] factors `x^n - 1`, [`code`] builds cyclic codes and their matrix
//! views, [`perm`] and [`group`] provide permutations and Schreier-Sims stabilizer chains,
//! [`construct`] produces explicit automorphism generators for long codes built from short
//! ones, and [`verify`] checks them, by brute force where feasible.

pub mod code;
pub mod construct;
pub mod error;
pub mod gf2poly;
pub mod group;
pub mod manifest;
pub mod perm;
pub mod verify;

pub use code::{Codeword, CyclicCode, MatrixLayout};
pub use construct::{ConstructionSpec, Generator, InnerGroup};
pub use error::{Error, Result};
pub use gf2poly::Gf2Poly;
pub use group::PermGroup;
pub use manifest::{Manifest, ManifestEntry};
pub use perm::Permutation;
pub use verify::{OrderClaim, VerificationReport, VerifyOptions};
