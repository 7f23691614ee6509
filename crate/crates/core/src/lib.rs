//! Additive codes over the Klein four group.
//!
//! Two quadratic forms live on `Z2 × Z2`: the L-form (norms `0, 1, 2, 2`)
//! and the Kleinian form (all nonzero symbols have `q = 1`). Both share the
//! symplectic scalar product, so self-duality means the same thing on both
//! sides while evenness does not.

pub mod catalog;
pub mod classify;
pub mod cli;
pub mod code;
pub mod error;
pub mod enumerators;
pub mod group;
pub mod invariants;
pub mod maps;
pub mod poly;
pub mod symbol;
pub mod symmetry;
pub mod tables;
pub mod word;

pub use code::{LinearCode, WeightStructure};
pub use error::{CodeError, Result};
pub use group::SignedPermutation;
pub use symbol::{Flavor, FormTable, Symbol};
pub use word::Word;
