//! Exact character tables, `p`-blocks and minimal heights of finite
//! permutation groups, with the combinatorial and linear-group checks that
//! surround them.

pub mod arith;
pub mod blocks;
pub mod catalog;
pub mod chartab;
pub mod combinat;
pub mod cyclotomic;
pub mod error;
pub mod gf;
pub mod matgroup;
pub mod perm;
pub mod permgroup;
pub mod verify;

pub use blocks::{BlockPartition, HeightProfile};
pub use chartab::CharacterTable;
pub use cyclotomic::Cyclotomic;
pub use error::{Error, Result};
pub use matgroup::MatGroup;
pub use perm::Permutation;
pub use permgroup::PermGroup;
