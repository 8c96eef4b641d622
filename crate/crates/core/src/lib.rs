//! Exact-arithmetic library for product monomial crystals, KLRW strand
//! combinatorics, and difference-operator representations of truncated
//! shifted Yangians and the cylindrical KLR algebra.

pub mod category_o;
pub mod diffop;
pub mod dynkin;
pub mod error;
pub mod exec;
pub mod gklo;
pub mod gt;
pub mod klr;
pub mod monomial;
pub mod multiset;
pub mod perms;
pub mod poly;
pub mod report;
pub mod strands;
pub mod tensor;

pub use error::{Error, Result};
