//! Exact combinatorics for graded Specht modules of level-two cyclotomic KLR
//! algebras indexed by bihooks, with a structure predictor and an LLT
//! canonical-basis oracle in characteristic zero.

pub mod arith;
pub mod combinatorics;
pub mod crystal;
pub mod error;
pub mod fock;
pub mod schur;
pub mod structure;
pub mod tableaux;
pub mod verify;

pub use combinatorics::{Bipartition, Node, Partition, QuantumCharacteristic};
pub use error::{Error, Result};
