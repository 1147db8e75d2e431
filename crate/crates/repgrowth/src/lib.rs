//! Exact computation of tensor-product growth of group representations
//! under the Plancherel-normalized measure `|χ| = Σ χ_i(1)²` over the
//! distinct irreducible constituents of `χ`.
//!
//! Two worlds are covered with the same measure:
//!
//! * compact semisimple Lie groups of any Cartan type, via exact Weyl
//!   character combinatorics ([`root_system`], [`weyl_char`], [`growth`]);
//! * finite groups given by character tables with cyclotomic values
//!   ([`finite_char`]), including built-in `PSL₂(q)` and extraspecial
//!   `p`-group tables.
//!
//! All measures, multiplicities and dimensions are exact big integers;
//! floating point only enters when a growth exponent `log|χ²|/log|χ|` is
//! reported, and then as the final step from exact integers.
//!
//! The [`cli`] module exposes the same operations as a command-line tool
//! with JSON/CSV output.

pub mod cli;
pub mod finite_char;
pub mod growth;
pub mod root_system;
pub mod weyl_char;

pub use finite_char::{CharacterTable, ClassFunctionCombo, Cyclotomic};
pub use growth::GrowthReport;
pub use root_system::{CartanType, RootSystem, Weight};
pub use weyl_char::{Irrep, VirtualCharacter, WeightMultiset};
