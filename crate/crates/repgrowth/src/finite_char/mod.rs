//! Exact character-table arithmetic for finite groups: cyclotomic values,
//! validated tables (built-in `PSL₂(q)` and extraspecial groups, plus JSON
//! ingestion), product decomposition, Plancherel measures, multiplicity
//! sums and covering numbers.

pub mod builtin;
pub mod combo;
pub mod cyclotomic;
pub mod table;

pub use builtin::{builtin, extraspecial, psl2, sl2};
pub use combo::{random_combo, Bound1Report, ClassFunctionCombo};
pub use cyclotomic::{euler_phi, Cyclotomic, CyclotomicError};
pub use table::{CharacterTable, ConjugacyClass, TableError};
