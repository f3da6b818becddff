//! Exact computations for sequences of linear forms over a field.
//!
//! Given a configuration `α_1, .., α_n` of linear forms, the crate computes
//! the space spanned by all products `α_S`, graded by degree and split by the
//! flat spanned by the complementary forms, and relates its dimensions to the
//! Tutte polynomial of the configuration's matroid. The Tutte polynomial is
//! computed three independent ways. See the `examples/` directory for one
//! runnable program per capability.

pub mod cli;
pub mod config;
pub mod corpus;
pub mod error;
pub mod exactalg;
pub mod fixtures;
pub mod matroid;
pub mod poly;
pub mod pspace;
pub mod recip;
pub mod spanning;
pub mod subset;
pub mod suite;
pub mod tutte;

pub use config::{parse_config, AnyConfig, ConfigFile, VectorConfig};
pub use error::{Error, Result};
pub use exactalg::{Field, FieldSpec, PrimeField, Rationals};
pub use matroid::{ElementStatus, FlatLattice, Matroid};
pub use poly::{BivariatePoly, PowerSeries, UniPoly};
pub use subset::Subset;
