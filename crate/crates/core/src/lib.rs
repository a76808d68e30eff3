//! Depth, maximal depth and local cohomology of monomial quotients `S/I`.
//!
//! Squarefree ideals are handled through their Stanley–Reisner complexes;
//! general monomial ideals through colon search, irreducible decomposition
//! and polarization. All homology is computed exactly over `QQ` or `GF(p)`.

pub mod cli;
pub mod complex;
pub mod error;
pub mod filtration;
pub mod ideal;
pub mod invariants;
pub mod linalg;
pub mod parse;
pub mod random;
pub mod regress;
pub mod report;
pub mod ring;
pub mod varset;

pub use complex::SimplicialComplex;
pub use error::{Error, Result};
pub use filtration::{DepthInterval, DimensionFiltration};
pub use ideal::{Monomial, MonomialIdeal, PrimeSupport};
pub use invariants::{HochsterTable, ModuleProfile};
pub use ring::{FieldSpec, RingDescriptor};
pub use varset::VarSet;
