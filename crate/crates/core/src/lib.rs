//! Inverse semigroups of left I-quotients on concrete semigroups.
//!
//! The crate builds inverse hulls of left ample semigroups, decides when a
//! subsemigroup is a left I-order (every ambient element is a quotient
//! `a⁻¹b` of members), lifts morphisms from straight left I-orders to their
//! ambient inverse semigroups, assembles strong semilattices, and checks the
//! correspondence between bisimple inverse semigroups and left ample
//! semigroups with Condition (LC).

pub mod algebra;
pub mod assembly;
pub mod chart;
pub mod cli;
pub mod closure;
pub mod enumerate;
pub mod equiv;
pub mod error;
pub mod format;
pub mod hull;
pub mod inverse;
pub mod iorder;
pub mod iso;
pub mod lifting;
pub mod relations;
pub mod symbolic;
pub mod table;

pub use algebra::InverseSemigroup;
pub use chart::PartialBijection;
pub use error::{Error, Result};
pub use inverse::FiniteInverse;
pub use table::{Elem, FiniteSemigroup};
