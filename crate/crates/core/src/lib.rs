//! Toric-Newton resolution of special pencils `p - T x^c U`, dicritical
//! divisors, atypical values and weighted Hensel lifting.

pub mod algebra;
pub mod atypical;
pub mod hensel;
pub mod infinity;
pub mod pencil;
pub mod polygon;
pub mod resolver;

pub use algebra::{BiPoly, Field, FieldElement, KPoly, RatFunc};
pub use atypical::{aggregate_report, extremality_flags, PencilReport};
pub use pencil::{make_pencil, SpecialPencil};
pub use resolver::{degree_identity, resolve, ResolutionTree, ResolveOptions};
pub use infinity::{extremal_family, infinity_report, InfinityReport};
