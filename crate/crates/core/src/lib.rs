//! Exact enumeration of L- and L′-tableaux, the bijections between them and
//! words, and Schubert-calculus oracles computed by the iterated Pieri rule.
//!
//! Diagrams use the French convention: row 1 is the bottom row, and every
//! box coordinate is 1-based `(row, col)`.

pub mod error;
pub mod grid;
pub mod json;
pub mod lprime;
pub mod ltab;
pub mod pieri;
pub mod render;
pub mod rsk;
pub mod shapes;
pub mod tableau;
pub mod verify;

pub use error::{Error, Result};
pub use grid::{Cell, Grid};
pub use json::GridTableau;
pub use lprime::{LPrimeTableau, Sign};
pub use ltab::{BlueTableau, LTableau, PurpleTableau, RedTableau};
pub use pieri::{GrassmannianCtx, PieriFactor, SchurExpansion};
pub use rsk::{RskPair, Word};
pub use shapes::{Bounds, BoxCoord, Partition, SkewShape, StripKind};
pub use tableau::{Content, Filling, FillingKind, Orientation};
