//! Quandle colorings of oriented links, quandle module polynomials and
//! two-variable quandle module quiver polynomials.
//!
//! ```
//! use qmq_core::{builtin::builtin_link, coloring::counting_invariant, quandle::Quandle};
//!
//! let q = Quandle::parse("quandle 4\n1 3 4 2\n4 2 1 3\n2 4 3 1\n3 1 2 4\n").unwrap();
//! let link = builtin_link("T(4,2)").unwrap();
//! assert_eq!(counting_invariant(&link, &q), 16);
//! ```

pub mod builtin;
pub mod coloring;
pub mod diagram;
pub mod error;
pub mod exec;
pub mod linalg;
pub mod module;
pub mod poly;
pub mod quandle;
pub mod quiver;
pub mod table;
mod text;

pub use error::{Error, Result};
pub use exec::Execution;
