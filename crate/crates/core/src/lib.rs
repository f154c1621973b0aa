//! Exact enumeration of permutations with no long ascending subsequence and
//! involutions with no long descending subsequence, together with standard
//! Young tableau counting.
//!
//! Everything here is exact: counts are [`num::BigUint`]s, generating-function
//! coefficients are [`num::BigRational`]s, and every counting problem is served
//! by several mutually independent algorithms that can be cross-checked
//! bit-for-bit:
//!
//! - [`oracle`] — brute-force enumeration, the ground truth at small sizes;
//! - [`gentree`] — dynamic programming over generating-tree labels
//!   (catalytic parameters), polynomial memory, reaches n in the hundreds;
//! - [`bessel`] — determinants of Bessel-type power series and explicit
//!   summation formulas;
//! - [`laurent`] — constant-term / monomial extraction from Laurent
//!   polynomial kernels;
//! - [`lambda`] — signed orbit sums evaluated through a coefficient-extraction
//!   operator on iterated Laurent series.
//!
//! The [`routes`] module packages these as named strategies behind a common
//! trait so callers (notably the CLI) can select them at runtime, and
//! [`crosscheck`] runs the full equality matrix between them.

pub mod bessel;
pub mod combinat;
pub mod crosscheck;
pub mod error;
pub mod gentree;
pub mod lambda;
pub mod laurent;
pub mod oracle;
pub mod perm;
pub mod routes;
pub mod series;
pub mod tableaux;

pub use error::Error;
pub use perm::{LabelKind, LabelVector, Permutation};
pub use routes::{CountQuery, Route, RouteRegistry};
