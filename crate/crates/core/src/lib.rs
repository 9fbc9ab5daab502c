//! Exact computer algebra for binary quadratic regular operads with a
//! splitting of associativity.
//!
//! Presentations, unit actions and their coherence equations, canonical
//! relation spaces, black-square products, Koszul duals, and a truncated
//! free algebra used to check the equations against their definition.
//!
//! ```
//! use operadic::{catalog, solve, Mode, UnitAction};
//!
//! let dend = catalog("dend").unwrap();
//! let set = solve(&dend, Mode::Coherent).unwrap();
//! assert_eq!(set.spanning_points(), vec![UnitAction::from_ints(&[1, 0], &[0, 1])]);
//! ```

mod error;
pub mod exactlin;
pub mod freealg;
pub mod operad;
pub mod transform;
pub mod unit_action;

pub use error::Error;
pub use exactlin::{Matrix, Scalar, Subspace, Vector};
pub use freealg::{oracle, OracleReport, TruncatedFree};
pub use operad::{
    canonical_space, catalog, catalog_names, catalog_with_star, CanonicalKind, OperadPresentation, Presentation,
    RelPair,
};
pub use transform::{black_square, dual, product_action, DualPresentation};
pub use unit_action::{
    adapted_basis, check, classify, solve, ActionClass, ActionSolutionSet, ClassReport, Mode, UnitAction, Verdict,
};
