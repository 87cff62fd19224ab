//! Edge density tests for spatial patterns built on proportional-edge
//! proximity catch digraphs (PCDs).
//!
//! Points `X` in a triangle spanned by markers `Y` define a digraph with an
//! arc `i -> j` whenever `X_j` falls in the proximity region `N(X_i, r)`.
//! The relative edge density of the AND or OR underlying graph is a
//! U-statistic; its exact null mean and variance give tests of complete
//! spatial randomness against segregation and association.
//!
//! ```
//! use pcd_density::closed_form::{mu_null, nu_null};
//! use pcd_density::geom2d::{ProximityParam, Triangle};
//! use pcd_density::patterns::{sample, PatternSpec, RngSeed};
//! use pcd_density::pcd_graph::{build_pcd, Mode};
//!
//! let tri = Triangle::equilateral();
//! let r = ProximityParam::new(2.0)?;
//! let x = sample(&tri, &PatternSpec::Null, 50, RngSeed::new(7, 0))?;
//! let rho = build_pcd(&x, &tri, r)?.densities()?.rho_and;
//! assert!((0.0..=1.0).contains(&rho));
//! assert_eq!(mu_null(Mode::And, r), 11.0 / 24.0);
//! assert!(nu_null(Mode::And, r) > 0.0);
//! # Ok::<(), pcd_density::Error>(())
//! ```

pub mod closed_form;
pub mod error;
pub mod geom2d;
pub mod inference;
pub mod mc_engine;
pub mod multitri;
pub mod normal;
pub mod patterns;
pub mod pcd_graph;

pub use error::{Error, Result};
