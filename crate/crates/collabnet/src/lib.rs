//! Toolkit for attributed, geolocated research-collaboration networks.
//!
//! The crate builds information, trust, and co-authorship layers over a
//! researcher roster and provides the quantitative machinery used to study
//! them: descriptive metrics and Freeman centralization, E-I homophily with
//! permutation normalization, dyadic logistic regression of tie formation on
//! geographic and attribute distance, random-walk community detection, and
//! permutation tests for distance and border effects. Synthetic generators
//! provide ground truth for every estimator.

pub mod communities;
pub mod error;
pub mod geo;
pub mod homophily;
pub mod ingest;
pub mod metrics;
pub mod model;
pub mod permtest;
pub mod reference;
pub mod regress;
pub mod synth;

pub use error::{Error, ErrorCategory, Result};
pub use model::{
    Attribute, DegreeMode, Edge, Education, Layer, Location, Network, Researcher, Roster,
};
