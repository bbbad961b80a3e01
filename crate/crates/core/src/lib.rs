//! Classification of real square matrices as generalized oscillatory (GO),
//! generalized even oscillatory (GEO) or generalized odd oscillatory (GOO).
//!
//! A matrix is certified GO when every compound matrix `A^(j)`, `j = 1..n`,
//! is J-sign-symmetric primitive: similar, through a ±1 diagonal matrix, to a
//! primitive nonnegative matrix. GEO needs this only for even `j`, GOO only
//! for odd `j`. Each certificate predicts a spectral shape, which
//! [`classify`] checks against the computed eigenvalues.
//!
//! ```
//! use genosc_core::{classify, Label, Matrix};
//!
//! let a = Matrix::from_rows(&[[4.0, -6.8, 4.4], [-1.2, 6.3, -1.1], [1.8, -2.6, 3.4]]).unwrap();
//! let report = classify(&a, 1e-9, 1e-6).unwrap();
//! assert_eq!(report.label, Label::Go);
//! assert!(report.spectrum_confirms_label());
//! ```

mod eigen;
pub mod classify;
pub mod error;
pub mod matrix;
pub mod primitivity;
pub mod sign;
pub mod spectra;

pub use classify::{
    analyze_order, classify, classify_with, search_examples, search_examples_with_reports,
    ClassificationReport, ClassifyOptions, Label, OrderAnalysis, Tolerances, DEFAULT_MAX_DIM,
    DEFAULT_TAU,
};
pub use error::{Error, Result};
pub use matrix::{binomial, compound, minor, CombIndex, CompoundMatrix, Matrix};
pub use primitivity::{bool_pow_reaches_all, is_jss_primitive, is_primitive, BoolMatrix, JssVerdict};
pub use sign::{apply_diag_similarity, find_j, find_j_strict, sign_pattern, JPartition, Sign, SignPattern};
pub use spectra::{
    eigenvalues, kronecker_products, ratio_chain, verify, verify_geo, verify_go, verify_goo,
    SpectralShape, SpectralVerdict, Spectrum, DEFAULT_SPECTRAL_TOL,
};

pub use num_complex::Complex64;
