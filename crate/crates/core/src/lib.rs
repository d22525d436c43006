//! Exact computation of Jacobian (sandpile) groups and spanning-tree counts
//! for generalized Petersen graphs GP(n, k).
//!
//! Everything runs in exact integer or rational arithmetic: Smith normal
//! forms of Laplacians, cokernels of companion-matrix powers, fraction-free
//! determinants, resultants, and integer linear recurrences. The independent
//! routes cross-check each other, and small anchored cases in
//! [`reference`] pin the expected outputs.
//!
//! ```
//! use gpjac::{jacobian, tau, JacobianMethod, TauMethod};
//!
//! // The Petersen graph GP(5, 2).
//! let group = jacobian(5, 2, JacobianMethod::Auto).unwrap();
//! assert_eq!(group.to_string(), "Z_2 \u{2295} Z_10 \u{2295} Z_10 \u{2295} Z_10");
//! let trees = tau(5, 2, TauMethod::Auto).unwrap();
//! assert_eq!(trees.to_string(), "2000");
//! ```

pub mod error;
pub mod graph;
pub mod jacobian;
pub mod matrix;
pub mod poly;
pub mod quad;
pub mod recurrence;
pub mod reference;
pub mod snf;
pub mod tree;

pub use error::{Error, Result};
pub use graph::{circulant, GpGraph};
pub use jacobian::{
    jacobian, jacobian_via_companion, jacobian_via_laplacian, reduced_shift, JacobianMethod,
};
pub use matrix::IntMatrix;
pub use poly::{
    char_poly, cheb_t, cheb_u, companion_matrix, laplacian_symbol, recurrence_product,
    reduced_symbol, resultant, LaurentPoly,
};
pub use quad::QuadExt;
pub use recurrence::LinearRecurrence;
pub use snf::{cokernel, smith_normal_form, AbelianGroup};
pub use tree::{
    tau, tau_closed, tau_k2_quadratic, tau_k2_recurrence, tau_k3_recurrence, tau_k4_recurrence,
    tau_kirchhoff, tau_prism, tau_resultant, tau_resultant_with_symbol, TauMethod,
};
