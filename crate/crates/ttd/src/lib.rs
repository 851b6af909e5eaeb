//! Exact-arithmetic toolkit for genus-2 curves whose Jacobians carry a
//! maximal isotropic (Z/3)^2 in their 3-torsion.
//!
//! The crate builds the three-parameter family of such curves, computes
//! Weil pairings and isotropy certificates, constructs the (3,3)-isogenous
//! partner curve together with all of its structural identities, verifies
//! everything over finite fields, and computes the two isogeny Selmer
//! groups over Q by explicit local-image descent. A CLI (`ttd`) exposes
//! every stage with reproducible JSON certificates.

pub mod cubic_algebra;
pub mod descent;
pub mod error;
pub mod f3;
pub mod family;
pub mod ffverify;
pub mod field;
pub mod igusa;
pub mod isogeny;
pub mod json;
pub mod matrix;
pub mod moduli;
pub mod numberfields;
pub mod pairing;
pub mod poly;

pub mod cli;

pub use error::{Error, Result};
