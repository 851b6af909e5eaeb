//! Arithmetic in Q(omega) and the cube-class machinery over Q and K:
//! Eisenstein-integer factorization, S-unit cube bases, the norm-kernel
//! realization of H^1(Q, Z/3), and local cube-class groups at the places
//! of both fields.

pub mod eisenstein;
pub mod localcube;
pub mod sunits;

pub use eisenstein::{eis_factor, prime_above, EisFactorization, EisensteinInt};
pub use localcube::{local_cube_class, InertSpace, QClassSpace, RamifiedSpace, SplitSpace};
pub use sunits::{sunit_cube_basis, BaseField, Generator, SUnitCubeBasis};
