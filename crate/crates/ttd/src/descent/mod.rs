//! The (3,3)-isogeny descent machine.

pub mod padic;
