//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    /// An operation received input outside its mathematical domain.
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    /// A moduli point has vanishing discriminant factors; the 1-based
    /// indices of the vanishing deltas are listed.
    #[error("degenerate moduli point: delta_{} vanishes", .0.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(", delta_"))]
    Degeneracy(Vec<usize>),

    /// A polynomial expected to be a perfect square is not. Surfaced as a
    /// check outcome, not a crash.
    #[error("polynomial is not a perfect square")]
    NotASquare,

    /// Weil-pairing evaluation hit a vanishing resultant (the two
    /// presentations share support).
    #[error("presentations share support; pairing formula is undefined")]
    SharedSupport,

    /// Both presentations describe the same (up to sign) torsion class.
    #[error("presentations describe the same class; e3(T,T) = 1 by alternation")]
    SameClass,

    /// The cubic radical algebra k[t]/(t^3 - c) requires c != 0.
    #[error("degenerate cubic radical algebra: lambda2/lambda1 = 0")]
    DegenerateAlgebra,

    /// A rational map was evaluated on its indeterminacy locus.
    #[error("indeterminacy: {0} has a vanishing denominator at this point")]
    Indeterminacy(String),

    /// Reduction mod p is invalid (p divides a delta or leading data).
    #[error("bad reduction at {0}")]
    BadReduction(u64),

    /// A Mumford divisor with a repeated x-coordinate was passed where the
    /// Kummer coordinates need distinct ones.
    #[error("unsupported divisor: repeated x-coordinate")]
    UnsupportedDivisor,

    /// Grid certification was asked to run on a grid that does not exceed
    /// the identity's per-variable degree bounds.
    #[error("grid {got:?} does not exceed degree bounds {need:?}")]
    BoundViolation { need: [usize; 3], got: [usize; 3] },

    /// An identity the construction guarantees failed; indicates a bug.
    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    /// A local image search exhausted its widening schedule before the
    /// local-order bound was reached. Carries the place and partial data.
    #[error("inconclusive local image at v = {place}: reached order {got} of bound {bound}")]
    InconclusiveLocalImage { place: u64, got: u64, bound: u64 },

    /// p-adic precision was insufficient and auto-raising hit its cap.
    #[error("insufficient p-adic precision")]
    InsufficientPrecision,

    /// Command-line usage error.
    #[error("usage: {0}")]
    Usage(String),
}
