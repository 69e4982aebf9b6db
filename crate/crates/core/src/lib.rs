//! Exact computations with symbolic powers of the prime ideals of the
//! monomial space curves `(t^d, t^(d+m), t^(d+2m))`, `d = 2q + 1`.

pub mod curve;
pub mod groebner;
pub mod invariants;
pub mod monomial;
pub mod regularity;
pub mod ring;

pub use curve::{make_curve, CurveError, CurveIdeal, CurveParams};
pub use groebner::{GroebnerBasis, Ideal, IdealError};
pub use invariants::{InvariantError, InvariantReport};
pub use monomial::{HBResolution, MonomialIdeal2};
pub use ring::{Monomial, Polynomial, Rational, Ring, RingError, Weights};
