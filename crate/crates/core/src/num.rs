//! Scalar abstraction for the numerical kernels.
//!
//! All deterministic numerics (spectral analysis, ODE integration, the
//! probability-grid solver, quadrature) are generic over [`Real`]. The crate
//! root exports `f64` aliases, which is what the simulators and the CLI use.

use std::fmt;
use std::iter::Sum;
use std::ops::{AddAssign, DivAssign, MulAssign, SubAssign};

use num_traits::{Float, FromPrimitive};

/// Floating-point scalar: `f32` or `f64`.
pub trait Real:
    Float
    + FromPrimitive
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Sum
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
{
}

impl Real for f32 {}
impl Real for f64 {}

/// Lift an `f64` constant into the working scalar type.
#[inline]
pub(crate) fn r<F: Real>(x: f64) -> F {
    F::from_f64(x).expect("constant not representable in scalar type")
}

/// Lift a `usize` into the working scalar type.
#[inline]
pub(crate) fn ru<F: Real>(x: usize) -> F {
    F::from_usize(x).expect("count not representable in scalar type")
}
