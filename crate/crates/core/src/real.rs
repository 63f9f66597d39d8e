use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, NumAssign, ToPrimitive};

/// Scalar type the numeric routines are generic over: `f32` or `f64`.
pub trait Real:
    Float + FromPrimitive + ToPrimitive + NumAssign + Sum + Debug + Display + Send + Sync + 'static
{
    /// Lossless-enough conversion from `f64` literals and intermediate values.
    fn from_f64_lossy(value: f64) -> Self {
        Self::from_f64(value).expect("f64 converts to every Real")
    }

    /// Conversion from unsigned counts (state counts, resolutions, lengths).
    fn from_count(value: u128) -> Self {
        // u128 may exceed f32/f64 integer precision; go through f64, which
        // rounds rather than fails.
        Self::from_f64_lossy(value as f64)
    }
}

impl<T> Real for T where
    T: Float
        + FromPrimitive
        + ToPrimitive
        + NumAssign
        + Sum
        + Debug
        + Display
        + Send
        + Sync
        + 'static
{
}

/// log_base(x) computed as ln(x)/ln(base).
pub(crate) fn log_in_base<F: Real>(x: F, base: F) -> F {
    x.ln() / base.ln()
}
