//! Scalar abstraction for the floating-point parts of the crate.
//!
//! Pixel arithmetic is always integral; only energies, feature vectors and the
//! linear discriminant are generic over the real type.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, NumAssign};

/// Real scalar usable for band energies, features and classifier math.
pub trait Real:
    Float + FromPrimitive + NumAssign + Sum + Debug + Display + Send + Sync + 'static
{
    /// Lossy conversion from a count or ratio.
    fn of(v: f64) -> Self {
        Self::from_f64(v).expect("f64 is representable in every Real")
    }

    fn from_count(n: u64) -> Self {
        Self::from_u64(n).expect("counts are representable in every Real")
    }
}

impl Real for f32 {}
impl Real for f64 {}
