//! Scalar abstraction shared by the dense linear algebra and the closed forms.

use std::fmt::{Debug, Display, LowerExp};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Real floating-point scalar usable by every numeric routine in the crate.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + LowerExp + Default + Send + Sync + 'static
{
    /// Lossless for the small integers that appear in graph matrices.
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("integer representable in scalar type")
    }

    fn from_real(v: f64) -> Self {
        Self::from_f64(v).expect("f64 representable in scalar type")
    }

    fn ratio(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }

    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// `max(1, |x|)`, the scale used by every relative comparison.
pub fn unit_scale<T: Real>(x: T) -> T {
    x.abs().max(T::one())
}
