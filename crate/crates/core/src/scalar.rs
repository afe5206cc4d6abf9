use std::fmt::{Debug, Display};

use num_traits::{FromPrimitive, Num, Signed};

/// Coefficient ring for every linear combination in the crate.
///
/// Any signed numeric type works: `BigRational` and `Rational64` give exact
/// arithmetic, `i64` works for the division-free kernels, and `f64` is
/// accepted for quick experiments. Series division and kernel computations
/// need a field.
pub trait Scalar: Num + Signed + Clone + PartialEq + Debug + Display + Send + Sync + 'static {
    fn from_int(n: i64) -> Self;
}

impl<T> Scalar for T
where
    T: Num + Signed + Clone + PartialEq + Debug + Display + FromPrimitive + Send + Sync + 'static,
{
    fn from_int(n: i64) -> Self {
        T::from_i64(n).expect("scalar type cannot represent a small integer")
    }
}
