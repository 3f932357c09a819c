use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive};

/// Floating point type the numeric code runs on.
pub trait Scalar: Float + FromPrimitive + Sum + Debug + Display + Send + Sync + 'static {
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal fits the scalar type")
    }

    fn count(n: usize) -> Self {
        Self::from_usize(n).expect("count fits the scalar type")
    }
}

impl<T> Scalar for T where T: Float + FromPrimitive + Sum + Debug + Display + Send + Sync + 'static {}

/// Left-to-right sum; fixed order keeps results bit-reproducible.
pub(crate) fn ordered_sum<F: Scalar>(xs: impl IntoIterator<Item = F>) -> F {
    xs.into_iter().fold(F::zero(), |acc, x| acc + x)
}

pub(crate) fn mean<F: Scalar>(xs: &[F]) -> F {
    ordered_sum(xs.iter().copied()) / F::count(xs.len())
}

/// Sample standard deviation (n - 1 denominator).
pub(crate) fn sample_std<F: Scalar>(xs: &[F]) -> F {
    let m = mean(xs);
    let ss = ordered_sum(xs.iter().map(|&x| (x - m) * (x - m)));
    (ss / F::count(xs.len() - 1)).sqrt()
}
