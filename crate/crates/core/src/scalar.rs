//! Scalar abstraction for the quantities that are not integers: discharging
//! charges and the odd-set density bound. Exact work uses `Rational64`;
//! `f64`/`f32` are accepted for quick, approximate reports.

use std::fmt::Debug;
use std::iter::Sum;

use num_rational::Ratio;
use num_traits::{Num, Signed};

pub trait Scalar: Num + Signed + Copy + PartialOrd + Debug + Sum + Send + Sync + 'static {
    /// `num / den`; `den` must be non-zero.
    fn ratio(num: i64, den: i64) -> Self;

    fn int(v: i64) -> Self {
        Self::ratio(v, 1)
    }

    /// Lossy view used for JSON output.
    fn to_f64(self) -> f64;

    /// Human-readable form: `p/q` for exact values.
    fn render(self) -> String {
        format!("{}", self.to_f64())
    }
}

impl Scalar for Ratio<i64> {
    fn ratio(num: i64, den: i64) -> Self {
        Ratio::new(num, den)
    }

    fn to_f64(self) -> f64 {
        *self.numer() as f64 / *self.denom() as f64
    }

    fn render(self) -> String {
        self.to_string()
    }
}

impl Scalar for f64 {
    fn ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }

    fn to_f64(self) -> f64 {
        self
    }
}

impl Scalar for f32 {
    fn ratio(num: i64, den: i64) -> Self {
        num as f32 / den as f32
    }

    fn to_f64(self) -> f64 {
        self as f64
    }
}

