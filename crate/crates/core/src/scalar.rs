//! Number kernel.
//!
//! Geometry in this crate is written once against [`Scalar`] and instantiated
//! with [`Exact`] (arbitrary-precision rationals) for certification or with
//! `f64`/`f32` for quick numerics. Quantities that need a square root (bare
//! area, circumradius, inradius, Blundon's roots) live in [`Approx`], which is
//! only ever produced by [`lower`] or [`sqrt_approx`].

use std::cmp::Ordering;
use std::fmt::{self, Debug, Display};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{GeometryError, Result};

/// Exact rational scalar used on the certification path.
pub type Exact = BigRational;

/// Field operations plus the conversions the kernel needs.
pub trait Scalar:
    Clone + Debug + Display + PartialOrd + Num + Signed + FromPrimitive + ToPrimitive + Send + Sync
{
    /// Converts an exact rational, rounding when `Self` is a float.
    fn from_exact(q: &Exact) -> Self;

    /// Whether arithmetic in this type is exact.
    const EXACT: bool;

    fn approx(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for Exact {
    const EXACT: bool = true;

    fn from_exact(q: &Exact) -> Self {
        q.clone()
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_exact(q: &Exact) -> Self {
        q.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f32 {
    const EXACT: bool = false;

    fn from_exact(q: &Exact) -> Self {
        q.to_f32().unwrap_or(f32::NAN)
    }
}

/// Small integer constant in any scalar type.
pub(crate) fn int<T: Scalar>(n: i64) -> T {
    T::from_i64(n).expect("small integers are representable")
}

pub(crate) fn ratio<T: Scalar>(n: i64, d: i64) -> T {
    int::<T>(n) / int::<T>(d)
}

pub(crate) fn sq<T: Scalar>(x: &T) -> T {
    x.clone() * x.clone()
}

/// Builds an exact rational `n/d`.
pub fn exact(n: i64, d: i64) -> Exact {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p`, `p/q` or a finite decimal such as `-0.125` into an exact
/// rational. Decimals are converted without rounding.
pub fn parse_rational(text: &str) -> Result<Exact> {
    let err = || GeometryError::Parse(text.to_string());
    let t = text.trim();
    if t.is_empty() {
        return Err(err());
    }
    if let Some((num, den)) = t.split_once('/') {
        let n = BigInt::from_str(num.trim()).map_err(|_| err())?;
        let d = BigInt::from_str(den.trim()).map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((int_part, frac_part)) = t.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        let negative = int_part.starts_with('-');
        let int_digits = int_part.trim_start_matches(['-', '+']);
        if !int_digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        let digits = format!("{int_digits}{frac_part}");
        let mut n = BigInt::from_str(&digits).map_err(|_| err())?;
        if negative {
            n = -n;
        }
        let d = num_traits::pow(BigInt::from(10u8), frac_part.len());
        return Ok(BigRational::new(n, d));
    }
    let n = BigInt::from_str(t).map_err(|_| err())?;
    Ok(BigRational::from_integer(n))
}

/// Tolerance policy for approximate comparisons.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub relative: f64,
    pub absolute: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance { relative: 1e-12, absolute: 1e-14 }
    }
}

impl Tolerance {
    pub fn new(relative: f64, absolute: f64) -> Self {
        Tolerance { relative, absolute }
    }

    /// Allowed deviation when comparing values of magnitude `scale`.
    pub fn slack(&self, scale: f64) -> f64 {
        (self.relative * scale.abs()).max(self.absolute)
    }

    pub fn close(&self, lhs: f64, rhs: f64) -> bool {
        (lhs - rhs).abs() <= self.slack(lhs.abs().max(rhs.abs()))
    }
}

/// Three-valued outcome of a toleranced comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ApproxOrdering {
    Below,
    Within,
    Above,
}

impl ApproxOrdering {
    /// `Below` or `Within`.
    pub fn is_le(self) -> bool {
        self != ApproxOrdering::Above
    }

    pub fn is_ge(self) -> bool {
        self != ApproxOrdering::Below
    }
}

/// Floating approximation tagged with the tolerance that governs it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Approx {
    pub value: f64,
    pub tol: Tolerance,
}

impl Approx {
    pub fn new(value: f64, tol: Tolerance) -> Self {
        Approx { value, tol }
    }

    pub fn compare(&self, other: &Approx) -> ApproxOrdering {
        let tol = if self.tol.relative >= other.tol.relative { self.tol } else { other.tol };
        if tol.close(self.value, other.value) {
            return ApproxOrdering::Within;
        }
        match self.value.partial_cmp(&other.value) {
            Some(Ordering::Less) => ApproxOrdering::Below,
            _ => ApproxOrdering::Above,
        }
    }

    pub fn map(self, f: impl FnOnce(f64) -> f64) -> Approx {
        Approx { value: f(self.value), tol: self.tol }
    }
}

impl Display for Approx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Display::fmt(&self.value, f)
    }
}

/// Lowers an exact rational to a float under the given tolerance policy.
pub fn lower(x: &Exact, tol: Tolerance) -> Approx {
    Approx::new(f64::from_exact(x), tol)
}

/// Square root of a nonnegative exact rational.
pub fn sqrt_approx(x: &Exact, tol: Tolerance) -> Result<Approx> {
    if x.is_negative() {
        return Err(GeometryError::NegativeSqrt(x.to_string()));
    }
    Ok(lower(x, tol).map(f64::sqrt))
}
