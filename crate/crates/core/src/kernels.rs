//! The four separable correlation families and the point types they act on.
//!
//! Every family is a product over dimensions of a one-dimensional profile in
//! the coordinate difference `u`:
//!
//! | family      | profile                                   |
//! |-------------|-------------------------------------------|
//! | `ExpP1`     | `exp(-θ|u|)`                               |
//! | `Matern32`  | `(1 + s) exp(-s)`, `s = √(3θ)|u|`          |
//! | `Matern52`  | `(1 + s + s²/3) exp(-s)`, `s = √(5θ)|u|`   |
//! | `GaussP2`   | `exp(-θu²)`                                |

use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, ImspeError, Result};
use crate::real::Real;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    ExpP1,
    Matern32,
    Matern52,
    GaussP2,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::ExpP1,
        Family::Matern32,
        Family::Matern52,
        Family::GaussP2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::ExpP1 => "exp-p1",
            Family::Matern32 => "matern-3-2",
            Family::Matern52 => "matern-5-2",
            Family::GaussP2 => "gauss-p2",
        }
    }

    /// Power to which a coordinate rescaling factor enters θ.
    pub fn distance_power(self) -> i32 {
        match self {
            Family::ExpP1 => 1,
            _ => 2,
        }
    }

    /// For the exponential-polynomial families, the polynomial `p` and the
    /// rate `σ(θ)` such that the profile is `p(σ|u|) exp(-σ|u|)`.
    pub(crate) fn profile<T: Real>(self, theta: T) -> Option<(Profile<T>, T)> {
        match self {
            Family::ExpP1 => Some((Profile::new(&[T::one()]), theta)),
            Family::Matern32 => Some((
                Profile::new(&[T::one(), T::one()]),
                (T::of(3.0) * theta).sqrt(),
            )),
            Family::Matern52 => Some((
                Profile::new(&[T::one(), T::one(), T::ratio(1, 3)]),
                (T::of(5.0) * theta).sqrt(),
            )),
            Family::GaussP2 => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = ImspeError;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|fam| fam.name() == s)
            .ok_or_else(|| invalid(format!("unknown kernel '{s}'")))
    }
}

/// Polynomial with non-negative coefficients, lowest degree first.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Profile<T> {
    pub(crate) coef: [T; 3],
    pub(crate) len: usize,
}

impl<T: Real> Profile<T> {
    fn new(c: &[T]) -> Self {
        let mut coef = [T::zero(); 3];
        coef[..c.len()].copy_from_slice(c);
        Profile { coef, len: c.len() }
    }

    pub(crate) fn eval(&self, w: T) -> T {
        let mut acc = T::zero();
        for k in (0..self.len).rev() {
            acc = acc * w + self.coef[k];
        }
        acc
    }
}

/// Correlation family together with one positive hyperparameter per dimension.
#[derive(Clone, Debug, PartialEq)]
pub struct KernelSpec {
    family: Family,
    theta: Vec<f64>,
}

impl KernelSpec {
    pub fn new(family: Family, theta: Vec<f64>) -> Result<Self> {
        if theta.is_empty() {
            return Err(invalid("theta must have at least one entry"));
        }
        if let Some(t) = theta.iter().find(|t| !(t.is_finite() && **t > 0.0)) {
            return Err(invalid(format!("theta entries must be finite and > 0, got {t}")));
        }
        Ok(KernelSpec { family, theta })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn theta(&self) -> &[f64] {
        &self.theta
    }

    pub fn dim(&self) -> usize {
        self.theta.len()
    }

    fn check_dim(&self, found: usize) -> Result<()> {
        if found == self.dim() {
            Ok(())
        } else {
            Err(ImspeError::DimensionMismatch {
                expected: self.dim(),
                found,
            })
        }
    }
}

/// A design point in the cube `[-1, 1]^d`.
#[derive(Clone, Debug, PartialEq)]
pub struct Point {
    coords: Vec<f64>,
}

impl Point {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(invalid("a point needs at least one coordinate"));
        }
        if let Some(c) = coords
            .iter()
            .find(|c| !(c.is_finite() && (-1.0..=1.0).contains(*c)))
        {
            return Err(invalid(format!("coordinate {c} is outside [-1, 1]")));
        }
        Ok(Point { coords })
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn negated(&self) -> Point {
        Point {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

/// One-dimensional profile at difference `u`.
pub(crate) fn profile_1d<T: Real>(family: Family, theta: T, u: T) -> T {
    let u = u.abs();
    match family {
        Family::ExpP1 => (-(theta * u)).exp(),
        Family::Matern32 => {
            let s = (T::of(3.0) * theta).sqrt() * u;
            (T::one() + s) * (-s).exp()
        }
        Family::Matern52 => {
            let s = (T::of(5.0) * theta).sqrt() * u;
            (T::one() + s + s * s / T::of(3.0)) * (-s).exp()
        }
        Family::GaussP2 => (-(theta * u * u)).exp(),
    }
}

/// Correlation between two design points; exactly 1 for identical points.
pub fn corr_pair<T: Real>(kernel: &KernelSpec, xi: &Point, xj: &Point) -> Result<T> {
    kernel.check_dim(xi.dim())?;
    kernel.check_dim(xj.dim())?;
    Ok(corr_unchecked(kernel, xi.coords(), xj.coords()))
}

/// Correlation between a design point and a free coordinate vector.
pub fn corr_point<T: Real>(kernel: &KernelSpec, xi: &Point, x: &[f64]) -> Result<T> {
    kernel.check_dim(xi.dim())?;
    kernel.check_dim(x.len())?;
    if let Some(c) = x.iter().find(|c| !c.is_finite()) {
        return Err(invalid(format!("coordinate {c} is not finite")));
    }
    Ok(corr_unchecked(kernel, xi.coords(), x))
}

pub(crate) fn corr_unchecked<T: Real>(kernel: &KernelSpec, a: &[f64], b: &[f64]) -> T {
    if a == b {
        return T::one();
    }
    a.iter()
        .zip(b)
        .zip(kernel.theta())
        .fold(T::one(), |acc, ((&x, &y), &t)| {
            acc * profile_1d(kernel.family(), T::of(t), T::of(x) - T::of(y))
        })
}
