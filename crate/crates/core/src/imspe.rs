//! Designs, the bordered matrices L and R, and IMSPE = 1 − tr(L⁻¹R).
//!
//! Also the closed forms for one and two points in one dimension, the
//! "excess" forms used as optimisation objectives, and the rescaling of a
//! problem between intervals.

use crate::error::{invalid, ImspeError, Result};
use crate::integrals::{
    border_1d, border_tail, border_total, i1_raw, i2_raw, j1_raw, j2_raw, pair_1d, pair_tail,
    pair_total, r_border_unchecked, r_inner_unchecked,
};
use crate::kernels::{corr_unchecked, profile_1d, Family, KernelSpec, Point};
use crate::linalg::{BorderedSolver, Matrix};
use crate::real::Real;

/// Largest accepted `cond(L)·ε`; beyond it the solve is reported as failed.
pub const MAX_CONDITION_ERROR: f64 = 1e-6;

/// An ordered list of points of a common dimension.
#[derive(Clone, Debug, PartialEq)]
pub struct Design {
    d: usize,
    points: Vec<Point>,
    strict: bool,
}

impl Design {
    /// A strict design: all points pairwise distinct.
    pub fn new(points: Vec<Point>) -> Result<Self> {
        let design = Design::relaxed(points)?;
        if let Some((i, j)) = design.coincident_pair() {
            return Err(ImspeError::CoincidentPoints { i, j });
        }
        Ok(Design {
            strict: true,
            ..design
        })
    }

    /// A design that may contain coincident points.
    pub fn relaxed(points: Vec<Point>) -> Result<Self> {
        let Some(first) = points.first() else {
            return Err(invalid("a design needs at least one point"));
        };
        let d = first.dim();
        if let Some(p) = points.iter().find(|p| p.dim() != d) {
            return Err(ImspeError::DimensionMismatch {
                expected: d,
                found: p.dim(),
            });
        }
        Ok(Design {
            d,
            points,
            strict: false,
        })
    }

    /// Strict design from a flat coordinate list, `d` coordinates per point.
    pub fn from_flat(d: usize, coords: &[f64]) -> Result<Self> {
        Design::new(Self::split_flat(d, coords)?)
    }

    /// Relaxed design from a flat coordinate list.
    pub fn relaxed_from_flat(d: usize, coords: &[f64]) -> Result<Self> {
        Design::relaxed(Self::split_flat(d, coords)?)
    }

    fn split_flat(d: usize, coords: &[f64]) -> Result<Vec<Point>> {
        if d == 0 || coords.is_empty() || coords.len() % d != 0 {
            return Err(invalid(format!(
                "{} coordinates cannot be split into points of dimension {d}",
                coords.len()
            )));
        }
        coords.chunks(d).map(|c| Point::new(c.to_vec())).collect()
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn is_strict(&self) -> bool {
        self.strict
    }

    /// First pair of exactly coincident points.
    pub fn coincident_pair(&self) -> Option<(usize, usize)> {
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                if self.points[i] == self.points[j] {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Smallest pairwise Euclidean distance (∞ for one point).
    pub fn min_separation(&self) -> f64 {
        let mut best = f64::INFINITY;
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                let d2: f64 = self.points[i]
                    .coords()
                    .iter()
                    .zip(self.points[j].coords())
                    .map(|(a, b)| (a - b) * (a - b))
                    .sum();
                best = best.min(d2.sqrt());
            }
        }
        best
    }

    pub fn negated(&self) -> Design {
        Design {
            d: self.d,
            points: self.points.iter().map(Point::negated).collect(),
            strict: self.strict,
        }
    }

    pub(crate) fn check_kernel(&self, kernel: &KernelSpec) -> Result<()> {
        if self.d == kernel.dim() {
            Ok(())
        } else {
            Err(ImspeError::DimensionMismatch {
                expected: kernel.dim(),
                found: self.d,
            })
        }
    }
}

/// L, R and the resulting IMSPE, with the estimated condition number of L.
#[derive(Clone, Debug)]
pub struct ImspeMatrices<T> {
    pub l: Matrix<T>,
    pub r: Matrix<T>,
    pub imspe: T,
    pub condition: f64,
}

pub(crate) fn assemble_l<T: Real>(kernel: &KernelSpec, design: &Design) -> Matrix<T> {
    let pts = design.points();
    let n = pts.len();
    let mut l = Matrix::zeros(n + 1);
    for i in 1..=n {
        l.set(0, i, T::one());
        l.set(i, 0, T::one());
        l.set(i, i, T::one());
        for j in i + 1..=n {
            let v = corr_unchecked(kernel, pts[i - 1].coords(), pts[j - 1].coords());
            l.set(i, j, v);
            l.set(j, i, v);
        }
    }
    l
}

pub(crate) fn assemble_r<T: Real>(kernel: &KernelSpec, design: &Design) -> Matrix<T> {
    let pts = design.points();
    let n = pts.len();
    let mut r = Matrix::zeros(n + 1);
    r.set(0, 0, T::one());
    for i in 1..=n {
        let b = r_border_unchecked(kernel, pts[i - 1].coords());
        r.set(0, i, b);
        r.set(i, 0, b);
        for j in i..=n {
            let v = r_inner_unchecked(kernel, pts[i - 1].coords(), pts[j - 1].coords());
            r.set(i, j, v);
            r.set(j, i, v);
        }
    }
    r
}

/// `tr(L⁻¹R)` and the estimated `cond₁(L)`.
pub(crate) fn solve_trace<T: Real>(l: &Matrix<T>, r: &Matrix<T>) -> Result<(T, f64)> {
    let Some(solver) = BorderedSolver::new(l) else {
        return Err(ImspeError::IllConditioned {
            condition: f64::INFINITY,
        });
    };
    let condition = l.norm1().to_f64() * solver.inverse_norm1_estimate();
    if !(condition * T::EPSILON <= MAX_CONDITION_ERROR) {
        return Err(ImspeError::IllConditioned { condition });
    }
    Ok((solver.trace_product(r), condition))
}

/// Builds L and R and evaluates IMSPE through a bordered symmetric solve.
pub fn build_matrices<T: Real>(kernel: &KernelSpec, design: &Design) -> Result<ImspeMatrices<T>> {
    design.check_kernel(kernel)?;
    if let Some((i, j)) = design.coincident_pair() {
        return Err(ImspeError::CoincidentPoints { i, j });
    }
    let l = assemble_l(kernel, design);
    let r = assemble_r(kernel, design);
    let (trace, condition) = solve_trace(&l, &r)?;
    Ok(ImspeMatrices {
        l,
        r,
        imspe: T::one() - trace,
        condition,
    })
}

/// IMSPE of a design.
pub fn evaluate<T: Real>(kernel: &KernelSpec, design: &Design) -> Result<T> {
    build_matrices(kernel, design).map(|m| m.imspe)
}

fn check_theta(theta: f64) -> Result<()> {
    if theta.is_finite() && theta > 0.0 {
        Ok(())
    } else {
        Err(invalid(format!("theta must be finite and > 0, got {theta}")))
    }
}

fn check_coord(x: f64) -> Result<()> {
    if x.is_finite() && (-1.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(invalid(format!("coordinate {x} is outside [-1, 1]")))
    }
}

/// One point in one dimension: `2(1 − R₀₁)`.
pub fn imspe_closed_n1<T: Real>(family: Family, theta: f64, x1: f64) -> Result<T> {
    check_theta(theta)?;
    check_coord(x1)?;
    Ok(T::of(2.0) * (T::one() - border_1d(family, T::of(x1), T::of(theta))))
}

/// Two points, exponential kernel, customary variables:
///
/// ```text
/// (3 + V)/2 + [e^{−θΔ} − e^{−2θ}cosh θ(x₁+x₂) + θΔe^{−θΔ}] / [2θ(1 − V)]
///   − Σᵢ { (1 − e^{−θ}cosh θxᵢ)/θ + (1 − e^{−2θ}cosh 2θxᵢ) / [4θ(1 − V)] }
/// ```
///
/// with `Δ = |x₁ − x₂|`, `V = e^{−θΔ}`.
pub fn imspe_closed_n2_exp<T: Real>(theta: f64, x1: f64, x2: f64) -> Result<T> {
    check_theta(theta)?;
    check_coord(x1)?;
    check_coord(x2)?;
    if x1 == x2 {
        return Err(ImspeError::TwinPoint { x: x1 });
    }
    let (t, a, b) = (T::of(theta), T::of(x1), T::of(x2));
    let two = T::of(2.0);
    let gap = (a - b).abs();
    let v = (-(t * gap)).exp();
    let omv = -(-(t * gap)).exp_m1();
    let cross = i2_raw(a, b, t) / omv;
    let own = |x: T| i1_raw(x, t) + i2_raw(x, x, t) / (two * omv);
    Ok((T::of(3.0) + v) / two + cross - own(a) - own(b))
}

/// Two points in one dimension, any family.
///
/// The exponential family uses [`imspe_closed_n2_exp`]; the others go through
/// the 3×3 bordered solve.
pub fn imspe_n2<T: Real>(family: Family, theta: f64, x1: f64, x2: f64) -> Result<T> {
    check_theta(theta)?;
    check_coord(x1)?;
    check_coord(x2)?;
    if x1 == x2 {
        return Err(ImspeError::TwinPoint { x: x1 });
    }
    match family {
        Family::ExpP1 => imspe_closed_n2_exp(theta, x1, x2),
        _ => {
            let kernel = KernelSpec::new(family, vec![theta])?;
            let design = Design::from_flat(1, &[x1, x2])?;
            evaluate(&kernel, &design)
        }
    }
}

/// Two points in one dimension through the explicit 3×3 inverse
///
/// ```text
/// L⁻¹ = ½ | −(1+V)   1          1        |
///         |  1       1/(1−V)   −1/(1−V)  |
///         |  1      −1/(1−V)    1/(1−V)  |
/// ```
///
/// and the element-by-element trace `Σᵢⱼ (L⁻¹)ᵢⱼ Rᵢⱼ`.
pub fn imspe_n2_block<T: Real>(family: Family, theta: f64, x1: f64, x2: f64) -> Result<T> {
    check_theta(theta)?;
    check_coord(x1)?;
    check_coord(x2)?;
    if x1 == x2 {
        return Err(ImspeError::TwinPoint { x: x1 });
    }
    let (t, a, b) = (T::of(theta), T::of(x1), T::of(x2));
    let half = T::ratio(1, 2);
    let v = profile_1d(family, t, a - b);
    let w = T::one() / one_minus_corr_1d(family, t, a - b);
    let inv = Matrix::from_fn(3, |i, j| match (i, j) {
        (0, 0) => -(T::one() + v) * half,
        (0, _) | (_, 0) => half,
        (i, j) if i == j => w * half,
        _ => -w * half,
    });
    let x = [a, b];
    let r = Matrix::from_fn(3, |i, j| match (i, j) {
        (0, 0) => T::one(),
        (0, k) | (k, 0) => border_1d(family, x[k - 1], t),
        (i, j) => pair_1d(family, x[i - 1], x[j - 1], t),
    });
    Ok(T::one() - crate::linalg::elementwise_product_sum(&inv, &r))
}

/// `1 − k(u)` without cancellation for small `u`.
pub(crate) fn one_minus_corr_1d<T: Real>(family: Family, theta: T, u: T) -> T {
    let u = u.abs();
    match family {
        Family::ExpP1 => -(-(theta * u)).exp_m1(),
        Family::GaussP2 => -(-(theta * u * u)).exp_m1(),
        Family::Matern32 | Family::Matern52 => {
            let (p, sigma) = family.profile(theta).expect("Matérn profile");
            let s = sigma * u;
            if s.to_f64() > 0.5 {
                return T::one() - p.eval(s) * (-s).exp();
            }
            // 1 − p(s)e^{−s} = −Σ_{k≥1} s^k Σ_j p_j (−1)^{k−j}/(k−j)!
            let mut acc = T::zero();
            let mut s_pow = T::one();
            for k in 1..60usize {
                s_pow *= s;
                let mut c = T::zero();
                for j in 0..p.len.min(k + 1) {
                    let m = k - j;
                    let inv_fact = T::one() / T::of((1..=m).map(|i| i as f64).product::<f64>());
                    let sign = if m % 2 == 0 { T::one() } else { -T::one() };
                    c += p.coef[j] * sign * inv_fact;
                }
                let term = -c * s_pow;
                acc += term;
                if k > 4 && term.abs().to_f64() <= T::EPSILON * 1e-3 * acc.abs().to_f64() {
                    break;
                }
            }
            acc
        }
    }
}

/// IMSPE of one point at `x` minus the constant `2 − 2c₁` (c₁ = ∫₀^∞ k):
/// `2[t₁(1 + x) + t₁(1 − x)]` with `t₁(s) = ½∫_s^∞ k`.
///
/// Accurate to full relative precision even where IMSPE itself is flat to
/// machine precision, e.g. large θ.
pub fn n1_excess<T: Real>(family: Family, theta: f64, x: f64) -> T {
    let (t, x) = (T::of(theta), T::of(x));
    T::of(2.0) * (border_tail(family, t, T::one() + x) + border_tail(family, t, T::one() - x))
}

/// The constant `2 − 2c₁` so that IMSPE = baseline + [`n1_excess`].
pub fn n1_baseline<T: Real>(family: Family, theta: f64) -> T {
    T::of(2.0) - T::of(2.0) * border_total(family, T::of(theta))
}

/// IMSPE of two points in one dimension minus `3/2 − 2c₁ − c₂`:
///
/// ```text
/// V/2 + Σᵢ t₁ᵢ − c₂V/(1−V) + Σᵢ t₂ᵢ / (2(1−V)) + R₁₂/(1−V)
/// ```
///
/// where `t₁ᵢ, t₂ᵢ` are the boundary tails of the border and diagonal
/// integrals at `xᵢ`. Every term decays with distance to the boundary or
/// between the points, so the sum keeps relative accuracy at large θ.
pub fn n2_excess<T: Real>(family: Family, theta: f64, x1: f64, x2: f64) -> T {
    let (t, a, b) = (T::of(theta), T::of(x1), T::of(x2));
    let one = T::one();
    let two = T::of(2.0);
    let v = profile_1d(family, t, a - b);
    let omv = one_minus_corr_1d(family, t, a - b);
    let t1 = |x: T| border_tail(family, t, one + x) + border_tail(family, t, one - x);
    let t2 = |x: T| pair_tail(family, t, one + x) + pair_tail(family, t, one - x);
    let c2 = pair_total(family, t);
    v / two + t1(a) + t1(b) + ((t2(a) + t2(b)) / two + pair_1d(family, a, b, t) - c2 * v) / omv
}

/// The constant `3/2 − 2c₁ − c₂` so that IMSPE = baseline + [`n2_excess`].
pub fn n2_baseline<T: Real>(family: Family, theta: f64) -> T {
    let t = T::of(theta);
    T::ratio(3, 2) - T::of(2.0) * border_total(family, t) - pair_total(family, t)
}

/// A closed interval `[lo, hi]` with `lo < hi`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if lo.is_finite() && hi.is_finite() && lo < hi {
            Ok(Interval { lo, hi })
        } else {
            Err(invalid(format!("interval [{lo}, {hi}] is empty or not finite")))
        }
    }

    pub fn symmetric() -> Self {
        Interval { lo: -1.0, hi: 1.0 }
    }

    pub fn unit() -> Self {
        Interval { lo: 0.0, hi: 1.0 }
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn len(&self) -> f64 {
        self.hi - self.lo
    }
}

/// Rescales `(θ, x)` from one interval to another so that IMSPE is
/// unchanged, for a kernel depending on `θ|Δ|`: `θ' = θ·len(from)/len(to)`
/// and `x'` the affine image of `x`.
pub fn domain_transform(theta: f64, x: f64, from: Interval, to: Interval) -> Result<(f64, f64)> {
    domain_transform_for(Family::ExpP1, theta, x, from, to)
}

/// As [`domain_transform`], with θ scaled by `(len(from)/len(to))^p` where `p`
/// is the power of the distance the family's θ multiplies (1 for `ExpP1`,
/// 2 for the others).
pub fn domain_transform_for(
    family: Family,
    theta: f64,
    x: f64,
    from: Interval,
    to: Interval,
) -> Result<(f64, f64)> {
    check_theta(theta)?;
    if !x.is_finite() {
        return Err(invalid("coordinate must be finite"));
    }
    if from == to {
        return Ok((theta, x));
    }
    let ratio = from.len() / to.len();
    let theta_new = theta * ratio.powi(family.distance_power());
    let x_new = to.lo + (x - from.lo) * (to.len() / from.len());
    Ok((theta_new, x_new))
}

/// IMSPE of an exponential-kernel design on the unit cube `[0, 1]^d`.
pub fn evaluate_unit_domain<T: Real>(theta: &[f64], points: &[Vec<f64>]) -> Result<T> {
    let n = points.len();
    if n == 0 {
        return Err(invalid("a design needs at least one point"));
    }
    let kernel = KernelSpec::new(Family::ExpP1, theta.to_vec())?;
    for p in points {
        if p.len() != theta.len() {
            return Err(ImspeError::DimensionMismatch {
                expected: theta.len(),
                found: p.len(),
            });
        }
        if let Some(c) = p.iter().find(|c| !(c.is_finite() && (0.0..=1.0).contains(*c))) {
            return Err(invalid(format!("coordinate {c} is outside [0, 1]")));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            if points[i] == points[j] {
                return Err(ImspeError::CoincidentPoints { i, j });
            }
        }
    }
    let mut l = Matrix::zeros(n + 1);
    let mut r = Matrix::zeros(n + 1);
    r.set(0, 0, T::one());
    for i in 1..=n {
        l.set(0, i, T::one());
        l.set(i, 0, T::one());
        let b = points[i - 1]
            .iter()
            .zip(theta)
            .fold(T::one(), |acc, (&a, &t)| acc * j1_raw(T::of(a), T::of(t)));
        r.set(0, i, b);
        r.set(i, 0, b);
        for j in i..=n {
            let c = corr_unchecked(&kernel, &points[i - 1], &points[j - 1]);
            l.set(i, j, c);
            l.set(j, i, c);
            let v = points[i - 1]
                .iter()
                .zip(&points[j - 1])
                .zip(theta)
                .fold(T::one(), |acc, ((&a, &b), &t)| {
                    acc * j2_raw(T::of(a), T::of(b), T::of(t))
                });
            r.set(i, j, v);
            r.set(j, i, v);
        }
    }
    let (trace, _) = solve_trace(&l, &r)?;
    Ok(T::one() - trace)
}
