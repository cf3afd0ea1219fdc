//! Closed forms of the one-dimensional domain averages of kernel profiles and
//! products of profiles, and their per-dimension products (the entries of R).
//!
//! With `k` a profile, the border integral is `½∫₋₁¹ k(x − a) dx` and the pair
//! integral is `½∫₋₁¹ k(x − a) k(x − b) dx`:
//!
//! | family     | border | pair |
//! |------------|--------|------|
//! | `ExpP1`    | [`i1`] | [`i2`] |
//! | `GaussP2`  | [`i3`] | [`i4`] |
//! | `Matern32` | [`i5`] | [`i6`] |
//! | `Matern52` | [`i7`] | [`i8`] |
//!
//! [`j1`] and [`j2`] are the exponential integrals over the unit interval
//! `[0, 1]` without the ½ factor.
//!
//! Every form is arranged as a sum of non-negative terms built from
//! `exp(−y)` and `−expm1(−y)` with `y ≥ 0`, so it keeps full relative accuracy
//! for θ from 1e-2 to 1e2 and never overflows. The Matérn pair integrals are
//! evaluated piecewise on `[−1, a]`, `[a, b]`, `[b, 1]`: on each piece the
//! integrand is a polynomial with non-negative coefficients times an
//! exponential, integrated through incomplete gamma functions of integer order.

use crate::error::{invalid, Result};
use crate::kernels::{Family, KernelSpec, Point, Profile};
use crate::real::Real;

fn check_theta(theta: f64) -> Result<()> {
    if theta.is_finite() && theta > 0.0 {
        Ok(())
    } else {
        Err(invalid(format!("theta must be finite and > 0, got {theta}")))
    }
}

fn check_pm1(x: f64) -> Result<()> {
    if x.is_finite() && (-1.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(invalid(format!("argument {x} is outside [-1, 1]")))
    }
}

fn check_unit(x: f64) -> Result<()> {
    if x.is_finite() && (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(invalid(format!("argument {x} is outside [0, 1]")))
    }
}

fn ordered<T: Real>(a: T, b: T) -> (T, T) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// `1 − e^{−y}` for `y ≥ 0`.
#[inline]
fn one_minus_exp<T: Real>(y: T) -> T {
    -(-y).exp_m1()
}

// ---------------------------------------------------------------------------
// Exponential family

pub(crate) fn i1_raw<T: Real>(a: T, theta: T) -> T {
    let one = T::one();
    (one_minus_exp(theta * (one + a)) + one_minus_exp(theta * (one - a))) / (T::of(2.0) * theta)
}

pub(crate) fn i2_raw<T: Real>(a: T, b: T, theta: T) -> T {
    let (a, b) = ordered(a, b);
    let one = T::one();
    let two = T::of(2.0);
    let len = b - a;
    let walls = one_minus_exp(two * theta * (one - b)) + one_minus_exp(two * theta * (one + a));
    (-(theta * len)).exp() * (walls / (T::of(4.0) * theta) + len / two)
}

pub(crate) fn j1_raw<T: Real>(a: T, theta: T) -> T {
    (one_minus_exp(theta * a) + one_minus_exp(theta * (T::one() - a))) / theta
}

pub(crate) fn j2_raw<T: Real>(a: T, b: T, theta: T) -> T {
    let (a, b) = ordered(a, b);
    let two = T::of(2.0);
    let len = b - a;
    let walls = one_minus_exp(two * theta * a) + one_minus_exp(two * theta * (T::one() - b));
    (-(theta * len)).exp() * (walls / (two * theta) + len)
}

// ---------------------------------------------------------------------------
// Gaussian family

pub(crate) fn i3_raw<T: Real>(a: T, theta: T) -> T {
    let one = T::one();
    let r = theta.sqrt();
    let pre = (T::pi() / (T::of(16.0) * theta)).sqrt();
    pre * ((r * (one + a)).erf() + (r * (one - a)).erf())
}

pub(crate) fn i4_raw<T: Real>(a: T, b: T, theta: T) -> T {
    let one = T::one();
    let two = T::of(2.0);
    let m = (a + b) / two;
    let d = a - b;
    let r = (two * theta).sqrt();
    let pre = (T::pi() / (T::of(32.0) * theta)).sqrt();
    pre * ((r * (one + m)).erf() + (r * (one - m)).erf()) * (-(theta * d * d / two)).exp()
}

// ---------------------------------------------------------------------------
// Matérn families, border integrals

pub(crate) fn i5_raw<T: Real>(a: T, theta: T) -> T {
    let one = T::one();
    let two = T::of(2.0);
    let s = (T::of(3.0) * theta).sqrt();
    let g = |y: T| two * one_minus_exp(y) - y * (-y).exp();
    (g(s * (one + a)) + g(s * (one - a))) / (two * s)
}

pub(crate) fn i7_raw<T: Real>(a: T, theta: T) -> T {
    let one = T::one();
    let s = (T::of(5.0) * theta).sqrt();
    let h = |y: T| T::of(8.0) * one_minus_exp(y) - (T::of(5.0) * y + y * y) * (-y).exp();
    (h(s * (one + a)) + h(s * (one - a))) / (T::of(6.0) * s)
}

// ---------------------------------------------------------------------------
// Piecewise engine for exponential-polynomial profiles

/// Polynomial of degree ≤ 4, lowest degree first.
#[derive(Clone, Copy, Debug)]
struct Poly<T> {
    c: [T; 5],
    len: usize,
}

impl<T: Real> Poly<T> {
    fn from_profile(p: &Profile<T>) -> Self {
        let mut c = [T::zero(); 5];
        c[..p.len].copy_from_slice(&p.coef[..p.len]);
        Poly { c, len: p.len }
    }

    /// Coefficients of `w ↦ self(w + l)`.
    fn shifted(&self, l: T) -> Self {
        let mut out = [T::zero(); 5];
        for j in 0..self.len {
            // (w + l)^j = Σ_i C(j, i) w^i l^(j−i)
            let mut binom = 1.0;
            for i in 0..=j {
                out[i] += self.c[j] * T::of(binom) * l.powi((j - i) as u32);
                binom = binom * (j - i) as f64 / (i + 1) as f64;
            }
        }
        Poly { c: out, len: self.len }
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out = [T::zero(); 5];
        for i in 0..self.len {
            for j in 0..other.len {
                out[i + j] += self.c[i] * other.c[j];
            }
        }
        Poly {
            c: out,
            len: self.len + other.len - 1,
        }
    }

    fn eval(&self, w: T) -> T {
        let mut acc = T::zero();
        for k in (0..self.len).rev() {
            acc = acc * w + self.c[k];
        }
        acc
    }

    fn derivative(&self) -> Self {
        let mut out = [T::zero(); 5];
        for k in 1..self.len {
            out[k - 1] = self.c[k] * T::of(k as f64);
        }
        Poly {
            c: out,
            len: self.len.saturating_sub(1).max(1),
        }
    }
}

fn factorial(k: usize) -> f64 {
    (1..=k).map(|i| i as f64).product()
}

/// Lower incomplete gamma function γ(k+1, z) for integer k ≥ 0 and z ≥ 0.
fn lower_gamma_int<T: Real>(k: usize, z: T) -> T {
    let zero = T::zero();
    if z <= zero {
        return zero;
    }
    let kf = T::of(factorial(k));
    if z.to_f64() > k as f64 + 1.0 {
        // k! − Γ(k+1, z) with Γ(k+1, z) = k! e^{−z} Σ_{j≤k} z^j / j!
        let mut term = T::one();
        let mut s = T::one();
        for j in 1..=k {
            term = term * z / T::of(j as f64);
            s += term;
        }
        kf * (T::one() - (-z).exp() * s)
    } else {
        // z^{k+1} e^{−z} Σ_m z^m / ((k+1)(k+2)…(k+1+m))
        let a = (k + 1) as f64;
        let mut term = T::one() / T::of(a);
        let mut s = term;
        let mut m = 1.0;
        loop {
            term = term * z / T::of(a + m);
            s += term;
            if term.to_f64() <= T::EPSILON * 0.01 * s.to_f64() {
                break;
            }
            m += 1.0;
        }
        z.powi((k + 1) as u32) * (-z).exp() * s
    }
}

/// `∫₀^W q(w) e^{−λw} dw`.
fn poly_exp_head<T: Real>(q: &Poly<T>, lambda: T, upper: T) -> T {
    let mut acc = T::zero();
    let mut lam_pow = lambda;
    for k in 0..q.len {
        acc += q.c[k] * lower_gamma_int(k, lambda * upper) / lam_pow;
        lam_pow *= lambda;
    }
    acc
}

/// `∫_W^∞ q(w) e^{−λw} dw = e^{−λW} Σ_k q^{(k)}(W) / λ^{k+1}`.
fn poly_exp_tail<T: Real>(q: &Poly<T>, lambda: T, lower: T) -> T {
    let mut acc = T::zero();
    let mut d = *q;
    let mut lam_pow = lambda;
    for _ in 0..q.len {
        acc += d.eval(lower) / lam_pow;
        d = d.derivative();
        lam_pow *= lambda;
    }
    (-(lambda * lower)).exp() * acc
}

/// `∫₀^∞ q(w) e^{−λw} dw`.
fn poly_exp_total<T: Real>(q: &Poly<T>, lambda: T) -> T {
    let mut acc = T::zero();
    let mut lam_pow = lambda;
    for k in 0..q.len {
        acc += q.c[k] * T::of(factorial(k)) / lam_pow;
        lam_pow *= lambda;
    }
    acc
}

/// `∫₀^ℓ p(w) p(ℓ − w) dw` via Beta integrals.
fn middle_piece<T: Real>(p: &Poly<T>, l: T) -> T {
    let mut acc = T::zero();
    for i in 0..p.len {
        for j in 0..p.len {
            let beta = T::of(factorial(i) * factorial(j)) / T::of(factorial(i + j + 1));
            acc += p.c[i] * p.c[j] * beta * l.powi((i + j + 1) as u32);
        }
    }
    acc
}

/// Pair integral `½∫₋₁¹ k(x − a) k(x − b) dx` for `k(u) = p(σ|u|) e^{−σ|u|}`.
pub(crate) fn pair_profile<T: Real>(profile: &Profile<T>, sigma: T, a: T, b: T) -> T {
    let (a, b) = ordered(a, b);
    let one = T::one();
    let two = T::of(2.0);
    let p = Poly::from_profile(profile);
    let l = sigma * (b - a);
    let q = p.mul(&p.shifted(l));
    let outer = poly_exp_head(&q, two, sigma * (one + a)) + poly_exp_head(&q, two, sigma * (one - b));
    (-l).exp() * (outer + middle_piece(&p, l)) / (two * sigma)
}

/// Border integral `½∫₋₁¹ k(x − a) dx` for an exponential-polynomial profile.
#[cfg(test)]
pub(crate) fn border_profile<T: Real>(profile: &Profile<T>, sigma: T, a: T) -> T {
    let one = T::one();
    let p = Poly::from_profile(profile);
    (poly_exp_head(&p, one, sigma * (one + a)) + poly_exp_head(&p, one, sigma * (one - a)))
        / (T::of(2.0) * sigma)
}

// ---------------------------------------------------------------------------
// Tail decomposition
//
// border(a) = c₁ − t₁(1 + a) − t₁(1 − a),  c₁ = ∫₀^∞ k,  t₁(s) = ½∫_s^∞ k
// pair(a, a) = c₂ − t₂(1 + a) − t₂(1 − a), c₂ = ∫₀^∞ k², t₂(s) = ½∫_s^∞ k²

pub(crate) fn border_total<T: Real>(family: Family, theta: T) -> T {
    match family.profile(theta) {
        Some((p, sigma)) => poly_exp_total(&Poly::from_profile(&p), T::one()) / sigma,
        None => (T::pi() / (T::of(4.0) * theta)).sqrt(),
    }
}

pub(crate) fn border_tail<T: Real>(family: Family, theta: T, s: T) -> T {
    match family.profile(theta) {
        Some((p, sigma)) => {
            poly_exp_tail(&Poly::from_profile(&p), T::one(), sigma * s) / (T::of(2.0) * sigma)
        }
        None => (T::pi() / (T::of(16.0) * theta)).sqrt() * (theta.sqrt() * s).erfc(),
    }
}

pub(crate) fn pair_total<T: Real>(family: Family, theta: T) -> T {
    match family.profile(theta) {
        Some((p, sigma)) => {
            let p = Poly::from_profile(&p);
            poly_exp_total(&p.mul(&p), T::of(2.0)) / sigma
        }
        None => (T::pi() / (T::of(8.0) * theta)).sqrt(),
    }
}

pub(crate) fn pair_tail<T: Real>(family: Family, theta: T, s: T) -> T {
    match family.profile(theta) {
        Some((p, sigma)) => {
            let p = Poly::from_profile(&p);
            poly_exp_tail(&p.mul(&p), T::of(2.0), sigma * s) / (T::of(2.0) * sigma)
        }
        None => {
            (T::pi() / (T::of(32.0) * theta)).sqrt() * ((T::of(2.0) * theta).sqrt() * s).erfc()
        }
    }
}

// ---------------------------------------------------------------------------
// Family dispatch

pub(crate) fn border_1d<T: Real>(family: Family, a: T, theta: T) -> T {
    match family {
        Family::ExpP1 => i1_raw(a, theta),
        Family::GaussP2 => i3_raw(a, theta),
        Family::Matern32 => i5_raw(a, theta),
        Family::Matern52 => i7_raw(a, theta),
    }
}

pub(crate) fn pair_1d<T: Real>(family: Family, a: T, b: T, theta: T) -> T {
    match family {
        Family::ExpP1 => i2_raw(a, b, theta),
        Family::GaussP2 => i4_raw(a, b, theta),
        Family::Matern32 | Family::Matern52 => {
            let (p, sigma) = family.profile(theta).expect("Matérn profile");
            pair_profile(&p, sigma, a, b)
        }
    }
}

// ---------------------------------------------------------------------------
// Public surface

macro_rules! border_fn {
    ($(#[$doc:meta])* $name:ident, $raw:ident) => {
        $(#[$doc])*
        pub fn $name<T: Real>(a: f64, theta: f64) -> Result<T> {
            check_pm1(a)?;
            check_theta(theta)?;
            Ok($raw(T::of(a), T::of(theta)))
        }
    };
}

macro_rules! pair_fn {
    ($(#[$doc:meta])* $name:ident, $family:expr) => {
        $(#[$doc])*
        pub fn $name<T: Real>(a: f64, b: f64, theta: f64) -> Result<T> {
            check_pm1(a)?;
            check_pm1(b)?;
            check_theta(theta)?;
            Ok(pair_1d($family, T::of(a), T::of(b), T::of(theta)))
        }
    };
}

border_fn!(
    /// `½∫₋₁¹ e^{−θ|a−x|} dx = (1 − e^{−θ} cosh θa)/θ`.
    i1, i1_raw
);
border_fn!(
    /// `½∫₋₁¹ e^{−θ(a−x)²} dx = √(π/16θ)·[erf(√θ(1+a)) + erf(√θ(1−a))]`.
    i3, i3_raw
);
border_fn!(
    /// Matérn-3/2 border integral, `σ = √(3θ)`:
    /// `(1/2σ){2[(1 − e^{−σ(1+a)}) + (1 − e^{−σ(1−a)})] − σ[(1+a)e^{−σ(1+a)} + (1−a)e^{−σ(1−a)}]}`.
    i5, i5_raw
);
border_fn!(
    /// Matérn-5/2 border integral, `σ = √(5θ)`:
    /// `(1/6σ){8[(1 − e^{−σ(1+a)}) + (1 − e^{−σ(1−a)})] − 5σ[…] − 5θ[(1+a)²e^{−σ(1+a)} + (1−a)²e^{−σ(1−a)}]}`.
    i7, i7_raw
);

pair_fn!(
    /// `½∫₋₁¹ e^{−θ(|a−x|+|b−x|)} dx`, any argument order.
    i2, Family::ExpP1
);
pair_fn!(
    /// `½∫₋₁¹ e^{−θ[(a−x)²+(b−x)²]} dx`, any argument order.
    i4, Family::GaussP2
);
pair_fn!(
    /// Product of two Matérn-3/2 profiles averaged over `[−1, 1]`.
    i6, Family::Matern32
);
pair_fn!(
    /// Product of two Matérn-5/2 profiles averaged over `[−1, 1]`.
    i8, Family::Matern52
);

/// `∫₀¹ e^{−θ|a−x|} dx` for `a ∈ [0, 1]`.
pub fn j1<T: Real>(a: f64, theta: f64) -> Result<T> {
    check_unit(a)?;
    check_theta(theta)?;
    Ok(j1_raw(T::of(a), T::of(theta)))
}

/// `∫₀¹ e^{−θ(|a−x|+|b−x|)} dx` for `a, b ∈ [0, 1]`.
pub fn j2<T: Real>(a: f64, b: f64, theta: f64) -> Result<T> {
    check_unit(a)?;
    check_unit(b)?;
    check_theta(theta)?;
    Ok(j2_raw(T::of(a), T::of(b), T::of(theta)))
}

fn check_kernel_point(kernel: &KernelSpec, x: &Point) -> Result<()> {
    if x.dim() == kernel.dim() {
        Ok(())
    } else {
        Err(crate::error::ImspeError::DimensionMismatch {
            expected: kernel.dim(),
            found: x.dim(),
        })
    }
}

/// `R₀ᵢ`: domain average of the correlation with point `xi`.
pub fn r_border<T: Real>(kernel: &KernelSpec, xi: &Point) -> Result<T> {
    check_kernel_point(kernel, xi)?;
    Ok(r_border_unchecked(kernel, xi.coords()))
}

/// `Rᵢⱼ`: domain average of the product of correlations with `xi` and `xj`.
pub fn r_inner<T: Real>(kernel: &KernelSpec, xi: &Point, xj: &Point) -> Result<T> {
    check_kernel_point(kernel, xi)?;
    check_kernel_point(kernel, xj)?;
    Ok(r_inner_unchecked(kernel, xi.coords(), xj.coords()))
}

pub(crate) fn r_border_unchecked<T: Real>(kernel: &KernelSpec, x: &[f64]) -> T {
    x.iter().zip(kernel.theta()).fold(T::one(), |acc, (&a, &t)| {
        acc * border_1d(kernel.family(), T::of(a), T::of(t))
    })
}

pub(crate) fn r_inner_unchecked<T: Real>(kernel: &KernelSpec, x: &[f64], y: &[f64]) -> T {
    x.iter()
        .zip(y)
        .zip(kernel.theta())
        .fold(T::one(), |acc, ((&a, &b), &t)| {
            acc * pair_1d(kernel.family(), T::of(a), T::of(b), T::of(t))
        })
}

fn check_unit_point(theta: &[f64], x: &[f64]) -> Result<()> {
    if theta.len() != x.len() {
        return Err(crate::error::ImspeError::DimensionMismatch {
            expected: theta.len(),
            found: x.len(),
        });
    }
    theta.iter().try_for_each(|&t| check_theta(t))?;
    x.iter().try_for_each(|&c| check_unit(c))
}

/// Exponential-kernel border element on the unit cube `[0, 1]^d`.
pub fn j_border<T: Real>(theta: &[f64], xi: &[f64]) -> Result<T> {
    check_unit_point(theta, xi)?;
    Ok(xi
        .iter()
        .zip(theta)
        .fold(T::one(), |acc, (&a, &t)| acc * j1_raw(T::of(a), T::of(t))))
}

/// Exponential-kernel inner element on the unit cube `[0, 1]^d`.
pub fn j_inner<T: Real>(theta: &[f64], xi: &[f64], xj: &[f64]) -> Result<T> {
    check_unit_point(theta, xi)?;
    check_unit_point(theta, xj)?;
    Ok(xi
        .iter()
        .zip(xj)
        .zip(theta)
        .fold(T::one(), |acc, ((&a, &b), &t)| {
            acc * j2_raw(T::of(a), T::of(b), T::of(t))
        }))
}
