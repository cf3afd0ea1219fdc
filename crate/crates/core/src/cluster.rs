//! Two points in one dimension written as a pair centre `x_t` and a signed
//! half-separation `δ`, and the small-separation expansion of IMSPE for the
//! Gaussian family:
//!
//! ```text
//! IMSPE(x_t, δ) = c₀(x_t, θ) + c₂(x_t, θ)·θδ² + O(θ²δ⁴)
//! ```
//!
//! The coefficients come by three independent routes: a hand-simplified
//! form, the symmetry-operator form built from the Taylor coefficients of
//! the border element, and Richardson extrapolation of direct evaluations.
//!
//! The exponential and Matérn families have no such series (their kernels
//! are not smooth at zero separation); for them only the change of variables
//! is provided.

use crate::dd::Dd;
use crate::error::{invalid, ImspeError, Result};
use crate::imspe::imspe_n2;
use crate::integrals::i3_raw;
use crate::kernels::Family;
use crate::real::Real;

/// Below this value of `√θ|δ|`, [`evaluate_cluster`] uses the quadratic
/// model instead of the operator form.
pub const SWITCHOVER: f64 = 1e-4;

fn check_theta(theta: f64) -> Result<()> {
    if theta.is_finite() && theta > 0.0 {
        Ok(())
    } else {
        Err(invalid(format!("theta must be finite and > 0, got {theta}")))
    }
}

fn check_centre(x_t: f64) -> Result<()> {
    if x_t.is_finite() && (-1.0..=1.0).contains(&x_t) {
        Ok(())
    } else {
        Err(invalid(format!("pair centre {x_t} is outside [-1, 1]")))
    }
}

fn check_pair(x_t: f64, delta: f64) -> Result<()> {
    check_centre(x_t)?;
    let ok = |x: Dd| x.abs() <= Dd::from(1.0);
    let (x, d) = (Dd::from(x_t), Dd::from(delta));
    if delta.is_finite() && ok(x + d) && ok(x - d) {
        Ok(())
    } else {
        Err(invalid(format!(
            "pair x_t ± δ = {x_t} ± {delta} leaves [-1, 1]"
        )))
    }
}

/// Pair centre and signed half-separation, `x₁ = x_t + δ`, `x₂ = x_t − δ`.
///
/// Both are held in double-double, which represents `(x₁ + x₂)/2` and
/// `(x₁ − x₂)/2` exactly, so the conversion back to `(x₁, x₂)` is exact.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClusterCoords {
    x_t: Dd,
    delta: Dd,
}

impl ClusterCoords {
    pub fn new(x_t: f64, delta: f64) -> Result<Self> {
        check_pair(x_t, delta)?;
        Ok(ClusterCoords {
            x_t: Dd::from(x_t),
            delta: Dd::from(delta),
        })
    }

    pub fn x_t(&self) -> f64 {
        self.x_t.to_f64()
    }

    pub fn delta(&self) -> f64 {
        self.delta.to_f64()
    }

    pub fn x_t_exact(&self) -> Dd {
        self.x_t
    }

    pub fn delta_exact(&self) -> Dd {
        self.delta
    }
}

/// `x_t = (x₁ + x₂)/2`, `δ = x₁ − x_t`.
pub fn to_cluster(x1: f64, x2: f64) -> Result<ClusterCoords> {
    for x in [x1, x2] {
        if !(x.is_finite() && (-1.0..=1.0).contains(&x)) {
            return Err(invalid(format!("coordinate {x} is outside [-1, 1]")));
        }
    }
    let (a, b) = (Dd::from(x1), Dd::from(x2));
    let half = Dd::from(0.5);
    let x_t = (a + b) * half;
    Ok(ClusterCoords {
        x_t,
        delta: a - x_t,
    })
}

/// `(x_t + δ, x_t − δ)`.
pub fn from_cluster(c: &ClusterCoords) -> Result<(f64, f64)> {
    let x1 = (c.x_t + c.delta).to_f64();
    let x2 = (c.x_t - c.delta).to_f64();
    if x1.abs() <= 1.0 && x2.abs() <= 1.0 {
        Ok((x1, x2))
    } else {
        Err(invalid(format!("cluster maps to ({x1}, {x2}), outside [-1, 1]")))
    }
}

/// `IMSPE ≈ c₀ + c₂·θδ²`; the remainder is `O(θ²δ⁴)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExpansionSeries<T> {
    pub c0: T,
    pub c2: T,
    /// Power of δ in the leading neglected term.
    pub remainder_power: u32,
}

impl<T: Real> ExpansionSeries<T> {
    fn new(c0: T, c2: T) -> Self {
        ExpansionSeries {
            c0,
            c2,
            remainder_power: 4,
        }
    }

    /// `c₀ + c₂·θδ²`.
    pub fn eval(&self, theta: T, delta: T) -> T {
        self.c0 + self.c2 * theta * delta * delta
    }
}

pub(crate) fn expansion_gauss_raw<T: Real>(x_t: T, theta: T) -> ExpansionSeries<T> {
    let one = T::one();
    let two = T::of(2.0);
    let quarter = T::ratio(1, 4);
    let (p, m) = (one + x_t, one - x_t);
    let e2 = |y: T| (-(two * theta * y * y)).exp();
    let e1 = |y: T| (-(theta * y * y)).exp();
    let r1 = theta.sqrt();
    let r2 = (two * theta).sqrt();
    let erf1 = (r1 * p).erf() + (r1 * m).erf();
    let erf2 = (r2 * p).erf() + (r2 * m).erf();
    let pi = T::pi();
    let pre2 = (pi / (T::of(128.0) * theta)).sqrt() * erf2;
    let c0 = two + quarter * (p * e2(p) + m * e2(m)) - (pi / (T::of(4.0) * theta)).sqrt() * erf1
        - pre2;
    let third = T::ratio(1, 3);
    let c2 = -two
        + (quarter + theta * p * p * third) * p * e2(p)
        + (quarter + theta * m * m * third) * m * e2(m)
        + (p * e1(p) + m * e1(m))
        - pre2;
    ExpansionSeries::new(c0, c2)
}

/// Hand-simplified coefficients, with `p = 1 + x_t`, `m = 1 − x_t`:
///
/// ```text
/// c₀ = 2 + ¼[p e^{−2θp²} + m e^{−2θm²}] − √(π/4θ)[erf(√θ p) + erf(√θ m)]
///        − √(π/128θ)[erf(√2θ p) + erf(√2θ m)]
/// c₂ = −2 + (¼ + θp²/3) p e^{−2θp²} + (¼ + θm²/3) m e^{−2θm²}
///        + [p e^{−θp²} + m e^{−θm²}] − √(π/128θ)[erf(√2θ p) + erf(√2θ m)]
/// ```
pub fn expansion_gauss<T: Real>(x_t: f64, theta: f64) -> Result<ExpansionSeries<T>> {
    check_centre(x_t)?;
    check_theta(theta)?;
    Ok(expansion_gauss_raw(T::of(x_t), T::of(theta)))
}

/// The centred second coefficient,
/// `−2 + (½ + 2θ/3)e^{−2θ} + 2e^{−θ} − √(π/32θ) erf(√2θ)`.
///
/// Negative for every θ > 0, so a coincident pair is never optimal. Computed
/// as `expansion_gauss(0, θ).c2`.
pub fn st_term<T: Real>(theta: f64) -> Result<T> {
    Ok(expansion_gauss::<T>(0.0, theta)?.c2)
}

/// `c₀ + c₂·θδ²` from [`expansion_gauss`].
pub fn imspe_quadratic<T: Real>(theta: f64, x_t: f64, delta: f64) -> Result<T> {
    check_pair(x_t, delta)?;
    check_theta(theta)?;
    Ok(expansion_gauss_raw(T::of(x_t), T::of(theta)).eval(T::of(theta), T::of(delta)))
}

/// `k`-th derivative of erf, `k ≤ 4`.
pub fn erf_derivative<T: Real>(k: usize, x: T) -> T {
    if k == 0 {
        return x.erf();
    }
    let g = T::of(2.0) / T::pi().sqrt() * (-(x * x)).exp();
    let two = T::of(2.0);
    match k {
        1 => g,
        2 => -two * x * g,
        3 => -two * (T::one() - two * x * x) * g,
        4 => T::of(12.0) * x * (T::one() - two * x * x / T::of(3.0)) * g,
        _ => panic!("erf derivatives are provided up to order 4"),
    }
}

/// Taylor coefficients in `u = √(cθ)δ` of
/// `erf(√(cθ)(1 + x_t) + u) + erf(√(cθ)(1 − x_t) − u)`, orders 0 to 4.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ErfPairExpansion<T> {
    pub coefficients: [T; 5],
}

impl<T: Real> ErfPairExpansion<T> {
    pub fn new(x_t: T, theta: T, c: T) -> Self {
        let r = (c * theta).sqrt();
        let (p, m) = (r * (T::one() + x_t), r * (T::one() - x_t));
        let mut coefficients = [T::zero(); 5];
        let mut fact = T::one();
        for (k, slot) in coefficients.iter_mut().enumerate() {
            if k > 0 {
                fact *= T::of(k as f64);
            }
            let sign = if k % 2 == 0 { T::one() } else { -T::one() };
            *slot = (erf_derivative(k, p) + sign * erf_derivative(k, m)) / fact;
        }
        ErfPairExpansion { coefficients }
    }

    /// Truncated series at `u`.
    pub fn eval(&self, u: T) -> T {
        self.coefficients
            .iter()
            .rev()
            .fold(T::zero(), |acc, &c| acc * u + c)
    }
}

/// Even Taylor coefficients `[R₀, R₂, R₄]` of the border element in powers of
/// `θδ²`, evaluated at hyperparameter `θ`.
fn border_coefficients<T: Real>(x_t: T, theta: T) -> [T; 3] {
    let e = ErfPairExpansion::new(x_t, theta, T::one()).coefficients;
    let pre = (T::pi() / (T::of(16.0) * theta)).sqrt();
    [pre * e[0], pre * e[2], pre * e[4]]
}

pub(crate) fn expansion_operator_raw<T: Real>(x_t: T, theta: T) -> ExpansionSeries<T> {
    let two = T::of(2.0);
    let half = T::ratio(1, 2);
    let [r0, r2, _] = border_coefficients(x_t, theta);
    let [d0, d2, d4] = border_coefficients(x_t, two * theta);
    let c0 = two - two * r0 - half * d0 - half * d2;
    let c2 = -two - two * r2 - half * d0 - d2 - d4;
    ExpansionSeries::new(c0, c2)
}

/// Coefficients obtained by expanding the operator form in `θδ²`:
///
/// ```text
/// c₀ =  2 − 2R₀(θ) − ½R₀(2θ) − ½R₂(2θ)
/// c₂ = −2 − 2R₂(θ) − ½R₀(2θ) −  R₂(2θ) − R₄(2θ)
/// ```
///
/// where `R_k(θ)` is the coefficient of `(θδ²)^{k/2}` in the border element
/// `R₀₁(x_t + δ)`, built from [`ErfPairExpansion`].
pub fn expansion_operator<T: Real>(x_t: f64, theta: f64) -> Result<ExpansionSeries<T>> {
    check_centre(x_t)?;
    check_theta(theta)?;
    Ok(expansion_operator_raw(T::of(x_t), T::of(theta)))
}

/// Coefficients by Richardson extrapolation of direct double-double
/// evaluations at `δ₀, δ₀/2, δ₀/4, δ₀/8`.
///
/// `c₀` is the extrapolated limit of IMSPE; `c₂` the extrapolated limit of
/// `[IMSPE(δ) − c₀]/(θδ²)`. Each table eliminates successive powers of δ²
/// with ratio 4.
pub fn expansion_finite_difference(x_t: f64, theta: f64, delta0: f64) -> Result<ExpansionSeries<Dd>> {
    check_theta(theta)?;
    check_pair(x_t, delta0)?;
    if !(delta0 > 0.0) {
        return Err(invalid("delta0 must be > 0"));
    }
    let mut hs = Vec::new();
    let mut vals = Vec::new();
    for k in 0..4 {
        let delta = delta0 / f64::from(1u32 << k);
        let x1 = x_t + delta;
        let x2 = x_t - delta;
        let c = to_cluster(x1, x2)?;
        hs.push(c.delta_exact());
        vals.push(imspe_n2::<Dd>(Family::GaussP2, theta, x1, x2)?);
    }
    let c0 = richardson(&vals);
    let t = Dd::from(theta);
    let quotients: Vec<Dd> = vals
        .iter()
        .zip(&hs)
        .map(|(&v, &d)| (v - c0) / (t * d * d))
        .collect();
    Ok(ExpansionSeries::new(c0, richardson(&quotients)))
}

/// Richardson extrapolation of a sequence in `h, h/2, h/4, …` whose error
/// expands in powers of `h²`.
fn richardson(seq: &[Dd]) -> Dd {
    let mut row = seq.to_vec();
    let mut factor = Dd::from(4.0);
    while row.len() > 1 {
        row = row
            .windows(2)
            .map(|w| (factor * w[1] - w[0]) / (factor - Dd::from(1.0)))
            .collect();
        factor = factor * Dd::from(4.0);
    }
    row[0]
}

/// The border element `R(x_t, δ, θ) = R₀₁ = √(π/16θ)[erf(√θ(1+x_t+δ)) + erf(√θ(1−x_t−δ))]`
/// as a value in three independent slots, on which the operators act.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BorderElement<T> {
    pub x_t: T,
    pub delta: T,
    pub theta: T,
}

impl<T: Real> BorderElement<T> {
    pub fn new(x_t: T, delta: T, theta: T) -> Self {
        BorderElement { x_t, delta, theta }
    }

    /// `S_δ`: flips the sign of δ.
    pub fn s_delta(self) -> Self {
        BorderElement {
            delta: -self.delta,
            ..self
        }
    }

    /// `D_θ`: doubles θ.
    pub fn d_theta(self) -> Self {
        BorderElement {
            theta: T::of(2.0) * self.theta,
            ..self
        }
    }

    /// `Z_δ`: sets δ to zero.
    pub fn z_delta(self) -> Self {
        BorderElement {
            delta: T::zero(),
            ..self
        }
    }

    pub fn value(&self) -> T {
        i3_raw(self.x_t + self.delta, self.theta)
    }
}

pub(crate) fn imspe_operator_raw<T: Real>(theta: T, x_t: T, delta: T) -> T {
    let two = T::of(2.0);
    let h = theta * delta * delta;
    let omv = -(-(T::of(4.0) * h)).exp_m1();
    let r = BorderElement::new(x_t, delta, theta);
    let sym = |e: BorderElement<T>| e.value() + e.s_delta().value();
    two - omv / two - sym(r.d_theta()) / (two * omv) - sym(r)
        + (-(two * h)).exp() * r.z_delta().d_theta().value() / omv
}

/// IMSPE of the Gaussian pair `x_t ± δ` written with the operators:
///
/// ```text
/// 2 − (1 − V)/2 − (1 + S_δ)D_θR / [2(1 − V)] − (1 + S_δ)R + e^{−2θδ²} Z_δD_θR / (1 − V)
/// ```
///
/// with `V = e^{−4θδ²}`. Fails at `δ = 0`, the pole of `1/(1 − V)`.
pub fn imspe_operator_form<T: Real>(theta: f64, x_t: f64, delta: f64) -> Result<T> {
    check_theta(theta)?;
    check_pair(x_t, delta)?;
    if delta == 0.0 {
        return Err(ImspeError::TwinPoint { x: x_t });
    }
    Ok(imspe_operator_raw(T::of(theta), T::of(x_t), T::of(delta)))
}

/// Gaussian pair IMSPE valid through `δ = 0`: the quadratic model when
/// `√θ|δ| <` [`SWITCHOVER`], the operator form otherwise.
pub fn evaluate_cluster<T: Real>(theta: f64, x_t: f64, delta: f64) -> Result<T> {
    check_theta(theta)?;
    check_pair(x_t, delta)?;
    if theta.sqrt() * delta.abs() < SWITCHOVER {
        imspe_quadratic(theta, x_t, delta)
    } else {
        imspe_operator_form(theta, x_t, delta)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cluster_examples() {
        let c = to_cluster(0.5, -0.5).unwrap();
        assert_eq!((c.x_t(), c.delta()), (0.0, 0.5));
        let c = to_cluster(0.3, 0.3).unwrap();
        assert_eq!((c.x_t(), c.delta()), (0.3, 0.0));
        assert!(to_cluster(1.2, 0.0).is_err());
        assert!(ClusterCoords::new(0.9, 0.2).is_err());
    }

    #[test]
    fn st_term_matches_literal_formula() {
        for &t in &[0.01, 1.0, 37.0] {
            let lit = -2.0 + (0.5 + 2.0 * t / 3.0) * (-2.0 * t).exp() + 2.0 * (-t).exp()
                - (std::f64::consts::PI / (32.0 * t)).sqrt() * libm::erf((2.0 * t).sqrt());
            let st: f64 = st_term(t).unwrap();
            assert!((st - lit).abs() < 1e-14, "{t}: {st} vs {lit}");
        }
    }

    #[test]
    fn centred_c0_matches_literal_formula() {
        let t = 0.7f64;
        let pi = std::f64::consts::PI;
        let lit = 2.0 + (-2.0 * t).exp() / 2.0 - (pi / t).sqrt() * libm::erf(t.sqrt())
            - (pi / (32.0 * t)).sqrt() * libm::erf((2.0 * t).sqrt());
        let c0 = expansion_gauss::<f64>(0.0, t).unwrap().c0;
        assert!((c0 - lit).abs() < 1e-14);
    }

    #[test]
    fn operators_are_involutive_and_commute() {
        let r = BorderElement::new(0.2, 0.1, 1.3);
        assert_eq!(r.s_delta().s_delta().value(), r.value());
        assert_eq!(r.z_delta().d_theta().value(), r.d_theta().z_delta().value());
    }

    #[test]
    fn operator_form_rejects_zero_separation() {
        assert!(matches!(
            imspe_operator_form::<f64>(1.0, 0.0, 0.0),
            Err(ImspeError::TwinPoint { .. })
        ));
        assert!(evaluate_cluster::<f64>(1.0, 0.0, 0.0).is_ok());
    }

    #[test]
    fn richardson_is_exact_on_low_degree() {
        // 3 + 2h² + 5h⁴ at h = 1, ½, ¼
        let f = |h: f64| Dd::from(3.0 + 2.0 * h * h + 5.0 * h.powi(4));
        let v = richardson(&[f(1.0), f(0.5), f(0.25)]);
        assert!((v - Dd::from(3.0)).abs().to_f64() < 1e-28);
    }
}
