//! Reference values by adaptive quadrature, independent of every closed form.
//!
//! The integrator is a recursive-bisection Gauss–Kronrod (7, 15) rule. Kink
//! locations of the integrand are passed as forced split points so each
//! panel sees a smooth function.

use crate::error::{invalid, ImspeError, Result};
use crate::imspe::{assemble_l, solve_trace, Design};
use crate::kernels::{profile_1d, KernelSpec, Point};
use crate::linalg::Matrix;

#[derive(Clone, Debug, PartialEq)]
pub struct QuadratureSettings {
    pub abs_tol: f64,
    pub max_depth: u32,
    pub split_points: Vec<f64>,
}

impl Default for QuadratureSettings {
    fn default() -> Self {
        QuadratureSettings {
            abs_tol: 1e-12,
            max_depth: 60,
            split_points: Vec::new(),
        }
    }
}

impl QuadratureSettings {
    pub fn with_tolerance(abs_tol: f64) -> Self {
        QuadratureSettings {
            abs_tol,
            ..Default::default()
        }
    }

    pub fn with_splits(&self, splits: &[f64]) -> Self {
        QuadratureSettings {
            split_points: splits.to_vec(),
            ..self.clone()
        }
    }

    fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0) {
            return Err(invalid("abs_tol must be > 0"));
        }
        if self.max_depth < 10 {
            return Err(invalid("max_depth must be at least 10"));
        }
        Ok(())
    }
}

const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];

const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];

const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

/// Kronrod estimate and |Kronrod − Gauss| on one panel.
fn gk15(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = WGK[7] * fc;
    let mut g = WG[3] * fc;
    for i in 0..7 {
        let dx = h * XGK[i];
        let s = f(c - dx) + f(c + dx);
        k += WGK[i] * s;
        if i % 2 == 1 {
            g += WG[i / 2] * s;
        }
    }
    (k * h, ((k - g) * h).abs())
}

fn adapt(
    f: &impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    tol: f64,
    depth: u32,
    max_depth: u32,
) -> std::result::Result<f64, (f64, f64)> {
    let (k, err) = gk15(f, a, b);
    if err <= tol || err <= 50.0 * f64::EPSILON * k.abs() {
        return Ok(k);
    }
    if depth >= max_depth {
        return Err((a, b));
    }
    let m = 0.5 * (a + b);
    Ok(adapt(f, a, m, 0.5 * tol, depth + 1, max_depth)? + adapt(f, m, b, 0.5 * tol, depth + 1, max_depth)?)
}

/// `∫_lo^hi f` to absolute tolerance `settings.abs_tol`.
pub fn integrate(f: impl Fn(f64) -> f64, lo: f64, hi: f64, settings: &QuadratureSettings) -> Result<f64> {
    settings.validate()?;
    if !(lo < hi) {
        return Err(invalid(format!("integration bounds must satisfy lo < hi, got [{lo}, {hi}]")));
    }
    let mut knots = vec![lo];
    let mut inner: Vec<f64> = settings
        .split_points
        .iter()
        .copied()
        .filter(|&s| s > lo && s < hi)
        .collect();
    inner.sort_by(f64::total_cmp);
    inner.dedup();
    knots.extend(inner);
    knots.push(hi);
    let mut total = 0.0;
    for w in knots.windows(2) {
        let tol = settings.abs_tol * (w[1] - w[0]) / (hi - lo);
        total += adapt(&f, w[0], w[1], tol, 0, settings.max_depth).map_err(|(a, b)| {
            ImspeError::QuadratureFailure {
                lo: a,
                hi: b,
                max_depth: settings.max_depth,
            }
        })?;
    }
    Ok(total)
}

/// Border (`xj = None`) or inner element of R by per-dimension quadrature of
/// the kernel profiles over `[−1, 1]`, each normalised by ½.
pub fn oracle_r_element(
    kernel: &KernelSpec,
    xi: &Point,
    xj: Option<&Point>,
    settings: &QuadratureSettings,
) -> Result<f64> {
    let check = |p: &Point| {
        if p.dim() == kernel.dim() {
            Ok(())
        } else {
            Err(ImspeError::DimensionMismatch {
                expected: kernel.dim(),
                found: p.dim(),
            })
        }
    };
    check(xi)?;
    if let Some(p) = xj {
        check(p)?;
    }
    let fam = kernel.family();
    let mut prod = 1.0;
    for k in 0..kernel.dim() {
        let t = kernel.theta()[k];
        let a = xi.coords()[k];
        let v = match xj {
            None => integrate(
                |x| profile_1d(fam, t, x - a),
                -1.0,
                1.0,
                &settings.with_splits(&[a]),
            )?,
            Some(p) => {
                let b = p.coords()[k];
                integrate(
                    |x| profile_1d(fam, t, x - a) * profile_1d(fam, t, x - b),
                    -1.0,
                    1.0,
                    &settings.with_splits(&[a, b]),
                )?
            }
        };
        prod *= 0.5 * v;
    }
    Ok(prod)
}

/// Exponential-kernel element on the unit cube `[0, 1]^d` by quadrature.
pub fn oracle_unit_element(
    theta: &[f64],
    xi: &[f64],
    xj: Option<&[f64]>,
    settings: &QuadratureSettings,
) -> Result<f64> {
    let fam = crate::kernels::Family::ExpP1;
    let mut prod = 1.0;
    for k in 0..theta.len() {
        let (t, a) = (theta[k], xi[k]);
        let v = match xj {
            None => integrate(|x| profile_1d(fam, t, x - a), 0.0, 1.0, &settings.with_splits(&[a]))?,
            Some(y) => {
                let b = y[k];
                integrate(
                    |x| profile_1d(fam, t, x - a) * profile_1d(fam, t, x - b),
                    0.0,
                    1.0,
                    &settings.with_splits(&[a, b]),
                )?
            }
        };
        prod *= v;
    }
    Ok(prod)
}

/// `1 − tr(L⁻¹R)` with every entry of R obtained by quadrature.
pub fn oracle_imspe(kernel: &KernelSpec, design: &Design, settings: &QuadratureSettings) -> Result<f64> {
    design.check_kernel(kernel)?;
    if let Some((i, j)) = design.coincident_pair() {
        return Err(ImspeError::CoincidentPoints { i, j });
    }
    let n = design.n();
    let pts = design.points();
    let mut r = Matrix::zeros(n + 1);
    r.set(0, 0, 1.0);
    for i in 0..n {
        let b = oracle_r_element(kernel, &pts[i], None, settings)?;
        r.set(0, i + 1, b);
        r.set(i + 1, 0, b);
        for j in i..n {
            let v = oracle_r_element(kernel, &pts[i], Some(&pts[j]), settings)?;
            r.set(i + 1, j + 1, v);
            r.set(j + 1, i + 1, v);
        }
    }
    let l = assemble_l::<f64>(kernel, design);
    let (trace, _) = solve_trace(&l, &r)?;
    Ok(1.0 - trace)
}
