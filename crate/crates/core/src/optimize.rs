//! IMSPE-optimal designs: scalar search for one point, Nelder–Mead for two
//! points on a line, θ sweeps, grid scans, and a directional-limit probe
//! for designs containing a pair `x, −x` that may collapse onto the origin.
//!
//! The one- and two-point searches minimise the double-double "excess"
//! objectives of [`crate::imspe`], which stay relatively accurate where IMSPE
//! itself is flat to within f64 rounding (large θ).

use rayon::prelude::*;

use crate::dd::Dd;
use crate::error::{invalid, ImspeError, Result};
use crate::imspe::{evaluate, n1_baseline, n1_excess, n2_baseline, n2_excess, Design};
use crate::kernels::{Family, KernelSpec, Point};
use crate::real::Real;

/// Central-difference step for reported gradients.
pub const GRADIENT_STEP: f64 = 1e-6;
/// Largest gradient norm of a converged optimum.
pub const GRADIENT_TOLERANCE: f64 = 1e-5;
/// Central-difference step for reported curvature.
pub const HESSIAN_STEP: f64 = 1e-4;
/// `|x₁ + x₂|` below which a two-point optimum counts as symmetric.
pub const SYMMETRY_TOLERANCE: f64 = 1e-5;

/// Coordinates of the fixed start lattice for two points.
pub const START_LEVELS: [f64; 6] = [-0.8, -0.5, -0.2, 0.2, 0.5, 0.8];

/// The 15 ordered pairs `(x₁, x₂)`, `x₁ > x₂`, from [`START_LEVELS`], largest
/// `x₁` first. Deterministic, no random numbers.
pub fn default_starts() -> Vec<(f64, f64)> {
    let mut out = Vec::new();
    for (i, &a) in START_LEVELS.iter().enumerate().rev() {
        for &b in START_LEVELS[..i].iter().rev() {
            out.push((a, b));
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq)]
pub struct OptimizeSettings {
    /// Nelder–Mead stops when the simplex diameter is below this.
    pub tol_x: f64,
    /// Number of lattice starts to use (1 to 15).
    pub multistart: usize,
    pub max_iter: usize,
}

impl Default for OptimizeSettings {
    fn default() -> Self {
        OptimizeSettings {
            tol_x: 1e-8,
            multistart: 15,
            max_iter: 5000,
        }
    }
}

impl OptimizeSettings {
    fn validate(&self) -> Result<()> {
        if !(self.tol_x > 0.0) {
            return Err(invalid("tol_x must be > 0"));
        }
        if self.multistart == 0 {
            return Err(invalid("multistart must be at least 1"));
        }
        if self.max_iter == 0 {
            return Err(invalid("max_iter must be at least 1"));
        }
        Ok(())
    }
}

/// Two-point search mode.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairMode {
    /// Free `(x₁, x₂)` by Nelder–Mead from the start lattice.
    Free,
    /// `x₂ = −x₁`, scalar search over `x₁ ∈ (0, 1]`.
    Symmetric,
}

#[derive(Clone, Debug, PartialEq)]
pub struct OptimumReport {
    pub design: Design,
    pub imspe_value: f64,
    pub converged: bool,
    /// Central-difference gradient of IMSPE at the optimum.
    pub gradient: Vec<f64>,
    /// Eigenvalues of the central-difference Hessian, ascending.
    pub hessian_eigenvalues: Vec<f64>,
    pub second_order_positive: bool,
    pub boundary_distance: f64,
    /// For two points: whether `|x₁ + x₂| ≤ 1e-5`.
    pub symmetric: Option<bool>,
    pub evaluations: usize,
}

impl OptimumReport {
    pub fn gradient_norm(&self) -> f64 {
        self.gradient.iter().map(|g| g * g).sum::<f64>().sqrt()
    }

    /// The largest design coordinate (`x*` for one point, `x₁*` for two).
    pub fn x1(&self) -> f64 {
        self.design
            .points()
            .iter()
            .map(|p| p.coords()[0])
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

fn check_theta(theta: f64) -> Result<()> {
    if theta.is_finite() && theta > 0.0 {
        Ok(())
    } else {
        Err(invalid(format!("theta must be finite and > 0, got {theta}")))
    }
}

// ---------------------------------------------------------------------------
// Scalar minimiser

#[derive(Clone, Copy, Debug)]
pub struct ScalarMinimum {
    pub x: f64,
    pub value: Dd,
    pub converged: bool,
    pub evaluations: usize,
}

/// Golden-section search with parabolic interpolation on `[a, b]`.
/// Never evaluates the endpoints.
pub fn brent(f: impl Fn(f64) -> Dd, a: f64, b: f64, tol: f64, max_iter: usize) -> ScalarMinimum {
    const GOLD: f64 = 0.381_966_011_250_105_1;
    const REL: f64 = 1e-15;
    let (mut a, mut b) = (a, b);
    let mut x = a + GOLD * (b - a);
    let (mut w, mut v) = (x, x);
    let mut fx = f(x);
    let (mut fw, mut fv) = (fx, fx);
    let (mut d, mut e) = (0.0f64, 0.0f64);
    let mut evaluations = 1;
    for _ in 0..max_iter {
        let xm = 0.5 * (a + b);
        let tol1 = REL * x.abs() + tol / 3.0;
        let tol2 = 2.0 * tol1;
        if (x - xm).abs() <= tol2 - 0.5 * (b - a) {
            return ScalarMinimum {
                x,
                value: fx,
                converged: true,
                evaluations,
            };
        }
        let mut golden = true;
        if e.abs() > tol1 {
            let r = (x - w) * (fx - fv).to_f64();
            let mut q = (x - v) * (fx - fw).to_f64();
            let mut p = (x - v) * q - (x - w) * r;
            q = 2.0 * (q - r);
            if q > 0.0 {
                p = -p;
            }
            q = q.abs();
            let e_prev = e;
            if p.abs() < (0.5 * q * e_prev).abs() && p > q * (a - x) && p < q * (b - x) {
                e = d;
                d = p / q;
                let u = x + d;
                if u - a < tol2 || b - u < tol2 {
                    d = tol1.copysign(xm - x);
                }
                golden = false;
            }
        }
        if golden {
            e = if x >= xm { a - x } else { b - x };
            d = GOLD * e;
        }
        let u = if d.abs() >= tol1 { x + d } else { x + tol1.copysign(d) };
        let fu = f(u);
        evaluations += 1;
        if fu <= fx {
            if u >= x {
                a = x;
            } else {
                b = x;
            }
            (v, fv) = (w, fw);
            (w, fw) = (x, fx);
            (x, fx) = (u, fu);
        } else {
            if u < x {
                a = u;
            } else {
                b = u;
            }
            if fu <= fw || w == x {
                (v, fv) = (w, fw);
                (w, fw) = (u, fu);
            } else if fu <= fv || v == x || v == w {
                (v, fv) = (u, fu);
            }
        }
    }
    ScalarMinimum {
        x,
        value: fx,
        converged: false,
        evaluations,
    }
}

// ---------------------------------------------------------------------------
// Nelder–Mead in two variables

#[derive(Clone, Copy, Debug)]
pub struct SimplexMinimum {
    pub x: [f64; 2],
    pub value: Dd,
    pub converged: bool,
    pub evaluations: usize,
}

/// Nelder–Mead with reflection, expansion, contraction and shrink
/// coefficients `(1, 2, ½, ½)`; stops when the simplex diameter is below
/// `tol_x`. Infeasible points must be given a large finite value by `f`.
pub fn nelder_mead(
    f: impl Fn([f64; 2]) -> Dd,
    start: [f64; 2],
    step: f64,
    tol_x: f64,
    max_iter: usize,
) -> SimplexMinimum {
    let mut s: Vec<([f64; 2], Dd)> = [
        start,
        [start[0] + step, start[1]],
        [start[0], start[1] + step],
    ]
    .into_iter()
    .map(|p| (p, f(p)))
    .collect();
    let mut evaluations = 3;
    let lerp = |a: [f64; 2], b: [f64; 2], t: f64| [a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])];
    let dist = |a: [f64; 2], b: [f64; 2]| ((a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2)).sqrt();
    for _ in 0..max_iter {
        s.sort_by(|a, b| a.1.partial_cmp(&b.1).unwrap_or(std::cmp::Ordering::Equal));
        let diameter = dist(s[0].0, s[1].0)
            .max(dist(s[0].0, s[2].0))
            .max(dist(s[1].0, s[2].0));
        if diameter < tol_x {
            return SimplexMinimum {
                x: s[0].0,
                value: s[0].1,
                converged: true,
                evaluations,
            };
        }
        let c = lerp(s[0].0, s[1].0, 0.5);
        let worst = s[2];
        let xr = lerp(c, worst.0, -1.0);
        let fr = f(xr);
        evaluations += 1;
        if fr < s[0].1 {
            let xe = lerp(c, worst.0, -2.0);
            let fe = f(xe);
            evaluations += 1;
            s[2] = if fe < fr { (xe, fe) } else { (xr, fr) };
            continue;
        }
        if fr < s[1].1 {
            s[2] = (xr, fr);
            continue;
        }
        let (xc, fc) = if fr < worst.1 {
            let xc = lerp(c, xr, 0.5);
            (xc, f(xc))
        } else {
            let xc = lerp(c, worst.0, 0.5);
            (xc, f(xc))
        };
        evaluations += 1;
        if fc < fr.min(worst.1) {
            s[2] = (xc, fc);
            continue;
        }
        let best = s[0].0;
        for v in s.iter_mut().skip(1) {
            v.0 = lerp(best, v.0, 0.5);
            v.1 = f(v.0);
        }
        evaluations += 2;
    }
    s.sort_by(|a, b| a.1.partial_cmp(&b.1).unwrap_or(std::cmp::Ordering::Equal));
    SimplexMinimum {
        x: s[0].0,
        value: s[0].1,
        converged: false,
        evaluations,
    }
}

// ---------------------------------------------------------------------------
// Finite-difference checks

fn fd_gradient(f: &impl Fn(&[f64]) -> Dd, x: &[f64], h: f64) -> Vec<f64> {
    (0..x.len())
        .map(|i| {
            let mut xp = x.to_vec();
            let mut xm = x.to_vec();
            xp[i] += h;
            xm[i] -= h;
            ((f(&xp) - f(&xm)) / Dd::from(2.0 * h)).to_f64()
        })
        .collect()
}

fn fd_hessian(f: &impl Fn(&[f64]) -> Dd, x: &[f64], h: f64) -> Vec<Vec<f64>> {
    let n = x.len();
    let f0 = f(x);
    let at = |d: &[(usize, f64)]| {
        let mut y = x.to_vec();
        for &(i, s) in d {
            y[i] += s * h;
        }
        f(&y)
    };
    let hh = Dd::from(h * h);
    let mut out = vec![vec![0.0; n]; n];
    for i in 0..n {
        out[i][i] = ((at(&[(i, 1.0)]) + at(&[(i, -1.0)]) - Dd::from(2.0) * f0) / hh).to_f64();
        for j in 0..i {
            let v = (at(&[(i, 1.0), (j, 1.0)]) - at(&[(i, 1.0), (j, -1.0)]) - at(&[(i, -1.0), (j, 1.0)])
                + at(&[(i, -1.0), (j, -1.0)]))
                / (Dd::from(4.0) * hh);
            out[i][j] = v.to_f64();
            out[j][i] = out[i][j];
        }
    }
    out
}

fn symmetric_eigenvalues(h: &[Vec<f64>]) -> Vec<f64> {
    match h.len() {
        1 => vec![h[0][0]],
        2 => {
            let (a, b, c) = (h[0][0], h[0][1], h[1][1]);
            let m = 0.5 * (a + c);
            let r = (0.25 * (a - c) * (a - c) + b * b).sqrt();
            // smaller root via the product to avoid cancellation
            let big = if m >= 0.0 { m + r } else { m - r };
            let small = if big != 0.0 { (a * c - b * b) / big } else { 0.0 };
            let mut v = vec![big, small];
            v.sort_by(f64::total_cmp);
            v
        }
        _ => unreachable!("searches have at most two variables"),
    }
}

fn boundary_distance(coords: &[f64]) -> f64 {
    coords.iter().map(|c| 1.0 - c.abs()).fold(f64::INFINITY, f64::min)
}

fn finish_report(
    objective: impl Fn(&[f64]) -> Dd,
    baseline: Dd,
    x: &[f64],
    design: Design,
    search_converged: bool,
    evaluations: usize,
) -> OptimumReport {
    let gradient = fd_gradient(&objective, x, GRADIENT_STEP);
    let hessian_eigenvalues = symmetric_eigenvalues(&fd_hessian(&objective, x, HESSIAN_STEP));
    let grad_norm = gradient.iter().map(|g| g * g).sum::<f64>().sqrt();
    let symmetric = (x.len() == 2).then(|| (x[0] + x[1]).abs() <= SYMMETRY_TOLERANCE);
    OptimumReport {
        imspe_value: (baseline + objective(x)).to_f64(),
        converged: search_converged && grad_norm <= GRADIENT_TOLERANCE,
        second_order_positive: hessian_eigenvalues.iter().all(|&e| e > 0.0),
        boundary_distance: boundary_distance(x),
        gradient,
        hessian_eigenvalues,
        symmetric,
        design,
        evaluations,
    }
}

// ---------------------------------------------------------------------------
// One and two points

/// Optimal single point in `[−1, 1]`.
pub fn optimize_n1(family: Family, theta: f64, settings: &OptimizeSettings) -> Result<OptimumReport> {
    check_theta(theta)?;
    settings.validate()?;
    let f = |x: f64| n1_excess::<Dd>(family, theta, x);
    let m = brent(f, -1.0, 1.0, 0.1 * settings.tol_x, settings.max_iter);
    let objective = |x: &[f64]| n1_excess::<Dd>(family, theta, x[0]);
    Ok(finish_report(
        objective,
        n1_baseline(family, theta),
        &[m.x],
        Design::from_flat(1, &[m.x])?,
        m.converged,
        m.evaluations,
    ))
}

/// Two-point objective in the ordered region; the diagonal and the outside
/// of `[−1, 1]²` get a large finite value.
fn pair_objective(family: Family, theta: f64) -> impl Fn([f64; 2]) -> Dd {
    move |x: [f64; 2]| {
        if x[0].abs() > 1.0 || x[1].abs() > 1.0 || x[0] == x[1] {
            Dd::from(1e300)
        } else {
            n2_excess::<Dd>(family, theta, x[0], x[1])
        }
    }
}

/// Optimal pair in `[−1, 1]`, searched freely from the start lattice or along
/// `x₂ = −x₁`.
pub fn optimize_n2(
    family: Family,
    theta: f64,
    mode: PairMode,
    settings: &OptimizeSettings,
) -> Result<OptimumReport> {
    let starts: Vec<(f64, f64)> = default_starts().into_iter().take(settings.multistart).collect();
    optimize_n2_from(family, theta, mode, &starts, settings)
}

/// As [`optimize_n2`] with explicit starts (ignored in symmetric mode).
pub fn optimize_n2_from(
    family: Family,
    theta: f64,
    mode: PairMode,
    starts: &[(f64, f64)],
    settings: &OptimizeSettings,
) -> Result<OptimumReport> {
    check_theta(theta)?;
    settings.validate()?;
    let f = pair_objective(family, theta);
    let baseline = n2_baseline::<Dd>(family, theta);
    let objective = |x: &[f64]| f([x[0], x[1]]);
    let (x, converged, evaluations) = match mode {
        PairMode::Symmetric => {
            let m = brent(|t| f([t, -t]), 0.0, 1.0, 0.1 * settings.tol_x, settings.max_iter);
            ([m.x, -m.x], m.converged, m.evaluations)
        }
        PairMode::Free => {
            if starts.is_empty() {
                return Err(invalid("at least one start is required"));
            }
            let runs: Vec<SimplexMinimum> = starts
                .iter()
                .map(|&(a, b)| nelder_mead(&f, [a, b], 0.1, settings.tol_x, settings.max_iter))
                .collect();
            let evaluations = runs.iter().map(|r| r.evaluations).sum();
            let best = runs
                .iter()
                .filter(|r| r.converged)
                .fold(None::<&SimplexMinimum>, |best, r| match best {
                    Some(b) if b.value <= r.value => Some(b),
                    _ => Some(r),
                });
            match best {
                Some(b) => (b.x, true, evaluations),
                None => {
                    let b = runs
                        .iter()
                        .fold(&runs[0], |b, r| if r.value < b.value { r } else { b });
                    (b.x, false, evaluations)
                }
            }
        }
    };
    let (x1, x2) = if x[0] >= x[1] { (x[0], x[1]) } else { (x[1], x[0]) };
    if x1 == x2 || x1.abs() > 1.0 || x2.abs() > 1.0 {
        return Err(invalid("no start produced a feasible pair"));
    }
    let design = Design::from_flat(1, &[x1, x2])?;
    Ok(finish_report(objective, baseline, &[x1, x2], design, converged, evaluations))
}

// ---------------------------------------------------------------------------
// Sweeps

/// `n` log-uniform values from `lo` to `hi` inclusive.
pub fn log_grid(lo: f64, hi: f64, n: usize) -> Result<Vec<f64>> {
    if !(lo > 0.0 && hi >= lo && hi.is_finite()) || n == 0 || (n == 1 && lo != hi) {
        return Err(invalid(format!("invalid log grid {lo}:{hi}:{n}")));
    }
    if n == 1 {
        return Ok(vec![lo]);
    }
    let (a, b) = (lo.ln(), hi.ln());
    Ok((0..n)
        .map(|k| match k {
            0 => lo,
            k if k == n - 1 => hi,
            k => (a + (b - a) * k as f64 / (n - 1) as f64).exp(),
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    pub theta: f64,
    pub outcome: std::result::Result<OptimumReport, ImspeError>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepReport {
    pub rows: Vec<SweepRow>,
    /// `(min, max)` of `x₁*` over successful rows.
    pub envelope: Option<(f64, f64)>,
}

/// Optimal designs of `n ∈ {1, 2}` points over a θ grid, in grid order.
/// Failures are recorded per row.
pub fn sweep_theta(
    family: Family,
    n: usize,
    thetas: &[f64],
    settings: &OptimizeSettings,
) -> Result<SweepReport> {
    if !(n == 1 || n == 2) {
        return Err(invalid(format!("sweeps support n = 1 or 2, got {n}")));
    }
    settings.validate()?;
    let rows: Vec<SweepRow> = thetas
        .par_iter()
        .map(|&theta| SweepRow {
            theta,
            outcome: if n == 1 {
                optimize_n1(family, theta, settings)
            } else {
                optimize_n2(family, theta, PairMode::Free, settings)
            },
        })
        .collect();
    let envelope = rows
        .iter()
        .filter_map(|r| r.outcome.as_ref().ok().map(OptimumReport::x1))
        .fold(None, |acc: Option<(f64, f64)>, x| match acc {
            None => Some((x, x)),
            Some((lo, hi)) => Some((lo.min(x), hi.max(x))),
        });
    Ok(SweepReport { rows, envelope })
}

// ---------------------------------------------------------------------------
// Scans

/// `count` equally spaced nodes from `lo` to `hi`; `count = 1` requires
/// `lo = hi`. Nodes are placed symmetrically about the midpoint so a grid
/// symmetric about 0 has exactly negated nodes.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Axis {
    pub lo: f64,
    pub hi: f64,
    pub count: usize,
}

impl Axis {
    pub fn new(lo: f64, hi: f64, count: usize) -> Result<Self> {
        let ok = lo.is_finite() && hi.is_finite() && lo <= hi && count >= 1;
        if !ok || (count == 1 && lo != hi) || (count > 1 && lo == hi) {
            return Err(invalid(format!("invalid axis {lo}:{hi}:{count}")));
        }
        Ok(Axis { lo, hi, count })
    }

    pub fn node(&self, k: usize) -> f64 {
        if self.count == 1 {
            return self.lo;
        }
        if k == 0 {
            return self.lo;
        }
        if k == self.count - 1 {
            return self.hi;
        }
        let mid = 0.5 * (self.lo + self.hi);
        let half = 0.5 * (self.hi - self.lo);
        let m = (self.count - 1) as f64;
        mid + half * ((2 * k) as f64 - m) / m
    }

    pub fn nodes(&self) -> Vec<f64> {
        (0..self.count).map(|k| self.node(k)).collect()
    }
}

/// Row-major product grid; the last axis varies fastest.
#[derive(Clone, Debug, PartialEq)]
pub struct GridSpec {
    pub axes: Vec<Axis>,
}

impl GridSpec {
    pub fn new(axes: Vec<Axis>) -> Result<Self> {
        if axes.is_empty() {
            return Err(invalid("a grid needs at least one axis"));
        }
        Ok(GridSpec { axes })
    }

    pub fn len(&self) -> usize {
        self.axes.iter().map(|a| a.count).product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn node(&self, mut index: usize) -> Vec<f64> {
        let mut out = vec![0.0; self.axes.len()];
        for (slot, axis) in out.iter_mut().zip(&self.axes).rev() {
            *slot = axis.node(index % axis.count);
            index /= axis.count;
        }
        out
    }
}

/// How grid coordinates map to a design.
#[derive(Clone, Debug, PartialEq)]
pub enum Constraint {
    /// Grid coordinates are the `n·d` design coordinates, point by point.
    None,
    /// One dimension, one axis `x₁`, design `(x₁, −x₁)`.
    SymmetricPair,
    /// Grid coordinates are a free point `x` (d axes); the design is the
    /// fixed points followed by `x` and `−x`.
    InversionPairWithFixed(Vec<Point>),
}

impl Constraint {
    /// Design coordinates (flat) for grid coordinates `g`.
    pub fn expand(&self, g: &[f64]) -> Vec<f64> {
        match self {
            Constraint::None => g.to_vec(),
            Constraint::SymmetricPair => vec![g[0], -g[0]],
            Constraint::InversionPairWithFixed(fixed) => {
                let mut out: Vec<f64> = fixed.iter().flat_map(|p| p.coords().to_vec()).collect();
                out.extend_from_slice(g);
                out.extend(g.iter().map(|c| -c));
                out
            }
        }
    }

    fn check(&self, kernel: &KernelSpec, grid: &GridSpec) -> Result<()> {
        let d = kernel.dim();
        let axes = grid.axes.len();
        let ok = match self {
            Constraint::None => axes % d == 0,
            Constraint::SymmetricPair => d == 1 && axes == 1,
            Constraint::InversionPairWithFixed(fixed) => {
                axes == d && fixed.iter().all(|p| p.dim() == d)
            }
        };
        if ok {
            Ok(())
        } else {
            Err(invalid(format!(
                "{axes} grid axes do not fit constraint {self:?} in dimension {d}"
            )))
        }
    }
}

/// Arithmetic used for each evaluation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Precision {
    F64,
    DoubleDouble,
}

/// A scan cell: a value, or a marker for a coincident or numerically
/// singular design.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ScanCell {
    Value(f64),
    Singular,
}

impl ScanCell {
    pub fn value(&self) -> Option<f64> {
        match self {
            ScanCell::Value(v) => Some(*v),
            ScanCell::Singular => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScanTable {
    pub grid: GridSpec,
    /// `(grid coordinates, cell)` in row-major order.
    pub rows: Vec<(Vec<f64>, ScanCell)>,
}

/// IMSPE of the design obtained from grid coordinates `g`, as a scan cell.
pub fn scan_point(
    kernel: &KernelSpec,
    constraint: &Constraint,
    g: &[f64],
    precision: Precision,
) -> Result<ScanCell> {
    let design = Design::relaxed_from_flat(kernel.dim(), &constraint.expand(g))?;
    let value = match precision {
        Precision::F64 => evaluate::<f64>(kernel, &design),
        Precision::DoubleDouble => evaluate::<Dd>(kernel, &design).map(Dd::to_f64),
    };
    match value {
        Ok(v) => Ok(ScanCell::Value(v)),
        Err(ImspeError::CoincidentPoints { .. } | ImspeError::IllConditioned { .. }) => {
            Ok(ScanCell::Singular)
        }
        Err(e) => Err(e),
    }
}

pub(crate) fn scan_point_dd(kernel: &KernelSpec, constraint: &Constraint, g: &[f64]) -> Option<Dd> {
    let design = Design::relaxed_from_flat(kernel.dim(), &constraint.expand(g)).ok()?;
    evaluate::<Dd>(kernel, &design).ok()
}

/// IMSPE over a grid, evaluated in parallel and assembled in index order.
pub fn scan_surface(
    kernel: &KernelSpec,
    grid: &GridSpec,
    constraint: &Constraint,
    precision: Precision,
) -> Result<ScanTable> {
    constraint.check(kernel, grid)?;
    let rows = (0..grid.len())
        .into_par_iter()
        .map(|i| {
            let g = grid.node(i);
            scan_point(kernel, constraint, &g, precision).map(|c| (g, c))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ScanTable {
        grid: grid.clone(),
        rows,
    })
}

/// A local minimum of a one-axis slice, refined off the grid.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SliceMinimum {
    pub grid_coordinate: f64,
    pub coordinate: f64,
    pub value: f64,
}

/// Local minima of `t ↦ IMSPE(design(origin + t·direction))` over the nodes of
/// `axis`, each refined by a double-double scalar search between its grid
/// neighbours. Singular nodes are never minima.
pub fn slice_minima(
    kernel: &KernelSpec,
    constraint: &Constraint,
    origin: &[f64],
    direction: &[f64],
    axis: &Axis,
) -> Result<Vec<SliceMinimum>> {
    if origin.len() != direction.len() {
        return Err(invalid("origin and direction differ in length"));
    }
    let at = |t: f64| -> Vec<f64> { origin.iter().zip(direction).map(|(o, d)| o + t * d).collect() };
    let nodes = axis.nodes();
    let cells = nodes
        .par_iter()
        .map(|&t| scan_point(kernel, constraint, &at(t), Precision::DoubleDouble))
        .collect::<Result<Vec<_>>>()?;
    let mut out = Vec::new();
    for k in 1..nodes.len().saturating_sub(1) {
        let (Some(l), Some(c), Some(r)) = (cells[k - 1].value(), cells[k].value(), cells[k + 1].value())
        else {
            continue;
        };
        if !(c < l && c <= r) {
            continue;
        }
        let f = |t: f64| scan_point_dd(kernel, constraint, &at(t)).unwrap_or(Dd::from(1e300));
        let m = brent(f, nodes[k - 1], nodes[k + 1], 1e-10, 500);
        out.push(SliceMinimum {
            grid_coordinate: nodes[k],
            coordinate: m.x,
            value: m.value.to_f64(),
        });
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Inversion-pair scenario and directional limits

/// A design made of fixed points plus a movable pair `x`, `−x`.
#[derive(Clone, Debug, PartialEq)]
pub struct InversionScenario {
    pub kernel: KernelSpec,
    pub fixed: Vec<Point>,
}

impl InversionScenario {
    pub fn new(kernel: KernelSpec, fixed: Vec<Point>) -> Result<Self> {
        if let Some(p) = fixed.iter().find(|p| p.dim() != kernel.dim()) {
            return Err(ImspeError::DimensionMismatch {
                expected: kernel.dim(),
                found: p.dim(),
            });
        }
        Ok(InversionScenario { kernel, fixed })
    }

    /// Gaussian kernel, θ = (0.064, 0.00016), fixed points (±0.767117, 0):
    /// IMSPE over the movable pair has a ridge along the first axis with a
    /// mild local maximum at the origin, and a valley along the second.
    pub fn four_point_example() -> Self {
        let kernel = KernelSpec::new(Family::GaussP2, vec![0.064, 0.00016]).expect("valid theta");
        let fixed = vec![
            Point::new(vec![0.767117, 0.0]).expect("in domain"),
            Point::new(vec![-0.767117, 0.0]).expect("in domain"),
        ];
        InversionScenario { kernel, fixed }
    }

    pub fn constraint(&self) -> Constraint {
        Constraint::InversionPairWithFixed(self.fixed.clone())
    }

    /// Double-double IMSPE with the movable point at `x`; `None` when the
    /// design is coincident or numerically singular.
    pub fn imspe(&self, x: &[f64]) -> Option<Dd> {
        scan_point_dd(&self.kernel, &self.constraint(), x)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DirectionProbe {
    pub direction: Vec<f64>,
    /// IMSPE at `center + h·direction` for each `h`; `None` where singular.
    pub values: Vec<Option<f64>>,
    /// Value at the last `h`.
    pub limit: Option<f64>,
    /// `|v(h_last) − v(h_previous)|`.
    pub residual: Option<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProbeReport {
    pub center: Vec<f64>,
    pub h: Vec<f64>,
    pub directions: Vec<DirectionProbe>,
    /// Largest pairwise difference of directional limits.
    pub max_gap: f64,
    /// Largest per-direction residual.
    pub max_residual: f64,
    /// `max_gap > 10·max_residual`: the limits depend on direction.
    pub discontinuous: bool,
}

/// Default step sequence `10⁻¹, …, 10⁻⁵`.
pub fn default_h_sequence() -> Vec<f64> {
    vec![1e-1, 1e-2, 1e-3, 1e-4, 1e-5]
}

/// Approaches `center` along each direction with the steps `h` (decreasing)
/// and compares the directional limits.
pub fn discontinuity_probe(
    scenario: &InversionScenario,
    center: &[f64],
    directions: &[Vec<f64>],
    h: &[f64],
) -> Result<ProbeReport> {
    let d = scenario.kernel.dim();
    if center.len() != d || directions.iter().any(|v| v.len() != d) {
        return Err(ImspeError::DimensionMismatch {
            expected: d,
            found: center.len(),
        });
    }
    if h.len() < 2 || h.windows(2).any(|w| !(w[1] < w[0])) || h.iter().any(|&x| !(x > 0.0)) {
        return Err(invalid("h must have at least two strictly decreasing positive steps"));
    }
    for v in directions {
        let norm = v.iter().map(|c| c * c).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > 1e-12 {
            return Err(invalid(format!("direction {v:?} is not a unit vector")));
        }
    }
    let probes: Vec<DirectionProbe> = directions
        .par_iter()
        .map(|dir| {
            let values: Vec<Option<f64>> = h
                .iter()
                .map(|&s| {
                    let x: Vec<f64> = center.iter().zip(dir).map(|(c, u)| c + s * u).collect();
                    scenario.imspe(&x).map(Dd::to_f64)
                })
                .collect();
            let n = values.len();
            let limit = values[n - 1];
            let residual = match (values[n - 2], values[n - 1]) {
                (Some(a), Some(b)) => Some((a - b).abs()),
                _ => None,
            };
            DirectionProbe {
                direction: dir.clone(),
                values,
                limit,
                residual,
            }
        })
        .collect();
    let limits: Vec<f64> = probes.iter().filter_map(|p| p.limit).collect();
    let mut max_gap = 0.0f64;
    for i in 0..limits.len() {
        for j in 0..i {
            max_gap = max_gap.max((limits[i] - limits[j]).abs());
        }
    }
    let max_residual = probes
        .iter()
        .map(|p| p.residual.unwrap_or(f64::INFINITY))
        .fold(0.0, f64::max);
    Ok(ProbeReport {
        center: center.to_vec(),
        h: h.to_vec(),
        discontinuous: limits.len() == probes.len() && max_gap > 10.0 * max_residual,
        directions: probes,
        max_gap,
        max_residual,
    })
}
