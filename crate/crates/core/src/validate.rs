//! Closed forms against the quadrature oracle over a deterministic
//! low-discrepancy sample, with a worst-case summary per form.

use rayon::prelude::*;

use crate::error::Result;
use crate::integrals::{i1, i2, i3, i4, i5, i6, i7, i8, j1, j2, j_border, j_inner, r_border, r_inner};
use crate::kernels::{Family, KernelSpec, Point};
use crate::oracle::{oracle_r_element, oracle_unit_element, QuadratureSettings};

/// Absolute floor and relative factor of the acceptance bound
/// `|closed − oracle| ≤ max(ABS, REL·|closed|)`.
pub const ABS_TOLERANCE: f64 = 1e-9;
pub const REL_TOLERANCE: f64 = 1e-9;

/// Samples in the full suite and in the quick suite.
pub const FULL_SAMPLES: usize = 512;
pub const QUICK_SAMPLES: usize = 64;

/// Radical inverse of `i` in `base`.
pub fn radical_inverse(mut i: u64, base: u64) -> f64 {
    let inv = 1.0 / base as f64;
    let mut out = 0.0;
    let mut f = inv;
    while i > 0 {
        out += f * (i % base) as f64;
        i /= base;
        f *= inv;
    }
    out
}

const PRIMES: [u64; 8] = [2, 3, 5, 7, 11, 13, 17, 19];

/// Point `i ≥ 1` of the Halton sequence in up to 8 dimensions.
pub fn halton(i: u64, dims: usize) -> Vec<f64> {
    PRIMES[..dims].iter().map(|&b| radical_inverse(i, b)).collect()
}

/// θ log-uniform in `[0.01, 100]` from `u ∈ [0, 1)`.
pub fn theta_from_unit(u: f64) -> f64 {
    10f64.powf(-2.0 + 4.0 * u)
}

#[derive(Clone, Debug, PartialEq)]
pub struct CaseSummary {
    pub name: String,
    pub samples: usize,
    pub worst_abs: f64,
    pub worst_rel: f64,
    /// Arguments at the worst absolute error: `(a, b, θ)` for one-dimensional
    /// forms, coordinates then θ for assemblies.
    pub worst_args: Vec<f64>,
    pub breaches: usize,
}

impl CaseSummary {
    pub fn passed(&self) -> bool {
        self.breaches == 0
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ValidationReport {
    pub cases: Vec<CaseSummary>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(CaseSummary::passed)
    }
}

struct Sample {
    closed: f64,
    oracle: f64,
    args: Vec<f64>,
}

fn summarise(name: &str, samples: Vec<Sample>) -> CaseSummary {
    let mut s = CaseSummary {
        name: name.to_string(),
        samples: samples.len(),
        worst_abs: 0.0,
        worst_rel: 0.0,
        worst_args: Vec::new(),
        breaches: 0,
    };
    for x in samples {
        let err = (x.closed - x.oracle).abs();
        let rel = err / x.closed.abs();
        if !(err <= ABS_TOLERANCE.max(REL_TOLERANCE * x.closed.abs())) {
            s.breaches += 1;
        }
        if !(err <= s.worst_abs) || s.worst_args.is_empty() {
            s.worst_abs = err;
            s.worst_args = x.args;
        }
        s.worst_rel = s.worst_rel.max(rel);
    }
    s
}

type CaseFn = dyn Fn(&[f64], &QuadratureSettings) -> Result<Sample> + Sync;

fn pm1(u: f64) -> f64 {
    -1.0 + 2.0 * u
}

fn one_d_border(
    family: Family,
    closed: fn(f64, f64) -> Result<f64>,
) -> impl Fn(&[f64], &QuadratureSettings) -> Result<Sample> + Sync {
    move |u, q| {
        let (a, t) = (pm1(u[0]), theta_from_unit(u[2]));
        let k = KernelSpec::new(family, vec![t])?;
        let p = Point::new(vec![a])?;
        Ok(Sample {
            closed: closed(a, t)?,
            oracle: oracle_r_element(&k, &p, None, q)?,
            args: vec![a, t],
        })
    }
}

fn one_d_pair(
    family: Family,
    closed: fn(f64, f64, f64) -> Result<f64>,
) -> impl Fn(&[f64], &QuadratureSettings) -> Result<Sample> + Sync {
    move |u, q| {
        let (a, b, t) = (pm1(u[0]), pm1(u[1]), theta_from_unit(u[2]));
        let k = KernelSpec::new(family, vec![t])?;
        let (pa, pb) = (Point::new(vec![a])?, Point::new(vec![b])?);
        Ok(Sample {
            closed: closed(a, b, t)?,
            oracle: oracle_r_element(&k, &pa, Some(&pb), q)?,
            args: vec![a, b, t],
        })
    }
}

fn assembly(family: Family, inner: bool) -> impl Fn(&[f64], &QuadratureSettings) -> Result<Sample> + Sync {
    move |u, q| {
        let theta = vec![theta_from_unit(u[2]), theta_from_unit(u[5])];
        let k = KernelSpec::new(family, theta.clone())?;
        let xi = Point::new(vec![pm1(u[0]), pm1(u[3])])?;
        let xj = Point::new(vec![pm1(u[1]), pm1(u[4])])?;
        let (closed, oracle, mut args) = if inner {
            (
                r_inner::<f64>(&k, &xi, &xj)?,
                oracle_r_element(&k, &xi, Some(&xj), q)?,
                [xi.coords(), xj.coords()].concat(),
            )
        } else {
            (
                r_border::<f64>(&k, &xi)?,
                oracle_r_element(&k, &xi, None, q)?,
                xi.coords().to_vec(),
            )
        };
        args.extend(theta);
        Ok(Sample { closed, oracle, args })
    }
}

fn unit_assembly(inner: bool) -> impl Fn(&[f64], &QuadratureSettings) -> Result<Sample> + Sync {
    move |u, q| {
        let theta = vec![theta_from_unit(u[2]), theta_from_unit(u[5])];
        let xi = vec![u[0], u[3]];
        let xj = vec![u[1], u[4]];
        let (closed, oracle, mut args) = if inner {
            (
                j_inner::<f64>(&theta, &xi, &xj)?,
                oracle_unit_element(&theta, &xi, Some(&xj), q)?,
                [xi, xj].concat(),
            )
        } else {
            (
                j_border::<f64>(&theta, &xi)?,
                oracle_unit_element(&theta, &xi, None, q)?,
                xi,
            )
        };
        args.extend(theta);
        Ok(Sample { closed, oracle, args })
    }
}

fn cases() -> Vec<(&'static str, Box<CaseFn>)> {
    vec![
        ("i1", Box::new(one_d_border(Family::ExpP1, i1::<f64>))),
        ("i2", Box::new(one_d_pair(Family::ExpP1, i2::<f64>))),
        ("i3", Box::new(one_d_border(Family::GaussP2, i3::<f64>))),
        ("i4", Box::new(one_d_pair(Family::GaussP2, i4::<f64>))),
        ("i5", Box::new(one_d_border(Family::Matern32, i5::<f64>))),
        ("i6", Box::new(one_d_pair(Family::Matern32, i6::<f64>))),
        ("i7", Box::new(one_d_border(Family::Matern52, i7::<f64>))),
        ("i8", Box::new(one_d_pair(Family::Matern52, i8::<f64>))),
        (
            "j1",
            Box::new(|u: &[f64], q: &QuadratureSettings| {
                let (a, t) = (u[0], theta_from_unit(u[2]));
                Ok(Sample {
                    closed: j1::<f64>(a, t)?,
                    oracle: oracle_unit_element(&[t], &[a], None, q)?,
                    args: vec![a, t],
                })
            }),
        ),
        (
            "j2",
            Box::new(|u: &[f64], q: &QuadratureSettings| {
                let (a, b, t) = (u[0], u[1], theta_from_unit(u[2]));
                Ok(Sample {
                    closed: j2::<f64>(a, b, t)?,
                    oracle: oracle_unit_element(&[t], &[a], Some(&[b]), q)?,
                    args: vec![a, b, t],
                })
            }),
        ),
        ("r_border exp-p1 d=2", Box::new(assembly(Family::ExpP1, false))),
        ("j_border d=2", Box::new(unit_assembly(false))),
        ("r_inner exp-p1 d=2", Box::new(assembly(Family::ExpP1, true))),
        ("j_inner d=2", Box::new(unit_assembly(true))),
        ("r_border gauss-p2 d=2", Box::new(assembly(Family::GaussP2, false))),
        ("r_inner gauss-p2 d=2", Box::new(assembly(Family::GaussP2, true))),
        ("r_border matern-3-2 d=2", Box::new(assembly(Family::Matern32, false))),
        ("r_inner matern-3-2 d=2", Box::new(assembly(Family::Matern32, true))),
        ("r_border matern-5-2 d=2", Box::new(assembly(Family::Matern52, false))),
        ("r_inner matern-5-2 d=2", Box::new(assembly(Family::Matern52, true))),
    ]
}

/// Every closed-form integral and R-element assembly against quadrature at
/// Halton points `1..=samples` (six dimensions: coordinates and θ values).
pub fn run_validation(samples: usize, settings: &QuadratureSettings) -> Result<ValidationReport> {
    let points: Vec<Vec<f64>> = (1..=samples as u64).map(|i| halton(i, 6)).collect();
    let mut out = Vec::new();
    for (name, case) in cases() {
        let results = points
            .par_iter()
            .map(|u| case(u, settings))
            .collect::<Result<Vec<_>>>()?;
        out.push(summarise(name, results));
    }
    Ok(ValidationReport { cases: out })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn halton_first_points() {
        assert_eq!(halton(1, 2), vec![0.5, 1.0 / 3.0]);
        assert_eq!(halton(2, 2), vec![0.25, 2.0 / 3.0]);
        assert_eq!(radical_inverse(3, 2), 0.75);
    }

    #[test]
    fn quick_suite_passes() {
        let r = run_validation(8, &QuadratureSettings::default()).unwrap();
        assert_eq!(r.cases.len(), 20);
        assert!(r.passed(), "{:#?}", r);
    }
}
