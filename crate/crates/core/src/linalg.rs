//! Dense symmetric linear algebra for the bordered systems
//!
//! ```text
//!     L = | 0  1ᵀ |
//!         | 1  V  |
//! ```
//!
//! with `V` a correlation matrix. `V` is symmetric positive definite for
//! distinct points, so `L` is solved through a Cholesky factorisation of `V`
//! and the scalar Schur complement `s = 1ᵀV⁻¹1`. The condition number of `L`
//! is estimated with Hager's 1-norm estimator.

use crate::real::Real;

/// Square row-major matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Real> Matrix<T> {
    pub fn zeros(n: usize) -> Self {
        Matrix {
            n,
            data: vec![T::zero(); n * n],
        }
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m.data[i * n + j] = f(i, j);
            }
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> T {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.n + j] = v;
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn norm1(&self) -> T {
        (0..self.n)
            .map(|j| (0..self.n).fold(T::zero(), |acc, i| acc + self.get(i, j).abs()))
            .fold(T::zero(), T::max)
    }

    pub fn map<U: Real>(&self, f: impl Fn(T) -> U) -> Matrix<U> {
        Matrix {
            n: self.n,
            data: self.data.iter().map(|&x| f(x)).collect(),
        }
    }
}

/// Lower-triangular Cholesky factor; `None` when a pivot is not positive.
pub fn cholesky<T: Real>(a: &Matrix<T>) -> Option<Matrix<T>> {
    let n = a.size();
    let mut l = Matrix::zeros(n);
    for j in 0..n {
        let mut d = a.get(j, j);
        for k in 0..j {
            d -= l.get(j, k) * l.get(j, k);
        }
        if !(d > T::zero()) {
            return None;
        }
        let d = d.sqrt();
        l.set(j, j, d);
        for i in j + 1..n {
            let mut s = a.get(i, j);
            for k in 0..j {
                s -= l.get(i, k) * l.get(j, k);
            }
            l.set(i, j, s / d);
        }
    }
    Some(l)
}

fn cholesky_solve<T: Real>(l: &Matrix<T>, b: &[T]) -> Vec<T> {
    let n = l.size();
    let mut y = b.to_vec();
    for i in 0..n {
        let mut s = y[i];
        for k in 0..i {
            s -= l.get(i, k) * y[k];
        }
        y[i] = s / l.get(i, i);
    }
    for i in (0..n).rev() {
        let mut s = y[i];
        for k in i + 1..n {
            s -= l.get(k, i) * y[k];
        }
        y[i] = s / l.get(i, i);
    }
    y
}

/// Factorisation of a bordered matrix `[[0, 1ᵀ], [1, V]]`.
#[derive(Clone, Debug)]
pub struct BorderedSolver<T> {
    chol: Matrix<T>,
    u: Vec<T>,
    s: T,
}

impl<T: Real> BorderedSolver<T> {
    /// Factorises the bordered matrix `l`; only its body `V` is read.
    pub fn new(l: &Matrix<T>) -> Option<Self> {
        let n = l.size() - 1;
        let v = Matrix::from_fn(n, |i, j| l.get(i + 1, j + 1));
        let chol = cholesky(&v)?;
        let u = cholesky_solve(&chol, &vec![T::one(); n]);
        let s = u.iter().fold(T::zero(), |acc, &x| acc + x);
        if !(s > T::zero()) {
            return None;
        }
        Some(BorderedSolver { chol, u, s })
    }

    /// Solves `L x = rhs` for `rhs` of length `n + 1`.
    pub fn solve(&self, rhs: &[T]) -> Vec<T> {
        let n = self.u.len();
        // α = (1ᵀV⁻¹ρ − ρ₀)/s, β = V⁻¹(ρ − α1)
        let w = cholesky_solve(&self.chol, &rhs[1..]);
        let one_w = w.iter().fold(T::zero(), |acc, &x| acc + x);
        let alpha = (one_w - rhs[0]) / self.s;
        let mut out = Vec::with_capacity(n + 1);
        out.push(alpha);
        out.extend(w.iter().zip(&self.u).map(|(&wi, &ui)| wi - alpha * ui));
        out
    }

    /// `tr(L⁻¹R)` as the sum of the diagonal of `X = L⁻¹R`.
    pub fn trace_product(&self, r: &Matrix<T>) -> T {
        let m = r.size();
        let mut tr = T::zero();
        for j in 0..m {
            let col: Vec<T> = (0..m).map(|i| r.get(i, j)).collect();
            tr += self.solve(&col)[j];
        }
        tr
    }

    /// Explicit inverse, column by column. Used only for cross-checks.
    pub fn inverse(&self) -> Matrix<T> {
        let m = self.u.len() + 1;
        let mut inv = Matrix::zeros(m);
        for j in 0..m {
            let mut e = vec![T::zero(); m];
            e[j] = T::one();
            for (i, v) in self.solve(&e).into_iter().enumerate() {
                inv.set(i, j, v);
            }
        }
        inv
    }

    /// Hager's estimate of `‖L⁻¹‖₁` (L symmetric, so `L⁻ᵀ = L⁻¹`).
    pub fn inverse_norm1_estimate(&self) -> f64 {
        let m = self.u.len() + 1;
        let mut x = vec![T::of(1.0 / m as f64); m];
        let mut est = 0.0;
        let mut last_j = usize::MAX;
        for _ in 0..5 {
            let y = self.solve(&x);
            est = y.iter().map(|v| v.to_f64().abs()).sum::<f64>();
            let xi: Vec<T> = y
                .iter()
                .map(|v| if v.to_f64() >= 0.0 { T::one() } else { -T::one() })
                .collect();
            let z = self.solve(&xi);
            let (j, zmax) = z
                .iter()
                .map(|v| v.to_f64().abs())
                .enumerate()
                .fold((0, f64::NEG_INFINITY), |best, (i, v)| if v > best.1 { (i, v) } else { best });
            let ztx: f64 = z.iter().zip(&x).map(|(a, b)| a.to_f64() * b.to_f64()).sum();
            if zmax <= ztx || j == last_j {
                break;
            }
            last_j = j;
            x = vec![T::zero(); m];
            x[j] = T::one();
        }
        est
    }
}

/// `Σᵢⱼ Aᵢⱼ Bᵢⱼ`, which equals `tr(AB)` when `B` is symmetric.
pub fn elementwise_product_sum<T: Real>(a: &Matrix<T>, b: &Matrix<T>) -> T {
    let n = a.size();
    let mut acc = T::zero();
    for i in 0..n {
        for j in 0..n {
            acc += a.get(i, j) * b.get(i, j);
        }
    }
    acc
}
