//! Double-double arithmetic: an unevaluated sum `hi + lo` of two `f64` with
//! `|lo| <= ulp(hi)/2`, giving about 106 bits of significand.
//!
//! The algorithms follow the classic error-free transformations (Knuth
//! two-sum, fused multiply-add two-product). Transcendentals use argument
//! reduction plus Taylor or continued-fraction expansions evaluated entirely
//! in double-double.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::real::Real;

#[derive(Clone, Copy, Default, PartialEq)]
pub struct Dd {
    hi: f64,
    lo: f64,
}

const PI: Dd = Dd::from_parts(3.141592653589793, 1.2246467991473532e-16);
const LN2: Dd = Dd::from_parts(0.6931471805599453, 2.3190468138462996e-17);
const TWO_OVER_SQRT_PI: Dd = Dd::from_parts(1.1283791670955126, 1.533545961316588e-17);
const ONE_OVER_SQRT_PI: Dd = Dd::from_parts(0.5641895835477563, 7.66772980658294e-18);

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let e = b - (s - a);
    (s, e)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let e = a.mul_add(b, -p);
    (p, e)
}

/// Multiply by `2^k` without intermediate overflow or premature underflow.
fn ldexp(x: f64, k: i32) -> f64 {
    if k > 1000 {
        x * 2f64.powi(1000) * 2f64.powi(k - 1000)
    } else if k < -1000 {
        x * 2f64.powi(-1000) * 2f64.powi(k + 1000)
    } else {
        x * 2f64.powi(k)
    }
}

impl Dd {
    pub const fn from_parts(hi: f64, lo: f64) -> Self {
        Dd { hi, lo }
    }

    pub fn hi(self) -> f64 {
        self.hi
    }

    pub fn lo(self) -> f64 {
        self.lo
    }

    fn renormalized(hi: f64, lo: f64) -> Self {
        let (s, e) = quick_two_sum(hi, lo);
        Dd { hi: s, lo: e }
    }

    fn scale2(self, k: i32) -> Self {
        Dd {
            hi: ldexp(self.hi, k),
            lo: ldexp(self.lo, k),
        }
    }

    fn sqr(self) -> Self {
        let (p, mut e) = two_prod(self.hi, self.hi);
        e += 2.0 * self.hi * self.lo;
        e += self.lo * self.lo;
        Dd::renormalized(p, e)
    }

    /// Taylor series for `e^r - 1`, valid for `|r|` well below one.
    fn expm1_reduced(r: Dd) -> Dd {
        let mut sum = r;
        let mut term = r;
        let mut k = 2.0;
        loop {
            term = term * r / Dd::from(k);
            sum += term;
            if term.hi.abs() <= 1e-36 * sum.hi.abs() {
                break;
            }
            k += 1.0;
        }
        sum
    }

    /// Returns `(e^x - 1)` evaluated with the reduction `x = k ln2 + 512 r`.
    fn exp_parts(self) -> (Dd, i32) {
        let k = (self.hi / LN2.hi).round();
        let r = (self - LN2 * Dd::from(k)).scale2(-9);
        let mut s = Dd::expm1_reduced(r);
        for _ in 0..9 {
            // (1+s)^2 - 1 = 2s + s^2
            s = s.scale2(1) + s.sqr();
        }
        (s, k as i32)
    }

    fn erf_series(self) -> Dd {
        // erf(x) = 2/sqrt(pi) * x * exp(-x^2) * sum_n (2x^2)^n / (1*3*...*(2n+1))
        let x2 = self.sqr();
        let two_x2 = x2.scale2(1);
        let mut term = Dd::from(1.0);
        let mut sum = term;
        let mut n = 0.0;
        loop {
            n += 1.0;
            term = term * two_x2 / Dd::from(2.0 * n + 1.0);
            sum += term;
            if term.hi <= 1e-36 * sum.hi {
                break;
            }
        }
        TWO_OVER_SQRT_PI * self * (-x2).exp() * sum
    }

    fn erfc_continued_fraction(self) -> Dd {
        // erfc(x) = exp(-x^2)/sqrt(pi) / (x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
        let x = self.hi;
        let depth = ((37.0 / x).powi(2) * 0.5).ceil() as usize + 12;
        let mut f = self;
        for k in (1..=depth).rev() {
            f = self + Dd::from(k as f64 * 0.5) / f;
        }
        ONE_OVER_SQRT_PI * (-self.sqr()).exp() / f
    }
}

impl From<f64> for Dd {
    fn from(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }
}

impl fmt::Debug for Dd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dd({:e} + {:e})", self.hi, self.lo)
    }
}

impl fmt::Display for Dd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&(self.hi + self.lo), f)
    }
}

impl PartialOrd for Dd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&other.lo),
            ord => ord,
        }
    }
}

impl Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Add for Dd {
    type Output = Dd;
    fn add(self, b: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, b.hi);
        let (t1, t2) = two_sum(self.lo, b.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        Dd::renormalized(s1, s2 + t2)
    }
}

impl Sub for Dd {
    type Output = Dd;
    fn sub(self, b: Dd) -> Dd {
        self + (-b)
    }
}

impl Mul for Dd {
    type Output = Dd;
    fn mul(self, b: Dd) -> Dd {
        let (p, mut e) = two_prod(self.hi, b.hi);
        e += self.hi * b.lo + self.lo * b.hi;
        Dd::renormalized(p, e)
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, b: Dd) -> Dd {
        let q1 = self.hi / b.hi;
        let r = self - b * Dd::from(q1);
        let q2 = r.hi / b.hi;
        let r = r - b * Dd::from(q2);
        let q3 = r.hi / b.hi;
        let (q1, q2) = quick_two_sum(q1, q2);
        Dd { hi: q1, lo: q2 } + Dd::from(q3)
    }
}

impl AddAssign for Dd {
    fn add_assign(&mut self, b: Dd) {
        *self = *self + b;
    }
}

impl SubAssign for Dd {
    fn sub_assign(&mut self, b: Dd) {
        *self = *self - b;
    }
}

impl MulAssign for Dd {
    fn mul_assign(&mut self, b: Dd) {
        *self = *self * b;
    }
}

impl DivAssign for Dd {
    fn div_assign(&mut self, b: Dd) {
        *self = *self / b;
    }
}

impl Real for Dd {
    const EPSILON: f64 = 4.93038065763132e-32;

    fn of(x: f64) -> Self {
        Dd::from(x)
    }

    fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    fn abs(self) -> Self {
        if self.hi < 0.0 {
            -self
        } else {
            self
        }
    }

    fn sqrt(self) -> Self {
        if self.hi <= 0.0 {
            return Dd::from(self.hi.sqrt());
        }
        let x = 1.0 / self.hi.sqrt();
        let ax = self.hi * x;
        let residual = self - Dd::from(ax).sqr();
        Dd::from(ax) + Dd::from(residual.hi * x * 0.5)
    }

    fn exp(self) -> Self {
        if self.hi > 709.7 {
            return Dd::from(f64::INFINITY);
        }
        if self.hi < -745.2 {
            return Dd::from(0.0);
        }
        let (s, k) = self.exp_parts();
        (s + Dd::from(1.0)).scale2(k)
    }

    fn exp_m1(self) -> Self {
        if self.hi.abs() < 0.5 * LN2.hi {
            let r = self.scale2(-9);
            let mut s = Dd::expm1_reduced(r);
            for _ in 0..9 {
                s = s.scale2(1) + s.sqr();
            }
            s
        } else {
            self.exp() - Dd::from(1.0)
        }
    }

    fn erf(self) -> Self {
        if self.hi < 0.0 {
            return -(-self).erf();
        }
        if self.hi == 0.0 {
            return Dd::from(0.0);
        }
        if self.hi < 2.5 {
            self.erf_series()
        } else {
            Dd::from(1.0) - self.erfc_continued_fraction()
        }
    }

    fn erfc(self) -> Self {
        if self.hi < 2.5 {
            Dd::from(1.0) - self.erf()
        } else if self.hi > 27.3 {
            Dd::from(0.0)
        } else {
            self.erfc_continued_fraction()
        }
    }

    fn pi() -> Self {
        PI
    }
}
