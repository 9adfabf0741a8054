//! Scalar arithmetic tower: plain floats, first-order duals and second-order
//! jets, all behind one [`Scalar`] trait so that every pointwise formula in
//! the crate can be evaluated with or without derivative propagation.
//!
//! Derivative lanes are fixed at four (the largest chart dimension); unused
//! lanes stay zero for lower-dimensional charts.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Number of derivative lanes carried by [`D1`] and [`Jet2`].
pub const LANES: usize = 4;

/// A scalar that supports the elementary functions used by metric and field
/// expressions. Implemented by `f64`, [`D1`] and [`Jet2`]; the latter two are
/// generic over their base scalar, so nesting (`Jet2<D1<f64>>`,
/// `D1<D1<f64>>`) yields higher derivative orders for free.
pub trait Scalar:
    Copy
    + Debug
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_f64(x: f64) -> Self;

    /// Value part, descending through nested jets.
    fn val(self) -> f64;

    fn recip(self) -> Self;
    fn sqrt(self) -> Self;
    fn sin(self) -> Self;
    fn cos(self) -> Self;
    fn exp(self) -> Self;
    fn ln(self) -> Self;
    fn sinh(self) -> Self;
    fn cosh(self) -> Self;

    fn zero() -> Self {
        Self::from_f64(0.0)
    }
    fn one() -> Self {
        Self::from_f64(1.0)
    }
    fn tan(self) -> Self {
        self.sin() / self.cos()
    }

    /// Integer power by repeated squaring; negative exponents go through
    /// `recip`, so they inherit its derivative rules.
    fn powi(self, n: i32) -> Self {
        if n < 0 {
            return self.powi(-n).recip();
        }
        let mut acc = Self::one();
        let mut base = self;
        let mut e = n as u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            e >>= 1;
            if e > 0 {
                base = base * base;
            }
        }
        acc
    }

    /// General power via `exp(y ln x)`; only valid for positive base.
    fn powf(self, y: Self) -> Self {
        (y * self.ln()).exp()
    }
}

impl Scalar for f64 {
    fn from_f64(x: f64) -> Self {
        x
    }
    fn val(self) -> f64 {
        self
    }
    fn recip(self) -> Self {
        1.0 / self
    }
    fn sqrt(self) -> Self {
        f64::sqrt(self)
    }
    fn sin(self) -> Self {
        f64::sin(self)
    }
    fn cos(self) -> Self {
        f64::cos(self)
    }
    fn exp(self) -> Self {
        f64::exp(self)
    }
    fn ln(self) -> Self {
        f64::ln(self)
    }
    fn sinh(self) -> Self {
        f64::sinh(self)
    }
    fn cosh(self) -> Self {
        f64::cosh(self)
    }
    fn tan(self) -> Self {
        f64::tan(self)
    }
}

/// First-order dual number: value plus one gradient lane per coordinate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct D1<T: Scalar = f64> {
    pub v: T,
    pub d: [T; LANES],
}

impl<T: Scalar> D1<T> {
    pub fn new(v: T, d: [T; LANES]) -> Self {
        Self { v, d }
    }

    pub fn constant(v: T) -> Self {
        Self { v, d: [T::zero(); LANES] }
    }

    /// Seed for the coordinate `mu` (0-based).
    pub fn var(v: T, mu: usize) -> Self {
        let mut d = [T::zero(); LANES];
        d[mu] = T::one();
        Self { v, d }
    }

    /// Chain rule for a unary function with derivative `df` at `self.v`.
    fn lift(self, f: T, df: T) -> Self {
        Self { v: f, d: self.d.map(|x| x * df) }
    }
}

impl<T: Scalar> Add for D1<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let mut d = self.d;
        for (a, b) in d.iter_mut().zip(o.d) {
            *a = *a + b;
        }
        Self { v: self.v + o.v, d }
    }
}

impl<T: Scalar> Sub for D1<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        let mut d = self.d;
        for (a, b) in d.iter_mut().zip(o.d) {
            *a = *a - b;
        }
        Self { v: self.v - o.v, d }
    }
}

impl<T: Scalar> Mul for D1<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let mut d = [T::zero(); LANES];
        for i in 0..LANES {
            d[i] = self.d[i] * o.v + self.v * o.d[i];
        }
        Self { v: self.v * o.v, d }
    }
}

impl<T: Scalar> Div for D1<T> {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        self * o.recip()
    }
}

impl<T: Scalar> Neg for D1<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self { v: -self.v, d: self.d.map(|x| -x) }
    }
}

impl<T: Scalar> Scalar for D1<T> {
    fn from_f64(x: f64) -> Self {
        Self::constant(T::from_f64(x))
    }
    fn val(self) -> f64 {
        self.v.val()
    }
    fn recip(self) -> Self {
        let r = self.v.recip();
        self.lift(r, -(r * r))
    }
    fn sqrt(self) -> Self {
        let s = self.v.sqrt();
        self.lift(s, (s + s).recip())
    }
    fn sin(self) -> Self {
        self.lift(self.v.sin(), self.v.cos())
    }
    fn cos(self) -> Self {
        self.lift(self.v.cos(), -self.v.sin())
    }
    fn exp(self) -> Self {
        let e = self.v.exp();
        self.lift(e, e)
    }
    fn ln(self) -> Self {
        self.lift(self.v.ln(), self.v.recip())
    }
    fn sinh(self) -> Self {
        self.lift(self.v.sinh(), self.v.cosh())
    }
    fn cosh(self) -> Self {
        self.lift(self.v.cosh(), self.v.sinh())
    }
}

/// Second-order jet: value, gradient and Hessian. The Hessian is stored as a
/// full matrix but every unordered pair is computed once and mirrored, so
/// `h[i][j] == h[j][i]` holds bit-exactly.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Jet2<T: Scalar = f64> {
    pub v: T,
    pub g: [T; LANES],
    pub h: [[T; LANES]; LANES],
}

impl<T: Scalar> Jet2<T> {
    pub fn constant(v: T) -> Self {
        Self { v, g: [T::zero(); LANES], h: [[T::zero(); LANES]; LANES] }
    }

    /// Seed for the coordinate `mu` (0-based).
    pub fn var(v: T, mu: usize) -> Self {
        let mut g = [T::zero(); LANES];
        g[mu] = T::one();
        Self { v, g, h: [[T::zero(); LANES]; LANES] }
    }

    /// Chain rule for a unary function: `f`, `df`, `ddf` evaluated at `self.v`.
    fn lift(self, f: T, df: T, ddf: T) -> Self {
        let g = self.g.map(|x| x * df);
        let mut h = [[T::zero(); LANES]; LANES];
        for i in 0..LANES {
            for j in i..LANES {
                let v = df * self.h[i][j] + ddf * self.g[i] * self.g[j];
                h[i][j] = v;
                h[j][i] = v;
            }
        }
        Self { v: f, g, h }
    }
}

impl<T: Scalar> Add for Jet2<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let mut r = self;
        r.v = r.v + o.v;
        for i in 0..LANES {
            r.g[i] = r.g[i] + o.g[i];
            for j in 0..LANES {
                r.h[i][j] = r.h[i][j] + o.h[i][j];
            }
        }
        r
    }
}

impl<T: Scalar> Sub for Jet2<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        let mut r = self;
        r.v = r.v - o.v;
        for i in 0..LANES {
            r.g[i] = r.g[i] - o.g[i];
            for j in 0..LANES {
                r.h[i][j] = r.h[i][j] - o.h[i][j];
            }
        }
        r
    }
}

impl<T: Scalar> Mul for Jet2<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let v = self.v * o.v;
        let mut g = [T::zero(); LANES];
        for i in 0..LANES {
            g[i] = self.g[i] * o.v + self.v * o.g[i];
        }
        let mut h = [[T::zero(); LANES]; LANES];
        for i in 0..LANES {
            for j in i..LANES {
                let x = self.h[i][j] * o.v
                    + self.g[i] * o.g[j]
                    + self.g[j] * o.g[i]
                    + self.v * o.h[i][j];
                h[i][j] = x;
                h[j][i] = x;
            }
        }
        Self { v, g, h }
    }
}

impl<T: Scalar> Div for Jet2<T> {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        self * o.recip()
    }
}

impl<T: Scalar> Neg for Jet2<T> {
    type Output = Self;
    fn neg(self) -> Self {
        let mut r = self;
        r.v = -r.v;
        for i in 0..LANES {
            r.g[i] = -r.g[i];
            for j in 0..LANES {
                r.h[i][j] = -r.h[i][j];
            }
        }
        r
    }
}

impl<T: Scalar> Scalar for Jet2<T> {
    fn from_f64(x: f64) -> Self {
        Self::constant(T::from_f64(x))
    }
    fn val(self) -> f64 {
        self.v.val()
    }
    fn recip(self) -> Self {
        let r = self.v.recip();
        let r2 = r * r;
        self.lift(r, -r2, (r2 * r) + (r2 * r))
    }
    fn sqrt(self) -> Self {
        let s = self.v.sqrt();
        let df = (s + s).recip();
        // f'' = -1/(4 v^{3/2})
        let ddf = -(df * self.v.recip()) * T::from_f64(0.5);
        self.lift(s, df, ddf)
    }
    fn sin(self) -> Self {
        let (s, c) = (self.v.sin(), self.v.cos());
        self.lift(s, c, -s)
    }
    fn cos(self) -> Self {
        let (s, c) = (self.v.sin(), self.v.cos());
        self.lift(c, -s, -c)
    }
    fn exp(self) -> Self {
        let e = self.v.exp();
        self.lift(e, e, e)
    }
    fn ln(self) -> Self {
        let r = self.v.recip();
        self.lift(self.v.ln(), r, -(r * r))
    }
    fn sinh(self) -> Self {
        let (s, c) = (self.v.sinh(), self.v.cosh());
        self.lift(s, c, s)
    }
    fn cosh(self) -> Self {
        let (s, c) = (self.v.sinh(), self.v.cosh());
        self.lift(c, s, c)
    }
}

/// Complex number over any [`Scalar`], so forms keep derivative lanes in
/// both real and imaginary parts.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Cplx<T: Scalar = f64> {
    pub re: T,
    pub im: T,
}

pub type C64 = Cplx<f64>;

impl<T: Scalar> Cplx<T> {
    pub fn new(re: T, im: T) -> Self {
        Self { re, im }
    }
    pub fn real(re: T) -> Self {
        Self { re, im: T::zero() }
    }
    pub fn from_f64s(re: f64, im: f64) -> Self {
        Self { re: T::from_f64(re), im: T::from_f64(im) }
    }
    pub fn zero() -> Self {
        Self::real(T::zero())
    }
    pub fn one() -> Self {
        Self::real(T::one())
    }
    pub fn i() -> Self {
        Self { re: T::zero(), im: T::one() }
    }
    pub fn conj(self) -> Self {
        Self { re: self.re, im: -self.im }
    }
    pub fn scale(self, s: T) -> Self {
        Self { re: self.re * s, im: self.im * s }
    }
    /// Modulus of the value part.
    pub fn abs_val(self) -> f64 {
        self.re.val().hypot(self.im.val())
    }
    pub fn is_zero_val(self) -> bool {
        self.re.val() == 0.0 && self.im.val() == 0.0
    }
}

impl<T: Scalar> Add for Cplx<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self { re: self.re + o.re, im: self.im + o.im }
    }
}

impl<T: Scalar> Sub for Cplx<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self { re: self.re - o.re, im: self.im - o.im }
    }
}

impl<T: Scalar> Mul for Cplx<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self {
            re: self.re * o.re - self.im * o.im,
            im: self.re * o.im + self.im * o.re,
        }
    }
}

impl<T: Scalar> Div for Cplx<T> {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        let den = (o.re * o.re + o.im * o.im).recip();
        Self {
            re: (self.re * o.re + self.im * o.im) * den,
            im: (self.im * o.re - self.re * o.im) * den,
        }
    }
}

impl<T: Scalar> Neg for Cplx<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self { re: -self.re, im: -self.im }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type D = D1<f64>;
    type J = Jet2<f64>;

    fn f_test<T: Scalar>(x: T, y: T) -> T {
        // mildly nasty composite touching every elementary function
        (x * y).sin() + (x.cosh() * y.sqrt()).ln() + x.exp() / (T::one() + y * y)
            - x.powi(3) * y.tan().sinh()
    }

    #[test]
    fn d1_matches_finite_differences() {
        let (x0, y0) = (0.37, 1.21);
        let fx = f_test(D::var(x0, 0), D::constant(y0));
        let h = 1e-6;
        let fd = (f_test(x0 + h, y0) - f_test(x0 - h, y0)) / (2.0 * h);
        assert!((fx.d[0] - fd).abs() < 1e-8, "{} vs {}", fx.d[0], fd);
        assert_eq!(fx.d[1], 0.0);
    }

    #[test]
    fn jet2_matches_finite_differences() {
        let (x0, y0) = (0.37, 1.21);
        let j = f_test(J::var(x0, 0), J::var(y0, 1));
        let h = 1e-4;
        let fdxx = (f_test(x0 + h, y0) - 2.0 * f_test(x0, y0) + f_test(x0 - h, y0)) / (h * h);
        let fdxy = (f_test(x0 + h, y0 + h) - f_test(x0 + h, y0 - h) - f_test(x0 - h, y0 + h)
            + f_test(x0 - h, y0 - h))
            / (4.0 * h * h);
        assert!((j.h[0][0] - fdxx).abs() < 1e-5 * (1.0 + fdxx.abs()));
        assert!((j.h[0][1] - fdxy).abs() < 1e-5 * (1.0 + fdxy.abs()));
        assert_eq!(j.h[0][1], j.h[1][0]);
    }

    #[test]
    fn nested_jet_gives_third_derivative() {
        // f(x) = x^5: f'''(x) = 60 x^2
        let x0 = 0.8;
        let seed: Jet2<D> = Jet2 {
            v: D::var(x0, 0),
            g: {
                let mut g = [D::constant(0.0); LANES];
                g[0] = D::constant(1.0);
                g
            },
            h: [[D::constant(0.0); LANES]; LANES],
        };
        let r = seed.powi(5);
        let third = r.h[0][0].d[0];
        assert!((third - 60.0 * x0 * x0).abs() < 1e-12);
    }

    #[test]
    fn jet_powi_negative_exponent() {
        let j = J::var(2.0, 0).powi(-2);
        assert!((j.v - 0.25).abs() < 1e-15);
        assert!((j.g[0] - (-2.0 / 8.0)).abs() < 1e-13);
    }

    #[test]
    fn cplx_field_ops() {
        let a = C64::from_f64s(1.0, 2.0);
        let b = C64::from_f64s(-0.5, 0.25);
        let r = a * b / b;
        assert!((r.re - a.re).abs() < 1e-14 && (r.im - a.im).abs() < 1e-14);
        assert_eq!((C64::i() * C64::i()).re, -1.0);
    }
}
