//! Pointwise algebra of nonhomogeneous differential forms.
//!
//! A form is stored as `2^n` complex coefficients indexed by blade bitmask
//! (bit `i` set means `dx^{i+1}` participates), in the strictly-increasing
//! component convention, so no factorial bookkeeping appears anywhere.
//!
//! Three independent products are provided: the grade-pair table product
//! (the implementation of record for `n = 4`), a generic blade-contraction
//! product valid for any `n`, and a gamma-matrix representation used as a
//! test oracle. They are required to agree to `1e-11`.

mod gamma;

pub use gamma::{
    gamma_rep, mat_add, mat_id, mat_max_abs, mat_mul, mat_scale, mat_sub, mat_trace, CMat4,
    GammaRep,
};

use crate::geometry::MetricData;
use crate::num::{Cplx, Scalar, D1};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScalarKind {
    Real,
    Complex,
}

impl ScalarKind {
    pub fn join(self, other: ScalarKind) -> ScalarKind {
        if self == ScalarKind::Real && other == ScalarKind::Real {
            ScalarKind::Real
        } else {
            ScalarKind::Complex
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AlgebraError {
    #[error("input has non-grade-2 content of magnitude {0:e}")]
    GradeError(f64),
    #[error("conjugator does not square to one: residual {0:e}")]
    BadConjugator(f64),
    #[error("exponential series did not converge after {0} terms")]
    NoConvergence(usize),
    #[error("form is not invertible (residual {0:e})")]
    NotInvertible(f64),
    #[error("orthonormalization degenerated at step {idx}: pivot {value:e}")]
    FrameError { idx: usize, value: f64 },
}

/// A nonhomogeneous differential form at a point.
#[derive(Clone, Copy, Debug)]
pub struct Form<T: Scalar = f64> {
    pub n: usize,
    pub kind: ScalarKind,
    c: [Cplx<T>; 16],
}

#[inline]
fn grade_of(mask: usize) -> usize {
    mask.count_ones() as usize
}

/// Sign of merging two disjoint ascending index sets into one ascending set.
#[inline]
fn merge_sign(a: usize, b: usize) -> f64 {
    let mut swaps = 0u32;
    for j in 0..4 {
        if b & (1 << j) != 0 {
            swaps += (a >> (j + 1)).count_ones();
        }
    }
    if swaps % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

impl<T: Scalar> Form<T> {
    pub fn zero(n: usize, kind: ScalarKind) -> Self {
        Self { n, kind, c: [Cplx::zero(); 16] }
    }

    pub fn one(n: usize) -> Self {
        Self::scalar(n, Cplx::one())
    }

    pub fn scalar(n: usize, z: Cplx<T>) -> Self {
        let kind = if z.im.val() == 0.0 { ScalarKind::Real } else { ScalarKind::Complex };
        let mut f = Self::zero(n, kind);
        f.c[0] = z;
        f
    }

    /// The unit imaginary scalar.
    pub fn imaginary(n: usize) -> Self {
        let mut f = Self::zero(n, ScalarKind::Complex);
        f.c[0] = Cplx::i();
        f
    }

    /// The basis blade for an index set given as a bitmask.
    pub fn blade(n: usize, mask: usize) -> Self {
        debug_assert!(mask < (1 << n));
        let mut f = Self::zero(n, ScalarKind::Real);
        f.c[mask] = Cplx::one();
        f
    }

    /// `dx^{mu+1}` (0-based `mu`).
    pub fn dx(n: usize, mu: usize) -> Self {
        Self::blade(n, 1 << mu)
    }

    pub fn dim_mask(&self) -> usize {
        (1 << self.n) - 1
    }

    pub fn coeff(&self, mask: usize) -> Cplx<T> {
        self.c[mask]
    }

    pub fn coeff_mut(&mut self, mask: usize) -> &mut Cplx<T> {
        &mut self.c[mask]
    }

    pub fn set_coeff(&mut self, mask: usize, z: Cplx<T>) {
        self.c[mask] = z;
    }

    pub fn add_coeff(&mut self, mask: usize, z: Cplx<T>) {
        self.c[mask] = self.c[mask] + z;
    }

    /// Antisymmetric component for an arbitrary index list: resolves sign and
    /// duplicates against the canonical ascending storage.
    pub fn component(&self, idx: &[usize]) -> Cplx<T> {
        let mut mask = 0usize;
        let mut sign = 1.0;
        for &i in idx {
            let bit = 1 << i;
            if mask & bit != 0 {
                return Cplx::zero();
            }
            // count set bits above i already present: each is a transposition
            let above = (mask >> (i + 1)).count_ones();
            if above % 2 == 1 {
                sign = -sign;
            }
            mask |= bit;
        }
        self.c[mask].scale(T::from_f64(sign))
    }

    pub fn grade_part(&self, k: usize) -> Self {
        let mut out = Self::zero(self.n, self.kind);
        for m in 0..(1 << self.n) {
            if grade_of(m) == k {
                out.c[m] = self.c[m];
            }
        }
        out
    }

    /// Grades with coefficients whose value part is nonzero.
    pub fn grades(&self) -> Vec<usize> {
        let mut present = [false; 5];
        for m in 0..(1 << self.n) {
            if !self.c[m].is_zero_val() {
                present[grade_of(m)] = true;
            }
        }
        (0..=4).filter(|&k| present[k]).collect()
    }

    pub fn max_abs(&self) -> f64 {
        self.c.iter().take(1 << self.n).fold(0.0, |m, z| m.max(z.abs_val()))
    }

    /// Largest imaginary magnitude; zero means the form is real-valued.
    pub fn max_imag(&self) -> f64 {
        self.c.iter().take(1 << self.n).fold(0.0, |m, z| m.max(z.im.val().abs()))
    }

    pub fn scale_c(&self, z: Cplx<T>) -> Self {
        let mut out = *self;
        if z.im.val() != 0.0 {
            out.kind = ScalarKind::Complex;
        }
        for c in out.c.iter_mut() {
            *c = *c * z;
        }
        out
    }

    pub fn scale_t(&self, s: T) -> Self {
        let mut out = *self;
        for c in out.c.iter_mut() {
            *c = c.scale(s);
        }
        out
    }

    pub fn scale_f64(&self, s: f64) -> Self {
        self.scale_t(T::from_f64(s))
    }

    pub fn map_coeffs<U: Scalar>(&self, f: impl Fn(Cplx<T>) -> Cplx<U>) -> Form<U> {
        let mut out = Form::<U>::zero(self.n, self.kind);
        for m in 0..16 {
            out.c[m] = f(self.c[m]);
        }
        out
    }

    /// Componentwise complex conjugation.
    pub fn conj_coeffs(&self) -> Self {
        let mut out = *self;
        for c in out.c.iter_mut() {
            *c = c.conj();
        }
        out
    }
}

impl<T: Scalar> std::ops::Add for Form<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        debug_assert_eq!(self.n, o.n);
        let mut r = Self::zero(self.n, self.kind.join(o.kind));
        for m in 0..16 {
            r.c[m] = self.c[m] + o.c[m];
        }
        r
    }
}

impl<T: Scalar> std::ops::Sub for Form<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        debug_assert_eq!(self.n, o.n);
        let mut r = Self::zero(self.n, self.kind.join(o.kind));
        for m in 0..16 {
            r.c[m] = self.c[m] - o.c[m];
        }
        r
    }
}

impl<T: Scalar> std::ops::Neg for Form<T> {
    type Output = Self;
    fn neg(self) -> Self {
        let mut r = self;
        for c in r.c.iter_mut() {
            *c = -*c;
        }
        r
    }
}

/// Value part of a dual-valued form.
pub fn form_value<T: Scalar>(f: &Form<D1<T>>) -> Form<T> {
    f.map_coeffs(|z| Cplx::new(z.re.v, z.im.v))
}

/// Derivative lane `mu` of a dual-valued form.
pub fn form_dlane<T: Scalar>(f: &Form<D1<T>>, mu: usize) -> Form<T> {
    f.map_coeffs(|z| Cplx::new(z.re.d[mu], z.im.d[mu]))
}

/// Lift a form to dual coefficients with zero derivative lanes.
pub fn form_lift<T: Scalar>(f: &Form<T>) -> Form<D1<T>> {
    f.map_coeffs(|z| Cplx::new(D1::constant(z.re), D1::constant(z.im)))
}

/// Exterior product.
pub fn wedge<T: Scalar>(a: &Form<T>, b: &Form<T>) -> Form<T> {
    debug_assert_eq!(a.n, b.n);
    let mut out = Form::zero(a.n, a.kind.join(b.kind));
    let dim = 1 << a.n;
    for ma in 0..dim {
        if a.c[ma].is_zero_val() {
            continue;
        }
        for mb in 0..dim {
            if b.c[mb].is_zero_val() || (ma & mb) != 0 {
                continue;
            }
            let s = merge_sign(ma, mb);
            out.add_coeff(ma | mb, (a.c[ma] * b.c[mb]).scale(T::from_f64(s)));
        }
    }
    out
}

/// Determinant of the submatrix of `g` with the given ascending row and
/// column index sets (as bitmasks of equal popcount).
fn subdet<T: Scalar>(g: &[[T; 4]; 4], rows: usize, cols: usize) -> T {
    let mut r = [0usize; 4];
    let mut c = [0usize; 4];
    let mut k = 0;
    for i in 0..4 {
        if rows & (1 << i) != 0 {
            r[k] = i;
            k += 1;
        }
    }
    let mut k2 = 0;
    for j in 0..4 {
        if cols & (1 << j) != 0 {
            c[k2] = j;
            k2 += 1;
        }
    }
    debug_assert_eq!(k, k2);
    match k {
        0 => T::one(),
        1 => g[r[0]][c[0]],
        2 => g[r[0]][c[0]] * g[r[1]][c[1]] - g[r[0]][c[1]] * g[r[1]][c[0]],
        3 => {
            g[r[0]][c[0]] * (g[r[1]][c[1]] * g[r[2]][c[2]] - g[r[1]][c[2]] * g[r[2]][c[1]])
                - g[r[0]][c[1]] * (g[r[1]][c[0]] * g[r[2]][c[2]] - g[r[1]][c[2]] * g[r[2]][c[0]])
                + g[r[0]][c[2]] * (g[r[1]][c[0]] * g[r[2]][c[1]] - g[r[1]][c[1]] * g[r[2]][c[0]])
        }
        4 => {
            let mut det = T::zero();
            let mut sign = T::one();
            for j in 0..4 {
                let sub_cols = cols & !(1 << c[j]);
                let sub_rows = rows & !(1 << r[0]);
                det = det + sign * g[r[0]][c[j]] * subdet(g, sub_rows, sub_cols);
                sign = -sign;
            }
            det
        }
        _ => unreachable!(),
    }
}

/// Hodge star with orientation `ε_{1..n} = +1`; indices are raised with the
/// inverse metric and the density is `sqrt(|det g|)`.
pub fn hodge<T: Scalar>(u: &Form<T>, md: &MetricData<T>) -> Form<T> {
    debug_assert_eq!(u.n, md.n);
    let n = u.n;
    let full = (1usize << n) - 1;
    let mut out = Form::zero(n, u.kind);
    for lam in 0..=full {
        let m = full & !lam;
        let k = grade_of(m);
        // u^M = sum over ascending N of det(g^{M,N}) u_N
        let mut acc = Cplx::<T>::zero();
        for nmask in 0..=full {
            if grade_of(nmask) != k || u.c[nmask].is_zero_val() {
                continue;
            }
            acc = acc + u.c[nmask].scale(subdet(&md.g_up, m, nmask));
        }
        let sign = merge_sign(m, lam);
        out.c[lam] = acc.scale(md.vol * T::from_f64(sign));
    }
    out
}

/// The volume form: density times the top blade.
pub fn volume_form<T: Scalar>(md: &MetricData<T>) -> Form<T> {
    let mut f = Form::zero(md.n, ScalarKind::Real);
    f.c[(1 << md.n) - 1] = Cplx::real(md.vol);
    f
}

/// The bilinear `Com` bracket on 2-forms.
pub fn com<T: Scalar>(
    a: &Form<T>,
    b: &Form<T>,
    md: &MetricData<T>,
) -> Result<Form<T>, AlgebraError> {
    for f in [a, b] {
        let off = (*f - f.grade_part(2)).max_abs();
        if off > 1e-14 * (1.0 + f.max_abs()) {
            return Err(AlgebraError::GradeError(off));
        }
    }
    Ok(com_unchecked(a, b, md))
}

fn com_unchecked<T: Scalar>(a: &Form<T>, b: &Form<T>, md: &MetricData<T>) -> Form<T> {
    let n = md.n;
    // full antisymmetric components
    let mut a2 = [[Cplx::<T>::zero(); 4]; 4];
    let mut b2 = [[Cplx::<T>::zero(); 4]; 4];
    for i in 0..n {
        for j in (i + 1)..n {
            let m = (1 << i) | (1 << j);
            a2[i][j] = a.c[m];
            a2[j][i] = -a.c[m];
            b2[i][j] = b.c[m];
            b2[j][i] = -b.c[m];
        }
    }
    let g = &md.g_up;
    let mut out = Form::zero(n, a.kind.join(b.kind));
    let mut push = |i: usize, j: usize, z: Cplx<T>| {
        if i == j {
            return;
        }
        let (m, s) = if i < j { ((1 << i) | (1 << j), 1.0) } else { ((1 << i) | (1 << j), -1.0) };
        out.add_coeff(m, z.scale(T::from_f64(s)));
    };
    for m1 in 0..n {
        for m2 in 0..n {
            for n1 in 0..n {
                for n2 in 0..n {
                    let ab = a2[m1][m2] * b2[n1][n2];
                    if ab.is_zero_val() {
                        continue;
                    }
                    push(m2, n2, ab.scale(-g[m1][n1]));
                    push(m1, n1, ab.scale(-g[m2][n2]));
                    push(m2, n1, ab.scale(g[m1][n2]));
                    push(m1, n2, ab.scale(g[m2][n1]));
                }
            }
        }
    }
    out.scale_f64(0.5)
}

/// Grade-pair Clifford product (the `n = 4` implementation of record).
pub fn mul4<T: Scalar>(a: &Form<T>, b: &Form<T>, md: &MetricData<T>) -> Form<T> {
    debug_assert_eq!(a.n, 4);
    debug_assert_eq!(b.n, 4);
    let mut out = Form::zero(4, a.kind.join(b.kind));
    for k in a.grades() {
        let u = a.grade_part(k);
        for l in b.grades() {
            let v = b.grade_part(l);
            let term = match (k, l) {
                (0, _) | (_, 0) => wedge(&u, &v),
                (1, 1) => wedge(&u, &v) + hodge(&wedge(&hodge(&u, md), &v), md),
                (1, _) => wedge(&u, &v) - hodge(&wedge(&u, &hodge(&v, md)), md),
                (_, 1) => wedge(&u, &v) + hodge(&wedge(&hodge(&u, md), &v), md),
                (2, 2) => {
                    wedge(&u, &v)
                        + hodge(&wedge(&u, &hodge(&v, md)), md)
                        + com_unchecked(&u, &v, md).scale_f64(0.5)
                }
                (2, 3) => {
                    wedge(&hodge(&u, md), &hodge(&v, md))
                        - hodge(&wedge(&u, &hodge(&v, md)), md)
                }
                (2, 4) => wedge(&hodge(&u, md), &hodge(&v, md)),
                (3, 2) => {
                    -(wedge(&hodge(&u, md), &hodge(&v, md)))
                        - hodge(&wedge(&hodge(&u, md), &v), md)
                }
                (3, 3) => {
                    wedge(&hodge(&u, md), &hodge(&v, md))
                        + hodge(&wedge(&u, &hodge(&v, md)), md)
                }
                (3, 4) => wedge(&hodge(&u, md), &hodge(&v, md)),
                (4, 2) => wedge(&hodge(&u, md), &hodge(&v, md)),
                (4, 3) => -(wedge(&hodge(&u, md), &hodge(&v, md))),
                (4, 4) => -(wedge(&hodge(&u, md), &hodge(&v, md))),
                _ => unreachable!(),
            };
            out = out + term;
        }
    }
    out
}

/// Interior product with the raised coordinate vector `(dx^mu)#`.
fn interior<T: Scalar>(md: &MetricData<T>, mu: usize, v: &Form<T>) -> Form<T> {
    let n = md.n;
    let mut out = Form::zero(n, v.kind);
    for mask in 0..(1usize << n) {
        if v.c[mask].is_zero_val() {
            continue;
        }
        let mut pos = 0u32;
        for i in 0..n {
            if mask & (1 << i) == 0 {
                continue;
            }
            let s = if pos % 2 == 0 { 1.0 } else { -1.0 };
            out.add_coeff(mask & !(1 << i), v.c[mask].scale(md.g_up[mu][i] * T::from_f64(s)));
            pos += 1;
        }
    }
    out
}

/// Left Clifford multiplication by `dx^mu`.
fn vec_mul<T: Scalar>(md: &MetricData<T>, mu: usize, v: &Form<T>) -> Form<T> {
    wedge(&Form::dx(md.n, mu), v) + interior(md, mu, v)
}

fn blade_mul<T: Scalar>(md: &MetricData<T>, mask: usize, v: &Form<T>) -> Form<T> {
    if mask == 0 {
        return *v;
    }
    let mu = mask.trailing_zeros() as usize;
    let rest = mask & !(1 << mu);
    let tail = blade_mul(md, rest, v);
    let main = vec_mul(md, mu, &tail);
    // blade(mask) = dx^mu ∧ blade(rest) = dx^mu * blade(rest) - ι blade(rest)
    let corr = interior(md, mu, &Form::blade(md.n, rest));
    if corr.max_abs() == 0.0 {
        main
    } else {
        main - mul_generic(&corr, v, md)
    }
}

/// Blade-contraction Clifford product, valid for any chart dimension. This
/// is the product of record for `n = 2, 3` and an independent oracle for
/// `n = 4`.
pub fn mul_generic<T: Scalar>(a: &Form<T>, b: &Form<T>, md: &MetricData<T>) -> Form<T> {
    debug_assert_eq!(a.n, b.n);
    let mut out = Form::zero(a.n, a.kind.join(b.kind));
    for mask in 0..(1usize << a.n) {
        if a.c[mask].is_zero_val() {
            continue;
        }
        let term = blade_mul(md, mask, b);
        out = out + term.scale_c(a.c[mask]);
    }
    out
}

/// Clifford product dispatch: the grade-pair table for `n = 4`, the generic
/// blade product below that.
pub fn cl_mul<T: Scalar>(a: &Form<T>, b: &Form<T>, md: &MetricData<T>) -> Form<T> {
    if md.n == 4 {
        mul4(a, b, md)
    } else {
        mul_generic(a, b, md)
    }
}

pub fn commutator<T: Scalar>(a: &Form<T>, b: &Form<T>, md: &MetricData<T>) -> Form<T> {
    cl_mul(a, b, md) - cl_mul(b, a, md)
}

pub fn anticommutator<T: Scalar>(a: &Form<T>, b: &Form<T>, md: &MetricData<T>) -> Form<T> {
    cl_mul(a, b, md) + cl_mul(b, a, md)
}

/// The grade-0 coefficient.
pub fn trace<T: Scalar>(u: &Form<T>) -> Cplx<T> {
    u.c[0]
}

/// The involution `U* = (-1)^{k(k-1)/2} conj(U)` applied gradewise.
pub fn involution<T: Scalar>(u: &Form<T>) -> Form<T> {
    let mut out = u.conj_coeffs();
    for m in 0..(1usize << u.n) {
        if grade_of(m) % 4 >= 2 {
            out.c[m] = -out.c[m];
        }
    }
    out
}

/// Hermitian conjugation `U† = H U* H`; `H` must square to one.
pub fn hermitian_conj<T: Scalar>(
    u: &Form<T>,
    h: &Form<T>,
    md: &MetricData<T>,
) -> Result<Form<T>, AlgebraError> {
    let hh = cl_mul(h, h, md);
    let res = (hh - Form::one(md.n)).max_abs();
    if res > 1e-10 * (1.0 + hh.max_abs()) {
        return Err(AlgebraError::BadConjugator(res));
    }
    Ok(cl_mul(&cl_mul(h, &involution(u), md), h, md))
}

/// Hermitian scalar product `(U, V) = Tr(U V†)`.
pub fn scalar_product<T: Scalar>(
    u: &Form<T>,
    v: &Form<T>,
    h: &Form<T>,
    md: &MetricData<T>,
) -> Result<Cplx<T>, AlgebraError> {
    Ok(trace(&cl_mul(u, &hermitian_conj(v, h, md)?, md)))
}

const EXP_MAX_TERMS: usize = 200;

/// Clifford exponential by scaling and squaring.
pub fn cl_exp<T: Scalar>(u: &Form<T>, md: &MetricData<T>) -> Result<Form<T>, AlgebraError> {
    let norm = u.max_abs();
    let halvings = if norm > 1.0 { norm.log2().ceil() as i32 + 1 } else { 0 };
    let x = u.scale_f64(0.5f64.powi(halvings));
    let mut sum = Form::one(u.n) + x;
    let mut term = x;
    let mut converged = false;
    for j in 2..=EXP_MAX_TERMS {
        term = cl_mul(&term, &x, md).scale_f64(1.0 / j as f64);
        sum = sum + term;
        if term.max_abs() < 1e-16 * sum.max_abs() {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(AlgebraError::NoConvergence(EXP_MAX_TERMS));
    }
    for _ in 0..halvings {
        sum = cl_mul(&sum, &sum, md);
    }
    Ok(sum)
}

/// Clifford inverse by solving the left-multiplication linear system.
pub fn cl_inverse<T: Scalar>(u: &Form<T>, md: &MetricData<T>) -> Result<Form<T>, AlgebraError> {
    let n = u.n;
    let dim = 1usize << n;
    // columns: coefficients of u * blade_j
    let mut a = vec![[Cplx::<T>::zero(); 16]; dim];
    for j in 0..dim {
        let col = cl_mul(u, &Form::blade(n, j), md);
        for (i, row) in a.iter_mut().enumerate() {
            row[j] = col.c[i];
        }
    }
    let mut rhs = [Cplx::<T>::zero(); 16];
    rhs[0] = Cplx::one();

    // Gaussian elimination with partial pivoting on value magnitude
    let scale = 1.0 + u.max_abs();
    for col in 0..dim {
        let (pivot, best) = (col..dim)
            .map(|r| (r, a[r][col].abs_val()))
            .max_by(|x, y| x.1.partial_cmp(&y.1).unwrap())
            .unwrap();
        if best < 1e-13 * scale {
            return Err(AlgebraError::NotInvertible(best));
        }
        a.swap(col, pivot);
        rhs.swap(col, pivot);
        let p = a[col][col];
        for r in 0..dim {
            if r == col || a[r][col].is_zero_val() {
                continue;
            }
            let f = a[r][col] / p;
            for c2 in col..dim {
                let sub = f * a[col][c2];
                a[r][c2] = a[r][c2] - sub;
            }
            rhs[r] = rhs[r] - f * rhs[col];
        }
    }
    let mut inv = Form::zero(n, ScalarKind::Complex);
    for i in 0..dim {
        inv.c[i] = rhs[i] / a[i][i];
    }
    let r1 = (cl_mul(u, &inv, md) - Form::one(n)).max_abs();
    let r2 = (cl_mul(&inv, u, md) - Form::one(n)).max_abs();
    let res = r1.max(r2);
    if res > 1e-10 * (1.0 + u.max_abs() * inv.max_abs()) {
        return Err(AlgebraError::NotInvertible(res));
    }
    // preserve reality when the input and inverse are genuinely real
    if u.kind == ScalarKind::Real && inv.max_imag() == 0.0 {
        inv.kind = ScalarKind::Real;
    }
    Ok(inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{metric_jet, MetricJet, MetricSpec};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn minkowski() -> MetricJet {
        metric_jet(&MetricSpec::minkowski(), &[0.0; 4]).unwrap()
    }

    fn curved() -> MetricJet {
        let spec = MetricSpec::parse(
            4,
            &[
                "1 + 0.08*x2^2",
                "0.05*sin(x3)",
                "0.02*x4",
                "0",
                "-1 - 0.06*x1^2",
                "0.03*x1*x2",
                "0",
                "-1 + 0.05*sin(x1)",
                "0.04*x2",
                "-1 - 0.07*x1^2",
            ],
        )
        .unwrap();
        metric_jet(&spec, &[0.15, -0.2, 0.1, 0.3]).unwrap()
    }

    fn rand_form(rng: &mut StdRng, n: usize) -> Form<f64> {
        let mut f = Form::zero(n, ScalarKind::Complex);
        for m in 0..(1usize << n) {
            f.set_coeff(m, Cplx::from_f64s(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)));
        }
        f
    }

    #[test]
    fn wedge_basics() {
        let n = 4;
        let d1 = Form::<f64>::dx(n, 0);
        let d2 = Form::<f64>::dx(n, 1);
        let w = wedge(&d1, &d2);
        assert_eq!(w.coeff(0b11).re, 1.0);
        assert_eq!(wedge(&d1, &d1).max_abs(), 0.0);
        let s = wedge(&(d1 + d2), &d2);
        assert_eq!(s.coeff(0b11).re, 1.0);
        assert_eq!(s.max_abs(), 1.0);
        // graded anticommutativity on random forms
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..20 {
            let a = rand_form(&mut rng, 4).grade_part(1);
            let b = rand_form(&mut rng, 4).grade_part(2);
            let ab = wedge(&a, &b);
            let ba = wedge(&b, &a);
            assert!((ab - ba.scale_f64((-1.0f64).powi(2))).max_abs() < 1e-14);
        }
    }

    #[test]
    fn hodge_star_examples() {
        let jet = minkowski();
        let md = jet.md0();
        // star of 1 is the volume form
        let s1 = hodge(&Form::one(4), &md);
        assert!((s1 - volume_form(&md)).max_abs() < 1e-15);
        // double star on every grade: (-1)^{k+1}
        for k in 0..=4 {
            let mut rng = StdRng::seed_from_u64(k as u64);
            let u = rand_form(&mut rng, 4).grade_part(k);
            let ss = hodge(&hodge(&u, &md), &md);
            let sign = (-1.0f64).powi(k as i32 + 1);
            assert!(
                (ss - u.scale_f64(sign)).max_abs() < 1e-13,
                "double star failed on grade {k}"
            );
        }
        // and on a curved metric
        let jet = curved();
        let md = jet.md0();
        for k in 0..=4 {
            let mut rng = StdRng::seed_from_u64(100 + k as u64);
            let u = rand_form(&mut rng, 4).grade_part(k);
            let ss = hodge(&hodge(&u, &md), &md);
            let sign = (-1.0f64).powi(k as i32 + 1);
            assert!((ss - u.scale_f64(sign)).max_abs() < 1e-12 * (1.0 + u.max_abs()));
        }
    }

    #[test]
    fn volume_form_squares_to_minus_one() {
        for jet in [minkowski(), curved()] {
            let md = jet.md0();
            let ell = volume_form(&md);
            let sq = mul4(&ell, &ell, &md);
            assert!((sq + Form::one(4)).max_abs() < 1e-12);
            // commutation grading against odd and even blades
            let mut rng = StdRng::seed_from_u64(3);
            let odd = rand_form(&mut rng, 4).grade_part(1) + rand_form(&mut rng, 4).grade_part(3);
            let even = rand_form(&mut rng, 4).grade_part(2) + rand_form(&mut rng, 4).grade_part(0);
            let anti = mul4(&ell, &odd, &md) + mul4(&odd, &ell, &md);
            let comm = mul4(&ell, &even, &md) - mul4(&even, &ell, &md);
            assert!(anti.max_abs() < 1e-12 * (1.0 + odd.max_abs()));
            assert!(comm.max_abs() < 1e-12 * (1.0 + even.max_abs()));
        }
    }

    #[test]
    fn com_matches_commutator() {
        for jet in [minkowski(), curved()] {
            let md = jet.md0();
            let mut rng = StdRng::seed_from_u64(11);
            for _ in 0..10 {
                let u = rand_form(&mut rng, 4).grade_part(2);
                let v = rand_form(&mut rng, 4).grade_part(2);
                let c = com(&u, &v, &md).unwrap();
                let uv = mul4(&u, &v, &md) - mul4(&v, &u, &md);
                assert!((c - uv).max_abs() < 1e-12 * (1.0 + uv.max_abs()));
                assert!((com(&u, &u, &md).unwrap()).max_abs() < 1e-13);
            }
        }
        // disjoint-index pair in a diagonal metric
        let md = minkowski().md0();
        let a = Form::<f64>::blade(4, 0b0011);
        let b = Form::<f64>::blade(4, 0b1100);
        assert_eq!(com(&a, &b, &md).unwrap().max_abs(), 0.0);
        // grade check
        let bad = Form::<f64>::dx(4, 0);
        assert!(matches!(com(&bad, &a, &md), Err(AlgebraError::GradeError(_))));
    }

    #[test]
    fn anticommutation_relation() {
        for jet in [minkowski(), curved()] {
            let md = jet.md0();
            for mu in 0..4 {
                for nu in 0..4 {
                    let a = anticommutator(&Form::dx(4, mu), &Form::dx(4, nu), &md);
                    let expect = Form::scalar(4, Cplx::real(2.0 * md.g_up[mu][nu]));
                    assert!((a - expect).max_abs() < 1e-13 * (1.0 + md.g_up[mu][nu].abs()));
                }
            }
        }
    }

    #[test]
    fn minkowski_products() {
        let md = minkowski().md0();
        let d1 = Form::<f64>::dx(4, 0);
        let d2 = Form::<f64>::dx(4, 1);
        assert!((mul4(&d1, &d1, &md) - Form::one(4)).max_abs() < 1e-15);
        assert!((mul4(&d2, &d2, &md) + Form::one(4)).max_abs() < 1e-15);
        // (dx2 ^ dx3)^2 = -1
        let b = Form::<f64>::blade(4, 0b0110);
        assert!((mul4(&b, &b, &md) + Form::one(4)).max_abs() < 1e-15);
        // unit
        let mut rng = StdRng::seed_from_u64(5);
        let u = rand_form(&mut rng, 4);
        assert!((mul4(&Form::one(4), &u, &md) - u).max_abs() < 1e-15);
        assert!((mul4(&u, &Form::one(4), &md) - u).max_abs() < 1e-15);
    }

    #[test]
    fn generic_product_agrees_with_table() {
        for jet in [minkowski(), curved()] {
            let md = jet.md0();
            let mut rng = StdRng::seed_from_u64(17);
            for _ in 0..30 {
                let u = rand_form(&mut rng, 4);
                let v = rand_form(&mut rng, 4);
                let a = mul4(&u, &v, &md);
                let b = mul_generic(&u, &v, &md);
                let scale = 1.0 + u.max_abs() * v.max_abs();
                assert!((a - b).max_abs() < 1e-12 * scale);
            }
        }
    }

    #[test]
    fn generic_product_low_dimensions() {
        for n in [2usize, 3] {
            let spec = MetricSpec::flat(n);
            let jet = metric_jet(&spec, &[0.0; 4]).unwrap();
            let md = jet.md0();
            for mu in 0..n {
                for nu in 0..n {
                    let s = mul_generic(&Form::dx(n, mu), &Form::dx(n, nu), &md)
                        + mul_generic(&Form::dx(n, nu), &Form::dx(n, mu), &md);
                    let expect = Form::scalar(n, Cplx::real(2.0 * md.g_up[mu][nu]));
                    assert!((s - expect).max_abs() < 1e-14);
                }
            }
            // associativity on random triples
            let mut rng = StdRng::seed_from_u64(23);
            for _ in 0..20 {
                let u = rand_form(&mut rng, n);
                let v = rand_form(&mut rng, n);
                let w = rand_form(&mut rng, n);
                let l = mul_generic(&mul_generic(&u, &v, &md), &w, &md);
                let r = mul_generic(&u, &mul_generic(&v, &w, &md), &md);
                assert!((l - r).max_abs() < 1e-12 * (1.0 + l.max_abs()));
            }
        }
    }

    #[test]
    fn trace_properties() {
        let md = curved().md0();
        assert_eq!(trace(&Form::<f64>::one(4)).re, 1.0);
        assert_eq!(trace(&Form::<f64>::blade(4, 0b11)).abs_val(), 0.0);
        let mut rng = StdRng::seed_from_u64(29);
        for _ in 0..20 {
            let u = rand_form(&mut rng, 4);
            let v = rand_form(&mut rng, 4);
            let c = commutator(&u, &v, &md);
            assert!(trace(&c).abs_val() < 1e-12 * (1.0 + u.max_abs() * v.max_abs()));
        }
    }

    #[test]
    fn involution_properties() {
        let md = curved().md0();
        let d1 = Form::<f64>::dx(4, 0);
        assert!((involution(&d1) - d1).max_abs() == 0.0);
        let b12 = Form::<f64>::blade(4, 0b11);
        assert!((involution(&b12) + b12).max_abs() == 0.0);
        let i = Form::<f64>::imaginary(4);
        assert!((involution(&i) + i).max_abs() == 0.0);
        let mut rng = StdRng::seed_from_u64(31);
        for _ in 0..20 {
            let u = rand_form(&mut rng, 4);
            let v = rand_form(&mut rng, 4);
            assert!((involution(&involution(&u)) - u).max_abs() == 0.0);
            let lhs = involution(&mul4(&u, &v, &md));
            let rhs = mul4(&involution(&v), &involution(&u), &md);
            assert!((lhs - rhs).max_abs() < 1e-12 * (1.0 + lhs.max_abs()));
        }
    }

    #[test]
    fn hermitian_conjugation() {
        let md = minkowski().md0();
        let h = Form::<f64>::dx(4, 0);
        let d1 = Form::<f64>::dx(4, 0);
        assert!((hermitian_conj(&d1, &h, &md).unwrap() - d1).max_abs() < 1e-15);
        let i = Form::<f64>::imaginary(4);
        assert!((hermitian_conj(&i, &h, &md).unwrap() + i).max_abs() < 1e-15);
        let mut rng = StdRng::seed_from_u64(37);
        for _ in 0..10 {
            let u = rand_form(&mut rng, 4);
            let once = hermitian_conj(&u, &h, &md).unwrap();
            let twice = hermitian_conj(&once, &h, &md).unwrap();
            assert!((twice - u).max_abs() < 1e-12 * (1.0 + u.max_abs()));
        }
        // a form that does not square to 1 is rejected
        let bad = Form::<f64>::blade(4, 0b11).scale_f64(0.5);
        assert!(matches!(hermitian_conj(&d1, &bad, &md), Err(AlgebraError::BadConjugator(_))));
    }

    #[test]
    fn scalar_product_properties() {
        let md = minkowski().md0();
        let h = Form::<f64>::dx(4, 0);
        let one = Form::<f64>::one(4);
        let sp = scalar_product(&one, &one, &h, &md).unwrap();
        assert!((sp.re - 1.0).abs() < 1e-15 && sp.im.abs() < 1e-15);
        // (dx1 + i dx2, same) is positive real
        let u = Form::<f64>::dx(4, 0) + Form::<f64>::dx(4, 1).scale_c(Cplx::i());
        let p = scalar_product(&u, &u, &h, &md).unwrap();
        assert!(p.re > 0.0 && p.im.abs() < 1e-14);
        let mut rng = StdRng::seed_from_u64(41);
        for _ in 0..10 {
            let a = rand_form(&mut rng, 4);
            let b = rand_form(&mut rng, 4);
            let ab = scalar_product(&a, &b, &h, &md).unwrap();
            let ba = scalar_product(&b, &a, &h, &md).unwrap();
            assert!((ab.re - ba.re).abs() < 1e-12);
            assert!((ab.im + ba.im).abs() < 1e-12);
            let aa = scalar_product(&a, &a, &h, &md).unwrap();
            assert!(aa.re > 0.0 && aa.im.abs() < 1e-12 * (1.0 + aa.re));
        }
    }

    #[test]
    fn exponential_examples() {
        let md = minkowski().md0();
        let z = Form::<f64>::zero(4, ScalarKind::Real);
        assert!((cl_exp(&z, &md).unwrap() - Form::one(4)).max_abs() < 1e-15);
        // scalar series: exp(i pi / 2) = i
        let u = Form::scalar(4, Cplx::from_f64s(0.0, std::f64::consts::FRAC_PI_2));
        let e = cl_exp(&u, &md).unwrap();
        assert!((e - Form::imaginary(4)).max_abs() < 1e-14);
        // spin element from a real bivector: S* S = 1 and exp(U)* = exp(U*)
        let b = Form::<f64>::blade(4, 0b11).scale_f64(0.3)
            + Form::<f64>::blade(4, 0b0110).scale_f64(-0.7);
        let s = cl_exp(&b, &md).unwrap();
        let ss = mul4(&involution(&s), &s, &md);
        assert!((ss - Form::one(4)).max_abs() < 1e-12);
        let lhs = involution(&s);
        let rhs = cl_exp(&involution(&b), &md).unwrap();
        assert!((lhs - rhs).max_abs() < 1e-12);
    }

    #[test]
    fn inverse_examples() {
        let md = minkowski().md0();
        assert!((cl_inverse(&Form::one(4), &md).unwrap() - Form::one(4)).max_abs() < 1e-14);
        let d1 = Form::<f64>::dx(4, 0);
        assert!((cl_inverse(&d1, &md).unwrap() - d1).max_abs() < 1e-12);
        let ell = volume_form(&md);
        assert!((cl_inverse(&ell, &md).unwrap() + ell).max_abs() < 1e-12);
        // trace similarity invariance
        let cmd = curved().md0();
        let mut rng = StdRng::seed_from_u64(43);
        let mut done = 0;
        while done < 10 {
            let u = rand_form(&mut rng, 4);
            let v = Form::one(4) + rand_form(&mut rng, 4).scale_f64(0.4);
            let Ok(vi) = cl_inverse(&v, &cmd) else { continue };
            let s = mul4(&mul4(&vi, &u, &cmd), &v, &cmd);
            let d = trace(&s) - trace(&u);
            assert!(d.abs_val() < 1e-10 * (1.0 + u.max_abs() * v.max_abs() * vi.max_abs()));
            done += 1;
        }
        // nilpotent element has no inverse: (1 + dx1 dx1...) pick dx1^dx2 wedge-nilpotent
        let nil = Form::<f64>::dx(4, 0) + Form::<f64>::dx(4, 1); // null vector: (dx1+dx2)^2 = g11+g22 = 0
        assert!(matches!(cl_inverse(&nil, &md), Err(AlgebraError::NotInvertible(_))));
    }

    #[test]
    fn associativity_over_metrics() {
        for jet in [minkowski(), curved()] {
            let md = jet.md0();
            let mut rng = StdRng::seed_from_u64(47);
            for _ in 0..25 {
                let u = rand_form(&mut rng, 4);
                let v = rand_form(&mut rng, 4);
                let w = rand_form(&mut rng, 4);
                let l = mul4(&mul4(&u, &v, &md), &w, &md);
                let r = mul4(&u, &mul4(&v, &w, &md), &md);
                let scale = 1.0 + u.max_abs() * v.max_abs() * w.max_abs();
                assert!((l - r).max_abs() < 1e-11 * scale);
            }
        }
    }

    #[test]
    fn one_one_pair_rule_consistency() {
        // the two overlapping single-vector rules must agree on (1,1)
        for jet in [minkowski(), curved()] {
            let md = jet.md0();
            let mut rng = StdRng::seed_from_u64(53);
            for _ in 0..10 {
                let u = rand_form(&mut rng, 4).grade_part(1);
                let v = rand_form(&mut rng, 4).grade_part(1);
                let right = wedge(&u, &v) + hodge(&wedge(&hodge(&u, &md), &v), &md);
                let left = wedge(&u, &v) - hodge(&wedge(&u, &hodge(&v, &md)), &md);
                assert!((right - left).max_abs() < 1e-13 * (1.0 + right.max_abs()));
            }
        }
    }
}
