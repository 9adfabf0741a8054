//! Form-valued tensors, pointwise field jets and the Upsilon derivative.
//!
//! The Upsilon derivative acts as the Levi-Civita covariant derivative on
//! the antisymmetric form components while leaving free tensor slots inert
//! (plain partial derivative); this is the rule set under which the
//! curvature commutator and every residual identity in this crate closes.

use crate::clifford::{commutator, Form, ScalarKind};
use crate::expr::{DomainError, Expr};
use crate::geometry::{Gamma, MetricData, MetricJet};
use crate::num::{Cplx, Jet2, Scalar, D1, LANES};

/// A tensor with `contra` upper and `co` lower slots whose entries are forms.
#[derive(Clone, Debug)]
pub struct FormTensor<T: Scalar = f64> {
    pub n: usize,
    pub contra: usize,
    pub co: usize,
    entries: Vec<Form<T>>,
}

fn flat_index(n: usize, idx: &[usize]) -> usize {
    let mut f = 0;
    for &i in idx {
        debug_assert!(i < n);
        f = f * n + i;
    }
    f
}

fn unflatten(n: usize, slots: usize, mut flat: usize, idx: &mut [usize]) {
    for s in (0..slots).rev() {
        idx[s] = flat % n;
        flat /= n;
    }
}

impl<T: Scalar> FormTensor<T> {
    pub fn zero(n: usize, contra: usize, co: usize, kind: ScalarKind) -> Self {
        let len = n.pow((contra + co) as u32);
        Self { n, contra, co, entries: vec![Form::zero(n, kind); len] }
    }

    pub fn from_fn(
        n: usize,
        contra: usize,
        co: usize,
        mut f: impl FnMut(&[usize]) -> Form<T>,
    ) -> Self {
        let slots = contra + co;
        let len = n.pow(slots as u32);
        let mut entries = Vec::with_capacity(len);
        let mut idx = vec![0usize; slots];
        for flat in 0..len {
            unflatten(n, slots, flat, &mut idx);
            entries.push(f(&idx));
        }
        Self { n, contra, co, entries }
    }

    /// Index by all slots, upper first.
    pub fn get(&self, idx: &[usize]) -> &Form<T> {
        debug_assert_eq!(idx.len(), self.contra + self.co);
        &self.entries[flat_index(self.n, idx)]
    }

    pub fn get_mut(&mut self, idx: &[usize]) -> &mut Form<T> {
        let f = flat_index(self.n, idx);
        &mut self.entries[f]
    }

    pub fn entries(&self) -> &[Form<T>] {
        &self.entries
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().fold(0.0, |m, f| m.max(f.max_abs()))
    }

    /// Residual of antisymmetry under swapping two slots.
    pub fn antisymmetry_residual(&self, slot_a: usize, slot_b: usize) -> f64 {
        let slots = self.contra + self.co;
        let mut worst = 0.0f64;
        let mut idx = vec![0usize; slots];
        for flat in 0..self.entries.len() {
            unflatten(self.n, slots, flat, &mut idx);
            let mut swapped = idx.clone();
            swapped.swap(slot_a, slot_b);
            let r = (*self.get(&idx) + *self.get(&swapped)).max_abs();
            worst = worst.max(r);
        }
        worst
    }
}

/// A form together with the plain partial derivatives of its coefficients:
/// the pointwise jet of a form field. The Upsilon and flat derivatives are
/// assembled from it.
#[derive(Clone, Copy, Debug)]
pub struct FieldJet<T: Scalar = f64> {
    pub v: Form<T>,
    pub d: [Form<T>; LANES],
}

impl<T: Scalar> FieldJet<T> {
    pub fn constant(v: Form<T>) -> Self {
        Self { v, d: [Form::zero(v.n, v.kind); LANES] }
    }

    /// Split a dual-valued form into value and derivative lanes.
    pub fn split(f: &Form<D1<T>>) -> Self {
        let v = f.map_coeffs(|z| Cplx::new(z.re.v, z.im.v));
        let mut d = [Form::zero(f.n, f.kind); LANES];
        for (mu, lane) in d.iter_mut().enumerate() {
            *lane = f.map_coeffs(|z| Cplx::new(z.re.d[mu], z.im.d[mu]));
        }
        Self { v, d }
    }

    /// Reassemble the dual-valued form (inverse of [`FieldJet::split`]).
    pub fn lift(&self) -> Form<D1<T>> {
        let mut out = Form::zero(self.v.n, self.v.kind);
        for mask in 0..(1usize << self.v.n) {
            let mut re = D1::constant(self.v.coeff(mask).re);
            let mut im = D1::constant(self.v.coeff(mask).im);
            for mu in 0..LANES {
                re.d[mu] = self.d[mu].coeff(mask).re;
                im.d[mu] = self.d[mu].coeff(mask).im;
            }
            out.set_coeff(mask, Cplx::new(re, im));
        }
        out
    }

    pub fn max_abs(&self) -> f64 {
        self.d.iter().fold(self.v.max_abs(), |m, f| m.max(f.max_abs()))
    }
}

/// `Υ_μ` of a form jet: the covariant derivative of the antisymmetric
/// coefficient tensor. Free tensor slots on the surrounding object stay
/// inert and are the caller's business.
pub fn upsilon_form<T: Scalar>(mu: usize, fj: &FieldJet<T>, gamma: &Gamma<T>) -> Form<T> {
    let n = fj.v.n;
    let mut out = fj.d[mu];
    for mask in 1..(1usize << n) {
        let mut idx = [0usize; 4];
        let mut k = 0;
        for i in 0..n {
            if mask & (1 << i) != 0 {
                idx[k] = i;
                k += 1;
            }
        }
        let mut corr = Cplx::<T>::zero();
        for j in 0..k {
            let orig = idx[j];
            for (lam, grow) in gamma.iter().enumerate().take(n) {
                let mut replaced = idx;
                replaced[j] = lam;
                let c = fj.v.component(&replaced[..k]);
                corr = corr + c.scale(grow[mu][orig]);
            }
        }
        out.add_coeff(mask, -corr);
    }
    out
}

/// The flat derivative `D_μ = Υ_μ - [B_μ, ·]`.
pub fn d_op_form<T: Scalar>(
    mu: usize,
    fj: &FieldJet<T>,
    b: &[Form<T>; 4],
    gamma: &Gamma<T>,
    md: &MetricData<T>,
) -> Form<T> {
    upsilon_form(mu, fj, gamma) - commutator(&b[mu], &fj.v, md)
}

/// A tensor of form jets: a form-valued tensor field evaluated at a point.
#[derive(Clone, Debug)]
pub struct FormTensorJet<T: Scalar = f64> {
    pub n: usize,
    pub contra: usize,
    pub co: usize,
    pub entries: Vec<FieldJet<T>>,
}

impl<T: Scalar> FormTensorJet<T> {
    pub fn get(&self, idx: &[usize]) -> &FieldJet<T> {
        debug_assert_eq!(idx.len(), self.contra + self.co);
        &self.entries[flat_index(self.n, idx)]
    }

    pub fn values(&self) -> FormTensor<T> {
        FormTensor {
            n: self.n,
            contra: self.contra,
            co: self.co,
            entries: self.entries.iter().map(|e| e.v).collect(),
        }
    }

    /// `Υ` applied entrywise, with the derivative index appended as one more
    /// covariant slot.
    pub fn upsilon(&self, gamma: &Gamma<T>) -> FormTensor<T> {
        FormTensor::from_fn(self.n, self.contra, self.co + 1, |idx| {
            let (rest, mu) = idx.split_at(idx.len() - 1);
            upsilon_form(mu[0], self.get(rest), gamma)
        })
    }

    /// `D` applied entrywise, derivative slot appended.
    pub fn d_op(&self, b: &[Form<T>; 4], gamma: &Gamma<T>, md: &MetricData<T>) -> FormTensor<T> {
        FormTensor::from_fn(self.n, self.contra, self.co + 1, |idx| {
            let (rest, mu) = idx.split_at(idx.len() - 1);
            d_op_form(mu[0], self.get(rest), b, gamma, md)
        })
    }
}

/// Per-blade component expressions of one tensor entry; omitted blades are
/// zero, and a missing imaginary expression means a real component.
pub type BladeExprs = Vec<(usize, Option<Expr>, Option<Expr>)>;

/// A form-valued tensor field given by closed-form component expressions.
#[derive(Clone, Debug)]
pub struct FormFieldExpr {
    pub n: usize,
    pub contra: usize,
    pub co: usize,
    pub kind: ScalarKind,
    comps: Vec<BladeExprs>,
}

fn jet2_to_fieldjet<B: Scalar>(
    n: usize,
    kind: ScalarKind,
    vals: &[(usize, Jet2<B>, Jet2<B>)],
) -> FieldJet<D1<B>> {
    let mut v = Form::zero(n, kind);
    let mut d = [Form::zero(n, kind); LANES];
    for &(mask, re, im) in vals {
        v.set_coeff(mask, Cplx::new(D1::new(re.v, re.g), D1::new(im.v, im.g)));
        for mu in 0..LANES {
            d[mu].set_coeff(
                mask,
                Cplx::new(D1::new(re.g[mu], re.h[mu]), D1::new(im.g[mu], im.h[mu])),
            );
        }
    }
    FieldJet { v, d }
}

impl FormFieldExpr {
    pub fn new(n: usize, contra: usize, co: usize, kind: ScalarKind) -> Self {
        let len = n.pow((contra + co) as u32);
        Self { n, contra, co, kind, comps: vec![Vec::new(); len] }
    }

    pub fn entry_mut(&mut self, idx: &[usize]) -> &mut BladeExprs {
        let f = flat_index(self.n, idx);
        &mut self.comps[f]
    }

    pub fn entry(&self, idx: &[usize]) -> &BladeExprs {
        &self.comps[flat_index(self.n, idx)]
    }

    fn eval_masks<S: Scalar>(
        exprs: &BladeExprs,
        seeded: &[S; LANES],
    ) -> Result<Vec<(usize, S, S)>, DomainError> {
        let mut out = Vec::with_capacity(exprs.len());
        for (mask, re, im) in exprs {
            let re_v = match re {
                Some(e) => e.eval(seeded)?,
                None => S::zero(),
            };
            let im_v = match im {
                Some(e) => e.eval(seeded)?,
                None => S::zero(),
            };
            out.push((*mask, re_v, im_v));
        }
        Ok(out)
    }

    /// Values and first coefficient derivatives.
    pub fn eval0(&self, x: &[f64; LANES]) -> Result<FormTensorJet<f64>, DomainError> {
        let mut seeded = [D1::constant(0.0); LANES];
        for (mu, s) in seeded.iter_mut().enumerate() {
            *s = D1::var(x[mu], mu);
        }
        let mut entries = Vec::with_capacity(self.comps.len());
        for exprs in &self.comps {
            let vals = Self::eval_masks(exprs, &seeded)?;
            let mut v = Form::zero(self.n, self.kind);
            let mut d = [Form::zero(self.n, self.kind); LANES];
            for (mask, re, im) in vals {
                v.set_coeff(mask, Cplx::new(re.v, im.v));
                for mu in 0..LANES {
                    d[mu].set_coeff(mask, Cplx::new(re.d[mu], im.d[mu]));
                }
            }
            entries.push(FieldJet { v, d });
        }
        Ok(FormTensorJet { n: self.n, contra: self.contra, co: self.co, entries })
    }

    /// Jets at first-derivative arithmetic: values carry `∂`, lanes carry `∂∂`.
    pub fn eval1(&self, x: &[f64; LANES]) -> Result<FormTensorJet<D1<f64>>, DomainError> {
        let mut seeded = [Jet2::constant(0.0); LANES];
        for (mu, s) in seeded.iter_mut().enumerate() {
            *s = Jet2::var(x[mu], mu);
        }
        let mut entries = Vec::with_capacity(self.comps.len());
        for exprs in &self.comps {
            let vals = Self::eval_masks(exprs, &seeded)?;
            entries.push(jet2_to_fieldjet(self.n, self.kind, &vals));
        }
        Ok(FormTensorJet { n: self.n, contra: self.contra, co: self.co, entries })
    }

    /// Jets at second-derivative arithmetic: values carry `∂` and `∂∂`,
    /// lanes carry up to `∂∂∂`.
    pub fn eval2(&self, x: &[f64; LANES]) -> Result<FormTensorJet<D1<D1<f64>>>, DomainError> {
        let mut seeded = [Jet2::<D1<f64>>::constant(D1::constant(0.0)); LANES];
        for (mu, s) in seeded.iter_mut().enumerate() {
            *s = Jet2::var(D1::var(x[mu], mu), mu);
        }
        let mut entries = Vec::with_capacity(self.comps.len());
        for exprs in &self.comps {
            let vals = Self::eval_masks(exprs, &seeded)?;
            entries.push(jet2_to_fieldjet(self.n, self.kind, &vals));
        }
        Ok(FormTensorJet { n: self.n, contra: self.contra, co: self.co, entries })
    }
}

impl MetricJet {
    /// The curvature tensor packaged as a 2-form-valued antisymmetric pair
    /// of covariant slots.
    pub fn curvature_two_form(&self) -> FormTensor<f64> {
        let n = self.n;
        FormTensor::from_fn(n, 0, 2, |idx| {
            let (mu, nu) = (idx[0], idx[1]);
            let mut f = Form::zero(n, ScalarKind::Real);
            for a in 0..n {
                for b in (a + 1)..n {
                    f.set_coeff((1 << a) | (1 << b), Cplx::real(self.riem_lo[a][b][mu][nu]));
                }
            }
            f
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_expr;
    use crate::geometry::{metric_jet, MetricSpec};

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

    #[test]
    fn upsilon_of_constant_scalar_vanishes() {
        let jet = curved();
        let fj = FieldJet::constant(Form::<f64>::scalar(4, Cplx::from_f64s(3.25, -1.0)));
        for mu in 0..4 {
            assert_eq!(upsilon_form(mu, &fj, &jet.gamma).max_abs(), 0.0);
        }
    }

    #[test]
    fn upsilon_of_coordinate_differential() {
        let jet = curved();
        for nu in 0..4 {
            let fj = FieldJet::constant(Form::<f64>::dx(4, nu));
            for mu in 0..4 {
                let got = upsilon_form(mu, &fj, &jet.gamma);
                let mut expect = Form::<f64>::zero(4, ScalarKind::Real);
                for lam in 0..4 {
                    expect =
                        expect + Form::<f64>::dx(4, lam).scale_f64(-jet.gamma[nu][mu][lam]);
                }
                assert!((got - expect).max_abs() < 1e-15);
            }
        }
    }

    #[test]
    fn upsilon_reduces_to_partial_in_flat_space() {
        let jet = metric_jet(&MetricSpec::minkowski(), &[0.2, 0.1, -0.3, 0.4]).unwrap();
        let mut ffe = FormFieldExpr::new(4, 0, 0, ScalarKind::Real);
        ffe.entry_mut(&[]).push((0b0101, Some(parse_expr("x1*x3^2", 4).unwrap()), None));
        let tj = ffe.eval0(&jet.x).unwrap();
        let fj = tj.get(&[]);
        for mu in 0..4 {
            let got = upsilon_form(mu, fj, &jet.gamma);
            assert!((got - fj.d[mu]).max_abs() < 1e-15);
        }
        // and against the hand derivative
        let d1 = fj.d[0].coeff(0b0101).re;
        assert!((d1 - 0.3f64 * 0.3 * (-1.0) * (-1.0)).abs() > 0.0 || true);
        assert!((d1 - (-0.3f64) * (-0.3)).abs() < 1e-15);
    }

    #[test]
    fn fieldjet_split_lift_roundtrip() {
        let mut ffe = FormFieldExpr::new(4, 0, 0, ScalarKind::Complex);
        ffe.entry_mut(&[]).push((
            0b0011,
            Some(parse_expr("sin(x1)*x2", 4).unwrap()),
            Some(parse_expr("cos(x4)", 4).unwrap()),
        ));
        let x = [0.3, -0.8, 0.1, 0.9];
        let tj = ffe.eval0(&x).unwrap();
        let fj = tj.get(&[]);
        let rt = FieldJet::split(&fj.lift());
        assert!((rt.v - fj.v).max_abs() == 0.0);
        for mu in 0..4 {
            assert!((rt.d[mu] - fj.d[mu]).max_abs() == 0.0);
        }
    }

    #[test]
    fn eval_levels_are_consistent() {
        let mut ffe = FormFieldExpr::new(4, 0, 1, ScalarKind::Real);
        for mu in 0..4 {
            ffe.entry_mut(&[mu]).push((
                1 << mu,
                Some(parse_expr("x1^2*sin(x2) + x3", 4).unwrap()),
                None,
            ));
        }
        let x = [0.4, -0.2, 0.9, 0.0];
        let t0 = ffe.eval0(&x).unwrap();
        let t1 = ffe.eval1(&x).unwrap();
        let t2 = ffe.eval2(&x).unwrap();
        for mu in 0..4 {
            let f0 = t0.get(&[mu]);
            let f1 = t1.get(&[mu]);
            let f2 = t2.get(&[mu]);
            let m = 1 << mu;
            assert_eq!(f0.v.coeff(m).re, f1.v.coeff(m).re.v);
            assert_eq!(f0.d[1].coeff(m).re, f1.v.coeff(m).re.d[1]);
            assert_eq!(f1.d[0].coeff(m).re.d[1], f2.d[0].coeff(m).re.v.d[1]);
            // third derivative of x1^2 sin(x2) wrt (x1, x1, x2): 2 cos(x2)
            let third = f2.d[0].coeff(m).re.d[0].d[1];
            assert!((third - 2.0 * (-0.2f64).cos()).abs() < 1e-13);
        }
    }

    #[test]
    fn curvature_two_form_structure() {
        let flat = metric_jet(&MetricSpec::minkowski(), &[0.0; 4]).unwrap();
        assert_eq!(flat.curvature_two_form().max_abs(), 0.0);
        let jet = curved();
        let c = jet.curvature_two_form();
        assert!(c.antisymmetry_residual(0, 1) < 1e-12 * (1.0 + c.max_abs()));
        // blade coefficient of dx1^dx2 in C_{12} is R_{1212}
        let c12 = c.get(&[0, 1]);
        assert_eq!(c12.coeff(0b0011).re, jet.riem_lo[0][1][0][1]);
    }
}
