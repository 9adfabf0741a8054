//! The connection field `B_μ`, the secondary generators `H, I, K`, the flat
//! derivative operators built from them, and the residual checks for the
//! structure equations, contorsion and flatness.

pub mod addendum;

use crate::check::{Check, Tol};
use crate::clifford::{
    anticommutator, cl_mul, commutator, volume_form, Form, ScalarKind,
};
use crate::expr::DomainError;
use crate::geometry::{
    check_coordinate_conditions, metric_jet, metric_jet3, riemann_up, CoordConditions, Df64,
    Gamma, GeometryError, MetricData, MetricJet, MetricLevel, MetricSpec, Ten3, Ten4,
};
use crate::num::{Cplx, Scalar, D1, LANES};
use crate::tensor::{d_op_form, upsilon_form, FieldJet, FormTensor};
use nalgebra::{DMatrix, DVector};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BVariant {
    General4,
    Temporal4,
    Diagonal,
    Dim3,
    Dim2,
}

impl BVariant {
    /// The natural closed-form variant for a chart dimension.
    pub fn for_dim(n: usize) -> BVariant {
        match n {
            2 => BVariant::Dim2,
            3 => BVariant::Dim3,
            _ => BVariant::General4,
        }
    }
}

#[derive(Debug, Error)]
pub enum ConnectionError {
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("field evaluation: {0}")]
    Eval(#[from] DomainError),
    #[error(transparent)]
    Algebra(#[from] crate::clifford::AlgebraError),
    #[error("gauge assumption violated for {variant:?}: {detail}")]
    GaugeAssumptionViolated { variant: BVariant, detail: String },
    #[error("denominator {which} too small: |{value:e}| < 1e-10 * {scale:e}")]
    DenominatorNearZero { which: String, value: f64, scale: f64 },
    #[error("chart condition violated: {0}")]
    ConditionViolated(String),
    #[error("linear system for the connection components is singular (rank {rank}, expected {expected})")]
    SingularSystem { rank: usize, expected: usize },
    #[error("variant {variant:?} does not apply in dimension {n}")]
    VariantDimension { variant: BVariant, n: usize },
}

/// Raw antisymmetric components `b[α][β][μ]` for the requested variant.
pub fn b_components<T: Scalar>(
    variant: BVariant,
    n: usize,
    g: &[[T; 4]; 4],
    dg: &[[[T; 4]; 4]; 4],
) -> [[[T; 4]; 4]; 4] {
    match variant {
        BVariant::General4 => addendum::b_general4(g, dg),
        BVariant::Temporal4 => addendum::b_temporal4(g, dg),
        BVariant::Dim3 => addendum::b_dim3(g, dg),
        BVariant::Diagonal => {
            let q = T::from_f64(-0.25);
            let mut b = [[[T::zero(); 4]; 4]; 4];
            for a in 0..n {
                for bb in 0..n {
                    for m in 0..n {
                        b[a][bb][m] = q * (dg[a][bb][m] - dg[bb][a][m]);
                    }
                }
            }
            b
        }
        BVariant::Dim2 => {
            let mut b = [[[T::zero(); 4]; 4]; 4];
            let four_g22 = T::from_f64(4.0) * g[1][1];
            b[0][1][0] = -(dg[0][1][1] * g[0][1] - dg[1][0][0] * g[1][1]) / four_g22;
            b[0][1][1] = -(dg[1][1][1] * g[0][1] + dg[0][1][1] * g[1][1]
                - T::from_f64(2.0) * dg[1][0][1] * g[1][1])
                / four_g22;
            b[1][0][0] = -b[0][1][0];
            b[1][0][1] = -b[0][1][1];
            b
        }
    }
}

/// Validate the gauge assumptions and denominators of a variant at a point.
pub fn b_guard(variant: BVariant, jet: &MetricJet) -> Result<(), ConnectionError> {
    let n = jet.n;
    let g = &jet.g_lo;
    let dg = &jet.dg;
    let mut max_g = 0.0f64;
    for row in g.iter().take(n) {
        for v in row.iter().take(n) {
            max_g = max_g.max(v.abs());
        }
    }
    let scale = (1.0 + max_g).powi(3);
    let gauge_tol = 1e-10 * (1.0 + max_g);

    let check_den = |which: &str, value: f64| {
        if value.abs() < 1e-10 * scale {
            Err(ConnectionError::DenominatorNearZero { which: which.into(), value, scale })
        } else {
            Ok(())
        }
    };

    match variant {
        BVariant::General4 | BVariant::Temporal4 => {
            if n != 4 {
                return Err(ConnectionError::VariantDimension { variant, n });
            }
            check_den("g_44", g[3][3])?;
            check_den("g_33 g_44 - g_34^2", g[2][2] * g[3][3] - g[2][3] * g[2][3])?;
            if variant == BVariant::General4 {
                let block = g[1][3] * g[1][3] * g[2][2] - 2.0 * g[1][2] * g[1][3] * g[2][3]
                    + g[1][1] * g[2][3] * g[2][3]
                    + g[1][2] * g[1][2] * g[3][3]
                    - g[1][1] * g[2][2] * g[3][3];
                check_den("2x2-block factor", block)?;
            } else {
                let mut worst = (g[0][0] - 1.0).abs();
                for j in 1..4 {
                    worst = worst.max(g[0][j].abs());
                }
                for l in 0..4 {
                    worst = worst.max(dg[l][0][0].abs());
                    for j in 1..4 {
                        worst = worst.max(dg[l][0][j].abs());
                    }
                }
                if worst > gauge_tol {
                    return Err(ConnectionError::GaugeAssumptionViolated {
                        variant,
                        detail: format!("temporal gauge residual {worst:e}"),
                    });
                }
            }
        }
        BVariant::Diagonal => {
            let mut worst = 0.0f64;
            for a in 0..n {
                for b in 0..n {
                    if a != b {
                        worst = worst.max(g[a][b].abs());
                        for l in 0..n {
                            worst = worst.max(dg[l][a][b].abs());
                        }
                    }
                }
            }
            if worst > gauge_tol {
                return Err(ConnectionError::GaugeAssumptionViolated {
                    variant,
                    detail: format!("off-diagonal residual {worst:e}"),
                });
            }
        }
        BVariant::Dim3 => {
            if n != 3 {
                return Err(ConnectionError::VariantDimension { variant, n });
            }
            check_den("g_33", g[2][2])?;
            check_den("g_22 g_33 - g_23^2", g[1][1] * g[2][2] - g[1][2] * g[1][2])?;
        }
        BVariant::Dim2 => {
            if n != 2 {
                return Err(ConnectionError::VariantDimension { variant, n });
            }
            check_den("g_22", g[1][1])?;
        }
    }
    Ok(())
}

/// The secondary generator forms present in a given dimension.
#[derive(Clone, Copy, Debug)]
pub struct Generators<T: Scalar> {
    pub h: Form<T>,
    pub i: Option<Form<T>>,
    pub k: Option<Form<T>>,
}

/// Closed-form generators from the inverse metric; requires the chart
/// conditions (checked on value parts).
pub fn secondary_generators<T: Scalar>(
    md: &MetricData<T>,
) -> Result<Generators<T>, ConnectionError> {
    let n = md.n;
    let gu = &md.g_up;
    let g11 = gu[0][0];
    if g11.val() <= 0.0 {
        return Err(ConnectionError::ConditionViolated(format!("g^11 = {} <= 0", g11.val())));
    }
    let h = Form::<T>::dx(n, 0).scale_t(g11.sqrt().recip());
    if n == 2 {
        return Ok(Generators { h, i: None, k: None });
    }

    let det2 = g11 * gu[1][1] - gu[0][1] * gu[0][1];
    if det2.val() >= 0.0 {
        return Err(ConnectionError::ConditionViolated(format!(
            "2x2 contravariant minor = {} >= 0",
            det2.val()
        )));
    }
    let det3 = -(gu[0][2] * gu[0][2] * gu[1][1]) + T::from_f64(2.0) * gu[0][1] * gu[0][2] * gu[1][2]
        - g11 * gu[1][2] * gu[1][2]
        - gu[0][1] * gu[0][1] * gu[2][2]
        + g11 * gu[1][1] * gu[2][2];
    if det3.val() <= 0.0 {
        return Err(ConnectionError::ConditionViolated(format!(
            "3x3 contravariant minor = {} <= 0",
            det3.val()
        )));
    }
    let blade = |a: usize, b: usize| Form::<T>::blade(n, (1 << a) | (1 << b));
    // cofactor pattern: the relative signs are pinned by I^2 = -1, [H,I] = 0
    // and D_mu I = 0 against the closed-form connection
    let i_num = blade(1, 2).scale_t(g11) - blade(0, 2).scale_t(gu[0][1])
        + blade(0, 1).scale_t(gu[0][2]);
    let i_form = i_num.scale_t((g11.sqrt() * det3.sqrt()).recip());
    if n == 3 {
        return Ok(Generators { h, i: Some(i_form), k: None });
    }

    let k_num = blade(2, 3).scale_t(gu[0][1] * gu[0][1]) - blade(1, 3).scale_t(gu[0][1] * gu[0][2])
        + blade(1, 2).scale_t(gu[0][1] * gu[0][3])
        - blade(2, 3).scale_t(g11 * gu[1][1])
        + blade(0, 3).scale_t(gu[0][2] * gu[1][1])
        - blade(0, 2).scale_t(gu[0][3] * gu[1][1])
        + blade(1, 3).scale_t(g11 * gu[1][2])
        - blade(0, 3).scale_t(gu[0][1] * gu[1][2])
        + blade(0, 1).scale_t(gu[0][3] * gu[1][2])
        - blade(1, 2).scale_t(g11 * gu[1][3])
        + blade(0, 2).scale_t(gu[0][1] * gu[1][3])
        - blade(0, 1).scale_t(gu[0][2] * gu[1][3]);
    let k_form = -(k_num.scale_t(md.vol * (-det2).sqrt().recip()));
    Ok(Generators { h, i: Some(i_form), k: Some(k_form) })
}

/// Connection data at one point: everything needed to run the structure
/// equation and generator residual checks. The transformed tuples produced
/// by the gauge maps are packaged the same way.
#[derive(Clone)]
pub struct ConnData {
    pub n: usize,
    pub md: MetricData<f64>,
    pub gamma: Gamma<f64>,
    pub b: [FieldJet<f64>; 4],
    pub h: FieldJet<f64>,
    pub i: Option<FieldJet<f64>>,
    pub k: Option<FieldJet<f64>>,
    pub c: FormTensor<f64>,
}

impl ConnData {
    pub fn b_values(&self) -> [Form<f64>; 4] {
        [self.b[0].v, self.b[1].v, self.b[2].v, self.b[3].v]
    }

    pub fn d_op(&self, mu: usize, fj: &FieldJet<f64>) -> Form<f64> {
        d_op_form(mu, fj, &self.b_values(), &self.gamma, &self.md)
    }

    pub fn upsilon(&self, mu: usize, fj: &FieldJet<f64>) -> Form<f64> {
        upsilon_form(mu, fj, &self.gamma)
    }

    /// Residuals of the structure equation, the generator annihilation
    /// equations and the algebraic generator relations.
    pub fn structure_residuals(&self) -> Vec<Check> {
        let n = self.n;
        let md = &self.md;
        let mut out = Vec::new();
        let bv = self.b_values();
        let b_norm = bv.iter().fold(0.0f64, |m, f| m.max(f.max_abs()));

        for mu in 0..n {
            for nu in (mu + 1)..n {
                let ups_mu_bnu = self.upsilon(mu, &self.b[nu]);
                let ups_nu_bmu = self.upsilon(nu, &self.b[mu]);
                let comm = commutator(&bv[mu], &bv[nu], md);
                let half_c = self.c.get(&[mu, nu]).scale_f64(0.5);
                // flat-derivative spelling
                let d_mu_bnu = ups_mu_bnu - comm;
                let d_nu_bmu = ups_nu_bmu - commutator(&bv[nu], &bv[mu], md);
                let lhs1 = d_mu_bnu - d_nu_bmu + comm;
                // direct spelling
                let lhs2 = ups_mu_bnu - ups_nu_bmu - comm;
                let scale = 1.0
                    + ups_mu_bnu.max_abs().max(ups_nu_bmu.max_abs())
                    + b_norm * b_norm
                    + half_c.max_abs();
                out.push(Check::new(
                    format!("structure_eq[{}{}]", mu + 1, nu + 1),
                    (lhs1 - half_c).max_abs(),
                    scale,
                    Tol::D2,
                ));
                out.push(Check::new(
                    format!("structure_eq_spellings[{}{}]", mu + 1, nu + 1),
                    (lhs1 - lhs2).max_abs(),
                    scale,
                    Tol::Alg,
                ));
            }
        }

        let mut gens: Vec<(&str, &FieldJet<f64>)> = vec![("h", &self.h)];
        if let Some(i) = &self.i {
            gens.push(("i", i));
        }
        if let Some(k) = &self.k {
            gens.push(("k", k));
        }
        for (name, fj) in &gens {
            let scale = 1.0 + fj.max_abs() * (1.0 + b_norm);
            for mu in 0..n {
                out.push(Check::new(
                    format!("annihilation_d{name}[{}]", mu + 1),
                    self.d_op(mu, fj).max_abs(),
                    scale,
                    Tol::D1,
                ));
            }
        }

        let sq = |f: &Form<f64>| cl_mul(f, f, md);
        let one = Form::<f64>::one(n);
        let hs = 1.0 + self.h.v.max_abs().powi(2);
        out.push(Check::new("rel_h2", (sq(&self.h.v) - one).max_abs(), hs, Tol::Alg));
        if let Some(i) = &self.i {
            let is = 1.0 + i.v.max_abs().powi(2);
            out.push(Check::new("rel_i2", (sq(&i.v) + one).max_abs(), is, Tol::Alg));
            out.push(Check::new(
                "rel_hi_commute",
                commutator(&self.h.v, &i.v, md).max_abs(),
                1.0 + self.h.v.max_abs() * i.v.max_abs(),
                Tol::Alg,
            ));
        }
        if let (Some(i), Some(k)) = (&self.i, &self.k) {
            let ks = 1.0 + k.v.max_abs().powi(2);
            out.push(Check::new("rel_k2", (sq(&k.v) + one).max_abs(), ks, Tol::Alg));
            out.push(Check::new(
                "rel_hk_commute",
                commutator(&self.h.v, &k.v, md).max_abs(),
                1.0 + self.h.v.max_abs() * k.v.max_abs(),
                Tol::Alg,
            ));
            out.push(Check::new(
                "rel_ik_anticommute",
                anticommutator(&i.v, &k.v, md).max_abs(),
                1.0 + i.v.max_abs() * k.v.max_abs(),
                Tol::Alg,
            ));
        }
        out
    }
}

/// Second-derivative data for operations that differentiate derived fields
/// twice.
#[derive(Clone)]
pub struct DeepFrame {
    pub lvl2: MetricLevel<D1<Df64>>,
    /// Metric data in third-derivative arithmetic (for generator fields
    /// that end up differentiated three times).
    pub md3: MetricData<D1<D1<Df64>>>,
    pub b: [FieldJet<Df64>; 4],
    pub h: FieldJet<Df64>,
    pub i: Option<FieldJet<Df64>>,
    pub k: Option<FieldJet<Df64>>,
    pub ell: Option<FieldJet<Df64>>,
}

/// Everything about the metric, connection and generators at one point.
pub struct Frame {
    pub variant: BVariant,
    pub jet: MetricJet,
    pub cond: CoordConditions,
    pub lvl0: MetricLevel<f64>,
    pub lvl1: MetricLevel<Df64>,
    pub c_form: FormTensor<f64>,
    pub b: [FieldJet<f64>; 4],
    pub h: FieldJet<f64>,
    pub i_gen: Option<FieldJet<f64>>,
    pub k_gen: Option<FieldJet<f64>>,
    pub ell: Option<FieldJet<f64>>,
    pub deep: Option<DeepFrame>,
}

struct PartsJets<T: Scalar> {
    b: [FieldJet<T>; 4],
    h: FieldJet<T>,
    i: Option<FieldJet<T>>,
    k: Option<FieldJet<T>>,
    ell: Option<FieldJet<T>>,
}

fn parts_at<T: Scalar>(
    lvl: &MetricLevel<D1<T>>,
    n: usize,
    variant: BVariant,
) -> Result<PartsJets<T>, ConnectionError> {
    let braw = b_components::<D1<T>>(variant, n, &lvl.g_lo, &lvl.dg);
    let mut b = [FieldJet::constant(Form::zero(n, ScalarKind::Real)); 4];
    for (mu, slot) in b.iter_mut().enumerate().take(n) {
        let mut f = Form::<D1<T>>::zero(n, ScalarKind::Real);
        for a in 0..n {
            for bb in (a + 1)..n {
                f.set_coeff((1 << a) | (1 << bb), Cplx::real(braw[a][bb][mu]));
            }
        }
        *slot = FieldJet::split(&f);
    }
    let gens = secondary_generators::<D1<T>>(&lvl.md)?;
    let ell =
        if n == 4 { Some(FieldJet::split(&volume_form(&lvl.md))) } else { None };
    Ok(PartsJets {
        b,
        h: FieldJet::split(&gens.h),
        i: gens.i.as_ref().map(FieldJet::split),
        k: gens.k.as_ref().map(FieldJet::split),
        ell,
    })
}

impl Frame {
    pub fn new(spec: &MetricSpec, x: &[f64; LANES], variant: BVariant) -> Result<Self, ConnectionError> {
        let jet = metric_jet(spec, x)?;
        Self::from_jet(jet, variant, None)
    }

    /// Frame with level-2 (second derivative) data for deep identities.
    pub fn new_deep(
        spec: &MetricSpec,
        x: &[f64; LANES],
        variant: BVariant,
    ) -> Result<Self, ConnectionError> {
        let j3 = metric_jet3(spec, x)?;
        let lvl2 = j3.level2();
        let md3 = j3.md_level3();
        Self::from_jet(j3.jet, variant, Some((lvl2, md3)))
    }

    #[allow(clippy::type_complexity)]
    fn from_jet(
        jet: MetricJet,
        variant: BVariant,
        lvl2: Option<(MetricLevel<D1<Df64>>, MetricData<D1<D1<Df64>>>)>,
    ) -> Result<Self, ConnectionError> {
        b_guard(variant, &jet)?;
        let n = jet.n;
        let lvl0 = jet.level0();
        let lvl1 = jet.level1();
        let parts = parts_at::<f64>(&lvl1, n, variant)?;
        let c_form = jet.curvature_two_form();
        let deep = match lvl2 {
            None => None,
            Some((lvl2, md3)) => {
                let p2 = parts_at::<Df64>(&lvl2, n, variant)?;
                Some(DeepFrame { lvl2, md3, b: p2.b, h: p2.h, i: p2.i, k: p2.k, ell: p2.ell })
            }
        };
        let cond = check_coordinate_conditions(&jet);
        Ok(Self {
            variant,
            jet,
            cond,
            lvl0,
            lvl1,
            c_form,
            b: parts.b,
            h: parts.h,
            i_gen: parts.i,
            k_gen: parts.k,
            ell: parts.ell,
            deep,
        })
    }

    pub fn n(&self) -> usize {
        self.jet.n
    }

    pub fn conn_data(&self) -> ConnData {
        ConnData {
            n: self.n(),
            md: self.lvl0.md,
            gamma: self.lvl0.gamma,
            b: self.b,
            h: self.h,
            i: self.i_gen,
            k: self.k_gen,
            c: self.c_form.clone(),
        }
    }

    pub fn b_values(&self) -> [Form<f64>; 4] {
        [self.b[0].v, self.b[1].v, self.b[2].v, self.b[3].v]
    }

    /// Lifted connection forms for first-derivative arithmetic.
    pub fn b_values1(&self) -> [Form<Df64>; 4] {
        [self.b[0].lift(), self.b[1].lift(), self.b[2].lift(), self.b[3].lift()]
    }

    pub fn d0(&self, mu: usize, fj: &FieldJet<f64>) -> Form<f64> {
        d_op_form(mu, fj, &self.b_values(), &self.lvl0.gamma, &self.lvl0.md)
    }

    pub fn ups0(&self, mu: usize, fj: &FieldJet<f64>) -> Form<f64> {
        upsilon_form(mu, fj, &self.lvl0.gamma)
    }

    pub fn d1(&self, mu: usize, fj: &FieldJet<Df64>) -> Form<Df64> {
        d_op_form(mu, fj, &self.b_values1(), &self.lvl1.gamma, &self.lvl1.md)
    }

    pub fn ups1(&self, mu: usize, fj: &FieldJet<Df64>) -> Form<Df64> {
        upsilon_form(mu, fj, &self.lvl1.gamma)
    }

    /// Theorem-2 style residual suite for this frame's own connection.
    pub fn structure_residuals(&self) -> Vec<Check> {
        self.conn_data().structure_residuals()
    }

    /// Raw component `b_{αβμ}` (0-based indices).
    pub fn braw(&self, a: usize, bb: usize, mu: usize) -> f64 {
        if a == bb {
            return 0.0;
        }
        let (lo, hi, sign) = if a < bb { (a, bb, 1.0) } else { (bb, a, -1.0) };
        sign * self.b[mu].v.coeff((1 << lo) | (1 << hi)).re
    }

    fn dbraw(&self, l: usize, a: usize, bb: usize, mu: usize) -> f64 {
        if a == bb {
            return 0.0;
        }
        let (lo, hi, sign) = if a < bb { (a, bb, 1.0) } else { (bb, a, -1.0) };
        sign * self.b[mu].d[l].coeff((1 << lo) | (1 << hi)).re
    }

    /// `(Υ_μ Υ_ν - Υ_ν Υ_μ) dx^λ + R^λ_{ρμν} dx^ρ`, which must vanish.
    pub fn upsilon_commutator_residual(&self) -> Check {
        let n = self.n();
        let jet = &self.jet;
        let mut worst = 0.0f64;
        let mut scale = 1.0f64;
        for lam in 0..n {
            // Υ_ν dx^λ as a field jet: coefficients -Γ^λ_{νρ}
            let inner = |nu: usize| {
                let mut v = Form::<f64>::zero(n, ScalarKind::Real);
                let mut d = [Form::<f64>::zero(n, ScalarKind::Real); LANES];
                for rho in 0..n {
                    v.add_coeff(1 << rho, Cplx::real(-jet.gamma[lam][nu][rho]));
                    for (kk, lane) in d.iter_mut().enumerate().take(n) {
                        lane.add_coeff(1 << rho, Cplx::real(-jet.dgamma[kk][lam][nu][rho]));
                    }
                }
                FieldJet { v, d }
            };
            for mu in 0..n {
                for nu in 0..n {
                    let lhs = self.ups0(mu, &inner(nu)) - self.ups0(nu, &inner(mu));
                    let mut rhs = Form::<f64>::zero(n, ScalarKind::Real);
                    for rho in 0..n {
                        rhs.add_coeff(1 << rho, Cplx::real(-jet.riem_up[lam][rho][mu][nu]));
                    }
                    worst = worst.max((lhs - rhs).max_abs());
                    scale = scale.max(1.0 + rhs.max_abs());
                }
            }
        }
        Check::new("upsilon_commutator", worst, scale, Tol::D2)
    }

    /// `(D_μ D_ν - D_ν D_μ) dx^λ` residuals.
    pub fn d_flatness_residual(&self) -> Check {
        let n = self.n();
        let b1 = self.b_values1();
        let mut worst = 0.0f64;
        let mut scale = 1.0f64;
        for lam in 0..n {
            let base = FieldJet::constant(Form::<Df64>::dx(n, lam));
            let inner: Vec<FieldJet<f64>> = (0..n)
                .map(|nu| {
                    FieldJet::split(&d_op_form(nu, &base, &b1, &self.lvl1.gamma, &self.lvl1.md))
                })
                .collect();
            for mu in 0..n {
                for nu in 0..n {
                    let r = self.d0(mu, &inner[nu]) - self.d0(nu, &inner[mu]);
                    worst = worst.max(r.max_abs());
                    scale = scale.max(1.0 + inner[nu].max_abs());
                }
            }
        }
        Check::new("d_flatness", worst, scale, Tol::D2)
    }

    /// Solve the annihilation equations for the components of `B` and
    /// compare with the closed form. Returns the solved tensor, the rank of
    /// the stacked system and the relative mismatch against the closed form.
    pub fn solve_b_linear(&self) -> Result<(FormTensor<f64>, usize, f64), ConnectionError> {
        let n = self.n();
        let md = &self.lvl0.md;
        let mut pairs = Vec::new();
        for a in 0..n {
            for bb in (a + 1)..n {
                pairs.push((a, bb));
            }
        }
        let mut gens: Vec<&FieldJet<f64>> = vec![&self.h];
        if let Some(i) = &self.i_gen {
            gens.push(i);
        }
        if let Some(k) = &self.k_gen {
            gens.push(k);
        }
        let dim = 1usize << n;
        let rows = gens.len() * dim;
        let mut total_rank = 0usize;
        let mut solved = FormTensor::zero(n, 0, 1, ScalarKind::Real);
        let mut mismatch = 0.0f64;
        let closed = self.b_values();
        for mu in 0..n {
            let mut a_mat = DMatrix::<f64>::zeros(rows, pairs.len());
            let mut rhs = DVector::<f64>::zeros(rows);
            for (gi, gen) in gens.iter().enumerate() {
                // [B_mu, X] = Υ_mu X, coefficientwise in the blade basis
                for (ci, &(a, bb)) in pairs.iter().enumerate() {
                    let col =
                        commutator(&Form::blade(n, (1 << a) | (1 << bb)), &gen.v, md);
                    for m in 0..dim {
                        a_mat[(gi * dim + m, ci)] = col.coeff(m).re;
                    }
                }
                let ups = self.ups0(mu, gen);
                for m in 0..dim {
                    rhs[gi * dim + m] = ups.coeff(m).re;
                }
            }
            let svd = a_mat.clone().svd(true, true);
            let smax = svd.singular_values.iter().fold(0.0f64, |m, &s| m.max(s));
            let rank =
                svd.singular_values.iter().filter(|&&s| s > 1e-10 * (1.0 + smax)).count();
            total_rank += rank;
            if rank < pairs.len() {
                return Err(ConnectionError::SingularSystem {
                    rank: total_rank,
                    expected: n * pairs.len(),
                });
            }
            let sol = svd
                .solve(&rhs, 1e-12 * (1.0 + smax))
                .map_err(|_| ConnectionError::SingularSystem {
                    rank: total_rank,
                    expected: n * pairs.len(),
                })?;
            let mut f = Form::<f64>::zero(n, ScalarKind::Real);
            for (ci, &(a, bb)) in pairs.iter().enumerate() {
                f.set_coeff((1 << a) | (1 << bb), Cplx::real(sol[ci]));
            }
            mismatch = mismatch
                .max((f - closed[mu]).max_abs() / (1e0 + closed[mu].max_abs()));
            *solved.get_mut(&[mu]) = f;
        }
        Ok((solved, total_rank, mismatch))
    }

    /// Contorsion `K^λ_{μν}` and torsion `T^λ_{μν}` extracted from `B`.
    pub fn contorsion(&self) -> Contorsion {
        let n = self.n();
        let jet = &self.jet;
        let mut k_lo = [[[0.0f64; 4]; 4]; 4];
        for lam in 0..n {
            for mu in 0..n {
                for nu in 0..n {
                    k_lo[lam][mu][nu] = -2.0 * self.braw(lam, nu, mu);
                }
            }
        }
        let mut k_up = [[[0.0f64; 4]; 4]; 4];
        let mut dk_up = [[[[0.0f64; 4]; 4]; 4]; 4];
        for lam in 0..n {
            for mu in 0..n {
                for nu in 0..n {
                    let mut s = 0.0;
                    for a in 0..n {
                        s += jet.g_up[lam][a] * k_lo[a][mu][nu];
                    }
                    k_up[lam][mu][nu] = s;
                    for l in 0..n {
                        let mut ds = 0.0;
                        for a in 0..n {
                            ds += jet.dg_up[l][lam][a] * k_lo[a][mu][nu]
                                + jet.g_up[lam][a] * (-2.0 * self.dbraw(l, a, nu, mu));
                        }
                        dk_up[l][lam][mu][nu] = ds;
                    }
                }
            }
        }
        let mut t_up = [[[0.0f64; 4]; 4]; 4];
        for lam in 0..n {
            for mu in 0..n {
                for nu in 0..n {
                    t_up[lam][mu][nu] = k_up[lam][mu][nu] - k_up[lam][nu][mu];
                }
            }
        }
        Contorsion { n, k_lo, k_up, dk_up, t_up }
    }

    /// Curvature of the modified connection `Γ + K`; the closed-form `B`
    /// must make it vanish.
    pub fn flatness_residual(&self) -> Check {
        let c = self.contorsion();
        self.flatness_residual_of(&c.k_up, &c.dk_up)
    }

    /// Same, for an explicitly supplied (possibly perturbed) contorsion.
    pub fn flatness_residual_of(&self, k_up: &Ten3<f64>, dk_up: &Ten4<f64>) -> Check {
        let n = self.n();
        let jet = &self.jet;
        let mut gamma_mod = [[[0.0f64; 4]; 4]; 4];
        let mut dgamma_mod = [[[[0.0f64; 4]; 4]; 4]; 4];
        for lam in 0..n {
            for mu in 0..n {
                for nu in 0..n {
                    gamma_mod[lam][mu][nu] = jet.gamma[lam][mu][nu] + k_up[lam][mu][nu];
                    for l in 0..n {
                        dgamma_mod[l][lam][mu][nu] =
                            jet.dgamma[l][lam][mu][nu] + dk_up[l][lam][mu][nu];
                    }
                }
            }
        }
        let r_up = riemann_up(n, &gamma_mod, &dgamma_mod);
        let mut worst = 0.0f64;
        let mut scale = 1.0f64;
        for k in 0..n {
            for l in 0..n {
                for mu in 0..n {
                    for nu in 0..n {
                        let mut lo = 0.0;
                        for a in 0..n {
                            lo += jet.g_lo[k][a] * r_up[a][l][mu][nu];
                        }
                        worst = worst.max(lo.abs());
                        scale = scale
                            .max(1.0 + dgamma_mod[k][l][mu][nu].abs())
                            .max(1.0 + gamma_mod[l][mu][nu].powi(2));
                    }
                }
            }
        }
        Check::new("flatness", worst, scale, Tol::D2)
    }

    /// Residuals of the modified-derivative identity: `Υ̌_μ U = Υ_μ U - [B_μ, U]`
    /// on the coordinate differentials and on supplied field jets.
    pub fn modified_upsilon_residuals(&self, fields: &[FieldJet<f64>]) -> Vec<Check> {
        let n = self.n();
        let c = self.contorsion();
        let mut gamma_mod = self.lvl0.gamma;
        for lam in 0..n {
            for mu in 0..n {
                for nu in 0..n {
                    gamma_mod[lam][mu][nu] += c.k_up[lam][mu][nu];
                }
            }
        }
        let mut out = Vec::new();
        // proof identity K^ν_{μλ} dx^λ = [B_μ, dx^ν]
        let mut worst = 0.0f64;
        let mut scale = 1.0f64;
        for mu in 0..n {
            for nu in 0..n {
                let mut lhs = Form::<f64>::zero(n, ScalarKind::Real);
                for lam in 0..n {
                    lhs.add_coeff(1 << lam, Cplx::real(c.k_up[nu][mu][lam]));
                }
                let rhs = commutator(&self.b[mu].v, &Form::dx(n, nu), &self.lvl0.md);
                worst = worst.max((lhs - rhs).max_abs());
                scale = scale.max(1.0 + rhs.max_abs());
            }
        }
        out.push(Check::new("contorsion_bracket", worst, scale, Tol::D1));

        let mut worst = 0.0f64;
        let mut scale = 1.0f64;
        for fj in fields {
            for mu in 0..n {
                let lhs = upsilon_form(mu, fj, &gamma_mod);
                let rhs = self.ups0(mu, fj)
                    - commutator(&self.b[mu].v, &fj.v, &self.lvl0.md);
                worst = worst.max((lhs - rhs).max_abs());
                scale = scale.max(1.0 + lhs.max_abs());
            }
        }
        out.push(Check::new("modified_upsilon", worst, scale, Tol::D1));
        out
    }
}

/// Contorsion/torsion data extracted from the connection field.
pub struct Contorsion {
    pub n: usize,
    /// `K_{λμν}` (all slots down).
    pub k_lo: Ten3<f64>,
    /// `K^λ_{μν}`.
    pub k_up: Ten3<f64>,
    /// `∂_l K^λ_{μν}`.
    pub dk_up: Ten4<f64>,
    /// `T^λ_{μν} = K^λ_{μν} - K^λ_{νμ}`.
    pub t_up: Ten3<f64>,
}

impl Contorsion {
    /// Metric-compatibility pairing: `K_{νμλ} + K_{λμν}` must vanish.
    pub fn compatibility_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        for nu in 0..self.n {
            for mu in 0..self.n {
                for lam in 0..self.n {
                    worst = worst.max((self.k_lo[nu][mu][lam] + self.k_lo[lam][mu][nu]).abs());
                }
            }
        }
        worst
    }

    /// Rebuild contorsion from torsion and report the round-trip error:
    /// `K^λ_{μν} = (T^λ_{μν} + T_μ{}^λ{}_ν + T_ν{}^λ{}_μ) / 2`.
    pub fn roundtrip_residual(&self, jet: &MetricJet) -> f64 {
        let n = self.n;
        let mixed = |mu: usize, lam: usize, nu: usize| {
            // T_μ{}^λ{}_ν = g_{μα} g^{λβ} T^α_{βν}
            let mut s = 0.0;
            for a in 0..n {
                for b in 0..n {
                    s += jet.g_lo[mu][a] * jet.g_up[lam][b] * self.t_up[a][b][nu];
                }
            }
            s
        };
        let mut worst = 0.0f64;
        for lam in 0..n {
            for mu in 0..n {
                for nu in 0..n {
                    let rebuilt =
                        0.5 * (self.t_up[lam][mu][nu] + mixed(mu, lam, nu) + mixed(nu, lam, mu));
                    worst = worst.max((rebuilt - self.k_up[lam][mu][nu]).abs());
                }
            }
        }
        worst
    }
}

/// Closed-form `B_μ` as a 2-form-valued covector, with all guards applied.
pub fn b_field_closed_form(
    spec: &MetricSpec,
    x: &[f64; LANES],
    variant: BVariant,
) -> Result<FormTensor<f64>, ConnectionError> {
    let jet = metric_jet(spec, x)?;
    b_guard(variant, &jet)?;
    let n = jet.n;
    let braw = b_components::<f64>(variant, n, &jet.g_lo, &jet.dg);
    Ok(FormTensor::from_fn(n, 0, 1, |idx| {
        let mu = idx[0];
        let mut f = Form::zero(n, ScalarKind::Real);
        for a in 0..n {
            for bb in (a + 1)..n {
                f.set_coeff((1 << a) | (1 << bb), Cplx::real(braw[a][bb][mu]));
            }
        }
        f
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::assert_checks;

    fn curved_spec() -> MetricSpec {
        MetricSpec::parse(
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
        .unwrap()
    }

    fn frw_spec() -> MetricSpec {
        MetricSpec::parse(
            4,
            &[
                "1", "0", "0", "0", //
                "-exp(2*x1)", "0", "0", //
                "-exp(2*x1)", "0", //
                "-exp(2*x1)",
            ],
        )
        .unwrap()
    }

    #[test]
    fn b_vanishes_at_minkowski() {
        for variant in [BVariant::General4, BVariant::Temporal4, BVariant::Diagonal] {
            let b = b_field_closed_form(&MetricSpec::minkowski(), &[0.1, 0.2, 0.3, 0.4], variant)
                .unwrap();
            assert_eq!(b.max_abs(), 0.0, "{variant:?}");
        }
    }

    #[test]
    fn diagonal_example_component() {
        // g = diag(1, -a^2, ..), a = exp(x1): b_{122} = -(1/4) d1 g22 = a a'/2
        let x = [0.2, 0.0, 0.0, 0.0];
        let b = b_field_closed_form(&frw_spec(), &x, BVariant::Diagonal).unwrap();
        let a2 = (2.0f64 * x[0]).exp();
        let expect = a2; // a a' = e^{2x}
        let got = b.get(&[1]).coeff(0b0011).re;
        assert!((got - 0.5 * expect).abs() < 1e-13 * expect);
    }

    #[test]
    fn variants_agree_on_conforming_metrics() {
        let x = [0.2, -0.1, 0.3, 0.05];
        let b_gen = b_field_closed_form(&frw_spec(), &x, BVariant::General4).unwrap();
        let b_tmp = b_field_closed_form(&frw_spec(), &x, BVariant::Temporal4).unwrap();
        let b_diag = b_field_closed_form(&frw_spec(), &x, BVariant::Diagonal).unwrap();
        for mu in 0..4 {
            let g = b_gen.get(&[mu]);
            assert!((*g - *b_tmp.get(&[mu])).max_abs() < 1e-10 * (1.0 + g.max_abs()));
            assert!((*g - *b_diag.get(&[mu])).max_abs() < 1e-10 * (1.0 + g.max_abs()));
        }
    }

    #[test]
    fn gauge_guard_rejects_nonconforming() {
        let spec = curved_spec();
        let x = [0.15, -0.2, 0.1, 0.3];
        assert!(matches!(
            b_field_closed_form(&spec, &x, BVariant::Temporal4),
            Err(ConnectionError::GaugeAssumptionViolated { .. })
        ));
        assert!(matches!(
            b_field_closed_form(&spec, &x, BVariant::Diagonal),
            Err(ConnectionError::GaugeAssumptionViolated { .. })
        ));
    }

    #[test]
    fn generators_at_minkowski() {
        let jet = metric_jet(&MetricSpec::minkowski(), &[0.0; 4]).unwrap();
        let gens = secondary_generators(&jet.md0()).unwrap();
        assert!((gens.h - Form::dx(4, 0)).max_abs() < 1e-15);
        assert!((gens.i.unwrap() - Form::blade(4, 0b0110)).max_abs() < 1e-15);
        assert!((gens.k.unwrap() + Form::blade(4, 0b1100)).max_abs() < 1e-15);
    }

    #[test]
    fn generator_relations_on_curved_metric() {
        let frame = Frame::new(&curved_spec(), &[0.15, -0.2, 0.1, 0.3], BVariant::General4).unwrap();
        let checks = frame.structure_residuals();
        assert!(checks.iter().any(|c| c.id == "rel_h2"));
        assert_checks(&checks, 1.0);
    }

    #[test]
    fn theorem2_residuals_on_metrics() {
        for (spec, variant) in [
            (MetricSpec::minkowski(), BVariant::General4),
            (frw_spec(), BVariant::General4),
            (frw_spec(), BVariant::Diagonal),
            (curved_spec(), BVariant::General4),
        ] {
            let frame = Frame::new(&spec, &[0.15, -0.2, 0.1, 0.3], variant).unwrap();
            assert_checks(&frame.structure_residuals(), 1.0);
        }
    }

    #[test]
    fn linear_solver_matches_closed_form() {
        let frame = Frame::new(&curved_spec(), &[0.15, -0.2, 0.1, 0.3], BVariant::General4).unwrap();
        let (solved, rank, mismatch) = frame.solve_b_linear().unwrap();
        assert_eq!(rank, 24);
        assert!(mismatch < 1e-9, "mismatch {mismatch:e}");
        assert!(solved.max_abs() > 1e-4, "solution should be nontrivial");
    }

    #[test]
    fn upsilon_commutator_identity() {
        for spec in [MetricSpec::minkowski(), frw_spec(), curved_spec()] {
            let frame = Frame::new(&spec, &[0.15, -0.2, 0.1, 0.3], BVariant::General4).unwrap();
            let c = frame.upsilon_commutator_residual();
            assert!(c.pass(1.0), "{}: {:e}", c.id, c.residual);
        }
    }

    #[test]
    fn d_is_flat() {
        let frame = Frame::new(&curved_spec(), &[0.15, -0.2, 0.1, 0.3], BVariant::General4).unwrap();
        let c = frame.d_flatness_residual();
        assert!(c.pass(1.0), "{:e} > {:e}", c.residual, c.tol(1.0));
    }

    #[test]
    fn contorsion_and_flatness() {
        let frame = Frame::new(&curved_spec(), &[0.15, -0.2, 0.1, 0.3], BVariant::General4).unwrap();
        let c = frame.contorsion();
        assert!(c.compatibility_residual() < 1e-12);
        assert!(c.roundtrip_residual(&frame.jet) < 1e-10);
        let flat = frame.flatness_residual();
        assert!(flat.pass(1.0), "flatness {:e} > {:e}", flat.residual, flat.tol(1.0));
        // and with zero B everything is trivially zero
        let mink = Frame::new(&MetricSpec::minkowski(), &[0.0; 4], BVariant::General4).unwrap();
        assert_eq!(mink.flatness_residual().residual, 0.0);
        // perturbing the contorsion must break flatness decisively
        let mut k_up = c.k_up;
        k_up[0][1][2] += 1e-3;
        let broken = frame.flatness_residual_of(&k_up, &c.dk_up);
        assert!(broken.residual > 100.0 * flat.tol(1.0));
    }

    #[test]
    fn low_dimension_structure() {
        // n = 3
        let spec3 = MetricSpec::parse(
            3,
            &[
                "1 + 0.05*x2^2",
                "0.04*x3",
                "0.03*sin(x1)",
                "-1 - 0.05*x1^2",
                "0.02*x1",
                "-1 - 0.04*x2^2",
            ],
        )
        .unwrap();
        let frame = Frame::new(&spec3, &[0.2, -0.1, 0.3, 0.0], BVariant::Dim3).unwrap();
        assert_checks(&frame.structure_residuals(), 1.0);
        // n = 2
        let spec2 = MetricSpec::parse(2, &["1 + 0.1*x2^2", "0.05*x1*x2", "-1 - 0.1*x1^2"]).unwrap();
        let frame = Frame::new(&spec2, &[0.3, -0.2, 0.0, 0.0], BVariant::Dim2).unwrap();
        assert_checks(&frame.structure_residuals(), 1.0);
        let (_, rank, mismatch) = frame.solve_b_linear().unwrap();
        assert_eq!(rank, 2);
        assert!(mismatch < 1e-9);
    }
}
