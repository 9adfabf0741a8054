//! Field content and certified identities: the Dirac-type residual, the
//! current chain and its conservation identities, Yang-Mills strength and
//! divergence, Lagrangian densities, and plane-wave solution states.

use crate::check::{Check, Tol};
use crate::clifford::{
    cl_mul, commutator, anticommutator, hermitian_conj, involution, scalar_product, trace, Form,
    ScalarKind,
};
use crate::connection::{ConnData, Frame};
use crate::expr::{BinOp, DomainError, Expr};
use crate::gauge::{
    omega_case, omega_membership_residual, project_l0, t_basis, su3_basis, CaseId, GaugeError,
    GenForms, SpinGauge, UnitaryGauge,
};
use crate::geometry::{Df64, MetricData};
use crate::num::{Cplx, Jet2, Scalar, D1, LANES};
use crate::tensor::{d_op_form, FieldJet, FormFieldExpr, FormTensor};
use nalgebra::DMatrix;
use thiserror::Error;

pub type DDf64 = D1<Df64>;
type T3 = D1<DDf64>;

#[derive(Debug, Error)]
pub enum FieldError {
    #[error(transparent)]
    Gauge(#[from] GaugeError),
    #[error(transparent)]
    Algebra(#[from] crate::clifford::AlgebraError),
    #[error("field evaluation: {0}")]
    Eval(#[from] DomainError),
    #[error("field component outside the wave space: {0}")]
    Membership(String),
    #[error("potential has {got} coefficient rows, case needs {want}")]
    CoefficientCount { got: usize, want: usize },
    #[error("deep frame data required for this operation")]
    MissingDeepFrame,
    #[error("no nullspace found for the plane-wave symbol")]
    EmptyKernel,
}

/// A field configuration: the wave form, the gauge potential coefficients
/// `a^k_μ` over the case's generators, and the mass constant.
#[derive(Clone, Debug)]
pub struct FieldSpec {
    pub case: CaseId,
    pub psi: FormFieldExpr,
    /// `a[k][mu]`, one row per gauge generator; `None` entries are zero.
    pub a: Vec<[Option<Expr>; 4]>,
    pub mass: f64,
}

impl FieldSpec {
    pub fn empty(case: CaseId) -> Self {
        let kind = if case.complex() { ScalarKind::Complex } else { ScalarKind::Real };
        Self {
            case,
            psi: FormFieldExpr::new(4, 0, 0, kind),
            a: vec![[None, None, None, None]; case.dim_l0()],
            mass: 0.0,
        }
    }
}

/// Everything evaluated at one point: connection data (possibly gauge
/// transformed), case data, and field jets.
pub struct StatePoint<'a> {
    pub frame: &'a Frame,
    pub conn: ConnData,
    pub case: CaseId,
    pub n_form: FieldJet<f64>,
    pub e_form: FieldJet<f64>,
    pub l0: Vec<FieldJet<f64>>,
    pub alpha: [FieldJet<f64>; 4],
    pub psi: FieldJet<f64>,
    pub a: [FieldJet<f64>; 4],
    pub m: f64,
}

fn scalar_jet1(e: &Expr, x: &[f64; LANES]) -> Result<Jet2<f64>, DomainError> {
    let mut seeded = [Jet2::constant(0.0); LANES];
    for (mu, s) in seeded.iter_mut().enumerate() {
        *s = Jet2::var(x[mu], mu);
    }
    e.eval(&seeded)
}

/// Third-order scalar jet, packaged for triple-dual arithmetic.
fn scalar_jet3(e: &Expr, x: &[f64; LANES]) -> Result<T3, DomainError> {
    let mut seeded = [Jet2::<Df64>::constant(D1::constant(0.0)); LANES];
    for (mu, s) in seeded.iter_mut().enumerate() {
        *s = Jet2::var(D1::var(x[mu], mu), mu);
    }
    let j = e.eval(&seeded)?;
    let mut lanes = [DDf64::from_f64(0.0); LANES];
    for (l, lane) in lanes.iter_mut().enumerate() {
        *lane = D1::new(j.g[l], j.h[l]);
    }
    Ok(D1::new(D1::new(j.v, j.g), lanes))
}

impl<'a> StatePoint<'a> {
    pub fn new(frame: &'a Frame, spec: &FieldSpec, x: &[f64; LANES]) -> Result<Self, FieldError> {
        let md1 = &frame.lvl1.md;
        let g1 = GenForms::from_frame(frame);
        let case1 = omega_case(spec.case, &g1, md1);
        if spec.a.len() != case1.l0.len() {
            return Err(FieldError::CoefficientCount {
                got: spec.a.len(),
                want: case1.l0.len(),
            });
        }
        let n_form = FieldJet::split(&case1.n_form);
        let e_form = FieldJet::split(&case1.e_form);
        let l0: Vec<FieldJet<f64>> = case1.l0.iter().map(FieldJet::split).collect();

        let psi = *spec.psi.eval1(x)?.get(&[]);
        let psi0 = FieldJet::split(&psi.v);
        let memb = omega_membership_residual(spec.case, &psi0.v);
        if memb > 1e-10 * (1.0 + psi0.v.max_abs()) {
            return Err(FieldError::Membership(format!("wave form residual {memb:e}")));
        }

        let mut a = [FieldJet::constant(Form::zero(4, ScalarKind::Complex)); 4];
        for (mu, slot) in a.iter_mut().enumerate() {
            let mut acc = Form::<Df64>::zero(4, ScalarKind::Complex);
            for (k, row) in spec.a.iter().enumerate() {
                if let Some(e) = &row[mu] {
                    let j = scalar_jet1(e, x)?;
                    acc = acc + case1.l0[k].scale_t(D1::new(j.v, j.g));
                }
            }
            *slot = FieldJet::split(&acc);
        }

        let conn = frame.conn_data();
        let alpha = Self::alpha_from(&conn.h, frame);
        Ok(Self {
            frame,
            conn,
            case: spec.case,
            n_form,
            e_form,
            l0,
            alpha,
            psi: psi0,
            a,
            m: spec.mass,
        })
    }

    fn alpha_from(h: &FieldJet<f64>, frame: &Frame) -> [FieldJet<f64>; 4] {
        let md1 = &frame.lvl1.md;
        let h1 = h.lift();
        let mut alpha = [FieldJet::constant(Form::zero(4, ScalarKind::Real)); 4];
        for (mu, slot) in alpha.iter_mut().enumerate() {
            let dx1 = Form::<Df64>::dx(4, mu);
            *slot = FieldJet::split(&cl_mul(&h1, &dx1, md1));
        }
        alpha
    }

    fn md(&self) -> &MetricData<f64> {
        &self.conn.md
    }

    pub fn d0(&self, mu: usize, fj: &FieldJet<f64>) -> Form<f64> {
        self.conn.d_op(mu, fj)
    }

    /// Flat derivative at first-derivative arithmetic, using the lifted
    /// connection jets.
    pub fn d1(&self, mu: usize, fj: &FieldJet<Df64>) -> Form<Df64> {
        let b1 = [
            self.conn.b[0].lift(),
            self.conn.b[1].lift(),
            self.conn.b[2].lift(),
            self.conn.b[3].lift(),
        ];
        d_op_form(mu, fj, &b1, &self.frame.lvl1.gamma, &self.frame.lvl1.md)
    }

    /// Membership residuals of the state itself.
    pub fn membership_checks(&self) -> Vec<Check> {
        let md = self.md();
        let mut out = Vec::new();
        out.push(Check::new(
            "psi_in_omega",
            omega_membership_residual(self.case, &self.psi.v),
            1.0 + self.psi.v.max_abs(),
            Tol::Alg,
        ));
        let mut span = 0.0f64;
        for a in &self.a {
            let p = project_l0(&a.v, &self.value_l0(), &self.conn.h.v, md).unwrap_or(a.v);
            span = span.max((a.v - p).max_abs());
        }
        out.push(Check::new(
            "a_in_l0_span",
            span,
            1.0 + self.a.iter().fold(0.0f64, |m, a| m.max(a.v.max_abs())),
            Tol::Alg,
        ));
        out
    }

    fn value_l0(&self) -> Vec<Form<f64>> {
        self.l0.iter().map(|t| t.v).collect()
    }

    /// The Dirac-type residual form
    /// `P = dx^μ (D_μΨ + Ψ A_μ + B_μ Ψ) N - m Ψ E`.
    pub fn dirac_residual(&self) -> Form<f64> {
        let md = self.md();
        let mut acc = Form::<f64>::zero(4, ScalarKind::Complex);
        for mu in 0..4 {
            let inner = self.d0(mu, &self.psi)
                + cl_mul(&self.psi.v, &self.a[mu].v, md)
                + cl_mul(&self.conn.b[mu].v, &self.psi.v, md);
            acc = acc + cl_mul(&Form::dx(4, mu), &cl_mul(&inner, &self.n_form.v, md), md);
        }
        acc - cl_mul(&self.psi.v, &self.e_form.v, md).scale_f64(self.m)
    }

    /// `Q = α^μ (D_μΨ + Ψ A_μ + B_μ Ψ) + m H Ψ E N`.
    pub fn q_form(&self) -> Form<f64> {
        let md = self.md();
        let mut acc = Form::<f64>::zero(4, ScalarKind::Complex);
        for mu in 0..4 {
            let inner = self.d0(mu, &self.psi)
                + cl_mul(&self.psi.v, &self.a[mu].v, md)
                + cl_mul(&self.conn.b[mu].v, &self.psi.v, md);
            acc = acc + cl_mul(&self.alpha[mu].v, &inner, md);
        }
        let men = cl_mul(
            &cl_mul(&cl_mul(&self.conn.h.v, &self.psi.v, md), &self.e_form.v, md),
            &self.n_form.v,
            md,
        );
        acc + men.scale_f64(self.m)
    }

    /// The current chain as field jets, stages one to four.
    pub fn current_chain(&self) -> Result<CurrentChain, FieldError> {
        let md1 = &self.frame.lvl1.md;
        let h1 = self.conn.h.lift();
        let psi1 = self.psi.lift();
        let psi_dag1 = hermitian_conj(&psi1, &h1, md1)?;
        let n1 = self.n_form.lift();
        let e1 = self.e_form.lift();
        let l0_1: Vec<Form<Df64>> = self.l0.iter().map(|t| t.lift()).collect();
        let mut j1 = [FieldJet::constant(Form::zero(4, ScalarKind::Complex)); 4];
        let mut j2 = j1;
        let mut j3 = j1;
        let mut j = j1;
        for nu in 0..4 {
            let alpha1 = self.alpha[nu].lift();
            let s1 = cl_mul(&cl_mul(&psi_dag1, &alpha1, md1), &psi1, md1);
            let s2 = (cl_mul(&n1, &s1, md1) + cl_mul(&s1, &n1, md1)).scale_f64(0.5);
            let inner = cl_mul(&e1, &s2, md1) + cl_mul(&s2, &e1, md1);
            let s3 = cl_mul(&e1, &inner, md1).scale_f64(0.5);
            let mut s4 = Form::<Df64>::zero(4, ScalarKind::Complex);
            for t in &l0_1 {
                let coef = scalar_product(&s3, t, &h1, md1)?;
                s4 = s4 + t.scale_c(coef);
            }
            j1[nu] = FieldJet::split(&s1);
            j2[nu] = FieldJet::split(&s2);
            j3[nu] = FieldJet::split(&s3);
            j[nu] = FieldJet::split(&s4);
        }
        Ok(CurrentChain { j1, j2, j3, j })
    }

    /// The case shortcut expression for the current, straight from the
    /// case table.
    pub fn current_shortcut(&self, nu: usize) -> Result<Form<f64>, FieldError> {
        let md = self.md();
        let h = &self.conn.h.v;
        let psi_dag = hermitian_conj(&self.psi.v, h, md)?;
        let j1 = cl_mul(&cl_mul(&psi_dag, &self.alpha[nu].v, md), &self.psi.v, md);
        let i_j1 = j1.scale_c(Cplx::i());
        Ok(match self.case {
            CaseId::I => i_j1,
            CaseId::II => project_l0(&i_j1, &self.value_l0(), h, md)?,
            CaseId::III => {
                anticommutator(h, &i_j1, md).scale_f64(0.5).pipe_mul_left(h, md)
            }
            CaseId::IV => {
                let ell = self.frame.ell.expect("n = 4").v;
                anticommutator(&ell, &j1, md).scale_f64(0.5)
            }
            CaseId::V => {
                let i_gen = self.conn.i.expect("n = 4").v;
                let inner = anticommutator(&i_gen, &j1, md);
                anticommutator(h, &inner, md).scale_f64(0.25).pipe_mul_left(h, md)
            }
        })
    }

    /// Yang-Mills strength values `F_{μν} = D_μA_ν - D_νA_μ - [A_μ, A_ν]`.
    pub fn ym_strength_values(&self) -> FormTensor<f64> {
        let md = self.md();
        FormTensor::from_fn(4, 0, 2, |idx| {
            let (mu, nu) = (idx[0], idx[1]);
            self.d0(mu, &self.a[nu]) - self.d0(nu, &self.a[mu])
                - commutator(&self.a[mu].v, &self.a[nu].v, md)
        })
    }

    /// Strength and divergence jets; requires a deep frame.
    pub fn yang_mills(&self, spec: &FieldSpec, x: &[f64; LANES]) -> Result<YangMills, FieldError> {
        let deep = self.frame.deep.as_ref().ok_or(FieldError::MissingDeepFrame)?;
        let lvl2 = &deep.lvl2;
        let md2 = &lvl2.md;

        // gauge generators at third-order arithmetic (their third partials
        // survive into the divergence of the divergence)
        let md3 = &deep.md3;
        let gens3 = crate::connection::secondary_generators::<T3>(md3)
            .map_err(|e| GaugeError::GeneratorDefect(e.to_string()))?;
        let g3 = GenForms::<T3> {
            h: gens3.h,
            i: gens3.i.expect("n = 4"),
            k: gens3.k.expect("n = 4"),
            ell: crate::clifford::volume_form(md3),
        };
        let l0_3: Vec<Form<T3>> = match self.case {
            CaseId::I => t_basis(&g3, md3).to_vec(),
            CaseId::II => su3_basis(&g3, md3)[..8].to_vec(),
            CaseId::III => {
                let ik = cl_mul(&g3.i, &g3.k, md3);
                vec![Form::imaginary(4), g3.i, g3.k, ik]
            }
            CaseId::IV => {
                let ik = cl_mul(&g3.i, &g3.k, md3);
                vec![g3.ell, g3.i, g3.k, ik]
            }
            CaseId::V => vec![g3.i],
        };

        // A as second-order jets
        let mut a2 = [FieldJet::<DDf64>::constant(Form::zero(4, ScalarKind::Complex)); 4];
        for (mu, slot) in a2.iter_mut().enumerate() {
            let mut acc = Form::<T3>::zero(4, ScalarKind::Complex);
            for (k, row) in spec.a.iter().enumerate() {
                if let Some(e) = &row[mu] {
                    acc = acc + l0_3[k].scale_t(scalar_jet3(e, x)?);
                }
            }
            *slot = FieldJet::split(&acc);
        }

        // F at second-order arithmetic
        let b2: [Form<DDf64>; 4] =
            [deep.b[0].lift(), deep.b[1].lift(), deep.b[2].lift(), deep.b[3].lift()];
        let d2 = |mu: usize, fj: &FieldJet<DDf64>| -> Form<DDf64> {
            d_op_form(mu, fj, &b2, &lvl2.gamma, md2)
        };
        let mut f1 = [[FieldJet::<Df64>::constant(Form::zero(4, ScalarKind::Complex)); 4]; 4];
        let mut f0 = [[FieldJet::<f64>::constant(Form::zero(4, ScalarKind::Complex)); 4]; 4];
        for mu in 0..4 {
            for nu in 0..4 {
                let f_dd = d2(mu, &a2[nu]) - d2(nu, &a2[mu])
                    - commutator(&a2[mu].v, &a2[nu].v, md2);
                f1[mu][nu] = FieldJet::split(&f_dd);
                f0[mu][nu] = FieldJet::split(&f1[mu][nu].v);
            }
        }

        // R^ν at first-order arithmetic
        let md1 = &self.frame.lvl1.md;
        let b1: [Form<Df64>; 4] = [
            self.conn.b[0].lift(),
            self.conn.b[1].lift(),
            self.conn.b[2].lift(),
            self.conn.b[3].lift(),
        ];
        let vol2 = md2.vol;
        let mut r = [FieldJet::<f64>::constant(Form::zero(4, ScalarKind::Complex)); 4];
        let mut fup0 = [[Form::<f64>::zero(4, ScalarKind::Complex); 4]; 4];
        for nu in 0..4 {
            let mut acc = Form::<Df64>::zero(4, ScalarKind::Complex);
            for mu in 0..4 {
                // w = sqrt(-g) F^{μν} at second order, then D_μ at first order
                let mut w_dd = Form::<DDf64>::zero(4, ScalarKind::Complex);
                for a in 0..4 {
                    for b in 0..4 {
                        w_dd = w_dd
                            + f1[a][b]
                                .lift()
                                .scale_t(vol2 * md2.g_up[mu][a] * md2.g_up[nu][b]);
                    }
                }
                let w_fj = FieldJet::split(&w_dd);
                acc = acc
                    + d_op_form(mu, &w_fj, &b1, &self.frame.lvl1.gamma, md1);
            }
            let inv_vol = md1.vol.recip();
            let mut rr = acc.scale_t(inv_vol);
            for mu in 0..4 {
                let mut fup = Form::<Df64>::zero(4, ScalarKind::Complex);
                for a in 0..4 {
                    for b in 0..4 {
                        fup = fup
                            + f1[a][b].v.scale_t(md1.g_up[mu][a] * md1.g_up[nu][b]);
                    }
                }
                if mu == 0 {
                    // keep the raised strength at values for reporting
                }
                rr = rr - commutator(&self.a[mu].lift(), &fup, md1);
            }
            r[nu] = FieldJet::split(&rr);
            for mu in 0..4 {
                let mut fup = Form::<f64>::zero(4, ScalarKind::Complex);
                for a in 0..4 {
                    for b in 0..4 {
                        fup = fup
                            + f0[a][b]
                                .v
                                .scale_t(self.md().g_up[mu][a] * self.md().g_up[nu][b]);
                    }
                }
                fup0[mu][nu] = fup;
            }
        }
        Ok(YangMills { f: f0, r, fup: fup0 })
    }

    /// Theorem-4 style divergence residual of the Yang-Mills left side:
    /// `(1/sqrt(-g)) D_ν (sqrt(-g) R^ν) - [A_ν, R^ν]`.
    pub fn ym_divergence_residual(&self, ym: &YangMills) -> Check {
        let md = self.md();
        let md1 = &self.frame.lvl1.md;
        let mut acc = Form::<f64>::zero(4, ScalarKind::Complex);
        let mut scale = 1.0f64;
        for nu in 0..4 {
            let w = FieldJet::split(&ym.r[nu].lift().scale_t(md1.vol));
            acc = acc + self.d0(nu, &w).scale_f64(1.0 / md.vol)
                - commutator(&self.a[nu].v, &ym.r[nu].v, md);
            scale = scale.max(1.0 + w.max_abs());
        }
        Check::new("ym_divergence", acc.max_abs(), scale, Tol::D2)
    }

    /// Theorem-3 identity suite on an arbitrary (non-solution) state.
    pub fn conservation_checks(&self) -> Result<Vec<Check>, FieldError> {
        let md = self.md();
        let md1 = &self.frame.lvl1.md;
        let h = &self.conn.h.v;
        let mut out = Vec::new();

        let p = self.dirac_residual();
        let q = self.q_form();
        // Q = H P (-N)
        let hpn = cl_mul(&cl_mul(h, &p, md), &(-self.n_form.v), md);
        out.push(Check::new(
            "q_vs_hpn",
            (q - hpn).max_abs(),
            1.0 + q.max_abs(),
            Tol::Oracle,
        ));

        let chain = self.current_chain()?;
        let psi_dag = hermitian_conj(&self.psi.v, h, md)?;
        let q_dag = hermitian_conj(&q, h, md)?;
        let y1_left = cl_mul(&psi_dag, &q, md) + cl_mul(&q_dag, &self.psi.v, md);

        // divergence side
        let mut div = Form::<f64>::zero(4, ScalarKind::Complex);
        for mu in 0..4 {
            let w = FieldJet::split(&chain.j1[mu].lift().scale_t(md1.vol));
            div = div + self.d0(mu, &w).scale_f64(1.0 / md.vol);
            div = div - commutator(&self.a[mu].v, &chain.j1[mu].v, md);
        }
        let hpsih = cl_mul(&cl_mul(&psi_dag, h, md), &self.psi.v, md);
        let en = cl_mul(&self.e_form.v, &self.n_form.v, md);
        let y1_right = div + commutator(&hpsih, &en, md).scale_f64(self.m);
        out.push(Check::new(
            "y1_two_way",
            (y1_left - y1_right).max_abs(),
            1.0 + y1_left.max_abs().max(y1_right.max_abs()),
            Tol::D2,
        ));

        // auxiliary identity E{E,{N,[Ψ†HΨ, EN]}} = 0
        let innermost = commutator(&hpsih, &en, md);
        let braced = anticommutator(&self.n_form.v, &innermost, md);
        let braced = anticommutator(&self.e_form.v, &braced, md);
        let aux = cl_mul(&self.e_form.v, &braced, md);
        out.push(Check::new(
            "aux_identity",
            aux.max_abs(),
            1.0 + innermost.max_abs(),
            Tol::Alg,
        ));

        // helper: D_μ α^μ = -Γ^μ_{μν} α^ν + α^μ B_μ + B_μ† α^μ
        let mut lhs = Form::<f64>::zero(4, ScalarKind::Complex);
        let mut rhs = Form::<f64>::zero(4, ScalarKind::Complex);
        for mu in 0..4 {
            lhs = lhs + self.d0(mu, &self.alpha[mu]);
            rhs = rhs + cl_mul(&self.alpha[mu].v, &self.conn.b[mu].v, md);
            let b_dag = hermitian_conj(&self.conn.b[mu].v, h, md)?;
            rhs = rhs + cl_mul(&b_dag, &self.alpha[mu].v, md);
            for nu in 0..4 {
                rhs = rhs
                    - self.alpha[nu].v.scale_f64(self.frame.jet.gamma[mu][mu][nu]);
            }
        }
        out.push(Check::new(
            "alpha_divergence",
            (lhs - rhs).max_abs(),
            1.0 + lhs.max_abs().max(rhs.max_abs()),
            Tol::D1,
        ));
        Ok(out)
    }

    /// The conservation law residual on the projected current; vanishes for
    /// solution states.
    pub fn conservation_law_residual(&self, chain: &CurrentChain) -> Check {
        let md = self.md();
        let md1 = &self.frame.lvl1.md;
        let mut acc = Form::<f64>::zero(4, ScalarKind::Complex);
        let mut scale = 1.0f64;
        for mu in 0..4 {
            let w = FieldJet::split(&chain.j[mu].lift().scale_t(md1.vol));
            acc = acc + self.d0(mu, &w).scale_f64(1.0 / md.vol)
                - commutator(&self.a[mu].v, &chain.j[mu].v, md);
            scale = scale.max(1.0 + w.max_abs());
        }
        Check::new("conservation_law", acc.max_abs(), scale, Tol::D2)
    }

    /// Membership ladder of the current chain plus the case shortcut.
    pub fn chain_checks(&self, chain: &CurrentChain) -> Result<Vec<Check>, FieldError> {
        let md = self.md();
        let h = &self.conn.h.v;
        let mut out = Vec::new();
        let mut herm = 0.0f64;
        let mut n_comm2 = 0.0f64;
        let mut n_comm3 = 0.0f64;
        let mut e_comm3 = 0.0f64;
        let mut span = 0.0f64;
        let mut shortcut = 0.0f64;
        let mut scale = 1.0f64;
        for nu in 0..4 {
            let j1 = &chain.j1[nu].v;
            scale = scale.max(1.0 + j1.max_abs());
            herm = herm.max((hermitian_conj(j1, h, md)? - *j1).max_abs());
            n_comm2 = n_comm2.max(commutator(&chain.j2[nu].v, &self.n_form.v, md).max_abs());
            n_comm3 = n_comm3.max(commutator(&chain.j3[nu].v, &self.n_form.v, md).max_abs());
            e_comm3 = e_comm3.max(commutator(&chain.j3[nu].v, &self.e_form.v, md).max_abs());
            let p = project_l0(&chain.j[nu].v, &self.value_l0(), h, md)?;
            span = span.max((chain.j[nu].v - p).max_abs());
            shortcut = shortcut.max((self.current_shortcut(nu)? - chain.j[nu].v).max_abs());
        }
        out.push(Check::new("j1_hermitian", herm, scale, Tol::Alg));
        out.push(Check::new("j2_commutes_n", n_comm2, scale, Tol::Alg));
        out.push(Check::new("j3_commutes_n", n_comm3, scale, Tol::Alg));
        out.push(Check::new("j3_commutes_e", e_comm3, scale, Tol::Alg));
        out.push(Check::new("j_in_span", span, scale, Tol::Alg));
        out.push(Check::new("j_case_shortcut", shortcut, scale, Tol::Oracle));
        Ok(out)
    }

    /// The three Lagrangian densities `(L0, L1, L)` and the imaginary
    /// residual of the first.
    pub fn lagrangians(&self) -> Result<Lagrangians, FieldError> {
        let md = self.md();
        let p = self.dirac_residual();
        let psi_star = involution(&self.psi.v);
        let p_star = involution(&p);
        let inner = cl_mul(&psi_star, &p, md) + cl_mul(&p_star, &self.psi.v, md);
        let t0 = trace(&cl_mul(&self.conn.h.v, &inner, md));
        let l0 = 0.25 * md.vol * t0.re;
        let imag = 0.25 * md.vol * t0.im.abs();

        let f = self.ym_strength_values();
        let mut t1 = Cplx::<f64>::zero();
        for mu in 0..4 {
            for nu in 0..4 {
                let mut fup = Form::<f64>::zero(4, ScalarKind::Complex);
                for a in 0..4 {
                    for b in 0..4 {
                        fup = fup + f.get(&[a, b]).scale_t(md.g_up[mu][a] * md.g_up[nu][b]);
                    }
                }
                t1 = t1 + trace(&cl_mul(f.get(&[mu, nu]), &fup, md));
            }
        }
        let l1 = 0.25 * md.vol * t1.re;
        let imag = imag.max(0.25 * md.vol * t1.im.abs());
        Ok(Lagrangians { l0, l1, total: l1 + 8.0 * l0, imag_residual: imag })
    }

    /// Unitary gauge transform of the state per the first gauge theorem:
    /// the connection and case data stay, the fields move.
    pub fn apply_unitary(&self, u: &UnitaryGauge) -> Result<StatePoint<'a>, FieldError> {
        let md1 = &self.frame.lvl1.md;
        let psi1 = cl_mul(&self.psi.lift(), &u.u1, md1);
        let mut a = [FieldJet::constant(Form::zero(4, ScalarKind::Complex)); 4];
        for mu in 0..4 {
            let conj = cl_mul(&cl_mul(&u.u_inv1, &self.a[mu].lift(), md1), &u.u1, md1);
            let shift = cl_mul(&u.u_inv1, &u.du1[mu], md1);
            a[mu] = FieldJet::split(&(conj - shift));
        }
        Ok(StatePoint {
            frame: self.frame,
            conn: self.conn.clone(),
            case: self.case,
            n_form: self.n_form,
            e_form: self.e_form,
            l0: self.l0.clone(),
            alpha: self.alpha,
            psi: FieldJet::split(&psi1),
            a,
            m: self.m,
        })
    }

    /// Spin gauge transform of the state per the second gauge theorem: the
    /// whole tuple moves, including the connection and conjugation data.
    pub fn apply_spin(&self, s: &SpinGauge) -> Result<StatePoint<'a>, FieldError> {
        let md1 = &self.frame.lvl1.md;
        let conj1 = |f: &Form<Df64>| cl_mul(&cl_mul(&s.s_inv1, f, md1), &s.s1, md1);
        let psi1 = cl_mul(&self.psi.lift(), &s.s1, md1);
        let mut a = [FieldJet::constant(Form::zero(4, ScalarKind::Complex)); 4];
        for mu in 0..4 {
            a[mu] = FieldJet::split(&conj1(&self.a[mu].lift()));
        }
        let conn = s.conn_data(self.frame);
        let n_form = FieldJet::split(&conj1(&self.n_form.lift()));
        let e_form = FieldJet::split(&conj1(&self.e_form.lift()));
        let l0: Vec<FieldJet<f64>> =
            self.l0.iter().map(|t| FieldJet::split(&conj1(&t.lift()))).collect();
        let alpha = Self::alpha_from(&conn.h, self.frame);
        Ok(StatePoint {
            frame: self.frame,
            conn,
            case: self.case,
            n_form,
            e_form,
            l0,
            alpha,
            psi: FieldJet::split(&psi1),
            a,
            m: self.m,
        })
    }
}

trait PipeMulLeft {
    fn pipe_mul_left(self, lhs: &Form<f64>, md: &MetricData<f64>) -> Form<f64>;
}

impl PipeMulLeft for Form<f64> {
    fn pipe_mul_left(self, lhs: &Form<f64>, md: &MetricData<f64>) -> Form<f64> {
        cl_mul(lhs, &self, md)
    }
}

/// The four stages of the current chain, as field jets per index.
pub struct CurrentChain {
    pub j1: [FieldJet<f64>; 4],
    pub j2: [FieldJet<f64>; 4],
    pub j3: [FieldJet<f64>; 4],
    pub j: [FieldJet<f64>; 4],
}

/// Yang-Mills data: strength jets, its raised values and the left side of
/// the source equation.
pub struct YangMills {
    pub f: [[FieldJet<f64>; 4]; 4],
    pub fup: [[Form<f64>; 4]; 4],
    pub r: [FieldJet<f64>; 4],
}

impl YangMills {
    pub fn strength_checks(&self, state: &StatePoint) -> Result<Vec<Check>, FieldError> {
        let md = state.md();
        let mut anti = 0.0f64;
        let mut span = 0.0f64;
        let mut scale = 1.0f64;
        for mu in 0..4 {
            for nu in 0..4 {
                let f = &self.f[mu][nu].v;
                scale = scale.max(1.0 + f.max_abs());
                anti = anti.max((*f + self.f[nu][mu].v).max_abs());
                let p = project_l0(f, &state.value_l0(), &state.conn.h.v, md)?;
                span = span.max((*f - p).max_abs());
            }
        }
        Ok(vec![
            Check::new("f_antisymmetric", anti, scale, Tol::Alg),
            Check::new("f_in_l0", span, scale, Tol::Alg),
        ])
    }
}

/// Lagrangian densities.
pub struct Lagrangians {
    pub l0: f64,
    pub l1: f64,
    pub total: f64,
    pub imag_residual: f64,
}

/// Construct a massless plane-wave solution of the Dirac-type equation on
/// the flat chart: `Ψ = exp(-i k·x) Φ` with `Φ` in the kernel of the symbol
/// map, for a complex-case wave space and a null covector `k`.
pub fn plane_wave_spec(
    case: CaseId,
    k: [f64; 4],
    md: &MetricData<f64>,
    pick: usize,
) -> Result<FieldSpec, FieldError> {
    assert!(case.complex(), "plane-wave construction uses the complex cases");
    // null check
    let mut ksq = 0.0;
    for mu in 0..4 {
        for nu in 0..4 {
            ksq += md.g_up[mu][nu] * k[mu] * k[nu];
        }
    }
    assert!(ksq.abs() < 1e-12, "wave covector must be null, got k^2 = {ksq}");

    let masks: Vec<usize> = (0..16)
        .filter(|m: &usize| !case.even_only() || (m.count_ones() % 2 == 0))
        .collect();
    let mut kslash = Form::<f64>::zero(4, ScalarKind::Real);
    for mu in 0..4 {
        kslash = kslash + Form::dx(4, mu).scale_f64(k[mu]);
    }
    // real-linear symbol map over (re, im) pairs of the allowed blades
    let dim = 2 * masks.len();
    let mut mat = DMatrix::<f64>::zeros(dim, dim);
    for (col, &mask) in masks.iter().enumerate() {
        for (part, unit) in [Cplx::one(), Cplx::i()].into_iter().enumerate() {
            let basis = Form::<f64>::zero(4, ScalarKind::Complex)
                .tap_set(mask, unit);
            let image = cl_mul(&kslash, &basis, md);
            for (row, &rm) in masks.iter().enumerate() {
                mat[(2 * row, 2 * col + part)] = image.coeff(rm).re;
                mat[(2 * row + 1, 2 * col + part)] = image.coeff(rm).im;
            }
        }
    }
    let svd = mat.svd(true, true);
    let smax = svd.singular_values.iter().fold(0.0f64, |m, &s| m.max(s));
    let v_t = svd.v_t.as_ref().expect("svd with vectors");
    let null: Vec<usize> = (0..svd.singular_values.len())
        .filter(|&i| svd.singular_values[i] < 1e-10 * (1.0 + smax))
        .collect();
    if null.is_empty() {
        return Err(FieldError::EmptyKernel);
    }
    let row = null[pick % null.len()];
    let mut phi = Form::<f64>::zero(4, ScalarKind::Complex);
    for (col, &mask) in masks.iter().enumerate() {
        phi.set_coeff(
            mask,
            Cplx::from_f64s(v_t[(row, 2 * col)], v_t[(row, 2 * col + 1)]),
        );
    }

    // Ψ components: (p + i q) e^{-i k·x}
    let mut psi = FormFieldExpr::new(4, 0, 0, ScalarKind::Complex);
    let kx = {
        let mut e: Option<Expr> = None;
        for mu in 0..4 {
            if k[mu] == 0.0 {
                continue;
            }
            let term = Expr::Bin(
                BinOp::Mul,
                Box::new(Expr::Num(k[mu])),
                Box::new(Expr::Var(mu)),
            );
            e = Some(match e {
                None => term,
                Some(prev) => Expr::Bin(BinOp::Add, Box::new(prev), Box::new(term)),
            });
        }
        e.unwrap_or(Expr::Num(0.0))
    };
    let cos_kx = Expr::Fun(crate::expr::Func::Cos, Box::new(kx.clone()));
    let sin_kx = Expr::Fun(crate::expr::Func::Sin, Box::new(kx));
    let lin = |a: f64, ca: &Expr, b: f64, cb: &Expr| -> Option<Expr> {
        if a == 0.0 && b == 0.0 {
            return None;
        }
        let ta = Expr::Bin(BinOp::Mul, Box::new(Expr::Num(a)), Box::new(ca.clone()));
        let tb = Expr::Bin(BinOp::Mul, Box::new(Expr::Num(b)), Box::new(cb.clone()));
        Some(if a == 0.0 {
            tb
        } else if b == 0.0 {
            ta
        } else {
            Expr::Bin(BinOp::Add, Box::new(ta), Box::new(tb))
        })
    };
    for &mask in &masks {
        let c = phi.coeff(mask);
        if c.abs_val() == 0.0 {
            continue;
        }
        // re = p cos + q sin, im = q cos - p sin
        let re = lin(c.re, &cos_kx, c.im, &sin_kx);
        let im = lin(c.im, &cos_kx, -c.re, &sin_kx);
        psi.entry_mut(&[]).push((mask, re, im));
    }
    let mut spec = FieldSpec::empty(case);
    spec.psi = psi;
    spec.mass = 0.0;
    Ok(spec)
}

trait TapSet {
    fn tap_set(self, mask: usize, z: Cplx<f64>) -> Self;
}

impl TapSet for Form<f64> {
    fn tap_set(mut self, mask: usize, z: Cplx<f64>) -> Self {
        self.set_coeff(mask, z);
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::assert_checks;
    use crate::connection::BVariant;
    use crate::expr::parse_expr;
    use crate::geometry::MetricSpec;

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

    fn sample_fields(case: CaseId) -> FieldSpec {
        let mut spec = FieldSpec::empty(case);
        let complexify = case.complex();
        let even = case.even_only();
        let mut push = |mask: usize, re: &str, im: Option<&str>| {
            spec.psi.entry_mut(&[]).push((
                mask,
                Some(parse_expr(re, 4).unwrap()),
                im.map(|s| parse_expr(s, 4).unwrap()),
            ));
        };
        push(0, "0.4 + 0.2*x1", if complexify { Some("0.1*x2") } else { None });
        push(0b0011, "0.3*sin(x2)", if complexify { Some("0.2*x4") } else { None });
        push(0b1111, "0.15*x3", None);
        if !even {
            push(0b0001, "0.25*cos(x3)", if complexify { Some("0.1") } else { None });
            push(0b0111, "0.2*x4", None);
        }
        for (k, row) in spec.a.iter_mut().enumerate() {
            row[k % 4] = Some(parse_expr(if k % 2 == 0 { "0.3*sin(x1)" } else { "0.2*x2" }, 4).unwrap());
            row[(k + 1) % 4] = Some(parse_expr("0.1*x3", 4).unwrap());
        }
        spec.mass = 0.7;
        spec
    }

    #[test]
    fn zero_state_residuals_vanish() {
        let x = [0.1, 0.2, -0.1, 0.3];
        let frame = Frame::new(&MetricSpec::minkowski(), &x, BVariant::General4).unwrap();
        let spec = FieldSpec::empty(CaseId::I);
        let state = StatePoint::new(&frame, &spec, &x).unwrap();
        assert_eq!(state.dirac_residual().max_abs(), 0.0);
        assert_eq!(state.q_form().max_abs(), 0.0);
        let chain = state.current_chain().unwrap();
        assert_eq!(chain.j[0].v.max_abs(), 0.0);
        let lag = state.lagrangians().unwrap();
        assert_eq!((lag.l0, lag.l1, lag.total), (0.0, 0.0, 0.0));
    }

    #[test]
    fn constant_wave_flat_case() {
        // Minkowski, A = 0, constant Ψ: P = -m Ψ E
        let x = [0.0; 4];
        let frame = Frame::new(&MetricSpec::minkowski(), &x, BVariant::General4).unwrap();
        let mut spec = FieldSpec::empty(CaseId::I);
        spec.psi.entry_mut(&[]).push((0b0011, Some(parse_expr("0.8", 4).unwrap()), None));
        spec.mass = 0.5;
        let state = StatePoint::new(&frame, &spec, &x).unwrap();
        let p = state.dirac_residual();
        let md = &frame.lvl0.md;
        let expect = -cl_mul(&state.psi.v, &state.e_form.v, md).scale_f64(0.5);
        assert!((p - expect).max_abs() < 1e-14);
    }

    #[test]
    fn theorem3_machinery_all_cases() {
        let x = [0.15, -0.2, 0.1, 0.3];
        let frame = Frame::new(&curved_spec(), &x, BVariant::General4).unwrap();
        for case in [CaseId::I, CaseId::II, CaseId::III, CaseId::IV, CaseId::V] {
            let spec = sample_fields(case);
            let state = StatePoint::new(&frame, &spec, &x).unwrap();
            assert_checks(&state.membership_checks(), 1.0);
            let checks = state.conservation_checks().unwrap();
            assert_checks(&checks, 1.0);
            let chain = state.current_chain().unwrap();
            assert_checks(&state.chain_checks(&chain).unwrap(), 1.0);
        }
    }

    #[test]
    fn yang_mills_divergence_identity() {
        let x = [0.15, -0.2, 0.1, 0.3];
        for metric in [MetricSpec::minkowski(), curved_spec()] {
            let frame = Frame::new_deep(&metric, &x, BVariant::General4).unwrap();
            let spec = sample_fields(CaseId::II);
            let state = StatePoint::new(&frame, &spec, &x).unwrap();
            let ym = state.yang_mills(&spec, &x).unwrap();
            assert_checks(&ym.strength_checks(&state).unwrap(), 1.0);
            let div = state.ym_divergence_residual(&ym);
            assert!(div.pass(1.0), "divergence {:e} > {:e}", div.residual, div.tol(1.0));
            // strength values agree with the jet version
            let f_vals = state.ym_strength_values();
            for mu in 0..4 {
                for nu in 0..4 {
                    let d = (*f_vals.get(&[mu, nu]) - ym.f[mu][nu].v).max_abs();
                    assert!(d < 1e-11 * (1.0 + ym.f[mu][nu].v.max_abs()));
                }
            }
        }
    }

    #[test]
    fn abelian_constant_strength() {
        // case v, A = a_μ I with constant a: F_{μν} = 0 in flat space
        let x = [0.0; 4];
        let frame = Frame::new_deep(&MetricSpec::minkowski(), &x, BVariant::General4).unwrap();
        let mut spec = FieldSpec::empty(CaseId::V);
        spec.a[0] = [
            Some(parse_expr("0.3", 4).unwrap()),
            Some(parse_expr("0.7", 4).unwrap()),
            None,
            None,
        ];
        let state = StatePoint::new(&frame, &spec, &x).unwrap();
        let f = state.ym_strength_values();
        assert!(f.max_abs() < 1e-14);
        let ym = state.yang_mills(&spec, &x).unwrap();
        for r in &ym.r {
            assert!(r.v.max_abs() < 1e-12);
        }
    }

    #[test]
    fn plane_wave_solves_dirac() {
        let x = [0.3, -0.4, 0.25, 0.6];
        let frame = Frame::new(&MetricSpec::minkowski(), &x, BVariant::General4).unwrap();
        let md = frame.lvl0.md;
        for case in [CaseId::I, CaseId::III] {
            let k = [0.8, 0.8, 0.0, 0.0];
            let spec = plane_wave_spec(case, k, &md, 0).unwrap();
            let state = StatePoint::new(&frame, &spec, &x).unwrap();
            assert!(state.psi.v.max_abs() > 1e-3, "wave should be nontrivial");
            let p = state.dirac_residual();
            assert!(p.max_abs() < 1e-10, "dirac residual {:e}", p.max_abs());
            // conservation law on a solution state
            let chain = state.current_chain().unwrap();
            let c = state.conservation_law_residual(&chain);
            assert!(c.pass(1.0), "conservation {:e} > {:e}", c.residual, c.tol(1.0));
            // the dirac lagrangian vanishes on solutions
            let lag = state.lagrangians().unwrap();
            assert!(lag.l0.abs() < 1e-10);
        }
    }

    #[test]
    fn unitary_gauge_covariance() {
        let x = [0.15, -0.2, 0.1, 0.3];
        let frame = Frame::new_deep(&curved_spec(), &x, BVariant::General4).unwrap();
        let spec = sample_fields(CaseId::II);
        let state = StatePoint::new(&frame, &spec, &x).unwrap();
        let coeffs: Vec<Expr> = (0..8)
            .map(|k| {
                parse_expr(
                    if k % 2 == 0 { "0.25*sin(x1 + 0.5*x2)" } else { "0.2*x3" },
                    4,
                )
                .unwrap()
            })
            .collect();
        let u = UnitaryGauge::build(&frame, CaseId::II, &coeffs, &x).unwrap();
        let transformed = state.apply_unitary(&u).unwrap();
        let md = &frame.lvl0.md;

        // Dirac residual covariance
        let p = state.dirac_residual();
        let p_t = transformed.dirac_residual();
        let pu = cl_mul(&p, &u.u0, md);
        assert!(
            (p_t - pu).max_abs() < 1e-9 * (1.0 + pu.max_abs()),
            "residual covariance failed: {:e}",
            (p_t - pu).max_abs()
        );

        // current covariance
        let j = state.current_chain().unwrap();
        let jt = transformed.current_chain().unwrap();
        for nu in 0..4 {
            let conj = cl_mul(&cl_mul(&u.u_inv0, &j.j[nu].v, md), &u.u0, md);
            assert!((jt.j[nu].v - conj).max_abs() < 1e-9 * (1.0 + conj.max_abs()));
        }

        // lagrangian invariance
        let l = state.lagrangians().unwrap();
        let lt = transformed.lagrangians().unwrap();
        assert!((l.l0 - lt.l0).abs() < 1e-9 * (1.0 + l.l0.abs()));
        assert!((l.l1 - lt.l1).abs() < 1e-9 * (1.0 + l.l1.abs()));

        // strength covariance
        let ym = state.yang_mills(&spec, &x).unwrap();
        let ft = transformed.ym_strength_values();
        for mu in 0..4 {
            for nu in 0..4 {
                let conj = cl_mul(&cl_mul(&u.u_inv0, &ym.f[mu][nu].v, md), &u.u0, md);
                let d = (*ft.get(&[mu, nu]) - conj).max_abs();
                assert!(d < 1e-9 * (1.0 + conj.max_abs()), "F covariance {d:e}");
            }
        }

        // transformed identities still hold
        assert_checks(&transformed.conservation_checks().unwrap(), 1.0);
    }

    #[test]
    fn spin_gauge_covariance() {
        let x = [0.15, -0.2, 0.1, 0.3];
        let frame = Frame::new_deep(&curved_spec(), &x, BVariant::General4).unwrap();
        let spec = sample_fields(CaseId::I);
        let state = StatePoint::new(&frame, &spec, &x).unwrap();
        let coeffs = vec![
            (0usize, 1usize, parse_expr("0.3*sin(x2)", 4).unwrap()),
            (1, 2, parse_expr("0.2*x1", 4).unwrap()),
            (2, 3, parse_expr("-0.15*cos(x4)", 4).unwrap()),
        ];
        let s = SpinGauge::build(&frame, &coeffs, &x).unwrap();
        let transformed = state.apply_spin(&s).unwrap();
        // the transformed tuple satisfies the structure equations (checked in
        // gauge) and the conservation identities with the transformed data
        assert_checks(&transformed.conservation_checks().unwrap(), 1.0);
        let chain = transformed.current_chain().unwrap();
        assert_checks(&transformed.chain_checks(&chain).unwrap(), 1.0);
        // residual norms are preserved
        let p = state.dirac_residual();
        let pt = transformed.dirac_residual();
        let md = &frame.lvl0.md;
        let ps = cl_mul(&p, &s.s0, md);
        assert!((pt - ps).max_abs() < 1e-8 * (1.0 + ps.max_abs()));
    }
}
