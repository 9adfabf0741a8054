//! Lie-algebraic layer: the sixteen anti-Hermitian generators, the special
//! unitary recombination, the omega-case table with its `N`/`E` pair and
//! gauge subalgebra, orthonormal projections, and the unitary and spin gauge
//! transforms.

use crate::check::{Check, Tol};
use crate::clifford::{
    cl_exp, cl_mul, commutator, hermitian_conj, involution, scalar_product, AlgebraError, Form,
    ScalarKind,
};
use crate::connection::{ConnData, Frame};
use crate::expr::{DomainError, Expr};
use crate::geometry::{Df64, MetricData};
use crate::num::{Cplx, Jet2, Scalar, D1, LANES};
use crate::tensor::{upsilon_form, FieldJet};
use nalgebra::DMatrix;
use thiserror::Error;

pub type DDf64 = D1<Df64>;

#[derive(Debug, Error)]
pub enum GaugeError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("field evaluation: {0}")]
    Eval(#[from] DomainError),
    #[error("generator defect: {0}")]
    GeneratorDefect(String),
    #[error("map is not in the gauge group: {0}")]
    NotInGroup(String),
    #[error("map is not in the spin group: {0}")]
    NotInSpin(String),
    #[error("deep frame data required for derivative-level transforms")]
    MissingDeepFrame,
}

/// The five omega cases.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaseId {
    I,
    II,
    III,
    IV,
    V,
}

impl CaseId {
    pub fn parse(s: &str) -> Option<CaseId> {
        match s.trim().to_ascii_lowercase().as_str() {
            "i" | "1" => Some(CaseId::I),
            "ii" | "2" => Some(CaseId::II),
            "iii" | "3" => Some(CaseId::III),
            "iv" | "4" => Some(CaseId::IV),
            "v" | "5" => Some(CaseId::V),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CaseId::I => "i",
            CaseId::II => "ii",
            CaseId::III => "iii",
            CaseId::IV => "iv",
            CaseId::V => "v",
        }
    }

    /// Complex scalars allowed in the wave space?
    pub fn complex(self) -> bool {
        matches!(self, CaseId::I | CaseId::II | CaseId::III)
    }

    /// Wave space restricted to even forms?
    pub fn even_only(self) -> bool {
        matches!(self, CaseId::III | CaseId::V)
    }

    /// Gauge subalgebra dimension.
    pub fn dim_l0(self) -> usize {
        match self {
            CaseId::I => 16,
            CaseId::II => 8,
            CaseId::III | CaseId::IV => 4,
            CaseId::V => 1,
        }
    }
}

/// The generator forms a basis is built from (chart dimension 4).
#[derive(Clone, Copy)]
pub struct GenForms<T: Scalar> {
    pub h: Form<T>,
    pub i: Form<T>,
    pub k: Form<T>,
    pub ell: Form<T>,
}

impl GenForms<Df64> {
    pub fn from_frame(frame: &Frame) -> Self {
        Self {
            h: frame.h.lift(),
            i: frame.i_gen.expect("n = 4 generators").lift(),
            k: frame.k_gen.expect("n = 4 generators").lift(),
            ell: frame.ell.expect("n = 4 volume form").lift(),
        }
    }
}

impl GenForms<DDf64> {
    pub fn from_deep(frame: &Frame) -> Result<Self, GaugeError> {
        let deep = frame.deep.as_ref().ok_or(GaugeError::MissingDeepFrame)?;
        Ok(Self {
            h: deep.h.lift(),
            i: deep.i.expect("n = 4 generators").lift(),
            k: deep.k.expect("n = 4 generators").lift(),
            ell: deep.ell.expect("n = 4 volume form").lift(),
        })
    }
}

/// The sixteen anti-Hermitian basis generators, in the fixed order
/// `iH, I, K, HI, HK, IK, HIK, l, ilH, ilI, ilK, lHI, lHK, ilIK, lHIK, i`.
pub fn t_basis<T: Scalar>(g: &GenForms<T>, md: &MetricData<T>) -> [Form<T>; 16] {
    let m = |a: &Form<T>, b: &Form<T>| cl_mul(a, b, md);
    let i_unit = Cplx::<T>::i();
    let hi = m(&g.h, &g.i);
    let hk = m(&g.h, &g.k);
    let ik = m(&g.i, &g.k);
    let hik = m(&g.h, &ik);
    let lh = m(&g.ell, &g.h);
    let li = m(&g.ell, &g.i);
    let lk = m(&g.ell, &g.k);
    let lhi = m(&g.ell, &hi);
    let lhk = m(&g.ell, &hk);
    let lik = m(&g.ell, &ik);
    let lhik = m(&g.ell, &hik);
    [
        g.h.scale_c(i_unit),
        g.i,
        g.k,
        hi,
        hk,
        ik,
        hik,
        g.ell,
        lh.scale_c(i_unit),
        li.scale_c(i_unit),
        lk.scale_c(i_unit),
        lhi,
        lhk,
        lik.scale_c(i_unit),
        lhik,
        Form::imaginary(4),
    ]
}

/// The recombined orthonormal basis whose first eight members close into the
/// eight-dimensional special unitary algebra.
pub fn su3_basis<T: Scalar>(g: &GenForms<T>, md: &MetricData<T>) -> [Form<T>; 16] {
    let m = |a: &Form<T>, b: &Form<T>| cl_mul(a, b, md);
    let iu = Cplx::<T>::i();
    let r2 = std::f64::consts::SQRT_2.recip();
    let r3 = 3.0f64.sqrt().recip();
    let r6 = 6.0f64.sqrt().recip();
    let hi = m(&g.h, &g.i);
    let hk = m(&g.h, &g.k);
    let ik = m(&g.i, &g.k);
    let hik = m(&g.h, &ik);
    let lh = m(&g.ell, &g.h);
    let li = m(&g.ell, &g.i);
    let lk = m(&g.ell, &g.k);
    let lhi = m(&g.ell, &hi);
    let lhk = m(&g.ell, &hk);
    let lik = m(&g.ell, &ik);
    let lhik = m(&g.ell, &hik);
    let ih = g.h.scale_c(iu);
    [
        (hik + ik).scale_f64(r2),
        (hk + g.k).scale_f64(r2),
        (-hi - g.i).scale_f64(r2),
        (g.ell - li.scale_c(iu)).scale_f64(r2),
        (lhi + lh.scale_c(iu)).scale_f64(r2),
        (-lhk + lik.scale_c(iu)).scale_f64(r2),
        (-lhik - lk.scale_c(iu)).scale_f64(r2),
        (-hi - ih.scale_f64(2.0) + g.i).scale_f64(r6),
        (lhk + lik.scale_c(iu)).scale_f64(r2),
        (-lhik + lk.scale_c(iu)).scale_f64(r2),
        (g.ell + li.scale_c(iu)).scale_f64(r2),
        (-lhi + lh.scale_c(iu)).scale_f64(r2),
        (-hik + ik).scale_f64(r2),
        (-hk + g.k).scale_f64(r2),
        (hi - ih - g.i).scale_f64(r3),
        Form::imaginary(4),
    ]
}

/// One omega case at a point: the wave space flags, the `N`/`E` pair and the
/// gauge subalgebra generators.
#[derive(Clone)]
pub struct OmegaCase<T: Scalar = f64> {
    pub id: CaseId,
    pub n_form: Form<T>,
    pub e_form: Form<T>,
    pub l0: Vec<Form<T>>,
}

pub fn omega_case<T: Scalar>(id: CaseId, g: &GenForms<T>, md: &MetricData<T>) -> OmegaCase<T> {
    let i_unit = Form::<T>::imaginary(4);
    let one = Form::<T>::one(4);
    let ik = cl_mul(&g.i, &g.k, md);
    let (n_form, e_form, l0): (Form<T>, Form<T>, Vec<Form<T>>) = match id {
        CaseId::I => (i_unit, one, t_basis(g, md).to_vec()),
        CaseId::II => (i_unit, one, su3_basis(g, md)[..8].to_vec()),
        CaseId::III => (i_unit, g.h, vec![i_unit, g.i, g.k, ik]),
        CaseId::IV => (g.ell, one, vec![g.ell, g.i, g.k, ik]),
        CaseId::V => (g.i, g.h, vec![g.i]),
    };
    OmegaCase { id, n_form, e_form, l0 }
}

/// Distance of a form from the omega space of a case (odd content for the
/// even cases, imaginary content for the real cases).
pub fn omega_membership_residual(id: CaseId, u: &Form<f64>) -> f64 {
    let mut r = 0.0f64;
    if id.even_only() {
        r = r.max((u.grade_part(1) + u.grade_part(3)).max_abs());
    }
    if !id.complex() {
        r = r.max(u.max_imag());
    }
    r
}

/// Orthonormal projection onto the spanned generators: `Σ_k (U, t_k) t_k`.
pub fn project_l0<T: Scalar>(
    u: &Form<T>,
    gens: &[Form<T>],
    h: &Form<T>,
    md: &MetricData<T>,
) -> Result<Form<T>, AlgebraError> {
    let mut out = Form::zero(4, u.kind);
    for t in gens {
        let coef = scalar_product(u, t, h, md)?;
        out = out + t.scale_c(coef);
    }
    Ok(out)
}

/// Structure constants `c^q_{kl} = Re([t_k, t_l], t_q)` together with the
/// worst imaginary part and the worst reconstruction error of the bracket.
pub struct StructureConstants {
    pub c: Vec<Vec<Vec<f64>>>,
    pub imag_residual: f64,
    pub recon_residual: f64,
}

pub fn structure_constants(
    gens: &[Form<f64>],
    h: &Form<f64>,
    md: &MetricData<f64>,
) -> Result<StructureConstants, AlgebraError> {
    let p = gens.len();
    let mut c = vec![vec![vec![0.0; p]; p]; p];
    let mut imag = 0.0f64;
    let mut recon = 0.0f64;
    for k in 0..p {
        for l in 0..p {
            let br = commutator(&gens[k], &gens[l], md);
            let mut rebuilt = Form::<f64>::zero(4, br.kind);
            for q in 0..p {
                let z = scalar_product(&br, &gens[q], h, md)?;
                imag = imag.max(z.im.abs());
                c[q][k][l] = z.re;
                rebuilt = rebuilt + gens[q].scale_f64(z.re);
            }
            recon = recon.max((br - rebuilt).max_abs());
        }
    }
    Ok(StructureConstants { c, imag_residual: imag, recon_residual: recon })
}

/// Generator checks shared by the anti-Hermitian and special-unitary bases:
/// orthonormality, anti-Hermiticity, flat-derivative annihilation and
/// bracket reconstruction.
pub fn basis_checks(
    label: &str,
    frame: &Frame,
    gens0: &[Form<f64>],
    gens1: &[Form<Df64>],
) -> Result<Vec<Check>, GaugeError> {
    let md = &frame.lvl0.md;
    let h = &frame.h.v;
    let p = gens0.len();
    let mut out = Vec::new();

    let mut ortho = 0.0f64;
    let mut anti = 0.0f64;
    for k in 0..p {
        let dagger = hermitian_conj(&gens0[k], h, md)?;
        anti = anti.max((dagger + gens0[k]).max_abs());
        for l in 0..p {
            let z = scalar_product(&gens0[k], &gens0[l], h, md)?;
            let delta = if k == l { 1.0 } else { 0.0 };
            ortho = ortho.max((z.re - delta).hypot(z.im));
        }
    }
    out.push(Check::new(format!("{label}_orthonormal"), ortho, 2.0, Tol::Alg));
    out.push(Check::new(format!("{label}_antihermitian"), anti, 2.0, Tol::Alg));

    let mut dvan = 0.0f64;
    let mut scale = 1.0f64;
    for g1 in gens1 {
        let fj = FieldJet::split(g1);
        scale = scale.max(1.0 + fj.max_abs());
        for mu in 0..4 {
            dvan = dvan.max(frame.d0(mu, &fj).max_abs());
        }
    }
    out.push(Check::new(format!("{label}_annihilated"), dvan, scale, Tol::D1));

    let sc = structure_constants(gens0, h, md)?;
    out.push(Check::new(format!("{label}_c_real"), sc.imag_residual, 2.0, Tol::Alg));
    out.push(Check::new(format!("{label}_c_reconstructs"), sc.recon_residual, 4.0, Tol::Alg));
    // antisymmetry of the bracket in its two lower labels
    let mut antisym = 0.0f64;
    for q in 0..p {
        for k in 0..p {
            for l in 0..p {
                antisym = antisym.max((sc.c[q][k][l] + sc.c[q][l][k]).abs());
            }
        }
    }
    out.push(Check::new(format!("{label}_c_antisymmetric"), antisym, 4.0, Tol::Alg));
    Ok(out)
}

/// Checks specific to the special-unitary recombination: closure of the
/// first eight generators, the mixed bracket landing in generators 9..15,
/// and the rank of the closed structure tensor.
pub fn su3_checks(frame: &Frame) -> Result<Vec<Check>, GaugeError> {
    let md = &frame.lvl0.md;
    let h = &frame.h.v;
    let g1 = GenForms::from_frame(frame);
    let gens1 = su3_basis(&g1, &frame.lvl1.md);
    let gens0: Vec<Form<f64>> = gens1.iter().map(|f| FieldJet::split(f).v).collect();
    let mut out = basis_checks("su3", frame, &gens0, &gens1)?;

    let mut closure = 0.0f64;
    let mut mixed = 0.0f64;
    for k in 0..8 {
        for l in 0..8 {
            let br = commutator(&gens0[k], &gens0[l], md);
            for t in gens0.iter().skip(8) {
                closure = closure.max(scalar_product(&br, t, h, md)?.abs_val());
            }
        }
        for r in 8..16 {
            let br = commutator(&gens0[k], &gens0[r], md);
            // projection onto the first eight and onto the unit-imaginary
            // generator must vanish
            for (q, t) in gens0.iter().enumerate() {
                if q < 8 || q == 15 {
                    mixed = mixed.max(scalar_product(&br, t, h, md)?.abs_val());
                }
            }
        }
    }
    out.push(Check::new("su3_closure", closure, 4.0, Tol::Alg));
    out.push(Check::new("su3_mixed_bracket", mixed, 4.0, Tol::Alg));

    let sc = structure_constants(&gens0[..8], h, md)?;
    let mut m = DMatrix::<f64>::zeros(8, 64);
    for q in 0..8 {
        for k in 0..8 {
            for l in 0..8 {
                m[(q, k * 8 + l)] = sc.c[q][k][l];
            }
        }
    }
    let svd = m.svd(false, false);
    let smax = svd.singular_values.iter().fold(0.0f64, |a, &s| a.max(s));
    let rank = svd.singular_values.iter().filter(|&&s| s > 1e-9 * (1.0 + smax)).count();
    out.push(Check::new("su3_adjoint_rank", (rank as f64 - 8.0).abs(), 1.0, Tol::Abs(0.5)));
    Ok(out)
}

/// Omega-case checks: the `N`/`E` relations, flat-derivative annihilation,
/// the anti-Hermitian space and maximal-subalgebra dimensions, and unitarity
/// of exponentials of the gauge algebra.
pub fn case_checks(frame: &Frame, id: CaseId, rng_seed: u64) -> Result<Vec<Check>, GaugeError> {
    use rand::{Rng, SeedableRng};
    let md = &frame.lvl0.md;
    let md1 = &frame.lvl1.md;
    let h = &frame.h.v;
    let g1 = GenForms::from_frame(frame);
    let case1 = omega_case(id, &g1, md1);
    let case0 = OmegaCase {
        id,
        n_form: FieldJet::split(&case1.n_form).v,
        e_form: FieldJet::split(&case1.e_form).v,
        l0: case1.l0.iter().map(|f| FieldJet::split(f).v).collect(),
    };
    let one = Form::<f64>::one(4);
    let mut out = Vec::new();
    let nf = &case0.n_form;
    let ef = &case0.e_form;
    out.push(Check::new("case_n2", (cl_mul(nf, nf, md) + one).max_abs(), 2.0, Tol::Alg));
    out.push(Check::new("case_e2", (cl_mul(ef, ef, md) - one).max_abs(), 2.0, Tol::Alg));
    out.push(Check::new("case_ne_commute", commutator(nf, ef, md).max_abs(), 2.0, Tol::Alg));
    out.push(Check::new(
        "case_n_antihermitian",
        (hermitian_conj(nf, h, md)? + *nf).max_abs(),
        2.0,
        Tol::Alg,
    ));
    out.push(Check::new(
        "case_e_hermitian",
        (hermitian_conj(ef, h, md)? - *ef).max_abs(),
        2.0,
        Tol::Alg,
    ));
    let mut dn = 0.0f64;
    for (f1, _) in [(&case1.n_form, "n"), (&case1.e_form, "e")] {
        let fj = FieldJet::split(f1);
        for mu in 0..4 {
            dn = dn.max(frame.d0(mu, &fj).max_abs());
        }
    }
    out.push(Check::new("case_ne_annihilated", dn, 2.0, Tol::D1));

    out.push(Check::new(
        "case_l0_dim",
        (case0.l0.len() as f64 - id.dim_l0() as f64).abs(),
        1.0,
        Tol::Abs(0.5),
    ));

    // anti-Hermitian space and maximal subalgebra dimensions, counted by
    // membership filters over the sixteen basis generators
    let t1 = t_basis(&g1, md1);
    let t0: Vec<Form<f64>> = t1.iter().map(|f| FieldJet::split(f).v).collect();
    let in_omega = |f: &Form<f64>| match id {
        CaseId::I | CaseId::II => true,
        CaseId::III => (f.grade_part(1) + f.grade_part(3)).max_abs() < 1e-9,
        CaseId::IV => f.max_imag() < 1e-9,
        CaseId::V => {
            f.max_imag() < 1e-9 && (f.grade_part(1) + f.grade_part(3)).max_abs() < 1e-9
        }
    };
    let omega_minus = t0.iter().filter(|f| in_omega(f)).count();
    let expected_omega_minus = match id {
        CaseId::I | CaseId::II => 16,
        CaseId::III => 8,
        CaseId::IV => 10,
        CaseId::V => 4,
    };
    out.push(Check::new(
        "case_omega_minus_dim",
        (omega_minus as f64 - expected_omega_minus as f64).abs(),
        1.0,
        Tol::Abs(0.5),
    ));
    let lmax = t0
        .iter()
        .filter(|f| {
            in_omega(f)
                && commutator(f, nf, md).max_abs() < 1e-8
                && commutator(f, ef, md).max_abs() < 1e-8
        })
        .count();
    let expected_lmax = match id {
        CaseId::I => 16,
        CaseId::II => 16, // same omega space as case i
        CaseId::III | CaseId::IV => 4,
        CaseId::V => 1,
    };
    out.push(Check::new(
        "case_lmax_dim",
        (lmax as f64 - expected_lmax as f64).abs(),
        1.0,
        Tol::Abs(0.5),
    ));

    // exp of the gauge algebra lands in the unitary group
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(rng_seed);
    let mut worst = 0.0f64;
    for _ in 0..3 {
        let mut u = Form::<f64>::zero(4, ScalarKind::Complex);
        for t in &case0.l0 {
            u = u + t.scale_f64(rng.random_range(-0.8..0.8));
        }
        let ex = cl_exp(&u, md)?;
        let dag = hermitian_conj(&ex, h, md)?;
        worst = worst.max((cl_mul(&dag, &ex, md) - one).max_abs());
    }
    out.push(Check::new("case_exp_unitary", worst, 2.0, Tol::Abs(1e-9)));

    // projection is idempotent and annihilates the orthogonal complement
    let mut proj = 0.0f64;
    for (k, t) in case0.l0.iter().enumerate() {
        let p = project_l0(t, &case0.l0, h, md)?;
        proj = proj.max((p - *t).max_abs());
        let _ = k;
    }
    let mut u = Form::<f64>::zero(4, ScalarKind::Complex);
    for m in 0..16 {
        u.set_coeff(m, Cplx::from_f64s(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)));
    }
    let p1 = project_l0(&u, &case0.l0, h, md)?;
    let p2 = project_l0(&p1, &case0.l0, h, md)?;
    proj = proj.max((p2 - p1).max_abs() / (1.0 + p1.max_abs()));
    out.push(Check::new("case_projection_idempotent", proj, 2.0, Tol::Alg));
    Ok(out)
}

/// Evaluate scalar coefficient expressions at all three derivative levels.
pub struct ScalarJets {
    pub v0: f64,
    pub v1: Df64,
    pub v2: DDf64,
}

pub fn eval_scalar_jets(e: &Expr, x: &[f64; LANES]) -> Result<ScalarJets, DomainError> {
    let mut seeded = [Jet2::<Df64>::constant(D1::constant(0.0)); LANES];
    for (mu, s) in seeded.iter_mut().enumerate() {
        *s = Jet2::var(D1::var(x[mu], mu), mu);
    }
    let j = e.eval(&seeded)?;
    Ok(ScalarJets {
        v0: j.v.v,
        v1: j.v,
        v2: D1::new(j.v, j.g),
    })
}

/// A pointwise unitary gauge map `U = exp(Σ u_k t_k)` with enough derivative
/// data to transform potentials.
pub struct UnitaryGauge {
    pub u0: Form<f64>,
    pub u_inv0: Form<f64>,
    pub u_jet: FieldJet<f64>,
    pub u1: Form<Df64>,
    pub u_inv1: Form<Df64>,
    pub u_jet1: FieldJet<Df64>,
    /// `D_μ U` values.
    pub du: [Form<f64>; 4],
    /// `D_μ U` at first-derivative arithmetic.
    pub du1: [Form<Df64>; 4],
}

impl UnitaryGauge {
    /// Build from coefficient expressions over the case's gauge generators.
    pub fn build(
        frame: &Frame,
        id: CaseId,
        coeffs: &[Expr],
        x: &[f64; LANES],
    ) -> Result<UnitaryGauge, GaugeError> {
        let g2 = GenForms::from_deep(frame)?;
        let lvl2 = &frame.deep.as_ref().unwrap().lvl2;
        let case2 = omega_case(id, &g2, &lvl2.md);
        if coeffs.len() != case2.l0.len() {
            return Err(GaugeError::GeneratorDefect(format!(
                "expected {} coefficients, got {}",
                case2.l0.len(),
                coeffs.len()
            )));
        }
        let mut arg = Form::<DDf64>::zero(4, ScalarKind::Complex);
        for (e, t) in coeffs.iter().zip(&case2.l0) {
            let s = eval_scalar_jets(e, x)?;
            arg = arg + t.scale_t(s.v2);
        }
        let u2 = cl_exp(&arg, &lvl2.md)?;
        let h2 = GenForms::from_deep(frame)?.h;
        let u_inv2 = hermitian_conj(&u2, &h2, &lvl2.md)?;

        let u_jet1 = FieldJet::split(&u2);
        let u1 = u_jet1.v;
        let u_inv1 = FieldJet::split(&u_inv2).v;
        let u_jet = FieldJet::split(&u1);
        let u0 = u_jet.v;
        let u_inv0 = FieldJet::split(&u_inv1).v;

        // group membership: unitary and commuting with N and E
        let md = &frame.lvl0.md;
        let one = Form::<f64>::one(4);
        let case0 = omega_case(
            id,
            &GenForms {
                h: frame.h.v,
                i: frame.i_gen.unwrap().v,
                k: frame.k_gen.unwrap().v,
                ell: frame.ell.unwrap().v,
            },
            md,
        );
        let uni = (cl_mul(&u_inv0, &u0, md) - one).max_abs();
        let cn = commutator(&u0, &case0.n_form, md).max_abs();
        let ce = commutator(&u0, &case0.e_form, md).max_abs();
        if uni > 1e-9 * (1.0 + u0.max_abs()) || cn > 1e-9 || ce > 1e-9 {
            return Err(GaugeError::NotInGroup(format!(
                "unitarity {uni:e}, [U,N] {cn:e}, [U,E] {ce:e}"
            )));
        }

        let mut du = [Form::<f64>::zero(4, ScalarKind::Complex); 4];
        let mut du1 = [Form::<Df64>::zero(4, ScalarKind::Complex); 4];
        let b1 = frame.b_values1();
        for mu in 0..4 {
            du[mu] = frame.d0(mu, &u_jet);
            du1[mu] = crate::tensor::d_op_form(mu, &u_jet1, &b1, &frame.lvl1.gamma, &frame.lvl1.md);
        }
        Ok(UnitaryGauge { u0, u_inv0, u_jet, u1, u_inv1, u_jet1, du, du1 })
    }
}

/// A pointwise spin gauge map `S = exp(bivector field)` together with the
/// transformed connection data.
pub struct SpinGauge {
    pub s0: Form<f64>,
    pub s_inv0: Form<f64>,
    pub s_jet: FieldJet<f64>,
    pub s1: Form<Df64>,
    pub s_inv1: Form<Df64>,
    /// Transformed connection forms `S^{-1} B_μ S - S^{-1} Υ_μ S` as jets.
    pub b_check: [FieldJet<f64>; 4],
    pub h_check: FieldJet<f64>,
    pub i_check: FieldJet<f64>,
    pub k_check: FieldJet<f64>,
    pub ell_check: FieldJet<f64>,
}

impl SpinGauge {
    /// `coeffs[(a, b)]` are expressions for the real bivector components.
    pub fn build(
        frame: &Frame,
        coeffs: &[(usize, usize, Expr)],
        x: &[f64; LANES],
    ) -> Result<SpinGauge, GaugeError> {
        let deep = frame.deep.as_ref().ok_or(GaugeError::MissingDeepFrame)?;
        let lvl2 = &deep.lvl2;
        let mut arg = Form::<DDf64>::zero(4, ScalarKind::Real);
        for (a, b, e) in coeffs {
            let s = eval_scalar_jets(e, x)?;
            arg.add_coeff((1 << a) | (1 << b), Cplx::real(s.v2));
        }
        let s2 = cl_exp(&arg, &lvl2.md)?;
        let s_inv2 = involution(&s2);

        let s_jet1 = FieldJet::split(&s2);
        let s_inv_jet1 = FieldJet::split(&s_inv2);
        let s1 = s_jet1.v;
        let s_inv1 = s_inv_jet1.v;
        let s_jet = FieldJet::split(&s1);
        let s0 = s_jet.v;
        let s_inv0 = FieldJet::split(&s_inv1).v;

        let md = &frame.lvl0.md;
        let one = Form::<f64>::one(4);
        let norm = (cl_mul(&involution(&s0), &s0, md) - one).max_abs();
        let odd = (s0.grade_part(1) + s0.grade_part(3)).max_abs();
        let imag = s0.max_imag();
        if norm > 1e-9 * (1.0 + s0.max_abs()) || odd > 1e-12 || imag > 1e-12 {
            return Err(GaugeError::NotInSpin(format!(
                "normalization {norm:e}, odd content {odd:e}, imaginary content {imag:e}"
            )));
        }

        // transformed connection: all at first-derivative arithmetic, then split
        let md1 = &frame.lvl1.md;
        let gamma1 = &frame.lvl1.gamma;
        let conj1 = |f: &Form<Df64>| cl_mul(&cl_mul(&s_inv1, f, md1), &s1, md1);
        let mut b_check = [FieldJet::constant(Form::zero(4, ScalarKind::Real)); 4];
        for mu in 0..4 {
            let ups_s = upsilon_form(mu, &s_jet1, gamma1);
            let bmu1 = frame.b[mu].lift();
            let transformed = conj1(&bmu1) - cl_mul(&s_inv1, &ups_s, md1);
            b_check[mu] = FieldJet::split(&transformed);
        }
        let h_check = FieldJet::split(&conj1(&frame.h.lift()));
        let i_check = FieldJet::split(&conj1(&frame.i_gen.unwrap().lift()));
        let k_check = FieldJet::split(&conj1(&frame.k_gen.unwrap().lift()));
        let ell_check = FieldJet::split(&conj1(&frame.ell.unwrap().lift()));
        Ok(SpinGauge {
            s0,
            s_inv0,
            s_jet,
            s1,
            s_inv1,
            b_check,
            h_check,
            i_check,
            k_check,
            ell_check,
        })
    }

    /// Connection data of the transformed tuple, ready for the structure
    /// residual suite (the curvature side is unchanged).
    pub fn conn_data(&self, frame: &Frame) -> ConnData {
        ConnData {
            n: 4,
            md: frame.lvl0.md,
            gamma: frame.lvl0.gamma,
            b: self.b_check,
            h: self.h_check,
            i: Some(self.i_check),
            k: Some(self.k_check),
            c: frame.c_form.clone(),
        }
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

    fn frame_at(x: [f64; 4]) -> Frame {
        Frame::new(&curved_spec(), &x, BVariant::General4).unwrap()
    }

    #[test]
    fn t_basis_properties() {
        let frame = frame_at([0.15, -0.2, 0.1, 0.3]);
        let g1 = GenForms::from_frame(&frame);
        let t1 = t_basis(&g1, &frame.lvl1.md);
        let t0: Vec<Form<f64>> = t1.iter().map(|f| FieldJet::split(f).v).collect();
        let checks = basis_checks("t", &frame, &t0, &t1).unwrap();
        assert_checks(&checks, 1.0);
        // the unit imaginary generator is central
        let md = &frame.lvl0.md;
        for t in &t0 {
            assert!(commutator(&t0[15], t, md).max_abs() < 1e-14);
        }
    }

    #[test]
    fn su3_closure_holds() {
        let frame = frame_at([0.15, -0.2, 0.1, 0.3]);
        let checks = su3_checks(&frame).unwrap();
        assert_checks(&checks, 1.0);
    }

    #[test]
    fn all_cases_consistent() {
        let frame = frame_at([0.05, -0.1, 0.2, -0.3]);
        for id in [CaseId::I, CaseId::II, CaseId::III, CaseId::IV, CaseId::V] {
            let checks = case_checks(&frame, id, 99).unwrap();
            assert_checks(&checks, 1.0);
        }
    }

    #[test]
    fn projection_examples() {
        let frame = frame_at([0.0, 0.0, 0.0, 0.0]);
        let md = &frame.lvl0.md;
        let g1 = GenForms::from_frame(&frame);
        let case1 = omega_case(CaseId::II, &g1, &frame.lvl1.md);
        let l0: Vec<Form<f64>> = case1.l0.iter().map(|f| FieldJet::split(f).v).collect();
        let h = frame.h.v;
        // a generator projects to itself
        let p = project_l0(&l0[0], &l0, &h, md).unwrap();
        assert!((p - l0[0]).max_abs() < 1e-12);
        // something orthogonal projects to zero: the unit imaginary is not
        // in the first eight su3 generators' span
        let p = project_l0(&Form::imaginary(4), &l0, &h, md).unwrap();
        assert!(p.max_abs() < 1e-12);
    }

    #[test]
    fn unitary_map_builds_and_checks() {
        let x = [0.15, -0.2, 0.1, 0.3];
        let frame = Frame::new_deep(&curved_spec(), &x, BVariant::General4).unwrap();
        let coeffs: Vec<_> = (0..16)
            .map(|k| {
                parse_expr(if k % 3 == 0 { "0.2*sin(x1 + x2)" } else { "0.1*x3" }, 4).unwrap()
            })
            .collect();
        let u = UnitaryGauge::build(&frame, CaseId::I, &coeffs, &x).unwrap();
        let md = &frame.lvl0.md;
        let one = Form::<f64>::one(4);
        assert!((cl_mul(&u.u_inv0, &u.u0, md) - one).max_abs() < 1e-10);
        // derivative of U is consistent with finite differences of exp
        assert!(u.du.iter().any(|d| d.max_abs() > 1e-3), "gauge map should vary");
    }

    #[test]
    fn spin_map_transforms_connection() {
        let x = [0.15, -0.2, 0.1, 0.3];
        let frame = Frame::new_deep(&curved_spec(), &x, BVariant::General4).unwrap();
        let coeffs = vec![
            (0usize, 1usize, parse_expr("0.3*sin(x2)", 4).unwrap()),
            (1, 2, parse_expr("0.2*x1", 4).unwrap()),
            (2, 3, parse_expr("-0.15*cos(x4)", 4).unwrap()),
        ];
        let s = SpinGauge::build(&frame, &coeffs, &x).unwrap();
        // transformed tuple satisfies the same structure equations
        let data = s.conn_data(&frame);
        assert_checks(&data.structure_residuals(), 1.0);
        // constant map in flat space: Υ S = 0, so the transformed connection
        // is plain conjugation of B = 0, i.e. still zero
        let flat = Frame::new_deep(&MetricSpec::minkowski(), &x, BVariant::General4).unwrap();
        let const_coeffs = vec![(0usize, 1usize, parse_expr("0.4", 4).unwrap())];
        let sc = SpinGauge::build(&flat, &const_coeffs, &x).unwrap();
        for mu in 0..4 {
            assert!(sc.b_check[mu].v.max_abs() < 1e-12);
        }
        assert_checks(&sc.conn_data(&flat).structure_residuals(), 1.0);
    }
}
