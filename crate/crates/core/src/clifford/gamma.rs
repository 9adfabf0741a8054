//! Gamma-matrix representation of the form algebra, used as a test oracle.
//!
//! A pseudo-orthonormal coframe is built by Gram-Schmidt on the coordinate
//! differentials (pivot order 1,2,3,4, which the chart conditions make
//! non-degenerate), flat Dirac matrices are attached to the frame, and every
//! basis blade is mapped to the antisymmetrized matrix product.

use super::{AlgebraError, Form};
use crate::geometry::MetricData;
use crate::num::C64;

pub type CMat4 = [[C64; 4]; 4];

fn mat_zero() -> CMat4 {
    [[C64::zero(); 4]; 4]
}

pub fn mat_id() -> CMat4 {
    let mut m = mat_zero();
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = C64::one();
    }
    m
}

pub fn mat_mul(a: &CMat4, b: &CMat4) -> CMat4 {
    let mut r = mat_zero();
    for i in 0..4 {
        for j in 0..4 {
            let mut s = C64::zero();
            for (k, brow) in b.iter().enumerate() {
                s = s + a[i][k] * brow[j];
            }
            r[i][j] = s;
        }
    }
    r
}

pub fn mat_add(a: &CMat4, b: &CMat4) -> CMat4 {
    let mut r = *a;
    for i in 0..4 {
        for j in 0..4 {
            r[i][j] = r[i][j] + b[i][j];
        }
    }
    r
}

pub fn mat_scale(a: &CMat4, s: C64) -> CMat4 {
    let mut r = *a;
    for row in r.iter_mut() {
        for e in row.iter_mut() {
            *e = *e * s;
        }
    }
    r
}

pub fn mat_trace(a: &CMat4) -> C64 {
    a[0][0] + a[1][1] + a[2][2] + a[3][3]
}

pub fn mat_sub(a: &CMat4, b: &CMat4) -> CMat4 {
    mat_add(a, &mat_scale(b, C64::from_f64s(-1.0, 0.0)))
}

pub fn mat_max_abs(a: &CMat4) -> f64 {
    a.iter().flatten().fold(0.0f64, |m, z| m.max(z.abs_val()))
}

/// Flat Dirac matrices for signature (+, -, -, -): `{γ^a, γ^b} = 2 η^{ab}`.
fn flat_gammas() -> [CMat4; 4] {
    let o = C64::zero();
    let p = C64::one();
    let m = C64::from_f64s(-1.0, 0.0);
    let i = C64::i();
    let mi = C64::from_f64s(0.0, -1.0);
    let g1 = [[p, o, o, o], [o, p, o, o], [o, o, m, o], [o, o, o, m]];
    let g2 = [[o, o, o, p], [o, o, p, o], [o, m, o, o], [m, o, o, o]];
    let g3 = [[o, o, o, mi], [o, o, i, o], [o, i, o, o], [mi, o, o, o]];
    let g4 = [[o, o, p, o], [o, o, o, m], [m, o, o, o], [o, p, o, o]];
    [g1, g2, g3, g4]
}

/// Matrix representation of the Clifford algebra at one metric point.
#[derive(Clone)]
pub struct GammaRep {
    /// Coframe coefficients `e^a_μ`, rows indexed by frame label `a`;
    /// satisfies `e^a_μ e^b_ν η_{ab} = g_{μν}`.
    pub tetrad: [[f64; 4]; 4],
    /// Representation matrix of every basis blade.
    pub mats: [CMat4; 16],
}

/// Build the representation; requires `n = 4` and the chart conditions.
pub fn gamma_rep(md: &MetricData<f64>) -> Result<GammaRep, AlgebraError> {
    assert_eq!(md.n, 4, "the matrix representation is built for n = 4 only");
    let q = |u: &[f64; 4], v: &[f64; 4]| {
        let mut s = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                s += u[i] * md.g_up[i][j] * v[j];
            }
        }
        s
    };
    let eta = [1.0f64, -1.0, -1.0, -1.0];
    let mut rows = [[0.0f64; 4]; 4];
    for a in 0..4 {
        let mut u = [0.0; 4];
        u[a] = 1.0;
        for b in 0..a {
            let proj = q(&u, &rows[b]) * eta[b];
            for i in 0..4 {
                u[i] -= proj * rows[b][i];
            }
        }
        let qq = q(&u, &u);
        if qq * eta[a] <= 1e-10 {
            return Err(AlgebraError::FrameError { idx: a + 1, value: qq });
        }
        let norm = qq.abs().sqrt();
        for x in u.iter_mut() {
            *x /= norm;
        }
        rows[a] = u;
    }

    // invert the frame matrix (rows[a][mu]) to express dx^mu in the coframe
    let mut aug = [[0.0f64; 8]; 4];
    for a in 0..4 {
        aug[a][..4].copy_from_slice(&rows[a]);
        aug[a][4 + a] = 1.0;
    }
    for col in 0..4 {
        let pivot = (col..4)
            .max_by(|&i, &j| aug[i][col].abs().partial_cmp(&aug[j][col].abs()).unwrap())
            .unwrap();
        aug.swap(col, pivot);
        let p = aug[col][col];
        if p.abs() < 1e-14 {
            return Err(AlgebraError::FrameError { idx: col + 1, value: p });
        }
        for c in 0..8 {
            aug[col][c] /= p;
        }
        for r in 0..4 {
            if r != col {
                let f = aug[r][col];
                for c in 0..8 {
                    aug[r][c] -= f * aug[col][c];
                }
            }
        }
    }
    // inv[mu][a] = (rows)^{-1}
    let mut inv = [[0.0f64; 4]; 4];
    for mu in 0..4 {
        for a in 0..4 {
            inv[mu][a] = aug[mu][4 + a];
        }
    }

    let flat = flat_gammas();
    let mut rep_dx = [mat_zero(); 4];
    for mu in 0..4 {
        let mut m = mat_zero();
        for a in 0..4 {
            m = mat_add(&m, &mat_scale(&flat[a], C64::from_f64s(inv[mu][a], 0.0)));
        }
        rep_dx[mu] = m;
    }

    let mut mats = [mat_zero(); 16];
    mats[0] = mat_id();
    for mask in 1usize..16 {
        let idx: Vec<usize> = (0..4).filter(|i| mask & (1 << i) != 0).collect();
        mats[mask] = antisymmetrized(&rep_dx, &idx);
    }
    Ok(GammaRep { tetrad: rows, mats })
}

/// `(1/k!) Σ_σ sgn(σ) γ^{μ_σ(1)} ... γ^{μ_σ(k)}`.
fn antisymmetrized(rep_dx: &[CMat4; 4], idx: &[usize]) -> CMat4 {
    let k = idx.len();
    let mut perm: Vec<usize> = (0..k).collect();
    let mut acc = mat_zero();
    let mut count = 0usize;
    permute(&mut perm, 0, &mut |p| {
        let sign = perm_sign(p);
        let mut m = mat_id();
        for &pos in p {
            m = mat_mul(&m, &rep_dx[idx[pos]]);
        }
        acc = mat_add(&acc, &mat_scale(&m, C64::from_f64s(sign, 0.0)));
        count += 1;
    });
    mat_scale(&acc, C64::from_f64s(1.0 / count as f64, 0.0))
}

fn perm_sign(p: &[usize]) -> f64 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in (i + 1)..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

impl GammaRep {
    /// Apply the representation map to a form.
    pub fn apply(&self, u: &Form<f64>) -> CMat4 {
        let mut m = mat_zero();
        for (mask, mat) in self.mats.iter().enumerate() {
            let c = u.coeff(mask);
            if c.is_zero_val() {
                continue;
            }
            m = mat_add(&m, &mat_scale(mat, c));
        }
        m
    }

    /// Invert the representation: recover the unique form with this matrix.
    pub fn form_of(&self, m: &CMat4) -> Form<f64> {
        // 16x16 complex solve: columns are the blade matrices, flattened
        let mut a = [[C64::zero(); 16]; 16];
        let mut rhs = [C64::zero(); 16];
        for e in 0..16 {
            let (i, j) = (e / 4, e % 4);
            rhs[e] = m[i][j];
            for (mask, blade) in self.mats.iter().enumerate() {
                a[e][mask] = blade[i][j];
            }
        }
        for col in 0..16 {
            let pivot = (col..16)
                .max_by(|&r1, &r2| {
                    a[r1][col].abs_val().partial_cmp(&a[r2][col].abs_val()).unwrap()
                })
                .unwrap();
            a.swap(col, pivot);
            rhs.swap(col, pivot);
            let p = a[col][col];
            for r in 0..16 {
                if r == col || a[r][col].is_zero_val() {
                    continue;
                }
                let f = a[r][col] / p;
                for c in col..16 {
                    let sub = f * a[col][c];
                    a[r][c] = a[r][c] - sub;
                }
                rhs[r] = rhs[r] - f * rhs[col];
            }
        }
        let mut out = Form::zero(4, super::ScalarKind::Complex);
        for mask in 0..16 {
            out.set_coeff(mask, rhs[mask] / a[mask][mask]);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::super::{mul4, trace, Form, ScalarKind};
    use super::*;
    use crate::geometry::{metric_jet, MetricSpec};
    use crate::num::Cplx;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn curved_md() -> MetricData<f64> {
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
        metric_jet(&spec, &[0.15, -0.2, 0.1, 0.3]).unwrap().md0()
    }

    #[test]
    fn tetrad_reconstructs_metric() {
        let md = curved_md();
        let rep = gamma_rep(&md).unwrap();
        let eta = [1.0, -1.0, -1.0, -1.0];
        for mu in 0..4 {
            for nu in 0..4 {
                let mut s = 0.0;
                for a in 0..4 {
                    s += rep.tetrad[a][mu] * rep.tetrad[a][nu] * eta[a];
                }
                assert!(
                    (s - md.g_lo[mu][nu]).abs() < 1e-12 * (1.0 + md.g_lo[mu][nu].abs()),
                    "metric reconstruction failed at ({mu},{nu})"
                );
            }
        }
    }

    #[test]
    fn anticommutators_give_metric() {
        let md = curved_md();
        let rep = gamma_rep(&md).unwrap();
        for mu in 0..4 {
            for nu in 0..4 {
                let a = rep.apply(&Form::dx(4, mu));
                let b = rep.apply(&Form::dx(4, nu));
                let anti = mat_add(&mat_mul(&a, &b), &mat_mul(&b, &a));
                let expect = mat_scale(&mat_id(), C64::from_f64s(2.0 * md.g_up[mu][nu], 0.0));
                assert!(mat_max_abs(&mat_sub(&anti, &expect)) < 1e-12);
            }
        }
    }

    #[test]
    fn homomorphism_and_trace() {
        let md = curved_md();
        let rep = gamma_rep(&md).unwrap();
        assert!(mat_max_abs(&mat_sub(&rep.apply(&Form::one(4)), &mat_id())) == 0.0);
        let mut rng = StdRng::seed_from_u64(61);
        for _ in 0..20 {
            let mut u = Form::zero(4, ScalarKind::Complex);
            let mut v = Form::zero(4, ScalarKind::Complex);
            for m in 0..16 {
                u.set_coeff(
                    m,
                    Cplx::from_f64s(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)),
                );
                v.set_coeff(
                    m,
                    Cplx::from_f64s(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)),
                );
            }
            let lhs = rep.apply(&mul4(&u, &v, &md));
            let rhs = mat_mul(&rep.apply(&u), &rep.apply(&v));
            let scale = 1.0 + u.max_abs() * v.max_abs();
            assert!(mat_max_abs(&mat_sub(&lhs, &rhs)) < 1e-11 * scale);
            // trace correspondence
            let t = trace(&u);
            let mt = mat_trace(&rep.apply(&u)).scale(0.25);
            assert!((t.re - mt.re).abs() < 1e-11 && (t.im - mt.im).abs() < 1e-11);
            // representation round trip
            let back = rep.form_of(&rep.apply(&u));
            assert!((back - u).max_abs() < 1e-11 * (1.0 + u.max_abs()));
        }
    }
}
