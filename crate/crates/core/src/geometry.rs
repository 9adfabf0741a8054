//! Pointwise metric geometry: inverse metric, determinant, Christoffel
//! symbols, Riemann tensor and the chart conditions under which the closed
//! form generators are defined.
//!
//! All assembly is generic over [`Scalar`], so the same formulas evaluated
//! with dual inputs produce the exact derivatives of every derived quantity
//! (`∂Γ`, `∂g⁻¹`, ...) without any hand differentiation.

use crate::expr::{parse_expr, DomainError, Expr, ParseError};
use crate::num::{Jet2, Scalar, D1, LANES};
use nalgebra::{DMatrix, SymmetricEigen};
use thiserror::Error;

pub type Mat4<T> = [[T; 4]; 4];
pub type Ten3<T> = [[[T; 4]; 4]; 4];
pub type Ten4<T> = [[[[T; 4]; 4]; 4]; 4];

/// `Γ^λ_{μν}` indexed as `gamma[λ][μ][ν]`.
pub type Gamma<T> = Ten3<T>;

pub type Rf64 = f64;
pub type Df64 = D1<f64>;
pub type DDf64 = D1<D1<f64>>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeometryError {
    #[error("metric component g{mu}{nu}: {source}")]
    Component { mu: usize, nu: usize, source: DomainError },
    #[error("metric component g{mu}{nu} parse error: {source}")]
    Parse { mu: usize, nu: usize, source: ParseError },
    #[error("singular metric: |det g| = {det:e} below threshold {threshold:e}")]
    SingularMetric { det: f64, threshold: f64 },
    #[error("signature error: eigenvalues {eigs:?} are not (+, -, ..., -)")]
    SignatureError { eigs: Vec<f64> },
    #[error("dimension {0} not supported (expected 2, 3 or 4)")]
    BadDimension(usize),
}

/// Symmetric table of metric component expressions; only `μ ≤ ν` is stored.
#[derive(Clone, Debug)]
pub struct MetricSpec {
    pub n: usize,
    comps: Vec<Expr>,
}

fn tri_index(n: usize, mu: usize, nu: usize) -> usize {
    let (a, b) = if mu <= nu { (mu, nu) } else { (nu, mu) };
    // row-major upper triangle
    a * n - a * (a + 1) / 2 + b
}

impl MetricSpec {
    pub fn from_exprs(n: usize, upper: Vec<Expr>) -> Result<Self, GeometryError> {
        if !(2..=4).contains(&n) {
            return Err(GeometryError::BadDimension(n));
        }
        assert_eq!(upper.len(), n * (n + 1) / 2, "need one expression per pair mu <= nu");
        Ok(Self { n, comps: upper })
    }

    /// Parse components from strings ordered `(1,1), (1,2), ..., (n,n)`.
    pub fn parse(n: usize, upper: &[&str]) -> Result<Self, GeometryError> {
        if !(2..=4).contains(&n) {
            return Err(GeometryError::BadDimension(n));
        }
        let mut comps = Vec::with_capacity(upper.len());
        let mut pair = (1usize, 1usize);
        for src in upper {
            let e = parse_expr(src, n).map_err(|source| GeometryError::Parse {
                mu: pair.0,
                nu: pair.1,
                source,
            })?;
            comps.push(e);
            pair = if pair.1 < n { (pair.0, pair.1 + 1) } else { (pair.0 + 1, pair.0 + 1) };
        }
        Self::from_exprs(n, comps)
    }

    pub fn minkowski() -> Self {
        Self::parse(4, &["1", "0", "0", "0", "-1", "0", "0", "-1", "0", "-1"]).unwrap()
    }

    /// Flat metric of signature (+, -, ..., -) in dimension `n`.
    pub fn flat(n: usize) -> Self {
        let mut comps = Vec::new();
        for mu in 0..n {
            for nu in mu..n {
                comps.push(if mu != nu {
                    "0"
                } else if mu == 0 {
                    "1"
                } else {
                    "-1"
                });
            }
        }
        Self::parse(n, &comps).unwrap()
    }

    pub fn expr(&self, mu: usize, nu: usize) -> &Expr {
        &self.comps[tri_index(self.n, mu, nu)]
    }

    /// Evaluate all components as second-order jets over base scalar `T`.
    #[allow(clippy::type_complexity)]
    fn eval_jets<T: Scalar>(
        &self,
        x: &[T; LANES],
    ) -> Result<(Mat4<T>, Ten3<T>, Ten4<T>, Ten4<T>), GeometryError> {
        let mut seeded = [Jet2::constant(T::zero()); LANES];
        for (mu, s) in seeded.iter_mut().enumerate() {
            *s = Jet2::var(x[mu], mu);
        }
        let z = T::zero();
        let mut g = [[z; 4]; 4];
        let mut dg = [[[z; 4]; 4]; 4];
        let mut ddg = [[[[z; 4]; 4]; 4]; 4];
        // third derivatives of g are only populated when T carries lanes
        let dddg = [[[[z; 4]; 4]; 4]; 4];
        for mu in 0..self.n {
            for nu in mu..self.n {
                let j = self
                    .expr(mu, nu)
                    .eval(&seeded)
                    .map_err(|source| GeometryError::Component { mu: mu + 1, nu: nu + 1, source })?;
                g[mu][nu] = j.v;
                g[nu][mu] = j.v;
                for l in 0..self.n {
                    dg[l][mu][nu] = j.g[l];
                    dg[l][nu][mu] = j.g[l];
                    for k in 0..self.n {
                        ddg[k][l][mu][nu] = j.h[k][l];
                        ddg[k][l][nu][mu] = j.h[k][l];
                    }
                }
            }
        }
        Ok((g, dg, ddg, dddg))
    }
}

/// The metric data needed by the pointwise form algebra.
#[derive(Clone, Copy, Debug)]
pub struct MetricData<T: Scalar> {
    pub n: usize,
    pub g_lo: Mat4<T>,
    pub g_up: Mat4<T>,
    /// `sqrt(|det g|)`; equals `sqrt(-g)` for the Lorentzian cases used here.
    pub vol: T,
}

/// Determinant of the leading `n x n` block.
pub fn det_n<T: Scalar>(a: &Mat4<T>, n: usize) -> T {
    match n {
        1 => a[0][0],
        2 => a[0][0] * a[1][1] - a[0][1] * a[1][0],
        3 => {
            a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
                - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
                + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
        }
        4 => {
            let mut det = T::zero();
            let mut sign = T::one();
            for col in 0..4 {
                let mut minor = [[T::zero(); 4]; 4];
                for r in 1..4 {
                    let mut cc = 0;
                    for c in 0..4 {
                        if c == col {
                            continue;
                        }
                        minor[r - 1][cc] = a[r][c];
                        cc += 1;
                    }
                }
                det = det + sign * a[0][col] * det_n(&minor, 3);
                sign = -sign;
            }
            det
        }
        _ => panic!("det_n: unsupported dimension {n}"),
    }
}

/// Inverse of the leading `n x n` block by Gauss-Jordan elimination with
/// partial pivoting on value magnitude; identity outside the block.
pub fn inv_n<T: Scalar>(a: &Mat4<T>, n: usize) -> Option<Mat4<T>> {
    let mut m = *a;
    let mut inv = [[T::zero(); 4]; 4];
    for (i, row) in inv.iter_mut().enumerate() {
        row[i] = T::one();
    }
    for col in 0..n {
        let pivot = (col..n).max_by(|&i, &j| {
            m[i][col].val().abs().partial_cmp(&m[j][col].val().abs()).unwrap()
        })?;
        if m[pivot][col].val().abs() == 0.0 {
            return None;
        }
        m.swap(col, pivot);
        inv.swap(col, pivot);
        let p = m[col][col].recip();
        for c in 0..n {
            m[col][c] = m[col][c] * p;
            inv[col][c] = inv[col][c] * p;
        }
        for r in 0..n {
            if r == col {
                continue;
            }
            let f = m[r][col];
            if f.val() == 0.0 {
                continue;
            }
            for c in 0..n {
                m[r][c] = m[r][c] - f * m[col][c];
                inv[r][c] = inv[r][c] - f * inv[col][c];
            }
        }
    }
    Some(inv)
}

/// Inverse metric, determinant, volume density and Christoffel symbols from
/// the metric and its first derivatives, in any scalar arithmetic.
pub fn geom_parts<T: Scalar>(
    n: usize,
    g_lo: &Mat4<T>,
    dg: &Ten3<T>,
) -> Option<(MetricData<T>, Gamma<T>, T)> {
    let g_up = inv_n(g_lo, n)?;
    let det = det_n(g_lo, n);
    let vol = if det.val() < 0.0 { (-det).sqrt() } else { det.sqrt() };
    let half = T::from_f64(0.5);
    let mut gamma = [[[T::zero(); 4]; 4]; 4];
    for l in 0..n {
        for mu in 0..n {
            for nu in mu..n {
                let mut s = T::zero();
                for k in 0..n {
                    s = s + g_up[l][k] * (dg[mu][k][nu] + dg[nu][k][mu] - dg[k][mu][nu]);
                }
                let v = half * s;
                gamma[l][mu][nu] = v;
                gamma[l][nu][mu] = v;
            }
        }
    }
    Some((MetricData { n, g_lo: *g_lo, g_up, vol }, gamma, det))
}

/// Everything the rest of the crate needs about the metric at one point, at
/// one derivative level. `level0` carries plain values, `level1` first
/// derivatives, `level2` (built from a [`MetricJet3`]) second derivatives of
/// every derived object.
#[derive(Clone, Debug)]
pub struct MetricLevel<T: Scalar> {
    pub g_lo: Mat4<T>,
    pub dg: Ten3<T>,
    pub md: MetricData<T>,
    pub gamma: Gamma<T>,
}

/// Pointwise metric jet: the metric with first and second derivatives and
/// all derived curvature data.
#[derive(Clone, Debug)]
pub struct MetricJet {
    pub n: usize,
    pub x: [f64; LANES],
    pub g_lo: Mat4<f64>,
    pub dg: Ten3<f64>,
    pub ddg: Ten4<f64>,
    pub g_up: Mat4<f64>,
    /// `∂_λ g^{μν}` as `dg_up[λ][μ][ν]`.
    pub dg_up: Ten3<f64>,
    pub det_g: f64,
    /// `sqrt(|det g|)`.
    pub vol: f64,
    pub dvol: [f64; 4],
    pub eigs: Vec<f64>,
    pub gamma: Gamma<f64>,
    /// `∂_κ Γ^λ_{μν}` as `dgamma[κ][λ][μ][ν]`.
    pub dgamma: Ten4<f64>,
    /// `R^κ_{λμν}` per the curvature convention used throughout.
    pub riem_up: Ten4<f64>,
    /// `R_{αβμν} = g_{αλ} R^λ_{βμν}`.
    pub riem_lo: Ten4<f64>,
}

fn lift1(g: &Mat4<f64>, dg: &Ten3<f64>, ddg: &Ten4<f64>, n: usize) -> (Mat4<Df64>, Ten3<Df64>) {
    let mut g1 = [[Df64::constant(0.0); 4]; 4];
    let mut dg1 = [[[Df64::constant(0.0); 4]; 4]; 4];
    for mu in 0..n {
        for nu in 0..n {
            let mut lanes = [0.0; LANES];
            for (l, lane) in lanes.iter_mut().enumerate().take(n) {
                *lane = dg[l][mu][nu];
            }
            g1[mu][nu] = D1::new(g[mu][nu], lanes);
            for l in 0..n {
                let mut dd = [0.0; LANES];
                for (k, lane) in dd.iter_mut().enumerate().take(n) {
                    *lane = ddg[k][l][mu][nu];
                }
                dg1[l][mu][nu] = D1::new(dg[l][mu][nu], dd);
            }
        }
    }
    (g1, dg1)
}

/// Compute the Riemann tensor from `Γ` and `∂Γ`:
/// `R^κ_{λμν} = ∂_μ Γ^κ_{νλ} - ∂_ν Γ^κ_{μλ} + Γ^κ_{μη} Γ^η_{νλ} - Γ^κ_{νη} Γ^η_{μλ}`.
pub fn riemann_up<T: Scalar>(n: usize, gamma: &Gamma<T>, dgamma: &Ten4<T>) -> Ten4<T> {
    let mut r = [[[[T::zero(); 4]; 4]; 4]; 4];
    for k in 0..n {
        for l in 0..n {
            for mu in 0..n {
                for nu in 0..n {
                    let mut s = dgamma[mu][k][nu][l] - dgamma[nu][k][mu][l];
                    for e in 0..n {
                        s = s + gamma[k][mu][e] * gamma[e][nu][l]
                            - gamma[k][nu][e] * gamma[e][mu][l];
                    }
                    r[k][l][mu][nu] = s;
                }
            }
        }
    }
    r
}

impl MetricJet {
    pub fn md0(&self) -> MetricData<f64> {
        MetricData { n: self.n, g_lo: self.g_lo, g_up: self.g_up, vol: self.vol }
    }

    pub fn level0(&self) -> MetricLevel<f64> {
        MetricLevel { g_lo: self.g_lo, dg: self.dg, md: self.md0(), gamma: self.gamma }
    }

    pub fn level1(&self) -> MetricLevel<Df64> {
        let (g1, dg1) = lift1(&self.g_lo, &self.dg, &self.ddg, self.n);
        let mut g_up1 = [[Df64::constant(0.0); 4]; 4];
        let mut gamma1 = [[[Df64::constant(0.0); 4]; 4]; 4];
        let mut vol_lanes = [0.0; LANES];
        for mu in 0..self.n {
            for nu in 0..self.n {
                let mut lanes = [0.0; LANES];
                for (l, lane) in lanes.iter_mut().enumerate().take(self.n) {
                    *lane = self.dg_up[l][mu][nu];
                }
                g_up1[mu][nu] = D1::new(self.g_up[mu][nu], lanes);
                for l in 0..self.n {
                    let mut lanes = [0.0; LANES];
                    for (k, lane) in lanes.iter_mut().enumerate().take(self.n) {
                        *lane = self.dgamma[k][mu][nu][l];
                    }
                    gamma1[mu][nu][l] = D1::new(self.gamma[mu][nu][l], lanes);
                }
            }
        }
        for (l, lane) in vol_lanes.iter_mut().enumerate().take(self.n) {
            *lane = self.dvol[l];
        }
        MetricLevel {
            g_lo: g1,
            dg: dg1,
            md: MetricData {
                n: self.n,
                g_lo: g1,
                g_up: g_up1,
                vol: D1::new(self.vol, vol_lanes),
            },
            gamma: gamma1,
        }
    }
}

/// Evaluate the metric specification at a point and derive all jet data.
pub fn metric_jet(spec: &MetricSpec, x: &[f64; LANES]) -> Result<MetricJet, GeometryError> {
    let n = spec.n;
    let (g_lo, dg, ddg, _) = spec.eval_jets::<f64>(x)?;

    // singularity check before attempting the inverse
    let scale = {
        let mut m = 0.0f64;
        for row in g_lo.iter().take(n) {
            for &v in row.iter().take(n) {
                m = m.max(v.abs());
            }
        }
        (1.0 + m).powi(n as i32)
    };
    let det = det_n(&g_lo, n);
    let threshold = 1e-12 * scale;
    if det.abs() < threshold {
        return Err(GeometryError::SingularMetric { det, threshold });
    }

    // pointwise signature check: eigenvalues must be (+, -, ..., -)
    let mut a = DMatrix::<f64>::zeros(n, n);
    for mu in 0..n {
        for nu in 0..n {
            a[(mu, nu)] = g_lo[mu][nu];
        }
    }
    let eigs: Vec<f64> = SymmetricEigen::new(a).eigenvalues.iter().copied().collect();
    let tol = 1e-10 * eigs.iter().fold(0.0f64, |m, e| m.max(e.abs()));
    let pos = eigs.iter().filter(|&&e| e > tol).count();
    let neg = eigs.iter().filter(|&&e| e < -tol).count();
    if pos != 1 || neg != n - 1 {
        return Err(GeometryError::SignatureError { eigs });
    }

    // first-derivative arithmetic yields g_up, Γ and their derivatives at once
    let (g1, dg1) = lift1(&g_lo, &dg, &ddg, n);
    let (md1, gamma1, det1) =
        geom_parts::<Df64>(n, &g1, &dg1).ok_or(GeometryError::SingularMetric { det, threshold })?;

    let mut g_up = [[0.0; 4]; 4];
    let mut dg_up = [[[0.0; 4]; 4]; 4];
    let mut gamma = [[[0.0; 4]; 4]; 4];
    let mut dgamma = [[[[0.0; 4]; 4]; 4]; 4];
    for mu in 0..n {
        for nu in 0..n {
            g_up[mu][nu] = md1.g_up[mu][nu].v;
            for l in 0..n {
                dg_up[l][mu][nu] = md1.g_up[mu][nu].d[l];
                gamma[mu][nu][l] = gamma1[mu][nu][l].v;
                for k in 0..n {
                    dgamma[k][mu][nu][l] = gamma1[mu][nu][l].d[k];
                }
            }
        }
    }
    let vol = md1.vol.v;
    let mut dvol = [0.0; 4];
    dvol.copy_from_slice(&md1.vol.d);

    let riem_up = riemann_up(n, &gamma, &dgamma);
    let mut riem_lo = [[[[0.0; 4]; 4]; 4]; 4];
    for a in 0..n {
        for b in 0..n {
            for mu in 0..n {
                for nu in 0..n {
                    let mut s = 0.0;
                    for l in 0..n {
                        s += g_lo[a][l] * riem_up[l][b][mu][nu];
                    }
                    riem_lo[a][b][mu][nu] = s;
                }
            }
        }
    }

    Ok(MetricJet {
        n,
        x: *x,
        g_lo,
        dg,
        ddg,
        g_up,
        dg_up,
        det_g: det1.v,
        vol,
        dvol,
        eigs,
        gamma,
        dgamma,
        riem_up,
        riem_lo,
    })
}

/// Metric jet extended with third derivatives of the metric, needed when a
/// derived object is differentiated twice.
#[derive(Clone, Debug)]
pub struct MetricJet3 {
    pub jet: MetricJet,
    /// `∂_κ ∂_λ ∂_μ g_{αβ}` as `dddg[κ][λ][μ][α][β]` flattened to lanes of a jet.
    pub dddg: [[[[[f64; 4]; 4]; 4]; 4]; 4],
}

pub fn metric_jet3(spec: &MetricSpec, x: &[f64; LANES]) -> Result<MetricJet3, GeometryError> {
    let jet = metric_jet(spec, x)?;
    let n = spec.n;
    // evaluate with Jet2<D1<f64>>: the dual lanes of the Hessian carry ∂³g
    let mut seeded = [Jet2::<Df64>::constant(Df64::constant(0.0)); LANES];
    for (mu, s) in seeded.iter_mut().enumerate() {
        *s = Jet2::var(Df64::var(x[mu], mu), mu);
    }
    let mut dddg = [[[[[0.0; 4]; 4]; 4]; 4]; 4];
    for mu in 0..n {
        for nu in mu..n {
            let j = spec
                .expr(mu, nu)
                .eval(&seeded)
                .map_err(|source| GeometryError::Component { mu: mu + 1, nu: nu + 1, source })?;
            for a in 0..n {
                for b in 0..n {
                    for k in 0..n {
                        let v = j.h[a][b].d[k];
                        dddg[k][a][b][mu][nu] = v;
                        dddg[k][a][b][nu][mu] = v;
                    }
                }
            }
        }
    }
    Ok(MetricJet3 { jet, dddg })
}

impl MetricJet3 {
    /// Metric data in third-derivative arithmetic. Only quantities built
    /// from the metric itself (inverse, volume density) are available at
    /// this depth; nothing here consumes a fourth derivative.
    pub fn md_level3(&self) -> MetricData<D1<DDf64>> {
        type T3 = D1<DDf64>;
        let jet = &self.jet;
        let n = jet.n;
        let z = T3::from_f64(0.0);
        let mut g3 = [[z; 4]; 4];
        for mu in 0..n {
            for nu in 0..n {
                // lanes: value (g, dg, ddg) and derivative (dg, ddg, dddg)
                let val: DDf64 = {
                    let mut outer = [Df64::constant(0.0); LANES];
                    for (l, lane) in outer.iter_mut().enumerate().take(n) {
                        let mut inner = [0.0; LANES];
                        for (k, il) in inner.iter_mut().enumerate().take(n) {
                            *il = jet.ddg[k][l][mu][nu];
                        }
                        *lane = D1::new(jet.dg[l][mu][nu], inner);
                    }
                    let mut v_in = [0.0; LANES];
                    for (l, lane) in v_in.iter_mut().enumerate().take(n) {
                        *lane = jet.dg[l][mu][nu];
                    }
                    D1::new(D1::new(jet.g_lo[mu][nu], v_in), outer)
                };
                let mut lanes = [DDf64::from_f64(0.0); LANES];
                for (q, qlane) in lanes.iter_mut().enumerate().take(n) {
                    let mut outer = [Df64::constant(0.0); LANES];
                    for (l, lane) in outer.iter_mut().enumerate().take(n) {
                        let mut inner = [0.0; LANES];
                        for (k, il) in inner.iter_mut().enumerate().take(n) {
                            *il = self.dddg[k][l][q][mu][nu];
                        }
                        *lane = D1::new(jet.ddg[l][q][mu][nu], inner);
                    }
                    let mut v_in = [0.0; LANES];
                    for (l, lane) in v_in.iter_mut().enumerate().take(n) {
                        *lane = jet.ddg[l][q][mu][nu];
                    }
                    *qlane = D1::new(D1::new(jet.dg[q][mu][nu], v_in), outer);
                }
                g3[mu][nu] = D1::new(val, lanes);
            }
        }
        let g_up = inv_n(&g3, n).expect("level-3 lift of a validated metric");
        let det = det_n(&g3, n);
        let vol = if det.val() < 0.0 { (-det).sqrt() } else { det.sqrt() };
        MetricData { n, g_lo: g3, g_up, vol }
    }

    /// Second-derivative arithmetic level: every derived quantity carries its
    /// first and second partial derivatives.
    pub fn level2(&self) -> MetricLevel<DDf64> {
        let jet = &self.jet;
        let n = jet.n;
        let z = DDf64::from_f64(0.0);
        let mut g2 = [[z; 4]; 4];
        let mut dg2 = [[[z; 4]; 4]; 4];
        for mu in 0..n {
            for nu in 0..n {
                let mut outer = [Df64::constant(0.0); LANES];
                for (l, lane) in outer.iter_mut().enumerate().take(n) {
                    let mut inner = [0.0; LANES];
                    for (k, il) in inner.iter_mut().enumerate().take(n) {
                        *il = jet.ddg[k][l][mu][nu];
                    }
                    *lane = D1::new(jet.dg[l][mu][nu], inner);
                }
                let mut v_in = [0.0; LANES];
                for (l, lane) in v_in.iter_mut().enumerate().take(n) {
                    *lane = jet.dg[l][mu][nu];
                }
                g2[mu][nu] = D1::new(D1::new(jet.g_lo[mu][nu], v_in), outer);
                for l in 0..n {
                    let mut outer = [Df64::constant(0.0); LANES];
                    for (k, lane) in outer.iter_mut().enumerate().take(n) {
                        let mut inner = [0.0; LANES];
                        for (q, il) in inner.iter_mut().enumerate().take(n) {
                            *il = self.dddg[q][k][l][mu][nu];
                        }
                        *lane = D1::new(jet.ddg[k][l][mu][nu], inner);
                    }
                    let mut v_in = [0.0; LANES];
                    for (k, lane) in v_in.iter_mut().enumerate().take(n) {
                        *lane = jet.ddg[k][l][mu][nu];
                    }
                    dg2[l][mu][nu] = D1::new(D1::new(jet.dg[l][mu][nu], v_in), outer);
                }
            }
        }
        let (md, gamma, _) = geom_parts::<DDf64>(n, &g2, &dg2)
            .expect("level-2 lift of a metric already validated at level 0");
        MetricLevel { g_lo: g2, dg: dg2, md, gamma }
    }
}

/// Result of evaluating the chart conditions that make the closed-form
/// generators well defined at a point.
#[derive(Clone, Debug)]
pub struct CoordConditions {
    pub n: usize,
    /// `(description, value, pass)` per condition.
    pub entries: Vec<(String, f64, bool)>,
}

impl CoordConditions {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.2)
    }
}

/// Check the coordinate conditions: for n >= 3 these are `g^11 > 0`, the 2x2
/// contravariant minor negative and the 3x3 minor positive; for n = 2 the
/// covariant conditions `g_11 > 0`, `det g < 0` together with `g^11 > 0`.
pub fn check_coordinate_conditions(jet: &MetricJet) -> CoordConditions {
    let gu = &jet.g_up;
    let mut entries = Vec::new();
    match jet.n {
        2 => {
            entries.push(("g_11 > 0".to_string(), jet.g_lo[0][0], jet.g_lo[0][0] > 0.0));
            let det = jet.g_lo[0][0] * jet.g_lo[1][1] - jet.g_lo[0][1] * jet.g_lo[0][1];
            entries.push(("g_11 g_22 - g_12^2 < 0".to_string(), det, det < 0.0));
            entries.push(("g^11 > 0".to_string(), gu[0][0], gu[0][0] > 0.0));
        }
        n => {
            entries.push(("g^11 > 0".to_string(), gu[0][0], gu[0][0] > 0.0));
            let m2 = gu[0][0] * gu[1][1] - gu[0][1] * gu[0][1];
            entries.push(("det2(g^..) < 0".to_string(), m2, m2 < 0.0));
            if n >= 3 {
                let m3 = gu[0][0] * (gu[1][1] * gu[2][2] - gu[1][2] * gu[1][2])
                    - gu[0][1] * (gu[0][1] * gu[2][2] - gu[1][2] * gu[0][2])
                    + gu[0][2] * (gu[0][1] * gu[1][2] - gu[1][1] * gu[0][2]);
                entries.push(("det3(g^..) > 0".to_string(), m3, m3 > 0.0));
            }
        }
    }
    CoordConditions { n: jet.n, entries }
}

/// `∇_κ g_{μν}` assembled from `Γ`; identically zero for the Levi-Civita
/// connection, so the return is a pure roundoff residual.
pub fn metric_compatibility_residual(jet: &MetricJet) -> f64 {
    let n = jet.n;
    let mut worst = 0.0f64;
    for k in 0..n {
        for mu in 0..n {
            for nu in 0..n {
                let mut s = jet.dg[k][mu][nu];
                for l in 0..n {
                    s -= jet.gamma[l][k][mu] * jet.g_lo[l][nu] + jet.gamma[l][k][nu] * jet.g_lo[mu][l];
                }
                worst = worst.max(s.abs());
            }
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minkowski_is_flat() {
        let spec = MetricSpec::minkowski();
        let jet = metric_jet(&spec, &[0.3, -0.1, 0.7, 2.0]).unwrap();
        assert_eq!(jet.det_g, -1.0);
        assert_eq!(jet.vol, 1.0);
        for l in 0..4 {
            for m in 0..4 {
                for n in 0..4 {
                    assert_eq!(jet.gamma[l][m][n], 0.0);
                    for k in 0..4 {
                        assert_eq!(jet.riem_up[k][l][m][n], 0.0);
                    }
                }
            }
        }
    }

    #[test]
    fn curved_diagonal_christoffel() {
        // g = diag(1, -a^2, -a^2, -a^2), a = exp(x1):
        // Γ^1_22 = a a' = e^{2 x1}, Γ^2_12 = a'/a = 1
        let spec = MetricSpec::parse(
            4,
            &[
                "1", "0", "0", "0", //
                "-exp(2*x1)", "0", "0", //
                "-exp(2*x1)", "0", //
                "-exp(2*x1)",
            ],
        )
        .unwrap();
        let x = [0.2, 0.0, 0.0, 0.0];
        let jet = metric_jet(&spec, &x).unwrap();
        let aa = (2.0f64 * 0.2).exp();
        assert!((jet.gamma[0][1][1] - aa).abs() < 1e-12 * aa);
        assert!((jet.gamma[1][0][1] - 1.0).abs() < 1e-12);
        assert!((jet.gamma[1][1][0] - 1.0).abs() < 1e-12);
        // cross-check Γ by central differences of the metric
        let h = 1e-5;
        let num = |f: &dyn Fn(&[f64; 4]) -> f64, mu: usize| {
            let mut xp = x;
            let mut xm = x;
            xp[mu] += h;
            xm[mu] -= h;
            (f(&xp) - f(&xm)) / (2.0 * h)
        };
        let g22 = |y: &[f64; 4]| -(2.0f64 * y[0]).exp();
        let dg22 = num(&g22, 0);
        assert!((jet.dg[0][1][1] - dg22).abs() < 1e-6 * (1.0 + dg22.abs()));
    }

    #[test]
    fn dgamma_matches_finite_differences() {
        let spec = MetricSpec::parse(
            4,
            &[
                "1 + 0.05*sin(x2)",
                "0.02*x1*x3",
                "0",
                "0.01*x4",
                "-1 - 0.03*x1^2",
                "0.02*sin(x1 + x3)",
                "0",
                "-1 + 0.04*cos(x2)",
                "0.01*x1",
                "-1 - 0.02*x3^2",
            ],
        )
        .unwrap();
        let x = [0.1, -0.2, 0.3, 0.05];
        let jet = metric_jet(&spec, &x).unwrap();
        let h = 1e-5;
        for k in 0..4 {
            let mut xp = x;
            let mut xm = x;
            xp[k] += h;
            xm[k] -= h;
            let jp = metric_jet(&spec, &xp).unwrap();
            let jm = metric_jet(&spec, &xm).unwrap();
            for l in 0..4 {
                for m in 0..4 {
                    for n in 0..4 {
                        let fd = (jp.gamma[l][m][n] - jm.gamma[l][m][n]) / (2.0 * h);
                        let an = jet.dgamma[k][l][m][n];
                        assert!(
                            (an - fd).abs() <= 1e-5 * (1.0 + fd.abs()),
                            "dGamma[{k}][{l}][{m}][{n}]: {an} vs {fd}"
                        );
                    }
                }
            }
        }
        assert!(metric_compatibility_residual(&jet) < 1e-12);
    }

    #[test]
    fn riemann_symmetries_hold() {
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
        let jet = metric_jet(&spec, &[0.15, -0.2, 0.1, 0.3]).unwrap();
        let r = &jet.riem_lo;
        let mut scale = 0.0f64;
        for a in 0..4 {
            for b in 0..4 {
                for m in 0..4 {
                    for n in 0..4 {
                        scale = scale.max(r[a][b][m][n].abs());
                    }
                }
            }
        }
        assert!(scale > 1e-4, "test metric should actually curve, got {scale}");
        let tol = 1e-9 * (1.0 + scale);
        for a in 0..4 {
            for b in 0..4 {
                for m in 0..4 {
                    for n in 0..4 {
                        assert!((r[a][b][m][n] + r[b][a][m][n]).abs() < tol);
                        assert!((r[a][b][m][n] + r[a][b][n][m]).abs() < tol);
                        assert!((r[a][b][m][n] - r[m][n][a][b]).abs() < tol);
                        // first Bianchi
                        let bianchi = r[a][b][m][n] + r[a][m][n][b] + r[a][n][b][m];
                        assert!(bianchi.abs() < tol);
                    }
                }
            }
        }
    }

    #[test]
    fn degenerate_metric_rejected() {
        let spec =
            MetricSpec::parse(4, &["0", "0", "0", "0", "-1", "0", "0", "-1", "0", "-1"]).unwrap();
        assert!(matches!(
            metric_jet(&spec, &[0.0; 4]),
            Err(GeometryError::SingularMetric { .. })
        ));
    }

    #[test]
    fn wrong_signature_rejected() {
        let spec =
            MetricSpec::parse(4, &["1", "0", "0", "0", "1", "0", "0", "-1", "0", "-1"]).unwrap();
        assert!(matches!(
            metric_jet(&spec, &[0.0; 4]),
            Err(GeometryError::SignatureError { .. })
        ));
    }

    #[test]
    fn conditions_at_minkowski() {
        let jet = metric_jet(&MetricSpec::minkowski(), &[0.0; 4]).unwrap();
        let rep = check_coordinate_conditions(&jet);
        assert!(rep.all_pass());
        assert_eq!(rep.entries.len(), 3);
        assert_eq!(rep.entries[0].1, 1.0);
        assert_eq!(rep.entries[1].1, -1.0);
        assert_eq!(rep.entries[2].1, 1.0);
    }

    #[test]
    fn condition_failure_reported() {
        // swap time into x2 so g^11 < 0
        let spec =
            MetricSpec::parse(4, &["-1", "0", "0", "0", "1", "0", "0", "-1", "0", "-1"]).unwrap();
        let jet = metric_jet(&spec, &[0.0; 4]).unwrap();
        let rep = check_coordinate_conditions(&jet);
        assert!(!rep.entries[0].2);
        assert!(!rep.all_pass());
    }

    #[test]
    fn dim2_conditions() {
        let spec = MetricSpec::parse(2, &["1", "0.1", "-1"]).unwrap();
        let jet = metric_jet(&spec, &[0.0; 4]).unwrap();
        let rep = check_coordinate_conditions(&jet);
        assert!(rep.all_pass());
        assert!(jet.det_g < 0.0);
    }

    #[test]
    fn level2_gamma_consistent_with_level0() {
        let spec = MetricSpec::parse(
            4,
            &[
                "1 + 0.05*sin(x2)",
                "0.02*x1*x3",
                "0",
                "0.01*x4",
                "-1 - 0.03*x1^2",
                "0.02*sin(x1 + x3)",
                "0",
                "-1 + 0.04*cos(x2)",
                "0.01*x1",
                "-1 - 0.02*x3^2",
            ],
        )
        .unwrap();
        let x = [0.1, -0.2, 0.3, 0.05];
        let j3 = metric_jet3(&spec, &x).unwrap();
        let lvl2 = j3.level2();
        for l in 0..4 {
            for m in 0..4 {
                for n in 0..4 {
                    let a = lvl2.gamma[l][m][n].v.v;
                    let b = j3.jet.gamma[l][m][n];
                    assert!((a - b).abs() < 1e-13 * (1.0 + b.abs()));
                    for k in 0..4 {
                        let da = lvl2.gamma[l][m][n].d[k].v;
                        let db = j3.jet.dgamma[k][l][m][n];
                        assert!((da - db).abs() < 1e-12 * (1.0 + db.abs()));
                    }
                }
            }
        }
    }
}
