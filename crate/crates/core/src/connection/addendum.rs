//! Closed-form connection coefficients `b_{alpha beta mu}` as functions of
//! the covariant metric and its first derivatives.
//!
//! Mechanically transcribed, term for term, with no hand simplification;
//! correctness is established by the independent linear-system solver and
//! the structure-equation residual suite. Do not edit by hand.
//!
//! Index convention: `g[i][j] = g_{(i+1)(j+1)}`, `dg[l][i][j] = d_{l+1} g_{(i+1)(j+1)}`,
//! and the result `b[a][b][m] = b_{(a+1)(b+1)(m+1)}` is antisymmetric in its
//! first two slots.

use crate::num::Scalar;

#[inline]
fn c<T: Scalar>(x: f64) -> T {
    T::from_f64(x)
}

fn fill_antisym<T: Scalar>(b: &mut [[[T; 4]; 4]; 4], n: usize) {
    for a in 0..n {
        for bb in (a + 1)..n {
            for m in 0..n {
                b[bb][a][m] = -b[a][bb][m];
            }
        }
    }
}


/// General four-dimensional chart.
pub fn b_general4<T: Scalar>(g: &[[T; 4]; 4], dg: &[[[T; 4]; 4]; 4]) -> [[[T; 4]; 4]; 4] {
    let mut b = [[[T::zero(); 4]; 4]; 4];
    b[0][1][0] = {
        (dg[0][3][3] * g[0][3] * g[1][2] * g[1][3].powi(2) * g[2][2] * g[2][3] - dg[0][3][3] *
            g[0][2] * g[1][3].powi(3) * g[2][2] * g[2][3] - c::<T>(2.0) * dg[0][3][3] * g[0][3]
            * g[1][2].powi(2) * g[1][3] * g[2][3].powi(2) + c::<T>(2.0) * dg[0][3][3] * g[0][2]
            * g[1][2] * g[1][3].powi(2) * g[2][3].powi(2) + dg[0][3][3] * g[0][3] * g[1][1] *
            g[1][2] * g[2][3].powi(3) - dg[0][3][3] * g[0][2] * g[1][1] * g[1][3] *
            g[2][3].powi(3) + dg[0][3][3] * g[0][3] * g[1][2].powi(2) * g[1][3] * g[2][2] *
            g[3][3] - dg[0][3][3] * g[0][2] * g[1][2] * g[1][3].powi(2) * g[2][2] * g[3][3] -
            c::<T>(2.0) * dg[0][2][3] * g[0][3] * g[1][2] * g[1][3].powi(2) * g[2][2] * g[3][3]
            + c::<T>(2.0) * dg[0][2][3] * g[0][2] * g[1][3].powi(3) * g[2][2] * g[3][3] -
            dg[0][3][3] * g[0][3] * g[1][1] * g[1][3] * g[2][2].powi(2) * g[3][3] + dg[0][3][3]
            * g[0][1] * g[1][3].powi(2) * g[2][2].powi(2) * g[3][3] + c::<T>(2.0) * dg[0][2][3]
            * g[0][3] * g[1][2].powi(2) * g[1][3] * g[2][3] * g[3][3] - c::<T>(2.0) *
            dg[0][2][3] * g[0][2] * g[1][2] * g[1][3].powi(2) * g[2][3] * g[3][3] + dg[0][2][2]
            * g[0][3] * g[1][2] * g[1][3].powi(2) * g[2][3] * g[3][3] - dg[0][2][2] * g[0][2] *
            g[1][3].powi(3) * g[2][3] * g[3][3] + c::<T>(2.0) * dg[0][3][3] * g[0][2] * g[1][1]
            * g[1][3] * g[2][2] * g[2][3] * g[3][3] + c::<T>(2.0) * dg[0][2][3] * g[0][3] *
            g[1][1] * g[1][3] * g[2][2] * g[2][3] * g[3][3] - c::<T>(2.0) * dg[0][3][3] *
            g[0][1] * g[1][2] * g[1][3] * g[2][2] * g[2][3] * g[3][3] - c::<T>(2.0) *
            dg[0][2][3] * g[0][1] * g[1][3].powi(2) * g[2][2] * g[2][3] * g[3][3] - dg[0][3][3]
            * g[0][2] * g[1][1] * g[1][2] * g[2][3].powi(2) * g[3][3] - c::<T>(2.0) *
            dg[0][2][3] * g[0][3] * g[1][1] * g[1][2] * g[2][3].powi(2) * g[3][3] + dg[0][3][3]
            * g[0][1] * g[1][2].powi(2) * g[2][3].powi(2) * g[3][3] + c::<T>(2.0) * dg[0][1][3]
            * g[0][3] * g[1][2].powi(2) * g[2][3].powi(2) * g[3][3] - dg[0][2][2] * g[0][3] *
            g[1][1] * g[1][3] * g[2][3].powi(2) * g[3][3] + c::<T>(2.0) * dg[0][2][3] * g[0][1]
            * g[1][2] * g[1][3] * g[2][3].powi(2) * g[3][3] - c::<T>(2.0) * dg[0][1][3] *
            g[0][2] * g[1][2] * g[1][3] * g[2][3].powi(2) * g[3][3] - c::<T>(2.0) * dg[0][1][2]
            * g[0][3] * g[1][2] * g[1][3] * g[2][3].powi(2) * g[3][3] + dg[0][2][2] * g[0][1] *
            g[1][3].powi(2) * g[2][3].powi(2) * g[3][3] + c::<T>(2.0) * dg[0][1][2] * g[0][2] *
            g[1][3].powi(2) * g[2][3].powi(2) * g[3][3] - c::<T>(2.0) * dg[0][1][3] * g[0][3] *
            g[1][1] * g[2][2] * g[2][3].powi(2) * g[3][3] + c::<T>(2.0) * dg[0][1][3] * g[0][1]
            * g[1][3] * g[2][2] * g[2][3].powi(2) * g[3][3] + dg[0][1][1] * g[0][3] * g[1][3] *
            g[2][2] * g[2][3].powi(2) * g[3][3] - dg[1][0][0] * g[1][3].powi(2) * g[2][2] *
            g[2][3].powi(2) * g[3][3] + c::<T>(2.0) * dg[0][1][3] * g[0][2] * g[1][1] *
            g[2][3].powi(3) * g[3][3] + c::<T>(2.0) * dg[0][1][2] * g[0][3] * g[1][1] *
            g[2][3].powi(3) * g[3][3] - c::<T>(2.0) * dg[0][1][3] * g[0][1] * g[1][2] *
            g[2][3].powi(3) * g[3][3] - dg[0][1][1] * g[0][3] * g[1][2] * g[2][3].powi(3) *
            g[3][3] - c::<T>(2.0) * dg[0][1][2] * g[0][1] * g[1][3] * g[2][3].powi(3) * g[3][3]
            - dg[0][1][1] * g[0][2] * g[1][3] * g[2][3].powi(3) * g[3][3] + c::<T>(2.0) *
            dg[1][0][0] * g[1][2] * g[1][3] * g[2][3].powi(3) * g[3][3] + dg[0][1][1] * g[0][1]
            * g[2][3].powi(4) * g[3][3] - dg[1][0][0] * g[1][1] * g[2][3].powi(4) * g[3][3] -
            dg[0][2][2] * g[0][3] * g[1][2].powi(2) * g[1][3] * g[3][3].powi(2) + dg[0][2][2] *
            g[0][2] * g[1][2] * g[1][3].powi(2) * g[3][3].powi(2) - c::<T>(2.0) * dg[0][1][3] *
            g[0][3] * g[1][2].powi(2) * g[2][2] * g[3][3].powi(2) - c::<T>(2.0) * dg[0][2][3] *
            g[0][2] * g[1][1] * g[1][3] * g[2][2] * g[3][3].powi(2) + c::<T>(2.0) * dg[0][2][3]
            * g[0][1] * g[1][2] * g[1][3] * g[2][2] * g[3][3].powi(2) + c::<T>(2.0) *
            dg[0][1][3] * g[0][2] * g[1][2] * g[1][3] * g[2][2] * g[3][3].powi(2) + c::<T>(2.0)
            * dg[0][1][2] * g[0][3] * g[1][2] * g[1][3] * g[2][2] * g[3][3].powi(2) -
            c::<T>(2.0) * dg[0][1][2] * g[0][2] * g[1][3].powi(2) * g[2][2] * g[3][3].powi(2) +
            c::<T>(2.0) * dg[0][1][3] * g[0][3] * g[1][1] * g[2][2].powi(2) * g[3][3].powi(2) -
            c::<T>(2.0) * dg[0][1][3] * g[0][1] * g[1][3] * g[2][2].powi(2) * g[3][3].powi(2) -
            dg[0][1][1] * g[0][3] * g[1][3] * g[2][2].powi(2) * g[3][3].powi(2) + dg[1][0][0] *
            g[1][3].powi(2) * g[2][2].powi(2) * g[3][3].powi(2) + c::<T>(2.0) * dg[0][2][3] *
            g[0][2] * g[1][1] * g[1][2] * g[2][3] * g[3][3].powi(2) + dg[0][2][2] * g[0][3] *
            g[1][1] * g[1][2] * g[2][3] * g[3][3].powi(2) - c::<T>(2.0) * dg[0][2][3] * g[0][1]
            * g[1][2].powi(2) * g[2][3] * g[3][3].powi(2) + dg[0][2][2] * g[0][2] * g[1][1] *
            g[1][3] * g[2][3] * g[3][3].powi(2) - c::<T>(2.0) * dg[0][2][2] * g[0][1] * g[1][2]
            * g[1][3] * g[2][3] * g[3][3].powi(2) - c::<T>(2.0) * dg[0][1][3] * g[0][2] *
            g[1][1] * g[2][2] * g[2][3] * g[3][3].powi(2) - c::<T>(2.0) * dg[0][1][2] * g[0][3]
            * g[1][1] * g[2][2] * g[2][3] * g[3][3].powi(2) + c::<T>(2.0) * dg[0][1][3] *
            g[0][1] * g[1][2] * g[2][2] * g[2][3] * g[3][3].powi(2) + dg[0][1][1] * g[0][3] *
            g[1][2] * g[2][2] * g[2][3] * g[3][3].powi(2) + c::<T>(2.0) * dg[0][1][2] * g[0][1]
            * g[1][3] * g[2][2] * g[2][3] * g[3][3].powi(2) + dg[0][1][1] * g[0][2] * g[1][3] *
            g[2][2] * g[2][3] * g[3][3].powi(2) - c::<T>(2.0) * dg[1][0][0] * g[1][2] * g[1][3]
            * g[2][2] * g[2][3] * g[3][3].powi(2) - c::<T>(2.0) * dg[0][1][2] * g[0][2] *
            g[1][1] * g[2][3].powi(2) * g[3][3].powi(2) + c::<T>(2.0) * dg[0][1][2] * g[0][1] *
            g[1][2] * g[2][3].powi(2) * g[3][3].powi(2) + dg[0][1][1] * g[0][2] * g[1][2] *
            g[2][3].powi(2) * g[3][3].powi(2) - dg[1][0][0] * g[1][2].powi(2) * g[2][3].powi(2)
            * g[3][3].powi(2) - c::<T>(2.0) * dg[0][1][1] * g[0][1] * g[2][2] * g[2][3].powi(2)
            * g[3][3].powi(2) + c::<T>(2.0) * dg[1][0][0] * g[1][1] * g[2][2] * g[2][3].powi(2)
            * g[3][3].powi(2) - dg[0][2][2] * g[0][2] * g[1][1] * g[1][2] * g[3][3].powi(3) +
            dg[0][2][2] * g[0][1] * g[1][2].powi(2) * g[3][3].powi(3) + c::<T>(2.0) *
            dg[0][1][2] * g[0][2] * g[1][1] * g[2][2] * g[3][3].powi(3) - c::<T>(2.0) *
            dg[0][1][2] * g[0][1] * g[1][2] * g[2][2] * g[3][3].powi(3) - dg[0][1][1] * g[0][2]
            * g[1][2] * g[2][2] * g[3][3].powi(3) + dg[1][0][0] * g[1][2].powi(2) * g[2][2] *
            g[3][3].powi(3) + dg[0][1][1] * g[0][1] * g[2][2].powi(2) * g[3][3].powi(3) -
            dg[1][0][0] * g[1][1] * g[2][2].powi(2) * g[3][3].powi(3)) / (c::<T>(4.0) * g[3][3]
            * (-g[2][3].powi(2) + g[2][2] * g[3][3]) * (g[1][3].powi(2) * g[2][2] - c::<T>(2.0)
            * g[1][2] * g[1][3] * g[2][3] + g[1][1] * g[2][3].powi(2) + g[1][2].powi(2) *
            g[3][3] - g[1][1] * g[2][2] * g[3][3]))
    };
    b[0][1][1] = {
        (dg[1][3][3] * g[0][3] * g[1][2] * g[1][3].powi(2) * g[2][2] * g[2][3] - dg[1][3][3] *
            g[0][2] * g[1][3].powi(3) * g[2][2] * g[2][3] - c::<T>(2.0) * dg[1][3][3] * g[0][3]
            * g[1][2].powi(2) * g[1][3] * g[2][3].powi(2) + c::<T>(2.0) * dg[1][3][3] * g[0][2]
            * g[1][2] * g[1][3].powi(2) * g[2][3].powi(2) + dg[1][3][3] * g[0][3] * g[1][1] *
            g[1][2] * g[2][3].powi(3) - dg[1][3][3] * g[0][2] * g[1][1] * g[1][3] *
            g[2][3].powi(3) + dg[1][3][3] * g[0][3] * g[1][2].powi(2) * g[1][3] * g[2][2] *
            g[3][3] - dg[1][3][3] * g[0][2] * g[1][2] * g[1][3].powi(2) * g[2][2] * g[3][3] -
            c::<T>(2.0) * dg[1][2][3] * g[0][3] * g[1][2] * g[1][3].powi(2) * g[2][2] * g[3][3]
            + c::<T>(2.0) * dg[1][2][3] * g[0][2] * g[1][3].powi(3) * g[2][2] * g[3][3] -
            dg[1][3][3] * g[0][3] * g[1][1] * g[1][3] * g[2][2].powi(2) * g[3][3] + dg[1][3][3]
            * g[0][1] * g[1][3].powi(2) * g[2][2].powi(2) * g[3][3] + c::<T>(2.0) * dg[1][2][3]
            * g[0][3] * g[1][2].powi(2) * g[1][3] * g[2][3] * g[3][3] - c::<T>(2.0) *
            dg[1][2][3] * g[0][2] * g[1][2] * g[1][3].powi(2) * g[2][3] * g[3][3] + dg[1][2][2]
            * g[0][3] * g[1][2] * g[1][3].powi(2) * g[2][3] * g[3][3] - dg[1][2][2] * g[0][2] *
            g[1][3].powi(3) * g[2][3] * g[3][3] + c::<T>(2.0) * dg[1][3][3] * g[0][2] * g[1][1]
            * g[1][3] * g[2][2] * g[2][3] * g[3][3] + c::<T>(2.0) * dg[1][2][3] * g[0][3] *
            g[1][1] * g[1][3] * g[2][2] * g[2][3] * g[3][3] - c::<T>(2.0) * dg[1][3][3] *
            g[0][1] * g[1][2] * g[1][3] * g[2][2] * g[2][3] * g[3][3] - c::<T>(2.0) *
            dg[1][2][3] * g[0][1] * g[1][3].powi(2) * g[2][2] * g[2][3] * g[3][3] - dg[1][3][3]
            * g[0][2] * g[1][1] * g[1][2] * g[2][3].powi(2) * g[3][3] - c::<T>(2.0) *
            dg[1][2][3] * g[0][3] * g[1][1] * g[1][2] * g[2][3].powi(2) * g[3][3] + dg[1][3][3]
            * g[0][1] * g[1][2].powi(2) * g[2][3].powi(2) * g[3][3] + c::<T>(2.0) * dg[1][1][3]
            * g[0][3] * g[1][2].powi(2) * g[2][3].powi(2) * g[3][3] - dg[1][2][2] * g[0][3] *
            g[1][1] * g[1][3] * g[2][3].powi(2) * g[3][3] + c::<T>(2.0) * dg[1][2][3] * g[0][1]
            * g[1][2] * g[1][3] * g[2][3].powi(2) * g[3][3] - c::<T>(2.0) * dg[1][1][3] *
            g[0][2] * g[1][2] * g[1][3] * g[2][3].powi(2) * g[3][3] - c::<T>(2.0) * dg[1][1][2]
            * g[0][3] * g[1][2] * g[1][3] * g[2][3].powi(2) * g[3][3] + dg[1][2][2] * g[0][1] *
            g[1][3].powi(2) * g[2][3].powi(2) * g[3][3] + c::<T>(2.0) * dg[1][1][2] * g[0][2] *
            g[1][3].powi(2) * g[2][3].powi(2) * g[3][3] - c::<T>(2.0) * dg[1][1][3] * g[0][3] *
            g[1][1] * g[2][2] * g[2][3].powi(2) * g[3][3] + c::<T>(2.0) * dg[1][1][3] * g[0][1]
            * g[1][3] * g[2][2] * g[2][3].powi(2) * g[3][3] + dg[1][1][1] * g[0][3] * g[1][3] *
            g[2][2] * g[2][3].powi(2) * g[3][3] + dg[0][1][1] * g[1][3].powi(2) * g[2][2] *
            g[2][3].powi(2) * g[3][3] - c::<T>(2.0) * dg[1][0][1] * g[1][3].powi(2) * g[2][2] *
            g[2][3].powi(2) * g[3][3] + c::<T>(2.0) * dg[1][1][3] * g[0][2] * g[1][1] *
            g[2][3].powi(3) * g[3][3] + c::<T>(2.0) * dg[1][1][2] * g[0][3] * g[1][1] *
            g[2][3].powi(3) * g[3][3] - c::<T>(2.0) * dg[1][1][3] * g[0][1] * g[1][2] *
            g[2][3].powi(3) * g[3][3] - dg[1][1][1] * g[0][3] * g[1][2] * g[2][3].powi(3) *
            g[3][3] - c::<T>(2.0) * dg[1][1][2] * g[0][1] * g[1][3] * g[2][3].powi(3) * g[3][3]
            - dg[1][1][1] * g[0][2] * g[1][3] * g[2][3].powi(3) * g[3][3] - c::<T>(2.0) *
            dg[0][1][1] * g[1][2] * g[1][3] * g[2][3].powi(3) * g[3][3] + c::<T>(4.0) *
            dg[1][0][1] * g[1][2] * g[1][3] * g[2][3].powi(3) * g[3][3] + dg[1][1][1] * g[0][1]
            * g[2][3].powi(4) * g[3][3] + dg[0][1][1] * g[1][1] * g[2][3].powi(4) * g[3][3] -
            c::<T>(2.0) * dg[1][0][1] * g[1][1] * g[2][3].powi(4) * g[3][3] - dg[1][2][2] *
            g[0][3] * g[1][2].powi(2) * g[1][3] * g[3][3].powi(2) + dg[1][2][2] * g[0][2] *
            g[1][2] * g[1][3].powi(2) * g[3][3].powi(2) - c::<T>(2.0) * dg[1][1][3] * g[0][3] *
            g[1][2].powi(2) * g[2][2] * g[3][3].powi(2) - c::<T>(2.0) * dg[1][2][3] * g[0][2] *
            g[1][1] * g[1][3] * g[2][2] * g[3][3].powi(2) + c::<T>(2.0) * dg[1][2][3] * g[0][1]
            * g[1][2] * g[1][3] * g[2][2] * g[3][3].powi(2) + c::<T>(2.0) * dg[1][1][3] *
            g[0][2] * g[1][2] * g[1][3] * g[2][2] * g[3][3].powi(2) + c::<T>(2.0) * dg[1][1][2]
            * g[0][3] * g[1][2] * g[1][3] * g[2][2] * g[3][3].powi(2) - c::<T>(2.0) *
            dg[1][1][2] * g[0][2] * g[1][3].powi(2) * g[2][2] * g[3][3].powi(2) + c::<T>(2.0) *
            dg[1][1][3] * g[0][3] * g[1][1] * g[2][2].powi(2) * g[3][3].powi(2) - c::<T>(2.0) *
            dg[1][1][3] * g[0][1] * g[1][3] * g[2][2].powi(2) * g[3][3].powi(2) - dg[1][1][1] *
            g[0][3] * g[1][3] * g[2][2].powi(2) * g[3][3].powi(2) - dg[0][1][1] *
            g[1][3].powi(2) * g[2][2].powi(2) * g[3][3].powi(2) + c::<T>(2.0) * dg[1][0][1] *
            g[1][3].powi(2) * g[2][2].powi(2) * g[3][3].powi(2) + c::<T>(2.0) * dg[1][2][3] *
            g[0][2] * g[1][1] * g[1][2] * g[2][3] * g[3][3].powi(2) + dg[1][2][2] * g[0][3] *
            g[1][1] * g[1][2] * g[2][3] * g[3][3].powi(2) - c::<T>(2.0) * dg[1][2][3] * g[0][1]
            * g[1][2].powi(2) * g[2][3] * g[3][3].powi(2) + dg[1][2][2] * g[0][2] * g[1][1] *
            g[1][3] * g[2][3] * g[3][3].powi(2) - c::<T>(2.0) * dg[1][2][2] * g[0][1] * g[1][2]
            * g[1][3] * g[2][3] * g[3][3].powi(2) - c::<T>(2.0) * dg[1][1][3] * g[0][2] *
            g[1][1] * g[2][2] * g[2][3] * g[3][3].powi(2) - c::<T>(2.0) * dg[1][1][2] * g[0][3]
            * g[1][1] * g[2][2] * g[2][3] * g[3][3].powi(2) + c::<T>(2.0) * dg[1][1][3] *
            g[0][1] * g[1][2] * g[2][2] * g[2][3] * g[3][3].powi(2) + dg[1][1][1] * g[0][3] *
            g[1][2] * g[2][2] * g[2][3] * g[3][3].powi(2) + c::<T>(2.0) * dg[1][1][2] * g[0][1]
            * g[1][3] * g[2][2] * g[2][3] * g[3][3].powi(2) + dg[1][1][1] * g[0][2] * g[1][3] *
            g[2][2] * g[2][3] * g[3][3].powi(2) + c::<T>(2.0) * dg[0][1][1] * g[1][2] * g[1][3]
            * g[2][2] * g[2][3] * g[3][3].powi(2) - c::<T>(4.0) * dg[1][0][1] * g[1][2] *
            g[1][3] * g[2][2] * g[2][3] * g[3][3].powi(2) - c::<T>(2.0) * dg[1][1][2] * g[0][2]
            * g[1][1] * g[2][3].powi(2) * g[3][3].powi(2) + c::<T>(2.0) * dg[1][1][2] * g[0][1]
            * g[1][2] * g[2][3].powi(2) * g[3][3].powi(2) + dg[1][1][1] * g[0][2] * g[1][2] *
            g[2][3].powi(2) * g[3][3].powi(2) + dg[0][1][1] * g[1][2].powi(2) * g[2][3].powi(2)
            * g[3][3].powi(2) - c::<T>(2.0) * dg[1][0][1] * g[1][2].powi(2) * g[2][3].powi(2) *
            g[3][3].powi(2) - c::<T>(2.0) * dg[1][1][1] * g[0][1] * g[2][2] * g[2][3].powi(2) *
            g[3][3].powi(2) - c::<T>(2.0) * dg[0][1][1] * g[1][1] * g[2][2] * g[2][3].powi(2) *
            g[3][3].powi(2) + c::<T>(4.0) * dg[1][0][1] * g[1][1] * g[2][2] * g[2][3].powi(2) *
            g[3][3].powi(2) - dg[1][2][2] * g[0][2] * g[1][1] * g[1][2] * g[3][3].powi(3) +
            dg[1][2][2] * g[0][1] * g[1][2].powi(2) * g[3][3].powi(3) + c::<T>(2.0) *
            dg[1][1][2] * g[0][2] * g[1][1] * g[2][2] * g[3][3].powi(3) - c::<T>(2.0) *
            dg[1][1][2] * g[0][1] * g[1][2] * g[2][2] * g[3][3].powi(3) - dg[1][1][1] * g[0][2]
            * g[1][2] * g[2][2] * g[3][3].powi(3) - dg[0][1][1] * g[1][2].powi(2) * g[2][2] *
            g[3][3].powi(3) + c::<T>(2.0) * dg[1][0][1] * g[1][2].powi(2) * g[2][2] *
            g[3][3].powi(3) + dg[1][1][1] * g[0][1] * g[2][2].powi(2) * g[3][3].powi(3) +
            dg[0][1][1] * g[1][1] * g[2][2].powi(2) * g[3][3].powi(3) - c::<T>(2.0) *
            dg[1][0][1] * g[1][1] * g[2][2].powi(2) * g[3][3].powi(3)) / (c::<T>(4.0) * g[3][3]
            * (-g[2][3].powi(2) + g[2][2] * g[3][3]) * (g[1][3].powi(2) * g[2][2] - c::<T>(2.0)
            * g[1][2] * g[1][3] * g[2][3] + g[1][1] * g[2][3].powi(2) + g[1][2].powi(2) *
            g[3][3] - g[1][1] * g[2][2] * g[3][3]))
    };
    b[0][1][2] = {
        (dg[2][3][3] * g[0][3] * g[1][2] * g[1][3].powi(2) * g[2][2] * g[2][3] - dg[2][3][3] *
            g[0][2] * g[1][3].powi(3) * g[2][2] * g[2][3] - c::<T>(2.0) * dg[2][3][3] * g[0][3]
            * g[1][2].powi(2) * g[1][3] * g[2][3].powi(2) + c::<T>(2.0) * dg[2][3][3] * g[0][2]
            * g[1][2] * g[1][3].powi(2) * g[2][3].powi(2) + dg[2][3][3] * g[0][3] * g[1][1] *
            g[1][2] * g[2][3].powi(3) - dg[2][3][3] * g[0][2] * g[1][1] * g[1][3] *
            g[2][3].powi(3) + dg[2][3][3] * g[0][3] * g[1][2].powi(2) * g[1][3] * g[2][2] *
            g[3][3] - dg[2][3][3] * g[0][2] * g[1][2] * g[1][3].powi(2) * g[2][2] * g[3][3] -
            c::<T>(2.0) * dg[2][2][3] * g[0][3] * g[1][2] * g[1][3].powi(2) * g[2][2] * g[3][3]
            + c::<T>(2.0) * dg[2][2][3] * g[0][2] * g[1][3].powi(3) * g[2][2] * g[3][3] -
            dg[2][3][3] * g[0][3] * g[1][1] * g[1][3] * g[2][2].powi(2) * g[3][3] + dg[2][3][3]
            * g[0][1] * g[1][3].powi(2) * g[2][2].powi(2) * g[3][3] + c::<T>(2.0) * dg[2][2][3]
            * g[0][3] * g[1][2].powi(2) * g[1][3] * g[2][3] * g[3][3] - c::<T>(2.0) *
            dg[2][2][3] * g[0][2] * g[1][2] * g[1][3].powi(2) * g[2][3] * g[3][3] + dg[2][2][2]
            * g[0][3] * g[1][2] * g[1][3].powi(2) * g[2][3] * g[3][3] - dg[2][2][2] * g[0][2] *
            g[1][3].powi(3) * g[2][3] * g[3][3] + c::<T>(2.0) * dg[2][3][3] * g[0][2] * g[1][1]
            * g[1][3] * g[2][2] * g[2][3] * g[3][3] + c::<T>(2.0) * dg[2][2][3] * g[0][3] *
            g[1][1] * g[1][3] * g[2][2] * g[2][3] * g[3][3] - c::<T>(2.0) * dg[2][3][3] *
            g[0][1] * g[1][2] * g[1][3] * g[2][2] * g[2][3] * g[3][3] - c::<T>(2.0) *
            dg[2][2][3] * g[0][1] * g[1][3].powi(2) * g[2][2] * g[2][3] * g[3][3] - dg[2][3][3]
            * g[0][2] * g[1][1] * g[1][2] * g[2][3].powi(2) * g[3][3] - c::<T>(2.0) *
            dg[2][2][3] * g[0][3] * g[1][1] * g[1][2] * g[2][3].powi(2) * g[3][3] + dg[2][3][3]
            * g[0][1] * g[1][2].powi(2) * g[2][3].powi(2) * g[3][3] + c::<T>(2.0) * dg[2][1][3]
            * g[0][3] * g[1][2].powi(2) * g[2][3].powi(2) * g[3][3] - dg[2][2][2] * g[0][3] *
            g[1][1] * g[1][3] * g[2][3].powi(2) * g[3][3] + c::<T>(2.0) * dg[2][2][3] * g[0][1]
            * g[1][2] * g[1][3] * g[2][3].powi(2) * g[3][3] - c::<T>(2.0) * dg[2][1][3] *
            g[0][2] * g[1][2] * g[1][3] * g[2][3].powi(2) * g[3][3] - c::<T>(2.0) * dg[2][1][2]
            * g[0][3] * g[1][2] * g[1][3] * g[2][3].powi(2) * g[3][3] + dg[2][2][2] * g[0][1] *
            g[1][3].powi(2) * g[2][3].powi(2) * g[3][3] + c::<T>(2.0) * dg[2][1][2] * g[0][2] *
            g[1][3].powi(2) * g[2][3].powi(2) * g[3][3] - c::<T>(2.0) * dg[2][1][3] * g[0][3] *
            g[1][1] * g[2][2] * g[2][3].powi(2) * g[3][3] + c::<T>(2.0) * dg[2][1][3] * g[0][1]
            * g[1][3] * g[2][2] * g[2][3].powi(2) * g[3][3] + dg[2][1][1] * g[0][3] * g[1][3] *
            g[2][2] * g[2][3].powi(2) * g[3][3] + dg[0][1][2] * g[1][3].powi(2) * g[2][2] *
            g[2][3].powi(2) * g[3][3] - dg[1][0][2] * g[1][3].powi(2) * g[2][2] *
            g[2][3].powi(2) * g[3][3] - dg[2][0][1] * g[1][3].powi(2) * g[2][2] *
            g[2][3].powi(2) * g[3][3] + c::<T>(2.0) * dg[2][1][3] * g[0][2] * g[1][1] *
            g[2][3].powi(3) * g[3][3] + c::<T>(2.0) * dg[2][1][2] * g[0][3] * g[1][1] *
            g[2][3].powi(3) * g[3][3] - c::<T>(2.0) * dg[2][1][3] * g[0][1] * g[1][2] *
            g[2][3].powi(3) * g[3][3] - dg[2][1][1] * g[0][3] * g[1][2] * g[2][3].powi(3) *
            g[3][3] - c::<T>(2.0) * dg[2][1][2] * g[0][1] * g[1][3] * g[2][3].powi(3) * g[3][3]
            - dg[2][1][1] * g[0][2] * g[1][3] * g[2][3].powi(3) * g[3][3] - c::<T>(2.0) *
            dg[0][1][2] * g[1][2] * g[1][3] * g[2][3].powi(3) * g[3][3] + c::<T>(2.0) *
            dg[1][0][2] * g[1][2] * g[1][3] * g[2][3].powi(3) * g[3][3] + c::<T>(2.0) *
            dg[2][0][1] * g[1][2] * g[1][3] * g[2][3].powi(3) * g[3][3] + dg[2][1][1] * g[0][1]
            * g[2][3].powi(4) * g[3][3] + dg[0][1][2] * g[1][1] * g[2][3].powi(4) * g[3][3] -
            dg[1][0][2] * g[1][1] * g[2][3].powi(4) * g[3][3] - dg[2][0][1] * g[1][1] *
            g[2][3].powi(4) * g[3][3] - dg[2][2][2] * g[0][3] * g[1][2].powi(2) * g[1][3] *
            g[3][3].powi(2) + dg[2][2][2] * g[0][2] * g[1][2] * g[1][3].powi(2) *
            g[3][3].powi(2) - c::<T>(2.0) * dg[2][1][3] * g[0][3] * g[1][2].powi(2) * g[2][2] *
            g[3][3].powi(2) - c::<T>(2.0) * dg[2][2][3] * g[0][2] * g[1][1] * g[1][3] * g[2][2]
            * g[3][3].powi(2) + c::<T>(2.0) * dg[2][2][3] * g[0][1] * g[1][2] * g[1][3] *
            g[2][2] * g[3][3].powi(2) + c::<T>(2.0) * dg[2][1][3] * g[0][2] * g[1][2] * g[1][3]
            * g[2][2] * g[3][3].powi(2) + c::<T>(2.0) * dg[2][1][2] * g[0][3] * g[1][2] *
            g[1][3] * g[2][2] * g[3][3].powi(2) - c::<T>(2.0) * dg[2][1][2] * g[0][2] *
            g[1][3].powi(2) * g[2][2] * g[3][3].powi(2) + c::<T>(2.0) * dg[2][1][3] * g[0][3] *
            g[1][1] * g[2][2].powi(2) * g[3][3].powi(2) - c::<T>(2.0) * dg[2][1][3] * g[0][1] *
            g[1][3] * g[2][2].powi(2) * g[3][3].powi(2) - dg[2][1][1] * g[0][3] * g[1][3] *
            g[2][2].powi(2) * g[3][3].powi(2) - dg[0][1][2] * g[1][3].powi(2) * g[2][2].powi(2)
            * g[3][3].powi(2) + dg[1][0][2] * g[1][3].powi(2) * g[2][2].powi(2) *
            g[3][3].powi(2) + dg[2][0][1] * g[1][3].powi(2) * g[2][2].powi(2) * g[3][3].powi(2)
            + c::<T>(2.0) * dg[2][2][3] * g[0][2] * g[1][1] * g[1][2] * g[2][3] *
            g[3][3].powi(2) + dg[2][2][2] * g[0][3] * g[1][1] * g[1][2] * g[2][3] *
            g[3][3].powi(2) - c::<T>(2.0) * dg[2][2][3] * g[0][1] * g[1][2].powi(2) * g[2][3] *
            g[3][3].powi(2) + dg[2][2][2] * g[0][2] * g[1][1] * g[1][3] * g[2][3] *
            g[3][3].powi(2) - c::<T>(2.0) * dg[2][2][2] * g[0][1] * g[1][2] * g[1][3] * g[2][3]
            * g[3][3].powi(2) - c::<T>(2.0) * dg[2][1][3] * g[0][2] * g[1][1] * g[2][2] *
            g[2][3] * g[3][3].powi(2) - c::<T>(2.0) * dg[2][1][2] * g[0][3] * g[1][1] * g[2][2]
            * g[2][3] * g[3][3].powi(2) + c::<T>(2.0) * dg[2][1][3] * g[0][1] * g[1][2] *
            g[2][2] * g[2][3] * g[3][3].powi(2) + dg[2][1][1] * g[0][3] * g[1][2] * g[2][2] *
            g[2][3] * g[3][3].powi(2) + c::<T>(2.0) * dg[2][1][2] * g[0][1] * g[1][3] * g[2][2]
            * g[2][3] * g[3][3].powi(2) + dg[2][1][1] * g[0][2] * g[1][3] * g[2][2] * g[2][3] *
            g[3][3].powi(2) + c::<T>(2.0) * dg[0][1][2] * g[1][2] * g[1][3] * g[2][2] * g[2][3]
            * g[3][3].powi(2) - c::<T>(2.0) * dg[1][0][2] * g[1][2] * g[1][3] * g[2][2] *
            g[2][3] * g[3][3].powi(2) - c::<T>(2.0) * dg[2][0][1] * g[1][2] * g[1][3] * g[2][2]
            * g[2][3] * g[3][3].powi(2) - c::<T>(2.0) * dg[2][1][2] * g[0][2] * g[1][1] *
            g[2][3].powi(2) * g[3][3].powi(2) + c::<T>(2.0) * dg[2][1][2] * g[0][1] * g[1][2] *
            g[2][3].powi(2) * g[3][3].powi(2) + dg[2][1][1] * g[0][2] * g[1][2] *
            g[2][3].powi(2) * g[3][3].powi(2) + dg[0][1][2] * g[1][2].powi(2) * g[2][3].powi(2)
            * g[3][3].powi(2) - dg[1][0][2] * g[1][2].powi(2) * g[2][3].powi(2) *
            g[3][3].powi(2) - dg[2][0][1] * g[1][2].powi(2) * g[2][3].powi(2) * g[3][3].powi(2)
            - c::<T>(2.0) * dg[2][1][1] * g[0][1] * g[2][2] * g[2][3].powi(2) * g[3][3].powi(2)
            - c::<T>(2.0) * dg[0][1][2] * g[1][1] * g[2][2] * g[2][3].powi(2) * g[3][3].powi(2)
            + c::<T>(2.0) * dg[1][0][2] * g[1][1] * g[2][2] * g[2][3].powi(2) * g[3][3].powi(2)
            + c::<T>(2.0) * dg[2][0][1] * g[1][1] * g[2][2] * g[2][3].powi(2) * g[3][3].powi(2)
            - dg[2][2][2] * g[0][2] * g[1][1] * g[1][2] * g[3][3].powi(3) + dg[2][2][2] *
            g[0][1] * g[1][2].powi(2) * g[3][3].powi(3) + c::<T>(2.0) * dg[2][1][2] * g[0][2] *
            g[1][1] * g[2][2] * g[3][3].powi(3) - c::<T>(2.0) * dg[2][1][2] * g[0][1] * g[1][2]
            * g[2][2] * g[3][3].powi(3) - dg[2][1][1] * g[0][2] * g[1][2] * g[2][2] *
            g[3][3].powi(3) - dg[0][1][2] * g[1][2].powi(2) * g[2][2] * g[3][3].powi(3) +
            dg[1][0][2] * g[1][2].powi(2) * g[2][2] * g[3][3].powi(3) + dg[2][0][1] *
            g[1][2].powi(2) * g[2][2] * g[3][3].powi(3) + dg[2][1][1] * g[0][1] *
            g[2][2].powi(2) * g[3][3].powi(3) + dg[0][1][2] * g[1][1] * g[2][2].powi(2) *
            g[3][3].powi(3) - dg[1][0][2] * g[1][1] * g[2][2].powi(2) * g[3][3].powi(3) -
            dg[2][0][1] * g[1][1] * g[2][2].powi(2) * g[3][3].powi(3)) / (c::<T>(4.0) * g[3][3]
            * (-g[2][3].powi(2) + g[2][2] * g[3][3]) * (g[1][3].powi(2) * g[2][2] - c::<T>(2.0)
            * g[1][2] * g[1][3] * g[2][3] + g[1][1] * g[2][3].powi(2) + g[1][2].powi(2) *
            g[3][3] - g[1][1] * g[2][2] * g[3][3]))
    };
    b[0][1][3] = {
        (dg[3][3][3] * g[0][3] * g[1][2] * g[1][3].powi(2) * g[2][2] * g[2][3] - dg[3][3][3] *
            g[0][2] * g[1][3].powi(3) * g[2][2] * g[2][3] - c::<T>(2.0) * dg[3][3][3] * g[0][3]
            * g[1][2].powi(2) * g[1][3] * g[2][3].powi(2) + c::<T>(2.0) * dg[3][3][3] * g[0][2]
            * g[1][2] * g[1][3].powi(2) * g[2][3].powi(2) + dg[3][3][3] * g[0][3] * g[1][1] *
            g[1][2] * g[2][3].powi(3) - dg[3][3][3] * g[0][2] * g[1][1] * g[1][3] *
            g[2][3].powi(3) + dg[3][3][3] * g[0][3] * g[1][2].powi(2) * g[1][3] * g[2][2] *
            g[3][3] - dg[3][3][3] * g[0][2] * g[1][2] * g[1][3].powi(2) * g[2][2] * g[3][3] -
            c::<T>(2.0) * dg[3][2][3] * g[0][3] * g[1][2] * g[1][3].powi(2) * g[2][2] * g[3][3]
            + c::<T>(2.0) * dg[3][2][3] * g[0][2] * g[1][3].powi(3) * g[2][2] * g[3][3] -
            dg[3][3][3] * g[0][3] * g[1][1] * g[1][3] * g[2][2].powi(2) * g[3][3] + dg[3][3][3]
            * g[0][1] * g[1][3].powi(2) * g[2][2].powi(2) * g[3][3] + c::<T>(2.0) * dg[3][2][3]
            * g[0][3] * g[1][2].powi(2) * g[1][3] * g[2][3] * g[3][3] - c::<T>(2.0) *
            dg[3][2][3] * g[0][2] * g[1][2] * g[1][3].powi(2) * g[2][3] * g[3][3] + dg[3][2][2]
            * g[0][3] * g[1][2] * g[1][3].powi(2) * g[2][3] * g[3][3] - dg[3][2][2] * g[0][2] *
            g[1][3].powi(3) * g[2][3] * g[3][3] + c::<T>(2.0) * dg[3][3][3] * g[0][2] * g[1][1]
            * g[1][3] * g[2][2] * g[2][3] * g[3][3] + c::<T>(2.0) * dg[3][2][3] * g[0][3] *
            g[1][1] * g[1][3] * g[2][2] * g[2][3] * g[3][3] - c::<T>(2.0) * dg[3][3][3] *
            g[0][1] * g[1][2] * g[1][3] * g[2][2] * g[2][3] * g[3][3] - c::<T>(2.0) *
            dg[3][2][3] * g[0][1] * g[1][3].powi(2) * g[2][2] * g[2][3] * g[3][3] - dg[3][3][3]
            * g[0][2] * g[1][1] * g[1][2] * g[2][3].powi(2) * g[3][3] - c::<T>(2.0) *
            dg[3][2][3] * g[0][3] * g[1][1] * g[1][2] * g[2][3].powi(2) * g[3][3] + dg[3][3][3]
            * g[0][1] * g[1][2].powi(2) * g[2][3].powi(2) * g[3][3] + c::<T>(2.0) * dg[3][1][3]
            * g[0][3] * g[1][2].powi(2) * g[2][3].powi(2) * g[3][3] - dg[3][2][2] * g[0][3] *
            g[1][1] * g[1][3] * g[2][3].powi(2) * g[3][3] + c::<T>(2.0) * dg[3][2][3] * g[0][1]
            * g[1][2] * g[1][3] * g[2][3].powi(2) * g[3][3] - c::<T>(2.0) * dg[3][1][3] *
            g[0][2] * g[1][2] * g[1][3] * g[2][3].powi(2) * g[3][3] - c::<T>(2.0) * dg[3][1][2]
            * g[0][3] * g[1][2] * g[1][3] * g[2][3].powi(2) * g[3][3] + dg[3][2][2] * g[0][1] *
            g[1][3].powi(2) * g[2][3].powi(2) * g[3][3] + c::<T>(2.0) * dg[3][1][2] * g[0][2] *
            g[1][3].powi(2) * g[2][3].powi(2) * g[3][3] - c::<T>(2.0) * dg[3][1][3] * g[0][3] *
            g[1][1] * g[2][2] * g[2][3].powi(2) * g[3][3] + c::<T>(2.0) * dg[3][1][3] * g[0][1]
            * g[1][3] * g[2][2] * g[2][3].powi(2) * g[3][3] + dg[3][1][1] * g[0][3] * g[1][3] *
            g[2][2] * g[2][3].powi(2) * g[3][3] + dg[0][1][3] * g[1][3].powi(2) * g[2][2] *
            g[2][3].powi(2) * g[3][3] - dg[1][0][3] * g[1][3].powi(2) * g[2][2] *
            g[2][3].powi(2) * g[3][3] - dg[3][0][1] * g[1][3].powi(2) * g[2][2] *
            g[2][3].powi(2) * g[3][3] + c::<T>(2.0) * dg[3][1][3] * g[0][2] * g[1][1] *
            g[2][3].powi(3) * g[3][3] + c::<T>(2.0) * dg[3][1][2] * g[0][3] * g[1][1] *
            g[2][3].powi(3) * g[3][3] - c::<T>(2.0) * dg[3][1][3] * g[0][1] * g[1][2] *
            g[2][3].powi(3) * g[3][3] - dg[3][1][1] * g[0][3] * g[1][2] * g[2][3].powi(3) *
            g[3][3] - c::<T>(2.0) * dg[3][1][2] * g[0][1] * g[1][3] * g[2][3].powi(3) * g[3][3]
            - dg[3][1][1] * g[0][2] * g[1][3] * g[2][3].powi(3) * g[3][3] - c::<T>(2.0) *
            dg[0][1][3] * g[1][2] * g[1][3] * g[2][3].powi(3) * g[3][3] + c::<T>(2.0) *
            dg[1][0][3] * g[1][2] * g[1][3] * g[2][3].powi(3) * g[3][3] + c::<T>(2.0) *
            dg[3][0][1] * g[1][2] * g[1][3] * g[2][3].powi(3) * g[3][3] + dg[3][1][1] * g[0][1]
            * g[2][3].powi(4) * g[3][3] + dg[0][1][3] * g[1][1] * g[2][3].powi(4) * g[3][3] -
            dg[1][0][3] * g[1][1] * g[2][3].powi(4) * g[3][3] - dg[3][0][1] * g[1][1] *
            g[2][3].powi(4) * g[3][3] - dg[3][2][2] * g[0][3] * g[1][2].powi(2) * g[1][3] *
            g[3][3].powi(2) + dg[3][2][2] * g[0][2] * g[1][2] * g[1][3].powi(2) *
            g[3][3].powi(2) - c::<T>(2.0) * dg[3][1][3] * g[0][3] * g[1][2].powi(2) * g[2][2] *
            g[3][3].powi(2) - c::<T>(2.0) * dg[3][2][3] * g[0][2] * g[1][1] * g[1][3] * g[2][2]
            * g[3][3].powi(2) + c::<T>(2.0) * dg[3][2][3] * g[0][1] * g[1][2] * g[1][3] *
            g[2][2] * g[3][3].powi(2) + c::<T>(2.0) * dg[3][1][3] * g[0][2] * g[1][2] * g[1][3]
            * g[2][2] * g[3][3].powi(2) + c::<T>(2.0) * dg[3][1][2] * g[0][3] * g[1][2] *
            g[1][3] * g[2][2] * g[3][3].powi(2) - c::<T>(2.0) * dg[3][1][2] * g[0][2] *
            g[1][3].powi(2) * g[2][2] * g[3][3].powi(2) + c::<T>(2.0) * dg[3][1][3] * g[0][3] *
            g[1][1] * g[2][2].powi(2) * g[3][3].powi(2) - c::<T>(2.0) * dg[3][1][3] * g[0][1] *
            g[1][3] * g[2][2].powi(2) * g[3][3].powi(2) - dg[3][1][1] * g[0][3] * g[1][3] *
            g[2][2].powi(2) * g[3][3].powi(2) - dg[0][1][3] * g[1][3].powi(2) * g[2][2].powi(2)
            * g[3][3].powi(2) + dg[1][0][3] * g[1][3].powi(2) * g[2][2].powi(2) *
            g[3][3].powi(2) + dg[3][0][1] * g[1][3].powi(2) * g[2][2].powi(2) * g[3][3].powi(2)
            + c::<T>(2.0) * dg[3][2][3] * g[0][2] * g[1][1] * g[1][2] * g[2][3] *
            g[3][3].powi(2) + dg[3][2][2] * g[0][3] * g[1][1] * g[1][2] * g[2][3] *
            g[3][3].powi(2) - c::<T>(2.0) * dg[3][2][3] * g[0][1] * g[1][2].powi(2) * g[2][3] *
            g[3][3].powi(2) + dg[3][2][2] * g[0][2] * g[1][1] * g[1][3] * g[2][3] *
            g[3][3].powi(2) - c::<T>(2.0) * dg[3][2][2] * g[0][1] * g[1][2] * g[1][3] * g[2][3]
            * g[3][3].powi(2) - c::<T>(2.0) * dg[3][1][3] * g[0][2] * g[1][1] * g[2][2] *
            g[2][3] * g[3][3].powi(2) - c::<T>(2.0) * dg[3][1][2] * g[0][3] * g[1][1] * g[2][2]
            * g[2][3] * g[3][3].powi(2) + c::<T>(2.0) * dg[3][1][3] * g[0][1] * g[1][2] *
            g[2][2] * g[2][3] * g[3][3].powi(2) + dg[3][1][1] * g[0][3] * g[1][2] * g[2][2] *
            g[2][3] * g[3][3].powi(2) + c::<T>(2.0) * dg[3][1][2] * g[0][1] * g[1][3] * g[2][2]
            * g[2][3] * g[3][3].powi(2) + dg[3][1][1] * g[0][2] * g[1][3] * g[2][2] * g[2][3] *
            g[3][3].powi(2) + c::<T>(2.0) * dg[0][1][3] * g[1][2] * g[1][3] * g[2][2] * g[2][3]
            * g[3][3].powi(2) - c::<T>(2.0) * dg[1][0][3] * g[1][2] * g[1][3] * g[2][2] *
            g[2][3] * g[3][3].powi(2) - c::<T>(2.0) * dg[3][0][1] * g[1][2] * g[1][3] * g[2][2]
            * g[2][3] * g[3][3].powi(2) - c::<T>(2.0) * dg[3][1][2] * g[0][2] * g[1][1] *
            g[2][3].powi(2) * g[3][3].powi(2) + c::<T>(2.0) * dg[3][1][2] * g[0][1] * g[1][2] *
            g[2][3].powi(2) * g[3][3].powi(2) + dg[3][1][1] * g[0][2] * g[1][2] *
            g[2][3].powi(2) * g[3][3].powi(2) + dg[0][1][3] * g[1][2].powi(2) * g[2][3].powi(2)
            * g[3][3].powi(2) - dg[1][0][3] * g[1][2].powi(2) * g[2][3].powi(2) *
            g[3][3].powi(2) - dg[3][0][1] * g[1][2].powi(2) * g[2][3].powi(2) * g[3][3].powi(2)
            - c::<T>(2.0) * dg[3][1][1] * g[0][1] * g[2][2] * g[2][3].powi(2) * g[3][3].powi(2)
            - c::<T>(2.0) * dg[0][1][3] * g[1][1] * g[2][2] * g[2][3].powi(2) * g[3][3].powi(2)
            + c::<T>(2.0) * dg[1][0][3] * g[1][1] * g[2][2] * g[2][3].powi(2) * g[3][3].powi(2)
            + c::<T>(2.0) * dg[3][0][1] * g[1][1] * g[2][2] * g[2][3].powi(2) * g[3][3].powi(2)
            - dg[3][2][2] * g[0][2] * g[1][1] * g[1][2] * g[3][3].powi(3) + dg[3][2][2] *
            g[0][1] * g[1][2].powi(2) * g[3][3].powi(3) + c::<T>(2.0) * dg[3][1][2] * g[0][2] *
            g[1][1] * g[2][2] * g[3][3].powi(3) - c::<T>(2.0) * dg[3][1][2] * g[0][1] * g[1][2]
            * g[2][2] * g[3][3].powi(3) - dg[3][1][1] * g[0][2] * g[1][2] * g[2][2] *
            g[3][3].powi(3) - dg[0][1][3] * g[1][2].powi(2) * g[2][2] * g[3][3].powi(3) +
            dg[1][0][3] * g[1][2].powi(2) * g[2][2] * g[3][3].powi(3) + dg[3][0][1] *
            g[1][2].powi(2) * g[2][2] * g[3][3].powi(3) + dg[3][1][1] * g[0][1] *
            g[2][2].powi(2) * g[3][3].powi(3) + dg[0][1][3] * g[1][1] * g[2][2].powi(2) *
            g[3][3].powi(3) - dg[1][0][3] * g[1][1] * g[2][2].powi(2) * g[3][3].powi(3) -
            dg[3][0][1] * g[1][1] * g[2][2].powi(2) * g[3][3].powi(3)) / (c::<T>(4.0) * g[3][3]
            * (-g[2][3].powi(2) + g[2][2] * g[3][3]) * (g[1][3].powi(2) * g[2][2] - c::<T>(2.0)
            * g[1][2] * g[1][3] * g[2][3] + g[1][1] * g[2][3].powi(2) + g[1][2].powi(2) *
            g[3][3] - g[1][1] * g[2][2] * g[3][3]))
    };
    b[0][2][0] = {
        (dg[0][3][3] * g[0][3] * g[2][2] * g[2][3] - dg[0][3][3] * g[0][2] * g[2][3].powi(2) -
            c::<T>(2.0) * dg[0][2][3] * g[0][3] * g[2][2] * g[3][3] + c::<T>(2.0) * dg[0][2][3]
            * g[0][2] * g[2][3] * g[3][3] + dg[0][2][2] * g[0][3] * g[2][3] * g[3][3] -
            dg[2][0][0] * g[2][3].powi(2) * g[3][3] - dg[0][2][2] * g[0][2] * g[3][3].powi(2) +
            dg[2][0][0] * g[2][2] * g[3][3].powi(2)) / (c::<T>(4.0) * g[3][3] *
            (-g[2][3].powi(2) + g[2][2] * g[3][3]))
    };
    b[0][2][1] = {
        (dg[1][3][3] * g[0][3] * g[2][2] * g[2][3] - dg[1][3][3] * g[0][2] * g[2][3].powi(2) -
            c::<T>(2.0) * dg[1][2][3] * g[0][3] * g[2][2] * g[3][3] + c::<T>(2.0) * dg[1][2][3]
            * g[0][2] * g[2][3] * g[3][3] + dg[1][2][2] * g[0][3] * g[2][3] * g[3][3] +
            dg[0][1][2] * g[2][3].powi(2) * g[3][3] - dg[1][0][2] * g[2][3].powi(2) * g[3][3] -
            dg[2][0][1] * g[2][3].powi(2) * g[3][3] - dg[1][2][2] * g[0][2] * g[3][3].powi(2) -
            dg[0][1][2] * g[2][2] * g[3][3].powi(2) + dg[1][0][2] * g[2][2] * g[3][3].powi(2) +
            dg[2][0][1] * g[2][2] * g[3][3].powi(2)) / (c::<T>(4.0) * g[3][3] *
            (-g[2][3].powi(2) + g[2][2] * g[3][3]))
    };
    b[0][2][2] = {
        (dg[2][3][3] * g[0][3] * g[2][2] * g[2][3] - dg[2][3][3] * g[0][2] * g[2][3].powi(2) -
            c::<T>(2.0) * dg[2][2][3] * g[0][3] * g[2][2] * g[3][3] + c::<T>(2.0) * dg[2][2][3]
            * g[0][2] * g[2][3] * g[3][3] + dg[2][2][2] * g[0][3] * g[2][3] * g[3][3] +
            dg[0][2][2] * g[2][3].powi(2) * g[3][3] - c::<T>(2.0) * dg[2][0][2] *
            g[2][3].powi(2) * g[3][3] - dg[2][2][2] * g[0][2] * g[3][3].powi(2) - dg[0][2][2] *
            g[2][2] * g[3][3].powi(2) + c::<T>(2.0) * dg[2][0][2] * g[2][2] * g[3][3].powi(2)) /
            (c::<T>(4.0) * g[3][3] * (-g[2][3].powi(2) + g[2][2] * g[3][3]))
    };
    b[0][2][3] = {
        (dg[3][3][3] * g[0][3] * g[2][2] * g[2][3] - dg[3][3][3] * g[0][2] * g[2][3].powi(2) -
            c::<T>(2.0) * dg[3][2][3] * g[0][3] * g[2][2] * g[3][3] + c::<T>(2.0) * dg[3][2][3]
            * g[0][2] * g[2][3] * g[3][3] + dg[3][2][2] * g[0][3] * g[2][3] * g[3][3] +
            dg[0][2][3] * g[2][3].powi(2) * g[3][3] - dg[2][0][3] * g[2][3].powi(2) * g[3][3] -
            dg[3][0][2] * g[2][3].powi(2) * g[3][3] - dg[3][2][2] * g[0][2] * g[3][3].powi(2) -
            dg[0][2][3] * g[2][2] * g[3][3].powi(2) + dg[2][0][3] * g[2][2] * g[3][3].powi(2) +
            dg[3][0][2] * g[2][2] * g[3][3].powi(2)) / (c::<T>(4.0) * g[3][3] *
            (-g[2][3].powi(2) + g[2][2] * g[3][3]))
    };
    b[0][3][0] = {
        (-(dg[0][3][3] * g[0][3]) + dg[3][0][0] * g[3][3]) / (c::<T>(4.0) * g[3][3])
    };
    b[0][3][1] = {
        (-(dg[1][3][3] * g[0][3]) - dg[0][1][3] * g[3][3] + dg[1][0][3] * g[3][3] + dg[3][0][1]
            * g[3][3]) / (c::<T>(4.0) * g[3][3])
    };
    b[0][3][2] = {
        (-(dg[2][3][3] * g[0][3]) - dg[0][2][3] * g[3][3] + dg[2][0][3] * g[3][3] + dg[3][0][2]
            * g[3][3]) / (c::<T>(4.0) * g[3][3])
    };
    b[0][3][3] = {
        (-(dg[3][3][3] * g[0][3]) - dg[0][3][3] * g[3][3] + c::<T>(2.0) * dg[3][0][3] * g[3][3])
            / (c::<T>(4.0) * g[3][3])
    };
    b[1][2][0] = {
        (-(dg[0][3][3] * g[1][3] * g[2][2] * g[2][3]) + dg[0][3][3] * g[1][2] * g[2][3].powi(2)
            + c::<T>(2.0) * dg[0][2][3] * g[1][3] * g[2][2] * g[3][3] - c::<T>(2.0) *
            dg[0][2][3] * g[1][2] * g[2][3] * g[3][3] - dg[0][2][2] * g[1][3] * g[2][3] *
            g[3][3] + dg[0][1][2] * g[2][3].powi(2) * g[3][3] - dg[1][0][2] * g[2][3].powi(2) *
            g[3][3] + dg[2][0][1] * g[2][3].powi(2) * g[3][3] + dg[0][2][2] * g[1][2] *
            g[3][3].powi(2) - dg[0][1][2] * g[2][2] * g[3][3].powi(2) + dg[1][0][2] * g[2][2] *
            g[3][3].powi(2) - dg[2][0][1] * g[2][2] * g[3][3].powi(2)) / (c::<T>(4.0) * g[3][3]
            * (g[2][3].powi(2) - g[2][2] * g[3][3]))
    };
    b[1][2][1] = {
        (-(dg[1][3][3] * g[1][3] * g[2][2] * g[2][3]) + dg[1][3][3] * g[1][2] * g[2][3].powi(2)
            + c::<T>(2.0) * dg[1][2][3] * g[1][3] * g[2][2] * g[3][3] - c::<T>(2.0) *
            dg[1][2][3] * g[1][2] * g[2][3] * g[3][3] - dg[1][2][2] * g[1][3] * g[2][3] *
            g[3][3] + dg[2][1][1] * g[2][3].powi(2) * g[3][3] + dg[1][2][2] * g[1][2] *
            g[3][3].powi(2) - dg[2][1][1] * g[2][2] * g[3][3].powi(2)) / (c::<T>(4.0) * g[3][3]
            * (g[2][3].powi(2) - g[2][2] * g[3][3]))
    };
    b[1][2][2] = {
        (-(dg[2][3][3] * g[1][3] * g[2][2] * g[2][3]) + dg[2][3][3] * g[1][2] * g[2][3].powi(2)
            + c::<T>(2.0) * dg[2][2][3] * g[1][3] * g[2][2] * g[3][3] - c::<T>(2.0) *
            dg[2][2][3] * g[1][2] * g[2][3] * g[3][3] - dg[2][2][2] * g[1][3] * g[2][3] *
            g[3][3] - dg[1][2][2] * g[2][3].powi(2) * g[3][3] + c::<T>(2.0) * dg[2][1][2] *
            g[2][3].powi(2) * g[3][3] + dg[2][2][2] * g[1][2] * g[3][3].powi(2) + dg[1][2][2] *
            g[2][2] * g[3][3].powi(2) - c::<T>(2.0) * dg[2][1][2] * g[2][2] * g[3][3].powi(2)) /
            (c::<T>(4.0) * g[3][3] * (g[2][3].powi(2) - g[2][2] * g[3][3]))
    };
    b[1][2][3] = {
        (-(dg[3][3][3] * g[1][3] * g[2][2] * g[2][3]) + dg[3][3][3] * g[1][2] * g[2][3].powi(2)
            + c::<T>(2.0) * dg[3][2][3] * g[1][3] * g[2][2] * g[3][3] - c::<T>(2.0) *
            dg[3][2][3] * g[1][2] * g[2][3] * g[3][3] - dg[3][2][2] * g[1][3] * g[2][3] *
            g[3][3] - dg[1][2][3] * g[2][3].powi(2) * g[3][3] + dg[2][1][3] * g[2][3].powi(2) *
            g[3][3] + dg[3][1][2] * g[2][3].powi(2) * g[3][3] + dg[3][2][2] * g[1][2] *
            g[3][3].powi(2) + dg[1][2][3] * g[2][2] * g[3][3].powi(2) - dg[2][1][3] * g[2][2] *
            g[3][3].powi(2) - dg[3][1][2] * g[2][2] * g[3][3].powi(2)) / (c::<T>(4.0) * g[3][3]
            * (g[2][3].powi(2) - g[2][2] * g[3][3]))
    };
    b[1][3][0] = {
        (-(dg[0][3][3] * g[1][3]) + dg[0][1][3] * g[3][3] - dg[1][0][3] * g[3][3] + dg[3][0][1]
            * g[3][3]) / (c::<T>(4.0) * g[3][3])
    };
    b[1][3][1] = {
        (-(dg[1][3][3] * g[1][3]) + dg[3][1][1] * g[3][3]) / (c::<T>(4.0) * g[3][3])
    };
    b[1][3][2] = {
        (-(dg[2][3][3] * g[1][3]) - dg[1][2][3] * g[3][3] + dg[2][1][3] * g[3][3] + dg[3][1][2]
            * g[3][3]) / (c::<T>(4.0) * g[3][3])
    };
    b[1][3][3] = {
        (-(dg[3][3][3] * g[1][3]) - dg[1][3][3] * g[3][3] + c::<T>(2.0) * dg[3][1][3] * g[3][3])
            / (c::<T>(4.0) * g[3][3])
    };
    b[2][3][0] = {
        (-(dg[0][3][3] * g[2][3]) + dg[0][2][3] * g[3][3] - dg[2][0][3] * g[3][3] + dg[3][0][2]
            * g[3][3]) / (c::<T>(4.0) * g[3][3])
    };
    b[2][3][1] = {
        (-(dg[1][3][3] * g[2][3]) + dg[1][2][3] * g[3][3] - dg[2][1][3] * g[3][3] + dg[3][1][2]
            * g[3][3]) / (c::<T>(4.0) * g[3][3])
    };
    b[2][3][2] = {
        (-(dg[2][3][3] * g[2][3]) + dg[3][2][2] * g[3][3]) / (c::<T>(4.0) * g[3][3])
    };
    b[2][3][3] = {
        (-(dg[3][3][3] * g[2][3]) - dg[2][3][3] * g[3][3] + c::<T>(2.0) * dg[3][2][3] * g[3][3])
            / (c::<T>(4.0) * g[3][3])
    };
    fill_antisym(&mut b, 4);
    b
}

/// Temporal gauge: `g_11 = 1`, `g_12 = g_13 = g_14 = 0`.
pub fn b_temporal4<T: Scalar>(g: &[[T; 4]; 4], dg: &[[[T; 4]; 4]; 4]) -> [[[T; 4]; 4]; 4] {
    let mut b = [[[T::zero(); 4]; 4]; 4];
    b[0][1][0] = {
        c::<T>(0.0)
    };
    b[0][1][1] = {
        -dg[0][1][1] / c::<T>(4.0)
    };
    b[0][1][2] = {
        -dg[0][1][2] / c::<T>(4.0)
    };
    b[0][1][3] = {
        -dg[0][1][3] / c::<T>(4.0)
    };
    b[0][2][0] = {
        c::<T>(0.0)
    };
    b[0][2][1] = {
        -dg[0][1][2] / c::<T>(4.0)
    };
    b[0][2][2] = {
        -dg[0][2][2] / c::<T>(4.0)
    };
    b[0][2][3] = {
        -dg[0][2][3] / c::<T>(4.0)
    };
    b[0][3][0] = {
        c::<T>(0.0)
    };
    b[0][3][1] = {
        -dg[0][1][3] / c::<T>(4.0)
    };
    b[0][3][2] = {
        -dg[0][2][3] / c::<T>(4.0)
    };
    b[0][3][3] = {
        -dg[0][3][3] / c::<T>(4.0)
    };
    b[1][2][0] = {
        -(dg[0][3][3] * g[1][3] * g[2][2] * g[2][3] - dg[0][3][3] * g[1][2] * g[2][3].powi(2) -
            c::<T>(2.0) * dg[0][2][3] * g[1][3] * g[2][2] * g[3][3] + c::<T>(2.0) * dg[0][2][3]
            * g[1][2] * g[2][3] * g[3][3] + dg[0][2][2] * g[1][3] * g[2][3] * g[3][3] -
            dg[0][1][2] * g[2][3].powi(2) * g[3][3] - dg[0][2][2] * g[1][2] * g[3][3].powi(2) +
            dg[0][1][2] * g[2][2] * g[3][3].powi(2)) / (c::<T>(4.0) * g[3][3] * (g[2][3].powi(2)
            - g[2][2] * g[3][3]))
    };
    b[1][2][1] = {
        -(dg[1][3][3] * g[1][3] * g[2][2] * g[2][3] - dg[1][3][3] * g[1][2] * g[2][3].powi(2) -
            c::<T>(2.0) * dg[1][2][3] * g[1][3] * g[2][2] * g[3][3] + c::<T>(2.0) * dg[1][2][3]
            * g[1][2] * g[2][3] * g[3][3] + dg[1][2][2] * g[1][3] * g[2][3] * g[3][3] -
            dg[2][1][1] * g[2][3].powi(2) * g[3][3] - dg[1][2][2] * g[1][2] * g[3][3].powi(2) +
            dg[2][1][1] * g[2][2] * g[3][3].powi(2)) / (c::<T>(4.0) * g[3][3] * (g[2][3].powi(2)
            - g[2][2] * g[3][3]))
    };
    b[1][2][2] = {
        -((dg[2][3][3] * g[1][3] * g[2][2] * g[2][3] - dg[2][3][3] * g[1][2] * g[2][3].powi(2) -
            c::<T>(2.0) * dg[2][2][3] * g[1][3] * g[2][2] * g[3][3] + c::<T>(2.0) * dg[2][2][3]
            * g[1][2] * g[2][3] * g[3][3] + dg[2][2][2] * g[1][3] * g[2][3] * g[3][3] +
            dg[1][2][2] * g[2][3].powi(2) * g[3][3] - c::<T>(2.0) * dg[2][1][2] *
            g[2][3].powi(2) * g[3][3] - dg[2][2][2] * g[1][2] * g[3][3].powi(2) - dg[1][2][2] *
            g[2][2] * g[3][3].powi(2) + c::<T>(2.0) * dg[2][1][2] * g[2][2] * g[3][3].powi(2)) /
            (c::<T>(4.0) * g[2][3].powi(2) * g[3][3] - c::<T>(4.0) * g[2][2] * g[3][3].powi(2)))
    };
    b[1][2][3] = {
        -((dg[3][3][3] * g[1][3] * g[2][2] * g[2][3] - dg[3][3][3] * g[1][2] * g[2][3].powi(2) -
            c::<T>(2.0) * dg[3][2][3] * g[1][3] * g[2][2] * g[3][3] + c::<T>(2.0) * dg[3][2][3]
            * g[1][2] * g[2][3] * g[3][3] + dg[3][2][2] * g[1][3] * g[2][3] * g[3][3] +
            dg[1][2][3] * g[2][3].powi(2) * g[3][3] - dg[2][1][3] * g[2][3].powi(2) * g[3][3] -
            dg[3][1][2] * g[2][3].powi(2) * g[3][3] - dg[3][2][2] * g[1][2] * g[3][3].powi(2) -
            dg[1][2][3] * g[2][2] * g[3][3].powi(2) + dg[2][1][3] * g[2][2] * g[3][3].powi(2) +
            dg[3][1][2] * g[2][2] * g[3][3].powi(2)) / (c::<T>(4.0) * g[2][3].powi(2) * g[3][3]
            - c::<T>(4.0) * g[2][2] * g[3][3].powi(2)))
    };
    b[1][3][0] = {
        (-(dg[0][3][3] * g[1][3]) + dg[0][1][3] * g[3][3]) / (c::<T>(4.0) * g[3][3])
    };
    b[1][3][1] = {
        (-(dg[1][3][3] * g[1][3]) + dg[3][1][1] * g[3][3]) / (c::<T>(4.0) * g[3][3])
    };
    b[1][3][2] = {
        (-(dg[2][3][3] * g[1][3]) - dg[1][2][3] * g[3][3] + dg[2][1][3] * g[3][3] + dg[3][1][2]
            * g[3][3]) / (c::<T>(4.0) * g[3][3])
    };
    b[1][3][3] = {
        (-(dg[3][3][3] * g[1][3]) - dg[1][3][3] * g[3][3] + c::<T>(2.0) * dg[3][1][3] * g[3][3])
            / (c::<T>(4.0) * g[3][3])
    };
    b[2][3][0] = {
        -(dg[0][3][3] * g[2][3] - dg[0][2][3] * g[3][3]) / (c::<T>(4.0) * g[3][3])
    };
    b[2][3][1] = {
        -(dg[1][3][3] * g[2][3] - dg[1][2][3] * g[3][3] + dg[2][1][3] * g[3][3] - dg[3][1][2] *
            g[3][3]) / (c::<T>(4.0) * g[3][3])
    };
    b[2][3][2] = {
        -(dg[2][3][3] * g[2][3] - dg[3][2][2] * g[3][3]) / (c::<T>(4.0) * g[3][3])
    };
    b[2][3][3] = {
        -(dg[3][3][3] * g[2][3] + dg[2][3][3] * g[3][3] - c::<T>(2.0) * dg[3][2][3] * g[3][3]) /
            (c::<T>(4.0) * g[3][3])
    };
    fill_antisym(&mut b, 4);
    b
}

/// Three-dimensional chart.
pub fn b_dim3<T: Scalar>(g: &[[T; 4]; 4], dg: &[[[T; 4]; 4]; 4]) -> [[[T; 4]; 4]; 4] {
    let mut b = [[[T::zero(); 4]; 4]; 4];
    b[0][1][0] = {
        (dg[0][2][2] * g[0][2] * g[1][1] * g[1][2] - dg[0][2][2] * g[0][1] * g[1][2].powi(2) -
            c::<T>(2.0) * dg[0][1][2] * g[0][2] * g[1][1] * g[2][2] + c::<T>(2.0) * dg[0][1][2]
            * g[0][1] * g[1][2] * g[2][2] + dg[0][1][1] * g[0][2] * g[1][2] * g[2][2] -
            dg[1][0][0] * g[1][2].powi(2) * g[2][2] - dg[0][1][1] * g[0][1] * g[2][2].powi(2) +
            dg[1][0][0] * g[1][1] * g[2][2].powi(2)) / (c::<T>(4.0) * g[2][2] *
            (-g[1][2].powi(2) + g[1][1] * g[2][2]))
    };
    b[0][1][1] = {
        (dg[1][2][2] * g[0][2] * g[1][1] * g[1][2] - dg[1][2][2] * g[0][1] * g[1][2].powi(2) -
            c::<T>(2.0) * dg[1][1][2] * g[0][2] * g[1][1] * g[2][2] + c::<T>(2.0) * dg[1][1][2]
            * g[0][1] * g[1][2] * g[2][2] + dg[1][1][1] * g[0][2] * g[1][2] * g[2][2] +
            dg[0][1][1] * g[1][2].powi(2) * g[2][2] - c::<T>(2.0) * dg[1][0][1] *
            g[1][2].powi(2) * g[2][2] - dg[1][1][1] * g[0][1] * g[2][2].powi(2) - dg[0][1][1] *
            g[1][1] * g[2][2].powi(2) + c::<T>(2.0) * dg[1][0][1] * g[1][1] * g[2][2].powi(2)) /
            (c::<T>(4.0) * g[2][2] * (-g[1][2].powi(2) + g[1][1] * g[2][2]))
    };
    b[0][1][2] = {
        (dg[2][2][2] * g[0][2] * g[1][1] * g[1][2] - dg[2][2][2] * g[0][1] * g[1][2].powi(2) -
            c::<T>(2.0) * dg[2][1][2] * g[0][2] * g[1][1] * g[2][2] + c::<T>(2.0) * dg[2][1][2]
            * g[0][1] * g[1][2] * g[2][2] + dg[2][1][1] * g[0][2] * g[1][2] * g[2][2] +
            dg[0][1][2] * g[1][2].powi(2) * g[2][2] - dg[1][0][2] * g[1][2].powi(2) * g[2][2] -
            dg[2][0][1] * g[1][2].powi(2) * g[2][2] - dg[2][1][1] * g[0][1] * g[2][2].powi(2) -
            dg[0][1][2] * g[1][1] * g[2][2].powi(2) + dg[1][0][2] * g[1][1] * g[2][2].powi(2) +
            dg[2][0][1] * g[1][1] * g[2][2].powi(2)) / (c::<T>(4.0) * g[2][2] *
            (-g[1][2].powi(2) + g[1][1] * g[2][2]))
    };
    b[0][2][0] = {
        (-(dg[0][2][2] * g[0][2]) + dg[2][0][0] * g[2][2]) / (c::<T>(4.0) * g[2][2])
    };
    b[0][2][1] = {
        (-(dg[1][2][2] * g[0][2]) - dg[0][1][2] * g[2][2] + dg[1][0][2] * g[2][2] + dg[2][0][1]
            * g[2][2]) / (c::<T>(4.0) * g[2][2])
    };
    b[0][2][2] = {
        (-(dg[2][2][2] * g[0][2]) - dg[0][2][2] * g[2][2] + c::<T>(2.0) * dg[2][0][2] * g[2][2])
            / (c::<T>(4.0) * g[2][2])
    };
    b[1][2][0] = {
        -(dg[0][2][2] * g[1][2] - dg[0][1][2] * g[2][2] + dg[1][0][2] * g[2][2] - dg[2][0][1] *
            g[2][2]) / (c::<T>(4.0) * g[2][2])
    };
    b[1][2][1] = {
        -(dg[1][2][2] * g[1][2] - dg[2][1][1] * g[2][2]) / (c::<T>(4.0) * g[2][2])
    };
    b[1][2][2] = {
        -(dg[2][2][2] * g[1][2] + dg[1][2][2] * g[2][2] - c::<T>(2.0) * dg[2][1][2] * g[2][2]) /
            (c::<T>(4.0) * g[2][2])
    };
    fill_antisym(&mut b, 3);
    b
}
