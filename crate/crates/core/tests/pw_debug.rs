#[test]
fn pw_debug() {
    use kahler_core::clifford::{cl_mul, Form, ScalarKind};
    use kahler_core::num::Cplx;
    use kahler_core::geometry::{metric_jet, MetricSpec};
    use nalgebra::DMatrix;
    let jet = metric_jet(&MetricSpec::minkowski(), &[0.0; 4]).unwrap();
    let md = jet.md0();
    let k = [0.8f64, 0.8, 0.0, 0.0];
    let mut kslash = Form::<f64>::zero(4, ScalarKind::Real);
    for mu in 0..4 { kslash = kslash + Form::dx(4, mu).scale_f64(k[mu]); }
    let masks: Vec<usize> = (0..16).collect();
    let dim = 2 * masks.len();
    let mut mat = DMatrix::<f64>::zeros(dim, dim);
    for (col, &mask) in masks.iter().enumerate() {
        for (part, unit) in [Cplx::one(), Cplx::i()].into_iter().enumerate() {
            let mut basis = Form::<f64>::zero(4, ScalarKind::Complex);
            basis.set_coeff(mask, unit);
            let image = cl_mul(&kslash, &basis, &md);
            for (row, &rm) in masks.iter().enumerate() {
                mat[(2 * row, 2 * col + part)] = image.coeff(rm).re;
                mat[(2 * row + 1, 2 * col + part)] = image.coeff(rm).im;
            }
        }
    }
    let svd = mat.clone().svd(true, true);
    let smax = svd.singular_values.iter().fold(0.0f64, |m, &s| m.max(s));
    let null: Vec<usize> = (0..svd.singular_values.len()).filter(|&i| svd.singular_values[i] < 1e-10 * (1.0 + smax)).collect();
    println!("nulls: {}", null.len());
    let v_t = svd.v_t.as_ref().unwrap();
    let row = null[0];
    let mut phi = Form::<f64>::zero(4, ScalarKind::Complex);
    for (col, &mask) in masks.iter().enumerate() {
        phi.set_coeff(mask, Cplx::from_f64s(v_t[(row, 2 * col)], v_t[(row, 2 * col + 1)]));
    }
    println!("|phi| = {}", phi.max_abs());
    println!("|kslash phi| = {:e}", cl_mul(&kslash, &phi, &md).max_abs());
    // also try column convention
    let mut phi2 = Form::<f64>::zero(4, ScalarKind::Complex);
    for (col, &mask) in masks.iter().enumerate() {
        phi2.set_coeff(mask, Cplx::from_f64s(v_t[(2 * col, row)], v_t[(2 * col + 1, row)]));
    }
    println!("|kslash phi2| = {:e}", cl_mul(&kslash, &phi2, &md).max_abs());
}
