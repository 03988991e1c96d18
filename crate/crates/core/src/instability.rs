//! Discriminant, unstable eigenvalue pair, detuning window, and the isola
//! ellipse asymptotics.

use crate::error::{Error, Result};
use crate::kato::CoeffTable;
use num_complex::Complex64;

/// Delta(eps, delta) = -(A - C)^2 + 4 B^2 from the truncated expansions.
pub fn discriminant(eps: f64, delta: f64, table: &CoeffTable) -> f64 {
    let (a, b, c) = table.abc(eps, delta);
    -(a - c) * (a - c) + 4.0 * b * b
}

/// lambda_{+/-} = i (sigma + (A + C)/2) +/- sqrt(Delta)/2, taking the real
/// root for Delta >= 0 and +i sqrt(-Delta) for Delta < 0.
pub fn eigenvalues(eps: f64, delta: f64, sigma: f64, table: &CoeffTable) -> (Complex64, Complex64) {
    let (a, b, c) = table.abc(eps, delta);
    let disc = -(a - c) * (a - c) + 4.0 * b * b;
    let mid = Complex64::new(0.0, sigma + 0.5 * (a + c));
    let half_root = if disc >= 0.0 {
        Complex64::new(0.5 * disc.sqrt(), 0.0)
    } else {
        Complex64::new(0.0, 0.5 * (-disc).sqrt())
    };
    (mid + half_root, mid - half_root)
}

/// Detuning window and ellipse geometry of the unstable isola.
#[derive(Clone, Copy, Debug)]
pub struct IsolaParams {
    pub kappa0: f64,
    pub kappa1: f64,
    /// coefficient of eps^2 in the drift of the isola center along the
    /// imaginary axis
    pub center_drift: f64,
    /// coefficient of eps^3 of the semi-axis along the imaginary direction
    pub semi_major: f64,
    /// coefficient of eps^3 of the semi-axis along the real direction
    pub semi_minor: f64,
}

pub fn isola_params(table: &CoeffTable) -> Result<IsolaParams> {
    let da = table.a01 - table.c01;
    if da.abs() < 1e-6 {
        return Err(Error::Consistency(format!(
            "degenerate coefficient table: |a01 - c01| = {:.3e}",
            da.abs()
        )));
    }
    Ok(IsolaParams {
        kappa0: -(table.a20 - table.c20) / da,
        kappa1: 2.0 * table.b30.abs() / da.abs(),
        center_drift: (table.a01 * table.c20 - table.a20 * table.c01) / da,
        semi_major: (table.b30 * (table.a01 + table.c01) / da).abs(),
        semi_minor: table.b30.abs(),
    })
}

/// One sampled point of the isola sweep.
#[derive(Clone, Copy, Debug)]
pub struct IsolaPoint {
    pub theta: f64,
    pub delta: f64,
    pub lambda_plus: Complex64,
    pub lambda_minus: Complex64,
}

/// Sweep the detuning theta over a uniform grid in (-kappa1, kappa1), with
/// delta = kappa0 eps^2 + theta eps^3.
pub fn isola_points(
    eps: f64,
    sigma: f64,
    table: &CoeffTable,
    n_theta: usize,
) -> Result<Vec<IsolaPoint>> {
    if !(eps > 0.0 && eps <= 0.1) {
        return Err(Error::Domain(format!(
            "isola sweep needs eps in (0, 0.1], got {eps}"
        )));
    }
    if n_theta < 2 {
        return Err(Error::Domain("need at least two theta samples".into()));
    }
    let p = isola_params(table)?;
    let theta_max = p.kappa1 * (1.0 - 1e-9);
    let mut out = Vec::with_capacity(n_theta);
    for i in 0..n_theta {
        let theta = -theta_max + 2.0 * theta_max * i as f64 / (n_theta - 1) as f64;
        let delta = p.kappa0 * eps * eps + theta * eps.powi(3);
        let (lp, lm) = eigenvalues(eps, delta, sigma, table);
        out.push(IsolaPoint {
            theta,
            delta,
            lambda_plus: lp,
            lambda_minus: lm,
        });
    }
    Ok(out)
}

/// Constants of the rescaled ellipse
/// x_coeff lambda_r^2 / eps^6 + y_coeff (lambda_i - sigma - drift eps^2)^2 / eps^6 = 1.
#[derive(Clone, Copy, Debug)]
pub struct EllipseConstants {
    pub x_coeff: f64,
    pub y_coeff: f64,
    pub center_drift: f64,
}

pub fn ellipse_constants(table: &CoeffTable) -> Result<EllipseConstants> {
    let p = isola_params(table)?;
    Ok(EllipseConstants {
        x_coeff: 1.0 / (p.semi_minor * p.semi_minor),
        y_coeff: 1.0 / (p.semi_major * p.semi_major),
        center_drift: p.center_drift,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Reference coefficient values (matched independently by the spectral
    /// pipeline; used here to unit-test the closed-form arithmetic).
    pub(crate) fn reference_table() -> CoeffTable {
        CoeffTable {
            a01: -0.0931912038,
            a20: -0.4972909772,
            a02: 0.0093753194,
            a21: -0.0081152843,
            a03: -0.0014671778,
            b30: -0.4947603203,
            c01: 0.0598478709,
            c20: 1.08625864892,
            c02: -0.0033359912,
            c21: -0.0002576496,
            c03: 0.0002892588,
            max_forbidden: 0.0,
        }
    }

    #[test]
    fn pure_delta_discriminant_is_nonpositive() {
        let t = reference_table();
        for i in 0..41 {
            let delta = -0.1 + 0.005 * i as f64;
            assert!(discriminant(0.0, delta, &t) <= 0.0);
        }
    }

    #[test]
    fn window_interior_is_unstable() {
        let t = reference_table();
        let p = isola_params(&t).unwrap();
        let eps = 0.01;
        assert!(discriminant(eps, p.kappa0 * eps * eps, &t) > 0.0);
    }

    #[test]
    fn discriminant_positive_through_ninety_percent_of_window() {
        let t = reference_table();
        let sigma = -0.3894887313;
        let p = isola_params(&t).unwrap();
        for &eps in &[0.005, 0.01, 0.02] {
            for i in 0..=40 {
                let theta = 0.9 * p.kappa1 * (2.0 * i as f64 / 40.0 - 1.0);
                let delta = p.kappa0 * eps * eps + theta * eps.powi(3);
                assert!(
                    discriminant(eps, delta, &t) > 0.0,
                    "eps = {eps}, theta = {theta}"
                );
                // eigenvalue-pair consistency: purely imaginary sum, real
                // product matching the 2x2 determinant
                let (lp, lm) = eigenvalues(eps, delta, sigma, &t);
                assert!((lp + lm).re.abs() < 1e-14);
                let (a, b, c) = t.abc(eps, delta);
                let det = Complex64::new(0.0, sigma + a) * Complex64::new(0.0, sigma + c)
                    - Complex64::new(b * b, 0.0);
                assert!((lp * lm - det).norm() < 1e-13);
            }
        }
    }

    #[test]
    fn renormalized_discriminant_limit() {
        // Delta(eps, kappa0 eps^2 + theta eps^3) / eps^6 -> 4 b30^2 - (a01-c01)^2 theta^2
        let t = reference_table();
        let p = isola_params(&t).unwrap();
        let theta = 0.5 * p.kappa1;
        let want = 4.0 * t.b30 * t.b30 - (t.a01 - t.c01).powi(2) * theta * theta;
        let mut prev_err = f64::INFINITY;
        for &eps in &[0.02, 0.01, 0.005] {
            let delta = p.kappa0 * eps * eps + theta * eps.powi(3);
            let got = discriminant(eps, delta, &t) / eps.powi(6);
            let err = (got - want).abs();
            assert!(
                err < prev_err,
                "limit not improving: {err} after {prev_err}"
            );
            prev_err = err;
        }
    }

    #[test]
    fn eigenvalue_structure() {
        let t = reference_table();
        let sigma = -0.3894887313;
        let (lp, lm) = eigenvalues(0.0, 0.0, sigma, &t);
        assert_eq!(lp, Complex64::new(0.0, sigma));
        assert_eq!(lm, lp);
        // sum purely imaginary
        let (lp, lm) = eigenvalues(0.03, 0.002, sigma, &t);
        assert!((lp + lm).re.abs() < 1e-14);
        // product matches det(L): (i(sigma+A))(i(sigma+C)) - (iB)(-iB)
        let (a, b, c) = t.abc(0.03, 0.002);
        let want = Complex64::new(0.0, sigma + a) * Complex64::new(0.0, sigma + c)
            - Complex64::new(b * b, 0.0);
        assert!((lp * lm - want).norm() < 1e-14);
    }

    #[test]
    fn real_part_scales_like_eps_cubed() {
        let t = reference_table();
        let sigma = -0.3894887313;
        let p = isola_params(&t).unwrap();
        let re_at = |eps: f64| {
            let delta = p.kappa0 * eps * eps;
            eigenvalues(eps, delta, sigma, &t).0.re
        };
        let epses = [0.02, 0.01, 0.005];
        let xs: Vec<f64> = epses.iter().map(|e: &f64| e.ln()).collect();
        let ys: Vec<f64> = epses.iter().map(|&e| re_at(e).ln()).collect();
        let n = xs.len() as f64;
        let xm = xs.iter().sum::<f64>() / n;
        let ym = ys.iter().sum::<f64>() / n;
        let slope = xs
            .iter()
            .zip(&ys)
            .map(|(x, y)| (x - xm) * (y - ym))
            .sum::<f64>()
            / xs.iter().map(|x| (x - xm) * (x - xm)).sum::<f64>();
        assert!((2.9..=3.1).contains(&slope), "slope {slope}");
    }

    #[test]
    fn isola_sweep_shape() {
        let t = reference_table();
        let sigma = -0.3894887313;
        let pts = isola_points(0.01, sigma, &t, 201).unwrap();
        assert_eq!(pts.len(), 201);
        // theta = 0 (middle point) is the widest at leading order; the grid
        // max may sit a step away from it through the O(eps^4) asymmetry
        let (argmax, widest) = pts
            .iter()
            .enumerate()
            .map(|(i, p)| (i, p.lambda_plus.re))
            .max_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
            .unwrap();
        assert!((argmax as i64 - 100).abs() <= 2, "argmax index {argmax}");
        assert!((pts[100].theta).abs() < 1e-12);
        assert!(pts[100].lambda_plus.re > widest * (1.0 - 1e-3));
        // endpoints close down at leading order as eps -> 0
        for eps in [0.02, 0.01] {
            let edge = isola_points(eps, sigma, &t, 3).unwrap()[0].lambda_plus.re;
            let mid = isola_points(eps, sigma, &t, 3).unwrap()[1].lambda_plus.re;
            assert!(edge < 0.05 * mid, "eps={eps}: edge {edge} vs mid {mid}");
        }
        assert!(isola_points(0.2, sigma, &t, 3).is_err());
    }

    #[test]
    fn ellipse_numbers() {
        let t = reference_table();
        let e = ellipse_constants(&t).unwrap();
        assert!((e.x_coeff - 4.085).abs() < 5e-4);
        assert!((e.y_coeff - 86.059).abs() < 5e-3);
        assert!((e.center_drift - 0.467).abs() < 5e-4);
        let p = isola_params(&t).unwrap();
        assert!((p.kappa0 - (-10.3473549)).abs() < 1e-6);
        assert!((p.kappa1 - 6.4658039).abs() < 1e-6);
    }

    #[test]
    fn points_lie_near_the_ellipse() {
        // max distance to the ellipse is O(eps^4): scaled distance stays bounded
        let t = reference_table();
        let sigma = -0.3894887313;
        let p = isola_params(&t).unwrap();
        let mut prev: Option<f64> = None;
        for &eps in &[0.02, 0.01, 0.005] {
            let pts = isola_points(eps, sigma, &t, 101).unwrap();
            let mut worst = 0.0f64;
            for pt in &pts {
                if pt.lambda_plus.re <= 0.0 {
                    continue;
                }
                let lr = pt.lambda_plus.re;
                let li = pt.lambda_plus.im;
                // implicit ellipse equation residual, rescaled to a distance
                let u = lr / (p.semi_minor * eps.powi(3));
                let v = (li - sigma - p.center_drift * eps * eps) / (p.semi_major * eps.powi(3));
                let resid = (u * u + v * v - 1.0).abs();
                // gradient magnitude ~ 2/semi-axis: distance ~ resid * eps^3 * axis / 2
                worst = worst.max(resid * eps.powi(3) * p.semi_minor.min(p.semi_major) / 2.0);
            }
            let scaled = worst / eps.powi(4);
            if let Some(pv) = prev {
                assert!(
                    scaled < 3.0 * pv,
                    "distance not O(eps^4): {scaled} after {pv}"
                );
            }
            prev = Some(scaled);
        }
    }

    #[test]
    fn degenerate_table_rejected() {
        let mut t = reference_table();
        t.c01 = t.a01;
        assert!(isola_params(&t).is_err());
    }
}
