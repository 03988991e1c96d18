//! Frozen small-amplitude Stokes-wave expansions (gravity normalized to 1)
//! and the exact residual self-checks of the steady water-wave system.

use crate::scalar::{Coeff, Cpx, Rat};
use crate::series::{dn_expanded, GradedSeries, TrigPoly};

/// Frozen expansions of the Stokes wave, its trace potential, the wave speed
/// and the Riemann-stretch deviation zeta - x.
#[derive(Clone, Debug)]
pub struct StokesExpansion {
    /// eta orders 1..4 (even, zero mean)
    pub eta: GradedSeries<Rat>,
    /// psi orders 1..4 (odd)
    pub psi: GradedSeries<Rat>,
    /// wave speed as coefficients of eps^0, eps^2
    pub c0: Rat,
    pub c2: Rat,
    /// zeta - x, orders 1..3 (odd)
    pub zeta_minus_x: GradedSeries<Rat>,
}

impl StokesExpansion {
    pub fn eta_truncated(&self, cutoff: u32) -> GradedSeries<Rat> {
        truncate(&self.eta, cutoff)
    }

    pub fn psi_truncated(&self, cutoff: u32) -> GradedSeries<Rat> {
        truncate(&self.psi, cutoff)
    }

    /// c(eps) = c0 + c2 eps^2 as a graded series of constants.
    pub fn speed_series(&self, cutoff: u32) -> GradedSeries<Rat> {
        let mut s = GradedSeries::zero(cutoff);
        s.set((0, 0), TrigPoly::constant(self.c0.clone()));
        if cutoff >= 2 {
            s.set((2, 0), TrigPoly::constant(self.c2.clone()));
        }
        s
    }
}

fn truncate(s: &GradedSeries<Rat>, cutoff: u32) -> GradedSeries<Rat> {
    let mut out = GradedSeries::zero(cutoff);
    for (k, p) in s.iter() {
        if k.0 + k.1 <= cutoff {
            out.set(*k, p.clone());
        }
    }
    out
}

fn rp(num: i64, den: i64) -> Rat {
    Coeff::from_ratio(num, den)
}

fn cosw(j: i64, num: i64, den: i64) -> TrigPoly<Rat> {
    TrigPoly::cos(j).scale(&Cpx::real(rp(num, den)))
}

fn sinw(j: i64, num: i64, den: i64) -> TrigPoly<Rat> {
    TrigPoly::sin(j).scale(&Cpx::real(rp(num, den)))
}

/// The frozen rational series:
///   eta = eps cos x + 1/2 eps^2 cos 2x + eps^3 (1/8 cos x + 3/8 cos 3x)
///         + eps^4 (5/6 cos 2x + 1/3 cos 4x)
///   psi = eps sin x + 1/2 eps^2 sin 2x + eps^3 (3/8 sin 3x - 1/8 sin x)
///         + eps^4 (5/12 sin 2x + 1/3 sin 4x)
///   c   = 1 + 1/2 eps^2
///   zeta - x = eps sin x + eps^2 sin 2x + eps^3 (-sin x + 3/2 sin 3x)
pub fn stokes_profiles() -> StokesExpansion {
    let mut eta = GradedSeries::zero(4);
    eta.set((1, 0), TrigPoly::cos(1));
    eta.set((2, 0), cosw(2, 1, 2));
    eta.set((3, 0), cosw(1, 1, 8).add(&cosw(3, 3, 8)));
    eta.set((4, 0), cosw(2, 5, 6).add(&cosw(4, 1, 3)));

    let mut psi = GradedSeries::zero(4);
    psi.set((1, 0), TrigPoly::sin(1));
    psi.set((2, 0), sinw(2, 1, 2));
    psi.set((3, 0), sinw(3, 3, 8).add(&sinw(1, -1, 8)));
    psi.set((4, 0), sinw(2, 5, 12).add(&sinw(4, 1, 3)));

    let mut zeta = GradedSeries::zero(3);
    zeta.set((1, 0), TrigPoly::sin(1));
    zeta.set((2, 0), TrigPoly::sin(2));
    zeta.set((3, 0), TrigPoly::sin(1).neg().add(&sinw(3, 3, 2)));

    StokesExpansion {
        eta,
        psi,
        c0: rp(1, 1),
        c2: rp(1, 2),
        zeta_minus_x: zeta,
    }
}

/// Residual report: maximum |coefficient| of the two steady-wave equations at
/// each eps order (exact rationals, so "zero" means identically zero).
#[derive(Clone, Debug)]
pub struct ResidualReport {
    /// per order 1..=order: (kinematic residual, Bernoulli residual)
    pub per_order: Vec<(f64, f64)>,
}

impl ResidualReport {
    pub fn max(&self) -> f64 {
        self.per_order
            .iter()
            .map(|(a, b)| a.max(*b))
            .fold(0.0, f64::max)
    }
}

/// Form the steady-wave residuals order by order through `order <= 3` using
/// the flat-surface operator expansion G(0), G'(0), G''(0) on the frozen
/// series, entirely in rational arithmetic:
///   F1 = c eta_x + G(eta) psi
///   F2 = c psi_x - 1/2 psi_x^2 + 1/2 (G(eta) psi + psi_x eta_x)^2 / (1 + eta_x^2) - eta
pub fn check_steady_residuals(order: u32) -> ResidualReport {
    assert!(
        (1..=3).contains(&order),
        "residual check supports orders 1..=3"
    );
    let st = stokes_profiles();
    let cutoff = order;
    let eta = st.eta_truncated(cutoff);
    let psi = st.psi_truncated(cutoff);
    let c = st.speed_series(cutoff);

    let g = dn_expanded(&eta, &psi);
    let ex = eta.dx();
    let px = psi.dx();
    let half = Cpx::real(rp(1, 2));

    let f1 = c.mul(&ex).add(&g);

    let flux = g.add(&px.mul(&ex));
    let denom = GradedSeries::one(cutoff).add(&ex.mul(&ex));
    let f2 = c
        .mul(&px)
        .sub(&px.mul(&px).scale(&half))
        .add(
            &flux
                .mul(&flux)
                .mul(&denom.recip_one_plus().expect("unit leading term"))
                .scale(&half),
        )
        .sub(&eta);

    let mut per_order = Vec::new();
    for m in 1..=order {
        per_order.push((f1.term(m, 0).max_abs(), f2.term(m, 0).max_abs()));
    }
    ResidualReport { per_order }
}
