//! Flattened Dirichlet-Neumann operator expansion: the exponential-sum ODE
//! hierarchy that produces the Fourier-multiplier tables R_0..R_3, the
//! closed-form coefficients the hierarchy is checked against, and the
//! beta-derivative tables R_{j,l} obtained by Cauchy-integral differentiation.

use crate::error::{Error, Result};
use num_complex::Complex64;
use rayon::prelude::*;
use std::collections::BTreeMap;

/// Rates equal up to rounding are merged; anything farther apart is kept
/// distinct. Physically distinct rates in the hierarchy can approach each
/// other like beta / k^2 as beta -> 0, so the tolerance must sit at the
/// floating-point scale (true collisions are caught by the resonant-forcing
/// guard before amplitudes can blow past it).
fn rates_equal(a: Complex64, b: Complex64) -> bool {
    (a - b).norm() < 1e-13 * (1.0 + a.norm().max(b.norm()))
}

/// Sum of decaying exponentials a_i e^{mu_i z} on z <= 0.
/// Rates have positive real part and are pairwise distinct (merged on push).
#[derive(Clone, Debug, Default)]
pub struct ExpSum {
    terms: Vec<(Complex64, Complex64)>,
}

impl ExpSum {
    pub fn new() -> Self {
        ExpSum { terms: Vec::new() }
    }

    pub fn single(amp: Complex64, rate: Complex64) -> Self {
        let mut s = Self::new();
        s.push(amp, rate);
        s
    }

    pub fn push(&mut self, amp: Complex64, rate: Complex64) {
        debug_assert!(rate.re > 0.0, "ExpSum rate must decay as z -> -infinity");
        if amp == Complex64::new(0.0, 0.0) {
            return;
        }
        for (a, mu) in self.terms.iter_mut() {
            if rates_equal(*mu, rate) {
                *a += amp;
                return;
            }
        }
        self.terms.push((amp, rate));
    }

    pub fn terms(&self) -> &[(Complex64, Complex64)] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (a, mu) in &o.terms {
            out.push(*a, *mu);
        }
        out
    }

    /// Multiply by c e^{d z}.
    pub fn shift_scale(&self, c: Complex64, d: f64) -> Self {
        let mut out = Self::new();
        for (a, mu) in &self.terms {
            out.push(c * a, mu + Complex64::new(d, 0.0));
        }
        out
    }

    /// Value at z = 0.
    pub fn at_zero(&self) -> Complex64 {
        self.terms.iter().map(|(a, _)| a).sum()
    }

    /// Value at a given z <= 0.
    pub fn eval(&self, z: f64) -> Complex64 {
        self.terms.iter().map(|(a, mu)| a * (mu * z).exp()).sum()
    }

    /// d/dz at z = 0.
    pub fn dz_at_zero(&self) -> Complex64 {
        self.terms.iter().map(|(a, mu)| a * mu).sum()
    }
}

/// Boundary condition at z = 0 for the decaying ODE solve.
#[derive(Clone, Copy, Debug)]
pub enum Boundary {
    /// P(0) = 0 (the hierarchy corrections)
    Zero,
    /// P(0) = v (v = 1 recovers the order-zero homogeneous profile)
    Value(Complex64),
}

/// Unique solution of  P'' - kappa2 P = forcing  that decays as z -> -infinity,
/// with the prescribed boundary value at z = 0. The particular amplitude at a
/// forcing rate mu is a / (mu^2 - kappa2); a homogeneous e^{sqrt(kappa2) z}
/// correction enforces the boundary condition.
pub fn solve_decaying_ode(
    kappa2: Complex64,
    forcing: &ExpSum,
    boundary: Boundary,
) -> Result<ExpSum> {
    let mut out = ExpSum::new();
    for (a, mu) in forcing.terms() {
        let den = mu * mu - kappa2;
        if den.norm() < 1e-12 * (1.0 + kappa2.norm()) {
            return Err(Error::ResonantForcing {
                rate: mu.re,
                kappa2: kappa2.re,
            });
        }
        out.push(a / den, *mu);
    }
    let target = match boundary {
        Boundary::Zero => Complex64::new(0.0, 0.0),
        Boundary::Value(v) => v,
    };
    let correction = target - out.at_zero();
    out.push(correction, kappa2.sqrt());
    Ok(out)
}

/// Multiplier table of one expansion order: Rhat_j f(k) = sum_d coef(k, d) f^(k+d).
#[derive(Clone, Debug)]
pub struct MultiplierTable {
    pub order: usize,
    pub k_lo: i64,
    pub k_hi: i64,
    offsets: BTreeMap<i64, Vec<Complex64>>,
}

impl MultiplierTable {
    fn new(order: usize, k_lo: i64, k_hi: i64) -> Self {
        let width = (k_hi - k_lo + 1) as usize;
        let ds: Vec<i64> = match order {
            0 => vec![0],
            1 => vec![-1, 1],
            2 => vec![-2, 0, 2],
            _ => vec![-3, -1, 1, 3],
        };
        let offsets = ds
            .into_iter()
            .map(|d| (d, vec![Complex64::new(0.0, 0.0); width]))
            .collect();
        MultiplierTable {
            order,
            k_lo,
            k_hi,
            offsets,
        }
    }

    pub fn offsets(&self) -> impl Iterator<Item = i64> + '_ {
        self.offsets.keys().copied()
    }

    pub fn get(&self, k: i64, d: i64) -> Complex64 {
        if k < self.k_lo || k > self.k_hi {
            return Complex64::new(0.0, 0.0);
        }
        self.offsets
            .get(&d)
            .map(|v| v[(k - self.k_lo) as usize])
            .unwrap_or_default()
    }

    fn set(&mut self, k: i64, d: i64, val: Complex64) {
        if let Some(v) = self.offsets.get_mut(&d) {
            v[(k - self.k_lo) as usize] = val;
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.offsets
            .values()
            .flat_map(|v| v.iter().map(|c| c.norm()))
            .fold(0.0, f64::max)
    }

    fn linear_comb(parts: &[(Complex64, &MultiplierTable)]) -> MultiplierTable {
        let (_, first) = parts[0];
        let mut out = MultiplierTable::new(first.order, first.k_lo, first.k_hi);
        for d in first.offsets().collect::<Vec<_>>() {
            for k in first.k_lo..=first.k_hi {
                let mut acc = Complex64::new(0.0, 0.0);
                for (w, t) in parts {
                    acc += w * t.get(k, d);
                }
                out.set(k, d, acc);
            }
        }
        out
    }
}

fn omega_c(k: i64, beta: Complex64) -> Complex64 {
    (Complex64::new((k * k) as f64, 0.0) + beta).sqrt()
}

/// Run the full ODE hierarchy per wavenumber and extract the multiplier
/// coefficients of orders j = 0..3 for k in [k_lo, k_hi]. Accepts complex
/// beta (with positive real part) so the tables extend analytically.
pub fn hierarchy_multipliers(
    beta: Complex64,
    k_lo: i64,
    k_hi: i64,
) -> Result<Vec<MultiplierTable>> {
    if beta.re <= 0.0 {
        return Err(Error::Domain(format!(
            "hierarchy needs Re beta > 0, got {beta}"
        )));
    }
    let mut tables: Vec<MultiplierTable> = (0..4)
        .map(|j| MultiplierTable::new(j, k_lo, k_hi))
        .collect();
    for k in k_lo..=k_hi {
        tables[0].set(k, 0, omega_c(k, beta));
    }

    // One hierarchy run per input mode m; each level j lives on the
    // wavenumbers m-j ..= m+j (they are ExpSum profiles in z).
    for m in (k_lo - 3)..=(k_hi + 3) {
        let mut level0: BTreeMap<i64, ExpSum> = BTreeMap::new();
        level0.insert(
            m,
            ExpSum::single(Complex64::new(1.0, 0.0), omega_c(m, beta)),
        );
        let get = |lv: &BTreeMap<i64, ExpSum>, k: i64| lv.get(&k).cloned().unwrap_or_default();

        // level 1 forcing: beta e^z [Theta0(k-1) + Theta0(k+1)]
        let mut level1: BTreeMap<i64, ExpSum> = BTreeMap::new();
        for k in (m - 1)..=(m + 1) {
            let f = get(&level0, k - 1)
                .add(&get(&level0, k + 1))
                .shift_scale(beta, 1.0);
            if !f.is_empty() {
                let kappa2 = Complex64::new((k * k) as f64, 0.0) + beta;
                level1.insert(k, solve_decaying_ode(kappa2, &f, Boundary::Zero)?);
            }
        }

        // level 2 forcing: beta e^z [Theta1(k-1) + Theta1(k+1)]
        //                + beta e^{2z} [Theta0(k) + 2 Theta0(k-2) + 2 Theta0(k+2)]
        let two = Complex64::new(2.0, 0.0);
        let mut level2: BTreeMap<i64, ExpSum> = BTreeMap::new();
        for k in (m - 2)..=(m + 2) {
            let f1 = get(&level1, k - 1)
                .add(&get(&level1, k + 1))
                .shift_scale(beta, 1.0);
            let f2 = get(&level0, k)
                .add(&get(&level0, k - 2).shift_scale(two, 0.0))
                .add(&get(&level0, k + 2).shift_scale(two, 0.0))
                .shift_scale(beta, 2.0);
            let f = f1.add(&f2);
            if !f.is_empty() {
                let kappa2 = Complex64::new((k * k) as f64, 0.0) + beta;
                level2.insert(k, solve_decaying_ode(kappa2, &f, Boundary::Zero)?);
            }
        }

        // level 3 forcing: beta e^z [Theta2(k-1) + Theta2(k+1)]
        //                + beta e^{2z} [Theta1(k) + 2 Theta1(k-2) + 2 Theta1(k+2)]
        //                + (9/2) beta e^{3z} [Theta0(k-3) + Theta0(k+3)]
        //                + beta (2 e^{3z} - e^z) [Theta0(k-1) + Theta0(k+1)]
        let mut level3: BTreeMap<i64, ExpSum> = BTreeMap::new();
        for k in (m - 3)..=(m + 3) {
            let f1 = get(&level2, k - 1)
                .add(&get(&level2, k + 1))
                .shift_scale(beta, 1.0);
            let f2 = get(&level1, k)
                .add(&get(&level1, k - 2).shift_scale(two, 0.0))
                .add(&get(&level1, k + 2).shift_scale(two, 0.0))
                .shift_scale(beta, 2.0);
            let f3 = get(&level0, k - 3)
                .add(&get(&level0, k + 3))
                .shift_scale(beta * 4.5, 3.0);
            let nb = get(&level0, k - 1).add(&get(&level0, k + 1));
            let f4 = nb
                .shift_scale(beta * 2.0, 3.0)
                .add(&nb.shift_scale(-beta, 1.0));
            let f = f1.add(&f2).add(&f3).add(&f4);
            if !f.is_empty() {
                let kappa2 = Complex64::new((k * k) as f64, 0.0) + beta;
                level3.insert(k, solve_decaying_ode(kappa2, &f, Boundary::Zero)?);
            }
        }

        for (j, lv) in [(1usize, &level1), (2, &level2), (3, &level3)] {
            for (&k, sol) in lv {
                if k_lo <= k && k <= k_hi && (m - k).unsigned_abs() as usize <= j {
                    tables[j].set(k, m - k, sol.dz_at_zero());
                }
            }
        }
    }
    Ok(tables)
}

// ---------------------------------------------------------------------------
// closed forms displayed in the expansion of the flattened operator
// ---------------------------------------------------------------------------

fn om(k: i64, beta: f64) -> f64 {
    ((k * k) as f64 + beta).sqrt()
}

/// C_k^{+/-} = beta [Omega(k +/- 1) + Omega(k) + 1]^{-1}.
pub fn closed_form_c(k: i64, beta: f64, sign: i64) -> f64 {
    beta / (om(k + sign, beta) + om(k, beta) + 1.0)
}

fn a1(k: i64, beta: f64, s: i64) -> f64 {
    1.0 / ((om(k + s, beta) + om(k, beta) + 1.0) * (om(k + s, beta) - om(k, beta) + 1.0))
}

fn a2(k: i64, beta: f64, s: i64) -> f64 {
    1.0 / ((om(k + 2 * s, beta) + om(k, beta) + 2.0) * (om(k + 2 * s, beta) - om(k, beta) + 2.0))
}

/// The Omega-only forms of B_k^-, B_k^0, B_k^+ (offsets -2, 0, +2 of R_2).
pub fn closed_form_b(k: i64, beta: f64, which: i64) -> f64 {
    let o = |j: i64| om(j, beta);
    match which {
        -1 => {
            beta * (2.0 - beta / ((o(k - 2) + o(k - 1) + 1.0) * (o(k - 1) + o(k) + 1.0)))
                / (o(k - 2) + o(k) + 2.0)
        }
        1 => {
            beta * (2.0 - beta / ((o(k) + o(k + 1) + 1.0) * (o(k + 1) + o(k + 2) + 1.0)))
                / (o(k) + o(k + 2) + 2.0)
        }
        _ => {
            beta * (beta
                * (-1.0 / (o(k) + o(k + 1) + 1.0).powi(2) - 1.0 / (o(k - 1) + o(k) + 1.0).powi(2))
                + 1.0)
                / (2.0 * (o(k) + 1.0))
        }
    }
}

/// The A-coefficient forms of the same B coefficients (algebraically equal).
pub fn closed_form_b_resolvent(k: i64, beta: f64, which: i64) -> f64 {
    match which {
        -1 => {
            beta * ((om(k - 2, beta) + 2.0 - om(k, beta))
                * a2(k, beta, -1)
                * (beta * a1(k - 1, beta, -1) + 2.0)
                - beta
                    * (om(k - 1, beta) + 1.0 - om(k, beta))
                    * a1(k - 1, beta, -1)
                    * a1(k, beta, -1))
        }
        1 => {
            beta * ((om(k + 2, beta) + 2.0 - om(k, beta))
                * a2(k, beta, 1)
                * (beta * a1(k + 1, beta, 1) + 2.0)
                - beta
                    * (om(k + 1, beta) + 1.0 - om(k, beta))
                    * a1(k + 1, beta, 1)
                    * a1(k, beta, 1))
        }
        _ => {
            beta * ((beta * (a1(k - 1, beta, 1) + a1(k + 1, beta, -1)) + 1.0)
                / (2.0 * (om(k, beta) + 1.0))
                - beta
                    * (om(k - 1, beta) + 1.0 - om(k, beta))
                    * a1(k - 1, beta, 1)
                    * a1(k, beta, -1)
                - beta
                    * (om(k + 1, beta) + 1.0 - om(k, beta))
                    * a1(k + 1, beta, -1)
                    * a1(k, beta, 1))
        }
    }
}

/// D_k^{-3} (sign = -1) and D_k^{+3} (sign = +1): rational functions of beta
/// and Omega(k-3..k) resp. Omega(k..k+3).
pub fn closed_form_d3(k: i64, beta: f64, sign: i64) -> f64 {
    let o = |j: i64| om(j, beta);
    if sign < 0 {
        let num = beta
            * (2.0 * beta * beta * (o(k - 3) + o(k - 2) + o(k - 1) + o(k) + 4.0)
                - 4.0
                    * beta
                    * (o(k - 2) + o(k - 1) + 1.0)
                    * (o(k - 2).powi(2)
                        + (o(k) + 3.0) * o(k - 2)
                        + 3.0 * o(k)
                        + o(k - 1) * (o(k - 1) + o(k) + 3.0)
                        + o(k - 3) * (o(k - 2) + o(k - 1) + 2.0 * o(k) + 3.0)
                        + 4.0)
                + 9.0
                    * (o(k - 3) + o(k - 2) + 1.0)
                    * (o(k - 3) + o(k - 1) + 2.0)
                    * (o(k - 2) + o(k - 1) + 1.0)
                    * (o(k - 2) + o(k) + 2.0)
                    * (o(k - 1) + o(k) + 1.0));
        let den = 2.0
            * (o(k - 3) + o(k - 2) + 1.0)
            * (o(k - 3) + o(k - 1) + 2.0)
            * (o(k - 2) + o(k - 1) + 1.0)
            * (o(k - 3) + o(k) + 3.0)
            * (o(k - 2) + o(k) + 2.0)
            * (o(k - 1) + o(k) + 1.0);
        num / den
    } else {
        let num = beta
            * (2.0 * beta * beta * (o(k) + o(k + 1) + o(k + 2) + o(k + 3) + 4.0)
                - 4.0
                    * beta
                    * (o(k + 1) + o(k + 2) + 1.0)
                    * (o(k + 1).powi(2)
                        + (o(k + 3) + 3.0) * o(k + 1)
                        + 3.0 * o(k + 3)
                        + o(k + 2) * (o(k + 2) + o(k + 3) + 3.0)
                        + o(k) * (o(k + 1) + o(k + 2) + 2.0 * o(k + 3) + 3.0)
                        + 4.0)
                + 9.0
                    * (o(k) + o(k + 1) + 1.0)
                    * (o(k) + o(k + 2) + 2.0)
                    * (o(k + 1) + o(k + 2) + 1.0)
                    * (o(k + 1) + o(k + 3) + 2.0)
                    * (o(k + 2) + o(k + 3) + 1.0));
        let den = 2.0
            * (o(k) + o(k + 1) + 1.0)
            * (o(k) + o(k + 2) + 2.0)
            * (o(k + 1) + o(k + 2) + 1.0)
            * (o(k) + o(k + 3) + 3.0)
            * (o(k + 1) + o(k + 3) + 2.0)
            * (o(k + 2) + o(k + 3) + 1.0);
        num / den
    }
}

// ---------------------------------------------------------------------------
// beta-derivatives R_{j,l}
// ---------------------------------------------------------------------------

/// All R_{j,l} = (1/l!) d^l R_j / d beta^l at beta0 for j, l in 0..=3.
/// j = 0 is analytic (derivatives of the dispersion symbol); j >= 1 uses
/// trapezoid quadrature of R_j(beta0 + r e^{i theta}) on a circle of radius
/// beta0/10, with the node count doubled until the tables stabilize.
pub struct DerivativeSet {
    /// indexed as `tables[l][j]`
    pub tables: Vec<Vec<MultiplierTable>>,
}

impl DerivativeSet {
    pub fn get(&self, j: usize, ell: usize) -> &MultiplierTable {
        &self.tables[ell][j]
    }
}

pub fn beta_derivative_set(beta0: f64, k_lo: i64, k_hi: i64) -> Result<DerivativeSet> {
    if beta0 <= 0.0 {
        return Err(Error::Domain(format!(
            "beta_derivative_set needs beta0 > 0, got {beta0}"
        )));
    }
    let radius = beta0 / 10.0;
    let mut nodes = 32usize;
    let mut prev: Option<Vec<Vec<MultiplierTable>>> = None;
    loop {
        let cur = cauchy_tables(beta0, radius, nodes, k_lo, k_hi)?;
        if let Some(p) = &prev {
            let mut change = 0.0f64;
            for ell in 0..4 {
                for j in 0..4 {
                    let diff = MultiplierTable::linear_comb(&[
                        (Complex64::new(1.0, 0.0), &cur[ell][j]),
                        (Complex64::new(-1.0, 0.0), &p[ell][j]),
                    ]);
                    change = change.max(diff.max_abs());
                }
            }
            if change <= 1e-10 {
                return Ok(DerivativeSet { tables: cur });
            }
            if nodes >= 512 {
                return Err(Error::QuadratureUnstable {
                    change,
                    limit: 1e-10,
                });
            }
        }
        prev = Some(cur);
        nodes *= 2;
    }
}

fn cauchy_tables(
    beta0: f64,
    radius: f64,
    nodes: usize,
    k_lo: i64,
    k_hi: i64,
) -> Result<Vec<Vec<MultiplierTable>>> {
    let node_tables: Vec<(f64, Vec<MultiplierTable>)> = (0..nodes)
        .into_par_iter()
        .map(|t| {
            let theta = 2.0 * std::f64::consts::PI * t as f64 / nodes as f64;
            let beta = Complex64::new(beta0, 0.0) + radius * Complex64::from_polar(1.0, theta);
            hierarchy_multipliers(beta, k_lo, k_hi).map(|tabs| (theta, tabs))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut out: Vec<Vec<MultiplierTable>> = Vec::with_capacity(4);
    for ell in 0..4usize {
        let mut per_j = Vec::with_capacity(4);
        for j in 0..4usize {
            if j == 0 {
                // analytic derivatives of Omega(k) = (k^2 + beta)^(1/2)
                let mut t = MultiplierTable::new(0, k_lo, k_hi);
                for k in k_lo..=k_hi {
                    let u = (k * k) as f64 + beta0;
                    let val = match ell {
                        0 => u.sqrt(),
                        1 => 0.5 / u.sqrt(),
                        2 => -0.125 * u.powf(-1.5),
                        _ => 0.0625 * u.powf(-2.5),
                    };
                    t.set(k, 0, Complex64::new(val, 0.0));
                }
                per_j.push(t);
                continue;
            }
            // (1/l!) f^(l)(beta0) = (1/(N r^l)) sum_t f(beta_t) e^{-i l theta_t}
            let parts: Vec<(Complex64, &MultiplierTable)> = node_tables
                .iter()
                .map(|(theta, tabs)| {
                    let w = Complex64::from_polar(1.0, -(ell as f64) * theta)
                        / (nodes as f64 * radius.powi(ell as i32));
                    (w, &tabs[j])
                })
                .collect();
            let mut t = MultiplierTable::linear_comb(&parts);
            // tables are real at real beta0; drop the quadrature's imaginary dust
            for d in t.offsets().collect::<Vec<_>>() {
                for k in k_lo..=k_hi {
                    let v = t.get(k, d);
                    debug_assert!(v.im.abs() < 1e-9, "imaginary residue {v}");
                    t.set(k, d, Complex64::new(v.re, 0.0));
                }
            }
            per_j.push(t);
        }
        out.push(per_j);
    }
    Ok(out)
}

/// Single R_{j,l} table (delegates to the bulk computation).
pub fn beta_derivatives(
    j: usize,
    ell: usize,
    beta0: f64,
    k_lo: i64,
    k_hi: i64,
) -> Result<MultiplierTable> {
    let set = beta_derivative_set(beta0, k_lo, k_hi)?;
    Ok(set.tables[ell][j].clone())
}
