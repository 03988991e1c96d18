//! Graded-series arithmetic over trigonometric polynomials.
//!
//! A [`TrigPoly`] is a finite Fourier sum with complex coefficients over an
//! exact or float scalar ring; a [`GradedSeries`] collects them by
//! (eps-order, delta-order) with a common grading cutoff. The shape-derivative
//! identities used to rebuild the surface coefficients p, q live here too.

use crate::error::{Error, Result};
use crate::scalar::{Coeff, Cpx, Rat};
use std::collections::BTreeMap;

/// Trigonometric polynomial: map wavenumber k -> complex coefficient of e^{ikx}.
/// Exact zeros are pruned from the map.
#[derive(Clone, PartialEq, Debug)]
pub struct TrigPoly<T: Coeff> {
    coeffs: BTreeMap<i64, Cpx<T>>,
}

impl<T: Coeff> Default for TrigPoly<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Coeff> TrigPoly<T> {
    pub fn zero() -> Self {
        TrigPoly {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn constant(c: T) -> Self {
        let mut p = Self::zero();
        p.set(0, Cpx::real(c));
        p
    }

    /// cos(j x) = (e^{ijx} + e^{-ijx}) / 2
    pub fn cos(j: i64) -> Self {
        let mut p = Self::zero();
        if j == 0 {
            p.set(0, Cpx::one());
        } else {
            let half = Cpx::real(T::from_ratio(1, 2));
            p.set(j, half.clone());
            p.set(-j, half);
        }
        p
    }

    /// sin(j x) = (e^{ijx} - e^{-ijx}) / (2i)
    pub fn sin(j: i64) -> Self {
        let mut p = Self::zero();
        if j != 0 {
            p.set(j, Cpx::imag(T::from_ratio(-1, 2)));
            p.set(-j, Cpx::imag(T::from_ratio(1, 2)));
        }
        p
    }

    pub fn coeff(&self, k: i64) -> Cpx<T> {
        self.coeffs.get(&k).cloned().unwrap_or_else(Cpx::zero)
    }

    pub fn set(&mut self, k: i64, v: Cpx<T>) {
        if v.is_zero() {
            self.coeffs.remove(&k);
        } else {
            self.coeffs.insert(k, v);
        }
    }

    pub fn add_to(&mut self, k: i64, v: &Cpx<T>) {
        let cur = self.coeff(k);
        self.set(k, cur.add(v));
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &Cpx<T>)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn support(&self) -> Vec<i64> {
        self.coeffs.keys().copied().collect()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in o.iter() {
            out.add_to(*k, v);
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero();
        for (k, v) in self.iter() {
            out.set(*k, v.neg());
        }
        out
    }

    pub fn scale(&self, s: &Cpx<T>) -> Self {
        let mut out = Self::zero();
        for (k, v) in self.iter() {
            out.set(*k, v.mul(s));
        }
        out
    }

    /// Convolution of Fourier coefficients: pointwise product of functions.
    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (ka, va) in self.iter() {
            for (kb, vb) in o.iter() {
                out.add_to(ka + kb, &va.mul(vb));
            }
        }
        out
    }

    /// Apply a Fourier multiplier: coeff_out(k) = sym(k) * coeff_in(k).
    pub fn apply_multiplier(&self, sym: impl Fn(i64) -> Cpx<T>) -> Self {
        let mut out = Self::zero();
        for (k, v) in self.iter() {
            out.set(*k, v.mul(&sym(*k)));
        }
        out
    }

    /// d/dx, i.e. the multiplier ik.
    pub fn dx(&self) -> Self {
        self.apply_multiplier(|k| Cpx::imag(T::from_int(k)))
    }

    /// |D|, i.e. the multiplier |k|.
    pub fn abs_d(&self) -> Self {
        self.apply_multiplier(|k| Cpx::real(T::from_int(k.abs())))
    }

    /// Real-valuedness: coeff(-k) = conj(coeff(k)) for all k.
    pub fn is_real_valued(&self) -> bool {
        self.coeffs.iter().all(|(k, v)| self.coeff(-k) == v.conj())
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs
            .values()
            .map(|v| v.abs_f64())
            .fold(0.0, f64::max)
    }

    pub fn to_float(&self) -> TrigPoly<f64> {
        let mut out = TrigPoly::zero();
        for (k, v) in self.iter() {
            out.set(*k, v.to_f64());
        }
        out
    }
}

/// Product of two trig polynomials (free-function form).
pub fn trig_mul<T: Coeff>(a: &TrigPoly<T>, b: &TrigPoly<T>) -> TrigPoly<T> {
    a.mul(b)
}

/// Polynomial in the formal parameters (eps, delta) with TrigPoly coefficients.
/// Stored orders satisfy m + n <= max_order.
#[derive(Clone, PartialEq, Debug)]
pub struct GradedSeries<T: Coeff> {
    terms: BTreeMap<(u32, u32), TrigPoly<T>>,
    max_order: u32,
}

impl<T: Coeff> GradedSeries<T> {
    pub fn zero(max_order: u32) -> Self {
        GradedSeries {
            terms: BTreeMap::new(),
            max_order,
        }
    }

    pub fn constant(c: T, max_order: u32) -> Self {
        let mut s = Self::zero(max_order);
        s.set((0, 0), TrigPoly::constant(c));
        s
    }

    pub fn one(max_order: u32) -> Self {
        Self::constant(T::one(), max_order)
    }

    pub fn max_order(&self) -> u32 {
        self.max_order
    }

    pub fn term(&self, m: u32, n: u32) -> TrigPoly<T> {
        self.terms.get(&(m, n)).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, key: (u32, u32), p: TrigPoly<T>) {
        debug_assert!(key.0 + key.1 <= self.max_order);
        if p.is_zero() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, p);
        }
    }

    pub fn add_to(&mut self, key: (u32, u32), p: &TrigPoly<T>) {
        let cur = self.term(key.0, key.1);
        self.set(key, cur.add(p));
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(u32, u32), &TrigPoly<T>)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let cutoff = self.max_order.min(o.max_order);
        let mut out = Self::zero(cutoff);
        for (k, p) in self.iter().chain(o.iter()) {
            if k.0 + k.1 <= cutoff {
                out.add_to(*k, p);
            }
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero(self.max_order);
        for (k, p) in self.iter() {
            out.set(*k, p.neg());
        }
        out
    }

    pub fn scale(&self, s: &Cpx<T>) -> Self {
        let mut out = Self::zero(self.max_order);
        for (k, p) in self.iter() {
            out.set(*k, p.scale(s));
        }
        out
    }

    /// Product; the cutoff is the minimum of the two cutoffs.
    pub fn mul(&self, o: &Self) -> Self {
        let cutoff = self.max_order.min(o.max_order);
        let mut out = Self::zero(cutoff);
        for (ka, pa) in self.iter() {
            for (kb, pb) in o.iter() {
                let key = (ka.0 + kb.0, ka.1 + kb.1);
                if key.0 + key.1 <= cutoff {
                    out.add_to(key, &pa.mul(pb));
                }
            }
        }
        out
    }

    pub fn apply_multiplier(&self, sym: impl Fn(i64) -> Cpx<T> + Copy) -> Self {
        let mut out = Self::zero(self.max_order);
        for (k, p) in self.iter() {
            out.set(*k, p.apply_multiplier(sym));
        }
        out
    }

    pub fn dx(&self) -> Self {
        self.apply_multiplier(|k| Cpx::imag(T::from_int(k)))
    }

    pub fn abs_d(&self) -> Self {
        self.apply_multiplier(|k| Cpx::real(T::from_int(k.abs())))
    }

    /// Reciprocal of a series whose (0,0) term is the constant 1:
    /// 1/(1+u) = sum (-u)^n, truncated at the cutoff.
    pub fn recip_one_plus(&self) -> Result<Self> {
        let head = self.term(0, 0);
        if head != TrigPoly::constant(T::one()) {
            return Err(Error::Domain(
                "recip_one_plus needs leading term equal to 1".into(),
            ));
        }
        let u = self.sub(&Self::one(self.max_order));
        let mut out = Self::one(self.max_order);
        let mut upow = Self::one(self.max_order);
        for n in 1..=self.max_order {
            upow = upow.mul(&u);
            if upow.is_zero() {
                break;
            }
            let sgn = if n % 2 == 0 {
                T::one()
            } else {
                T::from_int(-1)
            };
            out = out.add(&upow.scale(&Cpx::real(sgn)));
        }
        Ok(out)
    }

    pub fn is_eps_only(&self) -> bool {
        self.terms.keys().all(|k| k.1 == 0)
    }

    pub fn max_abs(&self) -> f64 {
        self.terms.values().map(|p| p.max_abs()).fold(0.0, f64::max)
    }

    pub fn to_float(&self) -> GradedSeries<f64> {
        let mut out = GradedSeries::zero(self.max_order);
        for (k, p) in self.iter() {
            out.set(*k, p.to_float());
        }
        out
    }
}

/// Taylor composition f(zeta(x)) with zeta = x + w, w = O(eps):
/// f o zeta = sum_n (1/n!) w^n d^n f / dx^n, truncated at the common cutoff.
///
/// Both series must be eps-only and share the same cutoff.
pub fn compose_with_zeta<T: Coeff>(
    f: &GradedSeries<T>,
    zeta_minus_x: &GradedSeries<T>,
) -> Result<GradedSeries<T>> {
    if f.max_order() != zeta_minus_x.max_order() {
        return Err(Error::CutoffMismatch(
            f.max_order(),
            zeta_minus_x.max_order(),
        ));
    }
    if !f.is_eps_only() || !zeta_minus_x.is_eps_only() {
        return Err(Error::Domain(
            "compose_with_zeta expects eps-only series".into(),
        ));
    }
    let cutoff = f.max_order();
    let mut out = f.clone();
    let mut wpow = GradedSeries::one(cutoff);
    let mut fder = f.clone();
    let mut fact: i64 = 1;
    for n in 1..=cutoff {
        wpow = wpow.mul(zeta_minus_x);
        fder = fder.dx();
        fact *= n as i64;
        if wpow.is_zero() || fder.is_zero() {
            break;
        }
        let term = wpow.mul(&fder).scale(&Cpx::real(T::from_ratio(1, fact)));
        out = out.add(&term);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Shape-derivative identities of the flat-surface Dirichlet-Neumann operator.
// ---------------------------------------------------------------------------

/// G(0) psi = |D| psi.
pub fn dn_flat<T: Coeff>(psi: &GradedSeries<T>) -> GradedSeries<T> {
    psi.abs_d()
}

/// G'(0)\[eta\] psi = -|D|(eta |D| psi) - d/dx (eta d/dx psi).
pub fn dn_first<T: Coeff>(eta: &GradedSeries<T>, psi: &GradedSeries<T>) -> GradedSeries<T> {
    let t1 = eta.mul(&psi.abs_d()).abs_d();
    let t2 = eta.mul(&psi.dx()).dx();
    t1.neg().sub(&t2)
}

/// G''(0)[etaA, etaB] psi
///   = |D|{etaB |D|(etaA |D| psi)} + |D|{etaA |D|(etaB |D| psi)}
///     + |D|{etaA etaB psi_xx} + d^2/dx^2 {etaA etaB |D| psi}.
pub fn dn_second<T: Coeff>(
    eta_a: &GradedSeries<T>,
    eta_b: &GradedSeries<T>,
    psi: &GradedSeries<T>,
) -> GradedSeries<T> {
    let inner_a = eta_a.mul(&psi.abs_d()).abs_d();
    let inner_b = eta_b.mul(&psi.abs_d()).abs_d();
    let t1 = eta_b.mul(&inner_a).abs_d();
    let t2 = eta_a.mul(&inner_b).abs_d();
    let ab = eta_a.mul(eta_b);
    let t3 = ab.mul(&psi.dx().dx()).abs_d();
    let t4 = ab.mul(&psi.abs_d()).dx().dx();
    t1.add(&t2).add(&t3).add(&t4)
}

/// G(eta) psi expanded through the series cutoff (exact through order 3 when
/// eta and psi are O(eps)): G(0) + G'(0)\[eta\] + (1/2) G''(0)\[eta, eta\].
pub fn dn_expanded<T: Coeff>(eta: &GradedSeries<T>, psi: &GradedSeries<T>) -> GradedSeries<T> {
    let half = Cpx::real(T::from_ratio(1, 2));
    dn_flat(psi)
        .add(&dn_first(eta, psi))
        .add(&dn_second(eta, eta, psi).scale(&half))
}

/// Rebuild the surface coefficients of the linearized problem from the frozen
/// Stokes data, in exact rational arithmetic:
/// returns (p, q, (1+q)/zeta') through order eps^3.
pub fn reconstruct_pq() -> (GradedSeries<Rat>, GradedSeries<Rat>, GradedSeries<Rat>) {
    let st = crate::stokes::stokes_profiles();
    let cutoff = 3;
    let eta = st.eta_truncated(cutoff);
    let psi = st.psi_truncated(cutoff);
    let w = st.zeta_minus_x.clone();

    // B* = (G(eta*) psi* + eta*_x psi*_x) / (1 + eta*_x^2)
    let g = dn_expanded(&eta, &psi);
    let ex = eta.dx();
    let px = psi.dx();
    let denom = GradedSeries::one(cutoff).add(&ex.mul(&ex));
    let b_star = g
        .add(&ex.mul(&px))
        .mul(&denom.recip_one_plus().expect("unit leading term"));
    // V* = psi*_x - B* eta*_x
    let v_star = px.sub(&b_star.mul(&ex));

    let zeta_prime = GradedSeries::one(cutoff).add(&w.dx());
    let inv_zp = zeta_prime
        .recip_one_plus()
        .expect("zeta' has unit leading term");

    let c_series = st.speed_series(cutoff);
    let v_comp = compose_with_zeta(&v_star, &w).expect("matching cutoffs");
    let b_comp = compose_with_zeta(&b_star, &w).expect("matching cutoffs");

    let p = c_series.sub(&v_comp).mul(&inv_zp);
    let q = p.mul(&b_comp.dx()).neg();
    let qz = GradedSeries::one(cutoff).add(&q).mul(&inv_zp);
    (p, q, qz)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;
    use proptest::prelude::*;

    fn rp(num: i64, den: i64) -> Rat {
        Coeff::from_ratio(num, den)
    }

    #[test]
    fn cos_times_cos() {
        // cos x * cos x = 1/2 + 1/2 cos 2x
        let c: TrigPoly<Rat> = TrigPoly::cos(1);
        let p = trig_mul(&c, &c);
        let want = TrigPoly::constant(rp(1, 2)).add(&TrigPoly::cos(2).scale(&Cpx::real(rp(1, 2))));
        assert_eq!(p, want);
    }

    #[test]
    fn cos_times_sin() {
        // cos x * sin x = 1/2 sin 2x
        let p = trig_mul::<Rat>(&TrigPoly::cos(1), &TrigPoly::sin(1));
        assert_eq!(p, TrigPoly::sin(2).scale(&Cpx::real(rp(1, 2))));
    }

    #[test]
    fn cos_times_sin2() {
        // cos x * sin 2x = 1/2 (sin x + sin 3x)
        let p = trig_mul::<Rat>(&TrigPoly::cos(1), &TrigPoly::sin(2));
        let want = TrigPoly::sin(1)
            .add(&TrigPoly::sin(3))
            .scale(&Cpx::real(rp(1, 2)));
        assert_eq!(p, want);
    }

    #[test]
    fn multiplier_examples() {
        // |D| sin x = sin x
        let s: TrigPoly<f64> = TrigPoly::sin(1);
        assert_eq!(s.abs_d(), s);
        // d/dx cos 2x = -2 sin 2x
        let c: TrigPoly<Rat> = TrigPoly::cos(2);
        assert_eq!(c.dx(), TrigPoly::sin(2).scale(&Cpx::real(rp(-2, 1))));
    }

    #[test]
    fn omega_multiplier_at_resonance() {
        // Omega(D) at beta* applied to e^{ix} -> gamma1^2 e^{ix}
        let res = crate::dispersion::solve_resonance();
        let mut f: TrigPoly<f64> = TrigPoly::zero();
        f.set(1, Cpx::one());
        let out = f.apply_multiplier(|k| Cpx::real(((k * k) as f64 + res.beta_star).sqrt()));
        let got = out.coeff(1).re;
        assert!((got - res.gamma1 * res.gamma1).abs() < 1e-12);
    }

    #[test]
    fn compose_identity_is_noop() {
        let st = crate::stokes::stokes_profiles();
        let f = st.eta_truncated(3);
        let w = GradedSeries::zero(3);
        assert_eq!(compose_with_zeta(&f, &w).unwrap(), f);
    }

    #[test]
    fn compose_cutoff_mismatch_errors() {
        let f: GradedSeries<Rat> = GradedSeries::one(3);
        let w: GradedSeries<Rat> = GradedSeries::zero(2);
        assert!(matches!(
            compose_with_zeta(&f, &w),
            Err(Error::CutoffMismatch(3, 2))
        ));
    }

    #[test]
    fn compose_eta_with_zeta() {
        // eta* o zeta = eps cos x + eps^2 (cos 2x - 1/2) + eps^3 (3/2 cos 3x - cos x)
        let st = crate::stokes::stokes_profiles();
        let got = compose_with_zeta(&st.eta_truncated(3), &st.zeta_minus_x).unwrap();
        let mut want = GradedSeries::zero(3);
        want.set((1, 0), TrigPoly::cos(1));
        want.set((2, 0), TrigPoly::cos(2).sub(&TrigPoly::constant(rp(1, 2))));
        want.set(
            (3, 0),
            TrigPoly::cos(3)
                .scale(&Cpx::real(rp(3, 2)))
                .sub(&TrigPoly::cos(1)),
        );
        assert_eq!(got, want);
    }

    #[test]
    fn compose_v_with_zeta() {
        // V* o zeta = eps cos x + eps^2 cos 2x + eps^3 (-1/2 cos x + 3/2 cos 3x)
        let st = crate::stokes::stokes_profiles();
        let cutoff = 3;
        let eta = st.eta_truncated(cutoff);
        let psi = st.psi_truncated(cutoff);
        let g = dn_expanded(&eta, &psi);
        let ex = eta.dx();
        let px = psi.dx();
        let denom = GradedSeries::one(cutoff).add(&ex.mul(&ex));
        let b = g.add(&ex.mul(&px)).mul(&denom.recip_one_plus().unwrap());
        let v = px.sub(&b.mul(&ex));
        let got = compose_with_zeta(&v, &st.zeta_minus_x).unwrap();
        let mut want = GradedSeries::zero(3);
        want.set((1, 0), TrigPoly::cos(1));
        want.set((2, 0), TrigPoly::cos(2));
        want.set(
            (3, 0),
            TrigPoly::cos(1)
                .scale(&Cpx::real(rp(-1, 2)))
                .add(&TrigPoly::cos(3).scale(&Cpx::real(rp(3, 2)))),
        );
        assert_eq!(got, want);
    }

    #[test]
    fn first_order_chain_rule() {
        // order-1 term of f o (x + eps zeta1) is zeta1 * dx f0 + f1
        let mut f: GradedSeries<Rat> = GradedSeries::zero(3);
        f.set((0, 0), TrigPoly::cos(2));
        f.set((1, 0), TrigPoly::sin(3));
        let mut w = GradedSeries::zero(3);
        w.set((1, 0), TrigPoly::sin(1));
        let got = compose_with_zeta(&f, &w).unwrap();
        let want1 = TrigPoly::sin(1)
            .mul(&TrigPoly::cos(2).dx())
            .add(&TrigPoly::sin(3));
        assert_eq!(got.term(1, 0), want1);
    }

    #[test]
    fn reconstruct_pq_matches_frozen_expansions() {
        let (p, q, qz) = reconstruct_pq();

        let mut p_want = GradedSeries::zero(3);
        p_want.set((0, 0), TrigPoly::constant(rp(1, 1)));
        p_want.set((1, 0), TrigPoly::cos(1).scale(&Cpx::real(rp(-2, 1))));
        p_want.set(
            (2, 0),
            TrigPoly::constant(rp(3, 2)).sub(&TrigPoly::cos(2).scale(&Cpx::real(rp(2, 1)))),
        );
        p_want.set(
            (3, 0),
            TrigPoly::cos(1)
                .scale(&Cpx::real(rp(3, 1)))
                .sub(&TrigPoly::cos(3).scale(&Cpx::real(rp(3, 1)))),
        );
        assert_eq!(p, p_want, "p expansion");

        let mut q_want = GradedSeries::zero(3);
        q_want.set((1, 0), TrigPoly::cos(1).neg());
        q_want.set((2, 0), TrigPoly::constant(rp(1, 1)).sub(&TrigPoly::cos(2)));
        q_want.set(
            (3, 0),
            TrigPoly::cos(1)
                .scale(&Cpx::real(rp(2, 1)))
                .sub(&TrigPoly::cos(3).scale(&Cpx::real(rp(3, 2)))),
        );
        assert_eq!(q, q_want, "q expansion");

        let mut qz_want = GradedSeries::zero(3);
        qz_want.set((0, 0), TrigPoly::constant(rp(1, 1)));
        qz_want.set((1, 0), TrigPoly::cos(1).scale(&Cpx::real(rp(-2, 1))));
        qz_want.set(
            (2, 0),
            TrigPoly::constant(rp(2, 1)).sub(&TrigPoly::cos(2).scale(&Cpx::real(rp(2, 1)))),
        );
        qz_want.set(
            (3, 0),
            TrigPoly::cos(1)
                .scale(&Cpx::real(rp(4, 1)))
                .sub(&TrigPoly::cos(3).scale(&Cpx::real(rp(3, 1)))),
        );
        assert_eq!(qz, qz_want, "(1+q)/zeta' expansion");
    }

    // --- property tests ----------------------------------------------------

    fn small_trig() -> impl Strategy<Value = TrigPoly<Rat>> {
        prop::collection::btree_map(-8i64..=8, (-6i64..=6, -6i64..=6), 0..6).prop_map(|m| {
            let mut p = TrigPoly::zero();
            for (k, (re, im)) in m {
                p.set(k, Cpx::new(Coeff::from_int(re), Coeff::from_int(im)));
            }
            p
        })
    }

    fn real_trig() -> impl Strategy<Value = TrigPoly<Rat>> {
        prop::collection::btree_map(0i64..=6, (-6i64..=6, -6i64..=6), 0..5).prop_map(|m| {
            let mut p = TrigPoly::zero();
            for (k, (re, im)) in m {
                let v = Cpx::new(rp(re, 1), if k == 0 { Rat::zero() } else { rp(im, 1) });
                p.set(k, v.clone());
                if k != 0 {
                    p.set(-k, v.conj());
                }
            }
            p
        })
    }

    proptest! {
        #[test]
        fn mul_commutative(a in small_trig(), b in small_trig()) {
            prop_assert_eq!(trig_mul(&a, &b), trig_mul(&b, &a));
        }

        #[test]
        fn mul_associative(a in small_trig(), b in small_trig(), c in small_trig()) {
            prop_assert_eq!(trig_mul(&trig_mul(&a, &b), &c), trig_mul(&a, &trig_mul(&b, &c)));
        }

        #[test]
        fn real_valued_preserved(a in real_trig(), b in real_trig()) {
            prop_assert!(a.is_real_valued());
            prop_assert!(trig_mul(&a, &b).is_real_valued());
            // real even symbol keeps real-valuedness
            prop_assert!(a.abs_d().is_real_valued());
        }
    }
}
