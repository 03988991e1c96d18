//! Dense complex matrices at desk scale (<= a few hundred rows): storage,
//! products, LU with partial pivoting, inverse, and norm estimates.

use crate::error::{Error, Result};
use num_complex::Complex64;

pub const ZC: Complex64 = Complex64::new(0.0, 0.0);

#[derive(Clone, Debug, PartialEq)]
pub struct CMat {
    pub n: usize,
    a: Vec<Complex64>,
}

impl CMat {
    pub fn zeros(n: usize) -> Self {
        CMat {
            n,
            a: vec![ZC; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn matvec(&self, v: &[Complex64]) -> Vec<Complex64> {
        debug_assert_eq!(v.len(), self.n);
        let mut out = vec![ZC; self.n];
        for (i, dst) in out.iter_mut().enumerate() {
            let row = &self.a[i * self.n..(i + 1) * self.n];
            let mut acc = ZC;
            for (m, x) in row.iter().zip(v) {
                acc += m * x;
            }
            *dst = acc;
        }
        out
    }

    pub fn matmul(&self, o: &CMat) -> CMat {
        debug_assert_eq!(self.n, o.n);
        let n = self.n;
        let mut out = CMat::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let aik = self.a[i * n + k];
                if aik == ZC {
                    continue;
                }
                let orow = &o.a[k * n..(k + 1) * n];
                let out_row = &mut out.a[i * n..(i + 1) * n];
                for (dst, b) in out_row.iter_mut().zip(orow) {
                    *dst += aik * b;
                }
            }
        }
        out
    }

    pub fn add(&self, o: &CMat) -> CMat {
        let mut out = self.clone();
        for (x, y) in out.a.iter_mut().zip(&o.a) {
            *x += y;
        }
        out
    }

    pub fn sub(&self, o: &CMat) -> CMat {
        let mut out = self.clone();
        for (x, y) in out.a.iter_mut().zip(&o.a) {
            *x -= y;
        }
        out
    }

    pub fn scale(&self, s: Complex64) -> CMat {
        let mut out = self.clone();
        for x in out.a.iter_mut() {
            *x *= s;
        }
        out
    }

    pub fn adjoint(&self) -> CMat {
        let n = self.n;
        let mut out = CMat::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.n).map(|i| self[(i, i)]).sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.a.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn frobenius(&self) -> f64 {
        self.a.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    /// 2-norm estimate by power iteration on A* A.
    pub fn two_norm_est(&self) -> f64 {
        let n = self.n;
        let mut v: Vec<Complex64> = (0..n)
            .map(|i| Complex64::new(1.0 + (i as f64 * 0.7).sin(), (i as f64 * 0.3).cos()))
            .collect();
        let adj = self.adjoint();
        let mut norm = 0.0;
        for _ in 0..30 {
            let w = adj.matvec(&self.matvec(&v));
            let nn = w.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
            if nn == 0.0 {
                return 0.0;
            }
            v = w.iter().map(|c| c / nn).collect();
            norm = nn.sqrt();
        }
        norm
    }

    pub fn lu(&self) -> Result<Lu> {
        let n = self.n;
        let mut a = self.a.clone();
        let mut piv: Vec<usize> = (0..n).collect();
        for col in 0..n {
            let mut best = col;
            let mut best_val = a[col * n + col].norm();
            for r in (col + 1)..n {
                let v = a[r * n + col].norm();
                if v > best_val {
                    best = r;
                    best_val = v;
                }
            }
            if best_val == 0.0 {
                return Err(Error::NearSingular {
                    k: col as i64,
                    det: 0.0,
                });
            }
            if best != col {
                for j in 0..n {
                    a.swap(col * n + j, best * n + j);
                }
                piv.swap(col, best);
            }
            let pivot = a[col * n + col];
            for r in (col + 1)..n {
                let factor = a[r * n + col] / pivot;
                a[r * n + col] = factor;
                if factor != ZC {
                    for j in (col + 1)..n {
                        let v = a[col * n + j];
                        a[r * n + j] -= factor * v;
                    }
                }
            }
        }
        Ok(Lu { n, a, piv })
    }
}

impl std::ops::Index<(usize, usize)> for CMat {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.a[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.a[i * self.n + j]
    }
}

/// LU factors with partial pivoting.
pub struct Lu {
    n: usize,
    a: Vec<Complex64>,
    piv: Vec<usize>,
}

impl Lu {
    pub fn solve_vec(&self, b: &[Complex64]) -> Vec<Complex64> {
        let n = self.n;
        let mut x: Vec<Complex64> = self.piv.iter().map(|&p| b[p]).collect();
        for i in 0..n {
            for j in 0..i {
                let l = self.a[i * n + j];
                let xj = x[j];
                x[i] -= l * xj;
            }
        }
        for i in (0..n).rev() {
            for j in (i + 1)..n {
                let u = self.a[i * n + j];
                let xj = x[j];
                x[i] -= u * xj;
            }
            x[i] /= self.a[i * n + i];
        }
        x
    }

    /// Solve with the adjoint of the factored matrix: A^* x = b.
    pub fn solve_adjoint_vec(&self, b: &[Complex64]) -> Vec<Complex64> {
        let n = self.n;
        // A = P^T L U  =>  A^* = U^* L^* P; solve U^* y = b, L^* z = y, x = P^T z
        let mut y = b.to_vec();
        for i in 0..n {
            for j in 0..i {
                let u = self.a[j * n + i].conj();
                let yj = y[j];
                y[i] -= u * yj;
            }
            y[i] /= self.a[i * n + i].conj();
        }
        for i in (0..n).rev() {
            for j in (i + 1)..n {
                let l = self.a[j * n + i].conj();
                let yj = y[j];
                y[i] -= l * yj;
            }
        }
        let mut x = vec![ZC; n];
        for (i, &p) in self.piv.iter().enumerate() {
            x[p] = y[i];
        }
        x
    }

    pub fn inverse(&self) -> CMat {
        let n = self.n;
        let mut out = CMat::zeros(n);
        let mut e = vec![ZC; n];
        for col in 0..n {
            e[col] = Complex64::new(1.0, 0.0);
            let x = self.solve_vec(&e);
            e[col] = ZC;
            for (row, v) in x.iter().enumerate() {
                out[(row, col)] = *v;
            }
        }
        out
    }

    /// Smallest-singular-value estimate via inverse power iteration on A^* A.
    pub fn sigma_min_est(&self) -> f64 {
        let n = self.n;
        let mut v: Vec<Complex64> = (0..n)
            .map(|i| Complex64::new((i as f64 * 0.61).cos(), 1.0 + (i as f64 * 0.41).sin()))
            .collect();
        let norm0 = v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        for x in v.iter_mut() {
            *x /= norm0;
        }
        let mut growth = 0.0;
        for _ in 0..20 {
            // w = (A^* A)^{-1} v = A^{-1} (A^*)^{-1} v
            let w = self.solve_vec(&self.solve_adjoint_vec(&v));
            let nn = w.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
            if !nn.is_finite() || nn == 0.0 {
                return 0.0;
            }
            v = w.iter().map(|c| c / nn).collect();
            growth = nn;
        }
        growth.powf(-0.5)
    }
}
