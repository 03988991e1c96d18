//! Coefficient profiles for the series algebra: exact rationals for the
//! reconstruction/golden paths and `f64` for the numeric pipeline.
//! Conversion is one-way, exact -> float.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use std::fmt;

/// Scalar ring the trigonometric-polynomial coefficients live in.
pub trait Coeff: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn to_f64(&self) -> f64;
}

pub type Rat = BigRational;

impl Coeff for Rat {
    fn zero() -> Self {
        <BigRational as Zero>::zero()
    }
    fn one() -> Self {
        BigRational::from_integer(BigInt::from(1))
    }
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn to_f64(&self) -> f64 {
        // exact numerator/denominator quotient; fine for the modest values here
        self.numer().to_f64().unwrap_or(f64::NAN) / self.denom().to_f64().unwrap_or(f64::NAN)
    }
}

impl Coeff for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_int(n: i64) -> Self {
        n as f64
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn to_f64(&self) -> f64 {
        *self
    }
}

/// Complex number over an arbitrary coefficient ring.
#[derive(Clone, PartialEq, Debug)]
pub struct Cpx<T: Coeff> {
    pub re: T,
    pub im: T,
}

impl<T: Coeff> Cpx<T> {
    pub fn new(re: T, im: T) -> Self {
        Cpx { re, im }
    }
    pub fn zero() -> Self {
        Cpx::new(T::zero(), T::zero())
    }
    pub fn one() -> Self {
        Cpx::new(T::one(), T::zero())
    }
    pub fn real(re: T) -> Self {
        Cpx::new(re, T::zero())
    }
    pub fn imag(im: T) -> Self {
        Cpx::new(T::zero(), im)
    }
    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    pub fn add(&self, o: &Self) -> Self {
        Cpx::new(self.re.add(&o.re), self.im.add(&o.im))
    }
    pub fn sub(&self, o: &Self) -> Self {
        Cpx::new(self.re.sub(&o.re), self.im.sub(&o.im))
    }
    pub fn mul(&self, o: &Self) -> Self {
        Cpx::new(
            self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        )
    }
    pub fn neg(&self) -> Self {
        Cpx::new(self.re.neg(), self.im.neg())
    }
    pub fn conj(&self) -> Self {
        Cpx::new(self.re.clone(), self.im.neg())
    }
    pub fn scale(&self, s: &T) -> Self {
        Cpx::new(self.re.mul(s), self.im.mul(s))
    }
    pub fn abs_f64(&self) -> f64 {
        self.re.to_f64().hypot(self.im.to_f64())
    }
    pub fn to_f64(&self) -> Cpx<f64> {
        Cpx::new(self.re.to_f64(), self.im.to_f64())
    }
}
