//! Exact complex rationals (Gaussian rationals).

use crate::scalar::{format_scalar, Scalar};
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Exact complex number with rational real and imaginary parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GaussRat {
    pub re: Scalar,
    pub im: Scalar,
}

impl GaussRat {
    pub fn new(re: Scalar, im: Scalar) -> Self {
        GaussRat { re, im }
    }

    pub fn from_real(re: Scalar) -> Self {
        GaussRat { re, im: Scalar::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        GaussRat::from_real(crate::scalar::int(n))
    }

    pub fn zero() -> Self {
        GaussRat::default()
    }

    pub fn one() -> Self {
        GaussRat::from_int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussRat { re: Scalar::zero(), im: Scalar::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRat { re: self.re.clone(), im: -self.im.clone() }
    }

    /// Squared modulus (a rational).
    pub fn norm_sq(&self) -> Scalar {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        let n = self.norm_sq();
        GaussRat { re: &self.re / &n, im: -&self.im / &n }
    }

    pub fn pow(&self, mut n: usize) -> Self {
        let mut base = self.clone();
        let mut acc = GaussRat::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        acc
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        (self.re.to_f64().unwrap_or(f64::NAN), self.im.to_f64().unwrap_or(f64::NAN))
    }
}

impl fmt::Debug for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", format_scalar(&self.re));
        }
        if self.re.is_zero() {
            return write!(f, "{}i", format_scalar(&self.im));
        }
        if self.im.is_negative() {
            write!(f, "{}-{}i", format_scalar(&self.re), format_scalar(&-self.im.clone()))
        } else {
            write!(f, "{}+{}i", format_scalar(&self.re), format_scalar(&self.im))
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for GaussRat {
            type Output = GaussRat;
            fn $method(self, rhs: GaussRat) -> GaussRat {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&GaussRat> for GaussRat {
            type Output = GaussRat;
            fn $method(self, rhs: &GaussRat) -> GaussRat {
                (&self).$method(rhs)
            }
        }
        impl $trait<GaussRat> for &GaussRat {
            type Output = GaussRat;
            fn $method(self, rhs: GaussRat) -> GaussRat {
                self.$method(&rhs)
            }
        }
    };
}

impl Add<&GaussRat> for &GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: &GaussRat) -> GaussRat {
        GaussRat { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}
forward_binop!(Add, add);

impl Sub<&GaussRat> for &GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: &GaussRat) -> GaussRat {
        GaussRat { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}
forward_binop!(Sub, sub);

impl Mul<&GaussRat> for &GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: &GaussRat) -> GaussRat {
        GaussRat {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}
forward_binop!(Mul, mul);

impl Div<&GaussRat> for &GaussRat {
    type Output = GaussRat;
    #[allow(clippy::suspicious_arithmetic_impl)] // division as multiplication by the reciprocal
    fn div(self, rhs: &GaussRat) -> GaussRat {
        self * &rhs.recip()
    }
}
forward_binop!(Div, div);

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat { re: -self.re, im: -self.im }
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat { re: -self.re.clone(), im: -self.im.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::frac;

    #[test]
    fn field_arithmetic() {
        let z = GaussRat::new(frac(1, 2), frac(-3, 4));
        let w = GaussRat::new(frac(2, 1), frac(1, 3));
        assert_eq!(&(&z * &w) / &w, z);
        assert_eq!(&z + &(-&z), GaussRat::zero());
        assert_eq!(GaussRat::i().pow(4), GaussRat::one());
        assert_eq!(GaussRat::i().pow(2), -GaussRat::one());
    }

    #[test]
    fn display_forms() {
        assert_eq!(GaussRat::from_int(3).to_string(), "3");
        assert_eq!(GaussRat::i().to_string(), "1i");
        assert_eq!(GaussRat::new(frac(1, 2), frac(-1, 3)).to_string(), "1/2-1/3i");
    }
}
