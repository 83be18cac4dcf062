//! Dense polynomials over the exponential-coefficient ring, with the root
//! operations needed by factored rational functions: evaluation at Gaussian
//! rationals and synthetic division by linear factors.

use super::ecoef::ECoef;
use super::gaussian::GaussRat;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Coefficients in increasing degree, no trailing zeros; empty is the zero
/// polynomial.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Poly {
    coeffs: Vec<ECoef>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::from_coeffs(vec![ECoef::one()])
    }

    pub fn constant(c: ECoef) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The monomial `c z^n`.
    pub fn monomial(c: ECoef, n: usize) -> Self {
        let mut coeffs = vec![ECoef::zero(); n];
        coeffs.push(c);
        Poly::from_coeffs(coeffs)
    }

    /// The variable `z`.
    pub fn var() -> Self {
        Poly::monomial(ECoef::one(), 1)
    }

    /// `z - r` for a Gaussian rational root.
    pub fn linear_factor(r: &GaussRat) -> Self {
        Poly::from_coeffs(vec![ECoef::from_rat(-r), ECoef::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<ECoef>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[ECoef] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> ECoef {
        self.coeffs.get(n).cloned().unwrap_or_else(ECoef::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, z: &GaussRat) -> ECoef {
        let mut acc = ECoef::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc.scale(z) + c;
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, c)| c.scale(&GaussRat::from_int(n as i64)))
            .collect();
        Poly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &ECoef) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Quotient by `z - r` when `r` is a root; `None` otherwise.
    pub fn div_linear_exact(&self, r: &GaussRat) -> Option<Poly> {
        if self.is_zero() {
            return Some(Poly::zero());
        }
        // synthetic division from the top coefficient down
        let mut quotient = vec![ECoef::zero(); self.coeffs.len() - 1];
        let mut carry = ECoef::zero();
        for (n, c) in self.coeffs.iter().enumerate().rev() {
            let value = c + &carry;
            if n == 0 {
                if !value.is_zero() {
                    return None; // nonzero remainder
                }
            } else {
                carry = value.scale(r);
                quotient[n - 1] = value;
            }
        }
        Some(Poly::from_coeffs(quotient))
    }

    /// Division with remainder by a monic polynomial.
    pub fn divrem_monic(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        assert_eq!(
            divisor.coeffs.last().unwrap(),
            &ECoef::one(),
            "divisor must be monic"
        );
        let d = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= d {
            return (Poly::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![ECoef::zero(); rem.len() - d];
        for i in (d..rem.len()).rev() {
            let q = rem[i].clone();
            if q.is_zero() {
                continue;
            }
            quot[i - d] = q.clone();
            for (k, dc) in divisor.coeffs.iter().enumerate() {
                let delta = dc * &q;
                rem[i - d + k] = &rem[i - d + k] - &delta;
            }
        }
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let plain = c.as_rat().is_some();
            match n {
                0 if plain => write!(f, "{c}")?,
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*z")?,
                _ => write!(f, "({c})*z^{n}")?,
            }
        }
        Ok(())
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![ECoef::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = a * b;
                coeffs[i + j] = &coeffs[i + j] + &t;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}
