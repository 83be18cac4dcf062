//! The coefficient ring for the symbolic functional calculus: finite sums
//! `sum c_j e^{q_j}` with Gaussian-rational `c_j` and exponents `q_j`.
//!
//! Multiplying a functional by `e^{-<., eta>}` scales a point mass at `z`
//! by `e^{-z eta}`, which is transcendental for `z eta != 0`; carrying the
//! exponent symbolically keeps the class exact and closed. Distinct
//! exponents give linearly independent values (Lindemann–Weierstrass), so
//! the canonical form decides equality.

use super::gaussian::GaussRat;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Canonical finite sum `sum c e^q`: exponents strictly increasing, no zero
/// coefficients; the empty sum is zero.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ECoef {
    terms: Vec<(GaussRat, GaussRat)>, // (coefficient, exponent)
}

impl ECoef {
    pub fn zero() -> Self {
        ECoef::default()
    }

    pub fn one() -> Self {
        ECoef::from_rat(GaussRat::one())
    }

    /// Embeds a Gaussian rational as `c e^0`.
    pub fn from_rat(c: GaussRat) -> Self {
        ECoef::from_terms(vec![(c, GaussRat::zero())])
    }

    pub fn from_int(n: i64) -> Self {
        ECoef::from_rat(GaussRat::from_int(n))
    }

    /// The element `c e^q`.
    pub fn exp_term(c: GaussRat, q: GaussRat) -> Self {
        ECoef::from_terms(vec![(c, q)])
    }

    fn from_terms(mut terms: Vec<(GaussRat, GaussRat)>) -> Self {
        terms.sort_by(|a, b| a.1.cmp(&b.1));
        let mut out: Vec<(GaussRat, GaussRat)> = Vec::with_capacity(terms.len());
        for (c, q) in terms {
            match out.last_mut() {
                Some((lc, lq)) if *lq == q => {
                    *lc = &*lc + &c;
                }
                _ => out.push((c, q)),
            }
        }
        out.retain(|(c, _)| !c.is_zero());
        ECoef { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(GaussRat, GaussRat)] {
        &self.terms
    }

    /// The plain Gaussian rational, when no genuine exponential is present.
    pub fn as_rat(&self) -> Option<GaussRat> {
        match self.terms.len() {
            0 => Some(GaussRat::zero()),
            1 if self.terms[0].1.is_zero() => Some(self.terms[0].0.clone()),
            _ => None,
        }
    }

    pub fn scale(&self, c: &GaussRat) -> Self {
        if c.is_zero() {
            return ECoef::zero();
        }
        ECoef { terms: self.terms.iter().map(|(tc, tq)| (tc * c, tq.clone())).collect() }
    }

    /// Multiplies by the unit `e^q`.
    pub fn shift_exponent(&self, q: &GaussRat) -> Self {
        ECoef::from_terms(self.terms.iter().map(|(tc, tq)| (tc.clone(), tq + q)).collect())
    }

    /// Division by a Gaussian rational.
    pub fn div_rat(&self, c: &GaussRat) -> Self {
        self.scale(&c.recip())
    }

    /// Numeric value, for the floating-point cross-check oracles only.
    pub fn to_c64(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (c, q) in &self.terms {
            let (cr, ci) = c.to_f64_pair();
            let (qr, qi) = q.to_f64_pair();
            let m = qr.exp();
            let (er, ei) = (m * qi.cos(), m * qi.sin());
            re += cr * er - ci * ei;
            im += cr * ei + ci * er;
        }
        (re, im)
    }
}

impl fmt::Debug for ECoef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for ECoef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (c, q)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if q.is_zero() {
                write!(f, "{c}")?;
            } else {
                write!(f, "({c})*e^({q})")?;
            }
        }
        Ok(())
    }
}

impl Add<&ECoef> for &ECoef {
    type Output = ECoef;
    fn add(self, rhs: &ECoef) -> ECoef {
        let mut terms = self.terms.clone();
        terms.extend(rhs.terms.iter().cloned());
        ECoef::from_terms(terms)
    }
}

impl Sub<&ECoef> for &ECoef {
    type Output = ECoef;
    fn sub(self, rhs: &ECoef) -> ECoef {
        self + &(-rhs)
    }
}

impl Mul<&ECoef> for &ECoef {
    type Output = ECoef;
    fn mul(self, rhs: &ECoef) -> ECoef {
        let mut terms = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (ac, aq) in &self.terms {
            for (bc, bq) in &rhs.terms {
                terms.push((ac * bc, aq + bq));
            }
        }
        ECoef::from_terms(terms)
    }
}

impl Neg for &ECoef {
    type Output = ECoef;
    fn neg(self) -> ECoef {
        ECoef { terms: self.terms.iter().map(|(c, q)| (-c, q.clone())).collect() }
    }
}

impl Add for ECoef {
    type Output = ECoef;
    fn add(self, rhs: ECoef) -> ECoef {
        &self + &rhs
    }
}

impl Sub for ECoef {
    type Output = ECoef;
    fn sub(self, rhs: ECoef) -> ECoef {
        &self - &rhs
    }
}

impl Mul for ECoef {
    type Output = ECoef;
    fn mul(self, rhs: ECoef) -> ECoef {
        &self * &rhs
    }
}

impl Neg for ECoef {
    type Output = ECoef;
    fn neg(self) -> ECoef {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(c: i64, qre: i64) -> ECoef {
        ECoef::exp_term(GaussRat::from_int(c), GaussRat::from_int(qre))
    }

    #[test]
    fn exponent_addition_on_multiplication() {
        let a = e(2, 1);
        let b = e(3, 2);
        let p = &a * &b;
        assert_eq!(p, e(6, 3));
    }

    #[test]
    fn cancellation() {
        let a = e(2, 1);
        let b = e(-2, 1);
        assert!((&a + &b).is_zero());
        let mixed = &e(1, 0) + &e(1, 5);
        assert!(mixed.as_rat().is_none());
        assert_eq!(e(7, 0).as_rat(), Some(GaussRat::from_int(7)));
    }

    #[test]
    fn numeric_evaluation() {
        let x = ECoef::exp_term(GaussRat::from_int(2), GaussRat::from_int(1));
        let (re, im) = x.to_c64();
        assert!((re - 2.0 * 1.0f64.exp()).abs() < 1e-12);
        assert!(im.abs() < 1e-12);
    }
}
