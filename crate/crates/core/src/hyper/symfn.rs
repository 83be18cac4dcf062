//! The closed symbolic function class: rational functions with Gaussian-
//! rational poles kept in factored form, plus exponential polynomials
//! `p(z) e^{i w z}`. This class contains every Laplace transform produced
//! by the functional calculus and is closed under addition, polynomial
//! multiplication and differentiation; canonical forms make equality
//! decidable.

use super::ecoef::ECoef;
use super::gaussian::GaussRat;
use super::poly::Poly;
use num_traits::Signed;
use std::fmt;

/// Rational function `num / prod (z - r)^m` with the denominator split
/// into linear factors; reduced (no pole divides the numerator) and the
/// denominator monic by construction.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FactoredRational {
    num: Poly,
    poles: Vec<(GaussRat, usize)>, // sorted by root, multiplicities >= 1
}

impl FactoredRational {
    pub fn zero() -> Self {
        FactoredRational::default()
    }

    pub fn from_poly(num: Poly) -> Self {
        FactoredRational { num, poles: Vec::new() }
    }

    pub fn new(num: Poly, poles: Vec<(GaussRat, usize)>) -> Self {
        let mut f = FactoredRational { num, poles };
        f.normalize();
        f
    }

    fn normalize(&mut self) {
        self.poles.retain(|(_, m)| *m > 0);
        self.poles.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
        // merge equal roots
        let mut merged: Vec<(GaussRat, usize)> = Vec::with_capacity(self.poles.len());
        for (r, m) in self.poles.drain(..) {
            match merged.last_mut() {
                Some((lr, lm)) if *lr == r => *lm += m,
                _ => merged.push((r, m)),
            }
        }
        self.poles = merged;
        if self.num.is_zero() {
            self.poles.clear();
            return;
        }
        // cancel factors dividing the numerator
        let mut i = 0;
        while i < self.poles.len() {
            let r = self.poles[i].0.clone();
            while self.poles[i].1 > 0 {
                match self.num.div_linear_exact(&r) {
                    Some(q) => {
                        self.num = q;
                        self.poles[i].1 -= 1;
                    }
                    None => break,
                }
            }
            if self.poles[i].1 == 0 {
                self.poles.remove(i);
            } else {
                i += 1;
            }
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn poles(&self) -> &[(GaussRat, usize)] {
        &self.poles
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.poles.is_empty()
    }

    pub fn denominator_poly(&self) -> Poly {
        let mut d = Poly::one();
        for (r, m) in &self.poles {
            let f = Poly::linear_factor(r);
            for _ in 0..*m {
                d = &d * &f;
            }
        }
        d
    }

    pub fn add(&self, other: &FactoredRational) -> FactoredRational {
        // common denominator with per-root maximum multiplicity
        let mut roots: Vec<(GaussRat, usize)> = self.poles.clone();
        for (r, m) in &other.poles {
            match roots.iter_mut().find(|(q, _)| q == r) {
                Some((_, mm)) => *mm = (*mm).max(*m),
                None => roots.push((r.clone(), *m)),
            }
        }
        let lift = |f: &FactoredRational| -> Poly {
            let mut n = f.num.clone();
            for (r, m) in &roots {
                let have = f.poles.iter().find(|(q, _)| q == r).map_or(0, |(_, mm)| *mm);
                let factor = Poly::linear_factor(r);
                for _ in have..*m {
                    n = &n * &factor;
                }
            }
            n
        };
        let num = &lift(self) + &lift(other);
        FactoredRational::new(num, roots)
    }

    pub fn neg(&self) -> FactoredRational {
        FactoredRational { num: -&self.num, poles: self.poles.clone() }
    }

    pub fn sub(&self, other: &FactoredRational) -> FactoredRational {
        self.add(&other.neg())
    }

    pub fn mul_poly(&self, p: &Poly) -> FactoredRational {
        FactoredRational::new(&self.num * p, self.poles.clone())
    }

    pub fn scale(&self, c: &ECoef) -> FactoredRational {
        FactoredRational::new(self.num.scale(c), self.poles.clone())
    }

    pub fn derivative(&self) -> FactoredRational {
        if self.poles.is_empty() {
            return FactoredRational::from_poly(self.num.derivative());
        }
        // d/dz [num / prod (z-r)^m]
        //   = [num' prod (z-r) - num sum_i m_i prod_{j!=i} (z-r_j)]
        //     / prod (z-r)^{m+1}
        let mut all = Poly::one();
        for (r, _) in &self.poles {
            all = &all * &Poly::linear_factor(r);
        }
        let mut correction = Poly::zero();
        for (i, (_, m)) in self.poles.iter().enumerate() {
            let mut partial = Poly::constant(ECoef::from_int(*m as i64));
            for (j, (rj, _)) in self.poles.iter().enumerate() {
                if j != i {
                    partial = &partial * &Poly::linear_factor(rj);
                }
            }
            correction = &correction + &partial;
        }
        let num = &(&self.num.derivative() * &all) - &(&self.num * &correction);
        let poles = self.poles.iter().map(|(r, m)| (r.clone(), m + 1)).collect();
        FactoredRational::new(num, poles)
    }

    /// Evaluates away from the poles.
    pub fn eval(&self, z: &GaussRat) -> Option<ECoef> {
        let mut den = GaussRat::one();
        for (r, m) in &self.poles {
            let d = z - r;
            if d.is_zero() {
                return None;
            }
            den = &den * &d.pow(*m);
        }
        Some(self.num.eval(z).div_rat(&den))
    }

    /// Splits into the polynomial part and the strictly proper remainder.
    pub fn split_entire(&self) -> (Poly, FactoredRational) {
        if self.poles.is_empty() {
            return (self.num.clone(), FactoredRational::zero());
        }
        let den = self.denominator_poly();
        let (q, r) = self.num.divrem_monic(&den);
        (q, FactoredRational::new(r, self.poles.clone()))
    }

    /// True iff every pole satisfies the sign predicate on its imaginary
    /// part (-1: strictly below the axis, +1: strictly above).
    fn poles_on_side(&self, sign: i8) -> bool {
        self.poles.iter().all(|(r, _)| match sign {
            -1 => r.im.is_negative(),
            1 => r.im.is_positive(),
            _ => unreachable!(),
        })
    }
}

impl fmt::Debug for FactoredRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FactoredRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poles.is_empty() {
            return write!(f, "{}", self.num);
        }
        write!(f, "[{}] / [", self.num)?;
        for (i, (r, m)) in self.poles.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if *m == 1 {
                write!(f, "(z-({r}))")?;
            } else {
                write!(f, "(z-({r}))^{m}")?;
            }
        }
        write!(f, "]")
    }
}

/// One exponential-polynomial term `poly(z) e^{i w z}` with `w != 0`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExpTerm {
    pub freq: GaussRat,
    pub poly: Poly,
}

/// A member of the symbolic class: a factored rational part plus
/// exponential-polynomial terms with distinct nonzero frequencies.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SymFn {
    rat: FactoredRational,
    exp: Vec<ExpTerm>,
}

impl SymFn {
    pub fn zero() -> Self {
        SymFn::default()
    }

    pub fn from_rational(rat: FactoredRational) -> Self {
        SymFn { rat, exp: Vec::new() }
    }

    pub fn from_poly(p: Poly) -> Self {
        SymFn::from_rational(FactoredRational::from_poly(p))
    }

    pub fn constant(c: ECoef) -> Self {
        SymFn::from_poly(Poly::constant(c))
    }

    /// `poly(z) e^{i w z}`; `w = 0` folds into the rational part.
    pub fn exp_poly(freq: GaussRat, poly: Poly) -> Self {
        if freq.is_zero() {
            return SymFn::from_poly(poly);
        }
        if poly.is_zero() {
            return SymFn::zero();
        }
        SymFn { rat: FactoredRational::zero(), exp: vec![ExpTerm { freq, poly }] }
    }

    fn from_parts(rat: FactoredRational, mut exp: Vec<ExpTerm>) -> Self {
        exp.sort_by(|a, b| a.freq.cmp(&b.freq));
        let mut merged: Vec<ExpTerm> = Vec::with_capacity(exp.len());
        for t in exp {
            match merged.last_mut() {
                Some(last) if last.freq == t.freq => last.poly = &last.poly + &t.poly,
                _ => merged.push(t),
            }
        }
        merged.retain(|t| !t.poly.is_zero() && !t.freq.is_zero());
        SymFn { rat, exp: merged }
    }

    pub fn rational_part(&self) -> &FactoredRational {
        &self.rat
    }

    pub fn exp_terms(&self) -> &[ExpTerm] {
        &self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.exp.is_empty()
    }

    /// No poles anywhere: polynomial plus exponential polynomial.
    pub fn is_entire(&self) -> bool {
        self.rat.is_polynomial()
    }

    /// Holomorphic on the open upper half-plane per the class invariant:
    /// all poles strictly below the real axis.
    pub fn holomorphic_upper(&self) -> bool {
        self.rat.poles_on_side(-1)
    }

    pub fn holomorphic_lower(&self) -> bool {
        self.rat.poles_on_side(1)
    }

    pub fn add(&self, other: &SymFn) -> SymFn {
        let mut exp = self.exp.clone();
        exp.extend(other.exp.iter().cloned());
        SymFn::from_parts(self.rat.add(&other.rat), exp)
    }

    pub fn neg(&self) -> SymFn {
        SymFn {
            rat: self.rat.neg(),
            exp: self.exp.iter().map(|t| ExpTerm { freq: t.freq.clone(), poly: -&t.poly }).collect(),
        }
    }

    pub fn sub(&self, other: &SymFn) -> SymFn {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &ECoef) -> SymFn {
        SymFn::from_parts(
            self.rat.scale(c),
            self.exp.iter().map(|t| ExpTerm { freq: t.freq.clone(), poly: t.poly.scale(c) }).collect(),
        )
    }

    pub fn mul_poly(&self, p: &Poly) -> SymFn {
        SymFn::from_parts(
            self.rat.mul_poly(p),
            self.exp.iter().map(|t| ExpTerm { freq: t.freq.clone(), poly: &t.poly * p }).collect(),
        )
    }

    pub fn derivative(&self) -> SymFn {
        let mut exp = Vec::with_capacity(self.exp.len());
        for t in &self.exp {
            // (p e^{iwz})' = (p' + iw p) e^{iwz}
            let iw = ECoef::from_rat(&GaussRat::i() * &t.freq);
            let poly = &t.poly.derivative() + &t.poly.scale(&iw);
            exp.push(ExpTerm { freq: t.freq.clone(), poly });
        }
        SymFn::from_parts(self.rat.derivative(), exp)
    }

    /// Evaluates at `z` (away from poles); exponentials contribute
    /// symbolic factors `e^{i w z}`.
    pub fn eval(&self, z: &GaussRat) -> Option<ECoef> {
        let mut acc = self.rat.eval(z)?;
        for t in &self.exp {
            let q = &(&GaussRat::i() * &t.freq) * z;
            acc = &acc + &t.poly.eval(z).shift_exponent(&q);
        }
        Some(acc)
    }

    /// Splits into the entire part (polynomial + exponential terms) and the
    /// strictly proper rational remainder.
    pub fn split_entire(&self) -> (SymFn, FactoredRational) {
        let (poly, proper) = self.rat.split_entire();
        (SymFn::from_parts(FactoredRational::from_poly(poly), self.exp.clone()), proper)
    }
}

impl fmt::Debug for SymFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SymFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        if !self.rat.is_zero() {
            write!(f, "{}", self.rat)?;
            first = false;
        }
        for t in &self.exp {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})*e^(i({})z)", t.poly, t.freq)?;
        }
        Ok(())
    }
}
