//! Hyperfunctions on the line at the computable level: classes of pairs
//! (upper representative, lower representative) modulo entire functions,
//! with a unique canonical form, plus the boundary-value operators and the
//! Fourier map from ultrafunctionals.

use super::symfn::SymFn;
use super::ultra::{Domain, Side, Ultrafunctional1D};
use super::HyperError;
use crate::cone::sector::SectorSet1;

/// A hyperfunction as a canonical pair: `upper` holomorphic above (poles
/// strictly below the axis), `lower` holomorphic below; the canonical form
/// moves the entire content of the lower representative into the upper one,
/// so equality of classes is equality of fields.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Hyperfunction1D {
    upper: SymFn,
    lower: SymFn,
}

impl Hyperfunction1D {
    pub fn zero() -> Self {
        Hyperfunction1D::default()
    }

    /// Builds the class of the pair, canonicalizing; the representatives
    /// must be holomorphic on their half-planes.
    pub fn from_pair(upper: SymFn, lower: SymFn) -> Result<Self, HyperError> {
        if !upper.holomorphic_upper() {
            return Err(HyperError::PoleOnWrongSide { side: "upper" });
        }
        if !lower.holomorphic_lower() {
            return Err(HyperError::PoleOnWrongSide { side: "lower" });
        }
        // subtract the entire part of the lower representative from both
        let (entire, proper) = lower.split_entire();
        Ok(Hyperfunction1D {
            upper: upper.sub(&entire),
            lower: SymFn::from_rational(proper),
        })
    }

    pub fn upper(&self) -> &SymFn {
        &self.upper
    }

    pub fn lower(&self) -> &SymFn {
        &self.lower
    }

    pub fn is_zero(&self) -> bool {
        self.upper.is_zero() && self.lower.is_zero()
    }

    pub fn add(&self, other: &Hyperfunction1D) -> Hyperfunction1D {
        Hyperfunction1D::from_pair(self.upper.add(&other.upper), self.lower.add(&other.lower))
            .expect("canonical parts stay on their sides")
    }

    pub fn neg(&self) -> Hyperfunction1D {
        Hyperfunction1D { upper: self.upper.neg(), lower: self.lower.neg() }
    }

    pub fn sub(&self, other: &Hyperfunction1D) -> Hyperfunction1D {
        self.add(&other.neg())
    }

    /// Multiplication by a polynomial acts on both representatives.
    pub fn mul_poly(&self, p: &super::poly::Poly) -> Hyperfunction1D {
        Hyperfunction1D::from_pair(self.upper.mul_poly(p), self.lower.mul_poly(p))
            .expect("polynomial multiplication preserves pole sides")
    }

    /// Derivative acts on both representatives.
    pub fn derivative(&self) -> Hyperfunction1D {
        Hyperfunction1D::from_pair(self.upper.derivative(), self.lower.derivative())
            .expect("differentiation preserves pole sides")
    }
}

/// Side selector for the boundary-value operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundarySide {
    PlusLine,
    MinusLine,
    WholeLine,
}

/// Boundary values: the upper-tube operator embeds above with sign `+`, the
/// lower-tube operator embeds below with sign `-`, and entire functions may
/// enter from either side with the same class.
pub fn boundary_value(side: BoundarySide, v: &SymFn) -> Result<Hyperfunction1D, HyperError> {
    match side {
        BoundarySide::PlusLine => {
            if !v.holomorphic_upper() {
                return Err(HyperError::PoleOnWrongSide { side: "upper tube" });
            }
            Hyperfunction1D::from_pair(v.clone(), SymFn::zero())
        }
        BoundarySide::MinusLine => {
            if !v.holomorphic_lower() {
                return Err(HyperError::PoleOnWrongSide { side: "lower tube" });
            }
            Hyperfunction1D::from_pair(SymFn::zero(), v.neg())
        }
        BoundarySide::WholeLine => {
            if !v.is_entire() {
                return Err(HyperError::PoleOnWrongSide { side: "entire" });
            }
            Hyperfunction1D::from_pair(v.clone(), SymFn::zero())
        }
    }
}

/// The Fourier map on the computable class: split the functional by its
/// carrier pieces, transform each piece over its own proper cone, and sum
/// the boundary values. The decomposition does not affect the class.
pub fn fourier(u: &Ultrafunctional1D) -> Hyperfunction1D {
    let mut out = Hyperfunction1D::zero();
    let masses = Ultrafunctional1D::new(u.masses().to_vec(), Vec::new())
        .expect("point masses carry no decay constraint");
    if !masses.is_zero() {
        let (f, dom) = masses.laplace().expect("the degenerate carrier is proper");
        debug_assert_eq!(dom, Domain::Entire);
        out = out.add(&boundary_value(BoundarySide::WholeLine, &f).expect("entire transform"));
    }
    for side in [Side::Pos, Side::Neg] {
        let segs: Vec<_> = u.segments().iter().filter(|s| s.side == side).cloned().collect();
        if segs.is_empty() {
            continue;
        }
        let part = Ultrafunctional1D::new(Vec::new(), segs).expect("decay checked on entry");
        let carrier =
            if side == Side::Pos { SectorSet1::positive() } else { SectorSet1::negative() };
        let (f, _) = part.laplace_with_carrier(carrier).expect("half-line carriers are proper");
        let bside =
            if side == Side::Pos { BoundarySide::PlusLine } else { BoundarySide::MinusLine };
        out = out.add(&boundary_value(bside, &f).expect("transform is holomorphic on its tube"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use super::super::ecoef::ECoef;
    use super::super::gaussian::GaussRat;
    use super::super::poly::Poly;
    use super::super::symfn::FactoredRational;

    fn rational(num: Poly, poles: Vec<(GaussRat, usize)>) -> SymFn {
        SymFn::from_rational(FactoredRational::new(num, poles))
    }

    #[test]
    fn boundary_value_examples() {
        // b_+ of 1/(z+i): canonical pair (1/(z+i), 0)
        let v = rational(Poly::one(), vec![(-GaussRat::i(), 1)]);
        let b = boundary_value(BoundarySide::PlusLine, &v).unwrap();
        assert_eq!(b.upper(), &v);
        assert!(b.lower().is_zero());

        // b_- of 1/(z-i): canonical pair (0, -1/(z-i))
        let w = rational(Poly::one(), vec![(GaussRat::i(), 1)]);
        let b = boundary_value(BoundarySide::MinusLine, &w).unwrap();
        assert!(b.upper().is_zero());
        assert_eq!(b.lower(), &w.neg());

        // mismatched sides are rejected
        assert!(boundary_value(BoundarySide::PlusLine, &w).is_err());
        assert!(boundary_value(BoundarySide::WholeLine, &w).is_err());
    }

    #[test]
    fn whole_line_consistency() {
        // b_R v = b_+ (v above) = b_- (v below) for entire v
        let v = SymFn::from_poly(&Poly::var() + &Poly::one());
        let br = boundary_value(BoundarySide::WholeLine, &v).unwrap();
        let bp = boundary_value(BoundarySide::PlusLine, &v).unwrap();
        let bm = boundary_value(BoundarySide::MinusLine, &v).unwrap();
        assert_eq!(br, bp);
        assert_eq!(br, bm);
        assert_eq!(br.upper(), &v);
        assert!(br.lower().is_zero());
        // and for an exponential entire function
        let e = SymFn::exp_poly(GaussRat::from_int(2), Poly::one());
        assert_eq!(
            boundary_value(BoundarySide::PlusLine, &e).unwrap(),
            boundary_value(BoundarySide::MinusLine, &e).unwrap()
        );
    }

    #[test]
    fn fourier_of_delta_is_one() {
        let d = Ultrafunctional1D::delta(GaussRat::zero());
        let f = fourier(&d);
        assert_eq!(f.upper(), &SymFn::constant(ECoef::one()));
        assert!(f.lower().is_zero());
    }

    #[test]
    fn fourier_derivative_rule_for_delta() {
        let d = Ultrafunctional1D::delta(GaussRat::zero());
        let lhs = fourier(&d.derivative());
        let minus_i_z = Poly::monomial(ECoef::from_rat(-GaussRat::i()), 1);
        let rhs = fourier(&d).mul_poly(&minus_i_z);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn fourier_splits_mixed_carriers() {
        let u = Ultrafunctional1D::segment(Side::Pos, GaussRat::from_int(1), Poly::one())
            .unwrap()
            .add(&Ultrafunctional1D::segment(Side::Neg, GaussRat::from_int(1), Poly::one()).unwrap());
        let f = fourier(&u);
        // upper part: i/(z+i); lower part: -(-i)/(z-i) = i/(z-i)
        assert_eq!(
            f.upper(),
            &rational(Poly::constant(ECoef::from_rat(GaussRat::i())), vec![(-GaussRat::i(), 1)])
        );
        assert_eq!(
            f.lower(),
            &rational(Poly::constant(ECoef::from_rat(GaussRat::i())), vec![(GaussRat::i(), 1)])
        );
    }
}
