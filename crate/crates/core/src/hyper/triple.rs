//! Triples (entire, upper, lower) presenting hyperfunctions as a quotient:
//! the summing map into boundary values and the constructive kernel
//! decomposition witnessing its injectivity on the computable class.

use super::symfn::SymFn;
use super::hyperfn::{boundary_value, BoundarySide, Hyperfunction1D};
use super::HyperError;

/// A triple (v, v_plus, v_minus) with v entire, v_plus holomorphic above,
/// v_minus holomorphic below; membership is checked at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triple1D {
    pub entire: SymFn,
    pub upper: SymFn,
    pub lower: SymFn,
}

impl Triple1D {
    pub fn new(entire: SymFn, upper: SymFn, lower: SymFn) -> Result<Self, HyperError> {
        if !entire.is_entire() {
            return Err(HyperError::PoleOnWrongSide { side: "entire component" });
        }
        if !upper.holomorphic_upper() {
            return Err(HyperError::PoleOnWrongSide { side: "upper component" });
        }
        if !lower.holomorphic_lower() {
            return Err(HyperError::PoleOnWrongSide { side: "lower component" });
        }
        Ok(Triple1D { entire, upper, lower })
    }

    pub fn zero() -> Self {
        Triple1D { entire: SymFn::zero(), upper: SymFn::zero(), lower: SymFn::zero() }
    }

    pub fn add(&self, other: &Triple1D) -> Triple1D {
        Triple1D {
            entire: self.entire.add(&other.entire),
            upper: self.upper.add(&other.upper),
            lower: self.lower.add(&other.lower),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entire.is_zero() && self.upper.is_zero() && self.lower.is_zero()
    }
}

/// The summing map `(v, v_+, v_-) -> b_R v + b_{R_+} v_+ + b_{R_-} v_-`.
pub fn s_map(t: &Triple1D) -> Hyperfunction1D {
    let br = boundary_value(BoundarySide::WholeLine, &t.entire).expect("entire by construction");
    let bp = boundary_value(BoundarySide::PlusLine, &t.upper).expect("upper by construction");
    let bm = boundary_value(BoundarySide::MinusLine, &t.lower).expect("lower by construction");
    br.add(&bp).add(&bm)
}

/// Outcome of the kernel decomposition.
#[derive(Clone, Debug)]
#[allow(clippy::large_enum_variant)]
pub enum KernelDecomposition {
    /// The triple lies in the relation subspace: `t = n1 + n2` where
    /// `n1 = (v - u, -(v - u)|_+, 0)` and `n2 = (u, 0, -u|_-)` with the
    /// entire gluing function `u`.
    InKernel { gluing: SymFn, n1: Triple1D, n2: Triple1D },
    /// The class is nonzero; its canonical boundary value is the witness.
    NotInKernel { value: Hyperfunction1D },
}

/// Decides whether the summed boundary value vanishes and, if so, produces
/// the two-generator decomposition; otherwise returns the nonzero class.
/// The gluing function must satisfy `u|_+ = v|_+ + v_+` and `u|_- = -v_-`;
/// on the symbolic class both restrictions determine the function, so the
/// existence test is the equality `v + v_+ = -v_-` with an entire common
/// value.
pub fn kernel_decompose(t: &Triple1D) -> KernelDecomposition {
    let w_plus = t.entire.add(&t.upper);
    let w_minus = t.lower.neg();
    if w_plus != w_minus {
        return KernelDecomposition::NotInKernel { value: s_map(t) };
    }
    let u = w_plus;
    // equality of a function with poles only below and one with poles only
    // above forces entirety
    assert!(u.is_entire(), "matching half-plane representatives are entire");
    let v_minus_u = t.entire.sub(&u);
    let n1 = Triple1D {
        entire: v_minus_u.clone(),
        upper: v_minus_u.neg(),
        lower: SymFn::zero(),
    };
    let n2 = Triple1D { entire: u.clone(), upper: SymFn::zero(), lower: u.neg() };
    debug_assert_eq!(n1.add(&n2), *t);
    debug_assert!(s_map(&n1).is_zero() && s_map(&n2).is_zero());
    KernelDecomposition::InKernel { gluing: u, n1, n2 }
}

#[cfg(test)]
mod tests {
    use super::*;
    use super::super::ecoef::ECoef;
    use super::super::gaussian::GaussRat;
    use super::super::poly::Poly;
    use super::super::symfn::FactoredRational;

    fn upper_pole() -> SymFn {
        // 1/(z+i), holomorphic above
        SymFn::from_rational(FactoredRational::new(Poly::one(), vec![(-GaussRat::i(), 1)]))
    }

    fn lower_pole() -> SymFn {
        // 1/(z-i), holomorphic below
        SymFn::from_rational(FactoredRational::new(Poly::one(), vec![(GaussRat::i(), 1)]))
    }

    #[test]
    fn s_map_kills_both_generator_families() {
        let p = SymFn::from_poly(&Poly::var() + &Poly::constant(ECoef::from_int(3)));
        let gen1 = Triple1D::new(p.clone(), p.neg(), SymFn::zero()).unwrap();
        assert!(s_map(&gen1).is_zero());
        let gen2 = Triple1D::new(p.clone(), SymFn::zero(), p.neg()).unwrap();
        assert!(s_map(&gen2).is_zero());
    }

    #[test]
    fn s_map_nonzero_example() {
        let t = Triple1D::new(SymFn::zero(), upper_pole(), lower_pole()).unwrap();
        let h = s_map(&t);
        assert!(!h.is_zero());
        assert_eq!(h.upper(), &upper_pole());
        assert_eq!(h.lower(), &lower_pole().neg());
    }

    #[test]
    fn kernel_decomposition_of_first_generator() {
        // (p, -p, 0) decomposes with u = 0: n1 is the triple itself
        let p = SymFn::from_poly(Poly::var());
        let t = Triple1D::new(p.clone(), p.neg(), SymFn::zero()).unwrap();
        match kernel_decompose(&t) {
            KernelDecomposition::InKernel { gluing, n1, n2 } => {
                assert!(gluing.is_zero());
                assert_eq!(n1, t);
                assert!(n2.is_zero());
            }
            other => panic!("expected kernel membership, got {other:?}"),
        }
    }

    #[test]
    fn kernel_decomposition_of_second_generator() {
        let p = SymFn::from_poly(Poly::one());
        let t = Triple1D::new(p.clone(), SymFn::zero(), p.neg()).unwrap();
        match kernel_decompose(&t) {
            KernelDecomposition::InKernel { gluing, n1, n2 } => {
                assert_eq!(gluing, p);
                assert!(n1.is_zero());
                assert_eq!(n2, t);
            }
            other => panic!("expected kernel membership, got {other:?}"),
        }
    }

    #[test]
    fn refutation_for_one_sided_pole() {
        let t = Triple1D::new(SymFn::zero(), upper_pole(), SymFn::zero()).unwrap();
        match kernel_decompose(&t) {
            KernelDecomposition::NotInKernel { value } => {
                assert_eq!(value.upper(), &upper_pole());
                assert!(value.lower().is_zero());
            }
            other => panic!("expected refutation, got {other:?}"),
        }
    }

    #[test]
    fn zero_triple() {
        match kernel_decompose(&Triple1D::zero()) {
            KernelDecomposition::InKernel { gluing, n1, n2 } => {
                assert!(gluing.is_zero() && n1.is_zero() && n2.is_zero());
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn membership_constraints_checked() {
        assert!(Triple1D::new(upper_pole(), SymFn::zero(), SymFn::zero()).is_err());
        assert!(Triple1D::new(SymFn::zero(), lower_pole(), SymFn::zero()).is_err());
        assert!(Triple1D::new(SymFn::zero(), SymFn::zero(), upper_pole()).is_err());
    }
}
