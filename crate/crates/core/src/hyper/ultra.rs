//! One-dimensional ultrafunctionals of the computable class: finite sums of
//! point masses `c delta^(m)_z` and exponential-segment functionals
//! `f -> int p(x) f(x) e^{-lambda|x|} dx` over a half-line. The class is
//! closed under differentiation, polynomial multiplication and real
//! exponential multipliers, and its Laplace transforms land in [`SymFn`].

use super::ecoef::ECoef;
use super::gaussian::GaussRat;
use super::poly::Poly;
use super::symfn::{FactoredRational, SymFn};
use super::HyperError;
use crate::cone::sector::SectorSet1;
use crate::scalar::Scalar;
use num_traits::Signed;

/// The point mass `c * delta^(m)_z : f -> c (-1)^m f^(m)(z)`; the
/// coefficient lives in the exponential-coefficient ring so that real
/// exponential multipliers stay exact at complex locations.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PointMass {
    pub location: GaussRat,
    pub order: usize,
    pub coeff: ECoef,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Side {
    Pos,
    Neg,
}

/// Exponential segment: for `Pos` the functional
/// `f -> int_0^inf p(x) f(x) e^{-lambda x} dx`, for `Neg`
/// `f -> int_{-inf}^0 p(x) f(x) e^{lambda x} dx`; always `Re lambda > 0`.
/// The weight polynomial is in the integration variable.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Segment {
    pub side: Side,
    pub decay: GaussRat,
    pub weight: Poly,
}

/// A finite combination of point masses and segments, canonically sorted
/// and merged.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Ultrafunctional1D {
    masses: Vec<PointMass>,
    segments: Vec<Segment>,
}

/// Carrier of the Laplace transform: the half-plane of convergence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Domain {
    Entire,
    /// `Im z > c` (with `c <= 0`, so the tube over the open upper half-line
    /// is always contained).
    Above(Scalar),
    /// `Im z < c` with `c >= 0`.
    Below(Scalar),
}

impl Ultrafunctional1D {
    pub fn zero() -> Self {
        Ultrafunctional1D::default()
    }

    pub fn new(masses: Vec<PointMass>, segments: Vec<Segment>) -> Result<Self, HyperError> {
        for s in &segments {
            if !s.decay.re.is_positive() {
                return Err(HyperError::NonpositiveDecay { decay: s.decay.clone() });
            }
        }
        let mut u = Ultrafunctional1D { masses, segments };
        u.normalize();
        Ok(u)
    }

    pub fn delta(location: GaussRat) -> Self {
        Ultrafunctional1D::new(
            vec![PointMass { location, order: 0, coeff: ECoef::one() }],
            Vec::new(),
        )
        .expect("point masses have no decay constraint")
    }

    pub fn segment(side: Side, decay: GaussRat, weight: Poly) -> Result<Self, HyperError> {
        Ultrafunctional1D::new(Vec::new(), vec![Segment { side, decay, weight }])
    }

    fn normalize(&mut self) {
        self.masses.sort_by_key(|m| (m.location.clone(), m.order));
        let mut merged: Vec<PointMass> = Vec::with_capacity(self.masses.len());
        for m in self.masses.drain(..) {
            match merged.last_mut() {
                Some(l) if l.location == m.location && l.order == m.order => {
                    l.coeff = &l.coeff + &m.coeff;
                }
                _ => merged.push(m),
            }
        }
        merged.retain(|m| !m.coeff.is_zero());
        self.masses = merged;
        self.segments.sort_by_key(|s| (s.side, s.decay.clone()));
        let mut merged: Vec<Segment> = Vec::with_capacity(self.segments.len());
        for s in self.segments.drain(..) {
            match merged.last_mut() {
                Some(l) if l.side == s.side && l.decay == s.decay => {
                    l.weight = &l.weight + &s.weight;
                }
                _ => merged.push(s),
            }
        }
        merged.retain(|s| !s.weight.is_zero());
        self.segments = merged;
    }

    pub fn masses(&self) -> &[PointMass] {
        &self.masses
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn is_zero(&self) -> bool {
        self.masses.is_empty() && self.segments.is_empty()
    }

    pub fn add(&self, other: &Ultrafunctional1D) -> Ultrafunctional1D {
        let mut masses = self.masses.clone();
        masses.extend(other.masses.iter().cloned());
        let mut segments = self.segments.clone();
        segments.extend(other.segments.iter().cloned());
        let mut u = Ultrafunctional1D { masses, segments };
        u.normalize();
        u
    }

    pub fn neg(&self) -> Ultrafunctional1D {
        Ultrafunctional1D {
            masses: self
                .masses
                .iter()
                .map(|m| PointMass { location: m.location.clone(), order: m.order, coeff: -&m.coeff })
                .collect(),
            segments: self
                .segments
                .iter()
                .map(|s| Segment { side: s.side, decay: s.decay.clone(), weight: -&s.weight })
                .collect(),
        }
    }

    pub fn sub(&self, other: &Ultrafunctional1D) -> Ultrafunctional1D {
        self.add(&other.neg())
    }

    /// The carrier cone determined by the data: `{0}` for point masses,
    /// the closed half-lines for segments.
    pub fn carrier(&self) -> SectorSet1 {
        let mut c = SectorSet1::zero();
        for s in &self.segments {
            match s.side {
                Side::Pos => c.pos = true,
                Side::Neg => c.neg = true,
            }
        }
        c
    }

    /// Value on the exponential `x -> e^{i x zeta}`; errors if a segment
    /// integral diverges at this `zeta`.
    pub fn apply(&self, zeta: &GaussRat) -> Result<ECoef, HyperError> {
        let mut acc = ECoef::zero();
        for m in &self.masses {
            // c (-1)^m d^m/dx^m e^{ix zeta} at z: c (-i zeta)^m e^{iz zeta}
            let base = (-(&GaussRat::i() * zeta)).pow(m.order);
            let factor = &(&GaussRat::i() * &m.location) * zeta;
            acc = &acc + &m.coeff.scale(&base).shift_exponent(&factor);
        }
        for s in &self.segments {
            let value = segment_transform_value(s, zeta)?;
            acc = &acc + &value;
        }
        Ok(acc)
    }

    /// Differentiation: `(du)(f) = -u(f')`. Point masses climb one order;
    /// segments integrate by parts, producing a boundary point mass at 0.
    pub fn derivative(&self) -> Ultrafunctional1D {
        let mut masses: Vec<PointMass> = self
            .masses
            .iter()
            .map(|m| PointMass { location: m.location.clone(), order: m.order + 1, coeff: m.coeff.clone() })
            .collect();
        let mut segments = Vec::with_capacity(self.segments.len());
        for s in &self.segments {
            let lambda = ECoef::from_rat(s.decay.clone());
            match s.side {
                Side::Pos => {
                    // -u(f') = p(0) f(0) + int (p' - lambda p) e^{-lambda x} f
                    masses.push(PointMass {
                        location: GaussRat::zero(),
                        order: 0,
                        coeff: s.weight.eval(&GaussRat::zero()),
                    });
                    let weight = &s.weight.derivative() - &s.weight.scale(&lambda);
                    segments.push(Segment { side: Side::Pos, decay: s.decay.clone(), weight });
                }
                Side::Neg => {
                    // -u(f') = -p(0) f(0) + int (p' + lambda p) e^{lambda x} f
                    masses.push(PointMass {
                        location: GaussRat::zero(),
                        order: 0,
                        coeff: -s.weight.eval(&GaussRat::zero()),
                    });
                    let weight = &s.weight.derivative() + &s.weight.scale(&lambda);
                    segments.push(Segment { side: Side::Neg, decay: s.decay.clone(), weight });
                }
            }
        }
        let mut u = Ultrafunctional1D { masses, segments };
        u.normalize();
        u
    }

    /// Multiplication by a polynomial in the underlying variable:
    /// `(p u)(f) = u(p f)`.
    pub fn mul_poly(&self, p: &Poly) -> Ultrafunctional1D {
        let mut masses = Vec::new();
        for m in &self.masses {
            // u(p f) at a point mass: Leibniz expansion lowers the order
            let mut derivative = p.clone();
            let mut binom: u64 = 1;
            for j in 0..=m.order {
                if j > 0 {
                    binom = binom * (m.order - j + 1) as u64 / j as u64;
                    derivative = derivative.derivative();
                }
                let g = derivative.eval(&m.location);
                if g.is_zero() {
                    continue;
                }
                // coefficient c * (-1)^j * C(m, j) * p^{(j)}(z), order m - j
                let sign = if j % 2 == 0 { 1 } else { -1 };
                let factor = g
                    .scale(&GaussRat::from_int(sign * binom as i64));
                masses.push(PointMass {
                    location: m.location.clone(),
                    order: m.order - j,
                    coeff: &m.coeff * &factor,
                });
            }
        }
        let segments = self
            .segments
            .iter()
            .map(|s| Segment { side: s.side, decay: s.decay.clone(), weight: &s.weight * p })
            .collect();
        let mut u = Ultrafunctional1D { masses, segments };
        u.normalize();
        u
    }

    /// Multiplication by `e^{-eta x}` for real rational `eta`: shifts the
    /// segment decay and rescales point masses by `e^{-z eta}` (kept
    /// symbolic), expanding derivatives of the product.
    pub fn mul_exp(&self, eta: &Scalar) -> Result<Ultrafunctional1D, HyperError> {
        let eta_c = GaussRat::from_real(eta.clone());
        let mut segments = Vec::with_capacity(self.segments.len());
        for s in &self.segments {
            let decay = match s.side {
                // e^{-eta x} e^{-lambda x} = e^{-(lambda + eta) x}
                Side::Pos => &s.decay + &eta_c,
                // e^{-eta x} e^{lambda x} = e^{(lambda - eta) x}
                Side::Neg => &s.decay - &eta_c,
            };
            if !decay.re.is_positive() {
                return Err(HyperError::MultiplierBreaksDecay {
                    decay: s.decay.clone(),
                    eta: eta.clone(),
                });
            }
            segments.push(Segment { side: s.side, decay, weight: s.weight.clone() });
        }
        let mut masses = Vec::new();
        for m in &self.masses {
            // (g u)(f) with g = e^{-eta x}: expand (g f)^{(m)} at z
            // g^{(j)}(z) = (-eta)^j e^{-eta z}
            let shift = &(-&eta_c) * &m.location; // exponent of e^{-eta z}
            let mut binom: u64 = 1;
            for j in 0..=m.order {
                if j > 0 {
                    binom = binom * (m.order - j + 1) as u64 / j as u64;
                }
                let sign = if j % 2 == 0 { 1 } else { -1 };
                let g_j = (-&eta_c).pow(j); // times e^{-eta z} via the shift
                let factor = ECoef::exp_term(
                    &g_j * &GaussRat::from_int(sign * binom as i64),
                    shift.clone(),
                );
                if factor.is_zero() {
                    continue;
                }
                masses.push(PointMass {
                    location: m.location.clone(),
                    order: m.order - j,
                    coeff: &m.coeff * &factor,
                });
            }
        }
        let mut u = Ultrafunctional1D { masses, segments };
        u.normalize();
        Ok(u)
    }

    /// Closed-form Laplace transform valid for any proper carrier that
    /// contains the data's own carrier; the domain annotation is the tube
    /// over the interior of the dual of `carrier`.
    pub fn laplace_with_carrier(&self, carrier: SectorSet1) -> Result<(SymFn, Domain), HyperError> {
        if carrier.is_full() {
            return Err(HyperError::ImproperCarrier);
        }
        let own = self.carrier();
        if (own.pos && !carrier.pos) || (own.neg && !carrier.neg) {
            return Err(HyperError::CarrierTooSmall);
        }
        let mut f = SymFn::zero();
        for m in &self.masses {
            // c (-i z)^m e^{i location z}
            let mut base = Poly::constant(ECoef::one());
            let miz = Poly::monomial(ECoef::from_rat(-GaussRat::i()), 1);
            for _ in 0..m.order {
                base = &base * &miz;
            }
            base = base.scale(&m.coeff);
            f = f.add(&SymFn::exp_poly(m.location.clone(), base));
        }
        for s in &self.segments {
            f = f.add(&segment_transform(s));
        }
        let domain = if carrier.is_zero() {
            Domain::Entire
        } else {
            // min over segments of Re(decay); no segments means the whole
            // tube direction is free and the transform is entire there
            let mut bound: Option<Scalar> = None;
            for s in &self.segments {
                let b = s.decay.re.clone();
                bound = Some(match bound {
                    None => b,
                    Some(cur) => cur.min(b),
                });
            }
            match (carrier.pos, bound) {
                (true, Some(b)) => Domain::Above(-b),
                (true, None) => Domain::Entire,
                (false, Some(b)) => Domain::Below(b),
                (false, None) => Domain::Entire,
            }
        };
        Ok((f, domain))
    }

    /// Laplace transform over the functional's own carrier; errors when the
    /// carrier is the full line (split via the Fourier path instead).
    pub fn laplace(&self) -> Result<(SymFn, Domain), HyperError> {
        self.laplace_with_carrier(self.carrier())
    }

    /// Laplace injectivity at the symbolic level: the transform is zero iff
    /// the functional has no content. Distinct frequencies, powers and pole
    /// orders are linearly independent, so this is a canonical-form check.
    pub fn laplace_vanishes_iff_zero(&self) -> Result<bool, HyperError> {
        let (f, _) = self.laplace()?;
        Ok(f.is_zero() == self.is_zero())
    }
}

/// Closed form of a segment transform: for the positive side,
/// `int_0^inf x^n e^{x(i z - lambda)} dx = n! / (lambda - i z)^{n+1}`,
/// with the pole rewritten over the monic factor `(z + i lambda)`.
fn segment_transform(s: &Segment) -> SymFn {
    let i = GaussRat::i();
    let mut acc = FactoredRational::zero();
    for (n, c) in s.weight.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut factorial = GaussRat::one();
        for k in 1..=n {
            factorial = &factorial * &GaussRat::from_int(k as i64);
        }
        let term = match s.side {
            Side::Pos => {
                // n!/(lambda - iz)^{n+1} = n! i^{n+1} / (z - (-i lambda))^{n+1}
                let root = -&(&i * &s.decay);
                let coeff = &factorial * &i.pow(n + 1);
                FactoredRational::new(
                    Poly::constant(c.scale(&coeff)),
                    vec![(root, n + 1)],
                )
            }
            Side::Neg => {
                // (-1)^n n!/(lambda + iz)^{n+1}
                //   = (-1)^n n! (-i)^{n+1} / (z - (i lambda))^{n+1}
                let root = &i * &s.decay;
                let sign = if n % 2 == 0 { GaussRat::one() } else { -GaussRat::one() };
                let coeff = &(&factorial * &sign) * &(-&i).pow(n + 1);
                FactoredRational::new(
                    Poly::constant(c.scale(&coeff)),
                    vec![(root, n + 1)],
                )
            }
        };
        acc = acc.add(&term);
    }
    SymFn::from_rational(acc)
}

/// Value of a segment integral at a fixed `zeta`, with the exact
/// convergence test.
fn segment_transform_value(s: &Segment, zeta: &GaussRat) -> Result<ECoef, HyperError> {
    let converges = match s.side {
        Side::Pos => &s.decay.re + &zeta.im,
        Side::Neg => &s.decay.re - &zeta.im,
    };
    if !converges.is_positive() {
        return Err(HyperError::DivergentIntegral { zeta: zeta.clone() });
    }
    segment_transform(s)
        .eval(zeta)
        .ok_or(HyperError::DivergentIntegral { zeta: zeta.clone() })
}

/// The multiplier semigroup law on the positive-carrier class:
/// `e^{-eta' x} (e^{-eta x} u) = e^{-(eta + eta') x} u`, as canonical-form
/// equality.
pub fn semigroup_check(
    u: &Ultrafunctional1D,
    eta: &Scalar,
    eta_prime: &Scalar,
) -> Result<bool, HyperError> {
    if !eta.is_positive() || !eta_prime.is_positive() {
        return Err(HyperError::NonpositiveMultiplier);
    }
    if u.carrier().neg {
        return Err(HyperError::CarrierTooSmall);
    }
    let two_step = u.mul_exp(eta)?.mul_exp(eta_prime)?;
    let one_step = u.mul_exp(&(eta + eta_prime))?;
    Ok(two_step == one_step)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    fn seg_pos(decay: i64, weight: &[i64]) -> Ultrafunctional1D {
        Ultrafunctional1D::segment(
            Side::Pos,
            GaussRat::from_int(decay),
            Poly::from_coeffs(weight.iter().map(|&c| ECoef::from_int(c)).collect()),
        )
        .unwrap()
    }

    #[test]
    fn delta_values() {
        let d = Ultrafunctional1D::delta(GaussRat::zero());
        assert_eq!(d.apply(&GaussRat::from_int(5)).unwrap(), ECoef::one());
        let dp = d.derivative();
        // f -> -f'(0) on e^{ix zeta} gives -i zeta
        let z = GaussRat::from_int(3);
        assert_eq!(
            dp.apply(&z).unwrap().as_rat().unwrap(),
            -(&GaussRat::i() * &z)
        );
    }

    #[test]
    fn segment_value_example() {
        // int_0^inf e^{-x} e^{ix zeta} dx = 1/(1 - i zeta); at zeta = i: 1/2
        let u = seg_pos(1, &[1]);
        assert_eq!(
            u.apply(&GaussRat::i()).unwrap().as_rat().unwrap(),
            GaussRat::new(frac(1, 2), int(0))
        );
        // divergence below the abscissa
        assert!(u.apply(&GaussRat::new(int(0), int(-1))).is_err());
        assert!(u.apply(&GaussRat::new(int(0), int(-2))).is_err());
    }

    #[test]
    fn derivative_matches_multiplication_by_minus_i_zeta() {
        let u = seg_pos(2, &[1, 3]).add(&Ultrafunctional1D::delta(GaussRat::zero()));
        let du = u.derivative();
        for z in [GaussRat::from_int(0), GaussRat::from_int(2), GaussRat::i()] {
            let lhs = du.apply(&z).unwrap();
            let rhs = u.apply(&z).unwrap().scale(&-(&GaussRat::i() * &z));
            assert_eq!(lhs, rhs, "at zeta = {z}");
        }
    }

    #[test]
    fn laplace_of_delta_and_segment() {
        let d = Ultrafunctional1D::delta(GaussRat::zero());
        let (f, dom) = d.laplace().unwrap();
        assert_eq!(f, SymFn::constant(ECoef::one()));
        assert_eq!(dom, Domain::Entire);

        let u = seg_pos(1, &[1]);
        let (f, dom) = u.laplace().unwrap();
        // 1/(1 - iz) = i/(z + i): pole at -i
        assert!(f.holomorphic_upper());
        assert_eq!(dom, Domain::Above(int(-1)));
        let v = f.eval(&GaussRat::i()).unwrap().as_rat().unwrap();
        assert_eq!(v, GaussRat::new(frac(1, 2), int(0)));
    }

    #[test]
    fn laplace_agrees_with_apply_on_samples() {
        let u = seg_pos(1, &[0, 1]).add(&seg_pos(3, &[2])).add(
            &Ultrafunctional1D::delta(GaussRat::from_int(1)).derivative(),
        );
        let (f, _) = u.laplace().unwrap();
        let samples = [
            GaussRat::zero(),
            GaussRat::from_int(1),
            GaussRat::i(),
            GaussRat::new(int(2), int(3)),
            GaussRat::new(frac(-1, 2), frac(1, 4)),
        ];
        for z in samples {
            assert_eq!(f.eval(&z).unwrap(), u.apply(&z).unwrap(), "at zeta = {z}");
        }
    }

    #[test]
    fn improper_carrier_rejected() {
        let both = seg_pos(1, &[1]).add(
            &Ultrafunctional1D::segment(Side::Neg, GaussRat::from_int(1), Poly::one()).unwrap(),
        );
        assert!(matches!(both.laplace(), Err(HyperError::ImproperCarrier)));
    }

    #[test]
    fn boundary_decay_rejected() {
        // Re(lambda) = 0 is outside the class
        let err = Ultrafunctional1D::segment(Side::Pos, GaussRat::i(), Poly::one());
        assert!(matches!(err, Err(HyperError::NonpositiveDecay { .. })));
        let err = Ultrafunctional1D::segment(Side::Neg, GaussRat::from_int(-1), Poly::one());
        assert!(matches!(err, Err(HyperError::NonpositiveDecay { .. })));
    }

    #[test]
    fn restriction_compatibility() {
        // carried by {0} inside the positive half-line: same symbolic
        // transform, smaller domain annotation
        let d = Ultrafunctional1D::delta(GaussRat::from_int(2));
        let (f0, d0) = d.laplace().unwrap();
        let (f1, d1) = d.laplace_with_carrier(SectorSet1::positive()).unwrap();
        assert_eq!(f0, f1);
        assert_eq!(d0, Domain::Entire);
        assert_eq!(d1, Domain::Entire);
        let mixed = d.add(&seg_pos(2, &[1]));
        let (f2, d2) = mixed.laplace().unwrap();
        assert_eq!(d2, Domain::Above(int(-2)));
        let (f3, _) = mixed.laplace_with_carrier(SectorSet1::positive()).unwrap();
        assert_eq!(f2, f3);
    }

    #[test]
    fn mul_exp_shifts_decay() {
        let u = seg_pos(2, &[1]);
        let v = u.mul_exp(&int(1)).unwrap();
        assert_eq!(v, seg_pos(3, &[1]));
        // verified against apply at a sample point
        let z = GaussRat::new(int(1), int(1));
        let direct = v.apply(&z).unwrap();
        // e^{-x} u applied to e^{ixz} equals u applied at z + i
        let shifted = u.apply(&(&z + &GaussRat::i())).unwrap();
        assert_eq!(direct, shifted);
        // decay violations are rejected on the negative side
        let w = Ultrafunctional1D::segment(Side::Neg, GaussRat::from_int(1), Poly::one()).unwrap();
        assert!(w.mul_exp(&int(2)).is_err());
    }

    #[test]
    fn mul_exp_on_point_masses_keeps_symbolic_exponent() {
        let d1 = Ultrafunctional1D::delta(GaussRat::from_int(1));
        let v = d1.mul_exp(&int(1)).unwrap();
        // coefficient e^{-1}, location unchanged
        assert_eq!(v.masses().len(), 1);
        assert_eq!(
            v.masses()[0].coeff,
            ECoef::exp_term(GaussRat::one(), GaussRat::from_int(-1))
        );
        // derivative orders mix under the product rule
        let dp = d1.derivative().mul_exp(&int(1)).unwrap();
        assert_eq!(dp.masses().len(), 2);
    }

    #[test]
    fn semigroup_law() {
        let u = seg_pos(1, &[1, 1])
            .add(&Ultrafunctional1D::delta(GaussRat::from_int(2)).derivative());
        assert!(semigroup_check(&u, &frac(1, 2), &frac(1, 3)).unwrap());
        assert!(semigroup_check(&u, &int(2), &int(5)).unwrap());
    }

    #[test]
    fn laplace_injectivity() {
        assert!(Ultrafunctional1D::zero().laplace_vanishes_iff_zero().unwrap());
        let d = Ultrafunctional1D::delta(GaussRat::from_int(1));
        let cancel = d.sub(&d);
        assert!(cancel.is_zero());
        assert!(cancel.laplace_vanishes_iff_zero().unwrap());
        let distinct = Ultrafunctional1D::delta(GaussRat::from_int(1))
            .sub(&Ultrafunctional1D::delta(GaussRat::from_int(2)));
        assert!(!distinct.is_zero());
        assert!(distinct.laplace_vanishes_iff_zero().unwrap());
    }

    #[test]
    fn mul_poly_on_masses_and_segments() {
        // x * delta'_0 on f: delta'_0(x f) = -(x f)'(0) = -f(0)
        let dp = Ultrafunctional1D::delta(GaussRat::zero()).derivative();
        let xdp = dp.mul_poly(&Poly::var());
        let z = GaussRat::from_int(4);
        assert_eq!(xdp.apply(&z).unwrap(), ECoef::from_int(-1));
        // segments multiply the weight
        let u = seg_pos(1, &[1]).mul_poly(&Poly::var());
        assert_eq!(u, seg_pos(1, &[0, 1]));
    }
}
