//! Weight-function geometry: evaluable weights built from a cone and the
//! scale parameters A, B, plus the exact decision procedure for whether
//! `e^{-l}` lies in the associated weighted space.
//!
//! The weight exponent on the real axis is the piecewise-linear
//! 1-homogeneous function `h(x) = -l(x) + |x|/A - B * delta_U(x)`; `e^{-l}`
//! has finite weighted sup-norm iff `h <= 0` everywhere. The decision runs
//! one exact LP per (convex piece of U) x (linearity region of |x|), using
//! the support-function form `delta_C(x) = max { w.x : |w|_1 <= 1, w in C° }`
//! whose maximum ranges over the vertices of a polytope.

use super::convex::{cone_from_inequalities, BilinearForm, ConvexCone};
use super::sector::SectorSet;
use super::ConeError;
use crate::lp::{LpProblem, LpResult, Rel};
use crate::scalar::{dot, inf_norm, int, Scalar};
use num_traits::{Signed, Zero};

/// A closed cone in either representation, as used by weights and distance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConeRep {
    Convex(ConvexCone),
    Sector(SectorSet),
}

impl ConeRep {
    pub fn dim(&self) -> usize {
        match self {
            ConeRep::Convex(c) => c.dim(),
            ConeRep::Sector(s) => s.dim(),
        }
    }

    pub fn distance(&self, x: &[Scalar]) -> Scalar {
        match self {
            ConeRep::Convex(c) => c.distance(x),
            ConeRep::Sector(s) => s.distance(x),
        }
    }

    pub fn is_proper(&self) -> bool {
        match self {
            ConeRep::Convex(c) => c.is_proper(),
            ConeRep::Sector(s) => s.is_proper(),
        }
    }

    /// Convex polyhedral pieces whose union is the cone.
    pub fn convex_pieces(&self) -> Vec<ConvexCone> {
        match self {
            ConeRep::Convex(c) => vec![c.clone()],
            ConeRep::Sector(s) => {
                let pieces = s.convex_pieces();
                if pieces.is_empty() {
                    vec![ConvexCone::zero(s.dim())]
                } else {
                    pieces
                }
            }
        }
    }
}

/// Parameters (U, A, B) of a weighted norm; A and B must be positive.
#[derive(Clone, Debug)]
pub struct WeightSpec {
    cone: ConeRep,
    a: Scalar,
    b: Scalar,
}

impl WeightSpec {
    pub fn new(cone: ConeRep, a: Scalar, b: Scalar) -> Result<Self, ConeError> {
        if !a.is_positive() || !b.is_positive() {
            return Err(ConeError::InvalidForm("weight parameters A, B must be positive".into()));
        }
        Ok(WeightSpec { cone, a, b })
    }

    pub fn cone(&self) -> &ConeRep {
        &self.cone
    }

    pub fn a(&self) -> &Scalar {
        &self.a
    }

    pub fn b(&self) -> &Scalar {
        &self.b
    }

    /// The weight exponent `rho(x + iy) = -|x/A| + B delta_U(x) + B |y|`,
    /// so that the norm bound reads `|f(z)| <= C e^{rho(z)}`.
    pub fn rho(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        -inf_norm(x) / &self.a + &self.b * self.cone.distance(x) + &self.b * inf_norm(y)
    }

    /// The real-axis exponent of `e^{-l(z)}` against the weight:
    /// `h(x) = -l(x) + |x|/A - B delta_U(x)`.
    pub fn h(&self, l: &[Scalar], x: &[Scalar]) -> Scalar {
        -dot(l, x) + inf_norm(x) / &self.a - &self.b * self.cone.distance(x)
    }
}

/// One exact LP certificate: the maximum of `h` over a linearity region of
/// the norm, relative to one convex piece of the cone.
#[derive(Clone, Debug)]
pub struct RegionCertificate {
    /// Index of the convex piece of U.
    pub piece: usize,
    /// Which coordinate attains the norm, and with which sign.
    pub coordinate: usize,
    pub sign: i8,
    /// Exact maximum of the piece-relative exponent over the region,
    /// normalized to the unit sphere.
    pub max_value: Scalar,
}

/// Outcome of the membership decision, with a replayable certificate.
#[derive(Clone, Debug)]
pub enum ExpMembership {
    /// `h <= 0` on every region; the per-region maxima are listed.
    Bounded { certificates: Vec<RegionCertificate> },
    /// A direction on the unit sphere with `h(direction) > 0`.
    Unbounded { direction: Vec<Scalar>, value: Scalar },
}

impl ExpMembership {
    pub fn is_member(&self) -> bool {
        matches!(self, ExpMembership::Bounded { .. })
    }
}

/// Vertices of the polytope `{w : |w|_1 <= 1, g.w <= 0 for g in gens}`,
/// the support set of `delta_C` for the convex cone with those generators.
fn distance_support_vertices(dim: usize, gens: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    // Homogenize: cone over the polytope in (w, t), then scale t to 1.
    let mut ineqs: Vec<Vec<Scalar>> = Vec::new();
    for s in 0..(1usize << dim) {
        // t - s.w >= 0
        let mut row = vec![Scalar::zero(); dim + 1];
        for i in 0..dim {
            row[i] = if s >> i & 1 == 1 { int(1) } else { int(-1) };
        }
        row[dim] = int(1);
        ineqs.push(row);
    }
    for g in gens {
        let mut row: Vec<Scalar> = g.iter().map(|x| -x.clone()).collect();
        row.push(Scalar::zero());
        ineqs.push(row);
    }
    let hom = cone_from_inequalities(dim + 1, &ineqs);
    let mut vertices = Vec::new();
    for v in hom {
        let t = &v[dim];
        if t.is_positive() {
            vertices.push((0..dim).map(|i| &v[i] / t).collect());
        }
        // t = 0 generators would be recession directions; the polytope is
        // bounded, so they can only be zero and are filtered upstream.
    }
    vertices
}

/// Decides finiteness of `sup_z |e^{-l(z)}| / e^{rho(z)}`, i.e. whether
/// `h(x) = -l(x) + |x|/A - B delta_U(x)` is nonpositive everywhere.
/// Certificates list the exact per-region maxima; failures return a
/// violating direction on the unit sphere.
pub fn exp_membership(l: &[Scalar], w: &WeightSpec) -> Result<ExpMembership, ConeError> {
    let dim = w.cone().dim();
    if l.len() != dim {
        return Err(ConeError::DimensionMismatch { left: l.len(), right: dim });
    }
    let pieces = w.cone().convex_pieces();
    let mut certificates = Vec::new();
    for (pi, piece) in pieces.iter().enumerate() {
        let support = distance_support_vertices(dim, piece.generators());
        for coord in 0..dim {
            for sign in [1i8, -1] {
                // region: s*x_c >= |x_i| for all i, normalized by s*x_c <= 1;
                // on it h_piece(x) = s*x_c/A - l.x - B max_r w_r.x.
                let mut p = LpProblem::maximize({
                    // variables: x_1..x_dim (free), t (free); objective t
                    let mut obj = vec![Scalar::zero(); dim + 1];
                    obj[dim] = int(1);
                    obj
                });
                p.set_all_free();
                for i in 0..dim {
                    if i == coord {
                        continue;
                    }
                    for s2 in [1i64, -1] {
                        // s*x_c - s2*x_i >= 0
                        let mut row = vec![Scalar::zero(); dim + 1];
                        row[coord] = int(sign as i64);
                        row[i] = int(-s2);
                        p.add_constraint(row, Rel::Ge, Scalar::zero());
                    }
                }
                {
                    let mut row = vec![Scalar::zero(); dim + 1];
                    row[coord] = int(sign as i64);
                    p.add_constraint(row.clone(), Rel::Ge, Scalar::zero());
                    p.add_constraint(row, Rel::Le, int(1));
                }
                // The support polytope always contains w = 0, so there is at
                // least one vertex and delta never drops out of the system.
                debug_assert!(!support.is_empty());
                for vert in &support {
                    // t <= s*x_c/A - l.x - B*(w_r.x)
                    let mut row = vec![Scalar::zero(); dim + 1];
                    row[dim] = int(1);
                    row[coord] -= Scalar::from_integer((sign as i64).into()) / w.a();
                    for i in 0..dim {
                        row[i] += &l[i] + w.b() * &vert[i];
                    }
                    p.add_constraint(row, Rel::Le, Scalar::zero());
                }
                match p.solve() {
                    LpResult::Optimal { value, point } => {
                        if value.is_positive() {
                            let direction: Vec<Scalar> = point[..dim].to_vec();
                            let exact = w.h(l, &direction);
                            debug_assert!(exact >= value, "piece bound exceeds exact h");
                            return Ok(ExpMembership::Unbounded { direction, value: exact });
                        }
                        certificates.push(RegionCertificate {
                            piece: pi,
                            coordinate: coord,
                            sign,
                            max_value: value,
                        });
                    }
                    other => unreachable!("region LP is bounded and feasible: {other:?}"),
                }
            }
        }
    }
    Ok(ExpMembership::Bounded { certificates })
}

/// The multiplier admissibility test: `|eta| < 1/(A a)` with
/// `a = sup_{|x|,|y|<=1} |<x,y>|`, decided exactly.
pub fn multiplier_admissible(
    w: &WeightSpec,
    eta: &[Scalar],
    form: &BilinearForm,
    cap: usize,
) -> Result<bool, ConeError> {
    if eta.len() != form.dim() {
        return Err(ConeError::DimensionMismatch { left: eta.len(), right: form.dim() });
    }
    let a = form.norm_constant(cap)?;
    Ok(inf_norm(eta) * w.a() * &a < int(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone::sector::SectorSet1;
    use crate::scalar::frac;

    fn halfline_spec(a: Scalar, b: Scalar) -> WeightSpec {
        WeightSpec::new(
            ConeRep::Sector(SectorSet::One(SectorSet1::positive())),
            a,
            b,
        )
        .unwrap()
    }

    #[test]
    fn halfline_membership_threshold() {
        // U = closed positive half-line, l(x) = x: member iff A >= 1 and
        // B >= 1 + 1/A (piecewise-linear analysis of h).
        let cases = [
            (int(1), int(2), true),
            (int(1), int(1), false),
            (frac(1, 2), int(4), false),
            (int(2), frac(3, 2), true),
            (int(2), frac(7, 5), false),
        ];
        for (a, b, expect) in cases {
            let w = halfline_spec(a.clone(), b.clone());
            let got = exp_membership(&[int(1)], &w).unwrap().is_member();
            assert_eq!(got, expect, "A={a} B={b}");
        }
    }

    #[test]
    fn violating_direction_is_exact() {
        let w = halfline_spec(frac(1, 2), int(4));
        match exp_membership(&[int(1)], &w).unwrap() {
            ExpMembership::Unbounded { direction, value } => {
                assert!(value.is_positive());
                assert_eq!(w.h(&[int(1)], &direction), value);
                assert!(direction[0].is_positive(), "blows up as x -> +inf");
            }
            other => panic!("expected unbounded, got {other:?}"),
        }
    }

    #[test]
    fn trivial_space_over_full_line() {
        // U = R: the weight admits no nonzero exponential, already for l = 0.
        let w = WeightSpec::new(
            ConeRep::Sector(SectorSet::One(SectorSet1::line())),
            int(1),
            int(1),
        )
        .unwrap();
        assert!(!exp_membership(&[int(0)], &w).unwrap().is_member());
        // and in two dimensions over the full plane
        let w2 = WeightSpec::new(ConeRep::Convex(ConvexCone::full(2)), int(3), int(5)).unwrap();
        assert!(!exp_membership(&[int(0), int(0)], &w2).unwrap().is_member());
    }

    #[test]
    fn membership_over_degenerate_cone() {
        // U = {0}: h = -l(x) + |x|/A - B|x|; bounded iff B - 1/A dominates l.
        let w = WeightSpec::new(ConeRep::Convex(ConvexCone::zero(1)), int(1), int(2)).unwrap();
        assert!(exp_membership(&[int(1)], &w).unwrap().is_member());
        let w2 = WeightSpec::new(ConeRep::Convex(ConvexCone::zero(1)), int(1), frac(3, 2)).unwrap();
        assert!(!exp_membership(&[int(2)], &w2).unwrap().is_member());
    }

    #[test]
    fn multiplier_examples() {
        let w = WeightSpec::new(ConeRep::Convex(ConvexCone::zero(1)), int(2), int(1)).unwrap();
        let f1 = BilinearForm::standard(1);
        assert!(multiplier_admissible(&w, &[frac(2, 5)], &f1, 8).unwrap());
        assert!(!multiplier_admissible(&w, &[frac(1, 2)], &f1, 8).unwrap());

        let w2 = WeightSpec::new(ConeRep::Convex(ConvexCone::zero(2)), int(1), int(1)).unwrap();
        let f2 = BilinearForm::standard(2);
        assert!(multiplier_admissible(&w2, &[frac(1, 5), frac(1, 5)], &f2, 8).unwrap());
        assert!(!multiplier_admissible(&w2, &[frac(1, 2), frac(1, 2)], &f2, 8).unwrap());
    }
}
