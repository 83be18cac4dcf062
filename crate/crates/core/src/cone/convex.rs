//! Convex polyhedral cones: generators, duality, intersection, properness,
//! and the exact uniform-norm distance.

use super::ConeError;
use crate::linalg::Mat;
use crate::lp::{LpProblem, LpResult, Rel};
use crate::scalar::{dot, int, is_zero_vec, primitive_direction, Scalar};
use num_traits::{Signed, Zero};

/// Symmetric nondegenerate bilinear form on Q^k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    mat: Mat,
}

impl BilinearForm {
    pub fn new(mat: Mat) -> Result<Self, ConeError> {
        if mat.rows() != mat.cols() {
            return Err(ConeError::InvalidForm("matrix is not square".into()));
        }
        for i in 0..mat.rows() {
            for j in 0..i {
                if mat.at(i, j) != mat.at(j, i) {
                    return Err(ConeError::InvalidForm("matrix is not symmetric".into()));
                }
            }
        }
        if mat.rank() != mat.rows() {
            return Err(ConeError::InvalidForm("matrix is degenerate".into()));
        }
        Ok(BilinearForm { mat })
    }

    /// The standard dot product on Q^k.
    pub fn standard(dim: usize) -> Self {
        BilinearForm { mat: Mat::identity(dim) }
    }

    pub fn dim(&self) -> usize {
        self.mat.rows()
    }

    pub fn matrix(&self) -> &Mat {
        &self.mat
    }

    /// The pairing `<x, y>`.
    pub fn pairing(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        dot(x, &self.mat.mul_vec(y))
    }

    /// Exact `a = sup_{|x|,|y| <= 1} |<x,y>|`; the sup over the unit cube is
    /// attained at vertices, so it is a maximum over sign vectors.
    pub fn norm_constant(&self, cap: usize) -> Result<Scalar, ConeError> {
        let k = self.dim();
        if k > cap {
            return Err(ConeError::CapExceeded { dim: k, cap });
        }
        let mut best = Scalar::zero();
        let signs = 1usize << k;
        for s in 0..signs {
            let sv: Vec<Scalar> = (0..k).map(|i| if s >> i & 1 == 1 { int(-1) } else { int(1) }).collect();
            let msv = self.mat.mul_vec(&sv);
            for t in 0..signs {
                let mut acc = Scalar::zero();
                for (i, m) in msv.iter().enumerate() {
                    if t >> i & 1 == 1 {
                        acc -= m;
                    } else {
                        acc += m;
                    }
                }
                let a = acc.abs();
                if a > best {
                    best = a;
                }
            }
        }
        Ok(best)
    }
}

/// Closed convex polyhedral cone, the set of nonnegative rational
/// combinations of its generators. No generators means the cone `{0}`.
///
/// Generators are canonicalized to primitive integer directions and
/// deduplicated, but are not required to be extreme rays.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ConvexCone {
    dim: usize,
    generators: Vec<Vec<Scalar>>,
}

impl ConvexCone {
    pub fn new(dim: usize, generators: Vec<Vec<Scalar>>) -> Result<Self, ConeError> {
        let mut canon = Vec::with_capacity(generators.len());
        for g in &generators {
            if g.len() != dim {
                return Err(ConeError::DimensionMismatch { left: dim, right: g.len() });
            }
            let prim = primitive_direction(g).ok_or(ConeError::ZeroVector)?;
            canon.push(prim.into_iter().map(Scalar::from_integer).collect::<Vec<_>>());
        }
        canon.sort();
        canon.dedup();
        Ok(ConvexCone { dim, generators: canon })
    }

    /// The degenerate cone `{0}`.
    pub fn zero(dim: usize) -> Self {
        ConvexCone { dim, generators: Vec::new() }
    }

    /// All of Q^k, generated by the positive and negative unit vectors.
    pub fn full(dim: usize) -> Self {
        let mut gens = Vec::new();
        for i in 0..dim {
            for s in [1i64, -1] {
                let mut v = vec![Scalar::zero(); dim];
                v[i] = int(s);
                gens.push(v);
            }
        }
        ConvexCone { dim, generators: { let mut g = gens; g.sort(); g } }
    }

    pub fn ray(v: &[Scalar]) -> Result<Self, ConeError> {
        ConvexCone::new(v.len(), vec![v.to_vec()])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vec<Scalar>] {
        &self.generators
    }

    pub fn is_zero_cone(&self) -> bool {
        self.generators.is_empty()
    }

    /// Membership test by exact LP feasibility of `G lambda = x, lambda >= 0`.
    pub fn contains(&self, x: &[Scalar]) -> bool {
        assert_eq!(x.len(), self.dim, "point dimension mismatch");
        if is_zero_vec(x) {
            return true;
        }
        if self.generators.is_empty() {
            return false;
        }
        let m = self.generators.len();
        let mut p = LpProblem::feasibility(m);
        for i in 0..self.dim {
            let row: Vec<Scalar> = self.generators.iter().map(|g| g[i].clone()).collect();
            p.add_constraint(row, Rel::Eq, x[i].clone());
        }
        p.solve().is_feasible()
    }

    /// Subset test: every generator of `self` lies in `other`.
    pub fn leq(&self, other: &ConvexCone) -> Result<bool, ConeError> {
        if self.dim != other.dim {
            return Err(ConeError::DimensionMismatch { left: self.dim, right: other.dim });
        }
        Ok(self.generators.iter().all(|g| other.contains(g)))
    }

    pub fn set_eq(&self, other: &ConvexCone) -> Result<bool, ConeError> {
        Ok(self.leq(other)? && other.leq(self)?)
    }

    pub fn is_full(&self) -> bool {
        ConvexCone::full(self.dim).leq(self).expect("same dimension")
    }

    /// True iff some linear functional is strictly positive on all
    /// generators; for closed convex cones this is "contains no line".
    /// The degenerate cone `{0}` is proper.
    pub fn is_proper(&self) -> bool {
        if self.generators.is_empty() {
            return true;
        }
        let mut p = LpProblem::feasibility(self.dim);
        p.set_all_free();
        for g in &self.generators {
            p.add_constraint(g.clone(), Rel::Ge, int(1));
        }
        p.solve().is_feasible()
    }

    /// A strictly separating functional `l` with `l(g) >= 1` on all
    /// generators, when the cone is proper and nondegenerate.
    pub fn separating_functional(&self) -> Option<Vec<Scalar>> {
        if self.generators.is_empty() {
            return None;
        }
        let mut p = LpProblem::feasibility(self.dim);
        p.set_all_free();
        for g in &self.generators {
            p.add_constraint(g.clone(), Rel::Ge, int(1));
        }
        match p.solve() {
            LpResult::Optimal { point, .. } => Some(point),
            _ => None,
        }
    }

    /// Full-dimensional iff the generators span Q^k linearly.
    pub fn is_full_dimensional(&self) -> bool {
        if self.generators.is_empty() {
            return self.dim == 0;
        }
        Mat::from_rows(self.generators.clone()).rank() == self.dim
    }

    /// Exact `delta_U(x) = min_{y in U} |x - y|` in the uniform norm,
    /// by LP: minimize t subject to -t <= x_i - (G lambda)_i <= t.
    pub fn distance(&self, x: &[Scalar]) -> Scalar {
        assert_eq!(x.len(), self.dim, "point dimension mismatch");
        let m = self.generators.len();
        // variables: t, lambda_1..lambda_m, all nonnegative
        let mut obj = vec![Scalar::zero(); m + 1];
        obj[0] = int(1);
        let mut p = LpProblem::minimize(obj);
        for i in 0..self.dim {
            let mut plus = vec![Scalar::zero(); m + 1];
            let mut minus = vec![Scalar::zero(); m + 1];
            plus[0] = int(1);
            minus[0] = int(1);
            for (j, g) in self.generators.iter().enumerate() {
                plus[j + 1] = g[i].clone();
                minus[j + 1] = -g[i].clone();
            }
            p.add_constraint(plus, Rel::Ge, x[i].clone());
            p.add_constraint(minus, Rel::Ge, -x[i].clone());
        }
        match p.solve() {
            LpResult::Optimal { value, .. } => value,
            other => unreachable!("distance LP is always solvable: {other:?}"),
        }
    }

    /// Halfspace (H-) representation: the generators of the standard-form
    /// dual; the cone equals `{x : h . x >= 0 for all h}` by biduality.
    pub fn halfspaces(&self) -> Vec<Vec<Scalar>> {
        cone_from_inequalities(self.dim, &self.generators)
    }

    /// The dual cone `{x : <x, eta> >= 0 for all eta in C}` with respect to
    /// the given bilinear form.
    pub fn dual(&self, form: &BilinearForm) -> Result<ConvexCone, ConeError> {
        if form.dim() != self.dim {
            return Err(ConeError::DimensionMismatch { left: self.dim, right: form.dim() });
        }
        let ineqs: Vec<Vec<Scalar>> = self.generators.iter().map(|g| form.matrix().mul_vec(g)).collect();
        let gens = cone_from_inequalities(self.dim, &ineqs);
        ConvexCone::new(self.dim, gens)
    }

    /// Intersection of convex polyhedral cones (any k), via the
    /// double-description conversion on the combined halfspace systems.
    pub fn meet(&self, other: &ConvexCone) -> Result<ConvexCone, ConeError> {
        if self.dim != other.dim {
            return Err(ConeError::DimensionMismatch { left: self.dim, right: other.dim });
        }
        let mut ineqs = self.halfspaces();
        ineqs.extend(other.halfspaces());
        ConvexCone::new(self.dim, cone_from_inequalities(self.dim, &ineqs))
    }
}

/// The dual cone operation of the public surface.
pub fn dual_cone(cone: &ConvexCone, form: &BilinearForm) -> Result<ConvexCone, ConeError> {
    cone.dual(form)
}

/// Generators of `{x : a . x >= 0 for every row a}` by a double-description
/// sweep. Starts from the generator set of the full space and intersects one
/// halfspace at a time, eliminating redundant generators after each step.
pub fn cone_from_inequalities(dim: usize, ineqs: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let mut gens: Vec<Vec<Scalar>> = ConvexCone::full(dim).generators().to_vec();
    for a in ineqs {
        assert_eq!(a.len(), dim, "inequality dimension mismatch");
        if is_zero_vec(a) {
            continue;
        }
        let mut keep: Vec<Vec<Scalar>> = Vec::new();
        let mut pos: Vec<Vec<Scalar>> = Vec::new();
        let mut neg: Vec<Vec<Scalar>> = Vec::new();
        for r in gens {
            let v = dot(a, &r);
            if v.is_zero() {
                keep.push(r);
            } else if v.is_positive() {
                pos.push(r);
            } else {
                neg.push(r);
            }
        }
        for p in &pos {
            keep.push(p.clone());
        }
        let ap: Vec<Scalar> = pos.iter().map(|p| dot(a, p)).collect();
        let an: Vec<Scalar> = neg.iter().map(|n| dot(a, n)).collect();
        for (pi, p) in pos.iter().enumerate() {
            for (ni, n) in neg.iter().enumerate() {
                // (a.p) n - (a.n) p lies on the hyperplane a.x = 0
                let comb: Vec<Scalar> = (0..dim).map(|i| &ap[pi] * &n[i] - &an[ni] * &p[i]).collect();
                if let Some(prim) = primitive_direction(&comb) {
                    keep.push(prim.into_iter().map(Scalar::from_integer).collect());
                }
            }
        }
        keep.sort();
        keep.dedup();
        gens = reduce_generators(dim, keep);
    }
    gens
}

/// Removes generators that are nonnegative combinations of the others.
fn reduce_generators(dim: usize, mut gens: Vec<Vec<Scalar>>) -> Vec<Vec<Scalar>> {
    let mut i = 0;
    while i < gens.len() {
        let candidate = gens[i].clone();
        let rest = ConvexCone {
            dim,
            generators: gens.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, g)| g.clone()).collect(),
        };
        if rest.contains(&candidate) {
            gens.remove(i);
        } else {
            i += 1;
        }
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::frac;

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| int(x)).collect()
    }

    fn cone(dim: usize, gens: &[&[i64]]) -> ConvexCone {
        ConvexCone::new(dim, gens.iter().map(|g| v(g)).collect()).unwrap()
    }

    #[test]
    fn dual_of_zero_cone_is_everything() {
        let z = ConvexCone::zero(2);
        let d = z.dual(&BilinearForm::standard(2)).unwrap();
        assert!(d.is_full());
    }

    #[test]
    fn first_quadrant_is_self_dual() {
        let q = cone(2, &[&[1, 0], &[0, 1]]);
        let d = q.dual(&BilinearForm::standard(2)).unwrap();
        assert!(d.set_eq(&q).unwrap());
    }

    #[test]
    fn dual_of_diagonal_ray_is_halfplane() {
        // {x : x1 + x2 >= 0}; checked as a set, not by generator lists.
        let r = cone(2, &[&[1, 1]]);
        let d = r.dual(&BilinearForm::standard(2)).unwrap();
        let expected = cone(2, &[&[1, -1], &[-1, 1], &[1, 1]]);
        assert!(d.set_eq(&expected).unwrap());
        // Oracle: sampled membership matches the inequality x1 + x2 >= 0.
        for x in [v(&[3, -2]), v(&[-2, 3]), v(&[0, 0]), v(&[1, 1])] {
            assert!(d.contains(&x));
        }
        assert!(!d.contains(&v(&[-1, -1])));
        assert!(!d.contains(&v(&[0, -1])));
    }

    #[test]
    fn properness() {
        assert!(cone(1, &[&[1]]).is_proper());
        assert!(!cone(1, &[&[1], &[-1]]).is_proper());
        assert!(ConvexCone::zero(3).is_proper());
        assert!(cone(2, &[&[1, 0], &[1, 1]]).is_proper());
        assert!(!ConvexCone::full(2).is_proper());
    }

    #[test]
    fn distance_examples() {
        let q = cone(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(q.distance(&v(&[2, 5])), int(0));
        // nearest point to (-3, 2) is (0, 2)
        assert_eq!(q.distance(&v(&[-3, 2])), int(3));
        let z = ConvexCone::zero(2);
        assert_eq!(z.distance(&v(&[-3, 2])), int(3));
        assert_eq!(z.distance(&[frac(1, 2), frac(-5, 2)]), frac(5, 2));
    }

    #[test]
    fn meet_of_quadrants() {
        let q1 = cone(2, &[&[1, 0], &[0, 1]]);
        let q2 = cone(2, &[&[-1, 0], &[0, 1]]);
        let m = q1.meet(&q2).unwrap();
        let ray = cone(2, &[&[0, 1]]);
        assert!(m.set_eq(&ray).unwrap());
    }

    #[test]
    fn norm_constant_examples() {
        assert_eq!(BilinearForm::standard(1).norm_constant(8).unwrap(), int(1));
        assert_eq!(BilinearForm::standard(2).norm_constant(8).unwrap(), int(2));
        let m = Mat::from_rows(vec![v(&[1, 2]), v(&[2, 1])]);
        let f = BilinearForm::new(m).unwrap();
        assert_eq!(f.norm_constant(8).unwrap(), int(6));
        assert_eq!(
            BilinearForm::standard(9).norm_constant(8),
            Err(ConeError::CapExceeded { dim: 9, cap: 8 })
        );
    }

    #[test]
    fn norm_constant_against_grid_sampling() {
        // dense grid over the unit cube never exceeds the sign-enumeration
        // maximum, and attains it at a corner
        use num_traits::ToPrimitive;
        let m = Mat::from_rows(vec![v(&[1, 2]), v(&[2, 1])]);
        let f = BilinearForm::new(m).unwrap();
        let a = f.norm_constant(8).unwrap().to_f64().unwrap();
        let mut best = 0.0f64;
        let steps = 8;
        let grid: Vec<f64> = (-steps..=steps).map(|i| i as f64 / steps as f64).collect();
        for &x0 in &grid {
            for &x1 in &grid {
                for &y0 in &grid {
                    for &y1 in &grid {
                        let pairing = x0 * (y0 + 2.0 * y1) + x1 * (2.0 * y0 + y1);
                        best = best.max(pairing.abs());
                    }
                }
            }
        }
        assert!(best <= a + 1e-9);
        assert!((best - a).abs() < 1e-9, "corner grid attains the maximum");
    }

    #[test]
    fn degenerate_form_rejected() {
        let m = Mat::from_rows(vec![v(&[1, 1]), v(&[1, 1])]);
        assert!(BilinearForm::new(m).is_err());
        let asym = Mat::from_rows(vec![v(&[1, 2]), v(&[0, 1])]);
        assert!(BilinearForm::new(asym).is_err());
    }

    #[test]
    fn dual_cone_with_nonstandard_form() {
        // form ((0,1),(1,0)): <x,eta> = x1 eta2 + x2 eta1;
        // dual of the ray (1,0) is {x : x2 >= 0}.
        let f = BilinearForm::new(Mat::from_rows(vec![v(&[0, 1]), v(&[1, 0])])).unwrap();
        let r = cone(2, &[&[1, 0]]);
        let d = r.dual(&f).unwrap();
        assert!(d.contains(&v(&[5, 3])));
        assert!(d.contains(&v(&[-5, 0])));
        assert!(!d.contains(&v(&[0, -1])));
    }
}
