//! Simplicial coverings of Q^k from k+1 positively spanning vectors: the
//! cones spanned by all but one vector, their pairwise intersections, the
//! dual halfspaces, and the dual sectors. All defining identities are
//! validated exactly on construction.

use super::convex::{BilinearForm, ConvexCone};
use super::ConeError;
use crate::lp::{LpProblem, Rel};
use crate::scalar::{int, Scalar};
use num_traits::Zero;
use std::collections::BTreeMap;

/// The derived data of a simplicial covering.
#[derive(Clone, Debug)]
pub struct SimplicialCover {
    pub vectors: Vec<Vec<Scalar>>,
    /// `K_i`, the cone on all vectors except the i-th.
    pub cones: Vec<ConvexCone>,
    /// `K_{ij} = K_i /\ K_j` for i < j.
    pub pairwise: BTreeMap<(usize, usize), ConvexCone>,
    /// Halfspace `E_i = {xi : <xi, x_i> >= 0}`.
    pub halfspaces: Vec<ConvexCone>,
    /// `Gamma_i`, the intersection of all `E_j`, `j != i`; equals `K_i^*`.
    pub gammas: Vec<ConvexCone>,
    /// `V_{ij}`, the intersection of all `E_l`, `l != i, j`; equals `K_{ij}^*`.
    pub wedges: BTreeMap<(usize, usize), ConvexCone>,
}

/// True iff the vectors positively span Q^k: they span linearly and admit a
/// strictly positive linear dependence.
pub fn positively_spans(dim: usize, vectors: &[Vec<Scalar>]) -> bool {
    if vectors.is_empty() {
        return dim == 0;
    }
    let m = crate::linalg::Mat::from_rows(vectors.to_vec());
    if m.rank() != dim {
        return false;
    }
    let mut p = LpProblem::feasibility(vectors.len());
    for i in 0..dim {
        let row: Vec<Scalar> = vectors.iter().map(|v| v[i].clone()).collect();
        p.add_constraint(row, Rel::Eq, Scalar::zero());
    }
    for j in 0..vectors.len() {
        let mut row = vec![Scalar::zero(); vectors.len()];
        row[j] = int(1);
        p.add_constraint(row, Rel::Ge, int(1));
    }
    p.solve().is_feasible()
}

/// Checks that the union of the convex cones is all of Q^k. The complement
/// of the union is the set of points violating at least one halfspace of
/// every cone, a union over choice functions of open polyhedral cones; the
/// union covers iff every choice is infeasible.
pub fn union_covers_space(dim: usize, cones: &[ConvexCone]) -> bool {
    let systems: Vec<Vec<Vec<Scalar>>> = cones.iter().map(|c| c.halfspaces()).collect();
    if systems.iter().any(|h| h.is_empty()) {
        // a cone with no halfspace constraints is the full space
        return true;
    }
    let mut choice = vec![0usize; systems.len()];
    loop {
        let mut p = LpProblem::feasibility(dim);
        p.set_all_free();
        for (ci, h) in systems.iter().enumerate() {
            // strict violation h.x < 0, scaled to <= -1
            p.add_constraint(h[choice[ci]].clone(), Rel::Le, int(-1));
        }
        if p.solve().is_feasible() {
            return false;
        }
        // next choice function
        let mut pos = 0;
        loop {
            if pos == systems.len() {
                return true;
            }
            choice[pos] += 1;
            if choice[pos] < systems[pos].len() {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}

/// Builds the simplicial covering from `k+1` vectors, validating
/// `union K_i = Q^k`, `K_i /\ K_j = K_{ij}`, `Gamma_i = K_i^*`, and
/// `V_{ij} = K_{ij}^*`.
pub fn simplicial_cover(vectors: &[Vec<Scalar>], form: &BilinearForm) -> Result<SimplicialCover, ConeError> {
    let dim = form.dim();
    if vectors.len() != dim + 1 {
        return Err(ConeError::DimensionMismatch { left: vectors.len(), right: dim + 1 });
    }
    for v in vectors {
        if v.len() != dim {
            return Err(ConeError::DimensionMismatch { left: v.len(), right: dim });
        }
    }
    if !positively_spans(dim, vectors) {
        return Err(ConeError::NotPositivelySpanning);
    }
    let n = vectors.len();
    let mut cones = Vec::with_capacity(n);
    for i in 0..n {
        let gens: Vec<Vec<Scalar>> =
            vectors.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, v)| v.clone()).collect();
        cones.push(ConvexCone::new(dim, gens)?);
    }
    let mut pairwise = BTreeMap::new();
    for i in 0..n {
        for j in i + 1..n {
            let gens: Vec<Vec<Scalar>> = vectors
                .iter()
                .enumerate()
                .filter(|(l, _)| *l != i && *l != j)
                .map(|(_, v)| v.clone())
                .collect();
            let kij = ConvexCone::new(dim, gens)?;
            let meet = cones[i].meet(&cones[j])?;
            if !kij.set_eq(&meet)? {
                return Err(ConeError::ImproperCone(format!(
                    "K_{i} /\\ K_{j} differs from K_{{{i}{j}}}"
                )));
            }
            pairwise.insert((i, j), kij);
        }
    }
    if !union_covers_space(dim, &cones) {
        return Err(ConeError::NotPositivelySpanning);
    }
    let mut halfspaces = Vec::with_capacity(n);
    for v in vectors {
        let normal = form.matrix().mul_vec(v);
        let gens = super::convex::cone_from_inequalities(dim, &[normal]);
        halfspaces.push(ConvexCone::new(dim, gens)?);
    }
    let mut gammas = Vec::with_capacity(n);
    for i in 0..n {
        let ineqs: Vec<Vec<Scalar>> = vectors
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, v)| form.matrix().mul_vec(v))
            .collect();
        let g = ConvexCone::new(dim, super::convex::cone_from_inequalities(dim, &ineqs))?;
        let dual = cones[i].dual(form)?;
        if !g.set_eq(&dual)? {
            return Err(ConeError::ImproperCone(format!("Gamma_{i} differs from K_{i}^*")));
        }
        gammas.push(g);
    }
    let mut wedges = BTreeMap::new();
    for (&(i, j), kij) in &pairwise {
        let ineqs: Vec<Vec<Scalar>> = vectors
            .iter()
            .enumerate()
            .filter(|(l, _)| *l != i && *l != j)
            .map(|(_, v)| form.matrix().mul_vec(v))
            .collect();
        let w = ConvexCone::new(dim, super::convex::cone_from_inequalities(dim, &ineqs))?;
        let dual = kij.dual(form)?;
        if !w.set_eq(&dual)? {
            return Err(ConeError::ImproperCone(format!("V_{{{i}{j}}} differs from K_{{{i}{j}}}^*")));
        }
        wedges.insert((i, j), w);
    }
    Ok(SimplicialCover { vectors: vectors.to_vec(), cones, pairwise, halfspaces, gammas, wedges })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone::sector::{SectorSet, SectorSet1};

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn one_dimensional_cover() {
        let cover = simplicial_cover(&[v(&[1]), v(&[-1])], &BilinearForm::standard(1)).unwrap();
        // K_1 drops x^1, leaving the negative half-line
        assert_eq!(
            SectorSet::from_convex(&cover.cones[0]).unwrap(),
            SectorSet::One(SectorSet1::negative())
        );
        assert_eq!(
            SectorSet::from_convex(&cover.cones[1]).unwrap(),
            SectorSet::One(SectorSet1::positive())
        );
        assert!(cover.pairwise[&(0, 1)].is_zero_cone());
        assert_eq!(
            SectorSet::from_convex(&cover.gammas[0]).unwrap(),
            SectorSet::One(SectorSet1::negative())
        );
        assert_eq!(
            SectorSet::from_convex(&cover.gammas[1]).unwrap(),
            SectorSet::One(SectorSet1::positive())
        );
        assert!(cover.wedges[&(0, 1)].is_full());
    }

    #[test]
    fn planar_cover_of_three_vectors() {
        let vectors = [v(&[1, 0]), v(&[0, 1]), v(&[-1, -1])];
        let cover = simplicial_cover(&vectors, &BilinearForm::standard(2)).unwrap();
        for kij in cover.pairwise.values() {
            // pairwise intersections are single rays
            assert_eq!(kij.generators().len(), 1);
        }
        assert!(union_covers_space(2, &cover.cones));
    }

    #[test]
    fn degenerate_family_rejected() {
        let vectors = [v(&[1, 0]), v(&[1, 0]), v(&[0, 1])];
        assert_eq!(
            simplicial_cover(&vectors, &BilinearForm::standard(2)).unwrap_err(),
            ConeError::NotPositivelySpanning
        );
        // spanning linearly but not positively
        let vectors = [v(&[1, 0]), v(&[0, 1]), v(&[1, 1])];
        assert_eq!(
            simplicial_cover(&vectors, &BilinearForm::standard(2)).unwrap_err(),
            ConeError::NotPositivelySpanning
        );
    }

    #[test]
    fn standard_three_dimensional_family() {
        let vectors = [v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1]), v(&[-1, -1, -1])];
        let cover = simplicial_cover(&vectors, &BilinearForm::standard(3)).unwrap();
        assert_eq!(cover.cones.len(), 4);
        assert_eq!(cover.pairwise.len(), 6);
        // Gamma_3 is dual to the positive octant: the octant itself.
        let octant = ConvexCone::new(3, vec![v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1])]).unwrap();
        assert!(cover.gammas[3].set_eq(&octant).unwrap());
    }
}
