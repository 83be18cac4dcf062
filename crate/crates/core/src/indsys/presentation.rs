//! Quotient presentations of colimits over cofinal families, including the
//! antisymmetric (edge-of-the-wedge style) description of the relation
//! subspace, and the sign-algebra equivalence between the alternating
//! boundary map and the unsigned pairwise relations.

use super::{colimit, IndSystem, SystemError};
use crate::lattice::QuasiLattice;
use crate::linalg::{Mat, Subspace};
use crate::scalar::Scalar;
use num_traits::Zero;
use std::collections::BTreeMap;

/// A presentation of the colimit as `⊕_t X(lambda(t)) / N`, with the
/// induced isomorphism onto the colimit.
#[derive(Clone, Debug)]
pub struct Presentation {
    /// The chosen family, as index elements (duplicates allowed).
    pub lambda: Vec<usize>,
    pub ambient_dim: usize,
    /// Row-reduced basis of the relation subspace `N`.
    pub relation_basis: Mat,
    pub quotient_dim: usize,
    /// The induced map from the quotient onto the colimit (invertible).
    pub iso: Mat,
    pub colimit_dim: usize,
}

/// Builds the quotient presentation over the family `lambda` (a list of
/// index elements whose set of values is cofinal), verifies that the
/// induced map to the colimit is an isomorphism, and verifies that the
/// pairwise relation generators span the same subspace as the antisymmetric
/// family description.
pub fn quotient_presentation(
    sys: &IndSystem,
    q: &QuasiLattice,
    lambda: &[usize],
) -> Result<Presentation, SystemError> {
    assert_eq!(q.poset(), sys.index(), "quasi-lattice must order the system's index");
    if lambda.iter().any(|&t| t >= sys.index().len()) {
        return Err(SystemError::UnknownElement(lambda.iter().copied().max().unwrap()));
    }
    // cofinality: every element is majorized by a family member
    for a in 0..sys.index().len() {
        if !lambda.iter().any(|&t| sys.index().leq(a, t)) {
            return Err(SystemError::Precondition(format!(
                "family is not cofinal: element {} is not majorized",
                sys.index().name(a)
            )));
        }
    }
    let blocks: Vec<usize> = lambda.to_vec();
    let mut offsets = Vec::with_capacity(blocks.len());
    let mut ambient_dim = 0usize;
    for &t in &blocks {
        offsets.push(ambient_dim);
        ambient_dim += sys.dim(t);
    }
    // pairwise generators: j_t rho_{m, lt} x - j_t' rho_{m, lt'} x
    let mut rows = Vec::new();
    for ti in 0..blocks.len() {
        for tj in ti + 1..blocks.len() {
            let m = q.meet(blocks[ti], blocks[tj]);
            let ri = sys.map(m, blocks[ti]);
            let rj = sys.map(m, blocks[tj]);
            for x in 0..sys.dim(m) {
                let mut row = vec![Scalar::zero(); ambient_dim];
                for i in 0..ri.rows() {
                    row[offsets[ti] + i] = ri.at(i, x).clone();
                }
                for i in 0..rj.rows() {
                    let v = &row[offsets[tj] + i] - rj.at(i, x);
                    row[offsets[tj] + i] = v;
                }
                rows.push(row);
            }
        }
    }
    let relations = if rows.is_empty() { Mat::zero(0, ambient_dim) } else { Mat::from_rows(rows) };
    let relation_basis = relations.row_space_basis();

    // The antisymmetric description: vectors whose components are
    // `x_i = sum_l rho_{a_i /\ a_l -> a_i} x_{il}` with `x_{il} = -x_{li}`.
    // Its span is the image of the basis antisymmetric families, one per
    // unordered pair and basis vector.
    let mut anti_rows = Vec::new();
    for ti in 0..blocks.len() {
        for tj in 0..blocks.len() {
            if tj <= ti {
                continue;
            }
            let m = q.meet(blocks[ti], blocks[tj]);
            let ri = sys.map(m, blocks[ti]);
            let rj = sys.map(m, blocks[tj]);
            for x in 0..sys.dim(m) {
                let mut row = vec![Scalar::zero(); ambient_dim];
                // x_{titj} = e_x contributes +rho at block ti,
                // x_{tjti} = -e_x contributes -rho at block tj
                for i in 0..ri.rows() {
                    row[offsets[ti] + i] = ri.at(i, x).clone();
                }
                for i in 0..rj.rows() {
                    let v = &row[offsets[tj] + i] - rj.at(i, x);
                    row[offsets[tj] + i] = v;
                }
                anti_rows.push(row);
            }
        }
    }
    let anti = if anti_rows.is_empty() { Mat::zero(0, ambient_dim) } else { Mat::from_rows(anti_rows) };
    if anti.row_space_basis() != relation_basis {
        return Err(SystemError::Precondition(
            "antisymmetric relation description differs from the generator description".into(),
        ));
    }

    let pivots: Vec<usize> = (0..relation_basis.rows())
        .map(|i| (0..ambient_dim).find(|&j| !relation_basis.at(i, j).is_zero()).unwrap())
        .collect();
    let free: Vec<usize> = (0..ambient_dim).filter(|c| !pivots.contains(c)).collect();
    let quotient_dim = free.len();

    // induced map to the colimit of the whole system; on the free-column
    // basis of the quotient it is the canonical projection of that block
    let colim = colimit(sys, None);
    let cols: Vec<Vec<Scalar>> = free
        .iter()
        .map(|&f| {
            let (block, local) = {
                let bi = (0..blocks.len()).rfind(|&b| offsets[b] <= f).unwrap();
                (bi, f - offsets[bi])
            };
            let member = blocks[block];
            let mut e = vec![Scalar::zero(); sys.dim(member)];
            e[local] = crate::scalar::int(1);
            colim.project(member, &e)
        })
        .collect();
    let iso = Mat::from_fn(colim.dim(), quotient_dim, |i, j| cols[j][i].clone());
    if quotient_dim != colim.dim() || iso.rank() != colim.dim() {
        return Err(SystemError::Precondition(
            "induced map from the presentation to the colimit is not invertible".into(),
        ));
    }
    Ok(Presentation {
        lambda: blocks,
        ambient_dim,
        relation_basis,
        quotient_dim,
        iso,
        colimit_dim: colim.dim(),
    })
}

/// Finite-dimensional stand-ins for the wedge spaces between two sector
/// spaces: the dimension of the wedge and the two restriction maps.
#[derive(Clone, Debug)]
pub struct WedgeSpace {
    pub dim: usize,
    /// Map into the lower-indexed sector space.
    pub to_first: Mat,
    /// Map into the higher-indexed sector space.
    pub to_second: Mat,
}

#[derive(Clone, Debug)]
pub struct CechReport {
    pub delta_image: Mat,
    pub tau_relations: Mat,
    pub equal: bool,
}

/// Verifies, as exact linear algebra, that the image of the alternating
/// boundary map equals the diagonal-sign image of the unsigned pairwise
/// relation subspace.
///
/// Index convention is 1-based in the sign exponents, matching the
/// alternating sums `(delta v)_j = sum_{i<j} (-1)^i v_ij + sum_{i>j}
/// (-1)^{i+1} v_ji` and `(tau v)_i = (-1)^i v_i`.
pub fn cech_sign_equivalence(
    sector_dims: &[usize],
    wedges: &BTreeMap<(usize, usize), WedgeSpace>,
) -> Result<CechReport, SystemError> {
    let n = sector_dims.len();
    let total: usize = sector_dims.iter().sum();
    let mut offsets = Vec::with_capacity(n);
    let mut start = 0usize;
    for &d in sector_dims {
        offsets.push(start);
        start += d;
    }
    for (&(i, j), w) in wedges {
        if i >= j || j >= n {
            return Err(SystemError::Precondition(format!("bad wedge index ({i}, {j})")));
        }
        if w.to_first.rows() != sector_dims[i]
            || w.to_second.rows() != sector_dims[j]
            || w.to_first.cols() != w.dim
            || w.to_second.cols() != w.dim
        {
            return Err(SystemError::Precondition(format!("wedge ({i}, {j}) shape mismatch")));
        }
    }
    // (-1)^m as an exact scalar; indices in the alternating sums are 1-based.
    let neg_one_pow =
        |m: usize| if m.is_multiple_of(2) { crate::scalar::int(1) } else { crate::scalar::int(-1) };
    let mut delta_rows = Vec::new();
    let mut unsigned_rows = Vec::new();
    for (&(i, j), w) in wedges {
        for x in 0..w.dim {
            // for the 1-based pair (i+1, j+1): block i carries (-1)^{(j+1)+1},
            // block j carries (-1)^{i+1}
            let mut drow = vec![Scalar::zero(); total];
            let si = neg_one_pow(j);
            let sj = neg_one_pow(i + 1);
            for r in 0..sector_dims[i] {
                drow[offsets[i] + r] = &si * w.to_first.at(r, x);
            }
            for r in 0..sector_dims[j] {
                drow[offsets[j] + r] = &sj * w.to_second.at(r, x);
            }
            delta_rows.push(drow);
            // unsigned relations: +rho_i at block i, -rho_j at block j
            let mut urow = vec![Scalar::zero(); total];
            for r in 0..sector_dims[i] {
                urow[offsets[i] + r] = w.to_first.at(r, x).clone();
            }
            for r in 0..sector_dims[j] {
                urow[offsets[j] + r] = -w.to_second.at(r, x).clone();
            }
            unsigned_rows.push(urow);
        }
    }
    let delta = if delta_rows.is_empty() { Mat::zero(0, total) } else { Mat::from_rows(delta_rows) };
    // tau scales block i by the 1-based sign (-1)^{i+1}
    let tau_of = |rows: &Mat| -> Mat {
        Mat::from_fn(rows.rows(), total, |r, c| {
            let block = (0..n).rfind(|&b| offsets[b] <= c).unwrap();
            rows.at(r, c) * neg_one_pow(block + 1)
        })
    };
    let unsigned =
        if unsigned_rows.is_empty() { Mat::zero(0, total) } else { Mat::from_rows(unsigned_rows) };
    let delta_image = Subspace::from_rows(&delta);
    let tau_relations = Subspace::from_rows(&tau_of(&unsigned));
    let equal = delta_image == tau_relations;
    Ok(CechReport {
        delta_image: delta_image.basis().clone(),
        tau_relations: tau_relations.basis().clone(),
        equal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indsys::fixtures::wedge_model;
    use crate::scalar::int;

    #[test]
    fn singleton_family_on_top() {
        // restrict to a system with a top element: chain zero <= plus
        let sys = wedge_model().restrict(&[0, 1]).unwrap();
        let q = QuasiLattice::from_poset(sys.index().clone()).unwrap();
        let p = quotient_presentation(&sys, &q, &[1]).unwrap();
        assert_eq!(p.quotient_dim, 2);
        assert_eq!(p.colimit_dim, 2);
    }

    #[test]
    fn wedge_presentation_has_colimit_dimension() {
        let sys = wedge_model();
        let q = QuasiLattice::from_poset(sys.index().clone()).unwrap();
        let p = quotient_presentation(&sys, &q, &[1, 2]).unwrap();
        assert_eq!(p.ambient_dim, 4);
        assert_eq!(p.relation_basis.rows(), 1);
        assert_eq!(p.quotient_dim, 3);
        assert_eq!(p.colimit_dim, 3);
    }

    #[test]
    fn duplicate_family_members_collapse() {
        let sys = wedge_model();
        let q = QuasiLattice::from_poset(sys.index().clone()).unwrap();
        let p = quotient_presentation(&sys, &q, &[1, 2, 2]).unwrap();
        assert_eq!(p.quotient_dim, 3);
        assert_eq!(p.colimit_dim, 3);
    }

    #[test]
    fn non_cofinal_family_rejected() {
        let sys = wedge_model();
        let q = QuasiLattice::from_poset(sys.index().clone()).unwrap();
        assert!(quotient_presentation(&sys, &q, &[1]).is_err());
    }

    #[test]
    fn cech_zero_spaces() {
        let report = cech_sign_equivalence(&[0, 0], &BTreeMap::new()).unwrap();
        assert!(report.equal);
    }

    #[test]
    fn cech_two_sectors_one_wedge() {
        let mut wedges = BTreeMap::new();
        wedges.insert(
            (0, 1),
            WedgeSpace {
                dim: 2,
                to_first: Mat::from_rows(vec![vec![int(1), int(0)], vec![int(1), int(1)]]),
                to_second: Mat::from_rows(vec![vec![int(0), int(2)]]),
            },
        );
        let report = cech_sign_equivalence(&[2, 1], &wedges).unwrap();
        assert!(report.equal);
    }

    #[test]
    fn cech_three_sectors() {
        let mut wedges = BTreeMap::new();
        let w = |m: Vec<Vec<i64>>| Mat::from_rows(m.into_iter().map(|r| r.into_iter().map(int).collect()).collect());
        wedges.insert((0, 1), WedgeSpace { dim: 1, to_first: w(vec![vec![1], vec![0]]), to_second: w(vec![vec![1]]) });
        wedges.insert((0, 2), WedgeSpace { dim: 1, to_first: w(vec![vec![0], vec![1]]), to_second: w(vec![vec![3], vec![1]]) });
        wedges.insert((1, 2), WedgeSpace { dim: 2, to_first: w(vec![vec![1, 1]]), to_second: w(vec![vec![1, 0], vec![0, 1]]) });
        let report = cech_sign_equivalence(&[2, 1, 2], &wedges).unwrap();
        assert!(report.equal);
    }
}
