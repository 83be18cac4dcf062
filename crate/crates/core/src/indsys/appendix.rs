//! Constructive decomposition operations on relation subspaces: splitting a
//! relation vector over a union of hereditary subsets, gluing colimit
//! elements that agree further up, and the intersection identity
//! `N_A /\ M_I = N_I` for hereditary `I` in prelocalizable systems.

use super::{check_conditions, colimit, relation_subspace, tau, Condition, ConditionReport, IndSystem, SystemError};
use crate::lattice::QuasiLattice;
use crate::linalg::{Mat, Subspace};
use crate::scalar::{is_zero_vec, vec_add, vec_scale, vec_sub, Scalar};
use num_traits::Zero;
use std::collections::BTreeMap;

/// The relation generators `sigma(e_j, a, b)` over all comparable pairs
/// inside `subset`, as rows of the full ambient direct sum, together with
/// the pair each row came from.
pub(crate) fn labelled_relation_generators(
    sys: &IndSystem,
    subset: &[usize],
) -> (Vec<(usize, usize)>, Mat) {
    let mut offsets = BTreeMap::new();
    let mut total = 0usize;
    for m in 0..sys.index().len() {
        offsets.insert(m, total);
        total += sys.dim(m);
    }
    let mut labels = Vec::new();
    let mut rows = Vec::new();
    for &a in subset {
        for &b in subset {
            if a == b || !sys.index().leq(a, b) {
                continue;
            }
            let rho = sys.map(a, b);
            for j in 0..sys.dim(a) {
                let mut row = vec![Scalar::zero(); total];
                row[offsets[&a] + j] = crate::scalar::int(1);
                for i in 0..sys.dim(b) {
                    row[offsets[&b] + i] = -rho.at(i, j).clone();
                }
                labels.push((a, b));
                rows.push(row);
            }
        }
    }
    let mat = if rows.is_empty() { Mat::zero(0, total) } else { Mat::from_rows(rows) };
    (labels, mat)
}

/// Splits `x` in `N_{I1 ∪ I2}` as `x1 + x2` with `x_i` in `N_{I_i}`,
/// following the upper-element rule: generator terms whose upper element
/// lies in `I1` go left, the rest (upper element in `I2 \ I1`) go right.
pub fn split_over_union(
    sys: &IndSystem,
    i1: &[usize],
    i2: &[usize],
    x: &[Scalar],
) -> Result<(Vec<Scalar>, Vec<Scalar>), SystemError> {
    for (name, set) in [("I1", i1), ("I2", i2)] {
        if !sys.index().is_hereditary(set) {
            return Err(SystemError::Precondition(format!("{name} is not hereditary")));
        }
    }
    let mut union: Vec<usize> = i1.iter().chain(i2).copied().collect();
    union.sort_unstable();
    union.dedup();
    let (labels, gens) = labelled_relation_generators(sys, &union);
    if x.len() != gens.cols() {
        return Err(SystemError::Precondition("ambient dimension mismatch".into()));
    }
    // coefficients c with gens^T c = x
    let coeffs = gens
        .transpose()
        .solve(x)
        .ok_or_else(|| SystemError::Precondition("vector is not in the relation subspace".into()))?;
    let total = x.len();
    let mut x1 = vec![Scalar::zero(); total];
    let mut x2 = vec![Scalar::zero(); total];
    for (r, (_, b)) in labels.iter().enumerate() {
        if coeffs[r].is_zero() {
            continue;
        }
        let term = vec_scale(&coeffs[r], gens.row(r));
        if i1.contains(b) {
            x1 = vec_add(&x1, &term);
        } else {
            x2 = vec_add(&x2, &term);
        }
    }
    debug_assert_eq!(vec_add(&x1, &x2), x.to_vec());
    debug_assert!(relation_subspace(sys, i1).contains(&x1));
    debug_assert!(relation_subspace(sys, i2).contains(&x2));
    Ok((x1, x2))
}

/// Glues colimit elements over hereditary subsets: given `x1`, `x2` in the
/// colimits over `I1`, `I2` with equal images in the colimit over `J`,
/// produces the element of the colimit over `I1 /\ I2` restricting to both.
pub fn glue(
    sys: &IndSystem,
    i1: &[usize],
    i2: &[usize],
    j: &[usize],
    x1: &[Scalar],
    x2: &[Scalar],
) -> Result<Vec<Scalar>, SystemError> {
    for (name, set) in [("I1", i1), ("I2", i2)] {
        if !sys.index().is_hereditary(set) {
            return Err(SystemError::Precondition(format!("{name} is not hereditary")));
        }
        if !set.iter().all(|e| j.contains(e)) {
            return Err(SystemError::Precondition(format!("{name} is not contained in J")));
        }
    }
    let c1 = colimit(sys, Some(i1));
    let c2 = colimit(sys, Some(i2));
    let cj = colimit(sys, Some(j));
    let t1 = tau(&c1, &cj);
    let t2 = tau(&c2, &cj);
    if t1.mul_vec(x1) != t2.mul_vec(x2) {
        return Err(SystemError::Precondition("inputs do not agree in the colimit over J".into()));
    }
    // lift both and split the difference across the union
    let lift_full = |c: &super::Colimit, q: &[Scalar]| -> Vec<Scalar> {
        let amb = c.lift(q);
        let mut full = vec![Scalar::zero(); sys.dims().iter().sum()];
        let mut start = 0usize;
        let offsets: BTreeMap<usize, usize> = (0..sys.index().len())
            .map(|m| {
                let o = start;
                start += sys.dim(m);
                (m, o)
            })
            .collect();
        for &m in c.members() {
            for i in 0..sys.dim(m) {
                full[offsets[&m] + i] = amb[c.offset(m) + i].clone();
            }
        }
        full
    };
    let l1 = lift_full(&c1, x1);
    let l2 = lift_full(&c2, x2);
    let diff = vec_sub(&l1, &l2);
    let (y1, _y2) = if is_zero_vec(&diff) {
        (vec![Scalar::zero(); diff.len()], vec![Scalar::zero(); diff.len()])
    } else {
        split_over_union(sys, i1, i2, &diff)
            .map_err(|_| SystemError::Precondition("incompatible inputs: difference of lifts is not a relation".into()))?
    };
    let common = vec_sub(&l1, &y1);
    // the common representative is supported on I1 /\ I2
    let meet: Vec<usize> = i1.iter().filter(|e| i2.contains(e)).copied().collect();
    let cm = colimit(sys, Some(&meet));
    let mut start = 0usize;
    let offsets: BTreeMap<usize, usize> = (0..sys.index().len())
        .map(|m| {
            let o = start;
            start += sys.dim(m);
            (m, o)
        })
        .collect();
    for m in 0..sys.index().len() {
        if !meet.contains(&m) {
            for i in 0..sys.dim(m) {
                if !common[offsets[&m] + i].is_zero() {
                    return Err(SystemError::Precondition(
                        "incompatible inputs: glued representative leaks outside the intersection".into(),
                    ));
                }
            }
        }
    }
    let mut amb = vec![Scalar::zero(); cm.total_dim()];
    for &m in cm.members() {
        for i in 0..sys.dim(m) {
            amb[cm.offset(m) + i] = common[offsets[&m] + i].clone();
        }
    }
    let x = cm.reduce(&amb);
    debug_assert_eq!(tau(&cm, &c1).mul_vec(&x), x1.to_vec());
    debug_assert_eq!(tau(&cm, &c2).mul_vec(&x), x2.to_vec());
    Ok(x)
}

/// Outcome of the `N_A /\ M_I = N_I` check.
#[derive(Clone, Debug)]
pub struct HereditaryCheck {
    /// Reports for the preconditions (conditions I, II, III); when any of
    /// them fails the main check is skipped.
    pub preconditions: Vec<ConditionReport>,
    /// `Ok(())` on equality, or a vector of `N_A /\ M_I` outside `N_I`.
    /// `None` when the check was skipped.
    pub result: Option<Result<(), Vec<Scalar>>>,
}

impl HereditaryCheck {
    pub fn pass(&self) -> bool {
        matches!(self.result, Some(Ok(())))
    }
}

/// Checks the intersection identity `N_A /\ M_I = N_I` for a hereditary
/// subset `I` of a distributive quasi-lattice index, after verifying the
/// prelocalizability preconditions.
pub fn hereditary_intersection_check(
    sys: &IndSystem,
    q: &QuasiLattice,
    subset: &[usize],
) -> Result<HereditaryCheck, SystemError> {
    if !sys.index().is_hereditary(subset) {
        return Err(SystemError::Precondition("I is not hereditary".into()));
    }
    let preconditions = check_conditions(sys, q, &[Condition::I, Condition::II, Condition::III]);
    if preconditions.iter().any(|r| !r.pass) {
        return Ok(HereditaryCheck { preconditions, result: None });
    }
    let n_all = relation_subspace(sys, &(0..sys.index().len()).collect::<Vec<_>>());
    let n_i = relation_subspace(sys, subset);
    // M_I: coordinate subspace of the blocks in I
    let total: usize = sys.dims().iter().sum();
    let mut offsets = Vec::with_capacity(sys.index().len());
    let mut start = 0usize;
    for m in 0..sys.index().len() {
        offsets.push(start);
        start += sys.dim(m);
    }
    let mut rows = Vec::new();
    for &m in subset {
        for i in 0..sys.dim(m) {
            let mut e = vec![Scalar::zero(); total];
            e[offsets[m] + i] = crate::scalar::int(1);
            rows.push(e);
        }
    }
    let m_i =
        if rows.is_empty() { Subspace::zero(total) } else { Subspace::from_rows(&Mat::from_rows(rows)) };
    let capped = n_all.intersect(&m_i);
    let result = if capped == n_i {
        Ok(())
    } else {
        Err(capped.witness_not_in(&n_i).expect("N_I is always contained in the intersection"))
    };
    Ok(HereditaryCheck { preconditions, result: Some(result) })
}
