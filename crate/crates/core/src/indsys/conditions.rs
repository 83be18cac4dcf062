//! The localizability conditions on inductive systems over quasi-lattices:
//! injectivity of connecting maps, decomposability over joins, gluing over
//! meets for pairs, and the family-strength gluing condition.
//!
//! Every failure carries a replayable counterexample; [`replay`] re-derives
//! the failure from the stored data alone.

use super::IndSystem;
use crate::lattice::QuasiLattice;
use crate::linalg::{Mat, Subspace};
use crate::scalar::Scalar;
use num_traits::Zero;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Condition {
    /// Connecting maps are injective.
    I,
    /// Every vector over a join decomposes through the two summands.
    II,
    /// Vectors agreeing at a common upper bound glue over the meet.
    III,
    /// The family-strength form of III (arbitrary bounded families).
    IIIPrime,
}

impl std::fmt::Display for Condition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Condition::I => write!(f, "I"),
            Condition::II => write!(f, "II"),
            Condition::III => write!(f, "III"),
            Condition::IIIPrime => write!(f, "III'"),
        }
    }
}

/// Replayable witness of a condition failure.
#[derive(Clone, Debug)]
pub enum Counterexample {
    /// A nonzero kernel vector of `rho_{a b}`.
    Injectivity { pair: (usize, usize), kernel_vector: Vec<Scalar> },
    /// A vector of `X(a1 \/ a2)` outside the sum of the two images.
    Decomposition { pair: (usize, usize), join: usize, target_vector: Vec<Scalar> },
    /// Vectors agreeing at `upper` with no common preimage over the meet.
    Gluing { pair: (usize, usize), upper: usize, witness: (Vec<Scalar>, Vec<Scalar>) },
    /// A compatible family with no gluing over the infimum.
    Family { family: Vec<usize>, upper: usize, witnesses: Vec<Vec<Scalar>> },
}

#[derive(Clone, Debug)]
pub struct ConditionReport {
    pub condition: Condition,
    pub pass: bool,
    pub counterexample: Option<Counterexample>,
}

impl ConditionReport {
    fn ok(condition: Condition) -> Self {
        ConditionReport { condition, pass: true, counterexample: None }
    }

    fn fail(condition: Condition, cex: Counterexample) -> Self {
        ConditionReport { condition, pass: false, counterexample: Some(cex) }
    }
}

/// Image of `x -> (rho_{m,a1} x, ..., rho_{m,an} x)` as a row subspace of
/// the concatenated target.
fn joint_image(sys: &IndSystem, m: usize, targets: &[usize]) -> Subspace {
    let total: usize = targets.iter().map(|&t| sys.dim(t)).sum();
    let dm = sys.dim(m);
    if dm == 0 {
        return Subspace::zero(total);
    }
    let mats: Vec<Mat> = targets.iter().map(|&t| sys.map(m, t)).collect();
    let rows: Vec<Vec<Scalar>> = (0..dm)
        .map(|j| {
            let mut row = Vec::with_capacity(total);
            for mat in &mats {
                for i in 0..mat.rows() {
                    row.push(mat.at(i, j).clone());
                }
            }
            row
        })
        .collect();
    Subspace::from_rows(&Mat::from_rows(rows))
}

/// Kernel of the compatibility map
/// `(x_1..x_n) -> (rho_{a1,u} x_1 - rho_{aw,u} x_w)_{w>=2}` as a row
/// subspace of the concatenated sources: the tuples agreeing at `u`.
fn compatible_tuples(sys: &IndSystem, family: &[usize], upper: usize) -> Subspace {
    let total: usize = family.iter().map(|&a| sys.dim(a)).sum();
    let du = sys.dim(upper);
    let eq_rows = du * family.len().saturating_sub(1);
    if eq_rows == 0 {
        // single member: everything is compatible
        let eye = Mat::identity(total);
        return Subspace::from_rows(&eye);
    }
    let mut offsets = Vec::with_capacity(family.len());
    let mut off = 0;
    for &a in family {
        offsets.push(off);
        off += sys.dim(a);
    }
    let mut sys_rows = Vec::with_capacity(eq_rows);
    let first = sys.map(family[0], upper);
    for (w, &aw) in family.iter().enumerate().skip(1) {
        let mw = sys.map(aw, upper);
        for r in 0..du {
            let mut row = vec![Scalar::zero(); total];
            for j in 0..sys.dim(family[0]) {
                row[offsets[0] + j] = first.at(r, j).clone();
            }
            for j in 0..sys.dim(aw) {
                row[offsets[w] + j] = -mw.at(r, j).clone();
            }
            sys_rows.push(row);
        }
    }
    let m = Mat::from_rows(sys_rows);
    Subspace::from_rows(&m.kernel_basis())
}

fn split_tuple(sys: &IndSystem, family: &[usize], v: &[Scalar]) -> Vec<Vec<Scalar>> {
    let mut out = Vec::with_capacity(family.len());
    let mut off = 0;
    for &a in family {
        out.push(v[off..off + sys.dim(a)].to_vec());
        off += sys.dim(a);
    }
    out
}

pub fn check_condition(sys: &IndSystem, q: &QuasiLattice, condition: Condition) -> ConditionReport {
    assert_eq!(q.poset(), sys.index(), "quasi-lattice must order the system's index");
    let n = sys.index().len();
    match condition {
        Condition::I => {
            for (a, b) in sys.index().comparable_pairs() {
                let ker = sys.map(a, b).kernel_basis();
                if ker.rows() > 0 {
                    return ConditionReport::fail(
                        Condition::I,
                        Counterexample::Injectivity { pair: (a, b), kernel_vector: ker.row(0).to_vec() },
                    );
                }
            }
            ConditionReport::ok(Condition::I)
        }
        Condition::II => {
            for a1 in 0..n {
                for a2 in a1..n {
                    let Some(join) = q.join(a1, a2) else { continue };
                    let targets = [join];
                    let im1 = joint_image(sys, a1, &targets);
                    let im2 = joint_image(sys, a2, &targets);
                    let sum = Subspace::from_rows(&im1.basis().vstack(im2.basis()));
                    if sum.dim() < sys.dim(join) {
                        // some standard basis vector of X(join) is missed
                        let missing = (0..sys.dim(join))
                            .map(|i| {
                                let mut e = vec![Scalar::zero(); sys.dim(join)];
                                e[i] = crate::scalar::int(1);
                                e
                            })
                            .find(|e| !sum.contains(e))
                            .expect("a proper subspace misses a basis vector");
                        return ConditionReport::fail(
                            Condition::II,
                            Counterexample::Decomposition { pair: (a1, a2), join, target_vector: missing },
                        );
                    }
                }
            }
            ConditionReport::ok(Condition::II)
        }
        Condition::III => {
            // Checked against every common upper bound, not only the join.
            // Pairs may repeat an element: the degenerate pair demands
            // injectivity of rho toward the bound, matching the family
            // quantifier of the strong form.
            for a1 in 0..n {
                for a2 in a1..n {
                    let uppers = sys.index().upper_bounds(&[a1, a2]);
                    for &u in &uppers {
                        let family = [a1, a2];
                        let compat = compatible_tuples(sys, &family, u);
                        let image = joint_image(sys, q.meet(a1, a2), &family);
                        debug_assert!(compat.contains_subspace(&image), "functoriality");
                        if let Some(w) = compat.witness_not_in(&image) {
                            let parts = split_tuple(sys, &family, &w);
                            return ConditionReport::fail(
                                Condition::III,
                                Counterexample::Gluing {
                                    pair: (a1, a2),
                                    upper: u,
                                    witness: (parts[0].clone(), parts[1].clone()),
                                },
                            );
                        }
                    }
                }
            }
            ConditionReport::ok(Condition::III)
        }
        Condition::IIIPrime => check_localizable(sys, q, None),
    }
}

/// Runs the requested conditions in order.
pub fn check_conditions(
    sys: &IndSystem,
    q: &QuasiLattice,
    which: &[Condition],
) -> Vec<ConditionReport> {
    which.iter().map(|&c| check_condition(sys, q, c)).collect()
}

/// The family-strength gluing condition: for every bounded-above family (of
/// size at most `family_cap`, default exhaustive) and every compatible
/// family of vectors, some vector over the infimum restricts to all of
/// them.
///
/// Families may repeat an element; a repeated element with two different
/// vectors is compatible at a bound `u` exactly on the kernel of
/// `rho_{_,u}`, and gluing then forces the vectors equal. So the repeated
/// part of the quantifier is equivalent to injectivity of every connecting
/// map, checked first; the remaining families are enumerated as subsets.
///
/// Compatibility at a bound `u` implies compatibility at every larger
/// bound, so the compatible-tuple space only grows with the bound and it
/// suffices to test the maximal upper bounds of each family.
pub fn check_localizable(
    sys: &IndSystem,
    q: &QuasiLattice,
    family_cap: Option<usize>,
) -> ConditionReport {
    assert_eq!(q.poset(), sys.index(), "quasi-lattice must order the system's index");
    let n = sys.index().len();
    let cap = family_cap.unwrap_or(n).min(n);
    for (a, u) in sys.index().comparable_pairs() {
        let ker = sys.map(a, u).kernel_basis();
        if ker.rows() > 0 {
            let k = ker.row(0).to_vec();
            let zero = vec![Scalar::zero(); k.len()];
            return ConditionReport::fail(
                Condition::IIIPrime,
                Counterexample::Family { family: vec![a, a], upper: u, witnesses: vec![k, zero] },
            );
        }
    }
    let mut family: Vec<usize> = Vec::new();
    fn rec(
        sys: &IndSystem,
        q: &QuasiLattice,
        n: usize,
        cap: usize,
        family: &mut Vec<usize>,
    ) -> Option<Counterexample> {
        if family.len() >= 2 {
            let uppers = sys.index().upper_bounds(family);
            if uppers.is_empty() {
                return None; // no superset is bounded either
            }
            let inf = q.inf(family);
            for &u in &sys.index().maximal_of(&uppers) {
                let compat = compatible_tuples(sys, family, u);
                let image = joint_image(sys, inf, family);
                debug_assert!(compat.contains_subspace(&image), "functoriality");
                if let Some(w) = compat.witness_not_in(&image) {
                    return Some(Counterexample::Family {
                        family: family.clone(),
                        upper: u,
                        witnesses: split_tuple(sys, family, &w),
                    });
                }
            }
        }
        if family.len() == cap {
            return None;
        }
        let start = family.last().map_or(0, |&l| l + 1);
        for i in start..n {
            family.push(i);
            if let Some(cex) = rec(sys, q, n, cap, family) {
                return Some(cex);
            }
            family.pop();
        }
        None
    }
    match rec(sys, q, n, cap, &mut family) {
        Some(cex) => ConditionReport::fail(Condition::IIIPrime, cex),
        None => ConditionReport::ok(Condition::IIIPrime),
    }
}

/// Re-checks a counterexample against the system; true iff it still
/// demonstrates the failure it was recorded for.
pub fn replay(sys: &IndSystem, q: &QuasiLattice, cex: &Counterexample) -> bool {
    match cex {
        Counterexample::Injectivity { pair: (a, b), kernel_vector } => {
            !crate::scalar::is_zero_vec(kernel_vector)
                && crate::scalar::is_zero_vec(&sys.map(*a, *b).mul_vec(kernel_vector))
        }
        Counterexample::Decomposition { pair: (a1, a2), join, target_vector } => {
            let im1 = joint_image(sys, *a1, &[*join]);
            let im2 = joint_image(sys, *a2, &[*join]);
            let sum = Subspace::from_rows(&im1.basis().vstack(im2.basis()));
            !sum.contains(target_vector)
        }
        Counterexample::Gluing { pair: (a1, a2), upper, witness } => {
            let lhs = sys.map(*a1, *upper).mul_vec(&witness.0);
            let rhs = sys.map(*a2, *upper).mul_vec(&witness.1);
            if lhs != rhs {
                return false;
            }
            let image = joint_image(sys, q.meet(*a1, *a2), &[*a1, *a2]);
            let mut joint = witness.0.clone();
            joint.extend(witness.1.iter().cloned());
            !image.contains(&joint)
        }
        Counterexample::Family { family, upper, witnesses } => {
            let imgs: Vec<Vec<Scalar>> = family
                .iter()
                .zip(witnesses)
                .map(|(&a, w)| sys.map(a, *upper).mul_vec(w))
                .collect();
            if imgs.windows(2).any(|p| p[0] != p[1]) {
                return false;
            }
            let image = joint_image(sys, q.inf(family), family);
            let joint: Vec<Scalar> = witnesses.iter().flatten().cloned().collect();
            !image.contains(&joint)
        }
    }
}
