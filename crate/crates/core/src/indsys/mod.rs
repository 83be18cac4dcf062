//! Inductive systems of finite-dimensional rational vector spaces over
//! finite posets: colimits as explicit quotients, canonical maps between
//! colimits of restrictions, localizability conditions, pushforwards along
//! quasi-lattice morphisms, and the constructive decomposition operations.
//!
//! The colimit of a system over an index subset `I` is the quotient of the
//! direct sum of the member spaces by the relation subspace spanned by
//! `iota_a x - iota_b rho_ab x`; all subspaces are canonicalized by exact
//! row reduction, so equality of subspaces is equality of bases.

mod appendix;
mod conditions;
mod generator;
mod presentation;
mod pushforward;

pub use appendix::{
    glue, hereditary_intersection_check, split_over_union, HereditaryCheck,
};
pub use conditions::{
    check_condition, check_conditions, check_localizable, replay, Condition, ConditionReport,
    Counterexample,
};
pub use generator::{join_primes, random_prelocalizable, search_iii_without_iiiprime, GeneratorError};
pub use presentation::{cech_sign_equivalence, quotient_presentation, CechReport, Presentation, WedgeSpace};
pub use pushforward::{pushforward, Pushforward, PushforwardError};

use crate::lattice::FinitePoset;
use crate::linalg::{Mat, Subspace};
use crate::scalar::Scalar;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SystemError {
    /// A connecting map is missing or supplied for an incomparable pair.
    BadMapTable { pair: (usize, usize), reason: &'static str },
    /// Matrix shape does not match the declared dimensions.
    ShapeMismatch { pair: (usize, usize) },
    /// Functoriality `rho_ac = rho_bc rho_ab` fails on a chain.
    FunctorialityFailure { chain: (usize, usize, usize) },
    /// An element outside the index was referenced.
    UnknownElement(usize),
    /// A cofinality or heredity precondition failed.
    Precondition(String),
}

impl fmt::Display for SystemError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SystemError::BadMapTable { pair, reason } => {
                write!(f, "bad map table at pair {pair:?}: {reason}")
            }
            SystemError::ShapeMismatch { pair } => write!(f, "matrix shape mismatch at pair {pair:?}"),
            SystemError::FunctorialityFailure { chain } => {
                write!(f, "functoriality fails on chain {chain:?}")
            }
            SystemError::UnknownElement(e) => write!(f, "unknown index element {e}"),
            SystemError::Precondition(msg) => write!(f, "precondition failed: {msg}"),
        }
    }
}

impl std::error::Error for SystemError {}

/// Inductive system: dimensions per index element and a connecting matrix
/// for every strictly comparable pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndSystem {
    index: FinitePoset,
    dims: Vec<usize>,
    maps: BTreeMap<(usize, usize), Mat>,
}

impl IndSystem {
    /// Assembles a system, checking the map table covers exactly the
    /// strictly comparable pairs with matching shapes. Functoriality is
    /// checked separately by [`IndSystem::validate`].
    pub fn new(
        index: FinitePoset,
        dims: Vec<usize>,
        maps: BTreeMap<(usize, usize), Mat>,
    ) -> Result<Self, SystemError> {
        assert_eq!(dims.len(), index.len(), "dimension table arity");
        for (&(a, b), m) in &maps {
            if a == b || !index.leq(a, b) {
                return Err(SystemError::BadMapTable {
                    pair: (a, b),
                    reason: "map given for a non-strictly-comparable pair",
                });
            }
            if m.rows() != dims[b] || m.cols() != dims[a] {
                return Err(SystemError::ShapeMismatch { pair: (a, b) });
            }
        }
        for (a, b) in index.comparable_pairs() {
            if !maps.contains_key(&(a, b)) {
                return Err(SystemError::BadMapTable { pair: (a, b), reason: "missing map" });
            }
        }
        Ok(IndSystem { index, dims, maps })
    }

    pub fn index(&self) -> &FinitePoset {
        &self.index
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, a: usize) -> usize {
        self.dims[a]
    }

    /// The connecting map `rho_ab` for `a <= b` (identity when `a == b`).
    pub fn map(&self, a: usize, b: usize) -> Mat {
        if a == b {
            return Mat::identity(self.dims[a]);
        }
        self.maps.get(&(a, b)).expect("comparable pair").clone()
    }

    pub fn maps(&self) -> &BTreeMap<(usize, usize), Mat> {
        &self.maps
    }

    /// Verifies functoriality on every chain of length three.
    pub fn validate(&self) -> Result<(), SystemError> {
        let n = self.index.len();
        for a in 0..n {
            for b in 0..n {
                if a == b || !self.index.leq(a, b) {
                    continue;
                }
                for c in 0..n {
                    if b == c || !self.index.leq(b, c) || a == c {
                        continue;
                    }
                    let direct = self.map(a, c);
                    let composed = self.map(b, c).mul(&self.map(a, b));
                    if direct != composed {
                        return Err(SystemError::FunctorialityFailure { chain: (a, b, c) });
                    }
                }
            }
        }
        Ok(())
    }

    /// The restriction of the system to a subset of the index (a system in
    /// its own right, with the induced order).
    pub fn restrict(&self, subset: &[usize]) -> Result<IndSystem, SystemError> {
        let mut members: Vec<usize> = subset.to_vec();
        members.sort_unstable();
        members.dedup();
        if let Some(&bad) = members.iter().find(|&&m| m >= self.index.len()) {
            return Err(SystemError::UnknownElement(bad));
        }
        let names: Vec<String> = members.iter().map(|&m| self.index.name(m).to_string()).collect();
        let rel: Vec<Vec<bool>> = members
            .iter()
            .map(|&a| members.iter().map(|&b| self.index.leq(a, b)).collect())
            .collect();
        let poset = FinitePoset::from_relation(names, rel).expect("induced order is a poset");
        let dims: Vec<usize> = members.iter().map(|&m| self.dims[m]).collect();
        let mut maps = BTreeMap::new();
        for (i, &a) in members.iter().enumerate() {
            for (j, &b) in members.iter().enumerate() {
                if i != j && self.index.leq(a, b) {
                    maps.insert((i, j), self.map(a, b));
                }
            }
        }
        IndSystem::new(poset, dims, maps)
    }
}

/// Colimit of a system restricted to a member subset, with the canonical
/// projections and the canonicalized relation subspace.
#[derive(Clone, Debug)]
pub struct Colimit {
    members: Vec<usize>,
    offsets: BTreeMap<usize, usize>,
    total_dim: usize,
    dim: usize,
    relation_basis: Mat,
    pivots: Vec<usize>,
    free_cols: Vec<usize>,
    projections: BTreeMap<usize, Mat>,
}

impl Colimit {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn total_dim(&self) -> usize {
        self.total_dim
    }

    /// Row-reduced canonical basis of the relation subspace `N_I` inside
    /// the direct sum over the members.
    pub fn relation_basis(&self) -> &Mat {
        &self.relation_basis
    }

    /// Canonical projection matrix from a member space into the colimit.
    pub fn projection(&self, member: usize) -> &Mat {
        self.projections.get(&member).expect("member of the colimit")
    }

    pub fn offset(&self, member: usize) -> usize {
        self.offsets[&member]
    }

    /// Canonical quotient coordinates of an ambient vector: reduce by the
    /// relation basis, then read off the free coordinates.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.total_dim, "ambient dimension mismatch");
        let mut w = v.to_vec();
        for (row, &p) in self.pivots.iter().enumerate() {
            if !w[p].is_zero() {
                let c = w[p].clone();
                for j in 0..self.total_dim {
                    let delta = &c * self.relation_basis.at(row, j);
                    w[j] = &w[j] - &delta;
                }
            }
        }
        self.free_cols.iter().map(|&f| w[f].clone()).collect()
    }

    /// A section of the quotient map: canonical ambient representative.
    pub fn lift(&self, q: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(q.len(), self.dim, "quotient dimension mismatch");
        let mut v = vec![Scalar::zero(); self.total_dim];
        for (qi, &f) in q.iter().zip(&self.free_cols) {
            v[f] = qi.clone();
        }
        v
    }

    /// Image of a member-space vector in the colimit.
    pub fn project(&self, member: usize, x: &[Scalar]) -> Vec<Scalar> {
        self.projection(member).mul_vec(x)
    }

    /// Embeds a member vector into the ambient direct sum.
    pub fn embed(&self, member: usize, x: &[Scalar]) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.total_dim];
        let off = self.offsets[&member];
        for (i, xi) in x.iter().enumerate() {
            v[off + i] = xi.clone();
        }
        v
    }

    fn member_of_coord(&self, coord: usize) -> (usize, usize) {
        let (&member, &off) = self
            .offsets
            .iter()
            .filter(|&(_, &o)| o <= coord)
            .max_by_key(|&(_, &o)| o)
            .expect("offset covers the coordinate");
        (member, coord - off)
    }
}

fn relation_rows(
    sys: &IndSystem,
    members: &[usize],
    offsets: &BTreeMap<usize, usize>,
    total: usize,
    covering_only: bool,
) -> Vec<Vec<Scalar>> {
    let mut rows = Vec::new();
    for &a in members {
        for &b in members {
            if a == b || !sys.index().leq(a, b) {
                continue;
            }
            if covering_only
                && members
                    .iter()
                    .any(|&c| c != a && c != b && sys.index().leq(a, c) && sys.index().leq(c, b))
            {
                continue;
            }
            let rho = sys.map(a, b);
            for j in 0..sys.dim(a) {
                let mut row = vec![Scalar::zero(); total];
                row[offsets[&a] + j] = crate::scalar::int(1);
                for i in 0..sys.dim(b) {
                    row[offsets[&b] + i] = -rho.at(i, j).clone();
                }
                rows.push(row);
            }
        }
    }
    rows
}

/// Builds the colimit of the restriction of `sys` to `subset` (all of the
/// index if `None`): quotient dimension, canonical projections, and the
/// row-reduced relation basis.
pub fn colimit(sys: &IndSystem, subset: Option<&[usize]>) -> Colimit {
    let mut members: Vec<usize> = match subset {
        Some(s) => s.to_vec(),
        None => (0..sys.index().len()).collect(),
    };
    members.sort_unstable();
    members.dedup();
    assert!(members.iter().all(|&m| m < sys.index().len()), "member out of range");
    let mut offsets = BTreeMap::new();
    let mut total = 0usize;
    for &m in &members {
        offsets.insert(m, total);
        total += sys.dim(m);
    }
    let rows = relation_rows(sys, &members, &offsets, total, true);
    let relation = if rows.is_empty() { Mat::zero(0, total) } else { Mat::from_rows(rows) };
    let relation_basis = relation.row_space_basis();
    #[cfg(debug_assertions)]
    {
        // Covering pairs generate the same relation subspace as all pairs:
        // sigma(x, a, c) = sigma(x, a, b) + sigma(rho_ab x, b, c).
        let all = relation_rows(sys, &members, &offsets, total, false);
        let full = if all.is_empty() { Mat::zero(0, total) } else { Mat::from_rows(all) };
        debug_assert_eq!(
            relation_basis,
            full.row_space_basis(),
            "covering-pair relations must span the full relation subspace"
        );
    }
    let pivots: Vec<usize> = (0..relation_basis.rows())
        .map(|i| {
            (0..total)
                .find(|&j| !relation_basis.at(i, j).is_zero())
                .expect("canonical basis rows are nonzero")
        })
        .collect();
    let free_cols: Vec<usize> = (0..total).filter(|c| !pivots.contains(c)).collect();
    let dim = free_cols.len();
    let mut colim = Colimit {
        members: members.clone(),
        offsets,
        total_dim: total,
        dim,
        relation_basis,
        pivots,
        free_cols,
        projections: BTreeMap::new(),
    };
    for &m in &members {
        let cols: Vec<Vec<Scalar>> = (0..sys.dim(m))
            .map(|j| {
                let mut e = vec![Scalar::zero(); sys.dim(m)];
                e[j] = crate::scalar::int(1);
                colim.reduce(&colim.embed(m, &e))
            })
            .collect();
        let mat = Mat::from_fn(dim, sys.dim(m), |i, j| cols[j][i].clone());
        colim.projections.insert(m, mat);
    }
    colim
}

/// The canonical map `tau_{I,J} : colim X^I -> colim X^J` for nested member
/// sets, characterized by `tau . rho^I_a = rho^J_a` for every `a` in `I`.
pub fn tau(inner: &Colimit, outer: &Colimit) -> Mat {
    for m in inner.members() {
        assert!(outer.members().contains(m), "tau requires nested member sets");
    }
    let cols: Vec<Vec<Scalar>> = inner
        .free_cols
        .iter()
        .map(|&f| {
            let (member, local) = inner.member_of_coord(f);
            let mut e = vec![Scalar::zero(); outer.total_dim()];
            e[outer.offset(member) + local] = crate::scalar::int(1);
            outer.reduce(&e)
        })
        .collect();
    Mat::from_fn(outer.dim(), inner.dim(), |i, j| cols[j][i].clone())
}

/// The relation subspace `N_I` inside the full ambient direct sum
/// (over the whole index), canonicalized.
pub fn relation_subspace(sys: &IndSystem, subset: &[usize]) -> Subspace {
    let members: Vec<usize> = (0..sys.index().len()).collect();
    let mut offsets = BTreeMap::new();
    let mut total = 0usize;
    for &m in &members {
        offsets.insert(m, total);
        total += sys.dim(m);
    }
    let mut inside: Vec<usize> = subset.to_vec();
    inside.sort_unstable();
    inside.dedup();
    let rows = relation_rows(sys, &inside, &offsets, total, false);
    let m = if rows.is_empty() { Mat::zero(0, total) } else { Mat::from_rows(rows) };
    Subspace::from_rows(&m)
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;
    use crate::scalar::int;

    /// The four-element regression system: two bottoms, two incomparable
    /// tops, all spaces Q^1, one connecting map negated.
    pub fn remark_system() -> IndSystem {
        let poset = FinitePoset::from_pairs(
            vec!["al".into(), "be".into(), "ga".into(), "de".into()],
            &[
                ("al".into(), "ga".into()),
                ("al".into(), "de".into()),
                ("be".into(), "ga".into()),
                ("be".into(), "de".into()),
            ],
        )
        .unwrap();
        let one = |v: i64| Mat::from_rows(vec![vec![int(v)]]);
        let mut maps = BTreeMap::new();
        maps.insert((0, 2), one(1));
        maps.insert((0, 3), one(-1));
        maps.insert((1, 2), one(1));
        maps.insert((1, 3), one(1));
        IndSystem::new(poset, vec![1, 1, 1, 1], maps).unwrap()
    }

    /// Coordinate model over the index {0} <= {+}, {0} <= {-} with dims
    /// (1, 2, 2); the bottom space is the shared first coordinate.
    pub fn wedge_model() -> IndSystem {
        let poset = FinitePoset::from_pairs(
            vec!["zero".into(), "plus".into(), "minus".into()],
            &[("zero".into(), "plus".into()), ("zero".into(), "minus".into())],
        )
        .unwrap();
        let incl = Mat::from_rows(vec![vec![int(1)], vec![int(0)]]);
        let mut maps = BTreeMap::new();
        maps.insert((0, 1), incl.clone());
        maps.insert((0, 2), incl);
        IndSystem::new(poset, vec![1, 2, 2], maps).unwrap()
    }
}
