//! Finite posets, quasi-lattices, distributivity and morphism checks.
//!
//! A quasi-lattice is a poset in which every pair has an infimum and every
//! bounded-above pair has a supremum. Elements are handled by index into the
//! poset's name table; all checks are exhaustive over the finite universe.

pub mod cones;

pub use cones::{cone_lattice_from_family, ConeLattice};

use std::collections::BTreeSet;
use std::fmt;

/// Maximum number of elements accepted by the exhaustive checkers.
pub const MAX_ELEMENTS: usize = 64;

/// Default cap on subset size in the infinite-distributivity check.
pub const DEFAULT_SUBSET_CAP: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeError {
    NotReflexive(usize),
    NotAntisymmetric(usize, usize),
    NotTransitive(usize, usize, usize),
    /// A pair with no greatest lower bound.
    PairWithoutInfimum(usize, usize),
    /// A bounded-above pair with no least upper bound.
    BoundedPairWithoutSupremum(usize, usize),
    TooManyElements(usize),
    UnknownElement(String),
}

impl fmt::Display for LatticeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeError::NotReflexive(a) => write!(f, "relation not reflexive at element {a}"),
            LatticeError::NotAntisymmetric(a, b) => {
                write!(f, "relation not antisymmetric on pair ({a}, {b})")
            }
            LatticeError::NotTransitive(a, b, c) => {
                write!(f, "relation not transitive on chain ({a}, {b}, {c})")
            }
            LatticeError::PairWithoutInfimum(a, b) => {
                write!(f, "pair without infimum: ({a}, {b})")
            }
            LatticeError::BoundedPairWithoutSupremum(a, b) => {
                write!(f, "bounded pair without supremum: ({a}, {b})")
            }
            LatticeError::TooManyElements(n) => {
                write!(f, "poset has {n} elements; exhaustive checks are capped at {MAX_ELEMENTS}")
            }
            LatticeError::UnknownElement(name) => write!(f, "unknown element {name:?}"),
        }
    }
}

impl std::error::Error for LatticeError {}

/// Finite poset: named elements and a validated order relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoset {
    names: Vec<String>,
    leq: Vec<Vec<bool>>,
}

impl FinitePoset {
    /// Builds a poset from explicit `a <= b` pairs (by name); the relation is
    /// closed reflexively and transitively, then validated.
    pub fn from_pairs(names: Vec<String>, pairs: &[(String, String)]) -> Result<Self, LatticeError> {
        let n = names.len();
        if n > MAX_ELEMENTS {
            return Err(LatticeError::TooManyElements(n));
        }
        let index_of = |name: &str| {
            names
                .iter()
                .position(|x| x == name)
                .ok_or_else(|| LatticeError::UnknownElement(name.to_string()))
        };
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for (a, b) in pairs {
            let (i, j) = (index_of(a)?, index_of(b)?);
            leq[i][j] = true;
        }
        // transitive closure
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        FinitePoset::from_relation(names, leq)
    }

    /// Validates a full relation matrix.
    pub fn from_relation(names: Vec<String>, leq: Vec<Vec<bool>>) -> Result<Self, LatticeError> {
        let n = names.len();
        if n > MAX_ELEMENTS {
            return Err(LatticeError::TooManyElements(n));
        }
        assert!(leq.len() == n && leq.iter().all(|r| r.len() == n), "relation shape mismatch");
        for i in 0..n {
            if !leq[i][i] {
                return Err(LatticeError::NotReflexive(i));
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && leq[i][j] && leq[j][i] {
                    return Err(LatticeError::NotAntisymmetric(i, j));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if leq[i][j] {
                    for k in 0..n {
                        if leq[j][k] && !leq[i][k] {
                            return Err(LatticeError::NotTransitive(i, j, k));
                        }
                    }
                }
            }
        }
        Ok(FinitePoset { names, leq })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|x| x == name)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn comparable_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.len();
        (0..n).flat_map(move |a| (0..n).filter(move |&b| a != b && self.leq(a, b)).map(move |b| (a, b)))
    }

    /// Covering relation: `a < b` with nothing strictly between.
    pub fn covers(&self, a: usize, b: usize) -> bool {
        a != b
            && self.leq(a, b)
            && !(0..self.len()).any(|c| c != a && c != b && self.leq(a, c) && self.leq(c, b))
    }

    pub fn upper_bounds(&self, set: &[usize]) -> Vec<usize> {
        (0..self.len()).filter(|&u| set.iter().all(|&a| self.leq(a, u))).collect()
    }

    pub fn lower_bounds(&self, set: &[usize]) -> Vec<usize> {
        (0..self.len()).filter(|&u| set.iter().all(|&a| self.leq(u, a))).collect()
    }

    /// Maximal elements of an arbitrary subset.
    pub fn maximal_of(&self, set: &[usize]) -> Vec<usize> {
        set.iter()
            .copied()
            .filter(|&a| !set.iter().any(|&b| b != a && self.leq(a, b)))
            .collect()
    }

    /// Downward closure of a subset.
    pub fn hereditary_closure(&self, set: &[usize]) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for &s in set {
            for a in 0..self.len() {
                if self.leq(a, s) {
                    out.insert(a);
                }
            }
        }
        out
    }

    pub fn is_hereditary(&self, set: &[usize]) -> bool {
        let have: BTreeSet<usize> = set.iter().copied().collect();
        self.hereditary_closure(set) == have
    }
}

/// Quasi-lattice: a poset with the total meet table and the partial join
/// table (defined exactly on bounded-above pairs).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiLattice {
    poset: FinitePoset,
    meet: Vec<Vec<usize>>,
    join: Vec<Vec<Option<usize>>>,
}

impl QuasiLattice {
    /// Computes the meet and join tables, reporting the first failing pair.
    pub fn from_poset(poset: FinitePoset) -> Result<Self, LatticeError> {
        let n = poset.len();
        let mut meet = vec![vec![0usize; n]; n];
        let mut join = vec![vec![None; n]; n];
        for a in 0..n {
            for b in 0..n {
                let lbs = poset.lower_bounds(&[a, b]);
                let greatest = lbs.iter().copied().find(|&g| lbs.iter().all(|&l| poset.leq(l, g)));
                match greatest {
                    Some(g) => meet[a][b] = g,
                    None => return Err(LatticeError::PairWithoutInfimum(a, b)),
                }
                let ubs = poset.upper_bounds(&[a, b]);
                if !ubs.is_empty() {
                    let least = ubs.iter().copied().find(|&s| ubs.iter().all(|&u| poset.leq(s, u)));
                    match least {
                        Some(s) => join[a][b] = Some(s),
                        None => return Err(LatticeError::BoundedPairWithoutSupremum(a, b)),
                    }
                }
            }
        }
        Ok(QuasiLattice { poset, meet, join })
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.poset.leq(a, b)
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a][b]
    }

    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        self.join[a][b]
    }

    /// True iff every pair has a supremum.
    pub fn is_lattice(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| (0..n).all(|b| self.join[a][b].is_some()))
    }

    /// Infimum of a nonempty subset (pairwise meets fold to the g.l.b.).
    pub fn inf(&self, set: &[usize]) -> usize {
        assert!(!set.is_empty(), "infimum of the empty family");
        set.iter().copied().reduce(|a, b| self.meet(a, b)).unwrap()
    }

    /// Supremum of a nonempty subset when it exists.
    pub fn sup(&self, set: &[usize]) -> Option<usize> {
        assert!(!set.is_empty(), "supremum of the empty family");
        let mut acc: Option<usize> = None;
        for &b in set {
            acc = Some(match acc {
                None => b,
                Some(a) => self.join(a, b)?,
            });
        }
        acc
    }

    /// Closure of a subset under pairwise meets.
    pub fn wedge_closure(&self, set: &[usize]) -> BTreeSet<usize> {
        let mut out: BTreeSet<usize> = set.iter().copied().collect();
        loop {
            let items: Vec<usize> = out.iter().copied().collect();
            let before = out.len();
            for &a in &items {
                for &b in &items {
                    out.insert(self.meet(a, b));
                }
            }
            if out.len() == before {
                return out;
            }
        }
    }
}

/// Counterexample triple for the distributive law.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistributivityCounterexample {
    pub a: usize,
    pub pair: (usize, usize),
    pub left: usize,
    pub right: usize,
}

/// Counterexample for the infinite-distributivity identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfDistributivityCounterexample {
    pub a: usize,
    pub family: Vec<usize>,
    pub left: usize,
    pub right: usize,
}

/// Verdict of the distributivity checks.
#[derive(Clone, Debug)]
pub struct DistributivityReport {
    /// First failing triple of the quasi-lattice law, if any.
    pub counterexample: Option<DistributivityCounterexample>,
    /// Infinite-distributivity verdict, checked only for full lattices;
    /// `None` when the structure has unbounded pairs.
    pub infinite: Option<Result<(), InfDistributivityCounterexample>>,
    /// Cap used for the subset enumeration.
    pub subset_cap: usize,
}

impl DistributivityReport {
    pub fn is_distributive(&self) -> bool {
        self.counterexample.is_none()
    }

    pub fn is_infinitely_distributive(&self) -> bool {
        matches!(self.infinite, Some(Ok(())))
    }
}

/// Checks `a /\ (b \/ c) = (a /\ b) \/ (a /\ c)` for every element and every
/// bounded-above pair; for full lattices additionally checks
/// `a \/ inf(S) = inf_{s in S} (a \/ s)` for all nonempty subsets up to the
/// cap (the finite universe makes that check exhaustive).
pub fn is_distributive(q: &QuasiLattice, subset_cap: usize) -> DistributivityReport {
    let n = q.len();
    let mut counterexample = None;
    'outer: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let Some(join_bc) = q.join(b, c) else { continue };
                let left = q.meet(a, join_bc);
                // (a /\ b) and (a /\ c) are both below left, hence bounded.
                let right = q
                    .join(q.meet(a, b), q.meet(a, c))
                    .expect("meets below a common element are bounded above");
                if left != right {
                    counterexample =
                        Some(DistributivityCounterexample { a, pair: (b, c), left, right });
                    break 'outer;
                }
            }
        }
    }
    let infinite = q.is_lattice().then(|| check_infinite_distributivity(q, subset_cap));
    DistributivityReport { counterexample, infinite, subset_cap }
}

fn check_infinite_distributivity(
    q: &QuasiLattice,
    cap: usize,
) -> Result<(), InfDistributivityCounterexample> {
    let n = q.len();
    let mut family = Vec::new();
    subsets_up_to(n, cap.min(n), &mut family, &mut |fam| {
        let inf = q.inf(fam);
        for a in 0..n {
            let left = q.join(a, inf).expect("lattice");
            let mut right = None;
            for &s in fam {
                let j = q.join(a, s).expect("lattice");
                right = Some(match right {
                    None => j,
                    Some(r) => q.meet(r, j),
                });
            }
            if left != right.unwrap() {
                return Err(InfDistributivityCounterexample {
                    a,
                    family: fam.to_vec(),
                    left,
                    right: right.unwrap(),
                });
            }
        }
        Ok(())
    })
}

fn subsets_up_to<E>(
    n: usize,
    cap: usize,
    current: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]) -> Result<(), E>,
) -> Result<(), E> {
    fn rec<E>(
        n: usize,
        cap: usize,
        current: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]) -> Result<(), E>,
    ) -> Result<(), E> {
        if !current.is_empty() {
            f(current)?;
        }
        if current.len() == cap {
            return Ok(());
        }
        let start = current.last().map_or(0, |&l| l + 1);
        for i in start..n {
            current.push(i);
            rec(n, cap, current, f)?;
            current.pop();
        }
        Ok(())
    }
    rec(n, cap, current, f)
}

/// Monotone map between quasi-lattices, by element table.
#[derive(Clone, Debug)]
pub struct LatticeMorphism {
    pub source: QuasiLattice,
    pub target: QuasiLattice,
    pub map: Vec<usize>,
}

/// Per-hypothesis verdicts for a quasi-lattice morphism.
#[derive(Clone, Debug, Default)]
pub struct MorphismReport {
    pub not_nondecreasing: Option<(usize, usize)>,
    pub meet_failure: Option<(usize, usize)>,
    pub join_failure: Option<(usize, usize)>,
    pub injective: bool,
}

impl MorphismReport {
    pub fn is_morphism(&self) -> bool {
        self.not_nondecreasing.is_none() && self.meet_failure.is_none() && self.join_failure.is_none()
    }
}

pub fn check_morphism(m: &LatticeMorphism) -> MorphismReport {
    let n = m.source.len();
    assert_eq!(m.map.len(), n, "map table arity");
    let mut report = MorphismReport { injective: true, ..Default::default() };
    for a in 0..n {
        for b in 0..n {
            if a != b && m.map[a] == m.map[b] {
                report.injective = false;
            }
            if m.source.leq(a, b) && !m.target.leq(m.map[a], m.map[b]) && report.not_nondecreasing.is_none() {
                report.not_nondecreasing = Some((a, b));
            }
            if m.target.meet(m.map[a], m.map[b]) != m.map[m.source.meet(a, b)]
                && report.meet_failure.is_none()
            {
                report.meet_failure = Some((a, b));
            }
            if let Some(j) = m.source.join(a, b) {
                if m.target.join(m.map[a], m.map[b]) != Some(m.map[j]) && report.join_failure.is_none() {
                    report.join_failure = Some((a, b));
                }
            }
        }
    }
    report
}

/// The hypotheses required of a morphism before systems are pushed along it:
/// a quasi-lattice morphism, injective, into a distributive lattice whose
/// every element is a finite join of image elements.
#[derive(Clone, Debug)]
pub struct T1Report {
    pub morphism: MorphismReport,
    pub target_is_lattice: bool,
    pub target_distributivity: DistributivityReport,
    /// First element of the target not generated by joins of image elements.
    pub join_generation_failure: Option<usize>,
}

impl T1Report {
    pub fn pass(&self) -> bool {
        self.morphism.is_morphism()
            && self.morphism.injective
            && self.target_is_lattice
            && self.target_distributivity.is_distributive()
            && self.join_generation_failure.is_none()
    }
}

pub fn check_t1_hypotheses(m: &LatticeMorphism) -> T1Report {
    let morphism = check_morphism(m);
    let target_is_lattice = m.target.is_lattice();
    let target_distributivity = is_distributive(&m.target, DEFAULT_SUBSET_CAP);
    // join-closure of the image
    let mut reached: BTreeSet<usize> = m.map.iter().copied().collect();
    loop {
        let items: Vec<usize> = reached.iter().copied().collect();
        let before = reached.len();
        for &a in &items {
            for &b in &items {
                if let Some(j) = m.target.join(a, b) {
                    reached.insert(j);
                }
            }
        }
        if reached.len() == before {
            break;
        }
    }
    let join_generation_failure = (0..m.target.len()).find(|i| !reached.contains(i));
    T1Report { morphism, target_is_lattice, target_distributivity, join_generation_failure }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("e{i}")).collect()
    }

    fn chain(n: usize) -> QuasiLattice {
        let pairs: Vec<(String, String)> =
            (0..n - 1).map(|i| (format!("e{i}"), format!("e{}", i + 1))).collect();
        QuasiLattice::from_poset(FinitePoset::from_pairs(names(n), &pairs).unwrap()).unwrap()
    }

    /// The four-element poset with two bottoms and two incomparable tops.
    fn two_by_two() -> FinitePoset {
        FinitePoset::from_pairs(
            vec!["a".into(), "b".into(), "c".into(), "d".into()],
            &[
                ("a".into(), "c".into()),
                ("a".into(), "d".into()),
                ("b".into(), "c".into()),
                ("b".into(), "d".into()),
            ],
        )
        .unwrap()
    }

    fn powerset(k: usize) -> QuasiLattice {
        let n = 1usize << k;
        let names: Vec<String> = (0..n).map(|s| format!("s{s}")).collect();
        let mut leq = vec![vec![false; n]; n];
        for (a, row) in leq.iter_mut().enumerate() {
            for (b, cell) in row.iter_mut().enumerate() {
                *cell = a & b == a;
            }
        }
        QuasiLattice::from_poset(FinitePoset::from_relation(names, leq).unwrap()).unwrap()
    }

    fn diamond_m3() -> QuasiLattice {
        let pairs: Vec<(String, String)> = ["x", "y", "z"]
            .iter()
            .flat_map(|m| {
                vec![("bot".to_string(), m.to_string()), (m.to_string(), "top".to_string())]
            })
            .collect();
        QuasiLattice::from_poset(
            FinitePoset::from_pairs(
                vec!["bot".into(), "x".into(), "y".into(), "z".into(), "top".into()],
                &pairs,
            )
            .unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn chain_is_a_lattice() {
        let q = chain(3);
        assert!(q.is_lattice());
        assert_eq!(q.meet(0, 2), 0);
        assert_eq!(q.join(0, 2), Some(2));
    }

    #[test]
    fn two_by_two_has_no_infimum() {
        // {a, b} has no common lower bound at all.
        let err = QuasiLattice::from_poset(two_by_two()).unwrap_err();
        assert_eq!(err, LatticeError::PairWithoutInfimum(0, 1));
    }

    #[test]
    fn bounded_pair_without_supremum_detected() {
        // bottom, two middles, two incomparable upper bounds of the middles
        let p = FinitePoset::from_pairs(
            vec!["o".into(), "a".into(), "b".into(), "c".into(), "d".into()],
            &[
                ("o".into(), "a".into()),
                ("o".into(), "b".into()),
                ("a".into(), "c".into()),
                ("a".into(), "d".into()),
                ("b".into(), "c".into()),
                ("b".into(), "d".into()),
            ],
        )
        .unwrap();
        let err = QuasiLattice::from_poset(p).unwrap_err();
        assert_eq!(err, LatticeError::BoundedPairWithoutSupremum(1, 2));
    }

    #[test]
    fn powerset_is_infinitely_distributive() {
        let q = powerset(3);
        let report = is_distributive(&q, DEFAULT_SUBSET_CAP);
        assert!(report.is_distributive());
        assert!(report.is_infinitely_distributive());
    }

    #[test]
    fn diamond_reports_counterexample() {
        let q = diamond_m3();
        let report = is_distributive(&q, DEFAULT_SUBSET_CAP);
        assert!(!report.is_distributive());
        let c = report.counterexample.unwrap();
        assert_ne!(c.left, c.right);
    }

    #[test]
    fn identity_morphism_passes_t1_on_powerset() {
        let q = powerset(2);
        let m = LatticeMorphism { source: q.clone(), target: q, map: (0..4).collect() };
        let t1 = check_t1_hypotheses(&m);
        assert!(t1.pass());
    }

    #[test]
    fn collapse_map_fails_injectivity() {
        let q = chain(3);
        let m = LatticeMorphism { source: q.clone(), target: q, map: vec![0, 0, 2] };
        let report = check_morphism(&m);
        assert!(!report.injective);
    }

    #[test]
    fn closures() {
        let q = powerset(2); // elements 0..4 are subsets of {0,1} by mask
        assert_eq!(
            q.poset().hereditary_closure(&[3]),
            [0usize, 1, 2, 3].into_iter().collect::<BTreeSet<_>>()
        );
        assert!(q.poset().is_hereditary(&[0, 1]));
        assert!(!q.poset().is_hereditary(&[3]));
        // wedge closure of the two singletons adds the empty set
        assert_eq!(q.wedge_closure(&[1, 2]), [0usize, 1, 2].into_iter().collect::<BTreeSet<_>>());
    }

    #[test]
    fn poset_validation_errors() {
        let bad = FinitePoset::from_relation(names(2), vec![vec![true, true], vec![true, true]]);
        assert_eq!(bad.unwrap_err(), LatticeError::NotAntisymmetric(0, 1));
    }
}
