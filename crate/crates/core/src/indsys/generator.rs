//! Seeded generation of inductive systems that provably satisfy the
//! localizability conditions: the index is embedded into a powerset via its
//! join-prime elements, member spaces are label-coordinate subspaces of a
//! global space, and a random basis change is applied per element.
//!
//! The embedding `L(a) = {join-primes <= a}` sends meets to intersections
//! always, bounded joins to unions exactly when the primes separate (which
//! holds for distributive indices), and is validated exhaustively here; a
//! failed validation reports the index as non-embeddable.

use super::{check_condition, check_localizable, Condition, IndSystem};
use crate::lattice::{FinitePoset, QuasiLattice};
use crate::linalg::Mat;
use crate::scalar::int;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorError {
    /// The index has no meet/union-consistent label assignment; for finite
    /// indices this happens exactly when it is not distributive.
    NotEmbeddable { reason: String },
}

impl fmt::Display for GeneratorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorError::NotEmbeddable { reason } => {
                write!(f, "index has no powerset embedding: {reason}")
            }
        }
    }
}

impl std::error::Error for GeneratorError {}

/// Elements `g` such that `g <= b1 \/ b2` forces `g <= b1` or `g <= b2`
/// for every bounded pair. Principal filters over these are prime.
pub fn join_primes(q: &QuasiLattice) -> Vec<usize> {
    let n = q.len();
    (0..n)
        .filter(|&g| {
            (0..n).all(|b1| {
                (0..n).all(|b2| match q.join(b1, b2) {
                    Some(s) => !q.leq(g, s) || q.leq(g, b1) || q.leq(g, b2),
                    None => true,
                })
            })
        })
        .collect()
}

fn label_sets(q: &QuasiLattice) -> Result<Vec<Vec<usize>>, GeneratorError> {
    let primes = join_primes(q);
    let n = q.len();
    let labels: Vec<Vec<usize>> = (0..n)
        .map(|a| primes.iter().copied().filter(|&g| q.leq(g, a)).collect())
        .collect();
    // order embedding
    for a in 0..n {
        for b in 0..n {
            let subset = labels[a].iter().all(|g| labels[b].contains(g));
            if subset != q.leq(a, b) {
                return Err(GeneratorError::NotEmbeddable {
                    reason: format!(
                        "label sets do not reflect the order on ({}, {})",
                        q.poset().name(a),
                        q.poset().name(b)
                    ),
                });
            }
        }
    }
    // meet and bounded-join consistency
    for a in 0..n {
        for b in 0..n {
            let inter: Vec<usize> =
                labels[a].iter().copied().filter(|g| labels[b].contains(g)).collect();
            if labels[q.meet(a, b)] != inter {
                return Err(GeneratorError::NotEmbeddable {
                    reason: format!(
                        "meet of ({}, {}) is not the label intersection",
                        q.poset().name(a),
                        q.poset().name(b)
                    ),
                });
            }
            if let Some(j) = q.join(a, b) {
                let mut uni: Vec<usize> = labels[a].clone();
                for g in &labels[b] {
                    if !uni.contains(g) {
                        uni.push(*g);
                    }
                }
                uni.sort_unstable();
                if labels[j] != uni {
                    return Err(GeneratorError::NotEmbeddable {
                        reason: format!(
                            "join of ({}, {}) is not the label union",
                            q.poset().name(a),
                            q.poset().name(b)
                        ),
                    });
                }
            }
        }
    }
    Ok(labels)
}

fn random_invertible(rng: &mut impl RngExt, n: usize) -> Mat {
    if n == 0 {
        return Mat::zero(0, 0);
    }
    loop {
        let m = Mat::from_fn(n, n, |_, _| int(rng.random_range(-2..=2)));
        if m.inverse().is_some() {
            return m;
        }
    }
}

/// Generates a system over the index that satisfies conditions I, II, III
/// (hence also the family-strength gluing), by a coordinate model on the
/// join-prime labels followed by a random basis change per element.
/// Label multiplicities range in `1..=max_dim`.
pub fn random_prelocalizable(
    q: &QuasiLattice,
    max_dim: usize,
    seed: u64,
) -> Result<IndSystem, GeneratorError> {
    let labels = label_sets(q)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let primes = join_primes(q);
    let mult: BTreeMap<usize, usize> =
        primes.iter().map(|&g| (g, rng.random_range(1..=max_dim.max(1)))).collect();
    let dims: Vec<usize> = labels.iter().map(|ls| ls.iter().map(|g| mult[g]).sum()).collect();
    let transforms: Vec<Mat> = dims.iter().map(|&d| random_invertible(&mut rng, d)).collect();
    let inverses: Vec<Mat> =
        transforms.iter().map(|t| t.inverse().expect("transforms are invertible")).collect();
    let mut maps = BTreeMap::new();
    for (a, b) in q.poset().comparable_pairs() {
        // label-coordinate inclusion X(a) -> X(b)
        let mut incl = Mat::zero(dims[b], dims[a]);
        let mut col = 0usize;
        for ga in &labels[a] {
            // offset of label ga inside X(b)
            let mut row = 0usize;
            for gb in &labels[b] {
                if gb == ga {
                    break;
                }
                row += mult[gb];
            }
            for c in 0..mult[ga] {
                *incl.at_mut(row + c, col + c) = int(1);
            }
            col += mult[ga];
        }
        let rho = transforms[b].mul(&incl).mul(&inverses[a]);
        maps.insert((a, b), rho);
    }
    let sys = IndSystem::new(q.poset().clone(), dims, maps).expect("constructed shapes match");
    debug_assert!(sys.validate().is_ok());
    Ok(sys)
}

/// Randomized search for systems separating the pairwise gluing condition
/// from its family-strength form. On a finite quasi-lattice no separation
/// exists: a repeated pair in either quantifier forces injectivity toward
/// the bound, and for distinct members the pairwise condition glues any
/// finite family by induction (glue the first two members, replace them by
/// their meet — compatibility at the bound is preserved — and recurse).
/// The search is kept as an executable record of that fact; the family
/// condition differs from the pairwise one only for infinite families.
pub fn search_iii_without_iiiprime(seed: u64, tries: usize) -> Option<(IndSystem, QuasiLattice)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..tries {
        let Some((sys, q)) = random_two_layer_system(&mut rng) else { continue };
        let iii = check_condition(&sys, &q, Condition::III);
        if !iii.pass {
            continue;
        }
        let iiip = check_localizable(&sys, &q, None);
        if !iiip.pass {
            return Some((sys, q));
        }
    }
    None
}

/// Random quasi-lattices of height two (a zero-dimensional bottom, an
/// antichain of middles, an antichain of tops) with arbitrary random maps:
/// functoriality is automatic because every 3-chain starts at the
/// zero space. Incidences are pruned so meets and bounded joins exist.
fn random_two_layer_system(rng: &mut impl RngExt) -> Option<(IndSystem, QuasiLattice)> {
    let mids = rng.random_range(2..=3usize);
    let tops = rng.random_range(1..=2usize);
    let mut incidence = vec![Vec::new(); mids];
    for (m, row) in incidence.iter_mut().enumerate() {
        for t in 0..tops {
            if rng.random_bool(0.6) {
                row.push(t);
            }
        }
        let _ = m;
    }
    // meets of two tops need a greatest common middle; bounded middle pairs
    // need a unique minimal common top: enforce by rejection
    for t1 in 0..tops {
        for t2 in t1 + 1..tops {
            let common: Vec<usize> =
                (0..mids).filter(|m| incidence[*m].contains(&t1) && incidence[*m].contains(&t2)).collect();
            if common.len() > 1 {
                return None;
            }
        }
    }
    for m1 in 0..mids {
        for m2 in m1 + 1..mids {
            let common: Vec<usize> = (0..tops)
                .filter(|t| incidence[m1].contains(t) && incidence[m2].contains(t))
                .collect();
            if common.len() > 1 {
                return None;
            }
        }
    }
    let mut names = vec!["bot".to_string()];
    for m in 0..mids {
        names.push(format!("m{m}"));
    }
    for t in 0..tops {
        names.push(format!("t{t}"));
    }
    let mut pairs = Vec::new();
    for m in 0..mids {
        pairs.push(("bot".to_string(), format!("m{m}")));
        for &t in &incidence[m] {
            pairs.push((format!("m{m}"), format!("t{t}")));
        }
    }
    for t in 0..tops {
        pairs.push(("bot".to_string(), format!("t{t}")));
    }
    let poset = FinitePoset::from_pairs(names, &pairs).ok()?;
    let q = QuasiLattice::from_poset(poset.clone()).ok()?;
    let mut dims = vec![0usize];
    for _ in 0..mids + tops {
        dims.push(rng.random_range(1..=2usize));
    }
    let mut maps = BTreeMap::new();
    for (a, b) in poset.comparable_pairs() {
        let m = Mat::from_fn(dims[b], dims[a], |_, _| int(rng.random_range(-2..=2)));
        maps.insert((a, b), m);
    }
    let sys = IndSystem::new(poset, dims, maps).ok()?;
    sys.validate().ok()?;
    Some((sys, q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indsys::check_conditions;
    use crate::lattice::FinitePoset;

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
    fn chain_model_is_nested() {
        let q = QuasiLattice::from_poset(
            FinitePoset::from_pairs(
                vec!["a".into(), "b".into(), "c".into()],
                &[("a".into(), "b".into()), ("b".into(), "c".into())],
            )
            .unwrap(),
        )
        .unwrap();
        let sys = random_prelocalizable(&q, 2, 7).unwrap();
        assert!(sys.dims()[0] <= sys.dims()[1] && sys.dims()[1] <= sys.dims()[2]);
        for r in check_conditions(&sys, &q, &[Condition::I, Condition::II, Condition::III]) {
            assert!(r.pass);
        }
    }

    #[test]
    fn powerset_model_is_localizable() {
        let q = powerset(3);
        let sys = random_prelocalizable(&q, 2, 99).unwrap();
        sys.validate().unwrap();
        for r in check_conditions(&sys, &q, &[Condition::I, Condition::II, Condition::III]) {
            assert!(r.pass, "condition {} failed", r.condition);
        }
        assert!(check_localizable(&sys, &q, None).pass);
    }

    #[test]
    fn diamond_is_rejected() {
        let q = diamond_m3();
        assert!(matches!(
            random_prelocalizable(&q, 2, 1),
            Err(GeneratorError::NotEmbeddable { .. })
        ));
    }

    #[test]
    fn wedge_shape_intersects_at_the_bottom() {
        let q = QuasiLattice::from_poset(
            FinitePoset::from_pairs(
                vec!["zero".into(), "plus".into(), "minus".into()],
                &[("zero".into(), "plus".into()), ("zero".into(), "minus".into())],
            )
            .unwrap(),
        )
        .unwrap();
        let sys = random_prelocalizable(&q, 2, 5).unwrap();
        // X(zero) corresponds to the shared labels of plus and minus
        assert!(sys.dims()[0] <= sys.dims()[1].min(sys.dims()[2]));
        assert!(check_localizable(&sys, &q, None).pass);
    }

    #[test]
    fn no_iii_without_iii_prime_in_the_search_space() {
        // the pairwise-gluing induction shows the search must come up empty
        assert!(search_iii_without_iiiprime(2024, 300).is_none());
        // and the two verdicts agree on random instances, pass or fail
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        let mut seen_fail = 0;
        let mut seen_pass = 0;
        for _ in 0..200 {
            let Some((sys, q)) = super::random_two_layer_system(&mut rng) else { continue };
            let iii = check_condition(&sys, &q, Condition::III).pass;
            let iiip = check_localizable(&sys, &q, None).pass;
            assert_eq!(iii, iiip, "pairwise and family verdicts must agree");
            if iii {
                seen_pass += 1;
            } else {
                seen_fail += 1;
            }
        }
        assert!(seen_pass > 0 && seen_fail > 0, "search space covers both verdicts");
    }
}
