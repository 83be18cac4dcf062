//! Concrete cone (quasi-)lattices for k <= 2: the meet-closure of a family
//! of proper cones ordered by inclusion, the lattice of its unions, and the
//! inclusion morphism between them. Feeds the inductive-system pushforward.

use super::{FinitePoset, LatticeError, LatticeMorphism, QuasiLattice};
use crate::cone::{ConeError, SectorSet};
use std::fmt;

#[derive(Clone, Debug)]
pub enum ConeLatticeError {
    Cone(ConeError),
    Lattice(LatticeError),
    /// An input cone contains a line (or is the whole space).
    ImproperInput(usize),
    EmptyFamily,
    /// The union lattice exceeded the element cap.
    TooLarge { have: usize, cap: usize },
}

impl fmt::Display for ConeLatticeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConeLatticeError::Cone(e) => write!(f, "{e}"),
            ConeLatticeError::Lattice(e) => write!(f, "{e}"),
            ConeLatticeError::ImproperInput(i) => write!(f, "input cone {i} is not proper"),
            ConeLatticeError::EmptyFamily => write!(f, "cone family is empty"),
            ConeLatticeError::TooLarge { have, cap } => {
                write!(f, "generated lattice has {have} elements, cap is {cap}")
            }
        }
    }
}

impl std::error::Error for ConeLatticeError {}

impl From<ConeError> for ConeLatticeError {
    fn from(e: ConeError) -> Self {
        ConeLatticeError::Cone(e)
    }
}

impl From<LatticeError> for ConeLatticeError {
    fn from(e: LatticeError) -> Self {
        ConeLatticeError::Lattice(e)
    }
}

/// The generated pair of index structures: `A` (proper cones, meets) sits
/// inside `B` (all finite unions) via the inclusion morphism.
#[derive(Clone, Debug)]
pub struct ConeLattice {
    /// Cones of the quasi-lattice `A`, indexed like its poset elements.
    pub cones_a: Vec<SectorSet>,
    pub quasi: QuasiLattice,
    /// Cones of the union lattice `B`.
    pub cones_b: Vec<SectorSet>,
    pub lattice: QuasiLattice,
    /// The inclusion `A -> B`.
    pub morphism: LatticeMorphism,
}

/// Builds the meet-closure `A` of the inputs plus the degenerate cone,
/// ordered by inclusion, and the lattice `B` of all unions of elements of
/// `A`, with the inclusion morphism between them.
pub fn cone_lattice_from_family(
    family: &[SectorSet],
    cap: usize,
) -> Result<ConeLattice, ConeLatticeError> {
    if family.is_empty() {
        return Err(ConeLatticeError::EmptyFamily);
    }
    let dim = family[0].dim();
    for (i, c) in family.iter().enumerate() {
        if c.dim() != dim {
            return Err(ConeError::DimensionMismatch { left: dim, right: c.dim() }.into());
        }
        if !c.is_proper() {
            return Err(ConeLatticeError::ImproperInput(i));
        }
    }
    // A: meet-closure plus {0}
    let mut cones_a: Vec<SectorSet> = vec![SectorSet::zero(dim)?];
    for c in family {
        if !cones_a.contains(c) {
            cones_a.push(c.clone());
        }
    }
    loop {
        let before = cones_a.len();
        let snapshot = cones_a.clone();
        for a in &snapshot {
            for b in &snapshot {
                let m = a.meet(b)?;
                if !cones_a.contains(&m) {
                    cones_a.push(m);
                }
            }
        }
        if cones_a.len() == before {
            break;
        }
        if cones_a.len() > cap {
            return Err(ConeLatticeError::TooLarge { have: cones_a.len(), cap });
        }
    }
    cones_a.sort();
    // B: closure of A under unions (all unions of subsets arise as folds)
    let mut cones_b = cones_a.clone();
    loop {
        let before = cones_b.len();
        let snapshot = cones_b.clone();
        for a in &snapshot {
            for b in &snapshot {
                let j = a.join(b)?;
                if !cones_b.contains(&j) {
                    cones_b.push(j);
                }
            }
        }
        if cones_b.len() == before {
            break;
        }
        if cones_b.len() > cap {
            return Err(ConeLatticeError::TooLarge { have: cones_b.len(), cap });
        }
    }
    cones_b.sort();

    let quasi = inclusion_order("A", &cones_a)?;
    let lattice = inclusion_order("B", &cones_b)?;
    let map: Vec<usize> = cones_a
        .iter()
        .map(|c| cones_b.iter().position(|d| d == c).expect("A is contained in B"))
        .collect();
    let morphism = LatticeMorphism { source: quasi.clone(), target: lattice.clone(), map };
    Ok(ConeLattice { cones_a, quasi, cones_b, lattice, morphism })
}

fn inclusion_order(prefix: &str, cones: &[SectorSet]) -> Result<QuasiLattice, ConeLatticeError> {
    let n = cones.len();
    let names: Vec<String> = (0..n).map(|i| format!("{prefix}{i}")).collect();
    let mut leq = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            leq[i][j] = cones[i].leq(&cones[j])?;
        }
    }
    Ok(QuasiLattice::from_poset(FinitePoset::from_relation(names, leq)?)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone::sector::{SectorSet1, SectorSet2};
    use crate::cone::Dir;
    use crate::lattice::{check_t1_hypotheses, is_distributive, DEFAULT_SUBSET_CAP};

    #[test]
    fn half_lines_generate_the_line_lattice() {
        let family = [
            SectorSet::One(SectorSet1::positive()),
            SectorSet::One(SectorSet1::negative()),
        ];
        let cl = cone_lattice_from_family(&family, 64).unwrap();
        // A = {0, R+, R-}; B adds the full line
        assert_eq!(cl.cones_a.len(), 3);
        assert_eq!(cl.cones_b.len(), 4);
        assert!(cl.cones_b.iter().any(|c| c.is_full()));
        // join of the two half-lines is undefined in A
        let p = cl.quasi.poset();
        let pos = cl
            .cones_a
            .iter()
            .position(|c| *c == SectorSet::One(SectorSet1::positive()))
            .unwrap();
        let neg = cl
            .cones_a
            .iter()
            .position(|c| *c == SectorSet::One(SectorSet1::negative()))
            .unwrap();
        assert!(cl.quasi.join(pos, neg).is_none());
        assert!(p.upper_bounds(&[pos, neg]).is_empty());
        // and the union lattice is infinitely distributive
        let rep = is_distributive(&cl.lattice, DEFAULT_SUBSET_CAP);
        assert!(rep.is_infinitely_distributive());
        assert!(check_t1_hypotheses(&cl.morphism).pass());
    }

    #[test]
    fn single_sector_family() {
        let s = SectorSet::Two(SectorSet2::sector(Dir::new(1, 0), Dir::new(0, 1)).unwrap());
        let cl = cone_lattice_from_family(std::slice::from_ref(&s), 64).unwrap();
        assert_eq!(cl.cones_a.len(), 2); // {0} and the sector
        assert_eq!(cl.cones_b.len(), 2);
        assert!(check_t1_hypotheses(&cl.morphism).pass());
    }

    #[test]
    fn overlapping_sectors_close_under_meet() {
        let a = SectorSet::Two(SectorSet2::sector(Dir::new(1, 0), Dir::new(0, 1)).unwrap());
        let b = SectorSet::Two(SectorSet2::sector(Dir::new(1, 1), Dir::new(-1, 2)).unwrap());
        let cl = cone_lattice_from_family(&[a.clone(), b.clone()], 64).unwrap();
        let m = a.meet(&b).unwrap();
        assert!(cl.cones_a.contains(&m));
        assert!(check_t1_hypotheses(&cl.morphism).pass());
        assert!(is_distributive(&cl.lattice, DEFAULT_SUBSET_CAP).is_infinitely_distributive());
    }

    #[test]
    fn inclusion_reflects_order_and_preserves_infima() {
        // on generated cone lattices the inclusion morphism reflects the
        // order and sends infima of subsets to infima of images
        let a = SectorSet::Two(SectorSet2::sector(Dir::new(1, 0), Dir::new(0, 1)).unwrap());
        let b = SectorSet::Two(SectorSet2::sector(Dir::new(1, 1), Dir::new(-1, 2)).unwrap());
        let c = SectorSet::Two(SectorSet2::sector(Dir::new(0, 1), Dir::new(-1, 0)).unwrap());
        let cl = cone_lattice_from_family(&[a, b, c], 64).unwrap();
        let lam = &cl.morphism.map;
        let n = cl.quasi.len();
        for x in 0..n {
            for y in 0..n {
                if cl.lattice.leq(lam[x], lam[y]) {
                    assert!(cl.quasi.leq(x, y), "order not reflected at ({x}, {y})");
                }
            }
        }
        // exhaustive subsets: lambda(inf S) = inf lambda(S)
        for mask in 1usize..(1 << n) {
            let subset: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            let inf_a = cl.quasi.inf(&subset);
            let images: Vec<usize> = subset.iter().map(|&i| lam[i]).collect();
            let inf_b = cl.lattice.inf(&images);
            assert_eq!(lam[inf_a], inf_b, "infimum not preserved on {subset:?}");
        }
    }

    #[test]
    fn improper_input_rejected() {
        let full = SectorSet::One(SectorSet1::line());
        match cone_lattice_from_family(&[full], 64) {
            Err(ConeLatticeError::ImproperInput(0)) => {}
            other => panic!("expected improper-input error, got {other:?}"),
        }
    }
}
