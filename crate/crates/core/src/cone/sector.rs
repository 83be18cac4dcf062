//! General (possibly non-convex) closed cones at k <= 2, represented as
//! unions of closed circular sectors with exact rational boundary rays.
//!
//! All angular predicates are integer sign tests (quadrant + cross product),
//! so union, intersection, inclusion and properness are exact. Distances are
//! reduced to convex pieces by cutting sectors at the coordinate axes.

use super::convex::ConvexCone;
use super::ConeError;
use crate::scalar::{primitive_direction, Scalar};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;

/// Primitive integer direction on the circle (a ray from the origin).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dir {
    pub x: BigInt,
    pub y: BigInt,
}

impl Dir {
    pub fn new(x: i64, y: i64) -> Self {
        Dir::from_vec(&[crate::scalar::int(x), crate::scalar::int(y)]).expect("nonzero direction")
    }

    pub fn from_vec(v: &[Scalar]) -> Option<Self> {
        assert_eq!(v.len(), 2);
        let p = primitive_direction(v)?;
        Some(Dir { x: p[0].clone(), y: p[1].clone() })
    }

    pub fn to_vec(&self) -> Vec<Scalar> {
        vec![Scalar::from_integer(self.x.clone()), Scalar::from_integer(self.y.clone())]
    }

    pub fn neg(&self) -> Dir {
        Dir { x: -self.x.clone(), y: -self.y.clone() }
    }

    fn cross(&self, other: &Dir) -> BigInt {
        &self.x * &other.y - &self.y * &other.x
    }

    /// Quadrant index for the global counterclockwise order starting at (1,0).
    fn quadrant(&self) -> u8 {
        let xp = self.x.is_positive();
        let yp = self.y.is_positive();
        let xz = self.x.is_zero();
        let yz = self.y.is_zero();
        if xp && (yp || yz) {
            0
        } else if (xz || !xp) && yp {
            1
        } else if !xp && !xz && (yz || !yp) {
            2
        } else {
            debug_assert!((xp || xz) && !yp && !yz);
            3
        }
    }

    /// Total counterclockwise order on the circle starting at (1,0).
    fn global_cmp(&self, other: &Dir) -> Ordering {
        match self.quadrant().cmp(&other.quadrant()) {
            Ordering::Equal => {
                let c = self.cross(other);
                if c.is_positive() {
                    Ordering::Less
                } else if c.is_zero() {
                    Ordering::Equal
                } else {
                    Ordering::Greater
                }
            }
            o => o,
        }
    }

    /// Sweep class of `self` as seen from `origin`: 0 at origin, 1 in
    /// (0, pi), 2 at exactly pi, 3 in (pi, 2 pi).
    fn sweep_class(&self, origin: &Dir) -> u8 {
        if self == origin {
            return 0;
        }
        let c = origin.cross(self);
        if c.is_positive() {
            1
        } else if c.is_zero() {
            2 // antipodal
        } else {
            3
        }
    }

    /// Compares counterclockwise sweep angles from `origin`.
    fn sweep_cmp(origin: &Dir, a: &Dir, b: &Dir) -> Ordering {
        let (ca, cb) = (a.sweep_class(origin), b.sweep_class(origin));
        match ca.cmp(&cb) {
            Ordering::Equal if ca == 1 || ca == 3 => {
                let c = a.cross(b);
                if c.is_positive() {
                    Ordering::Less
                } else if c.is_zero() {
                    Ordering::Equal
                } else {
                    Ordering::Greater
                }
            }
            o => o,
        }
    }
}

/// Closed circular sector swept counterclockwise from `start` to `end`;
/// the sweep angle lies in (0, 2 pi).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    pub start: Dir,
    pub end: Dir,
}

impl Arc {
    pub fn contains(&self, d: &Dir) -> bool {
        Dir::sweep_cmp(&self.start, d, &self.end) != Ordering::Greater
    }

    fn contains_arc(&self, other: &Arc) -> bool {
        Dir::sweep_cmp(&self.start, &other.start, &other.end) != Ordering::Greater
            && Dir::sweep_cmp(&self.start, &other.end, &self.end) != Ordering::Greater
    }

    /// Sweep angle >= pi, i.e. the sector contains a full line.
    fn at_least_half_turn(&self) -> bool {
        self.end.sweep_class(&self.start) >= 2
    }
}

/// Closed cone in Q^1: any union of {0}, the closed half-lines.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SectorSet1 {
    pub pos: bool,
    pub neg: bool,
}

/// Closed cone in Q^2 containing the origin: a canonical union of closed
/// sectors and isolated rays. Canonical form: sectors pairwise disjoint and
/// non-touching (touching sectors are merged), rays outside all sectors,
/// everything sorted; the full plane is the `full` flag alone.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SectorSet2 {
    full: bool,
    arcs: Vec<Arc>,
    rays: Vec<Dir>,
}

/// Closed cone of dimension 1 or 2 as a point set; `{0}` is the empty union.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SectorSet {
    One(SectorSet1),
    Two(SectorSet2),
}

// The direction used to cut wrap-around arcs into linearly ordered pieces.
fn cut_dir() -> Dir {
    Dir { x: BigInt::from(1), y: BigInt::from(0) }
}

/// Half-open linear position used during canonicalization: a direction, or
/// the cut direction seen as the end of the full turn.
#[derive(Clone, Debug, PartialEq, Eq)]
enum PieceEnd {
    At(Dir),
    Wrap,
}

#[derive(Clone, Debug)]
struct Piece {
    start: Dir,
    end: PieceEnd,
}

fn end_cmp(a: &PieceEnd, b: &PieceEnd) -> Ordering {
    match (a, b) {
        (PieceEnd::Wrap, PieceEnd::Wrap) => Ordering::Equal,
        (PieceEnd::Wrap, _) => Ordering::Greater,
        (_, PieceEnd::Wrap) => Ordering::Less,
        (PieceEnd::At(x), PieceEnd::At(y)) => x.global_cmp(y),
    }
}

fn dir_le_end(d: &Dir, e: &PieceEnd) -> bool {
    match e {
        PieceEnd::Wrap => true,
        PieceEnd::At(x) => d.global_cmp(x) != Ordering::Greater,
    }
}

/// Splits an arc at the cut direction into one or two linear pieces.
fn split_arc(arc: &Arc) -> Vec<Piece> {
    let x = cut_dir();
    if arc.end == x {
        return vec![Piece { start: arc.start.clone(), end: PieceEnd::Wrap }];
    }
    if arc.start == x {
        return vec![Piece { start: x, end: PieceEnd::At(arc.end.clone()) }];
    }
    match arc.start.global_cmp(&arc.end) {
        Ordering::Less => vec![Piece { start: arc.start.clone(), end: PieceEnd::At(arc.end.clone()) }],
        Ordering::Greater => vec![
            Piece { start: arc.start.clone(), end: PieceEnd::Wrap },
            Piece { start: x, end: PieceEnd::At(arc.end.clone()) },
        ],
        Ordering::Equal => unreachable!("arcs have positive sweep"),
    }
}

impl SectorSet2 {
    pub fn zero() -> Self {
        SectorSet2::default()
    }

    pub fn full_plane() -> Self {
        SectorSet2 { full: true, arcs: Vec::new(), rays: Vec::new() }
    }

    pub fn ray(d: Dir) -> Self {
        SectorSet2::assemble(Vec::new(), vec![d], false)
    }

    /// The closed sector swept counterclockwise from `start` to `end`;
    /// `start == end` is rejected (that would be a ray or the full plane).
    pub fn sector(start: Dir, end: Dir) -> Result<Self, ConeError> {
        if start == end {
            return Err(ConeError::ImproperCone("sector with zero sweep; use a ray".into()));
        }
        Ok(SectorSet2::assemble(vec![Arc { start, end }], Vec::new(), false))
    }

    pub fn is_zero(&self) -> bool {
        !self.full && self.arcs.is_empty() && self.rays.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.full
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn rays(&self) -> &[Dir] {
        &self.rays
    }

    /// Canonicalizes an arbitrary union of arcs and rays.
    fn assemble(arcs: Vec<Arc>, rays: Vec<Dir>, full: bool) -> Self {
        if full {
            return SectorSet2::full_plane();
        }
        let mut pieces: Vec<Piece> = Vec::new();
        for a in &arcs {
            pieces.extend(split_arc(a));
        }
        pieces.sort_by(|p, q| {
            p.start.global_cmp(&q.start).then_with(|| end_cmp(&q.end, &p.end))
        });
        let mut merged: Vec<Piece> = Vec::new();
        for p in pieces {
            match merged.last_mut() {
                Some(cur) if dir_le_end(&p.start, &cur.end) => {
                    if end_cmp(&p.end, &cur.end) == Ordering::Greater {
                        cur.end = p.end;
                    }
                }
                _ => merged.push(p),
            }
        }
        // Re-join across the cut direction.
        let mut out_arcs: Vec<Arc> = Vec::new();
        let mut out_rays: Vec<Dir> = rays;
        if !merged.is_empty() {
            let wrap_end = matches!(merged.last().unwrap().end, PieceEnd::Wrap);
            let starts_at_cut = merged.first().unwrap().start == cut_dir();
            if merged.len() == 1 && wrap_end && starts_at_cut {
                return SectorSet2::full_plane();
            }
            let mut items: Vec<(Dir, Dir)> = Vec::new();
            for p in &merged {
                let end = match &p.end {
                    PieceEnd::Wrap => cut_dir(),
                    PieceEnd::At(d) => d.clone(),
                };
                items.push((p.start.clone(), end));
            }
            if wrap_end && starts_at_cut && merged.len() > 1 {
                let first = items.remove(0);
                let last = items.pop().unwrap();
                if last.0 == first.1 {
                    // the union is a full circle entered from both sides
                    return SectorSet2::full_plane();
                }
                items.push((last.0, first.1));
            }
            for (s, e) in items {
                if s == e {
                    out_rays.push(s);
                } else {
                    out_arcs.push(Arc { start: s, end: e });
                }
            }
        }
        out_arcs.sort();
        out_rays.sort();
        out_rays.dedup();
        out_rays.retain(|r| !out_arcs.iter().any(|a| a.contains(r)));
        out_arcs.sort_by(|a, b| a.start.global_cmp(&b.start));
        SectorSet2 { full: false, arcs: out_arcs, rays: out_rays }
    }

    pub fn contains_dir(&self, d: &Dir) -> bool {
        self.full || self.arcs.iter().any(|a| a.contains(d)) || self.rays.contains(d)
    }

    pub fn contains_point(&self, x: &[Scalar]) -> bool {
        match Dir::from_vec(x) {
            None => true, // the origin
            Some(d) => self.contains_dir(&d),
        }
    }

    /// Set union.
    pub fn join(&self, other: &SectorSet2) -> SectorSet2 {
        if self.full || other.full {
            return SectorSet2::full_plane();
        }
        let mut arcs = self.arcs.clone();
        arcs.extend(other.arcs.clone());
        let mut rays = self.rays.clone();
        rays.extend(other.rays.clone());
        SectorSet2::assemble(arcs, rays, false)
    }

    /// Set intersection.
    pub fn meet(&self, other: &SectorSet2) -> SectorSet2 {
        if self.full {
            return other.clone();
        }
        if other.full {
            return self.clone();
        }
        let mut arcs = Vec::new();
        let mut rays = Vec::new();
        // The linear pieces are cut at (1,0); the cut point itself needs an
        // explicit check because it sits at both ends of the linear order.
        let x = cut_dir();
        if self.contains_dir(&x) && other.contains_dir(&x) {
            rays.push(x);
        }
        for a in &self.arcs {
            for b in &other.arcs {
                intersect_arcs(a, b, &mut arcs, &mut rays);
            }
        }
        for r in &self.rays {
            if other.contains_dir(r) {
                rays.push(r.clone());
            }
        }
        for r in &other.rays {
            if self.contains_dir(r) {
                rays.push(r.clone());
            }
        }
        SectorSet2::assemble(arcs, rays, false)
    }

    /// Subset test on canonical forms.
    pub fn leq(&self, other: &SectorSet2) -> bool {
        if other.full {
            return true;
        }
        if self.full {
            return false;
        }
        self.arcs.iter().all(|a| other.arcs.iter().any(|b| b.contains_arc(a)))
            && self.rays.iter().all(|r| other.contains_dir(r))
    }

    /// Decomposition into convex polyhedral pieces: sectors are cut at the
    /// four axis directions so every piece sweeps at most a quarter turn.
    pub fn convex_pieces(&self) -> Vec<ConvexCone> {
        if self.full {
            return vec![ConvexCone::full(2)];
        }
        let axes = [Dir::new(1, 0), Dir::new(0, 1), Dir::new(-1, 0), Dir::new(0, -1)];
        let mut pieces = Vec::new();
        for arc in &self.arcs {
            let mut cuts: Vec<Dir> = axes
                .iter()
                .filter(|d| **d != arc.start && **d != arc.end && arc.contains(d))
                .cloned()
                .collect();
            cuts.sort_by(|a, b| Dir::sweep_cmp(&arc.start, a, b));
            let mut prev = arc.start.clone();
            for c in cuts.into_iter().chain(std::iter::once(arc.end.clone())) {
                pieces.push(
                    ConvexCone::new(2, vec![prev.to_vec(), c.to_vec()]).expect("nonzero directions"),
                );
                prev = c;
            }
        }
        for r in &self.rays {
            pieces.push(ConvexCone::ray(&r.to_vec()).expect("nonzero ray"));
        }
        pieces
    }

    /// Exact uniform-norm distance, the minimum over convex pieces.
    pub fn distance(&self, x: &[Scalar]) -> Scalar {
        let pieces = self.convex_pieces();
        if pieces.is_empty() {
            return ConvexCone::zero(2).distance(x);
        }
        pieces.iter().map(|p| p.distance(x)).min().expect("nonempty")
    }

    /// True iff the cone minus the origin fits in an open half-plane.
    pub fn is_proper(&self) -> bool {
        if self.full {
            return false;
        }
        if self.arcs.iter().any(|a| a.at_least_half_turn()) {
            return false;
        }
        let mut gens: Vec<Vec<Scalar>> = Vec::new();
        for a in &self.arcs {
            gens.push(a.start.to_vec());
            gens.push(a.end.to_vec());
        }
        for r in &self.rays {
            gens.push(r.to_vec());
        }
        if gens.is_empty() {
            return true;
        }
        ConvexCone::new(2, gens).expect("nonzero directions").is_proper()
    }
}

/// Intersection of two closed arcs, up to two arcs or rays.
fn intersect_arcs(a: &Arc, b: &Arc, arcs: &mut Vec<Arc>, rays: &mut Vec<Dir>) {
    for pa in split_arc(a) {
        for pb in split_arc(b) {
            let start = if pa.start.global_cmp(&pb.start) == Ordering::Less {
                pb.start.clone()
            } else {
                pa.start.clone()
            };
            let end = if end_cmp(&pa.end, &pb.end) == Ordering::Greater { pb.end.clone() } else { pa.end.clone() };
            if !dir_le_end(&start, &end) {
                continue;
            }
            match end {
                PieceEnd::At(e) if e == start => rays.push(start),
                PieceEnd::At(e) => arcs.push(Arc { start, end: e }),
                PieceEnd::Wrap => {
                    if start == cut_dir() {
                        rays.push(start);
                    } else {
                        arcs.push(Arc { start, end: cut_dir() })
                    }
                }
            }
        }
    }
}

impl SectorSet1 {
    pub fn zero() -> Self {
        SectorSet1 { pos: false, neg: false }
    }

    pub fn positive() -> Self {
        SectorSet1 { pos: true, neg: false }
    }

    pub fn negative() -> Self {
        SectorSet1 { pos: false, neg: true }
    }

    pub fn line() -> Self {
        SectorSet1 { pos: true, neg: true }
    }

    pub fn is_zero(&self) -> bool {
        !self.pos && !self.neg
    }

    pub fn is_full(&self) -> bool {
        self.pos && self.neg
    }

    pub fn join(&self, other: &SectorSet1) -> SectorSet1 {
        SectorSet1 { pos: self.pos || other.pos, neg: self.neg || other.neg }
    }

    pub fn meet(&self, other: &SectorSet1) -> SectorSet1 {
        SectorSet1 { pos: self.pos && other.pos, neg: self.neg && other.neg }
    }

    pub fn leq(&self, other: &SectorSet1) -> bool {
        (!self.pos || other.pos) && (!self.neg || other.neg)
    }

    pub fn is_proper(&self) -> bool {
        !(self.pos && self.neg)
    }

    pub fn contains_point(&self, x: &Scalar) -> bool {
        if x.is_zero() {
            true
        } else if x.is_positive() {
            self.pos
        } else {
            self.neg
        }
    }

    pub fn distance(&self, x: &Scalar) -> Scalar {
        if self.contains_point(x) {
            Scalar::zero()
        } else {
            // the nearest point of the remaining piece ({0} or a half-line) is 0
            x.abs()
        }
    }

    pub fn convex_pieces(&self) -> Vec<ConvexCone> {
        let mut out = Vec::new();
        if self.pos {
            out.push(ConvexCone::new(1, vec![vec![crate::scalar::int(1)]]).unwrap());
        }
        if self.neg {
            out.push(ConvexCone::new(1, vec![vec![crate::scalar::int(-1)]]).unwrap());
        }
        out
    }
}

impl SectorSet {
    pub fn zero(dim: usize) -> Result<Self, ConeError> {
        match dim {
            1 => Ok(SectorSet::One(SectorSet1::zero())),
            2 => Ok(SectorSet::Two(SectorSet2::zero())),
            _ => Err(ConeError::UnsupportedDimension { dim, what: "sector sets" }),
        }
    }

    pub fn full(dim: usize) -> Result<Self, ConeError> {
        match dim {
            1 => Ok(SectorSet::One(SectorSet1::line())),
            2 => Ok(SectorSet::Two(SectorSet2::full_plane())),
            _ => Err(ConeError::UnsupportedDimension { dim, what: "sector sets" }),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            SectorSet::One(_) => 1,
            SectorSet::Two(_) => 2,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            SectorSet::One(s) => s.is_zero(),
            SectorSet::Two(s) => s.is_zero(),
        }
    }

    pub fn is_full(&self) -> bool {
        match self {
            SectorSet::One(s) => s.is_full(),
            SectorSet::Two(s) => s.is_full(),
        }
    }

    pub fn is_proper(&self) -> bool {
        match self {
            SectorSet::One(s) => s.is_proper(),
            SectorSet::Two(s) => s.is_proper(),
        }
    }

    fn same_dim(&self, other: &SectorSet) -> Result<(), ConeError> {
        if self.dim() != other.dim() {
            return Err(ConeError::DimensionMismatch { left: self.dim(), right: other.dim() });
        }
        Ok(())
    }

    pub fn join(&self, other: &SectorSet) -> Result<SectorSet, ConeError> {
        self.same_dim(other)?;
        Ok(match (self, other) {
            (SectorSet::One(a), SectorSet::One(b)) => SectorSet::One(a.join(b)),
            (SectorSet::Two(a), SectorSet::Two(b)) => SectorSet::Two(a.join(b)),
            _ => unreachable!(),
        })
    }

    pub fn meet(&self, other: &SectorSet) -> Result<SectorSet, ConeError> {
        self.same_dim(other)?;
        Ok(match (self, other) {
            (SectorSet::One(a), SectorSet::One(b)) => SectorSet::One(a.meet(b)),
            (SectorSet::Two(a), SectorSet::Two(b)) => SectorSet::Two(a.meet(b)),
            _ => unreachable!(),
        })
    }

    pub fn leq(&self, other: &SectorSet) -> Result<bool, ConeError> {
        self.same_dim(other)?;
        Ok(match (self, other) {
            (SectorSet::One(a), SectorSet::One(b)) => a.leq(b),
            (SectorSet::Two(a), SectorSet::Two(b)) => a.leq(b),
            _ => unreachable!(),
        })
    }

    pub fn distance(&self, x: &[Scalar]) -> Scalar {
        match self {
            SectorSet::One(s) => {
                assert_eq!(x.len(), 1);
                s.distance(&x[0])
            }
            SectorSet::Two(s) => {
                assert_eq!(x.len(), 2);
                s.distance(x)
            }
        }
    }

    pub fn contains_point(&self, x: &[Scalar]) -> bool {
        match self {
            SectorSet::One(s) => {
                assert_eq!(x.len(), 1);
                s.contains_point(&x[0])
            }
            SectorSet::Two(s) => {
                assert_eq!(x.len(), 2);
                s.contains_point(x)
            }
        }
    }

    pub fn convex_pieces(&self) -> Vec<ConvexCone> {
        match self {
            SectorSet::One(s) => s.convex_pieces(),
            SectorSet::Two(s) => s.convex_pieces(),
        }
    }

    /// Converts a convex polyhedral cone in dimension 1 or 2 to its sector
    /// representation; the point sets are equal.
    pub fn from_convex(cone: &ConvexCone) -> Result<SectorSet, ConeError> {
        match cone.dim() {
            1 => {
                let mut s = SectorSet1::zero();
                for g in cone.generators() {
                    if g[0].is_positive() {
                        s.pos = true;
                    } else {
                        s.neg = true;
                    }
                }
                Ok(SectorSet::One(s))
            }
            2 => {
                if cone.is_zero_cone() {
                    return Ok(SectorSet::Two(SectorSet2::zero()));
                }
                if cone.is_full() {
                    return Ok(SectorSet::Two(SectorSet2::full_plane()));
                }
                let dirs: Vec<Dir> = cone
                    .generators()
                    .iter()
                    .map(|g| Dir::from_vec(g).expect("generators are nonzero"))
                    .collect();
                if let Some(l) = cone.separating_functional() {
                    // Pointed: boundary rays are the angular extremes.
                    let ld = Dir::from_vec(&l).expect("separating functional is nonzero");
                    let origin = Dir { x: ld.y.clone(), y: -ld.x.clone() }; // rotate cw: everything is within (0, pi) of it
                    let mut sorted = dirs;
                    sorted.sort_by(|a, b| Dir::sweep_cmp(&origin, a, b));
                    let first = sorted.first().unwrap().clone();
                    let last = sorted.last().unwrap().clone();
                    if first == last {
                        Ok(SectorSet::Two(SectorSet2::ray(first)))
                    } else {
                        Ok(SectorSet::Two(SectorSet2::sector(first, last)?))
                    }
                } else {
                    // Contains a line but is not the whole plane: a halfplane
                    // {x : h.x >= 0} for the single halfspace h.
                    let hs = cone.halfspaces();
                    assert_eq!(hs.len(), 1, "improper non-full 2-cone has one halfspace");
                    let h = Dir::from_vec(&hs[0]).expect("nonzero halfspace");
                    let start = Dir { x: h.y.clone(), y: -h.x.clone() };
                    let end = start.neg();
                    Ok(SectorSet::Two(SectorSet2::sector(start, end)?))
                }
            }
            d => Err(ConeError::UnsupportedDimension { dim: d, what: "sector conversion" }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn sec(sx: i64, sy: i64, ex: i64, ey: i64) -> SectorSet2 {
        SectorSet2::sector(Dir::new(sx, sy), Dir::new(ex, ey)).unwrap()
    }

    #[test]
    fn quadrant_order() {
        let dirs = [
            Dir::new(1, 0),
            Dir::new(2, 1),
            Dir::new(0, 1),
            Dir::new(-1, 2),
            Dir::new(-1, 0),
            Dir::new(-1, -1),
            Dir::new(0, -1),
            Dir::new(1, -1),
        ];
        for w in dirs.windows(2) {
            assert_eq!(w[0].global_cmp(&w[1]), Ordering::Less, "{:?} < {:?}", w[0], w[1]);
        }
    }

    #[test]
    fn join_of_touching_quadrants_merges() {
        let q1 = sec(1, 0, 0, 1);
        let q2 = sec(0, 1, -1, 0);
        let u = q1.join(&q2);
        assert_eq!(u, sec(1, 0, -1, 0));
        assert!(u.contains_dir(&Dir::new(-1, 5)));
        assert!(!u.contains_dir(&Dir::new(0, -1)));
    }

    #[test]
    fn join_covering_circle_is_full() {
        let a = sec(1, 0, -1, 0);
        let b = sec(-1, 0, 1, 0);
        assert!(a.join(&b).is_full());
        let c = sec(1, 1, -1, 0);
        let d = sec(0, -1, 1, 1);
        let e = sec(-1, 0, 0, -1);
        assert!(c.join(&d).join(&e).is_full());
        // leave a gap and the union stays partial
        let gappy = c.join(&d).join(&sec(-1, -1, 0, -1));
        assert!(!gappy.is_full());
        assert!(!gappy.contains_dir(&Dir::new(-2, -1)));
    }

    #[test]
    fn meet_of_touching_quadrants_is_ray() {
        let q1 = sec(1, 0, 0, 1);
        let q2 = sec(0, 1, -1, 0);
        let m = q1.meet(&q2);
        assert_eq!(m, SectorSet2::ray(Dir::new(0, 1)));
    }

    #[test]
    fn meet_across_wraparound() {
        // both sectors span the positive x axis
        let a = sec(1, -1, 1, 1);
        let b = sec(2, -1, 3, 1);
        let m = a.meet(&b);
        assert!(m.contains_dir(&Dir::new(1, 0)));
        assert!(m.contains_dir(&Dir::new(2, -1)));
        assert!(m.contains_dir(&Dir::new(3, 1)));
        assert!(!m.contains_dir(&Dir::new(1, 1)));
        assert_eq!(m, sec(2, -1, 3, 1));
    }

    #[test]
    fn disconnected_meet() {
        // Upper and lower closed half-planes meet in the x-axis line.
        let line = sec(1, 0, -1, 0).meet(&sec(-1, 0, 1, 0));
        assert!(line.arcs().is_empty());
        assert_eq!(line.rays(), &[Dir::new(-1, 0), Dir::new(1, 0)]);
        // A line meets a wide sector in its two boundary crossings.
        let xline = SectorSet2::ray(Dir::new(1, 0)).join(&SectorSet2::ray(Dir::new(-1, 0)));
        let wide = sec(1, -1, -1, 1);
        let m = xline.meet(&wide);
        assert_eq!(m, SectorSet2::ray(Dir::new(1, 0)));
    }

    #[test]
    fn leq_and_properness() {
        let narrow = sec(1, 0, 1, 1);
        let quad = sec(1, 0, 0, 1);
        assert!(narrow.leq(&quad));
        assert!(!quad.leq(&narrow));
        assert!(quad.is_proper());
        // closed half-plane contains the x-axis line
        assert!(!sec(1, 0, -1, 0).is_proper());
        // two antipodal rays form a line
        let xline = SectorSet2::ray(Dir::new(1, 0)).join(&SectorSet2::ray(Dir::new(-1, 0)));
        assert!(!xline.is_proper());
        assert!(SectorSet2::zero().is_proper());
        // spec example shape: opening slightly over half a turn vs under
        assert!(!sec(1, 0, -100, -2).is_proper());
        assert!(sec(1, 0, -100, 2).is_proper());
    }

    #[test]
    fn distance_on_sectors() {
        let quad = sec(1, 0, 0, 1);
        assert_eq!(quad.distance(&[int(2), int(3)]), int(0));
        assert_eq!(quad.distance(&[int(-3), int(2)]), int(3));
        // distance to a union is the min over components
        let union = quad.join(&SectorSet2::ray(Dir::new(-1, 0)));
        assert_eq!(union.distance(&[int(-3), int(2)]), int(2));
        assert_eq!(SectorSet2::zero().distance(&[int(-3), int(2)]), int(3));
    }

    #[test]
    fn convexcone_roundtrip() {
        let quad = ConvexCone::new(2, vec![vec![int(1), int(0)], vec![int(0), int(1)]]).unwrap();
        assert_eq!(SectorSet::from_convex(&quad).unwrap(), SectorSet::Two(sec(1, 0, 0, 1)));
        let half = ConvexCone::new(2, vec![vec![int(1), int(0)], vec![int(-1), int(0)], vec![int(0), int(1)]]).unwrap();
        let s = SectorSet::from_convex(&half).unwrap();
        assert_eq!(s, SectorSet::Two(sec(1, 0, -1, 0)));
        let zero = ConvexCone::zero(2);
        assert!(SectorSet::from_convex(&zero).unwrap().is_zero());
        let full = ConvexCone::full(2);
        assert!(SectorSet::from_convex(&full).unwrap().is_full());
        let ray = ConvexCone::new(2, vec![vec![int(2), int(2)]]).unwrap();
        assert_eq!(SectorSet::from_convex(&ray).unwrap(), SectorSet::Two(SectorSet2::ray(Dir::new(1, 1))));
    }

    #[test]
    fn one_dimensional_sets() {
        let pos = SectorSet1::positive();
        let neg = SectorSet1::negative();
        assert!(pos.join(&neg).is_full());
        assert!(pos.meet(&neg).is_zero());
        assert!(pos.is_proper() && !pos.join(&neg).is_proper());
        assert_eq!(pos.distance(&int(-4)), int(4));
        assert_eq!(pos.distance(&int(4)), int(0));
    }
}
