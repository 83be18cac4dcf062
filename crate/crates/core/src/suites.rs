//! Seeded verification suites. Each suite runs a fixed number of random
//! instances from a deterministic generator and collects failures as
//! replayable text; the acceptance test target and the CLI self-test
//! command both drive these functions.

use crate::cone::sector::{SectorSet1, SectorSet2};
use crate::cone::{
    exp_membership, simplicial_cover, union_covers_space, BilinearForm, ConeRep, ConvexCone, Dir,
    ExpMembership, SectorSet, WeightSpec,
};
use crate::hyper::{
    fourier, kernel_decompose, s_map, semigroup_check, ECoef, GaussRat, Hyperfunction1D,
    KernelDecomposition, Poly, Side, SymFn, Triple1D, Ultrafunctional1D,
};
use crate::indsys::{
    cech_sign_equivalence, check_conditions, check_localizable, colimit,
    hereditary_intersection_check, quotient_presentation, random_prelocalizable, relation_subspace,
    split_over_union, tau, Condition, IndSystem, WedgeSpace,
};
use crate::lattice::{
    check_t1_hypotheses, cone_lattice_from_family, is_distributive, FinitePoset, LatticeMorphism,
    QuasiLattice, DEFAULT_SUBSET_CAP,
};
use crate::linalg::Mat;
use crate::oracle;
use crate::scalar::{frac, int, vec_sub, Scalar};
use num_traits::{Signed, Zero};
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

/// Outcome of one suite: instance count and the failures, if any.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        SuiteReport { name, cases: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

fn rng_for(seed: u64, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

fn rand_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    frac(rng.random_range(-3..=3), rng.random_range(1..=3))
}

fn rand_nonzero_vec(rng: &mut ChaCha8Rng, dim: usize) -> Vec<Scalar> {
    loop {
        let v: Vec<Scalar> = (0..dim).map(|_| rand_scalar(rng)).collect();
        if !crate::scalar::is_zero_vec(&v) {
            return v;
        }
    }
}

fn rand_cone(rng: &mut ChaCha8Rng, dim: usize) -> ConvexCone {
    let n = rng.random_range(1..=dim + 2);
    let gens = (0..n).map(|_| rand_nonzero_vec(rng, dim)).collect();
    ConvexCone::new(dim, gens).expect("nonzero generators")
}

fn rand_dir(rng: &mut ChaCha8Rng) -> Dir {
    loop {
        let x = rng.random_range(-4i64..=4);
        let y = rng.random_range(-4i64..=4);
        if x != 0 || y != 0 {
            return Dir::new(x, y);
        }
    }
}

/// A random proper sector (sweep strictly below half a turn).
fn rand_proper_sector(rng: &mut ChaCha8Rng) -> SectorSet2 {
    loop {
        let s = rand_dir(rng);
        let e = rand_dir(rng);
        if s != e {
            if let Ok(sec) = SectorSet2::sector(s.clone(), e.clone()) {
                if sec.is_proper() {
                    return sec;
                }
            }
        }
    }
}

// ---------------------------------------------------------------------
// random index structures for the system suites
// ---------------------------------------------------------------------

/// Random meet-closed, bounded-join-consistent family of bitmasks over a
/// 3-point set, paired with its union lattice; the inclusion morphism
/// satisfies the pushforward hypotheses by construction.
fn random_abstract_index(
    rng: &mut ChaCha8Rng,
    cap_a: usize,
    cap_b: usize,
) -> Option<(QuasiLattice, QuasiLattice, LatticeMorphism)> {
    let universe: u8 = 0b111;
    let mut family: Vec<u8> = vec![0];
    for _ in 0..rng.random_range(1..=3usize) {
        family.push(rng.random_range(0..=universe));
    }
    family.sort_unstable();
    family.dedup();
    // close under meets, and under joins of bounded pairs
    loop {
        let before = family.len();
        let snapshot = family.clone();
        for &a in &snapshot {
            for &b in &snapshot {
                let m = a & b;
                if !family.contains(&m) {
                    family.push(m);
                }
                let u = a | b;
                if snapshot.iter().any(|&c| u & c == u) && !family.contains(&u) {
                    family.push(u);
                }
            }
        }
        family.sort_unstable();
        family.dedup();
        if family.len() == before {
            break;
        }
        if family.len() > cap_a {
            return None;
        }
    }
    if family.len() > cap_a {
        return None;
    }
    // union closure
    let mut unions = family.clone();
    loop {
        let before = unions.len();
        let snapshot = unions.clone();
        for &a in &snapshot {
            for &b in &snapshot {
                let u = a | b;
                if !unions.contains(&u) {
                    unions.push(u);
                }
            }
        }
        unions.sort_unstable();
        unions.dedup();
        if unions.len() == before {
            break;
        }
        if unions.len() > cap_b {
            return None;
        }
    }
    let quasi = mask_poset("a", &family)?;
    let lattice = mask_poset("b", &unions)?;
    let map: Vec<usize> =
        family.iter().map(|m| unions.iter().position(|u| u == m).unwrap()).collect();
    let morphism = LatticeMorphism { source: quasi.clone(), target: lattice.clone(), map };
    if !check_t1_hypotheses(&morphism).pass() {
        return None;
    }
    Some((quasi, lattice, morphism))
}

fn mask_poset(prefix: &str, masks: &[u8]) -> Option<QuasiLattice> {
    let names: Vec<String> = masks.iter().map(|m| format!("{prefix}{m}")).collect();
    let leq: Vec<Vec<bool>> =
        masks.iter().map(|&a| masks.iter().map(|&b| a & b == a).collect()).collect();
    QuasiLattice::from_poset(FinitePoset::from_relation(names, leq).ok()?).ok()
}

/// Random cone-derived index pair for k in {1, 2}.
fn random_cone_index(
    rng: &mut ChaCha8Rng,
    cap_a: usize,
    cap_b: usize,
) -> Option<(QuasiLattice, QuasiLattice, LatticeMorphism)> {
    let family: Vec<SectorSet> = if rng.random_bool(0.4) {
        let mut f = vec![SectorSet::One(SectorSet1::positive())];
        if rng.random_bool(0.8) {
            f.push(SectorSet::One(SectorSet1::negative()));
        }
        f
    } else {
        (0..rng.random_range(1..=2usize))
            .map(|_| SectorSet::Two(rand_proper_sector(rng)))
            .collect()
    };
    let cl = cone_lattice_from_family(&family, cap_b).ok()?;
    if cl.cones_a.len() > cap_a || cl.cones_b.len() > cap_b {
        return None;
    }
    Some((cl.quasi, cl.lattice, cl.morphism))
}

fn random_index(
    rng: &mut ChaCha8Rng,
    cap_a: usize,
    cap_b: usize,
) -> (QuasiLattice, QuasiLattice, LatticeMorphism) {
    loop {
        let choice = if rng.random_bool(0.5) {
            random_cone_index(rng, cap_a, cap_b)
        } else {
            random_abstract_index(rng, cap_a, cap_b)
        };
        if let Some(t) = choice {
            return t;
        }
    }
}

/// A random localizable system over the index with all dims at most 3;
/// `None` when the index packs too many prime labels under one element.
fn random_small_system(rng: &mut ChaCha8Rng, q: &QuasiLattice) -> Option<IndSystem> {
    for _ in 0..32 {
        let seed = rng.random_range(0..u64::MAX);
        let sys = random_prelocalizable(q, 2, seed).expect("generated indices embed");
        if sys.dims().iter().all(|&d| d <= 3) {
            return Some(sys);
        }
    }
    None
}

/// A random (index pair, morphism, system) instance with dims at most 3.
fn random_instance(
    rng: &mut ChaCha8Rng,
) -> (QuasiLattice, QuasiLattice, LatticeMorphism, IndSystem) {
    loop {
        let (qa, qb, morphism) = random_index(rng, 6, 8);
        if let Some(sys) = random_small_system(rng, &qa) {
            return (qa, qb, morphism, sys);
        }
    }
}

// ---------------------------------------------------------------------
// criteria
// ---------------------------------------------------------------------

/// The four-element regression system: colimit dimension zero and all
/// canonical projections zero.
pub fn remark_regression() -> SuiteReport {
    let mut r = SuiteReport::new("remark-regression");
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
    maps.insert((0usize, 2usize), one(1));
    maps.insert((0, 3), one(-1));
    maps.insert((1, 2), one(1));
    maps.insert((1, 3), one(1));
    let sys = IndSystem::new(poset, vec![1, 1, 1, 1], maps).unwrap();
    r.check(sys.validate().is_ok(), || "system validation failed".into());
    let c = colimit(&sys, None);
    r.check(c.dim() == 0, || format!("colimit dimension {} instead of 0", c.dim()));
    for m in 0..4 {
        r.check(c.projection(m).is_zero(), || format!("projection {m} is nonzero"));
    }
    r.check(c.relation_basis().rows() == 4, || {
        format!("relation rank {} instead of 4", c.relation_basis().rows())
    });
    r
}

/// Pushforwards preserve the localizability conditions: 200 random
/// (index, morphism, system) instances, cone-derived and abstract.
pub fn pushforward_suite(seed: u64, instances: usize) -> SuiteReport {
    let mut r = SuiteReport::new("pushforward");
    let mut rng = rng_for(seed, 2);
    for i in 0..instances {
        let (qa, qb, morphism, sys) = random_instance(&mut rng);
        let p = match crate::indsys::pushforward(&sys, &morphism) {
            Ok(p) => p,
            Err(e) => {
                r.check(false, || format!("instance {i}: pushforward refused: {e}"));
                continue;
            }
        };
        for report in
            check_conditions(&p.system, &qb, &[Condition::I, Condition::II, Condition::III])
        {
            r.check(report.pass, || {
                format!("instance {i}: condition {} fails on the image system", report.condition)
            });
        }
        let b_inf_distributive =
            is_distributive(&qb, DEFAULT_SUBSET_CAP).is_infinitely_distributive();
        let x_localizable = check_localizable(&sys, &qa, None).pass;
        r.check(b_inf_distributive, || format!("instance {i}: union lattice not distributive"));
        r.check(x_localizable, || format!("instance {i}: generated system not localizable"));
        if b_inf_distributive && x_localizable {
            r.check(check_localizable(&p.system, &qb, None).pass, || {
                format!("instance {i}: image system fails the family gluing condition")
            });
        }
    }
    r
}

/// The hereditary intersection identity on 100 random (system, subset)
/// pairs, compared as row-reduced bases.
pub fn hereditary_intersection_suite(seed: u64, instances: usize) -> SuiteReport {
    let mut r = SuiteReport::new("hereditary-intersection");
    let mut rng = rng_for(seed, 3);
    for i in 0..instances {
        let (qa, _, _, sys) = random_instance(&mut rng);
        let n = qa.len();
        let k = rng.random_range(1..=n);
        let set: Vec<usize> = (0..k).map(|_| rng.random_range(0..n)).collect();
        let hereditary: Vec<usize> =
            sys.index().hereditary_closure(&set).into_iter().collect();
        match hereditary_intersection_check(&sys, &qa, &hereditary) {
            Ok(hc) => r.check(hc.pass(), || {
                format!("instance {i}: N_A /\\ M_I differs from N_I on {hereditary:?}")
            }),
            Err(e) => r.check(false, || format!("instance {i}: {e}")),
        }
    }
    r
}

/// Quotient presentations are isomorphisms onto the colimit: 100 random
/// instances with duplicate family members mixed in; the antisymmetric
/// description of the relations is verified inside the operation.
pub fn presentation_suite(seed: u64, instances: usize) -> SuiteReport {
    let mut r = SuiteReport::new("quotient-presentation");
    let mut rng = rng_for(seed, 4);
    for i in 0..instances {
        let (qa, _, _, sys) = random_instance(&mut rng);
        let maximal = sys.index().maximal_of(&(0..qa.len()).collect::<Vec<_>>());
        let mut family = maximal.clone();
        for _ in 0..rng.random_range(0..=2usize) {
            family.push(family[rng.random_range(0..family.len())]); // duplicates
        }
        if rng.random_bool(0.5) {
            family.push(rng.random_range(0..qa.len()));
        }
        match quotient_presentation(&sys, &qa, &family) {
            Ok(p) => {
                r.check(p.quotient_dim == p.colimit_dim, || {
                    format!(
                        "instance {i}: presentation dim {} vs colimit dim {}",
                        p.quotient_dim, p.colimit_dim
                    )
                });
                r.check(p.iso.rank() == p.colimit_dim, || {
                    format!("instance {i}: induced map is singular")
                });
            }
            Err(e) => r.check(false, || format!("instance {i}: {e}")),
        }
    }
    r
}

/// Sign algebra of the covering boundary map: the image of the alternating
/// map equals the diagonal-sign image of the unsigned relations, for random
/// dimensions and maps with k+1 in {2, 3, 4}.
pub fn sign_algebra_suite(seed: u64, instances: usize) -> SuiteReport {
    let mut r = SuiteReport::new("sign-algebra");
    let mut rng = rng_for(seed, 5);
    for i in 0..instances {
        let n = rng.random_range(2..=4usize);
        let dims: Vec<usize> = (0..n).map(|_| rng.random_range(0..=3usize)).collect();
        let mut wedges = BTreeMap::new();
        for a in 0..n {
            for b in a + 1..n {
                let d = rng.random_range(0..=3usize);
                let rand_mat = |rng: &mut ChaCha8Rng, rows: usize, cols: usize| {
                    Mat::from_fn(rows, cols, |_, _| int(rng.random_range(-2..=2)))
                };
                let to_first = rand_mat(&mut rng, dims[a], d);
                let to_second = rand_mat(&mut rng, dims[b], d);
                wedges.insert((a, b), WedgeSpace { dim: d, to_first, to_second });
            }
        }
        match cech_sign_equivalence(&dims, &wedges) {
            Ok(report) => r.check(report.equal, || {
                format!("instance {i}: Im delta differs from tau(relations) for dims {dims:?}")
            }),
            Err(e) => r.check(false, || format!("instance {i}: {e}")),
        }
    }
    r
}

/// Exact cone algebra against its oracles: duality involution, properness
/// vs full-dimensional duals, distance homogeneity and union minimum, and
/// the exact LP against the floating oracle at 1e-9.
pub fn cone_suite(seed: u64, instances: usize) -> SuiteReport {
    let mut r = SuiteReport::new("cone-algebra");
    let mut rng = rng_for(seed, 6);
    for i in 0..instances {
        let dim = if i % 2 == 0 { 2 } else { 3 };
        let cone = rand_cone(&mut rng, dim);
        let form = BilinearForm::standard(dim);
        let dual = cone.dual(&form).expect("matching dimensions");
        let bidual = dual.dual(&form).expect("matching dimensions");
        r.check(bidual.set_eq(&cone).unwrap(), || {
            format!("instance {i}: dual of dual differs from the cone")
        });
        r.check(cone.is_proper() == dual.is_full_dimensional(), || {
            format!("instance {i}: properness does not match dual full-dimension")
        });
        let x = rand_nonzero_vec(&mut rng, dim);
        let d = cone.distance(&x);
        let two_x: Vec<Scalar> = x.iter().map(|v| v * int(2)).collect();
        r.check(cone.distance(&two_x) == int(2) * &d, || {
            format!("instance {i}: distance is not 1-homogeneous")
        });
        if cone.contains(&x) {
            r.check(d.is_zero(), || format!("instance {i}: member with positive distance"));
        } else {
            r.check(d.is_positive(), || format!("instance {i}: outsider at distance zero"));
        }
        // float oracle agreement
        let fgens: Vec<Vec<f64>> =
            cone.generators().iter().map(|g| oracle::vec_to_f64(g)).collect();
        let fd = oracle::float_distance(&fgens, &oracle::vec_to_f64(&x));
        r.check((oracle::to_f64(&d) - fd).abs() <= 1e-9, || {
            format!("instance {i}: exact vs float distance differ by more than 1e-9")
        });
        if dim == 2 {
            // distance to a union is the minimum over the parts
            let s1 = rand_proper_sector(&mut rng);
            let s2 = rand_proper_sector(&mut rng);
            let u = s1.join(&s2);
            let lhs = u.distance(&x);
            let rhs = s1.distance(&x).min(s2.distance(&x));
            r.check(lhs == rhs, || {
                format!("instance {i}: union distance differs from the minimum")
            });
        }
    }
    r
}

/// Simplicial covers: the defining identities on 50 random planar families
/// and the standard spatial family; degenerate families are rejected.
pub fn cover_suite(seed: u64, instances: usize) -> SuiteReport {
    let mut r = SuiteReport::new("simplicial-cover");
    let mut rng = rng_for(seed, 7);
    let form2 = BilinearForm::standard(2);
    let mut made = 0;
    while made < instances {
        let vectors: Vec<Vec<Scalar>> = (0..3).map(|_| rand_nonzero_vec(&mut rng, 2)).collect();
        if !crate::cone::positively_spans(2, &vectors) {
            // degenerate family must be rejected
            r.check(simplicial_cover(&vectors, &form2).is_err(), || {
                "degenerate family accepted".into()
            });
            continue;
        }
        made += 1;
        match simplicial_cover(&vectors, &form2) {
            Ok(cover) => {
                // union check by sector arithmetic, independent of the LP route
                let mut union = SectorSet2::zero();
                for k in &cover.cones {
                    if let SectorSet::Two(s) = SectorSet::from_convex(k).unwrap() {
                        union = union.join(&s);
                    }
                }
                r.check(union.is_full(), || "cones do not cover the plane".into());
                r.check(union_covers_space(2, &cover.cones), || {
                    "halfspace-choice cover check failed".into()
                });
            }
            Err(e) => r.check(false, || format!("valid family rejected: {e}")),
        }
    }
    // the standard family in three dimensions
    let e = |i: usize| {
        let mut v = vec![int(0); 3];
        v[i] = int(1);
        v
    };
    let vectors = vec![e(0), e(1), e(2), vec![int(-1), int(-1), int(-1)]];
    match simplicial_cover(&vectors, &BilinearForm::standard(3)) {
        Ok(cover) => {
            r.check(union_covers_space(3, &cover.cones), || "standard family union check".into())
        }
        Err(e) => r.check(false, || format!("standard family rejected: {e}")),
    }
    r.check(
        simplicial_cover(&[e(0), e(0), e(1), e(2)], &BilinearForm::standard(3)).is_err(),
        || "non-spanning spatial family accepted".into(),
    );
    r
}

fn rand_gauss(rng: &mut ChaCha8Rng) -> GaussRat {
    GaussRat::new(rand_scalar(rng), rand_scalar(rng))
}

fn rand_positive_decay(rng: &mut ChaCha8Rng) -> GaussRat {
    GaussRat::new(frac(rng.random_range(1..=4), rng.random_range(1..=2)), rand_scalar(rng))
}

fn rand_weight(rng: &mut ChaCha8Rng) -> Poly {
    let deg = rng.random_range(0..=2usize);
    loop {
        let coeffs: Vec<ECoef> =
            (0..=deg).map(|_| ECoef::from_rat(rand_gauss(rng))).collect();
        let p = Poly::from_coeffs(coeffs);
        if !p.is_zero() {
            return p;
        }
    }
}

fn rand_functional(rng: &mut ChaCha8Rng, sides: &[Side]) -> Ultrafunctional1D {
    let mut u = Ultrafunctional1D::zero();
    for _ in 0..rng.random_range(0..=2usize) {
        let mass = Ultrafunctional1D::new(
            vec![crate::hyper::PointMass {
                location: rand_gauss(rng),
                order: rng.random_range(0..=2usize),
                coeff: ECoef::from_rat(rand_gauss(rng)),
            }],
            Vec::new(),
        )
        .unwrap();
        u = u.add(&mass);
    }
    for &side in sides {
        for _ in 0..rng.random_range(0..=2usize) {
            let seg =
                Ultrafunctional1D::segment(side, rand_positive_decay(rng), rand_weight(rng))
                    .unwrap();
            u = u.add(&seg);
        }
    }
    if u.is_zero() {
        Ultrafunctional1D::delta(GaussRat::zero())
    } else {
        u
    }
}

/// The two Fourier commutation identities and the delta normalization, as
/// exact symbolic equalities on 100 random functionals.
pub fn fourier_identity_suite(seed: u64, instances: usize) -> SuiteReport {
    let mut r = SuiteReport::new("fourier-identities");
    let mut rng = rng_for(seed, 8);
    let minus_i_z = Poly::monomial(ECoef::from_rat(-GaussRat::i()), 1);
    let minus_i = ECoef::from_rat(-GaussRat::i());
    for i in 0..instances {
        let u = rand_functional(&mut rng, &[Side::Pos, Side::Neg]);
        let f = fourier(&u);
        let lhs = fourier(&u.derivative());
        let rhs = f.mul_poly(&minus_i_z);
        r.check(lhs == rhs, || format!("instance {i}: derivative rule fails"));
        let lhs2 = fourier(&u.mul_poly(&Poly::var()));
        let rhs2 = derivative_scaled(&f, &minus_i);
        r.check(lhs2 == rhs2, || format!("instance {i}: coordinate rule fails"));
    }
    let one = fourier(&Ultrafunctional1D::delta(GaussRat::zero()));
    r.check(
        one.upper() == &SymFn::constant(ECoef::one()) && one.lower().is_zero(),
        || "Fourier image of the unit point mass is not 1".into(),
    );
    r
}

fn derivative_scaled(h: &Hyperfunction1D, c: &ECoef) -> Hyperfunction1D {
    let d = h.derivative();
    // scale both representatives
    Hyperfunction1D::from_pair(d.upper().scale(c), d.lower().scale(c))
        .expect("scaling preserves pole sides")
}

/// Bijectivity witness: the summing map vanishes on both relation
/// generator families, the kernel decomposition succeeds exactly on
/// vanishing boundary sums, and its output re-sums to the input; half of
/// the instances are built inside the relation subspace.
pub fn bijectivity_suite(seed: u64, instances: usize) -> SuiteReport {
    let mut r = SuiteReport::new("kernel-decomposition");
    let mut rng = rng_for(seed, 9);
    for i in 0..instances {
        // soundness of the two generator families
        let v = rand_entire(&mut rng);
        let gen_upper = Triple1D::new(v.clone(), v.neg(), SymFn::zero()).unwrap();
        let gen_lower = Triple1D::new(v.clone(), SymFn::zero(), v.neg()).unwrap();
        r.check(s_map(&gen_upper).is_zero() && s_map(&gen_lower).is_zero(), || {
            format!("instance {i}: a relation generator has a nonzero boundary sum")
        });
        let t = if i % 2 == 0 {
            // a relation element: (v, -v|_+, 0) + (w, 0, -w|_-)
            let v = rand_entire(&mut rng);
            let w = rand_entire(&mut rng);
            Triple1D::new(v.add(&w), v.neg(), w.neg()).unwrap()
        } else {
            let upper = rand_upper(&mut rng);
            let lower = rand_lower(&mut rng);
            Triple1D::new(rand_entire(&mut rng), upper, lower).unwrap()
        };
        let class = s_map(&t);
        match kernel_decompose(&t) {
            KernelDecomposition::InKernel { n1, n2, .. } => {
                r.check(class.is_zero(), || {
                    format!("instance {i}: decomposition of a nonzero class")
                });
                r.check(n1.add(&n2) == t, || {
                    format!("instance {i}: decomposition does not re-sum")
                });
                r.check(s_map(&n1).is_zero() && s_map(&n2).is_zero(), || {
                    format!("instance {i}: a summand leaves the kernel")
                });
            }
            KernelDecomposition::NotInKernel { value } => {
                r.check(!class.is_zero(), || {
                    format!("instance {i}: refutation of a vanishing class")
                });
                r.check(value == class, || {
                    format!("instance {i}: witness differs from the class")
                });
            }
        }
    }
    r
}

fn rand_entire(rng: &mut ChaCha8Rng) -> SymFn {
    let mut f = SymFn::from_poly(rand_weight(rng));
    if rng.random_bool(0.4) {
        let freq = loop {
            let w = rand_gauss(rng);
            if !w.is_zero() {
                break w;
            }
        };
        f = f.add(&SymFn::exp_poly(freq, rand_weight(rng)));
    }
    if rng.random_bool(0.2) {
        SymFn::zero()
    } else {
        f
    }
}

fn rand_upper(rng: &mut ChaCha8Rng) -> SymFn {
    // poles strictly below the axis
    if rng.random_bool(0.3) {
        return SymFn::zero();
    }
    let root = GaussRat::new(rand_scalar(rng), frac(-rng.random_range(1..=3), 1));
    SymFn::from_rational(crate::hyper::FactoredRational::new(
        rand_weight(rng),
        vec![(root, rng.random_range(1..=2usize))],
    ))
}

fn rand_lower(rng: &mut ChaCha8Rng) -> SymFn {
    if rng.random_bool(0.3) {
        return SymFn::zero();
    }
    let root = GaussRat::new(rand_scalar(rng), frac(rng.random_range(1..=3), 1));
    SymFn::from_rational(crate::hyper::FactoredRational::new(
        rand_weight(rng),
        vec![(root, rng.random_range(1..=2usize))],
    ))
}

/// Multiplier semigroup, restriction compatibility of the transform, and
/// the weighted-membership decision against a grid-sampling oracle.
pub fn semigroup_membership_suite(seed: u64, instances: usize) -> SuiteReport {
    let mut r = SuiteReport::new("semigroup-membership");
    let mut rng = rng_for(seed, 10);
    for i in 0..instances {
        // semigroup law on positive-carrier functionals
        let u = rand_functional(&mut rng, &[Side::Pos]);
        let eta = frac(rng.random_range(1..=3), rng.random_range(1..=3));
        let eta2 = frac(rng.random_range(1..=3), rng.random_range(1..=3));
        match semigroup_check(&u, &eta, &eta2) {
            Ok(ok) => r.check(ok, || format!("instance {i}: semigroup law fails")),
            Err(e) => r.check(false, || format!("instance {i}: semigroup error: {e}")),
        }
        // restriction compatibility for point masses
        let masses = Ultrafunctional1D::new(
            rand_functional(&mut rng, &[]).masses().to_vec(),
            Vec::new(),
        )
        .unwrap();
        let (f0, _) = masses.laplace().expect("degenerate carrier");
        let (f1, _) = masses
            .laplace_with_carrier(SectorSet1::positive())
            .expect("half-line carrier contains the degenerate cone");
        r.check(f0 == f1, || format!("instance {i}: restriction changes the transform"));
    }
    // membership decision vs a float grid oracle
    let mut rng = rng_for(seed, 11);
    let mut checked = 0;
    while checked < instances {
        let dim = rng.random_range(1..=2usize);
        let cone = random_weight_cone(&mut rng, dim);
        let w = WeightSpec::new(
            cone,
            frac(rng.random_range(1..=3), rng.random_range(1..=2)),
            frac(rng.random_range(1..=4), rng.random_range(1..=2)),
        )
        .unwrap();
        let l: Vec<Scalar> = (0..dim).map(|_| rand_scalar(&mut rng)).collect();
        let verdict = match exp_membership(&l, &w) {
            Ok(v) => v,
            Err(e) => {
                r.check(false, || format!("membership error: {e}"));
                checked += 1;
                continue;
            }
        };
        let Some(float_max) = grid_max_exponent(&w, &l) else { continue };
        if float_max.abs() <= 1e-6 {
            continue; // margin case excluded from the float comparison
        }
        checked += 1;
        r.check(verdict.is_member() == (float_max < 0.0), || {
            format!(
                "membership verdict {} disagrees with grid maximum {float_max}",
                verdict.is_member()
            )
        });
        if let ExpMembership::Unbounded { direction, value } = &verdict {
            r.check(value.is_positive() && w.h(&l, direction) == *value, || {
                "violating direction does not replay".into()
            });
        }
    }
    r
}

fn random_weight_cone(rng: &mut ChaCha8Rng, dim: usize) -> ConeRep {
    match dim {
        1 => {
            let s = match rng.random_range(0..3) {
                0 => SectorSet1::zero(),
                1 => SectorSet1::positive(),
                _ => SectorSet1::negative(),
            };
            ConeRep::Sector(SectorSet::One(s))
        }
        _ => {
            if rng.random_bool(0.5) {
                ConeRep::Convex(rand_cone(rng, 2))
            } else {
                let mut s = rand_proper_sector(rng);
                if rng.random_bool(0.3) {
                    s = s.join(&rand_proper_sector(rng));
                }
                ConeRep::Sector(SectorSet::Two(s))
            }
        }
    }
}

/// Maximum of the membership exponent over a grid on the unit sphere, in
/// floating point; `None` when the cone data cannot be sampled.
fn grid_max_exponent(w: &WeightSpec, l: &[Scalar]) -> Option<f64> {
    let dim = w.cone().dim();
    let a = oracle::to_f64(w.a());
    let b = oracle::to_f64(w.b());
    let lf = oracle::vec_to_f64(l);
    let pieces: Vec<Vec<Vec<f64>>> = w
        .cone()
        .convex_pieces()
        .iter()
        .map(|p| p.generators().iter().map(|g| oracle::vec_to_f64(g)).collect())
        .collect();
    let h = |x: &[f64]| -> f64 {
        let delta = pieces
            .iter()
            .map(|gens| oracle::float_distance(gens, x))
            .fold(f64::INFINITY, f64::min);
        let norm = x.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
        let ldot: f64 = lf.iter().zip(x).map(|(a, b)| a * b).sum();
        -ldot + norm / a - b * delta
    };
    let mut best = f64::NEG_INFINITY;
    match dim {
        1 => {
            for x in [[1.0], [-1.0]] {
                best = best.max(h(&x));
            }
        }
        2 => {
            let n = 400;
            for k in 0..n {
                let theta = std::f64::consts::TAU * (k as f64) / (n as f64);
                let (s, c) = theta.sin_cos();
                let scale = 1.0 / c.abs().max(s.abs());
                best = best.max(h(&[scale * c, scale * s]));
            }
        }
        _ => return None,
    }
    Some(best)
}

/// Auxiliary suite exercising the colimit decomposition operations on
/// random localizable systems (splitting relation vectors over unions of
/// hereditary subsets and gluing compatible colimit elements).
pub fn decomposition_suite(seed: u64, instances: usize) -> SuiteReport {
    let mut r = SuiteReport::new("split-and-glue");
    let mut rng = rng_for(seed, 12);
    for i in 0..instances {
        let (qa, _, _, sys) = random_instance(&mut rng);
        let n = qa.len();
        let pick = |rng: &mut ChaCha8Rng| -> Vec<usize> {
            let k = rng.random_range(1..=n);
            let set: Vec<usize> = (0..k).map(|_| rng.random_range(0..n)).collect();
            sys.index().hereditary_closure(&set).into_iter().collect()
        };
        let i1 = pick(&mut rng);
        let i2 = pick(&mut rng);
        let union: Vec<usize> = {
            let mut u = i1.clone();
            u.extend(i2.iter().copied());
            u.sort_unstable();
            u.dedup();
            u
        };
        // random relation vector over the union
        let nsub = relation_subspace(&sys, &union);
        if nsub.dim() > 0 {
            let mut x = vec![Scalar::zero(); nsub.ambient()];
            for row in 0..nsub.basis().rows() {
                let c = rand_scalar(&mut rng);
                for j in 0..nsub.ambient() {
                    let d = &c * nsub.basis().at(row, j);
                    x[j] = &x[j] + &d;
                }
            }
            match split_over_union(&sys, &i1, &i2, &x) {
                Ok((x1, x2)) => {
                    let sum: Vec<Scalar> =
                        x1.iter().zip(&x2).map(|(a, b)| a + b).collect();
                    r.check(vec_sub(&sum, &x).iter().all(|v| v.is_zero()), || {
                        format!("instance {i}: split does not re-sum")
                    });
                    r.check(
                        relation_subspace(&sys, &i1).contains(&x1)
                            && relation_subspace(&sys, &i2).contains(&x2),
                        || format!("instance {i}: split parts leave their subspaces"),
                    );
                }
                Err(e) => r.check(false, || format!("instance {i}: split failed: {e}")),
            }
        }
        // glue a compatible pair produced from a common element
        let meet: Vec<usize> = i1.iter().filter(|e| i2.contains(e)).copied().collect();
        if !meet.is_empty() {
            let cm = colimit(&sys, Some(&meet));
            if cm.dim() > 0 {
                let x: Vec<Scalar> = (0..cm.dim()).map(|_| rand_scalar(&mut rng)).collect();
                let c1 = colimit(&sys, Some(&i1));
                let c2 = colimit(&sys, Some(&i2));
                let x1 = tau(&cm, &c1).mul_vec(&x);
                let x2 = tau(&cm, &c2).mul_vec(&x);
                let all: Vec<usize> = (0..n).collect();
                match crate::indsys::glue(&sys, &i1, &i2, &all, &x1, &x2) {
                    Ok(glued) => r.check(glued == x, || {
                        format!("instance {i}: glued element differs from the source")
                    }),
                    Err(e) => r.check(false, || format!("instance {i}: glue failed: {e}")),
                }
            }
        }
    }
    r
}

/// Top-element identity: over a distributive index with a top element that
/// is a join of family members, the colimit over a meet-closed cofinal
/// subset is isomorphic to the top space.
pub fn top_isomorphism_suite(seed: u64, instances: usize) -> SuiteReport {
    let mut r = SuiteReport::new("top-isomorphism");
    let mut rng = rng_for(seed, 13);
    for i in 0..instances {
        // qb is a lattice with a top; use a random meet-closed subset that
        // join-covers the top
        let (qb, sys) = loop {
            let (_, qb, _) = random_index(&mut rng, 6, 8);
            if let Some(sys) = random_small_system(&mut rng, &qb) {
                break (qb, sys);
            }
        };
        let n = qb.len();
        let top = (0..n).find(|&t| (0..n).all(|a| qb.leq(a, t))).expect("lattices have tops");
        let mut subset: Vec<usize> = (0..n).filter(|_| rng.random_bool(0.6)).collect();
        subset.push(top);
        let closed: Vec<usize> = qb.wedge_closure(&subset).into_iter().collect();
        let c = colimit(&sys, Some(&closed));
        r.check(c.dim() == sys.dim(top), || {
            format!("instance {i}: colimit dim {} vs top dim {}", c.dim(), sys.dim(top))
        });
        // the projection from the top space is an isomorphism
        r.check(c.projection(top).rank() == sys.dim(top), || {
            format!("instance {i}: top projection singular")
        });
    }
    r
}

/// Injectivity of the canonical map out of a hereditary
/// restriction has full rank on random localizable systems.
pub fn tau_injectivity_suite(seed: u64, instances: usize) -> SuiteReport {
    let mut r = SuiteReport::new("tau-injectivity");
    let mut rng = rng_for(seed, 14);
    for i in 0..instances {
        let (qa, _, _, sys) = random_instance(&mut rng);
        let n = qa.len();
        let k = rng.random_range(1..=n);
        let set: Vec<usize> = (0..k).map(|_| rng.random_range(0..n)).collect();
        let hereditary: Vec<usize> = sys.index().hereditary_closure(&set).into_iter().collect();
        let inner = colimit(&sys, Some(&hereditary));
        let outer = colimit(&sys, None);
        let t = tau(&inner, &outer);
        r.check(t.rank() == inner.dim(), || {
            format!("instance {i}: tau not injective on {hereditary:?}")
        });
    }
    r
}

/// Exponential-membership certificates on the half-line threshold family,
/// where the exact verdict is known in closed form.
pub fn membership_threshold_suite(seed: u64, instances: usize) -> SuiteReport {
    let mut r = SuiteReport::new("membership-threshold");
    let mut rng = rng_for(seed, 15);
    for i in 0..instances {
        let a = frac(rng.random_range(1..=4), rng.random_range(1..=3));
        let b = frac(rng.random_range(1..=6), rng.random_range(1..=3));
        let w = WeightSpec::new(
            ConeRep::Sector(SectorSet::One(SectorSet1::positive())),
            a.clone(),
            b.clone(),
        )
        .unwrap();
        let verdict = exp_membership(&[int(1)], &w).unwrap().is_member();
        let expected = a >= int(1) && b >= int(1) + a.recip();
        r.check(verdict == expected, || {
            format!(
                "instance {i}: membership at A={}, B={} decided {verdict}, expected {expected}",
                crate::scalar::format_scalar(&a),
                crate::scalar::format_scalar(&b)
            )
        });
    }
    r
}

/// All acceptance suites at their pinned sizes, in criterion order.
pub fn acceptance_suites(seed: u64) -> Vec<SuiteReport> {
    vec![
        remark_regression(),
        pushforward_suite(seed, 200),
        hereditary_intersection_suite(seed, 100),
        presentation_suite(seed, 100),
        sign_algebra_suite(seed, 100),
        cone_suite(seed, 200),
        cover_suite(seed, 50),
        fourier_identity_suite(seed, 100),
        bijectivity_suite(seed, 100),
        semigroup_membership_suite(seed, 100),
    ]
}

/// Named suite lookup for the self-test driver; `None` for unknown names.
pub fn suite_by_name(name: &str, seed: u64) -> Option<SuiteReport> {
    Some(match name {
        "remark-regression" => remark_regression(),
        "pushforward" => pushforward_suite(seed, 200),
        "hereditary-intersection" => hereditary_intersection_suite(seed, 100),
        "quotient-presentation" => presentation_suite(seed, 100),
        "sign-algebra" => sign_algebra_suite(seed, 100),
        "cone-algebra" => cone_suite(seed, 200),
        "simplicial-cover" => cover_suite(seed, 50),
        "fourier-identities" => fourier_identity_suite(seed, 100),
        "kernel-decomposition" => bijectivity_suite(seed, 100),
        "semigroup-membership" => semigroup_membership_suite(seed, 100),
        "split-and-glue" => decomposition_suite(seed, 50),
        "top-isomorphism" => top_isomorphism_suite(seed, 50),
        "tau-injectivity" => tau_injectivity_suite(seed, 100),
        "membership-threshold" => membership_threshold_suite(seed, 50),
        _ => return None,
    })
}

pub const SUITE_NAMES: &[&str] = &[
    "remark-regression",
    "pushforward",
    "hereditary-intersection",
    "quotient-presentation",
    "sign-algebra",
    "cone-algebra",
    "simplicial-cover",
    "fourier-identities",
    "kernel-decomposition",
    "semigroup-membership",
    "split-and-glue",
    "top-isomorphism",
    "tau-injectivity",
    "membership-threshold",
];
