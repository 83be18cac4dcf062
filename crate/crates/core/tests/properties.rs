//! Property tests for the algebraic laws that should hold on every input,
//! with proptest shrinking pointing at minimal counterexamples.

use proptest::prelude::*;
use ultracalc::cone::sector::SectorSet2;
use ultracalc::cone::{BilinearForm, ConvexCone, Dir};
use ultracalc::hyper::{
    boundary_value, fourier, BoundarySide, ECoef, GaussRat, Poly, Side, SymFn, Ultrafunctional1D,
};
use num_traits::Zero;
use ultracalc::scalar::{format_scalar, frac, int, parse_scalar, Scalar};

fn small_scalar() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| frac(p, q))
}

fn direction() -> impl Strategy<Value = Dir> {
    ((-4i64..=4), (-4i64..=4))
        .prop_filter("nonzero", |(x, y)| *x != 0 || *y != 0)
        .prop_map(|(x, y)| Dir::new(x, y))
}

fn sector_set() -> impl Strategy<Value = SectorSet2> {
    proptest::collection::vec((direction(), direction()), 0..3).prop_map(|pieces| {
        let mut s = SectorSet2::zero();
        for (a, b) in pieces {
            let piece = if a == b {
                SectorSet2::ray(a)
            } else {
                SectorSet2::sector(a, b).expect("distinct directions")
            };
            s = s.join(&piece);
        }
        s
    })
}

fn cone(dim: usize) -> impl Strategy<Value = ConvexCone> {
    proptest::collection::vec(
        proptest::collection::vec(-3i64..=3, dim).prop_filter("nonzero", |v| v.iter().any(|&x| x != 0)),
        1..4,
    )
    .prop_map(move |gens| {
        ConvexCone::new(dim, gens.into_iter().map(|g| g.into_iter().map(int).collect()).collect())
            .expect("nonzero generators")
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalar_round_trip(x in small_scalar()) {
        prop_assert_eq!(parse_scalar(&format_scalar(&x)).unwrap(), x);
    }

    #[test]
    fn sector_lattice_laws(a in sector_set(), b in sector_set(), c in sector_set()) {
        // commutativity and associativity
        prop_assert_eq!(a.join(&b), b.join(&a));
        prop_assert_eq!(a.meet(&b), b.meet(&a));
        prop_assert_eq!(a.join(&b).join(&c), a.join(&b.join(&c)));
        prop_assert_eq!(a.meet(&b).meet(&c), a.meet(&b.meet(&c)));
        // absorption and distributivity (unions of arcs form a ring of sets)
        prop_assert_eq!(a.join(&a.meet(&b)), a.clone());
        prop_assert_eq!(a.meet(&a.join(&b)), a.clone());
        prop_assert_eq!(
            a.meet(&b.join(&c)),
            a.meet(&b).join(&a.meet(&c))
        );
    }

    #[test]
    fn sector_order_is_inclusion(a in sector_set(), b in sector_set(), d in direction()) {
        let m = a.meet(&b);
        prop_assert!(m.leq(&a) && m.leq(&b));
        let j = a.join(&b);
        prop_assert!(a.leq(&j) && b.leq(&j));
        prop_assert_eq!(m.contains_dir(&d), a.contains_dir(&d) && b.contains_dir(&d));
        prop_assert_eq!(j.contains_dir(&d), a.contains_dir(&d) || b.contains_dir(&d));
    }

    #[test]
    fn dual_of_dual_is_identity(c in cone(2)) {
        let form = BilinearForm::standard(2);
        let dd = c.dual(&form).unwrap().dual(&form).unwrap();
        prop_assert!(dd.set_eq(&c).unwrap());
    }

    #[test]
    fn distance_vanishes_exactly_on_the_cone(c in cone(3), x in proptest::collection::vec(small_scalar(), 3)) {
        let d = c.distance(&x);
        prop_assert_eq!(d.is_zero(), c.contains(&x));
    }

    #[test]
    fn union_distance_is_min(a in sector_set(), b in sector_set(), x in proptest::collection::vec(small_scalar(), 2)) {
        let u = a.join(&b);
        prop_assert_eq!(u.distance(&x), a.distance(&x).min(b.distance(&x)));
    }

    #[test]
    fn boundary_values_agree_for_entire_functions(coefs in proptest::collection::vec(-3i64..=3, 0..4)) {
        let v = SymFn::from_poly(Poly::from_coeffs(
            coefs.into_iter().map(ECoef::from_int).collect(),
        ));
        let whole = boundary_value(BoundarySide::WholeLine, &v).unwrap();
        prop_assert_eq!(&whole, &boundary_value(BoundarySide::PlusLine, &v).unwrap());
        prop_assert_eq!(&whole, &boundary_value(BoundarySide::MinusLine, &v).unwrap());
    }

    #[test]
    fn fourier_is_additive_in_the_decomposition(
        decay1 in 1i64..=3, decay2 in 1i64..=3, w1 in -3i64..=3, w2 in -3i64..=3,
    ) {
        // the image of a sum does not depend on how the carrier is split
        let u1 = Ultrafunctional1D::segment(
            Side::Pos,
            GaussRat::from_int(decay1),
            Poly::constant(ECoef::from_int(w1)),
        ).unwrap();
        let u2 = Ultrafunctional1D::segment(
            Side::Neg,
            GaussRat::from_int(decay2),
            Poly::constant(ECoef::from_int(w2)),
        ).unwrap();
        let d = Ultrafunctional1D::delta(GaussRat::from_int(w2));
        let total = u1.add(&u2).add(&d);
        let split = fourier(&u1).add(&fourier(&u2)).add(&fourier(&d));
        prop_assert_eq!(fourier(&total), split);
    }

    #[test]
    fn derivative_commutes_with_addition(da in 1i64..=3, db in 1i64..=3) {
        let a = Ultrafunctional1D::segment(Side::Pos, GaussRat::from_int(da), Poly::one()).unwrap();
        let b = Ultrafunctional1D::segment(Side::Pos, GaussRat::from_int(db), Poly::var()).unwrap();
        prop_assert_eq!(a.add(&b).derivative(), a.derivative().add(&b.derivative()));
    }
}
