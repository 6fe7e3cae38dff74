use locfree::latorder::{
    class_set_with_primes, ideal_mul, isomorphic_ideals, lambda, right_ideals_of_norm, short_vectors, GramMatrix, RightIdeal,
};
use locfree::lfcg::{group_law_check, ray_class_group, stable_class, Center, FactorKind, SeparableAlgebraSpec, SimpleFactorSpec};
use locfree::numtheory::Place;
use locfree::quadfield::{class_group, QuadElem, QuadField, QuadIdeal};
use locfree::quatalg::ramified_places;
use num_rational::BigRational;
use proptest::prelude::*;

type Q = BigRational;

fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

fn lambda11_ideals() -> Vec<RightIdeal> {
    let o = lambda(11).unwrap();
    [2, 3, 5].iter().flat_map(|&n| right_ideals_of_norm(&o, n).unwrap()).collect()
}

#[test]
fn isomorphism_is_an_equivalence_relation() {
    let ideals = lambda11_ideals();
    let n = ideals.len();
    let mut rel = vec![vec![false; n]; n];
    for a in 0..n {
        for b in 0..n {
            if let Some(x) = isomorphic_ideals(&ideals[a], &ideals[b]).unwrap() {
                assert_eq!(ideals[a].left_mul(&x).unwrap().lattice(), ideals[b].lattice());
                rel[a][b] = true;
            }
        }
    }
    for a in 0..n {
        assert!(rel[a][a]);
        for b in 0..n {
            assert_eq!(rel[a][b], rel[b][a]);
            for c in 0..n {
                assert!(!(rel[a][b] && rel[b][c]) || rel[a][c]);
            }
        }
    }
    let classes = (0..n).filter(|&a| (0..a).all(|b| !rel[a][b])).count();
    assert_eq!(classes, 2);
}

#[test]
fn class_set_does_not_depend_on_prime_order() {
    for p in [11, 17, 23] {
        let o = lambda(p).unwrap();
        let a = class_set_with_primes(&o, &[2, 3]).unwrap();
        let b = class_set_with_primes(&o, &[3, 2]).unwrap();
        let c = class_set_with_primes(&o, &[5]).unwrap();
        assert_eq!(a.len(), b.len());
        assert_eq!(a.len(), c.len());
        for i in &a {
            assert_eq!(b.iter().filter(|j| isomorphic_ideals(i, j).unwrap().is_some()).count(), 1);
        }
    }
}

fn factor_strategy() -> impl Strategy<Value = SimpleFactorSpec> {
    let quat = (-30i64..30, -30i64..30)
        .prop_filter("nonzero", |(a, b)| *a != 0 && *b != 0)
        .prop_map(|(a, b)| FactorKind::Quaternion { a: q(a), b: q(b) });
    let matrix = (1usize..4).prop_map(|degree| FactorKind::Matrix { degree });
    let ramified = (prop::sample::subsequence(vec![2u64, 3, 5, 7, 11], 0..4), any::<bool>()).prop_filter_map(
        "even ramification",
        |(finite, inf)| {
            let real = if inf { vec![0] } else { vec![] };
            ((finite.len() + real.len()) % 2 == 0).then_some(FactorKind::Ramified { finite, real })
        },
    );
    prop_oneof![quat, matrix, ramified].prop_map(|kind| SimpleFactorSpec { center: Center::Rational, kind })
}

fn ideal_strategy(disc: i64) -> impl Strategy<Value = QuadIdeal> {
    let k = QuadField::from_disc(disc).unwrap();
    prop::collection::vec((-8i64..8, -8i64..8), 2)
        .prop_filter("nonzero generators", |g| g.iter().all(|&(x, y)| x != 0 || y != 0))
        .prop_map(move |g| {
            let gens: Vec<QuadElem> = g.iter().map(|&(x, y)| QuadElem::from_ints(k, x, y)).collect();
            QuadIdeal::from_generators(k, &gens).unwrap()
        })
}

fn has_element_of_norm(i: &QuadIdeal) -> bool {
    let b = i.basis();
    let sum = |x: &QuadElem, y: &QuadElem| QuadElem::new(x.field(), &x.x + &y.x, &x.y + &y.y);
    let g = b
        .iter()
        .map(|x| b.iter().map(|y| (sum(x, y).norm() - x.norm() - y.norm()) / q(2)).collect())
        .collect();
    !short_vectors(&GramMatrix::new(g).unwrap(), &i.norm()).unwrap().is_empty()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ramification_has_even_size(a in -200i64..200, b in -200i64..200) {
        prop_assume!(a != 0 && b != 0);
        let r = ramified_places(&q(a), &q(b)).unwrap();
        prop_assert_eq!(r.len() % 2, 0);
        prop_assert_eq!(r.contains(&Place::INFINITY), a < 0 && b < 0);
    }

    #[test]
    fn ray_group_over_rationals_is_trivial(factors in prop::collection::vec(factor_strategy(), 1..4)) {
        let spec = SeparableAlgebraSpec::new(factors).unwrap();
        prop_assert!(ray_class_group(&spec).unwrap().is_trivial());
    }

    #[test]
    fn class_of_product_is_product_of_classes(
        (disc, i, j) in prop::sample::select(vec![-20i64, -23, -84, -199, 12, 60, 229])
            .prop_flat_map(|d| (Just(d), ideal_strategy(d), ideal_strategy(d)))
    ) {
        let g = class_group(disc, false).unwrap();
        let ij = i.mul(&j).unwrap();
        prop_assert_eq!(
            g.ideal_class(&ij).unwrap(),
            g.op(g.ideal_class(&i).unwrap(), g.ideal_class(&j).unwrap())
        );
    }

    #[test]
    fn principal_iff_norm_is_represented(i in prop_oneof![ideal_strategy(-20), ideal_strategy(-23), ideal_strategy(-84)]) {
        let g = class_group(i.field().disc(), false).unwrap();
        prop_assert_eq!(g.ideal_class(&i).unwrap() == g.identity(), has_element_of_norm(&i));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn reduced_norm_is_multiplicative(
        p in prop::sample::select(vec![2u64, 3, 5, 11, 13]),
        q1 in prop::sample::select(vec![2u64, 3, 5, 7]),
        q2 in prop::sample::select(vec![2u64, 3, 5, 7]),
        a in 0usize..8,
        b in 0usize..8,
    ) {
        prop_assume!(p != q1 && p != q2);
        let j = right_ideals_of_norm(&lambda(p).unwrap(), q1).unwrap();
        let j = &j[a % j.len()];
        let i = right_ideals_of_norm(&j.left_order(), q2).unwrap();
        let i = &i[b % i.len()];
        let ij = ideal_mul(i, j).unwrap();
        prop_assert_eq!(ij.nrd(), &(i.nrd() * j.nrd()));
    }

    #[test]
    fn group_law_is_compatible_with_stable_classes(a in 0usize..16, b in 0usize..16) {
        let ideals = lambda11_ideals();
        let (j, j1) = (&ideals[a % ideals.len()], &ideals[b % ideals.len()]);
        let w = group_law_check(j, j1).unwrap();
        prop_assert!(w.stable_ok);
        prop_assert_eq!(&w.nrd_j2, &(&w.nrd_j * &w.nrd_j1));
        let s = stable_class(&w.j2).unwrap().value;
        prop_assert_eq!(s, stable_class(j).unwrap().value);
    }
}
