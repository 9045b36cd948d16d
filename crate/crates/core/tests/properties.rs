use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use quatfiber_core::cyclotomic::{CycField, Cyclotomic};
use quatfiber_core::field::Field;
use quatfiber_core::groebner::{s_polynomial, GroebnerBasis};
use quatfiber_core::groups::{CharacterTable, FiniteGroup, GroupSpec, Subgroup, SubgroupSpec};
use quatfiber_core::poly::Poly;
use quatfiber_core::quaternion::{hermitian_form, split_form, vec_scale_right, Quaternion};
use quatfiber_core::wreath::{hyperplanes, numerology, WreathGroup};

const CONDUCTORS: [u32; 6] = [1, 3, 4, 5, 8, 12];

fn rational() -> impl Strategy<Value = BigRational> {
    (-40i64..=40, 1i64..=9).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn cyclotomic_in(m: u32) -> impl Strategy<Value = Cyclotomic> {
    let field = CycField::new(m).unwrap();
    prop::collection::vec(rational(), 1..=4).prop_map(move |c| Cyclotomic::from_coeffs(&field, &c))
}

fn cyclotomic() -> impl Strategy<Value = Cyclotomic> {
    prop::sample::select(CONDUCTORS.to_vec()).prop_flat_map(cyclotomic_in)
}

fn quaternion() -> impl Strategy<Value = Quaternion> {
    prop::sample::select(CONDUCTORS.to_vec())
        .prop_flat_map(|m| (cyclotomic_in(m), cyclotomic_in(m)))
        .prop_map(|(a, b)| Quaternion::new(a, b))
}

fn quat_vec(len: usize) -> impl Strategy<Value = Vec<Quaternion>> {
    prop::collection::vec(quaternion(), len)
}

fn field_axioms<K: Field>(a: K, b: K, c: K) {
    assert_eq!(a.clone() + &b, b.clone() + &a);
    assert_eq!(a.clone() * &b, b.clone() * &a);
    assert_eq!((a.clone() + &b) + &c, a.clone() + &(b.clone() + &c));
    assert_eq!((a.clone() * &b) * &c, a.clone() * &(b.clone() * &c));
    assert_eq!(a.clone() * &(b.clone() + &c), a.clone() * &b + &(a.clone() * &c));
    assert_eq!(a.clone() + &K::zero(), a);
    assert_eq!(a.clone() * &K::one(), a);
    assert!((a.clone() + &(-a.clone())).is_zero());
    assert_eq!(a.clone() - &b, a.clone() + &(-b.clone()));
    match a.inv() {
        Some(inv) => assert!((a.clone() * &inv).is_one()),
        None => assert!(a.is_zero()),
    }
}

/// Random bivariate polynomials with small integer coefficients.
fn poly() -> impl Strategy<Value = Poly<BigRational>> {
    prop::collection::vec(((0u32..5, 0u32..5), -4i64..=4), 1..=4).prop_map(|terms| {
        Poly::from_terms(
            terms
                .into_iter()
                .map(|(m, c)| (m, BigRational::from_integer(BigInt::from(c)))),
        )
    })
}

fn small_group() -> impl Strategy<Value = GroupSpec> {
    prop::sample::select(vec![
        GroupSpec::Cyclic(3),
        GroupSpec::Cyclic(4),
        GroupSpec::Cyclic(6),
        GroupSpec::BinaryDihedral(2),
        GroupSpec::BinaryDihedral(3),
        GroupSpec::BinaryDihedral(5),
        GroupSpec::BinaryTetrahedral,
        GroupSpec::BinaryOctahedral,
        GroupSpec::BinaryIcosahedral,
    ])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn rationals_form_a_field(a in rational(), b in rational(), c in rational()) {
        field_axioms(a, b, c);
    }

    #[test]
    fn cyclotomics_form_a_field(a in cyclotomic(), b in cyclotomic(), c in cyclotomic()) {
        field_axioms(a.clone(), b.clone(), c.clone());
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((a.clone() * &b).conj(), a.conj() * &b.conj());
    }

    #[test]
    fn split_form_reassembles(x in quat_vec(2), y in quat_vec(2)) {
        let (h, s) = split_form(&x, &y).unwrap();
        prop_assert_eq!(Quaternion::new(h.clone(), s.clone()), hermitian_form(&x, &y).unwrap());
        // the Hermitian part is the conjugate of the symplectic part of (x, y j)
        let (_, s2) = split_form(&x, &vec_scale_right(&y, &Quaternion::j())).unwrap();
        prop_assert_eq!(s2.conj(), h);
        // sesquilinearity in the second slot
        let q = Quaternion::new(Cyclotomic::zeta(3, 1), Cyclotomic::integer(2));
        prop_assert_eq!(
            hermitian_form(&x, &vec_scale_right(&y, &q)).unwrap(),
            hermitian_form(&x, &y).unwrap() * &q
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn characters_are_orthonormal(spec in small_group(), a in 0usize..16, b in 0usize..16) {
        let g = FiniteGroup::from_spec(spec).unwrap();
        let t = CharacterTable::for_group(&g).unwrap();
        let (a, b) = (a % t.len(), b % t.len());
        let ip = t.inner(t.get(a), t.get(b));
        prop_assert_eq!(ip, Cyclotomic::integer((a == b) as i64));
        // column orthogonality at a pair of classes
        let classes = g.classes();
        let (c, d) = (a % classes.len(), b % classes.len());
        let sum = t.characters().iter().fold(Cyclotomic::integer(0), |acc, ch| {
            acc + &(ch.values[c].clone() * &ch.values[d].conj())
        });
        let expected = if c == d { (g.order() / classes[c].len()) as i64 } else { 0 };
        prop_assert_eq!(sum, Cyclotomic::integer(expected));
    }

    #[test]
    fn s_polynomials_reduce_to_zero(gens in prop::collection::vec(poly(), 1..=3), extra in poly()) {
        let gens: Vec<_> = gens.into_iter().filter(|p| !p.is_zero()).collect();
        prop_assume!(!gens.is_empty());
        let gb = GroebnerBasis::new(&gens);
        for i in 0..gb.polys.len() {
            for j in 0..i {
                prop_assert!(gb.normal_form(&s_polynomial(&gb.polys[i], &gb.polys[j])).is_zero());
            }
        }
        prop_assert!(gb.is_reduced());
        for g in &gens {
            prop_assert!(gb.contains(g));
        }
        let combo = gens.iter().fold(Poly::zero(), |acc, g| acc.add(&g.mul(&extra)));
        prop_assert!(gb.contains(&combo));
    }

    #[test]
    fn hyperplane_dedup_ignores_order(
        which in 0usize..4,
        perm in Just((0..64).collect::<Vec<usize>>()).prop_shuffle(),
    ) {
        let (spec, sub, n) = [
            (GroupSpec::Cyclic(3), SubgroupSpec::Whole, 2),
            (GroupSpec::BinaryDihedral(2), SubgroupSpec::Whole, 2),
            (GroupSpec::BinaryDihedral(2), SubgroupSpec::Cyc2, 2),
            (GroupSpec::Cyclic(2), SubgroupSpec::Whole, 3),
        ][which].clone();
        let g = FiniteGroup::from_spec(spec).unwrap();
        let d = Subgroup::resolve(&g, &sub).unwrap();
        let w = WreathGroup::new(&g, &d, n).unwrap();
        let (_, refl, hyp) = numerology(&w, u128::MAX).unwrap();
        let order: Vec<usize> = perm.into_iter().filter(|&i| i < refl.len()).collect();
        let shuffled: Vec<_> = order.iter().map(|&i| refl[i].clone()).collect();
        let again = hyperplanes(&g, &shuffled);
        let keys = |h: &[quatfiber_core::wreath::Hyperplane]| {
            let mut k: Vec<_> = h.iter().map(|x| x.key().to_vec()).collect();
            k.sort();
            k
        };
        prop_assert_eq!(keys(&hyp), keys(&again));
        prop_assert_eq!(hyp.len() as u64, w.hyperplane_count_formula());
    }
}
