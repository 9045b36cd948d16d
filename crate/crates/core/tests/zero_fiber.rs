use num_rational::BigRational;
use num_traits::One;
use quatfiber_core::groups::{FiniteGroup, GroupSpec, Subgroup, SubgroupSpec};
use quatfiber_core::invariants::{
    checked_invariants, fundamental_invariants, invariant_dim, molien_coeffs, ZeroFiber,
};
use quatfiber_core::wreath::{numerology, WreathGroup, DEFAULT_ELEMENT_CAP};

fn group(spec: GroupSpec) -> FiniteGroup {
    FiniteGroup::from_spec(spec).unwrap()
}

#[test]
fn degree_is_twice_order_minus_one() {
    for spec in GroupSpec::catalogue() {
        let g = group(spec);
        let z = ZeroFiber::checked(&g, spec).unwrap();
        let order = spec.order();
        assert_eq!(z.degree(), 2 * order - 1, "{spec}");
        assert_eq!(z.hilbert().iter().sum::<usize>(), z.degree());
        let (lo, hi) = z.degree_bounds();
        assert!(lo <= z.degree() && z.degree() <= hi);
        assert!(z.basis.is_groebner() && z.basis.is_reduced());

        // g + 1 from the rank-one numerology
        let whole = Subgroup::resolve(&g, &SubgroupSpec::Whole).unwrap();
        let w = WreathGroup::new(&g, &whole, 1).unwrap();
        let (num, _, _) = numerology(&w, DEFAULT_ELEMENT_CAP).unwrap();
        assert_eq!(num.g + BigRational::one(), BigRational::from_integer(z.degree().into()), "{spec}");
    }
}

#[test]
fn degrees_of_fundamental_invariants() {
    let degs = |spec| fundamental_invariants(spec).map(|f| f.degree().unwrap());
    assert_eq!(degs(GroupSpec::Cyclic(5)), [5, 2, 5]);
    for n in 2..=5 {
        let mut d = degs(GroupSpec::BinaryDihedral(n)).to_vec();
        d.sort();
        let mut want = vec![4, 2 * n, 2 * n + 2];
        want.sort();
        assert_eq!(d, want);
    }
    assert_eq!(degs(GroupSpec::BinaryTetrahedral), [6, 8, 12]);
    assert_eq!(degs(GroupSpec::BinaryOctahedral), [12, 8, 18]);
    assert_eq!(degs(GroupSpec::BinaryIcosahedral), [12, 20, 30]);
}

#[test]
fn molien_matches_fixed_space() {
    for spec in GroupSpec::catalogue() {
        let g = group(spec);
        let top = 2 * fundamental_invariants(spec).iter().map(|f| f.degree().unwrap()).max().unwrap();
        let m = molien_coeffs(&g, top).unwrap();
        assert_eq!(m[0], 1);
        for d in 0..=top {
            assert_eq!(invariant_dim(&g, d) as u64, m[d as usize], "{spec} degree {d}");
        }
    }
}

#[test]
fn invariants_generate_the_ideal() {
    for spec in GroupSpec::catalogue() {
        let g = group(spec);
        let fs = checked_invariants(&g, spec).unwrap();
        let top = fs.iter().map(|f| f.degree().unwrap()).max().unwrap();
        let z = ZeroFiber::new(spec).unwrap();
        assert!(z.invariants_in_ideal(&g, top), "{spec}");
    }
}

#[test]
fn initial_ideals() {
    let cases = [
        (GroupSpec::BinaryTetrahedral, vec![(0, 12), (1, 9), (4, 5), (5, 1), (8, 0)]),
        (
            GroupSpec::BinaryOctahedral,
            vec![(0, 18), (1, 17), (2, 14), (4, 10), (6, 6), (8, 0)],
        ),
        (
            GroupSpec::BinaryIcosahedral,
            vec![(0, 30), (1, 26), (5, 21), (6, 16), (10, 11), (11, 1), (20, 0)],
        ),
    ];
    for (spec, expected) in cases {
        let z = ZeroFiber::new(spec).unwrap();
        for &m in &expected {
            assert!(z.initial_contains(m), "{spec} {m:?}");
        }
        assert_eq!(z.initial_ideal(), expected, "{spec}");
    }
    // the dihedral set {x^2y^2, x^{2n}, y^{2n+2}, xy^{2n+1}}
    for n in 2..=5u32 {
        let z = ZeroFiber::new(GroupSpec::BinaryDihedral(n)).unwrap();
        let mut want = vec![(0, 2 * n + 2), (1, 2 * n + 1), (2, 2), (2 * n, 0)];
        want.sort();
        assert_eq!(z.initial_ideal(), want, "n = {n}");
    }
}

#[test]
fn standard_count_ignores_generator_order() {
    for spec in [GroupSpec::BinaryDihedral(3), GroupSpec::BinaryTetrahedral, GroupSpec::BinaryOctahedral] {
        let fs = fundamental_invariants(spec);
        let a = quatfiber_core::groebner::GroebnerBasis::new(&fs);
        let b = quatfiber_core::groebner::GroebnerBasis::new(&[fs[2].clone(), fs[0].clone(), fs[1].clone()]);
        assert_eq!(a, b);
        assert_eq!(a.standard_monomials().unwrap().len(), 2 * spec.order() - 1);
    }
}
