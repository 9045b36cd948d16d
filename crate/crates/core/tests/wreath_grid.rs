use num_bigint::BigInt;
use num_rational::BigRational;
use quatfiber_core::groups::{FiniteGroup, GroupSpec, Subgroup, SubgroupSpec};
use quatfiber_core::wreath::{appendix_checks, hyperplanes, numerology, WreathGroup};

fn grid() -> Vec<(GroupSpec, SubgroupSpec)> {
    let mut specs: Vec<GroupSpec> = (2..=6).map(GroupSpec::Cyclic).collect();
    specs.extend([GroupSpec::BinaryDihedral(2), GroupSpec::BinaryDihedral(3), GroupSpec::BinaryTetrahedral]);
    let mut out = Vec::new();
    for s in specs {
        for d in [SubgroupSpec::Whole, SubgroupSpec::Commutator, SubgroupSpec::Cyc2] {
            if d == SubgroupSpec::Cyc2 && !matches!(s, GroupSpec::BinaryDihedral(_)) {
                continue;
            }
            out.push((s, d));
        }
    }
    out
}

#[test]
fn numerology_and_appendix_over_the_grid() {
    for (spec, sub) in grid() {
        let g = FiniteGroup::from_spec(spec).unwrap();
        let d = Subgroup::resolve(&g, &sub).unwrap();
        for n in 1..=3 {
            let w = WreathGroup::new(&g, &d, n).unwrap();
            let (rep, refl, hyp) = numerology(&w, u128::MAX).unwrap();
            assert!(rep.consistent(), "{spec} {sub} n={n}: {rep:?}");
            let app = appendix_checks(&w, &rep, &refl, &hyp, false).unwrap();
            assert!(app.all_ok(), "{spec} {sub} n={n}: {app:?}");
            assert_eq!(
                app.trace_sum,
                BigRational::from_integer(BigInt::from(2 * (rep.reflections + rep.hyperplanes)))
            );
        }
    }
}

#[test]
fn hyperplane_dedup_ignores_order() {
    let g = FiniteGroup::from_spec(GroupSpec::BinaryDihedral(2)).unwrap();
    let d = Subgroup::resolve(&g, &SubgroupSpec::Whole).unwrap();
    let w = WreathGroup::new(&g, &d, 2).unwrap();
    let (_, mut refl, hyp) = numerology(&w, u128::MAX).unwrap();
    refl.reverse();
    let again = hyperplanes(&g, &refl);
    let keys = |h: &[quatfiber_core::wreath::Hyperplane]| h.iter().map(|x| x.key().to_vec()).collect::<Vec<_>>();
    assert_eq!(keys(&hyp), keys(&again));
}
