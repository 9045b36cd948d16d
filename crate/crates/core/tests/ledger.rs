use quatfiber_core::groups::GroupSpec;
use quatfiber_core::invariants::QPoly;
use quatfiber_core::ledger::{catalogue_ledgers, verify_identity_ledger, LedgerStatus};

#[test]
fn no_failed_entries_and_exact_witnesses() {
    for ledger in catalogue_ledgers() {
        assert_eq!(ledger.count(LedgerStatus::Failed), 0, "{}", ledger.spec);
        assert!(ledger.leading_match, "{}", ledger.spec);
        for e in &ledger.entries {
            if e.status != LedgerStatus::Corrected {
                continue;
            }
            let w = e.witness.as_ref().unwrap_or_else(|| panic!("{} has no witness", e.name));
            let value = QPoly::parse(e.recomputed.as_deref().unwrap_or(&e.stated)).unwrap();
            let sum = w.terms.iter().fold(QPoly::zero(), |acc, (g, q)| acc.add(&g.mul(q)));
            assert_eq!(sum, value, "{}", e.name);
        }
    }
}

#[test]
fn known_corrections() {
    let bo = verify_identity_ledger(GroupSpec::BinaryOctahedral);
    assert_eq!(bo.get("BO:g1").unwrap().status, LedgerStatus::Verified);
    assert_eq!(
        bo.get("BO:g5").unwrap().recomputed.as_deref(),
        Some("-4656x^9y^9 + 65184x^7y^13 + 4656x^3y^17 + 48xy^17")
    );
    assert_eq!(bo.get("BO:g5 (with g1)").unwrap().recomputed, None);

    let bi = verify_identity_ledger(GroupSpec::BinaryIcosahedral);
    for name in ["BI:g1", "BI:g2", "BI:h1"] {
        assert_eq!(bi.get(name).unwrap().status, LedgerStatus::Verified, "{name}");
    }
    let g3 = bi.get("BI:g3").unwrap();
    assert_eq!(g3.stated_in_ideal, Some(false));
    assert_eq!(g3.recomputed.as_deref(), Some("-64081875/4x^5y^21 - 1643125/28y^26"));
    assert_eq!(bi.get("BI:g4 (from the exact g3)").unwrap().recomputed, None);
    assert_eq!(
        bi.get("BI:h2 mod (g2, g3) is a multiple of y^30").unwrap().status,
        LedgerStatus::Verified
    );

    let bd = verify_identity_ledger(GroupSpec::BinaryDihedral(5));
    let g3 = bd.get("BD-odd:g3").unwrap();
    assert_eq!(g3.recomputed.as_deref(), Some("x^11y - 2x^6y^6 + xy^11"));
    assert_eq!(g3.stated_in_ideal, Some(true));
}

#[test]
fn dihedral_identities_for_larger_n() {
    for n in 2..=9 {
        let l = verify_identity_ledger(GroupSpec::BinaryDihedral(n));
        assert_eq!(l.count(LedgerStatus::Failed), 0);
        assert!(l.leading_match);
        let prefix = if n % 2 == 0 { "BD-even" } else { "BD-odd" };
        let y = l.get(&format!("{prefix}:y^{{2n+2}}")).unwrap();
        assert_eq!(y.status, LedgerStatus::Verified);
    }
}
