//! An audit of the explicit polynomial identities used to exhibit Groebner
//! bases of the invariant ideals. Each entry re-expands a stated
//! combination exactly and compares it with the stated right-hand side.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::cyclotomic::Cyclotomic;
use crate::groebner::{divide, normal_form};
use crate::groups::{FiniteGroup, GroupSpec};
use crate::invariants::{fundamental_invariants, semi_invariants, CPoly, QPoly, ZeroFiber};
use crate::poly::Monomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum LedgerStatus {
    /// Exact equality, with the combination as stated.
    Verified,
    /// The combination lies in `I` but does not evaluate to the stated
    /// right-hand side, or had to be amended to make sense.
    Corrected,
    /// The combination is not in `I`.
    Failed,
}

impl fmt::Display for LedgerStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LedgerStatus::Verified => "verified",
            LedgerStatus::Corrected => "corrected",
            LedgerStatus::Failed => "failed",
        })
    }
}

/// `value = Σ quotient_i · basis_i` over the reduced Groebner basis, for the
/// recomputed value of a corrected entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub terms: Vec<(QPoly, QPoly)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LedgerEntry {
    pub name: String,
    pub status: LedgerStatus,
    pub stated: String,
    /// What the combination actually evaluates to, when that differs from
    /// the stated right-hand side.
    pub recomputed: Option<String>,
    pub note: Option<String>,
    /// Whether the stated right-hand side itself lies in `I`; `None` for
    /// expansions that are not ideal-membership claims.
    pub stated_in_ideal: Option<bool>,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone)]
pub struct Ledger {
    pub spec: GroupSpec,
    pub entries: Vec<LedgerEntry>,
    /// Leading monomials of the stated set `S`, ascending.
    pub stated_leading: Vec<Monomial>,
    /// Whether the leading monomials of `S` generate the computed initial
    /// ideal.
    pub leading_match: bool,
}

impl Ledger {
    pub fn count(&self, status: LedgerStatus) -> usize {
        self.entries.iter().filter(|e| e.status == status).count()
    }

    pub fn get(&self, name: &str) -> Option<&LedgerEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}

fn q(s: &str) -> QPoly {
    QPoly::parse(s).expect("valid polynomial literal")
}

fn r(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn mono(a: u32, b: u32) -> QPoly {
    QPoly::monomial((a, b))
}

struct Audit {
    zf: ZeroFiber,
    prefix: &'static str,
    entries: Vec<LedgerEntry>,
}

impl Audit {
    fn new(spec: GroupSpec, prefix: &'static str) -> Audit {
        Audit {
            zf: ZeroFiber::new(spec).expect("finite zero fiber"),
            prefix,
            entries: Vec::new(),
        }
    }

    fn witness(&self, target: &QPoly) -> Option<Witness> {
        let (qs, rem) = divide(target, &self.zf.basis.polys);
        rem.is_zero().then(|| Witness {
            terms: self
                .zf
                .basis
                .polys
                .iter()
                .cloned()
                .zip(qs)
                .filter(|(_, q)| !q.is_zero())
                .collect(),
        })
    }

    /// Records `value = stated`, where `value` is the combination evaluated
    /// exactly. A `note` marks a combination that had to be amended.
    fn check(&mut self, name: &str, value: &QPoly, stated: &QPoly, note: Option<&str>) {
        let status = if value == stated && note.is_none() {
            LedgerStatus::Verified
        } else if self.zf.basis.contains(value) {
            LedgerStatus::Corrected
        } else {
            LedgerStatus::Failed
        };
        let witness = (status == LedgerStatus::Corrected).then(|| self.witness(value)).flatten();
        let stated_in_ideal = Some(self.zf.basis.contains(stated));
        self.entries.push(LedgerEntry {
            name: alloc::format!("{}:{name}", self.prefix),
            status,
            stated: stated.to_string(),
            recomputed: (value != stated).then(|| value.to_string()),
            note: note.map(String::from),
            stated_in_ideal,
            witness,
        });
    }

    /// An expansion that need not lie in `I` (e.g. of a semi-invariant).
    fn expansion(&mut self, name: &str, value: &CPoly, stated: &CPoly) {
        self.entries.push(LedgerEntry {
            name: alloc::format!("{}:{name}", self.prefix),
            status: if value == stated {
                LedgerStatus::Verified
            } else {
                LedgerStatus::Failed
            },
            stated: stated.to_string(),
            recomputed: (value != stated).then(|| value.to_string()),
            note: None,
            stated_in_ideal: None,
            witness: None,
        });
    }

    fn property(&mut self, name: &str, holds: bool, p: &CPoly) {
        self.entries.push(LedgerEntry {
            name: alloc::format!("{}:{name}", self.prefix),
            status: if holds {
                LedgerStatus::Verified
            } else {
                LedgerStatus::Failed
            },
            stated: p.to_string(),
            recomputed: None,
            note: None,
            stated_in_ideal: None,
            witness: None,
        });
    }

    /// `w · p = c · p` for a stated scalar `c`.
    fn semi_invariance(&mut self, name: &str, w: &crate::linalg::Matrix<Cyclotomic>, p: &CPoly, c: &Cyclotomic) {
        let image = p.act(w);
        self.expansion(name, &image, &p.scale(c));
    }

    fn finish(self, spec: GroupSpec, stated: &[QPoly]) -> Ledger {
        let mut stated_leading: Vec<Monomial> = stated.iter().map(|p| p.leading_monomial().unwrap()).collect();
        stated_leading.sort();
        let leading_match = crate::groebner::standard_monomials(&stated_leading)
            .is_some_and(|s| s.len() == self.zf.degree())
            && stated.iter().all(|p| self.zf.basis.contains(p));
        Ledger {
            spec,
            entries: self.entries,
            stated_leading,
            leading_match,
        }
    }
}

/// Re-expands every identity for `spec`. Dihedral identities are checked at
/// the group's own `n`.
pub fn verify_identity_ledger(spec: GroupSpec) -> Ledger {
    match spec {
        GroupSpec::Cyclic(l) => cyclic(l),
        GroupSpec::BinaryDihedral(n) if n % 2 == 0 => dihedral_even(n),
        GroupSpec::BinaryDihedral(n) => dihedral_odd(n),
        GroupSpec::BinaryTetrahedral => tetrahedral(),
        GroupSpec::BinaryOctahedral => octahedral(),
        GroupSpec::BinaryIcosahedral => icosahedral(),
    }
}

fn cyclic(l: u32) -> Ledger {
    let spec = GroupSpec::Cyclic(l);
    let mut a = Audit::new(spec, "cyclic");
    let w = &spec.generators()[0];
    let z = Cyclotomic::zeta(l.max(1), 1);
    a.semi_invariance("w.x", w, &CPoly::x(), &z.conj());
    a.semi_invariance("w.y", w, &CPoly::y(), &z);
    let fs = fundamental_invariants(spec);
    a.finish(spec, &fs)
}

/// The dihedral semi-invariance table: `w_1` scales each `φ` by `−1, −1, 1`
/// and `w_2` by `(−i)^n, −(−i)^n, −1`.
fn dihedral_semi_invariance(a: &mut Audit, n: u32) {
    let spec = GroupSpec::BinaryDihedral(n);
    let gens = spec.generators();
    let phis = semi_invariants(spec).unwrap();
    let minus_i_n = Cyclotomic::zeta(4, -(n as i64));
    let one = Cyclotomic::integer(1);
    let table = [
        (-one.clone(), minus_i_n.clone()),
        (-one.clone(), -minus_i_n),
        (one.clone(), -one),
    ];
    for (k, (phi, (c1, c2))) in phis.iter().zip(table).enumerate() {
        a.semi_invariance(&alloc::format!("w1.phi{}", k + 1), &gens[0], phi, &c1);
        a.semi_invariance(&alloc::format!("w2.phi{}", k + 1), &gens[1], phi, &c2);
    }
}

fn dihedral_even(n: u32) -> Ledger {
    let spec = GroupSpec::BinaryDihedral(n);
    let mut a = Audit::new(spec, "BD-even");
    dihedral_semi_invariance(&mut a, n);
    let [f1, f2, f3] = fundamental_invariants(spec);
    let c = |p: &QPoly| p.to_cyclotomic();
    a.expansion("f1", &c(&f1), &c(&q("x^2y^2")));
    let f2_stated = mono(2 * n, 0).sub(&mono(n, n).scale(&r(2, 1))).add(&mono(0, 2 * n));
    a.expansion("f2", &c(&f2), &c(&f2_stated));
    let f3_stated = mono(2 * n + 1, 1).sub(&mono(1, 2 * n + 1));
    a.expansion("f3", &c(&f3), &c(&f3_stated));

    let y_top = mono(0, 2).mul(&f2).sub(&mono(2 * n - 2, 0).sub(&mono(n - 2, n).scale(&r(2, 1))).mul(&f1));
    a.check("y^{2n+2}", &y_top, &mono(0, 2 * n + 2), None);
    let xy_top = mono(1, 1)
        .mul(&f2)
        .sub(&f3)
        .add(&mono(n - 1, n - 1).scale(&r(2, 1)).mul(&f1))
        .scale(&r(1, 2));
    a.check("xy^{2n+1}", &xy_top, &mono(1, 2 * n + 1), None);
    let stated = [f1, f2, mono(0, 2 * n + 2), mono(1, 2 * n + 1)];
    a.finish(spec, &stated)
}

fn dihedral_odd(n: u32) -> Ledger {
    let spec = GroupSpec::BinaryDihedral(n);
    let mut a = Audit::new(spec, "BD-odd");
    dihedral_semi_invariance(&mut a, n);
    let [g1, g2, g3] = fundamental_invariants(spec);
    let c = |p: &QPoly| p.to_cyclotomic();
    a.expansion("g1", &c(&g1), &c(&q("x^2y^2")));
    a.expansion("g2", &c(&g2), &c(&mono(2 * n, 0).sub(&mono(0, 2 * n))));
    // as stated, the middle term of g3 reads x^n y^2
    let g3_stated = mono(2 * n + 1, 1)
        .sub(&mono(n + 1, 3).scale(&r(2, 1)))
        .add(&mono(1, 2 * n + 1));
    a.check("g3", &g3, &g3_stated, None);

    let y_top = mono(2 * n - 2, 0).mul(&g1).sub(&mono(0, 2).mul(&g2));
    a.check("y^{2n+2}", &y_top, &mono(0, 2 * n + 2), None);
    let xy_top = g3
        .sub(&mono(n - 1, n - 1).scale(&r(2, 1)).mul(&g1))
        .sub(&mono(1, 1).mul(&g2))
        .scale(&r(1, 2));
    a.check("xy^{2n+1}", &xy_top, &mono(1, 2 * n + 1), None);
    let amended = g3
        .add(&mono(n - 1, n - 1).scale(&r(2, 1)).mul(&g1))
        .sub(&mono(1, 1).mul(&g2))
        .scale(&r(1, 2));
    a.check(
        "xy^{2n+1} (sign of g1 term flipped)",
        &amended,
        &mono(1, 2 * n + 1),
        Some("the 2x^{n-1}y^{n-1}g1 term enters with a plus sign"),
    );
    let stated = [g1, g2, mono(0, 2 * n + 2), mono(1, 2 * n + 1)];
    a.finish(spec, &stated)
}

fn tetrahedral() -> Ledger {
    let spec = GroupSpec::BinaryTetrahedral;
    let mut a = Audit::new(spec, "BT");
    let [p1, p2, p3] = semi_invariants(spec).unwrap();
    let g = FiniteGroup::from_spec(spec).expect("catalogue group");
    for (k, p) in [&p1, &p2, &p3].into_iter().enumerate() {
        a.property(
            &alloc::format!("phi{} semi-invariant", k + 1),
            crate::invariants::is_semi_invariant(&g, p),
            p,
        );
    }
    let [f1, f2, f3] = fundamental_invariants(spec);
    a.expansion("f2 = phi2 phi3", &p2.mul(&p3), &f2.to_cyclotomic());
    let half = Cyclotomic::rational(r(1, 2));
    a.expansion("f3 = (phi2^3 + phi3^3)/2", &p2.pow(3).add(&p3.pow(3)).scale(&half), &f3.to_cyclotomic());

    let g1 = mono(0, 1).mul(&f2).sub(&mono(3, 0).mul(&f1));
    a.check("g1", &g1, &q("15x^4y^5 + y^9"), None);
    let g2 = mono(1, 0).mul(&g1).sub(&mono(0, 4).scale(&r(15, 1)).mul(&f1));
    a.check("g2", &g2, &q("xy^9"), None);
    let h = f3.add(&q("47y^4 - x^4").mul(&f2));
    a.check("h", &h, &q("624x^4y^8 + 48y^12"), None);
    let g3 = h.scale(&r(5, 1)).sub(&mono(0, 3).scale(&r(208, 1)).mul(&g1));
    a.check("g3", &g3, &q("32y^12"), None);
    let stated = [f1, f2, g1, g2, g3];
    a.finish(spec, &stated)
}

fn octahedral() -> Ledger {
    let spec = GroupSpec::BinaryOctahedral;
    let mut a = Audit::new(spec, "BO");
    let [p1, p2, p3] = semi_invariants(spec).unwrap();
    let g = FiniteGroup::from_spec(spec).expect("catalogue group");
    for (k, p) in [&p1, &p2, &p3].into_iter().enumerate() {
        a.property(
            &alloc::format!("phi{} semi-invariant", k + 1),
            crate::invariants::is_semi_invariant(&g, p),
            p,
        );
    }
    let [f1, f2, f3] = fundamental_invariants(spec);
    a.expansion("f1 = phi1^2", &p1.pow(2), &f1.to_cyclotomic());
    a.expansion("f3 = phi1 phi3", &p1.mul(&p3), &f3.to_cyclotomic());

    let g1 = q("x^2y^2").mul(&f2).sub(&f1).scale(&r(1, 16));
    a.check("g1", &g1, &q("x^6y^6"), None);
    let g2 = mono(0, 6).mul(&f2).sub(&mono(2, 0).mul(&g1));
    a.check("g2", &g2, &q("14x^4y^10 + y^14"), Some("the subtracted term is x^2 g1"));
    let g3 = q("x^2y^6").mul(&f2).sub(&q("x^4 + 14y^4").mul(&g1));
    a.check("g3", &g3, &q("x^2y^14"), Some("the subtracted multiple is of g1"));
    let step = mono(0, 10).mul(&f2);
    let step_mod = normal_form(&step, core::slice::from_ref(&g1));
    a.check(
        "y^10 f2 mod g1",
        &step_mod,
        &q("14x^4y^14 + y^18"),
        Some("the middle term of f2 is 14x^4y^4, and the reduction is modulo g1 = x^6y^6"),
    );
    let g4 = normal_form(&step_mod.sub(&q("14x^2y^4").mul(&f1)), core::slice::from_ref(&g1));
    a.check("g4", &g4, &q("y^18"), Some("reduction modulo g1 = x^6y^6"));
    let g5 = q("7x^9y - 336x^5y^5 + 41xy^9")
        .mul(&f2)
        .add(&q("4656x^3y^3").mul(&g2))
        .sub(&f3.scale(&r(7, 1)));
    a.check("g5", &g5, &q("48xy^17"), None);
    let g5_amended = q("7x^9y - 336x^5y^5 + 41xy^9")
        .mul(&f2)
        .add(&q("4656x^3y^3").mul(&g1))
        .sub(&f3.scale(&r(7, 1)));
    a.check("g5 (with g1)", &g5_amended, &q("48xy^17"), Some("the x^3y^3 multiple is of g1"));
    let stated = [f2, g1, g2, g3, g4, g5_amended];
    a.finish(spec, &stated)
}

fn icosahedral() -> Ledger {
    let spec = GroupSpec::BinaryIcosahedral;
    let mut a = Audit::new(spec, "BI");
    let [f1, f2, f3] = fundamental_invariants(spec);
    let n = |v: i64| r(v, 1);

    let g1 = q("x^9 - 239x^4y^5").mul(&f1).add(&mono(0, 1).mul(&f2));
    a.check("g1", &g1, &q("-3124x^10y^11 + 11x^5y^16 - y^21"), None);
    let g2 = q("x^10 - 239x^5y^5 + 3124y^10").mul(&f1).add(&mono(1, 1).mul(&f2));
    a.check("g2", &g2, &q("34375x^6y^16 - 3125xy^21"), None);
    let sq = n(3124 * 3124);
    let g3 = mono(0, 6)
        .mul(&f2)
        .add(&mono(9, 5).mul(&f1))
        .scale(&sq)
        .add(&mono(5, 0).scale(&n(3124 * 239)).sub(&mono(0, 5).scale(&n(1543751))).mul(&g1))
        .scale(&r(1, 140));
    a.check("g3", &g3, &q("-16020500x^5y^21 - 58683y^26"), None);
    let g4 = mono(0, 5)
        .scale(&n(16020500))
        .mul(&g2)
        .add(&mono(1, 0).scale(&n(34375)).mul(&g3))
        .scale(&BigRational::new(BigInt::from(-1), BigInt::from(52_081_300_000i64)));
    a.check("g4", &g4, &q("xy^26"), None);
    // cancel x^6y^21 against the exact g3
    let lead3 = g3.leading().unwrap().1.clone();
    let g4_exact = mono(0, 5)
        .scale(&lead3)
        .mul(&g2)
        .sub(&mono(1, 0).scale(&n(34375)).mul(&g3))
        .monic();
    a.check(
        "g4 (from the exact g3)",
        &g4_exact,
        &q("xy^26"),
        Some("the multiples of y^5 g2 and x g3 are rescaled to cancel x^6y^21"),
    );
    let h1 = f3.add(&mono(10, 0).mul(&f2)).sub(&q("750x^14y^4 - 18749x^9y^9").mul(&f1));
    a.check("h1", &h1, &q("206761x^15y^15 - 28755x^10y^20 - 522x^5y^25 + y^30"), None);
    let h2 = h1.scale(&n(3124)).add(&q("206761x^5y^4").mul(&g1));
    a.check("h2", &h2, &q("-87556200x^10y^20 - 1837490x^5y^25 + 3124y^30"), None);
    let g5 = normal_form(&h2, &[g2.clone(), g3.clone()]);
    let is_y30_multiple = g5.len() == 1 && g5.leading_monomial() == Some((0, 30));
    let g5_monic = if is_y30_multiple { g5.monic() } else { g5.clone() };
    a.check(
        "h2 mod (g2, g3) is a multiple of y^30",
        &g5_monic,
        &mono(0, 30),
        None,
    );
    let stated = [f1, f2, g1, g2, g3, g4_exact, g5_monic];
    a.finish(spec, &stated)
}

/// Every ledger for the catalogue groups.
pub fn catalogue_ledgers() -> Vec<Ledger> {
    GroupSpec::catalogue().into_iter().map(verify_identity_ledger).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn tetrahedral_statuses() {
        let l = tetrahedral();
        assert_eq!(l.get("BT:g1").unwrap().status, LedgerStatus::Verified);
        let g2 = l.get("BT:g2").unwrap();
        assert_eq!(g2.status, LedgerStatus::Corrected);
        assert_eq!(g2.recomputed.as_deref(), Some("16xy^9"));
        assert_eq!(l.get("BT:g3").unwrap().status, LedgerStatus::Verified);
        assert!(l.leading_match);
        assert_eq!(l.stated_leading, vec![(0, 12), (1, 9), (4, 5), (5, 1), (8, 0)]);
        assert_eq!(l.count(LedgerStatus::Failed), 0);
    }

    #[test]
    fn dihedral_even_verified() {
        for n in [2, 4] {
            let l = verify_identity_ledger(GroupSpec::BinaryDihedral(n));
            assert!(l.entries.iter().all(|e| e.status == LedgerStatus::Verified), "{:?}", l.entries);
            assert!(l.leading_match);
        }
    }

    #[test]
    fn dihedral_odd_corrections() {
        let l = verify_identity_ledger(GroupSpec::BinaryDihedral(3));
        assert_eq!(l.get("BD-odd:g3").unwrap().status, LedgerStatus::Corrected);
        assert_eq!(l.get("BD-odd:xy^{2n+1}").unwrap().status, LedgerStatus::Corrected);
        assert_eq!(l.get("BD-odd:y^{2n+2}").unwrap().status, LedgerStatus::Verified);
        assert_eq!(l.count(LedgerStatus::Failed), 0);
    }

    #[test]
    fn witnesses_reconstruct_the_target() {
        let l = tetrahedral();
        let e = l.get("BT:g2").unwrap();
        let w = e.witness.as_ref().unwrap();
        let sum = w.terms.iter().fold(QPoly::zero(), |acc, (g, q)| acc.add(&g.mul(q)));
        assert_eq!(sum, q("16xy^9"));
        assert_eq!(e.stated_in_ideal, Some(true));
    }
}
