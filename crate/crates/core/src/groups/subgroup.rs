//! Normal subgroups with abelian quotient.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use thiserror::Error;

use super::{FiniteGroup, GroupSpec};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SubgroupSpec {
    Whole,
    Commutator,
    /// The index-2 cyclic subgroup `⟨w1⟩` of a binary dihedral group.
    Cyc2,
    /// Generated by the listed element indices.
    Gens(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubgroupError {
    #[error("unknown subgroup spec `{0}` (expected whole, comm, cyc2 or gens:i,j,...)")]
    UnknownSpec(String),
    #[error("cyc2 is only defined for binary dihedral groups")]
    Cyc2Undefined,
    #[error("element index {0} out of range")]
    BadIndex(usize),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("quotient is not abelian")]
    NonAbelianQuotient,
}

impl fmt::Display for SubgroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubgroupSpec::Whole => f.write_str("whole"),
            SubgroupSpec::Commutator => f.write_str("comm"),
            SubgroupSpec::Cyc2 => f.write_str("cyc2"),
            SubgroupSpec::Gens(g) => {
                f.write_str("gens:")?;
                for (i, x) in g.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{x}")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for SubgroupSpec {
    type Err = SubgroupError;

    fn from_str(s: &str) -> Result<SubgroupSpec, SubgroupError> {
        let s = s.trim();
        match s {
            "whole" => Ok(SubgroupSpec::Whole),
            "comm" => Ok(SubgroupSpec::Commutator),
            "cyc2" => Ok(SubgroupSpec::Cyc2),
            _ => {
                let list = s
                    .strip_prefix("gens:")
                    .ok_or_else(|| SubgroupError::UnknownSpec(s.to_string()))?;
                let gens = list
                    .split(',')
                    .filter(|t| !t.trim().is_empty())
                    .map(|t| t.trim().parse::<usize>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|_| SubgroupError::UnknownSpec(s.to_string()))?;
                Ok(SubgroupSpec::Gens(gens))
            }
        }
    }
}

/// A resolved normal subgroup `Δ ⊴ Γ` with `Γ/Δ` abelian.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    pub spec: SubgroupSpec,
    /// Sorted element indices of `Δ` inside `Γ`.
    pub elements: Vec<usize>,
    member: Vec<bool>,
    pub index: usize,
}

impl Subgroup {
    pub fn resolve(g: &FiniteGroup, spec: &SubgroupSpec) -> Result<Subgroup, SubgroupError> {
        let elements = match spec {
            SubgroupSpec::Whole => (0..g.order()).collect(),
            SubgroupSpec::Commutator => commutator_subgroup(g),
            SubgroupSpec::Cyc2 => match g.spec() {
                Some(GroupSpec::BinaryDihedral(_)) => g.generated_by(&g.generator_indices()[..1]),
                _ => return Err(SubgroupError::Cyc2Undefined),
            },
            SubgroupSpec::Gens(gens) => {
                if let Some(&bad) = gens.iter().find(|&&x| x >= g.order()) {
                    return Err(SubgroupError::BadIndex(bad));
                }
                g.generated_by(gens)
            }
        };
        let mut member = vec![false; g.order()];
        for &d in &elements {
            member[d] = true;
        }
        for a in 0..g.order() {
            for &d in &elements {
                if !member[g.mul(g.mul(a, d), g.inv(a))] {
                    return Err(SubgroupError::NotNormal);
                }
            }
        }
        for a in 0..g.order() {
            for b in 0..g.order() {
                if !member[commutator(g, a, b)] {
                    return Err(SubgroupError::NonAbelianQuotient);
                }
            }
        }
        Ok(Subgroup {
            spec: spec.clone(),
            index: g.order() / elements.len(),
            elements,
            member,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.member[a]
    }

    pub fn is_whole(&self) -> bool {
        self.index == 1
    }
}

fn commutator(g: &FiniteGroup, a: usize, b: usize) -> usize {
    g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)))
}

/// The subgroup generated by all commutators `a b a⁻¹ b⁻¹`.
pub fn commutator_subgroup(g: &FiniteGroup) -> Vec<usize> {
    let mut gens: Vec<usize> = Vec::new();
    for a in 0..g.order() {
        for b in 0..g.order() {
            gens.push(commutator(g, a, b));
        }
    }
    gens.sort_unstable();
    gens.dedup();
    g.generated_by(&gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commutator_indices() {
        let bt = FiniteGroup::from_spec(GroupSpec::BinaryTetrahedral).unwrap();
        let c = Subgroup::resolve(&bt, &SubgroupSpec::Commutator).unwrap();
        assert_eq!((c.order(), c.index), (8, 3));
        for n in 2..=5 {
            let bd = FiniteGroup::from_spec(GroupSpec::BinaryDihedral(n)).unwrap();
            let c = Subgroup::resolve(&bd, &SubgroupSpec::Commutator).unwrap();
            assert_eq!((c.order(), c.index), (n as usize, 4));
            let h = Subgroup::resolve(&bd, &SubgroupSpec::Cyc2).unwrap();
            assert_eq!(h.index, 2);
        }
        let bi = FiniteGroup::from_spec(GroupSpec::BinaryIcosahedral).unwrap();
        assert_eq!(Subgroup::resolve(&bi, &SubgroupSpec::Commutator).unwrap().index, 1);
        let w = Subgroup::resolve(&bi, &SubgroupSpec::Whole).unwrap();
        assert!(w.is_whole());
    }

    #[test]
    fn rejects_bad_subgroups() {
        let bt = FiniteGroup::from_spec(GroupSpec::BinaryTetrahedral).unwrap();
        assert_eq!(
            Subgroup::resolve(&bt, &SubgroupSpec::Cyc2),
            Err(SubgroupError::Cyc2Undefined)
        );
        // an order-4 element alone generates a non-normal subgroup of BT
        let a = (0..24).find(|&a| bt.element_order(a) == 4).unwrap();
        assert_eq!(
            Subgroup::resolve(&bt, &SubgroupSpec::Gens(vec![a])),
            Err(SubgroupError::NotNormal)
        );
        let bo = FiniteGroup::from_spec(GroupSpec::BinaryOctahedral).unwrap();
        // Q8 is normal in BO but BO/Q8 ≅ S3 is not abelian
        let bt_in_bo = Subgroup::resolve(&bo, &SubgroupSpec::Commutator).unwrap();
        assert_eq!(bt_in_bo.order(), 24);
        let q8_gens: Vec<usize> = (0..48).filter(|&a| bo.element_order(a) == 4).collect();
        let q8: Vec<usize> = q8_gens
            .into_iter()
            .filter(|&a| bt_in_bo.contains(a))
            .collect();
        assert_eq!(
            Subgroup::resolve(&bo, &SubgroupSpec::Gens(q8)),
            Err(SubgroupError::NonAbelianQuotient)
        );
    }

    #[test]
    fn parse() {
        assert_eq!("gens:1,2".parse(), Ok(SubgroupSpec::Gens(vec![1, 2])));
        assert_eq!("comm".parse(), Ok(SubgroupSpec::Commutator));
        assert!("half".parse::<SubgroupSpec>().is_err());
        assert_eq!(SubgroupSpec::Gens(vec![3, 4]).to_string(), "gens:3,4");
    }
}
