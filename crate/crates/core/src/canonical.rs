//! Canonical representation of a finite set with respect to a thin family:
//! consecutive member blocks followed by a tail that is a proper initial
//! segment of a member.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family_core::{check_sperner, Family, FiniteSet, Violation, Window};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalRep {
    pub blocks: Vec<FiniteSet>,
    pub tail: FiniteSet,
    #[serde(rename = "type")]
    pub rep_type: usize,
}

impl CanonicalRep {
    pub fn new(blocks: Vec<FiniteSet>, tail: FiniteSet) -> Self {
        let rep_type = blocks.len();
        CanonicalRep { blocks, tail, rep_type }
    }

    /// Concatenation of the blocks and the tail.
    pub fn reassemble(&self) -> FiniteSet {
        let mut v = Vec::new();
        for b in self.blocks.iter().chain(std::iter::once(&self.tail)) {
            v.extend(b.iter());
        }
        FiniteSet::new(v).expect("blocks are consecutive")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Trichotomy {
    /// The set is a proper initial segment of some member.
    ProperPrefixOfMember,
    /// The set has a member as an initial segment (possibly itself).
    ExtendsMember(FiniteSet),
}

fn contract<F: Family + ?Sized>(fam: &F, set: &FiniteSet, detail: &str) -> Error {
    Error::FamilyContract { family: fam.label(), set: set.clone(), detail: detail.into() }
}

// The unique nonempty initial segment of `a` that is a member, if any.
fn member_prefix<F: Family + ?Sized>(fam: &F, a: &FiniteSet) -> Result<Option<FiniteSet>> {
    let mut found: Option<FiniteSet> = None;
    for k in 1..=a.len() {
        let p = a.prefix(k);
        if fam.contains(&p) {
            if found.is_some() {
                return Err(contract(fam, &p, "two initial segments are members (family is not thin)"));
            }
            found = Some(p);
        }
    }
    Ok(found)
}

fn is_proper_star<F: Family + ?Sized>(fam: &F, a: &FiniteSet) -> Result<bool> {
    match fam.is_prefix(a) {
        Some(b) => Ok(b && !fam.contains(a)),
        None => Err(contract(fam, a, "family has no initial-segment test")),
    }
}

/// Greedy decomposition of a nonempty `a`: the first member prefix becomes
/// the next block, and a remainder with no member prefix becomes the tail.
pub fn canonical_rep<F: Family + ?Sized>(fam: &F, a: &FiniteSet) -> Result<CanonicalRep> {
    if a.is_empty() {
        return Err(Error::Precondition("canonical representation of the empty set".into()));
    }
    if fam.contains(&FiniteSet::empty()) {
        return Err(contract(fam, &FiniteSet::empty(), "the empty set is a member"));
    }
    let mut blocks = Vec::new();
    let mut rest = a.clone();
    while !rest.is_empty() {
        match member_prefix(fam, &rest)? {
            Some(block) => {
                rest = FiniteSet::new(rest.as_slice()[block.len()..].to_vec())?;
                blocks.push(block);
            }
            None => {
                if !is_proper_star(fam, &rest)? {
                    return Err(contract(fam, &rest, "remainder is not an initial segment of a member"));
                }
                break;
            }
        }
    }
    Ok(CanonicalRep::new(blocks, rest))
}

/// Either `a` is a proper initial segment of a member, or exactly one initial
/// segment of `a` is a member.
pub fn trichotomy<F: Family + ?Sized>(fam: &F, a: &FiniteSet) -> Result<Trichotomy> {
    if a.is_empty() {
        return Err(Error::Precondition("trichotomy of the empty set".into()));
    }
    if let Some(p) = member_prefix(fam, a)? {
        return Ok(Trichotomy::ExtendsMember(p));
    }
    if is_proper_star(fam, a)? {
        Ok(Trichotomy::ProperPrefixOfMember)
    } else {
        Err(contract(fam, a, "neither extends a member nor is a proper initial segment of one"))
    }
}

/// The first (length-lexicographic) member with a proper member subset,
/// paired with its first such subset.
pub fn sperner_witness<F: Family + ?Sized>(fam: &F, w: &Window) -> Option<Violation> {
    check_sperner(fam, w).err()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::uniform_system::FamilySpec;

    fn s(x: &str) -> FiniteSet {
        x.parse().unwrap()
    }

    fn fam(x: &str) -> FamilySpec {
        x.parse().unwrap()
    }

    #[test]
    fn singletons_give_singleton_blocks() {
        let r = canonical_rep(&fam("A:1"), &s("{2,5,9}")).unwrap();
        assert_eq!(r.blocks, vec![s("{2}"), s("{5}"), s("{9}")]);
        assert_eq!(r.tail, FiniteSet::empty());
        assert_eq!(r.rep_type, 3);
    }

    #[test]
    fn omega_examples() {
        let r = canonical_rep(&fam("A:w"), &s("{2,3,4,5,6}")).unwrap();
        assert_eq!(r, CanonicalRep::new(vec![s("{2,3}")], s("{4,5,6}")));
        let r = canonical_rep(&fam("A:w"), &s("{1,3}")).unwrap();
        assert_eq!(r, CanonicalRep::new(vec![s("{1}")], s("{3}")));
        assert_eq!(r.reassemble(), s("{1,3}"));
        let j = serde_json::to_value(canonical_rep(&fam("A:w"), &s("{2,3,4,5,6}")).unwrap()).unwrap();
        assert_eq!(j, serde_json::json!({"blocks": [[2, 3]], "tail": [4, 5, 6], "type": 1}));
    }

    #[test]
    fn trichotomy_examples() {
        assert_eq!(trichotomy(&fam("A:w"), &s("{4,5}")).unwrap(), Trichotomy::ProperPrefixOfMember);
        assert_eq!(trichotomy(&fam("A:w"), &s("{2,3,9}")).unwrap(), Trichotomy::ExtendsMember(s("{2,3}")));
        assert_eq!(trichotomy(&fam("A:2"), &s("{5,8}")).unwrap(), Trichotomy::ExtendsMember(s("{5,8}")));
    }

    #[test]
    fn non_thin_family_is_reported() {
        let f = crate::family_core::Predicate::from_sets("bad", vec![s("{1}"), s("{1,2}")]);
        assert!(matches!(canonical_rep(&f, &s("{1,2}")), Err(Error::FamilyContract { .. })));
    }

    #[test]
    fn sperner_witnesses() {
        let w = Window::range(1, 12).unwrap();
        assert_eq!(
            sperner_witness(&fam("ex112"), &w),
            Some(Violation { smaller: s("{2,3,4,5}"), larger: s("{1,2,3,4,5,6}") })
        );
        assert_eq!(sperner_witness(&fam("A:3"), &Window::range(1, 10).unwrap()), None);
        assert_eq!(sperner_witness(&fam("exR"), &w), None);
    }
}
