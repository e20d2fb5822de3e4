//! Brute-force references used to test the fast paths: closed forms for a
//! few families, exhaustive block decompositions, plain subset generators.

use crate::canonical::CanonicalRep;
use crate::family_core::{FiniteSet, Nat};
use crate::ordinal::Ordinal;
use crate::uniform_system::{FamilyKind, FamilySpec};

/// All `k`-element subsets of `ground`, in lexicographic order.
pub fn k_subsets(ground: &[Nat], k: usize) -> Vec<FiniteSet> {
    fn go(ground: &[Nat], k: usize, from: usize, cur: &mut Vec<Nat>, out: &mut Vec<FiniteSet>) {
        if cur.len() == k {
            out.push(FiniteSet::new(cur.clone()).expect("increasing"));
            return;
        }
        for i in from..ground.len() {
            if ground.len() - i < k - cur.len() {
                break;
            }
            cur.push(ground[i]);
            go(ground, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(ground, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Every subset of `ground`, by bitmask (so keep `ground` short).
pub fn all_subsets(ground: &[Nat]) -> Vec<FiniteSet> {
    let g = FiniteSet::new(ground.to_vec()).expect("increasing ground");
    (0u64..1 << ground.len()).map(|m| g.subset_by_mask(m)).collect()
}

/// Membership and proper-initial-segment tests written out by hand.
pub struct ClosedForm {
    pub member: Box<dyn Fn(&[Nat]) -> bool + Send + Sync>,
    pub proper_prefix: Box<dyn Fn(&[Nat]) -> bool + Send + Sync>,
}

fn omega_member(s: &[Nat]) -> bool {
    !s.is_empty() && s.len() == s[0] as usize
}

fn omega_proper(s: &[Nat]) -> bool {
    s.is_empty() || s.len() < s[0] as usize
}

/// Closed forms for `A_k`, `A_w`, `A_{w+1}`, `A_{w*2}`, `B_0`, `B_1` and the
/// two size-by-minimum examples.
pub fn closed_form(spec: &FamilySpec) -> Option<ClosedForm> {
    let omega = Ordinal::omega();
    let cf = |m: Box<dyn Fn(&[Nat]) -> bool + Send + Sync>, p: Box<dyn Fn(&[Nat]) -> bool + Send + Sync>| {
        Some(ClosedForm { member: m, proper_prefix: p })
    };
    let xi = match &spec.kind {
        FamilyKind::A(x) => x.clone(),
        FamilyKind::B(a) => Ordinal::omega_power(a.clone()),
        FamilyKind::ExampleR => return cf(Box::new(omega_member), Box::new(omega_proper)),
        FamilyKind::ExampleL => {
            return cf(
                Box::new(|s| !s.is_empty() && s.len() == 2 * s[0] as usize + 1),
                Box::new(|s| s.is_empty() || s.len() < 2 * s[0] as usize + 1),
            )
        }
        _ => return None,
    };
    if let Some(k) = xi.as_nat() {
        let k = k as usize;
        return cf(Box::new(move |s| s.len() == k), Box::new(move |s| s.len() < k));
    }
    if xi == omega {
        return cf(Box::new(omega_member), Box::new(omega_proper));
    }
    if xi == omega.succ() {
        return cf(
            Box::new(|s| s.len() >= 2 && s.len() - 1 == s[1] as usize),
            Box::new(|s| s.len() <= 1 || s.len() - 1 < s[1] as usize),
        );
    }
    if xi == omega.mul_nat(2) {
        // {n}, then n-1 free elements, then a member of A_w
        return cf(
            Box::new(|s| !s.is_empty() && s.len() > s[0] as usize && omega_member(&s[s[0] as usize..])),
            Box::new(|s| s.is_empty() || s.len() <= s[0] as usize || omega_proper(&s[s[0] as usize..])),
        );
    }
    None
}

/// Every way to cut `a` into consecutive member blocks followed by a tail
/// that is empty or a proper initial segment of a member.
pub fn decompositions(a: &FiniteSet, cf: &ClosedForm) -> Vec<CanonicalRep> {
    fn go(rest: &[Nat], blocks: &mut Vec<FiniteSet>, cf: &ClosedForm, out: &mut Vec<CanonicalRep>) {
        if rest.is_empty() || (cf.proper_prefix)(rest) {
            let tail = FiniteSet::new(rest.to_vec()).expect("increasing");
            out.push(CanonicalRep::new(blocks.clone(), tail));
        }
        for j in 1..=rest.len() {
            if (cf.member)(&rest[..j]) {
                blocks.push(FiniteSet::new(rest[..j].to_vec()).expect("increasing"));
                go(&rest[j..], blocks, cf, out);
                blocks.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(a.as_slice(), &mut Vec::new(), cf, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_counts() {
        let g: Vec<Nat> = (1..=8).collect();
        assert_eq!(k_subsets(&g, 3).len(), 56);
        assert_eq!(all_subsets(&g).len(), 256);
    }

    #[test]
    fn decomposition_of_the_example() {
        let cf = closed_form(&"A:w".parse().unwrap()).unwrap();
        let d = decompositions(&"{2,3,4,5,6}".parse().unwrap(), &cf);
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].tail, "{4,5,6}".parse().unwrap());
    }
}
