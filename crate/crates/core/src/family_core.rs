//! Finite sets of positive naturals, windows, and the family interface.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Nat = u32;

/// A strictly increasing finite sequence of positive naturals.
///
/// `Ord` is length-lexicographic, which is the order every enumeration uses.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Nat>", into = "Vec<Nat>")]
pub struct FiniteSet(Vec<Nat>);

impl FiniteSet {
    pub fn empty() -> Self {
        FiniteSet(Vec::new())
    }

    pub fn singleton(n: Nat) -> Self {
        assert!(n >= 1, "naturals are positive");
        FiniteSet(vec![n])
    }

    /// Checks that `elems` is strictly increasing and positive.
    pub fn new(elems: Vec<Nat>) -> Result<Self> {
        if elems.first().is_some_and(|&x| x == 0) || elems.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NotStrictlyIncreasing(elems));
        }
        Ok(FiniteSet(elems))
    }

    /// Sorts and deduplicates; still rejects zero.
    pub fn from_unsorted(mut elems: Vec<Nat>) -> Result<Self> {
        elems.sort_unstable();
        elems.dedup();
        FiniteSet::new(elems)
    }

    // Caller guarantees the invariant.
    pub(crate) fn from_sorted_unchecked(elems: Vec<Nat>) -> Self {
        debug_assert!(FiniteSet::new(elems.clone()).is_ok());
        FiniteSet(elems)
    }

    pub fn as_slice(&self) -> &[Nat] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Nat> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn min_elem(&self) -> Option<Nat> {
        self.0.first().copied()
    }

    pub fn max_elem(&self) -> Option<Nat> {
        self.0.last().copied()
    }

    pub fn contains(&self, n: Nat) -> bool {
        self.0.binary_search(&n).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Nat> + '_ {
        self.0.iter().copied()
    }

    /// `self` is the first `|self|` elements of `t` (equality allowed).
    pub fn is_initial_segment_of(&self, t: &FiniteSet) -> bool {
        t.0.starts_with(&self.0)
    }

    pub fn is_proper_initial_segment_of(&self, t: &FiniteSet) -> bool {
        self.len() < t.len() && self.is_initial_segment_of(t)
    }

    pub fn is_subset_of(&self, t: &FiniteSet) -> bool {
        let mut it = t.0.iter();
        self.0.iter().all(|x| it.any(|y| y == x))
    }

    pub fn is_proper_subset_of(&self, t: &FiniteSet) -> bool {
        self.len() < t.len() && self.is_subset_of(t)
    }

    /// `self < t` blockwise: every element of `self` is below every element of `t`.
    pub fn precedes(&self, t: &FiniteSet) -> bool {
        match (self.max_elem(), t.min_elem()) {
            (Some(a), Some(b)) => a < b,
            _ => true,
        }
    }

    pub fn prefix(&self, k: usize) -> FiniteSet {
        FiniteSet(self.0[..k.min(self.len())].to_vec())
    }

    /// All initial segments, shortest first, including `∅` and `self`.
    pub fn prefixes(&self) -> impl Iterator<Item = FiniteSet> + '_ {
        (0..=self.len()).map(move |k| self.prefix(k))
    }

    /// `self` without its minimum.
    pub fn tail(&self) -> FiniteSet {
        FiniteSet(self.0.get(1..).unwrap_or(&[]).to_vec())
    }

    /// Appends `n`, which must exceed the current maximum.
    pub fn pushed(&self, n: Nat) -> FiniteSet {
        assert!(n >= 1 && self.max_elem().map_or(true, |m| m < n), "{n} does not extend {self}");
        let mut v = self.0.clone();
        v.push(n);
        FiniteSet(v)
    }

    /// `{m} ∪ self`, with `m` below the current minimum.
    pub fn prepended(&self, m: Nat) -> FiniteSet {
        assert!(m >= 1 && self.min_elem().map_or(true, |x| m < x), "{m} does not precede {self}");
        let mut v = Vec::with_capacity(self.len() + 1);
        v.push(m);
        v.extend_from_slice(&self.0);
        FiniteSet(v)
    }

    pub fn inserted(&self, n: Nat) -> FiniteSet {
        assert!(n >= 1);
        let mut v = self.0.clone();
        if let Err(i) = v.binary_search(&n) {
            v.insert(i, n);
        }
        FiniteSet(v)
    }

    pub fn removed(&self, n: Nat) -> FiniteSet {
        FiniteSet(self.0.iter().copied().filter(|&x| x != n).collect())
    }

    pub fn union(&self, other: &FiniteSet) -> FiniteSet {
        let mut v: Vec<Nat> = self.0.iter().chain(&other.0).copied().collect();
        v.sort_unstable();
        v.dedup();
        FiniteSet(v)
    }

    /// Elements strictly greater than `m`.
    pub fn above(&self, m: Nat) -> FiniteSet {
        FiniteSet(self.0.iter().copied().filter(|&x| x > m).collect())
    }

    /// Subsets of `self` selected by the bits of `mask`.
    pub fn subset_by_mask(&self, mask: u64) -> FiniteSet {
        FiniteSet(
            self.0
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &x)| x)
                .collect(),
        )
    }
}

impl Ord for FiniteSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for FiniteSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<Nat>> for FiniteSet {
    type Error = Error;
    fn try_from(v: Vec<Nat>) -> Result<Self> {
        FiniteSet::new(v)
    }
}

impl From<FiniteSet> for Vec<Nat> {
    fn from(s: FiniteSet) -> Self {
        s.0
    }
}

impl<const N: usize> From<[Nat; N]> for FiniteSet {
    /// Panics unless the array is strictly increasing and positive.
    fn from(a: [Nat; N]) -> Self {
        FiniteSet::new(a.to_vec()).expect("strictly increasing positive naturals")
    }
}

impl fmt::Display for FiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

fn parse_list(input: &str, inner: &str) -> std::result::Result<Vec<Nat>, String> {
    inner
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<Nat>().map_err(|_| format!("`{t}` is not a natural")))
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|e| format!("{e} in `{input}`"))
}

impl FromStr for FiniteSet {
    type Err = Error;

    /// Accepts `{2,3,4}`, `2,3,4`, `[2,3,4]`, `{}`. Input is sorted and deduplicated.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .or_else(|| t.strip_prefix('[').and_then(|r| r.strip_suffix(']')))
            .unwrap_or(t);
        let elems = parse_list(s, inner)
            .map_err(|reason| Error::SetSyntax { input: s.to_string(), reason })?;
        FiniteSet::from_unsorted(elems).map_err(|_| Error::SetSyntax {
            input: s.to_string(),
            reason: "elements must be positive".into(),
        })
    }
}

/// A finite truncation of the ground set: naturals of `ground` within `[lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Window {
    lo: Nat,
    hi: Nat,
    ground: Vec<Nat>,
}

impl Window {
    pub fn range(lo: Nat, hi: Nat) -> Result<Self> {
        if lo == 0 || lo > hi {
            return Err(Error::InvalidWindow(format!("{lo}..{hi}")));
        }
        Ok(Window { lo, hi, ground: (lo..=hi).collect() })
    }

    pub fn with_ground(lo: Nat, hi: Nat, ground: Vec<Nat>) -> Result<Self> {
        let mut w = Window::range(lo, hi)?;
        let set = FiniteSet::from_unsorted(ground)
            .map_err(|e| Error::InvalidWindow(e.to_string()))?;
        if let Some(x) = set.iter().find(|&x| x < lo || x > hi) {
            return Err(Error::InvalidWindow(format!("ground element {x} outside {lo}..{hi}")));
        }
        w.ground = set.into_vec();
        Ok(w)
    }

    /// The window whose ground set is exactly `s`.
    pub fn of_set(s: &FiniteSet) -> Self {
        match (s.min_elem(), s.max_elem()) {
            (Some(lo), Some(hi)) => Window { lo, hi, ground: s.as_slice().to_vec() },
            _ => Window { lo: 1, hi: 1, ground: Vec::new() },
        }
    }

    pub fn lo(&self) -> Nat {
        self.lo
    }

    pub fn hi(&self) -> Nat {
        self.hi
    }

    pub fn ground(&self) -> &[Nat] {
        &self.ground
    }

    pub fn ground_set(&self) -> FiniteSet {
        FiniteSet::from_sorted_unchecked(self.ground.clone())
    }

    pub fn is_full_range(&self) -> bool {
        self.ground.len() as u64 == u64::from(self.hi - self.lo) + 1
    }

    pub fn contains_set(&self, s: &FiniteSet) -> bool {
        s.iter().all(|x| self.ground.binary_search(&x).is_ok())
    }

    /// Same bounds, ground restricted to elements above `m`.
    pub fn above(&self, m: Nat) -> Window {
        Window { lo: self.lo, hi: self.hi, ground: self.ground.iter().copied().filter(|&x| x > m).collect() }
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)?;
        if !self.is_full_range() {
            write!(f, " ground {}", self.ground_set())?;
        }
        Ok(())
    }
}

impl FromStr for Window {
    type Err = Error;

    /// `lo..hi` or `lo..=hi`, both inclusive.
    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::WindowSyntax { input: s.to_string(), reason: reason.into() };
        let (a, b) = s.trim().split_once("..").ok_or_else(|| err("expected lo..hi"))?;
        let b = b.strip_prefix('=').unwrap_or(b);
        let lo = a.trim().parse().map_err(|_| err("bad lower bound"))?;
        let hi = b.trim().parse().map_err(|_| err("bad upper bound"))?;
        Window::range(lo, hi).map_err(|e| err(&e.to_string()))
    }
}

/// A family of finite subsets of the positive naturals.
pub trait Family: Send + Sync {
    fn contains(&self, s: &FiniteSet) -> bool;

    /// Is `s` an initial segment (possibly equal) of some member?
    /// `None` when the family cannot answer; enumeration then falls back to
    /// scanning all subsets of the window.
    fn is_prefix(&self, _s: &FiniteSet) -> Option<bool> {
        None
    }

    fn label(&self) -> String;

    /// Members whose elements all lie in the window's ground set, in
    /// length-lexicographic order.
    fn enumerate<'a>(&'a self, w: &'a Window) -> Box<dyn Iterator<Item = FiniteSet> + 'a> {
        Box::new(LevelEnumerator::new(self, w.ground()))
    }

    /// A member within the window that is a proper initial segment of
    /// another. The default walks every member.
    fn thin_violation(&self, w: &Window) -> Option<Violation> {
        thin_by_enumeration(self, w)
    }
}

impl<F: Family + ?Sized> Family for &F {
    fn contains(&self, s: &FiniteSet) -> bool {
        (**self).contains(s)
    }
    fn is_prefix(&self, s: &FiniteSet) -> Option<bool> {
        (**self).is_prefix(s)
    }
    fn label(&self) -> String {
        (**self).label()
    }
    fn enumerate<'a>(&'a self, w: &'a Window) -> Box<dyn Iterator<Item = FiniteSet> + 'a> {
        (**self).enumerate(w)
    }
    fn thin_violation(&self, w: &Window) -> Option<Violation> {
        (**self).thin_violation(w)
    }
}

impl<F: Family + ?Sized> Family for Box<F> {
    fn contains(&self, s: &FiniteSet) -> bool {
        (**self).contains(s)
    }
    fn is_prefix(&self, s: &FiniteSet) -> Option<bool> {
        (**self).is_prefix(s)
    }
    fn label(&self) -> String {
        (**self).label()
    }
    fn enumerate<'a>(&'a self, w: &'a Window) -> Box<dyn Iterator<Item = FiniteSet> + 'a> {
        (**self).enumerate(w)
    }
    fn thin_violation(&self, w: &Window) -> Option<Violation> {
        (**self).thin_violation(w)
    }
}

/// Level-by-level enumeration, dropping nodes the family rules out as prefixes.
pub struct LevelEnumerator<'a, F: ?Sized> {
    fam: &'a F,
    ground: &'a [Nat],
    level: Vec<FiniteSet>,
    next: usize,
}

impl<'a, F: Family + ?Sized> LevelEnumerator<'a, F> {
    pub fn new(fam: &'a F, ground: &'a [Nat]) -> Self {
        LevelEnumerator { fam, ground, level: vec![FiniteSet::empty()], next: 0 }
    }

    fn advance_level(&mut self) {
        let mut children = Vec::new();
        for node in &self.level {
            let start = match node.max_elem() {
                Some(m) => self.ground.partition_point(|&x| x <= m),
                None => 0,
            };
            for &x in &self.ground[start..] {
                let child = node.pushed(x);
                if self.fam.is_prefix(&child) != Some(false) {
                    children.push(child);
                }
            }
        }
        self.level = children;
        self.next = 0;
    }
}

impl<F: Family + ?Sized> Iterator for LevelEnumerator<'_, F> {
    type Item = FiniteSet;

    fn next(&mut self) -> Option<FiniteSet> {
        loop {
            while self.next < self.level.len() {
                let s = &self.level[self.next];
                self.next += 1;
                if self.fam.contains(s) {
                    return Some(s.clone());
                }
            }
            if self.level.is_empty() {
                return None;
            }
            self.advance_level();
        }
    }
}

/// Depth-first enumeration of a family closed under initial segments
/// (except possibly at `∅`), sorted into length-lexicographic order.
pub(crate) fn enumerate_prefix_closed<F: Family + ?Sized>(fam: &F, ground: &[Nat]) -> Vec<FiniteSet> {
    fn go<F: Family + ?Sized>(fam: &F, ground: &[Nat], node: &FiniteSet, from: usize, out: &mut Vec<FiniteSet>) {
        for (i, &x) in ground.iter().enumerate().skip(from) {
            let child = node.pushed(x);
            if fam.contains(&child) {
                go(fam, ground, &child, i + 1, out);
                out.push(child);
            }
        }
    }
    let mut out = Vec::new();
    let root = FiniteSet::empty();
    if fam.contains(&root) {
        out.push(root.clone());
    }
    go(fam, ground, &root, 0, &mut out);
    out.sort();
    out
}

/// A pair `(smaller, larger)` witnessing a failed check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub smaller: FiniteSet,
    pub larger: FiniteSet,
}

/// No member within the window is a proper initial segment of another.
pub fn check_thin<F: Family + ?Sized>(fam: &F, w: &Window) -> std::result::Result<(), Violation> {
    fam.thin_violation(w).map_or(Ok(()), Err)
}

/// [`check_thin`] by listing every member and testing its prefixes.
pub fn thin_by_enumeration<F: Family + ?Sized>(fam: &F, w: &Window) -> Option<Violation> {
    for t in fam.enumerate(w) {
        for k in 0..t.len() {
            let p = t.prefix(k);
            if fam.contains(&p) {
                return Some(Violation { smaller: p, larger: t });
            }
        }
    }
    None
}

/// No member within the window is a proper subset of another.
pub fn check_sperner<F: Family + ?Sized>(fam: &F, w: &Window) -> std::result::Result<(), Violation> {
    for t in fam.enumerate(w) {
        if t.is_empty() {
            continue;
        }
        let inner = Window::of_set(&t);
        let found = fam.enumerate(&inner).find(|s| *s != t);
        if let Some(s) = found {
            return Err(Violation { smaller: s, larger: t });
        }
    }
    Ok(())
}

/// Initial segments of members, where the member lies in the window.
pub fn star_closure<F: Family + ?Sized>(fam: &F, w: &Window) -> Vec<FiniteSet> {
    let mut out = BTreeSet::new();
    for t in fam.enumerate(w) {
        out.extend(t.prefixes());
    }
    out.into_iter().collect()
}

/// Subsets of members, where the member lies in the window.
///
/// Exponential in member size; meant for small windows.
pub fn down_closure<F: Family + ?Sized>(fam: &F, w: &Window) -> Vec<FiniteSet> {
    let mut out = BTreeSet::new();
    for t in fam.enumerate(w) {
        assert!(t.len() < 64, "member too large for subset expansion");
        for mask in 0..(1u64 << t.len()) {
            out.insert(t.subset_by_mask(mask));
        }
    }
    out.into_iter().collect()
}

type SetFn = Box<dyn Fn(&FiniteSet) -> bool + Send + Sync>;

/// A family given by closures.
pub struct Predicate {
    label: String,
    member: SetFn,
    prefix: Option<SetFn>,
    universe: Option<Vec<Nat>>,
}

impl Predicate {
    pub fn new(label: impl Into<String>, member: impl Fn(&FiniteSet) -> bool + Send + Sync + 'static) -> Self {
        Predicate { label: label.into(), member: Box::new(member), prefix: None, universe: None }
    }

    /// Supplies the initial-segment test. It must be monotone under initial
    /// segments and true on every member.
    pub fn with_prefix(mut self, prefix: impl Fn(&FiniteSet) -> bool + Send + Sync + 'static) -> Self {
        self.prefix = Some(Box::new(prefix));
        self
    }

    /// Restricts members to subsets of `universe`.
    pub fn with_universe(mut self, mut universe: Vec<Nat>) -> Self {
        universe.sort_unstable();
        universe.dedup();
        self.universe = Some(universe);
        self
    }

    /// A family given by hereditary membership: prefix test = membership.
    pub fn hereditary(label: impl Into<String>, member: impl Fn(&FiniteSet) -> bool + Send + Sync + Clone + 'static) -> Self {
        Predicate::new(label, member.clone()).with_prefix(member)
    }

    /// An explicitly listed finite family.
    pub fn from_sets(label: impl Into<String>, sets: Vec<FiniteSet>) -> Self {
        let members: BTreeSet<FiniteSet> = sets.into_iter().collect();
        let prefixes: BTreeSet<FiniteSet> = members.iter().flat_map(|s| s.prefixes().collect::<Vec<_>>()).collect();
        Predicate::new(label, move |s| members.contains(s)).with_prefix(move |s| prefixes.contains(s))
    }

    fn in_universe(&self, s: &FiniteSet) -> bool {
        self.universe
            .as_ref()
            .map_or(true, |u| s.iter().all(|x| u.binary_search(&x).is_ok()))
    }
}

impl Family for Predicate {
    fn contains(&self, s: &FiniteSet) -> bool {
        self.in_universe(s) && (self.member)(s)
    }

    fn is_prefix(&self, s: &FiniteSet) -> Option<bool> {
        if !self.in_universe(s) {
            return Some(false);
        }
        self.prefix.as_ref().map(|p| p(s))
    }

    fn label(&self) -> String {
        self.label.clone()
    }
}

impl fmt::Debug for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Predicate").field("label", &self.label).finish_non_exhaustive()
    }
}

/// `F(L)`: the image of the index set under `n ↦ L[n-1]`.
pub fn spread(indices: &FiniteSet, l: &[Nat]) -> Result<FiniteSet> {
    let mut out = Vec::with_capacity(indices.len());
    for n in indices.iter() {
        let x = *l
            .get(n as usize - 1)
            .ok_or(Error::IndexOutOfRange { index: n, len: l.len() })?;
        out.push(x);
    }
    FiniteSet::new(out)
}

/// Calls `visit` on every subset of `base` (as a set) in depth-first order,
/// descending into a subset only while `descend` holds. The empty set is
/// visited first and always descended into.
pub fn walk_subsets(base: &[Nat], mut descend: impl FnMut(&FiniteSet) -> bool) {
    fn go(base: &[Nat], node: &mut FiniteSet, from: usize, descend: &mut dyn FnMut(&FiniteSet) -> bool) {
        for i in from..base.len() {
            node.0.push(base[i]);
            if descend(node) {
                go(base, node, i + 1, descend);
            }
            node.0.pop();
        }
    }
    debug_assert!(base.windows(2).all(|p| p[0] < p[1]) && base.first().map_or(true, |&x| x >= 1));
    let mut node = FiniteSet::empty();
    descend(&node);
    go(base, &mut node, 0, &mut descend);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> FiniteSet {
        x.parse().unwrap()
    }

    #[test]
    fn initial_segments() {
        assert!(s("{1,3}").is_initial_segment_of(&s("{1,3,7}")));
        assert!(s("{}").is_initial_segment_of(&s("{5}")));
        assert!(!s("{3}").is_initial_segment_of(&s("{1,3}")));
        assert!(s("{1,3}").is_initial_segment_of(&s("{1,3}")));
        assert!(!s("{1,3}").is_proper_initial_segment_of(&s("{1,3}")));
    }

    #[test]
    fn subsets_and_order() {
        assert!(s("{2,5}").is_subset_of(&s("{1,2,3,5}")));
        assert!(!s("{2,4}").is_subset_of(&s("{1,2,3,5}")));
        assert!(s("{9}") < s("{1,2}"));
        assert!(s("{1,3}") < s("{2,3}"));
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(s("{3, 2,4}").to_string(), "{2,3,4}");
        assert_eq!(s("{}"), FiniteSet::empty());
        assert_eq!(s("[1,2]"), FiniteSet::from([1, 2]));
        assert!("{0,1}".parse::<FiniteSet>().is_err());
        assert!("{a}".parse::<FiniteSet>().is_err());
        assert!(FiniteSet::new(vec![2, 2]).is_err());
        let j = serde_json::to_string(&s("{2,3}")).unwrap();
        assert_eq!(j, "[2,3]");
        assert!(serde_json::from_str::<FiniteSet>("[3,2]").is_err());
    }

    #[test]
    fn windows() {
        let w: Window = "1..30".parse().unwrap();
        assert_eq!(w.ground().len(), 30);
        assert!("5..2".parse::<Window>().is_err());
        assert!("0..2".parse::<Window>().is_err());
        let g = Window::with_ground(1, 10, vec![6, 2, 4]).unwrap();
        assert_eq!(g.ground(), &[2, 4, 6]);
        assert!(Window::with_ground(1, 10, vec![11]).is_err());
        assert!(g.contains_set(&s("{2,6}")));
        assert!(!g.contains_set(&s("{2,3}")));
    }

    #[test]
    fn thin_counterexample() {
        let f = Predicate::from_sets("pair", vec![s("{1}"), s("{1,2}")]);
        let w = Window::range(1, 5).unwrap();
        assert_eq!(check_thin(&f, &w), Err(Violation { smaller: s("{1}"), larger: s("{1,2}") }));
    }

    #[test]
    fn closures_of_single_set() {
        let f = Predicate::from_sets("one", vec![s("{2,3}")]);
        let w = Window::range(1, 5).unwrap();
        assert_eq!(star_closure(&f, &w), vec![s("{}"), s("{2}"), s("{2,3}")]);
        assert_eq!(down_closure(&f, &w), vec![s("{}"), s("{2}"), s("{3}"), s("{2,3}")]);
    }

    #[test]
    fn predicate_without_prefix_test_enumerates_everything() {
        let f = Predicate::new("min=size", |t: &FiniteSet| t.min_elem() == Some(t.len() as Nat));
        let w = Window::range(1, 4).unwrap();
        let got: Vec<_> = f.enumerate(&w).collect();
        assert_eq!(got, vec![s("{1}"), s("{2,3}"), s("{2,4}")]);
    }

    #[test]
    fn sperner_on_equal_sizes() {
        let f = Predicate::new("min=size", |t: &FiniteSet| t.min_elem() == Some(t.len() as Nat))
            .with_prefix(|t: &FiniteSet| t.min_elem().map_or(true, |m| t.len() as Nat <= m));
        assert_eq!(check_sperner(&f, &Window::range(1, 12).unwrap()), Ok(()));
    }

    #[test]
    fn spread_relabels() {
        assert_eq!(spread(&s("{1,3}"), &[4, 7, 9, 12]).unwrap(), s("{4,9}"));
        assert_eq!(spread(&s("{}"), &[4, 7]).unwrap(), s("{}"));
        assert_eq!(
            spread(&s("{3}"), &[4, 7]),
            Err(Error::IndexOutOfRange { index: 3, len: 2 })
        );
    }

    #[test]
    fn walk_visits_all_subsets() {
        let mut n = 0;
        walk_subsets(&[1, 2, 3, 4], |_| {
            n += 1;
            true
        });
        assert_eq!(n, 16);
    }
}
