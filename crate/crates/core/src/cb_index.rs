//! Strong Cantor-Bendixson ranks.
//!
//! The symbolic path reads ranks off the residual automaton: the rank of `s`
//! in the derivatives of the downward closure of a `xi`-uniform Sperner
//! family is the residual after `s`, and the index of that closure is `xi+1`.
//! The brute-force path iterates derivatives on a window, deciding "cofinitely
//! many `m`" by a probe over large `m`.

use std::collections::{BTreeMap, HashMap};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::family_core::{Family, FiniteSet, Nat, Window};
use crate::ordinal::Ordinal;
use crate::uniform_system::{FamilyKind, FamilySpec, Residual};

/// Rank of `s` in the derivatives of `spec_*`, for `s` an initial segment of
/// a member: `rank(∅) = xi`, `rank({n} ∪ s') = rank(s')` in the section at `n`.
pub fn symbolic_rank(spec: &FamilySpec, s: &FiniteSet) -> Result<Ordinal> {
    if spec.kind == FamilyKind::Example112 {
        return Err(Error::Precondition(
            "ranks are read from residuals only for Sperner families; ex112 is not Sperner".into(),
        ));
    }
    let xi = spec.uniform_ordinal().ok_or_else(|| Error::NotUniform(spec.to_string()))?;
    match spec.residual(s).expect("uniform") {
        Residual::Start => Ok(xi),
        Residual::Alive(r) => Ok(r),
        Residual::Dead => Err(Error::NotInStarClosure { family: spec.to_string(), set: s.clone() }),
    }
}

/// The strong Cantor-Bendixson index when it is known in closed form:
/// `xi+1` for the closure of a `xi`-uniform family, `w^a+1` for `F_a`, one
/// more than the inner index for a lift. Hereditary families are taken to
/// contain `∅` here.
pub fn symbolic_index(spec: &FamilySpec) -> Option<Ordinal> {
    match &spec.kind {
        FamilyKind::Down(inner) | FamilyKind::Star(inner) if inner.is_uniform() => {
            inner.uniform_ordinal().map(|x| x.succ())
        }
        FamilyKind::Down(inner) if inner.is_hereditary() => symbolic_index(inner),
        FamilyKind::F(a) => Some(Ordinal::omega_power(a.clone()).succ()),
        FamilyKind::Lift(inner) => symbolic_index(inner).map(|x| x.succ()),
        _ => None,
    }
}

/// Index of the downward closure of a uniform family.
pub fn closure_index(spec: &FamilySpec) -> Result<Ordinal> {
    spec.uniform_ordinal()
        .map(|x| x.succ())
        .ok_or_else(|| Error::NotUniform(spec.to_string()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum IndexBranch {
    /// `xi + 1 < sigma`: the closure of any `xi`-uniform family embeds.
    FirstBranch,
    /// `sigma < xi + 1`: the family sits inside proper initial segments.
    SecondBranch,
    /// `sigma = xi + 1`.
    Boundary,
}

pub fn index_compare(sigma: &Ordinal, xi: &Ordinal) -> IndexBranch {
    match xi.succ().cmp(sigma) {
        std::cmp::Ordering::Less => IndexBranch::FirstBranch,
        std::cmp::Ordering::Greater => IndexBranch::SecondBranch,
        std::cmp::Ordering::Equal => IndexBranch::Boundary,
    }
}

/// The sample of large naturals standing in for "all but finitely many `m`".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Probe {
    points: Vec<Nat>,
}

impl Probe {
    /// Samples `h..=2h`.
    pub fn horizon(h: Nat) -> Self {
        Probe { points: (h..=2 * h).collect() }
    }

    pub fn for_window(w: &Window) -> Self {
        Probe::horizon(w.hi())
    }

    /// An explicit sample, e.g. the tail of a custom ground set.
    pub fn from_points(mut points: Vec<Nat>) -> Self {
        points.sort_unstable();
        points.dedup();
        Probe { points }
    }

    pub fn points(&self) -> &[Nat] {
        &self.points
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankTable {
    /// Largest `k <= steps` with the set in the `k`-th derivative.
    pub ranks: BTreeMap<FiniteSet, u32>,
    /// `rank(∅) + 1`, or `Some(0)` for the empty family; `None` when `∅`
    /// survives all computed steps.
    pub index: Option<u32>,
    pub steps: u32,
}

impl Serialize for RankTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out<'a> {
            ranks: BTreeMap<String, u32>,
            index: &'a Option<u32>,
            steps: u32,
        }
        Out {
            ranks: self.ranks.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            index: &self.index,
            steps: self.steps,
        }
        .serialize(s)
    }
}

struct Derivatives<'a, F: ?Sized> {
    fam: &'a F,
    probe: &'a [Nat],
    memo: HashMap<(u32, FiniteSet), bool>,
}

impl<F: Family + ?Sized> Derivatives<'_, F> {
    fn member(&mut self, k: u32, a: &FiniteSet) -> Result<bool> {
        if k == 0 {
            return Ok(self.fam.contains(a));
        }
        if let Some(&v) = self.memo.get(&(k, a.clone())) {
            return Ok(v);
        }
        let v = if !self.member(k - 1, a)? {
            false
        } else {
            let mut seen: Option<bool> = None;
            for &m in self.probe {
                if a.contains(m) {
                    continue;
                }
                let here = self.member(k - 1, &a.inserted(m))?;
                match seen {
                    None => seen = Some(here),
                    Some(prev) if prev != here => {
                        return Err(Error::ProbeInconsistency { set: a.clone(), level: k });
                    }
                    _ => {}
                }
            }
            seen.ok_or_else(|| Error::Precondition("probe has no points outside the set".into()))?
        };
        self.memo.insert((k, a.clone()), v);
        Ok(v)
    }
}

/// Finite derivative ranks of every member within the window, for a
/// hereditary family. Fails if the probe sees `A ∪ {m}` change membership
/// among the sampled `m`.
pub fn brute_derivative<F: Family + ?Sized>(fam: &F, w: &Window, steps: u32, probe: &Probe) -> Result<RankTable> {
    let mut d = Derivatives { fam, probe: probe.points(), memo: HashMap::new() };
    let mut ranks = BTreeMap::new();
    for a in fam.enumerate(w) {
        let mut r = 0;
        while r < steps && d.member(r + 1, &a)? {
            r += 1;
        }
        ranks.insert(a, r);
    }
    let index = match ranks.get(&FiniteSet::empty()) {
        None => Some(0),
        Some(&r) if r < steps => Some(r + 1),
        Some(_) => None,
    };
    Ok(RankTable { ranks, index, steps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family_core::Predicate;

    fn s(x: &str) -> FiniteSet {
        x.parse().unwrap()
    }

    fn fam(x: &str) -> FamilySpec {
        x.parse().unwrap()
    }

    fn o(x: &str) -> Ordinal {
        x.parse().unwrap()
    }

    #[test]
    fn symbolic_rank_examples() {
        assert_eq!(symbolic_rank(&fam("A:w"), &s("{}")).unwrap(), o("w"));
        assert_eq!(symbolic_rank(&fam("A:w"), &s("{3}")).unwrap(), o("2"));
        assert_eq!(symbolic_rank(&fam("A:4"), &s("{3,9}")).unwrap(), o("2"));
        assert!(matches!(symbolic_rank(&fam("A:w"), &s("{2,3,4}")), Err(Error::NotInStarClosure { .. })));
        assert!(symbolic_rank(&fam("ex112"), &s("{1}")).is_err());
        assert_eq!(symbolic_rank(&fam("exL"), &s("{3}")).unwrap(), o("6"));
    }

    #[test]
    fn brute_a2() {
        let w = Window::range(1, 12).unwrap();
        let t = brute_derivative(&fam("down:A:2"), &w, 5, &Probe::for_window(&w)).unwrap();
        assert_eq!(t.ranks[&s("{5}")], 1);
        assert_eq!(t.ranks[&s("{3,7}")], 0);
        assert_eq!(t.ranks[&s("{}")], 2);
        assert_eq!(t.index, Some(3));
    }

    #[test]
    fn brute_trivial_families() {
        let w = Window::range(1, 6).unwrap();
        let only_empty = Predicate::hereditary("{∅}", |t: &FiniteSet| t.is_empty());
        let t = brute_derivative(&only_empty, &w, 3, &Probe::for_window(&w)).unwrap();
        assert_eq!(t.index, Some(1));
        let none = Predicate::hereditary("none", |_: &FiniteSet| false);
        assert_eq!(brute_derivative(&none, &w, 3, &Probe::for_window(&w)).unwrap().index, Some(0));
    }

    #[test]
    fn probe_disagreement_is_an_error() {
        // membership of {1, m} flips inside the sample
        let f = Predicate::hereditary("odd", |t: &FiniteSet| t.len() <= 1 || t.iter().all(|x| x % 2 == 1));
        let w = Window::range(1, 6).unwrap();
        let r = brute_derivative(&f, &w, 2, &Probe::for_window(&w));
        assert!(matches!(r, Err(Error::ProbeInconsistency { .. })));
    }

    #[test]
    fn index_compare_examples() {
        assert_eq!(index_compare(&o("w+1"), &o("2")), IndexBranch::FirstBranch);
        assert_eq!(index_compare(&symbolic_index(&fam("F:1")).unwrap(), &o("w")), IndexBranch::Boundary);
        assert_eq!(index_compare(&o("3"), &o("w")), IndexBranch::SecondBranch);
    }

    #[test]
    fn symbolic_indexes() {
        assert_eq!(symbolic_index(&fam("down:A:w")), Some(o("w+1")));
        assert_eq!(symbolic_index(&fam("F:2")), Some(o("w^2+1")));
        assert_eq!(symbolic_index(&fam("lift:down:B:1")), Some(o("w+2")));
        assert_eq!(closure_index(&fam("A:w^w")).unwrap(), o("w^w+1"));
        assert_eq!(symbolic_index(&fam("all")), None);
    }
}
