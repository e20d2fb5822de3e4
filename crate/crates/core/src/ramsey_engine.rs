//! Windowed searches for the Ramsey-type dichotomies.
//!
//! Every search walks candidate witnesses in lexicographic order, extending a
//! partial witness one element at a time and checking only the members that
//! end at the new element. Results are issued as certificates, which the
//! checker in [`crate::certificate`] re-verifies before they are returned.

use std::collections::HashMap;

use serde::Serialize;

use crate::certificate::{Certificate, Claim, Env, SearchInfo};
use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::family_core::{walk_subsets, Family, FiniteSet, Nat, Window};
use crate::ordinal::{Ordinal, Scheme};
use crate::uniform_system::FamilySpec;

/// Nodes a single lexicographic search may visit before giving up.
pub const NODE_BUDGET: u64 = 200_000_000;

fn budget_error(what: &str, explored: u64) -> Error {
    Error::BudgetExhausted(format!("{what}: visited {explored} nodes"))
}

struct Lex<'g, E> {
    ground: &'g [Nat],
    target: usize,
    extend: E,
    chosen: Vec<Nat>,
    explored: u64,
}

impl<E> Lex<'_, E> {
    fn dfs<S>(&mut self, state: &S, from: usize) -> Result<bool>
    where
        E: FnMut(&S, &[Nat], Nat) -> Result<Option<S>>,
    {
        if self.chosen.len() == self.target {
            return Ok(true);
        }
        let need = self.target - self.chosen.len();
        for i in from..self.ground.len() {
            if self.ground.len() - i < need {
                break;
            }
            self.explored += 1;
            if self.explored > NODE_BUDGET {
                return Err(budget_error("lexicographic search", self.explored));
            }
            let x = self.ground[i];
            if let Some(next) = (self.extend)(state, &self.chosen, x)? {
                self.chosen.push(x);
                if self.dfs(&next, i + 1)? {
                    return Ok(true);
                }
                self.chosen.pop();
            }
        }
        Ok(false)
    }
}

/// First `target`-subset of `ground`, in lexicographic order, that every
/// extension step accepts. `extend` sees the state, the elements chosen so
/// far and the next element.
fn lex_search<S>(
    ground: &[Nat],
    target: usize,
    init: S,
    extend: impl FnMut(&S, &[Nat], Nat) -> Result<Option<S>>,
) -> Result<(Option<FiniteSet>, u64)> {
    let mut lex = Lex { ground, target, extend, chosen: Vec::new(), explored: 0 };
    let found = lex.dfs(&init, 0)?;
    let witness = found.then(|| FiniteSet::new(lex.chosen.clone())).transpose()?;
    Ok((witness, lex.explored))
}

/// Calls `f` on every set `u ∪ {x}` with `u ⊆ chosen` for which `descend`
/// holds, visiting `u` in the order of [`walk_subsets`]. Pruning is on the
/// extended set, so `descend` must fail on all supersets of a failing set.
fn ending_at(chosen: &[Nat], x: Nat, mut descend: impl FnMut(&FiniteSet) -> Result<bool>) -> Result<()> {
    let mut err = None;
    walk_subsets(chosen, |u| {
        if err.is_some() {
            return false;
        }
        match descend(&u.pushed(x)) {
            Ok(b) => b,
            Err(e) => {
                err = Some(e);
                false
            }
        }
    });
    err.map_or(Ok(()), Err)
}

/// Members of `fam` of the form `u ∪ {x}` with `u ⊆ chosen`.
fn members_ending_at(fam: &dyn Family, chosen: &[Nat], x: Nat) -> Vec<FiniteSet> {
    let mut out = Vec::new();
    walk_subsets(chosen, |u| {
        let t = u.pushed(x);
        if fam.contains(&t) {
            out.push(t);
        }
        u.is_empty() || fam.is_prefix(u) != Some(false)
    });
    out
}

fn issue(claim: Claim, witness: FiniteSet, window: Window, target: usize, search: SearchInfo, env: &Env) -> Result<Certificate> {
    Certificate::issue(claim, witness, window, target, search, env).map_err(|r| Error::Rejected(r.to_string()))
}

fn check_target(target: usize) -> Result<()> {
    if target == 0 {
        return Err(Error::Precondition("target must be at least 1".into()));
    }
    Ok(())
}

/// A `target`-subset `L` of the window on which every member of `fam`
/// inside `L` has the same color, or `None` if the window has none.
pub fn homogenize(fam: &dyn Family, col: &dyn Coloring, w: &Window, target: usize) -> Result<Option<Certificate>> {
    check_target(target)?;
    let mut cache: HashMap<FiniteSet, u32> = HashMap::new();
    let mut color_of = |t: &FiniteSet| -> Result<u32> {
        if let Some(&c) = cache.get(t) {
            return Ok(c);
        }
        let c = col.color(t)?;
        cache.insert(t.clone(), c);
        Ok(c)
    };
    let empty = FiniteSet::empty();
    let init = if fam.contains(&empty) { Some(color_of(&empty)?) } else { None };
    let (witness, explored) = lex_search(w.ground(), target, init, |state: &Option<u32>, chosen, x| {
        let mut cur = *state;
        for t in members_ending_at(fam, chosen, x) {
            let c = color_of(&t)?;
            match cur {
                Some(p) if p != c => return Ok(None),
                _ => cur = Some(c),
            }
        }
        Ok(Some(cur))
    })?;
    let Some(witness) = witness else { return Ok(None) };
    let color = members_within_color(fam, col, &witness)?;
    let claim = Claim::Homogeneous { family: fam.label(), coloring: col.label(), color };
    let env = Env::new().with_family(fam).with_coloring(col);
    issue(claim, witness, w.clone(), target, SearchInfo::lex(explored), &env).map(Some)
}

fn members_within_color(fam: &dyn Family, col: &dyn Coloring, s: &FiniteSet) -> Result<Option<u32>> {
    let mut found = None;
    let mut err = None;
    walk_subsets(s.as_slice(), |t| {
        if found.is_some() || err.is_some() {
            return false;
        }
        if fam.contains(t) {
            match col.color(t) {
                Ok(c) => found = Some(c),
                Err(e) => err = Some(e),
            }
        }
        t.is_empty() || fam.is_prefix(t) != Some(false)
    });
    err.map_or(Ok(found), Err)
}

/// Limits for [`homogenize_stream`]: how many terms of the sequence are read
/// and how deep the recursion may go.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StreamBudget {
    pub horizon: usize,
    pub max_depth: usize,
}

/// Picks the color class to keep from `(m, color)` records; `None` colors
/// mark elements after which no member is reachable and are always kept.
pub type Strategy<'a> = &'a dyn Fn(&[(Nat, Option<u32>)]) -> Option<u32>;

/// The most frequent color, ties going to the smaller one.
pub fn majority(records: &[(Nat, Option<u32>)]) -> Option<u32> {
    let mut counts: std::collections::BTreeMap<u32, usize> = Default::default();
    for c in records.iter().filter_map(|r| r.1) {
        *counts.entry(c).or_default() += 1;
    }
    let best = counts.values().copied().max()?;
    counts.into_iter().find(|&(_, n)| n == best).map(|(c, _)| c)
}

#[derive(Clone, Debug, Serialize)]
pub struct StreamOutcome {
    pub prefix: FiniteSet,
    pub color: Option<u32>,
    pub certificate: Certificate,
}

struct Stream<'a> {
    fam: &'a dyn Family,
    col: &'a dyn Coloring,
    strategy: Strategy<'a>,
    max_depth: usize,
}

impl Stream<'_> {
    // Returns a subsequence `P` of `pool` and a color `c` such that every
    // member `s ∪ u` with `u ⊆ P` has color `c`.
    fn run(&self, s: &FiniteSet, pool: Vec<Nat>, depth: usize) -> Result<(Vec<Nat>, Option<u32>)> {
        if self.fam.contains(s) {
            return Ok((pool, Some(self.col.color(s)?)));
        }
        if !s.is_empty() && self.fam.is_prefix(s) == Some(false) {
            return Ok((pool, None));
        }
        if pool.is_empty() {
            return Ok((pool, None));
        }
        if depth >= self.max_depth {
            return Err(Error::BudgetExhausted(format!("recursion depth {depth} reached at {s}")));
        }
        let mut records = Vec::new();
        let mut cur = pool;
        while let Some((&m, rest)) = cur.split_first() {
            let (sub, c) = self.run(&s.pushed(m), rest.to_vec(), depth + 1)?;
            records.push((m, c));
            cur = sub;
        }
        let chosen = (self.strategy)(&records);
        let kept = records.iter().filter(|r| r.1.is_none() || r.1 == chosen).map(|r| r.0).collect();
        Ok((kept, chosen))
    }
}

/// The recursion behind the infinite Ramsey theorem, run on the first
/// `horizon` terms of `m`: fix the least remaining term, homogenize the
/// section over the rest, record its color, and finally keep one color class
/// chosen by `strategy` (default [`majority`]).
pub fn homogenize_stream(
    fam: &dyn Family,
    col: &dyn Coloring,
    m: impl IntoIterator<Item = Nat>,
    strategy: Option<Strategy>,
    budget: StreamBudget,
) -> Result<StreamOutcome> {
    let pool: Vec<Nat> = m.into_iter().take(budget.horizon).collect();
    if pool.first() == Some(&0) || pool.windows(2).any(|p| p[0] >= p[1]) {
        return Err(Error::NotStrictlyIncreasing(pool));
    }
    let strategy = strategy.unwrap_or(&majority);
    let run = Stream { fam, col, strategy, max_depth: budget.max_depth };
    let (kept, _) = run.run(&FiniteSet::empty(), pool, 0)?;
    let prefix = FiniteSet::new(kept)?;
    let color = members_within_color(fam, col, &prefix)?;
    let claim = Claim::Homogeneous { family: fam.label(), coloring: col.label(), color };
    let env = Env::new().with_family(fam).with_coloring(col);
    let search = SearchInfo { order: "stream".into(), explored: prefix.len() as u64, route: None };
    let certificate = issue(claim, prefix.clone(), Window::of_set(&prefix), prefix.len(), search, &env)?;
    Ok(StreamOutcome { prefix, color, certificate })
}

/// A `target`-subset of the window on which the members of `fam` are
/// pairwise incomparable.
pub fn sperner_refine(fam: &dyn Family, w: &Window, target: usize) -> Result<Option<Certificate>> {
    check_target(target)?;
    let (witness, explored) = lex_search(w.ground(), target, (), |_, chosen, x| {
        for t in members_ending_at(fam, chosen, x) {
            let mut minimal = true;
            walk_subsets(t.as_slice(), |u| {
                if !minimal {
                    return false;
                }
                if u != &t && fam.contains(u) {
                    minimal = false;
                }
                u.is_empty() || fam.is_prefix(u) != Some(false)
            });
            if !minimal {
                return Ok(None);
            }
        }
        Ok(Some(()))
    })?;
    let Some(witness) = witness else { return Ok(None) };
    let env = Env::new().with_family(fam);
    let claim = Claim::SpernerRefined { family: fam.label() };
    issue(claim, witness, w.clone(), target, SearchInfo::lex(explored), &env).map(Some)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Branch {
    /// The downward closure of the family restricted to `L` lies in the
    /// hereditary family.
    A,
    /// Members of the hereditary family inside `L` are proper initial
    /// segments of members of the family.
    B,
}

#[derive(Clone, Debug, Serialize)]
pub struct DichotomyOutcome {
    pub witness: FiniteSet,
    pub branches: Vec<Branch>,
    pub certificates: Vec<Certificate>,
}

/// Lexicographically first `target`-subset of the window on which one of the
/// two alternatives holds; both are reported when both hold there.
pub fn hereditary_dichotomy(h: &dyn Family, spec: &FamilySpec, w: &Window, target: usize) -> Result<Option<DichotomyOutcome>> {
    check_target(target)?;
    let down = spec.clone().down();
    let (witness, explored) = lex_search(w.ground(), target, (true, true), |&(a_ok, b_ok), chosen, x| {
        let mut a = a_ok;
        if a {
            ending_at(chosen, x, |t| {
                if !down.contains(t) {
                    return Ok(false);
                }
                a &= h.contains(t);
                Ok(a)
            })?;
        }
        let mut b = b_ok;
        if b {
            ending_at(chosen, x, |t| {
                if !h.contains(t) {
                    return Ok(false);
                }
                b &= spec.is_prefix(t) == Some(true) && !spec.contains(t);
                Ok(b)
            })?;
        }
        Ok((a || b).then_some((a, b)))
    })?;
    let Some(witness) = witness else { return Ok(None) };
    check_hereditary_on(h, &witness)?;
    let env = Env::new().with_family(h).with_family(spec);
    let mut branches = Vec::new();
    let mut certificates = Vec::new();
    let (hl, fl) = (h.label(), spec.to_string());
    for (branch, claim) in [
        (Branch::A, Claim::DichotomyBranchA { hereditary: hl.clone(), family: fl.clone() }),
        (Branch::B, Claim::DichotomyBranchB { hereditary: hl.clone(), family: fl.clone() }),
    ] {
        if let Ok(c) = Certificate::issue(claim, witness.clone(), w.clone(), target, SearchInfo::lex(explored), &env) {
            branches.push(branch);
            certificates.push(c);
        }
    }
    if certificates.is_empty() {
        return Err(Error::Rejected(format!("neither branch re-checks on {witness}")));
    }
    Ok(Some(DichotomyOutcome { witness, branches, certificates }))
}

// Every member of `h` inside `s` with at least two elements has all its
// one-smaller subsets in `h`. Exhaustive over the subsets of the first
// 18 elements of `s`.
fn check_hereditary_on(h: &dyn Family, s: &FiniteSet) -> Result<()> {
    let n = s.len().min(18);
    for mask in 0u64..(1u64 << n) {
        let t = s.subset_by_mask(mask);
        if t.len() < 2 || !h.contains(&t) {
            continue;
        }
        let missing = t.iter().find(|&x| !h.contains(&t.removed(x)));
        if let Some(x) = missing {
            return Err(Error::FamilyContract {
                family: h.label(),
                set: t,
                detail: format!("member, but removing {x} leaves a non-member"),
            });
        }
    }
    Ok(())
}

/// For `xi1 < xi2`, a `target`-subset `L` of the window on which members of
/// `A_xi1` are proper initial segments of members of `A_xi2`.
pub fn rank_separation(xi1: &Ordinal, xi2: &Ordinal, w: &Window, target: usize, scheme: Scheme) -> Result<Option<Certificate>> {
    check_target(target)?;
    if xi1 >= xi2 {
        return Err(Error::Precondition(format!("separation needs {xi1} < {xi2}")));
    }
    let lower = FamilySpec::a(xi1.clone()).with_scheme(scheme);
    let upper = FamilySpec::a(xi2.clone()).with_scheme(scheme);
    let empty_ok = !lower.contains(&FiniteSet::empty())
        || (upper.is_prefix(&FiniteSet::empty()) == Some(true) && !upper.contains(&FiniteSet::empty()));
    if !empty_ok {
        return Ok(None);
    }
    let (witness, explored) = lex_search(w.ground(), target, (), |_, chosen, x| {
        let ok = members_ending_at(&lower, chosen, x)
            .iter()
            .all(|t| upper.is_prefix(t) == Some(true) && !upper.contains(t));
        Ok(ok.then_some(()))
    })?;
    let Some(witness) = witness else { return Ok(None) };
    let claim = Claim::Separation { lower: lower.to_string(), upper: upper.to_string() };
    issue(claim, witness, w.clone(), target, SearchInfo::lex(explored), &Env::new()).map(Some)
}

/// A run `s_1 ≺ s_2 ≺ …` of `depth` sets of the hereditary family `h`,
/// each a proper initial segment of the next, found depth-first from `∅`.
pub fn detect_chain(h: &dyn Family, w: &Window, depth: usize) -> Result<Option<Certificate>> {
    struct Dfs<'a> {
        h: &'a dyn Family,
        ground: &'a [Nat],
        depth: usize,
        path: Vec<FiniteSet>,
        explored: u64,
    }
    impl Dfs<'_> {
        fn go(&mut self, node: &FiniteSet, from: usize) -> Result<bool> {
            if self.path.len() >= self.depth {
                return Ok(true);
            }
            for i in from..self.ground.len() {
                if self.path.len() + (self.ground.len() - i) < self.depth {
                    break;
                }
                self.explored += 1;
                if self.explored > NODE_BUDGET {
                    return Err(budget_error("chain search", self.explored));
                }
                let child = node.pushed(self.ground[i]);
                if !self.h.contains(&child) {
                    continue;
                }
                self.path.push(child.clone());
                if self.go(&child, i + 1)? {
                    return Ok(true);
                }
                self.path.pop();
            }
            Ok(false)
        }
    }
    let root = FiniteSet::empty();
    let path = if h.contains(&root) { vec![root.clone()] } else { Vec::new() };
    let mut dfs = Dfs { h, ground: w.ground(), depth, path, explored: 0 };
    if !dfs.go(&root, 0)? {
        return Ok(None);
    }
    let mut chain = dfs.path;
    chain.truncate(depth);
    let witness = chain.last().cloned().unwrap_or_default();
    let claim = Claim::Chain { hereditary: h.label(), chain };
    let env = Env::new().with_family(h);
    issue(claim, witness, w.clone(), depth, SearchInfo::lex(dfs.explored), &env).map(Some)
}

/// `F_xi(L) ⊆ (B_xi)^*`, and `(B_xi)^* ⊆ F_xi` on the window, for `L` the
/// ambient set `N` less its first two elements. `N` runs over the tails of
/// the window's ground set until every `F_xi` set inside `N` is a proper
/// initial segment of a member of `A_{w^xi + 1}`.
pub fn schreier_transfer(xi: &Ordinal, w: &Window, scheme: Scheme) -> Result<Option<Certificate>> {
    let f = FamilySpec::f(xi.clone()).with_scheme(scheme);
    let lifted = FamilySpec::a(Ordinal::omega_power(xi.clone()).succ()).with_scheme(scheme);
    let star_b = FamilySpec::b(xi.clone()).with_scheme(scheme).star();
    let ground = w.ground();
    let mut explored = 0u64;
    for k in 0..ground.len().saturating_sub(2) {
        let n = &ground[k..];
        let mut ok = true;
        walk_subsets(n, |t| {
            if !ok {
                return false;
            }
            if t.is_empty() {
                return true;
            }
            if !f.contains(t) {
                return false;
            }
            explored += 1;
            ok = lifted.is_prefix(t) == Some(true) && !lifted.contains(t);
            ok
        });
        if !ok {
            continue;
        }
        let witness = FiniteSet::new(n[2..].to_vec())?;
        let claim = Claim::Transfer { xi: xi.clone(), scheme, target: star_b.to_string(), upper: true };
        let search = SearchInfo { order: "lex".into(), explored, route: Some(format!("shift-by-two from {}", n[0])) };
        if let Ok(c) = Certificate::issue(claim, witness.clone(), w.clone(), witness.len(), search, &Env::new()) {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

/// `{∅} ∪ {{m} ∪ s : s ∈ inner ∪ {∅}, m < s}`, for any family.
pub struct Lifted<'a> {
    pub inner: &'a dyn Family,
}

impl Family for Lifted<'_> {
    fn contains(&self, s: &FiniteSet) -> bool {
        s.len() <= 1 || self.inner.contains(&s.tail())
    }

    fn is_prefix(&self, s: &FiniteSet) -> Option<bool> {
        if s.len() <= 1 {
            return Some(true);
        }
        self.inner.is_prefix(&s.tail())
    }

    fn label(&self) -> String {
        format!("lift:{}", self.inner.label())
    }
}

// First tail `N` of the ground set on which every nonempty set in the
// downward closure of `B_xi` belongs to `fam`; yields the index of `N`.
fn closure_inside(fam: &dyn Family, xi: &Ordinal, ground: &[Nat], from: usize, scheme: Scheme, explored: &mut u64) -> Option<usize> {
    let down_b = FamilySpec::b(xi.clone()).with_scheme(scheme).down();
    (from..ground.len()).find(|&k| {
        let mut ok = true;
        walk_subsets(&ground[k..], |t| {
            if !ok || !down_b.contains(t) {
                return false;
            }
            *explored += 1;
            ok = t.is_empty() || fam.contains(t);
            ok
        });
        ok
    })
}

/// For a hereditary `h` whose strong Cantor-Bendixson index `sigma` is at
/// least `w^xi + 1`, a set `L` in the window with `F_xi(L) ⊆ h`. At the
/// boundary `sigma = w^xi + 1` the search runs on the lift of `h` and drops
/// two further elements.
pub fn large_index_transfer(h: &dyn Family, sigma: &Ordinal, xi: &Ordinal, w: &Window, scheme: Scheme) -> Result<Option<Certificate>> {
    let bound = Ordinal::omega_power(xi.clone()).succ();
    if *sigma < bound {
        return Err(Error::Precondition(format!("index {sigma} is below {bound}")));
    }
    let boundary = *sigma == bound;
    let lift = Lifted { inner: h };
    let fam: &dyn Family = if boundary { &lift } else { h };
    let drop = if boundary { 4 } else { 2 };
    let route = if boundary { "lift, closure of B inside, drop four" } else { "closure of B inside, drop two" };
    transfer_from(h, fam, xi, w, scheme, drop, route, |fam, ground, k, explored| {
        closure_inside(fam, xi, ground, k, scheme, explored)
    })
}

/// For a hereditary `h` meeting `B_xi` inside every infinite set: a set `L`
/// with `F_xi(L) ⊆ h`, found from a tail `N` with `B_xi ∩ [N] ⊆ h`.
pub fn dense_transfer(h: &dyn Family, xi: &Ordinal, w: &Window, scheme: Scheme) -> Result<Option<Certificate>> {
    let b = FamilySpec::b(xi.clone()).with_scheme(scheme);
    transfer_from(h, h, xi, w, scheme, 2, "B inside, drop two", |fam, ground, from, explored| {
        (from..ground.len()).find(|&k| {
            let mut ok = true;
            walk_subsets(&ground[k..], |t| {
                if !ok {
                    return false;
                }
                if b.contains(t) {
                    *explored += 1;
                    ok = fam.contains(t);
                }
                t.is_empty() || b.is_prefix(t) == Some(true)
            });
            ok
        })
    })
}

#[allow(clippy::too_many_arguments)]
fn transfer_from(
    h: &dyn Family,
    search_fam: &dyn Family,
    xi: &Ordinal,
    w: &Window,
    scheme: Scheme,
    drop: usize,
    route: &str,
    mut find: impl FnMut(&dyn Family, &[Nat], usize, &mut u64) -> Option<usize>,
) -> Result<Option<Certificate>> {
    let ground = w.ground();
    let env = Env::new().with_family(h);
    let mut explored = 0u64;
    let mut from = 0;
    while let Some(k) = find(search_fam, ground, from, &mut explored) {
        if ground.len() - k <= drop {
            break;
        }
        let witness = FiniteSet::new(ground[k + drop..].to_vec())?;
        let claim = Claim::Transfer { xi: xi.clone(), scheme, target: h.label(), upper: false };
        let search = SearchInfo { order: "lex".into(), explored, route: Some(route.into()) };
        if let Ok(c) = Certificate::issue(claim, witness.clone(), w.clone(), witness.len(), search, &env) {
            return Ok(Some(c));
        }
        from = k + 1;
    }
    Ok(None)
}

#[derive(Clone, Debug, Serialize)]
pub enum JuddOutcome {
    /// `F_xi(L) ⊆ h`.
    Embeds(Certificate),
    /// `h` restricted to `L` sits inside `(B_xi)^* ∖ B_xi`, hence inside `F_xi`.
    Inside(Certificate),
}

/// Either `F_xi(L) ⊆ h` or `h ∩ [L] ⊆ F_xi`, for a hereditary `h`: the
/// dichotomy against `B_xi` followed by the shift-by-two transfer.
pub fn judd_dichotomy(h: &dyn Family, xi: &Ordinal, w: &Window, target: usize, scheme: Scheme) -> Result<Option<JuddOutcome>> {
    let b = FamilySpec::b(xi.clone()).with_scheme(scheme);
    let Some(out) = hereditary_dichotomy(h, &b, w, target)? else { return Ok(None) };
    if out.branches.contains(&Branch::A) && out.witness.len() > 2 {
        let l = FiniteSet::new(out.witness.as_slice()[2..].to_vec())?;
        let claim = Claim::Transfer { xi: xi.clone(), scheme, target: h.label(), upper: false };
        let env = Env::new().with_family(h);
        let search = SearchInfo { order: "lex".into(), explored: 0, route: Some(format!("branch A on {}", out.witness)) };
        if let Ok(c) = Certificate::issue(claim, l.clone(), w.clone(), l.len(), search, &env) {
            return Ok(Some(JuddOutcome::Embeds(c)));
        }
    }
    let pos = out.branches.iter().position(|&b| b == Branch::B);
    Ok(pos.map(|i| JuddOutcome::Inside(out.certificates[i].clone())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{ParitySum, SpanThreshold};
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

    fn win(lo: Nat, hi: Nat) -> Window {
        Window::range(lo, hi).unwrap()
    }

    #[test]
    fn parity_pairs() {
        let c = homogenize(&fam("A:2"), &ParitySum, &win(1, 20), 4).unwrap().unwrap();
        assert_eq!(c.witness, s("{1,3,5,7}"));
        assert!(matches!(c.claim, Claim::Homogeneous { color: Some(1), .. }));
        c.verify(&Env::new()).unwrap();
    }

    #[test]
    fn singletons_pigeonhole() {
        let col = crate::coloring::FnColoring::new("small", 2, |t: &FiniteSet| if t.max_elem() < Some(4) { 1 } else { 2 });
        let c = homogenize(&fam("A:1"), &col, &win(1, 9), 4).unwrap().unwrap();
        assert_eq!(c.witness, s("{4,5,6,7}"));
        assert!(matches!(c.claim, Claim::Homogeneous { color: Some(2), .. }));
    }

    #[test]
    fn span_on_omega() {
        let c = homogenize(&fam("A:w"), &SpanThreshold, &win(1, 30), 5).unwrap().unwrap();
        c.verify(&Env::new()).unwrap();
    }

    #[test]
    fn window_too_small() {
        assert!(homogenize(&fam("A:2"), &ParitySum, &win(1, 3), 4).unwrap().is_none());
    }

    #[test]
    fn stream_on_evens() {
        let evens = (1..).map(|n| 2 * n);
        let out = homogenize_stream(&fam("A:2"), &ParitySum, evens, None, StreamBudget { horizon: 10, max_depth: 8 }).unwrap();
        assert_eq!(out.prefix.as_slice(), &[2, 4, 6, 8, 10, 12, 14, 16, 18, 20]);
        assert_eq!(out.color, Some(1));
        out.certificate.verify(&Env::new()).unwrap();
    }

    #[test]
    fn stream_singletons_take_majority() {
        let out = homogenize_stream(&fam("A:1"), &ParitySum, 1..=9, None, StreamBudget { horizon: 9, max_depth: 4 }).unwrap();
        // five odd singletons against four even ones
        assert_eq!(out.prefix, s("{1,3,5,7,9}"));
        assert_eq!(out.color, Some(2));
    }

    #[test]
    fn stream_zero_budget_and_errors() {
        let out = homogenize_stream(&fam("A:2"), &ParitySum, 1.., None, StreamBudget { horizon: 0, max_depth: 0 }).unwrap();
        assert!(out.prefix.is_empty());
        out.certificate.verify(&Env::new()).unwrap();
        let r = homogenize_stream(&fam("A:2"), &ParitySum, [3, 2, 5], None, StreamBudget { horizon: 3, max_depth: 4 });
        assert!(matches!(r, Err(Error::NotStrictlyIncreasing(_))));
        let r = homogenize_stream(&fam("A:3"), &ParitySum, 1.., None, StreamBudget { horizon: 8, max_depth: 2 });
        assert!(matches!(r, Err(Error::BudgetExhausted(_))));
    }

    #[test]
    fn sperner_refinements() {
        let c = sperner_refine(&fam("ex112"), &win(1, 25), 6).unwrap().unwrap();
        c.verify(&Env::new()).unwrap();
        assert_eq!(sperner_refine(&fam("A:3"), &win(1, 10), 6).unwrap().unwrap().witness, s("{1,2,3,4,5,6}"));
        assert_eq!(sperner_refine(&fam("exR"), &win(1, 10), 6).unwrap().unwrap().witness, s("{1,2,3,4,5,6}"));
    }

    #[test]
    fn dichotomy_examples() {
        let ex1 = hereditary_dichotomy(&fam("F:1"), &fam("exL"), &win(1, 30), 10).unwrap().unwrap();
        assert_eq!(ex1.branches, vec![Branch::B]);
        let ex2 = hereditary_dichotomy(&fam("down:exL"), &fam("exR"), &win(1, 30), 10).unwrap().unwrap();
        assert_eq!(ex2.branches, vec![Branch::A]);
        let all = hereditary_dichotomy(&fam("all"), &fam("A:w"), &win(1, 12), 5).unwrap().unwrap();
        assert!(all.branches.contains(&Branch::A));
        for c in ex1.certificates.iter().chain(&ex2.certificates) {
            c.verify(&Env::new()).unwrap();
        }
    }

    #[test]
    fn dichotomy_rejects_non_hereditary() {
        let h = Predicate::new("pairs-only", |t: &FiniteSet| t.len() == 2);
        let r = hereditary_dichotomy(&h, &fam("A:3"), &win(1, 8), 3);
        assert!(matches!(r, Err(Error::FamilyContract { .. })), "{r:?}");
    }

    #[test]
    fn separations() {
        let c = rank_separation(&o("2"), &o("w"), &win(1, 20), 10, Scheme::Wainer).unwrap().unwrap();
        assert_eq!(c.witness.min_elem(), Some(3));
        let c = rank_separation(&o("1"), &o("2"), &win(1, 20), 5, Scheme::Wainer).unwrap().unwrap();
        assert_eq!(c.witness, s("{1,2,3,4,5}"));
        assert!(rank_separation(&o("w"), &o("w*2"), &win(1, 40), 8, Scheme::Wainer).unwrap().is_some());
        assert!(rank_separation(&o("w"), &o("3"), &win(1, 10), 3, Scheme::Wainer).is_err());
    }

    #[test]
    fn chains() {
        let c = detect_chain(&fam("all"), &win(1, 10), 6).unwrap().unwrap();
        match &c.claim {
            Claim::Chain { chain, .. } => assert_eq!(chain[0], FiniteSet::empty()),
            _ => unreachable!(),
        }
        assert!(detect_chain(&fam("down:A:3"), &win(1, 12), 5).unwrap().is_none());
        let c = detect_chain(&fam("F:1"), &win(1, 12), 4).unwrap().unwrap();
        match &c.claim {
            Claim::Chain { chain, .. } => assert_eq!(chain[0], s("{4}")),
            _ => unreachable!(),
        }
    }

    #[test]
    fn transfer_first_levels() {
        for xi in ["0", "1"] {
            let c = schreier_transfer(&o(xi), &win(1, 20), Scheme::Wainer).unwrap().unwrap();
            assert_eq!(c.witness.min_elem(), Some(3));
            c.verify(&Env::new()).unwrap();
        }
    }

    #[test]
    fn large_index() {
        let h = fam("down:B:1");
        let c = large_index_transfer(&h, &o("w+1"), &o("1"), &win(1, 18), Scheme::Wainer).unwrap().unwrap();
        c.verify(&Env::new()).unwrap();
        let c = large_index_transfer(&fam("all"), &o("w^w"), &o("1"), &win(1, 18), Scheme::Wainer).unwrap().unwrap();
        assert_eq!(c.witness.min_elem(), Some(3));
        let h = fam("down:A:w*2");
        let c = large_index_transfer(&h, &o("w*2+1"), &o("1"), &win(1, 18), Scheme::Wainer).unwrap().unwrap();
        c.verify(&Env::new()).unwrap();
        assert!(large_index_transfer(&fam("down:A:3"), &o("4"), &o("1"), &win(1, 10), Scheme::Wainer).is_err());
    }

    #[test]
    fn dense_and_judd() {
        let c = dense_transfer(&fam("down:B:1"), &o("1"), &win(1, 18), Scheme::Wainer).unwrap().unwrap();
        c.verify(&Env::new()).unwrap();
        match judd_dichotomy(&fam("all"), &o("1"), &win(1, 14), 8, Scheme::Wainer).unwrap().unwrap() {
            JuddOutcome::Embeds(c) => c.verify(&Env::new()).unwrap(),
            JuddOutcome::Inside(_) => panic!("every set is in the family"),
        }
        match judd_dichotomy(&fam("down:A:1"), &o("1"), &win(1, 14), 8, Scheme::Wainer).unwrap().unwrap() {
            JuddOutcome::Inside(c) => c.verify(&Env::new()).unwrap(),
            JuddOutcome::Embeds(_) => panic!("singletons cannot hold F_1"),
        }
    }
}
