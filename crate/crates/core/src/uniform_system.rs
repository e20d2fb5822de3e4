//! The concrete families: the uniform system `A_xi`, `B_a = A_{w^a}`, the
//! generalized Schreier families `F_a`, the named examples, and closures of
//! these.
//!
//! Uniform families are decided by a residual automaton. Reading a set from
//! its minimum upward, the residual starts at the family's ordinal and each
//! element `n` replaces it by its section index (predecessor or `xi_n`). A set
//! is a member when the residual reaches zero exactly at its last element, and
//! an initial segment of a member while the residual has not been overrun.

use std::cell::RefCell;
use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family_core::{
    enumerate_prefix_closed, spread, thin_by_enumeration, Family, FiniteSet, LevelEnumerator, Nat, Violation, Window,
};
use crate::ordinal::{Kind, Ordinal, Scheme};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    A(Ordinal),
    B(Ordinal),
    F(Ordinal),
    /// `|s| = 2 min s + 1`.
    ExampleL,
    /// `|s| = min s`.
    ExampleR,
    /// Sections `[N]^5` at 1, `A_w` at 2, `A_{w+n}` at `n > 2`.
    Example112,
    /// Subsets of members.
    Down(Box<FamilySpec>),
    /// Initial segments of members.
    Star(Box<FamilySpec>),
    /// `{∅} ∪ {{m} ∪ s : s ∈ inner ∪ {∅}, m < s}`.
    Lift(Box<FamilySpec>),
    /// Every finite set.
    All,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub scheme: Scheme,
}

/// State of the residual automaton.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Residual {
    /// Nothing read yet, for families given by their sections.
    Start,
    Alive(Ordinal),
    Dead,
}

impl Residual {
    pub fn is_alive(&self) -> bool {
        !matches!(self, Residual::Dead)
    }

    pub fn accepts(&self) -> bool {
        matches!(self, Residual::Alive(r) if r.is_zero())
    }
}

impl FamilySpec {
    pub fn new(kind: FamilyKind) -> Self {
        FamilySpec { kind, scheme: Scheme::default() }
    }

    pub fn with_scheme(mut self, scheme: Scheme) -> Self {
        self.scheme = scheme;
        if let Some(inner) = self.inner_mut() {
            *inner = inner.clone().with_scheme(scheme);
        }
        self
    }

    fn inner_mut(&mut self) -> Option<&mut FamilySpec> {
        match &mut self.kind {
            FamilyKind::Down(f) | FamilyKind::Star(f) | FamilyKind::Lift(f) => Some(f),
            _ => None,
        }
    }

    pub fn a(xi: Ordinal) -> Self {
        FamilySpec::new(FamilyKind::A(xi))
    }

    pub fn b(a: Ordinal) -> Self {
        FamilySpec::new(FamilyKind::B(a))
    }

    pub fn f(a: Ordinal) -> Self {
        FamilySpec::new(FamilyKind::F(a))
    }

    pub fn example_l() -> Self {
        FamilySpec::new(FamilyKind::ExampleL)
    }

    pub fn example_r() -> Self {
        FamilySpec::new(FamilyKind::ExampleR)
    }

    pub fn example_112() -> Self {
        FamilySpec::new(FamilyKind::Example112)
    }

    pub fn all() -> Self {
        FamilySpec::new(FamilyKind::All)
    }

    pub fn down(self) -> Self {
        let scheme = self.scheme;
        FamilySpec { kind: FamilyKind::Down(Box::new(self)), scheme }
    }

    pub fn star(self) -> Self {
        let scheme = self.scheme;
        FamilySpec { kind: FamilyKind::Star(Box::new(self)), scheme }
    }

    pub fn lift(self) -> Self {
        let scheme = self.scheme;
        FamilySpec { kind: FamilyKind::Lift(Box::new(self)), scheme }
    }

    /// The ordinal `xi` for which the family is `xi`-uniform.
    pub fn uniform_ordinal(&self) -> Option<Ordinal> {
        match &self.kind {
            FamilyKind::A(xi) => Some(xi.clone()),
            FamilyKind::B(a) => Some(Ordinal::omega_power(a.clone())),
            FamilyKind::ExampleL | FamilyKind::ExampleR => Some(Ordinal::omega()),
            FamilyKind::Example112 => Some(Ordinal::omega().mul_nat(2)),
            _ => None,
        }
    }

    pub fn is_uniform(&self) -> bool {
        self.uniform_ordinal().is_some()
    }

    /// Closed under subsets, ignoring whether `∅` itself is a member.
    pub fn is_hereditary(&self) -> bool {
        match &self.kind {
            FamilyKind::F(_) | FamilyKind::Down(_) | FamilyKind::All => true,
            FamilyKind::Lift(h) | FamilyKind::Star(h) => h.is_hereditary(),
            _ => false,
        }
    }

    pub fn start(&self) -> Option<Residual> {
        match &self.kind {
            FamilyKind::ExampleL | FamilyKind::ExampleR | FamilyKind::Example112 => Some(Residual::Start),
            _ => self.uniform_ordinal().map(Residual::Alive),
        }
    }

    fn head(&self, n: Nat) -> Ordinal {
        let n64 = u64::from(n);
        match self.kind {
            FamilyKind::ExampleL => Ordinal::nat(2 * n64),
            FamilyKind::ExampleR => Ordinal::nat(n64 - 1),
            FamilyKind::Example112 => match n {
                1 => Ordinal::nat(5),
                2 => Ordinal::omega(),
                _ => Ordinal::omega().add(&Ordinal::nat(n64)),
            },
            _ => unreachable!("only example families start from a head"),
        }
    }

    pub fn step(&self, st: &Residual, n: Nat) -> Residual {
        match st {
            Residual::Dead => Residual::Dead,
            Residual::Start => Residual::Alive(self.head(n)),
            Residual::Alive(r) => match r
                .section_index(n, self.scheme)
                .expect("positive naturals index sections")
            {
                Some(next) => Residual::Alive(next),
                None => Residual::Dead,
            },
        }
    }

    /// Residual after reading `s`, for uniform families.
    pub fn residual(&self, s: &FiniteSet) -> Option<Residual> {
        let start = self.start()?;
        Some(TRAILS.with(|t| t.borrow_mut().residual(self, start, s.as_slice())))
    }

    /// Members `s` with `{m} ∪ s` in the family, `m < s`, within `w`.
    pub fn section(&self, m: Nat, w: &Window) -> Vec<FiniteSet> {
        let above = w.above(m);
        match self.start() {
            Some(st) => {
                let st = self.step(&st, m);
                let mut e = UniformEnumerator::new(self, above.ground());
                e.members_from(&st)
            }
            None => {
                let shifted = Shifted { inner: self, m };
                LevelEnumerator::new(&shifted, above.ground()).collect()
            }
        }
    }

    /// `F_a(L)` restricted to the window: spreads of `F_a` members on
    /// indices `1..=|L|`, in length-lexicographic order of the images.
    pub fn spread_f(a: &Ordinal, l: &[Nat], w: &Window, scheme: Scheme) -> Result<Vec<FiniteSet>> {
        let f = FamilySpec::f(a.clone()).with_scheme(scheme);
        let indices: Vec<Nat> = (1..=l.len() as Nat).collect();
        let mut out = Vec::new();
        for idx in enumerate_prefix_closed(&f, &indices) {
            let img = spread(&idx, l)?;
            if w.contains_set(&img) {
                out.push(img);
            }
        }
        out.sort();
        Ok(out)
    }

    // Families whose subsets of members are exactly the sets below a size
    // bound fixed by the minimum: a smaller minimum only lowers the bound,
    // and padding with large naturals reaches a member.
    fn down_size_bound(&self, t: &FiniteSet) -> Option<u64> {
        let min = u64::from(t.min_elem().unwrap_or(Nat::MAX));
        match &self.kind {
            FamilyKind::ExampleL => Some(min.saturating_mul(2).saturating_add(1)),
            FamilyKind::ExampleR => Some(min),
            FamilyKind::A(xi) if *xi == Ordinal::omega() => Some(min),
            FamilyKind::A(xi) => xi.as_nat(),
            _ => None,
        }
    }

    /// `t` is a subset of some member (over all of the naturals).
    pub fn in_down_closure(&self, t: &FiniteSet) -> bool {
        match &self.kind {
            FamilyKind::Star(inner) | FamilyKind::Down(inner) => inner.in_down_closure(t),
            _ if self.is_uniform() => {
                if let Some(bound) = self.down_size_bound(t) {
                    return t.len() as u64 <= bound;
                }
                let mut dp = DownClosure { spec: self, t: t.as_slice(), memo: HashMap::new() };
                dp.run(self.start().unwrap(), 1, 0)
            }
            FamilyKind::F(_) => t.is_empty() || self.contains(t),
            _ => self.contains(t),
        }
    }
}

// Residuals along the last few sets read, one trail per family. Walks
// over subsets ask about a set right after its parent, so most queries
// take a single step.
struct Trail {
    spec: FamilySpec,
    elems: Vec<Nat>,
    states: Vec<Residual>,
}

#[derive(Default)]
struct Trails(Vec<Trail>);

const TRAIL_SLOTS: usize = 4;

thread_local! {
    static TRAILS: RefCell<Trails> = RefCell::new(Trails::default());
}

impl Trails {
    fn residual(&mut self, spec: &FamilySpec, start: Residual, s: &[Nat]) -> Residual {
        let i = match self.0.iter().position(|t| t.spec == *spec) {
            Some(i) => i,
            None => {
                if self.0.len() == TRAIL_SLOTS {
                    self.0.pop();
                }
                self.0.push(Trail { spec: spec.clone(), elems: Vec::new(), states: vec![start] });
                self.0.len() - 1
            }
        };
        // most recently used first
        self.0[..=i].rotate_right(1);
        let t = &mut self.0[0];
        let common = t.elems.iter().zip(s).take_while(|(a, b)| a == b).count();
        t.elems.truncate(common);
        t.states.truncate(common + 1);
        for &n in &s[common..] {
            let st = t.states.last().expect("start state");
            let next = match st {
                Residual::Dead => Residual::Dead,
                _ => spec.step(st, n),
            };
            t.elems.push(n);
            t.states.push(next);
        }
        t.states[s.len()].clone()
    }
}

/// Membership in `A_xi`.
pub fn member_a(xi: &Ordinal, s: &FiniteSet, scheme: Scheme) -> bool {
    FamilySpec::a(xi.clone()).with_scheme(scheme).contains(s)
}

/// Membership in `(A_xi)^*`.
pub fn member_a_star(xi: &Ordinal, s: &FiniteSet, scheme: Scheme) -> bool {
    FamilySpec::a(xi.clone()).with_scheme(scheme).is_prefix(s) == Some(true)
}

pub fn member_b(a: &Ordinal, s: &FiniteSet, scheme: Scheme) -> bool {
    member_a(&Ordinal::omega_power(a.clone()), s, scheme)
}

/// Membership in the generalized Schreier family `F_a`. `∅` is never a member.
///
/// `F_0` is the singletons, `F_{b+1}` unions of at most `min s` consecutive
/// `F_b` blocks, and for limit `a`, `s ∈ F_{a_n}` for some `n <= min s`.
pub fn member_f(a: &Ordinal, s: &FiniteSet, scheme: Scheme) -> bool {
    if s.is_empty() {
        return false;
    }
    let mut memo = HashMap::new();
    f_segment(a, s.as_slice(), 0, s.len(), scheme, &mut memo)
}

fn f_segment(
    a: &Ordinal,
    s: &[Nat],
    i: usize,
    j: usize,
    scheme: Scheme,
    memo: &mut HashMap<(Ordinal, usize, usize), bool>,
) -> bool {
    let len = j - i;
    let min = s[i] as usize;
    match a.as_nat() {
        Some(0) => return len == 1,
        Some(1) => return len <= min,
        _ => {}
    }
    match a.classify() {
        Kind::Successor(b) => {
            // F_b is hereditary, so taking the longest block each time uses
            // the fewest blocks.
            let mut start = i;
            let mut blocks = 0;
            while start < j {
                blocks += 1;
                if blocks > min {
                    return false;
                }
                let mut end = start + 1;
                while end < j && f_segment(&b, s, start, end + 1, scheme, memo) {
                    end += 1;
                }
                start = end;
            }
            true
        }
        Kind::Limit => {
            let key = (a.clone(), i, j);
            if let Some(&v) = memo.get(&key) {
                return v;
            }
            let v = (1..=s[i]).any(|n| {
                let an = scheme.limit_step(a, n).expect("limit ordinal");
                f_segment(&an, s, i, j, scheme, memo)
            });
            memo.insert(key, v);
            v
        }
        Kind::Zero => unreachable!(),
    }
}

struct DownClosure<'a> {
    spec: &'a FamilySpec,
    t: &'a [Nat],
    memo: HashMap<(Residual, Nat, usize), bool>,
}

impl DownClosure<'_> {
    // Position `c` is the next natural to decide on; `idx` indexes `t`.
    fn run(&mut self, st: Residual, c: Nat, idx: usize) -> bool {
        if !st.is_alive() {
            return false;
        }
        let remaining = self.t.len() - idx;
        if remaining == 0 {
            // any live residual can be completed with large enough naturals
            return true;
        }
        if let Residual::Alive(r) = &st {
            if let Some(k) = r.as_nat() {
                return remaining as u64 <= k;
            }
        }
        let key = (st.clone(), c, idx);
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let target = self.t[idx];
        let v = if c == target {
            let next = self.spec.step(&st, c);
            self.run(next, c + 1, idx + 1)
        } else {
            let with = self.spec.step(&st, c);
            self.run(st.clone(), c + 1, idx) || self.run(with, c + 1, idx)
        };
        self.memo.insert(key, v);
        v
    }
}

/// Enumerates members of a uniform family from a given residual, level by
/// level, with a feasibility table keyed on (residual, position, count).
pub(crate) struct UniformEnumerator<'a> {
    spec: &'a FamilySpec,
    ground: &'a [Nat],
    memo: HashMap<(Residual, usize, usize), bool>,
}

impl<'a> UniformEnumerator<'a> {
    pub(crate) fn new(spec: &'a FamilySpec, ground: &'a [Nat]) -> Self {
        UniformEnumerator { spec, ground, memo: HashMap::new() }
    }

    // Can exactly `r` more elements from ground[i..] bring `st` to zero?
    fn feasible(&mut self, st: &Residual, i: usize, r: usize) -> bool {
        let avail = self.ground.len() - i;
        match st {
            Residual::Dead => return false,
            Residual::Alive(rho) => {
                if let Some(k) = rho.as_nat() {
                    return k as usize == r && r <= avail;
                }
                // After the finite part is spent, the limit step at `x`
                // leaves a residual with finite part x-1.
                let fin = rho.finite_part() as usize;
                if fin >= avail {
                    return false;
                }
                let x = self.ground[i + fin] as usize;
                if r < fin + x || r > avail {
                    return false;
                }
            }
            Residual::Start => {
                if r == 0 || r > avail {
                    return false;
                }
            }
        }
        let key = (st.clone(), i, r);
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let next = self.spec.step(st, self.ground[i]);
        let v = self.feasible(&next, i + 1, r - 1) || self.feasible(st, i + 1, r);
        self.memo.insert(key, v);
        v
    }

    fn collect(&mut self, st: &Residual, i: usize, r: usize, cur: &mut Vec<Nat>, out: &mut Vec<FiniteSet>) {
        if r == 0 {
            out.push(FiniteSet::from_sorted_unchecked(cur.clone()));
            return;
        }
        for j in i..self.ground.len() {
            let x = self.ground[j];
            let next = self.spec.step(st, x);
            if self.feasible(&next, j + 1, r - 1) {
                cur.push(x);
                self.collect(&next, j + 1, r - 1, cur, out);
                cur.pop();
            }
        }
    }

    pub(crate) fn level(&mut self, st: &Residual, r: usize) -> Vec<FiniteSet> {
        let mut out = Vec::new();
        if self.feasible(st, 0, r) {
            self.collect(st, 0, r, &mut Vec::new(), &mut out);
        }
        out
    }

    pub(crate) fn members_from(&mut self, st: &Residual) -> Vec<FiniteSet> {
        (0..=self.ground.len()).flat_map(|r| self.level(st, r)).collect()
    }
}

/// Thinness by search over (residual, position) pairs: a violation is an
/// accepting residual from which another acceptance is reachable.
struct ThinSearch<'a> {
    spec: &'a FamilySpec,
    ground: &'a [Nat],
    seen: HashSet<(Residual, usize)>,
    dead_ends: HashSet<(Residual, usize)>,
    path: Vec<Nat>,
}

impl ThinSearch<'_> {
    fn visit(&mut self, st: &Residual, i: usize) -> Option<Violation> {
        if !self.seen.insert((st.clone(), i)) {
            return None;
        }
        for j in i..self.ground.len() {
            let x = self.ground[j];
            let next = self.spec.step(st, x);
            if !next.is_alive() {
                continue;
            }
            self.path.push(x);
            let found = if next.accepts() {
                self.extension(&next, j + 1).map(|ext| {
                    let smaller = FiniteSet::from_sorted_unchecked(self.path.clone());
                    let mut larger = self.path.clone();
                    larger.extend(ext);
                    Violation { smaller, larger: FiniteSet::from_sorted_unchecked(larger) }
                })
            } else {
                self.visit(&next, j + 1)
            };
            self.path.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }

    // Elements of ground[i..] that take `st` to an accepting residual.
    fn extension(&mut self, st: &Residual, i: usize) -> Option<Vec<Nat>> {
        if let Residual::Alive(r) = st {
            if let Some(k) = r.as_nat() {
                let k = k as usize;
                return (k >= 1 && k <= self.ground.len() - i).then(|| self.ground[i..i + k].to_vec());
            }
        }
        if self.dead_ends.contains(&(st.clone(), i)) {
            return None;
        }
        for j in i..self.ground.len() {
            let next = self.spec.step(st, self.ground[j]);
            if !next.is_alive() {
                continue;
            }
            if next.accepts() {
                return Some(vec![self.ground[j]]);
            }
            if let Some(mut rest) = self.extension(&next, j + 1) {
                rest.insert(0, self.ground[j]);
                return Some(rest);
            }
        }
        self.dead_ends.insert((st.clone(), i));
        None
    }
}

struct Shifted<'a, F: ?Sized> {
    inner: &'a F,
    m: Nat,
}

impl<F: Family + ?Sized> Family for Shifted<'_, F> {
    fn contains(&self, s: &FiniteSet) -> bool {
        s.min_elem().map_or(true, |x| x > self.m) && self.inner.contains(&s.prepended(self.m))
    }

    fn is_prefix(&self, s: &FiniteSet) -> Option<bool> {
        if s.min_elem().is_some_and(|x| x <= self.m) {
            return Some(false);
        }
        self.inner.is_prefix(&s.prepended(self.m))
    }

    fn label(&self) -> String {
        format!("{}({})", self.inner.label(), self.m)
    }
}

impl Family for FamilySpec {
    fn contains(&self, s: &FiniteSet) -> bool {
        match &self.kind {
            FamilyKind::F(a) => member_f(a, s, self.scheme),
            FamilyKind::Down(inner) => inner.in_down_closure(s),
            FamilyKind::Star(inner) => inner.is_prefix(s) == Some(true),
            FamilyKind::Lift(inner) => s.len() <= 1 || inner.contains(&s.tail()),
            FamilyKind::All => true,
            _ => self.residual(s).is_some_and(|r| r.accepts()),
        }
    }

    fn is_prefix(&self, s: &FiniteSet) -> Option<bool> {
        match &self.kind {
            FamilyKind::F(_) => Some(s.is_empty() || self.contains(s)),
            FamilyKind::Down(_) | FamilyKind::Star(_) | FamilyKind::All => Some(self.contains(s)),
            FamilyKind::Lift(inner) => {
                if s.len() <= 1 {
                    Some(true)
                } else {
                    inner.is_prefix(&s.tail())
                }
            }
            _ => self.residual(s).map(|r| r.is_alive()),
        }
    }

    fn label(&self) -> String {
        self.to_string()
    }

    fn thin_violation(&self, w: &Window) -> Option<Violation> {
        let Some(start) = self.start() else { return thin_by_enumeration(self, w) };
        let mut search = ThinSearch {
            spec: self,
            ground: w.ground(),
            seen: HashSet::new(),
            dead_ends: HashSet::new(),
            path: Vec::new(),
        };
        if start.accepts() {
            if let Some(ext) = search.extension(&start, 0) {
                return Some(Violation { smaller: FiniteSet::empty(), larger: FiniteSet::from_sorted_unchecked(ext) });
            }
        }
        search.visit(&start, 0)
    }

    fn enumerate<'a>(&'a self, w: &'a Window) -> Box<dyn Iterator<Item = FiniteSet> + 'a> {
        if let Some(st) = self.start() {
            let mut e = UniformEnumerator::new(self, w.ground());
            let n = w.ground().len();
            return Box::new((0..=n).flat_map(move |r| e.level(&st, r)));
        }
        match &self.kind {
            FamilyKind::Star(inner) if inner.is_uniform() => {
                Box::new(LevelEnumerator::new(self, w.ground()))
            }
            FamilyKind::Lift(_) => Box::new(LevelEnumerator::new(self, w.ground())),
            _ => Box::new(enumerate_prefix_closed(self, w.ground()).into_iter()),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            FamilyKind::A(x) => write!(f, "A:{x}")?,
            FamilyKind::B(x) => write!(f, "B:{x}")?,
            FamilyKind::F(x) => write!(f, "F:{x}")?,
            FamilyKind::ExampleL => f.write_str("exL")?,
            FamilyKind::ExampleR => f.write_str("exR")?,
            FamilyKind::Example112 => f.write_str("ex112")?,
            FamilyKind::Down(inner) => return write!(f, "down:{inner}"),
            FamilyKind::Star(inner) => return write!(f, "star:{inner}"),
            FamilyKind::Lift(inner) => return write!(f, "lift:{inner}"),
            FamilyKind::All => f.write_str("all")?,
        }
        if self.scheme != Scheme::default() {
            write!(f, "@{}", self.scheme)?;
        }
        Ok(())
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// `A:<ord>`, `B:<ord>`, `F:<ord>`, `exL`, `exR`, `ex112`, `all`, and the
    /// prefixes `down:`, `star:`, `lift:`. A trailing `@intrinsic` or
    /// `@wainer` selects the scheme for the whole literal.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (body, scheme) = match s.rsplit_once('@') {
            Some((b, sch)) => (b, sch.parse::<Scheme>().map_err(|_| Error::FamilySyntax(s.to_string()))?),
            None => (s, Scheme::default()),
        };
        let spec = parse_body(body).ok_or_else(|| Error::FamilySyntax(s.to_string()))??;
        Ok(spec.with_scheme(scheme))
    }
}

fn parse_body(body: &str) -> Option<Result<FamilySpec>> {
    let body = body.trim();
    for (prefix, wrap) in [
        ("down:", FamilySpec::down as fn(FamilySpec) -> FamilySpec),
        ("star:", FamilySpec::star),
        ("lift:", FamilySpec::lift),
    ] {
        if let Some(rest) = body.strip_prefix(prefix) {
            return parse_body(rest).map(|r| r.map(wrap));
        }
    }
    let simple = match body {
        "exL" | "exl" => Some(FamilySpec::example_l()),
        "exR" | "exr" => Some(FamilySpec::example_r()),
        "ex112" => Some(FamilySpec::example_112()),
        "all" => Some(FamilySpec::all()),
        _ => None,
    };
    if let Some(spec) = simple {
        return Some(Ok(spec));
    }
    let (tag, ord) = body.split_once(':')?;
    let ctor = match tag.trim() {
        "A" => FamilySpec::a,
        "B" => FamilySpec::b,
        "F" => FamilySpec::f,
        _ => return None,
    };
    Some(ord.parse::<Ordinal>().map(ctor))
}

impl Serialize for FamilySpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FamilySpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}
