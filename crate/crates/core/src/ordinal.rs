//! Ordinals below epsilon_0 in Cantor normal form.
//!
//! An ordinal is stored as `w^e1*c1 + w^e2*c2 + ...` with strictly decreasing
//! exponents and positive coefficients. The empty sum is zero.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub exponent: Ordinal,
    pub coefficient: u64,
}

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Ordinal {
    terms: Vec<Term>,
}

/// Result of [`Ordinal::classify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Kind {
    Zero,
    Successor(Ordinal),
    Limit,
}

/// How the increasing sequence `a_n` is chosen for a limit exponent `a`.
///
/// The top-level sequence of a limit ordinal is always derived from its last
/// term; the scheme only matters once an exponent is itself a limit.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scheme {
    /// `(g + w^(b+1))_n = g + w^b*n` and `(g + w^b)_n = g + w^(b_n)` for limit `b`.
    #[default]
    Wainer,
    /// `a_n` is the derived sequence of `a` itself.
    Intrinsic,
}

impl Scheme {
    /// The `n`-th element of the increasing sequence attached to a limit `a`.
    pub fn limit_step(self, a: &Ordinal, n: u32) -> Result<Ordinal> {
        if n == 0 {
            return Err(Error::ZeroIndex);
        }
        if !a.is_limit() {
            return Err(Error::NotLimit(a.clone()));
        }
        Ok(match self {
            Scheme::Wainer => wainer(a, n),
            Scheme::Intrinsic => a.fundamental_with(n, self)?,
        })
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scheme::Wainer => "wainer",
            Scheme::Intrinsic => "intrinsic",
        })
    }
}

impl FromStr for Scheme {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.trim().to_ascii_lowercase().as_str() {
            "wainer" => Ok(Scheme::Wainer),
            "intrinsic" => Ok(Scheme::Intrinsic),
            other => Err(format!("unknown scheme `{other}` (expected wainer or intrinsic)")),
        }
    }
}

fn wainer(a: &Ordinal, n: u32) -> Ordinal {
    let (head, last) = a.split_last_unit();
    match last.classify() {
        Kind::Successor(b) => head.add(&Ordinal::omega_power(b).mul_nat(u64::from(n))),
        Kind::Limit => head.add(&Ordinal::omega_power(wainer(&last, n))),
        Kind::Zero => unreachable!("limit ordinal ends in a finite term"),
    }
}

// (w^e)_n, built from the successor and limit cases of the exponent.
fn power_section(e: &Ordinal, n: u32, scheme: Scheme) -> Ordinal {
    let mut acc = Ordinal::zero();
    let mut e = e.clone();
    loop {
        match e.classify() {
            Kind::Zero => return acc,
            Kind::Successor(c) => {
                acc = acc.add(&Ordinal::omega_power(c.clone()).mul_nat(u64::from(n - 1)));
                e = c;
            }
            Kind::Limit => {
                e = scheme
                    .limit_step(&e, n)
                    .expect("limit exponent with positive index");
            }
        }
    }
}

impl Ordinal {
    pub fn zero() -> Self {
        Ordinal { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Ordinal::nat(1)
    }

    pub fn nat(n: u64) -> Self {
        if n == 0 {
            Ordinal::zero()
        } else {
            Ordinal { terms: vec![Term { exponent: Ordinal::zero(), coefficient: n }] }
        }
    }

    pub fn omega() -> Self {
        Ordinal::omega_power(Ordinal::one())
    }

    pub fn omega_power(a: Ordinal) -> Self {
        Ordinal { terms: vec![Term { exponent: a, coefficient: 1 }] }
    }

    /// Builds an ordinal from `(exponent, coefficient)` pairs, checking the
    /// normal-form invariants.
    pub fn from_terms(terms: Vec<(Ordinal, u64)>) -> Result<Self> {
        for w in terms.windows(2) {
            if w[0].0 <= w[1].0 {
                return Err(Error::OrdinalSyntax {
                    input: format!("{:?}", terms),
                    reason: "exponents must be strictly decreasing".into(),
                });
            }
        }
        if terms.iter().any(|t| t.1 == 0) {
            return Err(Error::OrdinalSyntax {
                input: format!("{:?}", terms),
                reason: "coefficients must be positive".into(),
            });
        }
        Ok(Ordinal {
            terms: terms
                .into_iter()
                .map(|(exponent, coefficient)| Term { exponent, coefficient })
                .collect(),
        })
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.terms.iter().all(|t| t.exponent.is_zero())
    }

    pub fn as_nat(&self) -> Option<u64> {
        match self.terms.as_slice() {
            [] => Some(0),
            [t] if t.exponent.is_zero() => Some(t.coefficient),
            _ => None,
        }
    }

    /// Coefficient of `w^0`.
    pub fn finite_part(&self) -> u64 {
        match self.terms.last() {
            Some(t) if t.exponent.is_zero() => t.coefficient,
            _ => 0,
        }
    }

    /// True if some term has a positive exponent.
    pub fn has_infinite_part(&self) -> bool {
        self.terms.first().is_some_and(|t| !t.exponent.is_zero())
    }

    pub fn leading_exponent(&self) -> Option<&Ordinal> {
        self.terms.first().map(|t| &t.exponent)
    }

    pub fn classify(&self) -> Kind {
        match self.terms.last() {
            None => Kind::Zero,
            Some(t) if t.exponent.is_zero() => {
                let mut pred = self.clone();
                let last = pred.terms.last_mut().unwrap();
                if last.coefficient == 1 {
                    pred.terms.pop();
                } else {
                    last.coefficient -= 1;
                }
                Kind::Successor(pred)
            }
            Some(_) => Kind::Limit,
        }
    }

    pub fn is_limit(&self) -> bool {
        self.terms.last().is_some_and(|t| !t.exponent.is_zero())
    }

    pub fn succ(&self) -> Ordinal {
        self.add(&Ordinal::one())
    }

    /// Ordinal sum `self + other`.
    pub fn add(&self, other: &Ordinal) -> Ordinal {
        let Some(first) = other.terms.first() else {
            return self.clone();
        };
        let mut terms: Vec<Term> = self
            .terms
            .iter()
            .take_while(|t| t.exponent >= first.exponent)
            .cloned()
            .collect();
        let mut rest = other.terms.iter();
        if let Some(last) = terms.last_mut() {
            if last.exponent == first.exponent {
                last.coefficient += first.coefficient;
                rest.next();
            }
        }
        terms.extend(rest.cloned());
        Ordinal { terms }
    }

    /// `self * p` for a natural `p`, written `p*self` in coefficient-first notation.
    pub fn mul_nat(&self, p: u64) -> Ordinal {
        if p == 0 || self.is_zero() {
            return Ordinal::zero();
        }
        let mut out = self.clone();
        out.terms[0].coefficient *= p;
        out
    }

    // Splits off one copy of the last term: returns (rest, exponent of last term).
    fn split_last_unit(&self) -> (Ordinal, Ordinal) {
        let mut head = self.clone();
        let last = head.terms.pop().expect("nonzero ordinal");
        if last.coefficient > 1 {
            head.terms.push(Term { exponent: last.exponent.clone(), coefficient: last.coefficient - 1 });
        }
        (head, last.exponent)
    }

    /// `self_n` for a limit ordinal, with the default scheme.
    pub fn fundamental(&self, n: u32) -> Result<Ordinal> {
        self.fundamental_with(n, Scheme::default())
    }

    /// `self_n` for a limit ordinal `g + w^e*p`: `g + w^e*(p-1) + (w^e)_n`, where
    /// `(w^(c+1))_n = w^c*(n-1) + (w^c)_n`, `(w)_n = n-1`, and
    /// `(w^e)_n = (w^(e_n))_n` for limit `e`.
    pub fn fundamental_with(&self, n: u32, scheme: Scheme) -> Result<Ordinal> {
        if n == 0 {
            return Err(Error::ZeroIndex);
        }
        if !self.is_limit() {
            return Err(Error::NotLimit(self.clone()));
        }
        let (head, e) = self.split_last_unit();
        Ok(head.add(&power_section(&e, n, scheme)))
    }

    /// The ordinal indexing the section at `n`: the predecessor of a successor,
    /// `self_n` of a limit, `None` for zero.
    pub fn section_index(&self, n: u32, scheme: Scheme) -> Result<Option<Ordinal>> {
        match self.classify() {
            Kind::Zero => Ok(None),
            Kind::Successor(p) => Ok(Some(p)),
            Kind::Limit => self.fundamental_with(n, scheme).map(Some),
        }
    }
}

impl From<u64> for Ordinal {
    fn from(n: u64) -> Self {
        Ordinal::nat(n)
    }
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.terms.iter().zip(&other.terms) {
            let ord = a
                .exponent
                .cmp(&b.exponent)
                .then(a.coefficient.cmp(&b.coefficient));
            if ord != Ordering::Equal {
                return ord;
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::ops::Add for Ordinal {
    type Output = Ordinal;
    fn add(self, rhs: Ordinal) -> Ordinal {
        Ordinal::add(&self, &rhs)
    }
}

impl<'a> std::ops::Add<&'a Ordinal> for &'a Ordinal {
    type Output = Ordinal;
    fn add(self, rhs: &'a Ordinal) -> Ordinal {
        Ordinal::add(self, rhs)
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if t.exponent.is_zero() {
                write!(f, "{}", t.coefficient)?;
                continue;
            }
            f.write_str("w")?;
            if t.exponent != Ordinal::one() {
                if let Some(k) = t.exponent.as_nat() {
                    write!(f, "^{k}")?;
                } else if t.exponent == Ordinal::omega() {
                    f.write_str("^w")?;
                } else {
                    write!(f, "^{{{}}}", t.exponent)?;
                }
            }
            if t.coefficient > 1 {
                write!(f, "*{}", t.coefficient)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ordinal({self})")
    }
}

struct Parser<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, chars: src.chars().filter(|c| !c.is_whitespace()).collect(), pos: 0 }
    }

    fn fail<T>(&self, reason: impl Into<String>) -> Result<T> {
        Err(Error::OrdinalSyntax { input: self.src.to_string(), reason: reason.into() })
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_omega(&mut self) -> bool {
        self.eat('w') || self.eat('ω')
    }

    fn number(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.fail(format!("expected a number at position {start}"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        match digits.parse() {
            Ok(n) => Ok(n),
            Err(_) => self.fail("number too large"),
        }
    }

    fn sum(&mut self) -> Result<Ordinal> {
        let mut acc = self.term()?;
        while self.eat('+') {
            let t = self.term()?;
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Ordinal> {
        if !self.eat_omega() {
            return Ok(Ordinal::nat(self.number()?));
        }
        let exponent = if self.eat('^') { self.exponent()? } else { Ordinal::one() };
        let coefficient = if self.eat('*') { self.number()? } else { 1 };
        if coefficient == 0 {
            return self.fail("coefficient must be positive");
        }
        Ok(Ordinal::omega_power(exponent).mul_nat(coefficient))
    }

    fn exponent(&mut self) -> Result<Ordinal> {
        for (open, close) in [('{', '}'), ('(', ')')] {
            if self.eat(open) {
                let e = self.sum()?;
                if !self.eat(close) {
                    return self.fail(format!("expected `{close}`"));
                }
                return Ok(e);
            }
        }
        if self.eat_omega() {
            return Ok(Ordinal::omega());
        }
        Ok(Ordinal::nat(self.number()?))
    }
}

impl FromStr for Ordinal {
    type Err = Error;

    /// Parses `w^2*3 + w*2 + 5`; compound exponents go in braces, `w^{w+1}`.
    /// `ω` is accepted for `w`. Summands are combined with ordinal addition.
    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser::new(s);
        if p.chars.is_empty() {
            return p.fail("empty input");
        }
        let o = p.sum()?;
        if p.pos != p.chars.len() {
            return p.fail(format!("unexpected `{}`", p.chars[p.pos]));
        }
        Ok(o)
    }
}

impl Serialize for Ordinal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Ordinal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
