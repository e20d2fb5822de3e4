//! Certificates and their checker.
//!
//! A certificate states a claim about a finite witness. The checker walks the
//! witness exhaustively, querying the families and colorings named in the
//! claim, and hashes every item it checked into a transcript. Searches run
//! the same checker before emitting, so a certificate whose transcript
//! matches has been checked twice against the same oracles.

use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::coloring::{parse_coloring, Coloring};
use crate::family_core::{spread, walk_subsets, Family, FiniteSet, Nat, Window};
use crate::ordinal::{Ordinal, Scheme};
use crate::uniform_system::FamilySpec;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Claim {
    /// Every member of `family` inside the witness has color `color`
    /// (`None` when there are no such members).
    Homogeneous { family: String, coloring: String, color: Option<u32> },
    /// Members of `family` inside the witness are pairwise incomparable.
    SpernerRefined { family: String },
    /// Every nonempty subset of the witness that lies in the downward closure
    /// of `family` belongs to `hereditary`.
    DichotomyBranchA { hereditary: String, family: String },
    /// Every nonempty member of `hereditary` inside the witness is a proper
    /// initial segment of a member of `family`.
    DichotomyBranchB { hereditary: String, family: String },
    /// Members of `lower` inside the witness are proper initial segments of
    /// members of `upper`.
    Separation { lower: String, upper: String },
    /// `chain` is a strictly increasing run of initial segments in `hereditary`.
    Chain { hereditary: String, chain: Vec<FiniteSet> },
    /// `F_xi(witness)` lies in `target`; with `upper`, also every nonempty
    /// member of `target` in the window lies in `F_xi`.
    Transfer { xi: Ordinal, scheme: Scheme, target: String, upper: bool },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CertificateKind {
    Homogeneous,
    SpernerRefined,
    DichotomyBranchA,
    DichotomyBranchB,
    Separation,
    Chain,
    Transfer,
}

impl Claim {
    pub fn kind(&self) -> CertificateKind {
        match self {
            Claim::Homogeneous { .. } => CertificateKind::Homogeneous,
            Claim::SpernerRefined { .. } => CertificateKind::SpernerRefined,
            Claim::DichotomyBranchA { .. } => CertificateKind::DichotomyBranchA,
            Claim::DichotomyBranchB { .. } => CertificateKind::DichotomyBranchB,
            Claim::Separation { .. } => CertificateKind::Separation,
            Claim::Chain { .. } => CertificateKind::Chain,
            Claim::Transfer { .. } => CertificateKind::Transfer,
        }
    }
}

impl fmt::Display for CertificateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// How the witness was found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchInfo {
    pub order: String,
    pub explored: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub route: Option<String>,
}

impl SearchInfo {
    pub fn lex(explored: u64) -> Self {
        SearchInfo { order: "lex".into(), explored, route: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    #[serde(flatten)]
    pub claim: Claim,
    pub witness: FiniteSet,
    pub window: Window,
    pub target: usize,
    pub search: SearchInfo,
    pub transcript: String,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Rejection {
    #[error("label `{0}` does not name a known family or coloring")]
    LabelMismatch(String),
    #[error("witness {0} is not inside the window")]
    WitnessOutsideWindow(FiniteSet),
    #[error("expected {expected} elements, found {got}")]
    WrongSize { expected: usize, got: usize },
    #[error("check failed at {set}: {detail}")]
    Violation { set: FiniteSet, detail: String },
    #[error("oracle error: {0}")]
    Oracle(String),
    #[error("transcript does not match the recomputed one")]
    TranscriptMismatch,
}

/// Families and colorings available to the checker beyond the built-in
/// literals, looked up by label.
#[derive(Default)]
pub struct Env<'a> {
    families: Vec<&'a dyn Family>,
    colorings: Vec<&'a dyn Coloring>,
}

impl<'a> Env<'a> {
    pub fn new() -> Self {
        Env::default()
    }

    pub fn with_family(mut self, f: &'a dyn Family) -> Self {
        self.families.push(f);
        self
    }

    pub fn with_coloring(mut self, c: &'a dyn Coloring) -> Self {
        self.colorings.push(c);
        self
    }

    fn family(&self, label: &str) -> Result<Box<dyn Family + 'a>, Rejection> {
        if let Some(f) = self.families.iter().find(|f| f.label() == label) {
            return Ok(Box::new(*f));
        }
        spec(label).map(|s| Box::new(s) as Box<dyn Family>)
    }

    fn coloring(&self, label: &str) -> Result<Box<dyn Coloring + 'a>, Rejection> {
        if let Some(c) = self.colorings.iter().find(|c| c.label() == label) {
            return Ok(Box::new(*c));
        }
        parse_coloring(label, 0).map_err(|_| Rejection::LabelMismatch(label.into()))
    }
}

fn spec(label: &str) -> Result<FamilySpec, Rejection> {
    label.parse().map_err(|_| Rejection::LabelMismatch(label.into()))
}

// Items are length-prefixed, so the byte stream determines the sequence
// of checked items.
struct Transcript {
    hash: Sha256,
    buf: Vec<u8>,
}

impl Transcript {
    fn new() -> Self {
        Transcript { hash: Sha256::new(), buf: Vec::with_capacity(1 << 16) }
    }

    fn text(&mut self, s: &str) {
        self.buf.push(b'T');
        self.buf.extend_from_slice(&(s.len() as u64).to_le_bytes());
        self.buf.extend_from_slice(s.as_bytes());
        self.flush_if_full();
    }

    fn set(&mut self, s: &FiniteSet) {
        self.buf.push(b'S');
        self.buf.extend_from_slice(&(s.len() as u32).to_le_bytes());
        for x in s.iter() {
            self.buf.extend_from_slice(&x.to_le_bytes());
        }
        self.flush_if_full();
    }

    fn color(&mut self, c: u32) {
        self.buf.push(b'C');
        self.buf.extend_from_slice(&c.to_le_bytes());
    }

    fn flush_if_full(&mut self) {
        if self.buf.len() >= 1 << 16 {
            self.hash.update(&self.buf);
            self.buf.clear();
        }
    }

    fn finish(mut self) -> String {
        self.hash.update(&self.buf);
        self.hash.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }
}

fn violation(set: &FiniteSet, detail: impl Into<String>) -> Rejection {
    Rejection::Violation { set: set.clone(), detail: detail.into() }
}

// Members of `fam` that are subsets of `base`, walking only initial segments
// of members.
fn members_within(fam: &dyn Family, base: &FiniteSet) -> Vec<FiniteSet> {
    let mut out = Vec::new();
    walk_subsets(base.as_slice(), |t| {
        if fam.contains(t) {
            out.push(t.clone());
        }
        t.is_empty() || fam.is_prefix(t) != Some(false)
    });
    out.sort();
    out
}

/// Recomputes the transcript of a claim, rejecting it if any check fails.
pub fn transcript_for(
    claim: &Claim,
    witness: &FiniteSet,
    window: &Window,
    target: usize,
    env: &Env,
) -> Result<String, Rejection> {
    let mut tr = Transcript::new();
    let header = serde_json::to_string(&(claim, witness, window, target)).expect("serializable");
    tr.text(&header);
    if !window.contains_set(witness) {
        return Err(Rejection::WitnessOutsideWindow(witness.clone()));
    }
    let sized = !matches!(claim, Claim::Chain { .. } | Claim::Transfer { .. });
    if sized && witness.len() != target {
        return Err(Rejection::WrongSize { expected: target, got: witness.len() });
    }
    match claim {
        Claim::Homogeneous { family, coloring, color } => {
            let fam = env.family(family)?;
            let col = env.coloring(coloring)?;
            let mut seen: Option<u32> = None;
            for t in members_within(fam.as_ref(), witness) {
                let c = col.color(&t).map_err(|e| Rejection::Oracle(e.to_string()))?;
                tr.set(&t);
                tr.color(c);
                match seen {
                    Some(p) if p != c => return Err(violation(&t, format!("color {c}, earlier members have {p}"))),
                    _ => seen = Some(c),
                }
            }
            if seen != *color {
                return Err(violation(witness, format!("claimed color {color:?}, found {seen:?}")));
            }
        }
        Claim::SpernerRefined { family } => {
            let fam = env.family(family)?;
            let members = members_within(fam.as_ref(), witness);
            for (i, s) in members.iter().enumerate() {
                tr.set(s);
                for t in &members[i + 1..] {
                    if s.is_proper_subset_of(t) {
                        return Err(violation(t, format!("contains the member {s}")));
                    }
                }
            }
        }
        Claim::DichotomyBranchA { hereditary, family } => {
            let h = env.family(hereditary)?;
            let down = spec(family)?.down();
            let mut bad = None;
            walk_subsets(witness.as_slice(), |t| {
                if bad.is_some() || !down.contains(t) {
                    return false;
                }
                if !t.is_empty() {
                    tr.set(t);
                    if !h.contains(t) {
                        bad = Some(violation(t, format!("in the closure of {family} but not in {hereditary}")));
                    }
                }
                true
            });
            if let Some(r) = bad {
                return Err(r);
            }
        }
        Claim::DichotomyBranchB { hereditary, family } => {
            let h = env.family(hereditary)?;
            let fam = env.family(family)?;
            let mut bad = None;
            walk_subsets(witness.as_slice(), |t| {
                if bad.is_some() {
                    return false;
                }
                if t.is_empty() {
                    return true;
                }
                if !h.contains(t) {
                    return false;
                }
                tr.set(t);
                if fam.is_prefix(t) != Some(true) || fam.contains(t) {
                    bad = Some(violation(t, format!("not a proper initial segment of a member of {family}")));
                }
                true
            });
            if let Some(r) = bad {
                return Err(r);
            }
        }
        Claim::Separation { lower, upper } => {
            let lo = env.family(lower)?;
            let up = env.family(upper)?;
            for t in members_within(lo.as_ref(), witness) {
                tr.set(&t);
                if up.is_prefix(&t) != Some(true) || up.contains(&t) {
                    return Err(violation(&t, format!("not a proper initial segment of a member of {upper}")));
                }
            }
        }
        Claim::Chain { hereditary, chain } => {
            let h = env.family(hereditary)?;
            if chain.len() != target {
                return Err(Rejection::WrongSize { expected: target, got: chain.len() });
            }
            if chain.last().cloned().unwrap_or_default() != *witness {
                return Err(violation(witness, "witness is not the last set of the chain"));
            }
            for (i, s) in chain.iter().enumerate() {
                tr.set(s);
                if !window.contains_set(s) {
                    return Err(Rejection::WitnessOutsideWindow(s.clone()));
                }
                if !h.contains(s) {
                    return Err(violation(s, format!("not in {hereditary}")));
                }
                if i > 0 && !chain[i - 1].is_proper_initial_segment_of(s) {
                    return Err(violation(s, format!("does not properly extend {}", chain[i - 1])));
                }
            }
        }
        Claim::Transfer { xi, scheme, target: tgt, upper } => {
            let f = FamilySpec::f(xi.clone()).with_scheme(*scheme);
            let goal = env.family(tgt)?;
            let l = witness.as_slice();
            let indices: Vec<Nat> = (1..=l.len() as Nat).collect();
            let mut bad = None;
            walk_subsets(&indices, |t| {
                if bad.is_some() {
                    return false;
                }
                if t.is_empty() {
                    return true;
                }
                if !f.contains(t) {
                    return false;
                }
                let img = spread(t, l).expect("indices within witness");
                tr.set(t);
                tr.set(&img);
                if !goal.contains(&img) {
                    bad = Some(violation(&img, format!("image of {t} is not in {tgt}")));
                }
                true
            });
            if *upper && bad.is_none() {
                walk_subsets(window.ground(), |t| {
                    if bad.is_some() || !goal.contains(t) {
                        return false;
                    }
                    if !t.is_empty() {
                        tr.set(t);
                        if !f.contains(t) {
                            bad = Some(violation(t, format!("in {tgt} but not in F:{xi}")));
                        }
                    }
                    true
                });
            }
            if let Some(r) = bad {
                return Err(r);
            }
        }
    }
    Ok(tr.finish())
}

impl Certificate {
    /// Runs the checker and stamps the transcript.
    pub fn issue(
        claim: Claim,
        witness: FiniteSet,
        window: Window,
        target: usize,
        search: SearchInfo,
        env: &Env,
    ) -> Result<Certificate, Rejection> {
        let transcript = transcript_for(&claim, &witness, &window, target, env)?;
        Ok(Certificate { claim, witness, window, target, search, transcript })
    }

    pub fn kind(&self) -> CertificateKind {
        self.claim.kind()
    }

    /// Full re-check: every condition of the claim and the transcript.
    pub fn verify(&self, env: &Env) -> Result<(), Rejection> {
        let t = transcript_for(&self.claim, &self.witness, &self.window, self.target, env)?;
        if t != self.transcript {
            return Err(Rejection::TranscriptMismatch);
        }
        Ok(())
    }
}
