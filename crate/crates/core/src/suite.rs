//! The acceptance checks. Each returns a one-line summary on success and a
//! description of the first failure otherwise; the `check` command and the
//! `acceptance` test both run them from here.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::canonical::{canonical_rep, sperner_witness, trichotomy, Trichotomy};
use crate::cb_index::{brute_derivative, closure_index, symbolic_index, symbolic_rank, Probe};
use crate::certificate::{Certificate, CertificateKind, Claim, Env, Rejection};
use crate::coloring::HashColoring;
use crate::family_core::{check_thin, Family, FiniteSet, Violation, Window};
use crate::oracle;
use crate::ordinal::{Ordinal, Scheme};
use crate::ramsey_engine as engine;
use crate::uniform_system::FamilySpec;

pub const DEFAULT_SEED: u64 = 0x5c4e_1e7e;

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub id: u32,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
}

type Outcome = std::result::Result<String, String>;

type Check = fn(u64) -> Outcome;

pub const CRITERIA: [(u32, &str, Check); 11] = [
    (1, "fundamental-sequence identities", fundamental_identities),
    (2, "system law for sections", system_law),
    (3, "thinness and trichotomy", thin_and_trichotomy),
    (4, "finite uniform families are k-subsets", k_uniform),
    (5, "canonical representation is the unique decomposition", canonical_unique),
    (6, "symbolic and brute-force indexes agree", index_agreement),
    (7, "classical Ramsey base case", classical_ramsey),
    (8, "boundary examples of the hereditary dichotomy", boundary_examples),
    (9, "non-Sperner uniform family", non_sperner_regression),
    (10, "Schreier transfer", schreier_transfer),
    (11, "certificate soundness under mutation", mutation_soundness),
];

pub fn run(id: u32, seed: u64) -> Option<Report> {
    let &(id, title, check) = CRITERIA.iter().find(|c| c.0 == id)?;
    let (passed, detail) = match check(seed) {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Some(Report { id, title, passed, detail })
}

pub fn run_all(seed: u64) -> Vec<Report> {
    CRITERIA.iter().filter_map(|c| run(c.0, seed)).collect()
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn o(s: &str) -> Ordinal {
    s.parse().expect("ordinal literal")
}

fn fam(s: &str) -> FamilySpec {
    s.parse().expect("family literal")
}

fn window(lo: u32, hi: u32) -> Window {
    Window::range(lo, hi).expect("window")
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// A nonzero ordinal with up to three terms and exponents nested `depth` deep.
pub fn random_ordinal(rng: &mut impl Rng, depth: u32) -> Ordinal {
    let n = rng.gen_range(1..=3);
    let mut exps: Vec<Ordinal> = (0..n)
        .map(|_| {
            if depth == 0 || rng.gen_bool(0.4) {
                Ordinal::nat(rng.gen_range(0..4))
            } else {
                random_ordinal(rng, depth - 1)
            }
        })
        .collect();
    exps.sort_by(|a, b| b.cmp(a));
    exps.dedup();
    let terms = exps.into_iter().map(|e| (e, rng.gen_range(1..=3))).collect();
    Ordinal::from_terms(terms).expect("decreasing exponents")
}

// `w*c + d`, not zero. Exponents stay below `w^2`: the descent behind
// `(w^a)_n` has about `n^c` terms, and a nested exponent such as `w^(w^2)`
// would make it grow like `n^n`.
fn small_exponent(rng: &mut impl Rng, limit: bool) -> Ordinal {
    loop {
        let c = rng.gen_range(if limit { 1..=3 } else { 0..=3 });
        let d = if limit { 0 } else { rng.gen_range(0..=3) };
        let a = Ordinal::omega().mul_nat(c).add(&Ordinal::nat(d));
        if !a.is_zero() {
            return a;
        }
    }
}

fn fundamental_identities(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let fund = |x: &Ordinal, n: u32| x.fundamental(n).map_err(err);
    for case in 1..=5 {
        for _ in 0..200 {
            let n: u32 = rng.gen_range(1..=12);
            let (xi, n, expected) = match case {
                1 => {
                    let n = rng.gen_range(1..=100_000);
                    (Ordinal::omega(), n, Ordinal::nat(u64::from(n) - 1))
                }
                2 => {
                    let a = small_exponent(&mut rng, false);
                    let wa = Ordinal::omega_power(a.clone());
                    let exp = wa.mul_nat(u64::from(n - 1)).add(&fund(&wa, n)?);
                    (Ordinal::omega_power(a.succ()), n, exp)
                }
                3 => {
                    let a = small_exponent(&mut rng, true);
                    let an = Scheme::Wainer.limit_step(&a, n).map_err(err)?;
                    ensure!(!an.is_zero(), "sequence of {a} reaches 0 at {n}");
                    (Ordinal::omega_power(a), n, fund(&Ordinal::omega_power(an), n)?)
                }
                4 => {
                    let a = small_exponent(&mut rng, false);
                    let p = rng.gen_range(2..=6);
                    let wa = Ordinal::omega_power(a);
                    let exp = wa.mul_nat(p - 1).add(&fund(&wa, n)?);
                    (wa.mul_nat(p), n, exp)
                }
                _ => {
                    let mut exps = Vec::new();
                    while exps.len() < 2 {
                        exps = (0..rng.gen_range(2..=3)).map(|_| small_exponent(&mut rng, false)).collect();
                        exps.sort_by(|a, b| b.cmp(a));
                        exps.dedup();
                    }
                    let terms: Vec<(Ordinal, u64)> = exps.into_iter().map(|e| (e, rng.gen_range(1..=4))).collect();
                    let (last, p) = terms.last().cloned().expect("two terms");
                    let head = Ordinal::from_terms(terms[..terms.len() - 1].to_vec()).map_err(err)?;
                    let xi = Ordinal::from_terms(terms).map_err(err)?;
                    let exp = head.add(&fund(&Ordinal::omega_power(last).mul_nat(p), n)?);
                    (xi, n, exp)
                }
            };
            let got = fund(&xi, n)?;
            ensure!(got == expected, "case {case}: {xi} at {n} gave {got}, expected {expected}");
        }
    }
    Ok("1000 sampled identities, 200 for each of the five cases".into())
}

pub fn sample_ordinals() -> Vec<Ordinal> {
    ["1", "2", "3", "w", "w+1", "w*2", "w^2", "w^w"].iter().map(|s| o(s)).collect()
}

fn system_law(_: u64) -> Outcome {
    let w = window(1, 30);
    let mut sets = 0usize;
    for xi in sample_ordinals() {
        let a = FamilySpec::a(xi.clone());
        for m in 1..=12u32 {
            let sec = a.section(m, &w);
            let xm = xi.section_index(m, Scheme::Wainer).map_err(err)?.expect("nonzero");
            let lower = FamilySpec::a(xm.clone());
            let above = w.above(m);
            let mut listed = 0usize;
            for (i, t) in lower.enumerate(&above).enumerate() {
                ensure!(sec.get(i) == Some(&t), "A:{xi} at {m}: set {i} of A:{xm} above {m} is {t}, section has {:?}", sec.get(i));
                listed += 1;
            }
            ensure!(listed == sec.len(), "A:{xi} at {m}: section has {} sets, A:{xm} above {m} has {listed}", sec.len());
            sets += sec.len();
        }
    }
    Ok(format!("8 ordinals x 12 sections on 1..30, {sets} sets compared"))
}

fn thin_and_trichotomy(_: u64) -> Outcome {
    let w = window(1, 30);
    for xi in sample_ordinals() {
        let a = FamilySpec::a(xi.clone());
        if let Err(Violation { smaller, larger }) = check_thin(&a, &w) {
            return Err(format!("A:{xi} is not thin: {smaller} starts {larger}"));
        }
    }
    let subsets = oracle::all_subsets(&(1..=15).collect::<Vec<_>>());
    let mut count = 0usize;
    for xi in sample_ordinals() {
        let a = FamilySpec::a(xi.clone());
        let cf = oracle::closed_form(&a);
        for s in subsets.iter().filter(|s| !s.is_empty()) {
            let t = trichotomy(&a, s).map_err(err)?;
            let member_prefixes: Vec<FiniteSet> = s.prefixes().filter(|p| !p.is_empty() && a.contains(p)).collect();
            match &t {
                Trichotomy::ExtendsMember(p) => {
                    ensure!(member_prefixes == [p.clone()], "A:{xi}, {s}: member prefixes {member_prefixes:?}");
                }
                Trichotomy::ProperPrefixOfMember => {
                    ensure!(member_prefixes.is_empty(), "A:{xi}, {s}: has a member prefix");
                    ensure!(a.is_prefix(s) == Some(true) && !a.contains(s), "A:{xi}, {s}: not a proper prefix");
                }
            }
            if let Some(cf) = &cf {
                let proper = (cf.proper_prefix)(s.as_slice());
                let extends = (1..=s.len()).any(|k| (cf.member)(&s.as_slice()[..k]));
                ensure!(proper != extends, "closed form of A:{xi} is not a trichotomy at {s}");
                ensure!(proper == matches!(t, Trichotomy::ProperPrefixOfMember), "A:{xi}, {s}: closed form disagrees");
            }
            count += 1;
        }
    }
    Ok(format!("8 families thin on 1..30; {count} trichotomies over subsets of 1..15"))
}

fn k_uniform(_: u64) -> Outcome {
    let w = window(1, 12);
    for k in 0..=5u64 {
        let got: Vec<FiniteSet> = FamilySpec::a(Ordinal::nat(k)).enumerate(&w).collect();
        let expected = oracle::k_subsets(w.ground(), k as usize);
        ensure!(got == expected, "A:{k} has {} sets on 1..12, expected {}", got.len(), expected.len());
    }
    Ok("A:k equals the k-subsets of 1..12 for k = 0..5".into())
}

fn canonical_unique(_: u64) -> Outcome {
    let subsets = oracle::all_subsets(&(1..=15).collect::<Vec<_>>());
    let mut count = 0;
    for lit in ["A:2", "A:w", "A:w+1", "A:w*2"] {
        let spec = fam(lit);
        let cf = oracle::closed_form(&spec).expect("closed form");
        for a in subsets.iter().filter(|s| !s.is_empty()) {
            let greedy = canonical_rep(&spec, a).map_err(err)?;
            let all = oracle::decompositions(a, &cf);
            ensure!(all == [greedy.clone()], "{lit}, {a}: greedy {greedy:?}, brute force {all:?}");
            ensure!(greedy.reassemble() == *a, "{lit}, {a}: blocks do not reassemble");
            count += 1;
        }
    }
    Ok(format!("{count} decompositions unique and equal to the greedy result"))
}

fn index_agreement(seed: u64) -> Outcome {
    let w = window(1, 14);
    for k in 1..=4u64 {
        let spec = FamilySpec::a(Ordinal::nat(k));
        let down = spec.clone().down();
        let table = brute_derivative(&down, &w, k as u32 + 2, &Probe::for_window(&w)).map_err(err)?;
        let sym = symbolic_index(&down).expect("closed form");
        ensure!(table.index == Some(k as u32 + 1), "(A:{k})_* brute-force index {:?}", table.index);
        ensure!(sym == Ordinal::nat(k + 1), "(A:{k})_* symbolic index {sym}");
        for (s, &r) in &table.ranks {
            let expect = symbolic_rank(&spec, s).map_err(err)?;
            ensure!(expect == Ordinal::from(u64::from(r)), "A:{k}, {s}: brute rank {r}, symbolic {expect}");
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sample = sample_ordinals();
    sample.extend((0..40).map(|_| random_ordinal(&mut rng, 2)));
    for xi in &sample {
        let spec = FamilySpec::a(xi.clone());
        ensure!(symbolic_index(&spec.clone().down()) == Some(xi.succ()), "(A:{xi})_* index");
        ensure!(closure_index(&spec).map_err(err)? == xi.succ(), "closure index of A:{xi}");
    }
    Ok(format!("brute force gives k+1 for k = 1..4 on 1..14; {} symbolic indexes equal xi+1", sample.len()))
}

fn classical_ramsey(_: u64) -> Outcome {
    let w = window(1, 18);
    let a2 = fam("A:2");
    for seed in 0..100 {
        let col = HashColoring { seed, colors: 2 };
        let cert = engine::homogenize(&a2, &col, &w, 4).map_err(err)?;
        let Some(cert) = cert else { return Err(format!("no homogeneous 4-set for hash seed {seed}")) };
        cert.verify(&Env::new()).map_err(|r| format!("seed {seed}: {r}"))?;
    }
    Ok("100/100 colorings of pairs in 1..18 have a certified homogeneous 4-set".into())
}

fn boundary_examples(_: u64) -> Outcome {
    let w = window(1, 30);
    let cases = [("F:1", "exL", engine::Branch::B), ("down:exL", "exR", engine::Branch::A)];
    let mut out = Vec::new();
    for (h, spec, branch) in cases {
        let res = engine::hereditary_dichotomy(&fam(h), &fam(spec), &w, 30).map_err(err)?;
        let Some(res) = res else { return Err(format!("{h} vs {spec}: no witness on 1..30")) };
        ensure!(res.branches == [branch], "{h} vs {spec}: branches {:?}", res.branches);
        for c in &res.certificates {
            c.verify(&Env::new()).map_err(|r| format!("{h} vs {spec}: {r}"))?;
        }
        out.push(format!("{h} vs {spec}: branch {branch:?} on {}", res.witness.len()));
    }
    Ok(format!("{} (whole window, certificates re-checked)", out.join("; ")))
}

fn non_sperner_regression(_: u64) -> Outcome {
    let ex = fam("ex112");
    let big: FiniteSet = [1, 2, 3, 4, 5, 6].into();
    let small: FiniteSet = [2, 3, 4, 5].into();
    ensure!(ex.contains(&big) && ex.contains(&small), "membership of the two vectors");
    let w = window(1, 12);
    let v = sperner_witness(&ex, &w);
    ensure!(v == Some(Violation { smaller: small, larger: big }), "Sperner witness {v:?}");
    ensure!(check_thin(&ex, &w).is_ok(), "ex112 not thin on 1..12");
    Ok("both vectors are members; the witness pair is found; thin on 1..12".into())
}

fn schreier_transfer(_: u64) -> Outcome {
    let w = window(1, 25);
    let mut out = Vec::new();
    for xi in ["1", "2"] {
        let c = engine::schreier_transfer(&o(xi), &w, Scheme::Wainer).map_err(err)?;
        let Some(c) = c else { return Err(format!("no transfer for xi = {xi} on 1..25")) };
        let expected: FiniteSet = FiniteSet::new((3..=25).collect()).map_err(err)?;
        ensure!(c.witness == expected, "xi = {xi}: witness {} is not 1..25 less two", c.witness);
        c.verify(&Env::new()).map_err(|r| format!("xi = {xi}: {r}"))?;
        out.push(format!("xi = {xi}: {} sets checked", c.search.explored));
    }
    Ok(format!("F(L) in (B)^* in F on 1..25 with L = 3..25 ({})", out.join(", ")))
}

/// One certificate of every kind, as produced by the engine.
pub fn sample_certificates() -> crate::Result<Vec<Certificate>> {
    let missing = |what: &str| crate::Error::Precondition(format!("no {what} certificate"));
    let mut out = Vec::new();
    let col = HashColoring { seed: 1, colors: 2 };
    out.push(engine::homogenize(&fam("A:2"), &col, &window(1, 18), 4)?.ok_or_else(|| missing("homogeneous"))?);
    out.push(engine::sperner_refine(&fam("ex112"), &window(1, 25), 6)?.ok_or_else(|| missing("Sperner"))?);
    let a = engine::hereditary_dichotomy(&fam("down:exL"), &fam("exR"), &window(1, 20), 10)?.ok_or_else(|| missing("branch A"))?;
    out.extend(a.certificates);
    let b = engine::hereditary_dichotomy(&fam("F:1"), &fam("exL"), &window(1, 20), 10)?.ok_or_else(|| missing("branch B"))?;
    out.extend(b.certificates);
    out.push(engine::rank_separation(&o("2"), &o("w"), &window(1, 20), 10, Scheme::Wainer)?.ok_or_else(|| missing("separation"))?);
    out.push(engine::detect_chain(&fam("F:1"), &window(1, 14), 5)?.ok_or_else(|| missing("chain"))?);
    out.push(engine::schreier_transfer(&o("1"), &window(1, 18), Scheme::Wainer)?.ok_or_else(|| missing("transfer"))?);
    Ok(out)
}

fn replace_random(s: &FiniteSet, w: &Window, rng: &mut impl Rng) -> FiniteSet {
    let Some(&x) = s.as_slice().choose(rng) else { return s.clone() };
    let free: Vec<u32> = w.ground().iter().copied().filter(|y| !s.contains(*y)).collect();
    match free.choose(rng) {
        Some(&y) => s.removed(x).inserted(y),
        None => s.removed(x),
    }
}

fn remove_random(s: &FiniteSet, rng: &mut impl Rng) -> FiniteSet {
    match s.as_slice().choose(rng) {
        Some(&x) => s.removed(x),
        None => s.clone(),
    }
}

/// A random single change: drop or replace a witness element, or alter the
/// claim itself.
pub fn mutate(c: &Certificate, rng: &mut impl Rng) -> Certificate {
    loop {
        let mut m = c.clone();
        match rng.gen_range(0..3) {
            0 => m.witness = remove_random(&m.witness, rng),
            1 => m.witness = replace_random(&m.witness, &m.window, rng),
            _ => match &mut m.claim {
                Claim::Homogeneous { color, .. } => *color = Some(color.map_or(1, |c| 3 - c)),
                Claim::SpernerRefined { family } => *family = "ex112".into(),
                Claim::DichotomyBranchA { hereditary, family } => {
                    m.claim = Claim::DichotomyBranchB { hereditary: hereditary.clone(), family: family.clone() }
                }
                Claim::DichotomyBranchB { hereditary, family } => {
                    m.claim = Claim::DichotomyBranchA { hereditary: hereditary.clone(), family: family.clone() }
                }
                Claim::Separation { lower, upper } => std::mem::swap(lower, upper),
                Claim::Chain { chain, .. } => {
                    if let Some(i) = (0..chain.len()).collect::<Vec<_>>().choose(rng).copied() {
                        chain[i] = replace_random(&chain[i], &c.window, rng);
                    }
                }
                Claim::Transfer { xi, .. } => *xi = xi.succ(),
            },
        }
        if m != *c {
            return m;
        }
    }
}

fn mutation_soundness(seed: u64) -> Outcome {
    let certs = sample_certificates().map_err(err)?;
    let env = Env::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut kinds: Vec<CertificateKind> = Vec::new();
    let (mut substantive, mut transcript) = (0, 0);
    for c in &certs {
        c.verify(&env).map_err(|r| format!("unmutated {} rejected: {r}", c.kind()))?;
        for i in 0..100 {
            let m = mutate(c, &mut rng);
            match m.verify(&env) {
                Ok(()) => return Err(format!("{} mutant {i} accepted: {}", c.kind(), serde_json::to_string(&m).unwrap_or_default())),
                Err(Rejection::TranscriptMismatch) => transcript += 1,
                Err(_) => substantive += 1,
            }
        }
        kinds.push(c.kind());
    }
    Ok(format!(
        "{} mutants over {} kinds all rejected ({substantive} by a failed check, {transcript} by transcript only)",
        substantive + transcript,
        kinds.len()
    ))
}
