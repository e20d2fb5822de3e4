//! `schreier`: command-line access to the uniform families library.
//!
//! Exit status is 0 on success, 1 on a logical negative (a non-member, an
//! exhausted window, a failed check) and 2 on a usage error.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use schreier::canonical::{canonical_rep, trichotomy};
use schreier::cb_index::{brute_derivative, closure_index, symbolic_index, symbolic_rank, Probe};
use schreier::certificate::{Certificate, Env};
use schreier::coloring::parse_coloring;
use schreier::ramsey_engine::{self as engine, JuddOutcome, StreamBudget};
use schreier::suite;
use schreier::{Error, Family, FamilySpec, FiniteSet, Nat, Ordinal, Scheme, Window};

#[derive(Parser)]
#[command(name = "schreier", version, about = "Uniform families of finite sets indexed by countable ordinals")]
struct Cli {
    /// Print JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    /// Seed for pseudorandom colorings and sampled checks.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Fundamental-sequence scheme: wainer or intrinsic.
    #[arg(long, global = true, default_value = "wainer")]
    scheme: Scheme,

    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args)]
struct WindowArgs {
    /// Inclusive range, `lo..hi`.
    #[arg(long, default_value = "1..20")]
    window: Window,

    /// Restrict the window to these points, e.g. `2,4,6,8`.
    #[arg(long, value_delimiter = ',')]
    ground: Option<Vec<Nat>>,
}

impl WindowArgs {
    fn get(&self) -> Result<Window, Error> {
        match &self.ground {
            Some(g) => Window::with_ground(self.window.lo(), self.window.hi(), g.clone()),
            None => Ok(self.window.clone()),
        }
    }
}

#[derive(Subcommand)]
enum Verb {
    /// Is the set a member of the family?
    Member {
        #[arg(long)]
        family: FamilySpec,
        #[arg(long)]
        set: FiniteSet,
    },
    /// List the members inside a window.
    Enum {
        #[arg(long)]
        family: FamilySpec,
        #[command(flatten)]
        window: WindowArgs,
    },
    /// Sets `s` above `m` with `{m} ∪ s` a member.
    Section {
        #[arg(long)]
        family: FamilySpec,
        #[arg(long)]
        at: Nat,
        #[command(flatten)]
        window: WindowArgs,
    },
    /// Canonical representation: member blocks and a tail.
    Canon {
        #[arg(long)]
        family: FamilySpec,
        #[arg(long)]
        set: FiniteSet,
    },
    /// Cantor-Bendixson rank of a set in the closure of a uniform family,
    /// or with `--steps` a brute-force rank table on the window.
    Rank {
        #[arg(long)]
        family: FamilySpec,
        #[arg(long)]
        set: Option<FiniteSet>,
        #[arg(long)]
        steps: Option<u32>,
        #[command(flatten)]
        window: WindowArgs,
    },
    /// Strong Cantor-Bendixson index.
    Index {
        /// Index of the downward closure of this uniform family.
        #[arg(long, conflicts_with = "family")]
        family_closure: Option<FamilySpec>,
        /// Index of this family, when known in closed form.
        #[arg(long)]
        family: Option<FamilySpec>,
    },
    /// Terms of a fundamental sequence.
    Fundseq {
        #[arg(long)]
        ordinal: Ordinal,
        /// A single index.
        #[arg(long, conflicts_with = "upto")]
        at: Option<u32>,
        /// All indices from 1 to this one.
        #[arg(long)]
        upto: Option<u32>,
    },
    /// Normal form, classification and optional comparison or sum.
    Ord {
        ordinal: Ordinal,
        #[arg(long)]
        compare: Option<Ordinal>,
        #[arg(long)]
        add: Option<Ordinal>,
    },
    /// A subset of the window on which the family's members share a color.
    Homogenize {
        #[arg(long)]
        family: FamilySpec,
        /// parity-sum, span-threshold, hash, hash:<seed>[:<colors>] or exec:[<colors>:]<command>.
        #[arg(long)]
        coloring: String,
        #[arg(long)]
        target: Option<usize>,
        /// Run the stream recursion over the window instead of a search.
        #[arg(long)]
        stream: bool,
        #[arg(long, default_value_t = 64)]
        max_depth: usize,
        #[command(flatten)]
        window: WindowArgs,
    },
    /// Hereditary dichotomy against a uniform family.
    Dichotomy {
        #[arg(long)]
        hereditary: FamilySpec,
        #[arg(long)]
        family: FamilySpec,
        /// Witness size; the whole window by default.
        #[arg(long)]
        target: Option<usize>,
        #[command(flatten)]
        window: WindowArgs,
    },
    /// Members of `A_lower` as proper initial segments of `A_upper` members.
    Separate {
        #[arg(long)]
        lower: Ordinal,
        #[arg(long)]
        upper: Ordinal,
        #[arg(long)]
        target: Option<usize>,
        #[command(flatten)]
        window: WindowArgs,
    },
    /// A chain of proper end-extensions inside a family.
    Chain {
        #[arg(long)]
        family: FamilySpec,
        #[arg(long)]
        depth: usize,
        #[command(flatten)]
        window: WindowArgs,
    },
    /// Schreier-family transfer: `F_xi(L)` inside a target family.
    Transfer {
        #[arg(long)]
        xi: Ordinal,
        /// Transfer into this hereditary family instead of `(B_xi)^*`.
        #[arg(long)]
        family: Option<FamilySpec>,
        /// Index of `--family`, for the large-index route.
        #[arg(long, requires = "family")]
        sigma: Option<Ordinal>,
        /// Assume `--family` meets `B_xi` on every infinite set.
        #[arg(long, requires = "family", conflicts_with = "sigma")]
        assume_dense: bool,
        /// Witness size for the dichotomy route.
        #[arg(long)]
        target: Option<usize>,
        #[command(flatten)]
        window: WindowArgs,
    },
    /// Verify a certificate read from a JSON file (`-` for stdin).
    Verify { file: String },
    /// Run the acceptance criteria.
    Check {
        /// Only these criteria.
        #[arg(long = "criterion")]
        criteria: Vec<u32>,
    },
}

struct Output {
    ok: bool,
    text: String,
    json: Value,
}

impl Output {
    fn new(ok: bool, text: impl Into<String>, json: Value) -> Self {
        Output { ok, text: text.into(), json }
    }
}

enum Failure {
    Usage(String),
    Negative(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::OrdinalSyntax { .. }
            | Error::SetSyntax { .. }
            | Error::WindowSyntax { .. }
            | Error::FamilySyntax(_)
            | Error::ColoringSyntax(_)
            | Error::NotStrictlyIncreasing(_)
            | Error::NotLimit(_)
            | Error::ZeroIndex
            | Error::InvalidWindow(_)
            | Error::NotUniform(_)
            | Error::Precondition(_) => Failure::Usage(e.to_string()),
            _ => Failure::Negative(e.to_string()),
        }
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn sets_text(sets: &[FiniteSet]) -> String {
    sets.iter().map(|s| s.to_string()).collect::<Vec<_>>().join("\n")
}

fn certificate_output(c: Option<Certificate>, what: &str) -> Output {
    match c {
        Some(c) => {
            let text = format!("{} witness {} ({} nodes explored)", c.kind(), c.witness, c.search.explored);
            Output::new(true, text, to_json(&c))
        }
        None => Output::new(false, format!("no {what} in the window"), Value::Null),
    }
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let scheme = cli.scheme;
    let seed = cli.seed.unwrap_or(suite::DEFAULT_SEED);
    let with = |f: &FamilySpec| f.clone().with_scheme(scheme);
    Ok(match &cli.verb {
        Verb::Member { family, set } => {
            let ok = with(family).contains(set);
            Output::new(ok, ok.to_string(), json!({ "family": family.to_string(), "set": set, "member": ok }))
        }
        Verb::Enum { family, window } => {
            let w = window.get()?;
            let members: Vec<FiniteSet> = with(family).enumerate(&w).collect();
            let j = json!({ "family": family.to_string(), "window": w, "members": members });
            Output::new(true, sets_text(&members), j)
        }
        Verb::Section { family, at, window } => {
            let w = window.get()?;
            let members = with(family).section(*at, &w);
            let j = json!({ "family": family.to_string(), "at": at, "window": w, "members": members });
            Output::new(true, sets_text(&members), j)
        }
        Verb::Canon { family, set } => {
            let f = with(family);
            let rep = canonical_rep(&f, set)?;
            let t = trichotomy(&f, set)?;
            let blocks: Vec<String> = rep.blocks.iter().map(|b| b.to_string()).collect();
            let text = format!("blocks {}\ntail {}\ntype {}", blocks.join(" "), rep.tail, rep.rep_type);
            let mut j = to_json(&rep);
            j["trichotomy"] = to_json(&t);
            Output::new(true, text, j)
        }
        Verb::Rank { family, set, steps, window } => {
            let f = with(family);
            match (set, steps) {
                (Some(s), None) => {
                    let r = symbolic_rank(&f, s)?;
                    Output::new(true, r.to_string(), json!({ "family": family.to_string(), "set": s, "rank": r }))
                }
                (None, Some(k)) => {
                    let w = window.get()?;
                    let table = brute_derivative(&f, &w, *k, &Probe::for_window(&w))?;
                    let mut lines: Vec<String> = table.ranks.iter().map(|(s, r)| format!("{s} {r}")).collect();
                    lines.push(match table.index {
                        Some(i) => format!("index {i}"),
                        None => format!("index above {k}"),
                    });
                    Output::new(true, lines.join("\n"), to_json(&table))
                }
                _ => return Err(Failure::Usage("rank needs exactly one of --set and --steps".into())),
            }
        }
        Verb::Index { family_closure, family } => {
            let (label, idx) = match (family_closure, family) {
                (Some(f), None) => (format!("down:{f}"), closure_index(&with(f))?),
                (None, Some(f)) => {
                    let idx = symbolic_index(&with(f))
                        .ok_or_else(|| Failure::Negative(format!("no closed-form index for {f}")))?;
                    (f.to_string(), idx)
                }
                _ => return Err(Failure::Usage("index needs --family-closure or --family".into())),
            };
            Output::new(true, idx.to_string(), json!({ "family": label, "index": idx }))
        }
        Verb::Fundseq { ordinal, at, upto } => {
            let idx: Vec<u32> = match (at, upto) {
                (Some(n), None) => vec![*n],
                (None, Some(n)) => (1..=*n).collect(),
                _ => return Err(Failure::Usage("fundseq needs --at or --upto".into())),
            };
            let mut terms = Vec::new();
            for n in &idx {
                terms.push(ordinal.fundamental_with(*n, scheme)?);
            }
            let text = terms.iter().map(|t| t.to_string()).collect::<Vec<_>>().join("\n");
            let j = json!({ "ordinal": ordinal, "scheme": scheme.to_string(), "indices": idx, "terms": terms });
            Output::new(true, text, j)
        }
        Verb::Ord { ordinal, compare, add } => {
            let kind = if ordinal.is_zero() {
                "zero"
            } else if ordinal.is_limit() {
                "limit"
            } else {
                "successor"
            };
            let mut lines = vec![ordinal.to_string(), kind.to_string()];
            let mut j = json!({ "ordinal": ordinal, "kind": kind });
            if let Some(other) = compare {
                let c = match ordinal.cmp(other) {
                    std::cmp::Ordering::Less => "less",
                    std::cmp::Ordering::Equal => "equal",
                    std::cmp::Ordering::Greater => "greater",
                };
                lines.push(c.to_string());
                j["compare"] = c.into();
            }
            if let Some(other) = add {
                let sum = ordinal.add(other);
                lines.push(sum.to_string());
                j["sum"] = to_json(&sum);
            }
            Output::new(true, lines.join("\n"), j)
        }
        Verb::Homogenize { family, coloring, target, stream, max_depth, window } => {
            let w = window.get()?;
            let f = with(family);
            let col = parse_coloring(coloring, seed)?;
            if *stream {
                let budget = StreamBudget { horizon: w.ground().len(), max_depth: *max_depth };
                let out = engine::homogenize_stream(&f, col.as_ref(), w.ground().to_vec(), None, budget)?;
                let color = out.color.map_or("none".to_string(), |c| c.to_string());
                Output::new(true, format!("prefix {} color {color}", out.prefix), to_json(&out))
            } else {
                let target = target.ok_or_else(|| Failure::Usage("homogenize needs --target".into()))?;
                certificate_output(engine::homogenize(&f, col.as_ref(), &w, target)?, "homogeneous set")
            }
        }
        Verb::Dichotomy { hereditary, family, target, window } => {
            let w = window.get()?;
            let target = target.unwrap_or(w.ground().len());
            match engine::hereditary_dichotomy(&with(hereditary), &with(family), &w, target)? {
                Some(out) => {
                    let branches: Vec<String> = out.branches.iter().map(|b| format!("{b:?}")).collect();
                    Output::new(true, format!("branch {} on {}", branches.join(" and "), out.witness), to_json(&out))
                }
                None => Output::new(false, "no witness in the window", Value::Null),
            }
        }
        Verb::Separate { lower, upper, target, window } => {
            let w = window.get()?;
            let target = target.unwrap_or(w.ground().len());
            certificate_output(engine::rank_separation(lower, upper, &w, target, scheme)?, "separating set")
        }
        Verb::Chain { family, depth, window } => {
            let w = window.get()?;
            match engine::detect_chain(&with(family), &w, *depth)? {
                Some(c) => {
                    let text = match &c.claim {
                        schreier::certificate::Claim::Chain { chain, .. } => sets_text(chain),
                        _ => c.witness.to_string(),
                    };
                    Output::new(true, text, to_json(&c))
                }
                None => Output::new(false, format!("no chain of depth {depth} in the window"), Value::Null),
            }
        }
        Verb::Transfer { xi, family, sigma, assume_dense, target, window } => {
            let w = window.get()?;
            match (family, sigma) {
                (None, _) => certificate_output(engine::schreier_transfer(xi, &w, scheme)?, "transfer"),
                (Some(h), Some(s)) => {
                    certificate_output(engine::large_index_transfer(&with(h), s, xi, &w, scheme)?, "transfer")
                }
                (Some(h), None) if *assume_dense => {
                    certificate_output(engine::dense_transfer(&with(h), xi, &w, scheme)?, "transfer")
                }
                (Some(h), None) => {
                    let target = target.unwrap_or(w.ground().len());
                    match engine::judd_dichotomy(&with(h), xi, &w, target, scheme)? {
                        Some(JuddOutcome::Embeds(c)) => {
                            let text = format!("F_{xi}(L) inside {h} for L = {}", c.witness);
                            Output::new(true, text, to_json(&JuddOutcome::Embeds(c)))
                        }
                        Some(JuddOutcome::Inside(c)) => {
                            let text = format!("{h} inside F_{xi} on {}", c.witness);
                            Output::new(true, text, to_json(&JuddOutcome::Inside(c)))
                        }
                        None => Output::new(false, "no witness in the window", Value::Null),
                    }
                }
            }
        }
        Verb::Verify { file } => {
            let raw = if file == "-" {
                std::io::read_to_string(std::io::stdin())
            } else {
                std::fs::read_to_string(file)
            }
            .map_err(|e| Failure::Usage(format!("cannot read {file}: {e}")))?;
            let c: Certificate =
                serde_json::from_str(&raw).map_err(|e| Failure::Usage(format!("not a certificate: {e}")))?;
            let col;
            let mut env = Env::new();
            if let schreier::certificate::Claim::Homogeneous { coloring, .. } = &c.claim {
                col = parse_coloring(coloring, seed)?;
                env = env.with_coloring(col.as_ref());
            }
            match c.verify(&env) {
                Ok(()) => Output::new(true, "accepted", json!({ "accepted": true })),
                Err(r) => Output::new(false, format!("rejected: {r}"), json!({ "accepted": false, "reason": r.to_string() })),
            }
        }
        Verb::Check { criteria } => {
            let reports: Vec<suite::Report> = if criteria.is_empty() {
                suite::run_all(seed)
            } else {
                let mut out = Vec::new();
                for &id in criteria {
                    out.push(suite::run(id, seed).ok_or_else(|| Failure::Usage(format!("no criterion {id}")))?);
                }
                out
            };
            let ok = reports.iter().all(|r| r.passed);
            let text = reports
                .iter()
                .map(|r| format!("criterion {:>2} {} {}: {}", r.id, if r.passed { "PASS" } else { "FAIL" }, r.title, r.detail))
                .collect::<Vec<_>>()
                .join("\n");
            Output::new(ok, text, json!({ "passed": ok, "criteria": reports }))
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable"));
            } else if !out.text.is_empty() {
                println!("{}", out.text);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Negative(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
    }
}
