//! The `stanley` command-line tool.
//!
//! Exit codes: 0 success, 1 bad input (or a failed `verify`), 2 infeasible
//! within the configured caps, 3 a monitored mathematical inequality was
//! violated (`report`, `corpus`, and a constructed decomposition failing
//! its own verification) — so CI can tell a finding from a crash.

use crate::corpus::{generate_corpus, CorpusSpec, Family};
use crate::decomp::{
    decompose_ideal_squarefree, decompose_ideal_wpm, decompose_quotient_squarefree,
    decompose_quotient_wpm, verify, StanleyDecomposition, Target, VerifyViolation,
};
use crate::error::Error;
use crate::ideal::MonomialIdeal;
use crate::json::{
    decomposition_from_json, decomposition_to_json, exponent_to_json, ideal_from_json,
};
use crate::oracles::{
    associated_primes, betti_numbers, exact_sdepth, BettiCaps, OracleCaps, PrimeCaps,
};
use crate::parse::parse_ideal;
use crate::rank::{analytic_spread_single_degree, arank_of_ideal, rank_of_ideal};
use crate::report::{Report, ReportCaps};
use crate::ring::PolyRing;
use crate::wpm::{find_wpm_order, is_weakly_polymatroidal, DEFAULT_FIND_ORDER_LIMIT};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::io::Read as _;
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(
    name = "stanley",
    version,
    about = "Stanley decompositions, Stanley depth bounds, and rank invariants of monomial ideals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct IdealInput {
    /// Ideal file (text format or canonical JSON); use - for stdin
    file: PathBuf,
    /// Variable order for order-sensitive checks, 1-based, e.g. 2,1,3
    #[arg(long, value_name = "PERM")]
    order: Option<String>,
}

#[derive(Args)]
struct OutputFlags {
    /// Emit machine-readable JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Args, Clone, Copy)]
struct CapFlags {
    /// Variable-count cap for the exact oracles
    #[arg(long, value_name = "N")]
    max_n: Option<usize>,
    /// Size cap for the characteristic poset of the sdepth oracle
    #[arg(long, value_name = "SIZE")]
    max_poset: Option<usize>,
}

impl CapFlags {
    fn oracle(self) -> OracleCaps {
        let d = OracleCaps::default();
        OracleCaps {
            max_n: self.max_n.unwrap_or(d.max_n),
            max_poset: self.max_poset.unwrap_or(d.max_poset),
        }
    }

    fn report(self) -> ReportCaps {
        ReportCaps {
            oracle: self.oracle(),
            betti: BettiCaps {
                max_n: self.max_n.unwrap_or(BettiCaps::default().max_n),
            },
            primes: PrimeCaps::default(),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TargetArg {
    Ideal,
    Quotient,
}

impl From<TargetArg> for Target {
    fn from(t: TargetArg) -> Target {
        match t {
            TargetArg::Ideal => Target::Ideal,
            TargetArg::Quotient => Target::Quotient,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    /// Weakly polymatroidal construction if it applies, else squarefree
    Auto,
    Wpm,
    Squarefree,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    RandomSquarefree,
    RandomSingleDegree,
    RandomWpm,
    MatroidalUniform,
    Principal,
    MaximalPower,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::RandomSquarefree => Family::RandomSquarefree,
            FamilyArg::RandomSingleDegree => Family::RandomSingleDegree,
            FamilyArg::RandomWpm => Family::RandomWpm,
            FamilyArg::MatroidalUniform => Family::MatroidalUniform,
            FamilyArg::Principal => Family::Principal,
            FamilyArg::MaximalPower => Family::MaximalPower,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Rank of the minimal generator exponent matrix
    Rank {
        #[command(flatten)]
        input: IdealInput,
        #[command(flatten)]
        out: OutputFlags,
    },
    /// Affine rank of the minimal generator exponents
    Arank {
        #[command(flatten)]
        input: IdealInput,
        #[command(flatten)]
        out: OutputFlags,
    },
    /// Analytic spread of an ideal generated in a single degree
    Spread {
        #[command(flatten)]
        input: IdealInput,
        #[command(flatten)]
        out: OutputFlags,
    },
    /// Check the weakly polymatroidal property for the ring order
    CheckWpm {
        #[command(flatten)]
        input: IdealInput,
        #[command(flatten)]
        out: OutputFlags,
        /// Also search all variable orders for one that works
        #[arg(long)]
        find_order: bool,
    },
    /// Construct a Stanley decomposition and verify it
    Decompose {
        #[command(flatten)]
        input: IdealInput,
        #[command(flatten)]
        out: OutputFlags,
        #[arg(long, value_enum)]
        target: TargetArg,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// Verify a decomposition JSON document against an ideal
    Verify {
        #[command(flatten)]
        input: IdealInput,
        /// Decomposition JSON file; use - for stdin
        decomposition: PathBuf,
        #[command(flatten)]
        out: OutputFlags,
    },
    /// Exact Stanley depth by exhaustive interval-partition search
    SdepthExact {
        #[command(flatten)]
        input: IdealInput,
        #[command(flatten)]
        out: OutputFlags,
        #[arg(long, value_enum)]
        target: TargetArg,
        #[command(flatten)]
        caps: CapFlags,
    },
    /// depth(S/I) over Q via multigraded Betti numbers
    Depth {
        #[command(flatten)]
        input: IdealInput,
        #[command(flatten)]
        out: OutputFlags,
        #[command(flatten)]
        caps: CapFlags,
    },
    /// Associated primes of S/I via irreducible decomposition
    Ass {
        #[command(flatten)]
        input: IdealInput,
        #[command(flatten)]
        out: OutputFlags,
    },
    /// Everything feasible for one ideal: flags, invariants, bounds,
    /// constructions, oracles, and inequality checks
    Report {
        #[command(flatten)]
        input: IdealInput,
        #[command(flatten)]
        out: OutputFlags,
        #[command(flatten)]
        caps: CapFlags,
    },
    /// Stream one report per generated instance (JSON lines), then a
    /// violations summary
    Corpus {
        #[arg(long, value_enum, default_value_t = FamilyArg::RandomWpm)]
        family: FamilyArg,
        /// Number of variables: a value or an inclusive range, e.g. 4 or 2..5
        #[arg(long, value_name = "RANGE", default_value = "2..5")]
        n: String,
        /// Generator degree: a value or an inclusive range, e.g. 2 or 1..4
        #[arg(long, value_name = "RANGE", default_value = "1..4")]
        degree: String,
        #[arg(long, default_value_t = 20)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        caps: CapFlags,
    },
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn read_input(path: &Path) -> Result<String, Error> {
    if path == Path::new("-") {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Error::InvalidInput(format!("reading stdin: {e}")))?;
        return Ok(text);
    }
    std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
}

fn parse_order(text: &str, n: usize) -> Result<Vec<usize>, Error> {
    let mut order = Vec::new();
    for part in text.split(',') {
        let v: usize = part
            .trim()
            .parse()
            .map_err(|_| Error::InvalidInput(format!("invalid order entry: {part}")))?;
        if v == 0 || v > n {
            return Err(Error::VariableOutOfRange { var: v, n });
        }
        order.push(v - 1);
    }
    Ok(order)
}

fn load_ideal(input: &IdealInput) -> Result<MonomialIdeal, Error> {
    let text = read_input(&input.file)?;
    let mut ideal = if text.trim_start().starts_with('{') {
        ideal_from_json(&text)?
    } else {
        parse_ideal(&text)?
    };
    if let Some(order) = &input.order {
        let perm = parse_order(order, ideal.ring().n())?;
        ideal = ideal.with_order(perm)?;
    }
    Ok(ideal)
}

/// `sdepth(I)` / `sdepth(S/I)` as used in text output.
fn target_label(target: Target) -> &'static str {
    match target {
        Target::Ideal => "sdepth(I)",
        Target::Quotient => "sdepth(S/I)",
    }
}

fn format_space(ring: &PolyRing, s: &crate::decomp::StanleySpace) -> String {
    let free = s
        .free()
        .iter()
        .map(|&j| ring.name(j))
        .collect::<Vec<_>>()
        .join(", ");
    format!("{} * K[{}]", ring.format_monomial(s.base()), free)
}

fn print_spaces(d: &StanleyDecomposition) {
    for s in d.spaces() {
        println!("  {}", format_space(d.ring(), s));
    }
}

fn violation_json(v: &VerifyViolation) -> String {
    match v {
        VerifyViolation::Overlap { first, second, witness } => format!(
            "{{\"kind\":\"overlap\",\"first\":{first},\"second\":{second},\"witness\":{}}}",
            exponent_to_json(witness)
        ),
        VerifyViolation::Uncovered { monomial } => format!(
            "{{\"kind\":\"uncovered\",\"monomial\":{}}}",
            exponent_to_json(monomial)
        ),
        VerifyViolation::Overcovered { monomial } => format!(
            "{{\"kind\":\"overcovered\",\"monomial\":{}}}",
            exponent_to_json(monomial)
        ),
    }
}

fn violation_text(ring: &PolyRing, v: &VerifyViolation) -> String {
    match v {
        VerifyViolation::Overlap { first, second, witness } => format!(
            "spaces {first} and {second} overlap at {}",
            ring.format_monomial(witness)
        ),
        VerifyViolation::Uncovered { monomial } => format!(
            "target monomial {} is uncovered",
            ring.format_monomial(monomial)
        ),
        VerifyViolation::Overcovered { monomial } => format!(
            "covered monomial {} lies outside the target",
            ring.format_monomial(monomial)
        ),
    }
}

fn execute(command: Command) -> Result<i32, Error> {
    match command {
        Command::Rank { input, out } => {
            let v = rank_of_ideal(&load_ideal(&input)?)?;
            if out.json {
                println!("{{\"rank\":{v}}}");
            } else {
                println!("rank {v}");
            }
            Ok(0)
        }
        Command::Arank { input, out } => {
            let v = arank_of_ideal(&load_ideal(&input)?)?;
            if out.json {
                println!("{{\"arank\":{v}}}");
            } else {
                println!("arank {v}");
            }
            Ok(0)
        }
        Command::Spread { input, out } => {
            let v = analytic_spread_single_degree(&load_ideal(&input)?)?;
            if out.json {
                println!("{{\"spread\":{v}}}");
            } else {
                println!("spread {v}");
            }
            Ok(0)
        }
        Command::CheckWpm { input, out, find_order } => {
            let ideal = load_ideal(&input)?;
            let witness = is_weakly_polymatroidal(&ideal)?;
            let found = if find_order {
                Some(find_wpm_order(&ideal, DEFAULT_FIND_ORDER_LIMIT)?)
            } else {
                None
            };
            let ring = ideal.ring();
            if out.json {
                let mut line = String::from("{\"wpm\":");
                line.push_str(if witness.holds() { "true" } else { "false" });
                match witness.failure() {
                    None => line.push_str(",\"failure\":null"),
                    Some(f) => {
                        line.push_str(&format!(
                            ",\"failure\":{{\"u\":{},\"v\":{},\"t\":{}}}",
                            exponent_to_json(&f.u),
                            exponent_to_json(&f.v),
                            f.t + 1
                        ));
                    }
                }
                if let Some(found) = &found {
                    match found {
                        None => line.push_str(",\"found_order\":null"),
                        Some(order) => {
                            let vars: Vec<String> =
                                order.iter().map(|&v| (v + 1).to_string()).collect();
                            line.push_str(&format!(",\"found_order\":[{}]", vars.join(",")));
                        }
                    }
                }
                line.push('}');
                println!("{line}");
            } else {
                match witness.failure() {
                    None => println!("weakly polymatroidal: yes"),
                    Some(f) => println!(
                        "weakly polymatroidal: no (u = {}, v = {}, t = {})",
                        ring.format_monomial(&f.u),
                        ring.format_monomial(&f.v),
                        ring.name(f.t)
                    ),
                }
                match &found {
                    None => {}
                    Some(None) => println!("no variable order works"),
                    Some(Some(order)) => {
                        let vars: Vec<String> =
                            order.iter().map(|&v| (v + 1).to_string()).collect();
                        println!("order found: {}", vars.join(","));
                    }
                }
            }
            Ok(0)
        }
        Command::Decompose { input, out, target, method } => {
            let ideal = load_ideal(&input)?;
            let target = Target::from(target);
            let method = match method {
                MethodArg::Auto => {
                    if is_weakly_polymatroidal(&ideal)?.holds() {
                        MethodArg::Wpm
                    } else if ideal.is_squarefree()? {
                        MethodArg::Squarefree
                    } else {
                        return Err(Error::InvalidInput(
                            "no construction applies: the ideal is neither weakly \
                             polymatroidal for this order nor squarefree"
                                .into(),
                        ));
                    }
                }
                m => m,
            };
            let d = match (method, target) {
                (MethodArg::Wpm, Target::Ideal) => decompose_ideal_wpm(&ideal)?,
                (MethodArg::Wpm, Target::Quotient) => decompose_quotient_wpm(&ideal)?,
                (MethodArg::Squarefree, Target::Ideal) => decompose_ideal_squarefree(&ideal)?,
                (MethodArg::Squarefree, Target::Quotient) => {
                    decompose_quotient_squarefree(&ideal)?
                }
                (MethodArg::Auto, _) => unreachable!("resolved above"),
            };
            let checked = verify(&d);
            if out.json {
                println!("{}", decomposition_to_json(&d));
            } else {
                println!(
                    "{} spaces, {} = {}",
                    d.spaces().len(),
                    target_label(target),
                    d.sdepth()
                );
                print_spaces(&d);
                match &checked {
                    Ok(()) => println!("verify ok"),
                    Err(v) => println!("VERIFY FAILED: {}", violation_text(d.ring(), v)),
                }
            }
            // a constructed decomposition failing its own verification is a
            // mathematical violation, the loudest signal the tool has
            Ok(if checked.is_ok() { 0 } else { 3 })
        }
        Command::Verify { input, decomposition, out } => {
            let ideal = load_ideal(&input)?;
            let text = read_input(&decomposition)?;
            let d = decomposition_from_json(&text, &ideal)?;
            match verify(&d) {
                Ok(()) => {
                    if out.json {
                        println!("{{\"verified\":true,\"violation\":null}}");
                    } else {
                        println!(
                            "verified: {} spaces, disjoint, covering the {}",
                            d.spaces().len(),
                            d.target().as_str()
                        );
                    }
                    Ok(0)
                }
                Err(v) => {
                    if out.json {
                        println!(
                            "{{\"verified\":false,\"violation\":{}}}",
                            violation_json(&v)
                        );
                    } else {
                        println!("verification failed: {}", violation_text(d.ring(), &v));
                    }
                    Ok(1)
                }
            }
        }
        Command::SdepthExact { input, out, target, caps } => {
            let ideal = load_ideal(&input)?;
            let target = Target::from(target);
            let result = exact_sdepth(&ideal, target, &caps.oracle())?;
            if out.json {
                println!(
                    "{{\"target\":\"{}\",\"sdepth\":{},\"witness\":{}}}",
                    target.as_str(),
                    result.value,
                    decomposition_to_json(&result.witness)
                );
            } else {
                println!("{} = {}", target_label(target), result.value);
                print_spaces(&result.witness);
            }
            Ok(0)
        }
        Command::Depth { input, out, caps } => {
            let ideal = load_ideal(&input)?;
            let table = betti_numbers(&ideal, &caps.report().betti)?;
            let pd = table.projective_dimension();
            let depth = ideal.ring().n() - pd;
            if out.json {
                println!("{{\"depth\":{depth},\"projective_dimension\":{pd}}}");
            } else {
                println!("depth {depth} (projective dimension {pd})");
            }
            Ok(0)
        }
        Command::Ass { input, out } => {
            let ideal = load_ideal(&input)?;
            let primes = associated_primes(&ideal, &PrimeCaps::default())?;
            let max_height = primes.iter().map(|p| p.len()).max().unwrap_or(0);
            if out.json {
                let list = primes
                    .iter()
                    .map(|p| {
                        let vars: Vec<String> =
                            p.iter().map(|&v| (v + 1).to_string()).collect();
                        format!("[{}]", vars.join(","))
                    })
                    .collect::<Vec<_>>()
                    .join(",");
                println!("{{\"primes\":[{list}],\"max_height\":{max_height}}}");
            } else {
                for p in &primes {
                    let vars = p
                        .iter()
                        .map(|&v| ideal.ring().name(v))
                        .collect::<Vec<_>>()
                        .join(", ");
                    println!("({vars})");
                }
                println!("max height {max_height}");
            }
            Ok(0)
        }
        Command::Report { input, out, caps } => {
            let ideal = load_ideal(&input)?;
            let report = Report::compute(&ideal, &caps.report())?;
            if out.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            Ok(if report.violations() > 0 { 3 } else { 0 })
        }
        Command::Corpus { family, n, degree, count, seed, caps } => {
            let spec = CorpusSpec {
                family: family.into(),
                n_range: parse_range(&n, "variable count")?,
                degree_range: parse_range(&degree, "degree")?,
                count,
                seed,
            };
            let caps = caps.report();
            let mut violations = 0usize;
            for ideal in generate_corpus(&spec)? {
                let report = Report::compute(&ideal, &caps)?;
                violations += report.violations();
                println!("{}", report.to_json());
            }
            println!("violations: {violations}");
            Ok(if violations > 0 { 3 } else { 0 })
        }
    }
}

fn parse_range<T: std::str::FromStr + Copy>(text: &str, what: &str) -> Result<(T, T), Error> {
    let one = |part: &str| {
        part.trim()
            .parse::<T>()
            .map_err(|_| Error::InvalidInput(format!("invalid {what}: {part}")))
    };
    match text.split_once("..") {
        Some((lo, hi)) => Ok((one(lo)?, one(hi)?)),
        None => {
            let v = one(text)?;
            Ok((v, v))
        }
    }
}
