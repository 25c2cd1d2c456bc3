//! Per-ideal report: classification flags, rank invariants, theorem-derived
//! bounds, verified constructions, oracle values, and one comparison entry
//! per monitored inequality.
//!
//! A comparison is only emitted when both of its sides were actually
//! computed in this run, so a `holds: true` entry is always a statement
//! about numbers in hand, never about a skipped computation. Oracles that
//! hit their feasibility caps land in `skipped` with the reason.
//!
//! Depth is computed over ℚ, recorded in the `field` field: Betti numbers
//! of monomial ideals can depend on the characteristic, and the depth
//! claims here are only made for characteristic zero.

use crate::decomp::{
    decompose_ideal_squarefree, decompose_ideal_wpm, decompose_quotient_squarefree,
    decompose_quotient_wpm, verify, StanleyDecomposition, Target,
};
use crate::error::Error;
use crate::exponent::Exponent;
use crate::ideal::MonomialIdeal;
use crate::json::{escape, ideal_to_json};
use crate::oracles::{
    depth_quotient, exact_sdepth, max_ass_height, BettiCaps, OracleCaps, PrimeCaps,
};
use crate::rank::{analytic_spread_single_degree, arank_of_ideal, rank_of_ideal};
use crate::wpm::is_weakly_polymatroidal;
use std::collections::BTreeSet;
use std::fmt::Write as _;

/// Feasibility caps for the three oracles, bundled for the report driver.
#[derive(Clone, Copy, Debug, Default)]
pub struct ReportCaps {
    pub oracle: OracleCaps,
    pub betti: BettiCaps,
    pub primes: PrimeCaps,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rel {
    Le,
    Ge,
    Eq,
}

impl Rel {
    pub fn as_str(self) -> &'static str {
        match self {
            Rel::Le => "<=",
            Rel::Ge => ">=",
            Rel::Eq => "==",
        }
    }

    pub fn eval(self, lhs: i64, rhs: i64) -> bool {
        match self {
            Rel::Le => lhs <= rhs,
            Rel::Ge => lhs >= rhs,
            Rel::Eq => lhs == rhs,
        }
    }
}

/// One monitored inequality, tagged with the result it instantiates.
#[derive(Clone, Debug)]
pub struct Comparison {
    pub tag: &'static str,
    pub lhs: i64,
    pub rel: Rel,
    pub rhs: i64,
    pub holds: bool,
}

/// Summary of one constructed decomposition.
#[derive(Clone, Debug)]
pub struct Construction {
    pub method: &'static str,
    pub target: Target,
    pub num_spaces: usize,
    pub sdepth: usize,
    pub verified: bool,
}

/// Oracle values; `None` means the oracle did not run (see `skipped`).
#[derive(Clone, Copy, Debug, Default)]
pub struct OracleValues {
    pub sdepth_ideal: Option<usize>,
    pub sdepth_quotient: Option<usize>,
    pub depth_quotient: Option<usize>,
    pub max_ass_height: Option<usize>,
}

/// Theorem-derived lower bounds; `None` when the hypothesis fails.
/// `arank`-keyed entries need the weakly polymatroidal property, the
/// `rank`-keyed ones squarefreeness; both may apply to the same ideal.
#[derive(Clone, Copy, Debug, Default)]
pub struct Bounds {
    pub sdepth_ideal_arank: Option<i64>,
    pub sdepth_quotient_arank: Option<i64>,
    pub depth_quotient_arank: Option<i64>,
    pub sdepth_ideal_rank: Option<i64>,
    pub sdepth_quotient_rank: Option<i64>,
}

#[derive(Clone, Debug)]
pub struct Report {
    ideal: MonomialIdeal,
    pub squarefree: bool,
    pub single_degree: bool,
    pub wpm: bool,
    /// Formatted (u, v, x_t) of the failing pair when not WPM.
    pub wpm_failure: Option<(String, String, String)>,
    pub rank: usize,
    pub arank: usize,
    pub spread: Option<usize>,
    pub bounds: Bounds,
    pub constructions: Vec<Construction>,
    pub oracles: OracleValues,
    pub skipped: Vec<String>,
    pub comparisons: Vec<Comparison>,
}

fn push_cmp(out: &mut Vec<Comparison>, tag: &'static str, lhs: i64, rel: Rel, rhs: i64) {
    out.push(Comparison {
        tag,
        lhs,
        rel,
        rhs,
        holds: rel.eval(lhs, rhs),
    });
}

/// Run an oracle, mapping a cap miss to a skip note instead of an error.
fn run_oracle<T>(
    label: &str,
    skipped: &mut Vec<String>,
    result: Result<T, Error>,
) -> Result<Option<T>, Error> {
    match result {
        Ok(v) => Ok(Some(v)),
        Err(Error::CapExceeded(msg)) => {
            skipped.push(format!("{label}: {msg}"));
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

impl Report {
    /// Compute everything feasible for a proper nonzero ideal.
    pub fn compute(ideal: &MonomialIdeal, caps: &ReportCaps) -> Result<Report, Error> {
        if ideal.is_zero() {
            return Err(Error::ZeroIdeal("report"));
        }
        if ideal.is_unit() {
            return Err(Error::UnitIdeal("report"));
        }
        let n = ideal.ring().n() as i64;

        let squarefree = ideal.is_squarefree()?;
        let single_degree = ideal.is_single_degree()?;
        let witness = is_weakly_polymatroidal(ideal)?;
        let wpm = witness.holds();
        let wpm_failure = witness.failure().map(|f| {
            (
                ideal.ring().format_monomial(&f.u),
                ideal.ring().format_monomial(&f.v),
                ideal.ring().name(f.t).to_string(),
            )
        });

        let rank = rank_of_ideal(ideal)?;
        let arank = arank_of_ideal(ideal)?;
        let spread = if single_degree {
            Some(analytic_spread_single_degree(ideal)?)
        } else {
            None
        };

        let bounds = Bounds {
            sdepth_ideal_arank: wpm.then(|| n - arank as i64 + 1),
            sdepth_quotient_arank: wpm.then(|| n - arank as i64),
            depth_quotient_arank: wpm.then(|| n - arank as i64),
            sdepth_ideal_rank: squarefree.then(|| n - rank as i64 + 1),
            sdepth_quotient_rank: squarefree.then(|| n - rank as i64),
        };

        let mut constructions = Vec::new();
        let mut built: Vec<(&'static str, Target, StanleyDecomposition)> = Vec::new();
        if wpm {
            built.push(("wpm", Target::Ideal, decompose_ideal_wpm(ideal)?));
            built.push(("wpm", Target::Quotient, decompose_quotient_wpm(ideal)?));
        }
        if squarefree {
            built.push((
                "squarefree",
                Target::Ideal,
                decompose_ideal_squarefree(ideal)?,
            ));
            built.push((
                "squarefree",
                Target::Quotient,
                decompose_quotient_squarefree(ideal)?,
            ));
        }
        for (method, target, d) in &built {
            constructions.push(Construction {
                method,
                target: *target,
                num_spaces: d.spaces().len(),
                sdepth: d.sdepth(),
                verified: verify(d).is_ok(),
            });
        }

        let mut skipped = Vec::new();
        let oracles = OracleValues {
            sdepth_ideal: run_oracle(
                "sdepth_ideal",
                &mut skipped,
                exact_sdepth(ideal, Target::Ideal, &caps.oracle),
            )?
            .map(|e| e.value),
            sdepth_quotient: run_oracle(
                "sdepth_quotient",
                &mut skipped,
                exact_sdepth(ideal, Target::Quotient, &caps.oracle),
            )?
            .map(|e| e.value),
            depth_quotient: run_oracle(
                "depth_quotient",
                &mut skipped,
                depth_quotient(ideal, &caps.betti),
            )?,
            max_ass_height: run_oracle(
                "max_ass_height",
                &mut skipped,
                max_ass_height(ideal, &caps.primes),
            )?,
        };

        let mut comparisons = Vec::new();
        if single_degree {
            push_cmp(&mut comparisons, "prop-single", rank as i64, Rel::Eq, arank as i64);
        }

        // colon lemmas at the order-first support variable
        let f0 = ideal.ring().first_variable();
        if wpm && ideal.variable_in_support(f0)? {
            let colon = ideal.colon_by_variable(f0)?;
            let expected: BTreeSet<Exponent> = ideal
                .gens()
                .iter()
                .filter_map(|u| u.div_var(f0))
                .collect();
            let actual: BTreeSet<Exponent> = colon.gens().iter().cloned().collect();
            push_cmp(
                &mut comparisons,
                "lem-colon",
                i64::from(actual == expected),
                Rel::Eq,
                1,
            );
            if colon.is_proper_nonzero() {
                push_cmp(
                    &mut comparisons,
                    "lem-colon-wpm",
                    i64::from(is_weakly_polymatroidal(&colon)?.holds()),
                    Rel::Eq,
                    1,
                );
            }
            push_cmp(
                &mut comparisons,
                "lem-wcolon",
                arank_of_ideal(&colon)? as i64,
                Rel::Le,
                arank as i64,
            );
            let elim = ideal.eliminate_variable(f0)?;
            if !elim.is_zero() {
                push_cmp(
                    &mut comparisons,
                    "lem-del",
                    arank_of_ideal(&elim)? as i64 + 1,
                    Rel::Le,
                    arank as i64,
                );
            }
        }
        if squarefree {
            let mut worst = 0i64;
            for j in ideal.support_union()? {
                worst = worst.max(rank_of_ideal(&ideal.colon_by_variable(j)?)? as i64);
            }
            push_cmp(&mut comparisons, "lem-swcolon", worst, Rel::Le, rank as i64);
        }

        for c in &constructions {
            let (tag, rhs) = match (c.method == "wpm", c.target) {
                (true, Target::Ideal) => ("thm-main-i-ideal", n - arank as i64 + 1),
                (true, Target::Quotient) => ("thm-main-i-quotient", n - arank as i64),
                (false, Target::Ideal) => ("thm-smain-ideal", n - rank as i64 + 1),
                (false, Target::Quotient) => ("thm-smain-quotient", n - rank as i64),
            };
            push_cmp(&mut comparisons, tag, c.sdepth as i64, Rel::Ge, rhs);
        }
        if let Some(spread) = spread {
            if squarefree {
                for c in constructions.iter().filter(|c| c.method == "squarefree") {
                    let (tag, rhs) = match c.target {
                        Target::Ideal => ("cor-sconj-ideal", n - spread as i64 + 1),
                        Target::Quotient => ("cor-sconj-quotient", n - spread as i64),
                    };
                    push_cmp(&mut comparisons, tag, c.sdepth as i64, Rel::Ge, rhs);
                }
            }
        }

        if wpm {
            if let Some(depth) = oracles.depth_quotient {
                push_cmp(
                    &mut comparisons,
                    "thm-main-ii",
                    depth as i64,
                    Rel::Ge,
                    n - arank as i64,
                );
            }
            if let Some(h) = oracles.max_ass_height {
                push_cmp(&mut comparisons, "cor-height", h as i64, Rel::Le, arank as i64);
            }
        }

        for (target, oracle) in [
            (Target::Ideal, oracles.sdepth_ideal),
            (Target::Quotient, oracles.sdepth_quotient),
        ] {
            let best = constructions
                .iter()
                .filter(|c| c.target == target)
                .map(|c| c.sdepth as i64)
                .max();
            if let (Some(exact), Some(best)) = (oracle, best) {
                let tag = match target {
                    Target::Ideal => "oracle-dominance-ideal",
                    Target::Quotient => "oracle-dominance-quotient",
                };
                push_cmp(&mut comparisons, tag, exact as i64, Rel::Ge, best);
            }
        }
        if let (Some(depth), Some(sd)) = (oracles.depth_quotient, oracles.sdepth_quotient) {
            push_cmp(&mut comparisons, "stanley-ineq", depth as i64, Rel::Le, sd as i64);
        }

        Ok(Report {
            ideal: ideal.clone(),
            squarefree,
            single_degree,
            wpm,
            wpm_failure,
            rank,
            arank,
            spread,
            bounds,
            constructions,
            oracles,
            skipped,
            comparisons,
        })
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    /// Failed comparisons plus unverified constructions.
    pub fn violations(&self) -> usize {
        self.comparisons.iter().filter(|c| !c.holds).count()
            + self.constructions.iter().filter(|c| !c.verified).count()
    }

    /// Canonical single-line JSON; field order and formatting are fixed so
    /// identical inputs yield identical bytes.
    pub fn to_json(&self) -> String {
        fn opt<T: std::fmt::Display>(v: &Option<T>) -> String {
            v.as_ref().map_or_else(|| "null".into(), T::to_string)
        }
        let mut out = String::new();
        let _ = write!(out, "{{\"ideal\":{},\"field\":\"Q\"", ideal_to_json(&self.ideal));
        out.push_str(",\"flags\":{\"order\":[");
        for (i, &v) in self.ideal.ring().order().iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(out, "{}", v + 1);
        }
        let _ = write!(
            out,
            "],\"squarefree\":{},\"single_degree\":{},\"wpm\":{}",
            self.squarefree, self.single_degree, self.wpm
        );
        match &self.wpm_failure {
            None => out.push_str(",\"wpm_failure\":null}"),
            Some((u, v, t)) => {
                let _ = write!(
                    out,
                    ",\"wpm_failure\":{{\"u\":\"{}\",\"v\":\"{}\",\"t\":\"{}\"}}}}",
                    escape(u),
                    escape(v),
                    escape(t)
                );
            }
        }
        let _ = write!(
            out,
            ",\"invariants\":{{\"rank\":{},\"arank\":{},\"spread\":{}}}",
            self.rank,
            self.arank,
            opt(&self.spread)
        );
        let b = &self.bounds;
        let _ = write!(
            out,
            ",\"bounds\":{{\"sdepth_ideal_arank\":{},\"sdepth_quotient_arank\":{},\"depth_quotient_arank\":{},\"sdepth_ideal_rank\":{},\"sdepth_quotient_rank\":{}}}",
            opt(&b.sdepth_ideal_arank),
            opt(&b.sdepth_quotient_arank),
            opt(&b.depth_quotient_arank),
            opt(&b.sdepth_ideal_rank),
            opt(&b.sdepth_quotient_rank)
        );
        out.push_str(",\"constructions\":[");
        for (i, c) in self.constructions.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(
                out,
                "{{\"method\":\"{}\",\"target\":\"{}\",\"spaces\":{},\"sdepth\":{},\"verified\":{}}}",
                c.method,
                c.target.as_str(),
                c.num_spaces,
                c.sdepth,
                c.verified
            );
        }
        let o = &self.oracles;
        let _ = write!(
            out,
            "],\"oracles\":{{\"sdepth_ideal\":{},\"sdepth_quotient\":{},\"depth_quotient\":{},\"max_ass_height\":{}}}",
            opt(&o.sdepth_ideal),
            opt(&o.sdepth_quotient),
            opt(&o.depth_quotient),
            opt(&o.max_ass_height)
        );
        out.push_str(",\"skipped\":[");
        for (i, s) in self.skipped.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(out, "\"{}\"", escape(s));
        }
        out.push_str("],\"comparisons\":[");
        for (i, c) in self.comparisons.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(
                out,
                "{{\"tag\":\"{}\",\"lhs\":{},\"rel\":\"{}\",\"rhs\":{},\"holds\":{}}}",
                c.tag,
                c.lhs,
                c.rel.as_str(),
                c.rhs,
                c.holds
            );
        }
        let _ = write!(out, "],\"violations\":{}}}", self.violations());
        out
    }

    /// Multi-line human-readable form.
    pub fn to_text(&self) -> String {
        let ring = self.ideal.ring();
        let mut out = String::new();
        let gens = self
            .ideal
            .gens()
            .iter()
            .map(|g| ring.format_monomial(g))
            .collect::<Vec<_>>()
            .join(", ");
        let _ = writeln!(out, "ideal      ({gens}) in {ring}");
        let order = ring
            .order()
            .iter()
            .map(|&v| ring.name(v).to_string())
            .collect::<Vec<_>>()
            .join(", ");
        let _ = writeln!(out, "order      {order}");
        let _ = write!(
            out,
            "flags      squarefree: {}, single-degree: {}, weakly polymatroidal: {}",
            self.squarefree, self.single_degree, self.wpm
        );
        if let Some((u, v, t)) = &self.wpm_failure {
            let _ = write!(out, " (fails at u = {u}, v = {v}, t = {t})");
        }
        out.push('\n');
        let _ = write!(out, "invariants rank {}, arank {}", self.rank, self.arank);
        if let Some(s) = self.spread {
            let _ = write!(out, ", spread {s}");
        }
        out.push('\n');
        if self.wpm {
            let _ = writeln!(
                out,
                "bounds     sdepth(I) >= {}, sdepth(S/I) >= {}, depth(S/I) >= {}   [arank]",
                self.bounds.sdepth_ideal_arank.unwrap(),
                self.bounds.sdepth_quotient_arank.unwrap(),
                self.bounds.depth_quotient_arank.unwrap()
            );
        }
        if self.squarefree {
            let _ = writeln!(
                out,
                "bounds     sdepth(I) >= {}, sdepth(S/I) >= {}   [rank]",
                self.bounds.sdepth_ideal_rank.unwrap(),
                self.bounds.sdepth_quotient_rank.unwrap()
            );
        }
        for c in &self.constructions {
            let _ = writeln!(
                out,
                "construct  {} {}: {} spaces, sdepth {}, verify {}",
                c.method,
                c.target.as_str(),
                c.num_spaces,
                c.sdepth,
                if c.verified { "ok" } else { "FAILED" }
            );
        }
        let o = &self.oracles;
        let fmt = |v: &Option<usize>| v.map_or_else(|| "-".into(), |x| x.to_string());
        let _ = writeln!(
            out,
            "oracles    sdepth(I) {}, sdepth(S/I) {}, depth(S/I) {}, max Ass height {}",
            fmt(&o.sdepth_ideal),
            fmt(&o.sdepth_quotient),
            fmt(&o.depth_quotient),
            fmt(&o.max_ass_height)
        );
        for s in &self.skipped {
            let _ = writeln!(out, "skipped    {s}");
        }
        for c in &self.comparisons {
            let _ = writeln!(
                out,
                "check      {:26} {} {} {}   {}",
                c.tag,
                c.lhs,
                c.rel.as_str(),
                c.rhs,
                if c.holds { "pass" } else { "FAIL" }
            );
        }
        let _ = writeln!(out, "violations {}", self.violations());
        out
    }
}
