//! Seeded pseudo-random ideal families for property runs.
//!
//! Generation is fully deterministic: one ChaCha stream per corpus, every
//! draw taken from it in a fixed sequence. The weakly polymatroidal family
//! mixes rejection sampling over random antichains with a constructive
//! fallback (strongly stable closures, which satisfy the exchange condition
//! for the identity order by construction), so it never starves.

use crate::error::Error;
use crate::exponent::Exponent;
use crate::ideal::MonomialIdeal;
use crate::ring::PolyRing;
use crate::wpm::is_weakly_polymatroidal;
use itertools::Itertools;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

/// Attempts before the weakly polymatroidal sampler falls back to a
/// constructive instance.
const WPM_REJECTION_TRIES: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    RandomSquarefree,
    RandomSingleDegree,
    RandomWpm,
    MatroidalUniform,
    Principal,
    MaximalPower,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::RandomSquarefree,
        Family::RandomSingleDegree,
        Family::RandomWpm,
        Family::MatroidalUniform,
        Family::Principal,
        Family::MaximalPower,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::RandomSquarefree => "random-squarefree",
            Family::RandomSingleDegree => "random-single-degree",
            Family::RandomWpm => "random-wpm",
            Family::MatroidalUniform => "matroidal-uniform",
            Family::Principal => "principal",
            Family::MaximalPower => "maximal-power",
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.as_str() == s)
    }
}

/// Deterministic corpus description; ranges are inclusive.
#[derive(Clone, Copy, Debug)]
pub struct CorpusSpec {
    pub family: Family,
    pub n_range: (usize, usize),
    pub degree_range: (u64, u64),
    pub count: usize,
    pub seed: u64,
}

impl CorpusSpec {
    fn validate(&self) -> Result<(), Error> {
        let (nl, nh) = self.n_range;
        let (dl, dh) = self.degree_range;
        if nl == 0 || nl > nh {
            return Err(Error::InvalidInput(format!(
                "invalid variable range {nl}..={nh}"
            )));
        }
        if dl == 0 || dl > dh {
            return Err(Error::InvalidInput(format!(
                "invalid degree range {dl}..={dh}"
            )));
        }
        Ok(())
    }
}

fn ring(n: usize) -> PolyRing {
    PolyRing::new(n).expect("n >= 1 by validation")
}

/// A random monomial of total degree exactly `d` (balls into boxes).
fn random_monomial(rng: &mut impl Rng, n: usize, d: u64) -> Exponent {
    let mut coords = vec![0u64; n];
    for _ in 0..d {
        coords[rng.gen_range(0..n)] += 1;
    }
    Exponent::from_u64s(&coords)
}

/// Random generating set with per-coordinate exponents up to `dmax`;
/// minimalization makes it an antichain.
pub fn random_antichain(
    rng: &mut impl Rng,
    n: usize,
    dmax: u64,
    max_gens: usize,
) -> Result<MonomialIdeal, Error> {
    let m = rng.gen_range(1..=max_gens.max(1));
    let mut gens = Vec::with_capacity(m);
    for _ in 0..m {
        loop {
            let coords: Vec<u64> = (0..n).map(|_| rng.gen_range(0..=dmax)).collect();
            if coords.iter().any(|&c| c > 0) {
                gens.push(Exponent::from_u64s(&coords));
                break;
            }
        }
    }
    MonomialIdeal::new(ring(n), gens)
}

/// Random squarefree ideal: 2–7 supports of size between 1 and min(d, n).
pub fn random_squarefree(rng: &mut impl Rng, n: usize, d: u64) -> Result<MonomialIdeal, Error> {
    let max_size = usize::try_from(d).unwrap_or(n).min(n).max(1);
    let m = rng.gen_range(2..=7);
    let mut gens = Vec::with_capacity(m);
    for _ in 0..m {
        let size = rng.gen_range(1..=max_size);
        let mut support = BTreeSet::new();
        while support.len() < size {
            support.insert(rng.gen_range(0..n));
        }
        let mut coords = vec![0u64; n];
        for j in support {
            coords[j] = 1;
        }
        gens.push(Exponent::from_u64s(&coords));
    }
    MonomialIdeal::new(ring(n), gens)
}

/// Random ideal generated in the single degree `d` (2–8 generators before
/// deduplication; distinct equal-degree monomials are automatically an
/// antichain).
pub fn random_single_degree(rng: &mut impl Rng, n: usize, d: u64) -> Result<MonomialIdeal, Error> {
    let m = rng.gen_range(2..=8);
    let gens: BTreeSet<Exponent> = (0..m).map(|_| random_monomial(rng, n, d)).collect();
    MonomialIdeal::new(ring(n), gens.into_iter().collect())
}

/// Smallest strongly stable set of monomials containing `seeds`: closed
/// under every move x_i · (u / x_j) with i < j. Such ideals satisfy the
/// weak polymatroidal exchange condition for the identity order.
pub fn borel_closure(n: usize, seeds: Vec<Exponent>) -> Result<MonomialIdeal, Error> {
    let mut set: BTreeSet<Exponent> = seeds.into_iter().collect();
    let mut work: Vec<Exponent> = set.iter().cloned().collect();
    while let Some(u) = work.pop() {
        for j in u.support() {
            for i in 0..j {
                let w = u.div_var(j).expect("support variable").mul_var(i);
                if set.insert(w.clone()) {
                    work.push(w);
                }
            }
        }
    }
    MonomialIdeal::new(ring(n), set.into_iter().collect())
}

/// Random strongly stable ideal: Borel closure of 1–3 random monomials.
/// Seed degrees are kept small — the closure of a degree-d monomial can
/// reach every degree-d monomial below it in the Borel order.
pub fn random_borel(rng: &mut impl Rng, n: usize, d: u64) -> Result<MonomialIdeal, Error> {
    let dcap = d.min(if n >= 5 { 2 } else { 3 }).max(1);
    let k = rng.gen_range(1..=3);
    let mut seeds = Vec::with_capacity(k);
    for _ in 0..k {
        let deg = rng.gen_range(1..=dcap);
        seeds.push(random_monomial(rng, n, deg));
    }
    borel_closure(n, seeds)
}

/// Weakly polymatroidal instance: rejection sampling over small antichains,
/// falling back to a strongly stable closure if nothing turns up.
pub fn random_wpm(rng: &mut impl Rng, n: usize, d: u64) -> Result<MonomialIdeal, Error> {
    for _ in 0..WPM_REJECTION_TRIES {
        let cand = random_antichain(rng, n, d.min(3), 4)?;
        if is_weakly_polymatroidal(&cand)?.holds() {
            return Ok(cand);
        }
    }
    random_borel(rng, n, d)
}

/// All squarefree monomials of degree min(d, n): the uniform matroid, whose
/// base exchange property makes the ideal weakly polymatroidal under every
/// order.
pub fn uniform_matroidal(n: usize, d: u64) -> Result<MonomialIdeal, Error> {
    let size = usize::try_from(d).unwrap_or(n).min(n).max(1);
    let gens = (0..n)
        .combinations(size)
        .map(|support| {
            let mut coords = vec![0u64; n];
            for j in support {
                coords[j] = 1;
            }
            Exponent::from_u64s(&coords)
        })
        .collect();
    MonomialIdeal::new(ring(n), gens)
}

/// Random principal ideal with exponents up to `d`.
pub fn random_principal(rng: &mut impl Rng, n: usize, d: u64) -> Result<MonomialIdeal, Error> {
    loop {
        let coords: Vec<u64> = (0..n).map(|_| rng.gen_range(0..=d)).collect();
        if coords.iter().any(|&c| c > 0) {
            return MonomialIdeal::new(ring(n), vec![Exponent::from_u64s(&coords)]);
        }
    }
}

/// The d-th power of the maximal ideal: all monomials of total degree d.
pub fn maximal_power(n: usize, d: u64) -> Result<MonomialIdeal, Error> {
    let d = usize::try_from(d).map_err(|_| {
        Error::InvalidInput(format!("degree {d} too large for a maximal power"))
    })?;
    let gens = (0..n)
        .combinations_with_replacement(d)
        .map(|vars| {
            let mut coords = vec![0u64; n];
            for j in vars {
                coords[j] += 1;
            }
            Exponent::from_u64s(&coords)
        })
        .collect();
    MonomialIdeal::new(ring(n), gens)
}

/// The deterministic instance stream for `spec`.
pub fn generate_corpus(spec: &CorpusSpec) -> Result<Vec<MonomialIdeal>, Error> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut out = Vec::with_capacity(spec.count);
    for _ in 0..spec.count {
        let n = rng.gen_range(spec.n_range.0..=spec.n_range.1);
        let d = rng.gen_range(spec.degree_range.0..=spec.degree_range.1);
        let ideal = match spec.family {
            Family::RandomSquarefree => random_squarefree(&mut rng, n, d)?,
            Family::RandomSingleDegree => random_single_degree(&mut rng, n, d)?,
            Family::RandomWpm => random_wpm(&mut rng, n, d)?,
            Family::MatroidalUniform => uniform_matroidal(n, d)?,
            Family::Principal => random_principal(&mut rng, n, d)?,
            Family::MaximalPower => maximal_power(n, d)?,
        };
        debug_assert!(ideal.is_proper_nonzero());
        out.push(ideal);
    }
    Ok(out)
}
