//! Shared helpers and independent oracles for the integration suites.
//!
//! The oracles here deliberately reimplement library results with
//! different machinery: ranks by integer cross-multiplication elimination
//! (no rationals, no division), and Stanley depth by a plain unmemoized
//! recursion over interval partitions with no thresholds and no candidate
//! ordering. Agreement between the two code paths is the point.

// Each integration target compiles its own copy of this module and uses a
// different subset of it. The index loop in `integer_rank` reads one row
// while writing another, which iterators cannot express without contortion.
#![allow(dead_code, clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_traits::Zero;
use stanley::decomp::Target;
use stanley::{Exponent, MonomialIdeal, PolyRing};
use std::collections::BTreeSet;

pub fn ideal(n: usize, gens: &[&[u64]]) -> MonomialIdeal {
    let ring = PolyRing::new(n).unwrap();
    let gens = gens.iter().map(|g| Exponent::from_u64s(g)).collect();
    MonomialIdeal::new(ring, gens).unwrap()
}

pub fn ideal_from(n: usize, gens: &[Vec<u64>]) -> MonomialIdeal {
    let ring = PolyRing::new(n).unwrap();
    let gens = gens.iter().map(|g| Exponent::from_u64s(g)).collect();
    MonomialIdeal::new(ring, gens).unwrap()
}

/// Matrix rank by integer row elimination with cross-multiplication.
/// Entries grow instead of being reduced, which is fine at oracle sizes.
pub fn integer_rank(matrix: &[Vec<BigInt>]) -> usize {
    let mut m = matrix.to_vec();
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in (rank + 1)..rows {
            if m[r][col].is_zero() {
                continue;
            }
            let a = m[rank][col].clone();
            let b = m[r][col].clone();
            for c in col..cols {
                m[r][c] = &m[r][c] * &a - &m[rank][c] * &b;
            }
            assert!(m[r][col].is_zero());
        }
        rank += 1;
    }
    rank
}

fn exponent_rows(i: &MonomialIdeal, affine: bool) -> Vec<Vec<BigInt>> {
    i.gens()
        .iter()
        .map(|g| {
            let mut row: Vec<BigInt> =
                g.coords().iter().map(|c| BigInt::from(c.clone())).collect();
            if affine {
                row.push(BigInt::from(1));
            }
            row
        })
        .collect()
}

pub fn oracle_rank(i: &MonomialIdeal) -> usize {
    integer_rank(&exponent_rows(i, false))
}

pub fn oracle_arank(i: &MonomialIdeal) -> usize {
    integer_rank(&exponent_rows(i, true))
}

/// All ideals whose minimal generators are antichains of nonzero vectors
/// in [0, emax]^n — exhaustive, so only sane for n <= 2.
pub fn all_small_antichains(n: usize, emax: u64) -> Vec<MonomialIdeal> {
    let mut vectors: Vec<Vec<u64>> = Vec::new();
    let mut cur = vec![0u64; n];
    loop {
        if cur.iter().any(|&c| c > 0) {
            vectors.push(cur.clone());
        }
        let mut j = n;
        let mut done = true;
        while j > 0 {
            j -= 1;
            if cur[j] < emax {
                cur[j] += 1;
                cur[j + 1..].fill(0);
                done = false;
                break;
            }
        }
        if done {
            break;
        }
    }
    let divides = |a: &[u64], b: &[u64]| a.iter().zip(b).all(|(x, y)| x <= y);
    let mut out = Vec::new();
    for mask in 1u32..(1 << vectors.len()) {
        let chosen: Vec<&Vec<u64>> = (0..vectors.len())
            .filter(|&k| mask >> k & 1 == 1)
            .map(|k| &vectors[k])
            .collect();
        let antichain = chosen.iter().enumerate().all(|(a, u)| {
            chosen
                .iter()
                .enumerate()
                .all(|(b, v)| a == b || !divides(u, v))
        });
        if antichain {
            out.push(ideal_from(n, &chosen.iter().map(|v| (*v).clone()).collect::<Vec<_>>()));
        }
    }
    out
}

/// Every lattice point of the box [0, limit], lex ascending.
pub fn box_points(limit: &[u64]) -> Vec<Vec<u64>> {
    let n = limit.len();
    let mut out = Vec::new();
    let mut cur = vec![0u64; n];
    loop {
        out.push(cur.clone());
        let mut j = n;
        let mut done = true;
        while j > 0 {
            j -= 1;
            if cur[j] < limit[j] {
                cur[j] += 1;
                cur[j + 1..].fill(0);
                done = false;
                break;
            }
        }
        if done {
            break;
        }
    }
    out
}

pub fn join_limit(i: &MonomialIdeal, margin: u64) -> Vec<u64> {
    i.gens_join()
        .unwrap()
        .coords()
        .iter()
        .map(|c| u64::try_from(c).expect("helper needs small exponents") + margin)
        .collect()
}

struct Dumb<'a> {
    elements: &'a [Vec<u64>],
    g: &'a [u64],
    n: usize,
}

fn le(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

impl Dumb<'_> {
    fn zdim(&self, d: &[u64]) -> usize {
        d.iter().zip(self.g).filter(|(x, y)| x == y).count()
    }

    /// Best achievable minimum interval dimension over all partitions of
    /// `uncovered` into intervals — the first uncovered element in lex
    /// order is dominance-minimal, so it must start an interval.
    fn best(&self, uncovered: &BTreeSet<usize>) -> usize {
        let Some(&c) = uncovered.iter().next() else {
            return self.n;
        };
        let bottom = &self.elements[c];
        let mut best = 0;
        for d in uncovered.iter().map(|&k| &self.elements[k]) {
            if !le(bottom, d) {
                continue;
            }
            let interval: Vec<usize> = self
                .elements
                .iter()
                .enumerate()
                .filter(|(_, e)| le(bottom, e) && le(e, d))
                .map(|(k, _)| k)
                .collect();
            if !interval.iter().all(|k| uncovered.contains(k)) {
                continue;
            }
            let mut rest = uncovered.clone();
            for k in &interval {
                rest.remove(k);
            }
            best = best.max(self.zdim(d).min(self.best(&rest)));
        }
        best
    }
}

/// Stanley depth by exhaustive search over interval partitions of the
/// characteristic box, with none of the library's machinery.
pub fn dumb_sdepth(i: &MonomialIdeal, target: Target) -> usize {
    let n = i.ring().n();
    let g: Vec<u64> = i
        .gens_join()
        .unwrap()
        .coords()
        .iter()
        .map(|c| u64::try_from(c).expect("oracle needs small exponents"))
        .collect();
    let mut elements: Vec<Vec<u64>> = Vec::new();
    let mut cur = vec![0u64; n];
    loop {
        let inside = i.contains(&Exponent::from_u64s(&cur));
        if (target == Target::Ideal) == inside {
            elements.push(cur.clone());
        }
        let mut j = n;
        let mut done = true;
        while j > 0 {
            j -= 1;
            if cur[j] < g[j] {
                cur[j] += 1;
                cur[j + 1..].fill(0);
                done = false;
                break;
            }
        }
        if done {
            break;
        }
    }
    assert!(!elements.is_empty(), "proper nonzero ideals fill both targets");
    let dumb = Dumb { elements: &elements, g: &g, n };
    let all: BTreeSet<usize> = (0..elements.len()).collect();
    dumb.best(&all)
}
