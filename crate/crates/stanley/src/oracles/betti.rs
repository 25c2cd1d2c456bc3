//! Multigraded Betti numbers of S/I over ℚ via upper Koszul simplicial
//! complexes, and depth through the Auslander–Buchsbaum formula.
//!
//! For a multidegree a, the upper Koszul complex K^a has the subsets F of
//! supp(a) with x^a / x_F ∈ I as faces, and
//!
//! ```text
//! β_{i,a}(I) = dim H̃_{i−1}(K^a),      β_{i,a}(S/I) = β_{i−1,a}(I)  (i ≥ 1)
//! ```
//!
//! with β_{0,0}(S/I) = 1. Only multidegrees that are joins (lcms) of
//! generator subsets can carry nonzero Betti numbers, and the distinct joins
//! are found by closure instead of enumerating all 2^m subsets. Homology
//! ranks come from exact rational boundary ranks, sharing the elimination
//! code with the rank module.

use crate::error::Error;
use crate::exponent::Exponent;
use crate::ideal::MonomialIdeal;
use crate::rank::{matrix_rank, RationalMatrix};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use std::collections::{BTreeMap, BTreeSet};

/// Cap for the Betti computation; the homology per multidegree is
/// exponential in the support size, so n stays small.
#[derive(Clone, Copy, Debug)]
pub struct BettiCaps {
    pub max_n: usize,
}

impl Default for BettiCaps {
    fn default() -> Self {
        BettiCaps { max_n: 8 }
    }
}

/// Nonzero multigraded Betti numbers β_{i,a}(S/I), keyed by homological
/// index and multidegree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, Exponent), usize>,
}

impl BettiTable {
    pub fn beta(&self, i: usize, a: &Exponent) -> usize {
        self.entries.get(&(i, a.clone())).copied().unwrap_or(0)
    }

    /// Total Betti number β_i(S/I) = Σ_a β_{i,a}.
    pub fn total(&self, i: usize) -> usize {
        self.entries
            .iter()
            .filter(|((idx, _), _)| *idx == i)
            .map(|(_, &v)| v)
            .sum()
    }

    /// Length of the minimal free resolution of S/I.
    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|(i, _)| *i).max().unwrap_or(0)
    }

    /// Nonzero entries, sorted by (i, multidegree).
    pub fn entries(&self) -> impl Iterator<Item = (usize, &Exponent, usize)> {
        self.entries.iter().map(|((i, a), &v)| (*i, a, v))
    }

    /// Multidegrees with β_{i,a} ≠ 0 for a fixed i.
    pub fn multidegrees(&self, i: usize) -> Vec<&Exponent> {
        self.entries
            .iter()
            .filter(|((idx, _), _)| *idx == i)
            .map(|((_, a), _)| a)
            .collect()
    }
}

/// All distinct joins of nonempty generator subsets, by closure.
fn lcm_lattice(ideal: &MonomialIdeal) -> BTreeSet<Exponent> {
    let mut lattice: BTreeSet<Exponent> = ideal.gens().iter().cloned().collect();
    loop {
        let mut fresh = Vec::new();
        for a in &lattice {
            for g in ideal.gens() {
                let j = a.join(g);
                if !lattice.contains(&j) {
                    fresh.push(j);
                }
            }
        }
        if fresh.is_empty() {
            return lattice;
        }
        lattice.extend(fresh);
    }
}

/// Reduced homology ranks of the upper Koszul complex at multidegree `a`.
/// Faces are bitmasks over the support of `a`; the empty face is present
/// because x^a ∈ I for every lattice multidegree. Returns dim H̃_p for
/// p = −1, 0, 1, ... as a vector indexed by p + 1.
fn koszul_homology(ideal: &MonomialIdeal, a: &Exponent) -> Vec<usize> {
    let supp = a.support();
    let k = supp.len();
    debug_assert!(ideal.contains(a));

    // faces_by_size[s] = bitmasks of the s-subsets F of supp(a) with
    // x^a / x_F ∈ I, in ascending bitmask order
    let mut faces_by_size: Vec<Vec<u32>> = vec![Vec::new(); k + 1];
    for mask in 0u32..(1 << k) {
        let mut e = a.clone();
        for (bit, &var) in supp.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                e = e.div_var(var).expect("support variable divides");
            }
        }
        if ideal.contains(&e) {
            faces_by_size[mask.count_ones() as usize].push(mask);
        }
    }
    debug_assert_eq!(faces_by_size[0], vec![0]);

    // index of each face within its size class
    let index: Vec<BTreeMap<u32, usize>> = faces_by_size
        .iter()
        .map(|faces| faces.iter().enumerate().map(|(i, &m)| (m, i)).collect())
        .collect();

    // rank of the boundary map C_{s-1} -> C_{s-2}, i.e. from faces of size s
    // to faces of size s − 1 (size counts vertices, chain degree is size − 1)
    let boundary_rank = |s: usize| -> usize {
        if s == 0 || s > k || faces_by_size[s].is_empty() {
            return 0;
        }
        let rows = faces_by_size[s - 1].len();
        let mut cols = Vec::with_capacity(faces_by_size[s].len());
        for &mask in &faces_by_size[s] {
            let mut col = vec![BigRational::zero(); rows];
            let mut sign = 1i64;
            for bit in 0..k as u32 {
                if mask >> bit & 1 == 1 {
                    let sub = mask & !(1 << bit);
                    if let Some(&r) = index[s - 1].get(&sub) {
                        col[r] = BigRational::from_integer(BigInt::from(sign));
                    }
                    // a boundary face missing from the complex cannot happen:
                    // removing more variables keeps x^a / x_F in the ideal
                    debug_assert!(index[s - 1].contains_key(&sub));
                    sign = -sign;
                }
            }
            cols.push(col);
        }
        // transpose: RationalMatrix is row-major
        let matrix_rows: Vec<Vec<BigRational>> = (0..rows)
            .map(|r| cols.iter().map(|c| c[r].clone()).collect())
            .collect();
        matrix_rank(&RationalMatrix::from_rows(matrix_rows).expect("rectangular"))
    };

    // dim H̃_p = |C_p| − rank ∂_p − rank ∂_{p+1}, C_p = faces of size p + 1
    let ranks: Vec<usize> = (0..=k + 1).map(boundary_rank).collect();
    (0..=k)
        .map(|s| {
            let c_p = faces_by_size[s].len();
            c_p.saturating_sub(ranks[s]).saturating_sub(ranks[s + 1])
        })
        .collect()
}

/// Multigraded Betti numbers of S/I over ℚ.
pub fn betti_numbers(ideal: &MonomialIdeal, caps: &BettiCaps) -> Result<BettiTable, Error> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal("Betti numbers"));
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal("Betti numbers"));
    }
    let n = ideal.ring().n();
    if n > caps.max_n {
        return Err(Error::CapExceeded(format!(
            "Betti numbers support n ≤ {}, got n = {}",
            caps.max_n, n
        )));
    }

    let mut entries = BTreeMap::new();
    entries.insert((0, Exponent::zeros(n)), 1);
    for a in lcm_lattice(ideal) {
        let homology = koszul_homology(ideal, &a);
        for (p_plus_1, &h) in homology.iter().enumerate() {
            if h > 0 {
                // dim H̃_{p}(K^a) = β_{p+1, a}(I) = β_{p+2, a}(S/I)
                entries.insert((p_plus_1 + 1, a.clone()), h);
            }
        }
    }
    let table = BettiTable { entries };
    debug_assert!(betti_one_sits_on_generators(ideal, &table));
    Ok(table)
}

/// Sanity anchor: β_{1,a}(S/I) is 1 exactly at minimal generator
/// multidegrees and 0 elsewhere.
fn betti_one_sits_on_generators(ideal: &MonomialIdeal, table: &BettiTable) -> bool {
    let gen_set: BTreeSet<&Exponent> = ideal.gens().iter().collect();
    let at_one: BTreeSet<&Exponent> = table.multidegrees(1).into_iter().collect();
    gen_set.iter().all(|g| table.beta(1, g) == 1)
        && at_one.iter().all(|a| gen_set.contains(*a))
}

/// depth(S/I) = n − pd(S/I) over ℚ (Auslander–Buchsbaum).
pub fn depth_quotient(ideal: &MonomialIdeal, caps: &BettiCaps) -> Result<usize, Error> {
    let table = betti_numbers(ideal, caps)?;
    let pd = table.projective_dimension();
    let n = ideal.ring().n();
    debug_assert!(pd >= 1 && pd <= n, "pd of a proper nonzero monomial ideal");
    Ok(n - pd)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::PolyRing;
    use num_bigint::BigUint;
    use num_traits::One;

    fn ideal(n: usize, gens: &[&[u64]]) -> MonomialIdeal {
        let ring = PolyRing::new(n).unwrap();
        let gens = gens.iter().map(|g| Exponent::from_u64s(g)).collect();
        MonomialIdeal::new(ring, gens).unwrap()
    }

    fn caps() -> BettiCaps {
        BettiCaps::default()
    }

    #[test]
    fn principal_ideal_resolves_in_one_step() {
        let i = ideal(2, &[&[1, 1]]);
        let t = betti_numbers(&i, &caps()).unwrap();
        assert_eq!(t.beta(0, &Exponent::zeros(2)), 1);
        assert_eq!(t.beta(1, &Exponent::from_u64s(&[1, 1])), 1);
        assert_eq!(t.total(0), 1);
        assert_eq!(t.total(1), 1);
        assert_eq!(t.projective_dimension(), 1);
        assert_eq!(depth_quotient(&i, &caps()).unwrap(), 1);
    }

    #[test]
    fn koszul_complex_of_the_maximal_ideal() {
        // S/(x1, x2): Koszul resolution, β_1 at x1 and x2, β_2 at x1x2
        let i = ideal(2, &[&[1, 0], &[0, 1]]);
        let t = betti_numbers(&i, &caps()).unwrap();
        assert_eq!(t.beta(1, &Exponent::from_u64s(&[1, 0])), 1);
        assert_eq!(t.beta(1, &Exponent::from_u64s(&[0, 1])), 1);
        assert_eq!(t.beta(2, &Exponent::from_u64s(&[1, 1])), 1);
        assert_eq!(t.projective_dimension(), 2);
        assert_eq!(depth_quotient(&i, &caps()).unwrap(), 0);
    }

    #[test]
    fn path_of_two_edges_has_depth_one() {
        // I = (x1x2, x2x3): pd 2, depth 1; the interesting multidegree is
        // (1,1,1) where K^a = {∅, {x1}, {x3}} — two points, one extra
        // component, so β_{2,(1,1,1)}(S/I) = 1
        let i = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        let t = betti_numbers(&i, &caps()).unwrap();
        assert_eq!(t.total(1), 2);
        assert_eq!(t.beta(2, &Exponent::from_u64s(&[1, 1, 1])), 1);
        assert_eq!(t.total(2), 1);
        assert_eq!(t.projective_dimension(), 2);
        assert_eq!(depth_quotient(&i, &caps()).unwrap(), 1);
    }

    #[test]
    fn triangle_depth_and_betti_totals() {
        // I = (x1x2, x1x3, x2x3): β = (1, 3, 2), depth(S/I) = 1
        let i = ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        let t = betti_numbers(&i, &caps()).unwrap();
        assert_eq!(t.total(1), 3);
        assert_eq!(t.total(2), 2);
        assert_eq!(t.beta(2, &Exponent::from_u64s(&[1, 1, 1])), 2);
        assert_eq!(t.projective_dimension(), 2);
        assert_eq!(depth_quotient(&i, &caps()).unwrap(), 1);
    }

    #[test]
    fn hilbert_euler_characteristic_check() {
        // alternating Betti sums reproduce the Hilbert function of S/I on
        // the box [0, lcm]
        for i in [
            ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]),
            ideal(3, &[&[1, 1, 0], &[0, 1, 1]]),
            ideal(3, &[&[2, 1, 0], &[0, 1, 1], &[1, 0, 2]]),
        ] {
            let t = betti_numbers(&i, &caps()).unwrap();
            let g = i.gens_join().unwrap();
            let n = i.ring().n();
            let mut cursor = vec![BigUint::zero(); n];
            loop {
                let a = Exponent::new(cursor.clone());
                let hilbert: i64 = if i.contains(&a) { 0 } else { 1 };
                let mut alternating = 0i64;
                for (idx, b, v) in t.entries() {
                    if b.divides(&a) {
                        let sign = if idx % 2 == 0 { 1 } else { -1 };
                        alternating += sign * v as i64;
                    }
                }
                assert_eq!(hilbert, alternating, "multidegree {a:?} of {i}");
                let mut j = n;
                let mut done = true;
                while j > 0 {
                    j -= 1;
                    if cursor[j] < *g.coord(j) {
                        cursor[j] += BigUint::one();
                        for c in cursor.iter_mut().skip(j + 1) {
                            *c = BigUint::zero();
                        }
                        done = false;
                        break;
                    }
                }
                if done {
                    break;
                }
            }
        }
    }

    #[test]
    fn caps_and_degenerate_inputs_error() {
        let i = ideal(9, &[&[1, 0, 0, 0, 0, 0, 0, 0, 0]]);
        assert!(matches!(
            betti_numbers(&i, &caps()),
            Err(Error::CapExceeded(_))
        ));
        let ring = PolyRing::new(2).unwrap();
        assert!(betti_numbers(&MonomialIdeal::zero(ring.clone()), &caps()).is_err());
        assert!(depth_quotient(&MonomialIdeal::unit(ring), &caps()).is_err());
    }
}
