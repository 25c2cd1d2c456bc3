//! Exact Stanley depth through interval partitions of the characteristic
//! poset.
//!
//! Let g be the componentwise max of the minimal generators. The monomials
//! of the target module are determined by their clamp min(m, g) into the box
//! [0, g]: the characteristic poset holds the box elements belonging to the
//! target. A partition of the poset into intervals [c, d] — all box elements
//! between c and d, automatically poset members because the poset is up- or
//! down-closed in the box — yields a Stanley decomposition whose depth is
//! min |Z(d)| over the intervals, Z(d) = {j : d_j = g_j}, and the maximum
//! over all interval partitions is exactly the Stanley depth. The search
//! raises a threshold s while a partition with all |Z(d)| ≥ s exists,
//! branching on the lex-least uncovered element (which is dominance-minimal,
//! hence forced to be an interval bottom) and memoizing dead uncovered-sets.

use crate::decomp::{StanleyDecomposition, StanleySpace, Target};
use crate::error::Error;
use crate::exponent::Exponent;
use crate::ideal::MonomialIdeal;
use num_bigint::BigUint;
use num_traits::{One, Zero};
use std::collections::{BTreeSet, HashSet};

/// Feasibility guard for the exponential poset search.
#[derive(Clone, Copy, Debug)]
pub struct OracleCaps {
    pub max_n: usize,
    pub max_poset: usize,
}

impl Default for OracleCaps {
    fn default() -> Self {
        OracleCaps { max_n: 6, max_poset: 4096 }
    }
}

/// The box elements carrying the target module: {a ≤ g : x^a ∈ I} for the
/// ideal, {a ≤ g : x^a ∉ I} for the quotient. Elements are lex-ascending.
#[derive(Clone, Debug)]
pub struct CharacteristicPoset {
    target: Target,
    bound: Exponent,
    elements: Vec<Exponent>,
}

impl CharacteristicPoset {
    pub fn target(&self) -> Target {
        self.target
    }

    /// The componentwise generator max g.
    pub fn bound(&self) -> &Exponent {
        &self.bound
    }

    pub fn elements(&self) -> &[Exponent] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Build the characteristic poset, enforcing the caps: n ≤ max_n and box
/// size ∏(g_j + 1) ≤ max_poset.
pub fn characteristic_poset(
    ideal: &MonomialIdeal,
    target: Target,
    caps: &OracleCaps,
) -> Result<CharacteristicPoset, Error> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal("exact Stanley depth"));
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal("exact Stanley depth"));
    }
    let n = ideal.ring().n();
    if n > caps.max_n {
        return Err(Error::CapExceeded(format!(
            "exact Stanley depth supports n ≤ {}, got n = {}",
            caps.max_n, n
        )));
    }
    let g = ideal.gens_join()?;
    let mut size = BigUint::one();
    for j in 0..n {
        size *= g.coord(j) + 1u32;
    }
    if size > BigUint::from(caps.max_poset) {
        return Err(Error::CapExceeded(format!(
            "characteristic box has {} elements, cap is {}",
            size, caps.max_poset
        )));
    }

    let mut elements = Vec::new();
    let mut cursor = vec![BigUint::zero(); n];
    loop {
        let e = Exponent::new(cursor.clone());
        let member = ideal.contains(&e);
        let wanted = match target {
            Target::Ideal => member,
            Target::Quotient => !member,
        };
        if wanted {
            elements.push(e);
        }
        let mut j = n;
        loop {
            if j == 0 {
                return Ok(CharacteristicPoset { target, bound: g, elements });
            }
            j -= 1;
            if cursor[j] < *g.coord(j) {
                cursor[j] += 1u32;
                for c in cursor.iter_mut().skip(j + 1) {
                    *c = BigUint::zero();
                }
                break;
            }
        }
    }
}

/// Fixed-size bitset over poset element indices.
#[derive(Clone, PartialEq, Eq, Hash)]
struct BitSet(Vec<u64>);

impl BitSet {
    fn empty(n: usize) -> Self {
        BitSet(vec![0; n.div_ceil(64)])
    }

    fn full(n: usize) -> Self {
        let mut b = BitSet(vec![!0u64; n.div_ceil(64)]);
        let tail = n % 64;
        if tail != 0 {
            *b.0.last_mut().unwrap() = (1u64 << tail) - 1;
        }
        b
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn is_subset(&self, other: &BitSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    fn subtract(&self, other: &BitSet) -> BitSet {
        BitSet(self.0.iter().zip(&other.0).map(|(a, b)| a & !b).collect())
    }

    fn and(&self, other: &BitSet) -> BitSet {
        BitSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn first_set(&self) -> Option<usize> {
        for (w, &word) in self.0.iter().enumerate() {
            if word != 0 {
                return Some(w * 64 + word.trailing_zeros() as usize);
            }
        }
        None
    }
}

struct Search {
    n_elems: usize,
    /// up[i]: elements ≥ element i (componentwise)
    up: Vec<BitSet>,
    /// down[i]: elements ≤ element i
    down: Vec<BitSet>,
    /// zdim[i]: |Z(e_i)| = number of coordinates where e_i hits the bound
    zdim: Vec<usize>,
    /// all element indices, by zdim descending then index ascending
    by_zdim: Vec<usize>,
}

impl Search {
    fn new(poset: &CharacteristicPoset) -> Self {
        let n_elems = poset.elements.len();
        let n = poset.bound.len();
        // caps guarantee every coordinate fits comfortably in u64
        let coords: Vec<Vec<u64>> = poset
            .elements
            .iter()
            .map(|e| {
                e.coords()
                    .iter()
                    .map(|c| u64::try_from(c).expect("capped poset coordinate"))
                    .collect()
            })
            .collect();
        let bound: Vec<u64> = poset
            .bound
            .coords()
            .iter()
            .map(|c| u64::try_from(c).expect("capped poset coordinate"))
            .collect();
        let mut up = vec![BitSet::empty(n_elems); n_elems];
        let mut down = vec![BitSet::empty(n_elems); n_elems];
        for i in 0..n_elems {
            for j in 0..n_elems {
                if (0..n).all(|k| coords[i][k] <= coords[j][k]) {
                    up[i].set(j);
                    down[j].set(i);
                }
            }
        }
        let zdim: Vec<usize> = (0..n_elems)
            .map(|i| (0..n).filter(|&k| coords[i][k] == bound[k]).count())
            .collect();
        let mut by_zdim: Vec<usize> = (0..n_elems).collect();
        by_zdim.sort_by_key(|&i| (std::cmp::Reverse(zdim[i]), i));
        Search { n_elems, up, down, zdim, by_zdim }
    }

    /// Find an interval partition of `uncovered` with every top's zdim ≥ s.
    /// Returns interval (bottom, top) index pairs, or None.
    fn cover(
        &self,
        uncovered: &BitSet,
        s: usize,
        dead: &mut HashSet<BitSet>,
        out: &mut Vec<(usize, usize)>,
    ) -> bool {
        let Some(c) = uncovered.first_set() else {
            return true;
        };
        if dead.contains(uncovered) {
            return false;
        }
        for &d in &self.by_zdim {
            if self.zdim[d] < s {
                break; // sorted descending
            }
            if !self.up[c].get(d) {
                continue;
            }
            let interval = self.up[c].and(&self.down[d]);
            if !interval.is_subset(uncovered) {
                continue;
            }
            out.push((c, d));
            if self.cover(&uncovered.subtract(&interval), s, dead, out) {
                return true;
            }
            out.pop();
        }
        dead.insert(uncovered.clone());
        false
    }
}

/// The exact Stanley depth together with a witness decomposition realizing it.
#[derive(Clone, Debug)]
pub struct ExactSdepth {
    pub value: usize,
    pub witness: StanleyDecomposition,
}

/// Compute sdepth of the target module exactly by the interval-partition
/// search, within the caps. The witness converts each interval [c, d] into
/// Stanley spaces with free set Z(d) and passes `decomp::verify`.
pub fn exact_sdepth(
    ideal: &MonomialIdeal,
    target: Target,
    caps: &OracleCaps,
) -> Result<ExactSdepth, Error> {
    let poset = characteristic_poset(ideal, target, caps)?;
    let n = ideal.ring().n();
    debug_assert!(!poset.is_empty(), "proper nonzero ideals fill both targets");
    let search = Search::new(&poset);

    // s = 0 always works (singleton intervals); raise while feasible
    let mut best: Vec<(usize, usize)> = Vec::new();
    let full = BitSet::full(search.n_elems);
    {
        let mut dead = HashSet::new();
        let ok = search.cover(&full, 0, &mut dead, &mut best);
        debug_assert!(ok, "threshold 0 cannot fail");
    }
    let mut value = 0usize;
    for s in 1..=n {
        let mut dead = HashSet::new();
        let mut intervals = Vec::new();
        if search.cover(&full, s, &mut dead, &mut intervals) {
            value = s;
            best = intervals;
        } else {
            break;
        }
    }

    let mut spaces = Vec::new();
    for &(c, d) in &best {
        spaces.extend(interval_spaces(
            &poset.elements[c],
            &poset.elements[d],
            poset.bound(),
        ));
    }
    let witness = StanleyDecomposition::new(target, ideal.clone(), spaces)?;
    debug_assert_eq!(witness.sdepth(), value, "witness must realize the optimum");
    Ok(ExactSdepth { value, witness })
}

/// Stanley spaces of one interval [c, d]: free set Z(d) = {j : d_j = g_j},
/// one space per choice of e_j in [c_j, d_j] on the non-free coordinates
/// (base has c_j on the free ones).
fn interval_spaces(c: &Exponent, d: &Exponent, g: &Exponent) -> Vec<StanleySpace> {
    let n = g.len();
    let free: BTreeSet<usize> = (0..n).filter(|&j| d.coord(j) == g.coord(j)).collect();
    let pinned: Vec<usize> = (0..n).filter(|j| !free.contains(j)).collect();
    let mut spaces = Vec::new();
    let mut choice: Vec<BigUint> = pinned.iter().map(|&j| c.coord(j).clone()).collect();
    loop {
        let mut base = c.clone();
        for (idx, &j) in pinned.iter().enumerate() {
            base = base.with_coord(j, choice[idx].clone());
        }
        spaces.push(StanleySpace::new(base, free.clone()));
        let mut idx = pinned.len();
        loop {
            if idx == 0 {
                return spaces;
            }
            idx -= 1;
            if choice[idx] < *d.coord(pinned[idx]) {
                choice[idx] += 1u32;
                for (k, &j) in pinned.iter().enumerate().skip(idx + 1) {
                    choice[k] = c.coord(j).clone();
                }
                break;
            }
        }
    }
}
