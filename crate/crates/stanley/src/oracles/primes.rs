//! Irreducible decomposition and associated primes of a monomial ideal.
//!
//! The decomposition splits any generator with two or more support
//! variables: writing u = u1 · u2 with u1 a pure power of the first support
//! variable and gcd(u1, u2) = 1, we have I + (u) = (I + (u1)) ∩ (I + (u2)).
//! Leaves of the recursion are generated by pure powers, i.e. irreducible
//! ideals (x_{j1}^{a1}, ..., x_{jk}^{ak}). Redundant components are those
//! containing another component; since an irreducible monomial ideal C with
//! A ∩ B ⊆ C satisfies A ⊆ C or B ⊆ C, dropping pairwise-redundant
//! components yields the unique irredundant decomposition.
//!
//! The radicals of the irredundant components are exactly the associated
//! primes of S/I, identified with their supports.

use crate::error::Error;
use crate::exponent::Exponent;
use crate::ideal::MonomialIdeal;
use crate::ring::PolyRing;
use num_bigint::BigUint;
use std::collections::{BTreeMap, BTreeSet};

/// Budget for the splitting recursion; the tree can be exponential in the
/// number of mixed-support generators.
#[derive(Clone, Copy, Debug)]
pub struct PrimeCaps {
    pub max_leaves: usize,
}

impl Default for PrimeCaps {
    fn default() -> Self {
        PrimeCaps { max_leaves: 65536 }
    }
}

/// An irreducible monomial ideal (x_j^{b_j} : j ∈ supp), stored as the
/// exponent bound per support variable.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct IrreducibleComponent {
    bounds: BTreeMap<usize, BigUint>,
}

impl IrreducibleComponent {
    pub fn bounds(&self) -> &BTreeMap<usize, BigUint> {
        &self.bounds
    }

    /// Support of the component = its associated prime {x_j : j ∈ supp}.
    pub fn support(&self) -> BTreeSet<usize> {
        self.bounds.keys().copied().collect()
    }

    /// Membership: x^a lies in the component iff some a_j reaches b_j.
    pub fn contains(&self, a: &Exponent) -> bool {
        self.bounds.iter().any(|(&j, b)| a.coord(j) >= b)
    }

    /// The component as an ideal of `ring`.
    pub fn to_ideal(&self, ring: &PolyRing) -> MonomialIdeal {
        let gens = self
            .bounds
            .iter()
            .map(|(&j, b)| Exponent::zeros(ring.n()).with_coord(j, b.clone()))
            .collect();
        MonomialIdeal::new(ring.clone(), gens).expect("pure powers form an antichain")
    }

    /// self ⊇ other as ideals: every bound of self is matched by a bound of
    /// other that is at least as strong (other's generator lies in self).
    fn contains_component(&self, other: &IrreducibleComponent) -> bool {
        other
            .bounds
            .iter()
            .all(|(j, b)| self.bounds.get(j).is_some_and(|mine| mine <= b))
    }
}

/// Splitting recursion: `bounds` is the irreducible ideal accumulated so
/// far (absence of a variable = unconstrained), `todo` the generators not
/// yet absorbed into it. Uses I + (u) = ∩_{j ∈ supp(u)} (I + (x_j^{u_j})).
fn split(
    bounds: &mut BTreeMap<usize, BigUint>,
    todo: &[Exponent],
    leaves: &mut Vec<IrreducibleComponent>,
    budget: &mut usize,
) -> Result<(), Error> {
    // a generator already inside the current irreducible ideal is absorbed;
    // bounds only shrink along a branch, so skipped gens stay absorbed
    let absorbed = |g: &Exponent| bounds.iter().any(|(&j, b)| g.coord(j) >= b);
    let Some(pos) = todo.iter().position(|g| !absorbed(g)) else {
        if *budget == 0 {
            return Err(Error::CapExceeded(
                "irreducible decomposition leaf budget exhausted".into(),
            ));
        }
        *budget -= 1;
        leaves.push(IrreducibleComponent {
            bounds: bounds.clone(),
        });
        return Ok(());
    };
    let g = &todo[pos];
    let rest = &todo[pos + 1..];
    for j in g.support() {
        let b = g.coord(j).clone();
        let prev = bounds.insert(j, b);
        // g unabsorbed means g_j < prev for every already-bounded j, so the
        // insertion always strictly tightens (map_or, not is_none_or: the
        // latter needs a newer toolchain than this crate assumes)
        #[allow(clippy::unnecessary_map_or)]
        {
            debug_assert!(prev.as_ref().map_or(true, |p| bounds[&j] < *p));
        }
        split(bounds, rest, leaves, budget)?;
        match prev {
            Some(p) => bounds.insert(j, p),
            None => bounds.remove(&j),
        };
    }
    Ok(())
}

/// The irredundant irreducible decomposition I = C_1 ∩ ... ∩ C_r.
pub fn irreducible_decomposition(
    ideal: &MonomialIdeal,
    caps: &PrimeCaps,
) -> Result<Vec<IrreducibleComponent>, Error> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal("irreducible decomposition"));
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal("irreducible decomposition"));
    }
    let mut leaves = Vec::new();
    let mut bounds = BTreeMap::new();
    let mut budget = caps.max_leaves;
    split(&mut bounds, ideal.gens(), &mut leaves, &mut budget)?;

    leaves.sort();
    leaves.dedup();
    // drop components that contain another component (strictly weaker ones;
    // after dedup, mutual containment means equality, already removed)
    let keep: Vec<bool> = leaves
        .iter()
        .map(|c| {
            !leaves
                .iter()
                .any(|other| other != c && c.contains_component(other))
        })
        .collect();
    let components: Vec<IrreducibleComponent> = leaves
        .into_iter()
        .zip(keep)
        .filter_map(|(c, k)| k.then_some(c))
        .collect();
    debug_assert!(!components.is_empty());
    Ok(components)
}

/// Associated primes of S/I, each given by its support set of variable
/// indices (0-based), sorted.
pub fn associated_primes(
    ideal: &MonomialIdeal,
    caps: &PrimeCaps,
) -> Result<BTreeSet<BTreeSet<usize>>, Error> {
    let components = irreducible_decomposition(ideal, caps)?;
    Ok(components.iter().map(|c| c.support()).collect())
}

/// Maximum height of an associated prime of S/I = its largest support size.
pub fn max_ass_height(ideal: &MonomialIdeal, caps: &PrimeCaps) -> Result<usize, Error> {
    let primes = associated_primes(ideal, caps)?;
    Ok(primes.iter().map(|p| p.len()).max().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&[u64]]) -> MonomialIdeal {
        let ring = PolyRing::new(n).unwrap();
        let gens = gens.iter().map(|g| Exponent::from_u64s(g)).collect();
        MonomialIdeal::new(ring, gens).unwrap()
    }

    fn caps() -> PrimeCaps {
        PrimeCaps::default()
    }

    fn prime(vars: &[usize]) -> BTreeSet<usize> {
        vars.iter().copied().collect()
    }

    /// Intersection-of-components membership must match the ideal on a box
    /// slightly beyond the generator lcm.
    fn check_decomposition(i: &MonomialIdeal, comps: &[IrreducibleComponent]) {
        let n = i.ring().n();
        let g = i.gens_join().unwrap();
        let mut cursor = vec![0u64; n];
        let bound: Vec<u64> = (0..n)
            .map(|j| u64::try_from(g.coord(j)).unwrap() + 1)
            .collect();
        loop {
            let a = Exponent::from_u64s(&cursor);
            let in_all = comps.iter().all(|c| c.contains(&a));
            assert_eq!(i.contains(&a), in_all, "membership mismatch at {cursor:?}");
            let mut j = n;
            let mut done = true;
            while j > 0 {
                j -= 1;
                if cursor[j] < bound[j] {
                    cursor[j] += 1;
                    cursor[j + 1..].fill(0);
                    done = false;
                    break;
                }
            }
            if done {
                return;
            }
        }
    }

    #[test]
    fn triangle_has_the_three_codimension_two_primes() {
        let i = ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        let primes = associated_primes(&i, &caps()).unwrap();
        let expected: BTreeSet<_> = [prime(&[0, 1]), prime(&[0, 2]), prime(&[1, 2])]
            .into_iter()
            .collect();
        assert_eq!(primes, expected);
        assert_eq!(max_ass_height(&i, &caps()).unwrap(), 2);
        check_decomposition(&i, &irreducible_decomposition(&i, &caps()).unwrap());
    }

    #[test]
    fn pure_powers_are_their_own_decomposition() {
        let i = ideal(3, &[&[2, 0, 0], &[0, 3, 0]]);
        let comps = irreducible_decomposition(&i, &caps()).unwrap();
        assert_eq!(comps.len(), 1);
        let bounds = comps[0].bounds();
        assert_eq!(bounds.len(), 2);
        assert_eq!(bounds[&0], BigUint::from(2u32));
        assert_eq!(bounds[&1], BigUint::from(3u32));
        assert_eq!(max_ass_height(&i, &caps()).unwrap(), 2);
    }

    #[test]
    fn principal_mixed_monomial_splits_into_pure_powers() {
        // (x1^2 x2) = (x1^2) ∩ (x2)
        let i = ideal(2, &[&[2, 1]]);
        let comps = irreducible_decomposition(&i, &caps()).unwrap();
        assert_eq!(comps.len(), 2);
        let primes = associated_primes(&i, &caps()).unwrap();
        assert_eq!(primes, [prime(&[0]), prime(&[1])].into_iter().collect());
        assert_eq!(max_ass_height(&i, &caps()).unwrap(), 1);
        check_decomposition(&i, &comps);
    }

    #[test]
    fn embedded_prime_of_a_mixed_intersection() {
        // I = (x1^2, x1x2) = (x1) ∩ (x1^2, x2): Ass = {(x1), (x1, x2)}
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        let primes = associated_primes(&i, &caps()).unwrap();
        assert_eq!(primes, [prime(&[0]), prime(&[0, 1])].into_iter().collect());
        assert_eq!(max_ass_height(&i, &caps()).unwrap(), 2);
        check_decomposition(&i, &irreducible_decomposition(&i, &caps()).unwrap());
    }

    #[test]
    fn redundant_branches_are_pruned() {
        // (x1x2, x2x3) = (x2) ∩ (x1, x3); naive splitting also produces
        // (x1, x2) and (x2, x3), both containing (x2)
        let i = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        let primes = associated_primes(&i, &caps()).unwrap();
        assert_eq!(primes, [prime(&[1]), prime(&[0, 2])].into_iter().collect());
        check_decomposition(&i, &irreducible_decomposition(&i, &caps()).unwrap());
    }

    #[test]
    fn mixed_exponents_keep_distinct_bounds() {
        // I = (x1^2, x1x2^3) = (x1) ∩ (x1^2, x2^3)
        let i = ideal(2, &[&[2, 0], &[1, 3]]);
        let comps = irreducible_decomposition(&i, &caps()).unwrap();
        assert_eq!(comps.len(), 2);
        let deep = comps
            .iter()
            .find(|c| c.support().len() == 2)
            .expect("embedded component");
        assert_eq!(deep.bounds()[&0], BigUint::from(2u32));
        assert_eq!(deep.bounds()[&1], BigUint::from(3u32));
        check_decomposition(&i, &comps);
        let as_ideal = deep.to_ideal(i.ring());
        assert_eq!(as_ideal.num_gens(), 2);
        assert!(as_ideal.contains(&Exponent::from_u64s(&[2, 0])));
        assert!(!as_ideal.contains(&Exponent::from_u64s(&[1, 2])));
    }

    #[test]
    fn budget_cap_reports_instead_of_hanging() {
        let i = ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        let tight = PrimeCaps { max_leaves: 1 };
        assert!(matches!(
            irreducible_decomposition(&i, &tight),
            Err(Error::CapExceeded(_))
        ));
    }

    #[test]
    fn unit_and_zero_are_rejected() {
        let ring = PolyRing::new(2).unwrap();
        assert!(associated_primes(&MonomialIdeal::zero(ring.clone()), &caps()).is_err());
        assert!(max_ass_height(&MonomialIdeal::unit(ring), &caps()).is_err());
    }

    #[test]
    fn random_style_mixed_ideal_against_box_membership() {
        let i = ideal(3, &[&[3, 0, 1], &[1, 2, 0], &[0, 1, 2], &[2, 2, 2]]);
        let comps = irreducible_decomposition(&i, &caps()).unwrap();
        check_decomposition(&i, &comps);
        assert!(max_ass_height(&i, &caps()).unwrap() <= 3);
    }
}
