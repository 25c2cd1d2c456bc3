//! The weakly polymatroidal property and order search.
//!
//! An ideal is weakly polymatroidal with respect to the ring's variable
//! order when for every ordered pair of distinct minimal generators u, v
//! with u's exponent larger at the first order position where they differ
//! (say variable x_t there), some later variable x_j divides v with
//! x_t · v / x_j back in the ideal. The property depends on the order;
//! `find_wpm_order` searches all permutations for one that works.

use crate::error::Error;
use crate::exponent::Exponent;
use crate::ideal::MonomialIdeal;
use itertools::Itertools;

/// Cutoff for `find_wpm_order`'s factorial search over variable orders.
pub const DEFAULT_FIND_ORDER_LIMIT: usize = 9;

/// A generator pair violating the weakly polymatroidal condition:
/// `t` is the (0-based) variable where u first exceeds v in the order,
/// and no admissible exchange variable exists for v.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WpmFailure {
    pub u: Exponent,
    pub v: Exponent,
    pub t: usize,
}

/// Verdict of the weakly polymatroidal check, with a re-checkable
/// counterexample pair when it fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WpmWitness {
    failure: Option<WpmFailure>,
}

impl WpmWitness {
    pub fn holds(&self) -> bool {
        self.failure.is_none()
    }

    pub fn failure(&self) -> Option<&WpmFailure> {
        self.failure.as_ref()
    }
}

/// Check the weakly polymatroidal property against the ideal ring's order.
/// Errors on the zero and unit ideals, which the underlying theory excludes.
pub fn is_weakly_polymatroidal(ideal: &MonomialIdeal) -> Result<WpmWitness, Error> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal("weakly polymatroidal test"));
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal("weakly polymatroidal test"));
    }
    let order = ideal.ring().order();
    let gens = ideal.gens();
    for u in gens {
        for v in gens {
            if u == v {
                continue;
            }
            // First order position where u and v differ decides whether the
            // pair (u, v) is constrained at all.
            let Some(p) = (0..order.len()).find(|&p| u.coord(order[p]) != v.coord(order[p]))
            else {
                continue;
            };
            let t = order[p];
            if u.coord(t) < v.coord(t) {
                continue;
            }
            let fixed = order[p + 1..].iter().any(|&j| {
                v.div_var(j)
                    .map(|w| ideal.contains(&w.mul_var(t)))
                    .unwrap_or(false)
            });
            if !fixed {
                return Ok(WpmWitness {
                    failure: Some(WpmFailure { u: u.clone(), v: v.clone(), t }),
                });
            }
        }
    }
    Ok(WpmWitness { failure: None })
}

/// Search all n! variable orders (lexicographically, so the result is
/// deterministic) for one making the ideal weakly polymatroidal. Returns
/// the first such order as a permutation, or `None`. Errors when n exceeds
/// `limit` — the search is factorial.
pub fn find_wpm_order(
    ideal: &MonomialIdeal,
    limit: usize,
) -> Result<Option<Vec<usize>>, Error> {
    let n = ideal.ring().n();
    if n > limit {
        return Err(Error::CapExceeded(format!(
            "order search over {n} variables exceeds the limit of {limit} ({n}! orders)"
        )));
    }
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal("weakly polymatroidal order search"));
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal("weakly polymatroidal order search"));
    }
    for perm in (0..n).permutations(n) {
        let candidate = ideal.clone().with_order(perm.clone())?;
        if is_weakly_polymatroidal(&candidate)?.holds() {
            return Ok(Some(perm));
        }
    }
    Ok(None)
}
