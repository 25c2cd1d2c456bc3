use crate::error::Error;
use crate::exponent::Exponent;
use crate::ring::PolyRing;
use num_bigint::BigUint;
use std::collections::BTreeSet;
use std::fmt;

/// Remove duplicates and non-minimal elements: `u` survives iff no other kept
/// element divides it. The result is an antichain under componentwise ≤,
/// sorted lexicographically.
///
/// Divisors precede their multiples in lex order, so a single forward pass
/// over the sorted, deduplicated list suffices.
pub fn minimalize(gens: &[Exponent]) -> Vec<Exponent> {
    let mut sorted: Vec<Exponent> = gens.to_vec();
    sorted.sort();
    sorted.dedup();
    let mut kept: Vec<Exponent> = Vec::new();
    for u in sorted {
        if !kept.iter().any(|v| v.divides(&u)) {
            kept.push(u);
        }
    }
    kept
}

/// A monomial ideal, stored by its unique minimal generating set.
///
/// Invariants: every generator has length `ring.n()`, the generator list is
/// an antichain under divisibility, sorted lexicographically, duplicate-free.
/// The zero ideal (no generators) and the unit ideal (single generator 1)
/// are representable; operations backed by theorems about proper nonzero
/// ideals reject them explicitly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    ring: PolyRing,
    gens: Vec<Exponent>,
}

impl MonomialIdeal {
    /// Build from an arbitrary generating set; minimalizes first.
    pub fn new(ring: PolyRing, gens: Vec<Exponent>) -> Result<Self, Error> {
        for g in &gens {
            if g.len() != ring.n() {
                return Err(Error::InvalidInput(format!(
                    "generator has {} coordinates, ring has {} variables",
                    g.len(),
                    ring.n()
                )));
            }
        }
        Ok(MonomialIdeal {
            gens: minimalize(&gens),
            ring,
        })
    }

    pub fn zero(ring: PolyRing) -> Self {
        MonomialIdeal { ring, gens: Vec::new() }
    }

    pub fn unit(ring: PolyRing) -> Self {
        let n = ring.n();
        MonomialIdeal {
            ring,
            gens: vec![Exponent::zeros(n)],
        }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    /// Minimal generators, lex-sorted.
    pub fn gens(&self) -> &[Exponent] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    /// Proper means neither zero nor the whole ring.
    pub fn is_proper_nonzero(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    /// Membership x^e ∈ I: some minimal generator divides x^e.
    pub fn contains(&self, e: &Exponent) -> bool {
        assert_eq!(e.len(), self.ring.n(), "exponent length must match ring");
        self.gens.iter().any(|g| g.divides(e))
    }

    /// The colon ideal (I : x_j), minimally generated.
    ///
    /// Generators are u/x_j when x_j divides u, u otherwise; the union is
    /// minimalized. For a weakly polymatroidal ideal and j the order-first
    /// variable in the support this minimalization is provably a no-op on
    /// the divided part — only divided generators survive — which is checked
    /// in debug builds.
    pub fn colon_by_variable(&self, var: usize) -> Result<MonomialIdeal, Error> {
        self.ring.check_var(var)?;
        if self.is_zero() {
            return Err(Error::ZeroIdeal("colon of the zero ideal"));
        }
        let moved: Vec<Exponent> = self
            .gens
            .iter()
            .map(|u| u.div_var(var).unwrap_or_else(|| u.clone()))
            .collect();
        let result = MonomialIdeal {
            ring: self.ring.clone(),
            gens: minimalize(&moved),
        };
        #[cfg(debug_assertions)]
        self.debug_check_colon_lemma(var, &result);
        Ok(result)
    }

    /// Debug-mode check of the colon lemma: weakly polymatroidal + x_first in
    /// the support implies (I : x_first) is minimally generated by exactly
    /// { u/x_first : x_first | u }, with no minimalization losses.
    #[cfg(debug_assertions)]
    fn debug_check_colon_lemma(&self, var: usize, result: &MonomialIdeal) {
        if var != self.ring.first_variable() {
            return;
        }
        if !self.gens.iter().any(|u| u.in_support(var)) {
            return;
        }
        let witness = match crate::wpm::is_weakly_polymatroidal(self) {
            Ok(w) => w,
            Err(_) => return,
        };
        if !witness.holds() {
            return;
        }
        let mut expected: Vec<Exponent> = self
            .gens
            .iter()
            .filter_map(|u| u.div_var(var))
            .collect();
        expected.sort();
        debug_assert_eq!(
            result.gens, expected,
            "colon lemma violated: (I : x_first) of a weakly polymatroidal ideal \
             must be generated exactly by the divided generators"
        );
    }

    /// The elimination ideal I ∩ K[x_i : i ≠ j], i.e. the generators not
    /// divisible by x_j, viewed in the same ambient ring. May be zero.
    pub fn eliminate_variable(&self, var: usize) -> Result<MonomialIdeal, Error> {
        self.ring.check_var(var)?;
        if self.is_zero() {
            return Err(Error::ZeroIdeal("elimination from the zero ideal"));
        }
        let kept: Vec<Exponent> = self
            .gens
            .iter()
            .filter(|u| !u.in_support(var))
            .cloned()
            .collect();
        Ok(MonomialIdeal {
            ring: self.ring.clone(),
            gens: kept,
        })
    }

    /// All generator exponents ≤ 1.
    pub fn is_squarefree(&self) -> Result<bool, Error> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal("squarefree test on the zero ideal"));
        }
        Ok(self.gens.iter().all(|g| g.is_squarefree()))
    }

    /// All generators of equal total degree.
    pub fn is_single_degree(&self) -> Result<bool, Error> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal("degree test on the zero ideal"));
        }
        let d = self.gens[0].total_degree();
        Ok(self.gens.iter().all(|g| g.total_degree() == d))
    }

    /// Union of generator supports.
    pub fn support_union(&self) -> Result<BTreeSet<usize>, Error> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal("support of the zero ideal"));
        }
        let mut s = BTreeSet::new();
        for g in &self.gens {
            s.extend(g.support());
        }
        Ok(s)
    }

    /// Does x_j divide some minimal generator?
    pub fn variable_in_support(&self, var: usize) -> Result<bool, Error> {
        self.ring.check_var(var)?;
        Ok(self.gens.iter().any(|g| g.in_support(var)))
    }

    /// Sum of generator total degrees (the termination measure of the
    /// decomposition recursion).
    pub fn sum_gen_degrees(&self) -> BigUint {
        self.gens.iter().map(|g| g.total_degree()).sum()
    }

    /// Componentwise max over generators, the exponent of lcm(G(I)).
    /// Errors on the zero ideal.
    pub fn gens_join(&self) -> Result<Exponent, Error> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal("lcm of zero ideal generators"));
        }
        let mut acc = self.gens[0].clone();
        for g in &self.gens[1..] {
            acc = acc.join(g);
        }
        Ok(acc)
    }

    /// Replace the ring order, keeping the generators.
    pub fn with_order(self, order: Vec<usize>) -> Result<MonomialIdeal, Error> {
        let ring = self.ring.with_order(order)?;
        Ok(MonomialIdeal { ring, gens: self.gens })
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        let parts: Vec<String> = self
            .gens
            .iter()
            .map(|g| self.ring.format_monomial(g))
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}
