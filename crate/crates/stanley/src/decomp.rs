//! Stanley spaces, Stanley decompositions, and the recursive constructions
//! for weakly polymatroidal and squarefree ideals.
//!
//! A Stanley space x^u · K[Z] is a base monomial with a set of free
//! variables; a Stanley decomposition writes the monomials of I (target
//! `Ideal`) or of S ∖ I (target `Quotient`) as a disjoint union of such
//! spaces. The recursions here split at the order-first support variable f:
//! monomials with f-degree zero are handled through the elimination ideal,
//! the rest through the colon ideal (I : x_f), and the colon lemma keeps the
//! colon side weakly polymatroidal with strictly smaller total degree. Each
//! recursion step asserts (in debug builds) the rank monotonicity lemmas it
//! leans on:
//!
//! ```text
//! arank(I : x_f) ≤ arank(I)          weakly polymatroidal I
//! arank(I ∩ S') + 1 ≤ arank(I)       f in the support, I ∩ S' ≠ 0
//! rank(I : x_j)  ≤ rank(I)           squarefree I, every j
//! ```

use crate::error::Error;
use crate::exponent::Exponent;
use crate::ideal::MonomialIdeal;
#[cfg(debug_assertions)]
use crate::rank::{arank_of_ideal, rank_of_ideal};
use crate::ring::PolyRing;
use crate::wpm::is_weakly_polymatroidal;
use num_bigint::BigUint;
use num_traits::Zero;
use std::collections::BTreeSet;
use std::fmt;

/// Which module a decomposition describes: the ideal I itself or S/I.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Ideal,
    Quotient,
}

impl Target {
    pub fn as_str(self) -> &'static str {
        match self {
            Target::Ideal => "ideal",
            Target::Quotient => "quotient",
        }
    }
}

/// A Stanley space x^base · K[free]: monomials agreeing with `base` outside
/// `free` and at least `base` on `free`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct StanleySpace {
    base: Exponent,
    free: BTreeSet<usize>,
}

impl StanleySpace {
    pub fn new(base: Exponent, free: BTreeSet<usize>) -> Self {
        StanleySpace { base, free }
    }

    pub fn base(&self) -> &Exponent {
        &self.base
    }

    pub fn free(&self) -> &BTreeSet<usize> {
        &self.free
    }

    /// Dimension of the space as a K-vector-space summand, |free|.
    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn contains(&self, e: &Exponent) -> bool {
        debug_assert_eq!(e.len(), self.base.len());
        (0..e.len()).all(|j| {
            if self.free.contains(&j) {
                e.coord(j) >= self.base.coord(j)
            } else {
                e.coord(j) == self.base.coord(j)
            }
        })
    }
}

/// A list of pairwise disjoint Stanley spaces covering the target module,
/// kept sorted by (base, free) for reproducible output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StanleyDecomposition {
    target: Target,
    ideal: MonomialIdeal,
    spaces: Vec<StanleySpace>,
}

impl StanleyDecomposition {
    pub fn new(
        target: Target,
        ideal: MonomialIdeal,
        mut spaces: Vec<StanleySpace>,
    ) -> Result<Self, Error> {
        let n = ideal.ring().n();
        for s in &spaces {
            if s.base.len() != n {
                return Err(Error::InvalidDecomposition(format!(
                    "space base has {} coordinates, ring has {} variables",
                    s.base.len(),
                    n
                )));
            }
            if let Some(&j) = s.free.iter().find(|&&j| j >= n) {
                return Err(Error::VariableOutOfRange { var: j + 1, n });
            }
        }
        spaces.sort();
        Ok(StanleyDecomposition { target, ideal, spaces })
    }

    pub fn target(&self) -> Target {
        self.target
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn ring(&self) -> &PolyRing {
        self.ideal.ring()
    }

    pub fn spaces(&self) -> &[StanleySpace] {
        &self.spaces
    }

    /// Stanley depth of this decomposition: the minimum space dimension.
    /// An empty space list (the quotient of the unit ideal — a zero module)
    /// is assigned n by convention.
    pub fn sdepth(&self) -> usize {
        self.spaces
            .iter()
            .map(StanleySpace::dim)
            .min()
            .unwrap_or(self.ring().n())
    }
}

/// Stanley depth of a decomposition; see [`StanleyDecomposition::sdepth`].
pub fn sdepth_of(d: &StanleyDecomposition) -> usize {
    d.sdepth()
}

/// Certificate that a decomposition is wrong: two overlapping spaces, a
/// target monomial no space covers, or a covered monomial outside the target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VerifyViolation {
    Overlap { first: usize, second: usize, witness: Exponent },
    Uncovered { monomial: Exponent },
    Overcovered { monomial: Exponent },
}

impl fmt::Display for VerifyViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyViolation::Overlap { first, second, .. } => {
                write!(f, "spaces {first} and {second} overlap")
            }
            VerifyViolation::Uncovered { .. } => write!(f, "target monomial uncovered"),
            VerifyViolation::Overcovered { .. } => {
                write!(f, "covered monomial outside the target")
            }
        }
    }
}

/// Exact disjointness test for two Stanley spaces. They intersect iff their
/// bases agree outside both free sets and each base dominates the other on
/// the free variables it does not share; the join of the bases is then a
/// common monomial.
fn spaces_intersect(a: &StanleySpace, b: &StanleySpace) -> bool {
    let n = a.base.len();
    (0..n).all(|j| match (a.free.contains(&j), b.free.contains(&j)) {
        (false, false) => a.base.coord(j) == b.base.coord(j),
        (true, false) => b.base.coord(j) >= a.base.coord(j),
        (false, true) => a.base.coord(j) >= b.base.coord(j),
        (true, true) => true,
    })
}

/// Check a decomposition exactly: pairwise disjointness by the closed-form
/// criterion, coverage by enumerating the box [0, ρ+1]^n where ρ is the
/// largest coordinate in any space base or ideal generator. Membership of a
/// monomial in each space and in the ideal is unchanged by clamping
/// coordinates down to ρ+1, so the box decides coverage for all of S.
/// Returns the first violation in a fixed order (overlaps by space index,
/// then box monomials lexicographically), or `Ok(())`.
pub fn verify(d: &StanleyDecomposition) -> Result<(), VerifyViolation> {
    for i in 0..d.spaces.len() {
        for j in (i + 1)..d.spaces.len() {
            if spaces_intersect(&d.spaces[i], &d.spaces[j]) {
                let witness = d.spaces[i].base.join(&d.spaces[j].base);
                debug_assert!(d.spaces[i].contains(&witness));
                debug_assert!(d.spaces[j].contains(&witness));
                return Err(VerifyViolation::Overlap { first: i, second: j, witness });
            }
        }
    }

    let n = d.ring().n();
    let mut rho = BigUint::zero();
    for s in &d.spaces {
        for c in s.base.coords() {
            rho = rho.max(c.clone());
        }
    }
    for g in d.ideal.gens() {
        for c in g.coords() {
            rho = rho.max(c.clone());
        }
    }
    let bound = rho + 1u32; // box coordinates run over 0..=bound

    let mut cursor = vec![BigUint::zero(); n];
    loop {
        let in_target = {
            let member = d
                .ideal
                .gens()
                .iter()
                .any(|g| (0..n).all(|j| g.coord(j) <= &cursor[j]));
            match d.target {
                Target::Ideal => member,
                Target::Quotient => !member,
            }
        };
        let covered = d.spaces.iter().any(|s| {
            (0..n).all(|j| {
                if s.free.contains(&j) {
                    cursor[j] >= *s.base.coord(j)
                } else {
                    cursor[j] == *s.base.coord(j)
                }
            })
        });
        if in_target != covered {
            let monomial = Exponent::new(cursor.clone());
            return Err(if in_target {
                VerifyViolation::Uncovered { monomial }
            } else {
                VerifyViolation::Overcovered { monomial }
            });
        }
        // lex-ascending odometer over [0, bound]^n
        let mut j = n;
        loop {
            if j == 0 {
                return Ok(());
            }
            j -= 1;
            if cursor[j] < bound {
                cursor[j] += 1u32;
                for c in cursor.iter_mut().skip(j + 1) {
                    *c = BigUint::zero();
                }
                break;
            }
        }
    }
}

fn order_first_live(ring: &PolyRing, live: &BTreeSet<usize>) -> usize {
    ring.order()
        .iter()
        .copied()
        .find(|j| live.contains(j))
        .expect("live set must be nonempty")
}

fn unit_vector(n: usize, var: usize) -> Exponent {
    Exponent::zeros(n).with_coord(var, BigUint::from(1u32))
}

/// Spaces of the staircase decomposition of S'/(x^u) over K[live]: one space
/// per support variable i_t of u and exponent c < u_{i_t}, with base
/// x_{i_1}^{u_{i_1}} ··· x_{i_{t-1}}^{u_{i_{t-1}}} · x_{i_t}^c and free set
/// live ∖ {i_t}. A monomial outside (x^u) lands in the space of the first
/// support variable where it falls short of u.
fn staircase_quotient_spaces(
    u: &Exponent,
    live: &BTreeSet<usize>,
) -> Vec<StanleySpace> {
    let n = u.len();
    let mut spaces = Vec::new();
    let mut prefix = Exponent::zeros(n);
    for i_t in u.support() {
        debug_assert!(live.contains(&i_t), "generator support must be live");
        let mut free = live.clone();
        free.remove(&i_t);
        let mut c = BigUint::zero();
        while &c < u.coord(i_t) {
            spaces.push(StanleySpace::new(
                prefix.with_coord(i_t, c.clone()),
                free.clone(),
            ));
            c += 1u32;
        }
        prefix = prefix.with_coord(i_t, u.coord(i_t).clone());
    }
    spaces
}

/// Stanley decomposition of a nonzero principal ideal: the single space
/// x^u · K[x_1, ..., x_n], of depth n.
pub fn principal_ideal_decomposition(
    ideal: &MonomialIdeal,
) -> Result<StanleyDecomposition, Error> {
    let u = principal_generator(ideal)?;
    let all: BTreeSet<usize> = (0..ideal.ring().n()).collect();
    StanleyDecomposition::new(
        Target::Ideal,
        ideal.clone(),
        vec![StanleySpace::new(u.clone(), all)],
    )
}

/// Staircase Stanley decomposition of S/(x^u), every space of dimension
/// n − 1. The quotient by the unit ideal is the zero module and gets the
/// empty space list.
pub fn principal_quotient_decomposition(
    ideal: &MonomialIdeal,
) -> Result<StanleyDecomposition, Error> {
    let u = principal_generator(ideal)?;
    let all: BTreeSet<usize> = (0..ideal.ring().n()).collect();
    let spaces = staircase_quotient_spaces(&u, &all);
    StanleyDecomposition::new(Target::Quotient, ideal.clone(), spaces)
}

fn principal_generator(ideal: &MonomialIdeal) -> Result<Exponent, Error> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal("principal decomposition"));
    }
    if ideal.num_gens() != 1 {
        return Err(Error::NotPrincipal);
    }
    Ok(ideal.gens()[0].clone())
}

/// Add x_j as a free variable to every space — the lift of a decomposition
/// over K[x_i : i ≠ j] to one over S, valid because j avoids every
/// generator's support.
pub fn add_free_variable(
    d: &StanleyDecomposition,
    var: usize,
) -> Result<StanleyDecomposition, Error> {
    d.ring().check_var(var)?;
    if d.ideal().variable_in_support(var)? {
        return Err(Error::InvalidInput(format!(
            "variable {} appears in the ideal support",
            d.ring().name(var)
        )));
    }
    let spaces = d
        .spaces
        .iter()
        .map(|s| {
            let mut free = s.free.clone();
            free.insert(var);
            StanleySpace::new(s.base.clone(), free)
        })
        .collect();
    StanleyDecomposition::new(d.target, d.ideal.clone(), spaces)
}

/// Split I along x_j into the elimination ideal I ∩ K[x_i : i ≠ j] (the
/// generators off x_j) and the colon ideal (I : x_j): I's monomials with
/// j-degree zero come from the first, the rest are x_j times the second's.
pub fn split_by_variable(
    ideal: &MonomialIdeal,
    var: usize,
) -> Result<(MonomialIdeal, MonomialIdeal), Error> {
    let elim = ideal.eliminate_variable(var)?;
    let colon = ideal.colon_by_variable(var)?;
    Ok((elim, colon))
}

#[cfg(debug_assertions)]
#[derive(Clone, Copy, PartialEq, Eq)]
enum Flavor {
    WeaklyPolymatroidal,
    Squarefree,
}

/// Shared debug-mode checks at each split: the monotonicity lemmas and the
/// strict decrease of the termination measure on the colon side.
// inequalities are kept in the shape the lemmas state them
#[allow(clippy::int_plus_one)]
#[cfg(debug_assertions)]
fn debug_split_invariants(
    ideal: &MonomialIdeal,
    elim: &MonomialIdeal,
    colon: &MonomialIdeal,
    flavor: Flavor,
) {
    if !elim.is_zero() {
        debug_assert!(
            arank_of_ideal(elim).unwrap() + 1 <= arank_of_ideal(ideal).unwrap(),
            "elimination must drop arank: arank(I ∩ S') + 1 ≤ arank(I)"
        );
    }
    if !colon.is_unit() {
        match flavor {
            Flavor::WeaklyPolymatroidal => {
                debug_assert!(
                    arank_of_ideal(colon).unwrap() <= arank_of_ideal(ideal).unwrap(),
                    "colon must not raise arank for weakly polymatroidal ideals"
                );
            }
            Flavor::Squarefree => {
                debug_assert!(
                    rank_of_ideal(colon).unwrap() <= rank_of_ideal(ideal).unwrap(),
                    "colon must not raise rank for squarefree ideals"
                );
            }
        }
        debug_assert!(
            colon.sum_gen_degrees() < ideal.sum_gen_degrees(),
            "colon must shrink the termination measure"
        );
    }
}

fn rec_ideal_wpm(ideal: &MonomialIdeal, live: &BTreeSet<usize>) -> Vec<StanleySpace> {
    debug_assert!(ideal.is_proper_nonzero());
    debug_assert!(is_weakly_polymatroidal(ideal).unwrap().holds());
    let n = ideal.ring().n();
    if ideal.num_gens() == 1 {
        return vec![StanleySpace::new(ideal.gens()[0].clone(), live.clone())];
    }
    let f = order_first_live(ideal.ring(), live);
    if !ideal.variable_in_support(f).unwrap() {
        let mut inner = live.clone();
        inner.remove(&f);
        let mut spaces = rec_ideal_wpm(ideal, &inner);
        for s in &mut spaces {
            s.free.insert(f);
        }
        return spaces;
    }
    let (elim, colon) = split_by_variable(ideal, f).expect("split of proper nonzero ideal");
    #[cfg(debug_assertions)]
    debug_split_invariants(ideal, &elim, &colon, Flavor::WeaklyPolymatroidal);

    let mut spaces = if colon.is_unit() {
        // x_f is itself a generator: its multiples form one big space
        vec![StanleySpace::new(unit_vector(n, f), live.clone())]
    } else {
        let mut inner = rec_ideal_wpm(&colon, live);
        for s in &mut inner {
            s.base = s.base.mul_var(f);
        }
        inner
    };
    if !elim.is_zero() {
        let mut dropped = live.clone();
        dropped.remove(&f);
        spaces.extend(rec_ideal_wpm(&elim, &dropped));
    }
    spaces
}

fn rec_quotient_wpm(ideal: &MonomialIdeal, live: &BTreeSet<usize>) -> Vec<StanleySpace> {
    let n = ideal.ring().n();
    if ideal.is_zero() {
        return vec![StanleySpace::new(Exponent::zeros(n), live.clone())];
    }
    debug_assert!(!ideal.is_unit());
    debug_assert!(is_weakly_polymatroidal(ideal).unwrap().holds());
    if ideal.num_gens() == 1 {
        return staircase_quotient_spaces(&ideal.gens()[0], live);
    }
    let f = order_first_live(ideal.ring(), live);
    if !ideal.variable_in_support(f).unwrap() {
        let mut inner = live.clone();
        inner.remove(&f);
        let mut spaces = rec_quotient_wpm(ideal, &inner);
        for s in &mut spaces {
            s.free.insert(f);
        }
        return spaces;
    }
    let (elim, colon) = split_by_variable(ideal, f).expect("split of proper nonzero ideal");
    #[cfg(debug_assertions)]
    debug_split_invariants(ideal, &elim, &colon, Flavor::WeaklyPolymatroidal);

    let mut spaces = if colon.is_unit() {
        Vec::new() // x_f ∈ I: nothing of S/I has positive f-degree
    } else {
        let mut inner = rec_quotient_wpm(&colon, live);
        for s in &mut inner {
            s.base = s.base.mul_var(f);
        }
        inner
    };
    let mut dropped = live.clone();
    dropped.remove(&f);
    spaces.extend(rec_quotient_wpm(&elim, &dropped));
    spaces
}

fn rec_ideal_squarefree(ideal: &MonomialIdeal, live: &BTreeSet<usize>) -> Vec<StanleySpace> {
    debug_assert!(ideal.is_proper_nonzero());
    debug_assert!(ideal.is_squarefree().unwrap());
    let n = ideal.ring().n();
    if ideal.num_gens() == 1 {
        return vec![StanleySpace::new(ideal.gens()[0].clone(), live.clone())];
    }
    let f = order_first_live(ideal.ring(), live);
    let mut dropped = live.clone();
    dropped.remove(&f);
    if !ideal.variable_in_support(f).unwrap() {
        let mut spaces = rec_ideal_squarefree(ideal, &dropped);
        for s in &mut spaces {
            s.free.insert(f);
        }
        return spaces;
    }
    let (elim, colon) = split_by_variable(ideal, f).expect("split of proper nonzero ideal");
    #[cfg(debug_assertions)]
    debug_split_invariants(ideal, &elim, &colon, Flavor::Squarefree);

    let mut spaces = if colon.is_unit() {
        vec![StanleySpace::new(unit_vector(n, f), live.clone())]
    } else {
        // squarefree: the colon generators avoid x_f entirely, so recurse
        // in one fewer variable and return x_f both as base factor and as a
        // free variable — monomials x_f^a · w, a ≥ 1, w ∈ colon ∩ K[live∖f]
        debug_assert!(!colon.variable_in_support(f).unwrap());
        let mut inner = rec_ideal_squarefree(&colon, &dropped);
        for s in &mut inner {
            s.base = s.base.mul_var(f);
            s.free.insert(f);
        }
        inner
    };
    if !elim.is_zero() {
        spaces.extend(rec_ideal_squarefree(&elim, &dropped));
    }
    spaces
}

fn rec_quotient_squarefree(
    ideal: &MonomialIdeal,
    live: &BTreeSet<usize>,
) -> Vec<StanleySpace> {
    let n = ideal.ring().n();
    if ideal.is_zero() {
        return vec![StanleySpace::new(Exponent::zeros(n), live.clone())];
    }
    debug_assert!(!ideal.is_unit());
    debug_assert!(ideal.is_squarefree().unwrap());
    if ideal.num_gens() == 1 {
        return staircase_quotient_spaces(&ideal.gens()[0], live);
    }
    let f = order_first_live(ideal.ring(), live);
    let mut dropped = live.clone();
    dropped.remove(&f);
    if !ideal.variable_in_support(f).unwrap() {
        let mut spaces = rec_quotient_squarefree(ideal, &dropped);
        for s in &mut spaces {
            s.free.insert(f);
        }
        return spaces;
    }
    let (elim, colon) = split_by_variable(ideal, f).expect("split of proper nonzero ideal");
    #[cfg(debug_assertions)]
    debug_split_invariants(ideal, &elim, &colon, Flavor::Squarefree);

    let mut spaces = if colon.is_unit() {
        Vec::new()
    } else {
        debug_assert!(!colon.variable_in_support(f).unwrap());
        let mut inner = rec_quotient_squarefree(&colon, &dropped);
        for s in &mut inner {
            s.base = s.base.mul_var(f);
            s.free.insert(f);
        }
        inner
    };
    spaces.extend(rec_quotient_squarefree(&elim, &dropped));
    spaces
}

fn require_wpm(ideal: &MonomialIdeal) -> Result<(), Error> {
    let witness = is_weakly_polymatroidal(ideal)?;
    match witness.failure() {
        None => Ok(()),
        Some(f) => Err(Error::NotWeaklyPolymatroidal {
            u: ideal.ring().format_monomial(&f.u),
            v: ideal.ring().format_monomial(&f.v),
            t: ideal.ring().name(f.t).to_string(),
        }),
    }
}

fn require_squarefree_proper(ideal: &MonomialIdeal) -> Result<(), Error> {
    if !ideal.is_squarefree()? {
        return Err(Error::NotSquarefree);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal("squarefree decomposition"));
    }
    Ok(())
}

fn all_vars(ideal: &MonomialIdeal) -> BTreeSet<usize> {
    (0..ideal.ring().n()).collect()
}

/// Stanley decomposition of a weakly polymatroidal ideal I with
/// sdepth ≥ n − arank(I) + 1.
pub fn decompose_ideal_wpm(ideal: &MonomialIdeal) -> Result<StanleyDecomposition, Error> {
    require_wpm(ideal)?;
    let spaces = rec_ideal_wpm(ideal, &all_vars(ideal));
    StanleyDecomposition::new(Target::Ideal, ideal.clone(), spaces)
}

/// Stanley decomposition of S/I for weakly polymatroidal I with
/// sdepth ≥ n − arank(I).
pub fn decompose_quotient_wpm(ideal: &MonomialIdeal) -> Result<StanleyDecomposition, Error> {
    require_wpm(ideal)?;
    let spaces = rec_quotient_wpm(ideal, &all_vars(ideal));
    StanleyDecomposition::new(Target::Quotient, ideal.clone(), spaces)
}

/// Stanley decomposition of a squarefree ideal I with
/// sdepth ≥ n − rank(I) + 1. No order assumption is needed.
pub fn decompose_ideal_squarefree(
    ideal: &MonomialIdeal,
) -> Result<StanleyDecomposition, Error> {
    require_squarefree_proper(ideal)?;
    let spaces = rec_ideal_squarefree(ideal, &all_vars(ideal));
    StanleyDecomposition::new(Target::Ideal, ideal.clone(), spaces)
}

/// Stanley decomposition of S/I for squarefree I with sdepth ≥ n − rank(I).
pub fn decompose_quotient_squarefree(
    ideal: &MonomialIdeal,
) -> Result<StanleyDecomposition, Error> {
    require_squarefree_proper(ideal)?;
    let spaces = rec_quotient_squarefree(ideal, &all_vars(ideal));
    StanleyDecomposition::new(Target::Quotient, ideal.clone(), spaces)
}
