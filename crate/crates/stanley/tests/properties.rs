//! Property tests for the structural invariants: minimalization, colon and
//! elimination semantics, rank facts against an independent integer-
//! elimination oracle, construction soundness, exact Stanley depth against
//! a brute-force oracle, Betti/Hilbert consistency, decompositions of
//! irreducible components, and serialization round trips.

// theorem-shaped inequalities and toolchain-portable Option checks
#![allow(clippy::int_plus_one, clippy::unnecessary_map_or)]

mod common;

use common::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stanley::corpus::{random_single_degree, random_squarefree, random_wpm};
use stanley::decomp::{
    decompose_ideal_squarefree, decompose_ideal_wpm, decompose_quotient_squarefree,
    decompose_quotient_wpm, verify,
};
use stanley::json::{decomposition_from_json, decomposition_to_json, ideal_from_json, ideal_to_json};
use stanley::oracles::{
    betti_numbers, exact_sdepth, irreducible_decomposition, BettiCaps, OracleCaps, PrimeCaps,
};
use stanley::rank::{analytic_spread_single_degree, arank_of_ideal, rank_of_ideal};
use stanley::wpm::is_weakly_polymatroidal;
use stanley::{minimalize, Exponent, MonomialIdeal, StanleyDecomposition, Target};

fn raw_vectors(n: usize, emax: u64, max_gens: usize) -> impl Strategy<Value = Vec<Vec<u64>>> {
    prop::collection::vec(prop::collection::vec(0..=emax, n), 1..=max_gens)
}

fn arb_ideal(n: usize, emax: u64, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    raw_vectors(n, emax, max_gens).prop_filter_map("needs a nonzero generator", move |vs| {
        let vs: Vec<Vec<u64>> = vs
            .into_iter()
            .filter(|v| v.iter().any(|&c| c > 0))
            .collect();
        if vs.is_empty() {
            None
        } else {
            Some(ideal_from(n, &vs))
        }
    })
}

fn small_ideal() -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=4).prop_flat_map(|n| arb_ideal(n, 3, 5))
}

proptest! {
    #[test]
    fn minimalize_is_idempotent_antichain_and_ideal_preserving(
        vs in (1usize..=4).prop_flat_map(|n| raw_vectors(n, 3, 6)),
    ) {
        let n = vs[0].len();
        let raw: Vec<Exponent> = vs.iter().map(|v| Exponent::from_u64s(v)).collect();
        let min = minimalize(&raw);
        prop_assert_eq!(&minimalize(&min), &min, "minimalize must be idempotent");
        for (a, u) in min.iter().enumerate() {
            for (b, v) in min.iter().enumerate() {
                prop_assert!(
                    a == b || !u.divides(v),
                    "minimal generators must form an antichain"
                );
            }
        }
        for u in &min {
            prop_assert!(raw.contains(u), "minimalize must not invent generators");
        }
        // same ideal: membership by the raw set equals membership by the
        // minimalized set on a probe box around the inputs
        let mut limit = vec![0u64; n];
        for v in &vs {
            for (l, &c) in limit.iter_mut().zip(v) {
                *l = (*l).max(c);
            }
        }
        for p in box_points(&limit) {
            let e = Exponent::from_u64s(&p);
            let raw_member = raw.iter().any(|g| g.divides(&e));
            let min_member = min.iter().any(|g| g.divides(&e));
            prop_assert_eq!(raw_member, min_member, "minimalize changed the ideal");
        }
    }

    #[test]
    fn minimalize_is_permutation_invariant(
        (vs, shuffled) in (1usize..=4)
            .prop_flat_map(|n| raw_vectors(n, 3, 6))
            .prop_flat_map(|vs| {
                let orig = vs.clone();
                (Just(orig), Just(vs).prop_shuffle())
            }),
    ) {
        let a: Vec<Exponent> = vs.iter().map(|v| Exponent::from_u64s(v)).collect();
        let b: Vec<Exponent> = shuffled.iter().map(|v| Exponent::from_u64s(v)).collect();
        prop_assert_eq!(minimalize(&a), minimalize(&b));
    }

    #[test]
    fn colon_by_variable_matches_membership(
        (i, var) in small_ideal().prop_flat_map(|i| {
            let n = i.ring().n();
            (Just(i), 0..n)
        }),
    ) {
        let colon = i.colon_by_variable(var).unwrap();
        for p in box_points(&join_limit(&i, 2)) {
            let e = Exponent::from_u64s(&p);
            prop_assert_eq!(
                colon.contains(&e),
                i.contains(&e.mul_var(var)),
                "m in (I : x_j) iff x_j * m in I"
            );
        }
    }

    #[test]
    fn eliminate_variable_matches_slice_membership(
        (i, var) in small_ideal().prop_flat_map(|i| {
            let n = i.ring().n();
            (Just(i), 0..n)
        }),
    ) {
        let elim = i.eliminate_variable(var).unwrap();
        for g in elim.gens() {
            prop_assert!(!g.in_support(var), "elimination must drop the variable");
        }
        for p in box_points(&join_limit(&i, 2)) {
            if p[var] != 0 {
                continue;
            }
            let e = Exponent::from_u64s(&p);
            prop_assert_eq!(
                elim.contains(&e),
                i.contains(&e),
                "elimination must agree with I on the x_j = 0 slice"
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rank_and_arank_agree_with_integer_elimination(
        i in (1usize..=5).prop_flat_map(|n| arb_ideal(n, 9, 6)),
    ) {
        let rank = rank_of_ideal(&i).unwrap();
        let arank = arank_of_ideal(&i).unwrap();
        prop_assert_eq!(rank, oracle_rank(&i), "rank vs integer elimination");
        prop_assert_eq!(arank, oracle_arank(&i), "arank vs integer elimination");
        prop_assert!(rank <= arank && arank <= rank + 1, "arank is rank or rank + 1");
        prop_assert!(
            arank <= i.num_gens().min(i.ring().n() + 1),
            "arank is bounded by generators and variables"
        );
    }

    #[test]
    fn single_degree_ideals_have_rank_arank_spread_equal(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(2..=5);
        let d = rng.gen_range(1..=4);
        let i = random_single_degree(&mut rng, n, d).unwrap();
        prop_assume!(i.is_proper_nonzero());
        let rank = rank_of_ideal(&i).unwrap();
        prop_assert_eq!(arank_of_ideal(&i).unwrap(), rank);
        prop_assert_eq!(analytic_spread_single_degree(&i).unwrap(), rank);
    }

    #[test]
    fn wpm_failure_witnesses_are_genuine(i in small_ideal()) {
        let w = is_weakly_polymatroidal(&i).unwrap();
        if let Some(f) = w.failure() {
            prop_assert!(i.gens().contains(&f.u) && i.gens().contains(&f.v));
            let order = i.ring().order();
            let p = order.iter().position(|&j| j == f.t).unwrap();
            for &j in &order[..p] {
                prop_assert_eq!(
                    f.u.coord(j),
                    f.v.coord(j),
                    "t must be the first order position where the pair differs"
                );
            }
            prop_assert!(f.u.coord(f.t) > f.v.coord(f.t), "u must exceed v at t");
            for &j in &order[p + 1..] {
                let exchanged = f.v.div_var(j).map(|m| m.mul_var(f.t));
                prop_assert!(
                    exchanged.map_or(true, |m| !i.contains(&m)),
                    "failure witness admits an exchange at variable {}",
                    j + 1
                );
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn wpm_constructions_verify_and_meet_the_arank_bound(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(2..=5);
        let d = rng.gen_range(1..=4);
        let i = random_wpm(&mut rng, n, d).unwrap();
        prop_assume!(i.is_proper_nonzero());
        let arank = arank_of_ideal(&i).unwrap();
        let di = decompose_ideal_wpm(&i).unwrap();
        prop_assert!(verify(&di).is_ok(), "ideal decomposition must verify");
        prop_assert!(di.sdepth() + arank >= n + 1, "sdepth(I) >= n - arank + 1");
        let dq = decompose_quotient_wpm(&i).unwrap();
        prop_assert!(verify(&dq).is_ok(), "quotient decomposition must verify");
        prop_assert!(dq.sdepth() + arank >= n, "sdepth(S/I) >= n - arank");
    }

    #[test]
    fn squarefree_constructions_verify_and_meet_the_rank_bound(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(2..=5);
        let d = rng.gen_range(1..=4);
        let i = random_squarefree(&mut rng, n, d).unwrap();
        prop_assume!(i.is_proper_nonzero());
        let rank = rank_of_ideal(&i).unwrap();
        let di = decompose_ideal_squarefree(&i).unwrap();
        prop_assert!(verify(&di).is_ok(), "ideal decomposition must verify");
        prop_assert!(di.sdepth() + rank >= n + 1, "sdepth(I) >= n - rank + 1");
        let dq = decompose_quotient_squarefree(&i).unwrap();
        prop_assert!(verify(&dq).is_ok(), "quotient decomposition must verify");
        prop_assert!(dq.sdepth() + rank >= n, "sdepth(S/I) >= n - rank");
    }

    #[test]
    fn components_intersect_back_to_the_ideal(i in small_ideal()) {
        let comps = irreducible_decomposition(&i, &PrimeCaps::default()).unwrap();
        for c in &comps {
            for (&j, b) in c.bounds() {
                let gen = Exponent::zeros(i.ring().n()).with_coord(j, b.clone());
                prop_assert!(
                    c.to_ideal(i.ring()).gens().contains(&gen),
                    "components must be generated by pure powers"
                );
            }
        }
        for p in box_points(&join_limit(&i, 1)) {
            let e = Exponent::from_u64s(&p);
            prop_assert_eq!(
                i.contains(&e),
                comps.iter().all(|c| c.contains(&e)),
                "the decomposition must intersect to the ideal"
            );
        }
    }

    #[test]
    fn json_ideal_round_trips(i in small_ideal()) {
        let text = ideal_to_json(&i);
        let back = ideal_from_json(&text).unwrap();
        prop_assert_eq!(&back, &i);
        prop_assert_eq!(ideal_to_json(&back), text, "serialization must be canonical");
    }

    #[test]
    fn json_decomposition_round_trips(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(2..=4);
        let i = random_wpm(&mut rng, n, 3).unwrap();
        prop_assume!(i.is_proper_nonzero());
        for d in [decompose_ideal_wpm(&i).unwrap(), decompose_quotient_wpm(&i).unwrap()] {
            let text = decomposition_to_json(&d);
            let back = decomposition_from_json(&text, &i).unwrap();
            prop_assert_eq!(decomposition_to_json(&back), text);
            prop_assert_eq!(back.sdepth(), d.sdepth());
        }
    }

    #[test]
    fn corrupted_decompositions_fail_verification(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(2..=4);
        let i = random_wpm(&mut rng, n, 3).unwrap();
        prop_assume!(i.is_proper_nonzero());
        let d = decompose_quotient_wpm(&i).unwrap();
        let spaces = d.spaces().to_vec();

        if spaces.len() >= 2 {
            let dropped = StanleyDecomposition::new(
                Target::Quotient,
                i.clone(),
                spaces[1..].to_vec(),
            )
            .unwrap();
            prop_assert!(verify(&dropped).is_err(), "dropping a space must break coverage");
        }

        let mut doubled = spaces.clone();
        doubled.push(spaces[0].clone());
        let doubled = StanleyDecomposition::new(Target::Quotient, i.clone(), doubled).unwrap();
        prop_assert!(verify(&doubled).is_err(), "duplicating a space must overlap");

        let flipped = StanleyDecomposition::new(Target::Ideal, i.clone(), spaces).unwrap();
        prop_assert!(verify(&flipped).is_err(), "a quotient partition cannot cover the ideal");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn exact_sdepth_matches_the_dumb_oracle(
        i in (1usize..=3).prop_flat_map(|n| arb_ideal(n, 2, 4)),
    ) {
        let caps = OracleCaps::default();
        for target in [Target::Ideal, Target::Quotient] {
            let exact = exact_sdepth(&i, target, &caps).unwrap();
            prop_assert!(verify(&exact.witness).is_ok(), "witness must verify");
            prop_assert_eq!(
                exact.witness.sdepth(),
                exact.value,
                "witness must achieve the reported value"
            );
            prop_assert_eq!(
                exact.value,
                dumb_sdepth(&i, target),
                "library exact sdepth vs plain recursion, target {}",
                target.as_str()
            );
        }
    }

    #[test]
    fn betti_numbers_satisfy_the_hilbert_euler_identity(
        i in (1usize..=3).prop_flat_map(|n| arb_ideal(n, 2, 4)),
    ) {
        let table = betti_numbers(&i, &BettiCaps::default()).unwrap();
        for p in box_points(&join_limit(&i, 0)) {
            let b = Exponent::from_u64s(&p);
            let mut sum: i64 = 0;
            for (idx, a, value) in table.entries() {
                if a.divides(&b) {
                    let sign = if idx % 2 == 0 { 1 } else { -1 };
                    sum += sign * i64::try_from(value).unwrap();
                }
            }
            let expected = i64::from(!i.contains(&b));
            prop_assert_eq!(
                sum,
                expected,
                "alternating Betti sums must reproduce the Hilbert function of S/I"
            );
        }
    }
}
