use indgen::arith::{self, Factorizer};
use indgen::group::GroupOps;
use indgen::invariants::{self, SeriesChoice};
use indgen::lattice::{self, SubgroupLattice};
use indgen::perm::{parse_permutation, to_cycle_string};
use indgen::primes::PrimeSieve;
use indgen::sym::{d_p_sym, delta_sym_with, padic_digits};
use indgen::zsigmondy::primitive_prime_divisors;
use indgen::{Budget, NeverInterrupt, PermGroup, Permutation};
use proptest::prelude::*;
use proptest::sample::Index;
use std::sync::OnceLock;

fn sieve() -> &'static PrimeSieve {
    static SIEVE: OnceLock<PrimeSieve> = OnceLock::new();
    SIEVE.get_or_init(|| PrimeSieve::new(100_000).unwrap())
}

fn permutation(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree as u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

/// Groups generated by one to three random permutations of degree ≤ 5.
fn small_group() -> impl Strategy<Value = PermGroup> {
    (2usize..=5)
        .prop_flat_map(|n| (Just(n), prop::collection::vec(permutation(n), 1..=3)))
        .prop_map(|(n, gens)| PermGroup::from_generators(n, gens).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn padic_reconstruction(n in 1u64..1_000_000, pi in any::<Index>()) {
        let primes = &sieve().primes()[..100];
        let p = *pi.get(primes) as u64;
        let e = padic_digits(n, p).unwrap();
        prop_assert_eq!(e.value(), n as u128);
        prop_assert!(e.digits.iter().all(|&a| a < p));
        prop_assert_ne!(*e.digits.last().unwrap(), 0);
    }

    #[test]
    fn sylow_rank_bounds(n in 2u64..100_000) {
        let rec = delta_sym_with(n, sieve()).unwrap();
        prop_assert_eq!(rec.contributions.len() as u32, sieve().pi(n as usize).unwrap());
        for (&p, &dp) in &rec.contributions {
            let e = padic_digits(n, p).unwrap();
            let ell = e.length_index() as u64;
            prop_assert!(dp >= ell && ell >= 1);
            let lg = (n as f64).ln() / (p as f64).ln();
            prop_assert!(dp as f64 <= (p as f64 - 1.0) * lg * (lg + 1.0) / 2.0 + 1e-9);
            if 2 * p > n {
                prop_assert_eq!(dp, 1);
            }
            prop_assert_eq!(dp, d_p_sym(n, p));
        }
        prop_assert!(rec.delta >= rec.contributions.len() as u64);
    }

    #[test]
    fn primitive_primes_have_exact_order(a in 2u128..40, n in 2u32..20) {
        let f = Factorizer::with_trial_bound(100_000);
        let r = primitive_prime_divisors(a, n, &f).unwrap();
        for &p in &r.primitive_primes {
            prop_assert_eq!(r.value % p, 0);
            prop_assert_eq!(arith::pow_mod(a, n as u128, p), 1);
            prop_assert!((1..n).all(|e| arith::pow_mod(a, e as u128, p) != 1));
        }
        prop_assert!(r.consistent_with_zsigmondy());
    }

    #[test]
    fn cycle_notation_round_trips(p in (1usize..9).prop_flat_map(permutation)) {
        let text = to_cycle_string(&p);
        prop_assert_eq!(parse_permutation(&text, p.degree()).unwrap(), p);
    }

    #[test]
    fn group_axioms(g in small_group()) {
        let n = g.size();
        prop_assert_eq!((1..=g.degree()).product::<usize>() % n, 0);
        for a in 0..n.min(12) {
            prop_assert_eq!(g.mul(a, g.inv(a)), 0);
            for b in 0..n.min(12) {
                prop_assert_eq!(g.element(g.mul(a, b)), &g.element(a).then(g.element(b)));
            }
        }
        for omega in 0..g.degree() {
            let orbit = g.orbits().into_iter().find(|o| o.contains(&omega)).unwrap();
            prop_assert_eq!(orbit.len() * g.stabilizer_set(omega).count_ones(..), n);
        }
    }

    #[test]
    fn lattice_and_quotients(g in small_group()) {
        let budget = Budget::default();
        let l = SubgroupLattice::build(&g, &budget).unwrap();
        for s in l.subgroups() {
            prop_assert_eq!(g.size() % s.order, 0);
        }
        let again = l.subgroups().iter().all(|a| {
            l.subgroups().iter().all(|b| l.position(&lattice::join(&g, a, b).elements).is_some())
        });
        prop_assert!(again);
        for i in l.normal_subgroups(&g, &g.generator_indices()) {
            let n = &l.subgroups()[i];
            let q = lattice::quotient_group(&g, n, &budget).unwrap();
            prop_assert_eq!(q.size() * n.order, g.size());
        }
    }

    #[test]
    fn invariant_relations(g in small_group()) {
        let budget = Budget::default();
        let p = invariants::profile(&g, &budget, &NeverInterrupt).unwrap();
        prop_assert!(p.d <= p.m);
        prop_assert!(p.ranks_consistent());
        if p.soluble {
            prop_assert!(p.dennis_holds());
            prop_assert_eq!(p.alpha_identity_holds(), Some(true));
        }
        prop_assert!(p.nilpotent_equality_holds());
        prop_assert!(p.identities_hold());
        let idx: Vec<usize> = p.m_witness.iter().map(|x| g.index_of(x).unwrap()).collect();
        prop_assert!(invariants::is_independent_generating(&g, &idx));
        let l = SubgroupLattice::build(&g, &budget).unwrap();
        let orders: usize = invariants::chief_series(&g, &l, SeriesChoice::Last)
            .factors.iter().map(|f| f.order).product();
        prop_assert_eq!(orders, g.size());
    }

    #[test]
    fn p_groups_rank_by_frattini(g in small_group()) {
        if let Some(p) = invariants::p_group_prime(&g) {
            let r = invariants::p_group_rank(&g, p, &Budget::default(), &NeverInterrupt).unwrap();
            prop_assert!(r.consistent());
            let l = SubgroupLattice::build(&g, &Budget::default()).unwrap();
            let burnside = lattice::burnside_frattini(&g, p, &g.generator_indices());
            prop_assert_eq!(burnside.elements, l.frattini_bits());
        }
    }
}

#[test]
fn sieve_steps_are_primes() {
    let s = sieve();
    for x in 2..=s.limit() {
        let step = s.pi(x).unwrap() - s.pi(x - 1).unwrap();
        assert_eq!(step == 1, s.is_prime(x).unwrap());
    }
}
