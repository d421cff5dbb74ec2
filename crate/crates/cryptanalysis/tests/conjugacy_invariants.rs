//! Conjugacy-class invariants the attacks rely on: conjugate inputs share
//! exponent sum and, after summit reduction, the `(inf, len)` pair.

use braid_core::{normalize, super_summit_set, BraidWord};
use cryptanalysis::sss_conjugator_search;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn random_word(n: usize, len: usize, rng: &mut StdRng) -> BraidWord {
    let letters: Vec<i32> = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..n as i32);
            if rng.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect();
    BraidWord::new(n, letters).unwrap()
}

#[test]
fn conjugates_share_summit_invariants() {
    let mut rng = StdRng::seed_from_u64(17);
    for _ in 0..10 {
        let n = 4;
        let w = random_word(n, 6, &mut rng);
        let g = random_word(n, 4, &mut rng);
        let conj = g.inverse().concat(&w).unwrap().concat(&g).unwrap();

        assert_eq!(w.exponent_sum(), conj.exponent_sum());
        let a = super_summit_set(&w, 10_000);
        let b = super_summit_set(&conj, 10_000);
        assert_eq!(a.invariant(), b.invariant());
        // conjugate braids have identical super summit sets
        let ka: Vec<_> = a.elements.keys().collect();
        let kb: Vec<_> = b.elements.keys().collect();
        assert_eq!(ka, kb);
    }
}

#[test]
fn search_refuses_different_exponent_sums() {
    let mut rng = StdRng::seed_from_u64(3);
    for _ in 0..10 {
        let a = normalize(&random_word(4, 5, &mut rng));
        let b = normalize(&random_word(4, 6, &mut rng));
        if a.exponent_sum() == b.exponent_sum() {
            continue;
        }
        let r = sss_conjugator_search(&a, &b, 1000);
        assert!(!r.success);
    }
}

#[test]
fn search_recovers_conjugators_on_random_instances() {
    let mut rng = StdRng::seed_from_u64(29);
    for _ in 0..6 {
        let n = 4;
        let w = random_word(n, 5, &mut rng);
        let g = random_word(n, 3, &mut rng);
        let s = normalize(&w);
        let s_prime = s.conjugate(&g).unwrap();
        let r = sss_conjugator_search(&s, &s_prime, 10_000);
        assert!(r.success, "failed on {w} conjugated by {g}");
        let c = r.candidate.unwrap();
        assert_eq!(s.conjugate(&c).unwrap(), s_prime);
    }
}
