//! Rough timing probe, ignored by default; run with
//! `cargo test -p braid-core --test perf_probe -- --ignored --nocapture`.

use braid_core::oracle::{random_word, SplitMix64};
use braid_core::normalize;
use std::time::Instant;

#[test]
#[ignore]
fn normalize_scaling() {
    let mut rng = SplitMix64::new(1);
    for len in [100, 200, 400, 800] {
        let words: Vec<_> = (0..10).map(|_| random_word(8, len, &mut rng)).collect();
        let t = Instant::now();
        for w in &words {
            std::hint::black_box(normalize(w));
        }
        println!("normalize len={len}: {:?} per word", t.elapsed() / 10);
    }
}

#[test]
#[ignore]
fn conjugate_multiply_chain() {
    let mut rng = SplitMix64::new(2);
    let n = 12;
    let x = random_word(n, 128, &mut rng);
    let y = random_word(n, 128, &mut rng);
    let y_nf = normalize(&y);
    let t = Instant::now();
    let conjugates: Vec<_> = (1..n as i32)
        .map(|j| {
            let w = braid_core::BraidWord::new(n, vec![j]).unwrap();
            y_nf.invert().multiply(&normalize(&w)).unwrap().multiply(&y_nf).unwrap()
        })
        .collect();
    println!("commit (11 conjugates): {:?}", t.elapsed());

    let t = Instant::now();
    let mut acc = braid_core::NormalForm::identity(n);
    for &l in x.letters() {
        let c = &conjugates[l.unsigned_abs() as usize - 1];
        let c = if l > 0 { c.clone() } else { c.invert() };
        acc = acc.multiply(&c).unwrap();
    }
    println!("substitution product over 128 letters: {:?} (len {})", t.elapsed(), acc.len());
}
