//! Brute-force reference implementations for the test suites.
//!
//! Nothing here goes through the normal-form engine's divisibility or
//! weighting code paths: equality is decided by breadth-first closure
//! under the defining relations, and divisibility by enumerating positive
//! words. These are the independent oracles the main implementation is
//! checked against, plus small deterministic helpers for generating and
//! mutating test words.

use std::collections::{HashSet, VecDeque};

use crate::factor::CanonicalFactor;
use crate::normal::{normalize, NormalForm};
use crate::permutation::Permutation;
use crate::word::BraidWord;

/// Caps for the word-rewriting closure.
#[derive(Debug, Clone, Copy)]
pub struct OracleLimits {
    /// Longest intermediate word the closure may visit.
    pub max_len: usize,
    /// Largest number of distinct words explored per side.
    pub max_states: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_len: 10,
            max_states: 30_000,
        }
    }
}

/// Decides equality of two words where it can.
///
/// `Some(false)` comes from the exponent-sum and permutation invariants;
/// `Some(true)` from meeting closures under free moves and the defining
/// relations; `None` means the bounded search was inconclusive.
pub fn equal(a: &BraidWord, b: &BraidWord, limits: OracleLimits) -> Option<bool> {
    assert_eq!(a.n(), b.n());
    if a.exponent_sum() != b.exponent_sum() {
        return Some(false);
    }
    if a.permutation() != b.permutation() {
        return Some(false);
    }

    // bidirectional closure with free reduction applied to every state
    let n = a.n();
    let start_a = a.free_reduce().letters().to_vec();
    let start_b = b.free_reduce().letters().to_vec();
    if start_a == start_b {
        return Some(true);
    }

    let mut seen_a: HashSet<Vec<i32>> = HashSet::new();
    let mut seen_b: HashSet<Vec<i32>> = HashSet::new();
    let mut queue_a: VecDeque<Vec<i32>> = VecDeque::new();
    let mut queue_b: VecDeque<Vec<i32>> = VecDeque::new();
    seen_a.insert(start_a.clone());
    seen_b.insert(start_b.clone());
    queue_a.push_back(start_a);
    queue_b.push_back(start_b);

    loop {
        let a_open = !queue_a.is_empty() && seen_a.len() < limits.max_states;
        let b_open = !queue_b.is_empty() && seen_b.len() < limits.max_states;
        if !a_open && !b_open {
            // closed or capped without meeting; even exhaustion within the
            // length cap proves nothing, longer detours may exist
            return None;
        }
        if a_open && expand_one(&mut queue_a, &mut seen_a, &seen_b, n, limits) {
            return Some(true);
        }
        if b_open && expand_one(&mut queue_b, &mut seen_b, &seen_a, n, limits) {
            return Some(true);
        }
    }
}

fn expand_one(
    queue: &mut VecDeque<Vec<i32>>,
    seen: &mut HashSet<Vec<i32>>,
    other: &HashSet<Vec<i32>>,
    n: usize,
    limits: OracleLimits,
) -> bool {
    let Some(word) = queue.pop_front() else {
        return false;
    };
    for next in rewriting_neighbors(&word, n, limits.max_len) {
        if seen.contains(&next) {
            continue;
        }
        if other.contains(&next) {
            return true;
        }
        seen.insert(next.clone());
        queue.push_back(next);
    }
    false
}

fn free_reduce_letters(letters: &[i32]) -> Vec<i32> {
    let mut stack: Vec<i32> = Vec::with_capacity(letters.len());
    for &l in letters {
        if stack.last() == Some(&-l) {
            stack.pop();
        } else {
            stack.push(l);
        }
    }
    stack
}

/// All words one defining-relation move or free move away, freely reduced.
fn rewriting_neighbors(word: &[i32], n: usize, max_len: usize) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    let len = word.len();

    // commutation: swap adjacent letters with distant indices
    for i in 0..len.saturating_sub(1) {
        let (x, y) = (word[i], word[i + 1]);
        if (x.abs() - y.abs()).abs() >= 2 {
            let mut w = word.to_vec();
            w.swap(i, i + 1);
            out.push(w);
        }
    }

    // braid relation on same-sign triples
    for i in 0..len.saturating_sub(2) {
        let (x, y, z) = (word[i], word[i + 1], word[i + 2]);
        if x == z && x.signum() == y.signum() && (x.abs() - y.abs()).abs() == 1 {
            let mut w = word.to_vec();
            w[i] = y;
            w[i + 1] = x;
            w[i + 2] = y;
            out.push(w);
        }
    }

    // free insertion of an inverse pair at every position
    if len + 2 <= max_len {
        for pos in 0..=len {
            for g in 1..n as i32 {
                for pair in [[g, -g], [-g, g]] {
                    let mut w = Vec::with_capacity(len + 2);
                    w.extend_from_slice(&word[..pos]);
                    w.extend_from_slice(&pair);
                    w.extend_from_slice(&word[pos..]);
                    out.push(w);
                }
            }
        }
    }

    out.into_iter()
        .map(|w| free_reduce_letters(&w))
        .filter(|w| w.len() <= max_len)
        .collect()
}

/// All positive words equal to the given positive word, by closure under
/// the defining relations (which preserve length on positive words).
pub fn positive_closure(word: &BraidWord) -> HashSet<Vec<i32>> {
    assert!(word.is_positive());
    let start = word.letters().to_vec();
    let mut seen: HashSet<Vec<i32>> = HashSet::new();
    let mut queue: VecDeque<Vec<i32>> = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(w) = queue.pop_front() {
        let mut push = |cand: Vec<i32>| {
            if !seen.contains(&cand) {
                seen.insert(cand.clone());
                queue.push_back(cand);
            }
        };
        for i in 0..w.len().saturating_sub(1) {
            if (w[i] - w[i + 1]).abs() >= 2 {
                let mut c = w.clone();
                c.swap(i, i + 1);
                push(c);
            }
        }
        for i in 0..w.len().saturating_sub(2) {
            if w[i] == w[i + 2] && (w[i] - w[i + 1]).abs() == 1 {
                let mut c = w.clone();
                c[i] = w[i + 1];
                c[i + 1] = w[i];
                c[i + 2] = w[i + 1];
                push(c);
            }
        }
    }
    seen
}

/// Starting set of a canonical factor by enumerating all of its positive
/// words and collecting first letters.
pub fn brute_starting_set(f: &CanonicalFactor) -> Vec<usize> {
    let mut out: Vec<usize> = positive_closure(&f.word())
        .iter()
        .filter_map(|w| w.first().map(|&l| l as usize))
        .collect::<HashSet<_>>()
        .into_iter()
        .collect();
    out.sort_unstable();
    out
}

/// Finishing set via last letters of all positive words.
pub fn brute_finishing_set(f: &CanonicalFactor) -> Vec<usize> {
    let mut out: Vec<usize> = positive_closure(&f.word())
        .iter()
        .filter_map(|w| w.last().map(|&l| l as usize))
        .collect::<HashSet<_>>()
        .into_iter()
        .collect();
    out.sort_unstable();
    out
}

/// True iff `c` left-divides `a`, by checking whether some positive word
/// for `a` begins with a positive word for `c`.
pub fn brute_left_divides(c: &CanonicalFactor, a: &CanonicalFactor) -> bool {
    if c.is_eps() {
        return true;
    }
    let lc = c.weight();
    if lc > a.weight() {
        return false;
    }
    let c_words = positive_closure(&c.word());
    positive_closure(&a.word())
        .iter()
        .any(|w| c_words.contains(&w[..lc]))
}

/// All common left-divisors of `a` and `b`, brute force over permutations.
pub fn brute_common_left_divisors(a: &CanonicalFactor, b: &CanonicalFactor) -> Vec<CanonicalFactor> {
    let n = a.n();
    let mut out = Vec::new();
    for_each_perm(n, &mut |p: &Permutation| {
        let f = CanonicalFactor::from_permutation(p.clone());
        if brute_left_divides(&f, a) && brute_left_divides(&f, b) {
            out.push(f);
        }
    });
    out
}

fn for_each_perm(n: usize, visit: &mut dyn FnMut(&Permutation)) {
    let mut images: Vec<usize> = (1..=n).collect();
    loop {
        visit(&Permutation::from_images(&images).expect("valid image array"));
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| images[i] < images[i + 1]) else {
            return;
        };
        let j = (i + 1..n).rev().find(|&j| images[j] > images[i]).unwrap();
        images.swap(i, j);
        images[i + 1..].reverse();
    }
}

/// Minimal canonical length over all conjugates `g^{-1} w g` with
/// `|g| <= max_conj_len`, and the normal forms attaining it.
pub fn brute_min_canonical_length(w: &BraidWord, max_conj_len: usize) -> (usize, Vec<NormalForm>) {
    let n = w.n();
    let mut best = usize::MAX;
    let mut found: HashSet<NormalForm> = HashSet::new();
    for len in 0..=max_conj_len {
        for g in signed_words(n, len) {
            let v = normalize(w).conjugate(&g).expect("same strand count");
            match v.len().cmp(&best) {
                std::cmp::Ordering::Less => {
                    best = v.len();
                    found.clear();
                    found.insert(v);
                }
                std::cmp::Ordering::Equal => {
                    found.insert(v);
                }
                std::cmp::Ordering::Greater => {}
            }
        }
    }
    let mut out: Vec<NormalForm> = found.into_iter().collect();
    out.sort();
    (best, out)
}

/// All signed words of exactly the given length.
pub fn signed_words(n: usize, len: usize) -> impl Iterator<Item = BraidWord> {
    let alphabet: Vec<i32> = (1..n as i32).flat_map(|i| [i, -i]).collect();
    let k = alphabet.len();
    let total = k.checked_pow(len as u32).unwrap_or(0);
    (0..total).map(move |mut idx| {
        let mut letters = Vec::with_capacity(len);
        for _ in 0..len {
            letters.push(alphabet[idx % k]);
            idx /= k;
        }
        BraidWord::new(n, letters).expect("alphabet letters are in range")
    })
}

/// Small deterministic generator for test inputs; not a crypto RNG.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }
}

/// A uniformly random signed word of exactly `len` letters.
pub fn random_word(n: usize, len: usize, rng: &mut SplitMix64) -> BraidWord {
    let mut letters = Vec::with_capacity(len);
    for _ in 0..len {
        let i = rng.below(n - 1) as i32 + 1;
        letters.push(if rng.below(2) == 0 { i } else { -i });
    }
    BraidWord::new(n, letters).expect("letters are in range")
}

/// Applies `count` random element-preserving mutations: in-place braid or
/// commutation rewrites, free insertions, and free cancellations.
pub fn mutate_preserving(w: &BraidWord, count: usize, rng: &mut SplitMix64) -> BraidWord {
    let n = w.n();
    let mut letters = w.letters().to_vec();
    for _ in 0..count {
        match rng.below(4) {
            0 => {
                // braid rewrite at a random applicable window
                let spots: Vec<usize> = (0..letters.len().saturating_sub(2))
                    .filter(|&i| {
                        letters[i] == letters[i + 2]
                            && letters[i].signum() == letters[i + 1].signum()
                            && (letters[i].abs() - letters[i + 1].abs()).abs() == 1
                    })
                    .collect();
                if let Some(&i) = pick(&spots, rng) {
                    let (x, y) = (letters[i], letters[i + 1]);
                    letters[i] = y;
                    letters[i + 1] = x;
                    letters[i + 2] = y;
                    continue;
                }
                insert_free_pair(&mut letters, n, rng);
            }
            1 => {
                // commutation swap
                let spots: Vec<usize> = (0..letters.len().saturating_sub(1))
                    .filter(|&i| (letters[i].abs() - letters[i + 1].abs()).abs() >= 2)
                    .collect();
                if let Some(&i) = pick(&spots, rng) {
                    letters.swap(i, i + 1);
                    continue;
                }
                insert_free_pair(&mut letters, n, rng);
            }
            2 => {
                // free cancellation
                let spots: Vec<usize> = (0..letters.len().saturating_sub(1))
                    .filter(|&i| letters[i] == -letters[i + 1])
                    .collect();
                if let Some(&i) = pick(&spots, rng) {
                    letters.drain(i..i + 2);
                    continue;
                }
                insert_free_pair(&mut letters, n, rng);
            }
            _ => insert_free_pair(&mut letters, n, rng),
        }
    }
    BraidWord::new(n, letters).expect("mutations keep letters in range")
}

fn pick<'a, T>(items: &'a [T], rng: &mut SplitMix64) -> Option<&'a T> {
    if items.is_empty() {
        None
    } else {
        Some(&items[rng.below(items.len())])
    }
}

fn insert_free_pair(letters: &mut Vec<i32>, n: usize, rng: &mut SplitMix64) {
    let pos = rng.below(letters.len() + 1);
    let g = rng.below(n - 1) as i32 + 1;
    let pair = if rng.below(2) == 0 { [g, -g] } else { [-g, g] };
    letters.splice(pos..pos, pair);
}
