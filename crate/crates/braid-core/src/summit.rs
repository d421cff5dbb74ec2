//! Cycling, decycling, and super summit sets.
//!
//! The super summit set of a braid is the finite set of its conjugates of
//! minimal canonical length. It is reached by alternating cycling (which
//! raises the infimum) and decycling (which lowers the supremum), each
//! iterated with repetition detection, and then closed under conjugation
//! by canonical factors.

use std::collections::{BTreeMap, HashSet, VecDeque};

use crate::factor::CanonicalFactor;
use crate::normal::{normalize, NormalForm};
use crate::permutation::Permutation;
use crate::word::BraidWord;

/// Default element cap for super summit set enumeration.
pub const DEFAULT_SSS_CAP: usize = 10_000;

/// A super summit set together with conjugator witnesses.
///
/// For every `(element, g)` entry, `normalize(g^{-1} input g) = element`.
/// Elements are kept in the derived order of [`NormalForm`] (infimum, then
/// factor permutations), which is a deterministic canonical order.
#[derive(Debug, Clone)]
pub struct SummitSetResult {
    pub elements: BTreeMap<NormalForm, BraidWord>,
    pub truncated: bool,
}

impl SummitSetResult {
    /// The `(inf, len)` pair shared by all elements.
    pub fn invariant(&self) -> Option<(i64, usize)> {
        self.elements.keys().next().map(|e| (e.inf(), e.len()))
    }

    pub fn contains(&self, nf: &NormalForm) -> bool {
        self.elements.contains_key(nf)
    }
}

/// One cycling step: `Delta^k W_1 ... W_s  ->  Delta^k W_2 ... W_s tau^k(W_1)`,
/// together with the conjugator it realizes. Braids of canonical length at
/// most one are fixed points.
pub fn cycling(a: &NormalForm) -> (NormalForm, BraidWord) {
    if a.len() <= 1 {
        return (a.clone(), BraidWord::empty(a.n()));
    }
    let moved = a.factors()[0].tau(a.inf());
    let witness = moved.word();
    let mut factors: Vec<CanonicalFactor> = a.factors()[1..].to_vec();
    factors.push(moved);
    (NormalForm::from_parts(a.n(), a.inf(), factors), witness)
}

/// One decycling step: `Delta^k W_1 ... W_s  ->  Delta^k tau^k(W_s) W_1 ... W_{s-1}`.
pub fn decycling(a: &NormalForm) -> (NormalForm, BraidWord) {
    if a.len() <= 1 {
        return (a.clone(), BraidWord::empty(a.n()));
    }
    let last = a.factors()[a.len() - 1].clone();
    let witness = last.word().inverse();
    let mut factors = vec![last.tau(a.inf())];
    factors.extend_from_slice(&a.factors()[..a.len() - 1]);
    (NormalForm::from_parts(a.n(), a.inf(), factors), witness)
}

fn better(candidate: &NormalForm, current: &NormalForm) -> bool {
    candidate.inf() > current.inf() || candidate.sup() < current.sup()
}

/// Iterates `step` from `a` until it either improves `(inf, sup)` or
/// revisits an element (certifying no further improvement along this
/// orbit). Returns true and updates `(a, g)` on improvement.
fn improve_by<F>(a: &mut NormalForm, g: &mut BraidWord, step: F) -> bool
where
    F: Fn(&NormalForm) -> (NormalForm, BraidWord),
{
    let mut seen: HashSet<NormalForm> = HashSet::new();
    let mut cur = a.clone();
    let mut acc = BraidWord::empty(a.n());
    loop {
        if better(&cur, a) {
            *a = cur;
            *g = g.concat(&acc).expect("same strand count");
            return true;
        }
        if !seen.insert(cur.clone()) {
            return false;
        }
        let (next, c) = step(&cur);
        if next == cur {
            return false;
        }
        acc = acc.concat(&c).expect("same strand count");
        cur = next;
    }
}

/// Enumerates permutations of `{1..n}` in lexicographic image-array order.
fn for_each_permutation(n: usize, mut visit: impl FnMut(&Permutation)) {
    let mut images: Vec<usize> = (1..=n).collect();
    loop {
        visit(&Permutation::from_images(&images).expect("valid image array"));
        // next_permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| images[i] < images[i + 1]) else {
            return;
        };
        let j = (i + 1..n).rev().find(|&j| images[j] > images[i]).unwrap();
        images.swap(i, j);
        images[i + 1..].reverse();
    }
}

/// Computes the super summit set of `w` with conjugator witnesses.
///
/// First lands in the summit set by alternating cycling and decycling,
/// then closes under conjugation by nontrivial canonical factors, keeping
/// only elements with the minimal `(inf, len)`. If more than `cap`
/// elements would be collected, the result is flagged truncated instead
/// of erroring.
pub fn super_summit_set(w: &BraidWord, cap: usize) -> SummitSetResult {
    let cap = cap.max(1);
    let n = w.n();
    let mut a = normalize(w);
    let mut g = BraidWord::empty(n);

    loop {
        let cycled = improve_by(&mut a, &mut g, cycling);
        let decycled = improve_by(&mut a, &mut g, decycling);
        if !cycled && !decycled {
            break;
        }
    }

    let target = (a.inf(), a.len());
    let mut elements: BTreeMap<NormalForm, BraidWord> = BTreeMap::new();
    elements.insert(a.clone(), g);
    let mut frontier: VecDeque<NormalForm> = VecDeque::new();
    frontier.push_back(a);
    let mut truncated = false;

    'search: while let Some(u) = frontier.pop_front() {
        let g_u = elements.get(&u).expect("frontier elements are recorded").clone();
        let mut stop = false;
        for_each_permutation(n, |p| {
            if stop || p.is_identity() {
                return;
            }
            let f = CanonicalFactor::from_permutation(p.clone());
            let f_nf = NormalForm::from_factor(f.clone());
            let v = f_nf
                .invert()
                .multiply(&u)
                .and_then(|t| t.multiply(&f_nf))
                .expect("same strand count");
            debug_assert!(
                v.len() >= target.1,
                "conjugate shorter than the summit canonical length"
            );
            if (v.inf(), v.len()) == target && !elements.contains_key(&v) {
                if elements.len() == cap {
                    truncated = true;
                    stop = true;
                    return;
                }
                let witness = g_u.concat(&f.word()).expect("same strand count");
                elements.insert(v.clone(), witness);
                frontier.push_back(v);
            }
        });
        if stop {
            break 'search;
        }
    }

    SummitSetResult {
        elements,
        truncated,
    }
}
