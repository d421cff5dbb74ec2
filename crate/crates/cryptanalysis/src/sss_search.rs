//! Conjugator search through super summit sets.
//!
//! Conjugate braids have intersecting super summit sets; composing the
//! witnesses through a common element yields a conjugator. Exponent sums
//! separate conjugacy classes cheaply before any enumeration.

use std::time::Instant;

use braid_core::{super_summit_set, NormalForm};

use crate::instance::AttackInstance;
use crate::report::{AttackMethod, AttackReport};

/// Searches for `g` with `g^{-1} s g = s_prime` via super summit sets,
/// enumerating at most `cap` elements per side.
pub fn sss_conjugator_search(s: &NormalForm, s_prime: &NormalForm, cap: usize) -> AttackReport {
    let start = Instant::now();
    let mut report = AttackReport::new(AttackMethod::SuperSummit);

    if s.n() != s_prime.n() {
        report.detail = "strand count mismatch".to_string();
        report.elapsed = start.elapsed();
        return report;
    }
    if s.exponent_sum() != s_prime.exponent_sum() {
        report.detail = "exponent sums differ; inputs are not conjugate".to_string();
        report.elapsed = start.elapsed();
        return report;
    }

    let sss_s = super_summit_set(&s.to_word(), cap);
    let sss_p = super_summit_set(&s_prime.to_word(), cap);
    report.iterations = (sss_s.elements.len() + sss_p.elements.len()) as u64;

    let common = sss_s
        .elements
        .iter()
        .find_map(|(e, g)| sss_p.elements.get(e).map(|h| (g, h)));

    match common {
        Some((g_s, g_p)) => {
            // e = g_s^{-1} s g_s = g_p^{-1} s' g_p, so s' = c^{-1} s c
            // with c = g_s g_p^{-1}
            let candidate = g_s
                .concat(&g_p.inverse())
                .expect("same strand count");
            let verified = s
                .conjugate(&candidate)
                .map(|got| got == *s_prime)
                .unwrap_or(false);
            report.success = verified;
            if verified {
                report.candidate = Some(candidate);
            } else {
                report.detail = "witness composition failed verification".to_string();
            }
        }
        None => {
            report.detail = if sss_s.truncated || sss_p.truncated {
                format!(
                    "no common element found; enumeration truncated at cap (left: {}, right: {})",
                    sss_s.truncated, sss_p.truncated
                )
            } else {
                "super summit sets are disjoint; inputs are not conjugate".to_string()
            };
        }
    }

    report.elapsed = start.elapsed();
    report
}

/// Runs the search on the first pair of an instance and verifies the
/// result against all pairs; the candidate only counts as an instance
/// success if it explains every pair.
pub fn sss_attack(inst: &AttackInstance, cap: usize) -> AttackReport {
    let Some((base, conj)) = inst.pairs.first() else {
        let mut r = AttackReport::new(AttackMethod::SuperSummit);
        r.detail = "empty instance".to_string();
        return r;
    };
    let mut report = sss_conjugator_search(base, conj, cap);
    if report.success {
        let candidate = report.candidate.clone().expect("success carries candidate");
        if inst.verify_candidate(&candidate) {
            report.residual = inst.residual(&candidate);
        } else {
            report.success = false;
            report.candidate = None;
            report.detail =
                "single-pair conjugator does not explain the remaining pairs".to_string();
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use braid_core::{normalize, BraidWord};

    fn nf(n: usize, letters: &[i32]) -> NormalForm {
        normalize(&BraidWord::new(n, letters.to_vec()).unwrap())
    }

    #[test]
    fn identical_inputs_give_trivial_conjugator() {
        let s = nf(3, &[1]);
        let r = sss_conjugator_search(&s, &s, 100);
        assert!(r.success);
        let c = r.candidate.unwrap();
        assert_eq!(s.conjugate(&c).unwrap(), s);
    }

    #[test]
    fn generators_share_a_summit_set() {
        let r = sss_conjugator_search(&nf(3, &[1]), &nf(3, &[2]), 100);
        assert!(r.success);
        let c = r.candidate.unwrap();
        assert_eq!(nf(3, &[1]).conjugate(&c).unwrap(), nf(3, &[2]));
    }

    #[test]
    fn exponent_sum_separates() {
        let r = sss_conjugator_search(&nf(3, &[1]), &nf(3, &[1, 1]), 100);
        assert!(!r.success);
        assert!(r.detail.contains("exponent sums"));
        assert_eq!(r.iterations, 0);
    }

    #[test]
    fn non_conjugates_with_equal_invariants_fail_cleanly() {
        // sigma_1 sigma_3 and sigma_1 sigma_2 in B_4 share exponent sum 2
        // but are not conjugate
        let r = sss_conjugator_search(&nf(4, &[1, 3]), &nf(4, &[1, 2]), 10_000);
        assert!(!r.success);
        assert!(r.detail.contains("disjoint"));
    }
}
