//! Dual-basis expansion: the independent oracle for straightening.
//!
//! With the pairing fixed by the delta-kernel on single currents, the dual
//! basis of the ordered e-words `e_{s_1}...e_{s_n}` (s nondecreasing) is
//! `C_{s}(q) (q^{-1}-q)^n f_{-s_1}...f_{-s_n}`, and symmetrically on the
//! f-side. Expanding an arbitrary word through the pairing must therefore
//! reproduce its straightened form, with coefficients computed by a route
//! that never touches the rewriting rule.

use super::element::{AlgebraElement, Kind, WordVec};
use super::pairing::{c_multiset, pair_words};
use crate::qfield::qinv_minus_q;

/// Expand `w` in the ordered basis purely via the pairing. Equals
/// `straighten(w)` in the kind's natural order.
pub fn dual_expand(kind: Kind, w: &[i64]) -> AlgebraElement {
    let n = w.len();
    let mut out = AlgebraElement::zero(kind);
    if n == 0 {
        return AlgebraElement::unit(kind);
    }
    let lo = *w.iter().min().unwrap();
    let hi = *w.iter().max().unwrap();
    let degree: i64 = w.iter().sum();
    let norm = qinv_minus_q().pow(n as i64);
    // Straightening never moves an index outside [lo, hi], so the support of
    // the ordered expansion lies among the multisets below.
    for m in multisets(lo, hi, n, degree) {
        match kind {
            Kind::E => {
                // candidate ordered e-word: s nondecreasing = m ascending;
                // its dual is f_{-s_1}...f_{-s_n}, nonincreasing as written
                let fdual: WordVec = m.iter().map(|s| -s).collect();
                let coeff = &(&c_multiset(&m) * &norm) * &pair_words(&fdual, w);
                if !coeff.is_zero() {
                    out.insert_add(m.clone(), coeff);
                }
            }
            Kind::F => {
                // candidate ordered f-word: p nonincreasing = m descending;
                // its dual is the nondecreasing e-word on the negated indices
                let word: WordVec = m.iter().rev().cloned().collect();
                let edual: WordVec = m.iter().rev().map(|p| -p).collect();
                let coeff = &(&c_multiset(&m) * &norm) * &pair_words(w, &edual);
                if !coeff.is_zero() {
                    out.insert_add(word, coeff);
                }
            }
        }
    }
    out
}

/// Ascending multisets of size `n` from `[lo, hi]` with the given sum.
fn multisets(lo: i64, hi: i64, n: usize, sum: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(n);
    fn rec(lo: i64, hi: i64, n: usize, sum: i64, buf: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if n == 0 {
            if sum == 0 {
                out.push(buf.clone());
            }
            return;
        }
        for v in lo..=hi {
            // remaining values are >= v, so the sum is bounded below/above
            let rem = (n - 1) as i64;
            if sum - v < rem * v || sum - v > rem * hi {
                continue;
            }
            buf.push(v);
            rec(v, hi, n - 1, sum - v, buf, out);
            buf.pop();
        }
    }
    rec(lo, hi, n, sum, &mut buf, &mut out);
    out
}
