//! Half-current powers and the multiplicative pairing tensor.
//!
//! Mode conventions: `e_+` carries the modes `e_k, k >= 0`; `e_-` carries
//! `-e_k, k < 0`; `f_+` carries `f_k, k > 0`; `f_-` carries `-f_k, k <= 0`.

use super::element::{AlgebraElement, Kind};
use super::pairing::c_multiset;
use super::tensor::TensorElement;
use crate::qfield::{qinv_minus_q, Scalar};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HalfSign {
    Plus,
    Minus,
}

/// Index range and sign of a half-current's modes.
fn mode_admissible(kind: Kind, sign: HalfSign, idx: i64) -> bool {
    match (kind, sign) {
        (Kind::E, HalfSign::Plus) => idx >= 0,
        (Kind::E, HalfSign::Minus) => idx < 0,
        (Kind::F, HalfSign::Plus) => idx > 0,
        (Kind::F, HalfSign::Minus) => idx <= 0,
    }
}

fn mode_sign(sign: HalfSign) -> Scalar {
    match sign {
        HalfSign::Plus => Scalar::one(),
        HalfSign::Minus => -&Scalar::one(),
    }
}

/// Degree-`d` component of the first power: a single signed mode or zero.
pub fn half_current_component(kind: Kind, sign: HalfSign, d: i64) -> AlgebraElement {
    if mode_admissible(kind, sign, d) {
        AlgebraElement::term(kind, vec![d], mode_sign(sign))
    } else {
        AlgebraElement::zero(kind)
    }
}

/// Degree-`d` component of the `n`-th power of a half-current, restricted to
/// words with all indices of magnitude at most `window`, straightened to the
/// kind's natural order. One-sidedness makes the convolution finite; the
/// window only trims the result.
pub fn half_current_power_component(
    kind: Kind,
    sign: HalfSign,
    n: u32,
    d: i64,
    window: i64,
) -> AlgebraElement {
    let raw = half_current_power_raw(kind, sign, n, d);
    raw.normal_form().window_filter(window)
}

/// Unstraightened, unwindowed convolution of `n` half-current factors.
pub fn half_current_power_raw(kind: Kind, sign: HalfSign, n: u32, d: i64) -> AlgebraElement {
    assert!(n >= 1, "power must be at least 1");
    let mut out = AlgebraElement::zero(kind);
    let overall = mode_sign(sign).pow(n as i64);
    let mut buf = Vec::with_capacity(n as usize);
    convolve(kind, sign, n, d, &mut buf, &mut out);
    out.scale(&overall)
}

fn convolve(kind: Kind, sign: HalfSign, n: u32, d: i64, buf: &mut Vec<i64>, out: &mut AlgebraElement) {
    if n == 1 {
        if mode_admissible(kind, sign, d) {
            let mut w = buf.clone();
            w.push(d);
            out.insert_add(w, Scalar::one());
        }
        return;
    }
    // remaining letters bound the admissible range for this one
    let (lo, hi) = match (kind, sign) {
        (Kind::E, HalfSign::Plus) => (0, d),
        (Kind::F, HalfSign::Plus) => (1, d - (n as i64 - 1)),
        (Kind::E, HalfSign::Minus) => (d + (n as i64 - 1), -1),
        (Kind::F, HalfSign::Minus) => (d, 0),
    };
    for k in lo..=hi {
        if !mode_admissible(kind, sign, k) {
            continue;
        }
        buf.push(k);
        convolve(kind, sign, n - 1, d - k, buf, out);
        buf.pop();
    }
}

/// The tau-degree-`n` component of the multiplicative pairing tensor, with
/// all mode indices restricted to `[-window, window]`: the sum over
/// nondecreasing multisets `p` of `(q^{-1}-q)^n C_p(q) f_{-p_1}...f_{-p_n}
/// (x) e_{p_1}...e_{p_n}`.
pub fn rbar_component(n: u32, window: i64) -> TensorElement {
    rbar_component_range(n, -window, window)
}

/// Same, with the multiset entries drawn from `[lo, hi]` (used by the
/// multiplicative method for the triangular factors, which restricts the
/// exponential product to one sign of factors).
pub fn rbar_component_range(n: u32, lo: i64, hi: i64) -> TensorElement {
    let mut out = TensorElement::zero();
    if n == 0 {
        out.insert_add(vec![], vec![], Scalar::one());
        return out;
    }
    let norm = qinv_minus_q().pow(n as i64);
    let mut buf = Vec::with_capacity(n as usize);
    fn rec(
        lo: i64,
        hi: i64,
        n: usize,
        norm: &Scalar,
        buf: &mut Vec<i64>,
        out: &mut TensorElement,
    ) {
        if n == 0 {
            let fw: Vec<i64> = buf.iter().map(|p| -p).collect();
            let ew: Vec<i64> = buf.clone();
            out.insert_add(fw, ew, norm * &c_multiset(buf));
            return;
        }
        let start = buf.last().copied().unwrap_or(lo);
        for v in start..=hi {
            buf.push(v);
            rec(lo, hi, n - 1, norm, buf, out);
            buf.pop();
        }
    }
    rec(lo, hi, n as usize, &norm, &mut buf, &mut out);
    out
}
