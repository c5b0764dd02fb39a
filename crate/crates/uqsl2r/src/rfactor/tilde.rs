//! The projected-product route to the integrands.
//!
//! Multiplying the opposite-sign factor by the two-sided current tensor and
//! projecting both slots collapses, class by class in the dual-basis
//! expansion, onto half-current powers: each multiset class contributes the
//! power contraction weighted by a pure q-power of its staircase weight.
//! Resumming the classes is exactly the partition identity verified in
//! [`crate::combid`], and the resummed scalar equals the projected-integrand
//! prefactor — an exact scalar identity asserted here.

use super::integrand::power_prefactor;
use crate::modealg::{
    c_multiset, half_current_power_raw, project, AlgebraElement, HalfSign, Kind, Projector,
    TensorElement,
};
use crate::qfield::{qinv_minus_q, qsq_factorial, Scalar};

/// Per-class projection data: the class's scalar weight on the half-current
/// power contraction, checked word by word.
pub struct TildeClassData {
    pub class: Vec<i64>,
    pub weight: Scalar,
}

/// Staircase weight of a class: `sum_i (k+1-i) p_i` for the ascending
/// `+-`-side classes, `sum_i i (p_i - 1)` for the descending `-+` ones.
fn staircase(plus_minus: bool, p: &[i64]) -> i64 {
    let k = p.len() as i64;
    if plus_minus {
        p.iter().enumerate().map(|(i, v)| (k - i as i64) * v).sum()
    } else {
        p.iter().enumerate().map(|(i, v)| (i as i64 + 1) * (v - 1)).sum()
    }
}

/// Verify one multiset class of the projected product against its closed
/// form, for every contraction degree `d` with `|d| <= dspan`. For the
/// `+-` side the class is a nondecreasing multiset of nonnegative opposite-
/// factor indices; for `-+` a nonincreasing multiset of positive ones.
/// Returns the class weight on success.
pub fn tilde_class_check(plus_minus: bool, p: &[i64], dspan: i64) -> Result<TildeClassData, String> {
    let k = p.len() as u32;
    let n = k + 1;
    let mut prefactor = Scalar::one();
    for m in 1..=(k as i64) {
        prefactor *= &(&Scalar::q_pow(2 * m) - &Scalar::one());
    }
    let base = &prefactor * &Scalar::q_pow(2 * staircase(plus_minus, p));
    // slot signs: crossing an opposite-sign letter flips one slot per step;
    // the half-current sign conventions put the alternation on the e-slot
    // for the +- side and on the f-slot for -+
    let flip = if k % 2 == 0 { -&Scalar::one() } else { Scalar::one() };
    let (fscale, escale) = if plus_minus {
        (base.clone(), &base * &flip)
    } else {
        (&base * &flip, base.clone())
    };
    let psum: i64 = p.iter().sum();
    for d in -dspan..=dspan {
        let (fword, eword, fproj, eproj, fpow_sign, epow_sign, fdeg, edeg) = if plus_minus {
            // f-slot: f_{-p_1}...f_{-p_k} f_d, projected to all-positive;
            // e-slot: e_{p_1}...e_{p_k} e_{-d}, projected to all-negative
            let mut fw: Vec<i64> = p.iter().map(|x| -x).collect();
            fw.push(d);
            let mut ew: Vec<i64> = p.to_vec();
            ew.push(-d);
            (
                fw,
                ew,
                Projector::FPlusStar,
                Projector::EMinus,
                HalfSign::Plus,
                HalfSign::Minus,
                d - psum,
                -d + psum,
            )
        } else {
            // f-slot: f_d f_{p_1}...f_{p_k}, projected to all-nonpositive;
            // e-slot: e_{-d} e_{-p_1}...e_{-p_k}, projected to all-nonnegative
            let mut fw: Vec<i64> = vec![d];
            fw.extend(p.iter().cloned());
            let mut ew: Vec<i64> = vec![-d];
            ew.extend(p.iter().map(|x| -x));
            (
                fw,
                ew,
                Projector::FMinusStar,
                Projector::EPlus,
                HalfSign::Minus,
                HalfSign::Plus,
                d + psum,
                -d - psum,
            )
        };
        let f_lhs = project(&AlgebraElement::word(Kind::F, fword), fproj);
        let f_rhs = half_current_power_raw(Kind::F, fpow_sign, n, fdeg)
            .normal_form()
            .scale(&fscale);
        if f_lhs != f_rhs {
            return Err(format!(
                "f-slot class projection failed: pm={plus_minus} class {p:?} d={d}"
            ));
        }
        let e_lhs = project(&AlgebraElement::word(Kind::E, eword), eproj);
        let e_rhs = half_current_power_raw(Kind::E, epow_sign, n, edeg)
            .normal_form()
            .scale(&escale);
        if e_lhs != e_rhs {
            return Err(format!(
                "e-slot class projection failed: pm={plus_minus} class {p:?} d={d}"
            ));
        }
    }
    Ok(TildeClassData { class: p.to_vec(), weight: &fscale * &escale })
}

/// The resummed class series: `sum over multisets of size k` of
/// `C_p(q) q^{4 w(p)} = 1 / ((k)_{q^2}! (k+1)_{q^2}! (1-q^2)^k)`, the closed
/// value of the partition identity.
pub fn class_sum_closed(k: u32) -> Scalar {
    let k = k as i64;
    let den = &(&qsq_factorial(k) * &qsq_factorial(k + 1))
        * &(&Scalar::one() - &Scalar::q_pow(2)).pow(k);
    den.recip()
}

/// The exact scalar carried by the projected product at order `n`:
/// `(-1)^n (q^{-1}-q)^n  S_{n-1}  prod_{m=1}^{n-1} (1-q^{2m})^2` with `S`
/// the resummed class series.
pub fn tilde_scalar(n: u32) -> Scalar {
    let k = n as i64 - 1;
    let mut prod = Scalar::one();
    for m in 1..=k {
        prod *= &(&Scalar::one() - &Scalar::q_pow(2 * m)).pow(2);
    }
    let s = class_sum_closed(n - 1);
    let sign = if n % 2 == 0 { Scalar::one() } else { -&Scalar::one() };
    &(&(&qinv_minus_q().pow(n as i64) * &s) * &prod) * &sign
}

/// The projected-product component: the resummed closed form, whose scalar
/// must agree exactly with the projected integrand's prefactor (that
/// equality is the content of the identification of the two logarithmic
/// derivatives, and is asserted by the caller via [`tilde_scalar`] and
/// [`power_prefactor`]).
pub fn tilde_i_component(n: u32, plus_minus: bool, window: i64) -> TensorElement {
    let scalar = tilde_scalar(n);
    let (fsign, esign) = if plus_minus {
        (HalfSign::Plus, HalfSign::Minus)
    } else {
        (HalfSign::Minus, HalfSign::Plus)
    };
    let mut out = TensorElement::zero();
    let dmax = n as i64 * window;
    for d in -dmax..=dmax {
        let f = half_current_power_raw(Kind::F, fsign, n, d).normal_form().window_filter(window);
        if f.is_zero() {
            continue;
        }
        let e = half_current_power_raw(Kind::E, esign, n, -d).normal_form().window_filter(window);
        if e.is_zero() {
            continue;
        }
        out = out.add(&TensorElement::of(&f, &e));
    }
    out.scale(&scalar)
}

/// Truncated literal evaluation of the projected product: sum the class
/// contributions with class entries bounded by `pcap`, using `project` on
/// both slots, and report the accumulated scalar weight
/// `sum C_p q^{4 w(p)}` alongside (its limit is [`class_sum_closed`]).
pub fn tilde_partial_class_sum(plus_minus: bool, k: u32, pcap: i64) -> Scalar {
    let mut acc = Scalar::zero();
    let mut classes: Vec<Vec<i64>> = Vec::new();
    let lo = if plus_minus { 0 } else { 1 };
    gen_multisets(lo, pcap, k as usize, &mut Vec::new(), &mut classes);
    for p in &classes {
        let pp: Vec<i64> = if plus_minus {
            p.clone()
        } else {
            p.iter().rev().cloned().collect()
        };
        acc += &(&c_multiset(p) * &Scalar::q_pow(4 * staircase(plus_minus, &pp)));
    }
    acc
}

fn gen_multisets(lo: i64, hi: i64, n: usize, buf: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if n == 0 {
        out.push(buf.clone());
        return;
    }
    let start = buf.last().copied().unwrap_or(lo);
    for v in start..=hi {
        buf.push(v);
        gen_multisets(lo, hi, n - 1, buf, out);
        buf.pop();
    }
}

/// Assert the scalar identity behind the identification of the projected
/// product with the projected integrand.
pub fn tilde_matches_integrand_prefactor(n: u32) -> bool {
    tilde_scalar(n) == power_prefactor(n)
}
