//! The triangular R-factor components by three routes, and the factorization
//! residual.
//!
//! Window bookkeeping: every word of a `+-` element has positive f-indices,
//! so its (length L, degree D) component is complete within window N exactly
//! when `L <= D <= N + L - 1`; mirrored, a `-+` component is complete when
//! `-N <= D <= 0`. Method comparisons run over these certified components
//! only, which keeps truncation edge effects out of the identity checks.

use super::integrand::i_proj_component;
use crate::modealg::{rbar_component, rbar_component_range, TensorElement};
use crate::qfield::{q_factorial, qinv_minus_q, Scalar};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RSign {
    PlusMinus,
    MinusPlus,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RMethod {
    Recurrence,
    Closed,
    Multiplicative,
}

/// Ordered compositions of `n` into positive parts.
pub fn compositions_of(n: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions_of(n - first) {
            let mut c = vec![first];
            c.append(&mut rest);
            out.push(c);
        }
    }
    out
}

/// Ordered-exponential coefficient: `1 / (j_1 (j_1+j_2) ... (j_1+...+j_m))`
/// for the `+-` side, and with reversed partial sums for `-+`.
pub fn cal_c_coeff(plus_minus: bool, parts: &[u32]) -> Scalar {
    let mut acc = Scalar::one();
    let mut sum = 0i64;
    let iter: Vec<u32> = if plus_minus {
        parts.to_vec()
    } else {
        parts.iter().rev().cloned().collect()
    };
    for j in iter {
        sum += j as i64;
        acc = &acc / &Scalar::from_int(sum);
    }
    acc
}

/// The integral-form coefficient: `(q^{-1}-q)^m` times the ordered
/// exponential coefficient times `prod_i 1/([j_i]_q! [j_i - 1]_q!)`.
pub fn c_coeff(plus_minus: bool, parts: &[u32]) -> Scalar {
    let mut acc = &cal_c_coeff(plus_minus, parts) * &qinv_minus_q().pow(parts.len() as i64);
    for j in parts {
        let j = *j as i64;
        acc = &acc / &(&q_factorial(j) * &q_factorial(j - 1));
    }
    acc
}

/// tau-degree-`n` component of the triangular factor by the chosen method,
/// restricted to the window.
pub fn r_component(n: u32, sign: RSign, window: i64, method: RMethod) -> TensorElement {
    if n == 0 {
        return TensorElement::unit();
    }
    match method {
        RMethod::Multiplicative => match sign {
            RSign::PlusMinus => rbar_component_range(n, -window, -1),
            RSign::MinusPlus => rbar_component_range(n, 0, window),
        },
        RMethod::Recurrence => {
            let mut comps: Vec<TensorElement> = vec![TensorElement::unit()];
            for k in 1..=n {
                let mut acc = TensorElement::zero();
                for j in 1..=k {
                    let i = i_proj_component(j, sign == RSign::PlusMinus, window);
                    let r = &comps[(k - j) as usize];
                    let prod = match sign {
                        RSign::PlusMinus => r.mul(&i),
                        RSign::MinusPlus => i.mul(r),
                    };
                    acc = acc.add(&prod);
                }
                comps.push(acc.scale(&Scalar::from_int(k as i64).recip()));
            }
            comps.pop().unwrap()
        }
        RMethod::Closed => {
            let mut acc = TensorElement::zero();
            for comp in compositions_of(n) {
                let coeff = cal_c_coeff(sign == RSign::PlusMinus, &comp);
                let mut prod = TensorElement::unit();
                for j in &comp {
                    prod = prod.mul(&i_proj_component(*j, sign == RSign::PlusMinus, window));
                }
                acc = acc.add(&prod.scale(&coeff));
            }
            acc
        }
    }
}

/// The f-slot components (length, degree) on which a window-`N` computation
/// of the given sign is complete.
pub fn certified_components(n: u32, sign: RSign, window: i64) -> Vec<(usize, i64)> {
    let l = n as usize;
    match sign {
        RSign::PlusMinus => (n as i64..=(window + n as i64 - 1)).map(|d| (l, d)).collect(),
        RSign::MinusPlus => (-window..=0).map(|d| (l, d)).collect(),
    }
}

/// The factorization defect at tau-degree `n`: the multiplicative pairing
/// tensor minus `sum_l R^{(l)}_{+-} R^{(n-l)}_{-+}`, both restricted to the
/// window. Zero exactly.
pub fn factorization_residual(n: u32, window: i64) -> TensorElement {
    let mut acc = rbar_component(n, window);
    for l in 0..=n {
        let a = r_component(l, RSign::PlusMinus, window, RMethod::Multiplicative);
        let b = r_component(n - l, RSign::MinusPlus, window, RMethod::Multiplicative);
        acc = acc.sub(&a.mul_raw(&b));
    }
    acc
}
