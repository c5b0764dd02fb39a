//! Screening operators: the adjoint actions of the zero modes.
//!
//! On a homogeneous word of length L the Cartan conjugation is a pure
//! q-power (`q^{2L}` for e-words, `q^{-2L}` for f-words), so the screenings
//! act word by word:
//!
//! - `S_e0(x)  = e_0 x - q^{2L} x e_0`
//! - `S~_e0(x) = x e_0 - q^{-2L} e_0 x`
//! - `S_f0(x)  = x f_0 - q^{-2L} f_0 x`
//! - `S~_f0(x) = f_0 x - q^{2L} x f_0`
//!
//! and the tilde variants are scalar multiples of the plain ones on
//! homogeneous input: `S~_e0 = -q^{-2L} S_e0`, `S~_f0 = -q^{2L} S_f0`.

use super::element::{AlgebraElement, Kind};
use crate::qfield::Scalar;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Screening {
    SE0,
    SE0Tilde,
    SF0,
    SF0Tilde,
}

impl Screening {
    pub fn kind(self) -> Kind {
        match self {
            Screening::SE0 | Screening::SE0Tilde => Kind::E,
            Screening::SF0 | Screening::SF0Tilde => Kind::F,
        }
    }
}

/// Apply a screening operator. The element's kind must match the screening;
/// no straightening is applied to the result.
pub fn screening(s: Screening, x: &AlgebraElement) -> AlgebraElement {
    assert_eq!(x.kind, s.kind(), "screening applied to the wrong kind");
    let mut out = AlgebraElement::zero(x.kind);
    for (w, c) in x.terms() {
        let len = w.len() as i64;
        let mut left = w.clone();
        left.insert(0, 0);
        let mut right = w.clone();
        right.push(0);
        let (c_right, c_left) = match s {
            Screening::SE0 => (-&(c * &Scalar::q_pow(2 * len)), c.clone()),
            Screening::SE0Tilde => (c.clone(), -&(c * &Scalar::q_pow(-2 * len))),
            Screening::SF0 => (c.clone(), -&(c * &Scalar::q_pow(-2 * len))),
            Screening::SF0Tilde => (-&(c * &Scalar::q_pow(2 * len)), c.clone()),
        };
        out.insert_add(left, c_left);
        out.insert_add(right, c_right);
    }
    out
}

/// Iterated screening.
pub fn screening_pow(s: Screening, n: u32, x: &AlgebraElement) -> AlgebraElement {
    let mut acc = x.clone();
    for _ in 0..n {
        acc = screening(s, &acc);
    }
    acc
}
