//! Sign projectors onto the index-sign subalgebras.
//!
//! Each projector is attached to an ordered decomposition of the nilpotent
//! algebra: straighten to the attached ordering, then keep exactly the words
//! whose every index passes the sign filter (the counit kills any nontrivial
//! complementary factor, so mixed words drop).

use super::element::{AlgebraElement, Kind, Order};

/// The eight projector tags. The starred f-family and the unstarred e-family
/// belong to the decomposition used by the R-factor splitting; the unstarred
/// f-family and starred e-family to the mirrored one.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Projector {
    /// f-words, nonincreasing order, all indices > 0.
    FPlusStar,
    /// f-words, nonincreasing order, all indices <= 0.
    FMinusStar,
    /// e-words, nondecreasing order, all indices >= 0.
    EPlus,
    /// e-words, nondecreasing order, all indices < 0.
    EMinus,
    /// f-words, nondecreasing order, all indices > 0.
    FPlus,
    /// f-words, nondecreasing order, all indices <= 0.
    FMinus,
    /// e-words, nonincreasing order, all indices >= 0.
    EPlusStar,
    /// e-words, nonincreasing order, all indices < 0.
    EMinusStar,
}

impl Projector {
    pub fn kind(self) -> Kind {
        match self {
            Projector::FPlusStar | Projector::FMinusStar | Projector::FPlus | Projector::FMinus => {
                Kind::F
            }
            _ => Kind::E,
        }
    }

    pub fn order(self) -> Order {
        match self {
            Projector::FPlusStar | Projector::FMinusStar => Order::NonInc,
            Projector::EPlus | Projector::EMinus => Order::NonDec,
            Projector::FPlus | Projector::FMinus => Order::NonDec,
            Projector::EPlusStar | Projector::EMinusStar => Order::NonInc,
        }
    }

    pub fn keeps(self, idx: i64) -> bool {
        match self {
            Projector::FPlusStar | Projector::FPlus => idx > 0,
            Projector::FMinusStar | Projector::FMinus => idx <= 0,
            Projector::EPlus | Projector::EPlusStar => idx >= 0,
            Projector::EMinus | Projector::EMinusStar => idx < 0,
        }
    }
}

/// Apply the projector: straighten to the attached ordering, keep the words
/// passing the sign filter. The unit word survives every projector.
pub fn project(x: &AlgebraElement, p: Projector) -> AlgebraElement {
    assert_eq!(x.kind, p.kind(), "projector applied to the wrong kind");
    let s = x.straighten(p.order());
    let mut out = AlgebraElement::zero(x.kind);
    for (w, c) in s.terms() {
        if w.iter().all(|i| p.keeps(*i)) {
            out.insert_add(w.clone(), c.clone());
        }
    }
    out
}

/// Projection of a single word.
pub fn project_word(kind: Kind, w: &[i64], p: Projector) -> AlgebraElement {
    project(&AlgebraElement::word(kind, w.to_vec()), p)
}
