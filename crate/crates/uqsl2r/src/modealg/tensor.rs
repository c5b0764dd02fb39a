//! Two-sided elements: finite sums of (f-word (x) e-word) with scalar
//! coefficients. These carry the R-factor components and the commuting
//! integrands; the tau-degree of a term is the length of its f-word.

use super::element::{AlgebraElement, Kind, Order, WordVec};
use crate::qfield::Scalar;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Default)]
pub struct TensorElement {
    terms: BTreeMap<(WordVec, WordVec), Scalar>,
}

impl TensorElement {
    pub fn zero() -> Self {
        TensorElement { terms: BTreeMap::new() }
    }

    pub fn unit() -> Self {
        let mut t = Self::zero();
        t.insert_add(vec![], vec![], Scalar::one());
        t
    }

    pub fn term(fw: WordVec, ew: WordVec, c: Scalar) -> Self {
        let mut t = Self::zero();
        t.insert_add(fw, ew, c);
        t
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(WordVec, WordVec), &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, fw: &[i64], ew: &[i64]) -> Scalar {
        self.terms
            .get(&(fw.to_vec(), ew.to_vec()))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn insert_add(&mut self, fw: WordVec, ew: WordVec, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((fw, ew)) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = &*o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((fw, ew), c) in &other.terms {
            out.insert_add(fw.clone(), ew.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-&Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        TensorElement {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Slotwise product: f-words and e-words concatenate. No straightening.
    pub fn mul_raw(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((f1, e1), c1) in &self.terms {
            for ((f2, e2), c2) in &other.terms {
                let mut fw = f1.clone();
                fw.extend_from_slice(f2);
                let mut ew = e1.clone();
                ew.extend_from_slice(e2);
                out.insert_add(fw, ew, c1 * c2);
            }
        }
        out
    }

    /// Slotwise product followed by straightening both slots to the natural
    /// orders (f nonincreasing, e nondecreasing).
    pub fn mul(&self, other: &Self) -> Self {
        self.mul_raw(other).normal_form()
    }

    /// Straighten both slots to the natural orders.
    pub fn normal_form(&self) -> Self {
        let mut out = Self::zero();
        for ((fw, ew), c) in &self.terms {
            let fs = AlgebraElement::word(Kind::F, fw.clone()).straighten(Order::NonInc);
            let es = AlgebraElement::word(Kind::E, ew.clone()).straighten(Order::NonDec);
            for (fw2, fc) in fs.terms() {
                for (ew2, ec) in es.terms() {
                    out.insert_add(fw2.clone(), ew2.clone(), &(fc * ec) * c);
                }
            }
        }
        out
    }

    /// Keep terms whose f-word and e-word indices all have magnitude at most
    /// `window`.
    pub fn window_filter(&self, window: i64) -> Self {
        TensorElement {
            terms: self
                .terms
                .iter()
                .filter(|((fw, ew), _)| {
                    fw.iter().all(|i| i.abs() <= window) && ew.iter().all(|i| i.abs() <= window)
                })
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    /// Keep terms with the given f-slot bigrade (length, degree).
    pub fn component(&self, flen: usize, fdeg: i64) -> Self {
        TensorElement {
            terms: self
                .terms
                .iter()
                .filter(|((fw, _), _)| fw.len() == flen && fw.iter().sum::<i64>() == fdeg)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    /// f-slot bigrades present.
    pub fn bigrades(&self) -> Vec<(usize, i64)> {
        let mut v: Vec<(usize, i64)> = self
            .terms
            .keys()
            .map(|(fw, _)| (fw.len(), fw.iter().sum::<i64>()))
            .collect();
        v.sort();
        v.dedup();
        v
    }

    /// Tensor product of two single-slot elements.
    pub fn of(f: &AlgebraElement, e: &AlgebraElement) -> Self {
        assert_eq!(f.kind, Kind::F);
        assert_eq!(e.kind, Kind::E);
        let mut out = Self::zero();
        for (fw, fc) in f.terms() {
            for (ew, ec) in e.terms() {
                out.insert_add(fw.clone(), ew.clone(), fc * ec);
            }
        }
        out
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((fw, ew), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({}) f{:?}(x)e{:?}", c, fw, ew)?;
        }
        Ok(())
    }
}
