//! Words in mode letters and finite linear combinations of them, with
//! straightening to the ordered bases.

use crate::qfield::Scalar;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

/// Which family of modes a word lives in.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum Kind {
    E,
    F,
}

impl Kind {
    /// The ordering in which the pairing tensor is diagonal.
    pub fn natural_order(self) -> Order {
        match self {
            Kind::E => Order::NonDec,
            Kind::F => Order::NonInc,
        }
    }
}

/// Target ordering of indices along a word.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Order {
    NonDec,
    NonInc,
}

impl Order {
    pub fn in_order(self, a: i64, b: i64) -> bool {
        match self {
            Order::NonDec => a <= b,
            Order::NonInc => a >= b,
        }
    }
}

/// A word is the bare index sequence; the kind is carried by the element.
pub type WordVec = Vec<i64>;

/// Finite linear combination of same-kind words with scalar coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    pub kind: Kind,
    terms: BTreeMap<WordVec, Scalar>,
}

impl AlgebraElement {
    pub fn zero(kind: Kind) -> Self {
        AlgebraElement { kind, terms: BTreeMap::new() }
    }

    pub fn unit(kind: Kind) -> Self {
        Self::word(kind, vec![])
    }

    pub fn word(kind: Kind, w: WordVec) -> Self {
        Self::term(kind, w, Scalar::one())
    }

    pub fn letter(kind: Kind, idx: i64) -> Self {
        Self::word(kind, vec![idx])
    }

    pub fn term(kind: Kind, w: WordVec, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        AlgebraElement { kind, terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WordVec, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &[i64]) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn insert_add(&mut self, w: WordVec, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
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
        assert_eq!(self.kind, other.kind, "kind mismatch");
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.insert_add(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-&Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.kind);
        }
        AlgebraElement {
            kind: self.kind,
            terms: self.terms.iter().map(|(w, k)| (w.clone(), k * c)).collect(),
        }
    }

    /// Concatenation product (no straightening).
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.kind, other.kind, "kind mismatch");
        let mut out = Self::zero(self.kind);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.insert_add(w, c1 * c2);
            }
        }
        out
    }

    /// Straighten every word to `order`, canonical for that order.
    pub fn straighten(&self, order: Order) -> Self {
        let mut out = Self::zero(self.kind);
        for (w, c) in &self.terms {
            let s = straighten_word(self.kind, order, w);
            for (sw, sc) in &s.terms {
                out.insert_add(sw.clone(), sc * c);
            }
        }
        out
    }

    /// Straighten to the kind's natural order.
    pub fn normal_form(&self) -> Self {
        self.straighten(self.kind.natural_order())
    }

    /// Keep only words with every index in `[-window, window]`.
    pub fn window_filter(&self, window: i64) -> Self {
        AlgebraElement {
            kind: self.kind,
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.iter().all(|i| i.abs() <= window))
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Keep only words of bigrade (length, degree).
    pub fn component(&self, length: usize, degree: i64) -> Self {
        AlgebraElement {
            kind: self.kind,
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.len() == length && w.iter().sum::<i64>() == degree)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// The set of bigrades present.
    pub fn bigrades(&self) -> Vec<(usize, i64)> {
        let mut v: Vec<(usize, i64)> = self
            .terms
            .keys()
            .map(|w| (w.len(), w.iter().sum::<i64>()))
            .collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn min_index(&self) -> Option<i64> {
        self.terms.keys().flat_map(|w| w.iter().copied()).min()
    }

    pub fn max_index(&self) -> Option<i64> {
        self.terms.keys().flat_map(|w| w.iter().copied()).max()
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let tag = match self.kind {
            Kind::E => "e",
            Kind::F => "f",
        };
        let mut first = true;
        for (w, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})", c)?;
            if w.is_empty() {
                write!(f, "*1")?;
            }
            for i in w {
                write!(f, "*{}[{}]", tag, i)?;
            }
        }
        Ok(())
    }
}

type StraightenKey = (Kind, Order, WordVec);

fn straighten_cache() -> &'static Mutex<HashMap<StraightenKey, AlgebraElement>> {
    static CACHE: OnceLock<Mutex<HashMap<StraightenKey, AlgebraElement>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Straighten a single word with memoization. The rewriting replaces the
/// first adjacent out-of-order pair using the quadratic mode relation; it
/// terminates because the disorder measure (sum of index gaps over inverted
/// pairs) strictly decreases, and it never moves an index outside the range
/// spanned by the input word.
pub fn straighten_word(kind: Kind, order: Order, w: &[i64]) -> AlgebraElement {
    let bad = w.windows(2).position(|p| !order.in_order(p[0], p[1]));
    let pos = match bad {
        None => return AlgebraElement::word(kind, w.to_vec()),
        Some(p) => p,
    };
    let key: StraightenKey = (kind, order, w.to_vec());
    if let Some(hit) = straighten_cache().lock().unwrap().get(&key) {
        return hit.clone();
    }
    let (i, j) = (w[pos], w[pos + 1]);
    let mut out = AlgebraElement::zero(kind);
    for (c, a, b) in rewrite_pair(kind, order, i, j) {
        let mut nw = w.to_vec();
        nw[pos] = a;
        nw[pos + 1] = b;
        let s = straighten_word(kind, order, &nw);
        for (sw, sc) in &s.terms {
            out.insert_add(sw.clone(), sc * &c);
        }
    }
    straighten_cache().lock().unwrap().insert(key, out.clone());
    out
}

/// Rewrite one adjacent out-of-order pair `x_i x_j` as a sum of pairs that
/// are closer to the target order. Coefficient extraction from the quadratic
/// current relation gives, for `e` with nondecreasing target and `i > j`:
/// `e_i e_j = q^2 e_{i-1} e_{j+1} + q^2 e_j e_i - e_{j+1} e_{i-1}` (the two
/// shifted words merge to `q^2 e_j e_i` when `i = j + 1`), and mirrored
/// variants for the other kind/order combinations.
fn rewrite_pair(kind: Kind, order: Order, i: i64, j: i64) -> Vec<(Scalar, i64, i64)> {
    let q2 = Scalar::q_pow(2);
    let qm2 = Scalar::q_pow(-2);
    let one = Scalar::one();
    match (kind, order) {
        (Kind::E, Order::NonDec) => {
            debug_assert!(i > j);
            if i == j + 1 {
                vec![(q2, j, i)]
            } else {
                vec![(q2.clone(), i - 1, j + 1), (q2, j, i), (-&one, j + 1, i - 1)]
            }
        }
        (Kind::F, Order::NonInc) => {
            debug_assert!(i < j);
            if j == i + 1 {
                vec![(q2, j, i)]
            } else {
                vec![(q2.clone(), j, i), (q2, i + 1, j - 1), (-&one, j - 1, i + 1)]
            }
        }
        (Kind::E, Order::NonInc) => {
            debug_assert!(i < j);
            if j == i + 1 {
                vec![(qm2, j, i)]
            } else {
                vec![(qm2.clone(), j, i), (-&one, j - 1, i + 1), (qm2, i + 1, j - 1)]
            }
        }
        (Kind::F, Order::NonDec) => {
            debug_assert!(i > j);
            if i == j + 1 {
                vec![(qm2, j, i)]
            } else {
                vec![(qm2.clone(), j, i), (qm2, i - 1, j + 1), (-&one, j + 1, i - 1)]
            }
        }
    }
}
