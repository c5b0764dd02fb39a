//! The nilpotent current algebras in mode form.
//!
//! Words in the modes `e_n` / `f_n` (n in Z), finite straightening to the
//! ordered bases, the Hopf pairing between the dual nilpotent subalgebras,
//! dual-basis expansion (the independent oracle for straightening), screening
//! operators, sign projectors, half-current powers and the multiplicative
//! pairing tensor.
//!
//! Ordering conventions: `e`-words straighten to nondecreasing indices and
//! `f`-words to nonincreasing indices (the orientation in which the pairing
//! tensor is diagonal); the opposite orientations are used by the starred /
//! unstarred projector families and are obtained from the mirrored rewriting
//! rule.

mod dual;
mod element;
mod halfcur;
mod pairing;
mod project;
mod screen;
mod tensor;

#[cfg(test)]
mod tests;

pub use dual::dual_expand;
pub use element::{AlgebraElement, Kind, Order, WordVec};
pub use halfcur::{
    half_current_component, half_current_power_component, half_current_power_raw,
    rbar_component, rbar_component_range, HalfSign,
};
pub use pairing::{c_multiset, pair_words, pair_words_2};
pub use project::{project, project_word, Projector};
pub use screen::{screening, screening_pow, Screening};
pub use tensor::TensorElement;
