//! Composed currents, the commuting integrands, and the triangular R-factor
//! components by recurrence, closed form and multiplicative splitting,
//! together with the factorization checks.

pub mod checks;
mod composed;
mod integrand;
mod rseries;
mod tilde;

#[cfg(test)]
mod tests;

pub use composed::{
    alpha_kernel, beta_kernel, composed_current_component, composed_mode_recursion,
    composed_residue_check, CcRoute,
};
pub use integrand::{
    commutator_probe_zero, exp_solution_probe_matches_rbar, i_full_component, i_proj_component,
    integral_tensor_probe, integrand_product_probe, power_prefactor, rbar_probe, t_prefactor,
};
pub use rseries::{
    c_coeff, cal_c_coeff, certified_components, compositions_of, factorization_residual,
    r_component, RMethod, RSign,
};
pub use tilde::{
    class_sum_closed, tilde_class_check, tilde_i_component, tilde_matches_integrand_prefactor,
    tilde_partial_class_sum, tilde_scalar, TildeClassData,
};
