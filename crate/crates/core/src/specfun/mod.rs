//! Complex-argument scalar special functions: Gamma, Riemann zeta, Hurwitz
//! zeta, the Dirichlet L function for the character mod 4, the symmetrised
//! zeta, and the MacDonald function of complex order.

mod bessel;
mod gamma;
mod xi;
mod zeta;

pub use bessel::{bessel_k_complex_order, bessel_k_leading_asymptotic, MAX_IM_ORDER};
pub use gamma::{gamma_c, gamma_half_line_abs, gamma_value, ln_gamma};
pub use xi::xi1;
pub use zeta::{hurwitz_zeta, l_minus4, zeta_c, zeta_minus_pole};

pub(crate) use zeta::{em_params, em_tail, l4_em, power_table, zeta_em, zeta_pair_at_2s};
