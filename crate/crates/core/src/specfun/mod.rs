//! Special-function kernel: log-gamma, Bessel J of real order and its first
//! positive zero, Hurwitz zeta at integer arguments, sphere/ball measures.

mod bessel;
mod gamma;
mod zeta;

pub use bessel::{
    bessel_first_zero, bessel_j, BesselZeroBracket, BESSEL_NU_MAX, BESSEL_X_MAX, ZERO_NU_MAX,
};
pub use gamma::{ball_volume, ln_gamma, sphere_area};
pub use zeta::hurwitz_zeta;


pub(crate) use gamma::{exp_tracked, lng};
