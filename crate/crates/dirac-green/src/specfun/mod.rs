//! From-scratch special-function kernels: signed log-gamma, confluent
//! hypergeometric functions of both kinds, Whittaker functions, and the
//! ladder relations used as verification oracles.
//!
//! Everything here is a pure function of its arguments; there is no caching
//! or shared state, so concurrent use from any number of threads is safe.

mod gamma;
mod kummer;
mod ladder;
mod whittaker;

pub use gamma::{ln_gamma_signed, recip_gamma, SignedLogValue, DELTA_POLE};
pub use kummer::{kummer_m, kummer_m_signed, kummer_u, kummer_u_signed, DELTA_INT};
pub use ladder::{ladder_residual, LadderIdentity};
pub use whittaker::{
    whittaker_m, whittaker_m_signed, whittaker_w, whittaker_w_signed, WhittakerArgs,
};
