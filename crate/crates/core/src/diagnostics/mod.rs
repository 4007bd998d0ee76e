//! Quality metrics for extensions: chunk counts, spectra and the profiles
//! they are measured on.

mod fd;
mod panels;
mod profiles;
mod spectrum;

pub use fd::{fd_weights, one_sided_amplification, one_sided_derivatives};
pub use panels::{
    adaptive_chunks, chebyshev_coefficients, try_adaptive_chunks, Panel, PanelSet, CHUNK_COEFFS, CHUNK_TOL,
    MAX_DEPTH,
};
pub use profiles::{build_f_profile, build_g_profile, f_profile_value, FProfile, GProfile};
pub use spectrum::{dft_direct, power_spectrum, SpectrumReport};
