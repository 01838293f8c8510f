//! Biphoton coincidence spectra for collinear degenerate spontaneous
//! parametric down-conversion (SPDC) in a uniaxial nonlinear crystal
//! pumped by short Gaussian pulses.
//!
//! The crate models the full chain from crystal dispersion to measurable
//! spectra:
//!
//! - [`dispersion`] — Sellmeier refractive indices, the angle-dependent
//!   extraordinary index, wave numbers and group velocities;
//! - [`catalog`] — the crystal data file with versioned Sellmeier
//!   coefficient sets;
//! - [`phasematching`] — type-I and type-II collinear phase mismatches and
//!   root solvers for matching angles and zero-mismatch wavelengths;
//! - [`spectra`] — pump envelope, two-photon probability densities,
//!   conditional (coincidence) and marginal (single-particle) spectra,
//!   FWHM estimation and the marginal/conditional width ratio;
//! - [`peaks`] — the analytic temporal-walk-off model of the type-II
//!   double-peak structure (positions, widths, heights, height ratio) and
//!   a numeric peak detector that validates the model against sampled
//!   spectra.
//!
//! Internal units are micrometres, femtoseconds and rad/fs throughout;
//! wave numbers are 1/μm. Spectral intensities are in arbitrary units: no
//! absolute normalization of the two-photon state is attempted.

pub mod catalog;
pub mod dispersion;
pub mod peaks;
pub mod phasematching;
pub mod solver;
pub mod spectra;

/// Speed of light, μm/fs.
pub const SPEED_OF_LIGHT: f64 = 0.299792458;

pub use catalog::{CrystalCatalog, CatalogError};
pub use dispersion::{
    frequency_to_wavelength, group_velocity, group_velocity_finite_difference, index_extraordinary_at_angle,
    index_extraordinary_principal, index_ordinary, wave_number, wavelength_to_frequency, CrystalModel,
    DispersionError, RayKind, SellmeierForm, SellmeierSet,
};
pub use peaks::{
    build_report, detect_peaks, height_ratio, min_detuning_and_ratio, peak_heights, peak_positions,
    peak_positions_wavelength, peak_widths, short_pulse_check, walk_off_constants, AnalyticPeak, DetectedPeak,
    PeakLabel, PeakReport, PeaksError, PeakWidths, ShortPulseCheck, WalkOffParams,
};
pub use phasematching::{
    central_mismatch_type1, central_mismatch_type2, mismatch_12, mismatch_21, mismatch_type1,
    solve_degenerate_angle, solve_zero_mismatch_wavelength, MismatchKind, PhaseMatchError, PhaseMatchingType,
    Setup, WavelengthRoot,
};
pub use solver::{find_root, scan_sign_changes, RootError};
pub use spectra::{
    coincidence_density_type1, coincidence_density_type2, conditional_spectrum, entanglement_ratio_r, fwhm,
    marginal_spectrum, pump_envelope_amplitude, sinc, DetectionMode, PumpPulse, SpectralAxis, SpectralGrid,
    SpectrumError, SpectrumSamples,
};
