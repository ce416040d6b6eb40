//! Random walks driven by a symmetric, finitely supported step measure.
//!
//! Finite groups get exact laws by repeated convolution; every group gets
//! seeded Monte Carlo estimates reported with a Hoeffding radius.

mod cover;
mod exact;
mod measure;
mod sample;

pub use cover::{constants, coset_cover_check, CosetSpec, CoverConstants, CoverReport, CoverScope};
pub use exact::{
    convolve, exact_commute, exact_convolution, exact_coset, exact_square, point_mass, probability, Distribution,
};
pub use measure::{MeasureSummary, StepMeasure};
pub use sample::{
    estimate_commute_probability, estimate_coset_probability, estimate_square_probability, hoeffding_radius,
    involution_threshold, involution_threshold_report, sample_pairs, sample_walks, sup_square_probability,
    trend_verdict, Estimate, InvolutionReport, TrendVerdict, DEFAULT_DELTA,
};
