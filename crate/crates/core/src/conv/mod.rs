//! Convolutional codes given by seed transformation matrices.

pub mod generator;
pub mod seed;
pub mod series;
pub mod wam;

pub use generator::{
    orthogonality_check, poly_generator, rational_generator, OrthogonalityReport, PolyGenMatrix,
};
pub use seed::{dual_constraint_code, state_labels, ConvSeed, SystematicConvSeed};
pub use series::{
    dual_full_trellis, dual_total_wgf, free_distance, free_wgf, full_trellis, fundamental_paths,
    ip_total_wgf, total_wgf, FreeDistance,
};
pub use wam::{
    fourier_conjugate, iowam, iowam_from_systematic, ipwam, macwilliams_ipwam,
    macwilliams_transform, macwilliams_wam, wam, wam_of_constraint_code, Collapse, Weighting,
};
