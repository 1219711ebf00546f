//! Flexible prismatic polyhedra built from unbounded Bricard-type suspensions.
//!
//! The crate is `no_std` (with `alloc`) and contains only the numerical
//! kernel: parameter families, juncture realization, multi-segment assembly
//! and the flexion/rigidity machinery. File formats and the command line live
//! in the `prismflex` companion crate.
//!
//! Conventions used throughout:
//!
//! - all angles are radians;
//! - vertex and edge indices are zero-based in code (`k = 0..n`), so the
//!   juncture edge `k` joins vertex `k` to vertex `(k + 1) % n`;
//! - the flexion parameter `theta` orients the two segments meeting at a
//!   juncture through `u(θ) = (−sin θ, −cos θ, 0)` and `w(θ) = (sin θ, −cos θ, 0)`.

#![cfg_attr(not(test), no_std)]
// NaN-rejecting comparisons such as `!(x > 0.0)`
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod assembly;
pub mod error;
pub mod flexion;
pub mod geom;
pub mod juncture;
pub mod params;

pub use assembly::{
    alternate_params, build_genus1, edge_lengths, euler_counts, min_segment_length, offsets, oriented_offsets,
    variant_for_outward, EulerCounts, OffsetTables, Orient, PolyhedronSpec, SegmentSpec,
};
pub use error::{Error, Result};
pub use flexion::{
    dihedral_profiles, frame_from_rings, realize, realize_unchecked, rigidity_report, sweep, DihedralProfile, Frame,
    RigidityReport,
};
pub use geom::{orientation_vectors, FlexionInterval, Vec3, DEFAULT_TOLERANCE};
pub use juncture::{
    chain_vertices, closure_residual, compute_delta, default_v1, deltas, dihedral_epsilon, flexion_range, sign_pattern,
    symmetric_v1, DeltaV,
};
pub use params::{
    continuity_residual, make_type1, make_type2_aee, make_type2_oee, make_type3_oae, JunctureParams, SuspensionType,
    Variant,
};
