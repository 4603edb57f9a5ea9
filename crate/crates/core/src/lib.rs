//! Exact computations with finite point sets in P¹×P¹: bigraded polynomial
//! arithmetic, Gröbner bases, saturation by the irrelevant ideal, and tools
//! that decide whether a point set is a virtual complete intersection.

pub mod bipoly;
pub mod error;
pub mod field;
pub mod format;
pub mod geometry;
pub mod groebner;
pub mod linalg;
pub mod oracle;
mod unipoly;

pub use bipoly::{binary_roots, BiMonomial, BiPoly, BinaryForm, BinaryRoots};
pub use error::{Error, Result};
pub use field::{Field, Scalar, DEFAULT_PRIME};
pub use format::{
    poly_from_json, poly_to_json, verdict_from_json, verdict_to_json, verification_to_json, JsonDoc,
};
pub use geometry::{
    configuration_of, cross_ratio, form_through_points, forms_through, rulings_of, transform_point,
    vanishing_ideal, Axis, BiProjPoint, Configuration, CrossRatio, IntPoint, PointSet, ProjPoint,
    Ruling, Rulings,
};
pub use groebner::{
    buchberger, hilbert_value, ideal_equal, ideal_member, intersect, irrelevant_ideal, saturate,
    saturate_by_element, saturate_by_irrelevant, GroebnerBasis, Ideal, MonomialOrder,
};
pub use oracle::{
    exhaustive_witness_search, saturation_by_linear_algebra, SaturationTable, SearchCaps,
    WitnessSearch,
};
pub mod vci;

pub use vci::{
    analyze, analyze_with, bezout_count, classify_ferrers, classify_few_rulings,
    construct_balanced_vci, construct_set_theoretic, degree_candidates, degree_candidates_for,
    koszul_shape, refute_cross, refute_gcd, refute_number_theory, verify_vci, AnalyzeOptions,
    Bidegree, Criterion, GapRuling, KoszulShape, MultiplicityMap, Refutation, SetTheoreticVci,
    VciCertificate, VciVerdict, Verification, VerifyMode, Witness,
};
