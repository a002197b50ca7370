//! Co-Higgs pairs on ℙ¹ with twist `k`: validity, nilpotency, integrability,
//! stability decisions, explicit stable fields, tangent catalogs and closed
//! formulas.

mod catalog;
mod construct;
mod pair;
mod pencil;
mod rules;
mod stability;

pub use catalog::{log_tangent_catalog, CatalogEntry, LogTangentDescriptor};
pub use construct::{construct_stable_field, explicit_stable_field, random_stable_field, DEFAULT_FALLBACK_CAP};
pub use pair::{
    first_gap, gap_condition, is_2nilpotent, is_integrable, random_form, random_matrix, random_pair, validate_pair,
    CoHiggsPair, MultiField,
};
pub use pencil::{pencil_degenerate_member, Degeneracy, PencilMember, PencilWitness};
pub use rules::{
    chern_bound, genus_nonexistence, moduli_dimension, nilpotent_space_dimension, quadric_extension_screen,
    ClosedFormQuery, ClosedFormValue, QuadricScreen, ScreenVerdict,
};
pub use stability::{
    decide_stability, invariant_line_subbundles_rank2, rational_linear_factors, rational_roots, verify_destabilizer,
    Eigenvalue, InvariantLine,
};
