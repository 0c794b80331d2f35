//! Exact degrees and dimensions of the varieties `X_m^*` of `m`-dimensional
//! tangent spaces to Veronese varieties `v_d(P^n) ⊆ P^N`, and to arbitrary
//! smooth varieties given their Segre-class integrals.
//!
//! All arithmetic is exact. Each closed form has an independent route it can
//! be checked against; see [`verify`].

mod arith;
pub mod degrees;
pub mod error;
pub mod grassmann;
pub mod partitions;
pub mod report;
pub mod schur;
pub mod verify;

pub use arith::{binomial, determinant, factorial};
pub use degrees::{
    boole_degree, bounds, conjecture_scan, d_lambda, degree_alternate, degree_by_method,
    degree_curve_closed, degree_general_curve, degree_generic, degree_m_np1, degree_main,
    degree_surface_closed, degree_threefold_closed, dim_xm, katz_kleiman, ordinary_degree, sweep,
    verify_identity, GenericOutcome, IdentityCheck,
};
pub use error::{Error, Result};
pub use grassmann::{grassmann_degree, grassmann_dim, GrassmannShape};
pub use partitions::{
    add_rectangle, enumerate_partitions, syt_count_bruteforce, syt_count_bruteforce_capped,
    syt_count_hook, Partition, BRUTE_FORCE_CAP,
};
pub use report::{BoundsReport, DegreeReport, Method, ScanReport, TableRow};
pub use schur::{
    curve_integral_table, schur_delta_determinant, schur_delta_veronese_closed, veronese_integral_table,
    veronese_integral_table_by_determinant, veronese_segre, SegreIntegralTable, SegreSequence,
    VeroneseVariety,
};
