//! Mixed polar weighted homogeneous polynomials and their projective curves.
//!
//! The crate builds parametric families of mixed polynomials (a base family
//! in two variables, its join and twisted-join extensions in three), infers
//! and checks their weight systems exactly, evaluates the topological
//! invariants of the associated curves and Milnor fibrations (Euler
//! characteristics, genus, link component count, zeta function), plans a
//! family member for a requested genus and polar degree, and verifies the
//! numerically checkable identities with seeded, reproducible sampling.
//!
//! Modules:
//!
//! * [`poly`]: sparse mixed polynomials and Wirtinger calculus
//! * [`text`]: canonical text form, printing and parsing
//! * [`weights`]: exact rational weight inference and twisted extension
//! * [`families`]: the parametric families and their root oracles
//! * [`invariants`]: closed-form invariants, consistency routes, planner
//! * [`report`]: markdown rendering of invariant reports
//! * [`verify`]: seeded numerical verification suites

pub mod families;
pub mod invariants;
pub mod poly;
pub mod report;
pub mod text;
pub mod verify;
pub mod weights;

pub use families::{
    h_chart_roots, make_degree_one, make_h, make_join, make_remark11, make_twisted,
    remark11_chart_roots, FamilyError, FamilyKind, FamilyParams, FamilySpec,
};
pub use invariants::{
    chi_base, chi_base_torus, chi_join_family, chi_projective, chi_twisted, chi_twisted_family,
    genus_from_chi, genus_join_family, invariant_report, join_chi, link_count, plan_embedding,
    plucker_genus, thom_bound, zeta_function, EmbeddingPlan, InvariantError, InvariantReport,
    PlanStatus, TwistedChi, ZetaFactorization,
};
pub use poly::{apply_action, MixedMonomial, MixedPolynomial, PolyError, ScaleAction};
pub use report::markdown_table;
pub use text::{parse_polynomial, parse_polynomial_infer, ParseError};
pub use verify::{
    find_p1_zeros, find_p1_zeros_with_oracle, sample_smoothness, verify_homogeneity,
    verify_link_count, verify_monodromy_flow, verify_wirtinger, VerifyConfig, VerifyError,
    VerifyOutcome, ZeroSet,
};
pub use weights::{
    check_weights, infer_weights, is_1_convenient, twisted_join_weights, HomogeneityClass,
    Rational, WeightError, WeightSystem,
};
