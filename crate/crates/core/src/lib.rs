//! Finite topologies with an operation `γ`: γ-interior and γ-closure,
//! γ*-semi-open sets and their closure/interior/boundary/exterior,
//! γ-semi-continuous and γ-semi-open maps, and an engine that checks a
//! registry of stated laws exhaustively on small instances.
//!
//! ```
//! use gammatop::{Fixture, ClosureVariant, SemistarContext};
//!
//! let ctx = SemistarContext::new(Fixture::F5.space(), ClosureVariant::Pointwise);
//! let u = ctx.universe();
//! let ab = u.parse_set("{a,b}").unwrap();
//! let bc = u.parse_set("{b,c}").unwrap();
//! assert!(ctx.is_gs_open(ab).unwrap() && ctx.is_gs_open(bc).unwrap());
//! assert!(!ctx.is_gs_open(ab & bc).unwrap());
//! ```

pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod gamma;
pub mod gamma_space;
pub mod io;
pub mod laws;
pub mod maps;
pub mod mask;
pub mod semistar;
pub mod space;

pub use enumerate::{count_topologies, enumerate_topologies, topologies};
pub use error::{Error, Result};
pub use fixtures::Fixture;
pub use gamma::{
    classify_operation, enumerate_operations, gamma_builtin, gamma_from_table, BuiltinKind,
    FillPolicy, GammaOperation, OperationClass, OperationDomain, SemiRegularVariant,
};
pub use gamma_space::{ClosureVariant, GammaClosedTest, GammaSpace};
pub use maps::{MapInstance, PointMap};
pub use mask::{SubsetFamily, SubsetMask, Universe};
pub use semistar::SemistarContext;
pub use space::{make_topology, Topology};
pub use laws::{
    audit_paper, claims_matching, evaluate, evaluate_claim, find_claim, list_claims,
    search_counterexample, AuditOptions, AuditReport, Claim, EvalOptions, Hypothesis, Instance,
    SearchConfig, SearchOutcome, Status, Verdict,
};
