//! Lower bounds and obstructions for the weak splitting number of links.
//!
//! The weak splitting number `wsp(L)` of a link `L` is the minimal number of
//! crossing changes (self or mixed) turning `L` into a completely split link.
//! This crate ingests per-link invariant data (linking matrices, C-complex
//! Seifert matrices, slice-torus values, lattice `J`-function tables, homotopy
//! flags), evaluates every lower-bound rule that the data supports, and
//! aggregates the results into a per-link verdict.
//!
//! The crate is organised around a small strategy registry: each lower-bound
//! rule implements [`bounds::BoundRule`] and is selectable by name, and
//! [`bounds::aggregate_bounds`] runs a configured set of rules over a record.

pub mod bounds;
pub mod jfloer;
pub mod linkdata;
pub mod report;
pub mod sigkernel;

pub use bounds::{aggregate_bounds, AggregateConfig, BoundReport, BoundResult, Method, Verdict};
pub use linkdata::{
    load_corpus, parse_link_record, validate_record, CComplexData, KnotRecord, LinkRecord,
    TorusPoint,
};
