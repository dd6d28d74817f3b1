//! Decide whether `n` strings of length `s` can be ordered so that each
//! one's last `t` symbols equal the next one's first `t` symbols.
//!
//! Every string is an edge from its leading `t`-gram to its trailing
//! `t`-gram, so a valid ordering is exactly an Eulerian path of that
//! multigraph. The decision is weak connectivity plus a degree-balance test
//! and runs in polynomial time; [`certificate`] builds an explicit ordering
//! and [`oracle`] holds the exponential reference searches it is checked
//! against.
//!
//! ```
//! use overlap_chain::{decide, extract_certificate, verify_certificate, Instance};
//!
//! let u = Instance::from_strs(&["ab", "ac", "cb", "cc", "ba"], 1).unwrap();
//! assert!(decide(&u).answer.is_yes());
//! let cert = extract_certificate(&u).unwrap();
//! assert!(verify_certificate(&u, &cert).is_ok());
//! ```

pub mod bench;
pub mod certificate;
pub mod cli;
pub mod connectivity;
pub mod decision;
pub mod generate;
pub mod graph;
pub mod instance;
pub mod oracle;
pub mod report;

pub use certificate::{
    extract_certificate, extract_certificate_with, verify_certificate, Certificate,
    CertificateDefect, CertifyOptions, Construction,
};
pub use connectivity::{connected_fast, connected_paper};
pub use decision::{
    decide, decide_with, test_conditions, Answer, BalanceCase, ConnectivityMethod, FailureReason,
    Verdict,
};
pub use generate::{generate, GeneratorMode, GeneratorSpec};
pub use graph::{build_pseudodigraph, degree_table, DegreeTable, Pseudodigraph, VertexLabel};
pub use instance::{
    first_gram, last_gram, parse_instance, parse_instance_with, Instance, InstanceError,
    ParseOptions, Symbol, SymbolMode,
};
pub use oracle::{oracle_backtrack, oracle_permutations, OracleError};
