//! Executable finite-instance checks over a generated corpus of rings.
//!
//! Every corpus ring is finite, hence Noetherian, hence an (A)-ring. The
//! known rings without property (A) are non-Noetherian and cannot show up
//! here; the `noetherian` check turns any such verdict into a failure.
//! Statements about infinite rings are only checked through their finite
//! degenerations, and each report carries a line saying which one. In
//! particular a finite ring equals its total ring of quotients, so results
//! phrased through quotient rings collapse onto the free-extension and
//! field checks.

pub mod checks;
pub mod corpus;
pub mod run;
pub mod search;

pub use checks::{TheoremCheckResult, TheoremId};
pub use corpus::{generate_corpus, CorpusSpec};
pub use run::{run_verification, VerificationReport};
pub use search::{search_duplication_converse, SearchReport};
