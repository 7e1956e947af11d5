//! Stabilizer computations and bounded-weight verification.
pub mod golden;
pub mod lemmas;
pub mod report;
pub mod solver;
pub mod spaces;
pub mod verify;
pub use lemmas::{lemma_checks, LemmaRanges};
pub use report::{CheckItem, VerificationReport};
pub use solver::{coderivation_defect, stab_delta_y_basis, stab_tau_basis, tau_defect};
pub use spaces::{in_lq, in_ls, lq_basis, ls_basis, Space};
pub use verify::{verify_closure, verify_stab_lq, verify_stab_ls, verify_theta, Claim, Workbench};
