//! Local recognition: local profiles, cotriangles, and the structure theory
//! of graphs locally like W(F₄) and W(B₄).

mod classify;
mod cotriangular;
mod lemma;
mod local;
mod structure;

pub use classify::{classify_f4_candidate, twisted_wf4, F4Report, Verdict};
pub use cotriangular::{is_cotriangle, is_cotriangular, CotriangularCheck};
pub use lemma::{build_locally_b4, build_locally_f4, read_off, EdgeLabeling, Pair};
pub use local::{is_locally_like, local_profile, LocalCheck, LocalProfile, LocalTarget};
pub use structure::{
    analyse_clique, clique_partition, is_tightly_connected, mu_report, require_locally_f4, strong_pairs, twist,
    twist_first, CliqueAnalysis, MuReport, Range,
};
