//! Membership tests, radicals and the checks around them.

mod axioms;
mod equivalence;
mod membership;
mod oracle;
mod radical;

pub use axioms::{verify_radical_axioms, AxiomCheck, AxiomReport};
pub use equivalence::{
    equivalence_family, equivalence_report, member_report, EquivalenceReport, EquivalenceVerdict,
    FamilyMember, MemberReport,
};
pub use membership::{
    membership, membership_cocleft, membership_projective, membership_semisimple, module_maps_to_b,
    verify_cointegral, verify_doi, Certificate, MembershipVerdict, RadicalClass, SearchOptions,
    Verdict,
};
pub use oracle::{all_subspaces, brute_force_radical, submodule_coalgebras, BruteForce};
pub use radical::{radical_compute, ComponentReport, RadicalResult};
