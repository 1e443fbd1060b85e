//! Elimination of counterexamples for a torsion unit `u` of odd order `n`
//! coprime to the characteristic, one divisor `d` of `n` at a time.

pub mod augmentation;
pub mod case;
pub mod explore;
pub mod tuples;

pub use augmentation::{
    eps_from_lambdas, lambda_value, multiplicity, multiplicity_with_powers, AugVector,
};
pub use case::{
    bound_admissible, candidate_ds, check_case, check_case_with_workers, verify_order,
    verify_order_with_workers, CandidateD, CandidateReport, CaseCertificate, Conclusion, NearMiss,
    OrderVerdict, PruningStats, Verdict,
};
pub use explore::{explore_eps, ExploreReport};
pub use tuples::{
    bound_check, cb_difference, enumerate_nu_tuples, kappa_filter, BoundCheck, CoeffTable, NuTuple,
    TupleSpace,
};

pub const SCHEMA_VERSION: u32 = 1;
