//! Exact computations on h-vectors of codimension-3 artinian algebras:
//! Macaulay growth and O-sequences, compressed h-vectors and their socle
//! vectors, multiplicity bounds expressed through the h-vector alone,
//! inverse systems, and batch verification over families and enumerations.

pub mod compressed;
pub mod error;
pub mod hilbert;
pub mod invsys;
pub mod level;
pub mod rational;
pub mod verify;

pub use compressed::{
    betti_edge, compressed_mc_bounds, fl_numbers, multiplicity_formula, recover_socle, BettiEdge,
    CompressedProfile, McBoundPair, McCase, SocleRecovery,
};
pub use error::{Error, Result};
pub use hilbert::{
    binom, dim_n, f_profile, invariants, is_o_sequence, macaulay_growth, macaulay_rep,
    multiplicity, multiplicity_from_profile, FProfile, HVector, InvariantSet, MacaulayRep,
    SocleVector,
};
pub use invsys::{
    apply_derivative, generic_hvector, hvector_from_invsys, parse_poly, parse_polys,
    random_power_instance, GenericRun, Monomial, Poly, PolySet,
};
pub use level::{
    check_bounds, classify_37, conjecture_bounds, mc_bounds_from_shifts, BoundReport, CaseTag,
    ConjectureBounds, ShiftExtremes, Verdict,
};
pub use rational::Rational;
pub use verify::{
    enumerate_osequences, family_iii_list, family_type2, run_batch, BatchOptions, BatchResult,
    FamilySpec, IiiPattern,
};
