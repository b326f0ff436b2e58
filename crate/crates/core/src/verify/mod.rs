//! h-vector families, an O-sequence enumerator and a parallel batch checker.

mod batch;
mod enumerate;
mod families;

pub use batch::{
    read_hvector_lines, run_batch, write_csv, BatchOptions, BatchResult, BoundCounts, Failure,
    ItemError, SourceLabel,
};
pub use enumerate::{enumerate_osequences, OSequenceIter};
pub use families::{
    compressed_socles, family_iii_list, family_type2, socle_vectors, type2_grid, FamilySpec,
    IiiPattern,
};
