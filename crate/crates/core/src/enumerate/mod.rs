//! Exhaustive enumeration of finite residuated lattices up to isomorphism.

mod census;
mod complete;
mod skeleton;

pub use census::{
    census, census_size, shape_census, AlgebraClass, CatalogRecord, Census, CensusOptions, CensusRow, ClassCounts,
    GraphRecord, ShapeMultiset, SizeCensus,
};
pub use complete::{complete_to_residuated, completions, Completion};
pub use skeleton::{enumerate_skeletons, LatticeSkeleton};
