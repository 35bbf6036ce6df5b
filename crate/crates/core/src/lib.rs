//! Interval orders with mixed open and closed interval representations.
//!
//! The crate builds finite posets, recognizes interval orders, constructs
//! small explicit realizers for interval orders whose representations use
//! few interval lengths, and computes the exact order dimension of small
//! posets with a certificate.
//!
//! ```
//! use intorder::{poset_from_representation, realizer_unit_oc, verify_realizer, Representation};
//!
//! let rep = Representation::parse(&[("a", "[0,1]"), ("b", "(1,2)"), ("c", "[1,2]")])?;
//! let poset = poset_from_representation(&rep);
//! assert!(poset.lt_by_name("a", "b")?);
//! assert!(!poset.lt_by_name("a", "c")?);
//!
//! let realizer = realizer_unit_oc(&poset, &rep)?;
//! assert_eq!(realizer.len(), 3);
//! assert!(verify_realizer(&poset, &realizer)?.is_valid());
//! # Ok::<(), intorder::Error>(())
//! ```

pub mod builders;
pub mod dimension;
pub mod error;
pub mod format;
pub mod instances;
pub mod interval;
pub mod poset;
pub mod rational;
pub mod reversal;

pub use builders::{
    antichain_partition_minima, realizer_multi_length, realizer_unit_oc, realizer_zero_one, unit_oc_construction,
    zero_one_construction, zero_one_decomposition, AntichainPartition, UnitOcConstruction, ZeroOneConstruction,
    ZeroOneDecomposition,
};
pub use dimension::{exact_dimension, exact_dimension_with, unit_dim3_by_pattern, DimensionOptions, DimensionResult, LowerBound};
pub use error::{Error, Result};
pub use interval::{
    canonical_closed_representation, classify, is_consistent, is_interval_order, is_interval_order_by_pattern,
    is_unit_interval_order, open_all, poset_from_representation, precedes, scale, MixedInterval, ReprClass,
    Representation,
};
pub use poset::{
    build_poset, contains_subposet, holdings_classes, is_linear_extension, quotient_duplicates, reinflate_realizer,
    verify_realizer, HoldingsClass, IncPair, LinearExtension, Poset, Quotient, Realizer, RealizerCheck,
};
pub use rational::Rational;
pub use reversal::{extension_separating, find_strict_alternating_cycle, linear_extension_reversing, CycleWitness, Reversal};
