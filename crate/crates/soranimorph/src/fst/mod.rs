//! Immutable finite-state transducers over a typed symbol alphabet, with a
//! construction algebra, flag-diacritic evaluation and bidirectional lookup.
//!
//! Compiled machines are immutable after construction and safe to share
//! across concurrent lookups; traversal state ([`FlagEnv`]) is per-path.

pub mod flags;
pub mod io;
pub mod ops;
pub mod search;
pub mod symbol;
pub mod transducer;

pub use flags::{Binding, FlagEnv};
pub use io::{from_bytes, read_from, to_bytes, write_to, IoError, FORMAT_VERSION, MAGIC};
pub use ops::{
    closure, compose, concat, eliminate_flags, flags_of, intersect, minimize, reverse,
    strip_zero, structurally_equal, union, FstError,
};
pub use search::{enumerate_paths, lookdown, lookup, lookup_paths, Enumeration, PathPair};
pub use symbol::{Flag, FlagOp, FlagParseError, SymId, Symbol, SymbolTable, EPSILON, OTHER, ZERO};
pub use transducer::{Arc, Builder, StateId, Transducer};
