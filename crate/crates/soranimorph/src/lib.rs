//! Finite-state morphological analysis toolkit for Central Kurdish (Sorani).
//!
//! The crate is organized around a small pipeline:
//!
//! - [`fst`] — transducer engine: construction algebra, flag diacritics,
//!   bidirectional lookup, canonical binary serialization.
//! - [`lexc`] — compiler from lexicon source (continuation classes) to a
//!   transducer.
//! - [`twol`] — compiler from two-level orthographic rules to pair-symbol
//!   automata, plus rule/lexicon composition.
//! - [`script`] — Sorani Arabic-script alphabet, normalization and the
//!   romanization utility.
//! - [`tags`] — the closed, versioned morphological tag schema.
//! - [`grammar`] — the Central Kurdish grammar itself: builders that emit
//!   lexicon and rule sources.
//! - [`ingest`] — stem-lexicon and verb-database parsing plus stem
//!   derivation (causative, passive).
//! - [`analyzer`] — compiled-grammar loading, analyze/generate.
//! - [`eval`] — accuracy and coverage evaluation harness.

pub mod analyzer;
pub mod eval;
pub mod fst;
pub mod grammar;
pub mod ingest;
pub mod lexc;
pub mod script;
pub mod tags;
pub mod twol;
