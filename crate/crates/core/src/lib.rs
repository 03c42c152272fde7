//! Plan-and-write storytelling engine.
//!
//! The pipeline: ingest a five-sentence story corpus, extract one-word-per-sentence
//! storylines with RAKE, train planner and writer models (a dynamic schema that
//! interleaves planning and writing, a static schema that plans the whole storyline
//! first, and two no-planning baselines), generate stories from titles with a
//! no-repeat storyline constraint, and score the results with n-gram diversity and
//! storyline-correlation metrics.
//!
//! Modules mirror the pipeline stages:
//!
//! - [`corpus`]: tokenization, CSV ingestion, vocabulary, deterministic splits
//! - [`rake`]: RAKE word scoring and storyline extraction
//! - [`nn`]: dense tensors with reverse-mode autodiff, GRU/LSTM cells, attention,
//!   dropout, SGD, and finite-difference gradient checking
//! - [`models`]: the four planner/writer networks, two baselines, and training
//! - [`decode`]: greedy/sampled decoding, the no-repeat constraint, and the
//!   end-to-end generation pipelines
//! - [`metrics`]: inter/intra-story repetition, BLEU, greedy matching, usage rate

pub mod corpus;
pub mod decode;
pub mod error;
pub mod metrics;
pub mod models;
pub mod nn;
pub mod rake;

pub use error::{Error, Result};
