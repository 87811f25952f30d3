//! Product-fit feedback extraction from customer review text.
//!
//! A review like "this dress runs small, order a size up" carries structured
//! sizing feedback hidden in natural language. This crate turns such text into
//! one of three labels (fit / small / large) and compares three classifier
//! families on the task:
//!
//! - TF-IDF features + multinomial logistic regression
//! - mean-pooled pretrained word embeddings + logistic regression
//! - an LSTM language model fine-tuned for classification with discriminative
//!   learning rates, a slanted triangular schedule, and gradual unfreezing
//!
//! Everything trains deterministically from a single seed: the tensor engine,
//! the samplers, and the data splits all draw from seeded PCG64 streams.

pub mod autograd;
pub mod checkpoint;
pub mod config;
pub mod corpus;
pub mod eval;
pub mod features;
pub mod finetune;
pub mod langmodel;
pub mod linear;
pub mod rng;

pub use corpus::{FitLabel, Review, SplitDataset, Vocabulary};
