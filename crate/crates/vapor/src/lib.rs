//! Siamese machine unlearning at desk scale.
//!
//! This crate implements knowledge vaporization and concentration: a trained
//! classifier is updated so that augmented views of the forgetting data
//! produce dispersed, uninformative logits while views of the remaining data
//! stay concentrated. Everything runs on a small reverse-mode autodiff engine
//! so the whole pipeline (pretraining, unlearning, evaluation) is
//! deterministic and CPU-friendly.
//!
//! Module map:
//! - [`tensor`]: tape-based reverse-mode AD, layer primitives, SGD, checkpoints
//! - [`data`]: labeled datasets, synthetic generators, forgetting splits
//! - [`augment`]: seeded stochastic augmentation pipelines (two-view sampling)
//! - [`net`]: backbone architectures and the predictor head
//! - [`unlearn`]: the Siamese unlearning loop, losses, label permutation, baselines
//! - [`eval`]: accuracy splits, entropy MIA, KL dispersion, PCA export

pub mod augment;
pub mod data;
pub mod eval;
pub mod net;
pub mod rng;
pub mod tensor;
pub mod unlearn;

pub use data::{DatasetSplit, LabeledDataset, RatioVector};
pub use eval::MetricsReport;
pub use net::Network;
pub use tensor::{Scalar, Tensor};
pub use unlearn::UnlearnConfig;
