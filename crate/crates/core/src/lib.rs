//! Robustness evaluation of fusion-based multimodal (image + text) classifiers
//! under cross-modal dilutions.
//!
//! The crate covers the full pipeline at desk scale:
//!
//! - [`corpus`] — dataset model, preprocessing, splitting, and a synthetic
//!   multimodal dataset generator with ground-truth object boxes.
//! - [`encoders`] — pluggable text/image encoders, the insertion vocabulary,
//!   and a contrastively trained joint (image, text) embedding space.
//! - [`classifiers`] — text-only, image-only, and fusion classifiers with
//!   early stopping.
//! - [`keywords`] — prominence-ranked keyword extraction from text and from
//!   detected image objects.
//! - [`generator`] — the XMD dilution generator: progressive lexically
//!   constrained insertion, two-stage fine-tuning, and the adversarial loss.
//! - [`baselines`] — rule-based and model-based dilution baselines.
//! - [`metrics`] — relevance, coherence, diversity, and classification
//!   metrics with per-seed reporting.
//! - [`harness`] — configuration-driven orchestration, caching, tables.

pub mod baselines;
pub mod classifiers;
pub mod corpus;
pub mod encoders;
pub mod generator;
pub mod harness;
pub mod keywords;
pub mod metrics;
pub mod nn;

mod error;

pub use error::{Error, Result};

pub use baselines::BaselineConfig;
pub use classifiers::{ClassDistribution, ClassificationMetrics, ClassifierBundle};
pub use corpus::{DatasetSplit, ImageTensor, MultimodalExample};
pub use generator::{DilutionRecord, GenerationTrace, InsertionLm};
pub use harness::{AblationMode, ExperimentConfig};
pub use keywords::{DetectedObject, KeywordSet};
pub use metrics::{CorrespondenceModel, MetricReport, TopicModel};
