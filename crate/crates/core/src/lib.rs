//! Trajectory representations for nodes in temporal graphs.
//!
//! A temporal graph is an ordered sequence of undirected snapshots over a
//! shared node universe. This crate learns a d-dimensional trajectory vector
//! per (node, time) by running random walks that cover both the current
//! snapshot (space-walks) and a node's own past neighborhoods (time-walks),
//! then training SkipGram with negative sampling on the walk corpus.
//!
//! Two drivers are provided: [`trajectory::stwalk1`] walks a combined
//! space-time graph in one pass, while [`trajectory::stwalk2`] learns spatial
//! and temporal embeddings separately and sums them. Structural baselines
//! (per-snapshot PageRank trajectories, averaged per-snapshot DeepWalk) and
//! the downstream evaluations (trajectory classification, change-point
//! histograms, embedding arithmetic, PCA export) live in [`baselines`] and
//! [`evaluation`]. [`synth`] generates planted community-switch datasets so
//! the whole pipeline can be verified end to end without external data.

pub mod baselines;
pub mod error;
pub mod evaluation;
pub mod graph;
pub mod seeds;
pub mod skipgram;
pub mod spacetime;
pub mod synth;
pub mod trajectory;
pub mod walks;

pub use error::{Error, Result};
pub use graph::{NodeLabelTable, Snapshot, TemporalGraphSet, Token};
pub use skipgram::{EmbeddingTable, NamedVectors, TrainConfig};
pub use spacetime::SpaceTimeGraph;
pub use trajectory::{StwalkParams, TrajectoryEmbedding};
pub use walks::WalkCorpus;
