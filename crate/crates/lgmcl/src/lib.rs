//! lgmcl: local-global multimodal contrastive learning for molecular
//! property prediction, end to end on the CPU.
//!
//! The pipeline runs from raw SMILES strings to property predictions:
//!
//! - [`chem`] parses SMILES into explicit molecular graphs, assigns
//!   implicit hydrogens, perceives rings and extracts scaffolds.
//! - [`featurize`] turns a molecule into numeric atom/bond feature
//!   matrices, whole-molecule descriptors and deterministic template text.
//! - [`fingerprint`] provides a hashed circular fingerprint plus ingestion
//!   of externally computed fingerprint files.
//! - [`tensor`] is a minimal dense-matrix engine with reverse-mode
//!   differentiation and Adam.
//! - [`graph_encoders`] holds the two structural encoders (AttentiveFP and
//!   an adjacency-aware graph transformer).
//! - [`text_encoder`] tokenizes SMILES/description text and encodes both
//!   with a disentangled-attention transformer.
//! - [`contrastive`] implements the NT-Xent objectives and the two
//!   pretraining loops.
//! - [`fusion`] is the fine-tuning architecture: cross-attention
//!   consolidation, fingerprint MLP, dual cross-attention and task heads.
//! - [`eval`] covers dataset ingestion, split protocols, metrics,
//!   embedding export and occlusion-based modality attribution.
//! - [`config`] and [`checkpoint`] define the run configuration file and
//!   the binary parameter store used by the CLI.

pub mod chem;
pub mod checkpoint;
pub mod config;
pub mod contrastive;
pub mod eval;
pub mod featurize;
pub mod fingerprint;
pub mod fusion;
pub mod graph_encoders;
pub mod rng;
pub mod synth;
pub mod tensor;
pub mod text_encoder;

pub use chem::Molecule;
pub use tensor::{Mat, Tape, TensorId};
