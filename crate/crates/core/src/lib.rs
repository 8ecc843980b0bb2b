//! Fusion rings of SU(N)_k and exact classification of their braidings.

pub mod autoeq;
pub mod classifier;
pub mod error;
pub mod fusion_ring;
pub mod numtheory;
pub mod oracle;
pub mod pointed;
pub mod root;
pub mod verify;
pub mod young;

pub use error::{Error, Result};
pub use fusion_ring::{FusionRing, LabelSet, StructureConstants};
pub use root::UnitRootExp;
pub use young::{enumerate_labels, fuse_column, fuse_generator, SuNk, YoungDiagram};
