//! Exact computation with matroids, oriented matroids and simplicial
//! homology, aimed at colorful Carathéodory problems.
//!
//! The main entry points are [`theorem::check_instance`] and
//! [`theorem::find_witness`], which decide whether an (oriented matroid,
//! matroid) pair satisfies the covering hypothesis and, if so, return a
//! positive circuit that is independent in the matroid. [`euclid`] reduces
//! point-set instances in rational space to that setting.

pub mod caps;
pub mod complex;
pub mod error;
pub mod euclid;
pub mod gen;
pub mod ground;
pub mod homology;
pub mod io;
pub mod linalg;
pub mod matching;
pub mod matroid;
pub mod oracle;
pub mod oriented;
pub mod selfcheck;
pub mod subset;
pub mod theorem;

pub use caps::Caps;
pub use error::{Error, Result};
pub use complex::SimplicialComplex;
pub use euclid::{ColorfulCertificate, PointConfig};
pub use ground::GroundSet;
pub use homology::{eta, reduced_homology, BettiVector, Eta};
pub use linalg::Rational;
pub use matroid::{Matroid, MatroidKind, ValidationReport};
pub use oriented::{OrientedMatroid, SignedSet};
pub use subset::Subset;
pub use theorem::{
    build_z, check_instance, colorful_bruteforce, find_witness, meshulam_check, HypothesisReport,
    Instance, WitnessCertificate, ZComplex,
};
