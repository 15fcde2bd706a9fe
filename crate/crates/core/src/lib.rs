pub mod curve;
pub mod error;
pub mod field;
pub mod figures;
pub mod finite;
pub mod harmonic;
pub mod linalg;
pub mod projective;
pub mod random;
pub mod ruled;
pub mod scene;
pub mod suite;
