//! Exact polynomial differential forms on projective space: twisted sections,
//! restriction to hypersurfaces, extension of foliations and Morse probes.

pub mod extension;
pub mod forms;
pub mod linalg;
pub mod morse;
pub mod pfaff;
pub mod poly;
pub mod restriction;
pub mod sample;
pub mod text;

pub type Rational = num_rational::BigRational;
