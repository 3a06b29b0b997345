pub mod algebra;
pub mod basis;
pub mod cli;
pub mod coeffs;
pub mod document;
pub mod error;
pub mod grading;
pub mod hkr;
pub mod ktheory;
pub mod linalg;
pub mod map;
pub mod properties;
pub mod regrading;
pub mod report;
pub mod root;
pub mod splitting;
