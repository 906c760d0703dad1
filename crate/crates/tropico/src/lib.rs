pub mod api;
pub mod bicriteria;
pub mod cli;
pub mod decision;
pub mod linalg;
pub mod problem;
pub mod samples;
pub mod semifield;
pub mod server;
pub mod svg;
pub mod tolerance;

pub use semifield::Scalar;
pub use tolerance::Tolerance;
