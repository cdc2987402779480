pub mod algebra;
pub mod analyzers;
pub mod builders;
pub mod cli;
pub mod error;
pub mod groups;
pub mod linalg;
pub mod oracle;
pub mod scalars;
pub mod semirings;
pub mod suite;

pub use error::{Error, Result};
pub use scalars::{Scalar, ScalarRing};
