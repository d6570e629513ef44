//! Rational links, zigzag friezes and their Jones polynomials.

pub mod error;
pub mod frieze;
pub mod jones;
pub mod laurent;
pub mod lr_words;
pub mod oracle;
pub mod rational;
pub mod schubert;
pub mod tangle_bracket;
pub mod verify;
pub mod writhe;

pub use error::{Error, Result};
