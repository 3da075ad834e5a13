pub mod error;
pub mod exactnum;
pub mod hypergeom;
pub mod json;
pub mod lemmas;
pub mod mixed;
pub mod ore;
pub mod theorem;
pub mod verify;

pub use error::{Error, Result};
