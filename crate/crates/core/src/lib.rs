pub mod alcove;
pub mod cli;
pub mod error;
pub mod gl;
pub mod oracle;
pub mod prime;
pub mod ring;
mod serde_big;
pub mod verify;

pub use alcove::AlcoveWeight;
pub use error::{Error, Result};
pub use prime::Prime;
pub use ring::VerClass;
