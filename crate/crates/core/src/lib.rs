//! Braid-group signatures: proxy signatures with warrants, designated-verifier and
//! bi-designated-verifier signatures, and their proxy combinations, over an exact
//! Garside normal-form engine.
//!
//! The parameter presets are toys. `braidsig attack` breaks them in seconds.

pub mod braid;
pub mod cli;
pub mod codec;
pub mod conjugacy;
pub mod hashing;
pub mod preset;
pub mod schemes;
