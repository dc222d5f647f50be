pub mod cli;
pub mod code;
pub mod distance;
pub mod error;
pub mod field;
pub mod mds;
pub mod oracle;
pub mod poly;
pub mod qsc;
pub mod spectrum;
pub mod verify;
pub mod weights;
