//! Independent checks for `polyhole`: brute-force oracles that share no code
//! with the library algorithms, and property checks built on them.

pub mod oracle;
pub mod props;
