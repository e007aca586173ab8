//! Experiment driver built on `ginlab-core`: seeded ideal families, the
//! acceptance corpus, JSON reports and the `ginlab` command line.

pub mod cli;
pub mod commands;
pub mod corpus;
pub mod family;
pub mod report;
