pub mod bench;
pub mod classifier;
pub mod cli;
pub mod engine;
pub mod lexicon;
pub mod openapi;
pub mod par;
pub mod report;
pub mod rules;
