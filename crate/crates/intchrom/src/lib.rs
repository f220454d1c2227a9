pub mod cli;
pub mod format;
pub mod gen;
pub mod report;
