pub mod expr;
pub mod report;
pub mod suites;
pub mod tables;
