pub mod ideal_file;
pub mod report;
