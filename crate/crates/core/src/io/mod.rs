//! Reading and writing MAGs and matrices, and the builtin example MAGs.

mod builtin;
mod format;
mod mtx;

pub use builtin::builtin_example;
pub use format::{parse_mag, parse_mag_document, write_mag, AspectRecord, EdgeRecord, MagDocument};
pub use mtx::{read_matrix_market, write_matrix_market};
