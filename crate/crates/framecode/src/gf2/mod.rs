//! GF(2) codewords, linear codes, and weight enumerators.

mod code;
mod codeword;
mod io;
mod rm;
mod weight;

pub use code::LinearCode;
pub use codeword::Codeword;
pub use io::{format_code_file, parse_code_file, ParseInfo};
pub use rm::reed_muller;
pub use weight::{macwilliams, WeightEnumerator};
