pub mod distributions;

pub use distributions::*;
