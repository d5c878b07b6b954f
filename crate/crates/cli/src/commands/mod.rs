pub mod convolve;
pub mod free;
pub mod radial;
pub mod selftest;
pub mod torus;

use std::str::FromStr;

use zdlab_core::Exponent;

use crate::error::{input, CliError};

pub fn exponent(text: &str) -> Result<Exponent, CliError> {
    Exponent::from_str(text).map_err(|e| input(format!("bad exponent {text:?}: {e}")))
}

pub fn integer<T: FromStr>(what: &str, text: &str) -> Result<T, CliError> {
    text.trim()
        .parse()
        .map_err(|_| input(format!("bad {what} {text:?}")))
}
