//! Deterministic command line reports over the exact homological machinery:
//! per complex analysis, combined torus tables over a mode box, and seeded
//! verification suites. Identical inputs, seeds, and versions render to
//! identical bytes, so reports can be diffed and archived.

use std::path::Path;

pub mod analyze;
pub mod render;
pub mod torus;
pub mod verify;

pub use render::{Envelope, Format, VERSION};
pub use verify::{run_suite, Suite, SuiteReport};

/// A command failure carrying the exit code it maps to: one for a failed
/// property suite, two for input that parsed but violates the structural
/// laws, three for input that could not be read at all.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn property(message: String) -> Self {
        Failure { code: 1, message }
    }

    pub fn validation(message: String) -> Self {
        Failure { code: 2, message }
    }

    pub fn parse(message: String) -> Self {
        Failure { code: 3, message }
    }
}

/// Writes a rendering to the chosen destination: a file when one is named,
/// standard output otherwise.
pub(crate) fn emit(output: Option<&Path>, rendered: &str) -> Result<(), Failure> {
    match output {
        Some(path) => std::fs::write(path, rendered)
            .map_err(|e| Failure::parse(format!("could not write {}: {e}", path.display()))),
        None => {
            print!("{rendered}");
            Ok(())
        }
    }
}
