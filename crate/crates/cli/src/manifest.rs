//! Run manifests: what was run, on which inputs, with which budgets, and how it ended.

use std::fmt;
use std::fs;
use std::io;
use std::path::Path;

use knotadj::fixtures;
use sha2::{Digest, Sha256};

pub fn sha256_hex(bytes: &[u8]) -> String {
    format!("{:x}", Sha256::digest(bytes))
}

#[derive(Clone, Debug, Default)]
pub struct RunManifest {
    pub command: String,
    pub version: String,
    /// `(name, sha256)` for every bundled data file and every input file read.
    pub inputs: Vec<(String, String)>,
    pub budgets: Vec<(String, String)>,
    pub outcome: Vec<String>,
}

impl RunManifest {
    pub fn new(command: impl Into<String>) -> Self {
        let inputs = fixtures::bundled_files()
            .into_iter()
            .map(|(path, text)| (format!("bundled:{path}"), sha256_hex(text.as_bytes())))
            .collect();
        Self {
            command: command.into(),
            version: env!("CARGO_PKG_VERSION").into(),
            inputs,
            ..Default::default()
        }
    }

    /// Reads `path`, recording its digest.
    pub fn read_input(&mut self, path: &Path) -> io::Result<String> {
        let text = fs::read_to_string(path)?;
        self.inputs.push((path.display().to_string(), sha256_hex(text.as_bytes())));
        Ok(text)
    }

    pub fn budget(&mut self, name: &str, value: impl fmt::Display) {
        self.budgets.push((name.into(), value.to_string()));
    }
}

impl fmt::Display for RunManifest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "command {}", self.command)?;
        writeln!(f, "version {}", self.version)?;
        for (name, digest) in &self.inputs {
            writeln!(f, "input {name} sha256:{digest}")?;
        }
        for (name, value) in &self.budgets {
            writeln!(f, "budget {name} {value}")?;
        }
        for line in &self.outcome {
            writeln!(f, "outcome {line}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digests_are_stable() {
        assert_eq!(
            sha256_hex(b"abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
        let a = RunManifest::new("x").to_string();
        assert_eq!(a, RunManifest::new("x").to_string());
        assert_eq!(a.matches("input bundled:").count(), fixtures::bundled_files().len());
    }
}
