//! Run metadata: every stochastic run writes a sidecar file from which it
//! can be reproduced exactly (command, effective configuration, seed,
//! version) plus a short digest used in output file names.

use std::io::Write;
use std::path::Path;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct RunMetadata {
    pub command: String,
    /// Effective key/value configuration after flag > config-file > default
    /// resolution, sorted by key.
    pub config: Vec<(String, String)>,
}

impl RunMetadata {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_string(),
            config: Vec::new(),
        }
    }

    pub fn set(&mut self, key: &str, value: impl std::fmt::Display) {
        self.config.push((key.to_string(), value.to_string()));
    }

    fn canonical(&self) -> String {
        let mut entries = self.config.clone();
        entries.sort();
        let mut s = format!("command={}\n", self.command);
        for (k, v) in &entries {
            s.push_str(&format!("{k}={v}\n"));
        }
        s
    }

    /// Short hex digest of the canonical configuration; used to name output
    /// files so distinct configurations never collide on disk.
    pub fn digest(&self) -> String {
        let hash = Sha256::digest(self.canonical().as_bytes());
        hash.iter().take(6).map(|b| format!("{b:02x}")).collect()
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        if let Some(parent) = path.parent() {
            if !parent.as_os_str().is_empty() {
                std::fs::create_dir_all(parent).map_err(|e| Error::io(parent, e))?;
            }
        }
        let mut file = std::fs::File::create(path).map_err(|e| Error::io(path, e))?;
        let body = format!(
            "version={}\nconfig_hash={}\n{}",
            env!("CARGO_PKG_VERSION"),
            self.digest(),
            self.canonical()
        );
        file.write_all(body.as_bytes()).map_err(|e| Error::io(path, e))?;
        Ok(())
    }
}
