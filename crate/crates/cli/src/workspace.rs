//! Resolving ring and module references given on the command line.

use std::path::{Path, PathBuf};
use std::sync::Arc;
use xi_core::algebra::Algebra;
use xi_core::corpus::{builtin_module, builtin_ring};
use xi_core::io::{parse_ring_json, ModuleFile};
use xi_core::modules::Module;
use xi_core::{Error, Result};

pub struct Workspace {
    pub p: u32,
    pub seed: u64,
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
}

impl Workspace {
    /// A built-in name, or a path to a ring file (relative to `base`).
    pub fn ring(&self, reference: &str, base: Option<&Path>) -> Result<Arc<Algebra>> {
        let path = base.map_or_else(|| PathBuf::from(reference), |b| b.join(reference));
        if path.is_file() {
            return parse_ring_json(&read(&path)?);
        }
        builtin_ring(reference, self.p)
    }

    /// A module file, or a built-in module name over `--ring`. Returns the
    /// module and the ring reference it was read against.
    pub fn module(&self, reference: &str, ring: Option<&str>) -> Result<(Arc<Module>, String)> {
        let path = Path::new(reference);
        if path.is_file() {
            let file: ModuleFile =
                serde_json::from_str(&read(path)?).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            let r = match ring {
                Some(r) => self.ring(r, None)?,
                None => self.ring(&file.ring, path.parent())?,
            };
            return Ok((file.build(&r)?, ring.unwrap_or(&file.ring).to_string()));
        }
        let ring_ref = ring.ok_or_else(|| Error::Parse(format!("--ring is required for the built-in module {reference:?}")))?;
        Ok((builtin_module(&self.ring(ring_ref, None)?, reference)?, ring_ref.to_string()))
    }
}
