//! Directories of `.grp` files, labelled by file stem.

use std::fs;
use std::path::{Path, PathBuf};

use indgen::{Budget, PermGroup};

use crate::{grpfile, CliError, Status};

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub label: String,
    pub path: PathBuf,
    pub group: PermGroup,
}

/// An entry that could not be loaded, with the reason.
#[derive(Debug, Clone)]
pub struct Skipped {
    pub label: String,
    pub path: PathBuf,
    pub reason: String,
    pub status: Status,
}

#[derive(Debug, Clone, Default)]
pub struct Catalog {
    /// Sorted by label.
    pub entries: Vec<CatalogEntry>,
    pub skipped: Vec<Skipped>,
}

/// The catalog shipped with the crate sources.
pub fn bundled_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("catalog")
}

pub fn load_catalog(dir: &Path, budget: &Budget) -> Result<Catalog, CliError> {
    let io = |source| CliError::Io {
        path: dir.to_path_buf(),
        source,
    };
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(io)?
        .map(|e| e.map(|e| e.path()))
        .collect::<Result<_, _>>()
        .map_err(io)?;
    paths.retain(|p| p.extension().is_some_and(|e| e == "grp"));
    paths.sort();
    let mut catalog = Catalog::default();
    for path in paths {
        let label = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        match grpfile::read_group(&path, budget) {
            Ok(group) => catalog.entries.push(CatalogEntry { label, path, group }),
            Err(e) => catalog.skipped.push(Skipped {
                label,
                path,
                reason: e.to_string(),
                status: e.status(),
            }),
        }
    }
    Ok(catalog)
}
