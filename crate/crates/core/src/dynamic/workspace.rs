//! Throwaway copies of a project tree.

use std::fs::{self, File};
use std::io::Read;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};
use tempfile::TempDir;
use walkdir::WalkDir;

use crate::error::{Error, Result};

/// A private copy of a project. Deleted on drop.
#[derive(Debug)]
pub struct Workspace {
    dir: TempDir,
}

impl Workspace {
    /// Copies `src` into a fresh temporary directory. File modification
    /// times are preserved so incremental builds in the copy only redo
    /// what later changes touch.
    pub fn copy_of(src: &Path) -> Result<Self> {
        let dir = tempfile::Builder::new()
            .prefix("logbench-ws-")
            .tempdir()
            .map_err(|e| Error::io(std::env::temp_dir(), e))?;
        copy_tree(src, dir.path())?;
        Ok(Workspace { dir })
    }

    pub fn path(&self) -> &Path {
        self.dir.path()
    }

    pub fn join(&self, rel: &str) -> PathBuf {
        self.dir.path().join(rel)
    }
}

fn copy_tree(src: &Path, dst: &Path) -> Result<()> {
    for entry in WalkDir::new(src).sort_by_file_name() {
        let entry = entry.map_err(|e| Error::io(src, e.into()))?;
        let rel = entry.path().strip_prefix(src).expect("walkdir stays under root");
        let target = dst.join(rel);
        let ft = entry.file_type();
        if ft.is_dir() {
            fs::create_dir_all(&target).map_err(|e| Error::io(&target, e))?;
        } else if ft.is_file() {
            fs::copy(entry.path(), &target).map_err(|e| Error::io(&target, e))?;
            let modified = entry
                .metadata()
                .map_err(|e| Error::io(entry.path(), e.into()))?
                .modified()
                .map_err(|e| Error::io(entry.path(), e))?;
            File::options()
                .write(true)
                .open(&target)
                .and_then(|f| f.set_modified(modified))
                .map_err(|e| Error::io(&target, e))?;
        } else if ft.is_symlink() {
            let link = fs::read_link(entry.path()).map_err(|e| Error::io(entry.path(), e))?;
            std::os::unix::fs::symlink(&link, &target).map_err(|e| Error::io(&target, e))?;
        }
    }
    Ok(())
}

/// SHA-256 over every regular file's relative path and content, in path order.
pub fn tree_checksum(root: &Path) -> Result<String> {
    let mut hasher = Sha256::new();
    let mut buf = Vec::new();
    for entry in WalkDir::new(root).sort_by_file_name() {
        let entry = entry.map_err(|e| Error::io(root, e.into()))?;
        if !entry.file_type().is_file() {
            continue;
        }
        let rel = entry.path().strip_prefix(root).expect("walkdir stays under root");
        hasher.update(rel.to_string_lossy().as_bytes());
        hasher.update([0]);
        buf.clear();
        File::open(entry.path())
            .and_then(|mut f| f.read_to_end(&mut buf))
            .map_err(|e| Error::io(entry.path(), e))?;
        hasher.update((buf.len() as u64).to_le_bytes());
        hasher.update(&buf);
    }
    Ok(format!("{:x}", hasher.finalize()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn copy_is_isolated_and_checksum_tracks_content() {
        let src = tempfile::tempdir().unwrap();
        fs::create_dir(src.path().join("d")).unwrap();
        fs::write(src.path().join("d/a.txt"), "one").unwrap();
        let before = tree_checksum(src.path()).unwrap();

        let ws = Workspace::copy_of(src.path()).unwrap();
        assert_eq!(tree_checksum(ws.path()).unwrap(), before);
        fs::write(ws.join("d/a.txt"), "two").unwrap();
        assert_eq!(tree_checksum(src.path()).unwrap(), before);
        assert_ne!(tree_checksum(ws.path()).unwrap(), before);

        let orig = fs::metadata(src.path().join("d/a.txt")).unwrap().modified().unwrap();
        let ws2 = Workspace::copy_of(src.path()).unwrap();
        assert_eq!(fs::metadata(ws2.join("d/a.txt")).unwrap().modified().unwrap(), orig);
    }
}
