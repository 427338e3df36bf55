use std::fs;
use std::io::{Read, Write};
use std::path::Path;

use drg_core::graphcheck::{parse_edge_list, Graph, GraphError};
use serde::de::DeserializeOwned;

use crate::DrgError;

/// Reads an edge list from `path`, or from stdin for `-`, and rejects
/// disconnected graphs.
pub fn read_graph(path: &Path) -> Result<Graph, DrgError> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(DrgError::io(path))?;
        s
    } else {
        fs::read_to_string(path).map_err(DrgError::io(path))?
    };
    let g = parse_edge_list(&text)?;
    if !g.is_connected() {
        return Err(GraphError::Disconnected.into());
    }
    Ok(g)
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, DrgError> {
    let bytes = fs::read(path).map_err(DrgError::io(path))?;
    serde_json::from_slice(&bytes).map_err(|source| DrgError::Json {
        path: path.into(),
        source,
    })
}

/// Writes to a sibling temporary file, syncs it, then renames over `path`.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), DrgError> {
    let name = path
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| "out".into());
    let tmp = path.with_file_name(format!(".{name}.tmp"));
    let mut f = fs::File::create(&tmp).map_err(DrgError::io(&tmp))?;
    f.write_all(bytes).map_err(DrgError::io(&tmp))?;
    f.sync_all().map_err(DrgError::io(&tmp))?;
    drop(f);
    fs::rename(&tmp, path).map_err(DrgError::io(path))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn atomic_write_replaces() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("cp.json");
        write_atomic(&p, b"one").unwrap();
        write_atomic(&p, b"two").unwrap();
        assert_eq!(fs::read(&p).unwrap(), b"two");
        assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 1);
    }

    #[test]
    fn disconnected_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("g.edges");
        fs::write(&p, "0 1\n2 3\n").unwrap();
        assert!(matches!(read_graph(&p), Err(DrgError::Graph(GraphError::Disconnected))));
        assert!(matches!(read_graph(&dir.path().join("missing")), Err(DrgError::Io { .. })));
    }
}
