//! Optional on-disk store of whole streams as JSON lines.

use std::fs;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use crate::objects::Object;

use super::{EnumError, FamilyBound};

fn version_hash() -> u64 {
    let key = concat!("stanley-lab enumerate ", env!("CARGO_PKG_VERSION"), " v1");
    key.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0100_0000_01b3)
    })
}

fn path(dir: &Path, bound: &FamilyBound) -> PathBuf {
    dir.join(format!(
        "{}-{}-{}-{:016x}.jsonl",
        bound.family,
        bound.measure,
        bound.value,
        version_hash()
    ))
}

fn io_error(e: std::io::Error) -> EnumError {
    EnumError::Cache(e.to_string())
}

/// The cached stream, or `None` on a miss. An unreadable entry counts as a
/// miss and is rebuilt.
pub(super) fn load(dir: &Path, bound: &FamilyBound) -> Result<Option<Vec<Object>>, EnumError> {
    let file = match fs::File::open(path(dir, bound)) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(io_error(e)),
    };
    let mut out = Vec::new();
    for line in BufReader::new(file).lines() {
        let line = line.map_err(io_error)?;
        match bound.family.parse_json(&line) {
            Ok(obj) => out.push(obj),
            Err(_) => return Ok(None),
        }
    }
    Ok(Some(out))
}

pub(super) fn store(dir: &Path, bound: &FamilyBound, objects: &[Object]) -> Result<(), EnumError> {
    fs::create_dir_all(dir).map_err(io_error)?;
    let target = path(dir, bound);
    let tmp = target.with_extension(format!("tmp{}", std::process::id()));
    {
        let mut w = BufWriter::new(fs::File::create(&tmp).map_err(io_error)?);
        for obj in objects {
            writeln!(w, "{}", obj.to_json()).map_err(io_error)?;
        }
        w.flush().map_err(io_error)?;
    }
    fs::rename(&tmp, &target).map_err(io_error)
}

#[cfg(test)]
mod tests {
    use super::super::Enumerator;
    use super::*;

    #[test]
    fn cached_stream_round_trips() {
        let dir = tempfile::tempdir().unwrap();
        let bound = FamilyBound::stanley_semiperimeter(8);
        let cached = Enumerator::default().with_cache_dir(Some(dir.path().to_path_buf()));
        let first = cached.collect(bound).unwrap();
        assert!(path(dir.path(), &bound).exists());
        let second = cached.collect(bound).unwrap();
        assert_eq!(first, second);
        assert_eq!(first, Enumerator::default().collect(bound).unwrap());
    }
}
