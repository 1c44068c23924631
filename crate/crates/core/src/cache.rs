//! On-disk store of computed ideal components.
//!
//! Layout: `<root>/<n>/<k>/<lambda>/<g>.rows`. The first line records the
//! window and generator data the rows were computed with; the remaining
//! lines are the reduced rows in canonical text form. An entry whose header
//! does not match the request is recomputed and overwritten.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::root_data::LieData;
use crate::text::{format_elem, parse_elem};
use crate::upbw::{AffineWeight, AlgElem, GradedIndex};

pub const CACHE_ENV: &str = "PSV_CACHE";

#[derive(Clone, Debug)]
pub struct Cache {
    root: PathBuf,
}

impl Cache {
    pub fn new(root: impl Into<PathBuf>) -> Self {
        Cache { root: root.into() }
    }

    /// The cache named by `PSV_CACHE`, if set and nonempty.
    pub fn from_env() -> Option<Self> {
        std::env::var_os(CACHE_ENV)
            .filter(|v| !v.is_empty())
            .map(Cache::new)
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    pub fn entry_path(&self, lambda: &AffineWeight, g: &GradedIndex) -> PathBuf {
        self.root
            .join(lambda.rank().to_string())
            .join(lambda.level().to_string())
            .join(lambda.label())
            .join(format!("{}.rows", g.label()))
    }

    pub fn load(
        &self,
        lie: &LieData,
        lambda: &AffineWeight,
        g: &GradedIndex,
        header: &str,
    ) -> Result<Option<Vec<AlgElem>>> {
        let path = self.entry_path(lambda, g);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let mut lines = text.lines();
        if lines.next() != Some(&format!("# {header}")) {
            return Ok(None);
        }
        let mut rows = Vec::new();
        for line in lines.filter(|l| !l.is_empty()) {
            let row = parse_elem(lie, line).map_err(|e| {
                Error::Internal(format!("corrupt cache entry {}: {e}", path.display()))
            })?;
            rows.push(row);
        }
        Ok(Some(rows))
    }

    pub fn store(
        &self,
        lie: &LieData,
        lambda: &AffineWeight,
        g: &GradedIndex,
        header: &str,
        rows: &[AlgElem],
    ) -> Result<()> {
        let path = self.entry_path(lambda, g);
        let dir = path.parent().expect("entry path has a parent");
        fs::create_dir_all(dir)?;
        let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
        writeln!(tmp, "# {header}")?;
        for r in rows {
            writeln!(tmp, "{}", format_elem(&lie.roots, r))?;
        }
        tmp.persist(&path).map_err(|e| Error::Io(e.error))?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_elem;

    #[test]
    fn store_and_load() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path());
        let lie = LieData::new(2).unwrap();
        let l = AffineWeight::new(vec![1, 0, 0]).unwrap();
        let g = GradedIndex::new(3, vec![2, 0]);
        let rows = vec![parse_elem(&lie, "x[1,0](-2) x[1,0](-1)").unwrap()];
        assert!(cache.load(&lie, &l, &g, "h").unwrap().is_none());
        cache.store(&lie, &l, &g, "h", &rows).unwrap();
        assert_eq!(cache.load(&lie, &l, &g, "h").unwrap(), Some(rows));
        assert!(cache.load(&lie, &l, &g, "other").unwrap().is_none());
        assert!(cache.entry_path(&l, &g).ends_with("2/1/1-0-0/w3_c2-0.rows"));
    }
}
