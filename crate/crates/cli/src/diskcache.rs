use std::fs;
use std::path::{Path, PathBuf};

use macdonald_core::combin::IntVector;
use macdonald_core::exactalg::XPolynomial;
use macdonald_core::families::{Families, FamilyTag, MemberRecord, XRational};

use crate::CliError;

/// Polynomial family members stored one JSON record per file.
pub struct DiskCache {
    dir: PathBuf,
}

impl DiskCache {
    pub fn new(dir: PathBuf) -> Self {
        DiskCache { dir }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn file(&self, tag: FamilyTag, v: &IntVector) -> PathBuf {
        let idx: Vec<String> = v.entries().iter().map(|x| x.to_string()).collect();
        self.dir.join(format!("{tag}_{}.json", idx.join("_")))
    }

    /// Reads every record into the family cache. Unreadable records are
    /// skipped and reported.
    pub fn load(&self, fam: &Families) -> Vec<String> {
        let mut warnings = Vec::new();
        let Ok(entries) = fs::read_dir(&self.dir) else {
            return warnings;
        };
        let mut paths: Vec<PathBuf> = entries
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "json"))
            .collect();
        paths.sort();
        for path in paths {
            if let Err(e) = load_one(&path, fam) {
                warnings.push(format!("skipping cache file {}: {e}", path.display()));
            }
        }
        warnings
    }

    /// Writes every polynomial member not yet on disk.
    pub fn store(&self, fam: &Families) -> Result<usize, CliError> {
        let io = |path: &Path| {
            let path = path.to_path_buf();
            move |source| CliError::Io { path, source }
        };
        fs::create_dir_all(&self.dir).map_err(io(&self.dir))?;
        let mut written = 0;
        for (tag, v, value) in fam.cache().entries() {
            let path = self.file(tag, &v);
            if !value.is_polynomial() || path.exists() {
                continue;
            }
            let text = serde_json::to_string(&MemberRecord::new(tag, &v, &value)).expect("serializable");
            let tmp = path.with_extension("json.tmp");
            fs::write(&tmp, text).map_err(io(&tmp))?;
            fs::rename(&tmp, &path).map_err(io(&path))?;
            written += 1;
        }
        Ok(written)
    }
}

fn load_one(path: &Path, fam: &Families) -> Result<(), String> {
    let text = fs::read_to_string(path).map_err(|e| e.to_string())?;
    let rec: MemberRecord = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    let tag: FamilyTag = rec.family.parse().map_err(|e: macdonald_core::families::UnknownFamily| e.to_string())?;
    let index = IntVector::new(rec.index.clone());
    if index.n() != rec.n {
        return Err(format!("index length {} differs from n = {}", index.n(), rec.n));
    }
    if rec.denominator().map_err(|e| e.to_string())? != XPolynomial::one(rec.n) {
        return Err("only polynomial members are cached".into());
    }
    let num = rec.numerator().map_err(|e| e.to_string())?;
    fam.cache().insert(tag, &index, XRational::from_poly(num));
    Ok(())
}
