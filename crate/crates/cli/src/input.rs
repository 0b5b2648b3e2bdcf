//! Reading structure documents from disk.

use std::fs;
use std::path::Path;

use anyhow::{Context, Result};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::Value;

use lattice_ramsey::json::{LatticeJson, PosetJson, TablesJson};
use lattice_ramsey::lattice::from_tables;
use lattice_ramsey::{AnyPoset, DistLattice, Error, Flags, LinearOrderedPoset, OrderedLattice};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DocKind {
    Poset,
    Lattice,
    Tables,
}

impl std::fmt::Display for DocKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            DocKind::Poset => "poset",
            DocKind::Lattice => "lattice",
            DocKind::Tables => "tables",
        })
    }
}

/// A validated structure document.
#[derive(Clone, Debug)]
pub enum Structure {
    Poset(AnyPoset),
    Lattice {
        lattice: DistLattice,
        ordered: Option<OrderedLattice>,
    },
    /// Raw tables, canonicalized; `relabel[i]` is the canonical index of raw element `i`.
    Tables {
        lattice: DistLattice,
        relabel: Vec<usize>,
    },
}

impl Structure {
    pub fn kind(&self) -> DocKind {
        match self {
            Structure::Poset(_) => DocKind::Poset,
            Structure::Lattice { .. } => DocKind::Lattice,
            Structure::Tables { .. } => DocKind::Tables,
        }
    }
}

/// File name only, so messages do not depend on where the inputs live.
fn name(path: &Path) -> String {
    path.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| path.display().to_string())
}

pub fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", name(path)))
}

pub fn load_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = read_text(path)?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", name(path)))
}

pub fn detect(value: &Value) -> lattice_ramsey::Result<DocKind> {
    let obj = value.as_object().ok_or_else(|| Error::Invalid("document must be a JSON object".into()))?;
    if obj.contains_key("base") {
        Ok(DocKind::Lattice)
    } else if obj.contains_key("join") || obj.contains_key("meet") {
        Ok(DocKind::Tables)
    } else if obj.contains_key("n") {
        Ok(DocKind::Poset)
    } else {
        Err(Error::Invalid("cannot tell the document kind: expected a \"base\", \"join\" or \"n\" field".into()))
    }
}

pub fn load(path: &Path, expect: Option<DocKind>, flags: Flags) -> Result<Structure> {
    let text = read_text(path)?;
    let value: Value = serde_json::from_str(&text).with_context(|| format!("parsing {}", name(path)))?;
    let kind = detect(&value)?;
    if let Some(want) = expect {
        if want != kind {
            return Err(Error::Invalid(format!("expected a {want} document, found a {kind} document")).into());
        }
    }
    let ctx = || format!("parsing {}", name(path));
    Ok(match kind {
        DocKind::Poset => {
            let doc: PosetJson = serde_json::from_str(&text).with_context(ctx)?;
            Structure::Poset(doc.to_any(flags)?)
        }
        DocKind::Lattice => {
            let doc: LatticeJson = serde_json::from_str(&text).with_context(ctx)?;
            let lattice = doc.to_lattice(flags)?;
            let ordered = match doc.natural_order {
                Some(_) => Some(doc.to_ordered(flags)?),
                None => None,
            };
            Structure::Lattice { lattice, ordered }
        }
        DocKind::Tables => {
            let doc: TablesJson = serde_json::from_str(&text).with_context(ctx)?;
            let (lattice, relabel) = from_tables(doc.into(), flags)?;
            Structure::Tables { lattice, relabel }
        }
    })
}

pub fn load_poset(path: &Path, flags: Flags) -> Result<AnyPoset> {
    match load(path, Some(DocKind::Poset), flags)? {
        Structure::Poset(p) => Ok(p),
        _ => unreachable!(),
    }
}

pub fn load_linear(path: &Path, flags: Flags) -> Result<LinearOrderedPoset> {
    match load_poset(path, flags)? {
        AnyPoset::Ordered(p) => Ok(p),
        AnyPoset::Plain(_) => {
            Err(Error::Invalid(format!("{} has no \"order\"; a linearly ordered poset is required", name(path))).into())
        }
    }
}

/// A lattice document or raw tables, with its natural order if one is given.
pub fn load_lattice(path: &Path, flags: Flags) -> Result<(DistLattice, Option<OrderedLattice>)> {
    match load(path, None, flags)? {
        Structure::Lattice { lattice, ordered } => Ok((lattice, ordered)),
        Structure::Tables { lattice, .. } => Ok((lattice, None)),
        Structure::Poset(_) => Err(Error::Invalid(format!("{} is a poset; a lattice is required", name(path))).into()),
    }
}

pub fn load_ordered_lattice(path: &Path, flags: Flags) -> Result<OrderedLattice> {
    match load_lattice(path, flags)? {
        (_, Some(ol)) => Ok(ol),
        (_, None) => Err(Error::Invalid(format!("{} has no \"natural_order\"", name(path))).into()),
    }
}
