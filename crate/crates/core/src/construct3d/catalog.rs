//! Small sporadic percolating sets, stored as versioned JSON.

use super::{Block, Construction};
use crate::error::{Error, Result};
use serde::Deserialize;

#[derive(Deserialize)]
struct Entry {
    version: u32,
    name: String,
    dims: [usize; 3],
    cells: Vec<[usize; 3]>,
}

const ENTRIES: [(&str, &str); 9] = [
    ("2-2-5", include_str!("../../data/catalog/2-2-5.json")),
    ("2-5-5", include_str!("../../data/catalog/2-5-5.json")),
    ("5-5-8", include_str!("../../data/catalog/5-5-8.json")),
    ("5-6-9", include_str!("../../data/catalog/5-6-9.json")),
    ("3-4-4", include_str!("../../data/catalog/3-4-4.json")),
    ("5-5-6", include_str!("../../data/catalog/5-5-6.json")),
    ("5-5-7", include_str!("../../data/catalog/5-5-7.json")),
    ("5-6-7", include_str!("../../data/catalog/5-6-7.json")),
    ("5-7-7", include_str!("../../data/catalog/5-7-7.json")),
];

pub fn catalog_names() -> impl Iterator<Item = &'static str> {
    ENTRIES.iter().map(|(n, _)| *n)
}

/// Name of the catalog entry for a box, if any; sorted dims such as
/// `[5, 6, 9]` map to `"5-6-9"`.
pub(crate) fn entry_for(sorted: [usize; 3]) -> Option<&'static str> {
    let key = format!("{}-{}-{}", sorted[0], sorted[1], sorted[2]);
    catalog_names().find(|n| *n == key)
}

pub(crate) fn catalog_block(name: &str) -> Result<Block> {
    let (_, text) = ENTRIES
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::InvalidParameters(format!("unknown catalog entry {name:?}")))?;
    let entry: Entry = serde_json::from_str(text)?;
    if entry.version != 1 || entry.name != name {
        return Err(Error::Format(format!("catalog entry {name:?} is malformed")));
    }
    Ok(Block {
        dims: entry.dims,
        cells: entry.cells,
    })
}

/// A stored set for the named box. The box is given in the stored axis order.
pub fn appendix_catalog(name: &str) -> Result<Construction> {
    catalog_block(name)?.into_construction()
}
