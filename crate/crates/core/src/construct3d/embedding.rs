use crate::board::{Board, BoardKind, CellSet};
use crate::error::{Error, Result};

/// A map from a planar grid graph into a 3D grid that sends edges to edges
/// and is injective on every neighbourhood. It need not be injective overall.
#[derive(Debug, Clone)]
pub struct LocalEmbedding {
    source: Board,
    target: Board,
    map: Vec<u32>,
}

const UNMAPPED: u32 = u32::MAX;

impl LocalEmbedding {
    /// Builds the embedding of `source` into `target` given by `f` on source
    /// coordinates, checking both defining properties.
    pub fn new(source: Board, target: Board, f: impl Fn(usize, usize) -> [usize; 3]) -> Result<Self> {
        if source.kind() == BoardKind::Torus || source.dimension() != 2 {
            return Err(Error::InvalidBoard("embedding source must be planar".into()));
        }
        if target.kind() != BoardKind::OpenGrid || target.dimension() != 3 {
            return Err(Error::InvalidBoard("embedding target must be a 3D open grid".into()));
        }
        let mut map = vec![UNMAPPED; source.index_space()];
        for v in source.cells() {
            let c = source.coords_of(v);
            map[v] = target.index_of(&f(c[0], c[1]))? as u32;
        }
        let e = LocalEmbedding { source, target, map };
        e.validate()?;
        Ok(e)
    }

    fn validate(&self) -> Result<()> {
        for v in self.source.cells() {
            let fv = self.map[v] as usize;
            let mut images: Vec<u32> = Vec::new();
            for &u in self.source.neighbors_of(v) {
                let fu = self.map[u as usize];
                if !self.target.neighbors_of(fv).contains(&fu) {
                    return Err(Error::VerificationFailed(format!(
                        "edge {:?}-{:?} is not mapped to an edge",
                        self.source.coords_of(v),
                        self.source.coords_of(u as usize)
                    )));
                }
                if images.contains(&fu) {
                    return Err(Error::VerificationFailed(format!(
                        "map is not injective on the neighbourhood of {:?}",
                        self.source.coords_of(v)
                    )));
                }
                images.push(fu);
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &Board {
        &self.source
    }

    pub fn target(&self) -> &Board {
        &self.target
    }

    /// Image of a single source cell, by index.
    pub fn image_of(&self, v: usize) -> Option<usize> {
        match self.map.get(v) {
            Some(&t) if t != UNMAPPED => Some(t as usize),
            _ => None,
        }
    }

    /// Image of a source set. It can be smaller than the set itself.
    pub fn apply(&self, set: &CellSet) -> Result<CellSet> {
        self.source.check_set(set)?;
        let mut out = self.target.empty_set();
        out.extend(set.iter().map(|v| self.map[v] as usize));
        Ok(out)
    }
}

pub fn apply_embedding(e: &LocalEmbedding, set: &CellSet) -> Result<CellSet> {
    e.apply(set)
}
