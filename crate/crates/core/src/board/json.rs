//! The JSON cell-set document shared by the library and the command line.

use super::{Board, BoardKind, CellSet};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellSetDoc {
    pub kind: BoardKind,
    pub dims: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mask: Option<Vec<Vec<usize>>>,
    pub cells: Vec<Vec<usize>>,
}

impl CellSetDoc {
    pub fn new(board: &Board, set: &CellSet) -> Result<CellSetDoc> {
        board.check_set(set)?;
        let mask = (board.kind() == BoardKind::Masked2d).then(|| board.cells().map(|v| board.coords_of(v)).collect());
        Ok(CellSetDoc {
            kind: board.kind(),
            dims: board.dims().to_vec(),
            mask,
            cells: board.coords_in(set),
        })
    }

    pub fn into_parts(self) -> Result<(Board, CellSet)> {
        let board = match self.kind {
            BoardKind::OpenGrid => Board::open_grid(&self.dims)?,
            BoardKind::Torus => Board::torus(&self.dims)?,
            BoardKind::Masked2d => {
                if self.dims.len() != 2 {
                    return Err(Error::Format("a masked board has exactly two dims".into()));
                }
                let mask = self
                    .mask
                    .ok_or_else(|| Error::Format("a masked board needs a mask".into()))?;
                let retained = mask
                    .iter()
                    .map(|c| match c.as_slice() {
                        &[i, j] => Ok([i, j]),
                        _ => Err(Error::Format(format!("mask entry {c:?} is not a pair"))),
                    })
                    .collect::<Result<Vec<_>>>()?;
                Board::masked(self.dims[0], self.dims[1], &retained)?
            }
        };
        let set = board.set_from_coords(&self.cells)?;
        Ok((board, set))
    }
}

/// Serializes a set with its board; cells come out in lexicographic order.
pub fn to_json(board: &Board, set: &CellSet) -> Result<String> {
    Ok(serde_json::to_string(&CellSetDoc::new(board, set)?)?)
}

pub fn from_json(text: &str) -> Result<(Board, CellSet)> {
    serde_json::from_str::<CellSetDoc>(text)?.into_parts()
}
