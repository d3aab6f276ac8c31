//! Plain-text pictures of cell sets.

use percolate::{Board, BoardKind, CellSet};

/// Draws `set` on `board`: `#` for cells in the set, `.` for the others and a
/// space for cells cut out of a masked board. Three dimensional boards are
/// drawn as their levels along the last axis, left to right, separated by a
/// blank column.
pub fn render(board: &Board, set: &CellSet) -> Result<String, String> {
    let dims = board.dims();
    let (rows, cols, levels) = match *dims {
        [n] => (1, n, 1),
        [a, b] => (a, b, 1),
        [a, b, c] => (a, b, c),
        _ => return Err(format!("cannot draw a board with {} axes", dims.len())),
    };
    let glyph = |coords: &[usize]| {
        let v = coords.iter().zip(dims).fold(0, |acc, (&x, &n)| acc * n + x - 1);
        if board.kind() == BoardKind::Masked2d && !board.contains_index(v) {
            ' '
        } else if set.contains(v) {
            '#'
        } else {
            '.'
        }
    };
    let mut out = String::new();
    for i in 1..=rows {
        let mut line = String::new();
        for k in 1..=levels {
            if k > 1 {
                line.push(' ');
            }
            for j in 1..=cols {
                line.push(match dims.len() {
                    1 => glyph(&[j]),
                    2 => glyph(&[i, j]),
                    _ => glyph(&[i, j, k]),
                });
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn purina_two_layout() {
        let pc = percolate::construct2d::purina(2).unwrap();
        assert_eq!(render(&pc.board, &pc.seeds).unwrap(), "#.#\n.#.\n#.#\n");
    }

    #[test]
    fn levels_sit_side_by_side() {
        let board = Board::open_grid(&[2, 2, 3]).unwrap();
        let set = board.set_from_coords([[1, 1, 1], [2, 2, 3]]).unwrap();
        assert_eq!(render(&board, &set).unwrap(), "#. .. ..\n.. .. .#\n");
    }

    #[test]
    fn masked_cells_are_blank() {
        let board = Board::masked(2, 2, &[[1, 1], [2, 1], [2, 2]]).unwrap();
        let set = board.set_from_coords([[2, 2]]).unwrap();
        assert_eq!(render(&board, &set).unwrap(), ".\n.#\n");
    }
}
