use crate::board::Board;

fn permutations(d: usize) -> Vec<Vec<usize>> {
    if d == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(d - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, d - 1);
            out.push(q);
        }
    }
    out
}

/// Signed axis permutations that map the board onto itself, each given as a
/// map on cell indices. Boards with more than six axes get the identity only.
pub fn automorphisms(board: &Board) -> Vec<Vec<u32>> {
    let d = board.dimension();
    let dims = board.dims();
    let identity: Vec<u32> = (0..board.index_space() as u32).collect();
    if d > 6 {
        return vec![identity];
    }
    let mut out = Vec::new();
    for perm in permutations(d) {
        if (0..d).any(|i| dims[perm[i]] != dims[i]) {
            continue;
        }
        'signs: for signs in 0u32..(1 << d) {
            let mut map = identity.clone();
            for v in board.cells() {
                let c = board.coords_of(v);
                let moved: Vec<usize> = (0..d)
                    .map(|i| {
                        let x = c[perm[i]];
                        if signs >> i & 1 == 1 {
                            dims[i] + 1 - x
                        } else {
                            x
                        }
                    })
                    .collect();
                match board.index_of(&moved) {
                    Ok(u) => map[v] = u as u32,
                    Err(_) => continue 'signs,
                }
            }
            if !out.contains(&map) {
                out.push(map);
            }
        }
    }
    out
}

/// Cells that are the smallest index in their orbit.
pub(crate) fn orbit_minima(board: &Board) -> Vec<bool> {
    let group = automorphisms(board);
    (0..board.index_space())
        .map(|v| group.iter().all(|g| g[v] as usize >= v))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_orders() {
        assert_eq!(automorphisms(&Board::open_grid(&[3, 3]).unwrap()).len(), 8);
        assert_eq!(automorphisms(&Board::open_grid(&[2, 3]).unwrap()).len(), 4);
        assert_eq!(automorphisms(&Board::open_grid(&[2, 2, 2, 2]).unwrap()).len(), 384);
        assert_eq!(automorphisms(&Board::open_grid(&[2, 3, 3]).unwrap()).len(), 16);
        let l = Board::masked(2, 2, &[[1, 1], [1, 2], [2, 1]]).unwrap();
        assert_eq!(automorphisms(&l).len(), 2);
    }

    #[test]
    fn orbit_minima_of_square() {
        let b = Board::open_grid(&[3, 3]).unwrap();
        let mins: Vec<usize> = orbit_minima(&b)
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(v, _)| v)
            .collect();
        assert_eq!(mins, vec![0, 1, 4]);
    }
}
