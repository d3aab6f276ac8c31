use percolate::search::{exists_percolating_of_size, min_percolating, Budget};
use percolate::verify::separates_faces;
use percolate::{closure, percolates, step, Board, CellSet, Rule};
use proptest::prelude::*;

fn board_strategy() -> impl Strategy<Value = Board> {
    (prop::collection::vec(1usize..6, 1..4), any::<bool>()).prop_map(|(dims, torus)| {
        if torus {
            Board::torus(&dims).unwrap()
        } else {
            Board::open_grid(&dims).unwrap()
        }
    })
}

fn subset(board: &Board, bits: &[bool]) -> CellSet {
    let mut s = board.empty_set();
    for (v, &b) in board.cells().zip(bits.iter().cycle()) {
        if b {
            s.insert(v);
        }
    }
    s
}

fn rule_strategy() -> impl Strategy<Value = Rule> {
    prop_oneof![(1u32..4).prop_map(Rule::Threshold), Just(Rule::Modified)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn closure_is_a_closure_operator(
        board in board_strategy(),
        rule in rule_strategy(),
        a in prop::collection::vec(prop::bool::weighted(0.3), 1..64),
        extra in prop::collection::vec(prop::bool::weighted(0.2), 1..64),
    ) {
        let small = subset(&board, &a);
        let mut large = small.clone();
        large.union_with(&subset(&board, &extra));
        let cs = closure(&board, rule, &small).unwrap();
        let cl = closure(&board, rule, &large).unwrap();
        prop_assert!(small.is_subset(&cs));
        prop_assert!(cs.is_subset(&cl));
        prop_assert_eq!(closure(&board, rule, &cs).unwrap(), cs);
    }

    #[test]
    fn repeated_steps_reach_the_closure(
        board in board_strategy(),
        rule in rule_strategy(),
        a in prop::collection::vec(prop::bool::weighted(0.3), 1..64),
    ) {
        let mut cur = subset(&board, &a);
        loop {
            let next = step(&board, rule, &cur).unwrap();
            if next == cur {
                break;
            }
            cur = next;
        }
        prop_assert_eq!(cur, closure(&board, rule, &subset(&board, &a)).unwrap());
    }

    #[test]
    fn modified_step_follows_the_definition(
        dims in prop::collection::vec(1usize..6, 1..4),
        a in prop::collection::vec(prop::bool::weighted(0.35), 1..64),
    ) {
        let board = Board::open_grid(&dims).unwrap();
        let set = subset(&board, &a);
        let next = step(&board, Rule::Modified, &set).unwrap();
        for v in board.cells() {
            let x = board.coords_of(v);
            let every_axis = (0..dims.len()).all(|i| {
                [x[i].wrapping_sub(1), x[i] + 1].iter().any(|&y| {
                    (1..=dims[i]).contains(&y) && {
                        let mut z = x.clone();
                        z[i] = y;
                        set.contains(board.index_of(&z).unwrap())
                    }
                })
            });
            prop_assert_eq!(next.contains(v), set.contains(v) || every_axis, "{:?}", x);
        }
    }

    #[test]
    fn torus_closure_commutes_with_translation(
        dims in prop::collection::vec(1usize..6, 1..4),
        r in 1u32..4,
        axis in 0usize..3,
        shift in 1usize..5,
        a in prop::collection::vec(prop::bool::weighted(0.3), 1..64),
    ) {
        let board = Board::torus(&dims).unwrap();
        let axis = axis % dims.len();
        let translate = |s: &CellSet| {
            let mut out = board.empty_set();
            for v in s.iter() {
                let mut x = board.coords_of(v);
                x[axis] = (x[axis] - 1 + shift) % dims[axis] + 1;
                out.insert(board.index_of(&x).unwrap());
            }
            out
        };
        let seeds = subset(&board, &a);
        let rule = Rule::Threshold(r);
        prop_assert_eq!(
            translate(&closure(&board, rule, &seeds).unwrap()),
            closure(&board, rule, &translate(&seeds)).unwrap()
        );
    }

    #[test]
    fn face_separating_sets_percolate(
        dims in prop::collection::vec(1usize..5, 2..4),
        a in prop::collection::vec(prop::bool::weighted(0.6), 1..64),
    ) {
        let board = Board::open_grid(&dims).unwrap();
        let set = subset(&board, &a);
        if separates_faces(&board, &set).unwrap() {
            prop_assert!(percolates(&board, Rule::Threshold(dims.len() as u32), &set).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn minimum_is_tight(dims in prop::collection::vec(1usize..5, 1..4), r in 1u32..4) {
        let board = Board::open_grid(&dims).unwrap();
        prop_assume!(board.cell_count() <= 27);
        let rule = Rule::Threshold(r);
        let out = min_percolating(&board, rule, Budget::unlimited()).unwrap();
        let m = out.value;
        prop_assert!(out.exact);
        prop_assert_eq!(m.witness.len(), m.upper);
        prop_assert!(percolates(&board, rule, &m.witness).unwrap());
        if m.upper > 0 {
            let below = exists_percolating_of_size(&board, rule, m.upper - 1, Budget::unlimited()).unwrap();
            prop_assert!(below.exact && below.value.is_none());
        }
    }
}
