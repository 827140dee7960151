use super::*;
use crate::sequence::{f_comb, lucas};
use crate::tiling::plain_board;

fn big(n: i64) -> Int {
    Int::from(n)
}

fn params(g0: i64, g1: i64) -> GibonacciParams {
    GibonacciParams::new(g0, g1)
}

fn all_vertical(n: i64) -> TiledBoard {
    let board = plain_board(n).unwrap();
    let tiling = Tiling::new(&board, (1..=n as i32).map(|c| Placement::vertical(1, c))).unwrap();
    TiledBoard::new(board, tiling)
}

fn all_horizontal(n: i64) -> TiledBoard {
    assert_eq!(n % 2, 0);
    let board = plain_board(n).unwrap();
    let doms = (0..n as i32 / 2)
        .flat_map(|i| [Placement::horizontal(1, 2 * i + 1), Placement::horizontal(2, 2 * i + 1)]);
    let tiling = Tiling::new(&board, doms).unwrap();
    TiledBoard::new(board, tiling)
}

#[test]
fn breakable_columns_examples() {
    let verticals = all_vertical(4);
    assert_eq!(
        breakable_columns(&verticals.tiling).unwrap().breakable,
        BTreeSet::from([1, 2, 3])
    );

    // two stacked horizontals on columns 1-2, then verticals
    let board = plain_board(4).unwrap();
    let tiling = Tiling::new(
        &board,
        [
            Placement::horizontal(1, 1),
            Placement::horizontal(2, 1),
            Placement::vertical(1, 3),
            Placement::vertical(1, 4),
        ],
    )
    .unwrap();
    assert_eq!(breakable_columns(&tiling).unwrap().breakable, BTreeSet::from([2, 3]));

    let horizontals = all_horizontal(2);
    assert!(breakable_columns(&horizontals.tiling).unwrap().breakable.is_empty());
}

#[test]
fn breakable_columns_rejects_non_strips() {
    let board = crate::tiling::h_board(3).unwrap();
    let tiling = enumerate_tilings(&board).unwrap().remove(0);
    assert!(matches!(breakable_columns(&tiling), Err(BijectionError::NotTwoRows)));
}

#[test]
fn fault_examples() {
    let pair = OffsetPair { top: all_vertical(5), bottom: all_vertical(5), offset: 0 };
    let cols: Vec<i32> = faults(&pair).unwrap().into_iter().map(|f| f.column).collect();
    assert_eq!(cols, vec![1, 2, 3, 4]);

    let pair = OffsetPair { top: all_horizontal(4), bottom: all_vertical(4), offset: 0 };
    let cols: Vec<i32> = faults(&pair).unwrap().into_iter().map(|f| f.column).collect();
    assert_eq!(cols, vec![2]);

    // a length-2 all-horizontal top admits no fault at any offset-1 bottom
    for bottom_len in 1..=5 {
        for bottom in tiled_boards(&plain_board(bottom_len).unwrap()).unwrap() {
            let pair = OffsetPair { top: all_horizontal(2), bottom, offset: 1 };
            assert!(faults(&pair).unwrap().is_empty());
        }
    }
}

#[test]
fn tail_swap_changes_lengths_as_constructed() {
    let pair = OffsetPair { top: all_vertical(5), bottom: all_vertical(5), offset: 1 };
    let swapped = tail_swap(&pair).unwrap();
    assert_eq!(swapped.top.column_count(), 6);
    assert_eq!(swapped.bottom.column_count(), 4);
    assert_eq!(swapped.offset, 1);
}

#[test]
fn tail_swap_errors_on_fault_free_pairs() {
    let pair = OffsetPair { top: all_horizontal(2), bottom: all_vertical(3), offset: 1 };
    assert!(matches!(tail_swap(&pair), Err(BijectionError::FaultFree)));
}

#[test]
fn tail_swap_is_an_involution_on_plain_pairs() {
    for a in 1..=6i64 {
        for b in 1..=6i64 {
            let tops = tiled_boards(&plain_board(a).unwrap()).unwrap();
            let bottoms = tiled_boards(&plain_board(b).unwrap()).unwrap();
            for offset in 0..=2i32 {
                for top in &tops {
                    for bottom in &bottoms {
                        let pair = OffsetPair {
                            top: top.clone(),
                            bottom: bottom.clone(),
                            offset,
                        };
                        let Ok(swapped) = tail_swap(&pair) else { continue };
                        assert_eq!(swapped.total_columns(), pair.total_columns());
                        assert_eq!(swapped.weight_product(), pair.weight_product());
                        let back = tail_swap(&swapped).unwrap();
                        assert_eq!(back, pair, "swap twice must be the identity");
                    }
                }
            }
        }
    }
}

#[test]
fn tail_swap_preserves_weight_product_on_marked_pairs() {
    let p = params(2, 1);
    let board = gib_strip(5, &p).unwrap();
    let tilings = tiled_boards(&board).unwrap();
    for offset in 0..=1i32 {
        for top in &tilings {
            for bottom in &tilings {
                let pair = OffsetPair { top: top.clone(), bottom: bottom.clone(), offset };
                let Ok(swapped) = tail_swap(&pair) else { continue };
                assert_eq!(swapped.weight_product(), pair.weight_product());
                assert!(tail_swap(&swapped).unwrap().same_configuration(&pair));
            }
        }
    }
}

#[test]
fn cassini_lucas_examples() {
    let report = verify_cassini(3, &params(2, 1)).unwrap();
    assert!(report.holds(), "{report:?}");
    assert_eq!(report.set1_total, big(16));
    assert_eq!(report.set2_total, big(21));
    assert_eq!(report.correction, big(-5));

    let report = verify_cassini(4, &params(2, 1)).unwrap();
    assert!(report.holds());
    assert_eq!(report.set1_total, big(49));
    assert_eq!(report.set2_total, big(44));
    assert_eq!(report.correction, big(5));
}

#[test]
fn cassini_fibonacci_instance() {
    let report = verify_cassini(3, &params(0, 1)).unwrap();
    assert!(report.holds());
    assert_eq!(report.set1_total, big(4));
    assert_eq!(report.set2_total, big(3));
    assert_eq!(report.correction, big(1));
}

#[test]
fn cassini_small_sweep() {
    for g0 in 0..=2i64 {
        for g1 in 0..=2i64 {
            for n in 2..=5 {
                let report = verify_cassini(n, &params(g0, g1)).unwrap();
                assert!(report.holds(), "n={n} g=({g0},{g1}): {report:?}");
            }
        }
    }
}

#[test]
fn cassini_rejects_bad_input() {
    assert!(verify_cassini(1, &params(1, 1)).is_err());
    assert!(verify_cassini(3, &params(-1, 1)).is_err());
}

#[test]
fn supertile_census_lucas_example() {
    let census = supertile_census(2, 3, &params(2, 1)).unwrap();
    assert!(census.holds(), "{census:?}");
    assert_eq!(census.expected_total, big(18));
    let by_key: BTreeMap<Option<i64>, Int> = census
        .groups
        .iter()
        .map(|g| (g.first_open_junction, g.weight.clone()))
        .collect();
    assert_eq!(by_key[&Some(1)], big(3));
    assert_eq!(by_key[&Some(2)], big(3));
    assert_eq!(by_key[&None], big(12));
}

#[test]
fn supertile_census_fibonacci_example() {
    let census = supertile_census(3, 2, &params(0, 1)).unwrap();
    assert!(census.holds());
    assert_eq!(census.total, big(8));
}

#[test]
fn supertile_congruence_from_census() {
    // every group except junction-1 carries a factor G_m
    let p = params(2, 1);
    let census = supertile_census(2, 3, &p).unwrap();
    let g2 = lucas(2).unwrap();
    let j1 = census
        .groups
        .iter()
        .find(|g| g.first_open_junction == Some(1))
        .unwrap();
    assert_eq!(
        census.total.clone() % g2.clone(),
        j1.weight.clone() % g2.clone()
    );
    assert_eq!(census.total.clone() % g2, big(0));
}

#[test]
fn supertile_decompose_roundtrip() {
    let p = params(2, 1);
    for (m, r) in [(2i64, 3i64), (3, 2), (2, 2)] {
        let board = gib_strip(m * r, &p).unwrap();
        for tiling in enumerate_tilings(&board).unwrap() {
            let decomp = supertile_decompose(&tiling, m).unwrap();
            assert_eq!(decomp.segments.len(), r as usize);
            assert_eq!(decomp.open_junctions.len(), (r - 1) as usize);
            assert_eq!(&decomp.reassemble(), tiling.dominoes());
            // junction flags agree with breakability
            let profile = breakable_columns(&tiling).unwrap().breakable;
            for (j, open) in decomp.open_junctions.iter().enumerate() {
                let col = (j as i64 + 1) * m;
                assert_eq!(*open, !profile.contains(&(col as i32)));
            }
        }
    }
}

#[test]
fn supertile_decompose_rejects_non_multiples() {
    let board = plain_board(5).unwrap();
    let tiling = enumerate_tilings(&board).unwrap().remove(0);
    assert!(supertile_decompose(&tiling, 2).is_err());
    assert!(supertile_decompose(&tiling, 5).is_ok());
}

#[test]
fn unbreakable_census_examples() {
    let census = unbreakable_census(1, &params(2, 1)).unwrap();
    assert!(census.holds(), "{census:?}");
    assert_eq!(census.unbreakable, big(1));
    assert_eq!(census.sum_lhs, big(28));
    assert_eq!(census.sum_rhs, big(28));

    let census = unbreakable_census(0, &params(1, 1)).unwrap();
    assert!(census.holds());
    assert_eq!(census.sum_lhs, Int::from(2) * f_comb(2).unwrap());
    assert_eq!(census.sum_rhs, f_comb(4).unwrap() - f_comb(1).unwrap());
}

#[test]
fn unbreakable_census_sweep() {
    for g0 in 0..=2i64 {
        for g1 in 0..=2i64 {
            for n in 0..=2 {
                let census = unbreakable_census(n, &params(g0, g1)).unwrap();
                assert!(census.holds(), "n={n} g=({g0},{g1}): {census:?}");
            }
        }
    }
}
