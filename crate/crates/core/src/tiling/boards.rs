//! Constructors for the board families whose weighted tiling counts
//! realize sequence values.
//!
//! Coordinates: rows grow downward; the plain 2×n board occupies rows 1–2,
//! columns 1..=n. Marked cell positions are fixed by the forcing arguments
//! behind each closed form and are pinned by the oracle-agreement tests.

use super::{Board, Cell, Marking, Placement, Region, TilingError};
use crate::sequence::GibonacciParams;

fn invalid(msg: impl Into<String>) -> TilingError {
    TilingError::InvalidBoard(msg.into())
}

fn rect(r0: i32, r1: i32, c0: i32, c1: i32) -> impl Iterator<Item = Cell> {
    (r0..=r1).flat_map(move |r| (c0..=c1).map(move |c| Cell::new(r, c)))
}

fn check_cols(n: i64) -> Result<i32, TilingError> {
    if n > i32::MAX as i64 / 4 {
        return Err(invalid(format!("board length {n} too large")));
    }
    Ok(n as i32)
}

fn require_nonnegative(p: &GibonacciParams) -> Result<(), TilingError> {
    if !p.is_nonnegative() {
        return Err(invalid("board weights are color counts; parameters must be >= 0"));
    }
    Ok(())
}

/// The 2×n board; its tilings number `f_n`.
pub fn plain_board(n: i64) -> Result<Board, TilingError> {
    if n < 1 {
        return Err(invalid(format!("plain board needs n >= 1, got {n}")));
    }
    let n = check_cols(n)?;
    Ok(Board::unmarked(Region::new(rect(1, 2, 1, n))?))
}

/// The Lucas board: 2×n plus two extra squares above columns 1 and 2;
/// tilings number `L_n`.
pub fn lucas_board(n: i64) -> Result<Board, TilingError> {
    if n < 1 {
        return Err(invalid(format!("lucas board needs n >= 1, got {n}")));
    }
    let n = check_cols(n)?;
    // the two added squares sit above columns 1 and 2 even when n = 1
    let mut cells: Vec<Cell> = rect(1, 2, 1, n).collect();
    cells.push(Cell::new(0, 1));
    cells.push(Cell::new(0, 2));
    Ok(Board::unmarked(Region::new(cells)?))
}

/// Left-marked 2×n strip: the column-1 vertical carries weight `g1` and the
/// top horizontal over columns 1–2 carries weight `g0`, so the weighted
/// count is `G_n`. Valid for any n >= 1; the named constructors below add
/// the stricter bounds under which the closed forms are proved.
pub fn gib_strip(n: i64, p: &GibonacciParams) -> Result<Board, TilingError> {
    if n < 1 {
        return Err(invalid(format!("gib strip needs n >= 1, got {n}")));
    }
    require_nonnegative(p)?;
    let n = check_cols(n)?;
    let region = Region::new(rect(1, 2, 1, n))?;
    let mut marking = Marking::new();
    marking.set(Placement::vertical(1, 1), p.g1.clone())?;
    if n >= 2 {
        marking.set(Placement::horizontal(1, 1), p.g0.clone())?;
    }
    Board::new(region, marking)
}

/// 2×n board with marked squares x=(1,1), y=(1,2), z=(2,1): x–y weighted
/// `g0`, x–z weighted `g1`; count `G_0 f_{n-2} + G_1 f_{n-1} = G_n`.
pub fn gib_board(n: i64, p: &GibonacciParams) -> Result<Board, TilingError> {
    if n < 3 {
        return Err(invalid(format!("gib board needs n >= 3, got {n}")));
    }
    gib_strip(n, p)
}

/// Lucas-board region counted with colors: x–y weighted `g1`, x and the
/// square below weighted `g0 - g1`; count `g1 f_n + (g0-g1) f_{n-2} = G_n`.
/// Requires `g0 >= g1 >= 0`.
pub fn gib_board_case1(n: i64, p: &GibonacciParams) -> Result<Board, TilingError> {
    if n < 2 {
        return Err(invalid(format!("case-1 gib board needs n >= 2, got {n}")));
    }
    require_nonnegative(p)?;
    if p.g0 < p.g1 {
        return Err(invalid("case-1 gib board needs g0 >= g1 (weights are color counts)"));
    }
    let board = lucas_board(n)?;
    let mut marking = Marking::new();
    marking.set(Placement::horizontal(0, 1), p.g1.clone())?;
    marking.set(Placement::vertical(0, 1), &p.g0 - &p.g1)?;
    Board::new(board.region, marking)
}

/// 2×n board marked at both ends (each end as in [`gib_board`], mirrored);
/// count `g1 G_{n-1} + g0 G_{n-2}`.
pub fn double_marked_board(n: i64, p: &GibonacciParams) -> Result<Board, TilingError> {
    if n < 4 {
        return Err(invalid(format!("double-marked board needs n >= 4, got {n}")));
    }
    require_nonnegative(p)?;
    let nc = check_cols(n)?;
    let region = Region::new(rect(1, 2, 1, nc))?;
    let mut marking = Marking::new();
    marking.set(Placement::vertical(1, 1), p.g1.clone())?;
    marking.set(Placement::horizontal(1, 1), p.g0.clone())?;
    marking.set(Placement::vertical(1, nc), p.g1.clone())?;
    marking.set(Placement::horizontal(1, nc - 1), p.g0.clone())?;
    Board::new(region, marking)
}

/// 2×(n+1) board with the left end marked as in [`gib_board`] and the right
/// end marked with the weights exchanged; count
/// `g0 G_n + g1 G_{n-1} = g1 G'_n + g0 G'_{n-1}`.
pub fn mixed_board(n: i64, p: &GibonacciParams) -> Result<Board, TilingError> {
    if n < 3 {
        return Err(invalid(format!("mixed board needs n >= 3, got {n}")));
    }
    require_nonnegative(p)?;
    let nc = check_cols(n + 1)?;
    let region = Region::new(rect(1, 2, 1, nc))?;
    let mut marking = Marking::new();
    marking.set(Placement::vertical(1, 1), p.g1.clone())?;
    marking.set(Placement::horizontal(1, 1), p.g0.clone())?;
    marking.set(Placement::vertical(1, nc), p.g0.clone())?;
    marking.set(Placement::horizontal(1, nc - 1), p.g1.clone())?;
    Board::new(region, marking)
}

/// Six-row board: rows 1, 2, 5, 6 hold n columns, rows 3–4 hold two;
/// unweighted count `L_n^2 + f_n^2`.
pub fn h_board(n: i64) -> Result<Board, TilingError> {
    if n < 3 {
        return Err(invalid(format!("h board needs n >= 3, got {n}")));
    }
    h_cells(n, 6)
}

/// m-row generalization: rows 1, 2, m-1, m hold n columns, rows 3..=m-2
/// hold two; count `L_n^2 f_{m-6} + 2 L_n f_n f_{m-7} + f_n^2 f_{m-8}`.
pub fn h_board_general(n: i64, m: i64) -> Result<Board, TilingError> {
    if n < 3 {
        return Err(invalid(format!("general h board needs n >= 3, got {n}")));
    }
    if m < 8 {
        return Err(invalid(format!("general h board needs m >= 8, got {m}")));
    }
    h_cells(n, m)
}

fn h_cells(n: i64, m: i64) -> Result<Board, TilingError> {
    let n = check_cols(n)?;
    let m = check_cols(m)?;
    let mut cells: Vec<Cell> = rect(1, 2, 1, n).collect();
    cells.extend(rect(m - 1, m, 1, n));
    cells.extend(rect(3, m - 2, 1, 2));
    Ok(Board::unmarked(Region::new(cells)?))
}

/// L-shaped board: the 2×n strip (rows 1–2) extended downward in columns
/// 1–2 to row n, marked at the corner as in [`gib_board`]; count
/// `G_n f_{n-2} + g0 f_{n-2} f_{n-3} = G'_n f_{n-2} + g1 f_{n-2} f_{n-3}`.
pub fn l_board(n: i64, p: &GibonacciParams) -> Result<Board, TilingError> {
    if n < 3 {
        return Err(invalid(format!("l board needs n >= 3, got {n}")));
    }
    require_nonnegative(p)?;
    let nc = check_cols(n)?;
    let mut cells: Vec<Cell> = rect(1, 2, 1, nc).collect();
    cells.extend(rect(3, nc, 1, 2));
    let region = Region::new(cells)?;
    let mut marking = Marking::new();
    marking.set(Placement::vertical(1, 1), p.g1.clone())?;
    marking.set(Placement::horizontal(1, 1), p.g0.clone())?;
    Board::new(region, marking)
}
