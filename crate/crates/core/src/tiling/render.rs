//! Deterministic ASCII rendering: one character per cell, letters pairing
//! domino halves.

use super::{Board, Cell, Tiling};

/// Cells as `.`, absent positions as spaces. Marked placements are listed
/// below the grid, one per line.
pub fn render_board(board: &Board) -> String {
    let (r0, r1, c0, c1) = board.region.bounding_box();
    let mut out = String::new();
    for r in r0..=r1 {
        let mut line = String::new();
        for c in c0..=c1 {
            line.push(if board.region.contains(&Cell::new(r, c)) { '.' } else { ' ' });
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    for (p, w) in board.marking.iter() {
        let (a, b) = p.cells();
        out.push_str(&format!(
            "mark ({},{})-({},{}) weight {}\n",
            a.row, a.col, b.row, b.col, w
        ));
    }
    out
}

/// Dominoes lettered `a`..`z` (cycling) in placement order; both halves of
/// a domino carry the same letter.
pub fn render_tiling(board: &Board, tiling: &Tiling) -> String {
    let (r0, r1, c0, c1) = board.region.bounding_box();
    let width = (c1 - c0 + 1) as usize;
    let height = (r1 - r0 + 1) as usize;
    let mut grid = vec![vec![' '; width]; height];
    for (i, d) in tiling.dominoes().iter().enumerate() {
        let letter = (b'a' + (i % 26) as u8) as char;
        let (a, b) = d.cells();
        for cell in [a, b] {
            grid[(cell.row - r0) as usize][(cell.col - c0) as usize] = letter;
        }
    }
    let mut out = String::new();
    for row in grid {
        let line: String = row.into_iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}
