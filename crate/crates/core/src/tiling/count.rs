//! Broken-profile dynamic programming over the rows of the bounding box.
//!
//! Columns are scanned left to right. The state entering a column is the
//! set of rows already covered by horizontal dominoes protruding from the
//! previous column; within a column every remaining present cell is covered
//! either by a vertical domino inside the column or by a horizontal domino
//! protruding into the next column. Weights of marked placements multiply
//! into the path weight, so the accumulated total is the weighted count.

use super::{Board, Cell, Placement};
use crate::sequence::Int;
use num_traits::{One, Zero};

/// Requires bounding-box height <= `DP_MAX_WIDTH` (caller transposes when
/// the other orientation is narrower).
pub(super) fn profile_count(board: &Board) -> Int {
    let (r0, r1, c0, c1) = board.region.bounding_box();
    let height = (r1 - r0 + 1) as usize;
    debug_assert!(height <= super::DP_MAX_WIDTH as usize);

    let states = 1usize << height;
    let mut current: Vec<Int> = vec![Int::zero(); states];
    current[0] = Int::one();
    let mut next: Vec<Int> = vec![Int::zero(); states];

    // Presence bitmask per column.
    let col_mask = |col: i32| -> u32 {
        let mut mask = 0u32;
        for bit in 0..height {
            if board.region.contains(&Cell::new(r0 + bit as i32, col)) {
                mask |= 1 << bit;
            }
        }
        mask
    };

    let mut mask_here = col_mask(c0);
    for col in c0..=c1 {
        let mask_right = if col < c1 { col_mask(col + 1) } else { 0 };
        for slot in next.iter_mut() {
            slot.set_zero();
        }
        for in_state in 0..states as u32 {
            if current[in_state as usize].is_zero() {
                continue;
            }
            // Protrusions may only land on present cells.
            if in_state & !mask_here != 0 {
                continue;
            }
            fill_column(
                board,
                r0,
                col,
                height,
                mask_here,
                mask_right,
                in_state,
                0,
                0,
                &current[in_state as usize].clone(),
                &Int::one(),
                &mut next,
            );
        }
        std::mem::swap(&mut current, &mut next);
        mask_here = mask_right;
    }
    current[0].clone()
}

#[allow(clippy::too_many_arguments)]
fn fill_column(
    board: &Board,
    r0: i32,
    col: i32,
    height: usize,
    mask_here: u32,
    mask_right: u32,
    in_state: u32,
    row: usize,
    out_state: u32,
    base: &Int,
    factor: &Int,
    next: &mut [Int],
) {
    if row == height {
        let contribution = base * factor;
        next[out_state as usize] += contribution;
        return;
    }
    let bit = 1u32 << row;
    // Absent cell or already covered by a protrusion: move on.
    if mask_here & bit == 0 || in_state & bit != 0 {
        fill_column(
            board, r0, col, height, mask_here, mask_right, in_state, row + 1, out_state, base,
            factor, next,
        );
        return;
    }
    let here = Cell::new(r0 + row as i32, col);
    // Vertical domino within this column.
    let below_bit = bit << 1;
    if row + 1 < height && mask_here & below_bit != 0 && in_state & below_bit == 0 {
        let placement = Placement::vertical(here.row, here.col);
        let f = scaled(board, &placement, factor);
        fill_column(
            board,
            r0,
            col,
            height,
            mask_here,
            mask_right,
            in_state | below_bit,
            row + 2,
            out_state,
            base,
            &f,
            next,
        );
    }
    // Horizontal domino protruding into the next column.
    if mask_right & bit != 0 {
        let placement = Placement::horizontal(here.row, here.col);
        let f = scaled(board, &placement, factor);
        fill_column(
            board,
            r0,
            col,
            height,
            mask_here,
            mask_right,
            in_state,
            row + 1,
            out_state | bit,
            base,
            &f,
            next,
        );
    }
}

fn scaled(board: &Board, placement: &Placement, factor: &Int) -> Int {
    match board.marking.get(placement) {
        Some(w) => factor * w,
        None => factor.clone(),
    }
}
