//! Boards, weighted markings and exact weighted tiling counts.
//!
//! A board is a finite set of grid cells plus weights attached to
//! distinguished domino placements (color multiplicities). The weighted
//! count of its domino tilings is computed two independent ways: a
//! brute-force enumerator (the oracle) and a broken-profile dynamic
//! program over the narrow dimension of the bounding box.

mod boards;
mod count;
mod render;

pub use boards::{
    double_marked_board, gib_board, gib_board_case1, gib_strip, h_board, h_board_general,
    l_board, lucas_board, mixed_board, plain_board,
};
pub use render::{render_board, render_tiling};

use crate::sequence::Int;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

/// Cells beyond this count are rejected by the brute-force enumerator.
pub const ENUMERATION_CAP: usize = 64;

/// Maximum narrow-dimension width handled by the profile DP (state space 2^12).
pub const DP_MAX_WIDTH: i32 = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TilingError {
    #[error("invalid board parameters: {0}")]
    InvalidBoard(String),
    #[error("cells {a:?} and {b:?} are not edge-adjacent")]
    NotAdjacent { a: Cell, b: Cell },
    #[error("marked placement {0:?} lies outside the region")]
    MarkOutsideRegion(Placement),
    #[error("marking weights must be nonnegative")]
    NegativeWeight,
    #[error("region has {cells} cells, above the enumeration cap {cap}")]
    RegionTooLarge { cells: usize, cap: usize },
    #[error("bounding box {rows}x{cols} too wide for the profile DP and too large to enumerate")]
    CountInfeasible { rows: i32, cols: i32 },
    #[error("region must be nonempty")]
    EmptyRegion,
    #[error("placements do not tile the region exactly")]
    NotATiling,
}

/// One grid square. Ordering is lexicographic by (row, col); rows grow
/// downward.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: i32,
    pub col: i32,
}

impl Cell {
    pub fn new(row: i32, col: i32) -> Self {
        Self { row, col }
    }

    fn transposed(self) -> Self {
        Cell { row: self.col, col: self.row }
    }
}

/// A domino position: two edge-adjacent cells, stored with the
/// lexicographically smaller cell first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Placement {
    a: Cell,
    b: Cell,
}

impl Placement {
    pub fn new(x: Cell, y: Cell) -> Result<Self, TilingError> {
        let adjacent = (x.row == y.row && (x.col - y.col).abs() == 1)
            || (x.col == y.col && (x.row - y.row).abs() == 1);
        if !adjacent {
            return Err(TilingError::NotAdjacent { a: x, b: y });
        }
        Ok(if x <= y { Self { a: x, b: y } } else { Self { a: y, b: x } })
    }

    pub fn vertical(row: i32, col: i32) -> Self {
        Self { a: Cell::new(row, col), b: Cell::new(row + 1, col) }
    }

    pub fn horizontal(row: i32, col: i32) -> Self {
        Self { a: Cell::new(row, col), b: Cell::new(row, col + 1) }
    }

    pub fn cells(&self) -> (Cell, Cell) {
        (self.a, self.b)
    }

    pub fn is_horizontal(&self) -> bool {
        self.a.row == self.b.row
    }

    pub fn min_col(&self) -> i32 {
        self.a.col.min(self.b.col)
    }

    pub fn max_col(&self) -> i32 {
        self.a.col.max(self.b.col)
    }

    /// True when this is a horizontal domino covering columns c and c+1.
    pub fn spans_columns(&self, c: i32) -> bool {
        self.is_horizontal() && self.min_col() == c
    }

    fn transposed(self) -> Self {
        let (x, y) = (self.a.transposed(), self.b.transposed());
        if x <= y {
            Self { a: x, b: y }
        } else {
            Self { a: y, b: x }
        }
    }

    pub fn shifted_cols(&self, d: i32) -> Self {
        Self {
            a: Cell::new(self.a.row, self.a.col + d),
            b: Cell::new(self.b.row, self.b.col + d),
        }
    }
}

/// A finite, nonempty set of cells. Connectivity is not required.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    cells: BTreeSet<Cell>,
}

impl Region {
    pub fn new(cells: impl IntoIterator<Item = Cell>) -> Result<Self, TilingError> {
        let cells: BTreeSet<Cell> = cells.into_iter().collect();
        if cells.is_empty() {
            return Err(TilingError::EmptyRegion);
        }
        Ok(Self { cells })
    }

    pub fn contains(&self, cell: &Cell) -> bool {
        self.cells.contains(cell)
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Cell> {
        self.cells.iter()
    }

    /// `(min_row, max_row, min_col, max_col)`.
    pub fn bounding_box(&self) -> (i32, i32, i32, i32) {
        let first = *self.cells.iter().next().expect("region is nonempty");
        let (mut r0, mut r1, mut c0, mut c1) = (first.row, first.row, first.col, first.col);
        for cell in &self.cells {
            r0 = r0.min(cell.row);
            r1 = r1.max(cell.row);
            c0 = c0.min(cell.col);
            c1 = c1.max(cell.col);
        }
        (r0, r1, c0, c1)
    }
}

/// Weights (color counts) attached to distinguished placements.
/// Unmarked placements have implicit weight 1.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Marking {
    weights: BTreeMap<Placement, Int>,
}

impl Marking {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, placement: Placement, weight: Int) -> Result<(), TilingError> {
        if weight.is_negative() {
            return Err(TilingError::NegativeWeight);
        }
        self.weights.insert(placement, weight);
        Ok(())
    }

    pub fn weight_of(&self, placement: &Placement) -> Int {
        self.weights.get(placement).cloned().unwrap_or_else(Int::one)
    }

    pub fn get(&self, placement: &Placement) -> Option<&Int> {
        self.weights.get(placement)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Placement, &Int)> {
        self.weights.iter()
    }

    pub fn is_trivial(&self) -> bool {
        self.weights.values().all(|w| w.is_one())
    }
}

/// A region together with its marking.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Board {
    pub region: Region,
    pub marking: Marking,
}

impl Board {
    pub fn new(region: Region, marking: Marking) -> Result<Self, TilingError> {
        for (placement, _) in marking.iter() {
            let (a, b) = placement.cells();
            if !region.contains(&a) || !region.contains(&b) {
                return Err(TilingError::MarkOutsideRegion(*placement));
            }
        }
        Ok(Self { region, marking })
    }

    pub fn unmarked(region: Region) -> Self {
        Self { region, marking: Marking::new() }
    }

    pub(crate) fn transposed(&self) -> Board {
        let region = Region::new(self.region.iter().map(|c| c.transposed()))
            .expect("transpose preserves nonemptiness");
        let mut marking = Marking::new();
        for (p, w) in self.marking.iter() {
            marking
                .set(p.transposed(), w.clone())
                .expect("weights already validated");
        }
        Board { region, marking }
    }
}

/// A partition of a board's cells into dominoes, carrying the product of
/// the weights of its marked placements.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Tiling {
    dominoes: BTreeSet<Placement>,
    weight: Int,
}

impl Tiling {
    /// Builds a tiling from placements, validating that they partition the
    /// board's region exactly, and computes its weight from the marking.
    pub fn new(
        board: &Board,
        dominoes: impl IntoIterator<Item = Placement>,
    ) -> Result<Self, TilingError> {
        let dominoes: BTreeSet<Placement> = dominoes.into_iter().collect();
        let mut covered = BTreeSet::new();
        for d in &dominoes {
            let (a, b) = d.cells();
            if !covered.insert(a) || !covered.insert(b) {
                return Err(TilingError::NotATiling);
            }
            if !board.region.contains(&a) || !board.region.contains(&b) {
                return Err(TilingError::NotATiling);
            }
        }
        if covered.len() != board.region.len() {
            return Err(TilingError::NotATiling);
        }
        let weight = weight_of(board, dominoes.iter());
        Ok(Self { dominoes, weight })
    }

    pub fn dominoes(&self) -> &BTreeSet<Placement> {
        &self.dominoes
    }

    pub fn weight(&self) -> &Int {
        &self.weight
    }

    /// True when some horizontal domino of this tiling covers columns
    /// c and c+1.
    pub fn spans_columns(&self, c: i32) -> bool {
        self.dominoes.iter().any(|d| d.spans_columns(c))
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.dominoes.iter().flat_map(|d| {
            let (a, b) = d.cells();
            [a, b]
        })
    }
}

pub(crate) fn weight_of<'a>(board: &Board, dominoes: impl Iterator<Item = &'a Placement>) -> Int {
    let mut weight = Int::one();
    for d in dominoes {
        if let Some(w) = board.marking.get(d) {
            weight *= w;
        }
    }
    weight
}

/// All tilings of the board in a deterministic order: recurse on the
/// lexicographically first uncovered cell, trying its vertical partner
/// before its horizontal partner.
///
/// An odd cell count yields the empty list; a region above
/// [`ENUMERATION_CAP`] is an error.
pub fn enumerate_tilings(board: &Board) -> Result<Vec<Tiling>, TilingError> {
    let n = board.region.len();
    if n > ENUMERATION_CAP {
        return Err(TilingError::RegionTooLarge { cells: n, cap: ENUMERATION_CAP });
    }
    if n % 2 != 0 {
        return Ok(Vec::new());
    }
    let cells: Vec<Cell> = board.region.iter().copied().collect();
    let index: BTreeMap<Cell, usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut out = Vec::new();
    let mut stack: Vec<Placement> = Vec::with_capacity(n / 2);
    recurse(board, &cells, &index, 0u64, &mut stack, &mut out);
    return Ok(out);

    fn recurse(
        board: &Board,
        cells: &[Cell],
        index: &BTreeMap<Cell, usize>,
        covered: u64,
        stack: &mut Vec<Placement>,
        out: &mut Vec<Tiling>,
    ) {
        let n = cells.len();
        let first = (0..n).find(|i| covered & (1 << i) == 0);
        let Some(i) = first else {
            let weight = weight_of(board, stack.iter());
            out.push(Tiling { dominoes: stack.iter().copied().collect(), weight });
            return;
        };
        let cell = cells[i];
        let partners = [
            Cell::new(cell.row + 1, cell.col), // vertical first
            Cell::new(cell.row, cell.col + 1),
        ];
        for partner in partners {
            if let Some(&j) = index.get(&partner) {
                if covered & (1 << j) == 0 {
                    let placement =
                        Placement::new(cell, partner).expect("partner is adjacent");
                    stack.push(placement);
                    recurse(board, cells, index, covered | (1 << i) | (1 << j), stack, out);
                    stack.pop();
                }
            }
        }
    }
}

/// Weighted sum over all tilings of the board.
///
/// Uses the broken-profile DP when the bounding box has a dimension of at
/// most [`DP_MAX_WIDTH`], falling back to enumeration for small irregular
/// regions.
pub fn count_tilings(board: &Board) -> Result<Int, TilingError> {
    let (r0, r1, c0, c1) = board.region.bounding_box();
    let rows = r1 - r0 + 1;
    let cols = c1 - c0 + 1;
    if rows <= DP_MAX_WIDTH || cols <= DP_MAX_WIDTH {
        let value = if rows <= cols {
            count::profile_count(board)
        } else {
            count::profile_count(&board.transposed())
        };
        return Ok(value);
    }
    if board.region.len() <= ENUMERATION_CAP {
        let tilings = enumerate_tilings(board)?;
        let mut total = Int::zero();
        for t in tilings {
            total += t.weight;
        }
        return Ok(total);
    }
    Err(TilingError::CountInfeasible { rows, cols })
}

/// Sum of weights from the enumerator; the independent oracle for
/// [`count_tilings`].
pub fn enumeration_weight_sum(board: &Board) -> Result<Int, TilingError> {
    Ok(enumerate_tilings(board)?
        .into_iter()
        .fold(Int::zero(), |acc, t| acc + t.weight))
}
