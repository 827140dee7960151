//! Structural operations on explicit tilings of 2-row strips: breakability
//! profiles, faults of stacked pairs, tail swapping, Cassini-style matching,
//! supertile decomposition and census reports.
//!
//! Stack coordinates: the top board starts at column 1; the bottom board is
//! shifted right by `offset` columns. A tiling of a strip spanning columns
//! `s..=e` is breakable at column `c` (for `s <= c < e`) when no horizontal
//! domino covers columns `c` and `c+1`; a fault of a stacked pair is a
//! column at which both tilings are breakable.

use crate::sequence::{fib, gib, GibonacciParams, Int};
use crate::tiling::{
    enumerate_tilings, gib_strip, Board, Cell, Marking, Placement, Region, Tiling, TilingError,
};
use num_traits::{One, Zero};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

/// Largest strip length accepted by the exhaustive pair censuses.
pub const PAIR_ENUMERATION_CAP: i64 = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BijectionError {
    #[error("tiling does not cover a 2-row strip")]
    NotTwoRows,
    #[error("pair has no fault; tail swap is undefined")]
    FaultFree,
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Tiling(#[from] TilingError),
}

fn invalid(msg: impl Into<String>) -> BijectionError {
    BijectionError::Invalid(msg.into())
}

/// A tiling together with the board it tiles, in the board's own
/// (local) coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TiledBoard {
    pub board: Board,
    pub tiling: Tiling,
}

impl TiledBoard {
    pub fn new(board: Board, tiling: Tiling) -> Self {
        Self { board, tiling }
    }

    fn column_count(&self) -> i64 {
        let (_, _, c0, c1) = self.board.region.bounding_box();
        (c1 - c0 + 1) as i64
    }
}

/// Two stacked 2-row tilings; the bottom board is shifted right by
/// `offset` columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OffsetPair {
    pub top: TiledBoard,
    pub bottom: TiledBoard,
    pub offset: i32,
}

impl OffsetPair {
    /// Product of the two tilings' weights.
    pub fn weight_product(&self) -> Int {
        self.top.tiling.weight() * self.bottom.tiling.weight()
    }

    /// Equality of the pair's content: regions, tilings (dominoes and
    /// weights) and offset. Splicing drops marks that straddled the cut —
    /// such a mark is never in use at a fault — so board markings are not
    /// compared.
    pub fn same_configuration(&self, other: &Self) -> bool {
        self.offset == other.offset
            && self.top.tiling == other.top.tiling
            && self.bottom.tiling == other.bottom.tiling
            && self.top.board.region == other.top.board.region
            && self.bottom.board.region == other.bottom.board.region
    }

    /// Total number of columns covered by the two boards.
    pub fn total_columns(&self) -> i64 {
        self.top.column_count() + self.bottom.column_count()
    }
}

/// A column at which both tilings of a stacked pair are breakable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Fault {
    pub column: i32,
}

/// The breakable columns of one 2-row tiling (board-local coordinates).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BreakabilityProfile {
    pub breakable: BTreeSet<i32>,
}

/// Columns `c` strictly inside the strip's span with no horizontal domino
/// covering `c` and `c+1`.
pub fn breakable_columns(tiling: &Tiling) -> Result<BreakabilityProfile, BijectionError> {
    let rows: BTreeSet<i32> = tiling.cells().map(|c| c.row).collect();
    if rows.len() != 2 {
        return Err(BijectionError::NotTwoRows);
    }
    let cols: BTreeSet<i32> = tiling.cells().map(|c| c.col).collect();
    let (&c0, &c1) = (cols.first().unwrap(), cols.last().unwrap());
    let breakable = (c0..c1).filter(|&c| !tiling.spans_columns(c)).collect();
    Ok(BreakabilityProfile { breakable })
}

/// Sorted common breakable columns of both tilings, in stack coordinates.
pub fn faults(pair: &OffsetPair) -> Result<Vec<Fault>, BijectionError> {
    let top = breakable_columns(&pair.top.tiling)?.breakable;
    let bottom = breakable_columns(&pair.bottom.tiling)?.breakable;
    Ok(top
        .into_iter()
        .filter(|c| bottom.contains(&(c - pair.offset)))
        .map(|column| Fault { column })
        .collect())
}

/// Exchanges the suffixes of the two tilings after the last fault.
///
/// Markings travel with their source board: each new board keeps the head
/// board's marks up to the cut and adopts the tail board's marks beyond it,
/// so the weight product of the pair is preserved. Applying the swap twice
/// returns the original pair.
pub fn tail_swap(pair: &OffsetPair) -> Result<OffsetPair, BijectionError> {
    let all = faults(pair)?;
    let cut = all.last().ok_or(BijectionError::FaultFree)?.column;

    let offset = pair.offset;
    let top = &pair.top;
    let bottom = &pair.bottom;

    let new_top_board = splice_boards(&top.board, 0, &bottom.board, offset, cut, 0);
    let new_bottom_board = splice_boards(&bottom.board, offset, &top.board, 0, cut, offset);
    let new_top_doms = splice_placements(&top.tiling, 0, &bottom.tiling, offset, cut, 0);
    let new_bottom_doms = splice_placements(&bottom.tiling, offset, &top.tiling, 0, cut, offset);

    let new_top = Tiling::new(&new_top_board, new_top_doms)?;
    let new_bottom = Tiling::new(&new_bottom_board, new_bottom_doms)?;
    Ok(OffsetPair {
        top: TiledBoard::new(new_top_board, new_top),
        bottom: TiledBoard::new(new_bottom_board, new_bottom),
        offset,
    })
}

/// Head of `head` (stack columns <= cut) joined with the tail of `tail`
/// (stack columns > cut), expressed in coordinates shifted left by
/// `out_shift`.
fn splice_boards(
    head: &Board,
    head_shift: i32,
    tail: &Board,
    tail_shift: i32,
    cut: i32,
    out_shift: i32,
) -> Board {
    let cells = head
        .region
        .iter()
        .filter(|c| c.col + head_shift <= cut)
        .map(|c| Cell::new(c.row, c.col + head_shift - out_shift))
        .chain(
            tail.region
                .iter()
                .filter(|c| c.col + tail_shift > cut)
                .map(|c| Cell::new(c.row, c.col + tail_shift - out_shift)),
        );
    let region = Region::new(cells).expect("spliced regions are nonempty");
    let mut marking = Marking::new();
    for (p, w) in head.marking.iter() {
        if p.max_col() + head_shift <= cut {
            marking
                .set(p.shifted_cols(head_shift - out_shift), w.clone())
                .expect("validated weight");
        }
    }
    for (p, w) in tail.marking.iter() {
        if p.min_col() + tail_shift > cut {
            marking
                .set(p.shifted_cols(tail_shift - out_shift), w.clone())
                .expect("validated weight");
        }
    }
    Board::new(region, marking).expect("spliced marks lie inside the spliced region")
}

fn splice_placements(
    head: &Tiling,
    head_shift: i32,
    tail: &Tiling,
    tail_shift: i32,
    cut: i32,
    out_shift: i32,
) -> Vec<Placement> {
    head.dominoes()
        .iter()
        .filter(|p| p.max_col() + head_shift <= cut)
        .map(|p| p.shifted_cols(head_shift - out_shift))
        .chain(
            tail.dominoes()
                .iter()
                .filter(|p| p.min_col() + tail_shift > cut)
                .map(|p| p.shifted_cols(tail_shift - out_shift)),
        )
        .collect()
}

// ---------------------------------------------------------------------------
// Cassini matching (faults-and-tails accounting)
// ---------------------------------------------------------------------------

/// Weighted bucket totals from matching pairs of G-strip tilings by tail
/// swapping.
///
/// Set (1) stacks two 2×n strips, the bottom shifted right by one; Set (2)
/// stacks a 2×(n+1) strip over a 2×(n-1) strip with the same shift. Pairs
/// with a fault in columns 2..=n are matched across the sets; the leftover
/// buckets split into the column-1 configurations (top tiling breakable at
/// column 1) and the fault-free rest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CassiniReport {
    pub n: i64,
    pub params: GibonacciParams,
    pub set1_total: Int,
    pub set2_total: Int,
    pub matched: Int,
    pub set1_column_one: Int,
    pub set1_fault_free: Int,
    pub set2_column_one: Int,
    pub set2_fault_free: Int,
    /// `(-1)^n (G_0 G_2 - G_1^2)`.
    pub correction: Int,
    /// Every matched pair swaps into the opposite set with the same weight,
    /// and swapping twice is the identity.
    pub bijection_ok: bool,
    /// Leftover buckets take the predicted values
    /// (`G_1^2`, `0`, `G_0 G_1`, `G_0^2` for odd n; mirrored for even n).
    pub buckets_match: bool,
    /// `G_n^2 - G_{n+1} G_{n-1} == correction`, recovered from the buckets.
    pub identity_holds: bool,
}

impl CassiniReport {
    pub fn holds(&self) -> bool {
        self.bijection_ok && self.buckets_match && self.identity_holds
    }
}

/// Dominoes of a strip tiling shifted into stack coordinates.
fn stack_dominoes(t: &Tiling, shift: i32) -> BTreeSet<Placement> {
    t.dominoes().iter().map(|p| p.shifted_cols(shift)).collect()
}

fn spans(doms: &BTreeSet<Placement>, c: i32) -> bool {
    doms.iter().any(|d| d.spans_columns(c))
}

/// Suffix exchange of two domino sets in stack coordinates.
fn exchange_after(
    a: &BTreeSet<Placement>,
    b: &BTreeSet<Placement>,
    cut: i32,
) -> (BTreeSet<Placement>, BTreeSet<Placement>) {
    fn split(s: &BTreeSet<Placement>, cut: i32) -> (Vec<Placement>, Vec<Placement>) {
        s.iter().copied().partition(|p| p.max_col() <= cut)
    }
    let (head_a, tail_a) = split(a, cut);
    let (head_b, tail_b) = split(b, cut);
    (
        head_a.into_iter().chain(tail_b).collect(),
        head_b.into_iter().chain(tail_a).collect(),
    )
}

pub fn verify_cassini(n: i64, p: &GibonacciParams) -> Result<CassiniReport, BijectionError> {
    if !(2..=PAIR_ENUMERATION_CAP).contains(&n) {
        return Err(invalid(format!(
            "cassini matching needs 2 <= n <= {PAIR_ENUMERATION_CAP}, got {n}"
        )));
    }
    if !p.is_nonnegative() {
        return Err(invalid("strip weights are color counts; parameters must be >= 0"));
    }

    let strip = |len: i64| -> Result<Vec<Tiling>, BijectionError> {
        Ok(enumerate_tilings(&gib_strip(len, p)?)?)
    };
    let tilings_n = strip(n)?;
    let tilings_up = strip(n + 1)?;
    let tilings_down = strip(n - 1)?;

    // Fault columns 2..=n under the pure no-span test: the shorter board's
    // end column counts, while column 1 is excluded so markings stay in the
    // heads of both boards.
    let fault_cols = |top: &BTreeSet<Placement>, bottom: &BTreeSet<Placement>| -> Vec<i32> {
        (2..=n as i32)
            .filter(|&c| !spans(top, c) && !spans(bottom, c))
            .collect()
    };

    // Index of Set (2) pairs for the bijection check.
    let mut set2_pairs: BTreeMap<(BTreeSet<Placement>, BTreeSet<Placement>), Int> =
        BTreeMap::new();
    for t in &tilings_up {
        for b in &tilings_down {
            let key = (stack_dominoes(t, 0), stack_dominoes(b, 1));
            set2_pairs.insert(key, t.weight() * b.weight());
        }
    }

    let mut matched1 = Int::zero();
    let mut set1_column_one = Int::zero();
    let mut set1_fault_free = Int::zero();
    let mut set1_total = Int::zero();
    let mut bijection_ok = true;

    for t in &tilings_n {
        for b in &tilings_n {
            let w = t.weight() * b.weight();
            set1_total += &w;
            let top = stack_dominoes(t, 0);
            let bottom = stack_dominoes(b, 1);
            let fcols = fault_cols(&top, &bottom);
            if let Some(&cut) = fcols.last() {
                matched1 += &w;
                let (new_top, new_bottom) = exchange_after(&top, &bottom, cut);
                match set2_pairs.get(&(new_top.clone(), new_bottom.clone())) {
                    Some(w2) if *w2 == w => {}
                    _ => bijection_ok = false,
                }
                // involution: swapping back restores the original pair
                let (back_top, back_bottom) = exchange_after(&new_top, &new_bottom, cut);
                if back_top != top || back_bottom != bottom {
                    bijection_ok = false;
                }
            } else if !spans(&top, 1) {
                set1_column_one += &w;
            } else {
                set1_fault_free += &w;
            }
        }
    }

    let mut matched2 = Int::zero();
    let mut set2_column_one = Int::zero();
    let mut set2_fault_free = Int::zero();
    let mut set2_total = Int::zero();
    for t in &tilings_up {
        for b in &tilings_down {
            let w = t.weight() * b.weight();
            set2_total += &w;
            let top = stack_dominoes(t, 0);
            let bottom = stack_dominoes(b, 1);
            if !fault_cols(&top, &bottom).is_empty() {
                matched2 += &w;
            } else if !spans(&top, 1) {
                set2_column_one += &w;
            } else {
                set2_fault_free += &w;
            }
        }
    }
    if matched1 != matched2 {
        bijection_ok = false;
    }

    let g = |i: i64| gib(p, i).expect("small index");
    let correction = pow_neg_one(n) * (&p.g0 * g(2) - &p.g1 * &p.g1);

    let (e1c, e1f, e2c, e2f) = if n % 2 == 1 {
        (&p.g1 * &p.g1, Int::zero(), &p.g0 * &p.g1, &p.g0 * &p.g0)
    } else {
        (&p.g0 * &p.g1, &p.g0 * &p.g0, &p.g1 * &p.g1, Int::zero())
    };
    let buckets_match = set1_column_one == e1c
        && set1_fault_free == e1f
        && set2_column_one == e2c
        && set2_fault_free == e2f;

    let bucket_diff =
        (&set1_column_one + &set1_fault_free) - (&set2_column_one + &set2_fault_free);
    let identity_holds = set1_total == g(n) * g(n)
        && set2_total == g(n + 1) * g(n - 1)
        && bucket_diff == correction
        && &set1_total - &set2_total == correction;

    Ok(CassiniReport {
        n,
        params: p.clone(),
        set1_total,
        set2_total,
        matched: matched1,
        set1_column_one,
        set1_fault_free,
        set2_column_one,
        set2_fault_free,
        correction,
        bijection_ok,
        buckets_match,
        identity_holds,
    })
}

fn pow_neg_one(n: i64) -> Int {
    if n.rem_euclid(2) == 0 {
        Int::one()
    } else {
        -Int::one()
    }
}

// ---------------------------------------------------------------------------
// Supertiles
// ---------------------------------------------------------------------------

/// A 2×mr tiling split into r segments of m columns; junction j is open
/// when two horizontal dominoes cover columns jm and jm+1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupertileDecomposition {
    pub segment_columns: i64,
    pub top_row: i32,
    /// Dominoes lying entirely inside each segment, left to right.
    pub segments: Vec<Vec<Placement>>,
    /// Openness of junctions 1..r-1.
    pub open_junctions: Vec<bool>,
}

impl SupertileDecomposition {
    /// Rebuilds the original domino set: segment dominoes plus the two
    /// spanning horizontals at each open junction.
    pub fn reassemble(&self) -> BTreeSet<Placement> {
        let m = self.segment_columns as i32;
        let mut doms: BTreeSet<Placement> = self.segments.iter().flatten().copied().collect();
        for (j, open) in self.open_junctions.iter().enumerate() {
            if *open {
                let col = (j as i32 + 1) * m;
                doms.insert(Placement::horizontal(self.top_row, col));
                doms.insert(Placement::horizontal(self.top_row + 1, col));
            }
        }
        doms
    }
}

/// Splits a tiling of a 2×(mr) strip starting at column 1 into supertiles.
pub fn supertile_decompose(
    tiling: &Tiling,
    m: i64,
) -> Result<SupertileDecomposition, BijectionError> {
    if m < 1 {
        return Err(invalid(format!("segment length must be positive, got {m}")));
    }
    let rows: BTreeSet<i32> = tiling.cells().map(|c| c.row).collect();
    if rows.len() != 2 {
        return Err(BijectionError::NotTwoRows);
    }
    let cols: BTreeSet<i32> = tiling.cells().map(|c| c.col).collect();
    let (&c0, &c1) = (cols.first().unwrap(), cols.last().unwrap());
    if c0 != 1 {
        return Err(invalid("supertile strips start at column 1"));
    }
    let len = c1 as i64;
    if len % m != 0 {
        return Err(invalid(format!("board length {len} is not a multiple of {m}")));
    }
    let r = len / m;
    let seg_of = |col: i32| ((col - 1) as i64 / m) as usize;
    let mut segments: Vec<Vec<Placement>> = vec![Vec::new(); r as usize];
    for d in tiling.dominoes() {
        if seg_of(d.min_col()) == seg_of(d.max_col()) {
            segments[seg_of(d.min_col())].push(*d);
        }
    }
    let open_junctions = (1..r).map(|j| tiling.spans_columns((j * m) as i32)).collect();
    Ok(SupertileDecomposition {
        segment_columns: m,
        top_row: *rows.first().unwrap(),
        segments,
        open_junctions,
    })
}

/// One group of the supertile census: tilings sharing the first open
/// junction (`None` when every junction is closed).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupertileGroup {
    pub first_open_junction: Option<i64>,
    pub weight: Int,
    pub expected: Int,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupertileCensus {
    pub m: i64,
    pub r: i64,
    pub params: GibonacciParams,
    pub groups: Vec<SupertileGroup>,
    pub total: Int,
    pub expected_total: Int,
}

impl SupertileCensus {
    pub fn holds(&self) -> bool {
        self.total == self.expected_total && self.groups.iter().all(|g| g.weight == g.expected)
    }
}

/// Groups every tiling of the marked 2×mr strip by its first open junction
/// and compares each group's weighted size with the matching summand:
///
/// * junction 1 open first: `G_{m-1} F_{(r-1)m}`
/// * junction j (1 < j < r) open first: `G_m F_{m+1}^{j-2} F_m F_{(r-j)m}`
/// * all junctions closed: `G_m F_{m+1}^{r-1}`
pub fn supertile_census(
    m: i64,
    r: i64,
    p: &GibonacciParams,
) -> Result<SupertileCensus, BijectionError> {
    if m < 2 || r < 2 {
        return Err(invalid(format!("census needs m >= 2 and r >= 2, got m={m} r={r}")));
    }
    if m * r > 2 * PAIR_ENUMERATION_CAP {
        return Err(invalid(format!("board 2x{} above the census cap", m * r)));
    }
    if !p.is_nonnegative() {
        return Err(invalid("strip weights are color counts; parameters must be >= 0"));
    }
    let board = gib_strip(m * r, p)?;
    let tilings = enumerate_tilings(&board)?;
    let mut weights: BTreeMap<Option<i64>, Int> = BTreeMap::new();
    for t in &tilings {
        let first_open = (1..r).find(|&j| t.spans_columns((j * m) as i32));
        *weights.entry(first_open).or_insert_with(Int::zero) += t.weight();
    }

    let g = |i: i64| gib(p, i).expect("small index");
    let fb = |i: i64| fib(i).expect("small index");
    let pow = |base: Int, e: i64| -> Int {
        let mut out = Int::one();
        for _ in 0..e {
            out *= &base;
        }
        out
    };
    let expected = |key: &Option<i64>| -> Int {
        match key {
            None => g(m) * pow(fb(m + 1), r - 1),
            Some(1) => g(m - 1) * fb((r - 1) * m),
            Some(j) => g(m) * pow(fb(m + 1), j - 2) * fb(m) * fb((r - j) * m),
        }
    };

    let mut keys: BTreeSet<Option<i64>> = weights.keys().copied().collect();
    keys.insert(None);
    for j in 1..r {
        keys.insert(Some(j));
    }
    let groups: Vec<SupertileGroup> = keys
        .into_iter()
        .map(|key| SupertileGroup {
            first_open_junction: key,
            weight: weights.get(&key).cloned().unwrap_or_else(Int::zero),
            expected: expected(&key),
        })
        .collect();
    let total = groups.iter().fold(Int::zero(), |acc, gr| acc + &gr.weight);
    Ok(SupertileCensus {
        m,
        r,
        params: p.clone(),
        groups,
        total,
        expected_total: g(m * r),
    })
}

// ---------------------------------------------------------------------------
// Breakability census
// ---------------------------------------------------------------------------

/// One group of the breakability census: tilings sharing the last breakable
/// column of the form 3j+2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnbreakableGroup {
    pub j: i64,
    pub weight: Int,
    /// `2 G_{3j+2}`.
    pub expected: Int,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnbreakableCensus {
    pub n: i64,
    pub params: GibonacciParams,
    /// Weighted count of tilings breakable at no column of the form 3j+2.
    pub unbreakable: Int,
    /// `G_1`.
    pub expected_unbreakable: Int,
    pub groups: Vec<UnbreakableGroup>,
    /// `2 * sum G_{3j+2}` over the groups' closed forms.
    pub sum_lhs: Int,
    /// `G_{3n+4} - G_1`.
    pub sum_rhs: Int,
}

impl UnbreakableCensus {
    pub fn holds(&self) -> bool {
        self.unbreakable == self.expected_unbreakable
            && self.groups.iter().all(|g| g.weight == g.expected)
            && self.sum_lhs == self.sum_rhs
    }
}

/// Census of the marked 2×(3n+4) strip under breaks at columns 3j+2.
pub fn unbreakable_census(
    n: i64,
    p: &GibonacciParams,
) -> Result<UnbreakableCensus, BijectionError> {
    if n < 0 {
        return Err(invalid(format!("census needs n >= 0, got {n}")));
    }
    let len = 3 * n + 4;
    if len > 2 * PAIR_ENUMERATION_CAP {
        return Err(invalid(format!("board 2x{len} above the census cap")));
    }
    if !p.is_nonnegative() {
        return Err(invalid("strip weights are color counts; parameters must be >= 0"));
    }
    let board = gib_strip(len, p)?;
    let g = |i: i64| gib(p, i).expect("small index");

    let mut unbreakable = Int::zero();
    let mut by_last: BTreeMap<i64, Int> = BTreeMap::new();
    for t in enumerate_tilings(&board)? {
        let last = (0..=n).rev().find(|j| !t.spans_columns((3 * j + 2) as i32));
        match last {
            None => unbreakable += t.weight(),
            Some(j) => *by_last.entry(j).or_insert_with(Int::zero) += t.weight(),
        }
    }

    let groups: Vec<UnbreakableGroup> = (0..=n)
        .map(|j| UnbreakableGroup {
            j,
            weight: by_last.get(&j).cloned().unwrap_or_else(Int::zero),
            expected: Int::from(2) * g(3 * j + 2),
        })
        .collect();
    let sum_lhs = groups.iter().fold(Int::zero(), |acc, gr| acc + &gr.expected);
    Ok(UnbreakableCensus {
        n,
        params: p.clone(),
        unbreakable,
        expected_unbreakable: p.g1.clone(),
        groups,
        sum_lhs,
        sum_rhs: g(len) - &p.g1,
    })
}

// ---------------------------------------------------------------------------

/// All tilings of a board paired with the board.
pub fn tiled_boards(board: &Board) -> Result<Vec<TiledBoard>, BijectionError> {
    Ok(enumerate_tilings(board)?
        .into_iter()
        .map(|t| TiledBoard::new(board.clone(), t))
        .collect())
}

#[cfg(test)]
#[path = "bijection_tests.rs"]
mod tests;
