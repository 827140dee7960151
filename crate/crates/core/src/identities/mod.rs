//! A machine-checkable registry of Gibonacci, Lucas and Fibonacci
//! identities, with exact left/right evaluators, explicit domains, errata
//! entries and a deterministic verification runner.
//!
//! Every comparison is equality of arbitrary-precision integers. An errata
//! entry carries the uncorrected form together with a witness point where
//! it fails; verifying such an identity checks both behaviors (the
//! uncorrected form fails at the witness, the corrected form passes on the
//! whole grid).

mod registry;

pub use registry::registry;

use crate::rng::SplitMix64;
use crate::sequence::{GibonacciParams, Int};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// One evaluation point: a parameter pair (plus the second pair for
/// two-sequence identities) and the bound index variables.
#[derive(Debug, Clone)]
pub struct Point {
    pub g: GibonacciParams,
    pub h: Option<GibonacciParams>,
    pub n: i64,
    pub m: i64,
    /// The split index usually written N.
    pub split: i64,
    pub p: i64,
    pub r: i64,
}

/// Index variables a descriptor's grid ranges over, in reporting order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    N,
    M,
    Split,
    P,
    R,
}

/// Bound index values of one grid point.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct IdxPoint {
    pub n: i64,
    pub m: i64,
    pub split: i64,
    pub p: i64,
    pub r: i64,
}

impl IdxPoint {
    pub fn of_n(n: i64) -> Self {
        Self { n, ..Self::default() }
    }

    pub fn of_nm(n: i64, m: i64) -> Self {
        Self { n, m, ..Self::default() }
    }

    pub fn of_n_split(n: i64, split: i64) -> Self {
        Self { n, split, ..Self::default() }
    }

    pub fn of_mp(m: i64, p: i64) -> Self {
        Self { m, p, ..Self::default() }
    }

    pub fn of_np(n: i64, p: i64) -> Self {
        Self { n, p, ..Self::default() }
    }

    pub fn of_mr(m: i64, r: i64) -> Self {
        Self { m, r, ..Self::default() }
    }
}

pub type Eval = fn(&Point) -> Int;
pub type Predicate = fn(&Point) -> bool;

/// One exact equation `lhs = rhs`, optionally restricted by a guard.
pub struct Equation {
    pub label: &'static str,
    pub lhs: Eval,
    pub rhs: Eval,
    pub guard: Option<Predicate>,
}

impl Equation {
    pub fn applies(&self, pt: &Point) -> bool {
        self.guard.map_or(true, |g| g(pt))
    }
}

/// The uncorrected form of a misprinted identity plus a concrete witness
/// where it fails.
pub struct Errata {
    pub printed: Vec<Equation>,
    pub witness_params: (i64, i64),
    pub witness: IdxPoint,
    pub note: &'static str,
}

impl Errata {
    pub fn witness_point(&self) -> Point {
        let (g0, g1) = self.witness_params;
        make_point(GibonacciParams::new(g0, g1), None, self.witness)
    }
}

/// A machine-checkable identity: stable id, statement text, parameter
/// domain, grid, exact evaluators and optional errata.
pub struct IdentityDescriptor {
    pub id: &'static str,
    pub title: &'static str,
    pub anchor: &'static str,
    pub uses_second_sequence: bool,
    pub vars: &'static [Var],
    pub grid: fn(&GridBounds) -> Vec<IdxPoint>,
    pub equations: Vec<Equation>,
    pub errata: Option<Errata>,
}

/// Index bounds the grids are generated from.
#[derive(Debug, Clone, Copy)]
pub struct GridBounds {
    pub nmax: i64,
    pub mmax: i64,
}

impl Default for GridBounds {
    fn default() -> Self {
        Self { nmax: 20, mmax: 20 }
    }
}

/// Verification configuration: bounds plus the parameter set.
///
/// The same config (including the seed) always produces the same reports.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub bounds: GridBounds,
    pub params: Vec<GibonacciParams>,
    pub seed: u64,
}

impl RunConfig {
    /// The default desk grid: all pairs over {0, 1, 2, 3, 5} plus eight
    /// seeded random 64-bit pairs.
    pub fn desk(seed: u64) -> Self {
        const SMALL: [i64; 5] = [0, 1, 2, 3, 5];
        let mut params = Vec::new();
        for g0 in SMALL {
            for g1 in SMALL {
                params.push(GibonacciParams::new(g0, g1));
            }
        }
        let mut rng = SplitMix64::new(seed);
        for _ in 0..8 {
            let g0 = Int::from(rng.next_u64());
            let g1 = Int::from(rng.next_u64());
            params.push(GibonacciParams { g0, g1 });
        }
        Self { bounds: GridBounds::default(), params, seed }
    }

    /// A config restricted to a single parameter pair.
    pub fn single_pair(params: GibonacciParams, bounds: GridBounds) -> Self {
        Self { bounds, params: vec![params], seed: 0 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub assignment: BTreeMap<String, String>,
    pub equation: String,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of verifying one identity over a grid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub id: String,
    pub anchor: String,
    pub points: u64,
    pub status: Status,
    pub counterexample: Option<Counterexample>,
    pub errata_applied: bool,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

fn make_point(g: GibonacciParams, h: Option<GibonacciParams>, idx: IdxPoint) -> Point {
    Point { g, h, n: idx.n, m: idx.m, split: idx.split, p: idx.p, r: idx.r }
}

fn assignment(desc: &IdentityDescriptor, pt: &Point) -> BTreeMap<String, String> {
    let mut map = BTreeMap::new();
    map.insert("g0".to_string(), pt.g.g0.to_string());
    map.insert("g1".to_string(), pt.g.g1.to_string());
    if let Some(h) = &pt.h {
        map.insert("h0".to_string(), h.g0.to_string());
        map.insert("h1".to_string(), h.g1.to_string());
    }
    for var in desc.vars {
        match var {
            Var::N => map.insert("n".to_string(), pt.n.to_string()),
            Var::M => map.insert("m".to_string(), pt.m.to_string()),
            Var::Split => map.insert("N".to_string(), pt.split.to_string()),
            Var::P => map.insert("p".to_string(), pt.p.to_string()),
            Var::R => map.insert("r".to_string(), pt.r.to_string()),
        };
    }
    map
}

fn check_equations(
    desc: &IdentityDescriptor,
    equations: &[Equation],
    pt: &Point,
) -> Option<Counterexample> {
    for eq in equations {
        if !eq.applies(pt) {
            continue;
        }
        let lhs = (eq.lhs)(pt);
        let rhs = (eq.rhs)(pt);
        if lhs != rhs {
            return Some(Counterexample {
                assignment: assignment(desc, pt),
                equation: eq.label.to_string(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }
    None
}

fn run_grid(
    desc: &IdentityDescriptor,
    cfg: &RunConfig,
    equations: &[Equation],
) -> (u64, Option<Counterexample>) {
    let idx_points = (desc.grid)(&cfg.bounds);
    let mut points = 0u64;
    let h_choices: Vec<Option<GibonacciParams>> = if desc.uses_second_sequence {
        cfg.params.iter().cloned().map(Some).collect()
    } else {
        vec![None]
    };
    for g in &cfg.params {
        for h in &h_choices {
            for idx in &idx_points {
                let pt = make_point(g.clone(), h.clone(), *idx);
                if !equations.iter().any(|eq| eq.applies(&pt)) {
                    continue;
                }
                points += 1;
                if let Some(cex) = check_equations(desc, equations, &pt) {
                    return (points, Some(cex));
                }
            }
        }
    }
    (points, None)
}

/// Verifies the identity (in its corrected form where errata exist) over
/// the configured grid. For errata entries the uncorrected form must fail
/// at its recorded witness; if it unexpectedly passes there, the report
/// fails.
pub fn verify(desc: &IdentityDescriptor, cfg: &RunConfig) -> VerificationReport {
    if let Some(errata) = &desc.errata {
        let wpt = errata.witness_point();
        if check_equations(desc, &errata.printed, &wpt).is_none() {
            return VerificationReport {
                id: desc.id.to_string(),
                anchor: desc.anchor.to_string(),
                points: 1,
                status: Status::Fail,
                counterexample: Some(Counterexample {
                    assignment: assignment(desc, &wpt),
                    equation: "uncorrected form unexpectedly passed at its witness".to_string(),
                    lhs: String::new(),
                    rhs: String::new(),
                }),
                errata_applied: true,
            };
        }
    }
    let (points, counterexample) = run_grid(desc, cfg, &desc.equations);
    VerificationReport {
        id: desc.id.to_string(),
        anchor: desc.anchor.to_string(),
        points,
        status: if counterexample.is_none() { Status::Pass } else { Status::Fail },
        counterexample,
        errata_applied: desc.errata.is_some(),
    }
}

/// Verifies the identity exactly as printed (no correction applied),
/// checking the recorded witness before the rest of the grid. For
/// identities without errata this is the same as [`verify`].
pub fn verify_printed(desc: &IdentityDescriptor, cfg: &RunConfig) -> VerificationReport {
    let Some(errata) = &desc.errata else {
        return verify(desc, cfg);
    };
    let wpt = errata.witness_point();
    let mut points = 1u64;
    let mut counterexample = check_equations(desc, &errata.printed, &wpt);
    if counterexample.is_none() {
        let (grid_points, cex) = run_grid(desc, cfg, &errata.printed);
        points += grid_points;
        counterexample = cex;
    }
    VerificationReport {
        id: desc.id.to_string(),
        anchor: desc.anchor.to_string(),
        points,
        status: if counterexample.is_none() { Status::Pass } else { Status::Fail },
        counterexample,
        errata_applied: false,
    }
}

/// Runs every registry entry on the configured grid, in registry order.
pub fn verify_all(cfg: &RunConfig) -> Vec<VerificationReport> {
    registry().iter().map(|desc| verify(desc, cfg)).collect()
}

/// Looks up one descriptor by id.
pub fn find(id: &str) -> Option<IdentityDescriptor> {
    registry().into_iter().find(|d| d.id == id)
}
