//! The identity registry: groups A (Lucas boards), B (Gibonacci board
//! interpretations), C (one-sequence expansions), D (two-interleaved
//! sequences G and G'), E (classical sums and Cassini/Catalan forms),
//! F (divisibility, breakability and lacunary forms).
//!
//! Binomial convention: `C(x, r) = 0` unless x is a nonnegative integer
//! and `0 <= r <= x`; upper indices written `(expr)/2` are zero when expr
//! is odd. Sums with empty index ranges are zero. Negative sequence
//! indices follow the backward recurrence.

use super::{Equation, Errata, Eval, GridBounds, IdentityDescriptor, IdxPoint, Point, Var};
use crate::number_theory::{lacunary_fib, lacunary_gib};
use crate::sequence::{f_comb, fib, gib, lucas, Int};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

// --- evaluator helpers -----------------------------------------------------

fn gv(pt: &Point, i: i64) -> Int {
    gib(&pt.g, i).expect("grid index within sequence bounds")
}

fn gsv(pt: &Point, i: i64) -> Int {
    gib(&pt.g.swapped(), i).expect("grid index within sequence bounds")
}

fn hv(pt: &Point, i: i64) -> Int {
    gib(pt.h.as_ref().expect("two-sequence identity"), i)
        .expect("grid index within sequence bounds")
}

fn fv(i: i64) -> Int {
    f_comb(i).expect("grid index within sequence bounds")
}

fn fibv(i: i64) -> Int {
    fib(i).expect("grid index within sequence bounds")
}

fn lv(i: i64) -> Int {
    lucas(i).expect("grid index within sequence bounds")
}

/// `C(x, r)`: zero unless `0 <= r <= x`.
pub fn binom(x: i64, r: i64) -> Int {
    if r < 0 || x < 0 || r > x {
        return Int::zero();
    }
    num_integer::binomial(Int::from(x), Int::from(r))
}

/// `C(num/2, r)`: zero when num is odd (non-integer upper index).
pub fn binom_half(num: i64, r: i64) -> Int {
    if num.rem_euclid(2) != 0 {
        return Int::zero();
    }
    binom(num / 2, r)
}

fn sgn(k: i64) -> Int {
    if k.rem_euclid(2) == 0 {
        Int::one()
    } else {
        -Int::one()
    }
}

/// `a` reduced into `[0, |m|)`; `a` itself when m = 0, so a zero residue
/// then means exact equality.
fn modz(a: &Int, m: &Int) -> Int {
    if m.is_zero() {
        a.clone()
    } else {
        a.mod_floor(&m.abs())
    }
}

fn int_pow(base: &Int, exponent: i64) -> Int {
    let mut out = Int::one();
    for _ in 0..exponent {
        out *= base;
    }
    out
}

fn eq(label: &'static str, lhs: Eval, rhs: Eval) -> Equation {
    Equation { label, lhs, rhs, guard: None }
}

fn eq_if(label: &'static str, guard: fn(&Point) -> bool, lhs: Eval, rhs: Eval) -> Equation {
    Equation { label, lhs, rhs, guard: Some(guard) }
}

// --- grid helpers ----------------------------------------------------------

fn grid_n(from: i64, b: &GridBounds) -> Vec<IdxPoint> {
    (from..=b.nmax).map(IdxPoint::of_n).collect()
}

fn grid_nm(n_from: i64, m_from: i64, b: &GridBounds) -> Vec<IdxPoint> {
    let mut v = Vec::new();
    for n in n_from..=b.nmax {
        for m in m_from..=b.mmax {
            v.push(IdxPoint::of_nm(n, m));
        }
    }
    v
}

fn grid_n_split(n_from: i64, b: &GridBounds) -> Vec<IdxPoint> {
    let mut v = Vec::new();
    for n in n_from..=b.nmax {
        for split in 1..=n {
            v.push(IdxPoint::of_n_split(n, split));
        }
    }
    v
}

/// m from `m_from`, p over its full admissible range 2..=m+2 (beyond m+1
/// every tiling has fewer dominoes of the counted kind than p, so the
/// closing sums saturate).
fn grid_mp(m_from: i64, b: &GridBounds) -> Vec<IdxPoint> {
    let mut v = Vec::new();
    for m in m_from..=b.mmax {
        for p in 2..=m + 2 {
            v.push(IdxPoint::of_mp(m, p));
        }
    }
    v
}

fn grid_step(b: &GridBounds) -> Vec<IdxPoint> {
    let mut v = Vec::new();
    for split in 2..=8 {
        for n in split..=b.nmax {
            v.push(IdxPoint::of_n_split(n, split));
        }
    }
    v
}

// --- the registry ----------------------------------------------------------

/// All identity descriptors, in stable id order.
pub fn registry() -> Vec<IdentityDescriptor> {
    let mut v = Vec::new();
    v.extend(group_a());
    v.extend(group_b());
    v.extend(group_c());
    v.extend(group_d());
    v.extend(group_e());
    v.extend(group_f());
    v
}

fn group_a() -> Vec<IdentityDescriptor> {
    vec![
        IdentityDescriptor {
            id: "A1",
            title: "Lucas board count",
            anchor: "f(n) + f(n-2) = L(n)",
            uses_second_sequence: false,
            vars: &[Var::N],
            grid: |b| grid_n(1, b),
            equations: vec![eq("", |pt| fv(pt.n) + fv(pt.n - 2), |pt| lv(pt.n))],
            errata: None,
        },
        IdentityDescriptor {
            id: "A2",
            title: "squared Lucas split of the six-row board",
            anchor: "L(n)^2 + f(n)^2 = f(n-2)^2 f(6) + 2 f(n-2) f(n-3) f(4) + f(n-3)^2 f(2)",
            uses_second_sequence: false,
            vars: &[Var::N],
            grid: |b| grid_n(3, b),
            equations: vec![eq(
                "",
                |pt| lv(pt.n) * lv(pt.n) + fv(pt.n) * fv(pt.n),
                |pt| {
                    let n = pt.n;
                    fv(n - 2) * fv(n - 2) * fv(6)
                        + Int::from(2) * fv(n - 2) * fv(n - 3) * fv(4)
                        + fv(n - 3) * fv(n - 3) * fv(2)
                },
            )],
            errata: None,
        },
        IdentityDescriptor {
            id: "A3",
            title: "two-break split of the m-row board",
            anchor: "L(n)^2 f(m-6) + 2 L(n) f(n) f(m-7) + f(n)^2 f(m-8) \
                     = f(n-2)^2 f(m) + 2 f(n-2) f(n-3) f(m-2) + f(n-3)^2 f(m-4)",
            uses_second_sequence: false,
            vars: &[Var::N, Var::M],
            grid: |b| grid_nm(2, 5, b),
            equations: vec![eq(
                "",
                |pt| {
                    let (n, m) = (pt.n, pt.m);
                    lv(n) * lv(n) * fv(m - 6)
                        + Int::from(2) * lv(n) * fv(n) * fv(m - 7)
                        + fv(n) * fv(n) * fv(m - 8)
                },
                |pt| {
                    let (n, m) = (pt.n, pt.m);
                    fv(n - 2) * fv(n - 2) * fv(m)
                        + Int::from(2) * fv(n - 2) * fv(n - 3) * fv(m - 2)
                        + fv(n - 3) * fv(n - 3) * fv(m - 4)
                },
            )],
            errata: None,
        },
    ]
}

fn group_b() -> Vec<IdentityDescriptor> {
    vec![
        IdentityDescriptor {
            id: "B1",
            title: "colored Lucas-board count",
            anchor: "G1 f(n) + (G0 - G1) f(n-2) = G(n)",
            uses_second_sequence: false,
            vars: &[Var::N],
            grid: |b| grid_n(1, b),
            equations: vec![eq(
                "",
                |pt| &pt.g.g1 * fv(pt.n) + (&pt.g.g0 - &pt.g.g1) * fv(pt.n - 2),
                |pt| gv(pt, pt.n),
            )],
            errata: None,
        },
        IdentityDescriptor {
            id: "B2",
            title: "three-mark strip count",
            anchor: "G0 f(n-2) + G1 f(n-1) = G(n)",
            uses_second_sequence: false,
            vars: &[Var::N],
            grid: |b| grid_n(1, b),
            equations: vec![eq(
                "",
                |pt| &pt.g.g0 * fv(pt.n - 2) + &pt.g.g1 * fv(pt.n - 1),
                |pt| gv(pt, pt.n),
            )],
            errata: None,
        },
    ]
}

fn group_c() -> Vec<IdentityDescriptor> {
    vec![
        IdentityDescriptor {
            id: "C1",
            title: "split-point invariance of the double-marked strip",
            anchor: "G(N) G(n-N) + G(N-1) G(n-N-1) = G1 G(n-1) + G0 G(n-2)",
            uses_second_sequence: false,
            vars: &[Var::N, Var::Split],
            grid: |b| grid_n_split(1, b),
            equations: vec![eq(
                "",
                |pt| {
                    let (n, s) = (pt.n, pt.split);
                    gv(pt, s) * gv(pt, n - s) + gv(pt, s - 1) * gv(pt, n - s - 1)
                },
                |pt| &pt.g.g1 * gv(pt, pt.n - 1) + &pt.g.g0 * gv(pt, pt.n - 2),
            )],
            errata: None,
        },
        IdentityDescriptor {
            id: "C2",
            title: "sum of adjacent squares",
            anchor: "G(n+1)^2 + G(n)^2 = G0 G(2n) + G1 G(2n+1)",
            uses_second_sequence: false,
            vars: &[Var::N],
            grid: |b| grid_n(0, b),
            equations: vec![eq(
                "",
                |pt| gv(pt, pt.n + 1) * gv(pt, pt.n + 1) + gv(pt, pt.n) * gv(pt, pt.n),
                |pt| &pt.g.g0 * gv(pt, 2 * pt.n) + &pt.g.g1 * gv(pt, 2 * pt.n + 1),
            )],
            errata: None,
        },
        IdentityDescriptor {
            id: "C3",
            title: "difference of next-nearest squares",
            anchor: "G(n+2)^2 - G(n)^2 = G0 G(2n+1) + G1 G(2n+2)",
            uses_second_sequence: false,
            vars: &[Var::N],
            grid: |b| grid_n(0, b),
            equations: vec![eq(
                "",
                |pt| gv(pt, pt.n + 2) * gv(pt, pt.n + 2) - gv(pt, pt.n) * gv(pt, pt.n),
                |pt| &pt.g.g0 * gv(pt, 2 * pt.n + 1) + &pt.g.g1 * gv(pt, 2 * pt.n + 2),
            )],
            errata: None,
        },
        IdentityDescriptor {
            id: "C4",
            title: "Fibonacci square difference",
            anchor: "F(n+1)^2 - F(n-1)^2 = F(2n)",
            uses_second_sequence: false,
            vars: &[Var::N],
            grid: |b| grid_n(0, b),
            equations: vec![eq(
                "",
                |pt| fibv(pt.n + 1) * fibv(pt.n + 1) - fibv(pt.n - 1) * fibv(pt.n - 1),
                |pt| fibv(2 * pt.n),
            )],
            errata: None,
        },
        IdentityDescriptor {
            id: "C5",
            title: "second vertical domino, odd-length strip",
            anchor: "(G1-G0) sum_{j=1}^{n-1} G(2n-1-2j) + G0 sum_{j=1}^{n-1} j G(2n-1-2j) \
                     + 2 G0 G1 + G0^2 (n-2) = G1 G(2n-2) + G0 G(2n-3)",
            uses_second_sequence: false,
            vars: &[Var::N],
            grid: |b| grid_n(2, b),
            equations: vec![eq(
                "",
                |pt| {
                    let n = pt.n;
                    let s1: Int = (1..n).map(|j| gv(pt, 2 * n - 1 - 2 * j)).sum();
                    let s2: Int =
                        (1..n).map(|j| Int::from(j) * gv(pt, 2 * n - 1 - 2 * j)).sum();
                    (&pt.g.g1 - &pt.g.g0) * s1
                        + &pt.g.g0 * s2
                        + Int::from(2) * &pt.g.g0 * &pt.g.g1
                        + &pt.g.g0 * &pt.g.g0 * Int::from(n - 2)
                },
                |pt| &pt.g.g1 * gv(pt, 2 * pt.n - 2) + &pt.g.g0 * gv(pt, 2 * pt.n - 3),
            )],
            errata: None,
        },
        IdentityDescriptor {
            id: "C6",
            title: "second vertical domino, even-length strip",
            anchor: "(G1-G0) sum_{j=1}^{n-1} G(2n-2j) + G0 sum_{j=1}^{n-1} j G(2n-2j) \
                     + G0^2 + (G1 + (n-1) G0) G1 = G1 G(2n-1) + G0 G(2n-2)",
            uses_second_sequence: false,
            vars: &[Var::N],
            grid: |b| grid_n(2, b),
            equations: vec![eq(
                "",
                |pt| {
                    let n = pt.n;
                    let s1: Int = (1..n).map(|j| gv(pt, 2 * n - 2 * j)).sum();
                    let s2: Int = (1..n).map(|j| Int::from(j) * gv(pt, 2 * n - 2 * j)).sum();
                    (&pt.g.g1 - &pt.g.g0) * s1
                        + &pt.g.g0 * s2
                        + &pt.g.g0 * &pt.g.g0
                        + (&pt.g.g1 + Int::from(n - 1) * &pt.g.g0) * &pt.g.g1
                },
                |pt| &pt.g.g1 * gv(pt, 2 * pt.n - 1) + &pt.g.g0 * gv(pt, 2 * pt.n - 2),
            )],
            errata: None,
        },
        IdentityDescriptor {
            id: "C7",
            title: "p-th vertical domino expansion (double-marked strip)",
            anchor: "sum_{k=p, k=p mod 2}^{m-1} (G1 C((k+p-4)/2, p-2) + G0 C((k+p-4)/2, p-1)) G(m-k) \
                     + (G1 C((m+p-4)/2, p-2) + G0 C((m+p-4)/2, p-1)) G1 \
                     + sum_{t=0, t=m mod 2}^{p-1} (G1^2 C((m+t-4)/2, t-2) + 2 G0 G1 C((m+t-4)/2, t-1) \
                     + G0^2 C((m+t-4)/2, t)) = G1 G(m-1) + G0 G(m-2)",
            uses_second_sequence: false,
            vars: &[Var::M, Var::P],
            grid: |b| grid_mp(3, b),
            equations: vec![eq(
                "",
                |pt| {
                    let (m, p) = (pt.m, pt.p);
                    let (g0, g1) = (&pt.g.g0, &pt.g.g1);
                    let mut total = Int::zero();
                    let mut k = p;
                    while k <= m - 1 {
                        total += (g1 * binom_half(k + p - 4, p - 2)
                            + g0 * binom_half(k + p - 4, p - 1))
                            * gv(pt, m - k);
                        k += 2;
                    }
                    total += (g1 * binom_half(m + p - 4, p - 2)
                        + g0 * binom_half(m + p - 4, p - 1))
                        * g1;
                    for t in 0..=p - 1 {
                        if (t - m).rem_euclid(2) == 0 {
                            total += g1 * g1 * binom_half(m + t - 4, t - 2)
                                + Int::from(2) * g0 * g1 * binom_half(m + t - 4, t - 1)
                                + g0 * g0 * binom_half(m + t - 4, t);
                        }
                    }
                    total
                },
                |pt| &pt.g.g1 * gv(pt, pt.m - 1) + &pt.g.g0 * gv(pt, pt.m - 2),
            )],
            errata: None,
        },
        IdentityDescriptor {
            id: "C8",
            title: "combined second-vertical expansion",
            anchor: "(G1-G0) sum_{j=1}^{floor((n-1)/2)} G(n-2j) + G0 sum_{j=1}^{floor((n-1)/2)} j G(n-2j) \
                     + (G1 C((n-2)/2, 0) + G0 C((n-2)/2, 1)) G1 \
                     + sum_{t=0, t=n mod 2}^{1} (2 G0 G1 t + G0^2 C((n+t-4)/2, t)) \
                     = G1 G(n-1) + G0 G(n-2)",
            uses_second_sequence: false,
            vars: &[Var::N],
            grid: |b| grid_n(3, b),
            equations: vec![eq(
                "",
                |pt| {
                    let n = pt.n;
                    let (g0, g1) = (&pt.g.g0, &pt.g.g1);
                    let top = (n - 1).div_euclid(2);
                    let s1: Int = (1..=top).map(|j| gv(pt, n - 2 * j)).sum();
                    let s2: Int = (1..=top).map(|j| Int::from(j) * gv(pt, n - 2 * j)).sum();
                    let mut total = (g1 - g0) * s1 + g0 * s2;
                    total += (g1 * binom_half(n - 2, 0) + g0 * binom_half(n - 2, 1)) * g1;
                    for t in 0..=1 {
                        if (t - n).rem_euclid(2) == 0 {
                            total += Int::from(2) * g0 * g1 * Int::from(t)
                                + g0 * g0 * binom_half(n + t - 4, t);
                        }
                    }
                    total
                },
                |pt| &pt.g.g1 * gv(pt, pt.n - 1) + &pt.g.g0 * gv(pt, pt.n - 2),
            )],
            errata: None,
        },
        IdentityDescriptor {
            id: "C9",
            title: "p-th horizontal domino expansion (double-marked strip)",
            anchor: "sum_{k=2p}^{m} (G1 C(k-p-2, p-1) + G0 C(k-p-2, p-2)) G(m-k) \
                     + sum_{t=0}^{p-1} (G1^2 C(m-t-2, t) + 2 G0 G1 C(m-t-2, t-1) + G0^2 C(m-t-2, t-2)) \
                     = G1 G(m-1) + G0 G(m-2)",
            uses_second_sequence: false,
            vars: &[Var::M, Var::P],
            grid: |b| grid_mp(3, b),
            equations: vec![eq(
                "",
                |pt| {
                    let (m, p) = (pt.m, pt.p);
                    let (g0, g1) = (&pt.g.g0, &pt.g.g1);
                    let mut total = Int::zero();
                    for k in 2 * p..=m {
                        total += (g1 * binom(k - p - 2, p - 1) + g0 * binom(k - p - 2, p - 2))
                            * gv(pt, m - k);
                    }
                    for t in 0..=p - 1 {
                        total += g1 * g1 * binom(m - t - 2, t)
                            + Int::from(2) * g0 * g1 * binom(m - t - 2, t - 1)
                            + g0 * g0 * binom(m - t - 2, t - 2);
                    }
                    total
                },
                |pt| &pt.g.g1 * gv(pt, pt.m - 1) + &pt.g.g0 * gv(pt, pt.m - 2),
            )],
            errata: None,
        },
        IdentityDescriptor {
            id: "C10",
            title: "f-weighted second-vertical sums",
            anchor: "sum_{j=1}^{n-1} f(2n-1-2j) (G1 + (j-1) G0) + G1 + (n-1) G0 = G(2n-1); \
                     sum_{j=1}^{n-1} f(2n-2j) (G1 + (j-1) G0) + G1 + n G0 = G(2n)",
            uses_second_sequence: false,
            vars: &[Var::N],
            grid: |b| grid_n(1, b),
            equations: vec![
                eq(
                    "odd index",
                    |pt| {
                        let n = pt.n;
                        let s: Int = (1..n)
                            .map(|j| {
                                fv(2 * n - 1 - 2 * j)
                                    * (&pt.g.g1 + Int::from(j - 1) * &pt.g.g0)
                            })
                            .sum();
                        s + &pt.g.g1 + Int::from(n - 1) * &pt.g.g0
                    },
                    |pt| gv(pt, 2 * pt.n - 1),
                ),
                eq(
                    "even index",
                    |pt| {
                        let n = pt.n;
                        let s: Int = (1..n)
                            .map(|j| {
                                fv(2 * n - 2 * j) * (&pt.g.g1 + Int::from(j - 1) * &pt.g.g0)
                            })
                            .sum();
                        s + &pt.g.g1 + Int::from(n) * &pt.g.g0
                    },
                    |pt| gv(pt, 2 * pt.n),
                ),
            ],
            errata: None,
        },
        IdentityDescriptor {
            id: "C11",
            title: "index-weighted second-vertical sum",
            anchor: "sum_{j=1}^{n-1} j G(2n-1-2j) + G1 + (n-1) G0 = G(2n-1)",
            uses_second_sequence: false,
            vars: &[Var::N],
            grid: |b| grid_n(1, b),
            equations: vec![eq(
                "",
                |pt| {
                    let n = pt.n;
                    let s: Int = (1..n).map(|j| Int::from(j) * gv(pt, 2 * n - 1 - 2 * j)).sum();
                    s + &pt.g.g1 + Int::from(n - 1) * &pt.g.g0
                },
                |pt| gv(pt, 2 * pt.n - 1),
            )],
            errata: None,
        },
        IdentityDescriptor {
            id: "C12",
            title: "floor-combined weighted sums",
            anchor: "sum_{j=1}^{floor((n-1)/2)} f(n-2j) (G1 + (j-1) G0) + G1 + floor(n/2) G0 = G(n); \
                     sum_{j=1}^{floor((n-1)/2)} j G(n-2j) + G1 + floor(n/2) G0 = G(n) for odd n",
            uses_second_sequence: false,
            vars: &[Var::N],
            grid: |b| grid_n(1, b),
            equations: vec![
                eq(
                    "f-weighted",
                    |pt| {
                        let n = pt.n;
                        let top = (n - 1).div_euclid(2);
                        let s: Int = (1..=top)
                            .map(|j| fv(n - 2 * j) * (&pt.g.g1 + Int::from(j - 1) * &pt.g.g0))
                            .sum();
                        s + &pt.g.g1 + Int::from(n.div_euclid(2)) * &pt.g.g0
                    },
                    |pt| gv(pt, pt.n),
                ),
                eq_if(
                    "index-weighted, odd n",
                    |pt| pt.n % 2 == 1,
                    |pt| {
                        let n = pt.n;
                        let top = (n - 1).div_euclid(2);
                        let s: Int = (1..=top).map(|j| Int::from(j) * gv(pt, n - 2 * j)).sum();
                        s + &pt.g.g1 + Int::from(n.div_euclid(2)) * &pt.g.g0
                    },
                    |pt| gv(pt, pt.n),
                ),
            ],
            errata: None,
        },
        IdentityDescriptor {
            id: "C13",
            title: "f-weighted p-th vertical expansion (single-marked strip)",
            anchor: "sum_{k=p, k=p mod 2}^{m} (G1 C((k+p-4)/2, p-2) + G0 C((k+p-4)/2, p-1)) f(m-k) \
                     + sum_{t=0, t=m mod 2}^{p-1} (G1 C((m+t-2)/2, t-1) + G0 C((m+t-2)/2, t)) = G(m)",
            uses_second_sequence: false,
            vars: &[Var::M, Var::P],
            grid: |b| grid_mp(1, b),
            equations: vec![eq(
                "",
                |pt| c13_first_sum(pt) + c13_tail_sum(pt, true),
                |pt| gv(pt, pt.m),
            )],
            errata: Some(Errata {
                printed: vec![eq(
                    "",
                    |pt| c13_first_sum(pt) + c13_tail_sum(pt, false),
                    |pt| gv(pt, pt.m),
                )],
                witness_params: (1, 1),
                witness: IdxPoint::of_mp(5, 2),
                note: "the t-sum's binomial upper index reads (m-t-2)/2; counting tilings \
                       with exactly t vertical dominoes gives (m+t-2)/2",
            }),
        },
        IdentityDescriptor {
            id: "C14",
            title: "position-counted p-th vertical expansion (single-marked strip)",
            anchor: "sum_{k=p, k=p mod 2}^{m-1} C((k+p-2)/2, p-1) G(m-k) + C((m+p-2)/2, p-1) G1 \
                     + sum_{t=0, t=m mod 2}^{p-1} (G1 C((m+t-2)/2, t-1) + G0 C((m+t-2)/2, t)) = G(m)",
            uses_second_sequence: false,
            vars: &[Var::M, Var::P],
            grid: |b| grid_mp(1, b),
            equations: vec![eq(
                "",
                |pt| c14_first_sum(pt) + c13_tail_sum(pt, true),
                |pt| gv(pt, pt.m),
            )],
            errata: Some(Errata {
                printed: vec![eq(
                    "",
                    |pt| c14_first_sum(pt) + c13_tail_sum(pt, false),
                    |pt| gv(pt, pt.m),
                )],
                witness_params: (1, 1),
                witness: IdxPoint::of_mp(5, 2),
                note: "same t-sum misprint as C13: (m-t-2)/2 should read (m+t-2)/2",
            }),
        },
        IdentityDescriptor {
            id: "C15",
            title: "f-weighted p-th horizontal expansion (single-marked strip)",
            anchor: "sum_{k=2p}^{m} (G1 C(k-p-2, p-1) + G0 C(k-p-2, p-2)) f(m-k) \
                     + sum_{t=0}^{p-1} (G1 C(m-t-1, t) + G0 C(m-t-1, t-1)) = G(m)",
            uses_second_sequence: false,
            vars: &[Var::M, Var::P],
            grid: |b| grid_mp(1, b),
            equations: vec![eq(
                "",
                |pt| {
                    let (m, p) = (pt.m, pt.p);
                    let (g0, g1) = (&pt.g.g0, &pt.g.g1);
                    let mut total = Int::zero();
                    for k in 2 * p..=m {
                        total += (g1 * binom(k - p - 2, p - 1) + g0 * binom(k - p - 2, p - 2))
                            * fv(m - k);
                    }
                    total + c15_tail_sum(pt)
                },
                |pt| gv(pt, pt.m),
            )],
            errata: None,
        },
        IdentityDescriptor {
            id: "C16",
            title: "position-counted p-th horizontal expansion (single-marked strip)",
            anchor: "sum_{k=2p}^{m} C(k-p-1, p-1) G(m-k) \
                     + sum_{t=0}^{p-1} (G1 C(m-t-1, t) + G0 C(m-t-1, t-1)) = G(m)",
            uses_second_sequence: false,
            vars: &[Var::M, Var::P],
            grid: |b| grid_mp(1, b),
            equations: vec![eq(
                "",
                |pt| {
                    let (m, p) = (pt.m, pt.p);
                    let mut total = Int::zero();
                    for k in 2 * p..=m {
                        total += binom(k - p - 1, p - 1) * gv(pt, m - k);
                    }
                    total + c15_tail_sum(pt)
                },
                |pt| gv(pt, pt.m),
            )],
            errata: None,
        },
    ]
}

fn c13_first_sum(pt: &Point) -> Int {
    let (m, p) = (pt.m, pt.p);
    let (g0, g1) = (&pt.g.g0, &pt.g.g1);
    let mut total = Int::zero();
    let mut k = p;
    while k <= m {
        total += (g1 * binom_half(k + p - 4, p - 2) + g0 * binom_half(k + p - 4, p - 1))
            * fv(m - k);
        k += 2;
    }
    total
}

fn c14_first_sum(pt: &Point) -> Int {
    let (m, p) = (pt.m, pt.p);
    let mut total = Int::zero();
    let mut k = p;
    while k <= m - 1 {
        total += binom_half(k + p - 2, p - 1) * gv(pt, m - k);
        k += 2;
    }
    total + binom_half(m + p - 2, p - 1) * &pt.g.g1
}

/// t-sum shared by C13/C14; `corrected` selects the (m+t-2)/2 upper index,
/// otherwise the misprinted (m-t-2)/2 form.
fn c13_tail_sum(pt: &Point, corrected: bool) -> Int {
    let (m, p) = (pt.m, pt.p);
    let (g0, g1) = (&pt.g.g0, &pt.g.g1);
    let mut total = Int::zero();
    for t in 0..=p - 1 {
        if (t - m).rem_euclid(2) == 0 {
            let num = if corrected { m + t - 2 } else { m - t - 2 };
            total += g1 * binom_half(num, t - 1) + g0 * binom_half(num, t);
        }
    }
    total
}

fn c15_tail_sum(pt: &Point) -> Int {
    let (m, p) = (pt.m, pt.p);
    let (g0, g1) = (&pt.g.g0, &pt.g.g1);
    let mut total = Int::zero();
    for t in 0..=p - 1 {
        total += g1 * binom(m - t - 1, t) + g0 * binom(m - t - 1, t - 1);
    }
    total
}

fn group_d() -> Vec<IdentityDescriptor> {
    vec![
        IdentityDescriptor {
            id: "D1",
            title: "cross-difference of a sequence and its swap",
            anchor: "G0 (G(n) - G'(n-1)) = G1 (G'(n) - G(n-1))",
            uses_second_sequence: false,
            vars: &[Var::N],
            grid: |b| grid_n(1, b),
            equations: vec![eq(
                "",
                |pt| &pt.g.g0 * (gv(pt, pt.n) - gsv(pt, pt.n - 1)),
                |pt| &pt.g.g1 * (gsv(pt, pt.n) - gv(pt, pt.n - 1)),
            )],
            errata: None,
        },
        IdentityDescriptor {
            id: "D2",
            title: "mixed split-point invariance",
            anchor: "G(N) G'(n-N) + G(N-1) G'(n-N-1) = G0 G(n-1) + G1 G(n-2) \
                     = G1 G'(n-1) + G0 G'(n-2); at N = n/2 this gives \
                     G(n) G'(n) + G(n-1) G'(n-1) = G0 G(2n-1) + G1 G(2n-2)",
            uses_second_sequence: false,
            vars: &[Var::N, Var::Split],
            grid: |b| grid_n_split(2, b),
            equations: vec![
                eq(
                    "first form",
                    |pt| {
                        let (n, s) = (pt.n, pt.split);
                        gv(pt, s) * gsv(pt, n - s) + gv(pt, s - 1) * gsv(pt, n - s - 1)
                    },
                    |pt| &pt.g.g0 * gv(pt, pt.n - 1) + &pt.g.g1 * gv(pt, pt.n - 2),
                ),
                eq(
                    "second form",
                    |pt| {
                        let (n, s) = (pt.n, pt.split);
                        gv(pt, s) * gsv(pt, n - s) + gv(pt, s - 1) * gsv(pt, n - s - 1)
                    },
                    |pt| &pt.g.g1 * gsv(pt, pt.n - 1) + &pt.g.g0 * gsv(pt, pt.n - 2),
                ),
                eq_if(
                    "corollary, first form",
                    |pt| pt.split == 1,
                    |pt| {
                        let n = pt.n;
                        gv(pt, n) * gsv(pt, n) + gv(pt, n - 1) * gsv(pt, n - 1)
                    },
                    |pt| &pt.g.g0 * gv(pt, 2 * pt.n - 1) + &pt.g.g1 * gv(pt, 2 * pt.n - 2),
                ),
                eq_if(
                    "corollary, second form",
                    |pt| pt.split == 1,
                    |pt| {
                        let n = pt.n;
                        gv(pt, n) * gsv(pt, n) + gv(pt, n - 1) * gsv(pt, n - 1)
                    },
                    |pt| &pt.g.g1 * gsv(pt, 2 * pt.n - 1) + &pt.g.g0 * gsv(pt, 2 * pt.n - 2),
                ),
            ],
            errata: None,
        },
        IdentityDescriptor {
            id: "D3",
            title: "swap difference and its congruences",
            anchor: "G(n) - G'(n) = (G1 - G0) f(n-3); G(n) = G'(n) mod f(n-3); \
                     G(n) = G'(n) mod (G1 - G0)",
            uses_second_sequence: false,
            vars: &[Var::N],
            grid: |b| grid_n(0, b),
            equations: vec![
                eq_if(
                    "difference",
                    |pt| pt.n >= 3,
                    |pt| gv(pt, pt.n) - gsv(pt, pt.n),
                    |pt| (&pt.g.g1 - &pt.g.g0) * fv(pt.n - 3),
                ),
                eq_if(
                    "mod f(n-3)",
                    |pt| pt.n >= 3,
                    |pt| modz(&(gv(pt, pt.n) - gsv(pt, pt.n)), &fv(pt.n - 3)),
                    |_| Int::zero(),
                ),
                eq(
                    "mod (G1 - G0)",
                    |pt| modz(&(gv(pt, pt.n) - gsv(pt, pt.n)), &(&pt.g.g1 - &pt.g.g0)),
                    |_| Int::zero(),
                ),
            ],
            errata: None,
        },
        IdentityDescriptor {
            id: "D4",
            title: "weighted swap difference",
            anchor: "G1 (G(n) - G'(n)) + G0 (G(n-1) - G'(n-1)) = (G1 - G0) G(n-2)",
            uses_second_sequence: false,
            vars: &[Var::N],
            grid: |b| grid_n(2, b),
            equations: vec![eq(
                "",
                |pt| {
                    &pt.g.g1 * (gv(pt, pt.n) - gsv(pt, pt.n))
                        + &pt.g.g0 * (gv(pt, pt.n - 1) - gsv(pt, pt.n - 1))
                },
                |pt| (&pt.g.g1 - &pt.g.g0) * gv(pt, pt.n - 2),
            )],
            errata: None,
        },
        IdentityDescriptor {
            id: "D5",
            title: "two-arm board, f-weighted form",
            anchor: "G(n) f(m-2) + G0 f(n-2) f(m-3) = G'(m) f(n-2) + G1 f(n-3) f(m-2)",
            uses_second_sequence: false,
            vars: &[Var::N, Var::M],
            grid: |b| grid_nm(3, 3, b),
            equations: vec![eq(
                "",
                |pt| gv(pt, pt.n) * fv(pt.m - 2) + &pt.g.g0 * fv(pt.n - 2) * fv(pt.m - 3),
                |pt| gsv(pt, pt.m) * fv(pt.n - 2) + &pt.g.g1 * fv(pt.n - 3) * fv(pt.m - 2),
            )],
            errata: None,
        },
        IdentityDescriptor {
            id: "D6",
            title: "two-arm board, G-weighted form",
            anchor: "(G1 G(n-1) + G0 G(n-2)) G(m-2) + G0 G(n-2) G(m-3) \
                     = (G1 G'(m-1) + G0 G'(m-2)) G(n-2) + G1 G(n-3) G(m-2)",
            uses_second_sequence: false,
            vars: &[Var::N, Var::M],
            grid: |b| grid_nm(3, 3, b),
            equations: vec![eq(
                "",
                |pt| {
                    let (n, m) = (pt.n, pt.m);
                    (&pt.g.g1 * gv(pt, n - 1) + &pt.g.g0 * gv(pt, n - 2)) * gv(pt, m - 2)
                        + &pt.g.g0 * gv(pt, n - 2) * gv(pt, m - 3)
                },
                |pt| {
                    let (n, m) = (pt.n, pt.m);
                    (&pt.g.g1 * gsv(pt, m - 1) + &pt.g.g0 * gsv(pt, m - 2)) * gv(pt, n - 2)
                        + &pt.g.g1 * gv(pt, n - 3) * gv(pt, m - 2)
                },
            )],
            errata: None,
        },
        IdentityDescriptor {
            id: "D7",
            title: "corner-extended board, product form",
            anchor: "(G0 G(n) + G1 G(n-1) - G1 G'(n-2)) G(n-1) \
                     = (G1 G'(n) + G0 G'(n-1) - G0 G(n-2)) G'(n-1)",
            uses_second_sequence: false,
            vars: &[Var::N],
            grid: |b| grid_n(2, b),
            equations: vec![eq(
                "",
                |pt| {
                    let n = pt.n;
                    (&pt.g.g0 * gv(pt, n) + &pt.g.g1 * gv(pt, n - 1)
                        - &pt.g.g1 * gsv(pt, n - 2))
                        * gv(pt, n - 1)
                },
                |pt| {
                    let n = pt.n;
                    (&pt.g.g1 * gsv(pt, n) + &pt.g.g0 * gsv(pt, n - 1)
                        - &pt.g.g0 * gv(pt, n - 2))
                        * gsv(pt, n - 1)
                },
            )],
            errata: None,
        },
    ]
}

fn group_e() -> Vec<IdentityDescriptor> {
    vec![
        IdentityDescriptor {
            id: "E1",
            title: "partial sum",
            anchor: "G(0) + G(1) + ... + G(n) = G(n+2) - G1",
            uses_second_sequence: false,
            vars: &[Var::N],
            grid: |b| grid_n(0, b),
            equations: vec![eq(
                "",
                |pt| (0..=pt.n).map(|i| gv(pt, i)).sum(),
                |pt| gv(pt, pt.n + 2) - &pt.g.g1,
            )],
            errata: None,
        },
        IdentityDescriptor {
            id: "E2",
            title: "even-index partial sum",
            anchor: "G(0) + G(2) + ... + G(2n) = G(2n+1) - G(-1)",
            uses_second_sequence: false,
            vars: &[Var::N],
            grid: |b| grid_n(0, b),
            equations: vec![eq(
                "",
                |pt| (0..=pt.n).map(|i| gv(pt, 2 * i)).sum(),
                |pt| gv(pt, 2 * pt.n + 1) - gv(pt, -1),
            )],
            errata: None,
        },
        IdentityDescriptor {
            id: "E3",
            title: "triple value",
            anchor: "3 G(n) = G(n+2) + G(n-2)",
            uses_second_sequence: false,
            vars: &[Var::N],
            grid: |b| grid_n(0, b),
            equations: vec![eq(
                "",
                |pt| Int::from(3) * gv(pt, pt.n),
                |pt| gv(pt, pt.n + 2) + gv(pt, pt.n - 2),
            )],
            errata: None,
        },
        IdentityDescriptor {
            id: "E4",
            title: "sum of squares",
            anchor: "sum_{i=0}^{n} G(i)^2 = G(n) G(n+1) + G0 (G0 - G1)",
            uses_second_sequence: false,
            vars: &[Var::N],
            grid: |b| grid_n(0, b),
            equations: vec![eq(
                "",
                |pt| (0..=pt.n).map(|i| gv(pt, i) * gv(pt, i)).sum(),
                |pt| gv(pt, pt.n) * gv(pt, pt.n + 1) + &pt.g.g0 * (&pt.g.g0 - &pt.g.g1),
            )],
            errata: None,
        },
        IdentityDescriptor {
            id: "E5",
            title: "cross-sequence product sum",
            anchor: "sum_{i=0}^{n} H(i) G(i) = H(n+1) G(n) + (H0 - H1) G0 for even n, \
                     H(n+1) G(n) + H0 (G0 - G1) for odd n",
            uses_second_sequence: true,
            vars: &[Var::N],
            grid: |b| grid_n(0, b),
            equations: vec![eq(
                "",
                |pt| (0..=pt.n).map(|i| hv(pt, i) * gv(pt, i)).sum(),
                |pt| {
                    let h = pt.h.as_ref().expect("two-sequence identity");
                    let base = hv(pt, pt.n + 1) * gv(pt, pt.n);
                    if pt.n % 2 == 0 {
                        base + (&h.g0 - &h.g1) * &pt.g.g0
                    } else {
                        base + &h.g0 * (&pt.g.g0 - &pt.g.g1)
                    }
                },
            )],
            errata: None,
        },
        IdentityDescriptor {
            id: "E6",
            title: "adjacent product sum",
            anchor: "sum_{i=1}^{n} G(i-1) G(i) = G(n)^2 - G0^2 for even n, \
                     G(n)^2 - G1 (G1 - G0) for odd n",
            uses_second_sequence: false,
            vars: &[Var::N],
            grid: |b| grid_n(0, b),
            equations: vec![eq(
                "",
                |pt| (1..=pt.n).map(|i| gv(pt, i - 1) * gv(pt, i)).sum(),
                |pt| {
                    let sq = gv(pt, pt.n) * gv(pt, pt.n);
                    if pt.n % 2 == 0 {
                        sq - &pt.g.g0 * &pt.g.g0
                    } else {
                        sq - &pt.g.g1 * (&pt.g.g1 - &pt.g.g0)
                    }
                },
            )],
            errata: None,
        },
        IdentityDescriptor {
            id: "E7",
            title: "Cassini form",
            anchor: "G(n)^2 = G(n+1) G(n-1) + (-1)^n (G0 G(2) - G1^2)",
            uses_second_sequence: false,
            vars: &[Var::N],
            grid: |b| grid_n(0, b),
            equations: vec![eq(
                "",
                |pt| gv(pt, pt.n) * gv(pt, pt.n),
                |pt| {
                    gv(pt, pt.n + 1) * gv(pt, pt.n - 1)
                        + sgn(pt.n) * (&pt.g.g0 * gv(pt, 2) - &pt.g.g1 * &pt.g.g1)
                },
            )],
            errata: None,
        },
        IdentityDescriptor {
            id: "E8",
            title: "Catalan form",
            anchor: "G(n)^2 = G(n+p) G(n-p) + (-1)^(n+p-1) f(p-1) (G0 G(p+1) - G1 G(p))",
            uses_second_sequence: false,
            vars: &[Var::N, Var::P],
            grid: |b| {
                let mut v = Vec::new();
                for n in 1..=b.nmax {
                    for p in 1..=n {
                        v.push(IdxPoint::of_np(n, p));
                    }
                }
                v
            },
            equations: vec![eq(
                "",
                |pt| gv(pt, pt.n) * gv(pt, pt.n),
                |pt| {
                    let (n, p) = (pt.n, pt.p);
                    gv(pt, n + p) * gv(pt, n - p)
                        + sgn(n + p - 1)
                            * fv(p - 1)
                            * (&pt.g.g0 * gv(pt, p + 1) - &pt.g.g1 * gv(pt, p))
                },
            )],
            errata: None,
        },
        IdentityDescriptor {
            id: "E9",
            title: "Catalan form at p = 2",
            anchor: "G(n)^2 = G(n+2) G(n-2) + (-1)^(n+1) (G0 G(2) - G1^2); \
                     f(n)^2 = f(n+2) f(n-2) - (-1)^n",
            uses_second_sequence: false,
            vars: &[Var::N],
            grid: |b| grid_n(0, b),
            equations: vec![
                eq(
                    "general",
                    |pt| gv(pt, pt.n) * gv(pt, pt.n),
                    |pt| {
                        gv(pt, pt.n + 2) * gv(pt, pt.n - 2)
                            + sgn(pt.n + 1) * (&pt.g.g0 * gv(pt, 2) - &pt.g.g1 * &pt.g.g1)
                    },
                ),
                eq(
                    "f instance",
                    |pt| fv(pt.n) * fv(pt.n),
                    |pt| fv(pt.n + 2) * fv(pt.n - 2) - sgn(pt.n),
                ),
            ],
            errata: None,
        },
        IdentityDescriptor {
            id: "E10",
            title: "Catalan form at p = n",
            anchor: "G(n)^2 = G(2n) G0 - f(n-1) (G0 G(n+1) - G1 G(n))",
            uses_second_sequence: false,
            vars: &[Var::N],
            grid: |b| grid_n(0, b),
            equations: vec![eq(
                "",
                |pt| gv(pt, pt.n) * gv(pt, pt.n),
                |pt| {
                    gv(pt, 2 * pt.n) * &pt.g.g0
                        - fv(pt.n - 1) * (&pt.g.g0 * gv(pt, pt.n + 1) - &pt.g.g1 * gv(pt, pt.n))
                },
            )],
            errata: None,
        },
    ]
}

fn group_f() -> Vec<IdentityDescriptor> {
    vec![
        IdentityDescriptor {
            id: "F1",
            title: "supertile expansion and congruence",
            anchor: "G(mr) = G(m) sum_{j=2}^{r-1} F(m+1)^(j-2) F(m) F((r-j)m) + G(m) F(m+1)^(r-1) \
                     + G(m-1) F((r-1)m); G(mr) = G(m-1) F((r-1)m) mod G(m) when G(m) > 1",
            uses_second_sequence: false,
            vars: &[Var::M, Var::R],
            grid: |b| {
                let mut v = Vec::new();
                for m in 1..=b.mmax {
                    for r in 2..=b.mmax {
                        if m * r <= b.nmax {
                            v.push(IdxPoint::of_mr(m, r));
                        }
                    }
                }
                v
            },
            equations: vec![
                eq(
                    "expansion",
                    |pt| gv(pt, pt.m * pt.r),
                    |pt| {
                        let (m, r) = (pt.m, pt.r);
                        let f_m1 = fibv(m + 1);
                        let mut total = gv(pt, m) * int_pow(&f_m1, r - 1)
                            + gv(pt, m - 1) * fibv((r - 1) * m);
                        for j in 2..r {
                            total += gv(pt, m)
                                * int_pow(&f_m1, j - 2)
                                * fibv(m)
                                * fibv((r - j) * m);
                        }
                        total
                    },
                ),
                eq_if(
                    "congruence",
                    |pt| gv(pt, pt.m) > Int::one(),
                    |pt| {
                        let diff = gv(pt, pt.m * pt.r) - gv(pt, pt.m - 1) * fibv((pt.r - 1) * pt.m);
                        modz(&diff, &gv(pt, pt.m))
                    },
                    |_| Int::zero(),
                ),
            ],
            errata: None,
        },
        IdentityDescriptor {
            id: "F2",
            title: "breakability sum",
            anchor: "2 sum_{j=0}^{n} G(3j+2) = G(3n+4) - G1",
            uses_second_sequence: false,
            vars: &[Var::N],
            grid: |b| grid_n(0, b),
            equations: vec![eq(
                "",
                |pt| Int::from(2) * (0..=pt.n).map(|j| gv(pt, 3 * j + 2)).sum::<Int>(),
                |pt| gv(pt, 3 * pt.n + 4) - &pt.g.g1,
            )],
            errata: None,
        },
        IdentityDescriptor {
            id: "F3",
            title: "lacunary recurrence",
            anchor: "G(n) = G(n-N) f(N) + f(N-1)^2 sum_{i=2}^{d} G(n-iN) f(N-2)^(i-2) \
                     + f(N-1) G(n-dN-1) f(N-2)^(d-1), d = floor(n/N)",
            uses_second_sequence: false,
            vars: &[Var::N, Var::Split],
            grid: grid_step,
            equations: vec![eq(
                "",
                |pt| lacunary_gib(&pt.g, pt.n, pt.split).expect("grid satisfies n >= N >= 2"),
                |pt| gv(pt, pt.n),
            )],
            errata: None,
        },
        IdentityDescriptor {
            id: "F4",
            title: "Fibonacci lacunary recurrence",
            anchor: "F(n) = F(N) F(N-1)^(d-1) F((n-1) mod N) + F(N+1) F(n-N) \
                     + F(N)^2 sum_{k=2}^{d} F(N-1)^(k-2) F(n-kN), d = floor((n-1)/N)",
            uses_second_sequence: false,
            vars: &[Var::N, Var::Split],
            grid: grid_step,
            equations: vec![eq(
                "",
                |pt| lacunary_fib(pt.n, pt.split).expect("grid satisfies n >= N >= 2"),
                |pt| fibv(pt.n),
            )],
            errata: Some(Errata {
                printed: vec![eq(
                    "",
                    |pt| {
                        let (n, step) = (pt.n, pt.split);
                        let d = (n - 1).div_euclid(step);
                        let f_m1 = fibv(step - 1);
                        let mut tail = Int::zero();
                        for k in 2..=d {
                            tail += int_pow(&f_m1, k - 2) * fibv(n - k * step);
                        }
                        fibv(step) * int_pow(&f_m1, d + 1) * fibv((n - 1).rem_euclid(step))
                            + fibv(step + 1) * fibv(n - step)
                            + fibv(step) * fibv(step) * tail
                    },
                    |pt| fibv(pt.n),
                )],
                witness_params: (1, 1),
                witness: IdxPoint::of_n_split(10, 4),
                note: "the first factor's exponent reads floor((n-1)/N)+1; expanding the \
                       recurrence gives floor((n-1)/N)-1",
            }),
        },
        IdentityDescriptor {
            id: "F5",
            title: "index-shift identity",
            anchor: "G(n) = G(n-N) f(N) + G(n-N-1) f(N-1)",
            uses_second_sequence: false,
            vars: &[Var::N, Var::Split],
            grid: |b| {
                let mut v = Vec::new();
                for split in 1..=10 {
                    for n in split..=b.nmax {
                        v.push(IdxPoint::of_n_split(n, split));
                    }
                }
                v
            },
            equations: vec![eq(
                "",
                |pt| gv(pt, pt.n - pt.split) * fv(pt.split) + gv(pt, pt.n - pt.split - 1) * fv(pt.split - 1),
                |pt| gv(pt, pt.n),
            )],
            errata: Some(Errata {
                printed: vec![eq(
                    "",
                    |pt| {
                        gv(pt, pt.n - pt.split) * fv(pt.split)
                            + gv(pt, pt.n - pt.split - 1) * fv(pt.n - 1)
                    },
                    |pt| gv(pt, pt.n),
                )],
                witness_params: (2, 1),
                witness: IdxPoint::of_n_split(5, 2),
                note: "the second factor reads f(n-1); splitting the strip after column \
                       n-N gives f(N-1)",
            }),
        },
    ]
}
