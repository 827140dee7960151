//! Periods of Gibonacci sequences modulo m, divisibility reports, lacunary
//! recurrences and the representation solver.

use crate::sequence::{f_comb, fib, gib, GibonacciParams, Int, SequenceError};
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NumberTheoryError {
    #[error("modulus must be at least 2, got {0}")]
    ModulusTooSmall(Int),
    #[error("divisibility statement requires G_m > 1, got G_{m} = {value}")]
    DivisorTooSmall { m: i64, value: Int },
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Sequence(#[from] SequenceError),
}

fn invalid(msg: impl Into<String>) -> NumberTheoryError {
    NumberTheoryError::Invalid(msg.into())
}

/// The least x >= 1 with `G_{n+x} = G_n (mod modulus)` for all n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodResult {
    pub modulus: Int,
    pub period: Int,
    /// True when the period holds for every initial pair (the period of the
    /// consecutive-pair state map), false when it is specific to one
    /// sequence.
    pub universal: bool,
}

/// Steps the consecutive-pair state from `start` until it recurs.
///
/// The state map `(a, b) -> (b, a+b)` is invertible mod m, so the orbit of
/// any state is a pure cycle: the first repeated state is the start itself.
fn pair_cycle_length(start: (Int, Int), m: &Int) -> Int {
    let mut a = start.0.clone();
    let mut b = start.1.clone();
    let mut steps = Int::zero();
    loop {
        let next = (&a + &b).mod_floor(m);
        a = std::mem::replace(&mut b, next);
        steps += 1;
        if (&a, &b) == (&start.0, &start.1) {
            return steps;
        }
    }
}

/// Smallest x >= 1 such that `(F_{n+x}, F_{n+x+1}) = (F_n, F_{n+1}) (mod m)`
/// for all n; the same x satisfies `G_{n+x} = G_n (mod m)` for every
/// parameter pair.
pub fn universal_period(m: &Int) -> Result<PeriodResult, NumberTheoryError> {
    if m < &Int::from(2) {
        return Err(NumberTheoryError::ModulusTooSmall(m.clone()));
    }
    let period = pair_cycle_length((Int::zero(), Int::one().mod_floor(m)), m);
    Ok(PeriodResult { modulus: m.clone(), period, universal: true })
}

/// Smallest x >= 1 such that `(G_{n+x}, G_{n+x+1}) = (G_n, G_{n+1}) (mod m)`
/// for all n; divides the universal period.
pub fn sequence_period(p: &GibonacciParams, m: &Int) -> Result<PeriodResult, NumberTheoryError> {
    if m < &Int::from(2) {
        return Err(NumberTheoryError::ModulusTooSmall(m.clone()));
    }
    let start = (p.g0.mod_floor(m), p.g1.mod_floor(m));
    let period = pair_cycle_length(start, m);
    Ok(PeriodResult { modulus: m.clone(), period, universal: false })
}

/// `(modulus, universal period)` for every modulus in `2..=max_modulus`.
pub fn period_table(max_modulus: u64) -> Vec<(u64, Int)> {
    (2..=max_modulus)
        .map(|m| {
            let result = universal_period(&Int::from(m)).expect("modulus >= 2");
            (m, result.period)
        })
        .collect()
}

/// The congruence `G_{mr} = G_{m-1} F_{(r-1)m} (mod G_m)` together with the
/// supertile expansion of `G_{mr}` it comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupertileCongruence {
    pub m: i64,
    pub r: i64,
    pub g_m: Int,
    pub g_mr: Int,
    /// `G_{mr} mod G_m`, reduced into `[0, G_m)`.
    pub lhs_residue: Int,
    /// `G_{m-1} F_{(r-1)m}` and its residue.
    pub rhs: Int,
    pub rhs_residue: Int,
    /// The expansion summands: the all-closed term, the junction-1 term and
    /// the junction-j terms for j in 2..r.
    pub summands: Vec<Int>,
    pub congruence_holds: bool,
    pub expansion_holds: bool,
}

impl SupertileCongruence {
    pub fn holds(&self) -> bool {
        self.congruence_holds && self.expansion_holds
    }
}

/// Checks `G_{mr} = G_{m-1} F_{(r-1)m} (mod G_m)`; requires `G_m > 1`.
pub fn supertile_congruence(
    p: &GibonacciParams,
    m: i64,
    r: i64,
) -> Result<SupertileCongruence, NumberTheoryError> {
    if m < 1 || r < 2 {
        return Err(invalid(format!("need m >= 1 and r >= 2, got m={m} r={r}")));
    }
    let g_m = gib(p, m)?;
    if g_m <= Int::one() {
        return Err(NumberTheoryError::DivisorTooSmall { m, value: g_m });
    }
    let g_mr = gib(p, m * r)?;
    let rhs = gib(p, m - 1)? * fib((r - 1) * m)?;

    let f_m1 = fib(m + 1)?;
    let mut summands = vec![&g_m * int_pow(&f_m1, r - 1), rhs.clone()];
    for j in 2..r {
        summands.push(&g_m * int_pow(&f_m1, j - 2) * fib(m)? * fib((r - j) * m)?);
    }
    let expansion: Int = summands.iter().sum();

    let lhs_residue = g_mr.mod_floor(&g_m);
    let rhs_residue = rhs.mod_floor(&g_m);
    Ok(SupertileCongruence {
        m,
        r,
        g_mr: g_mr.clone(),
        lhs_residue: lhs_residue.clone(),
        rhs,
        rhs_residue: rhs_residue.clone(),
        congruence_holds: lhs_residue == rhs_residue,
        expansion_holds: expansion == g_mr,
        summands,
        g_m,
    })
}

fn int_pow(base: &Int, exponent: i64) -> Int {
    let mut out = Int::one();
    for _ in 0..exponent {
        out *= base;
    }
    out
}

/// Lacunary evaluation of `G_n` with step N:
/// `G_{n-N} f_N + f_{N-1}^2 sum_{i=2}^{d} G_{n-iN} f_{N-2}^{i-2}
///  + f_{N-1} G_{n-dN-1} f_{N-2}^{d-1}` with `d = floor(n/N)`.
pub fn lacunary_gib(p: &GibonacciParams, n: i64, step: i64) -> Result<Int, NumberTheoryError> {
    check_lacunary_args(n, step)?;
    let d = n.div_euclid(step);
    let f_m1 = f_comb(step - 1)?;
    let f_m2 = f_comb(step - 2)?;
    let mut middle = Int::zero();
    for i in 2..=d {
        middle += gib(p, n - i * step)? * int_pow(&f_m2, i - 2);
    }
    Ok(gib(p, n - step)? * f_comb(step)?
        + &f_m1 * &f_m1 * middle
        + &f_m1 * gib(p, n - d * step - 1)? * int_pow(&f_m2, d - 1))
}

/// Lacunary evaluation of `F_n` with step N:
/// `F_N F_{N-1}^{d-1} F_{(n-1) mod N} + F_{N+1} F_{n-N}
///  + F_N^2 sum_{k=2}^{d} F_{N-1}^{k-2} F_{n-kN}` with `d = floor((n-1)/N)`.
pub fn lacunary_fib(n: i64, step: i64) -> Result<Int, NumberTheoryError> {
    check_lacunary_args(n, step)?;
    let d = (n - 1).div_euclid(step);
    let f_m1 = fib(step - 1)?;
    let mut tail = Int::zero();
    for k in 2..=d {
        tail += int_pow(&f_m1, k - 2) * fib(n - k * step)?;
    }
    let f_step = fib(step)?;
    // d = 0 only at n = N, where F_{(n-1) mod N} = F_{N-1} cancels the
    // negative exponent exactly and the term reduces to F_N.
    let first = if d >= 1 {
        &f_step * int_pow(&f_m1, d - 1) * fib((n - 1).rem_euclid(step))?
    } else {
        f_step.clone()
    };
    Ok(first + fib(step + 1)? * fib(n - step)? + &f_step * &f_step * tail)
}

fn check_lacunary_args(n: i64, step: i64) -> Result<(), NumberTheoryError> {
    if step < 2 {
        return Err(invalid(format!("lacunary step must be >= 2, got {step}")));
    }
    if n < step {
        return Err(invalid(format!("lacunary form needs n >= N, got n={n} N={step}")));
    }
    Ok(())
}

/// One exact representation `a f_{n-2} + b f_{n-1} = t` with `a, b >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepresentationSolution {
    pub a: Int,
    pub b: Int,
    pub n: i64,
}

/// All representations of t, with the degenerate n = 1 family reported
/// symbolically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepresentReport {
    pub t: Int,
    /// At n = 1 the coefficient of a is `f_{-1} = 0`, so `b = t` and a is a
    /// free parameter.
    pub family_b: Int,
    /// Concrete family members for a in `1..=a_cap`.
    pub family_examples: Vec<RepresentationSolution>,
    /// All solutions with n >= 2, ordered by (n, a).
    pub solutions: Vec<RepresentationSolution>,
}

/// Finds every `(a, b, n)` with `a, b >= 1` and `a f_{n-2} + b f_{n-1} = t`.
///
/// n ranges over `2..` while `f_n <= t` (the minimum achievable value at
/// `a = b = 1` is `f_n`); the n = 1 family is reported separately with a
/// enumerated only up to `a_cap`.
pub fn represent(t: &Int, a_cap: u64) -> Result<RepresentReport, NumberTheoryError> {
    if t < &Int::one() {
        return Err(invalid(format!("t must be positive, got {t}")));
    }
    let mut solutions = Vec::new();
    let mut n = 2i64;
    loop {
        let fa = f_comb(n - 2)?; // coefficient of a
        let fb = f_comb(n - 1)?; // coefficient of b
        if &fa + &fb > *t {
            break;
        }
        let mut a = Int::one();
        loop {
            let rest = t - &a * &fa;
            if rest < fb {
                break;
            }
            let (q, r) = rest.div_rem(&fb);
            if r.is_zero() && q >= Int::one() {
                solutions.push(RepresentationSolution { a: a.clone(), b: q, n });
            }
            a += 1;
        }
        n += 1;
    }
    let family_examples = (1..=a_cap)
        .map(|a| RepresentationSolution { a: Int::from(a), b: t.clone(), n: 1 })
        .collect();
    Ok(RepresentReport { t: t.clone(), family_b: t.clone(), family_examples, solutions })
}

/// The unique t >= 1 with `f_{t-1} <= v < f_t`.
pub fn fib_bracket(v: &Int) -> Result<i64, NumberTheoryError> {
    if v < &Int::one() {
        return Err(invalid(format!("value must be positive, got {v}")));
    }
    let mut t = 1i64;
    loop {
        let low = f_comb(t - 1)?;
        let high = f_comb(t)?;
        if &low <= v && v < &high {
            return Ok(t);
        }
        t += 1;
    }
}

#[cfg(test)]
#[path = "number_theory_tests.rs"]
mod tests;
