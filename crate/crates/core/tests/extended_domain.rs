//! Probes identities on the extended integer domain reached through the
//! backward recurrence, beyond the bounds their combinatorial arguments
//! need. Reported separately from the main verification runs.

use gibtile_core::sequence::{f_comb, fib, gib, lucas, GibonacciParams, Int};

fn big(x: i64) -> Int {
    Int::from(x)
}

fn sgn(k: i64) -> Int {
    if k.rem_euclid(2) == 0 {
        big(1)
    } else {
        big(-1)
    }
}

fn param_grid() -> Vec<GibonacciParams> {
    let mut v = Vec::new();
    for g0 in -3..=3i64 {
        for g1 in -3..=3i64 {
            v.push(GibonacciParams::new(g0, g1));
        }
    }
    v
}

#[test]
fn two_break_split_holds_for_all_integers() {
    let f = |i: i64| f_comb(i).unwrap();
    let l = |i: i64| lucas(i).unwrap();
    for n in -8..=12i64 {
        for m in -8..=12i64 {
            let lhs = l(n) * l(n) * f(m - 6) + big(2) * l(n) * f(n) * f(m - 7)
                + f(n) * f(n) * f(m - 8);
            let rhs = f(n - 2) * f(n - 2) * f(m)
                + big(2) * f(n - 2) * f(n - 3) * f(m - 2)
                + f(n - 3) * f(n - 3) * f(m - 4);
            assert_eq!(lhs, rhs, "n={n} m={m}");
        }
    }
}

#[test]
fn square_sum_and_difference_hold_at_negative_indices() {
    for p in param_grid() {
        let g = |i: i64| gib(&p, i).unwrap();
        for n in -10..=10i64 {
            assert_eq!(
                g(n + 1) * g(n + 1) + g(n) * g(n),
                &p.g0 * g(2 * n) + &p.g1 * g(2 * n + 1),
                "{p:?} n={n}"
            );
            assert_eq!(
                g(n + 2) * g(n + 2) - g(n) * g(n),
                &p.g0 * g(2 * n + 1) + &p.g1 * g(2 * n + 2)
            );
            assert_eq!(
                fib(n + 1).unwrap() * fib(n + 1).unwrap()
                    - fib(n - 1).unwrap() * fib(n - 1).unwrap(),
                fib(2 * n).unwrap()
            );
        }
    }
}

#[test]
fn cassini_and_catalan_forms_hold_at_negative_indices() {
    for p in param_grid() {
        let g = |i: i64| gib(&p, i).unwrap();
        let correction = &p.g0 * g(2) - &p.g1 * &p.g1;
        for n in -10..=10i64 {
            assert_eq!(g(n) * g(n), g(n + 1) * g(n - 1) + sgn(n) * &correction, "{p:?} n={n}");
            assert_eq!(g(n) * g(n), g(n + 2) * g(n - 2) + sgn(n + 1) * &correction);
            for q in 1..=5i64 {
                let rhs = g(n + q) * g(n - q)
                    + sgn(n + q - 1)
                        * f_comb(q - 1).unwrap()
                        * (&p.g0 * g(q + 1) - &p.g1 * g(q));
                assert_eq!(g(n) * g(n), rhs, "{p:?} n={n} p={q}");
            }
            if n >= 0 {
                let rhs = g(2 * n) * &p.g0
                    - f_comb(n - 1).unwrap() * (&p.g0 * g(n + 1) - &p.g1 * g(n));
                assert_eq!(g(n) * g(n), rhs);
            }
        }
    }
}
