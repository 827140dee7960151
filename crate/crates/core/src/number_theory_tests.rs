use super::*;
use crate::rng::SplitMix64;

fn big(n: i64) -> Int {
    Int::from(n)
}

fn params(g0: i64, g1: i64) -> GibonacciParams {
    GibonacciParams::new(g0, g1)
}

#[test]
fn universal_period_known_moduli() {
    for (m, want) in [(2, 3), (3, 8), (5, 20), (7, 16), (11, 10), (29, 14)] {
        let result = universal_period(&big(m)).unwrap();
        assert_eq!(result.period, big(want), "modulus {m}");
        assert!(result.universal);
    }
    assert!(universal_period(&big(1)).is_err());
}

#[test]
fn universal_period_covers_every_parameter_pair() {
    let mut rng = SplitMix64::new(11);
    let m = big(7);
    let x = universal_period(&m).unwrap().period;
    assert_eq!(x, big(16));
    for _ in 0..20 {
        let p = params((rng.next_u64() % 1000) as i64, (rng.next_u64() % 1000) as i64);
        for n in 0..=64i64 {
            let lhs = gib(&p, n + 16).unwrap().mod_floor(&m);
            let rhs = gib(&p, n).unwrap().mod_floor(&m);
            assert_eq!(lhs, rhs, "params {p:?} at n={n}");
        }
    }
}

#[test]
fn sequence_period_examples() {
    assert_eq!(sequence_period(&params(0, 0), &big(5)).unwrap().period, big(1));
    assert_eq!(sequence_period(&params(0, 1), &big(7)).unwrap().period, big(16));
    assert_eq!(sequence_period(&params(7, 7), &big(7)).unwrap().period, big(1));
}

#[test]
fn sequence_period_divides_universal_period() {
    let mut rng = SplitMix64::new(5);
    for _ in 0..50 {
        let p = params((rng.next_u64() % 10_000) as i64, (rng.next_u64() % 10_000) as i64);
        let m = big((rng.next_u64() % 49 + 2) as i64);
        let universal = universal_period(&m).unwrap().period;
        let specific = sequence_period(&p, &m).unwrap().period;
        assert!(
            universal.mod_floor(&specific).is_zero(),
            "{specific} does not divide {universal} (mod {m}, params {p:?})"
        );
    }
}

#[test]
fn period_table_matches_individual_queries() {
    let table = period_table(30);
    assert_eq!(table.len(), 29);
    for (m, period) in table {
        assert_eq!(universal_period(&big(m as i64)).unwrap().period, period);
    }
}

#[test]
fn supertile_congruence_examples() {
    let lucas = params(2, 1);
    let report = supertile_congruence(&lucas, 2, 3).unwrap();
    assert!(report.holds(), "{report:?}");
    assert_eq!(report.g_mr, big(18));
    assert_eq!(report.lhs_residue, big(0));
    assert_eq!(report.rhs, big(3));

    let report = supertile_congruence(&lucas, 3, 2).unwrap();
    assert!(report.holds());
    assert_eq!(report.g_m, big(4));
    assert_eq!(report.lhs_residue, big(2));
    assert_eq!(report.rhs, big(6));
    assert_eq!(report.rhs_residue, big(2));

    let fibp = params(0, 1);
    let report = supertile_congruence(&fibp, 4, 3).unwrap();
    assert!(report.holds());
    assert_eq!(report.lhs_residue, fib(12).unwrap().mod_floor(&fib(4).unwrap()));
}

#[test]
fn supertile_congruence_requires_gm_above_one() {
    // F_2 = 1, so m = 2 is rejected for the Fibonacci parameters
    assert!(matches!(
        supertile_congruence(&params(0, 1), 2, 3),
        Err(NumberTheoryError::DivisorTooSmall { .. })
    ));
}

#[test]
fn supertile_congruence_residues_in_range() {
    for g0 in 0..=3i64 {
        for g1 in 0..=3i64 {
            for m in 1..=5i64 {
                for r in 2..=4i64 {
                    match supertile_congruence(&params(g0, g1), m, r) {
                        Ok(report) => {
                            assert!(report.lhs_residue >= big(0));
                            assert!(report.lhs_residue < report.g_m);
                            assert!(report.holds(), "{report:?}");
                        }
                        Err(NumberTheoryError::DivisorTooSmall { .. }) => {}
                        Err(e) => panic!("unexpected error {e}"),
                    }
                }
            }
        }
    }
}

#[test]
fn lacunary_gib_examples() {
    assert_eq!(lacunary_gib(&params(1, 1), 10, 3).unwrap(), big(89));
    assert_eq!(lacunary_gib(&params(2, 1), 7, 2).unwrap(), big(29));
    assert!(lacunary_gib(&params(1, 1), 3, 1).is_err());
    assert!(lacunary_gib(&params(1, 1), 2, 3).is_err());
}

#[test]
fn lacunary_fib_example_with_corrected_exponent() {
    assert_eq!(lacunary_fib(10, 4).unwrap(), big(55));
}

#[test]
fn lacunary_matches_direct_evaluation() {
    let mut rng = SplitMix64::new(21);
    let mut param_list: Vec<GibonacciParams> = (0..20)
        .map(|_| params((rng.next_u64() % 100_000) as i64, (rng.next_u64() % 100_000) as i64))
        .collect();
    param_list.push(params(0, 1));
    param_list.push(params(2, 1));
    for step in 2..=8i64 {
        for n in step..=60 {
            assert_eq!(lacunary_fib(n, step).unwrap(), fib(n).unwrap(), "fib n={n} N={step}");
            for p in &param_list {
                assert_eq!(
                    lacunary_gib(p, n, step).unwrap(),
                    gib(p, n).unwrap(),
                    "gib {p:?} n={n} N={step}"
                );
            }
        }
    }
}

#[test]
fn represent_example_t5() {
    let report = represent(&big(5), 3).unwrap();
    let got: Vec<(i64, i64, i64)> = report
        .solutions
        .iter()
        .map(|s| {
            (
                i64::try_from(&s.a).unwrap(),
                i64::try_from(&s.b).unwrap(),
                s.n,
            )
        })
        .collect();
    assert_eq!(
        got,
        vec![(1, 4, 2), (2, 3, 2), (3, 2, 2), (4, 1, 2), (1, 2, 3), (3, 1, 3), (1, 1, 4)]
    );
    assert_eq!(report.family_b, big(5));
    assert_eq!(report.family_examples.len(), 3);
}

#[test]
fn represent_t1_has_only_the_family() {
    let report = represent(&big(1), 2).unwrap();
    assert!(report.solutions.is_empty());
    assert_eq!(report.family_b, big(1));
    assert!(represent(&big(0), 2).is_err());
}

#[test]
fn represent_solutions_satisfy_defining_property() {
    for t in 1..=40i64 {
        let report = represent(&big(t), 2).unwrap();
        for s in report.solutions.iter().chain(&report.family_examples) {
            let p = GibonacciParams { g0: s.a.clone(), g1: s.b.clone() };
            assert_eq!(gib(&p, s.n).unwrap(), big(t), "({:?},{:?},{}) for t={t}", s.a, s.b, s.n);
        }
    }
}

#[test]
fn represent_matches_brute_force_scan() {
    for t in 1..=30i64 {
        let report = represent(&big(t), 1).unwrap();
        let mut brute = Vec::new();
        let nmax = fib_bracket(&big(t)).unwrap();
        for n in 2..=nmax {
            for a in 1..=t {
                for b in 1..=t {
                    if big(a) * f_comb(n - 2).unwrap() + big(b) * f_comb(n - 1).unwrap() == big(t)
                    {
                        brute.push((big(a), big(b), n));
                    }
                }
            }
        }
        brute.sort_by_key(|(a, _, n)| (*n, a.clone()));
        let got: Vec<(Int, Int, i64)> = report
            .solutions
            .into_iter()
            .map(|s| (s.a, s.b, s.n))
            .collect();
        assert_eq!(got, brute, "t={t}");
    }
}

#[test]
fn fib_bracket_examples() {
    assert_eq!(fib_bracket(&big(5)).unwrap(), 5);
    assert_eq!(fib_bracket(&big(1)).unwrap(), 2);
    for k in 1..=30i64 {
        assert_eq!(fib_bracket(&f_comb(k).unwrap()).unwrap(), k + 1, "v = f_{k}");
    }
    assert!(fib_bracket(&big(0)).is_err());
}
