use std::collections::HashMap;

use proptest::prelude::*;

use tower_search::analysis::{
    ceil_lg_succ, emit_csv, growth_table, measure_worst_case, recurrence_bound, GrowthRow, KeyPolicy,
    PivotOutcomeBound, RecurrenceBound, ShapeFamily,
};
use tower_search::generators::{seeded_corpus, threshold_corpus, CorpusPlan, GenKind};
use tower_search::search::Algorithm;

/// Independent evaluation of the planar bound: the searched line is the
/// middle column when there are at least as many rows as columns, else the
/// middle row, and the two surviving rectangles are charged in full.
fn planar_oracle(m: usize, n: usize, memo: &mut HashMap<(usize, usize), u64>) -> u64 {
    if m == 0 || n == 0 {
        return 0;
    }
    if let Some(&v) = memo.get(&(m, n)) {
        return v;
    }
    let lg = |x: usize| (x as f64 + 1.0).log2().ceil() as u64;
    let v = if m >= n {
        let c = (n - 1) / 2;
        lg(m)
            + (0..=m)
                .map(|k| planar_oracle(k, n - 1 - c, memo) + planar_oracle(m - k, c, memo))
                .max()
                .unwrap()
    } else {
        let r = (m - 1) / 2;
        lg(n)
            + (0..=n)
                .map(|k| planar_oracle(r, n - k, memo) + planar_oracle(m - 1 - r, k, memo))
                .max()
                .unwrap()
    };
    memo.insert((m, n), v);
    v
}

fn recurrence_oracle(d: [usize; 3], memo: &mut HashMap<(usize, usize), u64>) -> u64 {
    if d.contains(&0) {
        return 0;
    }
    let lg = |x: usize| (x as f64 + 1.0).log2().ceil() as u64;
    let live: Vec<usize> = d.iter().copied().filter(|&n| n > 1).collect();
    match live[..] {
        [] => 1,
        [n] => lg(n),
        [a, b] => planar_oracle(a, b, memo),
        _ => {
            let [a, b, c] = d;
            lg(a.min(b).min(c))
                + recurrence_oracle([a, b.div_ceil(2), c / 2], memo)
                + recurrence_oracle([a / 2, b, c.div_ceil(2)], memo)
                + recurrence_oracle([a.div_ceil(2), b / 2, c], memo)
        }
    }
}

#[test]
fn recurrence_matches_independent_evaluation() {
    let mut memo = HashMap::new();
    let mut bound = RecurrenceBound::new();
    for a in 1..=12 {
        for b in 1..=12 {
            for c in 1..=12 {
                assert_eq!(
                    bound.budget([a, b, c]).unwrap(),
                    recurrence_oracle([a, b, c], &mut memo),
                    "{a},{b},{c}"
                );
            }
        }
    }
}

#[test]
fn recurrence_is_monotone_up_to_32() {
    let mut b = RecurrenceBound::new();
    let mut table = vec![0u64; 33 * 33 * 33];
    let at = |a: usize, x: usize, y: usize| (a * 33 + x) * 33 + y;
    for a in 1..=32 {
        for x in 1..=32 {
            for y in 1..=32 {
                table[at(a, x, y)] = b.budget([a, x, y]).unwrap();
            }
        }
    }
    for a in 1..=32 {
        for x in 1..=32 {
            for y in 1..=32 {
                let v = table[at(a, x, y)];
                if a < 32 {
                    assert!(table[at(a + 1, x, y)] >= v, "axis 1 at {a},{x},{y}");
                }
                if x < 32 {
                    assert!(table[at(a, x + 1, y)] >= v, "axis 2 at {a},{x},{y}");
                }
                if y < 32 {
                    assert!(table[at(a, x, y + 1)] >= v, "axis 3 at {a},{x},{y}");
                }
            }
        }
    }
}

#[test]
fn hand_evaluated_values() {
    assert_eq!(recurrence_bound(1, 1, 1).unwrap(), 1);
    assert_eq!(recurrence_bound(1, 1, 7).unwrap(), 3);
    // 2 for the diagonal plus three vectors of length 2 at 2 probes each.
    assert_eq!(recurrence_bound(2, 2, 2).unwrap(), 8);
}

#[test]
fn planar_bound_is_symmetric_and_within_twice_the_balanced_shape() {
    let mut memo = HashMap::new();
    for m in 1..=8 {
        for n in 1..=8 {
            assert_eq!(planar_oracle(m, n, &mut memo), planar_oracle(n, m, &mut memo));
        }
    }
    let b = recurrence_bound(1, 4, 64).unwrap();
    let reference = 4.0 * 17f64.log2();
    let constant = b as f64 / reference;
    assert!(constant <= 2.0, "B2(4,64) = {b}, ratio {constant}");
}

#[test]
fn diagonal_term_uses_the_shortest_extent_under_any_order() {
    // tau minus its three subcalls is ceil(lg(min + 1)) whatever the order.
    let mut b = RecurrenceBound::new();
    for dims in [[8, 3, 5], [3, 8, 5], [5, 3, 8], [2, 9, 4], [9, 4, 2]] {
        let [n1, n2, n3] = dims;
        let subs = b.budget([n1, n2.div_ceil(2), n3 / 2]).unwrap_or(0)
            + b.budget([n1 / 2, n2, n3.div_ceil(2)]).unwrap_or(0)
            + b.budget([n1.div_ceil(2), n2 / 2, n3]).unwrap_or(0);
        let min = *dims.iter().min().unwrap();
        assert_eq!(b.budget(dims).unwrap() - subs, ceil_lg_succ(min));
    }
}

#[test]
fn permuted_towers_report_their_maxima() {
    // Reported, not asserted equal.
    for dims in [[2, 3, 4], [4, 3, 2], [3, 4, 2]] {
        let r = measure_worst_case(
            Algorithm::Mahl,
            dims,
            threshold_corpus(dims, usize::MAX),
            KeyPolicy::FullUniverse,
        )
        .unwrap();
        eprintln!("{dims:?}: max probes {} budget {}", r.max_probes, r.budget);
        assert!(r.max_probes >= 1);
    }
}

#[test]
fn outcome_bound_covers_measured_worst_case() {
    let mut outcome = PivotOutcomeBound::new();
    for a in 1..=5 {
        for b in 1..=5 {
            for c in 1..=5 {
                let dims = [a, b, c];
                let mut corpus = threshold_corpus(dims, usize::MAX);
                corpus.extend(seeded_corpus(dims, GenKind::PrefixSum, 20, 0, 3).unwrap());
                let r = measure_worst_case(Algorithm::Mahl, dims, corpus, KeyPolicy::FullUniverse).unwrap();
                assert!(r.max_probes <= outcome.budget(dims).unwrap(), "{dims:?}");
            }
        }
    }
}

#[test]
fn cube_four_golden_worst_case() {
    let dims = [4, 4, 4];
    let r = measure_worst_case(
        Algorithm::Mahl,
        dims,
        threshold_corpus(dims, usize::MAX),
        KeyPolicy::FullUniverse,
    )
    .unwrap();
    assert_eq!(r.budget, 42);
    assert_eq!(r.max_probes, GOLDEN_CUBE_FOUR);
}

const GOLDEN_CUBE_FOUR: u64 = 41;

#[test]
fn vector_growth_table() {
    let rows = growth_table(
        Algorithm::Mahl,
        ShapeFamily::Vector,
        &[3, 7, 15],
        &CorpusPlan::default(),
        KeyPolicy::FullUniverse,
    )
    .unwrap();
    let w: Vec<u64> = rows.iter().map(|r| r.max_probes).collect();
    assert_eq!(w, vec![2, 3, 4]);
}

#[test]
fn slab_growth_table_is_reported() {
    let rows: Vec<GrowthRow> = growth_table(
        Algorithm::Mahl,
        ShapeFamily::Slab { depth: 4 },
        &[2, 4, 8],
        &CorpusPlan::default(),
        KeyPolicy::FullUniverse,
    )
    .unwrap();
    assert_eq!(
        rows.iter().map(|r| r.dims).collect::<Vec<_>>(),
        vec![[2, 2, 4], [4, 4, 4], [8, 8, 4]]
    );
    assert!(rows.windows(2).all(|w| w[1].max_probes >= w[0].max_probes));
}

#[test]
fn csv_is_byte_identical_across_runs() {
    let make = || {
        let reports: Vec<_> = [[2, 3, 1], [1, 1, 4], [2, 2, 2]]
            .into_iter()
            .flat_map(|d| {
                [Algorithm::Scan, Algorithm::Mahl, Algorithm::Rows].map(|a| {
                    measure_worst_case(a, d, CorpusPlan::default().build(d).unwrap(), KeyPolicy::FullUniverse).unwrap()
                })
            })
            .collect();
        let mut buf = Vec::new();
        emit_csv(&reports, &mut buf).unwrap();
        buf
    };
    let a = make();
    assert_eq!(a, make());
    assert_eq!(String::from_utf8(a).unwrap().lines().count(), 10);
}

proptest! {
    #[test]
    fn recurrence_is_permutation_stable_on_vectors_and_cells(n in 1usize..200) {
        let v = recurrence_bound(1, 1, n).unwrap();
        prop_assert_eq!(v, recurrence_bound(n, 1, 1).unwrap());
        prop_assert_eq!(v, recurrence_bound(1, n, 1).unwrap());
        prop_assert_eq!(v, ceil_lg_succ(n));
    }

    #[test]
    fn planar_bound_matches_oracle(m in 1usize..20, n in 1usize..40) {
        let mut memo = HashMap::new();
        prop_assert_eq!(recurrence_bound(1, m, n).unwrap(), planar_oracle(m, n, &mut memo));
    }
}
