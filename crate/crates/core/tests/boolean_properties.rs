mod common;

use std::collections::BTreeMap;

use boolinv_core::enumerate::involutions;
use boolinv_core::pattern::{
    avoids_all, first_contained, is_induced, occurrences, BOOLEAN_PATTERNS,
};
use boolinv_core::{
    boolean_sexpr_builder, connected_components, eval_sexpr, is_boolean, is_boolean_by,
    long_crossing_pairs, restrict, Involution, Method, Pattern,
};
use proptest::prelude::*;

fn forbidden() -> Vec<Pattern> {
    Pattern::boolean_patterns()
}

#[test]
fn four_methods_agree() {
    for n in 1..=9 {
        for w in involutions(n).unwrap() {
            let method = if n <= 7 { Method::All } else { Method::Sexpr };
            let b = is_boolean_by(&w, method).unwrap();
            assert_eq!(b, is_boolean_by(&w, Method::Patterns).unwrap(), "{w}");
            assert_eq!(b, is_boolean_by(&w, Method::LongCrossing).unwrap(), "{w}");
        }
    }
}

#[test]
fn poset_method_matches_first_principles() {
    for n in 1..=6 {
        for w in involutions(n).unwrap() {
            let b = is_boolean_by(&w, Method::Poset).unwrap();
            assert_eq!(b, common::ideal_is_boolean(w.word()), "{w}");
        }
    }
}

#[test]
fn crossing_iff_pattern() {
    for n in 1..=9 {
        for w in involutions(n).unwrap() {
            let crossing = !long_crossing_pairs(&w).is_empty();
            let pattern = !avoids_all(&w, &forbidden());
            assert_eq!(crossing, pattern, "{w}");
            assert_eq!(crossing, common::has_long_crossing(w.word()), "{w}");
        }
    }
}

#[test]
fn pattern_search_matches_naive_filter() {
    for n in 1..=8 {
        for w in involutions(n).unwrap() {
            for p in BOOLEAN_PATTERNS {
                let pat = Pattern::from_word(p).unwrap();
                let got: Vec<Vec<usize>> = occurrences(&w, &pat)
                    .into_iter()
                    .map(|o| o.positions)
                    .collect();
                let mut naive: Vec<Vec<usize>> = common::occurrences(w.word(), p).collect();
                naive.sort();
                assert_eq!(got, naive, "{w} / {p:?}");
            }
        }
    }
}

#[test]
fn containment_implies_an_induced_occurrence() {
    for n in 4..=9 {
        for w in involutions(n).unwrap() {
            if first_contained(&w, &forbidden()).is_none() {
                continue;
            }
            let induced = forbidden().iter().any(|p| {
                occurrences(&w, p)
                    .iter()
                    .any(|o| is_induced(&w, o).unwrap())
            });
            assert!(induced, "{w}");
            let v = is_boolean(&w, Method::LongCrossing).unwrap();
            assert!(v.pattern.unwrap().induced, "{w}");
        }
    }
}

#[test]
fn builder_is_sound() {
    for n in 1..=9 {
        for w in involutions(n).unwrap() {
            if common::has_long_crossing(w.word()) {
                assert!(boolean_sexpr_builder(&w).is_err());
                continue;
            }
            let e = boolean_sexpr_builder(&w).unwrap();
            assert!(!e.has_repeated_letter(), "{w}: {e}");
            assert_eq!(common::eval(&e.letters, n), w.word(), "{w}: {e}");
            assert_eq!(eval_sexpr(&e, n).unwrap(), w);
        }
    }
}

#[test]
fn components_decide_booleanness() {
    for n in 1..=8 {
        for w in involutions(n).unwrap() {
            let parts = connected_components(&w).components;
            // Intervals, covering [n], and no inversion crosses a boundary.
            assert_eq!(parts.first().map(|p| p.0), Some(1));
            assert_eq!(parts.last().map(|p| p.1), Some(n));
            assert!(parts.windows(2).all(|p| p[0].1 + 1 == p[1].0));
            for &(_, b) in &parts[..parts.len() - 1] {
                assert!(w.word()[..b].iter().all(|&v| v <= b), "{w}: split at {b}");
            }
            let each = parts.iter().all(|&(a, b)| {
                let d: Vec<usize> = (a..=b).collect();
                !common::has_long_crossing(restrict(&w, &d).unwrap().word())
            });
            assert_eq!(each, !common::has_long_crossing(w.word()), "{w}");
        }
    }
}

#[test]
fn boolean_involutions_are_determined_by_excedances_and_deficiencies() {
    for n in 1..=9 {
        let mut seen: BTreeMap<(Vec<usize>, Vec<usize>), Involution> = BTreeMap::new();
        for w in involutions(n).unwrap() {
            if common::has_long_crossing(w.word()) {
                continue;
            }
            let p = w.excedance_profile();
            if let Some(other) = seen.insert((p.excedances, p.deficiencies), w.clone()) {
                panic!("{w} and {other} share excedance and deficiency sets");
            }
        }
    }
}

/// `t w t` for the transposition `t = (a, b)`; `(a, a)` is the identity.
fn conj(w: &[usize], a: usize, b: usize) -> Vec<usize> {
    let t = |k: usize| {
        if k == a {
            b
        } else if k == b {
            a
        } else {
            k
        }
    };
    (1..=w.len()).map(|k| t(w[t(k) - 1])).collect()
}

/// The chain `x <= u <= v <= w` that certifies a long-crossing pair `(i, j)`:
/// delete every other 2-cycle, then shrink the two survivors.
fn certificate_chain(w: &[usize], i: usize, j: usize) -> [Vec<usize>; 3] {
    let (wi, wj) = (w[i - 1], w[j - 1]);
    let v: Vec<usize> = (1..=w.len())
        .map(|k| {
            if [i, j, wi, wj].contains(&k) {
                w[k - 1]
            } else {
                k
            }
        })
        .collect();
    let u = conj(&v, j + 1, wj);
    let x = conj(&conj(&u, i, j - 1), j + 2, wi);
    [v, u, x]
}

#[test]
fn long_crossing_pairs_have_certificate_chains() {
    for n in 4..=8 {
        for w in involutions(n).unwrap() {
            for (i, j) in long_crossing_pairs(&w) {
                let [v, u, x] = certificate_chain(w.word(), i, j);
                assert!(common::bruhat_leq(&v, w.word()), "{w}: v");
                assert!(common::bruhat_leq(&u, &v), "{w}: u");
                assert!(common::bruhat_leq(&x, &u), "{w}: x");
                assert_eq!(x, common::eval(&[j - 1, j, j + 1, j], n), "{w} ({i},{j})");
                assert!(common::has_long_crossing(&x));
            }
        }
    }
    let [_, _, x] = certificate_chain(common::inv("5764132").word(), 1, 2);
    assert_eq!(x, [4, 3, 2, 1, 5, 6, 7]);
}

proptest! {
    #[test]
    fn avoidance_is_monotone(n in 1usize..9, k in 0usize..50, keep in 0usize..8) {
        let all: Vec<Involution> = involutions(n).unwrap().collect();
        let w = &all[k % all.len()];
        let full = forbidden();
        let sub: Vec<Pattern> = full
            .iter()
            .enumerate()
            .filter(|(idx, _)| keep >> idx & 1 == 1)
            .map(|(_, p)| p.clone())
            .collect();
        prop_assert!(!avoids_all(w, &full) || avoids_all(w, &sub));
    }
}
