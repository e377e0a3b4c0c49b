mod common;

use std::collections::BTreeMap;

use boolinv_core::counting::{
    brute_tables, cross_validate, gf_table_f, gf_table_g, gf_table_h, recurrence_f, recurrence_g,
    recurrence_h,
};
use boolinv_core::enumerate::{involutions, Shard};
use boolinv_core::motzkin::{count_restricted, is_restricted, rank_from_path};
use boolinv_core::psi;
use num_bigint::BigInt;

/// `(n, inv, exc) -> count` over Boolean involutions, straight from the oracles.
fn oracle_f(n_max: usize) -> BTreeMap<(usize, usize, usize), u64> {
    let mut out = BTreeMap::new();
    for n in 1..=n_max {
        for w in common::all_involution_words(n) {
            if !common::has_long_crossing(&w) {
                *out.entry((n, common::inversions(&w), common::excedances(&w)))
                    .or_insert(0) += 1;
            }
        }
    }
    out
}

#[test]
fn brute_force_matches_oracle() {
    let t = brute_tables(8, 3).unwrap();
    let oracle = oracle_f(8);
    let got: BTreeMap<(usize, usize, usize), u64> =
        t.f.entries()
            .map(|(k, v)| (*k, u64::try_from(v.clone()).unwrap()))
            .collect();
    assert_eq!(got, oracle);
}

#[test]
fn all_sources_agree() {
    let n = 10;
    let t = brute_tables(n, 4).unwrap();
    assert_eq!(t.f.first_difference(&recurrence_f(n)), None);
    assert_eq!(t.f.first_difference(&gf_table_f(n)), None);
    assert_eq!(t.g.first_difference(&recurrence_g(n).unwrap()), None);
    assert_eq!(t.g.first_difference(&gf_table_g(n)), None);
    assert_eq!(t.h.first_difference(&recurrence_h(n).unwrap()), None);
    assert_eq!(t.h.first_difference(&gf_table_h(n)), None);
    assert_eq!(t.g, t.f.marginal_g());
    assert_eq!(t.h, t.f.marginal_h());
    let report = cross_validate(n, 2).unwrap();
    assert!(report.passed(), "{:?}", report.first_failure());
}

#[test]
fn recurrences_run_past_brute_force() {
    let n = 30;
    let h = recurrence_h(n).unwrap();
    let gf = gf_table_h(n);
    let f = recurrence_f(n);
    for k in 1..=n {
        assert_eq!(h.get(&k), gf.get(&k));
        assert_eq!(h.get(&k), count_restricted(k));
    }
    assert_eq!(f.marginal_h(), h);
    assert_eq!(f.marginal_g(), recurrence_g(n).unwrap());
    assert!(h.get(&30) > BigInt::from(u32::MAX));
}

#[test]
fn parallel_tables_do_not_depend_on_job_count() {
    let one = brute_tables(9, 1).unwrap();
    for jobs in [2, 3, 7] {
        assert_eq!(brute_tables(9, jobs).unwrap(), one);
    }
}

/// Boolean involutions land on restricted paths. The converse fails
/// (4321 and 3412 share the path UUDD), so the test only asks that every
/// restricted path is hit by exactly one Boolean involution.
#[test]
fn boolean_involutions_map_onto_restricted_paths() {
    assert_eq!(psi(&common::inv("4321")), psi(&common::inv("3412")));
    for n in 1..=9 {
        let mut hits: BTreeMap<String, usize> = BTreeMap::new();
        for w in involutions(n).unwrap() {
            let p = psi(&w);
            let boolean = !common::has_long_crossing(w.word());
            if boolean {
                assert!(is_restricted(&p), "{w} -> {p}");
                *hits.entry(p.to_string()).or_insert(0) += 1;
            }
            assert_eq!(p.up_count(), common::excedances(w.word()));
            if boolean {
                assert_eq!(rank_from_path(&p).unwrap(), common::rank(w.word()));
            }
        }
        assert!(hits.values().all(|&c| c == 1));
        assert_eq!(BigInt::from(hits.len()), count_restricted(n));
    }
}

#[test]
fn shards_partition_the_stream() {
    for m in 1..=5 {
        let mut merged: Vec<_> = (0..m)
            .flat_map(|k| Shard::new(k, m).unwrap().apply(involutions(8).unwrap()))
            .collect();
        merged.sort();
        let whole: Vec<_> = involutions(8).unwrap().collect();
        assert_eq!(merged, whole);
    }
}

#[test]
fn excedance_profiles_partition() {
    for n in 1..=9 {
        for w in involutions(n).unwrap() {
            let p = w.excedance_profile();
            let mut all: Vec<usize> = [p.excedances, p.deficiencies, p.fixed].concat();
            all.sort();
            assert_eq!(all, (1..=n).collect::<Vec<_>>());
            let r = common::rank(w.word());
            assert_eq!(w.inversion_count(), 2 * r - w.excedance_count());
        }
    }
}
