//! Exact counts of Boolean involutions of `S_n`.
//!
//! * `f(n, l, a)`: Boolean involutions with `l` inversions and `a` excedances
//!   (Coxeter length and absolute length);
//! * `g(n, k)`: Boolean involutions of rank `k`;
//! * `h(n)`: all Boolean involutions.
//!
//! Each table is available by brute force, by linear recurrence and from
//! the rational generating functions, and [`cross_validate`] compares them.
//! Tables are keyed by the symmetric-group size `n >= 1`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::boolean::{is_boolean_by, Method};
use crate::enumerate::{involutions, Shard};
use crate::error::{Error, Result};
use crate::motzkin::count_restricted;
use crate::series::Series;
use crate::sexpr::rank_profile;

pub const BRUTE_FORCE_MAX_N: usize = 12;
/// Largest size the command-line tool builds by recurrence or series.
pub const TABLE_MAX_N: usize = 40;

/// Key of a count table; `n` is always the first column.
pub trait TableKey: Ord + Copy + std::fmt::Debug {
    const COLUMNS: &'static [&'static str];
    fn columns(&self) -> Vec<usize>;
    fn n(&self) -> usize {
        self.columns()[0]
    }
}

/// `(n, l, a)`
pub type FKey = (usize, usize, usize);
/// `(n, k)`
pub type GKey = (usize, usize);
/// `n`
pub type HKey = usize;

impl TableKey for FKey {
    const COLUMNS: &'static [&'static str] = &["n", "l", "a"];
    fn columns(&self) -> Vec<usize> {
        vec![self.0, self.1, self.2]
    }
}

impl TableKey for GKey {
    const COLUMNS: &'static [&'static str] = &["n", "k"];
    fn columns(&self) -> Vec<usize> {
        vec![self.0, self.1]
    }
}

impl TableKey for HKey {
    const COLUMNS: &'static [&'static str] = &["n"];
    fn columns(&self) -> Vec<usize> {
        vec![*self]
    }
}

/// Exact counts for `1 <= n <= n_max`; absent keys are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable<K: TableKey> {
    pub n_max: usize,
    entries: BTreeMap<K, BigInt>,
}

pub type FTable = CountTable<FKey>;
pub type GTable = CountTable<GKey>;
pub type HTable = CountTable<HKey>;

impl<K: TableKey> CountTable<K> {
    pub fn new(n_max: usize) -> Self {
        CountTable {
            n_max,
            entries: BTreeMap::new(),
        }
    }

    pub fn get(&self, key: &K) -> BigInt {
        self.entries.get(key).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add(&mut self, key: K, value: impl Into<BigInt>) {
        let value = value.into();
        if value.is_zero() {
            return;
        }
        let slot = self.entries.entry(key).or_insert_with(BigInt::zero);
        *slot += value;
        if slot.is_zero() {
            self.entries.remove(&key);
        }
    }

    pub fn set(&mut self, key: K, value: BigInt) {
        if value.is_zero() {
            self.entries.remove(&key);
        } else {
            self.entries.insert(key, value);
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (&K, &BigInt)> {
        self.entries.iter()
    }

    /// Entrywise sum; tables from disjoint shards merge this way.
    pub fn merge(&mut self, other: &CountTable<K>) {
        self.n_max = self.n_max.max(other.n_max);
        for (k, v) in &other.entries {
            self.add(*k, v.clone());
        }
    }

    /// The same table cut down to `n <= n_max`.
    pub fn truncated(&self, n_max: usize) -> Self {
        CountTable {
            n_max,
            entries: self
                .entries
                .iter()
                .filter(|(k, _)| k.n() <= n_max)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }

    /// First key (in key order) on which the two tables differ.
    pub fn first_difference(&self, other: &CountTable<K>) -> Option<(K, BigInt, BigInt)> {
        let mut keys: Vec<&K> = self.entries.keys().chain(other.entries.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter()
            .map(|k| (*k, self.get(k), other.get(k)))
            .find(|(_, a, b)| a != b)
    }

    /// `n\t...\tcount` rows with a header line, nonzero entries only.
    pub fn to_tsv(&self) -> String {
        let mut out = K::COLUMNS.join("\t");
        out.push_str("\tcount\n");
        for (k, v) in &self.entries {
            for c in k.columns() {
                let _ = write!(out, "{c}\t");
            }
            let _ = writeln!(out, "{v}");
        }
        out
    }

    pub fn to_json(&self, stat: &str) -> Value {
        let rows: Vec<Value> = self
            .entries
            .iter()
            .map(|(k, v)| {
                let mut row = serde_json::Map::new();
                for (name, c) in K::COLUMNS.iter().zip(k.columns()) {
                    row.insert((*name).to_string(), json!(c));
                }
                row.insert("count".into(), count_to_json(v));
                Value::Object(row)
            })
            .collect();
        json!({ "stat": stat, "n_max": self.n_max, "rows": rows })
    }
}

/// JSON number when it fits in 64 bits, decimal string otherwise.
pub fn count_to_json(v: &BigInt) -> Value {
    match v.to_u64() {
        Some(u) => json!(u),
        None => json!(v.to_string()),
    }
}

impl FTable {
    /// `g(n, k) = Σ_{l + a = 2k} f(n, l, a)`.
    pub fn marginal_g(&self) -> GTable {
        let mut g = GTable::new(self.n_max);
        for (&(n, l, a), v) in &self.entries {
            debug_assert_eq!((l + a) % 2, 0);
            g.add((n, (l + a) / 2), v.clone());
        }
        g
    }

    pub fn marginal_h(&self) -> HTable {
        let mut h = HTable::new(self.n_max);
        for (&(n, _, _), v) in &self.entries {
            h.add(n, v.clone());
        }
        h
    }
}

/// The three tables gathered in one pass over the involutions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruteTables {
    pub f: FTable,
    pub g: GTable,
    pub h: HTable,
}

impl BruteTables {
    fn new(n_max: usize) -> Self {
        BruteTables {
            f: FTable::new(n_max),
            g: GTable::new(n_max),
            h: HTable::new(n_max),
        }
    }

    fn merge(&mut self, other: &BruteTables) {
        self.f.merge(&other.f);
        self.g.merge(&other.g);
        self.h.merge(&other.h);
    }
}

fn brute_shard(n_max: usize, shard: Shard) -> Result<BruteTables> {
    let mut t = BruteTables::new(n_max);
    for n in 1..=n_max {
        for w in shard.apply(involutions(n)?) {
            if !is_boolean_by(&w, Method::LongCrossing)? {
                continue;
            }
            let p = rank_profile(&w);
            t.f.add((n, p.coxeter_length, p.absolute_length), 1);
            t.g.add((n, p.rank), 1);
            t.h.add(n, 1);
        }
    }
    Ok(t)
}

/// Brute-force `f`, `g` and `h` over every involution with `n <= n_max`,
/// split across `jobs` threads by sharding the involution stream.
pub fn brute_tables(n_max: usize, jobs: usize) -> Result<BruteTables> {
    if n_max > BRUTE_FORCE_MAX_N {
        return Err(Error::Resource(format!(
            "brute-force tables limited to n <= {BRUTE_FORCE_MAX_N}, got {n_max}"
        )));
    }
    let jobs = jobs.max(1);
    if jobs == 1 {
        return brute_shard(n_max, Shard::WHOLE);
    }
    let parts: Vec<Result<BruteTables>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..jobs)
            .map(|index| {
                let shard = Shard { index, count: jobs };
                scope.spawn(move || brute_shard(n_max, shard))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("brute-force worker panicked"))
            .collect()
    });
    let mut total = BruteTables::new(n_max);
    for part in parts {
        total.merge(&part?);
    }
    Ok(total)
}

pub fn brute_table_f(n_max: usize) -> Result<FTable> {
    Ok(brute_tables(n_max, 1)?.f)
}

// The recurrences are stated for a Coxeter system whose first m generators
// generate the parabolic subgroup W_m. For type A, W_m = S_{m+1}; this is the
// only place that translation happens.
fn sym(m: usize) -> usize {
    m + 1
}

fn max_inversions(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// The values of `f(S_n, l, a)` that the recurrence does not produce:
/// nonzero only for `f(n,0,0) = 1` (`n >= 1`), `f(n,1,1) = n - 1`
/// (`n >= 2`), `f(n,2,2) = (n^2 - 5n + 6)/2` (`n >= 4`) and `f(3,3,1) = 1`.
pub fn f_base(n: usize, l: usize, a: usize) -> BigInt {
    match (n, l, a) {
        (0, _, _) => BigInt::zero(),
        (_, 0, 0) => BigInt::from(1),
        (n, 1, 1) if n >= 2 => BigInt::from(n - 1),
        (n, 2, 2) if n >= 4 => BigInt::from((n * n + 6 - 5 * n) / 2),
        (3, 3, 1) => BigInt::from(1),
        _ => BigInt::zero(),
    }
}

/// `f` from the six-term recurrence, valid for `m, l >= 3` and `a >= 1`
/// in parabolic indexing, with every other cell taken from [`f_base`].
pub fn recurrence_f(n_max: usize) -> FTable {
    let mut t = FTable::new(n_max);
    let f = |t: &FTable, m: usize, l: isize, a: isize| -> BigInt {
        if l < 0 || a < 0 {
            return BigInt::zero();
        }
        t.get(&(sym(m), l as usize, a as usize))
    };
    for m in 0..n_max {
        let n = sym(m);
        for l in 0..=max_inversions(n) {
            for a in 0..=n / 2 {
                let value = if m >= 3 && l >= 3 && a >= 1 {
                    let (l, a) = (l as isize, a as isize);
                    f(&t, m - 1, l, a) + f(&t, m - 1, l - 2, a) + f(&t, m - 2, l - 1, a - 1)
                        - f(&t, m - 2, l - 2, a)
                        + f(&t, m - 2, l - 3, a - 1)
                        - f(&t, m - 3, l - 3, a - 1)
                } else {
                    f_base(n, l, a)
                };
                t.set((n, l, a), value);
            }
        }
    }
    t
}

fn max_rank(n: usize) -> usize {
    (max_inversions(n) + n / 2) / 2
}

/// `g` from the four-term recurrence (`m >= 3`, `k >= 2`), with
/// `g(n,0) = 1`, `g(n,1) = n - 1` and the rows `n <= 3` seeded by brute force.
pub fn recurrence_g(n_max: usize) -> Result<GTable> {
    let seed = brute_tables(n_max.min(3), 1)?.g;
    let mut t = GTable::new(n_max);
    let g = |t: &GTable, m: usize, k: isize| -> BigInt {
        if k < 0 {
            return BigInt::zero();
        }
        t.get(&(sym(m), k as usize))
    };
    for m in 0..n_max {
        let n = sym(m);
        for k in 0..=max_rank(n) {
            let value = if m < 3 {
                seed.get(&(n, k))
            } else if k == 0 {
                BigInt::from(1)
            } else if k == 1 {
                BigInt::from(n - 1)
            } else {
                let k = k as isize;
                g(&t, m - 1, k) + g(&t, m - 1, k - 1) + g(&t, m - 2, k - 2) - g(&t, m - 3, k - 2)
            };
            t.set((n, k), value);
        }
    }
    Ok(t)
}

/// `h(W_m) = 2h(W_{m-1}) + h(W_{m-2}) - h(W_{m-3})` for `m >= 3`, rows
/// `n <= 3` seeded by brute force.
pub fn recurrence_h(n_max: usize) -> Result<HTable> {
    let seed = brute_tables(n_max.min(3), 1)?.h;
    let mut t = HTable::new(n_max);
    for m in 0..n_max {
        let n = sym(m);
        let value = if m < 3 {
            seed.get(&n)
        } else {
            BigInt::from(2) * t.get(&sym(m - 1)) + t.get(&sym(m - 2)) - t.get(&sym(m - 3))
        };
        t.set(n, value);
    }
    Ok(t)
}

/// `F(x,y,z) = (x^2yz + x - x^2y^2 - x^3y^3z) /
/// (1 - x - x^2yz - xy^2 + x^2y^2 - x^2y^3z + x^3y^3z)`, truncated.
pub fn gf_coeffs_f(x_max: usize, y_max: usize, z_max: usize) -> Series {
    let orders = [x_max, y_max, z_max];
    let num = Series::from_terms(
        &orders,
        &[
            (1, &[2, 1, 1]),
            (1, &[1, 0, 0]),
            (-1, &[2, 2, 0]),
            (-1, &[3, 3, 1]),
        ],
    );
    let den = Series::from_terms(
        &orders,
        &[
            (1, &[0, 0, 0]),
            (-1, &[1, 0, 0]),
            (-1, &[2, 1, 1]),
            (-1, &[1, 2, 0]),
            (1, &[2, 2, 0]),
            (-1, &[2, 3, 1]),
            (1, &[3, 3, 1]),
        ],
    );
    num.divide(&den).expect("constant term 1")
}

/// `x(1 - x^2t^2) / ((1 - x^2t^2)(1 - x) - xt)`, truncated.
pub fn gf_coeffs_g(x_max: usize, t_max: usize) -> Series {
    let orders = [x_max, t_max];
    let num = Series::from_terms(&orders, &[(1, &[1, 0]), (-1, &[3, 2])]);
    // (1 - x^2t^2)(1 - x) - xt = 1 - x - x^2t^2 + x^3t^2 - xt
    let den = Series::from_terms(
        &orders,
        &[
            (1, &[0, 0]),
            (-1, &[1, 0]),
            (-1, &[2, 2]),
            (1, &[3, 2]),
            (-1, &[1, 1]),
        ],
    );
    num.divide(&den).expect("constant term 1")
}

/// `x(1 - x^2) / (1 - 2x - x^2 + x^3)`, truncated.
pub fn gf_coeffs_h(x_max: usize) -> Series {
    let orders = [x_max];
    let num = Series::from_terms(&orders, &[(1, &[1]), (-1, &[3])]);
    let den = Series::from_terms(&orders, &[(1, &[0]), (-2, &[1]), (-1, &[2]), (1, &[3])]);
    num.divide(&den).expect("constant term 1")
}

pub fn gf_table_f(n_max: usize) -> FTable {
    let s = gf_coeffs_f(n_max, max_inversions(n_max), n_max / 2);
    let mut t = FTable::new(n_max);
    for (e, c) in s.nonzero_terms() {
        if e[0] >= 1 {
            t.set((e[0], e[1], e[2]), c.clone());
        }
    }
    t
}

pub fn gf_table_g(n_max: usize) -> GTable {
    let s = gf_coeffs_g(n_max, max_rank(n_max));
    let mut t = GTable::new(n_max);
    for (e, c) in s.nonzero_terms() {
        if e[0] >= 1 {
            t.set((e[0], e[1]), c.clone());
        }
    }
    t
}

pub fn gf_table_h(n_max: usize) -> HTable {
    let s = gf_coeffs_h(n_max);
    let mut t = HTable::new(n_max);
    for (e, c) in s.nonzero_terms() {
        if e[0] >= 1 {
            t.set(e[0], c.clone());
        }
    }
    t
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    /// First discrepancy, when the check failed.
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ValidationReport {
    pub n_max: usize,
    pub checks: Vec<CheckOutcome>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub(crate) fn push(&mut self, name: impl Into<String>, detail: Option<String>) {
        self.checks.push(CheckOutcome {
            name: name.into(),
            passed: detail.is_none(),
            detail,
        });
    }
}

fn compare<K: TableKey>(a: &CountTable<K>, b: &CountTable<K>) -> Option<String> {
    a.first_difference(b)
        .map(|(k, x, y)| format!("at {k:?}: {x} vs {y}"))
}

/// Brute force, recurrence and generating function must agree on `f`, `g`
/// and `h`; `f` must marginalise to `g` and `h`; restricted Motzkin paths
/// must be counted by `h`.
pub fn cross_validate(n_max: usize, jobs: usize) -> Result<ValidationReport> {
    let mut report = ValidationReport {
        n_max,
        checks: Vec::new(),
    };
    if n_max == 0 {
        return Ok(report);
    }
    let brute = brute_tables(n_max, jobs)?;
    let rec_f = recurrence_f(n_max);
    let rec_g = recurrence_g(n_max)?;
    let rec_h = recurrence_h(n_max)?;
    let gf_f = gf_table_f(n_max);
    let gf_g = gf_table_g(n_max);
    let gf_h = gf_table_h(n_max);

    report.push("f: brute = recurrence", compare(&brute.f, &rec_f));
    report.push("f: brute = generating function", compare(&brute.f, &gf_f));
    report.push("g: brute = recurrence", compare(&brute.g, &rec_g));
    report.push("g: brute = generating function", compare(&brute.g, &gf_g));
    report.push(
        "g: brute = marginal of f",
        compare(&brute.g, &brute.f.marginal_g()),
    );
    report.push("h: brute = recurrence", compare(&brute.h, &rec_h));
    report.push("h: brute = generating function", compare(&brute.h, &gf_h));
    report.push(
        "h: brute = marginal of f",
        compare(&brute.h, &brute.f.marginal_h()),
    );
    let motzkin = (1..=n_max)
        .map(|n| (n, count_restricted(n), brute.h.get(&n)))
        .find(|(_, m, h)| m != h)
        .map(|(n, m, h)| format!("n = {n}: {m} restricted paths vs h = {h}"));
    report.push("h = restricted Motzkin paths", motzkin);
    Ok(report)
}
