//! Classical and signed pattern containment.
//!
//! Occurrences are found by a depth-first search over increasing position
//! tuples that is pruned as soon as the partial tuple stops being
//! order-isomorphic to the corresponding prefix of the pattern. Patterns here
//! have at most six letters, so the `O(n^m)` worst case is harmless.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::signed::SignedPermutation;

/// The three patterns characterising non-Boolean involutions of `S_n`.
pub const BOOLEAN_PATTERNS: [&[usize]; 3] = [&[4, 3, 2, 1], &[4, 5, 3, 1, 2], &[4, 5, 6, 1, 2, 3]];

/// Signed patterns (window notation, negative = barred) characterising
/// non-Boolean involutions of the hyperoctahedral group `S^B_n`, listed
/// in a fixed order: the three classical patterns first.
pub const TYPE_B_PATTERNS: [&[i64]; 16] = [
    &[4, 3, 2, 1],
    &[4, 5, 3, 1, 2],
    &[4, 5, 6, 1, 2, 3],
    &[-1, -2],
    &[1, -3, -2],
    &[-3, -2, -1],
    &[2, 1, -3],
    &[4, 2, -3, 1],
    &[4, -3, -2, 1],
    &[3, -4, 1, -2],
    &[-4, 5, 3, -1, 2],
    &[4, 5, -3, 1, 2],
    &[-4, 3, 2, -1],
    &[5, -4, 3, -2, 1],
    &[-4, 5, 6, -1, 2, 3],
    &[5, -4, 6, -2, 1, 3],
];

/// A classical pattern `p` of size `m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Pattern(Permutation);

impl Pattern {
    pub fn new(p: Permutation) -> Self {
        Pattern(p)
    }

    pub fn from_word(word: &[usize]) -> Result<Self> {
        Ok(Pattern(Permutation::new(word.to_vec())?))
    }

    pub fn size(&self) -> usize {
        self.0.n()
    }

    pub fn as_permutation(&self) -> &Permutation {
        &self.0
    }

    /// The three patterns of [`BOOLEAN_PATTERNS`] as values.
    pub fn boolean_patterns() -> Vec<Pattern> {
        BOOLEAN_PATTERNS
            .iter()
            .map(|w| Pattern::from_word(w).expect("constant pattern"))
            .collect()
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(Pattern(s.parse()?))
    }
}

/// Positions `i_1 < ... < i_m` (1-based) and the values found there.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Occurrence {
    pub positions: Vec<usize>,
    pub values: Vec<usize>,
}

/// Like [`Occurrence`] but carrying the signed window values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignedOccurrence {
    pub positions: Vec<usize>,
    pub values: Vec<i64>,
}

/// Order-isomorphism search shared by the classical and signed variants.
/// `host` and `pat` are compared by value; `slot_ok` adds a per-slot filter.
fn search<F>(host: &[usize], pat: &[usize], slot_ok: F, first_only: bool) -> Vec<Vec<usize>>
where
    F: Fn(usize, usize) -> bool,
{
    let (n, m) = (host.len(), pat.len());
    let mut found = Vec::new();
    if m > n {
        return found;
    }
    if m == 0 {
        found.push(Vec::new());
        return found;
    }
    let mut chosen: Vec<usize> = Vec::with_capacity(m);
    // Frame-free DFS: `next[t]` is the next host position to try for slot t.
    let mut next = vec![0usize; m + 1];
    let mut t = 0usize;
    next[0] = 0;
    loop {
        if t == m {
            found.push(chosen.iter().map(|&k| k + 1).collect());
            if first_only {
                return found;
            }
            t -= 1;
            chosen.pop();
            continue;
        }
        let start = next[t];
        // Slot t needs m - t - 1 further positions after it.
        let last = n - (m - t);
        let mut advanced = false;
        for k in start..=last {
            if !slot_ok(t, k) {
                continue;
            }
            let fits = chosen
                .iter()
                .enumerate()
                .all(|(s, &ks)| (host[k] < host[ks]) == (pat[t] < pat[s]));
            if fits {
                next[t] = k + 1;
                chosen.push(k);
                t += 1;
                next[t] = k + 1;
                advanced = true;
                break;
            }
        }
        if !advanced {
            if t == 0 {
                return found;
            }
            t -= 1;
            chosen.pop();
        }
    }
}

fn to_occurrence(pi: &Permutation, positions: Vec<usize>) -> Occurrence {
    let values = positions.iter().map(|&i| pi.at(i)).collect();
    Occurrence { positions, values }
}

/// The lexicographically first occurrence of `p` in `pi`, if any.
pub fn contains(pi: &Permutation, p: &Pattern) -> Option<Occurrence> {
    search(pi.word(), p.0.word(), |_, _| true, true)
        .pop()
        .map(|pos| to_occurrence(pi, pos))
}

/// All occurrences of `p` in `pi`, lexicographic by positions.
pub fn occurrences(pi: &Permutation, p: &Pattern) -> Vec<Occurrence> {
    search(pi.word(), p.0.word(), |_, _| true, false)
        .into_iter()
        .map(|pos| to_occurrence(pi, pos))
        .collect()
}

/// The pattern a value sequence is order-isomorphic to.
pub fn standardize(values: &[usize]) -> Permutation {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by_key(|&k| values[k]);
    let mut word = vec![0; values.len()];
    for (rank, k) in order.into_iter().enumerate() {
        word[k] = rank + 1;
    }
    Permutation::from_word_unchecked(word)
}

/// Whether an occurrence is induced: writing `<v>` for the occurrence value
/// sitting where the pattern has value `v`, it requires `<p(j)> = pi(<j>)`
/// for every slot `j`. Equivalently, `pi` maps the occurrence values among
/// themselves exactly as the pattern does.
pub fn is_induced(pi: &Permutation, occ: &Occurrence) -> Result<bool> {
    let m = occ.positions.len();
    if occ.values.len() != m {
        return Err(Error::domain(
            "occurrence positions and values differ in length",
        ));
    }
    if occ.positions.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::domain(
            "occurrence positions are not strictly increasing",
        ));
    }
    for (&i, &v) in occ.positions.iter().zip(&occ.values) {
        if i == 0 || i > pi.n() || pi.at(i) != v {
            return Err(Error::domain(format!("({i}, {v}) is not a point of {pi}")));
        }
    }
    let p = standardize(&occ.values);
    // value_at[v - 1] = <v>
    let mut value_at = vec![0; m];
    for (j, &pv) in p.word().iter().enumerate() {
        value_at[pv - 1] = occ.values[j];
    }
    Ok((0..m).all(|j| {
        let bracket_j = value_at[j];
        occ.values[j] == pi.at(bracket_j)
    }))
}

/// True iff `pi` avoids every pattern in the list.
pub fn avoids_all(pi: &Permutation, patterns: &[Pattern]) -> bool {
    patterns.iter().all(|p| contains(pi, p).is_none())
}

/// The first listed pattern that `pi` contains, with its first occurrence.
pub fn first_contained<'a>(
    pi: &Permutation,
    patterns: &'a [Pattern],
) -> Option<(&'a Pattern, Occurrence)> {
    patterns
        .iter()
        .find_map(|p| contains(pi, p).map(|occ| (p, occ)))
}

/// A signed pattern in window notation; absolute values form a permutation of `[m]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct SignedPattern(SignedPermutation);

impl SignedPattern {
    pub fn new(window: Vec<i64>) -> Result<Self> {
        Ok(SignedPattern(SignedPermutation::new(window)?))
    }

    pub fn window(&self) -> &[i64] {
        self.0.window()
    }

    pub fn size(&self) -> usize {
        self.0.n()
    }

    /// The patterns of [`TYPE_B_PATTERNS`] as values.
    pub fn type_b_patterns() -> Vec<SignedPattern> {
        TYPE_B_PATTERNS
            .iter()
            .map(|w| SignedPattern::new(w.to_vec()).expect("constant pattern"))
            .collect()
    }
}

impl fmt::Display for SignedPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for SignedPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(SignedPattern(s.parse()?))
    }
}

fn signed_search(
    pi: &SignedPermutation,
    p: &SignedPattern,
    first_only: bool,
) -> Vec<SignedOccurrence> {
    let host: Vec<usize> = pi
        .window()
        .iter()
        .map(|v| v.unsigned_abs() as usize)
        .collect();
    let pat: Vec<usize> = p
        .window()
        .iter()
        .map(|v| v.unsigned_abs() as usize)
        .collect();
    let sign_ok = |t: usize, k: usize| (pi.window()[k] < 0) == (p.window()[t] < 0);
    search(&host, &pat, sign_ok, first_only)
        .into_iter()
        .map(|positions| SignedOccurrence {
            values: positions.iter().map(|&i| pi.window()[i - 1]).collect(),
            positions,
        })
        .collect()
}

/// First occurrence of a signed pattern: positions whose absolute values
/// form a classical occurrence of `|p|` and whose signs match slot by slot.
pub fn contains_signed(pi: &SignedPermutation, p: &SignedPattern) -> Option<SignedOccurrence> {
    signed_search(pi, p, true).pop()
}

pub fn occurrences_signed(pi: &SignedPermutation, p: &SignedPattern) -> Vec<SignedOccurrence> {
    signed_search(pi, p, false)
}

pub fn avoids_all_signed(pi: &SignedPermutation, patterns: &[SignedPattern]) -> bool {
    patterns.iter().all(|p| contains_signed(pi, p).is_none())
}

pub fn first_contained_signed<'a>(
    pi: &SignedPermutation,
    patterns: &'a [SignedPattern],
) -> Option<(&'a SignedPattern, SignedOccurrence)> {
    patterns
        .iter()
        .find_map(|p| contains_signed(pi, p).map(|occ| (p, occ)))
}
