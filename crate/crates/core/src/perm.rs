//! Permutations and involutions of `[n]` in one-line notation.
//!
//! Positions and values are 1-based at every public boundary. The text form
//! is a digit string when `n <= 9` (e.g. `5764132`) and comma-separated
//! integers otherwise; both forms are accepted by the parser for `n <= 9`.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A bijection of `[n]`, stored as its one-line word `w(1) w(2) ... w(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PermutationJson", into = "PermutationJson")]
pub struct Permutation {
    word: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct PermutationJson {
    n: usize,
    word: Vec<usize>,
}

impl TryFrom<PermutationJson> for Permutation {
    type Error = Error;

    fn try_from(value: PermutationJson) -> Result<Self> {
        if value.n != value.word.len() {
            return Err(Error::domain(format!(
                "declared n = {} but word has {} entries",
                value.n,
                value.word.len()
            )));
        }
        Permutation::new(value.word)
    }
}

impl From<Permutation> for PermutationJson {
    fn from(p: Permutation) -> Self {
        PermutationJson {
            n: p.word.len(),
            word: p.word,
        }
    }
}

/// Inversion count together with the inversion pairs in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inversions {
    pub count: usize,
    pub pairs: Vec<(usize, usize)>,
}

/// The partition of `[n]` into excedances (`w(i) > i`), deficiencies
/// (`w(i) < i`) and fixed points.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ExcedanceProfile {
    pub excedances: Vec<usize>,
    pub deficiencies: Vec<usize>,
    pub fixed: Vec<usize>,
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n];
        for &v in &word {
            if v == 0 || v > n {
                return Err(Error::parse(
                    v.to_string(),
                    format!("value out of range 1..={n}"),
                ));
            }
            if std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::parse(v.to_string(), "duplicate value"));
            }
        }
        Ok(Permutation { word })
    }

    /// Caller guarantees `word` is a bijection of `[n]`.
    pub(crate) fn from_word_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(word.clone()).is_ok());
        Permutation { word }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n).collect(),
        }
    }

    /// The transposition exchanging `i` and `j` in `S_n`; `i == j` gives the identity.
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        if i == 0 || j == 0 || i > n || j > n {
            return Err(Error::domain(format!(
                "transposition ({i},{j}) outside [1,{n}]"
            )));
        }
        let mut word: Vec<usize> = (1..=n).collect();
        word.swap(i - 1, j - 1);
        Ok(Permutation { word })
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// `w(i)` for a 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    pub fn is_involution(&self) -> bool {
        self.word
            .iter()
            .enumerate()
            .all(|(k, &v)| self.word[v - 1] == k + 1)
    }

    pub fn inversions(&self) -> Inversions {
        let mut pairs = Vec::new();
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                if self.word[i] > self.word[j] {
                    pairs.push((i + 1, j + 1));
                }
            }
        }
        Inversions {
            count: pairs.len(),
            pairs,
        }
    }

    /// Coxeter length, i.e. the number of inversions.
    pub fn inversion_count(&self) -> usize {
        let w = &self.word;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&v| v < w[i]).count())
            .sum()
    }

    pub fn excedance_profile(&self) -> ExcedanceProfile {
        let mut profile = ExcedanceProfile::default();
        for (k, &v) in self.word.iter().enumerate() {
            let i = k + 1;
            match v.cmp(&i) {
                std::cmp::Ordering::Greater => profile.excedances.push(i),
                std::cmp::Ordering::Less => profile.deficiencies.push(i),
                std::cmp::Ordering::Equal => profile.fixed.push(i),
            }
        }
        profile
    }

    pub fn excedance_count(&self) -> usize {
        self.word
            .iter()
            .enumerate()
            .filter(|&(k, &v)| v > k + 1)
            .count()
    }

    /// Product `self * other` as functions: `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        self.check_size(other)?;
        Ok(Permutation {
            word: other.word.iter().map(|&i| self.word[i - 1]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut word = vec![0; self.n()];
        for (k, &v) in self.word.iter().enumerate() {
            word[v - 1] = k + 1;
        }
        Permutation { word }
    }

    /// `t * self * t^-1`; for a transposition `t` this is `t * self * t`.
    pub fn conjugate(&self, t: &Permutation) -> Result<Permutation> {
        t.compose(self)?.compose(&t.inverse())
    }

    /// Right multiplication by the adjacent transposition `s_i = (i, i+1)`:
    /// exchanges the entries in positions `i` and `i + 1`.
    pub fn mul_adjacent_right(&self, i: usize) -> Permutation {
        let mut word = self.word.clone();
        word.swap(i - 1, i);
        Permutation { word }
    }

    /// Left multiplication by `s_i`: exchanges the values `i` and `i + 1`.
    pub fn mul_adjacent_left(&self, i: usize) -> Permutation {
        Permutation {
            word: self
                .word
                .iter()
                .map(|&v| match v {
                    v if v == i => i + 1,
                    v if v == i + 1 => i,
                    v => v,
                })
                .collect(),
        }
    }

    fn check_size(&self, other: &Permutation) -> Result<()> {
        if self.n() != other.n() {
            return Err(Error::domain(format!(
                "size mismatch: {} vs {}",
                self.n(),
                other.n()
            )));
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Permutation::identity(0));
        }
        let mut word = Vec::new();
        if s.contains(',') {
            for token in s.split(',') {
                let token = token.trim();
                if token.is_empty() {
                    return Err(Error::parse(token, "empty token"));
                }
                word.push(
                    token
                        .parse::<usize>()
                        .map_err(|_| Error::parse(token, "not a positive integer"))?,
                );
            }
        } else {
            if s.chars().count() > 9 {
                return Err(Error::parse(
                    s,
                    "digit strings are only accepted for n <= 9; use commas",
                ));
            }
            for c in s.chars() {
                let d = c
                    .to_digit(10)
                    .ok_or_else(|| Error::parse(c.to_string(), "not a digit"))?;
                word.push(d as usize);
            }
        }
        Permutation::new(word)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for v in &self.word {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

/// A permutation equal to its own inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Permutation", into = "Permutation")]
pub struct Involution(Permutation);

/// The 2-cycles `{i, w(i)}` (listed with `i < w(i)`, ordered by `i`) and
/// fixed points of an involution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleDecomposition {
    pub two_cycles: Vec<(usize, usize)>,
    pub fixed_points: Vec<usize>,
}

impl Involution {
    pub fn identity(n: usize) -> Self {
        Involution(Permutation::identity(n))
    }

    pub(crate) fn from_perm_unchecked(p: Permutation) -> Self {
        debug_assert!(p.is_involution());
        Involution(p)
    }

    pub fn as_permutation(&self) -> &Permutation {
        &self.0
    }

    pub fn into_permutation(self) -> Permutation {
        self.0
    }

    pub fn cycle_decomposition(&self) -> CycleDecomposition {
        let mut two_cycles = Vec::new();
        let mut fixed_points = Vec::new();
        for (k, &v) in self.0.word.iter().enumerate() {
            let i = k + 1;
            if v == i {
                fixed_points.push(i);
            } else if v > i {
                two_cycles.push((i, v));
            }
        }
        CycleDecomposition {
            two_cycles,
            fixed_points,
        }
    }

    /// Absolute length: the number of 2-cycles.
    pub fn absolute_length(&self) -> usize {
        self.0.excedance_count()
    }
}

impl TryFrom<Permutation> for Involution {
    type Error = Error;

    fn try_from(p: Permutation) -> Result<Self> {
        if p.is_involution() {
            Ok(Involution(p))
        } else {
            Err(Error::domain(format!("{p} is not an involution")))
        }
    }
}

impl From<Involution> for Permutation {
    fn from(w: Involution) -> Self {
        w.0
    }
}

impl Deref for Involution {
    type Target = Permutation;

    fn deref(&self) -> &Permutation {
        &self.0
    }
}

impl FromStr for Involution {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.parse::<Permutation>()?.try_into()
    }
}

impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
