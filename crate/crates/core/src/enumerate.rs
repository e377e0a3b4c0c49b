//! Deterministic streams of involutions and signed involutions.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::{Involution, Permutation};
use crate::signed::{SignedInvolution, SignedPermutation};

pub const MAX_CLASSICAL_N: usize = 14;
pub const MAX_SIGNED_N: usize = 7;

/// Involutions of `S_n` in lexicographic order of their one-line words.
#[derive(Clone, Debug)]
pub struct Involutions {
    /// 1-based values; 0 marks an unassigned position (index 0 unused).
    word: Vec<usize>,
    /// Choices made at the smallest unassigned position: `(position, value)`.
    frames: Vec<(usize, usize)>,
    done: bool,
}

impl Involutions {
    fn new(n: usize) -> Self {
        let mut it = Involutions {
            word: vec![0; n + 1],
            frames: Vec::with_capacity(n),
            done: false,
        };
        it.fill_fixed();
        it
    }

    fn n(&self) -> usize {
        self.word.len() - 1
    }

    fn fill_fixed(&mut self) {
        for p in 1..=self.n() {
            if self.word[p] == 0 {
                self.word[p] = p;
                self.frames.push((p, p));
            }
        }
    }

    fn advance(&mut self) -> bool {
        while let Some((i, v)) = self.frames.pop() {
            self.word[i] = 0;
            if v != i {
                self.word[v] = 0;
            }
            let next = (v.max(i) + 1..=self.n()).find(|&j| self.word[j] == 0);
            if let Some(j) = next {
                self.word[i] = j;
                self.word[j] = i;
                self.frames.push((i, j));
                self.fill_fixed();
                return true;
            }
        }
        false
    }
}

impl Iterator for Involutions {
    type Item = Involution;

    fn next(&mut self) -> Option<Involution> {
        if self.done {
            return None;
        }
        let current = Involution::from_perm_unchecked(Permutation::from_word_unchecked(
            self.word[1..].to_vec(),
        ));
        self.done = !self.advance();
        Some(current)
    }
}

pub fn involutions(n: usize) -> Result<Involutions> {
    if n > MAX_CLASSICAL_N {
        return Err(Error::Resource(format!(
            "involution enumeration limited to n <= {MAX_CLASSICAL_N}, got {n}"
        )));
    }
    Ok(Involutions::new(n))
}

/// Signed involutions of `S^B_n`, lexicographic by window.
pub fn signed_involutions(n: usize) -> Result<std::vec::IntoIter<SignedInvolution>> {
    if n > MAX_SIGNED_N {
        return Err(Error::Resource(format!(
            "signed involution enumeration limited to n <= {MAX_SIGNED_N}, got {n}"
        )));
    }
    fn rec(window: &mut Vec<i64>, out: &mut Vec<SignedInvolution>) {
        let Some(i) = window.iter().position(|&v| v == 0) else {
            let w = SignedPermutation::new(window.clone()).expect("valid window");
            out.push(SignedInvolution::from_unchecked(w));
            return;
        };
        let me = i as i64 + 1;
        for v in [me, -me] {
            window[i] = v;
            rec(window, out);
        }
        for j in i + 1..window.len() {
            if window[j] != 0 {
                continue;
            }
            let other = j as i64 + 1;
            for sign in [1, -1] {
                window[i] = sign * other;
                window[j] = sign * me;
                rec(window, out);
            }
            window[j] = 0;
        }
        window[i] = 0;
    }
    let mut out = Vec::new();
    rec(&mut vec![0; n], &mut out);
    out.sort();
    Ok(out.into_iter())
}

/// Shard `index` of `count`: the elements whose stream position is
/// congruent to `index` modulo `count`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Shard {
    pub index: usize,
    pub count: usize,
}

impl Shard {
    pub const WHOLE: Shard = Shard { index: 0, count: 1 };

    pub fn new(index: usize, count: usize) -> Result<Self> {
        if count == 0 || index >= count {
            return Err(Error::domain(format!("invalid shard {index}/{count}")));
        }
        Ok(Shard { index, count })
    }

    pub fn apply<I: Iterator>(self, iter: I) -> impl Iterator<Item = I::Item> {
        iter.enumerate()
            .filter(move |(k, _)| k % self.count == self.index)
            .map(|(_, x)| x)
    }
}

/// Parses `k/m`.
impl FromStr for Shard {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (k, m) = s
            .split_once('/')
            .ok_or_else(|| Error::parse(s, "expected k/m"))?;
        let k = k
            .trim()
            .parse()
            .map_err(|_| Error::parse(k, "not an index"))?;
        let m = m
            .trim()
            .parse()
            .map_err(|_| Error::parse(m, "not a shard count"))?;
        Shard::new(k, m)
    }
}

impl fmt::Display for Shard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.index, self.count)
    }
}
