//! The map `ψ` from involutions to Motzkin paths and its inverse on
//! restricted paths.
//!
//! Step `k` of `ψ(w)` is flat, up or down according as `k` is a fixed point,
//! an excedance or a deficiency of `w`. A path is restricted when it never
//! rises above height 2 and all its flat steps start at height at most 1;
//! `ψ` is a bijection from Boolean involutions onto restricted paths.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{Involution, Permutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Step {
    Up,
    Flat,
    Down,
}

impl Step {
    fn symbol(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Flat => 'F',
            Step::Down => 'D',
        }
    }
}

/// A lattice path from `(0,0)` to `(n,0)` that never goes below the axis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MotzkinPath {
    steps: Vec<Step>,
}

/// Summary of the two quantities restriction is about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RestrictedFlag {
    pub max_height: usize,
    /// Highest level a flat step occurs on (0 when there are no flats).
    pub max_flat_level: usize,
}

impl RestrictedFlag {
    pub fn is_restricted(&self) -> bool {
        self.max_height <= 2 && self.max_flat_level <= 1
    }
}

impl MotzkinPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut h: i64 = 0;
        for (k, s) in steps.iter().enumerate() {
            h += match s {
                Step::Up => 1,
                Step::Flat => 0,
                Step::Down => -1,
            };
            if h < 0 {
                return Err(Error::domain(format!("step {} goes below the axis", k + 1)));
            }
        }
        if h != 0 {
            return Err(Error::domain(format!("path ends at height {h}, not 0")));
        }
        Ok(MotzkinPath { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// `h_0 = 0, h_1, ..., h_n`.
    pub fn heights(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut h = 0usize;
        out.push(h);
        for s in &self.steps {
            match s {
                Step::Up => h += 1,
                Step::Down => h -= 1,
                Step::Flat => {}
            }
            out.push(h);
        }
        out
    }

    pub fn up_count(&self) -> usize {
        self.steps.iter().filter(|&&s| s == Step::Up).count()
    }

    pub fn restriction(&self) -> RestrictedFlag {
        let heights = self.heights();
        let max_height = heights.iter().copied().max().unwrap_or(0);
        let max_flat_level = self
            .steps
            .iter()
            .zip(&heights)
            .filter(|(s, _)| **s == Step::Flat)
            .map(|(_, &h)| h)
            .max()
            .unwrap_or(0);
        RestrictedFlag {
            max_height,
            max_flat_level,
        }
    }

    /// The first 1-based step index that breaks restriction, if any.
    pub fn first_violation(&self) -> Option<usize> {
        let heights = self.heights();
        self.steps.iter().enumerate().find_map(|(k, s)| {
            let bad = heights[k + 1] > 2 || (*s == Step::Flat && heights[k] > 1);
            bad.then_some(k + 1)
        })
    }
}

pub fn is_restricted(path: &MotzkinPath) -> bool {
    path.restriction().is_restricted()
}

/// Number of points `(i, 0)` with `1 <= i <= n`.
pub fn alpha(path: &MotzkinPath) -> usize {
    path.heights()[1..].iter().filter(|&&h| h == 0).count()
}

/// `n - α`, the rank of the Boolean involution the path encodes.
pub fn rank_from_path(path: &MotzkinPath) -> Result<usize> {
    if let Some(k) = path.first_violation() {
        return Err(Error::domain(format!(
            "path {path} is not restricted at step {k}"
        )));
    }
    Ok(path.len() - alpha(path))
}

pub fn psi(w: &Involution) -> MotzkinPath {
    let steps = w
        .word()
        .iter()
        .enumerate()
        .map(|(k, &v)| match v.cmp(&(k + 1)) {
            std::cmp::Ordering::Greater => Step::Up,
            std::cmp::Ordering::Less => Step::Down,
            std::cmp::Ordering::Equal => Step::Flat,
        })
        .collect();
    MotzkinPath { steps }
}

/// Pairs the `m`-th up step with the `m`-th down step; flats become fixed points.
pub fn psi_inverse(path: &MotzkinPath) -> Result<Involution> {
    if let Some(k) = path.first_violation() {
        return Err(Error::domain(format!(
            "path {path} is not restricted at step {k}"
        )));
    }
    let n = path.len();
    let ups: Vec<usize> = (1..=n).filter(|&k| path.steps[k - 1] == Step::Up).collect();
    let downs: Vec<usize> = (1..=n)
        .filter(|&k| path.steps[k - 1] == Step::Down)
        .collect();
    let mut word: Vec<usize> = (1..=n).collect();
    for (&u, &d) in ups.iter().zip(&downs) {
        word[u - 1] = d;
        word[d - 1] = u;
    }
    Involution::try_from(Permutation::new(word)?)
}

/// `|M^r_n|` by dynamic programming over heights 0..=2.
pub fn count_restricted(n: usize) -> BigInt {
    let mut ways = [BigInt::from(1), BigInt::from(0), BigInt::from(0)];
    for _ in 0..n {
        let [h0, h1, h2] = &ways;
        ways = [
            h0 + h1,      // flat at 0, down from 1
            h0 + h1 + h2, // up from 0, flat at 1, down from 2
            h1.clone(),   // up from 1
        ];
    }
    ways[0].clone()
}

impl FromStr for MotzkinPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .map(|c| match c.to_ascii_uppercase() {
                'U' => Ok(Step::Up),
                'F' => Ok(Step::Flat),
                'D' => Ok(Step::Down),
                _ => Err(Error::parse(c.to_string(), "expected U, F or D")),
            })
            .collect::<Result<Vec<_>>>()?;
        MotzkinPath::new(steps)
    }
}

impl fmt::Display for MotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.symbol())?;
        }
        Ok(())
    }
}
